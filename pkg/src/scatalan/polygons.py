"""Angulations of a convex polygon and parenthesized star words.

Both families carry a recursive signature read off their Catalan
decomposition.  Every part of a signature realized by these objects is at
least 2: a face of a polygon subdivision has at least three sides, and a
parenthesized group factors into at least two blocks once the redundant
outermost pair is omitted.

Polygon vertices are labeled 1..n clockwise.  Removing the edge between
vertices 1 and 2 exposes the face containing it; the sub-regions across the
remaining face edges, taken counter-clockwise starting from vertex 1, are laid
out as the children of the decomposition.  Each sub-region is relabeled so
that its shared edge becomes the new edge {1, 2} with the clockwise
orientation preserved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .signatures import Composition, concat


@dataclass(frozen=True)
class Angulation:
    polygon_size: int
    diagonals: tuple[tuple[int, int], ...]

    def __init__(self, polygon_size: int, diagonals: Iterable[Iterable[int]] = ()):
        n = int(polygon_size)
        diags = tuple(sorted(tuple(sorted(int(x) for x in d)) for d in diagonals))
        object.__setattr__(self, "polygon_size", n)
        object.__setattr__(self, "diagonals", diags)
        if n < 2:
            raise ValueError("a polygon has at least 2 vertices")
        seen = set()
        for d in diags:
            if len(d) != 2:
                raise ValueError(f"diagonal {d} is not a vertex pair")
            u, v = d
            if not (1 <= u < v <= n):
                raise ValueError(f"diagonal {d} out of range for a {n}-gon")
            if v - u == 1 or (u == 1 and v == n):
                raise ValueError(f"diagonal {d} joins adjacent vertices")
            if d in seen:
                raise ValueError(f"repeated diagonal {d}")
            seen.add(d)
        for i, d in enumerate(diags):
            for e in diags[i + 1 :]:
                if _chords_cross(d, e):
                    raise ValueError(f"diagonals {d} and {e} cross")

    @property
    def is_identity(self) -> bool:
        return self.polygon_size == 2

    @property
    def face_count(self) -> int:
        return 0 if self.is_identity else len(self.diagonals) + 1

    def to_json_obj(self) -> dict:
        return {"n": self.polygon_size, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Angulation":
        return cls(obj["n"], obj.get("diagonals", ()))

    def to_text(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_text(cls, text: str) -> "Angulation":
        return cls.from_json_obj(json.loads(text))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Angulation(n={self.polygon_size}, diagonals={list(self.diagonals)})"


IDENTITY_ANGULATION = Angulation(2)


def _chords_cross(d: tuple[int, int], e: tuple[int, int]) -> bool:
    (a, b), (c, f) = d, e
    return (a < c < b < f) or (c < a < f < b)


def _face_with_base_edge(ang: Angulation) -> list[int]:
    """Vertices of the face containing the edge {1, 2}, ascending.

    A vertex belongs to that face iff no diagonal strictly separates it from
    the base edge.
    """
    n = ang.polygon_size
    face = [1, 2]
    for y in range(3, n + 1):
        separated = False
        for u, v in ang.diagonals:
            # chord {u,v} separates y from edge {1,2} iff y lies strictly
            # inside the arc cut off by the chord on the far side of the edge
            if (u >= 2 and u < y < v) or (u == 1 and y > v):
                separated = True
                break
        if separated:
            continue
        face.append(y)
    return face


def _relabel_region(ang: Angulation, lo: int, hi: int) -> Angulation:
    """Sub-angulation on the clockwise interval lo..hi (possibly wrapping
    through vertex 1), relabeled so the shared edge {lo, hi} becomes {2, 1}."""
    n = ang.polygon_size
    if hi == 1:
        members = list(range(lo, n + 1)) + [1]
    else:
        members = list(range(lo, hi + 1))
    size = len(members)
    # clockwise from the high end: hi -> 1, lo -> 2, lo+1 -> 3, ...
    new_label = {members[-1]: 1}
    for offset, vertex in enumerate(members[:-1]):
        new_label[vertex] = offset + 2
    member_set = set(members)
    diags = []
    for u, v in ang.diagonals:
        if u in member_set and v in member_set and {u, v} != {members[0], members[-1]}:
            diags.append((new_label[u], new_label[v]))
    return Angulation(size, diags)


def decompose_angulation(ang: Angulation) -> tuple[int, list[Angulation]]:
    """Remove the base edge and return the sub-angulations across the exposed
    face's remaining edges, counter-clockwise from vertex 1."""
    if ang.is_identity:
        raise ValueError("the edge polygon has no decomposition")
    face = _face_with_base_edge(ang)
    k = len(face) - 1
    corners = face[1:] + [1]  # 2, w_1, ..., w_{k-1}, 1
    regions = []
    for lo, hi in zip(corners, corners[1:]):
        regions.append(_relabel_region(ang, lo, hi))
    regions.reverse()  # counter-clockwise from vertex 1
    return k, regions


def compose_angulations(k: int, parts: Sequence[Angulation]) -> Angulation:
    """Inverse of the decomposition."""
    parts = list(parts)
    if len(parts) != k:
        raise ValueError(f"need {k} parts, got {len(parts)}")
    if k < 2:
        raise ValueError("a polygon face has at least three sides, so k >= 2")
    sizes = [p.polygon_size for p in parts]
    n = sum(sizes) - 2 * len(sizes) + k + 1
    clockwise = list(reversed(parts))  # regions from vertex 2 onward
    diagonals: list[tuple[int, int]] = []
    corners = [2]
    for part in clockwise:
        corners.append(corners[-1] + part.polygon_size - 1)
    # face corners after 2 are w_1..w_{k-1}, and the last one wraps to 1
    assert corners[-1] == n + 1
    corners[-1] = 1
    for lo, hi, part in zip(corners, corners[1:], clockwise):
        members = (list(range(lo, n + 1)) + [1]) if hi == 1 else list(range(lo, hi + 1))
        old_label = {1: members[-1]}
        for offset, vertex in enumerate(members[:-1]):
            old_label[offset + 2] = vertex
        for u, v in part.diagonals:
            diagonals.append((old_label[u], old_label[v]))
        # the shared edge itself is a diagonal of the composite when its
        # endpoints are not adjacent on the big polygon
        u, v = sorted((members[0], members[-1]))
        if not (v - u == 1 or (u == 1 and v == n)):
            diagonals.append((u, v))
    return Angulation(n, diagonals)


def signature_of_angulation(ang: Angulation) -> Composition:
    if ang.is_identity:
        return Composition()
    k, parts = decompose_angulation(ang)
    sig: Composition = Composition((k,))
    for part in parts:
        sig = Composition(concat(sig, signature_of_angulation(part)))
    return sig


def is_valid_angulation(polygon_size: int, diagonals: Iterable[Iterable[int]]) -> bool:
    """True iff the raw data builds a valid angulation (noncrossing diagonals
    between nonadjacent vertices)."""
    try:
        Angulation(polygon_size, diagonals)
    except ValueError:
        return False
    return True


def enumerate_angulations(s: Composition) -> Iterator[Angulation]:
    """All angulations with signature s, in the canonical family order."""
    from . import bijections
    from .trees import enumerate_trees

    s = Composition(s)
    if any(p < 2 for p in s):
        raise ValueError("angulations require every part of s to be at least 2")
    for tree in enumerate_trees(s):
        yield bijections.tree_to_angulation(tree)


@dataclass(frozen=True)
class Parenthesization:
    word: str

    def __init__(self, word: str):
        object.__setattr__(self, "word", str(word))
        if not is_valid_parenthesization(self.word):
            raise ValueError(f"{self.word!r} is not a proper parenthesization")

    def to_text(self) -> str:
        return self.word

    @classmethod
    def from_text(cls, text: str) -> "Parenthesization":
        return cls(text.strip())

    def to_json_obj(self) -> dict:
        return {"word": self.word}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Parenthesization":
        return cls(obj["word"])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Parenthesization({self.word!r})"


def is_valid_parenthesization(word: str) -> bool:
    """Equal paren counts, prefix counts never negative, no empty pair, at
    least one star, and no characters outside *()."""
    if not word or any(ch not in "*()" for ch in word):
        return False
    depth = 0
    prev = ""
    for ch in word:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0 or prev == "(":
                return False
        prev = ch
    return depth == 0


def block_factorization(word: str) -> list[str]:
    """Split into maximal segments whose proper nonempty prefixes have
    strictly more left than right parentheses: a bare star or a balanced
    parenthesized group."""
    if not is_valid_parenthesization(word):
        raise ValueError(f"{word!r} is not a proper parenthesization")
    blocks = []
    i = 0
    while i < len(word):
        if word[i] == "*":
            blocks.append("*")
            i += 1
            continue
        depth = 0
        j = i
        while True:
            if word[j] == "(":
                depth += 1
            elif word[j] == ")":
                depth -= 1
            j += 1
            if depth == 0:
                break
        blocks.append(word[i:j])
        i = j
    return blocks


def signature_of_parenthesization(word: str) -> Composition:
    """Recursive signature: a bare star is empty, otherwise the block count
    followed by the signatures of the opened blocks."""
    if word == "*":
        return Composition()
    blocks = block_factorization(word)
    sig = Composition((len(blocks),))
    for b in blocks:
        inner = Composition() if b == "*" else signature_of_parenthesization(b[1:-1])
        sig = Composition(concat(sig, inner))
    return sig


def enumerate_parenthesizations(s: Composition) -> Iterator[Parenthesization]:
    from . import bijections
    from .trees import enumerate_trees

    s = Composition(s)
    if any(p < 2 for p in s):
        raise ValueError("parenthesizations require every part of s to be at least 2")
    for tree in enumerate_trees(s):
        yield bijections.tree_to_parenthesization(tree)
