"""Multiset permutations, pattern containment, and the Stirling families.

A multipermutation is stored as its word; the content vector (how many copies
of each letter) is derived.  Letters are 1-based and consecutive: a word on
content c uses exactly the letters 1..len(c).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .signatures import Composition, WeakComposition, plus_one
from .trees import PlanarTree, caverns


@dataclass(frozen=True)
class Multipermutation:
    word: tuple[int, ...]

    def __init__(self, word: Sequence[int]):
        object.__setattr__(self, "word", tuple(int(x) for x in word))
        if self.word:
            letters = set(self.word)
            top = max(letters)
            if min(letters) < 1 or letters != set(range(1, top + 1)):
                raise ValueError(f"letters must be exactly 1..max, got {sorted(letters)}")

    @cached_property
    def content(self) -> Composition:
        """Multiplicity of each letter."""
        if not self.word:
            return Composition()
        counts = [0] * max(self.word)
        for x in self.word:
            counts[x - 1] += 1
        return Composition(counts)

    def __len__(self) -> int:
        return len(self.word)

    def to_text(self) -> str:
        if self.word and max(self.word) > 9:
            return ",".join(str(x) for x in self.word)
        return "".join(str(x) for x in self.word)

    @classmethod
    def from_text(cls, text: str) -> "Multipermutation":
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(int(tok) for tok in text.split(","))
        return cls(int(ch) for ch in text)

    def to_json_obj(self) -> dict:
        return {"word": list(self.word), "content": list(self.content)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Multipermutation":
        return cls(obj["word"])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Multipermutation({self.to_text()!r})"


@dataclass(frozen=True)
class IncreasingTree:
    """Planar tree whose internal nodes carry distinct labels 1..a, strictly
    increasing along internal paths away from the root.

    ``labels[k]`` is the label of the (k+1)-th internal node in preorder.
    """

    tree: PlanarTree
    labels: tuple[int, ...]

    def __init__(self, tree: PlanarTree, labels: Sequence[int]):
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "labels", tuple(int(x) for x in labels))
        internals = tree.internal_nodes
        a = len(internals)
        if sorted(self.labels) != list(range(1, a + 1)):
            raise ValueError(f"labels must be a bijection onto 1..{a}")
        label_of = {node: lab for node, lab in zip(internals, self.labels)}
        for node in internals:
            parent = tree.parent[node]  # parents of internal nodes are internal
            if parent is not None and label_of[parent] >= label_of[node]:
                raise ValueError("labels must increase away from the root")

    @property
    def content_signature(self) -> Composition:
        """s with s(i) = degree of the node labeled i."""
        internals = self.tree.internal_nodes
        degs = [0] * len(internals)
        for node, lab in zip(internals, self.labels):
            degs[lab - 1] = self.tree.degrees[node]
        return Composition(degs)


def contains_pattern(sigma: Multipermutation, tau: Sequence[int]) -> bool:
    """True iff some subsequence of sigma matches tau with the same relative
    order: equal pattern letters match equal values, strict inequalities
    stay strict."""
    word = sigma.word
    tau = tuple(tau)
    k = len(tau)
    if k == 0:
        return True

    def ok(assigned: list[int], t: int, value: int) -> bool:
        for prev_t, prev_v in enumerate(assigned[:t]):
            if tau[prev_t] == tau[t] and prev_v != value:
                return False
            if tau[prev_t] < tau[t] and prev_v >= value:
                return False
            if tau[prev_t] > tau[t] and prev_v <= value:
                return False
        return True

    def search(start: int, t: int, assigned: list[int]) -> bool:
        if t == k:
            return True
        for i in range(start, len(word) - (k - t) + 1):
            if ok(assigned, t, word[i]):
                assigned.append(word[i])
                if search(i + 1, t + 1, assigned):
                    return True
                assigned.pop()
        return False

    return search(0, 0, [])


def is_stirling(sigma: Multipermutation) -> bool:
    """Avoids the pattern 212."""
    return not contains_pattern(sigma, (2, 1, 2))


def is_312_avoiding_stirling(sigma: Multipermutation) -> bool:
    """Avoids both 212 and 312."""
    return is_stirling(sigma) and not contains_pattern(sigma, (3, 1, 2))


def ascents(sigma: Multipermutation) -> int:
    return sum(1 for a, b in zip(sigma.word, sigma.word[1:]) if a < b)


def enumerate_stirling(content: Composition) -> Iterator[Multipermutation]:
    """All Stirling permutations with the given content, by block insertion:
    the copies of the largest letter form a consecutive run that can sit in
    any gap of a smaller Stirling permutation."""
    content = Composition(content)

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        block = (k,) * content[k - 1]
        for w in rec(k - 1):
            for pos in range(len(w) + 1):
                yield w[:pos] + block + w[pos:]

    for w in rec(len(content)):
        yield Multipermutation(w)


def s_factorial(content: Composition) -> int:
    """Product 1 * (c(1)+1) * (c(1)+c(2)+1) * ...; counts Stirling
    permutations of the given content."""
    total = 0
    out = 1
    for c in content[:-1] if content else ():
        total += c
        out *= total + 1
    return out


def enumerate_312_avoiding(content: Composition) -> Iterator[Multipermutation]:
    """312-avoiding Stirling permutations with the given content, in the
    canonical family order (images of the trees with signature content+1)."""
    from . import bijections
    from .trees import enumerate_trees

    for tree in enumerate_trees(plus_one(WeakComposition(content))):
        yield bijections.tree_to_stirling(tree)


def cavern_word(tree: PlanarTree, labels: Sequence[int] | None = None) -> Multipermutation:
    """Read each cavern as its owner's label, caverns in preorder order.

    With labels omitted, internal nodes are labeled by preorder position,
    which restricts the map to plain trees.
    """
    cavs = caverns(tree)
    if labels is None:
        return Multipermutation(tuple(c.owner for c in cavs))
    labels = tuple(labels)
    return Multipermutation(tuple(labels[c.owner - 1] for c in cavs))


def increasing_tree_to_stirling(it: IncreasingTree) -> Multipermutation:
    return cavern_word(it.tree, it.labels)


def stirling_to_increasing_tree(sigma: Multipermutation) -> IncreasingTree:
    """Invert the cavern reading: split the word at the copies of its
    smallest letter, recurse on the segments."""
    if not is_stirling(sigma):
        raise ValueError(f"{sigma.to_text()} contains the pattern 212")
    content = sigma.content

    degrees: list[int] = []
    labels: list[int] = []

    def build(segment: tuple[int, ...]) -> None:
        if not segment:
            degrees.append(0)
            return
        m = min(segment)
        if segment.count(m) != content[m - 1]:
            raise ValueError(f"copies of letter {m} are split across segments")
        pieces: list[tuple[int, ...]] = []
        current: list[int] = []
        for x in segment:
            if x == m:
                pieces.append(tuple(current))
                current = []
            else:
                current.append(x)
        pieces.append(tuple(current))
        degrees.append(len(pieces))
        labels.append(m)
        for piece in pieces:
            build(piece)

    build(sigma.word)
    return IncreasingTree(PlanarTree(degrees), labels)


def enumerate_increasing_trees(s: Composition) -> Iterator[IncreasingTree]:
    """All increasing trees in which the node labeled i has s(i) children."""
    s = Composition(s)
    for sigma in enumerate_stirling(Composition(s.minus_one())):
        yield stirling_to_increasing_tree(sigma)
