"""Lattice paths indexed by a signature.

A path for the signature s is stored as s together with the weak composition
mu of east-step counts after each north step (final east step excluded).
Validity is the dominance condition mu <=_dom s-1, i.e. the path stays weakly
above the ribbon shape determined by s.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .signatures import (
    Composition,
    WeakComposition,
    concat,
    dominance_diff,
    dominance_leq,
    parse_signature,
)


@dataclass(frozen=True)
class DyckPath:
    s: Composition
    mu: WeakComposition

    def __init__(self, s, mu):
        object.__setattr__(self, "s", Composition(s))
        object.__setattr__(self, "mu", WeakComposition(mu))
        if len(self.mu) != len(self.s):
            raise ValueError(f"mu has length {len(self.mu)}, signature has length {len(self.s)}")
        if self.mu.total != self.s.total - len(self.s):
            raise ValueError(
                f"mu sums to {self.mu.total}, expected {self.s.total - len(self.s)}"
            )
        if not dominance_leq(self.mu, self.s.minus_one()):
            raise ValueError(f"mu={tuple(self.mu)} rises above the ribbon of s={tuple(self.s)}")

    @property
    def is_identity(self) -> bool:
        return len(self.s) == 0

    @property
    def height(self) -> int:
        return len(self.s)

    @property
    def width(self) -> int:
        """Number of east steps, including the final one."""
        return self.s.total - len(self.s) + 1

    @cached_property
    def north_x(self) -> tuple[int, ...]:
        """x-coordinate of the north step in each row, bottom to top."""
        out, acc = [], 0
        for g in self.mu:
            out.append(acc)
            acc += g
        return tuple(out)

    def peaks(self) -> int:
        """Number of maximal north runs (north steps followed by an east step)."""
        if self.is_identity:
            return 0
        return sum(1 for g in self.mu[:-1] if g > 0) + 1

    def north_runs(self) -> tuple[tuple[int, ...], ...]:
        """Rows grouped into maximal runs of consecutive north steps."""
        runs: list[list[int]] = []
        for i in range(1, len(self.s) + 1):
            if runs and self.mu[i - 2] == 0:
                runs[-1].append(i)
            else:
                runs.append([i])
        return tuple(tuple(r) for r in runs)

    def to_text(self) -> str:
        return path_word(self)

    def to_full_text(self) -> str:
        return f"s={self.s.to_text()}; mu={self.mu.to_text()}"

    @classmethod
    def from_text(cls, text: str, s: Composition | None = None) -> "DyckPath":
        """Parse either an NE word (signature required) or the explicit
        ``s=...; mu=...`` form."""
        text = text.strip()
        if "=" in text:
            fields = {}
            for part in text.split(";"):
                key, _, val = part.strip().partition("=")
                fields[key.strip()] = val.strip()
            sig = parse_signature(fields.get("s", ""))
            mu = WeakComposition.from_text(fields.get("mu", ""))
            return cls(sig, mu)
        if s is None:
            raise ValueError("an NE word needs a signature to become a path")
        return path_from_word(s, text)

    def to_json_obj(self) -> dict:
        return {"s": list(self.s), "mu": list(self.mu)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DyckPath":
        return cls(Composition(obj["s"]), WeakComposition(obj["mu"]))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"DyckPath(s={tuple(self.s)}, mu={tuple(self.mu)})"


IDENTITY_PATH = DyckPath(Composition(), WeakComposition())


def path_word(path: DyckPath) -> str:
    """The NE word: N E^mu(1) ... N E^mu(a) followed by the closing E."""
    parts = []
    for g in path.mu:
        parts.append("N")
        parts.append("E" * g)
    parts.append("E")
    return "".join(parts)


def path_from_word(s: Composition, word: str) -> DyckPath:
    word = word.strip().upper()
    if any(ch not in "NE" for ch in word):
        raise ValueError(f"path words use letters N and E only, got {word!r}")
    if not word.endswith("E"):
        raise ValueError("a path word ends with an east step")
    runs: list[int] = []
    count = None
    for ch in word:
        if ch == "N":
            if count is not None:
                runs.append(count)
            count = 0
        else:
            if count is None:
                if word != "E":
                    raise ValueError("a nonidentity path word starts with a north step")
                return IDENTITY_PATH
            count += 1
    runs.append(count - 1)  # final east step is not part of mu
    if len(runs) != len(s):
        raise ValueError(f"word has {len(runs)} north steps, signature has length {len(s)}")
    return DyckPath(s, WeakComposition(runs))


def area_vector(path: DyckPath) -> WeakComposition:
    """(0) followed by the dominance difference of s-1 over mu: per-row box
    counts between the path and the ribbon."""
    if path.is_identity:
        return WeakComposition()
    return concat(WeakComposition((0,)), dominance_diff(path.s.minus_one(), path.mu))


def area(path: DyckPath) -> int:
    return area_vector(path).total


def iter_gap_vectors(s: Composition) -> Iterator[WeakComposition]:
    """All valid east-step vectors for the signature s, lexicographically."""
    bound = s.minus_one().prefix_sums()
    n = s.total - len(s)
    a = len(s)

    def rec(i: int, acc: int, prefix: list[int]) -> Iterator[WeakComposition]:
        if i == a - 1:
            last = n - acc
            if 0 <= last:
                yield WeakComposition(prefix + [last])
            return
        hi = min(bound[i] - acc, n - acc)
        for g in range(hi + 1):
            prefix.append(g)
            yield from rec(i + 1, acc + g, prefix)
            prefix.pop()

    if a == 0:
        yield WeakComposition()
        return
    yield from rec(0, 0, [])


def enumerate_paths(s: Composition) -> Iterator[DyckPath]:
    for mu in iter_gap_vectors(s):
        yield DyckPath(s, mu)


def _distance_labels(path: DyckPath) -> tuple[list[int], list[str]]:
    """Labels of the lattice points of the path with its first north step
    removed (last point excluded), and the remaining steps.

    A point at height y is labeled by the ribbon boundary column at that
    height minus its x-coordinate; the boundary at the top row includes the
    extra closing column.
    """
    bound = (0,) + path.s.minus_one().prefix_sums()
    steps: list[str] = []
    for g in path.mu:
        steps.append("N")
        steps.extend("E" * g)
    steps.append("E")
    steps = steps[1:]  # drop the first north step
    labels = []
    x, y = 0, 1
    for step in steps:
        labels.append(bound[y] - x)
        if step == "N":
            y += 1
        else:
            x += 1
    return labels, steps


def catalan_decompose_path(path: DyckPath) -> tuple[int, list[DyckPath]]:
    """Remove the first north step, label points by horizontal distance to
    the ribbon, and cut at the first appearances of s(1)-1, ..., 1, 0."""
    if path.is_identity:
        raise ValueError("the identity path has no decomposition")
    k = path.s[0]
    labels, steps = _distance_labels(path)
    cuts = []
    for target in range(k - 1, -1, -1):
        cuts.append(labels.index(target))
    cuts.append(len(steps))
    # rows of the original path covered by each part
    parts: list[DyckPath] = []
    row = 1  # row 1 of the tail = row 2 of the original path
    for start, stop in zip(cuts, cuts[1:]):
        chunk = steps[start:stop]
        nrows = chunk.count("N")
        rows = range(row + 1, row + 1 + nrows)
        sub_s = Composition(path.s[r - 1] for r in rows)
        word = "".join(chunk)
        parts.append(path_from_word(sub_s, word))
        row += nrows
    return k, parts


def compose_paths(k: int, parts: Sequence[DyckPath]) -> DyckPath:
    """Word concatenation with a leading north step; inverse of the
    decomposition."""
    if len(parts) != k:
        raise ValueError(f"need {k} parts, got {len(parts)}")
    s = Composition((k,) + tuple(x for p in parts for x in p.s))
    word = "N" + "".join(path_word(p) for p in parts)
    return path_from_word(s, word)


def operadic_path_compose(path: DyckPath, parts: Sequence[DyckPath]) -> DyckPath:
    """Substitute the given paths at the final east run: the word keeps all of
    the base path except its last mu(a)+1 east steps, which are replaced by
    the parts' full words.  Signatures concatenate."""
    if path.is_identity:
        raise ValueError("the identity path has no final east run to substitute into")
    k = path.mu[-1]
    if len(parts) != k + 1:
        raise ValueError(f"need {k + 1} parts (last east run has {k} steps plus the closing one)")
    s = Composition(tuple(path.s) + tuple(x for p in parts for x in p.s))
    word = path_word(path)[: -(k + 1)] + "".join(path_word(p) for p in parts)
    return path_from_word(s, word)
