"""Compositions, weak compositions and partitions, with the orders and
operations used throughout the package.

All three types are thin tuple subclasses: equality is structural, instances
are immutable and hashable, and the empty composition is a first-class value.
"""

from __future__ import annotations

from math import ceil, gcd
from typing import Iterable


class WeakComposition(tuple):
    """Finite sequence of nonnegative integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> "WeakComposition":
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 0:
                raise ValueError(f"weak composition parts must be >= 0, got {p}")
        return super().__new__(cls, parts)

    @property
    def total(self) -> int:
        """Sum of the parts."""
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def prefix_sums(self) -> tuple[int, ...]:
        out, acc = [], 0
        for p in self:
            acc += p
            out.append(acc)
        return tuple(out)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self)

    @classmethod
    def from_text(cls, text: str) -> "WeakComposition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"{type(self).__name__}({tuple(self)!r})"


class Composition(WeakComposition):
    """Weak composition with strictly positive parts."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        self = super().__new__(cls, parts)
        for p in self:
            if p < 1:
                raise ValueError(f"composition parts must be >= 1, got {p}")
        return self

    def minus_one(self) -> WeakComposition:
        """Entrywise decrement, written s-1 for a signature s."""
        return WeakComposition(p - 1 for p in self)

    def reversed(self) -> "Composition":
        return Composition(reversed(self))


class Partition(tuple):
    """Nonincreasing sequence of nonnegative integers.

    Zero parts are permitted: they arise from signatures containing ones and
    contribute trivial rows to the fitting-count determinant.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be nonincreasing, got {parts}")
        for p in parts:
            if p < 0:
                raise ValueError(f"partition parts must be >= 0, got {p}")
        return super().__new__(cls, parts)

    @property
    def total(self) -> int:
        return sum(self)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self)


EMPTY = Composition()


def plus_one(mu: WeakComposition) -> Composition:
    """Entrywise increment; sends a content vector to its tree signature."""
    return Composition(p + 1 for p in mu)


def concat(mu: WeakComposition, nu: WeakComposition) -> WeakComposition:
    """Concatenation of two (weak) compositions."""
    if isinstance(mu, Composition) and isinstance(nu, Composition):
        return Composition(tuple(mu) + tuple(nu))
    return WeakComposition(tuple(mu) + tuple(nu))


def refines(mu: Composition, nu: Composition) -> bool:
    """True iff nu can be obtained from mu by summing adjacent parts.

    Greedy matching is exact because all parts are positive.
    """
    i = 0
    for target in nu:
        acc = 0
        while acc < target:
            if i >= len(mu):
                return False
            acc += mu[i]
            i += 1
        if acc != target:
            return False
    return i == len(mu)


def refinement_split(mu: WeakComposition, sizes: Iterable[int]) -> list[WeakComposition] | None:
    """Split mu into contiguous chunks with the given sums, or None.

    The split is unique when mu has positive parts.
    """
    chunks: list[WeakComposition] = []
    i = 0
    for target in sizes:
        acc = 0
        start = i
        while acc < target:
            if i >= len(mu):
                return None
            acc += mu[i]
            i += 1
        if acc != target:
            return None
        chunks.append(type(mu)(mu[start:i]))
    if i != len(mu):
        return None
    return chunks


def dominance_leq(mu: WeakComposition, nu: WeakComposition) -> bool:
    """Dominance order: every prefix sum of mu is <= the one of nu.

    Unequal lengths are compared by padding the shorter sequence with
    trailing zeros, which makes the predicate total.
    """
    n = max(len(mu), len(nu))
    a = b = 0
    for i in range(n):
        a += mu[i] if i < len(mu) else 0
        b += nu[i] if i < len(nu) else 0
        if a > b:
            return False
    return True


def dominance_diff(nu: WeakComposition, mu: WeakComposition) -> WeakComposition:
    """Prefix-sum difference of nu over mu, of length len(nu)-1.

    Requires equal sums and mu <=_dom nu.
    """
    if mu.total != nu.total:
        raise ValueError(f"dominance difference needs equal sums, got {mu.total} and {nu.total}")
    if not dominance_leq(mu, nu):
        raise ValueError(f"{tuple(mu)} is not dominance-below {tuple(nu)}")
    a = b = 0
    out = []
    for i in range(len(nu) - 1):
        a += mu[i] if i < len(mu) else 0
        b += nu[i]
        out.append(b - a)
    return WeakComposition(out)


def rational_signature(a: int, b: int) -> Composition:
    """Signature of the pair (a, b): cell counts of the ribbon crossed by the
    diagonal of a b-by-a grid, one entry per row.

    Entry i equals ceil(b/a) plus one when 0 < i*r (mod a) < r, where r is the
    residue of b modulo a.  Requires a, b >= 1 coprime.
    """
    if a < 1 or b < 1:
        raise ValueError(f"need positive a and b, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) are not coprime")
    base = ceil(b / a)
    r = b - (b // a) * a
    return Composition(base + (1 if 0 < (i * r) % a < r else 0) for i in range(1, a + 1))


def lambda_of(s: Composition) -> Partition:
    """Staircase partition left over above the ribbon of s.

    Part j is the sum of s(i)-1 over i = 1..len(s)-j; a single-part signature
    gives the empty partition.
    """
    a = len(s)
    return Partition(sum(p - 1 for p in s[: a - j]) for j in range(1, a))


def parse_signature(text: str) -> Composition:
    """Parse the comma-separated text form; the empty string is the empty
    signature."""
    text = text.strip()
    if not text:
        return EMPTY
    try:
        return Composition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse signature {text!r}: {exc}") from None
