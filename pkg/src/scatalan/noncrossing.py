"""Set partitions of [n], the noncrossing predicate, signature-constrained
partition families, and complete matchings.

Blocks are stored sorted, with the blocks themselves listed in minimal order
(increasing minima), so the block-size vector is a direct read-off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .signatures import Composition, refines


@dataclass(frozen=True)
class SetPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        normalized = tuple(sorted((tuple(sorted(set(b))) for b in blocks), key=lambda b: b[0]))
        object.__setattr__(self, "blocks", normalized)
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("blocks must be nonempty")
            for x in b:
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
        n = len(seen)
        if seen and seen != set(range(1, n + 1)):
            raise ValueError(f"blocks must cover 1..{n}, got {sorted(seen)}")

    @property
    def ground_size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_sizes(self) -> Composition:
        """Sizes in minimal order."""
        return Composition(len(b) for b in self.blocks)

    def block_of(self, x: int) -> int:
        for i, b in enumerate(self.blocks):
            if x in b:
                return i
        raise KeyError(x)

    def to_text(self) -> str:
        return "|".join(",".join(str(x) for x in b) for b in self.blocks)

    @classmethod
    def from_text(cls, text: str) -> "SetPartition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(x) for x in part.split(",")) for part in text.split("|"))

    def to_json_obj(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SetPartition":
        return cls(obj["blocks"])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SetPartition({self.to_text()!r})"


def is_noncrossing(pi: SetPartition) -> bool:
    """No x < y < z < w with x, z in one block and y, w in another."""
    for i, a in enumerate(pi.blocks):
        for b in pi.blocks[i + 1 :]:
            if _blocks_cross(a, b):
                return False
    return True


def _blocks_cross(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    # two blocks cross iff the merged tag sequence alternates more than once
    merged = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    switches = 0
    last = None
    for _, tag in merged:
        if tag != last:
            switches += 1
            last = tag
    return switches > 3


def blocks_nested_or_separated(pi: SetPartition) -> bool:
    """Trichotomy used by the inverse constructions: in a noncrossing
    partition every pair of blocks is nested or fully separated."""
    for i, a in enumerate(pi.blocks):
        for b in pi.blocks[i + 1 :]:
            separated = a[-1] < b[0] or b[-1] < a[0]
            nested = _nested(a, b) or _nested(b, a)
            if not (separated or nested):
                return False
    return True


def _nested(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    # inner fits strictly between two consecutive elements of outer
    lo, hi = inner[0], inner[-1]
    for x, y in zip(outer, outer[1:]):
        if x < lo and hi < y:
            return True
    return False


def is_s_partition(pi: SetPartition, s: Composition) -> bool:
    """s refines the block-size vector of pi."""
    return refines(Composition(s), pi.block_sizes())


def is_complete_matching(m: SetPartition, s: Composition) -> bool:
    """Noncrossing partition of [sum(s)] whose minimal-order block sizes are
    exactly s."""
    s = Composition(s)
    return m.ground_size == s.total and tuple(m.block_sizes()) == tuple(s) and is_noncrossing(m)


def iter_set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of [n] via restricted-growth strings."""
    if n == 0:
        yield SetPartition(())
        return

    def rec(i: int, rgs: list[int], width: int) -> Iterator[list[int]]:
        if i == n:
            yield rgs[:]
            return
        for v in range(width + 1):
            rgs.append(v)
            yield from rec(i + 1, rgs, max(width, v + 1))
            rgs.pop()

    for rgs in rec(0, [], 0):
        blocks: dict[int, list[int]] = {}
        for x, tag in enumerate(rgs, start=1):
            blocks.setdefault(tag, []).append(x)
        yield SetPartition(blocks.values())


def brute_force_noncrossing_partitions(n: int) -> Iterator[SetPartition]:
    """Oracle enumerator: filter all partitions by the noncrossing predicate."""
    for pi in iter_set_partitions(n):
        if is_noncrossing(pi):
            yield pi


def enumerate_noncrossing_partitions(s: Composition) -> Iterator[SetPartition]:
    """The noncrossing partitions of [sum(s)] whose size vector is refined by
    s, in the canonical family order (via trees of signature s+1).

    Requires positive parts (the housing signature has parts >= 2).
    """
    from . import bijections
    from .signatures import plus_one
    from .trees import enumerate_trees

    s = Composition(s)
    for tree in enumerate_trees(plus_one(s)):
        yield bijections.tree_to_partition(tree)


def enumerate_matchings(s: Composition) -> Iterator[SetPartition]:
    """Complete noncrossing matchings for s, in the canonical family order."""
    from . import bijections
    from .trees import enumerate_trees

    s = Composition(s)
    for tree in enumerate_trees(s):
        yield bijections.tree_to_matching(tree)
