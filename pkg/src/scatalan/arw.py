"""The laser construction for rational paths and a differential comparison
against this package's tree-route noncrossing partition.

For a coprime pair (a, b), the east-step right ends of a path are labeled
1..b-1 and a laser of slope a/b is fired from the lower point of every
maximal north run.  Labels sharing the same set of lasers strictly below them
form the blocks of the laser partition.  All arithmetic is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .noncrossing import SetPartition
from .paths import DyckPath
from .signatures import Composition, rational_signature


@dataclass(frozen=True)
class Laser:
    """Half-ray y = y0 + (a/b)(x - x0) for x >= x0, cut off where it first
    re-enters the path."""

    x0: int
    y0: int
    slope: Fraction
    termination_x: Fraction

    def height(self, x: Fraction | int) -> Fraction:
        return self.y0 + self.slope * (Fraction(x) - self.x0)


def _path_geometry(path: DyckPath) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """Vertical segments (x, y_lo, y_hi) and horizontal segments (y, x_lo,
    x_hi) of the path, including the closing east step."""
    verticals: list[tuple[int, int, int]] = []
    horizontals: list[tuple[int, int, int]] = []
    x = y = 0
    for g in path.mu:
        if verticals and verticals[-1][0] == x and verticals[-1][2] == y:
            verticals[-1] = (x, verticals[-1][1], y + 1)
        else:
            verticals.append((x, y, y + 1))
        y += 1
        if g:
            horizontals.append((y, x, x + g))
            x += g
    horizontals.append((y, x, x + (path.width - x)))
    return verticals, horizontals


def _fire_laser(path: DyckPath, x0: int, y0: int, slope: Fraction) -> Laser:
    verticals, horizontals = _path_geometry(path)
    candidates: list[Fraction] = []
    for x, lo, hi in verticals:
        if x > x0:
            h = y0 + slope * (x - x0)
            if lo <= h <= hi:
                candidates.append(Fraction(x))
    for y, lo, hi in horizontals:
        if y > y0:
            x_star = Fraction(y - y0, 1) / slope + x0
            if x_star > x0 and lo <= x_star <= hi:
                candidates.append(x_star)
    term = min(candidates) if candidates else Fraction(path.width)
    return Laser(x0=x0, y0=y0, slope=slope, termination_x=term)


def lasers_of(path: DyckPath, a: int, b: int) -> list[Laser]:
    slope = Fraction(a, b)
    out = []
    for run in path.north_runs():
        first_row = run[0]
        x0 = path.north_x[first_row - 1]
        y0 = first_row - 1
        out.append(_fire_laser(path, x0, y0, slope))
    return out


def laser_partition(path: DyckPath, a: int, b: int) -> SetPartition:
    """Partition of [b-1] by connected component: label i sits at the right
    end of the i-th east step, and a laser separates labels exactly when it
    passes strictly below one and not the other."""
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) is not a coprime pair of positive integers")
    if tuple(path.s) != tuple(rational_signature(a, b)):
        raise ValueError(f"path signature {tuple(path.s)} is not the ({a}, {b}) signature")
    beams = lasers_of(path, a, b)

    # label i is the right end of the i-th east step: x = i, y = its row
    labels: list[tuple[int, int]] = []
    x = path.north_x
    for i in range(1, b):
        row = sum(1 for xj in x if xj < i)
        labels.append((i, row))

    fingerprints: dict[tuple[bool, ...], list[int]] = {}
    for i, (lx, ly) in enumerate(labels, start=1):
        fp = tuple(
            beam.x0 < lx <= beam.termination_x and beam.height(lx) < ly for beam in beams
        )
        fingerprints.setdefault(fp, []).append(i)
    return SetPartition(fingerprints.values())


def compare_constructions(a: int, b: int, path: DyckPath) -> dict:
    """Laser partition next to the tree-route partition of the same path.

    The tree route needs every signature part to be at least 2, i.e. b > a;
    for thinner signatures only the laser side is reported.
    """
    from .bijections import path_to_tree, tree_to_partition

    arw = laser_partition(path, a, b)
    report: dict = {
        "a": a,
        "b": b,
        "mu": list(path.mu),
        "arw": arw.to_text(),
        "arw_block_sizes": list(arw.block_sizes()),
    }
    s = Composition(path.s)
    if all(p >= 2 for p in s):
        ours = tree_to_partition(path_to_tree(path))
        report["ours"] = ours.to_text()
        report["equal"] = ours == arw
    else:
        report["ours"] = None
        report["equal"] = None
    return report
