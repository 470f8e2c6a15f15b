"""Cross-family invariant suite: per-signature counts, round trips, and
Narayana distribution equality, runnable up to a size bound."""

from __future__ import annotations

from math import gcd
from typing import Iterator

from . import bijections
from .counting import NARAYANA_STATISTICS, count_determinant, count_recurrence, narayana_distribution
from .paths import enumerate_paths
from .signatures import Composition, rational_signature
from .trees import enumerate_trees, signature


def iter_compositions(n: int) -> Iterator[Composition]:
    """All compositions of n, lexicographically by part tuple."""
    if n == 0:
        yield Composition()
        return
    for cuts in range(2 ** (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if cuts >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(parts)


def iter_signatures(max_weight: int, rational_only: bool = False) -> Iterator[Composition]:
    if rational_only:
        for total in range(2, max_weight + 2):
            for a in range(1, total):
                b = total - a
                if gcd(a, b) == 1:
                    yield rational_signature(a, b)
        return
    for n in range(max_weight + 1):
        yield from iter_compositions(n)


def check_signature(s: Composition, cap: int | None = None) -> dict:
    """Counts per family, round trips, and statistic agreement for one
    signature.  Returns a row dict with an ok flag."""
    from .polygons import signature_of_angulation, signature_of_parenthesization

    fat = all(p >= 2 for p in s)
    failures: list[str] = []
    expected = count_recurrence(s)
    if count_determinant(s) != expected:
        failures.append("determinant-count")

    trees = list(enumerate_trees(s))
    if cap is not None and expected > cap:
        raise RuntimeError(f"count {expected} for s={s.to_text()} exceeds cap {cap}")
    counts = {"trees": len(trees), "paths": sum(1 for _ in enumerate_paths(s))}
    if len(trees) != expected:
        failures.append("tree-count")
    if counts["paths"] != expected:
        failures.append("path-count")

    matchings = set()
    for t in trees:
        path = bijections.tree_to_path(t)
        if bijections.path_to_tree(path) != t:
            failures.append("path-roundtrip")
        m = bijections.tree_to_matching(t)
        matchings.add(m)
        if bijections.matching_to_tree(m) != t:
            failures.append("matching-roundtrip")
        if bijections.path_to_matching_direct(path) != m:
            failures.append("matching-commutation")
    counts["matchings"] = len(matchings)
    if len(matchings) != expected:
        failures.append("matching-count")

    if fat:
        words = set()
        partitions = set()
        angulations = set()
        parens = set()
        for t in trees:
            path = bijections.tree_to_path(t)
            sigma = bijections.tree_to_stirling(t)
            words.add(sigma)
            if bijections.stirling_to_tree(sigma) != t:
                failures.append("stirling-roundtrip")
            if bijections.path_to_stirling_direct(path) != sigma:
                failures.append("stirling-commutation")
            pi = bijections.tree_to_partition(t)
            partitions.add(pi)
            if bijections.partition_to_tree(pi, s) != t:
                failures.append("partition-roundtrip")
            if bijections.path_to_partition_direct(path) != pi:
                failures.append("partition-commutation")
            ang = bijections.tree_to_angulation(t)
            angulations.add(ang)
            if bijections.angulation_to_tree(ang) != t:
                failures.append("angulation-roundtrip")
            if signature_of_angulation(ang) != s:
                failures.append("angulation-signature")
            w = bijections.tree_to_parenthesization(t)
            parens.add(w)
            if bijections.parenthesization_to_tree(w) != t:
                failures.append("parens-roundtrip")
            if s and signature_of_parenthesization(w.word) != s:
                failures.append("parens-signature")
        counts.update(
            stirling312=len(words),
            ncpartitions=len(partitions),
            angulations=len(angulations),
            parenthesizations=len(parens),
        )
        for key in ("stirling312", "ncpartitions", "angulations", "parenthesizations"):
            if counts[key] != expected:
                failures.append(f"{key}-count")

    # the matching statistic transports to peaks only when every block can
    # hold its minimum's successor, i.e. for parts >= 2
    stats = NARAYANA_STATISTICS if fat else ("peaks", "leftmost-leaves")
    reference = None
    for stat in stats:
        hist = narayana_distribution(s, stat)
        if sum(hist.values()) != expected:
            failures.append(f"narayana-{stat}-total")
        if reference is None:
            reference = hist
        elif hist != reference:
            failures.append(f"narayana-{stat}-mismatch")

    return {
        "signature": s.to_text(),
        "count": expected,
        "counts": counts,
        "failures": sorted(set(failures)),
        "ok": not failures,
    }


def run_verification(max_weight: int, rational_only: bool = False, cap: int | None = None) -> dict:
    rows = [check_signature(s, cap=cap) for s in iter_signatures(max_weight, rational_only)]
    return {
        "max_weight": max_weight,
        "rational_only": rational_only,
        "rows": rows,
        "ok": all(r["ok"] for r in rows),
    }
