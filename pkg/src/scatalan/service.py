"""Command implementations shared by the HTTP API and exercised by the CLI.

Every function takes plain values and returns a JSON-ready dict, raising
ServiceError with a machine-readable code on bad input.  Listings are
materialized under an enumeration cap; hitting the cap is a resource refusal,
not a statement about the family.
"""

from __future__ import annotations

import os
from math import gcd
from typing import Callable, Iterable, Iterator

from . import bijections
from .arw import compare_constructions
from .counting import (
    NARAYANA_STATISTICS,
    count_determinant,
    count_recurrence,
    narayana_distribution,
)
from .noncrossing import SetPartition, enumerate_matchings, enumerate_noncrossing_partitions
from .parking import (
    DecoratedPath,
    DecoratedTree,
    ParkingFunction,
    decorated_path_to_decorated_tree,
    decorated_path_to_parking,
    decorated_tree_to_decorated_path,
    enumerate_decorated_paths,
    enumerate_decorated_trees,
    enumerate_parking,
    parking_to_decorated_path,
)
from .paths import DyckPath, enumerate_paths
from .polygons import Angulation, Parenthesization, enumerate_angulations, enumerate_parenthesizations
from .signatures import Composition, WeakComposition, parse_signature, rational_signature
from .stirling import Multipermutation, enumerate_312_avoiding
from .trees import PlanarTree, enumerate_trees
from .verify import run_verification

DEFAULT_CAP = 10**6


class ServiceError(Exception):
    """Error with a wire code: parse_error, invalid_object, proviso,
    family_mismatch, or cap_exceeded."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def default_cap() -> int:
    raw = os.environ.get("SCAT_CAP", "")
    if raw.strip():
        try:
            value = int(raw)
        except ValueError:
            raise ServiceError("parse_error", f"SCAT_CAP must be an integer, got {raw!r}")
        if value <= 0:
            raise ServiceError("parse_error", "SCAT_CAP must be positive")
        return value
    return DEFAULT_CAP


def _take(items: Iterator, cap: int | None) -> list:
    cap = cap if cap is not None else default_cap()
    out = []
    for obj in items:
        out.append(obj)
        if len(out) > cap:
            raise ServiceError("cap_exceeded", f"enumeration exceeded the cap of {cap} objects")
    return out


def _signature(text: str) -> Composition:
    try:
        return parse_signature(text)
    except ValueError as exc:
        raise ServiceError("parse_error", str(exc))


def _weak(text: str) -> WeakComposition:
    try:
        return WeakComposition.from_text(text)
    except ValueError as exc:
        raise ServiceError("parse_error", f"cannot parse {text!r}: {exc}")


def _fat(s: Composition, family: str) -> None:
    if any(p < 2 for p in s):
        raise ServiceError("proviso", f"family {family!r} needs every part of s to be at least 2")


class Family:
    def __init__(
        self,
        name: str,
        enumerate_fn: Callable[[Composition], Iterator],
        to_text: Callable,
        from_text: Callable,
        to_tree: Callable,
        from_tree: Callable,
        to_json: Callable,
        proviso: Callable[[Composition], None] | None = None,
    ):
        self.name = name
        self.enumerate = enumerate_fn
        self.to_text = to_text
        self.from_text = from_text
        self.to_tree = to_tree
        self.from_tree = from_tree
        self.to_json = to_json
        self.proviso = proviso or (lambda s: None)


CORE_FAMILIES: dict[str, Family] = {}
DECORATED_FAMILIES: dict[str, Family] = {}


def _register_core(family: Family) -> None:
    CORE_FAMILIES[family.name] = family


_register_core(
    Family(
        "tree",
        enumerate_trees,
        lambda t, s: t.to_text(),
        lambda text, s: PlanarTree.from_text(text),
        lambda t, s: t,
        lambda t: t,
        lambda t, s: t.to_json_obj(),
    )
)
_register_core(
    Family(
        "path",
        enumerate_paths,
        lambda d, s: d.to_text(),
        lambda text, s: DyckPath.from_text(text, s),
        lambda d, s: bijections.path_to_tree(d),
        bijections.tree_to_path,
        lambda d, s: d.to_json_obj(),
    )
)
_register_core(
    Family(
        "stirling312",
        lambda s: enumerate_312_avoiding(Composition(s.minus_one())),
        lambda m, s: m.to_text(),
        lambda text, s: Multipermutation.from_text(text),
        lambda m, s: bijections.stirling_to_tree(m),
        bijections.tree_to_stirling,
        lambda m, s: m.to_json_obj(),
        proviso=lambda s: _fat(s, "stirling312"),
    )
)
_register_core(
    Family(
        "ncpartition",
        lambda s: enumerate_noncrossing_partitions(Composition(s.minus_one())),
        lambda p, s: p.to_text(),
        lambda text, s: SetPartition.from_text(text),
        lambda p, s: bijections.partition_to_tree(p, s),
        bijections.tree_to_partition,
        lambda p, s: p.to_json_obj(),
        proviso=lambda s: _fat(s, "ncpartition"),
    )
)
_register_core(
    Family(
        "matching",
        enumerate_matchings,
        lambda m, s: m.to_text(),
        lambda text, s: SetPartition.from_text(text),
        lambda m, s: bijections.matching_to_tree(m),
        bijections.tree_to_matching,
        lambda m, s: m.to_json_obj(),
    )
)
_register_core(
    Family(
        "angulation",
        enumerate_angulations,
        lambda a, s: a.to_text(),
        lambda text, s: Angulation.from_text(text),
        lambda a, s: bijections.angulation_to_tree(a),
        bijections.tree_to_angulation,
        lambda a, s: a.to_json_obj(),
        proviso=lambda s: _fat(s, "angulation"),
    )
)
_register_core(
    Family(
        "parens",
        enumerate_parenthesizations,
        lambda w, s: w.to_text(),
        lambda text, s: Parenthesization.from_text(text),
        lambda w, s: bijections.parenthesization_to_tree(w),
        bijections.tree_to_parenthesization,
        lambda w, s: w.to_json_obj(),
        proviso=lambda s: _fat(s, "parens"),
    )
)


def _register_decorated(family: Family) -> None:
    DECORATED_FAMILIES[family.name] = family


_register_decorated(
    Family(
        "decorated-path",
        enumerate_decorated_paths,
        lambda d, s: d.to_text(),
        lambda text, s: DecoratedPath.from_text(text, s),
        lambda d, s: d,
        lambda d: d,
        lambda d, s: d.to_json_obj(),
    )
)
_register_decorated(
    Family(
        "decorated-tree",
        enumerate_decorated_trees,
        lambda d, s: d.to_text(),
        lambda text, s: DecoratedTree.from_text(text),
        lambda d, s: decorated_tree_to_decorated_path(d),
        decorated_path_to_decorated_tree,
        lambda d, s: d.to_json_obj(),
    )
)
_register_decorated(
    Family(
        "parking",
        lambda s: (decorated_path_to_parking(dp) for dp in enumerate_decorated_paths(s)),
        lambda p, s: p.to_text(),
        lambda text, s: ParkingFunction.from_text(text, s.minus_one()),
        lambda p, s: parking_to_decorated_path(p, s),
        decorated_path_to_parking,
        lambda p, s: p.to_json_obj(),
    )
)

FAMILIES = {**CORE_FAMILIES, **DECORATED_FAMILIES}


def cmd_count(signature: str, all_methods: bool = False, cap: int | None = None) -> dict:
    s = _signature(signature)
    recurrence = count_recurrence(s)
    out = {"signature": s.to_text(), "count": recurrence}
    if all_methods:
        determinant = count_determinant(s)
        effective = cap if cap is not None else default_cap()
        if recurrence > effective:
            raise ServiceError(
                "cap_exceeded", f"exhaustive recount of {recurrence} objects exceeds the cap"
            )
        exhaustive = sum(1 for _ in enumerate_trees(s))
        out["methods"] = {
            "recurrence": recurrence,
            "determinant": determinant,
            "exhaustive": exhaustive,
        }
        out["agree"] = recurrence == determinant == exhaustive
    return out


def cmd_list(family: str, signature: str, cap: int | None = None, fmt: str = "text") -> dict:
    fam = FAMILIES.get(family)
    if fam is None:
        raise ServiceError("parse_error", f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    s = _signature(signature)
    try:
        fam.proviso(s)
        items = _take(fam.enumerate(s), cap)
    except ServiceError:
        raise
    except ValueError as exc:
        raise ServiceError("proviso", str(exc))
    if fmt == "json":
        rendered = [fam.to_json(obj, s) for obj in items]
    else:
        rendered = [fam.to_text(obj, s) for obj in items]
    return {"family": family, "signature": s.to_text(), "count": len(items), "items": rendered}


def cmd_convert(from_family: str, to_family: str, object_text: str, signature: str) -> dict:
    for name in (from_family, to_family):
        if name not in FAMILIES:
            raise ServiceError("parse_error", f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    core = (from_family in CORE_FAMILIES, to_family in CORE_FAMILIES)
    if core[0] != core[1]:
        raise ServiceError(
            "family_mismatch",
            "core families convert among themselves, decorated families among themselves",
        )
    registry = CORE_FAMILIES if core[0] else DECORATED_FAMILIES
    src, dst = registry[from_family], registry[to_family]
    s = _signature(signature)
    try:
        src.proviso(s)
        dst.proviso(s)
        obj = src.from_text(object_text, s)
        hub = src.to_tree(obj, s)
        result = dst.from_tree(hub)
    except ServiceError:
        raise
    except ValueError as exc:
        raise ServiceError("invalid_object", str(exc))
    return {
        "from": from_family,
        "to": to_family,
        "signature": s.to_text(),
        "object": dst.to_text(result, s),
    }


def cmd_rational(a: int, b: int) -> dict:
    try:
        s = rational_signature(a, b)
    except ValueError as exc:
        raise ServiceError("parse_error", str(exc))
    return {"a": a, "b": b, "signature": s.to_text()}


def cmd_narayana(signature: str, statistic: str = "all") -> dict:
    s = _signature(signature)
    if statistic == "all":
        fat = all(p >= 2 for p in s)
        stats: Iterable[str] = NARAYANA_STATISTICS if fat else ("peaks", "leftmost-leaves")
    elif statistic in NARAYANA_STATISTICS:
        stats = (statistic,)
    else:
        raise ServiceError(
            "parse_error", f"unknown statistic {statistic!r}; choose from {NARAYANA_STATISTICS}"
        )
    distributions = {}
    for stat in stats:
        try:
            distributions[stat] = narayana_distribution(s, stat)
        except ValueError as exc:
            raise ServiceError("proviso", str(exc))
    totals = {sum(d.values()) for d in distributions.values()}
    agree = len({tuple(sorted(d.items())) for d in distributions.values()}) == 1
    return {
        "signature": s.to_text(),
        "distributions": {k: {str(i): v for i, v in d.items()} for k, d in distributions.items()},
        "total": totals.pop() if len(totals) == 1 else None,
        "agree": agree,
    }


def cmd_parking_count(mu: str) -> dict:
    vector = _weak(mu)
    return {"mu": vector.to_text(), "count": sum(1 for _ in enumerate_parking(vector))}


def cmd_parking_list(mu: str, cap: int | None = None) -> dict:
    vector = _weak(mu)
    items = _take(enumerate_parking(vector), cap)
    return {
        "mu": vector.to_text(),
        "count": len(items),
        "items": [p.to_text() for p in items],
    }


def cmd_arw_compare(a: int, b: int, mu: str | None = None, all_paths: bool = False, cap: int | None = None) -> dict:
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise ServiceError("parse_error", f"({a}, {b}) is not a coprime pair of positive integers")
    s = rational_signature(a, b)
    if mu is not None and all_paths:
        raise ServiceError("parse_error", "give either one mu or --all, not both")
    try:
        if mu is not None:
            paths = [DyckPath(s, _weak(mu))]
        elif all_paths:
            paths = _take(enumerate_paths(s), cap)
        else:
            paths = [next(iter(enumerate_paths(s)))]  # lex-first path
    except ServiceError:
        raise
    except ValueError as exc:
        raise ServiceError("invalid_object", str(exc))
    reports = [compare_constructions(a, b, p) for p in paths]
    return {"a": a, "b": b, "signature": s.to_text(), "reports": reports}


def cmd_verify(max_weight: int, rational_only: bool = False, cap: int | None = None) -> dict:
    if max_weight < 0:
        raise ServiceError("parse_error", "the weight bound must be nonnegative")
    effective = cap if cap is not None else default_cap()
    try:
        return run_verification(max_weight, rational_only=rational_only, cap=effective)
    except RuntimeError as exc:
        raise ServiceError("cap_exceeded", str(exc))
