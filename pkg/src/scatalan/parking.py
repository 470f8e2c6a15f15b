"""Preference vectors bounded by a weak composition, and the decorated paths
and decorated trees they biject with.

A preference vector p is mu-parking when its weakly increasing rearrangement
q satisfies q(1) = 0 and q(i) <= mu(1) + ... + mu(i-1) for i > 1.  With
mu = s-1 these are exactly the decorations of the paths for s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .paths import DyckPath, enumerate_paths
from .signatures import Composition, WeakComposition
from .trees import PlanarTree

__all__ = [
    "ParkingFunction",
    "DecoratedPath",
    "DecoratedTree",
    "is_parking",
    "enumerate_parking",
    "count_parking",
    "decorated_path_to_parking",
    "parking_to_decorated_path",
    "decorated_tree_to_parking",
    "decorated_path_to_decorated_tree",
    "decorated_tree_to_decorated_path",
    "enumerate_decorated_paths",
    "enumerate_decorated_trees",
]


def is_parking(prefs: Sequence[int], mu: WeakComposition) -> bool:
    prefs = tuple(int(p) for p in prefs)
    mu = WeakComposition(mu)
    if len(prefs) != len(mu):
        return False
    if any(p < 0 for p in prefs):
        return False
    bound = 0
    for i, q in enumerate(sorted(prefs)):
        if q > bound:
            return False
        bound += mu[i] if i < len(mu) else 0
    return True


@dataclass(frozen=True)
class ParkingFunction:
    prefs: tuple[int, ...]
    mu: WeakComposition

    def __init__(self, prefs: Sequence[int], mu):
        object.__setattr__(self, "prefs", tuple(int(p) for p in prefs))
        object.__setattr__(self, "mu", WeakComposition(mu))
        if not is_parking(self.prefs, self.mu):
            raise ValueError(f"{self.prefs} is not a {tuple(self.mu)}-parking function")

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.prefs)

    @classmethod
    def from_text(cls, text: str, mu) -> "ParkingFunction":
        text = text.strip()
        prefs = () if not text else tuple(int(tok) for tok in text.split(","))
        return cls(prefs, mu)

    def to_json_obj(self) -> dict:
        return {"prefs": list(self.prefs), "mu": list(self.mu)}


@dataclass(frozen=True)
class DecoratedPath:
    """Path whose north steps carry a permutation of [a], increasing within
    each maximal north run."""

    path: DyckPath
    labels: tuple[int, ...]

    def __init__(self, path: DyckPath, labels: Sequence[int]):
        object.__setattr__(self, "path", path)
        object.__setattr__(self, "labels", tuple(int(x) for x in labels))
        a = len(path.s)
        if sorted(self.labels) != list(range(1, a + 1)):
            raise ValueError(f"labels must be a permutation of 1..{a}")
        for run in path.north_runs():
            run_labels = [self.labels[r - 1] for r in run]
            if run_labels != sorted(run_labels):
                raise ValueError("labels must increase within each north run")

    def to_text(self) -> str:
        return f"{self.path.to_text()};labels={','.join(str(x) for x in self.labels)}"

    @classmethod
    def from_text(cls, text: str, s: Composition) -> "DecoratedPath":
        word, _, rest = text.partition(";")
        key, _, csv = rest.strip().partition("=")
        if key.strip() != "labels":
            raise ValueError(f"decorated path text form is WORD;labels=..., got {text!r}")
        labels = tuple(int(tok) for tok in csv.split(",")) if csv.strip() else ()
        return cls(DyckPath.from_text(word, s), labels)

    def to_json_obj(self) -> dict:
        obj = self.path.to_json_obj()
        obj["labels"] = list(self.labels)
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DecoratedPath":
        return cls(DyckPath.from_json_obj(obj), obj["labels"])


@dataclass(frozen=True)
class DecoratedTree:
    """Tree whose internal nodes carry a permutation of [a] (in preorder
    order) where an internal node that is the leftmost child of its parent
    has a larger label than the parent."""

    tree: PlanarTree
    labels: tuple[int, ...]

    def __init__(self, tree: PlanarTree, labels: Sequence[int]):
        object.__setattr__(self, "tree", tree)
        object.__setattr__(self, "labels", tuple(int(x) for x in labels))
        internals = tree.internal_nodes
        if sorted(self.labels) != list(range(1, len(internals) + 1)):
            raise ValueError(f"labels must be a permutation of 1..{len(internals)}")
        label_of = {node: lab for node, lab in zip(internals, self.labels)}
        for node in internals:
            first = tree.children[node][0]
            if tree.degrees[first] > 0 and label_of[first] <= label_of[node]:
                raise ValueError("a leftmost internal child must outrank its parent")

    def to_text(self) -> str:
        return f"{self.tree.to_text()};labels={','.join(str(x) for x in self.labels)}"

    @classmethod
    def from_text(cls, text: str) -> "DecoratedTree":
        body, _, rest = text.partition(";")
        key, _, csv = rest.strip().partition("=")
        if key.strip() != "labels":
            raise ValueError(f"decorated tree text form is [..];labels=..., got {text!r}")
        labels = tuple(int(tok) for tok in csv.split(",")) if csv.strip() else ()
        return cls(PlanarTree.from_text(body), labels)

    def to_json_obj(self) -> dict:
        obj = self.tree.to_json_obj()
        obj["labels"] = list(self.labels)
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DecoratedTree":
        return cls(PlanarTree.from_json_obj(obj), obj["labels"])


def decorated_path_to_parking(dp: DecoratedPath) -> ParkingFunction:
    """p(i) counts the east steps left of the north step labeled i."""
    prefs = [0] * len(dp.labels)
    for row, label in enumerate(dp.labels, start=1):
        prefs[label - 1] = dp.path.north_x[row - 1]
    return ParkingFunction(prefs, dp.path.s.minus_one())


def parking_to_decorated_path(pf: ParkingFunction, s: Composition) -> DecoratedPath:
    """Car i's north step goes after p(i) east steps; ties stack bottom to top
    by car number."""
    s = Composition(s)
    if tuple(pf.mu) != tuple(s.minus_one()):
        raise ValueError("the parking parameter must be s-1")
    order = sorted(range(1, len(pf.prefs) + 1), key=lambda i: (pf.prefs[i - 1], i))
    xs = [pf.prefs[i - 1] for i in order]
    n = s.total - len(s)
    mu = [xs[i + 1] - xs[i] for i in range(len(xs) - 1)] + ([n - xs[-1]] if xs else [])
    return DecoratedPath(DyckPath(s, WeakComposition(mu)), order)


def decorated_tree_to_parking(dt: DecoratedTree) -> ParkingFunction:
    """Label the leaves 0.. left to right; p(i) is the label of the leftmost
    leaf descendant of the internal node decorated i."""
    tree = dt.tree
    leaf_label = {node: i for i, node in enumerate(tree.leaf_nodes)}
    prefs = [0] * len(dt.labels)
    for node, label in zip(tree.internal_nodes, dt.labels):
        cursor = node
        while tree.degrees[cursor] > 0:
            cursor = tree.children[cursor][0]
        prefs[label - 1] = leaf_label[cursor]
    from .trees import signature

    return ParkingFunction(prefs, signature(tree).minus_one())


def decorated_path_to_decorated_tree(dp: DecoratedPath) -> DecoratedTree:
    from .bijections import path_to_tree

    return DecoratedTree(path_to_tree(dp.path), dp.labels)


def decorated_tree_to_decorated_path(dt: DecoratedTree) -> DecoratedPath:
    from .bijections import tree_to_path

    return DecoratedPath(tree_to_path(dt.tree), dt.labels)


def _run_labelings(runs: Sequence[Sequence[int]], letters: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All assignments of the letters to the runs, sorted within each run,
    in lexicographic order of the resulting label sequence."""
    if not runs:
        yield ()
        return
    from itertools import combinations

    first, rest = runs[0], runs[1:]
    for chosen in combinations(letters, len(first)):
        remaining = tuple(x for x in letters if x not in chosen)
        for tail in _run_labelings(rest, remaining):
            yield chosen + tail


def enumerate_decorated_paths(s: Composition) -> Iterator[DecoratedPath]:
    s = Composition(s)
    letters = tuple(range(1, len(s) + 1))
    for path in enumerate_paths(s):
        for labels in _run_labelings(path.north_runs(), letters):
            yield DecoratedPath(path, labels)


def enumerate_decorated_trees(s: Composition) -> Iterator[DecoratedTree]:
    for dp in enumerate_decorated_paths(s):
        yield decorated_path_to_decorated_tree(dp)


def enumerate_parking(mu: WeakComposition) -> Iterator[ParkingFunction]:
    """All mu-parking functions, preference vectors in lexicographic order,
    pruning on the sorted-prefix bounds."""
    mu = WeakComposition(mu)
    a = len(mu)
    if a == 0:
        yield ParkingFunction((), mu)
        return
    bounds = (0,) + mu.prefix_sums()[:-1]  # sorted value i (0-based) may not exceed bounds[i]
    top = bounds[-1]

    def admissible(chosen: list[int]) -> bool:
        slack = a - len(chosen)
        for i, q in enumerate(sorted(chosen)):
            if q > bounds[min(i + slack, a - 1)]:
                return False
        return True

    def rec(chosen: list[int]) -> Iterator[ParkingFunction]:
        if len(chosen) == a:
            if is_parking(chosen, mu):
                yield ParkingFunction(tuple(chosen), mu)
            return
        for v in range(top + 1):
            chosen.append(v)
            if admissible(chosen):
                yield from rec(chosen)
            chosen.pop()

    yield from rec([])


def count_parking(mu: WeakComposition) -> int:
    return sum(1 for _ in enumerate_parking(mu))
