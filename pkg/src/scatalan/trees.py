"""Planar rooted trees encoded by their full preorder degree sequence.

Every node (internal and leaf) contributes one entry; leaves carry degree 0.
The single-node identity tree is the sequence (0,).  All bijections in the
package read trees in preorder, which makes this encoding the natural hub:
most maps reduce to scans over the degree sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .signatures import Composition, WeakComposition


class Cavern(NamedTuple):
    """Gap between two consecutive children of an internal node.

    ``owner`` is the 1-based preorder index of the internal node, ``gap`` the
    1-based index of the gap (between children gap and gap+1).  A cavern is
    identified with the nonminimal child to its right; ``node`` is that
    child's preorder position among all nodes.
    """

    owner: int
    gap: int
    node: int


@dataclass(frozen=True)
class PlanarTree:
    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int]):
        object.__setattr__(self, "degrees", tuple(int(d) for d in degrees))
        n = len(self.degrees)
        if n == 0:
            raise ValueError("a tree has at least one node")
        total = 0
        for p, d in enumerate(self.degrees, start=1):
            if d < 0:
                raise ValueError("node degrees must be >= 0")
            total += d
            if p < n and 1 + total <= p:
                raise ValueError(f"degree sequence {self.degrees} is not a preorder tree encoding")
        if 1 + total != n:
            raise ValueError(f"degree sequence {self.degrees} has dangling children")

    @property
    def size(self) -> int:
        return len(self.degrees)

    @property
    def is_identity(self) -> bool:
        return self.degrees == (0,)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        """Children (preorder node indices) of every node."""
        kids: list[list[int]] = [[] for _ in self.degrees]
        stack: list[int] = []
        for i, d in enumerate(self.degrees):
            if stack:
                kids[stack[-1]].append(i)
                while stack and len(kids[stack[-1]]) == self.degrees[stack[-1]]:
                    stack.pop()
            if d > 0:
                stack.append(i)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def parent(self) -> tuple[int | None, ...]:
        par: list[int | None] = [None] * self.size
        for v, kids in enumerate(self.children):
            for c in kids:
                par[c] = v
        return tuple(par)

    @cached_property
    def internal_nodes(self) -> tuple[int, ...]:
        """Preorder node indices of the internal nodes."""
        return tuple(i for i, d in enumerate(self.degrees) if d > 0)

    @cached_property
    def leaf_nodes(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.degrees) if d == 0)

    @cached_property
    def subtree_end(self) -> tuple[int, ...]:
        """One past the last preorder index of each node's subtree."""
        end = [0] * self.size
        for i in range(self.size - 1, -1, -1):
            kids = self.children[i]
            end[i] = end[kids[-1]] if kids else i + 1
        return tuple(end)

    def subtree(self, node: int) -> "PlanarTree":
        return PlanarTree(self.degrees[node:self.subtree_end[node]])

    def to_text(self) -> str:
        return "[" + ",".join(str(d) for d in self.degrees) + "]"

    @classmethod
    def from_text(cls, text: str) -> "PlanarTree":
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"tree text form is a bracketed degree list, got {text!r}")
        body = text[1:-1].strip()
        if not body:
            raise ValueError("empty degree list")
        return cls(int(tok) for tok in body.split(","))

    def to_json_obj(self) -> dict:
        return {"degrees": list(self.degrees)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PlanarTree":
        return cls(obj["degrees"])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PlanarTree({self.degrees!r})"


IDENTITY_TREE = PlanarTree((0,))


def signature(tree: PlanarTree) -> Composition:
    """Degrees of the internal nodes in preorder; the identity tree maps to
    the empty composition."""
    return Composition(d for d in tree.degrees if d > 0)


def corolla(k: int) -> PlanarTree:
    return PlanarTree((k,) + (0,) * k)


def left_descendant_tree(s: Composition) -> PlanarTree:
    """The unique tree with signature s in which every internal node is the
    root or the leftmost child of another internal node."""
    if not s:
        return IDENTITY_TREE
    return PlanarTree(tuple(s) + (0,) * (sum(s) - len(s) + 1))


def tree_from_signature_and_gaps(s: Composition, mu: WeakComposition) -> PlanarTree:
    """Tree whose preorder alternates internal nodes of degrees s with runs of
    mu(i) leaves, plus one closing leaf.

    This realizes the recursive attach-at-the-(mu(i)+1)th-leaf construction:
    the resulting preorder has exactly mu(i) leaves between consecutive
    internal nodes, which characterizes the tree.
    """
    degrees: list[int] = []
    for k, gap in zip(s, mu):
        degrees.append(k)
        degrees.extend([0] * gap)
    degrees.append(0)
    return PlanarTree(degrees)


def area_labeling(tree: PlanarTree) -> tuple[int, ...]:
    """Per-node labels, preorder: root 0, the i-th child from right to left
    labeled i-1 plus its parent's label."""
    labels = [0] * tree.size
    for v in tree.internal_nodes:
        kids = tree.children[v]
        d = len(kids)
        for j, c in enumerate(kids):
            labels[c] = labels[v] + (d - 1 - j)
    return tuple(labels)


def caverns(tree: PlanarTree) -> tuple[Cavern, ...]:
    """Caverns in the preorder order of their nonminimal children."""
    internal_index = {v: i + 1 for i, v in enumerate(tree.internal_nodes)}
    out = []
    for v in tree.internal_nodes:
        for gap, child in enumerate(tree.children[v][1:], start=1):
            out.append(Cavern(owner=internal_index[v], gap=gap, node=child))
    out.sort(key=lambda c: c.node)
    return tuple(out)


def left_descendants(tree: PlanarTree, v: int) -> frozenset[int]:
    """Internal nodes on the leftmost-child chain from internal node v
    (1-based preorder index among internal nodes), including v itself."""
    internals = tree.internal_nodes
    if not 1 <= v <= len(internals):
        raise ValueError(f"no internal node {v} in a tree with {len(internals)} internal nodes")
    internal_index = {node: i + 1 for i, node in enumerate(internals)}
    node = internals[v - 1]
    chain = [v]
    while True:
        first = tree.children[node][0]
        if tree.degrees[first] == 0:
            break
        node = first
        chain.append(internal_index[node])
    return frozenset(chain)


def leftmost_leaf_count(tree: PlanarTree) -> int:
    """Leaves that are the minimal child of their parent."""
    return sum(1 for v in tree.internal_nodes if tree.degrees[tree.children[v][0]] == 0)


def graft(tree: PlanarTree, subtrees: Iterable[PlanarTree]) -> PlanarTree:
    """Attach the i-th subtree's root at the i-th leaf of the base tree,
    leaves taken left to right."""
    subs = list(subtrees)
    n_leaves = len(tree.leaf_nodes)
    if len(subs) != n_leaves:
        raise ValueError(f"need one subtree per leaf: {n_leaves} leaves, {len(subs)} subtrees")
    degrees: list[int] = []
    it = iter(subs)
    for d in tree.degrees:
        if d == 0:
            degrees.extend(next(it).degrees)
        else:
            degrees.append(d)
    return PlanarTree(degrees)


def catalan_decompose_tree(tree: PlanarTree) -> tuple[int, list[PlanarTree]]:
    """Root degree and the root's subtrees in order."""
    if tree.is_identity:
        raise ValueError("the identity tree has no decomposition")
    return tree.degrees[0], [tree.subtree(c) for c in tree.children[0]]


def compose_trees(k: int, subtrees: Iterable[PlanarTree]) -> PlanarTree:
    subs = list(subtrees)
    if len(subs) != k:
        raise ValueError(f"need {k} subtrees, got {len(subs)}")
    degrees = [k]
    for t in subs:
        degrees.extend(t.degrees)
    return PlanarTree(degrees)


def enumerate_trees(s: Composition) -> Iterator[PlanarTree]:
    """All trees with the given signature, ordered by the lexicographic order
    of their leaf-gap vectors (the order shared by every family listing)."""
    from .paths import iter_gap_vectors

    for mu in iter_gap_vectors(s):
        yield tree_from_signature_and_gaps(s, mu)
