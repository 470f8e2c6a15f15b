"""Bijections between the object families, all hubbed on planar trees, plus
the independent path-side constructions used for differential testing.

Tree-side maps label nodes or caverns and read the labels in preorder.
Path-side maps place dots in the grid rows and group them by strips.  The two
routes are kept deliberately separate so the test suite can compare them.
"""

from __future__ import annotations

from .noncrossing import SetPartition, is_noncrossing
from .paths import DyckPath, path_from_word, path_word
from .polygons import (
    Angulation,
    IDENTITY_ANGULATION,
    Parenthesization,
    block_factorization,
    compose_angulations,
    decompose_angulation,
)
from .signatures import Composition, WeakComposition, refinement_split
from .stirling import (
    Multipermutation,
    cavern_word,
    is_312_avoiding_stirling,
    is_stirling,
    stirling_to_increasing_tree,
)
from .trees import (
    IDENTITY_TREE,
    PlanarTree,
    caverns,
    catalan_decompose_tree,
    compose_trees,
    left_descendants,
    signature,
    tree_from_signature_and_gaps,
)


def _require_fat(s: Composition, what: str) -> None:
    if any(p < 2 for p in s):
        raise ValueError(f"{what} requires every part of the signature to be at least 2")


# ---------------------------------------------------------------------------
# trees <-> paths


def tree_to_path(tree: PlanarTree) -> DyckPath:
    """Read internal nodes as north steps and leaves as east steps in
    preorder."""
    s = signature(tree)
    mu = []
    gap = None
    for d in tree.degrees:
        if d > 0:
            if gap is not None:
                mu.append(gap)
            gap = 0
        else:
            if gap is None:
                return DyckPath(Composition(), WeakComposition())
            gap += 1
    mu.append(gap - 1)  # closing east step is not recorded
    return DyckPath(s, WeakComposition(mu))


def path_to_tree(path: DyckPath) -> PlanarTree:
    """Attach node i+1 at the (mu(i)+1)-th leaf after node i in preorder;
    equivalently, interleave the signature with runs of mu(i) leaves."""
    if path.is_identity:
        return IDENTITY_TREE
    return tree_from_signature_and_gaps(path.s, path.mu)


# ---------------------------------------------------------------------------
# trees <-> Stirling permutations


def tree_to_stirling(tree: PlanarTree) -> Multipermutation:
    """Label internal nodes 1..a in preorder, label each cavern by its owner,
    read the caverns in preorder."""
    _require_fat(signature(tree), "the Stirling image")
    return cavern_word(tree)


def stirling_to_tree(sigma: Multipermutation) -> PlanarTree:
    """Rebuild the tree whose cavern word is sigma; rejects words that are not
    312-avoiding Stirling permutations."""
    if not is_stirling(sigma):
        raise ValueError(f"{sigma.to_text()} contains the pattern 212")
    if not is_312_avoiding_stirling(sigma):
        raise ValueError(f"{sigma.to_text()} contains the pattern 312")
    it = stirling_to_increasing_tree(sigma)
    a = len(it.labels)
    if it.labels != tuple(range(1, a + 1)):  # pragma: no cover - guarded by 312 check
        raise ValueError(f"{sigma.to_text()} does not label its tree in preorder")
    return it.tree


# ---------------------------------------------------------------------------
# trees <-> noncrossing partitions


def tree_to_partition(tree: PlanarTree) -> SetPartition:
    """Group the preorder cavern indices by maximal left-descendant chains."""
    _require_fat(signature(tree), "the noncrossing-partition image")
    cavs = caverns(tree)
    internals = tree.internal_nodes
    anchors = []
    for idx, node in enumerate(internals, start=1):
        parent = tree.parent[node]
        if parent is None or tree.children[parent][0] != node:
            anchors.append(idx)
    blocks = []
    for anchor in anchors:
        members = left_descendants(tree, anchor)
        blocks.append([i for i, c in enumerate(cavs, start=1) if c.owner in members])
    return SetPartition(blocks)


class _Node:
    __slots__ = ("children",)

    def __init__(self) -> None:
        self.children: list["_Node"] = []


def _build_chain(chunk: Composition, labels: list[int], label_map: dict[int, _Node]) -> _Node:
    """Left-descendant tree for the chunk, with its caverns labeled in
    preorder by the given sorted labels."""
    nodes = [_Node() for _ in chunk]
    for i, node in enumerate(nodes):
        first: _Node = nodes[i + 1] if i + 1 < len(nodes) else _Node()
        node.children = [first] + [_Node() for _ in range(chunk[i] - 1)]
    # caverns in preorder: deepest node's nonminimal children first
    pos = 0
    for i in range(len(nodes) - 1, -1, -1):
        for child in nodes[i].children[1:]:
            label_map[labels[pos]] = child
            pos += 1
    return nodes[0]


def _serialize(root: _Node) -> PlanarTree:
    degrees: list[int] = []

    def walk(node: _Node) -> None:
        degrees.append(len(node.children))
        for c in node.children:
            walk(c)

    walk(root)
    return PlanarTree(degrees)


def partition_to_tree(pi: SetPartition, s: Composition) -> PlanarTree:
    """Split s along the block sizes, build the left-descendant tree of each
    chunk, and glue each tree at the leaf sitting right after the cavern
    labeled one less than its block's minimum."""
    s = Composition(s)
    _require_fat(s, "the noncrossing-partition preimage")
    if not is_noncrossing(pi):
        raise ValueError("the partition is crossing")
    if pi.ground_size != s.total - len(s):
        raise ValueError(
            f"partition of [{pi.ground_size}] cannot come from s with |s|-l(s)={s.total - len(s)}"
        )
    if not pi.blocks:
        return IDENTITY_TREE
    chunks_minus = refinement_split(s.minus_one(), (len(b) for b in pi.blocks))
    if chunks_minus is None:
        raise ValueError("block sizes are not contiguous sums of s-1")
    chunks: list[Composition] = []
    start = 0
    for c in chunks_minus:
        chunks.append(Composition(s[start : start + len(c)]))
        start += len(c)

    label_map: dict[int, _Node] = {}
    root = _build_chain(chunks[0], sorted(pi.blocks[0]), label_map)
    for chunk, block in zip(chunks[1:], pi.blocks[1:]):
        target = label_map.get(min(block) - 1)
        if target is None or target.children:
            raise ValueError(f"no free leaf after cavern {min(block) - 1}; gluing fails")
        sub_map: dict[int, _Node] = {}
        sub_root = _build_chain(chunk, sorted(block), sub_map)
        target.children = sub_root.children
        label_map.update(sub_map)
    tree = _serialize(root)
    if tuple(signature(tree)) != tuple(s):  # pragma: no cover - construction invariant
        raise ValueError("gluing produced a tree with the wrong signature")
    return tree


# ---------------------------------------------------------------------------
# trees <-> complete matchings


def tree_to_matching(tree: PlanarTree) -> SetPartition:
    """Number all nodes 0..|s| in preorder; block k is the set of children of
    the k-th internal node."""
    return SetPartition(tree.children[v] for v in tree.internal_nodes)


def matching_to_tree(m: SetPartition) -> PlanarTree:
    """Attach block k as the children of the node numbered min(block)-1."""
    if not is_noncrossing(m):
        raise ValueError("the matching is crossing")
    if not m.blocks:
        return IDENTITY_TREE
    n = m.ground_size
    children: dict[int, tuple[int, ...]] = {}
    for block in m.blocks:
        children[block[0] - 1] = block
    order: list[int] = []
    stack = [0]
    while stack:
        x = stack.pop()
        order.append(x)
        stack.extend(reversed(children.get(x, ())))
    if order != list(range(n + 1)):
        raise ValueError("blocks do not glue into a preorder-numbered tree")
    return PlanarTree(len(children.get(x, ())) for x in range(n + 1))


# ---------------------------------------------------------------------------
# trees <-> angulations and parenthesizations (recursive scheme)


def tree_to_angulation(tree: PlanarTree) -> Angulation:
    _require_fat(signature(tree), "the angulation image")
    if tree.is_identity:
        return IDENTITY_ANGULATION
    k, children = catalan_decompose_tree(tree)
    return compose_angulations(k, [tree_to_angulation(c) for c in children])


def angulation_to_tree(ang: Angulation) -> PlanarTree:
    if ang.is_identity:
        return IDENTITY_TREE
    k, parts = decompose_angulation(ang)
    return compose_trees(k, [angulation_to_tree(p) for p in parts])


def tree_to_parenthesization(tree: PlanarTree) -> Parenthesization:
    """Each non-leaf child becomes a parenthesized group, leaves become bare
    stars; the root's own redundant pair is omitted."""
    _require_fat(signature(tree), "the parenthesization image")

    def encode(t: PlanarTree) -> str:
        parts = []
        for c in t.children[0]:
            sub = t.subtree(c)
            parts.append("*" if sub.is_identity else "(" + encode(sub) + ")")
        return "".join(parts)

    if tree.is_identity:
        return Parenthesization("*")
    return Parenthesization(encode(tree))


def parenthesization_to_tree(w: Parenthesization) -> PlanarTree:
    def decode(word: str) -> PlanarTree:
        if word == "*":
            return IDENTITY_TREE
        blocks = block_factorization(word)
        if len(blocks) < 2:
            raise ValueError(f"{word!r} has a group with fewer than two blocks")
        children = []
        for b in blocks:
            if b == "*":
                children.append(IDENTITY_TREE)
            elif b[1:-1] == "*":
                raise ValueError("a parenthesized single star is redundant")
            else:
                children.append(decode(b[1:-1]))
        return compose_trees(len(blocks), children)

    return decode(w.word)


# ---------------------------------------------------------------------------
# direct path-side constructions (grid dots)


def _dot_columns(path: DyckPath) -> list[tuple[int, ...]]:
    """For each row j, the columns of its s(j)-1 dots: rows processed from
    the top down, each taking the leftmost free columns strictly right of its
    north step."""
    width = path.s.total - len(path.s)  # labeled columns 1..width
    taken: set[int] = set()
    dots: list[tuple[int, ...]] = [()] * len(path.s)
    for j in range(len(path.s), 0, -1):
        need = path.s[j - 1] - 1
        row: list[int] = []
        c = path.north_x[j - 1] + 1
        while len(row) < need:
            if c > width:  # pragma: no cover - prevented by dominance
                raise ValueError("ran out of columns while placing dots")
            if c not in taken:
                row.append(c)
                taken.add(c)
            c += 1
        dots[j - 1] = tuple(row)
    return dots


def path_to_stirling_direct(path: DyckPath) -> Multipermutation:
    """Column c reads the row of its dot."""
    _require_fat(path.s, "the direct Stirling construction")
    dots = _dot_columns(path)
    word = [0] * (path.s.total - len(path.s))
    for j, row in enumerate(dots, start=1):
        for c in row:
            word[c - 1] = j
    return Multipermutation(word)


def path_to_partition_direct(path: DyckPath) -> SetPartition:
    """Blocks are the dot columns of each horizontal strip (one strip per
    maximal north run)."""
    _require_fat(path.s, "the direct partition construction")
    dots = _dot_columns(path)
    blocks = []
    for run in path.north_runs():
        blocks.append([c for j in run for c in dots[j - 1]])
    return SetPartition(blocks)


def partition_to_path_direct(pi: SetPartition, s: Composition) -> DyckPath:
    """Peaks at (min(block)-1, last row of the block's chunk of s-1)."""
    s = Composition(s)
    _require_fat(s, "the direct partition inversion")
    chunks = refinement_split(s.minus_one(), (len(b) for b in pi.blocks))
    if chunks is None:
        raise ValueError("block sizes are not contiguous sums of s-1")
    xs = [b[0] - 1 for b in pi.blocks]
    mu: list[int] = []
    for i, chunk in enumerate(chunks):
        mu.extend([0] * (len(chunk) - 1))
        if i + 1 < len(chunks):
            mu.append(xs[i + 1] - xs[i])
        else:
            mu.append(s.total - len(s) - xs[i])
    path = DyckPath(s, WeakComposition(mu))
    if path_to_partition_direct(path) != pi:
        raise ValueError("the partition does not match any path")
    return path


def path_to_matching_direct(path: DyckPath) -> SetPartition:
    """Number the steps 1..|s| (closing east step excluded); block i holds
    the north step of row i and the east steps in that row's dot columns."""
    if path.is_identity:
        return SetPartition(())
    dots = _dot_columns(path)
    x = path.north_x

    def east_label(c: int) -> int:
        # the c-th east step follows every north step fired at x < c
        return c + sum(1 for xj in x if xj < c)

    blocks = []
    for j in range(1, len(path.s) + 1):
        blocks.append([j + x[j - 1]] + [east_label(c) for c in dots[j - 1]])
    return SetPartition(blocks)


def matching_to_path_direct(m: SetPartition) -> DyckPath:
    """North steps sit at the minimal elements of the blocks."""
    if not m.blocks:
        from .paths import IDENTITY_PATH

        return IDENTITY_PATH
    s = m.block_sizes()
    xs = [block[0] - i for i, block in enumerate(m.blocks, start=1)]
    if any(x < 0 for x in xs) or any(a > b for a, b in zip(xs, xs[1:])):
        raise ValueError("block minima do not give increasing north positions")
    mu = [xs[i + 1] - xs[i] for i in range(len(xs) - 1)] + [s.total - len(s) - xs[-1]]
    path = DyckPath(s, WeakComposition(mu))
    if path_to_matching_direct(path) != m:
        raise ValueError("the matching does not match any path")
    return path


# ---------------------------------------------------------------------------
# word helpers


def word_of_tree(tree: PlanarTree) -> str:
    """NE word of the tree's preorder (north at internal nodes)."""
    return path_word(tree_to_path(tree))


def tree_from_word(s: Composition, word: str) -> PlanarTree:
    return path_to_tree(path_from_word(s, word))
