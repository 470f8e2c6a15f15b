import pytest

from scatalan.signatures import Composition, WeakComposition
from scatalan.paths import (
    DyckPath,
    IDENTITY_PATH,
    area,
    area_vector,
    catalan_decompose_path,
    compose_paths,
    enumerate_paths,
    operadic_path_compose,
    path_from_word,
    path_word,
)
from scatalan.verify import iter_compositions

RUNNING = DyckPath(Composition((3, 4, 4, 2, 5)), WeakComposition((0, 2, 6, 0, 5)))


def brute_force_mu(s):
    """Oracle: all weak compositions of the right sum filtered by dominance."""
    from itertools import product

    from scatalan.signatures import dominance_leq

    s = Composition(s)
    n = s.total - len(s)
    for parts in product(range(n + 1), repeat=len(s)):
        mu = WeakComposition(parts)
        if mu.total == n and dominance_leq(mu, s.minus_one()):
            yield mu


class TestValidity:
    def test_running_is_valid(self):
        assert RUNNING.height == 5 and RUNNING.width == 14

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            DyckPath(Composition((2, 2)), WeakComposition((2,)))

    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            DyckPath(Composition((2, 2)), WeakComposition((1, 0)))

    def test_rejects_dominance_violation(self):
        with pytest.raises(ValueError):
            DyckPath(Composition((2, 2)), WeakComposition((2, 0)))

    def test_identity(self):
        assert IDENTITY_PATH.is_identity


class TestWord:
    def test_paper_example(self):
        d = DyckPath(Composition((2, 3, 2, 3, 2)), WeakComposition((0, 2, 0, 3, 2)))
        assert path_word(d) == "NNEENNEEENEEE"

    def test_identity(self):
        assert path_word(IDENTITY_PATH) == "E"

    def test_running(self):
        assert path_word(RUNNING) == "NNEENEEEEEENNEEEEEE"

    def test_parse_round_trip(self):
        for s in iter_compositions(6):
            for d in enumerate_paths(s):
                assert path_from_word(s, path_word(d)) == d

    def test_full_text_round_trip(self):
        text = RUNNING.to_full_text()
        assert text == "s=3,4,4,2,5; mu=0,2,6,0,5"
        assert DyckPath.from_text(text) == RUNNING


class TestArea:
    def test_running(self):
        assert area_vector(RUNNING) == WeakComposition((0, 2, 3, 0, 1))
        assert area(RUNNING) == 6  # sum of the area vector entries

    def test_maximal_path(self):
        s = Composition((3, 4, 4, 2, 5))
        d = DyckPath(s, s.minus_one())
        assert area_vector(d) == WeakComposition((0,) * 5)

    def test_everything_at_the_end(self):
        s = Composition((3, 2, 4))
        d = DyckPath(s, WeakComposition((0, 0, 6)))
        # prefix-sum formula: 0, s(1)-1, s(1)+s(2)-2, ...
        assert area_vector(d) == WeakComposition((0, 2, 3))

    def test_first_entry_zero(self):
        for s in iter_compositions(6):
            for d in enumerate_paths(s):
                av = area_vector(d)
                if av:
                    assert av[0] == 0
                assert all(x >= 0 for x in av)


class TestEnumeration:
    def test_two_two(self):
        mus = [tuple(d.mu) for d in enumerate_paths(Composition((2, 2)))]
        assert mus == [(0, 2), (1, 1)]

    def test_single_row(self):
        paths = list(enumerate_paths(Composition((4,))))
        assert len(paths) == 1 and paths[0].mu == WeakComposition((3,))

    def test_figure_count(self):
        assert sum(1 for _ in enumerate_paths(Composition((3, 4, 3)))) == 15

    @pytest.mark.parametrize("s", [(2,), (2, 2), (1, 2, 1), (2, 3, 2), (3, 1, 3)])
    def test_matches_brute_force(self, s):
        fast = [tuple(d.mu) for d in enumerate_paths(Composition(s))]
        slow = sorted(tuple(mu) for mu in brute_force_mu(s))
        assert fast == slow  # lexicographic order

    def test_tree_path_counts_agree(self):
        from scatalan.trees import enumerate_trees

        for n in range(8):
            for s in iter_compositions(n):
                assert sum(1 for _ in enumerate_paths(s)) == sum(1 for _ in enumerate_trees(s))


class TestDecomposition:
    def test_running(self):
        k, parts = catalan_decompose_path(RUNNING)
        assert k == 3
        assert [tuple(p.s) for p in parts] == [(4, 4), (), (2, 5)]
        assert [tuple(p.mu) for p in parts] == [(2, 4), (), (0, 5)]

    def test_figure_path(self):
        # the decomposition figure uses mu=(0,3,5,0,5); same part signatures
        d = DyckPath(Composition((3, 4, 4, 2, 5)), WeakComposition((0, 3, 5, 0, 5)))
        from scatalan.paths import _distance_labels

        labels, _ = _distance_labels(d)
        assert labels == [2, 5, 4, 3, 2, 5, 4, 3, 2, 1, 0, 1, 5, 4, 3, 2, 1, 0]
        k, parts = catalan_decompose_path(d)
        assert k == 3
        assert [tuple(p.s) for p in parts] == [(4, 4), (), (2, 5)]

    def test_corolla_path(self):
        d = DyckPath(Composition((4,)), WeakComposition((3,)))
        k, parts = catalan_decompose_path(d)
        assert k == 4 and parts == [IDENTITY_PATH] * 4

    def test_rejects_identity(self):
        with pytest.raises(ValueError):
            catalan_decompose_path(IDENTITY_PATH)

    def test_round_trip_exhaustive(self):
        for n in range(8):
            for s in iter_compositions(n):
                for d in enumerate_paths(s):
                    if d.is_identity:
                        continue
                    k, parts = catalan_decompose_path(d)
                    assert compose_paths(k, parts) == d

    def test_signatures_concatenate(self):
        from scatalan.signatures import concat

        for n in range(9):
            for s in iter_compositions(n):
                for d in enumerate_paths(s):
                    if d.is_identity:
                        continue
                    k, parts = catalan_decompose_path(d)
                    sig = Composition((k,))
                    for p in parts:
                        sig = Composition(concat(sig, p.s))
                    assert sig == s

    def test_mirrors_tree_decomposition(self):
        from scatalan import bijections as bij
        from scatalan.trees import catalan_decompose_tree

        for n in range(8):
            for s in iter_compositions(n):
                for d in enumerate_paths(s):
                    if d.is_identity:
                        continue
                    k, parts = catalan_decompose_path(d)
                    kt, subtrees = catalan_decompose_tree(bij.path_to_tree(d))
                    assert k == kt
                    assert [bij.tree_to_path(t) for t in subtrees] == parts


class TestOperadicCompose:
    def test_identities_fix_the_path(self):
        assert operadic_path_compose(RUNNING, [IDENTITY_PATH] * 6) == RUNNING

    def test_hand_example(self):
        base = DyckPath(Composition((2,)), WeakComposition((1,)))
        out = operadic_path_compose(base, [base, IDENTITY_PATH])
        assert tuple(out.s) == (2, 2) and tuple(out.mu) == (0, 2)

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            operadic_path_compose(RUNNING, [IDENTITY_PATH])

    def test_signature_concatenation_law(self):
        from scatalan.signatures import concat

        cases = [
            (Composition((3,)), WeakComposition((2,))),
            (Composition((2, 2)), WeakComposition((1, 1))),
            (Composition((2, 3)), WeakComposition((0, 3))),
        ]
        pieces = [
            IDENTITY_PATH,
            DyckPath(Composition((2,)), WeakComposition((1,))),
            DyckPath(Composition((2, 2)), WeakComposition((0, 2))),
        ]
        for s, mu in cases:
            base = DyckPath(s, mu)
            k = mu[-1]
            parts = [pieces[i % len(pieces)] for i in range(k + 1)]
            out = operadic_path_compose(base, parts)
            expected = base.s
            for p in parts:
                expected = Composition(concat(expected, p.s))
            assert out.s == expected
