import pytest
from hypothesis import given, strategies as st

from scatalan.signatures import (
    Composition,
    Partition,
    WeakComposition,
    concat,
    dominance_diff,
    dominance_leq,
    lambda_of,
    parse_signature,
    rational_signature,
    refines,
)


def iter_compositions(n):
    if n == 0:
        yield Composition()
        return
    for cuts in range(2 ** (n - 1)):
        parts, run = [], 1
        for i in range(n - 1):
            if cuts >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(parts)


class TestRefines:
    def test_paper_example(self):
        assert refines(Composition((3, 2, 1, 1, 5, 2, 2)), Composition((6, 1, 7, 2)))

    def test_reflexive(self):
        s = Composition((3, 4, 4, 2, 5))
        assert refines(s, s)

    def test_negative_example(self):
        assert not refines(Composition((3, 3, 3, 4)), Composition((5, 3, 5)))

    def test_partial_order_exhaustive(self):
        # reflexive, antisymmetric, transitive on all compositions of n <= 7
        for n in range(8):
            comps = list(iter_compositions(n))
            rel = {(a, b) for a in comps for b in comps if refines(a, b)}
            for a in comps:
                assert (a, a) in rel
            for a, b in rel:
                if (b, a) in rel:
                    assert a == b
            for a, b in rel:
                for c in comps:
                    if (b, c) in rel:
                        assert (a, c) in rel


class TestDominance:
    def test_paper_example(self):
        assert dominance_leq(WeakComposition((1, 1, 4, 2)), WeakComposition((1, 2, 3, 3)))

    def test_equality(self):
        mu = WeakComposition((2, 0, 3))
        assert dominance_leq(mu, mu)

    def test_prefix_violation(self):
        assert not dominance_leq(WeakComposition((2, 0)), WeakComposition((1, 1)))

    def test_padding(self):
        assert dominance_leq(WeakComposition((1, 1)), WeakComposition((2,)))
        assert not dominance_leq(WeakComposition((2,)), WeakComposition((1, 1)))

    @given(st.lists(st.integers(0, 5), max_size=6), st.lists(st.integers(0, 5), max_size=6),
           st.lists(st.integers(0, 5), max_size=6))
    def test_partial_order(self, a, b, c):
        a, b, c = WeakComposition(a), WeakComposition(b), WeakComposition(c)
        assert dominance_leq(a, a)
        if dominance_leq(a, b) and dominance_leq(b, c):
            assert dominance_leq(a, c)


class TestDominanceDiff:
    def test_area_usage(self):
        nu = WeakComposition((2, 3, 3, 1, 4))
        mu = WeakComposition((0, 2, 6, 0, 5))
        assert dominance_diff(nu, mu) == WeakComposition((2, 3, 0, 1))

    def test_equal_inputs(self):
        nu = WeakComposition((1, 2, 3))
        assert dominance_diff(nu, nu) == WeakComposition((0, 0))

    def test_hand_value(self):
        # prefix sums 1,3,6,9 over 1,2,6,9
        assert dominance_diff(
            WeakComposition((1, 2, 3, 3)), WeakComposition((1, 1, 4, 3))
        ) == WeakComposition((0, 1, 0))

    def test_rejects_unequal_sums(self):
        with pytest.raises(ValueError):
            dominance_diff(WeakComposition((2, 1)), WeakComposition((1, 1)))

    def test_rejects_violation(self):
        with pytest.raises(ValueError):
            dominance_diff(WeakComposition((1, 1)), WeakComposition((2, 0)))

    def test_nonnegative_iff_dominated(self):
        for n in range(6):
            comps = [WeakComposition(c) for c in iter_compositions(n)]
            for mu in comps:
                for nu in comps:
                    if dominance_leq(mu, nu):
                        assert all(d >= 0 for d in dominance_diff(nu, mu))


class TestConcat:
    def test_paper_example(self):
        assert concat(WeakComposition((3, 2, 1)), WeakComposition((1, 5, 2, 2))) == WeakComposition(
            (3, 2, 1, 1, 5, 2, 2)
        )

    def test_empty_identity(self):
        mu = WeakComposition((2, 0, 1))
        assert concat(WeakComposition(), mu) == mu
        assert concat(mu, WeakComposition()) == mu

    def test_simple(self):
        assert concat(Composition((2,)), Composition((2,))) == Composition((2, 2))

    @given(st.lists(st.integers(0, 4), max_size=4), st.lists(st.integers(0, 4), max_size=4),
           st.lists(st.integers(0, 4), max_size=4))
    def test_associative(self, a, b, c):
        a, b, c = WeakComposition(a), WeakComposition(b), WeakComposition(c)
        assert concat(concat(a, b), c) == concat(a, concat(b, c))


class TestRationalSignature:
    def test_5_8(self):
        assert rational_signature(5, 8) == Composition((2, 3, 2, 3, 2))

    def test_5_13(self):
        assert rational_signature(5, 13) == Composition((3, 4, 3, 4, 3))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_classical(self, n):
        assert rational_signature(n, n + 1) == Composition((2,) * n)

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            rational_signature(4, 6)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            rational_signature(0, 3)

    def test_length_and_sum_laws(self):
        from math import gcd

        for a in range(1, 13):
            for b in range(1, 13):
                if gcd(a, b) == 1:
                    s = rational_signature(a, b)
                    assert len(s) == a
                    assert s.total - len(s) + 1 == b


class TestLambda:
    def test_running_example(self):
        assert lambda_of(Composition((3, 4, 4, 2, 5))) == Partition((9, 8, 5, 2))

    def test_single_part(self):
        assert lambda_of(Composition((7,))) == Partition(())

    def test_small(self):
        assert lambda_of(Composition((2, 2, 2))) == Partition((2, 1))


class TestTextForms:
    def test_round_trip(self):
        s = parse_signature("3,4,4,2,5")
        assert s == Composition((3, 4, 4, 2, 5))
        assert s.to_text() == "3,4,4,2,5"

    def test_empty(self):
        assert parse_signature("") == Composition()
        assert Composition().to_text() == ""

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_signature("2,x")

    def test_rejects_zero_part(self):
        with pytest.raises(ValueError):
            parse_signature("2,0,1")


class TestValidation:
    def test_weak_composition_rejects_negative(self):
        with pytest.raises(ValueError):
            WeakComposition((1, -1))

    def test_partition_rejects_increase(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_composition_is_weak_composition(self):
        assert isinstance(Composition((1, 2)), WeakComposition)
