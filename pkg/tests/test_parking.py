from itertools import product

import pytest

from scatalan.parking import (
    DecoratedPath,
    DecoratedTree,
    ParkingFunction,
    count_parking,
    decorated_path_to_decorated_tree,
    decorated_path_to_parking,
    decorated_tree_to_decorated_path,
    decorated_tree_to_parking,
    enumerate_decorated_paths,
    enumerate_decorated_trees,
    enumerate_parking,
    is_parking,
    parking_to_decorated_path,
)
from scatalan.paths import DyckPath
from scatalan.signatures import Composition, WeakComposition, rational_signature
from scatalan.verify import iter_compositions

GOLDEN_PREFS = (0, 4, 0, 5, 4, 0, 3)
ONES7 = WeakComposition((1,) * 7)


def brute_force_parking(mu):
    """Oracle: test the sorted condition over the full preference box."""
    mu = WeakComposition(mu)
    bounds = [0]
    for m in mu[:-1]:
        bounds.append(bounds[-1] + m)
    out = []
    for prefs in product(range(mu.total + 1), repeat=len(mu)):
        q = sorted(prefs)
        if all(q[i] <= bounds[i] for i in range(len(q))):
            out.append(prefs)
    return out


class TestPredicate:
    def test_paper_example(self):
        assert is_parking(GOLDEN_PREFS, ONES7)

    def test_all_zero(self):
        assert is_parking((0, 0, 0), WeakComposition((2, 0, 1)))

    def test_minimum_must_be_zero(self):
        assert not is_parking((1, 1), WeakComposition((1, 1)))

    def test_classical_meaning(self):
        # mu = (1^n) recovers sorted p_i < i
        assert is_parking((1, 0, 0), WeakComposition((1, 1, 1)))
        assert not is_parking((2, 2, 0), WeakComposition((1, 1, 1)))

    def test_matches_brute_force(self):
        for mu in [(1, 1, 1), (0, 2, 1), (2, 0, 0), (1, 2)]:
            mu = WeakComposition(mu)
            slow = set(brute_force_parking(mu))
            fast = {p.prefs for p in enumerate_parking(mu)}
            assert fast == slow


class TestDecoratedPathMap:
    def test_golden_forward(self):
        pf = ParkingFunction(GOLDEN_PREFS, ONES7)
        dp = parking_to_decorated_path(pf, Composition((2,) * 7))
        assert decorated_path_to_parking(dp) == pf
        # p_1 = 0 and p_4 = 5 in the figure
        assert pf.prefs[0] == 0 and pf.prefs[3] == 5

    def test_sorted_identity_decoration(self):
        s = Composition((3, 2, 4))
        d = DyckPath(s, s.minus_one())
        labels = tuple(range(1, 4))
        dp = DecoratedPath(d, labels)
        pf = decorated_path_to_parking(dp)
        assert list(pf.prefs) == sorted(pf.prefs)

    def test_single_north_step(self):
        s = Composition((5,))
        dp = DecoratedPath(DyckPath(s, WeakComposition((4,))), (1,))
        assert decorated_path_to_parking(dp).prefs == (0,)

    def test_round_trip_classical(self):
        s = Composition((2, 2, 2))
        pfs = list(enumerate_parking(WeakComposition((1, 1, 1))))
        assert len(pfs) == 16
        for pf in pfs:
            dp = parking_to_decorated_path(pf, s)
            assert decorated_path_to_parking(dp) == pf

    def test_rejects_non_parking(self):
        with pytest.raises(ValueError):
            ParkingFunction((1, 1), WeakComposition((1, 1)))

    def test_all_zeros_single_run(self):
        s = Composition((4, 2))
        pf = ParkingFunction((0, 0), WeakComposition((3, 1)))
        dp = parking_to_decorated_path(pf, s)
        assert dp.labels == (1, 2)
        assert tuple(dp.path.mu) == (0, 4)


class TestDecoratedTreeMap:
    def test_golden_tree_route(self):
        pf = ParkingFunction(GOLDEN_PREFS, ONES7)
        dp = parking_to_decorated_path(pf, Composition((2,) * 7))
        dt = decorated_path_to_decorated_tree(dp)
        assert decorated_tree_to_parking(dt) == pf

    def test_corolla(self):
        from scatalan.trees import corolla

        dt = DecoratedTree(corolla(3), (1,))
        assert decorated_tree_to_parking(dt).prefs == (0,)

    def test_transport_equality(self):
        s = Composition((2, 2, 2))
        for dp in enumerate_decorated_paths(s):
            dt = decorated_path_to_decorated_tree(dp)
            assert decorated_tree_to_decorated_path(dt) == dp
            assert decorated_tree_to_parking(dt) == decorated_path_to_parking(dp)

    def test_label_condition_enforced(self):
        from scatalan.trees import PlanarTree

        with pytest.raises(ValueError):
            DecoratedTree(PlanarTree((2, 2, 0, 0, 0)), (2, 1))


class TestCounting:
    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 16), (4, 125), (5, 1296)])
    def test_classical(self, n, expected):
        assert count_parking(WeakComposition((1,) * n)) == expected

    def test_zero_vector(self):
        assert count_parking(WeakComposition((0, 0, 0))) == 1

    def test_rational_counts(self):
        from math import gcd

        for total in range(2, 13):
            for a in range(1, total):
                b = total - a
                if gcd(a, b) != 1:
                    continue
                mu = rational_signature(a, b).minus_one()
                assert count_parking(mu) == b ** (a - 1)

    def test_family_bijection_counts(self):
        for n in range(8):
            for s in iter_compositions(n):
                decorated = sum(1 for _ in enumerate_decorated_paths(s))
                trees = sum(1 for _ in enumerate_decorated_trees(s))
                parking = count_parking(s.minus_one())
                assert decorated == trees == parking


class TestTextForms:
    def test_parking_text(self):
        pf = ParkingFunction(GOLDEN_PREFS, ONES7)
        assert pf.to_text() == "0,4,0,5,4,0,3"
        assert ParkingFunction.from_text("0,4,0,5,4,0,3", ONES7) == pf

    def test_decorated_path_text(self):
        s = Composition((2, 2))
        dp = DecoratedPath(DyckPath(s, WeakComposition((1, 1))), (1, 2))
        text = dp.to_text()
        assert text == "NENEE;labels=1,2"
        assert DecoratedPath.from_text(text, s) == dp

    def test_decorated_tree_text(self):
        from scatalan.trees import PlanarTree

        dt = DecoratedTree(PlanarTree((2, 2, 0, 0, 0)), (1, 2))
        assert dt.to_text() == "[2,2,0,0,0];labels=1,2"
        assert DecoratedTree.from_text(dt.to_text()) == dt
