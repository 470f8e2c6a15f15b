import pytest

from scatalan.polygons import (
    Angulation,
    IDENTITY_ANGULATION,
    block_factorization,
    compose_angulations,
    decompose_angulation,
    enumerate_angulations,
    enumerate_parenthesizations,
    is_valid_parenthesization,
    signature_of_angulation,
    signature_of_parenthesization,
)
from scatalan.signatures import Composition
from scatalan.verify import iter_compositions

GOLDEN_WORD = "(**(****)*)*((*****)*)"


class TestAngulationValidity:
    def test_rejects_adjacent(self):
        with pytest.raises(ValueError):
            Angulation(5, ((1, 2),))

    def test_rejects_wrap_adjacent(self):
        with pytest.raises(ValueError):
            Angulation(5, ((1, 5),))

    def test_rejects_crossing(self):
        with pytest.raises(ValueError):
            Angulation(6, ((1, 3), (2, 4)))

    def test_face_count(self):
        assert Angulation(6, ((1, 3), (3, 6))).face_count == 3
        assert IDENTITY_ANGULATION.face_count == 0


class TestAngulationSignature:
    def test_triangle(self):
        assert signature_of_angulation(Angulation(3)) == Composition((2,))

    def test_plain_polygon_is_corolla(self):
        assert signature_of_angulation(Angulation(5)) == Composition((4,))

    def test_running_example(self):
        from scatalan import bijections as bij
        from scatalan.trees import PlanarTree

        tree = PlanarTree((3, 4, 0, 0, 4, 0, 0, 0, 0, 0, 0, 2, 5, 0, 0, 0, 0, 0, 0))
        ang = bij.tree_to_angulation(tree)
        assert ang.polygon_size == 15
        assert ang.face_count == 5
        assert signature_of_angulation(ang) == Composition((3, 4, 4, 2, 5))

    def test_polygon_size_law(self):
        for n in range(8):
            for s in iter_compositions(n):
                if any(p < 2 for p in s) or not s:
                    continue
                for ang in enumerate_angulations(s):
                    assert ang.polygon_size == s.total - len(s) + 2
                    assert ang.face_count == len(s)

    def test_decompose_compose_round_trip(self):
        for n in range(8):
            for s in iter_compositions(n):
                if any(p < 2 for p in s) or not s:
                    continue
                for ang in enumerate_angulations(s):
                    k, parts = decompose_angulation(ang)
                    assert compose_angulations(k, parts) == ang

    def test_rejects_thin_signature(self):
        with pytest.raises(ValueError):
            list(enumerate_angulations(Composition((2, 1))))


class TestParenthesizationValidity:
    def test_golden(self):
        assert is_valid_parenthesization(GOLDEN_WORD)

    def test_invalid_prefix(self):
        assert not is_valid_parenthesization(")*((*)*(**)")

    def test_star(self):
        assert is_valid_parenthesization("*")

    def test_no_empty_pair(self):
        assert not is_valid_parenthesization("(*)()")

    def test_unbalanced(self):
        assert not is_valid_parenthesization("((*)")

    def test_bad_letters(self):
        assert not is_valid_parenthesization("(a)")


class TestBlocks:
    def test_golden_factorization(self):
        blocks = block_factorization(GOLDEN_WORD)
        assert blocks == ["(**(****)*)", "*", "((*****)*)"]
        assert "".join(blocks) == GOLDEN_WORD

    def test_star_runs(self):
        assert block_factorization("****") == ["*"] * 4

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            block_factorization("()")

    def test_concatenation_identity(self):
        for n in range(7):
            for s in iter_compositions(n):
                if any(p < 2 for p in s):
                    continue
                for w in enumerate_parenthesizations(s):
                    assert "".join(block_factorization(w.word)) == w.word


class TestParenthesizationSignature:
    def test_golden(self):
        assert signature_of_parenthesization(GOLDEN_WORD) == Composition((3, 4, 4, 2, 5))

    def test_star(self):
        assert signature_of_parenthesization("*") == Composition()

    def test_corolla(self):
        assert signature_of_parenthesization("***") == Composition((3,))

    def test_letter_count_law(self):
        for n in range(8):
            for s in iter_compositions(n):
                if any(p < 2 for p in s):
                    continue
                for w in enumerate_parenthesizations(s):
                    assert w.word.count("*") == s.total - len(s) + 1
                    assert w.word.count("(") == max(len(s) - 1, 0)

    def test_signature_preserved(self):
        for n in range(8):
            for s in iter_compositions(n):
                if any(p < 2 for p in s) or not s:
                    continue
                for w in enumerate_parenthesizations(s):
                    assert signature_of_parenthesization(w.word) == s
