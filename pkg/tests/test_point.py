"""Point-target invariants and the composition-sum enumerator."""

from fractions import Fraction as F

import pytest

from sgw.errors import DomainError
from sgw.point import Invariant, compositions, mapping_to_point, point_sum, sgw_point
from .test_taut import oracle_monomial


def oracle_point_sum(k):
    """Unpruned term-by-term evaluation through the independent recursion."""
    total = F(0)
    for comp in compositions(k - 3, k - 3, pruned=False):
        total += oracle_monomial(k, comp)
    return total


def test_low_k_values():
    assert sgw_point(3) == Invariant.of(1, -1)
    assert sgw_point(4) == Invariant.of(F(-1, 2), -3)
    assert sgw_point(5) == Invariant.of(F(3, 4), -5)


def test_k_six_matches_oracle():
    expected = F(-1, 8) * oracle_point_sum(6)
    assert expected == F(-15, 8)
    assert sgw_point(6) == Invariant.of(expected, -7)


def test_k_seven_matches_oracle():
    expected = F(1, 16) * oracle_point_sum(7)
    assert expected == F(105, 16)
    assert sgw_point(7) == Invariant.of(expected, -9)


def test_pruned_enumerator_agrees_with_unpruned():
    for k in range(3, 9):
        assert point_sum(k, pruned=True) == point_sum(k, pruned=False)


def test_pruning_skips_only_zero_terms():
    for k in range(4, 8):
        pruned = set(compositions(k - 3, k - 3, pruned=True))
        for comp in compositions(k - 3, k - 3, pruned=False):
            if comp not in pruned:
                assert oracle_monomial(k, comp) == 0


def test_grading_exponent():
    for k in range(3, 9):
        result = sgw_point(k)
        assert not result.is_zero
        assert result.kappa_exp == 5 - 2 * k


def test_k_below_three_rejected():
    with pytest.raises(DomainError):
        sgw_point(2)


def test_invariant_canonical_zero():
    assert Invariant.of(0, -5) == Invariant.zero()
    assert str(Invariant.zero()) == "0"
    assert Invariant.zero().to_json() == {"zero": True}
    assert Invariant.of(F(-1, 2), -3).to_json() == {
        "coefficient": "-1/2",
        "kappa_exponent": -3,
    }


def test_mapping_to_point():
    assert mapping_to_point(2, (1, 1, 0)) == Invariant.of(1, -1)
    assert mapping_to_point(2, (2, 2, 2)) == Invariant.zero()
    assert mapping_to_point(3, (1, 1, 1, 0)) == Invariant.of(F(-1, 2), -3)


def test_mapping_to_point_rejects_bad_classes():
    with pytest.raises(DomainError):
        mapping_to_point(2, (3, 0, 0))
    with pytest.raises(DomainError):
        mapping_to_point(2, (1, 1))
