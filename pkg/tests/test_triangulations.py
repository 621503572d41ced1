from fractions import Fraction

import pytest

from surfcount.errors import MissingEntryError
from surfcount.triangulations import TriTable, prefactor_denominator, tri_rec, xi_series


@pytest.fixture(scope="module")
def tri10():
    return TriTable().fill(10)


def test_initial_conditions(tri10):
    assert tri10.value(1, 0) == 4
    assert tri10.value(1, 1) == 9
    assert tri10.value(1, 2) == 7
    assert tri10.value(2, 3) == 128
    assert tri10.value(1, 3) == 0   # below support: n < 2g - 1


def test_published_counts(tri10):
    assert tri10.value(3, 0) == 336
    assert tri10.value(3, 4) == 3885
    assert tri10.value(5, 5) == 17742726
    assert tri10.value(7, 8) == 45877917085
    assert tri10.value(10, 2) == 11509659737732


def test_support_bound(tri10):
    for n in range(1, 11):
        for g2 in range(n + 4):
            if g2 > n + 1:
                assert tri10.value(n, g2) == 0, (n, g2)
            else:
                assert tri10.value(n, g2) > 0, (n, g2)


def test_prefactor_denominator_positive():
    # not proved nonzero in general; checked over the visited range
    for n in range(1, 60):
        for g2 in range(n + 2):
            assert prefactor_denominator(n, g2) > 0


def test_single_step_and_missing(tri10):
    assert tri_rec(7, 3, tri10) == tri10.value(7, 3)
    with pytest.raises(MissingEntryError):
        TriTable().value(5, 0)


def test_xi_series(tri10):
    xi = xi_series(tri10, 12)
    c6 = xi.coeff(6)
    assert c6.coeff((3, 2, 0)) == Fraction(4, 12)
    assert c6.coeff((2, 2, 0)) == Fraction(9, 12)
    assert c6.coeff((1, 2, 0)) == Fraction(7, 12)
    assert xi.coeff(7).is_zero()
    c12 = xi.coeff(12)
    assert c12.coeff((4, 4, 0)) == Fraction(32, 24)
