from fractions import Fraction

import mpmath
import pytest
import sympy

from hyperres.bounds import (
    F_AT_T_EQUALS_S,
    F_EXPANDED,
    BoundError,
    Poly,
    S,
    T,
    binom_2k_minus_t,
    el_lower_bound,
    emc_bound,
    expanded_form_matches,
    f_max_over_t,
    f_poly,
    f_poly_symbolic,
    f_prime_at_minimum,
    fw_cubic_bound,
    lovasz_bound,
    misc_anchors,
)

s_, t_ = sympy.symbols("s t")
F_SYMPY = (5 * s_ * t_**2 + 12 * s_ * t_ * (s_ - t_) + 6 * s_ * (s_ - t_) ** 2 + 4 * s_**2 * t_
           + sympy.Rational(9, 2) * s_**3 - 3 * t_**2 * s_ + sympy.Rational(5, 3) * t_**3
           + sympy.Rational(15, 2) * s_**2 - 18 * s_ * t_ + t_**2 + 9 * s_ - sympy.Rational(5, 3) * t_)


def _to_sympy(p: Poly):
    return sum(sympy.Rational(c.numerator, c.denominator) * s_**a * t_**b for (a, b), c in p.terms.items())


def test_emc_examples():
    b = emc_bound(9, 3, 2)
    assert b.value == 56 and "branch=complete" in b.notes
    assert 84 - 35 == 49
    b = emc_bound(100, 3, 2)
    assert "branch=erdos" in b.notes and b.value == 161700 - 152096
    with pytest.raises(BoundError):
        emc_bound(5, 3, 2)


def test_emc_crossover_is_monotone():
    for k, s in ((2, 1), (2, 3), (3, 2), (4, 2)):
        branches = [emc_bound(n, k, s).notes[0] for n in range((s + 1) * k, 60)]
        flipped = [b == "branch=erdos" for b in branches]
        # once the first branch wins it keeps winning
        assert flipped == sorted(flipped)
        assert flipped[-1]


def test_lovasz_both_readings():
    printed, corollary = lovasz_bound(3, 2)
    assert printed.value == 36 and corollary.value == 216
    assert printed.notes and corollary.notes
    for s in range(1, 8):
        assert lovasz_bound(3, s)[1].value == 27 * s**3
    assert lovasz_bound(1, 1)[0].value == lovasz_bound(1, 1)[1].value == 1


def test_fw_examples():
    assert fw_cubic_bound(3).value == Fraction(1971, 6) + 50 == Fraction(757, 2)
    assert fw_cubic_bound(21).value == Fraction(225351, 2)
    assert fw_cubic_bound(21).to_json()["value"] == 112675.5
    with pytest.raises(BoundError):
        fw_cubic_bound(2)


def test_el_examples():
    assert el_lower_bound(4).value == 41
    assert el_lower_bound(1).value == 1
    assert el_lower_bound(3).value == 10


def test_el_matches_high_precision():
    mpmath.mp.dps = 200
    for k in range(1, 31):
        expected = int(mpmath.floor((mpmath.e - 1) * mpmath.factorial(k)))
        assert el_lower_bound(k).value == expected


def test_printed_form_matches_sympy_expansion():
    assert expanded_form_matches()
    assert sympy.expand(F_SYMPY - _to_sympy(F_EXPANDED)) == 0
    assert sympy.expand(F_SYMPY - _to_sympy(f_poly_symbolic())) == 0


def test_f_at_t_equals_s():
    assert sympy.expand(F_SYMPY.subs(t_, s_) - _to_sympy(F_AT_T_EQUALS_S)) == 0
    for s in range(2, 51):
        assert f_poly(s, s).value == Fraction(73, 6) * s**3 - Fraction(19, 2) * s**2 + Fraction(22, 3) * s


def test_derivative_at_minimum():
    expected = sympy.Rational(2, 15) * (6 * s_**2 - 123 * s_ - 14)
    via_sympy = sympy.diff(F_SYMPY, t_).subs(t_, (4 * s_ - 1) / 5)
    assert sympy.expand(via_sympy - expected) == 0
    assert sympy.expand(_to_sympy(f_prime_at_minimum()) - expected) == 0
    assert all(f_prime_at_minimum()(s, 0) > 0 for s in range(21, 60))


def test_max_over_t_below_cubic_bound():
    for s in range(3, 21):
        assert f_max_over_t(s) < fw_cubic_bound(s).value
    assert f_max_over_t(3) == max(f_poly(3, t).value for t in range(4))


def test_f_poly_range():
    with pytest.raises(BoundError):
        f_poly(3, 4)
    with pytest.raises(BoundError):
        f_poly(1, 0)


def test_poly_arithmetic():
    p = (S + T) ** 2
    assert p == S**2 + 2 * S * T + T**2
    assert p.d_dt() == 2 * S + 2 * T
    assert p(Fraction(1, 2), 3) == Fraction(49, 4)
    assert (p - p) == 0


def test_anchors():
    a = misc_anchors()
    assert a["graph_bound_C(2s+1,2)"] == {1: 3, 2: 10}
    assert a["conjectured_C(3s+2,3)"] == {1: 10, 2: 56}
    assert a["C(7,4)"] == 35 and a["m(4,1)_interval"] == [42, 175]
    assert binom_2k_minus_t(4, 2).value == 15
    with pytest.raises(BoundError):
        binom_2k_minus_t(3, 3)


def test_re_evaluation_is_identical():
    assert f_poly(7, 3) == f_poly(7, 3)
    assert f_poly(7, 3).to_json() == f_poly(7, 3).to_json()
