from fractions import Fraction
import math

import pytest

import cbs


def test_sequences():
    assert [cbs.b(n) for n in range(6)] == [1, 2, 4, 10, 32, 126]
    assert all(cbs.a(n) == cbs.b(n) for n in range(15))
    assert cbs.b_explicit(10) == 1002212
    assert all(cbs.alternating_sum(n) == 0 for n in range(1, 12))


def test_poly_bernoulli():
    assert cbs.poly_bernoulli(1, 1) == Fraction(1, 2)
    assert cbs.poly_bernoulli(4, 2) == Fraction(7, 450)
    assert cbs.poly_bernoulli(2, -1) == 4
    assert sum(cbs.poly_bernoulli(5 - k, -k) for k in range(6)) == cbs.b(5)


def test_polynomials():
    assert cbs.p(2) == [7, 8]
    assert cbs.q(2) == [1, 10, 4]
    assert cbs.p(-1) == []
    assert cbs.F(3) == [[0, 0, 0, 1], [0, 1, 3], [0, 1]]
    assert cbs.F_at_y(2, Fraction(1, 2)) == [Fraction(1, 4), Fraction(1, 2)]
    assert cbs.s_eulerian([1, 2, 3]) == [1, 4, 1]
    assert cbs.eulerian_number(5, 2) == 66


def test_zeta_and_numerics():
    r, s = cbs.zeta(0)
    assert (r, s) == (Fraction(1, 3), Fraction(2, 9))
    exact = float(r) + float(s) * math.pi / math.sqrt(3)
    assert abs(exact - cbs.dirichlet_partial_sum(0, 60)) < 1e-12
    assert abs(cbs.series_partial_sum(-1, 0.3, 60) - cbs.closed_form_rhs(-1, 0.3)) < 1e-12
    assert cbs.q_egf_closed(0.2, 0.0) == 1.0
    with pytest.raises(ValueError):
        cbs.a_egf_closed(2.0)


def test_errors():
    with pytest.raises(cbs.SizeError):
        cbs.s_eulerian([100, 100, 100, 100])
    with pytest.raises(ValueError):
        cbs.verify("nosuch")


def test_verify():
    results = cbs.verify("stephan")
    assert results and all(r["passed"] for r in results)
    assert "all" in cbs.suite_names()
