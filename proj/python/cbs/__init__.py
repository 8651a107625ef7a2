"""Exact central binomial series, Eulerian and poly-Bernoulli computations."""

from fractions import Fraction

from . import _cbs
from ._cbs import (
    PoleError,
    SizeError,
    a_egf_closed,
    a_egf_truncated,
    closed_form_rhs,
    dirichlet_partial_sum,
    p_egf_closed,
    p_egf_truncated,
    q_egf_closed,
    q_egf_truncated,
    series_partial_sum,
    suite_names,
    verify,
)

__all__ = [
    "PoleError",
    "SizeError",
    "F",
    "F_at_y",
    "a",
    "a_egf_closed",
    "a_egf_truncated",
    "alternating_sum",
    "b",
    "b_explicit",
    "closed_form_rhs",
    "dirichlet_partial_sum",
    "eulerian_number",
    "p",
    "p_egf_closed",
    "p_egf_truncated",
    "poly_bernoulli",
    "q",
    "q_egf_closed",
    "q_egf_truncated",
    "s_eulerian",
    "series_partial_sum",
    "suite_names",
    "verify",
    "zeta",
]


def _coeffs(values):
    return [Fraction(v) for v in values]


def b(n: int) -> int:
    """Antidiagonal sum of poly-Bernoulli numbers of negative index."""
    return int(_cbs.b(n))


def a(n: int) -> int:
    return int(_cbs.a(n))


def b_explicit(n: int) -> int:
    return int(_cbs.b_explicit(n))


def poly_bernoulli(n: int, k: int) -> Fraction:
    """B_n^(k) for any integer k."""
    return Fraction(_cbs.poly_bernoulli(n, k))


def alternating_sum(n: int) -> Fraction:
    return Fraction(_cbs.alternating_sum(n))


def zeta(k: int) -> tuple[Fraction, Fraction]:
    """(r, s) with zeta_CB(-k) = r + s*pi/sqrt(3)."""
    r, s = _cbs.zeta(k)
    return Fraction(r), Fraction(s)


def p(k: int) -> list[Fraction]:
    """Coefficients of p_k, constant term first."""
    return _coeffs(_cbs.p(k))


def q(k: int) -> list[Fraction]:
    return _coeffs(_cbs.q(k))


def F(n: int) -> list[list[Fraction]]:
    """Row i holds the coefficients of x^i as a polynomial in y."""
    return [_coeffs(row) for row in _cbs.F(n)]


def F_at_y(n: int, y) -> list[Fraction]:
    return _coeffs(_cbs.F_at_y(n, str(Fraction(y))))


def s_eulerian(bounds) -> list[Fraction]:
    return _coeffs(_cbs.s_eulerian(list(bounds)))


def eulerian_number(n: int, k: int) -> int:
    return int(_cbs.eulerian_number(n, k))
