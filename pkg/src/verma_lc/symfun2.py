"""Two-variable Hall-Littlewood, Jack and Macdonald polynomials.

P_{(a,b)}(x, y) = sum_i c_i x^{b+i} y^{a-i}, i = 0..a-b. The ``*_coefficients``
functions only use field operations, so they accept Fractions as well as
symbolic parameters (for instance sympy symbols); the polynomial builders
require exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .exact_poly import SparsePoly, as_rational
from .lorentz_cert import CertificationReport, coefficient_line_log_concave


def _check_shape(a: int, b: int) -> int:
    if not (isinstance(a, int) and isinstance(b, int)) or b < 0 or a < b:
        raise ValueError(f"({a}, {b}) is not a partition with at most two parts")
    return a - b


def _is_zero(value) -> bool:
    try:
        return value == 0
    except TypeError:
        return False


def _field(x):
    # keep integer inputs exact under true division
    return Fraction(x) if isinstance(x, int) else x


def _from_coefficients(a: int, b: int, coeffs: Sequence) -> SparsePoly:
    terms = {(b + i, a - i): as_rational(c) for i, c in enumerate(coeffs)}
    return SparsePoly(2, terms)


def rising(tau, k: int):
    """(tau)_k = tau (tau+1) ... (tau+k-1)."""
    out = 1
    for j in range(k):
        out = out * (tau + j)
    return out


def q_binomial(m: int, i: int, q):
    """Gaussian binomial [m choose i]_q as a polynomial expression in q."""
    if i < 0 or i > m:
        return 0
    row = [1]
    for n in range(1, m + 1):
        new = [1] * (n + 1)
        for k in range(1, n):
            new[k] = row[k - 1] + q**k * row[k]
        row = new
    return row[i]


def schur_coefficients(a: int, b: int) -> list:
    return [1] * (_check_shape(a, b) + 1)


def hall_littlewood_coefficients(a: int, b: int, t) -> list:
    m = _check_shape(a, b)
    if m <= 1:
        return [1] * (m + 1)
    t = _field(t)
    return [1] + [1 - t] * (m - 1) + [1]


def jack_coefficients(a: int, b: int, tau) -> list:
    m = _check_shape(a, b)
    tau = _field(tau)
    denom = _field(rising(tau, m))
    if _is_zero(denom):
        raise ZeroDivisionError(f"(tau)_{m} vanishes at tau = {tau}")
    return [factorial(m) * rising(tau, i) * rising(tau, m - i) / (factorial(i) * factorial(m - i) * denom) for i in range(m + 1)]


def _tail(t, q, k: int):
    # (t;q)_k / (1 - t) for k >= 1, that is prod_{j=1}^{k-1} (1 - t q^j)
    out = 1
    for j in range(1, k):
        out = out * (1 - t * q**j)
    return out


def macdonald_coefficients(a: int, b: int, q, t) -> list:
    """Coefficients [(q;q)_m / ((q;q)_i (q;q)_{m-i})] [(t;q)_i (t;q)_{m-i} / (t;q)_m].

    The common factors (1 - t) are cancelled and the q-binomial is expanded,
    so t = 1 and q = 1 are allowed whenever the reduced expression is defined.
    """
    m = _check_shape(a, b)
    if m == 0:
        return [1]
    q, t = _field(q), _field(t)
    denom = _field(_tail(t, q, m))
    if _is_zero(denom):
        raise ZeroDivisionError(f"(t;q)_{m} has a vanishing factor 1 - t q^j at q = {q}, t = {t}")
    out = []
    for i in range(m + 1):
        num = (_tail(t, q, i) if i else 1) * (_tail(t, q, m - i) if m - i else 1)
        if 0 < i < m:
            num = num * (1 - t)
        out.append(q_binomial(m, i, q) * num / denom)
    return out


def schur(a: int, b: int) -> SparsePoly:
    return _from_coefficients(a, b, schur_coefficients(a, b))


def monomial_symmetric(a: int, b: int) -> SparsePoly:
    _check_shape(a, b)
    return SparsePoly(2, {(a, b): 1, (b, a): 1})


def hall_littlewood(a: int, b: int, t) -> SparsePoly:
    return _from_coefficients(a, b, hall_littlewood_coefficients(a, b, as_rational(t)))


def jack(a: int, b: int, tau) -> SparsePoly:
    return _from_coefficients(a, b, jack_coefficients(a, b, as_rational(tau)))


def macdonald(a: int, b: int, q, t) -> SparsePoly:
    return _from_coefficients(a, b, macdonald_coefficients(a, b, as_rational(q), as_rational(t)))


def family_polynomial(family: str, a: int, b: int, params: dict) -> SparsePoly:
    family = family.lower()
    if family == "schur":
        return schur(a, b)
    if family in ("hl", "hall_littlewood"):
        return hall_littlewood(a, b, params["t"])
    if family == "jack":
        return jack(a, b, params["tau"])
    if family in ("mac", "macdonald"):
        return macdonald(a, b, params["q"], params["t"])
    raise ValueError(f"unknown family {family!r}")


def specialization_check(a: int, b: int, samples: Iterable) -> CertificationReport:
    """Macdonald at q = t, q = 0 and t = 1, and Jack at tau = 1, against their known values."""
    s = schur(a, b)
    checked = []
    for value in samples:
        v = as_rational(value)
        cases = [
            ("macdonald q=t", lambda: macdonald(a, b, v, v), lambda: s),
            ("macdonald q=0", lambda: macdonald(a, b, 0, v), lambda: hall_littlewood(a, b, v)),
            ("macdonald t=1", lambda: macdonald(a, b, v, 1), lambda: monomial_symmetric(a, b)),
        ]
        for name, lhs, rhs in cases:
            try:
                left = lhs()
            except ZeroDivisionError:
                continue
            if left != rhs():
                return CertificationReport(False, {"identity": name, "sample": v, "got": str(left), "expected": str(rhs())})
            checked.append((name, v))
    if jack(a, b, 1) != s:
        return CertificationReport(False, {"identity": "jack tau=1", "got": str(jack(a, b, 1)), "expected": str(s)})
    return CertificationReport(True, details={"checked": len(checked) + 1})


def _line(p: SparsePoly) -> list[Fraction]:
    if p.num_vars != 2:
        raise ValueError("expected a polynomial in two variables")
    degs = {sum(e) for e, _ in p.items()}
    if len(degs) > 1:
        raise ValueError("polynomial is not homogeneous")
    if p.is_zero():
        return []
    xs = [e[0] for e, _ in p.items()]
    return [p.coeff((i, next(iter(degs)) - i)) for i in range(min(xs), max(xs) + 1)]


def coeff_log_concavity(p: SparsePoly) -> CertificationReport:
    """c_i^2 >= c_{i-1} c_{i+1} along the coefficients of a binary form (ordered by x-degree)."""
    return coefficient_line_log_concave(_line(p))


def okounkov_difference(family: str, params: dict, triple, points: Iterable = ()) -> tuple[SparsePoly, CertificationReport]:
    """P_nu^2 - P_lam P_mu for lam + mu = 2 nu, with evaluations at positive rational points.

    ``triple`` is (lam, mu, nu). The report fails at the first point where the
    difference is negative.
    """
    lam, mu, nu = (tuple(int(x) for x in s) for s in triple)
    for s in (lam, mu, nu):
        if len(s) != 2:
            raise ValueError("shapes must have two parts")
        _check_shape(*s)
    if tuple(x + y for x, y in zip(lam, mu)) != tuple(2 * z for z in nu):
        raise ValueError("triple must satisfy lam + mu = 2 nu")
    P = lambda s: family_polynomial(family, s[0], s[1], params)
    diff = P(nu) * P(nu) - P(lam) * P(mu)
    values = []
    for pt in points:
        pt = [as_rational(x) for x in pt]
        val = diff.evaluate(pt)
        values.append((pt, val))
        if val < 0:
            return diff, CertificationReport(False, {"point": pt, "value": val}, details={"evaluated": len(values)})
    return diff, CertificationReport(True, details={"evaluated": len(values)})
