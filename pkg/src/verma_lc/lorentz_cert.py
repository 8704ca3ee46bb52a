"""Exact certification of M-convexity, Lorentzianity and log-concavity.

Every check returns a :class:`CertificationReport`; a negative verdict always
carries a witness that can be re-checked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .exact_poly import SparsePoly, as_rational, exp_factorial, format_rational, normalize, support_and_degree


@dataclass(frozen=True)
class CertificationReport:
    verdict: bool
    witness: dict | None = None
    note: str | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.verdict and self.witness is None:
            raise ValueError("a failing report needs a witness")

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "witness": _jsonable(self.witness)}
        if self.note:
            out["note"] = self.note
        if self.details:
            out["details"] = _jsonable(self.details)
        return out


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    return obj


def all_directions(m: int) -> list[tuple[int, int]]:
    """Every root direction e_i - e_j, i < j, as 1-based index pairs."""
    return [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]


def _check_directions(dirs, m):
    out = []
    for i, j in dirs:
        if i == j:
            raise ValueError(f"direction ({i}, {j}) is not a root")
        if not (1 <= i <= m and 1 <= j <= m):
            raise ValueError(f"direction ({i}, {j}) out of range for {m} variables")
        out.append((i, j))
    return out


# -- M-convexity ------------------------------------------------------------


def is_mconvex(support: Iterable[Sequence[int]]) -> CertificationReport:
    """Exchange-axiom check over all pairs of support points.

    Indices in the witness are 1-based.
    """
    pts = sorted({tuple(int(x) for x in p) for p in support}, reverse=True)
    if not pts:
        return CertificationReport(True, note="empty support")
    m = len(pts[0])
    if any(len(p) != m for p in pts):
        raise ValueError("support points have unequal lengths")
    if any(x < 0 for p in pts for x in p):
        raise ValueError("M-convexity is defined for nonnegative exponent vectors")
    members = set(pts)
    arr = np.array(pts, dtype=np.int64)
    for alpha in pts:
        diff = arr - np.array(alpha, dtype=np.int64)
        # valid[i, j]: alpha - e_i + e_j lies in the support
        valid = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            if alpha[i] == 0:
                continue
            for j in range(m):
                if j != i:
                    cand = list(alpha)
                    cand[i] -= 1
                    cand[j] += 1
                    valid[i, j] = tuple(cand) in members
        # row b, index i: beta_b[i] < alpha[i] needs some valid j with beta_b[j] > alpha[j]
        reachable = (diff > 0).astype(np.int64) @ valid.T
        bad = (diff < 0) & (reachable == 0)
        if bad.any():
            b, i = (int(x) for x in np.argwhere(bad)[0])
            return CertificationReport(
                False,
                witness={"reason": "exchange failure", "alpha": list(alpha), "beta": [int(x) for x in arr[b]], "i": i + 1},
            )
    return CertificationReport(True)


# -- eigenvalue counting ----------------------------------------------------


def _as_matrix(Q) -> list[list[Fraction]]:
    rows = [[as_rational(x) if not isinstance(x, Fraction) else x for x in row] for row in Q]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix is not symmetric")
    return rows


def _integer_scaled(rows: list[list[Fraction]]) -> tuple[tuple[int, ...], ...]:
    d = 1
    for r in rows:
        for x in r:
            d = lcm(d, x.denominator)
    return tuple(tuple(int(x * d) for x in r) for r in rows)


def charpoly_int(A: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of det(tI - A), leading first, by Faddeev-LeVerrier over Z."""
    n = len(A)
    coeffs = [1]
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        for i in range(n):
            M[i][i] += c
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier division is not exact")
        c = -tr // k
        coeffs.append(c)
        M = AM
    return coeffs


def sign_variations(coeffs: Iterable[int]) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@lru_cache(maxsize=1 << 16)
def _pos_count_cached(A: tuple[tuple[int, ...], ...]) -> int:
    return sign_variations(charpoly_int(A))


def _drop_zero_lines(A):
    keep = [i for i, row in enumerate(A) if any(row)]
    return tuple(tuple(A[i][j] for j in keep) for i in keep)


def positive_eigenvalue_count(Q) -> int:
    """Number of positive eigenvalues (with multiplicity) of a rational symmetric matrix.

    Uses Descartes' rule on the characteristic polynomial, which is exact
    because symmetric matrices have real spectra.
    """
    rows = _as_matrix(Q)
    if not rows:
        return 0
    return _pos_count_cached(_drop_zero_lines(_integer_scaled(rows)))


def inertia_congruence(Q) -> tuple[int, int, int]:
    """(positive, negative, zero) counts via symmetric Gaussian elimination."""
    A = [row[:] for row in _as_matrix(Q)]
    n = len(A)
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if A[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i < j and A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j gives diagonal 2 A[i][j] != 0
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            p = i
        d = A[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            f = A[i][p] / d
            if f:
                for k in active:
                    A[i][k] -= f * A[p][k]
        for i in active:
            A[i][p] = A[p][i] = Fraction(0)
    return pos, neg, n - pos - neg


# -- Lorentzian polynomials -------------------------------------------------


def _hessian_after_derivatives(terms: dict, beta: tuple, m: int) -> list[list[Fraction]]:
    """Hessian of the quadratic d^beta h: entry (i, j) is c_{beta+e_i+e_j} (beta+e_i+e_j)!."""
    H = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            mu = list(beta)
            mu[i] += 1
            mu[j] += 1
            mu = tuple(mu)
            c = terms.get(mu)
            if c:
                H[i][j] = H[j][i] = c * exp_factorial(mu)
    return H


def _scaled_coefficients(terms: dict) -> dict:
    """c_mu mu! for every term, multiplied by one positive integer so all values are integers."""
    vals = {mu: c * exp_factorial(mu) for mu, c in terms.items()}
    d = 1
    for v in vals.values():
        d = lcm(d, v.denominator)
    return {mu: int(v * d) for mu, v in vals.items()}


def _int_hessian(scaled: dict, beta: tuple, m: int) -> tuple[tuple[int, ...], ...]:
    H = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            mu = list(beta)
            mu[i] += 1
            mu[j] += 1
            v = scaled.get(tuple(mu), 0)
            H[i][j] = H[j][i] = v
    return _drop_zero_lines(H)


def is_lorentzian(h: SparsePoly) -> CertificationReport:
    if h.is_zero():
        return CertificationReport(True, note="zero polynomial is Lorentzian by convention")
    terms = h.terms
    for e, c in sorted(terms.items()):
        if c < 0:
            return CertificationReport(False, witness={"reason": "negative coefficient", "exp": list(e), "coeff": c})
        if min(e) < 0:
            return CertificationReport(False, witness={"reason": "negative exponent", "exp": list(e)})
    support, homogeneous, d = support_and_degree(h)
    if not homogeneous:
        return CertificationReport(False, witness={"reason": "non-homogeneous"})
    mc = is_mconvex(support)
    if not mc.verdict:
        return CertificationReport(False, witness=mc.witness)
    if d <= 1:
        return CertificationReport(True, note=f"degree {d}")
    m = h.num_vars
    # only multisets beta with some beta + e_i + e_j in the support give a nonzero quadratic
    betas = set()
    for mu in support:
        for i in range(m):
            if mu[i] == 0:
                continue
            for j in range(i, m):
                if mu[j] - (i == j) < 1:
                    continue
                b = list(mu)
                b[i] -= 1
                b[j] -= 1
                betas.add(tuple(b))
    scaled = _scaled_coefficients(terms)
    for beta in sorted(betas):
        # a positive rescaling does not change the inertia
        k = _pos_count_cached(_int_hessian(scaled, beta, m))
        if k > 1:
            H = _hessian_after_derivatives(terms, beta, m)
            return CertificationReport(
                False,
                witness={
                    "reason": "quadratic form with more than one positive eigenvalue",
                    "beta": list(beta),
                    "hessian": H,
                    "positive_eigenvalues": k,
                },
            )
    return CertificationReport(True, details={"quadratics_checked": len(betas)})


def is_denormalized_lorentzian(h: SparsePoly) -> CertificationReport:
    return is_lorentzian(normalize(h))


# -- log-concavity ----------------------------------------------------------


def is_discretely_log_concave(h: SparsePoly, dirs: Iterable[tuple[int, int]] | None = None) -> CertificationReport:
    """Check c_mu^2 >= c_{mu+e_i-e_j} c_{mu-e_i+e_j} along the given (1-based) directions.

    The first violation in lexicographic order of (mu, direction) is reported.
    """
    if h.is_zero():
        return CertificationReport(True, note="zero polynomial")
    m = h.num_vars
    dirs = _check_directions(all_directions(m) if dirs is None else dirs, m)
    terms = h.terms
    if any(c < 0 for c in terms.values()):
        raise ValueError("discrete log-concavity is defined for nonnegative coefficients")
    _, homogeneous, _ = support_and_degree(h)
    if not homogeneous:
        raise ValueError("discrete log-concavity is defined for homogeneous polynomials")
    candidates = []
    for i, j in dirs:
        for s in terms:
            mu = list(s)
            mu[i - 1] -= 1
            mu[j - 1] += 1
            candidates.append((tuple(mu), (i, j)))
    for mu, (i, j) in sorted(set(candidates)):
        up = list(mu)
        up[i - 1] += 1
        up[j - 1] -= 1
        down = list(mu)
        down[i - 1] -= 1
        down[j - 1] += 1
        c = terms.get(mu, Fraction(0))
        lhs = c * c
        rhs = terms.get(tuple(up), Fraction(0)) * terms.get(tuple(down), Fraction(0))
        if lhs < rhs:
            return CertificationReport(
                False,
                witness={
                    "mu": list(mu),
                    "i": i,
                    "j": j,
                    "c_mu_squared": lhs,
                    "neighbor_product": rhs,
                    "c_mu": c,
                    "c_plus": terms.get(tuple(up), Fraction(0)),
                    "c_minus": terms.get(tuple(down), Fraction(0)),
                },
            )
    return CertificationReport(True)


def _gradient_hessian(h: SparsePoly, point: list[Fraction]):
    m = h.num_vars
    val = Fraction(0)
    grad = [Fraction(0)] * m
    hess = [[Fraction(0)] * m for _ in range(m)]
    for e, c in h.terms.items():
        mono = c
        for x, k in zip(point, e):
            mono *= x**k
        val += mono
        for i in range(m):
            if e[i]:
                gi = mono * e[i] / point[i]
                grad[i] += gi
                for j in range(i, m):
                    if i == j:
                        if e[i] >= 2:
                            hess[i][i] += mono * e[i] * (e[i] - 1) / (point[i] ** 2)
                    elif e[j]:
                        hess[i][j] += gi * e[j] / point[j]
    for i in range(m):
        for j in range(i + 1, m):
            hess[j][i] = hess[i][j]
    return val, grad, hess


def continuous_lc_spot_check(h: SparsePoly, point: Sequence) -> CertificationReport:
    """Exact test that log h is concave at one rational point of the positive orthant.

    Uses that h * Hess(h) - grad(h) grad(h)^T must be negative semidefinite
    wherever h > 0.
    """
    pt = [as_rational(x) for x in point]
    if len(pt) != h.num_vars:
        raise ValueError("point has wrong length")
    if any(x <= 0 for x in pt):
        raise ValueError("spot checks need a point with positive coordinates")
    if any(min(e) < 0 for e in h.terms):
        raise ValueError("continuous log-concavity is checked for polynomials only")
    val, grad, hess = _gradient_hessian(h, pt)
    if val == 0:
        return CertificationReport(True, note="h vanishes at the point; vacuous")
    if val < 0:
        return CertificationReport(False, witness={"reason": "h negative at point", "point": pt, "value": val})
    m = h.num_vars
    M = [[val * hess[i][j] - grad[i] * grad[j] for j in range(m)] for i in range(m)]
    k = positive_eigenvalue_count(M)
    if k:
        return CertificationReport(
            False, witness={"point": pt, "matrix": M, "positive_eigenvalues": k}
        )
    return CertificationReport(True, details={"matrix": M})


def coefficient_line_log_concave(coeffs: Sequence[Fraction]) -> CertificationReport:
    """c_i^2 >= c_{i-1} c_{i+1} along a finite sequence (zero-padded)."""
    cs = [as_rational(c) for c in coeffs]
    for i in range(len(cs)):
        left = cs[i - 1] if i > 0 else Fraction(0)
        right = cs[i + 1] if i + 1 < len(cs) else Fraction(0)
        if cs[i] * cs[i] < left * right:
            return CertificationReport(
                False, witness={"index": i, "c": cs[i], "c_prev": left, "c_next": right}
            )
    return CertificationReport(True)


__all__ = [
    "CertificationReport",
    "all_directions",
    "is_mconvex",
    "positive_eigenvalue_count",
    "inertia_congruence",
    "charpoly_int",
    "is_lorentzian",
    "is_denormalized_lorentzian",
    "is_discretely_log_concave",
    "continuous_lc_spot_check",
    "coefficient_line_log_concave",
]
