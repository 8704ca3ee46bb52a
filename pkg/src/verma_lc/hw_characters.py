"""Weight multiplicities of Verma, finite-dimensional, parabolic Verma and
higher-order Verma modules, their finite shifted character polynomials, and
log-concavity scans over boxes of weights.

Internally a weight mu is described by its coordinates c relative to the
highest weight: lambda - mu = sum over nodes of c_node * alpha_node, with c
listed in the node order of :meth:`SemisimpleSpec.nodes`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Sequence

import numpy as np

from .exact_poly import SparsePoly
from .lie_structure import (
    Root,
    SemisimpleSpec,
    Weight,
    as_node,
    components,
    graph_GJ,
    is_dominant_integral,
    is_independent,
    is_J_dominant,
    positive_roots,
    trace_zero_eps,
)
from .lorentz_cert import CertificationReport
from .partition_fn import DirectedMultigraph, graph_kpf_table, kpf_at_coords, shifted_char_polynomial


class PipelineMismatch(RuntimeError):
    """The two parabolic multiplicity pipelines disagree (an internal error)."""


class LimitExceeded(ValueError):
    """A scan or enumeration exceeds the configured size budget."""


DEFAULT_BOX_LIMIT = 200_000


# -- coordinates ------------------------------------------------------------


def _block_coords(n: int, d: Sequence[Fraction]) -> tuple[Fraction, ...]:
    # inverse Cartan matrix of A_n: min(i,j) (n+1-max(i,j)) / (n+1)
    return tuple(
        sum(Fraction(min(i, j) * (n + 1 - max(i, j)), n + 1) * d[j - 1] for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def root_coords(spec: SemisimpleSpec, lam: Weight, mu: Weight) -> tuple[Fraction, ...]:
    """Coordinates c with lambda - mu = sum c_i alpha_i (rational in general)."""
    lam.check_spec(spec)
    mu.check_spec(spec)
    out: list[Fraction] = []
    for t, n in enumerate(spec.block_sizes):
        d = [a - b for a, b in zip(lam.h[t], mu.h[t])]
        out.extend(_block_coords(n, d))
    return tuple(out)


def integer_coords(spec: SemisimpleSpec, lam: Weight, mu: Weight) -> tuple[int, ...] | None:
    c = root_coords(spec, lam, mu)
    if any(x.denominator != 1 for x in c):
        return None
    return tuple(int(x) for x in c)


def weight_at(spec: SemisimpleSpec, lam: Weight, c: Sequence[int]) -> Weight:
    """The weight lambda - sum c_i alpha_i."""
    return lam.minus_roots(spec, dict(zip(spec.nodes(), c)))


def _split(spec: SemisimpleSpec, c: Sequence) -> list[tuple]:
    out, pos = [], 0
    for n in spec.block_sizes:
        out.append(tuple(c[pos : pos + n]))
        pos += n
    return out


def _complete(n: int) -> DirectedMultigraph:
    return _complete_cached(n)


@lru_cache(maxsize=None)
def _complete_cached(n: int) -> DirectedMultigraph:
    return DirectedMultigraph.complete(n + 1)


def kpf_typeA(n: int, c: Sequence[int]) -> int:
    """Kostant partition function of sl_{n+1} at sum c_i alpha_i."""
    return kpf_at_coords(_complete(n), c)


# -- Weyl group shifts --------------------------------------------------------


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@lru_cache(maxsize=4096)
def _weyl_shifts(n: int, h: tuple, comps: tuple) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """(sign(w), coordinates of (lambda+rho) - w(lambda+rho)) for w in the parabolic subgroup.

    ``comps`` lists node intervals (a, b) of one block; w permutes the epsilon
    indices a..b+1 of each interval independently.
    """
    x = trace_zero_eps([Fraction(v) + 1 for v in h])
    groups = []
    for a, b in comps:
        idx = list(range(a - 1, b + 1))
        groups.append([(_perm_sign(p), [idx[k] for k in p]) for p in permutations(range(len(idx)))])
    out = []
    for choice in product(*groups) if groups else [()]:
        y = list(x)
        sign = 1
        for (s, perm), (a, b) in zip(choice, comps):
            sign *= s
            for pos, src in zip(range(a - 1, b + 1), perm):
                y[pos] = x[src]
        diff = [u - v for u, v in zip(x, y)]
        coords, s = [], Fraction(0)
        for v in diff[:-1]:
            s += v
            if s.denominator != 1:
                raise ValueError("lambda is not integral on the parabolic nodes")
            coords.append(int(s))
        out.append((sign, tuple(coords)))
    return tuple(out)


def _alternating_block(n: int, h: tuple, comps: tuple, c: tuple[int, ...]) -> int:
    total = 0
    for sign, shift in _weyl_shifts(n, h, comps):
        cc = tuple(a - b for a, b in zip(c, shift))
        # w . lambda - mu = (lambda - mu) - ((lambda+rho) - w(lambda+rho))
        if min(cc, default=0) < 0:
            continue
        total += sign * kpf_typeA(n, cc)
    return total


def _block_components(spec: SemisimpleSpec, J) -> list[tuple]:
    comps = components(spec, J)
    return [tuple((a, b) for (t, a, b) in comps if t == s) for s in range(1, spec.T + 1)]


# -- multiplicities in coordinates -------------------------------------------


def verma_mult_coords(spec: SemisimpleSpec, c: Sequence[int]) -> int:
    if any(x < 0 for x in c):
        return 0
    out = 1
    for n, cb in zip(spec.block_sizes, _split(spec, c)):
        out *= kpf_typeA(n, cb)
        if not out:
            return 0
    return out


def findim_mult_coords(spec: SemisimpleSpec, lam: Weight, c: Sequence[int]) -> int:
    if any(x < 0 for x in c):
        return 0
    out = 1
    for n, h, cb in zip(spec.block_sizes, lam.h, _split(spec, c)):
        out *= _alternating_block(n, tuple(h), ((1, n),), cb)
        if not out:
            return 0
    return out


def parabolic_mult_alternating(spec: SemisimpleSpec, lam: Weight, J, c: Sequence[int]) -> int:
    """W_J alternating sum of Verma multiplicities."""
    if any(x < 0 for x in c):
        return 0
    out = 1
    for n, h, comps, cb in zip(spec.block_sizes, lam.h, _block_components(spec, J), _split(spec, c)):
        out *= _alternating_block(n, tuple(h), comps, cb)
        if not out:
            return 0
    return out


@lru_cache(maxsize=4096)
def _component_findim(h: tuple, d: tuple) -> int:
    m = len(h)
    return _alternating_block(m, h, ((1, m),), d)


@lru_cache(maxsize=4096)
def _component_lowest(h: tuple) -> tuple[int, ...]:
    """Coordinates of lambda - w0(lambda) for a finite-dimensional component."""
    x = trace_zero_eps(list(h))
    diff = [a - b for a, b in zip(x, reversed(x))]
    out, s = [], Fraction(0)
    for v in diff[:-1]:
        s += v
        out.append(int(s))
    return tuple(out)


def _levi_weights(n: int, h: tuple, comps: tuple, cap: Sequence[int] | None = None):
    """Yield (d, multiplicity) over weights lambda - sum d alpha of the Levi module V_J(lambda) of one block."""
    ranges = []
    for a, b in comps:
        low = _component_lowest(tuple(h[a - 1 : b]))
        per = []
        for k, node in enumerate(range(a, b + 1)):
            top = low[k] if cap is None else min(low[k], cap[node - 1])
            per.append(range(top + 1))
        ranges.append(list(product(*per)))
    for choice in product(*ranges):
        m = 1
        d = [0] * n
        for (a, b), dd in zip(comps, choice):
            m *= _component_findim(tuple(h[a - 1 : b]), tuple(dd))
            if not m:
                break
            d[a - 1 : b] = dd
        if m:
            yield tuple(d), m


def parabolic_mult_factorized(spec: SemisimpleSpec, lam: Weight, J, c: Sequence[int]) -> int:
    """Convolution of the restricted KPF of G_J with the Levi character."""
    if any(x < 0 for x in c):
        return 0
    J = spec.node_set(J)
    out = 1
    for t, (n, h, comps, cb) in enumerate(zip(spec.block_sizes, lam.h, _block_components(spec, J), _split(spec, c)), 1):
        G = graph_GJ(n, [i for (s, i) in J if s == t])
        total = 0
        for d, m in _levi_weights(n, tuple(h), comps, cap=cb):
            rest = tuple(a - b for a, b in zip(cb, d))
            total += m * kpf_at_coords(G, rest)
        out *= total
        if not out:
            return 0
    return out


def parabolic_mult_coords(spec: SemisimpleSpec, lam: Weight, J, c: Sequence[int]) -> int:
    a = parabolic_mult_factorized(spec, lam, J, c)
    b = parabolic_mult_alternating(spec, lam, J, c)
    if a != b:
        raise PipelineMismatch(f"parabolic pipelines disagree at coordinates {tuple(c)}: {a} != {b}")
    return a


def hole_shift(spec: SemisimpleSpec, lam: Weight, H) -> tuple[int, ...]:
    """Coordinates of lambda - prod_{i in H} s_i . lambda, i.e. (lambda(h_i)+1) on H."""
    H = spec.node_set(H)
    out = []
    for node in spec.nodes():
        if node in H:
            v = lam.value(node)
            if v.denominator != 1 or v < 0:
                raise ValueError(f"lambda(h) at hole node {node} must be a nonnegative integer")
            out.append(int(v) + 1)
        else:
            out.append(0)
    return tuple(out)


def hovm_single_hole_mult_coords(spec: SemisimpleSpec, lam: Weight, H, c: Sequence[int]) -> int:
    shift = hole_shift(spec, lam, H)
    return verma_mult_coords(spec, c) - verma_mult_coords(spec, [a - b for a, b in zip(c, shift)])


# -- public weight-level API --------------------------------------------------


def _coords_or_none(spec, lam, mu):
    c = integer_coords(spec, lam, mu)
    if c is None or min(c, default=0) < 0:
        return None
    return c


def verma_mult(spec: SemisimpleSpec, lam: Weight, mu: Weight) -> int:
    c = _coords_or_none(spec, lam, mu)
    return 0 if c is None else verma_mult_coords(spec, c)


def findim_mult(spec: SemisimpleSpec, lam: Weight, mu: Weight) -> int:
    if not is_dominant_integral(spec, lam):
        raise ValueError("finite-dimensional multiplicities need a dominant integral weight")
    c = _coords_or_none(spec, lam, mu)
    return 0 if c is None else findim_mult_coords(spec, lam, c)


def parabolic_mult(spec: SemisimpleSpec, lam: Weight, J, mu: Weight) -> int:
    if not is_J_dominant(spec, lam, J):
        raise ValueError("lambda must be J-dominant integral")
    c = _coords_or_none(spec, lam, mu)
    return 0 if c is None else parabolic_mult_coords(spec, lam, J, c)


def _check_hole(spec, lam, H):
    H = spec.node_set(H)
    if not H:
        raise ValueError("a hole must be nonempty")
    if not is_independent(spec, H):
        raise ValueError("hole must be an independent node set")
    hole_shift(spec, lam, H)
    return H


def hovm_single_hole_mult(spec: SemisimpleSpec, lam: Weight, H, mu: Weight) -> int:
    H = _check_hole(spec, lam, H)
    c = _coords_or_none(spec, lam, mu)
    return 0 if c is None else hovm_single_hole_mult_coords(spec, lam, H, c)


def sl2_blocks_mult_coords(spec: SemisimpleSpec, lam: Weight, H, c: Sequence[int]) -> int:
    H = _check_hole(spec, lam, H)
    blocks = {t for t, _ in H}
    for t in blocks:
        if spec.block_sizes[t - 1] != 1:
            raise ValueError(f"block {t} meets the hole but is not sl2")
    if any(x < 0 for x in c):
        return 0
    shift = hole_shift(spec, lam, H)
    factor = 1
    inside_second = True
    for node, x, s in zip(spec.nodes(), c, shift):
        if node[0] in blocks:
            inside_second = inside_second and x >= s
    for t, (n, cb) in enumerate(zip(spec.block_sizes, _split(spec, c)), 1):
        if t not in blocks:
            factor *= kpf_typeA(n, cb)
    return factor * (0 if inside_second else 1)


def hovm_sl2_blocks_mult(spec: SemisimpleSpec, lam: Weight, H, mu: Weight) -> int:
    c = integer_coords(spec, lam, mu)
    if c is None:
        _check_hole(spec, lam, H)
        return 0
    return sl2_blocks_mult_coords(spec, lam, H, c)


# -- hole families and modules ----------------------------------------------


@dataclass(frozen=True)
class HoleFamily:
    """A family of holes, reduced to its minimal members."""

    holes: tuple

    def __init__(self, spec: SemisimpleSpec, holes: Iterable):
        hs = [spec.node_set(h) for h in holes]
        if not hs:
            raise ValueError("a hole family needs at least one hole")
        for h in hs:
            if not h:
                raise ValueError("holes must be nonempty")
            if not is_independent(spec, h):
                raise ValueError(f"hole {sorted(h)} is not independent")
        uniq = set(hs)
        minimal = [h for h in uniq if not any(g < h for g in uniq)]
        object.__setattr__(self, "holes", tuple(sorted(minimal, key=lambda h: (len(h), sorted(h)))))

    @property
    def order(self) -> int:
        return max(len(h) for h in self.holes)


@dataclass(frozen=True)
class ModuleSpec:
    algebra: SemisimpleSpec
    lam: Weight
    kind: str
    J: frozenset = frozenset()
    holes: HoleFamily | None = None

    def __post_init__(self):
        self.lam.check_spec(self.algebra)
        if self.kind == "verma":
            pass
        elif self.kind == "findim":
            if not is_dominant_integral(self.algebra, self.lam):
                raise ValueError("findim module needs a dominant integral weight")
        elif self.kind == "parabolic":
            object.__setattr__(self, "J", self.algebra.node_set(self.J))
            if not is_J_dominant(self.algebra, self.lam, self.J):
                raise ValueError("lambda must be J-dominant integral")
        elif self.kind == "higher_order":
            if self.holes is None:
                raise ValueError("higher_order module needs holes")
            for h in self.holes.holes:
                _check_hole(self.algebra, self.lam, h)
        else:
            raise ValueError(f"unknown module kind {self.kind!r}")

    @classmethod
    def from_json(cls, data) -> ModuleSpec:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            spec = SemisimpleSpec(data["algebra"])
            lam = Weight.from_json(data["lambda"]) if "lambda" in data else Weight.zero(spec)
            kind = data.get("kind", "verma")
            J = frozenset(as_node(x) for x in data.get("J", []))
            holes = None
            if kind == "higher_order":
                holes = HoleFamily(spec, [[as_node(x) for x in h] for h in data["holes"]])
            return cls(spec, lam, kind, J, holes)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed module JSON: {exc}") from None

    def to_json(self) -> dict:
        out = {"algebra": list(self.algebra.block_sizes), "lambda": self.lam.to_json(), "kind": self.kind}
        if self.kind == "parabolic":
            out["J"] = [list(x) for x in sorted(self.J)]
        if self.holes is not None:
            out["holes"] = [[list(x) for x in sorted(h)] for h in self.holes.holes]
        return out

    def mult_coords(self, c: Sequence[int]) -> int:
        spec, lam = self.algebra, self.lam
        if self.kind == "verma":
            return verma_mult_coords(spec, c)
        if self.kind == "findim":
            return findim_mult_coords(spec, lam, c)
        if self.kind == "parabolic":
            return parabolic_mult_coords(spec, lam, self.J, c)
        return hovm_family_mult_coords(spec, lam, self.holes, c)

    def mult(self, mu: Weight) -> int:
        c = _coords_or_none(self.algebra, self.lam, mu)
        return 0 if c is None else self.mult_coords(c)


def hovm_family_mult_coords(spec: SemisimpleSpec, lam: Weight, family: HoleFamily, c: Sequence[int]) -> int:
    """Higher-order Verma multiplicity where a formula is available.

    First-order families are parabolic Verma modules. Otherwise the weight
    space is computed when at most one hole's submodule meets it (the other
    submodules vanish because their Verma multiplicity is zero there).
    """
    if all(len(h) == 1 for h in family.holes):
        J = frozenset(node for h in family.holes for node in h)
        return parabolic_mult_coords(spec, lam, J, c)
    live = [h for h in family.holes if verma_mult_coords(spec, [a - b for a, b in zip(c, hole_shift(spec, lam, h))])]
    if not live:
        return verma_mult_coords(spec, c)
    if len(live) == 1:
        return hovm_single_hole_mult_coords(spec, lam, live[0], c)
    raise NotImplementedError(
        "several hole submodules meet this weight space; no multiplicity formula is available"
    )


# -- polynomials --------------------------------------------------------------


def disjoint_product(polys: Sequence[SparsePoly]) -> SparsePoly:
    """Product of polynomials in disjoint variable sets, concatenated in order."""
    if not polys:
        raise ValueError("need at least one polynomial")
    result = polys[0]
    for p in polys[1:]:
        terms = {}
        for e1, c1 in result.items():
            for e2, c2 in p.items():
                terms[e1 + e2] = c1 * c2
        result = SparsePoly(result.num_vars + p.num_vars, terms)
    return result


def parabolic_char_polynomial(spec: SemisimpleSpec, lam: Weight, J, delta: Sequence[int]) -> SparsePoly:
    """All monomials of x^(lambda+delta) char M(lambda, J) with nonnegative exponents."""
    J = spec.node_set(J)
    lam.check_spec(spec)
    eps = lam.integral_eps()
    if not is_J_dominant(spec, lam, J):
        raise ValueError("lambda must be J-dominant integral")
    delta = tuple(int(x) for x in delta)
    if len(delta) != sum(n + 1 for n in spec.block_sizes):
        raise ValueError("delta must have one entry per epsilon coordinate")
    if any(x < 0 for x in delta):
        raise ValueError("delta must be nonnegative")
    polys = []
    pos = 0
    for t, (n, h, comps) in enumerate(zip(spec.block_sizes, lam.h, _block_components(spec, J)), 1):
        d_t = delta[pos : pos + n + 1]
        pos += n + 1
        G = graph_GJ(n, [i for (s, i) in J if s == t])
        bases = []
        for d, m in _levi_weights(n, tuple(h), comps):
            nu = list(eps[t - 1])
            for k, x in enumerate(d):
                nu[k] -= x
                nu[k + 1] += x
            bases.append((tuple(a + b for a, b in zip(nu, d_t)), m))
        polys.append(_shifted_sum(G, bases))
    return disjoint_product(polys)


def _shifted_sum(G: DirectedMultigraph, bases: Sequence[tuple[tuple[int, ...], int]]) -> SparsePoly:
    """sum_b m_b shifted_char_polynomial(G, b), sharing one table of K_G values."""
    n = G.n
    prefixes = []
    for base, m in bases:
        pre, s = [], 0
        for x in base[:-1]:
            s += x
            pre.append(s)
        prefixes.append(pre)
    # a negative prefix sum leaves no admissible kappa
    live = [(b, m, pre) for (b, m), pre in zip(bases, prefixes) if min(pre) >= 0]
    terms: dict = {}
    if not live:
        return SparsePoly.zero(n + 1)
    upper = [max(pre[k] for _, _, pre in live) for k in range(n)]
    table = graph_kpf_table(G, upper)
    nz = [(c, int(table[c])) for c in zip(*np.nonzero(table))]
    for b, m, pre in live:
        for c, k in nz:
            if any(x > p for x, p in zip(c, pre)):
                continue
            prev = 0
            exp = []
            for bi, ci in zip(b, c):
                exp.append(bi - (ci - prev))
                prev = ci
            exp.append(b[-1] + prev)
            if min(exp) >= 0:
                e = tuple(exp)
                terms[e] = terms.get(e, 0) + k * m
    return SparsePoly(n + 1, terms)


# -- log-concavity scans ---------------------------------------------------------


def default_directions(spec: SemisimpleSpec) -> list[Root]:
    return positive_roots(spec)


def dlc_scan_function(
    f: Callable[[tuple], int],
    points: Iterable[Sequence[int]],
    dirs: Sequence[Sequence[int]],
    labels: Sequence | None = None,
) -> CertificationReport:
    """Check f(c)^2 >= f(c - d) f(c + d) at every point and direction.

    The witness is the first failure in iteration order; ``values`` lists
    (f(c - d), f(c), f(c + d)).
    """
    checked = 0
    dirs = [tuple(d) for d in dirs]
    for c in points:
        c = tuple(c)
        mid = None
        for k, d in enumerate(dirs):
            if mid is None:
                mid = f(c)
            lo = f(tuple(a - b for a, b in zip(c, d)))
            hi = f(tuple(a + b for a, b in zip(c, d)))
            checked += 1
            if mid * mid < lo * hi:
                witness = {
                    "point": list(c),
                    "direction": labels[k] if labels is not None else list(d),
                    "values": [lo, mid, hi],
                    "inequality": f"{mid * mid} < {lo * hi}",
                }
                return CertificationReport(False, witness, details={"checked": checked})
    return CertificationReport(True, details={"checked": checked})


def box_points(lower: Sequence[int], upper: Sequence[int], limit: int = DEFAULT_BOX_LIMIT):
    size = 1
    for a, b in zip(lower, upper):
        size *= max(b - a + 1, 0)
    if size > limit:
        raise LimitExceeded(f"box has {size} points, limit is {limit}")
    return product(*(range(a, b + 1) for a, b in zip(lower, upper)))


def dlc_scan(
    module: ModuleSpec,
    box: int | tuple = 6,
    dirs: Sequence[Root] | None = None,
    limit: int = DEFAULT_BOX_LIMIT,
) -> CertificationReport:
    """Three-term log-concavity of weight multiplicities over a box of weights.

    ``box`` is a radius r (weights lambda - sum c_i alpha_i with 0 <= c_i <= r)
    or a pair (lower, upper) of coordinate vectors. Directions are positive
    roots inside blocks. The witness reports coordinates of mu, the root as
    (t, i, j), and multiplicities at (mu + alpha, mu, mu - alpha).
    """
    spec = module.algebra
    rank = spec.rank
    if isinstance(box, int):
        lower, upper = (0,) * rank, (box,) * rank
    else:
        lower, upper = tuple(box[0]), tuple(box[1])
        if len(lower) != rank or len(upper) != rank:
            raise ValueError("box bounds must have one entry per node")
    roots = list(dirs) if dirs is not None else default_directions(spec)
    for r in roots:
        if not isinstance(r, Root) or not r.positive:
            raise ValueError("directions must be positive roots")
    vecs = [r.simple_coords(spec) for r in roots]
    labels = [[r.t, r.i, r.j] for r in roots]
    cache: dict = {}

    def f(c):
        v = cache.get(c)
        if v is None:
            v = module.mult_coords(c) if min(c) >= 0 else 0
            cache[c] = v
        return v

    # f(c - d) is the multiplicity at mu + alpha
    report = dlc_scan_function(f, box_points(lower, upper, limit), vecs, labels)
    if report.verdict:
        return report
    w = dict(report.witness)
    w["mu_coords"] = w.pop("point")
    w["root"] = w.pop("direction")
    return CertificationReport(False, w, details=report.details)


# -- the counterexample construction for holes of size >= 2 --------------------------


def hovm_violation_witness(spec: SemisimpleSpec, lam: Weight, family: HoleFamily) -> dict:
    """Weights lambda + mu + beta, lambda + mu, lambda + mu - beta violating log-concavity.

    Single-block families whose holes all have size >= 2. The hole H0 is the
    one with the largest first node i1 and, among those, the smallest second
    node i2; beta = alpha_{i2}. Returns coordinates, the three multiplicities
    computed from H0, the predicted values, and whether every other hole's
    submodule vanishes at the three weights.
    """
    if spec.T != 1:
        raise ValueError("the construction is for a single block")
    holes = [sorted(i for _, i in h) for h in family.holes]
    if any(len(h) < 2 for h in holes):
        raise ValueError("every hole must have at least two nodes")
    i1 = max(h[0] for h in holes)
    i2 = min(h[1] for h in holes if h[0] == i1)
    h0 = next(h for h in holes if h[0] == i1 and h[1] == i2)
    H0 = frozenset((1, i) for i in h0)
    n = spec.block_sizes[0]
    c = [0] * n
    for i in range(i1 + 1, i2):
        c[i - 1] += 1
    c[i2 - 1] += 1
    for i in h0:
        c[i - 1] += int(lam.value((1, i))) + 1
    triple = [tuple(c[:i2 - 1]) + (c[i2 - 1] + s,) + tuple(c[i2:]) for s in (-1, 0, 1)]
    values = [hovm_single_hole_mult_coords(spec, lam, H0, cc) for cc in triple]
    scale = 2 ** (i2 - i1 - 2)
    others_vanish = all(
        verma_mult_coords(spec, [a - b for a, b in zip(cc, hole_shift(spec, lam, h))]) == 0
        for h in family.holes
        if h != H0
        for cc in triple
    )
    return {
        "hole": h0,
        "i1": i1,
        "i2": i2,
        "coords": [list(x) for x in triple],
        "values": values,
        "expected": [3 * scale, 2 * scale, 2 * scale],
        "others_vanish": others_vanish,
        "violated": values[1] ** 2 < values[0] * values[2],
    }
