"""Roots, weights and simplicity criteria for g = sl_{n_1+1} + ... + sl_{n_T+1}.

Nodes are pairs (t, i) with 1-based block t and node i in [n_t]. Helpers
accept a bare integer i as shorthand for (1, i).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_poly import as_rational, format_rational
from .partition_fn import DirectedMultigraph

Node = tuple  # (t, i)


@dataclass(frozen=True)
class SemisimpleSpec:
    block_sizes: tuple

    def __init__(self, block_sizes: Iterable[int]):
        sizes = tuple(int(n) for n in block_sizes)
        if not sizes:
            raise ValueError("at least one block is required")
        if any(n < 1 for n in sizes):
            raise ValueError("block sizes must be positive")
        object.__setattr__(self, "block_sizes", sizes)

    @property
    def T(self) -> int:
        return len(self.block_sizes)

    def nodes(self) -> list[Node]:
        return [(t, i) for t, n in enumerate(self.block_sizes, 1) for i in range(1, n + 1)]

    @property
    def rank(self) -> int:
        return sum(self.block_sizes)

    def node_index(self, node: Node) -> int:
        """Position of a node in :meth:`nodes` (0-based)."""
        t, i = node
        return sum(self.block_sizes[: t - 1]) + i - 1

    def check_node(self, node) -> Node:
        node = as_node(node)
        t, i = node
        if not (1 <= t <= self.T and 1 <= i <= self.block_sizes[t - 1]):
            raise ValueError(f"node {node} out of range for blocks {self.block_sizes}")
        return node

    def node_set(self, nodes) -> frozenset:
        return frozenset(self.check_node(x) for x in nodes)

    def adjacent(self, a: Node, b: Node) -> bool:
        return a[0] == b[0] and abs(a[1] - b[1]) == 1


def as_node(x) -> Node:
    if isinstance(x, int):
        return (1, x)
    t, i = x
    return (int(t), int(i))


def is_independent(spec: SemisimpleSpec, nodes) -> bool:
    nodes = spec.node_set(nodes)
    return not any(spec.adjacent(a, b) for a in nodes for b in nodes)


def components(spec: SemisimpleSpec, J) -> list[tuple[int, int, int]]:
    """Connected components of J as (t, first, last) node intervals, sorted."""
    J = spec.node_set(J)
    out = []
    for t, n in enumerate(spec.block_sizes, 1):
        i = 1
        while i <= n:
            if (t, i) in J:
                j = i
                while (t, j + 1) in J:
                    j += 1
                out.append((t, i, j))
                i = j + 1
            else:
                i += 1
    return out


# -- weights ----------------------------------------------------------------


def _eps_from_h(h: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Epsilon coordinates with last entry 0: lambda_i = sum_{k >= i} h_k."""
    out = [Fraction(0)]
    for x in reversed(h):
        out.append(out[-1] + x)
    return tuple(reversed(out))


def trace_zero_eps(h: Sequence[Fraction]) -> tuple[Fraction, ...]:
    e = _eps_from_h(h)
    shift = sum(e) / len(e)
    return tuple(x - shift for x in e)


@dataclass(frozen=True)
class Weight:
    """A weight given by its values on the coroots h_{t,i}.

    ``eps`` optionally fixes an epsilon-coordinate representative per block
    (entries rational, integral for polynomial work).
    """

    h: tuple  # per block, tuple of Fractions
    eps: tuple | None = None

    def __init__(self, h, eps=None):
        hh = tuple(tuple(as_rational(x) for x in block) for block in h)
        object.__setattr__(self, "h", hh)
        if eps is not None:
            ee = tuple(tuple(as_rational(x) for x in block) for block in eps)
            if len(ee) != len(hh):
                raise ValueError("eps has a different number of blocks than h")
            for t, (hb, eb) in enumerate(zip(hh, ee), 1):
                if len(eb) != len(hb) + 1:
                    raise ValueError(f"eps block {t} must have length {len(hb) + 1}")
                for i, x in enumerate(hb):
                    if eb[i] - eb[i + 1] != x:
                        raise ValueError(f"eps inconsistent with h at node ({t}, {i + 1})")
            object.__setattr__(self, "eps", ee)
        else:
            object.__setattr__(self, "eps", None)

    @classmethod
    def zero(cls, spec: SemisimpleSpec) -> Weight:
        return cls([[0] * n for n in spec.block_sizes], [[0] * (n + 1) for n in spec.block_sizes])

    @classmethod
    def from_eps(cls, eps) -> Weight:
        h = [[as_rational(b[i]) - as_rational(b[i + 1]) for i in range(len(b) - 1)] for b in eps]
        return cls(h, eps)

    @classmethod
    def from_json(cls, data) -> Weight:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            blocks = data["blocks"]
            h = []
            for b in blocks:
                vals = [as_rational(x) for x in b["h"]]
                if "n" in b and int(b["n"]) != len(vals):
                    raise ValueError(f"block declares n={b['n']} but has {len(vals)} h-values")
                h.append(vals)
            return cls(h, data.get("eps"))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed weight JSON: {exc}") from None

    def to_json(self) -> dict:
        out = {"blocks": [{"n": len(b), "h": [format_rational(x) for x in b]} for b in self.h]}
        if self.eps is not None:
            out["eps"] = [[format_rational(x) for x in b] for b in self.eps]
        return out

    def check_spec(self, spec: SemisimpleSpec) -> Weight:
        if tuple(len(b) for b in self.h) != spec.block_sizes:
            raise ValueError(f"weight shape {[len(b) for b in self.h]} does not match {list(spec.block_sizes)}")
        return self

    def value(self, node) -> Fraction:
        t, i = as_node(node)
        return self.h[t - 1][i - 1]

    def eps_block(self, t: int) -> tuple[Fraction, ...]:
        """Epsilon coordinates of block t (given ones, else last entry 0)."""
        if self.eps is not None:
            return self.eps[t - 1]
        return _eps_from_h(self.h[t - 1])

    def integral_eps(self) -> tuple[tuple[int, ...], ...]:
        blocks = []
        for t in range(1, len(self.h) + 1):
            e = self.eps_block(t)
            if any(x.denominator != 1 for x in e):
                raise ValueError("weight is not integral in epsilon coordinates")
            blocks.append(tuple(int(x) for x in e))
        return tuple(blocks)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for b in self.h for x in b)

    def minus_roots(self, spec: SemisimpleSpec, coords: dict) -> Weight:
        """lambda - sum c_node alpha_node for a dict of node -> integer coefficient."""
        h = [list(b) for b in self.h]
        eps = [list(b) for b in self.eps] if self.eps is not None else None
        for node, c in coords.items():
            t, i = spec.check_node(node)
            if not c:
                continue
            # alpha_i pairs with h_{i-1}, h_i, h_{i+1} as -1, 2, -1
            h[t - 1][i - 1] -= 2 * c
            if i > 1:
                h[t - 1][i - 2] += c
            if i < len(h[t - 1]):
                h[t - 1][i] += c
            if eps is not None:
                eps[t - 1][i - 1] -= c
                eps[t - 1][i] += c
        return Weight(h, eps)


def rho(spec: SemisimpleSpec) -> Weight:
    eps = [[Fraction(n - 2 * k, 2) for k in range(n + 1)] for n in spec.block_sizes]
    return Weight([[1] * n for n in spec.block_sizes], eps)


# -- roots ------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Root:
    """alpha^{(t)}_{ij} = eps_i - eps_j in block t; positive iff i < j."""

    t: int
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("a root needs i != j")

    @property
    def positive(self) -> bool:
        return self.i < self.j

    def nodes(self) -> list[Node]:
        """Simple roots in the chain: (t, k) for min(i,j) <= k < max(i,j)."""
        a, b = sorted((self.i, self.j))
        return [(self.t, k) for k in range(a, b)]

    def sign(self) -> int:
        return 1 if self.positive else -1

    def neg(self) -> Root:
        return Root(self.t, self.j, self.i)

    def simple_coords(self, spec: SemisimpleSpec) -> tuple[int, ...]:
        v = [0] * spec.rank
        for node in self.nodes():
            v[spec.node_index(node)] = self.sign()
        return tuple(v)

    def coroot_value(self, lam: Weight) -> Fraction:
        """lambda(h_gamma) for this root gamma."""
        s = sum((lam.value(n) for n in self.nodes()), Fraction(0))
        return s * self.sign()

    def shifted_value(self, lam: Weight) -> Fraction:
        """(lambda + rho)(h_gamma) = lambda_i - lambda_j + j - i."""
        return self.coroot_value(lam) + (self.j - self.i)

    def pairing(self, other: Root) -> int:
        """<self, other^vee>, the epsilon dot product (roots have length^2 = 2)."""
        if self.t != other.t:
            return 0
        s = 0
        for a, ca in ((self.i, 1), (self.j, -1)):
            for b, cb in ((other.i, 1), (other.j, -1)):
                if a == b:
                    s += ca * cb
        return s

    def reflect(self, beta: Root) -> Root:
        """s_beta(self) = self - <self, beta^vee> beta, computed in epsilon coordinates."""
        k = self.pairing(beta)
        if k == 0:
            return self
        vec = {self.i: 1, self.j: -1}
        for idx, c in ((beta.i, -k), (beta.j, k)):
            vec[idx] = vec.get(idx, 0) + c
        plus = [a for a, c in vec.items() if c == 1]
        minus = [a for a, c in vec.items() if c == -1]
        rest = [c for c in vec.values() if c not in (0, 1, -1)]
        if len(plus) != 1 or len(minus) != 1 or rest:
            raise AssertionError("reflection of a root is not a root")
        return Root(self.t, plus[0], minus[0])


def positive_roots(spec: SemisimpleSpec) -> list[Root]:
    """Positive roots block by block, each block ordered by (j - i, i)."""
    out = []
    for t, n in enumerate(spec.block_sizes, 1):
        for length in range(1, n + 1):
            for i in range(1, n + 2 - length):
                out.append(Root(t, i, i + length))
    return out


def all_roots(spec: SemisimpleSpec) -> list[Root]:
    pos = positive_roots(spec)
    return pos + [r.neg() for r in pos]


def in_root_subsystem(root: Root, J) -> bool:
    """Whether root lies in Phi_J (its whole chain of simple roots is in J)."""
    return all(node in J for node in root.nodes())


def graph_GJ(n: int, J) -> DirectedMultigraph:
    """Graph on [n+1] with an edge i -> j exactly when {i, ..., j-1} is not inside J."""
    J = {as_node(x)[1] if not isinstance(x, int) else x for x in J}
    if any(not 1 <= x <= n for x in J):
        raise ValueError(f"node set {sorted(J)} out of range for n = {n}")
    edges = {(i, j): 1 for i in range(1, n + 2) for j in range(i + 1, n + 2) if not set(range(i, j)) <= J}
    return DirectedMultigraph(n + 1, edges)


# -- classification ---------------------------------------------------------


def _is_nat(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _is_pos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def j_lambda(spec: SemisimpleSpec, lam: Weight) -> frozenset:
    lam.check_spec(spec)
    return frozenset(node for node in spec.nodes() if _is_nat(lam.value(node)))


def is_J_dominant(spec: SemisimpleSpec, lam: Weight, J) -> bool:
    J = spec.node_set(J)
    lam.check_spec(spec)
    return all(_is_nat(lam.value(node)) for node in J)


def is_dominant_integral(spec: SemisimpleSpec, lam: Weight) -> bool:
    return is_J_dominant(spec, lam, spec.nodes())


def is_antidominant(spec: SemisimpleSpec, lam: Weight) -> bool:
    lam.check_spec(spec)
    return not any(_is_pos_int(r.shifted_value(lam)) for r in positive_roots(spec))


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = Fraction(m[r][col]) / p
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def psi_plus(spec: SemisimpleSpec, lam: Weight) -> list[Root]:
    """Positive roots outside Phi_{J_lambda} with (lambda + rho)(h_beta) a positive integer."""
    J = j_lambda(spec, lam)
    return [b for b in positive_roots(spec) if not in_root_subsystem(b, J) and _is_pos_int(b.shifted_value(lam))]


def jantzen_simple(spec: SemisimpleSpec, lam: Weight, J) -> bool:
    """Jantzen's simplicity criterion for the parabolic Verma module M(lambda, J)."""
    J = spec.node_set(J)
    if not is_J_dominant(spec, lam, J):
        raise ValueError("lambda must be J-dominant integral")
    JL = j_lambda(spec, lam)
    if J != JL:
        return False
    base = [[Fraction(1) if k == spec.node_index(node) else Fraction(0) for k in range(spec.rank)] for node in sorted(JL)]
    roots = all_roots(spec)
    for beta in psi_plus(spec, lam):
        span = base + [[Fraction(x) for x in beta.simple_coords(spec)]]
        r0 = _rank(span)
        ok = False
        for gamma in roots:
            if gamma.shifted_value(lam) != 0:
                continue
            if not in_root_subsystem(gamma.reflect(beta), JL):
                continue
            if _rank(span + [[Fraction(x) for x in gamma.simple_coords(spec)]]) == r0:
                ok = True
                break
        if not ok:
            return False
    return True


def hovm_dlc_predicted(spec: SemisimpleSpec, H) -> bool:
    """Whether the higher-order Verma module of a single hole H is predicted log-concave for all lambda."""
    H = spec.node_set(H)
    if not is_independent(spec, H):
        raise ValueError("hole must be an independent node set")
    if len(H) == 1:
        return True
    for t, n in enumerate(spec.block_sizes, 1):
        Ht = [node for node in H if node[0] == t]
        if Ht and not (len(Ht) == 1 and n == 1):
            return False
    return True
