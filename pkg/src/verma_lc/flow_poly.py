"""Flow polytopes F_G(a): lattice points, Lidskii volumes, mixed volumes,
an Ehrhart finite-difference oracle and Alexandrov-Fenchel checks.

Volumes are normalized volumes in the Lidskii convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Sequence

from .exact_poly import SparsePoly, as_rational, exp_factorial
from .lorentz_cert import CertificationReport
from .partition_fn import DirectedMultigraph, kpf_count


@dataclass(frozen=True)
class FlowInstance:
    graph: DirectedMultigraph
    netflow: tuple  # a_1..a_n; vertex n+1 receives -sum(a)

    def __init__(self, graph: DirectedMultigraph, netflow: Sequence):
        a = tuple(as_rational(x) for x in netflow)
        if len(a) != graph.n:
            raise ValueError(f"netflow needs {graph.n} entries, got {len(a)}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "netflow", a)

    def completed(self) -> tuple[int, ...]:
        if any(x.denominator != 1 for x in self.netflow):
            raise ValueError("netflow must be integral")
        a = [int(x) for x in self.netflow]
        return tuple(a + [-sum(a)])


def lattice_point_count(inst: FlowInstance) -> int:
    return kpf_count(inst.graph, inst.completed())


def out_degrees_shifted(G: DirectedMultigraph) -> tuple[int, ...]:
    out = []
    for i in range(1, G.n_plus_1):
        d = G.outdegree(i)
        if d == 0:
            raise ValueError(f"vertex {i} has no outgoing edge")
        out.append(d - 1)
    return tuple(out)


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def volume_dimension(G: DirectedMultigraph) -> int:
    return G.edge_count - G.n


def mixed_volume(G: DirectedMultigraph, r: Sequence[int]) -> int:
    """V(F_G(e_1)^{r_1}, ..., F_G(e_n)^{r_n}) = K_G(r - o^G, 0)."""
    r = tuple(int(x) for x in r)
    if len(r) != G.n:
        raise ValueError(f"composition needs {G.n} parts")
    if any(x < 0 for x in r):
        raise ValueError("composition parts must be nonnegative")
    if sum(r) != volume_dimension(G):
        raise ValueError(f"composition must sum to k - n = {volume_dimension(G)}")
    o = out_degrees_shifted(G)
    return kpf_count(G, tuple(x - y for x, y in zip(r, o)) + (0,))


def lidskii_volume(G: DirectedMultigraph) -> SparsePoly:
    """Normalized volume of F_G(a) as a polynomial in a_1..a_n (valid for a >= 0)."""
    o = out_degrees_shifted(G)
    D = volume_dimension(G)
    if D < 0:
        raise ValueError("graph has fewer edges than non-sink vertices")
    n = G.n
    terms = {}
    scale = factorial(D)
    for r in _weak_compositions(D, n):
        k = kpf_count(G, tuple(x - y for x, y in zip(r, o)) + (0,))
        if k:
            terms[r] = Fraction(scale * k, exp_factorial(r))
    return SparsePoly(n, terms)


def lidskii_volume_at(G: DirectedMultigraph, a: Sequence) -> Fraction:
    return lidskii_volume(G).evaluate([as_rational(x) for x in a])


def ehrhart_volume_oracle(inst: FlowInstance, dilations: int | None = None) -> Fraction:
    """Normalized volume from lattice-point counts of F_G(t a), t = 0..D, by exact finite differences."""
    G = inst.graph
    a = inst.completed()
    if any(x < 0 for x in a[:-1]):
        raise ValueError("netflow must be nonnegative")
    d = volume_dimension(G)
    if d < 0:
        raise ValueError("graph has fewer edges than non-sink vertices")
    D = d + 2 if dilations is None else int(dilations)
    if D < d + 2:
        raise ValueError(f"need at least {d + 2} dilations")
    counts = [kpf_count(G, tuple(t * x for x in a)) for t in range(D + 1)]
    diffs = counts
    for _ in range(d):
        diffs = [y - x for x, y in zip(diffs, diffs[1:])]
    if len(set(diffs)) != 1:
        raise ArithmeticError(f"lattice counts {counts} are not a polynomial of degree {d}")
    # the d-th difference of a degree-d polynomial is d! times its leading coefficient
    return Fraction(diffs[0])


def af_check(G: DirectedMultigraph, r: Sequence[int], i: int, j: int) -> CertificationReport:
    """Alexandrov-Fenchel: V(r)^2 >= V(r + e_i - e_j) V(r - e_i + e_j) (1-based i, j)."""
    r = tuple(int(x) for x in r)
    if not (1 <= i <= G.n and 1 <= j <= G.n) or i == j:
        raise ValueError("i and j must be distinct vertices in 1..n")
    if r[i - 1] < 1 or r[j - 1] < 1:
        raise ValueError("r_i and r_j must be positive")
    mid = mixed_volume(G, r)
    up = list(r)
    up[i - 1] += 1
    up[j - 1] -= 1
    down = list(r)
    down[i - 1] -= 1
    down[j - 1] += 1
    a, b = mixed_volume(G, up), mixed_volume(G, down)
    values = {"mid": mid, "plus": a, "minus": b}
    if mid * mid >= a * b:
        return CertificationReport(True, details=values)
    return CertificationReport(False, {"r": list(r), "i": i, "j": j, **values})


# -- padding construction -------------------------------------------------------


def padding_bound(v: Sequence[int]) -> int:
    """Smallest admissible B, i.e. sum |v_i| + n + 2 (strictly above sum |v_i| + n + 1)."""
    n = len(v) - 1
    return sum(abs(x) for x in v) + n + 2


def padded_graph(G: DirectedMultigraph, B: int) -> DirectedMultigraph:
    """G on [B+1] with each new vertex i > n+1 joined from every smaller vertex."""
    if B < G.n_plus_1 - 1:
        raise ValueError("B must be at least n")
    edges = dict(G.multiplicities)
    for i in range(G.n_plus_1 + 1, B + 2):
        for k in range(1, i):
            edges[(k, i)] = edges.get((k, i), 0) + 1
    return DirectedMultigraph(B + 1, edges)


def padded_composition(H: DirectedMultigraph, v: Sequence[int]) -> tuple[int, ...] | None:
    """r_b = v~_b + o^H_b for b in [B], with v~ the zero-padded v; None if a part is negative."""
    B = H.n
    vt = list(v) + [0] * (B + 1 - len(v))
    o = out_degrees_shifted(H)
    r = tuple(vt[b] + o[b] for b in range(B))
    if any(x < 0 for x in r):
        return None
    return r


def af_via_padding(G: DirectedMultigraph, v: Sequence[int], i: int, j: int, B: int | None = None) -> dict:
    """Translate the K_G log-concavity instance at v in direction e_i - e_j (i, j in [n+1])
    into an Alexandrov-Fenchel check on the padded graph."""
    v = tuple(int(x) for x in v)
    if len(v) != G.n_plus_1 or sum(v) != 0:
        raise ValueError("v must have length n+1 and sum 0")
    if not (1 <= i <= G.n_plus_1 and 1 <= j <= G.n_plus_1) or i == j:
        raise ValueError("i and j must be distinct vertices of G")
    B = padding_bound(v) if B is None else B
    if B <= sum(abs(x) for x in v) + G.n + 1:
        raise ValueError("B is too small for this v")
    H = padded_graph(G, B)
    r = padded_composition(H, v)
    report = af_check(H, r, i, j)
    up = list(v)
    up[i - 1] += 1
    up[j - 1] -= 1
    down = list(v)
    down[i - 1] -= 1
    down[j - 1] += 1
    kpf_values = (kpf_count(G, tuple(up)), kpf_count(G, v), kpf_count(G, tuple(down)))
    return {"B": B, "r": r, "report": report, "kpf": kpf_values}


def brute_force_flows(inst: FlowInstance) -> int:
    """Count integer flows directly (small instances only)."""
    a = inst.completed()
    edges = inst.graph.edge_list()
    total = sum(x for x in a if x > 0)
    count = 0
    for f in product(range(total + 1), repeat=len(edges)):
        net = [0] * len(a)
        for (u, w), x in zip(edges, f):
            net[u - 1] += x
            net[w - 1] -= x
        if tuple(net) == a:
            count += 1
    return count
