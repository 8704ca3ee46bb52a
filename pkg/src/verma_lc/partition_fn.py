"""Vector partition functions: restricted Kostant partition functions of
directed multigraphs, arbitrary positive root lists (G2), and the finite
shifted character polynomials built from them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from .exact_poly import SparsePoly

G2_ROOTS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
"""Positive roots of G2 in the simple-root basis (alpha short), in the order
alpha, beta, alpha+beta, 2alpha+beta, 3alpha+beta, 3alpha+2beta."""


@dataclass(frozen=True)
class DirectedMultigraph:
    """Loopless multigraph on vertices 1..n+1, every edge directed i -> j with i < j."""

    n_plus_1: int
    multiplicities: tuple  # sorted ((i, j), m) with m > 0

    def __init__(self, n_plus_1: int, edges: Mapping | Iterable = ()):
        if n_plus_1 < 1:
            raise ValueError("a graph needs at least one vertex")
        items = edges.items() if isinstance(edges, Mapping) else edges
        mult: dict[tuple[int, int], int] = {}
        for item in items:
            if len(item) == 2:
                (i, j), m = item
            else:
                i, j, m = item
            i, j, m = int(i), int(j), int(m)
            if not i < j:
                raise ValueError(f"edge ({i}, {j}) must satisfy i < j")
            if not (1 <= i and j <= n_plus_1):
                raise ValueError(f"edge ({i}, {j}) out of range for {n_plus_1} vertices")
            if m < 0:
                raise ValueError("edge multiplicities must be nonnegative")
            if m:
                mult[(i, j)] = mult.get((i, j), 0) + m
        object.__setattr__(self, "n_plus_1", n_plus_1)
        object.__setattr__(self, "multiplicities", tuple(sorted(mult.items())))

    @classmethod
    def complete(cls, n_plus_1: int) -> DirectedMultigraph:
        return cls(n_plus_1, {(i, j): 1 for i in range(1, n_plus_1 + 1) for j in range(i + 1, n_plus_1 + 1)})

    @classmethod
    def from_json(cls, data) -> DirectedMultigraph:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["n_plus_1"]), [tuple(e) for e in data["edges"]])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from None

    def to_json(self) -> dict:
        return {"n_plus_1": self.n_plus_1, "edges": [[i, j, m] for (i, j), m in self.multiplicities]}

    @property
    def n(self) -> int:
        return self.n_plus_1 - 1

    def mult(self, i: int, j: int) -> int:
        return dict(self.multiplicities).get((i, j), 0)

    @property
    def edge_count(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def outdegree(self, i: int) -> int:
        return sum(m for (a, _), m in self.multiplicities if a == i)

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges with repetition, ordered by (j - i, i)."""
        out = []
        for (i, j), m in sorted(self.multiplicities, key=lambda e: (e[0][1] - e[0][0], e[0][0])):
            out.extend([(i, j)] * m)
        return out

    def roots(self) -> list[tuple[int, ...]]:
        """One root e_i - e_j per edge (parallel edges repeated)."""
        out = []
        for i, j in self.edge_list():
            v = [0] * self.n_plus_1
            v[i - 1] = 1
            v[j - 1] = -1
            out.append(tuple(v))
        return out

    def interval_roots(self) -> list[tuple[tuple[int, ...], int]]:
        """Edges as simple-root coordinate vectors (indicator of [i, j-1]) with multiplicity."""
        n = self.n
        out = []
        for (i, j), m in sorted(self.multiplicities, key=lambda e: (e[0][1] - e[0][0], e[0][0])):
            out.append((tuple(1 if i <= k + 1 < j else 0 for k in range(n)), m))
        return out

    def without_edge(self, i: int, j: int) -> DirectedMultigraph:
        mult = dict(self.multiplicities)
        if mult.get((i, j), 0) < 1:
            raise ValueError(f"no edge ({i}, {j}) to delete")
        mult[(i, j)] -= 1
        return DirectedMultigraph(self.n_plus_1, mult)


# -- coordinates ------------------------------------------------------------


def prefix_coords(v: Sequence[int]) -> tuple[int, ...] | None:
    """Simple-root coordinates c_i = v_1 + ... + v_i of a sum-zero vector, else None."""
    if sum(v) != 0:
        return None
    out = []
    s = 0
    for x in v[:-1]:
        s += x
        out.append(s)
    return tuple(out)


def from_prefix_coords(c: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`prefix_coords`: the sum-zero vector with these prefix sums."""
    out = []
    prev = 0
    for x in c:
        out.append(x - prev)
        prev = x
    out.append(-prev)
    return tuple(out)


def _pointed(roots: Sequence[Sequence[int]], v: Sequence[int]):
    """Express roots and target in coordinates where every root is nonnegative.

    Returns (grouped_roots, target) or (grouped_roots, None) if the target is
    off the root lattice's hyperplane.
    """
    roots = [tuple(int(x) for x in r) for r in roots]
    v = tuple(int(x) for x in v)
    if any(len(r) != len(v) for r in roots):
        raise ValueError("dimension mismatch between roots and target")
    if any(not any(r) for r in roots):
        raise ValueError("roots must be nonzero")
    if all(min(r) >= 0 for r in roots):
        conv_roots, target = roots, v
    elif all(sum(r) == 0 for r in roots):
        conv_roots = [prefix_coords(r) for r in roots]
        target = prefix_coords(v)
        if any(min(r) < 0 for r in conv_roots):
            raise ValueError("root list is not positive for the standard type A order")
    else:
        raise ValueError("root list must be nonnegative or consist of type A roots")
    grouped: dict[tuple, int] = {}
    order = []
    for r in conv_roots:
        if r not in grouped:
            order.append(r)
            grouped[r] = 0
        grouped[r] += 1
    return tuple((r, grouped[r]) for r in order), target


class PartitionCounter:
    """Memoized counter for a fixed list of nonnegative root vectors with multiplicities.

    A root of multiplicity m used u times contributes C(u+m-1, m-1): the
    parallel copies are distinct parts.
    """

    def __init__(self, grouped_roots: Sequence[tuple[tuple[int, ...], int]]):
        self.roots = tuple(grouped_roots)
        dim = len(self.roots[0][0]) if self.roots else 0
        self.dim = dim
        # coordinates touched by roots[idx:]
        covered = [frozenset()] * (len(self.roots) + 1)
        for idx in range(len(self.roots) - 1, -1, -1):
            covered[idx] = covered[idx + 1] | {k for k, x in enumerate(self.roots[idx][0]) if x}
        self._free = [tuple(k for k in range(dim) if k not in cov) for cov in covered]
        self._memo: dict = {}

    def __call__(self, target: Sequence[int]) -> int:
        target = tuple(target)
        if any(x < 0 for x in target):
            return 0
        return self._count(0, target)

    def _count(self, idx: int, r: tuple) -> int:
        for k in self._free[idx]:
            if r[k]:
                return 0
        if idx == len(self.roots):
            return 1
        key = (idx, r)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        root, m = self.roots[idx]
        bound = min(r[k] // x for k, x in enumerate(root) if x)
        total = 0
        cur = list(r)
        for u in range(bound + 1):
            if u:
                for k, x in enumerate(root):
                    if x:
                        cur[k] -= x
            sub = self._count(idx + 1, tuple(cur))
            if sub:
                total += sub * (comb(u + m - 1, m - 1) if m > 1 else 1)
        self._memo.setdefault(key, total)
        return total


@lru_cache(maxsize=256)
def _counter(grouped_roots) -> PartitionCounter:
    return PartitionCounter(grouped_roots)


def _as_roots(roots) -> list[tuple[int, ...]]:
    if isinstance(roots, DirectedMultigraph):
        return roots.roots()
    return [tuple(r) for r in roots]


def kpf_count(roots, v: Sequence[int]) -> int:
    """Number of ways to write ``v`` as a nonnegative integer combination of ``roots``.

    ``roots`` is a list of integer vectors or a :class:`DirectedMultigraph`
    (each parallel edge a separate part).
    """
    if isinstance(roots, DirectedMultigraph):
        if len(v) != roots.n_plus_1:
            raise ValueError(f"target has length {len(v)}, graph has {roots.n_plus_1} vertices")
        target = prefix_coords(tuple(int(x) for x in v))
        if target is None:
            return 0
        grouped = tuple(roots.interval_roots())
        if not grouped:
            return 1 if not any(target) else 0
        return _counter(grouped)(target)
    roots = _as_roots(roots)
    if not roots:
        return 1 if not any(v) else 0
    grouped, target = _pointed(roots, v)
    if target is None:
        return 0
    return _counter(grouped)(target)


def kpf_g2(a: int, b: int) -> int:
    """Kostant partition function of G2 at a*alpha + b*beta."""
    if a < 0 or b < 0:
        return 0
    return kpf_count(G2_ROOTS, (a, b))


def kpf_enumerate(roots, v: Sequence[int]) -> list[tuple[int, ...]]:
    """All multiplicity vectors n with sum n_r root_r = v, in descending lexicographic order."""
    roots = _as_roots(roots)
    if not roots:
        return [()] if not any(v) else []
    if len(roots[0]) != len(v):
        raise ValueError("dimension mismatch between roots and target")
    # ungrouped pointed coordinates, one entry per part
    if all(min(r) >= 0 for r in roots):
        conv, target = roots, tuple(v)
    else:
        grouped, target = _pointed(roots, v)
        conv = [prefix_coords(r) for r in roots]
    if target is None or any(x < 0 for x in target):
        return []
    k = len(conv)
    dim = len(target)
    covered = [set() for _ in range(k + 1)]
    for idx in range(k - 1, -1, -1):
        covered[idx] = covered[idx + 1] | {c for c in range(dim) if conv[idx][c]}
    out: list[tuple[int, ...]] = []
    chosen = [0] * k

    def rec(idx, r):
        if any(r[c] for c in range(dim) if c not in covered[idx]):
            return
        if idx == k:
            out.append(tuple(chosen))
            return
        root = conv[idx]
        bound = min(r[c] // x for c, x in enumerate(root) if x)
        for u in range(bound, -1, -1):
            chosen[idx] = u
            rec(idx + 1, tuple(r[c] - u * root[c] for c in range(dim)))
        chosen[idx] = 0

    rec(0, tuple(target))
    return out


# -- dense tables -----------------------------------------------------------


def kpf_box(grouped_roots: Sequence[tuple[tuple[int, ...], int]], upper: Sequence[int]) -> np.ndarray:
    """Table of partition counts on the box 0 <= c <= upper (nonnegative roots).

    Entry ``T[c]`` is the number of ways to write ``c``. Python integers are
    kept exactly (object dtype).
    """
    shape = tuple(int(u) + 1 for u in upper)
    if any(s <= 0 for s in shape):
        return np.zeros([max(s, 0) for s in shape], dtype=object)
    table = np.zeros(shape, dtype=object)
    table[(0,) * len(shape)] = 1
    for root, m in grouped_roots:
        if any(x >= s for x, s in zip(root, shape) if x):
            continue  # root leaves the box after one step
        for _ in range(m):
            acc = table.copy()
            step = table
            while True:
                shifted = np.zeros(shape, dtype=object)
                src = tuple(slice(0, s - x) for s, x in zip(shape, root))
                dst = tuple(slice(x, s) for s, x in zip(shape, root))
                shifted[dst] = step[src]
                if not shifted.any():
                    break
                acc += shifted
                step = shifted
            table = acc
    return table


def graph_kpf_table(G: DirectedMultigraph, upper: Sequence[int]) -> np.ndarray:
    """K_G on the box of simple-root coordinates 0 <= c <= upper."""
    return kpf_box(G.interval_roots(), upper)


def shifted_char_polynomial(G: DirectedMultigraph, base: Sequence[int]) -> SparsePoly:
    """Sum of K_G(kappa) x^(base - kappa) over all kappa with base - kappa >= 0.

    Not normalized; the result is homogeneous of degree sum(base) when nonzero.
    """
    base = tuple(int(x) for x in base)
    if len(base) != G.n_plus_1:
        raise ValueError("base has wrong length")
    m = G.n_plus_1
    if m == 1:
        return SparsePoly(1, {base: 1}) if base[0] >= 0 else SparsePoly.zero(1)
    upper = []
    s = 0
    for x in base[:-1]:
        s += x
        upper.append(s)
    if min(upper) < 0:
        return SparsePoly.zero(m)
    table = graph_kpf_table(G, upper)
    terms = {}
    for c in product(*(range(u + 1) for u in upper)):
        k = table[c]
        if not k:
            continue
        kappa = from_prefix_coords(c)
        exp = tuple(b - x for b, x in zip(base, kappa))
        if min(exp) >= 0:
            terms[exp] = k
    return SparsePoly(m, terms)


def dominance_ok(v: Sequence[int]) -> bool:
    """True iff every proper prefix sum of v is nonnegative and the total is zero."""
    c = prefix_coords(v)
    return c is not None and all(x >= 0 for x in c)


@lru_cache(maxsize=None)
def _graph_counter(G: DirectedMultigraph) -> PartitionCounter | None:
    grouped = tuple(G.interval_roots())
    return _counter(grouped) if grouped else None


def kpf_at_coords(G: DirectedMultigraph, c: Sequence[int]) -> int:
    """K_G at the vector whose simple-root coordinates (prefix sums) are ``c``."""
    c = tuple(c)
    if len(c) != G.n:
        raise ValueError("coordinate vector has wrong length")
    if any(x < 0 for x in c):
        return 0
    counter = _graph_counter(G)
    if counter is None:
        return 1 if not any(c) else 0
    return counter(c)


def kpf_dlc_scan(G: DirectedMultigraph, radius: int) -> dict:
    """Check K_G(v)^2 >= K_G(v + e_i - e_j) K_G(v - e_i + e_j) for all |v_k| <= radius.

    Works in prefix coordinates on one dense table. Returns
    {"ok", "checked", "witness"}; the witness (first failure in the order of
    directions, then lexicographic v) lists v, (i, j) and the three values.
    """
    n = G.n
    if n == 0:
        return {"ok": True, "checked": 0, "witness": None}
    # prefix sums of v in the box, plus one step for the neighbours
    upper = [radius * min(k, n + 1 - k) + 1 for k in range(1, n + 1)]
    table = graph_kpf_table(G, upper)
    biggest = max(int(x) for x in table.flat) if table.size else 0
    if biggest < 2**31:
        table = table.astype(np.int64)
    padded = np.zeros([u + 3 for u in upper], dtype=table.dtype)
    padded[tuple(slice(1, u + 2) for u in upper)] = table
    centre = tuple(slice(1, u + 2) for u in upper)
    grids = np.meshgrid(*[np.arange(u + 1) for u in upper], indexing="ij")
    mask = np.ones(table.shape, dtype=bool)
    prev = 0
    for k in range(n):
        v_k = grids[k] - prev
        mask &= np.abs(v_k) <= radius
        prev = grids[k]
    mask &= np.abs(prev) <= radius  # v_{n+1} = -c_n
    checked = 0
    for i in range(1, n + 2):
        for j in range(i + 1, n + 2):
            d = [1 if i <= k + 1 < j else 0 for k in range(n)]
            plus = tuple(slice(s.start - x, s.stop - x) for s, x in zip(centre, d))
            minus = tuple(slice(s.start + x, s.stop + x) for s, x in zip(centre, d))
            mid = padded[centre]
            lo, hi = padded[plus], padded[minus]
            bad = (mid * mid < lo * hi) & mask
            checked += int(mask.sum())
            if bad.any():
                c = tuple(int(x) for x in np.argwhere(bad)[0])
                v = from_prefix_coords(c)
                return {
                    "ok": False,
                    "checked": checked,
                    "witness": {"v": list(v), "i": i, "j": j, "values": [int(lo[c]), int(mid[c]), int(hi[c])]},
                }
    return {"ok": True, "checked": checked, "witness": None}
