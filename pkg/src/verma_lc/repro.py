"""Recomputation of the worked examples and counterexamples, diffed against
the fixture file shipped in ``data/repro_fixtures.json``."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Callable

from .exact_poly import SparsePoly, format_rational, normalize, pretty
from .flow_poly import FlowInstance, ehrhart_volume_oracle, lidskii_volume
from .hw_characters import (
    HoleFamily,
    ModuleSpec,
    dlc_scan,
    dlc_scan_function,
    hovm_single_hole_mult,
    hovm_sl2_blocks_mult,
    hovm_violation_witness,
    verma_mult,
    weight_at,
)
from .lie_structure import Root, SemisimpleSpec, Weight, hovm_dlc_predicted, jantzen_simple
from .lorentz_cert import is_discretely_log_concave, is_mconvex
from .partition_fn import DirectedMultigraph, kpf_g2
from .symfun2 import coeff_log_concavity, hall_littlewood, jack, macdonald, okounkov_difference

F = Fraction


def _s(x) -> str:
    return format_rational(F(x))


def _poly(num_vars: int, terms: dict) -> SparsePoly:
    return SparsePoly(num_vars, terms)


def huh_polynomials() -> tuple[SparsePoly, SparsePoly]:
    p = _poly(3, {(2, 0, 0): 1, (0, 2, 0): 100, (0, 0, 2): 1, (1, 1, 0): 10, (0, 1, 1): 10, (1, 0, 1): 10})
    q = _poly(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    return p, q


def qs_polynomials(b: Fraction, n: int = 2, k: int = 2) -> tuple[SparsePoly, SparsePoly]:
    """p = b^2 x0^2 + sum x_i^2 + b sum_{i<j} x_i x_j and q_S over all degree-k monomials."""
    m = n + 1
    terms = {}
    for i in range(m):
        e = [0] * m
        e[i] = 2
        terms[tuple(e)] = b * b if i == 0 else F(1)
        for j in range(i + 1, m):
            e = [0] * m
            e[i] = e[j] = 1
            terms[tuple(e)] = b
    from itertools import combinations_with_replacement

    qs = {}
    for combo in combinations_with_replacement(range(m), k):
        e = [0] * m
        for c in combo:
            e[c] += 1
        qs[tuple(e)] = 1
    return _poly(m, terms), _poly(m, qs)


def pbt_polynomials(b, t, a, c) -> tuple[SparsePoly, SparsePoly]:
    """p_{b,t}(x,y,z) and q = x^2 + a x y + c y^2."""
    b, t, a, c = F(b), F(t), F(a), F(c)
    p = _poly(3, {(2, 2, 0): b * b, (2, 1, 1): b, (2, 0, 2): 1, (1, 2, 1): b * b, (0, 2, 2): b * b, (1, 1, 2): t})
    q = _poly(3, {(2, 0, 0): 1, (1, 1, 0): a, (0, 2, 0): c})
    return p, q


def case_g2() -> dict:
    vals = {f"K({a},{a})": kpf_g2(a, a) for a in (4, 5, 6)}
    rep = dlc_scan_function(lambda v: kpf_g2(*v), [(5, 5)], [(1, 1)])
    vals["inequality"] = rep.witness["inequality"] if not rep.verdict else "none"
    return vals


def case_table1() -> dict:
    spec = SemisimpleSpec([3])
    lam = Weight.zero(spec)
    out = {"verma(-a1-a2-a3)": verma_mult(spec, lam, weight_at(spec, lam, (1, 1, 1)))}
    for p in (1, 2, 3):
        out[f"hovm(-a1-a2-{p}a3)"] = hovm_single_hole_mult(spec, lam, [1, 3], weight_at(spec, lam, (1, 1, p)))
    module = ModuleSpec(spec, lam, "higher_order", holes=HoleFamily(spec, [[1, 3]]))
    rep = dlc_scan(module, ((1, 1, 2), (1, 1, 2)), [Root(1, 3, 4)])
    out["violation"] = rep.witness["inequality"] if not rep.verdict else "none"
    return out


def case_huh_product() -> dict:
    p, q = huh_polynomials()
    rep = is_discretely_log_concave(p * q, dirs=[(2, 3)])
    w = rep.witness or {}
    return {
        "p_adlc": bool(is_discretely_log_concave(p)),
        "q_adlc": bool(is_discretely_log_concave(q)),
        "supports_mconvex": bool(is_mconvex(p.terms.keys())) and bool(is_mconvex(q.terms.keys())),
        "product_adlc": rep.verdict,
        "witness_mu": list(w.get("mu", [])),
        "witness_values": f"{_s(w.get('c_mu_squared', 0))} < {_s(w.get('neighbor_product', 0))}",
    }


def case_adlc_qs() -> dict:
    b = F(13, 2)
    p, q = qs_polynomials(b)
    pq = p * q
    cs = [pq.coeff(e) for e in ((2, 2, 0), (1, 2, 1), (0, 2, 2))]
    return {
        "coefficients": [_s(c) for c in cs],
        "inequality": f"{_s(cs[1] ** 2)} < {_s(cs[0] * cs[2])}",
        "violated": cs[1] ** 2 < cs[0] * cs[2],
        "p_adlc": bool(is_discretely_log_concave(p)),
        "q_adlc": bool(is_discretely_log_concave(q)),
        "product_adlc": bool(is_discretely_log_concave(pq)),
    }


def case_adlc_pbt() -> dict:
    p, q = pbt_polynomials(1, 5, 2, 1)
    pq = p * q
    cs = [pq.coeff(e) for e in ((4, 2, 0), (3, 2, 1), (2, 2, 2))]
    return {
        "triple": [_s(c) for c in cs],
        "inequality": f"{_s(cs[1] ** 2)} < {_s(cs[0] * cs[2])}",
        "p_adlc": bool(is_discretely_log_concave(p)),
        "product_adlc": bool(is_discretely_log_concave(pq)),
    }


JACK_GRID = ("1/4", "1/2", "9/10", "1", "2", "10")


def case_jack_lc() -> dict:
    out = {}
    for a in (3, 4, 5):
        out[f"a={a}"] = [bool(coeff_log_concavity(jack(a, 0, F(tau)))) for tau in JACK_GRID]
    out["xy coefficient (2,0)"] = _s(jack(2, 0, F(1, 2)).coeff((1, 1)))
    return out


def case_mac_lc() -> dict:
    out = {}
    for q, t in (("1/2", "1/4"), ("1/4", "1/2"), ("9/10", "1/10"), ("1/10", "9/10")):
        out[f"q={q},t={t}"] = bool(coeff_log_concavity(macdonald(2, 0, F(q), F(t))))
    out["xy coefficient q=1/2,t=1/4"] = _s(macdonald(2, 0, F(1, 2), F(1, 4)).coeff((1, 1)))
    return out


def case_hl_lc() -> dict:
    p = hall_littlewood(2, 0, F(1, 2))
    return {"xy coefficient": _s(p.coeff((1, 1))), "log_concave": bool(coeff_log_concavity(p))}


def case_okounkov_jack() -> dict:
    diff, _ = okounkov_difference("jack", {"tau": F(1, 2)}, ((3, 0), (1, 0), (2, 0)))
    return {"x^3y coefficient": _s(diff.coeff((3, 1))), "xy^3 coefficient": _s(diff.coeff((1, 3)))}


def case_okounkov_mac() -> dict:
    t = F(1, 2)
    diff, rep = okounkov_difference("mac", {"q": 0, "t": t}, ((3, 0), (1, 0), (2, 0)), [(1, F(2, 5))])
    # -xy(tx - y)(x - ty)
    factor = _poly(2, {(3, 1): -t, (2, 2): 1 + t * t, (1, 3): -t})
    return {"equals_factored_form": diff == factor, "value_at_(1,2/5)": _s(rep.witness["value"]) if not rep.verdict else "nonnegative"}


def case_hovm_sl4() -> dict:
    spec = SemisimpleSpec([3])
    fam = HoleFamily(spec, [[1, 3]])
    w = hovm_violation_witness(spec, Weight.zero(spec), fam)
    module = ModuleSpec(spec, Weight.zero(spec), "higher_order", holes=fam)
    scan = dlc_scan(module, 3)
    single = ModuleSpec(spec, Weight.zero(spec), "higher_order", holes=HoleFamily(spec, [[2]]))
    return {
        "predicted_lc {1,3}": hovm_dlc_predicted(spec, [1, 3]),
        "construction_values": w["values"],
        "scan_finds_violation": not scan.verdict,
        "predicted_lc {2}": hovm_dlc_predicted(spec, [2]),
        "scan_singleton_ok": dlc_scan(single, 3).verdict,
    }


def case_lidskii_k3() -> dict:
    K3 = DirectedMultigraph.complete(3)
    vol = lidskii_volume(K3)
    return {
        "volume": pretty(vol, ["a1", "a2"]),
        "oracle(2,1)": _s(ehrhart_volume_oracle(FlowInstance(K3, (2, 1)))),
        "lidskii(2,1)": _s(vol.evaluate([2, 1])),
    }


def case_jantzen_sl3() -> dict:
    spec = SemisimpleSpec([2])
    return {
        "(2,0) J={1,2}": jantzen_simple(spec, Weight([[2, 0]]), [1, 2]),
        "(1,-1/2) J={1}": jantzen_simple(spec, Weight([["1", "-1/2"]]), [1]),
        "(1,-2) J={1}": jantzen_simple(spec, Weight([[1, -2]]), [1]),
    }


def case_sl2_blocks() -> dict:
    spec = SemisimpleSpec([1, 1])
    lam = Weight.zero(spec)
    H = [(1, 1), (2, 1)]
    module = ModuleSpec(spec, lam, "higher_order", holes=HoleFamily(spec, [H]))
    return {
        "mult(-a1-a2)": hovm_sl2_blocks_mult(spec, lam, H, weight_at(spec, lam, (1, 1))),
        "mult(-2a1)": hovm_sl2_blocks_mult(spec, lam, H, weight_at(spec, lam, (2, 0))),
        "mult(lambda)": hovm_sl2_blocks_mult(spec, lam, H, lam),
        "predicted_lc": hovm_dlc_predicted(spec, H),
        "scan_radius6_ok": dlc_scan(module, 6).verdict,
    }


CASES: dict[str, Callable[[], dict]] = {
    "g2": case_g2,
    "table1": case_table1,
    "huh-product": case_huh_product,
    "adlc-qs": case_adlc_qs,
    "adlc-pbt": case_adlc_pbt,
    "jack-lc": case_jack_lc,
    "mac-lc": case_mac_lc,
    "hl-lc": case_hl_lc,
    "okounkov-jack": case_okounkov_jack,
    "okounkov-mac": case_okounkov_mac,
    "hovm-sl4": case_hovm_sl4,
    "lidskii-k3": case_lidskii_k3,
    "jantzen-sl3": case_jantzen_sl3,
    "sl2-blocks": case_sl2_blocks,
}


def load_fixtures() -> dict:
    text = resources.files("verma_lc").joinpath("data/repro_fixtures.json").read_text()
    return {case["id"]: case for case in json.loads(text)["cases"]}


def run_repro(case_id: str, fixtures: dict | None = None) -> dict:
    """Recompute one case and diff it against its fixture."""
    if case_id not in CASES:
        raise KeyError(f"unknown repro case {case_id!r}; known: {', '.join(CASES)}")
    fixtures = load_fixtures() if fixtures is None else fixtures
    expected = fixtures[case_id]["expected"]
    actual = CASES[case_id]()
    mismatches = []
    for key, entry in expected.items():
        got = actual.get(key)
        if got != entry["value"]:
            mismatches.append({"key": key, "expected": entry["value"], "actual": got})
    return {"id": case_id, "ok": not mismatches, "actual": actual, "mismatches": mismatches}
