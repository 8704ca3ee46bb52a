"""Sparse multivariate Laurent polynomials with exact rational coefficients."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-1/2"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValueError(f"malformed rational {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def exp_factorial(mu: Iterable[int]) -> int:
    out = 1
    for e in mu:
        out *= factorial(e)
    return out


class SparsePoly:
    """Finite sum of rational coefficients times monomials ``x^mu``, mu in Z^m.

    Instances are immutable. Zero coefficients are never stored; the zero
    polynomial is the empty term map.
    """

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[tuple, object] | Iterable = ()):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        self.num_vars = num_vars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, Fraction] = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {num_vars}")
            c = as_rational(coeff)
            if c:
                acc[exp] = acc.get(exp, Fraction(0)) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, num_vars: int) -> SparsePoly:
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, c=1) -> SparsePoly:
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def monomial(cls, exp: Iterable[int], c=1) -> SparsePoly:
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> SparsePoly:
        """The variable ``x_{i+1}`` (0-based index ``i``)."""
        exp = [0] * num_vars
        exp[i] = 1
        return cls(num_vars, {tuple(exp): 1})

    @classmethod
    def _raw(cls, num_vars: int, terms: dict) -> SparsePoly:
        # terms already cleaned: tuple keys, nonzero Fraction values
        obj = cls.__new__(cls)
        obj.num_vars = num_vars
        obj._terms = terms
        obj._hash = None
        return obj

    # access

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def coeff(self, exp) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.num_vars == other.num_vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePoly.constant(self.num_vars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"SparsePoly({self.num_vars}, {dict(self.items())!r})"

    # arithmetic

    def _check(self, other: SparsePoly):
        if not isinstance(other, SparsePoly):
            raise TypeError(f"expected SparsePoly, got {type(other).__name__}")
        if other.num_vars != self.num_vars:
            raise ValueError(f"variable-count mismatch: {self.num_vars} vs {other.num_vars}")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SparsePoly.constant(self.num_vars, other)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> SparsePoly:
        c = as_rational(c)
        if not c:
            return SparsePoly.zero(self.num_vars)
        return SparsePoly._raw(self.num_vars, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        self._check(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly._raw(self.num_vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = SparsePoly.constant(self.num_vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, delta: Iterable[int]) -> SparsePoly:
        """Multiply by the monomial ``x^delta`` (delta may be negative)."""
        delta = tuple(delta)
        if len(delta) != self.num_vars:
            raise ValueError("shift vector has wrong length")
        return SparsePoly._raw(
            self.num_vars,
            {tuple(a + b for a, b in zip(e, delta)): c for e, c in self._terms.items()},
        )

    def evaluate(self, point) -> Fraction:
        point = [as_rational(p) for p in point]
        if len(point) != self.num_vars:
            raise ValueError("evaluation point has wrong length")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                term *= x**k
            total += term
        return total

    def substitute_scalars(self, keep: Iterable[int], values: Mapping[int, object]) -> SparsePoly:
        """Set the variables in ``values`` to constants and keep the variables ``keep`` in order."""
        keep = list(keep)
        vals = {i: as_rational(v) for i, v in values.items()}
        out: dict[tuple, Fraction] = {}
        for e, c in self._terms.items():
            for i, v in vals.items():
                c *= v ** e[i]
            key = tuple(e[i] for i in keep)
            out[key] = out.get(key, 0) + c
        return SparsePoly(len(keep), out)

    def max_coefficient_denominator(self) -> int:
        from math import lcm

        d = 1
        for c in self._terms.values():
            d = lcm(d, c.denominator)
        return d


# -- operations -------------------------------------------------------------


def poly_arith(p: SparsePoly, q, op: str) -> SparsePoly:
    """Dispatch ``add``/``mul``/``scale``; for ``scale`` the second argument is a rational."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown op {op!r}")


def normalize(p: SparsePoly) -> SparsePoly:
    """Drop monomials with a negative exponent and divide each coefficient by mu!."""
    out = {}
    for e, c in p._terms.items():
        if min(e) >= 0:
            out[e] = c / exp_factorial(e)
    return SparsePoly._raw(p.num_vars, out)


def derivative(p: SparsePoly, beta: Iterable[int]) -> SparsePoly:
    beta = tuple(beta)
    if len(beta) != p.num_vars:
        raise ValueError("derivative multi-index has wrong length")
    if any(b < 0 for b in beta):
        raise ValueError("derivative multi-index must be nonnegative")
    out = {}
    for e, c in p._terms.items():
        coef = c
        ok = True
        for a, b in zip(e, beta):
            # falling factorial a(a-1)...(a-b+1); vanishes when 0 <= a < b
            for k in range(b):
                coef *= a - k
            if coef == 0:
                ok = False
                break
        if ok:
            out[tuple(a - b for a, b in zip(e, beta))] = coef
    return SparsePoly._raw(p.num_vars, out)


def support_and_degree(p: SparsePoly):
    """Return ``(support, homogeneous, degree)``; degree is None for the zero polynomial
    and for non-homogeneous input."""
    support = set(p._terms)
    degrees = {sum(e) for e in support}
    if not degrees:
        return support, True, None
    if len(degrees) == 1:
        return support, True, degrees.pop()
    return support, False, None


# -- text and JSON formats --------------------------------------------------

_VAR = re.compile(r"^x(\d+)(?:\^([+-]?\d+))?$")


def parse_poly_text(text: str, num_vars: int | None = None) -> SparsePoly:
    """Parse one term per line: ``<p>/<q> x1^e1 x2^e2 ...``.

    Blank lines and ``#`` comments are ignored. A bare variable ``x3`` means
    exponent 1. When ``num_vars`` is omitted it is the largest index used.
    """
    rows = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            coeff = as_rational(tokens[0])
        except (ValueError, TypeError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        exps: dict[int, int] = {}
        for tok in tokens[1:]:
            m = _VAR.match(tok)
            if not m:
                raise ValueError(f"line {lineno}: malformed factor {tok!r}")
            idx = int(m.group(1))
            if idx < 1:
                raise ValueError(f"line {lineno}: variables are numbered from x1")
            exps[idx] = exps.get(idx, 0) + int(m.group(2) or 1)
            top = max(top, idx)
        rows.append((coeff, exps))
    m = num_vars if num_vars is not None else max(top, 1)
    if top > m:
        raise ValueError(f"variable x{top} exceeds num_vars={m}")
    terms = []
    for coeff, exps in rows:
        vec = [0] * m
        for i, e in exps.items():
            vec[i - 1] = e
        terms.append((tuple(vec), coeff))
    return SparsePoly(m, terms)


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly_text(p: SparsePoly) -> str:
    lines = []
    for e, c in p.items():
        factors = [f"x{i + 1}^{k}" for i, k in enumerate(e) if k]
        lines.append(" ".join([format_rational(c), *factors]))
    return "\n".join(lines)


def poly_to_json(p: SparsePoly) -> dict:
    return {
        "num_vars": p.num_vars,
        "terms": [{"coeff": format_rational(c), "exp": list(e)} for e, c in p.items()],
    }


def poly_from_json(data) -> SparsePoly:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        m = int(data["num_vars"])
        terms = [(tuple(t["exp"]), as_rational(str(t["coeff"]))) for t in data["terms"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from None
    return SparsePoly(m, terms)


def pretty(p: SparsePoly, names: Iterable[str] | None = None) -> str:
    """Human-readable rendering, e.g. ``x1^2 + 2*x1*x2``."""
    names = list(names) if names else [f"x{i + 1}" for i in range(p.num_vars)]
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p._terms.items(), reverse=True):
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        if not mono:
            parts.append(format_rational(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{format_rational(c)}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")
