"""Exact scalar arithmetic: rationals and sparse multivariate polynomials.

A :class:`PolyExpr` is a finite sum of terms ``coef * p1^e1 * p2^e2 * ...``
with ``coef`` a :class:`fractions.Fraction` and the ``p_i`` named real
parameters.  Exponents are integers and may be negative (Laurent terms),
which is needed for basis changes whose coefficients contain inverse
powers of a deformation parameter.

Representation::

    terms : dict[Monomial, Fraction]
    Monomial = tuple[(name, exponent), ...]   sorted by name, exponent != 0

Zero coefficients are never stored, so equality of the ``terms`` dicts is
equality of polynomials, and the textual serialization is canonical: for
every polynomial ``p``, ``PolyExpr.parse(str(p)) == p`` bit-exactly.

All values are immutable; instances can be shared freely between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import NotDivisible, PolyParseError, UnassignedParameter

Q = Fraction

Monomial = tuple  # tuple[tuple[str, int], ...]
PolyLike = Union["PolyExpr", Fraction, int, str]

_ONE_MONOMIAL: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Multiply two monomials by adding exponents of shared parameters."""
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, e in b:
        new = exps.get(name, 0) + e
        if new == 0:
            exps.pop(name, None)
        else:
            exps[name] = new
    return tuple(sorted(exps.items()))


def _mono_pow(a: Monomial, n: int) -> Monomial:
    return tuple((name, e * n) for name, e in a) if n != 0 else _ONE_MONOMIAL


class PolyExpr:
    """Exact polynomial (Laurent) in named real parameters over ℚ."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, coef in terms.items():
                coef = Q(coef)
                if coef != 0:
                    clean[mono] = coef
        object.__setattr__(self, "terms", clean)

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls) -> PolyExpr:
        return cls()

    @classmethod
    def one(cls) -> PolyExpr:
        return cls.const(1)

    @classmethod
    def const(cls, value: int | Fraction) -> PolyExpr:
        return cls({_ONE_MONOMIAL: Q(value)})

    @classmethod
    def param(cls, name: str, exponent: int = 1) -> PolyExpr:
        if not _NAME_RE.fullmatch(name):
            raise PolyParseError(f"invalid parameter name: {name!r}")
        if exponent == 0:
            return cls.one()
        return cls({((name, exponent),): Q(1)})

    # -- ring structure -----------------------------------------------

    def __setattr__(self, *_):  # pragma: no cover - guards immutability
        raise AttributeError("PolyExpr is immutable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyExpr.const(other)
        if not isinstance(other, PolyExpr):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # mutable-dict payload; not usable as a dict key

    def __add__(self, other: PolyLike) -> PolyExpr:
        other = as_poly(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            new = out.get(mono, Q(0)) + coef
            if new == 0:
                out.pop(mono, None)
            else:
                out[mono] = new
        return PolyExpr(out)

    __radd__ = __add__

    def __neg__(self) -> PolyExpr:
        return PolyExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> PolyExpr:
        return self + (-as_poly(other))

    def __rsub__(self, other: PolyLike) -> PolyExpr:
        return as_poly(other) + (-self)

    def __mul__(self, other: PolyLike) -> PolyExpr:
        other = as_poly(other)
        if not self.terms or not other.terms:
            return PolyExpr()
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = _mono_mul(ma, mb)
                new = out.get(mono, Q(0)) + ca * cb
                if new == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = new
        return PolyExpr(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PolyExpr:
        if not isinstance(n, int) or n < 0:
            raise ValueError("PolyExpr exponent must be a nonnegative integer")
        result = PolyExpr.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- queries --------------------------------------------------------

    def parameters(self) -> frozenset[str]:
        """Names of all parameters occurring with nonzero exponent."""
        return frozenset(name for mono in self.terms for name, _ in mono)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if parameters occur."""
        if not self.terms:
            return Q(0)
        if set(self.terms) == {_ONE_MONOMIAL}:
            return self.terms[_ONE_MONOMIAL]
        raise ValueError(f"not a constant polynomial: {self}")

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {_ONE_MONOMIAL}

    @property
    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    # -- evaluation and substitution ------------------------------------

    def evaluate(self, assignment: Mapping[str, object]):
        """Evaluate at a point.

        Every parameter occurring in the polynomial must be assigned,
        otherwise :class:`UnassignedParameter` is raised.  The result type
        follows the inputs: all-exact assignments (int/Fraction) give a
        Fraction, floats give a float.
        """
        missing = self.parameters() - set(assignment)
        if missing:
            raise UnassignedParameter(
                "no value for parameter(s): " + ", ".join(sorted(missing))
            )
        values = {
            k: Q(v) if isinstance(v, int) else v for k, v in assignment.items()
        }
        total = None
        for mono, coef in self.terms.items():
            term = coef
            for name, e in mono:
                term = term * values[name] ** e
            total = term if total is None else total + term
        if total is None:
            return Q(0)
        return total

    def substitute(self, mapping: Mapping[str, PolyLike]) -> PolyExpr:
        """Replace parameters by polynomials, exactly.

        A parameter occurring with a negative exponent may only be replaced
        by a single-term polynomial (so that its inverse is again a Laurent
        term); anything else raises :class:`NotDivisible`.
        """
        polys = {name: as_poly(v) for name, v in mapping.items()}
        out = PolyExpr.zero()
        for mono, coef in self.terms.items():
            term = PolyExpr.const(coef)
            for name, e in mono:
                if name not in polys:
                    term = term * PolyExpr.param(name, e)
                    continue
                rep = polys[name]
                if e >= 0:
                    term = term * rep**e
                else:
                    term = term * _invert_single_term(rep) ** (-e)
            out = out + term
        return out

    def div_exact(self, divisor: PolyLike) -> PolyExpr:
        """Exact division; raises :class:`NotDivisible` on nonzero remainder."""
        return poly_div_exact(self, divisor)

    # -- canonical text form --------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            coef = self.terms[mono]
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in mono
            ]
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coef > 0 else "-" + body)
            else:
                parts.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"PolyExpr({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> PolyExpr:
        """Parse the textual form produced by ``str()`` (and mild variants)."""
        return _parse_poly(text)


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>\d+)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise PolyParseError(f"cannot tokenize {text[pos:]!r}")
            break
        pos = m.end()
        for kind in ("name", "num", "op"):
            if m.group(kind) is not None:
                tokens.append((kind, m.group(kind)))
                break
    return tokens


def _parse_poly(text: str) -> PolyExpr:
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial string")
    result = PolyExpr.zero()
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] == ("op", "+") or i < n and tokens[i] == ("op", "-"):
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise PolyParseError(f"dangling sign in {text!r}")
        term = PolyExpr.const(sign)
        expect_factor = True
        while i < n:
            kind, val = tokens[i]
            if expect_factor:
                if kind == "num":
                    coef = Q(int(val))
                    i += 1
                    if i < n and tokens[i] == ("op", "/"):
                        if i + 1 < n and tokens[i + 1][0] == "num":
                            coef = coef / int(tokens[i + 1][1])
                            i += 2
                        else:
                            raise PolyParseError(f"bad rational in {text!r}")
                    term = term * PolyExpr.const(coef)
                elif kind == "name":
                    exponent = 1
                    i += 1
                    if i < n and tokens[i] == ("op", "^"):
                        i += 1
                        neg = False
                        if i < n and tokens[i] == ("op", "-"):
                            neg = True
                            i += 1
                        if i >= n or tokens[i][0] != "num":
                            raise PolyParseError(f"bad exponent in {text!r}")
                        exponent = -int(tokens[i][1]) if neg else int(tokens[i][1])
                        i += 1
                    term = term * PolyExpr.param(val, exponent)
                else:
                    raise PolyParseError(f"unexpected {val!r} in {text!r}")
                expect_factor = False
            else:
                if (kind, val) == ("op", "*"):
                    expect_factor = True
                    i += 1
                elif kind == "op" and val in "+-":
                    break
                else:
                    raise PolyParseError(f"unexpected {val!r} in {text!r}")
        result = result + term
    return result


def as_poly(value: PolyLike) -> PolyExpr:
    """Coerce ints, Fractions and poly strings to :class:`PolyExpr`."""
    if isinstance(value, PolyExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return PolyExpr.const(value)
    if isinstance(value, str):
        return PolyExpr.parse(value)
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


def _invert_single_term(p: PolyExpr) -> PolyExpr:
    if len(p.terms) != 1:
        raise NotDivisible(f"cannot invert multi-term polynomial {p}")
    (mono, coef), = p.terms.items()
    return PolyExpr({_mono_pow(mono, -1): Q(1) / coef})


# -- spec-level operation aliases ---------------------------------------


def poly_add(a: PolyLike, b: PolyLike) -> PolyExpr:
    """Exact sum in canonical form."""
    return as_poly(a) + as_poly(b)


def poly_mul(a: PolyLike, b: PolyLike) -> PolyExpr:
    """Exact product in canonical form."""
    return as_poly(a) * as_poly(b)


def poly_eval(p: PolyLike, assignment: Mapping[str, object]):
    """Evaluate ``p`` at the given parameter assignment."""
    return as_poly(p).evaluate(assignment)


def poly_is_zero(p: PolyLike) -> bool:
    """True iff ``p`` is identically the zero polynomial."""
    return as_poly(p).is_zero


# -- exact division ------------------------------------------------------


def _mono_key(params: tuple[str, ...]):
    def key(mono_exps: tuple[int, ...]):
        return (sum(mono_exps), mono_exps)

    return key


def _content_shift(p: PolyExpr, params: tuple[str, ...]) -> dict[str, int]:
    """Per-parameter minimum exponent across terms (absent parameter = 0)."""
    shift = {name: 0 for name in params}
    first = True
    for mono in p.terms:
        exps = dict(mono)
        for name in params:
            e = exps.get(name, 0)
            shift[name] = e if first else min(shift[name], e)
        first = False
    return shift


def poly_div_exact(a: PolyLike, b: PolyLike) -> PolyExpr:
    """Return q with a == q * b, or raise :class:`NotDivisible`.

    Both operands are reduced by their monomial content (making ordinary
    polynomials with per-parameter minimum exponent zero), then multivariate
    long division runs under a graded ordering; the content quotient is a
    Laurent monomial reattached at the end.  In the Laurent ring this finds
    the quotient whenever one exists.
    """
    a = as_poly(a)
    b = as_poly(b)
    if b.is_zero:
        raise NotDivisible("division by the zero polynomial")
    if a.is_zero:
        return PolyExpr.zero()
    if b.is_single_term:
        inv = _invert_single_term(b)
        return a * inv

    params = tuple(sorted(a.parameters() | b.parameters()))
    shift_a = _content_shift(a, params)
    shift_b = _content_shift(b, params)

    def to_vec(poly: PolyExpr, shift: dict[str, int]):
        out = {}
        for mono, coef in poly.terms.items():
            exps = dict(mono)
            out[tuple(exps.get(p, 0) - shift[p] for p in params)] = coef
        return out

    key = _mono_key(params)
    rem = to_vec(a, shift_a)
    div = to_vec(b, shift_b)
    lead_b = max(div, key=key)
    quo: dict[tuple[int, ...], Fraction] = {}
    while rem:
        lead_r = max(rem, key=key)
        diff = tuple(er - eb for er, eb in zip(lead_r, lead_b))
        if any(d < 0 for d in diff):
            raise NotDivisible(f"({a}) is not divisible by ({b})")
        c = rem[lead_r] / div[lead_b]
        quo[diff] = c
        for exps, coef in div.items():
            mono = tuple(d + e for d, e in zip(diff, exps))
            new = rem.get(mono, Q(0)) - c * coef
            if new == 0:
                rem.pop(mono, None)
            else:
                rem[mono] = new
    terms = {}
    for exps, coef in quo.items():
        mono = tuple(
            (p, e)
            for p, e in (
                (p, x + shift_a[p] - shift_b[p]) for p, x in zip(params, exps)
            )
            if e
        )
        terms[mono] = coef
    return PolyExpr(terms)
