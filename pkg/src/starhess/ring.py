"""Exact arithmetic kernel.

Three coefficient carriers are used throughout the package:

* ``fractions.Fraction`` for exact rationals,
* :class:`MultiPoly`, sparse polynomials with integer coefficients in the
  indeterminates ``a0, a1, ...`` (the alpha sequence),
* :class:`UniPoly`, dense univariate polynomials in ``x`` whose
  coefficients are either of the above.

Monomials of a :class:`MultiPoly` are packed into a single Python integer,
``FIELD_BITS`` bits per indeterminate, so that multiplying monomials is one
integer addition.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from starhess.errors import MissingAssignment

FIELD_BITS = 16
_FIELD_MASK = (1 << FIELD_BITS) - 1
_MAX_DEGREE = _FIELD_MASK

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Decimal strings and floats are refused so that nothing inexact slips in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal notation is not accepted: {value!r}")
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def pochhammer(c, n: int) -> Fraction:
    """Rising factorial ``c (c+1) ... (c+n-1)``; equals 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    c = as_rational(c)
    out = Fraction(1)
    for i in range(n):
        out *= c + i
    return out


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over the integers
# ---------------------------------------------------------------------------

def _pack(exps: Iterable[tuple[int, int]]) -> int:
    key = 0
    for i, e in exps:
        if i < 0 or e < 0:
            raise ValueError("indices and exponents must be nonnegative")
        if e > _MAX_DEGREE:
            raise OverflowError("exponent does not fit in a monomial field")
        key += e << (FIELD_BITS * i)
    return key


def _unpack(key: int) -> list[tuple[int, int]]:
    exps = []
    i = 0
    while key:
        e = key & _FIELD_MASK
        if e:
            exps.append((i, e))
        key >>= FIELD_BITS
        i += 1
    return exps


def _key_degree(key: int) -> int:
    return sum(e for _, e in _unpack(key))


def _term_order(item: tuple[int, int]):
    key = item[0]
    exps = _unpack(key)
    return (sum(e for _, e in exps), exps)


class MultiPoly:
    """Immutable sparse polynomial in ``a0, a1, ...`` with integer coefficients.

    Arithmetic mixes freely with Python ints.  Equality is structural equality
    of the canonical term maps (no stored zero coefficients).
    """

    __slots__ = ("_terms", "_deg")

    def __init__(self, terms: Mapping[int, int] | None = None, *, _deg: int | None = None):
        clean = {k: c for k, c in (terms or {}).items() if c}
        self._terms = clean
        if _deg is None:
            _deg = max((_key_degree(k) for k in clean), default=0)
        self._deg = _deg

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls({}, _deg=0)

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({0: 1}, _deg=0)

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        if not isinstance(c, int):
            raise TypeError("MultiPoly coefficients are integers")
        return cls({0: c}, _deg=0)

    @classmethod
    def var(cls, i: int) -> "MultiPoly":
        return cls({1 << (FIELD_BITS * i): 1}, _deg=1)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Sequence[tuple[int, int]], int]]) -> "MultiPoly":
        acc: dict[int, int] = {}
        for exps, coef in terms:
            key = _pack(exps)
            acc[key] = acc.get(key, 0) + int(coef)
        return cls(acc)

    @classmethod
    def from_index_counts(cls, counts: Mapping[tuple[int, ...], int]) -> "MultiPoly":
        """Build ``sum count * prod(a_i for i in key)`` from multiset keys."""
        acc: dict[int, int] = {}
        deg = 0
        for idx, count in counts.items():
            key = 0
            for i in idx:
                key += 1 << (FIELD_BITS * i)
            acc[key] = acc.get(key, 0) + count
            deg = max(deg, len(idx))
        return cls(acc, _deg=deg)

    # inspection ---------------------------------------------------------
    @property
    def nterms(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[list[tuple[int, int]], int]]:
        """Terms in canonical graded-lex order as ``(exps, coef)`` pairs."""
        return [(_unpack(k), c) for k, c in sorted(self._terms.items(), key=_term_order)]

    def normalise(self) -> "MultiPoly":
        return MultiPoly.from_terms(self.terms())

    def total_degree(self) -> int:
        return max((_key_degree(k) for k in self._terms), default=0)

    def indices(self) -> set[int]:
        return {i for k in self._terms for i, _ in _unpack(k)}

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(0, 0)

    def is_coefficientwise_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return MultiPoly.const(other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return MultiPoly.const(other.numerator)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return MultiPoly(acc, _deg=max(self._deg, other._deg))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self._terms.items()}, _deg=self._deg)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly.zero()
        deg = self._deg + other._deg
        if deg > _MAX_DEGREE:
            raise OverflowError("product degree exceeds the monomial field width")
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            return MultiPoly({ka + kb: ca * cb for ka, ca in a.items()}, _deg=deg)
        acc: dict[int, int] = {}
        get = acc.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                acc[k] = get(k, 0) + ca * cb
        return MultiPoly(acc, _deg=deg)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # evaluation ---------------------------------------------------------
    def substitute(self, assignment: Mapping[int, object] | Callable[[int], object]) -> Fraction:
        """Exact value under ``a_i -> assignment[i]``."""
        lookup = assignment if callable(assignment) else assignment.__getitem__
        cache: dict[int, Fraction] = {}
        total = Fraction(0)
        for key, coef in self._terms.items():
            value = Fraction(coef)
            for i, e in _unpack(key):
                if i not in cache:
                    try:
                        cache[i] = as_rational(lookup(i))
                    except (KeyError, IndexError):
                        raise MissingAssignment(i) from None
                value *= cache[i] ** e
            total += value
        return total

    # serialisation ------------------------------------------------------
    def to_json(self) -> dict:
        return {"terms": [{"exps": [[i, e] for i, e in exps], "coef": str(c)}
                          for exps, c in self.terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        return cls.from_terms(((tuple(map(tuple, t["exps"])), int(t["coef"])) for t in data["terms"]))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(f"a{i}" if e == 1 else f"a{i}^{e}" for i, e in exps)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def substitute_alpha(p, assignment) -> Fraction:
    """Evaluate a ring element at a rational alpha assignment."""
    if isinstance(p, MultiPoly):
        return p.substitute(assignment)
    return as_rational(p)


RingElement = Union[Fraction, MultiPoly, int]


def is_zero(c) -> bool:
    return not c


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------

class UniPoly:
    """Immutable dense polynomial in ``x``, coefficients indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coef=1) -> "UniPoly":
        zero = coef * 0
        return cls([zero] * degree + [coef])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if not cb:
                    continue
                t = ca * cb
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        zero = a[-1] * 0
        return UniPoly([zero if c is None else c for c in out])

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "UniPoly":
        return UniPoly([c * a for a in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        zero = self.coeffs[-1] * 0
        return UniPoly([zero] * k + list(self.coeffs))

    def compose_power(self, m: int) -> "UniPoly":
        """``p(x**m)``."""
        if not self.coeffs:
            return self
        zero = self.coeffs[-1] * 0
        out = [zero] * (m * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return UniPoly(out)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs])

    def to_json(self, encode=None) -> dict:
        encode = encode or encode_element
        return {"coeffs": [encode(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping, decode=None) -> "UniPoly":
        decode = decode or decode_element
        return cls([decode(c) for c in data["coeffs"]])

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            neg = isinstance(c, (int, Fraction)) and c < 0
            if neg:
                c = -c
            cs = format_rational(Fraction(c)) if isinstance(c, (int, Fraction)) else repr(c)
            if isinstance(c, MultiPoly) and c.nterms > 1:
                cs = f"({cs})"
            body = mono if mono and c == 1 else (f"{cs}*{mono}" if mono else cs)
            parts.append(("- " if neg else "+ ") + body)
        text = " ".join(parts)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        return f"UniPoly({text})"


def differentiate(p: UniPoly) -> UniPoly:
    return UniPoly([i * c for i, c in enumerate(p.coeffs)][1:])


def poly_divmod(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Euclidean division over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lead = Fraction(b.leading)
    if len(rem) <= db:
        return UniPoly(), UniPoly(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        q = rem[i] / lead
        if q:
            quot[i - db] = q
            for k, c in enumerate(b.coeffs):
                rem[i - db + k] -= q * c
    return UniPoly(quot), UniPoly(rem[:db])


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (zero if both inputs are zero)."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return a
    return a.scale(1 / Fraction(a.leading))


# ---------------------------------------------------------------------------
# JSON encoding of ring elements
# ---------------------------------------------------------------------------

def encode_element(c):
    if isinstance(c, MultiPoly):
        return c.to_json()
    if isinstance(c, bool):
        raise TypeError("booleans are not ring elements")
    if isinstance(c, (int, Fraction)):
        return format_rational(Fraction(c))
    raise TypeError(f"cannot encode {type(c).__name__}")


def decode_element(data):
    if isinstance(data, Mapping):
        return MultiPoly.from_json(data)
    return as_rational(data)
