"""Exact arithmetic over the rationals and simple algebraic number fields.

A field is either QQ itself or Q[t]/(m(t)) for a monic irreducible m over Q.
Elements are coordinate vectors in the power basis of the generator.  All
arithmetic is exact; nothing in this module ever touches floating point.

Irreducibility of minimal polynomials is *not* checked here (that needs the
factorization layer, which sits on top of this module); `adjoin_root` in
`factor.py` is the checked constructor that library code should use.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import FieldMismatchError

Rational = Fraction

RationalLike = Union[int, Fraction]


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of univariate rational polynomials (ascending)."""
    num = _trim(num[:])
    den = _trim(den[:])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dd = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * max(len(num) - dd, 0)
    while _trim(num) and len(num) - 1 >= dd:
        shift = len(num) - 1 - dd
        factor = num[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num = _trim(num)
    return _trim(quot), num


def _poly_ext_gcd(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a[:], b[:]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while _trim(r1):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


class NumberField:
    """Q[t]/(m(t)) for a monic m over Q, presented in the power basis.

    Degree 1 is the rationals themselves (use the QQ singleton).  Structural
    identity: two fields are equal iff their minimal polynomials are equal.
    """

    __slots__ = ("minpoly", "name", "_red_rows")

    def __init__(self, minpoly: Sequence[RationalLike], name: str = "a"):
        mp = tuple(Fraction(c) for c in minpoly)
        if len(mp) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if mp[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.minpoly = mp
        self.name = name
        # Reduction table: t^k mod m for k = deg .. 2*deg-2, as coordinate rows.
        deg = len(mp) - 1
        rows = []
        cur = [-c for c in mp[:-1]]  # t^deg
        rows.append(tuple(cur))
        for _ in range(deg - 2):
            # Multiply the previous power by t: shift coordinates up one slot,
            # then fold the overflow on t^deg back down using m(t) = 0.
            top = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            if top:
                for i in range(deg):
                    nxt[i] -= top * mp[i]
            cur = nxt
            rows.append(tuple(cur))
        self._red_rows = tuple(rows)

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def is_rationals(self) -> bool:
        return self.degree == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __repr__(self) -> str:
        if self.is_rationals:
            return "QQ"
        return f"NumberField({self.name}; {self.minpoly})"

    # -- element constructors -------------------------------------------------

    def element(self, coords: Sequence[RationalLike]) -> "FieldElement":
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.degree:
            raise ValueError("coordinate vector longer than field degree")
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([1])

    def gen(self) -> "FieldElement":
        if self.is_rationals:
            raise ValueError("the rationals have no generator element")
        return self.element([0, 1])

    def from_rational(self, q: RationalLike) -> "FieldElement":
        return self.element([Fraction(q)])

    def coerce(self, value) -> "FieldElement":
        """Lift ints, Fractions and QQ-elements into this field."""
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            if value.field.is_rationals:
                return self.from_rational(value.coords[0])
            if self.is_rationals and value.is_rational():
                return self.from_rational(value.as_rational())
            raise FieldMismatchError(
                f"cannot coerce element of {value.field} into {self}")
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into a field element")

    def _reduce(self, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
        """Reduce an ascending coefficient list (len <= 2*deg-1) mod minpoly."""
        deg = self.degree
        out = list(coeffs[:deg]) + [Fraction(0)] * max(0, deg - len(coeffs))
        for k in range(deg, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._red_rows[k - deg]
                for i in range(deg):
                    out[i] += c * row[i]
        return tuple(out)


QQ = NumberField([0, 1], name="")
"""The field of rational numbers, as the canonical degree-1 instance."""


def common_field(a: NumberField, b: NumberField) -> NumberField:
    """The larger of two compatible fields (compatible = equal, or one is QQ)."""
    if a == b:
        return a
    if a.is_rationals:
        return b
    if b.is_rationals:
        return a
    raise FieldMismatchError(f"fields {a} and {b} are not compatible")


class FieldElement:
    """An element of a NumberField, stored as a power-basis coordinate vector."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    # -- arithmetic -----------------------------------------------------------

    def _pair(self, other) -> tuple["FieldElement", "FieldElement"]:
        if isinstance(other, FieldElement):
            fld = common_field(self.field, other.field)
            return fld.coerce(self), fld.coerce(other)
        if isinstance(other, (int, Fraction)):
            return self, self.field.from_rational(other)
        return NotImplemented, NotImplemented

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return FieldElement(a.field, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coords))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return FieldElement(a.field, tuple(x - y for x, y in zip(a.coords, b.coords)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        fld = a.field
        if fld.degree == 1:
            return FieldElement(fld, (a.coords[0] * b.coords[0],))
        prod = _poly_mul(list(a.coords), list(b.coords))
        return FieldElement(fld, fld._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        fld = self.field
        if fld.degree == 1:
            return FieldElement(fld, (1 / self.coords[0],))
        g, u, _ = _poly_ext_gcd(_trim(list(self.coords)), list(fld.minpoly))
        if len(g) != 1:
            # Can only happen if minpoly is reducible; surface loudly.
            raise ZeroDivisionError(
                "element is a zero divisor; minimal polynomial not irreducible?")
        inv = [c / g[0] for c in u]
        return FieldElement(fld, fld._reduce(inv))

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse().__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- identity -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        try:
            a, b = self._pair(other)
        except FieldMismatchError:
            return False
        return a.coords == b.coords

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.minpoly, self.coords))

    def __repr__(self) -> str:
        if self.is_rational():
            return str(self.coords[0])
        name = self.field.name or "t"
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = name if i == 1 else f"{name}^{i}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def embed(el: FieldElement, target: NumberField, gen_image: FieldElement) -> FieldElement:
    """Map `el` into `target` by sending its field generator to `gen_image`.

    The caller is responsible for `gen_image` actually being a root of the
    source minimal polynomial; `adjoin_root` constructs such maps safely.
    """
    acc = target.zero()
    for c in reversed(el.coords):
        acc = acc * gen_image + target.from_rational(c)
    return acc
