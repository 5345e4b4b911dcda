"""Sparse multivariate polynomials over exact fields, with resultants and gcd.

Polynomials are stored as maps from exponent tuples to nonzero field elements.
The zero polynomial has an empty term map and total degree -infinity.  All
operations are pure; instances are immutable by convention (term dicts are
copied on construction and never mutated afterwards).

The resultant is a Sylvester determinant evaluated by fraction-free Gaussian
elimination (Bareiss) with row pivoting, so entries stay polynomial at every
step.  The gcd uses a primitive pseudo-remainder sequence, recursing on the
number of active variables; both work uniformly over the rationals and over
simple extensions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import FieldMismatchError, InputError
from .fields import QQ, FieldElement, NumberField, common_field

Scalar = Union[int, Fraction, FieldElement]

NEG_INF = float("-inf")

DEFAULT_NAMES = {1: ("x",), 2: ("x", "y"), 3: ("x", "y", "z")}


class Poly:
    """Sparse polynomial in `nvars` variables over a NumberField."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, field: NumberField,
                 terms: Mapping[tuple[int, ...], FieldElement]):
        self.nvars = nvars
        self.field = field
        self.terms = dict(terms)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, field: NumberField = QQ) -> "Poly":
        return cls(nvars, field, {})

    @classmethod
    def const(cls, value: Scalar, nvars: int, field: NumberField = QQ) -> "Poly":
        if isinstance(value, FieldElement):
            field = value.field
            el = value
        else:
            el = field.coerce(value)
        if el.is_zero():
            return cls(nvars, field, {})
        return cls(nvars, field, {(0,) * nvars: el})

    @classmethod
    def var(cls, index: int, nvars: int, field: NumberField = QQ) -> "Poly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exp = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, field, {exp: field.one()})

    @classmethod
    def from_terms(cls, mapping: Mapping[tuple[int, ...], Scalar], nvars: int,
                   field: NumberField = QQ) -> "Poly":
        terms: dict[tuple[int, ...], FieldElement] = {}
        for exps, c in mapping.items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for {nvars} variables")
            el = field.coerce(c)
            if not el.is_zero():
                terms[exps] = terms.get(exps, field.zero()) + el
                if terms[exps].is_zero():
                    del terms[exps]
        return cls(nvars, field, terms)

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Scalar], index: int, nvars: int,
                        field: NumberField = QQ) -> "Poly":
        """Build from an ascending coefficient list in the given variable."""
        terms = {}
        for k, c in enumerate(coeffs):
            exp = tuple(k if i == index else 0 for i in range(nvars))
            terms[exp] = c
        return cls.from_terms(terms, nvars, field)

    # -- basic queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, index: int):
        if not self.terms:
            return NEG_INF
        return max(e[index] for e in self.terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coeff(self, exps: Sequence[int]) -> FieldElement:
        return self.terms.get(tuple(exps), self.field.zero())

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coeff((0,) * self.nvars)

    def variables_present(self) -> tuple[int, ...]:
        present = [False] * self.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    present[i] = True
        return tuple(i for i, p in enumerate(present) if p)

    # -- field plumbing ---------------------------------------------------------

    def with_field(self, field: NumberField) -> "Poly":
        if field == self.field:
            return self
        return Poly(self.nvars, field,
                    {e: field.coerce(c) for e, c in self.terms.items()})

    def map_coefficients(self, fn: Callable[[FieldElement], FieldElement],
                         field: NumberField) -> "Poly":
        terms = {}
        for e, c in self.terms.items():
            img = fn(c)
            if not img.is_zero():
                terms[e] = img
        return Poly(self.nvars, field, terms)

    def _unify(self, other) -> tuple["Poly", "Poly"]:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch between polynomials")
            fld = common_field(self.field, other.field)
            return self.with_field(fld), other.with_field(fld)
        if isinstance(other, (int, Fraction, FieldElement)):
            if isinstance(other, FieldElement):
                fld = common_field(self.field, other.field)
            else:
                fld = self.field
            return self.with_field(fld), Poly.const(fld.coerce(other), self.nvars, fld)
        return NotImplemented, NotImplemented

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other):
        a, b = self._unify(other)
        if a is NotImplemented:
            return NotImplemented
        terms = dict(a.terms)
        zero = a.field.zero()
        for e, c in b.terms.items():
            s = terms.get(e, zero) + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return Poly(a.nvars, a.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._unify(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._unify(other)
        if a is NotImplemented:
            return NotImplemented
        if not a.terms or not b.terms:
            return Poly(a.nvars, a.field, {})
        small, large = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
        terms: dict[tuple[int, ...], FieldElement] = {}
        zero = a.field.zero()
        for e1, c1 in small.terms.items():
            for e2, c2 in large.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, zero) + c1 * c2
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Poly(a.nvars, a.field, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Poly.const(1, self.nvars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "Poly":
        el = self.field.coerce(c) if not isinstance(c, FieldElement) else c
        if isinstance(c, FieldElement) and c.field != self.field:
            fld = common_field(self.field, c.field)
            return self.with_field(fld).scale(fld.coerce(c))
        if el.is_zero():
            return Poly.zero(self.nvars, self.field)
        return Poly(self.nvars, self.field,
                    {e: v * el for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, FieldElement)):
            other = Poly.const(other, self.nvars,
                               other.field if isinstance(other, FieldElement) else self.field)
        if not isinstance(other, Poly):
            return NotImplemented
        try:
            a, b = self._unify(other)
        except (FieldMismatchError, ValueError):
            return False
        return a.terms == b.terms

    __hash__ = None  # mutable dict inside; use canonical_key() for hashing needs

    def canonical_key(self):
        """Hashable exact identity (field minpoly + sorted term data)."""
        items = tuple(sorted((e, c.coords) for e, c in self.terms.items()))
        return (self.nvars, self.field.minpoly, items)

    # -- calculus and evaluation ---------------------------------------------------

    def derivative(self, index: int) -> "Poly":
        terms = {}
        zero = self.field.zero()
        for e, c in self.terms.items():
            k = e[index]
            if k == 0:
                continue
            ne = tuple(v - 1 if i == index else v for i, v in enumerate(e))
            s = terms.get(ne, zero) + c * k
            if s.is_zero():
                terms.pop(ne, None)
            else:
                terms[ne] = s
        return Poly(self.nvars, self.field, terms)

    def eval_all(self, values: Sequence[Scalar]) -> FieldElement:
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        fld = self.field
        vals = []
        for v in values:
            if isinstance(v, FieldElement):
                fld = common_field(fld, v.field)
            vals.append(v)
        vals = [fld.coerce(v) for v in vals]
        acc = fld.zero()
        for e, c in self.terms.items():
            term = fld.coerce(c)
            for i, k in enumerate(e):
                if k:
                    term = term * vals[i] ** k
            acc = acc + term
        return acc

    def coeffs_in(self, index: int) -> list["Poly"]:
        """Ascending coefficient list w.r.t. one variable.

        Each coefficient is a Poly in the same variable set with that
        variable's exponent zero.  Empty list for the zero polynomial.
        """
        if not self.terms:
            return []
        deg = self.degree_in(index)
        buckets: list[dict] = [dict() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            k = e[index]
            ne = tuple(0 if i == index else v for i, v in enumerate(e))
            buckets[k][ne] = c
        return [Poly(self.nvars, self.field, b) for b in buckets]

    @classmethod
    def from_coeffs_in(cls, coeffs: Sequence["Poly"], index: int) -> "Poly":
        if not coeffs:
            raise ValueError("empty coefficient list")
        nvars = coeffs[0].nvars
        fld = coeffs[0].field
        for c in coeffs:
            fld = common_field(fld, c.field)
        terms: dict[tuple[int, ...], FieldElement] = {}
        for k, cp in enumerate(coeffs):
            for e, c in cp.with_field(fld).terms.items():
                if e[index] != 0:
                    raise ValueError("coefficient already involves the main variable")
                ne = tuple(k if i == index else v for i, v in enumerate(e))
                terms[ne] = c
        return cls(nvars, fld, terms)

    def substitute(self, index: int, value) -> "Poly":
        """Replace one variable by a polynomial (same variable count) or scalar."""
        if not isinstance(value, Poly):
            value = Poly.const(value, self.nvars,
                               value.field if isinstance(value, FieldElement) else self.field)
        coeffs = self.coeffs_in(index)
        if not coeffs:
            return Poly.zero(self.nvars, common_field(self.field, value.field))
        acc = coeffs[-1]
        for k in range(len(coeffs) - 2, -1, -1):
            acc = acc * value + coeffs[k]
        return acc

    # -- homogenization -------------------------------------------------------------

    def homogenize(self, insert_at: int, degree: int | None = None) -> "Poly":
        """Insert a fresh variable at a position, making the result homogeneous.

        With `degree` given, pads to that total degree (error if smaller than
        the current degree).
        """
        if self.is_zero():
            raise ValueError("cannot homogenize the zero polynomial")
        d = self.degree()
        if degree is None:
            degree = d
        if degree < d:
            raise InputError(f"target degree {degree} below polynomial degree {d}")
        if not 0 <= insert_at <= self.nvars:
            raise ValueError("insertion position out of range")
        terms = {}
        for e, c in self.terms.items():
            pad = degree - sum(e)
            ne = e[:insert_at] + (pad,) + e[insert_at:]
            terms[ne] = c
        return Poly(self.nvars + 1, self.field, terms)

    def dehomogenize(self, index: int) -> "Poly":
        """Set one variable to 1 and remove it from the variable list."""
        if self.nvars < 2:
            raise ValueError("need at least two variables to dehomogenize")
        terms: dict[tuple[int, ...], FieldElement] = {}
        zero = self.field.zero()
        for e, c in self.terms.items():
            ne = e[:index] + e[index + 1:]
            s = terms.get(ne, zero) + c
            if s.is_zero():
                terms.pop(ne, None)
            else:
                terms[ne] = s
        return Poly(self.nvars - 1, self.field, terms)

    def insert_variable(self, position: int) -> "Poly":
        """Add a fresh variable (exponent 0 everywhere) at a position."""
        terms = {e[:position] + (0,) + e[position:]: c for e, c in self.terms.items()}
        return Poly(self.nvars + 1, self.field, terms)

    # -- division ----------------------------------------------------------------

    def lex_leading(self) -> tuple[tuple[int, ...], FieldElement]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def lex_trailing(self) -> tuple[tuple[int, ...], FieldElement]:
        if not self.terms:
            raise ValueError("zero polynomial has no trailing term")
        e = min(self.terms)
        return e, self.terms[e]

    def normalized(self) -> "Poly":
        """Scale so the coefficient at the lexicographically first exponent is 1."""
        if not self.terms:
            return self
        _, c = self.lex_trailing()
        if c == 1:
            return self
        return self.scale(c.inverse())

    def divexact(self, divisor: "Poly") -> "Poly":
        """Exact division; raises ValueError if the division is not exact."""
        a, b = self._unify(divisor)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if a.is_zero():
            return a
        if b.is_constant():
            return a.scale(b.constant_value().inverse())
        quot_terms: dict[tuple[int, ...], FieldElement] = {}
        rem = a
        eb, cb = b.lex_leading()
        cb_inv = cb.inverse()
        while not rem.is_zero():
            er, cr = rem.lex_leading()
            qe = tuple(x - y for x, y in zip(er, eb))
            if any(q < 0 for q in qe):
                raise ValueError("division is not exact")
            qc = cr * cb_inv
            quot_terms[qe] = qc
            rem = rem - Poly(a.nvars, a.field, {qe: qc}) * b
        return Poly(a.nvars, a.field, quot_terms)

    # -- display -------------------------------------------------------------------

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = DEFAULT_NAMES.get(self.nvars,
                                      tuple(f"x{i}" for i in range(self.nvars)))
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (-sum(e), tuple(-v for v in e)))
        pieces = []
        for e in keys:
            c = self.terms[e]
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}")
                for i, k in enumerate(e) if k)
            if not mono:
                body = repr(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                cs = repr(c)
                if not c.is_rational():
                    cs = f"({cs})"
                body = f"{cs}*{mono}"
            pieces.append(body)
        out = " + ".join(pieces)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly({self.to_string()})"

    def as_univariate(self, index: int) -> list[FieldElement]:
        """Ascending coefficient list; error if any other variable occurs."""
        extra = [i for i in self.variables_present() if i != index]
        if extra:
            raise ValueError(f"polynomial involves extra variables {extra}")
        if self.is_zero():
            return []
        out = [self.field.zero()] * (self.degree_in(index) + 1)
        for e, c in self.terms.items():
            out[e[index]] = c
        return out


# -- parsing --------------------------------------------------------------------


def parse_poly(text: str, nvars: int, field: NumberField = QQ,
               names: Sequence[str] | None = None) -> Poly:
    """Parse an expression like "z*y^2 - x^3 + 1/2*x*y" into a Poly.

    Supported: + - * / ^ (or **), parentheses, integer and a/b literals,
    the variable names, and the field generator's name when the field is an
    extension.  Division is restricted to nonzero constant divisors.
    """
    if names is None:
        names = DEFAULT_NAMES.get(nvars, tuple(f"x{i}" for i in range(nvars)))
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        tok = peek()
        pos[0] += 1
        return tok

    def parse_expr() -> Poly:
        node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term() -> Poly:
        node = parse_unary()
        while peek() in ("*", "/"):
            op = take()
            rhs = parse_unary()
            if op == "*":
                node = node * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise InputError("division only by nonzero constants")
                node = node.scale(rhs.constant_value().inverse())
        return node

    def parse_unary() -> Poly:
        if peek() == "-":
            take()
            return -parse_unary()
        if peek() == "+":
            take()
            return parse_unary()
        return parse_power()

    def parse_power() -> Poly:
        base = parse_atom()
        if peek() == "^":
            take()
            exp_tok = take()
            if not (isinstance(exp_tok, str) and exp_tok.isdigit()):
                raise InputError("exponent must be a nonnegative integer")
            return base ** int(exp_tok)
        return base

    def parse_atom() -> Poly:
        tok = take()
        if tok is None:
            raise InputError("unexpected end of expression")
        if tok == "(":
            node = parse_expr()
            if take() != ")":
                raise InputError("missing closing parenthesis")
            return node
        if isinstance(tok, str) and tok.isdigit():
            return Poly.const(int(tok), nvars, field)
        if isinstance(tok, str) and tok.isidentifier():
            if tok in names:
                return Poly.var(names.index(tok), nvars, field)
            if not field.is_rationals and tok == field.name:
                return Poly.const(field.gen(), nvars, field)
            raise InputError(f"unknown symbol '{tok}'")
        raise InputError(f"unexpected token '{tok}'")

    result = parse_expr()
    if pos[0] != len(tokens):
        raise InputError(f"trailing input near token {tokens[pos[0]]!r}")
    return result


def _tokenize(text: str) -> list[str]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(text[i:j])
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(text[i:j])
            i = j
        elif ch == "*":
            if i + 1 < n and text[i + 1] == "*":
                out.append("^")
                i += 2
            else:
                out.append("*")
                i += 1
        elif ch in "+-/^()":
            out.append(ch)
            i += 1
        else:
            raise InputError(f"unexpected character {ch!r} in polynomial")
    return out


# -- determinants and resultants ---------------------------------------------------


def det_bareiss(matrix: list[list[Poly]]) -> Poly:
    """Exact determinant of a square matrix of polynomials (fraction-free)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = matrix[0][0].nvars
    fld = matrix[0][0].field
    for row in matrix:
        for entry in row:
            fld = common_field(fld, entry.field)
    M = [[e.with_field(fld) for e in row] for row in matrix]
    sign = 1
    prev = Poly.const(1, nvars, fld)
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not M[r][k].is_zero()), None)
            if swap is None:
                return Poly.zero(nvars, fld)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]).divexact(prev)
            M[i][k] = Poly.zero(nvars, fld)
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: Poly, g: Poly, var: int) -> Poly:
    """Sylvester resultant with respect to one variable.

    Vanishes identically iff f and g share a factor involving the variable.
    Degenerate degrees follow the standard convention Res(f, c) = c^deg(f).
    """
    if f.is_zero() or g.is_zero():
        raise InputError("resultant of a zero polynomial")
    a, b = f._unify(g)
    A = a.coeffs_in(var)
    B = b.coeffs_in(var)
    m, n = len(A) - 1, len(B) - 1
    if m == 0 and n == 0:
        return Poly.const(1, a.nvars, a.field)
    if m == 0:
        return A[0] ** n
    if n == 0:
        return B[0] ** m
    size = m + n
    zero = Poly.zero(a.nvars, a.field)
    rows = []
    for shift in range(n):
        row = [zero] * size
        for idx, coefficient in enumerate(reversed(A)):
            row[shift + idx] = coefficient
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for idx, coefficient in enumerate(reversed(B)):
            row[shift + idx] = coefficient
        rows.append(row)
    return det_bareiss(rows)


# -- gcd and squarefree parts ---------------------------------------------------------


def _pseudo_reduce(A: list[Poly], B: list[Poly]) -> list[Poly]:
    """Reduce A by B in the main-variable coefficient representation.

    Returns a list representing a polynomial of main-variable degree below
    deg(B) equal to lc(B)^k * rem(A, B) for some k >= 0 (exactness is
    irrelevant because callers re-primitivize).
    """
    B = _plist_trim(B)
    lb = B[-1]
    db = len(B) - 1
    A = _plist_trim(list(A))
    while len(A) - 1 >= db and A:
        c = A[-1]
        s = len(A) - 1 - db
        A = [ai * lb for ai in A]
        for i, bi in enumerate(B):
            A[s + i] = A[s + i] - c * bi
        A = _plist_trim(A)
    return A


def _plist_trim(L: list[Poly]) -> list[Poly]:
    while L and L[-1].is_zero():
        L.pop()
    return L


def _content_and_primitive(f: Poly, var: int) -> tuple[Poly, Poly]:
    coeffs = [c for c in f.coeffs_in(var) if not c.is_zero()]
    content = coeffs[0]
    for c in coeffs[1:]:
        if content.is_constant():
            break
        content = poly_gcd(content, c)
    content = content.normalized()
    return content, f.divexact(content)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor, normalized (lex-first coefficient 1)."""
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    a, b = f._unify(g)
    if a.is_constant() or b.is_constant():
        return Poly.const(1, a.nvars, a.field)
    va = set(a.variables_present())
    vb = set(b.variables_present())
    shared = sorted(va & vb)
    if not shared:
        # A divisor only involves its dividend's variables, so with no shared
        # variable the gcd is a constant.
        return Poly.const(1, a.nvars, a.field)
    var = shared[0]
    ca, pa = _content_and_primitive(a, var)
    cb, pb = _content_and_primitive(b, var)
    c = poly_gcd(ca, cb)
    A = pa.coeffs_in(var)
    B = pb.coeffs_in(var)
    if len(A) < len(B):
        A, B = B, A
    while True:
        R = _pseudo_reduce(A, B)
        if not R:
            break
        rp = Poly.from_coeffs_in(R, var)
        _, rp = _content_and_primitive(rp, var)
        A, B = B, rp.coeffs_in(var)
        if len(B) == 1:
            # Degree 0 in the main variable: primitive, so a unit times content 1.
            B = [Poly.const(1, a.nvars, a.field)]
            break
    h = Poly.from_coeffs_in(B, var)
    return (c * h).normalized()


def squarefree_part(f: Poly) -> Poly:
    """f divided by gcd(f, all partial derivatives), normalized."""
    if f.is_zero():
        raise InputError("squarefree part of the zero polynomial")
    g = f
    for i in range(f.nvars):
        d = f.derivative(i)
        if not d.is_zero():
            g = poly_gcd(g, d)
        if g.is_constant():
            return f.normalized()
    if g is f:
        # All derivatives vanished: f is a nonzero constant.
        return Poly.const(1, f.nvars, f.field)
    return f.divexact(g).normalized()


def is_squarefree(f: Poly) -> bool:
    """True iff no irreducible factor repeats (joint gcd with all partials)."""
    if f.is_zero():
        return False
    g = f
    for i in range(f.nvars):
        d = f.derivative(i)
        if not d.is_zero():
            g = poly_gcd(g, d)
            if g.is_constant():
                return True
    return g.is_constant()
