"""Factorization over the rationals and simple extensions, with degree budgets.

The heavy lifting (univariate and multivariate factorization over Q and over
Q(alpha)) is delegated to sympy through an exact conversion layer; everything
entering or leaving this module is expressed in this package's own Poly /
FieldElement types, and the conversion is loss-free in both directions.

Budgets: factorization is gated on the degree of the squarefree part of the
input (repeated factors are free; they are recovered exactly), and the
absolute degree of any constructed number field is gated separately.  When a
budget is exceeded the operation raises BudgetExceededError rather than ever
returning a partial or approximate answer.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import sympy
from sympy.polys.domains import QQ as SQQ
from sympy.polys.polyclasses import ANP

from .errors import BudgetExceededError, InputError, InternalInvariantError
from .fields import QQ, FieldElement, NumberField, embed
from .poly import Poly, poly_gcd, resultant, squarefree_part


@dataclass(frozen=True)
class Budget:
    """Degree limits for factorization and field construction."""
    max_factor_degree: int = 12
    max_field_degree: int = 8


_BUDGET = Budget()


def get_budget() -> Budget:
    return _BUDGET


def set_budget(max_factor_degree: int | None = None,
               max_field_degree: int | None = None) -> Budget:
    global _BUDGET
    kwargs = {}
    if max_factor_degree is not None:
        kwargs["max_factor_degree"] = max_factor_degree
    if max_field_degree is not None:
        kwargs["max_field_degree"] = max_field_degree
    _BUDGET = replace(_BUDGET, **kwargs)
    return _BUDGET


# -- sympy conversion layer ---------------------------------------------------

_SYMS = sympy.symbols("v0 v1 v2")
_domain_cache: dict[tuple, tuple] = {}


def _sympy_domain(field: NumberField):
    """Return (sympy domain, descending mod list or None) for a field."""
    key = field.minpoly
    hit = _domain_cache.get(key)
    if hit is not None:
        return hit
    if field.is_rationals:
        out = (SQQ, None)
    else:
        t = sympy.Symbol("t")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i
                   for i, c in enumerate(field.minpoly))
        theta = sympy.AlgebraicNumber(sympy.CRootOf(expr, 0))
        dom = SQQ.algebraic_field(theta)
        # The domain normalizes its modulus (integer-primitive rather than
        # monic); manual ANP coefficients must carry the identical list or
        # sympy refuses to unify them with domain-built elements.
        mod = dom.mod.to_list()
        out = (dom, mod)
    _domain_cache[key] = out
    return out


def _to_sympy(f: Poly):
    dom, mod = _sympy_domain(f.field)
    syms = _SYMS[: f.nvars]
    if mod is None:
        data = {e: SQQ(c.coords[0].numerator, c.coords[0].denominator)
                for e, c in f.terms.items()}
    else:
        data = {}
        for e, c in f.terms.items():
            desc = [SQQ(q.numerator, q.denominator) for q in reversed(c.coords)]
            data[e] = ANP(desc, mod, SQQ)
    return sympy.Poly.from_dict(data, *syms, domain=dom)


def _coeff_from_sympy(value, field: NumberField) -> FieldElement:
    if field.is_rationals:
        return field.from_rational(Fraction(int(value.numerator), int(value.denominator)))
    lst = value.to_list()  # descending coordinates in the generator
    coords = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(lst)]
    return field.element(coords)


def _from_sympy(sp, nvars: int, field: NumberField) -> Poly:
    data = sp.rep.to_dict()
    terms = {}
    for e, v in data.items():
        c = _coeff_from_sympy(v, field)
        if not c.is_zero():
            terms[tuple(e)] = c
    return Poly(nvars, field, terms)


# -- factorization ---------------------------------------------------------------


def factor(f: Poly, budget: Budget | None = None) -> tuple[FieldElement, list[tuple[Poly, int]]]:
    """Complete factorization over the coefficient field.

    Returns (unit, [(irreducible factor, exponent), ...]) with every factor
    normalized (lexicographically first coefficient 1) and the list sorted
    canonically; unit * product(factor^exp) equals the input exactly.
    """
    if f.is_zero():
        raise InputError("cannot factor the zero polynomial")
    budget = budget or _BUDGET
    if f.is_constant():
        return f.constant_value(), []
    sf = squarefree_part(f)
    if sf.degree() > budget.max_factor_degree:
        raise BudgetExceededError(
            f"squarefree part has degree {sf.degree()}, budget {budget.max_factor_degree}")
    _, raw = _to_sympy(f).factor_list()
    factors = []
    for sp, exp in raw:
        g = _from_sympy(sp, f.nvars, f.field).normalized()
        if g.is_constant():
            continue
        factors.append((g, int(exp)))
    factors.sort(key=lambda pair: (pair[0].degree(), pair[0].canonical_key(), pair[1]))
    prod = Poly.const(1, f.nvars, f.field)
    for g, exp in factors:
        prod = prod * g ** exp
    unit_poly = f.divexact(prod)
    if not unit_poly.is_constant():
        raise InternalInvariantError("factorization product mismatch")
    return unit_poly.constant_value(), factors


def is_irreducible(f: Poly, budget: Budget | None = None) -> bool:
    if f.is_zero() or f.is_constant():
        return False
    if f.degree() == 1:
        return True
    _, factors = factor(f, budget)
    return len(factors) == 1 and factors[0][1] == 1


def roots_in_field(f: Poly, budget: Budget | None = None) -> list[tuple[FieldElement, int]]:
    """Roots of a univariate polynomial lying in its own coefficient field."""
    if f.nvars != 1:
        raise InputError("roots_in_field expects a univariate polynomial")
    var = 0
    _, factors = factor(f, budget)
    out = []
    for g, exp in factors:
        if g.degree_in(var) == 1:
            c1 = g.coeff((1,))
            c0 = g.coeff((0,))
            out.append((-(c0 / c1), exp))
    return out


def irreducible_factors_of_univariate(f: Poly, budget: Budget | None = None) -> list[tuple[Poly, int]]:
    """Monic irreducible factors of a univariate polynomial, with exponents."""
    if f.nvars != 1:
        raise InputError("expected a univariate polynomial")
    _, factors = factor(f, budget)
    out = []
    for g, exp in factors:
        lead = g.coeff((g.degree_in(0),))
        out.append((g.scale(lead.inverse()), exp))
    return out


# -- field construction -----------------------------------------------------------


def _degree_name(degree: int) -> str:
    """Deterministic display name for an adjoined generator.

    The name depends only on the extension degree, never on how many
    adjunctions happened before in the process, so serialized output is
    reproducible.  Fields compare by minimal polynomial, so a shared name
    between two different extensions is harmless.
    """
    return f"a{degree}"


def adjoin_root(base: NumberField, p: Poly, name: str | None = None,
                budget: Budget | None = None):
    """Extend a field by a root of an irreducible univariate polynomial.

    Returns (field, embed_old, root): `field` contains a root `root` of p, and
    `embed_old` maps elements of `base` into `field`.  Degree-1 input collapses
    to the base field; towers are rewritten as a single extension of Q via a
    primitive element, so `field.degree` is always the absolute degree.
    """
    budget = budget or _BUDGET
    if p.nvars != 1 or p.is_zero() or p.degree() < 1:
        raise InputError("adjoin_root expects a nonconstant univariate polynomial")
    p = p.with_field(base)
    deg = p.degree_in(0)
    coeffs = [p.coeff((k,)) for k in range(deg + 1)]
    lead = coeffs[-1]
    coeffs = [c / lead for c in coeffs]  # monic
    if deg == 1:
        root = -coeffs[0]
        return base, (lambda el: el), root

    absolute = base.degree * deg
    if absolute > budget.max_field_degree:
        raise BudgetExceededError(
            f"extension would have absolute degree {absolute}, budget {budget.max_field_degree}")
    if not is_irreducible(p, budget):
        raise InputError("polynomial is reducible over the base field")

    if base.is_rationals:
        mp = tuple(c.as_rational() for c in coeffs)
        field = NumberField(mp, name or _fresh_name())
        return field, (lambda el, f=field: f.coerce(el)), field.gen()

    return _adjoin_over_extension(base, coeffs, name or _fresh_name(), budget)


def _adjoin_over_extension(base: NumberField, coeffs: list[FieldElement],
                           name: str, budget: Budget):
    """Tower collapse via a primitive element gamma = beta + c*alpha."""
    a = base.degree
    b = len(coeffs) - 1
    # m(t): the base minimal polynomial as a bivariate (z, t) polynomial.
    m_bivar = Poly.from_terms({(0, k): c for k, c in enumerate(base.minpoly)}, 2, QQ)

    for attempt in range(50):
        c = _shift_sequence(attempt)
        # p_hat(z, t) = p with x -> z - c*t and generator alpha -> t.
        z = Poly.var(0, 2)
        t = Poly.var(1, 2)
        x_image = z - t.scale(Fraction(c))
        p_hat = Poly.zero(2, QQ)
        for i, ci in enumerate(coeffs):
            coeff_poly = Poly.from_terms({(0, j): q for j, q in enumerate(ci.coords)}, 2, QQ)
            p_hat = p_hat + coeff_poly * x_image ** i
        n_poly = resultant(m_bivar, p_hat, 1)  # eliminate t
        n_coeffs = n_poly.as_univariate(0)
        n_uni = Poly.from_univariate(n_coeffs, 0, 1, QQ)
        if n_uni.degree_in(0) != a * b:
            continue
        if not poly_gcd(n_uni, n_uni.derivative(0)).is_constant():
            continue
        if not is_irreducible(n_uni, budget):
            continue
        # Normalize monic (it already is, for monic inputs) and build the field.
        lead = n_uni.coeff((a * b,))
        mp = tuple((n_uni.coeff((k,)) / lead).as_rational() for k in range(a * b + 1))
        field = NumberField(mp, name)
        gamma = field.gen()
        # alpha's image: the unique common root in `field` of m(t) and
        # p_hat(gamma - c*t, t), read off a linear gcd.
        m_over = Poly.from_univariate(
            [field.from_rational(q) for q in base.minpoly], 0, 1, field)
        t1 = Poly.var(0, 1, field)
        x_img = Poly.const(gamma, 1, field) - t1.scale(field.from_rational(Fraction(c)))
        h = Poly.zero(1, field)
        for i, ci in enumerate(coeffs):
            cp = Poly.from_univariate([field.from_rational(q) for q in ci.coords], 0, 1, field)
            h = h + cp * x_img ** i
        g = poly_gcd(m_over, h)
        if g.degree_in(0) != 1:
            raise InternalInvariantError("primitive-element gcd is not linear")
        alpha_image = -(g.coeff((0,)) / g.coeff((1,)))
        beta = gamma - alpha_image * c
        # Sanity: beta must be a root of p with embedded coefficients.
        acc = field.zero()
        for ci in reversed(coeffs):
            acc = acc * beta + embed(ci, field, alpha_image)
        if not acc.is_zero():
            raise InternalInvariantError("adjoined root fails its defining equation")
        return field, (lambda el, f=field, im=alpha_image: embed(el, f, im)), beta
    raise InternalInvariantError("no primitive element found in 50 attempts")


def _shift_sequence(k: int) -> int:
    """0, 1, -1, 2, -2, ..."""
    if k == 0:
        return 0
    half = (k + 1) // 2
    return half if k % 2 == 1 else -half
