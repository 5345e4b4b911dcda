"""Independent cross-checks used by several test modules.

Both helpers deliberately avoid the blow-up machinery under test: germs are
manufactured by eliminating a parameter with resultants, and intersection
multiplicities are recomputed as valuations of a sheared resultant.
"""
from fractions import Fraction

from hypertangency.errors import InternalInvariantError
from hypertangency.fields import QQ, common_field
from hypertangency.poly import Poly, poly_gcd, resultant
from hypertangency.projplane import PlaneCurve, Projectivity, ProjectivePoint


def parameterized_germ(m: int, n: int, c1=1, c2=1, field=QQ) -> Poly:
    """Implicit equation of the germ x = t^m, y = c1*t^n + c2*t^(n+1).

    For m < n and c1 != 0 this is a unibranched germ of type (m, n) at the
    origin (with c2 != 0 the parameterization is always primitive; with
    c2 == 0 the caller must ensure gcd(m, n) == 1).
    """
    if not (0 < m < n):
        raise ValueError("need 0 < m < n")
    c1 = field.coerce(c1)
    c2 = field.coerce(c2)
    if c1.is_zero():
        raise ValueError("c1 must be nonzero")
    if c2.is_zero():
        from math import gcd
        if gcd(m, n) != 1:
            raise ValueError("with c2 == 0 the exponents must be coprime")
    # Variables: 0 = x, 1 = y, 2 = t.
    x = Poly.var(0, 3, field)
    y = Poly.var(1, 3, field)
    t = Poly.var(2, 3, field)
    a = x - t ** m
    b = y - (t ** n).scale(c1) - (t ** (n + 1)).scale(c2)
    r = resultant(a, b, 2)
    return r.dehomogenize(2)


def sheared_resultant_multiplicity(C: PlaneCurve, B: PlaneCurve,
                                   p: ProjectivePoint) -> int:
    """Intersection multiplicity at p as a valuation of a sheared resultant.

    The point is moved to (0:0:1); shears fixing it are swept until the
    projection center (0:1:0) avoids both curves and the line x = 0 contains
    no other common point.  The multiplicity is then the x-valuation of the
    resultant eliminating y.
    """
    fld = common_field(common_field(C.field, B.field), p.field)
    # A projectivity sending (0:0:1) to p: third column is p, the other two
    # are standard basis vectors chosen to keep the matrix invertible.
    pv = [fld.coerce(c) for c in p.coords]
    basis = []
    for i in range(3):
        e = [fld.zero(), fld.zero(), fld.zero()]
        e[i] = fld.one()
        basis.append(e)
    for i in range(3):
        for j in range(i + 1, 3):
            rows = [[basis[i][k], basis[j][k], pv[k]] for k in range(3)]
            try:
                T = Projectivity(rows)
                break
            except Exception:
                continue
        else:
            continue
        break
    C2 = T.inverse().apply_curve(C)
    B2 = T.inverse().apply_curve(B)
    origin = ProjectivePoint(fld.zero(), fld.zero(), fld.one())
    assert C2.contains(origin) and B2.contains(origin)

    shift = 0
    for k in range(100):
        s = Fraction(shift)
        shift = -shift + 1 if shift <= 0 else -shift
        x = Poly.var(0, 3, fld)
        yv = Poly.var(1, 3, fld)
        F = C2.form.substitute(0, x + yv.scale(s))
        G = B2.form.substitute(0, x + yv.scale(s))
        if F.eval_all([0, 1, 0]).is_zero() or G.eval_all([0, 1, 0]).is_zero():
            continue
        fiber = poly_gcd(F.substitute(0, Poly.zero(3, fld)),
                         G.substitute(0, Poly.zero(3, fld)))
        # The fiber gcd must vanish only at (0:0:1), i.e. be a power of y.
        if fiber.is_constant():
            continue
        terms = list(fiber.terms)
        if len(terms) != 1 or terms[0][2] != 0:
            continue
        R = resultant(F, G, 1)
        if R.is_zero():
            raise InternalInvariantError("resultant vanished in the oracle")
        return min(e[0] for e in R.terms)
    raise InternalInvariantError("oracle found no valid shear")
