"""Bivariate polynomial gcd via the primitive remainder sequence.

Used to decide whether a local quotient in two variables is finite
dimensional: K[[x,y]]/I has finite length exactly when the gcd of a set of
polynomial generators does not vanish at the origin (a non-unit common
factor is a curve through the origin inside the zero set, and conversely
coprime generators meet in finitely many points).  The gcd is computed by
the primitive PRS over K[x][y], so the decision is exact over Q and F_p
and stable under extension to the algebraic closure.
"""

from __future__ import annotations

from .algebra import (
    CoefficientField,
    univ_divexact,
    univ_mul,
    univ_trim,
    univariate_gcd,
)
from .poly import Poly


def _to_yx(f: Poly) -> list:
    """Dense-in-y representation: index = y-degree, entry = x-coefficient list."""
    field = f.ring.field
    deg_y = max(e[1] for e in f.terms)
    rows = [[] for _ in range(deg_y + 1)]
    for (a, b), c in f.terms.items():
        row = rows[b]
        if len(row) <= a:
            row.extend([field.zero] * (a + 1 - len(row)))
        row[a] = c
    return [univ_trim(row, field) for row in rows]


def _from_yx(rows: list, ring) -> Poly:
    terms = {}
    for b, row in enumerate(rows):
        for a, c in enumerate(row):
            if not ring.field.is_zero(c):
                terms[(a, b)] = c
    return Poly(ring, terms)


def _trim_y(rows: list) -> list:
    end = len(rows)
    while end > 0 and not rows[end - 1]:
        end -= 1
    return rows[:end]


def _content(rows: list, field: CoefficientField) -> list:
    """Monic gcd of the x-coefficients (zero polynomial -> [])."""
    content: list = []
    for row in rows:
        if row:
            content = univariate_gcd(content, row, field) if content else row
            if len(content) == 1:
                break
    if content and len(content) > 0:
        from .algebra import univ_monic

        return univ_monic(content, field)
    return content


def _primitive(rows: list, field: CoefficientField) -> list:
    content = _content(rows, field)
    if not content or len(content) == 1:
        return rows
    return [univ_divexact(row, content, field) if row else [] for row in rows]


def _pseudo_remainder(f: list, g: list, field: CoefficientField) -> list:
    """prem(f, g) with respect to y; g nonzero with deg_y(g) <= deg_y(f)."""
    r = [list(row) for row in f]
    dg = len(g) - 1
    lead_g = g[-1]
    while r and len(r) - 1 >= dg:
        lead_r = r[-1]
        shift = len(r) - 1 - dg
        new_rows = []
        for b in range(max(len(r), dg + shift + 1)):
            left = univ_mul(r[b], lead_g, field) if b < len(r) and r[b] else []
            gi = g[b - shift] if 0 <= b - shift <= dg else []
            right = univ_mul(gi, lead_r, field) if gi else []
            new_rows.append(_univ_sub(left, right, field))
        r = _trim_y(new_rows)
    return r


def _univ_sub(a: list, b: list, field: CoefficientField) -> list:
    out = list(a) + [field.zero] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = field.sub(out[i], c)
    return univ_trim(out, field)


def bivariate_gcd(f: Poly, g: Poly) -> Poly:
    """A gcd of f and g in K[x,y], normalized up to a scalar."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    if f.ring != g.ring or f.ring.nvars != 2:
        raise ValueError("bivariate gcd needs two polynomials in one 2-variable ring")
    ring = f.ring
    field = ring.field
    fr, gr = _to_yx(f), _to_yx(g)
    cf, cg = _content(fr, field), _content(gr, field)
    content_gcd = univariate_gcd(cf, cg, field)
    pf, pg = _primitive(fr, field), _primitive(gr, field)
    if len(pf) < len(pg):
        pf, pg = pg, pf
    while True:
        if len(pg) == 1:
            # primitive and y-free: a unit; only the content survives
            prim = [[field.one]]
            break
        r = _pseudo_remainder(pf, pg, field)
        if not r:
            prim = pg
            break
        pf, pg = pg, _primitive(r, field)
        if len(pf) < len(pg):
            pf, pg = pg, pf
    rows = [univ_mul(row, content_gcd, field) if row else [] for row in prim]
    return _normalize_scalar(_from_yx(rows, ring))


def _normalize_scalar(h: Poly) -> Poly:
    """Scale so the (degree, lex)-first coefficient is one."""
    if h.is_zero():
        return h
    first = min(h.terms, key=lambda e: (sum(e), e))
    return h.scalar_mul(h.ring.field.inv(h.terms[first]))


def _initial_form_coprime(gens: list) -> bool:
    """True when the lowest-degree forms of the generators are coprime.

    A common factor through the origin would force its own initial form
    to divide every generator's initial form, so coprime initial forms
    certify that no such factor exists.  Binary forms reduce to univariate
    data: the x-divisibility plus the dehomogenization at x = 1.
    """
    field = gens[0].ring.field
    common_x = None
    common_y = None
    stripped_gcd = None
    for g in gens:
        form = g.initial_part((1, 1))
        x_div = min(e[0] for e in form.terms)
        y_div = min(e[1] for e in form.terms)
        common_x = x_div if common_x is None else min(common_x, x_div)
        common_y = y_div if common_y is None else min(common_y, y_div)
        dehom = [field.zero] * (max(e[1] for e in form.terms) + 1)
        for e, c in form.terms.items():
            dehom[e[1]] = c
        dehom = univ_trim(dehom, field)
        stripped = dehom[next(i for i, c in enumerate(dehom) if not field.is_zero(c)):]
        if stripped_gcd is None:
            stripped_gcd = stripped
        else:
            stripped_gcd = univariate_gcd(stripped_gcd, stripped, field)
        if common_x == 0 and common_y == 0 and len(stripped_gcd) == 1:
            return True
    return False


def common_factor_vanishes_at_origin(gens: list) -> bool:
    """Does some common factor of the generators pass through the origin?

    Equivalent to the quotient by the generated ideal being infinite
    dimensional over K[[x,y]] (zero generators are ignored; at least one
    generator must be nonzero).
    """
    nonzero = [g for g in gens if g]
    if any(not g.ring.field.is_zero(g.constant_term()) for g in nonzero):
        return False
    if len(nonzero) > 1 and _initial_form_coprime(nonzero):
        return False
    nonzero = sorted(nonzero, key=lambda g: len(g.terms))
    current = nonzero[0]
    for g in nonzero[1:]:
        current = bivariate_gcd(current, g)
        if not current.ring.field.is_zero(current.constant_term()):
            return False
    return current.ring.field.is_zero(current.constant_term())
