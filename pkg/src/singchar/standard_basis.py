"""Mora's tangent-cone algorithm for local degree orderings.

The ordering is the negative-degree ordering with a reverse-lexicographic
tie break on the declared variable order (lower total degree means larger;
1 is the largest monomial).  This is the ordering the staircase queries
below rely on: with a degree-compatible local ordering, m^a is contained in
an ideal exactly when every monomial of degree >= a lies in the leading
ideal, which turns containment questions into finite staircase scans.

``mora_normal_form`` computes a weak normal form: there is a unit u with
u*f = sum a_i g_i + r and the leading monomial of r is not divisible by any
leading monomial of G.  Tail monomials of r may stay reducible; insisting on
a fully reduced remainder does not terminate for local orderings (reducing
x by x - x^2 walks through x^2, x^3, ... forever while the true normal form
is 0, which Mora's ecart bookkeeping detects).  Weak normal forms are
exactly what ideal-membership and staircase computations need.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

from .algebra import INF
from .errors import (
    InternalInconsistencyError,
    EmptyComplementError,
    NotZeroDimensionalError,
    ZeroIdealError,
)
from .poly import Poly, Ring


def order_key(exponent):
    """Sort key ascending in the local order: smallest key = largest monomial."""
    return (sum(exponent), tuple(reversed(exponent)))


def leading_exponent(f: Poly):
    """Largest monomial of f in the local order (f nonzero)."""
    return min(f.terms, key=order_key)


def ecart(f: Poly) -> int:
    """Degree spread: total degree minus degree of the leading monomial."""
    degrees = [sum(e) for e in f.terms]
    return max(degrees) - min(degrees)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _normalize(f: Poly) -> Poly:
    """Scale to the monic representative (leading coefficient one).

    Per-coefficient Fraction arithmetic keeps each coefficient
    individually reduced; a common-denominator integer representation can
    be exponentially larger, so monic is the right canonical form in
    characteristic zero as well.
    """
    field = f.ring.field
    c = f.terms[leading_exponent(f)]
    if c == field.one:
        return f
    return f.scalar_mul(field.inv(c))


def _cancel_lead(h: Poly, g: Poly, g_lead) -> Poly:
    """Cancel the leading term of h against the monic reducer g."""
    h_lead = leading_exponent(h)
    shift = tuple(a - b for a, b in zip(h_lead, g_lead))
    return h - g.term_mul(shift, h.terms[h_lead])


def _truncate(f: Poly, bound) -> Poly:
    """Drop the terms of total degree >= bound (no-op when bound is None)."""
    if bound is None or not f:
        return f
    kept = {e: c for e, c in f.terms.items() if sum(e) < bound}
    if len(kept) == len(f.terms):
        return f
    return Poly(f.ring, kept)


def mora_normal_form(f: Poly, basis: list, truncate_at=None) -> Poly:
    """Weak normal form of f with respect to the polynomials in ``basis``.

    Zero generators are ignored.  Returns 0 exactly when f lies in the
    ideal generated by ``basis`` in the local ring, provided ``basis`` is a
    standard basis.  The remainder is only determined up to a nonzero
    scalar, which no caller depends on.  With ``truncate_at`` = D the
    computation happens modulo m^D (sound whenever m^D is known to lie in
    the ideal, or when the caller works with the ideal plus m^D).
    """
    f = _truncate(f, truncate_at)
    reducers = [(_normalize(g), leading_exponent(g), ecart(g)) for g in basis if g]
    if not reducers:
        return f
    h = f
    while h:
        h_lead = leading_exponent(h)
        candidates = [r for r in reducers if _divides(r[1], h_lead)]
        if not candidates:
            return h
        h_ecart = ecart(h)
        best = min(c[2] for c in candidates)
        # minimal ecart; ties broken by the smaller leading monomial
        chosen = max(
            (c for c in candidates if c[2] == best),
            key=lambda c: order_key(c[1]),
        )
        if chosen[2] > h_ecart:
            reducers.append((_normalize(h), h_lead, h_ecart))
        h = _truncate(_cancel_lead(h, chosen[0], chosen[1]), truncate_at)
    return h


def _spoly(f: Poly, f_lead, g: Poly, g_lead) -> Poly:
    """S-polynomial of two monic generators."""
    lcm = tuple(max(a, b) for a, b in zip(f_lead, g_lead))
    shift_f = tuple(l - a for l, a in zip(lcm, f_lead))
    shift_g = tuple(l - b for l, b in zip(lcm, g_lead))
    return f.term_mul(shift_f) - g.term_mul(shift_g)


@dataclass
class StdBasis:
    """A standard basis with its leading-monomial staircase.

    ``truncated_at`` = D marks a basis of the ideal plus m^D: all monomials
    of degree >= D count as leading.  Such a basis describes the original
    ideal exactly below degree D, and exactly everywhere once the staircase
    certifies (min_mpower_contained() < D).
    """

    ring: Ring
    generators: list
    truncated_at: int | None = None
    leading: list = dataclass_field(init=False)

    def __post_init__(self):
        self.leading = [leading_exponent(g) for g in self.generators]

    # -- staircase ---------------------------------------------------------

    def pure_power_bounds(self):
        """For each variable the least pure power in the leading ideal.

        Returns None in a slot when no pure power of that variable leads;
        the staircase complement is finite iff every slot is filled.
        """
        n = self.ring.nvars
        bounds = [self.truncated_at] * n
        for exp in self.leading:
            support = [i for i, e in enumerate(exp) if e > 0]
            if len(support) == 1:
                i = support[0]
                if bounds[i] is None or exp[i] < bounds[i]:
                    bounds[i] = exp[i]
            elif len(support) == 0:
                bounds = [0] * n
                return bounds
        return bounds

    def is_zero_dimensional(self) -> bool:
        return all(b is not None for b in self.pure_power_bounds())

    def staircase_complement(self):
        """Monomials outside the leading ideal, or None if infinite."""
        bounds = self.pure_power_bounds()
        if any(b is None for b in bounds):
            return None
        complement = []
        for exp in itertools.product(*(range(b) for b in bounds)):
            if self.truncated_at is not None and sum(exp) >= self.truncated_at:
                continue
            if not any(_divides(lead, exp) for lead in self.leading):
                complement.append(exp)
        return complement

    def is_certified(self) -> bool:
        """A truncated basis is certified once the staircase sits strictly
        below the truncation degree; an untruncated basis always is."""
        if self.truncated_at is None:
            return True
        power = self.min_mpower_contained()
        return power is not INF and power < self.truncated_at

    def dimension(self):
        """dim_K of the quotient by the ideal; INF when not zero-dimensional."""
        complement = self.staircase_complement()
        if complement is None:
            return INF
        return len(complement)

    def min_mpower_contained(self):
        """Least a with m^a inside the ideal; INF when none exists."""
        complement = self.staircase_complement()
        if complement is None:
            return INF
        if not complement:
            return 0
        return max(sum(e) for e in complement) + 1

    def highcorner(self):
        """The smallest staircase monomial in the local order.

        Equivalently a complement monomial of maximal total degree, ties
        broken by the ordering; its degree plus one is the m-power
        containment bound.
        """
        complement = self.staircase_complement()
        if complement is None:
            raise NotZeroDimensionalError("staircase complement is infinite")
        if not complement:
            raise EmptyComplementError("leading ideal contains 1")
        return max(complement, key=order_key)

    def contains(self, f: Poly) -> bool:
        """Ideal membership in the local ring via the weak normal form."""
        return not mora_normal_form(f, self.generators, self.truncated_at)


def std_basis(gens: list, truncate_at=None) -> StdBasis:
    """Standard basis of the ideal generated by ``gens`` (not all zero).

    Normal selection strategy: the pair whose lcm of leading monomials is
    largest in the local order (lowest degree) is treated first.  Pairs with
    coprime leading monomials are skipped (product criterion).

    With ``truncate_at`` = D the result is a standard basis of the ideal
    plus m^D: pairs against the degree-D monomial generators always reduce
    to zero under truncation, so cutting every intermediate at degree < D
    is an exact computation for that larger ideal.
    """
    work = [_normalize(_truncate(g, truncate_at)) for g in gens if _truncate(g, truncate_at)]
    if not work:
        if truncate_at is not None and any(g for g in gens):
            return StdBasis(gens[0].ring, [], truncated_at=truncate_at)
        raise ZeroIdealError("all generators are zero")
    ring = work[0].ring

    basis = []
    leads = []
    pairs = []

    def add_generator(g: Poly):
        g_lead = leading_exponent(g)
        for i in range(len(basis)):
            lcm = tuple(max(a, b) for a, b in zip(leads[i], g_lead))
            if lcm == tuple(a + b for a, b in zip(leads[i], g_lead)):
                continue  # coprime leading monomials
            pairs.append((order_key(lcm), i, len(basis)))
        basis.append(g)
        leads.append(g_lead)

    for g in work:
        add_generator(g)

    while pairs:
        pairs.sort(key=lambda item: item[0])
        _, i, j = pairs.pop(0)
        s = _truncate(_spoly(basis[i], leads[i], basis[j], leads[j]), truncate_at)
        if not s:
            continue
        remainder = mora_normal_form(s, basis, truncate_at)
        if remainder:
            add_generator(_normalize(remainder))

    # prune generators whose lead is a proper multiple of another lead
    keep = []
    for i, lead in enumerate(leads):
        dominated = any(
            k != i
            and _divides(leads[k], lead)
            and (leads[k] != lead or k < i)
            for k in range(len(leads))
        )
        if not dominated:
            keep.append(basis[i])
    keep.sort(key=lambda g: order_key(leading_exponent(g)))
    return StdBasis(ring, keep, truncated_at=truncate_at)


def try_certified_staircase(gens: list, ceiling: int = 32) -> StdBasis | None:
    """Certified truncated staircase or None; never falls back to the
    unbounded algorithm (useful for filtering random samples)."""
    nonzero = [g for g in gens if g]
    if not nonzero:
        return None
    if any(not g.ring.field.is_zero(g.constant_term()) for g in nonzero):
        return StdBasis(nonzero[0].ring, [nonzero[0].ring.one()])
    bound = 2 + min(g.order() for g in nonzero)
    while bound <= ceiling:
        basis = std_basis(nonzero, truncate_at=bound)
        if basis.is_certified():
            return basis
        bound = bound + 2 + bound // 2
    return None


def quotient_staircase(gens: list) -> StdBasis | None:
    """Staircase data for dim/containment queries; None when the quotient
    is infinite dimensional.

    In two variables infinite dimension is decided exactly up front (the
    gcd of the generators vanishes at the origin iff the quotient is
    infinite), after which a certified truncated basis is guaranteed to
    exist and is found by doubling the truncation degree.  In three or
    more variables certified truncation is tried first and the unbounded
    algorithm is the (exact, possibly slow) fallback.
    """
    nonzero = [g for g in gens if g]
    if not nonzero:
        raise ZeroIdealError("all generators are zero")
    ring = nonzero[0].ring

    # a generator with a unit constant term makes the local quotient trivial
    if any(not ring.field.is_zero(g.constant_term()) for g in nonzero):
        return StdBasis(ring, [ring.one()])

    if ring.nvars == 2:
        from .gcd2 import common_factor_vanishes_at_origin

        if common_factor_vanishes_at_origin(nonzero):
            return None
    # cost grows steeply with the truncation degree, so approach the least
    # certifying degree from below instead of starting from a safe bound
    bound = 2 + min(g.order() for g in nonzero)
    ceiling = 4096 if ring.nvars == 2 else 96
    while bound <= ceiling:
        basis = std_basis(nonzero, truncate_at=bound)
        if basis.is_certified():
            return basis
        bound = bound + 2 + bound // 2
    if ring.nvars == 2:
        raise InternalInconsistencyError(
            "coprime generators but no certified staircase below degree 4096"
        )
    basis = std_basis(nonzero)
    if basis.is_zero_dimensional():
        return basis
    return None


def ideal_product_m(gens: list, power: int) -> list:
    """Generators of m^power times the ideal: all x^beta * g, |beta| = power."""
    if power < 0:
        raise ValueError("power must be >= 0")
    if not gens:
        return []
    ring = gens[0].ring
    if power == 0:
        return list(gens)
    out = []
    for beta in _exponents_of_degree(ring.nvars, power):
        for g in gens:
            out.append(g.term_mul(beta))
    return out


def _exponents_of_degree(nvars: int, degree: int):
    """All exponent tuples of the given total degree, lexicographically."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _exponents_of_degree(nvars - 1, degree - first):
            yield (first,) + rest
