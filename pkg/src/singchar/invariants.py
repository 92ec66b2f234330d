"""Milnor and Tjurina numbers, isolatedness, and determinacy bounds.

The determinacy machinery: if m^(k+2) lies in m^2*j(f) then f is right
(2k - ord(f) + 2)-determined, and if m^(k+2) lies in m*<f> + m^2*j(f) then
f is contact (2k - ord(f) + 2)-determined.  The least such k is read off
the staircase in one shot: k* = min_mpower_contained(std(test ideal)) - 2,
exact because the local ordering is degree-compatible.  The corollary
bounds 2*mu - ord + 2 and 2*tau - ord + 2 are reported alongside, as is the
classical characteristic-zero bound k* + 1 for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import INF, is_finite
from .errors import (
    NotInMaximalIdealError,
    OrderTooSmallError,
    ZeroInputError,
)
from .poly import Poly, jacobian_ideal, tjurina_ideal
from .standard_basis import ideal_product_m, quotient_staircase


def milnor_number(f: Poly):
    """dim_K of the Milnor algebra K[[x]]/j(f); INF when not isolated."""
    if f.is_zero():
        raise ZeroInputError("Milnor number of 0 is undefined")
    gens = [g for g in jacobian_ideal(f) if g]
    if not gens:
        return INF
    basis = quotient_staircase(gens)
    return INF if basis is None else basis.dimension()


def tjurina_number(f: Poly):
    """dim_K of the Tjurina algebra K[[x]]/(f, j(f))."""
    if f.is_zero():
        raise ZeroInputError("Tjurina number of 0 is undefined")
    basis = quotient_staircase(tjurina_ideal(f))
    return INF if basis is None else basis.dimension()


@dataclass
class IsolatednessReport:
    right_isolated: bool
    contact_isolated: bool
    mu: object
    tau: object


def isolatedness(f: Poly) -> IsolatednessReport:
    """Finite mu means isolated for right equivalence, finite tau for contact."""
    if f.is_zero():
        raise ZeroInputError("isolatedness of 0 is undefined")
    if not f.ring.field.is_zero(f.constant_term()):
        raise NotInMaximalIdealError("f must have zero constant term")
    mu = milnor_number(f)
    tau = tjurina_number(f)
    return IsolatednessReport(
        right_isolated=is_finite(mu),
        contact_isolated=is_finite(tau),
        mu=mu,
        tau=tau,
    )


@dataclass
class DeterminacyReport:
    kind: str  # "right" or "contact"
    order: int
    k_star: object  # int or INF
    theorem_bound: object  # 2*k_star - ord + 2
    corollary_bound: object  # 2*mu - ord + 2 resp. 2*tau - ord + 2
    classical_char0_bound: object  # k_star + 1, for comparison only
    best: object  # min of theorem and corollary bounds (an upper bound)
    local_invariant: object  # the mu resp. tau that fed the corollary


def determinacy_bound(f: Poly, kind: str) -> DeterminacyReport:
    """Upper bound for the right/contact determinacy of f in m^2."""
    if kind not in ("right", "contact"):
        raise ValueError("kind must be 'right' or 'contact'")
    if f.is_zero():
        raise ZeroInputError("determinacy of 0 is undefined")
    order = f.order()
    if order <= 1:
        raise OrderTooSmallError(
            "f is a unit or smooth (ord <= 1); determinacy is trivial"
        )

    jac = jacobian_ideal(f)
    if kind == "right":
        test_ideal = ideal_product_m(jac, 2)
        invariant = milnor_number(f)
    else:
        test_ideal = ideal_product_m([f], 1) + ideal_product_m(jac, 2)
        invariant = tjurina_number(f)

    nonzero = [g for g in test_ideal if g]
    if not nonzero:
        containment = INF
    else:
        basis = quotient_staircase(nonzero)
        containment = INF if basis is None else basis.min_mpower_contained()

    if is_finite(containment):
        k_star = max(containment - 2, 0)
        theorem = 2 * k_star - order + 2
        classical = k_star + 1
    else:
        k_star = INF
        theorem = INF
        classical = INF
    corollary = 2 * invariant - order + 2 if is_finite(invariant) else INF
    best = min((theorem, corollary), key=lambda v: (not is_finite(v), v if is_finite(v) else 0))
    return DeterminacyReport(
        kind=kind,
        order=order,
        k_star=k_star,
        theorem_bound=theorem,
        corollary_bound=corollary,
        classical_char0_bound=classical,
        best=best,
        local_invariant=invariant,
    )
