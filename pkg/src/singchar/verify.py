"""Seeded randomized property suites behind ``singchar verify``.

Each suite draws reproducible samples from the samplers below and checks
one theorem-shaped property; a failure carries a printable counterexample.
The test suite drives the same functions, so the CLI and pytest exercise
identical code paths.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from math import gcd

from .algebra import INF, CoefficientField, is_finite
from .curves import blowup_nu
from .errors import InternalInconsistencyError
from .gcd2 import bivariate_gcd
from .invariants import determinacy_bound, milnor_number, tjurina_number
from .newton import delta_N, newton_diagram, newton_number, r_N, stabilization_exponent
from .newton import _augmented_diagram, _delta_from, _mu_from_volumes, volumes
from .nondeg import is_ND_along, is_WND_along, is_IND_along, nondegeneracy_report
from .oracle import quotient_dim_adaptive
from .poly import Poly, Ring
from .standard_basis import quotient_staircase, std_basis, try_certified_staircase

DEFAULT_CHARS = (0, 2, 3, 5, 7)


# ---------------------------------------------------------------------------
# Samplers
# ---------------------------------------------------------------------------


def ring_for(characteristic: int, nvars: int = 2) -> Ring:
    names = ("x", "y", "z", "w")[:nvars]
    return Ring(names, CoefficientField(characteristic))


def random_coefficient(rng: random.Random, field: CoefficientField):
    if field.characteristic == 0:
        return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
    return rng.randint(1, field.characteristic - 1)


def random_poly(
    rng: random.Random,
    ring: Ring,
    max_degree: int = 8,
    min_order: int = 1,
    max_terms: int = 6,
) -> Poly:
    """A nonzero polynomial with support degrees in [min_order, max_degree]."""
    field = ring.field
    while True:
        terms = {}
        for _ in range(rng.randint(2, max_terms)):
            degree = rng.randint(min_order, max_degree)
            cuts = sorted(rng.randint(0, degree) for _ in range(ring.nvars - 1))
            exponent = tuple(
                b - a for a, b in zip([0] + cuts, cuts + [degree])
            )
            terms[exponent] = random_coefficient(rng, field)
        terms = {e: c for e, c in terms.items() if not field.is_zero(c)}
        if terms:
            return Poly(ring, terms)


def random_unit(rng: random.Random, ring: Ring, max_degree: int = 2) -> Poly:
    """Constant term one plus a short random tail."""
    u = ring.one()
    for _ in range(rng.randint(1, 3)):
        exponent = [0] * ring.nvars
        exponent[rng.randrange(ring.nvars)] = rng.randint(1, max_degree)
        u = u + ring.monomial(tuple(exponent), random_coefficient(rng, ring.field))
    return u


def random_automorphism(rng: random.Random, ring: Ring) -> list:
    """Images x_i -> linear part + quadratic tail with invertible linear part."""
    n = ring.nvars
    field = ring.field
    while True:
        matrix = [
            [field.coerce(rng.randint(0, 4)) for _ in range(n)] for _ in range(n)
        ]
        images = []
        for i in range(n):
            g = ring.zero()
            for j in range(n):
                if not field.is_zero(matrix[i][j]):
                    exponent = [0] * n
                    exponent[j] = 1
                    g = g + ring.monomial(tuple(exponent), matrix[i][j])
            if rng.random() < 0.7:
                exponent = [0] * n
                exponent[rng.randrange(n)] = 2
                g = g + ring.monomial(tuple(exponent), random_coefficient(rng, field))
            images.append(g)
        try:
            ring.variable(0).substitute(images)
        except Exception:
            continue
        return images


def random_quasihomogeneous(rng: random.Random, ring: Ring):
    """A convenient quasihomogeneous f with integral d/w_i, plus its data.

    The characteristic is kept away from dividing d/w_1 and d/w_2 so that
    finite principal Milnor numbers occur with decent probability.
    """
    p = ring.field.characteristic
    while True:
        w1, w2 = rng.choice([(1, 1), (1, 2), (2, 3), (1, 3), (3, 4), (2, 5)])
        k = rng.randint(1, 3)
        d = k * w1 * w2
        if p and ((d // w1) % p == 0 or (d // w2) % p == 0):
            continue
        terms = {}
        terms[(d // w1, 0)] = random_coefficient(rng, ring.field)
        terms[(0, d // w2)] = random_coefficient(rng, ring.field)
        for a in range(1, d // w1):
            rest = d - w1 * a
            if rest % w2 == 0 and rng.random() < 0.5:
                c = rng.randint(0, 2)
                if c:
                    terms[(a, rest // w2)] = ring.field.coerce(c)
        return Poly(ring, terms), (w1, w2), d


def random_zero_dimensional_gens(rng: random.Random, ring: Ring, max_degree: int):
    """Generators with a finite-dimensional local quotient (certified)."""
    while True:
        gens = [
            random_poly(rng, ring, max_degree=max_degree, min_order=1, max_terms=4)
            for _ in range(2 if ring.nvars > 2 else rng.randint(2, 3))
        ]
        if ring.nvars > 2:
            # keep three-variable instances zero-dimensional by design
            for index in range(ring.nvars):
                exponent = [0] * ring.nvars
                exponent[index] = rng.randint(2, 3)
                gens.append(ring.monomial(tuple(exponent)))
        elif rng.random() < 0.5:
            exponent = [0] * ring.nvars
            exponent[rng.randrange(ring.nvars)] = rng.randint(2, max_degree)
            gens.append(ring.monomial(tuple(exponent)))
        basis = try_certified_staircase(gens)
        if basis is not None and basis.dimension() > 0:
            return gens, basis


# ---------------------------------------------------------------------------
# Suite plumbing
# ---------------------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list = dataclass_field(default_factory=list)
    info: dict = dataclass_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def _chars_cycle(chars, samples):
    return [chars[i % len(chars)] for i in range(samples)]


def _fail(result: SuiteResult, message: str):
    if len(result.failures) < 10:
        result.failures.append(message)
    else:
        result.failures.append("... additional failures suppressed")
        raise StopIteration


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def suite_kouchnirenko(rng, samples, chars) -> SuiteResult:
    """mu_N <= mu always; equality for convenient NND f."""
    result = SuiteResult("kouchnirenko", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        mu = milnor_number(f)
        mu_n = newton_number(f)
        result.checked += 1
        if not (mu_n <= mu):
            result.failures.append(f"mu_N > mu for {f} over char {characteristic}")
            continue
        report = nondegeneracy_report(f)
        if report.nnd and newton_diagram(f).convenient and mu != mu_n:
            result.failures.append(
                f"NND convenient but mu={mu} != mu_N={mu_n}: {f} char {characteristic}"
            )
    return result


def suite_planar_nnd(rng, samples, chars) -> SuiteResult:
    """NND (convenient or not) forces mu = mu_N."""
    result = SuiteResult("planar-nnd", 0)
    hits = 0
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        result.checked += 1
        if not nondegeneracy_report(f).nnd:
            continue
        hits += 1
        mu, mu_n = milnor_number(f), newton_number(f)
        if mu != mu_n:
            result.failures.append(
                f"NND but mu={mu} != mu_N={mu_n}: {f} char {characteristic}"
            )
    result.info["nnd_instances"] = hits
    return result


def suite_nnd_implies_innd(rng, samples, chars) -> SuiteResult:
    """NND implies INND for curves not divisible by x^2 or y^2.

    The divisibility guard is the theorem's true scope: a curve with a
    squared coordinate factor can be ND along every diagram face while
    having infinite Milnor number, and no C-polytope certificate exists
    for those (INND forces a finite Milnor number).
    """
    result = SuiteResult("nnd-implies-innd", 0)
    hits = 0
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        diagram = newton_diagram(f)
        if diagram.x_div >= 2 or diagram.y_div >= 2:
            continue
        report = nondegeneracy_report(f)
        result.checked += 1
        if report.nnd:
            hits += 1
            if not report.innd:
                result.failures.append(f"NND but not INND: {f} char {characteristic}")
    result.info["nnd_instances"] = hits
    return result


def suite_nd_implies_wnd(rng, samples, chars) -> SuiteResult:
    """Facet-wise: ND implies WND; over char 0 they are equivalent."""
    result = SuiteResult("nd-implies-wnd", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        for facet in newton_diagram(f).facets:
            nd = is_ND_along(f, facet)
            wnd = is_WND_along(f, facet)
            result.checked += 1
            if nd and not wnd:
                result.failures.append(
                    f"ND without WND on {facet.start}-{facet.end}: {f} "
                    f"char {characteristic}"
                )
            if characteristic == 0 and nd != wnd:
                result.failures.append(
                    f"char-0 facet ND/WND disagree on {facet.start}-{facet.end}: {f}"
                )
    return result


def suite_ind_nd_off_axis(rng, samples, chars) -> SuiteResult:
    """On diagram faces meeting no axis, IND and ND agree."""
    result = SuiteResult("ind-nd-off-axis", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        diagram = newton_diagram(f)
        for facet in diagram.facets:
            if facet.meets_x_axis() or facet.meets_y_axis():
                continue
            result.checked += 1
            if is_ND_along(f, facet) != is_IND_along(f, facet, diagram):
                result.failures.append(
                    f"off-axis IND/ND disagree on {facet.start}-{facet.end}: {f} "
                    f"char {characteristic}"
                )
    return result


def suite_muN_identity(rng, samples, chars) -> SuiteResult:
    """mu_N = 2*delta_N - r_N + 1 with consistent infinity propagation."""
    result = SuiteResult("muN-identity", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        mu_n = newton_number(f)
        d_n = delta_N(f)
        result.checked += 1
        if is_finite(mu_n) != is_finite(d_n):
            result.failures.append(f"mu_N/delta_N finiteness mismatch: {f}")
            continue
        if is_finite(mu_n) and mu_n != 2 * d_n - r_N(f) + 1:
            result.failures.append(
                f"mu_N={mu_n} != 2*{d_n}-{r_N(f)}+1: {f} char {characteristic}"
            )
    return result


def suite_stabilization(rng, samples, chars) -> SuiteResult:
    """Augmented-diagram values agree at m*, m*+1 and m*+7."""
    result = SuiteResult("stabilization", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        diagram = newton_diagram(f)
        if diagram.convenient or diagram.x_div >= 2 or diagram.y_div >= 2:
            continue
        m = stabilization_exponent(f)
        values = []
        for offset in (0, 1, 7):
            augmented = _augmented_diagram(f, m + offset)
            vols = volumes(augmented)
            values.append((_mu_from_volumes(vols), _delta_from(augmented, vols)))
        result.checked += 1
        if len(set(values)) != 1:
            result.failures.append(f"stabilization drift {values}: {f}")
    return result


def suite_nu_deltaN(rng, samples, chars) -> SuiteResult:
    """Blowup nu equals the combinatorial delta whenever finite."""
    result = SuiteResult("nu-deltaN", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        d_n = delta_N(f)
        if not is_finite(d_n):
            continue
        result.checked += 1
        nu = blowup_nu(f)
        if nu != d_n:
            result.failures.append(
                f"nu={nu} != delta_N={d_n}: {f} char {characteristic}"
            )
    return result


def suite_milnor_formula(rng, samples, chars) -> SuiteResult:
    """NND curves satisfy mu = 2*delta_N - r_N + 1."""
    result = SuiteResult("milnor-formula", 0)
    hits = 0
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        result.checked += 1
        if not nondegeneracy_report(f).nnd:
            continue
        hits += 1
        mu = milnor_number(f)
        rhs = (
            2 * delta_N(f) - r_N(f) + 1 if is_finite(delta_N(f)) else INF
        )
        if mu != rhs:
            result.failures.append(
                f"NND but mu={mu} != 2*delta_N-r_N+1={rhs}: {f} char {characteristic}"
            )
    result.info["nnd_instances"] = hits
    return result


def suite_mu_gap(rng, samples, chars) -> SuiteResult:
    """mu >= mu_N, with an exact-branch-count strengthening under WNND."""
    result = SuiteResult("mu-gap", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        mu = milnor_number(f)
        if not is_finite(mu):
            continue
        result.checked += 1
        mu_n = newton_number(f)
        if not (mu >= mu_n):
            result.failures.append(f"mu={mu} < mu_N={mu_n}: {f} char {characteristic}")
    return result


def suite_lefschetz(rng, samples, chars) -> SuiteResult:
    """Characteristic zero: mu finite iff tau finite."""
    result = SuiteResult("lefschetz", 0)
    for _ in range(samples):
        ring = ring_for(0)
        f = random_poly(rng, ring, max_degree=6)
        mu = milnor_number(f)
        tau = tjurina_number(f)
        result.checked += 1
        if is_finite(mu) != is_finite(tau):
            result.failures.append(f"mu={mu} tau={tau} finiteness differs: {f}")
    return result


def suite_milnor_orlik(rng, samples, chars) -> SuiteResult:
    """Quasihomogeneous with finite mu: mu = prod(d/w_i - 1)."""
    result = SuiteResult("milnor-orlik", 0)
    attempts = 0
    while result.checked < samples and attempts < 60 * samples:
        attempts += 1
        characteristic = chars[attempts % len(chars)]
        ring = ring_for(characteristic)
        f, (w1, w2), d = random_quasihomogeneous(rng, ring)
        mu = milnor_number(f)
        if not is_finite(mu):
            continue
        result.checked += 1
        expected = (d // w1 - 1) * (d // w2 - 1)
        if mu != expected:
            result.failures.append(
                f"mu={mu} != ({d}/{w1}-1)({d}/{w2}-1)={expected}: {f} "
                f"char {characteristic}"
            )
    if result.checked < samples:
        result.failures.append(
            f"only {result.checked}/{samples} finite-mu instances found"
        )
    return result


def suite_oracle(rng, samples, chars) -> SuiteResult:
    """Certified oracle dimensions match staircase dimensions."""
    result = SuiteResult("oracle", 0)
    n3_share = max(1, samples * 3 // 13)  # mirrors the 100 + 30 split
    for index in range(samples):
        characteristic = chars[index % len(chars)]
        nvars = 3 if index < n3_share else 2
        ring = ring_for(characteristic, nvars)
        max_degree = 4 if nvars == 3 else 6
        gens, basis = random_zero_dimensional_gens(rng, ring, max_degree)
        oracle = quotient_dim_adaptive(gens, ceiling=64)
        result.checked += 1
        if not oracle.certified:
            result.failures.append(f"oracle failed to certify: {gens}")
            continue
        if oracle.dim != basis.dimension():
            result.failures.append(
                f"oracle dim {oracle.dim} != staircase dim {basis.dimension()}: "
                f"{[str(g) for g in gens]} char {characteristic}"
            )
    return result


def suite_bound_ordering(rng, samples, chars) -> SuiteResult:
    """theorem_bound <= corollary_bound, and >= k*+1, whenever finite."""
    result = SuiteResult("bound-ordering", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring, min_order=2, max_degree=6)
        for kind in ("right", "contact"):
            report = determinacy_bound(f, kind)
            if not is_finite(report.theorem_bound) or not is_finite(
                report.corollary_bound
            ):
                continue
            result.checked += 1
            if report.theorem_bound > report.corollary_bound:
                result.failures.append(
                    f"{kind} theorem {report.theorem_bound} > corollary "
                    f"{report.corollary_bound}: {f} char {characteristic}"
                )
            if report.theorem_bound < report.k_star + 1:
                result.failures.append(
                    f"{kind} theorem bound below k*+1: {f} char {characteristic}"
                )
    return result


def suite_determinacy_jet(rng, samples, chars) -> SuiteResult:
    """Invariants of the best-bound jet equal the invariants of f."""
    result = SuiteResult("determinacy-jet", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring, min_order=2, max_degree=6)
        contact = determinacy_bound(f, "contact")
        if is_finite(contact.best):
            result.checked += 1
            if tjurina_number(f.jet(contact.best)) != tjurina_number(f):
                result.failures.append(
                    f"tau of jet_{contact.best} differs: {f} char {characteristic}"
                )
        right = determinacy_bound(f, "right")
        if is_finite(right.best):
            result.checked += 1
            if milnor_number(f.jet(right.best)) != milnor_number(f):
                result.failures.append(
                    f"mu of jet_{right.best} differs: {f} char {characteristic}"
                )
    return result


def suite_equivalence_invariance(rng, samples, chars) -> SuiteResult:
    """mu under right equivalence, tau and ord under contact equivalence."""
    result = SuiteResult("equivalence-invariance", 0)
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring, min_order=2, max_degree=4, max_terms=4)
        images = random_automorphism(rng, ring)
        composed = f.substitute(images)
        result.checked += 1
        if milnor_number(composed) != milnor_number(f):
            result.failures.append(
                f"mu changed under substitution: {f} via {[str(g) for g in images]}"
            )
            continue
        unit = random_unit(rng, ring)
        contact = unit * composed
        if tjurina_number(contact) != tjurina_number(f):
            result.failures.append(
                f"tau changed under contact move: {f} char {characteristic}"
            )
        if contact.order() != f.order():
            result.failures.append(f"ord changed under contact move: {f}")
    return result


def suite_nnd_rate(rng, samples, chars) -> SuiteResult:
    """Report-only: empirical NND rates per characteristic."""
    result = SuiteResult("nnd-rate", 0)
    counts = {c: [0, 0] for c in chars}
    for characteristic in _chars_cycle(chars, samples):
        ring = ring_for(characteristic)
        f = random_poly(rng, ring)
        counts[characteristic][1] += 1
        if nondegeneracy_report(f).nnd:
            counts[characteristic][0] += 1
        result.checked += 1
    result.info["rates"] = {
        str(c): f"{hit}/{total}" for c, (hit, total) in counts.items()
    }
    return result


SUITES = {
    "kouchnirenko": suite_kouchnirenko,
    "planar-nnd": suite_planar_nnd,
    "nnd-implies-innd": suite_nnd_implies_innd,
    "nd-implies-wnd": suite_nd_implies_wnd,
    "ind-nd-off-axis": suite_ind_nd_off_axis,
    "muN-identity": suite_muN_identity,
    "stabilization": suite_stabilization,
    "nu-deltaN": suite_nu_deltaN,
    "milnor-formula": suite_milnor_formula,
    "mu-gap": suite_mu_gap,
    "lefschetz": suite_lefschetz,
    "milnor-orlik": suite_milnor_orlik,
    "oracle": suite_oracle,
    "bound-ordering": suite_bound_ordering,
    "determinacy-jet": suite_determinacy_jet,
    "equivalence-invariance": suite_equivalence_invariance,
    "nnd-rate": suite_nnd_rate,
}


def run_suites(names, samples: int, seed: int, chars=DEFAULT_CHARS):
    """Run the named suites (or all) with one derived rng per suite."""
    if names == ["all"] or names == "all":
        names = list(SUITES)
    results = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
        rng = random.Random(f"{seed}:{name}")
        results.append(SUITES[name](rng, samples, tuple(chars)))
    return results
