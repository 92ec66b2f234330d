"""Planar Newton-diagram combinatorics (two variables only).

The diagram is the lower-left hull of the support; everything downstream
(Newton number, combinatorial delta invariant, branch-count bound) is exact
lattice geometry over ``Fraction``.

Non-convenient diagrams are handled by adjoining x^m + y^m for a
stabilization exponent m* = 2*(largest support coordinate) + 3 and checking
that the value agrees at m* and m*+1; the paper-level fact that the values
stabilize is thus asserted at runtime rather than trusted.  Diagrams with a
vertex at lattice distance >= 2 from a missing axis diverge: the associated
invariants are infinite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import INF
from .errors import (
    DivergentDiagramError,
    FaceNotOnDiagramError,
    NoFacetError,
    NotConvenientError,
    WrongArityError,
    ZeroInputError,
)
from .poly import Poly


Point = tuple  # lattice or rational point (x, y)


@dataclass(frozen=True)
class Facet:
    """A compact edge with its primitive inner normal and lattice data."""

    start: Point  # smaller x
    end: Point  # larger x
    weight: tuple  # primitive (w1, w2), both positive
    w_degree: int
    lattice_length: int
    extended: bool = False  # True when an endpoint is an axis intercept

    def meets_x_axis(self) -> bool:
        return self.start[1] == 0 or self.end[1] == 0

    def meets_y_axis(self) -> bool:
        return self.start[0] == 0 or self.end[0] == 0

    def contains_exponent(self, exponent) -> bool:
        w1, w2 = self.weight
        if w1 * exponent[0] + w2 * exponent[1] != self.w_degree:
            return False
        return self.start[0] <= exponent[0] <= self.end[0]


@dataclass(frozen=True)
class VertexFace:
    point: Point


@dataclass
class NewtonDiagram:
    """Vertices (increasing x), facets, axis divisibilities, convenience."""

    vertices: list
    facets: list
    x_div: int
    y_div: int
    convenient: bool

    def faces(self):
        return [VertexFace(v) for v in self.vertices] + list(self.facets)


def _pareto_minimal(points):
    """Support points not dominated componentwise by another point."""
    minimal = []
    for p in points:
        if not any(
            q != p and q[0] <= p[0] and q[1] <= p[1] for q in points
        ):
            minimal.append(p)
    return sorted(set(minimal))


def _lower_hull(points):
    """Lower-left convex hull vertices of Pareto-minimal points."""
    hull = []
    for p in points:  # sorted by x ascending, y descending along minimality
        while len(hull) >= 2:
            (ax, ay), (bx, by) = hull[-2], hull[-1]
            # keep a strictly convex chain: drop b when it is on or above
            # the segment from a to p
            if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _facet_between(a: Point, b: Point, extended: bool = False) -> Facet:
    dx = b[0] - a[0]
    dy = a[1] - b[1]
    if isinstance(dx, Fraction) or isinstance(dy, Fraction):
        length = 0  # rational endpoints carry no lattice length of their own
        g = None
        w1 = dy
        w2 = dx
    else:
        g = gcd(dx, dy)
        length = g
        w1 = dy // g
        w2 = dx // g
    degree = w1 * a[0] + w2 * a[1]
    return Facet(
        start=a,
        end=b,
        weight=(w1, w2),
        w_degree=degree,
        lattice_length=length,
        extended=extended,
    )


def newton_diagram(f: Poly) -> NewtonDiagram:
    """Exact lower hull of supp(f); single-point diagrams have no facets."""
    if f.is_zero():
        raise ZeroInputError("the zero polynomial has no Newton diagram")
    if f.ring.nvars != 2:
        raise WrongArityError("Newton diagrams are implemented for n = 2 only")
    return _diagram_from_support(set(f.support()))


def _diagram_from_support(support) -> NewtonDiagram:
    minimal = _pareto_minimal(support)
    vertices = _lower_hull(minimal)
    facets = [
        _facet_between(vertices[i], vertices[i + 1])
        for i in range(len(vertices) - 1)
    ]
    x_div = min(p[0] for p in support)
    y_div = min(p[1] for p in support)
    return NewtonDiagram(
        vertices=vertices,
        facets=facets,
        x_div=x_div,
        y_div=y_div,
        convenient=(x_div == 0 and y_div == 0),
    )


def initial_form(f: Poly, face) -> Poly:
    """Terms of f supported on the face (a VertexFace or Facet)."""
    if isinstance(face, VertexFace):
        if face.point not in f.terms:
            raise FaceNotOnDiagramError(f"vertex {face.point} not in supp(f)")
        return Poly(f.ring, {face.point: f.terms[face.point]})
    w1, w2 = face.weight
    below = min(w1 * e[0] + w2 * e[1] for e in f.terms)
    if below < face.w_degree:
        raise FaceNotOnDiagramError("support points lie below the face")
    terms = {e: c for e, c in f.terms.items() if face.contains_exponent(e)}
    return Poly(f.ring, terms)


# ---------------------------------------------------------------------------
# C-polytope extension
# ---------------------------------------------------------------------------


@dataclass
class CPolytope:
    """The diagram with extreme facets prolonged to rational axis intercepts."""

    facets: list
    inner_vertices: list  # lattice vertices off both axes


def canonical_c_polytope(f: Poly) -> CPolytope:
    """The unique C-polytope containing the diagram with the same edge count.

    Requires at least one facet and extreme vertices at lattice distance at
    most 1 from their missing axes; otherwise no C-polytope with the same
    edges exists (and the Newton number diverges).
    """
    diagram = newton_diagram(f)
    if not diagram.facets:
        raise NoFacetError("single-point diagram has no facets to extend")
    if diagram.x_div >= 2 or diagram.y_div >= 2:
        raise DivergentDiagramError(
            f"extreme vertex at distance {max(diagram.x_div, diagram.y_div)} "
            "from its axis"
        )
    facets = list(diagram.facets)
    first = diagram.vertices[0]
    last = diagram.vertices[-1]
    if first[0] > 0:
        # prolong the first facet to its y-axis intercept
        head = facets[0]
        w1, w2 = head.weight
        intercept = (0, Fraction(head.w_degree, w2))
        facets[0] = Facet(
            start=intercept,
            end=head.end,
            weight=head.weight,
            w_degree=head.w_degree,
            lattice_length=head.lattice_length,
            extended=True,
        )
    if last[1] > 0:
        tail = facets[-1]
        w1, w2 = tail.weight
        intercept = (Fraction(tail.w_degree, w1), 0)
        facets[-1] = Facet(
            start=tail.start,
            end=intercept,
            weight=tail.weight,
            w_degree=tail.w_degree,
            lattice_length=tail.lattice_length,
            extended=True,
        )
    # vertices of P: facet endpoints; extensions absorb old diagram vertices
    p_vertices = [facets[0].start] + [facet.end for facet in facets]
    inner = [v for v in p_vertices if v[0] > 0 and v[1] > 0]
    return CPolytope(facets=facets, inner_vertices=inner)


# ---------------------------------------------------------------------------
# Volumes and the numerical invariants
# ---------------------------------------------------------------------------


@dataclass
class Volumes:
    V2: Fraction
    V1: Fraction
    V0: int = 1


def volumes(diagram: NewtonDiagram) -> Volumes:
    """Exact area of the region under the diagram and its axis lengths."""
    if not diagram.convenient:
        raise NotConvenientError("volumes need a convenient diagram")
    verts = diagram.vertices
    if len(verts) == 1:
        # only possible convenient single vertex: the origin-adjacent corner
        return Volumes(V2=Fraction(0), V1=Fraction(verts[0][0] + verts[0][1]))
    area2 = 0  # twice the area, summed by the shoelace around the origin
    for a, b in zip(verts, verts[1:]):
        area2 += a[0] * b[1] - a[1] * b[0]
    v2 = Fraction(abs(area2), 2)
    v1 = Fraction(verts[0][1] + verts[-1][0])
    return Volumes(V2=v2, V1=v1)


def _mu_from_volumes(v: Volumes):
    return 2 * v.V2 - v.V1 + 1


def _delta_from(diagram: NewtonDiagram, v: Volumes):
    lengths = sum(facet.lattice_length for facet in diagram.facets)
    return v.V2 - Fraction(v.V1, 2) + Fraction(lengths, 2)


def stabilization_exponent(f: Poly) -> int:
    return 2 * max(max(e) for e in f.support()) + 3


def _augmented_diagram(f: Poly, m: int) -> NewtonDiagram:
    """Diagram of f + x^m + y^m, built on supports (no collisions: m is
    larger than every support coordinate)."""
    support = set(f.support()) | {(m, 0), (0, m)}
    return _diagram_from_support(support)


def _stabilized(f: Poly, evaluate):
    """Evaluate a diagram functional at m* and m*+1 and insist they agree."""
    from .errors import InternalInconsistencyError

    m = stabilization_exponent(f)
    first = evaluate(_augmented_diagram(f, m))
    second = evaluate(_augmented_diagram(f, m + 1))
    if first != second:
        raise InternalInconsistencyError(
            f"stabilization failed at m={m}: {first} vs {second}"
        )
    return first


def newton_number(f: Poly):
    """Planar Newton number: 2*V2 - V1 + 1, stabilized when not convenient."""
    diagram = newton_diagram(f)
    if diagram.convenient:
        return _as_int(_mu_from_volumes(volumes(diagram)))
    if diagram.x_div >= 2 or diagram.y_div >= 2:
        return INF
    return _as_int(_stabilized(f, lambda d: _mu_from_volumes(volumes(d))))


def delta_N(f: Poly):
    """Combinatorial delta invariant (exact rational; infinite when x^2 or
    y^2 divides f)."""
    diagram = newton_diagram(f)
    if diagram.convenient:
        return _normalize_fraction(_delta_from(diagram, volumes(diagram)))
    if diagram.x_div >= 2 or diagram.y_div >= 2:
        return INF
    return _normalize_fraction(
        _stabilized(f, lambda d: _delta_from(d, volumes(d)))
    )


def r_N(f: Poly) -> int:
    """Facet lattice lengths plus the two axis divisibilities."""
    diagram = newton_diagram(f)
    lengths = sum(facet.lattice_length for facet in diagram.facets)
    return lengths + diagram.x_div + diagram.y_div


def _as_int(value):
    if isinstance(value, Fraction):
        if value.denominator != 1:
            return value
        return int(value)
    return value


def _normalize_fraction(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value
