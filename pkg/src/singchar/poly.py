"""Sparse multivariate polynomials representing power-series jets.

A ``Poly`` maps exponent tuples to nonzero field elements.  The ring context
(variable names plus coefficient field) travels with every polynomial and is
checked on mixed operations.  Polynomials are immutable values: every
operation returns a fresh object, so they are safe to share.

The finite-determinacy bounds reported elsewhere are what justify working
with polynomial jets in place of honest power series: once the jet is longer
than the determinacy bound, the invariants of the jet are the invariants of
any series extending it.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Iterable

from .algebra import INF, CoefficientField
from .errors import (
    CoefficientCollisionWarning,
    NotInvertibleError,
    NotLocalError,
    ParseError,
    RingMismatchError,
    UnknownVariableError,
)

Exponent = tuple  # one int per variable


class Ring:
    """Ambient context: ordered variable names over a coefficient field."""

    __slots__ = ("variables", "field")

    def __init__(self, variables: Iterable[str], field: CoefficientField):
        variables = tuple(variables)
        if not variables:
            raise ValueError("need at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names: {variables}")
        self.variables = variables
        self.field = field

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.variables == self.variables
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}]"

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, value) -> "Poly":
        c = self.field.coerce(value)
        if self.field.is_zero(c):
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def variable(self, index: int) -> "Poly":
        exp = [0] * self.nvars
        exp[index] = 1
        return Poly(self, {tuple(exp): self.field.one})

    def monomial(self, exponent: Exponent, coefficient=1) -> "Poly":
        c = self.field.coerce(coefficient)
        if self.field.is_zero(c):
            return Poly(self, {})
        return Poly(self, {tuple(exponent): c})


def format_key(exponent: Exponent):
    """Deterministic display order: total degree, then lexicographic."""
    return (sum(exponent), exponent)


class Poly:
    """A sparse polynomial; term map never stores zero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basics ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return self.terms.keys()

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"rings differ: {self.ring} vs {other.ring}")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        field = self.ring.field
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = field.add(out.get(exp, field.zero), c)
            if field.is_zero(s):
                out.pop(exp, None)
            else:
                out[exp] = s
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        field = self.ring.field
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = field.sub(out.get(exp, field.zero), c)
            if field.is_zero(s):
                out.pop(exp, None)
            else:
                out[exp] = s
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        field = self.ring.field
        return Poly(self.ring, {e: field.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        field = self.ring.field
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                s = field.add(out.get(exp, field.zero), field.mul(ca, cb))
                if field.is_zero(s):
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return Poly(self.ring, out)

    def scalar_mul(self, value) -> "Poly":
        field = self.ring.field
        c = field.coerce(value)
        if field.is_zero(c):
            return self.ring.zero()
        return Poly(self.ring, {e: field.mul(c, a) for e, a in self.terms.items()})

    def term_mul(self, exponent: Exponent, coefficient=1) -> "Poly":
        """Multiply by a single term coefficient * x^exponent."""
        field = self.ring.field
        c = field.coerce(coefficient)
        if field.is_zero(c):
            return self.ring.zero()
        return Poly(
            self.ring,
            {
                tuple(a + b for a, b in zip(e, exponent)): field.mul(c, v)
                for e, v in self.terms.items()
            },
        )

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # -- degree structure --------------------------------------------------

    def order(self):
        """Largest k with f in m^k: the minimal total degree; INF for 0."""
        if not self.terms:
            return INF
        return min(sum(e) for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return INF
        return max(sum(e) for e in self.terms)

    def jet(self, k: int) -> "Poly":
        """Truncate: drop every term of total degree > k."""
        return Poly(self.ring, {e: c for e, c in self.terms.items() if sum(e) <= k})

    def constant_term(self):
        zero_exp = (0,) * self.ring.nvars
        return self.terms.get(zero_exp, self.ring.field.zero)

    def partial(self, index: int) -> "Poly":
        """Formal partial derivative; char-p coefficient kill applies."""
        field = self.ring.field
        out: dict = {}
        for exp, c in self.terms.items():
            k = exp[index]
            if k == 0:
                continue
            coeff = field.int_mul(k, c)
            if field.is_zero(coeff):
                continue
            new = list(exp)
            new[index] = k - 1
            out[tuple(new)] = coeff
        return Poly(self.ring, out)

    def weighted_order(self, weights):
        """Minimal weighted degree over the support; INF for 0."""
        if not self.terms:
            return INF
        return min(sum(w * a for w, a in zip(weights, e)) for e in self.terms)

    def initial_part(self, weights) -> "Poly":
        """Terms of minimal weighted degree (the w-principal part)."""
        if not self.terms:
            return self
        d = self.weighted_order(weights)
        return Poly(
            self.ring,
            {
                e: c
                for e, c in self.terms.items()
                if sum(w * a for w, a in zip(weights, e)) == d
            },
        )

    def divisibility(self, index: int) -> int:
        """Largest j such that the index-th variable to the j-th divides f."""
        if not self.terms:
            raise ValueError("the zero polynomial is divisible by everything")
        return min(e[index] for e in self.terms)

    # -- substitution ------------------------------------------------------

    def substitute(self, images: list) -> "Poly":
        """Replace variable i by images[i]; images define a local map.

        Every image must lie in the maximal ideal and the matrix of linear
        parts must be invertible, so the substitution is an automorphism of
        the local ring.
        """
        ring = self.ring
        if len(images) != ring.nvars:
            raise ValueError("need one image per variable")
        for g in images:
            self._check(g)
            if not g.ring.field.is_zero(g.constant_term()):
                raise NotLocalError("substitution image has a constant term")
        if not _linear_part_invertible(images):
            raise NotInvertibleError("linear part of the substitution is singular")
        return self.evaluate_poly(images)

    def evaluate_poly(self, images: list) -> "Poly":
        """Raw composition f(images); no locality checks."""
        ring = self.ring
        power_cache = [{0: ring.one()} for _ in images]

        def image_power(i, k):
            cache = power_cache[i]
            if k not in cache:
                cache[k] = image_power(i, k - 1) * images[i]
            return cache[k]

        total = ring.zero()
        for exp, c in self.terms.items():
            term = ring.constant(1).scalar_mul(c)
            for i, k in enumerate(exp):
                if k:
                    term = term * image_power(i, k)
            total = total + term
        return total

    def evaluate_scalars(self, values: list):
        """Evaluate at field elements; exact."""
        field = self.ring.field
        vals = [field.coerce(v) for v in values]
        total = field.zero
        for exp, c in self.terms.items():
            term = c
            for v, k in zip(vals, exp):
                for _ in range(k):
                    term = field.mul(term, v)
            total = field.add(total, term)
        return total

    # -- display -----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: format_key(item[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for name, k in zip(self.ring.variables, exp):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            negative = False
            if field.characteristic == 0 and coeff < 0:
                negative = True
                coeff = -coeff
            if not factors:
                body = str(coeff)
            elif coeff == field.one:
                body = "*".join(factors)
            else:
                body = "*".join([str(coeff)] + factors)
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.ring!r}, {self!s})"


def _linear_part_invertible(images: list) -> bool:
    """Gaussian elimination on the matrix of degree-one coefficients."""
    ring = images[0].ring
    field = ring.field
    n = ring.nvars
    unit_exps = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        unit_exps.append(tuple(e))
    rows = [
        [g.terms.get(unit_exps[j], field.zero) for j in range(n)] for g in images
    ]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not field.is_zero(rows[r][col]):
                pivot = r
                break
        if pivot is None:
            return False
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = field.inv(rows[col][col])
        for r in range(col + 1, n):
            factor = field.mul(rows[r][col], inv)
            if field.is_zero(factor):
                continue
            rows[r] = [
                field.sub(a, field.mul(factor, b))
                for a, b in zip(rows[r], rows[col])
            ]
    return True


# ---------------------------------------------------------------------------
# Ideal constructors
# ---------------------------------------------------------------------------


def jacobian_ideal(f: Poly) -> list:
    """Generators [f_x1, ..., f_xn]; zero entries kept for positional clarity."""
    return [f.partial(i) for i in range(f.ring.nvars)]


def tjurina_ideal(f: Poly) -> list:
    """Generators [f, f_x1, ..., f_xn]."""
    return [f] + jacobian_ideal(f)


def add_axis_powers(f: Poly, m: int) -> Poly:
    """Return f + x_1^m + ... + x_n^m (coefficients added in the field).

    Warns if some x_i^m merges with an existing term of f; the Newton
    module sidesteps this by choosing m beyond every support coordinate.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    ring = f.ring
    result = f
    for i in range(ring.nvars):
        exp = [0] * ring.nvars
        exp[i] = m
        exp = tuple(exp)
        if exp in f.terms:
            warnings.warn(
                f"x_{i}^{m} collides with an existing term",
                CoefficientCollisionWarning,
                stacklevel=2,
            )
        result = result + ring.monomial(exp)
    return result


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------
#
# expr   := ('+'|'-')? term (('+'|'-') term)*
# term   := factor ('*'? factor)*
# factor := coeff | var pow? | '(' expr ')' ('^' nat)?
# pow    := '^'? nat            (caret optional only in compact form)
# coeff  := nat | nat '/' nat   (the fraction form needs characteristic 0)
#
# Compact exponents ("x2y3") are only legal when every variable name is a
# single letter; otherwise identifiers are maximal alphanumeric runs and
# exponents require the caret.


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.pos = 0
        self.compact = all(len(v) == 1 for v in ring.variables)

    def error(self, message):
        raise ParseError(message, self.pos)

    def peek(self):
        self.skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def take_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        return int(self.text[start:self.pos])

    def take_name(self) -> str:
        self.skip_ws()
        start = self.pos
        if self.compact:
            self.pos += 1
            return self.text[start:self.pos]
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self) -> Poly:
        poly = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected character {self.text[self.pos]!r}")
        return poly

    def expr(self) -> Poly:
        sign = 1
        if self.peek() in ("+", "-"):
            if self.text[self.pos] == "-":
                sign = -1
            self.pos += 1
        total = self.term()
        if sign < 0:
            total = -total
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            total = total + rhs if op == "+" else total - rhs
        return total

    def term(self) -> Poly:
        product = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                product = product * self.factor()
            elif ch.isalnum() or ch == "(":
                product = product * self.factor()
            else:
                return product

    def factor(self) -> Poly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            if self.peek() == "^":
                self.pos += 1
                return inner ** self.take_nat()
            return inner
        if ch.isdigit():
            return self.coefficient()
        if ch.isalpha():
            return self.variable_power()
        self.error("expected a coefficient, variable or '('")

    def coefficient(self) -> Poly:
        num = self.take_nat()
        if self.peek() == "/":
            if self.ring.field.characteristic != 0:
                self.error("rational coefficients need characteristic 0")
            self.pos += 1
            den = self.take_nat()
            if den == 0:
                self.error("zero denominator")
            return self.ring.constant(Fraction(num, den))
        return self.ring.constant(num)

    def variable_power(self) -> Poly:
        at = self.pos
        name = self.take_name()
        if name not in self.ring.variables:
            raise UnknownVariableError(f"unknown variable {name!r}", at)
        index = self.ring.variables.index(name)
        exponent = 1
        ch = self.peek()
        if ch == "^":
            self.pos += 1
            exponent = self.take_nat()
        elif self.compact and ch.isdigit():
            exponent = self.take_nat()
        exp = [0] * self.ring.nvars
        exp[index] = exponent
        return self.ring.monomial(tuple(exp))


def parse(text: str, ring: Ring) -> Poly:
    """Parse an expression like "y8+x8y4+x23" or "(1+x)*(x^3+y^2)"."""
    return _Parser(text, ring).parse()
