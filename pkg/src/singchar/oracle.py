"""Brute-force quotient dimensions by truncated linear algebra.

Independent of the standard-basis machinery: spans the products
x^beta * g modulo m^(D+1) and row-reduces exactly over the field.  A result
is certified once some full degree slice d <= D - max(deg g) lies in the
span; then m^d sits inside the ideal (Nakayama descent strips the
truncation term) and the dimension count is exact.

Deliberately naive; this module is the referee, not the player.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .poly import Poly

from .standard_basis import _exponents_of_degree


@dataclass
class OracleResult:
    dim: int
    certified: bool
    truncation: int
    certified_slice: int | None


class _RowSpace:
    """Incremental reduced row space over an exact field; rows are dicts."""

    def __init__(self, field, column_key):
        self.field = field
        self.column_key = column_key
        self.pivots = {}  # pivot column -> row dict (pivot coefficient 1)

    def _reduce(self, row: dict) -> dict:
        field = self.field
        row = dict(row)
        changed = True
        while changed:
            changed = False
            for col in sorted(row, key=self.column_key):
                pivot_row = self.pivots.get(col)
                if pivot_row is None:
                    continue
                factor = row[col]
                for c, v in pivot_row.items():
                    s = field.sub(row.get(c, field.zero), field.mul(factor, v))
                    if field.is_zero(s):
                        row.pop(c, None)
                    else:
                        row[c] = s
                changed = True
                break
        return row

    def insert(self, row: dict) -> bool:
        """Reduce and add the row; returns True if it enlarged the span."""
        row = self._reduce(row)
        if not row:
            return False
        field = self.field
        col = min(row, key=self.column_key)
        inv = field.inv(row[col])
        row = {c: field.mul(v, inv) for c, v in row.items()}
        self.pivots[col] = row
        return True

    def contains(self, row: dict) -> bool:
        return not self._reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def quotient_dim_truncated(gens: list, truncation: int) -> OracleResult:
    """Dimension of K[x]/(I + m^(D+1)) with a certification flag.

    ``dim`` equals the honest quotient dimension whenever ``certified``.
    """
    if truncation < 1:
        raise ValueError("truncation degree must be >= 1")
    nonzero = [g for g in gens if g]
    if not nonzero:
        total = comb(truncation + gens[0].ring.nvars, gens[0].ring.nvars) if gens else 0
        return OracleResult(dim=total, certified=False, truncation=truncation,
                            certified_slice=None)
    ring = nonzero[0].ring
    field = ring.field
    n = ring.nvars
    max_gen_degree = max(g.total_degree() for g in nonzero)

    space = _RowSpace(field, column_key=lambda e: (sum(e), e))
    for g in nonzero:
        for degree in range(0, truncation + 1):
            for beta in _exponents_of_degree(n, degree):
                row = {}
                for exp, c in g.terms.items():
                    shifted = tuple(a + b for a, b in zip(exp, beta))
                    if sum(shifted) <= truncation:
                        row[shifted] = c
                if row:
                    space.insert(row)

    total_monomials = comb(truncation + n, n)
    dim = total_monomials - space.rank

    certified_slice = None
    top = truncation - max_gen_degree
    for d in range(0, top + 1):
        if all(space.contains({e: field.one}) for e in _exponents_of_degree(n, d)):
            certified_slice = d
            break
    return OracleResult(
        dim=dim,
        certified=certified_slice is not None,
        truncation=truncation,
        certified_slice=certified_slice,
    )


def quotient_dim_adaptive(gens: list, ceiling: int = 48) -> OracleResult:
    """Double the truncation degree until certified or the ceiling is hit."""
    nonzero = [g for g in gens if g]
    if not nonzero:
        return quotient_dim_truncated(gens, 1)
    start = 2 * max(g.total_degree() for g in nonzero) + 2
    truncation = min(start, ceiling)
    while True:
        result = quotient_dim_truncated(gens, truncation)
        if result.certified or truncation >= ceiling:
            return result
        truncation = min(2 * truncation, ceiling)
