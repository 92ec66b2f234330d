"""Exact coefficient arithmetic over Q and F_p, plus univariate gcd.

Scalars are plain Python values: ``Fraction`` in characteristic zero and
``int`` residues in ``[0, p)`` in characteristic p.  A ``CoefficientField``
bundles the characteristic with the arithmetic so that the rest of the
package never branches on the coefficient domain.

Univariate polynomials appear here only as dense coefficient lists
``[a_0, a_1, ...]`` (constant term first, no trailing zeros).  They back the
torus tests of the non-degeneracy module, which reduce everything to a
single gcd computation in one variable.
"""

from __future__ import annotations

from fractions import Fraction


class Infinity:
    """Saturating positive infinity for dimension counts and bounds.

    A single instance ``INF`` is used everywhere.  It compares larger than
    every number and absorbs addition, subtraction of finite values and
    multiplication by positive numbers.  No floating point is involved.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "infinity"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("singchar-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("infinity - infinity is undefined")
        return self

    def __mul__(self, other):
        if other is self:
            return self
        if other <= 0:
            raise ArithmeticError("infinity times a non-positive number")
        return self

    __rmul__ = __mul__

    def __neg__(self):
        raise ArithmeticError("negative infinity is not modelled")


INF = Infinity()


def is_finite(value) -> bool:
    return value is not INF


def is_prime(n: int) -> bool:
    """Deterministic primality test (trial division; inputs are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


class CoefficientField:
    """The ground field: Q when characteristic 0, F_p for a prime p.

    All operations are exact.  Composite characteristics are rejected at
    construction.
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int):
        if characteristic != 0 and not is_prime(characteristic):
            raise ValueError(
                f"characteristic must be 0 or prime, got {characteristic}"
            )
        self.characteristic = characteristic

    def __repr__(self):
        if self.characteristic == 0:
            return "QQ"
        return f"GF({self.characteristic})"

    def __eq__(self, other):
        return (
            isinstance(other, CoefficientField)
            and other.characteristic == self.characteristic
        )

    def __hash__(self):
        return hash(("CoefficientField", self.characteristic))

    # -- element construction ------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def coerce(self, value):
        """Map an int or Fraction into the field."""
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} not invertible mod {p}"
                )
            return value.numerator * pow(value.denominator, -1, p) % p
        return value % p

    def is_zero(self, a) -> bool:
        return a == 0

    # -- arithmetic -----------------------------------------------------

    def add(self, a, b):
        if self.characteristic == 0:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.characteristic == 0:
            return a - b
        return (a - b) % self.characteristic

    def mul(self, a, b):
        if self.characteristic == 0:
            return a * b
        return (a * b) % self.characteristic

    def neg(self, a):
        if self.characteristic == 0:
            return -a
        return (-a) % self.characteristic

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / Fraction(a)
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def int_mul(self, n: int, a):
        """n*a for an integer n (used by formal derivatives)."""
        return self.mul(self.coerce(n), a)


def require_same_field(a: CoefficientField, b: CoefficientField) -> None:
    from .errors import FieldMismatchError

    if a != b:
        raise FieldMismatchError(f"fields differ: {a} vs {b}")


# ---------------------------------------------------------------------------
# Dense univariate helpers (coefficient lists, lowest degree first).
# ---------------------------------------------------------------------------


def univ_trim(coeffs: list, field: CoefficientField) -> list:
    """Drop trailing zeros; the zero polynomial is the empty list."""
    end = len(coeffs)
    while end > 0 and field.is_zero(coeffs[end - 1]):
        end -= 1
    return list(coeffs[:end])


def univ_degree(coeffs: list) -> int:
    """Degree of a trimmed list; -1 for the zero polynomial."""
    return len(coeffs) - 1


def univ_monic(coeffs: list, field: CoefficientField) -> list:
    if not coeffs:
        return []
    lead_inv = field.inv(coeffs[-1])
    return [field.mul(c, lead_inv) for c in coeffs]


def univ_mod(a: list, b: list, field: CoefficientField) -> list:
    """Remainder of a divided by b (b nonzero), both trimmed lists."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lead = field.inv(b[-1])
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        factor = field.mul(r[-1], inv_lead)
        for i in range(db + 1):
            r[shift + i] = field.sub(r[shift + i], field.mul(factor, b[i]))
        r = univ_trim(r, field)
    return r


def univ_mul(a: list, b: list, field: CoefficientField) -> list:
    """Product of two trimmed coefficient lists."""
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if field.is_zero(ca):
            continue
        for j, cb in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(ca, cb))
    return univ_trim(out, field)


def univ_divexact(a: list, b: list, field: CoefficientField) -> list:
    """Quotient a/b when the division is exact (raises otherwise)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    r = list(a)
    db = len(b) - 1
    inv_lead = field.inv(b[-1])
    quotient = [field.zero] * (len(a) - db)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        factor = field.mul(r[-1], inv_lead)
        quotient[shift] = factor
        for i in range(db + 1):
            r[shift + i] = field.sub(r[shift + i], field.mul(factor, b[i]))
        r = univ_trim(r, field)
    if r:
        raise ArithmeticError("division was not exact")
    return univ_trim(quotient, field)


def univariate_gcd(a: list, b: list, field: CoefficientField) -> list:
    """Monic gcd of two univariate polynomials over the field.

    Inputs are dense coefficient lists; at least one must be nonzero.
    """
    from .errors import ZeroIdealError

    a = univ_trim(a, field)
    b = univ_trim(b, field)
    if not a and not b:
        raise ZeroIdealError("gcd(0, 0) is undefined")
    while b:
        a, b = b, univ_mod(a, b, field)
    return univ_monic(a, field)


def univ_strip_powers(coeffs: list) -> list:
    """Divide out the largest power of the variable (t^k factor)."""
    if not coeffs:
        return []
    k = 0
    while coeffs[k] == 0:
        k += 1
    return coeffs[k:]
