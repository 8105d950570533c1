"""Exact scalar arithmetic.

Everything in this package is computed over exact fields: plain rationals
(``fractions.Fraction``) for root coordinates, functionals and matrix
realizations, and the quartic extension Q(i, sqrt2) for the Hamiltonian
superderivation bases, whose natural eigenvectors carry coefficients
1/sqrt(2) and sqrt(-1).
"""

from __future__ import annotations

from fractions import Fraction


class QI2:
    """An element a + b*sqrt2 + (c + d*sqrt2)*i of Q(i, sqrt2), exactly.

    Immutable.  Arithmetic never leaves the field, and equality with 0 is
    decidable, which is all the bracket computations need.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    # -- constructors -------------------------------------------------
    @staticmethod
    def of(x) -> "QI2":
        if isinstance(x, QI2):
            return x
        return QI2(Fraction(x))

    @staticmethod
    def i() -> "QI2":
        return QI2(0, 0, 1, 0)

    @staticmethod
    def sqrt2() -> "QI2":
        return QI2(0, 1, 0, 0)

    @staticmethod
    def inv_sqrt2() -> "QI2":
        return QI2(0, Fraction(1, 2), 0, 0)

    # -- ring ops ------------------------------------------------------
    def __add__(self, other):
        o = QI2.of(other)
        return QI2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return QI2(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-QI2.of(other))

    def __rsub__(self, other):
        return QI2.of(other) + (-self)

    def __mul__(self, other):
        o = QI2.of(other)
        # (a1 + b1 r + (c1 + d1 r) i)(a2 + b2 r + (c2 + d2 r) i), r^2 = 2, i^2 = -1
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        re_a = a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2
        re_b = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
        im_a = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2)
        im_b = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2
        return QI2(re_a, re_b, im_a, im_b)

    __rmul__ = __mul__

    def inverse(self) -> "QI2":
        if not self:
            raise ZeroDivisionError("inverse of 0 in Q(i, sqrt2)")
        # first clear i: z * conj(z) = |z|^2 lives in Q(sqrt2)
        conj = QI2(self.a, self.b, -self.c, -self.d)
        n = self * conj  # c = d = 0 now
        # then clear sqrt2: (x + y r)(x - y r) = x^2 - 2 y^2 in Q
        x, y = n.a, n.b
        denom = x * x - 2 * y * y
        inv_n = QI2(x / denom, -y / denom)
        return conj * inv_n

    def __truediv__(self, other):
        return self * QI2.of(other).inverse()

    # -- predicates ----------------------------------------------------
    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other):
        o = QI2.of(other)
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"QI2({self.a}, {self.b}, {self.c}, {self.d})"


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
