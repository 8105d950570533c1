"""Matrix superalgebra elements: exact block matrices with a declared parity.

Elements live in gl(m|n): even means supported on the diagonal blocks, odd
on the off-diagonal ones.  The superbracket is XY - (-1)^{|X||Y|} YX.
"""

from __future__ import annotations

from fractions import Fraction


class MatrixSuperElement:
    __slots__ = ("m", "n", "rows", "parity")

    def __init__(self, m, n, rows, parity):
        self.m = m
        self.n = n
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.parity = parity % 2
        d = m + n
        if len(self.rows) != d or any(len(r) != d for r in self.rows):
            raise ValueError("block matrix has wrong shape")
        for i in range(d):
            for j in range(d):
                if self.rows[i][j] and ((i < m) != (j < m)) != bool(self.parity):
                    raise ValueError("entries violate the declared parity")

    @classmethod
    def zero(cls, m, n, parity=0):
        d = m + n
        return cls(m, n, [[0] * d for _ in range(d)], parity)

    @classmethod
    def unit(cls, m, n, i, j, value=1):
        d = m + n
        rows = [[0] * d for _ in range(d)]
        rows[i][j] = value
        return cls(m, n, rows, 0 if (i < m) == (j < m) else 1)

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def add(self, other):
        if self.parity != other.parity:
            raise ValueError("sum of elements of different parity")
        return MatrixSuperElement(
            self.m, self.n,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            self.parity,
        )

    def scale(self, k):
        return MatrixSuperElement(
            self.m, self.n, [[k * x for x in r] for r in self.rows], self.parity
        )

    def _matmul(self, other):
        d = self.m + self.n
        return [
            [sum(self.rows[i][k] * other.rows[k][j] for k in range(d)) for j in range(d)]
            for i in range(d)
        ]

    def bracket(self, other):
        sign = -1 if (self.parity and other.parity) else 1
        ab = self._matmul(other)
        ba = other._matmul(self)
        rows = [
            [x - sign * y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)
        ]
        return MatrixSuperElement(self.m, self.n, rows, (self.parity + other.parity) % 2)

    def is_multiple_of_identity(self):
        d = self.m + self.n
        c = self.rows[0][0]
        for i in range(d):
            for j in range(d):
                if self.rows[i][j] != (c if i == j else 0):
                    return False
        return True

    def supertrace(self):
        return sum(self.rows[i][i] for i in range(self.m)) - sum(
            self.rows[self.m + k][self.m + k] for k in range(self.n)
        )

    def __eq__(self, other):
        return (self.m, self.n, self.parity, self.rows) == (
            other.m, other.n, other.parity, other.rows)

    def __repr__(self):
        return f"MatrixSuperElement({self.m}|{self.n}, parity={self.parity})"
