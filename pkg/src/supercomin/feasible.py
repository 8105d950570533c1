"""Exact linear feasibility over the rationals via Fourier-Motzkin.

Constraints are rows ``(c_0, ..., c_{d-1}, k)`` of integers meaning
``sum c_i x_i + k >= 0``.  Strict homogeneous inequalities are scaled to
``>= 1`` / ``<= -1`` by the caller (valid by homogeneity of the systems this
package produces).  Elimination is exact; witnesses are recovered by back
substitution and are rational.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _normalize(row):
    g = 0
    for c in row:
        g = gcd(g, abs(c))
    if g > 1:
        row = tuple(c // g for c in row)
    return tuple(row)


def _combine(p, q, k):
    """Positive combination of p (c_k > 0) and q (c_k < 0) cancelling var k."""
    a, b = -q[k], p[k]
    return _normalize(tuple(a * pc + b * qc for pc, qc in zip(p, q)))


class Infeasible(Exception):
    pass


def _eliminate(rows, dim):
    """Run FM; return per-variable levels for back substitution.

    levels[k] = (pos, neg) rows used when eliminating variable k.  Raises
    Infeasible when a constant row with negative constant appears.
    """
    current = set()
    for r in rows:
        r = _normalize(r)
        if any(r[:dim]):
            current.add(r)
        elif r[dim] < 0:
            raise Infeasible
    levels = []
    for k in range(dim):
        pos, neg, rest = [], [], set()
        for r in current:
            if r[k] > 0:
                pos.append(r)
            elif r[k] < 0:
                neg.append(r)
            else:
                rest.add(r)
        levels.append((pos, neg))
        for p in pos:
            for q in neg:
                comb = _combine(p, q, k)
                if any(comb[:dim]):
                    rest.add(comb)
                elif comb[dim] < 0:
                    raise Infeasible
        current = rest
    for r in current:
        if r[dim] < 0:
            raise Infeasible
    return levels


def feasible_witness(rows, dim):
    """A rational point satisfying every row, or None if the system is empty."""
    try:
        levels = _eliminate(rows, dim)
    except Infeasible:
        return None
    x = [Fraction(0)] * dim
    for k in reversed(range(dim)):
        lo = hi = None
        for sign_rows, is_pos in ((levels[k][0], True), (levels[k][1], False)):
            for r in sign_rows:
                rest = r[dim] + sum(r[j] * x[j] for j in range(k + 1, dim))
                bound = Fraction(-rest, r[k])
                if is_pos:
                    lo = bound if lo is None or bound > lo else lo
                else:
                    hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None:
            assert lo <= hi
            x[k] = (lo + hi) / 2
        elif lo is not None:
            x[k] = lo
        elif hi is not None:
            x[k] = hi
    for r in rows:
        assert sum(c * v for c, v in zip(r, x)) + r[dim] >= 0
    return x


def feasible(rows, dim) -> bool:
    try:
        _eliminate(rows, dim)
        return True
    except Infeasible:
        return False


def clear_denominators(x):
    """Scale a rational vector to coprime integers (empty-safe)."""
    denom = 1
    for v in x:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints


class IncrementalFM:
    """Fourier-Motzkin state that accepts constraints one at a time.

    Designed for depth-first sign-vector enumeration: ``clone()`` is cheap
    (copy-on-write of per-level row lists), ``add`` cascades the new row and
    all its eliminations, and ``alive`` reports feasibility so far.  Only
    homogeneous-scaled integer rows are accepted.
    """

    __slots__ = ("dim", "levels", "seen", "alive")

    def __init__(self, dim: int):
        self.dim = dim
        self.levels = [([], []) for _ in range(dim)]
        self.seen = set()
        self.alive = True

    def clone(self) -> "IncrementalFM":
        out = IncrementalFM.__new__(IncrementalFM)
        out.dim = self.dim
        out.levels = [(list(p), list(n)) for p, n in self.levels]
        out.seen = set(self.seen)
        out.alive = self.alive
        return out

    def add(self, row) -> bool:
        """Insert a constraint; returns the updated feasibility flag."""
        if not self.alive:
            return False
        stack = [(_normalize(row), 0)]
        while stack:
            r, k = stack.pop()
            if r in self.seen:
                continue
            self.seen.add(r)
            while k < self.dim and r[k] == 0:
                k += 1
            if k == self.dim:
                if r[self.dim] < 0:
                    self.alive = False
                    return False
                continue
            pos, neg = self.levels[k]
            if r[k] > 0:
                pos.append(r)
                stack.extend((_combine(r, q, k), k + 1) for q in neg)
            else:
                neg.append(r)
                stack.extend((_combine(p, r, k), k + 1) for p in pos)
        return self.alive
