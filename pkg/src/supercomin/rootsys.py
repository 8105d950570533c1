"""Root systems of the simple finite-dimensional complex Lie superalgebras.

Families covered (canonical tags):

==========  ==========================================  ==================
tag         algebra                                     params
==========  ==========================================  ==================
sl          sl(m|n), m != n                             (m, n)
psl         psl(n|n)                                    (n,)
osp         osp(M|N), N even                            (M, N)
D21a        D(2,1;a)  (roots independent of a)          ()
F4          F(4)                                        ()
G3          G(3)                                        ()
psq         psq(n)                                      (n,)
p           p(n), the periplectic series                (n,)
W           W(n)                                        (n,)
S           S(n)                                        (n,)
Sprime      S'(n), n even                               (n,)
H           H(n)                                        (n,)
==========  ==========================================  ==================

Aliases ``osp_odd (m,n) -> osp(2m+1|2n)``, ``osp1 (n,) -> osp(1|2n)``,
``osp_even (m,n) -> osp(2m|2n)`` and ``osp2 (n,) -> osp(2|2n)`` are accepted.

Weights are tuples of exact rationals over an ordered basis of labels
eps_1..eps_m, delta_1..delta_n, gamma_1..gamma_k, written ``e``/``d``/``g``
in serialized form.  All arithmetic is exact; root order is lexicographic
on coordinate tuples, which makes every downstream report deterministic.

Three families live in a coordinate space borrowed from a bigger algebra:

* ``psl(n|n)`` stores roots in gl(n|n) coordinates.  For n >= 3 the root
  sets coincide; for n = 2 the identification collapses pairs of odd
  gl-roots into single psl roots of dimension (0|2), and each stored root
  keeps the full tuple of gl lifts.  Sums of roots are classified against
  the gl(n|n) root set (``ambient_sum``); membership of the quotient image
  is the separate query ``projected_sum_in_delta``.
* ``S(n)``/``S'(n)`` store roots in W(n) coordinates; the n weights
  eps_{[1,n] minus i} belong to W(n) but not to S(n), and sums landing on
  them are reported as ``ambient_only``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

HALF = Fraction(1, 2)

FAMILIES = ("sl", "psl", "osp", "D21a", "F4", "G3", "psq", "p", "W", "S", "Sprime", "H")

_OSP_ALIASES = {"osp_odd", "osp1", "osp_even", "osp2"}


class ParameterError(ValueError):
    """Family parameters outside the validity range; message names the bound."""


# ---------------------------------------------------------------------------
# weights


def wadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def wneg(u):
    return tuple(-a for a in u)


def wsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def is_zero_weight(u) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class Root:
    weight: tuple
    even_dim: int
    odd_dim: int

    def __post_init__(self):
        if self.even_dim + self.odd_dim < 1:
            raise ValueError("root space must be nonzero")
        if is_zero_weight(self.weight):
            raise ValueError("zero weight is not a root")


@dataclass(frozen=True)
class SumOutcome:
    kind: str  # "in_delta" | "ambient_only" | "not_root"
    index: int | None = None
    weight: tuple | None = None

    @staticmethod
    def in_delta(index: int) -> "SumOutcome":
        return SumOutcome("in_delta", index=index)

    @staticmethod
    def ambient_only(weight) -> "SumOutcome":
        return SumOutcome("ambient_only", weight=weight)

    @staticmethod
    def not_root() -> "SumOutcome":
        return SumOutcome("not_root")


class RootSystem:
    """Immutable indexed root set with family metadata and ambient sums."""

    def __init__(self, family, params, basis, roots, ambient="self",
                 lifts=None, ambient_extra=None, gl_shift=None):
        self.family = family
        self.params = tuple(params)
        self.basis = tuple(basis)  # tuples (kind, index), kind in "edg"
        order = sorted(range(len(roots)), key=lambda i: roots[i].weight)
        self.roots = tuple(roots[i] for i in order)
        self.ambient = ambient
        self._index = {r.weight: i for i, r in enumerate(self.roots)}
        if len(self._index) != len(self.roots):
            raise ValueError("duplicate root weights")
        if lifts is None:
            self.lifts = tuple((r.weight,) for r in self.roots)
        else:
            self.lifts = tuple(tuple(lifts[i]) for i in order)
        # weights that are ambient roots but not roots of Delta (S/S' only)
        self.ambient_extra = frozenset(ambient_extra or ())
        self.gl_shift = gl_shift  # psl only: sum(eps) - sum(delta) in gl coords
        self._ambient_class = None
        if gl_shift is not None:
            amb = {}
            for i, ls in enumerate(self.lifts):
                for w in ls:
                    amb[w] = i
            self._ambient_class = amb
        if self._ambient_class is not None:
            # class-aware negation: -class(w) = class(-w)
            self.neg = tuple(self._ambient_class.get(wneg(r.weight)) for r in self.roots)
        else:
            self.neg = tuple(self._index.get(wneg(r.weight)) for r in self.roots)
        self.symmetric = all(j is not None for j in self.neg)
        self._sym = None

    # -- basic queries --------------------------------------------------
    def __len__(self):
        return len(self.roots)

    def index_of(self, weight):
        return self._index.get(tuple(weight))

    def weight_of(self, i):
        return self.roots[i].weight

    @property
    def even_indices(self):
        return tuple(i for i, r in enumerate(self.roots) if r.even_dim)

    @property
    def odd_indices(self):
        return tuple(i for i, r in enumerate(self.roots) if r.odd_dim)

    def dim_root_spaces(self):
        return sum(r.even_dim + r.odd_dim for r in self.roots)

    # -- sums -----------------------------------------------------------
    def ambient_sum(self, a: int, b: int) -> SumOutcome:
        """Classify the sum of roots a and b in the ambient coordinate space.

        The sum of the stored representative weights is formed literally and
        looked up: first among the roots of Delta, then (for S/S') among the
        ambient-only W(n) roots.  For psl the ambient root set is that of
        gl(n|n), every member of which is identified with a stored root, so
        the outcome is never ``ambient_only`` there.
        """
        w = wadd(self.roots[a].weight, self.roots[b].weight)
        if is_zero_weight(w):
            return SumOutcome.not_root()
        if self._ambient_class is not None:
            cls = self._ambient_class.get(w)
            return SumOutcome.in_delta(cls) if cls is not None else SumOutcome.not_root()
        idx = self._index.get(w)
        if idx is not None:
            return SumOutcome.in_delta(idx)
        if w in self.ambient_extra:
            return SumOutcome.ambient_only(w)
        return SumOutcome.not_root()

    def pair_targets(self, a: int, b: int):
        """Root indices forced by closure when a and b both lie in a subset.

        For psl this runs over all lift pairs (one gl-root sum per pair can
        land in the gl root set); elsewhere it is the plain ambient sum.
        """
        if self._ambient_class is not None:
            out = set()
            for la in self.lifts[a]:
                for lb in self.lifts[b]:
                    cls = self._ambient_class.get(wadd(la, lb))
                    if cls is not None:
                        out.add(cls)
            return tuple(sorted(out))
        s = self.ambient_sum(a, b)
        return (s.index,) if s.kind == "in_delta" else ()

    def functional_constraints(self):
        """Directions every functional on this system must annihilate.

        When the quotient identification collapses gl roots (psl(2|2)), the
        value of a functional on a root class must not depend on the chosen
        lift, which pins the functional to the quotient coordinate space.
        Elsewhere the stored coordinates are the functional domain.
        """
        if self.gl_shift is None or all(len(ls) == 1 for ls in self.lifts):
            return ()
        n = len(self.basis) // 2
        eps_sum = tuple(Fraction(1 if k < n else 0) for k in range(2 * n))
        dlt_sum = tuple(Fraction(0 if k < n else 1) for k in range(2 * n))
        return (eps_sum, dlt_sum)

    def projected_sum_in_delta(self, a: int, b: int) -> bool:
        """psl only: is the image of a+b under the quotient map a root?"""
        if self.family != "psl":
            raise ValueError("projected_sum_in_delta is defined for psl only")
        w = wadd(self.roots[a].weight, self.roots[b].weight)
        for cand in (w, wadd(w, self.gl_shift), wsub(w, self.gl_shift)):
            if cand in self._ambient_class:
                return True
        return False

    # -- symmetrization ---------------------------------------------------
    def symmetrized(self) -> "SymmetrizedSystem":
        if self._sym is None:
            self._sym = SymmetrizedSystem(self)
        return self._sym

    # -- serialization ------------------------------------------------------
    def root_str(self, i: int) -> str:
        return weight_str(self.roots[i].weight, self.basis)

    def parse_root(self, s: str) -> int:
        w = parse_weight(s, self.basis)
        idx = self._index.get(w)
        if idx is None:
            raise ValueError(f"{s!r} is not a root of this system")
        return idx

    def __repr__(self):
        p = ",".join(str(x) for x in self.params)
        return f"<RootSystem {self.family}({p}) with {len(self.roots)} roots>"


class SymmetrizedSystem:
    """The set Delta union (-Delta) with literal weight arithmetic.

    For symmetric systems this is Delta itself.  Weights are listed with all
    Delta representatives first (in root order), then the extra negations in
    lexicographic order; ``in_delta[k]`` holds the root index or None.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        weights = [r.weight for r in rs.roots]
        in_delta = list(range(len(rs.roots)))
        if rs.symmetric:
            extra = []
        else:
            extra = sorted(
                {wneg(r.weight) for r in rs.roots if rs.index_of(wneg(r.weight)) is None}
            )
        weights.extend(extra)
        in_delta.extend([None] * len(extra))
        self.weights = tuple(weights)
        self.in_delta = tuple(in_delta)
        self._index = {w: k for k, w in enumerate(self.weights)}
        if rs.symmetric:
            self.neg = rs.neg
        else:
            self.neg = tuple(self._index[wneg(w)] for w in self.weights)
        self.n_delta = len(rs.roots)

    def __len__(self):
        return len(self.weights)

    def index_of(self, w):
        return self._index.get(tuple(w))

    def sum_target(self, i: int, j: int):
        """Index of weights[i] + weights[j] in the symmetrized set, or None."""
        return self._index.get(wadd(self.weights[i], self.weights[j]))


# ---------------------------------------------------------------------------
# label helpers and serialization

_TERM_RE = re.compile(r"([+-]?)(\d*)([edg])(\d+)")


def weight_str(w, basis) -> str:
    denom = 1
    for c in w:
        f = Fraction(c)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    parts = []
    for c, (kind, idx) in zip(w, basis):
        k = Fraction(c) * denom
        if k == 0:
            continue
        n = int(k)
        sign = "-" if n < 0 else "+"
        mag = abs(n)
        coeff = "" if mag == 1 else str(mag)
        parts.append(f"{sign}{coeff}{kind}{idx}")
    if not parts:
        return "0"
    body = "".join(parts).lstrip("+")
    if denom == 1:
        return body
    return f"1/{denom}({body})"


def parse_weight(s: str, basis):
    s = s.strip()
    denom = 1
    m = re.fullmatch(r"1/(\d+)\((.*)\)", s)
    if m:
        denom = int(m.group(1))
        s = m.group(2)
    pos = {lbl: k for k, lbl in enumerate(basis)}
    coords = [Fraction(0)] * len(basis)
    consumed = 0
    for m in _TERM_RE.finditer(s):
        consumed += len(m.group(0))
        sign, num, kind, idx = m.groups()
        c = Fraction(int(num) if num else 1, denom)
        if sign == "-":
            c = -c
        key = (kind, int(idx))
        if key not in pos:
            raise ValueError(f"unknown basis label {kind}{idx}")
        coords[pos[key]] += c
    if consumed != len(s.replace(" ", "")):
        raise ValueError(f"cannot parse weight string {s!r}")
    return tuple(coords)


# ---------------------------------------------------------------------------
# family builders


def _unit(dim, k, scale=1):
    w = [Fraction(0)] * dim
    w[k] = Fraction(scale)
    return tuple(w)


def _require(cond, msg):
    if not cond:
        raise ParameterError(msg)


def _basis(m_eps, n_delta=0, n_gamma=0):
    out = [("e", i + 1) for i in range(m_eps)]
    out += [("d", i + 1) for i in range(n_delta)]
    out += [("g", i + 1) for i in range(n_gamma)]
    return out


def _build_sl(m, n):
    _require(m >= 1 and n >= 1, "sl(m|n) needs m >= 1 and n >= 1")
    _require(m != n, "sl(m|n) needs m != n (use psl for m = n)")
    d = m + n
    eps = [_unit(d, i) for i in range(m)]
    dlt = [_unit(d, m + k) for k in range(n)]
    roots = []
    for i in range(m):
        for j in range(m):
            if i != j:
                roots.append(Root(wsub(eps[i], eps[j]), 1, 0))
    for k in range(n):
        for l in range(n):
            if k != l:
                roots.append(Root(wsub(dlt[k], dlt[l]), 1, 0))
    for i in range(m):
        for k in range(n):
            roots.append(Root(wsub(eps[i], dlt[k]), 0, 1))
            roots.append(Root(wsub(dlt[k], eps[i]), 0, 1))
    return RootSystem("sl", (m, n), _basis(m, n), roots)


def _build_psl(n):
    _require(n >= 2, "psl(n|n) needs n >= 2")
    d = 2 * n
    eps = [_unit(d, i) for i in range(n)]
    dlt = [_unit(d, n + k) for k in range(n)]
    gl_roots = []  # (weight, even_dim, odd_dim)
    for i in range(n):
        for j in range(n):
            if i != j:
                gl_roots.append((wsub(eps[i], eps[j]), 1, 0))
                gl_roots.append((wsub(dlt[i], dlt[j]), 1, 0))
    for i in range(n):
        for k in range(n):
            gl_roots.append((wsub(eps[i], dlt[k]), 0, 1))
            gl_roots.append((wsub(dlt[k], eps[i]), 0, 1))
    shift = tuple(Fraction(1 if i < n else -1) for i in range(d))
    # group gl roots into fibers of the quotient identification
    wset = {w for w, _, _ in gl_roots}
    classes = {}
    for w, _, _ in gl_roots:
        mates = [w] + [c for c in (wadd(w, shift), wsub(w, shift)) if c in wset]
        classes[min(mates)] = tuple(sorted(set(mates)))
    dim_by_weight = {w: (ev, od) for w, ev, od in gl_roots}
    roots, lifts = [], []
    for rep in sorted(classes):
        mates = classes[rep]
        ev = sum(dim_by_weight[w][0] for w in mates)
        od = sum(dim_by_weight[w][1] for w in mates)
        roots.append(Root(rep, ev, od))
        lifts.append(mates)
    return RootSystem("psl", (n,), _basis(n, n), roots,
                      ambient="gl_lift", lifts=lifts, gl_shift=shift)


def _build_osp(M, N):
    _require(M >= 1, "osp(M|N) needs M >= 1")
    _require(N >= 2 and N % 2 == 0, "osp(M|N) needs even N >= 2")
    m, n = M // 2, N // 2
    d = m + n
    eps = [_unit(d, i) for i in range(m)]
    dlt = [_unit(d, m + k) for k in range(n)]
    roots = []
    for i, j in combinations(range(m), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.append(Root(wadd(
                    _unit(d, i, si), _unit(d, j, sj)), 1, 0))
    for k, l in combinations(range(n), 2):
        for sk in (1, -1):
            for sl_ in (1, -1):
                roots.append(Root(wadd(
                    _unit(d, m + k, sk), _unit(d, m + l, sl_)), 1, 0))
    for k in range(n):
        roots.append(Root(_unit(d, m + k, 2), 1, 0))
        roots.append(Root(_unit(d, m + k, -2), 1, 0))
    if M % 2 == 1:
        for i in range(m):
            roots.append(Root(eps[i], 1, 0))
            roots.append(Root(wneg(eps[i]), 1, 0))
        for k in range(n):
            roots.append(Root(dlt[k], 0, 1))
            roots.append(Root(wneg(dlt[k]), 0, 1))
    for i in range(m):
        for k in range(n):
            for si in (1, -1):
                for sk in (1, -1):
                    roots.append(Root(wadd(
                        _unit(d, i, si), _unit(d, m + k, sk)), 0, 1))
    return RootSystem("osp", (M, N), _basis(m, n), roots)


def _build_D21a():
    d = 3
    roots = []
    for i in range(3):
        roots.append(Root(_unit(d, i), 1, 0))
        roots.append(Root(_unit(d, i, -1), 1, 0))
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                roots.append(Root((HALF * s1, HALF * s2, HALF * s3), 0, 1))
    return RootSystem("D21a", (), _basis(0, 0, 3), roots)


def _build_F4():
    d = 4
    roots = []
    for i, j in combinations(range(3), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.append(Root(wadd(_unit(d, i, si), _unit(d, j, sj)), 1, 0))
    for i in range(3):
        roots.append(Root(_unit(d, i), 1, 0))
        roots.append(Root(_unit(d, i, -1), 1, 0))
    roots.append(Root(_unit(d, 3), 1, 0))
    roots.append(Root(_unit(d, 3, -1), 1, 0))
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                for s4 in (1, -1):
                    roots.append(Root(
                        (HALF * s1, HALF * s2, HALF * s3, HALF * s4), 0, 1))
    return RootSystem("F4", (), _basis(3, 0, 1), roots)


def _build_G3():
    # eps3 is eliminated through eps1 + eps2 + eps3 = 0; basis (e1, e2, g1)
    d = 3
    eps = [(Fraction(1), Fraction(0), Fraction(0)),
           (Fraction(0), Fraction(1), Fraction(0)),
           (Fraction(-1), Fraction(-1), Fraction(0))]
    gam = (Fraction(0), Fraction(0), Fraction(1))
    half_gam = (Fraction(0), Fraction(0), HALF)
    roots = []
    for i in range(3):
        for j in range(3):
            if i != j:
                roots.append(Root(wsub(eps[i], eps[j]), 1, 0))
        roots.append(Root(eps[i], 1, 0))
        roots.append(Root(wneg(eps[i]), 1, 0))
    roots.append(Root(gam, 1, 0))
    roots.append(Root(wneg(gam), 1, 0))
    roots.append(Root(half_gam, 0, 1))
    roots.append(Root(wneg(half_gam), 0, 1))
    for i in range(3):
        for se in (1, -1):
            for sg in (1, -1):
                e = eps[i] if se > 0 else wneg(eps[i])
                g = half_gam if sg > 0 else wneg(half_gam)
                roots.append(Root(wadd(e, g), 0, 1))
    return RootSystem("G3", (), _basis(2, 0, 1), roots)


def _build_psq(n):
    _require(n >= 3, "psq(n) needs n >= 3")
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                roots.append(Root(wsub(_unit(n, i), _unit(n, j)), 1, 1))
    return RootSystem("psq", (n,), _basis(n), roots)


def _build_p(n):
    _require(n >= 2, "p(n) needs n >= 2")
    if n == 2:
        warnings.warn("p(2) is not simple; accepted for oracle runs only",
                      stacklevel=3)
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                roots.append(Root(wsub(_unit(n, i), _unit(n, j)), 1, 0))
    for i, j in combinations(range(n), 2):
        w = wadd(_unit(n, i), _unit(n, j))
        roots.append(Root(w, 0, 1))
        roots.append(Root(wneg(w), 0, 1))
    for i in range(n):
        roots.append(Root(_unit(n, i, 2), 0, 1))
    return RootSystem("p", (n,), _basis(n), roots)


def _w_weight(n, iset, j=None):
    w = [Fraction(0)] * n
    for i in iset:
        w[i] += 1
    if j is not None:
        w[j] -= 1
    return tuple(w)


def _build_W(n):
    _require(n >= 2, "W(n) needs n >= 2")
    roots = []
    full = (1 << n) - 1
    for mask in range(full + 1):
        size = bin(mask).count("1")
        iset = [i for i in range(n) if mask & (1 << i)]
        for j in range(n):
            if mask & (1 << j):
                continue
            w = _w_weight(n, iset, j)
            par = (size - 1) % 2
            roots.append(Root(w, 1 - par, par))
        if 0 < size < n:
            par = size % 2
            dim = n - size
            w = _w_weight(n, iset)
            roots.append(Root(w, dim * (1 - par), dim * par))
    return RootSystem("W", (n,), _basis(n), roots)


def _build_S(n, prime=False):
    if prime:
        _require(n >= 4 and n % 2 == 0, "S'(n) needs even n >= 4")
    else:
        _require(n >= 3, "S(n) needs n >= 3")
    roots = []
    removed = []
    for mask in range(1 << n):
        size = bin(mask).count("1")
        iset = [i for i in range(n) if mask & (1 << i)]
        for j in range(n):
            if mask & (1 << j):
                continue
            w = _w_weight(n, iset, j)
            par = (size - 1) % 2
            roots.append(Root(w, 1 - par, par))
        if 0 < size < n:
            w = _w_weight(n, iset)
            if size == n - 1:
                removed.append(w)
            else:
                par = size % 2
                dim = n - size - 1
                roots.append(Root(w, dim * (1 - par), dim * par))
    fam = "Sprime" if prime else "S"
    return RootSystem(fam, (n,), _basis(n), roots,
                      ambient="W_lift", ambient_extra=removed)


def _build_H(n):
    _require(n >= 5, "H(n) needs n >= 5")
    l = n // 2
    odd = n % 2
    roots = []
    for imask in range(1 << l):
        for jmask in range(1 << l):
            if imask & jmask or (imask == 0 and jmask == 0):
                continue
            s = bin(imask).count("1") + bin(jmask).count("1")
            w = tuple(Fraction((1 if imask >> k & 1 else 0)
                               - (1 if jmask >> k & 1 else 0)) for k in range(l))
            base = 1 << (l - s)
            if odd:
                roots.append(Root(w, base, base))
            else:
                par = s % 2
                roots.append(Root(w, base * (1 - par), base * par))
    return RootSystem("H", (n,), _basis(l), roots)


def normalize_family(family, params):
    """Resolve aliases to a canonical (family, params) pair."""
    params = tuple(int(x) for x in params)
    if family == "osp_odd":
        _require(len(params) == 2 and params[0] >= 1 and params[1] >= 1,
                 "osp_odd needs (m, n) with m, n >= 1")
        return "osp", (2 * params[0] + 1, 2 * params[1])
    if family == "osp1":
        _require(len(params) == 1 and params[0] >= 1, "osp1 needs (n,) with n >= 1")
        return "osp", (1, 2 * params[0])
    if family == "osp_even":
        _require(len(params) == 2 and params[0] > 1 and params[1] >= 1,
                 "osp_even needs (m, n) with m > 1, n >= 1")
        return "osp", (2 * params[0], 2 * params[1])
    if family == "osp2":
        _require(len(params) == 1 and params[0] >= 1, "osp2 needs (n,) with n >= 1")
        return "osp", (2, 2 * params[0])
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}")
    return family, params


_BUILDERS = {
    "sl": lambda p: _build_sl(*p),
    "psl": lambda p: _build_psl(*p),
    "osp": lambda p: _build_osp(*p),
    "D21a": lambda p: _build_D21a(),
    "F4": lambda p: _build_F4(),
    "G3": lambda p: _build_G3(),
    "psq": lambda p: _build_psq(*p),
    "p": lambda p: _build_p(*p),
    "W": lambda p: _build_W(*p),
    "S": lambda p: _build_S(*p),
    "Sprime": lambda p: _build_S(*p, prime=True),
    "H": lambda p: _build_H(*p),
}


def build_root_system(family, params=()) -> RootSystem:
    fam, par = normalize_family(family, params)
    try:
        return _BUILDERS[fam](par)
    except TypeError as exc:
        raise ParameterError(f"bad parameters {par} for family {fam}: {exc}") from exc


def osp_subfamily(rs: RootSystem) -> str:
    M = rs.params[0]
    if M == 1:
        return "osp1"
    if M == 2:
        return "osp2"
    return "osp_odd" if M % 2 else "osp_even"
