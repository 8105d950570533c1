"""Parabolic subsets of root systems and their Levi decompositions.

A subset P of a symmetric root system is parabolic when Delta = P u (-P)
and P is closed under root addition.  For nonsymmetric Delta the defining
object is a lift: a parabolic subset of Delta u (-Delta) restricting to P.
(The source text for this construction once writes the intersection where
the union is meant; the union is used throughout, matching the displayed
decomposition laws.)  Levi components and nilradicals come from lifts:
L = Ptilde n (-Ptilde) n Delta and N+ = (Ptilde \\ -Ptilde) n Delta, so a
nonsymmetric P can decompose in several ways.

Subsets are bitmasks over root indices in canonical root order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from .feasible import clear_denominators, feasible_witness
from .rootsys import RootSystem


DEFAULT_SUBSET_CAP = 26
DEFAULT_LIFT_CAP = 22


class ImproperSubsetError(ValueError):
    """The whole root set is not a parabolic subset; callers must keep P proper."""


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RootSubset:
    rs: RootSystem
    bits: int

    def indices(self):
        return [i for i in range(len(self.rs)) if (self.bits >> i) & 1]

    def __contains__(self, i: int) -> bool:
        return bool((self.bits >> i) & 1)

    def __len__(self):
        return bin(self.bits).count("1")

    def root_strings(self):
        return [self.rs.root_str(i) for i in self.indices()]

    def __repr__(self):
        return f"RootSubset({{{', '.join(self.root_strings())}}})"


@dataclass(frozen=True)
class LeviDecomposition:
    subset: RootSubset
    levi_bits: int
    nilradical_bits: int
    lift_mask: int | None = None  # mask over the symmetrized weight list
    functional: tuple | None = None

    @property
    def levi(self) -> RootSubset:
        return RootSubset(self.subset.rs, self.levi_bits)

    @property
    def nilradical(self) -> RootSubset:
        return RootSubset(self.subset.rs, self.nilradical_bits)


# ---------------------------------------------------------------------------
# closure tables


def closure_rows(rs: RootSystem):
    """rows[r] = tuple of (m, target_mask): targets forced when r and m lie in P."""
    n = len(rs)
    rows = [[] for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            mask = 0
            for t in rs.pair_targets(a, b):
                mask |= 1 << t
            if mask:
                rows[a].append((b, mask))
                if a != b:
                    rows[b].append((a, mask))
    return [tuple(r) for r in rows]


def _closure_violation(rs, bits, rows=None) -> bool:
    rows = closure_rows(rs) if rows is None else rows
    for a in range(len(rs)):
        if not (bits >> a) & 1:
            continue
        for m, tmask in rows[a]:
            if m >= a and (bits >> m) & 1 and (tmask & ~bits):
                return True
    return False


def parabolic_status(subset: RootSubset, lift_cap=DEFAULT_LIFT_CAP, _rows=None) -> str:
    """One of "improper", "parabolic", "not_parabolic"."""
    rs, bits = subset.rs, subset.bits
    full = (1 << len(rs)) - 1
    if bits == full:
        return "improper"
    if rs.symmetric:
        for i in range(len(rs)):
            if not (bits >> i) & 1 and not (bits >> rs.neg[i]) & 1:
                return "not_parabolic"
        return "not_parabolic" if _closure_violation(rs, bits, _rows) else "parabolic"
    if _closure_violation(rs, bits, _rows):
        return "not_parabolic"  # Delta-closure is necessary for a lift to exist
    for _ in _iter_lifts(rs, bits, lift_cap=lift_cap):
        return "parabolic"
    return "not_parabolic"


def is_parabolic(subset: RootSubset, lift_cap=DEFAULT_LIFT_CAP) -> bool:
    status = parabolic_status(subset, lift_cap=lift_cap)
    if status == "improper":
        raise ImproperSubsetError("P = Delta is not a proper subset")
    return status == "parabolic"


# ---------------------------------------------------------------------------
# lifts


def _iter_lifts(rs: RootSystem, bits: int, lift_cap=DEFAULT_LIFT_CAP):
    """Yield masks over the symmetrized weight list of parabolic lifts of P.

    The Delta-part of every emitted mask equals ``bits``; only membership of
    the extra weights (-Delta) \\ Delta is searched, with covering forcing
    -g into the lift for every g in Delta \\ (-Delta) outside P.
    """
    sym = rs.symmetrized()
    nd = sym.n_delta
    total = len(sym)
    base = bits
    free = []
    for k in range(nd, total):
        g = sym.neg[k]  # the Delta root whose negation this extra weight is
        if not (bits >> g) & 1:
            base |= 1 << k
        else:
            free.append(k)
    if len(free) > lift_cap:
        raise CapExceeded(
            f"lift search needs {len(free)} free bits, cap is {lift_cap}")

    # sum table restricted to candidate members
    members = [k for k in range(total) if (base >> k) & 1] + free
    sums = {}
    for x in members:
        for y in members:
            if y < x:
                continue
            t = sym.sum_target(x, y)
            if t is not None:
                sums.setdefault(x, []).append((y, 1 << t))
                if x != y:
                    sums.setdefault(y, []).append((x, 1 << t))

    undecidable = ~(base | sum(1 << k for k in free))  # fixed-out part
    fixed_out = undecidable & ((1 << total) - 1)

    def closed_under(mask, new, req):
        acc = 0
        for m, tmask in sums.get(new, ()):
            if (mask >> m) & 1:
                acc |= tmask
        if acc & fixed_out:
            return None
        return req | acc

    # verify base closure, propagating forced free bits
    req = 0
    mask = 0
    ok = True
    for x in members[: bin(base).count("1")]:
        mask |= 1 << x
        req = closed_under(mask, x, req)
        if req is None:
            ok = False
            break
        req &= ~mask
    if ok:
        order = free

        def rec(pos, mask, req):
            if req & fixed_out:
                return
            if pos == len(order):
                if not (req & ~mask):
                    yield mask
                return
            k = order[pos]
            # exclude k
            if not (req >> k) & 1:
                yield from rec(pos + 1, mask, req)
            # include k
            nreq = closed_under(mask | (1 << k), k, req)
            if nreq is not None:
                yield from rec(pos + 1, mask | (1 << k), nreq)

        yield from rec(0, mask, req)


def levi_decompositions(subset: RootSubset, lift_cap=DEFAULT_LIFT_CAP):
    """All Levi decompositions of a parabolic subset, deduplicated.

    Symmetric systems have exactly one; otherwise one per distinct
    (L, N+) pair over all parabolic lifts, in deterministic lift order.
    """
    rs, bits = subset.rs, subset.bits
    if rs.symmetric:
        levi = 0
        for i in subset.indices():
            if (bits >> rs.neg[i]) & 1:
                levi |= 1 << i
        return [LeviDecomposition(subset, levi, bits & ~levi, lift_mask=bits)]
    sym = rs.symmetrized()
    out = []
    seen = set()
    for mask in _iter_lifts(rs, bits, lift_cap=lift_cap):
        levi = 0
        for i in subset.indices():
            if (mask >> sym.neg[i]) & 1:
                levi |= 1 << i
        key = levi
        if key not in seen:
            seen.add(key)
            out.append(LeviDecomposition(subset, levi, bits & ~levi, lift_mask=mask))
    out.sort(key=lambda d: d.levi_bits)
    return out


# ---------------------------------------------------------------------------
# principal parabolic subsets


def evaluate(lam, weight) -> Fraction:
    return sum((Fraction(c) * Fraction(x) for c, x in zip(lam, weight)), Fraction(0))


def principal_parabolic(rs: RootSystem, lam):
    """P(lam) with the induced Levi decomposition; rejects P = Delta."""
    if len(lam) != len(rs.basis):
        raise ValueError("functional has wrong dimension")
    levi = nil = 0
    for i, r in enumerate(rs.roots):
        v = evaluate(lam, r.weight)
        if v == 0:
            levi |= 1 << i
        elif v > 0:
            nil |= 1 << i
    bits = levi | nil
    if bits == (1 << len(rs)) - 1:
        raise ImproperSubsetError("functional induces P = Delta")
    subset = RootSubset(rs, bits)
    return subset, LeviDecomposition(subset, levi, nil, functional=tuple(lam))


def principality_witness(subset: RootSubset):
    """Integer functional with P = {lam >= 0}, lam <= -1 off P, or None.

    Strict negativity is scaled to <= -1, which loses nothing for the
    homogeneous system at hand.
    """
    rs, bits = subset.rs, subset.bits
    dim = len(rs.basis)
    rows = []
    for i, r in enumerate(rs.roots):
        denom = 1
        for c in r.weight:
            denom = denom * Fraction(c).denominator
        coeffs = [int(Fraction(c) * denom) for c in r.weight]
        if (bits >> i) & 1:
            rows.append(tuple(coeffs) + (0,))
        else:
            rows.append(tuple(-c for c in coeffs) + (-1,))
    for v in rs.functional_constraints():
        ints = tuple(int(c) for c in v)
        rows.append(ints + (0,))
        rows.append(tuple(-c for c in ints) + (0,))
    x = feasible_witness(rows, dim)
    if x is None:
        return None
    return tuple(clear_denominators(x))


# ---------------------------------------------------------------------------
# enumeration


def _exhaustive_masks(rs: RootSystem, subset_cap, lift_cap):
    n = len(rs)
    if n > subset_cap:
        raise CapExceeded(f"|Delta| = {n} exceeds the exhaustive cap {subset_cap}")
    rows = closure_rows(rs)
    pairs, singles, done = [], [], set()
    for i in range(n):
        if i in done:
            continue
        j = rs.neg[i]
        if j is None:
            singles.append(i)
            done.add(i)
        else:
            pairs.append((i, j))
            done.update((i, j))
    masks = kernel.enumerate_closed(n, pairs, singles, rows)
    full = (1 << n) - 1
    out = []
    for m in masks:
        if m == full:
            continue
        if rs.symmetric:
            out.append(m)
        else:
            try:
                next(_iter_lifts(rs, m, lift_cap=lift_cap))
            except StopIteration:
                continue
            out.append(m)
    out.sort()
    return out


def _face_masks(rs: RootSystem, prune_pair=None):
    """Values P(lam) over all faces of the root hyperplane arrangement.

    Sign vectors over the root list are extended one root at a time with
    Fourier-Motzkin pruning.  ``prune_pair(a, b) -> bool`` (optional) skips
    branches whose strictly-positive part already contains roots a, b that
    lie in the nilradical of every Levi decomposition and are forbidden as a
    nilradical pair; this keeps only faces that can still produce sets with
    an abelian nilradical, and is used for the largest runs.
    """
    from .feasible import IncrementalFM

    n = len(rs)
    dim = len(rs.basis)
    rowvec = []
    for r in rs.roots:
        denom = 1
        for c in r.weight:
            denom = denom * Fraction(c).denominator
        rowvec.append(tuple(int(Fraction(c) * denom) for c in r.weight))
    immovable = [rs.neg[i] is not None for i in range(n)]
    base_fm = IncrementalFM(dim)
    for v in rs.functional_constraints():
        ints = tuple(int(c) for c in v)
        base_fm.add(ints + (0,))
        base_fm.add(tuple(-c for c in ints) + (0,))
    found = set()

    def rec(i, fm, ge_mask, plus):
        if i == n:
            found.add(ge_mask)
            return
        vec = rowvec[i]
        # zero branch
        fz = fm.clone()
        if fz.add(vec + (0,)) and fz.add(tuple(-c for c in vec) + (0,)):
            rec(i + 1, fz, ge_mask | (1 << i), plus)
        # strictly positive branch
        allow = True
        if prune_pair is not None and immovable[i]:
            for b in plus:
                if immovable[b] and prune_pair(i, b):
                    allow = False
                    break
            if allow and prune_pair(i, i):
                allow = False
        if allow:
            fp = fm.clone()
            if fp.add(vec + (-1,)):
                rec(i + 1, fp, ge_mask | (1 << i), plus + [i])
        # strictly negative branch
        fn = fm.clone()
        if fn.add(tuple(-c for c in vec) + (-1,)):
            rec(i + 1, fn, ge_mask, plus)

    rec(0, base_fm, 0, [])
    full = (1 << n) - 1
    return sorted(m for m in found if m != full)


def enumerate_parabolics(rs: RootSystem, method="exhaustive",
                         subset_cap=DEFAULT_SUBSET_CAP, lift_cap=DEFAULT_LIFT_CAP,
                         prune_pair=None):
    """Stream of parabolic subsets in canonical bitmask order.

    ``exhaustive`` filters all proper subsets (3^pairs state search with
    closure propagation); ``principal`` enumerates hyperplane-arrangement
    faces and emits P(lam) per face, deduplicated.
    """
    if method == "exhaustive":
        masks = _exhaustive_masks(rs, subset_cap, lift_cap)
    elif method == "principal":
        masks = _face_masks(rs, prune_pair=prune_pair)
        if rs.family == "psl" and any(len(ls) > 1 for ls in rs.lifts):
            # lift-pair closure is stronger than closure of representative
            # sums, so face values need a parabolicity filter here
            rows = closure_rows(rs)
            masks = [m for m in masks
                     if parabolic_status(RootSubset(rs, m), _rows=rows) == "parabolic"]
    else:
        raise ValueError(f"unknown method {method!r}")
    for m in masks:
        yield RootSubset(rs, m)

