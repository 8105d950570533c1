"""Decomposition laws and restriction compatibility checks.

These are the directly assertable set statements attached to every Levi
decomposition (closure laws relating L and N+/-), the compatibility of
restriction to reductive subsystems, and Weyl invariance of verdicts.
"""

from __future__ import annotations

from . import weyl
from .cominuscule import is_cominuscule
from .parabolic import LeviDecomposition, RootSubset, parabolic_status, principality_witness
from .rootsys import RootSystem


def sums_laws_hold(dec: LeviDecomposition) -> bool:
    """The four closure laws over L and N+/- (N- = Delta minus P)."""
    rs = dec.subset.rs
    n = len(rs)
    P = dec.subset.bits
    L, Np = dec.levi_bits, dec.nilradical_bits
    Nm = ((1 << n) - 1) & ~P
    if L | Np != P or L & Np:
        return False

    def side(i):
        if (L >> i) & 1:
            return "L"
        return "N+" if (Np >> i) & 1 else "N-"

    for i in range(n):
        si = side(i)
        # (i) negation of a nilradical root lies in the opposite nilradical
        j = rs.neg[i]
        if j is not None and si != "L" and side(j) != ("N-" if si == "N+" else "N+"):
            return False
        for j2 in range(n):
            sj = side(j2)
            for t in rs.pair_targets(i, j2):
                st = side(t)
                if si == "L" and sj == "L" and st != "L":  # (iii)
                    return False
                if si == "L" and sj in ("N+", "N-") and st != sj:  # (ii)
                    return False
                if si == sj and si in ("N+", "N-") and st != si:  # (iv)
                    return False
    return True


def even_factor_index_sets(rs: RootSystem):
    """Reductive subsystems of the even part (or of its distinguished Levi),
    as root-index lists, keyed by a label."""
    fam = rs.family
    kinds = [k for k, _ in rs.basis]

    def support_kinds(w):
        return {kinds[i] for i, c in enumerate(w) if c != 0}

    factors = {}
    if fam in ("W", "S", "Sprime"):
        idx = [i for i, r in enumerate(rs.roots)
               if sorted(c for c in r.weight if c != 0) == [-1, 1]]
        return {"gl": idx}
    if fam == "H":
        idx = [i for i, r in enumerate(rs.roots)
               if sum(abs(c) for c in r.weight) <= 2]
        return {"so": idx}
    if fam == "psq":
        return {"sl": list(range(len(rs)))}
    if fam == "p":
        return {"sl": [i for i, r in enumerate(rs.roots) if r.even_dim]}
    if fam == "D21a":
        return {f"sl2_{k}": [i for i, r in enumerate(rs.roots)
                             if r.even_dim and support_kinds(r.weight) == {"g"}
                             and r.weight[k] != 0]
                for k in range(3)}
    for name, kind in (("e", "e"), ("d", "d"), ("g", "g")):
        idx = [i for i, r in enumerate(rs.roots)
               if r.even_dim and support_kinds(r.weight) == {kind}]
        if idx:
            factors[name] = idx
    return factors


def restriction_compatible(dec: LeviDecomposition, indices) -> bool:
    """Restriction law to a symmetric subsystem: P n Delta_a is the whole
    subsystem or parabolic in it, with (L n Delta_a, N+ n Delta_a) its
    (unique) Levi decomposition."""
    rs = dec.subset.rs
    mask = 0
    for i in indices:
        mask |= 1 << i
    Pa = dec.subset.bits & mask
    if Pa == mask:
        return True
    iset = set(indices)
    # covering inside the subsystem
    for i in indices:
        j = rs.neg[i]
        if j is None or j not in iset:
            raise ValueError("restriction target must be a symmetric subsystem")
        if not (Pa >> i) & 1 and not (Pa >> j) & 1:
            return False
    # closure inside the subsystem
    for i in indices:
        if not (Pa >> i) & 1:
            continue
        for j in indices:
            if not (Pa >> j) & 1:
                continue
            for t in rs.pair_targets(i, j):
                if t in iset and not (Pa >> t) & 1:
                    return False
    # the induced decomposition must be the symmetric one
    La = 0
    for i in indices:
        if (Pa >> i) & 1 and (Pa >> rs.neg[i]) & 1:
            La |= 1 << i
    return La == dec.levi_bits & mask and (Pa & ~La) == dec.nilradical_bits & mask


def weyl_invariance_holds(rs: RootSystem, bits: int, gens, lift_cap=22) -> bool:
    """Parabolicity, principality, and the cominuscule verdict are constant
    along the orbit of a subset under the given generators."""
    base = RootSubset(rs, bits)
    st0 = parabolic_status(base, lift_cap=lift_cap)
    com0 = prin0 = None
    if st0 == "parabolic":
        com0 = is_cominuscule(base, lift_cap=lift_cap).is_cominuscule
        prin0 = principality_witness(base) is not None
    for m in gens:
        img = RootSubset(rs, weyl.act(rs, m, bits))
        if parabolic_status(img, lift_cap=lift_cap) != st0:
            return False
        if st0 == "parabolic":
            if is_cominuscule(img, lift_cap=lift_cap).is_cominuscule != com0:
                return False
            if (principality_witness(img) is not None) != prin0:
                return False
    return True
