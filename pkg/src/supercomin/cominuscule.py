"""Abelian-nilradical (cominuscule) verdicts for parabolic subsets.

A parabolic subset is cominuscule when some Levi decomposition has a
nilradical N+ with no forbidden pair.  The forbidden-pair rule depends on
the family:

* generic rule: a + b is a root (sums in the stored coordinates);
* psl(n|n): some lift-pair sum is a gl(n|n) root -- in particular the
  famous psl(3|3) pair (e1-d1, e2-d2) is allowed even though its quotient
  image is a root;
* S(n): a + b is a W(n) root (including the n removed ones);
* S'(n): the S(n) rule, or both roots of the shape -e_i.  The bracket
  oracle shows [g^{-e_i}, g^{-e_i}] != 0, so the pair clause here includes
  i = j; ``literal=True`` restores the i != j reading for comparison
  against the stated rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parabolic import RootSubset, LeviDecomposition, levi_decompositions
from .rootsys import RootSystem


def _is_minus_eps(rs: RootSystem, i: int) -> bool:
    w = rs.roots[i].weight
    return sum(w) == -1 and all(c in (0, -1) for c in w)


def pair_forbidden(rs: RootSystem, a: int, b: int, literal: bool = False) -> bool:
    """Whether roots a, b may never both lie in an abelian nilradical."""
    fam = rs.family
    if fam == "psl":
        return bool(rs.pair_targets(a, b))
    out = rs.ambient_sum(a, b)
    if fam in ("S", "Sprime"):
        if out.kind in ("in_delta", "ambient_only"):
            return True
        if fam == "Sprime" and _is_minus_eps(rs, a) and _is_minus_eps(rs, b):
            return not literal or a != b
        return False
    return out.kind == "in_delta"


def rule_tag(rs: RootSystem) -> str:
    return {
        "psl": "psl33_ambient", "S": "S_ambient", "Sprime": "Sprime_ambient",
    }.get(rs.family, "root_sum")


def nilradical_abelian(rs: RootSystem, nil_bits: int, literal: bool = False) -> bool:
    idx = [i for i in range(len(rs)) if (nil_bits >> i) & 1]
    for x, a in enumerate(idx):
        for b in idx[x:]:
            if pair_forbidden(rs, a, b, literal=literal):
                return False
    return True


@dataclass(frozen=True)
class CominusculeVerdict:
    is_cominuscule: bool
    witness: LeviDecomposition | None
    rule_used: str
    decompositions: tuple = ()
    abelian_flags: tuple = ()


def is_cominuscule(subset: RootSubset, lift_cap=22) -> CominusculeVerdict:
    """First Levi decomposition with an abelian nilradical, if any.

    Decompositions are scanned in deterministic lift order; all of them and
    their individual verdicts are retained, since the defining property is
    existential over decompositions.
    """
    rs = subset.rs
    decs = levi_decompositions(subset, lift_cap=lift_cap)
    flags = tuple(nilradical_abelian(rs, d.nilradical_bits) for d in decs)
    witness = None
    for d, ok in zip(decs, flags):
        if ok:
            witness = d
            break
    return CominusculeVerdict(witness is not None, witness, rule_tag(rs),
                              tuple(decs), flags)


def bracket_cominuscule(subset: RootSubset, rz, lift_cap=22) -> bool:
    """The same existential verdict, decided by the realized superbracket."""
    decs = levi_decompositions(subset, lift_cap=lift_cap)
    for d in decs:
        idx = [i for i in range(len(subset.rs)) if (d.nilradical_bits >> i) & 1]
        ok = True
        for x, a in enumerate(idx):
            for b in idx[x:]:
                if rz.bracket_nonzero(a, b):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def crosscheck_bracket(subset: RootSubset, rz=None, lift_cap=22) -> bool:
    """Does the root-level verdict agree with the bracket oracle on P?"""
    if rz is None:
        from .realize import realize_for

        rz = realize_for(subset.rs)
    rule = is_cominuscule(subset, lift_cap=lift_cap).is_cominuscule
    return rule == bracket_cominuscule(subset, rz, lift_cap=lift_cap)
