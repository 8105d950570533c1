import warnings
from fractions import Fraction

import pytest

from supercomin.parabolic import (CapExceeded, ImproperSubsetError, RootSubset,
                                  enumerate_parabolics, is_parabolic,
                                  levi_decompositions, parabolic_status,
                                  principal_parabolic, principality_witness)
from supercomin.rootsys import build_root_system, wadd, wneg

F = Fraction


def rsys(fam, par):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_root_system(fam, par)


def bits_of(rs, names):
    out = 0
    for s in names:
        out |= 1 << rs.parse_root(s)
    return out


# -- naive oracles -----------------------------------------------------------

def naive_parabolic_symmetric(rs, bits):
    """Covering + closure checked straight off the weights."""
    n = len(rs)
    if bits == (1 << n) - 1:
        return False
    for i in range(n):
        j = rs.index_of(wneg(rs.roots[i].weight))
        if not (bits >> i) & 1 and not (bits >> j) & 1:
            return False
    mem = [i for i in range(n) if (bits >> i) & 1]
    for a in mem:
        for b in mem:
            t = rs.index_of(wadd(rs.roots[a].weight, rs.roots[b].weight))
            if t is not None and not (bits >> t) & 1:
                return False
    return True


def naive_parabolic_lifted(rs, bits, _cache={}):
    """Brute lift search over all subsets of the extra weights."""
    sym = rs.symmetrized()
    nw, n = len(sym), len(rs)
    if bits == (1 << n) - 1:
        return False
    key = id(rs)
    if key not in _cache:
        sidx = {w: k for k, w in enumerate(sym.weights)}
        negs = [sidx[wneg(w)] for w in sym.weights]
        sums = [[sidx.get(wadd(x, y)) for y in sym.weights] for x in sym.weights]
        _cache[key] = (negs, sums)
    negs, sums = _cache[key]

    def lift_ok(mask):
        for k in range(nw):
            if not (mask >> k) & 1 and not (mask >> negs[k]) & 1:
                return False
        mem = [a for a in range(nw) if (mask >> a) & 1]
        for a in mem:
            row = sums[a]
            for b in mem:
                t = row[b]
                if t is not None and not (mask >> t) & 1:
                    return False
        return True

    for extra in range(1 << (nw - n)):
        if lift_ok(bits | (extra << n)):
            return True
    return False


@pytest.mark.parametrize("fam,par", [
    ("sl", (2, 1)), ("osp", (1, 2)), ("psq", (3,)), ("osp", (2, 2)),
])
def test_exhaustive_matches_naive_symmetric(fam, par):
    rs = rsys(fam, par)
    naive = sorted(b for b in range(1 << len(rs))
                   if naive_parabolic_symmetric(rs, b))
    lib = [p.bits for p in enumerate_parabolics(rs, "exhaustive")]
    assert naive == lib


@pytest.mark.parametrize("fam,par", [("p", (2,)), ("W", (2,)), ("S", (3,))])
def test_exhaustive_matches_naive_lifted(fam, par):
    rs = rsys(fam, par)
    if rs.symmetric:
        naive = sorted(b for b in range(1 << len(rs))
                       if naive_parabolic_symmetric(rs, b))
    else:
        naive = sorted(b for b in range(1 << len(rs))
                       if naive_parabolic_lifted(rs, b))
    lib = [p.bits for p in enumerate_parabolics(rs, "exhaustive")]
    assert naive == lib


# -- spec-level examples ------------------------------------------------------

def test_is_parabolic_examples():
    rs = rsys("sl", (2, 1))
    borel_up = bits_of(rs, ["e1-e2", "e2-e1", "e1-d1", "e2-d1"])
    assert is_parabolic(RootSubset(rs, borel_up))
    # not covering: both of +-(e1-d1) absent
    assert not is_parabolic(RootSubset(rs, bits_of(rs, ["e1-e2", "e2-d1"])))
    with pytest.raises(ImproperSubsetError):
        is_parabolic(RootSubset(rs, (1 << len(rs)) - 1))

    rs = rsys("p", (2,))
    psp0 = bits_of(rs, ["e1-e2", "e2-e1", "e1+e2", "2e1", "2e2"])
    assert is_parabolic(RootSubset(rs, psp0))


def test_nonuniqueness_example_p2():
    rs = rsys("p", (2,))
    P = RootSubset(rs, bits_of(rs, ["e1-e2", "e1+e2", "2e1", "2e2"]))
    decs = levi_decompositions(P)
    assert sorted(sorted(d.levi.root_strings()) for d in decs) == [[], ["2e2"]]
    w = principality_witness(P)
    assert w is not None


def test_symmetric_systems_have_one_decomposition():
    for fam, par in [("sl", (2, 1)), ("psq", (3,)), ("osp", (2, 2)), ("psl", (2,))]:
        rs = rsys(fam, par)
        for P in enumerate_parabolics(rs, "exhaustive"):
            assert len(levi_decompositions(P)) == 1


def test_principal_parabolic_examples():
    rs = rsys("W", (3,))
    lam = (F(0), F(-1), F(-1))
    P, dec = principal_parabolic(rs, lam)
    # this is the displayed P(1): L has +-e1 in it, N+ = {e_{I,j}: I<=[1], j>1}
    assert bits_of(rs, ["e1", "-e1"]) & dec.levi_bits == bits_of(rs, ["e1", "-e1"])
    nil = {rs.root_str(i) for i in dec.nilradical.indices()}
    assert nil == {"-e2", "-e3", "e1-e2", "e1-e3"}

    rs = rsys("p", (2,))
    P, dec = principal_parabolic(rs, (F(1), F(-1)))
    # P_sp(2)(1): L = {+-(e1+e2)}, N+ = {e1-e2, 2e1}
    assert {rs.root_str(i) for i in dec.nilradical.indices()} == {"e1-e2", "2e1"}
    assert {rs.root_str(i) for i in dec.levi.indices()} == {"e1+e2", "-e1-e2"}

    rs = rsys("sl", (2, 1))
    with pytest.raises(ImproperSubsetError):
        principal_parabolic(rs, (F(0), F(0), F(0)))


def test_witness_examples():
    rs = rsys("W", (3,))
    P, dec = principal_parabolic(rs, (F(0), F(-1), F(-1)))
    w = principality_witness(P)
    assert w is not None
    # (0,-1,-1) itself must be a valid witness for the displayed P(1)
    for i in range(len(rs)):
        v = sum(c * x for c, x in zip((0, -1, -1), rs.roots[i].weight))
        assert (v >= 0) == (i in P)

    rs = rsys("H", (5,))
    levi = [i for i, r in enumerate(rs.roots) if r.weight[0] == 0]
    nil = [i for i, r in enumerate(rs.roots) if r.weight[0] == 1]
    P = RootSubset(rs, sum(1 << i for i in levi + nil))
    w = principality_witness(P)
    assert w is not None
    for i in range(len(rs)):
        v = sum(c * x for c, x in zip((1, 0), rs.roots[i].weight))
        assert (v >= 0) == (i in P)


def test_lift_cap():
    rs = rsys("p", (3,))
    # P(0) keeps all three 2e_i, so three free lift bits
    P = RootSubset(rs, bits_of(rs, ["e1-e2", "-e1+e2", "e1-e3", "-e1+e3",
                                    "e2-e3", "-e2+e3", "e1+e2", "e1+e3",
                                    "e2+e3", "2e1", "2e2", "2e3"]))
    assert len(levi_decompositions(P)) == 1
    with pytest.raises(CapExceeded):
        levi_decompositions(P, lift_cap=1)


def test_exhaustive_cap():
    rs = rsys("W", (4,))
    with pytest.raises(CapExceeded):
        list(enumerate_parabolics(rs, "exhaustive"))


def test_canonical_order_and_determinism():
    rs = rsys("W", (3,))
    a = [p.bits for p in enumerate_parabolics(rs, "exhaustive")]
    b = [p.bits for p in enumerate_parabolics(rs, "exhaustive")]
    assert a == b == sorted(a)


def test_principal_stream_equals_exhaustive_for_kac_moody():
    for fam, par in [("sl", (2, 1)), ("osp", (3, 2)), ("osp", (2, 2))]:
        rs = rsys(fam, par)
        ex = [p.bits for p in enumerate_parabolics(rs, "exhaustive")]
        pr = [p.bits for p in enumerate_parabolics(rs, "principal")]
        assert ex == pr


def test_improper_status():
    rs = rsys("sl", (2, 1))
    assert parabolic_status(RootSubset(rs, (1 << len(rs)) - 1)) == "improper"


def test_principal_always_parabolic():
    # P(lam) passes the parabolicity test for any functional that leaves a
    # proper subset, across symmetric and lifted systems
    import itertools
    for fam, par in [("sl", (2, 1)), ("p", (2,)), ("W", (3,)), ("osp", (2, 2))]:
        rs = rsys(fam, par)
        d = len(rs.basis)
        vals = (F(-2), F(-1), F(0), F(1))
        for lam in itertools.product(vals, repeat=d):
            try:
                P, dec = principal_parabolic(rs, lam)
            except ImproperSubsetError:
                continue
            assert is_parabolic(P)
            assert dec.levi_bits | dec.nilradical_bits == P.bits
