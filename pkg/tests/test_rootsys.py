import warnings
from fractions import Fraction

import pytest

from supercomin.rootsys import (ParameterError, build_root_system, parse_weight,
                                weight_str, wneg)

F = Fraction


def rsys(fam, par):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_root_system(fam, par)


# closed-form counts, computed independently of the builders
def count_sl(m, n):
    return m * (m - 1) + n * (n - 1) + 2 * m * n


def count_osp(M, N):
    m, n = M // 2, N // 2
    c = 2 * m * (m - 1) + 2 * n * (n - 1) + 2 * n + 4 * m * n
    if M % 2:
        c += 2 * m + 2 * n
    return c


def count_W(n):
    return n * 2 ** (n - 1) + 2 ** n - 2


def count_S(n):
    return n * 2 ** (n - 1) + 2 ** n - n - 2


@pytest.mark.parametrize("fam,par,count", [
    ("sl", (2, 1), 6),
    ("sl", (3, 2), count_sl(3, 2)),
    ("psl", (2,), 8),
    ("psl", (3,), 30),
    ("osp", (3, 2), count_osp(3, 2)),
    ("osp", (5, 2), count_osp(5, 2)),
    ("osp", (1, 4), count_osp(1, 4)),
    ("osp", (6, 2), 26),
    ("D21a", (), 14),
    ("F4", (), 36),
    ("G3", (), 28),
    ("psq", (4,), 12),
    ("p", (3,), 2 * 9 - 3),
    ("W", (3,), count_W(3)),
    ("W", (4,), count_W(4)),
    ("S", (3,), count_S(3)),
    ("S", (4,), count_S(4)),
    ("Sprime", (4,), count_S(4)),
    ("H", (5,), 3 ** 2 - 1),
    ("H", (6,), 3 ** 3 - 1),
])
def test_root_counts(fam, par, count):
    assert len(rsys(fam, par)) == count


def test_symmetry_flags():
    # basic classical families are symmetric; the strange/Cartan series are
    # not, except H(n) and the degenerate W(2) ~ sl(2|1)
    for fam, par in [("sl", (2, 1)), ("psl", (2,)), ("osp", (4, 2)),
                     ("D21a", ()), ("F4", ()), ("G3", ()), ("psq", (3,)),
                     ("H", (5,)), ("H", (6,)), ("W", (2,))]:
        assert rsys(fam, par).symmetric, fam
    for fam, par in [("p", (2,)), ("p", (3,)), ("W", (3,)), ("W", (4,)),
                     ("S", (3,)), ("S", (4,)), ("Sprime", (4,))]:
        assert not rsys(fam, par).symmetric, fam


def test_even_odd_disjoint_with_known_exceptions():
    # psq has Delta_even == Delta_odd; so does H(n) for odd n, whose root
    # spaces mix parities.  Everywhere else the parts are disjoint.
    for fam, par, disjoint in [
        ("sl", (2, 1), True), ("osp", (4, 2), True), ("W", (3,), True),
        ("S", (4,), True), ("H", (6,), True),
        ("psq", (3,), False), ("H", (5,), False),
    ]:
        rs = rsys(fam, par)
        both = [i for i, r in enumerate(rs.roots) if r.even_dim and r.odd_dim]
        if disjoint:
            assert not both, fam
        else:
            assert len(both) == len(rs), fam


def test_w3_examples():
    rs = rsys("W", (3,))
    eIj = [r for r in rs.roots if min(r.weight) == -1]
    eI = [r for r in rs.roots if min(r.weight) >= 0]
    assert len(eIj) == 12 and len(eI) == 6
    # -e_{1,2} is not a root: the system is not symmetric
    assert rs.index_of((F(-1), F(-1), F(0))) is None
    assert rs.dim_root_spaces() == 21  # plus 3 Cartan = 24 = dim W(3)


def test_sl21_and_osp12_examples():
    rs = rsys("sl", (2, 1))
    expect = {"e1-e2", "-e1+e2", "e1-d1", "-e1+d1", "e2-d1", "-e2+d1"}
    assert {rs.root_str(i) for i in range(len(rs))} == expect
    # the parser accepts either term order
    assert rs.parse_root("d1-e1") == rs.parse_root("-e1+d1")
    rs = rsys("osp", (1, 2))
    assert {rs.root_str(i) for i in range(len(rs))} == {"2d1", "-2d1", "d1", "-d1"}
    assert rs.symmetric


def test_p2_examples():
    rs = rsys("p", (2,))
    names = {rs.root_str(i) for i in range(len(rs))}
    assert names == {"e1-e2", "-e1+e2", "e1+e2", "-e1-e2", "2e1", "2e2"}
    sym = rs.symmetrized()
    assert len(sym) == 8 and sum(1 for k in sym.in_delta if k is not None) == 6


def test_ambient_sum_examples():
    rs = rsys("psl", (3,))
    a, b = rs.parse_root("e1-d1"), rs.parse_root("e2-d2")
    out = rs.ambient_sum(a, b)
    assert out.kind == "not_root"
    assert rs.projected_sum_in_delta(a, b)  # equals d3-e3 after projection
    assert not rs.projected_sum_in_delta(rs.parse_root("e1-d1"),
                                         rs.parse_root("e1-d2"))

    rs = rsys("sl", (2, 1))
    out = rs.ambient_sum(rs.parse_root("e1-e2"), rs.parse_root("e2-d1"))
    assert out.kind == "in_delta" and rs.root_str(out.index) == "e1-d1"

    rs = rsys("S", (3,))
    out = rs.ambient_sum(rs.parse_root("-e1"), rs.parse_root("-e2"))
    assert out.kind == "not_root"
    out = rs.ambient_sum(rs.parse_root("e2"), rs.parse_root("e3"))
    assert out.kind == "ambient_only"  # e2+e3 is a W(3) root, removed in S(3)


def test_psl22_quotient_example():
    rs = rsys("psl", (2,))
    # e1-d1 and e2-d2 lift to the same class; psl(2|2) carries (0|2) spaces
    k = rs._ambient_class[(F(1), F(0), F(-1), F(0))]
    assert k == rs._ambient_class[(F(0), F(-1), F(0), F(1))]
    assert rs.roots[k].odd_dim == 2
    assert rs.parse_root("e1-e2") != k
    a = rs.parse_root("e1-e2")
    assert rs.projected_sum_in_delta(a, k) in (True, False)


def test_ambient_sum_commutative():
    for fam, par in [("sl", (2, 1)), ("S", (3,)), ("psl", (2,)), ("p", (3,))]:
        rs = rsys(fam, par)
        for a in range(len(rs)):
            for b in range(a, len(rs)):
                assert rs.ambient_sum(a, b) == rs.ambient_sum(b, a)
                assert rs.pair_targets(a, b) == rs.pair_targets(b, a)


def test_serialization_roundtrip():
    for fam, par in [("F4", ()), ("G3", ()), ("D21a", ()), ("W", (3,)),
                     ("psl", (2,)), ("osp", (5, 2))]:
        rs = rsys(fam, par)
        for i in range(len(rs)):
            s = rs.root_str(i)
            assert rs.parse_root(s) == i
    rs = rsys("F4", ())
    w = parse_weight("1/2(e1+e2+e3-g1)", rs.basis)
    assert weight_str(w, rs.basis) == "1/2(e1+e2+e3-g1)"
    assert weight_str(wneg(w), rs.basis) == "1/2(-e1-e2-e3+g1)"


def test_parameter_errors():
    for fam, par in [("sl", (2, 2)), ("sl", (0, 1)), ("psq", (2,)),
                     ("H", (4,)), ("Sprime", (5,)), ("S", (2,)),
                     ("osp", (4, 3)), ("W", (1,)), ("nosuch", (1,))]:
        with pytest.raises(ParameterError):
            build_root_system(fam, par)


def test_p2_warns():
    with pytest.warns(UserWarning):
        build_root_system("p", (2,))


def test_g3_elimination():
    rs = rsys("G3", ())
    # eps1 - eps3 = 2 eps1 + eps2 in the eliminated basis (eps3 = -eps1-eps2)
    assert rs.index_of((F(2), F(1), F(0))) is not None
    # eps3 itself and -eps3 = eps1+eps2
    assert rs.index_of((F(-1), F(-1), F(0))) is not None
    assert rs.index_of((F(1), F(1), F(0))) is not None
    # half-gamma odd roots
    assert rs.index_of((F(0), F(0), F(1, 2))) is not None
