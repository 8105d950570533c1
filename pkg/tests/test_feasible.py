import random
from fractions import Fraction
from itertools import product

from supercomin.feasible import IncrementalFM, clear_denominators, feasible, feasible_witness


def brute_feasible(rows, dim, box=4):
    """Rational grid scan oracle: a witness in a small box, if any.

    Sound only as a positive oracle; used against systems whose solutions,
    when they exist, were scaled into the box by construction.
    """
    vals = [Fraction(k, 2) for k in range(-2 * box, 2 * box + 1)]
    for point in product(vals, repeat=dim):
        if all(sum(c * x for c, x in zip(r, point)) + r[dim] >= 0 for r in rows):
            return point
    return None


def random_rows(rng, dim, count):
    rows = []
    for _ in range(count):
        row = tuple(rng.randint(-3, 3) for _ in range(dim)) + (rng.randint(-2, 2),)
        rows.append(row)
    return rows


def test_fm_matches_grid_oracle():
    rng = random.Random(20240817)
    for _ in range(120):
        dim = rng.randint(1, 3)
        rows = random_rows(rng, dim, rng.randint(1, 6))
        got = feasible_witness(rows, dim)
        grid = brute_feasible(rows, dim)
        if grid is not None:
            assert got is not None
        if got is not None:
            assert all(sum(c * x for c, x in zip(r, got)) + r[dim] >= 0
                       for r in rows)


def test_infeasible_detected():
    # x >= 1 and -x >= 0
    assert not feasible([(1, -1), (-1, 0)], 1)
    assert feasible_witness([(1, -1), (-1, 0)], 1) is None
    # 0 >= 1 degenerate row
    assert not feasible([(0, -1)], 1)


def test_witness_extraction_bounds():
    # 1 <= x <= 2, y >= x, y <= 3
    rows = [(1, 0, -1), (-1, 0, 2), (-1, 1, 0), (0, -1, 3)]
    w = feasible_witness(rows, 2)
    assert w is not None and 1 <= w[0] <= 2 and w[1] >= w[0]


def test_incremental_matches_batch():
    rng = random.Random(7)
    for _ in range(80):
        dim = rng.randint(1, 4)
        rows = random_rows(rng, dim, rng.randint(1, 8))
        inc = IncrementalFM(dim)
        alive = True
        for r in rows:
            alive = inc.add(r)
        assert alive == feasible(rows, dim)


def test_incremental_clone_isolation():
    inc = IncrementalFM(1)
    inc.add((1, 0))        # x >= 0
    child = inc.clone()
    assert not child.add((-1, -1))  # x <= -1: dead
    assert inc.alive and inc.add((1, -1))  # parent unaffected


def test_clear_denominators():
    assert clear_denominators([Fraction(1, 2), Fraction(-3, 4)]) == [2, -3]
    assert clear_denominators([Fraction(0), Fraction(0)]) == [0, 0]
