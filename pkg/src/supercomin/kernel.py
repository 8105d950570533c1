"""Exhaustive closed-subset enumeration: the hot kernel.

Subsets P of a root list must satisfy, per +-/- pair, "at least one in"
(three states: +only, -only, both) and, per unpaired root, in/out; closure
obligations (r in P and m in P force target roots in P) are propagated
during the search, which prunes almost all of the 3^pairs * 2^singles
state space.

Two interchangeable engines: a Cython core (``supercomin._kernel``) compiled
with ``python setup.py build_ext --inplace``, and this pure-Python fallback.
Selection happens at import; ``SUPERCOMIN_PURE=1`` forces the fallback.
``bench/bench_kernel.py`` compares the two.
"""

from __future__ import annotations

import os

try:  # pragma: no cover - exercised when the extension is built
    from . import _kernel as _compiled
except ImportError:  # pragma: no cover
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None
_FORCE_PURE = bool(os.environ.get("SUPERCOMIN_PURE"))


def engine_name() -> str:
    return "compiled" if (COMPILED_AVAILABLE and not _FORCE_PURE) else "pure"


def order_units(n, pairs, singles, rows):
    """Deterministic unit order, densest closure interaction first."""
    deg = [len(rows[i]) for i in range(n)]
    units = [(0, i, j) for (i, j) in pairs] + [(1, i, i) for i in singles]
    units.sort(key=lambda u: (-(deg[u[1]] + deg[u[2]]), u[1]))
    return units


def enumerate_closed(n, pairs, singles, rows, force_pure=False):
    """All subset masks satisfying covering and closure (including Delta)."""
    units = order_units(n, pairs, singles, rows)
    use_compiled = (
        _compiled is not None and not _FORCE_PURE and not force_pure and n <= 62
    )
    if use_compiled:
        kinds = [u[0] for u in units]
        lefts = [u[1] for u in units]
        rights = [u[2] for u in units]
        row_off, row_m, row_t = [0], [], []
        for r in range(n):
            for m, tmask in rows[r]:
                row_m.append(m)
                row_t.append(tmask)
            row_off.append(len(row_m))
        return _compiled.run(n, kinds, lefts, rights, row_off, row_m, row_t)
    return _enumerate_closed_py(n, units, rows)


def _enumerate_closed_py(n, units, rows):
    out = []
    nu = len(units)

    def add_root(r, in_mask, out_mask, req):
        m_in = in_mask | (1 << r)
        acc = 0
        for m, tmask in rows[r]:
            if (m_in >> m) & 1:
                acc |= tmask
        if acc & out_mask:
            return None, None
        return m_in, req | acc

    def rec(u, in_mask, out_mask, req):
        if u == nu:
            if not (req & ~in_mask):
                out.append(in_mask)
            return
        kind, i, j = units[u]
        if kind == 1:  # single root: in / out
            m_in, nreq = add_root(i, in_mask, out_mask, req)
            if m_in is not None:
                rec(u + 1, m_in, out_mask, nreq)
            if not (req >> i) & 1:
                rec(u + 1, in_mask, out_mask | (1 << i), req)
            return
        # pair (i, j = -i): i only / j only / both
        if not (req >> j) & 1:
            m_in, nreq = add_root(i, in_mask, out_mask | (1 << j), req)
            if m_in is not None:
                rec(u + 1, m_in, out_mask | (1 << j), nreq)
        if not (req >> i) & 1:
            m_in, nreq = add_root(j, in_mask, out_mask | (1 << i), req)
            if m_in is not None:
                rec(u + 1, m_in, out_mask | (1 << i), nreq)
        m_in, nreq = add_root(i, in_mask, out_mask, req)
        if m_in is not None:
            m_in, nreq = add_root(j, m_in, out_mask, nreq)
            if m_in is not None:
                rec(u + 1, m_in, out_mask, nreq)

    rec(0, 0, 0, 0)
    return out
