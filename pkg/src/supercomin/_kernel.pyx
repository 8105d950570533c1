# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled core of the exhaustive closed-subset enumeration.

Mirrors ``supercomin.kernel._enumerate_closed_py`` exactly, for root lists
of length <= 62 (masks fit in uint64).  Built with
``python setup.py build_ext --inplace``.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc


cdef struct Ctx:
    int n
    int nu
    int *ukind
    int *uleft
    int *uright
    int *row_off
    int *row_m
    uint64_t *row_t


cdef uint64_t _add_root(Ctx *ctx, int r, uint64_t in_mask, uint64_t out_mask,
                        uint64_t *req) noexcept:
    # returns updated in_mask, or 0 on conflict (0 is never a valid result
    # because r is always set in the returned mask)
    cdef uint64_t m_in = in_mask | (<uint64_t> 1 << r)
    cdef uint64_t acc = 0
    cdef int k, m
    for k in range(ctx.row_off[r], ctx.row_off[r + 1]):
        m = ctx.row_m[k]
        if (m_in >> m) & 1:
            acc |= ctx.row_t[k]
    if acc & out_mask:
        return 0
    req[0] = req[0] | acc
    return m_in


cdef void _rec(Ctx *ctx, int u, uint64_t in_mask, uint64_t out_mask,
               uint64_t req, list out):
    cdef uint64_t m_in, m_in2, nreq, nreq2
    cdef int kind, i, j
    if u == ctx.nu:
        if not (req & ~in_mask):
            out.append(in_mask)
        return
    kind = ctx.ukind[u]
    i = ctx.uleft[u]
    j = ctx.uright[u]
    if kind == 1:
        nreq = req
        m_in = _add_root(ctx, i, in_mask, out_mask, &nreq)
        if m_in:
            _rec(ctx, u + 1, m_in, out_mask, nreq, out)
        if not (req >> i) & 1:
            _rec(ctx, u + 1, in_mask, out_mask | (<uint64_t> 1 << i), req, out)
        return
    if not (req >> j) & 1:
        nreq = req
        m_in = _add_root(ctx, i, in_mask, out_mask | (<uint64_t> 1 << j), &nreq)
        if m_in:
            _rec(ctx, u + 1, m_in, out_mask | (<uint64_t> 1 << j), nreq, out)
    if not (req >> i) & 1:
        nreq = req
        m_in = _add_root(ctx, j, in_mask, out_mask | (<uint64_t> 1 << i), &nreq)
        if m_in:
            _rec(ctx, u + 1, m_in, out_mask | (<uint64_t> 1 << i), nreq, out)
    nreq = req
    m_in = _add_root(ctx, i, in_mask, out_mask, &nreq)
    if m_in:
        nreq2 = nreq
        m_in2 = _add_root(ctx, j, m_in, out_mask, &nreq2)
        if m_in2:
            _rec(ctx, u + 1, m_in2, out_mask, nreq2, out)


def run(int n, list kinds, list lefts, list rights,
        list row_off, list row_m, list row_t):
    if n > 62:
        raise ValueError("compiled kernel supports at most 62 roots")
    cdef Ctx ctx
    cdef int nu = len(kinds)
    cdef int nr = len(row_m)
    cdef int k
    ctx.n = n
    ctx.nu = nu
    ctx.ukind = <int *> malloc(nu * sizeof(int))
    ctx.uleft = <int *> malloc(nu * sizeof(int))
    ctx.uright = <int *> malloc(nu * sizeof(int))
    ctx.row_off = <int *> malloc((n + 1) * sizeof(int))
    ctx.row_m = <int *> malloc(max(nr, 1) * sizeof(int))
    ctx.row_t = <uint64_t *> malloc(max(nr, 1) * sizeof(uint64_t))
    try:
        for k in range(nu):
            ctx.ukind[k] = kinds[k]
            ctx.uleft[k] = lefts[k]
            ctx.uright[k] = rights[k]
        for k in range(n + 1):
            ctx.row_off[k] = row_off[k]
        for k in range(nr):
            ctx.row_m[k] = row_m[k]
            ctx.row_t[k] = row_t[k]
        out = []
        _rec(&ctx, 0, 0, 0, 0, out)
        return out
    finally:
        free(ctx.ukind)
        free(ctx.uleft)
        free(ctx.uright)
        free(ctx.row_off)
        free(ctx.row_m)
        free(ctx.row_t)
