# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as raylab._kernels_py."""

import numpy as np

BACKEND = "cython"


def cancel_adjacent(word):
    """Delete adjacent equal pairs until none remain (stack scan)."""
    cdef long long[::1] buf = np.asarray(word, dtype=np.int64).reshape(-1)
    cdef Py_ssize_t n = buf.shape[0]
    out_np = np.empty(n, dtype=np.int64)
    cdef long long[::1] out = out_np
    cdef Py_ssize_t top = 0, i
    cdef long long x
    for i in range(n):
        x = buf[i]
        if top > 0 and out[top - 1] == x:
            top -= 1
        else:
            out[top] = x
            top += 1
    return out_np[:top].tolist()


# ---------------------------------------------------------------------------
# Slot ordering (see the pure module for the geometry of the rule).


cdef class RankCtx:
    cdef long long[::1] text
    cdef long long[:, ::1] levels
    cdef long long[::1] itempos
    cdef Py_ssize_t n
    cdef int nlev


def prepare_rank_context(text, levels, itempos):
    cdef RankCtx ctx = RankCtx()
    ctx.text = np.ascontiguousarray(text, dtype=np.int64)
    lev = np.ascontiguousarray(np.vstack(levels), dtype=np.int64) if len(levels) \
        else np.zeros((1, len(text)), dtype=np.int64)
    ctx.levels = lev
    ctx.itempos = np.ascontiguousarray(np.asarray(itempos, dtype=np.int64))
    ctx.n = ctx.text.shape[0]
    ctx.nlev = ctx.levels.shape[0]
    return ctx


cdef inline Py_ssize_t _lcp(RankCtx ctx, Py_ssize_t i, Py_ssize_t j) noexcept:
    cdef Py_ssize_t length = 0, step
    cdef int lev
    for lev in range(ctx.nlev - 1, -1, -1):
        step = (<Py_ssize_t>1) << lev
        if i + step <= ctx.n and j + step <= ctx.n and ctx.levels[lev, i] == ctx.levels[lev, j]:
            i += step
            j += step
            length += step
    return length


cdef struct SideResult:
    Py_ssize_t lcp
    int result


cdef inline SideResult _side_eval(RankCtx ctx, Py_ssize_t o1, Py_ssize_t o2,
                                  bint north_side, long long pos_cur,
                                  long long circle_len) noexcept:
    cdef SideResult out
    cdef Py_ssize_t length = _lcp(ctx, o1, o2)
    cdef long long t1 = ctx.text[o1 + length]
    cdef long long t2 = ctx.text[o2 + length]
    cdef long long p1 = ctx.itempos[t1]
    cdef long long p2 = ctx.itempos[t2]
    out.lcp = length
    if p1 < 0 and p2 < 0:
        out.result = 0
        return out
    cdef long long cur
    if length == 0:
        cur = pos_cur
    else:
        cur = ctx.itempos[ctx.text[o1 + length - 1]]
    cdef bint h_north = north_side if (length & 1) == 0 else (not north_side)
    cdef long long k1, k2
    if h_north:
        k1 = (p1 - cur) % circle_len
        k2 = (p2 - cur) % circle_len
    else:
        k1 = (cur - p1) % circle_len
        k2 = (cur - p2) % circle_len
    if k1 < 0:
        k1 += circle_len
    if k2 < 0:
        k2 += circle_len
    cdef bint first1 = k1 < k2
    cdef bint higher1 = first1 if north_side else (not first1)
    out.result = 1 if higher1 else -1
    return out


cdef inline int _cmp_slots(RankCtx ctx, long long pos_cur, long long circle_len,
                           long long[::1] offn, long long[::1] offs,
                           long long[::1] tiearc, long long[::1] tieidx,
                           Py_ssize_t a, Py_ssize_t b) noexcept:
    cdef SideResult rn = _side_eval(ctx, offn[a], offn[b], True, pos_cur, circle_len)
    cdef SideResult rs = _side_eval(ctx, offs[a], offs[b], False, pos_cur, circle_len)
    cdef bint flip
    if rn.result == 0 and rs.result == 0:
        flip = (tieidx[a] & 1) == 1
        if (tiearc[a] > tiearc[b]) != flip:
            return 1
        return -1
    if rn.result == 0:
        return rs.result
    if rs.result == 0:
        return rn.result
    return rn.result if rn.lcp <= rs.lcp else rs.result


def sort_slots(RankCtx ctx, items, offn, offs, tiearc, tieidx, pos_cur, circle_len):
    cdef Py_ssize_t m = len(items)
    if m <= 1:
        return list(items)
    local_n = np.empty(m, dtype=np.int64)
    local_s = np.empty(m, dtype=np.int64)
    local_ta = np.empty(m, dtype=np.int64)
    local_ti = np.empty(m, dtype=np.int64)
    cdef long long[::1] ln = local_n, ls = local_s, lta = local_ta, lti = local_ti
    cdef Py_ssize_t t
    for t in range(m):
        c = items[t]
        ln[t] = offn[c]
        ls[t] = offs[c]
        lta[t] = tiearc[c]
        lti[t] = tieidx[c]
    perm_np = np.arange(m, dtype=np.int64)
    tmp_np = np.empty(m, dtype=np.int64)
    cdef long long[::1] perm = perm_np
    cdef long long[::1] tmp = tmp_np
    cdef long long pc = pos_cur
    cdef long long cl = circle_len
    # bottom-up stable merge sort with the custom comparator
    cdef Py_ssize_t width = 1, lo, mid, hi, i, j, k
    while width < m:
        lo = 0
        while lo < m:
            mid = lo + width
            if mid >= m:
                break
            hi = mid + width
            if hi > m:
                hi = m
            i = lo
            j = mid
            k = lo
            while i < mid and j < hi:
                if _cmp_slots(ctx, pc, cl, ln, ls, lta, lti,
                              <Py_ssize_t>perm[i], <Py_ssize_t>perm[j]) <= 0:
                    tmp[k] = perm[i]
                    i += 1
                else:
                    tmp[k] = perm[j]
                    j += 1
                k += 1
            while i < mid:
                tmp[k] = perm[i]
                i += 1
                k += 1
            while j < hi:
                tmp[k] = perm[j]
                j += 1
                k += 1
            for k in range(lo, hi):
                perm[k] = tmp[k]
            lo = hi
        width <<= 1
    return [items[perm[t]] for t in range(m)]


# ---------------------------------------------------------------------------
# Interleaving counts.


cdef inline void _fen_add(long long[::1] tree, Py_ssize_t n, Py_ssize_t i, long long v) noexcept:
    i += 1
    while i <= n:
        tree[i] += v
        i += i & (-i)


cdef inline long long _fen_prefix(long long[::1] tree, Py_ssize_t i) noexcept:
    cdef long long s = 0
    while i > 0:
        s += tree[i]
        i -= i & (-i)
    return s


def _sweep_pairs(x_intervals, y_intervals, bint cross_only):
    """Shared sweep: cross_only counts x-y pairs; otherwise x self-pairs."""
    cdef Py_ssize_t nx = len(x_intervals)
    cdef Py_ssize_t ny = len(y_intervals) if cross_only else 0
    if nx == 0 or (cross_only and ny == 0):
        return 0
    xl_np = np.empty(nx, dtype=np.int64); xr_np = np.empty(nx, dtype=np.int64)
    cdef long long[::1] xl = xl_np, xr = xr_np
    cdef Py_ssize_t i
    for i in range(nx):
        lo, hi = x_intervals[i]
        xl[i] = lo; xr[i] = hi
    cdef long long[::1] yl = None, yr = None
    if cross_only:
        yl_np = np.empty(ny, dtype=np.int64); yr_np = np.empty(ny, dtype=np.int64)
        yl = yl_np; yr = yr_np
        for i in range(ny):
            lo, hi = y_intervals[i]
            yl[i] = lo; yr[i] = hi
        coords = np.unique(np.concatenate([xl_np, xr_np, yl_np, yr_np]))
    else:
        coords = np.unique(np.concatenate([xl_np, xr_np]))
    cdef Py_ssize_t ncoord = coords.shape[0]
    xlr = np.searchsorted(coords, xl_np).astype(np.int64)
    xrr = np.searchsorted(coords, xr_np).astype(np.int64)
    cdef long long[::1] xl_rank = xlr, xr_rank = xrr
    cdef long long[::1] yl_rank = None, yr_rank = None
    if cross_only:
        ylr = np.searchsorted(coords, yl_np).astype(np.int64)
        yrr = np.searchsorted(coords, yr_np).astype(np.int64)
        yl_rank = ylr; yr_rank = yrr
    # event ordering: by closing coordinate for closes, opening for opens
    xclose = np.argsort(xrr, kind="stable").astype(np.int64)
    xopen = np.argsort(xlr, kind="stable").astype(np.int64)
    cdef long long[::1] xco = xclose, xoo = xopen
    cdef long long[::1] yco = None, yoo = None
    if cross_only:
        yclose = np.argsort(yrr, kind="stable").astype(np.int64)
        yopen = np.argsort(ylr, kind="stable").astype(np.int64)
        yco = yclose; yoo = yopen
    fx_np = np.zeros(ncoord + 1, dtype=np.int64)
    cdef long long[::1] fx = fx_np
    cdef long long[::1] fy = None
    if cross_only:
        fy_np = np.zeros(ncoord + 1, dtype=np.int64)
        fy = fy_np
    cdef long long total = 0
    cdef Py_ssize_t c, pxo = 0, pxc = 0, pyo = 0, pyc = 0, start_xc, start_yc, t
    cdef Py_ssize_t idx
    for c in range(ncoord):
        start_xc = pxc
        while pxc < nx and xr_rank[xco[pxc]] == c:
            _fen_add(fx, ncoord, <Py_ssize_t>xl_rank[xco[pxc]], -1)
            pxc += 1
        if cross_only:
            start_yc = pyc
            while pyc < ny and yr_rank[yco[pyc]] == c:
                _fen_add(fy, ncoord, <Py_ssize_t>yl_rank[yco[pyc]], -1)
                pyc += 1
            for t in range(start_xc, pxc):
                idx = <Py_ssize_t>xco[t]
                total += _fen_prefix(fy, <Py_ssize_t>xr_rank[idx]) - \
                         _fen_prefix(fy, <Py_ssize_t>xl_rank[idx] + 1)
            for t in range(start_yc, pyc):
                idx = <Py_ssize_t>yco[t]
                total += _fen_prefix(fx, <Py_ssize_t>yr_rank[idx]) - \
                         _fen_prefix(fx, <Py_ssize_t>yl_rank[idx] + 1)
        else:
            for t in range(start_xc, pxc):
                idx = <Py_ssize_t>xco[t]
                total += _fen_prefix(fx, <Py_ssize_t>xr_rank[idx]) - \
                         _fen_prefix(fx, <Py_ssize_t>xl_rank[idx] + 1)
        while pxo < nx and xl_rank[xoo[pxo]] == c:
            _fen_add(fx, ncoord, <Py_ssize_t>xl_rank[xoo[pxo]], 1)
            pxo += 1
        if cross_only:
            while pyo < ny and yl_rank[yoo[pyo]] == c:
                _fen_add(fy, ncoord, <Py_ssize_t>yl_rank[yoo[pyo]], 1)
                pyo += 1
    return int(total)


def count_cross_pairs(x_intervals, y_intervals):
    return _sweep_pairs(x_intervals, y_intervals, True)


def count_self_pairs(intervals):
    return _sweep_pairs(intervals, None, False)


# ---------------------------------------------------------------------------
# Half-twist rewrite.


def exchange_pass(word, wcls, start_cls, end_cls, start_hemi, emit):
    cdef Py_ssize_t n = len(word)
    cdef int ncls = len(emit[0])
    # flatten the emission table
    cdef int maxlen = 0
    for h in (0, 1):
        for u in range(ncls):
            for v in range(ncls):
                if len(emit[h][u][v]) > maxlen:
                    maxlen = len(emit[h][u][v])
    flat_np = np.zeros(2 * ncls * ncls * maxlen if maxlen else 1, dtype=np.int64)
    cnt_np = np.zeros(2 * ncls * ncls, dtype=np.int64)
    cdef long long[::1] flat = flat_np
    cdef long long[::1] cnt = cnt_np
    cdef Py_ssize_t h_, u_, v_, e_, base
    for h_ in range(2):
        for u_ in range(ncls):
            for v_ in range(ncls):
                seq = emit[h_][u_][v_]
                base = ((h_ * ncls + u_) * ncls + v_)
                cnt[base] = len(seq)
                for e_ in range(len(seq)):
                    flat[base * maxlen + e_] = seq[e_]
    word_np = np.asarray(word, dtype=np.int64).reshape(-1)
    wcls_np = np.asarray(wcls, dtype=np.int64).reshape(-1)
    cdef long long[::1] w = word_np
    cdef long long[::1] wc = wcls_np
    out_np = np.empty(n * (1 + maxlen) + maxlen + 1, dtype=np.int64)
    cdef long long[::1] out = out_np
    cdef Py_ssize_t top = 0, j
    cdef long long ucls = start_cls, vcls
    cdef int sh = start_hemi
    cdef Py_ssize_t hh, key, t
    for j in range(n + 1):
        vcls = wc[j] if j < n else end_cls
        hh = sh ^ (j & 1)
        key = ((hh * ncls + <Py_ssize_t>ucls) * ncls + <Py_ssize_t>vcls)
        for t in range(cnt[key]):
            out[top] = flat[key * maxlen + t]
            top += 1
        if j < n:
            out[top] = w[j]
            top += 1
        ucls = vcls
    return out_np[:top].tolist()
