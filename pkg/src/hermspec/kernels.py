"""Compiled inner loops for exhaustive sweeps over all orientations of one underlying graph.

Orientation codes follow :mod:`hermspec.orient` (digit 0 undirected, 1 forward, 2 backward;
first edge most significant). Characteristic polynomials are computed exactly in int64 by
Le Verrier's method: power sums tr(H^k) from Hermitian powers, then Newton's identities with
exact division. Callers check the magnitude bound before using these kernels.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

_EXP = np.array([0, 1, 3], dtype=np.int64)
# (re, im) of i**k
_UNIT_RE = np.array([1, 0, -1, 0], dtype=np.int64)
_UNIT_IM = np.array([0, 1, 0, -1], dtype=np.int64)


def int64_safe(n: int, max_degree: int) -> bool:
    """Whether power sums and Newton partial sums stay well inside int64."""
    if n == 0:
        return True
    d = max(max_degree, 1)
    pmax = n * d**n
    cmax = max(math.comb(n, k) * d**k for k in range(n + 1))
    return n * cmax * pmax < 2**62


@njit(cache=True)
def _decode(code, m, digits):
    for t in range(m - 1, -1, -1):
        digits[t] = code % 3
        code //= 3


@njit(cache=True)
def _charpoly(n, m, eu, ev, digits, P_re, P_im, p, out):
    """out[0..n] = coefficients of det(xI - H), highest degree first."""
    out[0] = 1
    if n == 0:
        return
    half = (n + 1) // 2
    for a in range(n):
        for b in range(n):
            P_re[1, a, b] = 0
            P_im[1, a, b] = 0
    for t in range(m):
        k = _EXP[digits[t]]
        u = eu[t]
        v = ev[t]
        P_re[1, u, v] = _UNIT_RE[k]
        P_im[1, u, v] = _UNIT_IM[k]
        P_re[1, v, u] = _UNIT_RE[k]
        P_im[1, v, u] = -_UNIT_IM[k]
    for j in range(2, half + 1):
        for a in range(n):
            for b in range(n):
                P_re[j, a, b] = 0
                P_im[j, a, b] = 0
        for t in range(m):
            k = _EXP[digits[t]]
            hr = _UNIT_RE[k]
            hi = _UNIT_IM[k]
            u = eu[t]
            v = ev[t]
            # row u gains h_uv * row v of the previous power; row v gains conj(h_uv) * row u
            for b in range(n):
                xr = P_re[j - 1, v, b]
                xi = P_im[j - 1, v, b]
                P_re[j, u, b] += hr * xr - hi * xi
                P_im[j, u, b] += hr * xi + hi * xr
                yr = P_re[j - 1, u, b]
                yi = P_im[j - 1, u, b]
                P_re[j, v, b] += hr * yr + hi * yi
                P_im[j, v, b] += hr * yi - hi * yr
    p[0] = n
    for k in range(1, n + 1):
        a = k // 2
        b = k - a
        s = 0
        if a == 0:
            s = 0  # tr(H) = 0
        else:
            # tr(H^a H^b) = sum_uw (H^a)_uw (H^b)_wu, both Hermitian
            for u in range(n):
                for w in range(n):
                    s += P_re[a, u, w] * P_re[b, u, w] + P_im[a, u, w] * P_im[b, u, w]
        p[k] = s
    for k in range(1, n + 1):
        s = 0
        for j in range(1, k + 1):
            s += out[k - j] * p[j]
        if s % k != 0:
            out[0] = 0  # flags a non-integral coefficient to the caller
            return
        out[k] = -(s // k)


@njit(cache=True)
def charpoly_table(n, eu, ev, start, stop):
    """Charpolys of orientation codes start..stop-1 of the graph with edges (eu[t], ev[t])."""
    m = eu.shape[0]
    half = max((n + 1) // 2, 1)
    P_re = np.zeros((half + 1, n, n), dtype=np.int64)
    P_im = np.zeros((half + 1, n, n), dtype=np.int64)
    p = np.zeros(n + 1, dtype=np.int64)
    digits = np.zeros(m, dtype=np.int64)
    out = np.zeros((stop - start, n + 1), dtype=np.int64)
    for code in range(start, stop):
        _decode(code, m, digits)
        _charpoly(n, m, eu, ev, digits, P_re, P_im, p, out[code - start])
    return out


@njit(cache=True)
def charpoly_rows(n, eu, ev, digit_rows):
    m = eu.shape[0]
    half = max((n + 1) // 2, 1)
    P_re = np.zeros((half + 1, n, n), dtype=np.int64)
    P_im = np.zeros((half + 1, n, n), dtype=np.int64)
    p = np.zeros(n + 1, dtype=np.int64)
    digits = np.zeros(m, dtype=np.int64)
    out = np.zeros((digit_rows.shape[0], n + 1), dtype=np.int64)
    for r in range(digit_rows.shape[0]):
        for t in range(m):
            digits[t] = digit_rows[r, t]
        _charpoly(n, m, eu, ev, digits, P_re, P_im, p, out[r])
    return out


@njit(cache=True)
def sachs_rows(n, cyc_ptr, cyc_edge, cyc_dir, set_ptr, set_cyc, set_coef, digit_rows):
    """Charpolys from the elementary-subgraph expansion, grouped by cycle set.

    Cycle j uses edges cyc_edge[cyc_ptr[j]:cyc_ptr[j+1]] with traversal signs cyc_dir. Cycle set
    s is set_cyc[set_ptr[s]:set_ptr[s+1]] with coefficient row set_coef[s] collecting the
    matchings of the remaining vertices. Each cycle contributes Re h(C) in {1, 0, -1}.
    """
    ncyc = cyc_ptr.shape[0] - 1
    nsets = set_ptr.shape[0] - 1
    rp = np.zeros(ncyc, dtype=np.int64)
    out = np.zeros((digit_rows.shape[0], n + 1), dtype=np.int64)
    for r in range(digit_rows.shape[0]):
        for j in range(ncyc):
            k = 0
            for q in range(cyc_ptr[j], cyc_ptr[j + 1]):
                k += cyc_dir[q] * _EXP[digit_rows[r, cyc_edge[q]]]
            rp[j] = _UNIT_RE[k % 4]
        for s in range(nsets):
            w = 1
            for q in range(set_ptr[s], set_ptr[s + 1]):
                w *= rp[set_cyc[q]]
                if w == 0:
                    break
            if w != 0:
                for i in range(n + 1):
                    out[r, i] += w * set_coef[s, i]
    return out


# check slots reported by exhaustive_sweep
EDGE_IDENTITY = 0
VERTEX_IDENTITY = 1
SACHS_AGREES = 2
SYMMETRY = 3
POSITIVE_EQUIV = 4
TRACE = 5
FROBENIUS = 6
N_CHECKS = 7


@njit(cache=True)
def _apply_digit(
    t, old, new, kexp, hsum, sub_code, rest, state,
    te_ptr, te_cyc, te_dir, jg_ptr, jg_grp, cyc_odd, ts_ptr, ts_set, ts_w, pw, pflip,
):
    """Move edge t from digit old to new, updating every quantity that depends on it."""
    dk = _EXP[new] - _EXP[old]
    for q in range(te_ptr[t], te_ptr[t + 1]):
        j = te_cyc[q]
        k0 = kexp[j]
        k1 = (k0 + te_dir[q] * dk) & 3
        kexp[j] = k1
        dre = _UNIT_RE[k1] - _UNIT_RE[k0]
        if dre != 0:
            for r in range(jg_ptr[j], jg_ptr[j + 1]):
                hsum[jg_grp[r]] += dre
        if cyc_odd[j]:
            state[0] += int((k1 & 1) == 0) - int((k0 & 1) == 0)  # real odd cycles
        state[1] += int(k1 != 0) - int(k0 != 0)  # cycles that are not positive
    for q in range(ts_ptr[t], ts_ptr[t + 1]):
        sub_code[ts_set[q]] += (new - old) * ts_w[q]
    for e in range(rest.shape[0]):
        w = pw[e, t]
        if w != 0:
            if pflip[e, t]:
                rest[e] += ((3 - new) % 3 - (3 - old) % 3) * w
            else:
                rest[e] += (new - old) * w


@njit(cache=True)
def exhaustive_sweep(
    n, eu, ev, start, stop,
    gme_which, pw, pflip, gme,  # G - e tables shared across isomorphic deletions
    sub_row0, ts_ptr, ts_set, ts_w, sub_table,  # induced-subgraph tables keyed by vertex bitmask
    cyc_odd, te_ptr, te_cyc, te_dir, jg_ptr, jg_grp,
    eg_ptr, vg_ptr, g_mask, g_len,  # cycles through each edge / vertex, grouped by vertex set
    set_ptr, set_cyc, set_coef,  # Sachs cycle sets
    phi_underlying,
    counts, first_fail,
):
    """Check every orientation code in [start, stop) of one underlying graph.

    Codes are visited in order and all derived state (cycle exponents, per-group sums of
    Re h(C), subset table rows, G - e table rows) is updated from the digits that change.
    gme[gme_which[e]] is a charpoly table of a relabelled G - e; pw[e, t] is the place value
    of edge t in that table's code (0 for t == e) and pflip[e, t] marks a reversed edge.
    """
    m = eu.shape[0]
    full = (1 << n) - 1
    half = max((n + 1) // 2, 1)
    P_re = np.zeros((half + 1, n, n), dtype=np.int64)
    P_im = np.zeros((half + 1, n, n), dtype=np.int64)
    p = np.zeros(n + 1, dtype=np.int64)
    digits = np.zeros(m, dtype=np.int64)
    phi = np.zeros(n + 1, dtype=np.int64)
    rhs = np.zeros(n + 1, dtype=np.int64)
    sachs = np.zeros(n + 1, dtype=np.int64)
    ncyc = cyc_odd.shape[0]
    nsets = set_ptr.shape[0] - 1
    kexp = np.zeros(ncyc, dtype=np.int64)
    hsum = np.zeros(g_mask.shape[0], dtype=np.int64)
    for j in range(ncyc):
        for r in range(jg_ptr[j], jg_ptr[j + 1]):
            hsum[jg_grp[r]] += 1
    sub_code = sub_row0.copy()
    rest = np.zeros(m, dtype=np.int64)
    state = np.zeros(2, dtype=np.int64)
    state[0] = cyc_odd.sum()
    # all-undirected start, then move to the first code
    _decode(start, m, digits)
    for t in range(m):
        if digits[t] != 0:
            _apply_digit(t, 0, digits[t], kexp, hsum, sub_code, rest, state,
                         te_ptr, te_cyc, te_dir, jg_ptr, jg_grp, cyc_odd, ts_ptr, ts_set, ts_w, pw, pflip)
    for code in range(start, stop):
        if code > start:
            t = m - 1
            while digits[t] == 2:
                digits[t] = 0
                _apply_digit(t, 2, 0, kexp, hsum, sub_code, rest, state,
                             te_ptr, te_cyc, te_dir, jg_ptr, jg_grp, cyc_odd, ts_ptr, ts_set, ts_w, pw, pflip)
                t -= 1
            digits[t] += 1
            _apply_digit(t, digits[t] - 1, digits[t], kexp, hsum, sub_code, rest, state,
                         te_ptr, te_cyc, te_dir, jg_ptr, jg_grp, cyc_odd, ts_ptr, ts_set, ts_w, pw, pflip)
        _charpoly(n, m, eu, ev, digits, P_re, P_im, p, phi)

        # edge deletion: c_i(D) = c_i(D-e) - c_{i-2}(D-u-v) - 2 sum_C h(C) c_{i-|C|}(D-C)
        for e in range(m):
            w = gme_which[e]
            r0 = rest[e]
            for i in range(n + 1):
                rhs[i] = gme[w, r0, i]
            uv = sub_code[full & ~((1 << eu[e]) | (1 << ev[e]))]
            for i in range(2, n + 1):
                rhs[i] -= sub_table[uv, i - 2]
            for g in range(eg_ptr[e], eg_ptr[e + 1]):
                h = hsum[g]
                if h != 0:
                    row = sub_code[full & ~g_mask[g]]
                    L = g_len[g]
                    for i in range(L, n + 1):
                        rhs[i] -= 2 * h * sub_table[row, i - L]
            ok = True
            for i in range(n + 1):
                if rhs[i] != phi[i]:
                    ok = False
            if not ok:
                if counts[EDGE_IDENTITY] == 0:
                    first_fail[EDGE_IDENTITY] = code
                counts[EDGE_IDENTITY] += 1

        # vertex deletion: c_i(D) = c_i(D-v) - sum_u c_{i-2}(D-u-v) - 2 sum_C h(C) c_{i-|C|}(D-C)
        for v in range(n):
            row = sub_code[full & ~(1 << v)]
            for i in range(n):
                rhs[i] = sub_table[row, i]
            rhs[n] = 0
            for t in range(m):
                if eu[t] == v or ev[t] == v:
                    row = sub_code[full & ~((1 << eu[t]) | (1 << ev[t]))]
                    for i in range(2, n + 1):
                        rhs[i] -= sub_table[row, i - 2]
            for g in range(vg_ptr[v], vg_ptr[v + 1]):
                h = hsum[g]
                if h != 0:
                    row = sub_code[full & ~g_mask[g]]
                    L = g_len[g]
                    for i in range(L, n + 1):
                        rhs[i] -= 2 * h * sub_table[row, i - L]
            ok = True
            for i in range(n + 1):
                if rhs[i] != phi[i]:
                    ok = False
            if not ok:
                if counts[VERTEX_IDENTITY] == 0:
                    first_fail[VERTEX_IDENTITY] = code
                counts[VERTEX_IDENTITY] += 1

        # Sachs expansion from the same cycle values
        for i in range(n + 1):
            sachs[i] = 0
        for s in range(nsets):
            w = 1
            for q in range(set_ptr[s], set_ptr[s + 1]):
                w *= _UNIT_RE[kexp[set_cyc[q]]]
                if w == 0:
                    break
            if w != 0:
                for i in range(n + 1):
                    sachs[i] += w * set_coef[s, i]
        ok = True
        for i in range(n + 1):
            if sachs[i] != phi[i]:
                ok = False
        if not ok:
            if counts[SACHS_AGREES] == 0:
                first_fail[SACHS_AGREES] = code
            counts[SACHS_AGREES] += 1

        if state[0] == 0:
            for i in range(1, n + 1, 2):
                if phi[i] != 0:
                    if counts[SYMMETRY] == 0:
                        first_fail[SYMMETRY] = code
                    counts[SYMMETRY] += 1
                    break
        if state[1] == 0:
            for i in range(n + 1):
                if phi[i] != phi_underlying[i]:
                    if counts[POSITIVE_EQUIV] == 0:
                        first_fail[POSITIVE_EQUIV] = code
                    counts[POSITIVE_EQUIV] += 1
                    break
        # sum of eigenvalues = -c1, sum of squares = c1^2 - 2 c2
        if n >= 1 and phi[1] != 0:
            if counts[TRACE] == 0:
                first_fail[TRACE] = code
            counts[TRACE] += 1
        c1 = phi[1] if n >= 1 else 0
        c2 = phi[2] if n >= 2 else 0
        if c1 * c1 - 2 * c2 != 2 * m:
            if counts[FROBENIUS] == 0:
                first_fail[FROBENIUS] = code
            counts[FROBENIUS] += 1
