"""Compiled brute-force search for resonant weights.

The search walks F^n coordinate by coordinate in a fixed order.  Each row
of the multiplication matrix only involves the coordinates of one line of
the matroid, so it is fixed as soon as the last of those coordinates has
been assigned; rows are folded into an echelon basis as they become
available.  Rank never decreases when rows are added, so a prefix whose
partial rank already exceeds ``n - 1 - kmin`` is cut off.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def resonance_search(n, q, add, mul, neg, inv, order, row_ptr, term_col, term_lam, term_coef,
                     depth_ptr, depth_rows, thresh, out_pts, out_dim):
    lam = np.zeros(n, dtype=np.int64)
    ech = np.zeros((n + 1, n, n), dtype=np.int64)
    piv = np.zeros((n + 1, n), dtype=np.int64)
    rk = np.zeros(n + 1, dtype=np.int64)
    nz = np.zeros(n + 1, dtype=np.bool_)
    val = np.full(n, -1, dtype=np.int64)
    row = np.zeros(n, dtype=np.int64)
    count = 0
    d = 0
    while d >= 0:
        val[d] += 1
        maxv = q if nz[d] else 2
        if val[d] >= maxv:
            lam[order[d]] = 0
            d -= 1
            continue
        v = val[d]
        if d == n - 1 and not nz[d] and v == 0:
            continue
        lam[order[d]] = v
        r = rk[d]
        for t in range(r):
            piv[d + 1, t] = piv[d, t]
            for c in range(n):
                ech[d + 1, t, c] = ech[d, t, c]
        pruned = False
        for k in range(depth_ptr[d], depth_ptr[d + 1]):
            rr = depth_rows[k]
            for c in range(n):
                row[c] = 0
            for s in range(row_ptr[rr], row_ptr[rr + 1]):
                x = lam[term_lam[s]]
                if x != 0:
                    c = term_col[s]
                    row[c] = add[row[c], mul[term_coef[s], x]]
            for t in range(r):
                a = row[piv[d + 1, t]]
                if a != 0:
                    na = neg[a]
                    for c in range(n):
                        b = ech[d + 1, t, c]
                        if b != 0:
                            row[c] = add[row[c], mul[na, b]]
            lead = -1
            for c in range(n):
                if row[c] != 0:
                    lead = c
                    break
            if lead < 0:
                continue
            s_inv = inv[row[lead]]
            for c in range(n):
                ech[d + 1, r, c] = mul[s_inv, row[c]]
            piv[d + 1, r] = lead
            r += 1
            if r > thresh:
                pruned = True
                break
        rk[d + 1] = r
        if pruned:
            continue
        if d == n - 1:
            if count < out_pts.shape[0]:
                for c in range(n):
                    out_pts[count, c] = lam[c]
                out_dim[count] = n - r
            count += 1
            continue
        nz[d + 1] = nz[d] or v != 0
        d += 1
        val[d] = -1
    return count
