"""Compiled spiral-search kernel.

A line-for-line port of the journaled depth-first search in
:mod:`pentacage.generate` to flat integer arrays under numba, close enough
that the two backends can be diffed against each other in tests.  The
kernel only reports canonical pentagon-position tuples; callers re-wind
and validate every reported spiral through the ordinary Python path.
"""

from __future__ import annotations

import numpy as np
from numba import njit

PENT = 5
HEX = 6

# journal opcodes
_CUR, _NXT, _PRV, _PRE, _POST, _CORE, _HEAD, _PLACED, _ACCT, _DEG = range(10)


@njit(cache=True, nogil=True, inline="always")
def _jpush(jk, ji, jv, jlen, kind, idx, val):
    jk[jlen] = kind
    ji[jlen] = idx
    jv[jlen] = val
    return jlen + 1


@njit(cache=True, nogil=True)
def _rollback(jk, ji, jv, jlen, mark, cur, nxt, prv, pre_cnt, post_cnt, core_cnt,
              deg, head, placed, sum_deg, n_conn):
    """Undo journal entries down to ``mark``; returns the displaced scalars."""
    while jlen > mark:
        jlen -= 1
        kind = jk[jlen]
        idx = ji[jlen]
        val = jv[jlen]
        if kind == _CUR:
            cur[idx] = val
        elif kind == _NXT:
            nxt[idx] = val
        elif kind == _PRV:
            prv[idx] = val
        elif kind == _PRE:
            pre_cnt[idx] -= 1
        elif kind == _POST:
            post_cnt[idx] -= 1
        elif kind == _CORE:
            core_cnt[idx] = 0
        elif kind == _HEAD:
            head = idx
        elif kind == _PLACED:
            placed = idx
        elif kind == _ACCT:
            sum_deg = idx
            n_conn = val
        else:
            deg[idx] = val
    return jlen, head, placed, sum_deg, n_conn


@njit(cache=True, nogil=True, inline="always")
def _is_neighbour(adj, adj_deg, x, y):
    for i in range(adj_deg[x]):
        if adj[x, i] == y:
            return True
    return False


@njit(cache=True, nogil=True)
def _unwind_one(f, adj, adj_deg, f0, f1, sigma, ref,
                cur, nxt, prv, placedf, pdeg, touched):
    """Replay one spiral start on the assembled dual; True when it completes
    a spiral lexicographically smaller than ``ref``.  Scratch arrays arrive
    zeroed and are re-zeroed (via the touched list) before returning."""
    ntouch = 0
    improving = False
    npos = 0
    placed = 0
    head = -1
    h = -1
    t = -1
    ok = True
    for step in range(f):
        if step == 0:
            x = f0
        elif step == 1:
            x = f1
        else:
            d_h = adj_deg[h]
            ih = -1
            for i in range(d_h):
                if adj[h, i] == t:
                    ih = i
                    break
            x = adj[h, (ih + sigma + d_h) % d_h]
            if placedf[x] == 1:
                ok = False
                break
        d = adj_deg[x]
        final = step == f - 1
        cur[x] = 0
        touched[ntouch] = x
        ntouch += 1
        # ---- rim placement, verifying each seam edge against the host ----
        if placed == 0:
            nxt[x] = x
            prv[x] = x
            head = x
            placed = 1
        elif final:
            hh = head
            rim_len = 1
            y = nxt[hh]
            while y != hh:
                rim_len += 1
                if rim_len > d:
                    break
                y = nxt[y]
            if rim_len != d:
                ok = False
                break
            y = hh
            for _ in range(d):
                if not _is_neighbour(adj, adj_deg, x, y):
                    ok = False
                    break
                cur[y] += 1
                cur[x] += 1
                if cur[y] != adj_deg[y]:
                    ok = False
                    break
                y = nxt[y]
            if not ok:
                break
            placed += 1
        elif placed == 1:
            hh = head
            if not _is_neighbour(adj, adj_deg, x, hh):
                ok = False
                break
            cur[hh] += 1
            cur[x] += 1
            nxt[hh] = x
            prv[hh] = x
            nxt[x] = hh
            prv[x] = hh
            head = x
            placed = 2
        else:
            hh = head
            tt = nxt[hh]
            if hh == tt:
                ok = False
                break
            if not _is_neighbour(adj, adj_deg, x, hh):
                ok = False
                break
            cur[hh] += 1
            cur[x] += 1
            if not _is_neighbour(adj, adj_deg, x, tt):
                ok = False
                break
            cur[tt] += 1
            cur[x] += 1
            have_h = True
            have_t = True
            while True:
                if have_t and cur[tt] == adj_deg[tt]:
                    nxt_t = nxt[tt]
                    p_ = prv[tt]
                    nxt[p_] = nxt_t
                    prv[nxt_t] = p_
                    if nxt_t == tt or (have_h and nxt_t == hh):
                        have_t = False
                    else:
                        if cur[x] >= d:
                            ok = False
                            break
                        tt = nxt_t
                        if not _is_neighbour(adj, adj_deg, x, tt):
                            ok = False
                            break
                        cur[tt] += 1
                        cur[x] += 1
                    continue
                if have_h and cur[hh] == adj_deg[hh]:
                    prv_h = prv[hh]
                    q_ = nxt[hh]
                    nxt[prv_h] = q_
                    prv[q_] = prv_h
                    if prv_h == hh or (have_t and prv_h == tt):
                        have_h = False
                    else:
                        if cur[x] >= d:
                            ok = False
                            break
                        hh = prv_h
                        if not _is_neighbour(adj, adj_deg, x, hh):
                            ok = False
                            break
                        cur[hh] += 1
                        cur[x] += 1
                    continue
                break
            if not ok:
                break
            if cur[x] >= d:
                ok = False
                break
            if not have_h and not have_t:
                nxt[x] = x
                prv[x] = x
            elif not have_h:
                nxt[tt] = x
                prv[tt] = x
                nxt[x] = tt
                prv[x] = tt
            elif not have_t:
                nxt[hh] = x
                prv[hh] = x
                nxt[x] = hh
                prv[x] = hh
            else:
                nxt[hh] = x
                prv[x] = hh
                nxt[x] = tt
                prv[tt] = x
            head = x
            placed += 1
        # ---- the seam must account for every already-placed neighbour ----
        if step >= 1 and cur[x] != pdeg[x]:
            ok = False
            break
        # ---- mark placed and compare the position stream against ref -----
        placedf[x] = 1
        for i in range(adj_deg[x]):
            z = adj[x, i]
            pdeg[z] += 1
            touched[ntouch] = z
            ntouch += 1
        pos = placed  # 1-based spiral position of x
        if d == PENT:
            if not improving:
                if pos < ref[npos]:
                    improving = True
                elif pos > ref[npos]:
                    ok = False
                    break
                elif npos == 11:
                    ok = False
                    break
            npos += 1
        else:
            if not improving and npos < 12 and pos >= ref[npos]:
                ok = False
                break
        if not final:
            if step >= 1:
                h = x
                t = nxt[x]
            if step == 1:
                h = f1
                t = f0
    result = ok and npos == 12 and improving
    for i in range(ntouch):
        v = touched[i]
        cur[v] = 0
        placedf[v] = 0
        pdeg[v] = 0
    return result


@njit(cache=True, nogil=True)
def _leaf_canonical(f, adj, adj_deg, ref, cur, nxt, prv, placedf, pdeg, touched):
    for phase in (PENT, HEX):
        for f0 in range(f):
            if adj_deg[f0] != phase:
                continue
            for i in range(adj_deg[f0]):
                f1 = adj[f0, i]
                for sigma in (1, -1):
                    if _unwind_one(f, adj, adj_deg, f0, f1, sigma, ref,
                                   cur, nxt, prv, placedf, pdeg, touched):
                        return False
    return True


@njit(cache=True, nogil=True)
def sweep(f, prefix, bmin):
    """Depth-first search over all face spirals on ``f`` faces.

    ``prefix`` pins the leading face sizes (empty = search everything);
    ``bmin`` is the [pentagons][hexagons] minimum-boundary table.  Returns
    an (isomers, 12) array of canonical pentagon positions, in order.
    """
    deg = np.zeros(f, np.int32)
    cur = np.zeros(f, np.int32)
    nxt = np.zeros(f, np.int32)
    prv = np.zeros(f, np.int32)
    pre = np.zeros((f, 8), np.int32)
    pre_cnt = np.zeros(f, np.int32)
    core = np.zeros((f, 8), np.int32)
    core_cnt = np.zeros(f, np.int32)
    post = np.zeros((f, 8), np.int32)
    post_cnt = np.zeros(f, np.int32)
    head = -1
    placed = 0
    sum_deg = 0
    n_conn = 0

    jcap = 96 * f + 64
    jk = np.zeros(jcap, np.int32)
    ji = np.zeros(jcap, np.int32)
    jv = np.zeros(jcap, np.int32)
    jlen = 0

    branch = np.zeros(f, np.int32)
    fmark = np.zeros(f, np.int32)
    fpents = np.zeros(f + 1, np.int32)
    chosen = np.zeros(f, np.int32)
    pos = np.zeros(12, np.int32)
    npos = 0

    adj = np.zeros((f, 8), np.int32)
    s_cur = np.zeros(f, np.int32)
    s_nxt = np.zeros(f, np.int32)
    s_prv = np.zeros(f, np.int32)
    s_placed = np.zeros(f, np.int32)
    s_pdeg = np.zeros(f, np.int32)
    touched = np.zeros(24 * f + 24, np.int32)

    cap_out = 256
    out = np.zeros((cap_out, 12), np.int32)
    nout = 0

    plen = len(prefix)
    t = 0
    fpents[0] = 12
    branch[0] = 0
    while t >= 0:
        d = 0
        while branch[t] < 2:
            b = branch[t]
            branch[t] += 1
            cand = PENT if b == 0 else HEX
            if t < plen and cand != prefix[t]:
                continue
            if cand == PENT:
                if fpents[t] == 0:
                    continue
            elif f - t <= fpents[t]:
                continue
            d = cand
            break
        if d == 0:
            t -= 1
            if t >= 0:
                jlen, head, placed, sum_deg, n_conn = _rollback(
                    jk, ji, jv, jlen, fmark[t], cur, nxt, prv, pre_cnt,
                    post_cnt, core_cnt, deg, head, placed, sum_deg, n_conn)
                if chosen[t] == PENT:
                    npos -= 1
            continue

        mark = jlen
        fmark[t] = mark
        chosen[t] = d
        final = t == f - 1
        okp = True
        jlen = _jpush(jk, ji, jv, jlen, _ACCT, sum_deg, n_conn)
        sum_deg += d
        jlen = _jpush(jk, ji, jv, jlen, _DEG, t, deg[t])
        deg[t] = d
        jlen = _jpush(jk, ji, jv, jlen, _CUR, t, cur[t])
        cur[t] = 0
        jlen = _jpush(jk, ji, jv, jlen, _PLACED, placed, 0)
        if placed == 0:
            jlen = _jpush(jk, ji, jv, jlen, _NXT, t, nxt[t])
            jlen = _jpush(jk, ji, jv, jlen, _PRV, t, prv[t])
            nxt[t] = t
            prv[t] = t
            jlen = _jpush(jk, ji, jv, jlen, _HEAD, head, 0)
            head = t
            placed = 1
        elif final:
            hh = head
            rim_len = 1
            y = nxt[hh]
            while y != hh:
                rim_len += 1
                if rim_len > d:
                    break
                y = nxt[y]
            if rim_len == d:
                y = hh
                for _ in range(d):
                    jlen = _jpush(jk, ji, jv, jlen, _POST, y, 0)
                    post[y, post_cnt[y]] = t
                    post_cnt[y] += 1
                    jlen = _jpush(jk, ji, jv, jlen, _CUR, y, cur[y])
                    cur[y] += 1
                    jlen = _jpush(jk, ji, jv, jlen, _CUR, t, cur[t])
                    cur[t] += 1
                    n_conn += 1
                    if cur[y] != deg[y]:
                        okp = False
                        break
                    y = nxt[y]
                if okp:
                    jlen = _jpush(jk, ji, jv, jlen, _CORE, t, 0)
                    y = hh
                    for i in range(d):
                        core[t, i] = y
                        y = nxt[y]
                    core_cnt[t] = d
                    jlen = _jpush(jk, ji, jv, jlen, _HEAD, head, 0)
                    head = -1
                    placed += 1
            else:
                okp = False
        elif placed == 1:
            hh = head
            jlen = _jpush(jk, ji, jv, jlen, _POST, hh, 0)
            post[hh, post_cnt[hh]] = t
            post_cnt[hh] += 1
            jlen = _jpush(jk, ji, jv, jlen, _CUR, hh, cur[hh])
            cur[hh] += 1
            jlen = _jpush(jk, ji, jv, jlen, _CUR, t, cur[t])
            cur[t] += 1
            n_conn += 1
            jlen = _jpush(jk, ji, jv, jlen, _CORE, t, 0)
            core[t, 0] = hh
            core_cnt[t] = 1
            jlen = _jpush(jk, ji, jv, jlen, _NXT, hh, nxt[hh])
            jlen = _jpush(jk, ji, jv, jlen, _PRV, hh, prv[hh])
            nxt[hh] = t
            prv[hh] = t
            jlen = _jpush(jk, ji, jv, jlen, _NXT, t, nxt[t])
            jlen = _jpush(jk, ji, jv, jlen, _PRV, t, prv[t])
            nxt[t] = hh
            prv[t] = hh
            jlen = _jpush(jk, ji, jv, jlen, _HEAD, head, 0)
            head = t
            placed = 2
        else:
            hh = head
            tt = nxt[hh]
            if hh == tt:
                okp = False
            else:
                # arc assembled from two halves; pre/post rows of t are free
                # until later faces attach to it, so they serve as scratch
                left = pre[t]
                left_cnt = 0
                right = post[t]
                right_cnt = 0
                jlen = _jpush(jk, ji, jv, jlen, _POST, hh, 0)
                post[hh, post_cnt[hh]] = t
                post_cnt[hh] += 1
                jlen = _jpush(jk, ji, jv, jlen, _CUR, hh, cur[hh])
                cur[hh] += 1
                jlen = _jpush(jk, ji, jv, jlen, _CUR, t, cur[t])
                cur[t] += 1
                n_conn += 1
                right[right_cnt] = hh
                right_cnt += 1
                jlen = _jpush(jk, ji, jv, jlen, _PRE, tt, 0)
                pre[tt, pre_cnt[tt]] = t
                pre_cnt[tt] += 1
                jlen = _jpush(jk, ji, jv, jlen, _CUR, tt, cur[tt])
                cur[tt] += 1
                jlen = _jpush(jk, ji, jv, jlen, _CUR, t, cur[t])
                cur[t] += 1
                n_conn += 1
                right[right_cnt] = tt
                right_cnt += 1
                have_h = True
                have_t = True
                while okp:
                    if have_t and cur[tt] == deg[tt]:
                        nxt_t = nxt[tt]
                        p_ = prv[tt]
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, p_, nxt[p_])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, nxt_t, prv[nxt_t])
                        nxt[p_] = nxt_t
                        prv[nxt_t] = p_
                        if nxt_t == tt or (have_h and nxt_t == hh):
                            have_t = False
                        else:
                            if cur[t] >= d:
                                okp = False
                                break
                            tt = nxt_t
                            jlen = _jpush(jk, ji, jv, jlen, _PRE, tt, 0)
                            pre[tt, pre_cnt[tt]] = t
                            pre_cnt[tt] += 1
                            jlen = _jpush(jk, ji, jv, jlen, _CUR, tt, cur[tt])
                            cur[tt] += 1
                            jlen = _jpush(jk, ji, jv, jlen, _CUR, t, cur[t])
                            cur[t] += 1
                            n_conn += 1
                            right[right_cnt] = tt
                            right_cnt += 1
                        continue
                    if have_h and cur[hh] == deg[hh]:
                        prv_h = prv[hh]
                        q_ = nxt[hh]
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, prv_h, nxt[prv_h])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, q_, prv[q_])
                        nxt[prv_h] = q_
                        prv[q_] = prv_h
                        if prv_h == hh or (have_t and prv_h == tt):
                            have_h = False
                        else:
                            if cur[t] >= d:
                                okp = False
                                break
                            hh = prv_h
                            jlen = _jpush(jk, ji, jv, jlen, _POST, hh, 0)
                            post[hh, post_cnt[hh]] = t
                            post_cnt[hh] += 1
                            jlen = _jpush(jk, ji, jv, jlen, _CUR, hh, cur[hh])
                            cur[hh] += 1
                            jlen = _jpush(jk, ji, jv, jlen, _CUR, t, cur[t])
                            cur[t] += 1
                            n_conn += 1
                            left[left_cnt] = hh
                            left_cnt += 1
                        continue
                    break
                if okp and cur[t] >= d:
                    okp = False
                if okp:
                    if not have_h and not have_t:
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, t, nxt[t])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, t, prv[t])
                        nxt[t] = t
                        prv[t] = t
                    elif not have_h:
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, tt, nxt[tt])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, tt, prv[tt])
                        nxt[tt] = t
                        prv[tt] = t
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, t, nxt[t])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, t, prv[t])
                        nxt[t] = tt
                        prv[t] = tt
                    elif not have_t:
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, hh, nxt[hh])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, hh, prv[hh])
                        nxt[hh] = t
                        prv[hh] = t
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, t, nxt[t])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, t, prv[t])
                        nxt[t] = hh
                        prv[t] = hh
                    else:
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, hh, nxt[hh])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, t, prv[t])
                        nxt[hh] = t
                        prv[t] = hh
                        jlen = _jpush(jk, ji, jv, jlen, _NXT, t, nxt[t])
                        jlen = _jpush(jk, ji, jv, jlen, _PRV, tt, prv[tt])
                        nxt[t] = tt
                        prv[tt] = t
                    jlen = _jpush(jk, ji, jv, jlen, _HEAD, head, 0)
                    head = t
                    jlen = _jpush(jk, ji, jv, jlen, _CORE, t, 0)
                    k = 0
                    for i in range(left_cnt - 1, -1, -1):
                        core[t, k] = left[i]
                        k += 1
                    for i in range(right_cnt):
                        core[t, k] = right[i]
                        k += 1
                    core_cnt[t] = k
                    placed += 1

        if not okp:
            jlen, head, placed, sum_deg, n_conn = _rollback(
                jk, ji, jv, jlen, mark, cur, nxt, prv, pre_cnt,
                post_cnt, core_cnt, deg, head, placed, sum_deg, n_conn)
            continue

        if d == PENT:
            pos[npos] = t + 1
            npos += 1
        if final:
            if npos == 12:
                good = True
                for y in range(f):
                    k = 0
                    for i in range(pre_cnt[y] - 1, -1, -1):
                        adj[y, k] = pre[y, i]
                        k += 1
                    for i in range(core_cnt[y]):
                        adj[y, k] = core[y, i]
                        k += 1
                    for i in range(post_cnt[y]):
                        adj[y, k] = post[y, i]
                        k += 1
                    if k != deg[y]:
                        good = False
                        break
                if good and _leaf_canonical(f, adj, deg, pos, s_cur, s_nxt,
                                            s_prv, s_placed, s_pdeg, touched):
                    if nout == cap_out:
                        bigger = np.zeros((cap_out * 2, 12), np.int32)
                        bigger[:cap_out] = out
                        out = bigger
                        cap_out *= 2
                    for i in range(12):
                        out[nout, i] = pos[i]
                    nout += 1
            if d == PENT:
                npos -= 1
            jlen, head, placed, sum_deg, n_conn = _rollback(
                jk, ji, jv, jlen, mark, cur, nxt, prv, pre_cnt,
                post_cnt, core_cnt, deg, head, placed, sum_deg, n_conn)
            continue

        q_rem = fpents[t] - (1 if d == PENT else 0)
        h_rem = (f - t - 1) - q_rem
        s = sum_deg - 2 * n_conn
        if s <= 3 * q_rem + 4 * h_rem + 2 and (q_rem > 5 or s >= bmin[q_rem, h_rem]):
            fpents[t + 1] = q_rem
            t += 1
            branch[t] = 0
            continue
        if d == PENT:
            npos -= 1
        jlen, head, placed, sum_deg, n_conn = _rollback(
            jk, ji, jv, jlen, mark, cur, nxt, prv, pre_cnt,
            post_cnt, core_cnt, deg, head, placed, sum_deg, n_conn)
    return out[:nout].copy()
