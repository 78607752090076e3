"""Jitted kernel for the game-value search.

Same state space and move rules as `_minimax_py.search`, written as an
explicit-stack depth-first walk because numba cannot reload self-recursive
functions from its on-disk cache. Memo tables are numba typed Dicts keyed
by the (covered, stalled) masks, one per player to move.

The stack never exceeds 2n + 4 frames: every descent grows (covered,
stalled) lexicographically except the single fixed-point probe under a
maximizer null, which switches the player at the same covered set.
"""

from __future__ import annotations

import numpy as np
from numba import njit
from numba.core import types
from numba.typed import Dict

_KEY = types.UniTuple(types.int64, 2)
_BIG = np.int64(1) << np.int64(40)


@njit(cache=True)
def _walk(test, gain, full, n, covered0, stalled0, to_move0, is_l, is_ll, cap):
    if covered0 == full:
        return 0
    memo_d = Dict.empty(_KEY, types.int64)
    memo_s = Dict.empty(_KEY, types.int64)
    depth = 2 * n + 4
    st_cov = np.empty(depth, dtype=np.int64)
    st_sta = np.empty(depth, dtype=np.int64)
    st_mov = np.empty(depth, dtype=np.int64)
    st_v = np.empty(depth, dtype=np.int64)
    st_best = np.empty(depth, dtype=np.int64)
    st_null = np.zeros(depth, dtype=np.int64)  # 0 none, 1 seen, 2 child pending
    st_cov[0] = covered0
    st_sta[0] = stalled0
    st_mov[0] = to_move0
    st_v[0] = 0
    st_best[0] = _BIG if to_move0 == 0 else 0
    sp = 1
    ret = np.int64(-2)  # value returned by the frame just popped
    while sp > 0:
        i = sp - 1
        covered = st_cov[i]
        stalled = st_sta[i]
        mov = st_mov[i]
        if ret != -2:
            val = 1 + ret
            if st_null[i] == 2:
                if val > st_best[i]:
                    st_best[i] = val
                st_null[i] = 0
            else:
                if mov == 0:
                    if val < st_best[i]:
                        st_best[i] = val
                else:
                    if val > st_best[i]:
                        st_best[i] = val
            ret = np.int64(-2)
        v = st_v[i]
        descended = False
        while v < n:
            if is_l and (stalled >> v) & 1:
                v += 1
                continue
            if test[v] & ~covered == 0:
                v += 1
                continue
            new_cov = covered | gain[v]
            if new_cov == covered:
                if is_ll:
                    if mov == 1:
                        st_null[i] = 1
                    v += 1
                    continue
                if not is_l:
                    v += 1
                    continue
                new_st = stalled | (np.int64(1) << v)
            else:
                if mov == 0 and new_cov == full:
                    st_best[i] = 1
                    v = n
                    break
                if is_l:
                    new_st = (stalled | (np.int64(1) << v)) & ~new_cov
                else:
                    new_st = np.int64(0)
            if new_cov == full:
                child = np.int64(0)
            else:
                key = (new_cov, new_st)
                cmemo = memo_s if mov == 0 else memo_d
                if key in cmemo:
                    child = cmemo[key]
                else:
                    if len(memo_d) + len(memo_s) >= cap:
                        return -1
                    st_v[i] = v + 1
                    st_cov[sp] = new_cov
                    st_sta[sp] = new_st
                    st_mov[sp] = 1 - mov
                    st_v[sp] = 0
                    st_best[sp] = _BIG if mov == 1 else 0
                    st_null[sp] = 0
                    sp += 1
                    descended = True
                    break
            val = 1 + child
            if mov == 0:
                if val < st_best[i]:
                    st_best[i] = val
            else:
                if val > st_best[i]:
                    st_best[i] = val
            v += 1
        if descended:
            continue
        st_v[i] = v
        if st_null[i] == 1:
            key = (covered, stalled)
            if key in memo_d:
                val = 1 + memo_d[key]
                if val > st_best[i]:
                    st_best[i] = val
                st_null[i] = 0
            else:
                if len(memo_d) + len(memo_s) >= cap:
                    return -1
                st_null[i] = 2
                st_cov[sp] = covered
                st_sta[sp] = stalled
                st_mov[sp] = 0
                st_v[sp] = 0
                st_best[sp] = _BIG
                st_null[sp] = 0
                sp += 1
                continue
        best = st_best[i]
        if mov == 0:
            memo_d[(covered, stalled)] = best
        else:
            memo_s[(covered, stalled)] = best
        ret = best
        sp -= 1
    return ret


def search(test_masks, gain_masks, n, covered0, stalled0, to_move0,
           is_l, is_ll, memo_cap) -> int:
    full = np.int64((1 << n) - 1)
    return int(_walk(np.ascontiguousarray(test_masks, dtype=np.int64),
                     np.ascontiguousarray(gain_masks, dtype=np.int64),
                     full, np.int64(n), np.int64(covered0),
                     np.int64(stalled0), np.int64(to_move0),
                     bool(is_l), bool(is_ll), np.int64(memo_cap)))
