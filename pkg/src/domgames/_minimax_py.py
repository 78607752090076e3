"""Pure-Python reference kernel for the game-value search.

Mirrors the jitted kernel move for move: memoized alternating minimax on
(covered, stalled, to-move) bitmask states. Covered only ever grows; the
stalled set exists only for the no-repeat game and is kept normalized to
stalled minus covered, so every recursion strictly increases (covered,
stalled) lexicographically. For the repeats-allowed game, moves that add
nothing ("nulls") are folded into a fixed point: the minimizer never takes
one, and the maximizer's value at covered C is max(progressing options,
1 + minimizer's value at C).

Returns -1 when the memo tables exceed `memo_cap` entries.
"""

from __future__ import annotations


class _CapExceeded(Exception):
    pass


def search(test_masks, gain_masks, n, covered0, stalled0, to_move0,
           is_l, is_ll, memo_cap) -> int:
    full = (1 << n) - 1
    test = [int(x) for x in test_masks]
    gain = [int(x) for x in gain_masks]
    memo = ({}, {})  # indexed by player to move: 0 Dominator, 1 Staller

    def rec(covered: int, stalled: int, mov: int) -> int:
        if covered == full:
            return 0
        table = memo[mov]
        key = (covered, stalled)
        hit = table.get(key)
        if hit is not None:
            return hit
        if len(memo[0]) + len(memo[1]) >= memo_cap:
            raise _CapExceeded
        best = None
        has_null = False
        for v in range(n):
            if is_l and (stalled >> v) & 1:
                continue
            if test[v] & ~covered == 0:
                continue
            new_cov = covered | gain[v]
            if new_cov == covered:
                if is_ll:
                    if mov == 1:
                        has_null = True
                    continue
                if not is_l:
                    continue
                new_st = stalled | (1 << v)
            else:
                if mov == 0 and new_cov == full:
                    best = 1
                    break
                new_st = (stalled | (1 << v)) & ~new_cov if is_l else 0
            val = 1 + rec(new_cov, new_st, 1 - mov)
            if best is None or (val < best if mov == 0 else val > best):
                best = val
        if has_null:
            val = 1 + rec(covered, stalled, 0)
            if best is None or val > best:
                best = val
        if best is None:
            raise AssertionError("stuck unfinished state; graph has an isolate?")
        table[key] = best
        return best

    try:
        return rec(int(covered0), int(stalled0), int(to_move0))
    except _CapExceeded:
        return -1
