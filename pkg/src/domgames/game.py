"""Unified exact evaluation of the five domination games.

A game is described by which neighborhood a move is tested against
(legality), which neighborhood it adds to the covered set (gain), and
whether replaying a vertex is forbidden:

    dom    closed test, closed gain
    total  open test,   open gain
    z      open test,   closed gain
    l      closed test, open gain, no repeats
    ll     closed test, open gain, repeats allowed

Dominator minimizes and Staller maximizes the total number of moves; the
game ends when the covered set is the whole vertex set. Values come from
a memoized alternating minimax over (covered, stalled, to-move) states,
run by one of the interchangeable kernels in `backend`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import backend
from .classic import domination_number, total_domination_number
from .errors import IsolatedVertexError, MemoLimitError
from .graphs import Graph, VertexSet

SOLVER_VERSION = 1

DEFAULT_MEMO_CAP = 1 << 21


class Player(enum.Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"

    @property
    def opponent(self) -> "Player":
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR


_VARIANT_ROWS = {
    "dom": ("closed", "closed", False),
    "total": ("open", "open", False),
    "z": ("open", "closed", False),
    "l": ("closed", "open", True),
    "ll": ("closed", "open", False),
}


@dataclass(frozen=True)
class GameVariant:
    name: str
    test_nbhd: str
    gain_nbhd: str
    forbid_repeat: bool

    def __post_init__(self):
        row = _VARIANT_ROWS.get(self.name)
        if row != (self.test_nbhd, self.gain_nbhd, self.forbid_repeat):
            raise ValueError(f"not one of the five game variants: {self!r}")


DOM = GameVariant("dom", *_VARIANT_ROWS["dom"])
TOTAL = GameVariant("total", *_VARIANT_ROWS["total"])
Z = GameVariant("z", *_VARIANT_ROWS["z"])
L = GameVariant("l", *_VARIANT_ROWS["l"])
LL = GameVariant("ll", *_VARIANT_ROWS["ll"])

VARIANTS = {v.name: v for v in (DOM, TOTAL, Z, L, LL)}

ALL_VARIANTS = (DOM, TOTAL, Z, L, LL)


@dataclass(frozen=True)
class GameState:
    covered: VertexSet
    stalled: VertexSet
    to_move: Player

    def __post_init__(self):
        if self.covered.universe_size != self.stalled.universe_size:
            raise ValueError("covered and stalled universes differ")
        if self.stalled.mask & self.covered.mask:
            raise ValueError("stalled set must be disjoint from covered")


def initial_state(G: Graph, first: Player = Player.DOMINATOR,
                  covered: VertexSet | None = None) -> GameState:
    if covered is None:
        covered = VertexSet(G.n)
    elif covered.universe_size != G.n:
        raise ValueError("initial covered set has the wrong universe")
    return GameState(covered, VertexSet(G.n), first)


def _masks(G: Graph, variant: GameVariant):
    test = G.closed_masks if variant.test_nbhd == "closed" else G.open_masks
    gain = G.closed_masks if variant.gain_nbhd == "closed" else G.open_masks
    return test, gain


def _require_playable(G: Graph, variant: GameVariant, state: GameState) -> None:
    if not G.is_isolate_free():
        raise IsolatedVertexError(f"{variant.name}-game needs an isolate-free graph")
    if state.covered.universe_size != G.n:
        raise ValueError("state universe does not match the graph")


def is_finished(G: Graph, variant: GameVariant, state: GameState) -> bool:
    return state.covered.mask == (1 << G.n) - 1


def legal_moves(G: Graph, variant: GameVariant, state: GameState) -> VertexSet:
    """Vertices whose test neighborhood still meets the uncovered region,
    minus (for the no-repeat game) the stalled vertices."""
    _require_playable(G, variant, state)
    test, gain = _masks(G, variant)
    covered = state.covered.mask
    out = 0
    progressing = 0
    for v in range(G.n):
        if variant.forbid_repeat and v in state.stalled:
            continue
        if int(test[v]) & ~covered:
            out |= 1 << v
            if int(gain[v]) & ~covered:
                progressing |= 1 << v
    assert covered == (1 << G.n) - 1 or progressing, \
        "unfinished game must offer a progressing move"
    return VertexSet.from_mask(G.n, out)


def apply_move(G: Graph, variant: GameVariant, state: GameState, v: int) -> GameState:
    """Play v: extend covered by its gain neighborhood, update the stalled
    set (no-repeat game only), flip the player to move."""
    if v not in legal_moves(G, variant, state):
        raise ValueError(f"illegal move {v} in {variant.name}-game")
    _, gain = _masks(G, variant)
    new_cov = state.covered.mask | int(gain[v])
    if variant.forbid_repeat:
        new_st = (state.stalled.mask | (1 << v)) & ~new_cov
    else:
        new_st = 0
    return GameState(VertexSet.from_mask(G.n, new_cov),
                     VertexSet.from_mask(G.n, new_st),
                     state.to_move.opponent)


def _kernel_value(G: Graph, variant: GameVariant, covered0: int, stalled0: int,
                  to_move: Player, memo_cap: int) -> int:
    test, gain = _masks(G, variant)
    search = backend.search_fn()
    r = search(test, gain, G.n, covered0, stalled0,
               0 if to_move is Player.DOMINATOR else 1,
               variant.name == "l", variant.name == "ll", memo_cap)
    if r < 0:
        raise MemoLimitError(
            f"transposition table exceeded {memo_cap} entries; raise memo_cap")
    return r


def game_value(G: Graph, variant: GameVariant,
               first: Player = Player.DOMINATOR,
               initial_covered: VertexSet | None = None,
               memo_cap: int = DEFAULT_MEMO_CAP) -> int:
    """Length of the game under optimal play by both sides.

    A non-empty `initial_covered` starts the partially dominated game in
    which those vertices already count as covered.
    """
    state = initial_state(G, first, initial_covered)
    _require_playable(G, variant, state)
    return _kernel_value(G, variant, state.covered.mask, 0, first, memo_cap)


def game_value_from(G: Graph, variant: GameVariant, state: GameState,
                    memo_cap: int = DEFAULT_MEMO_CAP) -> int:
    """Optimal continuation length from an arbitrary mid-game state."""
    _require_playable(G, variant, state)
    return _kernel_value(G, variant, state.covered.mask, state.stalled.mask,
                         state.to_move, memo_cap)


def optimal_move(G: Graph, variant: GameVariant, state: GameState,
                 memo_cap: int = DEFAULT_MEMO_CAP) -> int:
    """A legal move achieving the minimax value; ties break to the
    smallest vertex index."""
    if is_finished(G, variant, state):
        raise ValueError("game is finished")
    moves = legal_moves(G, variant, state)
    if not moves:
        raise ValueError("no legal move available")
    minimizing = state.to_move is Player.DOMINATOR
    best_v = -1
    best_val = None
    for v in moves:
        nxt = apply_move(G, variant, state, v)
        val = 1 + game_value_from(G, variant, nxt, memo_cap)
        if best_val is None or (val < best_val if minimizing else val > best_val):
            best_v, best_val = v, val
    return best_v


@dataclass(frozen=True)
class InvariantProfile:
    """gamma, gamma_t, and all ten game values of one graph."""
    gamma: int
    gamma_t: int
    values: dict = field(default_factory=dict)  # (variant name, 'd'|'s') -> int

    FLAT_KEYS = ("gamma", "gamma_t", "dom_d", "dom_s", "total_d", "total_s",
                 "z_d", "z_s", "l_d", "l_s", "ll_d", "ll_s")

    def value(self, variant: GameVariant, first: Player) -> int:
        return self.values[(variant.name, "d" if first is Player.DOMINATOR else "s")]

    def as_flat_dict(self) -> dict[str, int]:
        out = {"gamma": self.gamma, "gamma_t": self.gamma_t}
        for name in ("dom", "total", "z", "l", "ll"):
            out[f"{name}_d"] = self.values[(name, "d")]
            out[f"{name}_s"] = self.values[(name, "s")]
        return out


def profile(G: Graph, memo_cap: int = DEFAULT_MEMO_CAP) -> InvariantProfile:
    """All ten game values plus the two classical numbers."""
    if not G.is_isolate_free():
        raise IsolatedVertexError("profile needs an isolate-free graph")
    gamma, _ = domination_number(G)
    gamma_t, _ = total_domination_number(G)
    values = {}
    for variant in ALL_VARIANTS:
        for tag, first in (("d", Player.DOMINATOR), ("s", Player.STALLER)):
            values[(variant.name, tag)] = game_value(
                G, variant, first, memo_cap=memo_cap)
    return InvariantProfile(gamma, gamma_t, values)
