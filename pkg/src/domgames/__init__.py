"""Exact solver and verification workbench for the five domination games
(domination, total, Z, L, LL) on small graphs."""

from .classic import (DominationCertificate, domination_number,
                      has_supportive_dominating_set,
                      satisfies_pendant_theorem_hypothesis, support_vertices,
                      total_domination_number)
from .codec import (graph6_str, parse_edgelist, parse_graph, parse_graph6,
                    serialize_edgelist, serialize_graph, serialize_graph6)
from .errors import (FormatError, IsolatedVertexError, MemoLimitError,
                     VertexCapError)
from .game import (ALL_VARIANTS, DOM, L, LL, TOTAL, VARIANTS, Z, GameState,
                   GameVariant, InvariantProfile, Player, apply_move,
                   game_value, game_value_from, initial_state, is_finished,
                   legal_moves, optimal_move, profile)
from .graphs import VERTEX_CAP, Graph, VertexSet, generate
from .products import (bridge_graph, cartesian_product, complement,
                       hat_construction, lexicographic_product)
from .structure import (find_twins, has_Z_configuration, is_claw_center,
                        is_claw_free, is_weakly_claw_free, is_Z_insensitive)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
