"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat
and the classes specific.
"""


class FormatError(ValueError):
    """Malformed graph input (graph6 or edge-list text)."""


class VertexCapError(ValueError):
    """Construction would exceed the fixed vertex-universe cap."""


class IsolatedVertexError(ValueError):
    """A game or total-domination routine received a graph with an isolated vertex."""


class MemoLimitError(RuntimeError):
    """The solver's transposition table exceeded its configured entry cap."""
