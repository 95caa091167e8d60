"""Simulation backends: compiled kernel when available, pure Python otherwise.

Both backends implement the same draw-for-draw semantics and emit
identical traces; the compiled one exists because the rollout loop
dominates runtime.  `make_runtime` hides the choice behind one object.
"""

from __future__ import annotations

from ..core import Game
from ..traces import GameTrace
from . import pure

try:
    from . import _fastcore
except ImportError:  # compiled extension not built; fall back to pure Python
    _fastcore = None

PURE = "pure"
FAST = "fast"
AUTO = "auto"


def fast_available() -> bool:
    return _fastcore is not None


def available_backends() -> tuple[str, ...]:
    return (PURE, FAST) if fast_available() else (PURE,)


def resolve_backend(name: str = AUTO) -> str:
    if name == AUTO:
        return FAST if fast_available() else PURE
    if name == FAST and not fast_available():
        raise RuntimeError("compiled engine requested but not built")
    if name not in (PURE, FAST):
        raise ValueError(f"unknown engine {name!r} (expected auto, fast, or pure)")
    return name


class PureRuntime:
    """Drives games through the Python domain objects."""

    backend = PURE

    def __init__(self, game: Game):
        self.game = game

    def simulate(self, p0_rollouts, p1_rollouts, exploration_c, depth_cap,
                 master_seed, game_index) -> GameTrace:
        return pure.simulate_game(
            self.game, p0_rollouts, p1_rollouts, exploration_c, depth_cap,
            master_seed, game_index,
        )


class FastRuntime:
    """Drives games through the compiled kernel."""

    backend = FAST

    def __init__(self, game: Game):
        if _fastcore is None:
            raise RuntimeError("compiled engine is not available")
        self.game = game
        self._core_factory = _fastcore.core_factory(game)

    def simulate(self, p0_rollouts, p1_rollouts, exploration_c, depth_cap,
                 master_seed, game_index) -> GameTrace:
        return _fastcore.simulate_game(
            self._core_factory, self.game, p0_rollouts, p1_rollouts,
            exploration_c, depth_cap, master_seed, game_index,
        )


def make_runtime(game: Game, engine: str = AUTO):
    """Runtime for `game` on the requested backend (fast games need one of
    the two shipped domains; anything else runs pure)."""
    name = resolve_backend(engine)
    if name == FAST:
        try:
            return FastRuntime(game)
        except TypeError:
            if engine == FAST:
                raise
            return PureRuntime(game)
    return PureRuntime(game)
