"""Domain-agnostic contract for two-player, turn-based, perfect-information games.

Both shipped domains implement :class:`Game`; the search agent and the
experiment harness only ever talk to this interface, so test domains can be
plugged in the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Sequence

from .rng import GameRng

PLAYER_0 = 0
PLAYER_1 = 1

ONGOING = "ongoing"
WIN = "win"
DRAW = "draw"


def opponent(player: int) -> int:
    return 1 - player


@dataclass(frozen=True)
class Outcome:
    """Game status: a win for one player, a draw, or still in progress."""

    status: str
    winner: int | None = None

    @property
    def is_terminal(self) -> bool:
        return self.status != ONGOING

    @staticmethod
    def ongoing() -> "Outcome":
        return _ONGOING

    @staticmethod
    def draw() -> "Outcome":
        return _DRAW

    @staticmethod
    def win(player: int) -> "Outcome":
        return _WINS[player]


_ONGOING = Outcome(ONGOING)
_DRAW = Outcome(DRAW)
_WINS = (Outcome(WIN, PLAYER_0), Outcome(WIN, PLAYER_1))


def reward(outcome: Outcome, player: int) -> int:
    """+1 if `player` won, -1 if the opponent won, 0 on a draw.

    Raises ValueError on a non-terminal outcome: rewards only exist at the
    end of a game.
    """
    if outcome.status == ONGOING:
        raise ValueError("reward() requires a terminal outcome")
    if outcome.status == DRAW:
        return 0
    return 1 if outcome.winner == player else -1


class Game:
    """Behavioral contract every domain provides.

    States are value-semantic: `apply_move` returns a new state (or an
    exclusively-owned copy) and never mutates shared data, so independent
    games can run on independent workers with no locking.
    """

    name: str = "game"

    def initial_state(self, rng: GameRng) -> Any:
        raise NotImplementedError

    def legal_moves(self, state: Any) -> Sequence[Any]:
        """Ordered, deterministic move list; non-empty for ongoing states."""
        raise NotImplementedError

    def apply_move(self, state: Any, move: Any, rng: GameRng) -> Any:
        raise NotImplementedError

    def current_player(self, state: Any) -> int:
        raise NotImplementedError

    def outcome(self, state: Any) -> Outcome:
        raise NotImplementedError

    def move_label(self, move: Any) -> str:
        """Abstraction key used by the analytics; independent of turn number."""
        raise NotImplementedError

    def is_move_legal(self, state: Any, move: Any) -> bool:
        """Membership check; domains override with a direct test."""
        return any(move == m for m in self.legal_moves(state))

    def copy_state(self, state: Any) -> Any:
        """Independent copy the search may mutate; override when cheaper."""
        raise NotImplementedError

    def state_summary(self, state: Any) -> dict[str, Any]:
        """Small scalar snapshot recorded at the end of each turn."""
        raise NotImplementedError

    def is_bookkeeping_label(self, label: Hashable) -> bool:
        """True for pass/end-turn style labels excluded from atom counts."""
        return label in ("pass", "end")
