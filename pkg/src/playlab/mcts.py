"""Budget-limited Monte-Carlo Tree Search with UCB1 selection.

The rollout budget is the skill proxy: more iterations of the
select / expand / simulate / backpropagate cycle mean stronger play.

The tree is open-loop: edges are moves, and every iteration re-applies the
edge moves to a fresh copy of the root state, drawing chance events (tile
refills, card draws) anew.  Node statistics therefore average over chance
outcomes.  A stored edge move can be illegal under the current chance
sample; selection then falls through to the remaining legal options, or
straight to a playout when none are available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from .core import Game, Outcome, reward
from .rng import GameRng

DEFAULT_EXPLORATION = math.sqrt(2.0)
DEFAULT_PLAYOUT_DEPTH_CAP = 300


@dataclass(frozen=True)
class SearchBudget:
    rollouts: int
    playout_depth_cap: int = DEFAULT_PLAYOUT_DEPTH_CAP

    def __post_init__(self):
        if self.rollouts < 1:
            raise ValueError("rollouts must be >= 1")
        if self.playout_depth_cap < 1:
            raise ValueError("playout_depth_cap must be >= 1")


class SearchNode:
    """One tree node; the edge from its parent is `move` (None at the root).

    `total_reward` accumulates rewards from the perspective of
    `acting_player`, the player who chose this edge.
    """

    __slots__ = ("move", "acting_player", "visits", "total_reward", "children", "untried_moves")

    def __init__(self, move=None, acting_player=None, untried_moves=()):
        self.move = move
        self.acting_player = acting_player
        self.visits = 0
        self.total_reward = 0.0
        self.children: list[SearchNode] = []
        self.untried_moves: list[Any] = list(untried_moves)

    def mean_reward(self) -> float:
        return self.total_reward / self.visits


def ucb1_score(child: SearchNode, parent_visits: int, c: float) -> float:
    """Mean reward plus exploration bonus; +inf for never-visited children.

    The infinity forces every option to be tried once before any option is
    repeated.
    """
    if child.visits == 0:
        return math.inf
    return child.total_reward / child.visits + c * math.sqrt(
        math.log(parent_visits) / child.visits
    )


def simulate_playout(game: Game, state, depth_cap: int, rng: GameRng) -> Outcome:
    """Play uniformly random legal moves until the game ends or the cap hits.

    Hitting the cap counts as a draw, which guards search against domains
    where random play can stall.  The state passed in is consumed.
    """
    out = game.outcome(state)
    depth = 0
    while not out.is_terminal:
        if depth >= depth_cap:
            return Outcome.draw()
        moves = game.legal_moves(state)
        move = moves[rng.randbelow(len(moves))]
        state = game.apply_move(state, move, rng)
        out = game.outcome(state)
        depth += 1
    return out


def backpropagate(path: list[SearchNode], outcome: Outcome) -> None:
    """Credit the playout result to every node on the root-to-leaf path.

    Each node scores the outcome from its own acting player's perspective;
    the root has no acting player and only counts the visit.
    """
    for node in path:
        node.visits += 1
        if node.acting_player is not None:
            node.total_reward += reward(outcome, node.acting_player)


def choose_final_move(root: SearchNode):
    """Most-visited child; ties broken by mean reward, then creation order."""
    best = None
    for child in root.children:
        if child.visits == 0:
            continue
        if best is None or child.visits > best.visits or (
            child.visits == best.visits and child.mean_reward() > best.mean_reward()
        ):
            best = child
    if best is None:
        raise ValueError("choose_final_move() requires at least one visited child")
    return best.move


def run_search(
    game: Game,
    root_state,
    budget: SearchBudget,
    c: float = DEFAULT_EXPLORATION,
    rng: GameRng | None = None,
) -> Any:
    """Run `budget.rollouts` full MCTS iterations and return the chosen move."""
    if rng is None:
        raise ValueError("run_search() needs an explicit rng stream")
    if game.outcome(root_state).is_terminal:
        raise ValueError("run_search() requires a non-terminal root state")

    root = SearchNode(untried_moves=game.legal_moves(root_state))
    for _ in range(budget.rollouts):
        _search_iteration(game, root_state, root, c, budget.playout_depth_cap, rng)
    return choose_final_move(root)


def _search_iteration(game, root_state, root, c, depth_cap, rng):
    state = game.copy_state(root_state)
    node = root
    path = [root]

    while True:
        out = game.outcome(state)
        if out.is_terminal:
            backpropagate(path, out)
            return

        if node.untried_moves:
            expanded = _expand(game, state, node, rng)
            if expanded is not None:
                node, state = expanded
                path.append(node)
                break

        # Select among children whose edge move is legal under this
        # iteration's chance sample.
        best = None
        best_score = -math.inf
        for child in node.children:
            if not game.is_move_legal(state, child.move):
                continue
            score = ucb1_score(child, node.visits, c)
            if score > best_score:
                best = child
                best_score = score
        if best is None:
            break  # frontier: nothing expandable or legal here, play out
        state = game.apply_move(state, best.move, rng)
        node = best
        path.append(best)

    out = simulate_playout(game, state, depth_cap, rng)
    backpropagate(path, out)


def _expand(game, state, node, rng):
    """Create a child for the first currently-legal untried move, if any."""
    for i, move in enumerate(node.untried_moves):
        if game.is_move_legal(state, move):
            node.untried_moves.pop(i)
            acting = game.current_player(state)
            child_state = game.apply_move(state, move, rng)
            child = SearchNode(
                move=move,
                acting_player=acting,
                untried_moves=game.legal_moves(child_state)
                if not game.outcome(child_state).is_terminal
                else (),
            )
            node.children.append(child)
            return child, child_state
    return None
