"""Pure-Python game driver: one seeded game between two search agents.

This is the reference implementation; the compiled engine mirrors it
draw-for-draw, so both produce identical traces for identical inputs.
"""

from __future__ import annotations

from ..core import Game, WIN
from ..mcts import SearchBudget, run_search
from ..rng import spawn_game_rng
from ..traces import GameTrace, MoveRecord, TurnRecord, WINNER_DRAW, WINNER_P0, WINNER_P1


def simulate_game(
    game: Game,
    p0_rollouts: int,
    p1_rollouts: int,
    exploration_c: float,
    depth_cap: int,
    master_seed: int,
    game_index: int,
) -> GameTrace:
    rng = spawn_game_rng(master_seed, game_index)
    state = game.initial_state(rng)
    budgets = (
        SearchBudget(p0_rollouts, depth_cap),
        SearchBudget(p1_rollouts, depth_cap),
    )

    turns: list[TurnRecord] = []
    open_moves: list[MoveRecord] = []
    turn_player = None
    out = game.outcome(state)

    while not out.is_terminal:
        player = game.current_player(state)
        if turn_player is None:
            turn_player = player
        moves = game.legal_moves(state)
        labels = [game.move_label(m) for m in moves]
        if len(moves) == 1:
            move = moves[0]  # forced move, skip the search
        else:
            move = run_search(game, state, budgets[player], exploration_c, rng)
        open_moves.append(
            MoveRecord(
                chosen_label=game.move_label(move),
                available_labels=tuple(sorted(set(labels))),
                available_count=len(moves),
            )
        )
        state = game.apply_move(state, move, rng)
        out = game.outcome(state)
        if out.is_terminal or game.current_player(state) != turn_player:
            turns.append(
                TurnRecord(
                    turn_index=len(turns) + 1,
                    player=turn_player,
                    moves=tuple(open_moves),
                    state_summary=game.state_summary(state),
                )
            )
            open_moves = []
            turn_player = None

    if out.status == WIN:
        winner = WINNER_P0 if out.winner == 0 else WINNER_P1
    else:
        winner = WINNER_DRAW
    return GameTrace(
        domain=game.name,
        p0_rollouts=p0_rollouts,
        p1_rollouts=p1_rollouts,
        master_seed=master_seed,
        game_index=game_index,
        winner=winner,
        turns=tuple(turns),
    )
