import math

import pytest

from playlab.core import Outcome
from playlab.mcts import (
    SearchBudget,
    SearchNode,
    backpropagate,
    choose_final_move,
    run_search,
    simulate_playout,
    ucb1_score,
)
from playlab.rng import spawn_game_rng

from toygames import cycling_game, forced_line, random_tree_game, two_ply_win_lose


def make_child(visits, total):
    node = SearchNode(move="m", acting_player=0)
    node.visits = visits
    node.total_reward = total
    return node


class TestUcb1:
    def test_unvisited_child_is_infinite(self):
        assert ucb1_score(make_child(0, 0.0), 5, 1.0) == math.inf

    def test_ln_one_gives_plain_mean(self):
        assert ucb1_score(make_child(1, 0.0), 1, 1.0) == 0.0

    def test_hand_computed_value(self):
        # mean 0.5 plus sqrt(ln 8 / 2); checked against an independent calculator
        score = ucb1_score(make_child(2, 1.0), 8, 1.0)
        assert score == pytest.approx(1.519666990168809, abs=1e-12)

    def test_exploration_constant_scales_bonus(self):
        lo = ucb1_score(make_child(2, 1.0), 8, 0.5)
        hi = ucb1_score(make_child(2, 1.0), 8, 2.0)
        assert hi - 0.5 == pytest.approx(4 * (lo - 0.5))


class TestBackpropagate:
    def test_win_for_every_acting_player(self):
        path = [SearchNode()]
        for _ in range(3):
            path.append(SearchNode(move="m", acting_player=0))
        backpropagate(path, Outcome.win(0))
        assert all(n.visits == 1 for n in path)
        assert path[0].total_reward == 0.0  # root only counts the visit
        assert all(n.total_reward == 1 for n in path[1:])

    def test_alternating_perspectives(self):
        root = SearchNode()
        a = SearchNode(move="m", acting_player=0)
        b = SearchNode(move="m", acting_player=1)
        backpropagate([root, a, b], Outcome.win(0))
        assert a.total_reward == 1
        assert b.total_reward == -1

    def test_draw_adds_visits_only(self):
        nodes = [SearchNode(), SearchNode(move="m", acting_player=1)]
        backpropagate(nodes, Outcome.draw())
        assert [n.visits for n in nodes] == [1, 1]
        assert all(n.total_reward == 0 for n in nodes)


class TestChooseFinalMove:
    def make_root(self, stats):
        root = SearchNode()
        for i, (visits, total) in enumerate(stats):
            child = SearchNode(move=f"m{i}", acting_player=0)
            child.visits = visits
            child.total_reward = total
            root.children.append(child)
        return root

    def test_most_visited_wins(self):
        root = self.make_root([(10, 0.0), (5, 5.0), (3, 3.0)])
        assert choose_final_move(root) == "m0"

    def test_tie_breaks_on_mean_reward(self):
        root = self.make_root([(8, 1.6), (8, 4.8)])
        assert choose_final_move(root) == "m1"

    def test_full_tie_keeps_first_created(self):
        root = self.make_root([(8, 4.0), (8, 4.0)])
        assert choose_final_move(root) == "m0"

    def test_requires_a_visited_child(self):
        with pytest.raises(ValueError):
            choose_final_move(self.make_root([(0, 0.0)]))


class TestSimulatePlayout:
    def test_terminal_input_returns_its_outcome(self):
        game = two_ply_win_lose()
        rng = spawn_game_rng(0, 0)
        assert simulate_playout(game, "p1_wins", 10, rng) == Outcome.win(1)

    def test_forced_line_reaches_the_win(self):
        game = forced_line(length=3, winner=0)
        rng = spawn_game_rng(0, 0)
        assert simulate_playout(game, "n0", 50, rng) == Outcome.win(0)

    def test_depth_cap_yields_draw(self):
        game = cycling_game()
        rng = spawn_game_rng(0, 0)
        assert simulate_playout(game, "root", 10, rng) == Outcome.draw()


class TestRunSearch:
    def test_single_legal_move_is_returned(self):
        game = forced_line(length=4)
        move = run_search(game, "n0", SearchBudget(3), rng=spawn_game_rng(0, 0))
        assert move == "only"

    def test_terminal_root_rejected(self):
        game = two_ply_win_lose()
        with pytest.raises(ValueError):
            run_search(game, "p0_wins", SearchBudget(5), rng=spawn_game_rng(0, 0))

    def test_picks_the_winning_move(self):
        game = two_ply_win_lose()
        for seed in range(10):
            move = run_search(game, "root", SearchBudget(50), rng=spawn_game_rng(seed, 0))
            assert move == "A"

    def test_root_visits_equal_rollouts(self):
        # re-run the loop manually to inspect the tree
        from playlab.mcts import SearchNode, _search_iteration

        game = random_tree_game(spawn_game_rng(7, 7))
        rng = spawn_game_rng(1, 0)
        root = SearchNode(untried_moves=game.legal_moves(game.root))
        for _ in range(37):
            _search_iteration(game, game.root, root, math.sqrt(2), 300, rng)
        assert root.visits == 37
        assert sum(c.visits for c in root.children) == 37

    def test_first_sweep_visits_every_child_once(self):
        from playlab.mcts import SearchNode, _search_iteration

        game = random_tree_game(spawn_game_rng(3, 1), depth=2, branching=4)
        rng = spawn_game_rng(2, 0)
        moves = game.legal_moves(game.root)
        root = SearchNode(untried_moves=moves)
        for _ in range(len(moves)):
            _search_iteration(game, game.root, root, math.sqrt(2), 300, rng)
        assert len(root.children) == len(moves)
        assert all(c.visits == 1 for c in root.children)

    def test_minimax_agreement_on_enumerable_games(self):
        hits = 0
        for seed in range(100):
            game = random_tree_game(spawn_game_rng(1000, seed), depth=3, branching=3)
            optimal = max(
                game.minimax(child) for _, child in game.nodes[game.root][1]
            )
            move = run_search(game, game.root, SearchBudget(400), rng=spawn_game_rng(seed, 0))
            chosen_child = game.apply_move(game.root, move, None)
            if game.minimax(chosen_child) == optimal:
                hits += 1
        assert hits >= 95, f"minimax agreement only {hits}/100"

    def test_perspective_consistency(self):
        # total rewards seen from one side equal the negation of the other side
        from playlab.mcts import SearchNode, _search_iteration

        game = random_tree_game(spawn_game_rng(5, 5))
        rng = spawn_game_rng(3, 0)
        root = SearchNode(untried_moves=game.legal_moves(game.root))
        for _ in range(200):
            _search_iteration(game, game.root, root, math.sqrt(2), 300, rng)

        def walk(node):
            for child in node.children:
                for grand in child.children:
                    assert grand.acting_player != child.acting_player
                walk(child)

        walk(root)
