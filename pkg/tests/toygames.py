"""Tiny fully-enumerable game domains used to test the search agent."""

from __future__ import annotations

from playlab.core import Game, Outcome


class TreeGame(Game):
    """Explicit game graph: states are node ids, no chance events.

    `nodes` maps id -> ("win", player) | ("draw",) | (player, [(label, child_id), ...]).
    """

    name = "tree"

    def __init__(self, nodes, root="root"):
        self.nodes = nodes
        self.root = root

    def initial_state(self, rng):
        return self.root

    def copy_state(self, state):
        return state

    def current_player(self, state):
        node = self.nodes[state]
        return node[0] if isinstance(node[0], int) else None

    def legal_moves(self, state):
        return [label for label, _ in self.nodes[state][1]]

    def apply_move(self, state, move, rng):
        for label, child in self.nodes[state][1]:
            if label == move:
                return child
        raise ValueError(f"illegal move {move} at {state}")

    def is_move_legal(self, state, move):
        node = self.nodes[state]
        if isinstance(node[0], str):
            return False
        return any(label == move for label, _ in node[1])

    def outcome(self, state):
        node = self.nodes[state]
        if node[0] == "win":
            return Outcome.win(node[1])
        if node[0] == "draw":
            return Outcome.draw()
        return Outcome.ongoing()

    def move_label(self, move):
        return str(move)

    def state_summary(self, state):
        return {"node": state}

    def minimax(self, state="root", _memo=None):
        """Exact value from player 0's perspective (+1/0/-1); acyclic only."""
        if _memo is None:
            _memo = {}
        if state in _memo:
            return _memo[state]
        node = self.nodes[state]
        if node[0] == "win":
            value = 1 if node[1] == 0 else -1
        elif node[0] == "draw":
            value = 0
        else:
            player, edges = node
            values = [self.minimax(child, _memo) for _, child in edges]
            value = max(values) if player == 0 else min(values)
        _memo[state] = value
        return value


def two_ply_win_lose():
    """Move A wins for player 0 immediately, move B loses."""
    return TreeGame(
        {
            "root": (0, [("A", "p0_wins"), ("B", "p1_wins")]),
            "p0_wins": ("win", 0),
            "p1_wins": ("win", 1),
        }
    )


def forced_line(length=3, winner=0):
    """Single legal move at every ply; terminal after `length` moves."""
    nodes = {}
    for i in range(length):
        nodes[f"n{i}"] = (i % 2, [("only", f"n{i + 1}")])
    nodes[f"n{length}"] = ("win", winner)
    return TreeGame(nodes, root="n0")


def cycling_game():
    """Two states that bounce forever; never terminal."""
    return TreeGame(
        {
            "root": (0, [("spin", "back")]),
            "back": (1, [("spin", "root")]),
        }
    )


def random_tree_game(rng, depth=3, branching=3):
    """Random alternating-turn game tree with win/draw leaves."""
    nodes = {}
    counter = [0]

    def build(level, player):
        name = f"n{counter[0]}"
        counter[0] += 1
        if level == depth:
            roll = rng.randbelow(10)
            nodes[name] = ("draw",) if roll < 2 else ("win", rng.randbelow(2))
            return name
        kids = []
        for b in range(branching):
            child = build(level + 1, 1 - player)
            kids.append((f"m{b}", child))
        nodes[name] = (player, kids)
        return name

    root = build(0, 0)
    return TreeGame(nodes, root=root)
