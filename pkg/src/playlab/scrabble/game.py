"""Perfect-information simplified Scrabble with a race to a target score.

Differences from tournament rules are deliberate: open racks, no blanks,
no exchanges, no end-of-bag score adjustments, and the game ends as soon
as a player meets or exceeds the target score (default 150).
"""

from __future__ import annotations

from ..core import Game, Outcome, PLAYER_0, PLAYER_1
from ..rng import GameRng
from . import tiles
from .dictionary import Dictionary
from .game_types import ACROSS, DOWN, PASS, Placement, ScrabbleState
from .movegen import MoveGenerator

TARGET_SCORE = 150
RACK_SIZE = 7


class ScrabbleGame(Game):
    name = "scrabble"

    def __init__(
        self,
        dictionary: Dictionary,
        size: int = 15,
        bonus_layout: list[int] | None = None,
        letter_values: list[int] | None = None,
        bag_counts: list[int] | None = None,
        rack_size: int = RACK_SIZE,
        target_score: int = TARGET_SCORE,
    ):
        if size % 2 == 0 or size < 3:
            raise ValueError("board size must be odd and >= 3")
        self.dictionary = dictionary
        self.size = size
        self.bonus = list(bonus_layout) if bonus_layout is not None else tiles.standard_bonus_layout(size)
        if len(self.bonus) != size * size:
            raise ValueError("bonus layout does not match board size")
        self.letter_values = list(letter_values) if letter_values is not None else tiles.letter_values_array()
        self.bag_counts = list(bag_counts) if bag_counts is not None else tiles.letter_counts_array()
        self.rack_size = rack_size
        self.target_score = target_score
        self._generator = MoveGenerator(dictionary.trie_root(), size)

    # -- game interface -------------------------------------------------

    def initial_state(self, rng: GameRng) -> ScrabbleState:
        state = ScrabbleState(
            board=bytearray(self.size * self.size),
            racks=[[0] * 26, [0] * 26],
            bag=list(self.bag_counts),
            bag_total=sum(self.bag_counts),
            scores=[0, 0],
            to_move=PLAYER_0,
            passes=0,
            tiles_on_board=0,
        )
        for player in (PLAYER_0, PLAYER_1):
            self._refill(state, player, rng)
        return state

    def copy_state(self, state: ScrabbleState) -> ScrabbleState:
        return state.copy()

    def current_player(self, state: ScrabbleState) -> int:
        return state.to_move

    def legal_moves(self, state: ScrabbleState):
        rack = state.rack_counts(state.to_move)
        moves: list = self._generator.placements(state.board, rack, state.tiles_on_board)
        moves.append(PASS)
        return moves

    def move_label(self, move) -> str:
        return "pass" if move is PASS else move.word

    def is_move_legal(self, state: ScrabbleState, move) -> bool:
        if move is PASS:
            return True
        return self._placement_error(state, move) is None

    def apply_move(self, state: ScrabbleState, move, rng: GameRng) -> ScrabbleState:
        new = state.copy()
        if move is PASS:
            new.passes += 1
            new.to_move = 1 - new.to_move
            return new
        err = self._placement_error(state, move)
        if err is not None:
            raise ValueError(f"illegal placement {move}: {err}")
        player = new.to_move
        new.scores[player] += self.score_placement(state, move)
        rack = new.racks[player]
        size = self.size
        for (r, c), letter in zip(move.cells(), move.word):
            idx = r * size + c
            if new.board[idx] == 0:
                new.board[idx] = ord(letter) - 64
                rack[ord(letter) - 65] -= 1
                new.tiles_on_board += 1
        self._refill(new, player, rng)
        new.passes = 0
        new.to_move = 1 - player
        return new

    def outcome(self, state: ScrabbleState) -> Outcome:
        prev = 1 - state.to_move
        if state.scores[prev] >= self.target_score:
            return Outcome.win(prev)
        if state.scores[state.to_move] >= self.target_score:
            return Outcome.win(state.to_move)
        rack_empty = not any(state.racks[prev])
        if state.passes >= 2 or (state.bag_total == 0 and rack_empty):
            if state.scores[0] > state.scores[1]:
                return Outcome.win(PLAYER_0)
            if state.scores[1] > state.scores[0]:
                return Outcome.win(PLAYER_1)
            return Outcome.draw()
        return Outcome.ongoing()

    def state_summary(self, state: ScrabbleState) -> dict:
        return {"scores": list(state.scores), "bag": state.bag_total}

    # -- scoring ---------------------------------------------------------

    def score_placement(self, state: ScrabbleState, move: Placement) -> int:
        """Main word plus every cross word formed by newly placed tiles.

        Letter and word multipliers count only on cells covered this turn.
        """
        size = self.size
        board = state.board
        values = self.letter_values
        total = 0
        main_score = 0
        main_mult = 1
        for (r, c), letter in zip(move.cells(), move.word):
            idx = r * size + c
            value = values[ord(letter) - 65]
            if board[idx] != 0:
                main_score += value
                continue
            bonus = self.bonus[idx]
            letter_score = value * (2 if bonus == tiles.DL else 3 if bonus == tiles.TL else 1)
            word_mult = 2 if bonus == tiles.DW else 3 if bonus == tiles.TW else 1
            main_score += letter_score
            main_mult *= word_mult
            cross = self._cross_score(state, r, c, move.direction, letter_score)
            if cross is not None:
                total += cross * word_mult
        return total + main_score * main_mult

    def _cross_score(self, state, r, c, direction, new_letter_score):
        """Score of the perpendicular word through (r, c), or None if none forms."""
        size = self.size
        board = state.board
        dr, dc = (1, 0) if direction == ACROSS else (0, 1)
        rr, cc = r - dr, c - dc
        score = 0
        length = 1
        while 0 <= rr < size and 0 <= cc < size and board[rr * size + cc]:
            score += self.letter_values[board[rr * size + cc] - 1]
            length += 1
            rr, cc = rr - dr, cc - dc
        rr, cc = r + dr, c + dc
        while 0 <= rr < size and 0 <= cc < size and board[rr * size + cc]:
            score += self.letter_values[board[rr * size + cc] - 1]
            length += 1
            rr, cc = rr + dr, cc + dc
        if length < 2:
            return None
        return score + new_letter_score

    # -- validity --------------------------------------------------------

    def _placement_error(self, state: ScrabbleState, move: Placement) -> str | None:
        size = self.size
        word = move.word
        if len(word) < 2:
            return "word too short"
        if not self.dictionary.contains(word):
            return "not a dictionary word"
        dr, dc = (0, 1) if move.direction == ACROSS else (1, 0)
        end_r = move.row + dr * (len(word) - 1)
        end_c = move.col + dc * (len(word) - 1)
        if not (0 <= move.row < size and 0 <= move.col < size and end_r < size and end_c < size):
            return "out of bounds"
        br, bc = move.row - dr, move.col - dc
        if br >= 0 and bc >= 0 and state.board[br * size + bc]:
            return "word not maximal at start"
        ar, ac = end_r + dr, end_c + dc
        if ar < size and ac < size and state.board[ar * size + ac]:
            return "word not maximal at end"
        board = state.board
        needed: dict[str, int] = {}
        new_cells = []
        for (r, c), letter in zip(move.cells(), word):
            cell = board[r * size + c]
            if cell:
                if cell != ord(letter) - 64:
                    return "conflicts with existing tile"
            else:
                needed[letter] = needed.get(letter, 0) + 1
                new_cells.append((r, c, letter))
        if not new_cells:
            return "places no tiles"
        rack = state.racks[state.to_move]
        for letter, count in needed.items():
            if rack[ord(letter) - 65] < count:
                return "tiles not in rack"
        for r, c, letter in new_cells:
            if not self._cross_word_ok(state, r, c, letter, move.direction):
                return "invalid cross word"
        if state.tiles_on_board == 0:
            center = size // 2
            if not any(r == center and c == center for (r, c, _) in new_cells):
                return "first move must cover the center"
        else:
            connected = False
            for r, c, _ in new_cells:
                if (
                    (r > 0 and board[(r - 1) * size + c])
                    or (r + 1 < size and board[(r + 1) * size + c])
                    or (c > 0 and board[r * size + c - 1])
                    or (c + 1 < size and board[r * size + c + 1])
                ):
                    connected = True
                    break
            if not connected:
                return "not connected to existing tiles"
        return None

    def _cross_word_ok(self, state, r, c, letter, direction) -> bool:
        size = self.size
        board = state.board
        dr, dc = (1, 0) if direction == ACROSS else (0, 1)
        before = []
        rr, cc = r - dr, c - dc
        while 0 <= rr < size and 0 <= cc < size and board[rr * size + cc]:
            before.append(chr(64 + board[rr * size + cc]))
            rr, cc = rr - dr, cc - dc
        after = []
        rr, cc = r + dr, c + dc
        while 0 <= rr < size and 0 <= cc < size and board[rr * size + cc]:
            after.append(chr(64 + board[rr * size + cc]))
            rr, cc = rr + dr, cc + dc
        if not before and not after:
            return True
        word = "".join(reversed(before)) + letter + "".join(after)
        return self.dictionary.contains(word)

    # -- helpers -----------------------------------------------------------

    def _refill(self, state: ScrabbleState, player: int, rng: GameRng) -> None:
        """Draw uniformly without replacement until the rack holds rack_size tiles."""
        rack = state.racks[player]
        while state.bag_total > 0 and sum(rack) < self.rack_size:
            pick = rng.randbelow(state.bag_total)
            acc = 0
            for i in range(26):
                acc += state.bag[i]
                if pick < acc:
                    state.bag[i] -= 1
                    rack[i] += 1
                    break
            state.bag_total -= 1
