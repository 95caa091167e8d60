"""Creature-combat card game: mana ramp, summoning sickness, retaliation.

Both players run an identical 20-card deck.  A turn is a sequence of
play/attack moves closed by an end-turn move; heroes start at 20 health
and the first hero at or below 0 loses.  There is deliberately no
catch-up mechanism for the second player.
"""

from __future__ import annotations

from ..core import Game, Outcome, PLAYER_0, PLAYER_1
from ..rng import GameRng
from .cards import CardDef

HERO = -1  # attack target sentinel
HERO_HEALTH = 20
MANA_CAP = 10
TURN_CAP = 100
OPENING_HAND = 4

PLAY, ATTACK, END = "play", "attack", "end"

END_TURN = (END,)


class PlayerSide:
    """One player's half of the table.

    `deck` and `hand` hold card indices into the shared definition list;
    `board` holds [card_index, current_health, can_attack] entries in play
    order.  A card index doubles as the instance id since names are unique.
    """

    __slots__ = ("hero_health", "mana_cap", "mana_available", "deck", "hand", "board")

    def __init__(self, hero_health, mana_cap, mana_available, deck, hand, board):
        self.hero_health = hero_health
        self.mana_cap = mana_cap
        self.mana_available = mana_available
        self.deck = deck
        self.hand = hand
        self.board = board

    def copy(self) -> "PlayerSide":
        return PlayerSide(
            self.hero_health,
            self.mana_cap,
            self.mana_available,
            list(self.deck),
            list(self.hand),
            [entry.copy() for entry in self.board],
        )


class CardonomiconState:
    __slots__ = ("sides", "to_move", "turn_counter")

    def __init__(self, sides, to_move, turn_counter):
        self.sides = sides
        self.to_move = to_move
        self.turn_counter = turn_counter

    def copy(self) -> "CardonomiconState":
        return CardonomiconState(
            [self.sides[0].copy(), self.sides[1].copy()], self.to_move, self.turn_counter
        )


class CardonomiconGame(Game):
    name = "cardonomicon"

    def __init__(
        self,
        cards: list[CardDef],
        opening_hand: int = OPENING_HAND,
        turn_cap: int = TURN_CAP,
        hero_health: int = HERO_HEALTH,
    ):
        self.cards = list(cards)
        self.opening_hand = opening_hand
        self.turn_cap = turn_cap
        self.hero_health = hero_health

    # -- game interface --------------------------------------------------

    def initial_state(self, rng: GameRng) -> CardonomiconState:
        sides = [
            PlayerSide(self.hero_health, 0, 0, list(range(len(self.cards))), [], [])
            for _ in (0, 1)
        ]
        state = CardonomiconState(sides, PLAYER_0, 0)
        for player in (PLAYER_0, PLAYER_1):
            for _ in range(self.opening_hand):
                self._draw(state, player, rng)
        self._begin_turn(state, PLAYER_0, rng)
        return state

    def copy_state(self, state: CardonomiconState) -> CardonomiconState:
        return state.copy()

    def current_player(self, state: CardonomiconState) -> int:
        return state.to_move

    def legal_moves(self, state: CardonomiconState):
        side = state.sides[state.to_move]
        enemy = state.sides[1 - state.to_move]
        moves = []
        for card in side.hand:
            if self.cards[card].mana_cost <= side.mana_available:
                moves.append((PLAY, card))
        for entry in side.board:
            if not entry[2]:
                continue
            attacker = entry[0]
            for target in enemy.board:
                moves.append((ATTACK, attacker, target[0]))
            moves.append((ATTACK, attacker, HERO))
        moves.append(END_TURN)
        return moves

    def move_label(self, move) -> str:
        kind = move[0]
        if kind == PLAY:
            return f"play:{self.cards[move[1]].name}"
        if kind == ATTACK:
            target = "HERO" if move[2] == HERO else self.cards[move[2]].name
            return f"attack:{self.cards[move[1]].name}>{target}"
        return "end"

    def is_move_legal(self, state: CardonomiconState, move) -> bool:
        kind = move[0]
        if kind == END:
            return True
        side = state.sides[state.to_move]
        if kind == PLAY:
            return move[1] in side.hand and self.cards[move[1]].mana_cost <= side.mana_available
        attacker = next((e for e in side.board if e[0] == move[1]), None)
        if attacker is None or not attacker[2]:
            return False
        if move[2] == HERO:
            return True
        return any(e[0] == move[2] for e in state.sides[1 - state.to_move].board)

    def apply_move(self, state: CardonomiconState, move, rng: GameRng) -> CardonomiconState:
        if not self.is_move_legal(state, move):
            raise ValueError(f"illegal move {move}")
        new = state.copy()
        player = new.to_move
        side = new.sides[player]
        enemy = new.sides[1 - player]
        kind = move[0]
        if kind == PLAY:
            card = move[1]
            side.hand.remove(card)
            side.mana_available -= self.cards[card].mana_cost
            side.board.append([card, self.cards[card].health, False])
        elif kind == ATTACK:
            attacker = next(e for e in side.board if e[0] == move[1])
            attacker[2] = False
            if move[2] == HERO:
                enemy.hero_health -= self.cards[attacker[0]].attack
            else:
                target = next(e for e in enemy.board if e[0] == move[2])
                target[1] -= self.cards[attacker[0]].attack
                attacker[1] -= self.cards[target[0]].attack
                if target[1] <= 0:
                    enemy.board.remove(target)
                if attacker[1] <= 0:
                    side.board.remove(attacker)
        else:
            new.to_move = 1 - player
            self._begin_turn(new, new.to_move, rng)
        return new

    def outcome(self, state: CardonomiconState) -> Outcome:
        if state.sides[1].hero_health <= 0:
            return Outcome.win(PLAYER_0)
        if state.sides[0].hero_health <= 0:
            return Outcome.win(PLAYER_1)
        if state.turn_counter > self.turn_cap:
            return Outcome.draw()
        return Outcome.ongoing()

    def state_summary(self, state: CardonomiconState) -> dict:
        return {
            "hero_health": [state.sides[0].hero_health, state.sides[1].hero_health],
            "mana_cap": [state.sides[0].mana_cap, state.sides[1].mana_cap],
        }

    # -- helpers -----------------------------------------------------------

    def _begin_turn(self, state: CardonomiconState, player: int, rng: GameRng) -> None:
        state.turn_counter += 1
        side = state.sides[player]
        side.mana_cap = min(side.mana_cap + 1, MANA_CAP)
        side.mana_available = side.mana_cap
        self._draw(state, player, rng)
        for entry in side.board:
            entry[2] = True

    def _draw(self, state: CardonomiconState, player: int, rng: GameRng) -> None:
        """Uniform draw from the remaining deck; empty deck is a no-op."""
        deck = state.sides[player].deck
        if deck:
            state.sides[player].hand.append(deck.pop(rng.randbelow(len(deck))))
