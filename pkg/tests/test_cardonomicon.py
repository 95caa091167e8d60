import io
import json

import pytest

from playlab.cardonomicon import (
    ATTACK,
    END,
    END_TURN,
    HERO,
    PLAY,
    CardDef,
    CardSetError,
    CardonomiconGame,
    default_cardset,
    load_cardset,
)
from playlab.cardonomicon.game import CardonomiconState, PlayerSide
from playlab.core import Outcome
from playlab.rng import spawn_game_rng


def make_cards(n=20):
    return [CardDef(f"C{i}", mana_cost=(i % 10) + 1, attack=i % 5 + 1, health=i % 6 + 1) for i in range(n)]


def bare_state(game, to_move=0, turn_counter=1):
    sides = [PlayerSide(20, 1, 1, [], [], []) for _ in (0, 1)]
    return CardonomiconState(sides, to_move, turn_counter)


def card(game, name):
    return next(i for i, c in enumerate(game.cards) if c.name == name)


class TestCardset:
    def test_default_cardset_loads_twenty(self):
        cards = default_cardset()
        assert len(cards) == 20
        assert len({c.name for c in cards}) == 20
        assert all(1 <= c.mana_cost <= 10 for c in cards)

    def test_wrong_count_rejected(self):
        doc = [{"name": f"X{i}", "mana_cost": 1, "attack": 1, "health": 1} for i in range(19)]
        with pytest.raises(CardSetError, match="exactly 20"):
            load_cardset(doc)

    def test_zero_health_rejected(self):
        doc = [{"name": f"X{i}", "mana_cost": 1, "attack": 1, "health": 1} for i in range(20)]
        doc[7]["health"] = 0
        with pytest.raises(CardSetError, match="health"):
            load_cardset(doc)

    def test_duplicate_names_rejected(self):
        doc = [{"name": "Same", "mana_cost": 1, "attack": 1, "health": 1} for _ in range(20)]
        with pytest.raises(CardSetError, match="duplicate"):
            load_cardset(doc)

    def test_loads_from_stream(self):
        doc = {"cards": [{"name": f"X{i}", "mana_cost": 1, "attack": 1, "health": 2} for i in range(20)]}
        cards = load_cardset(io.StringIO(json.dumps(doc)))
        assert len(cards) == 20


class TestLegalMoves:
    def test_mana_gates_plays(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        cheap = next(i for i, c in enumerate(game.cards) if c.mana_cost == 2)
        costly = next(i for i, c in enumerate(game.cards) if c.mana_cost == 5)
        state.sides[0].hand = [cheap, costly]
        state.sides[0].mana_available = 3
        moves = game.legal_moves(state)
        assert (PLAY, cheap) in moves
        assert (PLAY, costly) not in moves
        assert moves[-1] == END_TURN

    def test_attack_cross_product(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        state.sides[0].board = [[0, 3, True], [1, 3, True]]
        state.sides[1].board = [[2, 3, True]]
        state.sides[0].mana_available = 0
        moves = game.legal_moves(state)
        attacks = [m for m in moves if m[0] == ATTACK]
        assert attacks == [
            (ATTACK, 0, 2), (ATTACK, 0, HERO),
            (ATTACK, 1, 2), (ATTACK, 1, HERO),
        ]

    def test_nothing_affordable_leaves_end_only(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        costly = next(i for i, c in enumerate(game.cards) if c.mana_cost >= 2)
        state.sides[0].hand = [costly]
        state.sides[0].mana_available = 1
        state.sides[0].board = [[5, 2, False]]  # summoning sickness
        assert game.legal_moves(state) == [END_TURN]


class TestApply:
    def test_mutual_destruction(self):
        cards = [CardDef("A23", 1, 2, 3), CardDef("B32", 1, 3, 2)] + make_cards(18)
        game = CardonomiconGame(cards)
        state = bare_state(game)
        state.sides[0].board = [[0, 3, True]]
        state.sides[1].board = [[1, 2, True]]
        new = game.apply_move(state, (ATTACK, 0, 1), spawn_game_rng(0, 0))
        assert new.sides[0].board == []
        assert new.sides[1].board == []

    def test_hero_attack_draws_no_retaliation(self):
        cards = [CardDef("Big", 1, 5, 4)] + make_cards(19)
        game = CardonomiconGame(cards)
        state = bare_state(game)
        state.sides[0].board = [[0, 4, True]]
        new = game.apply_move(state, (ATTACK, 0, HERO), spawn_game_rng(0, 0))
        assert new.sides[1].hero_health == 15
        assert new.sides[0].board == [[0, 4, False]]

    def test_play_deducts_mana_and_summons_sick(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        cheap = next(i for i, c in enumerate(game.cards) if c.mana_cost == 1)
        state.sides[0].hand = [cheap]
        state.sides[0].mana_available = 3
        new = game.apply_move(state, (PLAY, cheap), spawn_game_rng(0, 0))
        assert new.sides[0].mana_available == 2
        assert new.sides[0].board == [[cheap, game.cards[cheap].health, False]]
        assert new.sides[0].hand == []

    def test_end_turn_ramps_mana_and_readies_board(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        state.sides[1].mana_cap = 4
        state.sides[1].board = [[3, 2, False]]
        state.sides[1].deck = [9, 11]
        new = game.apply_move(state, END_TURN, spawn_game_rng(0, 0))
        assert new.to_move == 1
        assert new.sides[1].mana_cap == 5
        assert new.sides[1].mana_available == 5
        assert new.sides[1].board[0][2] is True
        assert len(new.sides[1].hand) == 1
        assert new.turn_counter == 2

    def test_mana_cap_stops_at_ten(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        state.sides[1].mana_cap = 10
        new = game.apply_move(state, END_TURN, spawn_game_rng(0, 0))
        assert new.sides[1].mana_cap == 10

    def test_empty_deck_draw_is_noop(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        new = game.apply_move(state, END_TURN, spawn_game_rng(0, 0))
        assert new.sides[1].hand == []

    def test_illegal_move_raises(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        with pytest.raises(ValueError):
            game.apply_move(state, (PLAY, 5), spawn_game_rng(0, 0))


class TestOutcome:
    def test_dead_hero_loses(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        state.sides[1].hero_health = 0
        assert game.outcome(state) == Outcome.win(0)
        state.sides[1].hero_health = -3
        assert game.outcome(state) == Outcome.win(0)

    def test_turn_cap_draws(self):
        game = CardonomiconGame(make_cards(), turn_cap=100)
        state = bare_state(game, turn_counter=101)
        assert game.outcome(state) == Outcome.draw()
        state.turn_counter = 100
        assert game.outcome(state) == Outcome.ongoing()


class TestInvariantsAndLabels:
    def test_labels(self):
        game = CardonomiconGame(make_cards())
        assert game.move_label((PLAY, 3)) == "play:C3"
        assert game.move_label((ATTACK, 3, 5)) == "attack:C3>C5"
        assert game.move_label((ATTACK, 3, HERO)) == "attack:C3>HERO"
        assert game.move_label(END_TURN) == "end"

    def test_card_conservation_through_random_play(self):
        game = CardonomiconGame(default_cardset())
        rng = spawn_game_rng(11, 0)
        state = game.initial_state(rng)
        graveyards = [0, 0]

        def census(s):
            # deck + hand + board (+ graveyard inferred) stays at 20 per side
            return [
                len(s.sides[p].deck) + len(s.sides[p].hand) + len(s.sides[p].board)
                for p in (0, 1)
            ]

        before = census(state)
        assert before == [20, 20]
        steps = 0
        while not game.outcome(state).is_terminal and steps < 400:
            moves = game.legal_moves(state)
            move = moves[rng.randbelow(len(moves))]
            prev = census(state)
            state = game.apply_move(state, move, rng)
            after = census(state)
            if move[0] == ATTACK and move[2] != HERO:
                assert prev[0] - after[0] in (0, 1) and prev[1] - after[1] in (0, 1)
            else:
                assert prev == after
            steps += 1

    def test_legal_moves_match_brute_force_on_random_states(self):
        game = CardonomiconGame(default_cardset())
        rng = spawn_game_rng(17, 0)
        state = game.initial_state(rng)
        steps = 0
        while not game.outcome(state).is_terminal and steps < 300:
            side = state.sides[state.to_move]
            enemy = state.sides[1 - state.to_move]
            expected = [
                (PLAY, c) for c in side.hand
                if game.cards[c].mana_cost <= side.mana_available
            ]
            for e in side.board:
                if e[2]:
                    expected.extend((ATTACK, e[0], t[0]) for t in enemy.board)
                    expected.append((ATTACK, e[0], HERO))
            expected.append(END_TURN)
            assert game.legal_moves(state) == expected
            moves = game.legal_moves(state)
            state = game.apply_move(state, moves[rng.randbelow(len(moves))], rng)
            steps += 1

    def test_no_attack_twice_and_no_attack_when_played(self):
        game = CardonomiconGame(make_cards())
        state = bare_state(game)
        state.sides[0].board = [[0, 3, True]]
        new = game.apply_move(state, (ATTACK, 0, HERO), spawn_game_rng(0, 0))
        assert not any(m[0] == ATTACK for m in game.legal_moves(new))

    def test_initial_state_hands_and_first_turn(self):
        game = CardonomiconGame(default_cardset())
        state = game.initial_state(spawn_game_rng(5, 0))
        assert state.to_move == 0
        assert state.turn_counter == 1
        assert len(state.sides[0].hand) == 5  # opening 4 plus the turn draw
        assert len(state.sides[1].hand) == 4
        assert state.sides[0].mana_cap == 1
        assert state.sides[0].mana_available == 1
        assert state.sides[1].mana_cap == 0
