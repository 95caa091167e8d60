"""The compiled kernel must reproduce the pure engine trace for trace.

This is the contract that lets the rest of the test suite validate game
logic on the pure implementation while experiments run compiled.
"""

import pytest

from playlab import engine
from playlab.cardonomicon import CardDef, CardonomiconGame, default_cardset
from playlab.scrabble import Dictionary, ScrabbleGame

pytestmark = pytest.mark.skipif(
    not engine.fast_available(), reason="compiled engine not built"
)

WORDS = [
    "AT", "CAT", "TAG", "GOAT", "TO", "EAR", "RAT", "TAR", "ART", "CART",
    "CARGO", "GO", "OR", "ROT", "COG", "COAT", "OAT", "EAT", "ATE", "TEA",
    "NET", "TEN", "ANT", "TAN", "NAG", "RAN", "EARN", "NEAR", "GONE", "NOTE",
    "TONE", "RATE", "TEAR", "GATE", "GEAR", "GREAT", "ORGAN", "ARGON", "GRANT",
    "ICON", "CON", "NOR", "NOT", "TON", "ONE", "AGO", "AGE", "ERA", "ORE", "TOE",
]


def small_scrabble(size=9, target=60):
    counts = [0] * 26
    for letter, n in {"A": 7, "C": 3, "E": 6, "G": 4, "I": 3, "N": 5, "O": 6, "R": 5, "T": 6}.items():
        counts[ord(letter) - 65] = n
    return ScrabbleGame(Dictionary(WORDS), size=size, bag_counts=counts, target_score=target)


def varied_cardset():
    stats = [(1, 2, 1), (1, 1, 3), (2, 3, 2), (2, 2, 4), (3, 4, 3), (3, 2, 6),
             (4, 5, 4), (4, 3, 7), (5, 6, 5), (5, 2, 9), (6, 7, 6), (6, 4, 9),
             (7, 8, 7), (7, 3, 12), (8, 9, 8), (8, 5, 11), (9, 10, 9), (9, 6, 12),
             (10, 12, 10), (10, 7, 14)]
    return [CardDef(f"c{i:02d}", c, a, h) for i, (c, a, h) in enumerate(stats)]


def both_runtimes(game):
    return engine.make_runtime(game, engine.PURE), engine.make_runtime(game, engine.FAST)


class TestTraceParity:
    @pytest.mark.parametrize("seed", range(6))
    def test_cardonomicon_traces_identical(self, seed):
        pure, fast = both_runtimes(CardonomiconGame(default_cardset()))
        a = pure.simulate(8, 13, 1.4142135623730951, 300, seed, 0)
        b = fast.simulate(8, 13, 1.4142135623730951, 300, seed, 0)
        assert a == b

    @pytest.mark.parametrize("seed", range(4))
    def test_scrabble_traces_identical(self, seed):
        pure, fast = both_runtimes(small_scrabble())
        a = pure.simulate(6, 11, 1.4142135623730951, 300, seed, 0)
        b = fast.simulate(6, 11, 1.4142135623730951, 300, seed, 0)
        assert a == b

    def test_depth_cap_parity(self):
        # tight caps force draw-by-cap playouts through both backends
        pure, fast = both_runtimes(CardonomiconGame(varied_cardset()))
        a = pure.simulate(20, 20, 1.4142135623730951, 7, 99, 3)
        b = fast.simulate(20, 20, 1.4142135623730951, 7, 99, 3)
        assert a == b

    def test_exploration_constant_parity(self):
        pure, fast = both_runtimes(CardonomiconGame(varied_cardset()))
        for c in (0.0, 0.5, 2.5):
            a = pure.simulate(15, 15, c, 300, 7, 1)
            b = fast.simulate(15, 15, c, 300, 7, 1)
            assert a == b

    def test_full_board_scrabble_parity(self):
        # standard 15x15 board and tile set, shipped-dictionary subset
        game = ScrabbleGame(Dictionary(WORDS), target_score=80)
        pure, fast = both_runtimes(game)
        a = pure.simulate(4, 7, 1.4142135623730951, 300, 11, 2)
        b = fast.simulate(4, 7, 1.4142135623730951, 300, 11, 2)
        assert a == b


class TestBackendSelection:
    def test_auto_prefers_fast(self):
        rt = engine.make_runtime(CardonomiconGame(default_cardset()), engine.AUTO)
        assert rt.backend == engine.FAST

    def test_unknown_engine_rejected(self):
        with pytest.raises(ValueError):
            engine.resolve_backend("warp")

    def test_unsupported_game_falls_back_to_pure(self):
        from toygames import two_ply_win_lose

        rt = engine.make_runtime(two_ply_win_lose(), engine.AUTO)
        assert rt.backend == engine.PURE
