"""Experiment configuration and the seeded batch runner.

A run enumerates agent pairings, simulates `games_per_pairing` seeded
games per pairing, and returns traces in a deterministic order.  Each
game's random stream is a pure function of (master_seed, global game
index), so results never depend on worker count or scheduling.
"""

from __future__ import annotations

import json
import math
import multiprocessing
from dataclasses import dataclass, field, replace
from importlib import resources

from . import engine
from .cardonomicon import CardonomiconGame, load_cardset
from .mcts import DEFAULT_EXPLORATION, DEFAULT_PLAYOUT_DEPTH_CAP
from .scrabble import ScrabbleGame, load_dictionary
from .traces import GameTrace

DOMAINS = ("scrabble", "cardonomicon")

# Rollout budgets per named skill level; weak explores one move deep,
# strong roughly two, moderate halfway between.
SKILL_PRESETS = {
    "scrabble": {"weak": 50, "moderate": 650, "strong": 1250},
    "cardonomicon": {"weak": 100, "moderate": 2500, "strong": 5000},
}

DEFAULT_GAMES_PER_PAIRING = 100
DEFAULT_MASTER_SEED = 20150622

# The desk profile shrinks budgets and game counts to laptop/CI scale.
DESK_BUDGET_DIVISOR = 10
DESK_GAMES_PER_PAIRING = 30

_CONFIG_KEYS = {
    "domain", "pairings", "games_per_pairing", "master_seed", "exploration_c",
    "depth_cap", "dictionary", "cardset", "presets", "profile",
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    domain: str
    pairings: tuple[tuple[int, int], ...]
    games_per_pairing: int = DEFAULT_GAMES_PER_PAIRING
    master_seed: int = DEFAULT_MASTER_SEED
    exploration_c: float = DEFAULT_EXPLORATION
    depth_cap: int = DEFAULT_PLAYOUT_DEPTH_CAP
    dictionary_path: str | None = None  # None selects the shipped word list
    cardset_path: str | None = None  # None selects the shipped card set
    presets: dict = field(default_factory=dict, hash=False, compare=False)

    def total_games(self) -> int:
        return len(self.pairings) * self.games_per_pairing


def preset_table(domain: str, overrides: dict | None = None) -> dict[str, int]:
    table = dict(SKILL_PRESETS[domain])
    if overrides:
        for name, value in overrides.items():
            if name not in table:
                raise ConfigError(f"unknown preset name {name!r}")
            table[name] = int(value)
    return table


def resolve_budget(spec, presets: dict[str, int]) -> int:
    """A budget is a preset name or a positive rollout count."""
    if isinstance(spec, str):
        if spec in presets:
            return presets[spec]
        if spec.isdigit():
            return resolve_budget(int(spec), presets)
        raise ConfigError(
            f"unknown skill preset {spec!r} (expected {', '.join(presets)} or a number)"
        )
    rollouts = int(spec)
    if rollouts < 1:
        raise ConfigError(f"rollouts must be >= 1, got {rollouts}")
    return rollouts


def default_pairings(presets: dict[str, int]) -> tuple[tuple[int, int], ...]:
    """All 9 ordered pairings of the named skill levels."""
    levels = [presets[name] for name in ("weak", "moderate", "strong")]
    return tuple((a, b) for a in levels for b in levels)


def apply_desk_profile(config: ExperimentConfig) -> ExperimentConfig:
    """Divide budgets by 10 and cap games at the desk count."""
    pairings = tuple(
        (max(1, a // DESK_BUDGET_DIVISOR), max(1, b // DESK_BUDGET_DIVISOR))
        for a, b in config.pairings
    )
    return replace(
        config,
        pairings=pairings,
        games_per_pairing=min(config.games_per_pairing, DESK_GAMES_PER_PAIRING),
    )


def load_config(path) -> ExperimentConfig:
    """Parse a config file; IO and JSON problems surface as ConfigError."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_config(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None


def parse_config(source) -> ExperimentConfig:
    """Build a validated config from JSON text, a dict, or a stream."""
    try:
        if isinstance(source, (str, bytes)):
            doc = json.loads(source)
        elif hasattr(source, "read"):
            doc = json.load(source)
        else:
            doc = dict(source)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    unknown = sorted(set(doc) - _CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")

    domain = doc.get("domain")
    if domain not in DOMAINS:
        raise ConfigError(f"domain must be one of {', '.join(DOMAINS)}, got {domain!r}")

    presets = preset_table(domain, doc.get("presets"))
    raw_pairings = doc.get("pairings")
    if raw_pairings is None:
        pairings = default_pairings(presets)
    else:
        pairings = []
        for entry in raw_pairings:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise ConfigError(f"pairing must be a [p0, p1] pair, got {entry!r}")
            pairings.append(
                (resolve_budget(entry[0], presets), resolve_budget(entry[1], presets))
            )
        pairings = tuple(pairings)

    games = int(doc.get("games_per_pairing", DEFAULT_GAMES_PER_PAIRING))
    if games < 1:
        raise ConfigError("games_per_pairing must be >= 1")
    depth_cap = int(doc.get("depth_cap", DEFAULT_PLAYOUT_DEPTH_CAP))
    if depth_cap < 1:
        raise ConfigError("depth_cap must be >= 1")
    exploration_c = float(doc.get("exploration_c", DEFAULT_EXPLORATION))
    if not (exploration_c >= 0 and math.isfinite(exploration_c)):
        raise ConfigError("exploration_c must be a finite value >= 0")

    config = ExperimentConfig(
        domain=domain,
        pairings=pairings,
        games_per_pairing=games,
        master_seed=int(doc.get("master_seed", DEFAULT_MASTER_SEED)),
        exploration_c=exploration_c,
        depth_cap=depth_cap,
        dictionary_path=doc.get("dictionary"),
        cardset_path=doc.get("cardset"),
        presets=presets,
    )
    profile = doc.get("profile")
    if profile not in (None, "full", "desk"):
        raise ConfigError(f"unknown profile {profile!r} (expected desk or full)")
    if profile == "desk":
        config = apply_desk_profile(config)
    return config


def default_dictionary_path() -> str:
    return str(resources.files("playlab.data").joinpath("words_common.txt"))


def default_cardset_path() -> str:
    return str(resources.files("playlab.data").joinpath("cards_default.json"))


def build_game(config: ExperimentConfig):
    if config.domain == "scrabble":
        path = config.dictionary_path or default_dictionary_path()
        try:
            dictionary = load_dictionary(path)
        except OSError as exc:
            raise ConfigError(f"cannot load dictionary: {exc}") from None
        return ScrabbleGame(dictionary)
    path = config.cardset_path or default_cardset_path()
    try:
        cards = load_cardset(path)
    except OSError as exc:
        raise ConfigError(f"cannot load card set: {exc}") from None
    return CardonomiconGame(cards)


# -- batch execution -------------------------------------------------------

_WORKER_RUNTIME = None
_WORKER_CONFIG = None


def _game_specs(config: ExperimentConfig):
    index = 0
    for p0, p1 in config.pairings:
        for _ in range(config.games_per_pairing):
            yield (index, p0, p1)
            index += 1


def _simulate_one(runtime, config: ExperimentConfig, spec) -> GameTrace:
    index, p0, p1 = spec
    return runtime.simulate(
        p0_rollouts=p0,
        p1_rollouts=p1,
        exploration_c=config.exploration_c,
        depth_cap=config.depth_cap,
        master_seed=config.master_seed,
        game_index=index,
    )


def _worker_init(config: ExperimentConfig, engine_name: str):
    global _WORKER_RUNTIME, _WORKER_CONFIG
    _WORKER_CONFIG = config
    _WORKER_RUNTIME = engine.make_runtime(build_game(config), engine_name)


def _worker_run(spec):
    return _simulate_one(_WORKER_RUNTIME, _WORKER_CONFIG, spec)


def run_experiment(
    config: ExperimentConfig,
    jobs: int = 1,
    engine_name: str = engine.AUTO,
    progress=None,
) -> list[GameTrace]:
    """Simulate the full pairing grid; traces come back ordered by game index.

    `progress`, when given, is called with (done, total) after every game.
    """
    specs = list(_game_specs(config))
    total = len(specs)
    traces: list[GameTrace | None] = [None] * total
    if jobs <= 1:
        runtime = engine.make_runtime(build_game(config), engine_name)
        for done, spec in enumerate(specs, start=1):
            traces[spec[0]] = _simulate_one(runtime, config, spec)
            if progress:
                progress(done, total)
    else:
        ctx = multiprocessing.get_context()
        with ctx.Pool(jobs, initializer=_worker_init, initargs=(config, engine_name)) as pool:
            done = 0
            for trace in pool.imap_unordered(_worker_run, specs, chunksize=1):
                traces[trace.game_index] = trace
                done += 1
                if progress:
                    progress(done, total)
    return traces  # type: ignore[return-value]
