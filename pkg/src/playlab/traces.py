"""Playtrace records and their JSONL persistence.

One trace is the complete record of one simulated game: every decision
point with the options that were available and the move that was chosen,
grouped into turns.  Files hold one JSON object per line with a schema
version, so partial files stay recoverable and streams can be processed
line by line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

SCHEMA_VERSION = 1

WINNER_P0 = "p0"
WINNER_P1 = "p1"
WINNER_DRAW = "draw"


@dataclass(frozen=True)
class MoveRecord:
    """One decision point: what was picked, out of what."""

    chosen_label: str
    available_labels: tuple[str, ...]  # sorted, de-duplicated
    available_count: int  # raw legal-move count before label de-duplication

    def __post_init__(self):
        if self.chosen_label not in self.available_labels:
            raise ValueError(f"chosen label {self.chosen_label!r} not among available labels")


@dataclass(frozen=True)
class TurnRecord:
    """One player's full run of moves until the turn passed (or game ended)."""

    turn_index: int  # 1-based
    player: int
    moves: tuple[MoveRecord, ...]
    state_summary: dict


@dataclass(frozen=True)
class GameTrace:
    domain: str
    p0_rollouts: int
    p1_rollouts: int
    master_seed: int
    game_index: int
    winner: str  # "p0" | "p1" | "draw"
    turns: tuple[TurnRecord, ...]
    schema_version: int = SCHEMA_VERSION

    @property
    def turn_count(self) -> int:
        return len(self.turns)

    def rollouts_of(self, player: int) -> int:
        return self.p0_rollouts if player == 0 else self.p1_rollouts

    def to_json_obj(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "domain": self.domain,
            "p0_rollouts": self.p0_rollouts,
            "p1_rollouts": self.p1_rollouts,
            "master_seed": self.master_seed,
            "game_index": self.game_index,
            "winner": self.winner,
            "turns": [
                {
                    "turn_index": t.turn_index,
                    "player": t.player,
                    "moves": [
                        {
                            "chosen": m.chosen_label,
                            "available": list(m.available_labels),
                            "available_count": m.available_count,
                        }
                        for m in t.moves
                    ],
                    "state_summary": t.state_summary,
                }
                for t in self.turns
            ],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "GameTrace":
        return GameTrace(
            schema_version=obj["schema_version"],
            domain=obj["domain"],
            p0_rollouts=obj["p0_rollouts"],
            p1_rollouts=obj["p1_rollouts"],
            master_seed=obj["master_seed"],
            game_index=obj["game_index"],
            winner=obj["winner"],
            turns=tuple(
                TurnRecord(
                    turn_index=t["turn_index"],
                    player=t["player"],
                    moves=tuple(
                        MoveRecord(
                            chosen_label=m["chosen"],
                            available_labels=tuple(m["available"]),
                            available_count=m["available_count"],
                        )
                        for m in t["moves"]
                    ),
                    state_summary=t["state_summary"],
                )
                for t in obj["turns"]
            ),
        )


class TraceFormatError(ValueError):
    pass


def trace_line(trace: GameTrace) -> str:
    """Canonical single-line encoding; field order is fixed for byte-stable files."""
    return json.dumps(trace.to_json_obj(), separators=(",", ":"))


def write_traces(traces: Iterable[GameTrace], sink) -> int:
    """Write one JSON object per line; returns the number written."""
    own = isinstance(sink, (str, bytes))
    fh = open(sink, "w", encoding="utf-8", newline="\n") if own else sink
    try:
        n = 0
        for trace in traces:
            fh.write(trace_line(trace))
            fh.write("\n")
            n += 1
        return n
    finally:
        if own:
            fh.close()


def read_traces(source) -> list[GameTrace]:
    """Read a JSONL trace file; malformed lines raise with their line number."""
    own = isinstance(source, (str, bytes))
    fh = open(source, "r", encoding="utf-8") if own else source
    try:
        traces = []
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                traces.append(GameTrace.from_json_obj(obj))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise TraceFormatError(f"line {lineno}: {exc}") from None
        return traces
    finally:
        if own:
            fh.close()
