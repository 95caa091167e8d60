"""Strategy-design metrics over collections of playtraces.

Four families, all pure functions of the trace list (order never matters):

* summaries: win rates and game lengths per agent pairing
* atoms: per-action usage versus availability, split by skill
* chains: frequent itemsets of actions, as combos (within one turn) or
  counters (across consecutive opposing turns)
* action spaces: how many options a player has per turn, and how many
  distinct actions actually get used there
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from statistics import fmean, median
from typing import Callable, Iterable, Sequence

from .traces import GameTrace, WINNER_DRAW, WINNER_P0, WINNER_P1

BOOKKEEPING_LABELS = frozenset({"pass", "end"})


def _skill_of_player(trace: GameTrace, player: int) -> int:
    return trace.rollouts_of(player)


# -- summaries -----------------------------------------------------------


@dataclass(frozen=True)
class PairingSummary:
    p0_rollouts: int
    p1_rollouts: int
    games: int
    p0_wins: int
    p1_wins: int
    draws: int
    win_rate_p0: float
    win_rate_first_player: float
    draw_rate: float
    mean_turns: float
    median_turns: float

    def as_row(self) -> dict:
        return {
            "p0_rollouts": self.p0_rollouts,
            "p1_rollouts": self.p1_rollouts,
            "games": self.games,
            "p0_wins": self.p0_wins,
            "p1_wins": self.p1_wins,
            "draws": self.draws,
            "win_rate_p0": self.win_rate_p0,
            "win_rate_first_player": self.win_rate_first_player,
            "draw_rate": self.draw_rate,
            "mean_turns": self.mean_turns,
            "median_turns": self.median_turns,
        }


@dataclass(frozen=True)
class SummaryReport:
    pairings: tuple[PairingSummary, ...]

    def rows(self) -> list[dict]:
        return [p.as_row() for p in self.pairings]

    def pairing(self, p0: int, p1: int) -> PairingSummary:
        for p in self.pairings:
            if p.p0_rollouts == p0 and p.p1_rollouts == p1:
                return p
        raise KeyError((p0, p1))


def summarize(traces: Sequence[GameTrace]) -> SummaryReport:
    """Win-rate matrix and game lengths, grouped by (p0, p1) rollout pairing.

    Player 0 always takes the first turn, so the first-turn win rate of a
    pairing equals player 0's; the full pairing grid covers both orders.
    """
    domains = {t.domain for t in traces}
    if len(domains) > 1:
        raise ValueError(f"traces mix domains: {sorted(domains)}")
    groups: dict[tuple[int, int], list[GameTrace]] = defaultdict(list)
    for t in traces:
        groups[(t.p0_rollouts, t.p1_rollouts)].append(t)
    pairings = []
    for (p0, p1) in sorted(groups):
        batch = groups[(p0, p1)]
        games = len(batch)
        p0_wins = sum(1 for t in batch if t.winner == WINNER_P0)
        p1_wins = sum(1 for t in batch if t.winner == WINNER_P1)
        draws = sum(1 for t in batch if t.winner == WINNER_DRAW)
        lengths = [t.turn_count for t in batch]
        pairings.append(
            PairingSummary(
                p0_rollouts=p0,
                p1_rollouts=p1,
                games=games,
                p0_wins=p0_wins,
                p1_wins=p1_wins,
                draws=draws,
                win_rate_p0=p0_wins / games,
                win_rate_first_player=p0_wins / games,
                draw_rate=draws / games,
                mean_turns=fmean(lengths),
                median_turns=float(median(lengths)),
            )
        )
    return SummaryReport(tuple(pairings))


# -- atoms ---------------------------------------------------------------


@dataclass(frozen=True)
class AtomRow:
    skill: int
    label: str
    times_chosen: int
    times_available: int
    usage_rate: float

    def as_row(self) -> dict:
        return {
            "skill": self.skill,
            "label": str(self.label),
            "times_chosen": self.times_chosen,
            "times_available": self.times_available,
            "usage_rate": self.usage_rate,
        }


@dataclass(frozen=True)
class AtomReport:
    atoms: tuple[AtomRow, ...]

    def rows(self) -> list[dict]:
        return [a.as_row() for a in self.atoms]

    def by_label(self, skill: int) -> dict[str, AtomRow]:
        return {a.label: a for a in self.atoms if a.skill == skill}


def atom_report(
    traces: Iterable[GameTrace],
    projection: Callable[[str], object] | None = None,
    skill_of: Callable[[GameTrace, int], int] = _skill_of_player,
) -> AtomReport:
    """Usage rate of each action label per skill level.

    Availability is counted per decision point; a label that was never
    available never appears.  Bookkeeping moves (pass / end turn) are
    excluded.  `projection` optionally collapses labels (word length, for
    example) before counting.
    """
    chosen: Counter = Counter()
    available: Counter = Counter()
    for trace in traces:
        for turn in trace.turns:
            skill = skill_of(trace, turn.player)
            for record in turn.moves:
                options = {
                    label if projection is None else projection(label)
                    for label in record.available_labels
                    if label not in BOOKKEEPING_LABELS
                }
                for key in options:
                    available[(skill, key)] += 1
                if record.chosen_label not in BOOKKEEPING_LABELS:
                    key = (
                        record.chosen_label
                        if projection is None
                        else projection(record.chosen_label)
                    )
                    chosen[(skill, key)] += 1
    atoms = [
        AtomRow(
            skill=skill,
            label=label,
            times_chosen=chosen.get((skill, label), 0),
            times_available=n_avail,
            usage_rate=chosen.get((skill, label), 0) / n_avail,
        )
        for (skill, label), n_avail in available.items()
    ]
    atoms.sort(key=lambda a: (a.skill, str(a.label)))
    return AtomReport(tuple(atoms))


def word_length_projection(label: str) -> int:
    return len(label)


# -- chains (frequent itemset mining) -------------------------------------


def mine_frequent_itemsets(
    transactions: Sequence[Iterable[str]], min_support: float
) -> list[tuple[frozenset, float]]:
    """Classic Apriori over label sets.

    Returns every itemset (size >= 1) whose support, the fraction of
    transactions containing it, reaches `min_support`.  Candidates are
    grown levelwise and pruned by anti-monotonicity.
    """
    if not (0.0 < min_support <= 1.0):
        raise ValueError("min_support must be in (0, 1]")
    sets = [frozenset(t) for t in transactions]
    n = len(sets)
    if n == 0:
        return []

    item_counts = Counter(item for t in sets for item in t)
    frequent: dict[frozenset, int] = {
        frozenset([item]): count
        for item, count in item_counts.items()
        if count / n >= min_support
    }
    result = dict(frequent)
    level = frequent
    k = 2
    while level:
        prev = sorted(tuple(sorted(s)) for s in level)
        prev_set = set(level)
        candidates = set()
        for i in range(len(prev)):
            for j in range(i + 1, len(prev)):
                if prev[i][: k - 2] != prev[j][: k - 2]:
                    break  # sorted order: no further join partners for i
                cand = frozenset(prev[i]) | frozenset(prev[j])
                if len(cand) != k:
                    continue
                if all(cand - {item} in prev_set for item in cand):
                    candidates.add(cand)
        counts = {c: 0 for c in candidates}
        for t in sets:
            for c in candidates:
                if c <= t:
                    counts[c] += 1
        level = {c: cnt for c, cnt in counts.items() if cnt / n >= min_support}
        result.update(level)
        k += 1
    ranked = [(itemset, count / n) for itemset, count in result.items()]
    ranked.sort(key=lambda pair: (-pair[1], len(pair[0]), tuple(sorted(pair[0]))))
    return ranked


@dataclass(frozen=True)
class ItemsetRow:
    items: tuple[str, ...]
    support: float

    def as_row(self) -> dict:
        return {"items": "|".join(self.items), "support": self.support}


@dataclass(frozen=True)
class ChainReport:
    kind: str  # "combo" | "counter"
    min_support: float
    transaction_count: int
    itemsets: tuple[ItemsetRow, ...]

    def rows(self) -> list[dict]:
        return [
            {"kind": self.kind, **r.as_row(), "transactions": self.transaction_count}
            for r in self.itemsets
        ]

    def support_of(self, *items: str) -> float | None:
        target = tuple(sorted(items))
        for row in self.itemsets:
            if row.items == target:
                return row.support
        return None


OPP_TAG = "opp:"
SELF_TAG = "self:"


def combo_transactions(traces: Iterable[GameTrace]) -> list[frozenset]:
    """One transaction per turn with two or more substantive moves."""
    out = []
    for trace in traces:
        for turn in trace.turns:
            labels = {
                m.chosen_label for m in turn.moves if m.chosen_label not in BOOKKEEPING_LABELS
            }
            if len(labels) >= 2:
                out.append(frozenset(labels))
    return out


def counter_transactions(traces: Iterable[GameTrace]) -> list[frozenset]:
    """One transaction per consecutive pair of opposing turns.

    The earlier turn's labels carry the opp: tag, the reply's labels the
    self: tag; every consecutive pair counts toward the support base even
    when one side only passed.
    """
    out = []
    for trace in traces:
        turns = trace.turns
        for i in range(len(turns) - 1):
            first = {
                OPP_TAG + m.chosen_label
                for m in turns[i].moves
                if m.chosen_label not in BOOKKEEPING_LABELS
            }
            second = {
                SELF_TAG + m.chosen_label
                for m in turns[i + 1].moves
                if m.chosen_label not in BOOKKEEPING_LABELS
            }
            out.append(frozenset(first | second))
    return out


def chain_report(
    traces: Sequence[GameTrace], kind: str, min_support: float = 0.05
) -> ChainReport:
    """Frequent combos or counters; counter itemsets must span both sides."""
    if kind == "combo":
        transactions = combo_transactions(traces)
        mined = mine_frequent_itemsets(transactions, min_support) if transactions else []
    elif kind == "counter":
        transactions = counter_transactions(traces)
        mined = mine_frequent_itemsets(transactions, min_support) if transactions else []
        mined = [
            (itemset, support)
            for itemset, support in mined
            if any(i.startswith(OPP_TAG) for i in itemset)
            and any(i.startswith(SELF_TAG) for i in itemset)
        ]
    else:
        raise ValueError(f"unknown chain kind {kind!r} (expected combo or counter)")
    return ChainReport(
        kind=kind,
        min_support=min_support,
        transaction_count=len(transactions),
        itemsets=tuple(
            ItemsetRow(items=tuple(sorted(s)), support=support) for s, support in mined
        ),
    )


# -- action spaces ---------------------------------------------------------


@dataclass(frozen=True)
class ActionSpaceRow:
    skill: int
    turn_index: int
    games: int
    mean_available: float
    median_available: float
    unique_labels_chosen: int

    def as_row(self) -> dict:
        return {
            "skill": self.skill,
            "turn_index": self.turn_index,
            "games": self.games,
            "mean_available": self.mean_available,
            "median_available": self.median_available,
            "unique_labels_chosen": self.unique_labels_chosen,
        }


@dataclass(frozen=True)
class ActionSpaceReport:
    points: tuple[ActionSpaceRow, ...]

    def rows(self) -> list[dict]:
        return [p.as_row() for p in self.points]

    def at(self, skill: int, turn_index: int) -> ActionSpaceRow:
        for p in self.points:
            if p.skill == skill and p.turn_index == turn_index:
                return p
        raise KeyError((skill, turn_index))


def action_space_report(
    traces: Iterable[GameTrace],
    skill_of: Callable[[GameTrace, int], int] = _skill_of_player,
) -> ActionSpaceReport:
    """Option counts per turn index and skill level.

    Availability is sampled at the first decision point of each turn (the
    comparable anchor across domains); only games reaching a turn index
    contribute to it.  Unique labels count distinct substantive choices
    made anywhere in those turns.
    """
    counts: dict[tuple[int, int], list[int]] = defaultdict(list)
    uniques: dict[tuple[int, int], set] = defaultdict(set)
    for trace in traces:
        for turn in trace.turns:
            key = (skill_of(trace, turn.player), turn.turn_index)
            if turn.moves:
                counts[key].append(turn.moves[0].available_count)
            for record in turn.moves:
                if record.chosen_label not in BOOKKEEPING_LABELS:
                    uniques[key].add(record.chosen_label)
    points = [
        ActionSpaceRow(
            skill=skill,
            turn_index=turn_index,
            games=len(samples),
            mean_available=fmean(samples),
            median_available=float(median(samples)),
            unique_labels_chosen=len(uniques.get((skill, turn_index), ())),
        )
        for (skill, turn_index), samples in sorted(counts.items())
    ]
    return ActionSpaceReport(tuple(points))
