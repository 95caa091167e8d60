"""Independent brute-force oracles for placement generation and scoring.

Deliberately naive: try every (word, row, col, direction) against the
rules, and re-score from the post-placement board diff.  Shares no code
with the production generator or scorer.
"""

from __future__ import annotations

from playlab.scrabble.game_types import ACROSS, DOWN, Placement
from playlab.scrabble import tiles as T


def _runs_through(board, size, cells):
    """All maximal straight runs (len >= 2) touching any of `cells` on `board`."""
    runs = []
    seen = set()
    for (r, c) in cells:
        for dr, dc in ((0, 1), (1, 0)):
            rr, cc = r, c
            while rr - dr >= 0 and cc - dc >= 0 and board[(rr - dr) * size + (cc - dc)]:
                rr, cc = rr - dr, cc - dc
            start = (rr, cc, dr, dc)
            if start in seen:
                continue
            seen.add(start)
            run = []
            while rr < size and cc < size and board[rr * size + cc]:
                run.append((rr, cc))
                rr, cc = rr + dr, cc + dc
            if len(run) >= 2:
                runs.append(run)
    return runs


def oracle_is_legal(game, state, placement) -> bool:
    size = game.size
    word = placement.word
    if len(word) < 2 or word not in game.dictionary.words():
        return False
    dr, dc = (0, 1) if placement.direction == ACROSS else (1, 0)
    r_end = placement.row + dr * (len(word) - 1)
    c_end = placement.col + dc * (len(word) - 1)
    if placement.row < 0 or placement.col < 0 or r_end >= size or c_end >= size:
        return False
    # maximality along the main direction
    pr, pc = placement.row - dr, placement.col - dc
    if pr >= 0 and pc >= 0 and state.board[pr * size + pc]:
        return False
    nr, nc = r_end + dr, c_end + dc
    if nr < size and nc < size and state.board[nr * size + nc]:
        return False

    new_cells = {}
    rack_needed = {}
    for i, letter in enumerate(word):
        r, c = placement.row + dr * i, placement.col + dc * i
        existing = state.board[r * size + c]
        if existing:
            if existing != ord(letter) - 64:
                return False
        else:
            new_cells[(r, c)] = letter
            rack_needed[letter] = rack_needed.get(letter, 0) + 1
    if not new_cells:
        return False
    rack = state.racks[state.to_move]
    for letter, n in rack_needed.items():
        if rack[ord(letter) - 65] < n:
            return False

    # place on a scratch board, then re-scan every run touching a new cell
    scratch = bytearray(state.board)
    for (r, c), letter in new_cells.items():
        scratch[r * size + c] = ord(letter) - 64
    for run in _runs_through(scratch, size, list(new_cells)):
        text = "".join(chr(64 + scratch[r * size + c]) for r, c in run)
        if text not in game.dictionary.words():
            return False

    if state.tiles_on_board == 0:
        center = size // 2
        if (center, center) not in new_cells:
            return False
    else:
        connected = False
        for (r, c) in new_cells:
            for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if 0 <= rr < size and 0 <= cc < size and state.board[rr * size + cc]:
                    connected = True
        if not connected:
            return False
    return True


def _is_across_duplicate(game, state, placement) -> bool:
    """Down placements of a single tile that also read across are emitted
    by the across pass; the oracle drops them the same way."""
    if placement.direction != DOWN:
        return False
    size = game.size
    new = [
        (placement.row + i, placement.col)
        for i in range(len(placement.word))
        if not state.board[(placement.row + i) * size + placement.col]
    ]
    if len(new) != 1:
        return False
    r, c = new[0]
    left = c > 0 and state.board[r * size + c - 1]
    right = c + 1 < size and state.board[r * size + c + 1]
    return bool(left or right)


def brute_force_placements(game, state) -> list[Placement]:
    size = game.size
    out = []
    for word in sorted(game.dictionary.words()):
        for direction in (ACROSS, DOWN):
            dr, dc = (0, 1) if direction == ACROSS else (1, 0)
            for row in range(size - dr * (len(word) - 1)):
                for col in range(size - dc * (len(word) - 1)):
                    cand = Placement(row, col, direction, word)
                    if not oracle_is_legal(game, state, cand):
                        continue
                    if _is_across_duplicate(game, state, cand):
                        continue
                    out.append(cand)
    out.sort(key=lambda p: (p.row, p.col, p.direction, p.word))
    return out


def oracle_score(game, state, placement) -> int:
    """Re-score from the board diff: every new-cell-touching run, scored
    with bonuses only on newly covered cells."""
    size = game.size
    dr, dc = (0, 1) if placement.direction == ACROSS else (1, 0)
    new_cells = set()
    for i in range(len(placement.word)):
        r, c = placement.row + dr * i, placement.col + dc * i
        if not state.board[r * size + c]:
            new_cells.add((r, c))
    scratch = bytearray(state.board)
    for i, letter in enumerate(placement.word):
        r, c = placement.row + dr * i, placement.col + dc * i
        scratch[r * size + c] = ord(letter) - 64
    total = 0
    for run in _runs_through(scratch, size, sorted(new_cells)):
        if not any(cell in new_cells for cell in run):
            continue
        score = 0
        mult = 1
        for (r, c) in run:
            value = game.letter_values[scratch[r * size + c] - 1]
            if (r, c) in new_cells:
                bonus = game.bonus[r * size + c]
                if bonus == T.DL:
                    value *= 2
                elif bonus == T.TL:
                    value *= 3
                elif bonus == T.DW:
                    mult *= 2
                elif bonus == T.TW:
                    mult *= 3
            score += value
        total += score * mult
    return total
