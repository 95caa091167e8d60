"""Legal placement generation: anchor-based trie walk with cross-checks.

Each placement is produced exactly once, keyed by its leftmost covered
anchor; single-tile placements that read in both directions are emitted
by the across pass only.  The result is returned in canonical order
(row, col, direction, word) so move indexing is identical everywhere.
"""

from __future__ import annotations

from .game_types import ACROSS, DOWN, Placement

_ALL_LETTERS = (1 << 26) - 1
_A = ord("A")


class MoveGenerator:
    """Stateless generator bound to one dictionary trie and board geometry."""

    def __init__(self, trie_root: dict, size: int):
        self.trie = trie_root
        self.size = size
        self.center = size // 2

    def placements(self, board, rack_counts: dict[str, int], tiles_on_board: int) -> list[Placement]:
        """All legal placements for the rack on the given board.

        `board` is a row-major bytearray with 0 for empty cells and 1..26
        for letters; `rack_counts` maps letters to multiplicities.
        """
        size = self.size
        grid = [
            ["" if board[r * size + c] == 0 else chr(_A - 1 + board[r * size + c]) for c in range(size)]
            for r in range(size)
        ]
        moves: list[Placement] = []
        self._scan(grid, rack_counts, tiles_on_board == 0, ACROSS, moves)
        transposed = [[grid[c][r] for c in range(size)] for r in range(size)]
        self._scan(transposed, rack_counts, tiles_on_board == 0, DOWN, moves)
        moves.sort(key=lambda p: (p.row, p.col, p.direction, p.word))
        return moves

    def _scan(self, grid, rack, first_move, direction, out):
        size = self.size
        anchors = self._anchors(grid, first_move)
        for r in range(size):
            row = grid[r]
            row_anchors = [c for c in range(size) if (r, c) in anchors]
            if not row_anchors:
                continue
            cross = self._cross_masks(grid, r, anchors)
            anchor_set = {c for c in row_anchors}
            for a in row_anchors:
                if a > 0 and row[a - 1]:
                    # Fixed left part: the existing run ending just left of
                    # the anchor.
                    start = a - 1
                    while start > 0 and row[start - 1]:
                        start -= 1
                    node = self.trie
                    for c in range(start, a):
                        node = node.get(row[c])
                        if node is None:
                            break
                    if node is not None:
                        self._extend(grid, row, r, a, start, "".join(row[start:a]), node,
                                     rack, cross, direction, out)
                else:
                    # Rack-built left parts up to the previous anchor/edge.
                    max_left = 0
                    c = a - 1
                    while c >= 0 and not row[c] and c not in anchor_set:
                        max_left += 1
                        c -= 1
                    self._left_parts(grid, row, r, a, max_left, "", self.trie,
                                     rack, cross, direction, out)

    def _left_parts(self, grid, row, r, anchor, limit, partial, node, rack, cross, direction, out):
        self._extend(grid, row, r, anchor, anchor - len(partial), partial, node,
                     rack, cross, direction, out, tiles_placed=len(partial))
        if limit == 0:
            return
        for letter, child in node.items():
            if letter and rack.get(letter, 0) > 0:
                rack[letter] -= 1
                self._left_parts(grid, row, r, anchor, limit - 1, partial + letter,
                                 child, rack, cross, direction, out)
                rack[letter] += 1

    def _extend(self, grid, row, r, anchor, word_start, partial, node, rack, cross,
                direction, out, col=None, tiles_placed=0):
        size = self.size
        if col is None:
            col = anchor
        if (col >= size or not row[col]) and col > anchor and node.get(""):
            self._emit(grid, r, word_start, partial, tiles_placed, anchor, direction, out)
        if col >= size:
            return
        cell = row[col]
        if cell:
            child = node.get(cell)
            if child is not None:
                self._extend(grid, row, r, anchor, word_start, partial + cell, child,
                             rack, cross, direction, out, col + 1, tiles_placed)
            return
        mask = cross.get(col, _ALL_LETTERS)
        for letter, child in node.items():
            if not letter or rack.get(letter, 0) == 0:
                continue
            if not (mask >> (ord(letter) - _A)) & 1:
                continue
            rack[letter] -= 1
            self._extend(grid, row, r, anchor, word_start, partial + letter, child,
                         rack, cross, direction, out, col + 1, tiles_placed + 1)
            rack[letter] += 1

    def _emit(self, grid, r, word_start, word, tiles_placed, anchor, direction, out):
        if direction == DOWN and tiles_placed == 1:
            # The across pass already produced this physical move when the
            # single tile also reads horizontally.
            size = self.size
            if (r > 0 and grid[r - 1][anchor]) or (r + 1 < size and grid[r + 1][anchor]):
                return
        if direction == ACROSS:
            out.append(Placement(r, word_start, ACROSS, word))
        else:
            out.append(Placement(word_start, r, DOWN, word))

    def _anchors(self, grid, first_move):
        size = self.size
        if first_move:
            return {(self.center, self.center)}
        anchors = set()
        for r in range(size):
            for c in range(size):
                if grid[r][c]:
                    continue
                if (
                    (r > 0 and grid[r - 1][c])
                    or (r + 1 < size and grid[r + 1][c])
                    or (c > 0 and grid[r][c - 1])
                    or (c + 1 < size and grid[r][c + 1])
                ):
                    anchors.add((r, c))
        return anchors

    def _cross_masks(self, grid, r, anchors) -> dict[int, int]:
        """Allowed-letter bitmask per anchor column of row r.

        Only cells with perpendicular neighbors constrain anything; other
        columns fall back to the all-letters mask.
        """
        size = self.size
        masks: dict[int, int] = {}
        for c in range(size):
            if (r, c) not in anchors and grid[r][c]:
                continue
            up = r - 1
            while up >= 0 and grid[up][c]:
                up -= 1
            down = r + 1
            while down < size and grid[down][c]:
                down += 1
            if up == r - 1 and down == r + 1:
                continue  # no perpendicular word forms here
            prefix = "".join(grid[i][c] for i in range(up + 1, r))
            suffix = "".join(grid[i][c] for i in range(r + 1, down))
            node = self.trie
            for ch in prefix:
                node = node.get(ch)
                if node is None:
                    break
            mask = 0
            if node is not None:
                for i in range(26):
                    child = node.get(chr(_A + i))
                    if child is None:
                        continue
                    sub = child
                    ok = True
                    for ch in suffix:
                        sub = sub.get(ch)
                        if sub is None:
                            ok = False
                            break
                    if ok and sub.get(""):
                        mask |= 1 << i
            masks[c] = mask
        return masks
