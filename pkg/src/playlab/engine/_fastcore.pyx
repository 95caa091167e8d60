# cython: language_level=3
"""Compiled simulation kernel: RNG, both domains, and the MCTS loop.

This is a draw-for-draw mirror of the pure-Python engine.  Every random
draw, move ordering, and floating-point expression matches the Python
implementation exactly, so both backends emit identical traces; the
parity test suite holds the two together.  Keep any semantic change in
sync with the pure modules.
"""

from libc.stdlib cimport malloc, realloc, free, qsort
from libc.string cimport memcpy, memset, memmove
from libc.math cimport log, sqrt, INFINITY
from libc.stdint cimport uint8_t, int8_t, int16_t, int32_t, uint32_t, uint64_t, int64_t

from playlab.rng import spawn_state
from playlab.traces import GameTrace, MoveRecord, TurnRecord

# outcome codes: winner player id, or
DEF OUT_ONGOING = -1
DEF OUT_DRAW = 2

DEF PASS_ROW = -1          # scrabble pass sentinel
DEF KIND_PLAY = 0
DEF KIND_ATTACK = 1
DEF KIND_END = 2
DEF HERO = -1


# ---------------------------------------------------------------------------
# xoshiro256** mirrored from playlab.rng
# ---------------------------------------------------------------------------

cdef struct Rng:
    uint64_t s0, s1, s2, s3


cdef inline uint64_t _rotl(uint64_t x, int k) nogil:
    return (x << k) | (x >> (64 - k))


cdef inline uint64_t rng_next(Rng* r) nogil:
    cdef uint64_t result = _rotl(r.s1 * 5u, 7) * 9u
    cdef uint64_t t = r.s1 << 17
    r.s2 ^= r.s0
    r.s3 ^= r.s1
    r.s1 ^= r.s2
    r.s0 ^= r.s3
    r.s2 ^= t
    r.s3 = _rotl(r.s3, 45)
    return result


cdef inline uint64_t rng_below(Rng* r, uint64_t n) nogil:
    # unbiased rejection sampling; threshold = 2**64 % n, as in the pure rng
    cdef uint64_t threshold = (0 - n) % n
    cdef uint64_t v
    while True:
        v = rng_next(r)
        if v >= threshold:
            return v % n


# ---------------------------------------------------------------------------
# game core interface
# ---------------------------------------------------------------------------

cdef class GameCore:
    """One domain engine: real state, root snapshot, and a search scratch state.

    Moves live in two places: a per-call scratch arena refilled by gen_*,
    and a per-decision table holding every move referenced by the search
    tree (edges and untried lists).  The tree stores table indices only.
    """

    cdef Rng rng
    cdef int scratch_n            # moves in the scratch arena
    cdef int tbl_n                # moves persisted this decision
    cdef uint8_t* used            # untried-entry consumed flags, per table slot

    def __cinit__(self):
        self.used = NULL

    # -- state plumbing --
    cdef void snapshot_root(self):
        pass

    cdef void reset_to_root(self):
        pass

    cdef int out_real(self):
        return OUT_DRAW

    cdef int out_work(self):
        return OUT_DRAW

    cdef int player_real(self):
        return 0

    cdef int player_work(self):
        return 0

    # -- moves --
    cdef int gen_real(self):
        return 0

    cdef int gen_work(self):
        return 0

    cdef int persist_scratch(self):
        """Copy the scratch arena into the table; returns the start index."""
        return 0

    cdef bint legal_tbl(self, int idx):
        return False

    cdef void apply_work_tbl(self, int idx):
        pass

    cdef void apply_real_tbl(self, int idx):
        pass

    cdef int playout_work(self, int depth_cap):
        return OUT_DRAW

    cdef void reset_table(self):
        self.tbl_n = 0


# ---------------------------------------------------------------------------
# search tree (domain agnostic: nodes reference table indices)
# ---------------------------------------------------------------------------

cdef struct Node:
    int64_t visits
    double total
    int move_idx        # table index of the edge move (-1 at root)
    int first_child
    int last_child
    int next_sib
    int u_start         # untried slice [u_start, u_start + u_total) in table
    int u_total
    int u_left
    int8_t acting       # player who chose the edge; -1 at root


cdef class SearchTree:
    cdef Node* nodes
    cdef int n
    cdef int cap
    cdef int* path
    cdef int path_cap

    def __cinit__(self):
        self.cap = 4096
        self.nodes = <Node*> malloc(self.cap * sizeof(Node))
        self.path_cap = 4096
        self.path = <int*> malloc(self.path_cap * sizeof(int))
        if self.nodes == NULL or self.path == NULL:
            raise MemoryError()
        self.n = 0

    def __dealloc__(self):
        if self.nodes != NULL:
            free(self.nodes)
        if self.path != NULL:
            free(self.path)

    cdef int new_node(self, int move_idx, int acting, int u_start, int u_total) except -2:
        cdef int idx = self.n
        if idx >= self.cap:
            self.cap *= 2
            self.nodes = <Node*> realloc(self.nodes, self.cap * sizeof(Node))
            if self.nodes == NULL:
                raise MemoryError()
        cdef Node* nd = &self.nodes[idx]
        nd.visits = 0
        nd.total = 0.0
        nd.move_idx = move_idx
        nd.first_child = -1
        nd.last_child = -1
        nd.next_sib = -1
        nd.u_start = u_start
        nd.u_total = u_total
        nd.u_left = u_total
        nd.acting = <int8_t> acting
        self.n += 1
        return idx

    cdef void add_child(self, int parent, int child):
        if self.nodes[parent].first_child < 0:
            self.nodes[parent].first_child = child
        else:
            self.nodes[self.nodes[parent].last_child].next_sib = child
        self.nodes[parent].last_child = child

    cdef void ensure_path(self, int need):
        if need > self.path_cap:
            while self.path_cap < need:
                self.path_cap *= 2
            self.path = <int*> realloc(self.path, self.path_cap * sizeof(int))


cdef void _backprop(SearchTree tree, int plen, int out):
    cdef int i, node
    cdef Node* nd
    for i in range(plen):
        node = tree.path[i]
        nd = &tree.nodes[node]
        nd.visits += 1
        if nd.acting >= 0:
            if out == OUT_DRAW:
                pass
            elif out == nd.acting:
                nd.total += 1.0
            else:
                nd.total -= 1.0


cdef void _search_iteration(GameCore core, SearchTree tree, double c, int depth_cap):
    core.reset_to_root()
    cdef int node = 0
    cdef int plen = 1
    tree.path[0] = 0
    cdef Node* nd
    cdef int out, i, idx, acting, child, best, start, n
    cdef double best_score, score, log_parent
    cdef bint expanded

    while True:
        out = core.out_work()
        if out != OUT_ONGOING:
            _backprop(tree, plen, out)
            return

        nd = &tree.nodes[node]
        expanded = False
        if nd.u_left > 0:
            for i in range(nd.u_start, nd.u_start + nd.u_total):
                if core.used[i]:
                    continue
                if core.legal_tbl(i):
                    core.used[i] = 1
                    nd.u_left -= 1
                    acting = core.player_work()
                    core.apply_work_tbl(i)
                    if core.out_work() == OUT_ONGOING:
                        core.gen_work()
                        start = core.persist_scratch()
                        n = core.scratch_n
                    else:
                        start = 0
                        n = 0
                    child = tree.new_node(i, acting, start, n)
                    tree.add_child(node, child)
                    tree.ensure_path(plen + 1)
                    tree.path[plen] = child
                    plen += 1
                    expanded = True
                    break
            if expanded:
                break

        # select among children whose edge move is legal under this sample
        nd = &tree.nodes[node]  # new_node may have reallocated
        best = -1
        best_score = -INFINITY
        log_parent = log(<double> nd.visits) if nd.visits > 0 else 0.0
        child = nd.first_child
        while child >= 0:
            if core.legal_tbl(tree.nodes[child].move_idx):
                if tree.nodes[child].visits == 0:
                    score = INFINITY
                else:
                    score = tree.nodes[child].total / tree.nodes[child].visits + c * sqrt(
                        log_parent / tree.nodes[child].visits
                    )
                if score > best_score:
                    best = child
                    best_score = score
            child = tree.nodes[child].next_sib
        if best < 0:
            break
        core.apply_work_tbl(tree.nodes[best].move_idx)
        node = best
        tree.ensure_path(plen + 1)
        tree.path[plen] = best
        plen += 1

    out = core.playout_work(depth_cap)
    _backprop(tree, plen, out)


cdef int run_search_c(GameCore core, SearchTree tree, int rollouts, double c,
                      int depth_cap, int root_n) except -2:
    """Returns the chosen root move as its table index (0 .. root_n-1)."""
    tree.n = 0
    tree.new_node(-1, -1, 0, root_n)
    cdef int it
    for it in range(rollouts):
        _search_iteration(core, tree, c, depth_cap)
    # most visited child; ties by mean reward, then creation order
    cdef int best = -1
    cdef int child = tree.nodes[0].first_child
    cdef Node* nd
    while child >= 0:
        nd = &tree.nodes[child]
        if nd.visits > 0:
            if best < 0:
                best = child
            elif nd.visits > tree.nodes[best].visits:
                best = child
            elif nd.visits == tree.nodes[best].visits and (
                nd.total / nd.visits > tree.nodes[best].total / tree.nodes[best].visits
            ):
                best = child
        child = nd.next_sib
    if best < 0:
        raise RuntimeError("search finished with no visited root child")
    return tree.nodes[best].move_idx


# ---------------------------------------------------------------------------
# scrabble core
# ---------------------------------------------------------------------------

cdef struct SState:
    uint8_t board[225]
    int8_t racks[2][26]
    int16_t bag[26]
    int bag_total
    int scores[2]
    int to_move
    int passes
    int tiles_on_board


cdef struct SMove:
    int8_t row
    int8_t col
    int8_t direction
    int8_t wlen
    char word[16]


cdef int _smove_cmp(const void* pa, const void* pb) noexcept nogil:
    cdef const SMove* a = <const SMove*> pa
    cdef const SMove* b = <const SMove*> pb
    if a.row != b.row:
        return -1 if a.row < b.row else 1
    if a.col != b.col:
        return -1 if a.col < b.col else 1
    if a.direction != b.direction:
        return -1 if a.direction < b.direction else 1
    cdef int i, n
    n = a.wlen if a.wlen < b.wlen else b.wlen
    for i in range(n):
        if a.word[i] != b.word[i]:
            return -1 if a.word[i] < b.word[i] else 1
    if a.wlen != b.wlen:
        return -1 if a.wlen < b.wlen else 1
    return 0


cdef class ScrabbleCore(GameCore):
    cdef SState real
    cdef SState root
    cdef SState work
    cdef int size
    cdef int center
    cdef int rack_size
    cdef int target
    cdef uint8_t bonus[225]          # 0 none, 1 DL, 2 TL, 3 DW, 4 TW
    cdef int values[26]
    cdef int16_t bag_init[26]
    # trie as a dense child table; node 0 is the root
    cdef int32_t* trie
    cdef uint8_t* term
    cdef int trie_n
    # scratch arena and persistent move table
    cdef SMove* arena
    cdef int arena_cap
    cdef SMove* tbl
    cdef int tbl_cap
    # movegen scratch
    cdef uint32_t xmask[225]
    cdef uint8_t anchor[225]
    cdef int8_t genrack[26]
    cdef char wordbuf[16]

    def __init__(self, int size, bonus, values, bag_counts, int rack_size,
                 int target, trie_children, trie_terminal):
        cdef int i
        self.size = size
        self.center = size // 2
        self.rack_size = rack_size
        self.target = target
        memset(self.bonus, 0, 225)
        for i in range(size * size):
            self.bonus[i] = <uint8_t> bonus[i]
        for i in range(26):
            self.values[i] = values[i]
            self.bag_init[i] = <int16_t> bag_counts[i]
        self.trie_n = len(trie_terminal)
        self.trie = <int32_t*> malloc(self.trie_n * 26 * sizeof(int32_t))
        self.term = <uint8_t*> malloc(self.trie_n)
        if self.trie == NULL or self.term == NULL:
            raise MemoryError()
        for i in range(self.trie_n * 26):
            self.trie[i] = trie_children[i]
        cdef const unsigned char[:] tview = trie_terminal
        for i in range(self.trie_n):
            self.term[i] = tview[i]
        self.arena_cap = 2048
        self.arena = <SMove*> malloc(self.arena_cap * sizeof(SMove))
        self.tbl_cap = 8192
        self.tbl = <SMove*> malloc(self.tbl_cap * sizeof(SMove))
        self.used = <uint8_t*> malloc(self.tbl_cap)
        if self.arena == NULL or self.tbl == NULL or self.used == NULL:
            raise MemoryError()

    def __dealloc__(self):
        if self.trie != NULL: free(self.trie)
        if self.term != NULL: free(self.term)
        if self.arena != NULL: free(self.arena)
        if self.tbl != NULL: free(self.tbl)
        if self.used != NULL: free(self.used)

    # -- setup ------------------------------------------------------------

    def py_setup(self, state_words):
        self.rng.s0, self.rng.s1, self.rng.s2, self.rng.s3 = state_words
        memset(&self.real, 0, sizeof(SState))
        cdef int i
        cdef int total = 0
        for i in range(26):
            self.real.bag[i] = self.bag_init[i]
            total += self.bag_init[i]
        self.real.bag_total = total
        self._refill(&self.real, 0)
        self._refill(&self.real, 1)

    cdef void _refill(self, SState* s, int player):
        cdef int rack_n = 0
        cdef int i
        cdef uint64_t pick
        cdef int acc
        for i in range(26):
            rack_n += s.racks[player][i]
        while s.bag_total > 0 and rack_n < self.rack_size:
            pick = rng_below(&self.rng, <uint64_t> s.bag_total)
            acc = 0
            for i in range(26):
                acc += s.bag[i]
                if <int> pick < acc:
                    s.bag[i] -= 1
                    s.racks[player][i] += 1
                    break
            s.bag_total -= 1
            rack_n += 1

    # -- state plumbing -----------------------------------------------------

    cdef void snapshot_root(self):
        memcpy(&self.root, &self.real, sizeof(SState))

    cdef void reset_to_root(self):
        memcpy(&self.work, &self.root, sizeof(SState))

    cdef int _outcome(self, SState* s):
        cdef int prev = 1 - s.to_move
        if s.scores[prev] >= self.target:
            return prev
        if s.scores[s.to_move] >= self.target:
            return s.to_move
        cdef bint rack_empty = True
        cdef int i
        for i in range(26):
            if s.racks[prev][i] > 0:
                rack_empty = False
                break
        if s.passes >= 2 or (s.bag_total == 0 and rack_empty):
            if s.scores[0] > s.scores[1]:
                return 0
            if s.scores[1] > s.scores[0]:
                return 1
            return OUT_DRAW
        return OUT_ONGOING

    cdef int out_real(self):
        return self._outcome(&self.real)

    cdef int out_work(self):
        return self._outcome(&self.work)

    cdef int player_real(self):
        return self.real.to_move

    cdef int player_work(self):
        return self.work.to_move

    # -- movegen ------------------------------------------------------------

    cdef void _arena_push(self, SMove* m):
        if self.scratch_n >= self.arena_cap:
            self.arena_cap *= 2
            self.arena = <SMove*> realloc(self.arena, self.arena_cap * sizeof(SMove))
        self.arena[self.scratch_n] = m[0]
        self.scratch_n += 1

    cdef int gen_real(self):
        return self._gen(&self.real)

    cdef int gen_work(self):
        return self._gen(&self.work)

    cdef int _gen(self, SState* s):
        """Legal placements, sorted by (row, col, direction, word), then pass."""
        self.scratch_n = 0
        cdef int i
        for i in range(26):
            self.genrack[i] = s.racks[s.to_move][i]
        self._scan(s, 0)
        self._scan(s, 1)
        qsort(self.arena, self.scratch_n, sizeof(SMove), _smove_cmp)
        cdef SMove pass_move
        pass_move.row = PASS_ROW
        pass_move.col = 0
        pass_move.direction = 0
        pass_move.wlen = 0
        self._arena_push(&pass_move)
        return self.scratch_n

    cdef inline int _cell(self, SState* s, int direction, int i, int j):
        # scan-space accessor: across reads (i, j), down reads (j, i)
        if direction == 0:
            return s.board[i * self.size + j]
        return s.board[j * self.size + i]

    cdef void _scan(self, SState* s, int direction):
        cdef int size = self.size
        cdef int i, j, r, c, up, down, k
        cdef int node, prev_node, sub
        cdef uint32_t mask
        cdef bint ok

        # anchors: empty cells with an occupied 4-neighbor (scan space),
        # or just the center on an empty board
        memset(self.anchor, 0, 225)
        if s.tiles_on_board == 0:
            self.anchor[self.center * size + self.center] = 1
        else:
            for i in range(size):
                for j in range(size):
                    if self._cell(s, direction, i, j) != 0:
                        continue
                    if (
                        (i > 0 and self._cell(s, direction, i - 1, j) != 0)
                        or (i + 1 < size and self._cell(s, direction, i + 1, j) != 0)
                        or (j > 0 and self._cell(s, direction, i, j - 1) != 0)
                        or (j + 1 < size and self._cell(s, direction, i, j + 1) != 0)
                    ):
                        self.anchor[i * size + j] = 1

        # cross-check masks for empty cells with perpendicular neighbors
        for i in range(size):
            for j in range(size):
                if self._cell(s, direction, i, j) != 0:
                    continue
                up = i - 1
                while up >= 0 and self._cell(s, direction, up, j) != 0:
                    up -= 1
                down = i + 1
                while down < size and self._cell(s, direction, down, j) != 0:
                    down += 1
                if up == i - 1 and down == i + 1:
                    self.xmask[i * size + j] = 0x3FFFFFF
                    continue
                node = 0
                for k in range(up + 1, i):
                    node = self.trie[node * 26 + (self._cell(s, direction, k, j) - 1)]
                    if node == 0:
                        break
                mask = 0
                if node != 0 or up + 1 == i:
                    for c in range(26):
                        sub = self.trie[node * 26 + c]
                        if sub == 0:
                            continue
                        ok = True
                        for k in range(i + 1, down):
                            sub = self.trie[sub * 26 + (self._cell(s, direction, k, j) - 1)]
                            if sub == 0:
                                ok = False
                                break
                        if ok and self.term[sub]:
                            mask |= (<uint32_t> 1) << c
                self.xmask[i * size + j] = mask

        cdef int a, start, max_left
        for i in range(size):
            for a in range(size):
                if not self.anchor[i * size + a]:
                    continue
                if a > 0 and self._cell(s, direction, i, a - 1) != 0:
                    # fixed left part from the existing run
                    start = a - 1
                    while start > 0 and self._cell(s, direction, i, start - 1) != 0:
                        start -= 1
                    node = 0
                    ok = True
                    for k in range(start, a):
                        self.wordbuf[k - start] = <char> (64 + self._cell(s, direction, i, k))
                        node = self.trie[node * 26 + (self._cell(s, direction, i, k) - 1)]
                        if node == 0:
                            ok = False
                            break
                    if ok:
                        self._extend(s, direction, i, a, start, a - start, node, a, 0)
                else:
                    max_left = 0
                    k = a - 1
                    while k >= 0 and self._cell(s, direction, i, k) == 0 and not self.anchor[i * size + k]:
                        max_left += 1
                        k -= 1
                    self._left_parts(s, direction, i, a, max_left, 0, 0)

    cdef void _left_parts(self, SState* s, int direction, int i, int a,
                          int limit, int plen, int node):
        self._extend(s, direction, i, a, a - plen, plen, node, a, plen)
        if limit == 0:
            return
        cdef int c, child
        for c in range(26):
            if self.genrack[c] <= 0:
                continue
            child = self.trie[node * 26 + c]
            if child == 0:
                continue
            self.genrack[c] -= 1
            self.wordbuf[plen] = <char> (65 + c)
            self._left_parts(s, direction, i, a, limit - 1, plen + 1, child)
            self.genrack[c] += 1

    cdef void _extend(self, SState* s, int direction, int i, int anchor_col,
                      int word_start, int plen, int node, int col, int tiles_placed):
        cdef int size = self.size
        cdef int cell = self._cell(s, direction, i, col) if col < size else 0
        if (col >= size or cell == 0) and col > anchor_col and self.term[node]:
            self._emit(s, direction, i, word_start, plen, tiles_placed, anchor_col)
        if col >= size:
            return
        cdef int c, child
        cdef uint32_t mask
        if cell != 0:
            child = self.trie[node * 26 + (cell - 1)]
            if child != 0:
                self.wordbuf[plen] = <char> (64 + cell)
                self._extend(s, direction, i, anchor_col, word_start, plen + 1,
                             child, col + 1, tiles_placed)
            return
        mask = self.xmask[i * size + col]
        if mask == 0:
            return
        for c in range(26):
            if self.genrack[c] <= 0:
                continue
            if not (mask >> c) & 1:
                continue
            child = self.trie[node * 26 + c]
            if child == 0:
                continue
            self.genrack[c] -= 1
            self.wordbuf[plen] = <char> (65 + c)
            self._extend(s, direction, i, anchor_col, word_start, plen + 1,
                         child, col + 1, tiles_placed + 1)
            self.genrack[c] += 1

    cdef void _emit(self, SState* s, int direction, int i, int word_start,
                    int plen, int tiles_placed, int anchor_col):
        cdef int size = self.size
        if direction == 1 and tiles_placed == 1:
            # single-tile placements that also read across belong to the
            # across pass (canonical duplicate rule)
            if (i > 0 and self._cell(s, direction, i - 1, anchor_col) != 0) or (
                i + 1 < size and self._cell(s, direction, i + 1, anchor_col) != 0
            ):
                return
        cdef SMove m
        if direction == 0:
            m.row = <int8_t> i
            m.col = <int8_t> word_start
        else:
            m.row = <int8_t> word_start
            m.col = <int8_t> i
        m.direction = <int8_t> direction
        m.wlen = <int8_t> plen
        memcpy(m.word, self.wordbuf, plen)
        self._arena_push(&m)

    # -- table -------------------------------------------------------------

    cdef int persist_scratch(self):
        cdef int start = self.tbl_n
        cdef int need = start + self.scratch_n
        if need > self.tbl_cap:
            while self.tbl_cap < need:
                self.tbl_cap *= 2
            self.tbl = <SMove*> realloc(self.tbl, self.tbl_cap * sizeof(SMove))
            self.used = <uint8_t*> realloc(self.used, self.tbl_cap)
        memcpy(self.tbl + start, self.arena, self.scratch_n * sizeof(SMove))
        memset(self.used + start, 0, self.scratch_n)
        self.tbl_n = need
        return start

    cdef bint legal_tbl(self, int idx):
        """Board geometry along a tree path is deterministic, so only the
        rack requirement can invalidate a stored move under resampling."""
        cdef SMove* m = &self.tbl[idx]
        if m.row == PASS_ROW:
            return True
        return self._rack_ok(&self.work, m)

    cdef bint _rack_ok(self, SState* s, SMove* m):
        cdef int need[26]
        memset(need, 0, sizeof(need))
        cdef int dr = 0 if m.direction == 0 else 1
        cdef int dc = 1 if m.direction == 0 else 0
        cdef int k, r, c, letter
        cdef bint any_new = False
        for k in range(m.wlen):
            r = m.row + dr * k
            c = m.col + dc * k
            letter = m.word[k] - 65
            if s.board[r * self.size + c] == 0:
                need[letter] += 1
                any_new = True
            elif s.board[r * self.size + c] != letter + 1:
                return False
        if not any_new:
            return False
        for k in range(26):
            if need[k] > s.racks[s.to_move][k]:
                return False
        return True

    cdef int _score(self, SState* s, SMove* m):
        cdef int size = self.size
        cdef int dr = 0 if m.direction == 0 else 1
        cdef int dc = 1 if m.direction == 0 else 0
        cdef int pr = 1 if m.direction == 0 else 0   # perpendicular step
        cdef int pc = 0 if m.direction == 0 else 1
        cdef int total = 0
        cdef int main_score = 0
        cdef int main_mult = 1
        cdef int k, r, c, idx, value, letter_score, word_mult, rr, cc
        cdef int cross, cross_len
        for k in range(m.wlen):
            r = m.row + dr * k
            c = m.col + dc * k
            idx = r * size + c
            value = self.values[m.word[k] - 65]
            if s.board[idx] != 0:
                main_score += value
                continue
            letter_score = value
            word_mult = 1
            if self.bonus[idx] == 1:
                letter_score = value * 2
            elif self.bonus[idx] == 2:
                letter_score = value * 3
            elif self.bonus[idx] == 3:
                word_mult = 2
            elif self.bonus[idx] == 4:
                word_mult = 3
            main_score += letter_score
            main_mult *= word_mult
            # perpendicular word through this new tile
            cross = 0
            cross_len = 1
            rr = r - pr
            cc = c - pc
            while rr >= 0 and cc >= 0 and s.board[rr * size + cc] != 0:
                cross += self.values[s.board[rr * size + cc] - 1]
                cross_len += 1
                rr -= pr
                cc -= pc
            rr = r + pr
            cc = c + pc
            while rr < size and cc < size and s.board[rr * size + cc] != 0:
                cross += self.values[s.board[rr * size + cc] - 1]
                cross_len += 1
                rr += pr
                cc += pc
            if cross_len >= 2:
                total += (cross + letter_score) * word_mult
        return total + main_score * main_mult

    cdef void _apply(self, SState* s, SMove* m):
        cdef int player = s.to_move
        if m.row == PASS_ROW:
            s.passes += 1
            s.to_move = 1 - player
            return
        s.scores[player] += self._score(s, m)
        cdef int dr = 0 if m.direction == 0 else 1
        cdef int dc = 1 if m.direction == 0 else 0
        cdef int k, idx, letter
        for k in range(m.wlen):
            idx = (m.row + dr * k) * self.size + (m.col + dc * k)
            letter = m.word[k] - 65
            if s.board[idx] == 0:
                s.board[idx] = <uint8_t> (letter + 1)
                s.racks[player][letter] -= 1
                s.tiles_on_board += 1
        self._refill(s, player)
        s.passes = 0
        s.to_move = 1 - player

    cdef void apply_work_tbl(self, int idx):
        self._apply(&self.work, &self.tbl[idx])

    cdef void apply_real_tbl(self, int idx):
        self._apply(&self.real, &self.tbl[idx])

    cdef int playout_work(self, int depth_cap):
        cdef int out = self._outcome(&self.work)
        cdef int depth = 0
        cdef int n, pick
        while out == OUT_ONGOING:
            if depth >= depth_cap:
                return OUT_DRAW
            n = self._gen(&self.work)
            pick = <int> rng_below(&self.rng, <uint64_t> n)
            self._apply(&self.work, &self.arena[pick])
            out = self._outcome(&self.work)
            depth += 1
        return out

    # -- python-facing helpers ----------------------------------------------

    def py_arena_labels(self):
        cdef int k
        labels = []
        for k in range(self.scratch_n):
            if self.arena[k].row == PASS_ROW:
                labels.append("pass")
            else:
                labels.append(self.arena[k].word[: self.arena[k].wlen].decode("ascii"))
        return labels

    def py_summary(self):
        return {"scores": [self.real.scores[0], self.real.scores[1]],
                "bag": self.real.bag_total}


# ---------------------------------------------------------------------------
# cardonomicon core
# ---------------------------------------------------------------------------

cdef struct CSide:
    int hero
    int mana_cap
    int mana
    int8_t deck[20]
    int deck_n
    int8_t hand[20]
    int hand_n
    int8_t bcard[20]
    int16_t bhp[20]
    uint8_t bready[20]
    int board_n


cdef struct CState:
    CSide sides[2]
    int to_move
    int turn_counter


cdef struct CMove:
    int8_t kind
    int8_t a
    int8_t b


cdef class CardCore(GameCore):
    cdef CState real
    cdef CState root
    cdef CState work
    cdef int n_cards
    cdef int costs[20]
    cdef int attacks[20]
    cdef int healths[20]
    cdef int opening_hand
    cdef int turn_cap
    cdef int hero_health
    cdef object names
    cdef CMove* arena
    cdef int arena_cap
    cdef CMove* tbl
    cdef int tbl_cap

    def __init__(self, costs, attacks, healths, names, int opening_hand,
                 int turn_cap, int hero_health):
        cdef int i
        self.n_cards = len(costs)
        if self.n_cards > 20:
            raise ValueError("card deck larger than the engine limit of 20")
        for i in range(self.n_cards):
            self.costs[i] = costs[i]
            self.attacks[i] = attacks[i]
            self.healths[i] = healths[i]
        self.names = list(names)
        self.opening_hand = opening_hand
        self.turn_cap = turn_cap
        self.hero_health = hero_health
        self.arena_cap = 512
        self.arena = <CMove*> malloc(self.arena_cap * sizeof(CMove))
        self.tbl_cap = 8192
        self.tbl = <CMove*> malloc(self.tbl_cap * sizeof(CMove))
        self.used = <uint8_t*> malloc(self.tbl_cap)
        if self.arena == NULL or self.tbl == NULL or self.used == NULL:
            raise MemoryError()

    def __dealloc__(self):
        if self.arena != NULL: free(self.arena)
        if self.tbl != NULL: free(self.tbl)
        if self.used != NULL: free(self.used)

    # -- setup ----------------------------------------------------------------

    def py_setup(self, state_words):
        self.rng.s0, self.rng.s1, self.rng.s2, self.rng.s3 = state_words
        memset(&self.real, 0, sizeof(CState))
        cdef int p, i
        for p in range(2):
            self.real.sides[p].hero = self.hero_health
            self.real.sides[p].deck_n = self.n_cards
            for i in range(self.n_cards):
                self.real.sides[p].deck[i] = <int8_t> i
        self.real.to_move = 0
        self.real.turn_counter = 0
        for p in range(2):
            for i in range(self.opening_hand):
                self._draw(&self.real, p)
        self._begin_turn(&self.real, 0)

    cdef void _draw(self, CState* s, int player):
        cdef CSide* side = &s.sides[player]
        cdef int k
        if side.deck_n > 0:
            k = <int> rng_below(&self.rng, <uint64_t> side.deck_n)
            side.hand[side.hand_n] = side.deck[k]
            side.hand_n += 1
            memmove(side.deck + k, side.deck + k + 1, (side.deck_n - k - 1) * sizeof(int8_t))
            side.deck_n -= 1

    cdef void _begin_turn(self, CState* s, int player):
        s.turn_counter += 1
        cdef CSide* side = &s.sides[player]
        side.mana_cap = side.mana_cap + 1
        if side.mana_cap > 10:
            side.mana_cap = 10
        side.mana = side.mana_cap
        self._draw(s, player)
        cdef int i
        for i in range(side.board_n):
            side.bready[i] = 1

    # -- state plumbing ---------------------------------------------------------

    cdef void snapshot_root(self):
        memcpy(&self.root, &self.real, sizeof(CState))

    cdef void reset_to_root(self):
        memcpy(&self.work, &self.root, sizeof(CState))

    cdef int _outcome(self, CState* s):
        if s.sides[1].hero <= 0:
            return 0
        if s.sides[0].hero <= 0:
            return 1
        if s.turn_counter > self.turn_cap:
            return OUT_DRAW
        return OUT_ONGOING

    cdef int out_real(self):
        return self._outcome(&self.real)

    cdef int out_work(self):
        return self._outcome(&self.work)

    cdef int player_real(self):
        return self.real.to_move

    cdef int player_work(self):
        return self.work.to_move

    # -- moves -------------------------------------------------------------------

    cdef void _arena_push(self, int kind, int a, int b):
        if self.scratch_n >= self.arena_cap:
            self.arena_cap *= 2
            self.arena = <CMove*> realloc(self.arena, self.arena_cap * sizeof(CMove))
        self.arena[self.scratch_n].kind = <int8_t> kind
        self.arena[self.scratch_n].a = <int8_t> a
        self.arena[self.scratch_n].b = <int8_t> b
        self.scratch_n += 1

    cdef int gen_real(self):
        return self._gen(&self.real)

    cdef int gen_work(self):
        return self._gen(&self.work)

    cdef int _gen(self, CState* s):
        self.scratch_n = 0
        cdef CSide* side = &s.sides[s.to_move]
        cdef CSide* enemy = &s.sides[1 - s.to_move]
        cdef int i, t
        for i in range(side.hand_n):
            if self.costs[side.hand[i]] <= side.mana:
                self._arena_push(KIND_PLAY, side.hand[i], 0)
        for i in range(side.board_n):
            if not side.bready[i]:
                continue
            for t in range(enemy.board_n):
                self._arena_push(KIND_ATTACK, side.bcard[i], enemy.bcard[t])
            self._arena_push(KIND_ATTACK, side.bcard[i], HERO)
        self._arena_push(KIND_END, 0, 0)
        return self.scratch_n

    cdef int persist_scratch(self):
        cdef int start = self.tbl_n
        cdef int need = start + self.scratch_n
        if need > self.tbl_cap:
            while self.tbl_cap < need:
                self.tbl_cap *= 2
            self.tbl = <CMove*> realloc(self.tbl, self.tbl_cap * sizeof(CMove))
            self.used = <uint8_t*> realloc(self.used, self.tbl_cap)
        memcpy(self.tbl + start, self.arena, self.scratch_n * sizeof(CMove))
        memset(self.used + start, 0, self.scratch_n)
        self.tbl_n = need
        return start

    cdef bint legal_tbl(self, int idx):
        cdef CMove* m = &self.tbl[idx]
        cdef CState* s = &self.work
        cdef CSide* side = &s.sides[s.to_move]
        cdef CSide* enemy = &s.sides[1 - s.to_move]
        cdef int i
        if m.kind == KIND_END:
            return True
        if m.kind == KIND_PLAY:
            if self.costs[m.a] > side.mana:
                return False
            for i in range(side.hand_n):
                if side.hand[i] == m.a:
                    return True
            return False
        for i in range(side.board_n):
            if side.bcard[i] == m.a:
                if not side.bready[i]:
                    return False
                if m.b == HERO:
                    return True
                for i in range(enemy.board_n):
                    if enemy.bcard[i] == m.b:
                        return True
                return False
        return False

    cdef void _apply(self, CState* s, CMove* m):
        cdef int player = s.to_move
        cdef CSide* side = &s.sides[player]
        cdef CSide* enemy = &s.sides[1 - player]
        cdef int i, ai, ti
        if m.kind == KIND_PLAY:
            for i in range(side.hand_n):
                if side.hand[i] == m.a:
                    memmove(side.hand + i, side.hand + i + 1,
                            (side.hand_n - i - 1) * sizeof(int8_t))
                    side.hand_n -= 1
                    break
            side.mana -= self.costs[m.a]
            side.bcard[side.board_n] = m.a
            side.bhp[side.board_n] = <int16_t> self.healths[m.a]
            side.bready[side.board_n] = 0
            side.board_n += 1
        elif m.kind == KIND_ATTACK:
            ai = -1
            for i in range(side.board_n):
                if side.bcard[i] == m.a:
                    ai = i
                    break
            side.bready[ai] = 0
            if m.b == HERO:
                enemy.hero -= self.attacks[m.a]
            else:
                ti = -1
                for i in range(enemy.board_n):
                    if enemy.bcard[i] == m.b:
                        ti = i
                        break
                enemy.bhp[ti] -= <int16_t> self.attacks[m.a]
                side.bhp[ai] -= <int16_t> self.attacks[m.b]
                if enemy.bhp[ti] <= 0:
                    memmove(enemy.bcard + ti, enemy.bcard + ti + 1,
                            (enemy.board_n - ti - 1) * sizeof(int8_t))
                    memmove(enemy.bhp + ti, enemy.bhp + ti + 1,
                            (enemy.board_n - ti - 1) * sizeof(int16_t))
                    memmove(enemy.bready + ti, enemy.bready + ti + 1,
                            (enemy.board_n - ti - 1) * sizeof(uint8_t))
                    enemy.board_n -= 1
                if side.bhp[ai] <= 0:
                    memmove(side.bcard + ai, side.bcard + ai + 1,
                            (side.board_n - ai - 1) * sizeof(int8_t))
                    memmove(side.bhp + ai, side.bhp + ai + 1,
                            (side.board_n - ai - 1) * sizeof(int16_t))
                    memmove(side.bready + ai, side.bready + ai + 1,
                            (side.board_n - ai - 1) * sizeof(uint8_t))
                    side.board_n -= 1
        else:
            s.to_move = 1 - player
            self._begin_turn(s, s.to_move)

    cdef void apply_work_tbl(self, int idx):
        self._apply(&self.work, &self.tbl[idx])

    cdef void apply_real_tbl(self, int idx):
        self._apply(&self.real, &self.tbl[idx])

    cdef int playout_work(self, int depth_cap):
        cdef int out = self._outcome(&self.work)
        cdef int depth = 0
        cdef int n, pick
        while out == OUT_ONGOING:
            if depth >= depth_cap:
                return OUT_DRAW
            n = self._gen(&self.work)
            pick = <int> rng_below(&self.rng, <uint64_t> n)
            self._apply(&self.work, &self.arena[pick])
            out = self._outcome(&self.work)
            depth += 1
        return out

    # -- python-facing helpers ---------------------------------------------------

    def py_arena_labels(self):
        cdef int k
        labels = []
        for k in range(self.scratch_n):
            if self.arena[k].kind == KIND_PLAY:
                labels.append(f"play:{self.names[self.arena[k].a]}")
            elif self.arena[k].kind == KIND_ATTACK:
                target = "HERO" if self.arena[k].b == HERO else self.names[self.arena[k].b]
                labels.append(f"attack:{self.names[self.arena[k].a]}>{target}")
            else:
                labels.append("end")
        return labels

    def py_summary(self):
        return {
            "hero_health": [self.real.sides[0].hero, self.real.sides[1].hero],
            "mana_cap": [self.real.sides[0].mana_cap, self.real.sides[1].mana_cap],
        }


# ---------------------------------------------------------------------------
# factory and driver
# ---------------------------------------------------------------------------


def core_factory(game):
    """Build the compiled core for one of the shipped domains."""
    from playlab.cardonomicon.game import CardonomiconGame
    from playlab.scrabble.game import ScrabbleGame

    if isinstance(game, ScrabbleGame):
        if game.size > 15:
            raise TypeError("compiled engine supports boards up to 15x15")
        children, terminal = game.dictionary.flatten()
        return ScrabbleCore(
            game.size, game.bonus, game.letter_values, game.bag_counts,
            game.rack_size, game.target_score, children, terminal,
        )
    if isinstance(game, CardonomiconGame):
        if len(game.cards) > 20:
            raise TypeError("compiled engine supports decks up to 20 cards")
        return CardCore(
            [c.mana_cost for c in game.cards],
            [c.attack for c in game.cards],
            [c.health for c in game.cards],
            [c.name for c in game.cards],
            game.opening_hand, game.turn_cap, game.hero_health,
        )
    raise TypeError(f"compiled engine has no core for {type(game).__name__}")


def simulate_game(core_or_factory, game, int p0_rollouts, int p1_rollouts,
                  double exploration_c, int depth_cap, master_seed, game_index):
    """Mirror of playlab.engine.pure.simulate_game on the compiled core."""
    cdef GameCore core = core_or_factory
    cdef SearchTree tree = SearchTree()
    core.py_setup(spawn_state(master_seed, game_index))

    budgets = (p0_rollouts, p1_rollouts)
    turns = []
    open_moves = []
    turn_player = None
    cdef int out = core.out_real()
    cdef int n, pick, player

    while out == OUT_ONGOING:
        player = core.player_real()
        if turn_player is None:
            turn_player = player
        core.reset_table()
        core.snapshot_root()
        n = core.gen_real()
        labels = core.py_arena_labels()
        core.persist_scratch()  # root moves occupy table slots 0..n-1
        if n == 1:
            pick = 0
        else:
            pick = run_search_c(core, tree, budgets[player], exploration_c,
                                depth_cap, n)
        open_moves.append(
            MoveRecord(
                chosen_label=labels[pick],
                available_labels=tuple(sorted(set(labels))),
                available_count=n,
            )
        )
        core.apply_real_tbl(pick)
        out = core.out_real()
        if out != OUT_ONGOING or core.player_real() != turn_player:
            turns.append(
                TurnRecord(
                    turn_index=len(turns) + 1,
                    player=turn_player,
                    moves=tuple(open_moves),
                    state_summary=core.py_summary(),
                )
            )
            open_moves = []
            turn_player = None

    if out == 0:
        winner = "p0"
    elif out == 1:
        winner = "p1"
    else:
        winner = "draw"
    return GameTrace(
        domain=game.name,
        p0_rollouts=p0_rollouts,
        p1_rollouts=p1_rollouts,
        master_seed=master_seed,
        game_index=game_index,
        winner=winner,
        turns=tuple(turns),
    )
