"""Word list with prefix queries, backing legal-move generation."""

from __future__ import annotations

import io
from typing import Iterable

MIN_WORD_LEN = 2
MAX_WORD_LEN = 15


class Dictionary:
    """Immutable word set plus a trie for prefix queries.

    Shared read-only across all simulation workers.
    """

    def __init__(self, words: Iterable[str]):
        accepted = set()
        for word in words:
            w = word.strip().upper()
            if not (MIN_WORD_LEN <= len(w) <= MAX_WORD_LEN):
                continue
            if not all("A" <= ch <= "Z" for ch in w):
                continue
            accepted.add(w)
        self._words = frozenset(accepted)
        root: dict = {}
        for w in sorted(accepted):
            node = root
            for ch in w:
                node = node.setdefault(ch, {})
            node[""] = True  # terminal marker
        self._root = root

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, word: str) -> bool:
        return word in self._words

    def contains(self, word: str) -> bool:
        return word in self._words

    def is_prefix(self, prefix: str) -> bool:
        """True when some dictionary word starts with `prefix` (inclusive)."""
        node = self._root
        for ch in prefix:
            node = node.get(ch)
            if node is None:
                return False
        return True

    def words(self) -> frozenset[str]:
        return self._words

    def trie_root(self) -> dict:
        return self._root

    def flatten(self) -> tuple[list[int], bytes]:
        """Dense child table + terminal flags for the compiled engine.

        Node i's child for letter l sits at children[i * 26 + l] (0 = none);
        node 0 is the root.
        """
        children = [0] * 26
        terminal = bytearray(1)
        node_of = {id(self._root): 0}
        stack = [self._root]
        while stack:
            node = stack.pop()
            idx = node_of[id(node)]
            for ch, sub in sorted(node.items()):
                if ch == "":
                    terminal[idx] = 1
                    continue
                sub_idx = len(terminal)
                node_of[id(sub)] = sub_idx
                children.extend([0] * 26)
                terminal.append(0)
                children[idx * 26 + (ord(ch) - 65)] = sub_idx
                stack.append(sub)
        return children, bytes(terminal)


def load_dictionary(source) -> Dictionary:
    """Build a dictionary from a path, text stream, or iterable of lines.

    Words are upper-cased; anything outside A-Z or length 2..15 is dropped.
    """
    if isinstance(source, (str, bytes)):
        with open(source, "r", encoding="utf-8") as fh:
            return Dictionary(fh)
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        return Dictionary(iter(source))
    return Dictionary(source)
