"""Faithful action of the free product of three involutions on the
integer line, built from a window of the no-repeat subshift over a, b, c.

A bi-infinite word with no two equal adjacent letters defines, for each
letter s, the involution of the integers that swaps n and n+1 exactly
when the word carries s at position n.  Only a finite index window of the
word is represented; evaluations that would need letters outside the
window are flagged unreliable instead of guessed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .alphabet import AlphabetSpec, Letter
from .automaton import GroupAutomaton
from .permutation import FDPerm

LETTERS = ("a", "b", "c")


@dataclass(frozen=True)
class SubshiftWord:
    """Word over {a, b, c} on the index window [lo, lo + len - 1], with no
    two adjacent letters equal.  ``margin`` letters on each side pad a
    core whose factors the construction guarantees."""

    letters: str
    lo: int
    margin: int = 0

    def __init__(self, letters: str, lo: int = 0, margin: int = 0):
        letters = str(letters)
        if not letters:
            raise ValueError("empty subshift word")
        for ch in letters:
            if ch not in LETTERS:
                raise ValueError(f"letter {ch!r} not in {LETTERS}")
        for i in range(len(letters) - 1):
            if letters[i] == letters[i + 1]:
                raise ValueError(f"adjacent repeat {letters[i]!r} at position {lo + i}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "lo", int(lo))
        object.__setattr__(self, "margin", int(margin))

    @property
    def hi(self) -> int:
        return self.lo + len(self.letters) - 1

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, n: int) -> str | None:
        """Letter at index n, or None outside the window."""
        if self.lo <= n <= self.hi:
            return self.letters[n - self.lo]
        return None

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def contains_factor(self, factor: str) -> bool:
        return factor in self.letters


def reduced_words(max_len: int) -> list[str]:
    """All nonempty no-adjacent-repeat words of length <= max_len, by
    length then lexicographically."""
    out: list[str] = []
    level = [""]
    for _ in range(max_len):
        level = [w + ch for w in level for ch in LETTERS if not w or w[-1] != ch]
        out.extend(sorted(level))
    return out


def _separator(left: str, right: str) -> str:
    for ch in LETTERS:
        if ch != left and ch != right:
            return ch
    raise AssertionError("three letters always admit a separator")


def universal_word(max_len: int, margin: int | None = None) -> SubshiftWord:
    """Deterministic window word containing every reduced word of length
    <= max_len as a factor, padded by ``margin`` letters on each side."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    if margin is None:
        margin = max_len + 2
    core: list[str] = []
    for word in reduced_words(max_len):
        if core and core[-1] == word[0]:
            core.append(_separator(core[-1], word[0]))
        core.extend(word)
    left: list[str] = []
    anchor = core[0]
    for _ in range(margin):
        nxt = next(ch for ch in LETTERS if ch != anchor)
        left.append(nxt)
        anchor = nxt
    left.reverse()
    right: list[str] = []
    anchor = core[-1]
    for _ in range(margin):
        nxt = next(ch for ch in LETTERS if ch != anchor)
        right.append(nxt)
        anchor = nxt
    return SubshiftWord("".join(left + core + right), lo=-margin, margin=margin)


@dataclass(frozen=True)
class WindowPerm:
    """Involution induced by one letter on the index window.

    ``unreliable`` marks indices whose image depends on letters outside
    the window (only the left edge, when its letter does not match).
    """

    letter: str
    images: dict[int, int]
    unreliable: frozenset[int]

    def __call__(self, n: int) -> int:
        return self.images[n]


def subshift_perm(s: str, w: SubshiftWord) -> WindowPerm:
    """n -> n+1 where the word reads s at n; n -> n-1 where it reads s at
    n-1; fixed otherwise.  The two cases exclude each other because the
    word never repeats a letter."""
    if s not in LETTERS:
        raise ValueError(f"letter {s!r} not in {LETTERS}")
    images: dict[int, int] = {}
    unreliable = set()
    for n in w.indices():
        here = w[n] == s
        before = w[n - 1] == s
        assert not (here and before), "no-repeat word cannot match both cases"
        if here:
            images[n] = n + 1
        elif before:
            images[n] = n - 1
        else:
            images[n] = n
            if w[n - 1] is None:
                unreliable.add(n)
    return WindowPerm(s, images, frozenset(unreliable))


def compose_image(w: SubshiftWord, word: str, n: int) -> int | None:
    """Image of index n under the letters of ``word`` applied leftmost
    first; None when the evaluation leaves the window or becomes
    unreliable."""
    perms = {s: subshift_perm(s, w) for s in set(word)}
    cur = n
    for s in word:
        p = perms[s]
        if cur not in p.images or cur in p.unreliable:
            return None
        cur = p.images[cur]
    return cur


@dataclass
class FaithfulnessReport:
    max_len: int
    checked: int
    moved: dict[str, tuple[int, int]]  # word -> (index, image)
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_faithful(max_len: int, w: SubshiftWord) -> FaithfulnessReport:
    """Verify that every nonempty reduced word of length <= max_len moves
    some reliably-evaluated window index.

    Indices within a word's length of the window edges are excluded, so a
    margin of at least max_len + 2 is required.
    """
    if w.margin < max_len + 2:
        raise ValueError(
            f"window margin {w.margin} too small; need at least {max_len + 2}"
        )
    moved: dict[str, tuple[int, int]] = {}
    failures: list[str] = []
    words = reduced_words(max_len)
    for v in words:
        pad = len(v) + 1
        found = None
        for n in range(w.lo + pad, w.hi - pad + 1):
            image = compose_image(w, v, n)
            if image is not None and image != n:
                found = (n, image)
                break
        if found is None:
            failures.append(v)
        else:
            moved[v] = found
    return FaithfulnessReport(max_len, len(words), moved, failures)


@dataclass
class SchreierSegment:
    """Window piece of the orbit graph: 2-cycles between swapped indices,
    loops at fixed ones, one color per letter."""

    word: SubshiftWord
    edges: list[tuple[int, str, int]]

    def to_dot(self) -> str:
        from .dot import segment_dot

        return segment_dot(self)


def schreier_segment(w: SubshiftWord) -> SchreierSegment:
    edges = []
    for n in w.indices():
        for s in LETTERS:
            p = subshift_perm(s, w)
            edges.append((n, s, p.images[n]))
    return SchreierSegment(w, edges)


def subshift_window_automaton(w: SubshiftWord) -> GroupAutomaton:
    """The window action packaged as a group automaton on one integer ray,
    with empty restriction table (the involutions have no self-similar
    structure here).  Used mainly for serialization round-trips."""
    alpha = AlphabetSpec(fin_letters=[], rays=["n"])
    bound = max(abs(w.lo), abs(w.hi + 1))
    perms = {}
    for s in LETTERS:
        patch = {}
        for n in w.indices():
            if w[n] == s:
                patch[Letter("n", n)] = Letter("n", n + 1)
                patch[Letter("n", n + 1)] = Letter("n", n)
        perms[s] = FDPerm(alpha, patch, {}, bound)
    return GroupAutomaton(
        input_states=list(LETTERS),
        output_states=list(LETTERS),
        alphabet=alpha,
        perm=perms,
        restrictions={},
    )
