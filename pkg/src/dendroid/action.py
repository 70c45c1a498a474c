"""Self-similar actions on level words.

A tower chains automata so that the output states of each level are the
input states of the next; an autonomous tower repeats one automaton with
equal state sets.  Group elements are signed words over the level-1 input
states; they act on tuples of letters level by level, threading sections.
Everything is evaluated lazily: no level alphabet is ever enumerated, and
a section that becomes the identity short-circuits the rest of the word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .alphabet import Letter, parse_letter
from .automaton import ID, GroupAutomaton
from .exceptions import DomainError
from .words import SignedWord

LevelWord = tuple[Letter, ...]


def parse_level_word(text: str) -> LevelWord:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_letter(tok) for tok in text.split(","))


def format_level_word(word: LevelWord) -> str:
    return ",".join(str(x) for x in word)


@dataclass(frozen=True)
class Tower:
    """A chain of composable automata; ``autonomous`` towers repeat the
    first level forever."""

    levels: tuple[GroupAutomaton, ...]
    autonomous: bool = False

    def __init__(self, levels, autonomous=False):
        levels = tuple(levels)
        if not levels:
            raise ValueError("tower needs at least one level")
        if autonomous:
            aut = levels[0]
            if len(levels) != 1:
                raise ValueError("autonomous towers repeat a single automaton")
            if aut.input_states != aut.output_states:
                raise ValueError("autonomous tower needs equal input and output states")
        for lower, upper in zip(levels, levels[1:]):
            if lower.output_states != upper.input_states:
                raise ValueError("output states of each level must equal the next input states")
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "autonomous", bool(autonomous))

    @classmethod
    def repeat(cls, aut: GroupAutomaton) -> "Tower":
        return cls((aut,), autonomous=True)

    @property
    def depth(self) -> int | None:
        """Maximal word length, or None when unbounded."""
        return None if self.autonomous else len(self.levels)

    def level(self, k: int) -> GroupAutomaton:
        """Automaton acting at word position k (0-based)."""
        if k < 0:
            raise IndexError("negative level")
        if self.autonomous:
            return self.levels[0]
        if k >= len(self.levels):
            raise DomainError(f"word longer than the tower ({len(self.levels)} levels)")
        return self.levels[k]

    def check_word(self, word: LevelWord) -> LevelWord:
        if self.depth is not None and len(word) > self.depth:
            raise DomainError(f"word of length {len(word)} exceeds tower depth {self.depth}")
        for k, x in enumerate(word):
            self.level(k).alphabet.require(x)
        return word

    def generators(self) -> tuple[str, ...]:
        return self.levels[0].input_states


def _act_single(tower: Tower, gen: tuple[str, int], word: LevelWord):
    """Act by one signed generator; returns (image, signed section or None).

    The section after the last letter is a single signed state because
    restrictions of states are states.
    """
    state: tuple[str, int] | None = gen
    out: list[Letter] = []
    for k, x in enumerate(word):
        if state is None:
            out.extend(word[k:])
            break
        aut = tower.level(k)
        s, e = state
        if e == 1:
            y, b = aut.step(s, x)
            state = None if b is ID else (b, 1)
        else:
            y, signed = aut.inverse_step(s, x)
            state = signed
        out.append(y)
    return tuple(out), state


def act(tower: Tower, g: SignedWord, v: LevelWord) -> tuple[LevelWord, SignedWord]:
    """Image and section of ``v`` under ``g``: returns (g(v), g|_v).

    The rightmost factor of ``g`` acts first; sections compose so that
    (g1 g2)|_v = g1|_{g2(v)} * g2|_v, freely reduced.
    """
    tower.check_word(v)
    gens = tower.generators()
    for s in g.states():
        if s not in gens:
            raise DomainError(f"word uses unknown generator {s!r}")
    current = v
    sections: list[tuple[str, int]] = []
    for gen in reversed(tuple(g)):
        current, sec = _act_single(tower, gen, current)
        if sec is not None:
            sections.append(sec)
    sections.reverse()
    return current, SignedWord(sections)


def apply_level1(aut: GroupAutomaton, g: SignedWord, x: Letter) -> Letter:
    """Image of a single letter under the level-1 permutation of ``g``."""
    y = x
    for s, e in reversed(tuple(g)):
        p = aut.perm.get(s)
        if p is None:
            raise DomainError(f"word uses unknown generator {s!r}")
        y = p.apply(y) if e == 1 else p.invert().apply(y)
    return y


def active_letters(aut: GroupAutomaton, g: SignedWord) -> set[Letter]:
    """Finite superset of the letters where the section of ``g`` can be
    nontrivial; everywhere else the whole word threads identity sections."""
    active: set[Letter] = set()
    suffix = SignedWord.identity()
    for s, e in reversed(tuple(g)):
        p = aut.perm.get(s)
        if p is None:
            raise DomainError(f"word uses unknown generator {s!r}")
        spots = [x for (a, x) in aut.restrictions if a == s]
        if e == -1:
            spots = [p.apply(x) for x in spots]
        inv = suffix.inverse()
        active.update(apply_level1(aut, inv, x) for x in spots)
        suffix = SignedWord([(s, e)]) * suffix
    return active


def activity_profile(tower: Tower, a: str, n: int) -> list[int]:
    """Number of level-k words with a nontrivial section, k = 1..n.

    Only stored restriction transitions are walked, so the counts are
    finite; for a dendroid tower each is at most the state count.
    """
    if a not in tower.generators():
        raise DomainError(f"unknown input state {a!r}")
    counts: list[int] = []
    frontier: dict[str, int] = {a: 1}
    for k in range(n):
        aut = tower.level(k)
        nxt: dict[str, int] = {}
        for state, mult in frontier.items():
            for (s, _x), b in aut.restrictions.items():
                if s == state:
                    nxt[b] = nxt.get(b, 0) + mult
        counts.append(sum(nxt.values()))
        frontier = nxt
    return counts


def section_at_letter(aut: GroupAutomaton, w: SignedWord, x: Letter):
    """Image and section of a single letter under a word over ``aut``'s
    input states; the section is a word over the output states."""
    current = x
    secs: list[tuple[str, int]] = []
    for s, e in reversed(tuple(w)):
        if e == 1:
            current, b = aut.step(s, current)
            if b is not ID:
                secs.append((b, 1))
        else:
            current, signed = aut.inverse_step(s, current)
            if signed is not None:
                secs.append(signed)
    secs.reverse()
    return current, SignedWord(secs)


def section_set(tower: Tower, g: SignedWord, n: int):
    """All distinct freely-reduced sections of ``g`` at levels 0..n, with a
    saturation flag (level n brought nothing new over level n-1)."""
    levels: list[set[SignedWord]] = [{g}]
    for k in range(n):
        aut = tower.level(k)
        nxt: set[SignedWord] = set()
        for w in levels[-1]:
            if w.is_identity():
                nxt.add(w)
                continue
            spots = sorted(active_letters(aut, w), key=lambda x: x.sort_key())
            for x in spots:
                _, sec = section_at_letter(aut, w, x)
                nxt.add(sec)
            if not _covers_alphabet(aut, spots):
                nxt.add(SignedWord.identity())
        levels.append(nxt)
    cumulative: set[SignedWord] = set()
    for lvl in levels:
        cumulative |= lvl
    before = set()
    for lvl in levels[:-1]:
        before |= lvl
    saturated = cumulative == before or n == 0
    return cumulative, saturated


def _covers_alphabet(aut: GroupAutomaton, spots) -> bool:
    if aut.alphabet.rays:
        return False
    return len(set(spots)) >= len(aut.alphabet.fin_letters)


@dataclass(frozen=True)
class ProductAutomaton:
    """Automaton on pair letters implementing
    (c, (x, y)) -> ((c(x), c|_x(y)), (c|_x)|_y) without materializing the
    product alphabet."""

    first: GroupAutomaton
    second: GroupAutomaton

    def __init__(self, first: GroupAutomaton, second: GroupAutomaton):
        if first.output_states != second.input_states:
            raise DomainError("output states of the first factor must feed the second")
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    @property
    def input_states(self) -> tuple[str, ...]:
        return self.first.input_states

    @property
    def output_states(self) -> tuple[str, ...]:
        return self.second.output_states

    def step(self, c: str | None, pair: tuple[Letter, Letter]):
        x, y = pair
        x2, b = self.first.step(c, x)
        y2, out = self.second.step(b, y)
        return (x2, y2), out

    def inverse_step(self, c: str | None, pair: tuple[Letter, Letter]):
        x, y = pair
        x0, signed_b = self.first.inverse_step(c, x)
        if signed_b is None:
            return (x0, y), None
        b, _ = signed_b
        y0, signed_out = self.second.inverse_step(b, y)
        return (x0, y0), signed_out


def product(aut1: GroupAutomaton, aut2: GroupAutomaton) -> ProductAutomaton:
    return ProductAutomaton(aut1, aut2)


@dataclass
class SchreierBall:
    """Ball of the word metric around ``center``; edges are generator
    moves (v, a, a(v)) with both endpoints inside the ball."""

    center: LevelWord
    radius: int
    vertices: list[LevelWord]
    edges: list[tuple[LevelWord, str, LevelWord]]

    def to_dot(self, generators: tuple[str, ...]) -> str:
        from .dot import schreier_dot

        return schreier_dot(self, generators)

    def to_json_dict(self) -> dict:
        return {
            "center": format_level_word(self.center),
            "radius": self.radius,
            "vertices": [format_level_word(v) for v in self.vertices],
            "edges": [
                [format_level_word(u), a, format_level_word(w)] for u, a, w in self.edges
            ],
        }


def schreier_ball(tower: Tower, center: LevelWord, radius: int) -> SchreierBall:
    """Exact word-metric ball via breadth-first search over generator and
    inverse moves, in deterministic discovery order."""
    tower.check_word(center)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    gens = tower.generators()
    moves = [(a, 1) for a in gens] + [(a, -1) for a in gens]
    dist = {center: 0}
    order = [center]
    frontier = [center]
    for d in range(radius):
        nxt = []
        for v in frontier:
            for gen in moves:
                w, _ = _act_single(tower, gen, v)
                if w not in dist:
                    dist[w] = d + 1
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
    ball = set(order)
    edges = []
    for v in order:
        for a in gens:
            w, _ = _act_single(tower, (a, 1), v)
            if w in ball:
                edges.append((v, a, w))
    return SchreierBall(center, radius, order, edges)


@dataclass
class WalkStats:
    start: LevelWord
    steps: int
    trials: int
    seed: int
    return_probability: dict[int, float]  # even time -> estimate

    def to_json_dict(self) -> dict:
        return {
            "start": format_level_word(self.start),
            "steps": self.steps,
            "trials": self.trials,
            "seed": self.seed,
            "p_hat": {str(t): p for t, p in sorted(self.return_probability.items())},
        }


def walk_return_stats(
    tower: Tower,
    start: LevelWord,
    steps: int,
    trials: int,
    seed: int,
) -> WalkStats:
    """Monte-Carlo return probabilities of the uniform walk on generators
    and inverses.  Per-trial derived seeds keep the result a deterministic
    function of (seed, trials) whatever the execution order."""
    tower.check_word(start)
    if steps % 2 != 0 or steps <= 0:
        raise ValueError("steps must be a positive even integer")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    gens = tower.generators()
    moves = [(a, 1) for a in gens] + [(a, -1) for a in gens]
    hits = {t: 0 for t in range(2, steps + 1, 2)}
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        current = start
        for t in range(1, steps + 1):
            current, _ = _act_single(tower, rng.choice(moves), current)
            if t % 2 == 0 and current == start:
                hits[t] += 1
    return WalkStats(
        start, steps, trials, seed, {t: hits[t] / trials for t in hits}
    )
