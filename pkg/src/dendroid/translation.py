"""Structural homomorphism to the integer lattice and bounded-depth
equality diagnostics.

For a validated automaton, the generators whose level-1 permutation has
an infinite orbit index a lattice Z^J.  A word maps to its net exponent
vector over J; words with zero vector act with finite support on level 1,
which ``support`` computes exactly on a provably sufficient window.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import LevelWord, Tower, active_letters, apply_level1, section_at_letter
from .alphabet import Letter
from .automaton import GroupAutomaton
from .exceptions import DomainError, RadiusError
from .words import SignedWord


def infinite_generators(aut: GroupAutomaton) -> tuple[str, ...]:
    """Input states whose letter permutation has an infinite orbit, in
    declared order.  With unit ray shifts that is exactly: some ray moves."""
    return tuple(
        a for a in aut.input_states if any(d != 0 for d in aut.perm[a].ray_shift.values())
    )


def translation_vector(aut: GroupAutomaton, w: SignedWord) -> dict[str, int]:
    """Net exponent of each infinite-orbit generator in ``w``."""
    for s in w.states():
        if s not in aut.input_states:
            raise DomainError(f"word uses unknown generator {s!r}")
    return {j: w.exponent_sum(j) for j in infinite_generators(aut)}


@dataclass(frozen=True)
class FiniteSupport:
    """Exact, complete list of level-1 letters moved by a word."""

    moved: tuple[Letter, ...]

    def __str__(self) -> str:
        inner = ", ".join(str(x) for x in self.moved)
        return f"FiniteSupport([{inner}])"


@dataclass(frozen=True)
class TailShift:
    """The composite shifts a whole ray tail, so its support is infinite."""

    ray: str
    shift: int

    def __str__(self) -> str:
        sign = "+" if self.shift > 0 else ""
        return f"TailShift({self.ray}, {sign}{self.shift})"


def net_ray_shifts(aut: GroupAutomaton, w: SignedWord) -> dict[str, int]:
    """Eventual shift of the composite on each ray: signed sum of the
    generators' shifts."""
    shifts: dict[str, int] = {r: 0 for r in aut.alphabet.sorted_rays}
    for s, e in w:
        p = aut.perm.get(s)
        if p is None:
            raise DomainError(f"word uses unknown generator {s!r}")
        for r, d in p.ray_shift.items():
            shifts[r] += e * d
    return shifts


def required_support_radius(aut: GroupAutomaton, w: SignedWord) -> int:
    """Window radius past which every composite orbit step is a pure shift.

    Beyond max(window_bound) + |w| no intermediate image can reach a patch,
    so a zero net shift fixes the letter; the moved set is complete there.
    """
    reach = 0
    for s, _ in w:
        p = aut.perm.get(s)
        if p is None:
            raise DomainError(f"word uses unknown generator {s!r}")
        reach = max(reach, p.window_bound + 2)
    return reach + len(w)


def support(aut: GroupAutomaton, w: SignedWord, radius: int | None = None):
    """FiniteSupport(moved letters) when all net tail shifts vanish, else
    TailShift naming a shifted ray."""
    need = required_support_radius(aut, w)
    if radius is None:
        radius = need
    elif radius < need:
        raise RadiusError(need, f"support window {radius} too small; need at least {need}")
    shifts = net_ray_shifts(aut, w)
    for r in aut.alphabet.sorted_rays:
        if shifts[r] != 0:
            return TailShift(r, shifts[r])
    moved = [
        x for x in aut.alphabet.window(radius) if apply_level1(aut, w, x) != x
    ]
    return FiniteSupport(tuple(moved))


def _distinguishing_letter(aut: GroupAutomaton, u: SignedWord) -> Letter | None:
    """A level-1 letter moved by ``u``, or None when u acts trivially."""
    shifts = net_ray_shifts(aut, u)
    for r in aut.alphabet.sorted_rays:
        if shifts[r] != 0:
            # Any tail letter is moved by the nonzero net shift.
            return Letter(r, required_support_radius(aut, u) + 1)
    for x in aut.alphabet.window(required_support_radius(aut, u)):
        if apply_level1(aut, u, x) != x:
            return x
    return None


def bounded_equal(
    tower: Tower, w1: SignedWord, w2: SignedWord, depth: int
) -> tuple[bool, LevelWord | None]:
    """Do ``w1`` and ``w2`` act identically on all words of length <= depth?

    Checks w1 * w2^{-1} for triviality level by level; away from the
    finitely many letters with a potentially nontrivial section both sides
    thread identity sections, so only that closure is searched.  Returns
    (verdict, distinguishing word or None).
    """
    gens = tower.generators()
    for s in w1.states() | w2.states():
        if s not in gens:
            raise DomainError(f"word uses unknown generator {s!r}")
    u = w1 * w2.inverse()
    witness = _trivial_witness(tower, 0, u, depth)
    if witness is None:
        return True, None
    # u moves v, hence w1 and w2 differ at w2^{-1}(v).
    from .action import act

    v, _ = act(tower, w2.inverse(), witness)
    return False, v


def _trivial_witness(tower: Tower, level: int, u: SignedWord, depth: int):
    if depth <= 0 or u.is_identity():
        return None
    aut = tower.level(level)
    x = _distinguishing_letter(aut, u)
    if x is not None:
        return (x,)
    if depth == 1:
        return None
    for x in sorted(active_letters(aut, u), key=lambda l: l.sort_key()):
        _, sec = section_at_letter(aut, u, x)
        deeper = _trivial_witness(tower, level + 1, sec, depth - 1)
        if deeper is not None:
            return (x,) + deeper
    return None
