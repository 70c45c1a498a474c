"""Finite descriptions of countably infinite alphabets.

An alphabet consists of finitely many named letters plus finitely many
"rays", each ray standing for a bi-infinite integer-indexed family of
letters.  Rays are where the infinite generator orbits live; everything
else in the library only ever touches finite windows of an alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .exceptions import DomainError

_FORBIDDEN = set(':,^| \t\n"')


def _check_identifier(name: str, what: str) -> None:
    if not name:
        raise ValueError(f"{what} must be nonempty")
    bad = _FORBIDDEN.intersection(name)
    if bad:
        raise ValueError(f"{what} {name!r} contains forbidden characters {sorted(bad)}")


@dataclass(frozen=True, slots=True)
class Letter:
    """One letter: a named finite letter, or point ``index`` on ray ``name``.

    ``index is None`` marks a finite letter.  Letters order canonically:
    all finite letters (by name) before all ray letters (by ray, then index).
    """

    name: str
    index: int | None = None

    @property
    def is_ray(self) -> bool:
        return self.index is not None

    def sort_key(self) -> tuple:
        if self.index is None:
            return (0, self.name, 0)
        return (1, self.name, self.index)

    def __lt__(self, other: "Letter") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.index is None:
            return self.name
        return f"{self.name}:{self.index}"

    def __repr__(self) -> str:
        return f"Letter({str(self)!r})"


def fin(name: str) -> Letter:
    return Letter(name)


def ray(name: str, index: int) -> Letter:
    return Letter(name, index)


def parse_letter(text: str) -> Letter:
    """Parse ``"name"`` or ``"ray:index"`` (e.g. ``"z:-3"``). Syntax only."""
    text = text.strip()
    if not text:
        raise ValueError("empty letter")
    if ":" in text:
        head, _, tail = text.rpartition(":")
        try:
            idx = int(tail)
        except ValueError:
            raise ValueError(f"bad ray letter {text!r}: index {tail!r} is not an integer") from None
        if not head:
            raise ValueError(f"bad ray letter {text!r}: missing ray name")
        return Letter(head, idx)
    return Letter(text)


@dataclass(frozen=True)
class AlphabetSpec:
    """Finite presentation of a countable alphabet.

    ``fin_letters`` and ``rays`` are disjoint identifier sets; at least one
    letter must exist.  Immutable, safe to share.
    """

    fin_letters: frozenset[str]
    rays: frozenset[str]

    def __init__(self, fin_letters=(), rays=()):
        object.__setattr__(self, "fin_letters", frozenset(fin_letters))
        object.__setattr__(self, "rays", frozenset(rays))
        for name in self.fin_letters:
            _check_identifier(name, "letter name")
        for name in self.rays:
            _check_identifier(name, "ray name")
        overlap = self.fin_letters & self.rays
        if overlap:
            raise ValueError(f"identifiers used both as letter and ray: {sorted(overlap)}")
        if not self.fin_letters and not self.rays:
            raise ValueError("alphabet must have at least one letter")

    @property
    def sorted_fin(self) -> tuple[str, ...]:
        return tuple(sorted(self.fin_letters))

    @property
    def sorted_rays(self) -> tuple[str, ...]:
        return tuple(sorted(self.rays))

    def contains(self, letter: Letter) -> bool:
        if letter.index is None:
            return letter.name in self.fin_letters
        return letter.name in self.rays

    def require(self, letter: Letter) -> Letter:
        if not self.contains(letter):
            raise DomainError(f"letter {letter} is not in the alphabet")
        return letter

    def parse(self, text: str) -> Letter:
        return self.require(parse_letter(text))

    def window(self, radius: int) -> list[Letter]:
        """All finite letters plus Ray(r, i) for |i| <= radius, in canonical order."""
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        out = [Letter(n) for n in self.sorted_fin]
        for r in self.sorted_rays:
            out.extend(Letter(r, i) for i in range(-radius, radius + 1))
        return out

    def iter_window(self, radius: int) -> Iterator[Letter]:
        return iter(self.window(radius))

    def to_json_dict(self) -> dict:
        return {"fin": list(self.sorted_fin), "rays": list(self.sorted_rays)}
