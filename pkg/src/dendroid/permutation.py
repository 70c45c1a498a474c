"""Finitely-described permutations of an alphabet and their orbit structure.

An FDPerm is a bijection of a countable alphabet given by a finite
exceptional patch plus one eventual shift per ray.  All questions asked of
it (validity, inversion, orbit typing) reduce to finite windows:

* the map agrees with the pure shift-and-fix rule outside the patch, so a
  collision between two images can only involve letters of index at most
  ``window_bound + max|shift|``;
* an injective map that agrees with a bijection outside a finite set is
  itself a bijection, so checking injectivity on that window certifies
  bijectivity on the whole alphabet;
* a nontrivial finite orbit must both enter and leave the patch region,
  hence lies entirely inside ``window(window_bound)``.

Ray shifts are restricted to -1, 0, +1: a shift of magnitude d splits a
ray into d interleaved infinite orbits, which no finite patch can merge,
so unit shifts are exactly the regime where "one infinite orbit per
shifted ray" holds.  Longer jumps are expressed with several rays.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alphabet import AlphabetSpec, Letter
from .exceptions import DomainError


@dataclass(frozen=True, slots=True)
class FiniteOrbit:
    """A finite cycle, rotated to start at its canonically smallest letter."""

    letters: tuple[Letter, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "(" + " ".join(str(x) for x in self.letters) + ")"


@dataclass(frozen=True, slots=True)
class InfiniteOrbit:
    """The infinite orbit owning the escaping tail of ``ray``.

    ``exceptional`` lists the in-window letters of the orbit that do not
    lie on ``ray`` itself (letters spliced into the ray order by the
    patch), in forward orbit order.
    """

    ray: str
    shift: int
    exceptional: tuple[Letter, ...] = ()

    def __str__(self) -> str:
        sign = "+" if self.shift > 0 else ""
        extra = ""
        if self.exceptional:
            extra = " splice " + ",".join(str(x) for x in self.exceptional)
        return f"[{self.ray} {sign}{self.shift}{extra}]"


@dataclass(frozen=True)
class OrbitDecomposition:
    """Complete orbit classification of an FDPerm.

    Finite orbits are materialized except for fixed ray letters outside
    the patch, which form an infinite implicit family; the rays carrying
    them are listed in ``implicitly_fixed_rays``.
    """

    finite: tuple[FiniteOrbit, ...]
    infinite: tuple[InfiniteOrbit, ...]
    implicitly_fixed_rays: tuple[str, ...]


@dataclass(frozen=True)
class FDPerm:
    """Finitely-described permutation: finite patch + eventual ray shifts."""

    alphabet: AlphabetSpec
    patch: dict[Letter, Letter] = field(default_factory=dict)
    ray_shift: dict[str, int] = field(default_factory=dict)
    window_bound: int = 0

    def __init__(self, alphabet: AlphabetSpec, patch=None, ray_shift=None, window_bound=None):
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "patch", dict(patch or {}))
        shifts = {r: int(d) for r, d in (ray_shift or {}).items() if d != 0}
        object.__setattr__(self, "ray_shift", shifts)
        needed = 0
        for x, y in self.patch.items():
            for letter in (x, y):
                if letter.index is not None:
                    needed = max(needed, abs(letter.index))
        if window_bound is None:
            window_bound = needed
        elif window_bound < needed:
            raise ValueError(
                f"window_bound {window_bound} smaller than largest patch ray index {needed}"
            )
        object.__setattr__(self, "window_bound", int(window_bound))
        self._validate()

    # -- construction checks ------------------------------------------------

    def _validate(self) -> None:
        alpha = self.alphabet
        for r, d in self.ray_shift.items():
            if r not in alpha.rays:
                raise DomainError(f"ray_shift names unknown ray {r!r}")
            if abs(d) > 1:
                raise ValueError(
                    f"ray {r!r} has shift {d}; only shifts -1, 0, +1 are supported "
                    "(split longer jumps across several rays)"
                )
        for x, y in self.patch.items():
            alpha.require(x)
            alpha.require(y)
        # Injectivity on the collision window certifies global bijectivity:
        # outside it the map is the pure shift rule, a bijection.
        radius = self.window_bound + self._max_shift() + 1
        images = {}
        for x in alpha.window(radius):
            y = self.apply(x)
            if y in images:
                raise ValueError(f"not a bijection: {images[y]} and {x} both map to {y}")
            images[y] = x

    def _max_shift(self) -> int:
        return max((abs(d) for d in self.ray_shift.values()), default=0)

    # -- the permutation ----------------------------------------------------

    def apply(self, x: Letter) -> Letter:
        """Image of ``x``: patch where defined, eventual shift elsewhere."""
        if not self.alphabet.contains(x):
            raise DomainError(f"letter {x} is not in the alphabet")
        hit = self.patch.get(x)
        if hit is not None:
            return hit
        if x.index is not None:
            d = self.ray_shift.get(x.name, 0)
            if d:
                return Letter(x.name, x.index + d)
        return x

    def invert(self) -> "FDPerm":
        inv_patch = {y: x for x, y in self.patch.items()}
        inv_shift = {r: -d for r, d in self.ray_shift.items()}
        return FDPerm(self.alphabet, inv_patch, inv_shift, self.window_bound)

    def is_identity(self) -> bool:
        return not self.ray_shift and all(x == y for x, y in self.patch.items())

    def moved_window_letters(self) -> list[Letter]:
        """Letters inside the validation window that the permutation moves."""
        radius = self.window_bound + self._max_shift() + 1
        return [x for x in self.alphabet.window(radius) if self.apply(x) != x]

    # -- orbits ---------------------------------------------------------------

    def _in_window(self, x: Letter, radius: int) -> bool:
        return x.index is None or abs(x.index) <= radius

    def orbits(self) -> OrbitDecomposition:
        """Classify every letter into finite orbits, infinite orbits, or
        implicit fixed points.

        Nontrivial finite orbits live inside ``window(window_bound)``; each
        shifted ray contributes exactly one infinite orbit (labeled by the
        ray whose escaping tail it owns); everything else is fixed.
        """
        w = self.window_bound
        trace_radius = w + 2
        finite: list[FiniteOrbit] = []
        seen: set[Letter] = set()
        for start in self.alphabet.window(w):
            if start in seen:
                continue
            cycle = [start]
            cur = self.apply(start)
            infinite_hit = False
            while cur != start:
                if not self._in_window(cur, trace_radius):
                    infinite_hit = True
                    break
                cycle.append(cur)
                cur = self.apply(cur)
            if infinite_hit:
                seen.update(cycle)
                continue
            seen.update(cycle)
            if len(cycle) == 1 and start.index is not None and start not in self.patch:
                continue  # unexceptional fixed ray letter: implicit
            k = min(range(len(cycle)), key=lambda i: cycle[i].sort_key())
            finite.append(FiniteOrbit(tuple(cycle[k:] + cycle[:k])))
        finite.sort(key=lambda o: o.letters[0].sort_key())

        infinite = tuple(
            self._infinite_orbit(r) for r in sorted(self.ray_shift)
        )
        fixed_rays = tuple(r for r in self.alphabet.sorted_rays if self.ray_shift.get(r, 0) == 0)
        return OrbitDecomposition(tuple(finite), infinite, fixed_rays)

    def _infinite_orbit(self, r: str) -> InfiniteOrbit:
        d = self.ray_shift[r]
        trace_radius = self.window_bound + 2
        inv = self.invert()
        # Walk backward from just inside the escaping boundary until the
        # orbit leaves the window into its incoming tail.
        cur = Letter(r, (self.window_bound + 1) * (1 if d > 0 else -1))
        path = []
        while self._in_window(cur, trace_radius):
            path.append(cur)
            cur = inv.apply(cur)
        path.reverse()
        exceptional = tuple(x for x in path if not (x.index is not None and x.name == r))
        return InfiniteOrbit(r, d, exceptional)

    def classify(self, x: Letter):
        """Orbit type of a single letter.

        Returns ``("finite", key)`` with ``key`` the orbit's smallest letter,
        ``("infinite", ray_label)``, or ``("fixed", x)`` for an implicit
        fixed point.
        """
        self.alphabet.require(x)
        w = self.window_bound
        trace_radius = w + 2
        if x.index is not None and abs(x.index) > trace_radius:
            d = self.ray_shift.get(x.name, 0)
            if d == 0:
                return ("fixed", x)
            # Pure drift segment: membership matches the boundary letter on
            # the side x approaches the window from.
            x = Letter(x.name, trace_radius if x.index > 0 else -trace_radius)
        if self.apply(x) == x:
            if x.index is not None and x not in self.patch:
                return ("fixed", x)
            return ("finite", x)
        start = x
        best = x
        cur = self.apply(x)
        while cur != start:
            if not self._in_window(cur, trace_radius):
                # Escaped: the escaping tail names the orbit.
                return ("infinite", cur.name)
            if cur.sort_key() < best.sort_key():
                best = cur
            cur = self.apply(cur)
        return ("finite", best)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        patch = sorted(self.patch.items(), key=lambda kv: kv[0].sort_key())
        return {
            "patch": [[str(x), str(y)] for x, y in patch],
            "ray_shift": {r: self.ray_shift[r] for r in sorted(self.ray_shift)},
            "window": self.window_bound,
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, FDPerm):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.patch == other.patch
            and self.ray_shift == other.ray_shift
            and self.window_bound == other.window_bound
        )

    def __hash__(self):
        return hash(
            (
                self.alphabet,
                tuple(sorted(((str(k), str(v)) for k, v in self.patch.items()))),
                tuple(sorted(self.ray_shift.items())),
                self.window_bound,
            )
        )


def identity_perm(alphabet: AlphabetSpec) -> FDPerm:
    return FDPerm(alphabet)
