"""Non-autonomous group automata and the dendroid-automaton test.

An automaton here is a map (input state, letter) -> (letter, output
state) whose letter maps are bijections, with two finite state sets that
may differ.  The identity is a reserved symbol (``None`` in code, ``"Id"``
in text): it is never a stored state, fixes every letter, and restricts
to itself.  Restrictions are stored sparsely; omitted pairs restrict to
the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .alphabet import AlphabetSpec, Letter, parse_letter
from .exceptions import DomainError, FormatError
from .family import is_dendroid_family
from .permutation import FDPerm

ID = None  # reserved identity symbol; rendered as "Id"
ID_NAME = "Id"


@dataclass
class DendroidReport:
    """Result of the three-part dendroid-automaton check."""

    condition1: bool
    condition2: bool
    condition3: bool
    witnesses: list[str] = field(default_factory=list)

    @property
    def is_dendroid(self) -> bool:
        return self.condition1 and self.condition2 and self.condition3

    def to_json_dict(self) -> dict:
        return {
            "is_dendroid": self.is_dendroid,
            "condition1": self.condition1,
            "condition2": self.condition2,
            "condition3": self.condition3,
            "witnesses": list(self.witnesses),
        }


@dataclass(frozen=True)
class GroupAutomaton:
    """Group automaton with input states A, output states B and sparse
    restriction table; all unlisted (state, letter) pairs restrict to Id."""

    input_states: tuple[str, ...]
    output_states: tuple[str, ...]
    alphabet: AlphabetSpec
    perm: dict[str, FDPerm]
    restrictions: dict[tuple[str, Letter], str]

    def __init__(self, input_states, output_states, alphabet, perm, restrictions):
        object.__setattr__(self, "input_states", tuple(input_states))
        object.__setattr__(self, "output_states", tuple(output_states))
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "perm", dict(perm))
        rest = {}
        for key, b in dict(restrictions).items():
            a, x = key
            rest[(a, x)] = b
        object.__setattr__(self, "restrictions", rest)
        self._validate()

    def _validate(self) -> None:
        if len(set(self.input_states)) != len(self.input_states):
            raise ValueError("duplicate input states")
        if len(set(self.output_states)) != len(self.output_states):
            raise ValueError("duplicate output states")
        for s in (*self.input_states, *self.output_states):
            if s == ID_NAME:
                raise ValueError(f"{ID_NAME!r} is reserved for the identity")
        if set(self.perm) != set(self.input_states):
            raise ValueError("perm table must cover exactly the input states")
        for a, p in self.perm.items():
            if p.alphabet != self.alphabet:
                raise ValueError(f"permutation of state {a!r} uses a different alphabet")
        for (a, x), b in self.restrictions.items():
            if a not in self.perm:
                raise DomainError(f"restriction for unknown input state {a!r}")
            self.alphabet.require(x)
            if b not in self.output_states:
                raise DomainError(f"restriction ({a}, {x}) targets unknown output state {b!r}")

    # -- single moves --------------------------------------------------------

    def step(self, a: str | None, x: Letter) -> tuple[Letter, str | None]:
        """One move: (a, x) -> (a(x), a|_x).  The identity fixes and
        restricts to itself."""
        self.alphabet.require(x)
        if a is ID or a == ID_NAME:
            return (x, ID)
        p = self.perm.get(a)
        if p is None:
            raise DomainError(f"unknown input state {a!r}")
        return (p.apply(x), self.restrictions.get((a, x), ID))

    def inverse_step(self, a: str | None, y: Letter) -> tuple[Letter, tuple[str, int] | None]:
        """Move of the inverse letter: returns (a^{-1}(y), signed section).

        The section of a^{-1} at y is the inverse of the section of a at
        a^{-1}(y); it is reported as (state, -1), or None for the identity.
        """
        self.alphabet.require(y)
        if a is ID or a == ID_NAME:
            return (y, None)
        p = self.perm.get(a)
        if p is None:
            raise DomainError(f"unknown input state {a!r}")
        x = p.invert().apply(y)
        b = self.restrictions.get((a, x), ID)
        return (x, None if b is ID else (b, -1))

    # -- dendroid conditions ---------------------------------------------------

    def level_family(self) -> list[FDPerm]:
        return [self.perm[a] for a in self.input_states]

    def validate_dendroid(self) -> DendroidReport:
        witnesses: list[str] = []

        verdict = is_dendroid_family(self.level_family(), names=self.input_states)
        condition1 = verdict.is_dendroid
        if not condition1:
            witnesses.append(f"condition1: {verdict.certificate.kind}: {verdict.certificate.detail}"
                             if verdict.certificate.detail
                             else f"condition1: {verdict.certificate.kind}")

        counts: dict[str, list[tuple[str, Letter]]] = {b: [] for b in self.output_states}
        for (a, x), b in self.restrictions.items():
            counts[b].append((a, x))
        condition2 = True
        for b in self.output_states:
            hits = sorted(counts[b], key=lambda ax: (self.input_states.index(ax[0]), ax[1].sort_key()))
            if len(hits) != 1:
                condition2 = False
                if not hits:
                    witnesses.append(f"condition2: output state {b} never occurs as a restriction")
                else:
                    sites = ", ".join(f"({a}, {x})" for a, x in hits)
                    witnesses.append(f"condition2: output state {b} occurs {len(hits)} times: {sites}")

        condition3 = True
        for a in self.input_states:
            p = self.perm[a]
            per_orbit: dict = {}
            for (a2, x), b in sorted(
                self.restrictions.items(),
                key=lambda kv: (kv[0][0], kv[0][1].sort_key()),
            ):
                if a2 != a:
                    continue
                kind, key = p.classify(x)
                if kind == "infinite":
                    condition3 = False
                    witnesses.append(
                        f"condition3: restriction ({a}, {x}) -> {b} sits on the infinite orbit of ray {key!r}"
                    )
                    continue
                orbit_id = (kind, key)
                if orbit_id in per_orbit:
                    condition3 = False
                    other = per_orbit[orbit_id]
                    witnesses.append(
                        f"condition3: restrictions ({a}, {other}) and ({a}, {x}) share one finite orbit of {a}"
                    )
                else:
                    per_orbit[orbit_id] = x

        return DendroidReport(condition1, condition2, condition3, witnesses)

    # -- convenience -------------------------------------------------------

    def with_restrictions(self, restrictions) -> "GroupAutomaton":
        return GroupAutomaton(
            self.input_states, self.output_states, self.alphabet, self.perm, restrictions
        )

    def sorted_restrictions(self) -> list[tuple[str, Letter, str]]:
        order = {a: i for i, a in enumerate(self.input_states)}
        items = [(a, x, b) for (a, x), b in self.restrictions.items()]
        items.sort(key=lambda t: (order[t[0]], t[1].sort_key()))
        return items

    def to_json_dict(self) -> dict:
        return {
            "alphabet": self.alphabet.to_json_dict(),
            "input_states": list(self.input_states),
            "output_states": list(self.output_states),
            "perms": {a: self.perm[a].to_json_dict() for a in self.input_states},
            "restrictions": [[a, str(x), b] for a, x, b in self.sorted_restrictions()],
        }


# -- file format -------------------------------------------------------------


def dumps(aut: GroupAutomaton) -> str:
    """Canonical JSON text: declared state order, sorted restrictions."""
    return json.dumps(aut.to_json_dict(), indent=2, ensure_ascii=True) + "\n"


def dump(aut: GroupAutomaton, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(aut))


def _expect(obj, key, types, where):
    if key not in obj:
        raise FormatError(where, f"missing field {key!r}")
    val = obj[key]
    if not isinstance(val, types):
        raise FormatError(f"{where}.{key}", f"expected {types}, got {type(val).__name__}")
    return val


def _parse_perm(alpha: AlphabetSpec, obj, where) -> FDPerm:
    if not isinstance(obj, dict):
        raise FormatError(where, "permutation must be an object")
    patch_raw = obj.get("patch", [])
    if not isinstance(patch_raw, list):
        raise FormatError(f"{where}.patch", "must be a list of [from, to] pairs")
    patch = {}
    for i, pair in enumerate(patch_raw):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise FormatError(f"{where}.patch[{i}]", "must be a [from, to] pair")
        try:
            x = alpha.parse(str(pair[0]))
            y = alpha.parse(str(pair[1]))
        except ValueError as exc:
            raise FormatError(f"{where}.patch[{i}]", str(exc)) from None
        if x in patch:
            raise FormatError(f"{where}.patch[{i}]", f"duplicate patch entry for {x}")
        patch[x] = y
    shifts_raw = obj.get("ray_shift", {})
    if not isinstance(shifts_raw, dict):
        raise FormatError(f"{where}.ray_shift", "must be an object")
    shifts = {}
    for r, d in shifts_raw.items():
        if r not in alpha.rays:
            raise FormatError(f"{where}.ray_shift", f"unknown ray {r!r}")
        if not isinstance(d, int):
            raise FormatError(f"{where}.ray_shift.{r}", "shift must be an integer")
        shifts[r] = d
    window = obj.get("window")
    if window is not None and not isinstance(window, int):
        raise FormatError(f"{where}.window", "must be an integer")
    try:
        return FDPerm(alpha, patch, shifts, window)
    except ValueError as exc:
        raise FormatError(where, str(exc)) from None


def loads(text: str) -> GroupAutomaton:
    """Parse the automaton file format; raises FormatError with the
    offending field (or JSON line/column for syntax errors)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from None
    if not isinstance(data, dict):
        raise FormatError("$", "top level must be an object")

    alpha_raw = _expect(data, "alphabet", dict, "$")
    fin = _expect(alpha_raw, "fin", list, "$.alphabet")
    rays = _expect(alpha_raw, "rays", list, "$.alphabet")
    try:
        alpha = AlphabetSpec(fin, rays)
    except ValueError as exc:
        raise FormatError("$.alphabet", str(exc)) from None

    input_states = _expect(data, "input_states", list, "$")
    output_states = _expect(data, "output_states", list, "$")
    perms_raw = _expect(data, "perms", dict, "$")
    perms = {}
    for a in input_states:
        if a not in perms_raw:
            raise FormatError("$.perms", f"missing permutation for input state {a!r}")
        perms[a] = _parse_perm(alpha, perms_raw[a], f"$.perms.{a}")
    for a in perms_raw:
        if a not in input_states:
            raise FormatError("$.perms", f"permutation for undeclared state {a!r}")

    rest_raw = data.get("restrictions", [])
    if not isinstance(rest_raw, list):
        raise FormatError("$.restrictions", "must be a list of [state, letter, state] triples")
    restrictions = {}
    for i, triple in enumerate(rest_raw):
        where = f"$.restrictions[{i}]"
        if not (isinstance(triple, list) and len(triple) == 3):
            raise FormatError(where, "must be a [state, letter, state] triple")
        a, x_raw, b = triple
        if a not in input_states:
            raise FormatError(where, f"unknown input state {a!r}")
        if b == ID_NAME:
            raise FormatError(where, "identity restrictions are implicit; omit the triple")
        if b not in output_states:
            raise FormatError(where, f"unknown output state {b!r}")
        try:
            x = alpha.parse(str(x_raw))
        except ValueError as exc:
            raise FormatError(where, str(exc)) from None
        if (a, x) in restrictions:
            raise FormatError(where, f"duplicate restriction ({a}, {x})")
        restrictions[(a, x)] = b

    try:
        return GroupAutomaton(input_states, output_states, alpha, perms, restrictions)
    except ValueError as exc:
        raise FormatError("$", str(exc)) from None


def load(path) -> GroupAutomaton:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
