"""Dendroid families of permutations via the core-graph tree criterion.

The cycle diagram of a family of permutations is the 2-complex with the
alphabet as 0-skeleton, a 1-cell x -> a(x) for every letter and generator,
and a 2-cell glued along every finite orbit.  The family is dendroid when
that complex is contractible, which happens exactly when the graph
obtained by deleting one edge per finite orbit per generator (the core
graph) is a tree.

Infinite alphabets are handled by condensing each shifted ray tail to a
single boundary vertex.  That is sound only when at most one generator
shifts a given ray: two generators shifting the same tail have infinite
orbits sharing infinitely many letters, which already forces a cycle, so
such families are rejected up front with a witness.

``cycle_diagram_oracle`` decides the finite-alphabet case from first
principles (cell counts and connectivity of the explicit complex) and
shares no code with the core-graph path; it exists as an independent
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alphabet import Letter
from .exceptions import RadiusError
from .permutation import FDPerm


@dataclass(frozen=True, slots=True)
class TailVertex:
    """Condensed boundary vertex for one shifted ray tail."""

    ray: str
    side: int  # +1 or -1

    def __str__(self) -> str:
        return f"{self.ray}:{'+' if self.side > 0 else '-'}inf"

    def sort_key(self) -> tuple:
        return (2, self.ray, self.side)


def _vkey(v) -> tuple:
    return v.sort_key()


@dataclass
class CoreGraph:
    """Schreier 1-skeleton minus one edge per finite orbit, tails condensed.

    ``edges`` are undirected, labeled by generator name, kept with
    multiplicity (parallel edges are genuine cycles).
    """

    vertices: list
    edges: list  # (u, gen_name, v)
    radius: int
    names: tuple[str, ...]


@dataclass
class FamilyCertificate:
    """Witness backing an is_dendroid_family verdict.

    kind: "tree" (edges form a spanning tree), "cycle" (edges form a
    closed walk), "disconnected" (two vertices in distinct components), or
    "tail-conflict" (two generators shift the same ray).
    """

    kind: str
    edges: list = field(default_factory=list)
    detail: str = ""

    def to_dot(self, graph: CoreGraph | None = None) -> str:
        from .dot import core_graph_dot

        return core_graph_dot(self, graph)


@dataclass
class FamilyVerdict:
    is_dendroid: bool
    certificate: FamilyCertificate
    graph: CoreGraph | None = None

    def __bool__(self) -> bool:
        return self.is_dendroid


def _shared_alphabet(family: list[FDPerm]):
    if not family:
        raise ValueError("empty family")
    alpha = family[0].alphabet
    for p in family[1:]:
        if p.alphabet != alpha:
            raise ValueError("family members use different alphabets")
    return alpha


def _gen_names(family, names) -> tuple[str, ...]:
    if names is None:
        return tuple(f"a{i}" for i in range(len(family)))
    if len(names) != len(family):
        raise ValueError("names/family length mismatch")
    return tuple(names)


def auto_radius(family: list[FDPerm]) -> int:
    """Window radius guaranteed to contain every finite orbit and splice."""
    m = 0
    for p in family:
        m = max(m, p.window_bound)
        for x, y in p.patch.items():
            for letter in (x, y):
                if letter.index is not None:
                    m = max(m, abs(letter.index))
    return m + len(family) + 2


def tail_conflicts(family: list[FDPerm], names=None) -> list[tuple[str, str, str]]:
    """Rays shifted by more than one generator, as (ray, gen, gen) triples."""
    names = _gen_names(family, names)
    by_ray: dict[str, list[str]] = {}
    for p, name in zip(family, names):
        for r, d in p.ray_shift.items():
            if d:
                by_ray.setdefault(r, []).append(name)
    out = []
    for r in sorted(by_ray):
        gens = by_ray[r]
        if len(gens) > 1:
            out.append((r, gens[0], gens[1]))
    return out


def core_graph(family: list[FDPerm], radius: int, names=None) -> CoreGraph:
    """Build the condensed core graph at the given window radius.

    Edge deletion is deterministic: in each finite orbit the edge leaving
    the canonically-maximal letter is dropped.
    """
    alpha = _shared_alphabet(family)
    names = _gen_names(family, names)
    need = auto_radius(family)
    if radius < need:
        raise RadiusError(need, f"radius {radius} too small; need at least {need}")
    conflicts = tail_conflicts(family, names)
    if conflicts:
        r, g1, g2 = conflicts[0]
        raise ValueError(
            f"generators {g1} and {g2} both shift ray {r!r}; "
            "tails cannot be condensed (orbits share infinitely many letters)"
        )

    window = alpha.window(radius)
    vertices: list = list(window)
    shifted = sorted({r for p in family for r, d in p.ray_shift.items() if d})
    for r in shifted:
        vertices.append(TailVertex(r, 1))
        vertices.append(TailVertex(r, -1))

    in_window = set(window)
    edges = []
    for p, name in zip(family, names):
        dec = p.orbits()
        covered = set()
        for orbit in dec.finite:
            cycle = orbit.letters
            covered.update(cycle)
            if len(cycle) == 1:
                continue  # the only edge is the deleted loop
            drop = max(range(len(cycle)), key=lambda i: cycle[i].sort_key())
            for i in range(len(cycle)):
                if i == drop:
                    continue
                edges.append((cycle[i], name, cycle[(i + 1) % len(cycle)]))
        # Remaining moved letters lie on infinite orbits: keep their edges,
        # sending images beyond the boundary to the matching tail vertex.
        for x in window:
            y = p.apply(x)
            if y == x or x in covered:
                continue
            if y in in_window:
                edges.append((x, name, y))
            else:
                edges.append((x, name, TailVertex(y.name, 1 if y.index > 0 else -1)))
        for r, d in sorted(p.ray_shift.items()):
            incoming = Letter(r, -(radius + 1) * (1 if d > 0 else -1))
            entry = p.apply(incoming)
            edges.append((TailVertex(r, -1 if d > 0 else 1), name, entry))
    return CoreGraph(vertices, edges, radius, names)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def _find_cycle(accepted, closing):
    """Path between the endpoints of ``closing`` through accepted edges."""
    u, name, v = closing
    adj: dict = {}
    for a, lbl, b in accepted:
        adj.setdefault(a, []).append((b, (a, lbl, b)))
        adj.setdefault(b, []).append((a, (a, lbl, b)))
    prev = {u: None}
    queue = [u]
    while queue:
        cur = queue.pop(0)
        if cur == v:
            break
        for nxt, edge in adj.get(cur, []):
            if nxt not in prev:
                prev[nxt] = (cur, edge)
                queue.append(nxt)
    path = []
    cur = v
    while prev.get(cur) is not None:
        cur, edge = prev[cur]
        path.append(edge)
    path.reverse()
    return path + [closing]


def tree_check(graph: CoreGraph) -> FamilyVerdict:
    """Decide whether the core graph is a tree; produce a certificate."""
    uf = _UnionFind(graph.vertices)
    accepted = []
    for edge in graph.edges:
        u, _, v = edge
        if u == v:
            return FamilyVerdict(False, FamilyCertificate("cycle", [edge], "self-loop survived edge deletion"), graph)
        if not uf.union(u, v):
            cycle = _find_cycle(accepted, edge)
            return FamilyVerdict(False, FamilyCertificate("cycle", cycle, "closed walk in core graph"), graph)
        accepted.append(edge)
    roots = {uf.find(v) for v in graph.vertices}
    if len(roots) > 1:
        reps = sorted(roots, key=_vkey)[:2]
        detail = f"{reps[0]} and {reps[1]} lie in different components"
        return FamilyVerdict(False, FamilyCertificate("disconnected", [], detail), graph)
    return FamilyVerdict(True, FamilyCertificate("tree", list(graph.edges)), graph)


def is_dendroid_family(family: list[FDPerm], names=None) -> FamilyVerdict:
    """True iff the core graph at the automatic radius is a tree."""
    names_t = _gen_names(family, names)
    conflicts = tail_conflicts(family, names_t)
    if conflicts:
        r, g1, g2 = conflicts[0]
        detail = f"generators {g1} and {g2} both shift ray {r!r}: their orbits share a tail"
        return FamilyVerdict(False, FamilyCertificate("tail-conflict", [], detail), None)
    graph = core_graph(family, auto_radius(family), names_t)
    return tree_check(graph)


def cycle_diagram_oracle(family: list[FDPerm], names=None) -> bool:
    """Contractibility of the explicit cycle diagram (finite alphabets only).

    Builds the 2-complex cell counts directly: one 1-cell per (letter,
    generator), one 2-cell per orbit, and decides contractibility as
    connectivity of the 1-skeleton together with Euler characteristic 1.
    """
    alpha = _shared_alphabet(family)
    if alpha.rays:
        raise ValueError("cycle_diagram_oracle supports finite alphabets only")
    letters = alpha.window(0)
    n_vertices = len(letters)
    n_edges = 0
    n_faces = 0
    uf = _UnionFind(letters)
    for p in family:
        seen = set()
        for x in letters:
            n_edges += 1
            uf.union(x, p.apply(x))
            if x in seen:
                continue
            # enumerate the orbit of x exhaustively
            cur = x
            while True:
                seen.add(cur)
                cur = p.apply(cur)
                if cur == x:
                    break
            n_faces += 1
    components = {uf.find(x) for x in letters}
    return len(components) == 1 and (n_vertices - n_edges + n_faces) == 1
