"""Equitable sets: verification, fortified/primitive predicates, search, and
the homology construction of equitable sets with two curve classes per vertex.

A curve is a nonzero vector of its vertex group together with an offset.
The lifts of a curve to the flat of its vertex are the lines
``det(d, p) in offset + Z`` where ``d`` is the canonical primitive direction
of the vector.  Attaching curves sit at integer levels, so offsets live in
the open interval (0, 1).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import NotFound, RecursionLimit, ResourceLimit, SummandConditionFailed
from .group_model import MINUS, PLUS, SIDES, Edge, TubularGraph, h1_vertex_part, require_valid
from .lattice import (
    Vec,
    canonical_direction,
    det,
    intersection_number,
    intersection_number_set,
    is_primitive,
    vec,
)
from .limits import cap


@dataclass(frozen=True)
class CurveSpec:
    vec: Vec
    offset: Fraction

    @property
    def direction(self) -> Vec:
        return canonical_direction(self.vec)[0]


@dataclass(frozen=True)
class EquitableSet:
    curves: Mapping[str, tuple[CurveSpec, ...]]

    @classmethod
    def from_vectors(cls, vectors: Mapping[str, list]) -> "EquitableSet":
        """Build a set from bare vectors, assigning offsets k/(n+1) per parallel class."""
        return cls({v: assign_offsets([vec(a) for a in vs]) for v, vs in vectors.items()})

    def at(self, v: str) -> tuple[CurveSpec, ...]:
        return tuple(self.curves.get(v, ()))

    def vectors(self, v: str) -> list[Vec]:
        return [c.vec for c in self.at(v)]

    def total_curves(self) -> int:
        return sum(len(cs) for cs in self.curves.values())

    def __eq__(self, other):
        if not isinstance(other, EquitableSet):
            return NotImplemented
        keys = set(self.curves) | set(other.curves)
        return all(self.at(k) == other.at(k) for k in keys)

    def __hash__(self):
        return hash(tuple(sorted((k, self.at(k)) for k in self.curves)))


def assign_offsets(vectors: list[Vec]) -> tuple[CurveSpec, ...]:
    classes: dict[Vec, list[int]] = {}
    for i, a in enumerate(vectors):
        classes.setdefault(canonical_direction(a)[0], []).append(i)
    offsets = [Fraction(0)] * len(vectors)
    for members in classes.values():
        n = len(members)
        for k, i in enumerate(members, start=1):
            offsets[i] = Fraction(k, n + 1)
    return tuple(CurveSpec(a, o) for a, o in zip(vectors, offsets))


# ---------------------------------------------------------------------------
# Verification


@dataclass
class VerifyReport:
    ok: bool
    balances: dict[str, tuple[int, int]]
    failures: list[tuple[str, str]] = field(default_factory=list)


def finite_index(vectors) -> bool:
    return any(det(a, b) != 0 for a, b in itertools.combinations(vectors, 2))


def balance(g: TubularGraph, s: EquitableSet, e: Edge) -> tuple[int, int]:
    return (
        intersection_number_set(e.phi_minus, s.vectors(e.minus)),
        intersection_number_set(e.phi_plus, s.vectors(e.plus)),
    )


def verify_equitable(g: TubularGraph, s: EquitableSet) -> VerifyReport:
    require_valid(g)
    failures = []
    for v in s.curves:
        if v not in g.vertices:
            failures.append(("UnknownVertex", v))
    balances = {}
    for e in g.edges:
        lhs, rhs = balance(g, s, e)
        balances[e.id] = (lhs, rhs)
        if lhs != rhs:
            failures.append(("Unbalanced", f"{e.id}: {lhs} != {rhs}"))
    for v in g.vertices:
        curves = s.at(v)
        if not finite_index([c.vec for c in curves]):
            failures.append(("InfiniteIndex", v))
        seen = {}
        for i, c in enumerate(curves):
            if tuple(c.vec) == (0, 0):
                failures.append(("ZeroCurve", f"{v}[{i}]"))
                continue
            if not 0 < c.offset < 1:
                failures.append(("OffsetRange", f"{v}[{i}] offset {c.offset}"))
            key = (c.direction, c.offset)
            if key in seen:
                failures.append(("NotDisjoint", f"{v}[{seen[key]}] and {v}[{i}]"))
            seen.setdefault(key, i)
    return VerifyReport(not failures, balances, failures)


def is_fortified(g: TubularGraph, s: EquitableSet):
    """Whether every edge end has a curve parallel to its attaching vector.

    Returns ``(fortified, witnesses)`` where ``witnesses[e]`` is a pair of the
    first parallel curve at each end, ``None`` for a missing side.
    """
    witnesses = {}
    ok = True
    for e in g.edges:
        pair = []
        for side in SIDES:
            hit = next((c for c in s.at(e.vertex(side)) if det(c.vec, e.phi(side)) == 0), None)
            pair.append(hit)
            ok = ok and hit is not None
        witnesses[e.id] = tuple(pair)
    return ok, witnesses


def is_primitive_set(s: EquitableSet):
    offenders = [(v, i, c.vec) for v, cs in s.curves.items() for i, c in enumerate(cs) if not is_primitive(c.vec)]
    return not offenders, offenders


# ---------------------------------------------------------------------------
# Bounded search


def search_vectors(bound: int) -> list[Vec]:
    """Nonzero vectors with |coords| <= bound, one per sign class, ordered by (max |coord|, x, y)."""
    out = []
    for x in range(0, bound + 1):
        for y in range(-bound, bound + 1):
            if x == 0 and y <= 0:
                continue
            out.append(Vec(x, y))
    return sorted(out, key=lambda a: (max(abs(a.x), abs(a.y)), a.x, a.y))


def max_search_nodes() -> int:
    return cap("max_search_nodes")


def search_equitable(g: TubularGraph, bound: int, max_size: int = 3, max_nodes: int | None = None) -> EquitableSet:
    """First equitable set in the documented enumeration order.

    Per vertex, candidates are multisets of :func:`search_vectors` ordered by
    size then lexicographically; whole sets are ordered lexicographically by
    the per-vertex choice in vertex order.  Raises :class:`NotFound` when the
    bound is exhausted, which says nothing about larger bounds.
    """
    require_valid(g)
    max_nodes = max_search_nodes() if max_nodes is None else max_nodes
    vectors = search_vectors(bound)
    order = list(g.vertices)
    pos = {v: i for i, v in enumerate(order)}

    def candidates(v):
        for size in range(1, max_size + 1):
            for combo in itertools.combinations_with_replacement(vectors, size):
                yield combo

    # For vertex i: loops at i must balance on their own; edges to earlier
    # vertices impose the sum that was fixed when the earlier end was chosen.
    tables = []
    nodes = 0
    for v in order:
        loops = [e for e in g.edges if e.minus == v and e.plus == v]
        back = []  # (edge, side at v) with the other end earlier
        for e in g.edges:
            if e.is_loop:
                continue
            for side in SIDES:
                other = e.vertex(PLUS if side == MINUS else MINUS)
                if e.vertex(side) == v and pos[other] < pos[v]:
                    back.append((e, side))
        table: dict[tuple, list] = {}
        for combo in candidates(v):
            nodes += 1
            if nodes > max_nodes:
                raise ResourceLimit(f"search exceeded {max_nodes} nodes")
            if not finite_index(combo):
                continue
            if any(intersection_number_set(e.phi_minus, combo) != intersection_number_set(e.phi_plus, combo)
                   for e in loops):
                continue
            key = tuple(intersection_number_set(e.phi(side), combo) for e, side in back)
            table.setdefault(key, []).append(combo)
        tables.append((back, table))

    chosen: list = []

    def required_key(i):
        back, _ = tables[i]
        key = []
        for e, side in back:
            other_side_ = PLUS if side == MINUS else MINUS
            other = e.vertex(other_side_)
            key.append(intersection_number_set(e.phi(other_side_), chosen[pos[other]]))
        return tuple(key)

    def dfs(i):
        nonlocal nodes
        if i == len(order):
            return True
        for combo in tables[i][1].get(required_key(i), ()):
            nodes += 1
            if nodes > max_nodes:
                raise ResourceLimit(f"search exceeded {max_nodes} nodes")
            chosen.append(combo)
            if dfs(i + 1):
                return True
            chosen.pop()
        return False

    if not vectors or not dfs(0):
        raise NotFound(
            f"no equitable set with |coords| <= {bound} and at most {max_size} curves per vertex; "
            "this is not a proof that none exists"
        )
    s = EquitableSet.from_vectors({v: list(c) for v, c in zip(order, chosen)})
    assert verify_equitable(g, s).ok
    return s


# ---------------------------------------------------------------------------
# Two curve classes per vertex from the vertex part of H_1


@dataclass
class ThreeDimConstruction:
    equitable: EquitableSet
    pairing: dict
    rank_d: int
    generators: dict[str, tuple[Vec, Vec]]
    auxiliary_edges: list[Edge]


def max_recursion() -> int:
    return cap("max_recursion")


def three_dim_equitable(g: TubularGraph, _depth: int = 0) -> ThreeDimConstruction:
    """Equitable set ``S_v = {p_v(a), p_v(b)}`` with arcs joining only images of the same generator.

    Requires every vertex group to be a direct summand of the free part of
    the vertex homology.  When the free rank exceeds 2, an auxiliary edge
    identifying independent generators of two vertex groups is added, the
    construction recurses, and the auxiliary arcs are discarded.
    """
    require_valid(g)
    if _depth > max_recursion():
        raise RecursionLimit("auxiliary edge recursion did not terminate")
    h = h1_vertex_part(g)
    for v in g.vertices:
        if not h.summand[v]:
            raise SummandConditionFailed(
                f"vertex group {v} is not a direct summand of the free part of H_1 (rank {h.rank_d})", v
            )
    if h.rank_d == 2:
        a, b = (1, 0), (0, 1)
        gens = {v: (h.project(v, a), h.project(v, b)) for v in g.vertices}
        s = EquitableSet.from_vectors({v: list(gens[v]) for v in g.vertices})
        pairing = {}
        for e in g.edges:
            pairs = []
            for c in (0, 1):
                m = intersection_number(e.phi_minus, gens[e.minus][c])
                assert m == intersection_number(e.phi_plus, gens[e.plus][c])
                pairs.extend(((c, j), (c, j)) for j in range(m))
            pairing[e.id] = tuple(pairs)
        return ThreeDimConstruction(s, pairing, 2, gens, [])
    if h.rank_d < 2:
        raise SummandConditionFailed(f"free rank {h.rank_d} is too small for a vertex summand")

    aux = _auxiliary_edge(g, h, _depth)
    sub = three_dim_equitable(g.with_edge(aux), _depth + 1)
    pairing = {eid: p for eid, p in sub.pairing.items() if eid != aux.id}
    return ThreeDimConstruction(sub.equitable, pairing, h.rank_d, sub.generators, [aux] + sub.auxiliary_edges)


def _auxiliary_edge(g: TubularGraph, h, depth: int) -> Edge:
    basis = (Vec(1, 0), Vec(0, 1))
    names = set(g.vertices) | {e.id for e in g.edges}
    eid = f"aux{depth}"
    while eid in names:
        eid += "_"
    for u, v in itertools.combinations(g.vertices, 2):
        for gu in basis:
            if _in_image(h, v, h.image(u, gu)):
                continue
            for gv in basis:
                if _in_image(h, u, h.image(v, gv)):
                    continue
                edge = Edge(eid, u, v, gu, gv)
                h2 = h1_vertex_part(g.with_edge(edge))
                if h2.rank_d == h.rank_d - 1 and all(h2.summand.values()):
                    return edge
    raise SummandConditionFailed("no pair of vertex groups embeds as distinct summands")


def _in_image(h, v, target) -> bool:
    """Whether ``target`` (free-part coordinates) lies in the image of ``G_v``."""
    p = h.projections[v]
    pre = tuple(sum(c * x for c, x in zip(row, target)) for row in p)
    return h.image(v, pre) == tuple(target)
