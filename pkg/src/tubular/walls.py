"""Immersed walls built from an equitable set and an arc pairing, and their
dilation functions.

Circles are the curves of the equitable set, addressed as ``(vertex, index)``.
At each edge end the attaching curve meets curve ``c`` in
``#[phi, c.vec]`` points, numbered ``0..m-1``; a slot is ``(curve_index, point)``.
An arc pairing is, per edge, a bijection from minus slots to plus slots.
Every arc is oriented from its minus end to its plus end.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .equitable import EquitableSet
from .errors import BadPairing
from .group_model import MINUS, PLUS, TubularGraph
from .lattice import intersection_number

Slot = tuple[int, int]
Circle = tuple[str, int]
ArcPairing = dict  # edge id -> tuple[(minus slot, plus slot), ...]


def slots(g: TubularGraph, s: EquitableSet, edge_id: str, side: str) -> list[Slot]:
    e = g.edge(edge_id)
    phi = e.phi(side)
    return [(ci, j) for ci, c in enumerate(s.at(e.vertex(side))) for j in range(intersection_number(phi, c.vec))]


def default_pairing(g: TubularGraph, s: EquitableSet) -> ArcPairing:
    """Match minus and plus slots in lexicographic order, edge by edge."""
    out = {}
    for e in g.edges:
        lo, hi = slots(g, s, e.id, MINUS), slots(g, s, e.id, PLUS)
        if len(lo) != len(hi):
            raise BadPairing(f"edge {e.id} is unbalanced ({len(lo)} vs {len(hi)} slots)")
        out[e.id] = tuple(zip(lo, hi))
    return out


def check_pairing(g: TubularGraph, s: EquitableSet, p: ArcPairing) -> None:
    for eid in p:
        try:
            g.edge(eid)
        except KeyError:
            raise BadPairing(f"pairing names unknown edge {eid}") from None
    for e in g.edges:
        pairs = p.get(e.id, ())
        lo, hi = slots(g, s, e.id, MINUS), slots(g, s, e.id, PLUS)
        got_lo = sorted(tuple(a) for a, _ in pairs)
        got_hi = sorted(tuple(b) for _, b in pairs)
        if got_lo != lo:
            raise BadPairing(f"edge {e.id}: minus slots {got_lo} are not a permutation of {lo}")
        if got_hi != hi:
            raise BadPairing(f"edge {e.id}: plus slots {got_hi} are not a permutation of {hi}")


def random_pairing(g: TubularGraph, s: EquitableSet, rng: random.Random) -> ArcPairing:
    out = {}
    for e in g.edges:
        lo, hi = slots(g, s, e.id, MINUS), slots(g, s, e.id, PLUS)
        hi = list(hi)
        rng.shuffle(hi)
        out[e.id] = tuple(zip(lo, hi))
    return out


@dataclass(frozen=True)
class Arc:
    edge: str
    minus: Circle
    plus: Circle
    minus_slot: Slot
    plus_slot: Slot


@dataclass
class ImmersedWall:
    component_id: int
    circles: list[Circle]
    arcs: list[Arc]


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def circles_of(g: TubularGraph, s: EquitableSet) -> list[Circle]:
    return [(v, i) for v in g.vertices for i in range(len(s.at(v)))]


def build_walls(g: TubularGraph, s: EquitableSet, p: ArcPairing) -> list[ImmersedWall]:
    check_pairing(g, s, p)
    circles = circles_of(g, s)
    uf = _UnionFind(circles)
    arcs = []
    for e in g.edges:
        for a, b in p.get(e.id, ()):
            arc = Arc(e.id, (e.minus, a[0]), (e.plus, b[0]), tuple(a), tuple(b))
            arcs.append(arc)
            uf.union(arc.minus, arc.plus)
    groups: dict[Circle, list[Circle]] = {}
    for c in circles:
        groups.setdefault(uf.find(c), []).append(c)
    walls = []
    for k, members in enumerate(groups.values()):
        root = uf.find(members[0])
        walls.append(ImmersedWall(k, members, [a for a in arcs if uf.find(a.minus) == root]))
    return walls


def wall_of(walls: list[ImmersedWall]) -> dict[Circle, int]:
    return {c: w.component_id for w in walls for c in w.circles}


# ---------------------------------------------------------------------------
# Dilation


def arc_weight(g: TubularGraph, s: EquitableSet, arc: Arc) -> Fraction:
    e = g.edge(arc.edge)
    lo = intersection_number(e.phi_minus, s.at(arc.minus[0])[arc.minus[1]].vec)
    hi = intersection_number(e.phi_plus, s.at(arc.plus[0])[arc.plus[1]].vec)
    return Fraction(lo, hi)


@dataclass
class DilationReport:
    component_id: int
    weights: list[Fraction]
    tree_arcs: list[int]
    cycle_arcs: list[int]
    cycle_weights: list[Fraction]
    dilated: bool = field(init=False)

    def __post_init__(self):
        self.dilated = any(w != 1 for w in self.cycle_weights)


def dilation(w: ImmersedWall, g: TubularGraph, s: EquitableSet, rng: random.Random | None = None) -> DilationReport:
    """Arc weights and fundamental-cycle weights of the dilation function.

    A spanning tree of the circle/arc graph is grown breadth first (arcs in
    wall order, or shuffled by ``rng``).  Each non-tree arc closes a cycle
    whose weight is ``pot(minus) * w(arc) / pot(plus)``, with ``pot`` the
    product of weights along the tree path from the root.
    """
    weights = [arc_weight(g, s, a) for a in w.arcs]
    order = list(range(len(w.arcs)))
    circles = list(w.circles)
    if rng is not None:
        rng.shuffle(order)
        rng.shuffle(circles)
    incident: dict[Circle, list[int]] = {c: [] for c in w.circles}
    for i in order:
        incident[w.arcs[i].minus].append(i)
        incident[w.arcs[i].plus].append(i)
    pot = {circles[0]: Fraction(1)}
    tree = []
    queue = deque([circles[0]])
    while queue:
        c = queue.popleft()
        for i in incident[c]:
            a = w.arcs[i]
            if a.minus == c and a.plus not in pot:
                pot[a.plus] = pot[c] * weights[i]
            elif a.plus == c and a.minus not in pot:
                pot[a.minus] = pot[c] / weights[i]
            else:
                continue
            tree.append(i)
            queue.append(a.plus if a.minus == c else a.minus)
    in_tree = set(tree)
    cycles = [i for i in order if i not in in_tree]
    cycle_weights = [pot[w.arcs[i].minus] * weights[i] / pot[w.arcs[i].plus] for i in cycles]
    return DilationReport(w.component_id, weights, sorted(tree), cycles, cycle_weights)


def rhat(w: ImmersedWall, weights: list[Fraction], path: list[tuple[int, int]]) -> Fraction:
    """Weight of an edge path given as ``(arc index, +1/-1)`` steps."""
    out = Fraction(1)
    for i, eps in path:
        out *= weights[i] if eps > 0 else 1 / weights[i]
    return out


def classify_dimension(reports: list[DilationReport]) -> dict:
    if not reports:
        raise ValueError("no walls to classify; the equitable set is empty")
    dilated = [r.component_id for r in reports if r.dilated]
    return {"finite_dimensional": not dilated, "dilated_walls": dilated}
