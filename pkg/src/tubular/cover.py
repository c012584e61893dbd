"""A desk-scale piece of the universal cover: flats glued by tubes along a
ball of the Bass-Serre tree, with horizontal walls lifted as exact rational
lines and one vertical wall per tube.

Charts.  Every flat carries a chart that differs from the vertex group's
chart by a lattice translation.  A tube whose parent end sits at
``parent_side`` attaches to the parent flat along ``det(d, p) = k`` (``d``
the primitive direction of the attaching vector, ``k`` the coset index),
with reference point ``k * u`` where ``det(d, u) = 1``; it attaches to the
child flat along the line through the origin, with reference point the
origin.  Points of a tube boundary are ``ref + t * phi`` with ``phi`` the
full attaching vector, and the two boundaries are identified by ``t -> t``.

Slots.  A primitive curve with direction ``d`` and offset ``o`` meets the
boundary line at parameters ``t`` with ``t * det(d, phi) in o + Z``; within
a period ``[j, j + 1)`` these are numbered ``0..m-1`` in increasing ``t``.
The arc pairing acts period by period: a wall crossing at slot ``s`` of
period ``j`` leaves the tube at the paired slot of period ``j``.
"""
from __future__ import annotations

import itertools
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .clique import max_clique
from .equitable import EquitableSet, is_primitive_set
from .errors import InconsistentOrientation, OnWall, ResourceLimit
from .group_model import MINUS, PLUS, SIDES, TreeBall, TreeEdge, TubularGraph, build_tree_ball, other_side
from .lattice import RationalLine, Vec, bezout_partner, det, floor, frac, primitive_decomposition
from .limits import cap
from .walls import ArcPairing, build_walls, check_pairing, wall_of

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


def _sign(q) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class TubeEnd:
    phi: Vec
    ref: Vec
    line: RationalLine


@dataclass
class CoverBall:
    tree: TreeBall
    group: TubularGraph
    equitable: EquitableSet
    pairing: ArcPairing
    level_window: int

    def __post_init__(self):
        self._ends: dict[tuple[int, str], TubeEnd] = {}
        for te in self.tree.tree_edges:
            e = self.group.edge(te.orbit)
            for side in SIDES:
                phi = e.phi(side)
                _, d = primitive_decomposition(phi)
                if side == te.parent_side:
                    u = bezout_partner(d)
                    ref = Vec(te.coset_index * u.x, te.coset_index * u.y)
                else:
                    ref = Vec(0, 0)
                self._ends[(te.id, side)] = TubeEnd(phi, ref, RationalLine.through(phi, ref))
        self._partner: dict[tuple[str, str], dict] = {}
        for e in self.group.edges:
            pairs = self.pairing.get(e.id, ())
            self._partner[(e.id, MINUS)] = {tuple(a): tuple(b) for a, b in pairs}
            self._partner[(e.id, PLUS)] = {tuple(b): tuple(a) for a, b in pairs}
        self._ancestors: dict[int, list[int]] = {}

    def end(self, te: TreeEdge | int, side: str) -> TubeEnd:
        tid = te if isinstance(te, int) else te.id
        return self._ends[(tid, side)]

    def partner(self, edge_id: str, side: str, slot):
        return self._partner[(edge_id, side)][tuple(slot)]

    def orbit(self, t: int) -> str:
        return self.tree.tree_vertices[t].orbit

    def ancestors(self, t: int) -> list[int]:
        """``t`` followed by its ancestors up to the base."""
        if t not in self._ancestors:
            out = [t]
            tv = self.tree.tree_vertices[t]
            while tv.parent_edge is not None:
                tv = self.tree.tree_vertices[self.tree.tree_edges[tv.parent_edge].parent]
                out.append(tv.id)
            self._ancestors[t] = out
        return self._ancestors[t]

    def seed_flats(self) -> list[int]:
        return sorted(self.tree.representatives().values())


def cover_ball(g: TubularGraph, s: EquitableSet, p: ArcPairing, radius: int, coset_window: int,
               level_window: int | None = None, root: str | None = None) -> CoverBall:
    ok, offenders = is_primitive_set(s)
    if not ok:
        raise ValueError(f"lifting walls needs a primitive equitable set; offenders {offenders}")
    check_pairing(g, s, p)
    tree = build_tree_ball(g, radius, coset_window, root=root)
    return CoverBall(tree, g, s, p, coset_window if level_window is None else level_window)


# ---------------------------------------------------------------------------
# Lifted walls


@dataclass(frozen=True)
class Trace:
    line: RationalLine
    circle: tuple[str, int]
    sign: int  # orientation of the positive halfspace relative to line.value


@dataclass(frozen=True)
class TubeCrossing:
    tree_edge: int
    t_minus: Fraction
    t_plus: Fraction
    minus_slot: tuple[int, int]
    plus_slot: tuple[int, int]


@dataclass
class LiftedWall:
    id: int
    kind: str
    component: int | None = None
    seed: tuple | None = None
    tree_edge: int | None = None
    traces: dict[int, Trace] = field(default_factory=dict)
    tube_crossings: dict[int, TubeCrossing] = field(default_factory=dict)
    top: int | None = None  # shallowest flat met


def _slot_position(o: Fraction, dd: int, i: int) -> Fraction:
    m = abs(dd)
    return Fraction(i) / m + (o / m if dd > 0 else (1 - o) / m)


def _curve_offset(cb: CoverBall, circle) -> tuple[Vec, Fraction]:
    c = cb.equitable.at(circle[0])[circle[1]]
    return c.direction, c.offset


def _propagate(cb: CoverBall, wall: LiftedWall, start: int, trace: Trace, trace_cap: int):
    wall.traces[start] = trace
    queue = deque([(start, None)])
    while queue:
        f, came = queue.popleft()
        tr = wall.traces[f]
        d = tr.line.direction
        for te, side in cb.tree.incident(f):
            if te.id == came:
                continue
            end = cb.end(te, side)
            dd = det(d, end.phi)
            if dd == 0:
                continue
            t = (tr.line.level - det(d, end.ref)) / dd
            m = abs(dd)
            slot = (tr.circle[1], floor(frac(t) * m))
            period = floor(t)
            oside = other_side(side)
            partner = cb.partner(te.orbit, side, slot)
            g2 = te.end(oside)
            circle2 = (cb.orbit(g2), partner[0])
            d2, o2 = _curve_offset(cb, circle2)
            end2 = cb.end(te, oside)
            dd2 = det(d2, end2.phi)
            t2 = period + _slot_position(o2, dd2, partner[1])
            level2 = det(d2, end2.ref) + t2 * dd2
            sign2 = tr.sign * _sign(dd) * _sign(dd2)
            if side == MINUS:
                wall.tube_crossings[te.id] = TubeCrossing(te.id, t, t2, slot, partner)
            else:
                wall.tube_crossings[te.id] = TubeCrossing(te.id, t2, t, partner, slot)
            if g2 in wall.traces:
                continue
            wall.traces[g2] = Trace(RationalLine(d2, Fraction(level2)), circle2, sign2)
            if len(wall.traces) > trace_cap:
                raise ResourceLimit(f"a lifted wall exceeded {trace_cap} flats")
            queue.append((g2, te.id))
    wall.top = min(wall.traces, key=lambda f: (cb.tree.tree_vertices[f].depth, f))


def max_walls() -> int:
    return cap("max_walls")


def lift_walls(cb: CoverBall) -> list[LiftedWall]:
    """Horizontal walls seeded in the first flat of each vertex orbit, then vertical walls.

    Seeds are the lifts ``det(d, p) = offset + k`` for ``|k| <= level_window``
    of every circle at that flat; each seed is propagated through tubes
    until the ball boundary.  A seed already met by an earlier wall is
    skipped, so walls are distinct.
    """
    component = wall_of(build_walls(cb.group, cb.equitable, cb.pairing))
    seeds = cb.seed_flats()
    seen: dict[tuple[int, tuple, Fraction], int] = {}
    limit = max_walls()
    trace_cap = len(cb.tree.tree_vertices)
    walls: list[LiftedWall] = []
    for f in seeds:
        v = cb.orbit(f)
        for ci, c in enumerate(cb.equitable.at(v)):
            for k in range(-cb.level_window, cb.level_window + 1):
                level = c.offset + k
                key = (f, (v, ci), level)
                if key in seen:
                    continue
                w = LiftedWall(len(walls), HORIZONTAL, component[(v, ci)], (f, (v, ci), level))
                _propagate(cb, w, f, Trace(RationalLine(c.direction, level), (v, ci), 1), trace_cap)
                for g2 in seeds:
                    tr = w.traces.get(g2)
                    if tr is not None:
                        seen[(g2, tr.circle, tr.line.level)] = w.id
                walls.append(w)
                if len(walls) > limit:
                    raise ResourceLimit(f"more than {limit} lifted walls")
    for te in cb.tree.tree_edges:
        walls.append(LiftedWall(len(walls), VERTICAL, tree_edge=te.id))
    return walls


def transfer(cb: CoverBall, te: TreeEdge, side: str, t: Fraction, circle_index: int) -> Fraction:
    """Image across the tube of the crossing of curve ``circle_index`` at parameter ``t``."""
    f = te.end(side)
    d, _ = _curve_offset(cb, (cb.orbit(f), circle_index))
    dd = det(d, cb.end(te, side).phi)
    slot = (circle_index, floor(frac(t) * abs(dd)))
    partner = cb.partner(te.orbit, side, slot)
    oside = other_side(side)
    d2, o2 = _curve_offset(cb, (cb.orbit(te.end(oside)), partner[0]))
    return floor(t) + _slot_position(o2, det(d2, cb.end(te, oside).phi), partner[1])


# ---------------------------------------------------------------------------
# Crossing relation and dimension


DISJOINT, REGULAR, NONREGULAR = "disjoint", "regular", "nonregular"


def cross(w1: LiftedWall, w2: LiftedWall) -> str:
    if w1.kind == VERTICAL and w2.kind == VERTICAL:
        return REGULAR if w1.id == w2.id else DISJOINT
    if w1.kind == VERTICAL or w2.kind == VERTICAL:
        h, v = (w2, w1) if w1.kind == VERTICAL else (w1, w2)
        return REGULAR if v.tree_edge in h.tube_crossings else DISJOINT
    a, b = (w1, w2) if len(w1.traces) <= len(w2.traces) else (w2, w1)
    coincide = False
    for f, tr in a.traces.items():
        other = b.traces.get(f)
        if other is None:
            continue
        if tr.line.direction != other.line.direction:
            return REGULAR
        if tr.line.level == other.line.level:
            coincide = True
    if coincide:
        return NONREGULAR
    for tid, c1 in a.tube_crossings.items():
        c2 = b.tube_crossings.get(tid)
        if c2 is not None and (c1.t_minus - c2.t_minus) * (c1.t_plus - c2.t_plus) < 0:
            return NONREGULAR
    return DISJOINT


def crossing_graph(walls: list[LiftedWall]) -> dict[int, set[int]]:
    """Regular crossings plus horizontal/vertical tube crossings."""
    adj = {w.id: set() for w in walls}
    horiz = [w for w in walls if w.kind == HORIZONTAL]
    for a, b in itertools.combinations(horiz, 2):
        if cross(a, b) == REGULAR:
            adj[a.id].add(b.id)
            adj[b.id].add(a.id)
    by_edge = {w.tree_edge: w.id for w in walls if w.kind == VERTICAL}
    for h in horiz:
        for tid in h.tube_crossings:
            v = by_edge[tid]
            adj[h.id].add(v)
            adj[v].add(h.id)
    return adj


def dimension_estimate(walls: list[LiftedWall], cb: CoverBall | None = None) -> int:
    """Size of a maximum family of pairwise crossing walls in the ball."""
    return len(max_clique(crossing_graph(walls)))


# ---------------------------------------------------------------------------
# Stable partition


@dataclass
class Family:
    id: int
    component: int
    members: list[int]
    directions: dict[int, Vec]
    levels: dict[int, list[Fraction]]
    strides: dict[int, Fraction]
    arithmetic: dict[int, bool]


@dataclass
class StablePartitionBall:
    families: list[Family]
    per_flat: dict[int, list[int]]  # flat -> family ids meeting it, in id order
    violations: list[tuple[int, int, str]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, flat: int) -> int:
        return len(self.per_flat.get(flat, ()))

    def family_of(self) -> dict[int, int]:
        return {m: f.id for f in self.families for m in f.members}


def _fraction_gcd(values: list[Fraction]) -> Fraction:
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    g = 0
    for v in values:
        g = gcd(g, int(v * den))
    return Fraction(g, den)


def stable_partition(walls: list[LiftedWall], cb: CoverBall | None = None) -> StablePartitionBall:
    """Group horizontal walls by component and trace direction in shared flats.

    Walls of the same component with parallel traces in some flat are put in
    one family (transitively).  Pairwise non-disjoint members are reported
    as violations; per flat, the stride is the gcd of consecutive level gaps
    and ``arithmetic`` says whether all gaps equal it.
    """
    horiz = [w for w in walls if w.kind == HORIZONTAL]
    parent = {w.id: w.id for w in horiz}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    groups: dict[tuple, int] = {}
    for w in horiz:
        for f, tr in w.traces.items():
            key = (f, w.component, tr.line.direction)
            if key in groups:
                ra, rb = find(groups[key]), find(w.id)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            else:
                groups[key] = w.id
    members: dict[int, list[int]] = {}
    for w in horiz:
        members.setdefault(find(w.id), []).append(w.id)
    by_id = {w.id: w for w in walls}
    families = []
    per_flat: dict[int, list[int]] = {}
    violations = []
    for k, root in enumerate(sorted(members)):
        ms = members[root]
        directions: dict[int, Vec] = {}
        levels: dict[int, list[Fraction]] = {}
        for m in ms:
            for f, tr in by_id[m].traces.items():
                directions.setdefault(f, tr.line.direction)
                if tr.line.direction == directions[f]:
                    levels.setdefault(f, []).append(tr.line.level)
        strides, arith = {}, {}
        for f, ls in levels.items():
            ls.sort()
            gaps = [b - a for a, b in zip(ls, ls[1:])]
            strides[f] = _fraction_gcd(gaps) if gaps and all(gaps) else Fraction(1)
            arith[f] = all(gp == strides[f] for gp in gaps)
            per_flat.setdefault(f, []).append(k)
        for a, b in itertools.combinations(ms, 2):
            rel = cross(by_id[a], by_id[b])
            if rel != DISJOINT:
                violations.append((a, b, rel))
        families.append(Family(k, by_id[root].component, ms, directions, levels, strides, arith))
    return StablePartitionBall(families, per_flat, violations)


# ---------------------------------------------------------------------------
# Halfspaces, 0-cubes and coordinates


def halfspace(cb: CoverBall, w: LiftedWall, flat: int, point=None) -> int:
    """Side (+1/-1) of horizontal wall ``w`` containing ``point`` of ``flat``.

    ``point`` is only consulted when ``w`` meets ``flat``; otherwise the
    whole flat lies on one side, read off at the tube through which the
    tree path from ``flat`` reaches the wall.
    """
    tr = w.traces.get(flat)
    if tr is not None:
        val = tr.line.value(point)
        if val == 0:
            raise OnWall(f"point {point} lies on wall {w.id} in flat {flat}")
        return tr.sign * _sign(val)
    anc = cb.ancestors(flat)
    if w.top in anc:
        pos = anc.index(w.top)
        # deepest ancestor met by the wall, and the tube leaving it toward flat
        i = pos
        while i > 0 and anc[i - 1] in w.traces:
            i -= 1
        near = anc[i]
        step = anc[i - 1]
        tid = cb.tree.tree_vertices[step].parent_edge
        te = cb.tree.tree_edges[tid]
        side = te.parent_side
    else:
        near = w.top
        te = cb.tree.tree_edges[cb.tree.tree_vertices[near].parent_edge]
        side = te.child_side
    tr = w.traces[near]
    return tr.sign * _sign(tr.line.value(cb.end(te, side).ref))


@dataclass
class ZeroCube:
    """Halfspace choices: horizontal wall id -> side, tree edge -> endpoint it points to."""

    horizontal: dict[int, int]
    vertical: dict[int, int]

    def key(self):
        return (tuple(sorted(self.horizontal.items())), tuple(sorted(self.vertical.items())))

    def flip_vertical(self, te: TreeEdge) -> "ZeroCube":
        v = dict(self.vertical)
        v[te.id] = te.child if v[te.id] == te.parent else te.parent
        return ZeroCube(dict(self.horizontal), v)

    def flip_horizontal(self, wall_id: int) -> "ZeroCube":
        h = dict(self.horizontal)
        h[wall_id] = -h[wall_id]
        return ZeroCube(h, dict(self.vertical))


def canonical_zero_cube(cb: CoverBall, walls: list[LiftedWall], flat: int, point) -> ZeroCube:
    anc = set(cb.ancestors(flat))
    horizontal = {w.id: halfspace(cb, w, flat, point) for w in walls if w.kind == HORIZONTAL}
    vertical = {}
    for te in cb.tree.tree_edges:
        vertical[te.id] = te.child if te.child in anc else te.parent
    return ZeroCube(horizontal, vertical)


def tree_projection(cb: CoverBall, cube: ZeroCube) -> int:
    """The tree vertex every vertical halfspace choice points to."""
    incoming: dict[int, int] = {}
    for te in cb.tree.tree_edges:
        head = cube.vertical[te.id]
        if head not in (te.parent, te.child):
            raise InconsistentOrientation(f"tree edge {te.id} points to non-endpoint {head}")
    degree = {tv.id: 0 for tv in cb.tree.tree_vertices}
    for te in cb.tree.tree_edges:
        degree[te.parent] += 1
        degree[te.child] += 1
        head = cube.vertical[te.id]
        incoming[head] = incoming.get(head, 0) + 1
    sinks = [t for t in degree if incoming.get(t, 0) == degree[t]]
    if len(sinks) != 1:
        raise InconsistentOrientation(f"vertical halfspaces do not meet in one tree vertex ({len(sinks)} sinks)")
    return sinks[0]


def zero_cube_coords(cb: CoverBall, walls: list[LiftedWall], part: StablePartitionBall, flat: int, point):
    """Coordinates of the canonical 0-cube of ``point``: one integer per family meeting ``flat``.

    Entry ``i`` counts the levels of family ``i`` lying between 0 and
    ``det(d_i, point)`` (negative below 0), so the walls at the ``a``-th and
    ``(a+1)``-th levels of the family face each other at the point.  For a
    progression ``r + sZ`` with ``-s < r <= 0`` this is ``floor((v - r) / s)``.
    """
    for w in walls:
        tr = w.traces.get(flat)
        if tr is not None and tr.line.contains(point):
            raise OnWall(f"point {point} lies on wall {w.id} in flat {flat}")
    out = []
    for fid in part.per_flat.get(flat, ()):
        fam = part.families[fid]
        out.append(_family_index(fam, flat, Fraction(det(fam.directions[flat], point))))
    return tuple(out)


def _family_index(fam: Family, flat: int, value: Fraction) -> int:
    levels = fam.levels[flat]
    return bisect_left(levels, value) - bisect_left(levels, 0)


def tube_coordinates(cb: CoverBall, walls: list[LiftedWall], part: StablePartitionBall, te: TreeEdge, side: str):
    """Split the families at the ``side`` end of ``te`` into those crossing the tube
    and those parallel to it, with the frozen index of each parallel family at
    the attaching line.  Padding the tube coordinates by the frozen indices
    gives the embedding of the tube's coordinate space into the flat's.
    """
    flat = te.end(side)
    ref = cb.end(te, side).ref
    crossing, frozen = [], {}
    by_id = {w.id: w for w in walls}
    for fid in part.per_flat.get(flat, ()):
        fam = part.families[fid]
        if any(te.id in by_id[m].tube_crossings for m in fam.members):
            crossing.append(fid)
        else:
            frozen[fid] = _family_index(fam, flat, Fraction(det(fam.directions[flat], ref)))
    return crossing, frozen


def pad_coordinates(part: StablePartitionBall, flat: int, crossing: list[int], frozen: dict[int, int], coords: dict[int, int]):
    """Embed tube coordinates ``coords`` (family id -> index) into the flat's coordinate vector."""
    return tuple(coords[fid] if fid in crossing else frozen[fid] for fid in part.per_flat.get(flat, ()))


# ---------------------------------------------------------------------------
# Local finiteness


SAMPLE_POINTS = [
    (Fraction(1, 7), Fraction(1, 11)),
    (Fraction(-1, 13), Fraction(1, 17)),
    (Fraction(2, 19), Fraction(-3, 23)),
    (Fraction(-5, 29), Fraction(-2, 31)),
    (Fraction(3, 37), Fraction(4, 41)),
]


def sample_point(walls: list[LiftedWall], flat: int):
    for pt in SAMPLE_POINTS:
        if not any(w.traces.get(flat) is not None and w.traces[flat].line.contains(pt) for w in walls):
            return pt
    raise OnWall(f"no sample point avoids the walls in flat {flat}")


def flip_allowed(cb: CoverBall, walls: list[LiftedWall], flat: int, point, te: TreeEdge, side: str) -> bool:
    """Bracketing test: no wall trace parallel to the tube separates ``point`` from it."""
    end = cb.end(te, side)
    for w in walls:
        tr = w.traces.get(flat)
        if tr is None or tr.line.direction != end.line.direction:
            continue
        if _sign(tr.line.value(point)) != _sign(tr.line.value(end.ref)):
            return False
    return True


def _beyond(cb: CoverBall, te: TreeEdge, flat: int, f: int) -> bool:
    """Whether tree vertex ``f`` is on the far side of ``te`` as seen from ``flat``."""
    if te.parent == flat:
        return te.child in cb.ancestors(f)
    return flat not in cb.ancestors(f)


def flip_is_zero_cube(cb: CoverBall, walls: list[LiftedWall], flat: int, point, te: TreeEdge) -> bool:
    """Direct check that flipping the vertical wall of ``te`` in the canonical
    0-cube of ``point`` keeps the halfspaces pairwise intersecting.

    Walls crossing the tube or lying beyond it meet both sides of the flip;
    every other horizontal wall must put the far endpoint on the side it
    already chose for the point.
    """
    far = te.child if te.parent == flat else te.parent
    for w in walls:
        if w.kind != HORIZONTAL or te.id in w.tube_crossings:
            continue
        if _beyond(cb, te, flat, next(iter(w.traces))):
            continue
        if halfspace(cb, w, flat, point) != halfspace(cb, w, far):
            return False
    return True


@dataclass
class ProbeResult:
    counts: dict[tuple[int, str, str], int]
    count: int
    witness: tuple[int, str, str] | None
    locally_finite_evidence: bool
    unprobed_orbits: list[str]


def local_finiteness_probe(cb: CoverBall, walls: list[LiftedWall], s: EquitableSet | None = None) -> ProbeResult:
    """Count valid vertical flips at the canonical 0-cube of a sample point.

    One flat per vertex orbit is probed (the first interior one).  Counts are
    per family of tubes ``(flat, edge orbit, side)``; a family in which every
    lift in the window flips is evidence against local finiteness.
    """
    counts: dict[tuple[int, str, str], int] = {}
    probed = set()
    full = 2 * cb.tree.coset_window + 1
    for tv in cb.tree.tree_vertices:
        if tv.orbit in probed or not cb.tree.interior(tv.id):
            continue
        probed.add(tv.orbit)
        pt = sample_point(walls, tv.id)
        for te, side in cb.tree.incident(tv.id):
            key = (tv.id, te.orbit, side)
            counts.setdefault(key, 0)
            if flip_allowed(cb, walls, tv.id, pt, te, side):
                counts[key] += 1
    count = max(counts.values(), default=0)
    witness = min((k for k in counts if counts[k] == count), default=None)
    unprobed = [v for v in cb.group.vertices if v not in probed]
    return ProbeResult(counts, count, witness, count < full, unprobed)


def probe_growth(g: TubularGraph, s: EquitableSet, p: ArcPairing, windows=(1, 2, 3), radius: int = 2):
    """Probe counts for each coset window; ``stabilizes`` iff they are all equal."""
    counts = []
    for k in windows:
        cb = cover_ball(g, s, p, radius, k)
        counts.append(local_finiteness_probe(cb, lift_walls(cb), s).count)
    grows = all(a < b for a, b in zip(counts, counts[1:]))
    stable = all(a == b for a, b in zip(counts, counts[1:]))
    return {"windows": list(windows), "counts": counts, "stabilizes": stable, "grows": grows}
