"""Graph-of-groups presentations of tubular groups.

A :class:`TubularGraph` has one implicit Z^2 vertex group per vertex and an
infinite cyclic edge group per edge, attached by the nonzero vectors
``phi_minus`` (in the group of ``minus``) and ``phi_plus`` (in ``plus``).
The coordinate chart given in the input is taken as the basis of each
vertex group.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InvalidGroup, ResourceLimit
from .lattice import Vec, vec
from .limits import cap as _cap
from .smith import diagonal, matmul, smith_normal_form

MINUS = "minus"
PLUS = "plus"
SIDES = (MINUS, PLUS)


def other_side(side: str) -> str:
    return PLUS if side == MINUS else MINUS


@dataclass(frozen=True)
class Edge:
    id: str
    minus: str
    plus: str
    phi_minus: Vec
    phi_plus: Vec

    def vertex(self, side: str) -> str:
        return self.minus if side == MINUS else self.plus

    def phi(self, side: str) -> Vec:
        return self.phi_minus if side == MINUS else self.phi_plus

    @property
    def is_loop(self) -> bool:
        return self.minus == self.plus


@dataclass(frozen=True)
class TubularGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def build(cls, vertices, edges) -> "TubularGraph":
        """Convenience constructor: ``edges`` holds ``(id, minus, plus, phi_minus, phi_plus)``."""
        es = []
        for e in edges:
            if isinstance(e, Edge):
                es.append(e)
            else:
                eid, m, p, pm, pp = e
                es.append(Edge(eid, m, p, vec(pm), vec(pp)))
        return cls(tuple(vertices), tuple(es))

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def incident(self, v: str) -> list[tuple[Edge, str]]:
        """Edge ends at ``v`` as ``(edge, side)``, in edge order, minus before plus."""
        out = []
        for e in self.edges:
            for side in SIDES:
                if e.vertex(side) == v:
                    out.append((e, side))
        return out

    def with_edge(self, edge: Edge) -> "TubularGraph":
        return TubularGraph(self.vertices, self.edges + (edge,))


@dataclass
class ValidationReport:
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {k for k, _ in self.violations}


def validate(g: TubularGraph) -> ValidationReport:
    report = ValidationReport()
    if not g.vertices:
        report.violations.append(("Empty", "no vertices"))
        return report
    names = set(g.vertices)
    if len(names) != len(g.vertices):
        report.violations.append(("DuplicateVertex", "vertex ids repeat"))
    seen = set()
    for e in g.edges:
        if e.id in seen:
            report.violations.append(("DuplicateEdge", e.id))
        seen.add(e.id)
        for side in SIDES:
            if e.vertex(side) not in names:
                report.violations.append(("DanglingVertex", f"{e.id}.{side} -> {e.vertex(side)}"))
            if tuple(e.phi(side)) == (0, 0):
                report.violations.append(("ZeroAttaching", f"{e.id}.phi_{side}"))
    # connectivity over the vertices that exist
    adj = {v: set() for v in names}
    for e in g.edges:
        if e.minus in names and e.plus in names:
            adj[e.minus].add(e.plus)
            adj[e.plus].add(e.minus)
    start = g.vertices[0]
    reached = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v] - reached:
            reached.add(w)
            todo.append(w)
    if reached != names:
        report.violations.append(("Disconnected", ",".join(sorted(names - reached))))
    return report


def require_valid(g: TubularGraph) -> None:
    report = validate(g)
    if not report.valid:
        raise InvalidGroup("; ".join(f"{k}: {d}" for k, d in report.violations))


# ---------------------------------------------------------------------------
# First homology, vertex part


@dataclass
class H1Data:
    """The vertex part of H_1 as ``(Z^2)^V / <edge relations>``.

    ``free_projection`` is the ``d x 2|V|`` matrix onto the free part in the
    Smith basis; ``inclusions[v]`` is its ``d x 2`` block for ``v``.
    ``projections[v]`` (``2 x d``) exists exactly for the vertices whose group
    is a direct summand of the free part and satisfies ``p_v . i_v = I``.
    """

    vertex_part_invariants: list[int]
    rank_d: int
    free_projection: list[list[int]]
    inclusions: dict[str, list[list[int]]]
    projections: dict[str, list[list[int]]]
    summand: dict[str, bool]

    @property
    def torsion(self) -> list[int]:
        return [x for x in self.vertex_part_invariants if x > 1]

    def image(self, v: str, a) -> tuple[int, ...]:
        """Image of ``a`` in ``G_v`` inside the free part."""
        i = self.inclusions[v]
        return tuple(r[0] * a[0] + r[1] * a[1] for r in i)

    def project(self, v: str, h) -> Vec:
        p = self.projections[v]
        return Vec(*(sum(c * x for c, x in zip(row, h)) for row in p))


def relation_matrix(g: TubularGraph) -> list[list[int]]:
    """One row per edge: ``i_{-e}(phi^-) - i_{+e}(phi^+)`` in ``Z^{2|V|}``."""
    index = {v: i for i, v in enumerate(g.vertices)}
    rows = []
    for e in g.edges:
        row = [0] * (2 * len(g.vertices))
        a, b = 2 * index[e.minus], 2 * index[e.plus]
        row[a] += e.phi_minus.x
        row[a + 1] += e.phi_minus.y
        row[b] -= e.phi_plus.x
        row[b + 1] -= e.phi_plus.y
        rows.append(row)
    return rows


def h1_vertex_part(g: TubularGraph) -> H1Data:
    require_valid(g)
    n = 2 * len(g.vertices)
    rel = relation_matrix(g)
    # H = Z^n / im(N) with N = rel^T; P N Q = D gives coordinates y = P x
    if rel:
        big_n = [[rel[j][i] for j in range(len(rel))] for i in range(n)]
        d_mat, p, _ = smith_normal_form(big_n)
        diag = diagonal(d_mat)
    else:
        p, diag = _eye(n), []
    rank = sum(1 for x in diag if x)
    d = n - rank
    free = [list(row) for row in p[rank:]]
    inclusions = {}
    projections = {}
    summand = {}
    for k, v in enumerate(g.vertices):
        inc = [[row[2 * k], row[2 * k + 1]] for row in free]
        inclusions[v] = inc
        proj = _left_inverse(inc)
        summand[v] = proj is not None
        if proj is not None:
            projections[v] = proj
    return H1Data(
        vertex_part_invariants=[x for x in diag if x],
        rank_d=d,
        free_projection=free,
        inclusions=inclusions,
        projections=projections,
        summand=summand,
    )


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _left_inverse(inc: list[list[int]]):
    """A ``2 x d`` integer matrix ``p`` with ``p . inc = I``, or None.

    Exists iff ``inc`` (``d x 2``) is injective with saturated image, i.e. its
    Smith form has diagonal (1, 1).
    """
    d = len(inc)
    if d < 2:
        return None
    dm, p1, q1 = smith_normal_form(inc)
    if diagonal(dm) != [1, 1]:
        return None
    # p1 inc q1 = [I; 0]  =>  (q1 [I 0] p1) inc = I
    top = [row for row in p1[:2]]
    proj = matmul(q1, top)
    assert matmul(proj, inc) == [[1, 0], [0, 1]]
    return proj


# ---------------------------------------------------------------------------
# Bass-Serre tree balls


def max_tree_vertices() -> int:
    return _cap("max_tree_vertices")


@dataclass(frozen=True)
class TreeVertex:
    id: int
    orbit: str
    depth: int
    parent_edge: int | None
    path: tuple[tuple[str, str, int], ...]  # (edge orbit, side left from, coset index)


@dataclass(frozen=True)
class TreeEdge:
    """A lift of an edge orbit.

    ``parent`` sits at ``parent_side`` of the orbit edge; in the parent's chart
    the tube attaches along the lattice line at ``coset_index``.  The child's
    chart is normalised so the tube attaches through its origin.
    """

    id: int
    orbit: str
    parent: int
    child: int
    parent_side: str
    coset_index: int

    @property
    def child_side(self) -> str:
        return other_side(self.parent_side)

    def end(self, side: str) -> int:
        return self.parent if side == self.parent_side else self.child

    @property
    def minus(self) -> int:
        return self.end(MINUS)

    @property
    def plus(self) -> int:
        return self.end(PLUS)


@dataclass
class TreeBall:
    group: TubularGraph
    radius: int
    coset_window: int
    tree_vertices: list[TreeVertex]
    tree_edges: list[TreeEdge]

    @property
    def base(self) -> int:
        return 0

    def incident(self, t: int) -> list[tuple[TreeEdge, str]]:
        """Tree edges at tree vertex ``t`` with the side ``t`` occupies."""
        return self._incident.get(t, [])

    def __post_init__(self):
        self._incident: dict[int, list[tuple[TreeEdge, str]]] = {}
        for te in self.tree_edges:
            self._incident.setdefault(te.parent, []).append((te, te.parent_side))
            self._incident.setdefault(te.child, []).append((te, te.child_side))

    def interior(self, t: int) -> bool:
        """True when every lift of every incident edge orbit (within the window) is in the ball."""
        return self.tree_vertices[t].depth < self.radius

    def representatives(self) -> dict[str, int]:
        """First tree vertex of each vertex orbit, in id order."""
        reps: dict[str, int] = {}
        for tv in self.tree_vertices:
            reps.setdefault(tv.orbit, tv.id)
        return reps


def build_tree_ball(g: TubularGraph, radius: int, coset_window: int, root: str | None = None,
                    cap: int | None = None) -> TreeBall:
    """Breadth-first ball of the Bass-Serre tree truncated to coset indices ``[-K, K]``."""
    require_valid(g)
    if radius < 0 or coset_window < 1:
        raise ValueError("radius must be >= 0 and coset_window >= 1")
    cap = max_tree_vertices() if cap is None else cap
    root = g.vertices[0] if root is None else root
    verts = [TreeVertex(0, root, 0, None, ())]
    edges: list[TreeEdge] = []
    queue = deque([0])
    while queue:
        t = queue.popleft()
        tv = verts[t]
        if tv.depth >= radius:
            continue
        back = None
        if tv.parent_edge is not None:
            pe = edges[tv.parent_edge]
            back = (pe.orbit, pe.child_side, 0)
        for e, side in g.incident(tv.orbit):
            for k in range(-coset_window, coset_window + 1):
                if (e.id, side, k) == back:
                    continue
                child = len(verts)
                if child >= cap:
                    raise ResourceLimit(f"tree ball exceeds {cap} vertices")
                te = TreeEdge(len(edges), e.id, t, child, side, k)
                edges.append(te)
                verts.append(TreeVertex(child, e.vertex(other_side(side)), tv.depth + 1, te.id,
                                        tv.path + ((e.id, side, k),)))
                queue.append(child)
    return TreeBall(g, radius, coset_window, verts, edges)
