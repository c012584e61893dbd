import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from helpers import amalgam, random_group, diagonal_loop
from tubular.errors import InvalidGroup, ResourceLimit
from tubular.group_model import (
    Edge,
    TubularGraph,
    build_tree_ball,
    h1_vertex_part,
    relation_matrix,
    require_valid,
    validate,
)
from tubular.lattice import Vec
from tubular.smith import matmul


def loop(a, b):
    return TubularGraph.build(["v"], [("e", "v", "v", a, b)])


def test_validate_examples():
    assert validate(loop((1, 0), (1, 0))).valid
    assert validate(loop((0, 0), (1, 0))).kinds() == {"ZeroAttaching"}
    two = TubularGraph.build(["u", "v"], [])
    assert validate(two).kinds() == {"Disconnected"}


def test_validate_dangling_and_duplicates():
    g = TubularGraph.build(["u", "u"], [("e", "u", "w", (1, 0), (1, 0)), ("e", "u", "u", (1, 0), (1, 0))])
    assert {"DuplicateVertex", "DuplicateEdge", "DanglingVertex"} <= validate(g).kinds()
    assert validate(TubularGraph.build([], [])).kinds() == {"Empty"}
    with pytest.raises(InvalidGroup):
        require_valid(TubularGraph.build(["u", "v"], []))


def test_h1_loop_same_vector():
    h = h1_vertex_part(loop((1, 0), (1, 0)))
    assert h.rank_d == 2 and h.summand["v"]
    assert h.torsion == []


def test_h1_loop_rank_one():
    h = h1_vertex_part(loop((1, 0), (0, 1)))
    assert h.rank_d == 1 and not h.summand["v"]


def test_h1_amalgam():
    h = h1_vertex_part(amalgam())
    assert h.rank_d == 3 and h.summand == {"u": True, "v": True}


def test_h1_torsion():
    h = h1_vertex_part(loop((2, 0), (0, 1)))
    assert h.rank_d == 1 and h.torsion == []
    h = h1_vertex_part(TubularGraph.build(["u", "v"], [("e", "u", "v", (2, 0), (2, 0))]))
    assert h.rank_d == 3 and h.torsion == [2]
    # modulo torsion e1 = e3, so both vertex groups still split off the free part
    assert h.summand == {"u": True, "v": True}


def _check_h1(g):
    h = h1_vertex_part(g)
    rel = relation_matrix(g)
    n = 2 * len(g.vertices)
    oracle_rank = sympy.Matrix(rel).rank() if rel else 0
    assert h.rank_d == n - oracle_rank
    if rel:
        d = sympy_snf(sympy.Matrix(rel), domain=sympy.ZZ)
        oracle = sorted(abs(d[i, i]) for i in range(min(d.shape)) if d[i, i] != 0)
        assert sorted(h.vertex_part_invariants) == oracle
    for v in g.vertices:
        if h.summand[v]:
            assert matmul(h.projections[v], h.inclusions[v]) == [[1, 0], [0, 1]]
    for e in g.edges:
        assert h.image(e.minus, e.phi_minus) == h.image(e.plus, e.phi_plus)


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_h1_random_against_oracle(seed):
    _check_h1(random_group(random.Random(seed), attach_bound=3))


def test_summand_iff_snf_unit():
    # a vertex group is a summand iff its inclusion has Smith diagonal (1, 1)
    for seed in range(40):
        g = random_group(random.Random(seed))
        h = h1_vertex_part(g)
        for v in g.vertices:
            inc = sympy.Matrix(h.inclusions[v]) if h.rank_d else sympy.zeros(0, 2)
            if inc.rows < 2:
                assert not h.summand[v]
                continue
            d = sympy_snf(inc, domain=sympy.ZZ)
            assert h.summand[v] == ([abs(d[0, 0]), abs(d[1, 1])] == [1, 1])


def _brute_count(g, radius, k):
    # recount tree vertices by walking edge-end choices, excluding immediate backtracking
    ends = {v: [(e.id, side) for e, side in g.incident(v)] for v in g.vertices}

    def walk(v, back, depth):
        if depth == radius:
            return 1
        total = 1
        for eid, side in ends[v]:
            e = g.edge(eid)
            w = e.plus if side == "minus" else e.minus
            for c in range(-k, k + 1):
                if (eid, side, c) == back:
                    continue
                total += walk(w, (eid, "plus" if side == "minus" else "minus", 0), depth + 1)
        return total

    return walk(g.vertices[0], None, 0)


def test_tree_ball_examples():
    g, _ = diagonal_loop()
    ball = build_tree_ball(g, 0, 1)
    assert len(ball.tree_vertices) == 1 and not ball.tree_edges
    ball = build_tree_ball(g, 1, 1)
    assert len(ball.tree_vertices) == 7


@pytest.mark.parametrize("radius,k", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_tree_ball_closed_form(radius, k):
    g, _ = diagonal_loop()
    a = 2 * (2 * k + 1)
    want = 1 + a * sum((a - 1) ** i for i in range(radius))
    ball = build_tree_ball(g, radius, k)
    assert len(ball.tree_vertices) == want == _brute_count(g, radius, k)
    assert len(ball.tree_edges) == want - 1


@pytest.mark.parametrize("seed", range(8))
def test_tree_ball_random_counts(seed):
    g = random_group(random.Random(seed))
    assert len(build_tree_ball(g, 2, 1).tree_vertices) == _brute_count(g, 2, 1)


def test_tree_ball_structure():
    g = amalgam()
    ball = build_tree_ball(g, 3, 2)
    seen = {0}
    for te in ball.tree_edges:
        assert te.parent in seen and te.child not in seen
        seen.add(te.child)
        assert -2 <= te.coset_index <= 2
        e = g.edge(te.orbit)
        assert ball.tree_vertices[te.minus].orbit == e.minus
        assert ball.tree_vertices[te.plus].orbit == e.plus
        assert ball.tree_vertices[te.child].depth == ball.tree_vertices[te.parent].depth + 1
    assert max(tv.depth for tv in ball.tree_vertices) == 3


def test_tree_ball_deterministic_and_prefix():
    g, _ = diagonal_loop()
    a, b = build_tree_ball(g, 2, 1), build_tree_ball(g, 2, 1)
    assert a.tree_vertices == b.tree_vertices and a.tree_edges == b.tree_edges
    big = build_tree_ball(g, 3, 1)
    assert big.tree_vertices[: len(a.tree_vertices)] == a.tree_vertices
    assert big.tree_edges[: len(a.tree_edges)] == a.tree_edges


def test_tree_ball_cap():
    g, _ = diagonal_loop()
    with pytest.raises(ResourceLimit):
        build_tree_ball(g, 3, 2, cap=50)


def test_with_edge_and_incident():
    g = amalgam().with_edge(Edge("x", "u", "u", Vec(0, 1), Vec(0, 1)))
    assert [(e.id, side) for e, side in g.incident("u")] == [("e", "minus"), ("x", "minus"), ("x", "plus")]
