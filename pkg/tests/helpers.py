"""Shared fixtures and random instance generators for the test suite."""
from __future__ import annotations

import itertools
import json
import random
from importlib import resources

from tubular import serialize as ser
from tubular.equitable import EquitableSet, finite_index, is_fortified
from tubular.group_model import TubularGraph
from tubular.lattice import Vec, det, intersection_number_set
from tubular.primitivize import primitivize_step
from tubular.walls import Arc, arc_weight, build_walls, dilation, random_pairing

FIXTURES = [
    "amalgam.json",
    "balanced-pairingB.json",
    "diagonal-loop.json",
    "dilated-pairingA.json",
    "fortified-loop.json",
    "nonprimitive.json",
    "rank1-loop.json",
]


def fixture_path(name: str) -> str:
    return str(resources.files("tubular") / "data" / name)


def load_fixture(name: str):
    return ser.load(fixture_path(name))


def fixture_json(name: str) -> dict:
    return json.loads(open(fixture_path(name)).read())


def diagonal_loop():
    g = TubularGraph.build(["v"], [("e", "v", "v", (1, 0), (1, 0))])
    return g, EquitableSet.from_vectors({"v": [(1, 1), (1, -1)]})


def fortified_loop():
    g, _ = diagonal_loop()
    return g, EquitableSet.from_vectors({"v": [(1, 1), (1, -1), (1, 0)]})


def dichotomy():
    """Loop with phi = (1,0), (0,1) and curves (1,2), (2,1); pairings A (dilated) and B."""
    g = TubularGraph.build(["v"], [("e", "v", "v", (1, 0), (0, 1))])
    s = EquitableSet.from_vectors({"v": [(1, 2), (2, 1)]})
    a = {"e": (((0, 0), (0, 0)), ((0, 1), (1, 0)), ((1, 0), (1, 1)))}
    b = {"e": (((0, 0), (1, 0)), ((0, 1), (1, 1)), ((1, 0), (0, 0)))}
    return g, s, a, b


def amalgam():
    return TubularGraph.build(["u", "v"], [("e", "u", "v", (1, 0), (1, 0))])


# ---------------------------------------------------------------------------
# Random small instances


def _vectors(bound):
    out = []
    for x in range(0, bound + 1):
        for y in range(-bound, bound + 1):
            if (x, y) != (0, 0) and (x > 0 or y > 0):
                out.append(Vec(x, y))
    return out


def random_group(rng: random.Random, attach_bound: int = 2) -> TubularGraph:
    vecs = _vectors(attach_bound)
    if rng.random() < 0.5:
        n_edges = rng.choice([1, 1, 2])
        edges = [(f"e{i}", "v", "v", rng.choice(vecs), rng.choice(vecs)) for i in range(n_edges)]
        return TubularGraph.build(["v"], edges)
    edges = [("e0", "u", "v", rng.choice(vecs), rng.choice(vecs))]
    if rng.random() < 0.5:
        m, p = rng.choice([("u", "v"), ("v", "u"), ("u", "u"), ("v", "v")])
        edges.append(("e1", m, p, rng.choice(vecs), rng.choice(vecs)))
    return TubularGraph.build(["u", "v"], edges)


def _combos(vecs, sizes):
    for k in sizes:
        yield from itertools.combinations_with_replacement(vecs, k)


def random_equitable(rng: random.Random, g: TubularGraph, bound: int = 3, fortified: bool | None = None,
                     sizes=(2, 3)):
    """Uniform-ish sample of an equitable set with curve vectors |coords| <= bound, or None."""
    vecs = _vectors(bound)
    per_vertex = {}
    for v in g.vertices:
        ends = [(e, side) for e, side in g.incident(v)]
        loops = [e for e in g.edges if e.minus == v and e.plus == v]
        cands = []
        for combo in _combos(vecs, sizes):
            if not finite_index(combo):
                continue
            if any(intersection_number_set(e.phi_minus, combo) != intersection_number_set(e.phi_plus, combo)
                   for e in loops):
                continue
            if fortified and not all(any(det(c, e.phi(side)) == 0 for c in combo) for e, side in ends):
                continue
            cands.append(combo)
        per_vertex[v] = cands
    if any(not c for c in per_vertex.values()):
        return None
    if len(g.vertices) == 1:
        (v,) = g.vertices
        choice = {v: rng.choice(per_vertex[v])}
    else:
        u, v = g.vertices
        cross = [e for e in g.edges if not e.is_loop]
        rng.shuffle(per_vertex[u])
        choice = None
        for cu in per_vertex[u]:
            want = []
            for e in cross:
                other = "plus" if e.minus == u else "minus"
                mine = "minus" if other == "plus" else "plus"
                want.append((e, other, intersection_number_set(e.phi(mine), cu)))
            matches = [cv for cv in per_vertex[v]
                       if all(intersection_number_set(e.phi(side), cv) == n for e, side, n in want)]
            if matches:
                choice = {u: cu, v: rng.choice(matches)}
                break
        if choice is None:
            return None
    s = EquitableSet.from_vectors({k: list(c) for k, c in choice.items()})
    if fortified is False and is_fortified(g, s)[0]:
        return None
    return s


def random_instance(rng: random.Random, fortified: bool | None = None, non_dilated: bool | None = None,
                    tries: int = 200):
    """A random (g, s, p) with at most 2 vertices and 2 edges and |coords| <= 3."""
    for _ in range(tries):
        g = random_group(rng)
        s = random_equitable(rng, g, fortified=fortified)
        if s is None:
            continue
        p = random_pairing(g, s, rng)
        if non_dilated is not None:
            dil = any(dilation(w, g, s).dilated for w in build_walls(g, s, p))
            if dil == non_dilated:
                continue
        return g, s, p
    raise RuntimeError("no instance found")


# ---------------------------------------------------------------------------
# Arc weight transport through one rewrite step at a time


def _arc_case(arc: Arc, v, c):
    minus_hit = arc.minus == (v, c)
    plus_hit = arc.plus == (v, c)
    if minus_hit == plus_hit:
        return "unchanged"
    return "times_n" if plus_hit else "over_n"


def check_weight_transport(g, s, p):
    """Step by step, compare arc weights before and after; returns case counts."""
    counts = {"unchanged": 0, "times_n": 0, "over_n": 0}
    while True:
        out = primitivize_step(g, s, p)
        if out is None:
            return counts
        s2, p2, step = out
        old_arcs = [a for w in build_walls(g, s, p) for a in w.arcs]
        new_arcs = [a for w in build_walls(g, s2, p2) for a in w.arcs]
        key = lambda a: (a.edge, a.minus_slot, a.plus_slot)  # noqa: E731
        order_old = {(e, tuple(x), tuple(y)): i for e, pairs in p.items() for i, (x, y) in enumerate(pairs)}
        order_new = {(e, tuple(x), tuple(y)): i for e, pairs in p2.items() for i, (x, y) in enumerate(pairs)}
        old_by_pos = {(a.edge, order_old[key(a)]): a for a in old_arcs}
        new_by_pos = {(a.edge, order_new[key(a)]): a for a in new_arcs}
        assert old_by_pos.keys() == new_by_pos.keys()
        for pos, a in old_by_pos.items():
            b = new_by_pos[pos]
            w0, w1 = arc_weight(g, s, a), arc_weight(g, s2, b)
            case = _arc_case(a, step.vertex, step.curve_index)
            counts[case] += 1
            want = {"unchanged": w0, "times_n": w0 * step.n, "over_n": w0 / step.n}[case]
            assert w1 == want, (case, a, b, w0, w1)
        s, p = s2, p2
