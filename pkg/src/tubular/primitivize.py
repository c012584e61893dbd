"""Replace non-primitive equitable curves by parallel primitive copies.

A curve ``n * a0`` at vertex ``v`` becomes ``n`` copies of ``a0``.  If the
attaching vector at an edge end meets ``a0`` in ``m`` points, old slot
``(curve, j)`` with ``0 <= j < n*m`` moves to ``(copy j // m, j % m)``: the
``k``-th wrap of the multiply wrapped curve lands on copy ``k``.  Arcs keep
their other endpoint, so the pairing is transported slot by slot.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .equitable import CurveSpec, EquitableSet, verify_equitable
from .group_model import SIDES, TubularGraph
from .lattice import canonical_direction, intersection_number, primitive_decomposition
from .walls import ArcPairing, DilationReport


@dataclass(frozen=True)
class RewriteStep:
    vertex: str
    curve_index: int
    vec: tuple[int, int]
    n: int


def _first_nonprimitive(g: TubularGraph, s: EquitableSet):
    for v in g.vertices:
        for i, c in enumerate(s.at(v)):
            n, _ = primitive_decomposition(c.vec)
            if n > 1:
                return v, i, n
    return None


def primitivize_step(g: TubularGraph, s: EquitableSet, p: ArcPairing):
    """One replacement, or ``None`` when ``s`` is already primitive.

    Returns ``(s', p', step)``.  Arcs of ``p'`` are listed in the same order
    as those of ``p``, so old and new arcs correspond positionally.
    """
    hit = _first_nonprimitive(g, s)
    if hit is None:
        return None
    v, c, n = hit
    curves = list(s.at(v))
    alpha = curves[c]
    _, a0 = primitive_decomposition(alpha.vec)
    new_curves = curves[:c] + [CurveSpec(a0, alpha.offset)] * n + curves[c + 1:]
    new_curves = _reassign_class(new_curves, canonical_direction(a0)[0])
    mapping = dict(s.curves)
    mapping[v] = tuple(new_curves)
    s2 = EquitableSet(mapping)

    def shift(i):
        return i if i < c else i + n - 1

    def move(eid, side, slot):
        e = g.edge(eid)
        if e.vertex(side) != v:
            return tuple(slot)
        i, j = slot
        if i != c:
            return (shift(i), j)
        m = intersection_number(e.phi(side), a0)
        return (c + j // m, j % m)

    p2 = {eid: tuple((move(eid, SIDES[0], a), move(eid, SIDES[1], b)) for a, b in pairs) for eid, pairs in p.items()}
    return s2, p2, RewriteStep(v, c, tuple(alpha.vec), n)


def _reassign_class(curves: list[CurveSpec], direction) -> list[CurveSpec]:
    members = [i for i, cv in enumerate(curves) if cv.direction == direction]
    out = list(curves)
    for k, i in enumerate(members, start=1):
        out[i] = CurveSpec(curves[i].vec, Fraction(k, len(members) + 1))
    return out


def primitivize(g: TubularGraph, s: EquitableSet, p: ArcPairing):
    """Iterate :func:`primitivize_step` to a fixpoint; returns ``(s', p', trace)``."""
    trace = []
    while True:
        out = primitivize_step(g, s, p)
        if out is None:
            break
        s, p, step = out
        trace.append(step)
    assert not trace or verify_equitable(g, s).ok
    return s, p, trace


def verify_primitivize_dilation(before: list[DilationReport], after: list[DilationReport]) -> bool:
    """All walls non-dilated before implies all non-dilated after."""
    if any(r.dilated for r in before):
        return True
    return not any(r.dilated for r in after)
