"""The verdict chain: equitable set, walls, dilation, primitivity and
fortification, ending in a virtually-special verdict with a certificate.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cover import cover_ball, dimension_estimate, lift_walls
from .equitable import ThreeDimConstruction, is_fortified, is_primitive_set, three_dim_equitable, verify_equitable
from .errors import DimensionExceeded, NotEquitable
from .group_model import TubularGraph, require_valid
from .primitivize import primitivize
from .walls import build_walls, default_pairing, dilation

YES = "yes"
NO_NOT_LOCALLY_FINITE = "no_not_locally_finite"
UNKNOWN = "unknown"

DILATION_CRITERION = "dilation criterion: the dual is infinite dimensional iff some immersed wall is dilated"
FORTIFIED_CRITERION = "fortified criterion: the dual is locally finite iff the immersed walls are fortified"
SPECIAL_CRITERION = "primitive, fortified and non-dilated walls give a virtually special group"
PRIMITIVE_REWRITE = "primitive rewrite: splitting multiple curves into parallel copies keeps walls non-dilated and fortified"
FREE_ACTION_CRITERION = "a tubular group acts freely on a locally finite cube complex iff it is virtually special"
THREE_DIM_CONSTRUCTION = "two curve classes per vertex from a summand of the vertex homology give a 3-dimensional dual"


@dataclass
class Verdict:
    equitable_ok: bool
    dilated_walls: list[int]
    finite_dimensional: bool
    primitive: bool
    fortified: bool
    locally_finite_claim: bool
    virtually_special: str
    evidence: dict = field(default_factory=dict)
    certificate_text: list[tuple[str, str]] = field(default_factory=list)

    def check(self) -> None:
        assert self.finite_dimensional == (not self.dilated_walls)
        assert self.locally_finite_claim == self.fortified
        special = self.primitive and self.fortified and self.finite_dimensional
        assert (self.virtually_special == YES) == special
        if self.virtually_special == NO_NOT_LOCALLY_FINITE:
            assert not self.fortified

    def summary(self) -> str:
        def yn(b):
            return "yes" if b else "no"

        if self.virtually_special == YES:
            vs = "yes"
        elif self.virtually_special == NO_NOT_LOCALLY_FINITE:
            vs = "no (no locally finite dual for the given walls, taken as exhaustive)"
        elif not self.finite_dimensional:
            vs = "unknown (wallspace dual infinite dimensional)"
        elif not self.fortified:
            vs = "unknown (wallspace dual not locally finite)"
        else:
            vs = "unknown"
        return f"finite-dimensional: {yn(self.finite_dimensional)}; fortified: {yn(self.fortified)}; virtually special: {vs}"


def _analyse(g, s, p):
    walls = build_walls(g, s, p)
    reports = [dilation(w, g, s) for w in walls]
    fortified, witnesses = is_fortified(g, s)
    primitive, offenders = is_primitive_set(s)
    return walls, reports, fortified, witnesses, primitive, offenders


def classify(g: TubularGraph, s, p=None, exhaustive: bool = False) -> Verdict:
    """Run the chain on ``(g, s, p)``; ``p`` defaults to the lexicographic pairing.

    ``exhaustive`` asserts that ``s`` is the only wall system under
    consideration, which turns a non-fortified result into a negative
    verdict instead of ``unknown``.
    """
    require_valid(g)
    report = verify_equitable(g, s)
    if not report.ok:
        raise NotEquitable("input curves are not an equitable set", report.failures)
    if p is None:
        p = default_pairing(g, s)
    walls, reports, fortified, witnesses, primitive, offenders = _analyse(g, s, p)
    dilated = [r.component_id for r in reports if r.dilated]
    certificate = []
    trace = []
    if not primitive and not dilated and fortified:
        s, p, trace = primitivize(g, s, p)
        walls, reports, fortified, witnesses, primitive, _ = _analyse(g, s, p)
        dilated = [r.component_id for r in reports if r.dilated]
        assert primitive and fortified and not dilated
        certificate.append((f"non-primitive curves {offenders} rewritten in {len(trace)} steps", PRIMITIVE_REWRITE))
    finite = not dilated
    if finite:
        certificate.append(("no immersed wall is dilated, so the dual cube complex is finite dimensional", DILATION_CRITERION))
    else:
        certificate.append((f"walls {dilated} are dilated, so the dual cube complex is infinite dimensional", DILATION_CRITERION))
    if fortified:
        certificate.append(("every edge end carries a curve parallel to its attaching vector; the dual is locally finite", FORTIFIED_CRITERION))
    else:
        missing = sorted(e for e, pair in witnesses.items() if None in pair)
        certificate.append((f"edges {missing} lack a parallel curve at some end; the dual is not locally finite", FORTIFIED_CRITERION))
    if primitive and fortified and finite:
        verdict = YES
        certificate.append(("the group is virtually special", SPECIAL_CRITERION))
    elif exhaustive and not fortified:
        verdict = NO_NOT_LOCALLY_FINITE
        certificate.append(("with these walls taken as exhaustive, no locally finite dual exists", FREE_ACTION_CRITERION))
    else:
        verdict = UNKNOWN
        certificate.append(("this wall system does not decide virtual specialness; other equitable sets may", FREE_ACTION_CRITERION))
    evidence = {
        "balances": report.balances,
        "dilation": reports,
        "fortified_witnesses": witnesses,
        "primitivize_trace": trace,
        "equitable": s,
        "pairing": p,
    }
    v = Verdict(True, dilated, finite, primitive, fortified, fortified, verdict, evidence, certificate)
    v.check()
    return v


@dataclass
class ThreeDimCertificate:
    verdict: Verdict
    construction: ThreeDimConstruction
    dimension_estimate: int
    radius: int
    coset_window: int


def certify_three_dim(g: TubularGraph, radius: int = 2, coset_window: int = 2) -> ThreeDimCertificate:
    """Build the two-class equitable set, classify it and bound the dual's dimension in a ball."""
    con = three_dim_equitable(g)
    verdict = classify(g, con.equitable, con.pairing)
    s, p = verdict.evidence["equitable"], verdict.evidence["pairing"]
    if not verdict.primitive:
        s, p, _ = primitivize(g, s, p)
    cb = cover_ball(g, s, p, radius, coset_window)
    estimate = dimension_estimate(lift_walls(cb))
    if estimate > 3:
        raise DimensionExceeded(f"dimension estimate {estimate} exceeds 3 at radius {radius}, window {coset_window}")
    aux = [e.id for e in con.auxiliary_edges]
    verdict.certificate_text.append(
        (f"two curve classes per vertex (free rank {con.rank_d}, auxiliary edges {aux}); "
         f"ball estimate {estimate} at radius {radius}, window {coset_window}", THREE_DIM_CONSTRUCTION)
    )
    return ThreeDimCertificate(verdict, con, estimate, radius, coset_window)
