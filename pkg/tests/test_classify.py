import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import amalgam, dichotomy, load_fixture, random_instance, diagonal_loop, fortified_loop
from tubular.classify import (
    DILATION_CRITERION,
    NO_NOT_LOCALLY_FINITE,
    SPECIAL_CRITERION,
    THREE_DIM_CONSTRUCTION,
    UNKNOWN,
    YES,
    certify_three_dim,
    classify,
)
from tubular.equitable import EquitableSet, verify_equitable
from tubular.errors import NotEquitable, SummandConditionFailed
from tubular.group_model import TubularGraph


def test_diagonal_loop_unknown():
    g, s = diagonal_loop()
    v = classify(g, s)
    assert v.finite_dimensional and v.primitive and not v.fortified
    assert v.virtually_special == UNKNOWN
    assert v.summary() == "finite-dimensional: yes; fortified: no; virtually special: unknown (wallspace dual not locally finite)"


def test_diagonal_loop_exhaustive_is_negative():
    g, s = diagonal_loop()
    assert classify(g, s, exhaustive=True).virtually_special == NO_NOT_LOCALLY_FINITE


def test_fortified_variant_yes():
    g, s = fortified_loop()
    v = classify(g, s)
    assert v.virtually_special == YES
    assert any(cite == SPECIAL_CRITERION for _, cite in v.certificate_text)


def test_dilated_pairing():
    g, s, a, b = dichotomy()
    v = classify(g, s, a)
    assert not v.finite_dimensional and v.dilated_walls
    assert any(cite == DILATION_CRITERION and "dilated" in claim for claim, cite in v.certificate_text)
    assert v.virtually_special == UNKNOWN
    assert classify(g, s, b).finite_dimensional


def test_auto_primitivize():
    doc = load_fixture("nonprimitive.json")
    v = classify(doc.group, doc.equitable, doc.pairing)
    assert v.primitive and v.evidence["primitivize_trace"]
    assert v.virtually_special == YES
    assert all(gcd(*c.vec) == 1 for cs in v.evidence["equitable"].curves.values() for c in cs)


def test_not_equitable_raises():
    g, _, _, _ = dichotomy()
    with pytest.raises(NotEquitable) as info:
        classify(g, EquitableSet.from_vectors({"v": [(1, 0), (1, 1)]}))
    assert info.value.failures


def test_deterministic():
    g, s = fortified_loop()
    a, b = classify(g, s), classify(g, s)
    assert a.virtually_special == b.virtually_special
    assert a.certificate_text == b.certificate_text


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.booleans())
def test_verdict_invariants(seed, exhaustive):
    g, s, p = random_instance(random.Random(seed))
    v = classify(g, s, p, exhaustive=exhaustive)
    v.check()
    assert v.finite_dimensional == (not v.dilated_walls)
    assert v.locally_finite_claim == v.fortified
    assert (v.virtually_special == YES) == (v.primitive and v.fortified and v.finite_dimensional)


def _two_classes(cert, g):
    s = cert.construction.equitable
    assert all(len(s.at(v)) == 2 for v in g.vertices)
    assert verify_equitable(g, s).ok


def test_certify_diagonal_loop():
    g, _ = diagonal_loop()
    cert = certify_three_dim(g)
    _two_classes(cert, g)
    assert cert.construction.rank_d == 2 and not cert.construction.auxiliary_edges
    # one class is parallel to the tube, so vertical walls cross only the other
    assert cert.dimension_estimate == 2
    assert any(cite == THREE_DIM_CONSTRUCTION for _, cite in cert.verdict.certificate_text)


def test_certify_amalgam():
    g = amalgam()
    cert = certify_three_dim(g)
    _two_classes(cert, g)
    assert cert.construction.rank_d == 3
    assert [e.id for e in cert.construction.auxiliary_edges] == ["aux0"]
    assert cert.dimension_estimate <= 3


def test_certify_generic_tube_reaches_three():
    # attaching vectors transverse to both generators
    g = TubularGraph.build(["v"], [("e", "v", "v", (1, 1), (1, 1))])
    cert = certify_three_dim(g)
    _two_classes(cert, g)
    assert cert.dimension_estimate == 3


def test_certify_rank1():
    doc = load_fixture("rank1-loop.json")
    with pytest.raises(SummandConditionFailed):
        certify_three_dim(doc.group)
