"""Command line interface.

Exit codes: 0 success, 1 negative verdict, 2 input error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import sys

from . import serialize as ser
from .classify import YES, certify_three_dim, classify
from .cover import HORIZONTAL, cover_ball, dimension_estimate, lift_walls, local_finiteness_probe, stable_partition
from .equitable import is_primitive_set, search_equitable, three_dim_equitable, verify_equitable
from .errors import (
    BadPairing,
    DimensionExceeded,
    InputError,
    InvalidGroup,
    NotEquitable,
    NotFound,
    RecursionLimit,
    ResourceLimit,
    SummandConditionFailed,
    ZeroVector,
)
from .group_model import validate
from .limits import overrides
from .primitivize import primitivize
from .walls import build_walls, default_pairing, dilation

OK, NEGATIVE, INPUT_ERROR, RESOURCE = 0, 1, 2, 3


def _need_equitable(doc):
    if doc.equitable is None:
        raise InputError("this command needs an 'equitable' section")
    return doc.equitable


def _pairing(doc, s):
    return doc.pairing if doc.pairing is not None else default_pairing(doc.group, s)


def _failures(items):
    return [{"kind": k, "detail": d} for k, d in items]


def _circle(c):
    return [c[0], c[1]]


# ---------------------------------------------------------------------------
# Commands: each returns (report dict, exit code, text lines)


def cmd_validate(doc, args):
    rep = validate(doc.group)
    out = {"valid": rep.valid, "violations": _failures(rep.violations)}
    text = ["valid" if rep.valid else "invalid"] + [f"  {k}: {d}" for k, d in rep.violations]
    return out, OK if rep.valid else NEGATIVE, text


def cmd_equitable_verify(doc, args):
    s = _need_equitable(doc)
    rep = verify_equitable(doc.group, s)
    out = {
        "balances": {e: list(b) for e, b in rep.balances.items()},
        "failures": _failures(rep.failures),
        "ok": rep.ok,
    }
    text = [f"equitable: {'yes' if rep.ok else 'no'}"]
    text += [f"  edge {e}: {a} = {b}" if a == b else f"  edge {e}: {a} != {b}" for e, (a, b) in rep.balances.items()]
    text += [f"  {k}: {d}" for k, d in rep.failures]
    return out, OK if rep.ok else NEGATIVE, text


def cmd_equitable_search(doc, args):
    bound = args.bound if args.bound is not None else doc.options["bound"]
    try:
        s = search_equitable(doc.group, bound)
    except NotFound as exc:
        return {"bound": bound, "found": False, "message": str(exc)}, NEGATIVE, [f"not found: {exc}"]
    out = {"bound": bound, "equitable": ser.encode_equitable(s), "found": True}
    text = [f"found at bound {bound}"] + [f"  {v}: {[tuple(c.vec) for c in cs]}" for v, cs in s.curves.items()]
    return out, OK, text


def cmd_equitable_from_homology(doc, args):
    try:
        con = three_dim_equitable(doc.group)
    except SummandConditionFailed as exc:
        return {"message": str(exc), "ok": False, "vertex": exc.vertex}, NEGATIVE, [f"summand condition fails: {exc}"]
    out = {
        "auxiliary_edges": [
            {"id": e.id, "minus": e.minus, "phi_minus": list(e.phi_minus), "phi_plus": list(e.phi_plus), "plus": e.plus}
            for e in con.auxiliary_edges
        ],
        "equitable": ser.encode_equitable(con.equitable),
        "ok": True,
        "pairing": ser.encode_pairing(con.pairing),
        "rank_d": con.rank_d,
    }
    text = [f"free rank {con.rank_d}; auxiliary edges {[e.id for e in con.auxiliary_edges]}"]
    text += [f"  {v}: {[tuple(c.vec) for c in cs]}" for v, cs in con.equitable.curves.items()]
    return out, OK, text


def cmd_walls_build(doc, args):
    s = _need_equitable(doc)
    walls = build_walls(doc.group, s, _pairing(doc, s))
    out = {"walls": [
        {
            "arcs": [
                {"edge": a.edge, "minus": _circle(a.minus), "minus_slot": list(a.minus_slot),
                 "plus": _circle(a.plus), "plus_slot": list(a.plus_slot)}
                for a in w.arcs
            ],
            "circles": [_circle(c) for c in w.circles],
            "component_id": w.component_id,
        }
        for w in walls
    ]}
    text = [f"wall {w.component_id}: {len(w.circles)} circles, {len(w.arcs)} arcs" for w in walls]
    return out, OK, text


def cmd_walls_dilation(doc, args):
    s = _need_equitable(doc)
    g = doc.group
    walls = build_walls(g, s, _pairing(doc, s))
    reports = [dilation(w, g, s) for w in walls]
    out = {
        "finite_dimensional": not any(r.dilated for r in reports),
        "walls": [
            {
                "component_id": r.component_id,
                "cycle_arcs": r.cycle_arcs,
                "cycle_weights": [ser.rational(x) for x in r.cycle_weights],
                "dilated": r.dilated,
                "weights": [ser.rational(x) for x in r.weights],
            }
            for r in reports
        ],
    }
    text = [
        f"wall {r.component_id}: {'dilated' if r.dilated else 'not dilated'}; cycle weights "
        + (", ".join(ser.rational(x) for x in r.cycle_weights) or "none")
        for r in reports
    ]
    return out, OK if out["finite_dimensional"] else NEGATIVE, text


def cmd_primitivize(doc, args):
    s = _need_equitable(doc)
    p = _pairing(doc, s)
    rep = verify_equitable(doc.group, s)
    if not rep.ok:
        raise NotEquitable("input curves are not an equitable set", rep.failures)
    s2, p2, trace = primitivize(doc.group, s, p)
    out = {
        "equitable": ser.encode_equitable(s2),
        "pairing": ser.encode_pairing(p2),
        "trace": [{"curve_index": t.curve_index, "n": t.n, "vec": list(t.vec), "vertex": t.vertex} for t in trace],
    }
    text = [f"{len(trace)} rewrite steps"] + [f"  {t.vertex}[{t.curve_index}] = {t.n} x {t.vec}" for t in trace]
    return out, OK, text


def cmd_cover(doc, args):
    s = _need_equitable(doc)
    g = doc.group
    p = _pairing(doc, s)
    rep = verify_equitable(g, s)
    if not rep.ok:
        raise NotEquitable("input curves are not an equitable set", rep.failures)
    radius = args.radius if args.radius is not None else doc.options["radius"]
    window = args.window if args.window is not None else doc.options["coset_window"]
    level_window = args.level_window if args.level_window is not None else doc.options["level_window"]
    primitivized = not is_primitive_set(s)[0]
    if primitivized:
        s, p, _ = primitivize(g, s, p)
    cb = cover_ball(g, s, p, radius, window, level_window)
    walls = lift_walls(cb)
    part = stable_partition(walls)
    probe = local_finiteness_probe(cb, walls)
    dim = dimension_estimate(walls)
    horizontal = [w for w in walls if w.kind == HORIZONTAL]
    out = {
        "coset_window": window,
        "dimension_estimate": dim,
        "level_window": level_window,
        "local_finiteness": {
            "count": probe.count,
            "locally_finite_evidence": probe.locally_finite_evidence,
            "witness": list(probe.witness) if probe.witness else None,
        },
        "primitivized": primitivized,
        "radius": radius,
        "stable_partition": {
            "base_families": part.count(cb.tree.base),
            "families": len(part.families),
            "ok": part.ok,
            "violations": len(part.violations),
        },
        "tree": {"edges": len(cb.tree.tree_edges), "vertices": len(cb.tree.tree_vertices)},
        "walls": {"horizontal": len(horizontal), "vertical": len(walls) - len(horizontal)},
    }
    if args.dump:
        out["dump"] = {
            "tree_edges": [
                {"child": te.child, "coset_index": te.coset_index, "id": te.id, "orbit": te.orbit,
                 "parent": te.parent, "parent_side": te.parent_side}
                for te in cb.tree.tree_edges
            ],
            "tree_vertices": [{"depth": tv.depth, "id": tv.id, "orbit": tv.orbit} for tv in cb.tree.tree_vertices],
            "walls": [_encode_lifted(w) for w in walls],
        }
    text = [
        f"ball: {len(cb.tree.tree_vertices)} flats, {len(cb.tree.tree_edges)} tubes (radius {radius}, window {window})",
        f"walls: {len(horizontal)} horizontal, {len(walls) - len(horizontal)} vertical",
        f"dimension estimate: {dim}",
        f"stable partition: {len(part.families)} families, {part.count(cb.tree.base)} at the base flat, "
        f"{len(part.violations)} violations",
        f"vertical flips at a sample 0-cube: {probe.count} of {2 * window + 1}"
        + (" (locally finite evidence)" if probe.locally_finite_evidence else " (not locally finite)"),
    ]
    return out, OK, text


def _encode_lifted(w):
    if w.kind != HORIZONTAL:
        return {"id": w.id, "kind": w.kind, "tree_edge": w.tree_edge}
    return {
        "component": w.component,
        "id": w.id,
        "kind": w.kind,
        "traces": {
            str(f): {"circle": _circle(tr.circle), "direction": list(tr.line.direction),
                     "level": ser.rational(tr.line.level), "sign": tr.sign}
            for f, tr in sorted(w.traces.items())
        },
        "tube_crossings": [
            {"minus_slot": list(c.minus_slot), "plus_slot": list(c.plus_slot), "t_minus": ser.rational(c.t_minus),
             "t_plus": ser.rational(c.t_plus), "tree_edge": c.tree_edge}
            for _, c in sorted(w.tube_crossings.items())
        ],
    }


def _encode_verdict(v):
    ev = v.evidence
    return {
        "certificate": [{"citation": cite, "claim": claim} for claim, cite in v.certificate_text],
        "dilated_walls": v.dilated_walls,
        "equitable": ser.encode_equitable(ev["equitable"]),
        "equitable_ok": v.equitable_ok,
        "finite_dimensional": v.finite_dimensional,
        "fortified": v.fortified,
        "locally_finite_claim": v.locally_finite_claim,
        "pairing": ser.encode_pairing(ev["pairing"]),
        "primitive": v.primitive,
        "primitivize_trace": [
            {"curve_index": t.curve_index, "n": t.n, "vec": list(t.vec), "vertex": t.vertex}
            for t in ev["primitivize_trace"]
        ],
        "summary": v.summary(),
        "virtually_special": v.virtually_special,
    }


def cmd_classify(doc, args):
    s = _need_equitable(doc)
    v = classify(doc.group, s, doc.pairing, exhaustive=args.exhaustive)
    return _encode_verdict(v), OK if v.virtually_special == YES else NEGATIVE, [v.summary()]


def cmd_certify(doc, args):
    radius = args.radius if args.radius is not None else doc.options["radius"]
    window = args.window if args.window is not None else doc.options["coset_window"]
    try:
        cert = certify_three_dim(doc.group, radius, window)
    except SummandConditionFailed as exc:
        return {"message": str(exc), "ok": False, "vertex": exc.vertex}, NEGATIVE, [f"summand condition fails: {exc}"]
    con = cert.construction
    out = {
        "auxiliary_edges": [e.id for e in con.auxiliary_edges],
        "coset_window": window,
        "dimension_estimate": cert.dimension_estimate,
        "ok": True,
        "radius": radius,
        "rank_d": con.rank_d,
        "verdict": _encode_verdict(cert.verdict),
    }
    text = [
        f"3-dimensional data: free rank {con.rank_d}, auxiliary edges {[e.id for e in con.auxiliary_edges]}",
        f"dimension estimate {cert.dimension_estimate} <= 3 at radius {radius}, window {window}",
        cert.verdict.summary(),
    ]
    return out, OK, text


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("input", help="JSON input document")
    fmt.add_argument("--format", choices=("json", "text"), default="text")

    parser = argparse.ArgumentParser(prog="tubular", description="Cubulation checks for tubular groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[fmt], help="check the graph of groups").set_defaults(func=cmd_validate)

    eq = sub.add_parser("equitable", help="equitable sets").add_subparsers(dest="action", required=True)
    eq.add_parser("verify", parents=[fmt]).set_defaults(func=cmd_equitable_verify)
    search = eq.add_parser("search", parents=[fmt])
    search.add_argument("--bound", type=int)
    search.set_defaults(func=cmd_equitable_search)
    eq.add_parser("from-homology", parents=[fmt]).set_defaults(func=cmd_equitable_from_homology)

    walls = sub.add_parser("walls", help="immersed walls").add_subparsers(dest="action", required=True)
    walls.add_parser("build", parents=[fmt]).set_defaults(func=cmd_walls_build)
    walls.add_parser("dilation", parents=[fmt]).set_defaults(func=cmd_walls_dilation)

    sub.add_parser("primitivize", parents=[fmt], help="split multiple curves into primitive copies").set_defaults(func=cmd_primitivize)

    cover = sub.add_parser("cover", parents=[fmt], help="lift walls to a ball of the universal cover")
    cover.add_argument("--radius", type=int)
    cover.add_argument("--window", type=int)
    cover.add_argument("--level-window", type=int)
    cover.add_argument("--dump", action="store_true", help="include the tree and every lifted wall")
    cover.set_defaults(func=cmd_cover)

    cl = sub.add_parser("classify", parents=[fmt], help="run the full verdict chain")
    cl.add_argument("--exhaustive", action="store_true",
                    help="treat the given walls as the only candidates (allows a negative verdict)")
    cl.set_defaults(func=cmd_classify)

    cert = sub.add_parser("certify-3d", parents=[fmt], help="two-class construction and a dimension check")
    cert.add_argument("--radius", type=int)
    cert.add_argument("--window", type=int)
    cert.set_defaults(func=cmd_certify)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    for name in ("radius", "window", "level_window", "bound"):
        value = getattr(args, name, None)
        if value is not None and (value < 0 or (name == "window" and value < 1)):
            print(f"error: --{name.replace('_', '-')} out of range", file=stderr)
            return INPUT_ERROR
    try:
        doc = ser.load(args.input)
        with overrides(doc.caps):
            report, code, text = args.func(doc, args)
    except (InputError, InvalidGroup, BadPairing, ZeroVector, NotEquitable) as exc:
        detail = getattr(exc, "failures", None)
        print(f"error: {exc}" + (f" {detail}" if detail else ""), file=stderr)
        return INPUT_ERROR
    except (ResourceLimit, RecursionLimit) as exc:
        print(f"resource limit: {exc}", file=stderr)
        return RESOURCE
    except DimensionExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return NEGATIVE
    if args.format == "json":
        stdout.write(ser.dumps(report))
    else:
        stdout.write("\n".join(text) + "\n")
    return code


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
