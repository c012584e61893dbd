"""JSON input documents and report encoding.

Input documents are strict: unknown keys are rejected and every error names
a JSON path.  Rationals are strings ``"p/q"`` with ``q > 0`` in lowest terms.
Reports are dumped with sorted keys so output is byte-for-byte reproducible.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .equitable import CurveSpec, EquitableSet, assign_offsets
from .errors import InputError
from .group_model import Edge, TubularGraph
from .lattice import Vec
from .limits import DEFAULTS as CAP_DEFAULTS

DEFAULT_OPTIONS = {"radius": 2, "coset_window": 2, "level_window": 2, "bound": 3}
_RATIONAL = re.compile(r"^(-?\d+)/(\d+)$")


@dataclass
class InputDocument:
    group: TubularGraph
    equitable: EquitableSet | None = None
    pairing: dict | None = None
    options: dict = field(default_factory=lambda: dict(DEFAULT_OPTIONS))
    caps: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Parsing


def _keys(obj, loc, required, optional=()):
    if not isinstance(obj, dict):
        raise InputError("expected an object", loc)
    for k in obj:
        if k not in required and k not in optional:
            raise InputError(f"unknown field {k!r}", f"{loc}.{k}")
    for k in required:
        if k not in obj:
            raise InputError(f"missing field {k!r}", loc)


def _int(x, loc, minimum=None):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError("expected an integer", loc)
    if minimum is not None and x < minimum:
        raise InputError(f"expected an integer >= {minimum}", loc)
    return x


def _str(x, loc):
    if not isinstance(x, str) or not x:
        raise InputError("expected a nonempty string", loc)
    return x


def _list(x, loc):
    if not isinstance(x, list):
        raise InputError("expected an array", loc)
    return x


def _vec(x, loc, nonzero=True):
    if not isinstance(x, list) or len(x) != 2:
        raise InputError("expected a pair of integers", loc)
    v = Vec(_int(x[0], f"{loc}[0]"), _int(x[1], f"{loc}[1]"))
    if nonzero and v == (0, 0):
        raise InputError("vector must be nonzero", loc)
    return v


def parse_rational(x, loc="$") -> Fraction:
    if not isinstance(x, str):
        raise InputError('expected a rational string "p/q"', loc)
    m = _RATIONAL.match(x)
    if not m:
        raise InputError(f'malformed rational {x!r}; expected "p/q"', loc)
    p, q = int(m.group(1)), int(m.group(2))
    if q == 0:
        raise InputError("zero denominator", loc)
    if gcd(p, q) != 1:
        raise InputError(f"rational {x!r} is not in lowest terms", loc)
    return Fraction(p, q)


def parse_group(obj, loc="$.group") -> TubularGraph:
    _keys(obj, loc, ("vertices", "edges"))
    vertices = [_str(v, f"{loc}.vertices[{i}]") for i, v in enumerate(_list(obj["vertices"], f"{loc}.vertices"))]
    edges = []
    for i, e in enumerate(_list(obj["edges"], f"{loc}.edges")):
        el = f"{loc}.edges[{i}]"
        _keys(e, el, ("id", "minus", "plus", "phi_minus", "phi_plus"))
        edges.append(Edge(
            _str(e["id"], f"{el}.id"),
            _str(e["minus"], f"{el}.minus"),
            _str(e["plus"], f"{el}.plus"),
            _vec(e["phi_minus"], f"{el}.phi_minus", nonzero=False),
            _vec(e["phi_plus"], f"{el}.phi_plus", nonzero=False),
        ))
    return TubularGraph(tuple(vertices), tuple(edges))


def parse_equitable(obj, loc="$.equitable") -> EquitableSet:
    if not isinstance(obj, dict):
        raise InputError("expected an object", loc)
    curves = {}
    for v, cs in obj.items():
        vl = f"{loc}.{v}"
        specs, offsets = [], []
        for i, c in enumerate(_list(cs, vl)):
            cl = f"{vl}[{i}]"
            _keys(c, cl, ("vec",), ("offset",))
            specs.append(_vec(c["vec"], f"{cl}.vec"))
            offsets.append(parse_rational(c["offset"], f"{cl}.offset") if "offset" in c else None)
        if all(o is None for o in offsets):
            curves[v] = assign_offsets(specs)
        elif any(o is None for o in offsets):
            raise InputError("give offsets for all curves of a vertex or for none", vl)
        else:
            curves[v] = tuple(CurveSpec(a, o) for a, o in zip(specs, offsets))
    return EquitableSet(curves)


def parse_pairing(obj, loc="$.pairing") -> dict:
    if not isinstance(obj, dict):
        raise InputError("expected an object", loc)
    out = {}
    for eid, pairs in obj.items():
        el = f"{loc}.{eid}"
        got = []
        for i, pr in enumerate(_list(pairs, el)):
            pl = f"{el}[{i}]"
            if not isinstance(pr, list) or len(pr) != 2:
                raise InputError("expected [minus slot, plus slot]", pl)
            a = _vec(pr[0], f"{pl}[0]", nonzero=False)
            b = _vec(pr[1], f"{pl}[1]", nonzero=False)
            got.append((tuple(a), tuple(b)))
        out[eid] = tuple(got)
    return out


def parse_options(obj, loc="$.options"):
    _keys(obj, loc, (), tuple(DEFAULT_OPTIONS) + ("caps",))
    opts = dict(DEFAULT_OPTIONS)
    for k in DEFAULT_OPTIONS:
        if k in obj:
            opts[k] = _int(obj[k], f"{loc}.{k}", minimum=1 if k == "coset_window" else 0)
    caps = {}
    if "caps" in obj:
        _keys(obj["caps"], f"{loc}.caps", (), tuple(CAP_DEFAULTS))
        caps = {k: _int(v, f"{loc}.caps.{k}", minimum=1) for k, v in obj["caps"].items()}
    return opts, caps


def parse_document(obj) -> InputDocument:
    _keys(obj, "$", ("group",), ("equitable", "pairing", "options"))
    doc = InputDocument(parse_group(obj["group"]))
    if "equitable" in obj:
        doc.equitable = parse_equitable(obj["equitable"])
    if "pairing" in obj:
        doc.pairing = parse_pairing(obj["pairing"])
    if "options" in obj:
        doc.options, doc.caps = parse_options(obj["options"])
    return doc


def loads(text: str) -> InputDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    return parse_document(obj)


def load(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


# ---------------------------------------------------------------------------
# Encoding


def rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def encode_group(g: TubularGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [
            {"id": e.id, "minus": e.minus, "plus": e.plus, "phi_minus": list(e.phi_minus), "phi_plus": list(e.phi_plus)}
            for e in g.edges
        ],
    }


def encode_equitable(s: EquitableSet) -> dict:
    return {v: [{"vec": list(c.vec), "offset": rational(c.offset)} for c in cs] for v, cs in s.curves.items()}


def encode_pairing(p: dict) -> dict:
    return {eid: [[list(a), list(b)] for a, b in pairs] for eid, pairs in p.items()}


def encode_document(doc: InputDocument) -> dict:
    out = {"group": encode_group(doc.group)}
    if doc.equitable is not None:
        out["equitable"] = encode_equitable(doc.equitable)
    if doc.pairing is not None:
        out["pairing"] = encode_pairing(doc.pairing)
    opts = dict(doc.options)
    if doc.caps:
        opts["caps"] = dict(doc.caps)
    out["options"] = opts
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
