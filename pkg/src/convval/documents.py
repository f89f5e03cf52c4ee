"""JSON documents (schema "convval/1") for functions and growth functions.

Rationals are serialized as canonical "p/q" strings (plain integers when the
denominator is 1); floats use 17 significant digits.  parse(serialize(x))
is the identity on canonical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import DocumentError
from .functions import PWAConvex, make
from .growth import GrowthFunction, make_growth
from .polyhedra import HRep

SCHEMA = "convval/1"


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def parse_rational(s, field: str = "value") -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise DocumentError(f"{field}: expected a rational string, got {s!r}")
    try:
        f = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{field}: bad rational {s!r} ({exc})") from None
    return f


def _require(doc: dict, key: str, kind: str):
    if key not in doc:
        raise DocumentError(f"{kind} document missing field {key!r}")
    return doc[key]


def _check_schema(doc: dict, kind: str):
    if not isinstance(doc, dict):
        raise DocumentError("document is not a JSON object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"unsupported schema {doc.get('schema')!r} (want {SCHEMA!r})")
    if doc.get("kind") != kind:
        raise DocumentError(f"expected a {kind!r} document, got {doc.get('kind')!r}")


# -- functions ---------------------------------------------------------------

def function_to_doc(u: PWAConvex, provenance: str | None = None) -> dict:
    doc = {
        "schema": SCHEMA,
        "kind": "function",
        "n": u.n,
        "pieces": [{"a": [format_rational(x) for x in a], "b": format_rational(b)}
                   for a, b in u.pieces],
        "domain": [{"c": [format_rational(x) for x in c], "d": format_rational(d)}
                   for c, d in u.domain.halfspaces],
        "coercive": u.coercive,
    }
    if provenance:
        doc["provenance"] = provenance
    return doc


def function_from_doc(doc: dict) -> PWAConvex:
    _check_schema(doc, "function")
    n = _require(doc, "n", "function")
    if not isinstance(n, int) or n < 1:
        raise DocumentError(f"bad dimension n={n!r}")
    pieces = []
    for i, p in enumerate(_require(doc, "pieces", "function")):
        a = [parse_rational(x, f"pieces[{i}].a") for x in _require(p, "a", "piece")]
        if len(a) != n:
            raise DocumentError(f"pieces[{i}].a has length {len(a)}, expected {n}")
        pieces.append((tuple(a), parse_rational(_require(p, "b", "piece"), f"pieces[{i}].b")))
    rows = []
    for i, hs in enumerate(doc.get("domain", [])):
        c = [parse_rational(x, f"domain[{i}].c") for x in _require(hs, "c", "halfspace")]
        if len(c) != n:
            raise DocumentError(f"domain[{i}].c has length {len(c)}, expected {n}")
        rows.append((tuple(c), parse_rational(_require(hs, "d", "halfspace"), f"domain[{i}].d")))
    try:
        return make(pieces, HRep(n, tuple(rows)), n=n, coercive=doc.get("coercive", True))
    except Exception as exc:
        raise DocumentError(f"invalid function document: {exc}") from exc


# -- growth functions --------------------------------------------------------

def growth_to_doc(z: GrowthFunction) -> dict:
    doc = {
        "schema": SCHEMA,
        "kind": "growth",
        "breakpoints": [format_rational(b) for b in z.breakpoints],
        "pieces": [[format_rational(c) for c in p] for p in z.pieces],
        "left_constant": format_rational(z.left[0] if z.left else Fraction(0)),
        "nonnegative": z.nonnegative,
    }
    if z.tail is not None:
        lam, coeffs = z.tail
        doc["tail"] = {"lambda": format_rational(lam),
                       "coeffs": [format_rational(c) for c in coeffs]}
    return doc


def growth_from_doc(doc: dict) -> GrowthFunction:
    _check_schema(doc, "growth")
    bp = [parse_rational(b, "breakpoints") for b in _require(doc, "breakpoints", "growth")]
    pieces = [[parse_rational(c, f"pieces[{i}]") for c in p]
              for i, p in enumerate(_require(doc, "pieces", "growth"))]
    tail = None
    if "tail" in doc:
        t = doc["tail"]
        tail = (parse_rational(_require(t, "lambda", "tail"), "tail.lambda"),
                [parse_rational(c, "tail.coeffs") for c in _require(t, "coeffs", "tail")])
    try:
        return make_growth(bp, pieces,
                           left_constant=parse_rational(doc.get("left_constant", 0), "left_constant"),
                           tail=tail,
                           require_nonnegative=bool(doc.get("nonnegative", False)))
    except ValueError as exc:
        raise DocumentError(f"invalid growth document: {exc}") from exc


# -- files -------------------------------------------------------------------

def load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def load_function(path: str) -> PWAConvex:
    return function_from_doc(load_json(path))


def load_growth(path: str) -> GrowthFunction:
    return growth_from_doc(load_json(path))


def dump(doc: dict, path: str | None):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path is None:
        print(text, end="")
    else:
        with open(path, "w") as fh:
            fh.write(text)
