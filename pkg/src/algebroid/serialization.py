"""JSON documents for Hopf algebroids: load (with schema checks) and emit."""
import json
import os

from .errors import SchemaError
from .exactla import Mat, LinAlgError, field_from_json
from .algebra import algebra_from_json
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .hopfalgebroid import HopfAlgebroid


def _side_to_json(b):
    return {"base": b.B.to_json(), "s": b.s.to_json(), "t": b.t.to_json(),
            "gamma_lift": b.gamma_lift.to_json(), "pi": b.pi.to_json()}


def hopf_to_json(h):
    return {"field": h.F.name, "total": h.A.to_json(),
            "left": _side_to_json(h.left), "right": _side_to_json(h.right),
            "antipode": h.S.to_json()}


def dumps(doc):
    """Canonical byte-stable JSON text."""
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def _mat(F, data, rows, cols, what):
    try:
        return Mat.from_json(F, data, rows, cols)
    except LinAlgError as e:
        raise SchemaError("%s: %s" % (what, e))


def _side(F, A, doc, name):
    if not isinstance(doc, dict):
        raise SchemaError("%r must be an object" % name)
    for k in ("base", "s", "t", "gamma_lift", "pi"):
        if k not in doc:
            raise SchemaError("%s is missing %r" % (name, k))
    try:
        B = algebra_from_json(F, doc["base"])
    except LinAlgError as e:
        raise SchemaError("%s.base: %s" % (name, e))
    n, m = A.dim, B.dim
    s = _mat(F, doc["s"], n, m, name + ".s")
    t = _mat(F, doc["t"], n, m, name + ".t")
    g = _mat(F, doc["gamma_lift"], n * n, n, name + ".gamma_lift")
    pi = _mat(F, doc["pi"], m, n, name + ".pi")
    return B, s, t, g, pi


def hopf_from_json(doc, label="Hopf algebroid"):
    """Build an unverified HopfAlgebroid from a document; axioms are checked separately."""
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    for k in ("field", "total", "left", "right", "antipode"):
        if k not in doc:
            raise SchemaError("document is missing %r" % k)
    try:
        F = field_from_json(doc["field"])
        A = algebra_from_json(F, doc["total"])
    except LinAlgError as e:
        raise SchemaError(str(e))
    L = _side(F, A, doc["left"], "left")
    R = _side(F, A, doc["right"], "right")
    S = _mat(F, doc["antipode"], A.dim, A.dim, "antipode")
    left = LeftBialgebroid(A, *L, label=label + " (left)")
    right = RightBialgebroid(A, *R, label=label + " (right)")
    return HopfAlgebroid(left, right, S, label)


def load(path):
    try:
        with open(path) as f:
            doc = json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError("not JSON: %s" % e)
    return hopf_from_json(doc, label=os.path.basename(str(path)))
