"""Built-in examples: Lu's Hopf algebroid over a finite-dimensional algebra,
Hopf algebras viewed as Hopf algebroids over the ground field, and the
named catalog."""
import json
import os

from .exactla import QQ, PrimeField, Mat
from .algebra import (opposite, tensor_algebras, elem_tensor, base_field_algebra,
                      matrix_algebra, upper_triangular, truncated_polynomials,
                      group_algebra_cyclic)
from .bialgebroid import mk_left_bialgebroid, mk_right_bialgebroid
from .hopfalgebroid import mk_hopf_algebroid
from .serialization import hopf_from_json

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


class UnknownName(KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__("unknown example %r (known: %s)" % (name, ", ".join(sorted(CATALOG))))


def lu_algebroid(B, label=None):
    """A = B (x) B^op with the flip as antipode."""
    F = B.F
    m = B.dim
    A = tensor_algebras(B, opposite(B))
    n = A.dim
    one = B.unit
    sL = Mat(F, n, m, [elem_tensor(F, {i: F.one}, one, m) for i in range(m)])
    tL = Mat(F, n, m, [elem_tensor(F, one, {i: F.one}, m) for i in range(m)])
    gcols, picols, scols = [], [], []
    for i in range(m):
        for k in range(m):
            x = elem_tensor(F, {i: F.one}, one, m)
            y = elem_tensor(F, one, {k: F.one}, m)
            gcols.append(elem_tensor(F, x, y, n))
            picols.append(B.mul({i: F.one}, {k: F.one}))
            scols.append({k * m + i: F.one})
    g = Mat(F, n * n, n, gcols)
    piL = Mat(F, m, n, picols)
    S = Mat(F, n, n, scols)
    # right side: s_R = S s_L, t_R = S t_L, same lift, pi_R = pi_L S
    label = label or "Lu algebroid"
    left = mk_left_bialgebroid(A, B, sL, tL, g, piL, label + " (left)")
    right = mk_right_bialgebroid(A, opposite(B), S @ sL, S @ tL, g, piL @ S, label + " (right)")
    return mk_hopf_algebroid(left, right, S, label)


def hopf_algebra_embed(H, gamma, eps, S, label="Hopf algebra"):
    """A Hopf algebra (H, gamma, eps, S) as a Hopf algebroid with L = R = k."""
    F = H.F
    k = base_field_algebra(F)
    unit = Mat(F, H.dim, 1, [dict(H.unit)])
    left = mk_left_bialgebroid(H, k, unit, unit, gamma, eps, label + " (left)")
    right = mk_right_bialgebroid(H, k, unit, unit, gamma, eps, label + " (right)")
    return mk_hopf_algebroid(left, right, S, label)


def group_hopf(F, n, label=None):
    """F C_n with g grouplike."""
    H = group_algebra_cyclic(F, n)
    gamma = Mat(F, n * n, n, [{i * n + i: F.one} for i in range(n)])
    eps = Mat(F, 1, n, [{0: F.one} for _ in range(n)])
    S = Mat(F, n, n, [{(-i) % n: F.one} for i in range(n)])
    return hopf_algebra_embed(H, gamma, eps, S, label or "%s C%d" % (F.name, n))


def sweedler_h4():
    with open(os.path.join(DATA_DIR, "sweedler_h4.json")) as f:
        doc = json.load(f)
    h = hopf_from_json(doc, label="Sweedler H4")
    return mk_hopf_algebroid(h.left.verify(), h.right.verify(), h.S, h.label)


CATALOG = {
    "lu-ut2-q": lambda: lu_algebroid(upper_triangular(QQ, 2), "Lu(UT(2,Q))"),
    "lu-m2-q": lambda: lu_algebroid(matrix_algebra(QQ, 2), "Lu(M2(Q))"),
    "lu-m2-f5": lambda: lu_algebroid(matrix_algebra(PrimeField(5), 2), "Lu(M2(GF(5)))"),
    "lu-dualnumbers-q": lambda: lu_algebroid(truncated_polynomials(QQ, 2), "Lu(Q[x]/x^2)"),
    "qc2": lambda: group_hopf(QQ, 2, "QC2"),
    "f5c5": lambda: group_hopf(PrimeField(5), 5, "GF(5)C5"),
    "sweedler-h4": sweedler_h4,
    "ut2-q": lambda: upper_triangular(QQ, 2),
    "m2-q": lambda: matrix_algebra(QQ, 2),
}


def builtin(name):
    if name not in CATALOG:
        raise UnknownName(name)
    return CATALOG[name]()


def catalog_names():
    return sorted(CATALOG)
