import pytest

from algebroid.exactla import QQ, PrimeField, Equations
from algebroid.algebra import matrix_algebra, upper_triangular, truncated_polynomials, base_field_algebra
from algebroid.constructions import builtin, catalog_names, lu_algebroid, UnknownName
from algebroid.maschke import maschke_report
from _corpus import get


def test_catalog():
    assert catalog_names() == sorted(["lu-ut2-q", "lu-m2-q", "lu-m2-f5", "lu-dualnumbers-q", "qc2",
                                      "f5c5", "sweedler-h4", "ut2-q", "m2-q"])
    assert builtin("ut2-q").dim == 3
    assert builtin("m2-q").dim == 4
    with pytest.raises(UnknownName):
        builtin("nope")


@pytest.mark.parametrize("name,dim", [("lu-ut2-q", 9), ("lu-m2-q", 16), ("lu-m2-f5", 16),
                                      ("lu-dualnumbers-q", 4), ("qc2", 2), ("f5c5", 5), ("sweedler-h4", 4)])
def test_dims(name, dim):
    assert get(name).A.dim == dim


def test_lu_over_field_is_trivial():
    h = lu_algebroid(base_field_algebra(PrimeField(3)))
    assert h.A.dim == 1 and h.axioms.ok


def separable(B):
    """Direct solve for e in B (x) B with m(e) = 1 and b e = e b."""
    F, m = B.F, B.dim
    eq = Equations(F, m * m)
    for i in range(m):
        for j in range(m):
            for k, c in B.mult[i][j].items():
                eq.add_form(("mul", k), {i * m + j: c})
    for k, c in B.unit.items():
        eq.set_rhs(("mul", k), c)
    for b in range(m):
        for i in range(m):
            for j in range(m):
                for k, c in B.mult[b][i].items():
                    eq.add_form(("comm", b, k, j), {i * m + j: c})
                for k, c in B.mult[j][b].items():
                    eq.add_form(("comm", b, i, k), {i * m + j: F.neg(c)})
    return eq.solve() is not None


@pytest.mark.parametrize("B,name,expected", [(matrix_algebra(QQ, 2), "lu-m2-q", True),
                                             (upper_triangular(QQ, 2), "lu-ut2-q", False),
                                             (truncated_polynomials(QQ, 2), "lu-dualnumbers-q", False)])
def test_lu_maschke_iff_base_separable(B, name, expected):
    assert separable(B) == expected
    assert maschke_report(get(name)).verdict == expected
