import pytest
from hypothesis import given, settings, strategies as st

from algebroid.exactla import Mat
from algebroid.bialgebroid import (LeftBialgebroid, AxiomFailure, sigma, sigma_inv, chi, chi_inv,
                                   STAR_A, UPPER_STAR_A, A_UPPER_STAR)
from algebroid.constructions import lu_algebroid
from algebroid.algebra import base_field_algebra
from algebroid.exactla import QQ
from _corpus import get, HOPF


@pytest.mark.parametrize("name", HOPF)
def test_both_sides_verify(name):
    h = get(name)
    assert h.left.axiom_report().ok
    assert h.right.axiom_report().ok


def test_corrupted_source_fails():
    h = get("lu-ut2-q")
    l = h.left
    bad = Mat(l.F, l.s.rows, l.s.cols, [dict(c) for c in l.s.columns])
    bad.columns[0] = {}
    broken = LeftBialgebroid(l.A, l.B, bad, l.t, l.gamma_lift, l.pi)
    rep = broken.axiom_report()
    assert not rep.ok
    assert rep.first_failure() is not None
    with pytest.raises(AxiomFailure):
        broken.verify()


def test_trivial_algebroid():
    h = lu_algebroid(base_field_algebra(QQ))
    assert h.A.dim == 1
    assert h.S == Mat.identity(QQ, 1)


def _random_functional(D, F, rnd):
    phi = {}
    for j in range(D.dim):
        F.axpy(phi, F(rnd.randint(-5, 5)), D.basis(j))
    return {k: v for k, v in phi.items() if v}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["qc2", "sweedler-h4", "lu-ut2-q"]), st.randoms(use_true_random=False))
def test_sigma_chi_invert_on_random_functionals(name, rnd):
    h = get(name)
    F = h.F
    phi = _random_functional(h.dual(STAR_A), F, rnd)
    s = sigma(h.left, h.right, phi)
    assert h.dual(UPPER_STAR_A).contains(s)
    assert sigma_inv(h.left, h.right, s) == phi
    psi = _random_functional(h.dual(A_UPPER_STAR), F, rnd)
    assert chi_inv(h.left, h.right, chi(h.left, h.right, psi)) == psi
