import random

import pytest
from hypothesis import given, settings, strategies as st

from algebroid.exactla import Mat
from algebroid.integrals import (integral_space, defining_residual, scholium_check,
                                 hopf_module_on_dual, fundamental_iso, INTEGRAL_KINDS, L_IN, R_IN)
from _corpus import get, HOPF, SMALL

# dimensions of (L_in, R_in, L_on_sstar, L_on_starA, R_on_star, R_on_lower), from the solver
DIMS = {
    "qc2": (1, 1, 1, 1, 1, 1),
    "sweedler-h4": (1, 1, 1, 1, 1, 1),
    "f5c5": (1, 1, 1, 1, 1, 1),
    "lu-dualnumbers-q": (2, 2, 2, 2, 2, 2),
    "lu-ut2-q": (1, 1, 3, 3, 3, 3),
    "lu-m2-q": (4, 4, 4, 4, 4, 4),
    "lu-m2-f5": (4, 4, 4, 4, 4, 4),
}


@pytest.mark.parametrize("name", HOPF)
def test_dimensions(name):
    h = get(name)
    assert tuple(integral_space(h, w).dim for w in INTEGRAL_KINDS) == DIMS[name]


def test_qc2_integral_line():
    h = get("qc2")
    F = h.F
    assert integral_space(h, L_IN).contains({0: F.one, 1: F.one})
    assert not integral_space(h, L_IN).contains({0: F.one})


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(HOPF), st.sampled_from(INTEGRAL_KINDS), st.integers(0, 10 ** 6))
def test_random_elements_satisfy_defining_system(name, which, seed):
    h = get(name)
    sp = integral_space(h, which)
    v = sp.random_element(random.Random(seed))
    assert all(not c for c in defining_residual(h, which, v).values())


@pytest.mark.parametrize("name", HOPF)
def test_antipode_maps_left_to_right_integrals(name):
    h = get(name)
    R = integral_space(h, R_IN)
    for l in integral_space(h, L_IN).elements():
        assert R.contains(h.S.apply(l))


@pytest.mark.parametrize("name", SMALL)
def test_alternative_characterizations_small_sample(name):
    assert scholium_check(get(name), samples=10, seed=1).ok


@pytest.mark.parametrize("name", HOPF)
def test_hopf_module_projection(name):
    h = get(name)
    hm = hopf_module_on_dual(h)
    assert hm.report.ok
    E = hm.E
    assert E @ E == E


@pytest.mark.parametrize("name", HOPF)
def test_fundamental_iso_inverses(name):
    h = get(name)
    fi = fundamental_iso(h)
    assert fi.alpha_L @ fi.alpha_L_inv == Mat.identity(h.F, fi.alpha_L.rows)
    assert fi.alpha_L_inv @ fi.alpha_L == Mat.identity(h.F, fi.alpha_L.cols)
    assert fi.alpha_R @ fi.alpha_R_inv == Mat.identity(h.F, fi.alpha_R.rows)
    assert fi.alpha_R_inv @ fi.alpha_R == Mat.identity(h.F, fi.alpha_R.cols)
