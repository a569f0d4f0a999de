"""Acceptance criteria 1-8.  Exact arithmetic, so every comparison is equality."""
import io
import time

import pytest

from algebroid.exactla import QQ, PrimeField, Mat
from algebroid.algebra import upper_triangular, matrix_algebra, truncated_polynomials
from algebroid.constructions import lu_algebroid
from algebroid.hopfalgebroid import verify_derived_identities
from algebroid.integrals import (integral_space, scholium_check, hopf_module_on_dual, fundamental_iso,
                                 L_ON_SSTAR)
from algebroid.maschke import maschke_report, dual_maschke_report
from algebroid.frobenius import frobenius_decide, qf_decide, qf_report, EXTENSIONS, LEFT_QF, RIGHT_QF
from algebroid.cli import run
from conftest import ACCEPTANCE
from _corpus import get, HOPF


def record(n, desc, fn):
    try:
        fn()
    except BaseException:
        ACCEPTANCE[n] = (False, desc)
        print("criterion %d: FAIL  %s" % (n, desc))
        raise
    ACCEPTANCE[n] = (True, desc)
    print("criterion %d: PASS  %s" % (n, desc))


def test_criterion_1_axiom_suite():
    def body():
        for B in (upper_triangular(QQ, 2), matrix_algebra(QQ, 2), matrix_algebra(PrimeField(5), 2),
                  truncated_polynomials(QQ, 2)):
            t = time.time()
            h = lu_algebroid(B)
            assert h.axioms.ok
            assert all(i["passed"] is not False for i in h.axioms.items)
            assert time.time() - t < 30
    record(1, "Lu(B) passes all bialgebroid and Hopf algebroid axioms", body)


def test_criterion_2_derived_identities():
    def body():
        for name in HOPF:
            rep = verify_derived_identities(get(name))
            assert rep.ok, rep.first_failure()
    record(2, "derived identities hold on every corpus input", body)


def test_criterion_3_maschke_equivalence():
    def body():
        pos = {"qc2", "lu-m2-q", "lu-m2-f5"}
        neg = {"sweedler-h4", "f5c5", "lu-ut2-q"}
        for name in HOPF:
            rep = maschke_report(get(name))
            assert len(rep.conditions) == 12
            assert len({c.verdict for c in rep.conditions}) == 1
            if name in pos:
                assert rep.verdict is True
            if name in neg:
                assert rep.verdict is False
            drep = dual_maschke_report(get(name))
            assert len({c.verdict for c in drep.conditions}) == 1
    record(3, "Maschke and dual Maschke conditions agree; expected positives and negatives", body)


def test_criterion_4_fundamental_iso():
    def body():
        for name in HOPF:
            h = get(name)
            F = h.F
            fi = fundamental_iso(h)
            for M, N in ((fi.alpha_L, fi.alpha_L_inv), (fi.alpha_R, fi.alpha_R_inv)):
                assert M.rows == M.cols
                assert M @ N == Mat.identity(F, M.rows)
                assert N @ M == Mat.identity(F, M.cols)
            hm = hopf_module_on_dual(h)
            assert hm.E @ hm.E == hm.E
            checks = {i["check"]: i["passed"] for i in hm.report.items}
            assert checks["tau_L.A_linear"] and checks["image E = L(A^*)"] and checks["E = id on L(A^*)"]
    record(4, "alpha_L, alpha_R bijective with verified inverses; E idempotent onto L(A^*)", body)


def test_criterion_5_frobenius():
    def body():
        for name in ("qc2", "sweedler-h4", "lu-m2-q"):
            h = get(name)
            v = frobenius_decide(h)
            assert v.frobenius
            assert integral_space(h, L_ON_SSTAR).contains(v.lambda_star)
            assert set(v.systems) == set(EXTENSIONS)
            for s in v.systems.values():
                assert s.checks and all(s.checks.values())
            assert v.rank_one["isomorphism"]
    record(5, "Frobenius YES with verified systems and rank-one freeness", body)


def test_criterion_6_qf():
    def body():
        rep = qf_report(get("lu-ut2-q"))
        assert rep["leftQF"] is False and rep["rightQF"] is False
        rep = qf_report(get("lu-m2-q"))
        assert rep["leftQF"] is True and rep["rightQF"] is True
        for name in HOPF:
            for side in (LEFT_QF, RIGHT_QF):
                for ext in EXTENSIONS:
                    v = qf_decide(get(name), side, ext)
                    assert v.theorem_result == v.lemma_result
    record(6, "Lu(UT2) neither left nor right QF, Lu(M2) QF; span and lemma criteria agree", body)


def test_criterion_7_integral_characterizations():
    def body():
        for name in HOPF:
            rep = scholium_check(get(name), samples=100, seed=0)
            assert rep.ok, rep.first_failure()
    record(7, "alternative integral characterizations hold on 100 random elements per space", body)


def test_criterion_8_serialization(tmp_path):
    def body():
        def go(tag):
            outs = []
            d = tmp_path / tag
            d.mkdir()
            for name in ("lu-ut2-q", "qc2", "lu-m2-q"):
                p = d / (name + ".json")
                assert run(["example", name, "--emit", str(p)], io.StringIO(), io.StringIO()) == 0
                for cmd in (["check"], ["integrals"], ["maschke"], ["dual-maschke"],
                            ["frobenius", "--seed", "5"], ["qf"]):
                    buf = io.StringIO()
                    assert run([cmd[0], str(p)] + cmd[1:], buf, io.StringIO()) == 0
                    outs.append(buf.getvalue())
                outs.append(p.read_bytes())
            return outs
        assert go("a") == go("b")
    record(8, "emit, load and re-run give byte-identical reports", body)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
