import pytest

from algebroid.maschke import maschke_report, dual_maschke_report
from _corpus import get, HOPF

MASCHKE = {"qc2": True, "sweedler-h4": False, "f5c5": False, "lu-dualnumbers-q": False,
           "lu-ut2-q": False, "lu-m2-q": True, "lu-m2-f5": True}
DUAL = {"qc2": True, "sweedler-h4": False, "f5c5": True, "lu-dualnumbers-q": True,
        "lu-ut2-q": True, "lu-m2-q": True, "lu-m2-f5": True}


@pytest.mark.parametrize("name", HOPF)
def test_maschke(name):
    rep = maschke_report(get(name))
    assert len(rep.conditions) == 12
    assert {c.verdict for c in rep.conditions} == {MASCHKE[name]}
    assert rep.to_json()["all_agree"]


@pytest.mark.parametrize("name", HOPF)
def test_dual_maschke(name):
    rep = dual_maschke_report(get(name))
    assert {c.verdict for c in rep.conditions} == {DUAL[name]}


def test_qc2_normalized_integral():
    rep = maschke_report(get("qc2")).to_json()
    cert = [c for c in rep["conditions"] if c["condition_id"] == "3.a"][0]["certificate"]
    assert cert["normalized_left_integral"] == ["1/2", "1/2"]
