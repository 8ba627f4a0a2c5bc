from fractions import Fraction

import pytest

import leftstable as ls


def test_extremal_disc_48_13():
    assert ls.format_set_literal(ls.construct_extremal_disc(48, 13)) == "0,11-13,22-26,33-48"
    assert ls.h_disc(48, 13) == (4, 3)
    assert ls.h_disc(48, 12) == (5, 3)


def test_sumset_and_stability():
    assert ls.sumset([0, 1], [0, 2]) == [0, 1, 2, 3]
    assert ls.is_left_stable([0, 3, 4])
    assert not ls.is_left_stable([0, 1, 4])
    assert ls.stability_witness([0, 1, 4])[2] == 2
    with pytest.raises(ValueError, match="not anchored"):
        ls.is_left_stable([1, 2])


def test_remark_sets():
    assert ls.verify_remark_sets()["RESULT"] == "PASS"


def test_freiman():
    c = ls.classify([0, 2, 4, 5, 6, 8])
    assert c["category"] == "CRITICAL_NA"
    assert c["sumset_size"] == 14
    d = ls.decompose_critical([0, 2, 4, 5, 6, 8])
    assert d["interval"] == (4, 6)
    assert ls.grynkiewicz_params(100, 4)[0] == 10


def test_census():
    assert ls.theorem_class(4) == [[0, 3, 4]]
    assert ls.count_left_stable(20) == 2616
    r = ls.sharpness_census(9, 4)
    assert r["achieved_max"] == 3 and r["bound"] == 2


def test_continuum():
    assert ls.h_cont(Fraction(1, 2)) == Fraction(1, 6)
    assert ls.h_cont("3/5", 1) == Fraction(7, 30)
    a = ls.construct_extremal_cont(Fraction(3, 5))
    assert a == [(0, 0), (Fraction(11, 30), Fraction(3, 5)), (Fraction(11, 15), 1)]
    assert ls.measure(a) == Fraction(1, 2)
    assert ls.is_left_stable_cont(a)
    assert ls.ruzsa_check([(0, 1), (2, 3)], [(0, "1/2")])["RESULT"] == "PASS"


def test_envelope():
    glued = [(0, 0), ("11/30", "3/5"), ("11/15", "34/15"), ("12/5", "79/30"), (3, 3)]
    assert ls.critical_envelope_check(glued)["PASSING_B"] == "1"
    bent = [(0, 0), ("1/4", "1/2"), ("3/4", "34/15"), ("12/5", "79/30"), (3, 3)]
    r = ls.envelope_check_at(bent, 1)
    assert not r["pass"] and r["piece"] == "head" and r["breakpoint"] == Fraction(1, 2)
