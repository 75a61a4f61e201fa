from fractions import Fraction
from math import comb

import pytest

import cfdissect as cf


def test_membership_examples():
    assert cf.is_omega("xxpzppzpyxpzzppzzpyy")
    assert cf.is_enw("xpzpxpzppzzpyy")
    assert not cf.is_balanced("xpzpxpzppzzpyy")
    assert cf.is_balanced("pzppzp")
    assert not cf.is_balanced("pzppzp", strict=True)
    assert cf.recognize("enw", "xpzppzpy")
    assert not cf.recognize("balanced", "xpzpxpzppzzpyy")


def test_bad_letter_raises_value_error():
    with pytest.raises(ValueError):
        cf.occur("xpqp", "p")
    with pytest.raises(cf.AlphabetError):
        cf.height("abc")


def test_word_primitives():
    assert cf.occur("zzz", "zz") == 2
    assert cf.replace("pzzppzzp", "pzzp", "pzp") == "pzppzzp"
    assert cf.height("xxpyxxxp") == 3
    assert cf.pi("xpzzppzpy") == 3


def test_construct_and_count():
    for n in range(2, 200):
        w = cf.construct_omega(n)
        assert cf.is_omega(w) and cf.pi(w) == n
    assert sorted(cf.enumerate_omega(4)) == ["xpzzppzzpy", "xxpzppzpyxpzppzpyy"]
    expected = sum(comb(2**h, 20 - 2**h) for h in cf.feasible_heights(20))
    assert cf.omega_count(20) == expected == len(cf.enumerate_omega(20))
    assert len(cf.enumerate_enw(4)) == 80
    with pytest.raises(cf.PreconditionError):
        cf.construct_omega(1)


def test_big_lengths():
    assert cf.feasible_heights(2**100) == [99, 100]
    assert cf.image_membership(2**200, 2) == (200 % 4 != 3)


def test_witness():
    assert cf.witness(4, 1) == "xxpzppzpyxpzppzpyy"
    assert cf.witness(5, 2) is None


def test_dissect():
    r = cf.dissect("pow2", 2, 2**41)
    assert (r["in_count"], r["out_count"]) == (30, 10)
    assert r["cap"] == 2**41
    assert r["samples_out"][:3] == [8, 128, 2048]
    r = cf.dissect([4, 8, 16, 32, 64, 128], Fraction(2), 128)
    assert r["in_count"] + r["out_count"] == 6
    assert cf.alpha_for("16/15") == 1
    with pytest.raises(cf.GrowthCheckFailed):
        cf.dissect("pow3", 2, 3**10)
