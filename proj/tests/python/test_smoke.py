from fractions import Fraction
from math import factorial

import pytest

import exotic_springer as es


def test_bipartitions_and_counts():
    assert len(es.enumerate_bipartitions(3)) == 10
    for n in range(1, 5):
        total = sum(len(es.enumerate_syb(bp)) ** 2 for bp in es.enumerate_bipartitions(n))
        assert total == 2**n * factorial(n) == len(es.enumerate_weyl(n))


def test_bipartition_parsing():
    bp = es.Bipartition("3,1|2,2,1")
    assert str(bp.mu) == "3,1"
    assert es.b_dim(bp) == 15
    assert str(es.rho(bp)) == "5,3,3,2,1,1"
    with pytest.raises(ValueError):
        es.Bipartition("1,2|")


def test_line_prediction_matches_measurement():
    bp = es.Bipartition("2,2,1|2,2")
    for beta2, expected in [(-3, "2,1,1|2,2"), (4, "2,2,1|2,1")]:
        pred = es.predict_line(bp, [1, 2], [3, beta2])
        meas = es.measure_line(bp, [1, 2], [3, beta2])
        assert str(pred["etype_after"]) == expected
        assert pred == meas


def test_fraction_coefficients():
    bp = es.Bipartition("1|1")
    pred = es.predict_line(bp, [Fraction(1, 3)], [Fraction(-2, 5)])
    assert pred == es.measure_line(bp, ["1/3"], ["-2/5"])


def test_sampled_flag_reads_back():
    bp = es.Bipartition("1|1")
    t = es.StandardBitableau([[1]], [[2]])
    assert es.sample_flag_tableau(bp, t, seed=3) == t


def test_rs_table_n2():
    rows = es.rs_table(2)
    table = {row["w"].display(): (str(row["T"]), str(row["Tprime"])) for row in rows}
    assert table["12"] == ("21;-", "21;-")
    assert table["2̄1"] == ("1;2", "2;1")
    assert table["1̄2̄"] == ("-;1/2", "-;1/2")
    assert len(table) == 8
    assert {str(w) for w in es.naive_disagreements(2)} == {"2 1", "-2 -1", "1 -2", "-1 -2"}


def test_naive_rs_and_weyl():
    p, q = es.naive_rs(es.SignedPerm.parse("2 -6 -3 1 8 5 4 -7"))
    assert str(p) == "41/52/8;37/6"
    assert str(q) == "51/64/7;28/3"
    w = es.SignedPerm([-2, 1])
    assert es.length(w) == es.length(w.inverse()) == 2
    assert es.embed_iota(es.SignedPerm([-1, 2])) == [1, 3, 2, 4]
