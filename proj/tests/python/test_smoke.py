"""End-to-end checks of the python module against known exact values."""

import math

import pytest

import semispline as ss


def test_counting():
    assert ss.count_factorizations([1, 1, 1], 200) == 20301
    # 43 is the largest non-representable value for (6, 9, 20)
    assert ss.count_factorizations([6, 9, 20], 43) == 0
    assert ss.count_factorizations([6, 9, 20], 44) > 0
    fs = ss.enumerate_factorizations([6, 9, 20], 100)
    assert len(fs) == ss.count_factorizations([6, 9, 20], 100)
    assert all(6 * a + 9 * b + 20 * c == 100 for a, b, c in fs)


def test_spline_exact_values():
    knots = ["1/20", "1/9", "1/6"]
    assert ss.spline_eval(knots, "1/9") == "120/7"
    assert ss.spline_eval(knots, "1/9", use_explicit=True) == "120/7"
    assert ss.spline_eval(knots, "1/6") == "0"  # zero at the right endpoint

    pp = ss.spline_expand(knots)
    assert pp["kind"] == "rational"
    assert pp["breakpoints"] == ["1/20", "1/9", "1/6"]
    assert pp["pieces"] == [["-1080/77", "21600/77"], ["360/7", "-2160/7"]]

    assert ss.spline_integrate(knots) == "1"
    assert ss.spline_moment(knots, 1) == "59/540"
    assert ss.spline_mode(knots) == "1/9"
    assert ss.spline_integrate([6, 9, 20], "15/2", 15) == "69/88"


def test_spline_quantile_closed_form():
    q = ss.spline_quantile(["1/2", "1/2", "5/9"], 0.5)
    assert abs(q - (20 - math.sqrt(2)) / 36) < 1e-9


def test_partition_counts():
    assert ss.vpf([2, 3, 3], [3, 4, 6], 625, 1000) == 42
    assert ss.vpf([2, 3, 3, 1, 1], [3, 4, 6, 2, 3], 25, 40) == 45
    assert ss.truncated_power([2, 3, 3], [3, 4, 6], 25, 40) == "5/3"
    assert ss.vpf_approx([2, 3, 3], [3, 4, 6], 125, 200) == "25/3"
    # parity obstruction: odd lengths are never realized at even n
    assert ss.length_count([2, 3, 5, 8], [2, 1, 1, 2], 100, 51) == 0
    assert ss.weighted_lengths([2, 3, 5, 8], [2, 1, 1, 2], 9) == {"3": 1, "5": 1, "7": 1}


def test_lattice_predicates():
    assert ss.is_unimodular([2, 3, 3], [3, 4, 6])
    assert not ss.is_unimodular([2, 1, 1, 2], [2, 3, 5, 8])
    assert ss.delta_gcd([6, 9, 20]) == 1
    assert ss.is_primitive_vector([6, 9, 20])
    assert ss.e1(2) == 1.0
    assert ss.e2(3) == 1.0


def test_bound_reports():
    rep = ss.check_theorem_b([2, 3, 3], [3, 4, 6], 625, 1000)
    assert rep["pass"] and rep["exact"]
    assert rep["bound"] == 1.0
    assert abs(rep["lhs"] - 1 / 3) < 1e-12
    assert rep["slack"] >= 0.6

    rep_a = ss.check_theorem_a([6, 9, 20], [1, 1, 1], 500)
    assert rep_a["pass"]

    rep_c = ss.check_theorem_c([6, 9, 20], [1, 1, 1], 500, ("1/10", "3/20"), "power")
    assert rep_c["pass"]

    with pytest.raises(ss.DomainError):
        ss.check_theorem_b([2, 1, 1, 2], [2, 3, 5, 8], 10, 20)  # not unimodular


def test_summary_and_window_statistic():
    s = ss.summary([6, 9, 20], [3, 5, 10], 2000)
    assert s["total"] == "1893"
    assert s["actual"]["median"] == 1032.0
    assert s["actual"]["mode"] == 1000.0
    assert abs(s["predicted"]["mean"] - 2000 * 14 / 27) < 1e-9

    r = ss.f_statistic([1, 1, 1], [6, 9, 20], 200, "indicator", ("15/2", "15"))
    assert abs(r["actual"] - 15847 / 20301) < 1e-12
    assert abs(r["predicted"] - 69 / 88) < 1e-9
    assert abs(r["difference"] - (r["actual"] - r["predicted"])) < 1e-15


def test_dot_plot_rows():
    d = ss.dot_plot([2, 3, 5, 8], [2, 1, 1, 2], 9)
    assert d["total"] == "3" and not d["empty"]
    rows = {r["ell"]: r for r in d["rows"]}
    assert sorted(rows) == [3, 4, 5, 6, 7]  # zero rows kept
    assert rows[3]["multiplicity"] == "1" and rows[3]["position"] == "1/3"
    assert rows[4]["multiplicity"] == "0"
    assert rows[7]["height"] == "3"
    trimmed = ss.dot_plot([2, 3, 5, 8], [2, 1, 1, 2], 9, include_zeros=False)
    assert [r["ell"] for r in trimmed["rows"]] == [3, 5, 7]


def test_histogram_masses():
    h = ss.histogram([6, 9, 20], [1.0, 1.0, 1.0], 500, 10)
    assert h["total"] == sum(b["count"] for b in h["bins"])
    area = sum(b["density"] * (b["hi"] - b["lo"]) for b in h["bins"])
    assert abs(area - 1.0) < 1e-9


def test_domain_errors():
    with pytest.raises(ss.DomainError):
        ss.spline_eval(["1/2", "1/2"], "1/2")  # all knots equal
    with pytest.raises(ss.DomainError):
        ss.count_factorizations([0, 3], 10)  # nonpositive generator
