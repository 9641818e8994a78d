import pytest

from maxmatch.opt_trees import (
    GADGET_KINDS,
    consistency_report,
    extremal_search,
    gadget_value,
    opt_tree_count,
    opt_tree_record,
)

BASE_VALUES = {
    "CL": 11, "C": 8, "CP3": 19, "Cstar": 5,
    "CF": 30, "CFminusL": 21, "CFL": 21,
}


@pytest.mark.parametrize("kind", GADGET_KINDS)
def test_base_values(kind):
    assert gadget_value(kind, 1) == BASE_VALUES[kind]


def test_cl_second_and_third():
    assert gadget_value("CL", 2) == 112
    assert gadget_value("CL", 3) == 11 * 112 - 9 * 11  # 1133


def test_gadget_errors():
    with pytest.raises(ValueError):
        gadget_value("CL", 0)
    with pytest.raises(ValueError):
        gadget_value("nope", 1)


def test_recurrence_identities_and_monotonicity():
    for k in range(3, 201):
        assert gadget_value("CL", k) == 11 * gadget_value("CL", k - 1) - 9 * gadget_value("CL", k - 2)
    for k in range(2, 201):
        assert gadget_value("C", k) == 5 * gadget_value("CL", k - 1) + 3 * gadget_value("C", k - 1)
        assert gadget_value("CP3", k) == 13 * gadget_value("CL", k - 1) + 6 * gadget_value("C", k - 1)
        assert gadget_value("Cstar", k) == 5 * gadget_value("C", k - 1) + 3 * gadget_value("Cstar", k - 1)
        assert gadget_value("CF", k) == 3 * gadget_value("C", k) + 6 * gadget_value("CL", k - 1)
        assert gadget_value("CFminusL", k) == 5 * gadget_value("CF", k - 1) + 3 * gadget_value("CFminusL", k - 1)
        assert gadget_value("CFL", k) == 5 * gadget_value("CF", k - 1) + 3 * gadget_value("CFL", k - 1)
    for kind in GADGET_KINDS:
        values = [gadget_value(kind, k) for k in range(1, 201)]
        assert all(v > 0 for v in values)
        assert all(a < b for a, b in zip(values, values[1:]))


PRINTED = {
    17: 216, 24: 2187, 31: 22140, 38: 224100,
    12: 41, 19: 418,
    9: 15, 16: 153, 23: 1560, 30: 15807,
    27: 5832, 41: 597861, 48: 6052320, 55: 61268400,
    62: 620136000, 69: 6276690000,
    6: 5, 10: 21, 13: 56, 20: 571, 34: 59049,
    72: 16915082240, 76: 63503190000,
    1: 1, 2: 1, 3: 1, 7: 8, 8: 11,
}


@pytest.mark.parametrize("n,value", sorted(PRINTED.items()))
def test_printed_values(n, value):
    assert opt_tree_count(n) == value


def test_record_fields():
    rec = opt_tree_record(72)
    assert rec.residue == 72 % 7
    assert rec.regime == "closed-form-high"
    assert opt_tree_record(6).regime == "exceptional"
    assert opt_tree_record(17).regime == "table"


def test_invalid_order():
    with pytest.raises(ValueError):
        opt_tree_count(0)


def test_search_n4():
    best, witnesses = extremal_search(4)
    assert best == 3
    assert len(witnesses) == 1
    assert witnesses[0].degree(0) == 3 or any(
        witnesses[0].degree(v) == 3 for v in range(4))  # the star wins


def test_search_n6_two_witnesses():
    best, witnesses = extremal_search(6)
    assert best == 5
    assert len(witnesses) == 2


@pytest.mark.parametrize("n,value", [(10, 21), (13, 56)])
def test_search_matches_exceptional(n, value):
    assert extremal_search(n)[0] == value


def test_consistency_report_renders():
    lines = consistency_report(9)
    assert [ln.n for ln in lines] == list(range(4, 10))
    assert all(ln.match for ln in lines)
    assert lines[-1].render() == "n=9: MATCH 15"
