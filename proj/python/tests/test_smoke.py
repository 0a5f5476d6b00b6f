import pytest

import plsquare as pls


def test_validate_and_profile():
    p = pls.validate([(1, 1, 1), (1, 2, 2), (2, 1, 2)])
    assert p == [(1, 1, 1), (1, 2, 2), (2, 1, 2)]
    prof = pls.parameters_of(p)
    assert prof["row_params"] == [2, 1]
    assert prof["sym_params"] == [1, 2]
    assert prof["volume"] == 3


def test_validation_error():
    with pytest.raises(pls.ValidationError):
        pls.validate([(1, 1, 1), (1, 2, 1)])
    assert issubclass(pls.ValidationError, ValueError)


def test_conjugate_and_normalize():
    assert pls.conjugate([(1, 2, 3)], "scr") == [(3, 2, 1)]
    assert pls.normalize([(5, 7, 9)]) == [(1, 1, 1)]


def test_feasibility_reports():
    ok = pls.check_construction([2, 1], [2, 1], 2)
    assert ok and ok.feasible
    bad = pls.check_sizes(2, 2, 2, 5)
    assert not bad
    assert bad.violated() == ["volume-upper"]
    assert "v=5 > rc=4" in str(bad)
    assert pls.dominance_check([3, 3, 3, 1], [4, 4, 1, 1]) == (False, 3, 2)


def test_builders():
    p = pls.build_theorem([1, 3, 2], [2, 1, 3], 4)
    prof = pls.parameters_of(p)
    assert prof["row_params"] == [1, 3, 2]
    assert prof["col_params"] == [2, 1, 3]
    assert prof["s"] == 4
    assert pls.parameters_of(pls.build_corollary(3, 3, 2, 6))["volume"] == 6
    with pytest.raises(pls.InfeasibleError):
        pls.build_corollary(2, 2, 2, 5)


def test_fill_and_split():
    filled = pls.fill_symbols([(1, 1), (1, 2), (2, 1)])
    assert filled == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert pls.split_symbols(filled, 3) == [(1, 1, 2), (1, 2, 3), (2, 1, 1)]


def test_oracle():
    assert pls.exists_full(r=2, c=2, s=2, v=5) is None
    w = pls.exists_full(row_params=[2, 1], col_params=[2, 1], sym_params=[2, 1])
    assert pls.parameters_of(w)["volume"] == 3
    with pytest.raises(pls.BudgetExceeded):
        pls.exists_full(r=3, c=3, s=3, v=9, max_nodes=10)
    assert len(pls.enumerate(2, 2, 2, 4)) == 21


def test_documents():
    p = [(1, 1, 1), (2, 2, 1)]
    text = pls.to_document(p)
    assert pls.parse_document(text) == p
    assert pls.to_grid(p) == "1 .\n. 1\n"
    with pytest.raises(pls.FormatError):
        pls.parse_document("{")
