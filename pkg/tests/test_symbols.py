import pytest
from hypothesis import given

from paper_tables import S40_CHAIN
from strategies import symbols
from theta_symbols.partitions import BiPartition, enumerate_bipartitions
from theta_symbols.symbols import (
    GroupTag,
    Symbol,
    enumerate_family,
    family_of,
    group_of,
    linear_cmp,
    parse_group,
    parse_symbol,
    reduce,
    shift_rows,
    sorted_family,
    special_closure,
    symbols_of,
    upsilon,
    upsilon_inv,
    upsilon_rows,
    with_lengths,
)


def test_rank_defect_of_known_symbol():
    s = parse_symbol("9,4,2,1;5,4,2,0")
    assert (s.rank, s.defect) == (15, 0)
    assert str(upsilon(s)) == "6,2,1,1|2,2,1"


def test_upsilon_of_example_symbol():
    s = parse_symbol("4,1;3,1")
    assert upsilon(s) == BiPartition([3, 1], [2, 1])
    assert upsilon_inv(BiPartition([3, 1], [2, 1]), 0) == s


def test_reduction_undoes_a_shift():
    s = parse_symbol("2,0;1")
    top, bottom = shift_rows(s.top, s.bottom)
    assert (top, bottom) == ((3, 1, 0), (2, 0))
    assert reduce(top, bottom) == s
    assert reduce((3, 1, 0), (2, 1, 0)) == Symbol((2, 0), (1, 0))


def test_upsilon_rejects_unreduced_rows():
    with pytest.raises(ValueError):
        upsilon_rows((1, 0), (0,))


def test_beta_set_validation():
    with pytest.raises(ValueError):
        Symbol((1, 1), ())
    with pytest.raises(ValueError):
        parse_symbol("1,2")


@given(symbols())
def test_upsilon_roundtrip(s):
    b = upsilon(s)
    assert upsilon_inv(b, s.defect) == s
    assert b.norm == s.rank - s.defect * s.defect // 4


@given(symbols())
def test_text_roundtrip(s):
    assert parse_symbol(str(s)) == s


@given(symbols())
def test_shifted_representative_has_same_invariants(s):
    top, bottom = with_lengths(s, len(s.top) + 2, len(s.bottom) + 2)
    assert Symbol(top, bottom) == s


def test_family_sizes():
    assert len(enumerate_family(4, 0)) == 20
    assert [str(s) for s in enumerate_family(4, -4)] == ["-;3,2,1,0"]
    assert enumerate_family(4, 6) == ()
    for n in range(6):
        for d in (-3, 1, 5):
            size = n - d * d // 4
            assert len(enumerate_family(n, d)) == (len(enumerate_bipartitions(size)) if size >= 0 else 0)


def test_family_of_groups():
    assert family_of(parse_group("O+8")) == [4, 0, -4]
    assert family_of(parse_group("Sp10")) == [1, -3]
    assert family_of(parse_group("Sp0")) == [1]
    assert family_of(parse_group("O-4")) == [2, -2]


def test_group_parsing():
    assert parse_group("O-6") == GroupTag("O-", 3)
    assert str(GroupTag("Sp", 5)) == "Sp10"
    for bad in ("O+7", "SO8", "Sp"):
        with pytest.raises(ValueError):
            parse_group(bad)


@given(symbols())
def test_group_of_is_consistent(s):
    g = group_of(s)
    assert s in symbols_of(g)


def test_s40_linear_order_matches_published_chain():
    assert [str(s) for s in sorted_family(4, 0, 1)] == S40_CHAIN


def test_minus_order_swaps_roles():
    fam = enumerate_family(3, 1)
    plus = sorted_family(3, 1, 1)
    minus = sorted_family(3, 1, -1)
    assert set(plus) == set(minus) == set(fam)
    assert upsilon(minus[0]).bottom.norm == 0
    assert upsilon(plus[0]).top.norm == 0


@given(symbols(), symbols())
def test_linear_cmp_agrees_with_sort(s, t):
    if (s.rank, s.defect) != (t.rank, t.defect):
        with pytest.raises(ValueError):
            linear_cmp(s, t, 1)
        return
    for eps in (1, -1):
        fam = sorted_family(s.rank, s.defect, eps)
        expect = (fam.index(s) > fam.index(t)) - (fam.index(s) < fam.index(t))
        assert linear_cmp(s, t, eps) == expect


def test_special_closure_example():
    z, fam = special_closure(parse_symbol("2,0;1"))
    assert z == parse_symbol("2,0;1")
    assert sorted(map(str, fam)) == sorted(["-;2,1,0", "2,0;1", "1,0;2", "2,1;0"])
    assert all(t.defect % 4 == 1 for t in fam)
    z, fam = special_closure(parse_symbol("1;3"))
    assert str(z) == "3;1"
    assert sorted(map(str, fam)) == ["1;3", "3;1"]
