import pytest
from hypothesis import given, strategies as st

from cantor_swaps.address import (
    AddressError,
    Relation,
    compare,
    concat,
    enumerate_addresses,
    format_address,
    incomparable,
    is_complete_antichain,
    max_depth,
    parse_address,
    set_max_depth,
    shortlex_key,
    swap_address_action,
)

addr = st.text(alphabet="01", max_size=8)


def test_compare_cases():
    assert compare("0", "01") is Relation.PREFIX_OF
    assert compare("01", "0") is Relation.EXTENSION_OF
    assert compare("01", "10") is Relation.INCOMPARABLE
    assert compare("", "") is Relation.EQUAL
    assert compare("", "110") is Relation.PREFIX_OF


def test_concat_and_root():
    assert concat("0", "11") == "011"
    assert concat("", "1") == "1"
    assert parse_address("e") == "" and format_address("") == "e"


def test_parse_rejects_other_letters():
    with pytest.raises(AddressError):
        parse_address("012")


def test_swap_action_examples():
    assert swap_address_action("0", "0", "1") == "1"
    assert swap_address_action("011", "01", "1") == "11"
    assert swap_address_action("10", "00", "01") == "10"
    assert swap_address_action("0", "00", "01") is None
    with pytest.raises(AddressError):
        swap_address_action("0", "0", "01")


def test_enumerate_shortlex():
    assert enumerate_addresses(2) == ["", "0", "1", "00", "01", "10", "11"]
    assert len(enumerate_addresses(5)) == 63
    assert enumerate_addresses(0) == [""]


def test_enumerate_cap(monkeypatch):
    with pytest.raises(AddressError):
        enumerate_addresses(17)
    monkeypatch.setenv("CANTOR_SWAPS_MAX_DEPTH", "3")
    assert max_depth() == 3
    with pytest.raises(AddressError):
        enumerate_addresses(4)
    set_max_depth(20)
    try:
        assert max_depth() == 20
    finally:
        set_max_depth(None)


def test_complete_antichain():
    assert is_complete_antichain({"0", "10", "11"})
    assert is_complete_antichain({""})
    assert not is_complete_antichain({"0", "10"})
    assert not is_complete_antichain({"0", "01", "1"})
    with pytest.raises(AddressError):
        is_complete_antichain(set())


def test_complete_antichain_brute_force():
    # every subset of addresses of length <= 2 against a measure-and-disjointness oracle
    pool = enumerate_addresses(2)
    for mask in range(1, 1 << len(pool)):
        s = [a for i, a in enumerate(pool) if mask >> i & 1]
        disjoint = all(incomparable(x, y) for i, x in enumerate(s) for y in s[i + 1:])
        covered = {p for p in enumerate_addresses(2) if len(p) == 2 and any(p.startswith(x) for x in s)}
        expected = disjoint and len(covered) == 4
        assert is_complete_antichain(s) == expected, s


@given(addr, addr)
def test_compare_is_antisymmetric(a, b):
    r, s = compare(a, b), compare(b, a)
    flip = {
        Relation.EQUAL: Relation.EQUAL,
        Relation.PREFIX_OF: Relation.EXTENSION_OF,
        Relation.EXTENSION_OF: Relation.PREFIX_OF,
        Relation.INCOMPARABLE: Relation.INCOMPARABLE,
    }
    assert s is flip[r]


@given(addr, addr, addr)
def test_swap_action_is_involution(g, a, b):
    if not incomparable(a, b):
        return
    h = swap_address_action(g, a, b)
    if h is not None:
        assert swap_address_action(h, a, b) == g
        assert len(h) - len(g) in (len(a) - len(b), len(b) - len(a), 0)


@given(st.lists(addr, max_size=6))
def test_shortlex_sorts_by_length_first(xs):
    ys = sorted(xs, key=shortlex_key)
    assert [len(y) for y in ys] == sorted(len(y) for y in ys)
