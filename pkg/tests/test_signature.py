from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from surfsig.signature import (
    Signature,
    SignatureSyntaxError,
    format_signature,
    is_potential,
    parse_signature,
    reduced_euler,
    required_group_order,
)


def chi_oracle(h, periods):
    """Term-by-term fraction sum."""
    chi = Fraction(h - 1)
    for m in periods:
        chi += (1 - Fraction(1, m)) / 2
    return chi.numerator, chi.denominator


signatures = st.builds(
    Signature,
    st.integers(0, 6),
    st.lists(st.integers(2, 60), max_size=8).map(tuple),
)


@pytest.mark.parametrize("h, periods, expected", [
    (2, (), (1, 1)),
    (1, (), (0, 1)),
    (0, (2, 3, 7), (1, 84)),
    (0, (2, 2, 2, 2, 2), (1, 4)),
])
def test_reduced_euler_examples(h, periods, expected):
    assert chi_oracle(h, periods) == expected
    chi = reduced_euler(Signature(h, periods))
    assert (chi.numerator, chi.denominator) == expected


@given(signatures)
def test_reduced_euler_matches_integer_oracle(sig):
    chi = reduced_euler(sig)
    assert isinstance(chi, Fraction)
    assert (chi.numerator, chi.denominator) == chi_oracle(sig.orbit_genus, sig.periods)
    bound = 2 * lcm(*sig.periods) if sig.periods else 1
    assert bound % chi.denominator == 0


@pytest.mark.parametrize("genus", range(2, 12))
def test_required_order_of_surface_quotient(genus):
    assert required_group_order(Signature(2), genus) == genus - 1


def test_required_order_examples():
    assert required_group_order(Signature(0, (2, 2, 2, 2, 2)), 2) == 4
    assert required_group_order(Signature(0, (2, 3, 7)), 3) == 168
    assert required_group_order(Signature(0, (2, 3, 7)), 2) == 84
    for genus in (2, 5, 17):
        assert required_group_order(Signature(1), genus) is None
    assert required_group_order(Signature(0, (2, 2, 2)), 5) is None


def test_required_order_ignores_divisibility():
    # N = 24 at genus 5, but 18 does not divide 24
    sig = Signature(0, (2, 9, 18))
    assert required_group_order(sig, 5) == 24
    assert not is_potential(sig, 5)


@given(signatures, st.integers(2, 30), st.integers(1, 12))
def test_required_order_scales_with_genus_minus_one(sig, genus, k):
    n = required_group_order(sig, genus)
    if n is not None:
        assert required_group_order(sig, k * (genus - 1) + 1) == k * n


def test_is_potential_examples():
    assert is_potential(Signature(0, (3, 3, 3, 3)), 2)
    for genus in range(2, 10):
        assert not is_potential(Signature(0, (2, 2, 2)), genus)


def test_genus_validation():
    with pytest.raises(ValueError):
        required_group_order(Signature(2), 1)


@pytest.mark.parametrize("text, h, periods", [
    ("(0; 2,3,7)", 0, (2, 3, 7)),
    ("(2; -)", 2, ()),
    ("(0; 7,2,3)", 0, (2, 3, 7)),
    ("  ( 1 ;2 , 2 ) ", 1, (2, 2)),
])
def test_parse(text, h, periods):
    assert parse_signature(text) == Signature(h, periods)


def test_format_is_exact():
    assert format_signature(Signature(0, (7, 3, 2))) == "(0; 2,3,7)"
    assert format_signature(Signature(2)) == "(2; -)"


@pytest.mark.parametrize("text, token", [
    ("(0; 1,3)", "1"),
    ("(-1; 2,3)", "-1"),
    ("(0; 2,x)", "x"),
    ("(0; 2,,3)", ""),
    ("0; 2,3", "0; 2,3"),
    ("(a; -)", "a"),
])
def test_parse_errors_name_token(text, token):
    with pytest.raises(SignatureSyntaxError) as info:
        parse_signature(text)
    assert info.value.token == token


def test_signature_rejects_bad_fields():
    with pytest.raises(ValueError):
        Signature(-1)
    with pytest.raises(ValueError):
        Signature(0, (1, 2))


def test_equality_is_multiset_equality():
    assert Signature(0, (3, 2, 2)) == Signature(0, (2, 3, 2))
    assert Signature(0, (2, 3)) != Signature(0, (2, 3, 3))
    assert hash(Signature(0, (3, 2))) == hash(Signature(0, (2, 3)))


@settings(max_examples=500)
@given(signatures)
def test_round_trip(sig):
    assert parse_signature(format_signature(sig)) == sig
