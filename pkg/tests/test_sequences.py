from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from strategies import specs, unit_rationals
from nondedekind import DomainError
from nondedekind.sequences import (
    DigitString,
    SequenceSpec,
    canonicalize,
    change_basis,
    digit_at,
    expand,
    finite_value,
    format_rational,
    is_nonterminating,
    parse_rational,
    prefix,
    value_exact,
)
from oracles import bracket, minimal_form_lengths, nonterminating_prefix, partial_sum, unroll

S = SequenceSpec.of


def digits(s):
    return str(s)


class TestDigitString:
    def test_rejects_out_of_range_digit(self):
        with pytest.raises(DomainError):
            DigitString(2, (0, 2))

    def test_rejects_small_base(self):
        with pytest.raises(DomainError):
            DigitString(1, ())

    def test_empty_is_valid(self):
        assert len(DigitString(2)) == 0

    def test_concat(self):
        assert str(DigitString.from_str("10") + DigitString.from_str("01")) == "1001"


class TestPrefix:
    def test_unroll(self):
        assert digits(prefix(S("1", "01"), 5)) == "10101"

    def test_empty(self):
        assert len(prefix(S("1", "01"), 0)) == 0

    def test_derived_011(self):
        expected = "".join(map(str, unroll([], [0, 1, 1], 7)))
        assert expected == "0110110"
        assert digits(prefix(S("", "011"), 7)) == expected

    def test_negative(self):
        with pytest.raises(DomainError):
            prefix(S("", "1"), -1)

    @given(specs(), st.integers(0, 40))
    def test_matches_unroll(self, spec, n):
        assert list(prefix(spec, n).digits) == unroll(spec.preamble.digits, spec.period.digits, n)
        for i in range(1, n + 1):
            assert digit_at(spec, i) == prefix(spec, n).digits[i - 1]


class TestFiniteValue:
    def test_examples(self):
        assert finite_value(DigitString.from_str("11")) == Fraction(3, 4)
        assert finite_value(DigitString(2)) == 0
        assert finite_value(DigitString.from_str("101")) == partial_sum([1, 0, 1], 2) == Fraction(5, 8)


class TestValueExact:
    def test_one_third(self):
        lo, hi = bracket(S("", "01"), 64)
        v = value_exact(S("", "01"))
        assert lo <= v <= hi
        assert v == Fraction(1, 3)

    def test_all_ones_is_one(self):
        assert value_exact(S("", "1")) == 1

    def test_two_thirds(self):
        lo, hi = bracket(S("1", "01"), 64)
        v = value_exact(S("1", "01"))
        assert lo <= v <= hi
        assert v == Fraction(2, 3)

    @given(specs(), st.integers(0, 30))
    def test_partial_sums_converge(self, spec, k):
        v = value_exact(spec)
        assert 0 <= v <= 1
        assert abs(v - finite_value(prefix(spec, k))) <= Fraction(1, spec.base**k)


class TestExpand:
    def test_one_third(self):
        assert expand(Fraction(1, 3), 2) == S("", "01")

    def test_half_is_nonterminating(self):
        assert expand(Fraction(1, 2), 2) == S("0", "1")
        assert list(prefix(expand(Fraction(1, 2), 2), 10).digits) == nonterminating_prefix(Fraction(1, 2), 2, 10)

    def test_one(self):
        assert expand(1, 2) == S("", "1")

    def test_zero(self):
        assert expand(0, 2) == S("", "0")

    @pytest.mark.parametrize("q", [Fraction(-1, 3), Fraction(4, 3)])
    def test_domain(self, q):
        with pytest.raises(DomainError):
            expand(q, 2)

    @given(unit_rationals, st.integers(2, 10))
    def test_value_roundtrip(self, q, base):
        spec = expand(q, base)
        assert value_exact(spec) == q
        assert canonicalize(spec) == spec
        assert is_nonterminating(spec)

    @given(unit_rationals, st.integers(2, 10))
    def test_matches_closed_form_digits(self, q, base):
        spec = expand(q, base)
        assert list(prefix(spec, 40).digits) == nonterminating_prefix(q, base, 40)


class TestCanonicalize:
    def test_shrinks_period(self):
        assert canonicalize(S("0", "0101")) == S("0", "01")

    def test_shrinks_preamble(self):
        out = canonicalize(S("01", "11"))
        assert out == S("0", "1")
        assert prefix(out, 30) == prefix(S("01", "11"), 30)

    def test_already_canonical(self):
        assert canonicalize(S("", "1")) == S("", "1")

    @given(specs())
    def test_idempotent_and_stream_preserving(self, spec):
        c = canonicalize(spec)
        assert canonicalize(c) == c
        n = 3 * (len(spec.preamble) + len(spec.period))
        assert prefix(c, n) == prefix(spec, n)

    @given(specs(max_pre=4, max_per=4))
    def test_minimal_against_brute_force(self, spec):
        c = canonicalize(spec)
        stream = list(prefix(spec, 120).digits)
        assert (len(c.preamble), len(c.period)) == minimal_form_lengths(stream)


class TestChangeBasis:
    def test_half_to_base3(self):
        out = change_basis(expand(Fraction(1, 2), 2), 3)
        assert out == SequenceSpec.of("", "1", 3)
        # 1/2 = sum 3**-i: partial sums approach 1/2 from below
        assert all(Fraction(1, 2) - partial_sum([1] * k, 3) == Fraction(1, 2 * 3**k) for k in range(1, 20))

    def test_third_to_base3(self):
        out = change_basis(expand(Fraction(1, 3), 2), 3)
        assert out == SequenceSpec.of("0", "2", 3)
        assert list(prefix(out, 12).digits) == nonterminating_prefix(Fraction(1, 3), 3, 12)

    # the target-base period of p/q can reach ~q digits, so keep q small
    @given(specs(max_pre=3, max_per=3), st.integers(2, 10))
    def test_preserves_value(self, spec, m):
        out = change_basis(spec, m)
        assert out.base == m
        assert value_exact(out) == value_exact(spec)
        assert canonicalize(out) == out and is_nonterminating(out)

    @given(specs())
    def test_same_base_on_nonterminating_is_canonicalize(self, spec):
        if is_nonterminating(spec):
            assert change_basis(spec, spec.base) == canonicalize(spec)
        else:
            # a terminating stream is rewritten to its ...(base-1)(base-1) twin
            assert value_exact(change_basis(spec, spec.base)) == value_exact(spec)


class TestText:
    @pytest.mark.parametrize("text,q", [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), ("-1/3", Fraction(-1, 3))])
    def test_parse(self, text, q):
        assert parse_rational(text) == q
        assert parse_rational(format_rational(q)) == q

    @pytest.mark.parametrize("text", ["1.5", "1/0", "abc", "1e3", ""])
    def test_parse_rejects(self, text):
        with pytest.raises(DomainError):
            parse_rational(text)

    def test_json_roundtrip(self):
        spec = SequenceSpec.from_json('{"base": 2, "preamble": "10", "period": "01"}')
        assert spec == S("10", "01")
        assert SequenceSpec.from_json(spec.to_json()) == spec

    def test_json_rejects_bad_digit(self):
        with pytest.raises(DomainError):
            SequenceSpec.from_json({"base": 2, "preamble": "", "period": "2"})
