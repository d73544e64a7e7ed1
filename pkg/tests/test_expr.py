from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from umbra.bases import h, omega, pow_, schur
from umbra.errors import DomainError, ResourceError
from umbra.expr import (
    Apply, Basis, Bin, Full, Neg, Num, ParseError, Seq, eval_text, format_value, parse, parse_with_warnings,
    unparse, value_to_json,
)
from umbra.operators import ShiftedPoly
from umbra.polys import UniPoly
from umbra.symfunc import SymFunc, m

from strategies import partitions, symfuncs

nonneg = st.builds(Fraction, st.integers(0, 9), st.integers(1, 4))
lams = partitions(4)

leaves = st.one_of(
    nonneg.map(Num),
    st.builds(Basis, st.sampled_from(["m", "e", "h", "pow", "s"]), lams),
    st.builds(lambda n: Basis("Id", (n,) if n else ()), st.integers(0, 3)),
    st.builds(Seq, st.sampled_from(["Deg", "Lin", "Forest"]), st.integers(0, 3)),
    st.builds(Full, st.sampled_from(["e", "h", "Lin"]), lams),
)


def _extend(children):
    return st.one_of(
        st.builds(Bin, st.sampled_from(["+", "-", "*", "/", "o"]), children, children),
        st.builds(lambda c, k: Bin("^", c, Num(Fraction(k))), children, st.integers(0, 3)),
        st.builds(Neg, children),
        st.builds(Apply, st.sampled_from(["D", "eps", "omega", "pi"]), children),
        st.builds(lambda c, i: Apply("D_i", c, i), children, st.integers(1, 3)),
        st.builds(lambda c, lam: Apply("D_lam", c, lam), children, partitions(3, min_size=1)),
        st.builds(lambda c, a: Apply("E", c, a), children,
                  st.one_of(st.just("formal"), st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3)))),
    )


asts = st.recursive(leaves, _extend, max_leaves=8)


@given(asts)
def test_parse_unparse_round_trip(node):
    assert parse(unparse(node)) == node


@given(symfuncs(4))
def test_printed_values_reparse(p):
    assert eval_text(format_value(p)) == p


@given(st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9)))
def test_printed_rationals_reparse(q):
    assert eval_text(format_value(q)) == q


@pytest.mark.parametrize("text,value", [
    ("D(h[3])", h(2)),
    ("eps(D_[2,1](m[2,2,1]))", Fraction(0)),
    ("pi(pow[2] - pow[5])", UniPoly()),
    ("seq(Forest, 2)", 3 * m([2]) + 2 * m([1, 1])),
    ("D_2(m[1]^2)", SymFunc.constant(2)),
    ("D_[2](m[1]^2)", SymFunc.constant(1)),
    ("pow[2] ∘ pow[3]", pow_(6)),
    ("pow[2] @ pow[3]", pow_(6)),
    ("h[2] ∘ h[2]", schur([4]) + schur([2, 2])),
    ("omega(h[2,1])", omega(h([2, 1]))),
    ("E(1)(m[1])", m([1]) + 1),
    ("s[2,1/1]", schur([2]) + schur([1, 1])),
    ("1/2 * m[1] − m[1]", m([1]) * Fraction(-1, 2)),
    ("Id[2]", m([2]) + 2 * m([1, 1])),
    ("full(Lin, [2,1]) - seq(Lin, 2) * seq(Lin, 1)", SymFunc.zero()),
    ("pi(seq(Forest, 3))", UniPoly([0, 9, 6, 1])),
    ("(m[1] + 1)^2", m([1]) ** 2 + 2 * m([1]) + 1),
])
def test_evaluation(text, value):
    assert eval_text(text) == value


def test_formal_shift_symbols():
    v = eval_text("E(formal)(E(formal)(m[2,1]))")
    assert isinstance(v, ShiftedPoly) and v.symbols == ("a", "b")
    assert v.evaluate({"a": 1, "b": 0}) == eval_text("E(1)(m[2,1])")


def test_non_descending_partitions_warn():
    node, warnings = parse_with_warnings("m[1,2]")
    assert node == Basis("m", (2, 1))
    assert len(warnings) == 1 and "normalized to [2, 1]" in warnings[0]


@pytest.mark.parametrize("text,column", [
    ("m[2", 4),
    ("m[2] +", 7),
    ("foo(1)", 1),
    ("m[2] $ 1", 6),
    ("E(x)(m[1])", 3),
    ("1/0", 3),
])
def test_parse_errors_carry_positions(text, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.column == column and info.value.line == 1


def test_parse_error_line_numbers():
    with pytest.raises(ParseError) as info:
        parse("m[1] +\n  )")
    assert (info.value.line, info.value.column) == (2, 3)


def test_domain_errors_name_the_operation():
    with pytest.raises(DomainError, match="^D: D needs a symmetric function, got a polynomial"):
        eval_text("D(pi(m[1]))")
    with pytest.raises(DomainError):
        eval_text("seq(Nope, 2)")
    with pytest.raises(DomainError):
        eval_text("m[1] / m[1]")


def test_degree_cap_is_enforced():
    with pytest.raises(ResourceError):
        eval_text("m[40]")


def test_value_json():
    assert value_to_json(Fraction(3, 4)) == {"rational": "3/4"}
    assert value_to_json(m([1])) == m([1]).to_json()
    assert "poly" in value_to_json(UniPoly([0, 1]))
