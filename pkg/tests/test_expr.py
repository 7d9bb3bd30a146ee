"""Claim-language parser, printer round-trips, and evaluation."""

import pytest
from hypothesis import given, settings, strategies as st

from qseries.claims import registry
from qseries.expr import (
    Ap,
    BinOp,
    Eta,
    Lit,
    Mock,
    Mono,
    ParseError,
    Pow,
    UnknownSymbolError,
    eval_expr,
    parse_expr,
    to_text,
)
from qseries.products import eta
from qseries.series import NonUnitError


class TestParse:
    def test_quotient_shape(self):
        node = parse_expr("l(4)^3 / (l(1)*l(2))")
        assert isinstance(node, BinOp) and node.op == "/"
        assert node.left == Pow(Eta(4), 3)
        assert node.right == BinOp("*", Eta(1), Eta(2))

    def test_extraction_shape(self):
        node = parse_expr("AP(mock(v), 2, 1)")
        assert node == Ap(Mock("v"), 2, 1)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_expr("l(")
        assert err.value.position == 2

    def test_unknown_symbol(self):
        with pytest.raises(UnknownSymbolError):
            parse_expr("zeta(3)")
        with pytest.raises(UnknownSymbolError):
            parse_expr("mock(omega)")
        with pytest.raises(UnknownSymbolError):
            parse_expr("stream(cubes,1)")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_expr("l(1) l(2)")

    def test_precedence(self):
        node = parse_expr("1 + 2*3^2")
        assert eval_expr(node, 5).coefficient(0) == 19

    def test_negative_monomial_exponent(self):
        assert parse_expr("q^-1") == Mono(-1)

    def test_unary_minus(self):
        node = parse_expr("-q + 1")
        s = eval_expr(node, 5)
        assert s.coefficient(0) == 1 and s.coefficient(1) == -1


class TestPrinterRoundTrip:
    @pytest.mark.parametrize(
        "text",
        [
            "l(4)^3/(l(1)*l(2))",
            "AP(mock(v),2,1)",
            "SUB(ALT(mock(mu)),2) + 4*mock(v)",
            "q*l(4)^2*l(12)^2/(l(2)^2*l(6))",
            "2*l(6)^3/(l(1)*l(2)) - q^-1*mock(psi6)",
            "poch(-q,4)*poch(-q^3,4)*poch(q^4,4)",
            "f(-q,-q^2)",
            "phi(-q^3)",
            "stream(jacobi,6)",
            "ruleset(thm3.2)",
            "1 - 2 - 3",
            "2^3",
            "(1+q)^-2",
        ],
    )
    def test_examples(self, text):
        node = parse_expr(text)
        assert parse_expr(to_text(node)) == node

    def test_registry_expressions(self):
        for claim in registry():
            for node in (claim.lhs, claim.rhs, claim.expr):
                if node is not None:
                    assert parse_expr(to_text(node)) == node

    def test_subtraction_grouping(self):
        # 1 - (2 - 3) must not collapse to 1 - 2 - 3
        node = parse_expr("1 - (2 - 3)")
        assert eval_expr(node, 3).coefficient(0) == 2
        assert parse_expr(to_text(node)) == node


ATOMS = st.one_of(
    st.integers(0, 9).map(Lit),
    st.integers(-3, 6).map(Mono),
    st.integers(1, 12).map(Eta),
    st.sampled_from(["mu", "v", "psi6"]).map(Mock),
)


def _compound(children):
    return st.one_of(
        st.tuples(st.sampled_from("+-*/"), children, children).map(
            lambda t: BinOp(t[0], t[1], t[2])
        ),
        st.tuples(children, st.integers(-3, 4)).map(lambda t: Pow(t[0], t[1])),
        st.tuples(children, st.integers(1, 4), st.integers(0, 3)).map(
            lambda t: Ap(t[0], t[1], min(t[2], t[1] - 1))
        ),
    )


random_exprs = st.recursive(ATOMS, _compound, max_leaves=12)


@settings(max_examples=200)
@given(random_exprs)
def test_roundtrip_random(node):
    assert parse_expr(to_text(node)) == node


class TestEval:
    def test_eta_pentagonal(self):
        s = eval_expr(parse_expr("l(1)"), 13)
        assert s.coefficients(13) == eta(1, 13).coefficients()

    def test_sub_matches_eta(self):
        a = eval_expr(parse_expr("SUB(l(1),2)"), 40)
        b = eval_expr(parse_expr("l(2)"), 40)
        agree, diff = a.agrees_with(b, upto=40)
        assert agree, diff

    def test_beta_quotient_constant(self):
        s = eval_expr(parse_expr("2*l(6)^3/(l(1)*l(2))"), 10)
        assert s.coefficient(0) == 2

    def test_ap_requests_deep_enough(self):
        s = eval_expr(parse_expr("AP(mock(v),2,1)"), 100)
        assert s.order >= 100

    def test_non_unit_divisor(self):
        with pytest.raises(NonUnitError):
            eval_expr(parse_expr("1/(2+q)"), 10)

    def test_unknown_ruleset(self):
        with pytest.raises(KeyError):
            eval_expr(parse_expr("ruleset(bogus)"), 10)

    def test_laurent_monomial(self):
        s = eval_expr(parse_expr("q^-1*mock(psi6)"), 30)
        assert s.coefficient(0) == 1  # psi6 starts at q^1
