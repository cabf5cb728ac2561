import random

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from kdet.errors import DegreeError, NotSquarefreeError, ParseError
from kdet.number_field import (
    IntPolynomial,
    Signature,
    parse_polynomial,
    render_polynomial,
    signature,
    sturm_real_root_count,
)

from oracles import companion_real_root_count

X = sympy.Symbol("x")


def is_squarefree(coeffs):
    return sympy.Poly(list(reversed(coeffs)), X).is_sqf


def random_squarefree(rng, max_degree=6, bound=9):
    while True:
        deg = rng.randint(1, max_degree)
        coeffs = [rng.randint(-bound, bound) for _ in range(deg)] + [rng.choice([c for c in range(-bound, bound + 1) if c])]
        if is_squarefree(coeffs):
            return coeffs


polys = st.lists(st.integers(-9, 9), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


class TestParse:
    @pytest.mark.parametrize("text, coeffs", [
        ("x^3-2", (-2, 0, 0, 1)),
        ("[-2,0,0,1]", (-2, 0, 0, 1)),
        ("x^2+0x+1", (1, 0, 1)),
        ("2x^2+3x-1", (-1, 3, 2)),
        ("  -x^2 +  2 ", (2, 0, -1)),
        ("x**2 - 2*x", (0, -2, 1)),
        ("(x-1)(x+1)", (-1, 0, 1)),
        ("3(x^2+1)^2", (3, 0, 6, 0, 3)),
        ("x", (0, 1)),
        ("[ 1, -1 ]", (1, -1)),
        ("[0,1,0,0]", (0, 1)),
        ("123456789012345678901234567890x - 1", (-1, 123456789012345678901234567890)),
    ])
    def test_accepts(self, text, coeffs):
        assert parse_polynomial(text).coeffs == coeffs

    @pytest.mark.parametrize("text, position", [
        ("x^", 2),
        ("x^2+", 4),
        ("x^2 3", 4),
        ("x + y", 4),
        ("[1,2", 4),
        ("(x+1", 4),
        ("x^-2", 2),
        ("", 0),
    ])
    def test_rejects_with_position(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_polynomial(text)
        assert info.value.position == position
        assert info.value.expected

    @pytest.mark.parametrize("text", ["7", "x - x", "[5]", "[0, 0]"])
    def test_constant_rejected(self, text):
        with pytest.raises(DegreeError):
            parse_polynomial(text)

    @given(polys)
    def test_render_round_trip(self, coeffs):
        p = IntPolynomial(coeffs)
        assert parse_polynomial(render_polynomial(p)) == p

    @given(polys)
    def test_list_round_trip(self, coeffs):
        p = IntPolynomial(coeffs)
        assert parse_polynomial("[" + ",".join(map(str, p.coeffs)) + "]") == p


class TestSturm:
    @pytest.mark.parametrize("text, count", [("x^2+1", 0), ("x^2-2", 2), ("x^3-2", 1), ("x^5-5x+1", 3), ("x^4+1", 0)])
    def test_examples(self, text, count):
        p = parse_polynomial(text)
        assert sturm_real_root_count(p) == count
        assert companion_real_root_count(p.coeffs) == count

    def test_against_companion_matrix(self):
        rng = random.Random(1894)
        for _ in range(100):
            coeffs = random_squarefree(rng)
            assert sturm_real_root_count(IntPolynomial(coeffs)) == companion_real_root_count(coeffs), coeffs

    def test_close_roots(self):
        # roots 1000 and 1001 next to a complex pair; exact arithmetic separates them
        p = parse_polynomial("(x-1000)(x-1001)(x^2+1)(10000x-1)(10001x-1)")
        assert sturm_real_root_count(p) == 4

    @given(polys, st.integers(1, 10**6))
    def test_scale_invariant(self, coeffs, k):
        assume(is_squarefree(coeffs))
        p = IntPolynomial(coeffs)
        scaled = IntPolynomial([k * c for c in coeffs])
        assert sturm_real_root_count(p) == sturm_real_root_count(scaled)

    @pytest.mark.parametrize("text", ["(x-1)^2", "x^3", "(x^2+1)^2 (x-3)"])
    def test_not_squarefree(self, text):
        with pytest.raises(NotSquarefreeError):
            sturm_real_root_count(parse_polynomial(text))


class TestSignature:
    @pytest.mark.parametrize("text, sig", [
        ("x", (1, 0, 1)),
        ("x^2+1", (0, 1, 2)),
        ("x^3-2", (1, 1, 3)),
        ("x^4+1", (0, 2, 4)),
        ("x^5-5x+1", (3, 1, 5)),
    ])
    def test_examples(self, text, sig):
        assert signature(parse_polynomial(text)) == Signature(*sig)

    @given(polys)
    def test_invariant(self, coeffs):
        assume(is_squarefree(coeffs))
        sig = signature(IntPolynomial(coeffs))
        assert sig.r1 + 2 * sig.r2 == sig.degree
        assert (sig.degree - sig.r1) % 2 == 0

    def test_reducible_gives_etale_signature(self):
        assert signature(parse_polynomial("(x^2-2)(x^2+1)")) == Signature(2, 1, 4)

    def test_signature_validation(self):
        with pytest.raises(ValueError):
            Signature(1, 1, 4)
        with pytest.raises(ValueError):
            Signature(-1, 1, 1)
