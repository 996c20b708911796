import numpy as np
import pytest

from oscint import ParseError, parse_amplitude


def evaluate(src, x):
    return parse_amplitude(src)(np.asarray(x, dtype=float))


class TestLiterals:
    def test_integer(self):
        assert evaluate("3", 0.0) == 3

    def test_decimal_and_scientific(self):
        assert evaluate("2.5e-3", 0.0) == 2.5e-3
        assert evaluate(".5", 0.0) == 0.5
        assert evaluate("1E2", 0.0) == 100

    def test_constants(self):
        assert evaluate("pi", 0.0) == pytest.approx(np.pi)
        assert evaluate("i", 0.0) == 1j

    def test_variable(self):
        np.testing.assert_array_equal(evaluate("x", [1.0, -2.0]), [1, -2])


class TestOperators:
    def test_arithmetic(self):
        assert evaluate("1+2*3", 0.0) == 7
        assert evaluate("(1+2)*3", 0.0) == 9
        assert evaluate("7-4-1", 0.0) == 2  # left-associative
        assert evaluate("8/4/2", 0.0) == 1

    def test_power_right_associative(self):
        assert evaluate("2^3^2", 0.0) == 512

    def test_power_binds_tighter_than_unary_minus(self):
        assert evaluate("-2^2", 0.0) == -4

    def test_signed_exponent(self):
        assert evaluate("2^-1", 0.0) == 0.5

    def test_unary_minus_chains(self):
        assert evaluate("--3", 0.0) == 3

    def test_complex_arithmetic(self):
        assert evaluate("i*i", 0.0) == -1
        assert evaluate("exp(i*pi)", 0.0) == pytest.approx(-1, abs=1e-15)


class TestFunctions:
    @pytest.mark.parametrize(
        "src,arg,expected",
        [
            ("sin(x)", 0.5, np.sin(0.5)),
            ("cos(x)", 0.5, np.cos(0.5)),
            ("exp(x)", 1.0, np.e),
            ("sqrt(x)", 4.0, 2.0),
            ("abs(x)", -3.0, 3.0),
            ("asin(x)", 0.5, np.arcsin(0.5)),
            ("atan(x)", 1.0, np.pi / 4),
            ("log(x)", np.e, 1.0),
        ],
    )
    def test_known_values(self, src, arg, expected):
        assert evaluate(src, arg) == pytest.approx(expected, abs=1e-15)

    def test_principal_branch_sqrt(self):
        # sqrt of a negative real goes to the positive imaginary axis
        expr = parse_amplitude("sqrt(x)")
        assert expr(np.array(-4.0, dtype=complex)) == pytest.approx(2j)

    def test_nested_calls(self):
        assert evaluate("log(exp(sin(x)))", 0.7) == pytest.approx(np.sin(0.7))

    def test_vectorized(self):
        x = np.linspace(-0.9, 0.9, 7)
        np.testing.assert_allclose(
            evaluate("1/(x+2)", x), 1 / (x + 2), atol=1e-15
        )


class TestRoundTrip:
    @pytest.mark.parametrize(
        "src",
        [
            "x",
            "1+2*3",
            "-x^2",
            "sin(x)/(x+2)",
            "exp(-(x-0.25)^2)",
            "1/(sqrt(1-x^2)*((asin(x)-0.25)^2+1))",
        ],
    )
    def test_to_string_reparses_to_same_function(self, src):
        first = parse_amplitude(src)
        second = parse_amplitude(first.to_string())
        x = np.linspace(-0.8, 0.8, 9)
        np.testing.assert_allclose(first(x), second(x), atol=0, rtol=0)
        assert second.to_string() == first.to_string()


class TestErrors:
    def test_offset_and_expected(self):
        with pytest.raises(ParseError) as err:
            parse_amplitude("1 + $")
        assert err.value.offset == 4

    def test_unknown_identifier_lists_alternatives(self):
        with pytest.raises(ParseError) as err:
            parse_amplitude("foo(x)")
        assert "sin" in err.value.expected
        assert err.value.offset == 0

    def test_unbalanced_paren(self):
        with pytest.raises(ParseError) as err:
            parse_amplitude("sin(x")
        assert err.value.expected == (")",)

    def test_trailing_garbage(self):
        with pytest.raises(ParseError) as err:
            parse_amplitude("1 2")
        assert err.value.offset == 2

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_amplitude("")

    def test_dangling_operator(self):
        with pytest.raises(ParseError):
            parse_amplitude("1 +")
