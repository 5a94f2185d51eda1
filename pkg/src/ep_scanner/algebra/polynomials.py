"""
src/ep_scanner/algebra/polynomials.py
EXACT POLYNOMIALS: sympy Poly helpers shared by the algebra layer

Polynomials in s (spectral variable), t (path parameter), w = t^2 and D (ATM fixture)
are sympy Polys over QQ (or ZZ for integer data). Bivariate secular polynomials
carry the generators (s, t) with s first.

Coefficient lists at this module's boundary are lowest degree first, matching the
JSON documents and the ATM coefficient file.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import sympy
from sympy import QQ, ZZ, Poly, Symbol

from ..core.exceptions import ConstraintError, ZeroPolynomialError

S, T, W, D = sympy.symbols("s t w D")

_GENERATORS: Dict[str, Symbol] = {"s": S, "t": T, "w": W, "D": D}


def generator(name: str) -> Symbol:
    return _GENERATORS.get(name) or Symbol(name)


# ============================================================================
# Scalars
# ============================================================================

def to_rational(value: Any) -> sympy.Rational:
    """Exact sympy Rational from int, Fraction, 'p/q' text or a sympy rational"""
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, bool):
        raise ConstraintError(f"Cannot use {value!r} as an exact coefficient")
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, str):
        # Deferred import: builders depend on algebra, not the other way round
        from ..builders.rational_parser import parse_rational
        return to_rational(parse_rational(value))
    if isinstance(value, float):
        raise ConstraintError(f"Float coefficient {value!r} is not exact; pass a Fraction or 'p/q' string")
    raise ConstraintError(f"Cannot use {value!r} as an exact coefficient")


def to_fraction(value: Any) -> Fraction:
    rational = sympy.sympify(value)
    if not isinstance(rational, sympy.Rational):
        raise ConstraintError(f"{value!r} is not a rational number")
    return Fraction(int(rational.p), int(rational.q))


def _format_scalar(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# ============================================================================
# Constructors
# ============================================================================

def uni_poly(coeffs: Sequence[Any], gen: Symbol = S) -> Poly:
    """Poly over QQ from coefficients c_0, c_1, ..., c_n"""
    highest_first = [to_rational(c) for c in reversed(list(coeffs))]
    return Poly.from_list(highest_first or [0], gen, domain=QQ)


def constant(value: Any, gen: Symbol = S) -> Poly:
    return Poly(to_rational(value), gen, domain=QQ)


def monomial(value: Any, power: int, gen: Symbol = S) -> Poly:
    return Poly(to_rational(value) * gen ** power, gen, domain=QQ)


def integer_poly(coeffs: Sequence[int], gen: Symbol = D) -> Poly:
    highest_first = [int(c) for c in reversed(list(coeffs))]
    return Poly.from_list(highest_first or [0], gen, domain=ZZ)


def lift(poly_t: Poly) -> Poly:
    """A polynomial in t seen as a constant in s"""
    if not isinstance(poly_t, Poly):
        poly_t = constant(poly_t, T)
    if poly_t.is_zero:
        return Poly(0, S, T, domain=QQ)
    return Poly.from_dict({(0,) + monom: c for monom, c in poly_t.as_dict().items()}, S, T, domain=QQ)


def from_rows(rows: Sequence[Poly]) -> Poly:
    """sum_i rows[i](t) * s^i"""
    terms: Dict[tuple, Any] = {}
    for power, row in enumerate(rows):
        for (t_power,), c in row.as_dict().items():
            terms[(power, t_power)] = c
    if not terms:
        return Poly(0, S, T, domain=QQ)
    return Poly.from_dict(terms, S, T, domain=QQ)


def s_rows(p: Poly) -> List[Poly]:
    """Coefficients of s^0 .. s^n as polynomials in t"""
    if p.is_zero:
        return []
    grouped: Dict[int, Dict[tuple, Any]] = {}
    for (s_power, t_power), c in p.as_dict().items():
        grouped.setdefault(s_power, {})[(t_power,)] = c
    return [
        Poly.from_dict(grouped[power], T, domain=QQ) if power in grouped else Poly(0, T, domain=QQ)
        for power in range(max(grouped) + 1)
    ]


# ============================================================================
# Inspection
# ============================================================================

def degree(p: Poly, gen: Optional[Symbol] = None) -> int:
    """Degree in gen (first generator by default), -1 for the zero polynomial"""
    if p.is_zero:
        return -1
    return int(p.degree(gen if gen is not None else p.gens[0]))


def coefficients(p: Poly) -> List[Fraction]:
    """Univariate coefficients, lowest degree first; [] for zero"""
    if p.is_zero:
        return []
    return [to_fraction(c) for c in reversed(p.all_coeffs())]


def evaluate(p: Poly, x: Any) -> Fraction:
    """Exact value of a univariate polynomial at a rational point"""
    return to_fraction(p.eval(to_rational(x)))


def evaluate_t(p: Poly, t: Any) -> Poly:
    """Specialize a bivariate polynomial in (s, t) at a rational t"""
    return p.eval(T, to_rational(t))


def eval_bigint(poly: Poly, x: int) -> int:
    """Exact value of an integer polynomial at an integer point"""
    return int(poly.eval(int(x)))


def is_even(p: Poly, gen: Optional[Symbol] = None) -> bool:
    """Only even powers of gen (first generator by default)"""
    index = p.gens.index(gen) if gen is not None else 0
    return all(monom[index] % 2 == 0 for monom in p.as_dict())


def deflate_even(p: Poly, new_gen: Symbol = W) -> Poly:
    """q with p(x) = q(x^2) for a univariate even p"""
    if len(p.gens) != 1 or not is_even(p):
        raise ConstraintError("Only even univariate polynomials can be written in x^2")
    if p.is_zero:
        return Poly(0, new_gen, domain=p.domain)
    return Poly.from_dict({(power // 2,): c for (power,), c in p.as_dict().items()}, new_gen, domain=p.domain)


def inflate_even(p: Poly, gen: Symbol) -> Poly:
    """p(x^2) in the generator gen"""
    if p.is_zero:
        return Poly(0, gen, domain=p.domain)
    return Poly.from_dict({(2 * power,): c for (power,), c in p.as_dict().items()}, gen, domain=p.domain)


def integer_primitive(p: Poly) -> Poly:
    """Primitive integer polynomial with positive leading coefficient, same roots as p"""
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no primitive part")
    _, integral = p.clear_denoms(convert=True)
    _, primitive = integral.primitive()
    return -primitive if primitive.LC() < 0 else primitive


# ============================================================================
# Text and JSON
# ============================================================================

def _scalar_term(value: Fraction, mono: str) -> str:
    magnitude = abs(value)
    if not mono:
        return _format_scalar(magnitude)
    if magnitude == 1:
        return mono
    if magnitude.denominator == 1:
        return f"{magnitude.numerator}*{mono}"
    return f"({_format_scalar(magnitude)})*{mono}"


def _join(terms: List[str]) -> str:
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _monomial_text(var: str, power: int) -> str:
    return "" if power == 0 else (var if power == 1 else f"{var}^{power}")


def pretty(p: Poly) -> str:
    """Highest power first: s^11 - 2*s^9; bivariate rows print as (10 - 8*t^2)*s^9"""
    if p.is_zero:
        return "0"
    if len(p.gens) == 2:
        return _pretty_rows(p)
    var = str(p.gens[0])
    coeffs = coefficients(p)
    terms = [
        ("- " if c < 0 else "+ ") + _scalar_term(c, _monomial_text(var, power))
        for power, c in reversed(list(enumerate(coeffs))) if c != 0
    ]
    return _join(terms)


def _pretty_rows(p: Poly) -> str:
    var = str(p.gens[0])
    terms: List[str] = []
    rows = s_rows(p)
    for power in range(len(rows) - 1, -1, -1):
        row = rows[power]
        if row.is_zero:
            continue
        mono = _monomial_text(var, power)
        values = coefficients(row)
        if len(values) == 1:
            negative = values[0] < 0
            body = _scalar_term(values[0], mono)
        else:
            negative = values[0] < 0 if values[0] != 0 else values[-1] < 0
            shown = -row if negative else row
            body = f"({pretty(shown)})" + (f"*{mono}" if mono else "")
        terms.append(("- " if negative else "+ ") + body)
    return _join(terms)


def poly_to_json(p: Poly) -> Dict[str, Any]:
    """{"var", "coeffs"} lowest first; bivariate adds "param" and one row per power of s"""
    if len(p.gens) == 2:
        return {
            "var": str(p.gens[0]),
            "param": str(p.gens[1]),
            "coeffs": [[_format_scalar(c) for c in coefficients(row)] for row in s_rows(p)],
        }
    return {"var": str(p.gens[0]), "coeffs": [_format_scalar(c) for c in coefficients(p)]}


def poly_from_json(document: Dict[str, Any]) -> Poly:
    if "param" in document:
        param = generator(document["param"])
        if param != T:
            raise ConstraintError(f"Bivariate polynomials are stored in t, got {document['param']!r}")
        return from_rows([uni_poly(row, T) for row in document["coeffs"]])
    return uni_poly(document["coeffs"], generator(document.get("var", "s")))


def to_lines(poly: Poly) -> str:
    """Newline-separated decimal coefficients, lowest degree first"""
    return "\n".join(str(int(c)) for c in reversed(poly.all_coeffs())) + "\n"


def from_lines(text: str, gen: Symbol = D) -> Poly:
    return integer_poly([int(line) for line in text.split() if line.strip()], gen)
