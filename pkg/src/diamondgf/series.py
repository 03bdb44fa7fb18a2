"""Exact arithmetic in two formal variables: sparse polynomials, truncated
power series, and rational expressions with denominators of the shape
prod (1 - monomial).

Coefficients are plain Python integers, so partition counts never wrap
around. A polynomial is stored as a map from exponent pairs to nonzero
coefficients; a truncated series additionally carries a total-degree bound T
and keeps only monomials with exp_a + exp_b <= T. The two variables are
anonymous slots; rendering attaches names such as ``a, b`` or ``x, y`` only
at output time.

All values are immutable after construction and every operation is a pure
function, so they are safe to share across threads.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Union


class NonExactDivision(ArithmeticError):
    """A polynomial division that must be remainder-free left a remainder."""


class NonInvertibleFactor(ValueError):
    """A denominator factor (1 - m) where m has total degree 0."""


class TruncationMismatch(ValueError):
    """Arithmetic between truncated series with different degree bounds."""


class Monomial2(NamedTuple):
    """An exponent pair, representing ``a^exp_a * b^exp_b``."""

    exp_a: int
    exp_b: int

    @property
    def degree(self) -> int:
        return self.exp_a + self.exp_b


MonomialLike = Union[Monomial2, Sequence[int]]


def _as_monomial(mono: MonomialLike) -> Monomial2:
    m = Monomial2(int(mono[0]), int(mono[1]))
    if m.exp_a < 0 or m.exp_b < 0:
        raise ValueError(f"negative exponent in monomial {m}")
    return m


def _grlex(mono: Sequence[int]) -> tuple[int, int]:
    # Graded lexicographic sort key: total degree first, then exp_a.
    return (mono[0] + mono[1], mono[0])


def _collect(items: Iterable[tuple[MonomialLike, int]]) -> dict[Monomial2, int]:
    acc: dict[Monomial2, int] = {}
    for mono, coeff in items:
        if not isinstance(coeff, int):
            raise TypeError(f"coefficient {coeff!r} is not an exact integer")
        if coeff == 0:
            continue
        key = _as_monomial(mono)
        total = acc.get(key, 0) + coeff
        if total:
            acc[key] = total
        else:
            del acc[key]
    return acc


class Poly2:
    """A polynomial with exact integer coefficients in two variables.

    >>> x, y = Poly2.monomial(1, 0), Poly2.monomial(0, 1)
    >>> ((1 - y) * (1 + y + y**2)).text()
    '1 + -b^3'
    >>> (1 + x * y).substitute(Monomial2(0, 1), Monomial2(1, 0)).text()
    '1 + a*b'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple[MonomialLike, int]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _collect(items)

    @classmethod
    def zero(cls) -> "Poly2":
        return cls()

    @classmethod
    def one(cls) -> "Poly2":
        return cls({Monomial2(0, 0): 1})

    @classmethod
    def constant(cls, value: int) -> "Poly2":
        return cls({Monomial2(0, 0): value})

    @classmethod
    def monomial(cls, exp_a: int, exp_b: int, coeff: int = 1) -> "Poly2":
        return cls({Monomial2(exp_a, exp_b): coeff})

    @property
    def terms(self) -> Mapping[Monomial2, int]:
        """The underlying term map; treat as read-only."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exp_a: int, exp_b: int) -> int:
        return self._terms.get(Monomial2(exp_a, exp_b), 0)

    def sorted_terms(self) -> list[tuple[Monomial2, int]]:
        return sorted(self._terms.items(), key=lambda kv: _grlex(kv[0]))

    def total_degree(self) -> int:
        """Maximum exp_a + exp_b, or -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def degree_a(self) -> int:
        return max((m.exp_a for m in self._terms), default=-1)

    def degree_b(self) -> int:
        return max((m.exp_b for m in self._terms), default=-1)

    @staticmethod
    def _coerce(other) -> Optional["Poly2"]:
        if isinstance(other, Poly2):
            return other
        if isinstance(other, int):
            return Poly2.constant(other)
        return None

    def __eq__(self, other) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self._terms == coerced._terms

    def __add__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        result = dict(self._terms)
        for mono, coeff in coerced._terms.items():
            total = result.get(mono, 0) + coeff
            if total:
                result[mono] = total
            else:
                del result[mono]
        return Poly2(result)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self + (-coerced)

    def __rsub__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced + (-self)

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        result: dict[tuple[int, int], int] = {}
        for (ia, ib), c1 in self._terms.items():
            for (ja, jb), c2 in coerced._terms.items():
                key = (ia + ja, ib + jb)
                result[key] = result.get(key, 0) + c1 * c2
        return Poly2(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly2":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take a nonnegative integer exponent")
        result = Poly2.one()
        for _ in range(exponent):
            result = result * self
        return result

    def mul_bounded(self, other: "Poly2", bound: int) -> "Poly2":
        """Product with every term of total degree > bound dropped.

        Safe whenever only the degree-<= bound part of the result matters,
        because all exponents here are nonnegative.
        """
        result: dict[tuple[int, int], int] = {}
        for (ia, ib), c1 in self._terms.items():
            for (ja, jb), c2 in other._terms.items():
                da, db = ia + ja, ib + jb
                if da + db > bound:
                    continue
                key = (da, db)
                result[key] = result.get(key, 0) + c1 * c2
        return Poly2(result)

    def substitute(self, x_image: MonomialLike, y_image: MonomialLike) -> "Poly2":
        """Map each term x^i y^j to x_image^i * y_image^j, recollected exactly."""
        xi = _as_monomial(x_image)
        yi = _as_monomial(y_image)
        result: dict[tuple[int, int], int] = {}
        for (i, j), coeff in self._terms.items():
            key = (i * xi.exp_a + j * yi.exp_a, i * xi.exp_b + j * yi.exp_b)
            result[key] = result.get(key, 0) + coeff
        return Poly2(result)

    def divide_exact(self, divisor: "Poly2") -> "Poly2":
        """Return q with q * divisor == self, or raise NonExactDivision.

        Long division by the graded-lex leading term. A single divisor
        generates its own ideal basis, so a nonzero remainder (or a
        non-divisible integer leading coefficient) proves no exact integer
        quotient exists.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = max(divisor._terms, key=_grlex)
        lead_coeff = divisor._terms[lead]
        remainder = dict(self._terms)
        quotient: dict[Monomial2, int] = {}
        while remainder:
            top = max(remainder, key=_grlex)
            top_coeff = remainder[top]
            if top.exp_a < lead.exp_a or top.exp_b < lead.exp_b:
                raise NonExactDivision(f"no exact quotient: stuck at term {top}")
            q, r = divmod(top_coeff, lead_coeff)
            if r:
                raise NonExactDivision(
                    f"no exact quotient: coefficient {top_coeff} not divisible by {lead_coeff}"
                )
            q_mono = Monomial2(top.exp_a - lead.exp_a, top.exp_b - lead.exp_b)
            quotient[q_mono] = quotient.get(q_mono, 0) + q
            for (da, db), dc in divisor._terms.items():
                key = Monomial2(q_mono.exp_a + da, q_mono.exp_b + db)
                total = remainder.get(key, 0) - q * dc
                if total:
                    remainder[key] = total
                else:
                    remainder.pop(key, None)
        return Poly2(quotient)

    def evaluate(self, a_value: int, b_value: int) -> int:
        return sum(c * a_value**m.exp_a * b_value**m.exp_b for m, c in self._terms.items())

    def first_difference(self, other: "Poly2") -> Optional[tuple[Monomial2, int, int]]:
        """Graded-lex smallest monomial where the two differ, with both
        coefficients, or None when equal."""
        keys = set(self._terms) | set(other._terms)
        for mono in sorted(keys, key=_grlex):
            left = self._terms.get(mono, 0)
            right = other._terms.get(mono, 0)
            if left != right:
                return (mono, left, right)
        return None

    def text(self, names: tuple[str, str] = ("a", "b")) -> str:
        return format_terms(self.sorted_terms(), names)

    def __repr__(self) -> str:
        return f"Poly2({self.text()})"


class TruncSeries2:
    """A power series kept only through total degree ``truncation``.

    Operations between two series require equal truncation bounds; anything
    else raises TruncationMismatch rather than silently mixing precisions.
    """

    __slots__ = ("_truncation", "_terms")

    def __init__(self, truncation: int, terms: Mapping | Iterable = ()) -> None:
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected = _collect(items)
        for mono in collected:
            if mono.degree > truncation:
                raise ValueError(f"term {mono} exceeds truncation {truncation}")
        self._truncation = truncation
        self._terms = collected

    @classmethod
    def from_poly(cls, poly: Poly2, truncation: int) -> "TruncSeries2":
        """The polynomial viewed as a series: terms beyond the bound drop."""
        return cls(
            truncation,
            {m: c for m, c in poly.terms.items() if m.degree <= truncation},
        )

    @classmethod
    def zero(cls, truncation: int) -> "TruncSeries2":
        return cls(truncation)

    @classmethod
    def one(cls, truncation: int) -> "TruncSeries2":
        return cls(truncation, {Monomial2(0, 0): 1})

    @property
    def truncation(self) -> int:
        return self._truncation

    @property
    def terms(self) -> Mapping[Monomial2, int]:
        return self._terms

    def coefficient(self, exp_a: int, exp_b: int) -> int:
        return self._terms.get(Monomial2(exp_a, exp_b), 0)

    def sorted_terms(self) -> list[tuple[Monomial2, int]]:
        return sorted(self._terms.items(), key=lambda kv: _grlex(kv[0]))

    def _check_compatible(self, other: "TruncSeries2") -> None:
        if self._truncation != other._truncation:
            raise TruncationMismatch(
                f"truncations differ: {self._truncation} vs {other._truncation}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries2):
            return NotImplemented
        return self._truncation == other._truncation and self._terms == other._terms

    def __add__(self, other: "TruncSeries2") -> "TruncSeries2":
        if not isinstance(other, TruncSeries2):
            return NotImplemented
        self._check_compatible(other)
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = result.get(mono, 0) + coeff
            if total:
                result[mono] = total
            else:
                del result[mono]
        return TruncSeries2(self._truncation, result)

    def __sub__(self, other: "TruncSeries2") -> "TruncSeries2":
        if not isinstance(other, TruncSeries2):
            return NotImplemented
        self._check_compatible(other)
        return self + TruncSeries2(other._truncation, {m: -c for m, c in other._terms.items()})

    def __mul__(self, other: "TruncSeries2") -> "TruncSeries2":
        if not isinstance(other, TruncSeries2):
            return NotImplemented
        self._check_compatible(other)
        bound = self._truncation
        result: dict[tuple[int, int], int] = {}
        for (ia, ib), c1 in self._terms.items():
            for (ja, jb), c2 in other._terms.items():
                da, db = ia + ja, ib + jb
                if da + db > bound:
                    continue
                key = (da, db)
                result[key] = result.get(key, 0) + c1 * c2
        return TruncSeries2(bound, result)

    def specialize_univariate(self) -> list[int]:
        """Set both variables to one formal variable q: the coefficient of
        q^n is the sum of all coefficients of total degree n."""
        out = [0] * (self._truncation + 1)
        for mono, coeff in self._terms.items():
            out[mono.degree] += coeff
        return out

    def first_difference(self, other: "TruncSeries2") -> Optional[tuple[Monomial2, int, int]]:
        self._check_compatible(other)
        keys = set(self._terms) | set(other._terms)
        for mono in sorted(keys, key=_grlex):
            left = self._terms.get(mono, 0)
            right = other._terms.get(mono, 0)
            if left != right:
                return (mono, left, right)
        return None

    def text(self, names: tuple[str, str] = ("a", "b")) -> str:
        return format_terms(self.sorted_terms(), names)

    def __repr__(self) -> str:
        return f"TruncSeries2[T={self._truncation}]({self.text()})"


def geometric_series(mono: MonomialLike, truncation: int) -> TruncSeries2:
    """1/(1 - m) = 1 + m + m^2 + ... through the truncation bound."""
    m = _as_monomial(mono)
    if m.degree == 0:
        raise NonInvertibleFactor(f"factor (1 - {m}) has no series inverse")
    terms = {}
    k = 0
    while k * m.degree <= truncation:
        terms[Monomial2(k * m.exp_a, k * m.exp_b)] = 1
        k += 1
    return TruncSeries2(truncation, terms)


@dataclass(frozen=True)
class RationalExpr:
    """numerator / prod (1 - m) for monomials m of total degree >= 1."""

    numerator: Poly2
    denominator_factors: tuple[Monomial2, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.numerator, Poly2):
            raise TypeError("numerator must be a Poly2")
        factors = tuple(_as_monomial(m) for m in self.denominator_factors)
        for m in factors:
            if m.degree == 0:
                raise NonInvertibleFactor(f"factor (1 - {m}) has no series inverse")
        object.__setattr__(self, "denominator_factors", factors)

    def expand(self, truncation: int) -> TruncSeries2:
        """Multiply the numerator by each factor's geometric expansion.

        Numerator terms beyond the bound drop up front, and factors whose
        monomial degree exceeds the bound expand to 1; neither affects any
        retained coefficient. The result is independent of factor order.
        """
        series = TruncSeries2.from_poly(self.numerator, truncation)
        for mono in self.denominator_factors:
            if mono.degree > truncation:
                continue
            series = series * geometric_series(mono, truncation)
        return series


def expand_rational(expr: RationalExpr, truncation: int) -> TruncSeries2:
    return expr.expand(truncation)


# --- rendering ------------------------------------------------------------


def _format_term(mono: Monomial2, coeff: int, names: tuple[str, str]) -> str:
    factors = []
    if mono.exp_a:
        factors.append(names[0] if mono.exp_a == 1 else f"{names[0]}^{mono.exp_a}")
    if mono.exp_b:
        factors.append(names[1] if mono.exp_b == 1 else f"{names[1]}^{mono.exp_b}")
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


def format_terms(
    sorted_terms: Sequence[tuple[Monomial2, int]], names: tuple[str, str] = ("a", "b")
) -> str:
    if not sorted_terms:
        return "0"
    return " + ".join(_format_term(m, c, names) for m, c in sorted_terms)


def terms_as_json(sorted_terms: Sequence[tuple[Monomial2, int]]) -> list[list]:
    # Coefficients go out as decimal strings; they can exceed double precision.
    return [[m.exp_a, m.exp_b, str(c)] for m, c in sorted_terms]


def poly_json(poly: Poly2) -> dict:
    return {"truncation": None, "terms": terms_as_json(poly.sorted_terms())}


def series_json(series: TruncSeries2) -> dict:
    return {"truncation": series.truncation, "terms": terms_as_json(series.sorted_terms())}


def coeffs_text(coeffs: Sequence[int]) -> str:
    return ", ".join(str(c) for c in coeffs)


def coeffs_json(coeffs: Sequence[int]) -> dict:
    return {"truncation": len(coeffs) - 1, "coefficients": [str(c) for c in coeffs]}
