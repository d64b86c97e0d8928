"""Exact integer polynomial arithmetic and rational power-series expansion.

Two variable conventions are used throughout:

* BivarPoly: sparse polynomial in x and y, terms keyed by (x-degree, y-degree),
  with x tracking block count and y tracking set size.
* UnivarPoly: dense coefficient list in one variable (x for counting series,
  y for per-n size polynomials).

Everything here is exact; floats never appear.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


# ----------------------------------------------------------------------------
# Univariate polynomials: plain coefficient lists, trailing zeros trimmed.
# ----------------------------------------------------------------------------

def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class UnivarPoly:
    """Dense univariate polynomial over exact integers."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "UnivarPoly") -> "UnivarPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivarPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "UnivarPoly") -> "UnivarPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivarPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "UnivarPoly":
        return UnivarPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UnivarPoly") -> "UnivarPoly":
        if self.is_zero() or other.is_zero():
            return UnivarPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivarPoly(out)

    def scale(self, c: int) -> "UnivarPoly":
        return UnivarPoly([c * a for a in self.coeffs])

    def derivative(self) -> "UnivarPoly":
        return UnivarPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_int(self, x: int) -> int:
        r = 0
        for c in reversed(self.coeffs):
            r = r * x + c
        return r

    def eval_float(self, x: float) -> float:
        r = 0.0
        for c in reversed(self.coeffs):
            r = r * x + c
        return r

    def text(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            mag = abs(c)
            body = var if i == 1 else f"{var}^{i}"
            if mag != 1:
                body = f"{mag}{body}"
            parts.append(("-" if c < 0 else "+") + body if parts else
                         ("-" + body if c < 0 else body))
        out = parts[0]
        for p in parts[1:]:
            out += f" {p[0]} {p[1:]}" if p[0] in "+-" else f" + {p}"
        return out


@dataclass(frozen=True)
class UnivarRational:
    """Ratio of two integer polynomials with unit constant denominator term."""

    num: UnivarPoly
    den: UnivarPoly

    def __post_init__(self):
        if self.den[0] != 1:
            raise ValueError("denominator must have constant term 1")

    def series(self, n_max: int) -> list[int]:
        """Coefficients a_0 .. a_{n_max} of the power-series expansion."""
        out: list[int] = []
        d = self.den.coeffs
        for n in range(n_max + 1):
            v = self.num[n]
            for j in range(1, min(n, len(d) - 1) + 1):
                v -= d[j] * out[n - j]
            out.append(v)
        return out

    def text(self, var: str = "x") -> str:
        return f"({self.num.text(var)}) / ({self.den.text(var)})"


def reduce_fraction(r: UnivarRational) -> UnivarRational:
    """Cancel a common polynomial factor of num and den, keeping den[0] = 1.

    Uses the Euclidean algorithm over the rationals; returns the input
    unchanged when num and den are coprime.
    """
    if r.num.is_zero():
        return UnivarRational(UnivarPoly(), UnivarPoly([1]))

    def to_frac(p: UnivarPoly) -> list[Fraction]:
        return [Fraction(c) for c in p.coeffs]

    def frac_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
        a = a[:]
        while len(a) >= len(b) and any(a):
            if a[-1] == 0:
                a.pop()
                continue
            q = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[shift + i] -= q * bc
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        return a

    def frac_divexact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
        a = a[:]
        q = [Fraction(0)] * (len(a) - len(b) + 1)
        while len(a) >= len(b) and any(a):
            c = a[-1] / b[-1]
            q[len(a) - len(b)] = c
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[shift + i] -= c * bc
            while a and a[-1] == 0:
                a.pop()
        return q

    x, y = to_frac(r.num), to_frac(r.den)
    while y:
        x, y = y, frac_mod(x, y)
    gcd = x
    if len(gcd) <= 1:
        return r
    new_num = frac_divexact(to_frac(r.num), gcd)
    new_den = frac_divexact(to_frac(r.den), gcd)
    scale = new_den[0]
    new_num = [c / scale for c in new_num]
    new_den = [c / scale for c in new_den]
    if any(c.denominator != 1 for c in new_num + new_den):
        return r  # reduction would leave the integers; keep the stated form
    return UnivarRational(UnivarPoly([int(c) for c in new_num]),
                          UnivarPoly([int(c) for c in new_den]))


# ----------------------------------------------------------------------------
# Bivariate polynomials.
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class BivarPoly:
    """Sparse bivariate polynomial: {(x_deg, y_deg): coefficient}."""

    terms: Mapping[tuple[int, int], int]

    def __init__(self, terms: Mapping[tuple[int, int], int] = ()):
        frozen = {}
        for (i, j), c in dict(terms).items():
            if i < 0 or j < 0:
                raise ValueError("degrees must be nonnegative")
            if c:
                frozen[(int(i), int(j))] = int(c)
        object.__setattr__(self, "terms", frozen)

    @classmethod
    def constant(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    def __eq__(self, other) -> bool:
        if isinstance(other, BivarPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivarPoly(out)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return BivarPoly(out)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivarPoly(out)

    def derivative_x(self) -> "BivarPoly":
        return BivarPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i >= 1})

    def degree_x(self) -> int:
        return max((i for (i, _) in self.terms), default=-1)

    def coeff_of_x(self, n: int) -> UnivarPoly:
        """Coefficient of x^n, as a polynomial in y."""
        by_j: dict[int, int] = {}
        for (i, j), c in self.terms.items():
            if i == n:
                by_j[j] = c
        if not by_j:
            return UnivarPoly()
        out = [0] * (max(by_j) + 1)
        for j, c in by_j.items():
            out[j] = c
        return UnivarPoly(out)

    def substitute_y1(self) -> UnivarPoly:
        out: dict[int, int] = {}
        for (i, _j), c in self.terms.items():
            out[i] = out.get(i, 0) + c
        if not out:
            return UnivarPoly()
        dense = [0] * (max(out) + 1)
        for i, c in out.items():
            dense[i] = c
        return UnivarPoly(dense)

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms):
            c = self.terms[(i, j)]
            body = ""
            if i == 1:
                body += "x"
            elif i > 1:
                body += f"x^{i}"
            if j == 1:
                body += "y"
            elif j > 1:
                body += f"y^{j}"
            mag = abs(c)
            if not body:
                frag = str(mag)
            elif mag == 1:
                frag = body
            else:
                frag = f"{mag}{body}"
            parts.append(("- " if c < 0 else "+ ") + frag)
        head = parts[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + parts[1:])


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+)?\s*\*?\s*"
    r"(?P<xpart>x(?:\^(?P<xd>\d+))?)?\s*\*?\s*"
    r"(?P<ypart>y(?:\^(?P<yd>\d+))?)?"
)


def parse_bivar(text: str) -> BivarPoly:
    """Parse integer-coefficient terms like "1 + 2xy - 4x^2*y^3".

    Whitespace and explicit '*' separators are optional; bare 'x' or 'y'
    means exponent 1.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial literal")
    out: dict[tuple[int, int], int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:pos + 20]!r}")
        sign, coef, xpart, ypart = m.group("sign"), m.group("coef"), m.group("xpart"), m.group("ypart")
        if coef is None and xpart is None and ypart is None:
            raise ValueError(f"cannot parse polynomial near {s[pos:pos + 20]!r}")
        if sign is None and not first:
            raise ValueError(f"missing +/- before term near {s[pos:pos + 20]!r}")
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        i = int(m.group("xd")) if m.group("xd") else (1 if xpart else 0)
        j = int(m.group("yd")) if m.group("yd") else (1 if ypart else 0)
        out[(i, j)] = out.get((i, j), 0) + c
        pos = m.end()
        first = False
    return BivarPoly(out)


def parse_univar(text: str) -> UnivarPoly:
    """Parse a literal in x only (y not allowed)."""
    p = parse_bivar(text)
    if any(j for (_i, j) in p.terms):
        raise ValueError("literal contains y terms where a univariate was expected")
    return p.substitute_y1()


# ----------------------------------------------------------------------------
# Rational generating functions in two variables.
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalGF:
    """num/den with den(0, y) = 1, so the power series in x is well defined."""

    num: BivarPoly
    den: BivarPoly

    def __post_init__(self):
        if self.den.coeff_of_x(0).coeffs != (1,):
            raise ValueError("denominator must satisfy den(0, y) = 1")

    @classmethod
    def from_literals(cls, num: str, den: str, offset: int = 0) -> "RationalGF":
        """Build from term literals; a stated additive constant is folded into num."""
        n, d = parse_bivar(num), parse_bivar(den)
        if offset:
            n = n + d * BivarPoly.constant(offset)
        return cls(n, d)


def series_in_x(gf: RationalGF, n_max: int) -> list[UnivarPoly]:
    """Series coefficients c_0 .. c_{n_max}, each a polynomial in y.

    c_n = N_n - sum_{j=1..deg_x(den)} D_j * c_{n-j}, all exact.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    deg_den = gf.den.degree_x()
    dens = [gf.den.coeff_of_x(j) for j in range(deg_den + 1)]
    out: list[UnivarPoly] = []
    for n in range(n_max + 1):
        c = gf.num.coeff_of_x(n)
        for j in range(1, min(n, deg_den) + 1):
            c = c - dens[j] * out[n - j]
        out.append(c)
    return out


def specialize_y1(gf: RationalGF) -> UnivarRational:
    """Substitute y = 1, giving the plain counting series in x."""
    num = gf.num.substitute_y1()
    den = gf.den.substitute_y1()
    if den[0] != 1:
        raise ValueError("denominator constant term is not 1 after y = 1")
    return UnivarRational(num, den)


def recurrence_from_gf(r: UnivarRational) -> tuple[tuple[int, ...], int]:
    """Lag coefficients and first index from which they hold.

    For a_n the series of num/den with den = 1 - l_1 x - ... - l_r x^r,
    a_n = sum_i l_i a_{n-i} for every n > deg(num).
    """
    lags = tuple(-c for c in r.den.coeffs[1:])
    valid_from = r.num.degree + 1
    return lags, max(valid_from, 1)


def eval_recurrence(lags: Sequence[int], initial: Sequence[int], n: int) -> int:
    """a_n by exact iteration; `initial` supplies a_0 .. a_{m-1}.

    Terms whose index would be negative are skipped, matching the power
    series of a rational function whose numerator degree is below m.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if not initial:
        raise ValueError("at least one initial value is required")
    vals = [int(a) for a in initial]
    if n < len(vals):
        return vals[n]
    for m in range(len(vals), n + 1):
        acc = 0
        for i, lag in enumerate(lags, start=1):
            if m - i >= 0:
                acc += lag * vals[m - i]
        vals.append(acc)
    return vals[n]


def recurrence_sequence(lags: Sequence[int], initial: Sequence[int], n_max: int) -> list[int]:
    """a_0 .. a_{n_max} by exact iteration."""
    vals = [int(a) for a in initial[: n_max + 1]]
    for m in range(len(vals), n_max + 1):
        vals.append(sum(lag * vals[m - i] for i, lag in enumerate(lags, start=1) if m - i >= 0))
    return vals


def rational_from_recurrence(lags: Sequence[int], initial: Sequence[int]) -> UnivarRational:
    """The unique rational function whose series starts with `initial` and
    thereafter obeys the given lags: den = 1 - sum l_i x^i, num = den * series."""
    den = UnivarPoly([1] + [-int(l) for l in lags])
    num_coeffs = []
    for i, a in enumerate(initial):
        v = int(a)
        for j, lag in enumerate(lags, start=1):
            if i - j >= 0:
                v -= lag * int(initial[i - j])
        num_coeffs.append(v)
    return UnivarRational(UnivarPoly(num_coeffs), den)
