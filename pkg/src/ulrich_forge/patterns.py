"""Finite-difference certificates: stabilized differences, exact polynomial
fits for integer sequences, and exact limits of ratios of fitted polynomials.

Every "limit" the toolkit reports as exact is backed by one of these
certificates; anything else is flagged as finite-index evidence.
"""
from __future__ import annotations

from fractions import Fraction


class InconclusiveError(RuntimeError):
    """A stabilization search ran out of budget; carries the raw table."""

    def __init__(self, message: str, table=None):
        super().__init__(message)
        self.table = table


def forward_differences(values) -> list[list]:
    levels = [list(values)]
    while len(levels[-1]) > 1:
        prev = levels[-1]
        levels.append([b - a for a, b in zip(prev, prev[1:])])
    return levels


def stabilized_difference(values, order: int, window: int = 3):
    """The constant value of the order-th difference, certified by the last
    `window` entries agreeing; None when not (yet) stabilized."""
    if len(values) < order + window:
        return None
    level = list(values)
    for _ in range(order):
        level = [b - a for a, b in zip(level, level[1:])]
    tail = level[-window:]
    if len(tail) == window and all(x == tail[0] for x in tail):
        return tail[0]
    return None


def _binomial_poly(j: int, offset: int) -> list[Fraction]:
    """Coefficients (low to high) of C(n - offset, j) as a polynomial in n."""
    coeffs = [Fraction(1)]
    for i in range(j):
        root = offset + i
        new = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] += c
            new[k] -= c * root
        coeffs = new
    return [c / Fraction(_factorial(j)) for c in coeffs]


def _factorial(j: int) -> int:
    out = 1
    for i in range(2, j + 1):
        out *= i
    return out


def fit_polynomial(values, start_index: int = 1, min_tail: int = 4):
    """Exact polynomial (coefficients low to high, in the index variable)
    reproducing an integer sequence, certified by a constant difference level
    holding over at least `min_tail` entries; None when no level is constant.
    """
    if len(values) < min_tail:
        return None
    levels = forward_differences(values)
    for k, level in enumerate(levels):
        if len(level) >= min_tail and all(x == level[0] for x in level):
            coeffs = [Fraction(0)] * (k + 1)
            for j in range(k + 1):
                delta = levels[j][0]
                for idx, c in enumerate(_binomial_poly(j, start_index)):
                    coeffs[idx] += delta * c
            for n, v in enumerate(values):
                if poly_eval(coeffs, start_index + n) != v:
                    return None
            return tuple(coeffs)
    return None


def poly_eval(coeffs, n: int) -> Fraction:
    out = Fraction(0)
    power = Fraction(1)
    for c in coeffs:
        out += c * power
        power *= n
    return out


def poly_degree(coeffs) -> int:
    deg = -1
    for i, c in enumerate(coeffs):
        if c != 0:
            deg = i
    return deg


def ratio_limit(num_coeffs, den_coeffs):
    """Exact limit of num(n)/den(n) as n grows; None when the ratio diverges."""
    dn, dd = poly_degree(num_coeffs), poly_degree(den_coeffs)
    if dd == -1:
        raise ZeroDivisionError("zero denominator sequence")
    if dn == -1:
        return Fraction(0)
    if dn < dd:
        return Fraction(0)
    if dn == dd:
        return Fraction(num_coeffs[dn]) / Fraction(den_coeffs[dd])
    return None


def format_poly_in_n(coeffs, var: str = "n") -> str:
    deg = poly_degree(coeffs)
    if deg == -1:
        return "0"
    parts = []
    for i in range(deg, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{c}*{mono}"
        else:
            body = str(c)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_ratio(num_coeffs, den_coeffs, var: str = "n") -> str:
    num = format_poly_in_n(num_coeffs, var)
    den = format_poly_in_n(den_coeffs, var)
    if den == "1":
        return num
    num_s = num if ("+" not in num and "- " not in num) else f"({num})"
    den_s = den if ("+" not in den and "- " not in den) else f"({den})"
    return f"{num_s}/{den_s}"
