"""Truncated bivariate power series and the functional equations they solve.

BiSeries holds coefficients c[j][n] of t^j x^n as Fractions, truncated at
fixed orders.  The generating functions here mark semilength or size by x
and a path statistic by t:

  R(t, x):   skew Dyck paths, t marks UDL-factors, x marks semilength;
             x^2 R^3 - x(2-x) R^2 + (1-x^2) R - 1 + x + x^2 - t x^2 = 0
  C_k(x):    k-ary trees by node count, C = 1 + x C^k
  G_k(t, x): augmented k-Dyck paths, t marks long ascents,
             G = 1 + x G^k (G - 1 + t)
  F_k(t, x): k-box paths by long ascents, F = x G_(k+1)^k (G_(k+1) - 1 + t)
  H_k(t, x): k-box paths by returns, H = t x C^k / (1 - t x C^(k+1))
             with C = C_(k+2)

All fixed points are reached by iterating from 1 (or 0); every iteration
gains at least one order in x, so x_order + 1 rounds suffice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class BiSeries:
    """Polynomial truncation of a power series in t (outer) and x (inner)."""

    t_order: int
    x_order: int
    coeffs: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def build(t_order: int, x_order: int, terms=()) -> "BiSeries":
        """Series with the given (j, n, value) terms, zero elsewhere."""
        rows = [[Fraction(0)] * (x_order + 1) for _ in range(t_order + 1)]
        for j, n, value in terms:
            if j <= t_order and n <= x_order:
                rows[j][n] += Fraction(value)
        return BiSeries(t_order, x_order,
                        tuple(tuple(row) for row in rows))

    @staticmethod
    def constant(value, t_order: int, x_order: int) -> "BiSeries":
        return BiSeries.build(t_order, x_order, [(0, 0, value)])

    def coefficient(self, j: int, n: int) -> Fraction:
        """[t^j x^n], zero outside the truncation window."""
        if 0 <= j <= self.t_order and 0 <= n <= self.x_order:
            return self.coeffs[j][n]
        return Fraction(0)

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    def _same_orders(self, other: "BiSeries") -> None:
        if (self.t_order, self.x_order) != (other.t_order, other.x_order):
            raise ValueError("truncation orders differ")

    def __add__(self, other) -> "BiSeries":
        other = self._coerce(other)
        self._same_orders(other)
        return BiSeries(self.t_order, self.x_order, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other) -> "BiSeries":
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other) -> "BiSeries":
        return self._coerce(other) - self

    __radd__ = __add__

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.t_order, self.x_order, tuple(
            tuple(-a for a in row) for row in self.coeffs))

    def _coerce(self, other) -> "BiSeries":
        if isinstance(other, BiSeries):
            return other
        return BiSeries.constant(other, self.t_order, self.x_order)

    def __mul__(self, other) -> "BiSeries":
        other = self._coerce(other)
        self._same_orders(other)
        T, X = self.t_order, self.x_order
        rows = [[Fraction(0)] * (X + 1) for _ in range(T + 1)]
        for j1, row in enumerate(self.coeffs):
            for n1, a in enumerate(row):
                if a == 0:
                    continue
                for j2 in range(T + 1 - j1):
                    orow = other.coeffs[j2]
                    target = rows[j1 + j2]
                    for n2 in range(X + 1 - n1):
                        b = orow[n2]
                        if b:
                            target[n1 + n2] += a * b
        return BiSeries(T, X, tuple(tuple(r) for r in rows))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiSeries":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        out = BiSeries.constant(1, self.t_order, self.x_order)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def reciprocal(self) -> "BiSeries":
        """Inverse series; requires an invertible constant term."""
        c00 = self.coeffs[0][0]
        if c00 == 0:
            raise ZeroDivisionError("series has no constant term")
        T, X = self.t_order, self.x_order
        rows = [[Fraction(0)] * (X + 1) for _ in range(T + 1)]
        for n in range(X + 1):
            for j in range(T + 1):
                acc = Fraction(1) if (j, n) == (0, 0) else Fraction(0)
                for j2 in range(j + 1):
                    for n2 in range(n + 1):
                        if (j2, n2) == (j, n):
                            continue
                        b = rows[j2][n2]
                        if b:
                            acc -= self.coeffs[j - j2][n - n2] * b
                rows[j][n] = acc / c00
        return BiSeries(T, X, tuple(tuple(r) for r in rows))

    def truncated(self, t_order: int, x_order: int) -> "BiSeries":
        """Re-truncate (or zero-pad) to new orders."""
        return BiSeries(t_order, x_order, tuple(
            tuple(self.coefficient(j, n) for n in range(x_order + 1))
            for j in range(t_order + 1)))


def _t(T: int, X: int) -> BiSeries:
    return BiSeries.build(T, X, [(1, 0, 1)])


def _x(T: int, X: int) -> BiSeries:
    return BiSeries.build(T, X, [(0, 1, 1)])


def solve_skew_dyck_series(t_order: int, x_order: int) -> BiSeries:
    """R(t, x): [t^j x^n] counts skew Dyck paths of semilength n with j
    UDL-factors.  Solves the cubic rearranged as a contraction in R."""
    T, X = t_order, x_order
    t, x = _t(T, X), _x(T, X)
    one = BiSeries.constant(1, T, X)
    inv = (one - x * x).reciprocal()
    const = one - x - x * x + t * x * x
    R = one
    for _ in range(X + 1):
        R2 = R * R
        R = (const + x * (2 - x) * R2 - x * x * R2 * R) * inv
    return R


def skew_equation_residual(R: BiSeries) -> BiSeries:
    """x^2 R^3 - x(2-x) R^2 + (1-x^2) R - 1 + x + x^2 - t x^2."""
    T, X = R.t_order, R.x_order
    t, x = _t(T, X), _x(T, X)
    one = BiSeries.constant(1, T, X)
    R2 = R * R
    return (x * x * R2 * R - x * (2 - x) * R2 + (one - x * x) * R
            - one + x + x * x - t * x * x)


def tree_series(k: int, x_order: int, t_order: int = 0) -> BiSeries:
    """C_k(x) = 1 + x C_k(x)^k, counting k-ary trees by nodes."""
    if k < 1:
        raise ValueError("k must be >= 1")
    x = _x(t_order, x_order)
    C = BiSeries.constant(1, t_order, x_order)
    for _ in range(x_order + 1):
        C = 1 + x * C ** k
    return C


def tree_equation_residual(C: BiSeries, k: int) -> BiSeries:
    return C - 1 - _x(C.t_order, C.x_order) * C ** k


def augmented_long_ascent_series(k: int, t_order: int, x_order: int) -> BiSeries:
    """G_k(t, x) = 1 + x G^k (G - 1 + t): augmented k-Dyck paths by size (x)
    and long ascents (t)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    T, X = t_order, x_order
    t, x = _t(T, X), _x(T, X)
    G = BiSeries.constant(1, T, X)
    for _ in range(X + 1):
        G = 1 + x * G ** k * (G - 1 + t)
    return G


def augmented_long_ascent_residual(G: BiSeries, k: int) -> BiSeries:
    t, x = _t(G.t_order, G.x_order), _x(G.t_order, G.x_order)
    return G - 1 - x * G ** k * (G - 1 + t)


def long_ascent_series(k: int, t_order: int, x_order: int) -> BiSeries:
    """F_k(t, x): [t^j x^n] counts k-box paths of size n with j long ascents."""
    if k < 0:
        raise ValueError("k must be >= 0")
    T, X = t_order, x_order
    t, x = _t(T, X), _x(T, X)
    G = augmented_long_ascent_series(k + 1, T, X)
    return x * G ** k * (G - 1 + t)


def long_ascent_residual(F: BiSeries, G: BiSeries, k: int) -> BiSeries:
    """F_k - x G_(k+1)^k (G_(k+1) - 1 + t) for the pair (F_k, G_(k+1))."""
    t, x = _t(F.t_order, F.x_order), _x(F.t_order, F.x_order)
    return F - x * G ** k * (G - 1 + t)


def returns_series(k: int, t_order: int, x_order: int) -> BiSeries:
    """H_k(t, x): [t^j x^n] counts k-box paths of size n with j returns.

    H = t x C^k / (1 - t x C^(k+1)) where C = C_(k+2) counts the augmented
    (k+1)-Dyck prefixes between consecutive returns.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    T, X = t_order, x_order
    t, x = _t(T, X), _x(T, X)
    C = tree_series(k + 2, X, T)
    return (t * x * C ** k) * (1 - t * x * C ** (k + 1)).reciprocal()


def returns_residual(H: BiSeries, C: BiSeries, k: int) -> BiSeries:
    """H (1 - t x C^(k+1)) - t x C^k for the pair (H_k, C_(k+2))."""
    t, x = _t(H.t_order, H.x_order), _x(H.t_order, H.x_order)
    return H * (1 - t * x * C ** (k + 1)) - t * x * C ** k


def dump_coefficients(series: BiSeries) -> str:
    """Tab-separated triples j, n, value in row-major (n, then j) order."""
    lines = [f"{j}\t{n}\t{series.coefficient(j, n)}"
             for n in range(series.x_order + 1)
             for j in range(series.t_order + 1)]
    return "\n".join(lines) + "\n"
