"""Closed-form linear entropy of a free hydrogenic eigenstate.

S_lin = 1 - (product / V) where product = I_ang * I_rad factorizes the
momentum-space purity integral into an angular Wigner-3j sum and a radial
Gegenbauer-expansion sum whose bracket terms involve 3F2 values at unit
argument.  Reported for completeness only: the linear entropy carries no
operational meaning as an entanglement quantifier for these continuous
states (it tends to 1 for every eigenstate as V -> infinity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hydrogenic import QuantumNumbers
from .specfun import hyp3f2_unit, pochhammer, wigner3j


@dataclass(frozen=True)
class LinearEntropyResult:
    qn: QuantumNumbers
    i_ang: float          # dimensionless
    i_rad: float          # units a0^3
    product: float        # units a0^3

    def s_lin(self, volume: float | None = None) -> float:
        """1 - product/V; exactly 1 in the V -> infinity limit."""
        if volume is None or math.isinf(volume):
            return 1.0
        if volume <= 0:
            raise ValueError(f"volume must be positive, got {volume}")
        return 1.0 - self.product / volume


def angular_sum(l: int, m: int) -> float:
    """I_ang = sum_{l'} (2l+1)^2 (2l'+1)/(4 pi) 3j(l,l,l'; m,m,-2m)^2
    3j(l,l,l'; 0,0,0)^2, with l' running over 0..2l (selection rules kill the
    rest, including every odd l' in the second symbol)."""
    if abs(m) > l:
        raise ValueError(f"require |m| <= l, got l={l}, m={m}")
    total = Fraction(0)
    for lp in range(0, 2 * l + 1):
        w_m = wigner3j(l, l, lp, m, m, -2 * m).squared()
        if w_m == 0:
            continue
        w_0 = wigner3j(l, l, lp, 0, 0, 0).squared()
        if w_0 == 0:
            continue
        total += (2 * l + 1) ** 2 * (2 * lp + 1) * w_m * w_0
    return float(total) / (4.0 * math.pi)


@lru_cache(maxsize=None)
def _bracket(l: int, gamma: int) -> float:
    """The gamma-indexed bracket of the radial sum (depends on a+b+c+d only)."""
    g = Fraction(gamma)
    term_gamma = math.exp(
        (4 * l + gamma + 6) * math.log(2.0)
        + math.lgamma(2 * l + 1.5)
        + math.lgamma(2 * l + gamma + 6.5)
        - math.lgamma(4 * l + gamma + 8)
    )
    term_f1 = hyp3f2_unit(
        (Fraction(1, 2), Fraction(1), Fraction(-2 * l) - Fraction(1, 2)),
        (g / 2 + Fraction(7, 2), g / 2 + 4),
    ) / (gamma + 6)
    term_f2 = (gamma + 5) * hyp3f2_unit(
        (Fraction(1), -g / 2 - 2, -g / 2 - Fraction(3, 2)),
        (Fraction(3, 2), Fraction(2 * l) + Fraction(5, 2)),
    ) / (4 * l + 3)
    return term_gamma + term_f1 + term_f2


def _expansion_weights(n: int, l: int) -> list[Fraction]:
    """Weights W(gamma) = sum_{a+b+c+d=gamma} g_a g_b g_c g_d where the g_k
    are the (1-x)^k expansion coefficients of C^{l+1}_{n-l-1} divided by the
    common binomial prefactor (which is pulled into the radial prefactor)."""
    nn = n - l - 1
    g = [
        Fraction(math.comb(nn, k)) * pochhammer(n + l + 1, k) / pochhammer(Fraction(2 * l + 3, 2), k)
        * Fraction(-1, 2) ** k
        for k in range(nn + 1)
    ]
    # Fourth power of the polynomial sum g_k s^k by repeated convolution.
    w = [Fraction(1)]
    for _ in range(4):
        out = [Fraction(0)] * (len(w) + len(g) - 1)
        for i, wi in enumerate(w):
            if wi == 0:
                continue
            for j, gj in enumerate(g):
                out[i + j] += wi * gj
        w = out
    return w


def radial_sum(n: int, l: int, a0: float = 1.0) -> float:
    """I_rad = int_0^inf k^2 F_nl(k)^4 dk in units a0^3.

    The quadruple (a, b, c, d) sum collapses to a single sum over
    gamma = a+b+c+d because the bracket depends on gamma only; the multinomial
    weights come from the fourth power of the expansion polynomial.
    """
    if not (0 <= l < n):
        raise ValueError(f"require 0 <= l < n, got n={n}, l={l}")
    pref = (
        (2.0 / math.pi * math.factorial(n - l - 1) / math.factorial(n + l)) ** 2
        * math.factorial(l) ** 4
        * 2.0 ** (4 * l)
        * n ** 5
        * a0 ** 3
        * math.comb(n + l, n - l - 1) ** 4
    )
    total = sum(float(w) * _bracket(l, gamma)
                for gamma, w in enumerate(_expansion_weights(n, l)))
    return pref * total


def linear_entropy(qn: QuantumNumbers, a0: float = 1.0) -> LinearEntropyResult:
    """Angular and radial purity integrals and their product for (n, l, m)."""
    i_ang = angular_sum(qn.l, qn.m)
    i_rad = radial_sum(qn.n, qn.l, a0)
    return LinearEntropyResult(qn=qn, i_ang=i_ang, i_rad=i_rad, product=i_ang * i_rad)
