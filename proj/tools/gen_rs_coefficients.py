#!/usr/bin/env python3
"""Regenerates the Riemann-Siegel correction polynomials in core/src/riemann_siegel_tables.inc.

Each C_k(p) is expanded as a polynomial in x = p - 1/2 from the Taylor series of
Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) computed at 80 digits.
"""
import mpmath as mp

mp.mp.dps = 80
DEGREE = 48
TAYLOR = DEGREE + 14


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


a = mp.taylor(psi, mp.mpf(1) / 2, TAYLOR)


def deriv(j):
    """Taylor coefficients of the j-th derivative of Psi about p = 1/2."""
    return [mp.factorial(n + j) / mp.factorial(n) * a[n + j] for n in range(DEGREE + 1)]


pi = mp.pi
terms = [
    [(0, mp.mpf(1))],
    [(3, -1 / (96 * pi**2))],
    [(2, 1 / (64 * pi**2)), (6, 1 / (18432 * pi**4))],
    [(1, -1 / (64 * pi**2)), (5, -1 / (3840 * pi**4)), (9, -1 / (5308416 * pi**6))],
    [(0, 1 / (128 * pi**2)), (4, 19 / (24576 * pi**4)), (8, 11 / (5898240 * pi**6)),
     (12, 1 / (2038431744 * pi**8))],
]

print("// Generated by tools/gen_rs_coefficients.py; do not edit.")
print("// Coefficients of C_k(p) as polynomials in x = p - 1/2, ascending powers.")
print(f"inline constexpr int kRsDegree = {DEGREE};")
print("inline constexpr double kRsCoefficients[5][kRsDegree + 1] = {")
for k, combo in enumerate(terms):
    poly = [mp.mpf(0)] * (DEGREE + 1)
    for j, w in combo:
        d = deriv(j)
        for n in range(DEGREE + 1):
            poly[n] += w * d[n]
    tail = sum(abs(poly[n]) * mp.mpf(0.5) ** n for n in range(DEGREE - 6, DEGREE + 1))
    print(f"    {{  // C{k}, tail at |x|=1/2: {mp.nstr(tail, 3)}")
    for n in range(DEGREE + 1):
        print(f"        {mp.nstr(poly[n], 20, min_fixed=-1, max_fixed=-1)},")
    print("    },")
print("};")
