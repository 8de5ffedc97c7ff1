#!/usr/bin/env python3
"""Regenerate src/golden_values.hpp from 50-digit mpmath evaluations.

    python3 tests/oracle/make_golden.py > src/golden_values.hpp
"""
import math

import mpmath as mp

mp.mp.dps = 50


def lit(v):
    if abs(v) < mp.mpf("1e-300"):
        return "0.0"
    return mp.nstr(v, 25, min_fixed=-1, max_fixed=-1, strip_zeros=False)


def erfcx(w):
    return mp.exp(w * w) * mp.erfc(w)


def real_points():
    xs = [-26, -20, -12, -8, -5, -3, -2, -1.5, -1, -0.5, -0.25, -1e-3]
    xs += [0.0, 1e-12, 1e-6, 1e-3, 0.01, 0.1, 0.25, 0.46875 - 2**-40, 0.46875, 0.46875 + 2**-40]
    xs += [k / 16 for k in range(1, 16 * 12 + 1)]
    xs += [math.sqrt(1200), 26.5, 27.0, 40.0]
    xs += [10 ** (1.1 + 0.37 * k) for k in range(30)]
    return sorted(set(xs))


def complex_points():
    res = [-4, -2, -1, -0.5, 0, 0.25, 0.5, 1, 1.5, 2, 3, 4, 5, 6, 7, 9, 12, 20, 50]
    ims = [0, 0.01, 0.3, 0.7, 1, 1.5, 2, 3, 4, 5, 6, 7, 8, 10, 15, 30, 100]
    pts = [complex(a, b) for a in res for b in ims]
    # Region boundaries of the complex kernel: |w| = 1 and |w| = 7.
    for radius in (1.0, 7.0):
        for scale in (1 - 1e-9, 1.0, 1 + 1e-9):
            for k in range(17):
                th = -math.pi / 2 + math.pi * k / 16
                pts.append(complex(radius * scale * math.cos(th), radius * scale * math.sin(th)))
    pts.append(complex(2, 3))
    return pts


print("// Generated by tests/oracle/make_golden.py (mpmath, 50 digits). Do not edit.")
print("#pragma once")
print()
print("#include <array>")
print()
print("namespace hegf::golden {")
print()
print("struct RealPoint {\n  double x;\n  double value;\n};")
print()
print("struct ComplexPoint {\n  double re;\n  double im;\n  double value_re;\n  double value_im;\n};")
print()
pts = real_points()
print(f"inline constexpr std::array<RealPoint, {len(pts)}> kErfcx{{{{")
for x in pts:
    print(f"    {{{x!r}, {lit(erfcx(mp.mpf(x)))}}},")
print("}};")
print()
ex = [k / 4 for k in range(-24, 105)]
print(f"inline constexpr std::array<RealPoint, {len(ex)}> kErfc{{{{")
for x in ex:
    print(f"    {{{x!r}, {lit(mp.erfc(mp.mpf(x)))}}},")
print("}};")
print()
cp = complex_points()
print(f"inline constexpr std::array<ComplexPoint, {len(cp)}> kErfcxComplex{{{{")
for w in cp:
    v = erfcx(mp.mpc(w.real, w.imag))
    print(f"    {{{w.real!r}, {w.imag!r}, {lit(v.real)}, {lit(v.imag)}}},")
print("}};")
print()
print("}  // namespace hegf::golden")
