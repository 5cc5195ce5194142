#!/usr/bin/env python3
"""Derive the frozen Pareto-front constants used by src/problems/zdt.cpp.

ZDT3: the nondominated f1 intervals of h(f1) = 1 - sqrt(f1) - f1*sin(10*pi*f1).
An interval ends at a local minimum of h; the next one starts where h first
drops back below that minimum value.

ZDT6: the smallest attainable f1 = 1 - exp(-4 x) sin(6 pi x)^6 over x in [0, 1].
"""
import math

from scipy.optimize import brentq, minimize_scalar

TOL = 1e-10


def h3(f):
    return 1.0 - math.sqrt(f) - f * math.sin(10.0 * math.pi * f)


def dh3(f):
    return (-0.5 / math.sqrt(f) - math.sin(10.0 * math.pi * f)
            - 10.0 * math.pi * f * math.cos(10.0 * math.pi * f))


def zdt3_intervals():
    grid = [i / 200000.0 for i in range(1, 200001)]
    # local minima of h: sign change of dh from - to +
    minima = []
    for a, b in zip(grid, grid[1:]):
        if dh3(a) < 0.0 <= dh3(b):
            minima.append(brentq(dh3, a, b, xtol=TOL, rtol=1e-15))
    intervals = []
    start = 0.0
    best = h3(minima[0]) if minima else 0.0
    for k, m in enumerate(minima):
        if k > 0:
            # start of this interval: first f1 after the previous minimum where h < best
            prev = intervals[-1][1]
            a = prev
            step = 1e-5
            while h3(a) >= best and a < m:
                a += step
            if a >= m:
                continue
            start = brentq(lambda f: h3(f) - best, a - step, a, xtol=TOL, rtol=1e-15)
        intervals.append((start, m))
        best = min(best, h3(m))
    return intervals


def zdt6_min_f1():
    f = lambda x: 1.0 - math.exp(-4.0 * x) * math.sin(6.0 * math.pi * x) ** 6
    # global minimum sits at the first peak of sin^6, near x = 1/12
    r = minimize_scalar(f, bounds=(0.0, 1.0 / 6.0), method="bounded", options={"xatol": TOL})
    # stationary point in closed form: tan(6 pi x) = 9 pi
    x = math.atan(9.0 * math.pi) / (6.0 * math.pi)
    assert abs(f(x) - r.fun) < 1e-9
    return f(x)


if __name__ == "__main__":
    for lo, hi in zdt3_intervals():
        print(f"zdt3 interval {lo:.15f} {hi:.15f}")
    print(f"zdt6 min f1 {zdt6_min_f1():.15f}")
