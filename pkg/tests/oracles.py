"""Independent oracles used by the test suite.

These deliberately avoid the package's own evaluation paths: Bessel values
come from a high-precision power series evaluated with mpmath arbitrary
precision arithmetic (and zeros from bisection on that series), reference
gamma values from mpmath, and brute-force integrals from a plain midpoint
rule on numpy arrays.
"""

from __future__ import annotations

import mpmath as mp
import numpy as np


def series_j(nu: float, x: float, dps: int = 40) -> float:
    """J_nu(x) by direct summation of the ascending series at high precision."""
    return float(_series_j_mp(nu, x, dps))


def _series_j_mp(nu, x, dps):
    """Series tail of J_nu(x) as an mpmath value (shared by the zero finder)."""
    with mp.workdps(dps):
        nu_mp = mp.mpf(nu)
        x_mp = mp.mpf(x)
        if x_mp == 0:
            return mp.mpf(1) if nu == 0 else mp.mpf(0)
        half = x_mp / 2
        term = half**nu_mp / mp.gamma(nu_mp + 1)
        total = term
        q = half * half
        k = 0
        while True:
            k += 1
            term *= -q / (k * (nu_mp + k))
            total += term
            if abs(term) < mp.mpf(10) ** (-dps) * (1 + abs(total)) and k > float(x) / 2:
                return total


def zero_by_bisection(nu: float, j: int, dps: int = 40) -> float:
    """j-th positive zero of J_nu: sign scan + bisection on the series oracle."""
    with mp.workdps(dps):
        f = lambda t: _series_j_mp(nu, t, dps)  # noqa: E731 - local shorthand
        step = mp.mpf(0.25)
        x = mp.mpf(max(nu, 1e-6)) + mp.mpf("1e-6")
        fx = f(x)
        found = 0
        while True:
            x2 = x + step
            fx2 = f(x2)
            if fx * fx2 < 0:
                found += 1
                if found == j:
                    lo, hi = x, x2
                    flo = fx
                    break
            x, fx = x2, fx2
        for _ in range(150):
            mid = (lo + hi) / 2
            fm = f(mid)
            if fm == 0:
                return float(mid)
            if flo * fm < 0:
                hi = mid
            else:
                lo, flo = mid, fm
            if hi - lo < mp.mpf(10) ** (-25):
                break
        return float((lo + hi) / 2)


def gamma_ref(x: float) -> float:
    with mp.workdps(40):
        return float(mp.gamma(mp.mpf(x)))


def besselj_ref(nu: float, x: float) -> float:
    with mp.workdps(40):
        return float(mp.besselj(mp.mpf(nu), mp.mpf(x)))


def midpoint(f, a: float, b: float, panels: int, chunk: int = 262144) -> float:
    """Plain midpoint rule; f must accept numpy arrays."""
    h = (b - a) / panels
    total = 0.0
    for start in range(0, panels, chunk):
        stop = min(start + chunk, panels)
        mids = a + (np.arange(start, stop, dtype=float) + 0.5) * h
        total += float(np.sum(np.asarray(f(mids), dtype=float)))
    return total * h
