"""Time the icosahedral solver against the oracle on random quintics."""

from time import perf_counter

import numpy as np

from icosaquintic import *
from icosaquintic.recovery import match_roots

N = 1000

if __name__ == "__main__":
    rng = np.random.default_rng(0)
    solver = QuinticSolver()
    fallbacks = 0
    worst = 0.0
    t_ico = t_oracle = 0.0
    for i in range(N):
        coeffs = rng.normal(size=5) + 1j * rng.normal(size=5)
        t0 = perf_counter()
        response = solver.solve_coefficients(coeffs)
        t1 = perf_counter()
        oracle = solver.solve_coefficients(coeffs, Method.ORACLE)
        t2 = perf_counter()
        t_ico += t1 - t0
        t_oracle += t2 - t1
        fallbacks += response.fallback_used
        worst = max(worst, match_roots(oracle.roots, response.roots)[1])
        if (i + 1) % 100 == 0:
            print(f"{i + 1:5d}  fallbacks {fallbacks}  worst distance {worst:.2e}")
    print(f"icosahedral {t_ico / N * 1e3:.2f} ms, oracle {t_oracle / N * 1e3:.2f} ms per quintic")
