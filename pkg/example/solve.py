"""Solve a quintic through the icosahedron and plot where its roots come from.

The left panel shows the roots next to the companion-matrix roots, the right
panel the 60 preimages of the invariant ``Z`` on the sphere, with the one
used for recovery highlighted.
"""

import numpy as np
from matplotlib import pyplot as plt

from icosaquintic import *
from icosaquintic.inverter import icos_equation_roots

if __name__ == "__main__":
    coeffs = [0.3 - 0.1j, -1, 0.5j, 2, -0.7 + 0.4j]
    solver = QuinticSolver(SolveOptions(tolerance=1e-9))
    response = solver.solve(SolveRequest(coeffs))
    print(response.dumps())

    roots = np.array(response.roots)
    reference = np.roots([1, *coeffs])

    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(10, 5))
    ax0.scatter(reference.real, reference.imag, s=120, facecolors="none", edgecolors="C0", label="np.roots")
    ax0.scatter(roots.real, roots.imag, marker="x", color="C1", label=response.method_used.value)
    ax0.set_title("Roots")
    ax0.set_aspect("equal")
    ax0.legend()

    if response.Z is not None:
        preimages = icos_equation_roots(response.Z)
        used = response.branch["z"]
        ax1.scatter(preimages.real, preimages.imag, s=10, color="C2")
        ax1.scatter([used.real], [used.imag], s=80, color="C3")
        ax1.set_title(f"I(z) = {response.Z:.4g}")
        ax1.set_xlim(-3, 3)
        ax1.set_ylim(-3, 3)
        ax1.set_aspect("equal")
    plt.show()
