"""Solve quintic equations through the icosahedron.

A monic quintic is reduced by a quadratic Tschirnhaus substitution to
``y⁵ + 5αy² + 5βy + γ``. Its root vector then lies on a quadric that is a
product of two projective lines, and the icosahedral invariant ``Z`` of
either line is a closed-form function of ``α, β, γ`` and a square root of
the discriminant. Inverting ``Z = H³/(1728 f⁵)`` gives a point on the sphere
from which the five roots are recovered with rational functions.

Every closed-form identity the pipeline relies on is checked in exact
arithmetic over ``Q(ε)``, see :mod:`icosaquintic.certify`.

.. note::
    Quintics with repeated roots, and canonical quintics whose line
    invariants vanish, are degenerate for the icosahedral method. The solver
    falls back to a numeric root finder for the latter unless told not to.
"""

from .bjseries import bj_root_series, bring_jerrard_plus_root, fuss_catalan, raney_count
from .contracts import Certificate, Method, SolveOptions, SolveRequest, SolveResponse
from .errors import (
    DegenerateConfiguration,
    DegenerateImage,
    DegenerateInput,
    InvalidInput,
    NoConvergence,
    QuinticError,
    RepeatedRoots,
)
from .exactfield import CycQ
from .icosa import icos_I
from .invariantmap import icosahedral_invariants
from .inverter import invert_icosahedral
from .polyalg import MPoly
from .quintic import CanonicalQuintic, GeneralQuintic, tschirnhaus_reduce
from .recovery import oracle_roots, solve_canonical
from .solver import QuinticSolver

__all__ = [
    "QuinticSolver",
    "Certificate",
    "Method",
    "SolveOptions",
    "SolveRequest",
    "SolveResponse",
    "CycQ",
    "MPoly",
    "GeneralQuintic",
    "CanonicalQuintic",
    "tschirnhaus_reduce",
    "icos_I",
    "icosahedral_invariants",
    "invert_icosahedral",
    "solve_canonical",
    "oracle_roots",
    "bj_root_series",
    "bring_jerrard_plus_root",
    "fuss_catalan",
    "raney_count",
    "QuinticError",
    "DegenerateInput",
    "RepeatedRoots",
    "DegenerateConfiguration",
    "DegenerateImage",
    "InvalidInput",
    "NoConvergence",
]
