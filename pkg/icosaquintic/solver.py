"""The solving pipeline behind the command line.
"""
import logging as _logging
import typing as _typing

import attrs as _attrs
import numpy as _np

from . import bjseries as _bjseries
from . import quintic as _quintic
from . import recovery as _recovery
from ._aberth import newton_polish as _newton_polish
from ._aberth import sort_roots as _sort_roots
from .contracts import Method, SolveOptions, SolveRequest, SolveResponse
from .errors import DegenerateImage, InvalidInput

_logger = _logging.getLogger(__name__)


def _is_bring_jerrard(coefficients: _typing.Sequence[complex], tol: float = 1e-14) -> bool:
    a1, a2, a3, a4, _ = coefficients
    return max(abs(a1), abs(a2), abs(a3), abs(a4 + 1)) <= tol


class QuinticSolver:
    """Solve monic quintics by one of the :class:`~icosaquintic.contracts.Method`
    variants.

    :param options: Tolerances and switches. The tolerance of each request
        overrides ``options.tolerance``.
    """

    def __init__(self, options: SolveOptions = SolveOptions()) -> None:
        self._options = options

    @property
    def options(self) -> SolveOptions:
        return self._options

    def solve(self, request: SolveRequest) -> SolveResponse:
        """Solve the quintic of the request.

        :param request: Coefficients and method.
        :return: Roots sorted by real then imaginary part with residuals and
            provenance.
        :raises InvalidInput: If the series method is asked for a quintic not of
            the form ``x⁵ − x + γ``.
        :raises ~icosaquintic.errors.DegenerateInput: On repeated roots, or on
            a degenerate configuration when fallback is disabled.
        """
        options = _attrs.evolve(self._options, tolerance=request.tolerance)
        original = _quintic.GeneralQuintic(*request.coefficients)
        if request.method is Method.ORACLE:
            return self._oracle(original, options)
        if request.method is Method.SERIES:
            return self._series(original, options)
        return self._icosahedral(original, options)

    def solve_coefficients(
        self,
        coefficients: _typing.Sequence[complex],
        method: _typing.Union[str, Method] = Method.ICOSAHEDRAL,
    ) -> SolveResponse:
        """Shorthand for :meth:`solve` with the options' tolerance."""
        return self.solve(SolveRequest(coefficients, method, self._options.tolerance))

    def _response(
        self, original: _quintic.GeneralQuintic, roots: _typing.Iterable[complex], **kwargs: _typing.Any
    ) -> SolveResponse:
        roots = _sort_roots(roots)
        coeffs = original.coefficients
        residuals = [_quintic.relative_residual(coeffs, x) for x in roots]
        return SolveResponse([complex(x) for x in roots], residuals, **kwargs)

    def _oracle(
        self, original: _quintic.GeneralQuintic, options: SolveOptions, fallback: bool = False
    ) -> SolveResponse:
        roots = _recovery.oracle_roots(original.coefficients, options)
        return self._response(original, roots, method_used=Method.ORACLE, fallback_used=fallback)

    def _series(self, original: _quintic.GeneralQuintic, options: SolveOptions) -> SolveResponse:
        coeffs = original.coefficients
        if not _is_bring_jerrard(coeffs[1:]):
            raise InvalidInput("The series method needs a quintic of the form x⁵ − x + γ")
        gamma = complex(coeffs[5])
        first = _bjseries.bj_root_series(gamma, options.series_tol, options.max_terms)
        quartic, _ = _np.polydiv(coeffs, _np.array([1, -first], dtype=complex))
        rest = _recovery.oracle_roots(quartic, options)
        roots = _newton_polish(coeffs, _np.concatenate([[first], rest]))
        return self._response(original, roots, method_used=Method.SERIES)

    def _icosahedral(
        self, original: _quintic.GeneralQuintic, options: SolveOptions
    ) -> SolveResponse:
        try:
            canonical, record = _quintic.tschirnhaus_reduce(original)
        except DegenerateImage as exc:
            if not options.allow_fallback:
                raise
            _logger.warning("Falling back to the oracle: %s", exc)
            return self._oracle(original, options, fallback=True)
        provenance = {
            "canonical": {
                "alpha": canonical.alpha,
                "beta": canonical.beta,
                "gamma": canonical.gamma,
            },
            "tschirnhaus": {
                "shift": record.shift,
                "b1": record.b1,
                "b2": record.b2,
                "trivial": record.trivial,
            },
        }
        root_set = _recovery.solve_canonical(canonical, options)
        if root_set.fallback:
            response = self._oracle(original, options, fallback=True)
            return _attrs.evolve(response, **provenance)
        roots = [_quintic.tschirnhaus_back(y, record, options.tolerance) for y in root_set.roots]
        response = self._response(
            original,
            roots,
            Z=root_set.branch.Z,
            branch=root_set.branch.data,
            method_used=Method.ICOSAHEDRAL,
            **provenance,
        )
        if response.max_residual > options.tolerance and options.allow_fallback:
            _logger.warning(
                "Back-mapped roots miss by %.3g; using the oracle", response.max_residual
            )
            return _attrs.evolve(self._oracle(original, options, fallback=True), **provenance)
        return response
