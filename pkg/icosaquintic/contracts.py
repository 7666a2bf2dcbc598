"""Data contracts shared by the solver, the certificate runner and the CLI."""

import enum as _enum
import json as _json
import time as _time
import typing as _typing

import attrs as _attrs

from .errors import InvalidInput


def _encode(obj: object) -> object:
    if isinstance(obj, JsonObject):
        return obj.data
    if isinstance(obj, _enum.Enum):
        return obj.value
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError(f"Cannot encode object of type {type(obj)}")


def _float_text(value: float) -> str:
    if value != value or value in (float("inf"), float("-inf")):
        return _json.dumps(value)
    text = format(value, ".17g")
    return text if "." in text or "e" in text else text + ".0"


def to_json(obj: object) -> str:
    """Serialize plain data that may contain complex numbers, enums and
    :class:`JsonObject` values.

    Floats are written with 17 significant digits.
    """
    if isinstance(obj, float):
        return _float_text(obj)
    if obj is None or isinstance(obj, (bool, int, str)):
        return _json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        items = (f"{_json.dumps(str(k), ensure_ascii=False)}: {to_json(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    return to_json(_encode(obj))


@_attrs.frozen
class JsonObject:
    """Base class for objects serialized to JSON.

    Complex numbers serialize as ``[re, im]`` and enums as their value.
    """

    @property
    def data(self) -> dict:
        """The fields of the object to be serialized."""
        return _attrs.asdict(self, recurse=False)

    def dumps(self) -> str:
        """Serialize the object to a JSON string."""
        return to_json(self)


def _as_pair(value: complex) -> complex:
    if isinstance(value, (list, tuple)):
        re, im = value
        return complex(float(re), float(im))
    return complex(value)


def _convert_coefficients(
    coefficients: _typing.Iterable[_typing.Union[complex, _typing.Sequence[float]]]
) -> _typing.Tuple[complex, ...]:
    coeffs = tuple(_as_pair(c) for c in coefficients)
    if len(coeffs) != 5:
        raise InvalidInput(f"A monic quintic needs 5 coefficients, got {len(coeffs)}")
    return coeffs


class Method(_enum.Enum):
    """Solution methods."""

    ICOSAHEDRAL = "icosahedral"
    """Tschirnhaus reduction, icosahedral inversion and root recovery."""
    SERIES = "series"
    """Power series for ``y⁵ − y + γ``."""
    ORACLE = "oracle"
    """Companion-matrix seeds refined by simultaneous iteration."""


def _convert_method(method: _typing.Union[str, Method]) -> Method:
    if isinstance(method, str):
        return Method(method.lower())
    return method


@_attrs.frozen
class SolveOptions:
    """Tolerances and switches for the solver.

    :param tolerance: Maximal relative residual of an accepted root.
    :param series_cutoff: ``|Z|`` above which the hypergeometric inverse is used.
    :param degeneracy: Relative threshold below which a quantity counts as zero.
    :param series_tol: Stopping tolerance of hypergeometric series.
    :param max_terms: Maximal number of series terms.
    :param aberth_max_iter: Maximal number of simultaneous iteration sweeps.
    :param seed: Seed of the initial circle perturbation.
    :param allow_fallback: Whether degenerate configurations fall back to the
        oracle instead of raising.
    """

    tolerance: float = 1e-6
    """Maximal relative residual of an accepted root."""
    series_cutoff: float = 1.25
    """``|Z|`` above which the hypergeometric inverse is used."""
    degeneracy: float = 1e-9
    """Relative threshold below which a quantity counts as zero."""
    series_tol: float = 1e-16
    """Stopping tolerance of hypergeometric series."""
    max_terms: int = 100_000
    """Maximal number of series terms."""
    aberth_max_iter: int = 500
    """Maximal number of simultaneous iteration sweeps."""
    seed: int = 0
    """Seed of the initial circle perturbation."""
    allow_fallback: bool = True
    """Whether degenerate configurations fall back to the oracle."""


@_attrs.frozen
class Certificate(JsonObject):
    """Outcome of an exact identity check.

    :param name: Name of the certificate.
    :param checks: Result of every sub-identity.
    :param elapsed: Wall time in seconds.
    """

    name: str
    """Name of the certificate."""
    checks: _typing.Dict[str, bool] = _attrs.field(factory=dict, converter=dict)
    """Result of every sub-identity."""
    elapsed: float = 0.0
    """Wall time in seconds."""

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def failures(self) -> _typing.List[str]:
        return [k for k, ok in self.checks.items() if not ok]

    @classmethod
    def collect(
        cls, name: str, checks: _typing.Iterable[_typing.Tuple[str, _typing.Callable[[], bool]]]
    ) -> "Certificate":
        """Run named checks in order and time them together."""
        start = _time.perf_counter()
        results = {key: bool(fn()) for key, fn in checks}
        return cls(name, results, _time.perf_counter() - start)

    @property
    def data(self) -> dict:
        return {"name": self.name, "passed": self.passed, **super().data}


@_attrs.frozen
class SolveRequest(JsonObject):
    """A monic quintic ``x⁵ + a1·x⁴ + a2·x³ + a3·x² + a4·x + a5`` to solve.

    :param coefficients: ``a1..a5`` as complex numbers or ``[re, im]`` pairs.
    :param method: Solution method.
    :param tolerance: Residual acceptance tolerance.
    """

    coefficients: _typing.Tuple[complex, ...] = _attrs.field(
        converter=_convert_coefficients
    )
    """``a1..a5``."""
    method: Method = _attrs.field(default=Method.ICOSAHEDRAL, converter=_convert_method)
    """Solution method."""
    tolerance: float = 1e-6
    """Residual acceptance tolerance."""

    @classmethod
    def from_json(cls, obj: _typing.Mapping[str, _typing.Any]) -> "SolveRequest":
        """Build a request from decoded JSON.

        :raises ValueError: On missing or malformed fields.
        """
        try:
            coefficients = obj["coefficients"]
        except KeyError:
            raise InvalidInput("Request has no 'coefficients' field") from None
        return cls(
            coefficients,
            method=obj.get("method", Method.ICOSAHEDRAL),
            tolerance=float(obj.get("tolerance", 1e-6)),
        )


@_attrs.frozen
class SolveResponse(JsonObject):
    """The five roots of a solved quintic with provenance.

    :param roots: Roots sorted by real then imaginary part.
    :param residuals: Relative residual of each root.
    :param canonical: ``alpha``, ``beta``, ``gamma`` of the canonical form.
    :param tschirnhaus: ``shift``, ``b1``, ``b2`` and ``trivial``.
    :param Z: The icosahedral invariant used, if any.
    :param branch: Branch metadata of the accepted root set, if any.
    :param method_used: Method that produced the roots.
    :param fallback_used: Whether the oracle replaced the requested method.
    """

    roots: _typing.List[complex] = _attrs.field(converter=list)
    """Roots sorted by real then imaginary part."""
    residuals: _typing.List[float] = _attrs.field(converter=list)
    """Relative residual of each root."""
    canonical: _typing.Optional[_typing.Dict[str, complex]] = None
    """``alpha``, ``beta``, ``gamma`` of the canonical form."""
    tschirnhaus: _typing.Optional[_typing.Dict[str, _typing.Any]] = None
    """``shift``, ``b1``, ``b2`` and ``trivial``."""
    Z: _typing.Optional[complex] = None
    """The icosahedral invariant used, if any."""
    branch: _typing.Optional[_typing.Dict[str, _typing.Any]] = None
    """Branch metadata of the accepted root set."""
    method_used: Method = Method.ICOSAHEDRAL
    """Method that produced the roots."""
    fallback_used: bool = False
    """Whether the oracle replaced the requested method."""

    @property
    def max_residual(self) -> float:
        return max(self.residuals)

    @property
    def data(self) -> dict:
        data = super().data
        data["max_residual"] = self.max_residual
        return data
