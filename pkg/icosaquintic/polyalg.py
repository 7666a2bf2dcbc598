"""Sparse multivariate polynomials over Q(ε) and classical covariant operators.

A polynomial is a map from exponent tuples to nonzero :class:`CycQ`
coefficients over a fixed, ordered list of variable names. Polynomials on
different variable lists never mix implicitly.
"""

import fractions as _fractions
import math as _math
import operator as _operator
import typing as _typing

from .errors import (
    DegreeTooLow,
    DivisionByZero,
    NotDivisible,
    UnknownVariable,
    VariableMismatch,
)
from .exactfield import CycQ, Rat, Scalar, embed_complex

Exponents = _typing.Tuple[int, ...]


def _is_scalar(value: object) -> bool:
    return isinstance(value, (int, _fractions.Fraction, CycQ))


class MPoly:
    """A sparse polynomial with :class:`CycQ` coefficients.

    :param variables: Ordered variable names.
    :param terms: Map from exponent tuples to coefficients. Zero coefficients
        are dropped.
    """

    __slots__ = ("_vars", "_terms")

    def __init__(
        self,
        variables: _typing.Sequence[str],
        terms: _typing.Optional[_typing.Mapping[Exponents, Scalar]] = None,
    ) -> None:
        self._vars = tuple(variables)
        if len(set(self._vars)) != len(self._vars):
            raise VariableMismatch(f"Duplicate variable names: {self._vars}")
        clean: _typing.Dict[Exponents, CycQ] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self._vars):
                raise VariableMismatch(
                    f"Exponent vector {exps} does not match variables {self._vars}"
                )
            c = CycQ.coerce(coeff)
            if c:
                clean[exps] = c
        self._terms = clean

    @classmethod
    def _make(cls, variables: _typing.Tuple[str, ...], terms: dict) -> "MPoly":
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        return obj

    @classmethod
    def variable(cls, name: str, variables: _typing.Sequence[str]) -> "MPoly":
        """The polynomial consisting of the single variable ``name``."""
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariable(f"Unknown variable: {name}")
        exps = tuple(int(v == name) for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def constant(cls, value: Scalar, variables: _typing.Sequence[str]) -> "MPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def generators(cls, variables: _typing.Sequence[str]) -> _typing.Tuple["MPoly", ...]:
        """One polynomial per variable, in order."""
        return tuple(cls.variable(v, variables) for v in variables)

    @property
    def variables(self) -> _typing.Tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> _typing.Dict[Exponents, CycQ]:
        """A copy of the exponent to coefficient map."""
        return dict(self._terms)

    def items(self) -> _typing.ItemsView[Exponents, CycQ]:
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self._vars == other._vars and self._terms == other._terms
        if _is_scalar(other):
            return self == MPoly.constant(other, self._vars)  # type: ignore
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._vars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"MPoly({self._vars}, {self!s})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, reverse=True):
            coeff = self._terms[exps]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self._vars, exps) if e
            )
            if coeff.is_rational:
                c = coeff.to_fraction()
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else f"{mag}")
            else:
                sign = "+"
                body = f"({coeff})*{mono}" if mono else f"({coeff})"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def coefficient(self, exps: _typing.Sequence[int]) -> CycQ:
        """The coefficient of the monomial with the given exponents."""
        return self._terms.get(tuple(exps), CycQ())

    def index(self, var: str) -> int:
        try:
            return self._vars.index(var)
        except ValueError:
            raise UnknownVariable(f"Unknown variable: {var}") from None

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, variables: _typing.Iterable[str]) -> int:
        """Maximal total degree in a subset of the variables."""
        idx = [self.index(v) for v in variables]
        return max((sum(e[i] for i in idx) for e in self._terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def _check(self, other: "MPoly") -> None:
        if self._vars != other._vars:
            raise VariableMismatch(
                f"Variable lists differ: {self._vars} and {other._vars}"
            )

    def _lift(self, other: object) -> _typing.Optional["MPoly"]:
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if _is_scalar(other):
            return MPoly.constant(other, self._vars)  # type: ignore
        return None

    def __neg__(self) -> "MPoly":
        return MPoly._make(self._vars, {e: -c for e, c in self._terms.items()})

    def __add__(self, other: object) -> "MPoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in o._terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return MPoly._make(self._vars, terms)

    __radd__ = __add__

    def __sub__(self, other: object) -> "MPoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "MPoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, k: Scalar) -> "MPoly":
        """Multiply every coefficient by a scalar."""
        k = CycQ.coerce(k)
        if not k:
            return MPoly._make(self._vars, {})
        return MPoly._make(self._vars, {e: c * k for e, c in self._terms.items()})

    def __mul__(self, other: object) -> "MPoly":
        if _is_scalar(other):
            return self.scale(other)  # type: ignore
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        add = _operator.add
        acc: _typing.Dict[Exponents, CycQ] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(map(add, e1, e2))
                prev = acc.get(e)
                acc[e] = c1 * c2 if prev is None else prev + c1 * c2
        return MPoly._make(self._vars, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "MPoly":
        """Division by a nonzero scalar."""
        if not _is_scalar(other):
            return NotImplemented
        return self.scale(1 / CycQ.coerce(other))  # type: ignore

    def __pow__(self, exponent: int) -> "MPoly":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError(f"Negative exponent: {exponent}")
        result = MPoly.constant(1, self._vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def derivative(self, var: str, n: int = 1) -> "MPoly":
        """The ``n``-th formal partial derivative with respect to ``var``."""
        i = self.index(var)
        if n < 0:
            raise ValueError(f"Negative derivative order: {n}")
        terms = {}
        for e, c in self._terms.items():
            k = e[i]
            if k < n:
                continue
            factor = _math.factorial(k) // _math.factorial(k - n)
            ne = e[:i] + (k - n,) + e[i + 1 :]
            terms[ne] = c * factor
        return MPoly._make(self._vars, terms)

    def map_coefficients(self, fn: _typing.Callable[[CycQ], Scalar]) -> "MPoly":
        """Apply ``fn`` to every coefficient, e.g. a Galois automorphism."""
        return MPoly(self._vars, {e: fn(c) for e, c in self._terms.items()})

    def substitute(self, mapping: _typing.Mapping[str, "MPoly"]) -> "MPoly":
        """Replace variables by polynomials over a common variable list.

        Variables absent from ``mapping`` are kept and must occur in the
        target variable list.
        """
        if not mapping:
            return self
        images = list(mapping.values())
        target = images[0].variables
        for img in images[1:]:
            if img.variables != target:
                raise VariableMismatch("Substitution images use different variables")
        for name in mapping:
            self.index(name)
        subs = []
        for v in self._vars:
            if v in mapping:
                subs.append(mapping[v])
            elif v in target:
                subs.append(MPoly.variable(v, target))
            else:
                raise VariableMismatch(f"Variable {v} has no image in {target}")
        cache: _typing.Dict[_typing.Tuple[int, int], MPoly] = {}

        def power(i: int, k: int) -> MPoly:
            key = (i, k)
            if key not in cache:
                cache[key] = subs[i] if k == 1 else power(i, k - 1) * subs[i]
            return cache[key]

        result = MPoly._make(target, {})
        one = MPoly.constant(1, target)
        for e, c in self._terms.items():
            term = one
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term.scale(c)
        return result

    def at(self, point: _typing.Sequence[Scalar]) -> CycQ:
        """Exact value at a point of Q(ε)."""
        if len(point) != len(self._vars):
            raise VariableMismatch(
                f"Point of length {len(point)} for variables {self._vars}"
            )
        values = [CycQ.coerce(x) for x in point]
        total = CycQ()
        for e, c in self._terms.items():
            term = c
            for x, k in zip(values, e):
                if k:
                    term = term * x**k
            total = total + term
        return total

    def evaluate(self, point: _typing.Sequence[complex]) -> complex:
        """Floating point value at a complex point."""
        if len(point) != len(self._vars):
            raise VariableMismatch(
                f"Point of length {len(point)} for variables {self._vars}"
            )
        total = 0j
        for e, c in self._terms.items():
            term = embed_complex(c)
            for x, k in zip(point, e):
                if k:
                    term *= complex(x) ** k
            total += term
        return total

    def binary_coefficients(self) -> _typing.List[CycQ]:
        """Dense coefficients of a binary form, highest power of the first
        variable first.

        :raises VariableMismatch: If the polynomial is not in two variables.
        :raises ValueError: If the polynomial is not homogeneous.
        """
        if len(self._vars) != 2:
            raise VariableMismatch(f"Not a binary form: {self._vars}")
        if not self.is_homogeneous:
            raise ValueError("Binary form must be homogeneous")
        d = max(self.degree, 0)
        return [self.coefficient((d - k, k)) for k in range(d + 1)]


def poly_arith(a: MPoly, b: _typing.Union[MPoly, int], op: str) -> MPoly:
    """Apply ``"add"``, ``"sub"``, ``"mul"`` or ``"pow"``.

    For ``"pow"`` the second operand is the integer exponent.
    """
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise ValueError(f"Exponent must be a nonnegative integer, got {b!r}")
        return a**b
    if not isinstance(b, MPoly):
        raise TypeError(f"Expected MPoly, got {type(b)}")
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unknown operation: {op}")


def partial(p: MPoly, var: str) -> MPoly:
    return p.derivative(var)


def hessian_det(p: MPoly, v1: str, v2: str) -> MPoly:
    """The Hessian determinant ``p,11·p,22 − p,12·p,21``."""
    p1 = p.derivative(v1)
    p2 = p.derivative(v2)
    return p1.derivative(v1) * p2.derivative(v2) - p1.derivative(v2) * p2.derivative(v1)


def jacobian_det(p: MPoly, q: MPoly, v1: str, v2: str) -> MPoly:
    """The Jacobian determinant ``p,1·q,2 − p,2·q,1``."""
    p._check(q)
    return p.derivative(v1) * q.derivative(v2) - p.derivative(v2) * q.derivative(v1)


def _transvect(
    f: MPoly, g: MPoly, orders: _typing.Sequence[_typing.Tuple[_typing.Tuple[str, str], int]]
) -> MPoly:
    f._check(g)
    for pair, r in orders:
        if r < 0:
            raise ValueError(f"Negative transvectant order: {r}")
        for h in (f, g):
            if h and r > h.degree_in(pair):
                raise DegreeTooLow(f"Order {r} exceeds degree in {pair} of {h}")
    # Expand the product of per-pair operator sums.
    combos: _typing.List[_typing.Tuple[Rat, MPoly, MPoly]] = [(Rat(1), f, g)]
    for (x, y), r in orders:
        expanded = []
        for weight, df, dg in combos:
            for i in range(r + 1):
                w = Rat((-1) ** i, _math.factorial(i) * _math.factorial(r - i))
                ff = df.derivative(x, r - i).derivative(y, i)
                gg = dg.derivative(x, i).derivative(y, r - i)
                expanded.append((weight * w, ff, gg))
        combos = expanded
    result = MPoly._make(f.variables, {})
    for weight, ff, gg in combos:
        if ff and gg:
            result = result + (ff * gg).scale(weight)
    return result


def transvectant(
    f: MPoly, g: MPoly, r: int, pair: _typing.Optional[_typing.Tuple[str, str]] = None
) -> MPoly:
    """The ``r``-th transvectant of two binary forms.

    ``(f, g)_r = Σ (−1)^i / (i!(r−i)!) ∂^r f/∂x^(r−i)∂y^i · ∂^r g/∂x^i∂y^(r−i)``

    With this normalization ``(f, g)_1`` equals the Jacobian determinant.

    :param pair: The variable pair ``(x, y)``; defaults to the first two
        variables.
    :raises DegreeTooLow: If ``r`` exceeds the degree of ``f`` or ``g`` in the
        pair.
    """
    pair = pair or (f.variables[0], f.variables[1])
    return _transvect(f, g, [(pair, r)])


def transvectant_rs(
    f: MPoly,
    g: MPoly,
    r: int,
    s: int,
    lam: _typing.Optional[_typing.Tuple[str, str]] = None,
    mu: _typing.Optional[_typing.Tuple[str, str]] = None,
) -> MPoly:
    """The ``(r, s)`` transvectant on two variable pairs, bilinear over
    monomials: the ``r``-th transvectant in ``lam`` times the ``s``-th in
    ``mu``.

    :param lam: First pair, defaults to the first two variables.
    :param mu: Second pair, defaults to the third and fourth variables.
    """
    lam = lam or (f.variables[0], f.variables[1])
    mu = mu or (f.variables[2], f.variables[3])
    return _transvect(f, g, [(lam, r), (mu, s)])


def exact_divide(a: MPoly, b: MPoly) -> MPoly:
    """Return ``q`` with ``a = b·q``.

    Long division by leading terms in lexicographic order.

    :raises NotDivisible: If ``b`` does not divide ``a``.
    :raises DivisionByZero: If ``b`` is zero.
    """
    a._check(b)
    if not b:
        raise DivisionByZero("Polynomial division by zero")
    lead_b = max(b._terms)
    inv_lead = b._terms[lead_b].inverse()
    rem = dict(a._terms)
    quotient: _typing.Dict[Exponents, CycQ] = {}
    while rem:
        lead = max(rem)
        shift = tuple(x - y for x, y in zip(lead, lead_b))
        if min(shift) < 0:
            raise NotDivisible(f"{b} does not divide {a}")
        coeff = rem[lead] * inv_lead
        quotient[shift] = coeff
        for e, c in b._terms.items():
            ne = tuple(x + y for x, y in zip(e, shift))
            v = rem.get(ne, CycQ()) - c * coeff
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return MPoly._make(a.variables, quotient)


def evaluate(p: MPoly, point: _typing.Sequence[complex]) -> complex:
    return p.evaluate(point)


def substitute(p: MPoly, mapping: _typing.Mapping[str, MPoly]) -> MPoly:
    return p.substitute(mapping)
