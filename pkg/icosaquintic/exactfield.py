"""Exact arithmetic in the cyclotomic field of fifth roots of unity.

Elements are stored in the basis ``{1, ε, ε², ε³}`` with ``ε = exp(2πi/5)``
and the reduction rule ``ε⁴ = -1 - ε - ε² - ε³``, so two elements are equal
exactly when their coordinates are equal. Coordinates are
:class:`fractions.Fraction` values.
"""

import cmath as _cmath
import fractions as _fractions
import math as _math
import typing as _typing

from .errors import DivisionByZero

Rat = _fractions.Fraction
"""Arbitrary precision rational, always in lowest terms."""

Scalar = _typing.Union[int, _fractions.Fraction, "CycQ"]

_EPS_POWERS = tuple(_cmath.exp(2j * _math.pi * k / 5) for k in range(5))
_ZERO = Rat(0)


def _reduce(v: _typing.Sequence[Rat]) -> _typing.Tuple[Rat, Rat, Rat, Rat]:
    """Fold a coefficient vector indexed by powers of ε onto the basis."""
    c = [_ZERO] * 5
    for k, x in enumerate(v):
        if x:
            c[k % 5] += x
    e4 = c[4]
    if e4:
        return (c[0] - e4, c[1] - e4, c[2] - e4, c[3] - e4)
    return (c[0], c[1], c[2], c[3])


class CycQ:
    """An element ``c0 + c1·ε + c2·ε² + c3·ε³`` of Q(ε).

    Integers and fractions mix freely with :class:`CycQ` in arithmetic.

    :param c0: Coefficient of 1.
    :param c1: Coefficient of ε.
    :param c2: Coefficient of ε².
    :param c3: Coefficient of ε³.
    """

    __slots__ = ("_c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0) -> None:
        self._c = (Rat(c0), Rat(c1), Rat(c2), Rat(c3))

    @classmethod
    def _make(cls, coords: _typing.Tuple[Rat, Rat, Rat, Rat]) -> "CycQ":
        obj = cls.__new__(cls)
        obj._c = coords
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> "CycQ":
        """Convert an integer, fraction or :class:`CycQ` to :class:`CycQ`."""
        if isinstance(value, CycQ):
            return value
        if isinstance(value, (int, _fractions.Fraction)):
            return cls._make((Rat(value), _ZERO, _ZERO, _ZERO))
        raise TypeError(f"Cannot convert {type(value)} to CycQ")

    @property
    def coords(self) -> _typing.Tuple[Rat, Rat, Rat, Rat]:
        """The basis coordinates ``(c0, c1, c2, c3)``."""
        return self._c

    @property
    def is_rational(self) -> bool:
        c = self._c
        return not (c[1] or c[2] or c[3])

    def to_fraction(self) -> Rat:
        """The rational value of the element.

        :raises ValueError: If the element is not rational.
        """
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    def __repr__(self) -> str:
        return "CycQ({})".format(", ".join(str(x) for x in self._c))

    def __str__(self) -> str:
        names = ("", "ε", "ε²", "ε³")
        parts = []
        for x, name in zip(self._c, names):
            if not x:
                continue
            if name and abs(x) == 1:
                body = name
            else:
                body = f"{abs(x)}{name}"
            sign = "-" if x < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self._c[0])
        return hash(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycQ):
            return self._c == other._c
        if isinstance(other, (int, _fractions.Fraction)):
            return self.is_rational and self._c[0] == other
        return NotImplemented

    def __bool__(self) -> bool:
        return any(self._c)

    def __neg__(self) -> "CycQ":
        c = self._c
        return CycQ._make((-c[0], -c[1], -c[2], -c[3]))

    def __pos__(self) -> "CycQ":
        return self

    def __add__(self, other: Scalar) -> "CycQ":
        if isinstance(other, CycQ):
            a, b = self._c, other._c
            return CycQ._make((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))
        if isinstance(other, (int, _fractions.Fraction)):
            a = self._c
            return CycQ._make((a[0] + other, a[1], a[2], a[3]))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "CycQ":
        if isinstance(other, (CycQ, int, _fractions.Fraction)):
            return self + (-CycQ.coerce(other))
        return NotImplemented

    def __rsub__(self, other: Scalar) -> "CycQ":
        if isinstance(other, (int, _fractions.Fraction)):
            return CycQ.coerce(other) - self
        return NotImplemented

    def _scale(self, k: Rat) -> "CycQ":
        a = self._c
        return CycQ._make((a[0] * k, a[1] * k, a[2] * k, a[3] * k))

    def __mul__(self, other: Scalar) -> "CycQ":
        if isinstance(other, (int, _fractions.Fraction)):
            return self._scale(Rat(other))
        if not isinstance(other, CycQ):
            return NotImplemented
        if other.is_rational:
            return self._scale(other._c[0])
        if self.is_rational:
            return other._scale(self._c[0])
        a, b = self._c, other._c
        prod = [_ZERO] * 7
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
        return CycQ._make(_reduce(prod))

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycQ":
        """Apply the field automorphism ``ε ↦ ε^k``.

        :param k: Exponent, not divisible by 5.
        """
        if k % 5 == 0:
            raise ValueError(f"ε ↦ ε^{k} is not an automorphism")
        v = [_ZERO] * 5
        for i, x in enumerate(self._c):
            v[(i * k) % 5] += x
        return CycQ._make(_reduce(v))

    def norm(self) -> Rat:
        """The field norm, the product of the four conjugates."""
        n = self * self.galois(2) * self.galois(3) * self.galois(4)
        return n.to_fraction()

    def inverse(self) -> "CycQ":
        """The multiplicative inverse.

        :raises DivisionByZero: If the element is zero.
        """
        if not self:
            raise DivisionByZero("Inverse of zero in Q(ε)")
        if self.is_rational:
            return CycQ._make((1 / self._c[0], _ZERO, _ZERO, _ZERO))
        co = self.galois(2) * self.galois(3) * self.galois(4)
        n = (self * co).to_fraction()
        return co._scale(1 / n)

    def __truediv__(self, other: Scalar) -> "CycQ":
        if isinstance(other, (int, _fractions.Fraction)):
            if other == 0:
                raise DivisionByZero("Division by zero in Q(ε)")
            return self._scale(1 / Rat(other))
        if isinstance(other, CycQ):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Scalar) -> "CycQ":
        if isinstance(other, (int, _fractions.Fraction)):
            return CycQ.coerce(other) * self.inverse()
        return NotImplemented

    def __pow__(self, exponent: int) -> "CycQ":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __complex__(self) -> complex:
        return embed_complex(self)


ZERO = CycQ()
ONE = CycQ(1)
EPSILON = CycQ(0, 1)
"""The primitive fifth root of unity ``exp(2πi/5)``."""
SQRT5 = CycQ(-1, 0, -2, -2)
"""The element ``1 + 2(ε + ε⁴)``, whose square is 5."""


def epsilon_power(k: int) -> CycQ:
    """Return ``ε^k`` for any integer ``k``."""
    v = [_ZERO] * 5
    v[k % 5] = Rat(1)
    return CycQ._make(_reduce(v))


def cyc_arith(a: Scalar, b: Scalar, op: str) -> CycQ:
    """Apply a field operation to two elements.

    :param a: Left operand.
    :param b: Right operand.
    :param op: One of ``"add"``, ``"sub"``, ``"mul"``, ``"div"``.
    :raises DivisionByZero: If ``op`` is ``"div"`` and ``b`` is zero.
    """
    x, y = CycQ.coerce(a), CycQ.coerce(b)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"Unknown operation: {op}")


def embed_complex(a: Scalar) -> complex:
    """The complex image of ``a`` under ``ε ↦ exp(2πi/5)``."""
    c = CycQ.coerce(a).coords
    return sum((float(x) * e for x, e in zip(c, _EPS_POWERS) if x), 0j)
