"""Exact commutative base rings: integers, prime fields, and univariate
integer polynomials.

Every value is immutable and canonical: prime-field payloads live in
``[0, p)`` and polynomial coefficient tuples carry no trailing zeros.
"""

from __future__ import annotations

from dataclasses import dataclass


class RingMismatchError(ValueError):
    """Raised when two values from different rings are combined."""


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the base set below is exact for n < 3.3e24.
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _poly_trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add_payload(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _poly_trim(out)


def poly_mul_payload(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


class Ring:
    """Base class for ring descriptors.

    Subclasses implement payload-level arithmetic (used directly by the
    matrix algorithms) and wrap payloads into :class:`RingValue` for the
    public API.
    """

    label: str

    def value(self, payload) -> RingValue:
        return RingValue(self, self.canonical(payload))

    def from_int(self, k: int) -> RingValue:
        return self.value(self.int_payload(k))

    @property
    def zero(self) -> RingValue:
        return self.from_int(0)

    @property
    def one(self) -> RingValue:
        return self.from_int(1)

    # payload protocol
    def canonical(self, payload):
        raise NotImplementedError

    def int_payload(self, k: int):
        raise NotImplementedError

    def padd(self, a, b):
        raise NotImplementedError

    def pmul(self, a, b):
        raise NotImplementedError

    def pneg(self, a):
        raise NotImplementedError

    def psub(self, a, b):
        return self.padd(a, self.pneg(b))

    def is_zero_payload(self, a) -> bool:
        raise NotImplementedError

    def format_payload(self, a) -> str:
        raise NotImplementedError

    def parse_payload(self, token: str):
        raise NotImplementedError


@dataclass(frozen=True)
class IntegerRing(Ring):
    label = "int"

    def canonical(self, payload):
        if not isinstance(payload, int):
            raise TypeError(f"integer payload required, got {type(payload).__name__}")
        return payload

    def int_payload(self, k: int) -> int:
        return k

    def padd(self, a, b):
        return a + b

    def pmul(self, a, b):
        return a * b

    def pneg(self, a):
        return -a

    def psub(self, a, b):
        return a - b

    def is_zero_payload(self, a) -> bool:
        return a == 0

    def format_payload(self, a) -> str:
        return str(a)

    def parse_payload(self, token: str) -> int:
        return int(token)


@dataclass(frozen=True)
class PrimeField(Ring):
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def label(self) -> str:
        return f"mod:{self.p}"

    def canonical(self, payload):
        if not isinstance(payload, int):
            raise TypeError(f"integer payload required, got {type(payload).__name__}")
        return payload % self.p

    def int_payload(self, k: int) -> int:
        return k % self.p

    def padd(self, a, b):
        return (a + b) % self.p

    def pmul(self, a, b):
        return a * b % self.p

    def pneg(self, a):
        return -a % self.p

    def psub(self, a, b):
        return (a - b) % self.p

    def is_zero_payload(self, a) -> bool:
        return a == 0

    def format_payload(self, a) -> str:
        return str(a)

    def parse_payload(self, token: str) -> int:
        return int(token) % self.p


@dataclass(frozen=True)
class PolynomialRing(Ring):
    """Univariate polynomials with integer coefficients.

    Payloads are coefficient tuples, constant term first, with no trailing
    zeros; the zero polynomial is the empty tuple.
    """

    variable: str = "z"

    @property
    def label(self) -> str:
        return f"poly:{self.variable}"

    @property
    def gen(self) -> RingValue:
        return self.value((0, 1))

    def canonical(self, payload):
        if isinstance(payload, int):
            return _poly_trim((payload,))
        return _poly_trim(payload)

    def int_payload(self, k: int) -> tuple[int, ...]:
        return (k,) if k else ()

    def padd(self, a, b):
        return poly_add_payload(a, b)

    def pmul(self, a, b):
        return poly_mul_payload(a, b)

    def pneg(self, a):
        return tuple(-c for c in a)

    def is_zero_payload(self, a) -> bool:
        return not a

    def format_payload(self, a) -> str:
        if not a:
            return "0"
        return ",".join(str(c) for c in a)

    def parse_payload(self, token: str) -> tuple[int, ...]:
        return _poly_trim(int(part) for part in token.split(","))


class RingValue:
    """Immutable element of one of the rings above."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("RingValue is immutable")

    def _check(self, other: RingValue) -> None:
        if not isinstance(other, RingValue):
            raise TypeError(f"cannot combine RingValue with {type(other).__name__}")
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring.label} vs {other.ring.label}")

    def __add__(self, other: RingValue) -> RingValue:
        self._check(other)
        return RingValue(self.ring, self.ring.padd(self.payload, other.payload))

    def __sub__(self, other: RingValue) -> RingValue:
        self._check(other)
        return RingValue(self.ring, self.ring.psub(self.payload, other.payload))

    def __mul__(self, other: RingValue) -> RingValue:
        self._check(other)
        return RingValue(self.ring, self.ring.pmul(self.payload, other.payload))

    def __neg__(self) -> RingValue:
        return RingValue(self.ring, self.ring.pneg(self.payload))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingValue):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self):
        return hash((self.ring, self.payload))

    def is_zero(self) -> bool:
        return self.ring.is_zero_payload(self.payload)

    def __repr__(self):
        return f"<{self.ring.label}: {self.ring.format_payload(self.payload)}>"

    def __str__(self):
        return self.ring.format_payload(self.payload)


ZZ = IntegerRing()


def poly_degree(x: RingValue) -> int:
    """Degree of a polynomial value; the zero polynomial has degree -1."""
    if not isinstance(x.ring, PolynomialRing):
        raise ValueError("poly_degree requires a polynomial ring value")
    return len(x.payload) - 1


def poly_eval_at_zero(x: RingValue) -> RingValue:
    """Constant coefficient of a polynomial, as an integer ring value."""
    if not isinstance(x.ring, PolynomialRing):
        raise ValueError("poly_eval_at_zero requires a polynomial ring value")
    return ZZ.value(x.payload[0] if x.payload else 0)


def poly_is_monic(x: RingValue) -> bool:
    """True when the leading coefficient is 1.

    The constant polynomial 1 counts as monic; other constants do not.
    """
    if not isinstance(x.ring, PolynomialRing):
        raise ValueError("poly_is_monic requires a polynomial ring value")
    return bool(x.payload) and x.payload[-1] == 1


def parse_ring(label: str) -> Ring:
    """Parse a ring descriptor: ``int``, ``mod:p`` or ``poly:v``."""
    label = label.strip()
    if label == "int":
        return ZZ
    if label.startswith("mod:"):
        try:
            p = int(label[4:])
        except ValueError:
            raise ValueError(f"bad prime-field descriptor {label!r}") from None
        return PrimeField(p)
    if label.startswith("poly:"):
        var = label[5:]
        if not var:
            raise ValueError("polynomial ring descriptor needs a variable name")
        return PolynomialRing(var)
    raise ValueError(f"unknown ring descriptor {label!r}")
