"""Exact scalar arithmetic in Z[w] with denominators sqrt(2)^k, w = exp(i*pi/4).

A scalar is (a + b*w + c*w**2 + d*w**3) / sqrt(2)**k with integer a, b, c, d
and k >= 0.  The imaginary unit is w**2 and sqrt(2) = w - w**3, so every
matrix entry used in this package (0, +-1, +-i, 1/sqrt(2) multiples, powers
of w) is represented without rounding.
"""

from __future__ import annotations

import math

_SQRT_HALF = math.sqrt(0.5)


def _divisible_by_sqrt2(a: int, b: int, c: int, d: int) -> bool:
    # (a,b,c,d) is sqrt2*(integer vector) iff a == c and b == d mod 2
    return (a - c) % 2 == 0 and (b - d) % 2 == 0


class RingScalar:
    """Immutable canonical scalar; k is reduced until the numerator is not divisible by sqrt(2)."""

    __slots__ = ("a", "b", "c", "d", "k")

    def __init__(self, a: int = 0, b: int = 0, c: int = 0, d: int = 0, k: int = 0):
        if k < 0:
            raise ValueError("denominator exponent must be non-negative")
        if a == b == c == d == 0:
            k = 0
        else:
            while k > 0 and _divisible_by_sqrt2(a, b, c, d):
                # quotient by sqrt2: multiply by (w - w**3) and halve every slot
                a, b, c, d = (b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2
                k -= 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("RingScalar is immutable")

    def to_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingScalar):
            return NotImplemented
        return self.to_tuple() == other.to_tuple()

    def __hash__(self) -> int:
        return hash(self.to_tuple())

    def is_zero(self) -> bool:
        return self.a == self.b == self.c == self.d == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> "RingScalar":
        return RingScalar(-self.a, -self.b, -self.c, -self.d, self.k)

    def __add__(self, other: "RingScalar") -> "RingScalar":
        x, y = self, other
        if x.k < y.k:
            x, y = y, x
        a, b, c, d = y.a, y.b, y.c, y.d
        for _ in range(x.k - y.k):
            # scale the smaller-k numerator up by sqrt2
            a, b, c, d = b - d, a + c, b + d, c - a
        return RingScalar(x.a + a, x.b + b, x.c + c, x.d + d, x.k)

    def __sub__(self, other: "RingScalar") -> "RingScalar":
        return self + (-other)

    def __mul__(self, other: "RingScalar") -> "RingScalar":
        a0, a1, a2, a3 = self.a, self.b, self.c, self.d
        b0, b1, b2, b3 = other.a, other.b, other.c, other.d
        # w**4 = -1 wraps the cross terms with a sign
        return RingScalar(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self.k + other.k,
        )

    def __pow__(self, n: int) -> "RingScalar":
        if n < 0:
            inv = try_div(ONE, self)
            if inv is None:
                raise ValueError("negative power of a non-invertible scalar")
            return inv ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "RingScalar":
        """Complex conjugate (w -> -w**3, w**2 -> -w**2, w**3 -> -w)."""
        return RingScalar(self.a, -self.d, -self.c, -self.b, self.k)

    def abs2(self) -> "RingScalar":
        """Squared modulus x * conj(x); always real (c == 0, d == -b in canonical form)."""
        return self * self.conj()

    def is_unit(self) -> bool:
        return self.abs2() == ONE

    def to_complex(self) -> complex:
        s = _SQRT_HALF
        re = self.a + (self.b - self.d) * s
        im = self.c + (self.b + self.d) * s
        z = complex(re, im)
        half, odd = divmod(self.k, 2)
        z /= 2.0 ** half
        if odd:
            z *= s
        return z

    def __repr__(self) -> str:
        return f"RingScalar({self.a}, {self.b}, {self.c}, {self.d}, k={self.k})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for coef, sym in ((self.a, ""), (self.b, "w"), (self.c, "w^2"), (self.d, "w^3")):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else ("+" if parts else "")
            mag = abs(coef)
            body = sym if (mag == 1 and sym) else (f"{mag}{sym}" if sym else str(mag))
            parts.append(f"{sign}{body}")
        num = "".join(parts)
        if self.k == 0:
            return num
        if len(parts) > 1 or num.startswith("-"):
            num = f"({num})"
        return f"{num}/sqrt2^{self.k}"


ZERO = RingScalar()
ONE = RingScalar(1)
MINUS_ONE = RingScalar(-1)
OMEGA = RingScalar(0, 1)
I_UNIT = RingScalar(0, 0, 1)
SQRT2 = RingScalar(0, 1, 0, -1)
INV_SQRT2 = RingScalar(1, 0, 0, 0, 1)
HALF = RingScalar(1, 0, 0, 0, 2)


def from_int(n: int) -> RingScalar:
    return RingScalar(n)


def i_power(s: int) -> RingScalar:
    """i**s as a ring scalar."""
    return (ONE, I_UNIT, MINUS_ONE, -I_UNIT)[s % 4]


def omega_power(s: int) -> RingScalar:
    """w**s as a ring scalar (w**8 = 1)."""
    s %= 8
    base = (RingScalar(1), RingScalar(0, 1), RingScalar(0, 0, 1), RingScalar(0, 0, 0, 1))
    x = base[s % 4]
    return -x if s >= 4 else x


def try_div(x: RingScalar, y: RingScalar) -> RingScalar | None:
    """Exact quotient x / y when it lies in the ring, else None."""
    if y.is_zero():
        raise ZeroDivisionError("division by ring zero")
    if x.is_zero():
        return ZERO
    s = y.abs2()
    # real canonical form is u + v*sqrt2 over sqrt2^k, stored as (u, v, 0, -v)
    u, v = s.a, s.b
    denom = u * u - 2 * v * v
    if denom == 0:
        return None
    rationalizer = RingScalar(u, -v, 0, v)
    num = x * y.conj() * rationalizer * (SQRT2 ** s.k)
    sign = 1 if denom > 0 else -1
    denom = abs(denom)
    twos = 0
    while denom % 2 == 0:
        denom //= 2
        twos += 1
    num = RingScalar(num.a, num.b, num.c, num.d, num.k + 2 * twos)
    if denom > 1:
        if any(coef % denom for coef in (num.a, num.b, num.c, num.d)):
            return None
        num = RingScalar(num.a // denom, num.b // denom, num.c // denom, num.d // denom, num.k)
    return -num if sign < 0 else num


def ring_add(x: RingScalar, y: RingScalar) -> RingScalar:
    return x + y


def ring_mul(x: RingScalar, y: RingScalar) -> RingScalar:
    return x * y


def ring_conj(x: RingScalar) -> RingScalar:
    return x.conj()


def ring_to_complex(x: RingScalar) -> complex:
    return x.to_complex()
