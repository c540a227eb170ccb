"""Base-p digit arithmetic for exponent vectors.

Everything downstream reduces to bookkeeping on base-p digits: a monomial
x_1^{a_1} ... x_d^{a_d} of total degree p^e - 1 is described by the digit
rows of its exponents, and the structural questions (which monomials are
basis monomials, how counts recur in e) are answered by truncations
a mod p^n and by the carries produced when the exponents are added in
base p.  This module provides those primitives exactly, on plain ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


class Prime(int):
    """An int validated to be prime at construction.

    Usable anywhere an int is.  Validation is trial division, fine for the
    small characteristics this package targets.
    """

    __slots__ = ()

    def __new__(cls, value: int) -> "Prime":
        v = int(value)
        if v < 2:
            raise ValueError(f"{v} is not prime")
        for q in range(2, isqrt(v) + 1):
            if v % q == 0:
                raise ValueError(f"{v} is not prime (divisible by {q})")
        return super().__new__(cls, v)


@dataclass(frozen=True)
class DigitVector:
    """Little-endian base-p digits: ``digits[n]`` multiplies p^n."""

    digits: tuple[int, ...]
    p: Prime

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Prime(self.p))
        object.__setattr__(self, "digits", tuple(int(x) for x in self.digits))
        for x in self.digits:
            if not 0 <= x < self.p:
                raise ValueError(f"digit {x} out of range for base {self.p}")

    def value(self) -> int:
        total = 0
        for x in reversed(self.digits):
            total = total * self.p + x
        return total

    def __int__(self) -> int:
        return self.value()

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, n: int) -> int:
        return self.digits[n]

    def __iter__(self):
        return iter(self.digits)


def digits(a: int, p: int, length: int) -> DigitVector:
    """Base-p digits of ``a``, little-endian, padded/limited to ``length``.

    Rejects negative ``a`` and any ``a`` that does not fit in ``length``
    digits; silently dropping high digits would corrupt every carry
    computation built on top.
    """
    p = Prime(p)
    if a < 0:
        raise ValueError("negative values have no base-p digit expansion here")
    if length < 0:
        raise ValueError("length must be nonnegative")
    out = []
    rest = a
    for _ in range(length):
        rest, r = divmod(rest, p)
        out.append(r)
    if rest:
        raise ValueError(f"{a} does not fit in {length} base-{p} digits")
    return DigitVector(tuple(out), p)


def truncate(a: int, p: int, e1: int) -> int:
    """a mod p^e1: the number formed by the e1 lowest base-p digits of a."""
    p = Prime(p)
    if a < 0 or e1 < 0:
        raise ValueError("truncate needs a >= 0 and e1 >= 0")
    return a % p**e1


@dataclass(frozen=True)
class ExponentVector:
    """Exponents (a_1, ..., a_d) of a monomial of degree p^e - 1."""

    a: tuple[int, ...]
    p: Prime
    e: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Prime(self.p))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "e", int(self.e))
        if self.e < 1:
            raise ValueError("e must be >= 1")
        if not self.a:
            raise ValueError("need at least one exponent")
        if any(x < 0 for x in self.a):
            raise ValueError("exponents must be nonnegative")
        need = self.p**self.e - 1
        if sum(self.a) != need:
            raise ValueError(
                f"exponents sum to {sum(self.a)}, degree p^e - 1 = {need} required"
            )

    @property
    def d(self) -> int:
        return len(self.a)


def carry_sequence(v: ExponentVector) -> tuple[int, ...]:
    """Carries produced by adding the exponents of ``v`` in base p.

    Returns (d_0, ..., d_{e-1}) where d_n is the carry out of digit
    position n (i.e. into position n+1) when a_1 + ... + a_d is summed by
    school addition.  Because the total is p^e - 1 = (p-1, ..., p-1) in
    base p, every column must satisfy

        sum_i digit_n(a_i) + d_{n-1} = d_n * p + (p - 1),   d_{-1} = 0,

    and the top carry d_{e-1} is 0.  Both facts are asserted: a violation
    is unreachable for a valid ExponentVector.
    """
    p, e = v.p, v.e
    rows = [digits(x, p, e) for x in v.a]
    out = []
    carry = 0
    for n in range(e):
        col = sum(row[n] for row in rows) + carry
        carry, digit = divmod(col, p)
        assert digit == p - 1, "column digit must be p-1 for degree p^e - 1"
        out.append(carry)
    assert out[-1] == 0, "top carry must vanish"
    return tuple(out)
