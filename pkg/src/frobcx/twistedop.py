"""Twisted matrix operators over truncated polynomial rings.

Work in R = F_p[x]/(x^N).  A twisted operator of degree e is a pair (A, e)
with A an r x r matrix over R; it acts by first raising inputs to the
p^e-th power and then applying A.  Stacking actions gives the twisted
composition rule

    (A, e) o (B, e') = (A * B^[p^e], e + e'),

where B^[p^e] raises each entry to its p^e-th power.  Over R that power
map is cheap bookkeeping: coefficients live in F_p, so they are fixed, and
x^i maps to x^(i p^e), i.e. coefficient i moves to position i * p^e and
falls off the end once i * p^e >= N.  In particular, as soon as p^e >= N
the map keeps only the constant term, which is why every operator of large
degree factors as a fixed-degree operator composed with twists of the
identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .basep import Prime


@dataclass(frozen=True)
class QuotientRing:
    """F_p[x] / (x^n), coefficients stored little-endian mod p."""

    p: Prime
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Prime(self.p))
        if self.n < 1:
            raise ValueError("truncation order must be >= 1")

    def element(self, coeffs) -> "QElem":
        """Quotient-map an integer coefficient list: reduce mod p, drop x^n on."""
        cs = list(coeffs)[: self.n]
        cs += [0] * (self.n - len(cs))
        return QElem(self, tuple(c % self.p for c in cs))

    def zero(self) -> "QElem":
        return self.element([])

    def one(self) -> "QElem":
        return self.element([1])

    def gen(self) -> "QElem":
        """The class of x (zero when n == 1)."""
        return self.element([0, 1])

    def random_element(self, rng: random.Random) -> "QElem":
        return QElem(self, tuple(rng.randrange(self.p) for _ in range(self.n)))


@dataclass(frozen=True)
class QElem:
    """An element of a QuotientRing; arithmetic stays in the ring."""

    ring: QuotientRing
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.ring.n:
            raise ValueError("coefficient vector must have length n")
        if any(not 0 <= c < self.ring.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod p")

    def _check_ring(self, other: "QElem") -> None:
        if self.ring != other.ring:
            raise ValueError("elements live in different rings")

    def __add__(self, other: "QElem") -> "QElem":
        self._check_ring(other)
        p = self.ring.p
        return QElem(
            self.ring,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __mul__(self, other: "QElem") -> "QElem":
        self._check_ring(other)
        p, n = self.ring.p, self.ring.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs[: n - i]):
                    out[i + j] += a * b
        return QElem(self.ring, tuple(c % p for c in out))

    def frobenius(self, e: int) -> "QElem":
        """The p^e-th power: coefficient i moves to position i * p^e."""
        if e < 0:
            raise ValueError("twist degree must be >= 0")
        if e == 0:
            return self
        q = self.ring.p**e
        out = [0] * self.ring.n
        for i, c in enumerate(self.coeffs):
            pos = i * q
            if pos >= self.ring.n:
                break
            out[pos] = c
        return QElem(self.ring, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def constant_term(self) -> int:
        return self.coeffs[0]

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if i == 0 else "x" if i == 1 else f"x^{i}"
            parts.append(mono if c == 1 and i else f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


QMatrix = tuple[tuple[QElem, ...], ...]


def _as_matrix(rows) -> QMatrix:
    out = tuple(tuple(row) for row in rows)
    if not out:
        raise ValueError("matrix must be nonempty")
    r = len(out)
    ring = out[0][0].ring
    for row in out:
        if len(row) != r:
            raise ValueError("matrix must be square")
        for v in row:
            if v.ring != ring:
                raise ValueError("matrix entries live in different rings")
    return out


def bracket(rows, e: int) -> QMatrix:
    """Entrywise p^e-th power of a matrix over a QuotientRing."""
    return tuple(tuple(v.frobenius(e) for v in row) for row in _as_matrix(rows))


def _mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    r = len(a)
    return tuple(
        tuple(
            sum((a[i][t] * b[t][j] for t in range(1, r)), start=a[i][0] * b[0][j])
            for j in range(r)
        )
        for i in range(r)
    )


@dataclass(frozen=True)
class TwistedOperator:
    """A matrix together with its twist degree."""

    rows: QMatrix
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _as_matrix(self.rows))
        if self.degree < 0:
            raise ValueError("twist degree must be >= 0")

    @property
    def ring(self) -> QuotientRing:
        return self.rows[0][0].ring

    @property
    def size(self) -> int:
        return len(self.rows)


def compose(f: TwistedOperator, g: TwistedOperator) -> TwistedOperator:
    """(A, e) o (B, e') = (A * B^[p^e], e + e')."""
    if f.ring != g.ring:
        raise ValueError("operators act on different rings")
    if f.size != g.size:
        raise ValueError("operators have different matrix sizes")
    return TwistedOperator(_mat_mul(f.rows, bracket(g.rows, f.degree)),
                           f.degree + g.degree)


def identity_operator(ring: QuotientRing, size: int, degree: int = 0) -> TwistedOperator:
    if size < 1:
        raise ValueError("size must be >= 1")
    one, zero = ring.one(), ring.zero()
    rows = tuple(
        tuple(one if i == j else zero for j in range(size)) for i in range(size)
    )
    return TwistedOperator(rows, degree)


def random_operator(
    ring: QuotientRing, size: int, degree: int, rng: random.Random
) -> TwistedOperator:
    rows = tuple(
        tuple(ring.random_element(rng) for _ in range(size)) for _ in range(size)
    )
    return TwistedOperator(rows, degree)


def min_kill_degree(ring: QuotientRing) -> int:
    """Smallest e with p^e >= n: twists this deep keep only constant terms."""
    e, q = 0, 1
    while q < ring.n:
        e += 1
        q *= ring.p
    return e


def factorization_check(rows, e: int, e0: int) -> bool:
    """Check that a degree-e operator splits off its twist beyond e0.

    Requires e >= e0 and p^e0 >= n.  Verifies (A, e) == (A, e0) o (I, e-e0)
    exactly, and additionally, when e - e0 >= 2*e0, that the identity tail
    itself splits into a chain (I, e0) o ... o (I, e0) o (I, c) with
    e0 <= c < 2*e0, so high twists reduce to a bounded generating set.
    """
    rows = _as_matrix(rows)
    ring = rows[0][0].ring
    kill = min_kill_degree(ring)
    if e0 < kill:
        raise ValueError(f"e0 must be >= {kill}, the smallest twist with p^e0 >= n")
    if e < e0:
        raise ValueError("need e >= e0")
    size = len(rows)
    whole = TwistedOperator(rows, e)
    split = compose(TwistedOperator(rows, e0), identity_operator(ring, size, e - e0))
    if split != whole:
        return False
    tail = e - e0
    if e0 >= 1 and tail >= 2 * e0:
        k = tail // e0 - 1
        c = tail - k * e0
        chain = identity_operator(ring, size, c)
        for _ in range(k):
            chain = compose(identity_operator(ring, size, e0), chain)
        if chain != identity_operator(ring, size, tail):
            return False
    return True
