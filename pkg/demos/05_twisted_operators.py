"""Twisted matrix operators: composition, brackets, and factorization.

Operators (A, e) over F_p[x]/(x^N) compose by twisting the right factor:
(A, e) o (B, e') = (A * B^[p^e], e + e').  Because the p^e-th power map on
the truncated ring kills every positive-degree term once p^e >= N, any
high-degree operator factors through a bounded-degree one followed by
twists of the identity.
"""

import random

from frobcx import (
    QuotientRing,
    TwistedOperator,
    bracket,
    compose,
    factorization_check,
    identity_operator,
    min_kill_degree,
    random_operator,
)

ring = QuotientRing(2, 4)
x = ring.gen()
one = ring.one()

print("=== the ring F_2[x]/(x^4) ===")
f = one + x
print(f"(1 + x)^2 = {f * f}   (char 2: cross terms vanish)")
print(f"frobenius degree 1 of 1+x+x^2: {(one + x + x * x).frobenius(1)}")
print(f"frobenius degree 2 of 1+x+x^2: {(one + x + x * x).frobenius(2)}"
      " (only the constant survives: 2^2 >= 4)")
print()

print("=== composition twists the right factor ===")
a = TwistedOperator(((x, one), (ring.zero(), one)), 1)
b = TwistedOperator(((one, x), (ring.zero(), one)), 1)
ab, ba = compose(a, b), compose(b, a)
print(f"A = [[x, 1], [0, 1]] (degree 1),  B = [[1, x], [0, 1]] (degree 1)")
print(f"(A o B) entry (0,1): {ab.rows[0][1]}   degree {ab.degree}")
print(f"(B o A) entry (0,1): {ba.rows[0][1]}   degree {ba.degree}")
print("same degrees, different matrices: the product is not commutative")
print()

print("=== factorization through identity twists ===")
rng = random.Random(2024)
e0 = min_kill_degree(ring)
op = random_operator(ring, 2, 7, rng)
print(f"min twist with p^e >= N: e0 = {e0}")
print("random degree-7 operator A:")
for row in op.rows:
    print("  [" + ", ".join(str(v) for v in row) + "]")
ok = factorization_check(op.rows, 7, e0)
print(f"(A,7) == (A,{e0}) o (I,{7 - e0}), chain split included: {ok}")
collapsed = bracket(op.rows, e0)
print("A^[p^e0] (all entries collapse to constants):")
for row in collapsed:
    print("  [" + ", ".join(str(v) for v in row) + "]")
