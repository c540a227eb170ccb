"""Closed forms, bounds, and worked small cases for the count sequence.

For three variables everything collapses: the transfer matrix is the 1x1
matrix [p(p+1)/2] and the counts have the product form

    c_{3,e} = p^e (p-1)^2 (p+1)^{e-2} / 2^e,    e >= 2,

so the growth rate is exactly p(p+1)/2.  For general d >= 3 a structured
subfamily of basis monomials can be tallied exactly: tagging it by an
index i with base-p digits (c_{e-1} ... c_1 c_0) and weight

    xi_e(i) = (p - 1 - c_{e-1}) (c_{e-2} + 1) ... (c_1 + 1) c_0

gives

    c_{d,e} >= sum_{i=0}^{p^e - 1} xi_e(i) comb(d-3+i, i),

with equality at d = 3 (where the subfamily is everything).  The
characteristic-2, four-variable case gets its own closed recursion on the
leading census pair.
"""

from __future__ import annotations

from .basep import Prime, digits
from .errors import GuardExceeded
from .spectral import RationalInterval, frobenius_complexity

DEFAULT_MAX_TERMS = 10**7


def closed_form_d3(p: int, e: int) -> int:
    """c_{3,e} = p^e (p-1)^2 (p+1)^{e-2} / 2^e for e >= 2, exactly."""
    p = Prime(p)
    if e < 2:
        raise ValueError("closed form holds for e >= 2; c_{3,1} = comb(p+1, 2)")
    num = p**e * (p - 1) ** 2 * (p + 1) ** (e - 2)
    den = 2**e
    assert num % den == 0, "closed form must be an integer"
    return num // den


def complexity_d3(p: int) -> int:
    """Growth rate of the three-variable counts: exactly p(p+1)/2."""
    p = Prime(p)
    return p * (p + 1) // 2


def xi_weight(p: int, e: int, i: int) -> int:
    """The first-exponent weight xi_e(i), from the base-p digits of i."""
    p = Prime(p)
    if e < 2:
        raise ValueError("xi weights need e >= 2 (top and bottom digit differ)")
    if not 0 <= i < p**e:
        raise ValueError(f"i must lie in [0, p^e), got {i}")
    dig = digits(i, p, e)
    w = (p - 1 - dig[e - 1]) * dig[0]
    for n in range(1, e - 1):
        w *= dig[n] + 1
    return w


def lower_bound(p: int, d: int, e: int, *, max_terms: int = DEFAULT_MAX_TERMS) -> int:
    """Exact evaluation of the xi-weight lower bound for c_{d,e}.

    Runs a base-p odometer over i = 0..p^e - 1, updating the binomial
    comb(d-3+i, i) by one exact multiply/divide per step.  Guarded by
    ``max_terms`` on the number of summands p^e.
    """
    p = Prime(p)
    if d < 3:
        raise ValueError("the bound applies for d >= 3")
    if e < 2:
        raise ValueError("the bound applies for e >= 2")
    n = p**e
    if n > max_terms:
        raise GuardExceeded("lower-bound summation", n, max_terms)
    dig = [0] * e
    binom = 1  # comb(d-3+i, i) at i = 0
    total = 0
    for i in range(n):
        if i:
            binom = binom * (d - 3 + i) // i
            t = 0
            while True:
                dig[t] += 1
                if dig[t] == p:
                    dig[t] = 0
                    t += 1
                else:
                    break
        w = (p - 1 - dig[e - 1]) * dig[0]
        if w:
            for k in range(1, e - 1):
                w *= dig[k] + 1
            total += w * binom
    return total


def leading_state_p2_d4(steps: int) -> tuple[tuple[int, int], ...]:
    """States of the characteristic-2, d=4 census recursion.

    Starting from (A_0, B_0) = (4, 0), iterate A' = 6A + 4B, B' = A + 4B.
    A_n equals the count c_{4, n+2} in characteristic 2; the pair obeys
    A_{n+1} = 10 A_n - 20 A_{n-1} componentwise (char poly x^2 - 10x + 20),
    so the growth rate is the larger root 5 + sqrt(5).
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    out = [(4, 0)]
    for _ in range(steps):
        a, b = out[-1]
        out.append((6 * a + 4 * b, a + 4 * b))
    return tuple(out)


def known_complexity_expression(p: int, d: int) -> str | None:
    """Closed-form expression for the complexity, where one is known."""
    p = Prime(p)
    if d == 3:
        if p == 2:
            return "log_2(3)"
        return f"1 + log_{p}({p + 1}) - log_{p}(2)"
    if (p, d) == (2, 4):
        return "log_2(5 + sqrt(5))"
    return None


def segre_frobenius_complexity(p: int, d: int, tol) -> RationalInterval:
    """Certified complexity interval for the rank-growth of the d-fold case.

    Identical to ``spectral.frobenius_complexity``: the count sequence
    whose growth is being measured is the same one the transfer system
    generates.  Kept as a named entry point because the d = 3 and
    (p, d) = (2, 4) cases admit the closed forms reported by
    ``known_complexity_expression``, making this the natural place to
    compare a certified interval against an exact expression.
    """
    return frobenius_complexity(p, d, tol)
