"""Exact tools for Frobenius-complexity computations.

The package counts the graded generators of the twisted construction
attached to a polynomial ring in d variables over a field of prime
characteristic p, certifies the exponential growth rate of those counts,
and models the underlying twisted matrix operators.  All arithmetic is
exact: integer counts, rational interval endpoints.
"""

from .basep import DigitVector, ExponentVector, Prime, carry_sequence, digits, truncate
from .closedform import (
    closed_form_d3,
    complexity_d3,
    known_complexity_expression,
    leading_state_p2_d4,
    lower_bound,
    segre_frobenius_complexity,
    xi_weight,
)
from .enumeration import (
    composition_count,
    compositions,
    count_basis_carryvectors,
    count_basis_enumeration,
    is_basis_monomial,
)
from .errors import GuardExceeded
from .poincare import PoincareTable, build_table
from .spectral import (
    CharPoly,
    RationalInterval,
    SpectralEstimate,
    char_poly,
    frobenius_complexity,
    log2_interval,
    log_interval,
    log_of_interval,
    perron_interval,
)
from .transfer import (
    ComplexityReport,
    TransferSystem,
    build_system,
    complexity_sequence,
    complexity_term,
    state,
)
from .twistedop import (
    QElem,
    QuotientRing,
    TwistedOperator,
    bracket,
    compose,
    factorization_check,
    identity_operator,
    min_kill_degree,
    random_operator,
)

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "ComplexityReport",
    "DigitVector",
    "ExponentVector",
    "GuardExceeded",
    "PoincareTable",
    "Prime",
    "QElem",
    "QuotientRing",
    "RationalInterval",
    "SpectralEstimate",
    "TransferSystem",
    "TwistedOperator",
    "bracket",
    "build_system",
    "build_table",
    "carry_sequence",
    "char_poly",
    "closed_form_d3",
    "complexity_d3",
    "complexity_sequence",
    "complexity_term",
    "compose",
    "composition_count",
    "compositions",
    "count_basis_carryvectors",
    "count_basis_enumeration",
    "digits",
    "factorization_check",
    "frobenius_complexity",
    "identity_operator",
    "is_basis_monomial",
    "known_complexity_expression",
    "leading_state_p2_d4",
    "log2_interval",
    "log_interval",
    "log_of_interval",
    "lower_bound",
    "min_kill_degree",
    "perron_interval",
    "random_operator",
    "segre_frobenius_complexity",
    "state",
    "truncate",
    "xi_weight",
]
