"""Exact Riordan arrays from moment sequences.

The package is layered bottom-up:

- `coefficients`: rational binomials, falling factorials, multinomials.
- `series`: truncated power series over Fractions, with two independent
  compositional-inversion algorithms.
- `umbra`: moment sequences, dot products, the Abel umbra and the
  Lagrange involution.
- `arrays`: the two array flavors, triangles, group operations, the
  fundamental-theorem action, subgroup classification.
- `sheffer`: row polynomials, umbral composition, the two-variable
  Sheffer identity.
- `recursions`: A-sequences and the three entry recursions.
- `genpowers`: rational matrix powers via the nilpotent binomial series.
- `identities`: the executable catalog of classical identities.
- `cli`: the `riordan` command.

Everything is exact; floats are rejected at the boundary.
"""

from .arrays import (
    EXPONENTIAL,
    ORDINARY,
    FlavorMismatchError,
    RiordanArray,
    SubgroupReport,
    Triangle,
    ballot_array,
    chebyshev_array,
    double_catalan_array,
    identity_array,
    pascal_array,
    stirling1_array,
    stirling2_array,
)
from .coefficients import Rational, binomial_generalized, falling_factorial, multinomial
from .genpowers import AdditivityReport, additivity_check, general_power, power_pair
from .identities import IdentityReport, Witness, catalog, run
from .recursions import (
    RecursionReport,
    RecursionTerm,
    a_sequence,
    check_colrec,
    check_rowrec,
    check_rowrec2,
)
from .series import (
    OrderMismatchError,
    Series,
    revert_lagrange,
    revert_newton,
)
from .sheffer import (
    Polynomial,
    ShefferIdentityReport,
    sheffer_identity_check,
    sheffer_sequence,
    umbral_compose,
)
from .umbra import (
    Umbra,
    abel_moment,
    abel_umbra,
    compose_umbra,
    compositional_inverse,
    derivative,
    dot,
    dot_int,
    dot_rational,
    lagrange_involution,
    named,
    named_umbrae,
    scale,
    sum_umbrae,
)

__version__ = "0.1.0"
