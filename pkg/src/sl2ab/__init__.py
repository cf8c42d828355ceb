"""Abelianization of SL2 over rings of S-integers in global fields.

The structure results implemented here reduce the abelianization of
SL2(O_{K,S}) — when the unit group is infinite — to bookkeeping about the
primes of the ring above 2 and 3: each surviving prime with residue field F_2
contributes Z/4 (unramified) or Z/2 + Z/2 (ramified), each surviving prime
with residue field F_3 contributes Z/3, and nothing else contributes.  The
package computes these splittings for several field forms, assembles the
results, and cross-checks them against brute-force matrix enumeration over
small finite rings.
"""

from .abgroup import (
    AbelianGroup,
    InvalidProfileError,
    TRIVIAL_GROUP,
    canonicalize,
    direct_sum,
    from_order_statistics,
)
from .oracle import (
    BudgetExceededError,
    DEFAULT_RING_CAP,
    FiniteRing,
    FiniteRingSpec,
    Mat2,
    PolyQuot,
    ZmodPK,
    abelianization,
    commutator_subgroup,
    enumerate_sl2_direct,
    generate_from_elementary,
    prop_local_formula,
    sl2_abelianization,
)
from .polyarith import IntPoly, ModPoly, cyclotomic_polynomial, factor_mod_p
from .splitting import (
    Cyclotomic,
    GeneralPoly,
    NotPMaximalError,
    PrimeAbove,
    Quadratic,
    Rational,
    RationalFunction,
    Signature,
    SplittingData,
    UserSupplied,
    cyclotomic_split,
    dedekind_split,
    quadratic_min_poly,
    quadratic_split,
    rational_function_split,
    split_at,
)
from .theorems import (
    ArithmeticRingSpec,
    BetaFlags,
    ComputeOutcome,
    Contribution,
    FiniteUnitsError,
    SSet,
    compute,
    galois_result,
    known_small_cases,
    s_for_inverted,
    sl2ab_char0,
    sl2ab_charp,
    sl2ab_cyclotomic,
    sl2ab_galois,
    sl2ab_quadratic_negative,
    sl2ab_quadratic_positive,
)
from .verify import CaseResult, SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "ArithmeticRingSpec",
    "BetaFlags",
    "BudgetExceededError",
    "CaseResult",
    "ComputeOutcome",
    "Contribution",
    "Cyclotomic",
    "DEFAULT_RING_CAP",
    "FiniteRing",
    "FiniteRingSpec",
    "FiniteUnitsError",
    "GeneralPoly",
    "IntPoly",
    "InvalidProfileError",
    "Mat2",
    "ModPoly",
    "NotPMaximalError",
    "PolyQuot",
    "PrimeAbove",
    "Quadratic",
    "Rational",
    "RationalFunction",
    "SSet",
    "SUITES",
    "Signature",
    "SplittingData",
    "TRIVIAL_GROUP",
    "UserSupplied",
    "ZmodPK",
    "abelianization",
    "canonicalize",
    "commutator_subgroup",
    "compute",
    "cyclotomic_polynomial",
    "cyclotomic_split",
    "dedekind_split",
    "direct_sum",
    "enumerate_sl2_direct",
    "factor_mod_p",
    "from_order_statistics",
    "galois_result",
    "generate_from_elementary",
    "known_small_cases",
    "prop_local_formula",
    "quadratic_min_poly",
    "quadratic_split",
    "rational_function_split",
    "run_suite",
    "s_for_inverted",
    "sl2_abelianization",
    "sl2ab_char0",
    "sl2ab_charp",
    "sl2ab_cyclotomic",
    "sl2ab_galois",
    "sl2ab_quadratic_negative",
    "sl2ab_quadratic_positive",
    "split_at",
]
