"""Computation in the affine symmetric group: Bruhat order, patterns,
Poincare polynomials and rational smoothness of affine Schubert varieties."""

from .bruhat import (
    coatom_count,
    covers_down,
    difference,
    ideal_levels,
    is_palindromic,
    leq,
    order_ideal,
    poincare,
    rank,
    rank_prime,
    reflection_set,
    support_size,
)
from .core import (
    AffinePermutation,
    Transposition,
    evaluate_word,
    from_window,
    identity,
    parse_window,
    random_element,
    simple_reflection,
    transposition,
)
from .enumeration import count_3412_avoiders, count_avoiders, elements_up_to_length, verify_theorem
from .errors import AffineError, CapacityExceeded, ValidationError
from .parabolic import (
    complement_of,
    demazure_m,
    longest_parabolic_element,
    parabolic_decompose,
    quotient_poincare,
)
from .patterns import P3412, P4231, Pattern, avoids, contains, normalize_3412, normalize_4231
from .pictures import build_picture, delete_index, flatten_pair, rectangles_A, render_svg
from .poly import Poly, q_binomial, q_factorial
from .smoothness import (
    Verdict,
    alpha_subword,
    classify,
    cycle_c,
    find_factoring_subword,
    poincare_factored,
    psi,
    recognize_spiral,
    twisted_spiral,
)
from .witness import witness, witness_3412, witness_4231

__all__ = [
    "AffineError",
    "AffinePermutation",
    "alpha_subword",
    "avoids",
    "build_picture",
    "CapacityExceeded",
    "classify",
    "coatom_count",
    "complement_of",
    "contains",
    "count_3412_avoiders",
    "count_avoiders",
    "covers_down",
    "cycle_c",
    "delete_index",
    "demazure_m",
    "difference",
    "elements_up_to_length",
    "evaluate_word",
    "find_factoring_subword",
    "flatten_pair",
    "from_window",
    "ideal_levels",
    "identity",
    "is_palindromic",
    "leq",
    "longest_parabolic_element",
    "normalize_3412",
    "normalize_4231",
    "order_ideal",
    "P3412",
    "P4231",
    "parabolic_decompose",
    "parse_window",
    "Pattern",
    "poincare",
    "poincare_factored",
    "Poly",
    "psi",
    "q_binomial",
    "q_factorial",
    "quotient_poincare",
    "random_element",
    "rank",
    "rank_prime",
    "recognize_spiral",
    "rectangles_A",
    "reflection_set",
    "render_svg",
    "simple_reflection",
    "support_size",
    "Transposition",
    "transposition",
    "twisted_spiral",
    "ValidationError",
    "Verdict",
    "verify_theorem",
    "witness",
    "witness_3412",
    "witness_4231",
]

__version__ = "0.1.0"
