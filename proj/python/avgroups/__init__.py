"""Groups of rational points on abelian varieties over finite fields.

Polynomials are accepted as text ("t^2-2*t+9", "9,-2,1") or as ascending
lists of integers. Groups are labels such as "Z/2 + Z/4".
"""

from fractions import Fraction

from avgroups._core import (
    AvgroupsError,
    achievable_groups_bruteforce,
    classify,
    cokernel,
    conjecture_local_groups,
    elliptic_groups,
    hodge_polygon as _hodge_polygon,
    is_realizable,
    newton_polygon as _newton_polygon,
    parse_poly,
    realizable_local_groups,
    substitute_one_minus_t,
    to_human,
    validate_weil,
    verify_witness,
    witness_matrix as _witness_matrix,
)

__all__ = [
    "AvgroupsError",
    "achievable_groups_bruteforce",
    "classify",
    "cokernel",
    "conjecture_local_groups",
    "elliptic_groups",
    "hodge_polygon",
    "is_realizable",
    "newton_polygon",
    "parse_poly",
    "realizable_local_groups",
    "substitute_one_minus_t",
    "to_human",
    "validate_weil",
    "verify_witness",
    "witness_matrix",
]


def newton_polygon(f, ell):
    return [(x, Fraction(y)) for x, y in _newton_polygon(f, ell)]


def hodge_polygon(parts, r):
    return [(x, Fraction(y)) for x, y in _hodge_polygon(list(parts), r)]


def witness_matrix(f, parts, ell):
    return [[Fraction(x) for x in row] for row in _witness_matrix(f, list(parts), ell)]
