"""Crisp and fuzzy ideals of finite ≤-hypergroupoids, with exhaustive verification."""

__version__ = "0.1.0"

from .core import (
    DomainError,
    Hypergroupoid,
    LeHypergroupoid,
    PropertyReport,
    Relation,
    ResourceCapExceeded,
    Subset,
    nonempty_subsets,
    product_membership,
    singleton_product_is_circ,
    subset_product,
    validate,
)
from .crisp import (
    elementwise_left_ideal_oracle,
    is_ideal,
    is_left_ideal,
    is_prime_ideal,
    is_prime_subset,
    is_right_ideal,
    is_semiprime_ideal,
    is_semiprime_subset,
    is_subgroupoid,
    setwise_prime_oracle,
    setwise_semiprime_oracle,
)
from .fuzzy import (
    FuzzySubset,
    fuzzy_ideal_max_oracle,
    is_fuzzy_ideal,
    is_fuzzy_left_ideal,
    is_fuzzy_prime_ideal,
    is_fuzzy_prime_subset,
    is_fuzzy_right_ideal,
    is_fuzzy_semiprime_ideal,
    is_fuzzy_semiprime_subset,
)
from .textformat import ParseError, parse_structure, serialize_structure
from .theorems import (
    Universe,
    VerificationRun,
    characteristic_function,
    enumerate_ideals,
    search_prop14_literal_counterexample,
    verify,
    verify_equivalences,
    verify_prop7,
    verify_prop8,
    verify_prop10,
    verify_prop14_forward,
)
