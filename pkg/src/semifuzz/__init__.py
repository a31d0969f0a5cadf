"""Finite semigroups, sup-min fuzzy-set convolution, and the subdirect
decomposition of the convolution semigroup into divisor-set components,
with exhaustive machine verification of the underlying identities."""

from .semigroups import (
    AssociativityError,
    Element,
    ElementRelation,
    ElementSet,
    Semigroup,
    build_semigroup,
    identity_relation,
    semigroup_from_json,
    semigroup_to_json,
)
from .fuzzy import (
    FuzzySet,
    RestrictedFuzzySet,
    characteristic,
    constant,
    convolve,
    embed_element,
    format_value,
    fuzzy_set,
    fuzzy_set_from_json,
    parse_value,
    restricted_from_json,
    restricted_fuzzy_set,
    star_convolve,
)
from .decomposition import (
    SubdirectTuple,
    agrees_on_divisors,
    extend_by_zero,
    restrict,
    subdirect_embed,
)
from .enumeration import (
    Chain,
    catalog,
    chain_of,
    enumerate_fuzzy_sets,
    enumerate_restricted_sets,
    enumerate_semigroups,
    make_chain,
    random_fuzzy_set,
    random_restricted_set,
    transformation_closure,
)
from .verification import (
    Exhaustive,
    Sampled,
    THEOREMS,
    VerificationReport,
    recheck_counterexample,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "AssociativityError",
    "Chain",
    "Element",
    "ElementRelation",
    "ElementSet",
    "Exhaustive",
    "FuzzySet",
    "RestrictedFuzzySet",
    "Sampled",
    "Semigroup",
    "SubdirectTuple",
    "THEOREMS",
    "VerificationReport",
    "agrees_on_divisors",
    "build_semigroup",
    "catalog",
    "chain_of",
    "characteristic",
    "constant",
    "convolve",
    "embed_element",
    "enumerate_fuzzy_sets",
    "enumerate_restricted_sets",
    "enumerate_semigroups",
    "extend_by_zero",
    "format_value",
    "fuzzy_set",
    "fuzzy_set_from_json",
    "identity_relation",
    "make_chain",
    "parse_value",
    "random_fuzzy_set",
    "random_restricted_set",
    "recheck_counterexample",
    "restrict",
    "restricted_from_json",
    "restricted_fuzzy_set",
    "semigroup_from_json",
    "semigroup_to_json",
    "star_convolve",
    "subdirect_embed",
    "transformation_closure",
    "verify_theorem",
]
