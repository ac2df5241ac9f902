"""Conjugacy relations on finite semigroups."""
from .conjugacy import (
    c_conjugacy, conjugacy_report, o_conjugacy, p_relation, p_star, strong_relations, tr_conjugacy,
)
from .constructors import fixture, fixtures, rees, rees_zero, variant
from .core import EqPartition, PairRelation, Semigroup, build_semigroup, load_table, parse_table
from .enumeration import EnumConstraints, enumerate_semigroups, sweep, table1
from .epigroup import epi_classification, variety_membership
from .green import green
from .pinj import PartialInjection, symmetric_inverse_monoid
from .symbolic import CCRType, parse_type
from .theorems import theorem_suite

__all__ = [
    "CCRType", "EnumConstraints", "EqPartition", "PairRelation", "PartialInjection", "Semigroup",
    "build_semigroup", "c_conjugacy", "conjugacy_report", "enumerate_semigroups", "epi_classification",
    "fixture", "fixtures", "green", "load_table", "o_conjugacy", "p_relation", "p_star", "parse_table",
    "parse_type", "rees", "rees_zero", "strong_relations", "sweep", "symmetric_inverse_monoid", "table1",
    "theorem_suite", "tr_conjugacy", "variant", "variety_membership",
]
