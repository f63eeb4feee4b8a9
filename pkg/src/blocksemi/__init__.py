"""Block-permuting transformation semigroups: membership, regularity and
unit-regularity witnesses, Green's relations, and a brute-force oracle that
cross-validates all of it."""

from .core import (
    BlocksemiError,
    BlockRestriction,
    Character,
    KernelPartition,
    Member,
    NotInB,
    NotPartitionPreserving,
    Partition,
    SizeMismatch,
    SizeProfile,
    Transformation,
    as_member,
    block_restrictions,
    character,
    collapse,
    compose,
    defect,
    in_B,
    kernel_partition,
    kernel_restricted,
    preserves_partition,
    refines,
    size_profile,
)
from .greens import (
    GreensWitness,
    Relation,
    conjecture_condition,
    d_equals_j_semigroup,
    eq_D,
    eq_D_by_matching,
    eq_H,
    eq_J,
    eq_L,
    eq_R,
    leq_J,
    leq_L,
    leq_R,
    two_consecutive_condition,
    verify_witness,
)
from .instances import (
    InstanceFile,
    InvalidInstance,
    UnknownName,
    parse_instance,
    render_instance,
)
from .oracle import (
    DEFAULT_CAP,
    ElementNotInTable,
    SemigroupTable,
    TooLarge,
    enumerate_semigroup,
    expected_size,
    oracle_eq_D,
    oracle_eq_H,
    oracle_eq_J,
    oracle_eq_L,
    oracle_eq_R,
    oracle_leq_J,
    oracle_leq_L,
    oracle_leq_R,
    oracle_regular,
    oracle_unit_regular,
)
from .regularity import (
    NotUnitRegular,
    RegularityWitness,
    is_unit,
    is_unit_regular,
    regular_witness,
    semigroup_unit_regular,
    unit_regular_witness,
)
from .survey import ConjectureReport, SurveyReport, run_conjecture, run_survey

__version__ = "0.1.0"

__all__ = [
    "BlocksemiError",
    "BlockRestriction",
    "Character",
    "ConjectureReport",
    "DEFAULT_CAP",
    "ElementNotInTable",
    "GreensWitness",
    "InstanceFile",
    "InvalidInstance",
    "KernelPartition",
    "Member",
    "NotInB",
    "NotPartitionPreserving",
    "NotUnitRegular",
    "Partition",
    "RegularityWitness",
    "Relation",
    "SemigroupTable",
    "SizeMismatch",
    "SizeProfile",
    "SurveyReport",
    "TooLarge",
    "Transformation",
    "UnknownName",
    "as_member",
    "block_restrictions",
    "character",
    "collapse",
    "compose",
    "conjecture_condition",
    "d_equals_j_semigroup",
    "defect",
    "enumerate_semigroup",
    "eq_D",
    "eq_D_by_matching",
    "eq_H",
    "eq_J",
    "eq_L",
    "eq_R",
    "expected_size",
    "in_B",
    "is_unit",
    "is_unit_regular",
    "kernel_partition",
    "kernel_restricted",
    "leq_J",
    "leq_L",
    "leq_R",
    "oracle_eq_D",
    "oracle_eq_H",
    "oracle_eq_J",
    "oracle_eq_L",
    "oracle_eq_R",
    "oracle_leq_J",
    "oracle_leq_L",
    "oracle_leq_R",
    "oracle_regular",
    "oracle_unit_regular",
    "parse_instance",
    "preserves_partition",
    "refines",
    "regular_witness",
    "render_instance",
    "run_conjecture",
    "run_survey",
    "semigroup_unit_regular",
    "size_profile",
    "two_consecutive_condition",
    "unit_regular_witness",
    "verify_witness",
]
