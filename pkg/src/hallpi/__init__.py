"""Hall-property decision engine for finite simple groups of Lie type,
with a brute-force permutation-group verifier."""

from .arith import PrimeSet
from .hall_oracle import (
    FactorDescriptor,
    Verdict,
    decide_cpi,
    decide_dpi,
    decide_epi,
    decide_upi,
    reduce_composition,
)
from .lie_catalog import GroupId, GroupSpecError, group_order, parse_group_id
from .perm_engine import (
    OrderLimitError,
    PermGroup,
    brute_property,
    construct_named,
    enumerate_subgroups,
)

__all__ = [
    "PrimeSet",
    "GroupId",
    "GroupSpecError",
    "parse_group_id",
    "group_order",
    "Verdict",
    "FactorDescriptor",
    "decide_epi",
    "decide_cpi",
    "decide_dpi",
    "decide_upi",
    "reduce_composition",
    "PermGroup",
    "OrderLimitError",
    "construct_named",
    "enumerate_subgroups",
    "brute_property",
]

__version__ = "0.1.0"
