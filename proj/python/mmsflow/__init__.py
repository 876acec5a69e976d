"""Exact committee elections under the maximin support rule.

All values are exact reduced rationals; the core never touches floating
point. See the project README for the committee rule, the flow-based
computation, and the verification helpers.
"""

from mmsflow._core import (
    BoundError,
    CommitteeTrace,
    Election,
    FlowNetwork,
    FlowResult,
    KernelWitness,
    MaximinOutcome,
    PartyListProfile,
    PartyListReport,
    PjrViolation,
    Rational,
    RestrictedElection,
    ValidationError,
    build_support_network,
    check_party_list_equivalence,
    check_pjr,
    compare_party_list,
    dhondt,
    max_flow,
    maximin_oracle,
    maximin_support,
    mms_winners,
    party_list_election,
    restrict_to,
    round_scores,
)

__all__ = [
    "BoundError",
    "CommitteeTrace",
    "Election",
    "FlowNetwork",
    "FlowResult",
    "KernelWitness",
    "MaximinOutcome",
    "PartyListProfile",
    "PartyListReport",
    "PjrViolation",
    "Rational",
    "RestrictedElection",
    "ValidationError",
    "build_support_network",
    "check_party_list_equivalence",
    "check_pjr",
    "compare_party_list",
    "dhondt",
    "max_flow",
    "maximin_oracle",
    "maximin_support",
    "mms_winners",
    "party_list_election",
    "restrict_to",
    "round_scores",
]
