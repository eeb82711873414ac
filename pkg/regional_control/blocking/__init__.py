"""Blocking words, visibly blocking sets and non-controllability evidence."""

from .p_blocking import (
    AllWordsCertificate,
    BlockingQuery,
    BlockingStatus,
    BlockingVerdict,
    BlockingWitness,
    certify_all_words_blocking,
    certify_p_blocking,
    check_p_blocking_bounded,
)
from .visibly import (
    ConditionResult,
    MembershipWitness,
    NonControllabilityVerdict,
    PropagationWitness,
    VisiblyBlockingSet,
    non_controllability_from_visibly_blocking,
    verify_visibly_blocking,
)

__all__ = [
    "AllWordsCertificate",
    "BlockingQuery",
    "BlockingStatus",
    "BlockingVerdict",
    "BlockingWitness",
    "ConditionResult",
    "MembershipWitness",
    "NonControllabilityVerdict",
    "PropagationWitness",
    "VisiblyBlockingSet",
    "certify_all_words_blocking",
    "certify_p_blocking",
    "check_p_blocking_bounded",
    "non_controllability_from_visibly_blocking",
    "verify_visibly_blocking",
]
