# Spike theory: the (s,u,t,v)-property, echidnas, recognition and structure checks

from .echidna import (
    extend_echidna,
    is_echidna,
    is_maximal_echidna,
    require_certificate,
    verify_coechidna_implication,
    verify_spine_circuits,
)
from .partition import PairPartition, SpikeCertificate, read_certificate, write_certificate
from .property import check_low_rank_property, has_property
from .recognize import accept_one_t_spike, accept_s_one_spike, recognize_spike, spike_oracle
from .reports import CheckResult, CheckStatus, PropertyReport, StructureReport
from .structure import (
    expected_arm_lambda,
    expected_arm_rank,
    run_verification_suite,
    verify_spike_structure,
)

__all__ = [
    "CheckResult",
    "CheckStatus",
    "PairPartition",
    "PropertyReport",
    "SpikeCertificate",
    "StructureReport",
    "accept_one_t_spike",
    "accept_s_one_spike",
    "check_low_rank_property",
    "expected_arm_lambda",
    "expected_arm_rank",
    "extend_echidna",
    "has_property",
    "is_echidna",
    "is_maximal_echidna",
    "read_certificate",
    "recognize_spike",
    "require_certificate",
    "run_verification_suite",
    "spike_oracle",
    "verify_coechidna_implication",
    "verify_spike_structure",
    "verify_spine_circuits",
    "write_certificate",
]
