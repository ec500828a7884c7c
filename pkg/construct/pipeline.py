"""
Spike constructions.

Every (s,t)-spike of order m >= s+t is reached from the (1,1)-spike of
order m by t-1 elementary quotients followed by s-1 elementary lifts. A
quotient extends by an element blocking every union of t arms and
contracts it; a lift is a quotient of the dual, dualized back. The tip
extension runs the other way: contracting its tip undoes one lift.
"""

from functools import reduce
from typing import Callable, Optional

import numpy as np

from common.config import get_settings
from common.errors import HypothesisError, InvalidCertificateError, ParameterError
from common.logger import get_logger
from common.progress import add_task, update_task
from common.validators import require_cap, require_positive
from core.masks import mask_range
from core.matroid import Matroid, closure, uniform
from core.minors import contract, direct_sum, dual
from construct.modular_cut import (
    ModularCut,
    blocks_cocircuit,
    extend_by_modular_cut,
    free_extension,
)
from construct.trace import BuildTrace, StepOp
from spikes.artifacts import counterexample
from spikes.echidna import require_certificate
from spikes.partition import PairPartition, SpikeCertificate
from spikes.structure import verify_spike_structure

logger = get_logger("spikes.construct.pipeline")

BlockerChooser = Callable[[Matroid, SpikeCertificate], ModularCut]


def spike_11(m: int) -> tuple[Matroid, SpikeCertificate]:
    """Direct sum of m copies of U_{1,2}; arm i is {2i, 2i+1}."""
    require_positive(m=m)
    require_cap(2 * m, "(1,1)-spike")
    M = reduce(direct_sum, [uniform(1, 2) for _ in range(m)])
    partition = PairPartition.from_indices((2 * i, 2 * i + 1) for i in range(m))
    return M, SpikeCertificate(s=1, t=1, partition=partition)


def _require_order(cert: SpikeCertificate) -> None:
    if cert.order < cert.s + cert.t:
        raise HypothesisError("order m >= s+t", f"m={cert.order}, s={cert.s}, t={cert.t}")


def quotient_step(
    M: Matroid,
    cert: SpikeCertificate,
    blocker: Optional[ModularCut] = None,
) -> tuple[Matroid, SpikeCertificate]:
    """
    (M+e)/e for an extension whose new element blocks every union of t arms.

    Without a blocker the free extension is used; a given blocker is checked
    against every union of t arms.

    Raises:
        InvalidCertificateError: cert does not certify M
        HypothesisError: order below s+t, the blocker adds a coloop, or it fails to block
        CounterexampleError: the result is not an (s,t+1)-spike
    """
    require_certificate(M, cert)
    _require_order(cert)
    s, t = cert.s, cert.t
    logger.debug("Quotient step", n=M.n, s=s, t=t, blocker="custom" if blocker else "free")

    extended = free_extension(M) if blocker is None else extend_by_modular_cut(M, blocker)
    if extended.rank != M.rank:
        raise HypothesisError("e is not a coloop of M+e", "the blocker is the empty cut", 1 << M.n)
    for _, union in cert.partition.unions(t):
        if not blocks_cocircuit(extended, union):
            raise HypothesisError(f"e blocks every union of {t} arms", "a cocircuit is not blocked", union)

    quotient = contract(extended, 1 << M.n).matroid
    result = cert.relabel(s, t + 1)
    if quotient.rank != M.rank - 1:
        raise counterexample(M, "quotient drops the rank by one", cert.partition, s=s, t=t)
    try:
        require_certificate(quotient, result)
    except InvalidCertificateError as exc:
        raise counterexample(M, "quotient is an (s,t+1)-spike", cert.partition, s=s, t=t) from exc
    if get_settings().deep_verify:
        report = verify_spike_structure(quotient, result)
        if not report.passed:
            raise counterexample(quotient, "quotient passes the structure checks", result.partition, s=s, t=t + 1)
    logger.info("Quotient built", s=s, t=t + 1, m=cert.order, rank=quotient.rank)
    return quotient, result


def lift_step(M: Matroid, cert: SpikeCertificate) -> tuple[Matroid, SpikeCertificate]:
    """
    The dual of a quotient of M*: an (s+1,t)-spike of rank one higher.

    Raises:
        InvalidCertificateError: cert does not certify M
        HypothesisError: order below s+t
    """
    quotient, quotient_cert = quotient_step(dual(M), cert.dual())
    return dual(quotient), quotient_cert.dual()


def build_spike(
    s: int,
    t: int,
    m: int,
    choose_blocker: Optional[BlockerChooser] = None,
) -> tuple[Matroid, SpikeCertificate, BuildTrace]:
    """
    An (s,t)-spike of order m: spike_11(m), t-1 quotients, then s-1 lifts.

    choose_blocker, when given, picks the modular cut for each quotient from
    the current spike; the lifts always use free extensions of the dual.

    Raises:
        HypothesisError: m < s+t
        ParameterError: s or t below 1, or 2m above the cap
    """
    require_positive(s=s, t=t, m=m)
    if m < s + t:
        raise HypothesisError("order m >= s+t", f"m={m}, s={s}, t={t}")
    require_cap(2 * m, "spike")

    M, cert = spike_11(m)
    trace = BuildTrace(s=s, t=t, m=m)
    task = add_task(f"Building ({s},{t})-spike of order {m}", total=s + t - 2)
    for _ in range(t - 1):
        blocker = choose_blocker(M, cert) if choose_blocker else None
        M, cert = quotient_step(M, cert, blocker)
        trace.record(StepOp.QUOTIENT, cert.s, cert.t, M.rank, "free" if blocker is None else "custom")
        update_task(task, advance=1)
    for _ in range(s - 1):
        M, cert = lift_step(M, cert)
        trace.record(StepOp.LIFT, cert.s, cert.t, M.rank)
        update_task(task, advance=1)

    logger.info("Spike built", s=s, t=t, m=m, n=M.n, rank=M.rank)
    return M, cert, trace


def tip_cut(M: Matroid, cert: SpikeCertificate) -> ModularCut:
    """Flats containing at least s-1 arms, generated by the closures of the (s-1)-arm unions."""
    return ModularCut.generated_by(
        M, (closure(M, union) for _, union in cert.partition.unions(cert.s - 1))
    )


def _arms_inside(cert: SpikeCertificate, n: int) -> np.ndarray:
    masks = mask_range(n)
    count = np.zeros(1 << n, dtype=np.int64)
    for arm in cert.arms:
        count += (masks & arm) == arm
    return count


def tip_extension(M: Matroid, cert: SpikeCertificate) -> Matroid:
    """
    Extend by a tip e with e in cl(X) exactly when X contains s-1 arms.

    The tip property is rescanned over every X when n is within the
    configured tip_check_limit.

    Raises:
        ParameterError: s < 2
        InvalidCertificateError: cert does not certify M
        CounterexampleError: the cut is not modular, or the tip property fails
    """
    if cert.s < 2:
        raise ParameterError(f"tip extension needs s >= 2, got s={cert.s}")
    require_certificate(M, cert)
    cut = tip_cut(M, cert)
    try:
        extended = extend_by_modular_cut(M, cut)
    except HypothesisError as exc:
        raise counterexample(M, "arm flats form a modular cut", cert.partition, s=cert.s, t=cert.t) from exc

    if M.n <= get_settings().tip_check_limit:
        low = extended.table[: 1 << M.n]
        spanned = extended.table[1 << M.n :] == low
        expected = _arms_inside(cert, M.n) >= cert.s - 1
        if not np.array_equal(spanned, expected):
            raise counterexample(M, "tip lies in cl(X) iff X holds s-1 arms", cert.partition, s=cert.s, t=cert.t)
    logger.info("Tip extension built", n=M.n, s=cert.s, t=cert.t, generators=len(cut.generators))
    return extended


def untip(M: Matroid, cert: SpikeCertificate) -> tuple[Matroid, SpikeCertificate]:
    """
    Contract the tip: an (s-1,t)-spike on the same arms, rank one lower.

    Raises:
        ParameterError: s < 2
        InvalidCertificateError: cert does not certify M
    """
    extended = tip_extension(M, cert)
    quotient = contract(extended, 1 << M.n).matroid
    result = cert.relabel(cert.s - 1, cert.t)
    try:
        require_certificate(quotient, result)
    except InvalidCertificateError as exc:
        raise counterexample(M, "untipped spike is an (s-1,t)-spike", cert.partition, s=cert.s, t=cert.t) from exc
    logger.info("Tip contracted", s=result.s, t=result.t, rank=quotient.rank)
    return quotient, result
