import pytest

from common.config import override_settings
from common.errors import CounterexampleError, HypothesisError, InvalidCertificateError, ParameterError
from construct import (
    ModularCut,
    build_spike,
    lift_step,
    quotient_step,
    spike_11,
    tip_cut,
    tip_extension,
    untip,
)
from construct.modular_cut import in_extension_closure
from core import circuits_of, dual, is_k_connected, uniform, validate
from core.masks import popcount_table
from evals.construct.cases import BUILD_GRID, RANK_EXAMPLES
from evals.construct.evaluators import ElementaryQuotientEvaluator
from evals.spikes.cases import built
from spikes import (
    StructureReport,
    has_property,
    recognize_spike,
    require_certificate,
    verify_coechidna_implication,
    verify_spike_structure,
)


def test_spike_11_is_a_sum_of_parallel_pairs():
    M, cert = spike_11(3)
    assert M.rank == 3
    assert set(circuits_of(M)) == set(cert.arms) == {0b000011, 0b001100, 0b110000}
    assert spike_11(1)[0] == uniform(1, 2)
    with pytest.raises(ParameterError):
        spike_11(0)


@pytest.mark.parametrize("params, rank", RANK_EXAMPLES)
def test_built_rank(params, rank):
    M, cert = built(*params)
    assert M.rank == rank
    assert M.n == 2 * params[2]
    assert (cert.s, cert.t, cert.order) == params


@pytest.mark.parametrize("params", BUILD_GRID, ids=lambda p: "spike-%d-%d-%d" % p)
def test_build_grid(params):
    s, t, m = params
    M, cert = built(s, t, m)
    assert M.rank == m + s - t
    assert validate(M).passed
    require_certificate(M, cert)
    assert recognize_spike(M, s, t) == cert
    assert recognize_spike(dual(M), t, s) == cert.dual()
    assert has_property(M, s, 2 * s, t, 2 * t).holds
    if m >= s + 2 * t - 1:
        assert verify_coechidna_implication(M, cert.partition, s, t)
    if M.n <= 14:
        report = verify_spike_structure(M, cert)
        assert report.passed, report.to_text()


@pytest.mark.parametrize("t, m", [(t, m) for t in (2, 3) for m in (5, 6, 7)])
def test_untipped_spikes_are_one_t_spikes(t, m):
    M, cert = built(2, t, m)
    Q, q_cert = untip(M, cert)
    assert recognize_spike(Q, 1, t) == q_cert
    assert Q.rank == m + 1 - t


@pytest.mark.parametrize("params", [(1, 2, 4), (2, 2, 4), (2, 3, 5), (3, 1, 5)])
def test_dual_of_a_spike_swaps_parameters(params):
    M, cert = built(*params)
    require_certificate(dual(M), cert.dual())
    assert dual(M).rank == params[2] - params[0] + params[1]


def test_one_one_build_is_the_direct_sum():
    assert build_spike(1, 1, 5)[0] == spike_11(5)[0]


def test_build_trace_records_every_step():
    _, _, trace = build_spike(2, 3, 6)
    assert trace.complete
    assert [(step.op.value, step.s, step.t, step.rank) for step in trace.steps] == [
        ("quotient", 1, 2, 5),
        ("quotient", 1, 3, 4),
        ("lift", 2, 3, 5),
    ]


@pytest.mark.parametrize("params", [(2, 2, 3), (3, 1, 3), (0, 1, 4)])
def test_build_rejects_bad_parameters(params):
    with pytest.raises((HypothesisError, ParameterError)):
        build_spike(*params)


def test_quotient_of_parallel_pairs():
    M, cert = spike_11(4)
    Q, q_cert = quotient_step(M, cert)
    assert (q_cert.s, q_cert.t) == (1, 2)
    assert Q.rank == 3
    assert recognize_spike(Q, 1, 2) is not None
    evaluator = ElementaryQuotientEvaluator()
    assert evaluator.measure(M, Q) == 1.0, evaluator.reason


def test_quotient_raises_t():
    M, cert = built(1, 2, 6)
    Q, q_cert = quotient_step(M, cert)
    assert (q_cert.s, q_cert.t) == (1, 3)
    assert Q.rank == 4
    evaluator = ElementaryQuotientEvaluator()
    assert evaluator.measure(M, Q) == 1.0, evaluator.reason


def test_lift_raises_s_and_rank():
    M, cert = built(1, 2, 4)
    L, l_cert = lift_step(M, cert)
    assert (l_cert.s, l_cert.t) == (2, 2)
    assert L.rank == 4
    assert recognize_spike(L, 2, 2) is not None
    evaluator = ElementaryQuotientEvaluator()
    assert evaluator.measure(L, M) == 1.0, evaluator.reason


def test_quotient_needs_order_at_least_s_plus_t():
    M, cert = spike_11(1)
    with pytest.raises(HypothesisError) as info:
        quotient_step(M, cert)
    assert info.value.hypothesis == "order m >= s+t"


def test_quotient_rejects_a_foreign_certificate():
    M, _ = spike_11(3)
    _, cert = built(1, 2, 3)
    with pytest.raises(InvalidCertificateError):
        quotient_step(M, cert)


def test_spikes_of_large_order_are_three_connected():
    M, _ = built(2, 2, 4)
    assert is_k_connected(M, 3) == (True, None)


def test_small_sets_of_a_two_three_spike_have_full_lambda():
    M, _ = built(2, 3, 7)
    sizes = popcount_table(M.n)
    table = M.signed()
    for X in range(1 << M.n):
        if sizes[X] <= 3:
            assert table[X] + table[M.ground ^ X] - M.rank == sizes[X]


@pytest.mark.parametrize("params", [(2, 2, 4), (3, 2, 6)])
def test_tip_lies_on_unions_of_s_minus_one_arms(params):
    M, cert = built(*params)
    extended = tip_extension(M, cert)
    assert extended.n == M.n + 1
    assert extended.rank == M.rank
    for _, union in cert.partition.unions(cert.s - 1):
        assert in_extension_closure(extended, union)
    if cert.s > 2:
        assert not in_extension_closure(extended, cert.arms[0])
    # one element from each of s-1 arms spans no arm
    transversal = sum(arm & -arm for arm in cert.arms[: cert.s - 1])
    assert not in_extension_closure(extended, transversal)


def test_tip_cut_generators_are_arm_closures():
    M, cert = built(2, 2, 4)
    assert set(tip_cut(M, cert).generators) == set(cert.arms)


@pytest.mark.parametrize("params", [(2, 2, 4), (2, 3, 7), (3, 2, 6)])
def test_untip_lowers_s(params):
    M, cert = built(*params)
    Q, q_cert = untip(M, cert)
    assert (q_cert.s, q_cert.t) == (cert.s - 1, cert.t)
    assert Q.rank == M.rank - 1
    assert recognize_spike(Q, q_cert.s, q_cert.t) == q_cert


def test_untip_and_dual_round_trip():
    M, cert = built(2, 2, 4)
    Q, q_cert = untip(M, cert)
    assert recognize_spike(dual(Q), q_cert.t, q_cert.s) == q_cert.dual()
    lifted, lifted_cert = lift_step(Q, q_cert)
    assert lifted_cert == cert
    require_certificate(lifted, cert)


def test_tip_needs_s_at_least_two():
    M, cert = spike_11(3)
    with pytest.raises(ParameterError):
        tip_extension(M, cert)
    with pytest.raises(ParameterError):
        untip(M, cert)


def test_quotient_with_the_ground_set_as_blocker_matches_the_free_one():
    M, cert = built(1, 2, 4)
    blocker = ModularCut.generated_by(M, [M.ground])
    assert quotient_step(M, cert, blocker) == quotient_step(M, cert)


def test_quotient_rejects_a_loop_blocker():
    M, cert = spike_11(3)
    with pytest.raises(HypothesisError) as info:
        quotient_step(M, cert, ModularCut.generated_by(M, [0]))
    assert info.value.hypothesis == "e blocks every union of 1 arms"


def test_quotient_rejects_a_coloop_blocker(isolated_settings):
    M, cert = spike_11(3)
    with pytest.raises(HypothesisError) as info:
        quotient_step(M, cert, ModularCut.generated_by(M, []))
    assert info.value.hypothesis == "e is not a coloop of M+e"
    assert not isolated_settings.artifact_dir.exists()


def test_build_records_custom_blockers():
    chosen = []

    def ground_cut(M, cert):
        chosen.append((cert.s, cert.t))
        return ModularCut.generated_by(M, [M.ground])

    M, cert, trace = build_spike(2, 3, 6, choose_blocker=ground_cut)
    assert chosen == [(1, 1), (1, 2)]
    assert [step.blocker for step in trace.steps] == ["custom", "custom", "free"]
    assert (M, cert) == built(2, 3, 6)


def test_deep_verification_runs_the_structure_checks(monkeypatch):
    calls = []

    def counting(M, cert):
        calls.append((cert.s, cert.t))
        return verify_spike_structure(M, cert)

    monkeypatch.setattr("construct.pipeline.verify_spike_structure", counting)
    build_spike(2, 2, 4)
    assert calls == []
    override_settings(deep_verify=True)
    build_spike(2, 2, 4)
    assert calls == [(1, 2), (2, 2)]


def test_deep_verification_failure_is_a_counterexample(monkeypatch, isolated_settings):
    report = StructureReport()
    report.add("rank", False, expected=0, actual=1)
    monkeypatch.setattr("construct.pipeline.verify_spike_structure", lambda M, cert: report)
    override_settings(deep_verify=True)
    M, cert = spike_11(3)
    with pytest.raises(CounterexampleError):
        quotient_step(M, cert)
    assert any(isolated_settings.artifact_dir.glob("*.mtx"))
