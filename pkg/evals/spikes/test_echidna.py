import pytest

from common.errors import CounterexampleError, HypothesisError, InvalidCertificateError, ParameterError
from corpus import K4_MATCHINGS
from evals.spikes.cases import built, graphic_k4
from spikes import (
    PairPartition,
    SpikeCertificate,
    extend_echidna,
    is_echidna,
    is_maximal_echidna,
    require_certificate,
    verify_coechidna_implication,
    verify_spine_circuits,
)
from spikes.echidna import failing_union

MATCHINGS = PairPartition.from_indices(K4_MATCHINGS)
SPLIT = PairPartition.from_indices([(0, 1), (2, 3), (4, 5)])


def _prefix(partition: PairPartition, k: int) -> PairPartition:
    return PairPartition(pairs=partition.pairs[:k])


def test_k4_matchings_form_an_echidna_and_coechidna():
    M = graphic_k4.matroid
    assert is_echidna(M, MATCHINGS, 2)
    assert is_echidna(M, MATCHINGS, 2, co=True)
    assert is_maximal_echidna(M, MATCHINGS, 2)


def test_triangle_inside_a_union_breaks_the_echidna():
    M = graphic_k4.matroid
    assert not is_echidna(M, SPLIT, 2)
    assert failing_union(M, SPLIT, 2) == 0b001111


def test_partial_echidna_is_not_maximal():
    M = graphic_k4.matroid
    partial = _prefix(MATCHINGS, 2)
    assert is_echidna(M, partial, 2)
    assert not is_maximal_echidna(M, partial, 2)


@pytest.mark.parametrize("k", [0, 4])
def test_union_size_must_fit_the_partition(k):
    with pytest.raises(ParameterError):
        failing_union(graphic_k4.matroid, MATCHINGS, k)


def test_require_certificate_names_uncovered_elements():
    cert = SpikeCertificate(s=2, t=2, partition=_prefix(MATCHINGS, 2))
    with pytest.raises(InvalidCertificateError) as info:
        require_certificate(graphic_k4.matroid, cert)
    assert info.value.detail == "arms do not cover the ground set"
    assert info.value.witness == 0b001100


def test_require_certificate_rejects_non_circuit_unions():
    with pytest.raises(InvalidCertificateError) as info:
        require_certificate(graphic_k4.matroid, SpikeCertificate(s=2, t=2, partition=SPLIT))
    assert info.value.witness == 0b001111


def test_require_certificate_rejects_small_order():
    M, cert = built(1, 1, 2)
    with pytest.raises(InvalidCertificateError):
        require_certificate(M, cert.relabel(1, 3))


def test_coechidna_implication_holds_on_spikes():
    M, cert = built(2, 2, 6)
    assert verify_coechidna_implication(M, cert.partition, 2, 2)
    assert verify_coechidna_implication(M, _prefix(cert.partition, 5), 2, 2)
    M, cert = built(2, 3, 7)
    assert verify_coechidna_implication(M, cert.partition, 2, 3)


def test_coechidna_implication_needs_enough_spines():
    M, cert = built(2, 2, 4)
    with pytest.raises(HypothesisError):
        verify_coechidna_implication(M, cert.partition, 2, 2)


def test_spine_circuits_on_a_spike():
    M, cert = built(2, 2, 6)
    assert verify_spine_circuits(M, cert.partition, 2, 2)


def test_extend_echidna_recovers_the_missing_arm():
    M, cert = built(2, 2, 6)
    extended = extend_echidna(M, _prefix(cert.partition, 5), 2, 2)
    assert extended.partition == cert.partition
    assert (extended.s, extended.t) == (2, 2)


def test_extend_echidna_pairs_parallel_elements():
    M, cert = built(1, 2, 5)
    assert extend_echidna(M, _prefix(cert.partition, 4), 1, 2).partition == cert.partition


def test_extend_echidna_keeps_a_full_partition():
    M, cert = built(2, 3, 7)
    assert extend_echidna(M, cert.partition, 2, 3).partition == cert.partition


@pytest.mark.parametrize(
    "params, kept",
    [((1, 2, 4), 3), ((2, 2, 6), 4)],
)
def test_extend_echidna_needs_enough_spines(params, kept):
    M, cert = built(*params)
    with pytest.raises(HypothesisError):
        extend_echidna(M, _prefix(cert.partition, kept), cert.s, cert.t)


def test_extend_echidna_stops_when_the_spine_circuits_are_missing(monkeypatch, isolated_settings):
    M, cert = built(2, 2, 6)
    monkeypatch.setattr("spikes.echidna.verify_spine_circuits", lambda *args: False)
    with pytest.raises(CounterexampleError) as info:
        extend_echidna(M, _prefix(cert.partition, 5), 2, 2)
    assert info.value.statement == "spines lie in small circuits"
    assert info.value.artifact.parent == isolated_settings.artifact_dir
