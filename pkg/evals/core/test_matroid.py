import numpy as np
import pytest

from common.config import override_settings
from common.errors import InvalidCircuitsError, ParameterError
from core import (
    Matroid,
    bases,
    check_orthogonality,
    circuits_of,
    closure,
    closure_table,
    cocircuits_of,
    corank,
    flats,
    from_circuits,
    hyperplanes,
    is_circuit,
    is_cocircuit,
    is_flat,
    is_independent,
    mask_of,
    uniform,
    validate,
)
from corpus import K4_SQUARES, K4_TRIANGLES
from evals.core.cases import dataset, graphic_k4, u24
from evals.core.evaluators import (
    RankAgreementEvaluator,
    brute_circuits,
    brute_closure,
    brute_cocircuits,
    brute_hyperplanes,
)


@pytest.mark.parametrize("case", dataset, ids=lambda case: case.name)
def test_seed_counts(case):
    M = case.matroid
    assert validate(M).passed
    assert M.rank == case.metadata["rank"]
    assert len(circuits_of(M)) == case.metadata["circuits"]
    assert len(bases(M)) == case.metadata["bases"]
    assert len(flats(M)) == case.metadata["flats"]


@pytest.mark.parametrize("case", dataset, ids=lambda case: case.name)
def test_families_match_brute_force(case):
    M = case.matroid
    assert set(circuits_of(M)) == brute_circuits(M)
    assert set(cocircuits_of(M)) == brute_cocircuits(M)
    assert set(hyperplanes(M)) == brute_hyperplanes(M)


@pytest.mark.parametrize("case", dataset, ids=lambda case: case.name)
def test_rank_table_agrees_with_circuits(case):
    evaluator = RankAgreementEvaluator()
    assert evaluator.measure(case.matroid) == 1.0, evaluator.reason


@pytest.mark.parametrize("case", dataset, ids=lambda case: case.name)
def test_closure_table_matches_pointwise_closure(case):
    M = case.matroid
    table = closure_table(M)
    for X in range(1 << M.n):
        assert int(table[X]) == brute_closure(M, X) == closure(M, X)


@pytest.mark.parametrize("case", dataset, ids=lambda case: case.name)
def test_circuits_and_cocircuits_are_orthogonal(case):
    assert check_orthogonality(case.matroid) is None


def test_circuit_family_is_sorted_by_size_then_value():
    members = circuits_of(graphic_k4.matroid).members
    assert members == tuple(sorted(members, key=lambda mask: (mask.bit_count(), mask)))
    assert set(circuits_of(graphic_k4.matroid).of_size(3)) == {mask_of(c) for c in K4_TRIANGLES}


def test_k4_point_queries():
    M = graphic_k4.matroid
    for triangle in K4_TRIANGLES:
        assert is_circuit(M, mask_of(triangle))
        assert not is_independent(M, mask_of(triangle))
    for square in K4_SQUARES:
        assert is_circuit(M, mask_of(square))
        assert is_cocircuit(M, mask_of(square))
    # edges at vertex 1
    star = mask_of((0, 1, 2))
    assert is_cocircuit(M, star)
    assert is_independent(M, star)
    assert corank(M, star) == 2
    assert is_flat(M, mask_of((0, 5)))
    assert not is_flat(M, mask_of((0, 1)))


def test_uniform_closure():
    M = u24.matroid
    assert closure(M, 0b0001) == 0b0001
    assert closure(M, 0b0011) == 0b1111
    assert not is_circuit(M, 0)
    assert not is_cocircuit(M, 0)


def test_from_circuits_rebuilds_uniform():
    triangles = [mask_of(c) for c in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]]
    assert from_circuits(4, triangles) == uniform(2, 4)


def test_from_circuits_without_circuits_is_free():
    M = from_circuits(3, [])
    assert M.rank == 3
    assert len(circuits_of(M)) == 0


@pytest.mark.parametrize(
    "circuits",
    [
        [0],
        [0b011, 0b111],
        # elimination on the shared element 1 needs a circuit inside {0, 2, 3}
        [0b0111, 0b1110],
    ],
    ids=["empty", "comparable", "elimination"],
)
def test_from_circuits_rejects_non_matroid_families(circuits):
    with pytest.raises(InvalidCircuitsError):
        from_circuits(4, circuits)


def test_from_circuits_rejects_out_of_range_mask():
    with pytest.raises(ParameterError):
        from_circuits(2, [0b100])


def test_validate_reports_submodularity():
    report = validate(Matroid(2, np.array([0, 0, 0, 1])))
    assert not report.passed
    assert [v.axiom for v in report.violations] == ["submodularity"]
    assert report.violations[0].witness == [0, 1, 2]


def test_validate_reports_cardinality_and_normalization():
    axioms = {v.axiom for v in validate(Matroid(2, np.array([0, 1, 1, 3]))).violations}
    assert "cardinality" in axioms
    axioms = {v.axiom for v in validate(Matroid(1, np.array([1, 1]))).violations}
    assert "normalization" in axioms


def test_table_length_is_checked():
    with pytest.raises(ParameterError):
        Matroid(3, np.zeros(4))


def test_uniform_parameters():
    with pytest.raises(ParameterError):
        uniform(5, 4)
    override_settings(cap=6)
    with pytest.raises(ParameterError):
        uniform(2, 7)


def test_equality_and_hash_follow_the_table():
    assert uniform(2, 4) == uniform(2, 4)
    assert hash(uniform(2, 4)) == hash(uniform(2, 4))
    assert uniform(2, 4) != uniform(1, 4)
    assert uniform(2, 4).table.flags.writeable is False
