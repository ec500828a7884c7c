import pytest

from common.config import override_settings
from common.errors import ParameterError
from core import circuits_of, contract, delete, direct_sum, dual, restrict, uniform
from evals.core.cases import dataset, graphic_k4, lines
from evals.core.evaluators import DualAgreementEvaluator


@pytest.mark.parametrize("case", dataset, ids=lambda case: case.name)
def test_dual_is_an_involution(case):
    assert dual(dual(case.matroid)) == case.matroid


@pytest.mark.parametrize("case", dataset, ids=lambda case: case.name)
def test_dual_matches_basis_complements(case):
    evaluator = DualAgreementEvaluator()
    assert evaluator.measure(case.matroid, dual(case.matroid)) == 1.0, evaluator.reason


def test_uniform_duals():
    assert dual(uniform(2, 4)) == uniform(2, 4)
    assert dual(uniform(1, 3)) == uniform(2, 3)
    assert dual(uniform(0, 2)) == uniform(2, 2)


def test_delete_renumbers_survivors():
    minor = delete(uniform(2, 4), 0b0001)
    assert minor.matroid == uniform(2, 3)
    assert minor.index_map == {1: 0, 2: 1, 3: 2}


def test_contract_and_restrict():
    assert contract(uniform(2, 4), 0b0001).matroid == uniform(1, 3)
    assert contract(uniform(2, 4), 0b0011).matroid == uniform(0, 2)
    assert restrict(uniform(2, 4), 0b0111).matroid == uniform(2, 3)


@pytest.mark.parametrize("removed", [0b000001, 0b100001, 0b011010, 0b111000])
def test_minors_commute_with_duality(removed):
    M = graphic_k4.matroid
    assert dual(delete(M, removed).matroid) == contract(dual(M), removed).matroid
    assert dual(contract(M, removed).matroid) == delete(dual(M), removed).matroid


def test_deleting_a_line_point_keeps_rank():
    minor = delete(lines.matroid, 0b1)
    assert minor.matroid.rank == 3
    assert minor.matroid.n == 7


def test_direct_sum_places_second_summand_above():
    M = direct_sum(uniform(1, 2), uniform(1, 2))
    assert M.rank == 2
    assert set(circuits_of(M)) == {0b0011, 0b1100}
    assert direct_sum(uniform(0, 1), uniform(1, 1)).r(0b10) == 1


def test_minor_rejects_foreign_elements():
    with pytest.raises(ParameterError):
        delete(uniform(2, 4), 0b10000)
    with pytest.raises(ParameterError):
        contract(uniform(2, 4), -1)


def test_direct_sum_respects_the_cap():
    override_settings(cap=4)
    with pytest.raises(ParameterError):
        direct_sum(uniform(1, 3), uniform(1, 2))
