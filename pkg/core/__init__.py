# Exact small-matroid engine: rank tables, axioms, minors, duality, connectivity

from .connectivity import Separation, connectivity_table, is_k_connected, lambda_
from .io import dumps_matroid, loads_matroid, read_matroid, write_matroid
from .masks import SubsetMask, format_mask, indices_of, mask_of
from .matroid import (
    CircuitFamily,
    Matroid,
    ValidationReport,
    Violation,
    bases,
    check_orthogonality,
    circuits_of,
    closure,
    closure_table,
    cocircuits_of,
    corank,
    flat_indicator,
    flats,
    free_matroid,
    from_circuits,
    hyperplanes,
    is_circuit,
    is_cocircuit,
    is_flat,
    is_independent,
    rank,
    uniform,
    validate,
)
from .minors import Minor, contract, delete, direct_sum, dual, restrict

__all__ = [
    "CircuitFamily",
    "Matroid",
    "Minor",
    "Separation",
    "SubsetMask",
    "ValidationReport",
    "Violation",
    "bases",
    "check_orthogonality",
    "circuits_of",
    "closure",
    "closure_table",
    "cocircuits_of",
    "connectivity_table",
    "contract",
    "corank",
    "delete",
    "direct_sum",
    "dual",
    "dumps_matroid",
    "flat_indicator",
    "flats",
    "format_mask",
    "free_matroid",
    "from_circuits",
    "hyperplanes",
    "indices_of",
    "is_circuit",
    "is_cocircuit",
    "is_flat",
    "is_independent",
    "is_k_connected",
    "lambda_",
    "loads_matroid",
    "mask_of",
    "rank",
    "read_matroid",
    "restrict",
    "uniform",
    "validate",
    "write_matroid",
]
