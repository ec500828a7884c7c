# Spike constructions: modular cuts, single-element extensions, quotients, lifts and tips

from .modular_cut import (
    CutCheck,
    ModularCut,
    blocks_cocircuit,
    enumerate_modular_cuts,
    extend_by_modular_cut,
    free_extension,
    in_extension_closure,
    is_modular_cut,
)
from .pipeline import (
    BlockerChooser,
    build_spike,
    lift_step,
    quotient_step,
    spike_11,
    tip_cut,
    tip_extension,
    untip,
)
from .trace import BuildStep, BuildTrace, StepOp, write_trace

__all__ = [
    "BlockerChooser",
    "BuildStep",
    "BuildTrace",
    "CutCheck",
    "ModularCut",
    "StepOp",
    "blocks_cocircuit",
    "build_spike",
    "enumerate_modular_cuts",
    "extend_by_modular_cut",
    "free_extension",
    "in_extension_closure",
    "is_modular_cut",
    "lift_step",
    "quotient_step",
    "spike_11",
    "tip_cut",
    "tip_extension",
    "untip",
    "write_trace",
]
