import pytest
from pydantic import ValidationError

from common.errors import MatroidFormatError
from construct import BuildStep, BuildTrace, StepOp, build_spike, write_trace


def test_trace_text():
    _, _, trace = build_spike(2, 2, 4)
    assert trace.to_text() == (
        "build s=2 t=2 m=4\n"
        "step 1 op=quotient s=1 t=2 rank=3 blocker=free\n"
        "step 2 op=lift s=2 t=2 rank=4 blocker=free\n"
    )
    assert BuildTrace.from_text(trace.to_text()) == trace


def test_trace_file(tmp_path):
    _, _, trace = build_spike(1, 1, 3)
    path = write_trace(trace, tmp_path / "spike.trace")
    assert path.read_text() == "build s=1 t=1 m=3\n"
    assert trace.complete


def test_custom_blocker_round_trips():
    trace = BuildTrace(s=1, t=2, m=4)
    trace.record(StepOp.QUOTIENT, 1, 2, 3, "custom")
    assert trace.to_text() == "build s=1 t=2 m=4\nstep 1 op=quotient s=1 t=2 rank=3 blocker=custom\n"
    assert BuildTrace.from_text(trace.to_text()).steps[0].blocker == "custom"


def test_incomplete_trace():
    trace = BuildTrace(s=2, t=2, m=4)
    trace.record(StepOp.QUOTIENT, 1, 2, 3)
    assert not trace.complete


def test_steps_must_be_numbered_in_order():
    step = BuildStep(k=2, op=StepOp.LIFT, s=2, t=1, rank=4)
    with pytest.raises(ValidationError):
        BuildTrace(s=2, t=1, m=3, steps=[step])


@pytest.mark.parametrize(
    "text",
    [
        "built s=1 t=1 m=2\n",
        "build s=1 t=1 m=2 blocker=free\n",
        "build s=1 t=1 m=two\n",
        "build s=2 t=1 m=3\nstep 2 op=lift s=2 t=1 rank=4\n",
        "build s=2 t=1 m=3\nstep 1 op=twist s=2 t=1 rank=4\n",
        "build s=2 t=1 m=3\nstep 1 op=lift s=2 t=1 rank\n",
        "build s=2 t=1 m=3\nstep 1 op=lift s=2 t=1 rank=4 blocker=mystery\n",
        "build s=2 t=1 m=3\nlift 1\n",
    ],
    ids=["header", "header-extra", "not-int", "sequence", "op", "no-value", "blocker", "not-a-step"],
)
def test_malformed_traces(text):
    with pytest.raises(MatroidFormatError):
        BuildTrace.from_text(text)
