import pytest

from common.errors import MatroidFormatError
from core import dumps_matroid, loads_matroid, read_matroid, uniform, write_matroid
from evals.core.cases import dataset


def test_dumps_uniform():
    assert dumps_matroid(uniform(1, 2)) == "matroid v1\nn 2\nrank 1\ncircuits\n0 1\nend\n"


def test_circuits_are_written_by_size_then_lexicographically():
    text = dumps_matroid(uniform(2, 4))
    assert text.split("\n")[4:8] == ["0 1 2", "0 1 3", "0 2 3", "1 2 3"]


@pytest.mark.parametrize("case", dataset, ids=lambda case: case.name)
def test_text_round_trip(case):
    assert loads_matroid(dumps_matroid(case.matroid)) == case.matroid


def test_rank_line_is_optional():
    assert loads_matroid("matroid v1\nn 3\ncircuits\n0 1\nend") == loads_matroid(
        "matroid v1\nn 3\nrank 2\ncircuits\n0 1\nend\n"
    )


def test_file_round_trip(tmp_path):
    path = write_matroid(uniform(2, 5), tmp_path / "u25.mtx")
    assert read_matroid(path) == uniform(2, 5)


@pytest.mark.parametrize(
    "text, line",
    [
        ("matroid v2\nn 2\ncircuits\nend\n", 1),
        ("matroid v1\nn two\ncircuits\nend\n", 2),
        ("matroid v1\nn 3\nrank x\ncircuits\nend\n", 3),
        ("matroid v1\nn 3\ncircuits\n0 1\n0 1 2\nend\n", 5),
        ("matroid v1\nn 3\ncircuits\n0 1\n0 1\nend\n", 5),
        ("matroid v1\nn 3\ncircuits\n0 3\nend\n", 4),
        ("matroid v1\nn 3\ncircuits\n1 0\nend\n", 4),
        ("matroid v1\nn 3\ncircuits\n0 a\nend\n", 4),
        ("matroid v1\nn 3\ncircuits\n0 1\nend\nextra\n", 6),
    ],
    ids=[
        "header",
        "n-not-int",
        "rank-not-int",
        "comparable",
        "duplicate",
        "out-of-range",
        "not-increasing",
        "not-int",
        "after-end",
    ],
)
def test_malformed_text_names_the_line(text, line):
    with pytest.raises(MatroidFormatError) as info:
        loads_matroid(text)
    assert info.value.line == line


@pytest.mark.parametrize(
    "text",
    [
        "matroid v1\nn 2\ncircuits\n0 1\n",
        "matroid v1\nn 2\nrank 2\ncircuits\n0 1\nend\n",
        "matroid v1\nn 4\ncircuits\n0 1 2\n1 2 3\nend\n",
        "",
    ],
    ids=["missing-end", "rank-mismatch", "not-a-matroid", "empty"],
)
def test_malformed_text_is_rejected(text):
    with pytest.raises(MatroidFormatError):
        loads_matroid(text)
