import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nnlab import oracle
from nnlab.errors import EnumerationCapError
from nnlab.excite import (
    DEFAULT_CAP,
    ExcitedDiagram,
    classify_by_first_row,
    default_cap,
    enumerate_excited,
    excited_moves,
)
from nnlab.shapes import DescentSet, Partition, SkewShape, descent_to_skew

FIG = SkewShape(Partition((3, 3, 2, 1)), Partition((2, 1)))


def diagram(*cells):
    return ExcitedDiagram(tuple(cells))


def test_moves_from_inner_shape():
    start = diagram((1, 1), (1, 2), (2, 1))
    assert excited_moves(start, (3, 3, 2, 1)) == sorted(
        [diagram((1, 1), (2, 3), (2, 1)), diagram((1, 1), (1, 2), (3, 2))]
    )


def test_terminal_diagram_has_no_moves():
    ds = enumerate_excited(FIG)
    terminal = [d for d in ds if not excited_moves(d, FIG.outer)]
    assert len(terminal) == 1
    assert terminal[0] == diagram((2, 2), (2, 3), (3, 2))


def test_empty_diagram_has_no_moves():
    assert excited_moves(diagram(), (3, 2)) == []


def test_enumerate_examples():
    assert len(enumerate_excited(FIG)) == 5
    assert enumerate_excited(((2, 2), (1,))) == [diagram((1, 1)), diagram((2, 2))]
    assert enumerate_excited(((4, 2, 1), ())) == [diagram()]


def test_enumerate_is_sorted_and_unique():
    ds = enumerate_excited(((4, 4, 3, 3), (2, 2, 1)))
    assert ds == sorted(set(ds))


def test_classify_examples():
    sizes = {k: len(v) for k, v in classify_by_first_row(FIG).items()}
    assert sizes == {2: 2, 1: 2, 0: 1}
    assert {k: len(v) for k, v in classify_by_first_row(((2, 2), (1,))).items()} == {1: 1, 0: 1}
    classes = classify_by_first_row(((2, 2, 2), (1, 1)))
    assert {k: len(v) for k, v in classes.items()} == {1: 2, 0: 1}
    assert classes[0] == [diagram((2, 2), (3, 2))]


def test_cap():
    with pytest.raises(EnumerationCapError):
        enumerate_excited(FIG, cap=4)
    assert len(enumerate_excited(FIG, cap=5)) == 5


def test_cap_env(monkeypatch):
    monkeypatch.delenv("NNLAB_CAP", raising=False)
    assert default_cap() == DEFAULT_CAP == 10**6
    monkeypatch.setenv("NNLAB_CAP", "3")
    with pytest.raises(EnumerationCapError):
        enumerate_excited(FIG)


descent_sets = st.sets(st.integers(1, 9), min_size=1, max_size=6).map(lambda s: DescentSet(tuple(s)))


@settings(max_examples=150, deadline=None)
@given(descent_sets)
def test_excited_diagram_invariants(I):
    sh = descent_to_skew(I)
    ds = enumerate_excited(sh)
    if sh.inner.size <= oracle.EXCITED_INNER_CAP and sh.outer.size <= oracle.EXCITED_OUTER_CAP:
        assert ds == oracle.brute_excited(sh)
    for d in ds:
        assert len(d) == sh.inner.size
        assert all(c in sh.outer for c in d)
        cols = sorted(c.col for c in d.first_row())
        assert cols == list(range(1, len(cols) + 1))
