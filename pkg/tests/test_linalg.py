from fractions import Fraction as F

from crsym.linalg import SpanSolver, rank, rational_kernel


def test_kernel_examples():
    assert rational_kernel([[1, 0], [0, 1]], 2) == []
    assert len(rational_kernel([[0, 0, 0], [0, 0, 0]], 3)) == 3
    (v,) = rational_kernel([[1, 1, 0], [0, 0, 1]], 3)
    assert v == [F(-1), F(1), F(0)] or v == [F(1), F(-1), F(0)]


def test_kernel_vectors_annihilate():
    rows = [[F(1, 2), 3, -1, 0], [2, F(-1, 3), 0, 5], [F(5, 2), F(8, 3), -1, 5]]
    ker = rational_kernel(rows, 4)
    assert len(ker) == 4 - rank(rows)
    for v in ker:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0


def test_span_solver():
    s = SpanSolver([{0: 1, 1: 1}, {1: 1, 2: F(1, 2)}])
    assert s.solve({0: 1, 1: 2, 2: F(1, 2)}) == [1, 1]
    assert s.solve({0: 1}) is None
    assert s.solve({5: 1}) is None
