import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ragrowth import IntMatrix, Poly, RationalFunction, resolvent_apply, resolvent_exact, series_expand
from ragrowth.resolvent import resolvent_solve, resolvents_agree


def test_apply_examples():
    z = IntMatrix.zeros(3)
    assert resolvent_apply(z, [1, 0, 0], 4) == [[1, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]]
    assert resolvent_apply(IntMatrix.identity(2), [3, -4], 5) == [[3, -4]] * 5
    swap = IntMatrix([[0, 1], [1, 0]])
    assert resolvent_apply(swap, [1, 1], 6) == [[1, 1]] * 6
    with pytest.raises(ValueError):
        resolvent_apply(swap, [1, 1, 1], 2)


def test_exact_examples():
    assert resolvent_exact(IntMatrix.zeros(3), [1, 0, 0]) == [
        RationalFunction([0, 1]), RationalFunction(0), RationalFunction(0)]
    for k in (-2, 0, 3, 7):
        assert resolvent_exact(IntMatrix([[k]]), [1]) == [RationalFunction([0, 1], [1, -k])]
    # weak branching matrix of the single edge, cliques {1}, {2}, {1,2}
    b1 = IntMatrix([[0, 0, 0], [0, 0, 0], [1, 1, 0]])
    assert resolvent_exact(b1, [1, 1, 0]) == [
        RationalFunction([0, 1]), RationalFunction([0, 1]), RationalFunction([0, 0, 2])]


def test_dense_two_by_two():
    # det(I - Mt) = (1 - t)(1 - 4t) - 6t^2
    m = IntMatrix([[1, 2], [3, 4]])
    y, det = resolvent_solve(m, [1, 1])
    assert det.coeffs == (1, -5, -2)
    assert resolvents_agree(m, [1, 1], 12)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        resolvent_exact(IntMatrix.identity(2), [1])


matrices = st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(-3, 3), min_size=n, max_size=n)))


@settings(max_examples=120, deadline=None)
@given(matrices)
def test_exact_agrees_with_iteration(data):
    rows, v1 = data
    m = IntMatrix(rows)
    iterated = resolvent_apply(m, v1, 12)
    for k, f in enumerate(resolvent_exact(m, v1)):
        assert list(series_expand(f, 12))[1:] == [v[k] for v in iterated]
        assert series_expand(f, 12)[0] == 0


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_determinant_has_constant_term_one(data):
    rows, v1 = data
    _, det = resolvent_solve(IntMatrix(rows), v1)
    assert abs(det[0]) == 1


def test_nilpotency_and_products():
    strict = IntMatrix([[0, 0], [1, 0]])
    assert strict.is_nilpotent()
    assert not IntMatrix([[0, 1], [1, 0]]).is_nilpotent()
    assert strict * strict == IntMatrix.zeros(2)


big_matrices = st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=n, max_size=n)))


@settings(max_examples=60, deadline=None)
@given(big_matrices)
def test_large_entries(data):
    rows, v1 = data
    assert resolvents_agree(IntMatrix(rows), v1, 10)


def test_solution_satisfies_system():
    # (I - Mt) y = t det v1, checked as polynomials
    m = IntMatrix([[2, -1, 0, 5], [0, 0, 3, 1], [7, 1, -4, 0], [1, 1, 1, 1]])
    v1 = [1, -2, 0, 3]
    y, det = resolvent_solve(m, v1)
    t = Poly.t()
    for i in range(4):
        lhs = y[i] - t * sum(y[j] * m[i, j] for j in range(4))
        assert lhs == t * det * v1[i]
