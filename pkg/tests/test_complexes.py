"""Face enumeration, f-vectors, and Euler characteristics."""

import itertools
from math import comb

import pytest
from hypothesis import given

from gammashell import (
    BudgetError,
    DomainError,
    canonical_face,
    check_vertex,
    dixon_lhs,
    enumerate_faces,
    f_vector_enumerated,
    f_vector_formula,
    is_face,
    make_complex,
    order_key,
    reduced_euler_characteristic,
    sigma_word,
)

from .conftest import all_faces_bruteforce, faces


@pytest.mark.parametrize("p,n", [(0, 2), (3, 0), (-1, 4), (2, -2)])
def test_make_complex_rejects_bad_parameters(p, n):
    with pytest.raises(DomainError):
        make_complex(p, n)


def test_check_vertex_rejects_bad_coordinates():
    params = make_complex(3, 4)
    assert check_vertex(params, [1, 2, 4]) == (1, 2, 4)
    with pytest.raises(DomainError):
        check_vertex(params, (1, 2))
    with pytest.raises(DomainError):
        check_vertex(params, (1, 2, 5))
    with pytest.raises(DomainError):
        check_vertex(params, (0, 2, 3))


def test_canonical_face_sorts_by_first_coordinate():
    params = make_complex(3, 4)
    face = canonical_face(params, [(3, 3, 4), (1, 1, 2), (2, 2, 3)])
    assert face == ((1, 1, 2), (2, 2, 3), (3, 3, 4))


def test_is_face_examples():
    params = make_complex(2, 4)
    assert is_face(params, [])
    assert is_face(params, [(1, 1)])
    assert is_face(params, [(1, 1), (2, 2)])
    assert is_face(params, [(2, 2), (1, 1)])
    assert not is_face(params, [(1, 1), (1, 2)])
    assert not is_face(params, [(1, 2), (2, 2)])


@given(faces())
def test_generated_faces_are_faces(pair):
    params, face = pair
    assert is_face(params, face)


@given(faces(max_p=2, max_n=4))
def test_flattening_a_coordinate_breaks_the_face(pair):
    params, face = pair
    if len(face) < 2:
        return
    # copy one coordinate of the second vertex from the first
    v = list(face[1])
    v[0] = face[0][0]
    assert not is_face(params, (face[0], tuple(v)) + face[2:])


@pytest.mark.parametrize("p,n", [(1, 3), (2, 3), (3, 3), (2, 4)])
def test_enumerate_faces_matches_subset_filtering(p, n):
    params = make_complex(p, n)
    for dim in range(-1, n):
        got = list(enumerate_faces(params, dim))
        expected = all_faces_bruteforce(params, dim)
        assert sorted(got) == sorted(expected)


def test_enumerate_faces_is_sorted_and_duplicate_free():
    params = make_complex(3, 4)
    for dim in range(-1, 4):
        got = list(enumerate_faces(params, dim))
        assert len(set(got)) == len(got)
        assert got == sorted(got, key=sigma_word)
        assert all(is_face(params, f) for f in got)


def test_enumerate_faces_degenerate_dimensions():
    params = make_complex(3, 2)
    assert list(enumerate_faces(params, -1)) == [()]
    assert list(enumerate_faces(params, 2)) == []
    assert list(enumerate_faces(params, -2)) == []


def test_enumerate_faces_budget():
    params = make_complex(3, 6)
    with pytest.raises(BudgetError, match="dimension 2"):
        list(enumerate_faces(params, 2, budget=100))


def test_f_vector_formula_examples():
    assert f_vector_formula(make_complex(3, 2)) == (1, 8, 1)
    assert f_vector_formula(make_complex(3, 4)) == (1, 64, 216, 64, 1)
    assert f_vector_formula(make_complex(2, 4)) == (1, 16, 36, 16, 1)
    assert f_vector_formula(make_complex(1, 5)) == tuple(
        comb(5, s) for s in range(6)
    )


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_f_vector_enumerated_equals_formula(p, n):
    params = make_complex(p, n)
    assert f_vector_enumerated(params) == f_vector_formula(params)


def test_f_vector_enumerated_budget():
    with pytest.raises(BudgetError):
        f_vector_enumerated(make_complex(3, 4), budget=10)


def test_f_vector_symmetry():
    for p, n in itertools.product(range(1, 4), range(1, 7)):
        f = f_vector_formula(make_complex(p, n))
        assert f == tuple(reversed(f))


def test_reduced_euler_examples():
    assert reduced_euler_characteristic((1, 8, 1)) == 6
    assert reduced_euler_characteristic((1, 27, 27, 1)) == 0
    for n in range(1, 7):
        assert reduced_euler_characteristic(f_vector_formula(make_complex(1, n))) == 0


def test_reduced_euler_requires_reduced_f_vector():
    with pytest.raises(DomainError):
        reduced_euler_characteristic((8, 1))
    with pytest.raises(DomainError):
        reduced_euler_characteristic(())


def test_euler_characteristic_equals_negated_cube_sum():
    for n in range(1, 11):
        chi = reduced_euler_characteristic(f_vector_formula(make_complex(3, n)))
        assert chi == -dixon_lhs(n)


def test_order_key_sorts_by_dimension_then_sigma_word():
    faces_list = [
        ((2, 2, 2),),
        ((1, 1, 1), (2, 2, 2)),
        ((1, 1, 2),),
        ((1, 2, 1), (2, 3, 3)),
    ]
    ordered = sorted(faces_list, key=order_key)
    assert ordered == [
        ((1, 1, 1), (2, 2, 2)),
        ((1, 2, 1), (2, 3, 3)),
        ((1, 1, 2),),
        ((2, 2, 2),),
    ]
