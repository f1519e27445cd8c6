"""The complexes Gamma_p(n): faces, f-vectors, Euler characteristics.

Vertices are p-tuples with entries in [1, n].  A face is a set of vertices
that can be ordered so that every coordinate increases strictly from one
vertex to the next; Delta(n) denotes the p = 3 member of the family.  All
structure derives from the pair (p, n) and nothing is materialized until an
enumeration is requested.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import BudgetError, DomainError

Vertex = tuple[int, ...]
Face = tuple[Vertex, ...]

# Sum_s C(n,s)^p explodes near n = 12 for p = 3; enumeration stops here.
DEFAULT_FACE_BUDGET = 10**8


@dataclass(frozen=True)
class ComplexParams:
    """Parameters (p, n) identifying the complex Gamma_p(n)."""

    p: int
    n: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.n < 1:
            raise DomainError(f"need p >= 1 and n >= 1, got p={self.p}, n={self.n}")


def make_complex(p: int, n: int) -> ComplexParams:
    """Validate (p, n) and return the parameters for Gamma_p(n)."""
    return ComplexParams(p, n)


def check_vertex(params: ComplexParams, vertex: Sequence[int]) -> Vertex:
    """Return the vertex as a tuple, rejecting wrong arity or range."""
    v = tuple(vertex)
    if len(v) != params.p:
        raise DomainError(f"vertex {v} does not have arity {params.p}")
    for c in v:
        if not isinstance(c, int) or c < 1 or c > params.n:
            raise DomainError(f"vertex {v} has a coordinate outside [1, {params.n}]")
    return v


def canonical_face(params: ComplexParams, vertices: Iterable[Sequence[int]]) -> Face:
    """Validate the vertices and return them sorted by first coordinate.

    Strict coordinatewise increase makes any single coordinate a valid sort
    key, so this is the normal form for faces.
    """
    vs = tuple(check_vertex(params, v) for v in vertices)
    return tuple(sorted(vs, key=lambda v: v[0]))


def is_face(params: ComplexParams, vertices: Iterable[Sequence[int]]) -> bool:
    """True iff the vertices form a face of Gamma_p(n).

    The empty collection is the empty face and always counts.
    """
    face = canonical_face(params, vertices)
    for prev, cur in zip(face, face[1:]):
        if any(b <= a for a, b in zip(prev, cur)):
            return False
    return True


def sigma_word(face: Face) -> tuple[int, ...]:
    """Flatten a face into its coordinate sequence, vertex by vertex."""
    return tuple(c for v in face for c in v)


def order_key(face: Face):
    """Sort key for the facet order: dimension descending, sigma word ascending."""
    return (-len(face), sigma_word(face))


def enumerate_faces(
    params: ComplexParams, dim: int, budget: int | None = DEFAULT_FACE_BUDGET
) -> Iterator[Face]:
    """Yield every face of the given dimension once, sorted by sigma word.

    A face of dimension d chooses d+1 values independently in each of the p
    coordinates, so the count is C(n, d+1)^p.  Dimensions outside [-1, n-1]
    yield nothing.
    """
    if dim < -1 or dim > params.n - 1:
        return
    if dim == -1:
        yield ()
        return
    r = dim + 1
    count = comb(params.n, r) ** params.p
    if budget is not None and count > budget:
        raise BudgetError(
            f"{count} faces of dimension {dim} exceed the budget of {budget}"
        )
    values = range(1, params.n + 1)
    columns = itertools.product(itertools.combinations(values, r), repeat=params.p)
    faces = [tuple(zip(*cols)) for cols in columns]
    faces.sort(key=sigma_word)
    yield from faces


def f_vector_formula(params: ComplexParams) -> tuple[int, ...]:
    """Reduced f-vector (f_-1, f_0, ..., f_{n-1}) from the closed-form counts.

    f_{s-1} = C(n, s)^p; the s = 0 term is the empty face.
    """
    return tuple(comb(params.n, s) ** params.p for s in range(params.n + 1))


def f_vector_enumerated(
    params: ComplexParams, budget: int | None = DEFAULT_FACE_BUDGET
) -> tuple[int, ...]:
    """Reduced f-vector obtained by depth-first chain extension.

    Independent of the closed-form count: every face is visited exactly once
    by growing its vertex chain through each strictly larger successor.
    """
    p, n = params.p, params.n
    counts = [0] * (n + 1)
    counts[0] = 1
    seen = 1
    stack = [
        (v, 1)
        for v in sorted(itertools.product(range(1, n + 1), repeat=p), reverse=True)
    ]
    while stack:
        v, size = stack.pop()
        counts[size] += 1
        seen += 1
        if budget is not None and seen > budget:
            raise BudgetError(
                f"face enumeration passed {budget} at dimension {size - 1}"
            )
        for w in itertools.product(*(range(c + 1, n + 1) for c in v)):
            stack.append((w, size + 1))
    return tuple(counts)


def reduced_euler_characteristic(f_vector: Sequence[int]) -> int:
    """Alternating sum Sum_i (-1)^i f_i over the reduced f-vector.

    The input starts at f_-1, so even positions carry sign -1.
    """
    if not f_vector or f_vector[0] != 1:
        raise DomainError("reduced f-vector must start with f_-1 = 1")
    return sum(c if i % 2 else -c for i, c in enumerate(f_vector))
