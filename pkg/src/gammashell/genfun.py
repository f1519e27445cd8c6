"""Generating functions tying facet counts to the binomial identities.

The key objects are the series P (one column of a shift-vector collection),
its powers g_r, and the rational series xyz / ((1-x)(1-y)(1-z) + xyz) whose
diagonal reproduces the alternating sum of cubes of binomials.  Every series
with two natural constructions is built both ways and compared; the diagonal
alignment offset is determined empirically against facet enumeration rather
than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    f_vector_formula,
    make_complex,
    reduced_euler_characteristic,
)
from .errors import DomainError
from .identities import (  # noqa: F401  (re-exported: identity verifiers live here)
    aigner_rhs,
    dixon_lhs,
    dixon_rhs,
    power_sum_lhs,
    threeF2_lhs,
    threeF2_rhs,
)
from .series import MSeries
from .shelling import homology_facets_by_criterion

IntMatrix = tuple[tuple[int, ...], ...]


def _one_minus(var: int, num_vars: int, truncation: int) -> MSeries:
    e = tuple(1 if i == var else 0 for i in range(num_vars))
    return MSeries.const(num_vars, truncation, 1) - MSeries.monomial(
        num_vars, truncation, e
    )


def _geometric_denominator(truncation: int) -> MSeries:
    """(1-x)(1-y)(1-z) as a polynomial in the 3-variable box."""
    out = MSeries.const(3, truncation, 1)
    for var in range(3):
        out = out * _one_minus(var, 3, truncation)
    return out


def _require_dual_equal(name: str, first: MSeries, second: MSeries) -> None:
    if first.coeffs != second.coeffs:
        diffs = [
            e
            for e in set(first.coeffs) | set(second.coeffs)
            if first.coeffs.get(e, 0) != second.coeffs.get(e, 0)
        ]
        raise RuntimeError(
            f"{name}: dual constructions disagree at {sorted(diffs)[:5]} ..."
        )


def series_P(T: int, construction: str = "both") -> MSeries:
    """The column series P = xyz((1-xyz)/((1-x)(1-y)(1-z)) - 1).

    Also the sum of the six permuted corner series
    f = x y^2 z^2 / ((1-y)(1-z)) and h = x y z^2 / (1-z); with
    construction="both" (the default) both builds are compared coefficient
    by coefficient before returning.
    """
    if T < 2:
        raise DomainError(f"series_P needs truncation >= 2, got {T}")
    if construction not in ("both", "closed", "permuted"):
        raise DomainError(f"unknown construction {construction!r}")

    closed = None
    if construction in ("both", "closed"):
        one = MSeries.const(3, T, 1)
        xyz = MSeries.monomial(3, T, (1, 1, 1))
        inner = (one - xyz) * _geometric_denominator(T).invert_unit() - one
        closed = xyz * inner
        if construction == "closed":
            return closed

    f = MSeries.monomial(3, T, (1, 2, 2)) * (
        _one_minus(1, 3, T) * _one_minus(2, 3, T)
    ).invert_unit()
    h = MSeries.monomial(3, T, (1, 1, 2)) * _one_minus(2, 3, T).invert_unit()
    permuted = (
        f
        + f.permute_vars((1, 0, 2))
        + f.permute_vars((2, 1, 0))
        + h
        + h.permute_vars((0, 2, 1))
        + h.permute_vars((2, 1, 0))
    )
    if construction == "permuted":
        return permuted
    _require_dual_equal("series_P", closed, permuted)
    return closed


def series_g_r(r: int, T: int) -> MSeries:
    """P^r; its coefficients count r-column shift-vector collections."""
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    if T < 2 * r:
        raise DomainError(f"series_g_r needs truncation >= {2 * r}, got {T}")
    return series_P(T, construction="closed") ** r


def series_XY(T: int, construction: str = "both") -> MSeries:
    """xyz / ((1-x)(1-y)(1-z) + xyz).

    The alternating-sum build (P + xyz) * (1 + P)^{-1} realizes
    sum over r >= 1 of (-1)^{r-1} (P^r + xyz P^{r-1}); with
    construction="both" it is compared against the closed rational form.
    """
    if T < 1:
        raise DomainError(f"series_XY needs truncation >= 1, got {T}")
    if construction not in ("both", "closed", "alternating"):
        raise DomainError(f"unknown construction {construction!r}")

    closed = None
    if construction in ("both", "closed"):
        xyz = MSeries.monomial(3, T, (1, 1, 1))
        denom = _geometric_denominator(T) + xyz
        closed = xyz * denom.invert_unit()
        if construction == "closed":
            return closed

    # below T = 2 the box truncates P to zero
    p = series_P(T, construction="closed") if T >= 2 else MSeries.zero(3, T)
    one = MSeries.const(3, T, 1)
    xyz = MSeries.monomial(3, T, (1, 1, 1))
    alternating = (p + xyz) * (one + p).invert_unit()
    if construction == "alternating":
        return alternating
    _require_dual_equal("series_XY", closed, alternating)
    return closed


# -- determinant coefficient identities --------------------------------------


def _validate_matrix(matrix: IntMatrix) -> int:
    m = len(matrix)
    if m == 0 or any(len(row) != m for row in matrix):
        raise DomainError("matrix must be square and nonempty")
    return m


def matrix_A() -> IntMatrix:
    """Rows generating the forms x - y, y - z, z - x."""
    return ((1, -1, 0), (0, 1, -1), (-1, 0, 1))


def matrix_B() -> IntMatrix:
    """Rows generating the forms y - z, z - x, x - y."""
    return ((0, 1, -1), (-1, 0, 1), (1, -1, 0))


def det_I_minus_X(matrix: IntMatrix, T: int) -> MSeries:
    """det(I - XA) with X = diag(x_1..x_m), as a polynomial series."""
    m = _validate_matrix(matrix)
    cells = [
        [
            MSeries.const(m, T, 1 if i == j else 0)
            - MSeries.monomial(
                m, T, tuple(1 if v == i else 0 for v in range(m)), matrix[i][j]
            )
            for j in range(m)
        ]
        for i in range(m)
    ]

    def det(rows: list[list[MSeries]]) -> MSeries:
        if len(rows) == 1:
            return rows[0][0]
        total = MSeries.zero(m, T)
        for j, cell in enumerate(rows[0]):
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = cell * det(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    return det(cells)


def master_theorem_product_coefficient(
    matrix: IntMatrix, k: tuple[int, ...], T: int | None = None
) -> int:
    """Coefficient of x^k in the product over i of (row_i . x)^{k_i}."""
    m = _validate_matrix(matrix)
    if len(k) != m:
        raise DomainError("exponent vector length must match matrix side")
    if T is None:
        T = max(k)
    if T < max(k):
        raise DomainError(f"truncation {T} below max exponent {max(k)}")
    product = MSeries.const(m, T, 1)
    for i, row in enumerate(matrix):
        form = MSeries.zero(m, T)
        for j, a in enumerate(row):
            if a:
                e = tuple(1 if v == j else 0 for v in range(m))
                form = form + MSeries.monomial(m, T, e, a)
        product = product * form**k[i]
    return product.coefficient(tuple(k))


def master_theorem_inverse_coefficient(
    matrix: IntMatrix, k: tuple[int, ...], T: int | None = None
) -> int:
    """Coefficient of x^k in 1 / det(I - XA)."""
    m = _validate_matrix(matrix)
    if len(k) != m:
        raise DomainError("exponent vector length must match matrix side")
    if T is None:
        T = max(k)
    if T < max(k):
        raise DomainError(f"truncation {T} below max exponent {max(k)}")
    return det_I_minus_X(matrix, T).invert_unit().coefficient(tuple(k))


def master_theorem_check(
    matrix: IntMatrix, k: tuple[int, ...], T: int | None = None
) -> bool:
    """True iff both coefficient extractions agree at x^k."""
    lhs = master_theorem_product_coefficient(matrix, k, T)
    rhs = master_theorem_inverse_coefficient(matrix, k, T)
    return lhs == rhs


def dixon_product_coefficient(n: int) -> int:
    """[x^n y^n z^n] of (x-y)^n (y-z)^n (x-z)^n by direct expansion."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    x = MSeries.monomial(3, n, (1, 0, 0))
    y = MSeries.monomial(3, n, (0, 1, 0))
    z = MSeries.monomial(3, n, (0, 0, 1))
    product = (x - y) ** n * (y - z) ** n * (x - z) ** n
    return product.coefficient((n, n, n))


# -- diagonal alignment -------------------------------------------------------


def alternating_homology_count(n: int) -> int:
    """Signed count of homology facets of Gamma_3(n).

    A facet with r vertices spans r + 1 shift-vector columns and enters
    with sign (-1)^{(r+1)-1} = (-1)^r, matching the column-indexed
    alternating series sum over g_r.
    """
    params = make_complex(3, n)
    total = 0
    for facet in homology_facets_by_criterion(params):
        total += -1 if len(facet) % 2 else 1
    return total


@dataclass(frozen=True)
class AlignmentReport:
    """Outcome of the diagonal-offset scan and the end-to-end identity chain.

    diagonal_by_delta[d][n] is the series_XY coefficient at (n+d, n+d, n+d);
    matches[d] says whether that column equals the alternating homology
    counts for every n; pinned_delta is the unique matching offset if one
    exists.  end_to_end[n] collects the five quantities that must coincide
    at the pinned offset, and end_to_end_ok is their conjunction.
    """

    n_max: int
    deltas: tuple[int, ...]
    alternating_counts: dict[int, int]
    diagonal_by_delta: dict[int, dict[int, int]]
    matches: dict[int, bool]
    pinned_delta: int | None
    end_to_end: dict[int, dict[str, int]]
    end_to_end_ok: bool


def alignment_check(
    n_max: int = 6, deltas: tuple[int, ...] = (0, 1, 2, 3)
) -> AlignmentReport:
    """Scan offsets d: does XY at (n+d,..) equal the signed facet count?

    The scan runs over 2 <= n <= n_max.  If exactly one offset matches, the
    full identity chain is evaluated at it for 1 <= n <= n_max:
    XY diagonal = alternating homology count = alternating sum of cubed
    binomials = its closed form = minus the reduced Euler characteristic,
    plus the direct product-coefficient route.
    """
    if n_max < 2:
        raise DomainError(f"n_max must be at least 2, got {n_max}")
    if not deltas or any(d < 0 for d in deltas):
        raise DomainError("deltas must be nonnegative and nonempty")

    xy = series_XY(n_max + max(deltas), construction="both")
    alternating = {n: alternating_homology_count(n) for n in range(1, n_max + 1)}

    diagonal_by_delta: dict[int, dict[int, int]] = {}
    matches: dict[int, bool] = {}
    for d in deltas:
        column = {
            n: xy.coefficient((n + d, n + d, n + d)) for n in range(2, n_max + 1)
        }
        diagonal_by_delta[d] = column
        matches[d] = all(column[n] == alternating[n] for n in column)

    matching = [d for d in deltas if matches[d]]
    pinned = matching[0] if len(matching) == 1 else None

    end_to_end: dict[int, dict[str, int]] = {}
    ok = pinned is not None
    if pinned is not None:
        for n in range(1, n_max + 1):
            params = make_complex(3, n)
            values = {
                "xy_diagonal": xy.coefficient((n + pinned,) * 3),
                "alternating_homology_count": alternating[n],
                "dixon_lhs": dixon_lhs(n),
                "dixon_rhs": dixon_rhs(n),
                "product_coefficient": dixon_product_coefficient(n),
                "neg_reduced_euler": -reduced_euler_characteristic(
                    f_vector_formula(params)
                ),
            }
            end_to_end[n] = values
            ok = ok and len(set(values.values())) == 1
    return AlignmentReport(
        n_max=n_max,
        deltas=tuple(deltas),
        alternating_counts=alternating,
        diagonal_by_delta=diagonal_by_delta,
        matches=matches,
        pinned_delta=pinned,
        end_to_end=end_to_end,
        end_to_end_ok=ok,
    )
