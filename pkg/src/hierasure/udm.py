"""Universally decodable matrices: construction, verification, equivalence.

A set of n matrices of shape alpha x m over the base field is universally
decodable when, for every admissible erasure pattern, stacking the first
t_i rows of each matrix gives a full-rank matrix.  Verification only needs
the patterns of maximal total, since dropping rows cannot break
independence.

``udms_to_check_vector`` and ``check_vector_to_udms`` realize the
equivalence between square UDM sets sharing a basis as a mutual
eigenvector and single-row parity checks whose kernel corrects every
pattern with total up to alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from . import linalg
from .errors import ConstructionError, MissingEigenvectorError, ParameterError
from .fields import Element, FieldSpec, OrderedBasis, lucas_binom
from .patterns import ErasurePattern, FullFamily, maximal_patterns

INDEX_CONVENTIONS = ("zero_based", "one_based")


@dataclass(frozen=True, eq=False)
class UdmSet:
    """n matrices of shape alpha x m over one base field."""

    field: FieldSpec
    alpha: int
    m: int
    matrices: tuple[tuple[tuple[Element, ...], ...], ...]
    meta: Mapping = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.m < self.alpha:
            raise ParameterError("universal decodability needs m >= alpha")
        mats = tuple(tuple(tuple(row) for row in mat) for mat in self.matrices)
        object.__setattr__(self, "matrices", mats)
        for mat in mats:
            if len(mat) != self.alpha or any(len(row) != self.m for row in mat):
                raise ParameterError("every matrix must be alpha x m")
            for row in mat:
                for entry in row:
                    self.field._check_same(entry)

    @property
    def n(self) -> int:
        return len(self.matrices)


@dataclass(frozen=True)
class UdmCheck:
    ok: bool
    counterexample: ErasurePattern | None = None


def verify_udm(u: UdmSet) -> UdmCheck:
    """Exhaustive stacked-prefix rank check over the maximal patterns."""
    budget = min(u.m, u.n * u.alpha)
    for t in maximal_patterns(FullFamily(u.alpha, budget, u.n)):
        stacked = []
        for mat, ti in zip(u.matrices, t):
            stacked.extend(list(row) for row in mat[:ti])
        if linalg.rank(stacked, u.field) != sum(t):
            return UdmCheck(False, t)
    return UdmCheck(True)


def vontobel_udms(
    n: int,
    alpha: int,
    m: int,
    field: FieldSpec,
    index_convention: str = "zero_based",
) -> UdmSet:
    """The classical UDM family: identity, anti-identity, binomial matrices.

    The first matrix takes the top alpha rows of the m x m identity, the
    second the top alpha rows of the anti-identity; matrix k >= 3 has
    entries binom(col, row) * gamma^((k-2)(col-row)) with gamma the
    lexicographically first primitive element.  Whether the binomial uses
    0-based or 1-based indices is selectable; the default passes
    verification everywhere it was tested, and the choice is recorded in
    the metadata.  The result is verified before being returned.
    """
    if index_convention not in INDEX_CONVENTIONS:
        raise ParameterError(f"index_convention must be one of {INDEX_CONVENTIONS}")
    if n < 1:
        raise ParameterError("need n >= 1")
    if m < alpha or alpha < 1:
        raise ParameterError("need m >= alpha >= 1")
    if field.order < n - 1:
        raise ParameterError(f"field size {field.order} is below n-1={n - 1}")
    zero, one = field.zero(), field.one()
    p = field.p
    identity = tuple(
        tuple(one if b == a else zero for b in range(m)) for a in range(alpha)
    )
    mats = [identity]
    if n >= 2:
        anti = tuple(
            tuple(one if b == m - 1 - a else zero for b in range(m)) for a in range(alpha)
        )
        mats.append(anti)
    gamma = field.primitive_element() if n >= 3 else None
    for k in range(3, n + 1):
        shift = k - 2
        rows = []
        for a in range(alpha):
            row = []
            for b in range(m):
                if index_convention == "zero_based":
                    binom = lucas_binom(b, a, p)
                else:
                    binom = lucas_binom(b + 1, a + 1, p)
                if binom == 0:
                    row.append(zero)
                else:
                    scalar = field.element((binom,) + (0,) * (field.e - 1))
                    row.append(scalar * gamma ** ((shift - 1) * (b - a)))
            rows.append(tuple(row))
        mats.append(tuple(rows))
    meta = {
        "construction": "vontobel",
        "index_convention": index_convention,
        "gamma": list(gamma.coeffs) if gamma is not None else None,
    }
    result = UdmSet(field, alpha, m, tuple(mats), meta)
    check = verify_udm(result)
    if not check.ok:
        raise ConstructionError(
            f"constructed matrices fail verification at pattern {check.counterexample}; "
            f"index convention {index_convention!r} is wrong for these parameters"
        )
    return result


def trace_check_matrix(u: UdmSet, mu: OrderedBasis) -> list[list[Element]]:
    """The m x n extension-field matrix whose column i is A_i transposed
    applied to the basis column: entry (l, i) = sum_r A_i[r][l] * mu_r."""
    ext = mu.ext
    if u.alpha != ext.alpha or u.field != ext.base:
        raise ParameterError("matrix set and basis live over different fields")
    rows = []
    for ell in range(u.m):
        row = []
        for mat in u.matrices:
            acc = ext.zero()
            for r in range(u.alpha):
                acc = acc + ext.lift(mat[r][ell]) * mu.elements[r]
            row.append(acc)
        rows.append(row)
    return rows


def udms_to_check_vector(u: UdmSet, omega: OrderedBasis) -> tuple[Element, ...]:
    """Eigenvalues of each matrix for the shared eigenvector omega, if any.

    Requires square matrices (m = alpha).  Each matrix is applied to the
    basis column; if the image is a scalar multiple, that scalar is the
    entry of the returned parity-check vector.  Otherwise the offending
    matrix index is raised.
    """
    ext = omega.ext
    if u.m != u.alpha:
        raise ParameterError("eigenvector extraction needs square matrices (m = alpha)")
    if u.alpha != ext.alpha or u.field != ext.base:
        raise ParameterError("matrix set and basis live over different fields")
    h = []
    for idx, mat in enumerate(u.matrices):
        image = []
        for row in mat:
            acc = ext.zero()
            for a, w in zip(row, omega.elements):
                acc = acc + ext.lift(a) * w
            image.append(acc)
        scalar = image[0] / omega.elements[0]
        for img, w in zip(image, omega.elements):
            if img != scalar * w:
                raise MissingEigenvectorError(idx)
        h.append(scalar)
    return tuple(h)


def check_vector_to_udms(h: Sequence[Element], omega: OrderedBasis) -> UdmSet:
    """Row j of matrix i is the coordinate vector of h_i * omega_j over omega."""
    ext = omega.ext
    base = ext.base
    mats = []
    for hi in h:
        ext._check_same(hi)
        rows = tuple(tuple(omega.coordinates(hi * wj)) for wj in omega.elements)
        mats.append(rows)
    meta = {"construction": "eigenrows"}
    return UdmSet(base, ext.alpha, ext.alpha, tuple(mats), meta)
