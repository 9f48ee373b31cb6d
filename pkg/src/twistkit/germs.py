"""Displacement-energy germs and their unimodular classification.

A germ is recorded as a constant plus a minimum of integer covectors: near a
torus the displacement energy of nearby deformations takes that shape on a
dense open set.  Symplectic invariance makes germs comparable only up to an
integral unimodular change of the deformation coordinates, so equivalence is
decided by searching for a matrix A with |det A| = 1 matching the covector
sets (and equal constants).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .matrices import (
    as_int_matrix,
    mat_det,
    mat_inv,
    mat_mul,
    mat_rank,
    mat_vec,
    transpose,
)


class _UndefinedAtOrigin:
    """Marker value: the germ formula does not define a value at the puncture."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "undefined-at-origin"


UNDEFINED_AT_ORIGIN = _UndefinedAtOrigin()


@dataclass(frozen=True)
class Germ:
    """constant + min over covectors of their pairing with the deformation."""

    dim: int
    constant: Fraction
    covectors: frozenset
    note: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "constant", Fraction(self.constant))
        covs = frozenset(tuple(int(x) for x in c) for c in self.covectors)
        object.__setattr__(self, "covectors", covs)
        if not covs:
            raise ValueError("a germ needs at least one covector")
        for c in covs:
            if len(c) != self.dim:
                raise DimensionMismatch(
                    f"covector {c} has length {len(c)}, expected {self.dim}"
                )

    def sorted_covectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.covectors))

    def __str__(self):
        mins = ", ".join(str(c) for c in self.sorted_covectors())
        return f"{self.constant} + min{{ <a, .> : a in {{{mins}}} }}"


@dataclass(frozen=True)
class UnimodularWitness:
    """An integer matrix with determinant +-1 relating two germs: the
    transpose maps the first germ's covectors onto the second's."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = as_int_matrix(self.matrix)
        if rows is None:
            raise ValueError("witness matrix must be integral")
        object.__setattr__(self, "matrix", rows)
        if abs(mat_det(rows)) != 1:
            raise ValueError("witness matrix must be unimodular")


@dataclass(frozen=True)
class NotEquivalent:
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Indeterminate:
    reason: str

    def __bool__(self):
        return False


def germ_value(germ: Germ, xi):
    """Exact value at a rational deformation; the puncture is undefined."""
    xi = tuple(Fraction(x) for x in xi)
    if len(xi) != germ.dim:
        raise DimensionMismatch(f"point has length {len(xi)}, germ has dim {germ.dim}")
    if all(x == 0 for x in xi):
        return UNDEFINED_AT_ORIGIN
    return germ.constant + min(
        sum(Fraction(a) * x for a, x in zip(cov, xi)) for cov in germ.covectors
    )


def transform_germ(germ: Germ, witness: UnimodularWitness) -> Germ:
    """The germ precomposed with the witness matrix: covectors move by the
    transpose, so values satisfy value(g, A xi) = value(transform(g, A), xi)."""
    at = transpose(witness.matrix)
    new_covs = frozenset(
        tuple(int(x) for x in mat_vec(at, cov)) for cov in germ.covectors
    )
    return Germ(germ.dim, germ.constant, new_covs, germ.note)


def germ_equivalent(g1: Germ, g2: Germ):
    """Find an integral unimodular matrix matching the two germs, or report
    why none exists.  Non-spanning covector sets are indeterminate."""
    if g1.dim != g2.dim:
        raise DimensionMismatch(f"germ dimensions differ: {g1.dim} vs {g2.dim}")
    n = g1.dim
    if len(g1.covectors) != len(g2.covectors):
        return NotEquivalent(
            f"covector counts {len(g1.covectors)} != {len(g2.covectors)}"
        )
    if g1.constant != g2.constant:
        return NotEquivalent(f"constants differ: {g1.constant} != {g2.constant}")
    rank1 = mat_rank(g1.sorted_covectors())
    rank2 = mat_rank(g2.sorted_covectors())
    if rank1 != rank2:
        return NotEquivalent(f"covector ranks differ: {rank1} != {rank2}")
    if rank1 < n:
        return Indeterminate(
            f"covectors span a proper subspace (rank {rank1} < dim {n}); "
            "equivalence is not decided"
        )

    basis_subset = _spanning_subset(g1.sorted_covectors(), n)
    s_cols = transpose([g1.sorted_covectors()[i] for i in basis_subset])
    s_inv = mat_inv(s_cols)
    targets = g2.sorted_covectors()
    cov_set2 = g2.covectors
    for choice in itertools.permutations(range(len(targets)), n):
        t_cols = transpose([targets[i] for i in choice])
        a_t = mat_mul(t_cols, s_inv)
        ints = as_int_matrix(a_t)
        if ints is None or abs(mat_det(ints)) != 1:
            continue
        image = frozenset(tuple(int(x) for x in mat_vec(ints, cov)) for cov in g1.covectors)
        if image == cov_set2:
            return UnimodularWitness(transpose(ints))
    return NotEquivalent("no unimodular transform maps one covector set onto the other")


def _spanning_subset(covectors, n):
    for combo in itertools.combinations(range(len(covectors)), n):
        if mat_rank([covectors[i] for i in combo]) == n:
            return combo
    raise AssertionError("rank was checked before")


# ---------------------------------------------------------------------------
# JSON


def germ_to_json(germ: Germ) -> dict:
    return {
        "dim": germ.dim,
        "constant": str(germ.constant),
        "covectors": [list(c) for c in germ.sorted_covectors()],
        "note": germ.note,
    }


def germ_from_json(data: dict) -> Germ:
    return Germ(
        dim=int(data["dim"]),
        constant=Fraction(str(data["constant"])),
        covectors=frozenset(tuple(c) for c in data["covectors"]),
        note=data.get("note"),
    )
