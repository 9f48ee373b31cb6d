"""Built-in data sets.

The `theta_s2xs2` preset is the two-dimensional twist torus inside the
product of two spheres of area 2: five holomorphic cycles give the
intersection rows, the Maslov row has target 2, and the five candidate
classes all carry a unique disc, so the potential is their plain sum.  The
germ presets are the product-torus germ (four covectors), the twist-torus
germ (three covectors), and the germ of the displaceable nearby torus (one
covector, with an area offset parameter).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificates import CertificateReport, certify_nondisplaceable
from .discs import ConstraintTable, HomologyBasis, enumerate_candidate_classes
from .germs import Germ
from .laurent import GF2, RATIONAL, CoefficientRing, RingHom
from .pearl import Potential

THETA_RING_NAMES = ("R", "T", "S1", "S2")


def theta_basis() -> HomologyBasis:
    """Disc through the diagonal circle, disc through the rotation orbit,
    and the two sphere factors."""
    return HomologyBasis(
        names=("D_Gamma", "D_tau", "S1", "S2"),
        boundary_matrix=((1, 0, 0, 0), (0, 1, 0, 0)),
        n_torus_rank=2,
        ring_names=THETA_RING_NAMES,
    )


def theta_constraint_table() -> ConstraintTable:
    """Intersection rows against five holomorphic cycles avoiding the torus,
    plus the Maslov row."""
    return ConstraintTable(
        basis=theta_basis(),
        rows=(
            ("S2 x 0", (0, -1, 0, 1)),
            ("S2 x inf", (0, 0, 0, 1)),
            ("0 x S2", (0, 1, 1, 0)),
            ("inf x S2", (0, 0, 1, 0)),
            ("degree-2 curve", (1, 0, 1, 1)),
        ),
        maslov_vector=(2, 0, 4, 4),
        target_maslov=2,
    )


def theta_potential(ring: CoefficientRing = GF2) -> Potential:
    """Potential of the twist torus: each of the five candidate classes is
    represented by exactly one disc (multiplicity one)."""
    classes = enumerate_candidate_classes(theta_constraint_table())
    return Potential(ring, theta_basis(), [(cls, 1) for cls in classes])


def theta_h0_hom() -> RingHom:
    """Collapse onto one variable that keeps the image ideal proper."""
    return RingHom.from_monomials(
        GF2, ("R",), {"R": (1,), "T": (1,), "S1": (0,), "S2": (1,)}
    )


def theta_maslov_collapse_hom() -> RingHom:
    """Collapse by half the Maslov index; too coarse: the image ideal
    becomes the whole ring, so this homomorphism certifies nothing."""
    return RingHom.from_monomials(
        GF2, ("t",), {"R": (1,), "T": (0,), "S1": (2,), "S2": (2,)}
    )


def theta_regularity_hom() -> RingHom:
    """Carrying generators to independent rational variables, surface
    generators to 1 (the generic-monomial shape for regularity)."""
    return RingHom.from_monomials(
        RATIONAL, ("z1", "z2"), {"R": (1, 0), "T": (0, 1), "S1": (0, 0), "S2": (0, 0)}
    )


@dataclass(frozen=True)
class PotentialPreset:
    name: str
    table: ConstraintTable
    potential: Potential
    h0_hom: RingHom
    regularity_hom: RingHom
    collapse_hom: RingHom

    def certify(self, **kwargs) -> CertificateReport:
        return certify_nondisplaceable(
            self.potential,
            h0_hom=self.h0_hom,
            regularity_hom=self.regularity_hom,
            **kwargs,
        )


def theta_bundle() -> PotentialPreset:
    return PotentialPreset(
        name="theta_s2xs2",
        table=theta_constraint_table(),
        potential=theta_potential(),
        h0_hom=theta_h0_hom(),
        regularity_hom=theta_regularity_hom(),
        collapse_hom=theta_maslov_collapse_hom(),
    )


# ---------------------------------------------------------------------------
# germ presets


def clifford_germ() -> Germ:
    """Product torus: energy 1 + min(+-x, +-y) off the puncture."""
    return Germ(
        dim=2,
        constant=Fraction(1),
        covectors=frozenset({(1, 0), (-1, 0), (0, 1), (0, -1)}),
        note="minimum of four independent functionals",
    )


def theta_germ() -> Germ:
    """Twist torus: energy 1 + min(s, -s+t, -s-t) on a dense open set."""
    return Germ(
        dim=2,
        constant=Fraction(1),
        covectors=frozenset({(1, 0), (-1, 1), (-1, -1)}),
        note="minimum of three independent functionals; formula holds away from a line",
    )


def theta_s0_germ(s: Fraction = Fraction(-1, 4)) -> Germ:
    """Displaceable nearby torus with diagonal-disc area offset s (s < 0):
    energy (1+s) + (s' - t')."""
    return Germ(
        dim=2,
        constant=Fraction(1) + Fraction(s),
        covectors=frozenset({(1, -1)}),
        note=f"nearby displaceable torus, area offset s = {Fraction(s)}",
    )


CONSTRAINT_PRESETS = {"theta_s2xs2": theta_constraint_table}
POTENTIAL_PRESETS = {"theta_s2xs2": theta_bundle}
GERM_PRESETS = {
    "clifford_2": clifford_germ,
    "theta": theta_germ,
    "theta_s0": theta_s0_germ,
}
