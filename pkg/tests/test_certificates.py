import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from twistkit.certificates import (
    certify_nondisplaceable,
    ideal_contains_one,
    regular_sequence_check,
    regularity_via_hom,
    search_h0_hom,
    validate_regularity_hom,
)
from twistkit.discs import DiscClass, HomologyBasis
from twistkit.errors import (
    InconclusiveCertificate,
    NonGenericHom,
    UnsupportedRing,
)
from twistkit.groebner import groebner_basis, standard_monomials
from twistkit.laurent import GF2, INT, RATIONAL, LaurentPoly, RingHom
from twistkit.pearl import Potential
from twistkit.presets import (
    theta_bundle,
    theta_h0_hom,
    theta_maslov_collapse_hom,
    theta_potential,
    theta_regularity_hom,
)

DATA = Path(__file__).parent / "data"


def univ(ring, terms, var="R"):
    return LaurentPoly(ring, (var,), {(e,): c for e, c in terms.items()})


# ---------------------------------------------------------------------------
# ideal membership


def test_twist_torus_image_ideal_is_proper():
    # R^-2*(1+R+R^2) and R^-2*(R+1)*(R^2+R+1) generate (R^2+R+1)
    g1 = univ(GF2, {-2: 1, -1: 1, 0: 1})
    g2 = univ(GF2, {-2: 1, 1: 1})
    result = ideal_contains_one([g1, g2])
    assert not result.contains_one
    assert result.method == "gcd"
    assert result.generators == (univ(GF2, {0: 1, 1: 1, 2: 1}),)


def test_unit_monomial_generates_everything():
    t = univ(GF2, {1: 1}, var="t")
    result = ideal_contains_one([t])
    assert result.contains_one
    (cofactor,) = result.cofactors
    assert cofactor * t == LaurentPoly.one(GF2, ("t",))


def test_one_generates_everything():
    one = LaurentPoly.one(RATIONAL, ("x", "y"))
    result = ideal_contains_one([one])
    assert result.contains_one
    total = sum(
        (c * g for c, g in zip(result.cofactors, [one])),
        LaurentPoly.zero(RATIONAL, ("x", "y")),
    )
    assert total == one


def test_zero_and_empty_ideals_are_proper():
    z = LaurentPoly.zero(GF2, ("t",))
    assert not ideal_contains_one([z]).contains_one
    assert not ideal_contains_one([]).contains_one


def test_integer_coefficients_are_rejected():
    with pytest.raises(UnsupportedRing):
        ideal_contains_one([univ(INT, {0: 1, 1: 1})])


def test_multivariate_membership_direct_on_the_twist_torus():
    # the full group-ring check agrees with the collapsed univariate witness
    vs = theta_potential().toric_differential()
    result = ideal_contains_one(list(vs))
    assert result.method == "groebner"
    assert not result.contains_one


def test_multivariate_unit_ideal_with_certificate():
    v = ("x", "y")
    gens = [
        LaurentPoly(GF2, v, {(1, 0): 1, (0, 0): 1}),  # x + 1
        LaurentPoly(GF2, v, {(1, 0): 1}),  # x
    ]
    result = ideal_contains_one(gens)
    assert result.contains_one
    total = LaurentPoly.zero(GF2, v)
    for c, g in zip(result.cofactors, gens):
        total = total + c * g
    assert total == LaurentPoly.one(GF2, v)


def test_gcd_and_groebner_agree_on_univariate_inputs():
    rng = random.Random(2025)

    def random_univ(ring):
        terms = {}
        for _ in range(rng.randint(0, 4)):
            c = 1 if ring is GF2 else Fraction(rng.randint(-3, 3))
            terms[rng.randint(-3, 3)] = c
        return univ(ring, terms, var="t")

    checked = 0
    for _ in range(100):
        ring = GF2 if rng.random() < 0.5 else RATIONAL
        gens = [random_univ(ring) for _ in range(rng.randint(1, 3))]
        direct = ideal_contains_one(gens)
        # same ideal inside a two-variable ring (extra unused variable)
        wide_vars = ("t", "u")
        widened = [
            LaurentPoly(ring, wide_vars, {(e[0], 0): c for e, c in g.terms.items()})
            for g in gens
        ]
        via_gb = ideal_contains_one(widened)
        assert via_gb.method == "groebner"
        assert direct.contains_one == via_gb.contains_one
        checked += 1
    assert checked == 100


# ---------------------------------------------------------------------------
# regularity


def load_critical_fixture():
    with open(DATA / "theta_critical_points.json", "r", encoding="utf-8") as fh:
        return json.load(fh)


def test_twist_torus_regularity_certificate():
    result = regularity_via_hom(theta_potential(), theta_regularity_hom())
    assert result.regular
    fixture = load_critical_fixture()
    assert result.quotient_dimension == sum(fixture["multiplicities"])


def test_fixture_points_satisfy_the_critical_system_exactly():
    fixture = load_critical_fixture()
    pot = theta_potential()
    u_img = theta_regularity_hom().apply(pot.poly_over(RATIONAL))
    for raw in fixture["points"]:
        point = {"z1": Fraction(raw[0]), "z2": Fraction(raw[1])}
        assert all(Fraction(x) != 0 for x in point.values())
        for name in u_img.variables:
            assert u_img.log_derivative(name).evaluate(point) == 0


def test_regular_when_no_torus_critical_points():
    u = LaurentPoly(RATIONAL, ("z1", "z2"), {(1, 0): 1, (0, 1): 1})
    result = regular_sequence_check(u)
    assert result.regular
    assert result.quotient_dimension == 0


def test_not_regular_when_a_derivative_vanishes():
    u = LaurentPoly(RATIONAL, ("z1", "z2"), {(1, 0): 1})
    result = regular_sequence_check(u)
    assert not result.regular
    assert result.zero_directions == ("z2",)


def test_not_regular_when_critical_locus_is_positive_dimensional():
    # f = z1*z2 + (z1*z2)^-1: both toric derivatives equal z1*z2 - (z1*z2)^-1,
    # so the critical locus is the pair of curves z1*z2 = +-1
    u = LaurentPoly(RATIONAL, ("z1", "z2"), {(1, 1): 1, (-1, -1): 1})
    result = regular_sequence_check(u)
    assert not result.regular
    assert result.quotient_dimension is None
    assert result.zero_directions == ()


def test_regularity_requires_rationals():
    with pytest.raises(UnsupportedRing):
        regular_sequence_check(LaurentPoly(GF2, ("z",), {(1,): 1}))


def test_regularity_hom_validation():
    pot = theta_potential()
    bad_target = RingHom.from_monomials(
        GF2, ("z1", "z2"), {"R": (1, 0), "T": (0, 1), "S1": (0, 0), "S2": (0, 0)}
    )
    with pytest.raises(NonGenericHom):
        validate_regularity_hom(pot, bad_target)
    collide = RingHom.from_monomials(
        RATIONAL, ("z1",), {"R": (1,), "T": (1,), "S1": (0,), "S2": (0,)}
    )
    with pytest.raises(NonGenericHom):
        validate_regularity_hom(pot, collide)
    squared = RingHom.from_monomials(
        RATIONAL, ("z1", "z2"), {"R": (2, 0), "T": (0, 1), "S1": (0, 0), "S2": (0, 0)}
    )
    with pytest.raises(NonGenericHom):
        validate_regularity_hom(pot, squared)
    surface_to_var = RingHom.from_monomials(
        RATIONAL, ("z1", "z2"), {"R": (1, 0), "T": (0, 1), "S1": (1, 0), "S2": (0, 0)}
    )
    with pytest.raises(NonGenericHom):
        validate_regularity_hom(pot, surface_to_var)


def test_standard_monomials_of_the_critical_ideal():
    # localized critical ideal of the collapsed potential: quotient basis {1, z1}
    vars3 = ("z1", "z2", "w")
    gens = [
        LaurentPoly(RATIONAL, vars3, {(2, 1, 0): 1, (0, 2, 0): -1, (0, 1, 0): -2, (0, 0, 0): -1}),
        LaurentPoly(RATIONAL, vars3, {(0, 2, 0): 1, (0, 0, 0): -1}),
        LaurentPoly(RATIONAL, vars3, {(1, 1, 1): 1, (0, 0, 0): -1}),
    ]
    basis = groebner_basis(gens)
    monos = standard_monomials(basis)
    assert len(monos) == 2
    assert (0, 0, 0) in monos


# ---------------------------------------------------------------------------
# certification pipeline


def test_twist_torus_is_certified():
    report = theta_bundle().certify()
    assert report.token == "certified"
    assert report.verdict == "non-displaceability certified"
    assert report.h0.passed and not report.h0.contains_one
    assert report.h0.ideal_generators == ("R^2 + R + 1",)
    assert report.regularity.passed
    assert report.regularity.quotient_dimension == 2


def test_maslov_collapse_fails_the_h0_check():
    report = certify_nondisplaceable(
        theta_potential(),
        h0_hom=theta_maslov_collapse_hom(),
        regularity_hom=theta_regularity_hom(),
    )
    assert report.h0.contains_one  # 1 lands in the image ideal
    assert report.token == "inconclusive"
    with pytest.raises(InconclusiveCertificate):
        certify_nondisplaceable(
            theta_potential(), h0_hom=theta_maslov_collapse_hom(), strict=True
        )


def test_unit_potential_is_definitively_not_certified():
    basis = HomologyBasis(names=("A",), boundary_matrix=((1,),), n_torus_rank=1)
    pot = Potential(GF2, basis, [(DiscClass((1,), (1,)), 1)])
    report = certify_nondisplaceable(pot)
    assert report.token == "not-certified"
    assert report.h0.hom_is_identity
    assert report.h0.contains_one


def test_h0_alone_gives_a_partial_verdict():
    report = certify_nondisplaceable(theta_potential(), h0_hom=theta_h0_hom())
    assert report.token == "partial"
    assert report.h0.passed
    assert report.regularity is None


def test_product_torus_in_three_spheres_is_certified():
    # the 3-torus of equators in a triple product of spheres: each factor
    # contributes two discs (the two hemisphere classes R_k and S_k R_k^-1),
    # so U = sum_k R_k + S_k R_k^-1 and v_k = R_k + S_k R_k^-1 over GF2.
    # The identity-hom membership test and the rational regularity
    # certificate (critical points z_k = +-1, eight in all) both pass.
    names = ("D1", "D2", "D3", "S1", "S2", "S3")
    boundary = (
        (1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
    )
    basis = HomologyBasis(
        names=names,
        boundary_matrix=boundary,
        n_torus_rank=3,
        ring_names=("R1", "R2", "R3", "S1", "S2", "S3"),
    )

    def cls(coeffs):
        return DiscClass(coeffs, basis.boundary_of(coeffs))

    provenance = []
    for k in range(3):
        straight = [0] * 6
        straight[k] = 1
        opposite = [0] * 6
        opposite[k] = -1
        opposite[3 + k] = 1
        provenance.append((cls(tuple(straight)), 1))
        provenance.append((cls(tuple(opposite)), 1))
    pot = Potential(GF2, basis, provenance)

    hom = RingHom.from_monomials(
        RATIONAL,
        ("z1", "z2", "z3"),
        {
            "R1": (1, 0, 0),
            "R2": (0, 1, 0),
            "R3": (0, 0, 1),
            "S1": (0, 0, 0),
            "S2": (0, 0, 0),
            "S3": (0, 0, 0),
        },
    )
    report = certify_nondisplaceable(pot, regularity_hom=hom)
    assert report.token == "certified"
    assert report.h0.hom_is_identity
    assert report.regularity.quotient_dimension == 8  # z_k = +-1


def test_hom_search_finds_a_proper_collapse():
    pot = theta_potential()
    hom = search_h0_hom(pot)
    assert hom is not None
    images = [hom.apply(v) for v in pot.toric_differential()]
    assert not ideal_contains_one(images).contains_one


def test_report_serialization_is_self_consistent():
    report = theta_bundle().certify()
    data = report.to_json_dict()
    assert data["token"] == "certified"
    assert data["h0"]["passed"] is True
    assert data["regularity"]["quotient_dimension"] == 2
    text = report.to_text()
    assert text[-1] == "verdict: non-displaceability certified"
