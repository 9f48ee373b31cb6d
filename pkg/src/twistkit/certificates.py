"""Ideal-membership and Koszul-regularity certificates.

Non-displaceability of a torus is certified through the quadratic pearl
differential in two steps:

  (a) degree zero survives: 1 is not in the Laurent ideal generated by the
      toric differentials (checked through a collapsing homomorphism with a
      proper image ideal, or directly);
  (b) positive degrees die: through a homomorphism sending the carrying
      generators to independent variables and the surface generators to
      nonzero constants, the critical ideal of the image potential has a
      finite-dimensional quotient in the Laurent ring, so the toric
      differentials form a regular sequence and the complex is the acyclic
      part of a Koszul complex.

Both checks produce explicit, re-checkable witnesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InconclusiveCertificate, NonGenericHom, UnsupportedRing
from .groebner import (
    contains_constant,
    groebner_basis,
    standard_monomials,
    univariate_extended_gcd,
    univariate_gcd,
)
from .laurent import RATIONAL, LaurentPoly, RingHom
from .pearl import Potential

REGULARITY_CRITERION_NOTE = (
    "isolated critical points read as: the critical ideal has a "
    "finite-dimensional quotient in the Laurent ring (after inverting all "
    "variables), and no toric derivative vanishes identically"
)


@dataclass(frozen=True)
class IdealMembershipResult:
    """Outcome of the `1 in (gens)` test in a Laurent ring over a field."""

    contains_one: bool
    method: str  # "gcd" (univariate) or "groebner"
    generators: tuple[LaurentPoly, ...]  # reduced description of the ideal
    cofactors: tuple[LaurentPoly, ...] | None = None  # witness: sum c_i g_i = 1

    def __bool__(self):
        return self.contains_one


def _strip_units(poly: LaurentPoly) -> tuple[LaurentPoly, tuple[int, ...]]:
    """Divide by the largest monomial factor; returns (polynomial part, shift)."""
    shift = poly.min_exponents()
    return poly.times_monomial(tuple(-s for s in shift)), shift


def _fresh_name(base: str, taken) -> str:
    if base not in taken:
        return base
    i = 0
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def ideal_contains_one(gens) -> IdealMembershipResult:
    """Decide whether 1 lies in the Laurent ideal generated by `gens`.

    Univariate: monomial factors are stripped and a gcd is computed; the
    ideal is the whole ring iff the gcd is constant.  Multivariate: a
    Buchberger basis is computed after inverting the variables through one
    auxiliary generator (degrevlex, auxiliary last).  When 1 is in the
    ideal a cofactor certificate over the original generators is returned
    and re-verified before reporting.
    """
    gens = list(gens)
    if not gens:
        return IdealMembershipResult(False, "gcd", ())
    ring = gens[0].ring
    variables = gens[0].variables
    if not ring.is_field:
        raise UnsupportedRing(
            "ideal membership needs a field; use GF2 or Rational coefficients"
        )
    nonzero_indices = [i for i, g in enumerate(gens) if not g.is_zero]
    if not nonzero_indices:
        return IdealMembershipResult(False, "gcd" if len(variables) == 1 else "groebner", ())
    stripped = []
    shifts = []
    for i in nonzero_indices:
        s, shift = _strip_units(gens[i])
        stripped.append(s)
        shifts.append(shift)

    if len(variables) == 1:
        gcd = univariate_gcd(stripped, ring, variables)
        unit = gcd.is_unit_monomial and gcd.single_term()[0] == (0,)
        cofactors = None
        if unit:
            gcd_full, cofs = univariate_extended_gcd(stripped, ring, variables)
            assert gcd_full == gcd
            # map cofactors back to the original (unstripped) generators
            cofactors = _assemble_cofactors(gens, nonzero_indices, shifts, cofs)
        return IdealMembershipResult(unit, "gcd", (gcd,), cofactors)

    aux = _fresh_name("w", variables)
    ext_vars = variables + (aux,)
    lift = RingHom(
        ring,
        ext_vars,
        {v: LaurentPoly.var(ring, ext_vars, v) for v in variables},
    )
    ext_gens = [lift.apply(g) for g in stripped]
    relation = LaurentPoly(
        ring,
        ext_vars,
        {
            tuple([1] * len(variables) + [1]): ring.one,
            (0,) * len(ext_vars): ring.neg(ring.one),
        },
    )
    basis, cofs = groebner_basis(ext_gens + [relation], with_cofactors=True)
    one_in = contains_constant(basis)
    cofactors = None
    if one_in:
        idx = 0  # the constant element is the whole reduced basis
        drop_aux = RingHom(
            ring,
            variables,
            {
                **{v: LaurentPoly.var(ring, variables, v) for v in variables},
                aux: LaurentPoly.monomial(ring, variables, (-1,) * len(variables)),
            },
        )
        back = [drop_aux.apply(c) for c in cofs[idx][:-1]]  # relation cofactor vanishes
        cofactors = _assemble_cofactors(gens, nonzero_indices, shifts, back)
    return IdealMembershipResult(one_in, "groebner", tuple(basis), cofactors)


def _assemble_cofactors(gens, nonzero_indices, shifts, cofs):
    """Re-express cofactors over the original generators and verify the identity."""
    ring = gens[0].ring
    variables = gens[0].variables
    out = [LaurentPoly.zero(ring, variables)] * len(gens)
    for idx, shift, c in zip(nonzero_indices, shifts, cofs):
        out[idx] = c.times_monomial(tuple(-s for s in shift))
    total = LaurentPoly.zero(ring, variables)
    for c, g in zip(out, gens):
        total = total + c * g
    assert total == LaurentPoly.one(ring, variables), "cofactor certificate failed"
    return tuple(out)


# ---------------------------------------------------------------------------
# regularity


@dataclass(frozen=True)
class RegularityResult:
    """Outcome of the Koszul regularity certificate for a Laurent potential."""

    regular: bool
    quotient_dimension: int | None
    zero_directions: tuple[str, ...]
    note: str = REGULARITY_CRITERION_NOTE

    def __bool__(self):
        return self.regular


def regular_sequence_check(u_img: LaurentPoly) -> RegularityResult:
    """Certify that the toric derivatives of `u_img` form a regular sequence.

    Criterion: no derivative vanishes identically, and the ideal they
    generate has a finite-dimensional quotient in the Laurent ring (computed
    by a Groebner basis after inverting the variables).  Rational
    coefficients only.
    """
    if u_img.ring is not RATIONAL:
        raise UnsupportedRing("regularity certificates require Rational coefficients")
    variables = u_img.variables
    vs = [u_img.log_derivative(v) for v in variables]
    zero_dirs = tuple(v for v, p in zip(variables, vs) if p.is_zero)
    if zero_dirs:
        return RegularityResult(False, None, zero_dirs)
    stripped = [_strip_units(v)[0] for v in vs]
    aux = _fresh_name("w", variables)
    ext_vars = variables + (aux,)
    lift = RingHom(
        RATIONAL,
        ext_vars,
        {v: LaurentPoly.var(RATIONAL, ext_vars, v) for v in variables},
    )
    relation = LaurentPoly(
        RATIONAL,
        ext_vars,
        {tuple([1] * len(variables) + [1]): 1, (0,) * len(ext_vars): -1},
    )
    basis = groebner_basis([lift.apply(p) for p in stripped] + [relation])
    monomials = standard_monomials(basis)
    if monomials is None:
        return RegularityResult(False, None, ())
    return RegularityResult(True, len(monomials), ())


def validate_regularity_hom(potential: Potential, hom: RingHom):
    """The homomorphism must send carrying generators bijectively onto the
    target variables (plain variables, coefficient 1) and surface generators
    to nonzero constants; Rational target."""
    if hom.ring is not RATIONAL:
        raise NonGenericHom("regularity homomorphisms must target Rational coefficients")
    seen_vars = {}
    r_names = set(potential.r_names)
    for name in potential.variables:
        if name not in hom.images:
            raise NonGenericHom(f"no image for generator {name}")
        exps, coeff = hom.images[name].single_term()
        if name in r_names:
            nonzero = [i for i, e in enumerate(exps) if e != 0]
            if len(nonzero) != 1 or exps[nonzero[0]] != 1 or coeff != 1:
                raise NonGenericHom(
                    f"carrying generator {name} must map to a plain target variable"
                )
            var = hom.variables[nonzero[0]]
            if var in seen_vars:
                raise NonGenericHom(
                    f"generators {seen_vars[var]} and {name} map to the same variable {var}"
                )
            seen_vars[var] = name
        else:
            if any(exps) or coeff == 0:
                raise NonGenericHom(
                    f"surface generator {name} must map to a nonzero constant"
                )
    if len(seen_vars) != len(hom.variables):
        unused = [v for v in hom.variables if v not in seen_vars]
        raise NonGenericHom(f"target variables {unused} receive no carrying generator")


def regularity_via_hom(potential: Potential, hom: RingHom) -> RegularityResult:
    """Rational regularity certificate for a potential through a generic
    monomial homomorphism (rebuilds the potential over Q from provenance)."""
    validate_regularity_hom(potential, hom)
    u_rational = potential.poly_over(RATIONAL)
    return regular_sequence_check(hom.apply(u_rational))


# ---------------------------------------------------------------------------
# certification pipeline


@dataclass(frozen=True)
class H0Evidence:
    hom_description: str
    hom_is_identity: bool
    contains_one: bool
    ideal_generators: tuple[str, ...]
    method: str

    @property
    def passed(self) -> bool:
        return not self.contains_one


@dataclass(frozen=True)
class RegularityEvidence:
    hom_description: str
    regular: bool
    quotient_dimension: int | None
    zero_directions: tuple[str, ...]
    note: str

    @property
    def passed(self) -> bool:
        return self.regular


@dataclass(frozen=True)
class CertificateReport:
    verdict: str
    token: str  # certified | partial | inconclusive | not-certified
    potential_str: str
    toric_differentials: tuple[tuple[str, str], ...]
    h0: H0Evidence
    regularity: RegularityEvidence | None

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "token": self.token,
            "potential": self.potential_str,
            "toric_differential": {name: s for name, s in self.toric_differentials},
            "h0": {
                "hom": self.h0.hom_description,
                "identity_hom": self.h0.hom_is_identity,
                "contains_one": self.h0.contains_one,
                "ideal_generators": list(self.h0.ideal_generators),
                "method": self.h0.method,
                "passed": self.h0.passed,
            },
            "regularity": None
            if self.regularity is None
            else {
                "hom": self.regularity.hom_description,
                "regular": self.regularity.regular,
                "quotient_dimension": self.regularity.quotient_dimension,
                "zero_directions": list(self.regularity.zero_directions),
                "note": self.regularity.note,
                "passed": self.regularity.passed,
            },
        }

    def to_text(self) -> list[str]:
        lines = [f"potential U = {self.potential_str}"]
        for name, s in self.toric_differentials:
            lines.append(f"v[{name}] = {s}")
        status = "PASSED" if self.h0.passed else "FAILED"
        gens = ", ".join(self.h0.ideal_generators) or "0"
        lines.append(
            f"H0 check ({self.h0.method}, hom: {self.h0.hom_description}): {status}; "
            f"image ideal ({gens})"
        )
        if self.regularity is None:
            lines.append("regularity check: not run (no homomorphism supplied)")
        else:
            status = "PASSED" if self.regularity.passed else "FAILED"
            dim = self.regularity.quotient_dimension
            detail = f"critical quotient dimension {dim}" if dim is not None else (
                "vanishing toric derivative in " + ", ".join(self.regularity.zero_directions)
                if self.regularity.zero_directions
                else "infinite-dimensional critical quotient"
            )
            lines.append(
                f"regularity check (hom: {self.regularity.hom_description}): {status}; {detail}"
            )
        lines.append(f"verdict: {self.verdict}")
        return lines


def certify_nondisplaceable(
    potential: Potential,
    h0_hom: RingHom | None = None,
    regularity_hom: RingHom | None = None,
    strict: bool = False,
) -> CertificateReport:
    """Run both certificate halves and assemble the verdict.

    Without an explicit `h0_hom` the identity homomorphism is used, which
    decides degree-zero survival exactly; a user-supplied homomorphism is
    honored as the evidence route, so its failure is inconclusive rather
    than a disproof.  `strict` raises when the verdict is not "certified".
    """
    vs = potential.toric_differential()
    hom = h0_hom or RingHom.identity(potential.ring, potential.variables)
    images = [hom.apply(v) for v in vs]
    membership = ideal_contains_one(images)
    h0 = H0Evidence(
        hom_description=hom.describe(),
        hom_is_identity=hom.is_identity,
        contains_one=membership.contains_one,
        ideal_generators=tuple(str(g) for g in membership.generators),
        method=membership.method,
    )

    regularity = None
    if regularity_hom is not None:
        result = regularity_via_hom(potential, regularity_hom)
        regularity = RegularityEvidence(
            hom_description=regularity_hom.describe(),
            regular=result.regular,
            quotient_dimension=result.quotient_dimension,
            zero_directions=result.zero_directions,
            note=result.note,
        )

    if h0.passed and regularity is not None and regularity.passed:
        verdict, token = "non-displaceability certified", "certified"
    elif h0.passed:
        detail = (
            "positive-degree vanishing not established"
            if regularity is None
            else "regularity certificate failed"
        )
        verdict, token = f"partially certified: degree zero survives; {detail}", "partial"
    elif h0.hom_is_identity:
        verdict, token = (
            "not certified: the toric differentials generate the unit ideal, "
            "degree zero dies",
            "not-certified",
        )
    else:
        verdict, token = (
            "inconclusive: the chosen homomorphism does not witness a proper "
            "ideal (not a disproof)",
            "inconclusive",
        )

    report = CertificateReport(
        verdict=verdict,
        token=token,
        potential_str=str(potential.poly),
        toric_differentials=tuple(
            (name, str(v)) for name, v in zip(potential.r_names, vs)
        ),
        h0=h0,
        regularity=regularity,
    )
    if strict and token != "certified":
        raise InconclusiveCertificate(verdict)
    return report


def search_h0_hom(potential: Potential, target_var: str = "t", exponent_bound: int = 2):
    """Brute-force search for a univariate collapse witnessing a proper
    ideal: every generator is sent to a power of one variable with exponent
    in [-bound, bound].  Returns the first homomorphism found, or None."""
    ring = potential.ring
    if not ring.is_field:
        raise UnsupportedRing("hom search needs field coefficients")
    vs = potential.toric_differential()
    names = potential.variables
    span = range(-exponent_bound, exponent_bound + 1)
    for exponents in itertools.product(span, repeat=len(names)):
        hom = RingHom.from_monomials(
            ring, (target_var,), {name: (e,) for name, e in zip(names, exponents)}
        )
        membership = ideal_contains_one([hom.apply(v) for v in vs])
        if not membership.contains_one:
            return hom
    return None
