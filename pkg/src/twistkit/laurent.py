"""Exact multivariate Laurent polynomial arithmetic over GF(2), Z, or Q.

Group rings of free abelian groups are realized as Laurent polynomial rings:
an element is a finite sum of monomials with integer exponent vectors.  GF(2)
is the default scalar ring for pearl computations; the rationals are used for
regularity certificates.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonUnitImage, UnsupportedRing, VariableMismatch


class CoefficientRing:
    """One of the supported exact scalar rings: GF2 (default), Int, Rational."""

    _by_tag: dict[str, "CoefficientRing"] = {}

    def __init__(self, tag: str):
        if tag in CoefficientRing._by_tag:
            raise ValueError(f"duplicate ring tag {tag}")
        self.tag = tag
        CoefficientRing._by_tag[tag] = self

    @classmethod
    def from_tag(cls, tag: str) -> "CoefficientRing":
        try:
            return cls._by_tag[tag]
        except KeyError:
            raise UnsupportedRing(f"unknown coefficient ring {tag!r}") from None

    def __repr__(self):
        return self.tag

    @property
    def is_field(self) -> bool:
        return self.tag in ("GF2", "Rational")

    @property
    def zero(self):
        return Fraction(0) if self.tag == "Rational" else 0

    @property
    def one(self):
        return Fraction(1) if self.tag == "Rational" else 1

    def coerce(self, value):
        if isinstance(value, Fraction) and self.tag != "Rational":
            if value.denominator != 1:
                raise UnsupportedRing(f"{value} is not an element of {self.tag}")
            value = value.numerator
        if self.tag == "GF2":
            return int(value) % 2
        if self.tag == "Int":
            return int(value)
        return Fraction(value)

    def parse(self, text: str):
        return self.coerce(Fraction(text))

    def format(self, value) -> str:
        return str(value)

    def add(self, a, b):
        return (a + b) % 2 if self.tag == "GF2" else a + b

    def mul(self, a, b):
        return (a * b) % 2 if self.tag == "GF2" else a * b

    def neg(self, a):
        return a if self.tag == "GF2" else -a

    def int_multiple(self, n: int, a):
        """n·a with the integer multiplier reduced into the ring (mod 2 for GF2)."""
        return (n * a) % 2 if self.tag == "GF2" else n * a

    def is_unit(self, a) -> bool:
        if self.tag == "GF2":
            return a == 1
        if self.tag == "Int":
            return a in (1, -1)
        return a != 0

    def inv(self, a):
        if not self.is_unit(a):
            raise UnsupportedRing(f"{a} is not a unit in {self.tag}")
        if self.tag == "GF2":
            return 1
        if self.tag == "Int":
            return a
        return Fraction(1) / a


GF2 = CoefficientRing("GF2")
INT = CoefficientRing("Int")
RATIONAL = CoefficientRing("Rational")


class LaurentPoly:
    """Immutable Laurent polynomial: a map from integer exponent vectors to
    nonzero coefficients, over a fixed ordered variable tuple."""

    __slots__ = ("ring", "variables", "terms", "_hash")

    def __init__(self, ring: CoefficientRing, variables, terms=None):
        variables = tuple(variables)
        clean: dict[tuple[int, ...], object] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise VariableMismatch(
                    f"exponent vector {exps} does not match variables {variables}"
                )
            c = ring.coerce(coeff)
            if c == ring.zero:
                continue
            if exps in clean:
                c = ring.add(clean[exps], c)
                if c == ring.zero:
                    del clean[exps]
                    continue
            clean[exps] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring, variables):
        return cls(ring, variables, {})

    @classmethod
    def constant(cls, ring, variables, value):
        variables = tuple(variables)
        return cls(ring, variables, {(0,) * len(variables): value})

    @classmethod
    def one(cls, ring, variables):
        return cls.constant(ring, variables, ring.one)

    @classmethod
    def monomial(cls, ring, variables, exps, coeff=None):
        variables = tuple(variables)
        coeff = ring.one if coeff is None else coeff
        return cls(ring, variables, {tuple(exps): coeff})

    @classmethod
    def var(cls, ring, variables, name, power=1):
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = power
        return cls.monomial(ring, variables, exps)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_unit_monomial(self) -> bool:
        if len(self.terms) != 1:
            return False
        (coeff,) = self.terms.values()
        return self.ring.is_unit(coeff)

    def single_term(self):
        ((exps, coeff),) = self.terms.items()
        return exps, coeff

    def constant_value(self):
        """The coefficient of the constant monomial (zero if absent)."""
        return self.terms.get((0,) * len(self.variables), self.ring.zero)

    def min_exponents(self):
        """Componentwise minimum exponent over all terms (zero vector if empty)."""
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(e[i] for e in self.terms) for i in range(len(self.variables)))

    def _check(self, other: "LaurentPoly"):
        if self.ring is not other.ring:
            raise VariableMismatch(
                f"coefficient rings differ: {self.ring} vs {other.ring}"
            )
        if self.variables != other.variables:
            raise VariableMismatch(
                f"variables differ: {self.variables} vs {other.variables}"
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        ring = self.ring
        for exps, coeff in other.terms.items():
            c = ring.add(terms.get(exps, ring.zero), coeff)
            if c == ring.zero:
                terms.pop(exps, None)
            else:
                terms[exps] = c
        return LaurentPoly(ring, self.variables, terms)

    def __neg__(self):
        ring = self.ring
        return LaurentPoly(
            ring, self.variables, {e: ring.neg(c) for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        ring = self.ring
        acc: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = ring.add(acc.get(exps, ring.zero), ring.mul(c1, c2))
                if c == ring.zero:
                    acc.pop(exps, None)
                else:
                    acc[exps] = c
        return LaurentPoly(ring, self.variables, acc)

    def scale(self, coeff):
        ring = self.ring
        c0 = ring.coerce(coeff)
        return LaurentPoly(
            ring, self.variables, {e: ring.mul(c, c0) for e, c in self.terms.items()}
        )

    def times_monomial(self, exps, coeff=None):
        ring = self.ring
        exps = tuple(exps)
        c0 = ring.one if coeff is None else ring.coerce(coeff)
        return LaurentPoly(
            ring,
            self.variables,
            {
                tuple(a + b for a, b in zip(e, exps)): ring.mul(c, c0)
                for e, c in self.terms.items()
            },
        )

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_unit_monomial:
                raise UnsupportedRing("negative powers need a unit monomial")
            exps, coeff = self.single_term()
            inv = LaurentPoly.monomial(
                self.ring, self.variables, tuple(-e for e in exps), self.ring.inv(coeff)
            )
            return inv ** (-n)
        result = LaurentPoly.one(self.ring, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus ----------------------------------------------------------

    def partial_derivative(self, name: str) -> "LaurentPoly":
        """d/d(name); needs Int or Rational coefficients."""
        if self.ring is GF2:
            raise UnsupportedRing(
                "partial derivative over GF2 is ill-defined; use log_derivative"
            )
        idx = self.variables.index(name)
        ring = self.ring
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[idx] == 0:
                continue
            new = list(exps)
            new[idx] -= 1
            terms[tuple(new)] = ring.int_multiple(exps[idx], coeff)
        return LaurentPoly(ring, self.variables, terms)

    def log_derivative(self, name: str) -> "LaurentPoly":
        """x·d/dx for the named variable: each term is multiplied by its
        exponent, reduced into the coefficient ring.  Characteristic-safe."""
        idx = self.variables.index(name)
        ring = self.ring
        terms = {}
        for exps, coeff in self.terms.items():
            c = ring.int_multiple(exps[idx], coeff)
            if c != ring.zero:
                terms[exps] = c
        return LaurentPoly(ring, self.variables, terms)

    # -- evaluation / substitution ------------------------------------------

    def evaluate(self, point: dict):
        """Exact value at a point (Int/Rational); Laurent terms need nonzero
        coordinates under negative exponents."""
        if self.ring is GF2:
            raise UnsupportedRing("evaluation is supported over Int/Rational only")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = Fraction(coeff)
            for name, e in zip(self.variables, exps):
                value *= Fraction(point[name]) ** e
            total += value
        return total

    def substitute(self, hom: "RingHom") -> "LaurentPoly":
        return hom.apply(self)

    # -- comparisons / printing ---------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.ring is other.ring
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            h = hash((self.ring.tag, self.variables, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def sorted_terms(self):
        """Terms in descending lexicographic exponent order (stable print order)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            cstr = self.ring.format(coeff)
            negative = cstr.startswith("-")
            if negative:
                cstr = cstr[1:]
            if not body:
                text = cstr
            elif cstr == "1":
                text = body
            else:
                text = f"{cstr}*{body}"
            pieces.append(("-" if negative else "+", text))
        sign, text = pieces[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self.ring}, {self.variables}, {str(self)!r})"


class RingHom:
    """A ring homomorphism determined by unit-monomial images of generators.

    Every group-ring generator must be sent to a single monomial with unit
    coefficient (so that negative exponents transport).  The hom may shrink
    the variable set; constants (zero exponent vectors) are allowed images.
    """

    def __init__(self, ring: CoefficientRing, variables, images: dict):
        self.ring = ring
        self.variables = tuple(variables)
        self.images: dict[str, LaurentPoly] = {}
        for name, poly in images.items():
            if not isinstance(poly, LaurentPoly):
                raise NonUnitImage(f"image of {name} must be a LaurentPoly")
            if poly.ring is not ring or poly.variables != self.variables:
                raise VariableMismatch(
                    f"image of {name} lives in the wrong target ring"
                )
            if not poly.is_unit_monomial:
                raise NonUnitImage(
                    f"image of {name} must be a single monomial with unit coefficient"
                )
            self.images[name] = poly

    @classmethod
    def from_monomials(cls, ring, variables, exponents: dict, coeffs: dict = None):
        """Build from {generator: exponent vector}; optional unit coefficients."""
        variables = tuple(variables)
        coeffs = coeffs or {}
        images = {
            name: LaurentPoly.monomial(ring, variables, exps, coeffs.get(name, ring.one))
            for name, exps in exponents.items()
        }
        return cls(ring, variables, images)

    @classmethod
    def identity(cls, ring, variables):
        variables = tuple(variables)
        return cls(
            ring,
            variables,
            {name: LaurentPoly.var(ring, variables, name) for name in variables},
        )

    @property
    def is_identity(self) -> bool:
        for name, poly in self.images.items():
            if name not in self.variables:
                return False
            exps, coeff = poly.single_term()
            want = tuple(int(v == name) for v in self.variables)
            if exps != want or coeff != self.ring.one:
                return False
        return True

    def _transport(self, source_ring: CoefficientRing, coeff):
        if source_ring is self.ring:
            return coeff
        if source_ring is INT and self.ring is RATIONAL:
            return Fraction(coeff)
        raise UnsupportedRing(
            f"cannot transport {source_ring} coefficients into {self.ring}"
        )

    def apply(self, poly: LaurentPoly) -> LaurentPoly:
        missing = [v for v in poly.variables if v not in self.images]
        if missing:
            raise VariableMismatch(f"no image given for generators {missing}")
        ring = self.ring
        result = LaurentPoly.zero(ring, self.variables)
        for exps, coeff in poly.terms.items():
            out_exps = [0] * len(self.variables)
            out_coeff = ring.coerce(self._transport(poly.ring, coeff))
            for name, e in zip(poly.variables, exps):
                img_exps, img_coeff = self.images[name].single_term()
                for i, ie in enumerate(img_exps):
                    out_exps[i] += ie * e
                factor = img_coeff if e >= 0 else ring.inv(img_coeff)
                out_coeff = ring.mul(out_coeff, ring.coerce(factor ** abs(e)))
            result = result + LaurentPoly.monomial(ring, self.variables, out_exps, out_coeff)
        return result

    def describe(self) -> str:
        parts = []
        for name in sorted(self.images):
            parts.append(f"{name} -> {self.images[name]}")
        return ", ".join(parts)

    def __repr__(self):
        return f"RingHom({self.ring}, {self.variables}, {self.describe()!r})"


# ---------------------------------------------------------------------------
# JSON helpers


def poly_to_json(poly: LaurentPoly) -> dict:
    return {
        "ring": poly.ring.tag,
        "variables": list(poly.variables),
        "terms": [[list(e), poly.ring.format(c)] for e, c in poly.sorted_terms()],
    }


def poly_from_json(data: dict) -> LaurentPoly:
    ring = CoefficientRing.from_tag(data["ring"])
    variables = tuple(data["variables"])
    terms = {tuple(exps): ring.parse(str(coeff)) for exps, coeff in data["terms"]}
    return LaurentPoly(ring, variables, terms)


def hom_to_json(hom: RingHom) -> dict:
    return {
        "ring": hom.ring.tag,
        "variables": list(hom.variables),
        "images": {
            name: [list(poly.single_term()[0]), hom.ring.format(poly.single_term()[1])]
            for name, poly in hom.images.items()
        },
    }


def hom_from_json(data: dict) -> RingHom:
    ring = CoefficientRing.from_tag(data["ring"])
    variables = tuple(data["variables"])
    images = {
        name: LaurentPoly.monomial(ring, variables, tuple(exps), ring.parse(str(coeff)))
        for name, (exps, coeff) in data["images"].items()
    }
    return RingHom(ring, variables, images)
