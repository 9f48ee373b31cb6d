"""Buchberger Groebner bases over GF(2) and Q, with cofactor tracking.

Operates on LaurentPoly values whose exponents are all nonnegative (ordinary
polynomials).  The monomial order is degree-reverse-lexicographic on the
polynomial's variable tuple, so callers control the order by variable
placement (the localization variable goes last).  The reduced basis returned
is the canonical one for that order.
"""

from __future__ import annotations

import itertools

from .errors import UnsupportedRing, VariableMismatch
from .laurent import LaurentPoly


def grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def leading_term(poly: LaurentPoly):
    exps = max(poly.terms, key=grevlex_key)
    return exps, poly.terms[exps]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exps_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _exps_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _require_polynomial(poly: LaurentPoly):
    for exps in poly.terms:
        if any(e < 0 for e in exps):
            raise ValueError("groebner machinery needs nonnegative exponents")


def _monic(poly: LaurentPoly, cof=None):
    _, lc = leading_term(poly)
    inv = poly.ring.inv(lc)
    if cof is None:
        return poly.scale(inv), None
    return poly.scale(inv), [c.scale(inv) for c in cof]


def normal_form(poly: LaurentPoly, basis, cof=None, basis_cofs=None):
    """Full remainder of `poly` modulo `basis`; optionally tracks cofactors.

    If cofactors are tracked, the invariant `tracked_total = sum(cof_i * gen_i)`
    is preserved, where the generators are those the basis cofactors refer to.
    """
    ring = poly.ring
    work = poly
    remainder = LaurentPoly.zero(ring, poly.variables)
    while not work.is_zero:
        exps, coeff = leading_term(work)
        for j, g in enumerate(basis):
            g_exps, g_coeff = leading_term(g)
            if _divides(g_exps, exps):
                q_exps = _exps_sub(exps, g_exps)
                q_coeff = ring.mul(coeff, ring.inv(g_coeff))
                work = work - g.times_monomial(q_exps, q_coeff)
                if cof is not None:
                    for i in range(len(cof)):
                        cof[i] = cof[i] - basis_cofs[j][i].times_monomial(q_exps, q_coeff)
                break
        else:
            term = LaurentPoly.monomial(ring, poly.variables, exps, coeff)
            remainder = remainder + term
            work = work - term
    return remainder, cof


def _s_polynomial(f, g, cf, cg):
    ring = f.ring
    f_exps, f_coeff = leading_term(f)
    g_exps, g_coeff = leading_term(g)
    l = _exps_lcm(f_exps, g_exps)
    uf_exps, uf_coeff = _exps_sub(l, f_exps), ring.inv(f_coeff)
    ug_exps, ug_coeff = _exps_sub(l, g_exps), ring.inv(g_coeff)
    s = f.times_monomial(uf_exps, uf_coeff) - g.times_monomial(ug_exps, ug_coeff)
    cof = None
    if cf is not None:
        cof = [
            a.times_monomial(uf_exps, uf_coeff) - b.times_monomial(ug_exps, ug_coeff)
            for a, b in zip(cf, cg)
        ]
    return s, cof


def groebner_basis(gens, with_cofactors=False):
    """Canonical reduced Groebner basis of the ideal generated by `gens`.

    Returns the basis, or (basis, cofactors) when tracking: cofactors[i] is a
    vector over the original gens with basis[i] == sum_j cofactors[i][j]*gens[j].
    """
    gens = [g for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    variables = gens[0].variables
    if not ring.is_field:
        raise UnsupportedRing("groebner bases need a field (GF2 or Rational)")
    for g in gens:
        if g.ring is not ring or g.variables != variables:
            raise VariableMismatch("generators live in different rings")
        _require_polynomial(g)

    basis: list[LaurentPoly] = []
    cofs: list[list[LaurentPoly]] = []
    unit = lambda i: [
        LaurentPoly.one(ring, variables) if j == i else LaurentPoly.zero(ring, variables)
        for j in range(len(gens))
    ]
    for i, g in enumerate(gens):
        if g.is_zero:
            continue
        p, c = _monic(g, unit(i) if with_cofactors else None)
        basis.append(p)
        cofs.append(c)

    lms = [leading_term(g)[0] for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(pairs, key=lambda ij: (grevlex_key(_exps_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.discard((i, j))
        lcm_ij = _exps_lcm(lms[i], lms[j])
        if lcm_ij == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue  # coprime leading monomials: S-poly reduces to zero
        if any(
            k != i
            and k != j
            and _divides(lms[k], lcm_ij)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue  # chain criterion
        s, cof = _s_polynomial(
            basis[i], basis[j],
            cofs[i] if with_cofactors else None,
            cofs[j] if with_cofactors else None,
        )
        if s.is_zero:
            continue
        r, cof = normal_form(s, basis, cof, cofs if with_cofactors else None)
        if r.is_zero:
            continue
        r, cof = _monic(r, cof)
        basis.append(r)
        cofs.append(cof)
        lms.append(leading_term(r)[0])
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))

    return _autoreduce(basis, cofs if with_cofactors else None)


def _autoreduce(basis, cofs):
    # drop elements whose leading monomial another element's divides
    order = sorted(range(len(basis)), key=lambda i: grevlex_key(leading_term(basis[i])[0]))
    keep = []
    for i in order:
        lm = leading_term(basis[i])[0]
        if any(_divides(leading_term(basis[k])[0], lm) for k in keep):
            continue
        keep.append(i)
    minimal = [basis[i] for i in keep]
    minimal_cofs = [cofs[i] for i in keep] if cofs is not None else None

    reduced = []
    reduced_cofs = [] if cofs is not None else None
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        if cofs is not None:
            other_cofs = minimal_cofs[:i] + minimal_cofs[i + 1 :]
            r, c = normal_form(g, others, list(minimal_cofs[i]), other_cofs)
            r, c = _monic(r, c)
            reduced.append(r)
            reduced_cofs.append(c)
        else:
            r, _ = normal_form(g, others)
            r, _ = _monic(r)
            reduced.append(r)

    order = sorted(
        range(len(reduced)), key=lambda i: grevlex_key(leading_term(reduced[i])[0]), reverse=True
    )
    reduced = [reduced[i] for i in order]
    if cofs is None:
        return reduced
    reduced_cofs = [reduced_cofs[i] for i in order]
    return reduced, reduced_cofs


def contains_constant(basis) -> bool:
    """True iff the reduced basis is {1} (the ideal is the whole ring)."""
    return len(basis) == 1 and not basis[0].is_zero and set(basis[0].terms) == {
        (0,) * len(basis[0].variables)
    }


def is_zero_dimensional(basis) -> bool:
    """True iff the quotient by the ideal is finite-dimensional: for every
    variable some leading monomial is a pure power of it (or the ideal is
    the whole ring)."""
    if contains_constant(basis):
        return True
    nvars = len(basis[0].variables)
    for i in range(nvars):
        if not any(
            all(e == 0 for j, e in enumerate(leading_term(g)[0]) if j != i)
            and leading_term(g)[0][i] > 0
            for g in basis
        ):
            return False
    return True


def standard_monomials(basis):
    """The monomials not divisible by any leading monomial, for a
    zero-dimensional ideal; None if the quotient is infinite-dimensional."""
    if contains_constant(basis):
        return []
    if not is_zero_dimensional(basis):
        return None
    nvars = len(basis[0].variables)
    lms = [leading_term(g)[0] for g in basis]
    degrees = []
    for i in range(nvars):
        pure = [
            lm[i]
            for lm in lms
            if lm[i] > 0 and all(e == 0 for j, e in enumerate(lm) if j != i)
        ]
        degrees.append(min(pure))
    out = []
    for exps in itertools.product(*(range(d) for d in degrees)):
        if not any(_divides(lm, exps) for lm in lms):
            out.append(exps)
    return sorted(out)


# ---------------------------------------------------------------------------
# univariate tools (dense, over a field)


def _to_dense(poly: LaurentPoly):
    _require_polynomial(poly)
    if len(poly.variables) != 1:
        raise VariableMismatch("univariate helper got a multivariate polynomial")
    if poly.is_zero:
        return []
    deg = max(e[0] for e in poly.terms)
    ring = poly.ring
    dense = [ring.zero] * (deg + 1)
    for (e,), c in poly.terms.items():
        dense[e] = c
    return dense


def _from_dense(dense, ring, variables):
    return LaurentPoly(ring, variables, {(i,): c for i, c in enumerate(dense)})


def _dense_trim(p, zero):
    while p and p[-1] == zero:
        p.pop()
    return p


def _dense_divmod(a, b, ring):
    a = _dense_trim(list(a), ring.zero)
    b = _dense_trim(list(b), ring.zero)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ring.zero] * max(0, len(a) - len(b) + 1)
    inv = ring.inv(b[-1])
    while len(a) >= len(b):
        shift = len(a) - len(b)
        factor = ring.mul(a[-1], inv)
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] = ring.add(a[shift + i], ring.neg(ring.mul(factor, c)))
        _dense_trim(a, ring.zero)
    return q, a


def univariate_gcd(polys, ring, variables) -> LaurentPoly:
    """Monic gcd of univariate polynomials over a field (zero inputs skipped)."""
    dense_list = [d for d in (_to_dense(p) for p in polys) if d]
    if not dense_list:
        return LaurentPoly.zero(ring, variables)
    g = dense_list[0]
    for nxt in dense_list[1:]:
        a, b = g, nxt
        while b:
            _, r = _dense_divmod(a, b, ring)
            a, b = b, r
        g = a
    inv = ring.inv(g[-1])
    g = [ring.mul(c, inv) for c in g]
    return _from_dense(g, ring, variables)


def univariate_extended_gcd(polys, ring, variables):
    """Monic gcd plus cofactors: gcd == sum(cofactor_i * poly_i).

    Zero inputs get zero cofactors.
    """
    zero = LaurentPoly.zero(ring, variables)
    one = LaurentPoly.one(ring, variables)
    gcd_poly = None
    cofactors = []
    for idx, p in enumerate(polys):
        if p.is_zero:
            cofactors.append(zero)
            continue
        if gcd_poly is None:
            gcd_poly, cofactors = p, [zero] * idx + [one]
            continue
        g, u, v = _ext_gcd_pair(gcd_poly, p, ring, variables)
        cofactors = [c * u for c in cofactors] + [v]
        gcd_poly = g
    if gcd_poly is None:
        return zero, [zero] * len(polys)
    _, lc = leading_term(gcd_poly)
    inv = ring.inv(lc)
    gcd_poly = gcd_poly.scale(inv)
    cofactors = [c.scale(inv) for c in cofactors]
    return gcd_poly, cofactors


def _ext_gcd_pair(a_poly, b_poly, ring, variables):
    a, b = _to_dense(a_poly), _to_dense(b_poly)
    u0, u1 = [ring.one], []
    v0, v1 = [], [ring.one]

    def dense_sub_mul(x, q, y):
        # x - q*y; dense lists
        prod = [ring.zero] * (len(q) + len(y) - 1) if q and y else []
        for i, qc in enumerate(q):
            if qc == ring.zero:
                continue
            for j, yc in enumerate(y):
                prod[i + j] = ring.add(prod[i + j], ring.mul(qc, yc))
        out = [ring.zero] * max(len(x), len(prod))
        for i, c in enumerate(x):
            out[i] = c
        for i, c in enumerate(prod):
            out[i] = ring.add(out[i], ring.neg(c))
        return _dense_trim(out, ring.zero)

    while _dense_trim(list(b), ring.zero):
        q, r = _dense_divmod(a, b, ring)
        a, b = b, r
        u0, u1 = u1, dense_sub_mul(u0, q, u1)
        v0, v1 = v1, dense_sub_mul(v0, q, v1)
    return (
        _from_dense(a, ring, variables),
        _from_dense(u0, ring, variables),
        _from_dense(v0, ring, variables),
    )
