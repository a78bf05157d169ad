"""phi-stable ideal machinery over the supported commutative rings.

Polynomial rings of any number of variables are handled by a small Buchberger
implementation (degrevlex, with cofactor tracking so every membership answer
carries a certificate).  Laurent rings are treated through their polynomial
part: exponents are shifted to be nonnegative and membership saturates by the
Laurent generators up to an explicit degree bound, which is sound and covers
the principal-plus-binomial ideals arising here.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    ClosureBudgetExceeded,
    InternalConsistencyError,
    NotPhiStable,
    UnsupportedFamily,
    UnsupportedRing,
)
from .field import element_order
from .linalg import kernel_basis
from .ring import Automorphism, BaseRing, RingElement, affine_shape, fixed_subring_generators


# ---------------------------------------------------------------------------
# monomial order and division


def _deg(exps) -> int:
    return sum(exps)


def _degrevlex_key(exps):
    return (_deg(exps), tuple(-e for e in reversed(exps)))


def _leading(r: RingElement):
    exps = max(r.terms, key=_degrevlex_key)
    return exps, r.terms[exps]


def _mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def reduce_with_certificate(r: RingElement, basis):
    """Divide r by the basis: returns (normal_form, cofactors) with
    r = sum_j cofactors[j]*basis[j] + normal_form."""
    ring = r.ring
    cof = [ring.zero() for _ in basis]
    rem = ring.zero()
    f = r
    while not f.is_zero():
        exps, c = _leading(f)
        hit = None
        for j, g in enumerate(basis):
            ge, gc = _leading(g)
            if _mono_divides(ge, exps):
                hit = (j, ge, gc)
                break
        if hit is None:
            move = ring.monomial(exps, c)
            rem = rem + move
            f = f - move
        else:
            j, ge, gc = hit
            q = ring.monomial(_mono_div(exps, ge), c * gc.inv())
            cof[j] = cof[j] + q
            f = f - q * basis[j]
    return rem, cof


def normal_form(r: RingElement, basis) -> RingElement:
    return reduce_with_certificate(r, basis)[0]


def _spoly(f, g):
    ring = f.ring
    fe, fc = _leading(f)
    ge, gc = _leading(g)
    l = _mono_lcm(fe, ge)
    mf = ring.monomial(_mono_div(l, fe), fc.inv())
    mg = ring.monomial(_mono_div(l, ge), gc.inv())
    return mf * f - mg * g, mf, mg


def groebner_basis(gens):
    """Reduced Groebner basis (degrevlex) with cofactors over the input gens.

    Returns (basis, transforms): basis[i] = sum_j transforms[i][j]*gens[j].
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return [], []
    ring = gens[0].ring
    basis = []
    tracks = []
    for j, g in enumerate(gens):
        track = [ring.zero()] * len(gens)
        track[j] = ring.one()
        basis.append(g)
        tracks.append(track)

    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        s, mf, mg = _spoly(basis[i], basis[j])
        rem, cof = reduce_with_certificate(s, basis)
        if rem.is_zero():
            continue
        track = [mf * a - mg * b for a, b in zip(tracks[i], tracks[j])]
        for k, q in enumerate(cof):
            if not q.is_zero():
                track = [a - q * b for a, b in zip(track, tracks[k])]
        pairs.extend((k, len(basis)) for k in range(len(basis)))
        basis.append(rem)
        tracks.append(track)

    # interreduce to the canonical reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            other_tracks = tracks[:i] + tracks[i + 1:]
            if not others:
                continue
            rem, cof = reduce_with_certificate(basis[i], others)
            if rem != basis[i]:
                changed = True
                if rem.is_zero():
                    del basis[i]
                    del tracks[i]
                else:
                    track = list(tracks[i])
                    for k, q in enumerate(cof):
                        if not q.is_zero():
                            track = [a - q * b for a, b in zip(track, other_tracks[k])]
                    basis[i] = rem
                    tracks[i] = track
                break
    # monic normalization, sorted for determinism
    order = sorted(range(len(basis)), key=lambda k: _degrevlex_key(_leading(basis[k])[0]))
    out_basis, out_tracks = [], []
    for k in order:
        _, lc = _leading(basis[k])
        inv = lc.inv()
        out_basis.append(basis[k] * inv)
        out_tracks.append([t * inv for t in tracks[k]])
    return out_basis, out_tracks


# ---------------------------------------------------------------------------
# Laurent handling


def _laurent_names(ring: BaseRing):
    return [g for g, l in zip(ring.gens, ring.laurent) if l]


def _clear_laurent(r: RingElement):
    """Shift exponents to be nonnegative: returns (r_poly, shifts dict name->m)."""
    ring = r.ring
    shifts = {}
    out = r
    for name in _laurent_names(ring):
        m = -min(0, out.min_degree_in(name))
        if m:
            out = out * ring.gen(name, m)
        shifts[name] = m
    return out, shifts


def _is_polynomial(r: RingElement) -> bool:
    return all(e >= 0 for exps in r.terms for e in exps)


def _laurent_spread(gens, ring) -> int:
    spread = 0
    for name in _laurent_names(ring):
        for g in gens:
            if g.is_zero():
                continue
            spread = max(spread, g.degree_in(name) - min(0, g.min_degree_in(name)))
    return spread


# ---------------------------------------------------------------------------


@dataclass
class MembershipResult:
    member: bool
    certificate: list | None      # pairs (cofactor, generator) with r = sum c*g
    normal_form_witness: RingElement | None

    def __bool__(self):
        return self.member


class PhiStableIdeal:
    """A left ideal of the (commutative) base ring, closed under every phi_i.

    `generators` is the canonical reduced Groebner basis of the polynomial
    part (for Laurent rings: of the exponent-shifted generators), monic and
    deterministic.  The stability certificate maps (i, j) to the membership
    expression of phi_i(g_j)."""

    def __init__(self, ring: BaseRing, phis, generators, stability_certificate=None):
        self.ring = ring
        self.phis = list(phis)
        self.generators = list(generators)
        self.stability_certificate = stability_certificate or {}

    def __repr__(self):
        gens = ", ".join(repr(g) for g in self.generators) or "0"
        return f"Ideal({gens})"

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.as_scalar() is not None and not g.as_scalar().is_zero()
                   for g in self.generators)

    def contains(self, r: RingElement) -> bool:
        return membership(r, self).member

    def __eq__(self, other):
        if not isinstance(other, PhiStableIdeal) or other.ring != self.ring:
            return NotImplemented
        return ideal_equal_gens(self.ring, self.generators, other.generators)

    # equality is extensional (two-way membership), so these objects are unhashable
    __hash__ = None


def _canonical_generators(ring: BaseRing, gens):
    polys = []
    for g in gens:
        if g.is_zero():
            continue
        gp, _ = _clear_laurent(g)
        polys.append(gp)
    basis, _ = groebner_basis(polys)
    return basis


def ideal_membership_gens(r: RingElement, ring: BaseRing, gens) -> MembershipResult:
    """Membership of r in the ideal generated by gens, with certificate."""
    gens = [g for g in gens if not g.is_zero()]
    if r.is_zero():
        return MembershipResult(True, [], None)
    if not gens:
        return MembershipResult(False, None, r)
    basis, tracks = groebner_basis([_clear_laurent(g)[0] for g in gens])
    if not basis:
        return MembershipResult(False, None, r)

    r_poly, shifts = _clear_laurent(r)
    shift_unit = ring.one()
    for name, m in shifts.items():
        if m:
            shift_unit = shift_unit * ring.gen(name, m)

    laurents = _laurent_names(ring)
    bound = _laurent_spread(gens, ring) + max(0, r.degree()) if laurents else 0
    sat = ring.one()
    for m in range(bound + 1):
        rem, cof = reduce_with_certificate(sat * r_poly, basis)
        if rem.is_zero():
            # express in terms of the original (uncleared) generators
            unshift = (shift_unit * sat).unit_inverse() or ring.one()
            cert = []
            for j, g in enumerate(gens):
                g_poly, g_shifts = _clear_laurent(g)
                g_unit = ring.one()
                for name, k in g_shifts.items():
                    if k:
                        g_unit = g_unit * ring.gen(name, k)
                total = ring.zero()
                for b_idx, q in enumerate(cof):
                    if not q.is_zero():
                        total = total + q * tracks[b_idx][j]
                if not total.is_zero():
                    cert.append((unshift * total * g_unit, g))
            check = ring.zero()
            for c, g in cert:
                check = check + c * g
            assert check == r, "membership certificate failed to re-expand"
            return MembershipResult(True, cert, None)
        if not laurents:
            break
        sat = sat * ring.gen(laurents[0])
        for name in laurents[1:]:
            sat = sat * ring.gen(name)
    rem, _ = reduce_with_certificate(r_poly, basis)
    return MembershipResult(False, None, rem)


def membership(r: RingElement, J: PhiStableIdeal) -> MembershipResult:
    if r.ring != J.ring:
        raise UnsupportedRing("element and ideal live in different rings")
    return ideal_membership_gens(r, J.ring, J.generators)


def ideal_equal_gens(ring, gens_a, gens_b) -> bool:
    return (all(ideal_membership_gens(g, ring, gens_b).member for g in gens_a)
            and all(ideal_membership_gens(g, ring, gens_a).member for g in gens_b))


def is_phi_stable(phis, generators) -> bool:
    """phi_i(g) in (generators) for every generator and every i."""
    if not generators:
        return True
    ring = generators[0].ring
    for phi in phis:
        for g in generators:
            if not ideal_membership_gens(phi.apply(g), ring, generators).member:
                return False
    return True


def phi_stable_ideal(ring: BaseRing, phis, generators) -> PhiStableIdeal:
    """Construct the ideal and certify stability (raises NotPhiStable)."""
    basis = _canonical_generators(ring, generators)
    cert = {}
    for i, phi in enumerate(phis):
        for j, g in enumerate(basis):
            res = ideal_membership_gens(phi.apply(g), ring, basis)
            if not res.member:
                raise NotPhiStable(f"phi_{i}({g!r}) escapes the ideal: {res.normal_form_witness!r}")
            cert[(i, j)] = res.certificate
            # Lemma: stability forces equality, witnessed on the inverse side too
            res_inv = ideal_membership_gens(phi.inverse().apply(g), ring, basis)
            if not res_inv.member:
                raise NotPhiStable(f"phi_{i}^-1({g!r}) escapes the ideal")
            cert[(i, -j - 1)] = res_inv.certificate
    return PhiStableIdeal(ring, phis, basis, cert)


def phi_stable_closure(generators, phis, cap: int = 64) -> PhiStableIdeal:
    """Smallest phi-stable ideal containing the generators."""
    if not generators:
        ring = phis[0].ring
        return PhiStableIdeal(ring, phis, [])
    ring = generators[0].ring
    current = _canonical_generators(ring, generators)
    for _ in range(cap):
        extended = list(current)
        for phi in phis:
            extended.extend(phi.apply(g) for g in current)
            extended.extend(phi.inverse().apply(g) for g in current)
        new_basis = _canonical_generators(ring, extended)
        if ideal_equal_gens(ring, current, new_basis):
            return phi_stable_ideal(ring, phis, new_basis)
        current = new_basis
    raise ClosureBudgetExceeded("closure did not stabilize; this contradicts Noetherianity")


# ---------------------------------------------------------------------------
# univariate classification


@dataclass
class ClassificationReport:
    regime: str                   # powers | root_of_unity | all_ideals | only_trivial | centrally_generated
    tilde_t: RingElement | None
    ell: int | None
    monic_generators: list | None      # generators of the nonzero proper stable ideals within the bound
    maximal_proper: list | None
    maximal_caveat: str | None = None
    notes: list = dc_field(default_factory=list)


def _univariate_gen(ring: BaseRing) -> str:
    polys = [g for g, l in zip(ring.gens, ring.laurent) if not l]
    if len(ring.gens) != 1 or len(polys) != 1:
        raise UnsupportedRing("classification needs a univariate polynomial ring")
    return polys[0]


def _all_monic(ring: BaseRing, name: str, degree: int):
    """All monic univariate polynomials of exactly this degree (finite fields)."""
    field = ring.field
    p = field.characteristic()
    if not p:
        raise UnsupportedRing("enumeration needs a finite field")
    t = ring.gen(name)
    polys = [t ** degree]
    for d in range(degree):
        polys = [
            f + (t ** d) * field.from_int(c)
            for f in polys
            for c in range(p)
        ]
    return polys


def classify_univariate(phi: Automorphism, degree_bound: int,
                        algebraically_closed: bool = False) -> ClassificationReport:
    """Describe all phi-stable ideals of F[t] for phi(t) = alpha t + beta."""
    ring = phi.ring
    name = _univariate_gen(ring)
    shape = affine_shape(phi, name)
    if shape is None:
        raise UnsupportedRing("automorphism is not affine on the generator")
    alpha, beta_elt = shape
    beta = beta_elt.as_scalar()
    field = ring.field
    t = ring.gen(name)
    p = field.characteristic()

    if alpha.is_one():
        if beta.is_zero():
            gens = None
            if p:
                gens = [f for d in range(1, degree_bound + 1) for f in _all_monic(ring, name, d)]
            return ClassificationReport(
                "all_ideals", None, None, gens, None,
                notes=["phi = id: every ideal is stable"])
        if not p:
            return ClassificationReport(
                "only_trivial", None, None, [], [],
                notes=["shift in characteristic 0: only (0) and (1) are stable"])
        z = t ** p - t * (beta ** (p - 1))
        gens = None
        if p:
            gens = []
            for dz in range(1, degree_bound // p + 1):
                for f in _all_monic(ring, name, dz):
                    gens.append(f.substitute({name: z}))
        return ClassificationReport(
            "centrally_generated", z, p, gens, None,
            notes=["stable ideals are generated by monic polynomials in t^p - beta^(p-1) t"])

    tilde = t * (alpha - field.one()) + ring.scalar(beta)
    ell = element_order(alpha)
    if ell is None:
        gens = [tilde ** n for n in range(1, degree_bound + 1)]
        return ClassificationReport("powers", tilde, None, gens, [tilde])

    # alpha is a primitive ell-th root of unity: f = tilde^a * g(tilde^ell),
    # g monic with nonzero constant term
    gens = None
    maximal = None
    caveat = None
    if p:
        gens = []
        seen = set()
        for a in range(0, degree_bound + 1):
            power = tilde ** a
            if a and _freeze(power) not in seen:
                seen.add(_freeze(power))
                gens.append(power)
            max_dz = (degree_bound - a) // ell
            for dz in range(1, max_dz + 1):
                for g in _all_monic(ring, name, dz):
                    const = g.coefficient_of(name, 0).as_scalar()
                    if const is None or const.is_zero():
                        continue
                    f = power * g.substitute({name: tilde ** ell})
                    key = _freeze(f)
                    if key not in seen:
                        seen.add(key)
                        gens.append(f)
        maximal = [f for f in gens if _is_maximal_stable(ring, f, gens)]
        caveat = None
    else:
        maximal = [tilde]
        caveat = ("over an algebraically closed field the other maximal stable ideals "
                  "are (tilde^ell - xi) for nonzero xi")
    return ClassificationReport("root_of_unity", tilde, ell, gens, maximal, caveat)


def _freeze(r: RingElement):
    return frozenset(r.terms.items())


def _is_maximal_stable(ring, f, all_gens) -> bool:
    """No stable monic proper divisor strictly above (f) in the explicit list."""
    for g in all_gens:
        if g == f:
            continue
        if 0 < g.degree() < f.degree():
            if normal_form(f, [g]).is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# centrally generated ideals


_CENTRAL_FAMILIES = {"smith_char0", "smith_charp", "quantum_smith", "weyl_shift_charp"}


def is_centrally_generated(J: PhiStableIdeal, family: str, degree_slack: int = 2):
    """Check J = R*(J cap R^phi) and return the central generators.

    Supported for the families where this is a theorem; a failure there is an
    internal fault, not a mathematical possibility."""
    if family not in _CENTRAL_FAMILIES:
        raise UnsupportedFamily(f"no centrally-generated proof on file for {family!r}")
    ring = J.ring
    field = ring.field
    invariants = fixed_subring_generators(J.phis)
    if J.is_zero():
        return True, []
    max_deg = max(g.degree() for g in J.generators) + degree_slack

    # candidate products of invariant generators, bounded by total degree
    candidates = [ring.one()]
    frontier = [ring.one()]
    while frontier:
        nxt = []
        for c in frontier:
            for inv in invariants:
                prod = c * inv
                if prod.degree() <= max_deg and _freeze(prod) not in {_freeze(x) for x in candidates}:
                    candidates.append(prod)
                    nxt.append(prod)
        frontier = nxt

    # monomial coordinates of normal forms; central elements of J are the kernel
    coords = {}

    def coord_vector(r):
        vec = dict(r.terms)
        for exps in vec:
            coords.setdefault(exps, len(coords))
        return vec

    reduced = [coord_vector(normal_form(c, J.generators)) for c in candidates]
    width = len(coords)
    rows = []
    for vec in reduced:
        row = [field.zero()] * width
        for exps, c in vec.items():
            row[coords[exps]] = c
        rows.append(row)
    columns = list(zip(*rows)) if rows else []
    matrix = [list(col) for col in columns] or [[field.zero()] * len(candidates)]
    central = []
    for combo in kernel_basis(matrix, field):
        elt = ring.zero()
        for coeff, cand in zip(combo, candidates):
            if not coeff.is_zero():
                elt = elt + cand * coeff
        if not elt.is_zero():
            central.append(elt)
    ok = bool(central) and ideal_equal_gens(ring, central, J.generators)
    if not ok:
        raise InternalConsistencyError(
            f"family {family!r} must be centrally generated; found generators {central!r}")
    return True, central


# ---------------------------------------------------------------------------
# radicals (univariate only)


def radical_univariate(J: PhiStableIdeal) -> PhiStableIdeal:
    ring = J.ring
    name = _univariate_gen(ring)
    if J.is_zero():
        return J
    if len(J.generators) != 1:
        raise UnsupportedRing("univariate ideals have a single monic generator")
    f = J.generators[0]
    sqfree = _squarefree(ring, name, f)
    return phi_stable_ideal(ring, J.phis, [sqfree])


def _derivative(ring, name, f):
    i = ring.index(name)
    out = ring.zero()
    for exps, c in f.terms.items():
        e = exps[i]
        if e:
            new = list(exps)
            new[i] = e - 1
            out = out + ring.monomial(tuple(new), c * ring.field.from_int(e))
    return out


def _squarefree(ring, name, f):
    p = ring.field.characteristic()
    df = _derivative(ring, name, f)
    if df.is_zero():
        # f is a polynomial in t^p; over F_p its p-th root has the same coefficients
        if not p:
            return f
        root = ring.zero()
        i = ring.index(name)
        for exps, c in f.terms.items():
            assert exps[i] % p == 0
            new = list(exps)
            new[i] //= p
            root = root + ring.monomial(tuple(new), c)
        return _squarefree(ring, name, root)
    g = _poly_gcd(ring, f, df)
    rem, cof = reduce_with_certificate(f, [g])
    assert rem.is_zero()
    result = cof[0]
    if _derivative(ring, name, result).is_zero() and result.degree() > 0:
        return _squarefree(ring, name, result)
    _, lc = _leading(result)
    return result * lc.inv()


def _poly_gcd(ring, a, b):
    while not b.is_zero():
        a, b = b, reduce_with_certificate(a, [b])[0]
    if a.is_zero():
        return a
    _, lc = _leading(a)
    return a * lc.inv()
