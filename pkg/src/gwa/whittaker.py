"""Whittaker modules: the universal action, quotients R/Q, annihilators,
Whittaker vectors, simplicity verdicts, and endomorphism rings.

A module is realized either as a MatrixModel (finite dimension, one exact
matrix per algebra generator, basis vectors tagged with the ring elements
they represent) or symbolically as R/Q with degree-truncated enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import GwaElement, GwaPresentation, gwa_mul
from .errors import (
    InternalConsistencyError,
    InvalidParameters,
    NotAWhittakerPair,
    PresentationMismatch,
    TruncationTooSmall,
    UnsupportedRing,
)
from .field import FieldElement, format_scalar
from .ideals import PhiStableIdeal, _leading, normal_form, phi_stable_ideal
from .linalg import (
    RowSpace,
    identity,
    inverse,
    is_zero_matrix,
    kernel_basis,
    mat_eq,
    mat_mul,
    mat_pow,
    mat_sub,
    mat_vec,
    transpose,
    zeros,
)
from .ring import RingElement, format_ring_element


def check_type(pres: GwaPresentation, zeta) -> tuple:
    zeta = tuple(zeta)
    if len(zeta) != pres.n:
        raise InvalidParameters("need one zeta_i per index")
    for z in zeta:
        if not isinstance(z, FieldElement) or z.spec != pres.ring.field:
            raise InvalidParameters("zeta entries must be scalars of the coefficient field")
        if z.is_zero():
            raise InvalidParameters("Whittaker types have nonzero entries")
    return zeta


# ---------------------------------------------------------------------------
# the universal action on R (eqs. r'.r = r'r, X.r = zeta phi(r), Y.r = zeta^{-1} phi^{-1}(r) t)


def universal_act(a: GwaElement, r: RingElement, zeta) -> RingElement:
    pres = a.pres
    if r.ring != pres.ring:
        raise PresentationMismatch("the acted-on element lives in the wrong ring")
    zeta = check_type(pres, zeta)
    out = pres.ring.zero()
    for alpha, coeff in a.terms.items():
        value = r
        for i in range(pres.n - 1, -1, -1):
            k = alpha[i]
            if k >= 0:
                for _ in range(k):
                    value = pres.phis[i].apply(value) * zeta[i]
            else:
                zinv = zeta[i].inv()
                inv = pres.phis[i].inverse()
                for _ in range(-k):
                    value = inv.apply(value) * pres.ts[i] * zinv
        out = out + coeff * value
    return out


# ---------------------------------------------------------------------------
# realizations


class MatrixModel:
    """Finite-dimensional model: one matrix per generator, cyclic vector w.

    basis_reps[j] is a ring element r_j with basis vector v_j = r_j . w, so the
    coordinate map doubles as the isomorphism V ~ R/Q."""

    def __init__(self, pres, zeta, gen_mats, x_mats, y_mats, w, basis_reps, labels=None):
        self.pres = pres
        self.zeta = zeta
        self.gen_mats = dict(gen_mats)
        self.x_mats = list(x_mats)
        self.y_mats = list(y_mats)
        self.w = list(w)
        self.basis_reps = list(basis_reps)
        self.dim = len(w)
        self.labels = labels or [repr(r) for r in basis_reps]
        self.field = pres.ring.field
        self.gen_inv_mats = {}
        for name, l in zip(pres.ring.gens, pres.ring.laurent):
            if l:
                inv = inverse(self.gen_mats[name], self.field)
                if inv is None:
                    raise InvalidParameters(f"Laurent generator {name!r} acts non-invertibly")
                self.gen_inv_mats[name] = inv

    def matrix_of_ring(self, r: RingElement):
        out = zeros(self.field, self.dim, self.dim)
        for exps, c in r.terms.items():
            m = None
            for name, e in zip(self.pres.ring.gens, exps):
                if e == 0:
                    continue
                base = self.gen_mats[name] if e > 0 else self.gen_inv_mats[name]
                p = mat_pow(base, abs(e))
                m = p if m is None else mat_mul(m, p)
            if m is None:
                m = identity(self.field, self.dim)
            for i in range(self.dim):
                row = out[i]
                mrow = m[i]
                for j in range(self.dim):
                    if not mrow[j].is_zero():
                        row[j] = row[j] + c * mrow[j]
        return out

    def vector_of_ring(self, r: RingElement):
        return mat_vec(self.matrix_of_ring(r), self.w)

    def z_matrix(self, alpha):
        m = identity(self.field, self.dim)
        for i, e in enumerate(alpha):
            if e > 0:
                m = mat_mul(m, mat_pow(self.x_mats[i], e))
            elif e < 0:
                m = mat_mul(m, mat_pow(self.y_mats[i], -e))
        return m

    def act_matrix(self, a: GwaElement):
        out = zeros(self.field, self.dim, self.dim)
        for alpha, coeff in a.terms.items():
            m = mat_mul(self.matrix_of_ring(coeff), self.z_matrix(alpha))
            out = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(out, m)]
        return out

    def act_vector(self, a: GwaElement, v):
        return mat_vec(self.act_matrix(a), v)

    def action_generators(self):
        mats = list(self.x_mats) + list(self.y_mats) + list(self.gen_mats.values())
        mats += list(self.gen_inv_mats.values())
        return mats


class SymbolicRQ:
    """R/Q with the induced action, evaluated through normal forms."""

    def __init__(self, pres, zeta, Q: PhiStableIdeal):
        self.pres = pres
        self.zeta = zeta
        self.Q = Q

    def reduce(self, r: RingElement) -> RingElement:
        if self.Q.is_zero():
            return r
        return normal_form(r, self.Q.generators)

    def act_residue(self, a: GwaElement, r: RingElement) -> RingElement:
        return self.reduce(universal_act(a, r, self.zeta))


@dataclass
class WhittakerModule:
    pres: GwaPresentation
    zeta: tuple
    Q: PhiStableIdeal
    realization: object   # MatrixModel | SymbolicRQ

    @property
    def is_matrix(self) -> bool:
        return isinstance(self.realization, MatrixModel)

    @property
    def dim(self):
        return self.realization.dim if self.is_matrix else None


# ---------------------------------------------------------------------------
# construction from an ideal


def _standard_monomials(ring, basis):
    """Exponent tuples of the monomial basis of R/(basis); None when infinite."""
    if not basis:
        return None
    leads = [_leading(g)[0] for g in basis]
    nvars = len(ring.gens)
    caps = []
    for v in range(nvars):
        pure = [e[v] for e in leads if all(x == 0 for i, x in enumerate(e) if i != v)]
        if not pure:
            return None
        caps.append(min(pure))
    monos = []
    for exps in itertools.product(*(range(c) for c in caps)):
        if not any(all(x >= y for x, y in zip(exps, lead)) for lead in leads):
            monos.append(exps)
    return monos


def build_module(pres: GwaPresentation, Q, zeta) -> WhittakerModule:
    """The Whittaker module V_Q = R/Q; matrix form when it is finite-dimensional."""
    zeta = check_type(pres, zeta)
    if not isinstance(Q, PhiStableIdeal):
        Q = phi_stable_ideal(pres.ring, pres.phis, list(Q))
    if Q.is_unit():
        raise NotAWhittakerPair("Q = (1) gives the zero module, which has no cyclic vector")
    ring = pres.ring
    monos = _standard_monomials(ring, Q.generators)
    if monos is None:
        return WhittakerModule(pres, zeta, Q, SymbolicRQ(pres, zeta, Q))

    index = {m: j for j, m in enumerate(monos)}
    dim = len(monos)
    field = ring.field
    basis_reps = [ring.monomial(m, field.one()) for m in monos]

    def vector_of_poly(r: RingElement):
        nf = normal_form(r, Q.generators)
        vec = [field.zero()] * dim
        for exps, c in nf.terms.items():
            j = index.get(exps)
            if j is None:
                raise UnsupportedRing("normal form escaped the standard monomials")
            vec[j] = c
        return vec

    def matrix_from(fn):
        cols = [fn(rep) for rep in basis_reps]
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]

    # generator matrices only need polynomial reductions; once the Laurent
    # generators have (invertible) matrices, arbitrary elements reduce through them
    gen_mats = {}
    for name in ring.gens:
        g = ring.gen(name)
        gen_mats[name] = matrix_from(lambda rep, g=g: vector_of_poly(g * rep))
    gen_inv = {}
    for name, l in zip(ring.gens, ring.laurent):
        if l:
            inv_mat = inverse(gen_mats[name], field)
            if inv_mat is None:
                raise NotAWhittakerPair(f"Laurent generator {name!r} is a zero divisor mod Q")
            gen_inv[name] = inv_mat

    def vector_of(r: RingElement):
        shifted = r
        shifts = {}
        for name, l in zip(ring.gens, ring.laurent):
            if l:
                m = -min(0, shifted.min_degree_in(name))
                if m:
                    shifted = shifted * ring.gen(name, m)
                    shifts[name] = m
        vec = vector_of_poly(shifted)
        for name, m in shifts.items():
            vec = mat_vec(mat_pow(gen_inv[name], m), vec)
        return vec

    x_mats, y_mats = [], []
    for i in range(pres.n):
        phi = pres.phis[i]
        inv = phi.inverse()
        zi = zeta[i]
        ziv = zi.inv()
        t = pres.ts[i]
        x_mats.append(matrix_from(lambda rep, phi=phi, zi=zi: vector_of(phi.apply(rep) * zi)))
        y_mats.append(matrix_from(lambda rep, inv=inv, ziv=ziv, t=t: vector_of(inv.apply(rep) * t * ziv)))

    w = vector_of(ring.one())
    if all(x.is_zero() for x in w):
        raise NotAWhittakerPair("the residue of 1 vanishes")
    model = MatrixModel(pres, zeta, gen_mats, x_mats, y_mats, w, basis_reps)
    failures = verify_relations(model)
    assert not failures, f"constructed matrices violate relations: {failures}"
    return WhittakerModule(pres, zeta, Q, model)


def universal_module(pres: GwaPresentation, zeta) -> WhittakerModule:
    zeta = check_type(pres, zeta)
    Q = PhiStableIdeal(pres.ring, pres.phis, [])
    return WhittakerModule(pres, zeta, Q, SymbolicRQ(pres, zeta, Q))


def verify_relations(model: MatrixModel) -> list:
    """All GWA defining relations as exact matrix identities; returns failures."""
    pres = model.pres
    failures = []
    for i in range(pres.n):
        X, Y = model.x_mats[i], model.y_mats[i]
        if not mat_eq(mat_mul(Y, X), model.matrix_of_ring(pres.ts[i])):
            failures.append(f"Y_{i} X_{i} != t_{i}")
        if not mat_eq(mat_mul(X, Y), model.matrix_of_ring(pres.phis[i].apply(pres.ts[i]))):
            failures.append(f"X_{i} Y_{i} != phi_{i}(t_{i})")
        for name in pres.ring.gens:
            g = pres.ring.gen(name)
            Mg = model.gen_mats[name]
            if not mat_eq(mat_mul(X, Mg), mat_mul(model.matrix_of_ring(pres.phis[i].apply(g)), X)):
                failures.append(f"X_{i} {name} != phi_{i}({name}) X_{i}")
            if not mat_eq(mat_mul(Y, Mg), mat_mul(model.matrix_of_ring(pres.phis[i].inverse().apply(g)), Y)):
                failures.append(f"Y_{i} {name} != phi_{i}^-1({name}) Y_{i}")
        for j in range(i + 1, pres.n):
            for A, an in ((model.x_mats[i], f"X_{i}"), (model.y_mats[i], f"Y_{i}")):
                for B, bn in ((model.x_mats[j], f"X_{j}"), (model.y_mats[j], f"Y_{j}")):
                    if not mat_eq(mat_mul(A, B), mat_mul(B, A)):
                        failures.append(f"[{an}, {bn}] != 0")
    for na, nb in itertools.combinations(pres.ring.gens, 2):
        if not mat_eq(mat_mul(model.gen_mats[na], model.gen_mats[nb]),
                      mat_mul(model.gen_mats[nb], model.gen_mats[na])):
            failures.append(f"[{na}, {nb}] != 0")
    # the cyclic vector is a Whittaker vector of the right type
    for i in range(pres.n):
        xw = mat_vec(model.x_mats[i], model.w)
        if xw != [model.zeta[i] * c for c in model.w]:
            failures.append(f"X_{i} w != zeta_{i} w")
    return failures


# ---------------------------------------------------------------------------
# ring monomial / algebra monomial enumeration


def ring_monomials(ring, degree: int, laurent_window: int | None = None):
    """Exponent tuples with sum of |e| <= degree; Laurent slots range negative."""
    window = degree if laurent_window is None else laurent_window
    ranges = []
    for l in ring.laurent:
        ranges.append(range(-window, window + 1) if l else range(0, degree + 1))
    out = []
    for exps in itertools.product(*ranges):
        if sum(abs(e) for e in exps) <= degree:
            out.append(exps)
    return out


def algebra_basis(pres, degree: int):
    """Normal-form monomials Z^alpha * m with |alpha| + deg(m) <= degree."""
    out = []
    for alpha in itertools.product(*(range(-degree, degree + 1) for _ in range(pres.n))):
        za = sum(abs(e) for e in alpha)
        if za > degree:
            continue
        for exps in ring_monomials(pres.ring, degree - za):
            out.append((alpha, exps))
    return out


def _element_vector(a: GwaElement, index, field):
    vec = [field.zero()] * len(index)
    for alpha, coeff in a.terms.items():
        for exps, c in coeff.terms.items():
            j = index.get((alpha, exps))
            if j is None:
                return None
            vec[j] = c
    return vec


# ---------------------------------------------------------------------------
# annihilators


def recover_annihilator(V: WhittakerModule, degree_margin: int = 1) -> PhiStableIdeal:
    """Ann_R(w) computed from the realization alone."""
    if not V.is_matrix:
        return V.Q
    model = V.realization
    ring = V.pres.ring
    field = ring.field
    bound = model.dim + degree_margin
    monos = ring_monomials(ring, bound, laurent_window=bound)
    columns = [model.vector_of_ring(ring.monomial(m, field.one())) for m in monos]
    matrix = [[columns[j][i] for j in range(len(monos))] for i in range(model.dim)]
    kernel = kernel_basis(matrix, field)
    gens = []
    for combo in kernel:
        elt = ring.zero()
        for c, m in zip(combo, monos):
            if not c.is_zero():
                elt = elt + ring.monomial(m, c)
        if not elt.is_zero():
            gens.append(elt)
    return phi_stable_ideal(ring, V.pres.phis, gens)


def ann_w_member(V: WhittakerModule, a: GwaElement) -> bool:
    if V.is_matrix:
        return all(x.is_zero() for x in V.realization.act_vector(a, V.realization.w))
    return V.realization.act_residue(a, V.pres.ring.one()).is_zero()


def ann_w_generators(V: WhittakerModule) -> list:
    """Generators of Ann_A(w): Q together with the elements X_i - zeta_i."""
    pres = V.pres
    out = [pres.embed_ring(g) for g in V.Q.generators]
    for i in range(pres.n):
        out.append(pres.X(i) - pres.scalar(V.zeta[i]))
    return out


@dataclass
class TruncatedIdealCheck:
    ok: bool
    degree: int
    kernel_dim: int
    span_dim: int
    witness: GwaElement | None = None


def _truncated_left_span(pres, gens, index, degree, slack):
    """Row space of the degree-<=degree part of sum_j A g_j, inside the index.

    Products are collected in the larger space of degree <= degree + slack and
    the degree-<=degree part is read off as an exact subspace intersection:
    with the high-degree coordinates ordered first, the reduced rows whose
    pivots sit in the low block have no high-degree support."""
    field = pres.ring.field
    max_gen = max((g.degree() for g in gens), default=0)
    ambient_degree = degree + slack + max_gen
    ambient = algebra_basis(pres, ambient_degree)
    low = [key for key in ambient if key in index]
    high = [key for key in ambient if key not in index]
    columns = {key: pos for pos, key in enumerate(high)}
    offset = len(high)
    for key in low:
        columns[key] = offset + index[key]
    width = len(ambient)

    space = RowSpace(field, width)
    for alpha, exps in algebra_basis(pres, degree + slack):
        b = pres.monomial(alpha, pres.ring.monomial(exps, field.one()))
        for g in gens:
            prod = gwa_mul(b, g)
            if prod.is_zero():
                continue
            vec = _element_vector(prod, columns, field)
            if vec is not None:
                space.add(vec)

    out = RowSpace(field, len(index))
    for row, pivot in zip(space.rows, space.pivots):
        if pivot >= offset:
            out.add(row[offset:])
    return out


def thm43_truncated_check(V: WhittakerModule, degree: int = 4, slack: int = 2) -> TruncatedIdealCheck:
    """Kernel of a -> a.w on normal-form degree <= D equals the truncated span
    of A Q + sum_i A (X_i - zeta_i)."""
    if not V.is_matrix:
        raise UnsupportedRing("the truncated annihilator check needs a matrix model")
    pres = V.pres
    model = V.realization
    field = pres.ring.field
    basis = algebra_basis(pres, degree)
    index = {key: j for j, key in enumerate(basis)}

    columns = []
    for alpha, exps in basis:
        a = pres.monomial(alpha, pres.ring.monomial(exps, field.one()))
        columns.append(model.act_vector(a, model.w))
    matrix = [[columns[j][i] for j in range(len(basis))] for i in range(model.dim)]
    kernel = kernel_basis(matrix, field)

    span = _truncated_left_span(pres, ann_w_generators(V), index, degree, slack)
    witness = None
    ok = True
    for vec in kernel:
        if not span.contains(vec):
            ok = False
            witness = _vector_element(pres, basis, vec)
            break
    # the reverse inclusion: spanned elements annihilate w
    for row in span.rows:
        elt = _vector_element(pres, basis, row)
        if not ann_w_member(V, elt):
            ok = False
            witness = elt
            break
    return TruncatedIdealCheck(ok, degree, len(kernel), span.dim, witness)


def _vector_element(pres, basis, vec) -> GwaElement:
    out = pres.zero()
    for c, (alpha, exps) in zip(vec, basis):
        if not c.is_zero():
            out = out + pres.monomial(alpha, pres.ring.monomial(exps, c))
    return out


def ann_V_check(V: WhittakerModule, candidate_gens, degree: int = 4,
                slack: int = 2, sample_degree: int | None = None) -> TruncatedIdealCheck:
    """Verify Ann_A(V) = sum_j A g_j at truncation `degree`.

    Every candidate generator must annihilate the module, and every element of
    normal-form degree <= degree that annihilates it must lie in the truncated
    left span of the candidates."""
    pres = V.pres
    field = pres.ring.field
    basis = algebra_basis(pres, degree)
    index = {key: j for j, key in enumerate(basis)}

    if V.is_matrix:
        model = V.realization
        for g in candidate_gens:
            if not is_zero_matrix(model.act_matrix(g)):
                return TruncatedIdealCheck(False, degree, -1, -1, g)
        rows = []
        for alpha, exps in basis:
            a = pres.monomial(alpha, pres.ring.monomial(exps, field.one()))
            m = model.act_matrix(a)
            rows.append([x for row in m for x in row])
        matrix = [[rows[j][i] for j in range(len(basis))] for i in range(model.dim ** 2)]
        kernel = kernel_basis(matrix, field)
    else:
        sample_degree = degree + 3 if sample_degree is None else sample_degree
        sym = V.realization
        std = ring_monomials(pres.ring, sample_degree)
        residues = [pres.ring.monomial(m, field.one()) for m in std]
        residues = [sym.reduce(r) for r in residues]
        seen = set()
        reps = []
        for r in residues:
            key = frozenset(r.terms.items())
            if key and key not in seen:
                seen.add(key)
                reps.append(r)
        for g in candidate_gens:
            for r in reps:
                if not sym.act_residue(g, r).is_zero():
                    return TruncatedIdealCheck(False, degree, -1, -1, g)
        coords = {}
        images = []
        for alpha, exps in basis:
            a = pres.monomial(alpha, pres.ring.monomial(exps, field.one()))
            img = []
            for slot, r in enumerate(reps):
                value = sym.act_residue(a, r)
                for e in value.terms:
                    coords.setdefault((slot, e), len(coords))
                img.append(value)
            images.append(img)
        width = len(coords)
        matrix = [[field.zero()] * len(basis) for _ in range(width)]
        for j, img in enumerate(images):
            for slot, value in enumerate(img):
                for e, c in value.terms.items():
                    matrix[coords[(slot, e)]][j] = c
        kernel = kernel_basis(matrix, field) if width else \
            [[field.one() if k == j else field.zero() for k in range(len(basis))]
             for j in range(len(basis))]

    span = _truncated_left_span(pres, candidate_gens, index, degree, slack)
    for vec in kernel:
        if not span.contains(vec):
            if not V.is_matrix:
                # the symbolic kernel only sampled finitely many residues, so a
                # mismatch here cannot be blamed on the candidates
                raise TruncationTooSmall(
                    f"an apparent annihilator of degree <= {degree} is outside the "
                    f"truncated span; enlarge the truncation or sample degree")
            return TruncatedIdealCheck(False, degree, len(kernel), span.dim,
                                       _vector_element(pres, basis, vec))
    return TruncatedIdealCheck(True, degree, len(kernel), span.dim)


# ---------------------------------------------------------------------------
# Whittaker vectors


def whittaker_vectors(V: WhittakerModule, eta) -> list:
    """Basis of the simultaneous eigenspace {v : X_i v = eta_i v}, computed
    both directly and through the induced phi-action on R/Q; the two routes
    must agree."""
    if not V.is_matrix:
        raise UnsupportedRing("use whittaker_vectors_symbolic for symbolic modules")
    model = V.realization
    pres = V.pres
    field = pres.ring.field
    eta = tuple(eta)
    if len(eta) != pres.n:
        raise InvalidParameters("need one eta_i per index")

    stacked = []
    for i in range(pres.n):
        m = mat_sub(model.x_mats[i], _scaled_identity(field, model.dim, eta[i]))
        stacked.extend(m)
    direct = kernel_basis(stacked, field) if stacked else []

    # Second route: r w is a Whittaker vector of type eta iff r + Q is a
    # phi_i-eigenvector with eigenvalue zeta_i^{-1} eta_i.  The matrix of the
    # induced phi_i in the basis {rep_j + Q} is U^{-1} [phi_i(rep_j) . w],
    # where U = [rep_j . w] identifies R/Q with the module.
    U = transpose([model.vector_of_ring(rep) for rep in model.basis_reps])
    U_inv = inverse(U, field)
    if U_inv is None:
        raise InternalConsistencyError("basis representatives do not span R/Q")
    stacked2 = []
    for i in range(pres.n):
        phi = pres.phis[i]
        images = transpose([model.vector_of_ring(phi.apply(rep)) for rep in model.basis_reps])
        phibar = mat_mul(U_inv, images)
        lam = V.zeta[i].inv() * eta[i]
        stacked2.extend(mat_sub(phibar, _scaled_identity(field, model.dim, lam)))
    induced = [mat_vec(U, x) for x in kernel_basis(stacked2, field)] if stacked2 else []

    a = RowSpace(field, model.dim)
    for v in direct:
        a.add(v)
    b = RowSpace(field, model.dim)
    for v in induced:
        b.add(v)
    if not a.equals(b):
        raise InternalConsistencyError("the two Whittaker-vector routes disagree")
    return direct


def whittaker_vectors_symbolic(V: WhittakerModule, eta, degree: int) -> list:
    """Ring elements r of degree <= degree with r w in Wh_eta, via the
    eigenvalue condition phi_i(r) = zeta_i^{-1} eta_i r mod Q."""
    pres = V.pres
    field = pres.ring.field
    sym = V.realization
    monos = ring_monomials(pres.ring, degree)
    coords = {}
    rows_per_i = []
    for i in range(pres.n):
        lam = V.zeta[i].inv() * tuple(eta)[i]
        images = []
        for m in monos:
            r = pres.ring.monomial(m, field.one())
            value = sym.reduce(pres.phis[i].apply(r) - r * lam)
            for e in value.terms:
                coords.setdefault(e, len(coords))
            images.append(value)
        rows_per_i.append(images)
    width = len(coords)
    matrix = [[field.zero()] * len(monos) for _ in range(width * pres.n or 1)]
    for i, images in enumerate(rows_per_i):
        for j, value in enumerate(images):
            for e, c in value.terms.items():
                matrix[i * width + coords[e]][j] = c
    out = []
    for combo in kernel_basis(matrix, field):
        elt = pres.ring.zero()
        for c, m in zip(combo, monos):
            if not c.is_zero():
                elt = elt + pres.ring.monomial(m, c)
        if not elt.is_zero():
            out.append(elt)
    return out


def _scaled_identity(field, n, c):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = c
    return m


# ---------------------------------------------------------------------------
# simplicity


@dataclass
class SimplicityVerdict:
    kind: str                      # "simple" | "not_simple" | "inconclusive"
    certificate: str | None = None
    submodule: list | None = None  # basis vectors of a proper invariant subspace

    def __bool__(self):
        return self.kind == "simple"


def is_simple(V: WhittakerModule, seed: int = 0, random_trials: int = 20) -> SimplicityVerdict:
    """Burnside certificate first; otherwise search for invariant subspaces."""
    if not V.is_matrix:
        return SimplicityVerdict("inconclusive", "symbolic realization")
    model = V.realization
    field = model.field
    d = model.dim
    if d == 0:
        raise NotAWhittakerPair("the zero module is not a Whittaker module")

    gens = model.action_generators()
    algebra = RowSpace(field, d * d)
    frontier = [identity(field, d)]
    algebra.add([x for row in frontier[0] for x in row])
    seen = [identity(field, d)]
    while frontier and algebra.dim < d * d:
        new = []
        for m in frontier:
            for g in gens:
                prod = mat_mul(m, g)
                flat = [x for row in prod for x in row]
                if algebra.add(flat):
                    new.append(prod)
                    seen.append(prod)
        frontier = new
    if algebra.dim == d * d:
        return SimplicityVerdict("simple", "burnside")

    candidates = []
    for g in gens:
        diag = {g[i][i] for i in range(d)}
        for mu in diag:
            shifted = mat_sub(g, _scaled_identity(field, d, mu))
            candidates.extend(kernel_basis(shifted, field))
    import random as _random

    rng = _random.Random(seed)
    pool = field.sample_pool()
    for _ in range(random_trials):
        candidates.append([rng.choice(pool) for _ in range(d)])

    for v in candidates:
        if all(x.is_zero() for x in v):
            continue
        space = RowSpace(field, d)
        space.add(v)
        frontier = [v]
        while frontier:
            new = []
            for u in frontier:
                for g in gens:
                    img = mat_vec(g, u)
                    if space.add(img):
                        new.append(img)
            frontier = new
        if 0 < space.dim < d:
            return SimplicityVerdict("not_simple", None, [list(r) for r in space.rows])
    return SimplicityVerdict("inconclusive", "no Burnside certificate; submodule search exhausted")


# ---------------------------------------------------------------------------
# endomorphisms


@dataclass
class EndoReport:
    dimension: int
    commutant: list
    s_matches: bool


def endo_ring(V: WhittakerModule, degree: int | None = None) -> EndoReport:
    """Commutant of the action compared against pi(S) for
    S = {s in R : s - phi_i(s) in Q for all i}."""
    if not V.is_matrix:
        raise UnsupportedRing("endomorphism computation needs a matrix model")
    model = V.realization
    pres = V.pres
    field = model.field
    d = model.dim

    gens = model.action_generators()
    rows = []
    for g in gens:
        # linear map M -> g M - M g, flattened
        for a in range(d):
            for b in range(d):
                row = [field.zero()] * (d * d)
                for k in range(d):
                    row[k * d + b] = row[k * d + b] + g[a][k]
                for k in range(d):
                    row[a * d + k] = row[a * d + k] - g[k][b]
                rows.append(row)
    commutant_flat = kernel_basis(rows, field)
    commutant = [[vec[i * d:(i + 1) * d] for i in range(d)] for vec in commutant_flat]

    if degree is None:
        degree = d + max((g.degree() for g in V.Q.generators), default=1)
    monos = ring_monomials(pres.ring, degree)
    s_space = RowSpace(field, d * d)
    conditions = []
    for m in monos:
        r = pres.ring.monomial(m, field.one())
        vecs = []
        for i in range(pres.n):
            diff = r - pres.phis[i].apply(r)
            vecs.append(model.vector_of_ring(diff))
        conditions.append((r, vecs))
    stacked = []
    for j, (_, vecs) in enumerate(conditions):
        col = []
        for v in vecs:
            col.extend(v)
        stacked.append(col)
    matrix = [[stacked[j][i] for j in range(len(conditions))] for i in range(len(stacked[0]))] \
        if stacked and stacked[0] else [[field.zero()] * len(conditions)]
    for combo in kernel_basis(matrix, field):
        s = pres.ring.zero()
        for c, (r, _) in zip(combo, conditions):
            if not c.is_zero():
                s = s + r * c
        if not s.is_zero():
            s_space.add([x for row in model.matrix_of_ring(s) for x in row])

    comm_space = RowSpace(field, d * d)
    for vec in commutant_flat:
        comm_space.add(vec)
    return EndoReport(len(commutant_flat), commutant, comm_space.equals(s_space))


# ---------------------------------------------------------------------------
# serialization


def matrix_to_json(m):
    return [[format_scalar(x) for x in row] for row in m]


def module_to_json(V: WhittakerModule) -> dict:
    out = {
        "zeta": [format_scalar(z) for z in V.zeta],
        "annihilator_generators": [format_ring_element(g) for g in V.Q.generators],
    }
    if V.is_matrix:
        model = V.realization
        out["dimension"] = model.dim
        out["basis"] = model.labels
        out["w"] = [format_scalar(x) for x in model.w]
        mats = {}
        for i in range(V.pres.n):
            mats[V.pres.x_names[i]] = matrix_to_json(model.x_mats[i])
            mats[V.pres.y_names[i]] = matrix_to_json(model.y_mats[i])
        for name, m in model.gen_mats.items():
            mats[name] = matrix_to_json(m)
        out["matrices"] = mats
    else:
        out["realization"] = "R/Q"
    return out
