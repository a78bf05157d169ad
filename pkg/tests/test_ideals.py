import pytest

from gwa.errors import NotPhiStable, UnsupportedFamily
from gwa.field import cyclotomic_field, prime_field, rationals
from gwa.ideals import (
    classify_univariate,
    groebner_basis,
    ideal_equal_gens,
    ideal_membership_gens,
    is_centrally_generated,
    is_phi_stable,
    membership,
    normal_form,
    phi_stable_closure,
    phi_stable_ideal,
    radical_univariate,
    reduce_with_certificate,
    _spoly,
)
from gwa.ring import Automorphism, BaseRing

Q = rationals()


def univariate(field=None):
    field = field or Q
    return BaseRing(field, ["t"])


def test_membership_univariate():
    R = univariate()
    t = R.gen("t")
    res = ideal_membership_gens(t ** 3 + t ** 2, R, [t ** 2])
    assert res.member
    total = R.zero()
    for c, g in res.certificate:
        total = total + c * g
    assert total == t ** 3 + t ** 2


def test_membership_negative_with_witness():
    R = univariate()
    t = R.gen("t")
    res = ideal_membership_gens(t + R.one(), R, [t ** 2])
    assert not res.member
    assert res.normal_form_witness == t + R.one()


def test_membership_bivariate_groebner():
    # the Smith char-p shape: J = (c - 1, h^3 - h - 6) over F_3 means h^3 - h in J + const
    F3 = prime_field(3)
    R = BaseRing(F3, ["h", "c"])
    h, c = R.gen("h"), R.gen("c")
    J_gens = [c - R.one(), h ** 3 - h]
    res = ideal_membership_gens(c * h - h, R, J_gens)
    assert res.member
    total = R.zero()
    for co, g in res.certificate:
        total = total + co * g
    assert total == c * h - h


def test_membership_laurent_unit_multiple():
    F = cyclotomic_field(6)
    R = BaseRing(F, ["c", "K"], [False, True])
    c, K = R.gen("c"), R.gen("K")
    theta = R.scalar(F.from_int(2))
    res = ideal_membership_gens(R.gen("K", -2) * (c - theta), R, [c - theta])
    assert res.member
    total = R.zero()
    for co, g in res.certificate:
        total = total + co * g
    assert total == R.gen("K", -2) * (c - theta)


def test_groebner_reduced_and_spolys_reduce():
    F3 = prime_field(3)
    R = BaseRing(F3, ["h", "c"])
    h, c = R.gen("h"), R.gen("c")
    gens = [c * h + h, h ** 2 - c]
    basis, tracks = groebner_basis(gens)
    # every S-polynomial of the output reduces to zero
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s, _, _ = _spoly(basis[i], basis[j])
            assert normal_form(s, basis).is_zero()
    # tracked representation re-expands
    for b, track in zip(basis, tracks):
        total = R.zero()
        for coeff, g in zip(track, gens):
            total = total + coeff * g
        assert total == b


def test_is_phi_stable_examples():
    R = univariate()
    t = R.gen("t")
    doubling = Automorphism(R, {"t": t * Q.from_int(2)})
    assert is_phi_stable([doubling], [t ** 3])
    shift = Automorphism(R, {"t": t - R.one()})
    assert not is_phi_stable([shift], [t])

    # an element fixed by phi generates a stable ideal
    R2 = BaseRing(Q, ["h", "c"])
    phi = Automorphism(R2, {"h": R2.gen("h") - R2.one(), "c": R2.gen("c")})
    assert is_phi_stable([phi], [R2.gen("c") - R2.from_int(3)])


def test_phi_stable_ideal_rejects_unstable():
    R = univariate()
    t = R.gen("t")
    shift = Automorphism(R, {"t": t - R.one()})
    with pytest.raises(NotPhiStable):
        phi_stable_ideal(R, [shift], [t])


def test_closure_reaches_unit_ideal():
    R = univariate()
    t = R.gen("t")
    shift = Automorphism(R, {"t": t - R.one()})
    J = phi_stable_closure([t], [shift])
    assert J.is_unit()


def test_closure_already_stable():
    R = univariate()
    t = R.gen("t")
    doubling = Automorphism(R, {"t": t * Q.from_int(2)})
    J = phi_stable_closure([t ** 2], [doubling])
    assert ideal_equal_gens(R, J.generators, [t ** 2])


def test_closure_empty_is_zero_ideal():
    R = univariate()
    doubling = Automorphism(R, {"t": R.gen("t") * Q.from_int(2)})
    assert phi_stable_closure([], [doubling]).is_zero()


def test_classify_powers_regime():
    R = univariate()
    t = R.gen("t")
    doubling = Automorphism(R, {"t": t * Q.from_int(2)})
    report = classify_univariate(doubling, 3)
    assert report.regime == "powers"
    assert report.monic_generators == [t, t ** 2, t ** 3]
    assert report.maximal_proper == [t]


def test_classify_root_of_unity_f5():
    F5 = prime_field(5)
    R = univariate(F5)
    t = R.gen("t")
    doubling = Automorphism(R, {"t": t * F5.from_int(2)})  # order 4
    report = classify_univariate(doubling, 4)
    assert report.regime == "root_of_unity" and report.ell == 4
    frozen = {frozenset(f.terms.items()) for f in report.monic_generators}
    # brute force: all monic f with deg <= 4 whose ideal is phi-stable
    expected = set()
    from gwa.ideals import _all_monic

    for d in range(1, 5):
        for f in _all_monic(R, "t", d):
            if is_phi_stable([doubling], [f]):
                expected.add(frozenset(f.terms.items()))
    assert frozen == expected
    # Cor: maximal proper stable ideals are (t) and (t^4 - xi)
    maxima = {frozenset(f.terms.items()) for f in report.maximal_proper}
    predicted = {frozenset((t ** 4 - R.scalar(F5.from_int(x))).terms.items()) for x in range(1, 5)}
    predicted.add(frozenset(t.terms.items()))
    assert maxima == predicted


def test_classify_alpha_one_regimes():
    R = univariate()
    t = R.gen("t")
    identity = Automorphism(R, {"t": t})
    assert classify_univariate(identity, 3).regime == "all_ideals"
    shift = Automorphism(R, {"t": t + R.one()})
    rep = classify_univariate(shift, 3)
    assert rep.regime == "only_trivial" and rep.monic_generators == []

    F3 = prime_field(3)
    R3 = univariate(F3)
    shift3 = Automorphism(R3, {"t": R3.gen("t") + R3.one()})
    rep3 = classify_univariate(shift3, 3)
    assert rep3.regime == "centrally_generated"
    z = R3.gen("t") ** 3 - R3.gen("t")
    assert rep3.tilde_t == z
    assert any(f == z for f in rep3.monic_generators)
    for f in rep3.monic_generators:
        assert is_phi_stable([shift3], [f])


def test_classify_every_listed_ideal_is_stable():
    F5 = prime_field(5)
    R = univariate(F5)
    doubling = Automorphism(R, {"t": R.gen("t") * F5.from_int(2)})
    report = classify_univariate(doubling, 4)
    for f in report.monic_generators:
        assert is_phi_stable([doubling], [f])


def test_centrally_generated_weyl_shift():
    F5 = prime_field(5)
    R = univariate(F5)
    t = R.gen("t")
    beta = F5.from_int(1)
    shift = Automorphism(R, {"t": t + R.scalar(beta)})
    mu = F5.from_int(2)
    gen = t ** 5 - t * beta ** 4 - R.scalar(mu)
    J = phi_stable_ideal(R, [shift], [gen])
    ok, central = is_centrally_generated(J, "weyl_shift_charp")
    assert ok
    assert ideal_equal_gens(R, central, [gen])


def test_centrally_generated_smith_char0():
    R = BaseRing(Q, ["h", "c"])
    phi = Automorphism(R, {"h": R.gen("h") - R.one(), "c": R.gen("c")})
    theta = Q.from_int(3)
    J = phi_stable_ideal(R, [phi], [R.gen("c") - R.scalar(theta)])
    ok, central = is_centrally_generated(J, "smith_char0")
    assert ok
    assert ideal_equal_gens(R, central, [R.gen("c") - R.scalar(theta)])


def test_centrally_generated_quantum_smith():
    F = cyclotomic_field(6)
    q = F.generator()
    R = BaseRing(F, ["c", "K"], [False, True])
    phi = Automorphism(R, {"c": R.gen("c"), "K": R.gen("K") * (q ** -2)})
    lam = F.from_int(2)
    gens = [
        R.gen("c") - R.one(),
        R.gen("K", 3) - R.scalar(lam ** 3),
        R.gen("K", -3) - R.scalar(lam ** -3),
    ]
    J = phi_stable_ideal(R, [phi], gens)
    ok, central = is_centrally_generated(J, "quantum_smith")
    assert ok


def test_centrally_generated_unsupported_family():
    R = univariate()
    doubling = Automorphism(R, {"t": R.gen("t") * Q.from_int(2)})
    J = phi_stable_ideal(R, [doubling], [R.gen("t")])
    with pytest.raises(UnsupportedFamily):
        is_centrally_generated(J, "nonsense")


def test_radical_univariate():
    R = univariate()
    t = R.gen("t")
    doubling = Automorphism(R, {"t": t * Q.from_int(2)})
    J = phi_stable_ideal(R, [doubling], [t ** 3])
    assert radical_univariate(J).generators == [t]

    F3 = prime_field(3)
    R3 = univariate(F3)
    s = R3.gen("t")
    identity = Automorphism(R3, {"t": s})
    # (t^3 + t)^3 = t^9 + t^3 in char 3; its radical is t^3 + t = t(t^2+1), squarefree
    J3 = phi_stable_ideal(R3, [identity], [s ** 9 + s ** 3])
    assert radical_univariate(J3).generators == [s ** 3 + s]


def test_stability_certificate_reexpands():
    F5 = prime_field(5)
    R = univariate(F5)
    t = R.gen("t")
    doubling = Automorphism(R, {"t": t * F5.from_int(2)})
    J = phi_stable_ideal(R, [doubling], [t ** 2])
    for (i, j), cert in J.stability_certificate.items():
        target = J.generators[j] if j >= 0 else J.generators[-j - 1]
        phi = J.phis[i] if j >= 0 else J.phis[i].inverse()
        total = R.zero()
        for c, g in cert:
            total = total + c * g
        assert total == phi.apply(target)


def test_membership_checks_ring():
    R = univariate()
    other = BaseRing(Q, ["s"])
    doubling = Automorphism(R, {"t": R.gen("t") * Q.from_int(2)})
    J = phi_stable_ideal(R, [doubling], [R.gen("t")])
    from gwa.errors import UnsupportedRing

    with pytest.raises(UnsupportedRing):
        membership(other.gen("s"), J)
