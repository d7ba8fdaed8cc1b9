import walpha as w


def test_rational_arithmetic():
    a = w.Rational("1/2")
    b = w.Rational("1/3")
    assert str(a + b) == "5/6"
    assert str(a * b) == "1/6"
    assert a - a == w.Rational(0)


def test_vectors_round_trip():
    v = w.parse_dual("prefix=[1/3,-1/4];geom(1/24,1/2)")
    assert w.parse_dual(str(v)) == v
    x = w.parse_primal("prefix=[1,2];limit=1/2")
    assert w.parse_primal(str(x)) == x
    assert str(v.l1_norm()) == "2/3"


def test_space_and_sampling():
    space = w.WAlphaSpace(w.parse_dual("tail=geom(1/2,1/2)"))
    assert str(space.rstar()) == "1"
    for x in w.sample_members(space, 10, seed=3):
        assert space.contains(x)
        assert x.limit() == w.pairing(space.alpha, x)


def test_classify_and_distance():
    rep = w.classify(w.WAlphaSpace(w.parse_dual("prefix=[1/2,1/2]")))
    assert rep.in_A and not rep.in_M and not rep.in_C
    assert str(w.bm_distance_c(w.Rational("1/2"))) == "5/3"
    verdict = w.fpp_verdict(
        w.WAlphaSpace(w.parse_dual("tail=geom(1/2,1/2)")), w.Rational("1/2")
    )
    assert not verdict.stable
    assert str(verdict.almost_isometric_r) == "3/5"


def test_matrix_deltas_agree():
    m = w.RepresentingMatrix(w.parse_dual("tail=geom(1/2,1/2)"))
    for k in range(1, 4):
        for n in range(1, 6):
            assert m.delta_direct(k, n) == m.delta_recursive(k, n)
    assert m.row_abs_sum(6) <= w.Rational(1)


def test_embedding_and_projection():
    e = w.embed_general(w.parse_dual("prefix=[1/4]"), w.parse_dual("tail=geom(1/2,1/2)"))
    samples = w.sample_members(e.source, 15, seed=5)
    assert w.verify_isometry(e, samples).all_passed()

    p = w.thm71_projection(w.parse_dual("tail=geom(1/2,1/2)"), w.Rational("1/2"))
    nb = w.operator_norm_upper(p, 40)
    assert nb.certified and nb.bound <= w.Rational("3/2")
    x = samples[0]
    tx = e.apply(x)
    assert p.apply(p.apply(tx)) == p.apply(tx)


def test_models_and_splus():
    m = w.model_catalog("example-4.2")
    assert str(w.model_rstar(m)) == "1"
    assert w.model_membership(m, w.Omega2Member.all_ones())
    assert not w.condition_S_check(m, 1)
    assert w.condition_S_check(w.model_catalog("example-6.8"), 1)

    s = w.SPlusVec(w.parse_dual("tail=geom(1/2,1/2)"))
    t = w.shift_splus(s)
    assert str(t.vec.l1_norm()) == "1"
    assert t.vec != s.vec

    rep = w.remark52_report(
        w.parse_dual("tail=geom(1/2,1/2)"), w.PrimalVec.constant(w.Rational(1))
    )
    assert rep.attainment and rep.affine_class


def test_errors_surface():
    import pytest

    with pytest.raises(Exception):
        w.parse_dual("tail=geom(1,2)")
    with pytest.raises(Exception):
        w.SPlusVec(w.parse_dual("prefix=[1/2,-1/2]"))
