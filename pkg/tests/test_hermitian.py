from fractions import Fraction

import pytest

from gauduchon import catalog
from gauduchon.errors import BadK, NotPositive, NotSkewHermitian
from gauduchon.forms import Form, wedge
from gauduchon.hermitian import (
    Lefschetz,
    Metric,
    classify,
    gamma_scalar,
    gauduchon_form,
    gauduchon_reduction_check,
    lee_form,
    lee_form_via_codifferential,
    metric_from_form,
    omega_power,
    top_coefficient,
    volume_coefficient,
)
from gauduchon.scalars import ComplexRational, cr
from gauduchon.search import sample_positive_metric

I = ComplexRational(0, 1)


class TestMetric:
    def test_skew_hermitian_enforced(self):
        with pytest.raises(NotSkewHermitian):
            Metric([[I, cr(1)], [cr(1), I]])
        Metric([[I, cr(1)], [cr(-1), I]])  # conj(x21) = -x12 holds

    def test_positivity_examples(self):
        assert Metric.diagonal(3).is_positive()
        assert not Metric.diagonal(3, [-1, 1, 1]).is_positive()
        assert not Metric.diagonal(2, [1, 0]).is_positive()

    def test_fundamental_form_is_real_11(self, rng):
        for _ in range(30):
            m = sample_positive_metric(rng, 3)
            omega = m.fundamental_form()
            assert omega.conjugate() == omega
            assert set(omega.bidegree_parts()) == {(1, 1)}

    def test_fundamental_form_round_trip(self, rng):
        for n in (2, 3, 4):
            for _ in range(10):
                m = sample_positive_metric(rng, n)
                assert metric_from_form(m.fundamental_form(), n) == m

    def test_diagonal_form(self):
        omega = Metric.diagonal(3).fundamental_form()
        assert omega == Form(2, {(1, 2): I, (3, 4): I, (5, 6): I})

    def test_volume_identity(self, rng):
        for n in (2, 3, 4):
            for _ in range(10):
                m = sample_positive_metric(rng, n)
                fact = 1
                for t in range(2, n + 1):
                    fact *= t
                expected = cr(fact) * I**n * cr(m.det_minus_i_x())
                got = top_coefficient(omega_power(m.fundamental_form(), n), n)
                assert got == expected == volume_coefficient(m)
                assert m.det_minus_i_x() > 0


class TestGamma:
    def test_bad_k(self):
        with pytest.raises(BadK):
            gauduchon_form(Metric.diagonal(3), 3, catalog.iwasawa())

    def test_not_positive(self):
        with pytest.raises(NotPositive):
            gamma_scalar(Metric.diagonal(3, [-1, 1, 1]), 1, catalog.iwasawa())

    def test_iwasawa_positive(self):
        assert gamma_scalar(Metric.diagonal(3), 1, catalog.iwasawa()) > 0

    def test_jt_unit_scalar_zero(self):
        assert gamma_scalar(Metric.diagonal(3), 1, catalog.jt(1)) == 0

    def test_reduced_example_value(self):
        se = catalog.reduced6(0, 0, 1, 0)
        assert gamma_scalar(Metric.diagonal(3), 1, se) == Fraction(-1, 6)

    def test_kahler_pair_vanishes(self):
        se = catalog.abelian(3)
        for k in (1, 2):
            assert gauduchon_form(Metric.diagonal(3), k, se).is_zero

    def test_family8_diagonal_closed_form(self):
        # diag(i l1, ..., i l4): coefficient -4 i l4^2 (p (l2+l3) - l1) on the
        # top monomial, by direct expansion
        lams = (Fraction(2), Fraction(1), Fraction(3), Fraction(1, 2))
        p = Fraction(3, 2)
        se = catalog.family8(p, 0)
        m = Metric.diagonal(4, lams)
        g = gauduchon_form(m, 1, se)
        coeff = cr(-4) * I * cr(lams[3] ** 2) * cr(p * (lams[1] + lams[2]) - lams[0])
        assert g == Form(8, {tuple(range(1, 9)): coeff})

    def test_conformal_scaling(self, rng):
        se = catalog.jt(Fraction(1, 2))
        for _ in range(10):
            m = sample_positive_metric(rng, 3)
            c = Fraction(rng.randint(1, 7), rng.randint(1, 4))
            assert gamma_scalar(m.scale(cr(c)), 1, se) == gamma_scalar(m, 1, se) / c


class TestClassify:
    def test_iwasawa_natural_metric(self):
        report = classify(Metric.diagonal(3), catalog.iwasawa())
        assert report.balanced and not report.skt and not report.kahler
        # balanced forces d(Omega^{n-1}) = 0, hence the standard k = n-1 flag
        assert report.label == "balanced+gauduchon2"
        assert report.gauduchon == {1: False, 2: True}

    def test_abelian_kahler(self, rng):
        report = classify(sample_positive_metric(rng, 3), catalog.abelian(3))
        assert report.kahler and report.skt and report.balanced and report.astheno
        assert all(report.gauduchon.values())
        assert all(v == 0 for v in report.gamma.values())
        assert report.lee.is_zero

    def test_family8_never_skt(self, rng):
        se = catalog.family8(Fraction(1, 2), Fraction(2))
        for _ in range(10):
            report = classify(sample_positive_metric(rng, 4), se)
            assert not report.skt and not report.kahler

    def test_skt_implies_first_gauduchon(self):
        report = classify(Metric.diagonal(3), catalog.jt(1))
        assert report.skt and report.gauduchon[1]
        assert report.gamma[1] == 0

    def test_json_shape(self):
        data = classify(Metric.diagonal(3), catalog.iwasawa()).to_json()
        assert data["balanced"] is True
        assert data["gamma"]["1"] == "1/12"
        assert data["lee_form"] == []


class TestLeeForm:
    def test_iwasawa_balanced_lee_zero(self):
        assert lee_form(Metric.diagonal(3), catalog.iwasawa()).is_zero

    def test_abelian_lee_zero(self):
        assert lee_form(Metric.diagonal(3), catalog.abelian(3)).is_zero

    def test_reduced_family_nonzero_lee(self):
        theta = lee_form(Metric.diagonal(3), catalog.reduced6(0, 0, 1, 0))
        assert theta == Form(1, {(5,): cr(2), (6,): cr(2)})

    def test_solves_defining_equation(self, rng):
        for se in (catalog.jt(Fraction(3, 4)), catalog.nonnilpotent6(0, 1)):
            for _ in range(5):
                m = sample_positive_metric(rng, 3)
                omega2 = omega_power(m.fundamental_form(), 2)
                theta = lee_form(m, se)
                assert wedge(theta, omega2) == se.d(omega2)
                assert theta.conjugate() == theta

    def test_balanced_iff_lee_zero(self, rng):
        se = catalog.reduced6(1, 0, 1, 0)
        for _ in range(10):
            m = sample_positive_metric(rng, 3)
            omega2 = omega_power(m.fundamental_form(), 2)
            assert lee_form(m, se).is_zero == se.d(omega2).is_zero

    def test_codifferential_route_agrees(self, rng):
        for se in (catalog.iwasawa(), catalog.reduced6(0, 0, 1, 0),
                   catalog.family8(1, 0)):
            for _ in range(5):
                m = sample_positive_metric(rng, se.n)
                assert lee_form_via_codifferential(m, se) == lee_form(m, se)


class TestLefschetz:
    def test_base_values(self):
        for n in (2, 3, 4):
            lef = Lefschetz(Metric.diagonal(n))
            omega = Metric.diagonal(n).fundamental_form()
            assert lef.Lstar(Form.scalar(1)).is_zero
            assert lef.Lstar(omega) == Form.scalar(cr(4 * n))
            assert lef.Lstar(omega_power(omega, 2)) == omega.scale(cr(8 * (n - 1)))
            assert lef.Lstar_power(lef.L_power(Form.scalar(1), 2), 2) == Form.scalar(
                cr(32 * n * (n - 1))
            )

    def test_lstar_requires_positive(self):
        with pytest.raises(NotPositive):
            Lefschetz(Metric.diagonal(2, [1, -1]))

    def test_commutation_base_cases(self):
        lef = Lefschetz(Metric.diagonal(3))
        one = Form.scalar(1)
        assert lef.commutation_residual(1, 1, one).is_zero
        assert lef.commutation_residual(2, 2, one).is_zero

    def test_commutation_on_nondiagonal_metric(self, rng):
        m = sample_positive_metric(rng, 3)
        lef = Lefschetz(m)
        from gauduchon.verify import random_pure_form

        for _ in range(4):
            f = random_pure_form(rng, 3, rng.randint(0, 2), rng.randint(0, 2))
            for r in range(1, 3):
                for s in range(r, 4):
                    assert lef.commutation_residual(r, s, f).is_zero

    def test_requires_r_le_s(self):
        lef = Lefschetz(Metric.diagonal(2))
        with pytest.raises(ValueError):
            lef.commutation_residual(2, 1, Form.scalar(1))

    def test_adjoint_is_adjoint(self, rng):
        # <L* f, g> = <f, L g> in the weighted monomial inner product
        m = sample_positive_metric(rng, 2)
        lef = Lefschetz(m)

        def inner(a, b):
            au, bu = lef._to_unitary(a), lef._to_unitary(b)
            val = cr(0)
            for mon, c in au.terms.items():
                cc = bu.terms.get(mon)
                if cc is not None:
                    val = val + c * cc.conjugate() * cr(lef._weight(mon))
            return val

        from conftest import rand_form

        for _ in range(10):
            f = rand_form(rng, 2, 3)
            g = rand_form(rng, 2, 1)
            assert inner(lef.adjoint(f), g) == inner(f, lef.L(g))

    def test_reduction_identity_on_dimension_four(self, rng):
        se = catalog.family8(Fraction(1, 2), Fraction(1))
        for m in (Metric.diagonal(4), sample_positive_metric(rng, 4)):
            data = gauduchon_reduction_check(m, se)
            assert not data["residual"]
            assert data["constant_calibrated"] == 16
            assert data["constant_display"] == 1024
