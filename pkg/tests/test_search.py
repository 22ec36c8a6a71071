from fractions import Fraction

import pytest

from gauduchon import catalog
from gauduchon.catalog import Reduced6Params
from gauduchon.errors import BadParams, BadT
from gauduchon.hermitian import gamma_scalar, gauduchon_form, omega_power
from gauduchon.scalars import cr
from gauduchon.search import (
    Target,
    balanced_feasibility_jt,
    close_scalar_zero,
    find_metric,
    parse_target,
    reduced6_feasibility,
    sample_positive_metric,
)


class TestTargets:
    @pytest.mark.parametrize(
        "text, kind, k",
        [
            ("gamma1<0", "gamma_negative", 1),
            ("gamma2>0", "gamma_positive", 2),
            ("gauduchon1=0", "gauduchon_zero", 1),
            ("skt", "skt", None),
            ("balanced", "balanced", None),
        ],
    )
    def test_parse(self, text, kind, k):
        target = parse_target(text)
        assert target.kind == kind and target.k == k
        assert target.describe() == text

    def test_parse_rejects_garbage(self):
        with pytest.raises(BadParams):
            parse_target("gamma<0")
        with pytest.raises(BadParams):
            Target("gamma_negative")  # missing k


class TestSampling:
    def test_samples_are_positive(self, rng):
        import random

        r = random.Random(11)
        for n in (2, 3, 4):
            for _ in range(20):
                assert sample_positive_metric(r, n).is_positive()

    def test_determinism(self):
        se = catalog.reduced6(1, 0, 1, 0)
        a = find_metric(se, Target("gamma_negative", 1), budget=50, seed=123)
        b = find_metric(se, Target("gamma_negative", 1), budget=50, seed=123)
        assert a.to_bytes() == b.to_bytes()

    def test_budget_validated(self):
        with pytest.raises(BadParams):
            find_metric(catalog.abelian(2), Target("skt"), budget=0)


class TestCertificates:
    def test_h5_point_witness_on_first_sample(self):
        params = Reduced6Params(1, cr(0), Fraction(1), Fraction(0))
        assert catalog.classify_reduced6(params) == "h5"
        se = catalog.reduced6(1, 0, 1, 0)
        out = find_metric(se, Target("gamma_negative", 1), family="reduced6",
                          params=params)
        assert out.status == "witness" and out.samples_used == 0
        assert gamma_scalar(out.witness, 1, se) < 0

    def test_h6_certified_infeasible(self):
        params = Reduced6Params(1, cr(1), Fraction(0), Fraction(0))
        se = catalog.reduced6(1, 1, 0, 0)
        out = find_metric(se, Target("gamma_negative", 1), family="reduced6",
                          params=params)
        assert out.status == "infeasible_certified"
        assert Fraction(out.certificate["K"]) == 2

    def test_family8_negative_p_certificates(self):
        se = catalog.family8(-1, 0)
        for target in (Target("gauduchon_zero", 1), Target("balanced"), Target("skt")):
            out = find_metric(se, target, family="family8", params=(-1, 0))
            assert out.status == "infeasible_certified", target.kind

    def test_family8_q_nonzero_balanced_certificate(self):
        se = catalog.family8(1, 1)
        out = find_metric(se, Target("balanced"), family="family8", params=(1, 1))
        assert out.status == "infeasible_certified"
        assert out.certificate["name"] == "conjugate pair"

    def test_nonnilpotent_gamma_negative_certified(self):
        se = catalog.nonnilpotent6(0, 1)
        out = find_metric(se, Target("gamma_negative", 1), family="nonnilpotent6",
                          params=None)
        assert out.status == "infeasible_certified"
        out = find_metric(se, Target("gamma_positive", 1), family="nonnilpotent6",
                          params=None)
        assert out.status == "witness"


class TestWitnessSearch:
    def test_gauduchon_zero_witness_family8(self):
        se = catalog.family8(1, 0)
        out = find_metric(se, Target("gauduchon_zero", 1), budget=50, seed=5,
                          family="family8", params=(1, 0))
        assert out.status == "witness"
        assert gauduchon_form(out.witness, 1, se).is_zero
        assert out.witness.is_positive()

    def test_balanced_witness_family8(self):
        se = catalog.family8(2, 0)
        out = find_metric(se, Target("balanced"), budget=50, seed=5,
                          family="family8", params=(2, 0))
        assert out.status == "witness"
        omega = out.witness.fundamental_form()
        assert se.d(omega_power(omega, 3)).is_zero

    def test_gamma_sign_witness_without_family(self):
        se = catalog.family8(1, 0)
        for kind in ("gamma_negative", "gamma_positive"):
            out = find_metric(se, Target(kind, 1), budget=400, seed=9)
            assert out.status == "witness", kind
            gamma = gamma_scalar(out.witness, 1, se)
            assert (gamma < 0) == (kind == "gamma_negative")

    def test_exhausted_is_honest(self):
        # balanced metrics form a measure-zero set; sampling cannot hit one
        se = catalog.iwasawa()
        out = find_metric(se, Target("skt"), budget=30, seed=2)
        assert out.status == "exhausted"
        assert out.samples_used == 30
        assert out.witness is None and out.certificate is None

    def test_close_scalar_zero_stays_positive(self, rng):
        import random

        r = random.Random(31)
        for _ in range(10):
            m = sample_positive_metric(r, 4)
            fn = lambda mm: catalog.gauduchon_obstruction_family8(2, 0, mm)
            out = close_scalar_zero(m, fn)
            assert out is not None
            assert out.is_positive() and fn(out) == 0


class TestFeasibility:
    @pytest.mark.parametrize(
        "rho, B, x, y, feasible, label",
        [
            (0, 0, 1, 5, True, "h2"),
            (1, 1, 1, 0, False, "h4"),   # boundary: 2x = 2 = rho + |B|^2
            (1, 0, 1, 0, True, "h5"),
        ],
    )
    def test_reduced6(self, rho, B, x, y, feasible, label):
        out = reduced6_feasibility(Reduced6Params(rho, cr(B), Fraction(x), Fraction(y)))
        assert out.feasible == feasible
        assert out.label == label
        if feasible:
            assert out.witness_recipe

    @pytest.mark.parametrize(
        "t, coeffs",
        [
            (Fraction(1), [1, 1, 1]),
            (Fraction(1, 2), [1, 3, 4]),
            (Fraction(1, 4), [1, 7, 16]),
        ],
    )
    def test_jt_balanced_certificates(self, t, coeffs):
        out = balanced_feasibility_jt(t)
        assert not out.feasible
        got = [Fraction(c) for c in out.certificate["quadratic_in_mu_lambda"]]
        assert got == coeffs
        assert Fraction(out.certificate["discriminant"]) < 0

    def test_jt_range_checked(self):
        for t in (Fraction(0), Fraction(2), Fraction(-1)):
            with pytest.raises(BadT):
                balanced_feasibility_jt(t)

    def test_search_never_contradicts_certificates(self):
        # fuzz: whenever the closed form certifies infeasibility, an
        # unassisted search must not find a witness
        for rho, B, x, y in ((1, 1, 0, 0), (0, 0, 0, 0), (1, 0, 0, 3)):
            params = Reduced6Params(rho, cr(B), Fraction(x), Fraction(y))
            se = catalog.reduced6(rho, B, x, y)
            certified = find_metric(se, Target("gamma_negative", 1),
                                    family="reduced6", params=params)
            if certified.status != "infeasible_certified":
                continue
            blind = find_metric(se, Target("gamma_negative", 1), budget=60, seed=17)
            assert blind.status == "exhausted"
