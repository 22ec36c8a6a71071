from fractions import Fraction

import pytest

from gauduchon import catalog, dsl
from gauduchon.catalog import Nilpotent6Params, Reduced6Params, classify_reduced6
from gauduchon.errors import BadParams, UnknownFamily
from gauduchon.forms import Form
from gauduchon.hermitian import Metric, gamma_scalar
from gauduchon.scalars import ComplexRational, cr
from gauduchon.search import sample_positive_metric

I = ComplexRational(0, 1)


class TestBuilders:
    def test_jt_unit_matches_dsl(self):
        text = "n:3; dw1:0; dw2:0; dw3: w1^w2 + w1^~w1 + w1^~w2 + (1)*w2^~w2"
        assert catalog.build("jt", t=1) == dsl.parse_structure(text)

    def test_family8_origin(self):
        se = catalog.build("family8", p=0, q=0)
        assert se.d_of[3] == Form(2, {(3, 4): cr(-1), (5, 6): cr(-1)})

    def test_iwasawa_entry(self):
        se = catalog.build("iwasawa")
        assert se.d_of[2] == Form(2, {(1, 3): cr(1)})
        assert se.d_of[0].is_zero and se.d_of[1].is_zero

    def test_reduced_is_specialized_nilpotent(self):
        assert catalog.reduced6(1, I, Fraction(1, 2), 2) == catalog.nilpotent6(
            0, 1, 1, I, 0, ComplexRational(Fraction(1, 2), 2)
        )

    def test_unknown_family(self):
        with pytest.raises(UnknownFamily):
            catalog.build("nope")

    def test_bad_params(self):
        with pytest.raises(BadParams):
            catalog.build("jt", t=0)
        with pytest.raises(BadParams):
            catalog.build("nilpotent6", eps=2, rho=0, A=0, B=0, C=0, D=0)
        with pytest.raises(BadParams):
            catalog.build("jt", s=1)

    def test_list_families(self):
        fams = catalog.list_families()
        assert "jt" in fams and "params" in fams["jt"]

    def test_every_family_validates(self):
        catalog.nonnilpotent6(1, 1)
        catalog.nonnilpotent6(1, -1)
        catalog.nilpotent6(1, 1, cr(5), I, -I, cr(3))
        catalog.family8(Fraction(-7, 2), Fraction(5, 3))


class TestClassifier:
    @pytest.mark.parametrize(
        "rho, B, x, y, label",
        [
            (1, 1, 1, 2, "h2"),          # (a1)
            (0, 0, 1, 0, "h3"),          # (a2)
            (1, 1, 1, 0, "h4"),          # (a3)
            (1, 1, 0, 0, "h6"),          # (a4)
            (0, 0, 0, 0, "h8"),          # (a5)
            (0, 0, 1, 5, "h2"),          # (b1): 100 > 0*4
            (1, 0, 2, Fraction(3, 2), "h4"),  # (b2): 9 = 1*9
            (1, 0, 2, 0, "h5"),          # (b3): 0 < 9
        ],
    )
    def test_case_table(self, rho, B, x, y, label):
        params = Reduced6Params(rho, cr(B), Fraction(x), Fraction(y))
        assert classify_reduced6(params) == label

    def test_total_on_random_points(self, rng):
        labels = set()
        for _ in range(300):
            params = Reduced6Params(
                rng.randint(0, 1),
                ComplexRational(Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3), 2)),
                Fraction(rng.randint(-4, 4), rng.choice((1, 2))),
                Fraction(rng.randint(-4, 4), rng.choice((1, 2))),
            )
            labels.add(classify_reduced6(params))
        assert labels <= {"h2", "h3", "h4", "h5", "h6", "h8"}

    def test_nonreal_modulus_one(self):
        # |B| = 1 with B = 3/5 + 4/5 i lands in case (a)
        params = Reduced6Params(1, ComplexRational(Fraction(3, 5), Fraction(4, 5)),
                                Fraction(0), Fraction(0))
        assert classify_reduced6(params) == "h6"

    def test_real_algebra_entries_exist(self):
        for label in ("h2", "h3", "h4", "h5", "h6", "h8"):
            alg = catalog.real_nilpotent6(label)
            assert alg.m == 6 and alg.is_unimodular()


class TestClosedForms:
    def test_skt_scalar_examples(self):
        p = Nilpotent6Params(0, 1, cr(1), cr(1), cr(0), cr(1))
        assert catalog.skt_scalar_nilpotent6(p) == 0
        assert catalog.closed_form_scalars(
            "reduced6", Reduced6Params(0, cr(0), Fraction(1), Fraction(0))
        )["K"] == -2

    def test_jt_scalar(self):
        for t in (Fraction(1, 4), Fraction(2), Fraction(1)):
            assert catalog.closed_form_scalars("jt", t)["K"] == 2 - 2 / t

    def test_family8_gauduchon_zero_point(self):
        m = Metric.diagonal(4, [2, 1, 1, 1])
        assert catalog.gauduchon_obstruction_family8(1, 0, m) == 0
        assert catalog.gauduchon_obstruction_family8(2, 0, m) == -4

    def test_gamma_predictions_match_engine(self, rng):
        for _ in range(20):
            params = Nilpotent6Params(
                rng.randint(0, 1), rng.randint(0, 1),
                ComplexRational(rng.randint(-2, 2), rng.randint(-2, 2)),
                ComplexRational(rng.randint(-2, 2), rng.randint(-2, 2)),
                ComplexRational(rng.randint(-2, 2), rng.randint(-2, 2)),
                ComplexRational(rng.randint(-2, 2), rng.randint(-2, 2)),
            )
            se = catalog.nilpotent6(params.eps, params.rho, params.A, params.B,
                                    params.C, params.D)
            m = sample_positive_metric(rng, 3)
            assert gamma_scalar(m, 1, se) == catalog.gamma1_nilpotent6(params, m)
        for sign in (1, -1):
            se = catalog.nonnilpotent6(0, sign)
            m = sample_positive_metric(rng, 3)
            assert gamma_scalar(m, 1, se) == catalog.gamma1_nonnilpotent6(m)
        se = catalog.family8(Fraction(1, 2), Fraction(-3))
        m = sample_positive_metric(rng, 4)
        assert gamma_scalar(m, 1, se) == catalog.gamma1_family8(
            Fraction(1, 2), Fraction(-3), m
        )

    def test_balanced_oracle_matches_engine(self, rng):
        from gauduchon.forms import wedge

        for p, q in ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(2)),
                     (Fraction(-1), Fraction(0))):
            se = catalog.family8(p, q)
            for _ in range(10):
                m = sample_positive_metric(rng, 4)
                omega = m.fundamental_form()
                engine = se.d(wedge(wedge(omega, omega), omega)).is_zero
                assert engine == catalog.balanced_obstruction_family8(p, q, m)["holds"]


class TestContactEntries:
    def test_solvable5_contact_data_valid(self):
        c = catalog.solvable5_contact()
        assert c.m == 5
        assert c.algebra.d(c.Phi).is_zero

    def test_heisenberg_is_sasakian(self):
        c = catalog.heisenberg5_contact()
        assert c.algebra.d(c.eta) == c.Phi

    def test_custom_curvature_validated(self):
        from gauduchon.errors import NotQuasiSasakian

        not_closed = Form(2, {(2, 4): cr(1)})  # d(e24) = e134 on solvable5
        with pytest.raises(NotQuasiSasakian, match="not closed"):
            catalog.solvable5_contact(F=not_closed)
        not_invariant = Form(2, {(1, 2): cr(1)})  # closed but not phi-invariant
        with pytest.raises(NotQuasiSasakian, match="phi-invariant"):
            catalog.solvable5_contact(F=not_invariant)
