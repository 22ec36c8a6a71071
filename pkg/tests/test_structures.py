from fractions import Fraction

import pytest

from gauduchon import catalog
from gauduchon.errors import (
    DimensionMismatch,
    JacobiViolation,
    NotAlmostComplex,
    NotIntegrable,
)
from gauduchon.forms import Form, wedge
from gauduchon.scalars import ComplexRational, cr
from gauduchon.structures import (
    RealLieAlgebra,
    StructureEquations,
    complex_frame_from_real,
    complex_structure_from_coframe,
    structure_from_coframe,
)

from conftest import rand_form

I = ComplexRational(0, 1)


def block_J(pairs, m):
    """J sending e_a -> e_b for each (a, b) pair (and e_b -> -e_a)."""
    J = [[cr(0)] * m for _ in range(m)]
    for a, b in pairs:
        J[b - 1][a - 1] = cr(1)
        J[a - 1][b - 1] = cr(-1)
    return J


class TestDifferential:
    def test_d_raises_degree_and_leibniz(self, rng):
        se = catalog.reduced6(1, 1, 1, 0)
        for _ in range(40):
            a = rand_form(rng, 3, 1)
            b = rand_form(rng, 3, 2)
            lhs = se.d(wedge(a, b))
            rhs = wedge(se.d(a), b) - wedge(a, se.d(b))
            assert lhs == rhs

    def test_d_squared_zero(self, rng):
        for se in (catalog.reduced6(1, 1, 1, 0), catalog.nonnilpotent6(1, 1),
                   catalog.family8(2, -1)):
            for deg in range(0, 2 * se.n - 1):
                for _ in range(10):
                    f = rand_form(rng, se.n, deg)
                    assert se.d(se.d(f)).is_zero

    def test_d_of_constant_is_zero(self):
        se = catalog.jt(1)
        assert se.d(Form.scalar(5)).is_zero

    def test_d_commutes_with_conjugation(self, rng):
        se = catalog.nonnilpotent6(0, -1)
        for _ in range(20):
            f = rand_form(rng, 3, 2)
            assert se.d(f.conjugate()) == se.d(f).conjugate()

    def test_spec_leibniz_example(self):
        se = catalog.reduced6(0, 0, 1, 0)  # dw3 = w1~1 + w2~2
        w3, cw3 = Form.gen(5), Form.gen(6)
        got = se.d(wedge(w3, cw3))
        expected = wedge(se.d(w3), cw3) - wedge(w3, se.d(cw3))
        assert got == expected
        assert se.d(w3) == Form(2, {(1, 2): cr(1), (3, 4): cr(1)})

    def test_dimension_mismatch(self):
        se = catalog.abelian(2)
        with pytest.raises(DimensionMismatch):
            se.d(Form.gen(7))

    def test_partial_dbar_sum_to_d(self, rng):
        se = catalog.jt(Fraction(1, 2))
        for _ in range(20):
            f = rand_form(rng, 3, 2)
            assert se.partial(f) + se.dbar(f) == se.d(f)

    def test_dbar_conjugate_intertwine(self, rng):
        se = catalog.nilpotent6(1, 1, 0, 1, 1, 0)
        for _ in range(20):
            f = rand_form(rng, 3, 2).component(1, 1)
            assert se.dbar(f.conjugate()) == se.partial(f).conjugate()


class TestValidation:
    def test_jacobi_violation(self):
        # dw2 = w3^~w3 with dw3 = w1^w2 gives d^2 w2 != 0
        dw2 = Form(2, {(5, 6): cr(1)})
        dw3 = Form(2, {(1, 3): cr(1)})
        with pytest.raises(JacobiViolation) as info:
            StructureEquations(3, [Form.zero(), dw2, dw3])
        assert info.value.generator == 2
        assert not info.value.residual.is_zero

    def test_not_integrable_names_generator_and_residual(self):
        dw2 = Form(2, {(2, 4): cr(1)})  # pure (0,2)
        with pytest.raises(NotIntegrable) as info:
            StructureEquations(2, [Form.zero(), dw2])
        assert info.value.generator == 2
        assert info.value.residual == dw2

    def test_unimodular_catalog(self):
        assert catalog.iwasawa().is_unimodular()
        assert catalog.family8(1, 1).is_unimodular()
        assert catalog.nonnilpotent6(0, 1).is_unimodular()

    def test_non_unimodular_affine_toy(self):
        se = StructureEquations(1, [Form(2, {(1, 2): cr(Fraction(1, 2))})])
        assert not se.is_unimodular()

    def test_solvable5_real_algebra_unimodular(self):
        assert catalog.solvable5_contact().algebra.is_unimodular()


class TestRealToComplex:
    def test_abelian_plane(self):
        alg = RealLieAlgebra(2, [Form.zero()] * 2, J=block_J([(1, 2)], 2))
        frame = complex_frame_from_real(alg)
        assert frame.structure.n == 1
        assert frame.structure.d_of[0].is_zero
        # w1 = e1 + i e2
        assert frame.rows[0] == [cr(1), I]

    def test_h5_biinvariant_recovers_iwasawa(self):
        alg = catalog.real_nilpotent6("h5")
        alg = RealLieAlgebra(6, alg.d_of, J=block_J([(1, 2), (3, 4), (5, 6)], 6))
        frame = complex_frame_from_real(alg)
        assert frame.structure == catalog.iwasawa()

    def test_j_square_checked(self):
        J = [[cr(0), cr(1)], [cr(1), cr(0)]]  # J^2 = +Id
        with pytest.raises(NotAlmostComplex):
            RealLieAlgebra(2, [Form.zero()] * 2, J=J)

    def test_round_trip_forms(self, rng):
        frame = complex_frame_from_real(
            RealLieAlgebra(4, [Form.zero()] * 4, J=block_J([(1, 2), (3, 4)], 4))
        )
        for _ in range(20):
            f = rand_form(rng, 2, 2)
            assert frame.to_complex(frame.to_real(f)) == f

    def test_jt_real_presentation_matches_complex_equations(self):
        for t in (Fraction(1), Fraction(1, 2), Fraction(-2)):
            frame = structure_from_coframe(catalog.jt_real(t), catalog.jt_coframe(t))
            assert frame.structure == catalog.jt(t)

    def test_coframe_to_j_round_trip(self):
        rows = catalog.jt_coframe(Fraction(1, 3))
        J = complex_structure_from_coframe(rows, 6)
        JJ = [[sum((J[i][k] * J[k][j] for k in range(6)), cr(0)) for j in range(6)]
              for i in range(6)]
        for i in range(6):
            for j in range(6):
                assert JJ[i][j] == (cr(-1) if i == j else cr(0))

    def test_nonintegrable_real_structure(self):
        # J pairing (1,3) and (2,4) over de5 = e14 leaves a (0,2)-residual
        d_of = [Form.zero()] * 4 + [Form(2, {(1, 4): cr(1)}), Form.zero()]
        alg = RealLieAlgebra(6, d_of, J=block_J([(1, 3), (2, 4), (5, 6)], 6))
        with pytest.raises(NotIntegrable):
            complex_frame_from_real(alg)
