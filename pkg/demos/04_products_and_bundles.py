#!/usr/bin/env python3
"""Products of Sasakian-type factors and circle-bundle extensions.

Shows the collapsed wedge coefficient and its zero set for product metrics,
then builds the six-dimensional extension of the solvable contact entry and
compares the bundle criterion against the engine's scalar.
"""

from fractions import Fraction

from gauduchon import (
    Form,
    ProductParams,
    bundle_extend,
    coefficient_C,
    cr,
    format_structure,
    gamma_scalar,
    product_report,
    solve_admissible,
)
from gauduchon.forms import format_real_form
from gauduchon import catalog

print("== product coefficients ==")
print("C(6,2) at a=1, b=1:", coefficient_C(6, 2, 1, 1))
report = product_report(ProductParams(2, 1, Fraction(-1, 2), Fraction(1), Fraction(2)))
print("factors (2,1), a=-1/2: obstruction =", report.obstruction,
      " first Gauduchon:", report.first_gauduchon)

report = product_report(ProductParams(1, 1, Fraction(-1), Fraction(1), Fraction(1)))
print("three-dimensional product, a=-1: gamma1 =", report.gamma1)

print()
print("== admissible parameter sets ==")
print("(n1,n2)=(2,1):", solve_admissible(2, 1))
print("(n1,n2)=(2,2):", solve_admissible(2, 2))
print("  (the quadratic 2a^2+8a+2 has irrational roots -2 +- sqrt(3);")
print("   the solver reports exact coefficient/discriminant data instead)")

print()
print("== circle bundle over the solvable contact entry ==")
ext = bundle_extend(catalog.solvable5_contact())
print(format_structure(ext.structure), end="")
print("criterion form:", format_real_form(ext.criterion_form), " scalar:", ext.criterion_scalar)
print("gamma1 of the induced metric:", gamma_scalar(ext.metric, 1, ext.structure))

print()
print("== the trivial bundle over the Sasakian entry can never have a")
print("   vanishing criterion ==")
ext = bundle_extend(catalog.heisenberg5_contact())
print("criterion form:", format_real_form(ext.criterion_form), " scalar:", ext.criterion_scalar)

print()
print("== a tuned curvature makes the extension pluriclosed ==")
F = Form(2, {(1, 4): cr(1), (2, 3): cr(-1)})
ext = bundle_extend(catalog.solvable5_contact(F=F))
print("criterion scalar:", ext.criterion_scalar,
      " gamma1:", gamma_scalar(ext.metric, 1, ext.structure))
