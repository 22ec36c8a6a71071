import random
from fractions import Fraction

import pytest

from gauduchon.forms import Form
from gauduchon.scalars import ComplexRational


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def rand_coeff(rng, span=4):
    return ComplexRational(
        Fraction(rng.randint(-span, span), rng.choice((1, 2))),
        Fraction(rng.randint(-span, span), rng.choice((1, 2))),
    )


def rand_form(rng, n, degree, terms=2):
    out = Form.zero()
    ranks = list(range(1, 2 * n + 1))
    for _ in range(terms):
        out = out + Form.monomial(rng.sample(ranks, degree), rand_coeff(rng))
    return out
