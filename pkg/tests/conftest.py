from fractions import Fraction

import hypothesis.strategies as st

from cuntzsum import AlgebraElement, Scalar, from_monomial, monomial


@st.composite
def scalars(draw, nonzero=False):
    re = Fraction(draw(st.integers(-3, 3)), draw(st.integers(1, 3)))
    im = Fraction(draw(st.integers(-2, 2)), draw(st.integers(1, 2)))
    value = Scalar(re, im)
    if nonzero and value.is_zero():
        value = Scalar(1)
    return value


@st.composite
def monomials(draw, max_n=4, max_len=2):
    n = draw(st.integers(1, max_n))
    mu = draw(st.lists(st.integers(1, n), max_size=max_len))
    nu = draw(st.lists(st.integers(1, n), max_size=max_len))
    return monomial(n, mu, nu)


@st.composite
def elements(draw, max_n=4, max_len=2, max_terms=3):
    out = AlgebraElement()
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + from_monomial(
            draw(monomials(max_n=max_n, max_len=max_len)),
            draw(scalars(nonzero=True)),
        )
    return out
