import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ncktheory.charring import Character, SuperChar

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def characters(draw, nvars, max_terms=3, exp_range=2, coef=(1, 2)):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(-exp_range, exp_range)) for _ in range(nvars))
        terms[e] = terms.get(e, 0) + draw(st.integers(*coef))
    return Character(nvars, terms)


@st.composite
def superchars(draw, max_nvars=2, max_terms=3, exp_range=2):
    nvars = draw(st.integers(1, max_nvars))
    return SuperChar(draw(characters(nvars, max_terms, exp_range)),
                     draw(characters(nvars, max_terms, exp_range)))


def rng(seed=0):
    return random.Random(seed)
