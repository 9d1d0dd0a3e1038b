from fractions import Fraction

from hypothesis import settings

from starhess.ring import MultiPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def a(i):
    return MultiPoly.var(i)


def frac(p, q=1):
    return Fraction(p, q)
