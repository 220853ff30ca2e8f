from fractions import Fraction

from hypothesis import given, strategies as st

from hexaforge import polynomial as P

fractions = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 30))
polys = st.lists(fractions, max_size=6).map(P.trim)


@given(polys, polys.filter(bool))
def test_division_identity(num, den):
    quo, rem = P.divmod_poly(num, den)
    assert P.add(P.mul(quo, den), rem) == P.trim(num)
    assert P.degree(rem) < P.degree(den)


@given(polys, polys, fractions)
def test_evaluation_is_a_ring_map(p, q, x):
    assert P.evaluate(P.mul(p, q), x) == P.evaluate(p, x) * P.evaluate(q, x)
    assert P.evaluate(P.add(p, q), x) == P.evaluate(p, x) + P.evaluate(q, x)


def test_deflation_by_known_roots():
    # (t)(t - 1)(2t - 3)
    cubic = P.mul(P.mul((0, 1), (-1, 1)), (-3, 2))
    quo, rem = P.divmod_poly(cubic, (0, -1, 1))
    assert rem == ()
    assert quo == (Fraction(-3), Fraction(2))


def test_power_and_degree():
    assert P.power((1, 1), 3) == (1, 3, 3, 1)
    assert P.degree(()) == -1
    assert P.degree((0, 0, 5, 0)) == 2
