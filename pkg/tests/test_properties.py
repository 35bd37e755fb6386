"""Property-based checks of the arithmetic layer and the slope pipeline."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from twobridge.arith import (ContFrac, TwoBridgeLink, canonical_rep,
                             cf_positive, crossing_number, linking_number,
                             make_link)
from twobridge.slopes import slope_families


# Links generated through their positive expansions, so the crossing
# number is controlled directly.  When the drawn expansion gives an odd
# denominator, one of two repairs always fixes the parity: bumping the
# last term (works when the second-to-last continuant is odd) or
# appending a term (works when it is even).
@st.composite
def links(draw, max_crossings=14):
    n = draw(st.integers(2, max_crossings))
    body = []
    remaining = n
    while remaining > 0:
        a = draw(st.integers(1, remaining))
        body.append(a)
        remaining -= a
    if body[-1] < 2:
        body[-1] += 1
    for candidate in (body, body[:-1] + [body[-1] + 1], body + [2]):
        frac = ContFrac((0,) + tuple(candidate)).value()
        if frac.den % 2 == 0:
            return make_link(frac.num, frac.den)
    raise AssertionError("parity repair failed")


@given(links())
def test_link_normal_form(link):
    assert 0 < link.p < link.q
    assert link.p % 2 == 1 and link.q % 2 == 0


@given(links(), st.integers(1, 5))
def test_make_link_reduces_multiples(link, m):
    assert make_link(m * link.p, m * link.q) == link
    assert make_link(link.p + link.q, link.q) == link


@given(links(), st.booleans())
def test_canonical_rep_idempotent(link, mirrors):
    rep = canonical_rep(link, mirrors)
    assert canonical_rep(rep, mirrors) == rep


@given(links())
def test_canonical_rep_constant_on_orbit(link):
    p, q = link
    inverse = TwoBridgeLink(pow(p, -1, q), q)
    assert canonical_rep(link) == canonical_rep(inverse)
    mirror = TwoBridgeLink(q - p, q)
    assert canonical_rep(link, True) == canonical_rep(mirror, True)
    # below the halfway chirality cutoff; only 1/2 sits exactly on it
    assert 2 * canonical_rep(link, True).p <= q


@given(links(max_crossings=16))
def test_cf_positive_round_trip(link):
    cf = cf_positive(link)
    assert cf.value() == link.fraction()
    assert cf.terms[-1] >= 2 and all(t >= 1 for t in cf.terms[1:])
    assert crossing_number(link) == sum(cf.terms)


@given(links())
def test_linking_number_parity(link):
    if link.q % 4 == 0:
        assert linking_number(link) % 2 == 1


@settings(max_examples=30, deadline=None)
@given(links(max_crossings=12))
def test_intersection_form_parities(link):
    result = slope_families(link)
    for x, y, z in result.mforms_raw:
        assert (x - z) % 2 == 0
        assert (x + y) % 2 == (1 + link.q) % 2
    for x, y in result.sforms_raw:
        assert y >= 1
        assert (x + y) % 2 == (1 + link.q) % 2


@settings(max_examples=30, deadline=None)
@given(links(max_crossings=12))
def test_family_structure(link):
    result = slope_families(link)
    slopes_at_one = {(x + y, y + z) for x, y, z in result.mforms}
    for fam in result.families:
        if fam.branch == "T":
            x, y, z = fam.coeffs
            if fam.domain == ("0", "inf"):
                assert x == z
        elif fam.branch == "S":
            x, y = fam.coeffs
            # the two slopes sum to the constant 2x, and the family ends
            # on t-family values
            s_hi = (x + y, x - y)
            assert s_hi[0] + s_hi[1] == 2 * x
            assert s_hi in slopes_at_one
            assert (x - y, x + y) in slopes_at_one


@settings(max_examples=20, deadline=None)
@given(links(max_crossings=12))
def test_slope_set_invariant_under_inversion(link):
    p, q = link
    partner = TwoBridgeLink(pow(p, -1, q), q)
    assert set(slope_families(partner).families) == set(slope_families(link).families)
