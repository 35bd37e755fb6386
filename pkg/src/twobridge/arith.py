"""Exact arithmetic for 2-bridge links.

Reduced fractions including the ideal point 1/0, determinant-one integer
2x2 matrices with even lower-left entry, positive continued fractions,
linking numbers, and enumeration of link types by crossing number.
Everything here is a pure function on immutable values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, NamedTuple

from .corpus_data import ROLFSEN_NAMES


class Frac(NamedTuple):
    """Reduced fraction num/den with den >= 0; the ideal point is 1/0."""

    num: int
    den: int

    @staticmethod
    def make(num: int, den: int) -> "Frac":
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a projective point")
            return Frac(1, 0)
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        return Frac(num // g, den // g)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def key(self):
        """Sort key; finite rationals in order, 1/0 after everything."""
        if self.den == 0:
            return (1, Fraction(0))
        return (0, Fraction(self.num, self.den))

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


INFINITY = Frac(1, 0)


class GMat(NamedTuple):
    """Integer matrix [[a, b], [c, d]] of determinant one, taken up to
    sign (an element of PSL(2,Z)).  Stored with c > 0, or c == 0 and
    a > 0."""

    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def make(a: int, b: int, c: int, d: int) -> "GMat":
        if a * d - b * c != 1:
            raise ValueError(f"determinant of [[{a},{b}],[{c},{d}]] is not 1")
        if c < 0 or (c == 0 and a < 0):
            a, b, c, d = -a, -b, -c, -d
        return GMat(a, b, c, d)

    @property
    def in_even_subgroup(self) -> bool:
        return self.c % 2 == 0

    def __mul__(self, other: "GMat") -> "GMat":
        a, b, c, d = self
        e, f, g, h = other
        return GMat.make(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "GMat":
        return GMat.make(self.d, -self.b, -self.c, self.a)

    def apply(self, v: Frac) -> Frac:
        """Moebius action z -> (az + b)/(cz + d) on projective rationals."""
        return Frac.make(self.a * v.num + self.b * v.den,
                         self.c * v.num + self.d * v.den)

    def col1(self) -> Frac:
        return Frac.make(self.a, self.c)

    def col2(self) -> Frac:
        return Frac.make(self.b, self.d)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


class TwoBridgeLink(NamedTuple):
    """A 2-bridge link, classified by the reduced fraction p/q with
    0 < p < q, p odd, q even."""

    p: int
    q: int

    def fraction(self) -> Frac:
        return Frac(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def make_link(p: int, q: int) -> TwoBridgeLink:
    """Validate and normalize p/q to a 2-bridge link (two components).

    Reduces the fraction, maps p into (0, q), and rejects odd q, which
    would describe a knot rather than a two-component link.
    """
    if q == 0:
        raise ValueError("q must be nonzero")
    if q < 0:
        p, q = -p, -q
    g = math.gcd(p, q)
    p, q = p // g, q // g
    p %= q
    if q % 2 == 1:
        raise ValueError(f"q must be even after reduction, got {p}/{q} (a knot)")
    # gcd(p, q) = 1 with q even forces p odd.
    return TwoBridgeLink(p, q)


def canonical_rep(link: TwoBridgeLink, identify_mirrors: bool = False) -> TwoBridgeLink:
    """Smallest fraction describing the same link type.

    p/q and p'/q give the same unoriented link exactly when p' is p or
    its inverse mod q; the mirror image corresponds to q - p.  With
    ``identify_mirrors`` the representative is taken over the full
    four-element orbit, which always lands below q/2 (the chirality the
    reference tables print).
    """
    p, q = link
    orbit = {p, pow(p, -1, q)}
    if identify_mirrors:
        m = q - p
        orbit |= {m, pow(m, -1, q)}
        rep = min(orbit)
        if rep > q // 2:
            rep = min(q - rep, pow(q - rep, -1, q))
        return TwoBridgeLink(rep, q)
    return TwoBridgeLink(min(orbit), q)


class ContFrac(NamedTuple):
    """Positive continued fraction [0, a2, ..., an] for p/q in (0, 1),
    meaning 1/(a2 + 1/(a3 + ...)); the last term is at least 2."""

    terms: tuple[int, ...]

    def value(self) -> Frac:
        body = self.terms[1:]
        num, den = 1, body[-1]
        for a in reversed(body[:-1]):
            num, den = den, a * den + num
        return Frac.make(num, den)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.terms)) + "]"


def cf_positive(link: TwoBridgeLink) -> ContFrac:
    """The unique all-positive expansion of p/q with last term >= 2."""
    terms = [0]
    p, q = link.p, link.q
    while p:
        a, r = divmod(q, p)
        terms.append(a)
        p, q = r, p
    assert terms[-1] >= 2
    return ContFrac(tuple(terms))


def crossing_number(link: TwoBridgeLink) -> int:
    """Crossing number, the term sum of the positive expansion."""
    return sum(cf_positive(link).terms)


def linking_number(link: TwoBridgeLink) -> int:
    """Linking number of either component with the blackboard longitude
    used by the slope computation; converting to the preferred framing
    shifts both intersection numbers by this amount."""
    p, q = link
    return -sum((-1) ** ((2 * j * p) // q) for j in range(1, (q - 2) // 2 + 1))


def _expansions_with_sum(total: int) -> Iterator[tuple[int, ...]]:
    """Term lists [a2..an], all >= 1 and the last >= 2, summing to total."""
    if total >= 2:
        yield (total,)
    for first in range(1, total - 1):
        for rest in _expansions_with_sum(total - first):
            yield (first,) + rest


def enumerate_links(max_crossings: int, identify_mirrors: bool = True) -> list[TwoBridgeLink]:
    """All 2-bridge link types with at most the given crossing number.

    One canonical representative per type, sorted by crossing number,
    then q, then p.
    """
    if max_crossings < 2:
        raise ValueError("a link diagram needs at least 2 crossings")
    seen: set[TwoBridgeLink] = set()
    for total in range(2, max_crossings + 1):
        for body in _expansions_with_sum(total):
            frac = ContFrac((0,) + body).value()
            if frac.den % 2:
                continue
            seen.add(canonical_rep(TwoBridgeLink(frac.num, frac.den), identify_mirrors))
    return sorted(seen, key=lambda ln: (crossing_number(ln), ln.q, ln.p))


def rolfsen_name(link: TwoBridgeLink) -> str | None:
    """Classical table name for links through nine crossings, else None."""
    rep = canonical_rep(link, identify_mirrors=True)
    return ROLFSEN_NAMES.get((rep.p, rep.q))
