"""Boundary-slope computation for 2-bridge links.

Every minimal edge path in the deformed diagram carries a spanning
surface whose boundary meets the two longitudes in total intersection
numbers (M1, M2), always integer combinations of the sheet weights alpha
and beta (t = alpha/beta).  Two independent computations are provided:

* ``m_form`` deforms the path to one made of side halves only, whose
  value is a determinant sum over its rational vertices, and corrects
  for each cell the deformation pushed the path across.
* ``m_form_edgewise`` sums, edge by edge, the intersection of the
  pulled-back longitudes with the train track carried by that edge.

The two must agree exactly; the verification command checks this for
every minimal path of every link in the reference tables.

Paths in the t = 1 diagram that use odd diagonals carry more general
surfaces with one free branching weight n_i in [0, beta] per diagonal;
their value reduces to a one-parameter family in s in [-1, 1]
(``s_form``).  Converting to the preferred longitude adds the linking
number to both slope coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .arith import Frac, INFINITY, TwoBridgeLink, linking_number, make_link
from .diagram import Diagrams, TypedPath, collapse, minimal_paths


class MForm(NamedTuple):
    """M = (x*alpha + y*beta, y*alpha + z*beta); x and z share parity."""

    x: int
    y: int
    z: int


class SForm(NamedTuple):
    """M = ((x + y*s)*beta, (x - y*s)*beta) with s rational in [-1, 1];
    y counts the odd diagonals of the source path."""

    x: int
    y: int


@dataclass
class PushLedger:
    """Signed counts of cell crossings used to straighten a path: corner
    triangles at even vertices (n0), at odd vertices (n1), and the
    rectangle (n4)."""

    n0p: int = 0
    n0m: int = 0
    n1p: int = 0
    n1m: int = 0
    n4p: int = 0
    n4m: int = 0

    def add(self, bucket: str, sense: int) -> None:
        name = bucket + ("p" if sense > 0 else "m")
        setattr(self, name, getattr(self, name) + 1)

    def counts(self) -> tuple[int, int, int]:
        return (self.n0p - self.n0m, self.n1p - self.n1m, self.n4p - self.n4m)


class SymbolicM(NamedTuple):
    """M with one free weight per odd diagonal of a t = 1 path:
    M1 = b1*beta + sum(n1[i] * n_i), M2 = b2*beta + sum(n2[i] * n_i)."""

    b1: int
    b2: int
    n1: tuple[int, ...]
    n2: tuple[int, ...]


def delta_sum(path_or_vertices) -> int:
    """Determinant sum over consecutive rational vertices.

    Each consecutive pair contributes p_i*q_{i+1} - p_{i+1}*q_i, or 0
    when either vertex is 1/0.  Accepts a path (its rational vertices
    are used) or any sequence of fractions.
    """
    if isinstance(path_or_vertices, TypedPath):
        verts = path_or_vertices.rationals()
    else:
        verts = list(path_or_vertices)
    total = 0
    for a, b in zip(verts, verts[1:]):
        if a.den == 0 or b.den == 0:
            continue
        total += a.num * b.den - b.num * a.den
    return total


def _check_parities(x: int, y: int, z: int, path: TypedPath) -> None:
    if (x - z) % 2:
        raise RuntimeError(f"parity x = z mod 2 violated on {path}: {(x, y, z)}")
    if path.start == INFINITY and isinstance(path.end, Frac) and not path.end.is_infinite:
        q = path.end.den
        if (x + y - 1 - q) % 2:
            raise RuntimeError(
                f"parity x + y = 1 + q mod 2 violated on {path}: {(x, y, z)}")


def straighten(path: TypedPath) -> tuple[list[Frac], PushLedger]:
    """Replace every rectangle-side edge by the two side halves around
    its corner triangle, recording the crossings.

    A C edge crossed with the grain of its triangle boundary counts
    positively into n0, a D edge into n1; traversals against the grain
    count negatively.  The result is the rational vertex sequence of the
    straightened path.
    """
    if path.kind != "Dt":
        raise ValueError("only Dt paths are straightened")
    ledger = PushLedger()
    seq: list = [path.start]
    for step in path.steps:
        etype = step.edge.etype
        if etype in ("A", "B"):
            seq.append(step.target)
            continue
        # Boundary of the corner triangle runs against a C edge and with
        # a D edge, so the crossing sense differs by edge type.
        sense = step.sign * (-1 if etype == "C" else 1)
        ledger.add("n0" if etype == "C" else "n1", sense)
        seq.append(step.edge.detour)
        seq.append(step.target)
    rationals = [v for v in seq if isinstance(v, Frac)]
    return rationals, ledger


def m_form(path: TypedPath) -> MForm:
    """Intersection pair of a Dt path via straightening.

    The straightened path contributes its determinant sum k as k*(alpha,
    beta); each corner-triangle crossing adds the boundary value of that
    cell: (0, -2*beta) at even vertices, (-alpha + beta, alpha - beta) at
    odd ones, (-2*beta, -2*alpha + 4*beta) for the rectangle.
    """
    rationals, ledger = straighten(path)
    k = delta_sum(rationals)
    n0, n1, n4 = ledger.counts()
    x = k - n1
    y = n1 - 2 * n4
    z = k - n1 - 2 * n0 + 4 * n4
    _check_parities(x, y, z, path)
    return MForm(x, y, z)


# Intersection contributions of a single edge, by edge class and by the
# position of -d/c for its carrying matrix [[a,b],[c,d]]: the pullback of
# the first longitude crosses the track at slope -d/c.  Values are
# (M1 alpha, M1 beta, M2 alpha, M2 beta) coefficient tuples.

def _track_contribution(etype: str, g, sign: int) -> tuple[int, int, int, int]:
    a, b, c, d = g
    if etype == "A":
        if c == 0:
            v = (0, 0, 0, 0)
        elif c * d > 0:                 # -d/c < 0
            v = (0, 1, 0, 1)
        else:                           # 0 < -d/c
            v = (0, -1, 0, -1)
    elif etype == "B":
        if c == 0:
            v = (0, 0, 0, 0)
        elif c * d > 0:
            v = (-1, 1, 0, 0)
        else:
            v = (1, -1, 0, 0)
    elif etype == "C":
        if c != 0 and c * d < 0 and abs(d) < abs(c):    # 0 < -d/c < 1
            v = (0, -2, 0, 0)
        else:
            v = (0, 0, 0, 2)
    elif etype == "D":
        if c == 0 or 2 * d + c == 0:                    # -d/c = oo or 1/2
            v = (0, 0, 1, -1)
        elif (2 * d + c) * c > 0:                       # -d/c < 1/2
            v = (-1, 1, 1, -1)
        else:                                           # -d/c > 1/2
            v = (1, -1, 1, -1)
    else:
        raise ValueError(f"unknown edge type {etype!r}")
    return tuple(sign * t for t in v)


def _track_contribution_free(g, sign: int) -> tuple[int, int, int, int]:
    """Odd diagonal of the t = 1 diagram, whose surface branches with a
    free weight n: returns (M1 beta, M1 n, M2 beta, M2 n) coefficients."""
    a, b, c, d = g
    if c * d > 0:                       # -d/c < 0: (2(beta - n), 2n)
        v = (2, -2, 0, 2)
    else:                               # 0 < -d/c: (-2n, 2(n - beta))
        v = (0, -2, -2, 2)
    return tuple(sign * t for t in v)


def m_form_edgewise(path: TypedPath):
    """Independent intersection computation summing per-edge track
    contributions.

    For Dt paths returns an MForm (checking that the two mixed
    coefficients agree).  For D1 paths the odd diagonals keep one free
    weight each and the result is a SymbolicM.
    """
    if path.kind == "Dt":
        xa = xb = ya = yb = 0
        for step in path.steps:
            da, db, ea, eb = _track_contribution(step.edge.etype, step.edge.g, step.sign)
            xa += da
            xb += db
            ya += ea
            yb += eb
        if xb != ya:
            raise RuntimeError(f"mixed coefficients differ on {path}: {xb} vs {ya}")
        form = MForm(xa, xb, yb)
        _check_parities(*form, path)
        return form
    if path.kind == "D1":
        b1 = b2 = 0
        n1: list[int] = []
        n2: list[int] = []
        for step in path.steps:
            if step.edge.etype == "A":
                da, db, ea, eb = _track_contribution("A", step.edge.g, step.sign)
                b1 += da + db          # alpha = beta at t = 1
                b2 += ea + eb
            else:
                c1, w1, c2, w2 = _track_contribution_free(step.edge.g, step.sign)
                b1 += c1
                b2 += c2
                n1.append(w1)
                n2.append(w2)
        return SymbolicM(b1, b2, tuple(n1), tuple(n2))
    raise ValueError("edgewise computation handles Dt and D1 paths")


def _d1_pushes(path: TypedPath) -> tuple[list[Frac], list[int]]:
    if path.kind != "D1":
        raise ValueError("s_form takes a D1 path")
    seq: list[Frac] = [path.start]
    senses: list[int] = []
    for step in path.steps:
        if step.edge.etype == "A":
            seq.append(step.target)
            continue
        pos = step.edge.cpair
        senses.append(1 if (step.source, step.target) == pos else -1)
        seq.append(step.edge.detour)
        seq.append(step.target)
    return seq, senses


def s_form(path: TypedPath) -> SForm:
    """One-parameter family value of a t = 1 path.

    Each odd diagonal is pushed across the triangle at the even vertex
    of its quadrilateral, adding (-2*beta + 2n, -2n) with its crossing
    sense; with P positive and N negative senses and determinant sum k
    of the straightened path, x = k - P + N and y = P + N.
    """
    seq, senses = _d1_pushes(path)
    k = delta_sum(seq)
    pos = sum(1 for s in senses if s > 0)
    neg = len(senses) - pos
    x = k - pos + neg
    y = pos + neg
    if path.start == INFINITY and isinstance(path.end, Frac):
        q = path.end.den
        if (x + y - 1 - q) % 2:
            raise RuntimeError(f"parity x + y = 1 + q mod 2 violated on {path}")
    return SForm(x, y)


def s_form_symbolic(path: TypedPath) -> SymbolicM:
    """The same push computation kept with one free weight per diagonal,
    for comparison against the edgewise sum."""
    seq, senses = _d1_pushes(path)
    k = delta_sum(seq)
    return SymbolicM(
        b1=k - 2 * sum(senses),
        b2=k,
        n1=tuple(2 * s for s in senses),
        n2=tuple(-2 * s for s in senses),
    )


def to_preferred(form, l: int):
    """Rebase a form to the preferred longitudes: both intersection
    numbers gain l times the meridian weight."""
    if isinstance(form, MForm):
        return MForm(form.x + l, form.y, form.z + l)
    if isinstance(form, SForm):
        return SForm(form.x + l, form.y)
    raise TypeError(f"cannot rebase {form!r}")


# -- slope families -------------------------------------------------------

_BRANCH_RANK = {"T": 0, "endpoint": 1, "S": 2}


@dataclass(frozen=True, order=False)
class SlopeFamily:
    """One family of boundary-slope pairs.

    branch 'T': coeffs (X, Y, Z) meaning (X + Y/t, Y*t + Z) on the stored
    t domain; branch 'S': coeffs (x, y) meaning (x + y*s, x - y*s) for s
    in [-1, 1]; branch 'endpoint': a single slope with no boundary on the
    other component, phi marking which coordinate is empty.
    """

    branch: str
    coeffs: tuple[int, ...]
    domain: tuple[str, str]
    phi: str = "none"

    def sort_key(self):
        return (_BRANCH_RANK[self.branch], self.coeffs, self.domain, self.phi)

    def slope_pair(self) -> tuple[str, str]:
        from .tables import render_family
        return render_family(self)


def _families_for_mform(form: MForm) -> list[SlopeFamily]:
    x, y, z = form
    out = []
    if x == z:
        out.append(SlopeFamily("T", (x, y, z), ("0", "inf")))
    else:
        out.append(SlopeFamily("T", (x, y, z), ("1", "inf")))
        out.append(SlopeFamily("T", (z, y, x), ("0", "1")))
    if y == 0:
        out.append(SlopeFamily("endpoint", (x,), ("inf", "inf"), phi="second"))
        out.append(SlopeFamily("endpoint", (x,), ("0", "0"), phi="first"))
    return out


@dataclass(frozen=True)
class LinkSlopes:
    """Complete slope data for one link."""

    link: TwoBridgeLink
    linking_number: int
    mforms_raw: tuple[MForm, ...]
    sforms_raw: tuple[SForm, ...]
    mforms: tuple[MForm, ...]
    sforms: tuple[SForm, ...]
    families: tuple[SlopeFamily, ...]
    diagnostics: tuple[str, ...]

    def presentation(self) -> frozenset[tuple]:
        """The families the reference tables print: one ('T', X, Y, Z)
        per intersection form and one ('S', x, y) per s family."""
        keys = {("T",) + f for f in self.mforms}
        keys |= {("S",) + f for f in self.sforms}
        return frozenset(keys)


def slope_families(link: TwoBridgeLink) -> LinkSlopes:
    """All boundary-slope families of a 2-bridge link.

    Enumerates minimal Dt paths for the t-parameterized families, both
    branches and their merge when the two constant coefficients agree,
    plus no-boundary endpoint entries where the mixed coefficient
    vanishes; minimal t = 1 paths through odd diagonals supply the s
    families.  All output is rebased to the preferred longitudes and
    deduplicated.
    """
    diagrams = Diagrams(link)
    target = link.fraction()
    l = linking_number(link)
    diagnostics: list[str] = []

    dt_paths = minimal_paths(diagrams.dt, INFINITY, target)
    mraw = sorted({m_form(p) for p in dt_paths})
    mpref = sorted({to_preferred(m, l) for m in mraw})

    d1_paths = minimal_paths(diagrams.d1, INFINITY, target)
    c_paths = [p for p in d1_paths if "C" in p.edge_types()]
    sraw = sorted({s_form(p) for p in c_paths})
    spref = sorted({to_preferred(s, l) for s in sraw})

    limits = {tuple(collapse(p, diagrams.d1).vertices()) for p in dt_paths}
    for p in c_paths:
        if tuple(p.vertices()) not in limits:
            diagnostics.append(
                f"t=1 path not a limit of any deformed minimal path: {p}")

    families: list[SlopeFamily] = []
    for form in mpref:
        families.extend(_families_for_mform(form))
        if form.y != 0:
            diagnostics.append(
                f"family {form}: slope on the second component is unbounded "
                f"as t -> inf; no endpoint entry emitted")
    for s in spref:
        families.append(SlopeFamily("S", tuple(s), ("-1", "1")))
    families.sort(key=SlopeFamily.sort_key)

    return LinkSlopes(
        link=link,
        linking_number=l,
        mforms_raw=tuple(mraw),
        sforms_raw=tuple(sraw),
        mforms=tuple(mpref),
        sforms=tuple(spref),
        families=tuple(families),
        diagnostics=tuple(diagnostics),
    )
