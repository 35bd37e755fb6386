"""Quadrilateral chains and the three edge-path diagrams over them.

The hyperbolic plane is tiled by the images of the ideal quadrilateral
with vertices 1/0, 0/1, 1/2, 1/1 under the determinant-one matrices with
even lower-left entry.  A quadrilateral is stored as one such matrix g:
its columns give two opposite ideal vertices a/c and b/d, and the other
two vertices are (a+b)/(c+d) and (a+2b)/(c+2d).  The two vertices with
even denominator (1/0 counts as even) span one diagonal, the two odd
ones the other.  Between 1/0 and any p/q there is a unique minimal chain
of quadrilaterals, found here by walking across the side whose boundary
arc contains p/q.

Three diagrams are built over a chain:

* D1: the sides of every quadrilateral plus the diagonal joining its two
  odd vertices; each quadrilateral is cut into two triangle cells.
* D0: the same sides plus the opposite (even) diagonal; again two
  triangles per quadrilateral.
* Dt: the deformed diagram.  Every side acquires a midpoint vertex and
  each quadrilateral an inscribed rectangle through its four midpoints,
  giving five cells per quadrilateral: four corner triangles and the
  rectangle.  Edges fall into four oriented classes:

    A  even vertex -> midpoint        (half of a side)
    B  odd vertex -> midpoint         (the other half)
    C  rectangle side cutting off an even vertex
    D  rectangle side cutting off an odd vertex

An edge path is minimal if no two consecutive edges lie in a common
cell.  Minimal paths from 1/0 to p/q index the spanning surfaces, and
every one of them stays inside the chain, so a depth-first search over
the chain complex enumerates them all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .arith import Frac, GMat, INFINITY, TwoBridgeLink

ROT = GMat.make(1, -1, 2, -1)    # half-turn of the base quadrilateral
SHIFT = GMat.make(1, 1, 0, 1)    # next frame around the vertex 1/0


class Corner(NamedTuple):
    """Rectangle vertex sitting on a quadrilateral side, shared with the
    neighbouring quadrilateral across that side."""

    lo: Frac
    hi: Frac

    @staticmethod
    def on_side(u: Frac, v: Frac) -> "Corner":
        return Corner(*sorted((u, v), key=Frac.key))

    def __str__(self) -> str:
        return f"mid({self.lo},{self.hi})"


Vertex = Frac | Corner


def vertex_key(v: Vertex):
    if isinstance(v, Frac):
        return (0, v.key(), v.key())
    return (1, v.lo.key(), v.hi.key())


class Quad(NamedTuple):
    """One quadrilateral of the tiling, framed by a matrix with even b
    (each quadrilateral has exactly one such frame up to sign)."""

    g: GMat

    @property
    def p1(self) -> Frac:          # even denominator
        return self.g.col1()

    @property
    def p2(self) -> Frac:          # odd denominator
        return self.g.col2()

    @property
    def p3(self) -> Frac:          # odd denominator
        a, b, c, d = self.g
        return Frac.make(a + b, c + d)

    @property
    def p4(self) -> Frac:          # even denominator
        a, b, c, d = self.g
        return Frac.make(a + 2 * b, c + 2 * d)

    def vertices(self) -> tuple[Frac, Frac, Frac, Frac]:
        return (self.p1, self.p2, self.p3, self.p4)

    def sides(self) -> tuple[tuple[Frac, Frac], ...]:
        p1, p2, p3, p4 = self.vertices()
        return ((p1, p2), (p2, p4), (p4, p3), (p3, p1))


def _even_frame(g: GMat) -> GMat:
    return g if g.b % 2 == 0 else g * ROT


def _far_quad(even: Frac, odd: Frac, current: frozenset[Frac]) -> Quad:
    """The quadrilateral across the side {even, odd} from the current one."""
    det = even.num * odd.den - odd.num * even.den
    assert det in (1, -1), (even, odd)
    near = GMat.make(even.num, det * odd.num, even.den, det * odd.den)
    far = GMat.make(det * even.num - 2 * odd.num, odd.num,
                    det * even.den - 2 * odd.den, odd.den)
    for cand in (near, far):
        quad = Quad(_even_frame(cand))
        if frozenset(quad.vertices()) != current:
            return quad
    raise RuntimeError(f"no quadrilateral across {even},{odd} away from {current}")


def quad_chain(link: TwoBridgeLink) -> list[Quad]:
    """The minimal chain of quadrilaterals from 1/0 to p/q.

    Starts at the base quadrilateral and repeatedly crosses the side
    whose boundary arc contains p/q, stopping once p/q is a vertex.
    """
    target = link.fraction()
    tval = target.key()
    chain = [Quad(GMat.make(1, 0, 0, 1))]
    while target not in chain[-1].vertices():
        quad = chain[-1]
        # Vertices in circular order; consecutive ones span the sides,
        # and the target lies in exactly one side's boundary arc.  Only
        # the base quadrilateral contains 1/0, which sorts last, and the
        # target never sits beyond it.
        verts = sorted(quad.vertices(), key=Frac.key)
        crossed = None
        for u, v in zip(verts, verts[1:]):
            if v.is_infinite:
                continue
            if u.key() < tval < v.key():
                crossed = (u, v)
                break
        assert crossed is not None, (link, quad)
        u, v = crossed
        even, odd = (u, v) if u.den % 2 == 0 else (v, u)
        nxt = _far_quad(even, odd, frozenset(quad.vertices()))
        chain.append(nxt)
    return chain


class Edge(NamedTuple):
    """Oriented edge of a diagram.

    ``g`` carries the reference edge of the class onto this edge; a path
    traverses the edge with sign +1 (tail to head) or -1.  ``detour`` is
    the vertex the edge can be pushed across when eliminating it, and
    ``cpair`` records, for the odd diagonals of D1, the (tail, head) of
    the positive pushing sense.
    """

    etype: str
    tail: Vertex
    head: Vertex
    g: GMat
    detour: Frac | None = None
    cpair: tuple[Frac, Frac] | None = None

    def __str__(self) -> str:
        return f"{self.etype}:{self.tail}->{self.head}"


class Cell(NamedTuple):
    quad: int
    label: str


class Step(NamedTuple):
    """One traversed edge of a path."""

    edge: Edge
    sign: int

    @property
    def source(self) -> Vertex:
        return self.edge.tail if self.sign > 0 else self.edge.head

    @property
    def target(self) -> Vertex:
        return self.edge.head if self.sign > 0 else self.edge.tail


@dataclass(frozen=True)
class TypedPath:
    """A vertex-to-vertex edge path in one of the three diagrams."""

    kind: str                  # 'Dt', 'D1' or 'D0'
    steps: tuple[Step, ...]

    @property
    def start(self) -> Vertex:
        return self.steps[0].source

    @property
    def end(self) -> Vertex:
        return self.steps[-1].target

    def vertices(self) -> list[Vertex]:
        out = [self.start]
        out.extend(step.target for step in self.steps)
        return out

    def rationals(self) -> list[Frac]:
        return [v for v in self.vertices() if isinstance(v, Frac)]

    def edge_types(self) -> str:
        return "".join(step.edge.etype for step in self.steps)

    def __str__(self) -> str:
        bits = [str(self.start)]
        for step in self.steps:
            bits.append(f"[{step.edge.etype}{'+' if step.sign > 0 else '-'}]")
            bits.append(str(step.target))
        return " ".join(bits)


_TYPE_RANK = {"A": 0, "B": 1, "C": 2, "D": 3}


class DiagramComplex:
    """Vertices, typed edges and 2-cells of one diagram over a chain."""

    def __init__(self, kind: str, chain: list[Quad]):
        self.kind = kind
        self.chain = chain
        self.edges: list[Edge] = []
        self.cells: list[Cell] = []
        self._edge_cells: list[set[int]] = []
        self._by_pair: dict[tuple, int] = {}
        self._adj: dict[Vertex, list[tuple[int, int]]] = {}

    # -- construction ------------------------------------------------

    def _add_edge(self, edge: Edge) -> int:
        pair = tuple(sorted((edge.tail, edge.head), key=vertex_key))
        key = (pair, edge.etype)
        if key in self._by_pair:
            idx = self._by_pair[key]
            if self.edges[idx] != edge:
                raise RuntimeError(
                    f"inconsistent edge rebuild: {self.edges[idx]} vs {edge}")
            return idx
        idx = len(self.edges)
        self.edges.append(edge)
        self._edge_cells.append(set())
        self._by_pair[key] = idx
        self._adj.setdefault(edge.tail, []).append((idx, 1))
        self._adj.setdefault(edge.head, []).append((idx, -1))
        return idx

    def _add_cell(self, quad: int, label: str, edge_ids: Iterable[int]) -> None:
        cid = len(self.cells)
        self.cells.append(Cell(quad, label))
        for eid in edge_ids:
            self._edge_cells[eid].add(cid)

    def _freeze(self) -> None:
        self.edge_cells = [frozenset(s) for s in self._edge_cells]
        self.adj = {}
        for v, items in self._adj.items():
            def far(item):
                idx, sign = item
                e = self.edges[idx]
                other = e.head if sign > 0 else e.tail
                return (_TYPE_RANK[e.etype], vertex_key(other), sign)
            self.adj[v] = tuple(sorted(items, key=far))
        # No two distinct edges of one diagram join the same vertex pair,
        # so the pair alone identifies an edge.
        self._pair_index = {}
        for (pair, _etype), idx in self._by_pair.items():
            if pair in self._pair_index:
                raise RuntimeError(f"two edges share the endpoints {pair}")
            self._pair_index[pair] = idx

    # -- queries -----------------------------------------------------

    def vertices(self) -> list[Vertex]:
        return sorted(self._adj, key=vertex_key)

    def rational_vertices(self) -> list[Frac]:
        return [v for v in self.vertices() if isinstance(v, Frac)]

    def edge_between(self, u: Vertex, v: Vertex) -> tuple[Edge, int]:
        """The unique edge joining u and v, with the sign of the u -> v
        traversal."""
        pair = tuple(sorted((u, v), key=vertex_key))
        if pair not in self._pair_index:
            raise KeyError(f"no edge between {u} and {v}")
        edge = self.edges[self._pair_index[pair]]
        return edge, 1 if edge.tail == u else -1


def _side_matrix(u: Frac, v: Frac) -> GMat:
    """Determinant-one matrix with first column the even-denominator
    endpoint; it carries the reference side onto {u, v}."""
    even, odd = (u, v) if u.den % 2 == 0 else (v, u)
    det = even.num * odd.den - odd.num * even.den
    return GMat.make(even.num, det * odd.num, even.den, det * odd.den)


def _build_dt(cx: DiagramComplex) -> None:
    for qi, quad in enumerate(cx.chain):
        p1, p2, p3, p4 = quad.vertices()
        m12 = Corner.on_side(p1, p2)
        m24 = Corner.on_side(p2, p4)
        m43 = Corner.on_side(p4, p3)
        m31 = Corner.on_side(p3, p1)
        g = quad.g
        a1 = cx._add_edge(Edge("A", p1, m12, g))
        a2 = cx._add_edge(Edge("A", p1, m31, g * SHIFT))
        a3 = cx._add_edge(Edge("A", p4, m43, g * ROT))
        a4 = cx._add_edge(Edge("A", p4, m24, g * ROT * SHIFT))
        b1 = cx._add_edge(Edge("B", p2, m12, g))
        b2 = cx._add_edge(Edge("B", p3, m31, g * SHIFT))
        b3 = cx._add_edge(Edge("B", p3, m43, g * ROT))
        b4 = cx._add_edge(Edge("B", p2, m24, g * ROT * SHIFT))
        cu = cx._add_edge(Edge("C", m31, m12, g, detour=p1))
        cl = cx._add_edge(Edge("C", m24, m43, g * ROT, detour=p4))
        dl = cx._add_edge(Edge("D", m24, m12, g, detour=p2))
        dr = cx._add_edge(Edge("D", m31, m43, g * ROT, detour=p3))
        cx._add_cell(qi, f"corner {p1}", (a1, cu, a2))
        cx._add_cell(qi, f"corner {p4}", (a3, cl, a4))
        cx._add_cell(qi, f"corner {p2}", (b1, dl, b4))
        cx._add_cell(qi, f"corner {p3}", (b2, dr, b3))
        cx._add_cell(qi, "rectangle", (cu, cl, dl, dr))


def _build_d1(cx: DiagramComplex) -> None:
    for qi, quad in enumerate(cx.chain):
        p1, p2, p3, p4 = quad.vertices()
        side = {}
        for u, v in quad.sides():
            even, odd = (u, v) if u.den % 2 == 0 else (v, u)
            side[(u, v)] = cx._add_edge(Edge("A", even, odd, _side_matrix(u, v)))
        a, b, c, d = quad.g
        diag = cx._add_edge(Edge("C", p3, p2, GMat.make(a + b, b, c + d, d),
                                 detour=p1, cpair=(p2, p3)))
        cx._add_cell(qi, f"triangle {p1}", (side[(p1, p2)], diag, side[(p3, p1)]))
        cx._add_cell(qi, f"triangle {p4}", (side[(p2, p4)], side[(p4, p3)], diag))


def _build_d0(cx: DiagramComplex) -> None:
    for qi, quad in enumerate(cx.chain):
        p1, p2, p3, p4 = quad.vertices()
        side = {}
        for u, v in quad.sides():
            even, odd = (u, v) if u.den % 2 == 0 else (v, u)
            side[(u, v)] = cx._add_edge(Edge("B", odd, even, _side_matrix(u, v)))
        diag = cx._add_edge(Edge("D", p1, p4, quad.g))
        cx._add_cell(qi, f"triangle {p2}", (side[(p1, p2)], side[(p2, p4)], diag))
        cx._add_cell(qi, f"triangle {p3}", (side[(p4, p3)], side[(p3, p1)], diag))


_BUILDERS = {"Dt": _build_dt, "D1": _build_d1, "D0": _build_d0}


def build_diagram(chain: list[Quad], kind: str) -> DiagramComplex:
    """Build the D0, D1 or Dt complex over a chain of quadrilaterals."""
    if kind not in _BUILDERS:
        raise ValueError(f"unknown diagram kind {kind!r}")
    cx = DiagramComplex(kind, chain)
    _BUILDERS[kind](cx)
    cx._freeze()
    return cx


def minimal_paths(cx: DiagramComplex, start: Frac, end: Frac) -> list[TypedPath]:
    """All minimal edge paths from start to end.

    Depth-first search; a step is allowed when the new edge shares no
    cell with the previous one.  Paths never revisit a vertex.
    """
    if start not in cx.adj or end not in cx.adj:
        raise ValueError(f"{start} or {end} is not a vertex of the complex")
    found: list[TypedPath] = []
    steps: list[Step] = []

    def walk(vertex: Vertex, visited: frozenset[Vertex], last_cells: frozenset[int]):
        if vertex == end:
            found.append(TypedPath(cx.kind, tuple(steps)))
            return
        for idx, sign in cx.adj[vertex]:
            edge = cx.edges[idx]
            nxt = edge.head if sign > 0 else edge.tail
            if nxt in visited:
                continue
            cells = cx.edge_cells[idx]
            if last_cells & cells:
                continue
            steps.append(Step(edge, sign))
            walk(nxt, visited | {nxt}, cells)
            steps.pop()

    walk(start, frozenset({start}), frozenset())
    return found


def is_minimal(cx: DiagramComplex, path: TypedPath) -> bool:
    prev: frozenset[int] | None = None
    for step in path.steps:
        idx = cx._by_pair[(tuple(sorted((step.edge.tail, step.edge.head),
                                        key=vertex_key)), step.edge.etype)]
        cells = cx.edge_cells[idx]
        if prev is not None and prev & cells:
            return False
        prev = cells
    return True


def collapse(path: TypedPath, target: DiagramComplex) -> TypedPath:
    """Limit of a Dt path in D1 or D0.

    Midpoints slide to the odd endpoint of their side in D1 and to the
    even endpoint in D0; edges whose endpoints merge disappear.
    """
    if path.kind != "Dt":
        raise ValueError("only Dt paths collapse")
    if target.kind not in ("D1", "D0"):
        raise ValueError("collapse target must be D1 or D0")
    parity = 1 if target.kind == "D1" else 0

    def project(v: Vertex) -> Frac:
        if isinstance(v, Frac):
            return v
        return v.lo if v.lo.den % 2 == parity else v.hi

    steps: list[Step] = []
    for step in path.steps:
        src, dst = project(step.source), project(step.target)
        if src == dst:
            continue
        edge, sign = target.edge_between(src, dst)
        steps.append(Step(edge, sign))
    return TypedPath(target.kind, tuple(steps))


class Diagrams:
    """Chain plus all three complexes for one link, built on demand."""

    def __init__(self, link: TwoBridgeLink):
        self.link = link
        self.chain = quad_chain(link)
        self._built: dict[str, DiagramComplex] = {}

    def get(self, kind: str) -> DiagramComplex:
        if kind not in self._built:
            self._built[kind] = build_diagram(self.chain, kind)
        return self._built[kind]

    @property
    def dt(self) -> DiagramComplex:
        return self.get("Dt")

    @property
    def d1(self) -> DiagramComplex:
        return self.get("D1")

    @property
    def d0(self) -> DiagramComplex:
        return self.get("D0")
