"""Validated higher-rank graphs with path arithmetic.

A k-graph is presented by a coloured skeleton plus an allowable
factorisation regime; for k >= 3 an associativity (cube) condition on the
squares is also required.  Paths are kept in a normal form: the edge
sequence is sorted into colour blocks (colour 1 first), each block in
composition order.  Uniqueness of factorisations makes normal forms a
complete invariant, so path equality is tuple equality.

Everything here is immutable after construction and all operations are
pure functions of their inputs.
"""

from dataclasses import dataclass

from . import degrees as dg
from .errors import (
    AssociativityFailure,
    DegreeOutOfRange,
    DuplicateSquare,
    MismatchedEndpoints,
    MissingSquare,
    NotComposable,
    UnknownVertex,
)


@dataclass(frozen=True)
class Path:
    """Normal-form morphism: degree-0 paths are vertices, the others carry
    their colour-sorted edge id sequence (composition reads left to right,
    i.e. edges[0] is the factor at the range end)."""

    range: str
    source: str
    degree: tuple
    edges: tuple

    @property
    def is_vertex(self):
        return not self.edges

    def __repr__(self):
        if self.is_vertex:
            return f"Path({self.range})"
        return f"Path({'.'.join(self.edges)})"


class KGraph:
    """A finite k-graph.  Build via :func:`validate`, never directly."""

    def __init__(self, skeleton, regime, swap, flags):
        self.skeleton = skeleton
        self.regime = regime
        self.k = skeleton.k
        self.vertices = skeleton.vertices
        self._vertex_set = set(skeleton.vertices)
        self._edges = skeleton.edge_map()
        self._swap = swap  # (eid, fid) -> (fid2, eid2) for ef = f2 e2, both orientations
        self._in = {}   # (v, color) -> tuple of edge ids with range v        (vΛ^{e_i})
        self._out = {}  # (v, color) -> tuple of edge ids with source v       (Λ^{e_i} v)
        for v in skeleton.vertices:
            for c in range(1, self.k + 1):
                self._in[(v, c)] = ()
                self._out[(v, c)] = ()
        for e in skeleton.edges:
            self._in[(e.range, e.color)] += (e.id,)
            self._out[(e.source, e.color)] += (e.id,)
        self.locally_convex = flags["locally_convex"]
        self.no_sinks = flags["no_sinks"]
        self.no_sources = flags["no_sources"]
        self.locally_finite = flags["locally_finite"]
        self._range_paths_cache = {}

    # --- basic accessors ----------------------------------------------------

    def edge(self, eid):
        return self._edges[eid]

    def edge_color(self, eid):
        return self._edges[eid].color

    def in_edges(self, v, color):
        """vΛ^{e_color}: edges with range v."""
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        return self._in[(v, color)]

    def out_edges(self, v, color):
        """Λ^{e_color} v: edges with source v."""
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        return self._out[(v, color)]

    def vertex_path(self, v):
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        return Path(v, v, dg.zero(self.k), ())

    def edge_path(self, eid):
        e = self._edges[eid]
        return Path(e.range, e.source, dg.basis(self.k, e.color), (eid,))

    # --- normal form ----------------------------------------------------------

    def _normalize(self, seq):
        """Sort a composable edge sequence into colour blocks by adjacent
        transpositions through the factorisation squares (gnome sort; each
        swap removes one colour inversion, so this terminates)."""
        seq = list(seq)
        i = 1
        while i < len(seq):
            a, b = seq[i - 1], seq[i]
            if self.edge_color(a) <= self.edge_color(b):
                i += 1
            else:
                seq[i - 1], seq[i] = self._swap[(a, b)]
                i = max(i - 1, 1)
        return tuple(seq)

    def _path_from_edges(self, seq, range_hint=None):
        if not seq:
            return self.vertex_path(range_hint)
        norm = self._normalize(seq)
        deg = [0] * self.k
        for eid in norm:
            deg[self.edge_color(eid) - 1] += 1
        return Path(self._edges[norm[0]].range, self._edges[norm[-1]].source,
                    tuple(deg), norm)

    # --- category operations ----------------------------------------------------

    def compose(self, p, q):
        """p∘q, defined when s(p) = r(q)."""
        if p.source != q.range:
            raise NotComposable(f"s({p!r}) = {p.source} != r({q!r}) = {q.range}")
        if p.is_vertex:
            return q
        if q.is_vertex:
            return p
        return self._path_from_edges(p.edges + q.edges)

    def compose_many(self, paths):
        out = paths[0]
        for p in paths[1:]:
            out = self.compose(out, p)
        return out

    def factor(self, p, m, n):
        """The unique segment p(m, n) for 0 <= m <= n <= d(p)."""
        if not (dg.is_nonneg(m) and dg.leq(m, n) and dg.leq(n, p.degree)):
            raise DegreeOutOfRange(f"need 0 <= {m} <= {n} <= {p.degree}")
        rest = list(p.edges)
        head = self._peel(rest, m)
        mid = self._peel(rest, dg.sub(n, m))
        if mid:
            rng, src = self._edges[mid[0]].range, self._edges[mid[-1]].source
        elif head:
            rng = src = self._edges[head[-1]].source
        elif rest:
            rng = src = self._edges[rest[0]].range
        else:
            rng = src = p.range
        return Path(rng, src, dg.sub(n, m), tuple(mid))

    def _peel(self, seq, m):
        """Remove a degree-m prefix from the (mutable) edge sequence, colour
        by colour; the popped edges already form a normal-form sequence."""
        popped = []
        for color in range(1, self.k + 1):
            for _ in range(m[color - 1]):
                t = next(i for i, eid in enumerate(seq)
                         if self.edge_color(eid) == color)
                while t > 0:
                    seq[t - 1], seq[t] = self._swap[(seq[t - 1], seq[t])]
                    t -= 1
                popped.append(seq.pop(0))
        return popped

    def segment_range_vertex(self, p, m):
        """The vertex p(m) at position m along p."""
        return self.factor(p, m, m).range

    # --- enumeration ---------------------------------------------------------

    def paths_with_range(self, v, n):
        """vΛ^n in normal form."""
        key = (v, n)
        cached = self._range_paths_cache.get(key)
        if cached is not None:
            return cached
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        if n == dg.zero(self.k):
            result = (self.vertex_path(v),)
        else:
            color = next(i + 1 for i, c in enumerate(n) if c > 0)
            rest_deg = dg.sub(n, dg.basis(self.k, color))
            out = []
            for eid in self._in[(v, color)]:
                e = self._edges[eid]
                for tail in self.paths_with_range(e.source, rest_deg):
                    out.append(Path(v, tail.source, n, (eid,) + tail.edges))
            result = tuple(out)
        self._range_paths_cache[key] = result
        return result

    def paths_with_source(self, v, n):
        """Λ^n v in normal form."""
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        if n == dg.zero(self.k):
            return (self.vertex_path(v),)
        color = max(i + 1 for i, c in enumerate(n) if c > 0)
        rest_deg = dg.sub(n, dg.basis(self.k, color))
        out = []
        for eid in self._out[(v, color)]:
            e = self._edges[eid]
            for head in self.paths_with_source(e.range, rest_deg):
                out.append(Path(head.range, v, n, head.edges + (eid,)))
        return tuple(out)

    def lambda_le(self, v, n, mode="edge"):
        """vΛ^{<=n}: paths of degree <= n with range v whose degree is as
        large as possible.

        mode="edge" uses the edge-level criterion (for every colour i with
        d(λ)_i < n_i the source receives no colour-i edge); mode="literal"
        searches exhaustively for a nontrivial extension within n.  The two
        agree on locally convex graphs and are cross-checked in the tests.
        """
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        out = []
        for m in dg.box(n):
            for p in self.paths_with_range(v, m):
                if mode == "edge":
                    maximal = all(
                        not self._in[(p.source, i + 1)]
                        for i in range(self.k) if m[i] < n[i]
                    )
                else:
                    maximal = not self._has_extension_within(p, n)
                if maximal:
                    out.append(p)
        return tuple(out)

    def _has_extension_within(self, p, n):
        room = dg.sub(n, p.degree)
        for m in dg.box(room):
            if m == dg.zero(self.k):
                continue
            if self.paths_with_range(p.source, m):
                return True
        return False

    # --- misc -----------------------------------------------------------------

    def nonempty_degrees(self, bound=None):
        """All degrees d with Λ^d nonempty, found by lattice BFS.  On cyclic
        graphs a componentwise bound must be supplied."""
        if bound is None and self.has_cycle():
            raise ValueError("cyclic graph: degree enumeration needs a bound")
        live = {dg.zero(self.k)}
        frontier = [dg.zero(self.k)]
        while frontier:
            nxt = []
            for d in frontier:
                for i in range(1, self.k + 1):
                    d2 = dg.add(d, dg.basis(self.k, i))
                    if d2 in live:
                        continue
                    if bound is not None and not dg.leq(d2, bound):
                        continue
                    if any(self.paths_with_range(v, d2) for v in self.vertices):
                        live.add(d2)
                        nxt.append(d2)
            frontier = nxt
        return sorted(live)

    def has_cycle(self):
        """True when the skeleton (all colours) contains a directed cycle,
        i.e. path degrees are unbounded."""
        succ = {v: [] for v in self.vertices}
        for e in self.skeleton.edges:
            succ[e.range].append(e.source)  # extend paths at the source end
        state = {v: 0 for v in self.vertices}

        def visit(v):
            state[v] = 1
            for w in succ[v]:
                if state[w] == 1:
                    return True
                if state[w] == 0 and visit(w):
                    return True
            state[v] = 2
            return False

        return any(state[v] == 0 and visit(v) for v in self.vertices)

    def __repr__(self):
        return (f"KGraph(k={self.k}, |V|={len(self.vertices)}, "
                f"|E|={len(self.skeleton.edges)})")


# --- validation ---------------------------------------------------------------


def validate(skeleton, regime):
    """Check allowability (each bicoloured composable pair in exactly one
    square, endpoints compatible) and, for k >= 3, the cube condition; return
    the KGraph with its cached predicates."""
    edges = skeleton.edge_map()
    swap = {}

    def register(key, value):
        if key in swap:
            raise DuplicateSquare(f"pair {key} appears in more than one square")
        swap[key] = value

    for (o1, o2), (i1, i2) in regime.squares:
        for eid in (o1, o2, i1, i2):
            if eid not in edges:
                raise MismatchedEndpoints(f"square references unknown edge {eid!r}")
        e, f, f2, e2 = edges[o1], edges[o2], edges[i1], edges[i2]
        if e.color == f.color:
            raise MismatchedEndpoints(f"square ({o1},{o2}) is not bicoloured")
        if f2.color != f.color or e2.color != e.color:
            raise MismatchedEndpoints(f"square ({o1},{o2}) permutes colours incorrectly")
        if e.source != f.range:
            raise MismatchedEndpoints(f"outer pair ({o1},{o2}) not composable")
        if f2.source != e2.range:
            raise MismatchedEndpoints(f"inner pair ({i1},{i2}) not composable")
        if f2.range != e.range or e2.source != f.source:
            raise MismatchedEndpoints(
                f"square ({o1},{o2}) = ({i1},{i2}) does not preserve endpoints")
        register((o1, o2), (i1, i2))
        register((i1, i2), (o1, o2))

    for e in skeleton.edges:
        for f in skeleton.edges:
            if e.color != f.color and e.source == f.range:
                if (e.id, f.id) not in swap:
                    raise MissingSquare(f"no square for composable pair ({e.id},{f.id})")

    if skeleton.k >= 3:
        _check_cubes(skeleton, edges, swap)

    flags = {
        "locally_convex": _is_locally_convex(skeleton),
        "no_sinks": _has_no_sinks(skeleton),
        "no_sources": _has_no_sources(skeleton),
        "locally_finite": True,  # automatic for finite skeletons
    }
    return KGraph(skeleton, regime, swap, flags)


def _check_cubes(skeleton, edges, swap):
    """For every tricolour composable edge triple, the two adjacent-swap
    routes reversing the triple must agree."""
    by_range = {}
    for e in skeleton.edges:
        by_range.setdefault(e.range, []).append(e)

    def swap2(x, y):
        return swap[(x.id, y.id)]

    for a in skeleton.edges:
        for b in by_range.get(a.source, ()):
            if b.color == a.color:
                continue
            for c in by_range.get(b.source, ()):
                if c.color in (a.color, b.color):
                    continue
                # route 1: swap (a,b), (·,c), then the leading pair
                b1, a1 = swap2(a, b)
                c1, a2 = swap2(edges[a1], c)
                c2, b2 = swap2(edges[b1], edges[c1])
                # route 2: swap (b,c), (a,·), then the trailing pair
                c3, b3 = swap2(b, c)
                c4, a3 = swap2(a, edges[c3])
                b4, a4 = swap2(edges[a3], edges[b3])
                if (c2, b2, a2) != (c4, b4, a4):
                    raise AssociativityFailure(
                        f"cube condition fails on triple ({a.id},{b.id},{c.id})",
                        triple=(a.id, b.id, c.id))


def _is_locally_convex(skeleton):
    in_edges = {}
    for e in skeleton.edges:
        in_edges.setdefault((e.range, e.color), []).append(e)
    for e in skeleton.edges:
        for j in range(1, skeleton.k + 1):
            if j == e.color:
                continue
            if not in_edges.get((e.source, j)) and in_edges.get((e.range, j)):
                return False
    return True


def _has_no_sinks(skeleton):
    out = {(e.source, e.color) for e in skeleton.edges}
    return all((v, c) in out
               for v in skeleton.vertices for c in range(1, skeleton.k + 1))


def _has_no_sources(skeleton):
    ins = {(e.range, e.color) for e in skeleton.edges}
    return all((v, c) in ins
               for v in skeleton.vertices for c in range(1, skeleton.k + 1))
