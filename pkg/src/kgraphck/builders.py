"""Stock k-graphs used throughout the test corpus and the CLI.

All builders go through :func:`kgraph.validate`, so their regimes are
re-checked on every construction.
"""

from itertools import product

from . import degrees as dg
from .kgraph import validate
from .skeleton import Edge, FactorizationRegime, Skeleton


def build_omega(k, m):
    """The segment category with vertices {n in N^k : n <= m} and a unique
    morphism (p, q) for p <= q; realised via its skeleton, whose squares all
    commute by endpoint arithmetic.  r(p, q) = p and s(p, q) = q."""
    m = tuple(int(x) for x in m)
    if len(m) != k or any(x < 0 for x in m):
        raise ValueError(f"m must be {k} nonnegative integers, got {m}")

    def vname(p):
        return "v" + ",".join(str(x) for x in p)

    def ename(color, p):
        return f"c{color}:" + ",".join(str(x) for x in p)

    verts = [tuple(p) for p in product(*(range(x + 1) for x in m))]
    edges = []
    for p in verts:
        for i in range(1, k + 1):
            q = dg.add(p, dg.basis(k, i))
            if dg.leq(q, m):
                edges.append(Edge(ename(i, p), i, vname(p), vname(q)))
    squares = []
    for p in verts:
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                pi, pj = dg.add(p, dg.basis(k, i)), dg.add(p, dg.basis(k, j))
                pij = dg.add(pi, dg.basis(k, j))
                if not dg.leq(pij, m):
                    continue
                # (colour-j at p)∘(colour-i at p+e_j) = (colour-i at p)∘(colour-j at p+e_i)
                squares.append(((ename(j, p), ename(i, pj)),
                                (ename(i, p), ename(j, pi))))
    skel = Skeleton(k, tuple(vname(p) for p in verts), tuple(edges))
    return validate(skel, FactorizationRegime.from_pairs(squares))


def omega_vertex(p):
    """Vertex id used by :func:`build_omega`."""
    return "v" + ",".join(str(x) for x in p)


def build_lambda_n(n, tail_len=0):
    """Cycle of n vertices carrying one solid (colour 1) and one dashed
    (colour 2) edge between consecutive vertices, plus a finite two-colour
    tail of length tail_len hanging off v_n.  Squares are the only possible
    ones, e_{i+1} f_i = f_{i+1} e_i.  The infinite tail is truncated: the
    last tail vertex emits no edges."""
    if n < 1:
        raise ValueError("cycle length must be >= 1")
    if tail_len < 0:
        raise ValueError("tail length must be >= 0")
    total = n + tail_len
    verts = tuple(f"v{i}" for i in range(1, total + 1))

    def prev(i):
        # index of the vertex the i-th edge leaves: around the cycle for
        # i <= n, straight down the tail afterwards
        return n if i == 1 else i - 1

    edges = []
    for i in range(1, total + 1):
        edges.append(Edge(f"e{i}", 1, f"v{i}", f"v{prev(i)}"))
        edges.append(Edge(f"f{i}", 2, f"v{i}", f"v{prev(i)}"))
    squares = []
    for i in range(1, total + 1):
        p = prev(i)
        squares.append(((f"e{i}", f"f{p}"), (f"f{i}", f"e{p}")))
    skel = Skeleton(2, verts, tuple(edges))
    return validate(skel, FactorizationRegime.from_pairs(squares))


def build_figure2(regime_choice="A", width=3):
    """Ladder of identical cells u_j <- u_{j+1}, each cell carrying two solid
    edges (e_j, f_j) and one dashed edge (g_j) with range u_j, capped on the
    right by a vertex carrying two solid loops and one dashed loop.

    The cap keeps the 2:1 solid/dashed in-degree pattern going forever, which
    is what makes the finite presentation locally convex; a truncation ending
    in a bare vertex cannot be (the convexity constraint propagates the 2:1
    pattern indefinitely).  The cellwise extension of the squares is uniform:
    choice "A" pairs aligned solid edges across consecutive cells, choice "B"
    pairs them crossed.

    Vertices are named v, w, u2, u3, ...; the obstruction cell whose
    equations force the weights to zero is (v, w)."""
    if regime_choice not in ("A", "B"):
        raise ValueError("regime choice must be 'A' or 'B'")
    if width < 1:
        raise ValueError("width must be >= 1")

    names = ["v", "w"] + [f"u{j}" for j in range(2, width + 1)]
    edges = []
    for j in range(width):
        edges.append(Edge(f"e{j}", 1, names[j], names[j + 1]))
        edges.append(Edge(f"f{j}", 1, names[j], names[j + 1]))
        edges.append(Edge(f"g{j}", 2, names[j], names[j + 1]))
    cap = names[width]
    edges.append(Edge("sl1", 1, cap, cap))
    edges.append(Edge("sl2", 1, cap, cap))
    edges.append(Edge("dl", 2, cap, cap))

    def solid_pair(j):
        # solid ids feeding cell j (cell edges for j < width, loops at the cap)
        return (f"e{j}", f"f{j}") if j < width else ("sl1", "sl2")

    def dashed(j):
        return f"g{j}" if j < width else "dl"

    crossed = regime_choice == "B"
    squares = []
    for j in range(width):
        s_here, s_next = solid_pair(j), solid_pair(j + 1)
        inner = (s_next[1], s_next[0]) if crossed else s_next
        squares.append(((s_here[0], dashed(j + 1)), (dashed(j), inner[0])))
        squares.append(((s_here[1], dashed(j + 1)), (dashed(j), inner[1])))
    # loops at the cap commute among themselves
    inner = ("sl2", "sl1") if crossed else ("sl1", "sl2")
    squares.append((("sl1", "dl"), ("dl", inner[0])))
    squares.append((("sl2", "dl"), ("dl", inner[1])))

    skel = Skeleton(2, tuple(names), tuple(edges))
    return validate(skel, FactorizationRegime.from_pairs(squares))


def build_cycle_1graph(n):
    """Plain 1-graph cycle of length n (for rank-1 comparisons)."""
    if n < 1:
        raise ValueError("cycle length must be >= 1")
    verts = tuple(f"v{i}" for i in range(1, n + 1))
    edges = tuple(
        Edge(f"e{i}", 1, f"v{i}", f"v{n if i == 1 else i - 1}")
        for i in range(1, n + 1)
    )
    return validate(Skeleton(1, verts, edges), FactorizationRegime(()))


def disjoint_union(g1, g2, prefixes=("a:", "b:")):
    """Disjoint union of two k-graphs of equal rank; ids get prefixed."""
    if g1.k != g2.k:
        raise ValueError("ranks differ")
    p1, p2 = prefixes

    def relabel(graph, pre):
        verts = tuple(pre + v for v in graph.skeleton.vertices)
        edges = tuple(Edge(pre + e.id, e.color, pre + e.range, pre + e.source)
                      for e in graph.skeleton.edges)
        squares = tuple(((pre + o1, pre + o2), (pre + i1, pre + i2))
                        for (o1, o2), (i1, i2) in graph.regime.squares)
        return verts, edges, squares

    v1, e1, s1 = relabel(g1, p1)
    v2, e2, s2 = relabel(g2, p2)
    skel = Skeleton(g1.k, v1 + v2, e1 + e2)
    return validate(skel, FactorizationRegime(s1 + s2))


def from_builder_spec(spec):
    """Parse "omega:k,m1,..,mk" | "lambda_n:n,tail" | "figure2:A|B[,width]"."""
    try:
        name, _, rest = spec.partition(":")
        args = rest.split(",") if rest else []
        if name == "omega":
            k = int(args[0])
            m = tuple(int(x) for x in args[1:])
            if len(m) != k:
                raise ValueError(f"omega wants {k} bounds, got {len(m)}")
            return build_omega(k, m)
        if name == "lambda_n":
            n = int(args[0])
            tail = int(args[1]) if len(args) > 1 else 0
            return build_lambda_n(n, tail)
        if name == "figure2":
            choice = args[0] if args else "A"
            width = int(args[1]) if len(args) > 1 else 3
            return build_figure2(choice, width)
        if name == "cycle1":
            return build_cycle_1graph(int(args[0]))
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad builder spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown builder {name!r}")
