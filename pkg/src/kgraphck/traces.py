"""Graph traces, their obstructions, and ends.

A graph trace is a nonnegative vertex weighting g with

    g(v) = sum over lam in vLambda^{<=n} of g(s(lam))   for all n,

faithful when strictly positive.  Existence of a faithful trace is decided
by an exact rational linear program over the edge-level equations (which
suffice on locally convex graphs); the diagnostics identify vertices forced
to zero in every invariant weighting, with a replayable Farkas certificate
when even the normalised system is empty.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import degrees as dg
from .errors import (
    MissingVertexValue,
    NotLocallyConvex,
    SufficientConditionUnmet,
)
from .simplex import solve_lp

F0 = Fraction(0)
F1 = Fraction(1)


@dataclass
class GraphTrace:
    graph: object
    values: dict                       # vertex -> Fraction >= 0
    verified: bool = False
    faithful: bool = field(init=False)

    def __post_init__(self):
        self.values = {v: Fraction(x) for v, x in self.values.items()}
        missing = [v for v in self.graph.vertices if v not in self.values]
        if missing:
            raise MissingVertexValue(f"no value for vertices {missing}")
        if any(x < 0 for x in self.values.values()):
            raise ValueError("graph traces are nonnegative")
        self.faithful = all(x > 0 for x in self.values.values())

    def scaled(self, c):
        return GraphTrace(self.graph,
                          {v: x * Fraction(c) for v, x in self.values.items()},
                          verified=self.verified)


@dataclass
class LoopWitness:
    loop_edges: tuple    # normal-form edge ids of the loop
    entrance: str        # edge id of the distinct same-colour entrance
    color: int


@dataclass
class ObstructionReport:
    kind: str                        # "LoopWithEntrance" | "LinearInfeasibility" | "ForcedZeroVertex"
    forced_zero: tuple = ()          # vertices with g = 0 in every solution
    loop: LoopWitness | None = None
    farkas: list | None = None       # certificate rows for the normalised system
    certificate_rows: list | None = None  # row labels matching the certificate


def is_graph_trace(values, graph, mode="edge", upto=None):
    """Check the defining equation.

    mode="edge" checks g(v) = sum over e in vLambda^{e_i} of g(s(e)) for
    every colour with vLambda^{e_i} nonempty (sufficient on locally convex
    graphs); mode="full" checks the equation for every degree <= upto.
    """
    vals = {v: Fraction(x) for v, x in values.items()}
    for v in graph.vertices:
        if v not in vals:
            raise MissingVertexValue(v)
    if mode == "edge":
        for v in graph.vertices:
            for color in range(1, graph.k + 1):
                ins = graph.in_edges(v, color)
                if ins and vals[v] != sum(vals[graph.edge(e).source] for e in ins):
                    return False
        return True
    if mode != "full":
        raise ValueError("mode must be 'edge' or 'full'")
    if upto is None:
        upto = (2,) * graph.k
    for v in graph.vertices:
        for n in dg.box(upto):
            want = sum((vals[p.source] for p in graph.lambda_le(v, n)), F0)
            if vals[v] != want:
                return False
    return True


def _edge_level_system(graph, extra_cols=0):
    """Rows of the invariance system over columns (g_v for each vertex) plus
    extra_cols zero columns; returns (rows, labels)."""
    verts = list(graph.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    rows, labels = [], []
    for v in verts:
        for color in range(1, graph.k + 1):
            ins = graph.in_edges(v, color)
            if not ins:
                continue
            row = [F0] * (len(verts) + extra_cols)
            row[idx[v]] += F1
            for e in ins:
                row[idx[graph.edge(e).source]] -= F1
            rows.append(row)
            labels.append(f"g({v}) = sum of g over colour-{color} in-edge sources")
    return rows, labels


def find_faithful_graph_trace(graph):
    """Return a faithful GraphTrace (normalised to total mass 1) or an
    ObstructionReport naming every vertex that is zero in all invariant
    weightings.  Exact rational arithmetic throughout."""
    if not graph.locally_convex:
        raise NotLocallyConvex("faithful-trace search needs a locally convex graph")
    verts = list(graph.vertices)
    nv = len(verts)

    # max t  s.t.  invariance rows; sum g = 1; g_v - t - s_v = 0
    # columns: g (nv) | t | s (nv)
    ncols = nv + 1 + nv
    rows, labels = _edge_level_system(graph, extra_cols=1 + nv)
    b = [F0] * len(rows)
    norm_row = [F1] * nv + [F0] * (1 + nv)
    rows.append(norm_row)
    labels.append("total mass = 1")
    b.append(F1)
    for i in range(nv):
        row = [F0] * ncols
        row[i] = F1
        row[nv] = -F1
        row[nv + 1 + i] = -F1
        rows.append(row)
        labels.append(f"g({verts[i]}) >= t")
        b.append(F0)
    cost = [F0] * ncols
    cost[nv] = F1
    res = solve_lp(cost, rows, b)

    if res.status == "optimal" and res.objective > 0:
        values = {verts[i]: res.solution[i] for i in range(nv)}
        return GraphTrace(graph, values, verified=is_graph_trace(values, graph))

    forced, farkas, cert_labels = [], None, None
    base_rows, _ = _edge_level_system(graph, extra_cols=1)
    for i, v in enumerate(verts):
        # max g_v over the invariance cone intersected with total mass <= 1
        rows_v = [row[:] for row in base_rows]
        rows_v.append([F1] * nv + [F1])  # sum g + slack = 1
        b_v = [F0] * len(base_rows) + [F1]
        cost_v = [F0] * (nv + 1)
        cost_v[i] = F1
        r = solve_lp(cost_v, rows_v, b_v)
        assert r.status == "optimal"  # g = 0 is always feasible here
        if r.objective == 0:
            forced.append(v)

    if res.status == "infeasible":
        farkas = res.farkas
        cert_labels = labels
    return ObstructionReport("ForcedZeroVertex", forced_zero=tuple(forced),
                             farkas=farkas, certificate_rows=cert_labels)


def detect_loop_with_entrance(graph, degree_bound=None):
    """Search for a loop lam (r = s, d >= e_i) together with a same-colour
    edge e into r(lam) distinct from lam(0, e_i).  Bound defaults to
    |vertices| steps per colour, enough to reach any loop."""
    if degree_bound is None:
        degree_bound = (len(graph.vertices),) * graph.k
    zero = dg.zero(graph.k)
    for v in graph.vertices:
        for n in dg.box(degree_bound):
            if n == zero:
                continue
            for lam in graph.paths_with_range(v, n):
                if lam.source != v:
                    continue
                for i in range(1, graph.k + 1):
                    if n[i - 1] == 0:
                        continue
                    first = graph.factor(lam, zero, dg.basis(graph.k, i))
                    for eid in graph.in_edges(v, i):
                        if (eid,) != first.edges:
                            return ObstructionReport(
                                "LoopWithEntrance",
                                loop=LoopWitness(lam.edges, eid, i))
    return None


# --- ends -------------------------------------------------------------------


@dataclass
class EndDescriptor:
    representative: str
    image: tuple                 # reachable vertex set (successor closure)
    successors: dict             # (vertex, color) -> vertex, partial
    direction_bounds: tuple      # per colour: steps available from rep, None = infinite


def find_ends(graph, oracle_bound=None):
    """Vertices lying on ends, grouped into descriptors.

    Greatest fixed point: keep vertices with at most one in-edge per colour
    whose in-edge sources stay in the set; candidates are then cross-checked
    against the defining property |vLambda^{<=n}| = 1 for all n up to a
    bound (default (|V|, ..., |V|)).
    """
    if oracle_bound is None:
        oracle_bound = (len(graph.vertices),) * graph.k
    live = {v for v in graph.vertices
            if all(len(graph.in_edges(v, c)) <= 1 for c in range(1, graph.k + 1))}
    changed = True
    while changed:
        changed = False
        for v in list(live):
            for c in range(1, graph.k + 1):
                ins = graph.in_edges(v, c)
                if ins and graph.edge(ins[0]).source not in live:
                    live.discard(v)
                    changed = True
                    break

    for v in live:
        for n in dg.box(oracle_bound):
            assert len(graph.lambda_le(v, n)) == 1, \
                f"end candidate {v} fails the defining property at {n}"

    succ = {}
    for v in live:
        for c in range(1, graph.k + 1):
            ins = graph.in_edges(v, c)
            if ins:
                succ[(v, c)] = graph.edge(ins[0]).source

    descriptors = []
    seen = set()
    for v in graph.vertices:
        if v not in live or v in seen:
            continue
        image = _closure(succ, v, graph.k)
        seen.update(image)
        bounds = []
        for c in range(1, graph.k + 1):
            steps, w, visited = 0, v, set()
            while (w, c) in succ and w not in visited:
                visited.add(w)
                w = succ[(w, c)]
                steps += 1
            bounds.append(None if (w, c) in succ else steps)
        descriptors.append(EndDescriptor(v, tuple(sorted(image)),
                                         {k2: w for k2, w in succ.items()
                                          if k2[0] in image},
                                         tuple(bounds)))
    return descriptors


def _closure(succ, v, k):
    out, todo = {v}, [v]
    while todo:
        w = todo.pop()
        for c in range(1, k + 1):
            nxt = succ.get((w, c))
            if nxt is not None and nxt not in out:
                out.add(nxt)
                todo.append(nxt)
    return out


def end_classes(descriptors):
    """Partition descriptors by image intersection (union-find)."""
    parent = list(range(len(descriptors)))

    def root(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(descriptors)):
        for j in range(i + 1, len(descriptors)):
            if set(descriptors[i].image) & set(descriptors[j].image):
                parent[root(i)] = root(j)
    classes = {}
    for i, d in enumerate(descriptors):
        classes.setdefault(root(i), []).append(d)
    return [sorted(group, key=lambda d: d.representative)
            for group in classes.values()]


def check_sufficient_condition(graph, bound=None):
    """For each vertex search (breadth-first over the degree lattice) for an
    n_v such that every lam in vLambda^{<=n_v} ends on an end vertex; returns
    (n_map, unreached) where unreached lists vertices exhausting the bound."""
    if not graph.locally_convex:
        raise NotLocallyConvex("the sufficiency test needs local convexity")
    if bound is None:
        bound = (len(graph.vertices),) * graph.k
    end_verts = set()
    for d in find_ends(graph):
        end_verts.update(d.image)
    n_map, unreached = {}, []
    for v in graph.vertices:
        found = None
        for n in sorted(dg.box(bound), key=lambda d: (dg.total(d), d)):
            if all(p.source in end_verts for p in graph.lambda_le(v, n)):
                found = n
                break
        if found is None:
            unreached.append(v)
        else:
            n_map[v] = found
    return n_map, tuple(unreached)


def orthogonal_family_count(graph, source, target, degree_bound=None):
    """Size of a greedily built family of mutually orthogonal paths from
    `source` to `target` with degree below the bound.

    Heuristic and NOT authoritative: a finite truncation can never decide
    whether an infinite orthogonal family exists; callers should compare
    counts across truncation sizes and treat growth as the signal (a large
    family forces any trace to vanish at the source vertex)."""
    from .algebra import have_common_extension

    if degree_bound is None:
        degree_bound = (len(graph.vertices),) * graph.k
    buckets = []
    for n in dg.box(degree_bound):
        bucket = [p for p in graph.paths_with_range(target, n)
                  if p.source == source]
        if bucket:
            buckets.append(bucket)
    if not buckets:
        return 0
    # distinct paths of equal degree are always orthogonal, so the largest
    # single-degree bucket seeds the family; then augment greedily
    buckets.sort(key=len, reverse=True)
    family = list(buckets[0])
    for bucket in buckets[1:]:
        for p in bucket:
            if all(not have_common_extension(graph, p, q) for q in family):
                family.append(p)
    return len(family)


def trace_from_end_assignment(graph, n_map, class_weights, descriptors=None):
    """Build the graph trace determined by positive weights on end classes:

        g(v) = sum over lam in vLambda^{<= n_v} of weight(class of end at s(lam)).

    Also recomputes with n_v replaced by n_v v e_i for each colour and
    asserts the results agree (choice independence), then verifies the
    graph-trace equation.
    """
    if descriptors is None:
        descriptors = find_ends(graph)
    classes = end_classes(descriptors)
    class_of_vertex = {}
    for ci, group in enumerate(classes):
        for d in group:
            for w in d.image:
                class_of_vertex[w] = ci

    def weight_for(ci):
        key = ci
        if key not in class_weights:
            raise SufficientConditionUnmet(f"no weight for end class {ci}")
        w = Fraction(class_weights[key])
        if w <= 0:
            raise ValueError("class weights must be positive")
        return w

    def evaluate(v, n):
        total = F0
        for lam in graph.lambda_le(v, n):
            ci = class_of_vertex.get(lam.source)
            if ci is None:
                raise SufficientConditionUnmet(
                    f"path out of {v} ends at {lam.source}, not on an end")
            total += weight_for(ci)
        return total

    values = {}
    for v in graph.vertices:
        if v not in n_map:
            raise SufficientConditionUnmet(f"no n_v for vertex {v}")
        g0 = evaluate(v, n_map[v])
        for i in range(1, graph.k + 1):
            alt = dg.join(n_map[v], dg.basis(graph.k, i))
            assert evaluate(v, alt) == g0, \
                f"choice of n_v is not independent at {v}"
        values[v] = g0
    trace = GraphTrace(graph, values,
                       verified=is_graph_trace(values, graph, mode="full",
                                               upto=(2,) * graph.k))
    if not trace.verified:
        raise SufficientConditionUnmet("constructed weighting fails the trace equation")
    return trace
