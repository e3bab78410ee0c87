"""End groups in Z^k, torus ranks, and K-theory for graphs whose paths all
flow onto ends.

The group attached to an end is G = {p - q : positions p, q with the same
image vertex}; it is a subgroup of Z^k, computed by collecting differences
over a finite position box and saturating (doubling the box must not change
the lattice - if it does, that is an error, never silently accepted).  Its
rank l gives the Morita factor: a torus of dimension l, with K-group ranks
2^{l-1} in each degree (l >= 1) and (1, 0) for l = 0.
"""

from dataclasses import dataclass
from itertools import product

import sympy
from sympy.matrices.normalforms import hermite_normal_form

from .errors import SufficientConditionUnmet, UnsaturatedLattice
from .traces import check_sufficient_condition, end_classes, find_ends


@dataclass
class EndGroup:
    generators: list        # list of Z^k int tuples
    hermite_basis: list     # columns of the Hermite normal form
    rank: int


@dataclass
class KTheorySummary:
    classes: list           # per class: {"rep": vertex, "rank": l, "group_basis": [...]}
    K0_rank: int
    K1_rank: int
    morita: str


def _lattice_basis(vectors, k):
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return [], 0
    mat = sympy.Matrix(list(map(list, vecs))).T  # columns = generators
    hnf = hermite_normal_form(mat)
    basis = [tuple(int(x) for x in hnf.col(j)) for j in range(hnf.cols)]
    return basis, len(basis)


def end_group(graph, descriptor, box_factor=2):
    """Collect differences p - q over the position box [0, box_factor*m]^k
    (clipped to finite directions), where m = |image|, and return the lattice
    they generate; saturation is asserted by recomputing with a doubled box."""
    basis, rank = _end_group_once(graph, descriptor, box_factor)
    basis2, rank2 = _end_group_once(graph, descriptor, 2 * box_factor)
    if basis != basis2 or rank != rank2:
        raise UnsaturatedLattice(
            f"end group at {descriptor.representative} changed under box doubling")
    gens = _difference_vectors(graph, descriptor, box_factor)
    return EndGroup(sorted(gens), basis, rank)


def _positions(graph, descriptor, box_factor):
    m = max(1, len(descriptor.image))
    k = graph.k
    ranges = []
    for c in range(k):
        bound = descriptor.direction_bounds[c]
        hi = box_factor * m if bound is None else min(bound, box_factor * m)
        ranges.append(range(hi + 1))
    pos = {}
    for p in product(*ranges):
        w = descriptor.representative
        ok = True
        # successor maps commute on end images, so apply colour by colour
        for c in range(k):
            for _ in range(p[c]):
                w = descriptor.successors.get((w, c + 1))
                if w is None:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            pos[p] = w
    return pos


def _difference_vectors(graph, descriptor, box_factor):
    pos = _positions(graph, descriptor, box_factor)
    by_vertex = {}
    for p, w in pos.items():
        by_vertex.setdefault(w, []).append(p)
    diffs = set()
    for plist in by_vertex.values():
        base = plist[0]
        for p in plist[1:]:
            diffs.add(tuple(a - b for a, b in zip(p, base)))
            diffs.add(tuple(b - a for a, b in zip(p, base)))
    return diffs


def _end_group_once(graph, descriptor, box_factor):
    return _lattice_basis(_difference_vectors(graph, descriptor, box_factor),
                          graph.k)


def torus_rank(group):
    return group.rank


def lattice_rank(vectors, k):
    """Rank of the sublattice of Z^k spanned by the given vectors."""
    return _lattice_basis(vectors, k)[1]


def k_theory(graph):
    """K-group ranks via the end decomposition; requires every vertex to
    flow onto ends (the sufficiency condition)."""
    n_map, unreached = check_sufficient_condition(graph)
    if unreached:
        raise SufficientConditionUnmet(
            f"vertices {list(unreached)} do not flow onto ends")
    descriptors = find_ends(graph)
    classes = end_classes(descriptors)
    rows, k0, k1, morita_terms = [], 0, 0, []
    for group in classes:
        rep = group[0]
        eg = end_group(graph, rep)
        l = eg.rank
        rows.append({"rep": rep.representative, "rank": l,
                     "group_basis": [list(b) for b in eg.hermite_basis]})
        if l == 0:
            k0 += 1
            morita_terms.append("K")
        else:
            k0 += 2 ** (l - 1)
            k1 += 2 ** (l - 1)
            morita_terms.append(f"K⊗C(T^{l})")
    return KTheorySummary(rows, k0, k1, " ⊕ ".join(morita_terms) or "0")


def core_multiplicity(graph):
    """Number of matrix-unit blocks in the gauge-fixed core of a cycle-with-
    tail graph: vertices are partitioned by solid-edge flow distance modulo
    the solid cycle length, and the partition count equals that length."""
    pred = {}
    for v in graph.vertices:
        ins = graph.in_edges(v, 1)
        if len(ins) != 1:
            raise ValueError("core multiplicity needs a unique solid in-edge per vertex")
        pred[v] = graph.edge(ins[0]).source

    # walk to the solid cycle and measure its length
    seen, order, v = {}, 0, graph.vertices[0]
    while v not in seen:
        seen[v] = order
        order += 1
        v = pred[v]
    cycle_len = order - seen[v]

    # coherent cyclic coordinates: pos(pred(w)) = pos(w) - 1 around the cycle
    pos, w = {}, v
    for step in range(cycle_len):
        pos[w] = (-step) % cycle_len
        w = pred[w]
    label = {}
    for u in graph.vertices:
        steps, w = 0, u
        while w not in pos:
            w = pred[w]
            steps += 1
        label[u] = (pos[w] - steps) % cycle_len
    classes = {c: sorted(u for u in label if label[u] == c)
               for c in set(label.values())}
    assert len(classes) == cycle_len
    return cycle_len


def lambda_n_core_multiplicity(n, tail_len=0):
    from .builders import build_lambda_n

    return core_multiplicity(build_lambda_n(n, tail_len))
