"""Pure request -> response handlers; the FastAPI app and the CLI both
dispatch here so they cannot drift apart."""

from .. import builders
from ..errors import NotLocallyConvex, SufficientConditionUnmet
from ..ktheory import end_group, k_theory
from ..skeleton import skeleton_from_dict
from ..kgraph import validate
from ..spectral import dixmier_estimate, lambda_n_pairing
from ..suites import run_algebra_suite
from ..traces import (
    GraphTrace,
    check_sufficient_condition,
    detect_loop_with_entrance,
    end_classes,
    find_ends,
    find_faithful_graph_trace,
)
from . import models as m


def load_graph(source):
    if source.builder is not None:
        return builders.from_builder_spec(source.builder)
    skel, regime = skeleton_from_dict(source.skeleton)
    return validate(skel, regime)


def handle_validate(req: m.ValidateRequest) -> m.ValidateResponse:
    g = load_graph(req.source)
    return m.ValidateResponse(
        valid=True, k=g.k, num_vertices=len(g.vertices),
        num_edges=len(g.skeleton.edges), locally_convex=g.locally_convex,
        no_sinks=g.no_sinks, no_sources=g.no_sources,
        locally_finite=g.locally_finite)


def _end_class_models(graph):
    descriptors = find_ends(graph)
    out = []
    for ci, group in enumerate(end_classes(descriptors)):
        rep = group[0]
        image = sorted(set().union(*(set(d.image) for d in group)))
        rank = end_group(graph, rep).rank
        out.append(m.EndClassModel(cls=ci, rep=rep.representative,
                                   image=image, rank=rank))
    return out


def handle_trace(req: m.TraceRequest) -> m.TraceResponse:
    g = load_graph(req.source)
    result = find_faithful_graph_trace(g)
    obstructions = []
    trace_values = None
    if isinstance(result, GraphTrace):
        trace_values = {v: str(x) for v, x in result.values.items()}
        if req.full_check:
            upto = (req.full_check,) * g.k
            from ..traces import is_graph_trace
            assert is_graph_trace(result.values, g, mode="full", upto=upto)
    else:
        farkas = None
        if result.farkas is not None:
            farkas = {"rows": result.certificate_rows,
                      "multipliers": [str(y) for y in result.farkas]}
        obstructions.append(m.ObstructionModel(
            kind=result.kind, vertices=list(result.forced_zero), farkas=farkas))
    loop = detect_loop_with_entrance(g)
    if loop is not None:
        obstructions.append(m.ObstructionModel(
            kind=loop.kind, loop=list(loop.loop.loop_edges),
            entrance=loop.loop.entrance, color=loop.loop.color))
    return m.TraceResponse(faithful_trace=trace_values,
                           obstructions=obstructions,
                           ends=_end_class_models(g))


def handle_ends(req: m.EndsRequest) -> m.EndsResponse:
    g = load_graph(req.source)
    try:
        n_map, unreached = check_sufficient_condition(g)
    except (SufficientConditionUnmet, NotLocallyConvex):
        n_map, unreached = {}, tuple(g.vertices)
    return m.EndsResponse(
        ends=_end_class_models(g),
        sufficient_condition={v: list(n) for v, n in n_map.items()},
        unreached=list(unreached))


def handle_ktheory(req: m.KTheoryRequest) -> m.KTheoryResponse:
    g = load_graph(req.source)
    summary = k_theory(g)
    return m.KTheoryResponse(
        classes=[m.KTheoryClassModel(**row) for row in summary.classes],
        K0_rank=summary.K0_rank, K1_rank=summary.K1_rank,
        morita=summary.morita)


def handle_algebra_check(req: m.AlgebraCheckRequest) -> m.AlgebraCheckResponse:
    g = load_graph(req.source)
    cap = (req.degree_cap,) * g.k
    checks = run_algebra_suite(g, cap=cap, samples=req.samples, seed=req.seed)
    models = [m.CheckModel(name=c.name, passed=c.passed, detail=c.detail)
              for c in checks]
    return m.AlgebraCheckResponse(checks=models,
                                  all_passed=all(c.passed for c in checks))


def handle_dixmier(req: m.DixmierRequest) -> m.DixmierResponse:
    # keep the lattice enumeration at desk scale: (2 nmax + 1)^k points
    caps = {1: 100000, 2: 2000, 3: 150}
    if req.nmax > caps[req.k]:
        raise ValueError(f"nmax too large for rank {req.k} (cap {caps[req.k]})")
    lo = max(8, req.nmax // (2 ** (req.points - 1)))
    ns = sorted({int(round(lo * (req.nmax / lo) ** (i / (req.points - 1))))
                 for i in range(req.points)})
    est = dixmier_estimate(req.k, ns)
    return m.DixmierResponse(C_k=est.target, fitted=est.fitted_slope,
                             rel_err=est.rel_err, samples=est.samples)


def handle_pair(req: m.PairRequest) -> m.PairResponse:
    if req.example != "lambda_n":
        raise ValueError(f"unknown pairing example {req.example!r}")
    from ..ktheory import lambda_n_core_multiplicity
    from ..spectral import bott_pairing_block

    chern, index = bott_pairing_block(grid=req.grid)
    pairing = lambda_n_pairing(req.n, grid=req.grid)
    return m.PairResponse(chern=chern, index=index, pairing=pairing,
                          core_multiplicity=lambda_n_core_multiplicity(req.n))


HANDLERS = {
    "validate": (m.ValidateRequest, handle_validate),
    "trace": (m.TraceRequest, handle_trace),
    "ends": (m.EndsRequest, handle_ends),
    "ktheory": (m.KTheoryRequest, handle_ktheory),
    "algebra-check": (m.AlgebraCheckRequest, handle_algebra_check),
    "dixmier": (m.DixmierRequest, handle_dixmier),
    "pair": (m.PairRequest, handle_pair),
}
