"""Command-line front end.

A thin client over the service layer: each subcommand builds the same
pydantic request the HTTP endpoint accepts and either dispatches in
process or, with --url, POSTs it to a running server.  The JSON report
goes to stdout; a short human summary goes to stderr.

Exit codes: 0 success, 1 parse/validation error (machine-readable error
JSON on stdout), 2 property violation (an exact identity failed).
"""

import argparse
import json
import sys

from .errors import KGraphError
from .service import models as m
from .service.handlers import HANDLERS


def _graph_source(args):
    if args.builder and args.input:
        raise ValueError("pass either an input file or --builder, not both")
    if args.builder:
        return m.GraphSource(builder=args.builder)
    if not args.input:
        raise ValueError("an input file or --builder is required")
    with open(args.input) as fh:
        return m.GraphSource(skeleton=json.load(fh))


def _add_graph_args(sub):
    sub.add_argument("input", nargs="?", help="skeleton JSON file")
    sub.add_argument("--builder",
                     help="omega:k,m1,..,mk | lambda_n:n,tail | figure2:A|B")


def build_parser():
    p = argparse.ArgumentParser(prog="kgraphck")
    p.add_argument("--url", help="dispatch to a running service instead of in-process")
    sp = p.add_subparsers(dest="command", required=True)

    for name in ("validate", "trace", "ends", "ktheory", "algebra-check"):
        sub = sp.add_parser(name)
        _add_graph_args(sub)
        if name == "trace":
            sub.add_argument("--full-check", type=int, default=None,
                             help="also verify the trace equation up to degree (n,..,n)")
        if name == "algebra-check":
            sub.add_argument("--degree-cap", type=int, default=2)
            sub.add_argument("--samples", type=int, default=100)
            sub.add_argument("--seed", type=int, default=0)

    sub = sp.add_parser("dixmier")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--nmax", type=int, required=True)
    sub.add_argument("--points", type=int, default=5)

    sub = sp.add_parser("pair")
    sub.add_argument("--example", default="lambda_n")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--grid", type=int, default=64)

    sub = sp.add_parser("serve")
    sub.add_argument("--host", default="127.0.0.1")
    sub.add_argument("--port", type=int, default=8000)
    return p


def _build_request(args):
    cmd = args.command
    if cmd == "validate":
        return m.ValidateRequest(source=_graph_source(args))
    if cmd == "trace":
        return m.TraceRequest(source=_graph_source(args),
                              full_check=args.full_check)
    if cmd == "ends":
        return m.EndsRequest(source=_graph_source(args))
    if cmd == "ktheory":
        return m.KTheoryRequest(source=_graph_source(args))
    if cmd == "algebra-check":
        return m.AlgebraCheckRequest(source=_graph_source(args),
                                     degree_cap=args.degree_cap,
                                     samples=args.samples, seed=args.seed)
    if cmd == "dixmier":
        return m.DixmierRequest(k=args.k, nmax=args.nmax, points=args.points)
    if cmd == "pair":
        return m.PairRequest(example=args.example, n=args.n, grid=args.grid)
    raise ValueError(cmd)


def _dispatch(command, request, url=None):
    if url is None:
        _, handler = HANDLERS[command]
        return handler(request)
    import httpx

    resp = httpx.post(f"{url.rstrip('/')}/{command}",
                      json=request.model_dump(by_alias=True), timeout=600.0)
    if resp.status_code != 200:
        raise KGraphError(resp.text)
    _, handler = HANDLERS[command]
    model = HANDLERS[command][1].__annotations__.get("return")
    return model.model_validate(resp.json()) if model else resp.json()


def _summarize(command, response):
    if command == "validate":
        return (f"valid k={response.k} graph: {response.num_vertices} vertices, "
                f"{response.num_edges} edges; locally convex={response.locally_convex}, "
                f"no sinks={response.no_sinks}, no sources={response.no_sources}")
    if command == "trace":
        if response.faithful_trace is not None:
            return "faithful graph trace found"
        kinds = ", ".join(o.kind for o in response.obstructions)
        return f"no faithful trace; obstructions: {kinds}"
    if command == "ends":
        return f"{len(response.ends)} end class(es); {len(response.unreached)} unreached"
    if command == "ktheory":
        return (f"K0 rank {response.K0_rank}, K1 rank {response.K1_rank}; "
                f"Morita: {response.morita}")
    if command == "algebra-check":
        n_ok = sum(c.passed for c in response.checks)
        return f"{n_ok}/{len(response.checks)} checks passed"
    if command == "dixmier":
        return (f"fitted {response.fitted:.6f} vs C_k {response.C_k:.6f} "
                f"(rel err {response.rel_err:.2%})")
    if command == "pair":
        return (f"pairing {response.pairing} (chern {response.chern}, "
                f"index {response.index})")
    return ""


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        request = _build_request(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}))
        return 1
    try:
        response = _dispatch(args.command, request, url=args.url)
    except (KGraphError, ValueError) as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}))
        return 1
    except AssertionError as exc:
        print(json.dumps({"error": str(exc) or "invariant violated",
                          "kind": "PropertyViolation"}))
        return 2
    print(response.model_dump_json(by_alias=True, indent=2))
    print(_summarize(args.command, response), file=sys.stderr)
    if args.command == "algebra-check" and not response.all_passed:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
