"""Command-line front end.

Subcommands: analyze, verify, closure, thresholds, corpus, gen, simplex.
JSON reports go to stdout (or --out); a short human summary goes to stderr.
Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
guard exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .graphs import Graph, GraphError, ResourceLimitError
from .graphio import ParseError, format_graph, parse_graph
from .polynomials import (
    Poly,
    has_internal_zeros,
    is_log_concave,
    is_unimodal,
    add,
    power,
    scale,
    to_strings,
    X,
)
from .theta import embed, is_partial_cube
from .crossing import crossing_graph, coordinate_crossing_pairs, simplex_graph, verify_simplex_identity
from .median import is_median_by_convex_U, median_closure
from .counting import verify_theorem, cube_polynomial, clique_polynomial_recursive
from . import generators
from .suite import run_corpus

SCHEMA = "pcubes-report/1"
SAFE_INT = (1 << 53) - 1

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _num(x: int):
    """JSON-safe integer: decimal string once past the 53-bit range."""
    return x if -SAFE_INT <= x <= SAFE_INT else str(x)


def _poly_json(p: Poly):
    return list(to_strings(p))


def _bitstring(label: int, width: int) -> str:
    # coordinate 0 is the leftmost character
    return "".join("1" if (label >> i) & 1 else "0" for i in range(width))


def _read_graph(args) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text()
    return parse_graph(text, getattr(args, "format", None))


def _digest(g: Graph) -> str:
    blob = f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.edges)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _emit(args, command: str, results: dict, started: float, g: Graph | None = None) -> None:
    report = {
        "schema": SCHEMA,
        "command": command,
        "tool_version": __version__,
    }
    if g is not None:
        report["input"] = {"digest": _digest(g), "n": g.n, "m": g.m}
    report["results"] = results
    report["timing_ms"] = int((time.perf_counter() - started) * 1000)
    text = json.dumps(report, indent=2) + "\n"
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _say(msg: str) -> None:
    sys.stderr.write(msg + "\n")


# ---------------------------------------------------------------------------
# analyze

def cmd_analyze(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args)
    cert = is_partial_cube(g)
    results: dict = {
        "n": g.n,
        "m": g.m,
        "connected": cert.connected,
        "bipartite": cert.bipartition.ok,
    }
    if not cert.bipartition.ok:
        results["odd_cycle"] = list(cert.bipartition.odd_cycle)
    results["is_partial_cube"] = cert.verdict
    if cert.theta is not None:
        results["theta_is_equivalence"] = cert.theta.is_equivalence
        if cert.theta.witness is not None:
            results["transitivity_witness_edges"] = [
                list(g.edges[e]) for e in cert.theta.witness
            ]
    if cert.verdict:
        results["idim"] = cert.idim
        results["theta_classes"] = [
            [list(g.edges[e]) for e in eids] for eids in cert.theta.classes
        ]
        results["is_median"] = is_median_by_convex_U(g, cert)
        results["cube_polynomial"] = _poly_json(cube_polynomial(g, cert))
        if g.n >= 2:
            cg = crossing_graph(g, cert)
            results["crossing_graph"] = {
                "n": cg.graph.n,
                "edges": [list(e) for e in cg.graph.edges],
            }
            rep = verify_theorem(g, cert)
            results["crossing_clique_polynomial"] = _poly_json(
                clique_polynomial_recursive(cg.graph)
            )
            results["crossing_clique_shifted"] = _poly_json(
                rep.crossing_clique_shifted
            )
            results["leq_holds"] = rep.leq_holds
            results["equality"] = rep.equality
    _emit(args, "analyze", results, started, g)
    if cert.verdict:
        _say(
            f"partial cube, idim {cert.idim}, "
            f"median: {'yes' if results['is_median'] else 'no'}"
        )
    else:
        _say("not a partial cube")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args)
    cert = is_partial_cube(g)
    rep = verify_theorem(g, cert)
    results = {"is_partial_cube": rep.is_partial_cube}
    if rep.is_partial_cube:
        results.update(
            {
                "idim": cert.idim,
                "cube_polynomial": _poly_json(rep.cube_poly),
                "crossing_clique_shifted": _poly_json(rep.crossing_clique_shifted),
                "leq_holds": rep.leq_holds,
                "equality": rep.equality,
                "is_median": rep.is_median,
            }
        )
    _emit(args, "verify", results, started, g)
    if not rep.is_partial_cube:
        _say("input is not a partial cube")
        return EXIT_INPUT
    held = rep.leq_holds and rep.equality == rep.is_median
    _say(
        "inequality holds, "
        + ("equality (median graph)" if rep.equality else "strict (not median)")
        if held
        else "VERIFICATION FAILED"
    )
    return EXIT_OK if held else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# closure

def cmd_closure(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args)
    trace = median_closure(g, max_vertices=args.max_vertices)
    k = trace.idim
    rounds = []
    for rnd in trace.rounds:
        entry = {
            "n": rnd.graph.n,
            "maximal_cycle_count": len(rnd.max_cycles),
            "added_count": len(rnd.added_labels),
        }
        if len(rnd.max_cycles) <= 50:
            entry["maximal_cycles"] = [list(c.vertices) for c in rnd.max_cycles]
        if len(rnd.added_labels) <= 200:
            entry["added_labels"] = [_bitstring(x, k) for x in rnd.added_labels]
        rounds.append(entry)
    before = coordinate_crossing_pairs(g, trace.rounds[0].labels)
    after = coordinate_crossing_pairs(trace.final, trace.final_labels)
    preserved = before == after
    final_median = is_median_by_convex_U(trace.final)
    results = {
        "idim": k,
        "round_sizes": [rnd.graph.n for rnd in trace.rounds],
        "expansion_rounds": trace.expansion_rounds,
        "rounds": rounds,
        "final": {"n": trace.final.n, "m": trace.final.m},
        "final_is_median": final_median,
        "crossing_preserved": preserved,
    }
    _emit(args, "closure", results, started, g)
    sizes = " -> ".join(str(rnd.graph.n) for rnd in trace.rounds)
    _say(f"closure {sizes} in {trace.expansion_rounds} expansion rounds")
    return EXIT_OK if final_median and preserved else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# thresholds

def _classify(p: Poly) -> str:
    lc = is_log_concave(p) and not has_internal_zeros(p)
    uni = is_unimodal(p)
    if lc and uni:
        return "log-concave"
    if uni:
        return "unimodal-not-log-concave"
    if lc:
        return "log-concave-not-unimodal"
    return "not-unimodal"


def _family_poly(family: str, n: int, m: int) -> Poly:
    if family == "clique":
        return add(power((1, 1), n), scale(X, m))
    return add(power((2, 1), n), scale((1, 1), m))


def cmd_thresholds(args) -> int:
    started = time.perf_counter()
    family, n = args.family, args.n
    if not 1 <= n <= 200:
        raise GraphError(f"n = {n} outside the supported 1..200")
    m_start = args.m_start
    m_end = args.m_end
    if m_end is None:
        if family == "clique":
            m_end = max(n * (n - 3) // 2, 0) + 5
        else:
            m_end = max(n * (n - 5) // 2, 0) * 2 ** max(n - 2, 0) + 5
    if m_end < m_start:
        raise GraphError("--m-end must be at least --m-start")
    if m_end - m_start > 100_000:
        raise ResourceLimitError("threshold scan longer than 100000 steps")
    segments = []
    transitions: dict = {
        "last_log_concave": None,
        "first_not_log_concave": None,
        "last_unimodal": None,
        "first_not_unimodal": None,
    }
    for m in range(m_start, m_end + 1):
        p = _family_poly(family, n, m)
        cls = _classify(p)
        lc = cls == "log-concave"
        uni = cls != "not-unimodal" and cls != "log-concave-not-unimodal"
        if lc:
            transitions["last_log_concave"] = m
        elif transitions["first_not_log_concave"] is None:
            transitions["first_not_log_concave"] = m
        if uni:
            transitions["last_unimodal"] = m
        elif transitions["first_not_unimodal"] is None:
            transitions["first_not_unimodal"] = m
        if segments and segments[-1]["classification"] == cls:
            segments[-1]["m_to"] = m
        else:
            segments.append({"classification": cls, "m_from": m, "m_to": m})
    results = {
        "family": family,
        "n": n,
        "m_start": m_start,
        "m_end": m_end,
        "segments": segments,
        "boundaries": {k: _num(v) if v is not None else None for k, v in transitions.items()},
    }
    _emit(args, "thresholds", results, started)
    _say(
        f"{family} family, n={n}: "
        + ", ".join(f"{k}={v}" for k, v in transitions.items() if v is not None)
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# corpus

DEFAULT_CORPUS = [
    {"family": "path", "args": [2]},
    {"family": "path", "args": [5]},
    {"family": "even_cycle", "args": [2]},
    {"family": "even_cycle", "args": [3]},
    {"family": "even_cycle", "args": [5]},
    {"family": "hypercube", "args": [2]},
    {"family": "hypercube", "args": [3]},
    {"family": "hypercube_minus_vertex", "args": [3]},
    {"family": "hypercube_minus_vertex", "args": [4]},
    {"family": "random_tree", "args": [9], "seed": 5},
    {"family": "trihex", "args": []},
    {"family": "example42", "args": [3, 2]},
    {"family": "example41", "args": [4, 3]},
    {"family": "random_median_graph", "args": [6], "seed": 11},
    {"family": "random_median_graph", "args": [14], "seed": 12},
    {"family": "random_graph", "args": [7, 0.5], "seed": 21},
    {"family": "random_graph", "args": [9, 0.35], "seed": 22},
]

# family name -> (constructor, positional parameter kinds)
FAMILIES = {
    "hypercube": (generators.hypercube, ("int",)),
    "even_cycle": (generators.even_cycle, ("int",)),
    "path": (generators.path, ("int",)),
    "complete": (generators.complete, ("int",)),
    "random_tree": (generators.random_tree, ("int", "seed")),
    "trihex": (generators.trihex, ()),
    "example41": (generators.example_41, ("int", "int")),
    "example42": (generators.example_42, ("int", "int")),
    "hypercube_minus_vertex": (generators.hypercube_minus_vertex, ("int",)),
    "random_median_graph": (generators.random_median_graph, ("int", "seed")),
    "random_graph": (generators.random_graph, ("int", "float", "seed")),
    "pendants": (generators.attach_pendants, ("graph", "int", "seed")),
}


def _build_family(family: str, raw_args: list, seed: int, where: str) -> Graph:
    if family not in FAMILIES:
        raise GraphError(f"{where}: unknown family {family!r}")
    fn, kinds = FAMILIES[family]
    call = []
    pos = 0
    for kind in kinds:
        if kind == "seed":
            call.append(seed)
            continue
        if pos >= len(raw_args):
            raise GraphError(f"{where}: family {family!r} needs more arguments")
        value = raw_args[pos]
        pos += 1
        if kind == "int":
            call.append(int(value))
        elif kind == "float":
            call.append(float(value))
        elif kind == "graph":
            call.append(parse_graph(Path(str(value)).read_text()))
        else:
            raise AssertionError(kind)
    if pos != len(raw_args):
        raise GraphError(f"{where}: too many arguments for family {family!r}")
    return fn(*call)


def cmd_corpus(args) -> int:
    started = time.perf_counter()
    if args.spec:
        try:
            data = json.loads(Path(args.spec).read_text())
        except json.JSONDecodeError as e:
            raise ParseError(f"{args.spec}: line {e.lineno}: {e.msg}") from None
        if not isinstance(data, dict):
            raise ParseError(f"{args.spec}: top level must be an object")
        items_spec = data.get("items", [])
        if not isinstance(items_spec, list):
            raise ParseError(f"{args.spec}: 'items' must be an array")
    else:
        items_spec = DEFAULT_CORPUS
    items = []
    for i, item in enumerate(items_spec):
        where = f"item {i}"
        if not isinstance(item, dict) or "family" not in item:
            raise ParseError(f"{where}: each item needs a 'family'")
        family = item["family"]
        raw_args = item.get("args", [])
        seed = item.get("seed", args.seed)
        g = _build_family(family, raw_args, seed, where)
        label = item.get("label") or f"{family}({', '.join(map(str, raw_args))}; seed={seed})"
        items.append((label, g))
    outcomes = run_corpus(items)
    failures = [o for o in outcomes if o.status == "fail"]
    results = {
        "graphs": len(items),
        "checks_run": sum(1 for o in outcomes if o.status != "skip"),
        "checks_skipped": sum(1 for o in outcomes if o.status == "skip"),
        "failures": len(failures),
        "outcomes": [
            {
                "check": o.check,
                "graph": o.graph,
                "status": o.status,
                **({"detail": o.detail} if o.detail else {}),
            }
            for o in outcomes
            if o.status != "skip"
        ],
    }
    _emit(args, "corpus", results, started)
    _say(
        f"{len(items)} graphs, {results['checks_run']} checks, "
        f"{len(failures)} failures"
    )
    return EXIT_OK if not failures else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# gen

def cmd_gen(args) -> int:
    g = _build_family(args.family, args.params, args.seed, "gen")
    text = format_graph(g, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    _say(f"{args.family}: {g.n} vertices, {g.m} edges")
    return EXIT_OK


# ---------------------------------------------------------------------------
# simplex

def cmd_simplex(args) -> int:
    started = time.perf_counter()
    g = _read_graph(args)
    sg = simplex_graph(g, max_cliques=args.max_cliques)
    median = is_median_by_convex_U(sg.graph)
    identity = verify_simplex_identity(g, max_cliques=args.max_cliques)
    results = {
        "simplex": {
            "n": sg.graph.n,
            "edges": [list(e) for e in sg.graph.edges],
        },
        "cliques": [list(c) for c in sg.cliques],
        "simplex_is_median": median,
        "identity_holds": identity,
    }
    _emit(args, "simplex", results, started, g)
    _say(
        f"simplex graph on {sg.graph.n} cliques; identity "
        + ("holds" if identity else "FAILS")
    )
    return EXIT_OK if identity and median else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# argument plumbing

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pcubes",
        description="Partial cubes: classes, crossings, medians, and the "
        "polynomials that count their cubes and cliques.",
    )
    ap.add_argument("--version", action="version", version=f"pcubes {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", choices=("edges", "json"), default=None)
        p.add_argument("--out", default=None, help="write the JSON report here")
        return p

    graph_cmd("analyze", "verdicts, classes, crossing graph, polynomials").set_defaults(func=cmd_analyze)
    graph_cmd("verify", "check C(G,x) <= Cl(G#,x+1) and the equality case").set_defaults(func=cmd_verify)
    p = graph_cmd("closure", "iterate cycle-hull filling to a median graph")
    p.add_argument("--max-vertices", type=int, default=4096)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("thresholds", help="classify (x+1)^n+mx or (x+2)^n+m(x+1) over a range of m")
    p.add_argument("--family", choices=("clique", "cube"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-start", type=int, default=0)
    p.add_argument("--m-end", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("corpus", help="run the invariant battery over generated graphs")
    p.add_argument("spec", nargs="?", default=None, help="JSON corpus spec; built-in default when omitted")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("family", help="one of: " + ", ".join(sorted(FAMILIES)))
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("edges", "json"), default="edges")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = graph_cmd("simplex", "build the simplex graph and check its crossing graph")
    p.add_argument("--max-cliques", type=int, default=200_000)
    p.set_defaults(func=cmd_simplex)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        _say(f"input error: {e}")
        return EXIT_INPUT
    except ResourceLimitError as e:
        _say(f"resource guard: {e}")
        return EXIT_RESOURCE
    except GraphError as e:
        _say(f"input error: {e}")
        return EXIT_INPUT
    except OSError as e:
        _say(f"io error: {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
