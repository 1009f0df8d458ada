"""Command-line front door.

Subcommands mirror the library: ``toric``, ``gates``, ``group``,
``entangle``, ``figure`` and ``serve``.  States are passed as
comma-separated interleaved re,im doubles; every data subcommand has a
``--format json`` mode; figures emit SVG.  Exit codes: 0 success, 2 bad
input, 1 internal failure.  The environment variable
``TORIC_ATLAS_NOTATION`` overrides the default notation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import entangle, figures, gatecat, gategroup, qlinalg, render, toric
from .errors import AtlasError, NormError

# Input states are renormalized when within this distance of unit norm;
# anything further off is rejected as malformed.
STATE_NORM_SLACK = 1e-6


def parse_state(text: str) -> np.ndarray:
    """Parse interleaved re,im doubles into a unit state vector."""
    try:
        values = [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise NormError(f"could not parse state: {exc}") from exc
    if len(values) % 2 != 0 or len(values) == 0:
        raise NormError("state needs an even, positive number of doubles (re,im pairs)")
    v = np.array(values[0::2]) + 1j * np.array(values[1::2])
    nrm = float(np.linalg.norm(v))
    if abs(nrm - 1.0) > STATE_NORM_SLACK:
        raise NormError(f"state norm {nrm} is not within {STATE_NORM_SLACK} of 1")
    return v / nrm


def parse_matrix(text: str, dim: int) -> np.ndarray:
    """Parse row-major interleaved re,im doubles into a dim×dim matrix."""
    values = [float(x) for x in text.split(",") if x.strip() != ""]
    if len(values) != 2 * dim * dim:
        raise AtlasError(f"matrix needs {2 * dim * dim} doubles for dim {dim}")
    flat = np.array(values[0::2]) + 1j * np.array(values[1::2])
    return flat.reshape(dim, dim)


def parse_reals(text: str) -> np.ndarray:
    return np.array([float(x) for x in text.split(",") if x.strip() != ""])


def pairs(v: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in v]


def _notation_default() -> str:
    return os.environ.get("TORIC_ATLAS_NOTATION", "math")


def _emit(args, payload) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2) + "\n"
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_notation(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--notation",
        choices=["math", "engineering"],
        default=_notation_default(),
        help="amplitude-string reading order (default from TORIC_ATLAS_NOTATION or math)",
    )


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write output to this path instead of stdout")


# ── toric ─────────────────────────────────────────────────────────────

def _cmd_toric_decompose(args) -> None:
    tp = toric.decompose(parse_state(args.state))
    _emit(args, tp.to_json())


def _cmd_toric_reconstruct(args) -> None:
    convex = parse_reals(args.convex)
    phases = parse_reals(args.phases)
    defined = convex > qlinalg.DEFAULT_TOL.tol_zero
    canonical = np.where(defined, np.mod(phases, 2 * np.pi), 0.0)
    pivot = int(np.flatnonzero(defined)[0]) if defined.any() else 0
    canonical[pivot] = 0.0
    tp = toric.ToricPoint(convex=convex, phases=canonical, defined=defined, pivot=pivot)
    state = toric.reconstruct(tp)
    _emit(args, {"state": pairs(state)})


def _cmd_toric_project(args) -> None:
    x = parse_reals(args.x)
    if args.map == "squared":
        _emit(args, toric.squared_map(x).to_json())
    elif args.map == "gnomonic":
        _emit(args, toric.gnomonic(x).to_json())
    else:
        y = toric.stereographic(x, args.pole_axis)
        _emit(args, {"point": [float(t) for t in y], "pole_axis": args.pole_axis})


# ── gates ─────────────────────────────────────────────────────────────

def _cmd_gates_list(args) -> None:
    _emit(args, {"radix": args.radix, "gates": gatecat.catalog_json(args.radix)})


def _cmd_gates_apply(args) -> None:
    state = parse_state(args.state)
    gate = gatecat.get_gate(args.radix, args.gate)
    matrix = gate.matrix
    pinned = gate.name.endswith("_math") or gate.name.endswith("_eng")
    if args.radix == 4 and args.notation == "engineering" and not pinned:
        matrix = gatecat.to_engineering(matrix)
    new_state = matrix @ state
    new_state = new_state / np.linalg.norm(new_state)
    _emit(
        args,
        {
            "gate": gate.name,
            "new_state": pairs(new_state),
            "toric_point": toric.decompose(new_state).to_json(),
        },
    )


def _cmd_gates_uniform_check(args) -> None:
    if args.gate:
        m = gatecat.get_gate(args.radix, args.gate).matrix
    else:
        m = parse_matrix(args.matrix, args.radix)
    _emit(args, {"uniformizing": gatecat.is_uniformizing(m)})


def _cmd_gates_verify_eq1(args) -> None:
    report = gatecat.verify_eq1()
    phase = None if report.phase is None else [report.phase.real, report.phase.imag]
    _emit(args, {"holds": report.holds, "phase": phase})


def _cmd_gates_epr(args) -> None:
    _emit(args, gatecat.epr_compose(args.notation).to_json())


# ── group ─────────────────────────────────────────────────────────────

def _parse_generators(text: str) -> list[gategroup.GroupElement]:
    return [gategroup.parse_key(k) for k in text.split(";") if k.strip()]


def _cmd_group_enum(args) -> None:
    elements = gategroup.enumerate_group()
    _emit(args, {"count": len(elements), "elements": [e.key for e in elements]})


def _cmd_group_cayley(args) -> None:
    graph = gategroup.build_cayley(_parse_generators(args.generators))
    if args.format == "dot":
        _emit(args, gategroup.export_dot(graph))
    else:
        _emit(args, graph.to_json())


def _cmd_group_word(args) -> None:
    graph = gategroup.build_cayley(_parse_generators(args.generators))
    target = gategroup.parse_key(args.target)
    word = gategroup.shortest_word(target, graph)
    payload = {"target": target.key, "word": word}
    if word is not None:
        payload["length"] = len(word)
        payload["generators_applied"] = [graph.generators[i].key for i in word]
    _emit(args, payload)


# ── entangle ──────────────────────────────────────────────────────────

def _cmd_entangle_classify(args) -> None:
    state = parse_state(args.state)
    report, tp = entangle.report_with_point(
        state, tol_class=args.tol_class, notation=args.notation
    )
    _emit(args, {"report": report.to_json(), "toric_point": tp.to_json()})


def _cmd_entangle_min_sep(args) -> None:
    state = parse_state(args.state)
    payload = {
        "distance": entangle.min_distance_to_separable(state, notation=args.notation)
    }
    if args.oracle:
        payload["oracle_distance"] = entangle.sampled_min_distance(
            state, n_samples=args.samples, seed=args.seed, notation=args.notation
        )
    _emit(args, payload)


def _cmd_entangle_bell(args) -> None:
    names = ["Phi+", "Phi-", "Psi+", "Psi-"]
    states = entangle.bell_basis(args.notation)
    _emit(args, {"names": names, "states": [pairs(s) for s in states]})


# ── figure ────────────────────────────────────────────────────────────

def _cmd_figure_simplex(args) -> None:
    marks = []
    if args.marks:
        for m in json.loads(args.marks):
            marks.append(
                render.Mark(
                    position=tuple(m["position"]),
                    label=m.get("label", ""),
                    style=m.get("style", "dot"),
                )
            )
    segments = json.loads(args.segments) if args.segments else []
    scene = render.scene_simplex(
        args.radix, marks, [(tuple(a), tuple(b)) for a, b in segments]
    )
    _emit(args, render.to_svg(scene, args.width, args.height))


def _cmd_figure_fiber(args) -> None:
    tp = toric.decompose(parse_state(args.state))
    scene = render.scene_torus_fiber(tp, mode=args.mode)
    _emit(args, render.to_svg(scene, args.width, args.height))


def _cmd_figure_paper(args) -> None:
    if args.number == "20":
        if args.format == "svg":
            raise AtlasError("figure 20 is a matrix identity; use --format json")
        _emit(args, figures.epr_product_report())
        return
    scene = figures.paper_figure_scene(args.number)
    if args.format == "json":
        _emit(args, scene.to_json())
    else:
        _emit(args, render.to_svg(scene, args.width, args.height))


# ── serve ─────────────────────────────────────────────────────────────

def _cmd_serve(args) -> None:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(cors_origin=args.cors_origin), host=args.host, port=args.port)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-atlas",
        description="Toric-geometry atlas of pure state spaces at radix 2, 3 and 4.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    toric_p = top.add_parser("toric", help="toric coordinates and projections")
    toric_sub = toric_p.add_subparsers(dest="subcommand", required=True)
    p = toric_sub.add_parser("decompose", help="state -> convex + phase coordinates")
    p.add_argument("--state", required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_toric_decompose)
    p = toric_sub.add_parser("reconstruct", help="convex + phases -> state")
    p.add_argument("--convex", required=True, help="comma-separated probabilities")
    p.add_argument("--phases", required=True, help="comma-separated radians")
    _add_out(p)
    p.set_defaults(func=_cmd_toric_reconstruct)
    p = toric_sub.add_parser("project", help="octant sphere point -> flat coordinates")
    p.add_argument("--map", choices=["squared", "gnomonic", "stereographic"], required=True)
    p.add_argument("--x", required=True, help="comma-separated non-negative reals, unit norm")
    p.add_argument("--pole-axis", type=int, default=0)
    _add_out(p)
    p.set_defaults(func=_cmd_toric_project)

    gates_p = top.add_parser("gates", help="gate catalog and predicates")
    gates_sub = gates_p.add_subparsers(dest="subcommand", required=True)
    p = gates_sub.add_parser("list", help="full catalog for a radix")
    p.add_argument("--radix", type=int, choices=[2, 3, 4], required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_gates_list)
    p = gates_sub.add_parser("apply", help="apply a named gate to a state")
    p.add_argument("--radix", type=int, choices=[2, 3, 4], required=True)
    p.add_argument("--gate", required=True)
    p.add_argument("--state", required=True)
    _add_notation(p)
    _add_out(p)
    p.set_defaults(func=_cmd_gates_apply)
    p = gates_sub.add_parser("uniform-check", help="test the uniformization property")
    p.add_argument("--radix", type=int, choices=[2, 3, 4], required=True)
    p.add_argument("--gate")
    p.add_argument("--matrix", help="row-major interleaved re,im doubles")
    _add_out(p)
    p.set_defaults(func=_cmd_gates_uniform_check)
    p = gates_sub.add_parser("verify-eq1", help="check H = S·sqrt(X)·S up to phase")
    _add_out(p)
    p.set_defaults(func=_cmd_gates_verify_eq1)
    p = gates_sub.add_parser("epr", help="the entangling composite gate")
    _add_notation(p)
    _add_out(p)
    p.set_defaults(func=_cmd_gates_epr)

    group_p = top.add_parser("group", help="diagonal gate group and Cayley graphs")
    group_sub = group_p.add_subparsers(dest="subcommand", required=True)
    p = group_sub.add_parser("enum", help="enumerate all 36 elements")
    _add_out(p)
    p.set_defaults(func=_cmd_group_enum)
    p = group_sub.add_parser("cayley", help="Cayley graph of chosen generators")
    p.add_argument(
        "--generators",
        default=";".join(gategroup.DEFAULT_GENERATOR_KEYS),
        help='semicolon-separated keys, e.g. "1,w,w2;1,-1,1"',
    )
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    _add_out(p)
    p.set_defaults(func=_cmd_group_cayley)
    p = group_sub.add_parser("word", help="shortest generator word for a target")
    p.add_argument("--target", required=True)
    p.add_argument(
        "--generators", default=";".join(gategroup.DEFAULT_GENERATOR_KEYS)
    )
    _add_out(p)
    p.set_defaults(func=_cmd_group_word)

    ent_p = top.add_parser("entangle", help="two-qubit entanglement analysis")
    ent_sub = ent_p.add_subparsers(dest="subcommand", required=True)
    p = ent_sub.add_parser("classify", help="entanglement report for a state")
    p.add_argument("--state", required=True, help="8 interleaved re,im doubles")
    p.add_argument("--tol-class", type=float, default=1e-9)
    _add_notation(p)
    _add_out(p)
    p.set_defaults(func=_cmd_entangle_classify)
    p = ent_sub.add_parser("min-sep-distance", help="distance to the separable set")
    p.add_argument("--state", required=True)
    p.add_argument("--oracle", action="store_true", help="also run the sampling oracle")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    _add_notation(p)
    _add_out(p)
    p.set_defaults(func=_cmd_entangle_min_sep)
    p = ent_sub.add_parser("bell", help="the four Bell states")
    _add_notation(p)
    _add_out(p)
    p.set_defaults(func=_cmd_entangle_bell)

    fig_p = top.add_parser("figure", help="SVG figure emission")
    fig_sub = fig_p.add_subparsers(dest="subcommand", required=True)
    p = fig_sub.add_parser("simplex", help="simplex view with marks/segments")
    p.add_argument("--radix", type=int, choices=[2, 3, 4], required=True)
    p.add_argument("--marks", help='JSON: [{"position": [...], "label": "A"}]')
    p.add_argument("--segments", help="JSON: [[[...],[...]]]")
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=560)
    _add_out(p)
    p.set_defaults(func=_cmd_figure_simplex)
    p = fig_sub.add_parser("fiber", help="cut-open torus fiber of a state")
    p.add_argument("--state", required=True)
    p.add_argument("--mode", choices=["unit", "affine"], default="unit")
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=560)
    _add_out(p)
    p.set_defaults(func=_cmd_figure_fiber)
    p = fig_sub.add_parser("paper-fig", help="prebuilt reference figures")
    p.add_argument("number", choices=["13", "16", "17", "19", "20"])
    p.add_argument("--format", choices=["svg", "json"], default="svg")
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=560)
    _add_out(p)
    p.set_defaults(func=_cmd_figure_paper)

    serve_p = top.add_parser("serve", help="run the HTTP JSON API")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8000)
    serve_p.add_argument("--cors-origin", default=None)
    serve_p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
        return 0
    except (AtlasError, KeyError, json.JSONDecodeError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        code = getattr(exc, "code", "input")
        sys.stderr.write(json.dumps({"code": code, "message": str(message)}) + "\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(json.dumps({"code": "input", "message": str(exc)}) + "\n")
        return 2
    except Exception as exc:  # pragma: no cover - internal failure path
        sys.stderr.write(f"internal error: {exc!r}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
