"""Command-line interface.

Every subcommand reads the documented JSON/PD formats, writes one JSON
document (or DOT/PD/Gauss text under ``--format``) to stdout and uses the
exit codes: 0 success or domain "yes", 1 domain "no" or regression
mismatch, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import load_catalog, run_regression
from .errors import MapError
from .incidence import incidence_graph, symmetric_cycles
from .links import (
    EdgeSignedMap,
    LinkDiagram,
    diagram_from_json_dict,
    diagram_to_tait,
    gauss_text,
    kauffman_bracket,
    parse_pd_text,
    tait_to_diagram,
)
from .maps import (
    MedialMap,
    dumps_json,
    map_from_dict,
    map_to_dict,
    map_to_dot,
    signs_from_dict,
    signs_to_list,
)
from .projective import check_projective, max_residual_over_sample
from .symmetry import (
    antipodal_involutions,
    automorphisms,
    is_antipodally_self_dual,
    is_antipodally_symmetric,
    is_self_dual,
)

RESIDUAL_TOLERANCE = 1e-12


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MapError(f"cannot read JSON from {path}: {exc}")


def _load_map(path: str):
    return map_from_dict(_read_json(path))


def _load_signed_map(path: str) -> EdgeSignedMap:
    data = _read_json(path)
    m = map_from_dict(data)
    return EdgeSignedMap(m, signs_from_dict(data, m.n_edges))


def _load_diagram(path: str) -> LinkDiagram:
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MapError(f"cannot parse JSON from {path}: {exc}")
        if "crossings" in data:
            return diagram_from_json_dict(data)
        if "rotations" in data:
            m = map_from_dict(data)
            return tait_to_diagram(EdgeSignedMap(m, signs_from_dict(data, m.n_edges)))
        raise MapError("JSON input is neither a diagram nor an edge-signed map")
    return parse_pd_text(text)


def _iso_dict(iso) -> dict:
    return {"darts": list(iso.darts), "orientation": iso.orientation}


def _witness_dict(w) -> dict:
    d = _iso_dict(w.involution)
    d["kind"] = w.kind
    return d


def _emit_map(m, fmt: str) -> str:
    if fmt == "dot":
        return map_to_dot(m)
    return dumps_json(map_to_dict(m))


def cmd_validate(args) -> tuple[str, int]:
    m = _load_map(args.path)
    return dumps_json(
        {"valid": True, "vertices": m.n_vertices, "edges": m.n_edges, "faces": m.n_faces}
    ), 0


def cmd_dual(args) -> tuple[str, int]:
    return _emit_map(_load_map(args.path).dual(), args.format), 0


def cmd_medial(args) -> tuple[str, int]:
    return _emit_map(_load_map(args.path).medial(), args.format), 0


def cmd_autos(args) -> tuple[str, int]:
    autos = automorphisms(_load_map(args.path), args.policy)
    return dumps_json(
        {"count": len(autos), "automorphisms": [_iso_dict(a) for a in autos]}
    ), 0


def cmd_check_antipodal(args) -> tuple[str, int]:
    m = _load_map(args.path)
    ws = antipodal_involutions(m)
    payload = {
        "antipodally_symmetric": bool(ws),
        "witness": _witness_dict(ws[0]) if ws else None,
        "witness_count": len(ws),
        "faces": m.n_faces,
    }
    return dumps_json(payload), 0 if ws else 1


def cmd_check_selfdual(args) -> tuple[str, int]:
    w = is_self_dual(_load_map(args.path))
    payload = {"self_dual": w is not None, "witness": _iso_dict(w) if w else None}
    return dumps_json(payload), 0 if w else 1


def cmd_check_antipodal_selfdual(args) -> tuple[str, int]:
    m = _load_map(args.path)
    w = is_antipodally_self_dual(m)
    payload = {
        "antipodally_self_dual": w is not None,
        "witness": _witness_dict(w) if w else None,
        "medial_antipodally_symmetric": bool(antipodal_involutions(m.medial()))
        if w
        else None,
    }
    return dumps_json(payload), 0 if w else 1


def cmd_tait2pd(args) -> tuple[str, int]:
    d = tait_to_diagram(_load_signed_map(args.path))
    if args.format == "pd":
        return d.pd_text() + "\n", 0
    if args.format == "gauss":
        return gauss_text(d) + "\n", 0
    return dumps_json(d.to_json_dict()), 0


def cmd_pd2tait(args) -> tuple[str, int]:
    d = _load_diagram(args.path)
    g = diagram_to_tait(d, side=args.side)
    payload = map_to_dict(g.map)
    payload["edge_signs"] = signs_to_list(g.signs)
    payload["black_choice"] = "recorded" if d.black_faces is not None else "canonical"
    return dumps_json(payload), 0


def cmd_check_projective(args) -> tuple[str, int]:
    report = check_projective(_load_signed_map(args.path))
    return dumps_json(report.to_json_dict()), 0 if report.projective else 1


def cmd_incidence(args) -> tuple[str, int]:
    inc = incidence_graph(_load_map(args.path))
    if args.format == "dot":
        return map_to_dot(inc.map), 0
    payload = map_to_dict(inc.map)
    payload["vertex_tags"] = [[kind, i] for kind, i in inc.vertex_tags]
    return dumps_json(payload), 0


def cmd_symcycles(args) -> tuple[str, int]:
    m = _load_map(args.path)
    cycles = symmetric_cycles(m, args.max_len)
    if args.format == "dot":
        inc = incidence_graph(m)
        bold = cycles[0].edges if cycles else ()
        return map_to_dot(inc.map, bold_edges=bold), 0
    return dumps_json({"count": len(cycles), "cycles": [c.to_json_dict() for c in cycles]}), 0


def cmd_bracket(args) -> tuple[str, int]:
    d = _load_diagram(args.path)
    poly = kauffman_bracket(d, max_crossings=args.max_crossings)
    payload = {
        "crossings": len(d.crossings),
        "components": d.components,
        "bracket": poly.to_dict(),
        "pretty": str(poly),
    }
    return dumps_json(payload), 0


def cmd_verify_inversion(args) -> tuple[str, int]:
    worst = max_residual_over_sample(args.samples, args.seed)
    ok = worst < RESIDUAL_TOLERANCE
    payload = {
        "samples": args.samples,
        "seed": args.seed,
        "max_residual": worst,
        "tolerance": RESIDUAL_TOLERANCE,
        "within_tolerance": ok,
    }
    return dumps_json(payload), 0 if ok else 1


def cmd_regress(args) -> tuple[str, int]:
    entries = load_catalog(Path(args.catalog) if args.catalog else None)
    report = run_regression(entries)
    return dumps_json(report.to_json_dict()), 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projlink",
        description="Combinatorial maps, checkerboard link diagrams, projectivity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "validate a map JSON file")
    p.add_argument("path")

    for name, func, help_ in (
        ("dual", cmd_dual, "geometric dual of a map"),
        ("medial", cmd_medial, "medial of a map"),
    ):
        p = add(name, func, help_)
        p.add_argument("path")
        p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("autos", cmd_autos, "automorphisms of a map")
    p.add_argument("path")
    p.add_argument("--policy", choices=("preserving", "reversing", "both"), default="both")

    p = add("check-antipodal", cmd_check_antipodal, "antipodal symmetry of a map")
    p.add_argument("path")

    p = add("check-selfdual", cmd_check_selfdual, "self-duality of a map")
    p.add_argument("path")

    p = add(
        "check-antipodal-selfdual",
        cmd_check_antipodal_selfdual,
        "antipodal self-duality of a map",
    )
    p.add_argument("path")

    p = add("tait2pd", cmd_tait2pd, "link diagram of an edge-signed map")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "pd", "gauss"), default="json")

    p = add("pd2tait", cmd_pd2tait, "checkerboard graph of a diagram")
    p.add_argument("path")
    p.add_argument("--side", choices=("black", "white"), default="black")

    p = add("check-projective", cmd_check_projective, "projectivity of an edge-signed map")
    p.add_argument("path")

    p = add("incidence", cmd_incidence, "vertex-face incidence map")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("symcycles", cmd_symcycles, "symmetric cycles of the incidence map")
    p.add_argument("path")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("bracket", cmd_bracket, "Kauffman bracket of a diagram")
    p.add_argument("path")
    p.add_argument("--max-crossings", type=int, default=16)

    p = add("verify-inversion", cmd_verify_inversion, "numeric inversion identity check")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    p = add("regress", cmd_regress, "run the catalog regression")
    p.add_argument("--catalog", default=None, help="alternate fixture directory")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        output, code = args.func(args)
    except MapError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
