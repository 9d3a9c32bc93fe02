"""``polypoly`` command line: list | count | decompose | verify | export.

Exit codes: 0 success, 1 coloring not symmetric, 2 usage or parse error,
3 scheme does not exist for the requested variant.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import MONOCHROMATIC, catalog, lookup
from .coloring import (
    SchemeUnavailable,
    count_scheme_colorings,
    geometric_scheme,
    nth_scheme_coloring,
    scheme_action,
    scheme_coloring_count,
)
from .documents import DocumentError, document_for, dumps, fmt, read_any, verify_document, write_obj
from .geometry import build_solid, element_orders
from .groups import conjugacy_classes, rainbow_fixed_counts
from .structures import NoDecomposition, matching_decompositions

DECOMPOSE_FOLDS = {"tetrahedron": (2,), "cube": (3, 4), "dodecahedron": (3, 5)}
SOLIDS = tuple(DECOMPOSE_FOLDS)


class UsageError(Exception):
    pass


class Unavailable(Exception):
    pass


def _msg(exc: Exception) -> str:
    return str(exc.args[0]) if exc.args else str(exc)


def _opt(args, name, default):
    return getattr(args, name, default)


def _emit(args, text: str, payload) -> None:
    if _opt(args, "format", "text") == "structured":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_list(args) -> int:
    rows = []
    for e in catalog():
        rows.append({
            "key": e.key,
            "name": e.name,
            "lang_code": e.lang_code or "-",
            "group": e.group,
            "order": e.group_order,
            "vertex_transitive": e.vertex_transitive,
            "variants": len(e.variants) if e.variants else "n/a",
            "schemes": [s.label for s in e.schemes],
        })
    lines = [
        " | ".join([
            r["name"], r["lang_code"], r["group"], str(r["order"]),
            "vertex transitive" if r["vertex_transitive"] else "not vertex transitive",
            str(r["variants"]), ", ".join(r["schemes"]), r["key"],
        ])
        for r in rows
    ]
    _emit(args, "\n".join(lines), rows)
    return 0


def _explain_lines(group, action) -> tuple[list[str], int]:
    fixed = rainbow_fixed_counts(action)
    orders = element_orders(group)
    lines, total = [], 0
    for cls in conjugacy_classes(group):
        per = fixed[cls[0]]
        sub = per * len(cls)
        total += sub
        lines.append(f"class order={orders[cls[0]]} size={len(cls)} fixed={per} subtotal={sub}")
    lines.append(f"sum={total} group_order={group.order} orbits={total // group.order}")
    return lines, total


def cmd_count(args) -> int:
    model = args.model.lower()
    explain = _opt(args, "explain", False)
    chirality = _opt(args, "seed_chirality", "right")
    if model in SOLIDS:
        scheme = args.scheme or f"matching{DECOMPOSE_FOLDS[model][0]}"
        try:
            m, structures, action = geometric_scheme(model, scheme, chirality)
        except (KeyError, LookupError) as exc:
            raise UsageError(_msg(exc)) from None
        count = scheme_coloring_count(structures, action)
        group = m.group
    else:
        try:
            entry = lookup(model)
            entry.check_variant(args.variant)
            spec = entry.scheme(args.scheme) if args.scheme else entry.schemes[0]
        except KeyError as exc:
            raise UsageError(_msg(exc)) from None
        try:
            count = count_scheme_colorings(entry, spec, args.variant)
        except SchemeUnavailable as exc:
            raise Unavailable(str(exc)) from None
        group = action = None
        if spec.kind != MONOCHROMATIC:
            cs = scheme_action(entry, spec, chirality)
            group, action = cs.group, cs.action
    lines = [str(count)]
    payload = {"model": model, "variant": args.variant, "scheme": args.scheme, "count": count}
    if explain:
        if action is None or action.n_points == 1:
            terms = ["monochromatic components: exactly one coloring"]
        else:
            terms, _ = _explain_lines(group, action)
        lines += terms
        payload["burnside"] = terms
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_decompose(args) -> int:
    solid_name = args.solid.lower()
    if solid_name not in DECOMPOSE_FOLDS:
        raise UsageError(f"unknown solid {args.solid!r}; choose from {', '.join(SOLIDS)}")
    if args.fold not in DECOMPOSE_FOLDS[solid_name]:
        allowed = ", ".join(map(str, DECOMPOSE_FOLDS[solid_name]))
        raise UsageError(f"invalid fold {args.fold} for {solid_name}; use {allowed}")
    solid = build_solid(solid_name)
    try:
        decomps = matching_decompositions(solid, args.fold)
    except NoDecomposition as exc:
        raise UsageError(str(exc)) from None
    lines = [
        "format polypoly/1",
        f"decomposition {solid_name} fold {args.fold} solutions {len(decomps)}",
    ]
    payload = {"solid": solid_name, "fold": args.fold, "solutions": []}
    for s, d in enumerate(decomps):
        lines.append(f"solution {s} matchings {len(d.matchings)}")
        sol = []
        for k, m in enumerate(d.matchings):
            axis = " ".join(fmt(x) for x in m.axis.direction)
            lines.append(f"matching {k} axis {axis} edges {len(m.edge_indices)}")
            segs = []
            for e in m.edge_indices:
                a, b = solid.edges[e]
                coords = [*solid.vertices[a], *solid.vertices[b]]
                lines.append("segment " + " ".join(fmt(x) for x in coords))
                segs.append([float(fmt(x)) for x in coords])
            sol.append({"axis": [float(fmt(x)) for x in m.axis.direction], "edges": list(m.edge_indices),
                        "segments": segs})
        payload["solutions"].append(sol)
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_verify(args) -> int:
    try:
        doc = read_any(Path(args.document))
        verdict = verify_document(doc)
    except (OSError, DocumentError, ValueError) as exc:
        raise UsageError(f"cannot read {args.document}: {exc}") from None
    if verdict:
        _emit(args, "SYMMETRIC", {"symmetric": True})
        return 0
    w = verdict.witness
    text = (
        "NOT SYMMETRIC\n"
        f"witness element={w.element} class={w.color}:{list(w.color_class)} "
        f"image={list(w.image)} image_colors={list(w.image_colors)}"
    )
    _emit(args, text, {"symmetric": False, "element": w.element, "class": w.color,
                       "class_edges": list(w.color_class), "image": list(w.image),
                       "image_colors": list(w.image_colors)})
    return 1


def cmd_export(args) -> int:
    chirality = _opt(args, "seed_chirality", "right")
    try:
        model, structures, action = geometric_scheme(args.model.lower(), args.scheme, chirality)
    except (KeyError, LookupError) as exc:
        raise UsageError(_msg(exc)) from None
    try:
        coloring = nth_scheme_coloring(model, structures, action, args.index)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    doc = document_for(model, args.scheme, coloring)
    out = Path(args.output)
    obj = out if out.suffix == ".obj" else out.with_suffix(".obj")
    obj.parent.mkdir(parents=True, exist_ok=True)
    obj, mtl = write_obj(doc, obj)
    doc_path = obj.with_suffix(".polypoly")
    doc_path.write_text(dumps(doc))
    _emit(args, f"wrote {obj}\nwrote {mtl}\nwrote {doc_path}",
          {"obj": str(obj), "mtl": str(mtl), "document": str(doc_path)})
    return 0


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--format", choices=("text", "structured"), **d)
    parser.add_argument("--explain", action="store_true", **d)
    parser.add_argument("--seed-chirality", choices=("left", "right"), dest="seed_chirality", **d)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polypoly", description="Symmetric colorings of polypolyhedra.")
    _global_flags(parser, suppress=False)
    parser.set_defaults(format="text", explain=False, seed_chirality="right")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="catalog of polypolyhedra")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("count", help="count rotation-distinct scheme colorings")
    p.add_argument("model")
    p.add_argument("--variant")
    p.add_argument("--scheme")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("decompose", help="matching decompositions of a base solid")
    p.add_argument("solid")
    p.add_argument("fold", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a coloring document or exported mesh")
    p.add_argument("document")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a colored line mesh")
    p.add_argument("model")
    p.add_argument("scheme")
    p.add_argument("index", type=int)
    p.add_argument("output")
    p.set_defaults(func=cmd_export)

    for child in sub.choices.values():
        _global_flags(child, suppress=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Unavailable as exc:
        print(exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
