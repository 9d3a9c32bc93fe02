"""Coloring documents (``polypoly/1`` text) and Wavefront OBJ/MTL line meshes."""
from __future__ import annotations

import colorsys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .coloring import Coloring, GEOMETRIC_MODELS, _fit, is_symmetric_coloring
from .geometry import PolyModel, solid_model

VERSION = "polypoly/1"

PALETTE = {
    "red": (0.85, 0.12, 0.12),
    "orange": (0.95, 0.55, 0.10),
    "yellow": (0.95, 0.85, 0.15),
    "green": (0.15, 0.65, 0.20),
    "blue": (0.15, 0.35, 0.85),
    "violet": (0.55, 0.20, 0.75),
    "cyan": (0.10, 0.75, 0.80),
    "magenta": (0.85, 0.20, 0.60),
    "brown": (0.50, 0.30, 0.15),
    "pink": (0.98, 0.65, 0.75),
    "gray": (0.50, 0.50, 0.50),
    "olive": (0.50, 0.55, 0.10),
}


class DocumentError(ValueError):
    pass


def palette_names(k: int) -> list[str]:
    names = list(PALETTE)
    return [names[i] if i < len(names) else f"color{i}" for i in range(k)]


def _rgb(name: str) -> tuple[float, float, float]:
    if name in PALETTE:
        return PALETTE[name]
    # deterministic fallback spread around the hue circle
    i = int(name[5:]) if name.startswith("color") and name[5:].isdigit() else sum(map(ord, name))
    return colorsys.hsv_to_rgb((i * 0.618034) % 1.0, 0.7, 0.9)


def fmt(x: float) -> str:
    x = float(x)
    return f"{0.0 if abs(x) < 1e-12 else x:.12g}"


@dataclass
class ColoringDocument:
    model: str
    scheme: str
    edge_colors: list[int]
    palette: list[str]
    edges: list[tuple[tuple[float, ...], tuple[float, ...]]] | None = None
    variant: str | None = None
    chirality: str = "right"

    def validate(self) -> None:
        if self.edges is not None and len(self.edges) != len(self.edge_colors):
            raise DocumentError(f"{len(self.edges)} edges but {len(self.edge_colors)} colours")
        used = set(self.edge_colors)
        if used != set(range(len(self.palette))):
            raise DocumentError(
                f"palette has {len(self.palette)} entries but colours {sorted(used)} are used"
            )


def model_by_name(name: str, chirality: str = "right") -> PolyModel:
    if name == "fit":
        return _fit(chirality)
    if name in GEOMETRIC_MODELS:
        return solid_model(name)
    raise DocumentError(f"no geometric model named {name!r}")


def document_for(model: PolyModel, scheme: str, coloring: Coloring, variant=None) -> ColoringDocument:
    edges = None
    if model.vertices is not None:
        edges = [
            (tuple(model.vertices[a]), tuple(model.vertices[b])) for a, b in model.edges
        ]
    return ColoringDocument(
        model.name, scheme, list(coloring.edge_colors), palette_names(coloring.num_colors),
        edges, variant, model.meta.get("chirality", "right"),
    )


def dumps(doc: ColoringDocument) -> str:
    doc.validate()
    lines = [
        f"format {VERSION}",
        f"model {doc.model}",
        f"variant {doc.variant or '-'}",
        f"scheme {doc.scheme}",
        f"chirality {doc.chirality}",
        "palette " + " ".join(doc.palette),
        f"edges {len(doc.edge_colors)}",
    ]
    for i, c in enumerate(doc.edge_colors):
        if doc.edges is None:
            lines.append(f"e {i} {c}")
        else:
            p, q = doc.edges[i]
            lines.append(f"e {i} " + " ".join(fmt(x) for x in (*p, *q)) + f" {c}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> ColoringDocument:
    header: dict[str, str] = {}
    colors: list[int] = []
    edges: list = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key == "e":
            parts = rest.split()
            try:
                if len(parts) == 8:
                    xs = [float(x) for x in parts[1:7]]
                    edges.append((tuple(xs[:3]), tuple(xs[3:])))
                elif len(parts) != 2:
                    raise ValueError
                if int(parts[0]) != len(colors):
                    raise DocumentError(f"line {n}: edge index {parts[0]} out of sequence")
                colors.append(int(parts[-1]))
            except ValueError:
                raise DocumentError(f"line {n}: malformed edge record") from None
        else:
            header[key] = rest.strip()
    if header.get("format") != VERSION:
        raise DocumentError(f"expected 'format {VERSION}'")
    for required in ("model", "scheme", "palette", "edges"):
        if required not in header:
            raise DocumentError(f"missing {required!r} line")
    if int(header["edges"]) != len(colors):
        raise DocumentError(f"declared {header['edges']} edges, found {len(colors)}")
    if edges and len(edges) != len(colors):
        raise DocumentError("some edge records lack coordinates")
    variant = header.get("variant", "-")
    doc = ColoringDocument(
        header["model"], header["scheme"], colors, header["palette"].split(),
        edges or None, None if variant == "-" else variant, header.get("chirality", "right"),
    )
    doc.validate()
    return doc


def coloring_on_model(doc: ColoringDocument) -> tuple[PolyModel, Coloring]:
    """Rebuild the named model and align the document's edges to it by coordinates."""
    model = model_by_name(doc.model, doc.chirality)
    if len(doc.edge_colors) != model.n_edges:
        raise DocumentError(f"{doc.model} has {model.n_edges} edges, document has {len(doc.edge_colors)}")
    if doc.edges is None:
        return model, Coloring.from_labels(doc.edge_colors)
    verts = model.vertices
    lookup = {frozenset(e): k for k, e in enumerate(model.edges)}
    colors = [-1] * model.n_edges
    for (p, q), c in zip(doc.edges, doc.edge_colors):
        ends = []
        for pt in (p, q):
            d = np.linalg.norm(verts - np.asarray(pt), axis=1)
            if d.min() > 1e-6:
                raise DocumentError(f"point {pt} is not a vertex of {doc.model}")
            ends.append(int(d.argmin()))
        k = lookup.get(frozenset(ends))
        if k is None:
            raise DocumentError(f"segment {p}-{q} is not an edge of {doc.model}")
        if colors[k] != -1:
            raise DocumentError(f"edge {p}-{q} listed twice")
        colors[k] = c
    return model, Coloring.from_labels(colors)


def verify_document(doc: ColoringDocument):
    model, coloring = coloring_on_model(doc)
    return is_symmetric_coloring(model, coloring)


def write_obj(doc: ColoringDocument, obj_path: Path) -> tuple[Path, Path]:
    """Line-segment OBJ with one group and material per colour, plus its MTL."""
    if doc.edges is None:
        raise DocumentError("mesh export needs edge coordinates")
    doc.validate()
    obj_path = Path(obj_path)
    mtl_path = obj_path.with_suffix(".mtl")
    points: dict[tuple[str, ...], int] = {}
    for p, q in doc.edges:
        for pt in (p, q):
            points.setdefault(tuple(fmt(x) for x in pt), len(points) + 1)
    out = [
        f"# {VERSION} model={doc.model} scheme={doc.scheme} "
        f"variant={doc.variant or '-'} chirality={doc.chirality}",
        f"mtllib {mtl_path.name}",
        f"o {doc.model}",
    ]
    out += ["v " + " ".join(key) for key in points]
    for c, name in enumerate(doc.palette):
        out += [f"g {name}", f"usemtl {name}"]
        for (p, q), color in zip(doc.edges, doc.edge_colors):
            if color == c:
                a = points[tuple(fmt(x) for x in p)]
                b = points[tuple(fmt(x) for x in q)]
                out.append(f"l {a} {b}")
    obj_path.write_text("\n".join(out) + "\n")
    mtl = []
    for name in doc.palette:
        r, g, b = _rgb(name)
        mtl += [f"newmtl {name}", f"Kd {r:.3f} {g:.3f} {b:.3f}", ""]
    mtl_path.write_text("\n".join(mtl))
    return obj_path, mtl_path


def read_obj(path: Path) -> ColoringDocument:
    """Recover a coloring document from a mesh written by :func:`write_obj`."""
    meta: dict[str, str] = {}
    verts: list[tuple[float, ...]] = []
    palette: list[str] = []
    edges, colors = [], []
    current = None
    for raw in Path(path).read_text().splitlines():
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "#" and len(parts) > 1 and parts[1] == VERSION:
            meta = dict(p.split("=", 1) for p in parts[2:] if "=" in p)
        elif parts[0] == "v":
            verts.append(tuple(float(x) for x in parts[1:4]))
        elif parts[0] == "usemtl":
            current = parts[1]
            if current not in palette:
                palette.append(current)
        elif parts[0] == "l":
            if current is None:
                raise DocumentError("line segment before any usemtl")
            a, b = (int(x.split("/")[0]) - 1 for x in parts[1:3])
            edges.append((verts[a], verts[b]))
            colors.append(palette.index(current))
    if "model" not in meta:
        raise DocumentError(f"{path} lacks a '# {VERSION}' header")
    variant = meta.get("variant", "-")
    doc = ColoringDocument(
        meta["model"], meta.get("scheme", "?"), colors, palette, edges,
        None if variant == "-" else variant, meta.get("chirality", "right"),
    )
    doc.validate()
    return doc


def read_any(path: Path) -> ColoringDocument:
    path = Path(path)
    text = path.read_text()
    if text.lstrip().startswith(f"format {VERSION}"):
        return loads(text)
    return read_obj(path)
