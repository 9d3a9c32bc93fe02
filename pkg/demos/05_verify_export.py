"""Checking colorings for symmetry and exporting a colored mesh."""
import tempfile
from pathlib import Path

from polypoly.coloring import Coloring, geometric_scheme, is_symmetric_coloring, nth_scheme_coloring
from polypoly.documents import document_for, read_obj, verify_document, write_obj

model, structures, action = geometric_scheme("fit", "band")
coloring = nth_scheme_coloring(model, structures, action, 0)
print("band coloring 0:", coloring.edge_colors)
print("symmetric:", bool(is_symmetric_coloring(model, coloring)))

# recoloring one strut breaks the symmetry; the witness names the rotation that exposes it
broken = list(coloring.edge_colors)
broken[0] = (broken[0] + 1) % 6
verdict = is_symmetric_coloring(model, Coloring.from_labels(broken))
w = verdict.witness
print(f"after recoloring strut 0: symmetric={bool(verdict)}, rotation {w.element} "
      f"maps class {list(w.color_class)} onto {list(w.image)} colored {list(w.image_colors)}")

with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "fit-band-0.obj"
    write_obj(document_for(model, "band", coloring), path)
    print("exported", path.name, "and", path.with_suffix(".mtl").name)
    print("re-read and verified:", bool(verify_document(read_obj(path))))
