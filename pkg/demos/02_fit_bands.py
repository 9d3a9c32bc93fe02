"""The five intersecting tetrahedra: bands, circuits and the matching they map to."""
from polypoly.geometry import build_fit, build_solid
from polypoly.structures import band_decomposition, is_closed_circuit, matching_of_band

fit = build_fit()
print(f"FIT ({fit.meta['chirality']}): {fit.n_edges} struts in {len(fit.components)} tetrahedra")

# each band is the orbit of one strut under a 5-fold rotation
bands = band_decomposition(fit)
comp = fit.component_of_edge()
dodeca = build_solid("dodecahedron")
for i, band in enumerate(bands):
    tetra = [int(comp[e]) for e in band.edge_indices]
    matching = matching_of_band(band, dodeca)
    print(f"band {i}: struts {list(band.edge_indices)} tetrahedra {tetra} "
          f"closed={is_closed_circuit(band)} -> dodecahedron edges {list(matching.edge_indices)}")
