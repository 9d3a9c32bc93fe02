"""Counting rotation-distinct colorings with Burnside's lemma and checking by brute force."""
import math

from polypoly.catalog import catalog
from polypoly.coloring import count_scheme_colorings, fit_band_action
from polypoly.groups import burnside_rainbow_count, orbit_enum_count, rainbow_labelings

action = fit_band_action()
print("FIT bands, six colors")
print("  Burnside:", burnside_rainbow_count(action))
print("  orbit enumeration over 720 labelings:", orbit_enum_count(action, rainbow_labelings(6)))
print("  6!/60 =", math.factorial(6) // 60)

print("\nCatalog counts")
for entry in catalog():
    variant = entry.variants[0] if entry.variants else None
    for scheme in entry.schemes:
        if not scheme.exists(variant):
            print(f"  {entry.key} {scheme.label}: unavailable ({scheme.reason(variant)})")
            continue
        print(f"  {entry.key} {scheme.label}: {count_scheme_colorings(entry, scheme, variant)}")
