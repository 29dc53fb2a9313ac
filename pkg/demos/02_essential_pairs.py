"""Finding and checking essential pairs.

Enumerates small coefficient boxes for pairs matching a target discriminant,
verifies the bundled quartic/quintic tables, and builds a pair from a single
generating element.
"""

import time

from arithmat import BinaryForm, EssentialPair, make_field
from arithmat.search import (
    essential_pair_from_element,
    load_bundled_table,
    search_essential_pairs,
    verify_tables,
)

print("search: quartic pairs with discriminant -275, height 2")
for pair in search_essential_pairs(-275, 4, 2, 1):
    print("  ", pair.text())

print("\nsearch: discriminant 513 needs a scale factor (no essential form found)")
start = time.perf_counter()
pairs = search_essential_pairs(513, 4, 4, 2)
print(f"  box searched in {time.perf_counter() - start:.2f}s")
for pair in pairs:
    print("  ", pair.text())

print("\nverifying the bundled tables (exact discriminants, divisibility, irreducibility)")
for name in ("quartic", "quintic"):
    report = verify_tables(load_bundled_table(name))
    print(f"  {name}: {report.lines()[0]}")

print("\nessential pair from an element:")
F = make_field(EssentialPair(1, BinaryForm([1, 1, 0, -2, -1])))
pair = essential_pair_from_element(F, F.basis_element(1))
print("  omega_1 of the disc -275 field gives", pair.text())
print("  (the form is the reversed homogenization of its minimal polynomial)")
