"""Exact ring-of-integers arithmetic through integer matrices.

Walks through the basic workflow: define a field from an essential pair,
look at the multiplication matrix of an element, and do arithmetic that
never leaves exact integers/rationals.
"""

from arithmat import (
    BinaryForm,
    EssentialPair,
    arithmetic_matrix,
    integral_basis_description,
    make_field,
    symbolic_arithmetic_matrix,
)
from arithmat import element as el

# A quartic field of discriminant -275, defined by a form whose discriminant
# equals the field discriminant on the nose (scale factor a0 = 1).
F = make_field(EssentialPair(1, BinaryForm([1, 1, 0, -2, -1])))
print("field:", F)
print("integral basis:", integral_basis_description(F))

alpha = F.element([1, 2, 0, -1])
beta = F.element([0, 1, 1, 0])
print("\nmultiplication matrix of alpha =", alpha.text())
print(arithmetic_matrix(F, alpha))

print("\nalpha * beta =", el.mul(F, alpha, beta).text())
print("trace(alpha) =", el.trace(F, alpha))
print("norm(alpha)  =", el.norm(F, alpha))
print("norm via resultant oracle =", el.norm_resultant_oracle(F, alpha))
print("characteristic polynomial:", el.char_poly(F, alpha))

inv = el.inverse(F, alpha)
print("1/alpha =", inv.text(), " (alpha * 1/alpha =", el.mul(F, alpha, inv).text(), ")")

# When no form of discriminant D exists, a scaled pair still defines the
# ring: here disc(form) = 4 * 513 and the basis absorbs the factor 2.
G = make_field(EssentialPair(2, BinaryForm([4, -2, -3, 1, 1])))
print("\nscaled field:", G)
print("integral basis:", integral_basis_description(G))
print("symbolic multiplication matrix:")
print(symbolic_arithmetic_matrix(G))
print("\nomega_1 has characteristic polynomial:", el.char_poly(G, G.basis_element(1)))
