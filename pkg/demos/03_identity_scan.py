"""Scanning for multilinear identities of the mutation bracket.

At each degree n the bracket monomials (binary trees on a permutation of
x1..xn) expand linearly into the free perm algebra; the left kernel of
that map is the space of identities.  Comparing it against the T-ideal
consequences of known identities tells us whether new identities appear.
"""

from mutperm import TEMPLATES, new_identities, render

T = TEMPLATES

print("Degree 2: no identities at all.")
rep = new_identities([], 2)
print(f"  kernel {rep['kernel_dim']}")

print("\nDegree 3: a 5-dimensional identity space, fully explained by")
print("the alternating sum f and weak associativity wa:")
rep = new_identities([T["f"], T["wa"]], 3)
print(f"  kernel {rep['kernel_dim']}, consequences {rep['consequence_dim']}, "
      f"new {rep['new_dim']}")

print("\nDegree 4 with f, wa, hbar, ibar known: two new generator")
print("identities are required to close the kernel:")
rep = new_identities([T["f"], T["wa"], T["hbar"], T["ibar"]], 4)
print(f"  kernel {rep['kernel_dim']}, consequences {rep['consequence_dim']}, "
      f"new {rep['new_dim']}")
for i, poly in enumerate(rep["representatives"], 1):
    text = render(poly)
    print(f"  representative {i}: {text[:70]}{'...' if len(text) > 70 else ''}")

print("\nWith the two catalogued degree-4 identities added, nothing is left:")
rep = new_identities([T["f"], T["wa"], T["hbar"], T["ibar"],
                      T["conj4a"], T["conj4b"]], 4)
print(f"  kernel {rep['kernel_dim']}, consequences {rep['consequence_dim']}, "
      f"new {rep['new_dim']}")
