"""Certify that the knotted dyadic embedding is genuinely different.

The trefoil-companion embedding of the 2-adic solenoid has the same
homology as the unknotted one, so telling them apart needs the
non-Abelian part of the fundamental group. This script exhibits
finite permutation quotients that the unknotted complement does not
admit.
"""

from solbraid import (
    DefiningSequence,
    abelianize,
    alternating_witness,
    dyadic_form,
    format_assignment,
    format_presentation,
    search_homs,
    tietze_reduce,
    tietze_reduce_with_trace,
    transport_assignment,
    trefoil_scheme,
    truncate,
    unknotted_scheme,
    verify_hom,
)

knotted = trefoil_scheme()
unknotted = unknotted_scheme(DefiningSequence((), (2,)))

# Homology sees no difference: both towers have H1 = Z at every depth.
for scheme, name in ((knotted, "knotted"), (unknotted, "unknotted")):
    invariants, _ = abelianize(truncate(scheme, 3))
    print(f"{name} depth 3: rank {invariants.rank}, torsion {list(invariants.torsion)}")
print()

# Depth 1 of the knotted tower is the trefoil complement; reduction
# recovers the familiar two-generator braid presentation.
p1 = tietze_reduce(truncate(knotted, 1))
print("knotted depth 1 reduces to:")
print(format_presentation(p1))
print()

# A degree-3 search separates the towers: the trefoil truncation has
# symmetric quotients with non-commuting meridian images, the
# unknotted one has none at any depth.
found = search_homs(p1, 3)
print(f"degree-3 assignments onto the knotted depth-1 group: {len(found.assignments)}")
for L in (1, 2, 3, 4):
    q = tietze_reduce(truncate(unknotted, L))
    result = search_homs(q, 3)
    print(f"degree-3 assignments for unknotted depth {L}: {len(result.assignments)}")
print()

# Search results live on the reduced presentation; the recorded trace
# transports them back to the raw truncation.
raw = truncate(knotted, 1)
reduced, trace = tietze_reduce_with_trace(raw)
back = transport_assignment(search_homs(reduced, 3).assignments[0], trace)
print(f"transported assignment verifies on the raw presentation: "
      f"{verify_hom(raw, back)}")
print()

# At arbitrary depth no search is needed: the alternating witness
# sends stage meridians to overlapping 3-cycles and verifies against
# the normal form in one pass.
for L in (1, 5, 12):
    w = alternating_witness(L)
    ok = verify_hom(dyadic_form(truncate(knotted, L)), w)
    print(f"alternating witness at depth {L} (degree {w.degree}): {ok}")
print()
print("witness at depth 2:")
print(format_assignment(alternating_witness(2)))
