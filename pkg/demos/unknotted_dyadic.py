"""Walk through the unknotted dyadic solenoid complement.

Builds the standard 2-adic embedding scheme, prints truncated
presentations at a few depths, reduces them, and shows the normal
form whose relator families make the structure visible.
"""

from solbraid import (
    DefiningSequence,
    dyadic_form,
    format_presentation,
    tietze_reduce,
    truncate,
    unknotted_scheme,
)

scheme = unknotted_scheme(DefiningSequence((), (2,)))

print("Scheme:")
print("  levels repeat the 2-strand unknotted braid, framing X0 X1^-2")
print()

for L in (1, 2):
    p = truncate(scheme, L)
    print(f"Truncation at depth {L}: {len(p.generators)} generators, "
          f"{len(p.relators)} relators")
    print(format_presentation(p))
    print()

# Every truncation of the unknotted embedding is a solid torus, so the
# whole tower should reduce to the integers.
for L in (1, 4, 8):
    q = tietze_reduce(truncate(scheme, L))
    print(f"depth {L} reduces to {len(q.generators)} generator(s), "
          f"{len(q.relators)} relator(s); "
          f"meridian becomes {q.peripheral[0]}, longitude {q.peripheral[1]}")
print()

# The dyadic normal form rewrites each truncation over stage meridians
# z_i and stage axes s_i; for the unknotted scheme the conjugation
# family says s_i^-1 z_{i+1} s_i = z_{i+1}^-1 z_i, a shifted copy of
# the Klein bottle relation at every stage.
print("Normal form at depth 3:")
print(format_presentation(dyadic_form(truncate(scheme, 3))))
