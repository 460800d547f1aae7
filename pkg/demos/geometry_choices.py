"""Build geometric embedding schemes from recorded hyperbolic braids.

For strand counts 3, 4 and 5 the table of recorded braids offers two
or three one-component-closure variants per count, each with a
hyperbolic complement volume. A bit sequence picks between the first
two variants per level, producing uncountably many embedding schemes
over the same solenoid.
"""

from solbraid import (
    DefiningSequence,
    abelianize,
    format_braid,
    geometry_scheme,
    h1_scaling,
    parse_choices,
    table1_rows,
    truncate,
    validate_scheme,
)

print("Recorded hyperbolic braids:")
for n, variant, braid, volume in table1_rows():
    print(f"  n={n} variant {variant}: {format_braid(braid):24} volume {volume}")
print()

ns = DefiningSequence((), (3,))
for bits in ("0", "1", "01"):
    scheme = geometry_scheme(ns, parse_choices(bits))
    shown = [format_braid(scheme.level_spec(i).braid) for i in (1, 2)]
    print(f"choices {bits!r:5}: levels 1,2 use {shown[0]} / {shown[1]}")
print()

# The choice bits change the embedding, not the solenoid: homology of
# every truncation stays Z and the meridian scaling at each depth is
# always the strand count.
mixed = geometry_scheme(DefiningSequence((4,), (3, 5)), parse_choices("1|01"))
problems = validate_scheme(mixed)
print(f"validate_scheme(mixed scheme): {len(problems)} diagnostics")
for L in (2, 3, 4):
    invariants, _ = abelianize(truncate(mixed, L))
    print(f"depth {L}: rank {invariants.rank}, torsion {list(invariants.torsion)}, "
          f"meridian scaling {h1_scaling(mixed, L)}")
