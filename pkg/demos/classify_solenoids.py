"""Classify solenoids up to homeomorphism.

Two inverse limits of circles are homeomorphic exactly when their
winding sequences share, up to finitely many factors, the same
supply of each prime. This script runs the classification on small
examples and cross-checks it against the subgroup of the rationals
that each solenoid determines.
"""

from fractions import Fraction

from solbraid import (
    DefiningSequence,
    format_heights,
    heights_from_sequence,
    homeomorphic,
    limit_member,
    normalize,
    parse_sequence,
    q_isomorphic,
    q_member,
)

pairs = [
    ("| 2,3", "| 6"),      # interleaving 2s and 3s is the same as repeating 6
    ("| 2", "| 3"),        # different primes, different solenoids
    ("7 | 2", "| 2"),      # a finite prefix never matters
    ("2,4 | 3", "| 2,3"),  # only finitely many 2s on the left
]
for left, right in pairs:
    s1, s2 = parse_sequence(left), parse_sequence(right)
    print(f"{left!r:12} vs {right!r:8}: homeomorphic = {homeomorphic(s1, s2)}")
print()

# The worked sequence 2,4,6,8,5 repeating 3: each prime gets a height,
# the exponent cap on denominators in the associated subgroup of Q.
s = DefiningSequence((2, 4, 6, 8, 5), (3,))
d = heights_from_sequence(s)
print(f"heights of 2,4,6,8,5 | 3: {format_heights(d)}")
print(f"height of 2 is {d.height(2)}: 1/2^7 in the subgroup: "
      f"{q_member(d, Fraction(1, 2**7))}, "
      f"1/2^8: {q_member(d, Fraction(1, 2**8))}")
print()

# Membership can also be decided directly on the tower, without the
# descriptor: a rational belongs when its denominator is eventually
# absorbed by the partial winding products.
for text in ("5/8", "1/9", "-3/128", "22/7"):
    r = Fraction(text)
    print(f"{str(r):7} via tower: {limit_member(s, r)}, "
          f"via heights: {q_member(d, r)}")
print()

# Homeomorphic solenoids determine isomorphic subgroups of Q, and over
# eventually periodic sequences the two classifications agree: only the
# primes with infinite supply matter to either. The height descriptors
# themselves still remember the finite part.
a, b = parse_sequence("| 2,3"), parse_sequence("| 6")
print(f"| 2,3 ~ | 6: homeomorphic {homeomorphic(a, b)}, "
      f"Q-isomorphic {q_isomorphic(heights_from_sequence(a), heights_from_sequence(b))}")
c, c0 = parse_sequence("2 | 3"), parse_sequence("| 3")
dc, dc0 = heights_from_sequence(c), heights_from_sequence(c0)
print(f"2 | 3 vs | 3: homeomorphic {homeomorphic(c, c0)}, "
      f"Q-isomorphic {q_isomorphic(dc, dc0)}, "
      f"descriptors {format_heights(dc)} vs {format_heights(dc0)}")
print()

print(f"normalized form of 5 | 1: {normalize(parse_sequence('5 | 1'))}")
