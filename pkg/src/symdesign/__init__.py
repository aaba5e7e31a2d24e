"""Flag-transitive point-imprimitive symmetric 2-designs on fewer than 100 points.

The package constructs the relevant designs, verifies their parameters,
computes automorphism groups and isomorphisms, decomposes designs along an
invariant point partition, and reproduces the admissible-parameter tables
for the symmetric case.
"""

__version__ = "0.1.0"
