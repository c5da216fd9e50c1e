"""
The obstruction report: why positive genus blocks a functorial invariant
========================================================================

On a positive-genus surface the handle relation rewrites a commutator of
loops into the squared crossing s1^2.  Its degree-one symbol is the bare
chord, which survives both the abelianization and the disk augmentation.
A multiplicative universal degree-one invariant would have to kill every
commutator yet keep that chord - a contradiction.  The verifier assembles
the computed steps and the two cited ones into a single verdict.
"""

from surfbraid import SurfaceParams, format_report, verify_nonexistence

surfaces = [
    (1, 1, 2),  # one handle, one boundary curve
    (1, 0, 2),  # closed torus
    (2, 1, 3),  # two handles, three strands
    (0, 1, 2),  # the disk: hypothesis fails, the classical theory survives
    (0, 2, 3),  # the annulus: likewise genus zero
]

for g, p, n in surfaces:
    rep = verify_nonexistence(SurfaceParams(g, p, n))
    print(format_report(rep))
    print()
