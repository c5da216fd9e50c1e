"""
Braid words on a surface: parsing, arithmetic, and the relator catalog
======================================================================

Words use generators ``s1 .. s(n-1)`` (crossings), ``a1/b1 .. ag/bg``
(handle loops) and ``z1 .. z(p-1)`` (boundary loops), with ``^-1`` for
inverses.  Every surface carries a finite relator catalog, and a bounded
search can certify equalities by replaying relator moves.
"""

from surfbraid import (
    SurfaceParams,
    bounded_equal,
    format_word,
    free_reduce,
    inverse_word,
    parse_braid_word,
    relators,
)

# the twice-punctured torus with two strands: genus 1, one boundary curve
s = SurfaceParams(genus=1, boundary=1, strands=2)

u = parse_braid_word("a1 s1 b1^-1", s)
v = parse_braid_word("b1 s1^-1", s)
print("u          =", format_word(u))
print("v          =", format_word(v))
print("u v        =", format_word(free_reduce(u + v)))
print("u^-1       =", format_word(inverse_word(u)))

# the complete relator catalog for these parameters
print("\nrelators on genus 1, boundary 1, 2 strands:")
for rel in relators(s):
    print(f"  [{rel.family}] {format_word(rel.word)}")

# a second surface: closed genus 1 with three strands adds the braid
# relations and the boundary-free relator
print("\nrelators on the closed torus with 3 strands:")
for rel in relators(SurfaceParams(1, 0, 3)):
    print(f"  [{rel.family}] {format_word(rel.word)}")

# the handle relation rewrites a commutator of loops into a squared
# crossing; bounded_equal finds the move and replays it
lhs = parse_braid_word("a1 s1^-1 b1 s1^-1 a1^-1 s1 b1^-1 s1", s)
rhs = parse_braid_word("s1 s1", s)
eq = bounded_equal(lhs, rhs, s, depth=2)
print(f"\n{format_word(lhs)}  ==  {format_word(rhs)} ?  {eq.status}")
for mv in eq.moves:
    print(f"  at {mv.pos}: {format_word(mv.removed)} -> "
          f"{format_word(mv.inserted)}  [{mv.family}]")
