"""Expanding mutation brackets into the free perm algebra.

The free perm algebra on x1, x2, ... and two parameters p, q has
canonical monomials "sorted prefix + tail letter" (associativity plus
left-commutativity abc = bac collapse everything else).  The mutation
product is <x, y> = (x p) y - (y q) x; iterated brackets expand to perm
elements whose structure this script walks through.
"""

from mutperm import Elt, bracket, commutator, expand, parse

x1, x2, x3 = (Elt.gen(f"x{i}") for i in range(1, 4))
p, q = Elt.gen("p"), Elt.gen("q")

print("A single bracket:")
print("  <x1,x2> =", bracket(x1, x2))

print("\nLeft-nested degree 3 (note the (p-q)^2 leading part):")
print("  <<x1,x2>,x3> =", expand(parse("<<x1,x2>,x3>")))

check = ((p - q) * (p - q)) * (x1 * x2 * x3) \
    + (p * q) * (x1 * commutator(x2, x3)) \
    - (q * q) * (x2 * commutator(x1, x3))
print("  matches (p-q)^2 x1x2x3 + pq x1[x2,x3] - q^2 x2[x1,x3]:",
      expand(parse("<<x1,x2>,x3>")) == check)

print("\nThe associator of the bracket is small:")
print("  <<x1,x2>,x3> - <x1,<x2,x3>> =",
      expand(parse("<<x1,x2>,x3> - <x1,<x2,x3>>")))

print("\nThe commutator product circ(x,y) = <x,y> - <y,x>:")
print("  circ(x1,x2) =", expand(parse("circ(x1,x2)")))
print("  equals (p+q)[x1,x2]:",
      expand(parse("circ(x1,x2)")) == (p + q) * commutator(x1, x2))

print("\n...and it is metabelian: <circ(a,b), circ(c,d)> = 0:")
print("  ", expand(parse("<circ(x1,x2),circ(x3,x4)>")))
