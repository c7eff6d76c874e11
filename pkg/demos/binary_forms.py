"""Hilbert series of the classical binary forms.

The dimension of the degree-r SL(2)-invariants of the binary k-form is
a number Cayley and Sylvester could already compute by hand.  Here it
drops out of the scalar-product construction; the table reproduces the
classical series for the quadratic through the sextic.  Cost grows
quickly with k*r, so the harder rows stop earlier.
"""

from symf.invariants import PolyFunctor, SLnDefining, hilbert_dim
from symf.symfunc import h

REACH = {2: 10, 3: 10, 4: 8, 5: 6, 6: 6}
TOP = max(REACH.values())

print("dim of degree-r invariants of the binary k-form")
print()
header = "  k\\r |" + "".join("%4d" % r for r in range(TOP + 1))
print(header)
print("  " + "-" * (len(header) - 2))
for k in range(2, 7):
    dims = [hilbert_dim(SLnDefining(2), PolyFunctor(h(k)), r)
            for r in range(REACH[k] + 1)]
    print("  %3d |" % k + "".join("%4s" % d for d in dims))
print()

# what the rows say:
#   k=2: one invariant in each even degree, powers of the discriminant
#   k=3: generated by the single degree-4 discriminant
#   k=4: a polynomial ring on generators of degrees 2 and 3, so the
#        series 1,0,1,1,1,1,2,1,2 counts monomials in them
#   k=5: empty until the first generator appears in degree 4
#   k=6: dims 1, 2, 3 in degrees 2, 4, 6
print("the quartic row counts monomials in two free generators of")
print("degrees 2 and 3; the quintic stays empty until degree 4")
