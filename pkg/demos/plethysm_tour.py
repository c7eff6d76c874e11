"""A walk through the core arithmetic: bases, plethysm, and the
scalar-product construction that the rest of the package is built on.

Run it; every line of output is exact rational arithmetic.
"""

from symf.plethysm import fundamental, plethysm
from symf.symfunc import e, h, p, s, scalar, to_basis


def show(label, value):
    print("%-28s %s" % (label + ":", value))


print("= five bases, one ring =")
show("h3 in p", to_basis(h(3), "p"))
show("h3 in s", to_basis(h(3), "s"))
show("s21 in m", to_basis(s(2, 1), "m"))
show("e3 in h", to_basis(e(3), "h"))
print()

print("= plethysm landmarks =")
# h2[h2] is the character of the degree-2 part of Sym(Sym^2),
# pairs of unordered pairs
show("h2[h2]", plethysm(h(2), h(2)))
show("e2[e2]", plethysm(e(2), e(2)))
show("e2[h2]", plethysm(e(2), h(2)))
show("h2[e2]", plethysm(h(2), e(2)))
print()

print("= the scalar product knows representation theory =")
show("<s21, s21>", scalar(s(2, 1), s(2, 1)))
show("<h2[h2], h[2,2]>", scalar(plethysm(h(2), h(2)), h(2) * h(2)))
show("<p3, p3>", scalar(p(3), p(3)))
print()

print("= fundamental(F, G, r): <h_r[X F[Y]], G[Y]> =")
# G must be homogeneous of degree r * deg F for the pairing to make sense
F = h(2)
G = plethysm(h(2), h(2))
show("r=1, G=h2", fundamental(F, h(2), 1))
show("r=2, G=h2[h2]", fundamental(F, G, 2))
show("same, schur mode", fundamental(F, G, 2, "s"))
print()
print("the two modes share no arithmetic; equal output is a cross check")
