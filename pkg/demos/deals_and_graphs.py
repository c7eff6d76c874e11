"""Two enumeration problems that reduce to the same scalar product.

MacMahon asked how many ways m*n cards, n kinds with m copies of each,
deal into n unordered hands of m cards.  The count is an inner product
of symmetric functions, and so is the number of k-regular multigraphs
on n unlabelled vertices.  Both come with a cycle index refinement
whose p_i -> 1 specialization recovers the plain count (Burnside).
"""

from symf.enumeration import (DealSpec, RegularGraphSpec, card_deals,
                              deals_cycle_index, regular_graphs,
                              regular_graphs_cycle_index)
from symf.symfunc import specialize_ones

print("= MacMahon's card deals =")
print("   m\\n |   1    2     3      4")
for m in range(1, 5):
    row = [card_deals(DealSpec(m, n)) for n in range(1, 5)]
    print("   %3d |" % m + "".join("%5s " % c for c in row))
print()
print("f(2,2) = 2: the two deals of AABB into two hands are AA|BB and AB|AB")
print()

spec = DealSpec(2, 2)
index = deals_cycle_index(spec)
print("cycle index for (m,n)=(2,2):", index)
print("p_i -> 1 gives back the count:", specialize_ones(index))
print()

print("= regular multigraphs, loops allowed =")
print("   n\\k |  0   1   2   3   4")
for n in range(1, 6):
    row = [regular_graphs(RegularGraphSpec(n, k)) for k in range(0, 5)]
    print("   %3d |" % n + "".join("%3s " % c for c in row))
print()
print("zeros where n*k is odd: no such degree sequence exists")
print()

spec = RegularGraphSpec(3, 2)
index = regular_graphs_cycle_index(spec)
print("the three 2-regular multigraphs on 3 vertices: the triangle,")
print("a doubled edge plus a loop, and three loops; the cycle index")
print("   ", index)
print("specializes to", specialize_ones(index))
