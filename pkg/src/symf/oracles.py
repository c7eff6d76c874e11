"""Independent brute-force checks for everything the package computes.

Each oracle here re-derives a result by direct enumeration, group
averaging, Weyl integration on SU(2), or another first-principles route,
without touching the plethysm, scalar product or base change machinery
it is meant to verify.  The only shared vocabulary is Partition and
exact rational arithmetic; where an oracle hands back a symmetric
function it fills in a p-basis SymFn directly from class data.

All oracles carry hard size caps and raise ResourceLimitError beyond
them, because they are exponential on purpose.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .errors import ResourceLimitError
from .partitions import Partition, partitions_of, z_of
from .symfunc import SymFn


def _require(condition, what):
    if not condition:
        raise ResourceLimitError("oracle bound exceeded: %s" % what)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _class_representative(mu, n):
    # A permutation of {0..n-1} with cycle type mu, as a lookup tuple.
    perm = list(range(n))
    start = 0
    for c in mu:
        for i in range(c):
            perm[start + i] = start + (i + 1) % c
        start += c
    return tuple(perm)


# ---------------------------------------------------------------------
# card deals
# ---------------------------------------------------------------------

def oracle_deals(m, n):
    """Count deals of m*n cards (n types, m of each) into n hands of m,
    by enumerating multisets of hands directly."""
    _require(m * n <= 14, "oracle_deals needs m*n <= 14")
    hands = []
    for combo in combinations_with_replacement(range(n), m):
        counts = [0] * n
        for c in combo:
            counts[c] += 1
        hands.append(tuple(counts))

    def extend(min_idx, hands_left, remaining):
        if hands_left == 0:
            return 1 if all(x == 0 for x in remaining) else 0
        total = 0
        for idx in range(min_idx, len(hands)):
            hand = hands[idx]
            if all(hand[t] <= remaining[t] for t in range(n)):
                nxt = tuple(remaining[t] - hand[t] for t in range(n))
                total += extend(idx, hands_left - 1, nxt)
        return total

    return extend(0, n, tuple([m] * n))


def _deal_matrices(m, n):
    # All n x n matrices, entries 0..m, every row and column sum m.
    out = []
    row_shapes = []

    def compositions(total, slots, bound):
        if slots == 1:
            if total <= bound:
                yield (total,)
            return
        for first in range(min(total, bound) + 1):
            for rest in compositions(total - first, slots - 1, bound):
                yield (first,) + rest

    def fill(rows, col_left):
        depth = len(rows)
        if depth == n:
            out.append(tuple(rows))
            return
        for row in compositions(m, n, m):
            if all(row[j] <= col_left[j] for j in range(n)):
                fill(rows + [row], tuple(col_left[j] - row[j] for j in range(n)))

    fill([], tuple([m] * n))
    return out


def oracle_deals_matrix_count(m, n):
    """The same deal count from the matrix model: orbits of row/column
    sum m matrices under row permutation."""
    _require(n <= 5 and m * n <= 12, "matrix deal oracle needs n <= 5, m*n <= 12")
    mats = _deal_matrices(m, n)
    all_perms = _symmetric_group(n)
    seen = set()
    orbits = 0
    for mat in mats:
        if mat in seen:
            continue
        orbits += 1
        for perm in all_perms:
            seen.add(tuple(mat[perm[i]] for i in range(n)))
    return orbits


def oracle_deals_cycle_index(m, n):
    """Frobenius character of S_n permuting the rows of the deal
    matrices, from fixed point counts per conjugacy class."""
    _require(n <= 5 and m * n <= 12, "matrix deal oracle needs n <= 5, m*n <= 12")
    mats = _deal_matrices(m, n)
    terms = {}
    for mu in partitions_of(n):
        perm = _class_representative(mu, n)
        fixed = sum(1 for mat in mats
                    if all(mat[perm[i]] == mat[i] for i in range(n)))
        if fixed:
            terms[mu] = Fraction(fixed, z_of(mu))
    return SymFn("p", terms)


@lru_cache(maxsize=None)
def _symmetric_group(n):
    from itertools import permutations
    return tuple(permutations(range(n)))


# ---------------------------------------------------------------------
# regular multigraphs
# ---------------------------------------------------------------------

def _regular_matrices(n, k):
    # Symmetric n x n matrices over the nonnegative integers with
    # 2*M[i][i] + sum of the rest of row i = k for every i: adjacency
    # matrices of k-regular multigraphs where a loop counts twice.
    out = []

    def fill(rows):
        i = len(rows)
        if i == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        fixed = [rows[j][i] for j in range(i)]
        used = sum(fixed)
        if used > k:
            return

        def rest(row, left, j):
            if j == n:
                if left == 0:
                    fill(rows + [tuple(row)])
                return
            for v in range(left + 1):
                col_used = sum(rows[t][j] for t in range(i)) + v
                if col_used > k:
                    break
                row[j] = v
                rest(row, left - v, j + 1)
                row[j] = 0

        budget = k - used
        for loop in range(budget // 2 + 1):
            row = fixed + [0] * (n - i)
            row[i] = loop
            rest(row, budget - 2 * loop, i + 1)

    fill([])
    return out


def oracle_regular_graphs(n, k):
    """Count k-regular multigraphs with loops on n unlabelled vertices
    by enumerating adjacency matrices and collecting S_n orbits."""
    _require(n <= 5 and k <= 6, "regular graph oracle needs n <= 5, k <= 6")
    if (n * k) % 2:
        return 0
    mats = _regular_matrices(n, k)
    perms = _symmetric_group(n)
    seen = set()
    orbits = 0
    for mat in mats:
        if mat in seen:
            continue
        orbits += 1
        for perm in perms:
            seen.add(tuple(tuple(mat[perm[i]][perm[j]] for j in range(n))
                           for i in range(n)))
    return orbits


def oracle_regular_cycle_index(n, k):
    """Frobenius character of S_n on labelled k-regular multigraphs."""
    _require(n <= 5 and k <= 6, "regular graph oracle needs n <= 5, k <= 6")
    mats = _regular_matrices(n, k)
    terms = {}
    for mu in partitions_of(n):
        perm = _class_representative(mu, n)
        fixed = 0
        for mat in mats:
            if all(mat[perm[i]][perm[j]] == mat[i][j]
                   for i in range(n) for j in range(n)):
                fixed += 1
        if fixed:
            terms[mu] = Fraction(fixed, z_of(mu))
    return SymFn("p", terms)


# ---------------------------------------------------------------------
# finite group averaging
# ---------------------------------------------------------------------

def _fix_counts(nu, d):
    # Fixed points of g^d on n letters when g has cycle type nu.
    return sum(v for v in nu if d % v == 0)


def oracle_perm_inv_char(n, r):
    """S_r-character of the invariants of S_n inside the r-th tensor
    power of its n-point permutation representation, by averaging.

    The trace of (g, sigma) on the tensor power is the product over the
    cycles c of sigma of fix(g^{|c|}); averaging over g projects onto
    the invariants.
    """
    _require(n <= 5 and r <= 8, "averaging oracle needs n <= 5, r <= 8")
    return oracle_perm_hom_char(n, {nu: 1 for nu in partitions_of(n)}, r)


def oracle_perm_hom_char(n, w_trace, d):
    """S_d-character of Hom_{S_n}(V tensor d, W) for the permutation
    representation V, where w_trace gives the character of W by class."""
    _require(n <= 5 and d <= 8, "averaging oracle needs n <= 5, d <= 8")
    terms = {}
    for mu in partitions_of(d):
        total = Fraction(0)
        for nu in partitions_of(n):
            prod = w_trace.get(Partition(nu), 0)
            for c in mu:
                if not prod:
                    break
                prod *= _fix_counts(nu, c)
            total += Fraction(prod, z_of(nu))
        if total:
            terms[mu] = total / z_of(mu)
    return SymFn("p", terms)


def oracle_perm_inv_char_polyfunc(n, p_terms, r):
    """Like oracle_perm_inv_char but through a polynomial functor.

    p_terms is the power sum expansion of the functor character, given
    directly as a mapping partition -> coefficient, so this oracle does
    not lean on any base change code.  The trace of (g, sigma) on the
    tensor power of P(V) multiplies, over the cycles c of sigma, the
    value of the p expansion at p_i = fix(g^{i*|c|}).
    """
    p_terms = {Partition(mu): Fraction(c) for mu, c in p_terms.items()}
    degrees = {mu.weight for mu in p_terms}
    _require(len(degrees) == 1, "functor character must be homogeneous")
    k = degrees.pop()
    _require(n <= 4 and r * k <= 8, "functor averaging oracle needs n <= 4, r*deg <= 8")

    def value_at(nu, c):
        total = Fraction(0)
        for rho, coeff in p_terms.items():
            prod = coeff
            for i in rho:
                prod *= _fix_counts(nu, i * c)
                if not prod:
                    break
            total += prod
        return total

    terms = {}
    for mu in partitions_of(r):
        total = Fraction(0)
        for nu in partitions_of(n):
            prod = Fraction(1)
            for c in mu:
                prod *= value_at(nu, c)
                if not prod:
                    break
            total += prod / z_of(nu)
        if total:
            terms[mu] = total / z_of(mu)
    return SymFn("p", terms)


# ---------------------------------------------------------------------
# SU(2) Weyl integration
# ---------------------------------------------------------------------

class LaurentPoly:
    """Integer Laurent polynomials in one variable, dict backed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        clean = {}
        for expo, c in items:
            c = clean.get(expo, 0) + c
            if c:
                clean[expo] = c
            elif expo in clean:
                del clean[expo]
        self.coeffs = clean

    @classmethod
    def su2_character(cls, k):
        # Character of the (k+1)-dimensional irreducible on diag(q, 1/q).
        return cls({e: 1 for e in range(-k, k + 1, 2)})

    def substitute_power(self, d):
        return LaurentPoly({e * d: c for e, c in self.coeffs.items()})

    def coefficient(self, expo):
        return self.coeffs.get(expo, 0)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                key = e1 + e2
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return "LaurentPoly(%r)" % (dict(sorted(self.coeffs.items())),)


def oracle_su2_frobenius(k, r, mu):
    """Trace of a cycle type mu permutation on the SL(2) invariants in
    the r-th tensor power of the (k+1)-dimensional irreducible.

    Weyl integration on SU(2): take the constant term in q of
    (1 - q^2) * product over cycles c of chi_k(q^c).
    """
    _require(k * r <= 24, "SU(2) oracle needs k*r <= 24")
    mu = Partition(mu)
    if mu.weight != r:
        raise ValueError("cycle type %s is not a partition of %d" % (mu, r))
    prod = LaurentPoly({0: 1})
    for c in mu:
        prod = prod * LaurentPoly.su2_character(k).substitute_power(c)
    return prod.coefficient(0) - prod.coefficient(-2)


def oracle_su2_inv_char(k, r):
    """Frobenius character of the S_r action on those SL(2) invariants."""
    terms = {}
    for mu in partitions_of(r):
        v = oracle_su2_frobenius(k, r, mu)
        if v:
            terms[mu] = Fraction(v, z_of(mu))
    return SymFn("p", terms)


def oracle_su2_poly_dim(k, r):
    """Dimension of the degree-r SL(2) invariants of the binary k-form,
    straight from Weyl integration (trivial isotypic of the above)."""
    total = Fraction(0)
    for mu in partitions_of(r):
        total += Fraction(oracle_su2_frobenius(k, r, mu), z_of(mu))
    return total


# ---------------------------------------------------------------------
# partition counting oracles
# ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bounded_partition_count(total, max_part, slots):
    # partitions of `total` into at most `slots` parts, each <= max_part
    if total == 0:
        return 1
    if slots == 0 or max_part == 0:
        return 0
    count = 0
    for first in range(min(total, max_part), 0, -1):
        count += _bounded_partition_count(total - first, first, slots - 1)
    return count


def oracle_cayley_sylvester(k, r):
    """Dimension of the degree-r invariants of the binary k-form by the
    Cayley-Sylvester difference of bounded partition counts."""
    _require(k >= 0 and r >= 0 and k * r <= 120, "Cayley-Sylvester oracle bound")
    if (k * r) % 2:
        return 0
    target = k * r // 2
    now = _bounded_partition_count(target, k, r)
    below = _bounded_partition_count(target - 1, k, r) if target else 0
    return now - below


def oracle_syt(lam):
    """Standard Young tableaux of shape lam, by the hook length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    count, rem = divmod(_factorial(lam.weight), hooks)
    assert rem == 0
    return count


def oracle_matchings(q):
    """Perfect matchings of 2q points: (2q - 1)!!"""
    out = 1
    for i in range(1, 2 * q, 2):
        out *= i
    return out


def oracle_restricted_bell(r, n):
    """Set partitions of r elements into at most n blocks, by the
    Stirling recurrence."""
    @lru_cache(maxsize=None)
    def stirling(a, b):
        if a == 0:
            return 1 if b == 0 else 0
        if b == 0:
            return 0
        return b * stirling(a - 1, b) + stirling(a - 1, b - 1)

    return sum(stirling(r, j) for j in range(min(r, n) + 1))


# ---------------------------------------------------------------------
# plethysm by monomial expansion
# ---------------------------------------------------------------------

def _kostka(lam, mu):
    # Semistandard tableaux of shape lam and content mu, counted by
    # building lam from horizontal strips of sizes mu_1, mu_2, ...
    lam = tuple(lam)

    def strips(inner, size):
        # shapes nu with inner <= nu <= lam, |nu| - |inner| = size,
        # nu/inner a horizontal strip
        rows = len(lam)
        inner = tuple(inner) + (0,) * (rows - len(inner))

        def choose(i, left, strip_cap):
            # strip_cap enforces the horizontal strip condition: the new
            # row cannot reach past the previous row of the inner shape.
            if i == rows:
                if left == 0:
                    yield ()
                return
            low = inner[i]
            high = min(lam[i], strip_cap)
            for v in range(low, high + 1):
                if v - inner[i] <= left:
                    for rest in choose(i + 1, left - (v - inner[i]), inner[i]):
                        yield (v,) + rest

        for shape in choose(0, size, lam[0] if lam else 0):
            yield tuple(a for a in shape if a)

    states = {(): 1}
    for part in mu:
        nxt = {}
        for shape, ways in states.items():
            for bigger in strips(shape, part):
                nxt[bigger] = nxt.get(bigger, 0) + ways
        states = nxt
    return states.get(lam, 0)


def _monomial_profile_counts(factors, pick_distinct, outer):
    # factors: exponent vectors of the inner function's monomials.
    # Collect products of `outer` of them (multisets, or subsets when
    # pick_distinct) whose exponent vector is already sorted, giving
    # monomial coefficients indexed by partition.
    chooser = combinations if pick_distinct else combinations_with_replacement
    counts = {}
    for pick in chooser(range(len(factors)), outer):
        total = [0] * len(factors[0])
        for idx in pick:
            vec = factors[idx]
            for t, a in enumerate(vec):
                total[t] += a
        if all(total[t] >= total[t + 1] for t in range(len(total) - 1)):
            lam = Partition([a for a in total if a])
            counts[lam] = counts.get(lam, 0) + 1
    return counts


def _solve_schur(mcounts, degree):
    # Invert the unitriangular Kostka system in reverse lexicographic
    # order: s_lam = m_lam + (dominated terms).
    coeffs = {}
    for lam in partitions_of(degree):
        c = mcounts.get(lam, 0)
        for nu, a in coeffs.items():
            if a:
                c -= a * _kostka(nu, lam)
        if c:
            coeffs[lam] = c
    return coeffs


def oracle_plethysm_monomials(kind, a, b):
    """Monomial expansion of h_a[h_b] (kind "hh") or e_a[e_b] ("ee"),
    by listing monomials of the inner function in a*b variables and
    multiplying out multisets (or subsets) of them."""
    _require(a * b <= 8 and a >= 1 and b >= 1, "monomial plethysm oracle needs a*b <= 8")
    nvars = a * b
    if kind == "hh":
        factors = []
        for combo in combinations_with_replacement(range(nvars), b):
            vec = [0] * nvars
            for c in combo:
                vec[c] += 1
            factors.append(tuple(vec))
        return _monomial_profile_counts(factors, False, a)
    if kind == "ee":
        factors = []
        for combo in combinations(range(nvars), b):
            vec = [0] * nvars
            for c in combo:
                vec[c] = 1
            factors.append(tuple(vec))
        return _monomial_profile_counts(factors, True, a)
    raise ValueError("kind must be 'hh' or 'ee'")


def oracle_plethysm_schur(kind, a, b):
    """Schur expansion of h_a[h_b] or e_a[e_b], solved from the monomial
    oracle through brute-force Kostka numbers."""
    mcounts = oracle_plethysm_monomials(kind, a, b)
    return SymFn("s", _solve_schur(mcounts, a * b))
