"""Plethysm, graded series, and the inner product construction
<H[X.F[Y]], G[Y]>_Y that everything downstream is built on.

Plethysm is computed entirely in the power sum basis.  The rules are:
p_n[g] substitutes p_k -> p_{nk} inside g and fixes constants, plethysm
is multiplicative (p_{mu union nu}[g] = p_mu[g] p_nu[g]) and linear in
the left argument.  That pins f[g] down for every f, and makes degrees
multiply on homogeneous inputs.

The inner product construction takes a homogeneous F of degree k >= 1
and a homogeneous G of degree r*k, and produces a symmetric function of
degree r in the outer alphabet.  It has two expansions,

    sum over lam |- r of  <p_lam[F], G> / z_lam * p_lam        (p mode)
    sum over lam |- r of  <s_lam[F], G>          * s_lam        (s mode)

whose agreement is the Cauchy identity; the package computes either on
demand and the test suite holds them against each other.  p mode is the
default because p_lam[F] is a cheap substitution while s_lam[F] expands
through the character table.
"""

from fractions import Fraction

from .errors import DegreeError, TruncationError
from .partitions import Partition, partitions_of, z_of
from .symfunc import (SymFn, generator, one, zero,
                      _mul_p, _p_dict, _scalar_p, _schur_p)


def _substitute(gp, n):
    # p_n[g] on a p-basis dict: multiply every part by n.
    if n == 1:
        return dict(gp)
    return {tuple(a * n for a in mu): c for mu, c in gp.items()}


def _pleth_p(fp, gp, cap=None):
    # f[g] on p-basis dicts, optionally truncated above degree cap.
    subs = {}
    for mu in fp:
        for a in mu:
            if a not in subs:
                subs[a] = _substitute(gp, a)
    prefix = {(): {(): Fraction(1)}}

    def product_for(mu):
        if mu in prefix:
            return prefix[mu]
        prod = _mul_p(product_for(mu[:-1]), subs[mu[-1]])
        if cap is not None:
            prod = {nu: c for nu, c in prod.items() if sum(nu) <= cap}
        prefix[mu] = prod
        return prod

    out = {}
    for mu, a in sorted(fp.items()):
        for nu, c in product_for(mu).items():
            val = out.get(nu, 0) + a * c
            if val:
                out[nu] = val
            elif nu in out:
                del out[nu]
    return out


def plethysm(f, g):
    """The plethysm f[g], exact, as a p-basis SymFn.

    Both arguments are finite symmetric functions; constants inside g
    pass through the substitution untouched (p_n[c] = c), and f acts
    through its p expansion by linearity.
    """
    return SymFn("p", _pleth_p(_p_dict(f), _p_dict(g)))


class GradedSeries:
    """A symmetric function series known one degree at a time, up to a
    stated truncation degree.

    Degrees beyond the truncation are undefined rather than zero:
    component() refuses to answer there instead of guessing.
    """

    def __init__(self, truncation_degree, components):
        if truncation_degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.truncation_degree = truncation_degree
        clean = {}
        for d, f in components.items():
            if not 0 <= d <= truncation_degree:
                raise ValueError("component degree %d outside [0, %d]"
                                 % (d, truncation_degree))
            if f.is_zero():
                continue
            if not f.is_homogeneous() or f.degree() != d:
                raise DegreeError("component at degree %d is not homogeneous "
                                  "of degree %d" % (d, d))
            clean[d] = f
        self.components = clean

    def component(self, d):
        if d < 0:
            raise ValueError("negative degree")
        if d > self.truncation_degree:
            raise TruncationError(
                "series truncated at degree %d, component %d requested"
                % (self.truncation_degree, d))
        return self.components.get(d, zero())

    def __repr__(self):
        return "GradedSeries(truncation_degree=%d, degrees=%s)" % (
            self.truncation_degree, sorted(self.components))


def h_sum_series(cap, highest=None):
    """1 + h_1 + h_2 + ... as a series truncated at cap.

    With `highest` set, the sum stops at h_highest: the series of the
    permutation representation of S_highest on multisets.
    """
    top = cap if highest is None else min(cap, highest)
    comps = {0: one()}
    for d in range(1, top + 1):
        comps[d] = generator("h", (d,))
    return GradedSeries(cap, comps)


def h_plus_series(cap):
    """h_1 + h_2 + ... with no constant term, truncated at cap."""
    comps = {d: generator("h", (d,)) for d in range(1, cap + 1)}
    return GradedSeries(cap, comps)


def plethysm_series(F, G, cap):
    """Plethysm of graded series, truncated at degree cap.

    G must have zero constant term; otherwise infinitely many components
    of F would contribute to each output degree and the truncation would
    be a lie.  Given that, output degrees up to cap only involve input
    components up to cap, so the result is exact where it is defined.
    """
    if cap > min(F.truncation_degree, G.truncation_degree):
        raise TruncationError(
            "cap %d exceeds input truncation (%d, %d)"
            % (cap, F.truncation_degree, G.truncation_degree))
    if not G.component(0).is_zero():
        raise DegreeError("series plethysm needs G with zero constant term")
    ftot = {}
    gtot = {}
    for d in range(cap + 1):
        ftot.update(_p_dict(F.component(d)))
        gtot.update(_p_dict(G.component(d)))
    raw = _pleth_p(ftot, gtot, cap=cap)
    split = {}
    for mu, c in raw.items():
        split.setdefault(sum(mu), {})[mu] = c
    comps = {d: SymFn("p", terms) for d, terms in split.items()}
    return GradedSeries(cap, comps)


def fundamental(F, G, r, mode="p"):
    """<h_r[X.F[Y]], G[Y]>_Y: a degree-r symmetric function in X.

    F must be homogeneous of degree k >= 1 and G homogeneous of degree
    r*k (the zero function is accepted for G and gives zero).  In p mode
    the coefficient of p_lam/z_lam is <p_lam[F], G>; in s mode the
    coefficient of s_lam is <s_lam[F], G>, computed through an honest
    plethysm of each Schur function, so the two modes cross-check each
    other rather than sharing their arithmetic.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if mode not in ("p", "s"):
        raise ValueError("mode must be 'p' or 's'")
    fp = _p_dict(F)
    if not fp:
        raise DegreeError("F must be nonzero and homogeneous of degree >= 1")
    fdegs = {sum(mu) for mu in fp}
    if len(fdegs) != 1:
        raise DegreeError("F must be homogeneous, found degrees %s" % sorted(fdegs))
    k = fdegs.pop()
    if k < 1:
        raise DegreeError("F must have degree >= 1")
    gp = _p_dict(G)
    if not gp:
        return zero(mode)
    gdegs = {sum(mu) for mu in gp}
    if len(gdegs) != 1 or gdegs.pop() != r * k:
        raise DegreeError(
            "G must be homogeneous of degree r*deg(F) = %d, found degrees %s"
            % (r * k, sorted({sum(mu) for mu in gp})))

    if mode == "p":
        subs = {n: _substitute(fp, n) for n in range(1, r + 1)}
        prefix = {(): {(): Fraction(1)}}

        def product_for(mu):
            if mu in prefix:
                return prefix[mu]
            prod = _mul_p(product_for(mu[:-1]), subs[mu[-1]])
            prefix[mu] = prod
            return prod

        out = {}
        for lam in partitions_of(r):
            val = _scalar_p(product_for(tuple(lam)), gp)
            if val:
                out[lam] = val / z_of(lam)
        return SymFn("p", out)

    out = {}
    for lam in partitions_of(r):
        val = _scalar_p(_pleth_p(dict(_schur_p(tuple(lam))), fp), gp)
        if val:
            out[lam] = val
    return SymFn("s", out)
