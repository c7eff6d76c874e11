"""The ring of symmetric functions with exact rational coefficients.

A SymFn is a finite linear combination of basis elements drawn from one
of the five classical bases: power sums p, complete homogeneous h,
elementary e, monomial m, Schur s.  Coefficients are fractions.Fraction,
so every result in this package is exact; nothing is ever rounded.

Internally the power sum basis is the canonical one.  There the product
is multiset union of indexing partitions, the Hall scalar product is
diagonal with weight z_mu, and plethysm is a substitution.  The other
bases are views reached by exact base change:

  h_n = sum over mu of p_mu / z_mu,   e_n the same with sign (-1)^(n - len),
  s_lam = sum over mu of chi^lam(mu)/z_mu p_mu    (Murnaghan-Nakayama),
  coefficient of m_mu in f = <f, h_mu>            (duality),
  coefficient of h_mu in f = <f, m_mu>,
  e coefficients via the omega involution p_mu -> (-1)^(|mu|-len(mu)) p_mu,

and m_lam in the p basis comes from inverting the expansion of the p's
into monomials one degree at a time; that matrix is triangular in the
canonical reverse lexicographic order because p_nu only meets m_mu when
mu is a fusion of nu, which dominates nu.

For Schur indices of weight above the character table cap the base
change falls back on the Jacobi-Trudi determinant det(h_{lam_i - i + j}),
expanded over permutations; that keeps things like s_(18,18) cheap where
a weight-36 character table would not be.
"""

from fractions import Fraction
from functools import lru_cache

from . import characters
from .errors import DegreeError, ResourceLimitError
from .partitions import Partition, partitions_of, z_of

BASES = ("p", "h", "e", "m", "s")

# Longest Schur index the Jacobi-Trudi fallback will expand: len! terms.
_JT_LENGTH_CAP = 8

# Degree cap on base changes that need the per-degree monomial transition
# matrix (dense, p(d) x p(d) rational entries).
_M_MATRIX_CAP = 16


class SymFn:
    """A symmetric function expressed in one named basis.

    Treated as immutable: every operation builds a new SymFn.  Equality
    is mathematical, not representational; h_2 in the h basis equals
    (p_1^2 + p_2)/2 in the p basis.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=()):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % (basis,))
        items = terms.items() if hasattr(terms, "items") else terms
        clean = {}
        for key, value in items:
            key = Partition(key)
            value = clean.get(key, 0) + Fraction(value)
            if value:
                clean[key] = value
            elif key in clean:
                del clean[key]
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFn is immutable")

    # -- structure ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degrees(self):
        """Sorted list of degrees of the nonzero homogeneous components."""
        return sorted({mu.weight for mu in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        """Degree of a homogeneous function; zero has degree 0 here."""
        degs = self.degrees()
        if len(degs) > 1:
            raise DegreeError("not homogeneous, degrees %s" % (degs,))
        return degs[0] if degs else 0

    def homogeneous_part(self, d):
        return SymFn(self.basis,
                     {mu: c for mu, c in self.terms.items() if mu.weight == d})

    def coefficient(self, mu):
        """Coefficient of the basis element indexed by mu, in this basis."""
        return self.terms.get(Partition(mu), Fraction(0))

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.basis == other.basis:
            out = dict(self.terms)
            for mu, c in other.terms.items():
                out[mu] = out.get(mu, 0) + c
            return SymFn(self.basis, out)
        a, b = _p_dict(self), _p_dict(other)
        out = dict(a)
        for mu, c in b.items():
            out[mu] = out.get(mu, 0) + c
        return SymFn("p", out)

    __radd__ = __add__

    def __neg__(self):
        return SymFn(self.basis, {mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SymFn(self.basis, {mu: c * v for mu, v in self.terms.items()})
        if isinstance(other, SymFn):
            return SymFn("p", _mul_p(_p_dict(self), _p_dict(other)))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("SymFn powers must be nonnegative integers")
        out = one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, SymFn):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return _p_dict(self) == _p_dict(other)

    __hash__ = None

    # -- presentation ------------------------------------------------

    def sorted_terms(self):
        """Terms by degree, then reverse lexicographic within a degree."""
        return sorted(self.terms.items(),
                      key=lambda item: (item[0].weight, tuple(-a for a in item[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for mu, c in self.sorted_terms():
            if not mu:
                chunks.append(str(c))
            elif c == 1:
                chunks.append("%s%s" % (self.basis, mu))
            elif c == -1:
                chunks.append("-%s%s" % (self.basis, mu))
            else:
                chunks.append("%s*%s%s" % (c, self.basis, mu))
        return " + ".join(chunks)

    def __repr__(self):
        return "SymFn(%r, %s)" % (self.basis, str(self))


def _coerce(value):
    if isinstance(value, SymFn):
        return value
    if isinstance(value, (int, Fraction)):
        return SymFn("p", {Partition(): Fraction(value)})
    return NotImplemented


def generator(basis, mu):
    """The basis element of `basis` indexed by the partition mu."""
    return SymFn(basis, {Partition(mu): 1})


def zero(basis="p"):
    return SymFn(basis)


def one(basis="p"):
    return SymFn(basis, {Partition(): 1})


def p(*parts):
    return generator("p", parts)


def h(*parts):
    return generator("h", parts)


def e(*parts):
    return generator("e", parts)


def m(*parts):
    return generator("m", parts)


def s(*parts):
    return generator("s", parts)


# ---------------------------------------------------------------------
# power sum kernel
# ---------------------------------------------------------------------
#
# The kernel works on plain dicts mapping part tuples to Fractions.
# Partition subclasses tuple, so the two key types interoperate; SymFn
# construction restores Partition keys at the boundary.

def _mul_p(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for mu, c in a.items():
        for nu, d in b.items():
            key = tuple(sorted(mu + nu, reverse=True))
            val = out.get(key, 0) + c * d
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


@lru_cache(maxsize=None)
def _gen_h_p(n):
    return {tuple(mu): Fraction(1, z_of(mu)) for mu in partitions_of(n)}


@lru_cache(maxsize=None)
def _gen_e_p(n):
    out = {}
    for mu in partitions_of(n):
        sign = -1 if (n - len(mu)) % 2 else 1
        out[tuple(mu)] = Fraction(sign, z_of(mu))
    return out


@lru_cache(maxsize=None)
def _prod_h_p(mu):
    # h_mu = product of h_{mu_i} in the p basis.
    if not mu:
        return {(): Fraction(1)}
    return _mul_p(_prod_h_p(mu[:-1]), _gen_h_p(mu[-1]))


@lru_cache(maxsize=None)
def _prod_e_p(mu):
    if not mu:
        return {(): Fraction(1)}
    return _mul_p(_prod_e_p(mu[:-1]), _gen_e_p(mu[-1]))


@lru_cache(maxsize=None)
def _schur_p(lam):
    if sum(lam) <= characters.CHAR_TABLE_CAP:
        out = {}
        for mu in partitions_of(sum(lam)):
            v = characters._chi(tuple(lam), tuple(mu))
            if v:
                out[tuple(mu)] = Fraction(v, z_of(mu))
        return out
    return _schur_p_jacobi_trudi(lam)


def _schur_p_jacobi_trudi(lam):
    # det(h_{lam_i - i + j}) expanded over permutations.  Fine for short
    # shapes of large weight, which is the only place it is used.
    n = len(lam)
    if n > _JT_LENGTH_CAP:
        raise ResourceLimitError(
            "Schur index %s: weight beyond the character table cap and "
            "more than %d rows" % (Partition(lam), _JT_LENGTH_CAP))
    from itertools import permutations
    out = {}
    for sigma in permutations(range(n)):
        degrees = []
        ok = True
        for i in range(n):
            d = lam[i] - i + sigma[i]
            if d < 0:
                ok = False
                break
            if d > 0:
                degrees.append(d)
        if not ok:
            continue
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if sigma[i] > sigma[j])
        sign = -1 if inversions % 2 else 1
        for mu, c in _prod_h_p(tuple(sorted(degrees, reverse=True))).items():
            val = out.get(mu, 0) + sign * c
            if val:
                out[mu] = val
            elif mu in out:
                del out[mu]
    return out


@lru_cache(maxsize=None)
def _m_p_rows(d):
    # Rows of the inverse transition: m_lam = sum_nu C[lam][nu] p_nu.
    # Forward matrix: A[nu][mu] = coefficient of m_mu in p_nu
    #                          = z_nu * (coefficient of p_nu in h_mu),
    # lower triangular in reverse lexicographic position.
    parts = partitions_of(d)
    index = {tuple(mu): i for i, mu in enumerate(parts)}
    size = len(parts)
    forward = [[Fraction(0)] * size for _ in range(size)]
    for j, mu in enumerate(parts):
        for nu, c in _prod_h_p(tuple(mu)).items():
            forward[index[nu]][j] = c * z_of(nu)
    rows = {}
    for i, lam in enumerate(parts):
        row = [Fraction(0)] * size
        for k in range(i, -1, -1):
            acc = Fraction(1) if k == i else Fraction(0)
            for j in range(k + 1, i + 1):
                if row[j] and forward[j][k]:
                    acc -= row[j] * forward[j][k]
            if acc:
                row[k] = acc / forward[k][k]
        rows[tuple(lam)] = {tuple(parts[j]): row[j] for j in range(size) if row[j]}
    return rows


def _m_p(lam):
    d = sum(lam)
    if d > _M_MATRIX_CAP:
        raise ResourceLimitError(
            "monomial basis transitions are capped at degree %d, got %d"
            % (_M_MATRIX_CAP, d))
    return _m_p_rows(d)[tuple(lam)]


_GEN_EXPANSIONS = {
    "h": _prod_h_p,
    "e": _prod_e_p,
    "s": _schur_p,
    "m": _m_p,
}


def _p_dict(f):
    """Expansion of f in the p basis as a plain dict tuple -> Fraction."""
    if f.basis == "p":
        return {tuple(mu): c for mu, c in f.terms.items()}
    expand = _GEN_EXPANSIONS[f.basis]
    out = {}
    for mu, c in f.terms.items():
        for nu, d in expand(tuple(mu)).items():
            val = out.get(nu, 0) + c * d
            if val:
                out[nu] = val
            elif nu in out:
                del out[nu]
    return out


def _scalar_p(a, b):
    if len(a) > len(b):
        a, b = b, a
    total = Fraction(0)
    for mu, c in a.items():
        d = b.get(mu)
        if d:
            total += c * d * z_of(mu)
    return total


def _omega_p(a):
    return {mu: c if (sum(mu) - len(mu)) % 2 == 0 else -c for mu, c in a.items()}


# ---------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------

def to_basis(f, target):
    """Rewrite f exactly in the named target basis."""
    if target not in BASES:
        raise ValueError("unknown basis %r" % (target,))
    if f.basis == target:
        return f
    fp = _p_dict(f)
    if target == "p":
        return SymFn("p", fp)
    if target == "s":
        out = {}
        for d in sorted({sum(mu) for mu in fp}):
            if d > characters.CHAR_TABLE_CAP:
                raise ResourceLimitError(
                    "Schur expansion needs characters of S_%d, beyond the "
                    "cap r <= %d" % (d, characters.CHAR_TABLE_CAP))
            part = {mu: c for mu, c in fp.items() if sum(mu) == d}
            for lam in partitions_of(d):
                tl = tuple(lam)
                c = sum((a * characters._chi(tl, mu) for mu, a in part.items()),
                        Fraction(0))
                if c:
                    out[lam] = c
        return SymFn("s", out)
    if target == "m":
        out = {}
        for d in sorted({sum(mu) for mu in fp}):
            part = {mu: c for mu, c in fp.items() if sum(mu) == d}
            for lam in partitions_of(d):
                c = _scalar_p(part, _prod_h_p(tuple(lam)))
                if c:
                    out[lam] = c
        return SymFn("m", out)
    if target == "h":
        out = {}
        for d in sorted({sum(mu) for mu in fp}):
            part = {mu: c for mu, c in fp.items() if sum(mu) == d}
            for lam in partitions_of(d):
                c = _scalar_p(part, _m_p(tuple(lam)))
                if c:
                    out[lam] = c
        return SymFn("h", out)
    # e basis: omega exchanges h and e and is diagonal on the p basis.
    flipped = SymFn("p", _omega_p(fp))
    return SymFn("e", to_basis(flipped, "h").terms)


def scalar(f, g):
    """Hall scalar product <f, g>, exact.

    In the p basis <p_mu, p_nu> = z_mu [mu = nu]; components of unequal
    degree are orthogonal, which the diagonal form gives for free.
    """
    return _scalar_p(_p_dict(f), _p_dict(g))


def kronecker(f, g):
    """Internal (Kronecker) product, p_mu * p_mu scaled by z_mu.

    For Frobenius characters this is the characteristic of the tensor
    product of the underlying representations.
    """
    a, b = _p_dict(f), _p_dict(g)
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for mu, c in a.items():
        d = b.get(mu)
        if d:
            out[mu] = c * d * z_of(mu)
    return SymFn("p", out)


def dimension(f):
    """<f, p_1^r> for homogeneous f of degree r.

    For the Frobenius character of an S_r representation this is its
    dimension.  Raises on inhomogeneous input since mixing degrees makes
    the count meaningless.
    """
    if f.is_zero():
        return Fraction(0)
    if not f.is_homogeneous():
        raise DegreeError("dimension needs a homogeneous function")
    r = f.degree()
    coeff = _p_dict(f).get((1,) * r, Fraction(0))
    return coeff * characters._factorial(r)


def specialize_ones(f):
    """Evaluate at p_i = 1 for every i.

    For a permutation character this is Burnside's orbit count; for a
    cycle index it is the number of unlabelled structures.
    """
    return sum(_p_dict(f).values(), Fraction(0))


def monomial_coefficient(f, mu):
    """Coefficient of the monomial m_mu in f, computed as <f, h_mu>."""
    mu = Partition(mu)
    return _scalar_p(_p_dict(f), _prod_h_p(tuple(mu)))


# ---------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------

def to_json_dict(f):
    """Portable form: coefficients as exact fraction strings."""
    return {
        "basis": f.basis,
        "terms": [{"partition": list(mu), "coeff": str(c)}
                  for mu, c in f.sorted_terms()],
    }


def from_json_dict(doc):
    terms = {}
    for entry in doc["terms"]:
        mu = Partition(entry["partition"])
        terms[mu] = terms.get(mu, 0) + Fraction(entry["coeff"])
    return SymFn(doc["basis"], terms)
