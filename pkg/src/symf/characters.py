"""Symmetric group characters and characters of polynomial functors.

The irreducible character value chi^lambda(mu) is computed by the
Murnaghan-Nakayama rule, phrased on first-column hook lengths (beta
numbers): removing a border strip of size t from lambda means picking a
beta number b with b - t >= 0 not already a beta number, and the sign is
(-1)^(number of beta numbers strictly between b - t and b).  The
recursion is memoized globally, so building a full table shares all
subproblems across rows and columns.

Full tables are cached on disk as JSON because the r = 14 table is the
single most expensive object the test suite builds.  The cache location
is $SYMF_CACHE_DIR when set, otherwise the user cache directory.  Files
are written to a temporary name and renamed into place, so a crashed or
concurrent writer never leaves a torn file; unreadable or outdated files
are silently recomputed.
"""

import json
import os
import tempfile
import warnings
from fractions import Fraction
from functools import lru_cache

from .errors import ResourceLimitError
from .partitions import Partition, partitions_of, z_of

# Practical cap on full-table construction.  Beyond this the table has
# more than 600k entries and cold construction stops being interactive.
CHAR_TABLE_CAP = 20

CACHE_FORMAT_VERSION = 1


@lru_cache(maxsize=None)
def _strip_removals(lam, size):
    # All ways to remove a border strip of `size` cells from lam.
    # Returns tuples (smaller partition, sign).
    n = len(lam)
    beta = tuple(lam[i] + (n - 1 - i) for i in range(n))
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - size
        if nb < 0 or nb in bset:
            continue
        crossed = sum(1 for x in beta if nb < x < b)
        sign = -1 if crossed % 2 else 1
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        parts = tuple(newbeta[i] - (n - 1 - i) for i in range(n))
        out.append((tuple(a for a in parts if a > 0), sign))
    return tuple(out)


@lru_cache(maxsize=None)
def _chi(lam, mu):
    # lam, mu plain tuples with equal weight, mu consumed left to right.
    if not mu:
        return 1
    head, rest = mu[0], mu[1:]
    total = 0
    for sub, sign in _strip_removals(lam, head):
        total += sign * _chi(sub, rest)
    return total


def chi(lam, mu):
    """Irreducible character value chi^lam at cycle type mu, exact."""
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError("chi needs |lam| = |mu|, got %s and %s" % (lam, mu))
    return _chi(tuple(lam), tuple(mu))


class CharacterTable:
    """The full character table of S_r.

    Rows and columns are both indexed by partitions of r in reverse
    lexicographic order: rows by the shape of the irreducible, columns
    by the cycle type of the class.
    """

    def __init__(self, r, values):
        self.r = r
        self.values = values

    def shapes(self):
        return partitions_of(self.r)

    def value(self, lam, mu):
        return self.values[(Partition(lam), Partition(mu))]

    def __getitem__(self, pair):
        return self.value(*pair)

    def row(self, lam):
        """Character values of chi^lam as a map cycle type -> integer."""
        lam = Partition(lam)
        return {mu: self.values[(lam, mu)] for mu in partitions_of(self.r)}

    def __repr__(self):
        return "CharacterTable(r=%d)" % self.r


_TABLES = {}


def character_table(r):
    """Build (or fetch) the complete character table of S_r.

    Memoized in process and persisted on disk.  Raises a resource error
    above CHAR_TABLE_CAP.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r > CHAR_TABLE_CAP:
        raise ResourceLimitError(
            "character table for r=%d exceeds the documented cap r <= %d" % (r, CHAR_TABLE_CAP))
    if r in _TABLES:
        return _TABLES[r]
    values = _load_table(r)
    if values is None:
        shapes = partitions_of(r)
        values = {}
        for lam in shapes:
            tl = tuple(lam)
            for mu in shapes:
                values[(lam, mu)] = _chi(tl, tuple(mu))
        _store_table(r, values)
    table = CharacterTable(r, values)
    _TABLES[r] = table
    return table


def cache_dir():
    """Directory holding persisted character tables."""
    env = os.environ.get("SYMF_CACHE_DIR")
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME")
    if not base:
        base = os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "symf")


def _table_path(r):
    return os.path.join(cache_dir(), "chartable-r%d.json" % r)


def _load_table(r):
    try:
        with open(_table_path(r), "r", encoding="ascii") as fh:
            doc = json.load(fh)
        if doc.get("version") != CACHE_FORMAT_VERSION or doc.get("r") != r:
            return None
        values = {}
        for entry in doc["entries"]:
            key = (Partition(entry["lambda"]), Partition(entry["mu"]))
            values[key] = int(entry["value"])
        expected = len(partitions_of(r)) ** 2
        if len(values) != expected:
            return None
        return values
    except (OSError, ValueError, KeyError, TypeError):
        return None


def _store_table(r, values):
    directory = cache_dir()
    entries = []
    for lam in partitions_of(r):
        for mu in partitions_of(r):
            entries.append({"lambda": list(lam), "mu": list(mu),
                            "value": values[(lam, mu)]})
    doc = {"version": CACHE_FORMAT_VERSION, "r": r, "entries": entries}
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix="chartable-", suffix=".tmp", dir=directory)
        try:
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                json.dump(doc, fh)
            os.replace(tmp, _table_path(r))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
    except OSError as exc:
        warnings.warn("could not persist character table r=%d: %s" % (r, exc))


def _reset_memo():
    # Test hook: forget everything held in process, keep disk files.
    _TABLES.clear()
    _chi.cache_clear()
    _strip_removals.cache_clear()


class RepCharacter:
    """An exact class function on S_r, given by its values on cycle types.

    This is how a representation of S_r enters the package: as the map
    cycle type -> trace.  Integer traces describe genuine (or at least
    virtual) representations; the constructors below cover the standard
    ones.
    """

    def __init__(self, r, trace):
        self.r = r
        clean = {}
        for mu, value in trace.items():
            mu = Partition(mu)
            if mu.weight != r:
                raise ValueError("trace indexed by %s but r=%d" % (mu, r))
            clean[mu] = value
        for mu in partitions_of(r):
            clean.setdefault(mu, 0)
        self.trace = clean

    @classmethod
    def trivial(cls, r):
        return cls(r, {mu: 1 for mu in partitions_of(r)})

    @classmethod
    def sign(cls, r):
        return cls(r, {mu: (-1) ** (r - mu.length) for mu in partitions_of(r)})

    @classmethod
    def regular(cls, r):
        trace = {mu: 0 for mu in partitions_of(r)}
        trace[Partition([1] * r)] = _factorial(r)
        return cls(r, trace)

    @classmethod
    def irreducible(cls, lam):
        lam = Partition(lam)
        r = lam.weight
        return cls(r, {mu: chi(lam, mu) for mu in partitions_of(r)})

    def __add__(self, other):
        if self.r != other.r:
            raise ValueError("cannot add characters of S_%d and S_%d" % (self.r, other.r))
        return RepCharacter(self.r, {mu: self.trace[mu] + other.trace[mu]
                                     for mu in self.trace})

    def __repr__(self):
        return "RepCharacter(r=%d)" % self.r


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def char_of_functor(rho):
    """The symmetric function (1/r!) sum_sigma trace(sigma) p_{cycle type}.

    Grouping the sum over classes gives sum_mu trace(mu)/z_mu p_mu.
    This is the Frobenius image of the class function rho: for the
    trivial character it is h_r, for the sign character e_r, for the
    regular character p_1^r, and for chi^lam it is s_lam.
    """
    from .symfunc import SymFn
    terms = {}
    for mu, value in rho.trace.items():
        if value:
            terms[mu] = Fraction(value, z_of(mu))
    return SymFn("p", terms)


def schur_functor_char(lam):
    """Character of the Schur functor for shape lam: the function s_lam."""
    from .symfunc import SymFn
    return SymFn("s", {Partition(lam): 1})
