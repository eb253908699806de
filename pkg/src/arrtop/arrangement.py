"""Central hyperplane arrangements over Q: normalization, intersection
lattice, Moebius function, characteristic / Poincare polynomials, sections
and genericity invariants.

An arrangement is stored as a reduced list of primitive integer covectors
(no zero form, no proportional pair) in a fixed ambient dimension; every
invariant in the package is derived from this single representation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import (
    EmptyArrangement,
    HyperplaneContainsSubspace,
    NotEssential,
    NotL0Generic,
    RankOutOfRange,
    ZeroForm,
)
from .exactalg import (
    IntPolynomial,
    SparseEchelon,
    int_rank,
    poly_divide_exact,
)


class _Infinite:
    """Distinguished sentinel for 'all genericity levels hold' (U = V).

    Compares strictly greater than every integer; not itself a number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __gt__(self, other):
        return isinstance(other, int)

    def __ge__(self, other):
        return isinstance(other, int) or other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __hash__(self):
        return hash("arrtop.INFINITE")


INFINITE = _Infinite()


def _primitive(form):
    g = 0
    for x in form:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    vec = tuple(x // g for x in form)
    lead = next(x for x in vec if x)
    if lead < 0:
        vec = tuple(-x for x in vec)
    return vec


@dataclass(frozen=True)
class Arrangement:
    """Reduced central arrangement: primitive covectors, none proportional.

    labels and multiplicities are bookkeeping collected by normalize(); they
    do not take part in equality.
    """

    ambient_dim: int
    forms: tuple
    labels: tuple = field(default=None, compare=False)
    multiplicities: tuple = field(default=None, compare=False)

    @property
    def num_hyperplanes(self):
        return len(self.forms)

    @property
    def rank(self):
        return _form_rank(self.forms)

    def delete(self, index) -> "Arrangement":
        forms = self.forms[:index] + self.forms[index + 1:]
        if not forms:
            raise EmptyArrangement("deletion removed the last hyperplane")
        return Arrangement(self.ambient_dim, forms)


@lru_cache(maxsize=None)
def _form_rank(forms):
    return int_rank(forms)


def normalize(raw_forms, ambient_dim, labels=None, multiplicities=None) -> Arrangement:
    """Canonical reduced arrangement from raw integer covectors.

    Zero covectors are rejected; each form is scaled primitive with positive
    leading entry; proportional duplicates collapse (first occurrence wins,
    multiplicities accumulate).
    """
    if labels is not None and len(labels) != len(raw_forms):
        raise ZeroForm("labels length does not match forms")
    seen = {}
    order = []
    for i, raw in enumerate(raw_forms):
        if len(raw) != ambient_dim:
            raise ZeroForm(
                f"form {i} has length {len(raw)}, expected {ambient_dim}"
            )
        vec = _primitive(tuple(int(x) for x in raw))
        if vec is None:
            raise ZeroForm(f"form {i} is zero")
        weight = multiplicities[i] if multiplicities is not None else 1
        if vec in seen:
            mult, label = seen[vec]
            seen[vec] = (mult + weight, label)
        else:
            seen[vec] = (weight, labels[i] if labels is not None else None)
            order.append(vec)
    if not order:
        raise EmptyArrangement("no forms given")
    mults = tuple(seen[v][0] for v in order)
    labs = tuple(seen[v][1] for v in order)
    return Arrangement(
        ambient_dim,
        tuple(order),
        labs if labels is not None else None,
        mults,
    )


# ---------------------------------------------------------------------------
# intersection lattice

@dataclass(frozen=True)
class Flat:
    """Closed set of hyperplane indices together with its codimension."""

    hyperplanes: tuple
    codim: int


class IntersectionLattice:
    """All flats of a central arrangement with Moebius values.

    Flats are identified with closed index sets, ordered by inclusion of
    those sets (equivalently reverse inclusion of subspaces).  The empty
    flat (the whole space) is the bottom element.
    """

    def __init__(self, flats, mobius):
        self.flats = tuple(flats)
        self._mobius = dict(mobius)
        self._by_codim = {}
        for f in self.flats:
            self._by_codim.setdefault(f.codim, []).append(f)

    @property
    def rank(self):
        return max(self._by_codim)

    def flats_of_codim(self, k):
        return tuple(self._by_codim.get(k, ()))

    def mobius(self, flat):
        return self._mobius[flat.hyperplanes]

    def leq(self, f1, f2):
        return set(f1.hyperplanes) <= set(f2.hyperplanes)

    @property
    def bottom(self):
        return self._by_codim[0][0]


class _RankOracle:
    """Cached subset ranks and closures for one arrangement."""

    def __init__(self, arr: Arrangement):
        self.forms = arr.forms
        self.d = len(arr.forms)
        self._rank_cache = {}
        self._rows = [
            {j: Fraction(x) for j, x in enumerate(f) if x} for f in arr.forms
        ]

    def _echelon(self, subset):
        ech = SparseEchelon()
        for i in subset:
            ech.insert(self._rows[i])
        return ech

    def rank(self, subset) -> int:
        key = frozenset(subset)
        r = self._rank_cache.get(key)
        if r is None:
            r = self._echelon(subset).rank
            self._rank_cache[key] = r
        return r

    def closure(self, subset) -> tuple:
        ech = self._echelon(subset)
        return tuple(j for j in range(self.d) if ech.contains(self._rows[j]))

    def is_independent(self, subset) -> bool:
        return self.rank(subset) == len(subset)


@lru_cache(maxsize=None)
def _oracle(arr: Arrangement) -> _RankOracle:
    return _RankOracle(arr)


@lru_cache(maxsize=None)
def intersection_lattice(arr: Arrangement) -> IntersectionLattice:
    """Enumerate flats by iterated closure, then run the Moebius recursion."""
    oracle = _oracle(arr)
    bottom = ()
    flats = {bottom: 0}
    frontier = [bottom]
    while frontier:
        nxt = []
        for s in frontier:
            present = set(s)
            for j in range(oracle.d):
                if j in present:
                    continue
                closed = oracle.closure(s + (j,))
                if closed not in flats:
                    flats[closed] = oracle.rank(closed)
                    nxt.append(closed)
        frontier = nxt
    ordered = sorted(flats, key=lambda s: (flats[s], s))
    mobius = {(): 1}
    for s in ordered:
        if not s:
            continue
        sset = set(s)
        acc = sum(mobius[t] for t in ordered if t != s and set(t) <= sset)
        mobius[s] = -acc
    flat_objs = [Flat(s, flats[s]) for s in ordered]
    return IntersectionLattice(flat_objs, mobius)


def poincare_central(arr: Arrangement) -> IntPolynomial:
    """Poincare polynomial of the central complement: sum |mu(X)| t^codim."""
    lat = intersection_lattice(arr)
    coeffs = [0] * (lat.rank + 1)
    for f in lat.flats:
        coeffs[f.codim] += abs(lat.mobius(f))
    return IntPolynomial(tuple(coeffs))


def poincare_projective(arr: Arrangement) -> IntPolynomial:
    """Poincare polynomial of the projective complement.

    The central polynomial always carries an exact (1+t) factor; the
    quotient is the projective one.
    """
    return poly_divide_exact(poincare_central(arr), IntPolynomial((1, 1)))


def characteristic_polynomial(arr: Arrangement) -> IntPolynomial:
    """chi(t) = sum mu(X) t^(dim X), over the ambient space."""
    lat = intersection_lattice(arr)
    coeffs = [0] * (arr.ambient_dim + 1)
    for f in lat.flats:
        coeffs[arr.ambient_dim - f.codim] += lat.mobius(f)
    return IntPolynomial(tuple(coeffs))


def projective_betti(arr: Arrangement):
    return list(poincare_projective(arr).coefficients)


def is_essential(arr: Arrangement) -> bool:
    return arr.rank == arr.ambient_dim


def essentialize(arr: Arrangement) -> Arrangement:
    """Quotient away the common intersection of all hyperplanes.

    Restricting every form to the coordinate subspace spanned by the pivot
    columns of the form matrix is injective on the row span, so all subset
    ranks (hence the lattice) are preserved.
    """
    if is_essential(arr):
        return arr
    from .exactalg import QMatrix, row_reduce

    _, _, pivots = row_reduce(QMatrix.from_rows(arr.forms))
    new_forms = [tuple(f[j] for j in pivots) for f in arr.forms]
    return normalize(new_forms, len(pivots))


def restrict_to_hyperplane(arr: Arrangement, index) -> Arrangement:
    """Arrangement induced on one of its own hyperplanes."""
    from .exactalg import covector_kernel_basis

    basis = covector_kernel_basis(arr.forms[index])
    rows = []
    for i, f in enumerate(arr.forms):
        if i == index:
            continue
        rows.append(tuple(sum(a * b for a, b in zip(f, v)) for v in basis))
    return normalize(rows, len(basis))


# ---------------------------------------------------------------------------
# subspaces and genericity

@dataclass(frozen=True)
class Subspace:
    """Integer-spanned subspace given by an independent basis."""

    basis: tuple

    def __post_init__(self):
        basis = tuple(tuple(int(x) for x in v) for v in self.basis)
        object.__setattr__(self, "basis", basis)
        if not basis:
            raise ZeroForm("subspace needs at least one basis vector")
        if int_rank(basis) != len(basis):
            raise ZeroForm("subspace basis vectors are dependent")

    @property
    def dim(self):
        return len(self.basis)

    @property
    def ambient_dim(self):
        return len(self.basis[0])


def _restricted_form(form, u: Subspace):
    return tuple(sum(a * b for a, b in zip(form, v)) for v in u.basis)


def restrict_to_subspace(arr: Arrangement, u: Subspace) -> Arrangement:
    """Arrangement cut out on the subspace; proportional traces collapse."""
    if u.ambient_dim != arr.ambient_dim:
        raise ZeroForm("subspace lives in the wrong ambient dimension")
    rows = []
    for i, f in enumerate(arr.forms):
        r = _restricted_form(f, u)
        if not any(r):
            raise HyperplaneContainsSubspace(i)
        rows.append(r)
    return normalize(rows, u.dim)


def is_lattice_generic(arr: Arrangement, u: Subspace, level) -> bool:
    """True iff every flat of codim <= level+1 meets the subspace with the
    same codimension, computed by exact ranks of restricted covectors."""
    if not 0 <= level < arr.rank:
        raise RankOutOfRange(f"level must lie in [0, rank), got {level}")
    lat = intersection_lattice(arr)
    restricted = [_restricted_form(f, u) for f in arr.forms]
    for codim in range(1, min(level + 1, lat.rank) + 1):
        for flat in lat.flats_of_codim(codim):
            sub = [restricted[i] for i in flat.hyperplanes]
            if int_rank(sub) != codim:
                return False
    return True


def genericity_level(arr: Arrangement, u: Subspace):
    """Largest level of lattice genericity; INFINITE when the subspace is
    the whole space."""
    if u.dim == arr.ambient_dim:
        return INFINITE
    if not is_lattice_generic(arr, u, 0):
        raise NotL0Generic("a hyperplane contains the subspace")
    best = 0
    for level in range(1, arr.rank):
        if is_lattice_generic(arr, u, level):
            best = level
        else:
            break
    return best


def betti_agreement_order(arr: Arrangement, u: Subspace):
    """Largest q such that the projective Betti numbers of the arrangement
    and of its restriction agree in all degrees <= q; INFINITE if they agree
    everywhere."""
    b_full = projective_betti(arr)
    b_rest = projective_betti(restrict_to_subspace(arr, u))
    n = max(len(b_full), len(b_rest))
    b_full += [0] * (n - len(b_full))
    b_rest += [0] * (n - len(b_rest))
    if b_full == b_rest:
        return INFINITE
    q = -1
    for i in range(n):
        if b_full[i] != b_rest[i]:
            break
        q = i
    return q


def generic_section_betti(arr: Arrangement, section_rank):
    """Betti numbers of an iterated generic hyperplane section of the given
    rank, computed combinatorially as truncation of the projective Betti
    numbers (exact; no subspace needs to be sampled)."""
    if not is_essential(arr):
        raise NotEssential("generic sections are defined for essential arrangements")
    if not 1 <= section_rank <= arr.rank:
        raise RankOutOfRange(
            f"section rank must lie in [1, {arr.rank}], got {section_rank}"
        )
    betti = projective_betti(arr)
    return betti[:section_rank]


# ---------------------------------------------------------------------------
# seeded generic subspace sampling

def sample_generic_subspace(arr: Arrangement, dim, seed, level=None) -> Subspace:
    """Deterministic rejection sampling of a lattice-generic subspace.

    Genericity is an open dense condition; integer bases drawn from a seeded
    generator and validated by is_lattice_generic realize it constructively.
    The required level defaults to the strongest one a proper subspace of
    this dimension can satisfy.
    """
    if not 1 <= dim <= arr.ambient_dim:
        raise RankOutOfRange(f"subspace dimension {dim} out of range")
    if level is None:
        level = min(dim, arr.rank, arr.ambient_dim - 1) - 1
    rng = random.Random(seed)
    bound = 3
    for attempt in range(1000):
        if attempt and attempt % 50 == 0:
            bound += 2
        vecs = [
            tuple(rng.randint(-bound, bound) for _ in range(arr.ambient_dim))
            for _ in range(dim)
        ]
        if int_rank(vecs) != dim:
            continue
        u = Subspace(tuple(vecs))
        if is_lattice_generic(arr, u, level):
            return u
    raise RuntimeError("failed to sample a generic subspace")
