"""Orlik-Solomon cohomology of arrangement complements.

The central complement carries the full Orlik-Solomon algebra, presented on
no-broken-circuit (NBC) monomials with circuit rewriting; the projective
complement is realized inside it as the kernel of the boundary derivation,
with basis the boundaries of NBC sets through the first hyperplane.  Cup
products, the reduced diagonal, the holonomy-relation space and degreewise
bases of the enveloping algebra of the holonomy Lie algebra are all
computed by exact linear algebra over Q.

Degree-one generated throughout: the projective side is the one that drives
the homotopy-group computations, the central side matches the classical NBC
combinatorics; functions take a `projective` flag where both make sense.
"""

from __future__ import annotations

import os as _os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .arrangement import Arrangement, poincare_central, poincare_projective
from .errors import RankOutOfRange, WorkBoundExceeded
from .exactalg import SparseEchelon

DEFAULT_WORK_BOUND = 10 ** 6
WORK_BOUND_ENV = "ARRTOP_WORK_BOUND"


def _work_bound(override=None):
    if override is not None:
        return override
    env = _os.environ.get(WORK_BOUND_ENV)
    return int(env) if env else DEFAULT_WORK_BOUND


def sort_sign(word):
    """Sort a tuple of indices; returns (sorted tuple, permutation sign),
    or (None, 0) when an index repeats."""
    if len(set(word)) != len(word):
        return None, 0
    inversions = sum(
        1
        for a, b in combinations(range(len(word)), 2)
        if word[a] > word[b]
    )
    return tuple(sorted(word)), -1 if inversions % 2 else 1


class CentralAlgebra:
    """Orlik-Solomon algebra of the central complement on NBC monomials."""

    def __init__(self, arr: Arrangement):
        self.arr = arr
        self.d = arr.num_hyperplanes
        self._rows = [
            {j: Fraction(x) for j, x in enumerate(f) if x} for f in arr.forms
        ]
        self._ech_cache = {}
        self._expand_cache = {}
        self._nbc_cache = {}

    def _echelon(self, subset):
        key = frozenset(subset)
        ech = self._ech_cache.get(key)
        if ech is None:
            ech = SparseEchelon()
            for i in subset:
                ech.insert(self._rows[i])
            self._ech_cache[key] = ech
        return ech

    def is_independent(self, subset):
        return self._echelon(subset).rank == len(subset)

    def _in_span(self, index, subset):
        return self._echelon(subset).contains(self._rows[index])

    def is_nbc(self, subset):
        """subset must be sorted and independent."""
        if not subset:
            return True
        for c in range(subset[-1]):
            if c in subset:
                continue
            tail = tuple(s for s in subset if s > c)
            if self._in_span(c, tail):
                return False
        return True

    def nbc(self, q):
        out = self._nbc_cache.get(q)
        if out is None:
            out = tuple(
                s
                for s in combinations(range(self.d), q)
                if self.is_independent(s) and self.is_nbc(s)
            )
            self._nbc_cache[q] = out
        return out

    def _circuit_through(self, c, tail):
        """The unique circuit inside {c} | tail with minimum c.

        tail is independent and contains the span witness, so the
        representation of form c over tail is unique and its support plus c
        is a circuit.
        """
        ech = SparseEchelon()
        # bookkeeping columns record the combination in terms of tail rows
        n = self.arr.ambient_dim
        for pos, i in enumerate(tail):
            row = dict(self._rows[i])
            row[n + pos] = Fraction(1)
            ech.insert(row)
        res = ech.reduce_coordinates(dict(self._rows[c]))
        support = [tail[col - n] for col, val in res.items() if col >= n and val]
        if any(col < n for col in res):
            raise AssertionError("form not in span despite membership test")
        return tuple(sorted([c] + support))

    def expand(self, subset):
        """NBC expansion of the monomial e_subset (sorted, distinct).

        Returns {nbc tuple: integer coefficient}; dependent monomials give
        the empty dict.
        """
        cached = self._expand_cache.get(subset)
        if cached is not None:
            return cached
        if not self.is_independent(subset):
            result = {}
        elif self.is_nbc(subset):
            result = {subset: 1}
        else:
            result = None
            for c in range(subset[-1]):
                if c in subset:
                    continue
                tail = tuple(s for s in subset if s > c)
                if not self._in_span(c, tail):
                    continue
                circuit = self._circuit_through(c, tail)
                broken = circuit[1:]
                rest = tuple(s for s in subset if s not in broken)
                _, base_sign = sort_sign(broken + rest)
                acc = {}
                for r in range(1, len(circuit)):
                    replaced = circuit[:r] + circuit[r + 1:]
                    term_word = replaced + rest
                    sorted_word, sgn = sort_sign(term_word)
                    if not sgn:
                        continue
                    coeff = base_sign * ((-1) ** (r + 1)) * sgn
                    for mono, val in self.expand(sorted_word).items():
                        nv = acc.get(mono, 0) + coeff * val
                        if nv:
                            acc[mono] = nv
                        else:
                            acc.pop(mono, None)
                result = acc
                break
            assert result is not None, "broken circuit expected but not found"
        self._expand_cache[subset] = result
        return result

    def multiply(self, exp_a, exp_b):
        """Product of two NBC expansions, again as an NBC expansion."""
        acc = {}
        for word_a, ca in exp_a.items():
            for word_b, cb in exp_b.items():
                sorted_word, sgn = sort_sign(word_a + word_b)
                if not sgn:
                    continue
                coeff = ca * cb * sgn
                for mono, val in self.expand(sorted_word).items():
                    nv = acc.get(mono, 0) + coeff * val
                    if nv:
                        acc[mono] = nv
                    else:
                        acc.pop(mono, None)
        return acc

    def boundary_expansion(self, subset):
        """Expansion of the boundary of e_subset (alternating face sum)."""
        acc = {}
        for r in range(len(subset)):
            face = subset[:r] + subset[r + 1:]
            coeff = (-1) ** r
            for mono, val in self.expand(face).items():
                nv = acc.get(mono, 0) + coeff * val
                if nv:
                    acc[mono] = nv
                else:
                    acc.pop(mono, None)
        return acc


@lru_cache(maxsize=None)
def central_algebra(arr: Arrangement) -> CentralAlgebra:
    return CentralAlgebra(arr)


class _Basis:
    """A cohomology degree presented by basis expansions over NBC monomials,
    with an exact solver for expressing vectors in that basis."""

    def __init__(self, labels, expansions, monomials):
        self.labels = tuple(labels)
        self.expansions = tuple(expansions)
        self.monomials = tuple(monomials)
        self._index = {m: i for i, m in enumerate(self.monomials)}
        n = len(self.monomials)
        self._ncols = n
        self._ech = SparseEchelon()
        for pos, exp in enumerate(self.expansions):
            row = {self._index[m]: Fraction(c) for m, c in exp.items()}
            row[n + pos] = Fraction(1)
            residual = self._ech.reduce(row)
            if not residual or min(residual) >= n:
                raise AssertionError("cohomology basis candidates are dependent")
            self._ech.insert(residual)

    @property
    def dim(self):
        return len(self.labels)

    def represent(self, expansion):
        """Coordinates of an NBC expansion in this basis (exact)."""
        vec = {self._index[m]: Fraction(c) for m, c in expansion.items()}
        res = self._ech.reduce_coordinates(vec)
        coords = [Fraction(0)] * self.dim
        for col, val in res.items():
            if col < self._ncols:
                raise AssertionError("vector does not lie in the basis span")
            coords[col - self._ncols] = -val
        return coords


class CohomologyView:
    """Graded cohomology of the central or projective complement with cup
    products in fixed bases."""

    def __init__(self, arr: Arrangement, projective: bool):
        self.arr = arr
        self.projective = projective
        self.algebra = central_algebra(arr)
        self._bases = {}
        poly = poincare_projective(arr) if projective else poincare_central(arr)
        self.betti = list(poly.coefficients)
        self.top = len(self.betti) - 1

    def dim(self, q):
        return self.betti[q] if 0 <= q <= self.top else 0

    def basis(self, q) -> _Basis:
        b = self._bases.get(q)
        if b is not None:
            return b
        alg = self.algebra
        if not self.projective:
            monomials = alg.nbc(q)
            b = _Basis(monomials, [{m: 1} for m in monomials], monomials)
        else:
            gens = tuple(s for s in alg.nbc(q + 1) if s and s[0] == 0)
            expansions = [alg.boundary_expansion(s) for s in gens]
            b = _Basis(gens, expansions, alg.nbc(q))
        if b.dim != self.dim(q):
            raise AssertionError(
                f"basis dimension {b.dim} != Betti number {self.dim(q)} at {q}"
            )
        self._bases[q] = b
        return b

    def degree_one_labels(self):
        return self.basis(1).labels

    def cup_rows(self, q):
        """Structure constants of H^(q-1) x H^1 -> H^q.

        Returns {(t, j): {r: int}} over basis positions, t in H^(q-1),
        j in H^1, r in H^q.
        """
        if not 1 <= q <= self.top:
            raise RankOutOfRange(f"degree {q} outside [1, {self.top}]")
        alg = self.algebra
        low = self.basis(q - 1)
        one = self.basis(1)
        target = self.basis(q)
        rows = {}
        for t, exp_t in enumerate(low.expansions):
            for j, exp_j in enumerate(one.expansions):
                prod = alg.multiply(exp_t, exp_j)
                coords = target.represent(prod)
                entry = {}
                for r, c in enumerate(coords):
                    if c:
                        if c.denominator != 1:
                            raise AssertionError("cup coefficient not integral")
                        entry[r] = c.numerator
                rows[(t, j)] = entry
        return rows

    def left_cup_rows(self, q):
        """Structure constants of H^1 x H^(q-1) -> H^q (left action)."""
        if not 1 <= q <= self.top:
            raise RankOutOfRange(f"degree {q} outside [1, {self.top}]")
        alg = self.algebra
        low = self.basis(q - 1)
        one = self.basis(1)
        target = self.basis(q)
        rows = {}
        for j, exp_j in enumerate(one.expansions):
            for t, exp_t in enumerate(low.expansions):
                prod = alg.multiply(exp_j, exp_t)
                coords = target.represent(prod)
                entry = {}
                for r, c in enumerate(coords):
                    if c:
                        if c.denominator != 1:
                            raise AssertionError("cup coefficient not integral")
                        entry[r] = c.numerator
                rows[(j, t)] = entry
        return rows


@lru_cache(maxsize=None)
def cohomology_view(arr: Arrangement, projective: bool) -> CohomologyView:
    return CohomologyView(arr, projective)


# ---------------------------------------------------------------------------
# public data types and operations

@dataclass(frozen=True)
class NBCBasis:
    degree: int
    monomials: tuple


def nbc_basis(arr: Arrangement, q) -> NBCBasis:
    """NBC monomials of the central complement at degree q; their count is
    the central Betti number."""
    if not 0 <= q <= arr.rank:
        raise RankOutOfRange(f"degree {q} outside [0, rank]")
    monomials = central_algebra(arr).nbc(q)
    expected = poincare_central(arr).coefficient(q)
    assert len(monomials) == expected, "NBC count disagrees with Poincare"
    return NBCBasis(q, monomials)


@dataclass(frozen=True)
class CupSlice:
    """Multiplication H^(q-1) x H^1 -> H^q as an integer matrix; rows are
    (lower basis element, degree-one element) pairs with the degree-one
    index fastest, columns the degree-q basis."""

    degree: int
    matrix: tuple
    row_labels: tuple
    column_labels: tuple


def cup_matrix(arr: Arrangement, q, projective=False) -> CupSlice:
    view = cohomology_view(arr, projective)
    rows = view.cup_rows(q)
    low, one, target = view.basis(q - 1), view.basis(1), view.basis(q)
    mat = []
    labels = []
    for t in range(low.dim):
        for j in range(one.dim):
            entry = rows[(t, j)]
            mat.append(tuple(entry.get(r, 0) for r in range(target.dim)))
            labels.append((low.labels[t], one.labels[j]))
    return CupSlice(q, tuple(mat), tuple(labels), target.labels)


@dataclass(frozen=True)
class HolonomyRelations:
    """Rows span the image of the reduced diagonal inside H_1 (x) H_1, in
    the antisymmetric embedding of the wedge square; dimension b_2."""

    dim_h1: int
    relation_basis: tuple


def reduced_diagonal(arr: Arrangement, projective=False) -> HolonomyRelations:
    """Dual of the surjection from the wedge square of H^1 onto H^2."""
    view = cohomology_view(arr, projective)
    b1 = view.dim(1)
    b2 = view.dim(2)
    rows = view.cup_rows(2) if b2 else {}
    relation_rows = []
    for r in range(b2):
        # the wedge x_i ^ x_j embeds as x_i (x) x_j - x_j (x) x_i
        anti = [0] * (b1 * b1)
        for i in range(b1):
            for j in range(i + 1, b1):
                c = rows[(i, j)].get(r, 0)
                if c:
                    anti[i * b1 + j] = c
                    anti[j * b1 + i] = -c
        relation_rows.append(tuple(anti))
    rel = HolonomyRelations(b1, tuple(relation_rows))
    if b2:
        from .exactalg import int_rank

        assert int_rank(rel.relation_basis) == b2
    return rel


def right_cup_dual(arr: Arrangement, q, projective=False):
    """Matrix of H_q -> H_(q-1) (x) H_1 dual to the right cup action; rows
    indexed by the H_q basis, columns by (H_(q-1), H_1) pairs flattened with
    the H_1 index fastest. Integer entries."""
    view = cohomology_view(arr, projective)
    rows = view.cup_rows(q)
    low, one, target = view.basis(q - 1), view.basis(1), view.basis(q)
    out = [[0] * (low.dim * one.dim) for _ in range(target.dim)]
    for (t, j), entry in rows.items():
        for r, c in entry.items():
            out[r][t * one.dim + j] = c
    return [tuple(row) for row in out]


def left_cup_dual(arr: Arrangement, q, projective=False):
    """Matrix of H_q -> H_1 (x) H_(q-1) dual to the left cup action; columns
    flattened with the H_(q-1) index fastest."""
    view = cohomology_view(arr, projective)
    rows = view.left_cup_rows(q)
    low, one, target = view.basis(q - 1), view.basis(1), view.basis(q)
    out = [[0] * (low.dim * one.dim) for _ in range(target.dim)]
    for (j, t), entry in rows.items():
        for r, c in entry.items():
            out[r][j * low.dim + t] = c
    return [tuple(row) for row in out]


# ---------------------------------------------------------------------------
# enveloping algebra of the holonomy Lie algebra

class UEnvelope:
    """Degreewise bases of the quotient of the tensor algebra on H_1 by the
    two-sided ideal generated by the holonomy relations.

    Words are encoded big-endian in base b1.  basis_words[k] lists the
    monomial words whose images form a basis of degree k; multiplication by
    a degree-one generator reduces through the cached echelon of the ideal
    slice.
    """

    def __init__(self, arr, max_degree, b1, relation_rows):
        self.arr = arr
        self.max_degree = max_degree
        self.b1 = b1
        self.dims = []
        self.basis_words = []
        self._echelons = {}
        self._positions = {}
        self._mult_cache = {}
        self._build(relation_rows)

    def _decode(self, idx, length):
        word = []
        for _ in range(length):
            idx, r = divmod(idx, self.b1)
            word.append(r)
        return tuple(reversed(word))

    def _build(self, relation_rows):
        b1 = self.b1
        self.dims.append(1)
        self.basis_words.append(((),))
        self._positions[0] = {0: 0}
        if self.max_degree == 0:
            return
        if b1 == 0:
            for _ in range(1, self.max_degree + 1):
                self.dims.append(0)
                self.basis_words.append(())
            return
        self.dims.append(b1)
        self.basis_words.append(tuple((j,) for j in range(b1)))
        self._positions[1] = {j: j for j in range(b1)}
        rel_sparse = [
            {c: Fraction(v) for c, v in enumerate(row) if v}
            for row in relation_rows
        ]
        prev = None
        for k in range(2, self.max_degree + 1):
            ech = SparseEchelon()
            if prev is not None:
                for row in prev.pivot_rows.values():
                    for j in range(b1):
                        ech.insert({c * b1 + j: v for c, v in row.items()})
            shift = b1 * b1
            for w in range(b1 ** (k - 2)):
                base = w * shift
                for row in rel_sparse:
                    ech.insert({base + c: v for c, v in row.items()})
            total = b1 ** k
            pivot_cols = set(ech.pivot_rows)
            basis_cols = [c for c in range(total) if c not in pivot_cols]
            self.dims.append(len(basis_cols))
            self.basis_words.append(tuple(self._decode(c, k) for c in basis_cols))
            self._positions[k] = {c: pos for pos, c in enumerate(basis_cols)}
            self._echelons[k] = ech
            prev = ech

    def dim(self, k):
        return self.dims[k] if 0 <= k <= self.max_degree else 0

    def _reduce_index(self, idx, degree):
        if degree == 1:
            return {self._positions[1][idx]: Fraction(1)}
        ech = self._echelons[degree]
        res = ech.reduce_coordinates({idx: Fraction(1)})
        positions = self._positions[degree]
        return {positions[c]: v for c, v in res.items()}

    def _encode(self, word):
        idx = 0
        for letter in word:
            idx = idx * self.b1 + letter
        return idx

    def generator_product(self, j, k, word_pos):
        """Coordinates of x_j * (basis word at degree k) inside degree k+1.

        Returns {position: Fraction}."""
        key = (j, k, word_pos)
        out = self._mult_cache.get(key)
        if out is None:
            if k + 1 > self.max_degree:
                raise RankOutOfRange("product exceeds the truncation degree")
            word = self.basis_words[k][word_pos]
            out = self._reduce_index(self._encode((j,) + word), k + 1)
            self._mult_cache[key] = out
        return out

    def generator_product_right(self, j, k, word_pos):
        """Coordinates of (basis word at degree k) * x_j inside degree k+1."""
        key = ("R", j, k, word_pos)
        out = self._mult_cache.get(key)
        if out is None:
            if k + 1 > self.max_degree:
                raise RankOutOfRange("product exceeds the truncation degree")
            word = self.basis_words[k][word_pos]
            out = self._reduce_index(self._encode(word + (j,)), k + 1)
            self._mult_cache[key] = out
        return out


@lru_cache(maxsize=None)
def holonomy_envelope(arr: Arrangement, max_degree, projective=True,
                      work_bound=None) -> UEnvelope:
    """Enveloping algebra of the holonomy Lie algebra, degree by degree.

    Dimensions and monomial bases come from exact ranks of the ideal slices
    inside the tensor powers; they are independent of the hyperplane order.
    """
    if max_degree < 0:
        raise RankOutOfRange("max_degree must be nonnegative")
    view = cohomology_view(arr, projective)
    b1 = view.dim(1)
    bound = _work_bound(work_bound)
    if b1 > 1 and b1 ** max_degree > bound:
        raise WorkBoundExceeded(
            f"tensor slice dimension {b1}^{max_degree} exceeds bound {bound}"
        )
    relations = reduced_diagonal(arr, projective=projective).relation_basis
    return UEnvelope(arr, max_degree, b1, relations)
