import random

import pytest

from arrtop import (
    INFINITE,
    Subspace,
    betti_agreement_order,
    characteristic_polynomial,
    essentialize,
    genericity_level,
    generic_section_betti,
    intersection_lattice,
    is_essential,
    is_lattice_generic,
    normalize,
    poincare_central,
    poincare_projective,
    projective_betti,
    restrict_to_hyperplane,
    restrict_to_subspace,
    sample_generic_subspace,
)
from arrtop.errors import (
    EmptyArrangement,
    HyperplaneContainsSubspace,
    NotL0Generic,
    RankOutOfRange,
    ZeroForm,
)
from arrtop.exactalg import IntPolynomial, linear_product
from genutil import (
    boolean_arrangement,
    braid3,
    lattice_oracle,
    near_pencil,
    poincare_oracle,
    random_essential_arrangement,
    int_kernel_basis_oracle,
)


def test_normalize_collapses_proportional():
    arr = normalize([[2, 0, 0], [1, 0, 0], [0, 1, 0]], 3)
    assert arr.forms == ((1, 0, 0), (0, 1, 0))
    assert arr.multiplicities == (2, 1)


def test_normalize_boolean_unchanged():
    arr = normalize([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    assert arr.forms == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_normalize_negation_collapses():
    arr = normalize([[1, 1, 0], [-1, -1, 0]], 3)
    assert arr.forms == ((1, 1, 0),)
    assert arr.multiplicities == (2,)


def test_normalize_rejects_zero_form():
    with pytest.raises(ZeroForm):
        normalize([[1, 0], [0, 0]], 2)


def test_normalize_rejects_empty():
    with pytest.raises(EmptyArrangement):
        normalize([], 3)


def test_normalize_keeps_first_seen_label():
    arr = normalize(
        [[1, 0], [2, 0], [0, 1]], 2,
        labels=["a", "a-dup", "b"],
    )
    assert arr.labels == ("a", "b")
    assert arr.multiplicities == (2, 1)


def test_normalize_accumulates_declared_multiplicities():
    arr = normalize([[1, 0], [-1, 0]], 2, multiplicities=[2, 3])
    assert arr.multiplicities == (5,)


def test_restrict_wrong_ambient_rejected():
    arr = normalize([[1, 0], [0, 1]], 2)
    with pytest.raises(ZeroForm):
        restrict_to_subspace(arr, Subspace(((1, 0, 0), (0, 1, 0))))


def test_lattice_boolean_rank2():
    arr = normalize([[1, 0], [0, 1]], 2)
    lat = intersection_lattice(arr)
    values = {f.hyperplanes: lat.mobius(f) for f in lat.flats}
    assert values == {(): 1, (0,): -1, (1,): -1, (0, 1): 1}


def test_lattice_three_generic_planes_against_oracle():
    arr = boolean_arrangement(3)
    lat = intersection_lattice(arr)
    assert [len(lat.flats_of_codim(k)) for k in range(4)] == [1, 3, 3, 1]
    closed, mobius = lattice_oracle(arr.forms)
    for f in lat.flats:
        assert f.hyperplanes in closed
        assert lat.mobius(f) == mobius[f.hyperplanes]


def test_lattice_braid_matches_oracle_and_chi():
    arr = braid3()
    closed, mobius = lattice_oracle(arr.forms)
    lat = intersection_lattice(arr)
    assert len(lat.flats) == len(closed)
    for f in lat.flats:
        assert lat.mobius(f) == mobius[f.hyperplanes]
    # chi(t) = (t-1)(t-2)(t-3)
    chi = characteristic_polynomial(arr)
    expected = (
        IntPolynomial((-1, 1)) * IntPolynomial((-2, 1)) * IntPolynomial((-3, 1))
    )
    assert chi == expected


def test_poincare_central_cases():
    assert poincare_central(boolean_arrangement(3)) == IntPolynomial((1, 3, 3, 1))
    assert poincare_central(braid3()) == linear_product([1, 2, 3])
    assert poincare_central(near_pencil(2)) == (
        IntPolynomial((1, 1)) * IntPolynomial((1, 1)) * IntPolynomial((1, 2))
    )


def test_poincare_projective_cases():
    assert poincare_projective(boolean_arrangement(3)) == IntPolynomial((1, 2, 1))
    assert poincare_projective(braid3()) == linear_product([2, 3])
    assert poincare_projective(near_pencil(2)) == IntPolynomial((1, 3, 2))


def test_poincare_against_oracle_random():
    rng = random.Random(2024)
    for _ in range(6):
        arr = random_essential_arrangement(rng, max_hyperplanes=6)
        assert list(poincare_central(arr).coefficients) == poincare_oracle(arr.forms)


def test_mobius_recursion_invariant():
    rng = random.Random(11)
    for _ in range(5):
        arr = random_essential_arrangement(rng, max_hyperplanes=7)
        lat = intersection_lattice(arr)
        for f in lat.flats:
            if not f.hyperplanes:
                continue
            total = sum(
                lat.mobius(g)
                for g in lat.flats
                if set(g.hyperplanes) <= set(f.hyperplanes)
            )
            assert total == 0


def test_deletion_restriction():
    rng = random.Random(31)
    for _ in range(6):
        arr = random_essential_arrangement(rng, max_hyperplanes=6)
        if arr.num_hyperplanes < 2:
            continue
        i = rng.randrange(arr.num_hyperplanes)
        chi = characteristic_polynomial(arr)
        chi_del = characteristic_polynomial(arr.delete(i))
        chi_res = characteristic_polynomial(restrict_to_hyperplane(arr, i))
        assert chi == chi_del - chi_res


def test_is_essential():
    assert is_essential(boolean_arrangement(3))
    assert not is_essential(normalize([[1, 0, 0], [0, 1, 0]], 3))
    braid4 = normalize(
        [[1, -1, 0, 0], [1, 0, -1, 0], [1, 0, 0, -1],
         [0, 1, -1, 0], [0, 1, 0, -1], [0, 0, 1, -1]], 4
    )
    assert not is_essential(braid4)


def test_essentialize_idempotent_and_preserves_lattice():
    arr = boolean_arrangement(3)
    assert essentialize(arr) == arr
    braid4 = normalize(
        [[1, -1, 0, 0], [1, 0, -1, 0], [1, 0, 0, -1],
         [0, 1, -1, 0], [0, 1, 0, -1], [0, 0, 1, -1]], 4
    )
    ess = essentialize(braid4)
    assert ess.ambient_dim == 3
    assert is_essential(ess)
    lat_before = intersection_lattice(braid4)
    lat_after = intersection_lattice(ess)
    # restriction preserves all subset ranks, so flats are literally the
    # same index sets with the same Moebius values
    flats_before = {f.hyperplanes: lat_before.mobius(f) for f in lat_before.flats}
    flats_after = {f.hyperplanes: lat_after.mobius(f) for f in lat_after.flats}
    assert flats_before == flats_after


def test_essentialize_single_hyperplane():
    arr = normalize([[1, 0, 0]], 3)
    ess = essentialize(arr)
    assert ess.ambient_dim == 1
    assert ess.forms == ((1,),)


def test_restrict_boolean_to_generic_plane():
    arr = boolean_arrangement(3)
    u = Subspace(((1, 1, 2), (1, 3, 1)))
    res = restrict_to_subspace(arr, u)
    assert res.num_hyperplanes == 3
    assert res.ambient_dim == 2


def test_restrict_identity_is_identity():
    arr = boolean_arrangement(3)
    u = Subspace(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert restrict_to_subspace(arr, u) == arr


def test_restrict_collapses_proportional_traces():
    arr = normalize([[1, 0, 0], [0, 1, 0]], 3)
    u = Subspace(((1, 1, 0), (0, 0, 1)))
    res = restrict_to_subspace(arr, u)
    assert res.num_hyperplanes == 1


def test_restrict_detects_containment():
    arr = boolean_arrangement(3)
    u = Subspace(((0, 1, 0), (0, 0, 1)))
    with pytest.raises(HyperplaneContainsSubspace) as err:
        restrict_to_subspace(arr, u)
    assert err.value.index == 0


def test_level_zero_genericity():
    arr = boolean_arrangement(3)
    u = Subspace(((1, 1, 1), (1, 2, 3)))
    assert is_lattice_generic(arr, u, 0)


def test_level_genericity_boolean4():
    arr = boolean_arrangement(4)
    u = Subspace(((1, 0, 0, 1), (0, 1, 0, 2), (0, 0, 1, 5)))
    assert is_lattice_generic(arr, u, 2)
    assert genericity_level(arr, u) == 2
    assert betti_agreement_order(arr, u) == 2


def test_degenerate_subspace_fails_level_one():
    # the subspace {x0 = x1} meets the codim-2 flat {x0 = x1 = 0} badly
    arr = boolean_arrangement(4)
    u = Subspace(((1, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    assert is_lattice_generic(arr, u, 0)
    assert not is_lattice_generic(arr, u, 1)
    assert genericity_level(arr, u) == 0
    assert betti_agreement_order(arr, u) == 0


def test_genericity_whole_space():
    arr = boolean_arrangement(4)
    u = Subspace(tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4)))
    assert genericity_level(arr, u) is INFINITE
    assert betti_agreement_order(arr, u) is INFINITE


def test_genericity_requires_level_zero():
    arr = boolean_arrangement(3)
    u = Subspace(((0, 1, 0), (0, 0, 1)))
    with pytest.raises((NotL0Generic, HyperplaneContainsSubspace)):
        genericity_level(arr, u)


def _degenerate_candidate(rng, arr, dim):
    """A subspace aimed through a codimension-2 flat, so genericity drops."""
    lat = intersection_lattice(arr)
    flats2 = lat.flats_of_codim(2)
    if not flats2:
        return None
    flat = flats2[rng.randrange(len(flats2))]
    kernel = int_kernel_basis_oracle([arr.forms[i] for i in flat.hyperplanes])
    vecs = list(kernel)[: dim - 1]
    while len(vecs) < dim:
        vecs.append(tuple(rng.randint(-3, 3) for _ in range(arr.ambient_dim)))
    try:
        return Subspace(tuple(vecs))
    except ZeroForm:
        return None


def test_connectivity_equality_seeded_pairs():
    rng = random.Random(515)
    degenerate_seen = 0
    checked = 0
    while checked < 12:
        arr = random_essential_arrangement(rng, max_hyperplanes=6)
        if arr.rank < 3:
            continue
        dim = rng.randint(2, arr.rank - 1)
        if checked % 3 == 0:
            u = _degenerate_candidate(rng, arr, dim)
        else:
            try:
                u = Subspace(
                    tuple(
                        tuple(rng.randint(-3, 3) for _ in range(arr.ambient_dim))
                        for _ in range(dim)
                    )
                )
            except ZeroForm:
                u = None
        if u is None:
            continue
        try:
            k = genericity_level(arr, u)
            p = betti_agreement_order(arr, u)
        except (NotL0Generic, HyperplaneContainsSubspace):
            continue
        assert k == p or (k is INFINITE and p is INFINITE)
        if k is not INFINITE and k < dim - 1:
            degenerate_seen += 1
        checked += 1
    assert degenerate_seen >= 2


def test_generic_section_betti():
    arr = braid3()
    assert generic_section_betti(arr, arr.rank) == projective_betti(arr)
    assert generic_section_betti(arr, 2) == [1, 5]
    assert generic_section_betti(boolean_arrangement(4), 3) == [1, 3, 3]
    with pytest.raises(RankOutOfRange):
        generic_section_betti(arr, 5)


def test_top_betti_survives_generic_section():
    # the top Betti number of an essential arrangement agrees with the top
    # Betti number of its generic hyperplane section, checked on an
    # explicitly sampled hyperplane
    rng = random.Random(99)
    for _ in range(4):
        arr = random_essential_arrangement(rng, max_hyperplanes=6)
        if arr.rank < 2:
            continue
        u = sample_generic_subspace(arr, arr.ambient_dim - 1, seed=rng.randint(0, 10 ** 6))
        section = restrict_to_subspace(arr, u)
        n = arr.ambient_dim - 1
        b_full = projective_betti(arr)
        b_sec = projective_betti(section)
        assert b_sec[n - 1] == b_full[n - 1]


def test_sample_generic_subspace_is_deterministic():
    arr = boolean_arrangement(4)
    u1 = sample_generic_subspace(arr, 3, seed=7)
    u2 = sample_generic_subspace(arr, 3, seed=7)
    assert u1 == u2
