import random

import pytest

from syzstab import (
    DivisorClass,
    NefRayUnboundedError,
    PerturbationSearchError,
    SurfaceData,
    is_ample,
    is_nef,
    max_nef_parameter,
    pair,
    perturb_to_ample,
    quadratic_expansion,
    rational,
    BundleNumerics,
)

from corpus import make_ample

L = DivisorClass([1, 0, 0])
E1 = DivisorClass([0, 1, 0])
E2 = DivisorClass([0, 0, 1])
C3 = DivisorClass([1, -1, -1])
D = DivisorClass([3, -1, -1])


def test_is_nef_boundary_class(bl2p2):
    X = bl2p2.surface
    d = DivisorClass([2, -1, -1])
    assert is_nef(d, X)
    values = [pair(d, C, X) for C in X.effective_cone_generators]
    assert values == [1, 1, 0]


def test_is_nef_interior_class(bl2p2):
    X = bl2p2.surface
    assert is_nef(D, X)
    assert all(pair(D, C, X) > 0 for C in X.effective_cone_generators)


def test_is_nef_failure_has_witness(bl2p2):
    result = is_nef(DivisorClass([1, -2, 0]), bl2p2.surface)
    assert not result
    assert result.witness_index == 3
    assert result.witness_value == -1


def test_is_ample_examples(bl2p2):
    X = bl2p2.surface
    assert is_ample(D, X)
    boundary = is_ample(DivisorClass([2, -1, -1]), X)
    assert not boundary
    assert boundary.witness_index == 3
    assert boundary.witness_value == 0
    zero = is_ample(DivisorClass([0, 0, 0]), X)
    assert not zero
    assert zero.witness_index is None
    assert zero.witness_value == 0


def test_ample_implies_nef_and_cone_closure(catalog):
    rng = random.Random(31)
    for entry in catalog:
        X = entry.surface
        for _ in range(20):
            a = make_ample(
                [rng.randrange(-3, 4) for _ in range(X.picard_rank)],
                entry.ample_reference, X,
            )
            b = make_ample(
                [rng.randrange(-3, 4) for _ in range(X.picard_rank)],
                entry.ample_reference, X,
            )
            assert is_nef(a, X)
            assert is_ample(a + b, X)


def test_max_nef_parameter_along_e1(bl2p2):
    result = max_nef_parameter(D, E1, bl2p2.surface)
    assert result.t0 == 1
    assert result.vanishing_generator_indices == (3,)


def test_max_nef_parameter_along_c3(bl2p2):
    result = max_nef_parameter(D, C3, bl2p2.surface)
    assert result.t0 == 1
    assert result.vanishing_generator_indices == (1, 2)


def test_max_nef_boundary_is_tight(bl2p2):
    X = bl2p2.surface
    for Cj in X.effective_cone_generators:
        t0 = max_nef_parameter(D, Cj, X).t0
        assert is_nef(D - t0 * Cj, X)
        assert not is_nef(D - (t0 + rational(1, 1000)) * Cj, X)


def test_max_nef_requires_ample(bl2p2):
    with pytest.raises(ValueError):
        max_nef_parameter(DivisorClass([0, 0, 0]), E1, bl2p2.surface)


def test_nef_ray_unbounded_error():
    # E2 meets nothing positively in this truncated generator list.
    X = SurfaceData(
        name="truncated",
        picard_rank=3,
        intersection_matrix=((1, 0, 0), (0, -1, 0), (0, 0, -1)),
        canonical_class=DivisorClass([-3, 1, 1]),
        chi_structure_sheaf=1,
        effective_cone_generators=(E1, E2),
    )
    d = DivisorClass([5, -1, -1])
    assert is_ample(d, X)
    with pytest.raises(NefRayUnboundedError) as exc:
        max_nef_parameter(d, E2, X)
    assert exc.value.generator_index == 2


def test_perturb_standard_conditions_accept_one_half(bl2p2):
    # A = 3L-2E1-E2 on the nef boundary, Cj = E1, constraint (2, D, E1):
    # at epsilon = 1/2 the class is ample and the transported condition
    # is 30 - 23/2 >= 0, so the first candidate is accepted.
    X = bl2p2.surface
    A = DivisorClass([3, -2, -1])
    a_prime, eps = perturb_to_ample(A, E1, (2, D, E1), X)
    assert eps == rational(1, 2)
    assert a_prime == DivisorClass([3, "-3/2", -1])
    assert is_ample(a_prime, X)
    transported = 3 * pair(D, D, X) * pair(E1, a_prime, X) - 2 * pair(
        D, a_prime, X
    ) * pair(D, E1, X)
    assert transported == rational(37, 2)


def test_perturb_with_leading_coefficient_predicate(bl2p2):
    # The pipeline predicate also needs the interpolated leading coefficient
    # positive, which forces epsilon below 2/9 here: the search lands on 1/8.
    X = bl2p2.surface
    E = BundleNumerics(rank=2, c1=D, c2=2)
    A = DivisorClass([3, -2, -1])

    def a2_positive(candidate):
        return quadratic_expansion(E, D, E1, candidate, X).a2 > 0

    a_prime, eps = perturb_to_ample(A, E1, (2, D, E1), X, extra_accept=a2_positive)
    assert eps == rational(1, 8)
    assert a_prime == DivisorClass([3, "-15/8", -1])


def test_perturb_interior_input_still_returns_epsilon(bl2p2):
    X = bl2p2.surface
    a_prime, eps = perturb_to_ample(D, E1, (2, D, E1), X)
    assert eps > 0
    assert is_ample(a_prime, X)


def test_perturb_exhaustion_raises_with_last_epsilon(bl2p2):
    X = bl2p2.surface
    A = DivisorClass([3, -2, -1])
    with pytest.raises(PerturbationSearchError) as exc:
        perturb_to_ample(A, E1, (2, D, E1), X, extra_accept=lambda _: False)
    assert exc.value.last_epsilon == rational(1, 2**32)
    assert "extra acceptance" in exc.value.failed_condition


def test_boundary_class_kills_some_generator(catalog):
    rng = random.Random(37)
    for entry in catalog:
        X = entry.surface
        for _ in range(10):
            d = make_ample(
                [rng.randrange(-3, 4) for _ in range(X.picard_rank)],
                entry.ample_reference, X,
            )
            for Cj in X.effective_cone_generators:
                result = max_nef_parameter(d, Cj, X)
                boundary = d - result.t0 * Cj
                assert result.vanishing_generator_indices
                assert any(
                    pair(boundary, X.generator(i), X) == 0
                    for i in result.vanishing_generator_indices
                )
