import random

import pytest

from alglength import (
    Algebra,
    EchelonSubspace,
    GF,
    QQ,
    EmptyGeneratingSet,
    LayerState,
    NotLocallyComplex,
    STOP_FULL_DIM,
    STOP_LC_WINDOW,
    STOP_WINDOW,
    characteristic_sequence,
    charseq_from_dims,
    compute_length,
    enumerate_words_spans,
    is_generating,
    layer_step,
    make_example,
)

from helpers import (
    assert_filtration_identity,
    find_generating_set,
    find_non_generating_set,
    mixed_equal_span_set,
    nested_generating_pair,
    random_unital_algebra,
)


def test_power2_4_reference_run():
    algebra, gens = make_example("power2", 4)
    report = compute_length(algebra, gens)
    assert report.length == 4
    assert report.charseq.terms == (0, 1, 2, 4)
    assert report.dims == (1, 2, 3, 3, 4)
    assert report.stop_reason == STOP_FULL_DIM
    assert not report.charseq.partial
    assert_filtration_identity(report)


def test_fib_lc_5_reference_run():
    algebra, gens = make_example("fib-lc", 5)
    report = compute_length(algebra, gens)
    assert report.length == 3
    assert report.charseq.terms == (0, 1, 1, 2, 3)
    assert report.dims == (1, 3, 4, 5)


def test_full_basis_has_length_one():
    for family, n in (("power2", 5), ("fib-lc", 6)):
        algebra, _ = make_example(family, n)
        gens = tuple(algebra.basis_vector(i) for i in range(1, algebra.n))
        report = compute_length(algebra, gens)
        assert report.length == 1
        assert report.charseq.terms == (0,) + (1,) * (algebra.n - 1)


def test_stall_chain_plateau():
    algebra, gens = make_example("stall-chain", 3)
    report = compute_length(algebra, gens)
    assert report.charseq.terms == (0, 1, 2, 3, 6)
    assert report.dims == (1, 2, 3, 4, 4, 4, 5)


def test_lc_gap7_dims():
    algebra, gens = make_example("lc-gap7")
    report = compute_length(algebra, gens)
    assert report.dims == (1, 4, 6, 6, 7)
    assert report.length == 4


def _initial_state(algebra, gens):
    acc, unit_row = EchelonSubspace.empty(algebra.field, algebra.n).insert(
        algebra.unit()
    )
    fresh = {0: [unit_row]}
    group1 = []
    for v in gens:
        acc, row = acc.insert(v)
        if row is not None:
            group1.append(row)
    fresh[1] = group1
    return LayerState(acc=acc, fresh=fresh, dims=[1, acc.dim], k=1)


def test_layer_step_power2():
    algebra, gens = make_example("power2", 4)
    state = _initial_state(algebra, gens)
    assert state.dims == [1, 2]
    state = layer_step(algebra, state)  # k = 2: e1*e1 = e2
    assert state.dims == [1, 2, 3]
    assert state.fresh[2] == [algebra.basis_vector(2)]
    state = layer_step(algebra, state)  # k = 3: e1*e2 and e2*e1 are zero
    assert state.dims == [1, 2, 3, 3]
    assert state.fresh[3] == []


def test_layer_step_fib_lc_growth_by_one():
    algebra, gens = make_example("fib-lc", 5)
    state = _initial_state(algebra, gens)
    state = layer_step(algebra, state)
    state = layer_step(algebra, state)  # k = 3: e2*e3 = e4 is the only growth
    assert state.dims[-1] - state.dims[-2] == 1


def test_is_generating_cases():
    algebra, _ = make_example("power2", 4)
    e1 = algebra.basis_vector(1)
    e2 = algebra.basis_vector(2)
    assert is_generating(algebra, (e1,))
    # Oracle: exhaustive word enumeration from {e2} saturates at dim 3.
    oracle_dims = enumerate_words_spans(algebra, (e2,), 8)
    assert max(oracle_dims) == 3
    assert not is_generating(algebra, (e2,))
    assert not is_generating(algebra, (algebra.unit(),))


def test_unit_only_degenerate_window():
    algebra, _ = make_example("power2", 4)
    report = compute_length(algebra, (algebra.unit(),))
    assert report.length is None
    assert report.stop_reason == STOP_WINDOW
    assert report.dims == (1, 1)
    assert report.charseq.partial


def test_characteristic_sequence_partial_flag():
    algebra, _ = make_example("power2", 4)
    report = compute_length(algebra, (algebra.basis_vector(2),))
    seq = characteristic_sequence(report)
    assert seq.partial
    assert seq.terms[0] == 0
    generating = compute_length(algebra, (algebra.basis_vector(1),))
    assert not characteristic_sequence(generating).partial


def test_charseq_from_dims_examples():
    assert charseq_from_dims((1, 2, 3, 3, 4)).terms == (0, 1, 2, 4)
    assert charseq_from_dims((1, 4, 6, 6, 7)).terms == (0, 1, 1, 1, 2, 2, 4)
    assert charseq_from_dims((1, 5)).terms == (0, 1, 1, 1, 1)


def test_lc_shortcut_requires_lc_basis():
    algebra, gens = make_example("power2", 4)
    with pytest.raises(NotLocallyComplex):
        compute_length(algebra, gens, lc_shortcut=True)


def test_lc_shortcut_single_generator_stops_early():
    algebra, _ = make_example("fib-lc", 5)
    e1 = (algebra.basis_vector(1),)
    fast = compute_length(algebra, e1, lc_shortcut=True)
    assert fast.length is None
    assert fast.stop_reason == STOP_LC_WINDOW
    assert fast.dims == (1, 2)  # stops right after the +1 growth at step 1
    slow = compute_length(algebra, e1, window_stop=False)
    assert slow.length is None
    assert slow.dims[-1] == fast.dims[-1] == 2


def test_empty_genset_rejected():
    algebra, _ = make_example("power2", 4)
    with pytest.raises(EmptyGeneratingSet):
        compute_length(algebra, ())


def test_dim_one_algebra_has_length_zero():
    algebra = Algebra(QQ, [[[1]]])
    report = compute_length(algebra, (algebra.unit(),))
    assert report.length == 0
    assert report.charseq.terms == (0,)


def test_sequence_has_n_terms_and_ends_at_length():
    rng = random.Random(101)
    for _ in range(40):
        algebra = random_unital_algebra(rng, rng.randint(2, 4), rng.choice((2, 3)))
        gens = find_generating_set(rng, algebra)
        report = compute_length(algebra, gens)
        assert report.is_generating
        assert len(report.charseq) == algebra.n
        assert report.charseq.terms[-1] == report.length
        assert_filtration_identity(report)


def test_fresh_count_matches_multiplicity():
    for family, n in (("power2", 5), ("fib-lc", 6), ("stall-chain", 3)):
        algebra, gens = make_example(family, n)
        report = compute_length(algebra, gens)
        counts = {length: len(vs) for length, vs in report.fresh_basis}
        for k in set(report.charseq.terms):
            assert counts.get(k, 0) == list(report.charseq.terms).count(k)


def test_equal_spans_give_identical_results():
    rng = random.Random(103)
    done = 0
    while done < 20:
        algebra = random_unital_algebra(rng, rng.randint(2, 4), rng.choice((2, 3)))
        gens = find_generating_set(rng, algebra)
        other = mixed_equal_span_set(rng, algebra, gens)
        if not other:
            continue
        r0 = compute_length(algebra, gens)
        r1 = compute_length(algebra, other)
        assert (r0.dims, r0.charseq.terms, r0.length) == (
            r1.dims,
            r1.charseq.terms,
            r1.length,
        )
        done += 1


def test_nested_spans_monotone_length():
    rng = random.Random(107)
    done = 0
    while done < 10:
        algebra = random_unital_algebra(rng, rng.randint(3, 4), rng.choice((2, 3)))
        pair = nested_generating_pair(rng, algebra, tries=20)
        if pair is None:
            continue
        s0, s1 = pair
        l0 = compute_length(algebra, s0).length
        l1 = compute_length(algebra, s1).length
        assert l0 is not None and l1 is not None and l0 >= l1
        done += 1


def test_window_stop_agrees_with_full_run():
    rng = random.Random(109)
    done = 0
    while done < 15:
        algebra = random_unital_algebra(rng, rng.randint(2, 4), rng.choice((2, 3)))
        gens = find_non_generating_set(rng, algebra)
        if gens is None:
            continue
        windowed = compute_length(algebra, gens)
        full = compute_length(algebra, gens, window_stop=False)
        assert windowed.length is None and full.length is None
        assert windowed.dims[-1] == full.dims[-1]
        done += 1


def test_engine_matches_word_oracle_on_random_algebras():
    rng = random.Random(113)
    from helpers import padded_engine_dims, random_genset

    for _ in range(12):
        algebra = random_unital_algebra(rng, rng.randint(2, 4), rng.choice((2, 3)))
        gens = random_genset(rng, algebra, max_size=2)
        kmax = 6
        assert enumerate_words_spans(algebra, gens, kmax) == padded_engine_dims(
            algebra, gens, kmax
        )
