"""Shared builders for randomized suites (seeded, deterministic)."""

from __future__ import annotations

import random

from alglength import (
    Algebra,
    EchelonSubspace,
    GF,
    compute_length,
)


def random_unital_algebra(rng: random.Random, n: int, p: int) -> Algebra:
    """Random GF(p) structure table with the unit law forced."""
    field = GF(p)
    one = 1 % p
    table = [[[0] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        table[0][j][j] = one
        table[j][0][j] = one
    for i in range(1, n):
        for j in range(1, n):
            table[i][j] = [rng.randrange(p) for _ in range(n)]
    return Algebra(field, table)


def random_vector(rng: random.Random, n: int, p: int, nonzero: bool = False):
    while True:
        v = tuple(rng.randrange(p) for _ in range(n))
        if not nonzero or any(v):
            return v


def random_genset(rng: random.Random, algebra: Algebra, max_size: int = 2):
    p = algebra.field.modulus
    size = rng.randint(1, max_size)
    return tuple(
        random_vector(rng, algebra.n, p, nonzero=True) for _ in range(size)
    )


def full_basis_genset(algebra: Algebra):
    return tuple(algebra.basis_vector(i) for i in range(1, algebra.n))


def find_generating_set(rng: random.Random, algebra: Algebra, tries: int = 25):
    """A random generating set; falls back to the full basis (always works)."""
    for _ in range(tries):
        gens = random_genset(rng, algebra, max_size=min(3, algebra.n))
        if compute_length(algebra, gens).is_generating:
            return gens
    return full_basis_genset(algebra)


def find_non_generating_set(rng: random.Random, algebra: Algebra, tries: int = 40):
    for _ in range(tries):
        gens = random_genset(rng, algebra, max_size=2)
        if not compute_length(algebra, gens).is_generating:
            return gens
    return None


def span_with_unit(algebra: Algebra, gens) -> EchelonSubspace:
    space, _ = EchelonSubspace.empty(algebra.field, algebra.n).insert(algebra.unit())
    for v in gens:
        space, _ = space.insert(tuple(algebra.field.coerce(x) for x in v))
    return space


def mixed_equal_span_set(rng: random.Random, algebra: Algebra, gens):
    """A different set with the same span(unit, S): invertible triangular mix
    of the non-unit echelon rows plus random unit multiples."""
    p = algebra.field.modulus
    space = span_with_unit(algebra, gens)
    nonunit = [r for r, piv in zip(space.rows, space.pivots) if piv != 0]
    unit = algebra.unit()
    out = []
    for i, base in enumerate(nonunit):
        a = rng.randrange(1, p)
        v = [a * x % p for x in base]
        for other in nonunit[:i]:
            c = rng.randrange(p)
            v = [(x + c * y) % p for x, y in zip(v, other)]
        c = rng.randrange(p)
        v = [(x + c * u) % p for x, u in zip(v, unit)]
        out.append(tuple(v))
    rng.shuffle(out)
    return tuple(out)


def nested_generating_pair(rng: random.Random, algebra: Algebra, tries: int = 40):
    """(S0, S1) both generating with span(unit,S0) strictly inside span(unit,S1)."""
    n = algebra.n
    p = algebra.field.modulus
    for _ in range(tries):
        size = rng.randint(1, 2)
        s0 = tuple(random_vector(rng, n, p, nonzero=True) for _ in range(size))
        space = span_with_unit(algebra, s0)
        if space.dim >= n:
            continue
        if not compute_length(algebra, s0).is_generating:
            continue
        while True:
            w = random_vector(rng, n, p, nonzero=True)
            if not space.contains(w):
                break
        return s0, s0 + (w,)
    return None


def assert_filtration_identity(report) -> None:
    """dims[k] must equal max{t | m_t <= k} + 1 at every recorded step."""
    m = report.charseq.terms
    dims = report.dims
    assert all(a <= b for a, b in zip(dims, dims[1:]))
    assert dims[0] == 1 and dims[-1] <= report.n
    for k, d in enumerate(dims):
        expected = max(t for t, value in enumerate(m) if value <= k) + 1
        assert d == expected, (dims, m, k)


def padded_engine_dims(algebra: Algebra, gens, kmax: int) -> list[int]:
    """Engine dims of L_0..L_kmax.

    A window-free run only ends early when the full dimension is reached or
    when S never leaves the unit span; in both cases dims stay constant.
    """
    if kmax == 0:
        return [1]
    report = compute_length(algebra, gens, cap=kmax, window_stop=False)
    dims = list(report.dims)
    while len(dims) < kmax + 1:
        dims.append(dims[-1])
    return dims
