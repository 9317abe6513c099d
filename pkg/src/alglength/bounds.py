"""Structural checks on characteristic sequences.

A sequence produced by a generating set is always an addition chain: every
term of value >= 2 is the sum of two earlier terms (possibly the same index
twice), which forces the power bound m_h <= 2^(h-1).  For locally-complex
algebras the two earlier terms can be chosen at distinct indices (an addition
chain without doubling), which tightens the bound to the Fibonacci numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import KOutOfRange, RangeError, WellformednessError


def fibonacci(i: int) -> int:
    """F_1 = F_2 = 1, F_i = F_{i-1} + F_{i-2}; exact for any i >= 1."""
    if i < 1:
        raise RangeError(f"Fibonacci index must be >= 1, got {i}")
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def _terms(seq) -> tuple[int, ...]:
    return tuple(seq)


def is_wellformed_sequence(seq) -> bool:
    m = _terms(seq)
    if not m or m[0] != 0:
        return False
    if any(not isinstance(x, int) for x in m):
        return False
    if any(m[t] < 1 for t in range(1, len(m))):
        return False
    return all(m[t] <= m[t + 1] for t in range(len(m) - 1))


def ensure_wellformed(seq) -> tuple[int, ...]:
    m = _terms(seq)
    if not is_wellformed_sequence(m):
        raise WellformednessError(
            f"sequence {m} must start with 0 and be non-decreasing over positive terms"
        )
    return m


@dataclass(frozen=True)
class ChainCheck:
    """Addition-chain verdict with one witness decomposition per index."""

    ok: bool
    strict: bool
    witnesses: tuple[tuple[int, int, int], ...]  # (h, t1, t2) with m[t1]+m[t2]=m[h]
    failures: tuple[tuple[int, int], ...]  # (h, m[h]) with no decomposition


@dataclass(frozen=True)
class BoundCheck:
    """Pointwise bound verdict; ``equalities`` lists indices attaining it."""

    ok: bool
    failures: tuple[tuple[int, int], ...]  # (h, m[h]) exceeding the bound
    equalities: tuple[int, ...]


def check_addition_chain(seq, strict: bool = False) -> ChainCheck:
    """Each m_h >= 2 must split as m_{t1} + m_{t2} with 0 < t1 <= t2 < h.

    With ``strict`` the indices must differ (t1 < t2): the "no doubling"
    variant that characteristic sequences of locally-complex algebras obey.
    """
    m = ensure_wellformed(seq)
    witnesses = []
    failures = []
    for h, value in enumerate(m):
        if value < 2:
            continue
        found = None
        for t1 in range(1, h):
            start = t1 + 1 if strict else t1
            for t2 in range(start, h):
                if m[t1] + m[t2] == value:
                    found = (h, t1, t2)
                    break
            if found:
                break
        if found:
            witnesses.append(found)
        else:
            failures.append((h, value))
    return ChainCheck(
        ok=not failures,
        strict=strict,
        witnesses=tuple(witnesses),
        failures=tuple(failures),
    )


def check_power_bound(seq) -> BoundCheck:
    """m_h <= 2^(h-1) for all h >= 1."""
    m = ensure_wellformed(seq)
    failures = []
    equalities = []
    for h in range(1, len(m)):
        bound = 1 << (h - 1)
        if m[h] > bound:
            failures.append((h, m[h]))
        elif m[h] == bound:
            equalities.append(h)
    return BoundCheck(ok=not failures, failures=tuple(failures), equalities=tuple(equalities))


def check_fibonacci_bound(seq, k: int = 1) -> BoundCheck:
    """Fibonacci bound for sequences of locally-complex generating sets.

    For k = 1 this is the pointwise bound m_h <= F_h.  For k >= 2 (a set
    with k generators independent modulo the unit) it requires
    m_1 = ... = m_k = 1 and m_{k+h} <= F_{h+2} for -1 <= h <= N-k.
    """
    m = ensure_wellformed(seq)
    N = len(m) - 1
    if not 1 <= k <= N:
        raise KOutOfRange(f"k = {k} outside 1..{N}")
    failures = []
    equalities = []
    if k == 1:
        fib_prev, fib = 0, 1  # (F_0, F_1); fib tracks F_h below
        for h in range(1, len(m)):
            if m[h] > fib:
                failures.append((h, m[h]))
            elif m[h] == fib:
                equalities.append(h)
            fib_prev, fib = fib, fib_prev + fib
        return BoundCheck(
            ok=not failures, failures=tuple(failures), equalities=tuple(equalities)
        )
    for t in range(1, k + 1):
        if m[t] != 1:
            failures.append((t, m[t]))
    for h in range(-1, N - k + 1):
        bound = fibonacci(h + 2)
        value = m[k + h]
        if value > bound:
            failures.append((k + h, value))
        elif value == bound:
            equalities.append(k + h)
    return BoundCheck(
        ok=not failures, failures=tuple(failures), equalities=tuple(equalities)
    )


@dataclass(frozen=True)
class BoundReport:
    """Aggregated verdicts; checks that were not requested stay None."""

    wellformed: bool
    addition_chain: Optional[ChainCheck] = None
    strict_addition_chain: Optional[ChainCheck] = None
    power_bound: Optional[BoundCheck] = None
    fibonacci_bound: Optional[BoundCheck] = None
    k_bound: Optional[BoundCheck] = None

    def ok(self) -> bool:
        if not self.wellformed:
            return False
        parts = (
            self.addition_chain,
            self.strict_addition_chain,
            self.power_bound,
            self.fibonacci_bound,
            self.k_bound,
        )
        return all(p.ok for p in parts if p is not None)


def verify_sequence(
    seq,
    *,
    chain: bool = False,
    chain_strict: bool = False,
    power: bool = False,
    fib: bool = False,
    k: int | None = None,
) -> BoundReport:
    """Run the selected checks on one sequence and aggregate the verdicts.

    ``k`` (when given and >= 2) triggers the k-generator Fibonacci bound in
    the ``k_bound`` slot; ``fib`` is the k = 1 theorem bound.
    """
    m = _terms(seq)
    if not is_wellformed_sequence(m):
        return BoundReport(wellformed=False)
    return BoundReport(
        wellformed=True,
        addition_chain=check_addition_chain(m, strict=False) if chain else None,
        strict_addition_chain=check_addition_chain(m, strict=True) if chain_strict else None,
        power_bound=check_power_bound(m) if power else None,
        fibonacci_bound=check_fibonacci_bound(m, 1) if fib else None,
        k_bound=check_fibonacci_bound(m, k) if k is not None else None,
    )
