"""Span filtration, characteristic sequence, and length of a generating set.

Notation used throughout this module: for a set S of elements of an algebra
A, a *word* is a fully bracketed product of elements of S, L_k denotes the
linear span of all words of length at most k (the unit counts as the word of
length 0), and the *length* l(S) is the least k with L_k = A.  The
*characteristic sequence* lists, for each k in order, as many copies of k as
the dimension jump dim L_k - dim L_{k-1}; it starts with a single 0 and,
when S generates, has exactly dim A terms, the last one equal to l(S).

The filtration is computed layer by layer.  New spanning candidates for
L_{k+1} are products f*g of recorded fresh-basis vectors whose lengths sum
to exactly k+1: every word of length k+1 splits into two shorter words, and
expanding each factor over the fresh bases of the lower layers bilinearly
leaves, modulo L_k, only products of fresh vectors with length-sum k+1.
The word-enumeration oracle cross-checks this candidate restriction.

Termination for non-generating sets uses stabilization windows:

* general window: if the last dimension growth happened at step g and no
  growth occurred through step 2g, the filtration is stable forever;
* locally-complex window (opt-in via ``lc_shortcut``): if additionally the
  last growth increased the dimension by exactly 1, stability is already
  certain at step 2g-1.  The gap families in :mod:`alglength.families`
  witness that neither window can be shortened further.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import Algebra, GenSet, Vector, check_lc_basis, coerce_genset
from .echelon import EchelonSubspace
from .errors import NotLocallyComplex, RangeError

STOP_FULL_DIM = "reached_full_dim"
STOP_WINDOW = "stabilized_window"
STOP_LC_WINDOW = "stabilized_lc_window"
STOP_CAP = "cap_exceeded"


@dataclass(frozen=True)
class CharSeq:
    """Characteristic sequence; ``partial`` marks a non-generating run."""

    terms: tuple[int, ...]
    partial: bool = False

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]


@dataclass
class LayerState:
    """One step of the filtration computation.

    ``acc`` spans L_k; ``fresh[length]`` holds the echelon-reduced basis
    increments contributed at that word length (length 0 is the unit);
    ``dims[i]`` is dim L_i for i <= k.
    """

    acc: EchelonSubspace
    fresh: dict[int, list[Vector]]
    dims: list[int]
    k: int

    def fresh_groups(self) -> tuple[tuple[int, tuple[Vector, ...]], ...]:
        return tuple(
            (length, tuple(vs))
            for length, vs in sorted(self.fresh.items())
            if vs
        )


@dataclass(frozen=True)
class LengthReport:
    """Result of a length computation.

    ``length`` is None when S does not generate; ``stop_reason`` says why the
    run ended.  ``charseq`` is partial in the non-generating case.
    """

    n: int
    dims: tuple[int, ...]
    charseq: CharSeq
    length: Optional[int]
    stop_reason: str
    fresh_basis: tuple[tuple[int, tuple[Vector, ...]], ...] = field(default=())

    @property
    def is_generating(self) -> bool:
        return self.length is not None


def charseq_from_dims(dims: Sequence[int], partial: bool = False) -> CharSeq:
    terms = [0]
    for k in range(1, len(dims)):
        terms.extend([k] * (dims[k] - dims[k - 1]))
    return CharSeq(tuple(terms), partial)


def layer_step(algebra: Algebra, state: LayerState) -> LayerState:
    """Advance the filtration from L_k to L_{k+1}.

    Candidates are the products f*g over fresh groups of lengths a and b with
    a + b = k+1 and a, b >= 1, taken in ascending a, then in group order.
    Vectors that grow the span are recorded as the fresh group of length k+1.
    """
    target = state.k + 1
    acc = state.acc
    group: list[Vector] = []
    lengths = sorted(a for a, vs in state.fresh.items() if a >= 1 and vs)
    available = set(lengths)
    for a in lengths:
        b = target - a
        if b < 1 or b not in available:
            continue
        right = state.fresh[b]
        for f in state.fresh[a]:
            for g in right:
                acc, row = acc.insert(algebra.multiply(f, g))
                if row is not None:
                    group.append(row)
    fresh = dict(state.fresh)
    fresh[target] = group
    return LayerState(acc=acc, fresh=fresh, dims=state.dims + [acc.dim], k=target)


def default_cap(n: int) -> int:
    """Hard safety bound on the step count, above every attainable length."""
    return 1 << max(n - 1, 0)


def compute_length(
    algebra: Algebra,
    gens: Sequence[Sequence],
    *,
    lc_shortcut: bool = False,
    cap: int | None = None,
    window_stop: bool = True,
) -> LengthReport:
    """Compute dims of L_0, L_1, ..., the characteristic sequence, and l(S).

    L_1 is span(unit, S); the result therefore depends on S only through
    that span.  With ``lc_shortcut`` the tighter locally-complex window is
    used; it requires a passing locally-complex basis check.  Setting
    ``window_stop=False`` disables both stabilization windows and runs to
    ``cap`` (default 2**(n-1)), which exists for oracle comparisons; in
    normal runs the cap is theoretically unreachable, so a ``cap_exceeded``
    stop reason from a window-enabled run indicates a bug.
    """
    algebra.ensure_unital()
    gens = coerce_genset(algebra, gens)
    if lc_shortcut and not check_lc_basis(algebra):
        raise NotLocallyComplex("lc_shortcut requires a locally-complex basis")
    n = algebra.n
    if cap is None:
        cap = default_cap(n)
    if cap < 1:
        raise RangeError(f"cap must be >= 1, got {cap}")

    acc, unit_row = EchelonSubspace.empty(algebra.field, n).insert(algebra.unit())
    state = LayerState(acc=acc, fresh={0: [unit_row]}, dims=[1], k=0)
    if n == 1:
        return LengthReport(
            n=1,
            dims=(1,),
            charseq=CharSeq((0,)),
            length=0,
            stop_reason=STOP_FULL_DIM,
            fresh_basis=state.fresh_groups(),
        )

    group1: list[Vector] = []
    acc = state.acc
    for v in gens:
        acc, row = acc.insert(v)
        if row is not None:
            group1.append(row)
    state = LayerState(
        acc=acc, fresh={0: state.fresh[0], 1: group1}, dims=[1, acc.dim], k=1
    )

    last_growth = 1 if state.dims[1] > 1 else 0
    last_increment = state.dims[1] - 1
    length: Optional[int] = None
    stop = STOP_CAP
    while True:
        if state.dims[-1] == n:
            length = state.k
            stop = STOP_FULL_DIM
            break
        if last_growth == 0:
            # Words never leave the span of the unit: stable immediately.
            stop = STOP_WINDOW
            break
        if window_stop:
            if (
                lc_shortcut
                and last_increment == 1
                and state.k >= 2 * last_growth - 1
            ):
                stop = STOP_LC_WINDOW
                break
            if state.k >= 2 * last_growth:
                stop = STOP_WINDOW
                break
        if state.k + 1 > cap:
            stop = STOP_CAP
            break
        state = layer_step(algebra, state)
        if state.dims[-1] > state.dims[-2]:
            last_growth = state.k
            last_increment = state.dims[-1] - state.dims[-2]

    dims = tuple(state.dims)
    return LengthReport(
        n=n,
        dims=dims,
        charseq=charseq_from_dims(dims, partial=length is None),
        length=length,
        stop_reason=stop,
        fresh_basis=state.fresh_groups(),
    )


def is_generating(algebra: Algebra, gens: Sequence[Sequence]) -> bool:
    """True iff span closure of S under products reaches the whole algebra."""
    return compute_length(algebra, gens).is_generating


def characteristic_sequence(report: LengthReport) -> CharSeq:
    """The characteristic sequence of a finished run (flagged when partial)."""
    return report.charseq
