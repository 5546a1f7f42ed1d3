"""Lee weight distributions three independent ways, plus quadratic character sums.

With q = 3^m and size = 3^{3m} scalars, the closed forms are

    lprime, m odd:
        {0: 1,  3^{3m} - 3^{2m}: 3^{3m} - 3^m,  3^{3m}: 3^m - 1}
    lprime, m == 2 (mod 4):
        {0: 1,  3^{3m} - 3^{5m/2}: (3^m - 1)/2,
                3^{3m} - 3^{2m}:   3^{3m} - 3^m,
                3^{3m} + 3^{5m/2}: (3^m - 1)/2}
    units, any m:
        {0: 1,  2(3^{3m} - 3^{2m}): 3^{3m} - 3^m,  2 * 3^{3m}: 3^m - 1}

The lprime pattern for m == 0 (mod 4) is unproven and refused unless
explicitly extrapolated.  The enumeration path scores every scalar
against the whole defining set, and the character-sum path recovers each
weight from sums of cube roots of unity over the Gray image via

    w = (2N - theta(a) - theta(2a)) / 3,

using that sum_{s=1,2} Theta(s y) = 2N - 3 wH(y) for any ternary vector y.
Every produced distribution is checked against the two exact invariants
sum f = 3^{3m} and sum w f = 2 N 3^{3m-1}.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .chain_ring import KIND_LPRIME, Triple, code_length, get_ring
from .trace_code import CodeSpec, get_eval_context, index_of_scalar

_OMEGA = np.exp(2j * np.pi * np.arange(3) / 3)
_CHUNK_ELEMS = 4_000_000
ENUMERATE_MAX_M = 3
CHARSUM_MAX_M = 2
GAUSS_MAX_M = 8


# ---------------------------------------------------------------------------
# quadratic character sums


@dataclass(frozen=True)
class GaussPeriods:
    """Character sums over the squares and nonsquares of F_{3^m}.

    squares and nonsquares hold the directly summed numeric values of
    sum omega^{tr(x)} over the two classes.  For even m both are exact
    integers (exact_even); for odd m both have real part -1/2 and
    imaginary parts +-(1/2) 3^{m/2} with opposite signs, odd_imag_sign
    giving the sign on the squares side.  They always satisfy
    squares + nonsquares = -1.
    """

    m: int
    squares: complex
    nonsquares: complex
    exact_even: tuple[int, int] | None
    odd_imag_sign: int | None

    @property
    def gauss_sum(self) -> complex:
        """Closed form (-1)^(m-1) i^m sqrt(3^m) of the quadratic Gauss sum."""
        return ((-1) ** (self.m - 1)) * (1j**self.m) * math.sqrt(3**self.m)

    @property
    def closed_squares(self) -> complex:
        return (self.gauss_sum - 1) / 2

    @property
    def closed_nonsquares(self) -> complex:
        return (-self.gauss_sum - 1) / 2


def gauss_periods(m: int) -> GaussPeriods:
    if not 1 <= m <= GAUSS_MAX_M:
        raise ValueError(f"character sums supported for m in 1..{GAUSS_MAX_M}, got {m}")
    from .gf3m import get_field

    F = get_field(m)
    sq = complex(sum(_OMEGA[F.trace(x)] for x in F.squares()))
    ns = complex(sum(_OMEGA[F.trace(x)] for x in F.nonsquares()))
    if m % 2 == 0:
        root = 3 ** (m // 2)
        g = root if m % 4 == 2 else -root
        exact_even: tuple[int, int] | None = ((g - 1) // 2, (-g - 1) // 2)
        odd_sign = None
        closed_sq = complex(exact_even[0])
        closed_ns = complex(exact_even[1])
    else:
        exact_even = None
        odd_sign = 1 if m % 4 == 1 else -1
        half_root = math.sqrt(3**m) / 2
        closed_sq = complex(-0.5, odd_sign * half_root)
        closed_ns = complex(-0.5, -odd_sign * half_root)
    for direct, closed in ((sq, closed_sq), (ns, closed_ns)):
        if abs(direct - closed) > 1e-9 * abs(closed):
            raise ArithmeticError(
                f"character sum {direct} disagrees with closed form {closed} at m={m}"
            )
    return GaussPeriods(
        m=m, squares=sq, nonsquares=ns, exact_even=exact_even, odd_imag_sign=odd_sign
    )


def vector_char_sum(y) -> complex:
    """Theta(y) = sum_j omega^{y_j} for a ternary vector y."""
    arr = np.asarray(y, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() > 2):
        raise ValueError("entries must lie in {0, 1, 2}")
    return complex(_OMEGA[arr].sum())


def codeword_char_sum(spec: CodeSpec, a: Triple) -> complex:
    """theta(a): the character sum over the Gray image of ev(a)."""
    if spec.m > CHARSUM_MAX_M:
        raise ValueError(f"character sums over codewords are capped at m <= {CHARSUM_MAX_M}")
    ctx = get_eval_context(spec.m, spec.set_kind)
    word = ctx.trace_triples(np.array([index_of_scalar(spec.m, a)]))[0]
    return complex(_OMEGA[word].sum())


def weight_from_char_sum(spec: CodeSpec, a: Triple) -> int:
    """Lee weight of ev(a) recovered from theta(a) + theta(2a)."""
    ring = get_ring(spec.m)
    n_len = code_length(spec.m, spec.set_kind)
    total = codeword_char_sum(spec, a) + codeword_char_sum(spec, ring.add(a, a))
    w = (2 * n_len - total.real) / 3
    nearest = round(w)
    if abs(w - nearest) >= 1e-6 or abs(total.imag) >= 1e-6:
        raise ArithmeticError(
            f"character-sum weight {w!r} is not an integer within 1e-6 (imag {total.imag!r})"
        )
    return int(nearest)


# ---------------------------------------------------------------------------
# distributions


@dataclass(frozen=True)
class WeightDistribution:
    """weight -> frequency over all 3^{3m} scalars, weights ascending."""

    entries: dict[int, int]
    total: int
    method: str  # 'enumerated' | 'formula' | 'charsum'
    note: str | None = None

    @property
    def min_nonzero_weight(self) -> int:
        return min(w for w in self.entries if w > 0)

    @property
    def max_nonzero_weight(self) -> int:
        return max(w for w in self.entries if w > 0)


def _validate(entries: dict[int, int], m: int, kind: str) -> None:
    size = 3 ** (3 * m)
    n_len = code_length(m, kind)
    assert sum(entries.values()) == size, "frequencies must cover all scalars"
    moment = sum(w * f for w, f in entries.items())
    assert moment == 2 * n_len * 3 ** (3 * m - 1), "first moment identity violated"


def _finish(counts: Counter, spec: CodeSpec, method: str, note: str | None = None):
    entries = {int(w): int(counts[w]) for w in sorted(counts)}
    _validate(entries, spec.m, spec.set_kind)
    return WeightDistribution(
        entries=entries, total=3 ** (3 * spec.m), method=method, note=note
    )


def _weight_histogram(args) -> Counter:
    m, kind, lo, hi = args
    ctx = get_eval_context(m, kind)
    counts: Counter = Counter()
    step = max(1, _CHUNK_ELEMS // ctx.n)
    for start in range(lo, hi, step):
        w = ctx.lee_weights(np.arange(start, min(hi, start + step)))
        vals, cnt = np.unique(w, return_counts=True)
        for v, c in zip(vals.tolist(), cnt.tolist()):
            counts[v] += c
    return counts


def enumerate_distribution(spec: CodeSpec, threads: int = 1) -> WeightDistribution:
    """Brute force: Lee weight of ev(a) for every scalar a.

    Parallelizes over contiguous scalar ranges; per-range histograms are
    merged by addition, so the result is independent of threads.
    """
    if spec.m > ENUMERATE_MAX_M:
        raise ValueError(f"exhaustive enumeration is capped at m <= {ENUMERATE_MAX_M}")
    total = 3 ** (3 * spec.m)
    if threads <= 1:
        counts = _weight_histogram((spec.m, spec.set_kind, 0, total))
    else:
        edges = [total * i // threads for i in range(threads + 1)]
        jobs = [
            (spec.m, spec.set_kind, lo, hi)
            for lo, hi in zip(edges, edges[1:])
            if hi > lo
        ]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_weight_histogram, jobs):
                counts.update(part)
    return _finish(counts, spec, "enumerated")


def scalar_weights(spec: CodeSpec) -> np.ndarray:
    """Lee weight of ev(a) for every scalar, in nilpotent index order."""
    if spec.m > ENUMERATE_MAX_M:
        raise ValueError(f"exhaustive enumeration is capped at m <= {ENUMERATE_MAX_M}")
    ctx = get_eval_context(spec.m, spec.set_kind)
    total = ctx.scalar_count()
    step = max(1, _CHUNK_ELEMS // ctx.n)
    parts = [
        ctx.lee_weights(np.arange(lo, min(total, lo + step)))
        for lo in range(0, total, step)
    ]
    return np.concatenate(parts)


def charsum_distribution(spec: CodeSpec) -> WeightDistribution:
    """Distribution assembled scalar by scalar through weight_from_char_sum."""
    if spec.m > CHARSUM_MAX_M:
        raise ValueError(f"the character-sum path is capped at m <= {CHARSUM_MAX_M}")
    from .trace_code import scalar_from_index

    counts: Counter = Counter()
    for idx in range(3 ** (3 * spec.m)):
        counts[weight_from_char_sum(spec, scalar_from_index(spec.m, idx))] += 1
    return _finish(counts, spec, "charsum")


def formula_distribution(spec: CodeSpec, extrapolate: bool = False) -> WeightDistribution:
    """Closed-form distribution for the supported (m, kind) combinations."""
    m = spec.m
    size = 3 ** (3 * m)
    q = 3**m
    note = None
    if spec.set_kind == KIND_LPRIME:
        if m % 2 == 1:
            entries = {0: 1, size - 3 ** (2 * m): size - q, size: q - 1}
        elif m % 4 == 2 or extrapolate:
            half = 3 ** (5 * m // 2)
            entries = {
                0: 1,
                size - half: (q - 1) // 2,
                size - 3 ** (2 * m): size - q,
                size + half: (q - 1) // 2,
            }
            if m % 4 == 0:
                note = "unverified extrapolation"
        else:
            raise ValueError(
                "the closed form for the lprime family is stated only for m odd "
                "or m == 2 (mod 4); pass extrapolate=True to emit the unproven pattern"
            )
    else:
        entries = {
            0: 1,
            2 * (size - 3 ** (2 * m)): size - q,
            2 * size: q - 1,
        }
    counts = Counter(dict(sorted(entries.items())))
    return _finish(counts, spec, "formula", note)


# ---------------------------------------------------------------------------
# serialization


def distribution_csv(dist: WeightDistribution) -> str:
    lines = ["weight,frequency"]
    lines += [f"{w},{f}" for w, f in sorted(dist.entries.items())]
    return "\n".join(lines) + "\n"


def distribution_json(dist: WeightDistribution) -> dict:
    out = {
        "entries": {str(w): f for w, f in sorted(dist.entries.items())},
        "total": dist.total,
        "method": dist.method,
    }
    if dist.note:
        out["note"] = dist.note
    return out
