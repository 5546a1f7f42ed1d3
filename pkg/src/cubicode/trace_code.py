"""Trace codes over the chain ring and their ternary Gray images.

For a defining set L the code is C = { ev(a) : a in R_m } with
ev(a) = (Tr(a x))_{x in L}, a length-|L| code over the base ring R_1.
Its Gray image is a ternary [3|L|, 3m] code.  Generator rows are the Gray
images of ev(g) for g running through the F_3-basis of R_m taken in the
order e_0, u e_0, u^2 e_0, e_1, u e_1, ... with e_i the field polynomial
basis.

Two coordinate layouts of the Gray image are supported:

    interleaved: (a_0, b_0, c_0, a_1, b_1, c_1, ...)
    block:       (a_0 .. a_{n-1}, b_0 .. b_{n-1}, c_0 .. c_{n-1})

In the block layout multiplication of the scalar by u becomes a cyclic
shift by n = |L| places, which is what check_quasicyclic certifies.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

import numpy as np

from . import linalg3
from .chain_ring import (
    KINDS,
    Triple,
    DefiningSet,
    defining_set,
    get_ring,
)

LAYOUT_INTERLEAVED = "interleaved"
LAYOUT_BLOCK = "block"
LAYOUTS = (LAYOUT_INTERLEAVED, LAYOUT_BLOCK)

EXHAUSTIVE_MAX_M = 2


@dataclass(frozen=True)
class CodeSpec:
    """Which code: extension degree, defining set kind, Gray layout."""

    m: int
    set_kind: str = "lprime"
    layout: str = LAYOUT_INTERLEAVED

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        if self.set_kind not in KINDS:
            raise ValueError(f"unknown defining set kind {self.set_kind!r}")
        if self.layout not in LAYOUTS:
            raise ValueError(f"unknown layout {self.layout!r}")


# ---------------------------------------------------------------------------
# evaluation


def evaluate(a: Triple, dset: DefiningSet) -> tuple[Triple, ...]:
    """The codeword ev(a) = (Tr(a x))_{x in L} as base-ring triples."""
    ring = get_ring(dset.m)
    return tuple(ring.trace(ring.mul(a, x)) for x in dset.elements)


def gray_image(word, layout: str) -> np.ndarray:
    """Flatten a base-ring word to its ternary Gray image in the given layout."""
    arr = np.asarray(word, dtype=np.int8)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError("expected a sequence of coefficient triples")
    if layout == LAYOUT_INTERLEAVED:
        return arr.reshape(-1)
    if layout == LAYOUT_BLOCK:
        return arr.T.reshape(-1).copy()
    raise ValueError(f"unknown layout {layout!r}")


class EvalContext:
    """Bulk evaluation of Tr(a x) over a fixed coordinate set.

    Scalars are indexed in nilpotent coordinates,
    index = (a1 * q + a2) * q + a3 for a = a1 + a2 (u-1) + a3 (u-1)^2,
    and all heavy paths are numpy lookups in the field's trace-of-product
    table.  Since the ring trace acts componentwise in nilpotent
    coordinates, the standard coefficients of Tr(a x) are recovered from
    the nilpotent traces (t1, t2, t3) as (t1 - t2 + t3, t2 + t3, t3).
    """

    def __init__(self, m: int, nilpotent_coords) -> None:
        from .gf3m import get_field

        self.m = m
        self.field = get_field(m)
        self.q = self.field.q
        arr = np.asarray(nilpotent_coords, dtype=np.int16).reshape(-1, 3)
        self.x1 = arr[:, 0].copy()
        self.x2 = arr[:, 1].copy()
        self.x3 = arr[:, 2].copy()
        self.n = len(arr)
        self.trace_mul = self.field.trace_mul_table

    def scalar_count(self) -> int:
        return self.q**3

    def _standard_traces(self, scalars):
        q = self.q
        s = np.asarray(scalars, dtype=np.int64)
        a1 = (s // (q * q)).astype(np.int16)
        a2 = ((s // q) % q).astype(np.int16)
        a3 = (s % q).astype(np.int16)
        tm = self.trace_mul
        t1 = tm[a1[:, None], self.x1[None, :]]
        t2 = (tm[a1[:, None], self.x2[None, :]] + tm[a2[:, None], self.x1[None, :]]) % 3
        t3 = (
            tm[a1[:, None], self.x3[None, :]]
            + tm[a2[:, None], self.x2[None, :]]
            + tm[a3[:, None], self.x1[None, :]]
        ) % 3
        s1 = (t1 - t2 + t3) % 3
        s2 = (t2 + t3) % 3
        return s1.astype(np.int8), s2.astype(np.int8), t3.astype(np.int8)

    def trace_triples(self, scalars) -> np.ndarray:
        """(len(scalars), n, 3) standard-coordinate words Tr(a x)."""
        s1, s2, s3 = self._standard_traces(scalars)
        return np.stack([s1, s2, s3], axis=-1)

    def lee_weights(self, scalars) -> np.ndarray:
        s1, s2, s3 = self._standard_traces(scalars)
        w = (s1 != 0).sum(axis=1, dtype=np.int64)
        w += (s2 != 0).sum(axis=1, dtype=np.int64)
        w += (s3 != 0).sum(axis=1, dtype=np.int64)
        return w


@functools.lru_cache(maxsize=None)
def get_eval_context(m: int, kind: str) -> EvalContext:
    return EvalContext(m, defining_set(m, kind).nilpotent)


def scalar_from_index(m: int, index: int) -> Triple:
    """Standard coordinates of the scalar with the given nilpotent index."""
    ring = get_ring(m)
    q = ring.field.q
    if not 0 <= index < q**3:
        raise ValueError(f"scalar index {index} out of range")
    return ring.from_nilpotent((index // (q * q), (index // q) % q, index % q))


def index_of_scalar(m: int, a: Triple) -> int:
    ring = get_ring(m)
    q = ring.field.q
    x1, x2, x3 = ring.to_nilpotent(a)
    return (x1 * q + x2) * q + x3


# ---------------------------------------------------------------------------
# code construction


def ring_basis(m: int) -> tuple[Triple, ...]:
    """The fixed F_3-basis e_i, u e_i, u^2 e_i of R_m, grouped per i."""
    out = []
    for i in range(m):
        e = 3**i
        out += [(e, 0, 0), (0, e, 0), (0, 0, e)]
    return tuple(out)


class TernaryCode:
    """Ternary Gray image of a trace code, held as a generator matrix."""

    def __init__(self, spec: CodeSpec, generators: np.ndarray) -> None:
        self.spec = spec
        self.generators = generators
        self.dimension, self.length = generators.shape
        self.layout = spec.layout
        self._codewords: np.ndarray | None = None

    def __repr__(self) -> str:
        return (
            f"TernaryCode(N={self.length}, k={self.dimension}, "
            f"m={self.spec.m}, set={self.spec.set_kind}, layout={self.layout})"
        )

    def codewords(self) -> np.ndarray:
        """All 3^k codewords; message index digits are little-endian row coefficients."""
        if self._codewords is None:
            k = self.dimension
            if 3**k * self.length > 50_000_000:
                raise ValueError("codeword table too large to materialize")
            msgs = (np.arange(3**k)[:, None] // 3 ** np.arange(k)[None, :]) % 3
            prod = msgs.astype(np.int64) @ self.generators.astype(np.int64)
            self._codewords = (prod % 3).astype(np.int8)
        return self._codewords


def build_code(spec: CodeSpec) -> TernaryCode:
    dset = defining_set(spec.m, spec.set_kind)
    rows = [gray_image(evaluate(g, dset), spec.layout) for g in ring_basis(spec.m)]
    return TernaryCode(spec, np.vstack(rows))


def generator_rank(code: TernaryCode) -> int:
    return linalg3.rank(code.generators)


def export_generators(code: TernaryCode) -> str:
    """Plain text generator matrix: a header line, then one trit row per generator."""
    header = (
        f"# ternary code N={code.length} k={code.dimension} "
        f"layout={code.layout} m={code.spec.m} set={code.spec.set_kind}"
    )
    rows = ["".join(str(int(t)) for t in row) for row in code.generators]
    return "\n".join([header, *rows]) + "\n"


# ---------------------------------------------------------------------------
# structural checks


def _all_ring_words(ctx: EvalContext) -> np.ndarray:
    total = ctx.scalar_count()
    blocks = [
        ctx.trace_triples(np.arange(lo, min(total, lo + 2187)))
        for lo in range(0, total, 2187)
    ]
    return np.concatenate(blocks, axis=0)


def check_injectivity(spec: CodeSpec, elements=None) -> bool:
    """Exhaustively decide whether a -> ev(a) separates all 3^{3m} scalars.

    An explicit element list can replace the spec's defining set to probe
    degenerate coordinate sets.
    """
    if spec.m > EXHAUSTIVE_MAX_M:
        raise ValueError(f"injectivity check is exhaustive, capped at m <= {EXHAUSTIVE_MAX_M}")
    if elements is None:
        ctx = get_eval_context(spec.m, spec.set_kind)
    else:
        ring = get_ring(spec.m)
        ctx = EvalContext(spec.m, tuple(ring.to_nilpotent(x) for x in elements))
    words = _all_ring_words(ctx)
    seen = {row.tobytes() for row in words.reshape(len(words), -1)}
    return len(seen) == ctx.scalar_count()


def coordinate_permutation(spec: CodeSpec, v: Triple) -> np.ndarray:
    """Index permutation of the defining set induced by x -> v x.

    perm[i] is the position of v * x_i; requires v to be in the set's
    multiplicative stabilizer (any set element qualifies).
    """
    ring = get_ring(spec.m)
    F = ring.field
    q = F.q
    ctx = get_eval_context(spec.m, spec.set_kind)
    x1_values = F.squares() if spec.set_kind == "lprime" else tuple(range(1, q))
    x1_rank = np.full(q, -1, dtype=np.int64)
    for r, val in enumerate(x1_values):
        x1_rank[val] = r
    MUL = F.mul_table
    ADD = F.add_table
    v1, v2, v3 = ring.to_nilpotent(v)
    p1 = MUL[v1, ctx.x1]
    p2 = ADD[MUL[v1, ctx.x2], MUL[v2, ctx.x1]]
    p3 = ADD[ADD[MUL[v1, ctx.x3], MUL[v2, ctx.x2]], MUL[v3, ctx.x1]]
    r1 = x1_rank[p1]
    if (r1 < 0).any():
        raise ValueError("multiplication by v does not stabilize the defining set")
    return (r1 * q + p2.astype(np.int64)) * q + p3.astype(np.int64)


def check_group_action(spec: CodeSpec, sample: int | None = None, seed: int = 7) -> bool:
    """True iff for every v in L the permutation x -> v x maps the code into itself.

    All codewords are checked when sample is None, otherwise a seeded
    sample of that many codewords per permutation.
    """
    if spec.m > EXHAUSTIVE_MAX_M:
        raise ValueError(f"group action check is capped at m <= {EXHAUSTIVE_MAX_M}")
    ctx = get_eval_context(spec.m, spec.set_kind)
    dset = defining_set(spec.m, spec.set_kind)
    words = _all_ring_words(ctx)
    flat = words.reshape(len(words), -1)
    word_bytes = {row.tobytes() for row in flat}
    if sample is None or sample >= len(words):
        picked = words
    else:
        rng = random.Random(seed)
        idx = rng.sample(range(len(words)), sample)
        picked = words[np.array(idx)]
    for v in dset.elements:
        perm = coordinate_permutation(spec, v)
        moved = picked[:, perm, :].reshape(len(picked), -1)
        if any(row.tobytes() not in word_bytes for row in moved):
            return False
    return True


def check_quasicyclic(spec: CodeSpec, sample: int | None = None, seed: int = 7) -> bool:
    """True iff the block-layout image is invariant under a cyclic shift by |L|."""
    if spec.layout != LAYOUT_BLOCK:
        raise ValueError("the shift certification is defined for the block layout")
    if spec.m > EXHAUSTIVE_MAX_M:
        raise ValueError(f"quasi-cyclic check is capped at m <= {EXHAUSTIVE_MAX_M}")
    ctx = get_eval_context(spec.m, spec.set_kind)
    words = _all_ring_words(ctx)
    images = words.transpose(0, 2, 1).reshape(len(words), -1)
    image_bytes = {row.tobytes() for row in images}
    if sample is None or sample >= len(images):
        picked = images
    else:
        rng = random.Random(seed)
        idx = rng.sample(range(len(images)), sample)
        picked = images[np.array(idx)]
    shifted = np.roll(picked, ctx.n, axis=1)
    return all(row.tobytes() in image_bytes for row in shifted)
