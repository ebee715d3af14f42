"""Distances on words over an extension-field alphabet.

Five distance functions live here: Hamming, insertion-deletion (via longest
common subsequence), the subspace and subset pseudometrics, and their
block-folded variants.  The subspace distance of two words compares the
F_q-spans of their symbol sets inside F_{q^n} = F_q^n; the subset distance
compares the deduplicated symbol sets themselves.  Both ignore coordinate
positions entirely, which is what makes them lower bounds for the
insdel distance.

Code-level sweeps are exhaustive over unordered pairs with a pair-count
guard; the witness reported for a minimum is always the first attaining
pair in codeword order, so reports are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    EnumerationTooLarge,
    InvalidParams,
    LengthMismatch,
    NotLinear,
    SearchTooLarge,
    TooFewCodewords,
)
from .gf import FieldCtx
from .linalg import (
    enumerate_ext_rref_bases,
    ext_matmul,
    ext_rank,
    ext_in_rowspan,
    span,
)
from .rankmetric import gaussian_binomial

PAIR_GUARD = 10 ** 7
_MATERIALIZE_GUARD = 1 << 20


@dataclass(frozen=True)
class Word:
    """A fixed word over F_{q^n}: an ordered tuple of field elements."""

    ctx: FieldCtx
    symbols: tuple

    def __post_init__(self):
        for s in self.symbols:
            if len(s) != self.ctx.n:
                raise LengthMismatch("symbol does not belong to the word's field")

    def __len__(self):
        return len(self.symbols)


def word(ctx: FieldCtx, symbols) -> Word:
    return Word(ctx, tuple(ctx.element(s) for s in symbols))


@dataclass(frozen=True)
class FoldedWord:
    """A word whose symbols are grouped into fixed-length blocks."""

    ctx: FieldCtx
    block_len: int
    blocks: tuple

    def __post_init__(self):
        for b in self.blocks:
            if len(b) != self.block_len:
                raise LengthMismatch("ragged block in folded word")


def _require_same_ctx(a, b):
    if a.ctx != b.ctx:
        raise InvalidParams("words live in different fields")


def hamming_distance(a: Word, b: Word) -> int:
    _require_same_ctx(a, b)
    if len(a) != len(b):
        raise LengthMismatch("hamming distance needs equal lengths")
    return sum(1 for x, y in zip(a.symbols, b.symbols) if x != y)


def lcs_length(a, b) -> int:
    """Longest common subsequence length by the standard O(|a||b|) DP."""
    m, n = len(a), len(b)
    prev = [0] * (n + 1)
    for i in range(1, m + 1):
        cur = [0] * (n + 1)
        ai = a[i - 1]
        for j in range(1, n + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = cur[j - 1] if cur[j - 1] >= prev[j] else prev[j]
        prev = cur
    return prev[n]


def insdel_distance(a: Word, b: Word) -> int:
    """|a| + |b| - 2 LCS(a, b); the number of insertions plus deletions."""
    _require_same_ctx(a, b)
    return len(a) + len(b) - 2 * lcs_length(a.symbols, b.symbols)


def word_span(a: Word):
    """F_q-span of the word's symbols inside F_q^n."""
    return span(a.symbols, a.ctx.n, a.ctx.q)


def subspace_distance(a: Word, b: Word) -> int:
    """dim(S_a + S_b) - dim(S_a ∩ S_b) for the symbol spans S_a, S_b."""
    _require_same_ctx(a, b)
    sa = word_span(a)
    sb = word_span(b)
    total = span(sa.basis.rows + sb.basis.rows, a.ctx.n, a.ctx.q).dim
    return 2 * total - sa.dim - sb.dim


def subset_distance(a: Word, b: Word) -> int:
    """Symmetric-difference size of the deduplicated symbol sets."""
    _require_same_ctx(a, b)
    sa = set(a.symbols)
    sb = set(b.symbols)
    return len(sa) + len(sb) - 2 * len(sa & sb)


def fold(a: Word, r: int) -> FoldedWord:
    """Group symbols into ceil(m/r) blocks of length r, zero-padding the tail."""
    if r < 1:
        raise InvalidParams("block length must be >= 1")
    syms = list(a.symbols)
    if len(syms) % r:
        syms.extend([a.ctx.zero] * (r - len(syms) % r))
    blocks = tuple(tuple(syms[i:i + r]) for i in range(0, len(syms), r))
    return FoldedWord(a.ctx, r, blocks)


def _require_same_fold(a: FoldedWord, b: FoldedWord):
    if a.ctx != b.ctx:
        raise InvalidParams("folded words live in different fields")
    if a.block_len != b.block_len:
        raise LengthMismatch("folded words have different block lengths")


def folded_subspace_distance(a: FoldedWord, b: FoldedWord) -> int:
    """Subspace distance with blocks flattened to vectors in F_q^(n*r)."""
    _require_same_fold(a, b)
    ambient = a.ctx.n * a.block_len
    q = a.ctx.q
    va = [tuple(c for s in blk for c in s) for blk in a.blocks]
    vb = [tuple(c for s in blk for c in s) for blk in b.blocks]
    sa = span(va, ambient, q)
    sb = span(vb, ambient, q)
    total = span(sa.basis.rows + sb.basis.rows, ambient, q).dim
    return 2 * total - sa.dim - sb.dim


def folded_subset_distance(a: FoldedWord, b: FoldedWord) -> int:
    _require_same_fold(a, b)
    sa = set(a.blocks)
    sb = set(b.blocks)
    return len(sa) + len(sb) - 2 * len(sa & sb)


def r_subspace_distance(a: Word, b: Word, r: int) -> int:
    _require_same_ctx(a, b)
    if len(a) != len(b):
        raise LengthMismatch("r-th distances need equal lengths")
    return folded_subspace_distance(fold(a, r), fold(b, r))


def r_subset_distance(a: Word, b: Word, r: int) -> int:
    _require_same_ctx(a, b)
    if len(a) != len(b):
        raise LengthMismatch("r-th distances need equal lengths")
    return folded_subset_distance(fold(a, r), fold(b, r))


@dataclass(frozen=True)
class MetricReport:
    """Result of an exhaustive minimum-distance sweep."""

    metric: str
    minimum: int
    witness: tuple
    witness_indices: tuple
    pairs: int
    notes: dict | None = None

    def csv_line(self) -> str:
        i, j = self.witness_indices
        return f"{self.metric},{self.minimum},{i},{j},{self.pairs}"


def pairwise_min_report(items, dist, metric: str,
                        guard: int = PAIR_GUARD, force: bool = False,
                        notes: dict | None = None) -> MetricReport:
    """Exact minimum of dist over unordered pairs; witness is the first attaining pair."""
    items = list(items)
    m = len(items)
    if m < 2:
        raise TooFewCodewords("a minimum distance needs at least two members")
    pairs = m * (m - 1) // 2
    if pairs > guard and not force:
        raise SearchTooLarge(f"{pairs} pairs exceed the guard ({guard}); pass force to override")
    best = None
    best_pair = None
    idx = None
    for i in range(m):
        for j in range(i + 1, m):
            d = dist(items[i], items[j])
            if best is None or d < best:
                best = d
                best_pair = (items[i], items[j])
                idx = (i, j)
    return MetricReport(metric, best, best_pair, idx, pairs, notes)


class VectorCode:
    """A set of equal-length words over F_{q^n}, optionally with a generator.

    When a generator is given the code is linear over the alphabet field:
    the codewords are exactly the F_{q^n}-linear combinations of the
    generator rows, and this is re-verified exhaustively at construction
    whenever the row span is small enough to materialize.
    """

    def __init__(self, ctx: FieldCtx, length: int, codewords,
                 generator=None, provenance: dict | None = None):
        self.ctx = ctx
        self.length = length
        seen = {}
        for w in codewords:
            if w.ctx != ctx:
                raise InvalidParams("codeword from a different field")
            if len(w) != length:
                raise LengthMismatch("codeword of wrong length")
            seen.setdefault(w.symbols, w)
        self.codewords = tuple(seen.values())
        self.generator = tuple(generator) if generator is not None else None
        self.provenance = dict(provenance) if provenance else {}
        if self.generator is not None:
            rows = [g.symbols for g in self.generator]
            k = len(rows)
            if ext_rank(rows, length, ctx) != k:
                raise InvalidParams("generator rows are not linearly independent")
            if ctx.order ** k <= _MATERIALIZE_GUARD:
                expected = {w.symbols for w in _span_words(ctx, rows, length)}
                if expected != set(seen):
                    raise InvalidParams("codeword set does not equal the generator row span")

    @property
    def linear(self) -> bool:
        return self.generator is not None

    @property
    def dimension(self) -> int | None:
        return len(self.generator) if self.generator is not None else None

    def __len__(self):
        return len(self.codewords)

    def contains(self, w: Word) -> bool:
        if self.generator is not None:
            rows = [g.symbols for g in self.generator]
            return ext_in_rowspan(w.symbols, rows, self.length, self.ctx)
        return any(w.symbols == c.symbols for c in self.codewords)

    @classmethod
    def from_generator(cls, ctx: FieldCtx, rows, provenance: dict | None = None) -> "VectorCode":
        rows = [w if isinstance(w, Word) else word(ctx, w) for w in rows]
        if not rows:
            raise InvalidParams("a linear code needs at least one generator row")
        length = len(rows[0])
        k = len(rows)
        if ctx.order ** k > _MATERIALIZE_GUARD:
            raise EnumerationTooLarge("row span too large to materialize")
        codewords = _span_words(ctx, [r.symbols for r in rows], length)
        return cls(ctx, length, codewords, generator=rows, provenance=provenance)


def _span_words(ctx: FieldCtx, rows, length: int):
    """Every F_{q^n}-linear combination of the rows, in message order."""
    k = len(rows)
    out = []
    for msg in itertools.product(range(ctx.order), repeat=k):
        symbols = [ctx.zero] * length
        for c_idx, row in zip(msg, rows):
            if c_idx:
                c = ctx.element_at(c_idx)
                for i, s in enumerate(row):
                    symbols[i] = ctx.add(symbols[i], ctx.mul(c, s))
        out.append(Word(ctx, tuple(symbols)))
    return out


_METRICS = {
    "hamming": hamming_distance,
    "insdel": insdel_distance,
    "subspace": subspace_distance,
    "subset": subset_distance,
}


def code_min_distance(c: VectorCode, metric: str, r: int | None = None,
                      force: bool = False) -> MetricReport:
    """Exhaustive minimum distance of a vector code under the named metric."""
    notes = None
    if metric in _METRICS:
        dist = _METRICS[metric]
    elif metric in ("r_subspace", "r_subset"):
        if r is None or r < 1:
            raise InvalidParams("r-th metrics need a block length")
        base = r_subspace_distance if metric == "r_subspace" else r_subset_distance
        dist = lambda a, b: base(a, b, r)
        notes = {"block_len": r}
        if c.length % r:
            notes["padding"] = "zero"
    else:
        raise InvalidParams(f"unknown metric {metric!r}")
    return pairwise_min_report(c.codewords, dist, metric, force=force, notes=notes)


def generalized_hamming_weights(c: VectorCode, count_guard: int = 10 ** 6) -> list[int]:
    """d_r = minimum support size over r-dimensional subcodes, r = 1..k."""
    if not c.linear:
        raise NotLinear("generalized Hamming weights need a generator")
    ctx = c.ctx
    rows = [g.symbols for g in c.generator]
    k = len(rows)
    for r in range(1, k + 1):
        if gaussian_binomial(k, r, ctx.order) > count_guard:
            raise SearchTooLarge("too many subcodes to enumerate")
    weights = []
    for r in range(1, k + 1):
        best = None
        for basis in enumerate_ext_rref_bases(ctx, k, r, count_guard):
            sub = ext_matmul(list(basis), rows, ctx)
            supp = sum(1 for j in range(c.length)
                       if any(row[j] != ctx.zero for row in sub))
            if best is None or supp < best:
                best = supp
        weights.append(best)
    return weights
