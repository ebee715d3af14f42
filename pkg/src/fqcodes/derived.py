"""Word and folded codes derived from subspace codes and difference sets.

A span code lists, for each member subspace, a deterministic spanning tuple
of its vectors read as symbols of the big field F_{q^N}; its subset (hence
insdel) distance inherits the subspace distance of the source code.  The
all-vectors variant lists low-order vectors of each member instead, and the
evaluation folded code multiplies a point set D by every nonzero field
element, which makes its pairwise block-set distances a pure function of
the translation overlaps |yD ∩ D|.

The Singer set (the trace-zero hyperplane of F_{2^n}) is constructed and
then its difference-set property is re-verified exhaustively rather than
trusted; a failure raises PropertyViolation since it can only mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptySet,
    EnumerationTooLarge,
    InvalidParams,
    LengthOutOfRange,
    LengthTooShort,
    ParameterTooSmall,
    PropertyViolation,
)
from .gf import FieldCtx
from .metrics import (
    FoldedWord,
    MetricReport,
    Word,
    fold,
    folded_subset_distance,
    folded_subspace_distance,
    pairwise_min_report,
)
from .metrics import VectorCode
from .constructions import SubspaceCode

_VECTOR_GUARD = 1 << 16


@dataclass(frozen=True)
class DifferenceSet:
    """(v, k, lambda) difference set in the multiplicative group of F_{q^n}."""

    ctx: FieldCtx
    members: tuple
    v: int
    k: int
    lam: int


@dataclass(frozen=True)
class FoldedCode:
    """A set of folded words with a uniform block structure."""

    ctx: FieldCtx
    block_len: int
    codewords: tuple
    provenance: dict | None = None

    def __len__(self):
        return len(self.codewords)


def folded_code_min_distance(fc: FoldedCode, metric: str = "subset",
                             force: bool = False) -> MetricReport:
    if metric == "subset":
        dist = folded_subset_distance
    elif metric == "subspace":
        dist = folded_subspace_distance
    else:
        raise InvalidParams(f"folded codes support subset/subspace, not {metric!r}")
    return pairwise_min_report(fc.codewords, dist, metric, force=force)


def _span_symbols(basis_rows, length: int, ctx: FieldCtx):
    """Basis rows then cyclic pairwise sums b_1 + b_j, all inside the span."""
    rows = [tuple(r) for r in basis_rows]
    k = len(rows)
    symbols = list(rows)
    j = 1
    while len(symbols) < length:
        if k == 1:
            symbols.append(rows[0])
        else:
            symbols.append(ctx.add(rows[0], rows[1 + (j - 1) % (k - 1)]))
            j += 1
    return tuple(symbols[:length])


def span_code(sc: SubspaceCode, l: int, field_ctx: FieldCtx | None = None) -> VectorCode:
    """One length-l spanning word per member subspace, over F_{q^ambient}."""
    ctx = field_ctx if field_ctx is not None else FieldCtx(sc.q, sc.ambient)
    if ctx.q != sc.q or ctx.n != sc.ambient:
        raise InvalidParams("field context does not match the ambient space")
    max_dim = max((s.dim for s in sc.members), default=0)
    if l < max_dim:
        raise LengthTooShort(f"length {l} cannot span dimension {max_dim}")
    words = [Word(ctx, _span_symbols(s.basis.rows, l, ctx)) for s in sc.members]
    return VectorCode(ctx, l, words,
                      provenance={"construction": "span_code", "length": l,
                                  "padding": "b1+bj cycle",
                                  "source": sc.provenance or None,
                                  "source_distance": sc.declared_distance,
                                  "modulus": list(ctx.modulus)})


def partial_span_code(sc: SubspaceCode, l: int,
                      field_ctx: FieldCtx | None = None) -> VectorCode:
    """First l independent basis vectors per member; needs t+1 <= l <= k."""
    if sc.constant_dim is None or sc.declared_distance is None:
        raise InvalidParams("partial span code needs constant dimension and a declared distance")
    k = sc.constant_dim
    d = sc.declared_distance
    if d % 2:
        raise InvalidParams("constant-dimension distance must be even")
    t = k - d // 2
    if not t + 1 <= l <= k:
        raise LengthOutOfRange(f"need {t + 1} <= l <= {k}, got {l}")
    ctx = field_ctx if field_ctx is not None else FieldCtx(sc.q, sc.ambient)
    if ctx.q != sc.q or ctx.n != sc.ambient:
        raise InvalidParams("field context does not match the ambient space")
    words = [Word(ctx, tuple(tuple(r) for r in s.basis.rows[:l])) for s in sc.members]
    return VectorCode(ctx, l, words,
                      provenance={"construction": "partial_span_code", "length": l,
                                  "source": sc.provenance or None,
                                  "guaranteed_distance": 2 * (l - t),
                                  "modulus": list(ctx.modulus)})


def all_vectors_code(sc: SubspaceCode, l: int,
                     field_ctx: FieldCtx | None = None) -> VectorCode:
    """First l vectors of each member, nonzero-lexicographic order, zero last."""
    if sc.constant_dim is None or sc.declared_distance is None:
        raise InvalidParams("all-vectors code needs constant dimension and a declared distance")
    k = sc.constant_dim
    d = sc.declared_distance
    if d % 2:
        raise InvalidParams("constant-dimension distance must be even")
    q = sc.q
    low = q ** (k - d // 2)
    if not low < l <= q ** k:
        raise LengthOutOfRange(f"need {low} < l <= {q ** k}, got {l}")
    if q ** k > _VECTOR_GUARD:
        raise EnumerationTooLarge("member subspaces too large to list")
    ctx = field_ctx if field_ctx is not None else FieldCtx(sc.q, sc.ambient)
    if ctx.q != sc.q or ctx.n != sc.ambient:
        raise InvalidParams("field context does not match the ambient space")
    words = []
    for s in sc.members:
        ordered = sorted(s.vectors())
        ordered = ordered[1:] + ordered[:1]  # zero sorts first; move it last
        words.append(Word(ctx, tuple(ordered[:l])))
    return VectorCode(ctx, l, words,
                      provenance={"construction": "all_vectors_code", "length": l,
                                  "symbol_order": "nonzero lexicographic, zero last",
                                  "source": sc.provenance or None,
                                  "guaranteed_distance": 2 * (l - low),
                                  "modulus": list(ctx.modulus)})


def singer_difference_set(ctx: FieldCtx) -> DifferenceSet:
    """The trace-zero hyperplane of F_{2^n} as a verified difference set."""
    if ctx.q != 2:
        raise InvalidParams("the Singer construction here is binary")
    if ctx.n < 3:
        raise ParameterTooSmall("need n >= 3")
    members = [x for x in ctx.elements() if x != ctx.zero and ctx.trace(x) == 0]
    v = ctx.order - 1
    k = 2 ** (ctx.n - 1) - 1
    lam = 2 ** (ctx.n - 2) - 1
    if len(members) != k:
        raise PropertyViolation(f"trace-zero set has size {len(members)}, expected {k}")
    mset = set(members)
    for i in range(1, ctx.order):
        y = ctx.element_at(i)
        if y == ctx.one:
            continue
        hits = sum(1 for d in members if ctx.mul(y, d) in mset)
        if hits != lam:
            raise PropertyViolation(f"|yD ∩ D| = {hits} != {lam} for y = {y}")
    return DifferenceSet(ctx, tuple(members), v, k, lam)


def m_of_d(ctx: FieldCtx, members) -> int:
    """max |yD ∩ D| over nonzero y != 1 (the identity would trivially give |D|)."""
    members = list(members)
    if not members:
        raise EmptySet("m(D) of an empty set")
    if ctx.zero in members:
        raise InvalidParams("D must consist of nonzero elements")
    mset = set(members)
    best = 0
    for i in range(1, ctx.order):
        y = ctx.element_at(i)
        if y == ctx.one:
            continue
        hits = sum(1 for d in members if ctx.mul(y, d) in mset)
        if hits > best:
            best = hits
    return best


def evaluation_folded_code(ctx: FieldCtx, points) -> FoldedCode:
    """One codeword (w x_1, ..., w x_D) per nonzero w; blocks of one symbol.

    The identification of linear functionals with field elements makes every
    codeword a scalar translate of the point tuple, so pairwise block-set
    distances reduce to translation overlaps of the point set.
    """
    points = [ctx.element(p) for p in points]
    if not points:
        raise EmptySet("the evaluation point set is empty")
    if ctx.zero in points or len(set(points)) != len(points):
        raise InvalidParams("points must be distinct and nonzero")
    seen = {}
    for i in range(1, ctx.order):
        w = ctx.element_at(i)
        blocks = tuple((ctx.mul(w, x),) for x in points)
        seen.setdefault(blocks, FoldedWord(ctx, 1, blocks))
    return FoldedCode(ctx, 1, tuple(seen.values()),
                      provenance={"construction": "evaluation_folded",
                                  "points": len(points),
                                  "modulus": list(ctx.modulus)})


def folded_code_from_vector_code(c: VectorCode, s: int) -> FoldedCode:
    """Fold every codeword with block length s; cardinality is preserved."""
    if s < 1:
        raise InvalidParams("fold parameter must be >= 1")
    words = tuple(fold(w, s) for w in c.codewords)
    prov = {"construction": "folded_vector_code", "block_len": s,
            "source": c.provenance or None}
    if c.length % s:
        prov["padding"] = "zero"
    return FoldedCode(c.ctx, s, words, prov)
