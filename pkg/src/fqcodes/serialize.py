"""Canonical JSON interchange for every code object, plus CSV projections.

JSON is the single source of truth on disk; CSV is only a projection for
tabular reports.  Writing is canonical (sorted keys, two-space indent,
trailing newline) and atomic (temp file + rename), so identical runs
produce byte-identical files.  Integers beyond the 53-bit float-safe range
are emitted as decimal strings; readers accept either form.  Subspace
bases are re-validated as RREF on read, and any structural problem
surfaces as ParseError.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction

from .bounds import BoundReport
from .channel import TrialSummary
from .constructions import SubspaceCode
from .derived import DifferenceSet, FoldedCode
from .errors import FqcodesError, ParseError
from .gf import FieldCtx
from .linalg import FqMatrix, Subspace
from .metrics import FoldedWord, MetricReport, VectorCode, Word
from .rankmetric import LinearizedPoly, RankCode, RankDistribution

_SAFE_INT = 1 << 53


def _encode_ints(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _SAFE_INT else obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {k: _encode_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode_ints(v) for v in obj]
    return obj


def dumps_canonical(obj) -> str:
    return json.dumps(_encode_ints(obj), sort_keys=True, indent=2) + "\n"


def as_int(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"expected an integer, got {v!r}")
    try:
        return int(v)
    except ValueError as exc:
        raise ParseError(f"bad integer literal {v!r}") from exc


def atomic_write_text(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-fqcodes-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def sha256_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


# -- field ---------------------------------------------------------------

def field_to_obj(ctx: FieldCtx) -> dict:
    return {"q": ctx.q, "n": ctx.n, "modulus": list(ctx.modulus)}


def field_from_obj(d) -> FieldCtx:
    try:
        return FieldCtx(as_int(d["q"]), as_int(d["n"]),
                        [as_int(c) for c in d["modulus"]])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed field object: {exc}") from exc
    except FqcodesError as exc:
        raise ParseError(f"invalid field object: {exc}") from exc


# -- subspaces -------------------------------------------------------------

def subspace_to_obj(s: Subspace) -> dict:
    return {"ambient": s.ambient, "q": s.q, "basis": [list(r) for r in s.basis.rows]}


def subspace_from_obj(d) -> Subspace:
    try:
        q = as_int(d["q"])
        ambient = as_int(d["ambient"])
        rows = tuple(tuple(as_int(e) for e in r) for r in d["basis"])
        return Subspace(q, ambient, FqMatrix(q, rows, ambient))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed subspace object: {exc}") from exc
    except FqcodesError as exc:
        raise ParseError(f"invalid subspace basis: {exc}") from exc


# -- vector codes ----------------------------------------------------------

def _word_to_lists(w: Word):
    return [list(s) for s in w.symbols]


def vector_code_to_obj(c: VectorCode) -> dict:
    obj = {
        "kind": "vector_code",
        "field": field_to_obj(c.ctx),
        "length": c.length,
        "codewords": [_word_to_lists(w) for w in c.codewords],
        "generator": ([_word_to_lists(w) for w in c.generator]
                      if c.generator is not None else None),
        "provenance": c.provenance or None,
    }
    return obj


def vector_code_from_obj(d) -> VectorCode:
    try:
        ctx = field_from_obj(d["field"])
        length = as_int(d["length"])
        codewords = [Word(ctx, tuple(ctx.element(s) for s in w))
                     for w in d["codewords"]]
        generator = d.get("generator")
        gen_words = None
        if generator is not None:
            gen_words = [Word(ctx, tuple(ctx.element(s) for s in w))
                         for w in generator]
        return VectorCode(ctx, length, codewords, generator=gen_words,
                          provenance=d.get("provenance"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed vector code: {exc}") from exc
    except FqcodesError as exc:
        raise ParseError(f"invalid vector code: {exc}") from exc


# -- rank codes --------------------------------------------------------------

def rank_code_to_obj(c: RankCode) -> dict:
    return {
        "kind": "rank_code",
        "field": field_to_obj(c.ctx),
        "src_field": field_to_obj(c.src) if c.src is not None else None,
        "t": c.t,
        "declared_rank_distance": c.declared_rank_distance,
        "members": [[list(a) for a in p.coeffs] for p in c.members],
        "provenance": c.provenance or None,
    }


def rank_code_from_obj(d) -> RankCode:
    try:
        ctx = field_from_obj(d["field"])
        src = field_from_obj(d["src_field"]) if d.get("src_field") else None
        members = [LinearizedPoly(ctx, tuple(ctx.element(a) for a in coeffs), src)
                   for coeffs in d["members"]]
        declared = d.get("declared_rank_distance")
        return RankCode(ctx, members, as_int(d["t"]), src=src,
                        declared_rank_distance=as_int(declared) if declared is not None else None,
                        provenance=d.get("provenance"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed rank code: {exc}") from exc
    except FqcodesError as exc:
        raise ParseError(f"invalid rank code: {exc}") from exc


# -- subspace codes ----------------------------------------------------------

def subspace_code_to_obj(sc: SubspaceCode) -> dict:
    return {
        "kind": "subspace_code",
        "q": sc.q,
        "ambient": sc.ambient,
        "constant_dim": sc.constant_dim,
        "declared_distance": sc.declared_distance,
        "subspaces": [{"basis": [list(r) for r in s.basis.rows]} for s in sc.members],
        "provenance": sc.provenance or None,
    }


def subspace_code_from_obj(d) -> SubspaceCode:
    try:
        q = as_int(d["q"])
        ambient = as_int(d["ambient"])
        members = []
        for entry in d["subspaces"]:
            rows = tuple(tuple(as_int(e) for e in r) for r in entry["basis"])
            members.append(Subspace(q, ambient, FqMatrix(q, rows, ambient)))
        cdim = d.get("constant_dim")
        dist = d.get("declared_distance")
        return SubspaceCode(q, ambient, members,
                            constant_dim=as_int(cdim) if cdim is not None else None,
                            declared_distance=as_int(dist) if dist is not None else None,
                            provenance=d.get("provenance"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed subspace code: {exc}") from exc
    except FqcodesError as exc:
        raise ParseError(f"invalid subspace code: {exc}") from exc


# -- folded codes -------------------------------------------------------------

def folded_code_to_obj(fc: FoldedCode) -> dict:
    return {
        "kind": "folded_code",
        "field": field_to_obj(fc.ctx),
        "block_len": fc.block_len,
        "codewords": [[[list(s) for s in blk] for blk in w.blocks]
                      for w in fc.codewords],
        "provenance": fc.provenance or None,
    }


def folded_code_from_obj(d) -> FoldedCode:
    try:
        ctx = field_from_obj(d["field"])
        block_len = as_int(d["block_len"])
        words = []
        for w in d["codewords"]:
            blocks = tuple(tuple(ctx.element(s) for s in blk) for blk in w)
            words.append(FoldedWord(ctx, block_len, blocks))
        return FoldedCode(ctx, block_len, tuple(words), d.get("provenance"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed folded code: {exc}") from exc
    except FqcodesError as exc:
        raise ParseError(f"invalid folded code: {exc}") from exc


# -- difference sets -----------------------------------------------------------

def difference_set_to_obj(ds: DifferenceSet) -> dict:
    return {
        "kind": "difference_set",
        "field": field_to_obj(ds.ctx),
        "members": [list(m) for m in ds.members],
        "v": ds.v,
        "k": ds.k,
        "lambda": ds.lam,
    }


def difference_set_from_obj(d) -> DifferenceSet:
    try:
        ctx = field_from_obj(d["field"])
        members = tuple(ctx.element(m) for m in d["members"])
        return DifferenceSet(ctx, members, as_int(d["v"]), as_int(d["k"]),
                             as_int(d["lambda"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed difference set: {exc}") from exc
    except FqcodesError as exc:
        raise ParseError(f"invalid difference set: {exc}") from exc


# -- reports ---------------------------------------------------------------------

def _witness_to_obj(item):
    if isinstance(item, Word):
        return {"word": _word_to_lists(item)}
    if isinstance(item, FoldedWord):
        return {"blocks": [[list(s) for s in blk] for blk in item.blocks]}
    if isinstance(item, Subspace):
        return {"basis": [list(r) for r in item.basis.rows]}
    return {"value": repr(item)}


def metric_report_to_obj(r: MetricReport) -> dict:
    return {
        "kind": "metric_report",
        "metric": r.metric,
        "minimum": r.minimum,
        "witness_indices": list(r.witness_indices),
        "witness": [_witness_to_obj(w) for w in r.witness],
        "pairs": r.pairs,
        "notes": r.notes,
    }


def bound_report_to_obj(r: BoundReport) -> dict:
    return {
        "kind": "bound_report",
        "bound": r.bound,
        "parameters": r.parameters,
        "value": r.value,
        "satisfied": r.satisfied,
    }


def bounds_csv(reports) -> str:
    lines = ["bound,value,satisfied"]
    for r in reports:
        sat = "" if r.satisfied is None else str(r.satisfied).lower()
        lines.append(f"{r.bound},{r.value},{sat}")
    return "\n".join(lines) + "\n"


def rank_distribution_to_obj(dist: RankDistribution) -> dict:
    return {"kind": "rank_distribution", "counts": list(dist.counts)}


def rank_distribution_csv(dist: RankDistribution) -> str:
    return "rank,count\n" + "\n".join(dist.csv_rows()) + "\n"


def trial_summary_to_obj(s: TrialSummary) -> dict:
    return {
        "kind": "trial_summary",
        "trials": s.trials,
        "successes": s.successes,
        "wrong": s.wrong,
        "ambiguous": s.ambiguous,
        "success_rate": s.success_rate,
        "capability": s.capability,
        "within_guarantee": s.within_guarantee,
        "insertions": s.insertions,
        "deletions": s.deletions,
        "seed": s.seed,
        "prng": s.prng,
    }


_LOADERS = {
    "vector_code": vector_code_from_obj,
    "rank_code": rank_code_from_obj,
    "subspace_code": subspace_code_from_obj,
    "folded_code": folded_code_from_obj,
    "difference_set": difference_set_from_obj,
}


def object_to_obj(obj) -> dict:
    if isinstance(obj, VectorCode):
        return vector_code_to_obj(obj)
    if isinstance(obj, RankCode):
        return rank_code_to_obj(obj)
    if isinstance(obj, SubspaceCode):
        return subspace_code_to_obj(obj)
    if isinstance(obj, FoldedCode):
        return folded_code_to_obj(obj)
    if isinstance(obj, DifferenceSet):
        return difference_set_to_obj(obj)
    raise ParseError(f"cannot serialize {type(obj).__name__}")


def load_obj(d):
    try:
        kind = d["kind"]
    except (KeyError, TypeError) as exc:
        raise ParseError("file has no 'kind' discriminator") from exc
    loader = _LOADERS.get(kind)
    if loader is None:
        raise ParseError(f"unknown kind {kind!r}")
    return loader(d)


def load_file(path: str):
    try:
        with open(path) as fh:
            d = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    return load_obj(d)


def save_file(path: str, obj) -> None:
    atomic_write_text(path, dumps_canonical(object_to_obj(obj)))
