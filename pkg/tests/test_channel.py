"""Insdel channel determinism, decoding exactness, within-capability trials."""

import random

import pytest

from fqcodes.errors import TooManyDeletions
from fqcodes.gf import FieldCtx
from fqcodes.channel import (
    AMBIGUOUS,
    ChannelSpec,
    apply_channel,
    correction_capability,
    decode_nearest,
    run_trials,
)
from fqcodes.constructions import spread
from fqcodes.derived import all_vectors_code
from fqcodes.metrics import VectorCode, insdel_distance, word

F2 = FieldCtx(2, 1)


def _spread_code():
    return all_vectors_code(spread(2, 2, 4), 3)


def test_identity_channel():
    w = word(F2, [(1,), (0,), (1,)])
    assert apply_channel(w, ChannelSpec(0, 0, 1)).symbols == w.symbols


def test_single_deletion():
    w = word(F2, [(1,), (0,), (1,), (1,)])
    out = apply_channel(w, ChannelSpec(0, 1, 3))
    assert len(out) == 3
    assert insdel_distance(w, out) <= 1


def test_channel_deterministic():
    vc = _spread_code()
    w = vc.codewords[2]
    spec = ChannelSpec(2, 1, 42)
    a = apply_channel(w, spec)
    b = apply_channel(w, spec)
    assert a.symbols == b.symbols


def test_too_many_deletions():
    w = word(F2, [(1,), (0,)])
    with pytest.raises(TooManyDeletions):
        apply_channel(w, ChannelSpec(0, 3, 0))


def test_edit_count_bounds_distance():
    rng = random.Random(8)
    ctx = FieldCtx(2, 2)
    for _ in range(200):
        w = word(ctx, [ctx.element_at(rng.randrange(4)) for _ in range(5)])
        ins, dels = rng.randrange(3), rng.randrange(3)
        out = apply_channel(w, ChannelSpec(ins, dels, rng.randrange(10 ** 6)))
        assert len(out) == 5 - dels + ins
        assert insdel_distance(w, out) <= ins + dels


def test_decode_member_returns_itself():
    vc = _spread_code()
    for cw in vc.codewords:
        assert decode_nearest(vc, cw) is cw


def test_decode_hand_checked_tie():
    a = word(F2, [(0,), (1,)])
    b = word(F2, [(1,), (0,)])
    vc = VectorCode(F2, 2, [a, b])
    received = word(F2, [(0,)])
    assert decode_nearest(vc, received) is AMBIGUOUS


def test_decoder_matches_reversed_scan():
    vc = _spread_code()
    rng = random.Random(5)
    for _ in range(100):
        w = vc.codewords[rng.randrange(len(vc.codewords))]
        received = apply_channel(w, ChannelSpec(1, 2, rng.randrange(10 ** 6)))
        forward = decode_nearest(vc, received)
        dists = [insdel_distance(cw, received) for cw in vc.codewords]
        best = min(dists)
        if dists.count(best) > 1:
            assert forward is AMBIGUOUS
        else:
            assert forward is vc.codewords[dists.index(best)]


def test_capability_values():
    vc = _spread_code()
    assert correction_capability(vc) == 2  # d_insdel = 6
    assert correction_capability(vc, min_insdel=4) == 1
    assert correction_capability(vc, min_insdel=2) == 0


def test_trials_identity_channel():
    vc = _spread_code()
    summary = run_trials(vc, ChannelSpec(0, 0, 9), 50)
    assert summary.success_rate == 1.0
    assert summary.within_guarantee


def test_trials_within_capability_always_succeed():
    vc = _spread_code()
    summary = run_trials(vc, ChannelSpec(0, 2, 1234), 300)
    assert summary.successes == 300
    assert summary.ambiguous == 0
    assert summary.within_guarantee


def test_trials_beyond_capability_reports_failures():
    vc = _spread_code()
    summary = run_trials(vc, ChannelSpec(0, 3, 77), 200)
    assert not summary.within_guarantee
    assert summary.successes + summary.wrong + summary.ambiguous == 200
    lines = summary.transcript_csv().strip().split("\n")
    assert lines[0] == "trial,seed,ins,del,result"
    assert len(lines) == 201


def test_trials_reproducible():
    vc = _spread_code()
    a = run_trials(vc, ChannelSpec(1, 1, 5), 40)
    b = run_trials(vc, ChannelSpec(1, 1, 5), 40)
    assert a.transcript_csv() == b.transcript_csv()


def test_zero_trials():
    vc = _spread_code()
    summary = run_trials(vc, ChannelSpec(0, 1, 0), 0)
    assert summary.trials == 0
    assert summary.transcript_csv() == "trial,seed,ins,del,result\n"
