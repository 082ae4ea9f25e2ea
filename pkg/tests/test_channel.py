from dataclasses import replace

import numpy as np
import pytest

from rsgmd import ChannelModel, build_schedule, encode, parse_code_spec, simulate_frame, transmit

P = parse_code_spec("rs(15,7)@gf(2^4):0x13")


def codeword(seed=0):
    return encode(np.random.default_rng(seed).integers(0, 16, 7), P)


def test_p_zero_is_noiseless():
    c = codeword()
    rec = transmit(c, ChannelModel(p=0.0), 3, 16)
    assert (rec.received == c).all() and not rec.error_support


def test_p_one_corrupts_everything():
    c = codeword()
    rec = transmit(c, ChannelModel(p=1.0), 3, 16)
    assert (rec.received != c).all() and rec.error_support == frozenset(range(15))


def test_mean_error_count_binomial():
    model = ChannelModel(p=0.1, seed=9)
    c = codeword()
    frames = 10_000
    counts = np.array([len(transmit(c, model, f, 16).error_support) for f in range(frames)])
    sigma = np.sqrt(15 * 0.1 * 0.9 / frames)
    assert abs(counts.mean() - 1.5) <= 3 * sigma


def test_reliabilities_follow_their_intervals():
    model = ChannelModel(p=0.5, rel_correct=(0.6, 0.9), rel_error=(0.1, 0.2))
    rec = transmit(codeword(), model, 0, 16)
    bad = sorted(rec.error_support)
    good = sorted(set(range(15)) - rec.error_support)
    assert ((rec.reliabilities[bad] >= 0.1) & (rec.reliabilities[bad] <= 0.2)).all()
    assert ((rec.reliabilities[good] >= 0.6) & (rec.reliabilities[good] <= 0.9)).all()


def test_reproducible_per_frame():
    model = ChannelModel(p=0.2, seed=123)
    a, b = simulate_frame(P, model, 17), simulate_frame(P, model, 17)
    assert (a.received == b.received).all() and (a.reliabilities == b.reliabilities).all()
    c = simulate_frame(P, model, 18)
    assert not (a.reliabilities == c.reliabilities).all()
    d = simulate_frame(P, replace(model, seed=124), 17)
    assert not (a.reliabilities == d.reliabilities).all()


def test_bad_models():
    with pytest.raises(ValueError):
        ChannelModel(p=1.5)
    with pytest.raises(ValueError):
        ChannelModel(p=0.1, rel_error=(0.5, 0.1))
    with pytest.raises(ValueError):
        ChannelModel.from_dict({"p": 0.1, "snr": 3})


def test_schedule_length_d9():
    sch = build_schedule(np.random.default_rng(0).uniform(size=15), P)
    assert len(sch.pairs) == 4 and len(sch.erased(4)) == 8


def test_schedule_ties_by_index():
    sch = build_schedule(np.ones(15), P)
    assert sch.pairs == ((0, 1), (2, 3), (4, 5), (6, 7))


def test_schedule_increasing_weights():
    sch = build_schedule(np.arange(15, dtype=float), P)
    assert sch.pairs[0] == (0, 1)


def test_schedule_nested_and_least_reliable_first():
    rng = np.random.default_rng(1)
    w = rng.uniform(size=15)
    sch = build_schedule(w, P)
    for j in range(len(sch.pairs)):
        assert sch.erased(j) < sch.erased(j + 1)
        assert len(sch.erased(j)) == 2 * j
    assert max(w[list(sch.erased(4))]) <= min(np.delete(w, list(sch.erased(4))))
    with pytest.raises(ValueError):
        build_schedule(w[:5], P)
