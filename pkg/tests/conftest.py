import numpy as np
import pytest
from hypothesis import settings

from rsgmd import build_schedule, encode, parse_code_spec

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def rs157():
    return parse_code_spec("rs(15,7)@gf(2^4):0x13")


@pytest.fixture(scope="session")
def rs158():
    return parse_code_spec("rs(15,8)@gf(2^4):0x13")


@pytest.fixture(scope="session")
def rs73():
    return parse_code_spec("rs(7,3)@gf(2^3):0xb")


def error_word(params, positions, rng):
    e = np.zeros(params.n, dtype=np.int64)
    e[list(positions)] = rng.integers(1, params.field.q, len(positions))
    return e


def corrupted(params, rng, t):
    """(codeword, received, error positions) with exactly ``t`` errors."""
    c = encode(rng.integers(0, params.field.q, params.k), params)
    pos = rng.choice(params.n, t, replace=False)
    return c, c ^ error_word(params, pos, rng), frozenset(int(i) for i in pos)


def soft_frame(params, rng, t):
    """Corrupted word plus reliabilities that mostly rank errors lowest."""
    c, r, E = corrupted(params, rng, t)
    w = rng.uniform(0.5, 1.0, params.n)
    idx = sorted(E)
    w[idx] = rng.uniform(0.0, 0.8, len(idx))
    return c, r, w, E


def guaranteed_trials(params, schedule, E):
    """Trials j whose residual errors satisfy 2 t_j + 2 j < d."""
    m = len(schedule.pairs)
    return [j for j in range(m + 1) if 2 * len(E - schedule.erased(j)) + 2 * j < params.d]


def guarantee_frame(params, rng, max_tries=1000):
    """Soft frame beyond the unique-decoding radius with some guaranteed trial."""
    for _ in range(max_tries):
        t = int(rng.integers(params.t_max + 1, params.d))
        c, r, w, E = soft_frame(params, rng, t)
        sch = build_schedule(w, params)
        js = guaranteed_trials(params, sch, E)
        if js:
            return c, r, w, E, sch, js
    raise RuntimeError("no guarantee frame found")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(verdicts, key=int):
        ok, text, log = verdicts[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {text}")
        for line in log[:20]:
            terminalreporter.write_line(f"    {line}")
        if len(log) > 20:
            terminalreporter.write_line(f"    ... {len(log) - 20} more")
