import csv
import io
import json
from pathlib import Path

import pytest

from rsgmd import ChannelModel, parse_code_spec
from rsgmd.cli import (
    FER_COLUMNS,
    ConfigError,
    fit_slope,
    load_channel,
    main,
    run_scaling,
    trace_frame,
)

GOLDEN = Path(__file__).parent / "golden"


def rows(text):
    lines = text.splitlines()
    assert lines[0].startswith("# rsgmd ")
    return list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))


def write_channel(tmp_path, cfg):
    path = tmp_path / "chan.json"
    path.write_text(json.dumps(cfg) if not isinstance(cfg, str) else cfg)
    return str(path)


def test_fer_output_deterministic(tmp_path, capsys):
    chan = write_channel(tmp_path, {"p": [0.1, 0.2], "seed": 5})
    argv = ["--channel", chan, "--frames", "40", "--decoders", "bmd,gmd-eea-vec"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    got = rows(first)
    assert [r["decoder"] for r in got] == ["bmd", "gmd-eea-vec"] * 2
    assert list(got[0]) == list(FER_COLUMNS)


def test_seed_flag_changes_stream(tmp_path, capsys):
    chan = write_channel(tmp_path, {"p": 0.2, "seed": 5})
    main(["--channel", chan, "--frames", "40", "--decoders", "bmd"])
    a = capsys.readouterr().out
    main(["--channel", chan, "--frames", "40", "--decoders", "bmd", "--seed", "6"])
    assert capsys.readouterr().out != a


def test_p_zero_has_no_frame_errors(tmp_path, capsys):
    chan = write_channel(tmp_path, {"p": 0.0})
    main(["--channel", chan, "--frames", "20", "--decoders", ",".join(["bmd", "gmd-eea", "gmd-eea-vec", "trial-gmd"])])
    for row in rows(capsys.readouterr().out):
        assert row["frame_errors"] == "0" and row["fer"] == "0.000000"


def test_polynomial_and_vector_rows_match(tmp_path, capsys):
    chan = write_channel(tmp_path, {"p": 0.2})
    main(["--channel", chan, "--frames", "60", "--decoders", "gmd-eea,gmd-eea-vec"])
    a, b = rows(capsys.readouterr().out)
    for key in ("p", "frames", "frame_errors", "symbol_errors", "fer", "mean_list_len"):
        assert a[key] == b[key]


def test_out_file(tmp_path):
    out = tmp_path / "r.csv"
    main(["--frames", "5", "--decoders", "bmd", "--out", str(out)])
    assert rows(out.read_text())[0]["frames"] == "5"


def test_malformed_json_is_usage_error(tmp_path, capsys):
    chan = write_channel(tmp_path, '{"p": 0.1,\n  "seed": }')
    with pytest.raises(SystemExit) as exc:
        main(["--channel", chan])
    assert exc.value.code == 2
    assert "chan.json:2:" in capsys.readouterr().err


@pytest.mark.parametrize(
    "cfg, needle",
    [
        ({"p": "high"}, "'p'"),
        ({"p": []}, "'p'"),
        ({"p": 1.5}, "outside"),
        ({"p": 0.1, "rel_error": [0.1]}, "rel_error"),
        ({"p": 0.1, "seed": "x"}, "seed"),
        ({"p": 0.1, "noise": 3}, "noise"),
        ([1, 2], "object"),
    ],
)
def test_bad_channel_fields(tmp_path, cfg, needle):
    with pytest.raises(ConfigError, match=needle):
        load_channel(write_channel(tmp_path, cfg))


def test_bad_flags(capsys):
    for argv in (["--decoders", "bmd,viterbi"], ["--code", "rs(15,20)@gf(2^4)"], ["--frames", "-1"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_missing_channel_file(tmp_path):
    with pytest.raises(ConfigError):
        load_channel(str(tmp_path / "nope.json"))


def test_scaling_small(capsys):
    got = run_scaling(ChannelModel(p=0.25), 3, ["bmd", "gmd-eea-vec"], sizes=(15, 31, 63))
    assert [(r["decoder"], r["n"]) for r in got][:3] == [("bmd", 15), ("bmd", 31), ("bmd", 63)]
    assert len({r["slope"] for r in got if r["decoder"] == "bmd"}) == 1


def test_fit_slope_exact():
    assert fit_slope([10, 100, 1000], [3, 300, 30000]) == pytest.approx(2.0)


CASES = json.loads((GOLDEN / "cases.json").read_text())


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_traces(name):
    case = CASES[name]
    model = ChannelModel(p=case["p"], seed=case["seed"])
    text = trace_frame(parse_code_spec(case["code"]), model, case["frame"])
    assert text == (GOLDEN / f"{name}.txt").read_text()


@pytest.mark.parametrize("name", sorted(CASES))
def test_trace_flag_matches_golden(name, tmp_path, capsys):
    case = CASES[name]
    chan = write_channel(tmp_path, {"p": case["p"], "seed": case["seed"]})
    main(["--code", case["code"], "--channel", chan, "--trace", str(case["frame"])])
    assert capsys.readouterr().out == (GOLDEN / f"{name}.txt").read_text()


def test_golden_kinds_hold():
    regular = (GOLDEN / "regular_only.txt").read_text()
    cases = [l for l in regular.splitlines() if l.startswith("j=")]
    assert cases and all("case=REGULAR" in l for l in cases)
    fail1 = (GOLDEN / "fail1_compensation.txt").read_text()
    assert "case=FAIL1" in fail1 and "case=COMP_MINUS" in fail1
    qhat = (GOLDEN / "qhat_present.txt").read_text()
    assert "qhat=-" not in qhat and "origin=EXTRA" in qhat
