"""Command-line simulator: FER sweeps, operation-count scaling and frame traces.

    rsgmd --code "rs(15,7)@gf(2^4):0x13" --channel chan.json --frames 1000 \
          --decoders bmd,gmd-eea --out report.csv
    rsgmd --scaling --frames 200 --out scaling.csv
    rsgmd --code "rs(15,7)@gf(2^4):0x13" --trace 17

The channel file is JSON: ``{"p": 0.1 | [0.05, 0.1], "rel_correct": [lo, hi],
"rel_error": [lo, hi], "seed": 42}``; every field is optional.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace

import numpy as np

from .channel import ChannelModel, build_schedule, simulate_frame
from .codec import CodeParamError, CodeParams, parse_code_spec
from .decoder import bmd_decode, gmd_decode_verbose
from .gf import FieldError, count_ops
from .oracles import trial_gmd_verbose
from .select import root_support

DECODERS = ("bmd", "gmd-eea", "gmd-eea-vec", "trial-gmd")
FER_COLUMNS = ("decoder", "p", "frames", "frame_errors", "symbol_errors", "fer", "mean_list_len", "mean_mults")
SCALING_COLUMNS = ("decoder", "n", "k", "frames", "mean_mults", "slope")
FORMAT_VERSION = 1
SCALING_SIZES = (15, 31, 63, 127, 255)
DEFAULT_CODE = "rs(15,7)@gf(2^4):0x13"


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# configuration

def load_channel(path: str | None) -> tuple[ChannelModel, list[float]]:
    """Channel model (with the first p) and the list of p values to sweep."""
    if path is None:
        return ChannelModel(p=0.1), [0.1]
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from None
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(cfg, dict):
        raise ConfigError(f"{path}: top level must be an object")
    cfg = dict(cfg)
    ps = cfg.pop("p", 0.1)
    ps = ps if isinstance(ps, list) else [ps]
    if not ps or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in ps):
        raise ConfigError(f"{path}: field 'p' must be a number or a non-empty list of numbers")
    for key in ("rel_correct", "rel_error"):
        v = cfg.get(key)
        if v is not None and not (isinstance(v, list) and len(v) == 2):
            raise ConfigError(f"{path}: field '{key}' must be a [lo, hi] pair")
    if "seed" in cfg and not isinstance(cfg["seed"], int):
        raise ConfigError(f"{path}: field 'seed' must be an integer")
    try:
        model = ChannelModel.from_dict({"p": float(ps[0]), **cfg})
        for p in ps:
            replace(model, p=float(p))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return model, [float(p) for p in ps]


def parse_decoders(text: str) -> list[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in names if s not in DECODERS]
    if bad or not names:
        raise ConfigError(f"unknown decoder(s) {bad}; choose from {', '.join(DECODERS)}")
    return names


# ---------------------------------------------------------------------------
# decoding adapters: (decoded word or None, candidate-list length)

def _decode(name: str, rec, params: CodeParams, use_qhat: bool = True):
    r, w = rec.received, rec.reliabilities
    if name == "bmd":
        res = bmd_decode(r, params, w)
        return res.codeword, 1
    if name in ("gmd-eea", "gmd-eea-vec"):
        res, cands, _ = gmd_decode_verbose(r, w, params, vectors=name == "gmd-eea-vec", use_qhat=use_qhat)
        return res.codeword, 1 if cands is None else len(cands)
    if name == "trial-gmd":
        res, cands = trial_gmd_verbose(r, build_schedule(w, params), w, params)
        return res.codeword, sum(c is not None for c in cands)
    raise ConfigError(f"unknown decoder {name!r}")


def run_fer(params: CodeParams, model: ChannelModel, ps, frames: int, decoders, use_qhat: bool = True) -> list[dict]:
    """Paired simulation: every decoder sees the same frames at each p."""
    rows = []
    for p in ps:
        point = replace(model, p=float(p))
        stats = {name: [0, 0, 0, 0] for name in decoders}  # frame errs, symbol errs, list len, mults
        for frame in range(frames):
            rec = simulate_frame(params, point, frame)
            for name in decoders:
                with count_ops() as ops:
                    word, size = _decode(name, rec, params, use_qhat)
                out = rec.received if word is None else word
                wrong = int(np.count_nonzero(out != rec.codeword))
                s = stats[name]
                s[0] += word is None or wrong > 0
                s[1] += wrong
                s[2] += size
                s[3] += ops.mul
        for name in decoders:
            fe, se, ll, mm = stats[name]
            rows.append({
                "decoder": name,
                "p": f"{p:g}",
                "frames": frames,
                "frame_errors": fe,
                "symbol_errors": se,
                "fer": f"{fe / frames:.6f}" if frames else "nan",
                "mean_list_len": f"{ll / frames:.4f}" if frames else "nan",
                "mean_mults": f"{mm / frames:.1f}" if frames else "nan",
            })
    return rows


def scaling_code(n: int) -> CodeParams:
    m = int(n + 1).bit_length() - 1
    return parse_code_spec(f"rs({n},{n // 2})@gf(2^{m})")


def fit_slope(ns, counts) -> float:
    return float(np.polyfit(np.log(np.asarray(ns, float)), np.log(np.asarray(counts, float)), 1)[0])


def run_scaling(model: ChannelModel, frames: int, decoders, sizes=SCALING_SIZES) -> list[dict]:
    """Mean field multiplications per frame for each decoder and code length."""
    means = {name: [] for name in decoders}
    codes = [scaling_code(n) for n in sizes]
    for params in codes:
        totals = dict.fromkeys(decoders, 0)
        for frame in range(frames):
            rec = simulate_frame(params, model, frame)
            for name in decoders:
                with count_ops() as ops:
                    _decode(name, rec, params)
                totals[name] += ops.mul
        for name in decoders:
            means[name].append(totals[name] / frames)
    rows = []
    for name in decoders:
        slope = fit_slope(sizes, means[name])
        for params, mean in zip(codes, means[name]):
            rows.append({
                "decoder": name, "n": params.n, "k": params.k, "frames": frames,
                "mean_mults": f"{mean:.1f}", "slope": f"{slope:.4f}",
            })
    return rows


def write_csv(rows, columns, kind: str, stream) -> None:
    stream.write(f"# rsgmd {kind} report v{FORMAT_VERSION}: {','.join(columns)}\n")
    writer = csv.DictWriter(stream, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


# ---------------------------------------------------------------------------
# single-frame trace

def _hex(v) -> str:
    return " ".join(f"{int(x):x}" for x in v)


def _positions(s) -> str:
    return ",".join(str(i) for i in sorted(s)) or "-"


def trace_frame(params: CodeParams, model: ChannelModel, frame: int, use_qhat: bool = True) -> str:
    """Human-readable, byte-stable dump of one decoding run."""
    rec = simulate_frame(params, model, frame)
    r, w = rec.received, rec.reliabilities
    out = [
        f"# rsgmd trace v{FORMAT_VERSION}",
        f"code {params.spec}",
        f"frame {frame} seed {model.seed} p {model.p:g} qhat {'on' if use_qhat else 'off'}",
        f"codeword {_hex(rec.codeword)}",
        f"received {_hex(r)}",
        "reliabilities " + " ".join(f"{x:.4f}" for x in w),
        f"channel_errors {_positions(rec.error_support)}",
    ]
    schedule = build_schedule(w, params)
    out.append("schedule " + " ".join(f"{a},{b}" for a, b in schedule.pairs))
    res, cands, info = gmd_decode_verbose(r, w, params, vectors=True, use_qhat=use_qhat)
    if cands is None:
        out.append("syndrome zero")
    else:
        qhat = "-" if info.q_hat is None else info.q_hat.to_text()
        out.append(
            f"transition c_next={info.c_next} qhat={qhat} "
            f"deg1={info.delta1_init.degree} deg2={info.delta2_init.degree}"
        )
        out.extend(cands.trace)
        for idx, cand in enumerate(cands):
            support = root_support(cand, params)
            if support is None:
                tail = "support=INVALID"
            else:
                tail = f"support={_positions(support)} weight={sum(w[i] for i in sorted(support)):.4f}"
            out.append(
                f"candidate {idx} origin={cand.origin.name} trial={cand.trial} "
                f"deg={cand.degree} on_schedule={'yes' if cand.on_schedule else 'no'} {tail}"
            )
    if res.ok:
        correct = bool(np.array_equal(res.codeword, rec.codeword))
        out.append(
            f"selected index={res.index} trial={res.trial} distance={res.weighted_distance:.4f} "
            f"errors={_positions(res.error_support)} status=SUCCESS correct={'yes' if correct else 'no'}"
        )
    else:
        out.append("selected status=FAILURE")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rsgmd", description="Reed-Solomon GMD decoding simulator")
    ap.add_argument("--code", default=DEFAULT_CODE, help="rs(n,k)@gf(2^m):0xPP (default %(default)s)")
    ap.add_argument("--channel", metavar="FILE", help="channel JSON file")
    ap.add_argument("--frames", type=int, default=1000)
    ap.add_argument("--seed", type=int, help="overrides the channel file seed")
    ap.add_argument(
        "--decoders",
        help=f"comma list from {','.join(DECODERS)} (default bmd,gmd-eea-vec; scaling adds trial-gmd)",
    )
    ap.add_argument("--out", metavar="FILE", help="CSV destination (default stdout)")
    ap.add_argument("--trace", type=int, metavar="FRAME", help="dump the decoding trace of one frame")
    ap.add_argument("--scaling", action="store_true", help="operation counts over n = 15..255, rate 1/2")
    ap.add_argument("--no-qhat", action="store_true", help="seed the extension without the partial quotient")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        model, ps = load_channel(args.channel)
        if args.seed is not None:
            model = replace(model, seed=args.seed)
        default = "bmd,gmd-eea-vec,trial-gmd" if args.scaling else "bmd,gmd-eea-vec"
        decoders = parse_decoders(args.decoders or default)
        params = parse_code_spec(args.code)
        if args.frames < 0:
            raise ConfigError("--frames must be non-negative")
    except (ConfigError, CodeParamError, FieldError, ValueError) as exc:
        ap.error(str(exc))

    use_qhat = not args.no_qhat
    if args.trace is not None:
        text = trace_frame(params, model, args.trace, use_qhat)
    else:
        buf = io.StringIO()
        if args.scaling:
            if args.channel is None:
                model = replace(model, p=0.25)
            write_csv(run_scaling(model, args.frames, decoders), SCALING_COLUMNS, "scaling", buf)
        else:
            write_csv(run_fer(params, model, ps, args.frames, decoders, use_qhat), FER_COLUMNS, "fer", buf)
        text = buf.getvalue()

    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
