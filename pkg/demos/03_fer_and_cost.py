"""
Frame error rate and operation counts
=====================================

Same frames for every decoder, then field multiplications against the
code length.  The classical GMD decoder repeats the whole Euclidean run per
trial; the merged one does not.
"""

# %%
from rsgmd import ChannelModel, parse_code_spec
from rsgmd.cli import run_fer, run_scaling

params = parse_code_spec("rs(15,7)@gf(2^4):0x13")
rows = run_fer(params, ChannelModel(p=0.1), [0.05, 0.1, 0.15], 2000, ["bmd", "gmd-eea-vec", "trial-gmd"])
for row in rows:
    print(row["decoder"].ljust(12), row["p"], row["fer"], row["mean_list_len"])

# %% cost growth; a slope near 2 in log-log is quadratic
rows = run_scaling(ChannelModel(p=0.25), 10, ["bmd", "gmd-eea-vec", "trial-gmd"], sizes=(15, 31, 63, 127))
for row in rows:
    print(row["decoder"].ljust(12), row["n"], row["mean_mults"], "slope", row["slope"])

# %% mean multiplications per n^2 for the merged decoder
merged = [(int(r["n"]), float(r["mean_mults"])) for r in rows if r["decoder"] == "gmd-eea-vec"]
print([round(m / n**2, 2) for n, m in merged])
