"""
Decoding one word, with and without reliabilities
==================================================

A rate-1/2 code of length 15 corrects 4 errors by bounded-distance
decoding.  With 6 errors that decoder gives up, but the soft information
tells us where the errors probably are.
"""

# %%
import numpy as np

from rsgmd import bmd_decode, build_schedule, encode, gmd_decode, parse_code_spec

params = parse_code_spec("rs(15,7)@gf(2^4):0x13")
print(params, "d =", params.d, "t =", params.t_max)

rng = np.random.default_rng(3)
c = encode(rng.integers(0, 16, params.k), params)

# %% six errors; their reliabilities are mostly low
errors = [1, 4, 6, 9, 11, 14]
r = c.copy()
r[errors] ^= rng.integers(1, 16, len(errors))
w = rng.uniform(0.5, 1.0, params.n)
w[errors] = rng.uniform(0.0, 0.6, len(errors))
print("received", r)

# %% hard decoding fails
print("bmd ok:", bmd_decode(r, params).ok)

# %% the erasure schedule: least reliable positions, two at a time
sch = build_schedule(w, params)
print("pairs", sch.pairs)

# %% the merged decoder walks the schedule inside one Euclidean run
res = gmd_decode(r, w, params)
print("gmd ok:", res.ok, "trial", res.trial, "errors", sorted(res.error_support))
print("recovered the sent word:", bool((res.codeword == c).all()))
