"""
Inside the engine: candidates, cases and the drift counter
===========================================================

Each iteration forces two more erased points into the running locator.
The trace shows which update rule fired and how the degree moved.
"""

# %%
from rsgmd import ChannelModel, parse_code_spec
from rsgmd.cli import trace_frame

params = parse_code_spec("rs(15,7)@gf(2^4):0x13")
model = ChannelModel(p=0.3, seed=2024)

# %% frame 1 only takes regular steps: degree grows by one each time
print(trace_frame(params, model, 1))

# %% frame 2 starts with a degenerate step (delta1 already vanishes on the
# pair); dd goes to -1 and a later step compensates
print(trace_frame(params, model, 2))

# %% with an even minimum distance the seed can use a partial next quotient,
# which sometimes yields an extra candidate
print(trace_frame(parse_code_spec("rs(15,8)@gf(2^4):0x13"), model, 2))
