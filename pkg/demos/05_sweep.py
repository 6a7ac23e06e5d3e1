# %% [markdown]
# # A resumable verification sweep
#
# `nakayama-cy verify` runs every cross-check at each (n, t, d) point. It appends one
# JSON line per point to a cache, so a second run finds everything already done.
# Here we drive it from Python into a throwaway cache file.

# %%
import json
import tempfile
from pathlib import Path

from nakayama_cy.cli import main

cache = Path(tempfile.mkdtemp()) / "cy-cache.jsonl"
code = main(["verify", "--n-max", "4", "--t-max", "4", "--cache", str(cache)])
print("exit code", code)

# %% [markdown]
# One cache line carries the shift order, the category-level answer, and each check.

# %%
lines = [json.loads(s) for s in cache.read_text().splitlines()]
line = next(r for r in lines if (r["n"], r["t"], r["d"]) == (3, 4, 0))
print(json.dumps({k: line[k] for k in ("n", "t", "d", "o_shift", "cydim_category", "oracle_equal", "serre_duality")}))

# %% [markdown]
# A rerun reads the cache and does no new work.

# %%
code = main(["verify", "--n-max", "4", "--t-max", "4", "--cache", str(cache)])
print("exit code", code)
