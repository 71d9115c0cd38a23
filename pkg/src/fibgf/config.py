"""Resource caps for the polynomial engine.

``RGF_MAX_MEM_MB`` caps the estimated footprint of any single coefficient
array built by the engine (pure-Python or numpy).  The default is generous
for desk-scale work but stops runaway expansions with a clean error.
"""

from __future__ import annotations

import os

DEFAULT_MAX_MEM_MB = 6144

# Rough per-coefficient cost of a pure-Python dense list of small ints.
PYOBJ_BYTES_PER_COEFF = 32


def max_mem_bytes() -> int:
    raw = os.environ.get("RGF_MAX_MEM_MB", "")
    try:
        mb = int(raw) if raw else DEFAULT_MAX_MEM_MB
    except ValueError:
        mb = DEFAULT_MAX_MEM_MB
    return mb * (1 << 20)
