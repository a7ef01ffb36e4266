"""Size caps and the numba switch."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CapExceeded

#: set VARLAT_DISABLE_NUMBA=1 to force the pure-numpy kernels
DISABLE_NUMBA = os.environ.get("VARLAT_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}


@dataclass(frozen=True)
class Caps:
    max_letters: int = 8
    max_p: int = 6
    max_carrier: int = 10**6
    lattice_cap: int = 512

    def check_quotient(self, p: int, k: int) -> None:
        if k > self.max_letters:
            raise CapExceeded(f"{k} letters exceeds max_letters={self.max_letters}")
        if p > self.max_p:
            raise CapExceeded(f"nil exponent {p} exceeds max_p={self.max_p}")
        if p**k > self.max_carrier:
            raise CapExceeded(f"carrier size {p}^{k} exceeds max_carrier={self.max_carrier}")


DEFAULT_CAPS = Caps()
