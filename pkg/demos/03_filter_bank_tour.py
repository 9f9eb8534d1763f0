"""
A tour of the dyadic filter bank
================================

The filter bank samples a smooth low-pass profile and its dyadic band
differences on a periodic grid's frequency bins.  Level 0 keeps |xi| <= 1,
level k keeps roughly 2^{k-1} <= |xi| <= 2^{k+1}, and the multipliers sum
to one on every covered bin, so band-limited functions split exactly into
frequency blocks.
"""

import numpy as np

from besovgamma import (GridFunction, LpSpace, build_filter_bank,
                        grid_lp_norm, lp_block)

bank = build_filter_bank(period=8.0, n=2048, d=1, levels=8)

# the multipliers form a partition of unity on the covered frequencies:
# the residual is exactly zero because the telescoping cancels in floats
print("partition residual:", bank.partition_residual(2.0 ** 8))

# each level's convolution kernel has an L^1 norm of a few units; this is
# the operator norm bound of the block maps on every L^p simultaneously
for k in (0, 1, 4, 8):
    print(f"kernel L1 at level {k}: {bank.kernel_l1(k):.4f}")

# split a random band-limited function and put it back together
rng = np.random.default_rng(11)
raw = GridFunction(8.0, rng.normal(size=(2048, 1)), LpSpace(2, 1))
spec = raw.spectrum()
spec[raw.frequency_radii() > 200.0] = 0.0
f = GridFunction.from_spectrum(spec, 8.0, raw.space)

blocks = [lp_block(f, bank, k) for k in range(bank.levels + 1)]
recon = sum(b.values for b in blocks)
err = np.abs(recon - f.values).max()
print(f"\nreconstruction from {len(blocks)} blocks: max error {err:.3e}")

# the block energies localize: print the l2 norm profile across levels
print("block L2 profile:",
      [f"{grid_lp_norm(b, 2.0):.3f}" for b in blocks])

# blocks two levels apart live on disjoint frequency sets, so applying the
# far multiplier to a block annihilates it
from besovgamma import apply_multiplier

level3 = lp_block(f, bank, 3)
killed = apply_multiplier(level3, bank.multipliers[6])
print("level-6 multiplier on a level-3 block:",
      f"{np.abs(killed.values).max():.3e}")
