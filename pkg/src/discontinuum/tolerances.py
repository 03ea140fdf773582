"""Numeric tolerances shared across the package.

All geometric predicates compare against absolute tolerances; the working
domain is a fixed box of radius 4, and internal surgery happens in a
blown-up frame where features are O(1), so absolute thresholds are safe.
"""

from __future__ import annotations

from dataclasses import dataclass

# Geometric predicate tolerance (point-on-line, side classification, ...).
TAU_GEOM = 1e-9

# Area floor below which a polygon counts as a degenerate sliver.
TAU_AREA = 1e-12

# Function-value agreement tolerance for glue seams.
TAU_VAL = 1e-9

# Convexity slack: across-edge gradient gaps must be >= -TAU_CONV.
TAU_CONV = 1e-9

# Relative overshoot allowed for the Lipschitz extension operator.
TAU_EXT = 1e-6

# A certificate within MARGINAL_FACTOR * tolerance of its threshold is
# reported as "marginal" rather than cleanly certified.
MARGINAL_FACTOR = 10.0

# Vertex dedup grid for mesh gluing.
SNAP = 1e-12

# Default global triangle budget for a pipeline run.
TRIANGLE_BUDGET = 2_000_000

# Minimum feature size guard, as a multiple of TAU_GEOM: constructions
# refuse to emit geometry thinner than this (StageError upstream).
MIN_FEATURE_FACTOR = 100.0


@dataclass(frozen=True)
class Tolerances:
    """Bundle of tolerances carried through a pipeline run."""

    geom: float = TAU_GEOM
    area: float = TAU_AREA
    val: float = TAU_VAL
    conv: float = TAU_CONV
    ext: float = TAU_EXT
    marginal_factor: float = MARGINAL_FACTOR
    snap: float = SNAP

    def as_dict(self) -> dict:
        return {
            "geom": self.geom,
            "area": self.area,
            "val": self.val,
            "conv": self.conv,
            "ext": self.ext,
            "marginal_factor": self.marginal_factor,
            "snap": self.snap,
        }
