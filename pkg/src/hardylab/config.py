"""Shared numeric defaults.

All boundary integrals in the package are taken against arclength
normalized to total mass one, which removes every 2*pi factor from
analysis, synthesis and pairings.  Radial limits are replaced by
evaluation at the largest disk-grid radius.
"""

WORKING_ORDER = 2048
"""Default truncation order for series products and outer expansions."""

GRID_SIZE = 1 << 14
"""Default number of boundary samples (power of two)."""

RADII_COUNT = 14
"""Number of dyadic radii 1 - 2**-j in the default disk grid; the top
radius 1 - 2**-14 stands in for the radial limit r -> 1-."""

EXTREME_MEAN_FLOOR = -50.0
"""Mean of log(1 - |b|^2) below which a symbol is declared extreme."""

LOG_CLAMP_FLOOR = -1.0e6
"""Clamp applied to finite log-integrand samples before quadrature."""

SINGULAR_FRACTION_LIMIT = 0.25
"""Fraction of non-finite log samples beyond which the integral is
declared divergent rather than repaired."""
