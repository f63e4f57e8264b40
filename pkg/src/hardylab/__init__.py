"""hardylab: spectral numerics for sub-Hardy Hilbert spaces.

A coefficient-space laboratory for boundary functions on the unit
circle: Riesz projections, Pythagorean mates and factorizations,
Toeplitz/Hankel truncations, the mate equation, multiplier
certification and smoothness-class detectors, plus a scenario runner
(`hardylab` on the command line) that exercises the characterization
theorems at desk scale.
"""

from .series import (BoundaryGrid, DiskGrid, ExpRational, FourierSeries,
                     GridTooSmallError, RationalFunction, analyze,
                     conj_series, evaluate, multiply, project_minus,
                     project_plus, synthesize)
from .metrics import (duality_pairing, garsia_bmoa_norm, hp_quasinorm,
                      privalov_distance)
from .factorization import (BlaschkeSpec, ExtremePointError,
                            IllConditionedError, InnerSpecError,
                            PythagoreanPair, StabilityTable,
                            non_extremality_margin, outer_from_log_modulus,
                            outer_power, pair_from_outer,
                            pythagorean_factorize, pythagorean_mate,
                            stability_experiment)

__version__ = "0.1.0"
