"""Lawn constructions and retention probabilities for fixed-angle jumps on
the circle and the sphere: exact rational computation on the circle,
quadrature and Monte Carlo verification on the sphere."""

from .circle_core import ArcSet, RationalAngle, normalize
from .circle_lawns import (
    OptimalRetention,
    OrbitProfile,
    StepDensityLawn,
    ZeroMassLawnError,
    construct_antipodal_even,
    construct_antipodal_irrational,
    construct_antipodal_odd,
    construct_general,
    is_antipodal,
    optimal_antipodal_value,
    orbit_bound,
    orbit_retention,
    retention,
    retention_two,
)
from .diophantine import Approximation, approx_even_odd, convergents
from .oracle import OrbitColouring, direction_sweep_fraction, exhaustive_orbit_max
from .sphere_geom import CapSpec, SpherePoint, angular_distance, beta1, beta_sum, jump
from .sphere_lawns import (
    BrTable,
    CoggedLawn,
    construct_peven,
    construct_podd,
    hemisphere,
    ll_minus_ss,
    membership,
    retention_mc,
)

__version__ = "0.1.0"
