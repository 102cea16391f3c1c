"""Multi-objective games: Pareto-Nash equilibria and coordination ratios over exact rationals."""
from .approx import *  # noqa: F401,F403
from .equilibria import *  # noqa: F401,F403
from .exceptions import (
    InvalidArgumentError,
    MalformedGameError,
    MOGError,
    PositiveDomainError,
    PotentialInvalidError,
    SizeGuardError,
)
from .games import (
    GraphicalGame,
    NormalFormGame,
    PotentialAnnotation,
    SymmetricGame,
    all_profiles,
    configuration_of,
    configurations,
    payoff,
    profile_from_index,
    profile_index,
    representation_length,
    to_normal_form,
    utilitarian,
)
from .lp import LPResult, solve_lp
from .mixed import *  # noqa: F401,F403
from .mocr import *  # noqa: F401,F403
from .potential import *  # noqa: F401,F403
from .randgames import *  # noqa: F401,F403
from .vectors import *  # noqa: F401,F403

__version__ = "0.1.0"
