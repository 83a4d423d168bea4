"""AIR-matrix index codes for single-unicast index coding with symmetric
neighboring interference.

K receivers each want one message and are blind to the D messages after it
and the U = gcd(K, D+1) - 1 messages before it (cyclically).  The K x (D+1)
AIR matrix gives a linear code of length D+1 that serves every receiver.
"""

__version__ = "0.1.0"

from .chain import (
    Interval,
    IntervalLayout,
    LambdaChain,
    ProblemParams,
    compute_chain,
    derive_params,
    gcd_of,
    interval_layout,
)
from .codec import DecodingPlan, ReceiverPlan, build_plan, decode, decode_all, encode
from .distances import (
    DistanceProfile,
    distance_profile,
    down_distance,
    down_distance_scan,
    right_distance,
    right_distance_scan,
    up_distance,
    up_distance_scan,
)
from .errors import (
    AirIndexError,
    DecodingError,
    IndexRangeError,
    ParameterError,
    PreconditionError,
    StructuralError,
)
from .field import GF2, PrimeField
from .matrix import AirMatrix, SubmatrixRef, build_air, column_weight, locate, stacked_identity
from .model import InstanceModel, interference_set, side_information_set
from .verify import VerificationReport, decodable_oracle, sweep, verify_instance

__all__ = [name for name in dir() if not name.startswith("_")]
