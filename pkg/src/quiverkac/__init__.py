"""Exact computation, for finite loop-free quivers, of Kac polynomials,
Kac-Moody root and weight multiplicities, and Betti numbers of Nakajima
quiver varieties, with every quantity reachable along at least two
independent routes that are required to agree."""

from .errors import (
    CapExceededError,
    ConsistencyError,
    DimensionMismatchError,
    InputError,
    LoopError,
)
from .fforacle import DEFAULT_CAP, count_absolutely_indecomposable, count_all_iso_classes
from .kacmoody import (
    RootTable,
    WeightMultTable,
    character_level_one,
    is_real_root,
    peterson,
    weight_mult_framed,
    weight_mult_freudenthal,
)
from .kacpoly import (
    KacPolynomial,
    framed_slice,
    hua_series,
    hua_term,
    kac_polynomial,
    kac_series,
)
from .partitions import (
    enumerate_multipartitions,
    enumerate_partitions,
    partition_pochhammer,
    q_pochhammer,
    tits_statistic,
)
from .qseries import (
    ONE,
    Q,
    ZERO,
    Box,
    RationalFunction,
    TruncatedSeries,
    moebius,
    plethystic_exp,
    plethystic_log,
    series_exp,
    series_log,
)
from .quiver import (
    FRAMING_VERTEX,
    CartanData,
    DimVector,
    Quiver,
    bilinear_form,
    builtin_quiver,
    cartan_matrix,
    frame,
    framed_vector,
    half_dimension,
    tits_form,
)
from .varieties import (
    BettiProfile,
    euler_characteristic,
    poincare_via_hausel,
    poincare_via_kac,
    profile_via_hausel,
    weight_mult_via_betti,
)

__version__ = "0.1.0"
