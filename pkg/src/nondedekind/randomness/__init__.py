"""Finite Martin-Lof machinery and a statistical proxy battery."""

from .battery import (
    MIN_LENGTH,
    BatteryConfig,
    RandomnessReport,
    TestRecord,
    battery,
    battery_many,
    read_bits,
)
from .measure import (
    CoverVerdict,
    NullCoverSpec,
    RationalityVerdict,
    RelativeWitness,
    StringSet,
    covers,
    cylinder_measure,
    own_prefix_cover,
    rationality_verdict,
    relative_random_witness,
    verify_null_cover,
)

__all__ = [
    "MIN_LENGTH",
    "BatteryConfig",
    "CoverVerdict",
    "NullCoverSpec",
    "RandomnessReport",
    "RationalityVerdict",
    "RelativeWitness",
    "StringSet",
    "TestRecord",
    "battery",
    "battery_many",
    "covers",
    "cylinder_measure",
    "own_prefix_cover",
    "rationality_verdict",
    "read_bits",
    "relative_random_witness",
    "verify_null_cover",
]
