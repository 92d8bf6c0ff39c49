from .create_frames import create_frame_fixture
from .networks import five_zone, single_zone, triangle, two_zone
from .types import ReturnT

__all__ = [
    "ReturnT",
    "create_frame_fixture",
    "five_zone",
    "single_zone",
    "triangle",
    "two_zone",
]
