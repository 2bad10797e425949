"""Part-based 3D shape captioning: voxelization, multi-view rendering, part
detection, feature aggregation, captioning and caption metrics."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
