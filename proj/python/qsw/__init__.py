"""Two-sided quaternion Fourier transform and continuous quaternion
Stockwell transform."""

try:
    from ._qsw import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _qsw import *  # noqa: F401,F403  (in-tree build layout)
