"""hc3cam: HIEROCRYPT-3 and Camellia (128-bit blocks and keys) plus a
cycle-level model of five FPGA datapath variants built on them."""

__version__ = "0.1.0"

from . import archsim, camellia, ctab, gf2, gf256, hc3
from .ctab import ConstantsError

__all__ = ["archsim", "camellia", "ctab", "gf2", "gf256", "hc3",
           "ConstantsError", "__version__"]
