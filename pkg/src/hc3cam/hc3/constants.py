"""HIEROCRYPT-3 constant data: loading, validation, derived tables.

Everything the round functions and key schedule need that is not fixed
by the algorithm structure itself (s-box, XOR selection patterns of the
linear layers, key schedule constants) comes from a .ctab file and is
validated here before use.  Invalid data refuses to load: transcription
mistakes surface as hard errors, never as a silently wrong cipher.
"""

from __future__ import annotations

import os
from functools import lru_cache
from importlib import resources

from .. import ctab, gf2, gf256
from ..ctab import ConstantsError

ENV_CONSTANTS_DIR = "HC3CAM_CONSTANTS_DIR"


class Hc3Constants:
    """Validated constant set plus lookup tables derived from it."""

    def __init__(self, tab: ctab.Ctab):
        if tab.name != "hc3":
            raise ConstantsError(f"expected a 'hc3' ctab, got '{tab.name}'")
        self.source = tab

        self.sbox = tab.get("sbox", 256)
        if len(set(self.sbox)) != 256:
            raise ConstantsError("sbox is not a permutation of 0..255")
        inv = bytearray(256)
        for x, y in enumerate(self.sbox):
            inv[y] = x
        self.sbox_inv = bytes(inv)

        self.g0 = tab.words("g0", 8, 6)
        self.pad_h3, self.pad_h2 = tab.words("pad", 8, 2)

        self.p32_rows = tuple(tab.get("p32", 4))
        self.p16_rows = tuple(tab.get("p16", 4))
        self.m5e_rows = tuple(tab.get("m5e", 8))
        self.mb3_rows = tuple(tab.get("mb3", 8))
        self.mds_h_rows = tab.words("mds_h", 2, 16)

        try:
            self.p32_inv_rows = gf2.invert(self.p32_rows)
            self.p16_inv_rows = gf2.invert(self.p16_rows)
            self.mds_h_inv_rows = gf2.invert(self.mds_h_rows)
        except ValueError as exc:
            raise ConstantsError(f"singular linear layer: {exc}") from exc
        if not gf2.is_identity(gf2.mat_mul(self.mb3_rows, self.m5e_rows)):
            raise ConstantsError("mb3 . m5e is not the identity")

        self._build_tables()

    def _build_tables(self):
        mdsl = gf256.MDS_L
        mdsl_inv = gf256.mds_l_inverse(mdsl)

        def word_tables(matrix):
            # tables[j][x]: 32-bit contribution of input byte x at column j
            tables = []
            for j in range(4):
                col = [matrix.entries[i][j] for i in range(4)]
                tables.append(tuple(
                    sum(gf256.gf_mul(col[i], x) << (8 * (3 - i)) for i in range(4))
                    for x in range(256)
                ))
            return tuple(tables)

        self.mdsl_tables = word_tables(mdsl)
        self.mdsl_inv_tables = word_tables(mdsl_inv)
        # s-box folded into the column products; the "one bijective sbox
        # per constant" datapath.
        self.merged_tables = tuple(
            tuple(tab[self.sbox[x]] for x in range(256))
            for tab in self.mdsl_tables
        )

        def spread_tables(rows, nbytes):
            # tables[pos][v]: value with v at every output byte whose
            # selection row includes input byte pos.
            tables = []
            for pos in range(nbytes):
                shifts = [8 * (nbytes - 1 - p) for p in range(nbytes)
                          if rows[p] >> pos & 1]
                tables.append(tuple(
                    sum(v << s for s in shifts) for v in range(256)
                ))
            return tuple(tables)

        self.mds_h_tables = spread_tables(self.mds_h_rows, 16)
        self.mds_h_inv_tables = spread_tables(self.mds_h_inv_rows, 16)
        self.m5e_tables = spread_tables(self.m5e_rows, 8)
        self.mb3_tables = spread_tables(self.mb3_rows, 8)


@lru_cache(maxsize=8)
def _load_file(path_str: str) -> Hc3Constants:
    return Hc3Constants(ctab.load(path_str))


@lru_cache(maxsize=1)
def _load_packaged() -> Hc3Constants:
    res = resources.files("hc3cam").joinpath("data/hc3.ctab")
    return Hc3Constants(ctab.parse(res.read_text(), source=str(res)))


def load_constants(path=None) -> Hc3Constants:
    """Load and validate a constants file (default: packaged data, or
    $HC3CAM_CONSTANTS_DIR/hc3.ctab when that variable is set)."""
    if path is not None:
        return _load_file(os.fspath(path))
    override = os.environ.get(ENV_CONSTANTS_DIR)
    if override:
        return _load_file(os.path.join(override, "hc3.ctab"))
    return _load_packaged()


def get_constants() -> Hc3Constants:
    return load_constants()
