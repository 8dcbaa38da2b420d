"""Camellia constant data: the four s-boxes and the P-function pattern.

Loaded from camellia.ctab and validated: every table must be a
permutation, s2/s3/s4 must honour the published derivation rules
(output rotations of s1, input rotation for s4), and the P selection
matrix must be invertible.
"""

from __future__ import annotations

import os
from functools import lru_cache
from importlib import resources

from .. import ctab, gf2
from ..ctab import ConstantsError
from ..hc3.constants import ENV_CONSTANTS_DIR


def _rotl8(x: int, n: int) -> int:
    return ((x << n) | (x >> (8 - n))) & 0xFF


class CamelliaConstants:
    def __init__(self, tab: ctab.Ctab):
        if tab.name != "camellia":
            raise ConstantsError(f"expected a 'camellia' ctab, got '{tab.name}'")
        self.source = tab
        self.s1 = tab.get("s1", 256)
        self.s2 = tab.get("s2", 256)
        self.s3 = tab.get("s3", 256)
        self.s4 = tab.get("s4", 256)
        for name in ("s1", "s2", "s3", "s4"):
            if len(set(getattr(self, name))) != 256:
                raise ConstantsError(f"{name} is not a permutation of 0..255")
        for x in range(256):
            if (self.s2[x] != _rotl8(self.s1[x], 1)
                    or self.s3[x] != _rotl8(self.s1[x], 7)
                    or self.s4[x] != self.s1[_rotl8(x, 1)]):
                raise ConstantsError("s2/s3/s4 do not match their s1 derivation rules")

        self.p_rows = tuple(tab.get("p", 8))
        try:
            self.p_inv_rows = gf2.invert(self.p_rows)
        except ValueError as exc:
            raise ConstantsError(f"P pattern is singular: {exc}") from exc

        # s-box order across the eight F-function byte positions
        self.sbox_order = (self.s1, self.s2, self.s3, self.s4,
                           self.s2, self.s3, self.s4, self.s1)
        self._build_tables()

    def _build_tables(self):
        # f_tables[pos][v]: 64-bit P-layer image of sbox_pos(v) sitting
        # alone at byte position pos.
        tables = []
        for pos in range(8):
            box = self.sbox_order[pos]
            shifts = [8 * (7 - i) for i in range(8) if self.p_rows[i] >> pos & 1]
            tables.append(tuple(
                sum(box[v] << s for s in shifts) for v in range(256)
            ))
        self.f_tables = tuple(tables)


@lru_cache(maxsize=8)
def _load_file(path_str: str) -> CamelliaConstants:
    return CamelliaConstants(ctab.load(path_str))


@lru_cache(maxsize=1)
def _load_packaged() -> CamelliaConstants:
    res = resources.files("hc3cam").joinpath("data/camellia.ctab")
    return CamelliaConstants(ctab.parse(res.read_text(), source=str(res)))


def load_constants(path=None) -> CamelliaConstants:
    if path is not None:
        return _load_file(os.fspath(path))
    override = os.environ.get(ENV_CONSTANTS_DIR)
    if override:
        return _load_file(os.path.join(override, "camellia.ctab"))
    return _load_packaged()


def get_constants() -> CamelliaConstants:
    return load_constants()
