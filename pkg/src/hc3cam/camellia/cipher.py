"""Camellia-128: 18-round Feistel core, FL/FL-inverse layers, key schedule.

Decryption runs the identical network with the subkey order reversed
(whitening pairs swapped, round keys back to front, FL keys reversed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .constants import CamelliaConstants, get_constants

MASK8 = 0xFF
MASK32 = (1 << 32) - 1
MASK64 = (1 << 64) - 1
MASK128 = (1 << 128) - 1

N_ROUNDS = 18
FL_LAYER_ROUNDS = (6, 12)


class SigmaConstants(NamedTuple):
    sigma1: int
    sigma2: int
    sigma3: int
    sigma4: int
    sigma5: int
    sigma6: int


# Key schedule constants; sigma5/sigma6 belong to the 192/256-bit key
# path and are carried for completeness only.
SIGMA = SigmaConstants(
    0xA09E667F3BCC908B,
    0xB67AE8584CAA73B2,
    0xC6EF372FE94F82BE,
    0x54FF53A5F1D36F1C,
    0x10E527FADE682D1D,
    0xB05688C2B3E6C1FD,
)

# Rotation amounts Table 4.2 draws subkeys from.
SUBKEY_ROTATIONS = (0, 15, 30, 45, 60, 77, 94, 111)


class KeyVars(NamedTuple):
    kl_var: int   # 128-bit K_L
    kr_var: int   # 128-bit K_R (zero for 128-bit keys)
    ka_var: int   # 128-bit K_A


@dataclass(frozen=True)
class CamelliaSubkeys:
    kw: tuple[int, int, int, int]
    k: tuple[int, ...]              # k1..k18
    kl: tuple[int, int, int, int]
    key_vars: KeyVars | None = None


def p_layer(x: int, consts: CamelliaConstants | None = None) -> int:
    """Byte-XOR diffusion of the F-function."""
    consts = consts or get_constants()
    out = 0
    for i, mask in enumerate(consts.p_rows):
        acc = 0
        for j in range(8):
            if mask >> j & 1:
                acc ^= (x >> (8 * (7 - j))) & MASK8
        out |= acc << (8 * (7 - i))
    return out


def sbox_layer(x: int, consts: CamelliaConstants | None = None) -> int:
    """The eight per-position s-box lookups of the F-function."""
    consts = consts or get_constants()
    out = 0
    for pos, box in enumerate(consts.sbox_order):
        out |= box[(x >> (8 * (7 - pos))) & MASK8] << (8 * (7 - pos))
    return out


def f_function(x: int, k: int, consts: CamelliaConstants | None = None) -> int:
    """Key addition, s-boxes, P layer (fused per-byte tables)."""
    consts = consts or get_constants()
    x ^= k
    t = consts.f_tables
    return (t[0][x >> 56 & MASK8] ^ t[1][x >> 48 & MASK8]
            ^ t[2][x >> 40 & MASK8] ^ t[3][x >> 32 & MASK8]
            ^ t[4][x >> 24 & MASK8] ^ t[5][x >> 16 & MASK8]
            ^ t[6][x >> 8 & MASK8] ^ t[7][x & MASK8])


def _rotl32(x: int, n: int) -> int:
    return ((x << n) | (x >> (32 - n))) & MASK32


def fl(x: int, kl_key: int) -> int:
    """Y_R = ((X_L AND kl_L) <<< 1) XOR X_R;  Y_L = (Y_R OR kl_R) XOR X_L."""
    xl, xr = x >> 32, x & MASK32
    kl_l, kl_r = kl_key >> 32, kl_key & MASK32
    yr = _rotl32(xl & kl_l, 1) ^ xr
    yl = (yr | kl_r) ^ xl
    return yl << 32 | yr


def fl_inv(y: int, kl_key: int) -> int:
    yl, yr = y >> 32, y & MASK32
    kl_l, kl_r = kl_key >> 32, kl_key & MASK32
    xl = (yr | kl_r) ^ yl
    xr = _rotl32(xl & kl_l, 1) ^ yr
    return xl << 32 | xr


def _rot128(x: int, n: int) -> int:
    n %= 128
    return ((x << n) | (x >> (128 - n))) & MASK128


def _halves(x: int) -> tuple[int, int]:
    return x >> 64, x & MASK64


def key_schedule(key: bytes,
                 consts: CamelliaConstants | None = None) -> CamelliaSubkeys:
    """Derive kw1..4, k1..18, kl1..4 for a 128-bit key."""
    consts = consts or get_constants()
    if len(key) != 16:
        raise ValueError(f"camellia key must be 16 bytes, got {len(key)}")
    kl_var = int.from_bytes(key, "big")
    kr_var = 0

    d1, d2 = _halves(kl_var ^ kr_var)
    d2 ^= f_function(d1, SIGMA.sigma1, consts)
    d1 ^= f_function(d2, SIGMA.sigma2, consts)
    d1 ^= kl_var >> 64
    d2 ^= kl_var & MASK64
    d2 ^= f_function(d1, SIGMA.sigma3, consts)
    d1 ^= f_function(d2, SIGMA.sigma4, consts)
    ka_var = d1 << 64 | d2

    kw1, kw2 = _halves(_rot128(kl_var, 0))
    k1, k2 = _halves(_rot128(ka_var, 0))
    k3, k4 = _halves(_rot128(kl_var, 15))
    k5, k6 = _halves(_rot128(ka_var, 15))
    kl1, kl2 = _halves(_rot128(ka_var, 30))
    k7, k8 = _halves(_rot128(kl_var, 45))
    k9 = _rot128(ka_var, 45) >> 64
    k10 = _rot128(kl_var, 60) & MASK64
    k11, k12 = _halves(_rot128(ka_var, 60))
    kl3, kl4 = _halves(_rot128(kl_var, 77))
    k13, k14 = _halves(_rot128(kl_var, 94))
    k15, k16 = _halves(_rot128(ka_var, 94))
    k17, k18 = _halves(_rot128(kl_var, 111))
    kw3, kw4 = _halves(_rot128(ka_var, 111))

    return CamelliaSubkeys(
        kw=(kw1, kw2, kw3, kw4),
        k=(k1, k2, k3, k4, k5, k6, k7, k8, k9, k10,
           k11, k12, k13, k14, k15, k16, k17, k18),
        kl=(kl1, kl2, kl3, kl4),
        key_vars=KeyVars(kl_var, kr_var, ka_var),
    )


def reverse_subkeys(sk: CamelliaSubkeys) -> CamelliaSubkeys:
    """Subkey order for decryption through the same network."""
    return CamelliaSubkeys(
        kw=(sk.kw[2], sk.kw[3], sk.kw[0], sk.kw[1]),
        k=tuple(reversed(sk.k)),
        kl=tuple(reversed(sk.kl)),
        key_vars=sk.key_vars,
    )


def _run(block: bytes, sk: CamelliaSubkeys, consts: CamelliaConstants) -> bytes:
    if len(block) != 16:
        raise ValueError(f"camellia block must be 16 bytes, got {len(block)}")
    m = int.from_bytes(block, "big")
    left = (m >> 64) ^ sk.kw[0]
    right = (m & MASK64) ^ sk.kw[1]
    fl_index = 0
    for r in range(1, N_ROUNDS + 1):
        left, right = right ^ f_function(left, sk.k[r - 1], consts), left
        if r in FL_LAYER_ROUNDS:
            left = fl(left, sk.kl[fl_index])
            right = fl_inv(right, sk.kl[fl_index + 1])
            fl_index += 2
    c = ((right ^ sk.kw[2]) << 64) | (left ^ sk.kw[3])
    return c.to_bytes(16, "big")


def encrypt(block: bytes, sk: CamelliaSubkeys,
            consts: CamelliaConstants | None = None) -> bytes:
    return _run(block, sk, consts or get_constants())


def decrypt(block: bytes, sk: CamelliaSubkeys,
            consts: CamelliaConstants | None = None) -> bytes:
    return _run(block, reverse_subkeys(sk), consts or get_constants())
