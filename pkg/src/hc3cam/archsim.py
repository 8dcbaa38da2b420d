"""Cycle-level model of five FPGA datapath variants.

Four HIEROCRYPT-3 projects (short setup, long setup, very long setup,
extensive) and one loop-unrolled-by-3 Camellia project are modeled as
two-phase devices: a setup phase that precomputes key material and a
work phase that processes one 128-bit block in a fixed number of clock
cycles.  Every work cycle executes the real cipher sub-operations, so a
trace's ciphertext is checkable against the functional model; latencies
and resource figures are metadata, not gate-level timing.

Published throughput figures that disagree with 128 * f / cycles are
kept verbatim on the profiles and surfaced as flagged deviations.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass, replace
from typing import Callable, NamedTuple

from . import camellia as cam
from . import hc3


class MicroOp(NamedTuple):
    label: str
    ns: float | None = None


@dataclass(frozen=True)
class ArchProfile:
    variant: str
    cipher: str                      # "hc3" | "camellia"
    datapath: str                    # which built-in cycle schedule runs blocks
    work_cycles_per_block: int
    setup_schedule: tuple[MicroOp, ...]
    clock_mhz: float | None = None
    paper_throughput_mbps: float | None = None
    resources: str = ""
    critical_path_label: str = ""
    critical_path_ns: float | None = None

    @property
    def max_clock_mhz(self) -> float | None:
        """Clock bound implied by the critical path, when one is given."""
        if self.critical_path_ns is None:
            return None
        return 1000.0 / self.critical_path_ns


def _sigma_label(step: int) -> str:
    g = ("G0(5)", "G0(0)", "G0(1)", "G0(2)", "G0(3)")[step]
    kind = "pre-whitening sigma step 0" if step == 0 else f"sigma step {step}"
    return f"{kind} ({g})"


def _hc3_short_setup() -> tuple[MicroOp, ...]:
    return (
        MicroOp("load main key; pad with H3||H2"),
        MicroOp(_sigma_label(0) + " -> Z(0)"),
        MicroOp(_sigma_label(1) + " -> Z(1)"),
        MicroOp("round key K(1) -> subkey buffer"),
    )


def _hc3_long_setup() -> tuple[MicroOp, ...]:
    ops = [MicroOp("load main key; pad with H3||H2"),
           MicroOp(_sigma_label(0) + "; store Z(0)")]
    ops += [MicroOp(_sigma_label(t) + f"; store Z({t}), V({t})") for t in range(1, 5)]
    ops.append(MicroOp("compute V(5); 1600-bit cache complete"))
    ops.append(MicroOp("derive K(1) from cache -> subkey buffer"))
    return tuple(ops)


def _hc3_verylong_setup() -> tuple[MicroOp, ...]:
    # Every sigma update is spread over three ~28 ns cycles.
    ops = [MicroOp("load main key; pad with H3||H2")]
    for t in range(5):
        base = _sigma_label(t)
        ops.append(MicroOp(f"{base} cycle 1/3: P(32) of Z1||Z2", 28.0))
        ops.append(MicroOp(f"{base} cycle 2/3: M_5E and constant add", 28.0))
        ops.append(MicroOp(f"{base} cycle 3/3: F_sigma and swap", 28.0))
    ops.append(MicroOp("compute V(5); 1600-bit cache complete"))
    ops.append(MicroOp("derive K(1) from cache -> subkey buffer"))
    return tuple(ops)


def _camellia_setup() -> tuple[MicroOp, ...]:
    return (
        MicroOp("key schedule part I: 2 rounds (sigma1, sigma2), XOR with K_L"),
        MicroOp("key schedule part II: 2 next rounds (sigma3, sigma4) -> K_A"),
    )


PROFILES: dict[str, ArchProfile] = {
    "hc3-short": ArchProfile(
        variant="hc3-short", cipher="hc3", datapath="hc3-short",
        work_cycles_per_block=8, setup_schedule=_hc3_short_setup(),
        clock_mhz=8.05, paper_throughput_mbps=115.0,
        resources="8599 LE / 48 kb EAB",
        critical_path_label="key round",
    ),
    "hc3-long": ArchProfile(
        variant="hc3-long", cipher="hc3", datapath="hc3-long",
        work_cycles_per_block=8, setup_schedule=_hc3_long_setup(),
        clock_mhz=11.91, paper_throughput_mbps=190.0,
        resources="9497 LE / 48 kb EAB",
        critical_path_label="computation of the F_sigma output",
    ),
    "hc3-verylong": ArchProfile(
        variant="hc3-verylong", cipher="hc3", datapath="hc3-verylong",
        work_cycles_per_block=7, setup_schedule=_hc3_verylong_setup(),
        clock_mhz=15.64, paper_throughput_mbps=304.0,
        resources="9758 LE / 48 kb EAB",
        critical_path_label="round of encryption",
    ),
    "hc3-extensive": ArchProfile(
        variant="hc3-extensive", cipher="hc3", datapath="hc3-extensive",
        work_cycles_per_block=7, setup_schedule=_hc3_verylong_setup(),
        clock_mhz=21.73, paper_throughput_mbps=397.0,
        resources="25811 LE",
        critical_path_label="round via fused sbox/MDS-lower tables",
        critical_path_ns=46.0,
    ),
    "camellia-lu3": ArchProfile(
        variant="camellia-lu3", cipher="camellia", datapath="camellia-lu3",
        work_cycles_per_block=6, setup_schedule=_camellia_setup(),
        clock_mhz=13.15, paper_throughput_mbps=240.0,
        resources="2973 LE / 49152 memory bits",
        critical_path_label="round of encryption (3 unrolled rounds)",
    ),
}


class ReferenceRow(NamedTuple):
    label: str
    cipher: str
    resources: str
    paper_throughput_mbps: float


# Published comparison rows carried verbatim.
REFERENCE_ROWS: tuple[ReferenceRow, ...] = (
    ReferenceRow("TOSHIBA high speed", "hc3", "22700 LE", 52.6),
    ReferenceRow("TOSHIBA small area", "hc3", "6300 LE", 4.1),
    ReferenceRow("NTT/Mitsubishi loop (XC4000XL)", "camellia", "1296 LE", 77.34),
    ReferenceRow("NTT/Mitsubishi loop (VirtexE)", "camellia", "1816 LE", 199.46),
    ReferenceRow("NTT/Mitsubishi loop (VirtexE)", "camellia", "1816 LE", 211.90),
    ReferenceRow("NTT/Mitsubishi loop (VirtexE)", "camellia", "1780 LE", 227.42),
    ReferenceRow("NTT/Mitsubishi unrolled (VirtexE)", "camellia", "9426 LE", 401.89),
)


# --- two-phase device handshake ------------------------------------------

SETUP, READY, WORKING, REARM = "setup", "ready", "working", "rearm"


@dataclass(frozen=True)
class DeviceState:
    """One encryption unit stepped a clock tick at a time.

    RESET drops READY at its edge; retained setup results let READY rise
    again one tick later.  A RESET arriving mid-block does not cut the
    WORK pulse short: the block in flight completes its exact cycle
    count first.
    """

    profile: ArchProfile
    phase: str = SETUP
    ready: bool = False
    work: bool = False
    cycle_counter: int = 0
    blocks_done: int = 0
    setup_index: int = 0
    work_left: int = 0


def initial_state(profile: ArchProfile) -> DeviceState:
    return DeviceState(profile=profile)


def step(state: DeviceState, reset_edge: bool = False,
         start_edge: bool = False) -> DeviceState:
    """Advance one clock tick; inputs are this tick's edges."""
    s = replace(state, cycle_counter=state.cycle_counter + 1)

    if s.phase == SETUP:
        # START is ignored while READY is low; RESET restarts the setup.
        idx = 0 if reset_edge else s.setup_index + 1
        if idx >= len(s.profile.setup_schedule):
            return replace(s, phase=READY, ready=True, setup_index=idx)
        return replace(s, setup_index=idx)

    if reset_edge:
        s = replace(s, ready=False)

    if s.phase == WORKING:
        left = s.work_left - 1
        if left > 0:
            return replace(s, work_left=left)
        done = replace(s, work=False, work_left=0, blocks_done=s.blocks_done + 1)
        return replace(done, phase=REARM if not done.ready else READY)

    if s.phase == REARM or (s.phase == READY and not s.ready):
        if reset_edge:
            return replace(s, phase=REARM)
        return replace(s, phase=READY, ready=True)

    # phase == READY with READY high
    if start_edge and not reset_edge:
        return replace(s, phase=WORKING, work=True,
                       work_left=s.profile.work_cycles_per_block)
    return s


# --- per-cycle block execution -------------------------------------------

class CycleRecord(NamedTuple):
    index: int                 # 1-based work cycle number
    ops: tuple[str, ...]
    state_hex: str             # datapath state after the cycle


class BlockTrace(NamedTuple):
    variant: str
    cycles: tuple[CycleRecord, ...]
    ciphertext: bytes


def _run_hc3_short(key: bytes, block: bytes, consts) -> BlockTrace:
    # Subkeys are regenerated alongside the rounds for every block; the
    # last cycle restores the round-1 state for the next one.
    z0 = hc3.pad_and_prewhiten(key, consts)
    steps = hc3.iter_schedule(z0, consts)
    keys = {1: next(steps).round_key}
    cycles = []
    x = block
    cycles.append(CycleRecord(1, ("load plaintext",), x.hex()))
    for r in range(1, 6):
        nxt = next(steps)
        keys[nxt.step] = nxt.round_key
        op = "sigma" if nxt.step <= hc3.T_TURN else "sigma-inv"
        x = hc3.rho(x, keys[r], consts)
        cycles.append(CycleRecord(r + 1,
                                  (f"rho round {r} (K({r}))",
                                   f"key round: {op} step {nxt.step} -> K({nxt.step})"),
                                  x.hex()))
    nxt = next(steps)
    keys[nxt.step] = nxt.round_key
    x = hc3.xs(x, keys[6], consts)
    cycles.append(CycleRecord(7, ("XS (K(6))",
                                  "key round: sigma-inv step 7 -> K(7)"), x.hex()))
    x = hc3.key_addition(x, keys[7])
    cycles.append(CycleRecord(8, ("AK (K(7) first half)",
                                  "restore Z(0) and K(1) for next block"), x.hex()))
    return BlockTrace("hc3-short", tuple(cycles), x)


def _run_hc3_cached(variant: str, key: bytes, block: bytes, consts,
                    merged: bool, merge_xs_ak: bool) -> BlockTrace:
    ks = hc3.key_schedule(key, "cached_1600", consts)
    keys = ks.round_keys
    via = " via fused tables" if merged else ""
    from_cache = "subkey from 1600-bit cache"
    cycles = []
    x = block
    cycles.append(CycleRecord(1, ("load plaintext", from_cache), x.hex()))
    for r in range(1, 6):
        if merged:
            x = hc3.mds_h(hc3.merged_xs(x, keys[r - 1], consts), consts)
        else:
            x = hc3.rho(x, keys[r - 1], consts)
        cycles.append(CycleRecord(r + 1, (f"rho round {r} (K({r})){via}", from_cache),
                                  x.hex()))
    if merge_xs_ak:
        x = hc3.merged_xs(x, keys[5], consts) if merged else hc3.xs(x, keys[5], consts)
        x = hc3.key_addition(x, keys[6])
        cycles.append(CycleRecord(7, (f"XS (K(6)){via} + AK (K(7)) merged",), x.hex()))
    else:
        x = hc3.xs(x, keys[5], consts)
        cycles.append(CycleRecord(7, (f"XS (K(6)){via}",), x.hex()))
        x = hc3.key_addition(x, keys[6])
        cycles.append(CycleRecord(8, ("AK (K(7) first half)",), x.hex()))
    return BlockTrace(variant, tuple(cycles), x)


def _run_camellia_lu3(key: bytes, block: bytes, consts) -> BlockTrace:
    sk = cam.key_schedule(key, consts)
    m = int.from_bytes(block, "big")
    left = (m >> 64) ^ sk.kw[0]
    right = (m & ((1 << 64) - 1)) ^ sk.kw[1]

    def rounds3(left, right, first):
        for r in range(first, first + 3):
            left, right = right ^ cam.f_function(left, sk.k[r - 1], consts), left
        return left, right

    cycles = []

    def record(i, ops, l, r):
        cycles.append(CycleRecord(i, ops, f"{l:016x}{r:016x}"))

    left, right = rounds3(left, right, 1)
    record(1, ("pre-whitening; rounds 1-3",), left, right)
    left, right = rounds3(left, right, 4)
    left, right = cam.fl(left, sk.kl[0]), cam.fl_inv(right, sk.kl[1])
    record(2, ("rounds 4-6", "FL / FL-inverse layer (kl1, kl2)"), left, right)
    left, right = rounds3(left, right, 7)
    record(3, ("rounds 7-9",), left, right)
    left, right = rounds3(left, right, 10)
    left, right = cam.fl(left, sk.kl[2]), cam.fl_inv(right, sk.kl[3])
    record(4, ("rounds 10-12", "FL / FL-inverse layer (kl3, kl4)"), left, right)
    left, right = rounds3(left, right, 13)
    record(5, ("rounds 13-15",), left, right)
    left, right = rounds3(left, right, 16)
    c = ((right ^ sk.kw[2]) << 64) | (left ^ sk.kw[3])
    ct = c.to_bytes(16, "big")
    cycles.append(CycleRecord(6, ("rounds 16-18", "swap halves; post-whitening"),
                              ct.hex()))
    return BlockTrace("camellia-lu3", tuple(cycles), ct)


_DATAPATHS: dict[str, Callable] = {
    "hc3-short": lambda key, block: _run_hc3_short(key, block, hc3.get_constants()),
    "hc3-long": lambda key, block: _run_hc3_cached(
        "hc3-long", key, block, hc3.get_constants(), merged=False, merge_xs_ak=False),
    "hc3-verylong": lambda key, block: _run_hc3_cached(
        "hc3-verylong", key, block, hc3.get_constants(), merged=False, merge_xs_ak=True),
    "hc3-extensive": lambda key, block: _run_hc3_cached(
        "hc3-extensive", key, block, hc3.get_constants(), merged=True, merge_xs_ak=True),
    "camellia-lu3": lambda key, block: _run_camellia_lu3(
        key, block, cam.get_constants()),
}


def setup_trace(profile: ArchProfile) -> tuple[MicroOp, ...]:
    """The ordered setup-phase micro-ops of a variant."""
    return profile.setup_schedule


def run_block(profile: ArchProfile, key: bytes, block: bytes) -> BlockTrace:
    """Execute one block through the variant's per-cycle schedule."""
    runner = _DATAPATHS.get(profile.datapath)
    if runner is None:
        raise ValueError(
            f"profile {profile.variant!r} has no executable datapath "
            f"{profile.datapath!r}; known: {', '.join(sorted(_DATAPATHS))}"
        )
    trace = runner(key, block)
    want = profile.work_cycles_per_block
    if len(trace.cycles) != want:
        raise AssertionError(
            f"{profile.variant}: datapath produced {len(trace.cycles)} cycles, "
            f"profile says {want}"
        )
    return trace


# --- throughput model and report ------------------------------------------

def throughput_model(clock_hz: float, cycles_per_block: int) -> float:
    """Bits per second of an iterative unit: 128 * f / cycles."""
    if clock_hz <= 0 or cycles_per_block <= 0:
        raise ValueError("clock and cycle count must be positive")
    return 128.0 * clock_hz / cycles_per_block


# Relative disagreement with the published figure above which a row is
# marked as a documented discrepancy.
DISCREPANCY_THRESHOLD = 0.01


@dataclass(frozen=True)
class SimRow:
    label: str
    cipher: str
    is_model: bool
    cycles_per_block: int | None
    clock_mhz: float | None
    modeled_mbps: float | None
    paper_mbps: float | None
    deviation: float | None
    flagged: bool
    resources: str


def model_row(profile: ArchProfile, clock_mhz: float | None = None) -> SimRow:
    clock = clock_mhz if clock_mhz is not None else profile.clock_mhz
    modeled = None
    deviation = None
    flagged = False
    if clock is not None:
        modeled = throughput_model(clock * 1e6, profile.work_cycles_per_block) / 1e6
        if profile.paper_throughput_mbps:
            deviation = abs(modeled - profile.paper_throughput_mbps) / profile.paper_throughput_mbps
            flagged = deviation > DISCREPANCY_THRESHOLD
    return SimRow(
        label=profile.variant, cipher=profile.cipher, is_model=True,
        cycles_per_block=profile.work_cycles_per_block, clock_mhz=clock,
        modeled_mbps=modeled, paper_mbps=profile.paper_throughput_mbps,
        deviation=deviation, flagged=flagged, resources=profile.resources,
    )


def report(profiles=None) -> tuple[SimRow, ...]:
    """Model rows for every variant plus the published comparison rows."""
    profiles = profiles if profiles is not None else list(PROFILES.values())
    rows = [model_row(p) for p in profiles]
    for ref in REFERENCE_ROWS:
        rows.append(SimRow(
            label=ref.label, cipher=ref.cipher, is_model=False,
            cycles_per_block=None, clock_mhz=None, modeled_mbps=None,
            paper_mbps=ref.paper_throughput_mbps, deviation=None,
            flagged=False, resources=ref.resources,
        ))
    return tuple(rows)


def render_report(rows, cipher: str | None = None) -> str:
    """Aligned text table, optionally restricted to one cipher family."""
    cols = ("project", "cycles", "clock MHz", "model Mb/s", "paper Mb/s",
            "deviation", "flag", "resources")
    table = [cols]
    for r in rows:
        if cipher and r.cipher != cipher:
            continue
        table.append((
            r.label,
            "-" if r.cycles_per_block is None else str(r.cycles_per_block),
            "-" if r.clock_mhz is None else f"{r.clock_mhz:.2f}",
            "-" if r.modeled_mbps is None else f"{r.modeled_mbps:.2f}",
            "-" if r.paper_mbps is None else f"{r.paper_mbps:.2f}",
            "-" if r.deviation is None else f"{100 * r.deviation:.2f}%",
            "DISCREPANCY" if r.flagged else "",
            r.resources,
        ))
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    lines = []
    for idx, row in enumerate(table):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_csv(rows) -> str:
    out = ["label,cipher,kind,cycles,clock_mhz,model_mbps,paper_mbps,deviation,flagged,resources"]
    for r in rows:
        out.append(",".join([
            r.label.replace(",", ";"),
            r.cipher,
            "model" if r.is_model else "reference",
            "" if r.cycles_per_block is None else str(r.cycles_per_block),
            "" if r.clock_mhz is None else f"{r.clock_mhz:.4f}",
            "" if r.modeled_mbps is None else f"{r.modeled_mbps:.4f}",
            "" if r.paper_mbps is None else f"{r.paper_mbps:.4f}",
            "" if r.deviation is None else f"{r.deviation:.6f}",
            "1" if r.flagged else "0",
            r.resources.replace(",", ";"),
        ]))
    return "\n".join(out)


# --- profile files ---------------------------------------------------------

def parse_profile(text: str, source: str = "<profile>") -> ArchProfile:
    """Read a profile description (see README for the grammar)."""
    fields: dict = {}
    setup: list[MicroOp] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            parts = shlex.split(line)
        except ValueError as exc:
            raise ValueError(f"{source}:{lineno}: {exc}") from exc
        keyword, args = parts[0], parts[1:]
        if keyword == "setup":
            if not args:
                raise ValueError(f"{source}:{lineno}: setup needs a label")
            ns = float(args[1]) if len(args) > 1 else None
            setup.append(MicroOp(args[0], ns))
            continue
        if len(args) != 1:
            raise ValueError(f"{source}:{lineno}: '{keyword}' takes one value")
        fields[keyword] = args[0]

    if "variant" not in fields:
        raise ValueError(f"{source}: missing 'variant'")
    datapath = fields.get("datapath", fields["variant"])
    base = PROFILES.get(datapath)
    if base is None:
        raise ValueError(
            f"{source}: unknown datapath {datapath!r}; known: "
            f"{', '.join(sorted(PROFILES))}"
        )
    work = int(fields.get("work-cycles", base.work_cycles_per_block))
    if work != base.work_cycles_per_block:
        raise ValueError(
            f"{source}: work-cycles {work} does not match datapath "
            f"{datapath!r} ({base.work_cycles_per_block})"
        )
    cipher = fields.get("cipher", base.cipher)
    if cipher != base.cipher:
        raise ValueError(
            f"{source}: cipher {cipher!r} does not match datapath "
            f"{datapath!r} ({base.cipher})"
        )
    return ArchProfile(
        variant=fields["variant"],
        cipher=cipher,
        datapath=datapath,
        work_cycles_per_block=work,
        setup_schedule=tuple(setup) or base.setup_schedule,
        clock_mhz=float(fields["clock-mhz"]) if "clock-mhz" in fields else base.clock_mhz,
        paper_throughput_mbps=(float(fields["paper-throughput-mbps"])
                               if "paper-throughput-mbps" in fields
                               else base.paper_throughput_mbps),
        resources=fields.get("resources", base.resources),
        critical_path_label=fields.get("critical-path", base.critical_path_label),
        critical_path_ns=(float(fields["critical-path-ns"])
                          if "critical-path-ns" in fields else base.critical_path_ns),
    )


def format_profile(profile: ArchProfile) -> str:
    lines = [
        f"variant {profile.variant}",
        f"datapath {profile.datapath}",
        f"cipher {profile.cipher}",
        f"work-cycles {profile.work_cycles_per_block}",
    ]
    if profile.clock_mhz is not None:
        lines.append(f"clock-mhz {profile.clock_mhz}")
    if profile.paper_throughput_mbps is not None:
        lines.append(f"paper-throughput-mbps {profile.paper_throughput_mbps}")
    if profile.resources:
        lines.append(f"resources {shlex.quote(profile.resources)}")
    if profile.critical_path_label:
        lines.append(f"critical-path {shlex.quote(profile.critical_path_label)}")
    if profile.critical_path_ns is not None:
        lines.append(f"critical-path-ns {profile.critical_path_ns}")
    for op in profile.setup_schedule:
        if op.ns is None:
            lines.append(f"setup {shlex.quote(op.label)}")
        else:
            lines.append(f"setup {shlex.quote(op.label)} {op.ns}")
    return "\n".join(lines) + "\n"
