"""Command-line front end.

    hc3cam encrypt  --cipher hc3|camellia --key <hex32> --in F --out G
    hc3cam decrypt  --cipher hc3|camellia --key <hex32> --in F --out G
    hc3cam kat      --cipher hc3|camellia --vectors F
    hc3cam bench    --cipher hc3|camellia --blocks N
    hc3cam simulate --variant V [--blocks N] [--clock-mhz F] [--profile-file F]

Exit codes: 0 success, 1 known-answer verification mismatch, 2 usage or
format error.  Files are processed as raw 16-byte ECB blocks; a partial
final block is an error, never padded.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from . import archsim
from . import camellia as cam
from . import hc3
from .ctab import ConstantsError

BLOCK_BYTES = 16


class CliError(Exception):
    """Usage or data-format problem; maps to exit code 2."""


def _parse_key(hex_key: str) -> bytes:
    cleaned = hex_key.strip()
    try:
        key = bytes.fromhex(cleaned)
    except ValueError:
        raise CliError(f"key is not valid hex: {hex_key!r}") from None
    if len(key) != BLOCK_BYTES:
        raise CliError(f"key must be 32 hex digits (16 bytes), got {len(key)} bytes")
    return key


def _block_fns(cipher: str):
    if cipher == "hc3":
        def make(key):
            ks = hc3.key_schedule(key)
            return (lambda b: hc3.encrypt(b, ks)), (lambda b: hc3.decrypt(b, ks))
        return make
    if cipher == "camellia":
        def make(key):
            sk = cam.key_schedule(key)
            return (lambda b: cam.encrypt(b, sk)), (lambda b: cam.decrypt(b, sk))
        return make
    raise CliError(f"unknown cipher {cipher!r}; choose hc3 or camellia")


def cmd_encrypt(args) -> int:
    return cmd_crypt(args, decrypt=False)


def cmd_decrypt(args) -> int:
    return cmd_crypt(args, decrypt=True)


def cmd_crypt(args, decrypt: bool) -> int:
    key = _parse_key(args.key)
    enc, dec = _block_fns(args.cipher)(key)
    fn = dec if decrypt else enc
    try:
        with open(args.infile, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise CliError(str(exc)) from exc
    if len(data) % BLOCK_BYTES:
        raise CliError(
            f"input length {len(data)} is not a multiple of {BLOCK_BYTES} bytes "
            "(raw ECB block processing, no padding)"
        )
    out = bytearray()
    for off in range(0, len(data), BLOCK_BYTES):
        out += fn(data[off : off + BLOCK_BYTES])
    try:
        with open(args.outfile, "wb") as fh:
            fh.write(out)
    except OSError as exc:
        raise CliError(str(exc)) from exc
    return 0


@dataclass
class KatRecord:
    cipher: str
    index: int
    key: bytes
    plaintext: bytes
    ciphertext: bytes


def parse_kat_file(text: str, source: str = "<kat>",
                   cipher: str = "") -> list[KatRecord]:
    """KEY=/PT=/CT= triples, '#' comments, blank lines between records."""
    records = []
    pending: dict[str, bytes] = {}
    order = ("KEY", "PT", "CT")

    def close(lineno):
        if not pending:
            return
        missing = [f for f in order if f not in pending]
        if missing:
            raise CliError(f"{source}:{lineno}: record missing {'/'.join(missing)}")
        records.append(KatRecord(cipher, len(records) + 1, pending["KEY"],
                                 pending["PT"], pending["CT"]))
        pending.clear()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            close(lineno)
            continue
        if "=" not in line:
            raise CliError(f"{source}:{lineno}: expected FIELD=hex, got {line!r}")
        name, _, value = line.partition("=")
        name = name.strip().upper()
        if name not in order:
            raise CliError(f"{source}:{lineno}: unknown field {name!r}")
        if name in pending:
            raise CliError(f"{source}:{lineno}: duplicate {name} in record")
        try:
            payload = bytes.fromhex(value.strip())
        except ValueError:
            raise CliError(f"{source}:{lineno}: bad hex in {name}") from None
        if len(payload) != BLOCK_BYTES:
            raise CliError(f"{source}:{lineno}: {name} must be 32 hex digits")
        pending[name] = payload
    close(lineno + 1 if text else 0)
    if not records:
        raise CliError(f"{source}: no records found")
    return records


def cmd_kat(args) -> int:
    try:
        with open(args.vectors, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(str(exc)) from exc
    records = parse_kat_file(text, source=args.vectors, cipher=args.cipher)
    make = _block_fns(args.cipher)
    failures = 0
    for rec in records:
        enc, dec = make(rec.key)
        got_ct = enc(rec.plaintext)
        got_pt = dec(rec.ciphertext)
        if got_ct != rec.ciphertext:
            failures += 1
            print(f"record {rec.index}: encrypt mismatch\n"
                  f"  key      {rec.key.hex()}\n"
                  f"  expected {rec.ciphertext.hex()}\n"
                  f"  got      {got_ct.hex()}")
        if got_pt != rec.plaintext:
            failures += 1
            print(f"record {rec.index}: decrypt mismatch\n"
                  f"  key      {rec.key.hex()}\n"
                  f"  expected {rec.plaintext.hex()}\n"
                  f"  got      {got_pt.hex()}")
    total = len(records)
    if failures:
        print(f"{args.cipher}: {failures} mismatch(es) across {total} record(s)")
        return 1
    print(f"{args.cipher}: all {total} record(s) passed, both directions")
    return 0


@dataclass
class BenchResult:
    cipher: str
    blocks: int
    seconds: float

    @property
    def throughput_mbps(self) -> float:
        if self.seconds <= 0:
            return float("inf")
        return self.blocks * 128 / self.seconds / 1e6

    def csv(self) -> str:
        return f"{self.cipher},{self.blocks},{self.seconds:.6f},{self.throughput_mbps:.3f}"


def cmd_bench(args) -> int:
    if args.blocks <= 0:
        raise CliError("--blocks must be positive")
    key = bytes(range(16))
    enc, _ = _block_fns(args.cipher)(key)
    block = bytes(16)
    t0 = time.perf_counter()
    for _ in range(args.blocks):
        block = enc(block)
    result = BenchResult(args.cipher, args.blocks, time.perf_counter() - t0)
    print("cipher,blocks,seconds,throughput_mbps")
    print(result.csv())
    return 0


def cmd_simulate(args) -> int:
    if args.profile_file:
        try:
            with open(args.profile_file, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(str(exc)) from exc
        try:
            profile = archsim.parse_profile(text, source=args.profile_file)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    else:
        profile = archsim.PROFILES.get(args.variant)
        if profile is None:
            raise CliError(
                f"unknown variant {args.variant!r}; valid: "
                + ", ".join(sorted(archsim.PROFILES))
            )
    if args.clock_mhz is not None and args.clock_mhz <= 0:
        raise CliError("--clock-mhz must be positive")
    if args.blocks < 0:
        raise CliError("--blocks must be non-negative")

    clock = args.clock_mhz if args.clock_mhz is not None else profile.clock_mhz
    row = archsim.model_row(profile, clock)

    print(f"variant: {profile.variant} ({profile.cipher})")
    print(f"setup cycles: {len(profile.setup_schedule)}")
    print(f"work cycles per block: {profile.work_cycles_per_block}")
    if clock is not None:
        print(f"clock: {clock:.2f} MHz")
    if profile.critical_path_label:
        extra = ""
        if profile.critical_path_ns is not None:
            extra = (f" ({profile.critical_path_ns:g} ns, max clock "
                     f"{profile.max_clock_mhz:.2f} MHz)")
        print(f"critical path: {profile.critical_path_label}{extra}")
    if profile.resources:
        print(f"resources: {profile.resources}")
    if row.modeled_mbps is not None:
        print(f"modeled throughput: {row.modeled_mbps:.2f} Mb/s")
    if row.paper_mbps is not None:
        print(f"published throughput: {row.paper_mbps:.2f} Mb/s")
    if row.deviation is not None:
        flag = "  ** DISCREPANCY (documented; figures kept verbatim) **" if row.flagged else ""
        print(f"deviation: {100 * row.deviation:.2f}%{flag}")

    key = bytes(range(16))
    functional_ok = True
    state = archsim.initial_state(profile)
    while not state.ready:
        state = archsim.step(state)
    setup_ticks = state.cycle_counter
    for i in range(args.blocks):
        block = i.to_bytes(16, "big")
        trace = archsim.run_block(profile, key, block)
        if profile.cipher == "hc3":
            want = hc3.encrypt(block, hc3.key_schedule(key))
        else:
            want = cam.encrypt(block, cam.key_schedule(key))
        functional_ok = functional_ok and trace.ciphertext == want
        state = archsim.step(state, start_edge=True)
        while state.work:
            state = archsim.step(state)
    print(f"blocks simulated: {args.blocks} "
          f"(ciphertext vs functional model: {'OK' if functional_ok else 'MISMATCH'})")
    print(f"device ticks: {state.cycle_counter} total, {setup_ticks} setup")
    if args.trace and args.blocks:
        trace = archsim.run_block(profile, key, (args.blocks - 1).to_bytes(16, "big"))
        print("cycle trace (last block):")
        for cyc in trace.cycles:
            print(f"  {cyc.index}: " + " | ".join(cyc.ops))
    print()
    print(f"comparison ({profile.cipher} family):")
    print(archsim.render_report(archsim.report(), cipher=profile.cipher))
    if not functional_ok:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hc3cam",
        description="HIEROCRYPT-3 / Camellia block tool and FPGA datapath model",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cipher(p):
        p.add_argument("--cipher", required=True, choices=("hc3", "camellia"))

    p_enc = sub.add_parser("encrypt", help="encrypt a file of 16-byte blocks")
    p_dec = sub.add_parser("decrypt", help="decrypt a file of 16-byte blocks")
    for p in (p_enc, p_dec):
        add_cipher(p)
        p.add_argument("--key", required=True, help="32 hex digits")
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--out", dest="outfile", required=True)

    p_kat = sub.add_parser("kat", help="run a known-answer vector file")
    add_cipher(p_kat)
    p_kat.add_argument("--vectors", required=True)

    p_bench = sub.add_parser("bench", help="time software block encryption")
    add_cipher(p_bench)
    p_bench.add_argument("--blocks", type=int, default=10000)

    p_sim = sub.add_parser("simulate", help="run the datapath model")
    p_sim.add_argument("--variant", default=None,
                       help=", ".join(sorted(archsim.PROFILES)))
    p_sim.add_argument("--blocks", type=int, default=1)
    p_sim.add_argument("--clock-mhz", type=float, default=None)
    p_sim.add_argument("--profile-file", default=None,
                       help="load a profile description instead of a built-in")
    p_sim.add_argument("--trace", action="store_true",
                       help="print the per-cycle trace of the last block")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "encrypt":
            return cmd_encrypt(args)
        if args.command == "decrypt":
            return cmd_decrypt(args)
        if args.command == "kat":
            return cmd_kat(args)
        if args.command == "bench":
            if args.blocks is None:
                raise CliError("--blocks required")
            return cmd_bench(args)
        if args.command == "simulate":
            if not args.variant and not args.profile_file:
                raise CliError("simulate needs --variant or --profile-file; valid "
                               "variants: " + ", ".join(sorted(archsim.PROFILES)))
            return cmd_simulate(args)
        raise CliError(f"unknown command {args.command!r}")
    except (CliError, ConstantsError, ValueError) as exc:
        print(f"hc3cam: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
