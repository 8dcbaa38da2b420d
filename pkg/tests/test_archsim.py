import random

import pytest

from hc3cam import archsim, camellia, hc3
from hc3cam.archsim import (
    PROFILES,
    initial_state,
    parse_profile,
    format_profile,
    report,
    render_csv,
    render_report,
    run_block,
    setup_trace,
    step,
    throughput_model,
)


def test_builtin_profile_figures():
    expect = {
        "hc3-short": (8, 8.05, 115.0, "8599 LE / 48 kb EAB"),
        "hc3-long": (8, 11.91, 190.0, "9497 LE / 48 kb EAB"),
        "hc3-verylong": (7, 15.64, 304.0, "9758 LE / 48 kb EAB"),
        "hc3-extensive": (7, 21.73, 397.0, "25811 LE"),
        "camellia-lu3": (6, 13.15, 240.0, "2973 LE / 49152 memory bits"),
    }
    assert set(PROFILES) == set(expect)
    for name, (cycles, clock, paper, res) in expect.items():
        p = PROFILES[name]
        assert p.work_cycles_per_block == cycles
        assert p.clock_mhz == clock
        assert p.paper_throughput_mbps == paper
        assert p.resources == res


def test_work_cycle_counts_exact():
    counts = [PROFILES[v].work_cycles_per_block
              for v in ("hc3-short", "hc3-long", "hc3-verylong",
                        "hc3-extensive", "camellia-lu3")]
    assert counts == [8, 8, 7, 7, 6]


@pytest.mark.parametrize("variant", sorted(PROFILES))
def test_simulator_matches_functional_cipher(variant):
    profile = PROFILES[variant]
    rng = random.Random(hash(variant) & 0xFFFF)
    for _ in range(100):
        key, block = rng.randbytes(16), rng.randbytes(16)
        trace = run_block(profile, key, block)
        if profile.cipher == "hc3":
            want = hc3.encrypt(block, hc3.key_schedule(key))
        else:
            want = camellia.encrypt(block, camellia.key_schedule(key))
        assert trace.ciphertext == want
        assert len(trace.cycles) == profile.work_cycles_per_block
        assert [c.index for c in trace.cycles] == list(
            range(1, profile.work_cycles_per_block + 1))


def test_verylong_merges_xs_and_ak_in_cycle_7():
    trace = run_block(PROFILES["hc3-verylong"], bytes(16), bytes(16))
    last = trace.cycles[-1]
    assert last.index == 7
    joined = " ".join(last.ops)
    assert "XS" in joined and "AK" in joined


def test_long_setup_keeps_xs_and_ak_apart():
    trace = run_block(PROFILES["hc3-long"], bytes(16), bytes(16))
    assert any("XS" in " ".join(c.ops) for c in trace.cycles if c.index == 7)
    assert any("AK" in " ".join(c.ops) for c in trace.cycles if c.index == 8)


def test_camellia_cycle_2_and_4_include_fl():
    trace = run_block(PROFILES["camellia-lu3"], bytes(16), bytes(16))
    by_index = {c.index: " ".join(c.ops) for c in trace.cycles}
    assert "FL" in by_index[2] and "FL-inverse" in by_index[2]
    assert "FL" in by_index[4]
    assert "rounds 16-18" in by_index[6] and "post-whitening" in by_index[6]


def test_setup_traces():
    # each sigma update of the very-long setup spans three ~28 ns cycles
    for variant in ("hc3-verylong", "hc3-extensive"):
        ops = setup_trace(PROFILES[variant])
        for t in range(5):
            per_sigma = [op for op in ops
                         if f"step {t} (" in op.label and " cycle " in op.label]
            assert len(per_sigma) == 3
            assert all(op.ns == 28.0 for op in per_sigma)
    cam_setup = setup_trace(PROFILES["camellia-lu3"])
    assert len(cam_setup) == 2
    assert "2 next rounds" in cam_setup[1].label
    short = setup_trace(PROFILES["hc3-short"])
    assert "K(1)" in short[-1].label and "subkey buffer" in short[-1].label


def test_extensive_critical_path_bounds_clock():
    p = PROFILES["hc3-extensive"]
    assert p.critical_path_ns == 46.0
    assert p.clock_mhz <= p.max_clock_mhz + 1e-9  # 21.73 <= 1000/46


def test_run_block_rejects_unknown_datapath():
    from dataclasses import replace
    broken = replace(PROFILES["hc3-long"], datapath="hc3-nonesuch")
    with pytest.raises(ValueError, match="no executable datapath"):
        run_block(broken, bytes(16), bytes(16))


# --- handshake -------------------------------------------------------------

def run_setup(profile):
    st = initial_state(profile)
    while not st.ready:
        st = step(st)
    return st


def test_start_ignored_during_setup():
    p = PROFILES["hc3-long"]
    st = initial_state(p)
    for _ in range(len(p.setup_schedule) - 1):
        # a START edge leaves the state exactly as a plain tick would
        assert step(st, start_edge=True) == step(st)
        st = step(st, start_edge=True)
        assert not st.ready and not st.work and st.blocks_done == 0
    st = step(st, start_edge=True)
    assert st.ready and not st.work and st.blocks_done == 0


def test_work_pulse_exact_and_blocks_counted():
    for variant, p in PROFILES.items():
        st = run_setup(p)
        for block in range(3):
            st = step(st, start_edge=True)
            pulse = 0
            while st.work:
                pulse += 1
                st = step(st)
            assert pulse == p.work_cycles_per_block, variant
            assert st.blocks_done == block + 1
            assert st.ready


def test_ready_persists_until_reset():
    p = PROFILES["camellia-lu3"]
    st = run_setup(p)
    for _ in range(50):
        st = step(st)
        assert st.ready
    st = step(st, reset_edge=True)
    assert not st.ready
    st = step(st)
    assert st.ready  # setup results retained; one tick to re-arm


def test_reset_during_work_keeps_pulse_exact():
    p = PROFILES["hc3-short"]
    st = run_setup(p)
    st = step(st, start_edge=True)
    pulse = 1
    st = step(st, reset_edge=True)  # mid-block reset
    assert not st.ready
    while st.work:
        pulse += 1
        st = step(st)
    assert pulse == p.work_cycles_per_block
    assert st.blocks_done == 1
    st = step(st)
    assert st.ready


def test_randomized_edges_never_violate_invariants():
    rng = random.Random(0xBEEF)
    p = PROFILES["hc3-verylong"]
    st = initial_state(p)
    ever_ready = False
    prev_work = False
    pulse = 0
    blocks_before = 0
    for _ in range(10_000):
        was_setup = st.phase == archsim.SETUP
        blocks_before = st.blocks_done
        st = step(st, reset_edge=rng.random() < 0.05, start_edge=rng.random() < 0.3)
        ever_ready = ever_ready or st.ready
        assert not (st.work and not ever_ready), "WORK before READY ever rose"
        if was_setup:
            assert st.blocks_done == blocks_before, "setup START changed blocks"
        if st.work:
            pulse += 1
            assert pulse <= p.work_cycles_per_block
        elif prev_work:
            assert pulse == p.work_cycles_per_block, "short WORK pulse"
            pulse = 0
        prev_work = st.work
    assert ever_ready


# --- throughput model and report --------------------------------------------

def test_throughput_model_values():
    # 128 * f / cycles
    assert throughput_model(11.91e6, 8) == pytest.approx(190.56e6)
    assert abs(throughput_model(11.91e6, 8) / 1e6 - 190.0) / 190.0 < 0.005
    assert throughput_model(21.73e6, 7) == pytest.approx(397.3485714e6, rel=1e-6)
    assert abs(throughput_model(21.73e6, 7) / 1e6 - 397.0) / 397.0 < 0.001
    # the short-setup row does not fit the formula; it gets flagged instead
    assert throughput_model(8.05e6, 8) == pytest.approx(128.8e6)


def test_throughput_model_rejects_nonpositive():
    with pytest.raises(ValueError):
        throughput_model(0, 8)
    with pytest.raises(ValueError):
        throughput_model(1e6, 0)
    with pytest.raises(ValueError):
        throughput_model(-5, 3)


def test_throughput_model_scaling():
    rng = random.Random(50)
    for _ in range(100):
        f = rng.uniform(1e6, 5e7)
        c = rng.randrange(1, 32)
        assert throughput_model(2 * f, c) == pytest.approx(2 * throughput_model(f, c))
        assert throughput_model(f, 2 * c) == pytest.approx(throughput_model(f, c) / 2)


def test_report_rows_and_flags():
    rows = report()
    by_label = {r.label: r for r in rows}
    hc3_rows = [r for r in rows if r.cipher == "hc3"]
    cam_rows = [r for r in rows if r.cipher == "camellia"]
    assert len(hc3_rows) == 6   # four projects plus the two published rows
    assert len(cam_rows) == 6   # one project plus five published rows

    assert by_label["hc3-long"].deviation < 0.01
    assert not by_label["hc3-long"].flagged
    assert by_label["hc3-extensive"].deviation < 0.01
    assert not by_label["hc3-extensive"].flagged
    assert by_label["hc3-short"].flagged
    assert by_label["hc3-verylong"].flagged
    assert by_label["camellia-lu3"].flagged
    # published figures are carried verbatim next to the model
    assert by_label["hc3-short"].paper_mbps == 115.0
    assert by_label["hc3-short"].modeled_mbps == pytest.approx(128.8)

    ref = [(r.label, r.paper_mbps) for r in rows if not r.is_model]
    assert ("TOSHIBA high speed", 52.6) in ref
    assert ("TOSHIBA small area", 4.1) in ref
    assert sorted(v for k, v in ref if k.startswith("NTT")) == [
        77.34, 199.46, 211.90, 227.42, 401.89]


def test_render_report_and_csv():
    rows = report()
    text = render_report(rows, cipher="hc3")
    assert "hc3-extensive" in text and "DISCREPANCY" in text
    assert "camellia-lu3" not in text
    csv_text = render_csv(rows)
    lines = csv_text.splitlines()
    assert lines[0].startswith("label,cipher,kind")
    assert len(lines) == 1 + len(rows)
    assert all(line.count(",") == lines[0].count(",") for line in lines)


def test_profile_file_roundtrip():
    for p in PROFILES.values():
        parsed = parse_profile(format_profile(p))
        assert parsed == p


def test_profile_file_overrides_and_errors():
    text = format_profile(PROFILES["hc3-long"]).replace(
        "variant hc3-long", "variant my-board").replace(
        "clock-mhz 11.91", "clock-mhz 10.0")
    prof = parse_profile(text)
    assert prof.variant == "my-board"
    assert prof.datapath == "hc3-long"
    assert prof.clock_mhz == 10.0

    with pytest.raises(ValueError, match="unknown datapath"):
        parse_profile("variant nope\n")
    with pytest.raises(ValueError, match="work-cycles"):
        parse_profile("variant x\ndatapath hc3-long\nwork-cycles 9\n")
    with pytest.raises(ValueError, match="missing 'variant'"):
        parse_profile("datapath hc3-long\n")


def test_profile_file_cipher_mismatch_rejected():
    with pytest.raises(ValueError, match="cipher 'camellia' does not match"):
        parse_profile("variant x\ndatapath hc3-long\ncipher camellia\n")


def test_trace_final_state_is_the_ciphertext():
    for variant, p in PROFILES.items():
        trace = run_block(p, bytes(range(16)), bytes(16))
        assert trace.cycles[-1].state_hex == trace.ciphertext.hex(), variant
