import io
import json
import subprocess
import sys
import time

import numpy as np
import pytest

from ranmar24 import polyring, verify
from ranmar24.cli import main, stream_filename
from ranmar24.core import Ranmar
from ranmar24.params import R
from ranmar24.polyring import LOW, PolyMod
from ranmar24.seeding import init
from ranmar24.state_io import dumps, load, save


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def ints(text):
    return [int(x) for x in text.split()]


def test_generate_zero_count():
    assert run("generate", "--seed", "1", "--count", "0") == (0, "")


def test_generate_is_deterministic():
    a = run("generate", "--seed", "12345", "--count", "100", "--format", "u24")
    b = run("generate", "--seed", "12345", "--count", "100", "--format", "u24")
    assert a == b and a[0] == 0
    assert ints(a[1]) == Ranmar.from_seed(12345).u24_array(100).tolist()


def test_generate_skip_equals_stepping():
    code, text = run("generate", "--seed", "12345", "--count", "100", "--skip", "1000000")
    assert code == 0
    assert ints(text) == Ranmar.from_seed(12345).u24_array(10**6 + 100)[10**6:].tolist()


def test_generate_accepts_power_forms():
    code, text = run("generate", "--seed", "9", "--count", "3", "--skip", "2^64-1")
    assert code == 0 and len(text.splitlines()) == 3


def test_generate_formats():
    u = Ranmar.from_seed(42).u24_array(5).tolist()
    _, hexes = run("generate", "--seed", "42", "--count", "5", "--format", "hex")
    assert hexes.split() == [f"{x:06x}" for x in u]
    _, floats = run("generate", "--seed", "42", "--count", "5", "--format", "f64")
    vals = floats.split()
    assert [float(x) for x in vals] == [x / 2**24 for x in u]
    assert all(len(v.replace(".", "").lstrip("0").split("e")[0]) <= 17 for v in vals)


def test_generate_crosses_chunk_boundary():
    _, text = run("generate", "--seed", "3", "--count", "70000")
    assert ints(text) == Ranmar.from_seed(3).u24_array(70000).tolist()


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "--seed", "-1", "--count", "5"],
        ["generate", "--seed", "900000001", "--count", "5"],
        ["generate", "--seed", "1", "--count", "5", "--format", "oct"],
        ["generate", "--seed", "x", "--count", "5"],
        ["generate", "--seed", "1", "--count", "-5"],
        ["generate", "--seed", "1", "--count", "5", "--skip", "2^^3"],
        ["streams", "--seed", "1", "--block", "5", "--n", "0", "--out-dir", "."],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv, out=io.StringIO())
    assert exc.value.code == 2


def test_streams_single_file(tmp_path):
    assert run("streams", "--seed", "77", "--block", "10", "--n", "1", "--out-dir", str(tmp_path))[0] == 0
    files = sorted(tmp_path.iterdir())
    assert [f.name for f in files] == [stream_filename(0)]
    assert files[0].read_text() == dumps(init(77))


def test_streams_concatenate_to_base(tmp_path):
    assert run("streams", "--seed", "12345", "--block", "7", "--n", "3", "--out-dir", str(tmp_path))[0] == 0
    joined = []
    for k in range(3):
        joined += Ranmar(load(tmp_path / stream_filename(k))).u24_array(7).tolist()
    assert joined == Ranmar.from_seed(12345).u24_array(21).tolist()


def test_streams_huge_block(tmp_path):
    assert run("streams", "--seed", "1", "--block", "2^120-1", "--n", "4", "--out-dir", str(tmp_path))[0] == 0
    assert len(list(tmp_path.iterdir())) == 4


def test_streams_zero_block(tmp_path):
    assert run("streams", "--seed", "1", "--block", "0", "--n", "2", "--out-dir", str(tmp_path))[0] == 2


def test_streams_unwritable_dir(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _ = run("streams", "--seed", "1", "--block", "5", "--n", "2", "--out-dir", str(blocker / "sub"))
    assert code != 0


def test_jump_command(tmp_path):
    src, dst = tmp_path / "in.state", tmp_path / "out.state"
    save(init(12345), src)
    assert run("jump", "--state", str(src), "--by", "5000", "--out", str(dst))[0] == 0
    ref = Ranmar.from_seed(12345).u24_array(5100)[5000:]
    assert Ranmar(load(dst)).u24_array(100).tolist() == ref.tolist()


def test_jump_command_bad_state(tmp_path):
    src = tmp_path / "bad.state"
    src.write_text("not a state\n")
    assert run("jump", "--state", str(src), "--by", "1", "--out", str(tmp_path / "o"))[0] == 2
    assert run("jump", "--state", str(tmp_path / "missing"), "--by", "1", "--out", str(tmp_path / "o"))[0] == 2


def test_selftest_passes():
    t0 = time.perf_counter()
    code, text = run("selftest")
    assert time.perf_counter() - t0 < 60
    assert code == 0
    assert text.splitlines()[-1] == "all checks passed"
    assert text.count("PASS") == len(verify.CHECKS)


def test_selftest_catches_off_by_one_reduction(monkeypatch):
    # fold the high block one position too low: t^k -> t^(k-96) - t^(k-32)
    def broken(c, e=24):
        mask = (1 << e) - 1
        work = np.asarray(c).astype(np.int64) & mask
        while work.shape[0] > R:
            high = work[R:]
            n = high.shape[0]
            out = np.zeros(max(R, LOW + 1 + n), dtype=np.int64)
            out[:R] = work[:R]
            out[1 : n + 1] += high
            out[LOW + 1 : LOW + 1 + n] -= high
            work = out & mask
        work = np.concatenate([work, np.zeros(R - work.shape[0], dtype=np.int64)])
        return PolyMod(work, e)

    monkeypatch.setattr(polyring, "reduce_trinomial", broken)
    code, text = run("selftest")
    assert code == 1
    assert "FAIL polynomial-oracles" in text
    assert "first divergence at index" in text


def test_bench_report_shape():
    code, text = run("bench", "--count", "100000", "--jumps", "2^64-1,1000", "--repeats", "1")
    assert code == 0
    report = json.loads(text)
    assert report["count"] == 100000
    assert [j["J"] for j in report["jumps"]] == [str(2**64 - 1), "1000"]
    assert report["ratio"] > 0 and report["integer_seconds"] > 0


def test_bench_default_jumps():
    from ranmar24.bench import DEFAULT_JUMPS

    assert DEFAULT_JUMPS == (2**64 - 1, 2**120 - 1)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ranmar24", "generate", "--seed", "1", "--count", "2"],
        capture_output=True, text=True, check=True,
    )
    assert ints(proc.stdout) == Ranmar.from_seed(1).u24_array(2).tolist()
