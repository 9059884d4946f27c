from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest

from fundigraph import _kernels_py, kernels

try:
    from fundigraph import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

needs_ext = pytest.mark.skipif(_kernels_c is None, reason="compiled extension not built")


@needs_ext
@pytest.mark.skipif(os.environ.get("FUNDIGRAPH_PURE_PYTHON", "") not in ("", "0"), reason="fallback forced")
def test_compiled_backend_is_default():
    assert kernels.BACKEND == "cython"


@needs_ext
def test_backends_agree():
    rng = random.Random(2024)
    for _ in range(3000):
        n = rng.randint(0, 12)
        f = tuple(rng.randrange(n) for _ in range(n))
        assert _kernels_c.canonical_labeling(f) == _kernels_py.canonical_labeling(f)
        m = rng.randint(0, 5)
        g = tuple(rng.randrange(m) for _ in range(m))
        assert list(_kernels_c.product_successors(f, g)) == list(_kernels_py.product_successors(f, g))


@needs_ext
def test_least_rotation_agree():
    rng = random.Random(1)
    for _ in range(2000):
        seq = [rng.randrange(3) for _ in range(rng.randint(1, 10))]
        a = _kernels_py.least_rotation(seq)
        assert a == _kernels_c.least_rotation(seq)
        rots = [seq[k:] + seq[:k] for k in range(len(seq))]
        assert seq[a:] + seq[:a] == min(rots)


def test_python_least_rotation_brute():
    rng = random.Random(9)
    for _ in range(1000):
        seq = [rng.randrange(2) for _ in range(rng.randint(1, 9))]
        k = _kernels_py.least_rotation(seq)
        assert seq[k:] + seq[:k] == min(seq[j:] + seq[:j] for j in range(len(seq)))


def test_env_forces_fallback():
    env = dict(os.environ, FUNDIGRAPH_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from fundigraph import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_fallback_cli_matches():
    env = dict(os.environ, FUNDIGRAPH_PURE_PYTHON="1")
    cmd = [sys.executable, "-m", "fundigraph", "enumerate", "5"]
    slow = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True).stdout
    fast = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert slow == fast and len(slow.splitlines()) == 47


@needs_ext
def test_benchmark_runs():
    script = os.path.join(os.path.dirname(__file__), "..", "benchmarks", "bench_kernels.py")
    res = subprocess.run([sys.executable, script, "--quick", "--repeat", "1"], capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    assert len(res.stdout.splitlines()) == 5
