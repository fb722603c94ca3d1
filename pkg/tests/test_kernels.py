import random

import pytest

from gaussquartic import _pykernels, kernels
from gaussquartic.gaussian import GaussianInt as G, sqrt_exact

compiled = pytest.mark.skipif(kernels._c is None, reason="compiled kernels not built")


def test_python_is_square_matches_sqrt_exact():
    rng = random.Random(1)
    for _ in range(5000):
        p, q = rng.randint(-400, 400), rng.randint(-400, 400)
        if rng.random() < 0.3:
            s = G(rng.randint(-20, 20), rng.randint(-20, 20))
            p, q = (s * s).re, (s * s).im
        assert _pykernels.is_square(p, q) == (sqrt_exact(G(p, q)) is not None)


@compiled
def test_compiled_is_square_matches_python():
    rng = random.Random(2)
    # norms stay below 2**61, the documented range of the compiled kernel
    for _ in range(20000):
        s = G(rng.randint(-20000, 20000), rng.randint(-20000, 20000))
        sq = s * s
        for p, q in ((sq.re, sq.im), (sq.re + 1, sq.im), (rng.randint(-10**9, 10**9), 0)):
            assert kernels._c.is_square(p, q) == _pykernels.is_square(p, q)


@compiled
def test_compiled_hits_match_python():
    rng = random.Random(3)
    for _ in range(40):
        a = (rng.randint(-5, 5), rng.randint(-5, 5))
        b = (rng.randint(-5, 5), rng.randint(-5, 5))
        d = (rng.randint(1, 6), rng.randint(0, 6))
        v = rng.choice([(1, 0), (0, 1), (-1, 0), (0, -1)])
        h = rng.randint(1, 12)
        assert kernels.square_class_hits(a, b, d, v, h, backend="compiled") == \
            kernels.square_class_hits(a, b, d, v, h, backend="python")


@compiled
def test_compiled_quartic_box_matches_python():
    for eps in (1, -1):
        for c in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            assert kernels.quartic_box_solutions(eps, c, 3, backend="compiled") == \
                kernels.quartic_box_solutions(eps, c, 3, backend="python")


def test_large_values_route_to_python(monkeypatch):
    calls = []
    real = _pykernels.square_class_hits

    def spy(*args):
        calls.append(args)
        return real(*args)

    monkeypatch.setattr(_pykernels, "square_class_hits", spy)
    # |B| near 10^12 would overflow int64 inside the compiled loop
    kernels.square_class_hits((0, 0), (10**12, 0), (1, 0), (1, 0), 2)
    assert calls


def test_backend_selection():
    assert kernels.BACKEND in ("compiled", "python")
    with pytest.raises(ValueError):
        kernels.square_class_hits((0, 0), (1, 0), (1, 0), (1, 0), 1, backend="fortran")


def test_benchmark_script_runs():
    import subprocess
    import sys
    from pathlib import Path

    script = Path(__file__).resolve().parent.parent / "bench" / "benchmark.py"
    out = subprocess.run(
        [sys.executable, str(script), "--height", "4", "--box", "1", "--repeat", "1"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert "python" in out and "point search" in out
