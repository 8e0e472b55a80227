import random

from flagsplit import _kernels
from flagsplit._kernels import _pure


def test_backend_marker():
    assert _kernels.BACKEND in ("cython", "pure")


def test_backends_agree():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 8)
        v = tuple(rng.randint(-10, 10) for _ in range(n))
        assert _kernels.has_repeat(v) == _pure.has_repeat(v)
        if not _pure.has_repeat(v):
            assert _kernels.inversion_count(v) == _pure.inversion_count(v)
    for lam in ((), (1,), (3, 1), (2, 2, 1), (4, 3, 2, 1), (5, 5)):
        for n in range(1, 6):
            assert _kernels.ssyt_count(lam, n) == _pure.ssyt_count(lam, n)
