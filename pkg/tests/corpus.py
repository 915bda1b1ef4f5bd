"""Seeded system corpora shared by the unit and acceptance tests."""
import numpy as np

from kaczframe.systems import generate_system


def _dims(seed, n, lo=2, hi=12):
    return np.random.default_rng(seed).integers(lo, hi + 1, size=n)


def banded_corpus():
    """100 spanning systems from the families whose tails are orthonormal."""
    out = []
    for s, d in enumerate(_dims(100, 25)):
        out.append(("onb", generate_system("onb", int(d), int(d), s)))
    for s, d in enumerate(_dims(101, 25)):
        out.append(("perturbed_onb", generate_system("perturbed_onb", int(d), int(d), s)))
    for s, d in enumerate(_dims(102, 25)):
        out.append(("repeated_vector", generate_system("repeated_vector", int(d), int(d) + 1, s)))
    for d in range(2, 27):
        out.append(("remark", generate_system("remark", d, d)))
    return out


def full_corpus():
    """The banded corpus plus redundant and generic random systems."""
    out = banded_corpus()
    for s, d in enumerate(_dims(103, 15)):
        out.append(("parseval_rows", generate_system("parseval_rows", int(d), int(d) + 1 + s % 5, s)))
    for s, d in enumerate(_dims(104, 15)):
        out.append(("random_unit", generate_system("random_unit", int(d), int(d), s)))
    for s, d in enumerate(_dims(105, 15)):
        out.append(("random_unit", generate_system("random_unit", int(d), 2 * int(d), 1000 + s)))
    return out


def random_systems(count=200, seed=2024, max_dim=16, max_count=32):
    """Generic random unit systems (any N, spanning or not) for the engine checks."""
    rng = np.random.default_rng(seed)
    out = []
    for s in range(count):
        d = int(rng.integers(1, max_dim + 1))
        n = int(rng.integers(1, max_count + 1))
        out.append(generate_system("random_unit", d, n, seed + s))
    return out


def conditioned_gaussian(n, seed, max_cond=100.0):
    """Real Gaussian ``n x n`` matrix, redrawn until its condition number is at most ``max_cond``."""
    rng = np.random.default_rng(seed)
    while True:
        a = rng.standard_normal((n, n))
        if np.linalg.cond(a) <= max_cond:
            return a, rng
