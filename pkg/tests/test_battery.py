import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from scipy.stats import chi2

from nondedekind.errors import DomainError
from nondedekind.randomness import BatteryConfig, battery, battery_many, read_bits

NAMES = [
    "monobit",
    "block_frequency_8",
    "block_frequency_32",
    "block_frequency_128",
    "runs",
    "longest_run",
    "serial_delta1",
    "serial_delta2",
    "autocorrelation_1",
]


def prng_bits(seed, n):
    return format(random.Random(seed).getrandbits(n), f"0{n}b")


def test_alternating_fails_serial():
    report = battery("01" * 512)
    assert not report["serial_delta1"].passed
    assert not report["autocorrelation_1"].passed
    assert report["monobit"].passed


def test_zeros_fail_monobit():
    report = battery("0" * 1024)
    assert not report["monobit"].passed
    assert report["monobit"].statistic == 1024
    assert report.verdict.startswith("rejected by: monobit")


def test_seeded_sample_passes():
    report = battery(prng_bits(1, 4096))
    assert report.passed, report.failed
    assert report.verdict == "no test in this battery rejects"
    assert [r.name for r in report.records] == NAMES


def test_short_sample():
    with pytest.raises(DomainError):
        battery("01" * 63)


def test_read_bits_ignores_whitespace():
    assert read_bits(" 01\n1 0\t").digits == (0, 1, 1, 0)
    with pytest.raises(DomainError):
        read_bits("0120")


def test_monobit_statistic_by_hand():
    # 96 ones, 32 zeros: S = 64, S^2 / n = 32
    report = battery("1" * 96 + "0" * 32)
    assert report["monobit"].statistic == 32


def test_runs_prerequisite():
    report = battery("1" * 100 + "0" * 28)
    assert report["runs"].statistic is None and not report["runs"].passed


def test_block_longer_than_sample():
    report = battery(prng_bits(3, 128), BatteryConfig(block_sizes=(256,)))
    rec = report["block_frequency_256"]
    assert rec.statistic is None and not rec.passed


def test_thresholds_are_chi_square_quantiles():
    report = battery(prng_bits(2, 1024))
    for rec in report.records:
        if rec.statistic is not None:
            assert abs(float(rec.threshold) - chi2.isf(0.01, rec.dof)) < 1e-6


@pytest.mark.parametrize(
    "kwargs", [{"alpha": "0"}, {"alpha": "1"}, {"block_sizes": (0,)}, {"serial_m": 1}, {"autocorrelation_lag": 0}]
)
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        BatteryConfig(**kwargs)


def test_json_is_exact_strings():
    out = battery("0" * 1024).to_json()
    assert out["tests"][0] == {
        "name": "monobit",
        "statistic": "1024",
        "threshold": "6634897/1000000",
        "dof": 1,
        "result": "fail",
    }
    assert out["passed"] is False


def test_parallel_matches_serial():
    samples = [prng_bits(s, 512) for s in range(4)]
    assert battery_many(samples, jobs=2) == battery_many(samples, jobs=1)


@settings(max_examples=20)
@given(st.integers(0, 2**32), st.integers(128, 600))
def test_deterministic(seed, n):
    bits = prng_bits(seed, n)
    assert battery(bits) == battery(bits)
    assert all(rec.statistic is None or rec.statistic >= 0 for rec in battery(bits).records)


def test_exact_statistics_are_fractions():
    for rec in battery(prng_bits(5, 256)).records:
        assert rec.statistic is None or isinstance(rec.statistic, Fraction)
