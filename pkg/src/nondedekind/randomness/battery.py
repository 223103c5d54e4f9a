"""Statistical proxy battery for binary samples.

None of these tests decides Martin-Lof randomness, which is not
computable. A passing report only says that no test here rejects the
sample. Each statistic is an exact rational compared against a chi-square
critical value for the configured significance level.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from scipy.stats import chi2

from ..errors import DomainError
from ..sequences import DigitString, format_rational

__all__ = [
    "BatteryConfig",
    "TestRecord",
    "RandomnessReport",
    "battery",
    "battery_many",
    "read_bits",
    "MIN_LENGTH",
]

MIN_LENGTH = 128

# Longest run of ones within M-bit blocks: (M, class edges, class probabilities),
# from the NIST SP 800-22 tables.
_LONGEST_RUN_TABLES = (
    (6272, 8, (1, 2, 3, 4), ("0.2148", "0.3672", "0.2305", "0.2031")),
    (750000, 128, (4, 5, 6, 7, 8, 9), ("0.1174", "0.2430", "0.2493", "0.1752", "0.1027", "0.1124")),
)


@dataclass(frozen=True)
class BatteryConfig:
    alpha: str = "0.01"
    block_sizes: tuple[int, ...] = (8, 32, 128)
    serial_m: int = 3
    autocorrelation_lag: int = 1

    def __post_init__(self):
        a = Fraction(self.alpha)
        if not 0 < a < 1:
            raise DomainError("alpha must lie in (0, 1)")
        if any(m < 1 for m in self.block_sizes):
            raise DomainError("block sizes must be positive")
        if self.serial_m < 2:
            raise DomainError("serial test needs m >= 2")
        if self.autocorrelation_lag < 1:
            raise DomainError("autocorrelation lag must be >= 1")


@dataclass(frozen=True)
class TestRecord:
    __test__ = False  # keep pytest from collecting this

    name: str
    statistic: Optional[Fraction]
    threshold: Fraction
    dof: int
    passed: bool
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "statistic": None if self.statistic is None else format_rational(self.statistic),
            "threshold": format_rational(self.threshold),
            "dof": self.dof,
            "result": "pass" if self.passed else "fail",
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class RandomnessReport:
    length: int
    alpha: str
    records: tuple[TestRecord, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failed(self) -> list[str]:
        return [r.name for r in self.records if not r.passed]

    @property
    def verdict(self) -> str:
        if self.passed:
            return "no test in this battery rejects"
        return "rejected by: " + ", ".join(self.failed)

    def __getitem__(self, name: str) -> TestRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "alpha": self.alpha,
            "tests": [r.to_json() for r in self.records],
            "passed": self.passed,
            "verdict": self.verdict,
        }


def read_bits(text: str) -> DigitString:
    """ASCII ``0``/``1`` with all whitespace ignored."""
    cleaned = "".join(text.split())
    bad = set(cleaned) - {"0", "1"}
    if bad:
        raise DomainError(f"bit samples may only contain 0 and 1, found {sorted(bad)}")
    return DigitString(2, tuple(int(c) for c in cleaned))


def _critical(alpha: str, dof: int) -> Fraction:
    # upper-tail chi-square quantile, fixed to 6 decimals so reports are stable
    return Fraction(f"{chi2.isf(float(Fraction(alpha)), dof):.6f}")


def _record(name: str, stat: Fraction, dof: int, alpha: str) -> TestRecord:
    t = _critical(alpha, dof)
    return TestRecord(name, stat, t, dof, stat <= t)


def _monobit(bits: Sequence[int], alpha: str) -> TestRecord:
    n = len(bits)
    s = 2 * sum(bits) - n
    return _record("monobit", Fraction(s * s, n), 1, alpha)


def _block_frequency(bits: Sequence[int], m: int, alpha: str) -> TestRecord:
    n_blocks = len(bits) // m
    name = f"block_frequency_{m}"
    if n_blocks == 0:
        return TestRecord(name, None, Fraction(0), 0, False, "block longer than sample")
    total = Fraction(0)
    for i in range(n_blocks):
        ones = sum(bits[i * m : (i + 1) * m])
        total += (Fraction(ones, m) - Fraction(1, 2)) ** 2
    return _record(name, 4 * m * total, n_blocks, alpha)


def _runs(bits: Sequence[int], alpha: str) -> TestRecord:
    n = len(bits)
    pi = Fraction(sum(bits), n)
    # frequency prerequisite |pi - 1/2| < 2/sqrt(n), squared
    if (pi - Fraction(1, 2)) ** 2 >= Fraction(4, n):
        return TestRecord("runs", None, _critical(alpha, 1), 1, False, "frequency prerequisite failed")
    v = 1 + sum(1 for a, b in zip(bits, bits[1:]) if a != b)
    q = pi * (1 - pi)
    stat = (v - 2 * n * q) ** 2 / (4 * n * q * q)
    return _record("runs", stat, 1, alpha)


def _longest_run(bits: Sequence[int], alpha: str) -> TestRecord:
    n = len(bits)
    for limit, m, edges, probs in _LONGEST_RUN_TABLES:
        if n < limit:
            break
    n_blocks = n // m
    counts = [0] * len(edges)
    for i in range(n_blocks):
        best = run = 0
        for b in bits[i * m : (i + 1) * m]:
            run = run + 1 if b else 0
            best = max(best, run)
        k = 0
        while k < len(edges) - 1 and best > edges[k]:
            k += 1
        counts[k] += 1
    stat = Fraction(0)
    for v, p in zip(counts, probs):
        expected = n_blocks * Fraction(p)
        stat += (v - expected) ** 2 / expected
    return _record("longest_run", stat, len(edges) - 1, alpha)


def _psi_sq(bits: Sequence[int], m: int) -> Fraction:
    if m == 0:
        return Fraction(0)
    n = len(bits)
    ext = list(bits) + list(bits[: m - 1])
    counts: Counter = Counter(tuple(ext[i : i + m]) for i in range(n))
    return Fraction(2**m, n) * sum(c * c for c in counts.values()) - n


def _serial(bits: Sequence[int], m: int, alpha: str) -> list[TestRecord]:
    p0, p1, p2 = _psi_sq(bits, m), _psi_sq(bits, m - 1), _psi_sq(bits, m - 2)
    return [
        _record("serial_delta1", p0 - p1, 2 ** (m - 1), alpha),
        _record("serial_delta2", p0 - 2 * p1 + p2, 2 ** (m - 2), alpha),
    ]


def _autocorrelation(bits: Sequence[int], lag: int, alpha: str) -> TestRecord:
    k = len(bits) - lag
    a = sum(1 for i in range(k) if bits[i] != bits[i + lag])
    return _record(f"autocorrelation_{lag}", Fraction((2 * a - k) ** 2, k), 1, alpha)


def battery(sample: Union[DigitString, str, Sequence[int]], config: Optional[BatteryConfig] = None) -> RandomnessReport:
    """Run every test of the battery on a binary sample of length >= 128."""
    config = config or BatteryConfig()
    if isinstance(sample, str):
        sample = read_bits(sample)
    elif not isinstance(sample, DigitString):
        sample = DigitString(2, tuple(sample))
    if sample.base != 2:
        raise DomainError("the battery reads binary samples")
    bits = sample.digits
    if len(bits) < MIN_LENGTH:
        raise DomainError(f"sample too short: {len(bits)} < {MIN_LENGTH}")

    alpha = config.alpha
    records = [_monobit(bits, alpha)]
    records += [_block_frequency(bits, m, alpha) for m in config.block_sizes]
    records.append(_runs(bits, alpha))
    records.append(_longest_run(bits, alpha))
    records += _serial(bits, config.serial_m, alpha)
    records.append(_autocorrelation(bits, config.autocorrelation_lag, alpha))
    return RandomnessReport(len(bits), alpha, tuple(records))


def _job(args):
    sample, config = args
    return battery(sample, config)


def battery_many(samples: Iterable, config: Optional[BatteryConfig] = None, jobs: int = 1) -> list[RandomnessReport]:
    """Run :func:`battery` over several samples, optionally in worker processes."""
    config = config or BatteryConfig()
    samples = list(samples)
    if jobs <= 1 or len(samples) <= 1:
        return [battery(s, config) for s in samples]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_job, [(s, config) for s in samples]))
