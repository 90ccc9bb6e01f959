"""JSON-ready output records.  Exact values travel as decimal strings."""

from fractions import Fraction
from typing import Any

from .haar_mc import SampleEstimate


def rational_record(value: Fraction) -> dict[str, str]:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def parse_rational_record(record: dict[str, str]) -> Fraction:
    return Fraction(int(record["num"]), int(record["den"]))


def estimate_record(est: SampleEstimate) -> dict[str, Any]:
    return {
        "mean": est.mean.real,
        "mean_imag": est.mean.imag,
        "stderr": est.stderr,
        "samples": est.samples,
        "seed": est.seed,
    }
