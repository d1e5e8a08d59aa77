"""Selftest report artifacts: a delimited summary plus rendered figures.

Kept separate from the oracle suites so the library never touches
matplotlib unless a report directory is actually requested.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .groupterm import A5, GammaFP, MFP, Wreath, Z, depth
from .oracle import ArithmeticOracleReport, TermEnumerationReport
from .ordinal import div_omega

SUMMARY_NAME = "selftest_summary.csv"
DISTRIBUTION_NAME = "depth_distribution.png"
LADDER_NAME = "depth_ladders.png"


def write_report(directory: str | Path,
                 arithmetic: ArithmeticOracleReport,
                 enumeration: TermEnumerationReport,
                 ladder_steps: int = 8) -> list[Path]:
    """Write the CSV summary and both figures; returns the created paths."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = [
        _write_summary(out, arithmetic, enumeration),
        _write_distribution(out, enumeration),
        _write_ladders(out, ladder_steps),
    ]
    return paths


def _write_summary(out: Path, arithmetic: ArithmeticOracleReport,
                   enumeration: TermEnumerationReport) -> Path:
    path = out / SUMMARY_NAME
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["suite", "cases", "violations", "ok"])
        arith_bad = 0 if arithmetic.ok else 1
        writer.writerow(["arithmetic", arithmetic.case_pairs + arithmetic.mul_cases,
                         arith_bad, str(arithmetic.ok).lower()])
        writer.writerow(["enumeration", enumeration.terms_checked,
                         len(enumeration.violations), str(enumeration.ok).lower()])
    return path


def _figure():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save(fig, path: Path) -> None:
    # strip the library version stamp so repeated runs agree byte for byte
    fig.savefig(path, dpi=130, metadata={"Software": None})


def _write_distribution(out: Path, enumeration: TermEnumerationReport) -> Path:
    plt = _figure()
    histogram = sorted(enumeration.outcome_histogram.items(),
                       key=lambda kv: (-kv[1], kv[0]))[:14]
    labels = [k for k, _ in histogram]
    counts = [v for _, v in histogram]
    fig, ax = plt.subplots(figsize=(8, 4.2))
    ax.bar(range(len(labels)), counts, color="#3b6ea5")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("terms")
    ax.set_title(f"depth outcomes over {enumeration.terms_checked} enumerated terms "
                 f"(height <= {enumeration.height})")
    fig.tight_layout()
    path = out / DISTRIBUTION_NAME
    _save(fig, path)
    plt.close(fig)
    return path


def _write_ladders(out: Path, steps: int) -> Path:
    """The three certified ladders climbing w*n: iterated wreath products,
    the finitely presented family, and its central-extension companion."""
    plt = _figure()
    ns = list(range(1, steps + 1))

    tower: list[int] = []
    term = Z()
    for n in ns:
        value = depth(term)[0].value
        tower.append(div_omega(value).to_int())
        term = Wreath(A5(), term)
    gamma = [div_omega(depth(GammaFP(n))[0].value).to_int() for n in ns]
    mfp = [div_omega(depth(MFP(n, 3))[0].value.predecessor()).to_int() for n in ns]

    fig, ax = plt.subplots(figsize=(6.2, 4.2))
    ax.plot(ns, tower, "o-", label="iterated wreath tower: depth w*n")
    ax.plot(ns, gamma, "s--", label="Gamma(n): depth w*n")
    ax.plot(ns, mfp, "^:", label="M(n, 3): depth w*n + 1")
    ax.set_xlabel("n")
    ax.set_ylabel("coefficient of w in the certified depth")
    ax.set_title("certified depth ladders")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = out / LADDER_NAME
    _save(fig, path)
    plt.close(fig)
    return path
