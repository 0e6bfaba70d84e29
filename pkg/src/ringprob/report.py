"""Delimited and figure output for spectra and verification reports.

Files are written with fixed figure geometry and pinned PNG metadata so
that identical inputs produce identical bytes.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .rings import FiniteRing, format_element
from .verification import VerificationReport, format_fraction

_PNG_META = {"Software": "ringprob"}

_STATUS_COLORS = {"pass": "#2e7d32", "fail": "#c62828", "skipped": "#9e9e9e"}


def write_spectrum_report(ring: FiniteRing, label: str, spectrum: dict,
                          outdir: Path) -> list[Path]:
    """Write spectrum.csv and spectrum.png under outdir."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "spectrum.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["target", "numerator", "denominator", "probability"])
        for x in ring.elements:
            v = spectrum[x]
            writer.writerow([format_element(x), v.numerator, v.denominator, float(v)])

    png_path = outdir / "spectrum.png"
    n = ring.order
    heights = [float(spectrum[x]) for x in ring.elements]
    fig, ax = plt.subplots(figsize=(max(6.0, min(16.0, 0.4 * n)), 4.0))
    ax.bar(range(n), heights, color="#4878a8")
    ax.set_xlabel("commutator target")
    ax.set_ylabel("probability")
    ax.set_title(f"commutator distribution, {label}")
    if n <= 64:
        ax.set_xticks(range(n))
        ax.set_xticklabels(
            [format_element(x) for x in ring.elements], rotation=90, fontsize=7
        )
    else:
        ax.set_xticks([])
    if n <= 16:
        for i, x in enumerate(ring.elements):
            if spectrum[x]:
                ax.text(i, heights[i], format_fraction(spectrum[x]),
                        ha="center", va="bottom", fontsize=8)
    fig.tight_layout()
    fig.savefig(png_path, dpi=150, metadata=_PNG_META)
    plt.close(fig)
    return [csv_path, png_path]


def write_verification_report(report: VerificationReport, outdir: Path) -> list[Path]:
    """Write claims.csv and claims.png under outdir."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "claims.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["claim", "status", "lhs", "rhs", "detail"])
        for r in report.results:
            writer.writerow(
                [r.claim, r.status, format_fraction(r.lhs), format_fraction(r.rhs), r.detail]
            )

    png_path = outdir / "claims.png"
    rows = list(reversed(report.results))
    fig, ax = plt.subplots(figsize=(8.0, 0.45 * len(rows) + 1.2))
    ax.barh(
        range(len(rows)),
        [1.0] * len(rows),
        color=[_STATUS_COLORS[r.status] for r in rows],
        edgecolor="white",
    )
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels([r.claim for r in rows], fontsize=9)
    ax.set_xlim(0, 1)
    ax.set_xticks([])
    for i, r in enumerate(rows):
        text = r.status
        if r.lhs is not None and r.rhs is not None:
            text += f"  {format_fraction(r.lhs)} vs {format_fraction(r.rhs)}"
        ax.text(0.02, i, text, va="center", ha="left", color="white", fontsize=8)
    ax.set_title(f"identity suite, {report.ring_label}")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150, metadata=_PNG_META)
    plt.close(fig)
    return [csv_path, png_path]
