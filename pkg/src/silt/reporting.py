"""Artifact output: CSV summaries and figures for report directories.

The CLI's --report-dir flag lands here.  Everything written is derived from
the same canonical data the JSON serializers use, so the artifacts are
deterministic up to matplotlib's rasterization.
"""

from __future__ import annotations

import csv
import math
import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .derived import StalkSum, degree
from .report import Report

_fmt = StalkSum.format_entry


def ensure_dir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path


def write_report_csv(rep: Report, path: str) -> str:
    """One row per report entry; findings carry their severity label."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["check", "instance", "expected", "got", "pass", "severity"])
        for e in rep.entries:
            w.writerow([e.check, e.instance, repr(e.expected), repr(e.got),
                        "yes" if e.passed else "no", e.severity])
    return path


def _circle_layout(count: int) -> list:
    if count == 1:
        return [(0.0, 0.0)]
    pts = []
    for i in range(count):
        ang = 2 * math.pi * i / count - math.pi / 2
        pts.append((math.cos(ang), math.sin(ang)))
    return pts


def draw_silting_graph(objects: Sequence, arrows: Sequence, path: str,
                       title: str = "") -> str:
    """Exchange graph figure: vertices on a circle, edges labeled by the
    summand removed by the mutation."""
    pos = _circle_layout(len(objects))
    fig, ax = plt.subplots(figsize=(7, 7))
    for a in arrows:
        (x0, y0), (x1, y1) = pos[a["src"]], pos[a["dst"]]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="-|>", color="0.45",
                                    shrinkA=22, shrinkB=22))
        ax.text((x0 + x1) / 2, (y0 + y1) / 2, _fmt(a["removed"]),
                fontsize=7, color="0.35", ha="center", va="center",
                bbox=dict(boxstyle="round,pad=0.1", fc="white", ec="none"))
    for i, obj in enumerate(objects):
        label = "\n".join(_fmt(p) for p in obj)
        ax.text(*pos[i], label, fontsize=8, ha="center", va="center",
                bbox=dict(boxstyle="round,pad=0.35", fc="#eef2fa", ec="#3b5b92"))
    ax.set_title(title or f"exchange graph ({len(objects)} objects)")
    ax.set_xlim(-1.45, 1.45)
    ax.set_ylim(-1.45, 1.45)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def draw_chain_degrees(crep, path: str) -> str:
    """Degree diagram of a complement chain: index on the x axis, cohomology
    degree on the y axis, with the ambient window band and the realizable
    run highlighted."""
    chain = crep.chain
    idx = list(chain.indices())
    degs = [degree(chain.entries[j]) for j in idx]
    run = set(range(crep.start_index, crep.start_index + len(crep.members)))

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.axhspan(-0.5 + 0, crep.m + 0.5, color="#f2f7ee", zorder=0,
               label=f"window degrees 0..{crep.m}")
    ax.plot(idx, degs, color="0.6", lw=1, zorder=1)
    for j, dg in zip(idx, degs):
        inside = j in run
        ax.scatter([j], [dg], s=70 if inside else 40,
                   color="#3b5b92" if inside else "0.55", zorder=2)
        ax.annotate(_fmt(chain.entries[j]), (j, dg),
                    textcoords="offset points", xytext=(0, 9),
                    fontsize=7, ha="center")
    ax.set_xlabel("chain index j")
    ax.set_ylabel("degree of the complement")
    ax.set_title(f"complement chain over {crep.core.pretty()} "
                 f"(m={crep.m}, t={crep.t})")
    ax.set_xticks(idx)
    ax.yaxis.get_major_locator().set_params(integer=True)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
