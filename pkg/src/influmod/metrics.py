"""Agreement between a predicted partition and ground-truth classes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np


class UndefinedPurityError(ValueError):
    """Ground truth has no pair of nodes sharing a class."""


@dataclass(frozen=True)
class PurityReport:
    purity: float
    matched_pairs: int
    max_pairs: int
    community_count: int
    community_sizes: list[int]


def _pairs(counts) -> int:
    counts = np.asarray(counts, dtype=np.int64)
    return int((counts * (counts - 1) // 2).sum())


def purity(assignment, truth) -> PurityReport:
    """Fraction of same-class node pairs that also share a predicted community.

    Pairs are unordered and distinct. Note that putting everything in one
    community scores 1.0, hence ``community_count`` in the report.
    """
    assignment = list(assignment)
    truth = list(truth)
    if len(assignment) != len(truth):
        raise ValueError(f"{len(assignment)} predictions for {len(truth)} labels")
    joint = Counter(zip(assignment, truth))
    by_class = Counter(truth)
    by_community = Counter(assignment)
    max_pairs = _pairs(list(by_class.values()))
    if max_pairs == 0:
        raise UndefinedPurityError("no two nodes share a ground-truth class")
    matched = _pairs(list(joint.values()))
    return PurityReport(
        purity=matched / max_pairs,
        matched_pairs=matched,
        max_pairs=max_pairs,
        community_count=len(by_community),
        community_sizes=[by_community[c] for c in sorted(by_community)],
    )


def confusion_summary(assignment, truth) -> dict:
    """Class counts inside each predicted community, keyed by community."""
    assignment = list(assignment)
    truth = list(truth)
    if len(assignment) != len(truth):
        raise ValueError(f"{len(assignment)} predictions for {len(truth)} labels")
    out: dict = {}
    for comm, cls in zip(assignment, truth):
        out.setdefault(comm, Counter())[cls] += 1
    return {k: dict(out[k]) for k in sorted(out)}
