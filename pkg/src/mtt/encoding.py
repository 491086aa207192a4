"""One-hot encoding of categorical tier frames.

Every tier contributes one block of binary columns, one per category
observed in training (sorted by codepoint). Tiers belonging to the
language being predicted are excluded so its own data never leaks into
its feature matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tiers import TierFrame


@dataclass(frozen=True)
class FeatureVocabulary:
    tiers: list[str]
    categories: dict  # tier -> sorted list of category tokens

    @property
    def width(self) -> int:
        return sum(len(self.categories[t]) for t in self.tiers)

    def block_offsets(self) -> dict:
        offsets, start = {}, 0
        for tier in self.tiers:
            offsets[tier] = start
            start += len(self.categories[tier])
        return offsets


def feature_tiers(frame: TierFrame, target_language: str) -> list[str]:
    if target_language not in frame.tier_language.values():
        raise ValueError(f"unknown target language {target_language!r}")
    return [t for t in frame.tiers if frame.tier_language[t] != target_language]


def encode(frame: TierFrame, target_language: str,
           vocab: FeatureVocabulary | None = None):
    """Binary matrix for the frame with the target's tiers dropped.

    With a reused vocabulary, categories unseen at training time encode
    as an all-zero block. Returns (X, vocab).
    """
    tiers = feature_tiers(frame, target_language)
    if vocab is None:
        vocab = FeatureVocabulary(
            tiers, {t: sorted({r.values[t] for r in frame.records}) for t in tiers})
    elif vocab.tiers != tiers:
        raise ValueError(
            f"vocabulary tiers {vocab.tiers} do not match frame tiers {tiers}")

    offsets = vocab.block_offsets()
    index = {tier: {cat: offsets[tier] + k
                    for k, cat in enumerate(vocab.categories[tier])}
             for tier in tiers}

    X = np.zeros((len(frame.records), vocab.width), dtype=np.uint8)
    for ri, record in enumerate(frame.records):
        for tier in tiers:
            col = index[tier].get(record.values[tier])
            if col is not None:
                X[ri, col] = 1
    return X, vocab


def encode_rows(values_by_tier: dict, n_rows: int, vocab: FeatureVocabulary) -> np.ndarray:
    """Encode column-major tier values (tier -> list of tokens) with ``vocab``."""
    offsets = vocab.block_offsets()
    X = np.zeros((n_rows, vocab.width), dtype=np.uint8)
    for tier in vocab.tiers:
        lookup = {cat: offsets[tier] + k
                  for k, cat in enumerate(vocab.categories[tier])}
        for ri, value in enumerate(values_by_tier[tier]):
            col = lookup.get(value)
            if col is not None:
                X[ri, col] = 1
    return X
