"""Site frames: transposed alignments extended with informational tiers.

Each alignment column becomes one record. Base tiers hold the per-language
segments; extension adds positional tiers (index / rindex), sound-class
tiers, and context-shifted copies of both. A shifted tier reads the value
``offset`` sites away inside the same cognate set, or "∅" past either
edge of the alignment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby

from .alignment import AlignmentMatrix
from .phonology import BOUNDARY, SoundClassModel, sound_class

MAX_OFFSET = 4


@dataclass(frozen=True)
class TierSpec:
    """Which tiers to generate; offsets are signed site distances."""

    offsets: tuple[int, ...] = (-2, -1, 1, 2)
    positional: tuple[str, ...] = ("index", "rindex")
    with_sound_class: bool = True

    def __post_init__(self):
        if 0 in self.offsets:
            raise ValueError("offset 0 is the base tier itself")
        if any(abs(k) > MAX_OFFSET for k in self.offsets):
            raise ValueError(f"offsets must satisfy |k| <= {MAX_OFFSET}")
        if len(set(self.offsets)) != len(self.offsets):
            raise ValueError("duplicate offsets")
        for name in self.positional:
            if name not in ("index", "rindex"):
                raise ValueError(f"unknown positional tier {name!r}")

    @property
    def base_tiers(self) -> tuple[str, ...]:
        return ("segment", "sc") if self.with_sound_class else ("segment",)


def tier_name(language: str, base: str, offset: int = 0) -> str:
    if offset == 0:
        return f"{language}:{base}"
    side = "L" if offset < 0 else "R"
    return f"{language}:{base}:{side}{abs(offset)}"


@dataclass(frozen=True)
class SiteRecord:
    site_id: int      # global, 1-based, in frame order
    cogid: str
    site_index: int   # 1-based position within its alignment
    values: dict      # tier name -> token


@dataclass(frozen=True)
class TierFrame:
    tiers: list[str]
    records: list[SiteRecord]
    tier_language: dict = field(default_factory=dict)  # tier name -> language or None

    def column(self, tier: str) -> list[str]:
        return [record.values[tier] for record in self.records]

    def by_cogid(self):
        """(cogid, records) runs in frame order; records sorted by site_index."""
        return [(cogid, list(run))
                for cogid, run in groupby(self.records, key=lambda r: r.cogid)]


def transpose(alignments: list[AlignmentMatrix]) -> TierFrame:
    """Join alignments into one frame of per-language segment tiers."""
    if not alignments:
        raise ValueError("no alignments to transpose")
    languages = alignments[0].languages
    tiers = [tier_name(lang, "segment") for lang in languages]
    tier_language = dict(zip(tiers, languages))

    records = []
    site_id = 0
    for alignment in alignments:
        if alignment.languages != languages:
            raise ValueError(
                f"alignment {alignment.cogid!r} has languages "
                f"{alignment.languages}, expected {languages}")
        for pos in range(alignment.length):
            site_id += 1
            values = {tier_name(lang, "segment"): alignment.rows[li][pos]
                      for li, lang in enumerate(languages)}
            records.append(SiteRecord(site_id, alignment.cogid, pos + 1, values))
    return TierFrame(tiers, records, tier_language)


def extend(frame: TierFrame, spec: TierSpec, model: SoundClassModel) -> TierFrame:
    """Full tier set from a frame's base segment tiers.

    Reads only the ``<language>:segment`` tiers, so re-running on an
    already extended frame reproduces it.
    """
    languages = [lang for tier, lang in frame.tier_language.items()
                 if lang is not None and tier == tier_name(lang, "segment")]
    if not languages:
        raise ValueError("frame has no base segment tiers")

    tiers = list(spec.positional)
    tier_language = {name: None for name in spec.positional}
    for lang in languages:
        for base in spec.base_tiers:
            for offset in (0, *sorted(spec.offsets)):
                name = tier_name(lang, base, offset)
                tiers.append(name)
                tier_language[name] = lang

    records = []
    for cogid, run in frame.by_cogid():
        length = len(run)
        segments = {lang: [r.values[tier_name(lang, "segment")] for r in run]
                    for lang in languages}
        classes = {lang: [sound_class(seg, model) for seg in segments[lang]]
                   for lang in languages}
        base_values = {"segment": segments, "sc": classes}

        for pos, record in enumerate(run):
            values = {}
            if "index" in spec.positional:
                values["index"] = str(record.site_index)
            if "rindex" in spec.positional:
                values["rindex"] = str(length - record.site_index + 1)
            for lang in languages:
                for base in spec.base_tiers:
                    column = base_values[base][lang]
                    for offset in (0, *sorted(spec.offsets)):
                        shifted = pos + offset
                        token = (column[shifted] if 0 <= shifted < length
                                 else BOUNDARY)
                        values[tier_name(lang, base, offset)] = token
            records.append(SiteRecord(record.site_id, cogid, record.site_index, values))
    return TierFrame(tiers, records, tier_language)


def frame_to_tsv(frame: TierFrame) -> str:
    lines = ["\t".join(frame.tiers)]
    for record in frame.records:
        lines.append("\t".join(record.values[tier] for tier in frame.tiers))
    return "\n".join(lines) + "\n"
