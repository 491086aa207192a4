"""Segment tokens and the SCA-style sound-class mapping.

Segments are space-delimited IPA strings ("ʃ", "ai", "tʰ"). Three token
values are reserved and never count as ordinary segments:

    GAP      "-"  alignment placeholder
    MISSING  "?"  unobserved / to-be-predicted cell
    BOUNDARY "∅"  out-of-word position in context tiers
"""

from __future__ import annotations

import logging
import unicodedata
from dataclasses import dataclass, field

log = logging.getLogger("mtt")

GAP = "-"
MISSING = "?"
BOUNDARY = "∅"
RESERVED = (GAP, MISSING, BOUNDARY)

FALLBACK_CLASS = "0"

# Sound classes keyed by class symbol, values are the base characters
# (combining diacritics are stripped before lookup, so plain letters
# suffice). Groupings follow the usual SCA-style coarse categories:
# one symbol per articulation neighbourhood.
_SCA_GROUPS = {
    # vowels
    "A": "aɑɐ",          # open unrounded
    "E": "eɛæəɘɜɞ",      # mid front unrounded + central
    "I": "iɪɨ",          # close front unrounded
    "O": "oɔɒɵ",         # mid/open back rounded
    "U": "uʊʉɯyʏøœɶ",    # close back + front rounded
    # consonants
    "P": "pbɓ",          # labial plosives
    "T": "tdʈɖɗ",        # dental/alveolar plosives
    "K": "kgɡqɢcɟ",      # velar/uvular/palatal plosives
    "C": "ʦʣʧʤʨʥ",       # affricates
    "M": "mɱ",           # labial nasals
    "N": "nŋɲɳɴ",        # other nasals
    "S": "szʃʒʂʐɕʑ",     # sibilants
    "D": "θð",           # dental fricatives
    "B": "fvɸβ",         # labial fricatives
    "G": "xɣχʁ",         # velar/uvular fricatives
    "H": "hɦʔħʕ",        # laryngeals
    "R": "rɾʀɹɽɺɻ",      # rhotics
    "L": "lɭʎʟɫ",        # laterals
    "W": "wʍɰʋ",         # labiovelar approximants
    "J": "jɥ",           # palatal approximants
}

SCA_TABLE = {ch: cls for cls, chars in _SCA_GROUPS.items() for ch in chars}

_warned_unknown: set[str] = set()


@dataclass(frozen=True)
class SoundClassModel:
    """Total mapping from base characters to one-character class symbols."""

    name: str = "sca"
    mapping: dict[str, str] = field(default_factory=lambda: dict(SCA_TABLE))
    fallback: str = FALLBACK_CLASS

    def __post_init__(self):
        for ch, cls in self.mapping.items():
            if len(cls) != 1:
                raise ValueError(f"class symbol for {ch!r} must be one character, got {cls!r}")

    @classmethod
    def sca(cls) -> "SoundClassModel":
        return cls()

    def with_overrides(self, pairs) -> "SoundClassModel":
        """New model with ``pairs`` of (character, class) merged on top."""
        mapping = dict(self.mapping)
        for ch, symbol in pairs:
            mapping[ch] = symbol
        return SoundClassModel(self.name, mapping, self.fallback)


def load_sound_classes(path) -> list[tuple[str, str]]:
    """Read a two-column CHARACTER<TAB>CLASS override file (later rows win)."""
    pairs = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 2 or not cols[0] or len(cols[1]) != 1:
                raise ValueError(
                    f"{path}:{lineno}: expected CHARACTER<TAB>CLASS with a "
                    f"one-character class, got {line!r}")
            pairs.append((cols[0], cols[1]))
    return pairs


def _first_base_char(text: str) -> str | None:
    """First character after stripping combining marks and modifier letters."""
    for ch in unicodedata.normalize("NFD", text):
        cat = unicodedata.category(ch)
        if cat in ("Mn", "Mc", "Me", "Lm", "Sk"):
            continue
        return ch
    return None


def sound_class(segment: str, model: SoundClassModel) -> str:
    """Class symbol for one segment; reserved tokens pass through unchanged."""
    if segment in RESERVED:
        return segment
    base = _first_base_char(segment)
    if base is not None:
        cls = model.mapping.get(base)
        if cls is not None:
            return cls
    if segment not in _warned_unknown:
        _warned_unknown.add(segment)
        log.warning("no sound class for segment %r; using fallback %r",
                    segment, model.fallback)
    return model.fallback
