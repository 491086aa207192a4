"""Matrix-TSV wordlists: one row per cognate set, one column per language.

Cell syntax: space-joined segments for an observed form, "?" for a form
to predict, and the empty string for a language with no data. Tabs are
forbidden inside cells, so no quoting is needed.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .phonology import RESERVED
from .rng import Xorshift64Star

log = logging.getLogger("mtt")


class WordlistError(ValueError):
    """Malformed wordlist document; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name


#: Cell markers; an observed form is a tuple of segment strings.
ABSENT = _Marker("ABSENT")
TO_PREDICT = _Marker("TO_PREDICT")

Cell = "tuple[str, ...] | _Marker"


def is_present(cell) -> bool:
    return isinstance(cell, tuple)


@dataclass(frozen=True)
class CognateSetRow:
    cogid: str
    cells: dict  # language -> Cell, in wordlist language order

    def present_languages(self) -> list[str]:
        return [lang for lang, cell in self.cells.items() if is_present(cell)]


@dataclass(frozen=True)
class Wordlist:
    languages: list[str]
    rows: list[CognateSetRow]


def _parse_cell(text: str, line: int) -> Cell:
    if text == "?":
        return TO_PREDICT
    if text == "":
        return ABSENT
    segments = text.split(" ")
    for seg in segments:
        if seg == "":
            raise WordlistError(f"malformed cell {text!r}: empty segment", line)
        if seg in RESERVED:
            raise WordlistError(
                f"reserved token {seg!r} not allowed inside an observed form", line)
    return tuple(segments)


def parse_wordlist(text: str) -> Wordlist:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # trailing LF
    if not lines:
        raise WordlistError("empty document")

    header = lines[0].split("\t")
    if header[0] != "COGID" or len(header) < 2:
        raise WordlistError("header must be COGID<TAB>lang1<TAB>...", 1)
    languages = header[1:]
    seen = set()
    for lang in languages:
        if not lang:
            raise WordlistError("empty language name in header", 1)
        if lang in seen:
            raise WordlistError(f"duplicate language {lang!r} in header", 1)
        seen.add(lang)

    rows = []
    cogids = set()
    for lineno, line in enumerate(lines[1:], 2):
        cols = line.split("\t")
        if len(cols) != len(header):
            raise WordlistError(
                f"expected {len(header)} columns, got {len(cols)}", lineno)
        cogid = cols[0]
        if not cogid:
            raise WordlistError("empty COGID", lineno)
        if cogid in cogids:
            raise WordlistError(f"duplicate COGID {cogid!r}", lineno)
        cogids.add(cogid)
        cells = {lang: _parse_cell(cell, lineno)
                 for lang, cell in zip(languages, cols[1:])}
        if not any(is_present(c) for c in cells.values()):
            raise WordlistError(f"cognate set {cogid!r} has no observed forms", lineno)
        rows.append(CognateSetRow(cogid, cells))
    return Wordlist(languages, rows)


def _format_cell(cell) -> str:
    if cell is TO_PREDICT:
        return "?"
    if cell is ABSENT:
        return ""
    return " ".join(cell)


def write_wordlist(wordlist: Wordlist) -> str:
    lines = ["COGID\t" + "\t".join(wordlist.languages)]
    for row in wordlist.rows:
        lines.append(row.cogid + "\t" + "\t".join(
            _format_cell(row.cells[lang]) for lang in wordlist.languages))
    return "\n".join(lines) + "\n"


def partition(wordlist: Wordlist, proportion: float, seed: int):
    """Withhold a random share of observed forms for evaluation.

    Selects floor(proportion * N) of the N observed cells, never taking
    the last observed cell of a row. Returns (training, test, solutions):
    training has the selected cells blanked, test keeps only the affected
    rows with the selected cells marked "?", and solutions lists the
    withheld (cogid, language, segments) triples in row order.
    """
    if not 0.0 <= proportion <= 1.0:
        raise ValueError(f"proportion must be in [0, 1], got {proportion}")

    candidates = [(ri, lang)
                  for ri, row in enumerate(wordlist.rows)
                  for lang in wordlist.languages
                  if is_present(row.cells[lang])]
    target = math.floor(proportion * len(candidates))

    rng = Xorshift64Star(seed)
    shuffled = list(candidates)
    rng.shuffle(shuffled)

    remaining = [len(row.present_languages()) for row in wordlist.rows]
    selected = set()
    for ri, lang in shuffled:
        if len(selected) == target:
            break
        if remaining[ri] >= 2:
            selected.add((ri, lang))
            remaining[ri] -= 1
    if len(selected) < target:
        log.warning("partition: selected %d of %d requested cells "
                    "(rows must keep one observed form)", len(selected), target)

    training_rows = []
    test_rows = []
    solutions = []
    for ri, row in enumerate(wordlist.rows):
        masked = [lang for lang in wordlist.languages if (ri, lang) in selected]
        if not masked:
            training_rows.append(row)
            continue
        train_cells = dict(row.cells)
        test_cells = dict(row.cells)
        for lang in masked:
            solutions.append((row.cogid, lang, row.cells[lang]))
            train_cells[lang] = ABSENT
            test_cells[lang] = TO_PREDICT
        training_rows.append(CognateSetRow(row.cogid, train_cells))
        test_rows.append(CognateSetRow(row.cogid, test_cells))

    return (Wordlist(wordlist.languages, training_rows),
            Wordlist(wordlist.languages, test_rows),
            solutions)
