"""Sound-class-aware multiple sequence alignment of cognate sets.

Pairwise alignment is global dynamic programming; multi-way alignment is
progressive, merging each observed form into a growing profile in
wordlist column order. Languages without an observed form get all-"?"
rows of the final alignment length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .phonology import GAP, MISSING, SoundClassModel, sound_class
from .wordlist import CognateSetRow, is_present

_DIAG, _GAP_B, _GAP_A = 0, 1, 2


@dataclass(frozen=True)
class ScoringScheme:
    """Segment-pair scores; gaps are linear."""

    match_identical: int = 2
    match_class: int = 1
    mismatch: int = -1
    gap: int = -1

    def __post_init__(self):
        if not (self.match_identical >= self.match_class > self.mismatch):
            raise ValueError("need match_identical >= match_class > mismatch")
        if self.gap >= self.match_class:
            raise ValueError("need gap < match_class")

    def score(self, a: str, b: str, model: SoundClassModel) -> int:
        if a == b:
            return self.match_identical
        if sound_class(a, model) == sound_class(b, model):
            return self.match_class
        return self.mismatch


@dataclass(frozen=True)
class AlignmentMatrix:
    """Equal-length token rows, one per language, for one cognate set."""

    cogid: str
    languages: list[str]
    rows: list[list[str]]  # parallel to languages

    @property
    def length(self) -> int:
        return len(self.rows[0])

    def row(self, language: str) -> list[str]:
        return self.rows[self.languages.index(language)]


def _align_path(n_a: int, n_b: int, pair_score, gap_score: float):
    """Optimal global alignment path via suffix DP.

    The path is read out walking forward from the start; at score ties
    the move priority is diagonal, then gap-in-b, then gap-in-a. Applied
    from the front this places residues as far left as possible.
    Returns (moves, total score).
    """
    # S[i][j] = best score aligning a[i:] vs b[j:]
    S = [[0.0] * (n_b + 1) for _ in range(n_a + 1)]
    for i in range(n_a - 1, -1, -1):
        S[i][n_b] = S[i + 1][n_b] + gap_score
    for j in range(n_b - 1, -1, -1):
        S[n_a][j] = S[n_a][j + 1] + gap_score
    for i in range(n_a - 1, -1, -1):
        row, below = S[i], S[i + 1]
        for j in range(n_b - 1, -1, -1):
            best = pair_score(i, j) + below[j + 1]
            cand = below[j] + gap_score
            if cand > best:
                best = cand
            cand = row[j + 1] + gap_score
            if cand > best:
                best = cand
            row[j] = best

    moves = []
    i = j = 0
    while i < n_a or j < n_b:
        here = S[i][j]
        if i < n_a and j < n_b and pair_score(i, j) + S[i + 1][j + 1] == here:
            moves.append(_DIAG)
            i += 1
            j += 1
        elif i < n_a and S[i + 1][j] + gap_score == here:
            moves.append(_GAP_B)
            i += 1
        else:
            moves.append(_GAP_A)
            j += 1
    return moves, S[0][0]


def pairwise_align(a, b, scheme: ScoringScheme, model: SoundClassModel):
    """Globally align two segment sequences; returns (aligned_a, aligned_b, score)."""
    if not a or not b:
        raise ValueError("cannot align an empty sequence")
    moves, score = _align_path(
        len(a), len(b), lambda i, j: scheme.score(a[i], b[j], model), scheme.gap)
    score = int(score)  # sums of integer scores are exact in float
    out_a, out_b = [], []
    i = j = 0
    for move in moves:
        if move == _DIAG:
            out_a.append(a[i])
            out_b.append(b[j])
            i += 1
            j += 1
        elif move == _GAP_B:
            out_a.append(a[i])
            out_b.append(GAP)
            i += 1
        else:
            out_a.append(GAP)
            out_b.append(b[j])
            j += 1
    return out_a, out_b, score


def _profile_column_score(column, token, scheme, model) -> float:
    """Mean score of ``token`` against the column's non-gap residues."""
    scores = [scheme.score(residue, token, model)
              for residue in column if residue != GAP]
    if not scores:
        return float(scheme.gap)
    return sum(scores) / len(scores)


def _merge_into_profile(profile, seq, scheme, model):
    """Align ``seq`` against the columns of ``profile`` and merge it in."""
    columns = list(zip(*profile))
    moves, _ = _align_path(
        len(columns), len(seq),
        lambda i, j: _profile_column_score(columns[i], seq[j], scheme, model),
        float(scheme.gap))
    merged = [[] for _ in range(len(profile) + 1)]
    i = j = 0
    for move in moves:
        if move == _DIAG:
            for row, out in zip(profile, merged):
                out.append(row[i])
            merged[-1].append(seq[j])
            i += 1
            j += 1
        elif move == _GAP_B:  # profile column vs gap in the new row
            for row, out in zip(profile, merged):
                out.append(row[i])
            merged[-1].append(GAP)
            i += 1
        else:  # new column: gap in every earlier row
            for out in merged[:-1]:
                out.append(GAP)
            merged[-1].append(seq[j])
            j += 1
    return merged


def msa(row: CognateSetRow, scheme: ScoringScheme, model: SoundClassModel) -> AlignmentMatrix:
    """Progressively align one cognate set's observed forms."""
    present = [(lang, list(cell)) for lang, cell in row.cells.items()
               if is_present(cell)]
    if not present:
        raise ValueError(f"cognate set {row.cogid!r} has no observed forms")

    profile = [present[0][1]]
    for _, seq in present[1:]:
        profile = _merge_into_profile(profile, seq, scheme, model)

    length = len(profile[0])
    aligned = dict(zip((lang for lang, _ in present), profile))
    languages = list(row.cells)
    rows = [aligned.get(lang, [MISSING] * length) for lang in languages]
    return AlignmentMatrix(row.cogid, languages, rows)
