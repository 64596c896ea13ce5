"""Empirical distributions: length spectra, rank-frequency, coverage.

Length spectra give the fraction of word-forms per length in letters,
phonemes or syllables.  Syllables are counted as vowel nuclei, so forms
without a vowel (б, ж, в) have length zero and the syllable spectrum has
mass at the origin.  Phoneme counts come from ordered longest-match
rewrite rules over graphemes, shipped as data with a default of one
phoneme per letter.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ResourceFormatError, RuleGapError, ValidationError
from .lexicon import FormLexicon, LemmaLexicon

DEFAULT_UK_VOWELS = frozenset("аеиіоуяюєї")


def count_letters(form: str) -> int:
    """Number of alphabetic characters; digits and marks do not count."""
    return sum(1 for ch in form if ch.isalpha())


def count_syllables(form: str, vowels: frozenset[str] = DEFAULT_UK_VOWELS) -> int:
    """Number of vowel nuclei; zero for non-syllabic forms."""
    folded = form.casefold()
    return sum(1 for ch in folded if ch in vowels)


@dataclass(frozen=True)
class G2PRules:
    """Ordered grapheme rewrite rules mapping onto phoneme-count deltas.

    At each position the longest matching grapheme wins (first rule listed
    on ties).  Unmatched characters consume ``default_delta`` phonemes; with
    no default, an unmatched character is an error.
    """

    rules: tuple[tuple[str, int], ...]
    default_delta: int | None = 1


DEFAULT_G2P_RESOURCE = "uk_g2p.tsv"


def count_phonemes(form: str, rules: G2PRules) -> int:
    """Apply rewrite rules longest-match-first, consuming each letter once."""
    by_length = sorted(rules.rules, key=lambda r: -len(r[0]))
    total = 0
    i = 0
    n = len(form)
    folded = form.casefold()
    while i < n:
        for grapheme, delta in by_length:
            if folded.startswith(grapheme, i):
                total += delta
                i += len(grapheme)
                break
        else:
            if rules.default_delta is None:
                raise RuleGapError(
                    f"no rewrite rule for character {form[i]!r} and no default set"
                )
            total += rules.default_delta
            i += 1
    return total


def read_g2p_rules(path: str | Path, default_delta: int | None = 1) -> G2PRules:
    """Read rewrite rules from a TSV file of ``grapheme<TAB>delta`` lines."""
    rules = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise ResourceFormatError(path, line_no, "expected grapheme<TAB>delta")
            grapheme = fields[0]
            try:
                delta = int(fields[1])
            except ValueError:
                raise ResourceFormatError(path, line_no, f"bad delta {fields[1]!r}") from None
            if not grapheme or delta < 0:
                raise ResourceFormatError(path, line_no, "empty grapheme or negative delta")
            rules.append((grapheme.casefold(), delta))
    return G2PRules(tuple(rules), default_delta)


def load_default_g2p() -> G2PRules:
    """Rules shipped with the package (Ukrainian digraphs and silent marks)."""
    source = resources.files("textlaws").joinpath(f"data/{DEFAULT_G2P_RESOURCE}")
    with resources.as_file(source) as path:
        return read_g2p_rules(path)


@dataclass(frozen=True)
class LengthDistribution:
    unit: str                   # letters | phonemes | syllables
    basis: str                  # types | tokens
    points: tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class MeanSyllableSeries:
    points: tuple[tuple[int, float, int], ...]  # (syllables, mean length, support)


@dataclass(frozen=True)
class RankFrequencyList:
    rows: tuple[tuple[int, str, int], ...]      # (rank, item, frequency)
    total: int


@dataclass(frozen=True)
class CoverageCurve:
    points: tuple[tuple[int, float], ...]       # (rank, covered fraction)


def length_distribution(
    lex: FormLexicon,
    unit: str,
    counter,
    basis: str = "types",
) -> LengthDistribution:
    """Fraction of word-forms (types) or token mass (tokens) per length."""
    if not lex.entries:
        raise ValidationError("cannot build a length distribution from an empty lexicon")
    if basis not in ("types", "tokens"):
        raise ValidationError(f"unknown basis {basis!r}")
    weight_per_length: dict[int, int] = defaultdict(int)
    total = 0
    for form, count in lex.entries.items():
        weight = count if basis == "tokens" else 1
        weight_per_length[counter(form)] += weight
        total += weight
    points = tuple(
        (length, weight_per_length[length] / total)
        for length in sorted(weight_per_length)
    )
    return LengthDistribution(unit, basis, points)


def mean_syllable_series(
    lex: FormLexicon,
    vowels: frozenset[str] = DEFAULT_UK_VOWELS,
) -> MeanSyllableSeries:
    """Mean syllable length (letters per syllable) by word length in syllables.

    Averages over distinct word-forms.  Non-syllabic forms are excluded:
    with zero syllables their syllable length is unbounded.
    """
    sums: dict[int, float] = defaultdict(float)
    support: dict[int, int] = defaultdict(int)
    for form in lex.entries:
        s = count_syllables(form, vowels)
        if s == 0:
            continue
        sums[s] += count_letters(form) / s
        support[s] += 1
    points = tuple((s, sums[s] / support[s], support[s]) for s in sorted(sums))
    return MeanSyllableSeries(points)


def filter_min_support(series: MeanSyllableSeries, min_support: int) -> MeanSyllableSeries:
    """Drop series points backed by fewer than ``min_support`` word-forms."""
    return MeanSyllableSeries(tuple(p for p in series.points if p[2] >= min_support))


def rank_frequency(lex: FormLexicon | LemmaLexicon) -> RankFrequencyList:
    """Items sorted by frequency (descending), ties by item; ranks from 1."""
    if not lex.entries:
        raise ValidationError("cannot rank an empty lexicon")
    ordered = sorted(lex.entries.items(), key=lambda kv: (-kv[1], kv[0]))
    rows = tuple((rank, item, count) for rank, (item, count) in enumerate(ordered, start=1))
    return RankFrequencyList(rows, sum(lex.entries.values()))


def coverage_curve(rf: RankFrequencyList) -> CoverageCurve:
    """Cumulative fraction of the ranked token mass up to each rank."""
    points = []
    acc = 0
    for rank, _, count in rf.rows:
        acc += count
        points.append((rank, acc / rf.total))
    return CoverageCurve(tuple(points))


def top_k(rf: RankFrequencyList, k: int) -> list[tuple[int, str, float]]:
    """First k ranked items with their relative frequency in per cent."""
    if not 1 <= k <= len(rf.rows):
        raise ValidationError(f"k={k} outside 1..{len(rf.rows)}")
    return [(rank, item, 100.0 * count / rf.total) for rank, item, count in rf.rows[:k]]
