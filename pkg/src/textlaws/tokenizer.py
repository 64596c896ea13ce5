"""Tokenization of running text into word tokens and sentence spans.

A token is a maximal run of letters, digits and permitted internal
characters ("60-ий", "§136" and "м’ята" are single tokens); everything
between tokens is separator material and is never emitted.  Offsets refer
to the NFC-normalized text, so slicing the normalized text at a token's
offset recovers its surface exactly.
"""

from __future__ import annotations

import unicodedata
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum

from .errors import ValidationError

DEFAULT_LETTER_CLASSES = frozenset({"Lu", "Ll", "Lt", "Lm", "Lo"})
DEFAULT_INTRA_CHARS = frozenset("-'’ʼ§" + "0123456789")
DEFAULT_TERMINATORS = frozenset(".!?…")

# Characters that join two word characters (never lead or trail a token).
_JOINER_CHARS = frozenset("-‐‑'’ʼ`")
# Closing quotes tolerated between a terminator and the sentence break.
_CLOSERS = frozenset("»\"'’”)]")
# Opening punctuation tolerated between the break and the next capital.
_OPENERS = frozenset("«\"“‘([—–-")


class ScriptClass(Enum):
    CYRILLIC = "Cyrillic"
    LATIN = "Latin"
    ALPHANUMERIC = "Alphanumeric"
    MIXED = "Mixed"


@dataclass(frozen=True)
class TokenizerConfig:
    """Character-class configuration for tokenize/split_sentences."""

    letter_classes: frozenset[str] = DEFAULT_LETTER_CLASSES
    intra_token_chars: frozenset[str] = DEFAULT_INTRA_CHARS
    case_folding: bool = True
    sentence_terminators: frozenset[str] = DEFAULT_TERMINATORS
    abbreviations: frozenset[str] = frozenset()

    def __post_init__(self):
        if any(ch.isspace() for ch in self.intra_token_chars):
            raise ValidationError("intra_token_chars must not contain whitespace")


DEFAULT_CONFIG = TokenizerConfig()


@dataclass(frozen=True)
class Token:
    surface: str
    folded: str
    char_offset: int
    script: ScriptClass


@dataclass(frozen=True)
class SentenceSpan:
    start_token: int
    end_token: int  # exclusive


def _is_word_char(ch: str, cfg: TokenizerConfig) -> bool:
    cat = unicodedata.category(ch)
    return cat in cfg.letter_classes or cat == "Nd"


def classify_script(surface: str) -> ScriptClass:
    """Classify a token surface into one of the four script classes.

    Digits or a leading section sign dominate (Alphanumeric); then tokens
    mixing Cyrillic and Latin letters; otherwise the letter script, with
    non-Cyrillic scripts bucketed as Latin.
    """
    if not surface:
        raise ValidationError("cannot classify an empty token surface")
    if surface[0] == "§" or any(unicodedata.category(c) == "Nd" for c in surface):
        return ScriptClass.ALPHANUMERIC
    has_cyr = has_lat = False
    for ch in surface:
        if unicodedata.category(ch).startswith("L"):
            name = unicodedata.name(ch, "")
            if name.startswith("CYRILLIC"):
                has_cyr = True
            elif name.startswith("LATIN"):
                has_lat = True
    if has_cyr and has_lat:
        return ScriptClass.MIXED
    if has_cyr:
        return ScriptClass.CYRILLIC
    return ScriptClass.LATIN


def tokenize(text: str, cfg: TokenizerConfig = DEFAULT_CONFIG) -> list[Token]:
    """Split text into word tokens.

    The text is NFC-normalized first.  A joiner (hyphen, apostrophe) stays
    inside a token only when flanked by letters/digits on both sides; other
    permitted marks (section sign) need a letter/digit neighbour on one side
    and may lead a token.  Runs without any letter or digit yield no token.
    """
    text = unicodedata.normalize("NFC", text)
    joiners = cfg.intra_token_chars & _JOINER_CHARS
    extras = {
        ch for ch in cfg.intra_token_chars
        if ch not in joiners and not _is_word_char(ch, cfg)
    }
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        leads = _is_word_char(ch, cfg) or (
            ch in extras and i + 1 < n and _is_word_char(text[i + 1], cfg)
        )
        if not leads:
            i += 1
            continue
        start = i
        i += 1
        while i < n:
            c = text[i]
            if _is_word_char(c, cfg):
                i += 1
            elif c in joiners and i + 1 < n and _is_word_char(text[i + 1], cfg):
                i += 1
            elif c in extras and (
                _is_word_char(text[i - 1], cfg)
                or (i + 1 < n and _is_word_char(text[i + 1], cfg))
            ):
                i += 1
            else:
                break
        surface = text[start:i]
        folded = surface.casefold() if cfg.case_folding else surface
        tokens.append(Token(surface, folded, start, classify_script(surface)))
    return tokens


def _is_upper(ch: str) -> bool:
    return unicodedata.category(ch) in ("Lu", "Lt")


def _boundary_positions(text: str, tokens: list[Token], cfg: TokenizerConfig) -> list[int]:
    """Text positions right after which a sentence ends.

    A terminator ends a sentence when, after optional closing quotes, it is
    followed by whitespace and an uppercase letter (opening quotes or a
    dash may precede the capital), or by end of text.  A period directly
    after a listed abbreviation never splits.
    """
    positions = []
    tok_idx = 0
    n = len(text)
    for i, ch in enumerate(text):
        if ch not in cfg.sentence_terminators:
            continue
        while tok_idx < len(tokens) and tokens[tok_idx].char_offset + len(tokens[tok_idx].surface) <= i:
            tok_idx += 1
        # token immediately before the terminator, if any
        prev = tokens[tok_idx - 1] if tok_idx > 0 else None
        if ch == "." and prev is not None and prev.folded in cfg.abbreviations:
            continue
        j = i + 1
        while j < n and text[j] in _CLOSERS:
            j += 1
        if j >= n:
            positions.append(i)
            continue
        if not text[j].isspace():
            continue
        while j < n and (text[j].isspace() or text[j] in _OPENERS):
            j += 1
        if j >= n or _is_upper(text[j]):
            positions.append(i)
    return positions


def split_sentences(
    text: str,
    cfg: TokenizerConfig = DEFAULT_CONFIG,
    tokens: list[Token] | None = None,
) -> list[SentenceSpan]:
    """Partition the token stream of ``text`` into sentence spans.

    ``tokens`` may be passed to reuse an existing ``tokenize(text, cfg)``
    result; otherwise the text is tokenized here.  Spans cover every token
    with no overlap; text without any terminator is a single sentence.
    """
    text = unicodedata.normalize("NFC", text)
    if tokens is None:
        tokens = tokenize(text, cfg)
    if not tokens:
        return []
    spans: list[SentenceSpan] = []
    prev_end = 0
    for pos in _boundary_positions(text, tokens, cfg):
        k = _count_tokens_before(tokens, pos)
        if k > prev_end:
            spans.append(SentenceSpan(prev_end, k))
            prev_end = k
    if prev_end < len(tokens):
        spans.append(SentenceSpan(prev_end, len(tokens)))
    return spans


def _count_tokens_before(tokens: list[Token], pos: int) -> int:
    # offsets are strictly increasing, so bisect applies directly
    return bisect_left(tokens, pos, key=lambda t: t.char_offset)
