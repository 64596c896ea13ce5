import unicodedata

import pytest
from hypothesis import given, strategies as st

from textlaws import (
    ScriptClass,
    TokenizerConfig,
    ValidationError,
    classify_script,
    split_sentences,
    tokenize,
)

# alphabet mixing scripts, digits, joiners and separator punctuation
TEXT_ALPHABET = "абвгіїєщьюя ABCdef 0159-'’§.,!?…«»—\n\t"


def surfaces(text, cfg=None):
    return [t.surface for t in (tokenize(text, cfg) if cfg else tokenize(text))]


@pytest.mark.parametrize("raw", ["1848", "60-ий", "§136"])
def test_alphanumeric_sequences_are_single_tokens(raw):
    tokens = tokenize(raw)
    assert [t.surface for t in tokens] == [raw]
    assert tokens[0].script is ScriptClass.ALPHANUMERIC


def test_empty_text_yields_no_tokens():
    assert tokenize("") == []


def test_hand_tokenized_mixed_sentence():
    # oracle: hand tokenization of the sentence
    tokens = tokenize("Так, так — in die Stadt.")
    assert [t.surface for t in tokens] == ["Так", "так", "in", "die", "Stadt"]
    assert [t.script for t in tokens] == [
        ScriptClass.CYRILLIC,
        ScriptClass.CYRILLIC,
        ScriptClass.LATIN,
        ScriptClass.LATIN,
        ScriptClass.LATIN,
    ]


def test_punctuation_only_runs_yield_no_token():
    assert tokenize("— ... !!! «»") == []


def test_joiners_need_word_chars_on_both_sides():
    assert surfaces("в--в") == ["в", "в"]
    assert surfaces("слово- і -друге") == ["слово", "і", "друге"]
    assert surfaces("'quoted'") == ["quoted"]
    assert surfaces("м’ята") == ["м’ята"]


def test_attached_punctuation_is_stripped():
    assert surfaces("стежки, поля.") == ["стежки", "поля"]


def test_case_folding_key():
    token = tokenize("Стежки")[0]
    assert token.folded == "стежки"
    raw = tokenize("Стежки", TokenizerConfig(case_folding=False))[0]
    assert raw.folded == "Стежки"


def test_offsets_slice_back_to_surfaces():
    text = "Так, так — in die Stadt. §136 і 60-ий."
    norm = unicodedata.normalize("NFC", text)
    for t in tokenize(text):
        assert norm[t.char_offset:t.char_offset + len(t.surface)] == t.surface


@given(st.text(alphabet=TEXT_ALPHABET, max_size=80))
def test_round_trip_reconstruction(text):
    norm = unicodedata.normalize("NFC", text)
    tokens = tokenize(text)
    rebuilt = []
    pos = 0
    for t in tokens:
        assert t.char_offset >= pos
        rebuilt.append(norm[pos:t.char_offset])
        rebuilt.append(t.surface)
        pos = t.char_offset + len(t.surface)
    rebuilt.append(norm[pos:])
    assert "".join(rebuilt) == norm
    assert sum(len(t.surface) for t in tokens) <= len(norm)


@given(st.text(alphabet=TEXT_ALPHABET, max_size=80))
def test_offsets_strictly_monotone(text):
    offsets = [t.char_offset for t in tokenize(text)]
    assert all(a < b for a, b in zip(offsets, offsets[1:]))


@given(st.text(alphabet=TEXT_ALPHABET, max_size=80))
def test_tokenize_detokenized_is_idempotent(text):
    first = [t.surface for t in tokenize(text)]
    again = [t.surface for t in tokenize(" ".join(first))]
    assert again == first


@given(st.text(alphabet=TEXT_ALPHABET, max_size=80))
def test_every_token_has_letter_or_digit(text):
    for t in tokenize(text):
        assert any(ch.isalpha() or ch.isdigit() for ch in t.surface)


@given(st.text(alphabet=TEXT_ALPHABET, max_size=80))
def test_script_classes_partition_the_stream(text):
    tokens = tokenize(text)
    by_class = {cls: 0 for cls in ScriptClass}
    for t in tokens:
        by_class[t.script] += 1
    assert sum(by_class.values()) == len(tokens)


class TestClassifyScript:
    def test_pure_latin(self):
        assert classify_script("Wagman") is ScriptClass.LATIN

    def test_digits_dominate(self):
        assert classify_script("1848") is ScriptClass.ALPHANUMERIC
        assert classify_script("60-ий") is ScriptClass.ALPHANUMERIC

    def test_mixed_scripts(self):
        assert classify_script("Geschстежки") is ScriptClass.MIXED

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            classify_script("")


class TestSentences:
    def test_two_terminated_clauses(self):
        spans = split_sentences("A b. C d!")
        assert [(s.start_token, s.end_token) for s in spans] == [(0, 2), (2, 4)]

    def test_no_terminator_single_span(self):
        spans = split_sentences("просто слова без крапки")
        assert [(s.start_token, s.end_token) for s in spans] == [(0, 4)]

    def test_empty_text_no_spans(self):
        assert split_sentences("") == []

    def test_ten_sentence_paragraph_mean_matches_hand_count(self):
        # oracle: manual segmentation; lengths 2,3,4,2,5,3,2,4,3,2 = 30 tokens
        parts = [
            "Він пішов.", "Вона була тут!", "Ми йшли до міста?",
            "Так буде.", "Пан дав нам п'ять слів.", "День був довгий.",
            "Хто там?", "Стежка вела в поле.", "Вони не знали.", "Кінець настав.",
        ]
        text = " ".join(parts)
        tokens = tokenize(text)
        spans = split_sentences(text, tokens=tokens)
        assert len(spans) == 10
        lengths = [s.end_token - s.start_token for s in spans]
        assert lengths == [2, 3, 4, 2, 5, 3, 2, 4, 3, 2]
        assert len(tokens) / len(spans) == 3.0

    def test_abbreviation_suppresses_split(self):
        cfg = TokenizerConfig(abbreviations=frozenset({"м"}))
        spans = split_sentences("Жив у м. Львів. Він знав це.", cfg)
        assert len(spans) == 2

    def test_lowercase_continuation_does_not_split(self):
        spans = split_sentences("п. іванов прийшов")
        assert len(spans) == 1

    def test_quoted_sentence_start_splits(self):
        spans = split_sentences("Він знав. «Може» — так.")
        assert len(spans) == 2

    @given(st.text(alphabet=TEXT_ALPHABET, max_size=120))
    def test_spans_partition_tokens(self, text):
        tokens = tokenize(text)
        spans = split_sentences(text, tokens=tokens)
        covered = 0
        for span in spans:
            assert span.start_token == covered
            assert span.end_token > span.start_token
            covered = span.end_token
        assert covered == len(tokens)


def test_config_rejects_whitespace_intra_chars():
    with pytest.raises(ValidationError):
        TokenizerConfig(intra_token_chars=frozenset(" -"))
