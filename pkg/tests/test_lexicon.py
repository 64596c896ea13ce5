import random

import pytest
from hypothesis import given, strategies as st

from textlaws import (
    FormLexicon,
    LemmaMap,
    MergeRule,
    ResourceFormatError,
    ValidationError,
    apply_merge_rules,
    build_form_spectrum,
    lemmatize,
    pattern_count,
    read_lemma_map,
    read_merge_rules,
    read_overrides,
    tokenize,
)

forms_strategy = st.dictionaries(
    st.text(alphabet="абвгдежзиклмнопрст", min_size=1, max_size=6),
    st.integers(min_value=1, max_value=50),
    min_size=1,
    max_size=30,
)


def lex_of(entries):
    return FormLexicon(dict(entries), sum(entries.values()))


class TestFormSpectrum:
    def test_tiny_stream(self):
        lex = build_form_spectrum(tokenize("a b a"))
        assert lex.entries == {"a": 2, "b": 1}
        assert lex.total_tokens == 3

    def test_empty_stream(self):
        lex = build_form_spectrum([])
        assert lex.entries == {}
        assert lex.total_tokens == 0

    def test_counts_match_independent_hash_count(self):
        # oracle: plain dict increment over the same folded sequence
        rng = random.Random(7)
        vocab = [f"слово{i}" for i in range(60)]
        stream = [rng.choice(vocab) for _ in range(1000)]
        tokens = tokenize(" ".join(stream))
        assert len(tokens) == 1000
        expected = {}
        for t in tokens:
            expected[t.folded] = expected.get(t.folded, 0) + 1
        lex = build_form_spectrum(tokens)
        assert lex.entries == expected
        assert lex.total_tokens == 1000


class TestMergeRules:
    def test_euphonic_pair(self):
        lex = apply_merge_rules(lex_of({"в": 10, "у": 5}), [MergeRule("в", ("в", "у"))])
        assert lex.entries == {"в": 15}
        assert lex.total_tokens == 15

    def test_empty_rule_set_is_identity(self):
        original = lex_of({"а": 3, "б": 2})
        merged = apply_merge_rules(original, [])
        assert merged.entries == original.entries

    def test_three_way_rule_preserves_sum(self):
        # oracle: total mass check
        lex = lex_of({"a": 4, "b": 7, "c": 2, "d": 1})
        merged = apply_merge_rules(lex, [MergeRule("a", ("a", "b", "c"))])
        assert merged.entries == {"a": 13, "d": 1}
        assert sum(merged.entries.values()) == sum(lex.entries.values())

    def test_overlapping_rules_name_the_collision(self):
        rules = [MergeRule("a", ("a", "b")), MergeRule("c", ("b", "c"))]
        with pytest.raises(ValidationError, match="'b'"):
            apply_merge_rules(lex_of({"a": 1}), rules)

    def test_canonical_absent_from_lexicon(self):
        merged = apply_merge_rules(lex_of({"у": 5}), [MergeRule("в", ("у",))])
        assert merged.entries == {"в": 5}

    @given(forms_strategy)
    def test_mass_conserved_and_entries_never_grow(self, entries):
        lex = lex_of(entries)
        names = sorted(entries)
        rules = [MergeRule(names[0], tuple(names[: max(1, len(names) // 2)]))]
        merged = apply_merge_rules(lex, rules)
        assert sum(merged.entries.values()) == lex.total_tokens
        assert len(merged.entries) <= len(lex.entries)


class TestLemmatize:
    def test_override_pins_homonym_split(self):
        lex = lex_of({"що": 1956})
        result = lemmatize(
            lex,
            LemmaMap(),
            [("що", "що_спол", 1360), ("що", "що_займ", 495), ("що", "що_частка", 101)],
        )
        assert result.entries == {"що_спол": 1360, "що_займ": 495, "що_частка": 101}
        assert result.vocabulary_size == 3
        assert result.unmapped_tokens == 0

    def test_empty_map_everything_unmapped(self):
        result = lemmatize(lex_of({"а": 3, "б": 2}), LemmaMap())
        assert result.vocabulary_size == 0
        assert result.unmapped_tokens == 5
        assert result.unmapped_forms == 2

    def test_shares_split_with_largest_remainder(self):
        lemma_map = LemmaMap(ambiguous={"як": (("як_a", 0.7), ("як_b", 0.3))})
        result = lemmatize(lex_of({"як": 10}), lemma_map)
        assert result.entries == {"як_a": 7, "як_b": 3}

    def test_rounding_preserves_totals_for_all_counts(self):
        # oracle: enumerate counts 1..100, the parts must always resum
        lemma_map = LemmaMap(ambiguous={"x": (("x_a", 0.7), ("x_b", 0.3))})
        for count in range(1, 101):
            result = lemmatize(lex_of({"x": count}), lemma_map)
            assert sum(result.entries.values()) == count

    def test_absolute_count_shares(self):
        lemma_map = LemmaMap(ambiguous={"як": (("як_a", 389.0), ("як_b", 125.0), ("як_c", 55.0))})
        result = lemmatize(lex_of({"як": 569}), lemma_map)
        assert result.entries == {"як_a": 389, "як_b": 125, "як_c": 55}

    def test_override_above_count_rejected(self):
        with pytest.raises(ValidationError, match="above"):
            lemmatize(lex_of({"а": 2}), LemmaMap(), [("а", "а", 3)])

    def test_partial_override_remainder_is_unmapped(self):
        result = lemmatize(lex_of({"як": 10}), LemmaMap(), [("як", "як_спол", 6)])
        assert result.entries == {"як_спол": 6}
        assert result.unmapped_tokens == 4

    @given(forms_strategy)
    def test_mapped_plus_unmapped_equals_n(self, entries):
        lex = lex_of(entries)
        names = sorted(entries)
        rows = {form: f"лема_{form}" for form in names[::2]}
        result = lemmatize(lex, LemmaMap(rows=rows))
        assert sum(result.entries.values()) + result.unmapped_tokens == lex.total_tokens

    @given(forms_strategy)
    def test_vocabulary_never_exceeds_distinct_map_lemmas(self, entries):
        lex = lex_of(entries)
        names = sorted(entries)
        # map every other form onto a handful of shared lemmas
        rows = {form: f"лема_{i % 3}" for i, form in enumerate(names[::2])}
        result = lemmatize(lex, LemmaMap(rows=rows))
        assert result.vocabulary_size <= len(set(rows.values()))

    def test_deterministic_across_input_order(self):
        entries = {"а": 4, "б": 2, "в": 9}
        lemma_map = LemmaMap(rows={"а": "а", "б": "б", "в": "в"})
        one = lemmatize(lex_of(entries), lemma_map)
        other = lemmatize(lex_of(dict(reversed(entries.items()))), lemma_map)
        assert one.entries == other.entries


class TestPatternCount:
    def test_suffix_hand_count(self):
        lex = lex_of({"cats": 2, "dogs": 3, "cat": 1})
        assert pattern_count(lex, "s") == (5, 2)

    def test_no_match(self):
        assert pattern_count(lex_of({"а": 1}), "ся") == (0, 0)

    def test_prefix_mode(self):
        lex = lex_of({"під": 2, "підпис": 3, "пис": 1})
        assert pattern_count(lex, "під", where="prefix") == (5, 2)

    def test_empty_pattern_rejected(self):
        with pytest.raises(ValidationError):
            pattern_count(lex_of({"а": 1}), "")

    def test_unknown_position_rejected(self):
        with pytest.raises(ValidationError):
            pattern_count(lex_of({"а": 1}), "а", where="infix")


class TestResourceFiles:
    def test_merge_rules_round_trip(self, tmp_path):
        path = tmp_path / "merges.tsv"
        path.write_text("в\tв,у\nі\tі,й\n", encoding="utf-8")
        rules = read_merge_rules(path)
        assert rules == [MergeRule("в", ("в", "у")), MergeRule("і", ("і", "й"))]

    def test_merge_rules_bad_line_number(self, tmp_path):
        path = tmp_path / "merges.tsv"
        path.write_text("в\tв,у\nbroken line\n", encoding="utf-8")
        with pytest.raises(ResourceFormatError) as err:
            read_merge_rules(path)
        assert err.value.line_no == 2

    def test_lemma_map_shares_and_rows(self, tmp_path):
        path = tmp_path / "lemmas.tsv"
        path.write_text(
            "стежки\tстежка\nщо\tщо_спол\t0.7\nщо\tщо_займ\t0.3\n", encoding="utf-8"
        )
        lemma_map = read_lemma_map(path)
        assert lemma_map.rows == {"стежки": "стежка"}
        assert lemma_map.ambiguous == {"що": (("що_спол", 0.7), ("що_займ", 0.3))}

    def test_lemma_map_bad_share(self, tmp_path):
        path = tmp_path / "lemmas.tsv"
        path.write_text("що\tщо\tx\n", encoding="utf-8")
        with pytest.raises(ResourceFormatError) as err:
            read_lemma_map(path)
        assert err.value.line_no == 1

    def test_overrides_reader(self, tmp_path):
        path = tmp_path / "overrides.tsv"
        path.write_text("# comment\nяк\tяк_спол\t17\n", encoding="utf-8")
        assert read_overrides(path) == [("як", "як_спол", 17)]

    def test_overrides_bad_count(self, tmp_path):
        path = tmp_path / "overrides.tsv"
        path.write_text("як\tяк_спол\tbad\n", encoding="utf-8")
        with pytest.raises(ResourceFormatError) as err:
            read_overrides(path)
        assert err.value.line_no == 1
