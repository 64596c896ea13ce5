"""End-to-end analysis pipeline driven by one RunConfig.

Stages run in order (ingest and lexicon always; profile, lengths, ranks
and fits only when selected) and write a deterministic bundle into the
output directory.  A failing stage prints a diagnostic naming itself and
the run exits nonzero; a fit that merely fails to converge is recorded in
the fits report and does not affect the exit status.
"""

from __future__ import annotations

import logging
import sys
from contextlib import contextmanager

from . import distributions as dist
from .config import RunConfig, MissingTextError
from .errors import ResourceFormatError, TextlawsError
from .fitting import fit_coverage, lm_fit, model_eval, segmented_loglog_fit
from .fitting.segmented import (
    DEFAULT_COVERAGE_BREAKPOINTS,
    DEFAULT_ZIPF_BREAKPOINTS,
)
from .indices import corpus_profile
from .lexicon import (
    apply_merge_rules,
    build_form_spectrum,
    lemmatize,
    read_lemma_map,
    read_merge_rules,
    read_overrides,
)
from .reports import emit_plot_data, write_fits, write_profile, write_topk
from .tokenizer import split_sentences, tokenize

log = logging.getLogger("textlaws")


class StageFailure(TextlawsError):
    def __init__(self, stage: str, exit_code: int, cause: Exception):
        self.stage = stage
        self.exit_code = exit_code
        super().__init__(f"stage {stage}: {cause}")


@contextmanager
def _stage(name: str):
    try:
        yield
    except StageFailure:
        raise
    except ResourceFormatError as exc:
        raise StageFailure(name, 3, exc) from exc
    except UnicodeDecodeError as exc:
        cause = ValueError(f"invalid UTF-8: {exc.reason} at byte {exc.start}")
        raise StageFailure(name, 1, cause) from exc
    except (TextlawsError, OSError) as exc:
        raise StageFailure(name, 1, exc) from exc


def run_analysis(cfg: RunConfig) -> int:
    try:
        if not cfg.text_path.is_file():
            print(f"analyze: text file not found: {cfg.text_path}", file=sys.stderr)
            return 2
        _execute(cfg)
        return 0
    except MissingTextError as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 2
    except StageFailure as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return exc.exit_code


def _execute(cfg: RunConfig) -> None:
    with _stage("ingest"):
        text = cfg.text_path.read_text(encoding="utf-8")
        tokens = tokenize(text, cfg.tokenizer)
        sentences = split_sentences(text, cfg.tokenizer, tokens)

    with _stage("lexicon"):
        forms = build_form_spectrum(tokens)
        if cfg.merge_rules_path is not None:
            rules = read_merge_rules(cfg.merge_rules_path)
            forms = apply_merge_rules(forms, rules)
            log.info("applied %d merge rules", len(rules))
        lemmas = None
        if cfg.lemma_map_path is not None:
            lemma_map = read_lemma_map(cfg.lemma_map_path)
            overrides = []
            if cfg.overrides_path is not None:
                overrides = read_overrides(cfg.overrides_path)
            lemmas = lemmatize(forms, lemma_map, overrides)
            if lemmas.unmapped_tokens:
                log.info(
                    "%d tokens across %d forms had no lemma mapping",
                    lemmas.unmapped_tokens, lemmas.unmapped_forms,
                )
        else:
            log.info("no lemma map configured: lemma statistics unavailable")

    out = cfg.output_dir
    out.mkdir(parents=True, exist_ok=True)

    if "profile" in cfg.stages:
        with _stage("profile"):
            profile = corpus_profile(
                tokens, sentences, forms, lemmas,
                threshold=cfg.threshold,
                count_basis=cfg.count_basis,
                word_length_basis=cfg.word_length_basis,
            )
            write_profile(profile, out)

    with _stage("lengths"):
        g2p = (
            dist.read_g2p_rules(cfg.g2p_rules_path)
            if cfg.g2p_rules_path is not None
            else dist.load_default_g2p()
        )
        lengths = {
            "letters": dist.length_distribution(forms, "letters", dist.count_letters, cfg.basis),
            "phonemes": dist.length_distribution(
                forms, "phonemes", lambda f: dist.count_phonemes(f, g2p), cfg.basis
            ),
            "syllables": dist.length_distribution(
                forms, "syllables", lambda f: dist.count_syllables(f, cfg.vowels), cfg.basis
            ),
        }
        syllable_series = dist.mean_syllable_series(forms, cfg.vowels)
        if "lengths" in cfg.stages:
            for unit, distribution in lengths.items():
                emit_plot_data(distribution.points, out / f"lengths_{unit}.dat")
            if syllable_series.points:
                emit_plot_data(
                    [(s, m) for s, m, _ in syllable_series.points],
                    out / "mean_syllable.dat",
                )
            else:
                log.info("no syllabic word-forms: mean_syllable.dat not written")

    with _stage("ranks"):
        rank_lex = forms
        if cfg.rank_basis == "lemmas":
            if lemmas is not None:
                rank_lex = lemmas
            else:
                log.info("rank basis falls back to word-forms (no lemma lexicon)")
        rf = dist.rank_frequency(rank_lex)
        curve = dist.coverage_curve(rf)
        if "ranks" in cfg.stages:
            emit_plot_data([(r, f) for r, _, f in rf.rows], out / "rank_freq.dat")
            emit_plot_data(curve.points, out / "coverage.dat")
            k = min(cfg.top_k, len(rf.rows))
            write_topk(dist.top_k(rf, k), out / "topk.tsv")

    if "fits" in cfg.stages:
        with _stage("fits"):
            report = _run_fits(cfg, lengths, syllable_series, rf, curve, out)
            write_fits(report, out)


def _lm_report(result) -> dict:
    return {
        "params": result.params,
        "stderr": result.stderr,
        "derived": result.derived,
        "sse": result.sse,
        "iterations": result.iterations,
        "converged": result.converged,
        "final_lambda": result.final_lambda,
    }


def _run_fits(cfg, lengths, syllable_series, rf, curve, out) -> dict[str, dict]:
    filtered_series = dist.filter_min_support(syllable_series, cfg.min_support)
    datasets = {
        "PhonemeGamma": [(x, y) for x, y in lengths["phonemes"].points],
        "ShiftedMenzerath": [(x, y) for x, y in lengths["syllables"].points],
        "MeanSyllablePower": [(s, m) for s, m, _ in filtered_series.points],
        "MeanSyllableExp": [(s, m) for s, m, _ in filtered_series.points],
        "ZipfMandelbrot": [(r, f) for r, _, f in rf.rows],
    }
    report: dict[str, dict] = {}
    for model_id in cfg.models:
        try:
            if model_id == "ZipfPower":
                segments = segmented_loglog_fit(
                    rf, cfg.zipf_breakpoints or DEFAULT_ZIPF_BREAKPOINTS
                )
                report[model_id] = {
                    "segments": [
                        {"lo": s.lo, "hi": s.hi, "z": s.z, "A": s.amplitude,
                         "r_squared": s.r_squared, "n_points": s.n_points}
                        for s in segments
                    ]
                }
            elif model_id == "LogCoverage":
                segments = fit_coverage(
                    curve, cfg.coverage_breakpoints or DEFAULT_COVERAGE_BREAKPOINTS
                )
                report[model_id] = {
                    "segments": [
                        {"lo": s.lo, "hi": s.hi, "k": s.k, "T0": s.t0,
                         "r_squared": s.r_squared, "n_points": s.n_points}
                        for s in segments
                    ]
                }
            else:
                data = datasets[model_id]
                result = lm_fit(model_id, data, init=cfg.inits.get(model_id))
                report[model_id] = _lm_report(result)
                if not result.converged:
                    log.info("fit %s did not converge", model_id)
                _emit_fit_curve(model_id, result, data, out)
        except TextlawsError as exc:
            log.info("fit %s skipped: %s", model_id, exc)
            report[model_id] = {"error": str(exc)}
    return report


def _emit_fit_curve(model_id, result, data, out) -> None:
    try:
        points = [(x, model_eval(model_id, result.params, x)) for x, _ in data]
    except TextlawsError as exc:
        # a diverged fit may leave parameters the model cannot evaluate
        log.info("fitted curve for %s not sampled: %s", model_id, exc)
        return
    emit_plot_data(points, out / f"fitcurve_{model_id}.dat")
