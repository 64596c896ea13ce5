"""Run configuration: a flat INI-style file with section headers.

Paths are resolved relative to the config file's directory.  Only the
text path is required; every other resource is optional and its absence
disables the dependent outputs with a logged notice.

Schema::

    [paths]
    text = corpus.txt            # required
    lemma_map = lemmas.tsv
    merge_rules = merges.tsv
    overrides = overrides.tsv
    g2p_rules = g2p.tsv          # default rules ship with the package
    output_dir = out

    [tokenizer]
    intra_token_chars = -'’ʼ§0123456789
    sentence_terminators = .!?…
    case_folding = true
    abbreviations = comma,separated,forms

    [analysis]
    vowels = аеиіоуяюєї
    threshold = 10
    basis = types                # types | tokens
    rank_basis = lemmas          # lemmas | forms
    count_basis = lemmas         # hapax/concentration basis: lemmas | forms
    word_length_basis = tokens   # tokens | types
    top_k = 20
    min_support = 5

    [fits]
    models = PhonemeGamma,ShiftedMenzerath,MeanSyllablePower,ZipfPower,ZipfMandelbrot,LogCoverage
    zipf_breakpoints = 10:200,200:1000,1000:end
    coverage_breakpoints = 10:200,200:2000,2000:end
    init_ZipfMandelbrot = A=20000,b=1.1,C=4
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace
from pathlib import Path

from .distributions import DEFAULT_UK_VOWELS
from .errors import ResourceFormatError, TextlawsError
from .fitting.models import MODELS
from .tokenizer import (
    DEFAULT_INTRA_CHARS,
    DEFAULT_TERMINATORS,
    TokenizerConfig,
)

STAGES = ("profile", "lengths", "ranks", "fits")

DEFAULT_FIT_MODELS = (
    "PhonemeGamma",
    "ShiftedMenzerath",
    "MeanSyllablePower",
    "ZipfPower",
    "ZipfMandelbrot",
    "LogCoverage",
)


class MissingTextError(TextlawsError):
    """The required input text is not configured or does not exist."""


@dataclass
class RunConfig:
    text_path: Path
    output_dir: Path
    lemma_map_path: Path | None = None
    merge_rules_path: Path | None = None
    overrides_path: Path | None = None
    g2p_rules_path: Path | None = None
    tokenizer: TokenizerConfig = TokenizerConfig()
    vowels: frozenset[str] = DEFAULT_UK_VOWELS
    threshold: int = 10
    basis: str = "types"
    rank_basis: str = "lemmas"
    count_basis: str = "lemmas"
    word_length_basis: str = "tokens"
    top_k: int = 20
    min_support: int = 5
    models: tuple[str, ...] = DEFAULT_FIT_MODELS
    zipf_breakpoints: tuple[tuple[int, int | None], ...] | None = None
    coverage_breakpoints: tuple[tuple[int, int | None], ...] | None = None
    inits: dict[str, dict[str, float]] = field(default_factory=dict)
    stages: tuple[str, ...] = STAGES

    def with_overrides(self, out=None, only=None, basis=None, threshold=None) -> "RunConfig":
        cfg = self
        if out is not None:
            cfg = replace(cfg, output_dir=Path(out))
        if only is not None:
            cfg = replace(cfg, stages=only)
        if basis is not None:
            cfg = replace(cfg, basis=basis)
        if threshold is not None:
            cfg = replace(cfg, threshold=threshold)
        return cfg


def _line_of(path: Path, key: str) -> int:
    """Best-effort line number of a config key, for diagnostics."""
    try:
        for no, line in enumerate(path.read_text("utf-8").splitlines(), start=1):
            if line.split("=")[0].strip() == key:
                return no
    except OSError:
        pass
    return 0


def _parse_breakpoints(raw: str, path: Path, key: str):
    intervals = []
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        lo_hi = chunk.split(":")
        if len(lo_hi) != 2:
            raise ResourceFormatError(path, _line_of(path, key), f"bad interval {chunk!r}")
        try:
            lo = int(lo_hi[0])
        except ValueError:
            raise ResourceFormatError(path, _line_of(path, key), f"bad rank {lo_hi[0]!r}") from None
        hi_raw = lo_hi[1].strip().lower()
        if hi_raw in ("end", "v", "*"):
            hi = None
        else:
            try:
                hi = int(hi_raw)
            except ValueError:
                raise ResourceFormatError(path, _line_of(path, key), f"bad rank {lo_hi[1]!r}") from None
        intervals.append((lo, hi))
    if not intervals:
        raise ResourceFormatError(path, _line_of(path, key), "empty breakpoint list")
    return tuple(intervals)


def _parse_inits(parser, section, path: Path) -> dict[str, dict[str, float]]:
    inits = {}
    for key in parser.options(section):
        if not key.startswith("init_"):
            continue
        model_id = key[len("init_"):]
        if model_id not in MODELS:
            raise ResourceFormatError(path, _line_of(path, key), f"unknown model {model_id!r}")
        values = {}
        for assign in parser.get(section, key).split(","):
            assign = assign.strip()
            if not assign:
                continue
            name, _, raw = assign.partition("=")
            try:
                values[name.strip()] = float(raw)
            except ValueError:
                raise ResourceFormatError(
                    path, _line_of(path, key), f"bad init value {assign!r}"
                ) from None
        inits[model_id] = values
    return inits


def _choice(parser, section, key, default, allowed, path):
    value = parser.get(section, key, fallback=default).strip()
    if value not in allowed:
        raise ResourceFormatError(
            path, _line_of(path, key), f"{key} must be one of {sorted(allowed)}, got {value!r}"
        )
    return value


def _intval(parser, section, key, default, path, minimum=1):
    raw = parser.get(section, key, fallback=None)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ResourceFormatError(path, _line_of(path, key), f"{key} must be an integer") from None
    if value < minimum:
        raise ResourceFormatError(path, _line_of(path, key), f"{key} must be >= {minimum}")
    return value


def load_run_config(path: str | Path) -> RunConfig:
    """Parse and validate a run configuration file."""
    path = Path(path)
    if not path.exists():
        raise MissingTextError(f"config file not found: {path}")
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh, source=str(path))
    except configparser.ParsingError as exc:
        line_no = exc.errors[0][0] if exc.errors else 0
        raise ResourceFormatError(path, line_no, "cannot parse config") from exc
    except configparser.MissingSectionHeaderError as exc:
        raise ResourceFormatError(path, exc.lineno, "missing section header") from exc

    base = path.parent

    def respath(section, key):
        raw = parser.get(section, key, fallback=None)
        if raw is None or not raw.strip():
            return None
        p = Path(raw.strip())
        return p if p.is_absolute() else base / p

    text_path = respath("paths", "text") if parser.has_section("paths") else None
    if text_path is None:
        raise MissingTextError(f"{path}: [paths] text is required")

    tok_kwargs = {}
    if parser.has_section("tokenizer"):
        raw = parser.get("tokenizer", "intra_token_chars", fallback=None)
        if raw is not None:
            tok_kwargs["intra_token_chars"] = frozenset(raw.strip())
        raw = parser.get("tokenizer", "sentence_terminators", fallback=None)
        if raw is not None:
            tok_kwargs["sentence_terminators"] = frozenset(raw.strip())
        raw = parser.get("tokenizer", "case_folding", fallback=None)
        if raw is not None:
            tok_kwargs["case_folding"] = raw.strip().lower() in ("1", "true", "yes", "on")
        raw = parser.get("tokenizer", "abbreviations", fallback=None)
        if raw is not None:
            tok_kwargs["abbreviations"] = frozenset(
                a.strip().casefold() for a in raw.split(",") if a.strip()
            )
    tokenizer = TokenizerConfig(
        intra_token_chars=tok_kwargs.get("intra_token_chars", DEFAULT_INTRA_CHARS),
        sentence_terminators=tok_kwargs.get("sentence_terminators", DEFAULT_TERMINATORS),
        case_folding=tok_kwargs.get("case_folding", True),
        abbreviations=tok_kwargs.get("abbreviations", frozenset()),
    )

    vowels = DEFAULT_UK_VOWELS
    if parser.has_option("analysis", "vowels"):
        vowels = frozenset(parser.get("analysis", "vowels").strip())

    models = DEFAULT_FIT_MODELS
    zipf_bp = coverage_bp = None
    inits = {}
    if parser.has_section("fits"):
        raw = parser.get("fits", "models", fallback=None)
        if raw is not None:
            models = tuple(m.strip() for m in raw.split(",") if m.strip())
            for m in models:
                if m not in MODELS:
                    raise ResourceFormatError(
                        path, _line_of(path, "models"), f"unknown model {m!r}"
                    )
        raw = parser.get("fits", "zipf_breakpoints", fallback=None)
        if raw is not None:
            zipf_bp = _parse_breakpoints(raw, path, "zipf_breakpoints")
        raw = parser.get("fits", "coverage_breakpoints", fallback=None)
        if raw is not None:
            coverage_bp = _parse_breakpoints(raw, path, "coverage_breakpoints")
        inits = _parse_inits(parser, "fits", path)

    return RunConfig(
        text_path=text_path,
        output_dir=respath("paths", "output_dir") or base / "out",
        lemma_map_path=respath("paths", "lemma_map"),
        merge_rules_path=respath("paths", "merge_rules"),
        overrides_path=respath("paths", "overrides"),
        g2p_rules_path=respath("paths", "g2p_rules"),
        tokenizer=tokenizer,
        vowels=vowels,
        threshold=_intval(parser, "analysis", "threshold", 10, path),
        basis=_choice(parser, "analysis", "basis", "types", {"types", "tokens"}, path),
        rank_basis=_choice(parser, "analysis", "rank_basis", "lemmas", {"lemmas", "forms"}, path),
        count_basis=_choice(parser, "analysis", "count_basis", "lemmas", {"lemmas", "forms"}, path),
        word_length_basis=_choice(
            parser, "analysis", "word_length_basis", "tokens", {"tokens", "types"}, path
        ),
        top_k=_intval(parser, "analysis", "top_k", 20, path),
        min_support=_intval(parser, "analysis", "min_support", 5, path, minimum=0),
        models=models,
        zipf_breakpoints=zipf_bp,
        coverage_breakpoints=coverage_bp,
        inits=inits,
    )
