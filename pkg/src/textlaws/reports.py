"""Deterministic report writers: plot data, TSV and JSON bundles.

Plot files carry two space-separated columns at six significant digits;
percentages are written with four decimals.  All files end with a newline
and are UTF-8, so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ValidationError
from .indices import CorpusProfile


def _g6(value) -> str:
    return f"{value:.6g}"


def emit_plot_data(series, path: str | Path, header: str | None = None) -> None:
    """Write an ``x y`` file, one point per line, no header by default."""
    rows = list(series)
    if not rows:
        raise ValidationError(f"refusing to write an empty plot file: {path}")
    lines = []
    if header is not None:
        lines.append(f"# {header}")
    for x, y in rows:
        lines.append(f"{_g6(x)} {_g6(y)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _scalar_str(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_profile(profile: CorpusProfile, out_dir: str | Path) -> None:
    out_dir = Path(out_dir)
    record = profile.to_dict()
    tsv = "".join(f"{key}\t{_scalar_str(value)}\n" for key, value in record.items())
    (out_dir / "profile.tsv").write_text(tsv, encoding="utf-8")
    (out_dir / "profile.json").write_text(
        json.dumps(record, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )


def write_topk(rows, path: str | Path) -> None:
    """Rows of (rank, item, per cent); percentages at four decimals."""
    lines = [f"{rank}\t{item}\t{pct:.4f}" for rank, item, pct in rows]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _fit_value_str(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def write_fits(report: dict[str, dict], out_dir: str | Path) -> None:
    """Write fits.tsv (model / segment / key / value) and nested fits.json."""
    out_dir = Path(out_dir)
    lines = ["model\tsegment\tkey\tvalue"]
    for model_id, entry in report.items():
        if "segments" in entry:
            for seg in entry["segments"]:
                tag = f"{seg['lo']}:{seg['hi']}"
                for key, value in seg.items():
                    if key in ("lo", "hi"):
                        continue
                    lines.append(f"{model_id}\t{tag}\t{key}\t{_fit_value_str(value)}")
        elif "error" in entry:
            lines.append(f"{model_id}\t\terror\t{entry['error']}")
        else:
            for group in ("params", "stderr", "derived"):
                for name, value in entry.get(group, {}).items():
                    prefix = "param" if group == "params" else group
                    lines.append(f"{model_id}\t\t{prefix}.{name}\t{_fit_value_str(value)}")
            for key in ("sse", "iterations", "converged", "final_lambda"):
                lines.append(f"{model_id}\t\t{key}\t{_fit_value_str(entry[key])}")
    (out_dir / "fits.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    (out_dir / "fits.json").write_text(
        json.dumps(report, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
