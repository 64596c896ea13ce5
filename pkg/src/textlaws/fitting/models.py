"""Closed-form models fitted to the empirical distributions.

Each model declares its free parameters, a vectorized evaluator, domain
checks, a default initial guess, and (for the two probability-density
models) the normalization constant derived from the shape parameters, so
the fitted curve is always a proper density.  Zipf exponents are stored
positive under the convention F(r) = A / r**z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..errors import DomainError, ValidationError
from .special import gamma_fn

PHONEME_GAMMA = "PhonemeGamma"
SHIFTED_MENZERATH = "ShiftedMenzerath"
MEAN_SYLLABLE_POWER = "MeanSyllablePower"
MEAN_SYLLABLE_EXP = "MeanSyllableExp"
ZIPF_POWER = "ZipfPower"
ZIPF_MANDELBROT = "ZipfMandelbrot"
LOG_COVERAGE = "LogCoverage"


@dataclass(frozen=True)
class Model:
    id: str
    param_names: tuple[str, ...]
    evaluate: Callable[[np.ndarray, np.ndarray], np.ndarray]
    x_in_domain: Callable[[np.ndarray], bool]
    params_in_domain: Callable[[np.ndarray, np.ndarray], bool]
    default_init: Callable[[np.ndarray, np.ndarray], np.ndarray]
    derived: Callable[[np.ndarray], dict[str, float]] | None = None

    @property
    def n_params(self) -> int:
        return len(self.param_names)


def phoneme_gamma_norm(b: float, alpha: float) -> float:
    """Constant A with integral over x >= 0 of A x^b exp(-alpha x^2) equal to 1."""
    if not (b > -1.0):
        raise DomainError(f"shape exponent must be > -1, got {b!r}")
    if not (alpha > 0.0):
        raise DomainError(f"decay rate must be > 0, got {alpha!r}")
    return 2.0 * alpha ** ((b + 1.0) / 2.0) / gamma_fn((b + 1.0) / 2.0)


def shifted_menzerath_norm(d: float, rate: float) -> float:
    """Constant B with integral over t >= 0 of B t^d exp(-rate t) equal to 1."""
    if not (d > -1.0):
        raise DomainError(f"shape exponent must be > -1, got {d!r}")
    if not (rate > 0.0):
        raise DomainError(f"decay rate must be > 0, got {rate!r}")
    return rate ** (d + 1.0) / gamma_fn(d + 1.0)


def _eval_phoneme_gamma(p, x):
    b, alpha = p
    a = 2.0 * alpha ** ((b + 1.0) / 2.0) / gamma_fn((b + 1.0) / 2.0)
    with np.errstate(all="ignore"):
        return a * np.power(x, b) * np.exp(-alpha * x * x)


def _eval_shifted_menzerath(p, x):
    d, rate = p
    bnorm = rate ** (d + 1.0) / gamma_fn(d + 1.0)
    t = x + 1.0
    with np.errstate(all="ignore"):
        return bnorm * np.power(t, d) * np.exp(-rate * t)


def _eval_mean_syllable_power(p, x):
    m_inf, scale, c = p
    with np.errstate(all="ignore"):
        return m_inf + scale * np.power(x, c)


def _eval_mean_syllable_exp(p, x):
    amp, b, c = p
    with np.errstate(all="ignore"):
        return amp * np.power(x, b) * np.exp(c * x)


def _eval_zipf_power(p, x):
    amp, z = p
    with np.errstate(all="ignore"):
        return amp * np.power(x, -z)


def _eval_zipf_mandelbrot(p, x):
    amp, b, offset = p
    with np.errstate(all="ignore"):
        return amp * np.power(x + offset, -b)


def _eval_log_coverage(p, x):
    k, t0 = p
    with np.errstate(all="ignore"):
        return k * np.log(x) + t0


def _init_phoneme_gamma(x, y):
    wsum = y.sum()
    mean_sq = float((y * x * x).sum() / wsum) if wsum > 0 else float((x * x).mean())
    return np.array([1.0, 1.0 / mean_sq])


def _init_shifted_menzerath(x, y):
    wsum = y.sum()
    mean_t = float((y * (x + 1.0)).sum() / wsum) if wsum > 0 else float((x + 1.0).mean())
    return np.array([max(mean_t - 1.0, 0.1), 1.0])


def _init_mean_syllable_power(x, y):
    lo, hi = float(y.min()), float(y.max())
    spread = hi - lo
    return np.array([lo - 0.25 * spread, spread if spread > 0 else 1.0, -1.0])


def _init_mean_syllable_exp(x, y):
    first = float(y[np.argmin(x)])
    return np.array([first if first != 0 else 1.0, -1.0, 0.0])


def _init_zipf_power(x, y):
    r0 = float(x.min())
    f0 = float(y[np.argmin(x)])
    return np.array([f0 * r0, 1.0])


def _init_zipf_mandelbrot(x, y):
    f0 = float(y[np.argmin(x)])
    return np.array([f0 if f0 > 0 else 1.0, 1.0, 1.0])


def _init_log_coverage(x, y):
    i_lo, i_hi = np.argmin(x), np.argmax(x)
    dlog = math.log(x[i_hi]) - math.log(x[i_lo])
    k = float((y[i_hi] - y[i_lo]) / dlog) if dlog > 0 else 1.0
    return np.array([k, float(y[i_lo]) - k * math.log(x[i_lo])])


MODELS: dict[str, Model] = {
    PHONEME_GAMMA: Model(
        id=PHONEME_GAMMA,
        param_names=("b", "alpha"),
        evaluate=_eval_phoneme_gamma,
        x_in_domain=lambda x: bool(np.all(x >= 0)),
        params_in_domain=lambda p, x: p[0] > -1.0 and p[1] > 0.0
        and (p[0] >= 0.0 or bool(np.all(x > 0))),
        default_init=_init_phoneme_gamma,
        derived=lambda p: {"A": phoneme_gamma_norm(p[0], p[1])},
    ),
    SHIFTED_MENZERATH: Model(
        id=SHIFTED_MENZERATH,
        param_names=("d", "gamma"),
        evaluate=_eval_shifted_menzerath,
        x_in_domain=lambda x: bool(np.all(x >= 0)),
        params_in_domain=lambda p, x: p[0] > -1.0 and p[1] > 0.0,
        default_init=_init_shifted_menzerath,
        derived=lambda p: {"B": shifted_menzerath_norm(p[0], p[1])},
    ),
    MEAN_SYLLABLE_POWER: Model(
        id=MEAN_SYLLABLE_POWER,
        param_names=("M_inf", "B", "c"),
        evaluate=_eval_mean_syllable_power,
        x_in_domain=lambda x: bool(np.all(x > 0)),
        params_in_domain=lambda p, x: True,
        default_init=_init_mean_syllable_power,
    ),
    MEAN_SYLLABLE_EXP: Model(
        id=MEAN_SYLLABLE_EXP,
        param_names=("A", "b", "c"),
        evaluate=_eval_mean_syllable_exp,
        x_in_domain=lambda x: bool(np.all(x > 0)),
        params_in_domain=lambda p, x: True,
        default_init=_init_mean_syllable_exp,
    ),
    ZIPF_POWER: Model(
        id=ZIPF_POWER,
        param_names=("A", "z"),
        evaluate=_eval_zipf_power,
        x_in_domain=lambda x: bool(np.all(x > 0)),
        params_in_domain=lambda p, x: True,
        default_init=_init_zipf_power,
    ),
    ZIPF_MANDELBROT: Model(
        id=ZIPF_MANDELBROT,
        param_names=("A", "b", "C"),
        evaluate=_eval_zipf_mandelbrot,
        x_in_domain=lambda x: bool(np.all(x > 0)),
        params_in_domain=lambda p, x: bool(np.all(x + p[2] > 0)),
        default_init=_init_zipf_mandelbrot,
    ),
    LOG_COVERAGE: Model(
        id=LOG_COVERAGE,
        param_names=("k", "T0"),
        evaluate=_eval_log_coverage,
        x_in_domain=lambda x: bool(np.all(x > 0)),
        params_in_domain=lambda p, x: True,
        default_init=_init_log_coverage,
    ),
}


def get_model(model_id: str) -> Model:
    try:
        return MODELS[model_id]
    except KeyError:
        known = ", ".join(sorted(MODELS))
        raise ValidationError(f"unknown model {model_id!r}; known models: {known}") from None


def normalization_constant(model_id: str, params) -> float:
    """Derived density constant for the two normalized models."""
    p = _as_param_array(get_model(model_id), params)
    if model_id == PHONEME_GAMMA:
        return phoneme_gamma_norm(p[0], p[1])
    if model_id == SHIFTED_MENZERATH:
        return shifted_menzerath_norm(p[0], p[1])
    raise ValidationError(f"model {model_id!r} has no derived normalization constant")


def _as_param_array(model: Model, params) -> np.ndarray:
    if isinstance(params, dict):
        missing = [name for name in model.param_names if name not in params]
        if missing:
            raise ValidationError(f"{model.id}: missing parameters {missing}")
        return np.array([float(params[name]) for name in model.param_names])
    values = np.asarray(params, dtype=float)
    if values.shape != (model.n_params,):
        raise ValidationError(
            f"{model.id}: expected {model.n_params} parameters, got shape {values.shape}"
        )
    return values


def model_eval(model: Model | str, params, x):
    """Evaluate a model at x (scalar or array), enforcing its domain."""
    if isinstance(model, str):
        model = get_model(model)
    p = _as_param_array(model, params)
    scalar = np.isscalar(x)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if not model.x_in_domain(xs):
        raise DomainError(f"{model.id}: x={x!r} outside the model domain")
    if not model.params_in_domain(p, xs):
        raise DomainError(f"{model.id}: parameters {p.tolist()} outside the model domain")
    y = model.evaluate(p, xs)
    if not np.all(np.isfinite(y)):
        raise DomainError(f"{model.id}: non-finite value at x={x!r}")
    return float(y[0]) if scalar else y
