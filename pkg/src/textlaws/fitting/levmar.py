"""Damped least-squares (Levenberg-Marquardt) curve fitting.

The damping loop only ever accepts a step that lowers the sum of squared
residuals: a successful step shrinks the damping factor, a rejected one
grows it, and the normal equations use Marquardt's diagonal scaling so
parameters of very different magnitudes condition equally.  Derivatives
come from forward finite differences on the residual vector.  The whole
computation is deterministic: identical inputs and options reproduce the
parameter trajectory bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, ValidationError
from .models import Model, get_model


@dataclass(frozen=True)
class FitOptions:
    max_iterations: int = 200
    gradient_tol: float = 1e-8
    step_tol: float = 1e-10
    initial_lambda: float = 1e-3
    lambda_up: float = 10.0
    lambda_down: float = 0.1
    jacobian_rel_step: float = 1e-6
    max_lambda: float = 1e14

    def __post_init__(self):
        if min(self.gradient_tol, self.step_tol, self.initial_lambda,
               self.jacobian_rel_step) <= 0:
            raise ValidationError("all tolerances must be positive")
        if not (self.lambda_up > 1.0 > self.lambda_down > 0.0):
            raise ValidationError("need lambda_up > 1 > lambda_down > 0")
        if self.max_iterations < 1:
            raise ValidationError("max_iterations must be >= 1")


DEFAULT_OPTIONS = FitOptions()


@dataclass
class FitResult:
    model_id: str
    params: dict[str, float]
    stderr: dict[str, float]
    derived: dict[str, float]
    sse: float
    iterations: int
    converged: bool
    final_lambda: float
    sse_trace: tuple[float, ...] = ()


def forward_jacobian(residual_fn, p: np.ndarray, rel_step: float) -> np.ndarray:
    """Forward-difference Jacobian of a residual vector w.r.t. parameters."""
    r0 = residual_fn(p)
    jac = np.empty((r0.size, p.size))
    for j in range(p.size):
        h = rel_step * max(abs(p[j]), 1.0)
        pj = p.copy()
        pj[j] += h
        jac[:, j] = (residual_fn(pj) - r0) / h
    return jac


def _prepare_data(data, weights):
    pairs = np.asarray(list(data), dtype=float)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ValidationError("data must be a sequence of (x, y) pairs")
    x, y = pairs[:, 0], pairs[:, 1]
    if weights is None:
        w = np.ones_like(x)
    else:
        w = np.asarray(weights, dtype=float)
        if w.shape != x.shape:
            raise ValidationError("weights must match the number of data points")
        if np.any(w < 0):
            raise ValidationError("weights must be non-negative")
    return x, y, np.sqrt(w)


def lm_fit(
    model: Model | str,
    data,
    init=None,
    opts: FitOptions = DEFAULT_OPTIONS,
    weights=None,
    log_space: bool = False,
) -> FitResult:
    """Fit a model to (x, y) data by damped least squares.

    ``init`` maps parameter names to starting values (or is an ordered
    sequence); without it the model's documented default guess is used.
    ``log_space`` fits on log-transformed ordinates, which requires y > 0.
    Singular normal equations at every damping level yield a result with
    ``converged=False`` rather than an exception; a non-finite model value
    at the accepted parameters is a domain error.
    """
    if isinstance(model, str):
        model = get_model(model)
    x, y, sqrtw = _prepare_data(data, weights)
    if x.size < model.n_params:
        raise ValidationError(
            f"{model.id}: {x.size} data points cannot determine {model.n_params} parameters"
        )
    if not model.x_in_domain(x):
        raise DomainError(f"{model.id}: data abscissae outside the model domain")
    if log_space and np.any(y <= 0):
        raise ValidationError("log-space fitting requires positive ordinates")

    if init is None:
        p = model.default_init(x, y)
    elif isinstance(init, dict):
        missing = [name for name in model.param_names if name not in init]
        if missing:
            raise ValidationError(f"{model.id}: init missing parameters {missing}")
        p = np.array([float(init[name]) for name in model.param_names])
    else:
        p = np.asarray(init, dtype=float)
        if p.shape != (model.n_params,):
            raise ValidationError(f"{model.id}: init must supply {model.n_params} values")
    if not model.params_in_domain(p, x):
        raise DomainError(f"{model.id}: initial parameters outside the model domain")

    def residual(params):
        f = model.evaluate(params, x)
        if log_space:
            with np.errstate(all="ignore"):
                return (np.log(y) - np.log(f)) * sqrtw
        return (y - f) * sqrtw

    r = residual(p)
    if not np.all(np.isfinite(r)):
        raise DomainError(f"{model.id}: model is not finite at the initial parameters")
    sse = float(r @ r)
    trace = [sse]
    lam = opts.initial_lambda
    converged = False
    iterations = 0

    for _ in range(opts.max_iterations):
        iterations += 1
        jac = forward_jacobian(residual, p, opts.jacobian_rel_step)
        grad = jac.T @ r
        if np.all(np.isfinite(grad)) and float(np.max(np.abs(grad))) < opts.gradient_tol:
            converged = True
            break
        jtj = jac.T @ jac
        diag = np.diag(jtj).copy()
        diag[~(diag > 0)] = 1.0
        stepped = False
        while lam <= opts.max_lambda:
            try:
                delta = np.linalg.solve(jtj + lam * np.diag(diag), -grad)
            except np.linalg.LinAlgError:
                lam *= opts.lambda_up
                continue
            p_try = p + delta
            if np.all(np.isfinite(p_try)) and model.params_in_domain(p_try, x):
                r_try = residual(p_try)
                if np.all(np.isfinite(r_try)):
                    sse_try = float(r_try @ r_try)
                    if sse_try < sse:
                        p, r, sse = p_try, r_try, sse_try
                        trace.append(sse)
                        lam = max(lam * opts.lambda_down, 1e-12)
                        stepped = True
                        step_norm = float(np.linalg.norm(delta))
                        if step_norm < opts.step_tol * (float(np.linalg.norm(p)) + opts.step_tol):
                            converged = True
                        break
            lam *= opts.lambda_up
        if not stepped or converged:
            break

    stderr = _standard_errors(model, residual, p, x.size, sse, opts)
    derived = model.derived(p) if model.derived is not None else {}
    return FitResult(
        model_id=model.id,
        params=dict(zip(model.param_names, (float(v) for v in p))),
        stderr=stderr,
        derived={k: float(v) for k, v in derived.items()},
        sse=sse,
        iterations=iterations,
        converged=converged,
        final_lambda=lam,
        sse_trace=tuple(trace),
    )


def _standard_errors(model, residual, p, n_points, sse, opts):
    """Asymptotic per-parameter errors from the final Jacobian."""
    names = model.param_names
    dof = n_points - model.n_params
    if dof <= 0:
        return {name: float("nan") for name in names}
    jac = forward_jacobian(residual, p, opts.jacobian_rel_step)
    try:
        cov = np.linalg.inv(jac.T @ jac) * (sse / dof)
    except np.linalg.LinAlgError:
        return {name: float("nan") for name in names}
    with np.errstate(invalid="ignore"):
        errs = np.sqrt(np.diag(cov))
    return dict(zip(names, (float(e) for e in errs)))
