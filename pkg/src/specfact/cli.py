"""Command-line front end: factor, mahler, lift, ahiezer, verify, compare.

Every run reads coefficient JSON, dispatches to the library, and writes a
deterministic report: no timestamps, sorted keys, so identical configs give
byte-identical bytes. Exit code 0 on success, 2 when the input or flags are
rejected, 3 when a numerical guard refuses to produce an answer; the report
carries the error name either way.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import serialization
from .almost_periodic import APFunc, ap_from_trig, bohr_mean
from .cepstral import cepstral_factor_circle, cepstral_factor_ordered
from .entire import (
    ahiezer_from_factor,
    certified_height,
    outer_by_zero_count,
    upper_halfplane_zero_count,
    upper_zero_count_certified,
)
from .errors import NumericalError, SpecfactError, ValidationError
from .fixtures import (
    random_analytic_poly,
    random_complex_bivar,
    random_positive_weight,
    random_real_bivar,
    random_real_trig,
    rng,
    seed_from_env,
)
from .levinson import szego_factor
from .ordering import ArchOrder, analytic_transform, hilbert_transform
from .report import FactorReport
from .roots import fejer_riesz, is_outer, mahler_jensen, mahler_quadrature
from .trig import BivarPoly, TrigPoly

METHODS = ("roots", "cepstral", "levinson")
SUITES = ("methods", "transforms", "parseval", "outer")


@dataclass
class RunConfig:
    """Effective knobs of one invocation, echoed verbatim into reports."""

    command: str
    method: str | None = None
    grid: int | None = None
    order: int | None = None
    ladder: tuple | None = None
    alpha: float | None = None
    tolerances: dict = field(default_factory=dict)
    input: str | None = None
    output: str | None = None

    def validate(self) -> None:
        if self.grid is not None:
            if self.grid < 2 or self.grid & (self.grid - 1):
                raise ValidationError(f"grid {self.grid} is not a power of two")
        if self.order is not None and self.order < 1:
            raise ValidationError(f"order {self.order} must be positive")
        for name, value in self.tolerances.items():
            if not value > 0:
                raise ValidationError(f"tolerance {name}={value} must be positive")
        if self.ladder is not None and not self.ladder[0] > 0:
            raise ValidationError("ladder m_max must be positive")

    def echo(self) -> dict:
        out = {"command": self.command}
        for key in ("method", "grid", "order", "alpha", "input", "output"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.ladder is not None:
            out["ladder"] = list(self.ladder)
        if self.tolerances:
            out["tolerances"] = dict(sorted(self.tolerances.items()))
        return out


def emit_samples(obj, n: int, path: str, x_max: float | None = None) -> None:
    """CSV samples of a coefficient object.

    Circle and almost periodic: columns x, Re f, Im f over [0, x_max) with
    x_max defaulting to one period (2 pi) or ten (20 pi). Torus: columns
    x, y, Re f on an n-by-n grid, row-major in x.
    """
    fmt = "%.17g"
    if isinstance(obj, BivarPoly):
        xs = np.arange(n) * (2.0 * np.pi / n)
        with open(path, "w") as fh:
            fh.write("x,y,re_f\n")
            for x in xs:
                vals = obj(float(x), xs)
                for y, v in zip(xs, np.atleast_1d(vals)):
                    fh.write(f"{fmt % x},{fmt % y},{fmt % v.real}\n")
        return
    if isinstance(obj, APFunc):
        span = 20.0 * np.pi if x_max is None else x_max
    else:
        span = 2.0 * np.pi if x_max is None else x_max
    xs = np.arange(n) * (span / n)
    vals = np.atleast_1d(obj(xs))
    with open(path, "w") as fh:
        fh.write("x,re_f,im_f\n")
        for x, v in zip(xs, vals):
            fh.write(f"{fmt % x},{fmt % v.real},{fmt % v.imag}\n")


def _emit_factor_csv(w, h, n: int, path: str) -> None:
    # residual-oriented dump: the weight next to |h|^2 on the sample grid
    fmt = "%.17g"
    if isinstance(w, BivarPoly):
        xs = np.arange(n) * (2.0 * np.pi / n)
        with open(path, "w") as fh:
            fh.write("x,y,w,h_sq\n")
            for x in xs:
                wrow = np.atleast_1d(w(float(x), xs))
                hrow = np.atleast_1d(h(float(x), xs))
                for y, wv, hv in zip(xs, wrow, hrow):
                    fh.write(
                        f"{fmt % x},{fmt % y},{fmt % wv.real},{fmt % abs(hv) ** 2}\n"
                    )
        return
    xs = np.arange(n) * (2.0 * np.pi / n)
    wv = np.atleast_1d(w(xs))
    hv = np.atleast_1d(h(xs))
    with open(path, "w") as fh:
        fh.write("x,w,h_sq\n")
        for x, a, b in zip(xs, wv, hv):
            fh.write(f"{fmt % x},{fmt % a.real},{fmt % abs(b) ** 2}\n")


def _load_input(cfg: RunConfig):
    if cfg.input is None:
        raise ValidationError("an --in file is required")
    try:
        return serialization.load(cfg.input)
    except OSError as exc:
        raise ValidationError(f"cannot read {cfg.input}: {exc}") from exc


def _check_alpha(kind: str, alpha) -> None:
    # the slope defines the frequency order; it is meaningful exactly when
    # the input lives on the torus
    if kind == "bivar" and alpha is None:
        raise ValidationError("bivariate input needs --alpha to order frequencies")
    if kind != "bivar" and alpha is not None:
        raise ValidationError("--alpha only applies to bivariate input")


def _kind_of(obj) -> str:
    if isinstance(obj, TrigPoly):
        return "trig"
    if isinstance(obj, BivarPoly):
        return "bivar"
    return "ap"


def _write_json(payload: dict, output: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, allow_nan=False)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_report(report: FactorReport, cfg: RunConfig) -> None:
    report.config = cfg.echo()
    if cfg.output:
        report.save(cfg.output)
    else:
        print(report.dumps())


def _spectrum_of(h) -> list:
    if isinstance(h, TrigPoly):
        keys = h.support
        return [int(keys[0]), int(keys[-1])]
    freqs = h.frequencies
    return [float(freqs[0]), float(freqs[-1])]


def _factor_once(w, method: str, cfg: RunConfig, args) -> FactorReport:
    kind = _kind_of(w)
    if kind == "ap":
        raise ValidationError("factor expects a circle or torus weight")
    if kind == "bivar" and method != "cepstral":
        raise ValidationError(f"method {method} handles circle weights only")
    if method == "roots":
        rf = fejer_riesz(
            w,
            nonneg_tol=cfg.tolerances.get("nonneg_tol", 1e-9),
            boundary_tol=cfg.tolerances.get("boundary_tol", 1e-6),
        )
        quad, clipped = mahler_quadrature(rf.h)
        return FactorReport(
            method="roots",
            kind=kind,
            factor=rf.h,
            mahler=mahler_jensen(rf.h),
            residual=rf.residual,
            spectrum=_spectrum_of(rf.h),
            roots=sorted(
                ([z.real, z.imag] for z in rf.roots), key=lambda p: (p[0], p[1])
            ),
            diagnostics={
                "boundary_pairs": rf.boundary_pairs,
                "clipped_log_samples": clipped,
                "outer": is_outer(rf.h),
                "quadrature_mahler": quad,
                "scale": rf.scale,
            },
        )
    if method == "cepstral":
        if kind == "bivar":
            _check_alpha(kind, cfg.alpha)
            trace = cepstral_factor_ordered(
                w,
                ArchOrder(cfg.alpha),
                grid_n=cfg.grid,
                ladder=cfg.ladder,
                trunc_tol=cfg.tolerances.get("trunc_tol", 1e-10),
                alias_tol=cfg.tolerances.get("alias_tol", 1e-8),
            )
        else:
            trace = cepstral_factor_circle(
                w,
                grid_n=cfg.grid,
                ladder=cfg.ladder,
                trunc_tol=cfg.tolerances.get("trunc_tol", 1e-10),
                alias_tol=cfg.tolerances.get("alias_tol", 1e-8),
            )
        if kind == "bivar":
            v0 = trace.v.coeff(0, 0)
        else:
            v0 = trace.v.coeff(0)
        diagnostics = {
            "ladder": [
                {
                    "m": st.m,
                    "n": st.n,
                    "grid_min": st.grid_min,
                    "delta": st.delta,
                    "inv_onesided": st.inv_onesided,
                }
                for st in trace.ladder
            ],
        }
        diagnostics.update(trace.diagnostics)
        if trace.tau is not None:
            diagnostics["tau"] = trace.tau
            diagnostics["containment_margin"] = trace.containment_margin
        if kind == "bivar":
            # spectrum in order units: the theta_hat span of the support
            order = ArchOrder(cfg.alpha)
            vals = [order.theta_hat(m, n) for (m, n) in trace.h.support]
            spectrum = [float(min(vals)), float(max(vals))]
        else:
            spectrum = _spectrum_of(trace.h)
        return FactorReport(
            method="cepstral",
            kind=kind,
            factor=trace.h,
            mahler=float(np.exp(complex(v0).real)),
            residual=trace.residual,
            spectrum=spectrum,
            diagnostics=diagnostics,
        )
    if method == "levinson":
        # cross-method agreement at 1e-5 needs the deeper section; the
        # library's own default stays at 4x the input degree
        report = szego_factor(
            w,
            n=cfg.order if cfg.order else 64,
            grid_n=cfg.grid if cfg.grid else 4096,
            threshold=cfg.tolerances.get("threshold", 1e-10),
        )
        return report
    raise ValidationError(f"unknown method {method!r}")


def cmd_factor(cfg: RunConfig, args) -> int:
    w = _load_input(cfg)
    if _kind_of(w) == "trig" and cfg.alpha is not None:
        raise ValidationError("--alpha only applies to bivariate input")
    report = _factor_once(w, cfg.method, cfg, args)
    _emit_report(report, cfg)
    if args.samples_csv:
        _emit_factor_csv(w, report.factor, args.samples, args.samples_csv)
    return 0


def cmd_mahler(cfg: RunConfig, args) -> int:
    h = _load_input(cfg)
    if not isinstance(h, TrigPoly):
        raise ValidationError("mahler expects a circle polynomial")
    quad, clipped = mahler_quadrature(h, n=args.quad_n)
    jensen = mahler_jensen(h)
    payload = {
        "command": "mahler",
        "jensen": jensen,
        "quadrature": quad,
        "quadrature_gap": abs(jensen - quad),
        "clipped_log_samples": clipped,
        "mean_modulus": abs(complex(h.coeff(0))),
        "outer": is_outer(h),
        "config": cfg.echo(),
    }
    _write_json(payload, cfg.output)
    if args.samples_csv:
        emit_samples(h, args.samples, args.samples_csv)
    return 0


def cmd_lift(cfg: RunConfig, args) -> int:
    p = _load_input(cfg)
    kind = _kind_of(p)
    if kind == "ap":
        raise ValidationError("lift expects circle or torus coefficients")
    _check_alpha(kind, cfg.alpha)
    if kind == "bivar":
        lifted = ArchOrder(cfg.alpha).lift(p)
    else:
        lifted = ap_from_trig(p)
    text = serialization.dumps(lifted)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.samples_csv:
        emit_samples(lifted, args.samples, args.samples_csv)
    return 0


def cmd_ahiezer(cfg: RunConfig, args) -> int:
    h = _load_input(cfg)
    if isinstance(h, BivarPoly):
        raise ValidationError("ahiezer expects a one-sided lift; run lift first")
    if isinstance(h, TrigPoly):
        h = ap_from_trig(h)
    pair = ahiezer_from_factor(h)
    payload = {
        "command": "ahiezer",
        "tau": pair.tau,
        "identity_residual": pair.identity_residual,
        "S": serialization.to_obj(pair.S),
        "F": serialization.to_obj(pair.F),
        "spectrum_S": _spectrum_of(pair.S),
        "config": cfg.echo(),
    }
    if args.box:
        count = upper_halfplane_zero_count(pair.S, args.box, samples=args.samples_box)
        pair.upper_zero_count = count
        payload["box"] = list(args.box)
        payload["upper_zero_count"] = count
    _write_json(payload, cfg.output)
    if args.samples_csv:
        emit_samples(pair.S, args.samples, args.samples_csv)
    return 0


def _coeff_delta(a, b) -> float:
    keys = set(a.coeffs) | set(b.coeffs)
    if not keys:
        return 0.0
    ca, cb = a.coeffs, b.coeffs
    return max(abs(ca.get(k, 0j) - cb.get(k, 0j)) for k in keys)


def _pair_name(m1: str, m2: str) -> str:
    return f"{m1}_vs_{m2}"


def cmd_compare(cfg: RunConfig, args) -> int:
    w = _load_input(cfg)
    methods = args.methods
    tol = cfg.tolerances.get("tol", 1e-5)
    factors = {}
    for method in methods:
        factors[method] = _factor_once(w, method, cfg, args).factor
    deltas = {}
    worst = 0.0
    for i, m1 in enumerate(methods):
        for m2 in methods[i + 1 :]:
            d = _coeff_delta(factors[m1], factors[m2])
            deltas[_pair_name(m1, m2)] = d
            worst = max(worst, d)
    payload = {
        "command": "compare",
        "deltas": deltas,
        "factors": {m: serialization.to_obj(f) for m, f in factors.items()},
        "max_delta": worst,
        "tol": tol,
        "agree": worst < tol,
        "config": cfg.echo(),
    }
    if worst >= tol:
        exc = NumericalError(
            f"factor methods disagree: max delta {worst:.3e} >= tol {tol:.1e}"
        )
        exc.payload = payload  # keep the deltas in the error report
        raise exc
    _write_json(payload, cfg.output)
    return 0


def _check(lines: list, label: str, ok: bool, detail: str = "") -> bool:
    tag = "ok" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    lines.append(f"{tag:4s} {label}{suffix}")
    return ok


def _suite_methods(gen, trials: int, tol: float, lines: list) -> bool:
    good = True
    for t in range(trials):
        degree = int(gen.integers(1, 9))
        w = random_positive_weight(gen, degree)
        hs = {
            "roots": fejer_riesz(w).h,
            "cepstral": cepstral_factor_circle(w, grid_n=4096).h,
            "levinson": szego_factor(w, n=64).factor,
        }
        worst = max(
            _coeff_delta(hs[a], hs[b])
            for i, a in enumerate(METHODS)
            for b in METHODS[i + 1 :]
        )
        good &= _check(
            lines,
            f"methods trial {t} degree {degree}",
            worst < tol,
            f"max delta {worst:.3e}",
        )
    return good


def _suite_transforms(gen, trials: int, lines: list) -> bool:
    order = ArchOrder(float(np.sqrt(2.0)))
    good = True
    for t in range(trials):
        if t % 2 == 0:
            f = random_real_trig(gen, int(gen.integers(1, 9)))
            use_order = None
        else:
            f = random_real_bivar(gen, int(gen.integers(1, 4)))
            use_order = order
        hh = hilbert_transform(hilbert_transform(f, use_order), use_order)
        neg = {k: -v for k, v in f.coeffs.items()}
        zero = (0, 0) if isinstance(f, BivarPoly) else 0
        neg.pop(zero, None)
        ok1 = hh.coeffs == neg
        a = analytic_transform(f, use_order)
        re_a = (a + a.conj_reflect()) * 0.5
        ok2 = re_a.coeffs == f.coeffs
        if use_order is None:
            ok3 = all(k >= 0 for k in a.coeffs)
        else:
            ok3 = all(order.sign(m, n) >= 0 for (m, n) in a.coeffs)
        if use_order is not None:
            ok4 = order.lift(a) == analytic_transform(order.lift(f))
        else:
            ok4 = True
        good &= _check(
            lines,
            f"transforms trial {t} {'bivar' if use_order else 'circle'}",
            ok1 and ok2 and ok3 and ok4,
            f"H2 {ok1} ReA {ok2} onesided {ok3} lift {ok4}",
        )
    return good


def _suite_parseval(gen, trials: int, lines: list) -> bool:
    order = ArchOrder(float(np.sqrt(2.0)))
    good = True
    for t in range(trials):
        p = random_complex_bivar(gen, int(gen.integers(1, 4)))
        lifted = order.lift(p)
        ok1 = bohr_mean(lifted) == complex(p.coeff(0, 0))
        ranked = sorted(p.coeffs.items(), key=lambda kv: order.theta_hat(*kv[0]))
        total = 0.0
        for _, c in ranked:
            total += c.real * c.real + c.imag * c.imag
        mean_sq = bohr_mean(lifted.squared_modulus())
        ok2 = complex(mean_sq) == complex(total)
        good &= _check(
            lines,
            f"parseval trial {t}",
            ok1 and ok2,
            f"mean {ok1} energy {ok2}",
        )
    return good


def _suite_outer(gen, trials: int, lines: list, obj=None) -> bool:
    good = True
    if obj is not None:
        if isinstance(obj, TrigPoly):
            by_roots = is_outer(obj)
            by_count = outer_by_zero_count(obj)
            good = _check(
                lines,
                "outer input",
                by_roots == by_count,
                f"roots {by_roots} count {by_count}",
            )
        else:
            count = upper_zero_count_certified(obj)
            height = certified_height(obj)
            good = _check(
                lines,
                "outer input",
                True,
                f"zero count {count} below height {height:.3g}",
            )
        return good
    for t in range(trials):
        h = random_analytic_poly(gen, int(gen.integers(1, 7)))
        by_roots = is_outer(h)
        by_count = outer_by_zero_count(h)
        good &= _check(
            lines,
            f"outer trial {t}",
            by_roots == by_count,
            f"roots {by_roots} count {by_count}",
        )
    return good


def cmd_verify(cfg: RunConfig, args) -> int:
    gen = rng(seed_from_env())
    tol = cfg.tolerances.get("tol", 1e-5)
    lines: list = []
    if args.suite == "methods":
        good = _suite_methods(gen, args.trials, tol, lines)
    elif args.suite == "transforms":
        good = _suite_transforms(gen, args.trials, lines)
    elif args.suite == "parseval":
        good = _suite_parseval(gen, args.trials, lines)
    else:
        obj = _load_input(cfg) if cfg.input else None
        good = _suite_outer(gen, args.trials, lines, obj=obj)
    passed = sum(1 for ln in lines if ln.startswith("ok"))
    lines.append(f"verify {args.suite}: {passed}/{len(lines)} checks passed")
    print("\n".join(lines))
    if cfg.output:
        _write_json(
            {
                "command": "verify",
                "suite": args.suite,
                "passed": passed,
                "total": len(lines) - 1,
                "config": cfg.echo(),
            },
            cfg.output,
        )
    if not good:
        raise NumericalError(f"verify {args.suite} failed")
    return 0


def _parse_ladder(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) == 1:
        return (float(parts[0]), None)
    if len(parts) == 2:
        return (float(parts[0]), int(parts[1]))
    raise ValidationError("--ladder takes m_max or m_max,n_max")


def _parse_box(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise ValidationError("--box takes x0,x1,y0,y1")
    return tuple(float(p) for p in parts)


def _parse_methods(text: str) -> list:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    for m in methods:
        if m not in METHODS:
            raise ValidationError(f"unknown method {m!r}")
    if len(methods) < 2:
        raise ValidationError("compare needs at least two methods")
    return methods


def _add_io(sub, output=True):
    sub.add_argument("--in", dest="input", help="input coefficient JSON")
    if output:
        sub.add_argument("--out", dest="output", help="report destination")
    sub.add_argument("--samples-csv", dest="samples_csv", help="CSV sample dump")
    sub.add_argument(
        "--samples", type=int, default=512, help="sample count for CSV dumps"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specfact",
        description="spectral factorization of nonnegative trigonometric weights",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("factor", help="factor a weight as |h|^2 with h one-sided")
    p.add_argument("--method", choices=METHODS, default="roots")
    p.add_argument("--grid", type=int, help="FFT grid size, power of two")
    p.add_argument("--order", type=int, help="Toeplitz section order")
    p.add_argument("--ladder", type=_parse_ladder, help="m_max or m_max,n_max")
    p.add_argument("--alpha", type=float, help="order slope for torus input")
    p.add_argument("--nonneg-tol", type=float, dest="nonneg_tol")
    p.add_argument("--boundary-tol", type=float, dest="boundary_tol")
    p.add_argument("--trunc-tol", type=float, dest="trunc_tol")
    p.add_argument("--alias-tol", type=float, dest="alias_tol")
    p.add_argument("--threshold", type=float, dest="threshold")
    _add_io(p)

    p = subs.add_parser("mahler", help="geometric mean and outer test")
    p.add_argument("--quad-n", type=int, default=1 << 14, dest="quad_n")
    _add_io(p)

    p = subs.add_parser("lift", help="reindex torus coefficients along the order")
    p.add_argument("--alpha", type=float, help="order slope for torus input")
    _add_io(p)

    p = subs.add_parser("ahiezer", help="symmetric entire factor pair")
    p.add_argument("--box", type=_parse_box, help="x0,x1,y0,y1 zero-count box")
    p.add_argument("--samples-box", type=int, default=64, dest="samples_box")
    _add_io(p)

    p = subs.add_parser("verify", help="cross-method verification suites")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--tol", type=float, dest="tol")
    _add_io(p)

    p = subs.add_parser("compare", help="pairwise factor agreement")
    p.add_argument("--methods", type=_parse_methods, default=list(METHODS))
    p.add_argument("--grid", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--ladder", type=_parse_ladder)
    p.add_argument("--alpha", type=float)
    p.add_argument("--tol", type=float, dest="tol")
    _add_io(p)
    return parser


def _config_from(args) -> RunConfig:
    tolerances = {}
    for name in (
        "nonneg_tol",
        "boundary_tol",
        "trunc_tol",
        "alias_tol",
        "threshold",
        "tol",
    ):
        value = getattr(args, name, None)
        if value is not None:
            tolerances[name] = value
    return RunConfig(
        command=args.command,
        method=getattr(args, "method", None),
        grid=getattr(args, "grid", None),
        order=getattr(args, "order", None),
        ladder=getattr(args, "ladder", None),
        alpha=getattr(args, "alpha", None),
        tolerances=tolerances,
        input=getattr(args, "input", None),
        output=getattr(args, "output", None),
    )


COMMANDS = {
    "factor": cmd_factor,
    "mahler": cmd_mahler,
    "lift": cmd_lift,
    "ahiezer": cmd_ahiezer,
    "verify": cmd_verify,
    "compare": cmd_compare,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from(args)
    try:
        cfg.validate()
        return COMMANDS[args.command](cfg, args)
    except SpecfactError as exc:
        code = 3 if isinstance(exc, NumericalError) else 2
        # a command may pin its partial results onto the exception
        payload = dict(getattr(exc, "payload", {}))
        payload.update(
            {
                "command": args.command,
                "error": type(exc).__name__,
                "message": str(exc),
                "config": cfg.echo(),
            }
        )
        _write_json(payload, cfg.output)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    raise SystemExit(main())
