"""Command-line driver.

    genvirial solve|verify|classical|ndim --config run.ini --out results/
              [--tol 1e-6] [--grid-h 1e-3]

Exit codes: 0 success, 1 verification failure, 2 configuration error.

Config grammar (INI; the same nesting is accepted as JSON)::

    [potential]   kind = oscillator | linear | power | coulomb
                  A = 1.0, m = 2.0 (power), strength = 1.0 (coulomb)
    [dimension]   N = 3
    [states]      list = 0,0; 1,0; 0,1          (n, l1 pairs)
    [probes]      j = 0, 1, 2, 3, 2l+2, -2l    (numbers, a/b, 2l+2, -2l, q0, exp, sin)
    [relations]   select = general, special, power_law, chains
    [grid]        h = 0.001, margin = 10, rho_max = (optional)
    [tolerance]   relative = 1e-6
    [classical]   E, l2, probes = 1, 2, 3, gap_state = n,l (optional), nodes = 2048
"""
from __future__ import annotations

import argparse
import configparser
import csv
import json
import math
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

from . import __version__
from .classical import (classical_virial_residual, make_orbit, period_average,
                        quantum_classical_gap)
from .errors import ConfigError, GenVirialError
from .expectations import expect, expect_power
from .potentials import Coulomb, PowerLaw, ScaledPotential
from .radial import DimensionConfig, Eigenstate, Grid, default_grid, solve_eigenstate
from .relations import (POWER_LAW_CASES, SPECIAL_CASES, ProbeFunction, RelationReport,
                        coulomb_kramer_chain, general_residual, linear_chain, ndim_residual,
                        oscillator_odd_chain, oscillator_v_chain, power_law_relation,
                        special_case_residual, threshold_exponent)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

_KINDS = ("oscillator", "linear", "power", "coulomb")
_FAMILIES = ("general", "special", "power_law", "chains")
_NAMED_PROBES = ("exp", "sin")
_SCHEMA = {
    "potential": {"kind", "A", "m", "strength"},
    "dimension": {"N"},
    "states": {"list"},
    "probes": {"j"},
    "relations": {"select"},
    "grid": {"h", "margin", "rho_max"},
    "tolerance": {"relative"},
    "classical": {"E", "l2", "probes", "gap_state", "nodes"},
}


# --------------------------------------------------------------------------
# configuration
# --------------------------------------------------------------------------

@dataclass
class RunConfig:
    """Parsed run configuration in canonical form."""

    kind: str = "oscillator"
    A: float = 1.0
    m: float = 2.0
    strength: float = 1.0
    N: int = 3
    states: List[Tuple[int, int]] = field(default_factory=lambda: [(0, 0)])
    probes: List[str] = field(default_factory=lambda: ["0", "1", "2", "3", "2l+2", "-2l"])
    select: List[str] = field(default_factory=lambda: list(_FAMILIES))
    h: float = 1e-3
    margin: float = 10.0
    rho_max: Optional[float] = None
    tol: float = 1e-6
    E: Optional[float] = None
    l2: Optional[float] = None
    classical_probes: List[str] = field(default_factory=lambda: ["1", "2", "3"])
    gap_state: Optional[Tuple[int, int]] = None
    nodes: int = 2048

    def potential(self) -> ScaledPotential:
        if self.kind == "oscillator":
            return PowerLaw(1.0, 2.0)
        if self.kind == "linear":
            return PowerLaw(1.0, 1.0)
        if self.kind == "power":
            return PowerLaw(self.A, self.m)
        return Coulomb(self.strength)

    def to_dict(self) -> dict:
        pot = {"kind": self.kind}
        if self.kind == "power":
            pot.update(A=self.A, m=self.m)
        elif self.kind == "coulomb":
            pot["strength"] = self.strength
        grid = {"h": self.h, "margin": self.margin}
        if self.rho_max is not None:
            grid["rho_max"] = self.rho_max
        out = {
            "potential": pot,
            "dimension": {"N": self.N},
            "states": {"list": "; ".join(f"{n},{l}" for n, l in self.states)},
            "probes": {"j": ", ".join(self.probes)},
            "relations": {"select": ", ".join(self.select)},
            "grid": grid,
            "tolerance": {"relative": self.tol},
        }
        if self.E is not None:
            cl = {"E": self.E, "l2": self.l2, "probes": ", ".join(self.classical_probes),
                  "nodes": self.nodes}
            if self.gap_state is not None:
                cl["gap_state"] = f"{self.gap_state[0]},{self.gap_state[1]}"
            out["classical"] = cl
        return out

    def to_ini(self) -> str:
        lines = []
        for sec, body in self.to_dict().items():
            lines.append(f"[{sec}]")
            lines.extend(f"{k} = {v!r}" if isinstance(v, float) else f"{k} = {v}"
                         for k, v in body.items())
            lines.append("")
        return "\n".join(lines)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        unknown = set(d) - set(_SCHEMA)
        if unknown:
            raise ConfigError(f"unknown section(s): {sorted(unknown)}")
        for sec, body in d.items():
            if not isinstance(body, dict):
                raise ConfigError(f"section [{sec}] must be a mapping")
            bad = set(body) - _SCHEMA[sec]
            if bad:
                raise ConfigError(f"unknown key(s) in [{sec}]: {sorted(bad)}")
        cfg = cls()
        pot = d.get("potential", {})
        cfg.kind = str(pot.get("kind", cfg.kind)).strip().lower()
        if cfg.kind not in _KINDS:
            raise ConfigError(f"potential kind must be one of {_KINDS}, got {cfg.kind!r}")
        cfg.A = _num(pot, "A", cfg.A)
        cfg.m = _num(pot, "m", cfg.m)
        cfg.strength = _num(pot, "strength", cfg.strength)
        if cfg.kind == "power" and not (cfg.A > 0 and cfg.m > -2):
            raise ConfigError("power potential needs A > 0 and m > -2")
        if cfg.kind == "coulomb" and not cfg.strength > 0:
            raise ConfigError("coulomb strength must be > 0")
        cfg.N = int(_num(d.get("dimension", {}), "N", cfg.N))
        if cfg.N < 1:
            raise ConfigError("N must be >= 1")
        if "list" in d.get("states", {}):
            cfg.states = _pairs(d["states"]["list"])
        if not cfg.states:
            raise ConfigError("at least one state is required")
        for n, l in cfg.states:
            if n < 0 or l < 0 or (cfg.N == 1 and l):
                raise ConfigError(f"invalid state ({n}, {l})")
        if "j" in d.get("probes", {}):
            cfg.probes = _tokens(d["probes"]["j"])
        for tok in cfg.probes:
            _check_probe_token(tok)
        if "select" in d.get("relations", {}):
            cfg.select = _tokens(d["relations"]["select"])
        bad = set(cfg.select) - set(_FAMILIES)
        if bad:
            raise ConfigError(f"unknown relation families {sorted(bad)}; choose from {_FAMILIES}")
        g = d.get("grid", {})
        cfg.h = _num(g, "h", cfg.h)
        cfg.margin = _num(g, "margin", cfg.margin)
        if "rho_max" in g:
            cfg.rho_max = _num(g, "rho_max", 0.0)
        if not (cfg.h > 0 and cfg.margin > 0) or (cfg.rho_max is not None and cfg.rho_max <= 0):
            raise ConfigError("grid values must be positive")
        cfg.tol = _num(d.get("tolerance", {}), "relative", cfg.tol)
        if not cfg.tol > 0:
            raise ConfigError("tolerance must be positive")
        cl = d.get("classical")
        if cl is not None:
            if "E" not in cl or "l2" not in cl:
                raise ConfigError("[classical] needs E and l2")
            cfg.E, cfg.l2 = _num(cl, "E", 0.0), _num(cl, "l2", 0.0)
            if cfg.l2 < 0:
                raise ConfigError("l2 must be >= 0")
            if "probes" in cl:
                cfg.classical_probes = _tokens(cl["probes"])
            for tok in cfg.classical_probes:
                _check_probe_token(tok)
            if "gap_state" in cl:
                pairs = _pairs(cl["gap_state"])
                if len(pairs) != 1:
                    raise ConfigError("gap_state must be a single n,l pair")
                cfg.gap_state = pairs[0]
            cfg.nodes = int(_num(cl, "nodes", cfg.nodes))
            if cfg.nodes < 16:
                raise ConfigError("nodes must be >= 16")
        return cfg

    @classmethod
    def from_ini(cls, text: str) -> "RunConfig":
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str
        try:
            cp.read_string(text)
        except configparser.Error as exc:
            raise ConfigError(f"cannot parse config: {exc}") from None
        return cls.from_dict({s: dict(cp[s]) for s in cp.sections()})

    @classmethod
    def load(cls, path) -> "RunConfig":
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        if path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"invalid JSON config: {exc}") from None
            if not isinstance(data, dict):
                raise ConfigError("JSON config must be an object")
            return cls.from_dict(data)
        return cls.from_ini(text)


def _num(sec: dict, key: str, default: float) -> float:
    if key not in sec:
        return default
    try:
        val = float(Fraction(str(sec[key]).strip()))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{key} must be a number, got {sec[key]!r}") from None
    if not math.isfinite(val):
        raise ConfigError(f"{key} must be finite")
    return val


def _tokens(text) -> List[str]:
    if isinstance(text, (list, tuple)):
        return [str(t).strip() for t in text if str(t).strip()]
    return [t.strip() for t in str(text).split(",") if t.strip()]


def _pairs(text) -> List[Tuple[int, int]]:
    if isinstance(text, (list, tuple)):
        items = [",".join(str(x) for x in item) if isinstance(item, (list, tuple)) else str(item)
                 for item in text]
    else:
        items = [t for t in str(text).split(";") if t.strip()]
    out = []
    for item in items:
        parts = [p.strip() for p in item.split(",")]
        try:
            n, l = (int(p) for p in parts)
        except ValueError:
            raise ConfigError(f"state must be 'n,l', got {item!r}") from None
        out.append((n, l))
    return out


def _check_probe_token(tok: str) -> None:
    if tok in ("2l+2", "-2l", "q0") or tok in _NAMED_PROBES:
        return
    try:
        Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"unrecognised probe {tok!r}") from None


def _probe(tok: str, N: int, l: int) -> ProbeFunction:
    if tok == "2l+2":
        return ProbeFunction.power(2 * l + 2)
    if tok == "-2l":
        return ProbeFunction.power(-2 * l)
    if tok == "q0":
        return ProbeFunction.power(int(threshold_exponent(N, l)))
    if tok == "exp":
        e = lambda r: np.exp(-r)
        return ProbeFunction.custom(e, lambda r: -e(r), e, lambda r: -e(r), 0, 1.0)
    if tok == "sin":
        return ProbeFunction.custom(np.sin, np.cos, lambda r: -np.sin(r), lambda r: -np.cos(r),
                                    1, 1.0)
    q = Fraction(tok)
    return ProbeFunction.power(int(q) if q.denominator == 1 else float(q))


# --------------------------------------------------------------------------
# shared helpers
# --------------------------------------------------------------------------

def _solve_states(cfg: RunConfig, errors: list) -> List[Eigenstate]:
    p = cfg.potential()
    out = []
    for n, l in cfg.states:
        dim = DimensionConfig(cfg.N, l)
        try:
            if cfg.rho_max is not None:
                grid = Grid.uniform(cfg.h, cfg.rho_max)
            else:
                grid = default_grid(p, dim, n, h=cfg.h, margin=cfg.margin)
            out.append(solve_eigenstate(p, dim, n, grid=grid))
        except GenVirialError as exc:
            errors.append({"state": {"n": n, "l1": l, "N": cfg.N}, "error": str(exc)})
    return out


def _write_states(states: List[Eigenstate], out: Path) -> None:
    d = out / "states"
    d.mkdir(parents=True, exist_ok=True)
    for s in states:
        s.to_csv(d / f"{s.label}.csv")
        s.to_json(d / f"{s.label}.json")


def _error_report(rid: str, s: Eigenstate, exc: Exception) -> RelationReport:
    meta = {"label": s.label, "n": s.n, "l1": s.dim.l1, "N": s.dim.N, "eps": s.eps}
    return RelationReport(rid, math.nan, math.nan, math.nan, False, meta, f"error: {exc}")


def _chain_reports(s: Eigenstate, cfg: RunConfig) -> List[RelationReport]:
    p, l = s.potential, s.dim.l1
    meta = {"label": s.label, "n": s.n, "l1": l, "N": s.dim.N, "eps": s.eps}
    rows = []
    if s.dim.N != 3 or not isinstance(p, (PowerLaw, Coulomb)):
        return rows
    if isinstance(p, PowerLaw) and p.A == 1.0 and p.m == 2.0:
        ch = oscillator_v_chain(s.eps, l, 4)
        for k in range(1, 5):
            m = expect(s, lambda r, k=k: (0.5 * r * r) ** k, 2 * k, f"v^{k}")
            rows.append(RelationReport(f"chain_v[{k}]", ch[k], m.value, m.err, False, dict(meta)))
        for j, val in oscillator_odd_chain(s, 5).items():
            m = expect_power(s, j)
            rows.append(RelationReport(f"chain_odd[{j}]", val, m.value, m.err, False, dict(meta)))
    elif isinstance(p, PowerLaw) and p.A == 1.0 and p.m == 1.0 and l == 0:
        ch = linear_chain(s.eps, 4)
        for k in range(1, 5):
            m = expect(s, lambda r, k=k: (0.5 * r) ** k, k, f"v^{k}")
            rows.append(RelationReport(f"chain_linear[{k}]", ch[k], m.value, m.err, False,
                                       dict(meta)))
    elif isinstance(p, Coulomb) and p.strength == 1.0:
        for j, val in coulomb_kramer_chain(s.eps, l, 4).items():
            if j < -2 * l - 2:
                continue
            m = expect_power(s, j)
            rows.append(RelationReport(f"chain_kramers[{j}]", val, m.value, m.err, False,
                                       dict(meta)))
    return rows


def _verify_state(s: Eigenstate, cfg: RunConfig, ndim: bool) -> List[RelationReport]:
    rows = []
    seen = set()
    for tok in cfg.probes:
        try:
            f = _probe(tok, cfg.N, s.dim.l1)
        except GenVirialError as exc:
            rows.append(_error_report(f"probe[{tok}]", s, exc))
            continue
        key = f.label if f.kind == "power" else tok
        if key in seen:
            continue
        seen.add(key)
        rid = f"{'ndim' if ndim else 'general'}[{tok if f.kind == 'custom' else f.label}]"
        try:
            r = ndim_residual(s, f) if ndim else general_residual(s, f)
            r.relation = rid
            rows.append(r)
        except GenVirialError as exc:
            rows.append(_error_report(rid, s, exc))
    if ndim or s.dim.N != 3:
        return rows
    if "special" in cfg.select:
        for case in SPECIAL_CASES:
            try:
                rows.append(special_case_residual(s, case))
            except GenVirialError:
                pass  # not applicable to this potential or l
    if "power_law" in cfg.select and isinstance(s.potential, PowerLaw):
        for case in POWER_LAW_CASES:
            try:
                rows.append(power_law_relation(s, s.potential, case))
            except GenVirialError:
                pass
    if "chains" in cfg.select:
        try:
            rows.extend(_chain_reports(s, cfg))
        except GenVirialError as exc:
            rows.append(_error_report("chains", s, exc))
    return rows


def _sort_key(r: RelationReport):
    return (r.relation, r.state.get("n", 0), r.state.get("l1", 0))


def _write_reports(rows: List[RelationReport], out: Path, cfg: RunConfig, command: str) -> None:
    d = out / "reports"
    d.mkdir(parents=True, exist_ok=True)
    rows = sorted(rows, key=_sort_key)
    (d / "relations.json").write_text(
        json.dumps([_finite(r.to_dict()) for r in rows], indent=2, allow_nan=False) + "\n")
    with (d / "relations.csv").open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(RelationReport.CSV_HEADER)
        for r in rows:
            w.writerow([_fmt(x) for x in r.csv_row()])


def _write_run_meta(out: Path, cfg: RunConfig, command: str) -> None:
    d = out / "reports"
    d.mkdir(parents=True, exist_ok=True)
    meta = {"command": command, "version": __version__,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "config": cfg.to_dict()}
    (d / "run.json").write_text(json.dumps(meta, indent=2) + "\n")


def _finite(d: dict) -> dict:
    # NaN marks an error row; strict JSON has no NaN, so store null
    return {k: (None if isinstance(v, float) and not math.isfinite(v) else v)
            for k, v in d.items()}


def _fmt(x) -> str:
    return repr(float(x)) if isinstance(x, (float, np.floating)) else str(x)


def _failed(r: RelationReport, tol: float) -> bool:
    return not (math.isfinite(r.relative) and abs(r.relative) <= tol)


def _summarize(rows: List[RelationReport], tol: float) -> int:
    print(f"{'relation':<28} {'n':>3} {'l':>3} {'lhs':>22} {'rhs':>22} {'rel.resid':>10}")
    for r in sorted(rows, key=_sort_key):
        mark = "FAIL" if _failed(r, tol) else "ok"
        print(f"{r.relation:<28} {r.state.get('n', ''):>3} {r.state.get('l1', ''):>3} "
              f"{r.lhs:>22.15g} {r.rhs:>22.15g} {r.relative:>10.2e} {mark}")
    bad = [r for r in rows if _failed(r, tol)]
    if not bad:
        print(f"all {len(rows)} relations within {tol:g}")
        return EXIT_OK
    worst = max(bad, key=lambda r: abs(r.relative) if math.isfinite(r.relative) else math.inf)
    detail = worst.flag or f"relative residual {worst.relative:.3e}"
    print(f"{len(bad)} of {len(rows)} relations exceed {tol:g}; worst: {worst.relation} "
          f"on {worst.state.get('label', '?')} ({detail})", file=sys.stderr)
    return EXIT_FAIL


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_solve(cfg: RunConfig, out: Path) -> int:
    errors: list = []
    states = _solve_states(cfg, errors)
    _write_states(states, out)
    _write_run_meta(out, cfg, "solve")
    print(f"{'state':<28} {'n':>3} {'l1':>3} {'eps':>22} {'C2':>22}")
    for s in states:
        print(f"{s.label:<28} {s.n:>3} {s.dim.l1:>3} {s.eps!r:>22} {s.C2!r:>22}")
    for e in errors:
        st = e["state"]
        print(f"error: state n={st['n']} l={st['l1']}: {e['error']}", file=sys.stderr)
    return EXIT_FAIL if errors else EXIT_OK


def _cmd_relations(cfg: RunConfig, out: Path, ndim: bool) -> int:
    errors: list = []
    states = _solve_states(cfg, errors)
    _write_states(states, out)
    rows = []
    for s in states:
        rows.extend(_verify_state(s, cfg, ndim))
    for e in errors:
        st = e["state"]
        rows.append(RelationReport("solve", math.nan, math.nan, math.nan, False,
                                   {"label": "", **st}, f"error: {e['error']}"))
    _write_reports(rows, out, cfg, "ndim" if ndim else "verify")
    _write_run_meta(out, cfg, "ndim" if ndim else "verify")
    return _summarize(rows, cfg.tol)


def cmd_verify(cfg: RunConfig, out: Path) -> int:
    return _cmd_relations(cfg, out, ndim=False)


def cmd_ndim(cfg: RunConfig, out: Path) -> int:
    return _cmd_relations(cfg, out, ndim=True)


def cmd_classical(cfg: RunConfig, out: Path) -> int:
    if cfg.E is None:
        raise ConfigError("the classical command needs a [classical] section")
    p = cfg.potential()
    report: dict = {"potential": p.to_dict(), "E": cfg.E, "l2": cfg.l2}
    status = EXIT_OK
    try:
        orbit = make_orbit(p, cfg.E, cfg.l2, cfg.nodes)
    except GenVirialError as exc:
        report["error"] = str(exc)
        orbit = None
        status = EXIT_FAIL
        print(f"error: {exc}", file=sys.stderr)
    if orbit is not None:
        avg = lambda g: period_average(orbit, g, cfg.nodes)
        report["orbit"] = orbit.to_dict()
        report["averages"] = {
            "T": avg(lambda r: cfg.E - p.v(r)),
            "V": avg(p.v),
            "r_dV": avg(lambda r: r * p.dv(r)),
            "T_r": avg(orbit.T_r),
        }
        residuals = []
        for tok in cfg.classical_probes:
            f = _probe(tok, 3, 0)
            r = classical_virial_residual(orbit, f, cfg.nodes)
            residuals.append({"probe": tok, "value": r.lhs, "err": r.err,
                              "pass": abs(r.lhs) <= cfg.tol})
            if abs(r.lhs) > cfg.tol:
                status = EXIT_FAIL
        report["residuals"] = residuals
        print(f"orbit r_min={orbit.r_min!r} r_max={orbit.r_max!r} period={orbit.period!r}")
        for k, v in report["averages"].items():
            print(f"  <{k}> = {v!r}")
        for row in residuals:
            print(f"  classical residual f={row['probe']}: {row['value']:.3e}")
    if cfg.gap_state is not None:
        n, l = cfg.gap_state
        gaps = []
        try:
            dim = DimensionConfig(3, l)
            grid = (Grid.uniform(cfg.h, cfg.rho_max) if cfg.rho_max is not None
                    else default_grid(p, dim, n, h=cfg.h, margin=cfg.margin))
            s = solve_eigenstate(p, dim, n, grid=grid)
            gorbit = make_orbit(p, s.eps, float(l * (l + 1)), cfg.nodes)
            for tok in cfg.classical_probes:
                g = quantum_classical_gap(s, gorbit, _probe(tok, 3, l))
                ok = abs(g.residual) <= cfg.tol
                gaps.append({"probe": tok, "quantum_lhs": g.quantum_lhs,
                             "classical_lhs": g.classical_lhs, "predicted_gap": g.predicted_gap,
                             "residual": g.residual, "pass": ok})
                status = status if ok else EXIT_FAIL
                print(f"  gap f={tok}: quantum={g.quantum_lhs:.12g} classical={g.classical_lhs:.3e}"
                      f" predicted={g.predicted_gap:.12g} residual={g.residual:.2e}")
            report["gap"] = {"state": {"n": n, "l": l, "eps": s.eps}, "rows": gaps}
        except GenVirialError as exc:
            report["gap"] = {"error": str(exc)}
            status = EXIT_FAIL
            print(f"error: gap analysis: {exc}", file=sys.stderr)
    d = out / "reports"
    d.mkdir(parents=True, exist_ok=True)
    (d / "classical.json").write_text(json.dumps(report, indent=2) + "\n")
    _write_run_meta(out, cfg, "classical")
    return status


_COMMANDS = {"solve": cmd_solve, "verify": cmd_verify, "classical": cmd_classical,
             "ndim": cmd_ndim}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genvirial",
        description="Solve radial bound states and check generalized virial relations")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", required=True, help="INI or JSON run configuration")
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--tol", type=float, default=None, help="relative tolerance override")
    parser.add_argument("--grid-h", type=float, default=None, help="grid step override")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        cfg = RunConfig.load(args.config)
        if args.tol is not None:
            if not args.tol > 0:
                raise ConfigError("--tol must be positive")
            cfg.tol = args.tol
        if args.grid_h is not None:
            if not args.grid_h > 0:
                raise ConfigError("--grid-h must be positive")
            cfg.h = args.grid_h
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        return _COMMANDS[args.command](cfg, out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
