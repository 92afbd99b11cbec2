"""Parameter sweeps over the verification suites, with JSON-lines reports."""

from __future__ import annotations

import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .classical import ADMISSIBLE_PRIMES, CLASSICAL_STATEMENTS, q_to_1_crosscheck, verify_classical
from .congruence import (
    CoprimalityError,
    IntegralityError,
    ParameterError,
    lemma_coprimality_gk,
    lemma_coprimality_prefactor,
    lemma_coprimality_qint,
)
from .padic import is_prime
from .theorems import (
    FAMILIES,
    TheoremParams,
    enumerate_valid_params,
    lhs_sum,
    prior_params,
    rhs,
    verify_lemma_vanishing,
    verify_prior,
    verify_theorem,
)
from .wz import (
    WZPoint,
    verify_F_mid,
    verify_G_congruence,
    verify_iden,
    verify_lemma_F,
    verify_quartic_identity,
    verify_telescoping,
    verify_wz_recurrence,
    wz_grid,
)

SUITES = ("theorem1", "theorem2", "priors", "lemmas", "wz", "classical", "sharpness")
EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_CONFIG = 0, 1, 2, 3

# rational (a, b) specialisations tried for the vanishing lemmas; 3 must succeed
VANISHING_POINTS = ((2, 3), (3, 5), (-2, 7), (5, -3), (7, 11))
VANISHING_REQUIRED = 3
SHARPNESS_REQUIRED = 3
SHARPNESS_SAMPLE = 8


class ConfigError(ValueError):
    pass


@dataclass
class SweepConfig:
    families: tuple = SUITES
    n_max: int = 21
    d_max: int = 6
    r_window: int | None = None
    primes: tuple = (5, 7, 11, 13)
    precision: dict = field(default_factory=dict)
    jobs: int = 1
    output: str = "report.jsonl"
    n_min: int = 3

    def validate(self) -> "SweepConfig":
        bad = [s for s in self.families if s not in SUITES]
        if bad:
            raise ConfigError(f"unknown suite(s): {', '.join(bad)}")
        if not self.families:
            raise ConfigError("no suites selected")
        if self.n_max < 3:
            raise ConfigError(f"n_max must be >= 3, got {self.n_max}")
        if self.d_max < 2:
            raise ConfigError(f"d_max must be >= 2, got {self.d_max}")
        if self.r_window is not None and self.r_window < 0:
            raise ConfigError("r_window must be nonnegative")
        for p in self.primes:
            if p < 3 or not is_prime(p):
                raise ConfigError(f"{p} is not an odd prime")
        if self.jobs < 1:
            raise ConfigError("jobs must be positive")
        for key, value in self.precision.items():
            if key not in ("phi_power", "sharpness_extra"):
                raise ConfigError(f"unknown precision override {key!r}")
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"precision override {key} must be a positive integer")
        return self

    @property
    def phi_power(self) -> int:
        return self.precision.get("phi_power", 4)

    @property
    def sharpness_extra(self) -> int:
        return self.precision.get("sharpness_extra", 1)


@dataclass
class ReportLine:
    suite: str
    params: dict
    holds: bool
    witness_degree: int | None = None
    elapsed_ms: int = 0
    error: str | None = None

    def to_json(self) -> str:
        return json.dumps({"suite": self.suite, "params": self.params, "holds": self.holds,
                           "witness_degree": self.witness_degree, "elapsed_ms": self.elapsed_ms})

    def sort_key(self):
        return (self.suite, json.dumps(self.params, sort_keys=True))


# ---------------------------------------------------------------------------
# task bodies: each returns (holds, witness_degree, extra params)


def _theorem(family, n, d, r, m_choice, phi_power):
    rep = verify_theorem(TheoremParams(family, n, d, r, m_choice), phi_power)
    return bool(rep), rep.witness_degree, {}


def _prior(result_id, n, d, r, m_choice):
    rep = verify_prior(result_id, n, d, r, m_choice)
    return bool(rep), rep.witness_degree, {}


def _coprimality(variant, n, d, r):
    K = _k_range(variant, n, d, r)
    reports = [lemma_coprimality_prefactor(n, d, r, variant)]
    reports += [lemma_coprimality_gk(n, d, r, k, variant) for k in range(1, K + 1)]
    reports += [lemma_coprimality_qint(n, d, k, variant) for k in range(1, n)]
    bad = [rep for rep in reports if not rep.coprime]
    extra = {"checked": len(reports), "non_coprime": len(bad),
             "phi_n_coprime": all(rep.coprime_to_phi_n for rep in reports)}
    return not bad, None, extra


def _k_range(variant, n, d, r):
    family = "theorem1" if variant == "n" else "theorem2"
    return TheoremParams(family, n, d, r).K


def _vanishing(lemma, n, d, r):
    ok, failed, deg = 0, 0, None
    for a, b in VANISHING_POINTS:
        try:
            rep = verify_lemma_vanishing(lemma, n, d, r, a, b)
        except (CoprimalityError, ParameterError):
            continue
        if rep:
            ok += 1
        else:
            failed += 1
            deg = rep.witness_degree
        if ok >= VANISHING_REQUIRED:
            break
    return ok >= VANISHING_REQUIRED and not failed, deg, {"specialisations": ok}


def _lemma_f(variant, n, d, r):
    rep = verify_lemma_F(variant, n, d, r)
    if rep and variant == "n":
        rep = verify_F_mid(n, d, r)
    return bool(rep), rep.witness_degree, {}


def _g_final(variant, n, d, r):
    for k in range(1, _k_range(variant, n, d, r) + 1):
        rep = verify_G_congruence(n, d, r, k, variant)
        if not rep:
            return False, rep.witness_degree, {"k": k}
    return True, None, {}


def _wz_recurrence(d, r, m_max):
    pts = [pt for pt in wz_grid(m_max, (d,)) if pt.r == r]
    bad = [pt for pt in pts if not verify_wz_recurrence(pt)]
    return not bad, None, {"points": len(pts)}


def _telescoping(variant, n, d, r):
    return verify_telescoping(n, d, r, variant), None, {}


def _iden(d, k_max):
    checked = 0
    for r in range(-d - 1, d + 2):
        for k in range(1, k_max + 1):
            try:
                ok = verify_iden(d, r, k)
            except ParameterError:
                continue
            checked += 1
            if not ok:
                return False, None, {"r": r, "k": k}
    return True, None, {"checked": checked}


def _quartic(n, kd_max):
    return all(verify_quartic_identity(n, kd) for kd in range(1, kd_max + 1)), None, {}


def _classical(statement, p):
    rep = verify_classical(statement, p)
    return bool(rep), rep.witness_degree, {}


def _q_to_1(n, d, r, m_choice):
    return q_to_1_crosscheck(TheoremParams("theorem1", n, d, r, m_choice)), None, {}


def sharpness_probe(n: int, d: int, r: int, extra_power: int = 1, family: str | None = None,
                    m_choice: str = "short") -> ReportLine:
    """Re-check a theorem instance modulo [n]Phi_n(q)^(4+extra_power)."""
    t0 = time.perf_counter()
    if family is None:
        try:
            p = TheoremParams("theorem1", n, d, r, m_choice)
        except ParameterError:
            p = TheoremParams("theorem2", n, d, r, m_choice)
    else:
        p = TheoremParams(family, n, d, r, m_choice)
    rep = verify_theorem(p, 4 + extra_power, strict=False)
    ms = int((time.perf_counter() - t0) * 1000)
    return ReportLine("sharpness_probe", {**p.as_dict(), "phi_power": 4 + extra_power},
                      bool(rep), rep.witness_degree, ms)


def _sharpness(family, n_max, d_max, r_window, extra):
    """holds iff enough nontrivial instances fail at the stronger modulus."""
    failed, probed, deg = 0, 0, None
    for p in enumerate_valid_params(family, min(n_max, 13), min(d_max, 5), r_window, n_min=3):
        if lhs_sum(p) == rhs(p):
            continue  # exact identity: congruent to any modulus
        probed += 1
        line = sharpness_probe(p.n, p.d, p.r, extra, family)
        if not line.holds:
            failed += 1
            deg = line.witness_degree if deg is None else max(deg, line.witness_degree or 0)
        if failed >= SHARPNESS_SAMPLE:
            break
    return failed >= SHARPNESS_REQUIRED, deg, {"probed": probed, "failed": failed}


KINDS = {
    "theorem": _theorem,
    "prior": _prior,
    "coprimality": _coprimality,
    "vanishing": _vanishing,
    "lemma_F": _lemma_f,
    "G_final": _g_final,
    "wz_recurrence": _wz_recurrence,
    "telescoping": _telescoping,
    "iden": _iden,
    "quartic": _quartic,
    "classical": _classical,
    "q_to_1": _q_to_1,
    "sharpness": _sharpness,
}

Task = tuple  # (suite, kind, params dict, args tuple)


def _execute(task: Task) -> ReportLine:
    suite, kind, params, args = task
    t0 = time.perf_counter()
    error = None
    try:
        holds, deg, extra = KINDS[kind](*args)
    except (ParameterError, CoprimalityError, IntegralityError) as exc:
        holds, deg, extra = False, None, {}
        error = f"{type(exc).__name__}: {exc}"
    ms = int((time.perf_counter() - t0) * 1000)
    return ReportLine(suite, {**params, **extra}, bool(holds), deg, ms, error)


def build_tasks(cfg: SweepConfig) -> list[Task]:
    tasks: list[Task] = []
    sweep = {f: enumerate_valid_params(f, cfg.n_max, cfg.d_max, cfg.r_window, n_min=cfg.n_min)
             for f in FAMILIES}
    for family in FAMILIES:
        if family in cfg.families:
            for p in sweep[family]:
                for m in ("short", "long"):
                    tasks.append((family, "theorem", {**p.with_m(m).as_dict()},
                                  (family, p.n, p.d, p.r, m, cfg.phi_power)))
    if "priors" in cfg.families:
        tasks += _prior_tasks(cfg, sweep)
    if "lemmas" in cfg.families:
        for family, variant, lemma in (("theorem1", "n", "lemma21"), ("theorem2", "dn", "lemma22")):
            for p in sweep[family]:
                base = {"variant": variant, "n": p.n, "d": p.d, "r": p.r}
                tasks.append(("lemmas", "coprimality", {**base, "check": "coprimality"},
                              (variant, p.n, p.d, p.r)))
                tasks.append(("lemmas", "vanishing", {**base, "check": lemma},
                              (lemma, p.n, p.d, p.r)))
                tasks.append(("lemmas", "lemma_F", {**base, "check": "F"}, (variant, p.n, p.d, p.r)))
                if p.K >= 1:
                    tasks.append(("lemmas", "G_final", {**base, "check": "G_final"},
                                  (variant, p.n, p.d, p.r)))
    if "wz" in cfg.families:
        for d in range(2, 6):
            for r in range(-d + 1, d + 2):
                if gcd(r, d) == 1:
                    tasks.append(("wz", "wz_recurrence", {"check": "recurrence", "d": d, "r": r},
                                  (d, r, 12)))
        for d in range(1, 6):
            tasks.append(("wz", "iden", {"check": "iden", "d": d}, (d, 10)))
        for n in range(1, 31):
            tasks.append(("wz", "quartic", {"check": "quartic", "n": n}, (n, 30)))
        for family, variant in (("theorem1", "n"), ("theorem2", "dn")):
            for p in sweep[family]:
                tasks.append(("wz", "telescoping",
                              {"check": "telescoping", "variant": variant, "n": p.n, "d": p.d, "r": p.r},
                              (variant, p.n, p.d, p.r)))
    if "classical" in cfg.families:
        for statement in CLASSICAL_STATEMENTS:
            for prime in cfg.primes:
                if prime in ADMISSIBLE_PRIMES[statement]:
                    tasks.append(("classical", "classical", {"statement": statement, "p": prime},
                                  (statement, prime)))
        for prime in cfg.primes:
            if prime % 4 != 1:
                continue
            for d in (2, 4):
                for m in ("short", "long"):
                    tasks.append(("classical", "q_to_1",
                                  {"statement": "q_to_1", "p": prime, "d": d, "M": m},
                                  (prime, d, 1, m)))
    if "sharpness" in cfg.families:
        for family in FAMILIES:
            tasks.append(("sharpness", "sharpness", {"family": family, "extra_power": cfg.sharpness_extra},
                          (family, cfg.n_max, cfg.d_max, cfg.r_window, cfg.sharpness_extra)))
    return tasks


def _prior_tasks(cfg: SweepConfig, sweep) -> list[Task]:
    tasks = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        if n % 2:
            tasks.append(("priors", "prior", {"result": "GW_C2", "n": n, "M": "short"},
                          ("GW_C2", n, None, None, "short")))
        if n % 4 == 1:
            for m in ("short", "long"):
                tasks.append(("priors", "prior", {"result": "LW_G2", "n": n, "M": m},
                              ("LW_G2", n, None, None, m)))
    for result_id, family in (("Guo_uni", "theorem1"), ("GS", "theorem2")):
        for p in sweep[family]:
            try:
                prior_params(result_id, p.n, p.d, p.r)
            except ParameterError:
                continue
            for m in ("short", "long"):
                tasks.append(("priors", "prior",
                              {"result": result_id, "n": p.n, "d": p.d, "r": p.r, "M": m},
                              (result_id, p.n, p.d, p.r, m)))
    return tasks


def execute(cfg: SweepConfig) -> list[ReportLine]:
    tasks = build_tasks(cfg)
    if cfg.jobs == 1:
        lines = [_execute(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            lines = list(pool.map(_execute, tasks, chunksize=1))
    lines.sort(key=ReportLine.sort_key)
    return lines


def summarize(lines: list[ReportLine]) -> list[tuple[str, int, int, int | None]]:
    rows = {}
    for line in lines:
        count, fails, deg = rows.get(line.suite, (0, 0, None))
        if not line.holds:
            fails += 1
        if line.witness_degree is not None:
            deg = line.witness_degree if deg is None else max(deg, line.witness_degree)
        rows[line.suite] = (count + 1, fails, deg)
    return [(suite, *rows[suite]) for suite in sorted(rows)]


def format_summary(rows) -> str:
    out = [f"{'suite':<12} {'instances':>9} {'failures':>8} {'max witness deg':>15}"]
    for suite, count, fails, deg in rows:
        out.append(f"{suite:<12} {count:>9} {fails:>8} {'-' if deg is None else deg:>15}")
    return "\n".join(out)


def run(cfg: SweepConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg.validate()
    except ConfigError as exc:
        print(f"config error: {exc}", file=stderr)
        return EXIT_CONFIG
    try:
        out = open(cfg.output, "w", encoding="utf-8")
    except OSError as exc:
        print(f"cannot write {cfg.output}: {exc}", file=stderr)
        return EXIT_IO
    with out:
        lines = execute(cfg)
        try:
            for line in lines:
                out.write(line.to_json() + "\n")
        except OSError as exc:
            print(f"write to {cfg.output} failed: {exc}", file=stderr)
            return EXIT_IO
    print(format_summary(summarize(lines)), file=stdout)
    failures = [line for line in lines if not line.holds]
    for line in failures:
        msg = f" ({line.error})" if line.error else ""
        print(f"FAIL {line.suite} {json.dumps(line.params, sort_keys=True)}{msg}", file=stderr)
    return EXIT_FAIL if failures else EXIT_OK


def default_jobs() -> int:
    return max(1, os.cpu_count() or 1)


__all__ = [
    "ConfigError",
    "ReportLine",
    "SUITES",
    "SweepConfig",
    "build_tasks",
    "execute",
    "run",
    "sharpness_probe",
    "summarize",
]
