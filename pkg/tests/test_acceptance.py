"""Acceptance criteria 1-9, one printed PASS/FAIL line each.

The default sweep runs once, serially and in-process; criteria 1-8 read
its report lines.  Criterion 9 runs the same default config again through
the CLI with two workers and compares the reports without timings.
"""

import json
import subprocess
import sys
from collections import defaultdict

import pytest

from qsupercong.runner import SweepConfig, execute

pytestmark = pytest.mark.slow

CLASSICAL_REQUIRED = {
    "VanHamme_C2": {5, 7, 11, 13},
    "Long_C2_p4": {5, 7, 11, 13},
    "GW_gen": {5, 7, 11, 13},
    "WangHu": {5, 7, 11, 13},
    "VanHamme_G2": {5, 13},
    "He_G2_p4": {5, 13},
    "Swisher": {7, 11},
    "Cor13": {5, 13},
    "Cor15": {7, 11},
    "Cor16": {7, 11},
    "SunZW": {5, 7, 11, 13},
    "SunZH": {5, 7, 11, 13},
}


@pytest.fixture(scope="module")
def serial():
    return execute(SweepConfig(jobs=1))


@pytest.fixture(scope="module")
def by_suite(serial):
    out = defaultdict(list)
    for line in serial:
        out[line.suite].append(line)
    return out


def _report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")


def _failures(lines):
    return [ln for ln in lines if not ln.holds]


def _seconds(lines):
    return sum(ln.elapsed_ms for ln in lines) / 1000


def test_criterion_1_theorem1_sweep(by_suite, capsys):
    lines = by_suite["theorem1"]
    bad = _failures(lines)
    errors = [ln for ln in lines if ln.error]
    secs = _seconds(lines)
    ms = {ln.params["M"] for ln in lines}
    ok = bool(lines) and not bad and not errors and ms == {"short", "long"} and secs < 600
    _report(capsys, 1, ok, f"{len(lines)} instances, {len(bad)} failures, "
                           f"{len(errors)} errors, {secs:.1f}s")
    assert ok


def test_criterion_2_theorem2_sweep(by_suite, capsys):
    lines = by_suite["theorem2"]
    bad = _failures(lines)
    d2 = [ln for ln in lines if ln.params["d"] == 2]
    ok = bool(lines) and bool(d2) and not bad and not any(ln.error for ln in lines)
    _report(capsys, 2, ok, f"{len(lines)} instances ({len(d2)} with d=2), {len(bad)} failures")
    assert ok


def test_criterion_3_refinement_consistency(by_suite, capsys):
    lines = [ln for ln in by_suite["priors"] if ln.params["result"] in ("Guo_uni", "GS")]
    bad = _failures(lines)
    results = {ln.params["result"] for ln in lines}
    ok = results == {"Guo_uni", "GS"} and not bad
    _report(capsys, 3, ok, f"{len(lines)} shared tuples, {len(bad)} failures")
    assert ok


def test_criterion_4_wz_certificate(by_suite, capsys):
    lines = by_suite["wz"]
    checks = {ln.params["check"] for ln in lines}
    bad = _failures(lines)
    points = sum(ln.params.get("points", 0) for ln in lines if ln.params["check"] == "recurrence")
    secs = _seconds(lines)
    ok = checks == {"recurrence", "telescoping", "iden", "quartic"} and not bad and secs < 300
    _report(capsys, 4, ok, f"{points} recurrence points, {len(lines)} lines, "
                           f"{len(bad)} failures, {secs:.1f}s")
    assert ok


def test_criterion_5_lemma_suite(by_suite, capsys):
    lines = by_suite["lemmas"]
    per_check = defaultdict(lambda: [0, 0])
    for ln in lines:
        per_check[ln.params["check"]][0] += 1
        per_check[ln.params["check"]][1] += not ln.holds
    vanishing_ok = all(ln.params.get("specialisations", 0) >= 3 for ln in lines
                       if ln.params["check"] in ("lemma21", "lemma22"))
    bad = _failures(lines)
    ok = bool(lines) and not bad and vanishing_ok
    detail = ", ".join(f"{c} {f}/{n} failing" for c, (n, f) in sorted(per_check.items()))
    _report(capsys, 5, ok, detail)
    assert ok


def test_criterion_6_classical_suite(by_suite, capsys):
    lines = [ln for ln in by_suite["classical"] if ln.params["statement"] != "q_to_1"]
    seen = defaultdict(set)
    for ln in lines:
        seen[ln.params["statement"]].add(ln.params["p"])
    missing = {s: ps - seen[s] for s, ps in CLASSICAL_REQUIRED.items() if ps - seen[s]}
    bad = _failures(lines)
    secs = _seconds(lines)
    ok = not missing and not bad and secs < 120
    _report(capsys, 6, ok, f"{len(lines)} statement/prime pairs, {len(bad)} failures, "
                           f"missing {missing or 'none'}, {secs:.1f}s")
    assert ok


def test_criterion_7_q_to_1(by_suite, capsys):
    lines = [ln for ln in by_suite["classical"] if ln.params["statement"] == "q_to_1"]
    combos = {(ln.params["p"], ln.params["d"], ln.params["M"]) for ln in lines}
    want = {(n, d, m) for n in (5, 13) for d in (2, 4) for m in ("short", "long")}
    bad = _failures(lines)
    ok = want <= combos and not bad
    _report(capsys, 7, ok, f"{len(combos)} (n, d, M) cases, {len(bad)} mismatches")
    assert ok


def test_criterion_8_sharpness(by_suite, capsys):
    lines = {ln.params["family"]: ln for ln in by_suite["sharpness"]}
    failed = {f: ln.params["failed"] for f, ln in lines.items()}
    ok = (set(lines) == {"theorem1", "theorem2"}
          and all(ln.holds and ln.params["failed"] >= 3 for ln in lines.values()))
    _report(capsys, 8, ok, f"tuples failing mod [n]Phi_n^5: {failed}")
    assert ok


def _strip(obj):
    return {k: v for k, v in obj.items() if k != "elapsed_ms"}


def test_criterion_9_determinism(serial, tmp_path, capsys):
    out = tmp_path / "parallel.jsonl"
    proc = subprocess.run([sys.executable, "-m", "qsupercong", "verify", "--jobs", "2",
                           "--out", str(out)], capture_output=True, text=True)
    parallel = [_strip(json.loads(s)) for s in out.read_text().splitlines()]
    reference = [_strip(json.loads(ln.to_json())) for ln in serial]
    expected_code = 0 if all(ln.holds for ln in serial) else 1
    ok = parallel == reference and proc.returncode == expected_code
    _report(capsys, 9, ok, f"serial in-process vs 2-worker CLI run: {len(reference)} lines, "
                           f"{'identical' if parallel == reference else 'different'}")
    assert ok
