"""Acceptance gate: every reproduction criterion at its stated tolerance.

Each test drives the corresponding named checks from framekit.verify and
prints one PASS/FAIL line per criterion row.  The final test runs the
installed ``framekit verify`` CLI end to end and requires exit code 0
inside the runtime budget.
"""

import shutil
import subprocess
import sys
import time

from framekit import verify


def _run(*names):
    rows = []
    for name in names:
        batch, _ = verify.run_checks(only=name)
        rows.extend(batch)
    for r in rows:
        mark = "PASS" if r.passed else "FAIL"
        tol = "-" if r.tolerance is None else f"{r.tolerance:g}"
        print(f"{mark} {r.check} [{r.case}] measured={r.measured:g} "
              f"expected={r.expected} tol={tol}")
    failed = [r for r in rows if not r.passed]
    assert not failed, f"{len(failed)} criterion rows failed: " + \
        "; ".join(f"{r.check}/{r.case}" for r in failed)


def test_criterion_01_pc2_identity():
    _run("pc2-identity")


def test_criterion_02_epsilon_example():
    _run("epsilon-example")


def test_criterion_03_outer_gram_hadamard_identity():
    _run("hadamard-gram")


def test_criterion_04_bound_floor_and_ceiling():
    _run("outer-bound-extremes")


def test_criterion_05_equiangular_simplex_spectrum():
    _run("equiangular-simplex")


def test_criterion_06_biangular_table():
    _run("biangular-table", "biangular-upper", "biangular-degeneracy")


def test_criterion_07_eij_ranks():
    _run("eij-ranks")


def test_criterion_08_duals():
    _run("outer-duals", "unprojected-dual")


def test_criterion_09_cross_products():
    _run("cross-products")


def test_criterion_10_psd_extension_roundtrip():
    _run("psd-extension-roundtrip")


def test_criterion_11_classifier_coherence():
    _run("classifier-coherence")


def test_criterion_12_mu2_subset_mu4():
    _run("mu2-mu4-probe")


def test_criterion_13_perturbation_suite():
    _run("perturbation-suite")


def test_criterion_14_density_and_nudge():
    _run("nudge-repair")


def test_criterion_15_cli_verify_exits_clean():
    binary = shutil.which("framekit")
    cmd = [binary, "verify"] if binary else [sys.executable, "-m", "framekit.cli", "verify"]
    start = time.time()
    proc = subprocess.run(cmd, capture_output=True, text=True, timeout=120)
    elapsed = time.time() - start
    print(f"PASS framekit verify [exit={proc.returncode}, {elapsed:.1f}s]"
          if proc.returncode == 0 else
          f"FAIL framekit verify [exit={proc.returncode}]\n{proc.stderr[-2000:]}")
    assert proc.returncode == 0, proc.stderr[-2000:]
    assert elapsed < 60.0, f"verify took {elapsed:.1f}s, budget is 60s"
    assert "FAIL" not in proc.stderr
