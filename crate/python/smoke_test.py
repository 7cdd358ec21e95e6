#!/usr/bin/env python3
"""Smoke test for the meanforge Python extension.

Build the extension first, then run this script:

    cargo build -p meanforge-py --release
    python3 python/smoke_test.py

The script locates the built cdylib under target/, stages it as an
importable module, and exercises the main types and operations.
"""

import json
import math
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module() -> Path:
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    candidates = [
        REPO / "target" / profile / "libmeanforge_py.so"
        for profile in ("release", "debug")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "libmeanforge_py.so not found under target/; "
            "run `cargo build -p meanforge-py` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="meanforge-py-"))
    shutil.copy2(built, stage / f"meanforge{suffix}")
    return stage


sys.path.insert(0, str(stage_module()))
import meanforge  # noqa: E402


def approx(x, y, tol=1e-10):
    assert abs(x - y) <= tol, f"{x} != {y} (tol {tol})"


def main():
    # Catalan numbers, arbitrary precision
    assert meanforge.catalan(0) == 1
    assert meanforge.catalan(5) == 42
    assert meanforge.catalan(40) == 2622127042276492108820
    assert meanforge.catalan_gf_check(20, "1/8")

    # the mean catalog and its special cases
    a_mean = meanforge.Mean("A")
    g_mean = meanforge.Mean("G")
    h_mean = meanforge.Mean("H")
    approx(a_mean.eval(1.0, 3.0), 2.0)
    approx(g_mean(1.0, 4.0), 2.0)
    approx(h_mean(1.0, 2.0), 4.0 / 3.0)
    approx(meanforge.lc_eval(0.0, 1.0, 3.0), 2.0)
    approx(meanforge.lc_eval(-0.5, 1.0, 4.0), 2.0)
    approx(meanforge.lc_eval(-1.0, 1.0, 2.0), 4.0 / 3.0)
    try:
        meanforge.Mean.lc(-2.0)
        raise AssertionError("c < -1 must be rejected")
    except ValueError:
        pass

    # the transport phi, its inverse, and the composition law
    approx(meanforge.phi(g_mean, 1.0, 4.0), math.log(0.5), 1e-14)
    approx(meanforge.phi_inverse(math.log(0.5), 1.0, 4.0), 2.0, 1e-14)
    approx(meanforge.star(g_mean, g_mean).eval(1.0, 4.0), 1.6, 1e-12)
    approx(meanforge.star(g_mean, a_mean).eval(1.0, 4.0), 2.0, 1e-12)

    # the two symmetries and their coincidence for L_c
    approx(meanforge.symmetry_s(a_mean, g_mean).eval(1.0, 4.0), 3.0, 1e-12)
    approx(meanforge.symmetry_sigma(a_mean, g_mean).eval(1.0, 4.0), 3.0, 1e-10)
    approx(meanforge.symmetry_s(h_mean, a_mean).eval(1.0, 2.0), 1.2, 1e-12)
    lc = meanforge.Mean.lc(0.3)
    s_val = meanforge.symmetry_s(lc, h_mean).eval(2.0, 7.0)
    sig_val = meanforge.sigma_lc(0.3, h_mean).eval(2.0, 7.0)
    approx(s_val, sig_val, 1e-9)
    gap, factorization = meanforge.coincidence_residual(0.3, h_mean, 2.0, 7.0)
    assert gap <= 1e-9
    assert abs(factorization) <= 1e-8

    # exact series coefficients
    assert meanforge.mean_series("H", 3) == ["1", "-1", "0", "0"]
    assert meanforge.mean_series("G", 3) == ["1", "-1/2", "-1/8", "-1/16"]
    lc_sym = meanforge.mean_series("Lc-sym", 3)
    assert lc_sym[2] == "-c^2 - c^3"
    assert meanforge.symmetry_series("A", "S", 3) == ["1", "-a1", "-a2", "-a3"]
    assert meanforge.symmetry_series("Lc-sym", "S", 4) == meanforge.symmetry_series(
        "Lc-sym", "sigma", 4
    ), "the two symmetry expansions of L_c must coincide"

    # the discovery pipeline re-derives the Catalan pattern
    state = meanforge.discover(4)
    assert state["matches_hypothesis"]
    assert state["solved"][2] == "-c^2 - c^3"
    assert state["steps"][0]["n"] == 2

    # the verification catalog on a reduced budget
    report = json.loads(meanforge.verify_report_json(seed=7, samples=500, series_order=4))
    assert report["overall_pass"], [r for r in report["records"] if not r["pass"]]
    assert report["seed"] == 7

    print("meanforge python smoke test: all checks passed")


if __name__ == "__main__":
    main()
