"""Acceptance suite: one test per shipped criterion, one PASS/FAIL line each.

Criteria 1 and 6 contain trend clauses (p_s strictly increasing, theta_max
strictly decreasing) that the computed data genuinely does not satisfy: the
8-site periodic ladder is the edge-transitive cube, which forces p_s = p_r
there and breaks both monotonicity claims. Those clauses are asserted as
stated and fail honestly; see the decisions ledger for the analysis.
"""

import math
import time

import numpy as np
import pytest

from rvb_ladder import (RunConfig, build_ladder, count_coverings,
                        edge_werner_parameters, enumerate_coverings, ggm,
                        partial_trace, poly_fit, run_sweep, rvb_state,
                        total_spin_squared)

import oracles

CAPTION_LINEAR = (0.747664, -0.0185155)
CAPTION_QUADRATIC = (0.671077, -0.0010471)


@pytest.fixture(scope="module")
def paper_run():
    t0 = time.perf_counter()
    report = run_sweep(RunConfig(sizes=(3, 4, 5, 6), boundary="periodic",
                                 odd_wrap="twist", out_dir=None))
    elapsed = time.perf_counter() - t0
    assert not report.failures, report.failures
    return report, elapsed


def _verdict(num, name, ok, detail=""):
    line = f"ACCEPTANCE {num} [{name}]: {'PASS' if ok else 'FAIL'}"
    if detail and not ok:
        line += f" — {detail}"
    print(line)
    assert ok, detail


def _strictly(values, direction, margin=1e-6):
    deltas = [b - a for a, b in zip(values, values[1:])]
    if direction == "decreasing":
        deltas = [-d for d in deltas]
    return all(d > margin for d in deltas)


def test_criterion_1_trend_reproduction(paper_run):
    report, elapsed = paper_run
    p_r = [r.aggregates.p_r for r in report.rows]
    p_s = [r.aggregates.p_s for r in report.rows]
    p_avg = [r.p_avg for r in report.rows]
    ggm_vals = [r.ggm.value for r in report.rows]
    problems = []
    if not _strictly(p_r, "decreasing"):
        problems.append(f"p_r not strictly decreasing: {p_r}")
    if not _strictly(p_s, "increasing"):
        problems.append(f"p_s not strictly increasing: {p_s}")
    if not _strictly(p_avg, "decreasing"):
        problems.append(f"p_avg not strictly decreasing: {p_avg}")
    if not _strictly(ggm_vals, "decreasing"):
        problems.append(f"GGM not strictly decreasing: {ggm_vals}")
    if elapsed >= 30.0:
        problems.append(f"runtime {elapsed:.1f}s exceeds 30s")
    _verdict(1, "trend reproduction", not problems, "; ".join(problems))


def test_criterion_2_werner_form(paper_run):
    report, _ = paper_run
    worst_edge = 0.0
    worst_site = 0.0
    for row in report.rows:
        for fit in row.fits.values():
            worst_edge = max(worst_edge, fit.residual)
        for s in row.lattice.sites:
            rho = partial_trace(row.state, [s])
            worst_site = max(worst_site, float(np.max(np.abs(rho - np.eye(2) / 2.0))))
    ok = worst_edge < 1e-8 and worst_site < 1e-10
    _verdict(2, "Werner-form marginals", ok,
             f"worst edge residual {worst_edge:.2e}, worst site deviation {worst_site:.2e}")


def test_criterion_3_total_singlet(paper_run):
    report, _ = paper_run
    worst = max(r.total_spin_sq for r in report.rows)
    _verdict(3, "total-singlet property", worst < 1e-10, f"max S^2 = {worst:.2e}")


def test_criterion_4_monogamy_containment(paper_run):
    report, _ = paper_run
    problems = []
    for row in report.rows:
        if not row.monogamy.satisfied:
            problems.append(f"n={row.n} fails the clamped check")
        if row.monogamy.lhs > 1.0 + 1e-9:
            problems.append(f"n={row.n} lhs {row.monogamy.lhs} > 1+1e-9")
        if row.aggregates.p_r > 0.8:
            problems.append(f"n={row.n} p_r {row.aggregates.p_r} > 0.8")
    _verdict(4, "monogamy containment", not problems, "; ".join(problems))


def test_criterion_5_cloning_containment(paper_run):
    report, _ = paper_run
    missing = [row.n for row in report.rows if row.cloning.theta_max is None]
    _verdict(5, "cloning-bound containment", not missing,
             f"no common angle at n = {missing}")


def test_criterion_6_theta_trend_and_fit(paper_run):
    report, _ = paper_run
    thetas = [r.cloning.theta_max for r in report.rows]
    problems = []
    if not _strictly(thetas, "decreasing"):
        problems.append(f"theta_max not strictly decreasing: "
                        f"{[format(t, '.6f') for t in thetas]}")

    lin = report.fits["fig6_linear"]
    if lin.coefficients[1] >= 0.0:
        problems.append(f"linear fit slope {lin.coefficients[1]} not negative")

    # round trip: the caption models' own synthetic values must be refit exactly
    ns = [r.n for r in report.rows]
    synth_lin = [CAPTION_LINEAR[0] + CAPTION_LINEAR[1] * n for n in ns]
    refit_lin = poly_fit(ns, synth_lin, "linear")
    synth_quad = [CAPTION_QUADRATIC[0] + CAPTION_QUADRATIC[1] * n * n for n in ns]
    refit_quad = poly_fit(ns, synth_quad, "quadratic_no_linear_term")
    for refit, caption, label in ((refit_lin, CAPTION_LINEAR, "linear"),
                                  (refit_quad, CAPTION_QUADRATIC, "quadratic")):
        if refit.mse >= 1e-12:
            problems.append(f"{label} round-trip MSE {refit.mse:.2e} >= 1e-12")
        if any(abs(c - want) > 1e-9 for c, want in zip(refit.coefficients, caption)):
            problems.append(f"{label} round-trip coefficients {refit.coefficients}")

    # loose direct agreement with the caption (25% relative)
    quad = report.fits["fig6_quadratic"]
    for got, want, label in ((lin.coefficients, CAPTION_LINEAR, "linear"),
                             (quad.coefficients, CAPTION_QUADRATIC, "quadratic")):
        for c, w in zip(got, want):
            if abs(c - w) > 0.25 * abs(w):
                problems.append(f"{label} coefficient {c} vs caption {w} off > 25%")

    _verdict(6, "theta_max trend and fit", not problems, "; ".join(problems))


def test_criterion_7_oracle_equivalence():
    problems = []
    for m, edges in ((2, oracles.M2_OPEN_EDGES), (3, oracles.M3_OPEN_EDGES)):
        lat = build_ladder(m, "open")
        coverings = enumerate_coverings(lat)
        oracle_covs = oracles.brute_force_coverings(lat.n, edges)
        if coverings != oracle_covs or count_coverings(lat) != len(oracle_covs):
            problems.append(f"m={m} covering mismatch")
            continue
        psi = rvb_state(lat)
        want = oracles.oracle_state(oracle_covs, lat.n)
        if np.max(np.abs(psi - want)) > 1e-10:
            problems.append(f"m={m} amplitude mismatch")
        fits, _ = edge_werner_parameters(lat, psi)
        for e, fit in fits.items():
            rho = oracles.oracle_partial_trace(psi, [e.a, e.b])
            if abs(fit.p - oracles.oracle_werner_p(rho)) > 1e-10:
                problems.append(f"m={m} edge ({e.a},{e.b}) p mismatch")
        if abs(ggm(psi).value - oracles.oracle_ggm(psi)) > 1e-10:
            problems.append(f"m={m} GGM mismatch")
    _verdict(7, "oracle equivalence at tiny scale", not problems, "; ".join(problems))


def test_criterion_8_ggm_split_structure(paper_run):
    report, _ = paper_run
    problems = []
    for row in report.rows:
        mask = row.column_aligned_tied_mask
        if mask is None:
            problems.append(f"n={row.n}: no maximizing bipartition splits along columns")
            continue
        m = row.m
        # whole-column membership: no step may be cut by the split
        for c in range(m):
            if ((mask >> c) & 1) != ((mask >> (c + m)) & 1):
                problems.append(f"n={row.n}: mask {mask:#x} cuts the step in column {c}")
        # the column-aligned split genuinely attains the recorded maximum
        keep = [k for k in range(row.n) if (mask >> k) & 1]
        top = float(np.linalg.eigvalsh(partial_trace(row.state, keep))[-1])
        if abs(top - row.ggm.max_schmidt_sq) > 1e-11:
            problems.append(f"n={row.n}: column split lambda^2 {top} "
                            f"!= max {row.ggm.max_schmidt_sq}")
    _verdict(8, "GGM maximizing-split structure", not problems, "; ".join(problems))
