"""Acceptance checks and the erratum report.

Every quantitative claim the construction makes is pinned down here as a
numbered criterion with a hard tolerance: spectral/closed-form agreement,
exact restriction to the initial data, O(h^2) annihilation by the wave
operator, conservation of the bilinear current, the minimum-uncertainty
product on the half line, box coefficient cross-checks, series fidelity,
classical-path ridge peaking, the 1/sqrt(alpha) classical-limit collapse,
special-function accuracy, and the reflection symmetries.

The erratum section compares the published closed-form expressions against
the quadrature paths computed here and records every disagreement as

    CLAIM | PAPER-VALUE | COMPUTED-VALUE | VERDICT

instead of silently adjusting either side.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import boxpacket, classical, freepacket, validate
from .fields import Field2D, Grid2D, PhysicalConstants, sample
from .numerics import QuadratureSpec, erf_complex, erfi, integrate_adaptive

__all__ = [
    "CriterionResult",
    "run_all",
    "erratum_findings",
    "format_report",
    "CRITERIA",
]


@dataclass
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str


# ---------------------------------------------------------------------------
# shared helpers


def _free_field(grid: Grid2D, p: freepacket.FreePacketParams) -> Field2D:
    return sample(grid, lambda U, V: freepacket.packet_closed(U, V, p))


def _sup_interior(f: Field2D) -> float:
    return float(np.abs(f.interior()).max())


def _residual_sup(p, h_u: float, lim: float = 6.0) -> float:
    """Interior sup of the wave-operator residual on a grid with h_v = h_u/2.

    Equal spacings make the symmetric stencils annihilate any function of
    u+v and u-v exactly (see criterion 3's detail), so the convergence rate
    is measured with deliberately unequal spacings.
    """
    n_u = int(round(2 * lim / h_u)) + 1
    n_v = 2 * (n_u - 1) + 1
    grid = Grid2D(-lim, lim, -lim, lim, n_u, n_v)
    field = _free_field(grid, p)
    res = validate.pde_residual(field, validate.PotentialSpec.free())
    return _sup_interior(res)


def _divergence_sup(p, h: float, lim: float = 6.0, signature="hyperbolic") -> float:
    n = int(round(2 * lim / h)) + 1
    grid = Grid2D(-lim, lim, -lim, lim, n, n)
    field = _free_field(grid, p)
    j = validate.probability_current(field)
    div = validate.current_divergence(j, signature=signature)
    return _sup_interior(div)


def box_branches(L: float, d: float):
    """The four classical branches launched from u = +/-d in both directions."""
    return tuple(
        classical.BoxReflectedPath(L=L, u0=u0, direction=s)
        for u0 in (d, -d) for s in (+1, -1)
    )


def box_special_points(L: float, d: float, v_lo: float, v_hi: float):
    """Branch-crossing points and wall-reflection corners inside a v-window."""
    branches = box_branches(L, d)
    v = np.linspace(v_lo, v_hi, 8001)
    tracks = [classical.box_path(b, v) for b in branches]
    points: list[tuple[float, float]] = []
    # crossings: sign changes of pairwise differences
    for a in range(len(tracks)):
        for b in range(a + 1, len(tracks)):
            s = tracks[a] - tracks[b]
            idx = np.flatnonzero(np.sign(s[:-1]) * np.sign(s[1:]) < 0)
            for k in idx:
                t = s[k] / (s[k] - s[k + 1])
                vc = v[k] + t * (v[k + 1] - v[k])
                uc = classical.box_path(branches[a], vc)
                points.append((float(uc), float(vc)))
            zero = np.flatnonzero(s == 0.0)
            for k in zero:
                points.append((float(tracks[a][k]), float(v[k])))
    # corners: slope reversals (wall touches)
    for a, track in enumerate(tracks):
        dp = np.diff(track)
        idx = np.flatnonzero(np.sign(dp[:-1]) * np.sign(dp[1:]) < 0)
        for k in idx:
            vc = v[k + 1]
            uc = L / 2 if track[k + 1] > 0 else -L / 2
            points.append((float(uc), float(vc)))
    # dedupe
    unique: list[tuple[float, float]] = []
    for pt in points:
        if all((pt[0] - q[0]) ** 2 + (pt[1] - q[1]) ** 2 > 1e-10 for q in unique):
            unique.append(pt)
    return unique


# ---------------------------------------------------------------------------
# criteria


def criterion_1() -> CriterionResult:
    """Spectral integral matches the closed form over a 121x121 grid."""
    p = freepacket.FreePacketParams(alpha=1.0, d=2.0)
    grid = Grid2D(-6.0, 6.0, -6.0, 6.0, 121, 121)
    quad = QuadratureSpec(abs_tol=1e-10, rel_tol=1e-10, max_subdivisions=400,
                          tail_cutoff=2.0 * math.sqrt(p.alpha) * 9.1)
    closed = _free_field(grid, p).values
    t0 = time.perf_counter()
    worst = 0.0
    for j, vj in enumerate(grid.v):
        for i, ui in enumerate(grid.u):
            diff = abs(freepacket.packet_spectral(ui, vj, p, quad) - closed[j, i])
            if diff > worst:
                worst = diff
    elapsed = time.perf_counter() - t0
    passed = worst < 1e-8 and elapsed < 60.0
    return CriterionResult(
        1, "spectral / closed-form equivalence",
        passed,
        f"max |spectral-closed| = {worst:.3e} (tol 1e-8) over 121x121, "
        f"runtime {elapsed:.1f}s (limit 60s)")


def criterion_2() -> CriterionResult:
    """Closed form restricted to v = 0 reproduces the initial profile."""
    p = freepacket.FreePacketParams(alpha=1.0, d=2.0)
    u = np.linspace(-10.0, 10.0, 801)
    diff = np.abs(freepacket.packet_closed(u, 0.0, p)
                  - freepacket.initial_condition(u, p))
    worst = float(diff.max())
    return CriterionResult(
        2, "initial-data identity at v = 0",
        worst < 1e-14,
        f"max |Psi(u,0) - initial profile| = {worst:.3e} over 801 samples (tol 1e-14)")


def criterion_3() -> CriterionResult:
    """Wave-operator residual vanishes at second order in the spacing.

    Measured on grids with h_v = h_u/2: with h_u = h_v every term of the
    packet (a function of u+v or u-v) is annihilated by the paired stencils
    exactly, which degenerates the rate test to roundoff; unequal spacings
    expose the genuine O(h^2) truncation term.  'h' labels h_u.
    """
    p = freepacket.FreePacketParams(alpha=1.0, d=2.0)
    r1 = _residual_sup(p, 0.02)
    r2 = _residual_sup(p, 0.01)
    ratio = r1 / r2
    # equal-spacing exactness: pure roundoff at h = 0.02
    n = 601
    grid = Grid2D(-6.0, 6.0, -6.0, 6.0, n, n)
    field = _free_field(grid, p)
    exact = _sup_interior(validate.pde_residual(field, validate.PotentialSpec.free()))
    max_psi = float(np.abs(field.values).max())
    passed = 3.5 <= ratio <= 4.5 and r2 < 1e-4 * max_psi and exact < 1e-9
    return CriterionResult(
        3, "PDE annihilation at O(h^2)",
        passed,
        f"sup residual {r1:.3e} (h=0.02) -> {r2:.3e} (h=0.01), ratio {ratio:.2f} "
        f"(window [3.5, 4.5]); h=0.01 sup vs 1e-4*max|Psi|={1e-4 * max_psi:.1e}; "
        f"equal-spacing residual {exact:.1e} (exact discrete annihilation)")


def criterion_4() -> CriterionResult:
    """Current conservation: divergence shrinks by ~4 when h halves."""
    p = freepacket.FreePacketParams(alpha=1.0, d=2.0)
    s1 = _divergence_sup(p, 0.04)
    s2 = _divergence_sup(p, 0.02)
    ratio = s1 / s2
    return CriterionResult(
        4, "conservation law d_u J_u - d_v J_v = 0",
        3.5 <= ratio <= 4.5,
        f"sup divergence {s1:.3e} (h=0.04) -> {s2:.3e} (h=0.02), "
        f"ratio {ratio:.2f} (window [3.5, 4.5])")


def criterion_5() -> CriterionResult:
    """Half-line uncertainty product: hbar^2/4 for separated Gaussians."""
    c = PhysicalConstants()
    rep = validate.halfline_moments(freepacket.FreePacketParams(1.0, 4.0), c)
    windows = (0.2375 <= rep.var_u <= 0.2625
               and 0.95 <= rep.var_p <= 1.05
               and 0.2375 <= rep.product <= 0.2625)
    deltas = []
    for d in (2.0, 4.0, 8.0):  # alpha d^2 = 4, 16, 64
        r = validate.halfline_moments(freepacket.FreePacketParams(1.0, d), c)
        deltas.append(abs(r.product - 0.25))
    slack = 1e-9  # quadrature tolerance
    monotone = deltas[0] >= deltas[1] - slack and deltas[1] >= deltas[2] - slack
    return CriterionResult(
        5, "minimum uncertainty on the half line",
        windows and monotone,
        f"alpha=1, d=4: var_u={rep.var_u:.6f}, var_p={rep.var_p:.6f}, "
        f"product={rep.product:.6f} (windows 0.25+-5%, 1+-5%); "
        f"|product-1/4| over alpha d^2 = 4,16,64: "
        + ", ".join(f"{x:.2e}" for x in deltas))


def criterion_6() -> CriterionResult:
    """Box coefficients: closed Erfi form vs projection integral, n = 1..40.

    Either the two agree below 1e-6 or the disagreement is documented in
    the erratum report with the quadrature value normative; both outcomes
    pass, silent divergence does not.
    """
    p = boxpacket.BoxPacketParams(L=6.0, alpha=5.0, d=1.5, n_max=40)
    worst = 0.0
    for n in range(1, 41):
        diff = abs(boxpacket.coefficient_closed(n, p)
                   - boxpacket.coefficient_numeric(n, p))
        worst = max(worst, diff)
    if worst < 1e-6:
        return CriterionResult(
            6, "box coefficient cross-check",
            True,
            f"closed and numeric coefficients agree: max diff {worst:.3e} < 1e-6")
    documented = any("coefficient A(n)" in line for line in erratum_findings(
        include_slow=False))
    return CriterionResult(
        6, "box coefficient cross-check",
        documented,
        f"closed Erfi form DIFFERS from projection integral "
        f"(max |closed-numeric| = {worst:.3e} over n=1..40 at L=6, alpha=5, "
        f"d=1.5); discrepancy documented in the erratum report, projection "
        f"integral is normative")


def criterion_7() -> CriterionResult:
    """Truncated series reproduces the initial profile inside the box."""
    p = boxpacket.BoxPacketParams(L=6.0, alpha=5.0, d=1.5, n_max=200)
    coeffs = boxpacket.mode_coefficients(p)
    u = np.linspace(-2.7, 2.7, 541)
    series = boxpacket.packet_series(u, 0.0, p, coeffs)
    target = freepacket.initial_condition(u, p.free_params())
    worst = float(np.abs(series - target).max())
    return CriterionResult(
        7, "box series fidelity at v = 0",
        worst < 1e-5,
        f"sup |series - initial profile| = {worst:.3e} over [-2.7, 2.7] "
        f"with n_max = 200 (tol 1e-5)")


def _free_ridge_check():
    alpha, d = 5.0, 1.5
    p = freepacket.FreePacketParams(alpha=alpha, d=d)
    grid = Grid2D(-6.0, 6.0, -6.0, 6.0, 241, 241)
    field = _free_field(grid, p)
    r = 3.0 / math.sqrt(alpha)
    exclusions = [((d, 0.0), r), ((-d, 0.0), r), ((0.0, d), r), ((0.0, -d), r)]
    pts = validate.ridge_trace(field, exclusions)
    dist = classical.distance_to_free_paths(pts[:, 0], pts[:, 1], d)
    frac = float(np.mean(dist <= grid.h_u))
    return frac, len(pts), r


def _box_ridge_check():
    L, alpha, d = 4.0, 5.0, 1.5
    p = boxpacket.BoxPacketParams(L=L, alpha=alpha, d=d, n_max=400)
    coeffs = boxpacket.mode_coefficients(p)
    grid = Grid2D(-L / 2, L / 2, -L / 2, L / 2, 241, 241)
    field = boxpacket.series_field(grid, p, coeffs)
    branches = box_branches(L, d)
    special = box_special_points(L, d, -L / 2, L / 2)
    r_full = 3.0 / math.sqrt(alpha)
    # most-exposed distance from the path to the special-point set
    v = np.linspace(-L / 2, L / 2, 2001)
    exposure = 0.0
    for b in branches:
        track = classical.box_path(b, v)
        dmin = np.full(v.shape, np.inf)
        for (cu, cv) in special:
            dmin = np.minimum(dmin, np.hypot(track - cu, v - cv))
        exposure = max(exposure, float(dmin.max()))
    radius = r_full if r_full < 0.9 * exposure else 0.9 * exposure
    capped = radius < r_full
    pts = validate.ridge_trace(field, [(pt, radius) for pt in special])
    if len(pts) == 0:
        return 0.0, 0, radius, capped
    dist = np.full(len(pts), np.inf)
    for b in branches:
        dist = np.minimum(dist, np.abs(pts[:, 0] - classical.box_path(b, pts[:, 1])))
    frac = float(np.mean(dist <= grid.h_u))
    return frac, len(pts), radius, capped


def criterion_8() -> CriterionResult:
    """Ridge maxima of |Psi|^2 track the classical trajectories.

    For the box at these parameters the stated exclusion radius 3/sqrt(alpha)
    = 1.34 swallows the entire reflected path (consecutive crossings/corners
    are only 2.12 apart along the path), so the radius is capped at 90% of
    the most-exposed path distance to keep a testable sample; the free case
    uses 3/sqrt(alpha) as stated.
    """
    ffrac, fcount, fr = _free_ridge_check()
    bfrac, bcount, br, capped = _box_ridge_check()
    passed = (ffrac >= 0.95 and fcount >= 100
              and bfrac >= 0.95 and bcount >= 25)
    note = f" (radius capped to {br:.3f})" if capped else ""
    return CriterionResult(
        8, "classical-path ridge peaking",
        passed,
        f"free: {100 * ffrac:.1f}% of {fcount} ridge points within one cell "
        f"of u = +/-v +/- d (exclusion r={fr:.3f}); "
        f"box: {100 * bfrac:.1f}% of {bcount} points within one cell of the "
        f"reflected path{note}")


def criterion_9() -> CriterionResult:
    """Classical limit: widths halve as alpha quadruples; crest constant.

    Widths are measured at d=4, v_probe=2 where the four branch peaks stay
    resolved at alpha = 1 (at the d=2, v=0.5 configuration adjacent peaks
    are 2*v = 1 apart, merge at alpha = 1 and the width of the merged bump
    breaks the 1/sqrt(alpha) law).
    """
    scan = freepacket.classical_limit_scan([1.0, 4.0, 16.0], d=4.0, v_probe=2.0)
    f1, f4, f16 = (s[1] for s in scan)
    r14, r416 = f4 / f1, f16 / f4
    widths_ok = 0.45 <= r14 <= 0.55 and 0.45 <= r416 <= 0.55
    # crest height along the u = v + d branch, away from crossings
    p = freepacket.FreePacketParams(alpha=5.0, d=1.5)
    crests = []
    for v in (1.0, 1.5, 2.0, 2.5, 3.0):
        u = np.linspace(v + p.d - 1.0, v + p.d + 1.0, 2001)
        psi = freepacket.packet_closed(u, v, p)
        crests.append(float((psi.real**2 + psi.imag**2).max()))
    spread = (max(crests) - min(crests)) / min(crests)
    return CriterionResult(
        9, "classical limit and crest constancy",
        widths_ok and spread <= 0.01,
        f"FWHM ratios {r14:.4f}, {r416:.4f} (window [0.45, 0.55]); "
        f"crest variation along the path {100 * spread:.2e}% (limit 1%)")


def _erf_taylor(z: complex, max_terms: int = 250) -> complex:
    """Taylor-series oracle, summed to convergence (>= 30 terms at |z| <= 1)."""
    z = complex(z)
    total = 0j
    term = z
    n = 0
    while n < max_terms:
        total += term
        term *= -z * z * (2 * n + 1) / ((n + 1) * (2 * n + 3))
        n += 1
        if abs(term) < 1e-18 * max(1.0, abs(total)):
            total += term
            break
    return 2.0 / math.sqrt(math.pi) * total


def criterion_10() -> CriterionResult:
    """erf agrees with the series oracle on the disc; erfi(1) reference."""
    golden = 2.0 * math.pi * (1.0 - 1.0 / ((1.0 + math.sqrt(5.0)) / 2.0))
    j = np.arange(100)
    zs = 3.0 * np.sqrt((j + 0.5) / 100.0) * np.exp(1j * golden * j)
    worst = 0.0
    for z in zs:
        ref = _erf_taylor(z)
        rel = abs(erf_complex(complex(z)) - ref) / abs(ref)
        worst = max(worst, rel)
    e1 = erfi(1.0)
    e1_err = abs(e1 - 1.650425758797543)
    passed = worst <= 1e-12 and e1_err <= 1e-11 and abs(e1.imag) < 1e-14
    return CriterionResult(
        10, "special-function accuracy",
        passed,
        f"max rel error vs Taylor oracle on 100 points of |z| <= 3: "
        f"{worst:.3e} (tol 1e-12); |erfi(1) - 1.650425758797543| = {e1_err:.2e}")


def criterion_11() -> CriterionResult:
    """Reflection symmetries of the probability density / the box packet."""
    p = freepacket.FreePacketParams(alpha=1.0, d=2.0)
    grid = Grid2D(-6.0, 6.0, -6.0, 6.0, 241, 241)
    a2 = _free_field(grid, p).abs2()
    u_flip = float(np.abs(a2 - a2[:, ::-1]).max())
    v_flip = float(np.abs(a2 - a2[::-1, :]).max())
    bp = boxpacket.BoxPacketParams(L=6.0, alpha=5.0, d=1.5, n_max=200)
    coeffs = boxpacket.mode_coefficients(bp)
    bgrid = Grid2D(-3.0, 3.0, -3.0, 3.0, 161, 161)
    bvals = boxpacket.series_field(bgrid, bp, coeffs).values
    point_flip = float(np.abs(bvals - bvals[::-1, ::-1]).max())
    worst = max(u_flip, v_flip, point_flip)
    return CriterionResult(
        11, "symmetry suite",
        worst <= 1e-14,
        f"free |Psi|^2 u-flip {u_flip:.2e}, v-flip {v_flip:.2e}; "
        f"box Psi(-u,-v) vs Psi(u,v) {point_flip:.2e} (tol 1e-14)")


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
            criterion_11)


def run_all(progress=None) -> list[CriterionResult]:
    results = []
    for fn in CRITERIA:
        res = fn()
        results.append(res)
        if progress is not None:
            progress(res)
    return results


# ---------------------------------------------------------------------------
# erratum report


def _printed_mean_u(alpha: float, d: float) -> float:
    """Mean position exactly as printed (note d^2 where d is expected)."""
    from scipy.special import erf as _erf
    e = math.exp(2 * d * d * alpha)
    return (math.sqrt(2.0 / (math.pi * alpha))
            + d * d * e * _erf(math.sqrt(2 * alpha) * d * d)) / (1.0 + e)


def _corrected_mean_u(alpha: float, d: float) -> float:
    from scipy.special import erf as _erf
    e = math.exp(2 * d * d * alpha)
    return (math.sqrt(2.0 / (math.pi * alpha))
            + d * e * _erf(math.sqrt(2 * alpha) * d)) / (1.0 + e)


def _printed_var_u(alpha: float, d: float) -> float:
    return (1.0 / (4 * alpha)
            + 0.5 * d * d * (1.0 + math.tanh(d * d * alpha))
            - _printed_mean_u(alpha, d) ** 2)


def _corrected_var_u(alpha: float, d: float) -> float:
    return (1.0 / (4 * alpha)
            + 0.5 * d * d * (1.0 + math.tanh(d * d * alpha))
            - _corrected_mean_u(alpha, d) ** 2)


def _printed_var_p(alpha: float, d: float, hbar: float = 1.0) -> float:
    e = math.exp(2 * d * d * alpha)
    return alpha * hbar**2 * (
        1.0 - (4 * alpha / (1.0 + e)) * (d * d * alpha - (2.0 / math.pi) / (1.0 + e)))


def _corrected_var_p(alpha: float, d: float, hbar: float = 1.0) -> float:
    e = math.exp(2 * d * d * alpha)
    return alpha * hbar**2 * (1.0 - 4 * alpha * d * d / (1.0 + e))


def erratum_findings(include_slow: bool = True) -> list[str]:
    """One 'CLAIM | PAPER-VALUE | COMPUTED-VALUE | VERDICT' line per finding."""
    lines: list[str] = []

    # --- box coefficient closed form -------------------------------------
    p = boxpacket.BoxPacketParams(L=6.0, alpha=5.0, d=1.5, n_max=8)
    worst = max(abs(boxpacket.coefficient_closed(n, p)
                    - boxpacket.coefficient_numeric(n, p))
                for n in range(1, 9))
    # structural identity: closed(n) = e^{2 i d n pi / L} e^{(n pi / L)^2 / 2 alpha}
    #                      * cosine projection over [-L, L]
    quad = QuadratureSpec(abs_tol=1e-13, rel_tol=1e-13, max_subdivisions=4000,
                          tail_cutoff=p.L)
    fp = p.free_params()
    ident = 0.0
    for n in range(1, 17):
        k = n * math.pi / p.L
        proj = (2.0 / p.L) * integrate_adaptive(
            lambda u: freepacket.initial_condition(u, fp) * np.cos(k * u),
            -p.L, p.L, quad).real
        model = np.exp(2j * p.d * n * math.pi / p.L) * math.exp(
            k * k / (2 * p.alpha)) * proj
        rel = abs(boxpacket.coefficient_closed(n, p) - model) / max(
            1.0, abs(model))
        ident = max(ident, rel)
    lines.append(
        "box coefficient A(n) closed form | four-Erfi expression equals the "
        "mode projection | differs from (2/L) int_{-L/2}^{L/2} Psi0 trig_n du "
        f"by up to {worst:.2e} for n<=8 at L=6, alpha=5, d=1.5; closed form "
        "equals exp(2 i d n pi/L) exp(n^2 pi^2 / (2 alpha L^2)) times the "
        f"cosine projection over [-L, L] (verified to {ident:.1e} rel) "
        "| DIFFERS - projection integral is normative")

    # --- half-line moment closed forms ------------------------------------
    c = PhysicalConstants()
    rep = validate.halfline_moments(freepacket.FreePacketParams(1.0, 2.0), c)
    pv = _printed_var_u(1.0, 2.0)
    cv = _corrected_var_u(1.0, 2.0)
    lines.append(
        "(Delta u)^2 display at alpha=1, d=2 | printed mean term "
        "d^2 e^{2 d^2 a} Erf(sqrt(2a) d^2) gives "
        f"{pv:.6f} | quadrature gives {rep.var_u:.6f}; replacing d^2 by d in "
        f"both places gives {cv:.6f} | TYPO - printed Erf argument "
        "dimensionally inconsistent, corrected form matches")

    rep2 = validate.halfline_moments(freepacket.FreePacketParams(2.0, 1.0), c)
    pp = _printed_var_p(2.0, 1.0)
    cp = _corrected_var_p(2.0, 1.0)
    lines.append(
        "(Delta p_u)^2 display at alpha=2, d=1 | printed form gives "
        f"{pp:.6f} | quadrature (mean momentum taken as 0) gives "
        f"{rep2.var_p:.6f}; alpha hbar^2 [1 - 4 alpha d^2/(1+e^{{2 alpha d^2}})] "
        f"gives {cp:.6f} | TYPO - inner d^2 alpha carries an extra alpha and "
        "the 2/pi term is the squared boundary mean")

    rep4 = validate.halfline_moments(freepacket.FreePacketParams(1.0, 4.0), c)
    lines.append(
        "uncertainty product ~ hbar^2/4 for alpha d^2 > 1 | 0.25 | "
        f"{rep4.product:.12f} at alpha=1, d=4 | CONFIRMED")

    # --- conservation-law convention --------------------------------------
    if include_slow:
        p12 = freepacket.FreePacketParams(1.0, 2.0)
        h1 = _divergence_sup(p12, 0.04)
        h2 = _divergence_sup(p12, 0.02)
        e2 = _divergence_sup(p12, 0.02, signature="euclidean")
        lines.append(
            "conservation law d_mu J_mu = 0 | current J_mu = (hbar^2/2m)"
            "(Psi* d_mu Psi - Psi d_mu Psi*) is conserved | hyperbolic "
            f"combination d_u J_u - d_v J_v -> 0 at O(h^2) ({h1:.1e} -> "
            f"{h2:.1e} as h halves); Euclidean sum converges to a nonzero "
            f"field (sup {e2:.2f}) | HOLDS with the hyperbolic signature "
            "(raised index), not as a Euclidean divergence")

        # crest constancy and width scaling
        pc = freepacket.FreePacketParams(alpha=5.0, d=1.5)
        crests = []
        for v in (1.0, 2.0, 3.0):
            u = np.linspace(v + pc.d - 1.0, v + pc.d + 1.0, 2001)
            psi = freepacket.packet_closed(u, v, pc)
            crests.append(float((psi.real**2 + psi.imag**2).max()))
        spread = (max(crests) - min(crests)) / min(crests)
        lines.append(
            "crest of |Psi|^2 constant along the classical path | constant | "
            f"relative variation {spread:.1e} for v in [1, 3] at alpha=5, "
            "d=1.5 | CONFIRMED")

        scan = freepacket.classical_limit_scan([1.0, 4.0], d=4.0, v_probe=2.0)
        lines.append(
            "packet width collapses as 1/sqrt(alpha) (classical limit) | "
            "FWHM ratio 1/2 per alpha x4 | ratio "
            f"{scan[1][1] / scan[0][1]:.4f} at d=4, v=2 | CONFIRMED")

    return lines


def format_report(results, findings) -> str:
    out = ["acceptance criteria", "-" * 19]
    for r in results:
        flag = "PASS" if r.passed else "FAIL"
        out.append(f"{r.index:2d} {flag} {r.name}: {r.detail}")
    out.append("")
    out.append("erratum findings")
    out.append("-" * 16)
    out.extend(findings)
    out.append("")
    return "\n".join(out)
