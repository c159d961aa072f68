"""Reproduction suite: every published number and bound this package
implements, checked at fixed tolerances.

Each named check returns rows with the measured value, the expected
value, and the tolerance that gated the comparison.  The CLI ``verify``
subcommand runs them all and exits non-zero on any failure; the pytest
acceptance module drives the same functions.  All randomness comes from
the package's own counter-based generator so every run is identical.
"""

import time
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import constructions as cons
from . import geometry, matcore, outer, perturb
from .frame import Frame, gram, riesz_bounds
from .rng import Stream


@dataclass
class CheckRow:
    check: str
    case: str
    passed: bool
    measured: float
    expected: str
    tolerance: float | None


def _row(check, case, measured, expected, tolerance, passed):
    return CheckRow(check=check, case=case, passed=bool(passed),
                    measured=float(measured), expected=str(expected),
                    tolerance=tolerance)


def _random_unit_vector(stream, n, cplx):
    v = stream.complex_normals(n) if cplx else stream.normals(n)
    return v / np.linalg.norm(v)


def _random_orthonormal(stream, n, cplx):
    g = (stream.complex_normals(n * n) if cplx else stream.normals(n * n)).reshape(n, n)
    q, r = np.linalg.qr(g)
    return q * np.sign(np.diag(r).real)


# ---------------------------------------------------------------------------
# exact-rational elimination, the independent rank oracle


def rational_rank(rows) -> int:
    """Rank over the Gaussian rationals by exact elimination.

    ``rows`` holds (Fraction, Fraction) pairs for the real and imaginary
    parts.  Entirely independent of the floating Jacobi path.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, m):
            re, im = a[r][col]
            if re != 0 or im != 0:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        pre, pim = a[row][col]
        den = pre * pre + pim * pim
        ire, iim = pre / den, -pim / den
        for r in range(row + 1, m):
            cre, cim = a[r][col]
            if cre == 0 and cim == 0:
                continue
            fre = cre * ire - cim * iim
            fim = cre * iim + cim * ire
            for c in range(col, n):
                bre, bim = a[row][c]
                ore, oim = a[r][c]
                a[r][c] = (ore - (fre * bre - fim * bim),
                           oim - (fre * bim + fim * bre))
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def as_rational(matrix) -> list:
    """Exact conversion of a float/complex matrix whose entries are
    binary-exact rationals (integers, halves, ...)."""
    m = np.asarray(matrix)
    out = []
    for r in range(m.shape[0]):
        row = []
        for c in range(m.shape[1]):
            z = complex(m[r, c])
            row.append((Fraction(z.real), Fraction(z.imag)))
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# outer brace identity


def check_pc2_identity():
    rows = []
    for field, cplx in (("real", False), ("complex", True)):
        stream = Stream(101 if cplx else 100)
        worst = 0.0
        for _ in range(1000):
            phi = _random_unit_vector(stream, 3, cplx)
            psi = _random_unit_vector(stream, 3, cplx)
            lhs = matcore.frobenius_ip(np.outer(phi, phi.conj()), np.outer(psi, psi.conj()))
            rhs = abs(np.vdot(psi, phi)) ** 2
            worst = max(worst, abs((lhs.real if cplx else lhs) - rhs))
        rows.append(_row("pc2-identity", field, worst, "0", 1e-12, worst <= 1e-12))
    return rows


# the epsilon example


def check_epsilon_example():
    rows = []
    for eps in (0.04, 0.25, 0.81):
        f = cons.epsilon_pair(eps)
        rb = riesz_bounds(f)
        ob = outer.outer_riesz_bounds(outer.induce(f))
        dev = max(abs(rb.lower - (1 - np.sqrt(eps))), abs(rb.upper - (1 + np.sqrt(eps))),
                  abs(ob.lower - (1 - eps)), abs(ob.upper - (1 + eps)))
        rows.append(_row("epsilon-example", f"eps={eps}", dev,
                         "bounds 1-+sqrt(eps), outer 1-+eps", 1e-10, dev <= 1e-10))
    return rows


# outer Gram as a Hadamard square


def check_hadamard_gram():
    stream = Stream(300)
    worst_id = 0.0
    worst_env = -np.inf
    for k in range(500):
        cplx = k % 2 == 1
        n = 2 + k % 3
        m = 2 + (k // 2) % 4
        f = cons.random_unit(n, m, 3000 + k, field="complex" if cplx else "real")
        if k % 3 == 0:
            # non-unit norms so the diagonal envelope is exercised
            scales = 0.5 + stream.uniforms(m)
            f = Frame(field=f.field, vectors=f.vectors * scales[:, None])
        g = gram(f)
        os_ = outer.induce(f)
        worst_id = max(worst_id, float(np.linalg.norm(os_.gram_op - np.abs(g) ** 2)))
        w = os_.gram_spectrum.eigenvalues
        gw = matcore.hermitian_eigvalues(g)
        d = np.diag(g).real
        lo = d.min() * gw[-1]
        hi = d.max() * gw[0]
        worst_env = max(worst_env, lo - w[-1], w[0] - hi)
    return [
        _row("hadamard-gram", "gram_op equals G o conj(G)", worst_id, "0", 1e-12,
             worst_id <= 1e-12),
        _row("hadamard-gram", "spectrum inside diagonal envelope", worst_env,
             "<= 0", 1e-9, worst_env <= 1e-9),
    ]


# bound floor and ceiling


def check_outer_bound_extremes():
    cases = []
    k = 0
    while len(cases) < 200:
        n = 2 + k % 3
        d = n * (n + 1) // 2
        m = 2 + k % (d - 1) if d > 2 else 2
        f = cons.random_unit(n, m, 4000 + k, field="real")
        k += 1
        os_ = outer.induce(f)
        if os_.rank == m:
            cases.append(os_)
    worst_upper = -np.inf
    worst_lower = -np.inf
    for os_ in cases:
        m, n = os_.m, os_.source.n
        w = os_.gram_spectrum.eigenvalues
        worst_upper = max(worst_upper, m / n - w[0])
        if m > n:
            worst_lower = max(worst_lower, w[-1] - m * (n - 1) / (n * (m - 1)))
    rows = [
        _row("outer-bound-extremes", "upper bound floor M/N", worst_upper, "<= 0",
             1e-9, worst_upper <= 1e-9),
        _row("outer-bound-extremes", "lower bound ceiling (M > N)", worst_lower,
             "<= 0", 1e-9, worst_lower <= 1e-9),
    ]
    worst_eq = 0.0
    for f in [cons.simplex(n) for n in (2, 3, 4, 5)] + [cons.biangular(n) for n in (2, 4, 5)]:
        os_ = outer.induce(f)
        worst_eq = max(worst_eq, abs(os_.gram_spectrum.eigenvalues[0] - f.m / f.n))
    rows.append(_row("outer-bound-extremes", "equality on tight frames", worst_eq,
                     "0", 1e-9, worst_eq <= 1e-9))
    return rows


# simplex spectra


def check_equiangular_simplex():
    rows = []
    for n in range(2, 7):
        f = cons.simplex(n)
        m = n + 1
        c = (m - n) / (n * (m - 1))
        w = outer.induce(f).gram_spectrum.eigenvalues
        expected = np.array([1 + (m - 1) * c] + [1 - c] * (m - 1))
        dev = float(np.max(np.abs(w - expected)))
        bounds_dev = max(abs(w[-1] - m * (n - 1) / (n * (m - 1))), abs(w[0] - m / n))
        dev = max(dev, bounds_dev)
        rows.append(_row("equiangular-simplex", f"n={n}", dev,
                         "two-eigenvalue spectrum", 1e-9, dev <= 1e-9))
    return rows


# biangular table


BIANGULAR_TABLE = {2: 0.75, 3: 0.0, 4: 5 / 36, 5: 3 / 8, 6: 63 / 100}


def check_biangular_table():
    rows = []
    for n, expected in BIANGULAR_TABLE.items():
        w = outer.induce(cons.biangular(n)).gram_spectrum.eigenvalues
        dev = abs(float(w[-1]) - expected)
        rows.append(_row("biangular-table", f"N={n}", dev, f"lower bound {expected}",
                         1e-9, dev <= 1e-9))
    return rows


def check_biangular_upper():
    rows = []
    for n in (2, 4, 5, 6, 7):
        w = outer.induce(cons.biangular(n)).gram_spectrum.eigenvalues
        dev = abs(float(w[0]) - (n + 1) / 2)
        rows.append(_row("biangular-upper", f"N={n}", dev, f"upper bound {(n + 1) / 2}",
                         1e-9, dev <= 1e-9))
    return rows


def check_biangular_degeneracy():
    os_ = outer.induce(cons.biangular(3))
    pairs = cons.simplex_pairs(3)
    i14 = pairs.index((0, 3))
    i23 = pairs.index((1, 2))
    coincide = float(np.linalg.norm(os_.outers[i14] - os_.outers[i23]))
    cert = outer.dependence_certificate(os_)
    support = tuple(int(i) for i in np.flatnonzero(np.abs(cert.coefficients) > 1e-8))
    ok = (coincide <= 1e-12 and support == (i14, i23) and cert.residual <= 1e-8)
    return [_row("biangular-degeneracy", "N=3 certificate on (1,4) and (2,3)",
                 cert.residual, f"support {(i14, i23)}", 1e-8, ok)]


# E_ij ranks


def check_eij_ranks():
    rows = []
    for n in range(1, 7):
        os_ = outer.induce(cons.eij_basis(n))
        want = n * (n + 1) // 2
        rows.append(_row("eij-ranks", f"n={n}", os_.rank, f"rank {want}", None,
                         os_.rank == want and outer.is_independent(os_)))
    for n in range(1, 5):
        os_ = outer.induce(cons.complex_eij_basis(n))
        rows.append(_row("complex-eij-ranks", f"n={n}", os_.rank, f"rank {n * n}",
                         None, os_.rank == n * n and outer.is_independent(os_)))
    return rows


# dual systems


def check_outer_duals():
    worst = 0.0
    count = 0
    k = 0
    while count < 100:
        cplx = k % 2 == 1
        n = 2 + k % 2
        m = 2 + k % n if n > 2 else 2
        f = cons.random_unit(n, m, 8000 + k, field="complex" if cplx else "real")
        k += 1
        if matcore.numerical_rank(gram(f)) < m:
            continue
        os_ = outer.induce(f)
        if os_.rank < m:
            continue
        duals = outer.outer_duals(f)
        bio = np.array([[matcore.frobenius_ip(os_.outers[i], duals[j]).real
                         if cplx else matcore.frobenius_ip(os_.outers[i], duals[j])
                         for j in range(m)] for i in range(m)])
        worst = max(worst, float(np.max(np.abs(bio - np.eye(m)))))
        count += 1
    return [_row("outer-duals", "biorthogonality over 100 configurations", worst,
                 "identity", 1e-9, worst <= 1e-9)]


def check_unprojected_dual():
    stream = Stream(860)
    worst_det = 0.0
    least_residual = np.inf
    for _ in range(20):
        alpha = 0.2 + 1.1 * float(stream.uniforms(1)[0])  # angle away from 0 and pi/2
        phi1 = np.array([1.0, 0.0])
        phi2 = np.array([np.cos(alpha), np.sin(alpha)])
        f = Frame.from_vectors(np.array([phi1, phi2]))
        c = abs(phi1 @ phi2) ** 2
        psi1 = np.array([-np.sin(alpha), np.cos(alpha)])  # unit, orthogonal to phi2
        dual1 = psi1 / (psi1 @ phi1)
        # the bordered Gram as displayed: cross terms from the scaled dual,
        # corner from the unit candidate
        b = np.array([
            [1.0, c, abs(phi1 @ dual1) ** 2],
            [c, 1.0, abs(phi2 @ dual1) ** 2],
            [abs(phi1 @ dual1) ** 2, abs(phi2 @ dual1) ** 2, 1.0],
        ])
        det = float(np.linalg.det(b))
        worst_det = max(worst_det, abs(det - (-(c ** 2))) / c ** 2)
        os_ = outer.induce(f)
        u1 = np.outer(dual1, dual1)
        residual = float(np.linalg.norm(u1 - outer.project_onto_outer_span(os_, u1)))
        least_residual = min(least_residual, residual)
    ok = worst_det <= 1e-9 and least_residual > 1e-6
    return [_row("unprojected-dual", "determinant -|<phi1,phi2>|^4 and span failure",
                 worst_det, "0 (relative)", 1e-9, ok)]


# cross products


def check_cross_products():
    worst_spec = 0.0
    worst_bounds = 0.0
    for k in range(100):
        cplx = k % 2 == 1
        n = 2 + k % 2
        mf = 2 + k % 2
        mg = 2 + (k // 2) % 2
        field = "complex" if cplx else "real"
        f = cons.random_unit(n, min(mf, n), 9000 + k, field=field)
        g = cons.random_unit(n, min(mg, n), 9500 + k, field=field)
        h = outer.cross_gram(f, g)
        wf = matcore.hermitian_eigvalues(gram(f))
        wg = matcore.hermitian_eigvalues(gram(g))
        products = np.sort(np.outer(wf, wg).ravel())[::-1]
        wh = matcore.hermitian_eigvalues(h)
        worst_spec = max(worst_spec, float(np.max(np.abs(wh - products))))
        if matcore.numerical_rank(gram(f)) == f.m and matcore.numerical_rank(gram(g)) == g.m:
            fb = riesz_bounds(f)
            gb = riesz_bounds(g)
            worst_bounds = max(worst_bounds,
                               abs(wh[-1] - fb.lower * gb.lower),
                               abs(wh[0] - fb.upper * gb.upper))
    worst_dual = 0.0
    for k in range(20):
        cplx = k % 2 == 1
        n = 2 + k % 2
        field = "complex" if cplx else "real"
        f = cons.random_unit(n, n, 9800 + k, field=field)
        g = cons.random_unit(n, n, 9900 + k, field=field)
        if matcore.numerical_rank(gram(f)) < n or matcore.numerical_rank(gram(g)) < n:
            continue
        duals = outer.cross_duals(f, g)
        originals = [np.outer(f.vectors[i], g.vectors[j].conj())
                     for i in range(n) for j in range(n)]
        bio = np.array([[abs(matcore.frobenius_ip(d, o)) for o in originals] for d in duals])
        worst_dual = max(worst_dual, float(np.max(np.abs(bio - np.eye(n * n)))))
    return [
        _row("cross-gram-spectrum", "eigenvalue products over 100 pairs", worst_spec,
             "lambda_i * nu_j", 1e-9, worst_spec <= 1e-9),
        _row("cross-gram-spectrum", "Riesz bounds multiply", worst_bounds, "(AC, BD)",
             1e-9, worst_bounds <= 1e-9),
        _row("cross-duals", "biorthogonality of dual bases", worst_dual, "identity",
             1e-9, worst_dual <= 1e-9),
    ]


# PSD bordered extensions


def check_psd_extension_roundtrip():
    stream = Stream(1000)
    forward_fail = 0
    offfam_fail = 0
    total = 1000
    for k in range(total):
        cplx = k % 2 == 1
        n = 2 + k % 7
        r = 1 + k % n
        q = _random_orthonormal(stream, n, cplx)
        lam = 0.5 + 1.5 * stream.uniforms(r)
        t = (q[:, :r] * lam) @ q[:, :r].conj().T
        t = (t + t.conj().T) / 2
        ext = geometry.psd_extension(t)
        if len(ext.i_plus) != r:
            forward_fail += 1
            continue
        a = _random_unit_vector(stream, r, cplx)
        v = geometry.admissible_vector(ext, a)
        if not geometry.extension_rank_preserved(t, v):
            forward_fail += 1
        back = geometry.admissible_coefficients(ext, v)
        if back is None or abs(float(np.sum(np.abs(back) ** 2)) - 1.0) > 1e-9:
            forward_fail += 1
        # off-family: wrong normalization always; kernel leak when rank deficient
        scaled = 1.5 * v
        if geometry.extension_rank_preserved(t, scaled) or \
                geometry.admissible_coefficients(ext, scaled) is not None:
            offfam_fail += 1
        if r < n:
            kernel = ext.spectrum.eigenvectors[:, r:]
            leak = v + kernel @ _random_unit_vector(stream, n - r, cplx) * 0.5
            if geometry.extension_rank_preserved(t, leak) or \
                    geometry.admissible_coefficients(ext, leak) is not None:
                offfam_fail += 1
    rows = [
        _row("psd-extension-roundtrip", "forward family preserves rank (1000 cases)",
             forward_fail, "0 failures", None, forward_fail == 0),
        _row("psd-extension-roundtrip", "off-family vectors rejected", offfam_fail,
             "0 failures", None, offfam_fail == 0),
    ]

    oracle_fail = 0
    for k in range(200):
        cplx = k % 2 == 1
        n = 2 + k % 7
        r = 1 + k % n
        ints = np.floor(stream.uniforms(n * r) * 7.0) - 3.0
        fmat = ints.reshape(n, r)
        if cplx:
            ints2 = np.floor(stream.uniforms(n * r) * 7.0) - 3.0
            fmat = fmat + 1j * ints2.reshape(n, r)
        t = fmat @ fmat.conj().T
        halves = (np.floor(stream.uniforms(n) * 9.0) - 4.0) / 2.0
        v = halves.astype(complex) * (1 + 1j) if cplx else halves
        b = geometry.bordered(t, v)
        if rational_rank(as_rational(t)) != matcore.numerical_rank(t):
            oracle_fail += 1
        if rational_rank(as_rational(b)) != matcore.numerical_rank(b):
            oracle_fail += 1
    rows.append(_row("psd-extension-roundtrip",
                     "rank agrees with exact-rational elimination (200 cases)",
                     oracle_fail, "0 disagreements", None, oracle_fail == 0))
    return rows


# classifier coherence


def check_classifier_coherence():
    stream = Stream(1100)
    disagreements = 0
    dependents = 0
    total = 1000
    for k in range(total):
        cplx = k % 4 == 3
        if cplx:
            n, m = 2, 2 + k % 2
            field = "complex"
        else:
            n = 2 + k % 2
            d = n * (n + 1) // 2
            m = 2 + k % max(1, d - 2)  # keep M + 1 within the ambient dimension
            field = "real"
        f = cons.random_unit(n, m, 11000 + k, field=field)
        os_ = outer.induce(f)
        if os_.rank < m:
            continue
        if k % 10 == 0:
            candidate = f.vectors[k % m].copy()  # exact dependent extension
        else:
            candidate = _random_unit_vector(stream, n, cplx)
        try:
            report = geometry.classify(f, candidate, tol=1e-8)
        except geometry.InternalInconsistency:
            disagreements += 1
            continue
        if report.verdict == "dependent":
            dependents += 1
    return [_row("classifier-coherence",
                 f"elliptic vs rank verdicts, {total} pairs ({dependents} dependent)",
                 disagreements, "0 disagreements", 1e-8, disagreements == 0)]


# ellipsoid-in-quartic containment


def check_mu2_mu4_probe():
    rows = []
    cases = [
        ("eij(2)", cons.eij_basis(2)),
        ("eij(3)", cons.eij_basis(3)),
        ("random R^3 M=6", cons.random_unit(3, 6, 1203)),
    ]
    for label, f in cases:
        worst = geometry.mu2_subset_mu4_probe(f, samples=200, seed=1212)
        rows.append(_row("mu2-mu4-probe", label, worst, "0", 1e-8, worst <= 1e-8))
    return rows


# perturbation envelopes


def check_perturbation_suite():
    stream = Stream(1300)
    worst_gap = -np.inf
    for k in range(1000):
        cplx = k % 2 == 1
        phi = _random_unit_vector(stream, 3, cplx)
        psi = _random_unit_vector(stream, 3, cplx)
        d = perturb.outer_distance(phi, psi)
        worst_gap = max(worst_gap, d - 2 * float(np.linalg.norm(phi - psi)) ** 2)
    rows = [_row("outer-distance-bound", "closed form under 2||phi-psi||^2 (1000 pairs)",
                 worst_gap, "<= 0", 1e-12, worst_gap <= 1e-12)]

    worst_env = -np.inf
    for k in range(200):
        cplx = k % 2 == 1
        n = 2 + k % 3
        m = 2 + k % n if n > 2 else 2
        field = "complex" if cplx else "real"
        f = cons.random_unit(n, m, 13000 + k, field=field)
        if matcore.numerical_rank(gram(f)) < m:
            continue
        rb = riesz_bounds(f)
        noise = (stream.complex_normals(m * n) if cplx else stream.normals(m * n)).reshape(m, n)
        budget_sq = 0.8 * rb.lower
        noise *= np.sqrt(budget_sq) / np.linalg.norm(noise) * float(stream.uniforms(1)[0])
        pf = Frame(field=field, vectors=f.vectors + noise)
        eps = float(np.linalg.norm(noise))
        lo, hi = perturb.perturbed_riesz_bounds(rb.lower, rb.upper, eps ** 2)
        w = matcore.hermitian_eigvalues(gram(pf))
        worst_env = max(worst_env, lo - w[-1], w[0] - hi)
    rows.append(_row("perturbed-bounds-envelope", "measured bounds inside lem1 envelope "
                     "(200 frames)", worst_env, "<= 0", 1e-9, worst_env <= 1e-9))

    failures = 0
    for k in range(500):
        cplx = k % 2 == 1
        n = 2 + k % 2
        d = n * (n + 1) // 2 if not cplx else n * n
        m = min(2 + k % 3, d)
        field = "complex" if cplx else "real"
        f = cons.random_unit(n, m, 13500 + k, field=field)
        os_ = outer.induce(f)
        if os_.rank < m:
            continue
        radius = perturb.independence_radius(os_)
        noise = (stream.complex_normals(m * n) if cplx else stream.normals(m * n)).reshape(m, n)
        noise *= 0.9 * np.sqrt(radius) / np.linalg.norm(noise)
        moved = f.vectors + noise
        moved /= np.linalg.norm(moved, axis=1, keepdims=True)
        if float(np.sum(np.abs(moved - f.vectors) ** 2)) >= radius:
            continue
        pf = Frame(field=field, vectors=moved)
        if outer.induce(pf).rank < m:
            failures += 1
    rows.append(_row("independence-radius-fuzz", "500 perturbations inside A/2",
                     failures, "0 failures", None, failures == 0))
    return rows


# density and repair


def _random_dependent_frame(k: int):
    cplx = k % 4 == 3
    if cplx:
        n = 2
        d = n * n
        field = "complex"
    else:
        n = 2 + k % 3
        d = n * (n + 1) // 2
        field = "real"
    m = max(2, 2 + k % (d - 1))
    f = cons.random_unit(n, m, 14000 + k, field=field)
    v = f.vectors.copy()
    i = k % m
    j = (k + 1 + k // m) % m
    if i == j:
        j = (j + 1) % m
    phase = np.exp(1j * 2.0) if cplx else -1.0
    v[j] = phase * v[i]  # same outer product, different vector
    return Frame(field=field, vectors=v)


def check_nudge_repair():
    rows = []
    for eps in (0.1, 0.01):
        failures = 0
        for k in range(200):
            f = _random_dependent_frame(k)
            assert outer.induce(f).rank < f.m
            g = perturb.nudge_to_independence(f, eps)
            movement = float(sum(np.linalg.norm(g.vectors[i] - f.vectors[i])
                                 for i in range(f.m)))
            if outer.induce(g).rank < g.m or movement >= eps:
                failures += 1
        rows.append(_row("nudge-repair", f"200 dependent frames, eps={eps}", failures,
                         "0 failures", None, failures == 0))
    dependent = 0
    for k in range(1000):
        cplx = k % 4 == 3
        n = 2 + k % 3 if not cplx else 2
        d = n * n if cplx else n * (n + 1) // 2
        m = 2 + k % (d - 1) if d > 2 else 2
        f = cons.random_unit(n, m, 14500 + k, field="complex" if cplx else "real")
        if outer.induce(f).rank < m:
            dependent += 1
    rows.append(_row("independence-density", "1000 random frames at M <= dim",
                     dependent, "0 dependent", None, dependent == 0))
    return rows


# ---------------------------------------------------------------------------

CHECKS = {
    "pc2-identity": check_pc2_identity,
    "epsilon-example": check_epsilon_example,
    "hadamard-gram": check_hadamard_gram,
    "outer-bound-extremes": check_outer_bound_extremes,
    "equiangular-simplex": check_equiangular_simplex,
    "biangular-table": check_biangular_table,
    "biangular-upper": check_biangular_upper,
    "biangular-degeneracy": check_biangular_degeneracy,
    "eij-ranks": check_eij_ranks,
    "outer-duals": check_outer_duals,
    "unprojected-dual": check_unprojected_dual,
    "cross-products": check_cross_products,
    "psd-extension-roundtrip": check_psd_extension_roundtrip,
    "classifier-coherence": check_classifier_coherence,
    "mu2-mu4-probe": check_mu2_mu4_probe,
    "perturbation-suite": check_perturbation_suite,
    "nudge-repair": check_nudge_repair,
}


def run_checks(only=None):
    """Run the named checks (all by default); returns (rows, elapsed_by_check)."""
    names = [only] if only else list(CHECKS)
    if only and only not in CHECKS:
        raise KeyError(f"unknown check {only!r}; see list_checks()")
    rows = []
    timings = {}
    for name in names:
        start = time.perf_counter()
        rows.extend(CHECKS[name]())
        timings[name] = time.perf_counter() - start
    return rows, timings


def list_checks():
    return list(CHECKS)


def rows_to_dicts(rows):
    return [asdict(r) for r in rows]
