"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""
import math

import numpy as np
import pytest

from conika import designs, linalg
from conika.certifier import certify, design_sum, rank_profile
from conika.entanglement import (
    BipartiteState,
    concurrence_oracle,
    design_concurrence,
    local_unitary_orbit_norms,
    pnorm_from_schmidt,
    probability_vector,
    schmidt_coefficients,
)
from conika.witnesses import (
    analytic_bounds,
    detect_linear,
    detect_quadratic,
    random_density_matrix,
    werner_state,
    witness_report,
)
from conftest import record_acceptance

SAMPLES = 1000


def check(number, ok, text):
    record_acceptance(number, ok, text)
    assert ok, text


def test_1_projective_design_constants():
    worst = 0.0
    for d in (2, 3, 5, 7):
        cert = certify(designs.mub_full_set(d))
        worst = max(worst, abs(cert.k_s - 2 / (d + 1) ** 2), abs(cert.k_a), cert.design_residual)
        assert cert.is_conical_design
    for d in (2, 3):
        cert = certify(designs.sic_povm(d))
        worst = max(worst, abs(cert.k_s - 2 / (d * (d + 1))), abs(cert.k_a), cert.design_residual)
        assert cert.is_conical_design
    check(1, worst <= 1e-10, f"MUB d=2,3,5,7 and SIC d=2,3 constants, max deviation {worst:.2e} <= 1e-10")


def test_2_smeared_family_closed_form():
    worst = 0.0
    for d in (2, 3):
        for t in (0.25, 0.5, 0.75):
            cert = certify(designs.depolarize(designs.sic_povm(d), t))
            k_a = (1 - t**2) / d**2
            k_s = 2 * t**2 / (d * (d + 1)) + k_a
            worst = max(worst, abs(cert.k_s - k_s), abs(cert.k_a - k_a))
    check(2, worst <= 1e-10, f"smeared SIC (k_s, k_a) vs closed form, max deviation {worst:.2e} <= 1e-10")


def test_3_concurrence_from_probability_norm():
    worst = 0.0
    worst_max = 0.0
    for d in (2, 3):
        phi = BipartiteState.from_vector(linalg.max_entangled_state(d))
        for name, povm in designs.catalogue(d).items():
            cert = certify(povm)
            for i in range(SAMPLES):
                state = BipartiteState.random(d, [1000 + d, i])
                c = design_concurrence(cert, probability_vector(povm, state).norm)
                worst = max(worst, abs(c - concurrence_oracle(state)))
            c = design_concurrence(cert, probability_vector(povm, phi).norm)
            worst_max = max(worst_max, abs(c - math.sqrt(2 - 2 / d)))
    ok = worst <= 1e-8 and worst_max <= 1e-9
    check(3, ok, f"formula vs oracle over {SAMPLES} states/design: {worst:.2e} <= 1e-8; maximal states {worst_max:.2e} <= 1e-9")


def test_4_schmidt_side_identity():
    worst = 0.0
    for d in (2, 3):
        for povm in designs.catalogue(d).values():
            cert = certify(povm)
            for i in range(SAMPLES):
                state = BipartiteState.random(d, [1000 + d, i])
                measured = probability_vector(povm, state).norm
                predicted = pnorm_from_schmidt(cert.k_s, cert.k_a, schmidt_coefficients(state))
                worst = max(worst, abs(measured - predicted))
    check(4, worst <= 1e-9, f"measured ||p|| vs Schmidt prediction, max deviation {worst:.2e} <= 1e-9")


def test_5_local_unitary_invariance():
    spread = 0.0
    for d in (2, 3, 5):
        for i, povm in enumerate(designs.catalogue(d).values()):
            norms = local_unitary_orbit_norms(povm, BipartiteState.random(d, [500, d, i]), 50, seed=d)
            spread = max(spread, norms.max() - norms.min())
    basis = designs.basis_povm(2)
    control = 0.0
    for i in range(100):
        state = BipartiteState.random(2, [77, i])
        u = linalg.haar_random_unitary(2, [78, i, 0])
        v = linalg.haar_random_unitary(2, [78, i, 1])
        moved = probability_vector(basis, state.apply_local(u, v)).norm
        control = max(control, abs(moved - probability_vector(basis, state).norm))
    ok = spread <= 1e-9 and control >= 1e-3
    check(5, ok, f"design orbit spread {spread:.2e} <= 1e-9; single-basis control spread {control:.3f} >= 1e-3")


def test_6_witness_bounds():
    exact = True
    worst = 0.0
    for d in (2, 3, 5):
        for name, povm in designs.catalogue(d).items():
            cert = certify(povm)
            kp, km = (cert.k_s + cert.k_a) / 2, (cert.k_s - cert.k_a) / 2
            b = analytic_bounds(cert, d)
            expected = (kp, kp + km, kp - km, kp + km, kp, kp + km, kp, kp + d * km)
            got = (b.s_minus_N, b.s_plus_N, b.e_minus_N, b.e_plus_N,
                   b.s_minus_NPT, b.s_plus_NPT, b.e_minus_NPT, b.e_plus_NPT)
            exact &= got == expected
            r = witness_report(cert, d, povm=povm)
            worst = max(
                worst,
                abs(r.numeric_s_minus_N - r.s_minus_N),
                abs(r.numeric_s_plus_N - r.s_plus_N),
                abs(r.numeric_s_minus_NPT - r.s_minus_NPT),
                abs(r.numeric_s_plus_NPT - r.s_plus_NPT),
            )
    check(6, exact and worst <= 1e-6, f"analytic eight-tuple exact={exact}; see-saw vs analytic s-values {worst:.2e} <= 1e-6")


def test_7_werner_thresholds():
    mismatches = []
    for d in (2, 3):
        for name, povm in designs.catalogue(d).items():
            cert = certify(povm)
            for k in range(101):
                p = k / 100
                rho = werner_state(d, p)
                if detect_linear(rho, cert, d).below != (p > 0.5):
                    mismatches.append((d, name, p, "linear"))
                if detect_quadratic(rho, cert, d) != (p > (d - 1) / d):
                    mismatches.append((d, name, p, "quadratic"))
    check(7, not mismatches, f"Werner grid thresholds p>1/2 and p>(d-1)/d, mismatches={mismatches[:3]}")


def test_8_above_implies_quadratic():
    counterexamples = 0
    detections = 0
    for d in (2, 3):
        for name in ("sic", "mub"):
            cert = certify(designs.catalogue(d)[name])
            for seed in range(1000):
                rho = random_density_matrix(d, seed)
                if detect_linear(rho, cert, d).above:
                    detections += 1
                    counterexamples += not detect_quadratic(rho, cert, d)
    check(8, counterexamples == 0, f"{detections} above-detections among random mixed states, {counterexamples} counterexamples")


def test_9_projective_iff_rank_one():
    disagreements = []
    for d in (2, 3, 5):
        for name, povm in designs.catalogue(d, smearing=(0.25, 0.5, 0.75, 1.0)).items():
            cert = certify(povm)
            if cert.is_projective_design != all(r == 1 for r in rank_profile(povm)):
                disagreements.append((d, name))
    check(9, not disagreements, f"is_projective_design <=> all ranks 1 across the catalogue, disagreements={disagreements}")
