#!/usr/bin/env python3
"""Smoke tests for the sphfir python bindings."""
import math

import numpy as np
import sphfir as s


def main():
    # grids and quadrature
    g = s.make_grid(12)
    assert g.n_beta == 24 and g.n_alpha == 24
    assert abs(g.weight_sum() - 4 * math.pi) < 1e-9
    assert g.exact_bandwidth() >= 12

    # harmonics
    assert abs(s.eval_Y(0, 0, 0.7, 1.3) - 1 / math.sqrt(4 * math.pi)) < 1e-14
    assert abs(s.norm_const(3, 0) - math.sqrt(7 / (4 * math.pi))) < 1e-14
    y = s.eval_Y_column(2, 0.9, 0.4)
    assert y.shape == (5,)
    assert abs(np.linalg.norm(y) ** 2 - 5 / (4 * math.pi)) < 1e-12

    # wigner matrices are unitary
    d = s.wigner_D(8, s.EulerAngles(0.3, 1.1, 2.0))
    assert np.max(np.abs(d @ d.conj().T - np.eye(17))) < 1e-10

    # delta magnitudes
    delta = s.delta_spectrum(32)
    for l in range(32):
        assert abs(delta.degree_norm(l) - math.sqrt((2 * l + 1) / (4 * math.pi))) < 1e-12

    # analysis/synthesis round trip through numpy
    f = s.random_spectrum(12, 77, True)
    field = s.synthesize(f, g)
    vals = field.values
    assert vals.shape == (24, 24)
    rebuilt = s.SampledField(g, vals, True)
    back = s.analyze_quadrature(rebuilt, 12)
    assert f.max_abs_diff(back) < 1e-8

    # irf agrees on a constant
    const = s.SampledField(g, np.ones((24, 24), dtype=complex), True)
    ci = s.analyze_irf(const, 6)
    assert abs(ci.coeff(0, 0) - math.sqrt(4 * math.pi)) < 1e-9
    assert ci.degree_norm(3) < 1e-9

    # filtering: identity, cascade associativity, response curve
    h = s.five_point_lowpass(24)
    assert abs(h.matrix(0)[0, 0] - 1.0) < 1e-14
    resp = s.delta_normalized_response(h)
    assert abs(resp[0] - 1.0) < 1e-12 and resp[-1] < resp[0]
    f24 = s.random_spectrum(24, 5)
    h2 = s.three_point_lowpass(0.2, 24)
    seq = s.apply(h2, s.apply(h, f24))
    cas = s.apply(s.cascade(h, h2), f24)
    assert seq.max_abs_diff(cas) < 1e-10

    # rotation keeps magnitudes
    rot = s.rotate_spectrum(f24, s.EulerAngles(0.4, 0.8, 1.9))
    for l in range(24):
        assert abs(rot.degree_norm(l) - f24.degree_norm(l)) < 1e-9

    # magnitude/phase split
    mag, phase = s.magnitude_phase(f24.degree(3))
    assert abs(np.linalg.norm(phase) - 1.0) < 1e-12
    assert abs(mag - f24.degree_norm(3)) < 1e-12

    # butterfly taps
    taps = s.butterfly_taps(s.ButterflyParams())
    assert len(taps) == 144

    # dof split
    c = s.dof_counts(10)
    assert c.total == 121 and abs(c.percent_phase - 1000 / 11) < 1e-12

    # fisher-von mises: quadrature = c_l^0 * bessel ratio
    fvm = s.fisher_von_mises_spectrum(2.5, 8)
    for l in range(8):
        expect = s.norm_const(l, 0) * s.fvm_bessel_ratio(l, 2.5)
        assert abs(fvm.coeff(l, 0).real - expect) < 1e-9

    # spharm smoothing shrinks radial variance
    bumpy = s.bumpy_sphere(g, 8, 11, 0.2)
    spec = s.spharm_analyze(bumpy.x, bumpy.y, bumpy.z, 12)
    smooth = s.spharm_synthesize(s.spharm_filter(spec, s.five_point_lowpass(12)), g)
    assert s.radial_variance(smooth) < s.radial_variance(bumpy)

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
