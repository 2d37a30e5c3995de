//! Property-based invariants: gamma-ratio consistency, Pochhammer
//! composition, the classical Kummer transformation, derivative rules,
//! quadrature linearity/affine invariance and kernel monotonicity.

#![allow(clippy::excessive_precision)]

mod common;

use common::{c, rel_c};
use extwhit::bessel;
use extwhit::extended;
use extwhit::special;
use extwhit::{quad, Accuracy, QuadSpec};
use proptest::prelude::*;

fn wellbehaved_re() -> impl Strategy<Value = f64> {
    0.3f64..4.0
}

fn small_im() -> impl Strategy<Value = f64> {
    -2.0f64..2.0
}

proptest! {
    #[test]
    fn beta_gamma_ratio_consistency(
        xr in wellbehaved_re(), xi in small_im(),
        yr in wellbehaved_re(), yi in small_im(),
        wr in wellbehaved_re(), wi in small_im(),
    ) {
        // B(x,y) B(x+y,w) = B(y,w) B(y+w,x)
        let (x, y, w) = (c(xr, xi), c(yr, yi), c(wr, wi));
        let lhs = special::beta(x, y).unwrap() * special::beta(x + y, w).unwrap();
        let rhs = special::beta(y, w).unwrap() * special::beta(y + w, x).unwrap();
        prop_assert!(rel_c(lhs, rhs) < 1e-12, "lhs {lhs} rhs {rhs}");
    }

    #[test]
    fn pochhammer_composes(
        ar in -3.0f64..3.0, ai in small_im(),
        n in 0u32..12, m in 0u32..12,
    ) {
        let a = c(ar, ai);
        let lhs = special::pochhammer(a, n) * special::pochhammer(a + n as f64, m);
        let rhs = special::pochhammer(a, n + m);
        prop_assert!((lhs - rhs).norm() <= 1e-14 * rhs.norm().max(1.0));
    }

    #[test]
    fn chf_classical_kummer(
        b in 0.2f64..3.0,
        cshift in 0.3f64..3.0,
        zr in -10.0f64..10.0,
        zi in -3.0f64..3.0,
    ) {
        // Phi(b; c; z) = e^z Phi(c-b; c; -z)
        let cc = c(b + cshift, 0.0);
        let z = c(zr, zi);
        if z.norm() > 10.0 {
            return Ok(());
        }
        let lhs = special::chf_classic(c(b, 0.0), cc, z).unwrap();
        let rhs = special::chf_classic(cc - b, cc, -z).unwrap();
        prop_assert!(rel_c(lhs.value, z.exp() * rhs.value) < 1e-10);
    }

    #[test]
    fn chf_derivative_rule(
        b in 0.3f64..2.5,
        cshift in 0.3f64..2.5,
        zr in -4.0f64..4.0,
    ) {
        // d/dz Phi(b; c; z) = (b/c) Phi(b+1; c+1; z), central difference
        let cc = c(b + cshift, 0.0);
        let z = c(zr, 0.0);
        let h = 1e-5 * z.norm().max(1.0);
        let up = special::chf_classic(c(b, 0.0), cc, z + h).unwrap();
        let dn = special::chf_classic(c(b, 0.0), cc, z - h).unwrap();
        let fd = (up.value - dn.value) / (2.0 * h);
        let exact = c(b, 0.0) / cc
            * special::chf_classic(c(b + 1.0, 0.0), cc + 1.0, z).unwrap().value;
        prop_assert!(rel_c(fd, exact) < 1e-6, "fd {fd} exact {exact}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn quadrature_linearity(a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let spec = QuadSpec::default();
        let f = |t: f64| c((1.7 * t).sin(), 0.0);
        let g = |t: f64| c((-0.8 * t).exp(), 0.0);
        let fi = quad::integrate(f, &spec).unwrap().value;
        let gi = quad::integrate(g, &spec).unwrap().value;
        let combo = quad::integrate(|t| a * f(t) + b * g(t), &spec).unwrap().value;
        let expect = a * fi + b * gi;
        prop_assert!((combo - expect).norm() < 1e-13 * expect.norm().max(1.0));
    }

    #[test]
    fn quadrature_affine_invariance(a in -4.0f64..2.0, len in 0.5f64..6.0) {
        let bnd = a + len;
        let g = |u: f64| c((0.6 * u).cos() * (-0.2 * u * u).exp(), 0.0);
        let direct = quad::integrate(g, &QuadSpec::affine(a, bnd, 1e-12, 12).unwrap())
            .unwrap()
            .value;
        let unit = quad::integrate(|t| g(a + len * t), &QuadSpec::default())
            .unwrap()
            .value;
        let mapped = unit * len;
        prop_assert!((direct - mapped).norm() < 1e-13 * mapped.norm().max(1e-3));
    }

    #[test]
    fn ext_beta_symmetry(
        x in 0.6f64..2.5,
        y in 0.6f64..2.5,
        p in 0.2f64..3.0,
        nu in 0.0f64..2.5,
    ) {
        let acc = Accuracy::default();
        let params = extended::ExtParams::real(p, nu).unwrap();
        let ab = extended::ext_beta_pnu(c(x, 0.0), c(y, 0.0), &params, acc).unwrap();
        let ba = extended::ext_beta_pnu(c(y, 0.0), c(x, 0.0), &params, acc).unwrap();
        prop_assert!(rel_c(ab.value, ba.value) < 1e-11);
    }

    #[test]
    fn kernel_monotonicity(rho in 0.5f64..8.0, x in 0.01f64..50.0, dx in 0.1f64..4.0) {
        let lo = bessel::k_scaled_general(rho, x).unwrap();
        let hi = bessel::k_scaled_general(rho, x + dx).unwrap();
        prop_assert!(hi < lo, "Khat must decrease in x: {hi} vs {lo}");
        let up = bessel::k_scaled_general(rho + 0.7, x).unwrap();
        prop_assert!(up > lo, "Khat must increase in order");
    }
}
