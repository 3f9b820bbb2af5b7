use std::f64::consts::PI;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphfn_core::hypercomplex::*;
use sphfn_core::{Error, HMatrix2, HNumber, HNumber32};

const A: Signature = Signature::ANTI;

fn rand_h(rng: &mut ChaCha8Rng, sig: Signature) -> HNumber {
    Hyper::new(sig, rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn rand_angles(rng: &mut ChaCha8Rng) -> QuatEuler<f64> {
    QuatEuler {
        phi: rng.gen_range(0.0..2.0 * PI),
        eps: rng.gen_range(-2.0..2.0),
        vsig: rng.gen_range(0.0..2.0 * PI),
        theta: rng.gen_range(0.0..PI),
        tau: rng.gen_range(-2.0..2.0),
        phi2: rng.gen_range(0.0..PI),
        psi: rng.gen_range(-2.0 * PI..2.0 * PI),
        eps2: rng.gen_range(-2.0..2.0),
        omega: rng.gen_range(-2.0..2.0),
        chi: rng.gen_range(-2.0 * PI..2.0 * PI),
    }
}

fn exp_series(x: &HNumber, terms: usize) -> HNumber {
    let mut term = HNumber::one(x.sig);
    let mut sum = term;
    for k in 1..terms {
        term = (term * *x).scale(1.0 / k as f64);
        sum = sum + term;
    }
    sum
}

#[test]
fn unit_products() {
    let (i, j, k) = (HNumber::i(A), HNumber::j(A), HNumber::k(A));
    assert_eq!(h_mul(&i, &j).unwrap(), k);
    assert_eq!(h_mul(&j, &k).unwrap(), -i);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let q = rand_h(&mut rng, A);
        assert_eq!(HNumber::one(A) * q, q);
    }
    assert_eq!(h_mul(&i, &HNumber::i(Signature::HAMILTON)), Err(Error::SignatureMismatch));
}

#[test]
fn conjugation_and_norm_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for sig in [A, Signature::HAMILTON] {
        for _ in 0..1000 {
            let (p, q) = (rand_h(&mut rng, sig), rand_h(&mut rng, sig));
            assert_eq!(q.conj().conj(), q);
            assert!(((p * q).conj() - q.conj() * p.conj()).max_abs() < 1e-14);
            let n = q * q.conj();
            assert!(n.x.abs() < 1e-14 && n.y.abs() < 1e-14 && n.z.abs() < 1e-14);
            let pure = q.pure() * q.pure();
            assert!((pure.w - q.pure_square()).abs() < 1e-14);
            assert!(pure.x.abs() + pure.y.abs() + pure.z.abs() < 1e-14);
            let r = rand_h(&mut rng, sig);
            assert!(((p * q) * r - p * (q * r)).max_abs() < 1e-14);
            assert!((p * (q + r) - (p * q + p * r)).max_abs() < 1e-14);
        }
    }
}

#[test]
fn exponential_examples() {
    assert_eq!(h_exp(&HNumber::zero(A)), HNumber::one(A));
    for sig in [A, Signature::HAMILTON] {
        let e = h_exp(&HNumber::i(sig).scale(PI));
        assert!((e + HNumber::one(sig)).max_abs() < 1e-15);
    }
    for k in 0..=12 {
        let t = -3.0 + 0.5 * k as f64;
        let x = HNumber::j(A).scale(t);
        let e = h_exp(&x);
        assert!((e.w - t.cosh()).abs() < 1e-12 && (e.y - t.sinh()).abs() < 1e-12);
        assert!((e - exp_series(&x, 40)).max_abs() < 1e-12);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let x = rand_h(&mut rng, A).scale(2.0);
        assert!((h_exp(&x) - exp_series(&x, 40)).max_abs() < 1e-11 * (1.0 + h_exp(&x).max_abs()));
        let p = x.pure();
        assert!((h_exp(&p) * h_exp(&-p) - HNumber::one(A)).max_abs() < 1e-12);
    }
}

#[test]
fn inverse_examples() {
    assert_eq!(h_inv(&HNumber::i(A)).unwrap(), -HNumber::i(A));
    assert_eq!(h_inv(&HNumber::scalar(A, 2.0)).unwrap(), HNumber::scalar(A, 0.5));
    assert_eq!(h_inv(&(HNumber::one(A) + HNumber::j(A))), Err(Error::NullNorm));
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let q = rand_h(&mut rng, A);
        if let Ok(qi) = q.inv() {
            if q.norm().abs() > 0.05 {
                assert!((q * qi - HNumber::one(A)).max_abs() < 1e-12);
            }
        }
    }
}

#[test]
fn cartan_examples() {
    let th: f64 = 1.1;
    let su2 = cartan_compose(&QuatEuler { theta: th, ..QuatEuler::zero() }, CartanFamily::Su2).unwrap();
    let (c, s) = ((th / 2.0).cos(), (th / 2.0).sin());
    let want = HMatrix2::new(HNumber::scalar(A, c), HNumber::i(A).scale(s), HNumber::i(A).scale(s), HNumber::scalar(A, c));
    assert!(su2.max_diff(&want) < 1e-15);

    let id = cartan_compose(&QuatEuler::zero(), CartanFamily::Sp11).unwrap();
    assert!(id.max_diff(&HMatrix2::identity(A)) < 1e-15);

    let t: f64 = -0.8;
    let b = cartan_compose(&QuatEuler { tau: t, ..QuatEuler::zero() }, CartanFamily::Sp11).unwrap();
    let (ch, sh) = (HNumber::scalar(A, (t / 2.0).cosh()), HNumber::scalar(A, (t / 2.0).sinh()));
    assert!(b.max_diff(&HMatrix2::new(ch, sh, sh, ch)) < 1e-15);

    let bad = QuatEuler { theta: 4.0, ..QuatEuler::zero() };
    assert!(matches!(cartan_compose(&bad, CartanFamily::Sp11), Err(Error::Range { name: "theta", .. })));
}

#[test]
fn degeneration_lattice() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let g = rand_angles(&mut rng);
        let lorentz = QuatEuler { vsig: 0.0, phi2: 0.0, chi: 0.0, omega: 0.0, ..g };
        let a = cartan_compose(&lorentz, CartanFamily::Sl2c).unwrap();
        let b = cartan_compose(&lorentz, CartanFamily::Sp11).unwrap();
        assert!(a.max_diff(&b) < 1e-12);
        let compact = QuatEuler { tau: 0.0, eps: 0.0, eps2: 0.0, omega: 0.0, vsig: 0.0, chi: 0.0, ..g };
        let a = cartan_compose(&compact, CartanFamily::Spin4).unwrap();
        let b = cartan_compose(&compact, CartanFamily::Sp11).unwrap();
        assert!(a.max_diff(&b) < 1e-12);
        let su = QuatEuler { phi2: 0.0, ..compact };
        let a = cartan_compose(&su, CartanFamily::Su2).unwrap();
        let b = cartan_compose(&su, CartanFamily::Spin4).unwrap();
        assert!(a.max_diff(&b) < 1e-12);
    }
}

#[test]
fn membership_examples() {
    let r = sp11_membership(&HMatrix2::identity(A), 1e-12).unwrap();
    assert!(r.is_member && r.residuals.iter().all(|(_, v)| *v == 0.0));
    let two = HNumber::scalar(A, 2.0);
    let r = sp11_membership(&HMatrix2::diag(two, two), 1e-12).unwrap();
    assert!(!r.is_member);
    assert_eq!(r.residuals.len(), 6);
}

#[test]
fn subgroup_membership_pattern() {
    // observed: only these pass the Hamilton-norm conditions
    let hamilton = [Subgroup::M12, Subgroup::N01, Subgroup::N02];
    for which in Subgroup::ALL {
        for t in [0.3, -1.2, 2.5] {
            let r = sp11_membership(&subgroup(which, t), 1e-12).unwrap();
            assert_eq!(r.is_member, hamilton.contains(&which), "{}", which.name());
            if which == Subgroup::P34 {
                assert!(r.split_is_member);
            }
        }
    }
}

#[test]
fn composite_trig_expansions() {
    let t = composite_trig(0.0, 0.0, 0.9);
    assert!((t.cos_q.re - 0.9f64.cosh()).abs() < 1e-15 && t.cos_q.im.abs() < 1e-15);
    let t = composite_trig(0.4, 1.3, 0.0);
    assert!((t.cos_q.re - 1.7f64.cos()).abs() < 1e-15);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let (th, ph, ta) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI), rng.gen_range(-2.0..2.0));
        let t = composite_trig(th, ph, ta);
        let re = th.cos() * ph.cos() * ta.cosh() - th.sin() * ph.sin() * ta.cosh();
        let im = th.sin() * ph.cos() * ta.sinh() + th.cos() * ph.sin() * ta.sinh();
        assert!((t.cos_q.re - re).abs() < 1e-13 && (t.cos_q.im - im).abs() < 1e-13);
        let one = t.cos_q * t.cos_q + t.sin_q * t.sin_q;
        assert!((one - 1.0).norm() < 1e-12);
        assert!((t.cos_half_sq - (1.0 + t.cos_q) / 2.0).norm() < 1e-13);
        assert!((t.sin_half_sq - (1.0 - t.cos_q) / 2.0).norm() < 1e-13);
    }
}

#[test]
fn composite_angle_reductions() {
    let g = QuatEuler { phi: 0.3, eps: 0.4, theta: 0.5, tau: 0.6, psi: 0.7, eps2: 0.8, ..QuatEuler::zero() };
    let c = g.composite();
    assert_eq!(c.theta_q.components(), [0.5, -0.6, 0.0, 0.0]);
    assert_eq!(c.phi_q.components(), [0.3, -0.4, 0.0, 0.0]);
    assert_eq!(c.psi_q.components(), [0.7, -0.8, 0.0, 0.0]);
    let d = QuatEuler { phi: 0.3, vsig: 0.2, theta: 0.5, phi2: 0.1, psi: 0.7, chi: 0.9, ..QuatEuler::zero() };
    let c = d.composite();
    assert_eq!(c.double, [0.6, 0.5, 1.6]);
    assert_eq!(c.theta_q.components(), [0.6, 0.0, 0.0, 0.0]);
}

#[test]
fn fractional_linear_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let z = rand_h(&mut rng, A);
    assert!((fractional_linear(&HMatrix2::identity(A), &z).unwrap() - z).max_abs() < 1e-15);
    let mut checked = 0;
    while checked < 100 {
        let g1 = rand_angles(&mut rng);
        let g2 = rand_angles(&mut rng);
        let m1 = cartan_compose(&QuatEuler { tau: g1.tau / 2.0, ..g1 }, CartanFamily::Sp11).unwrap();
        let m2 = cartan_compose(&QuatEuler { tau: g2.tau / 2.0, ..g2 }, CartanFamily::Sp11).unwrap();
        let z = rand_h(&mut rng, A).scale(0.5);
        let den2 = m2.c * z + m2.d;
        let Ok(w2) = fractional_linear(&m2, &z) else { continue };
        let den1 = m1.c * w2 + m1.d;
        if den1.norm().abs() < 0.1 || den2.norm().abs() < 0.1 {
            continue;
        }
        let Ok(lhs) = fractional_linear(&m1.try_mul(&m2).unwrap(), &z) else { continue };
        let rhs = fractional_linear(&m1, &w2).unwrap();
        assert!((lhs - rhs).max_abs() < 1e-8 * (1.0 + rhs.max_abs()), "{lhs} {rhs} {} {}", den1.norm(), den2.norm());
        checked += 1;
    }
}

#[test]
fn json_shapes() {
    let q = Hyper::new(A, 1.0, 2.0, 3.0, 4.0);
    let v = serde_json::to_value(q).unwrap();
    assert_eq!(v, serde_json::json!({"sig": "anti", "w": 1.0, "x": 2.0, "y": 3.0, "z": 4.0}));
    let m = HMatrix2::identity(Signature::HAMILTON);
    let v = serde_json::to_value(m).unwrap();
    assert_eq!(v[1][1]["w"], 1.0);
    assert_eq!(v[0][0]["sig"], "hamilton");
    let back: HMatrix2 = serde_json::from_value(v).unwrap();
    assert_eq!(back, m);
}

#[test]
fn single_precision_instance() {
    let a = HNumber32::i(A);
    let b = HNumber32::j(A);
    assert_eq!(a * b, HNumber32::k(A));
    let e = h_exp(&HNumber32::j(A).scale(0.5f32));
    assert!((e.w - 0.5f32.cosh()).abs() < 1e-6);
    let g = QuatEuler::<f32> { tau: 0.4, theta: 0.3, ..QuatEuler::zero() };
    let m = cartan_compose(&g, CartanFamily::Sp11).unwrap();
    let m64 = cartan_compose(&QuatEuler::<f64> { tau: 0.4, theta: 0.3, ..QuatEuler::zero() }, CartanFamily::Sp11).unwrap();
    assert!(((m.a.w as f64) - m64.a.w).abs() < 1e-6);
}

proptest! {
    #[test]
    fn exp_of_pure_is_invertible(x in -3.0..3.0f64, y in -3.0..3.0f64, z in -3.0..3.0f64) {
        let p = Hyper::new(A, 0.0, x, y, z);
        let prod = h_exp(&p) * h_exp(&-p);
        prop_assert!((prod - HNumber::one(A)).max_abs() < 1e-9 * (1.0 + h_exp(&p).max_abs().powi(2)));
    }

    #[test]
    fn matrix_product_is_associative(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m: Vec<HMatrix2> = (0..3)
            .map(|_| HMatrix2::new(rand_h(&mut rng, A), rand_h(&mut rng, A), rand_h(&mut rng, A), rand_h(&mut rng, A)))
            .collect();
        let l = m[0].try_mul(&m[1]).unwrap().try_mul(&m[2]).unwrap();
        let r = m[0].try_mul(&m[1].try_mul(&m[2]).unwrap()).unwrap();
        prop_assert!(l.max_diff(&r) < 1e-13);
        prop_assert!(m[0].try_mul(&HMatrix2::identity(A)).unwrap().max_diff(&m[0]) == 0.0);
    }
}
