use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use valspin_core::octgeo::*;

const TOL: f64 = 1e-9;

fn random_octonion(rng: &mut impl Rng) -> Octonion {
    Octonion(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
}

fn normalize(v: &mut [f64]) {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= n);
}

/// Random orthonormal pair in `R^dim` by Gram–Schmidt.
fn random_orthonormal(rng: &mut impl Rng, dim: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    normalize(&mut u);
    let mut v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let p: f64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
    v.iter_mut().zip(&u).for_each(|(x, y)| *x -= p * y);
    normalize(&mut v);
    (u, v)
}

fn rotate(u: &[f64], v: &[f64], theta: f64) -> (Vec<f64>, Vec<f64>) {
    let (s, c) = theta.sin_cos();
    let u2 = u.iter().zip(v).map(|(a, b)| a * c + b * s).collect();
    let v2 = u.iter().zip(v).map(|(a, b)| -a * s + b * c).collect();
    (u2, v2)
}

#[test]
fn norm_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let (a, b) = (random_octonion(&mut rng), random_octonion(&mut rng));
        let ab = a * b;
        assert!((ab.norm() - a.norm() * b.norm()).abs() <= TOL);
        assert!((oct_inner(ab, ab) - oct_inner(a, a) * oct_inner(b, b)).abs() <= TOL);
    }
}

#[test]
fn alternative_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let (a, b, c) = (
            random_octonion(&mut rng),
            random_octonion(&mut rng),
            random_octonion(&mut rng),
        );
        assert!(Octonion::associator(a, a, b).norm() <= TOL);
        assert!(Octonion::associator(a, b, b).norm() <= TOL);
        assert!((Octonion::associator(a, b, c) + Octonion::associator(b, a, c)).norm() <= TOL);
        assert!(((a * b).conj() - b.conj() * a.conj()).norm() <= TOL);
    }
}

#[test]
fn op2_curvature_is_a_function_of_the_plane() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let (u, v) = random_orthonormal(&mut rng, 16);
        let k = sectional_curvature_op2(&TangentPlanePair::from_flat(&u, &v).unwrap());
        let (u2, v2) = rotate(&u, &v, rng.gen_range(0.0..std::f64::consts::TAU));
        let k2 = sectional_curvature_op2(&TangentPlanePair::from_flat(&u2, &v2).unwrap());
        assert!((k - k2).abs() <= TOL, "{k} vs {k2}");
        // swapping the spanning vectors reverses orientation only
        let k3 = sectional_curvature_op2(&TangentPlanePair::from_flat(&v, &u).unwrap());
        assert!((k - k3).abs() <= TOL);
    }
}

#[test]
fn op2_curvature_is_quarter_pinched() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..10_000 {
        let (u, v) = random_orthonormal(&mut rng, 16);
        let k = sectional_curvature_op2(&TangentPlanePair::from_flat(&u, &v).unwrap());
        lo = lo.min(k);
        hi = hi.max(k);
    }
    assert!(lo >= 1.0 - TOL && hi <= 4.0 + TOL, "range [{lo}, {hi}]");
}

#[test]
fn op2_cayley_lines_have_curvature_four() {
    // {(x, m x)} and {(0, y)} are octonionic lines through the origin.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let m = random_octonion(&mut rng);
        let (p, q) = random_orthonormal(&mut rng, 8);
        let (p, q) = (
            Octonion::from_slice(&p).unwrap(),
            Octonion::from_slice(&q).unwrap(),
        );
        let s = 1.0 / (1.0 + m.norm_sq()).sqrt();
        let pair = TangentPlanePair::new(
            (p.scale(s), (m * p).scale(s)),
            (q.scale(s), (m * q).scale(s)),
        )
        .unwrap();
        assert!((sectional_curvature_op2(&pair) - 4.0).abs() <= 1e-9);
    }
}

#[test]
fn cpn_curvature_and_kaehler_angle() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let (v, w) = random_orthonormal(&mut rng, 6);
        let phi = kaehler_angle(&v, &w).unwrap();
        assert!((0.0..=std::f64::consts::FRAC_PI_2).contains(&phi));
        let cos_sq = phi.cos().powi(2);
        assert!((0.0..=1.0).contains(&cos_sq));
        let k = sectional_curvature_cpn(&v, &w).unwrap();
        let (v2, w2) = rotate(&v, &w, rng.gen_range(0.0..6.0));
        assert!((k - sectional_curvature_cpn(&v2, &w2).unwrap()).abs() <= TOL);
        assert!((phi - kaehler_angle(&v2, &w2).unwrap()).abs() <= 1e-6);
        assert!((k - (1.0 + 3.0 * cos_sq)).abs() <= 1e-9);
    }
}

#[test]
fn hpn_lambda_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let (u1, u2) = random_orthonormal(&mut rng, 12);
        let lambda = quaternionic_lambda(&u1, &u2).unwrap();
        assert!((0.0..=1.0 + TOL).contains(&lambda));
        let k = sectional_curvature_hpn(&u1, &u2).unwrap();
        assert!((1.0 - TOL..=4.0 + TOL).contains(&k));
        let h = quaternionic_hermitian_product(&u1, &u2).unwrap();
        assert!(
            h[0].abs() <= TOL,
            "hermitian product of orthogonal vectors is pure"
        );
        let (a, b) = rotate(&u1, &u2, rng.gen_range(0.0..6.0));
        assert!((k - sectional_curvature_hpn(&a, &b).unwrap()).abs() <= TOL);
    }
}

#[test]
fn klain_identities_at_random_planes() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let (v, w) = random_orthonormal(&mut rng, 8);
        assert!(
            klain_identity_check(&Plane::Complex { v, w })
                .unwrap()
                .passed
        );
        let (u1, u2) = random_orthonormal(&mut rng, 8);
        assert!(
            klain_identity_check(&Plane::Quaternionic { u1, u2 })
                .unwrap()
                .passed
        );
    }
}

#[test]
fn op2_klain_identity_values() {
    let checks: Vec<KlainCheck> = op2_reference_planes()
        .into_iter()
        .map(|(p, _)| klain_identity_check(&Plane::Octonionic(p)).unwrap())
        .collect();
    assert!((checks[0].curvature - 4.0).abs() <= TOL && (checks[0].combination - 4.0).abs() <= TOL);
    assert!((checks[1].curvature - 1.0).abs() <= TOL && (checks[1].combination - 1.0).abs() <= TOL);
}
