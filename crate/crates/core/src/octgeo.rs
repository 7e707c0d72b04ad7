//! Octonions and the sectional curvature of the rank-one symmetric spaces
//! `CP^n`, `HP^n` and `OP²` (normalized so curvature ranges over `[1, 4]`),
//! with the Klain-function identities that express the degree-2 curvature
//! valuation in each invariant basis.
//!
//! Octonions use Cayley–Dickson doubling of the quaternions,
//! `(a, b)(c, d) = (ac - d̄b, da + bc̄)`, with basis `1, e1, …, e7` where
//! `e1, e2, e3` are the quaternion units `i, j, k` and `e4` is the doubling
//! unit.

use std::f64::consts::FRAC_PI_2;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Tolerance for orthonormality checks and plane recognition.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Default)]
struct Quaternion([f64; 4]);

impl Quaternion {
    fn conj(self) -> Self {
        let [a, b, c, d] = self.0;
        Self([a, -b, -c, -d])
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let [a1, b1, c1, d1] = self.0;
        let [a2, b2, c2, d2] = o.0;
        Self([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
}

/// Element of the octonions in the basis `{1, e1, …, e7}`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ZERO: Self = Self([0.0; 8]);
    pub const ONE: Self = Self([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    /// Basis element: `0` is the unit, `1..=7` are `e1..e7`.
    pub fn basis(i: usize) -> Self {
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Self(c)
    }

    pub fn from_slice(s: &[f64]) -> Result<Self> {
        let arr: [f64; 8] = s.try_into().map_err(|_| {
            Error::InvalidArgument(format!("an octonion needs 8 coordinates, got {}", s.len()))
        })?;
        Ok(Self(arr))
    }

    fn halves(self) -> (Quaternion, Quaternion) {
        let c = self.0;
        (
            Quaternion([c[0], c[1], c[2], c[3]]),
            Quaternion([c[4], c[5], c[6], c[7]]),
        )
    }

    fn from_halves(a: Quaternion, b: Quaternion) -> Self {
        let mut c = [0.0; 8];
        c[..4].copy_from_slice(&a.0);
        c[4..].copy_from_slice(&b.0);
        Self(c)
    }

    pub fn conj(self) -> Self {
        let mut c = self.0.map(|x| -x);
        c[0] = self.0[0];
        Self(c)
    }

    pub fn real(self) -> f64 {
        self.0[0]
    }

    pub fn inner(self, other: Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(self) -> f64 {
        self.inner(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Self(self.0.map(|x| x * s))
    }

    /// `[a, b, c] = a(bc) - (ab)c`.
    pub fn associator(a: Self, b: Self, c: Self) -> Self {
        a * (b * c) - (a * b) * c
    }
}

impl Add for Octonion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for Octonion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for Octonion {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|x| -x))
    }
}

impl Mul for Octonion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = self.halves();
        let (c, d) = o.halves();
        Self::from_halves(a * c - d.conj() * b, d * a + b * c.conj())
    }
}

pub fn oct_mul(a: Octonion, b: Octonion) -> Octonion {
    a * b
}

pub fn oct_inner(a: Octonion, b: Octonion) -> f64 {
    a.inner(b)
}

pub fn oct_conj(a: Octonion) -> Octonion {
    a.conj()
}

/// `‖a ∧ b‖² = ‖a‖²‖b‖² - ⟨a, b⟩²`.
pub fn wedge_norm_sq(a: Octonion, b: Octonion) -> f64 {
    a.norm_sq() * b.norm_sq() - a.inner(b).powi(2)
}

fn dot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn check_orthonormal(u: &[f64], v: &[f64]) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::InvalidArgument(format!(
            "vectors have lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    let checks = [
        ("‖u‖ = 1", dot(u, u) - 1.0),
        ("‖v‖ = 1", dot(v, v) - 1.0),
        ("⟨u, v⟩ = 0", dot(u, v)),
    ];
    for (name, err) in checks {
        if !err.is_finite() || err.abs() > TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "spanning vectors violate {name} (off by {err:e})"
            )));
        }
    }
    Ok(())
}

/// Orthonormal pair `u = (a, b)`, `v = (c, d)` in `O² = R^16` spanning a
/// 2-plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentPlanePair {
    pub u: (Octonion, Octonion),
    pub v: (Octonion, Octonion),
}

impl TangentPlanePair {
    pub fn new(u: (Octonion, Octonion), v: (Octonion, Octonion)) -> Result<Self> {
        let pair = Self { u, v };
        check_orthonormal(&pair.u_flat(), &pair.v_flat())?;
        Ok(pair)
    }

    /// Sixteen coordinates each: the first eight are the first octonion.
    pub fn from_flat(u: &[f64], v: &[f64]) -> Result<Self> {
        if u.len() != 16 || v.len() != 16 {
            return Err(Error::InvalidArgument(format!(
                "O² vectors need 16 coordinates, got {} and {}",
                u.len(),
                v.len()
            )));
        }
        Self::new(
            (
                Octonion::from_slice(&u[..8])?,
                Octonion::from_slice(&u[8..])?,
            ),
            (
                Octonion::from_slice(&v[..8])?,
                Octonion::from_slice(&v[8..])?,
            ),
        )
    }

    pub fn u_flat(&self) -> [f64; 16] {
        flatten(self.u)
    }

    pub fn v_flat(&self) -> [f64; 16] {
        flatten(self.v)
    }
}

fn flatten((a, b): (Octonion, Octonion)) -> [f64; 16] {
    std::array::from_fn(|i| if i < 8 { a.0[i] } else { b.0[i - 8] })
}

/// Sectional curvature of `OP²` at the plane spanned by `(a, b)`, `(c, d)`:
///
/// `K = 4[‖a∧c‖² + ‖b∧d‖² + ¼‖a‖²‖d‖² + ¼‖b‖²‖c‖² + ½⟨ab̄, cd̄⟩ - ⟨ad̄, cb̄⟩]`.
///
/// The cross terms carry conjugates on the second factors; without them the
/// expression is not a function of the plane under this multiplication table.
pub fn sectional_curvature_op2(plane: &TangentPlanePair) -> f64 {
    let (a, b) = plane.u;
    let (c, d) = plane.v;
    4.0 * (wedge_norm_sq(a, c)
        + wedge_norm_sq(b, d)
        + 0.25 * a.norm_sq() * d.norm_sq()
        + 0.25 * b.norm_sq() * c.norm_sq()
        + 0.5 * (a * b.conj()).inner(c * d.conj())
        - (a * d.conj()).inner(c * b.conj()))
}

/// Complex structure on `R^{2n}` with coordinates `(x_1, y_1, …, x_n, y_n)`
/// and `J(x, y) = (-y, x)` on each pair.
fn apply_j(w: &[f64]) -> Vec<f64> {
    w.chunks(2).flat_map(|p| [-p[1], p[0]]).collect()
}

fn check_even(v: &[f64], chunk: usize, what: &str) -> Result<()> {
    if v.is_empty() || !v.len().is_multiple_of(chunk) {
        return Err(Error::InvalidArgument(format!(
            "{what} vectors need a positive multiple of {chunk} coordinates, got {}",
            v.len()
        )));
    }
    Ok(())
}

/// Kähler angle `φ ∈ [0, π/2]` of the plane spanned by orthonormal `v, w`:
/// `cos²φ = ⟨v, Jw⟩²`.
pub fn kaehler_angle(v: &[f64], w: &[f64]) -> Result<f64> {
    Ok(cos_sq_kaehler(v, w)?.sqrt().acos().clamp(0.0, FRAC_PI_2))
}

fn cos_sq_kaehler(v: &[f64], w: &[f64]) -> Result<f64> {
    check_even(v, 2, "C^n")?;
    check_orthonormal(v, w)?;
    Ok(dot(v, &apply_j(w)).powi(2).clamp(0.0, 1.0))
}

/// `R(X,Y,Y,X)` for a curvature tensor of the form
/// `⟨Y,Z⟩X - ⟨X,Z⟩Y + Σ_J (⟨JY,Z⟩JX - ⟨JX,Z⟩JY + 2⟨X,JY⟩JZ)` with `⟨X, Y⟩ = 0`.
fn constant_holomorphic_curvature(x: &[f64], y: &[f64], structures: &[Vec<f64>]) -> f64 {
    // structures[i] = J_i y for each complex structure J_i.
    let base = dot(x, x) * dot(y, y) - dot(x, y).powi(2);
    base + structures
        .iter()
        .map(|jy| 3.0 * dot(x, jy).powi(2))
        .sum::<f64>()
}

/// Sectional curvature of `CP^n` (Fubini–Study, holomorphic curvature 4) at
/// the plane spanned by orthonormal `v, w`, from the curvature tensor.
pub fn sectional_curvature_cpn(v: &[f64], w: &[f64]) -> Result<f64> {
    check_even(v, 2, "C^n")?;
    check_orthonormal(v, w)?;
    Ok(constant_holomorphic_curvature(v, w, &[apply_j(w)]))
}

/// Right multiplication of each quaternionic coordinate by the unit `unit`
/// (1 = i, 2 = j, 3 = k).
fn right_mul_unit(u: &[f64], unit: usize) -> Vec<f64> {
    let mut q = [0.0; 4];
    q[unit] = 1.0;
    u.chunks(4)
        .flat_map(|c| (Quaternion([c[0], c[1], c[2], c[3]]) * Quaternion(q)).0)
        .collect()
}

/// `⟨u1, u2⟩_H = Σ ū1_k u2_k`, the hermitian product of `H^n` viewed as a
/// right `H`-module.
pub fn quaternionic_hermitian_product(u1: &[f64], u2: &[f64]) -> Result<[f64; 4]> {
    check_even(u1, 4, "H^n")?;
    if u1.len() != u2.len() {
        return Err(Error::InvalidArgument(format!(
            "vectors have lengths {} and {}",
            u1.len(),
            u2.len()
        )));
    }
    let mut acc = Quaternion::default();
    for (p, q) in u1.chunks(4).zip(u2.chunks(4)) {
        let p = Quaternion([p[0], p[1], p[2], p[3]]);
        let q = Quaternion([q[0], q[1], q[2], q[3]]);
        acc = acc + p.conj() * q;
    }
    Ok(acc.0)
}

/// Norm `λ` of the (pure) quaternion `⟨u1, u2⟩_H` for orthonormal `u1, u2`.
pub fn quaternionic_lambda(u1: &[f64], u2: &[f64]) -> Result<f64> {
    check_even(u1, 4, "H^n")?;
    check_orthonormal(u1, u2)?;
    let h = quaternionic_hermitian_product(u1, u2)?;
    Ok((h[1] * h[1] + h[2] * h[2] + h[3] * h[3]).sqrt())
}

/// Sectional curvature of `HP^n` (quaternionic curvature 4), from the
/// curvature tensor built on the three right multiplications by `i, j, k`.
pub fn sectional_curvature_hpn(u1: &[f64], u2: &[f64]) -> Result<f64> {
    check_even(u1, 4, "H^n")?;
    check_orthonormal(u1, u2)?;
    let structures: Vec<Vec<f64>> = (1..=3).map(|unit| right_mul_unit(u2, unit)).collect();
    Ok(constant_holomorphic_curvature(u1, u2, &structures))
}

/// A 2-plane in the tangent space of one of the three projective spaces.
#[derive(Clone, Debug, PartialEq)]
pub enum Plane {
    /// Orthonormal `v, w` in `C^n = R^{2n}`.
    Complex {
        v: Vec<f64>,
        w: Vec<f64>,
    },
    /// Orthonormal `u1, u2` in `H^n = R^{4n}`.
    Quaternionic {
        u1: Vec<f64>,
        u2: Vec<f64>,
    },
    Octonionic(TangentPlanePair),
}

/// One basis valuation in a Klain-function identity.
#[derive(Clone, Debug, PartialEq)]
pub struct KlainTerm {
    pub valuation: &'static str,
    pub coefficient: f64,
    pub klain_value: f64,
}

/// Both sides of `Kl(curvature valuation)(E) = Σ c_i Kl(μ_i)(E)`.
#[derive(Clone, Debug, PartialEq)]
pub struct KlainCheck {
    pub space: &'static str,
    pub curvature: f64,
    pub terms: Vec<KlainTerm>,
    pub combination: f64,
    pub residual: f64,
    pub passed: bool,
}

impl KlainCheck {
    fn new(space: &'static str, curvature: f64, terms: Vec<KlainTerm>) -> Self {
        let combination: f64 = terms.iter().map(|t| t.coefficient * t.klain_value).sum();
        let residual = (curvature - combination).abs();
        Self {
            space,
            curvature,
            terms,
            combination,
            residual,
            passed: residual <= TOLERANCE,
        }
    }
}

/// The two planes at which the octonionic pseudo-volume's Klain function is
/// tabulated: `E_{(1,0),(e1,0)}` (value 0) and `E_{(1,0),(0,1)}` (value 1).
pub fn op2_reference_planes() -> [(TangentPlanePair, f64); 2] {
    let z = Octonion::ZERO;
    [
        (
            TangentPlanePair {
                u: (Octonion::ONE, z),
                v: (Octonion::basis(1), z),
            },
            0.0,
        ),
        (
            TangentPlanePair {
                u: (Octonion::ONE, z),
                v: (z, Octonion::ONE),
            },
            1.0,
        ),
    ]
}

/// Plücker coordinates of `u ∧ v`.
fn bivector(u: &[f64], v: &[f64]) -> Vec<f64> {
    let n = u.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(u[i] * v[j] - u[j] * v[i]);
        }
    }
    out
}

fn same_plane(p: &TangentPlanePair, q: &TangentPlanePair) -> bool {
    let a = bivector(&p.u_flat(), &p.v_flat());
    let b = bivector(&q.u_flat(), &q.v_flat());
    let close = |s: f64| a.iter().zip(&b).all(|(x, y)| (x - s * y).abs() <= 1e-7);
    close(1.0) || close(-1.0)
}

/// Evaluates both sides of the Klain-function identity for the sectional
/// curvature valuation at `plane`:
/// - `CP^n`: `τ_{2,0} + 3τ_{2,1}` with `Kl = 1` and `cos²φ`;
/// - `HP^n`: `μ_2 + 3τ` with `Kl = 1` and `λ²`;
/// - `OP²`: `4μ_2 - 3τ_oct`, only at the two reference planes.
pub fn klain_identity_check(plane: &Plane) -> Result<KlainCheck> {
    match plane {
        Plane::Complex { v, w } => {
            let curvature = sectional_curvature_cpn(v, w)?;
            let cos_sq = cos_sq_kaehler(v, w)?;
            Ok(KlainCheck::new(
                "cpn",
                curvature,
                vec![
                    KlainTerm {
                        valuation: "tau_2_0",
                        coefficient: 1.0,
                        klain_value: 1.0,
                    },
                    KlainTerm {
                        valuation: "tau_2_1",
                        coefficient: 3.0,
                        klain_value: cos_sq,
                    },
                ],
            ))
        }
        Plane::Quaternionic { u1, u2 } => {
            let curvature = sectional_curvature_hpn(u1, u2)?;
            let lambda = quaternionic_lambda(u1, u2)?;
            Ok(KlainCheck::new(
                "hpn",
                curvature,
                vec![
                    KlainTerm {
                        valuation: "mu_2",
                        coefficient: 1.0,
                        klain_value: 1.0,
                    },
                    KlainTerm {
                        valuation: "tau",
                        coefficient: 3.0,
                        klain_value: lambda * lambda,
                    },
                ],
            ))
        }
        Plane::Octonionic(pair) => {
            let tau_oct = op2_reference_planes()
                .into_iter()
                .find(|(reference, _)| same_plane(pair, reference))
                .map(|(_, value)| value)
                .ok_or_else(|| {
                    Error::UnsupportedPlane(
                        "the octonionic pseudo-volume is tabulated only at E_(1,0),(e1,0) and E_(1,0),(0,1)".into(),
                    )
                })?;
            Ok(KlainCheck::new(
                "op2",
                sectional_curvature_op2(pair),
                vec![
                    KlainTerm {
                        valuation: "mu_2",
                        coefficient: 4.0,
                        klain_value: 1.0,
                    },
                    KlainTerm {
                        valuation: "tau_oct",
                        coefficient: -3.0,
                        klain_value: tau_oct,
                    },
                ],
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= TOLERANCE
    }

    /// Full multiplication table of the Cayley–Dickson convention:
    /// `TABLE[i][j] = (sign, index)` with `e_i e_j = sign · e_index`.
    const TABLE: [[(i8, usize); 8]; 8] = [
        [
            (1, 0),
            (1, 1),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (1, 7),
        ],
        [
            (1, 1),
            (-1, 0),
            (1, 3),
            (-1, 2),
            (1, 5),
            (-1, 4),
            (-1, 7),
            (1, 6),
        ],
        [
            (1, 2),
            (-1, 3),
            (-1, 0),
            (1, 1),
            (1, 6),
            (1, 7),
            (-1, 4),
            (-1, 5),
        ],
        [
            (1, 3),
            (1, 2),
            (-1, 1),
            (-1, 0),
            (1, 7),
            (-1, 6),
            (1, 5),
            (-1, 4),
        ],
        [
            (1, 4),
            (-1, 5),
            (-1, 6),
            (-1, 7),
            (-1, 0),
            (1, 1),
            (1, 2),
            (1, 3),
        ],
        [
            (1, 5),
            (1, 4),
            (-1, 7),
            (1, 6),
            (-1, 1),
            (-1, 0),
            (-1, 3),
            (1, 2),
        ],
        [
            (1, 6),
            (1, 7),
            (1, 4),
            (-1, 5),
            (-1, 2),
            (1, 3),
            (-1, 0),
            (-1, 1),
        ],
        [
            (1, 7),
            (-1, 6),
            (1, 5),
            (1, 4),
            (-1, 3),
            (-1, 2),
            (1, 1),
            (-1, 0),
        ],
    ];

    #[test]
    fn multiplication_table_is_pinned() {
        for i in 0..8 {
            for j in 0..8 {
                let (s, k) = TABLE[i][j];
                assert_eq!(e(i) * e(j), e(k).scale(s as f64), "e{i} e{j}");
            }
        }
    }

    #[test]
    fn unit_and_imaginary_squares() {
        let a = Octonion([0.3, -1.0, 2.0, 0.5, 0.0, 1.5, -0.25, 4.0]);
        assert_eq!(oct_mul(Octonion::ONE, a), a);
        assert_eq!(oct_mul(a, Octonion::ONE), a);
        for i in 1..8 {
            assert_eq!(e(i) * e(i), -Octonion::ONE);
        }
    }

    #[test]
    fn non_associative_witness() {
        let mut witnesses = 0;
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    if Octonion::associator(e(i), e(j), e(k)) != Octonion::ZERO {
                        witnesses += 1;
                    }
                }
            }
        }
        assert!(witnesses > 0);
        assert_ne!(Octonion::associator(e(1), e(2), e(4)), Octonion::ZERO);
    }

    #[test]
    fn conjugation_and_wedge() {
        let a = Octonion([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        assert_eq!(
            oct_conj(a),
            Octonion([1.0, -2.0, -3.0, -4.0, -5.0, -6.0, -7.0, -8.0])
        );
        assert!(close((a * a.conj()).real(), a.norm_sq()));
        assert!(close(wedge_norm_sq(a, a), 0.0));
        assert!(close(wedge_norm_sq(Octonion::ONE, e(1)), 1.0));
        assert!(close(oct_inner(e(3), e(3)), 1.0));
    }

    #[test]
    fn reference_curvatures() {
        let [(line, _), (mixed, _)] = op2_reference_planes();
        assert!(close(sectional_curvature_op2(&line), 4.0));
        assert!(close(sectional_curvature_op2(&mixed), 1.0));
    }

    #[test]
    fn non_orthonormal_planes_are_rejected() {
        let z = Octonion::ZERO;
        let err = TangentPlanePair::new((Octonion::ONE, z), (Octonion::ONE, z)).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(ref m) if m.contains("⟨u, v⟩")));
        let err = TangentPlanePair::new((Octonion::ONE.scale(2.0), z), (e(1), z)).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(ref m) if m.contains("‖u‖")));
        assert!(TangentPlanePair::from_flat(&[1.0; 15], &[0.0; 16]).is_err());
    }

    #[test]
    fn complex_examples() {
        // w = i v: complex line.
        let v = [1.0, 0.0, 0.0, 0.0];
        let w = [0.0, 1.0, 0.0, 0.0];
        assert!(close(sectional_curvature_cpn(&v, &w).unwrap(), 4.0));
        assert!(close(kaehler_angle(&v, &w).unwrap(), 0.0));
        // totally real plane.
        let w = [0.0, 0.0, 1.0, 0.0];
        assert!(close(sectional_curvature_cpn(&v, &w).unwrap(), 1.0));
        assert!(close(kaehler_angle(&v, &w).unwrap(), FRAC_PI_2));
        assert!(sectional_curvature_cpn(&v, &v).is_err());
        assert!(sectional_curvature_cpn(&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn quaternionic_examples() {
        // u2 = u1 · j.
        let u1 = [0.6, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0];
        let u2 = right_mul_unit(&u1, 2);
        assert!(close(quaternionic_lambda(&u1, &u2).unwrap(), 1.0));
        assert!(close(sectional_curvature_hpn(&u1, &u2).unwrap(), 4.0));
        let u2 = [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0];
        let u1 = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        assert!(close(quaternionic_lambda(&u1, &u2).unwrap(), 0.0));
        assert!(close(sectional_curvature_hpn(&u1, &u2).unwrap(), 1.0));
    }

    #[test]
    fn op2_check_only_at_reference_planes() {
        for (pair, _) in op2_reference_planes() {
            let report = klain_identity_check(&Plane::Octonionic(pair)).unwrap();
            assert!(report.passed, "{report:?}");
        }
        let z = Octonion::ZERO;
        let other = TangentPlanePair::new((Octonion::ONE, z), (z, e(1))).unwrap();
        assert!(matches!(
            klain_identity_check(&Plane::Octonionic(other)),
            Err(Error::UnsupportedPlane(_))
        ));
        // the same plane with a rotated, sign-flipped basis is recognized
        let (c, s) = (0.6, 0.8);
        let rotated = TangentPlanePair::new(
            (Octonion::ONE.scale(c) + e(1).scale(s), z),
            (Octonion::ONE.scale(s) - e(1).scale(c), z),
        )
        .unwrap();
        let report = klain_identity_check(&Plane::Octonionic(rotated)).unwrap();
        assert!(close(report.combination, 4.0));
    }
}
