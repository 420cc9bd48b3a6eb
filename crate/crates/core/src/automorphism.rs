//! Concrete ambient automorphisms `x ↦ q⁻¹xq` / `x ↦ q⁻¹xᵗq` and the θ embedding.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{AmbientKind, Subalgebra};
use crate::matrix::{ExactMatrix, Subspace};
use crate::scalar::GaussianRational as Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutomorphismKind {
    Conjugation,
    ConjugationWithTranspose,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AutomorphismWire")]
pub struct AmbientAutomorphism {
    pub ambient: AmbientKind,
    pub kind: AutomorphismKind,
    pub q: ExactMatrix,
}

#[derive(Deserialize)]
struct AutomorphismWire {
    ambient: AmbientKind,
    kind: AutomorphismKind,
    q: ExactMatrix,
}

impl TryFrom<AutomorphismWire> for AmbientAutomorphism {
    type Error = Error;
    fn try_from(w: AutomorphismWire) -> Result<Self> {
        AmbientAutomorphism::new(w.ambient, w.kind, w.q)
    }
}

impl AmbientAutomorphism {
    /// Checks that `q` is invertible, satisfies the ambient's structure
    /// equation up to a scalar, and that the action maps the ambient basis
    /// into the ambient.
    pub fn new(ambient: AmbientKind, kind: AutomorphismKind, q: ExactMatrix) -> Result<Self> {
        let n = ambient.order();
        if q.shape() != (n, n) {
            return Err(Error::Shape(format!("q must have order {n}")));
        }
        q.inverse()?;
        let structural = match ambient {
            AmbientKind::FullPlus(_) => true,
            AmbientKind::SymmetricH(_) => is_scalar_matrix(&(&q.transpose() * &q)),
            AmbientKind::SymplecticH(_) => {
                let j = ExactMatrix::symplectic_form(n / 2);
                let qjq = &(&q * &j) * &q.transpose();
                let alpha = &qjq[(0, n / 2)];
                !alpha.is_zero() && qjq == j.scale(alpha)
            }
        };
        if !structural || (kind == AutomorphismKind::ConjugationWithTranspose && !matches!(ambient, AmbientKind::FullPlus(_))) {
            return Err(Error::AmbientMismatch);
        }
        let phi = Self { ambient, kind, q };
        let qi = phi.q.inverse()?;
        for b in ambient.basis() {
            if !ambient.contains(&phi.act(&qi, &b)) {
                return Err(Error::AmbientMismatch);
            }
        }
        Ok(phi)
    }

    pub fn identity(ambient: AmbientKind) -> Self {
        Self {
            ambient,
            kind: AutomorphismKind::Conjugation,
            q: ExactMatrix::identity(ambient.order()),
        }
    }

    fn act(&self, q_inv: &ExactMatrix, x: &ExactMatrix) -> ExactMatrix {
        let y = match self.kind {
            AutomorphismKind::Conjugation => q_inv * x,
            AutomorphismKind::ConjugationWithTranspose => q_inv * &x.transpose(),
        };
        &y * &self.q
    }

    pub fn apply(&self, x: &ExactMatrix) -> Result<ExactMatrix> {
        if !self.ambient.contains(x) {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.act(&self.q.inverse()?, x))
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if self.ambient != first.ambient {
            return Err(Error::AmbientMismatch);
        }
        // x ↦ q2⁻¹ (q1⁻¹ x q1)^τ q2; a transpose on the outer map flips the inner one.
        use AutomorphismKind::*;
        let (kind, q) = match (first.kind, self.kind) {
            (Conjugation, Conjugation) => (Conjugation, &first.q * &self.q),
            (ConjugationWithTranspose, Conjugation) => (ConjugationWithTranspose, &first.q * &self.q),
            (Conjugation, ConjugationWithTranspose) => (
                ConjugationWithTranspose,
                &first.q.inverse()?.transpose() * &self.q,
            ),
            (ConjugationWithTranspose, ConjugationWithTranspose) => {
                (Conjugation, &first.q.inverse()?.transpose() * &self.q)
            }
        };
        Self::new(self.ambient, kind, q)
    }
}

fn is_scalar_matrix(m: &ExactMatrix) -> bool {
    let c = &m[(0, 0)];
    !c.is_zero() && *m == ExactMatrix::scalar(m.rows(), c)
}

pub fn apply_automorphism(phi: &AmbientAutomorphism, s: &Subalgebra) -> Result<Subalgebra> {
    if phi.ambient != s.ambient {
        return Err(Error::AmbientMismatch);
    }
    let qi = phi.q.inverse()?;
    let n = s.order();
    let mut span = Subspace::new(n, n);
    for b in s.basis() {
        span.insert(&phi.act(&qi, &b))?;
    }
    Ok(Subalgebra {
        ambient: s.ambient,
        span,
    })
}

/// `[[A, B],[−B, A]]` for symmetric `A` and skew `B`.
pub fn theta_embed(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if !a.is_square() || a.shape() != b.shape() {
        return Err(Error::Shape("theta needs two square blocks of one order".into()));
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !b.is_skew() {
        return Err(Error::NotSkew);
    }
    ExactMatrix::from_blocks(a, b, &(-b), a)
}

/// θ of `X = A + iB` with `A = (X+Xᵗ)/2` and `iB = (X−Xᵗ)/2`.
pub fn theta_of(x: &ExactMatrix) -> Result<ExactMatrix> {
    let (a, b) = theta_parts(x)?;
    theta_embed(&a, &b)
}

/// `(A, B)` with `X = A + iB`, `A` symmetric, `B` skew.
pub fn theta_parts(x: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    if !x.is_square() {
        return Err(Error::Shape("theta needs a square matrix".into()));
    }
    let xt = x.transpose();
    let a = (x + &xt).scale(&Q::half());
    let b = (x - &xt).scale(&(Q::half() * Q::gaussian(0, -1)));
    Ok((a, b))
}

/// `S = [[I, iI],[½I, −(i/2)I]]` of order `2·half_n`; `S⁻¹ diag(X, Xᵗ) S = θ(Xᵗ)`.
pub fn theta_conjugator(half_n: usize) -> ExactMatrix {
    let i = ExactMatrix::identity(half_n);
    ExactMatrix::from_blocks(
        &i,
        &i.scale(&Q::i()),
        &i.scale(&Q::half()),
        &i.scale(&(Q::gaussian(0, -1) * Q::half())),
    )
    .expect("square blocks")
}

/// `q = diag(c, (c⁻¹)ᵗ)` acting on the symplectic ambient of order `2n`.
pub fn extend_to_symplectic(c: &ExactMatrix) -> Result<AmbientAutomorphism> {
    let ci = c.inverse()?;
    let q = ExactMatrix::block_diag(&[c, &ci.transpose()]);
    AmbientAutomorphism::new(
        AmbientKind::SymplecticH(2 * c.rows()),
        AutomorphismKind::Conjugation,
        q,
    )
}

pub fn transpose_automorphism(ambient: AmbientKind) -> Result<AmbientAutomorphism> {
    match ambient {
        AmbientKind::FullPlus(n) => Ok(AmbientAutomorphism {
            ambient,
            kind: AutomorphismKind::ConjugationWithTranspose,
            q: ExactMatrix::identity(n),
        }),
        _ => Err(Error::UnsupportedAmbient(ambient.to_string())),
    }
}

/// Permutation matrix with `P e_{perm[i]} = e_i`, so conjugation moves row/column `perm[i]` to `i`.
pub fn permutation_matrix(perm: &[usize]) -> ExactMatrix {
    let n = perm.len();
    let mut p = ExactMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(j, i)] = Q::one();
    }
    p
}

/// Row/column permutation of the ambient; on the symplectic ambient it permutes both halves alike.
pub fn permutation_automorphism(ambient: AmbientKind, perm: &[usize]) -> Result<AmbientAutomorphism> {
    let p = permutation_matrix(perm);
    match ambient {
        AmbientKind::SymplecticH(n) if perm.len() == n / 2 => extend_to_symplectic(&p),
        AmbientKind::SymplecticH(_) => Err(Error::Shape("permutation must act on one half".into())),
        _ => AmbientAutomorphism::new(ambient, AutomorphismKind::Conjugation, p),
    }
}

/// Symplectic rotation exchanging `e_i` and `e_{h+i}` (with a sign) for each listed `i`.
pub fn symplectic_swap(order: usize, coords: &[usize]) -> Result<AmbientAutomorphism> {
    let h = order / 2;
    let mut q = ExactMatrix::identity(order);
    for &i in coords {
        if i >= h {
            return Err(Error::Shape(format!("coordinate {i} outside the first half")));
        }
        q[(i, i)] = Q::zero();
        q[(h + i, h + i)] = Q::zero();
        q[(i, h + i)] = Q::one();
        q[(h + i, i)] = Q::from_int(-1);
    }
    AmbientAutomorphism::new(AmbientKind::SymplecticH(order), AutomorphismKind::Conjugation, q)
}

const ATTEMPTS: usize = 32;

fn small(rng: &mut ChaCha8Rng) -> i64 {
    *[-2i64, -1, -1, 1, 1, 2].choose(rng).expect("nonempty")
}

/// `(I − K)(I + K)⁻¹`, or `None` when `I + K` is singular.
fn cayley(k: &ExactMatrix) -> Option<ExactMatrix> {
    let id = ExactMatrix::identity(k.rows());
    let inv = (&id + k).inverse().ok()?;
    Some(&(&id - k) * &inv)
}

/// Signed permutation times `n` rotations by Pythagorean angles in random
/// coordinate planes; exactly orthogonal with small entries.
fn givens_product(n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    const TRIPLES: [(i64, i64, i64); 3] = [(3, 4, 5), (5, 12, 13), (8, 15, 17)];
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut q = permutation_matrix(&perm);
    for i in 0..n {
        if rng.gen_bool(0.5) {
            q[(perm[i], i)] = Q::from_int(-1);
        }
    }
    if n < 2 {
        return q;
    }
    for _ in 0..n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let (a, b, c) = *TRIPLES.choose(rng).expect("nonempty");
        let mut g = ExactMatrix::identity(n);
        g[(i, i)] = Q::from_ratio(a, c);
        g[(j, j)] = Q::from_ratio(a, c);
        g[(i, j)] = Q::from_ratio(b, c);
        g[(j, i)] = Q::from_ratio(-b, c);
        q = &q * &g;
    }
    q
}

/// Deterministic in `seed`. Orthogonal (SymmetricH) maps are signed
/// permutations times Pythagorean rotations; symplectic (SymplecticH) maps are
/// Cayley transforms of sparse small-integer Hamiltonian matrices; FullPlus
/// uses a permuted unimodular `LU` product and a coin flip for composing with
/// transpose.
pub fn random_exact_automorphism(ambient: AmbientKind, seed: u64) -> Result<AmbientAutomorphism> {
    ambient.validate()?;
    let n = ambient.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = 1.5 / n.max(2) as f64;
    for _ in 0..ATTEMPTS {
        let candidate = match ambient {
            AmbientKind::FullPlus(_) => {
                let mut l = ExactMatrix::identity(n);
                let mut u = ExactMatrix::identity(n);
                for i in 0..n {
                    for j in 0..i {
                        if rng.gen_bool(density) {
                            l[(i, j)] = Q::from_int(small(&mut rng));
                        }
                        if rng.gen_bool(density) {
                            u[(j, i)] = Q::from_int(small(&mut rng));
                        }
                    }
                }
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let q = &(&permutation_matrix(&perm) * &l) * &u;
                let kind = if rng.gen_bool(0.5) {
                    AutomorphismKind::ConjugationWithTranspose
                } else {
                    AutomorphismKind::Conjugation
                };
                Some((kind, q))
            }
            AmbientKind::SymmetricH(_) => Some((AutomorphismKind::Conjugation, givens_product(n, &mut rng))),
            AmbientKind::SymplecticH(_) => {
                let mut s = ExactMatrix::zeros(n, n);
                for i in 0..n {
                    for j in i..n {
                        if rng.gen_bool(density) {
                            let v = Q::from_int(small(&mut rng));
                            s[(j, i)] = v.clone();
                            s[(i, j)] = v;
                        }
                    }
                }
                // H = J S has J H = −S symmetric.
                let h = &ExactMatrix::symplectic_form(n / 2) * &s;
                cayley(&h).map(|q| (AutomorphismKind::Conjugation, q))
            }
        };
        if let Some((kind, q)) = candidate {
            if q.inverse().is_ok() {
                return AmbientAutomorphism::new(ambient, kind, q);
            }
        }
    }
    Err(Error::DegenerateSeed)
}
