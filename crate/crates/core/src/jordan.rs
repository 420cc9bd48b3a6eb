//! Jordan product, ambient algebras, subalgebras and their structure.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, RelationFinder, Subspace};
use crate::scalar::GaussianRational as Q;

/// A bilinear product on square matrices. The checks in this module accept
/// one so that a deliberately wrong product can be substituted in tests.
pub type ProductFn = fn(&ExactMatrix, &ExactMatrix) -> Result<ExactMatrix>;

/// `x∘y = (xy + yx)/2`.
pub fn jordan_product(x: &ExactMatrix, y: &ExactMatrix) -> Result<ExactMatrix> {
    if !x.is_square() || x.shape() != y.shape() {
        return Err(Error::Shape(format!(
            "jordan product of {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    let s = x.mat_mul(y)?.try_add(&y.mat_mul(x)?)?;
    Ok(s.scale(&Q::half()))
}

/// The simple special Jordan algebras used as ambients. The number is the matrix order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AmbientKind {
    /// All n×n matrices under `∘`.
    FullPlus(usize),
    /// Symmetric n×n matrices.
    SymmetricH(usize),
    /// Matrices of even order fixed by the symplectic involution.
    SymplecticH(usize),
}

impl AmbientKind {
    pub fn order(self) -> usize {
        match self {
            Self::FullPlus(n) | Self::SymmetricH(n) | Self::SymplecticH(n) => n,
        }
    }

    /// Jordan degree: the order, or half of it for the symplectic ambient.
    pub fn degree(self) -> usize {
        match self {
            Self::SymplecticH(n) => n / 2,
            other => other.order(),
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Self::FullPlus(n) => n * n,
            Self::SymmetricH(n) => n * (n + 1) / 2,
            Self::SymplecticH(n) => {
                let h = n / 2;
                2 * h * h - h
            }
        }
    }

    pub fn validate(self) -> Result<()> {
        let ok = match self {
            Self::FullPlus(n) | Self::SymmetricH(n) => n >= 1,
            Self::SymplecticH(n) => n >= 2 && n % 2 == 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parse {
                what: "ambient",
                input: self.to_string(),
            })
        }
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            Self::FullPlus(_) => "full",
            Self::SymmetricH(_) => "sym",
            Self::SymplecticH(_) => "symp",
        }
    }

    pub fn from_parts(kind: &str, n: usize) -> Result<Self> {
        let a = match kind {
            "full" => Self::FullPlus(n),
            "sym" => Self::SymmetricH(n),
            "symp" => Self::SymplecticH(n),
            _ => {
                return Err(Error::Parse {
                    what: "ambient kind",
                    input: kind.to_string(),
                })
            }
        };
        a.validate()?;
        Ok(a)
    }

    pub fn contains(self, x: &ExactMatrix) -> bool {
        let n = self.order();
        if x.shape() != (n, n) {
            return false;
        }
        match self {
            Self::FullPlus(_) => true,
            Self::SymmetricH(_) => x.is_symmetric(),
            Self::SymplecticH(_) => x.symplectic_transpose().is_ok_and(|j| &j == x),
        }
    }

    /// A basis of the whole ambient.
    pub fn basis(self) -> Vec<ExactMatrix> {
        let n = self.order();
        let mut out = Vec::new();
        match self {
            Self::FullPlus(_) => {
                for i in 0..n {
                    for j in 0..n {
                        out.push(ExactMatrix::unit(n, n, i, j));
                    }
                }
            }
            Self::SymmetricH(_) => {
                for i in 0..n {
                    for j in i..n {
                        out.push(sym_unit(n, i, j));
                    }
                }
            }
            Self::SymplecticH(_) => {
                let h = n / 2;
                for i in 0..h {
                    for j in 0..h {
                        let mut m = ExactMatrix::unit(n, n, i, j);
                        m[(h + j, h + i)] = Q::one();
                        out.push(m);
                    }
                }
                for (r0, c0) in [(0, h), (h, 0)] {
                    for i in 0..h {
                        for j in i + 1..h {
                            let mut m = ExactMatrix::zeros(n, n);
                            m[(r0 + i, c0 + j)] = Q::one();
                            m[(r0 + j, c0 + i)] = Q::from_int(-1);
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn full_subalgebra(self) -> Subalgebra {
        let n = self.order();
        let span = Subspace::from_generators(n, n, &self.basis()).expect("ambient shapes");
        Subalgebra {
            ambient: self,
            span,
        }
    }
}

/// `E_ij + E_ji` (or `E_ii`).
pub(crate) fn sym_unit(n: usize, i: usize, j: usize) -> ExactMatrix {
    let mut m = ExactMatrix::unit(n, n, i, j);
    m[(j, i)] = Q::one();
    m
}

/// `E_ij − E_ji`, `i ≠ j`.
pub(crate) fn skew_unit(n: usize, i: usize, j: usize) -> ExactMatrix {
    let mut m = ExactMatrix::unit(n, n, i, j);
    m[(j, i)] = Q::from_int(-1);
    m
}

impl fmt::Display for AmbientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FullPlus(n) => write!(f, "FullPlus({n})"),
            Self::SymmetricH(n) => write!(f, "SymmetricH({n})"),
            Self::SymplecticH(n) => write!(f, "SymplecticH({n})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AmbientWire {
    kind: String,
    n: usize,
}

impl Serialize for AmbientKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AmbientWire {
            kind: self.kind_name().into(),
            n: self.order(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AmbientKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = AmbientWire::deserialize(d)?;
        AmbientKind::from_parts(&w.kind, w.n).map_err(serde::de::Error::custom)
    }
}

/// Isomorphism type of a simple subalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    /// `F_m^(+)`.
    FullPlus(usize),
    /// `H(F_m)`.
    SymmetricH(usize),
    /// `H(F_{2m}, j)`; the field is `m`, the matrix order is `2m`.
    SymplecticH(usize),
    /// `J(f,1)` with `dim V = d`.
    Spin(usize),
}

impl TypeLabel {
    /// `m` for matrix types, `d` for spin.
    pub fn param(self) -> usize {
        match self {
            Self::FullPlus(m) | Self::SymmetricH(m) | Self::SymplecticH(m) | Self::Spin(m) => m,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Self::FullPlus(m) => m * m,
            Self::SymmetricH(m) => m * (m + 1) / 2,
            Self::SymplecticH(m) => 2 * m * m - m,
            Self::Spin(d) => d + 1,
        }
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            Self::FullPlus(_) => "full",
            Self::SymmetricH(_) => "sym",
            Self::SymplecticH(_) => "symp",
            Self::Spin(_) => "spin",
        }
    }

    pub fn from_parts(kind: &str, m: usize) -> Result<Self> {
        Ok(match kind {
            "full" => Self::FullPlus(m),
            "sym" => Self::SymmetricH(m),
            "symp" => Self::SymplecticH(m),
            "spin" => Self::Spin(m),
            _ => {
                return Err(Error::Parse {
                    what: "type",
                    input: kind.to_string(),
                })
            }
        })
    }

    pub fn is_spin(self) -> bool {
        matches!(self, Self::Spin(_))
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FullPlus(m) => write!(f, "FullPlus({m})"),
            Self::SymmetricH(m) => write!(f, "SymmetricH({m})"),
            Self::SymplecticH(m) => write!(f, "SymplecticH({})", 2 * m),
            Self::Spin(d) => write!(f, "Spin({d})"),
        }
    }
}

/// A subspace of an ambient, closed under `∘` when built by this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    pub ambient: AmbientKind,
    pub span: Subspace,
}

impl Subalgebra {
    /// Span of `basis`; every element must lie in the ambient.
    pub fn from_basis(ambient: AmbientKind, basis: &[ExactMatrix]) -> Result<Self> {
        ambient.validate()?;
        if basis.iter().any(|b| !ambient.contains(b)) {
            return Err(Error::AmbientMismatch);
        }
        let n = ambient.order();
        Ok(Self {
            ambient,
            span: Subspace::from_generators(n, n, basis)?,
        })
    }

    pub fn basis(&self) -> Vec<ExactMatrix> {
        self.span.basis()
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn order(&self) -> usize {
        self.ambient.order()
    }
}

#[derive(Serialize, Deserialize)]
struct SubalgebraWire {
    ambient: AmbientKind,
    basis: Vec<ExactMatrix>,
}

impl Serialize for Subalgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubalgebraWire {
            ambient: self.ambient,
            basis: self.basis(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subalgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SubalgebraWire::deserialize(d)?;
        Subalgebra::from_basis(w.ambient, &w.basis).map_err(serde::de::Error::custom)
    }
}

pub fn closure_check(s: &Subalgebra) -> bool {
    closure_check_with(s, jordan_product)
}

/// Closure of the span under `product`, checked on all basis pairs.
pub fn closure_check_with(s: &Subalgebra, product: ProductFn) -> bool {
    let b = s.basis();
    for i in 0..b.len() {
        for j in i..b.len() {
            match product(&b[i], &b[j]).and_then(|p| s.span.contains(&p)) {
                Ok(true) => {}
                _ => return false,
            }
        }
    }
    true
}

/// Deterministic pseudo-generic combinations of `basis`; attempt `t` gives a fresh draw.
pub(crate) fn generic_combination(basis: &[ExactMatrix], t: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + t);
    let (r, c) = basis.first().map_or((0, 0), ExactMatrix::shape);
    let mut m = ExactMatrix::zeros(r, c);
    for b in basis {
        let k: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        m.add_scaled(&Q::from_int(k), b);
    }
    m
}

/// Closes `seed` under right multiplication by `gens`; the result is the
/// algebra generated by `gens` when `seed` spans them. The queue is
/// breadth-first and holds unreduced words, which keeps entries small.
/// Stops early once the dimension reaches `cap`, a known upper bound.
fn right_closure(n: usize, seed: &[ExactMatrix], gens: &[ExactMatrix], cap: usize) -> Subspace {
    let mut space = Subspace::new(n, n);
    let mut queue = VecDeque::new();
    for g in seed {
        if space.insert(g).expect("shape") {
            queue.push_back(g.clone());
        }
    }
    while let Some(w) = queue.pop_front() {
        for g in gens {
            if space.dim() >= cap {
                return space;
            }
            let next = w.mat_mul(g).expect("shape");
            if space.insert(&next).expect("shape") {
                queue.push_back(next);
            }
        }
    }
    space
}

/// The associative envelope together with a generating set for it.
#[derive(Debug, Clone)]
pub struct Envelope {
    pub space: Subspace,
    pub generators: Vec<ExactMatrix>,
}

/// Smallest associatively closed subspace containing the span.
pub fn associative_envelope(s: &Subalgebra) -> Subspace {
    envelope(s).space
}

pub fn envelope(s: &Subalgebra) -> Envelope {
    envelope_within(s, None)
}

/// [`envelope`] given the unit `e` of the span, which confines the envelope
/// to `e·M_n·e` of dimension `rk(e)²`. The span is closed under right
/// multiplication by its whole basis: words stay short, so entries stay
/// small, which beats closing under a few generic generators.
pub(crate) fn envelope_within(s: &Subalgebra, unit: Option<&ExactMatrix>) -> Envelope {
    let n = s.order();
    let cap = unit.map_or(n * n, |e| e.rank().pow(2));
    let basis = s.basis();
    Envelope {
        space: right_closure(n, &basis, &basis, cap),
        generators: basis,
    }
}

pub fn identity_idempotent(s: &Subalgebra) -> Result<ExactMatrix> {
    identity_idempotent_with(s, jordan_product)
}

/// The unit `e` of the span: `e∘b = b` for every basis element.
///
/// A generic element `x` satisfies `Σ_{k≥1} a_k x^k = 0` for its minimal
/// relation; when `a_1 ≠ 0` the unit is a polynomial in `x`. Candidates are
/// verified, and a direct linear solve decides the remaining cases.
pub fn identity_idempotent_with(s: &Subalgebra, product: ProductFn) -> Result<ExactMatrix> {
    let basis = s.basis();
    if basis.is_empty() {
        return Err(Error::NoIdentity);
    }
    let is_unit = |e: &ExactMatrix| -> Result<bool> {
        for b in &basis {
            if &product(e, b)? != b {
                return Ok(false);
            }
        }
        s.span.contains(e)
    };
    for t in 0..3 {
        let x = generic_combination(&basis, 100 + t);
        if let Some(e) = unit_from_powers(&x) {
            if is_unit(&e)? {
                return Ok(e);
            }
        }
    }
    // Solve Σ c_i (b_i∘b_j) = b_j for all j.
    let n = s.order();
    let len = basis.len() * n * n;
    let mut rf = RelationFinder::new(len);
    for bi in &basis {
        let mut v = Vec::with_capacity(len);
        for bj in &basis {
            v.extend(product(bi, bj)?.into_entries());
        }
        rf.push(&v);
    }
    let target: Vec<Q> = basis.iter().flat_map(|b| b.entries().to_vec()).collect();
    let c = rf.express(&target).ok_or(Error::NoIdentity)?;
    let mut e = ExactMatrix::zeros(n, n);
    for (ci, bi) in c.iter().zip(&basis) {
        e.add_scaled(ci, bi);
    }
    if is_unit(&e)? {
        Ok(e)
    } else {
        Err(Error::NoIdentity)
    }
}

/// Unit of the algebra generated by `x`, read off its first power relation.
fn unit_from_powers(x: &ExactMatrix) -> Option<ExactMatrix> {
    let n = x.rows();
    let mut rf = RelationFinder::new(n * n);
    let mut powers = vec![x.clone()];
    loop {
        let last = powers.last().expect("nonempty");
        if let Some(rel) = rf.push(last.entries()) {
            // rel[k] multiplies x^{k+1}.
            let a1 = &rel[0];
            if a1.is_zero() {
                return None;
            }
            let f = -(a1.inv().ok()?);
            let mut e = ExactMatrix::zeros(n, n);
            for (k, a) in rel.iter().enumerate().skip(1) {
                e.add_scaled(&(a * &f), &powers[k - 1]);
            }
            return Some(e);
        }
        if powers.len() > n + 1 {
            return None;
        }
        let next = last.mat_mul(x).ok()?;
        powers.push(next);
    }
}

/// Spin factors: every element of the trace-free complement of `F·e` squares into `F·e`.
fn is_spin_shaped(basis: &[ExactMatrix], e: &ExactMatrix) -> Result<bool> {
    if basis.len() < 3 {
        return Ok(false);
    }
    let te = e.trace();
    if te.is_zero() {
        return Ok(false);
    }
    let mut proj = Subspace::new(e.rows(), e.cols());
    for b in basis {
        let c = b.trace().checked_div(&te)?;
        let mut v = b.clone();
        v.add_scaled(&-c, e);
        proj.insert(&v)?;
    }
    if proj.dim() + 1 != basis.len() {
        return Ok(false);
    }
    let t = proj.basis();
    let line = Subspace::from_generators(e.rows(), e.cols(), [e])?;
    for j in 0..t.len() {
        for i in 0..=j {
            if !line.contains(&jordan_product(&t[i], &t[j])?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Matrix types by (dim J, dim envelope); degree at least 3.
pub(crate) fn match_signature(d: usize, e: usize) -> Option<TypeLabel> {
    let mut m = 3;
    while m * (m + 1) / 2 <= d {
        if m * m == d && (e == m * m || e == 2 * m * m) {
            return Some(TypeLabel::FullPlus(m));
        }
        if m * (m + 1) / 2 == d && e == m * m {
            return Some(TypeLabel::SymmetricH(m));
        }
        if 2 * m * m - m == d && e == 4 * m * m {
            return Some(TypeLabel::SymplecticH(m));
        }
        m += 1;
    }
    None
}

pub fn detect_type(s: &Subalgebra) -> Result<TypeLabel> {
    let e = identity_idempotent(s)?;
    Ok(detect_type_with_unit(s, &e)?.0)
}

/// [`detect_type`] given the unit `e`; also returns the envelope when it was needed.
pub(crate) fn detect_type_with_unit(s: &Subalgebra, e: &ExactMatrix) -> Result<(TypeLabel, Option<Envelope>)> {
    let d = s.dim();
    if is_spin_shaped(&s.basis(), e)? {
        return Ok((TypeLabel::Spin(d - 1), None));
    }
    let env = envelope_within(s, Some(e));
    let ty = match_signature(d, env.space.dim()).ok_or(Error::Unrecognized { dim: d })?;
    Ok((ty, Some(env)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sub(ambient: AmbientKind, basis: &[ExactMatrix]) -> Subalgebra {
        Subalgebra::from_basis(ambient, basis).unwrap()
    }

    /// Form [[A,B],[−B,A]] of order 2h with A symmetric, B skew.
    fn form_one(h: usize) -> Vec<ExactMatrix> {
        let z = ExactMatrix::zeros(h, h);
        let mut out = Vec::new();
        for i in 0..h {
            for j in i..h {
                let a = sym_unit(h, i, j);
                out.push(ExactMatrix::from_blocks(&a, &z, &z, &a).unwrap());
            }
        }
        for i in 0..h {
            for j in i + 1..h {
                let b = skew_unit(h, i, j);
                out.push(ExactMatrix::from_blocks(&z, &b, &(-&b), &z).unwrap());
            }
        }
        out
    }

    #[test]
    fn product_examples() {
        let x = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(jordan_product(&ExactMatrix::identity(2), &x).unwrap(), x);
        let e11 = ExactMatrix::unit(2, 2, 0, 0);
        let e12 = ExactMatrix::unit(2, 2, 0, 1);
        assert_eq!(jordan_product(&e11, &e12).unwrap(), e12.scale(&Q::half()));
        assert_eq!(jordan_product(&e11, &e11).unwrap(), e11);
        assert!(jordan_product(&e11, &ExactMatrix::identity(3)).is_err());
    }

    #[test]
    fn ambient_dims_and_membership() {
        for n in 1..=6 {
            for a in [AmbientKind::FullPlus(n), AmbientKind::SymmetricH(n)] {
                let b = a.basis();
                assert_eq!(b.len(), a.dim());
                assert!(b.iter().all(|x| a.contains(x)));
                assert_eq!(a.full_subalgebra().dim(), a.dim());
            }
            let a = AmbientKind::SymplecticH(2 * n);
            let b = a.basis();
            assert_eq!(b.len(), a.dim());
            assert!(b.iter().all(|x| a.contains(x)));
            assert_eq!(a.full_subalgebra().dim(), 2 * n * n - n);
        }
        assert!(AmbientKind::SymplecticH(3).validate().is_err());
        assert!(AmbientKind::FullPlus(0).validate().is_err());
    }

    #[test]
    fn closure_examples() {
        let mut e = ExactMatrix::zeros(4, 4);
        let mut gens = Vec::new();
        for i in 0..3 {
            for j in i..3 {
                e.set_block(0, 0, &sym_unit(3, i, j));
                gens.push(e.clone());
            }
        }
        assert!(closure_check(&sub(AmbientKind::SymmetricH(4), &gens)));
        let e12 = ExactMatrix::unit(2, 2, 0, 1);
        let e21 = ExactMatrix::unit(2, 2, 1, 0);
        assert!(closure_check(&sub(AmbientKind::FullPlus(2), &[e12.clone()])));
        assert!(!closure_check(&sub(AmbientKind::FullPlus(2), &[e12, e21])));
        assert!(closure_check(&AmbientKind::SymplecticH(4).full_subalgebra()));
    }

    #[test]
    fn envelope_examples() {
        let f1 = sub(AmbientKind::SymmetricH(4), &form_one(2));
        assert_eq!(f1.dim(), 4);
        let env = associative_envelope(&f1);
        assert_eq!(env.dim(), 8);
        // Every [[X,Y],[−Y,X]] lies in it.
        let x = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let y = ExactMatrix::from_ints(&[&[0, 5], &[7, 1]]);
        assert!(env.contains(&ExactMatrix::from_blocks(&x, &y, &(-&y), &x).unwrap()).unwrap());

        let mut a = Vec::new();
        let mut b = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let u = ExactMatrix::unit(3, 3, i, j);
                a.push(ExactMatrix::block_diag(&[&u, &u.transpose()]));
                b.push(ExactMatrix::block_diag(&[&u, &u]));
            }
        }
        assert_eq!(associative_envelope(&sub(AmbientKind::FullPlus(6), &a)).dim(), 18);
        assert_eq!(associative_envelope(&sub(AmbientKind::FullPlus(6), &b)).dim(), 9);
    }

    #[test]
    fn envelope_is_closed() {
        let f1 = sub(AmbientKind::SymmetricH(6), &form_one(3));
        let env = associative_envelope(&f1);
        let b = env.basis();
        for x in &b {
            for y in &b {
                assert!(env.contains(&(x * y)).unwrap());
            }
        }
        assert!(env.contains_subspace(&f1.span).unwrap());
    }

    #[test]
    fn identity_examples() {
        assert_eq!(
            identity_idempotent(&AmbientKind::SymmetricH(3).full_subalgebra()).unwrap(),
            ExactMatrix::identity(3)
        );
        let mut gens = Vec::new();
        for i in 0..2 {
            for j in i..2 {
                let mut m = ExactMatrix::zeros(5, 5);
                m.set_block(0, 0, &sym_unit(2, i, j));
                gens.push(m);
            }
        }
        let e = identity_idempotent(&sub(AmbientKind::FullPlus(5), &gens)).unwrap();
        let mut want = ExactMatrix::zeros(5, 5);
        want[(0, 0)] = Q::one();
        want[(1, 1)] = Q::one();
        assert_eq!(e, want);
        assert_eq!(
            identity_idempotent(&sub(AmbientKind::SymmetricH(4), &form_one(2))).unwrap(),
            ExactMatrix::identity(4)
        );
        let nil = sub(AmbientKind::FullPlus(2), &[ExactMatrix::unit(2, 2, 0, 1)]);
        assert_eq!(identity_idempotent(&nil), Err(Error::NoIdentity));
    }

    #[test]
    fn identity_without_a_generic_shortcut() {
        // The associative product is not the Jordan one, so the polynomial
        // candidate fails verification and the linear solve decides.
        fn left(x: &ExactMatrix, y: &ExactMatrix) -> Result<ExactMatrix> {
            x.mat_mul(y)
        }
        let s = AmbientKind::FullPlus(2).full_subalgebra();
        assert_eq!(identity_idempotent_with(&s, left).unwrap(), ExactMatrix::identity(2));
    }

    #[test]
    fn detect_examples() {
        let h3 = AmbientKind::SymmetricH(3).full_subalgebra();
        assert_eq!(detect_type(&h3).unwrap(), TypeLabel::SymmetricH(3));
        let f1 = sub(AmbientKind::SymmetricH(6), &form_one(3));
        assert_eq!(detect_type(&f1).unwrap(), TypeLabel::FullPlus(3));
        assert_eq!(
            detect_type(&AmbientKind::SymplecticH(6).full_subalgebra()).unwrap(),
            TypeLabel::SymplecticH(3)
        );
        // Pauli-style spin factor in order 2: {I, σx, σz}.
        let sx = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        let sz = ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]);
        let sp = sub(AmbientKind::SymmetricH(2), &[ExactMatrix::identity(2), sx, sz]);
        assert_eq!(detect_type(&sp).unwrap(), TypeLabel::Spin(2));
    }

    #[test]
    fn signatures_are_unambiguous() {
        let mut seen = std::collections::HashMap::new();
        for m in 3..200usize {
            for (d, e, t) in [
                (m * m, m * m, TypeLabel::FullPlus(m)),
                (m * m, 2 * m * m, TypeLabel::FullPlus(m)),
                (m * (m + 1) / 2, m * m, TypeLabel::SymmetricH(m)),
                (2 * m * m - m, 4 * m * m, TypeLabel::SymplecticH(m)),
            ] {
                assert_eq!(*seen.entry((d, e)).or_insert(t), t);
                assert_eq!(match_signature(d, e), Some(t));
            }
        }
    }

    #[test]
    fn subalgebra_json_roundtrip() {
        let s = sub(AmbientKind::SymmetricH(4), &form_one(2));
        let j = serde_json::to_string(&s).unwrap();
        let back: Subalgebra = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        let bad = r#"{"ambient":{"kind":"sym","n":2},"basis":[[["0","1"],["0","0"]]]}"#;
        assert!(serde_json::from_str::<Subalgebra>(bad).is_err());
    }

    fn arb_in(a: AmbientKind) -> impl Strategy<Value = ExactMatrix> {
        let basis = a.basis();
        proptest::collection::vec((-3i64..=3, -1i64..=1), basis.len()).prop_map(move |cs| {
            let mut m = ExactMatrix::zeros(a.order(), a.order());
            for ((re, im), b) in cs.into_iter().zip(&basis) {
                m.add_scaled(&Q::gaussian(re, im), b);
            }
            m
        })
    }

    fn jordan_identity(a: AmbientKind, x: &ExactMatrix, y: &ExactMatrix) -> bool {
        let x2 = jordan_product(x, x).unwrap();
        let lhs = jordan_product(&x2, &jordan_product(x, y).unwrap()).unwrap();
        let rhs = jordan_product(&jordan_product(&x2, y).unwrap(), x).unwrap();
        lhs == rhs && a.contains(&jordan_product(x, y).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn jordan_identity_full(x in arb_in(AmbientKind::FullPlus(3)), y in arb_in(AmbientKind::FullPlus(3))) {
            prop_assert!(jordan_identity(AmbientKind::FullPlus(3), &x, &y));
        }

        #[test]
        fn jordan_identity_sym(x in arb_in(AmbientKind::SymmetricH(4)), y in arb_in(AmbientKind::SymmetricH(4))) {
            prop_assert!(jordan_identity(AmbientKind::SymmetricH(4), &x, &y));
        }

        #[test]
        fn jordan_identity_symp(x in arb_in(AmbientKind::SymplecticH(4)), y in arb_in(AmbientKind::SymplecticH(4))) {
            prop_assert!(jordan_identity(AmbientKind::SymplecticH(4), &x, &y));
        }
    }
}
