//! The Clifford algebra `C(V,f)` with `f` the identity form on `dim V = 2m`,
//! its reversal involution, and an explicit representation of order `2^m`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, RelationFinder, Subspace};
use crate::scalar::GaussianRational as Q;

/// Monomials are generator subsets, bit `i-1` standing for `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    m: usize,
    terms: BTreeMap<u32, Q>,
}

/// Sign of `x_A x_B` once the concatenation is sorted: one factor −1 per
/// pair `a ∈ A, b ∈ B` with `a > b`.
fn monomial_sign(a: u32, b: u32) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        swaps += (a >> (bit + 1)).count_ones();
    }
    swaps % 2 == 1
}

impl CliffordElement {
    pub fn zero(m: usize) -> Self {
        assert!(2 * m <= 31, "at most 31 generators");
        Self {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(m: usize, c: Q) -> Self {
        Self::monomial(m, &[], c)
    }

    /// `x_i` with 1-based `i`.
    pub fn generator(m: usize, i: usize) -> Self {
        Self::monomial(m, &[i], Q::one())
    }

    /// `c · x_{i1} x_{i2} ⋯` in the given order (indices 1-based, may repeat).
    pub fn monomial(m: usize, indices: &[usize], c: Q) -> Self {
        let mut out = Self::scalar_unit(m);
        for &i in indices {
            assert!(i >= 1 && i <= 2 * m, "generator index {i} out of range");
            out = out.mul_monomial(1 << (i - 1));
        }
        out.scale(&c)
    }

    fn scalar_unit(m: usize) -> Self {
        let mut e = Self::zero(m);
        e.terms.insert(0, Q::one());
        e
    }

    fn mul_monomial(&self, mask: u32) -> Self {
        let mut out = Self::zero(self.m);
        for (&k, c) in &self.terms {
            let v = if monomial_sign(k, mask) { -c } else { c.clone() };
            out.add_term(k ^ mask, &v);
        }
        out
    }

    fn add_term(&mut self, mask: u32, c: &Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as (sorted 1-based indices, coefficient).
    pub fn terms(&self) -> Vec<(Vec<usize>, Q)> {
        self.terms
            .iter()
            .map(|(&k, c)| (mask_indices(k), c.clone()))
            .collect()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.m);
        for (&k, v) in &self.terms {
            out.add_term(k, &(v * c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::MismatchedAlgebra);
        }
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            out.add_term(k, v);
        }
        Ok(out)
    }
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b as usize + 1).collect()
}

pub fn cliff_mul(a: &CliffordElement, b: &CliffordElement) -> Result<CliffordElement> {
    if a.m != b.m {
        return Err(Error::MismatchedAlgebra);
    }
    let mut out = CliffordElement::zero(a.m);
    for (&ka, ca) in &a.terms {
        for (&kb, cb) in &b.terms {
            let v = ca * cb;
            let v = if monomial_sign(ka, kb) { -v } else { v };
            out.add_term(ka ^ kb, &v);
        }
    }
    Ok(out)
}

/// Reversal: a degree-`k` monomial picks up `(−1)^{k(k−1)/2}`.
pub fn cliff_reverse(a: &CliffordElement) -> CliffordElement {
    let mut out = CliffordElement::zero(a.m);
    for (&k, c) in &a.terms {
        let deg = k.count_ones();
        let v = if (deg * deg.saturating_sub(1) / 2) % 2 == 1 { -c } else { c.clone() };
        out.add_term(k, &v);
    }
    out
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    indices: Vec<usize>,
    coeff: Q,
}

#[derive(Serialize, Deserialize)]
struct CliffordWire {
    m: usize,
    terms: Vec<TermWire>,
}

impl Serialize for CliffordElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CliffordWire {
            m: self.m,
            terms: self
                .terms()
                .into_iter()
                .map(|(indices, coeff)| TermWire { indices, coeff })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CliffordElement {
    /// Index lists may be unsorted or repeat; they are multiplied out in order.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = CliffordWire::deserialize(d)?;
        if 2 * w.m > 31 {
            return Err(serde::de::Error::custom("m too large"));
        }
        let mut out = CliffordElement::zero(w.m);
        for t in w.terms {
            if t.indices.iter().any(|&i| i == 0 || i > 2 * w.m) {
                return Err(serde::de::Error::custom("generator index out of range"));
            }
            let mono = CliffordElement::monomial(w.m, &t.indices, t.coeff);
            out = out.add(&mono).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

/// Images `γ_1, …, γ_{2m}` of the generators, matrices of order `2^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRep {
    pub m: usize,
    pub gammas: Vec<ExactMatrix>,
}

fn pauli_x() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[0, 1], &[1, 0]])
}

fn pauli_y() -> ExactMatrix {
    let mut y = ExactMatrix::zeros(2, 2);
    y[(0, 1)] = -Q::i();
    y[(1, 0)] = Q::i();
    y
}

fn pauli_z() -> ExactMatrix {
    ExactMatrix::from_ints(&[&[1, 0], &[0, -1]])
}

fn kron_chain(parts: &[ExactMatrix]) -> ExactMatrix {
    parts
        .iter()
        .fold(ExactMatrix::identity(1), |acc, p| acc.kron(p))
}

/// `γ_{2p−1} = Z^{⊗(p−1)} ⊗ X ⊗ I^{⊗(m−p)}`, `γ_{2p} = Z^{⊗(p−1)} ⊗ Y′ ⊗ I^{⊗(m−p)}`.
pub fn gamma_rep(m: usize) -> GammaRep {
    assert!(m >= 1, "gamma_rep needs m >= 1");
    let mut gammas = Vec::with_capacity(2 * m);
    for p in 1..=m {
        for mid in [pauli_x(), pauli_y()] {
            let mut parts = vec![pauli_z(); p - 1];
            parts.push(mid);
            parts.extend(std::iter::repeat(ExactMatrix::identity(2)).take(m - p));
            gammas.push(kron_chain(&parts));
        }
    }
    GammaRep { m, gammas }
}

impl GammaRep {
    pub fn order(&self) -> usize {
        1 << self.m
    }

    /// `γ_{i1} γ_{i2} ⋯` for sorted 1-based indices.
    pub fn monomial_image(&self, indices: &[usize]) -> ExactMatrix {
        indices
            .iter()
            .fold(ExactMatrix::identity(self.order()), |acc, &i| &acc * &self.gammas[i - 1])
    }

    pub fn image(&self, a: &CliffordElement) -> Result<ExactMatrix> {
        if a.m != self.m {
            return Err(Error::MismatchedAlgebra);
        }
        let mut out = ExactMatrix::zeros(self.order(), self.order());
        for (idx, c) in a.terms() {
            out.add_scaled(&c, &self.monomial_image(&idx));
        }
        Ok(out)
    }
}

/// `c·γ_1⋯γ_{2m}` squaring to `I`: `c = 1` for even `m`, `c = i` for odd `m`.
///
/// Reversal scales `γ_1⋯γ_{2m}` by `(−1)^m`, so the element is reversal-fixed
/// exactly when `m` is even; no scalar multiple is fixed for odd `m`.
pub fn chirality(m: usize) -> ExactMatrix {
    let rep = gamma_rep(m);
    let all: Vec<usize> = (1..=2 * m).collect();
    let w = rep.monomial_image(&all);
    if m % 2 == 0 {
        w
    } else {
        w.scale(&Q::i())
    }
}

/// `C` with `γ_iᵗ C = C γ_i` for every generator, so the reversal becomes
/// `x ↦ C⁻¹ xᵗ C`. The first echelon solution is returned.
pub fn reversal_form(m: usize) -> ExactMatrix {
    let rep = gamma_rep(m);
    let n = rep.order();
    let gt: Vec<ExactMatrix> = rep.gammas.iter().map(ExactMatrix::transpose).collect();
    let len = 2 * m * n * n;
    let mut rf = RelationFinder::new(len);
    let mut kernel = Subspace::new(n, n);
    let mut units = Vec::with_capacity(n * n);
    for k in 0..n {
        for l in 0..n {
            let e = ExactMatrix::unit(n, n, k, l);
            let mut v = Vec::with_capacity(len);
            for (g, t) in rep.gammas.iter().zip(&gt) {
                v.extend((&(t * &e) - &(&e * g)).into_entries());
            }
            units.push(e);
            if let Some(rel) = rf.push(&v) {
                let mut c = ExactMatrix::zeros(n, n);
                for (coef, u) in rel.iter().zip(&units) {
                    c.add_scaled(coef, u);
                }
                kernel.insert(&c).expect("shape");
            }
        }
    }
    kernel
        .basis()
        .into_iter()
        .next()
        .expect("reversal form exists")
}

/// Dimension of the fixed space of `x ↦ C⁻¹ xᵗ C` on matrices of order `2^m`.
pub fn represented_involution_fixed_dim(m: usize) -> usize {
    let c = reversal_form(m);
    let ci = c.inverse().expect("reversal form is invertible");
    let n = c.rows();
    let mut image = Subspace::new(n, n);
    for k in 0..n {
        for l in 0..n {
            let e = ExactMatrix::unit(n, n, k, l);
            let moved = &(&ci * &e.transpose()) * &c;
            image.insert(&(&moved - &e)).expect("shape");
        }
    }
    n * n - image.dim()
}

/// Images of `x_1, …, x_d` in order `2^{⌊d/2⌋}`: the gammas, plus the
/// chirality element when `d` is odd.
pub fn spin_generators(d: usize) -> Result<Vec<ExactMatrix>> {
    if d < 2 {
        return Err(Error::Unrecognized { dim: d + 1 });
    }
    let m = d / 2;
    let mut g = gamma_rep(m).gammas;
    if d % 2 == 1 {
        g.push(chirality(m));
    }
    Ok(g)
}

/// `P` with `Pᵗ C P = I` for symmetric invertible `C`, using only square
/// roots available in ℚ(i). `None` if the search finds no suitable vectors.
pub fn symmetric_frame(c: &ExactMatrix) -> Option<ExactMatrix> {
    let n = c.rows();
    let form = |x: &ExactMatrix, y: &ExactMatrix| (&(&x.transpose() * c) * y)[(0, 0)].clone();
    let mut pool: Vec<ExactMatrix> = (0..n).map(|k| ExactMatrix::unit(n, 1, k, 0)).collect();
    let shifts = [Q::one(), Q::i(), Q::from_int(-1), -Q::i(), Q::from_int(2), Q::gaussian(1, 1)];
    let mut frame = Vec::with_capacity(n);
    while !pool.is_empty() {
        let mut pick = None;
        'search: for a in 0..pool.len() {
            let q = form(&pool[a], &pool[a]);
            if let Some(r) = q.sqrt_if_square().filter(|r| !r.is_zero()) {
                pick = Some((pool[a].scale(&r.inv().ok()?), a));
                break 'search;
            }
            for b in a + 1..pool.len() {
                for t in &shifts {
                    let mut v = pool[a].clone();
                    v.add_scaled(t, &pool[b]);
                    let q = form(&v, &v);
                    if let Some(r) = q.sqrt_if_square().filter(|r| !r.is_zero()) {
                        pick = Some((v.scale(&r.inv().ok()?), a));
                        break 'search;
                    }
                }
            }
        }
        let (p, a) = pick?;
        // `p` replaces pool[a] in the span; project the rest off `p`.
        pool.remove(a);
        for w in &mut pool {
            let f = form(&p, w);
            w.add_scaled(&-f, &p);
        }
        frame.push(p);
    }
    Some(columns(&frame))
}

/// `P` with `Pᵗ C P = J = [[0, I],[−I, 0]]` for skew invertible `C`.
pub fn symplectic_frame(c: &ExactMatrix) -> Option<ExactMatrix> {
    let n = c.rows();
    if n % 2 != 0 {
        return None;
    }
    let form = |x: &ExactMatrix, y: &ExactMatrix| (&(&x.transpose() * c) * y)[(0, 0)].clone();
    let mut pool: Vec<ExactMatrix> = (0..n).map(|k| ExactMatrix::unit(n, 1, k, 0)).collect();
    let (mut firsts, mut seconds) = (Vec::new(), Vec::new());
    while !pool.is_empty() {
        let a = pool.remove(0);
        let bi = pool.iter().position(|w| !form(&a, w).is_zero())?;
        let w = pool.remove(bi);
        let b = w.scale(&form(&a, &w).inv().ok()?);
        for v in &mut pool {
            let fb = form(v, &b);
            let fa = form(v, &a);
            v.add_scaled(&-fb, &a);
            v.add_scaled(&fa, &b);
        }
        firsts.push(a);
        seconds.push(b);
    }
    firsts.extend(seconds);
    Some(columns(&firsts))
}

fn columns(cols: &[ExactMatrix]) -> ExactMatrix {
    let n = cols.first().map_or(0, ExactMatrix::rows);
    ExactMatrix::from_fn(n, cols.len(), |i, j| cols[j][(i, 0)].clone())
}

/// Element `α ⊕ v` of `J(f,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinElement {
    pub scalar: Q,
    pub vector: Vec<Q>,
}

/// `(α⊕v)∘(β⊕w) = (αβ + f(v,w)) ⊕ (αw + βv)`.
pub fn spin_product(a: &SpinElement, b: &SpinElement) -> Result<SpinElement> {
    if a.vector.len() != b.vector.len() {
        return Err(Error::MismatchedAlgebra);
    }
    let mut s = &a.scalar * &b.scalar;
    for (x, y) in a.vector.iter().zip(&b.vector) {
        s += &(x * y);
    }
    let vector = a
        .vector
        .iter()
        .zip(&b.vector)
        .map(|(v, w)| &(&a.scalar * w) + &(&b.scalar * v))
        .collect();
    Ok(SpinElement { scalar: s, vector })
}

/// Matrix image `αI + Σ v_k ρ(x_k)` for the given generator images.
pub fn spin_image(a: &SpinElement, gens: &[ExactMatrix]) -> Result<ExactMatrix> {
    if a.vector.len() != gens.len() || gens.is_empty() {
        return Err(Error::MismatchedAlgebra);
    }
    let mut out = ExactMatrix::scalar(gens[0].rows(), &a.scalar);
    for (c, g) in a.vector.iter().zip(gens) {
        out.add_scaled(c, g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::jordan_product;
    use proptest::prelude::*;

    fn x(m: usize, idx: &[usize]) -> CliffordElement {
        CliffordElement::monomial(m, idx, Q::one())
    }

    #[test]
    fn mul_examples() {
        let one = CliffordElement::scalar(1, Q::one());
        assert_eq!(cliff_mul(&x(1, &[1]), &x(1, &[1])).unwrap(), one);
        assert_eq!(cliff_mul(&x(1, &[1]), &x(1, &[2])).unwrap(), x(1, &[1, 2]));
        assert_eq!(
            cliff_mul(&x(1, &[2]), &x(1, &[1])).unwrap(),
            x(1, &[1, 2]).scale(&Q::from_int(-1))
        );
        assert_eq!(
            cliff_mul(&x(1, &[1, 2]), &x(1, &[1, 2])).unwrap(),
            one.scale(&Q::from_int(-1))
        );
        assert_eq!(
            cliff_mul(&x(1, &[1]), &x(2, &[1])),
            Err(Error::MismatchedAlgebra)
        );
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(cliff_reverse(&x(1, &[1])), x(1, &[1]));
        assert_eq!(cliff_reverse(&x(1, &[1, 2])), x(1, &[1, 2]).scale(&Q::from_int(-1)));
        assert_eq!(cliff_reverse(&x(1, &[])), x(1, &[]));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_rep(1);
        assert_eq!(g.gammas[0], pauli_x());
        assert_eq!(g.gammas[1], pauli_y());
        for m in 1..=4 {
            let g = gamma_rep(m);
            let id = ExactMatrix::identity(1 << m);
            for a in 0..2 * m {
                assert_eq!(&g.gammas[a] * &g.gammas[a], id);
                for b in a + 1..2 * m {
                    let ac = &(&g.gammas[a] * &g.gammas[b]) + &(&g.gammas[b] * &g.gammas[a]);
                    assert!(ac.is_zero(), "m={m} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn gamma_map_is_multiplicative_and_onto() {
        for m in 1..=3 {
            let g = gamma_rep(m);
            let n = g.order();
            let mut span = Subspace::new(n, n);
            for mask in 0u32..(1 << (2 * m)) {
                let idx = mask_indices(mask);
                let img = g.image(&x(m, &idx)).unwrap();
                assert_eq!(img, g.monomial_image(&idx));
                span.insert(&img).unwrap();
                for mask2 in [0u32, 1, (1 << (2 * m)) - 1, mask.rotate_left(1) & ((1 << (2 * m)) - 1)] {
                    let b = x(m, &mask_indices(mask2));
                    let prod = cliff_mul(&x(m, &idx), &b).unwrap();
                    assert_eq!(g.image(&prod).unwrap(), &img * &g.image(&b).unwrap());
                }
            }
            assert_eq!(span.dim(), n * n);
        }
    }

    #[test]
    fn chirality_properties() {
        let m1 = chirality(1);
        assert_eq!(m1, ExactMatrix::from_ints(&[&[-1, 0], &[0, 1]]));
        for m in 1..=4 {
            let w = chirality(m);
            assert_eq!(&w * &w, ExactMatrix::identity(1 << m));
            for g in &gamma_rep(m).gammas {
                if m <= 3 {
                    assert!((&(&w * g) + &(g * &w)).is_zero());
                }
            }
            let c = reversal_form(m);
            let rev = &(&c.inverse().unwrap() * &w.transpose()) * &c;
            assert_eq!(rev == w, m % 2 == 0, "m={m}");
        }
    }

    /// Fixed dimension counted on the Clifford side: monomials of degree
    /// k ≡ 0,1 mod 4 are reversal-fixed.
    fn fixed_dim_oracle(m: usize) -> usize {
        let d = 2 * m;
        let mut binom = vec![1usize];
        for k in 1..=d {
            let prev = binom[k - 1];
            binom.push(prev * (d + 1 - k) / k);
        }
        (0..=d).filter(|k| k % 4 <= 1).map(|k| binom[k]).sum()
    }

    #[test]
    fn fixed_dims_match_table() {
        let closed = |m: usize| {
            let p = 1usize << (m - 1);
            if m % 4 <= 1 {
                p * ((1 << m) + 1)
            } else {
                p * ((1 << m) - 1)
            }
        };
        for m in 1..=4 {
            assert_eq!(fixed_dim_oracle(m), closed(m));
            assert_eq!(represented_involution_fixed_dim(m), closed(m), "m={m}");
        }
        assert_eq!(represented_involution_fixed_dim(1), 3);
        assert_eq!(represented_involution_fixed_dim(2), 6);
        assert_eq!(represented_involution_fixed_dim(3), 28);
    }

    #[test]
    fn reversal_form_parity() {
        for m in 1..=4 {
            let c = reversal_form(m);
            for g in &gamma_rep(m).gammas {
                assert_eq!(&g.transpose() * &c, &c * g);
            }
            if m % 4 <= 1 {
                assert!(c.is_symmetric(), "m={m}");
            } else {
                assert!(c.is_skew(), "m={m}");
            }
        }
    }

    #[test]
    fn frames() {
        for m in 1..=4 {
            let c = reversal_form(m);
            let n = c.rows();
            if m % 4 <= 1 {
                let p = symmetric_frame(&c).expect("frame");
                assert_eq!(&(&p.transpose() * &c) * &p, ExactMatrix::identity(n));
            } else {
                let p = symplectic_frame(&c).expect("frame");
                assert_eq!(
                    &(&p.transpose() * &c) * &p,
                    ExactMatrix::symplectic_form(n / 2)
                );
            }
        }
    }

    #[test]
    fn spin_relations() {
        for d in 2..=9 {
            let g = spin_generators(d).unwrap();
            let n = g[0].rows();
            for a in 0..d {
                for b in 0..d {
                    let p = jordan_product(&g[a], &g[b]).unwrap();
                    if a == b {
                        assert_eq!(p, ExactMatrix::identity(n));
                    } else {
                        assert!(p.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn spin_product_examples() {
        let e = |s: i64, v: &[i64]| SpinElement {
            scalar: Q::from_int(s),
            vector: v.iter().map(|&k| Q::from_int(k)).collect(),
        };
        let w = e(3, &[1, -2]);
        assert_eq!(spin_product(&e(1, &[0, 0]), &w).unwrap(), w);
        assert_eq!(spin_product(&e(0, &[1, 0]), &e(0, &[1, 0])).unwrap(), e(1, &[0, 0]));
        assert_eq!(spin_product(&e(0, &[1, 0]), &e(0, &[0, 1])).unwrap(), e(0, &[0, 0]));
        assert!(spin_product(&e(0, &[1]), &w).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let a = x(2, &[1, 3]).add(&x(2, &[]).scale(&Q::half())).unwrap();
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<CliffordElement>(&j).unwrap(), a);
        let rev = r#"{"m":1,"terms":[{"indices":[2,1],"coeff":"1"}]}"#;
        assert_eq!(
            serde_json::from_str::<CliffordElement>(rev).unwrap(),
            x(1, &[1, 2]).scale(&Q::from_int(-1))
        );
    }

    fn arb_elem(m: usize) -> impl Strategy<Value = CliffordElement> {
        proptest::collection::vec((0u32..(1 << (2 * m)), -3i64..=3, -1i64..=1), 0..6).prop_map(
            move |ts| {
                let mut e = CliffordElement::zero(m);
                for (k, a, b) in ts {
                    e.add_term(k, &Q::gaussian(a, b));
                }
                e
            },
        )
    }

    proptest! {
        #[test]
        fn mul_associative(a in arb_elem(3), b in arb_elem(3), c in arb_elem(3)) {
            let l = cliff_mul(&cliff_mul(&a, &b).unwrap(), &c).unwrap();
            let r = cliff_mul(&a, &cliff_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn reverse_is_anti_involution(a in arb_elem(2), b in arb_elem(2)) {
            prop_assert_eq!(cliff_reverse(&cliff_reverse(&a)), a.clone());
            prop_assert_eq!(
                cliff_reverse(&cliff_mul(&a, &b).unwrap()),
                cliff_mul(&cliff_reverse(&b), &cliff_reverse(&a)).unwrap()
            );
        }

        #[test]
        fn spin_image_is_homomorphic(v in proptest::collection::vec(-3i64..=3, 8), w in proptest::collection::vec(-3i64..=3, 8)) {
            let g = spin_generators(8).unwrap();
            let mk = |s: &[i64]| SpinElement { scalar: Q::from_int(s[0]), vector: s[1..].iter().chain(&s[..1]).map(|&k| Q::from_int(k)).collect() };
            let (a, b) = (mk(&v), mk(&w));
            let lhs = jordan_product(&spin_image(&a, &g).unwrap(), &spin_image(&b, &g).unwrap()).unwrap();
            let rhs = spin_image(&spin_product(&a, &b).unwrap(), &g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
