//! Conjugacy invariants, class enumeration and the closed-form class counts.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::{normalized_specs, validate_spec, CanonicalSpec};
use crate::error::{Error, Result};
use crate::jordan::{detect_type, detect_type_with_unit, identity_idempotent, AmbientKind, Envelope, Subalgebra, TypeLabel};
use crate::matrix::{ExactMatrix, RelationFinder};
use crate::scalar::GaussianRational as Q;

/// `(type, rk e, k_A)`; `k_a` is present exactly where the `|l−k|` invariant applies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "InvariantWire", into = "InvariantWire")]
pub struct InvariantVector {
    pub ty: TypeLabel,
    pub rank_e: usize,
    pub k_a: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct InvariantWire {
    #[serde(rename = "type")]
    ty: String,
    m: usize,
    rank_e: usize,
    #[serde(default)]
    k_a: Option<usize>,
}

impl TryFrom<InvariantWire> for InvariantVector {
    type Error = Error;
    fn try_from(w: InvariantWire) -> Result<Self> {
        Ok(Self {
            ty: TypeLabel::from_parts(&w.ty, w.m)?,
            rank_e: w.rank_e,
            k_a: w.k_a,
        })
    }
}

impl From<InvariantVector> for InvariantWire {
    fn from(v: InvariantVector) -> Self {
        Self {
            ty: v.ty.kind_name().to_string(),
            m: v.ty.param(),
            rank_e: v.rank_e,
            k_a: v.k_a,
        }
    }
}

/// Whether `k_A` is an invariant for this (type, ambient) pair.
pub fn k_applies(ambient: AmbientKind, ty: TypeLabel) -> bool {
    matches!(ty, TypeLabel::FullPlus(_) | TypeLabel::SymplecticH(_))
        && matches!(ambient, AmbientKind::FullPlus(_) | AmbientKind::SymplecticH(_))
}

/// Matrix order of one block of the type's natural realization.
fn block_order(ty: TypeLabel) -> usize {
    match ty {
        TypeLabel::SymplecticH(m) => 2 * m,
        other => other.param(),
    }
}

pub fn rank_of_identity(s: &Subalgebra) -> Result<usize> {
    Ok(identity_idempotent(s)?.rank())
}

pub fn k_invariant_spec(spec: &CanonicalSpec) -> Option<usize> {
    k_applies(spec.ambient, spec.ty).then(|| spec.l.abs_diff(spec.k))
}

/// `z²` written as `a·z + b·e`.
fn quadratic_relation(z: &ExactMatrix, e: &ExactMatrix) -> Option<(Q, Q)> {
    let mut rf = RelationFinder::new(z.entries().len());
    rf.push(z.entries());
    rf.push(e.entries());
    let c = rf.express((z * z).entries())?;
    Some((c[0].clone(), c[1].clone()))
}

/// Central elements of the envelope, as a basis. Candidates are cut down to
/// the commutant of one generator at a time, so later systems involve only a
/// handful of unknowns.
fn envelope_center(s: &Subalgebra, env: &Envelope) -> Vec<ExactMatrix> {
    let n = s.order();
    let mut candidates = env.space.basis();
    for g in &env.generators {
        if candidates.is_empty() {
            break;
        }
        let mut rf = RelationFinder::new(n * n);
        let mut next = Vec::new();
        for (i, z) in candidates.iter().enumerate() {
            if let Some(rel) = rf.push((&(z * g) - &(g * z)).entries()) {
                let mut c = ExactMatrix::zeros(n, n);
                for (coef, zk) in rel.iter().zip(&candidates[..=i]) {
                    if !coef.is_zero() {
                        c.add_scaled(coef, zk);
                    }
                }
                next.push(c);
            }
        }
        candidates = next;
    }
    candidates
}

/// `|rk e₁ − rk e₂| / block` from the central idempotents of the envelope,
/// or `rk e / block` when the envelope is simple.
pub fn k_invariant_envelope(s: &Subalgebra) -> Result<Option<usize>> {
    // Envelope ranks see both mirrored halves of the symplectic ambient
    // equally, and no type in a symmetric ambient carries `k_A`.
    if !matches!(s.ambient, AmbientKind::FullPlus(_)) {
        return Ok(None);
    }
    let e = identity_idempotent(s)?;
    let (ty, env) = detect_type_with_unit(s, &e)?;
    let Some(env) = env.filter(|_| k_applies(s.ambient, ty)) else {
        return Ok(None);
    };
    let unit = block_order(ty);
    let center = envelope_center(s, &env);
    match center.len() {
        1 => Ok(Some(e.rank() / unit)),
        2 => {
            let probe = center
                .iter()
                .find(|z| {
                    let mut rf = RelationFinder::new(e.entries().len());
                    rf.push(e.entries());
                    rf.push(z.entries()).is_none()
                })
                .ok_or_else(|| Error::EnvelopeNotSemisimple("center is spanned by the identity".into()))?;
            let (a, b) = quadratic_relation(probe, &e)
                .ok_or_else(|| Error::EnvelopeNotSemisimple("center is not closed".into()))?;
            // Roots of t² − a t − b are the eigenvalues of z on the two summands.
            let disc = &(&a * &a) + &(&Q::from_int(4) * &b);
            let root = disc
                .sqrt_if_square()
                .filter(|r| !r.is_zero())
                .ok_or_else(|| Error::EnvelopeNotSemisimple("center does not split".into()))?;
            let t2 = &(&a - &root) * &Q::half();
            let e1 = (probe - &e.scale(&t2)).scale(&root.inv()?);
            let e2 = &e - &e1;
            if &e1 * &e1 != e1 {
                return Err(Error::EnvelopeNotSemisimple("central element is not idempotent".into()));
            }
            Ok(Some(e1.rank().abs_diff(e2.rank()) / unit))
        }
        d => Err(Error::EnvelopeNotSemisimple(format!("center has dimension {d}"))),
    }
}

pub fn invariant_vector(spec: &CanonicalSpec) -> InvariantVector {
    InvariantVector {
        ty: spec.ty,
        rank_e: spec.identity_rank(),
        k_a: k_invariant_spec(spec),
    }
}

/// Invariants computed from a subalgebra rather than a spec.
pub fn subalgebra_invariants(s: &Subalgebra) -> Result<InvariantVector> {
    let ty = detect_type(s)?;
    Ok(InvariantVector {
        ty,
        rank_e: rank_of_identity(s)?,
        k_a: k_invariant_envelope(s)?,
    })
}

pub fn are_conjugate(a: &CanonicalSpec, b: &CanonicalSpec) -> Result<bool> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch);
    }
    for spec in [a, b] {
        let v = validate_spec(spec);
        if !v.is_empty() {
            return Err(Error::SpecInvalid(v));
        }
    }
    Ok(a.ty == b.ty && invariant_vector(a) == invariant_vector(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasEntry {
    pub spec: CanonicalSpec,
    pub invariants: InvariantVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub ambient: AmbientKind,
    pub entries: Vec<AtlasEntry>,
}

/// One representative per invariant vector, ordered by rank then `k_a`.
pub fn enumerate_classes(ambient: AmbientKind, ty: TypeLabel) -> Atlas {
    let mut classes: BTreeMap<(usize, Option<usize>), CanonicalSpec> = BTreeMap::new();
    for spec in normalized_specs(ambient, ty) {
        let v = invariant_vector(&spec);
        classes.entry((v.rank_e, v.k_a)).or_insert(spec);
    }
    Atlas {
        ambient,
        entries: classes
            .into_values()
            .map(|spec| AtlasEntry {
                invariants: invariant_vector(&spec),
                spec,
            })
            .collect(),
    }
}

/// Shape of a closed-form count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountClause {
    /// Exactly `k` classes.
    Linear,
    /// `Σ_{j=1}^{k} ⌊j/2⌋` classes.
    HalfSum,
}

/// The clause, its `k`, and the printed count; `None` when the clause's
/// size precondition fails or the type is a spin factor.
pub fn count_formula_parts(ambient: AmbientKind, ty: TypeLabel) -> Option<(CountClause, usize, usize)> {
    let n = ambient.degree();
    let m = ty.param();
    if m == 0 {
        return None;
    }
    use AmbientKind as A;
    use TypeLabel as T;
    let (clause, unit, ok) = match (ambient, ty) {
        (_, T::Spin(_)) => return None,
        (A::FullPlus(_), T::FullPlus(_)) => (CountClause::HalfSum, m, m < n),
        (A::FullPlus(_), T::SymmetricH(_)) => (CountClause::Linear, m, m <= n),
        (A::FullPlus(_), T::SymplecticH(_)) => (CountClause::Linear, 2 * m, 2 * m <= n),
        (A::SymmetricH(_), T::SymmetricH(_)) => (CountClause::Linear, m, m < n),
        (A::SymmetricH(_), T::FullPlus(_)) => (CountClause::Linear, 2 * m, 2 * m <= n),
        (A::SymmetricH(_), T::SymplecticH(_)) => (CountClause::Linear, 4 * m, 4 * m <= n),
        (A::SymplecticH(_), T::SymmetricH(_)) => (CountClause::Linear, m, m <= n),
        (A::SymplecticH(_), T::FullPlus(_)) => (CountClause::HalfSum, m, m <= n),
        (A::SymplecticH(_), T::SymplecticH(_)) => (CountClause::HalfSum, m, m < n),
    };
    if !ok {
        return None;
    }
    let k = n / unit;
    let count = match clause {
        CountClause::Linear => k,
        CountClause::HalfSum => (1..=k).map(|j| j / 2).sum(),
    };
    Some((clause, k, count))
}

pub fn count_classes_formula(ambient: AmbientKind, ty: TypeLabel) -> Option<usize> {
    count_formula_parts(ambient, ty).map(|(_, _, c)| c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub ambient: AmbientKind,
    #[serde(rename = "type")]
    pub ty: String,
    pub m: usize,
    pub formula_count: usize,
    pub enumerated_count: usize,
    pub witness_specs: Vec<CanonicalSpec>,
}

/// Disagreement between enumeration and the printed count, with every
/// enumerated representative as witness.
pub fn discrepancy(ambient: AmbientKind, ty: TypeLabel) -> Option<Discrepancy> {
    let formula = count_classes_formula(ambient, ty)?;
    let atlas = enumerate_classes(ambient, ty);
    (atlas.entries.len() != formula).then(|| Discrepancy {
        ambient,
        ty: ty.kind_name().to_string(),
        m: ty.param(),
        formula_count: formula,
        enumerated_count: atlas.entries.len(),
        witness_specs: atlas.entries.into_iter().map(|e| e.spec).collect(),
    })
}

/// `2^m ≤ n`, and `2^{m+1} ≤ n` for the symmetric ambient when `m ≡ 2,3 mod 4`,
/// with `m = ⌊d/2⌋` and `n` the ambient degree.
pub fn spin_fits(ambient: AmbientKind, d: usize) -> bool {
    let m = d / 2;
    let n = ambient.degree();
    if m >= usize::BITS as usize - 1 || (1usize << m) > n {
        return false;
    }
    !(matches!(ambient, AmbientKind::SymmetricH(_)) && m % 4 >= 2 && (2usize << m) > n)
}

/// The three maximal cases: the full algebra of order `2^m` for `d = 2m+1`
/// with `m` odd, and the reversal-fixed part of order `2^m` (symmetric for
/// `m ≡ 0,1`, symplectic for `m ≡ 2,3`) for `d = 2m+1` with `m` even or `d = 2m`.
pub fn spin_maximality(ambient: AmbientKind, d: usize) -> bool {
    let m = d / 2;
    if m == 0 || m >= usize::BITS as usize - 1 {
        return false;
    }
    let order = 1usize << m;
    let odd = d % 2 == 1;
    let fixed_part = if m % 4 <= 1 {
        AmbientKind::SymmetricH(order)
    } else {
        AmbientKind::SymplecticH(order)
    };
    match ambient {
        AmbientKind::FullPlus(n) => odd && m % 2 == 1 && n == order,
        _ => (!odd || m % 2 == 0) && ambient == fixed_part,
    }
}
