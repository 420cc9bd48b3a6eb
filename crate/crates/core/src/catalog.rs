//! Canonical realizations of simple subalgebras and their size accounting.
//!
//! Every matrix family is built as the image of a parameter basis under a
//! block layout, so the dimension of the result equals the parameter
//! dimension and never depends on the number of copies.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::automorphism::{theta_embed, theta_of};
use crate::clifford::{chirality, reversal_form, spin_generators, symmetric_frame, symplectic_frame};
use crate::error::{Error, Result};
use crate::invariants::spin_fits;
use crate::jordan::{closure_check, skew_unit, sym_unit, AmbientKind, Subalgebra, TypeLabel};
use crate::matrix::{ExactMatrix, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinEmbedding {
    /// `dim V = 2m`: the gamma generators.
    #[serde(alias = "first")]
    FirstType,
    /// `dim V = 2m+1`: the gamma generators plus the chirality element.
    #[serde(alias = "second")]
    SecondType,
}

impl SpinEmbedding {
    pub fn for_dim(d: usize) -> Self {
        if d % 2 == 0 {
            Self::FirstType
        } else {
            Self::SecondType
        }
    }
}

/// `l` copies of `X`, `k` copies of `Xᵗ` (or paired blocks for the
/// symplectic-in-symplectic form) and `s` zero rows. For the symplectic
/// ambient all counts refer to the first half.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SpecWire", into = "SpecWire")]
pub struct CanonicalSpec {
    pub ambient: AmbientKind,
    pub ty: TypeLabel,
    pub l: usize,
    pub k: usize,
    pub s: usize,
    pub spin_embedding: Option<SpinEmbedding>,
}

#[derive(Serialize, Deserialize)]
struct SpecWire {
    ambient: AmbientKind,
    #[serde(rename = "type")]
    ty: String,
    m: usize,
    l: usize,
    #[serde(default)]
    k: usize,
    #[serde(default)]
    s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spin_embedding: Option<SpinEmbedding>,
}

impl TryFrom<SpecWire> for CanonicalSpec {
    type Error = Error;
    fn try_from(w: SpecWire) -> Result<Self> {
        let ty = TypeLabel::from_parts(&w.ty, w.m)?;
        let mut spec = CanonicalSpec {
            ambient: w.ambient,
            ty,
            l: w.l,
            k: w.k,
            s: 0,
            spin_embedding: w.spin_embedding,
        };
        spec.s = match w.s {
            Some(s) => s,
            None => spec.available().saturating_sub(spec.used()),
        };
        Ok(spec)
    }
}

impl From<CanonicalSpec> for SpecWire {
    fn from(c: CanonicalSpec) -> Self {
        SpecWire {
            ambient: c.ambient,
            ty: c.ty.kind_name().to_string(),
            m: c.ty.param(),
            l: c.l,
            k: c.k,
            s: Some(c.s),
            spin_embedding: c.spin_embedding,
        }
    }
}

/// How one copy of the type's image sits in the ambient rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// `diag(B,…,B, Bᵗ,…,Bᵗ, 0)` with blocks of order `block`.
    Diagonal { block: usize },
    /// `diag(A, Aᵗ)` with `A = diag(B,…,B, Bᵗ,…,Bᵗ, 0)` in the first half.
    Mirrored { block: usize },
    /// Blocks `[[a,b],[c,aᵗ]]` of order `2·half`: plain copies spread `a,b,c,aᵗ`
    /// over the four quadrants; paired copies sit whole in `A` with the transpose in `Aᵗ`.
    Split { half: usize },
}

impl Layout {
    /// Rows of the (first half of the) ambient used by one copy.
    pub fn unit(self) -> usize {
        match self {
            Self::Diagonal { block } | Self::Mirrored { block } => block,
            Self::Split { half } => half,
        }
    }
}

/// Which realization of a spin factor's block the catalog uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinBlock {
    /// The gamma image itself, order `2^m`.
    Plain,
    /// The gamma image conjugated to symmetric matrices, order `2^m`.
    Symmetric,
    /// θ of the gamma image, order `2^{m+1}`.
    Theta,
    /// The gamma image conjugated into the standard symplectic form, order `2^m`.
    Split,
}

/// The block realization for `Spin(d)` dictated by the ambient and `m mod 4`.
pub fn spin_block_kind(ambient: AmbientKind, d: usize) -> SpinBlock {
    let m = d / 2;
    let odd = d % 2 == 1;
    // The represented reversal is orthogonal for m ≡ 0,1 and symplectic for
    // m ≡ 2,3; it fixes the chirality element only for m even.
    let orthogonal = m % 4 <= 1 && (!odd || m % 2 == 0);
    match ambient {
        AmbientKind::FullPlus(_) => SpinBlock::Plain,
        AmbientKind::SymmetricH(_) if orthogonal => SpinBlock::Symmetric,
        AmbientKind::SymmetricH(_) => SpinBlock::Theta,
        AmbientKind::SymplecticH(_) if orthogonal => SpinBlock::Symmetric,
        AmbientKind::SymplecticH(_) if odd && m % 2 == 1 => SpinBlock::Plain,
        AmbientKind::SymplecticH(_) => SpinBlock::Split,
    }
}

impl CanonicalSpec {
    pub fn matrix(ambient: AmbientKind, ty: TypeLabel, l: usize, k: usize) -> Self {
        let mut spec = Self {
            ambient,
            ty,
            l,
            k,
            s: 0,
            spin_embedding: ty.is_spin().then(|| SpinEmbedding::for_dim(ty.param())),
        };
        spec.s = spec.available().saturating_sub(spec.used());
        spec
    }

    pub fn spin(ambient: AmbientKind, d: usize, l: usize, k: usize) -> Self {
        Self::matrix(ambient, TypeLabel::Spin(d), l, k)
    }

    /// `m` for matrix types, `dim V` for spin.
    pub fn m(&self) -> usize {
        self.ty.param()
    }

    pub fn layout(&self) -> Layout {
        let m = self.m();
        match (self.ambient, self.ty) {
            (AmbientKind::FullPlus(_), TypeLabel::SymplecticH(_)) => Layout::Diagonal { block: 2 * m },
            (AmbientKind::FullPlus(_), TypeLabel::Spin(d)) => Layout::Diagonal { block: 1 << (d / 2) },
            (AmbientKind::FullPlus(_), _) => Layout::Diagonal { block: m },
            (AmbientKind::SymmetricH(_), TypeLabel::FullPlus(_)) => Layout::Diagonal { block: 2 * m },
            (AmbientKind::SymmetricH(_), TypeLabel::SymmetricH(_)) => Layout::Diagonal { block: m },
            (AmbientKind::SymmetricH(_), TypeLabel::SymplecticH(_)) => Layout::Diagonal { block: 4 * m },
            (AmbientKind::SymmetricH(_), TypeLabel::Spin(d)) => match spin_block_kind(self.ambient, d) {
                SpinBlock::Theta => Layout::Diagonal { block: 2 << (d / 2) },
                _ => Layout::Diagonal { block: 1 << (d / 2) },
            },
            (AmbientKind::SymplecticH(_), TypeLabel::SymplecticH(_)) => Layout::Split { half: m },
            (AmbientKind::SymplecticH(_), TypeLabel::Spin(d)) => match spin_block_kind(self.ambient, d) {
                SpinBlock::Split => Layout::Split { half: 1 << (d / 2 - 1) },
                _ => Layout::Mirrored { block: 1 << (d / 2) },
            },
            (AmbientKind::SymplecticH(_), _) => Layout::Mirrored { block: m },
        }
    }

    /// Whether the form carries `Xᵗ` (or paired) blocks at all.
    pub fn allows_xt(&self) -> bool {
        match (self.ambient, self.ty) {
            (AmbientKind::FullPlus(_) | AmbientKind::SymplecticH(_), TypeLabel::FullPlus(_)) => true,
            (AmbientKind::SymplecticH(_), TypeLabel::SymplecticH(_)) => true,
            (_, TypeLabel::Spin(d)) => {
                d % 2 == 1 && d >= 3 && spin_block_kind(self.ambient, d) == SpinBlock::Plain
            }
            _ => false,
        }
    }

    /// Rows (of the first half, for the symplectic ambient) covered by blocks.
    pub fn used(&self) -> usize {
        self.layout().unit() * (self.l + self.k)
    }

    /// Rows available: the order, or half of it for the symplectic ambient.
    pub fn available(&self) -> usize {
        self.ambient.degree()
    }

    /// Rank of the identity of the built subalgebra, read off the layout.
    pub fn identity_rank(&self) -> usize {
        match self.layout() {
            Layout::Diagonal { .. } => self.used(),
            Layout::Mirrored { .. } | Layout::Split { .. } => 2 * self.used(),
        }
    }
}

/// One reason a spec does not describe a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    Ambient { reason: String },
    ZeroParameter,
    NoBlocks,
    SizeAccounting { used: usize, zero_pad: usize, available: usize },
    Overflow { used: usize, available: usize },
    TransposeBlocksUnsupported { k: usize },
    PairedExceedsBlocks { l: usize, k: usize },
    NotProper,
    DegreeTooSmall { degree: usize },
    AmbientDegreeTooSmall { degree: usize },
    SpinEmbeddingMissing,
    SpinEmbeddingUnexpected,
    SpinEmbeddingParity { d: usize, embedding: SpinEmbedding },
    SpinDoesNotFit { inequality: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ambient { reason } => write!(f, "invalid ambient: {reason}"),
            Self::ZeroParameter => write!(f, "type parameter must be positive"),
            Self::NoBlocks => write!(f, "l + k must be at least 1"),
            Self::SizeAccounting { used, zero_pad, available } => {
                write!(f, "size accounting: {used} block rows + {zero_pad} zero rows != {available}")
            }
            Self::Overflow { used, available } => {
                write!(f, "blocks need {used} rows but the ambient has {available}")
            }
            Self::TransposeBlocksUnsupported { k } => {
                write!(f, "this form has no transpose blocks, but k = {k}")
            }
            Self::PairedExceedsBlocks { l, k } => {
                write!(f, "paired blocks k = {k} exceed X-blocks l = {l}")
            }
            Self::NotProper => write!(f, "the family is the whole ambient, not a proper subalgebra"),
            Self::DegreeTooSmall { degree } => write!(f, "degree < 3 (type degree {degree})"),
            Self::AmbientDegreeTooSmall { degree } => {
                write!(f, "ambient degree < 3 (degree {degree})")
            }
            Self::SpinEmbeddingMissing => write!(f, "spin type needs spin_embedding"),
            Self::SpinEmbeddingUnexpected => write!(f, "spin_embedding given for a matrix type"),
            Self::SpinEmbeddingParity { d, embedding } => {
                write!(f, "dim V = {d} does not match embedding {embedding:?}")
            }
            Self::SpinDoesNotFit { inequality } => write!(f, "spin factor does not fit: {inequality}"),
        }
    }
}

fn spin_fit_violation(ambient: AmbientKind, d: usize) -> Option<Violation> {
    if spin_fits(ambient, d) {
        return None;
    }
    let m = d / 2;
    let n = ambient.degree();
    let inequality = if (1usize << m) > n {
        format!("2^m <= n fails: 2^{m} = {} > {n}", 1usize << m)
    } else {
        format!("2^(m+1) <= n fails for m = {m} ≡ {} mod 4: {} > {n}", m % 4, 2usize << m)
    };
    Some(Violation::SpinDoesNotFit { inequality })
}

/// Size accounting, applicability and spin existence checks. Matrix types
/// of degree below 3 pass here; `build` rejects them.
pub fn validate_spec(spec: &CanonicalSpec) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Err(e) = spec.ambient.validate() {
        out.push(Violation::Ambient { reason: e.to_string() });
        return out;
    }
    let param = spec.m();
    let is_spin = spec.ty.is_spin();
    if param == 0 || (is_spin && param < 2) {
        out.push(Violation::ZeroParameter);
        return out;
    }
    match (is_spin, spec.spin_embedding) {
        (true, None) => out.push(Violation::SpinEmbeddingMissing),
        (true, Some(e)) if e != SpinEmbedding::for_dim(param) => {
            out.push(Violation::SpinEmbeddingParity { d: param, embedding: e })
        }
        (false, Some(_)) => out.push(Violation::SpinEmbeddingUnexpected),
        _ => {}
    }
    if spec.l + spec.k == 0 {
        out.push(Violation::NoBlocks);
    }
    if spec.k > 0 && !spec.allows_xt() {
        out.push(Violation::TransposeBlocksUnsupported { k: spec.k });
    }
    if matches!(spec.layout(), Layout::Split { .. }) && !is_spin && spec.k > spec.l {
        out.push(Violation::PairedExceedsBlocks { l: spec.l, k: spec.k });
    }
    let (used, available) = (spec.used(), spec.available());
    if used > available {
        out.push(Violation::Overflow { used, available });
    } else if used + spec.s != available {
        out.push(Violation::SizeAccounting { used, zero_pad: spec.s, available });
    }
    if is_spin {
        let degree = spec.ambient.degree();
        if degree < 3 {
            out.push(Violation::AmbientDegreeTooSmall { degree });
        } else if let Some(v) = spin_fit_violation(spec.ambient, param) {
            out.push(v);
        }
    }
    if spec.ty.dim() >= spec.ambient.dim() {
        out.push(Violation::NotProper);
    }
    out
}

/// `validate_spec` plus the degree rule for matrix types.
pub fn build_violations(spec: &CanonicalSpec) -> Vec<Violation> {
    let mut out = validate_spec(spec);
    if !spec.ty.is_spin() && spec.m() < 3 {
        out.push(Violation::DegreeTooSmall { degree: spec.m() });
    }
    out
}

fn full_units(m: usize) -> Vec<ExactMatrix> {
    (0..m * m).map(|t| ExactMatrix::unit(m, m, t / m, t % m)).collect()
}

fn sym_units(m: usize) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i..m {
            out.push(sym_unit(m, i, j));
        }
    }
    out
}

fn skew_units(m: usize) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            out.push(skew_unit(m, i, j));
        }
    }
    out
}

/// Block images of the parameter basis, one per dimension of the type.
fn matrix_blocks(spec: &CanonicalSpec) -> Result<Vec<ExactMatrix>> {
    let m = spec.m();
    let symp = || AmbientKind::SymplecticH(2 * m).basis();
    Ok(match (spec.ambient, spec.ty) {
        (AmbientKind::SymmetricH(_), TypeLabel::FullPlus(_)) => {
            let zero = ExactMatrix::zeros(m, m);
            let mut out = Vec::new();
            for a in sym_units(m) {
                out.push(theta_embed(&a, &zero)?);
            }
            for b in skew_units(m) {
                out.push(theta_embed(&zero, &b)?);
            }
            out
        }
        (AmbientKind::SymmetricH(_), TypeLabel::SymplecticH(_)) => {
            // X = [[A−C, −B−D],[B−D, A+C]] maps to [[sym X, skew X],[−skew X, sym X]];
            // the span equals the θ-image because the sym and skew parts vary independently.
            let mut out = Vec::new();
            for x in symp() {
                let xt = x.transpose();
                let half = crate::scalar::GaussianRational::half();
                out.push(theta_embed(&(&x + &xt).scale(&half), &(&x - &xt).scale(&half))?);
            }
            out
        }
        (_, TypeLabel::FullPlus(_)) => full_units(m),
        (_, TypeLabel::SymmetricH(_)) => sym_units(m),
        (_, TypeLabel::SymplecticH(_)) => symp(),
        (_, TypeLabel::Spin(_)) => return Err(Error::Invariant("spin spec in matrix builder".into())),
    })
}

/// `I` followed by the images of `x_1, …, x_d`, in the block realization the ambient needs.
pub fn spin_blocks(ambient: AmbientKind, d: usize) -> Result<Vec<ExactMatrix>> {
    let gens = spin_generators(d)?;
    let m = d / 2;
    let order = 1usize << m;
    let mut out = vec![ExactMatrix::identity(order)];
    out.extend(gens);
    match spin_block_kind(ambient, d) {
        SpinBlock::Plain => Ok(out),
        SpinBlock::Theta => out.iter().map(theta_of).collect(),
        kind => {
            let c = reversal_form(m);
            let frame = if kind == SpinBlock::Symmetric {
                symmetric_frame(&c)
            } else {
                symplectic_frame(&c)
            };
            let p = frame.ok_or_else(|| Error::Invariant(format!("no frame for reversal form, m = {m}")))?;
            let pi = p.inverse()?;
            Ok(out.iter().map(|g| &(&pi * g) * &p).collect())
        }
    }
}

fn place(spec: &CanonicalSpec, x: &ExactMatrix) -> ExactMatrix {
    let n = spec.ambient.order();
    let mut out = ExactMatrix::zeros(n, n);
    let (l, k) = (spec.l, spec.k);
    match spec.layout() {
        Layout::Diagonal { block } | Layout::Mirrored { block } => {
            let xt = x.transpose();
            let mirrored = matches!(spec.layout(), Layout::Mirrored { .. });
            let h = n / 2;
            for c in 0..l + k {
                let b = if c < l { x } else { &xt };
                out.set_block(c * block, c * block, b);
                if mirrored {
                    let bt = if c < l { &xt } else { x };
                    out.set_block(h + c * block, h + c * block, bt);
                }
            }
        }
        Layout::Split { half } => {
            let h = n / 2;
            let (plain, paired) = if spec.ty.is_spin() { (l, 0) } else { (l - k, k) };
            let a = x.submatrix(0, 0, half, half);
            let b = x.submatrix(0, half, half, half);
            let c = x.submatrix(half, 0, half, half);
            let d = x.submatrix(half, half, half, half);
            for p in 0..plain {
                let r = p * half;
                out.set_block(r, r, &a);
                out.set_block(r, h + r, &b);
                out.set_block(h + r, r, &c);
                out.set_block(h + r, h + r, &d);
            }
            let xt = x.transpose();
            for q in 0..paired {
                let r = (plain + 2 * q) * half;
                out.set_block(r, r, x);
                out.set_block(h + r, h + r, &xt);
            }
        }
    }
    out
}

fn assemble(spec: &CanonicalSpec, blocks: &[ExactMatrix]) -> Result<Subalgebra> {
    let n = spec.ambient.order();
    let mut span = Subspace::new(n, n);
    for x in blocks {
        let y = place(spec, x);
        if !spec.ambient.contains(&y) {
            return Err(Error::Invariant(format!("built element leaves {}", spec.ambient)));
        }
        span.insert(&y)?;
    }
    let s = Subalgebra { ambient: spec.ambient, span };
    if s.dim() != spec.ty.dim() {
        return Err(Error::Invariant(format!(
            "built dimension {} != {} for {}",
            s.dim(),
            spec.ty.dim(),
            spec.ty
        )));
    }
    if !closure_check(&s) {
        return Err(Error::Invariant(format!("built family for {} is not closed", spec.ty)));
    }
    Ok(s)
}

pub fn build_matrix_canonical(spec: &CanonicalSpec) -> Result<Subalgebra> {
    if spec.ty.is_spin() {
        return Err(Error::Invariant("spin spec in matrix builder".into()));
    }
    let v = build_violations(spec);
    if !v.is_empty() {
        return Err(Error::SpecInvalid(v));
    }
    assemble(spec, &matrix_blocks(spec)?)
}

/// Reason the only block realizations left for a spin spec in a symmetric ambient are ruled out.
fn forbidden_spin(spec: &CanonicalSpec) -> Option<String> {
    let (AmbientKind::SymmetricH(n), TypeLabel::Spin(d)) = (spec.ambient, spec.ty) else {
        return None;
    };
    if spin_block_kind(spec.ambient, d) != SpinBlock::Theta || (2usize << (d / 2)) * (spec.l + spec.k).max(1) <= n {
        return None;
    }
    let m = d / 2;
    let reason = if d % 2 == 0 {
        let c = reversal_form(m);
        format!(
            "for m = {m} the represented reversal has skew form (skew: {}), fixing {} dimensions instead of {}, so the first-type image is not symmetrizable; the θ realization needs order {}",
            c.is_skew(),
            (1usize << (m - 1)) * ((1 << m) - 1),
            (1usize << (m - 1)) * ((1 << m) + 1),
            2usize << m
        )
    } else {
        let c = reversal_form(m);
        let w = chirality(m);
        let fixed = &(&c.inverse().ok()? * &w.transpose()) * &c == w;
        format!(
            "for m = {m} the symmetric realization of the second type is unavailable (reversal form symmetric: {}, chirality fixed: {fixed}); the θ realization needs order {}",
            c.is_symmetric(),
            2usize << m
        )
    };
    Some(reason)
}

pub fn build_spin_canonical(spec: &CanonicalSpec) -> Result<Subalgebra> {
    let TypeLabel::Spin(d) = spec.ty else {
        return Err(Error::Invariant("matrix spec in spin builder".into()));
    };
    if let Some(reason) = forbidden_spin(spec) {
        return Err(Error::EmbeddingUnavailable(reason));
    }
    let v = build_violations(spec);
    if !v.is_empty() {
        return Err(Error::SpecInvalid(v));
    }
    assemble(spec, &spin_blocks(spec.ambient, d)?)
}

pub fn build(spec: &CanonicalSpec) -> Result<Subalgebra> {
    if spec.ty.is_spin() {
        build_spin_canonical(spec)
    } else {
        build_matrix_canonical(spec)
    }
}

/// `l ≥ k` and `s` recomputed from the accounting. Idempotent.
pub fn canonicalize(spec: &CanonicalSpec) -> CanonicalSpec {
    let mut out = spec.clone();
    if out.allows_xt() && out.k > out.l && !matches!(out.layout(), Layout::Split { .. }) {
        std::mem::swap(&mut out.l, &mut out.k);
    }
    out.s = out.available().saturating_sub(out.used());
    out
}

/// Every valid normalized spec of `ty` in `ambient`, ordered by `(l+k, l)`.
pub fn normalized_specs(ambient: AmbientKind, ty: TypeLabel) -> Vec<CanonicalSpec> {
    let probe = CanonicalSpec::matrix(ambient, ty, 1, 0);
    let unit = probe.layout().unit().max(1);
    let max = ambient.degree() / unit;
    let mut out = Vec::new();
    for j in 1..=max {
        for k in 0..=j / 2 {
            if k > 0 && !probe.allows_xt() {
                break;
            }
            let spec = CanonicalSpec::matrix(ambient, ty, j - k, k);
            if validate_spec(&spec).is_empty() {
                out.push(spec);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{detect_type, identity_idempotent};

    fn full(n: usize) -> AmbientKind {
        AmbientKind::FullPlus(n)
    }

    #[test]
    fn validate_examples() {
        let ok = CanonicalSpec::matrix(full(7), TypeLabel::SymmetricH(2), 3, 0);
        assert_eq!(ok.s, 1);
        assert!(validate_spec(&ok).is_empty());
        let spin = CanonicalSpec::spin(AmbientKind::SymmetricH(8), 4, 1, 0);
        assert!(validate_spec(&spin).is_empty(), "{:?}", validate_spec(&spin));
        let over = CanonicalSpec::matrix(full(5), TypeLabel::FullPlus(3), 1, 1);
        assert!(validate_spec(&over).contains(&Violation::Overflow { used: 6, available: 5 }));
        let mut pad = CanonicalSpec::matrix(full(7), TypeLabel::FullPlus(3), 1, 0);
        pad.s = 1;
        assert!(matches!(validate_spec(&pad)[..], [Violation::SizeAccounting { .. }]));
        let xt = CanonicalSpec::matrix(full(7), TypeLabel::SymmetricH(3), 1, 1);
        assert!(validate_spec(&xt).contains(&Violation::TransposeBlocksUnsupported { k: 1 }));
        let whole = CanonicalSpec::matrix(AmbientKind::SymmetricH(4), TypeLabel::SymmetricH(4), 1, 0);
        assert!(validate_spec(&whole).contains(&Violation::NotProper));
    }

    #[test]
    fn build_examples() {
        let s = build(&CanonicalSpec::matrix(AmbientKind::SymmetricH(4), TypeLabel::SymmetricH(3), 1, 0)).unwrap();
        assert_eq!(s.dim(), 6);
        for b in s.basis() {
            assert!(b.submatrix(3, 0, 1, 4).is_zero() && b.submatrix(0, 3, 4, 1).is_zero());
        }
        let s = build(&CanonicalSpec::matrix(full(6), TypeLabel::FullPlus(3), 1, 1)).unwrap();
        assert_eq!(s.dim(), 9);
        for b in s.basis() {
            assert_eq!(b.submatrix(3, 3, 3, 3), b.submatrix(0, 0, 3, 3).transpose());
        }
        let err = build(&CanonicalSpec::matrix(AmbientKind::SymplecticH(4), TypeLabel::SymplecticH(2), 1, 0));
        match err {
            Err(Error::SpecInvalid(v)) => assert!(v.iter().any(|x| x.to_string().contains("degree < 3"))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn symplectic_in_symmetric_block_pattern() {
        // Oracle: the 4-block [[A,−B,−C,−D],[B,A,−D,C],[C,D,A,−B],[D,−C,B,A]].
        let m = 3;
        let s = build(&CanonicalSpec::matrix(AmbientKind::SymmetricH(12), TypeLabel::SymplecticH(m), 1, 0)).unwrap();
        for x in s.basis() {
            let blk = |i: usize, j: usize| x.submatrix(i * m, j * m, m, m);
            let (a, b, c, d) = (blk(0, 0), blk(1, 0), blk(2, 0), blk(3, 0));
            assert!(a.is_symmetric() && b.is_skew() && c.is_skew() && d.is_skew());
            let want = [
                [a.clone(), -&b, -&c, -&d],
                [b.clone(), a.clone(), -&d, c.clone()],
                [c.clone(), d.clone(), a.clone(), -&b],
                [d.clone(), -&c, b.clone(), a.clone()],
            ];
            for (i, row) in want.iter().enumerate() {
                for (j, w) in row.iter().enumerate() {
                    assert_eq!(&blk(i, j), w);
                }
            }
        }
        assert_eq!(detect_type(&s).unwrap(), TypeLabel::SymplecticH(m));
    }

    #[test]
    fn every_form_round_trips() {
        let cases = [
            CanonicalSpec::matrix(full(9), TypeLabel::FullPlus(3), 2, 1),
            CanonicalSpec::matrix(full(8), TypeLabel::SymmetricH(4), 2, 0),
            CanonicalSpec::matrix(full(7), TypeLabel::SymplecticH(3), 1, 0),
            CanonicalSpec::matrix(AmbientKind::SymmetricH(7), TypeLabel::FullPlus(3), 1, 0),
            CanonicalSpec::matrix(AmbientKind::SymmetricH(7), TypeLabel::SymmetricH(3), 2, 0),
            CanonicalSpec::matrix(AmbientKind::SymplecticH(14), TypeLabel::FullPlus(3), 1, 1),
            CanonicalSpec::matrix(AmbientKind::SymplecticH(8), TypeLabel::SymmetricH(3), 1, 0),
            CanonicalSpec::matrix(AmbientKind::SymplecticH(18), TypeLabel::SymplecticH(3), 2, 1),
        ];
        for spec in cases {
            let s = build(&spec).unwrap();
            assert_eq!(detect_type(&s).unwrap(), spec.ty, "{spec:?}");
            assert_eq!(identity_idempotent(&s).unwrap().rank(), spec.identity_rank(), "{spec:?}");
        }
    }

    #[test]
    fn spin_examples() {
        let s = build(&CanonicalSpec::spin(full(4), 4, 1, 0)).unwrap();
        assert_eq!(s.dim(), 5);
        let mut want = vec![ExactMatrix::identity(4)];
        want.extend(crate::clifford::gamma_rep(2).gammas);
        assert_eq!(s.span, crate::matrix::subspace_from(&want).unwrap());
        let s5 = build(&CanonicalSpec::spin(full(4), 5, 1, 0)).unwrap();
        assert_eq!(s5.dim(), 6);
        assert!(matches!(
            build(&CanonicalSpec::spin(AmbientKind::SymmetricH(4), 4, 1, 0)),
            Err(Error::EmbeddingUnavailable(_))
        ));
        assert!(matches!(
            build(&CanonicalSpec::spin(AmbientKind::SymmetricH(8), 6, 1, 0)),
            Err(Error::EmbeddingUnavailable(_))
        ));
    }

    #[test]
    fn spin_forms_round_trip() {
        let cases = [
            CanonicalSpec::spin(full(8), 4, 2, 0),
            CanonicalSpec::spin(full(6), 3, 2, 1),
            CanonicalSpec::spin(AmbientKind::SymmetricH(5), 2, 2, 0),
            CanonicalSpec::spin(AmbientKind::SymmetricH(8), 4, 1, 0),
            CanonicalSpec::spin(AmbientKind::SymmetricH(9), 5, 1, 0),
            CanonicalSpec::spin(AmbientKind::SymmetricH(4), 3, 1, 0),
            CanonicalSpec::spin(AmbientKind::SymplecticH(8), 2, 2, 0),
            CanonicalSpec::spin(AmbientKind::SymplecticH(8), 3, 1, 1),
            CanonicalSpec::spin(AmbientKind::SymplecticH(8), 4, 2, 0),
            CanonicalSpec::spin(AmbientKind::SymplecticH(8), 5, 1, 0),
            CanonicalSpec::spin(AmbientKind::SymplecticH(16), 6, 1, 0),
        ];
        for spec in cases {
            assert!(validate_spec(&spec).is_empty(), "{spec:?}: {:?}", validate_spec(&spec));
            let s = build(&spec).unwrap();
            assert_eq!(detect_type(&s).unwrap(), spec.ty, "{spec:?}");
            assert_eq!(identity_idempotent(&s).unwrap().rank(), spec.identity_rank(), "{spec:?}");
        }
    }

    #[test]
    fn spin_fit_violation_named() {
        let v = validate_spec(&CanonicalSpec::spin(AmbientKind::SymmetricH(7), 4, 1, 0));
        assert!(v.iter().any(|x| x.to_string().contains("2^(m+1) <= n")), "{v:?}");
        let v = validate_spec(&CanonicalSpec::spin(full(3), 4, 1, 0));
        assert!(v.iter().any(|x| x.to_string().contains("2^m <= n")), "{v:?}");
    }

    #[test]
    fn canonicalize_examples() {
        let a = CanonicalSpec::matrix(full(9), TypeLabel::FullPlus(3), 1, 2);
        let c = canonicalize(&a);
        assert_eq!((c.l, c.k), (2, 1));
        assert_eq!(canonicalize(&c), c);
        let b = CanonicalSpec::matrix(full(9), TypeLabel::SymmetricH(3), 2, 0);
        assert_eq!(canonicalize(&b), b);
        let d = CanonicalSpec::matrix(AmbientKind::SymplecticH(18), TypeLabel::FullPlus(3), 0, 3);
        let c = canonicalize(&d);
        assert_eq!((c.l, c.k, c.s), (3, 0, 0));
    }

    #[test]
    fn spec_json_roundtrip() {
        let spec = CanonicalSpec::spin(AmbientKind::SymmetricH(8), 4, 1, 0);
        let j = serde_json::to_string(&spec).unwrap();
        assert!(j.contains("\"type\":\"spin\""), "{j}");
        assert_eq!(serde_json::from_str::<CanonicalSpec>(&j).unwrap(), spec);
        let short: CanonicalSpec =
            serde_json::from_str(r#"{"ambient":{"kind":"full","n":7},"type":"sym","m":2,"l":3}"#).unwrap();
        assert_eq!(short, CanonicalSpec::matrix(full(7), TypeLabel::SymmetricH(2), 3, 0));
    }
}
