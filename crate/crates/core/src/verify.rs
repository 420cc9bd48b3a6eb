//! Self-check suites over the catalog, invariants, Clifford data and θ machinery.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::automorphism::{apply_automorphism, random_exact_automorphism, theta_conjugator, theta_of};
use crate::catalog::{build, build_violations, CanonicalSpec};
use crate::clifford::{represented_involution_fixed_dim, spin_generators};
use crate::invariants::{
    count_formula_parts, enumerate_classes, k_invariant_envelope, k_invariant_spec, rank_of_identity, CountClause,
};
use crate::jordan::{closure_check_with, detect_type, jordan_product, AmbientKind, ProductFn, TypeLabel};
use crate::matrix::{ExactMatrix, Subspace};
use crate::scalar::GaussianRational as Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyLevel {
    Quick,
    Full,
}

impl VerifyLevel {
    fn max_order(self) -> usize {
        match self {
            Self::Quick => 8,
            Self::Full => 12,
        }
    }

    fn max_clifford(self) -> usize {
        match self {
            Self::Quick => 2,
            Self::Full => 4,
        }
    }

    fn automorphisms(self) -> u64 {
        match self {
            Self::Quick => 5,
            Self::Full => 25,
        }
    }

    fn automorphism_order(self) -> usize {
        match self {
            Self::Quick => 6,
            Self::Full => 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub level: VerifyLevel,
    pub seed: u64,
    /// The Jordan product under test; replaced only by mutation fixtures.
    pub product: ProductFn,
}

impl VerifyConfig {
    pub fn new(level: VerifyLevel, seed: u64) -> Self {
        Self {
            level,
            seed,
            product: jordan_product,
        }
    }
}

/// Mutation fixture: the plain matrix product in place of `∘`.
pub fn tampered_product(x: &ExactMatrix, y: &ExactMatrix) -> crate::error::Result<ExactMatrix> {
    x.mat_mul(y)
}

struct Suite {
    report: SuiteReport,
}

impl Suite {
    fn new(name: &str) -> Self {
        Self {
            report: SuiteReport {
                name: name.to_string(),
                cases_run: 0,
                failures: Vec::new(),
            },
        }
    }

    fn check(&mut self, case: impl FnOnce() -> String, expected: impl ToString, got: impl ToString) {
        self.report.cases_run += 1;
        let (e, g) = (expected.to_string(), got.to_string());
        if e != g {
            self.report.failures.push(Failure {
                case: case(),
                expected: e,
                got: g,
            });
        }
    }
}

pub fn ambients_up_to(max_order: usize) -> Vec<AmbientKind> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(AmbientKind::FullPlus(n));
        out.push(AmbientKind::SymmetricH(n));
        if n % 2 == 0 {
            out.push(AmbientKind::SymplecticH(n));
        }
    }
    out
}

/// Every matrix type whose parameter could fit some ambient of order `max_order`.
pub fn matrix_types_up_to(max_order: usize) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    for m in 1..=max_order {
        out.push(TypeLabel::FullPlus(m));
        out.push(TypeLabel::SymmetricH(m));
        out.push(TypeLabel::SymplecticH(m));
    }
    out
}

/// Every buildable matrix-type spec with ambient order ≤ `max_order`,
/// including unnormalized `(l, k)` orders.
pub fn buildable_specs(max_order: usize) -> Vec<CanonicalSpec> {
    let mut out = Vec::new();
    for ambient in ambients_up_to(max_order) {
        for ty in matrix_types_up_to(max_order) {
            let probe = CanonicalSpec::matrix(ambient, ty, 1, 0);
            let unit = probe.layout().unit();
            let cap = ambient.degree() / unit;
            for l in 0..=cap {
                for k in 0..=cap - l {
                    let spec = CanonicalSpec::matrix(ambient, ty, l, k);
                    if build_violations(&spec).is_empty() {
                        out.push(spec);
                    }
                }
            }
        }
    }
    out
}

fn label(spec: &CanonicalSpec) -> String {
    format!("{} in {} (l={}, k={}, s={})", spec.ty, spec.ambient, spec.l, spec.k, spec.s)
}

pub fn catalog_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut suite = Suite::new("catalog_integrity");
    for spec in buildable_specs(cfg.level.max_order()) {
        let case = || label(&spec);
        match build(&spec) {
            Ok(s) => {
                suite.check(case, true, closure_check_with(&s, cfg.product));
                suite.check(case, true, s.basis().iter().all(|b| spec.ambient.contains(b)));
                suite.check(case, spec.ty.dim(), s.dim());
                let got = detect_type(&s).map_or_else(|e| e.to_string(), |t| t.to_string());
                suite.check(case, spec.ty, got);
            }
            Err(e) => suite.check(case, "built", e),
        }
    }
    suite.report
}

fn random_element(ambient: AmbientKind, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut x = ExactMatrix::zeros(ambient.order(), ambient.order());
    for b in ambient.basis() {
        if rng.gen_bool(0.4) {
            x.add_scaled(&Q::gaussian(rng.gen_range(-3..=3), rng.gen_range(-1..=1)), &b);
        }
    }
    x
}

/// Commutativity and `(x∘y)∘(x∘x) = x∘(y∘(x∘x))` on seeded random triples.
pub fn jordan_axiom_failures(product: ProductFn, ambient: AmbientKind, seed: u64, triples: usize) -> Vec<Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let p = |a: &ExactMatrix, b: &ExactMatrix| product(a, b).expect("square operands");
    for t in 0..triples {
        let x = random_element(ambient, &mut rng);
        let y = random_element(ambient, &mut rng);
        let z = random_element(ambient, &mut rng);
        let case = || format!("{ambient} triple {t}");
        if p(&x, &y) != p(&y, &x) || p(&y, &z) != p(&z, &y) {
            out.push(Failure {
                case: case(),
                expected: "x∘y = y∘x".into(),
                got: "not commutative".into(),
            });
            continue;
        }
        let xx = p(&x, &x);
        if p(&p(&x, &y), &xx) != p(&x, &p(&y, &xx)) {
            out.push(Failure {
                case: case(),
                expected: "(x∘y)∘x² = x∘(y∘x²)".into(),
                got: "identity fails".into(),
            });
        }
        if !ambient.contains(&p(&x, &z)) {
            out.push(Failure {
                case: case(),
                expected: "x∘z in ambient".into(),
                got: "outside".into(),
            });
        }
    }
    out
}

pub fn axioms_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut suite = Suite::new("jordan_axioms");
    let triples = match cfg.level {
        VerifyLevel::Quick => 50,
        VerifyLevel::Full => 500,
    };
    for (i, ambient) in [AmbientKind::FullPlus(4), AmbientKind::SymmetricH(5), AmbientKind::SymplecticH(6)]
        .into_iter()
        .enumerate()
    {
        let f = jordan_axiom_failures(cfg.product, ambient, cfg.seed.wrapping_add(i as u64), triples);
        suite.report.cases_run += triples;
        suite.report.failures.extend(f);
    }
    suite.report
}

/// `2^{m−1}(2^m + 1)` for `m ≡ 0,1 mod 4`, `2^{m−1}(2^m − 1)` otherwise.
pub fn fixed_dim_formula(m: usize) -> usize {
    let half = 1usize << (m - 1);
    if m % 4 <= 1 {
        half * ((1 << m) + 1)
    } else {
        half * ((1 << m) - 1)
    }
}

pub fn clifford_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut suite = Suite::new("clifford_dimension_table");
    for m in 1..=cfg.level.max_clifford() {
        suite.check(
            || format!("m = {m}"),
            fixed_dim_formula(m),
            represented_involution_fixed_dim(m),
        );
    }
    suite.report
}

pub fn spin_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut suite = Suite::new("spin_relations");
    for d in 2..=2 * cfg.level.max_clifford().min(3) + 1 {
        let gens = spin_generators(d).expect("d ≥ 2");
        let id = ExactMatrix::identity(gens[0].rows());
        for i in 0..d {
            for j in 0..d {
                let want = if i == j { id.clone() } else { ExactMatrix::zeros(id.rows(), id.cols()) };
                let got = (cfg.product)(&gens[i], &gens[j]).map(|p| p == want).unwrap_or(false);
                suite.check(|| format!("d = {d}, x{} ∘ x{}", i + 1, j + 1), true, got);
            }
        }
    }
    suite.report
}

pub fn counts_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut suite = Suite::new("class_counts");
    let max = cfg.level.max_order();
    for ambient in ambients_up_to(max) {
        for ty in matrix_types_up_to(max) {
            let Some((clause, k, formula)) = count_formula_parts(ambient, ty) else {
                continue;
            };
            let atlas = enumerate_classes(ambient, ty);
            if atlas.entries.is_empty() {
                continue;
            }
            let expected = match clause {
                CountClause::Linear => formula,
                CountClause::HalfSum => (1..=k).map(|j| j / 2 + 1).sum(),
            };
            suite.check(|| format!("{ty} in {ambient}"), expected, atlas.entries.len());
        }
    }
    suite.report
}

pub fn k_agreement_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut suite = Suite::new("k_invariant_agreement");
    for spec in buildable_specs(cfg.level.max_order()) {
        if !matches!(spec.ambient, AmbientKind::FullPlus(_)) || k_invariant_spec(&spec).is_none() {
            continue;
        }
        let got = build(&spec).and_then(|s| k_invariant_envelope(&s));
        suite.check(
            || label(&spec),
            format!("{:?}", k_invariant_spec(&spec)),
            got.map_or_else(|e| e.to_string(), |v| format!("{v:?}")),
        );
    }
    suite.report
}

pub fn automorphism_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut suite = Suite::new("automorphism_invariance");
    let specs: Vec<CanonicalSpec> = buildable_specs(cfg.level.automorphism_order())
        .into_iter()
        .filter(|s| crate::catalog::canonicalize(s) == *s)
        .collect();
    for (i, spec) in specs.iter().enumerate() {
        let Ok(s) = build(spec) else { continue };
        let want = (rank_of_identity(&s).ok(), k_invariant_envelope(&s).ok().flatten());
        for t in 0..cfg.level.automorphisms() {
            let seed = cfg.seed.wrapping_mul(1_000_003).wrapping_add((i as u64) << 8 | t);
            let got = random_exact_automorphism(spec.ambient, seed)
                .and_then(|phi| apply_automorphism(&phi, &s))
                .map(|img| (rank_of_identity(&img).ok(), k_invariant_envelope(&img).ok().flatten()));
            suite.check(
                || format!("{} seed {seed}", label(spec)),
                format!("{want:?}"),
                got.map_or_else(|e| e.to_string(), |v| format!("{v:?}")),
            );
        }
    }
    suite.report
}

/// Spans of the mirrored family `diag(X, Xᵗ)` and the θ family `θ(A, B)`.
pub fn theta_families(half_n: usize) -> (Subspace, Subspace) {
    let n = 2 * half_n;
    let mut diag = Subspace::new(n, n);
    let mut form1 = Subspace::new(n, n);
    for i in 0..half_n {
        for j in 0..half_n {
            let x = ExactMatrix::unit(half_n, half_n, i, j);
            diag.insert(&ExactMatrix::block_diag(&[&x, &x.transpose()])).expect("shape");
            form1.insert(&theta_of(&x).expect("square")).expect("shape");
        }
    }
    (diag, form1)
}

/// Image of a subspace under `x ↦ S⁻¹ x S`.
pub fn conjugate_span(span: &Subspace, s: &ExactMatrix, s_inv: &ExactMatrix) -> Subspace {
    let (r, c) = span.shape();
    let mut out = Subspace::new(r, c);
    for b in span.basis() {
        out.insert(&(&(s_inv * &b) * s)).expect("shape");
    }
    out
}

pub fn theta_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut suite = Suite::new("theta_machinery");
    for h in 1..=4 {
        let s = theta_conjugator(h);
        let si = s.inverse().expect("S invertible");
        let (diag, form1) = theta_families(h);
        let image = conjugate_span(&diag, &s, &si);
        let same = image.dim() == form1.dim() && form1.contains_subspace(&image).unwrap_or(false);
        suite.check(|| format!("S of order {}", 2 * h), true, same);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs = match cfg.level {
        VerifyLevel::Quick => 20,
        VerifyLevel::Full => 100,
    };
    for t in 0..pairs {
        let h = 2 + t % 2;
        let x = ExactMatrix::from_fn(h, h, |_, _| Q::gaussian(rng.gen_range(-3..=3), rng.gen_range(-2..=2)));
        let y = ExactMatrix::from_fn(h, h, |_, _| Q::gaussian(rng.gen_range(-3..=3), rng.gen_range(-2..=2)));
        let lhs = theta_of(&(cfg.product)(&x, &y).expect("square")).expect("square");
        let rhs = (cfg.product)(&theta_of(&x).expect("square"), &theta_of(&y).expect("square")).expect("square");
        suite.check(|| format!("θ pair {t}"), true, lhs == rhs);
    }
    suite.report
}

/// Runs every suite in declared order.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let start = Instant::now();
    let suites = vec![
        catalog_suite(cfg),
        axioms_suite(cfg),
        clifford_suite(cfg),
        spin_suite(cfg),
        counts_suite(cfg),
        k_agreement_suite(cfg),
        automorphism_suite(cfg),
        theta_suite(cfg),
    ];
    VerifyReport {
        suites,
        wall_time: start.elapsed(),
    }
}
