//! Seeded verification suites: randomized identities, dual-route
//! cross-checks, and exhaustive small-field comparisons.
//!
//! Each suite counts its checks and failures; a fixed seed makes the whole
//! run reproducible. The oracles here (direct-sum search, boolean-matrix
//! transitive reduction, orbit closure by breadth-first search) are kept
//! independent of the implementation paths they validate.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::census::{
    canonical_partition, census_by_group_action, census_by_label, dimension_audit,
    enumerate_points, group_generators,
};
use crate::classify::{classify, extract_parameter};
use crate::config::{Configuration, ProjectivePoint};
use crate::field::FieldCtx;
use crate::invariant::{
    eval_pp, eval_pp_form2, eval_pp_form3, eval_pp_raw, is_pp_irreducible,
    is_pp_reducible_by_factor_search,
};
use crate::label::OrbitLabel;
use crate::linalg::Matrix;
use crate::param::ProjParam;
use crate::rankfn::compute_pi;
use crate::s4::{psi_with_generators, s4_act, Perm4, PSI_GEN_MID, PSI_GEN_SWAP};
use crate::sampling::{
    random_config, random_invertible, random_matrix, random_perm, random_primed_param,
    random_stratified_config,
};
use crate::splitting::{compute_varpi, Splitting};
use crate::{closure, stab};

/// Options for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub trials: u64,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 1000, seed: 0 }
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> SuiteOutcome {
        SuiteOutcome { name, checks: 0, failures: 0, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.notes.len() < 8 {
                self.notes.push(note());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs every suite with the canonical generator table.
pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteOutcome> {
    run_all_with(opts, false)
}

/// Runs every suite; with `corrupt_psi` the parameter-action suite is fed a
/// wrong generator matrix. Negative-control fixture: the run must fail.
pub fn run_all_with(opts: &VerifyOptions, corrupt_psi: bool) -> Vec<SuiteOutcome> {
    vec![
        plucker_suite(opts),
        psi_suite(opts, corrupt_psi),
        splitting_suite(opts),
        matroid_suite(opts),
        closure_suite(opts),
        orbit5p_suite(opts),
        equivariance_suite(opts),
        roundtrip_suite(opts),
        census_suite(opts),
    ]
}

fn fields_for_random_checks() -> Vec<FieldCtx> {
    vec![FieldCtx::Rational, FieldCtx::prime(7).expect("7 is prime")]
}

/// Quadratic identity on 2-minors and agreement of the three forms of the
/// parameterized invariant.
fn plucker_suite(opts: &VerifyOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("plucker");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x706c);
    for field in fields_for_random_checks() {
        for _ in 0..opts.trials {
            let m = random_matrix(&mut rng, field, 2, 4);
            let d = |i, j| m.minor2(i, j).expect("2x4 shape");
            let plucker = d(0, 1)
                .mul(&d(2, 3))
                .add(&d(0, 2).mul(&d(3, 1)))
                .add(&d(0, 3).mul(&d(1, 2)));
            out.check(plucker.is_zero(), || format!("minor identity fails on {m}"));
            if let Some(p) = random_primed_param(&mut rng, field) {
                let a = eval_pp(&p, &m).expect("2x4 shape");
                let b = eval_pp_form2(&p, &m).expect("2x4 shape");
                let c = eval_pp_form3(&p, &m).expect("2x4 shape");
                out.check(a == b && a == c, || format!("invariant forms disagree on {m}"));
            }
        }
    }
    out
}

/// Homomorphism property, kernel, and transformation law of the parameter
/// action.
fn psi_suite(opts: &VerifyOptions, corrupt: bool) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("psi");
    let gen_swap = if corrupt { [[1, 1], [0, 1]] } else { PSI_GEN_SWAP };
    let gen_mid = PSI_GEN_MID;
    let psi = |sigma: &Perm4| psi_with_generators(sigma, &gen_swap, &gen_mid);
    let mat_mul = |a: [[i64; 2]; 2], b: [[i64; 2]; 2]| {
        let mut r = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        r
    };
    let all = Perm4::all();
    for a in &all {
        for b in &all {
            out.check(psi(&a.compose(b)) == mat_mul(psi(a), psi(b)), || {
                format!("homomorphism fails at {a} . {b}")
            });
        }
    }
    // Kernel must be exactly the Klein four-group.
    let id = [[1, 0], [0, 1]];
    let klein = [
        Perm4::identity(),
        Perm4::from_images([2, 1, 4, 3]).expect("valid"),
        Perm4::from_images([3, 4, 1, 2]).expect("valid"),
        Perm4::from_images([4, 3, 2, 1]).expect("valid"),
    ];
    for sigma in &all {
        let in_kernel = psi(sigma) == id;
        let in_klein = klein.contains(sigma);
        out.check(in_kernel == in_klein, || format!("kernel mismatch at {sigma}"));
    }
    // Transformation law on the generators: P_p(sigma^{-1} x) = P_{psi(sigma) p}(x).
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7073);
    let generators = [
        Perm4::transposition(1, 2).expect("valid"),
        Perm4::transposition(2, 3).expect("valid"),
        Perm4::transposition(3, 4).expect("valid"),
    ];
    for field in fields_for_random_checks() {
        for _ in 0..opts.trials.min(500) {
            let m = random_matrix(&mut rng, field, 2, 4);
            let Some(p) = random_primed_param(&mut rng, field) else { continue };
            for sigma in &generators {
                // Generators are involutions, so sigma^{-1} x = sigma x.
                let permuted = permute_matrix_cols(&m, sigma);
                let lhs = eval_pp(&p, &permuted).expect("2x4 shape");
                let g = psi(sigma);
                let e = |v: i64| field.from_int(v);
                let p1 = e(g[0][0]).mul(p.x()).add(&e(g[0][1]).mul(p.y()));
                let p2 = e(g[1][0]).mul(p.x()).add(&e(g[1][1]).mul(p.y()));
                let rhs = eval_pp_raw(&p1, &p2, &m).expect("2x4 shape");
                out.check(lhs == rhs, || format!("transformation law fails at {sigma}"));
            }
            // Klein elements move no parameter.
            for sigma in &klein {
                let g = psi(sigma);
                let moved = p.apply_int_matrix(&g).expect("invertible");
                out.check(moved == p, || format!("kernel element {sigma} moves {p}"));
            }
        }
    }
    out
}

fn permute_matrix_cols(m: &Matrix, sigma: &Perm4) -> Matrix {
    let inv = sigma.inverse();
    let mut data = Vec::with_capacity(8);
    for r in 0..2 {
        for c in 1..=4u8 {
            data.push(m.at(r, inv.apply(c) as usize - 1).clone());
        }
    }
    Matrix::new(m.field(), 2, 4, data).expect("permutation preserves the shape")
}

/// The splitting recovered from the rank function agrees with a direct
/// search for direct-sum decompositions, and behaves under permutation.
fn splitting_suite(opts: &VerifyOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("splitting");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7370);
    for field in fields_for_random_checks() {
        for t in 0..opts.trials {
            let n = 2 + (t % 3) as usize;
            let m = 2 + (t % 4) as usize;
            let cfg = random_config(&mut rng, field, n, m);
            let fast = compute_varpi(&cfg);
            let slow = varpi_by_decomposition_search(&cfg);
            out.check(fast == slow, || format!("splitting routes disagree on {cfg}"));
        }
    }
    // Permuting columns and transporting back is the identity.
    for _ in 0..opts.trials.min(500) {
        let cfg = random_config(&mut rng, FieldCtx::Rational, 3, 4);
        let sigma = random_perm(&mut rng);
        let direct = compute_varpi(&cfg);
        let permuted = cfg.permuted(&sigma).expect("m = 4");
        let images: Vec<usize> = (1..=4u8).map(|i| sigma.apply(i) as usize - 1).collect();
        let transported = compute_varpi(&permuted)
            .permuted_by(&inverse_images(&images))
            .expect("valid permutation");
        out.check(direct == transported, || {
            format!("splitting not equivariant for {cfg} under {sigma}")
        });
    }
    out
}

fn inverse_images(images: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; images.len()];
    for (i, &v) in images.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// Finest direct-sum decomposition by explicit search, as an oracle for the
/// merge-based splitting computation.
pub fn varpi_by_decomposition_search(cfg: &Configuration) -> Splitting {
    fn rank_of(cfg: &Configuration, mask: u32) -> usize {
        let cols: Vec<ProjectivePoint> = (0..cfg.m())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| cfg.column(i).clone())
            .collect();
        Configuration::new(cfg.field(), cfg.n(), cols)
            .expect("subset of a valid configuration")
            .as_matrix()
            .rank()
    }
    fn split(cfg: &Configuration, mask: u32, out: &mut Vec<u32>) {
        let total = rank_of(cfg, mask);
        let low = mask & mask.wrapping_neg();
        let others = mask & !low;
        // Proper sub-splits containing the lowest element.
        let mut sub = others;
        while sub != 0 {
            sub = (sub - 1) & others;
            let a = low | sub;
            let b = mask & !a;
            if b == 0 {
                continue;
            }
            if rank_of(cfg, a) + rank_of(cfg, b) == total {
                split(cfg, a, out);
                split(cfg, b, out);
                return;
            }
        }
        out.push(mask);
    }
    let full = (1u32 << cfg.m()) - 1;
    let mut blocks = Vec::new();
    split(cfg, full, &mut blocks);
    let blocks = blocks.into_iter().map(|b| (b, rank_of(cfg, b) as u8)).collect();
    Splitting::new(cfg.m(), blocks).expect("search blocks partition [m]")
}

/// Matroid axioms for computed rank functions and invariance of the
/// classification data under the group action.
fn matroid_suite(opts: &VerifyOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("matroid");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x6d74);
    for field in fields_for_random_checks() {
        for t in 0..opts.trials {
            let n = 2 + (t % 3) as usize;
            let m = 2 + (t % 4) as usize;
            let cfg = random_config(&mut rng, field, n, m);
            let phi = compute_pi(&cfg);
            out.check(phi.is_matroid_rank(), || format!("axioms fail on {cfg}"));
            let g = random_invertible(&mut rng, field, n);
            let moved = cfg.transformed(&g).expect("invertible action");
            out.check(compute_pi(&moved) == phi, || {
                format!("rank function moves under the action on {cfg}")
            });
            out.check(compute_varpi(&moved) == compute_varpi(&cfg), || {
                format!("splitting moves under the action on {cfg}")
            });
        }
    }
    out
}

/// Closure cross-checks: the minor route against the rank route, the
/// closure list of the parameterized orbit, and the Hasse covers against a
/// boolean-matrix transitive reduction.
fn closure_suite(opts: &VerifyOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("closure");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x636c);
    let labels = OrbitLabel::all_labels(None).expect("discrete labels");
    for _ in 0..opts.trials {
        let cfg = random_stratified_config(&mut rng, FieldCtx::Rational);
        let pi = compute_pi(&cfg);
        for l in &labels {
            let phi = l.phi();
            let by_minors = closure::in_closure_by_minors(&cfg, &phi);
            let by_rank = pi.leq(&phi).expect("m = 4");
            out.check(by_minors == by_rank, || {
                format!("closure routes disagree on {cfg} vs {l}")
            });
        }
    }
    // The invariant vanishes on the flat representatives of the single-line
    // degenerations but not on the two-line pair class.
    for _ in 0..opts.trials.min(200) {
        let Some(p) = random_primed_param(&mut rng, FieldCtx::Rational) else { break };
        let flat = |cols: &[&[i64]]| {
            Configuration::from_int_columns(FieldCtx::Rational, 2, cols)
                .expect("valid columns")
                .as_matrix()
        };
        let pair_rep = flat(&[&[1, 0], &[1, 0], &[0, 1], &[0, 1]]);
        out.check(!eval_pp(&p, &pair_rep).expect("shape").is_zero(), || {
            format!("invariant vanishes on the pair class at p = {p}")
        });
        for i in 0..4usize {
            let mut cols: Vec<Vec<i64>> = vec![vec![0, 1]; 4];
            cols[i] = vec![1, 0];
            let refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
            let single_rep = flat(&refs);
            out.check(eval_pp(&p, &single_rep).expect("shape").is_zero(), || {
                format!("invariant misses the single-line class {i} at p = {p}")
            });
        }
    }
    // Hasse covers equal the transitive reduction of the full relation.
    for _ in 0..3 {
        let Some(p) = random_primed_param(&mut rng, FieldCtx::Rational) else { break };
        let computed = closure::hasse(&p).expect("primed parameter");
        let oracle = transitive_reduction_oracle(&p).expect("primed parameter");
        out.check(computed == oracle, || format!("cover sets differ at p = {p}"));
    }
    out
}

/// Covers of the closure order computed by boolean matrix composition:
/// an edge is a cover iff it is in the strict relation but not in its
/// square. Independent of the scan used by `closure::hasse`.
pub fn transitive_reduction_oracle(p: &ProjParam) -> crate::error::Result<Vec<closure::HasseEdge>> {
    let labels = OrbitLabel::all_labels(Some(p))?;
    let k = labels.len();
    let mut strict = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            strict[i][j] = i != j && closure::closure_contains(&labels[i], &labels[j]);
        }
    }
    let mut square = vec![vec![false; k]; k];
    for i in 0..k {
        for (mid, row) in strict.iter().enumerate() {
            if strict[i][mid] {
                for j in 0..k {
                    square[i][j] |= row[j];
                }
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if strict[i][j] && !square[i][j] {
                edges.push(closure::HasseEdge {
                    upper: labels[i].clone(),
                    lower: labels[j].clone(),
                });
            }
        }
    }
    edges.sort();
    Ok(edges)
}

fn orbit5p_suite(_opts: &VerifyOptions) -> SuiteOutcome {
    orbit5p_exhaustive_suite(&[3, 5, 7])
}

/// Exhaustive membership characterization of the parameterized orbit over
/// small prime fields, against breadth-first orbit closure: for every
/// primed parameter, the set cut out by the minor conditions and the
/// vanishing invariant equals the direct orbit of the normal form, and the
/// full zero set decomposes as orbit plus single-line degenerations plus
/// the diagonal class.
pub fn orbit5p_exhaustive_suite(qs: &[u64]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("orbit5p");
    for &q in qs {
        if let Err(e) = orbit5p_exhaustive(q, &mut out) {
            out.check(false, || format!("exhaustive run failed at q = {q}: {e}"));
        }
    }
    out
}

fn orbit5p_exhaustive(q: u64, out: &mut SuiteOutcome) -> crate::error::Result<()> {
    let field = FieldCtx::prime(q)?;
    let points = enumerate_points(q, 2)?;
    let np = points.len();
    let index: std::collections::HashMap<&ProjectivePoint, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let perms: Vec<Vec<usize>> = group_generators(field, 2)
        .into_iter()
        .map(|g| {
            points
                .iter()
                .map(|p| {
                    let moved =
                        ProjectivePoint::normalize(g.apply(p.coords()).expect("2d point"))
                            .expect("invertible generator");
                    index[&moved]
                })
                .collect()
        })
        .collect();

    let all_tuples: Vec<[usize; 4]> = {
        let mut v = Vec::with_capacity(np.pow(4));
        for a in 0..np {
            for b in 0..np {
                for c in 0..np {
                    for d in 0..np {
                        v.push([a, b, c, d]);
                    }
                }
            }
        }
        v
    };
    let tuple_id = |t: &[usize; 4]| ((t[0] * np + t[1]) * np + t[2]) * np + t[3];
    let cfg_of = |t: &[usize; 4]| {
        Configuration::new(field, 2, t.iter().map(|&i| points[i].clone()).collect())
            .expect("points share the field")
    };
    let labels: Vec<OrbitLabel> = all_tuples
        .iter()
        .map(|t| classify(&cfg_of(t)).expect("planar quadruples classify"))
        .collect();

    let point_idx = |x: i64, y: i64| index[&ProjectivePoint::from_ints(field, &[x, y]).unwrap()];
    for a in 0..q as i64 {
        // Primed parameters in the affine chart: a not in {0, 1}.
        if a == 0 || a == 1 {
            continue;
        }
        let p = ProjParam::from_ints(field, 1, a)?;
        let base = [point_idx(1, 0), point_idx(0, 1), point_idx(1, 1), point_idx(1, a)];

        // Orbit of the normal form by breadth-first closure.
        let mut in_orbit = vec![false; all_tuples.len()];
        let mut queue = std::collections::VecDeque::new();
        in_orbit[tuple_id(&base)] = true;
        queue.push_back(base);
        while let Some(t) = queue.pop_front() {
            for perm in &perms {
                let moved = [perm[t[0]], perm[t[1]], perm[t[2]], perm[t[3]]];
                let id = tuple_id(&moved);
                if !in_orbit[id] {
                    in_orbit[id] = true;
                    queue.push_back(moved);
                }
            }
        }

        for (k, t) in all_tuples.iter().enumerate() {
            let cfg = cfg_of(t);
            let member = crate::invariant::in_orbit5p(&cfg, &p)?;
            out.check(member == in_orbit[k], || {
                format!("membership mismatch at q={q}, a={a}, tuple {t:?}")
            });
            // Zero set of the invariant = orbit + single-line degenerations
            // + the diagonal class.
            let vanishes = eval_pp(&p, &cfg.as_matrix())?.is_zero();
            let in_union = in_orbit[k]
                || matches!(labels[k], OrbitLabel::Phi4Single(_) | OrbitLabel::Phi2);
            out.check(vanishes == in_union, || {
                format!("zero-set decomposition fails at q={q}, a={a}, tuple {t:?}")
            });
        }
    }
    Ok(())
}

/// Column permutations act on labels the way the label action says, and
/// the label itself never moves under the group.
fn equivariance_suite(opts: &VerifyOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("equivariance");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x6571);
    for field in [FieldCtx::Rational, FieldCtx::prime(5).expect("prime")] {
        for _ in 0..opts.trials {
            let cfg = random_stratified_config(&mut rng, field);
            let sigma = random_perm(&mut rng);
            let label = classify(&cfg).expect("classifies");
            let lhs = classify(&cfg.permuted(&sigma).expect("m = 4")).expect("classifies");
            let rhs = s4_act(&sigma, &label);
            out.check(lhs == rhs, || format!("equivariance fails on {cfg} under {sigma}"));
            let g = random_invertible(&mut rng, field, 3);
            let moved = classify(&cfg.transformed(&g).expect("invertible")).expect("classifies");
            out.check(moved == label, || format!("label moves under the action on {cfg}"));
        }
    }
    // The extracted parameter is constant on orbits.
    for _ in 0..opts.trials.min(300) {
        let Some(p) = random_primed_param(&mut rng, FieldCtx::Rational) else { break };
        let rep = OrbitLabel::o5(p.clone())
            .expect("primed")
            .representative(FieldCtx::Rational)
            .expect("orbit label");
        let g = random_invertible(&mut rng, FieldCtx::Rational, 3);
        let moved = rep.transformed(&g).expect("invertible");
        let extracted = extract_parameter(&moved).expect("stays in the stratum");
        out.check(extracted == p, || format!("parameter moves under the action: {p}"));
    }
    out
}

/// Representative round-trips and the irreducibility criterion against the
/// factor-search oracle.
fn roundtrip_suite(opts: &VerifyOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("roundtrip");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7274);
    let mut labels = OrbitLabel::all_labels(None).expect("discrete labels");
    labels.retain(|l| !matches!(l, OrbitLabel::Phi6Fiber));
    for field in [FieldCtx::Rational, FieldCtx::prime(5).expect("prime")] {
        for l in &labels {
            let rep = l.representative(field).expect("orbit label");
            out.check(classify(&rep).expect("classifies") == *l, || {
                format!("round trip fails for {l} over {field}")
            });
            out.check(compute_varpi(&rep) == l.splitting(), || {
                format!("splitting mismatch for {l} over {field}")
            });
            let expected_orbit_dim = l.orbit_dim();
            if field == FieldCtx::Rational {
                out.check(stab::stabilizer_dim(&rep) == 9 - expected_orbit_dim, || {
                    format!("stabilizer dimension off for {l}")
                });
            }
        }
    }
    for _ in 0..opts.trials.min(200) {
        let Some(p) = random_primed_param(&mut rng, FieldCtx::Rational) else { break };
        let l = OrbitLabel::o5(p).expect("primed");
        let rep = l.representative(FieldCtx::Rational).expect("orbit label");
        out.check(classify(&rep).expect("classifies") == l, || {
            format!("round trip fails for {l}")
        });
    }
    // Irreducibility criterion vs brute-force factor search, exhaustive
    // over small prime fields.
    for q in [2u64, 3, 5, 7] {
        let field = FieldCtx::prime(q).expect("prime");
        for x in 0..q as i64 {
            for y in 0..q as i64 {
                if x == 0 && y == 0 {
                    continue;
                }
                let p = ProjParam::from_ints(field, x, y).expect("nonzero");
                out.check(
                    is_pp_irreducible(&p) != is_pp_reducible_by_factor_search(&p),
                    || format!("irreducibility routes disagree at [{x}:{y}] over F{q}"),
                );
            }
        }
    }
    out
}

/// Small-field censuses: the label partition equals the union-find
/// partition, counts follow the 25 + max(q-2, 0) law, and the dimension
/// audit passes.
fn census_suite(_opts: &VerifyOptions) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("census");
    for q in [2u64, 3] {
        match (census_by_label(q), census_by_group_action(q, 3, 4)) {
            (Ok(by_label), Ok(by_group)) => {
                out.check(by_label.report.orbit_count == 25 + q.saturating_sub(2), || {
                    format!("count law fails at q = {q}")
                });
                out.check(by_label.report.orbit_count == by_group.report.orbit_count, || {
                    format!("methods count differently at q = {q}")
                });
                out.check(
                    canonical_partition(&by_label.partition)
                        == canonical_partition(&by_group.partition),
                    || format!("methods partition differently at q = {q}"),
                );
            }
            _ => out.check(false, || format!("census failed to run at q = {q}")),
        }
    }
    match dimension_audit(&[2, 3]) {
        Ok(audit) => out.check(audit.ok, || "dimension audit failed".to_string()),
        Err(e) => out.check(false, || format!("dimension audit errored: {e}")),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_run_passes() {
        let opts = VerifyOptions { trials: 40, seed: 11 };
        let outcomes = run_all(&opts);
        for o in &outcomes {
            assert!(o.passed(), "suite {} failed: {:?}", o.name, o.notes);
            assert!(o.checks > 0, "suite {} ran no checks", o.name);
        }
    }

    #[test]
    fn corrupted_psi_is_detected() {
        let opts = VerifyOptions { trials: 10, seed: 3 };
        let outcomes = run_all_with(&opts, true);
        let psi = outcomes.iter().find(|o| o.name == "psi").unwrap();
        assert!(!psi.passed(), "corrupted generator table went unnoticed");
    }

    #[test]
    fn decomposition_search_on_known_splittings() {
        let cfg = Configuration::from_int_columns(
            FieldCtx::Rational,
            3,
            &[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        )
        .unwrap();
        let s = varpi_by_decomposition_search(&cfg);
        assert_eq!(
            s,
            Splitting::from_blocks(4, &[(&[1, 2], 1), (&[3], 1), (&[4], 1)]).unwrap()
        );
        assert_eq!(s, compute_varpi(&cfg));
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let opts = VerifyOptions { trials: 25, seed: 42 };
        let a = run_all(&opts);
        let b = run_all(&opts);
        let summary = |v: &[SuiteOutcome]| {
            v.iter().map(|o| (o.name, o.checks, o.failures)).collect::<Vec<_>>()
        };
        assert_eq!(summary(&a), summary(&b));
    }
}
