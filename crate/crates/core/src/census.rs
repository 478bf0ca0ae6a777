//! Exhaustive finite-field census: enumerate every m-tuple of points of
//! projective (n-1)-space over a prime field and count orbits two
//! independent ways.
//!
//! The label method classifies each tuple and groups by label. The group
//! method ignores the classifier entirely: it closes the state space under
//! a generating set of the group (elementary transvections plus one
//! primitive diagonal) with a union-find structure. Agreement of the two
//! partitions, orbit by orbit, validates the classification empirically.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::config::{Configuration, ProjectivePoint};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, Scalar};
use crate::label::OrbitLabel;
use crate::linalg::Matrix;

/// Upper bound on `points^m` for the union-find census.
pub const GROUP_CENSUS_STATE_LIMIT: u128 = 1_000_000;

/// How the orbits of a census were found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusMethod {
    /// Classify every configuration and group by label.
    #[serde(rename = "label")]
    ByLabel,
    /// Union-find closure under group generators.
    #[serde(rename = "group")]
    ByGroupAction,
}

/// One orbit (or label class) of a census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCount {
    /// Label string for the label method, `orbit@<first state>` for the
    /// group method.
    pub key: String,
    /// Number of configurations in the class.
    pub count: u64,
    /// `|GL_n(F_q)| / count` when that division is exact (it is whenever
    /// the class is a single orbit).
    pub stabilizer_order: Option<u64>,
}

/// Summary of an exhaustive orbit census over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub q: u64,
    pub n: usize,
    pub m: usize,
    pub method: CensusMethod,
    /// `(#points of projective (n-1)-space)^m`.
    pub total_points: u64,
    pub orbit_count: u64,
    pub per_label: Vec<OrbitCount>,
}

impl CensusReport {
    /// Line-oriented text rendering.
    pub fn to_text(&self) -> String {
        let method = match self.method {
            CensusMethod::ByLabel => "label",
            CensusMethod::ByGroupAction => "group",
        };
        let mut out = format!(
            "census q={} (n={}, m={}, method={})\ntotal configurations: {}\n{} orbits\n",
            self.q, self.n, self.m, method, self.total_points, self.orbit_count
        );
        for entry in &self.per_label {
            let stab = match entry.stabilizer_order {
                Some(s) => s.to_string(),
                None => "-".to_string(),
            };
            out.push_str(&format!(
                "  {}  count={}  stabilizer_order={}\n",
                entry.key, entry.count, stab
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A census report together with the underlying partition of the state
/// space (class id per tuple, tuples enumerated lexicographically by point
/// index).
#[derive(Debug, Clone)]
pub struct Census {
    pub report: CensusReport,
    pub partition: Vec<u32>,
}

/// All points of projective (n-1)-space over the field with `q` elements,
/// in canonical form and deterministic order: grouped by the position of
/// the leading one, then lexicographic in the remaining coordinates.
pub fn enumerate_points(q: u64, n: usize) -> Result<Vec<ProjectivePoint>> {
    let field = FieldCtx::prime(q)?;
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let mut counter = vec![0u64; free];
        loop {
            let mut coords = vec![field.zero(); n];
            coords[lead] = field.one();
            for (k, &v) in counter.iter().enumerate() {
                coords[lead + 1 + k] = field.from_int(v as i64);
            }
            out.push(ProjectivePoint::normalize(coords)?);
            // Odometer increment, most significant digit first.
            let mut pos = free;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                counter[pos] += 1;
                if counter[pos] < q {
                    break;
                }
                counter[pos] = 0;
            }
            if counter.iter().all(|&v| v == 0) {
                break;
            }
        }
    }
    let expected = projective_point_count(q, n);
    debug_assert_eq!(out.len() as u128, expected);
    Ok(out)
}

/// `(q^n - 1)/(q - 1)`, the number of points of projective (n-1)-space.
pub fn projective_point_count(q: u64, n: usize) -> u128 {
    let qn = (q as u128).pow(n as u32);
    (qn - 1) / (q as u128 - 1)
}

/// The order of the general linear group: product of `q^n - q^i`.
pub fn gl_order(n: usize, q: u64) -> u128 {
    let qn = (q as u128).pow(n as u32);
    let mut order = 1u128;
    let mut qi = 1u128;
    for _ in 0..n {
        order = order.checked_mul(qn - qi).expect("group order fits in u128");
        qi *= q as u128;
    }
    order
}

/// Exhaustive label census of quadruples in the projective plane over F_q.
pub fn census_by_label(q: u64) -> Result<Census> {
    let field = FieldCtx::prime(q)?;
    let points = enumerate_points(q, 3)?;
    let np = points.len();
    let total = (np as u128).pow(4);
    let mut ids: HashMap<OrbitLabel, u32> = HashMap::new();
    let mut labels: Vec<OrbitLabel> = Vec::new();
    let mut counts: Vec<u64> = Vec::new();
    let mut partition = Vec::with_capacity(total as usize);
    for i1 in 0..np {
        for i2 in 0..np {
            for i3 in 0..np {
                for i4 in 0..np {
                    let cfg = Configuration::new(
                        field,
                        3,
                        vec![
                            points[i1].clone(),
                            points[i2].clone(),
                            points[i3].clone(),
                            points[i4].clone(),
                        ],
                    )?;
                    let label = classify(&cfg)?;
                    let id = *ids.entry(label.clone()).or_insert_with(|| {
                        labels.push(label);
                        counts.push(0);
                        (labels.len() - 1) as u32
                    });
                    counts[id as usize] += 1;
                    partition.push(id);
                }
            }
        }
    }
    let gl = gl_order(3, q);
    let mut entries: Vec<(OrbitLabel, u64)> = labels.into_iter().zip(counts).collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let per_label = entries
        .iter()
        .map(|(label, count)| OrbitCount {
            key: label.to_string(),
            count: *count,
            stabilizer_order: exact_quotient(gl, *count),
        })
        .collect();
    let report = CensusReport {
        q,
        n: 3,
        m: 4,
        method: CensusMethod::ByLabel,
        total_points: total as u64,
        orbit_count: entries.len() as u64,
        per_label,
    };
    Ok(Census { report, partition: canonical_partition(&partition) })
}

/// Label census keeping the labels themselves; used by the dimension audit.
pub fn census_label_breakdown(q: u64) -> Result<Vec<(OrbitLabel, u64)>> {
    let census = census_by_label(q)?;
    // Re-derive labels from the report keys.
    census
        .report
        .per_label
        .iter()
        .map(|entry| {
            let label = parse_census_key(&entry.key, q)?;
            Ok((label, entry.count))
        })
        .collect()
}

fn parse_census_key(key: &str, q: u64) -> Result<OrbitLabel> {
    if let Some(rest) = key.strip_prefix("O(5;[") {
        let body = rest.strip_suffix("])").ok_or_else(|| Error::BadLabel(key.into()))?;
        let (x, y) = body.split_once(':').ok_or_else(|| Error::BadLabel(key.into()))?;
        let field = FieldCtx::prime(q)?;
        let p = crate::param::ProjParam::new(field.parse(x)?, field.parse(y)?)?;
        return OrbitLabel::o5(p);
    }
    OrbitLabel::parse(key)
}

/// Exhaustive orbit census by direct group action: union-find closure of
/// the tuple space under elementary transvections `E_ij(1)` and the
/// diagonal `diag(g, 1, ..., 1)` for a primitive root `g`.
pub fn census_by_group_action(q: u64, n: usize, m: usize) -> Result<Census> {
    let field = FieldCtx::prime(q)?;
    if n == 0 || m == 0 {
        return Err(Error::UnsupportedShape("need n >= 1 and m >= 1".into()));
    }
    let points = enumerate_points(q, n)?;
    let np = points.len();
    let states_u128 = (np as u128).pow(m as u32);
    if states_u128 > GROUP_CENSUS_STATE_LIMIT {
        return Err(Error::TooLarge { states: states_u128, limit: GROUP_CENSUS_STATE_LIMIT });
    }
    let states = states_u128 as usize;

    let index: HashMap<&ProjectivePoint, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let perms: Vec<Vec<u32>> = group_generators(field, n)
        .into_iter()
        .map(|g| {
            points
                .iter()
                .map(|p| {
                    let moved = ProjectivePoint::normalize(
                        g.apply(p.coords()).expect("generator has matching shape"),
                    )
                    .expect("generators are invertible");
                    index[&moved] as u32
                })
                .collect()
        })
        .collect();

    let mut uf = UnionFind::new(states);
    let mut digits = vec![0usize; m];
    for state in 0..states {
        decompose(state, np, &mut digits);
        for perm in &perms {
            let mut image = 0usize;
            for &d in digits.iter() {
                image = image * np + perm[d] as usize;
            }
            uf.union(state, image);
        }
    }

    let mut class_min: HashMap<usize, usize> = HashMap::new();
    let mut class_size: HashMap<usize, u64> = HashMap::new();
    let mut partition = vec![0u32; states];
    for state in 0..states {
        let root = uf.find(state);
        class_min.entry(root).or_insert(state);
        *class_size.entry(root).or_insert(0) += 1;
    }
    let mut orbits: Vec<(usize, u64)> = class_min
        .iter()
        .map(|(&root, &min)| (min, class_size[&root]))
        .collect();
    orbits.sort_unstable();
    let root_to_id: HashMap<usize, u32> = class_min
        .iter()
        .map(|(&root, &min)| (root, orbits.binary_search_by_key(&min, |o| o.0).unwrap() as u32))
        .collect();
    for state in 0..states {
        partition[state] = root_to_id[&uf.find(state)];
    }

    let gl = gl_order(n, q);
    let per_label = orbits
        .iter()
        .map(|&(min, count)| OrbitCount {
            key: format!("orbit@{min}"),
            count,
            stabilizer_order: exact_quotient(gl, count),
        })
        .collect();
    let report = CensusReport {
        q,
        n,
        m,
        method: CensusMethod::ByGroupAction,
        total_points: states as u64,
        orbit_count: orbits.len() as u64,
        per_label,
    };
    Ok(Census { report, partition: canonical_partition(&partition) })
}

/// A generating set of the general linear group over F_q: all transvections
/// `E_ij(1)` plus `diag(g, 1, ..., 1)` for a primitive root `g`.
pub fn group_generators(field: FieldCtx, n: usize) -> Vec<Matrix> {
    let FieldCtx::Prime(q) = field else {
        panic!("group generators need a prime field");
    };
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut g = Matrix::identity(field, n);
            g.set(i, j, field.one());
            gens.push(g);
        }
    }
    let mut diag = Matrix::identity(field, n);
    diag.set(0, 0, field.from_int(primitive_root(q) as i64));
    gens.push(diag);
    gens
}

fn primitive_root(q: u64) -> u64 {
    if q == 2 {
        return 1;
    }
    'candidates: for g in 2..q {
        let mut x = 1u64;
        for _ in 1..q - 1 {
            x = x * g % q;
            if x == 1 {
                continue 'candidates;
            }
        }
        return g;
    }
    unreachable!("every prime field has a primitive root")
}

fn decompose(mut state: usize, base: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = state % base;
        state /= base;
    }
}

fn exact_quotient(gl: u128, count: u64) -> Option<u64> {
    if count == 0 || !gl.is_multiple_of(count as u128) {
        return None;
    }
    u64::try_from(gl / count as u128).ok()
}

/// Renumbers class ids by first appearance so partitions from different
/// methods can be compared structurally.
pub fn canonical_partition(partition: &[u32]) -> Vec<u32> {
    let mut remap: HashMap<u32, u32> = HashMap::new();
    partition
        .iter()
        .map(|&id| {
            let next = remap.len() as u32;
            *remap.entry(id).or_insert(next)
        })
        .collect()
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut x = x as u32;
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x as usize
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
    }
}

/// One row of the dimension audit.
#[derive(Debug, Clone, Serialize)]
pub struct AuditRow {
    pub label: String,
    pub q: u64,
    pub orbit_size: u64,
    /// Size predicted by the per-class polynomial in `q` of degree equal to
    /// the orbit dimension.
    pub expected_size: u64,
    pub dim: usize,
    /// Stabilizer order by explicit enumeration of the group (small `q`
    /// only), otherwise `None`.
    pub stabilizer_order: Option<u64>,
    pub ok: bool,
}

/// Result of the dimension audit across several field sizes.
#[derive(Debug, Clone, Serialize)]
pub struct DimensionAudit {
    pub rows: Vec<AuditRow>,
    pub ok: bool,
}

/// Predicted orbit size over F_q for a label of the given orbit dimension.
///
/// Derived from the shapes of the stabilizer subgroups and cross-validated
/// by the exhaustive censuses; each polynomial has degree exactly `dim`.
pub fn expected_orbit_size(dim: usize, q: u64) -> u64 {
    let q = q as u128;
    let base = (q + 1) * (q * q + q + 1);
    let value = match dim {
        2 => q * q + q + 1,
        4 => q * base,
        5 => (q - 1) * q * base,
        6 => q * q * q * base,
        7 => (q - 1) * q * q * q * base,
        8 => (q - 1) * (q - 1) * q * q * q * base,
        other => panic!("no orbit class of dimension {other}"),
    };
    u64::try_from(value).expect("orbit size fits in u64")
}

/// Checks, for every label over every requested field size, that the census
/// count equals the predicted polynomial value of degree `orbit_dim`, and
/// (for `q <= 3`, where the group is small enough to enumerate) that the
/// explicit stabilizer order satisfies orbit-stabilizer exactly.
pub fn dimension_audit(q_list: &[u64]) -> Result<DimensionAudit> {
    let mut rows = Vec::new();
    for &q in q_list {
        let field = FieldCtx::prime(q)?;
        let gl = gl_order(3, q);
        for (label, count) in census_label_breakdown(q)? {
            let dim = label.orbit_dim();
            let expected = expected_orbit_size(dim, q);
            let stab = if q <= 3 {
                Some(stabilizer_order_enumerated(&label.representative(field)?)?)
            } else {
                None
            };
            let stab_ok = stab.is_none_or(|s| s as u128 * count as u128 == gl);
            rows.push(AuditRow {
                label: label.to_string(),
                q,
                orbit_size: count,
                expected_size: expected,
                dim,
                stabilizer_order: stab,
                ok: count == expected && stab_ok,
            });
        }
    }
    let ok = !rows.is_empty() && rows.iter().all(|r| r.ok);
    Ok(DimensionAudit { rows, ok })
}

/// Order of the stabilizer of a configuration inside the full group, by
/// explicit enumeration of all matrices over the field.
pub fn stabilizer_order_enumerated(cfg: &Configuration) -> Result<u64> {
    let FieldCtx::Prime(q) = cfg.field() else {
        return Err(Error::UnsupportedShape("stabilizer enumeration needs a prime field".into()));
    };
    let n = cfg.n();
    let cells = n * n;
    let total = (q as u128).pow(cells as u32);
    if total > GROUP_CENSUS_STATE_LIMIT {
        return Err(Error::TooLarge { states: total, limit: GROUP_CENSUS_STATE_LIMIT });
    }
    let field = cfg.field();
    let scalars: Vec<Scalar> = field.elements()?;
    let mut digits = vec![0usize; cells];
    let mut count = 0u64;
    for flat in 0..total as usize {
        decompose(flat, q as usize, &mut digits);
        let data: Vec<Scalar> = digits.iter().map(|&d| scalars[d].clone()).collect();
        let g = Matrix::new(field, n, n, data)?;
        if stabilizes(&g, cfg) && g.is_invertible() {
            count += 1;
        }
    }
    Ok(count)
}

fn stabilizes(g: &Matrix, cfg: &Configuration) -> bool {
    for col in cfg.columns() {
        let image = g.apply(col.coords()).expect("shapes match");
        match ProjectivePoint::normalize(image) {
            Ok(p) => {
                if &p != col {
                    return false;
                }
            }
            Err(_) => return false, // column sent to zero: not invertible
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        assert_eq!(enumerate_points(2, 3).unwrap().len(), 7);
        assert_eq!(enumerate_points(3, 2).unwrap().len(), 4);
        assert_eq!(enumerate_points(5, 3).unwrap().len(), 31);
        assert!(matches!(enumerate_points(4, 3), Err(Error::BadField(4))));
    }

    #[test]
    fn points_are_distinct_and_canonical() {
        let pts = enumerate_points(3, 3).unwrap();
        assert_eq!(pts.len(), 13);
        for (i, a) in pts.iter().enumerate() {
            assert!(a.coords().iter().find(|c| !c.is_zero()).unwrap().is_one());
            for b in pts.iter().skip(i + 1) {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(3, 2), 168);
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(2, 3), 48);
        assert_eq!(gl_order(3, 3), 11232);
    }

    #[test]
    fn label_census_q2() {
        let census = census_by_label(2).unwrap();
        assert_eq!(census.report.orbit_count, 25);
        assert_eq!(census.report.total_points, 2401);
        let sum: u64 = census.report.per_label.iter().map(|e| e.count).sum();
        assert_eq!(sum, 2401);
        // No parameterized orbits over F2: the projective line has only the
        // three special points.
        assert!(census.report.per_label.iter().all(|e| !e.key.starts_with("O(5;")));
    }

    #[test]
    fn label_census_q3() {
        let census = census_by_label(3).unwrap();
        assert_eq!(census.report.orbit_count, 26);
        let o5: Vec<&OrbitCount> = census
            .report
            .per_label
            .iter()
            .filter(|e| e.key.starts_with("O(5;"))
            .collect();
        assert_eq!(o5.len(), 1);
        assert_eq!(o5[0].count, 312); // 13 lines x 4! ordered distinct quadruples
    }

    #[test]
    fn group_census_m2_and_m3() {
        let census = census_by_group_action(2, 3, 2).unwrap();
        assert_eq!(census.report.orbit_count, 2);
        let census = census_by_group_action(2, 3, 3).unwrap();
        assert_eq!(census.report.orbit_count, 6);
    }

    #[test]
    fn group_census_matches_label_census_q2() {
        let by_label = census_by_label(2).unwrap();
        let by_group = census_by_group_action(2, 3, 4).unwrap();
        assert_eq!(by_group.report.orbit_count, 25);
        assert_eq!(by_label.partition, by_group.partition);
    }

    #[test]
    fn orbit_stabilizer_holds_for_group_census() {
        let census = census_by_group_action(3, 3, 2).unwrap();
        let gl = gl_order(3, 3);
        for entry in &census.report.per_label {
            let stab = entry.stabilizer_order.expect("orbit size divides the group order");
            assert_eq!(stab as u128 * entry.count as u128, gl);
        }
    }

    #[test]
    fn stabilizer_enumeration_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let rep = OrbitLabel::Phi8.representative(f2).unwrap();
        // Over F2 only the identity fixes a projective frame.
        assert_eq!(stabilizer_order_enumerated(&rep).unwrap(), 1);
        let rep = OrbitLabel::Phi2.representative(f2).unwrap();
        assert_eq!(stabilizer_order_enumerated(&rep).unwrap(), 24);
    }

    #[test]
    fn audit_small_fields() {
        let audit = dimension_audit(&[2, 3]).unwrap();
        assert!(audit.ok, "failing rows: {:?}", audit.rows.iter().filter(|r| !r.ok).collect::<Vec<_>>());
        assert_eq!(audit.rows.iter().filter(|r| r.q == 2).count(), 25);
        assert_eq!(audit.rows.iter().filter(|r| r.q == 3).count(), 26);
    }

    #[test]
    fn expected_sizes_sum_to_the_whole_space() {
        for q in [2u64, 3, 5, 7] {
            let np = projective_point_count(q, 3);
            let total: u128 = [
                expected_orbit_size(2, q) as u128,
                7 * expected_orbit_size(4, q) as u128,
                (6 + q.saturating_sub(2)) as u128 * expected_orbit_size(5, q) as u128,
                6 * expected_orbit_size(6, q) as u128,
                4 * expected_orbit_size(7, q) as u128,
                expected_orbit_size(8, q) as u128,
            ]
            .iter()
            .sum();
            assert_eq!(total, np.pow(4), "partition of the space fails at q={q}");
        }
    }

    #[test]
    fn report_serialization_round_trip() {
        let census = census_by_group_action(2, 2, 2).unwrap();
        let json = census.report.to_json();
        let back: CensusReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, census.report);
        assert!(census.report.to_text().contains("orbits"));
    }

    #[test]
    fn group_census_guard() {
        assert!(matches!(
            census_by_group_action(7, 3, 4),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn canonical_partition_renumbers() {
        assert_eq!(canonical_partition(&[5, 5, 2, 5, 2, 9]), vec![0, 0, 1, 0, 1, 2]);
    }
}
