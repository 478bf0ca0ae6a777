//! Closure relations among orbits and fibers, and the Hasse diagram.
//!
//! For fiber labels the closure order is pointwise domination of rank
//! functions. The closure of the parameterized orbit `O(5;p)` consists of
//! itself, the four `phi[4;i]` fibers, and `phi[2]`; in the other direction
//! `O(5;p)` lies in the closure of a fiber exactly when the whole `phi[6]`
//! fiber does.
//!
//! The emitted Hasse diagram contains covering relations only; redundant
//! comparabilities (such as the one from `O(5;p)` straight down to
//! `phi[2]`, which factors through the `phi[4;i]`) are dropped.

use std::fmt;

use crate::config::Configuration;
use crate::error::Result;
use crate::field::Scalar;
use crate::label::{OrbitLabel, S4Class};
use crate::param::ProjParam;
use crate::rankfn::RankFunction;

/// Whether the closure of the stratum labeled `a` contains the stratum
/// labeled `b`. Labels must be drawn from one parameter's label set; `O5`
/// labels with distinct parameters are unrelated.
pub fn closure_contains(a: &OrbitLabel, b: &OrbitLabel) -> bool {
    use OrbitLabel::O5;
    match (a, b) {
        (O5(p), O5(q)) => p == q,
        (O5(_), fiber) => {
            matches!(fiber, OrbitLabel::Phi4Single(_) | OrbitLabel::Phi2)
        }
        (fiber, O5(_)) => {
            // O(5;p) sits inside the phi[6] fiber.
            OrbitLabel::Phi6Fiber.phi().leq(&fiber.phi()).expect("labels share m = 4")
        }
        (fa, fb) => fb.phi().leq(&fa.phi()).expect("labels share m = 4"),
    }
}

/// A covering relation of the closure order: `upper` strictly contains
/// `lower` in its closure with no stratum strictly between.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HasseEdge {
    pub upper: OrbitLabel,
    pub lower: OrbitLabel,
}

impl fmt::Display for HasseEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.upper, self.lower)
    }
}

fn strictly_below(a: &OrbitLabel, b: &OrbitLabel) -> bool {
    a != b && closure_contains(b, a)
}

/// The covering relations of the closure order on the 27 strata attached to
/// a primed parameter `p`, emitted in a deterministic order.
pub fn hasse(p: &ProjParam) -> Result<Vec<HasseEdge>> {
    let labels = OrbitLabel::all_labels(Some(p))?;
    let mut edges = Vec::new();
    for upper in &labels {
        for lower in &labels {
            if !strictly_below(lower, upper) {
                continue;
            }
            let covered = !labels
                .iter()
                .any(|mid| strictly_below(lower, mid) && strictly_below(mid, upper));
            if covered {
                edges.push(HasseEdge { upper: upper.clone(), lower: lower.clone() });
            }
        }
    }
    edges.sort();
    Ok(edges)
}

/// Nodes and covering edges of the nine-class quotient diagram.
pub type QuotientHasse = (Vec<S4Class>, Vec<(S4Class, S4Class)>);

/// The quotient of the closure order by column permutations: nine classes
/// and their covering relations.
pub fn mod_s4_hasse(p: &ProjParam) -> Result<QuotientHasse> {
    let labels = OrbitLabel::all_labels(Some(p))?;
    let classes = S4Class::all().to_vec();
    // Class A >= class B when some member of A dominates some member of B;
    // equivariance of the order makes this a partial order on classes.
    let class_geq = |a: S4Class, b: S4Class| {
        labels.iter().filter(|l| l.mod_s4_class() == a).any(|la| {
            labels
                .iter()
                .filter(|l| l.mod_s4_class() == b)
                .any(|lb| closure_contains(la, lb))
        })
    };
    let strict = |a: S4Class, b: S4Class| a != b && class_geq(a, b);
    let mut edges = Vec::new();
    for &upper in &classes {
        for &lower in &classes {
            if !strict(upper, lower) {
                continue;
            }
            let covered = !classes
                .iter()
                .any(|&mid| strict(upper, mid) && strict(mid, lower));
            if covered {
                edges.push((upper, lower));
            }
        }
    }
    edges.sort();
    Ok((classes, edges))
}

/// Membership of a configuration in the closed stratum determined by a rank
/// function, decided by minor vanishing: for every column subset `I`, all
/// `(phi(I)+1)`-minors of the selected columns vanish.
///
/// This is an independent route to `compute_pi(v).leq(phi)`: it expands
/// determinants by cofactors and never runs Gaussian elimination.
pub fn in_closure_by_minors(cfg: &Configuration, phi: &RankFunction) -> bool {
    if cfg.m() != phi.m() {
        return false;
    }
    let n = cfg.n();
    for mask in 1u32..(1 << cfg.m()) {
        let cols: Vec<usize> = (0..cfg.m()).filter(|i| mask & (1 << i) != 0).collect();
        let order = phi.value(mask) as usize + 1;
        if order > n.min(cols.len()) {
            continue; // no minors of this order exist
        }
        if !all_minors_vanish(cfg, &cols, order) {
            return false;
        }
    }
    true
}

fn all_minors_vanish(cfg: &Configuration, cols: &[usize], order: usize) -> bool {
    let row_choices = combinations(cfg.n(), order);
    let col_choices = combinations(cols.len(), order);
    for rows in &row_choices {
        for cidx in &col_choices {
            let chosen: Vec<usize> = cidx.iter().map(|&i| cols[i]).collect();
            if !minor_det(cfg, rows, &chosen).is_zero() {
                return false;
            }
        }
    }
    true
}

fn minor_det(cfg: &Configuration, rows: &[usize], cols: &[usize]) -> Scalar {
    let entry = |r: usize, c: usize| cfg.column(cols[c]).coords()[rows[r]].clone();
    det_by_cofactors(&|r, c| entry(r, c), rows.len())
}

fn det_by_cofactors(entry: &dyn Fn(usize, usize) -> Scalar, k: usize) -> Scalar {
    fn go(entry: &dyn Fn(usize, usize) -> Scalar, rows: &[usize], cols: &[usize]) -> Scalar {
        if rows.len() == 1 {
            return entry(rows[0], cols[0]);
        }
        let mut acc: Option<Scalar> = None;
        for (k, &c) in cols.iter().enumerate() {
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = go(entry, &rows[1..], &sub_cols);
            let term = entry(rows[0], c).mul(&minor);
            let signed = if k % 2 == 0 { term } else { term.neg() };
            acc = Some(match acc {
                None => signed,
                Some(a) => a.add(&signed),
            });
        }
        acc.expect("nonempty expansion")
    }
    let idx: Vec<usize> = (0..k).collect();
    go(entry, &idx, &idx)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// DOT rendering of the Hasse diagram: one node per stratum with its
/// dimension, one directed edge per covering relation (upper to lower).
pub fn to_dot(p: &ProjParam) -> Result<String> {
    let labels = OrbitLabel::all_labels(Some(p))?;
    let edges = hasse(p)?;
    let mut out = String::from("digraph hasse {\n");
    let mut sorted = labels;
    sorted.sort();
    for l in &sorted {
        out.push_str(&format!(
            "  \"{}\" [name=\"{}\", dim={}];\n",
            l,
            l,
            l.orbit_dim()
        ));
    }
    for e in &edges {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", e.upper, e.lower));
    }
    out.push_str("}\n");
    Ok(out)
}

/// DOT rendering of the nine-class quotient diagram.
pub fn to_dot_mod_s4(p: &ProjParam) -> Result<String> {
    let (classes, edges) = mod_s4_hasse(p)?;
    let mut out = String::from("digraph hasse_mod_s4 {\n");
    for c in &classes {
        out.push_str(&format!("  \"{}\" [name=\"{}\", dim={}];\n", c, c, c.dim()));
    }
    for (upper, lower) in &edges {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", upper, lower));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::rankfn::compute_pi;

    fn q() -> FieldCtx {
        FieldCtx::Rational
    }

    fn param(x: i64, y: i64) -> ProjParam {
        ProjParam::from_ints(q(), x, y).unwrap()
    }

    #[test]
    fn closure_examples() {
        let p = param(1, 2);
        let o5 = OrbitLabel::o5(p.clone()).unwrap();
        assert!(closure_contains(&o5, &OrbitLabel::phi4_single(3).unwrap()));
        assert!(!closure_contains(&o5, &OrbitLabel::phi4_pair(1, 2).unwrap()));
        assert!(closure_contains(&OrbitLabel::Phi6Fiber, &o5));
        assert!(closure_contains(&o5, &OrbitLabel::Phi2));
        assert!(!closure_contains(&o5, &OrbitLabel::phi5(1, 2).unwrap()));
        assert!(!closure_contains(&OrbitLabel::phi5(1, 2).unwrap(), &o5));
        // Distinct parameters are unrelated.
        let other = OrbitLabel::o5(param(1, 3)).unwrap();
        assert!(!closure_contains(&o5, &other));
        assert!(closure_contains(&o5, &o5));
    }

    #[test]
    fn closure_is_a_partial_order() {
        let labels = OrbitLabel::all_labels(Some(&param(1, 2))).unwrap();
        for a in &labels {
            assert!(closure_contains(a, a));
            for b in &labels {
                if a != b {
                    assert!(
                        !(closure_contains(a, b) && closure_contains(b, a)),
                        "antisymmetry fails: {a}, {b}"
                    );
                }
                for c in &labels {
                    if closure_contains(a, b) && closure_contains(b, c) {
                        assert!(closure_contains(a, c), "transitivity fails: {a}, {b}, {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn hasse_contains_expected_edges() {
        let p = param(1, 2);
        let edges = hasse(&p).unwrap();
        for i in 1..=4 {
            let e = HasseEdge {
                upper: OrbitLabel::Phi8,
                lower: OrbitLabel::phi7(i).unwrap(),
            };
            assert!(edges.contains(&e), "missing {e}");
        }
        let e = HasseEdge {
            upper: OrbitLabel::Phi6Fiber,
            lower: OrbitLabel::o5(p.clone()).unwrap(),
        };
        assert!(edges.contains(&e), "missing {e}");
        // The redundant O5 -> phi[2] comparability is not a cover.
        let non_cover = HasseEdge {
            upper: OrbitLabel::o5(p).unwrap(),
            lower: OrbitLabel::Phi2,
        };
        assert!(!edges.contains(&non_cover));
    }

    #[test]
    fn dimensions_strictly_decrease_along_edges() {
        let edges = hasse(&param(1, 2)).unwrap();
        for e in &edges {
            assert!(
                e.upper.orbit_dim() > e.lower.orbit_dim(),
                "dimension does not drop along {e}"
            );
        }
    }

    #[test]
    fn minor_route_agrees_with_rank_route() {
        let samples = [
            Configuration::from_int_columns(q(), 3, &[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0], &[1, 0, 0]])
                .unwrap(),
            Configuration::from_int_columns(q(), 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
                .unwrap(),
            Configuration::from_int_columns(q(), 3, &[&[1, 2, 0], &[0, 1, 0], &[1, 1, 0], &[3, 1, 0]])
                .unwrap(),
        ];
        let labels = OrbitLabel::all_labels(None).unwrap();
        for cfg in &samples {
            let pi = compute_pi(cfg);
            for l in &labels {
                let phi = l.phi();
                assert_eq!(
                    in_closure_by_minors(cfg, &phi),
                    pi.leq(&phi).unwrap(),
                    "routes disagree for {cfg} vs {l}"
                );
            }
        }
    }

    #[test]
    fn minor_route_examples() {
        let v = Configuration::from_int_columns(
            q(),
            3,
            &[&[1, 0, 0], &[1, 0, 0], &[1, 0, 0], &[1, 0, 0]],
        )
        .unwrap();
        assert!(in_closure_by_minors(&v, &OrbitLabel::Phi8.phi()));
        let general = Configuration::from_int_columns(
            q(),
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        )
        .unwrap();
        assert!(!in_closure_by_minors(&general, &OrbitLabel::Phi6Fiber.phi()));
    }

    #[test]
    fn dot_output_shape() {
        let dot = to_dot(&param(1, 2)).unwrap();
        assert!(dot.starts_with("digraph hasse {"));
        assert_eq!(dot.matches("dim=").count(), 27);
        assert!(dot.contains("\"phi[8]\" -> \"phi[7;1]\";"));
        let dot = to_dot_mod_s4(&param(1, 2)).unwrap();
        assert_eq!(dot.matches("dim=").count(), 9);
        assert!(dot.contains("{phi[8]}"));
    }

    #[test]
    fn quotient_hasse_shape() {
        let (classes, edges) = mod_s4_hasse(&param(1, 2)).unwrap();
        assert_eq!(classes.len(), 9);
        assert!(edges.contains(&(S4Class::Phi8, S4Class::Phi7)));
        assert!(edges.contains(&(S4Class::Phi6Fiber, S4Class::O5)));
        assert!(edges.contains(&(S4Class::O5, S4Class::Phi4Single)));
        // O5 down to phi[2] factors through phi[4;*].
        assert!(!edges.contains(&(S4Class::O5, S4Class::Phi2)));
        assert_eq!(edges.len(), 11);
    }
}
