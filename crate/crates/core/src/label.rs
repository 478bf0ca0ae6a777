//! Orbit labels for quadruples of points in the projective plane.
//!
//! The classification has 25 discrete labels plus a family `O(5;p)` indexed
//! by a primed projective-line parameter. Each label `phi[k;J]` names the
//! rank function of its fiber; `k` is the orbit dimension and `J` carries
//! index data on the columns. `phi[6]` names the one fiber that is not a
//! single orbit: it decomposes into the `O(5;p)`, and is kept as a poset
//! node only.

use std::fmt;

use num_rational::BigRational;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::param::ProjParam;
use crate::rankfn::RankFunction;
use crate::splitting::Splitting;

/// An unordered pair of column indices in `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    lo: u8,
    hi: u8,
}

impl Pair {
    pub fn new(a: u8, b: u8) -> Result<Pair> {
        if !(1..=4).contains(&a) || !(1..=4).contains(&b) || a == b {
            return Err(Error::BadLabel(format!("bad index pair ({a},{b})")));
        }
        Ok(Pair { lo: a.min(b), hi: a.max(b) })
    }

    pub fn lo(&self) -> u8 {
        self.lo
    }

    pub fn hi(&self) -> u8 {
        self.hi
    }

    pub fn contains(&self, i: u8) -> bool {
        self.lo == i || self.hi == i
    }

    /// The complementary pair inside `{1,2,3,4}`.
    pub fn complement(&self) -> Pair {
        let mut rest = (1..=4u8).filter(|&i| !self.contains(i));
        let a = rest.next().unwrap();
        let b = rest.next().unwrap();
        Pair { lo: a, hi: b }
    }

    /// All six pairs in lexicographic order.
    pub fn all() -> Vec<Pair> {
        let mut out = Vec::with_capacity(6);
        for a in 1..=4u8 {
            for b in a + 1..=4 {
                out.push(Pair { lo: a, hi: b });
            }
        }
        out
    }

    fn mask(&self) -> u32 {
        (1 << (self.lo - 1)) | (1 << (self.hi - 1))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.lo, self.hi)
    }
}

/// The classification result for a quadruple of points in the plane.
///
/// Variants are ordered by descending orbit dimension so the derived `Ord`
/// lists labels top-down in the degeneration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitLabel {
    /// General position: the dense orbit.
    Phi8,
    /// Column `i` transversal to the other three, which lie on a line in
    /// general position.
    Phi7(u8),
    /// Columns `k`, `l` coincide; the other two columns complete a basis.
    Phi6Pair(Pair),
    /// The rank-2, all-points-distinct fiber. Not an orbit: it is the union
    /// of the `O5` family. Used only as a node of the closure poset.
    Phi6Fiber,
    /// Columns `i`, `j` coincide; the four points span a line with three
    /// distinct among them.
    Phi5(Pair),
    /// The 5-dimensional orbit through `[e1, e2, e1+e2, p1 e1 + p2 e2]` for
    /// a primed parameter `p`.
    O5(ProjParam),
    /// Two coincident pairs on distinct lines; stored as the partition into
    /// pairs, keyed by the block containing column 1.
    Phi4Pair(Pair),
    /// Column `i` on one line, the other three on another.
    Phi4Single(u8),
    /// All four points equal.
    Phi2,
}

use OrbitLabel::*;

fn check_index(i: u8) -> Result<u8> {
    if (1..=4).contains(&i) {
        Ok(i)
    } else {
        Err(Error::BadLabel(format!("index {i} out of 1..=4")))
    }
}

impl OrbitLabel {
    pub fn phi7(i: u8) -> Result<OrbitLabel> {
        Ok(Phi7(check_index(i)?))
    }

    pub fn phi6_pair(k: u8, l: u8) -> Result<OrbitLabel> {
        Ok(Phi6Pair(Pair::new(k, l)?))
    }

    pub fn phi5(i: u8, j: u8) -> Result<OrbitLabel> {
        Ok(Phi5(Pair::new(i, j)?))
    }

    /// The pair partition `{{i,j},{k,l}}`, stored as the block containing 1.
    pub fn phi4_pair(i: u8, j: u8) -> Result<OrbitLabel> {
        let p = Pair::new(i, j)?;
        Ok(Phi4Pair(if p.contains(1) { p } else { p.complement() }))
    }

    pub fn phi4_single(i: u8) -> Result<OrbitLabel> {
        Ok(Phi4Single(check_index(i)?))
    }

    /// The parameterized orbit; the parameter must be primed.
    pub fn o5(p: ProjParam) -> Result<OrbitLabel> {
        if p.is_primed() {
            Ok(O5(p))
        } else {
            Err(Error::BadParameter)
        }
    }

    /// All poset labels: the 25 discrete orbit labels plus the `phi[6]`
    /// fiber node, plus `O(5;p)` when a parameter is supplied.
    pub fn all_labels(p: Option<&ProjParam>) -> Result<Vec<OrbitLabel>> {
        let mut out = vec![Phi8];
        out.extend((1..=4).map(Phi7));
        out.extend(Pair::all().into_iter().map(Phi6Pair));
        out.push(Phi6Fiber);
        out.extend(Pair::all().into_iter().map(Phi5));
        if let Some(p) = p {
            out.push(OrbitLabel::o5(p.clone())?);
        }
        out.extend([Pair::new(1, 2), Pair::new(1, 3), Pair::new(1, 4)]
            .into_iter()
            .map(|pr| Phi4Pair(pr.unwrap())));
        out.extend((1..=4).map(Phi4Single));
        out.push(Phi2);
        Ok(out)
    }

    /// The indecomposable splitting of every configuration with this label.
    pub fn splitting(&self) -> Splitting {
        let full = 0b1111u32;
        let blocks: Vec<(u32, u8)> = match self {
            Phi2 => vec![(full, 1)],
            Phi4Single(i) => {
                let one = 1u32 << (i - 1);
                vec![(one, 1), (full & !one, 1)]
            }
            Phi4Pair(p) => vec![(p.mask(), 1), (p.complement().mask(), 1)],
            Phi5(_) | Phi6Fiber | O5(_) => vec![(full, 2)],
            Phi6Pair(p) => {
                let c = p.complement();
                vec![
                    (1 << (c.lo() - 1), 1),
                    (1 << (c.hi() - 1), 1),
                    (p.mask(), 1),
                ]
            }
            Phi7(i) => {
                let one = 1u32 << (i - 1);
                vec![(one, 1), (full & !one, 2)]
            }
            Phi8 => vec![(full, 3)],
        };
        Splitting::new(4, blocks).expect("label splittings partition [4]")
    }

    /// The rank function of every configuration with this label. `O5`
    /// shares the `phi[6]` rank function.
    pub fn phi(&self) -> RankFunction {
        match self {
            Phi6Fiber | O5(_) => {
                let values = (0..16u32).map(|m| (m.count_ones() as u8).min(2)).collect();
                RankFunction::from_values(4, values).unwrap()
            }
            Phi5(p) => {
                let values = (0..16u32)
                    .map(|m| {
                        let merged = if m & p.mask() == p.mask() {
                            m.count_ones() - 1
                        } else {
                            m.count_ones()
                        };
                        (merged as u8).min(2)
                    })
                    .collect();
                RankFunction::from_values(4, values).unwrap()
            }
            _ => self
                .splitting()
                .rank_function()
                .expect("discrete labels outside phi[5] are single-orbit classes"),
        }
    }

    /// The orbit dimension (the number before the semicolon in the label
    /// name); for the `phi[6]` node this is the fiber dimension 6.
    pub fn orbit_dim(&self) -> usize {
        match self {
            Phi2 => 2,
            Phi4Single(_) | Phi4Pair(_) => 4,
            Phi5(_) | O5(_) => 5,
            Phi6Pair(_) | Phi6Fiber => 6,
            Phi7(_) => 7,
            Phi8 => 8,
        }
    }

    /// The class of this label in the quotient by column permutations.
    pub fn mod_s4_class(&self) -> S4Class {
        match self {
            Phi8 => S4Class::Phi8,
            Phi7(_) => S4Class::Phi7,
            Phi6Pair(_) => S4Class::Phi6Pair,
            Phi6Fiber => S4Class::Phi6Fiber,
            Phi5(_) => S4Class::Phi5,
            O5(_) => S4Class::O5,
            Phi4Pair(_) => S4Class::Phi4Pair,
            Phi4Single(_) => S4Class::Phi4Single,
            Phi2 => S4Class::Phi2,
        }
    }

    /// The canonical orbit representative. Errors with [`Error::NotAnOrbit`]
    /// for the `phi[6]` fiber node and with a field mismatch when an `O5`
    /// parameter lives in a different field.
    pub fn representative(&self, field: FieldCtx) -> Result<Configuration> {
        match self {
            Phi6Fiber => Err(Error::NotAnOrbit),
            Phi5(p) => {
                let mut cols: Vec<Vec<i64>> = vec![vec![0; 3]; 4];
                let rest: Vec<u8> = (1..=4).filter(|i| !p.contains(*i)).collect();
                cols[p.lo() as usize - 1][0] = 1;
                cols[p.hi() as usize - 1][0] = 1;
                cols[rest[0] as usize - 1][1] = 1;
                cols[rest[1] as usize - 1][0] = 1;
                cols[rest[1] as usize - 1][1] = 1;
                let refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
                Configuration::from_int_columns(field, 3, &refs)
            }
            O5(p) => {
                if p.field() != field {
                    return Err(Error::FieldMismatch(
                        field.to_string(),
                        p.field().to_string(),
                    ));
                }
                let zero = field.zero();
                let mk = |coords: Vec<crate::field::Scalar>| {
                    crate::config::ProjectivePoint::normalize(coords)
                };
                let cols = vec![
                    mk(vec![field.one(), zero.clone(), zero.clone()])?,
                    mk(vec![zero.clone(), field.one(), zero.clone()])?,
                    mk(vec![field.one(), field.one(), zero.clone()])?,
                    mk(vec![p.x().clone(), p.y().clone(), zero.clone()])?,
                ];
                Configuration::new(field, 3, cols)
            }
            _ => self.splitting().canonical_representative(3, field),
        }
    }

    /// Parses the label grammar: `phi[2]`, `phi[4;i]`, `phi[4;i,j]`,
    /// `phi[5;i,j]`, `phi[6]`, `phi[6;k,l]`, `phi[7;i]`, `phi[8]`, and
    /// `O5@a` with an affine rational parameter `a`.
    pub fn parse(s: &str) -> Result<OrbitLabel> {
        let s = s.trim();
        let bad = || Error::BadLabel(s.to_string());
        if let Some(rest) = s.strip_prefix("O5@") {
            let a: BigRational = rest.trim().parse().map_err(|_| bad())?;
            return OrbitLabel::o5(ProjParam::from_affine(a));
        }
        let body = s.strip_prefix("phi[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let (head, idx) = match body.split_once(';') {
            Some((h, i)) => (h, Some(i)),
            None => (body, None),
        };
        let parse_one = |t: &str| t.trim().parse::<u8>().map_err(|_| bad());
        let indices: Vec<u8> = match idx {
            None => vec![],
            Some(i) => i.split(',').map(parse_one).collect::<Result<_>>()?,
        };
        match (head, indices.as_slice()) {
            ("2", []) => Ok(Phi2),
            ("4", [i]) => OrbitLabel::phi4_single(*i),
            ("4", [i, j]) => OrbitLabel::phi4_pair(*i, *j),
            ("5", [i, j]) => OrbitLabel::phi5(*i, *j),
            ("6", []) => Ok(Phi6Fiber),
            ("6", [k, l]) => OrbitLabel::phi6_pair(*k, *l),
            ("7", [i]) => OrbitLabel::phi7(*i),
            ("8", []) => Ok(Phi8),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phi8 => write!(f, "phi[8]"),
            Phi7(i) => write!(f, "phi[7;{i}]"),
            Phi6Pair(p) => write!(f, "phi[6;{p}]"),
            Phi6Fiber => write!(f, "phi[6]"),
            Phi5(p) => write!(f, "phi[5;{p}]"),
            O5(p) => write!(f, "O(5;{p})"),
            Phi4Pair(p) => write!(f, "phi[4;{p}]"),
            Phi4Single(i) => write!(f, "phi[4;{i}]"),
            Phi2 => write!(f, "phi[2]"),
        }
    }
}

/// The nine classes of labels modulo column permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum S4Class {
    Phi8,
    Phi7,
    Phi6Pair,
    Phi6Fiber,
    Phi5,
    O5,
    Phi4Pair,
    Phi4Single,
    Phi2,
}

impl S4Class {
    pub fn all() -> [S4Class; 9] {
        [
            S4Class::Phi8,
            S4Class::Phi7,
            S4Class::Phi6Pair,
            S4Class::Phi6Fiber,
            S4Class::Phi5,
            S4Class::O5,
            S4Class::Phi4Pair,
            S4Class::Phi4Single,
            S4Class::Phi2,
        ]
    }

    pub fn dim(&self) -> usize {
        match self {
            S4Class::Phi8 => 8,
            S4Class::Phi7 => 7,
            S4Class::Phi6Pair | S4Class::Phi6Fiber => 6,
            S4Class::Phi5 | S4Class::O5 => 5,
            S4Class::Phi4Pair | S4Class::Phi4Single => 4,
            S4Class::Phi2 => 2,
        }
    }
}

impl fmt::Display for S4Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            S4Class::Phi8 => "{phi[8]}",
            S4Class::Phi7 => "{phi[7;*]}",
            S4Class::Phi6Pair => "{phi[6;*,*]}",
            S4Class::Phi6Fiber => "{phi[6]}",
            S4Class::Phi5 => "{phi[5;*,*]}",
            S4Class::O5 => "{O(5;q) | q in O_p}",
            S4Class::Phi4Pair => "{phi[4;*,*]}",
            S4Class::Phi4Single => "{phi[4;*]}",
            S4Class::Phi2 => "{phi[2]}",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn param(x: i64, y: i64) -> ProjParam {
        ProjParam::from_ints(FieldCtx::Rational, x, y).unwrap()
    }

    #[test]
    fn label_counts() {
        assert_eq!(OrbitLabel::all_labels(None).unwrap().len(), 26);
        let p = param(1, 2);
        assert_eq!(OrbitLabel::all_labels(Some(&p)).unwrap().len(), 27);
        let bad = param(1, 1);
        assert_eq!(
            OrbitLabel::all_labels(Some(&bad)).unwrap_err(),
            Error::BadParameter
        );
    }

    #[test]
    fn pair_partition_count() {
        let labels = OrbitLabel::all_labels(None).unwrap();
        let pairs = labels.iter().filter(|l| matches!(l, Phi4Pair(_))).count();
        assert_eq!(pairs, 3);
    }

    #[test]
    fn phi4_pair_identifications() {
        // {1,2} = {2,1} = {3,4} = {4,3} as pair partitions.
        let a = OrbitLabel::phi4_pair(1, 2).unwrap();
        assert_eq!(a, OrbitLabel::phi4_pair(2, 1).unwrap());
        assert_eq!(a, OrbitLabel::phi4_pair(3, 4).unwrap());
        assert_ne!(a, OrbitLabel::phi4_pair(1, 3).unwrap());
    }

    #[test]
    fn rank_function_values() {
        let phi8 = Phi8.phi();
        for mask in 0..16u32 {
            assert_eq!(phi8.value(mask), (mask.count_ones() as u8).min(3));
        }
        let fiber = Phi6Fiber.phi();
        for mask in 0..16u32 {
            assert_eq!(fiber.value(mask), (mask.count_ones() as u8).min(2));
        }
        let phi5 = OrbitLabel::phi5(1, 2).unwrap().phi();
        assert_eq!(phi5.value(0b0011), 1); // {1,2}
        assert_eq!(phi5.value(0b0101), 2); // {1,3}
        assert_eq!(phi5.value(0b1111), 2); // {1,2,3,4}
    }

    #[test]
    fn rank_functions_are_distinct_across_discrete_labels() {
        let labels = OrbitLabel::all_labels(None).unwrap();
        for (i, a) in labels.iter().enumerate() {
            for b in labels.iter().skip(i + 1) {
                assert_ne!(a.phi().values(), b.phi().values(), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn representatives_match_table() {
        let q = FieldCtx::Rational;
        let c = |cols: &[&[i64]]| Configuration::from_int_columns(q, 3, cols).unwrap();
        assert_eq!(
            Phi8.representative(q).unwrap(),
            c(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
        );
        assert_eq!(
            OrbitLabel::phi6_pair(3, 4).unwrap().representative(q).unwrap(),
            c(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 1]])
        );
        assert_eq!(
            OrbitLabel::phi5(1, 2).unwrap().representative(q).unwrap(),
            c(&[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])
        );
        assert_eq!(
            OrbitLabel::o5(param(1, 2)).unwrap().representative(q).unwrap(),
            c(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 2, 0]])
        );
        assert_eq!(Phi6Fiber.representative(q).unwrap_err(), Error::NotAnOrbit);
    }

    #[test]
    fn parse_round_trips() {
        for l in OrbitLabel::all_labels(Some(&param(1, 2))).unwrap() {
            if matches!(l, O5(_)) {
                assert_eq!(OrbitLabel::parse("O5@2").unwrap(), l);
            } else {
                assert_eq!(OrbitLabel::parse(&l.to_string()).unwrap(), l, "{l}");
            }
        }
        assert_eq!(OrbitLabel::parse("O5@-1/2").unwrap(), O5(param(2, -1)));
        assert!(matches!(OrbitLabel::parse("O5@1"), Err(Error::BadParameter)));
        assert!(matches!(OrbitLabel::parse("O5@0"), Err(Error::BadParameter)));
        assert!(matches!(OrbitLabel::parse("phi[9]"), Err(Error::BadLabel(_))));
        assert!(matches!(OrbitLabel::parse("phi[4;5]"), Err(Error::BadLabel(_))));
        assert!(matches!(OrbitLabel::parse("junk"), Err(Error::BadLabel(_))));
    }

    #[test]
    fn dims() {
        assert_eq!(Phi8.orbit_dim(), 8);
        assert_eq!(OrbitLabel::o5(param(1, 2)).unwrap().orbit_dim(), 5);
        assert_eq!(Phi2.orbit_dim(), 2);
        assert_eq!(Phi6Fiber.orbit_dim(), 6);
    }

    #[test]
    fn mod_s4_classes() {
        assert_eq!(OrbitLabel::phi7(3).unwrap().mod_s4_class(), S4Class::Phi7);
        assert_eq!(Phi2.mod_s4_class(), S4Class::Phi2);
        assert_eq!(S4Class::all().len(), 9);
    }

    #[test]
    fn pointwise_order_examples() {
        let leq = |a: &OrbitLabel, b: &OrbitLabel| a.phi().leq(&b.phi()).unwrap();
        assert!(leq(&Phi2, &Phi8));
        assert!(leq(&OrbitLabel::phi5(1, 2).unwrap(), &Phi6Fiber));
        // phi[4;1] and phi[4;1,2] are incomparable: they disagree in
        // opposite directions on {1,2} and {2,3}.
        let single = OrbitLabel::phi4_single(1).unwrap();
        let pair = OrbitLabel::phi4_pair(1, 2).unwrap();
        assert!(!leq(&single, &pair));
        assert!(!leq(&pair, &single));
        assert_eq!(single.phi().value(0b0011), 2);
        assert_eq!(pair.phi().value(0b0011), 1);
        assert_eq!(single.phi().value(0b0110), 1);
        assert_eq!(pair.phi().value(0b0110), 2);
    }

    #[test]
    fn orbit_dimension_matches_the_splitting_formula() {
        // dim = 3 * (sum of block ranks) - (number of blocks), for every
        // orbit label.
        let p = param(1, 2);
        for l in OrbitLabel::all_labels(Some(&p)).unwrap() {
            if matches!(l, Phi6Fiber) {
                continue;
            }
            let s = l.splitting();
            assert_eq!(
                l.orbit_dim(),
                3 * s.total_rank() - s.block_count(),
                "formula fails for {l}"
            );
        }
    }
}
