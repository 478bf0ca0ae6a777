//! The symmetric-group action on columns, labels, and parameters.
//!
//! Permuting the four columns of a configuration permutes the index data of
//! its label; on the parameterized family the induced action on parameters
//! factors through a homomorphism into 2x2 matrices whose kernel is the
//! Klein four-group.

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::label::{OrbitLabel, Pair};
use crate::param::ProjParam;

/// A permutation of `{1,2,3,4}`, stored as the images of 1..=4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub fn identity() -> Perm4 {
        Perm4([1, 2, 3, 4])
    }

    /// Builds a permutation from the images of 1, 2, 3, 4.
    pub fn from_images(images: [u8; 4]) -> Result<Perm4> {
        let mut seen = [false; 4];
        for &v in &images {
            if !(1..=4).contains(&v) || seen[v as usize - 1] {
                return Err(Error::BadLabel(format!("not a permutation: {images:?}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Perm4(images))
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(a: u8, b: u8) -> Result<Perm4> {
        if !(1..=4).contains(&a) || !(1..=4).contains(&b) || a == b {
            return Err(Error::BadLabel(format!("bad transposition ({a},{b})")));
        }
        let mut images = [1, 2, 3, 4];
        images.swap(a as usize - 1, b as usize - 1);
        Ok(Perm4(images))
    }

    /// All 24 permutations, in lexicographic order of their images.
    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        let mut items = [1u8, 2, 3, 4];
        permute(&mut items, 0, &mut out);
        out.sort_by_key(|p| p.0);
        out
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize - 1]
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        let mut images = [0u8; 4];
        for i in 1..=4u8 {
            images[i as usize - 1] = self.apply(other.apply(i));
        }
        Perm4(images)
    }

    pub fn inverse(&self) -> Perm4 {
        let mut images = [0u8; 4];
        for i in 1..=4u8 {
            images[self.apply(i) as usize - 1] = i;
        }
        Perm4(images)
    }

    pub fn is_identity(&self) -> bool {
        self.0 == [1, 2, 3, 4]
    }

    /// Decomposes into adjacent transpositions `(i, i+1)`, rightmost factor
    /// applied first.
    fn adjacent_word(&self) -> Vec<u8> {
        // Bubble-sort the one-line form; swapping positions i, i+1 of the
        // one-line form realizes right multiplication by the adjacent
        // transposition (i, i+1), so sigma * s_{a1} * ... * s_{ak} = id and
        // sigma = s_{ak} * ... * s_{a1}.
        let mut line = self.0;
        let mut word = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..3 {
                if line[i] > line[i + 1] {
                    line.swap(i, i + 1);
                    word.push(i as u8 + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word.reverse();
        word
    }
}

impl std::fmt::Display for Perm4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{} {} {} {}]", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

fn permute(items: &mut [u8; 4], k: usize, out: &mut Vec<Perm4>) {
    if k == 4 {
        out.push(Perm4(*items));
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Generator images of the parameter homomorphism: the transpositions
/// (1,2) and (3,4) act by the first matrix, (2,3) by the second.
pub const PSI_GEN_SWAP: [[i64; 2]; 2] = [[0, -1], [-1, 0]];
pub const PSI_GEN_MID: [[i64; 2]; 2] = [[-1, 1], [0, 1]];

fn mat_mul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// The homomorphism from column permutations to 2x2 integer matrices
/// governing the parameter of the `O5` family. Its kernel is the Klein
/// four-group, and its image acts on the three special points of the
/// projective line as the full symmetric group on them.
pub fn psi(sigma: &Perm4) -> [[i64; 2]; 2] {
    psi_with_generators(sigma, &PSI_GEN_SWAP, &PSI_GEN_MID)
}

/// `psi` with substituted generator images. Exists so the verification
/// suite can run a negative control against a corrupted generator table.
pub fn psi_with_generators(
    sigma: &Perm4,
    gen_swap: &[[i64; 2]; 2],
    gen_mid: &[[i64; 2]; 2],
) -> [[i64; 2]; 2] {
    let mut out = [[1, 0], [0, 1]];
    for s in sigma.adjacent_word() {
        let g = match s {
            1 | 3 => gen_swap,
            2 => gen_mid,
            _ => unreachable!(),
        };
        out = mat_mul(&out, g);
    }
    out
}

/// Acts on a configuration by permuting columns: column `i` of the result
/// is column `sigma^{-1}(i)` of the input.
impl Configuration {
    pub fn permuted(&self, sigma: &Perm4) -> Result<Configuration> {
        if self.m() != 4 {
            return Err(Error::UnsupportedShape(format!(
                "column permutation needs m = 4, got m = {}",
                self.m()
            )));
        }
        let inv = sigma.inverse();
        let columns = (1..=4u8)
            .map(|i| self.column(inv.apply(i) as usize - 1).clone())
            .collect();
        Configuration::new(self.field(), self.n(), columns)
    }
}

/// Transports a label along a column permutation: index data maps forward
/// by `sigma`, the `O5` parameter moves by `psi(sigma)`, and the `phi[6]`
/// fiber node is fixed.
pub fn s4_act(sigma: &Perm4, label: &OrbitLabel) -> OrbitLabel {
    let map_pair = |p: &Pair| {
        Pair::new(sigma.apply(p.lo()), sigma.apply(p.hi())).expect("images stay distinct")
    };
    match label {
        OrbitLabel::Phi8 => OrbitLabel::Phi8,
        OrbitLabel::Phi2 => OrbitLabel::Phi2,
        OrbitLabel::Phi6Fiber => OrbitLabel::Phi6Fiber,
        OrbitLabel::Phi7(i) => OrbitLabel::Phi7(sigma.apply(*i)),
        OrbitLabel::Phi4Single(i) => OrbitLabel::Phi4Single(sigma.apply(*i)),
        OrbitLabel::Phi6Pair(p) => OrbitLabel::Phi6Pair(map_pair(p)),
        OrbitLabel::Phi5(p) => OrbitLabel::Phi5(map_pair(p)),
        OrbitLabel::Phi4Pair(p) => {
            OrbitLabel::phi4_pair(sigma.apply(p.lo()), sigma.apply(p.hi()))
                .expect("images stay distinct")
        }
        OrbitLabel::O5(p) => {
            let moved = p
                .apply_int_matrix(&psi(sigma))
                .expect("psi matrices are invertible");
            OrbitLabel::o5(moved).expect("the parameter action preserves primedness")
        }
    }
}

/// The orbit of a primed parameter under all column permutations: in affine
/// coordinates the set `{a, 1/a, 1-a, 1/(1-a), 1-1/a, 1/(1-1/a)}`. Size 6
/// generically, smaller on special orbits.
pub fn parameter_orbit(p: &ProjParam) -> Result<Vec<ProjParam>> {
    if !p.is_primed() {
        return Err(Error::BadParameter);
    }
    let mut orbit: Vec<ProjParam> = Vec::new();
    for sigma in Perm4::all() {
        let q = p.apply_int_matrix(&psi(&sigma))?;
        if !orbit.contains(&q) {
            orbit.push(q);
        }
    }
    orbit.sort();
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn param(x: i64, y: i64) -> ProjParam {
        ProjParam::from_ints(FieldCtx::Rational, x, y).unwrap()
    }

    #[test]
    fn group_basics() {
        let all = Perm4::all();
        assert_eq!(all.len(), 24);
        for p in &all {
            assert!(p.compose(&p.inverse()).is_identity());
        }
        let s = Perm4::transposition(1, 2).unwrap();
        let t = Perm4::transposition(2, 3).unwrap();
        // (1,2).(2,3) maps 1->2, 2->3... check against the 3-cycle.
        let c = s.compose(&t);
        assert_eq!(c.apply(1), 2);
        assert_eq!(c.apply(2), 3);
        assert_eq!(c.apply(3), 1);
    }

    #[test]
    fn psi_generators() {
        let s12 = Perm4::transposition(1, 2).unwrap();
        let s23 = Perm4::transposition(2, 3).unwrap();
        let s34 = Perm4::transposition(3, 4).unwrap();
        assert_eq!(psi(&s12), [[0, -1], [-1, 0]]);
        assert_eq!(psi(&s34), [[0, -1], [-1, 0]]);
        assert_eq!(psi(&s23), [[-1, 1], [0, 1]]);
    }

    #[test]
    fn psi_is_a_homomorphism() {
        let all = Perm4::all();
        for a in &all {
            for b in &all {
                let lhs = psi(&a.compose(b));
                let rhs = mat_mul(&psi(a), &psi(b));
                assert_eq!(lhs, rhs, "psi({a} . {b})");
            }
        }
    }

    #[test]
    fn psi_kernel_is_klein_four() {
        let id = [[1, 0], [0, 1]];
        let mut kernel: Vec<Perm4> = Perm4::all().into_iter().filter(|s| psi(s) == id).collect();
        kernel.sort_by_key(|p| [p.apply(1), p.apply(2), p.apply(3), p.apply(4)]);
        let expected = [
            Perm4::identity(),
            // (1,2)(3,4), (1,3)(2,4), (1,4)(2,3)
            Perm4::from_images([2, 1, 4, 3]).unwrap(),
            Perm4::from_images([3, 4, 1, 2]).unwrap(),
            Perm4::from_images([4, 3, 2, 1]).unwrap(),
        ];
        let mut expected = expected.to_vec();
        expected.sort_by_key(|p| [p.apply(1), p.apply(2), p.apply(3), p.apply(4)]);
        assert_eq!(kernel, expected);
    }

    #[test]
    fn mid_generator_moves_parameters_as_stated() {
        // (2,3) sends (p1, p2) to (p2 - p1, p2).
        let s23 = Perm4::transposition(2, 3).unwrap();
        let p = param(3, 7);
        let q = p.apply_int_matrix(&psi(&s23)).unwrap();
        assert_eq!(q, param(4, 7));
    }

    #[test]
    fn label_action_examples() {
        let s12 = Perm4::transposition(1, 2).unwrap();
        assert_eq!(
            s4_act(&s12, &OrbitLabel::phi7(1).unwrap()),
            OrbitLabel::phi7(2).unwrap()
        );
        // (1,2) sends the parameter [1:2] to [2:1].
        let o5 = OrbitLabel::o5(param(1, 2)).unwrap();
        assert_eq!(s4_act(&s12, &o5), OrbitLabel::o5(param(2, 1)).unwrap());
        // The Klein four-group fixes every parameter.
        let klein = Perm4::from_images([2, 1, 4, 3]).unwrap();
        assert_eq!(s4_act(&klein, &o5), o5);
        let klein = Perm4::from_images([3, 4, 1, 2]).unwrap();
        assert_eq!(s4_act(&klein, &o5), o5);
    }

    #[test]
    fn parameter_orbit_of_three() {
        let orbit = parameter_orbit(&param(1, 3)).unwrap();
        let affines: Vec<String> = orbit
            .iter()
            .map(|p| p.affine().unwrap().to_string())
            .collect();
        let mut expected = vec!["3", "1/3", "-2", "-1/2", "2/3", "3/2"];
        let mut got = affines.clone();
        expected.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn harmonic_orbit_collapses() {
        let orbit = parameter_orbit(&param(1, -1)).unwrap();
        assert_eq!(orbit.len(), 3);
        let mut affines: Vec<String> = orbit
            .iter()
            .map(|p| p.affine().unwrap().to_string())
            .collect();
        affines.sort_unstable();
        assert_eq!(affines, vec!["-1", "1/2", "2"]);
    }

    #[test]
    fn parameter_orbit_rejects_special_points() {
        assert_eq!(parameter_orbit(&param(1, 0)).unwrap_err(), Error::BadParameter);
        assert_eq!(parameter_orbit(&param(1, 1)).unwrap_err(), Error::BadParameter);
    }

    #[test]
    fn quotient_class_is_constant_on_label_orbits() {
        let labels = OrbitLabel::all_labels(Some(&param(1, 2))).unwrap();
        for sigma in Perm4::all() {
            for l in &labels {
                assert_eq!(s4_act(&sigma, l).mod_s4_class(), l.mod_s4_class());
            }
        }
    }

    #[test]
    fn permuted_configuration() {
        let cfg = Configuration::from_int_columns(
            FieldCtx::Rational,
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 1, 1]],
        )
        .unwrap();
        let s12 = Perm4::transposition(1, 2).unwrap();
        let out = cfg.permuted(&s12).unwrap();
        assert_eq!(out.column(0), cfg.column(1));
        assert_eq!(out.column(1), cfg.column(0));
        assert_eq!(out.column(2), cfg.column(2));
        // Composition: permuting by sigma then tau equals tau . sigma.
        let s23 = Perm4::transposition(2, 3).unwrap();
        let two_steps = cfg.permuted(&s12).unwrap().permuted(&s23).unwrap();
        let at_once = cfg.permuted(&s23.compose(&s12)).unwrap();
        assert_eq!(two_steps, at_once);
    }
}
