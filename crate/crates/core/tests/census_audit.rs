//! Dimension audit across field sizes: exhaustive counts against the
//! per-class size polynomials and explicitly enumerated stabilizers.

use projorb::census::{
    census_by_label, dimension_audit, expected_orbit_size, gl_order, stabilizer_order_enumerated,
};
use projorb::field::FieldCtx;
use projorb::label::OrbitLabel;

#[test]
fn audit_passes_for_q_2_3_5() {
    let audit = dimension_audit(&[2, 3, 5]).unwrap();
    let bad: Vec<_> = audit.rows.iter().filter(|r| !r.ok).collect();
    assert!(audit.ok, "failing rows: {bad:?}");
    // 25 classes without parameterized orbits, plus q-2 of them otherwise.
    assert_eq!(audit.rows.iter().filter(|r| r.q == 2).count(), 25);
    assert_eq!(audit.rows.iter().filter(|r| r.q == 3).count(), 26);
    assert_eq!(audit.rows.iter().filter(|r| r.q == 5).count(), 28);
    // Orbit sizes grow with degree = orbit dimension; spot-check the
    // dense class: |GL3| / (q-1) scalars.
    for (q, expected) in [(2u64, 168u64), (3, 5616), (5, 372_000)] {
        let row = audit
            .rows
            .iter()
            .find(|r| r.q == q && r.label == "phi[8]")
            .unwrap();
        assert_eq!(row.orbit_size, expected);
        assert_eq!(row.expected_size, expected);
        assert_eq!(row.dim, 8);
    }
}

#[test]
fn enumerated_stabilizers_match_their_shapes() {
    // The dense orbit is stabilized exactly by the scalars.
    for q in [2u64, 3] {
        let field = FieldCtx::prime(q).unwrap();
        let rep = OrbitLabel::Phi8.representative(field).unwrap();
        assert_eq!(stabilizer_order_enumerated(&rep).unwrap(), q - 1);
    }
    // The parameterized orbit: scalar on the plane, free third column:
    // order (q-1)^2 q^2.
    let field = FieldCtx::prime(3).unwrap();
    let p = projorb::param::ProjParam::from_ints(field, 1, 2).unwrap();
    let rep = OrbitLabel::o5(p).unwrap().representative(field).unwrap();
    let stab = stabilizer_order_enumerated(&rep).unwrap();
    assert_eq!(stab, 36);
    assert_eq!(stab as u128 * expected_orbit_size(5, 3) as u128, gl_order(3, 3));
}

#[test]
fn census_counts_agree_with_the_finiteness_predicates() {
    // For m <= 3 the orbit count is the same over every field (finite
    // type); for m = 4 it grows with q (a parameterized family).
    use projorb::census::census_by_group_action;
    use projorb::openfinite::is_finite_type;
    for m in 2..=4usize {
        let at_q2 = census_by_group_action(2, 3, m).unwrap().report.orbit_count;
        let at_q3 = census_by_group_action(3, 3, m).unwrap().report.orbit_count;
        if is_finite_type(3, m) {
            assert_eq!(at_q2, at_q3, "finite type should not depend on the field at m={m}");
        } else {
            assert!(at_q3 > at_q2, "infinite type should grow with q at m={m}");
        }
    }
}

#[test]
fn per_label_counts_at_q5_match_the_polynomials() {
    let census = census_by_label(5).unwrap();
    for entry in &census.report.per_label {
        let expected = if entry.key == "phi[2]" {
            expected_orbit_size(2, 5)
        } else if entry.key.starts_with("phi[4") {
            expected_orbit_size(4, 5)
        } else if entry.key.starts_with("phi[5") || entry.key.starts_with("O(5;") {
            expected_orbit_size(5, 5)
        } else if entry.key.starts_with("phi[6") {
            expected_orbit_size(6, 5)
        } else if entry.key.starts_with("phi[7") {
            expected_orbit_size(7, 5)
        } else {
            expected_orbit_size(8, 5)
        };
        assert_eq!(entry.count, expected, "count off for {}", entry.key);
    }
    // Frozen totals: 31 + 7*930 + 9*3720 + 6*23250 + 4*93000 + 372000.
    assert_eq!(expected_orbit_size(2, 5), 31);
    assert_eq!(expected_orbit_size(4, 5), 930);
    assert_eq!(expected_orbit_size(5, 5), 3720);
    assert_eq!(expected_orbit_size(6, 5), 23_250);
    assert_eq!(expected_orbit_size(7, 5), 93_000);
    assert_eq!(expected_orbit_size(8, 5), 372_000);
}
