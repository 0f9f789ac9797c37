//! Exhaustive agreement sweep for the 3-sphere fibrations: the closed-form
//! family table, the general classification, the Riemann-Hurwitz lift
//! through the Hopf fibration, and the weighted degree-genus formula must
//! produce identical answers for every admissible degree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use seifert_sos::{
    classify_positive_d_section, degree_genus, minimal_positive_d, rh_hopf_lift_genus,
    rh_quotient_chi, sphere_from_weights, PositiveSectionOutcome, Topology, WeightedPlane,
};

fn coprime_weight_pairs(max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a1 in 1..=max {
        for a2 in 1..=max {
            if a1.gcd(&a2) == 1 {
                out.push((a1, a2));
            }
        }
    }
    out
}

#[test]
fn four_oracles_agree_on_every_degree() {
    for (a1, a2) in coprime_weight_pairs(12) {
        let fibration = sphere_from_weights(a1, a2).unwrap();
        let data = fibration.to_seifert_data();
        let plane = WeightedPlane::new(1, a1, a2).unwrap();

        for d in 1..=200i64 {
            let d = BigInt::from(d);
            let row = fibration.admissible_d(&d);
            let outcome = classify_positive_d_section(&data, &d).unwrap();

            match (&row, &outcome) {
                (Some(row), PositiveSectionOutcome::Section(report)) => {
                    // e = -1/(a1 a2) < 0, so the closed case never arises.
                    let genus = match &report.topology {
                        Topology::Connected { genus } => genus.clone(),
                        other => panic!("({a1},{a2}) d={}: unexpected topology {other:?}", row.d),
                    };
                    assert_eq!(row.genus, genus, "table vs classification genus");
                    assert_eq!(
                        row.boundary_count, report.boundary_count,
                        "table vs classification boundary"
                    );

                    let rh = rh_hopf_lift_genus(&fibration, row);
                    assert_eq!(rh, genus, "Hopf-lift Riemann-Hurwitz genus");

                    let dg = degree_genus(&plane, &d);
                    assert!(dg.is_integer(), "degree-genus must be integral here");
                    assert_eq!(dg.to_integer(), genus, "degree-genus route");

                    let chi = rh_quotient_chi(&data, &d, report).unwrap();
                    assert_eq!(chi, BigInt::from(2) - BigInt::from(2) * &genus);
                }
                (None, PositiveSectionOutcome::Obstructed(_)) => {}
                (row, outcome) => panic!(
                    "({a1},{a2}) d={d}: admissibility disagreement, table {row:?} vs {outcome:?}"
                ),
            }
        }
    }
}

#[test]
fn hopf_fibration_realizes_every_degree() {
    let hopf = sphere_from_weights(1, 1).unwrap();
    let data = hopf.to_seifert_data();
    for d in 1..=60i64 {
        let bd = BigInt::from(d);
        let row = hopf.admissible_d(&bd).expect("all degrees admissible");
        assert_eq!(row.boundary_count, bd);
        assert_eq!(row.genus, BigInt::from((d - 1) * (d - 2) / 2));
        let report = classify_positive_d_section(&data, &bd)
            .unwrap()
            .section()
            .cloned()
            .expect("section exists");
        assert_eq!(report.boundary_count, BigInt::from(d));
    }
}

#[test]
fn disc_like_sections_exist_for_all_weights() {
    // Every sphere fibration has a disc-like section (genus 0, one boundary
    // component) at some admissible degree no larger than a1 a2 + a1 + a2.
    for (a1, a2) in coprime_weight_pairs(12) {
        let fibration = sphere_from_weights(a1, a2).unwrap();
        let bound = a1 * a2 + a1 + a2;
        let found = (1..=bound).any(|d| {
            fibration
                .admissible_d(&BigInt::from(d))
                .is_some_and(|row| row.genus.is_zero() && row.boundary_count.is_one())
        });
        assert!(found, "no disc-like section for weights ({a1},{a2})");
    }
}

#[test]
fn minimal_degree_is_smallest_table_degree() {
    for (a1, a2) in coprime_weight_pairs(9) {
        let fibration = sphere_from_weights(a1, a2).unwrap();
        let data = fibration.to_seifert_data();
        let bound = BigInt::from(2 * a1 * a2);
        let minimal = minimal_positive_d(&data, &bound)
            .expect("e < 0 guarantees a section by d = a1 a2")
            .d;
        let smallest_admissible = (1..=2 * a1 * a2)
            .map(BigInt::from)
            .find(|d| fibration.admissible_d(d).is_some())
            .unwrap();
        assert_eq!(minimal, smallest_admissible, "weights ({a1},{a2})");
    }
}

#[test]
fn symmetric_weights_give_isomorphic_fibrations() {
    for (a1, a2) in [(2i64, 3i64), (3, 5), (1, 7), (4, 9)] {
        let f = sphere_from_weights(a1, a2).unwrap().to_seifert_data();
        let g = sphere_from_weights(a2, a1).unwrap().to_seifert_data();
        assert!(f.is_isomorphic(&g));
    }
}
