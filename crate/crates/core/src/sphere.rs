//! Seifert fibrations of the 3-sphere and their positive d-section
//! families in closed form, with an independent Riemann-Hurwitz oracle
//! through the lift to the Hopf fibration.
//!
//! Every Seifert fibration of S^3 comes from the circle action
//! `theta . (z1, z2) = (exp(i alpha1 theta) z1, exp(i alpha2 theta) z2)` with
//! coprime positive weights, giving invariants
//! `M(0; (alpha1, beta1), (alpha2, beta2))` with
//! `alpha1 beta2 + alpha2 beta1 = 1` and Euler number
//! `e = -1/(alpha1 alpha2)`.  Positive d-sections exist exactly for
//!
//! | d                               | boundary | C1 | C2 | genus                                  |
//! |---------------------------------|----------|----|----|----------------------------------------|
//! | k a1 a2, k >= 1                 | k        |    |    | ((k a1 - 1)(k a2 - 1) + 1 - k)/2       |
//! | k a1 a2 + a2, k >= 0, a1 > 1    | k + 1    | in |    | ((k a1 + 1)(k a2 - 1) + 1 - k)/2       |
//! | k a1 a2 + a1, k >= 0, a2 > 1    | k + 1    |    | in | ((k a1 - 1)(k a2 + 1) + 1 - k)/2       |
//! | k a1 a2 + a1 + a2, a1, a2 > 1   | k + 2    | in | in | ((k a1 + 1)(k a2 + 1) - 1 - k)/2       |
//!
//! where `C1`, `C2` are the fibers through `(1,0)` and `(0,1)` of
//! multiplicities `alpha1`, `alpha2`.  When a weight is 1 that fiber is
//! regular and only the first family lists its degrees.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::mod_inverse;
use crate::seifert::SeifertData;
use crate::Error;

/// A Seifert fibration of S^3: coprime weights plus the canonical Bezout
/// pair `alpha1 beta2 + alpha2 beta1 = 1` with `0 <= beta1 < alpha1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereFibration {
    alpha1: BigInt,
    alpha2: BigInt,
    beta1: BigInt,
    beta2: BigInt,
}

/// The four d-section families of a sphere fibration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `d = k alpha1 alpha2`: both multiple fibers interior.
    Regular,
    /// `d = k alpha1 alpha2 + alpha2` (needs `alpha1 > 1`): C1 on the boundary.
    C1Boundary,
    /// `d = k alpha1 alpha2 + alpha1` (needs `alpha2 > 1`): C2 on the boundary.
    C2Boundary,
    /// `d = k alpha1 alpha2 + alpha1 + alpha2` (needs both > 1): both on the boundary.
    BothBoundary,
}

/// One admissible degree with its closed-form section data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: Family,
    pub k_param: BigInt,
    pub d: BigInt,
    pub boundary_count: BigInt,
    pub c1_in_boundary: bool,
    pub c2_in_boundary: bool,
    pub genus: BigInt,
}

/// Branch data of a holomorphic branched covering: `entries` lists
/// `(number_of_points, branching_index)` with every index >= 2, and
/// `sheet_count` is the covering degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchProfile {
    pub entries: Vec<(BigInt, BigInt)>,
    pub sheet_count: BigInt,
}

impl BranchProfile {
    /// Total ramification `sum count * (index - 1)`.
    pub fn ramification(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(count, index)| count * (index - BigInt::one()))
            .sum()
    }

    /// Solves `chi_up = sheets * chi_down - ramification` for the genus of
    /// the base surface (`chi_down = 2 - 2g`).  Panics when the profile is
    /// inconsistent (non-integral or negative genus): that is a bug, not a
    /// data condition.
    pub fn solve_base_genus(&self, chi_up: &BigInt) -> BigInt {
        let chi_down_num = chi_up + self.ramification();
        let (chi_down, rem) = chi_down_num.div_rem(&self.sheet_count);
        assert!(
            rem.is_zero(),
            "branch profile inconsistent: chi {chi_down_num} not divisible by {} sheets",
            self.sheet_count
        );
        let twice_genus = BigInt::from(2) - chi_down;
        let (genus, rem) = twice_genus.div_rem(&BigInt::from(2));
        assert!(
            rem.is_zero() && !genus.is_negative(),
            "branch profile inconsistent: 2 - chi_down = {twice_genus}"
        );
        genus
    }
}

/// Builds the canonical sphere fibration for coprime positive weights.
pub fn sphere_from_weights(
    alpha1: impl Into<BigInt>,
    alpha2: impl Into<BigInt>,
) -> Result<SphereFibration, Error> {
    let alpha1 = alpha1.into();
    let alpha2 = alpha2.into();
    for alpha in [&alpha1, &alpha2] {
        if !alpha.is_positive() {
            return Err(Error::NonPositiveWeight {
                value: alpha.clone(),
            });
        }
    }
    let gcd = alpha1.gcd(&alpha2);
    if !gcd.is_one() {
        return Err(Error::NonCoprimeWeights {
            a: alpha1,
            b: alpha2,
            gcd,
        });
    }
    // beta1 = alpha2^(-1) mod alpha1 in [0, alpha1); beta2 makes the Bezout
    // identity exact.  For alpha1 = 1 this gives (beta1, beta2) = (0, 1).
    let beta1 = mod_inverse(&alpha2.mod_floor(&alpha1), &alpha1).expect("weights are coprime");
    let beta2 = (BigInt::one() - &alpha2 * &beta1) / &alpha1;
    debug_assert!((&alpha1 * &beta2 + &alpha2 * &beta1).is_one());
    Ok(SphereFibration {
        alpha1,
        alpha2,
        beta1,
        beta2,
    })
}

impl SphereFibration {
    pub fn alpha1(&self) -> &BigInt {
        &self.alpha1
    }

    pub fn alpha2(&self) -> &BigInt {
        &self.alpha2
    }

    pub fn beta1(&self) -> &BigInt {
        &self.beta1
    }

    pub fn beta2(&self) -> &BigInt {
        &self.beta2
    }

    /// The invariants `M(0; (alpha1, beta1), (alpha2, beta2))`.
    pub fn to_seifert_data(&self) -> SeifertData {
        SeifertData::from_pairs(
            0,
            [
                (self.alpha1.clone(), self.beta1.clone()),
                (self.alpha2.clone(), self.beta2.clone()),
            ],
        )
        .expect("Bezout pairs are coprime")
    }

    /// `e = -1/(alpha1 alpha2)`.
    pub fn euler_number(&self) -> crate::Rational {
        -crate::Rational::new(BigInt::one(), &self.alpha1 * &self.alpha2)
    }

    /// Matches `d` against the four families.  The side conditions make the
    /// families disjoint, so at most one row exists per degree; `None` means
    /// no positive d-section.
    pub fn admissible_d(&self, d: &BigInt) -> Option<TableRow> {
        if !d.is_positive() {
            return None;
        }
        let a1 = &self.alpha1;
        let a2 = &self.alpha2;
        let a1a2 = a1 * a2;
        let one = BigInt::one();
        let mut row: Option<TableRow> = None;
        let mut push = |family: Family, k: BigInt| {
            let built = self.table_row(family, &k);
            debug_assert!(row.is_none(), "families must be disjoint");
            row = Some(built);
        };

        if (d % &a1a2).is_zero() {
            push(Family::Regular, d / &a1a2);
        }
        if a1 > &one && d >= a2 && ((d - a2) % &a1a2).is_zero() {
            push(Family::C1Boundary, (d - a2) / &a1a2);
        }
        if a2 > &one && d >= a1 && ((d - a1) % &a1a2).is_zero() {
            push(Family::C2Boundary, (d - a1) / &a1a2);
        }
        if a1 > &one && a2 > &one && d >= &(a1 + a2) && ((d - a1 - a2) % &a1a2).is_zero() {
            push(Family::BothBoundary, (d - a1 - a2) / &a1a2);
        }
        row
    }

    /// The row of one family at parameter `k` (`k >= 1` for `Regular`,
    /// `k >= 0` otherwise; side conditions as in the table).
    pub fn table_row(&self, family: Family, k: &BigInt) -> TableRow {
        let a1 = &self.alpha1;
        let a2 = &self.alpha2;
        let one = BigInt::one();
        let ka1 = k * a1;
        let ka2 = k * a2;
        let (d, boundary_count, c1, c2, twice_genus) = match family {
            Family::Regular => {
                assert!(k >= &one, "Regular family needs k >= 1");
                (
                    k * a1 * a2,
                    k.clone(),
                    false,
                    false,
                    (&ka1 - &one) * (&ka2 - &one) + &one - k,
                )
            }
            Family::C1Boundary => {
                assert!(!k.is_negative() && a1 > &one, "C1Boundary needs k >= 0, alpha1 > 1");
                (
                    k * a1 * a2 + a2,
                    k + &one,
                    true,
                    false,
                    (&ka1 + &one) * (&ka2 - &one) + &one - k,
                )
            }
            Family::C2Boundary => {
                assert!(!k.is_negative() && a2 > &one, "C2Boundary needs k >= 0, alpha2 > 1");
                (
                    k * a1 * a2 + a1,
                    k + &one,
                    false,
                    true,
                    (&ka1 - &one) * (&ka2 + &one) + &one - k,
                )
            }
            Family::BothBoundary => {
                assert!(
                    !k.is_negative() && a1 > &one && a2 > &one,
                    "BothBoundary needs k >= 0, alpha1 > 1, alpha2 > 1"
                );
                (
                    k * a1 * a2 + a1 + a2,
                    k + BigInt::from(2),
                    true,
                    true,
                    (&ka1 + &one) * (&ka2 + &one) - &one - k,
                )
            }
        };
        let (genus, rem) = twice_genus.div_rem(&BigInt::from(2));
        assert!(
            rem.is_zero() && !genus.is_negative(),
            "closed-form genus must be a non-negative integer"
        );
        TableRow {
            family,
            k_param: k.clone(),
            d,
            boundary_count,
            c1_in_boundary: c1,
            c2_in_boundary: c2,
            genus,
        }
    }

    /// Branch profile of the lift of the capped d-section to the Hopf
    /// fibration.  The lifted, desingularized and capped section is a curve
    /// of degree d in CP^2 with Euler characteristic `2 - (d-1)(d-2)`, and it
    /// covers the capped d-section with `alpha1 alpha2` sheets.  Entries of
    /// index 1 (regular fibers) are no branch points and are dropped.
    pub fn hopf_lift_profile(&self, row: &TableRow) -> BranchProfile {
        let a1 = &self.alpha1;
        let a2 = &self.alpha2;
        let d = &row.d;
        let raw: Vec<(BigInt, BigInt)> = match row.family {
            // Interior C1 lifts to d points of index alpha2; interior C2 to
            // d points of index alpha1.
            Family::Regular => vec![(d.clone(), a2.clone()), (d.clone(), a1.clone())],
            // C1 on the boundary: its desingularized lift meets the cap in
            // alpha2 points of index alpha1 plus d phantom points of index
            // alpha2; interior C2 contributes d points of index alpha1.
            Family::C1Boundary => vec![
                (a2.clone(), a1.clone()),
                (d.clone(), a1.clone()),
                (d.clone(), a2.clone()),
            ],
            Family::C2Boundary => vec![
                (a1.clone(), a2.clone()),
                (d.clone(), a2.clone()),
                (d.clone(), a1.clone()),
            ],
            Family::BothBoundary => vec![
                (a2.clone(), a1.clone()),
                (d.clone(), a2.clone()),
                (a1.clone(), a2.clone()),
                (d.clone(), a1.clone()),
            ],
        };
        BranchProfile {
            entries: raw
                .into_iter()
                .filter(|(_, index)| index > &BigInt::one())
                .collect(),
            sheet_count: a1 * a2,
        }
    }
}

/// Recomputes the genus of a table row through the Hopf lift: a degree-d
/// curve upstairs has `chi = 2 - (d-1)(d-2)`, and Riemann-Hurwitz for the
/// `alpha1 alpha2`-sheeted covering determines the genus downstairs.  Panics
/// when the numbers are inconsistent; that indicates a profile bug.
pub fn rh_hopf_lift_genus(fibration: &SphereFibration, row: &TableRow) -> BigInt {
    let one = BigInt::one();
    let chi_up = BigInt::from(2) - (&row.d - &one) * (&row.d - BigInt::from(2));
    fibration.hopf_lift_profile(row).solve_base_genus(&chi_up)
}
