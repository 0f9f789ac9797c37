//! Degree-genus arithmetic on weighted projective planes and the algebraic
//! curves realizing the d-sections of sphere fibrations.
//!
//! A nonsingular curve of degree d in P(a0, a1, a2) with pairwise coprime
//! weights has genus
//! `g = (d^2/(a0 a1 a2) - d sum_(i<j) gcd(ai, aj)/(ai aj) + sum_i gcd(ai, d)/ai - 1) / 2`.
//! The d-sections of the sphere fibration with weights `(alpha1, alpha2)`
//! appear as curves `F = f(z1, z2) - z0^d` in `P(1, alpha1, alpha2)` where
//! `f` is a product of `k` pairwise distinct weighted binomial factors and
//! optional monomials `z1^eps1 z2^eps2`, so admissible degrees are exactly
//! `d = k alpha1 alpha2 + eps1 alpha1 + eps2 alpha2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::sphere::sphere_from_weights;
use crate::{Error, Rational};

/// Weighted projective plane `P(a0, a1, a2)` with positive, pairwise
/// coprime weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPlane {
    a0: BigInt,
    a1: BigInt,
    a2: BigInt,
}

impl WeightedPlane {
    pub fn new(
        a0: impl Into<BigInt>,
        a1: impl Into<BigInt>,
        a2: impl Into<BigInt>,
    ) -> Result<Self, Error> {
        let a0 = a0.into();
        let a1 = a1.into();
        let a2 = a2.into();
        for value in [&a0, &a1, &a2] {
            if !value.is_positive() {
                return Err(Error::NonPositiveWeight {
                    value: value.clone(),
                });
            }
        }
        for (x, y) in [(&a0, &a1), (&a0, &a2), (&a1, &a2)] {
            let gcd = x.gcd(y);
            if !gcd.is_one() {
                return Err(Error::NonCoprimeWeights {
                    a: x.clone(),
                    b: y.clone(),
                    gcd,
                });
            }
        }
        Ok(Self { a0, a1, a2 })
    }

    pub fn weights(&self) -> [&BigInt; 3] {
        [&self.a0, &self.a1, &self.a2]
    }
}

/// Genus of a nonsingular degree-d curve in the weighted plane, as an exact
/// rational.  The value is a non-negative integer exactly when a nonsingular
/// curve of that degree exists; callers decide integrality.
pub fn degree_genus(plane: &WeightedPlane, d: &BigInt) -> Rational {
    debug_assert!(d.is_positive(), "degree must be positive");
    let [a0, a1, a2] = plane.weights();
    let product = a0 * a1 * a2;
    let d_rat = Rational::from(d.clone());

    let quadratic = &d_rat * &d_rat / Rational::from(product);
    let mixed: Rational = [(a0, a1), (a0, a2), (a1, a2)]
        .into_iter()
        .map(|(x, y)| Rational::new(x.gcd(y), x * y))
        .sum();
    let fixed: Rational = [a0, a1, a2]
        .into_iter()
        .map(|a| Rational::new(a.gcd(d), a.clone()))
        .sum();
    (quadratic - d_rat * mixed + fixed - Rational::one())
        / Rational::from(BigInt::from(2))
}

/// One representation `d = k alpha1 alpha2 + eps1 alpha1 + eps2 alpha2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRep {
    pub d: BigInt,
    pub k: BigInt,
    pub eps1: bool,
    pub eps2: bool,
}

/// Enumerates all representations with `k >= 0`, `eps_i in {0, 1}`,
/// `k + eps1 + eps2 >= 1`, and `d <= d_max`, sorted by `(d, k, eps1, eps2)`.
/// A degree can have several representations when a weight is 1.
pub fn admissible_degrees(
    alpha1: &BigInt,
    alpha2: &BigInt,
    d_max: &BigInt,
) -> Result<Vec<DegreeRep>, Error> {
    for alpha in [alpha1, alpha2] {
        if !alpha.is_positive() {
            return Err(Error::NonPositiveWeight {
                value: alpha.clone(),
            });
        }
    }
    let gcd = alpha1.gcd(alpha2);
    if !gcd.is_one() {
        return Err(Error::NonCoprimeWeights {
            a: alpha1.clone(),
            b: alpha2.clone(),
            gcd,
        });
    }
    let a1a2 = alpha1 * alpha2;
    let mut reps = Vec::new();
    for (eps1, eps2) in [(false, false), (false, true), (true, false), (true, true)] {
        let offset = if eps1 { alpha1.clone() } else { BigInt::zero() }
            + if eps2 { alpha2.clone() } else { BigInt::zero() };
        let mut k = if eps1 || eps2 {
            BigInt::zero()
        } else {
            BigInt::one()
        };
        loop {
            let d = &k * &a1a2 + &offset;
            if &d > d_max {
                break;
            }
            reps.push(DegreeRep {
                d,
                k: k.clone(),
                eps1,
                eps2,
            });
            k += 1;
        }
    }
    reps.sort_by(|x, y| {
        (&x.d, &x.k, x.eps1, x.eps2).cmp(&(&y.d, &y.k, y.eps1, y.eps2))
    });
    Ok(reps)
}

/// A curve `F = f(z1, z2) - z0^d` in `P(1, alpha1, alpha2)` with
/// `f = prod_i (b_i^alpha1 z1^alpha2 - a_i^alpha2 z2^alpha1) * z1^eps1 * z2^eps2`.
///
/// The roots `[a_i : b_i]` are stored as coprime integer pairs with both
/// coordinates nonzero; pairwise distinctness of the factors keeps `F`
/// nonsingular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    plane: WeightedPlane,
    eps1: bool,
    eps2: bool,
    roots: Vec<(BigInt, BigInt)>,
}

impl CurveSpec {
    pub fn new(
        alpha1: impl Into<BigInt>,
        alpha2: impl Into<BigInt>,
        eps1: bool,
        eps2: bool,
        roots: Vec<(BigInt, BigInt)>,
    ) -> Result<Self, Error> {
        let plane = WeightedPlane::new(1, alpha1, alpha2)?;
        if roots.is_empty() && !eps1 && !eps2 {
            return Err(Error::EmptyCurve);
        }
        for (index, (a, b)) in roots.iter().enumerate() {
            if a.is_zero() || b.is_zero() {
                return Err(Error::RootAtCoordinatePoint {
                    index,
                    a: a.clone(),
                    b: b.clone(),
                });
            }
            if !a.gcd(b).is_one() {
                return Err(Error::RootNotReduced {
                    index,
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
        let [_, alpha1, alpha2] = plane.weights();
        // Two roots give the same factor, up to scale, exactly when their
        // invariants [a^alpha2 : b^alpha1] agree.
        let invariants: Vec<(BigInt, BigInt)> = roots
            .iter()
            .map(|(a, b)| (pow(a, alpha2), pow(b, alpha1)))
            .collect();
        for i in 0..invariants.len() {
            for j in (i + 1)..invariants.len() {
                let (ref ai, ref bi) = invariants[i];
                let (ref aj, ref bj) = invariants[j];
                if ai * bj == aj * bi {
                    return Err(Error::RepeatedRoot {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        Ok(Self {
            plane,
            eps1,
            eps2,
            roots,
        })
    }

    pub fn plane(&self) -> &WeightedPlane {
        &self.plane
    }

    pub fn eps1(&self) -> bool {
        self.eps1
    }

    pub fn eps2(&self) -> bool {
        self.eps2
    }

    pub fn roots(&self) -> &[(BigInt, BigInt)] {
        &self.roots
    }

    pub fn k_factors(&self) -> usize {
        self.roots.len()
    }

    /// Weighted degree `k alpha1 alpha2 + eps1 alpha1 + eps2 alpha2`.
    pub fn degree(&self) -> BigInt {
        let [_, alpha1, alpha2] = self.plane.weights();
        let mut d = BigInt::from(self.roots.len() as u64) * alpha1 * alpha2;
        if self.eps1 {
            d += alpha1;
        }
        if self.eps2 {
            d += alpha2;
        }
        d
    }
}

fn pow(base: &BigInt, exp: &BigInt) -> BigInt {
    let exp = u32::try_from(exp).expect("weight exponent fits u32");
    base.pow(exp)
}

/// Section data predicted by a curve: the fiber over a factor root is a
/// regular boundary fiber; `z2 | f` (eps2) puts the multiplicity-alpha1
/// fiber C1 = {z2 = 0} on the boundary, `z1 | f` (eps1) the
/// multiplicity-alpha2 fiber C2 = {z1 = 0}.  A weight-1 "C_i" is itself a
/// regular fiber and is counted with the regular ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSectionSummary {
    pub d: BigInt,
    pub boundary_count: BigInt,
    pub regular_boundary_fibers: BigInt,
    pub c1_in_boundary: bool,
    pub c2_in_boundary: bool,
    pub genus: BigInt,
}

/// Reads the d-section data off the curve and cross-checks it against the
/// closed-form family table and the degree-genus formula.  Panics on
/// internal disagreement: the three routes must coincide for every valid
/// curve.
pub fn curve_section_correspondence(curve: &CurveSpec) -> CurveSectionSummary {
    let [_, alpha1, alpha2] = curve.plane.weights();
    let one = BigInt::one();
    let d = curve.degree();

    let c1_in_boundary = curve.eps2 && alpha1 > &one;
    let c2_in_boundary = curve.eps1 && alpha2 > &one;
    let mut regular = BigInt::from(curve.k_factors() as u64);
    if curve.eps2 && alpha1.is_one() {
        regular += 1;
    }
    if curve.eps1 && alpha2.is_one() {
        regular += 1;
    }
    let boundary_count = &regular
        + BigInt::from(u8::from(c1_in_boundary))
        + BigInt::from(u8::from(c2_in_boundary));

    let genus_rat = degree_genus(&curve.plane, &d);
    assert!(
        genus_rat.is_integer() && !genus_rat.numer().is_negative(),
        "degree-genus of an admissible degree must be a non-negative integer, got {genus_rat}"
    );
    let genus = genus_rat.to_integer();

    let fibration =
        sphere_from_weights(alpha1.clone(), alpha2.clone()).expect("curve weights are coprime");
    let row = fibration
        .admissible_d(&d)
        .expect("curve degree must be admissible");
    assert_eq!(row.boundary_count, boundary_count, "boundary count mismatch");
    assert_eq!(row.c1_in_boundary, c1_in_boundary, "C1 status mismatch");
    assert_eq!(row.c2_in_boundary, c2_in_boundary, "C2 status mismatch");
    assert_eq!(row.genus, genus, "genus mismatch");

    CurveSectionSummary {
        d,
        boundary_count,
        regular_boundary_fibers: regular,
        c1_in_boundary,
        c2_in_boundary,
        genus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(b(n), b(d))
    }

    #[test]
    fn degree_genus_examples() {
        let plane = WeightedPlane::new(1, 2, 3).unwrap();
        assert_eq!(degree_genus(&plane, &b(5)), rat(0, 1));
        assert_eq!(degree_genus(&plane, &b(6)), rat(1, 1));

        // Ordinary projective plane: (d-1)(d-2)/2.
        let p2 = WeightedPlane::new(1, 1, 1).unwrap();
        for d in 1..=12i64 {
            assert_eq!(degree_genus(&p2, &b(d)), rat((d - 1) * (d - 2) / 2, 1));
        }

        // Non-admissible degrees need not give integers: d = 3 in P(1,2,5).
        let p125 = WeightedPlane::new(1, 2, 5).unwrap();
        assert_eq!(degree_genus(&p125, &b(3)), rat(-2, 5));
    }

    #[test]
    fn plane_validation() {
        assert!(WeightedPlane::new(1, 2, 4).is_err());
        assert!(WeightedPlane::new(1, 0, 3).is_err());
        assert!(WeightedPlane::new(2, 3, 5).is_ok());
    }

    #[test]
    fn admissible_degree_examples() {
        let reps = admissible_degrees(&b(2), &b(3), &b(6)).unwrap();
        let tuples: Vec<(i64, i64, bool, bool)> = reps
            .iter()
            .map(|r| {
                (
                    i64::try_from(&r.d).unwrap(),
                    i64::try_from(&r.k).unwrap(),
                    r.eps1,
                    r.eps2,
                )
            })
            .collect();
        assert_eq!(
            tuples,
            vec![
                (2, 0, true, false),
                (3, 0, false, true),
                (5, 0, true, true),
                (6, 1, false, false),
            ]
        );

        // Weight 1 duplicates representations.
        let reps = admissible_degrees(&b(1), &b(1), &b(2)).unwrap();
        assert_eq!(reps.len(), 3 + 4); // d=1 three ways, d=2 four ways
        assert!(admissible_degrees(&b(2), &b(4), &b(10)).is_err());
    }

    #[test]
    fn curve_validation() {
        assert!(CurveSpec::new(2, 3, false, false, vec![(b(1), b(1))]).is_ok());
        assert_eq!(
            CurveSpec::new(2, 3, false, false, vec![]),
            Err(Error::EmptyCurve)
        );
        assert!(matches!(
            CurveSpec::new(2, 3, false, false, vec![(b(0), b(1))]),
            Err(Error::RootAtCoordinatePoint { .. })
        ));
        assert!(matches!(
            CurveSpec::new(2, 3, false, false, vec![(b(2), b(4))]),
            Err(Error::RootNotReduced { .. })
        ));
        // In P(2,3) the scaling by -1 sends [a:b] to [a:-b], so [1:1] and
        // [1:-1] are the same root (both factors are z1^3 - z2^2).
        assert_eq!(
            CurveSpec::new(2, 3, false, false, vec![(b(1), b(1)), (b(1), b(-1))]),
            Err(Error::RepeatedRoot {
                first: 0,
                second: 1
            })
        );
        // [1:1] and [-1:-1] differ: factors z1^3 - z2^2 and z1^3 + z2^2.
        assert!(CurveSpec::new(2, 3, false, false, vec![(b(1), b(1)), (b(-1), b(-1))]).is_ok());
        // In P(1,2) they coincide: a^2 = 1 either way.
        assert!(matches!(
            CurveSpec::new(1, 2, false, false, vec![(b(1), b(1)), (b(-1), b(1))]),
            Err(Error::RepeatedRoot { .. })
        ));
    }

    #[test]
    fn correspondence_examples() {
        // (2,3), k = 0, eps1 = eps2 = 1: d = 5, annulus.
        let curve = CurveSpec::new(2, 3, true, true, vec![]).unwrap();
        let summary = curve_section_correspondence(&curve);
        assert_eq!(summary.d, b(5));
        assert_eq!(summary.boundary_count, b(2));
        assert!(summary.c1_in_boundary && summary.c2_in_boundary);
        assert_eq!(summary.genus, b(0));

        // (2,3), one factor: d = 6, torus with one hole.
        let curve = CurveSpec::new(2, 3, false, false, vec![(b(1), b(1))]).unwrap();
        let summary = curve_section_correspondence(&curve);
        assert_eq!(summary.d, b(6));
        assert_eq!(summary.boundary_count, b(1));
        assert_eq!(summary.regular_boundary_fibers, b(1));
        assert_eq!(summary.genus, b(1));

        // Weight 1: "C2" is a regular fiber.
        let curve = CurveSpec::new(3, 1, true, false, vec![]).unwrap();
        let summary = curve_section_correspondence(&curve);
        assert_eq!(summary.d, b(3));
        assert_eq!(summary.boundary_count, b(1));
        assert_eq!(summary.regular_boundary_fibers, b(1));
        assert!(!summary.c1_in_boundary && !summary.c2_in_boundary);
        assert_eq!(summary.genus, b(0));
    }

    #[test]
    fn roots_only_count() {
        // The summary depends on the roots only through their number.
        let c1 = CurveSpec::new(2, 5, false, true, vec![(b(1), b(1)), (b(2), b(1))]).unwrap();
        let c2 = CurveSpec::new(2, 5, false, true, vec![(b(3), b(-2)), (b(1), b(7))]).unwrap();
        assert_eq!(
            curve_section_correspondence(&c1),
            curve_section_correspondence(&c2)
        );
    }
}
