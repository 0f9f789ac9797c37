//! Existence and topology of positive d-sections: global surfaces of
//! section that intersect every regular fiber exactly d times and induce the
//! positive orientation on all boundary fibers.
//!
//! For each pair `(alpha_i, beta_i)` and a given `d`, exactly one of the
//! following can hold: the fiber is interior to the section
//! (`alpha_i | d`, with `d / alpha_i` transverse intersection points), or it
//! is a boundary fiber (`alpha_i | d beta_i - eps_i` for a sign
//! `eps_i = +-1`, writing `d beta_i = a_i alpha_i + eps_i`).  For
//! `alpha_i > 2` the two divisibility conditions exclude each other, so the
//! sign is forced; for `alpha_i = 2` both signs are available and the
//! positive one is always taken here.  A positive d-section exists if and
//! only if every pair is interior or boundary with `eps_i = +1` and the
//! integer `b-bar = sum a_i + sum_(alpha_i | d) d beta_i / alpha_i` is
//! non-negative; `-b-bar` equals `d e + sum_(alpha_i not| d) 1 / alpha_i`
//! exactly, so non-negativity is the sharp Euler-number bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::seifert::SeifertData;
use crate::{Error, Rational};

/// Orientation a boundary fiber induces relative to the section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// How one invariant pair meets the section for a fixed `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberRole {
    /// The fiber is a boundary component of the section.
    Boundary { sign: Sign },
    /// The fiber is interior, crossed transversely `d / alpha_i` times.
    Interior { intersections: BigInt },
}

/// Surface topology of the section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Topology {
    /// Connected orientable surface with boundary of the stated genus.
    Connected { genus: BigInt },
    /// Closed case (`e = 0` and every `alpha_i | d`): the section is closed
    /// and possibly disconnected, so only the total Euler characteristic is
    /// determined.
    ClosedUndeterminedComponents { euler_characteristic: BigInt },
}

/// Full description of a positive d-section.
///
/// `epsilons` and `a_coeffs` list, in pair order, the sign and the integer
/// `a_i` of each boundary pair (`d beta_i = a_i alpha_i + eps_i`); for a
/// positive section every sign is `+1`.  `b_bar` is the number of regular
/// boundary fibers and the total boundary count is `b_bar + k`, where `k` is
/// the number of boundary pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionReport {
    pub d: BigInt,
    pub fiber_roles: Vec<FiberRole>,
    pub epsilons: Vec<Sign>,
    pub a_coeffs: Vec<BigInt>,
    pub b_bar: BigInt,
    pub boundary_count: BigInt,
    pub topology: Topology,
}

impl SectionReport {
    /// Number of boundary fibers coming from invariant pairs.
    pub fn boundary_pair_count(&self) -> usize {
        self.epsilons.len()
    }

    pub fn genus(&self) -> Option<&BigInt> {
        match &self.topology {
            Topology::Connected { genus } => Some(genus),
            Topology::ClosedUndeterminedComponents { .. } => None,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self.topology, Topology::ClosedUndeterminedComponents { .. })
    }
}

/// Why no positive d-section exists for the queried `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Neither `alpha_i | d` nor `alpha_i | d beta_i -+ 1`: no d-section of
    /// any sign pattern exists.
    NoDSection { pair_index: usize },
    /// The pair forces a boundary fiber with sign `-1`, so d-sections here
    /// are never positive.
    NegativeBoundarySign { pair_index: usize },
    /// All signs work out but `b_bar < 0`: the Euler-number bound fails.
    EulerBound { b_bar: BigInt },
}

/// Result of a positive-d-section query with valid inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositiveSectionOutcome {
    Section(SectionReport),
    Obstructed(Obstruction),
}

impl PositiveSectionOutcome {
    pub fn section(&self) -> Option<&SectionReport> {
        match self {
            PositiveSectionOutcome::Section(report) => Some(report),
            PositiveSectionOutcome::Obstructed(_) => None,
        }
    }
}

fn to_integer_checked(value: &Rational, what: &str) -> BigInt {
    assert!(
        value.is_integer(),
        "{what} must be an exact integer, got {value}"
    );
    value.to_integer()
}

/// Capped-section Euler characteristic via the branched covering over the
/// quotient surface: the d-section, capped with one disc per boundary
/// component, covers the capped base orbifold quotient with d sheets,
/// branched over the section's boundary fibers (index d) and the interior
/// marked fibers (index alpha_i).
fn chi_capped(
    d: &BigInt,
    base_genus: u64,
    pair_count: usize,
    boundary_pairs: usize,
    b_bar: &BigInt,
    interior_intersections: &BigInt,
) -> BigInt {
    let two = BigInt::from(2);
    let genus_term = &two - BigInt::from(2) * BigInt::from(base_genus);
    let bbk = b_bar + BigInt::from(boundary_pairs);
    let interior_count = BigInt::from(pair_count - boundary_pairs);
    d * (&genus_term - &bbk - &interior_count) + &bbk + interior_intersections
}

/// Decides existence of a positive d-section and computes its topology.
///
/// On success the genus comes from the closed-form
/// `g(Sigma) = (2 - d(2 - 2g + (d-1)e + sum 1/alpha_i - n) - sum_(alpha_i not| d)(1 - 1/alpha_i)) / 2`
/// and the boundary count from
/// `-d e + sum_(alpha_i not| d)(1 - 1/alpha_i)`; both rational expressions
/// are checked for exact integrality.  In the closed case (`e = 0`, all
/// `alpha_i | d`) only the total Euler characteristic is reported.
pub fn classify_positive_d_section(
    m: &SeifertData,
    d: &BigInt,
) -> Result<PositiveSectionOutcome, Error> {
    if !d.is_positive() {
        return Err(Error::NonPositiveD { d: d.clone() });
    }
    let one = BigInt::one();
    let mut fiber_roles = Vec::with_capacity(m.pairs().len());
    let mut epsilons = Vec::new();
    let mut a_coeffs = Vec::new();
    let mut b_bar = BigInt::zero();
    let mut interior_intersections = BigInt::zero();

    for (pair_index, pair) in m.pairs().iter().enumerate() {
        let alpha = pair.alpha();
        let beta = pair.beta();
        if (d % alpha).is_zero() {
            let intersections = d / alpha;
            b_bar += d * beta / alpha;
            interior_intersections += &intersections;
            fiber_roles.push(FiberRole::Interior { intersections });
        } else {
            let dbeta = d * beta;
            if ((&dbeta - &one) % alpha).is_zero() {
                let a = (&dbeta - &one) / alpha;
                b_bar += &a;
                fiber_roles.push(FiberRole::Boundary { sign: Sign::Plus });
                epsilons.push(Sign::Plus);
                a_coeffs.push(a);
            } else if ((&dbeta + &one) % alpha).is_zero() {
                return Ok(PositiveSectionOutcome::Obstructed(
                    Obstruction::NegativeBoundarySign { pair_index },
                ));
            } else {
                return Ok(PositiveSectionOutcome::Obstructed(Obstruction::NoDSection {
                    pair_index,
                }));
            }
        }
    }

    if b_bar.is_negative() {
        return Ok(PositiveSectionOutcome::Obstructed(Obstruction::EulerBound {
            b_bar,
        }));
    }

    let e = m.euler_number();
    let d_rat = Rational::from(d.clone());
    let k = epsilons.len();
    let n = m.pairs().len();

    // Boundary pairs are exactly the pairs with alpha not dividing d.
    let boundary_inv_sum: Rational = m
        .pairs()
        .iter()
        .filter(|p| !(d % p.alpha()).is_zero())
        .map(|p| Rational::new(BigInt::one(), p.alpha().clone()))
        .sum();

    // Exactness audit: d e + sum_(alpha not| d) 1/alpha = -b_bar.
    let bound_lhs = &d_rat * &e + &boundary_inv_sum;
    assert_eq!(
        bound_lhs,
        -Rational::from(b_bar.clone()),
        "Euler bound bookkeeping must reproduce -b_bar exactly"
    );

    let boundary_rat =
        -(&d_rat * &e) + Rational::from(BigInt::from(k)) - &boundary_inv_sum;
    let boundary_count = to_integer_checked(&boundary_rat, "boundary component count");
    assert_eq!(
        boundary_count,
        &b_bar + BigInt::from(k),
        "boundary count must equal b_bar + k"
    );

    let topology = if boundary_count.is_zero() {
        let chi = chi_capped(d, m.base_genus(), n, k, &b_bar, &interior_intersections);
        Topology::ClosedUndeterminedComponents {
            euler_characteristic: chi,
        }
    } else {
        let two = Rational::from(BigInt::from(2));
        let inv_sum: Rational = m
            .pairs()
            .iter()
            .map(|p| Rational::new(BigInt::one(), p.alpha().clone()))
            .sum();
        let genus_base = Rational::from(BigInt::from(2) - BigInt::from(2) * BigInt::from(m.base_genus()));
        let inner = genus_base + (&d_rat - Rational::one()) * &e + &inv_sum
            - Rational::from(BigInt::from(n));
        let nondiv_sum = Rational::from(BigInt::from(k)) - &boundary_inv_sum;
        let genus_rat = (&two - &d_rat * inner - nondiv_sum) / &two;
        let genus = to_integer_checked(&genus_rat, "section genus");
        assert!(!genus.is_negative(), "section genus must be non-negative");
        Topology::Connected { genus }
    };

    Ok(PositiveSectionOutcome::Section(SectionReport {
        d: d.clone(),
        fiber_roles,
        epsilons,
        a_coeffs,
        b_bar,
        boundary_count,
        topology,
    }))
}

/// Per-pair verdict of the divisibility dichotomy, ignoring orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairVerdict {
    Interior,
    /// Boundary fiber; the flags record which signs satisfy
    /// `alpha_i | d beta_i - (+-1)`.  Both can hold only for `alpha_i = 2`.
    Boundary { plus: bool, minus: bool },
    /// Neither divisibility holds: no d-section of any sign exists.
    Obstructed,
}

/// Checks the necessary divisibility conditions pair by pair, for sections
/// of any (not necessarily positive) orientation pattern.
pub fn d_section_necessary(m: &SeifertData, d: &BigInt) -> Result<Vec<PairVerdict>, Error> {
    if !d.is_positive() {
        return Err(Error::NonPositiveD { d: d.clone() });
    }
    let one = BigInt::one();
    Ok(m.pairs()
        .iter()
        .map(|pair| {
            let alpha = pair.alpha();
            if (d % alpha).is_zero() {
                PairVerdict::Interior
            } else {
                let dbeta = d * pair.beta();
                let plus = ((&dbeta - &one) % alpha).is_zero();
                let minus = ((&dbeta + &one) % alpha).is_zero();
                if plus || minus {
                    PairVerdict::Boundary { plus, minus }
                } else {
                    PairVerdict::Obstructed
                }
            }
        })
        .collect())
}

/// Sign options for a singular boundary fiber of a 1-section.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignChoice {
    Plus,
    Minus,
    /// Multiplicity 2 allows either orientation.
    Both,
}

/// Data of an existing 1-section (a global surface of section meeting every
/// regular fiber once).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneSection {
    /// Genus of the section, equal to the base genus.
    pub genus: u64,
    /// For each singular input pair (`alpha > 1`, by input index): the sign
    /// of the corresponding boundary fiber.
    pub singular_signs: Vec<(usize, SignChoice)>,
    /// Net number `b_plus - b_minus` of regular boundary fibers under the
    /// canonical signs (Plus wherever a choice exists).  Any split with this
    /// difference is realizable.
    pub net_regular_boundary: BigInt,
}

/// Existence of 1-sections with mixed boundary orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneSectionResult {
    Exists(OneSection),
    /// `beta !≡ +-1 (mod alpha)` at this input pair: no 1-section exists.
    Obstructed { pair_index: usize },
}

/// Classifies 1-sections: one exists if and only if every singular pair
/// satisfies `beta_i ≡ +-1 (mod alpha_i)`, i.e. the manifold is isomorphic
/// to `M(g; (1, b), (alpha_1, +-1), ..., (alpha_n, +-1))`.
pub fn classify_one_section(m: &SeifertData) -> OneSectionResult {
    let one = BigInt::one();
    let mut singular_signs = Vec::new();
    let mut strict_minus = BigInt::zero();
    for (pair_index, pair) in m.pairs().iter().enumerate() {
        if !pair.is_singular() {
            continue;
        }
        let alpha = pair.alpha();
        let r = pair.beta().mod_floor(alpha);
        let choice = if *alpha == BigInt::from(2) {
            SignChoice::Both
        } else if r == one {
            SignChoice::Plus
        } else if r == alpha - &one {
            SignChoice::Minus
        } else {
            return OneSectionResult::Obstructed { pair_index };
        };
        if choice == SignChoice::Minus {
            strict_minus += 1;
        }
        singular_signs.push((pair_index, choice));
    }
    // With canonical signs the presentation M(g; (1, net), (alpha_i, eps_i))
    // normalizes to b = net - #minus, so net = b + #minus.
    let net_regular_boundary = m.normalize().b() + strict_minus;
    OneSectionResult::Exists(OneSection {
        genus: m.base_genus(),
        singular_signs,
        net_regular_boundary,
    })
}

/// Smallest `1 <= d <= d_max` admitting a positive d-section, with its
/// report.  Equivalent to scanning `d = 1, 2, ...` with
/// [`classify_positive_d_section`] and returning the first success, but
/// solved through the divisibility congruences so that large `d_max` (for
/// example `2 lcm(alpha_i)`) stays cheap.
pub fn minimal_positive_d(m: &SeifertData, d_max: &BigInt) -> Option<SectionReport> {
    if d_max < &BigInt::one() {
        return None;
    }
    let singular: Vec<_> = m.pairs().iter().filter(|p| p.is_singular()).collect();
    assert!(
        singular.len() < 64,
        "congruence search supports at most 63 singular pairs"
    );
    let e = m.euler_number();
    let mut best: Option<BigInt> = None;

    // A candidate d determines each pair's role by divisibility, so the
    // admissible d are partitioned by the interior/boundary pattern over the
    // singular pairs.  Solve each pattern's congruence system and apply the
    // Euler bound inside its arithmetic progression.
    for mask in 0u64..(1u64 << singular.len()) {
        let mut residue = BigInt::zero();
        let mut modulus = BigInt::one();
        let mut boundary_inv_sum = Rational::zero();
        let mut consistent = true;
        for (bit, pair) in singular.iter().enumerate() {
            let alpha = pair.alpha();
            let target = if mask & (1 << bit) != 0 {
                // boundary with eps = +1: d = beta^(-1) (mod alpha)
                boundary_inv_sum += Rational::new(BigInt::one(), alpha.clone());
                crate::arith::mod_inverse(&pair.beta().mod_floor(alpha), alpha)
                    .expect("beta is invertible mod alpha")
            } else {
                BigInt::zero()
            };
            match crate::arith::crt_merge(&residue, &modulus, &target, alpha) {
                Some((r, l)) => {
                    residue = r;
                    modulus = l;
                }
                None => {
                    consistent = false;
                    break;
                }
            }
        }
        if !consistent {
            continue;
        }
        let d0 = if residue.is_zero() {
            modulus.clone()
        } else {
            residue
        };
        // Need d e + boundary_inv_sum <= 0 within d = d0 + t * modulus.
        let candidate = if e.is_positive() {
            continue;
        } else if e.is_zero() {
            if boundary_inv_sum.is_zero() {
                d0
            } else {
                continue;
            }
        } else {
            let threshold = &boundary_inv_sum / -&e;
            if Rational::from(d0.clone()) >= threshold {
                d0
            } else {
                let steps = ((threshold - Rational::from(d0.clone()))
                    / Rational::from(modulus.clone()))
                .ceil()
                .to_integer();
                d0 + steps * &modulus
            }
        };
        if &candidate <= d_max && best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }

    best.map(|d| {
        match classify_positive_d_section(m, &d).expect("d is positive") {
            PositiveSectionOutcome::Section(report) => report,
            PositiveSectionOutcome::Obstructed(o) => {
                panic!("congruence search produced an obstructed d = {d}: {o:?}")
            }
        }
    })
}

/// Independent Euler-characteristic oracle for a classified d-section.
///
/// The section capped with one disc per boundary component is a d-fold
/// branched cover of the capped quotient surface, so
/// `chi = d (2 - 2g - (b_bar + k) - (n - k)) + (b_bar + k) + sum_(interior) d / alpha_i`.
/// The report must match the classification of `(m, d)` exactly.
pub fn rh_quotient_chi(
    m: &SeifertData,
    d: &BigInt,
    report: &SectionReport,
) -> Result<BigInt, Error> {
    if !d.is_positive() {
        return Err(Error::NonPositiveD { d: d.clone() });
    }
    match classify_positive_d_section(m, d)? {
        PositiveSectionOutcome::Section(expected) if &expected == report => {}
        PositiveSectionOutcome::Section(_) => {
            return Err(Error::InconsistentReport {
                reason: "report does not match the classification of (m, d)".into(),
            })
        }
        PositiveSectionOutcome::Obstructed(_) => {
            return Err(Error::InconsistentReport {
                reason: "no positive d-section exists for (m, d)".into(),
            })
        }
    }
    let interior_intersections: BigInt = report
        .fiber_roles
        .iter()
        .filter_map(|role| match role {
            FiberRole::Interior { intersections } => Some(intersections.clone()),
            FiberRole::Boundary { .. } => None,
        })
        .sum();
    Ok(chi_capped(
        d,
        m.base_genus(),
        report.fiber_roles.len(),
        report.boundary_pair_count(),
        &report.b_bar,
        &interior_intersections,
    ))
}
