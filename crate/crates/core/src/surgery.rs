//! Integer surgery presentations for base genus 0.
//!
//! `M(0; (a1,b1), ..., (an,bn))` is surgery on a 0-framed unknot `K0`
//! together with one meridian `m_i` per pair, with surgery coefficient
//! `a_i/b_i` (the infinity coefficient when `b_i = 0`).  A Rolfsen twist by
//! `k_i` on `m_i` changes its coefficient to `a_i/(b_i + k_i a_i)` and adds
//! `k_i` to the framing of `K0`; the diagram presents Seifert data again
//! exactly when that framing is back to 0.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::seifert::{ExceptionalPair, SeifertData};
use crate::{Error, Rational};

/// Surgery coefficient of one meridian: `alpha/beta` in lowest terms, or
/// infinity for `beta = 0` (a trivial, removable meridian).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeridianCoefficient {
    Finite(Rational),
    Infinity,
}

impl MeridianCoefficient {
    fn from_pair(pair: &ExceptionalPair) -> Self {
        if pair.beta().is_zero() {
            MeridianCoefficient::Infinity
        } else {
            MeridianCoefficient::Finite(Rational::new(pair.alpha().clone(), pair.beta().clone()))
        }
    }

    /// Recovers the coprime pair `(alpha, beta)` behind the coefficient:
    /// `alpha/beta` stored in lowest terms with positive denominator has
    /// `alpha = |numerator|` and `beta = sign(numerator) * denominator`.
    fn to_pair(&self) -> (BigInt, BigInt) {
        match self {
            MeridianCoefficient::Infinity => (BigInt::from(1), BigInt::zero()),
            MeridianCoefficient::Finite(r) => {
                debug_assert!(!r.numer().is_zero(), "coefficient 0 is not alpha/beta");
                (r.numer().abs(), r.numer().signum() * r.denom())
            }
        }
    }
}

impl fmt::Display for MeridianCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeridianCoefficient::Finite(r) => write!(f, "{r}"),
            MeridianCoefficient::Infinity => write!(f, "inf"),
        }
    }
}

/// A combinatorial surgery diagram: the framing of the unknot `K0` and the
/// meridian coefficients in order.  Only `k0_framing = 0` diagrams present
/// Seifert data; twists pass through non-exportable intermediate framings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryDiagram {
    pub k0_framing: BigInt,
    pub meridians: Vec<MeridianCoefficient>,
}

impl SurgeryDiagram {
    pub fn is_exportable(&self) -> bool {
        self.k0_framing.is_zero()
    }

    /// Reads the diagram back as Seifert data.  `None` when the framing is
    /// nonzero (or a hand-built coefficient is not of the form alpha/beta).
    pub fn to_seifert_data(&self) -> Option<SeifertData> {
        if !self.is_exportable() {
            return None;
        }
        let mut pairs = Vec::with_capacity(self.meridians.len());
        for m in &self.meridians {
            if let MeridianCoefficient::Finite(r) = m {
                if r.numer().is_zero() {
                    return None;
                }
            }
            let (alpha, beta) = m.to_pair();
            pairs.push(ExceptionalPair::new(alpha, beta).ok()?);
        }
        Some(SeifertData::new(0, pairs))
    }

    /// Reorders the meridians so that position `i` holds the old
    /// `perm[i]`-th meridian.
    pub fn permute_meridians(&self, perm: &[usize]) -> Result<SurgeryDiagram, Error> {
        let count = self.meridians.len();
        if perm.len() != count {
            return Err(Error::MeridianCountMismatch {
                expected: count,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; count];
        for &index in perm {
            if index >= count {
                return Err(Error::MeridianIndexOutOfRange { index, count });
            }
            if seen[index] {
                return Err(Error::RepeatedMeridianIndex { index });
            }
            seen[index] = true;
        }
        Ok(SurgeryDiagram {
            k0_framing: self.k0_framing.clone(),
            meridians: perm.iter().map(|&i| self.meridians[i].clone()).collect(),
        })
    }

    /// Adds a removable infinity-framed meridian at `index`.
    pub fn insert_infinity(&self, index: usize) -> Result<SurgeryDiagram, Error> {
        if index > self.meridians.len() {
            return Err(Error::MeridianIndexOutOfRange {
                index,
                count: self.meridians.len(),
            });
        }
        let mut meridians = self.meridians.clone();
        meridians.insert(index, MeridianCoefficient::Infinity);
        Ok(SurgeryDiagram {
            k0_framing: self.k0_framing.clone(),
            meridians,
        })
    }

    /// Removes the meridian at `index`, which must carry the infinity
    /// coefficient.
    pub fn delete_infinity(&self, index: usize) -> Result<SurgeryDiagram, Error> {
        match self.meridians.get(index) {
            None => Err(Error::MeridianIndexOutOfRange {
                index,
                count: self.meridians.len(),
            }),
            Some(MeridianCoefficient::Finite(_)) => Err(Error::NotInfinityMeridian { index }),
            Some(MeridianCoefficient::Infinity) => {
                let mut meridians = self.meridians.clone();
                meridians.remove(index);
                Ok(SurgeryDiagram {
                    k0_framing: self.k0_framing.clone(),
                    meridians,
                })
            }
        }
    }
}

impl fmt::Display for SurgeryDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0[{}]", self.k0_framing)?;
        for (i, m) in self.meridians.iter().enumerate() {
            let sep = if i == 0 { "; " } else { ", " };
            write!(f, "{sep}m{}[{m}]", i + 1)?;
        }
        Ok(())
    }
}

/// The surgery presentation of genus-0 Seifert data: `K0` with framing 0 and
/// one meridian per pair with coefficient `alpha_i/beta_i`.
pub fn surgery_presentation(m: &SeifertData) -> Result<SurgeryDiagram, Error> {
    if m.base_genus() != 0 {
        return Err(Error::PositiveBaseGenus {
            genus: m.base_genus(),
        });
    }
    Ok(SurgeryDiagram {
        k0_framing: BigInt::zero(),
        meridians: m.pairs().iter().map(MeridianCoefficient::from_pair).collect(),
    })
}

/// Applies a Rolfsen twist by `k[i]` to each meridian: coefficient
/// `alpha/beta` becomes `alpha/(beta + k alpha)` and the framing of `K0`
/// grows by the sum of the twists.  Never fails on coefficients; only the
/// twist-vector length is checked.
pub fn rolfsen_twist(diag: &SurgeryDiagram, k: &[BigInt]) -> Result<SurgeryDiagram, Error> {
    if k.len() != diag.meridians.len() {
        return Err(Error::MeridianCountMismatch {
            expected: diag.meridians.len(),
            got: k.len(),
        });
    }
    let meridians = diag
        .meridians
        .iter()
        .zip(k)
        .map(|(m, ki)| {
            let (alpha, beta) = m.to_pair();
            let new_beta = beta + ki * &alpha;
            if new_beta.is_zero() {
                MeridianCoefficient::Infinity
            } else {
                MeridianCoefficient::Finite(Rational::new(alpha, new_beta))
            }
        })
        .collect();
    Ok(SurgeryDiagram {
        k0_framing: &diag.k0_framing + k.iter().sum::<BigInt>(),
        meridians,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::MoveSpec;

    fn data(pairs: &[(i64, i64)]) -> SeifertData {
        SeifertData::from_pairs(0, pairs.iter().cloned()).unwrap()
    }

    fn twists(k: &[i64]) -> Vec<BigInt> {
        k.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn presentation_examples() {
        let diag = surgery_presentation(&data(&[(2, 1), (3, -1)])).unwrap();
        assert!(diag.is_exportable());
        assert_eq!(diag.to_string(), "K0[0]; m1[2], m2[-3]");

        let diag = surgery_presentation(&data(&[(1, 0)])).unwrap();
        assert_eq!(diag.meridians, vec![MeridianCoefficient::Infinity]);
        assert_eq!(diag.to_string(), "K0[0]; m1[inf]");
        // Removing the trivial meridian leaves K0 alone: S^2 x S^1.
        assert_eq!(diag.delete_infinity(0).unwrap().to_string(), "K0[0]");

        assert_eq!(
            surgery_presentation(&data(&[])).unwrap().to_string(),
            "K0[0]"
        );
        assert_eq!(
            surgery_presentation(&data(&[(2, 3)])).unwrap().to_string(),
            "K0[0]; m1[2/3]"
        );

        let genus_two = SeifertData::from_pairs(2, [(2i64, 1i64)]).unwrap();
        assert_eq!(
            surgery_presentation(&genus_two),
            Err(Error::PositiveBaseGenus { genus: 2 })
        );
    }

    #[test]
    fn twist_examples() {
        let diag = surgery_presentation(&data(&[(2, 1), (3, 1)])).unwrap();
        let twisted = rolfsen_twist(&diag, &twists(&[1, -1])).unwrap();
        assert!(twisted.is_exportable());
        // 2/(1+2) and 3/(1-3), i.e. 2/3 and -3/2 in lowest terms.
        assert_eq!(twisted.to_string(), "K0[0]; m1[2/3], m2[-3/2]");
        assert_eq!(
            twisted.to_seifert_data().unwrap(),
            data(&[(2, 3), (3, -2)])
        );

        // Zero twists are the identity.
        assert_eq!(rolfsen_twist(&diag, &twists(&[0, 0])).unwrap(), diag);

        // An unbalanced twist leaves a nonzero framing: not exportable.
        let diag = surgery_presentation(&data(&[(2, 1)])).unwrap();
        let unbalanced = rolfsen_twist(&diag, &twists(&[1])).unwrap();
        assert_eq!(unbalanced.k0_framing, BigInt::from(1));
        assert!(!unbalanced.is_exportable());
        assert_eq!(unbalanced.to_seifert_data(), None);
        // Twisting back restores the original diagram.
        assert_eq!(rolfsen_twist(&unbalanced, &twists(&[-1])).unwrap(), diag);

        assert_eq!(
            rolfsen_twist(&diag, &twists(&[1, 2])),
            Err(Error::MeridianCountMismatch {
                expected: 1,
                got: 2
            })
        );
    }

    #[test]
    fn twist_through_infinity() {
        let diag = surgery_presentation(&data(&[(1, 0)])).unwrap();
        let twisted = rolfsen_twist(&diag, &twists(&[2])).unwrap();
        assert_eq!(twisted.to_string(), "K0[2]; m1[1/2]");
        let back = rolfsen_twist(&twisted, &twists(&[-2])).unwrap();
        assert_eq!(back, diag);

        // A finite coefficient can land on infinity: 3/(-1) with k = ... no
        // integer k makes 3 | 1, but 1/(-1) with k = 1 does.
        let diag = surgery_presentation(&data(&[(1, -1)])).unwrap();
        let twisted = rolfsen_twist(&diag, &twists(&[1])).unwrap();
        assert_eq!(twisted.meridians, vec![MeridianCoefficient::Infinity]);
    }

    #[test]
    fn twist_commutes_with_seifert_move() {
        let m = data(&[(2, 1), (3, -1), (5, 2)]);
        let k = twists(&[1, 2, -3]);
        let moved = m.apply_move(&MoveSpec::Twist(k.clone())).unwrap();
        assert_eq!(
            surgery_presentation(&moved).unwrap(),
            rolfsen_twist(&surgery_presentation(&m).unwrap(), &k).unwrap()
        );
    }

    #[test]
    fn presentation_roundtrip() {
        for pairs in [
            vec![],
            vec![(1, 0)],
            vec![(2, 1), (3, -1)],
            vec![(5, -3), (1, 4), (7, 2)],
        ] {
            let m = data(&pairs);
            let diag = surgery_presentation(&m).unwrap();
            assert_eq!(diag.to_seifert_data().unwrap(), m);
        }
    }

    #[test]
    fn diagram_moves_mirror_data_moves() {
        let m = data(&[(2, 1), (3, -1), (1, 0)]);
        let diag = surgery_presentation(&m).unwrap();

        let perm = [2usize, 0, 1];
        let moved = m.apply_move(&MoveSpec::Permute(perm.to_vec())).unwrap();
        assert_eq!(
            surgery_presentation(&moved).unwrap(),
            diag.permute_meridians(&perm).unwrap()
        );

        let moved = m.apply_move(&MoveSpec::InsertTrivial).unwrap();
        assert_eq!(
            surgery_presentation(&moved).unwrap(),
            diag.insert_infinity(diag.meridians.len()).unwrap()
        );

        let moved = m.apply_move(&MoveSpec::DeleteTrivial(2)).unwrap();
        assert_eq!(
            surgery_presentation(&moved).unwrap(),
            diag.delete_infinity(2).unwrap()
        );
    }

    #[test]
    fn diagram_move_errors() {
        let diag = surgery_presentation(&data(&[(2, 1), (3, -1)])).unwrap();
        assert_eq!(
            diag.permute_meridians(&[0]),
            Err(Error::MeridianCountMismatch {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            diag.permute_meridians(&[0, 2]),
            Err(Error::MeridianIndexOutOfRange { index: 2, count: 2 })
        );
        assert_eq!(
            diag.permute_meridians(&[1, 1]),
            Err(Error::RepeatedMeridianIndex { index: 1 })
        );
        assert_eq!(
            diag.insert_infinity(3),
            Err(Error::MeridianIndexOutOfRange { index: 3, count: 2 })
        );
        assert_eq!(
            diag.delete_infinity(0),
            Err(Error::NotInfinityMeridian { index: 0 })
        );
        assert_eq!(
            diag.delete_infinity(5),
            Err(Error::MeridianIndexOutOfRange { index: 5, count: 2 })
        );
    }
}
