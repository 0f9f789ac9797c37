//! Seifert invariants, rational Euler numbers, equivalence moves, and the
//! canonical normal form deciding fibered isomorphism.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::Rational;

/// Construction errors for invariant pairs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidSeifertData {
    #[error("fiber multiplicity must be positive, got alpha = {alpha}")]
    NonPositiveAlpha { alpha: BigInt },

    #[error("pair ({alpha}, {beta}) is not coprime, gcd = {gcd}")]
    NotCoprime {
        alpha: BigInt,
        beta: BigInt,
        gcd: BigInt,
    },
}

/// One gluing pair `(alpha, beta)` with `alpha >= 1` and
/// `gcd(alpha, beta) = 1`.  Ordering is lexicographic in `(alpha, beta)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExceptionalPair {
    alpha: BigInt,
    beta: BigInt,
}

impl ExceptionalPair {
    pub fn new(
        alpha: impl Into<BigInt>,
        beta: impl Into<BigInt>,
    ) -> Result<Self, InvalidSeifertData> {
        let alpha = alpha.into();
        let beta = beta.into();
        if !alpha.is_positive() {
            return Err(InvalidSeifertData::NonPositiveAlpha { alpha });
        }
        let gcd = alpha.gcd(&beta);
        if !gcd.is_one() {
            return Err(InvalidSeifertData::NotCoprime { alpha, beta, gcd });
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    /// True for multiplicity > 1, i.e. the pair marks a genuinely
    /// exceptional fiber.
    pub fn is_singular(&self) -> bool {
        self.alpha > BigInt::one()
    }

    /// True for the pair (1, 0), which insertion/deletion moves add and
    /// remove freely.
    pub fn is_trivial(&self) -> bool {
        self.alpha.is_one() && self.beta.is_zero()
    }

    /// The fraction beta/alpha this pair contributes to the Euler number
    /// (with the opposite sign).
    pub fn slope(&self) -> Rational {
        Rational::new(self.beta.clone(), self.alpha.clone())
    }
}

impl fmt::Display for ExceptionalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// Unnormalized Seifert invariants `M(g; (a1,b1), ..., (an,bn))` of a closed
/// oriented Seifert fibered 3-manifold over an orientable base of genus `g`.
///
/// Equality is presentation equality; use [`SeifertData::is_isomorphic`] for
/// equality up to the equivalence moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData {
    base_genus: u64,
    pairs: Vec<ExceptionalPair>,
}

/// An equivalence move on unnormalized invariants.  Moves never change the
/// fibered homeomorphism type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveSpec {
    /// Reorder the pairs: entry `i` of the result is entry `perm[i]` of the
    /// input.  `perm` must be a permutation of `0..n`.
    Permute(Vec<usize>),
    /// Append a trivial pair (1, 0).
    InsertTrivial,
    /// Remove the pair at the given index; it must equal (1, 0).
    DeleteTrivial(usize),
    /// Replace each `(alpha_i, beta_i)` by `(alpha_i, beta_i + k_i alpha_i)`.
    /// The twists must balance: `sum k_i = 0`.
    Twist(Vec<BigInt>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("permutation has {got} entries for {expected} pairs")]
    PermutationLength { expected: usize, got: usize },

    #[error("not a permutation: index {index} is out of range or repeated")]
    InvalidPermutation { index: usize },

    #[error("pair index {index} out of range for {count} pairs")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("pair {index} is ({alpha}, {beta}), not the trivial pair (1, 0)")]
    NotTrivialPair {
        index: usize,
        alpha: BigInt,
        beta: BigInt,
    },

    #[error("twist vector has {got} entries for {expected} pairs")]
    TwistLength { expected: usize, got: usize },

    #[error("twist coefficients must sum to 0, got {sum}")]
    TwistSum { sum: BigInt },
}

impl SeifertData {
    pub fn new(base_genus: u64, pairs: Vec<ExceptionalPair>) -> Self {
        Self { base_genus, pairs }
    }

    /// Convenience constructor from raw integer pairs.
    pub fn from_pairs<A, B>(
        base_genus: u64,
        pairs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, InvalidSeifertData>
    where
        A: Into<BigInt>,
        B: Into<BigInt>,
    {
        let pairs = pairs
            .into_iter()
            .map(|(a, b)| ExceptionalPair::new(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { base_genus, pairs })
    }

    pub fn base_genus(&self) -> u64 {
        self.base_genus
    }

    pub fn pairs(&self) -> &[ExceptionalPair] {
        &self.pairs
    }

    /// The rational Euler number `e = -sum beta_i / alpha_i`.  Invariant
    /// under all equivalence moves; its sign decides whether any positive
    /// d-section exists.
    pub fn euler_number(&self) -> Rational {
        -self.pairs.iter().map(ExceptionalPair::slope).sum::<Rational>()
    }

    /// Applies one equivalence move, returning the new presentation.
    pub fn apply_move(&self, mv: &MoveSpec) -> Result<SeifertData, MoveError> {
        let n = self.pairs.len();
        match mv {
            MoveSpec::Permute(perm) => {
                if perm.len() != n {
                    return Err(MoveError::PermutationLength {
                        expected: n,
                        got: perm.len(),
                    });
                }
                let mut seen = vec![false; n];
                for &index in perm {
                    if index >= n || seen[index] {
                        return Err(MoveError::InvalidPermutation { index });
                    }
                    seen[index] = true;
                }
                let pairs = perm.iter().map(|&i| self.pairs[i].clone()).collect();
                Ok(SeifertData::new(self.base_genus, pairs))
            }
            MoveSpec::InsertTrivial => {
                let mut pairs = self.pairs.clone();
                pairs.push(ExceptionalPair {
                    alpha: BigInt::one(),
                    beta: BigInt::zero(),
                });
                Ok(SeifertData::new(self.base_genus, pairs))
            }
            MoveSpec::DeleteTrivial(index) => {
                let index = *index;
                if index >= n {
                    return Err(MoveError::IndexOutOfRange { index, count: n });
                }
                if !self.pairs[index].is_trivial() {
                    return Err(MoveError::NotTrivialPair {
                        index,
                        alpha: self.pairs[index].alpha.clone(),
                        beta: self.pairs[index].beta.clone(),
                    });
                }
                let mut pairs = self.pairs.clone();
                pairs.remove(index);
                Ok(SeifertData::new(self.base_genus, pairs))
            }
            MoveSpec::Twist(ks) => {
                if ks.len() != n {
                    return Err(MoveError::TwistLength {
                        expected: n,
                        got: ks.len(),
                    });
                }
                let sum: BigInt = ks.iter().sum();
                if !sum.is_zero() {
                    return Err(MoveError::TwistSum { sum });
                }
                let pairs = self
                    .pairs
                    .iter()
                    .zip(ks)
                    .map(|(p, k)| ExceptionalPair {
                        alpha: p.alpha.clone(),
                        beta: &p.beta + k * &p.alpha,
                    })
                    .collect();
                Ok(SeifertData::new(self.base_genus, pairs))
            }
        }
    }

    /// Canonical normal form: every multiplicity-1 pair and every integer
    /// part of beta/alpha is absorbed into the single integer `b`, singular
    /// pairs are reduced to `0 < beta < alpha` and sorted.
    pub fn normalize(&self) -> NormalForm {
        let mut b = BigInt::zero();
        let mut singular = Vec::new();
        for pair in &self.pairs {
            if pair.alpha.is_one() {
                b += &pair.beta;
            } else {
                let (q, r) = pair.beta.div_mod_floor(&pair.alpha);
                // r != 0: alpha | beta would contradict coprimality for alpha > 1.
                b += q;
                singular.push(ExceptionalPair {
                    alpha: pair.alpha.clone(),
                    beta: r,
                });
            }
        }
        singular.sort();
        NormalForm {
            base_genus: self.base_genus,
            b,
            singular_pairs: singular,
        }
    }

    /// Fibered isomorphism: equality of normal forms.
    pub fn is_isomorphic(&self, other: &SeifertData) -> bool {
        self.normalize() == other.normalize()
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({};", self.base_genus)?;
        for (i, pair) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {pair}")?;
        }
        write!(f, ")")
    }
}

/// Complete isomorphism invariant of the fibered manifold: base genus, the
/// integer `b`, and the sorted reduced singular pairs.  Two presentations are
/// related by equivalence moves exactly when their normal forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    base_genus: u64,
    b: BigInt,
    singular_pairs: Vec<ExceptionalPair>,
}

impl NormalForm {
    pub fn base_genus(&self) -> u64 {
        self.base_genus
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// Reduced singular pairs, each with `0 < beta < alpha` and `alpha > 1`,
    /// sorted lexicographically.
    pub fn singular_pairs(&self) -> &[ExceptionalPair] {
        &self.singular_pairs
    }

    pub fn euler_number(&self) -> Rational {
        -Rational::from(self.b.clone())
            - self
                .singular_pairs
                .iter()
                .map(ExceptionalPair::slope)
                .sum::<Rational>()
    }

    /// Expands back to unnormalized invariants `M(g; (1,b), pairs...)`.
    pub fn to_seifert_data(&self) -> SeifertData {
        let mut pairs = Vec::with_capacity(self.singular_pairs.len() + 1);
        pairs.push(ExceptionalPair {
            alpha: BigInt::one(),
            beta: self.b.clone(),
        });
        pairs.extend(self.singular_pairs.iter().cloned());
        SeifertData::new(self.base_genus, pairs)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g = {}, b = {}, singular = [", self.base_genus, self.b)?;
        for (i, pair) in self.singular_pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{pair}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(g: u64, pairs: &[(i64, i64)]) -> SeifertData {
        SeifertData::from_pairs(g, pairs.iter().copied()).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pair_validation() {
        assert!(ExceptionalPair::new(2, 1).is_ok());
        assert!(ExceptionalPair::new(1, 0).is_ok());
        assert!(ExceptionalPair::new(1, -7).is_ok());
        assert_eq!(
            ExceptionalPair::new(0, 1),
            Err(InvalidSeifertData::NonPositiveAlpha {
                alpha: BigInt::from(0)
            })
        );
        assert_eq!(
            ExceptionalPair::new(-2, 1),
            Err(InvalidSeifertData::NonPositiveAlpha {
                alpha: BigInt::from(-2)
            })
        );
        assert_eq!(
            ExceptionalPair::new(4, 6),
            Err(InvalidSeifertData::NotCoprime {
                alpha: BigInt::from(4),
                beta: BigInt::from(6),
                gcd: BigInt::from(2)
            })
        );
        // gcd uses absolute values; (4, -6) is rejected the same way.
        assert!(ExceptionalPair::new(4, -6).is_err());
    }

    #[test]
    fn euler_number_examples() {
        assert_eq!(m(0, &[(1, 1)]).euler_number(), rat(-1, 1));
        assert_eq!(m(0, &[(2, 1), (3, -1)]).euler_number(), rat(-1, 6));
        assert_eq!(m(5, &[]).euler_number(), rat(0, 1));
    }

    #[test]
    fn normalize_examples() {
        let nf = m(0, &[(2, 5), (3, -5)]).normalize();
        assert_eq!(nf.base_genus(), 0);
        assert_eq!(nf.b(), &BigInt::from(0));
        assert_eq!(
            nf.singular_pairs(),
            &[
                ExceptionalPair::new(2, 1).unwrap(),
                ExceptionalPair::new(3, 1).unwrap()
            ]
        );

        let nf = m(1, &[(1, 3), (1, -1)]).normalize();
        assert_eq!(nf.base_genus(), 1);
        assert_eq!(nf.b(), &BigInt::from(2));
        assert!(nf.singular_pairs().is_empty());

        let nf = m(0, &[(2, 1), (3, -1)]).normalize();
        assert_eq!(nf.b(), &BigInt::from(-1));
        assert_eq!(
            nf.singular_pairs(),
            &[
                ExceptionalPair::new(2, 1).unwrap(),
                ExceptionalPair::new(3, 2).unwrap()
            ]
        );
    }

    #[test]
    fn normalize_sorts_and_preserves_euler() {
        let a = m(0, &[(5, 3), (2, 1), (5, 2)]);
        let nf = a.normalize();
        let sorted: Vec<_> = nf.singular_pairs().to_vec();
        let mut resorted = sorted.clone();
        resorted.sort();
        assert_eq!(sorted, resorted);
        assert_eq!(nf.euler_number(), a.euler_number());
    }

    #[test]
    fn normalize_idempotent_via_expansion() {
        for data in [
            m(0, &[(2, 5), (3, -5)]),
            m(1, &[(1, 3), (1, -1)]),
            m(2, &[]),
            m(0, &[(7, -3), (4, 9), (1, 2)]),
        ] {
            let nf = data.normalize();
            assert_eq!(nf.to_seifert_data().normalize(), nf);
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert!(m(0, &[(2, 1), (3, -1)]).is_isomorphic(&m(0, &[(3, -1), (2, 1), (1, 0)])));
        assert!(m(0, &[(2, 1)]).is_isomorphic(&m(0, &[(1, 1), (2, -1)])));
        assert!(!m(0, &[(2, 1)]).is_isomorphic(&m(0, &[(2, -1)])));
        assert!(!m(0, &[]).is_isomorphic(&m(1, &[])));
    }

    #[test]
    fn move_examples() {
        let a = m(0, &[(2, 1), (3, 1)]);
        assert_eq!(
            a.apply_move(&MoveSpec::Permute(vec![1, 0])).unwrap(),
            m(0, &[(3, 1), (2, 1)])
        );
        assert_eq!(a.apply_move(&MoveSpec::InsertTrivial).unwrap(), m(0, &[(2, 1), (3, 1), (1, 0)]));
        let twisted = a
            .apply_move(&MoveSpec::Twist(vec![BigInt::from(2), BigInt::from(-2)]))
            .unwrap();
        assert_eq!(twisted, m(0, &[(2, 5), (3, -5)]));
        assert_eq!(twisted.euler_number(), a.euler_number());
    }

    #[test]
    fn move_errors() {
        let a = m(0, &[(2, 1), (3, 1)]);
        assert_eq!(
            a.apply_move(&MoveSpec::Twist(vec![BigInt::one(), BigInt::one()])),
            Err(MoveError::TwistSum {
                sum: BigInt::from(2)
            })
        );
        assert_eq!(
            a.apply_move(&MoveSpec::Twist(vec![BigInt::one()])),
            Err(MoveError::TwistLength {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            a.apply_move(&MoveSpec::DeleteTrivial(0)),
            Err(MoveError::NotTrivialPair {
                index: 0,
                alpha: BigInt::from(2),
                beta: BigInt::from(1)
            })
        );
        assert_eq!(
            a.apply_move(&MoveSpec::DeleteTrivial(5)),
            Err(MoveError::IndexOutOfRange { index: 5, count: 2 })
        );
        assert_eq!(
            a.apply_move(&MoveSpec::Permute(vec![0, 0])),
            Err(MoveError::InvalidPermutation { index: 0 })
        );
        assert_eq!(
            a.apply_move(&MoveSpec::Permute(vec![0])),
            Err(MoveError::PermutationLength {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn delete_trivial_roundtrip() {
        let a = m(3, &[(4, 3)]);
        let b = a.apply_move(&MoveSpec::InsertTrivial).unwrap();
        assert_eq!(b.apply_move(&MoveSpec::DeleteTrivial(1)).unwrap(), a);
    }

    #[test]
    fn display_roundtrip_format() {
        assert_eq!(m(0, &[(2, 1), (3, -1)]).to_string(), "M(0; (2,1), (3,-1))");
        assert_eq!(m(1, &[]).to_string(), "M(1;)");
    }
}
