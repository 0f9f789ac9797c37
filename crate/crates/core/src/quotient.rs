//! Quotients of a Seifert fibered manifold by the cyclic subgroup Z_d of the
//! circle acting along the fibers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::seifert::{ExceptionalPair, SeifertData};
use crate::Error;

/// The quotient `M / Z_d`, again in unnormalized Seifert invariants over the
/// same base: each pair `(alpha, beta)` becomes
/// `(alpha / gcd(alpha, d), d beta / gcd(alpha, d))`.
///
/// The Euler numbers obey `e(M/Z_d) = d * e(M)` exactly.
pub fn zd_quotient(m: &SeifertData, d: &BigInt) -> Result<SeifertData, Error> {
    if !d.is_positive() {
        return Err(Error::NonPositiveD { d: d.clone() });
    }
    let pairs = m
        .pairs()
        .iter()
        .map(|pair| {
            let g = pair.alpha().gcd(d);
            let alpha = pair.alpha() / &g;
            let beta = d * pair.beta() / &g;
            // alpha/g and d*beta/g are coprime whenever (alpha, beta) is a
            // valid pair, so this cannot fail.
            ExceptionalPair::new(alpha, beta).expect("quotient pair stays coprime")
        })
        .collect();
    Ok(SeifertData::new(m.base_genus(), pairs))
}
