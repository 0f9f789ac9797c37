//! Small exact-integer helpers shared by the classification modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Inverse of `a` modulo `m > 0`, in `[0, m)`.  `None` when gcd(a, m) != 1.
/// For m = 1 every residue is 0.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// Merges two congruences `x = r1 (mod m1)`, `x = r2 (mod m2)` with
/// m1, m2 > 0.  Returns the combined `(residue, lcm)` with the residue in
/// `[0, lcm)`, or `None` when the system is incompatible.
pub(crate) fn crt_merge(
    r1: &BigInt,
    m1: &BigInt,
    r2: &BigInt,
    m2: &BigInt,
) -> Option<(BigInt, BigInt)> {
    let g = m1.gcd(m2);
    let diff = r2 - r1;
    if !(&diff % &g).is_zero() {
        return None;
    }
    let lcm = m1 / &g * m2;
    let m2g = m2 / &g;
    // m1/g is invertible mod m2/g; t = (diff/g) * (m1/g)^-1 steps of m1.
    let inv = mod_inverse(&(m1 / &g).mod_floor(&m2g), &m2g)?;
    let t = ((diff / &g) * inv).mod_floor(&m2g);
    let x = (r1 + m1 * t).mod_floor(&lcm);
    Some((x, lcm))
}
