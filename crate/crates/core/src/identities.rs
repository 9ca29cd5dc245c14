//! Equal sums of two squares `A² + B² = C² + D²`.
//!
//! Every such identity comes from the four-parameter product
//! `(r+is)(u±iv)`; [`recover_params`] finds a witness `(r, s, u, v)` by
//! taking a Gaussian gcd of `A+iB` and `C+iD`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::gaussian::{self, GaussianInt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("{0}^2+{1}^2 != {2}^2+{3}^2")]
    NotEqualSums(BigInt, BigInt, BigInt, BigInt),
    #[error("all four entries are zero")]
    AllZero,
    #[error("identity has norm 0")]
    DegenerateIdentity,
}

/// Parameters of the product `(r+is)(u+iv)` / `(r+is)(u-iv)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BFParams {
    pub r: BigInt,
    pub s: BigInt,
    pub u: BigInt,
    pub v: BigInt,
}

impl BFParams {
    pub fn new(
        r: impl Into<BigInt>,
        s: impl Into<BigInt>,
        u: impl Into<BigInt>,
        v: impl Into<BigInt>,
    ) -> Self {
        BFParams {
            r: r.into(),
            s: s.into(),
            u: u.into(),
            v: v.into(),
        }
    }

    /// `r + is`.
    pub fn left(&self) -> GaussianInt {
        GaussianInt::new(self.r.clone(), self.s.clone())
    }

    /// `u + iv`.
    pub fn right(&self) -> GaussianInt {
        GaussianInt::new(self.u.clone(), self.v.clone())
    }

    pub fn is_degenerate(&self) -> bool {
        self.left().is_zero() || self.right().is_zero()
    }

    /// The raw signed entries `(ru−sv, rv+su, ru+sv, su−rv)`.
    pub fn raw_entries(&self) -> [BigInt; 4] {
        let (r, s, u, v) = (&self.r, &self.s, &self.u, &self.v);
        [r * u - s * v, r * v + s * u, r * u + s * v, s * u - r * v]
    }
}

impl fmt::Display for BFParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} s={} u={} v={}", self.r, self.s, self.u, self.v)
    }
}

/// An identity `A² + B² = C² + D²` between nonnegative integers, stored with
/// each side sorted descending and the lexicographically larger side first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareIdentity {
    side1: [BigInt; 2],
    side2: [BigInt; 2],
}

fn sorted_side(a: BigInt, b: BigInt) -> [BigInt; 2] {
    if a >= b {
        [a, b]
    } else {
        [b, a]
    }
}

impl SquareIdentity {
    /// Builds the identity `a² + b² = c² + d²`; signs are dropped and the
    /// entries put in canonical order.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, IdentityError> {
        let (a, b, c, d) = (
            a.into().abs(),
            b.into().abs(),
            c.into().abs(),
            d.into().abs(),
        );
        if &a * &a + &b * &b != &c * &c + &d * &d {
            return Err(IdentityError::NotEqualSums(a, b, c, d));
        }
        let s1 = sorted_side(a, b);
        let s2 = sorted_side(c, d);
        let (side1, side2) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
        Ok(SquareIdentity { side1, side2 })
    }

    pub fn side1(&self) -> &[BigInt; 2] {
        &self.side1
    }

    pub fn side2(&self) -> &[BigInt; 2] {
        &self.side2
    }

    /// `[A, B, C, D]` in canonical order.
    pub fn entries(&self) -> [&BigInt; 4] {
        [
            &self.side1[0],
            &self.side1[1],
            &self.side2[0],
            &self.side2[1],
        ]
    }

    /// The common value `A² + B²`.
    pub fn norm(&self) -> BigInt {
        &self.side1[0] * &self.side1[0] + &self.side1[1] * &self.side1[1]
    }

    /// Both sides are the same multiset.
    pub fn is_trivial(&self) -> bool {
        self.side1 == self.side2
    }

    pub fn has_zero_entry(&self) -> bool {
        self.entries().iter().any(|e| e.is_zero())
    }

    pub fn content(&self) -> BigInt {
        self.entries()
            .into_iter()
            .fold(BigInt::zero(), |g, e| g.gcd(e))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == BigInt::from(1)
    }
}

impl fmt::Display for SquareIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^2+{}^2={}^2+{}^2={}",
            self.side1[0],
            self.side1[1],
            self.side2[0],
            self.side2[1],
            self.norm()
        )
    }
}

/// Expands `(r+is)(u+iv)` and `(r+is)(u−iv)` into an equal-sums identity of
/// norm `(r²+s²)(u²+v²)`.
pub fn bf_expand(p: &BFParams) -> SquareIdentity {
    let [a, b, c, d] = p.raw_entries();
    SquareIdentity::new(a, b, c, d).expect("product identity always has equal sums")
}

/// Divides all four entries by their common gcd.
pub fn primitive_normalize(id: &SquareIdentity) -> Result<SquareIdentity, IdentityError> {
    let g = id.content();
    if g.is_zero() {
        return Err(IdentityError::AllZero);
    }
    let [a, b, c, d] = id.entries().map(|e| e / &g);
    SquareIdentity::new(a, b, c, d)
}

/// Recovers a witness `(r, s, u, v)` with `bf_expand(witness) == id`.
///
/// Uses `z = A+iB`, `w = C+iD` from the canonical storage order. The witness
/// is `r+is = gcd(z, w)` (canonical associate) and `u+iv = z / (r+is)`.
pub fn recover_params(id: &SquareIdentity) -> Result<BFParams, IdentityError> {
    let [a, b, c, d] = id.entries();
    recover_params_labeled(a, b, c, d)
}

/// As [`recover_params`], but with `z = a+ib` and `w = c+id` taken exactly
/// as given; different labelings of one identity can yield different
/// witnesses.
pub fn recover_params_labeled(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    d: &BigInt,
) -> Result<BFParams, IdentityError> {
    let z = GaussianInt::new(a.clone(), b.clone());
    let w = GaussianInt::new(c.clone(), d.clone());
    if z.norm() != w.norm() {
        return Err(IdentityError::NotEqualSums(
            a.clone(),
            b.clone(),
            c.clone(),
            d.clone(),
        ));
    }
    if z.is_zero() {
        return Err(IdentityError::DegenerateIdentity);
    }
    let delta = gaussian::gcd(&z, &w).expect("z is nonzero");
    let z0 = z.checked_exact_div(&delta).expect("gcd divides z");
    let w0 = w.checked_exact_div(&delta).expect("gcd divides w");
    // w0 must be a unit times conj(z0); anything else is an arithmetic bug.
    assert!(
        z0.conj().associate_unit(&w0).is_some(),
        "cofactor {w0} is not an associate of conj({z0})"
    );
    Ok(BFParams {
        r: delta.re,
        s: delta.im,
        u: z0.re,
        v: z0.im,
    })
}

/// All nontrivial identities with entries in `1..=max_entry`, sorted by
/// `(norm, side1, side2)`.
pub fn enumerate_identities(max_entry: u32) -> Vec<SquareIdentity> {
    let max = u64::from(max_entry);
    let mut buckets: BTreeMap<u64, Vec<(u64, u64)>> = BTreeMap::new();
    for a in 1..=max {
        for b in 1..=a {
            buckets.entry(a * a + b * b).or_default().push((a, b));
        }
    }
    let mut out = Vec::new();
    for reps in buckets.values().filter(|r| r.len() > 1) {
        for (i, &(a, b)) in reps.iter().enumerate() {
            for &(c, d) in &reps[i + 1..] {
                out.push(SquareIdentity::new(a, b, c, d).expect("same bucket"));
            }
        }
    }
    out.sort_by(|x, y| (x.norm(), x).cmp(&(y.norm(), y)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn id(a: i64, b: i64, c: i64, d: i64) -> SquareIdentity {
        SquareIdentity::new(a, b, c, d).unwrap()
    }

    #[test]
    fn expand_examples() {
        let e = bf_expand(&BFParams::new(4, 3, 2, 1));
        assert_eq!(e, id(5, 10, 11, 2));
        assert_eq!(e.norm(), BigInt::from(125));
        assert_eq!(e.to_string(), "11^2+2^2=10^2+5^2=125");

        let e = bf_expand(&BFParams::new(2, 1, 3, -1));
        assert_eq!(e, id(7, 1, 5, 5));
        assert_eq!(e.norm(), BigInt::from(50));

        let e = bf_expand(&BFParams::new(1, 0, 6, 13));
        assert_eq!(e, id(6, 13, 6, 13));
        assert!(e.is_trivial());
    }

    #[test]
    fn canonical_storage_ignores_order_and_sign() {
        assert_eq!(id(5, 10, 11, 2), id(-2, 11, 10, -5));
        assert_eq!(
            id(5, 10, 11, 2).side1(),
            &[BigInt::from(11), BigInt::from(2)]
        );
        assert!(SquareIdentity::new(1, 2, 3, 4).is_err());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            primitive_normalize(&id(5, 10, 11, 2)).unwrap(),
            id(5, 10, 11, 2)
        );
        assert_eq!(
            primitive_normalize(&id(14, 2, 10, 10)).unwrap(),
            id(7, 1, 5, 5)
        );
        assert_eq!(
            primitive_normalize(&id(0, 2, 2, 0)).unwrap(),
            id(0, 1, 1, 0)
        );
        assert_eq!(
            primitive_normalize(&id(0, 0, 0, 0)),
            Err(IdentityError::AllZero)
        );
    }

    #[test]
    fn recover_worked_examples() {
        // With the labeling z = 5+10i, w = 11+2i the gcd witness is exactly (4,3,2,1).
        let p = recover_params_labeled(
            &BigInt::from(5),
            &BigInt::from(10),
            &BigInt::from(11),
            &BigInt::from(2),
        )
        .unwrap();
        assert_eq!(p, BFParams::new(4, 3, 2, 1));

        let target = id(5, 10, 11, 2);
        assert_eq!(bf_expand(&recover_params(&target).unwrap()), target);

        // (2,1,3,-1) is not a gcd witness (3-i and 3+i share the factor 1+i);
        // the gcd witness differs but expands to the same identity.
        let target = id(7, 1, 5, 5);
        let p = recover_params(&target).unwrap();
        assert_eq!(p, BFParams::new(1, 3, 1, -2));
        assert_eq!(bf_expand(&p), target);
        assert_eq!(bf_expand(&BFParams::new(2, 1, 3, -1)), target);

        assert_eq!(
            recover_params(&id(9, 0, 9, 0)).unwrap(),
            BFParams::new(9, 0, 1, 0)
        );
        assert_eq!(
            recover_params(&id(0, 0, 0, 0)),
            Err(IdentityError::DegenerateIdentity)
        );
    }

    /// Every nontrivial identity with entries in 1..=max, by scanning all
    /// quadruples.
    fn brute_identities(max: i64) -> Vec<SquareIdentity> {
        let mut out = Vec::new();
        for a in 1..=max {
            for b in 1..=a {
                for c in 1..=max {
                    for d in 1..=c {
                        if (a, b) > (c, d) && a * a + b * b == c * c + d * d {
                            out.push(id(a, b, c, d));
                        }
                    }
                }
            }
        }
        out.sort_by(|x, y| (x.norm(), x).cmp(&(y.norm(), y)));
        out
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_identities(8),
            vec![id(1, 7, 5, 5), id(1, 8, 4, 7)]
        );
        assert!(enumerate_identities(5).is_empty());
        assert!(brute_identities(5).is_empty());
        assert_eq!(
            enumerate_identities(9),
            vec![id(1, 7, 5, 5), id(1, 8, 4, 7), id(2, 9, 6, 7)]
        );
        for max in [9, 20, 33] {
            assert_eq!(enumerate_identities(max as u32), brute_identities(max));
        }
    }

    #[test]
    fn enumeration_roundtrips_through_recovery() {
        for e in enumerate_identities(60) {
            let p = recover_params(&e).unwrap();
            assert_eq!(bf_expand(&p), e, "witness {p}");
        }
    }

    fn coprime(a: i64, b: i64) -> bool {
        a.gcd(&b) == 1
    }

    proptest! {
        #[test]
        fn expansion_has_product_norm(r in -1000i64..=1000, s in -1000i64..=1000,
                                       u in -1000i64..=1000, v in -1000i64..=1000) {
            let p = BFParams::new(r, s, u, v);
            let e = bf_expand(&p);
            let [a, b, c, d] = p.raw_entries();
            prop_assert_eq!(&a * &a + &b * &b, &c * &c + &d * &d);
            prop_assert_eq!(e.norm(), BigInt::from((r * r + s * s) * (u * u + v * v)));
        }

        #[test]
        fn normalize_is_idempotent(r in -50i64..=50, s in -50i64..=50,
                                    u in -50i64..=50, v in -50i64..=50, k in 1i64..=9) {
            let p = BFParams::new(r * k, s * k, u, v);
            prop_assume!(!p.is_degenerate());
            let once = primitive_normalize(&bf_expand(&p)).unwrap();
            prop_assert!(once.is_primitive());
            prop_assert_eq!(primitive_normalize(&once).unwrap(), once);
        }

        #[test]
        fn all_odd_primitive_params_give_even_entries(r in 0i64..500, s in 0i64..500,
                                                       u in 0i64..500, v in 0i64..500,
                                                       signs in 0u8..16) {
            let odd = |x: i64, bit: u8| if signs & (1 << bit) != 0 { -(2 * x + 1) } else { 2 * x + 1 };
            let (r, s, u, v) = (odd(r, 0), odd(s, 1), odd(u, 2), odd(v, 3));
            prop_assume!(coprime(r, s) && coprime(u, v));
            let p = BFParams::new(r, s, u, v);
            for e in p.raw_entries() {
                prop_assert!(e.is_even());
            }
            let n = primitive_normalize(&bf_expand(&p)).unwrap();
            prop_assert!(n.is_primitive());
        }

        #[test]
        fn recovery_roundtrips_random_identities(r in -300i64..=300, s in -300i64..=300,
                                                  u in -300i64..=300, v in -300i64..=300) {
            let p = BFParams::new(r, s, u, v);
            prop_assume!(!p.is_degenerate());
            let e = bf_expand(&p);
            prop_assert_eq!(bf_expand(&recover_params(&e).unwrap()), e);
        }
    }
}
