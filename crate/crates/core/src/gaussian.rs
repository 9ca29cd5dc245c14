//! Exact arithmetic in the Gaussian integers `Z[i]`.
//!
//! Components are arbitrary precision. Division rounds each component of the
//! exact quotient to the nearest integer, with halves rounded toward +∞, so
//! the Euclidean algorithm (and therefore [`gcd`]) is bit-reproducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussianError {
    #[error("division by zero Gaussian integer")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
}

/// An element `re + im·i` of `Z[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

/// One of the four units `1, i, -1, -i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    I,
    NegOne,
    NegI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::NegOne, Unit::NegI];

    /// Exponent `k` with `self = i^k`.
    pub fn power_of_i(self) -> u8 {
        match self {
            Unit::One => 0,
            Unit::I => 1,
            Unit::NegOne => 2,
            Unit::NegI => 3,
        }
    }

    pub fn from_power_of_i(k: u8) -> Unit {
        Unit::ALL[usize::from(k % 4)]
    }

    pub fn inverse(self) -> Unit {
        Unit::from_power_of_i(4 - self.power_of_i())
    }

    pub fn to_gaussian(self) -> GaussianInt {
        match self {
            Unit::One => GaussianInt::from_i64(1, 0),
            Unit::I => GaussianInt::from_i64(0, 1),
            Unit::NegOne => GaussianInt::from_i64(-1, 0),
            Unit::NegI => GaussianInt::from_i64(0, -1),
        }
    }

    /// `self · g`, computed by rotating components.
    pub fn apply(self, g: &GaussianInt) -> GaussianInt {
        match self {
            Unit::One => g.clone(),
            Unit::I => GaussianInt::new(-&g.im, g.re.clone()),
            Unit::NegOne => -g,
            Unit::NegI => GaussianInt::new(g.im.clone(), -&g.re),
        }
    }
}

impl Mul for Unit {
    type Output = Unit;

    fn mul(self, rhs: Unit) -> Unit {
        Unit::from_power_of_i(self.power_of_i() + rhs.power_of_i())
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::One => "1",
            Unit::I => "i",
            Unit::NegOne => "-1",
            Unit::NegI => "-i",
        })
    }
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussianInt::new(re, im)
    }

    pub fn zero() -> Self {
        GaussianInt::default()
    }

    pub fn one() -> Self {
        GaussianInt::from_i64(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re.clone(), -&self.im)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// (or `d` is zero).
    pub fn checked_exact_div(&self, d: &GaussianInt) -> Option<GaussianInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let num = self * &d.conj();
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then(|| GaussianInt::new(qr, qi))
    }

    pub fn divides(&self, other: &GaussianInt) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.checked_exact_div(self).is_some()
    }

    /// Whether `other = u·self` for some unit `u`; returns that unit.
    pub fn associate_unit(&self, other: &GaussianInt) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| &u.apply(self) == other)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;

    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;

    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;

    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;

    fn neg(self) -> GaussianInt {
        GaussianInt::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianInt {
            type Output = GaussianInt;

            fn $m(self, rhs: GaussianInt) -> GaussianInt {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GaussianInt {
    type Output = GaussianInt;

    fn neg(self) -> GaussianInt {
        -&self
    }
}

/// Nearest integer to `num / den` (`den > 0`), halves toward +∞.
fn round_half_up(num: &BigInt, den: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (num * &two + den).div_floor(&(den * &two))
}

/// Euclidean division: `a = q·b + r` with `2·norm(r) ≤ norm(b)`.
pub fn euclid_divmod(
    a: &GaussianInt,
    b: &GaussianInt,
) -> Result<(GaussianInt, GaussianInt), GaussianError> {
    if b.is_zero() {
        return Err(GaussianError::DivisionByZero);
    }
    let n = b.norm();
    let num = a * &b.conj();
    let q = GaussianInt::new(round_half_up(&num.re, &n), round_half_up(&num.im, &n));
    let r = a - &(&q * b);
    Ok((q, r))
}

/// The associate `c = u·g` with `c.re > 0, c.im ≥ 0` (zero maps to zero).
pub fn canonical_associate(g: &GaussianInt) -> (GaussianInt, Unit) {
    if g.is_zero() {
        return (GaussianInt::zero(), Unit::One);
    }
    for u in Unit::ALL {
        let c = u.apply(g);
        if c.re.is_positive() && !c.im.is_negative() {
            return (c, u);
        }
    }
    unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
}

/// Greatest common divisor, returned as its canonical associate.
pub fn gcd(a: &GaussianInt, b: &GaussianInt) -> Result<GaussianInt, GaussianError> {
    if a.is_zero() && b.is_zero() {
        return Err(GaussianError::UndefinedGcd);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = euclid_divmod(&x, &y)?;
        x = y;
        y = r;
    }
    Ok(canonical_associate(&x).0)
}

impl From<(i64, i64)> for GaussianInt {
    fn from((re, im): (i64, i64)) -> Self {
        GaussianInt::from_i64(re, im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_i64(re, im)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(g(1, 8).norm(), BigInt::from(65));
        assert_eq!(g(0, 0).norm(), BigInt::from(0));
        assert_eq!(g(4, 3).norm(), BigInt::from(25));
        // 65 = (1+8i)(1-8i)
        assert_eq!(&g(1, 8) * &g(1, 8).conj(), g(65, 0));
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(
            euclid_divmod(&g(5, 10), &g(4, 3)).unwrap(),
            (g(2, 1), g(0, 0))
        );
        let x = g(-17, 23);
        assert_eq!(euclid_divmod(&x, &g(1, 0)).unwrap(), (x.clone(), g(0, 0)));
        assert_eq!(
            euclid_divmod(&g(7, 3), &g(2, 0)).unwrap(),
            (g(4, 2), g(-1, -1))
        );
    }

    #[test]
    fn divmod_by_zero() {
        assert_eq!(
            euclid_divmod(&g(1, 1), &g(0, 0)),
            Err(GaussianError::DivisionByZero)
        );
    }

    #[test]
    fn rounding_ties_go_up() {
        // (1+i)/2 = 0.5 + 0.5i rounds to 1+i; (-1-i)/2 rounds to 0.
        assert_eq!(euclid_divmod(&g(1, 1), &g(2, 0)).unwrap().0, g(1, 1));
        assert_eq!(euclid_divmod(&g(-1, -1), &g(2, 0)).unwrap().0, g(0, 0));
    }

    /// Largest-norm common divisor found by scanning every Gaussian integer
    /// in a box, using only i64 arithmetic.
    fn brute_gcd(a: (i64, i64), b: (i64, i64), bound: i64) -> (i64, i64) {
        let divides = |d: (i64, i64), x: (i64, i64)| {
            let n = d.0 * d.0 + d.1 * d.1;
            let re = x.0 * d.0 + x.1 * d.1;
            let im = x.1 * d.0 - x.0 * d.1;
            re % n == 0 && im % n == 0
        };
        let mut best = (1, 0);
        for re in -bound..=bound {
            for im in -bound..=bound {
                let d = (re, im);
                if d == (0, 0) {
                    continue;
                }
                if divides(d, a)
                    && divides(d, b)
                    && re * re + im * im > best.0 * best.0 + best.1 * best.1
                {
                    best = d;
                }
            }
        }
        best
    }

    #[test]
    fn gcd_examples_against_exhaustive_search() {
        let d = gcd(&g(5, 10), &g(11, 2)).unwrap();
        assert_eq!(d, g(4, 3));
        let oracle = brute_gcd((5, 10), (11, 2), 12);
        assert!(g(oracle.0, oracle.1).associate_unit(&d).is_some());

        let d = gcd(&g(2, 0), &g(1, 1)).unwrap();
        assert_eq!(d, g(1, 1));
        let oracle = brute_gcd((2, 0), (1, 1), 3);
        assert!(g(oracle.0, oracle.1).associate_unit(&d).is_some());
        assert_eq!(&g(0, -1) * &(&g(1, 1) * &g(1, 1)), g(2, 0));
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(gcd(&g(-3, 4), &g(0, 0)).unwrap(), g(4, 3));
        assert_eq!(gcd(&g(0, 0), &g(0, -7)).unwrap(), g(7, 0));
        assert_eq!(gcd(&g(0, 0), &g(0, 0)), Err(GaussianError::UndefinedGcd));
    }

    #[test]
    fn canonical_associate_examples() {
        assert_eq!(canonical_associate(&g(-3, 4)), (g(4, 3), Unit::NegI));
        assert_eq!(canonical_associate(&g(0, 0)), (g(0, 0), Unit::One));
        assert_eq!(canonical_associate(&g(5, 0)), (g(5, 0), Unit::One));
        assert_eq!(canonical_associate(&g(0, 5)), (g(5, 0), Unit::NegI));
    }

    #[test]
    fn units_form_cyclic_group() {
        for a in Unit::ALL {
            assert_eq!(a.to_gaussian().norm(), BigInt::from(1));
            assert_eq!(a * a.inverse(), Unit::One);
            for b in Unit::ALL {
                assert_eq!((a * b).to_gaussian(), &a.to_gaussian() * &b.to_gaussian());
            }
        }
        assert_eq!(Unit::I * Unit::I * Unit::I * Unit::I, Unit::One);
    }

    #[test]
    fn display_format() {
        assert_eq!(g(0, 0).to_string(), "0");
        assert_eq!(g(4, -3).to_string(), "4-3i");
        assert_eq!(g(-7, 24).to_string(), "-7+24i");
        assert_eq!(g(5, 0).to_string(), "5+0i");
    }

    fn arb_g(bound: i64) -> impl Strategy<Value = GaussianInt> {
        (-bound..=bound, -bound..=bound).prop_map(|(a, b)| g(a, b))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in arb_g(1_000_000), b in arb_g(1_000_000)) {
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn conj_involution(a in arb_g(1_000_000)) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.conj().norm(), a.norm());
            prop_assert_eq!(a.norm().is_zero(), a.is_zero());
        }

        #[test]
        fn divmod_contract(a in arb_g(1_000_000), b in arb_g(1_000)) {
            prop_assume!(!b.is_zero());
            let (q, r) = euclid_divmod(&a, &b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.norm() * 2 <= b.norm());
        }

        #[test]
        fn gcd_divides_and_is_symmetric(a in arb_g(10_000), b in arb_g(10_000), c in arb_g(100)) {
            prop_assume!(!c.is_zero());
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let d = gcd(&a, &b).unwrap();
            prop_assert!(d.divides(&a) && d.divides(&b));
            prop_assert!(c.divides(&d));
            prop_assert_eq!(gcd(&b, &a).unwrap(), d.clone());
            prop_assert_eq!(canonical_associate(&d).0, d);
        }

        #[test]
        fn four_associates_share_canonical_form(a in arb_g(1_000_000)) {
            prop_assume!(!a.is_zero());
            let assoc: Vec<_> = Unit::ALL.iter().map(|u| u.apply(&a)).collect();
            for i in 0..4 {
                for j in (i + 1)..4 {
                    prop_assert_ne!(&assoc[i], &assoc[j]);
                }
            }
            let (c, u) = canonical_associate(&a);
            prop_assert_eq!(&u.apply(&a), &c);
            for x in &assoc {
                prop_assert_eq!(&canonical_associate(x).0, &c);
            }
        }
    }
}
