//! Equal-frequency transition pairs and their correspondence with equal sums
//! of two squares.
//!
//! A transition `N → n` carries the dimensionless energy `1/n² − 1/N²`. All
//! equality decisions here are exact cross-multiplications of big integers.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::identities::SquareIdentity;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitionError {
    #[error("invalid transition {upper}->{lower}: need upper > lower >= 1")]
    InvalidTransition { upper: BigInt, lower: BigInt },
    #[error("transitions do not have equal frequency")]
    NotEqualFrequency,
    #[error("a pair needs two distinct transitions")]
    IdenticalTransitions,
    #[error("identity has no labeling with A>C and D>B")]
    DegenerateIdentity,
    #[error("identity has a zero entry")]
    ZeroEntry,
}

/// Emission from level `upper` down to level `lower`.
///
/// Ordered by `(lower, upper)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    lower: BigInt,
    upper: BigInt,
}

impl Transition {
    pub fn new(
        upper: impl Into<BigInt>,
        lower: impl Into<BigInt>,
    ) -> Result<Self, TransitionError> {
        let (upper, lower) = (upper.into(), lower.into());
        if lower < BigInt::one() || upper <= lower {
            return Err(TransitionError::InvalidTransition { upper, lower });
        }
        Ok(Transition { lower, upper })
    }

    pub fn upper(&self) -> &BigInt {
        &self.upper
    }

    pub fn lower(&self) -> &BigInt {
        &self.lower
    }

    /// `(N² − n², n²N²)`, unreduced.
    fn delta_parts(&self) -> (BigInt, BigInt) {
        let n2 = &self.lower * &self.lower;
        let big2 = &self.upper * &self.upper;
        (&big2 - &n2, n2 * big2)
    }

    /// `1/n² − 1/N²`, reduced.
    pub fn delta(&self) -> BigRational {
        let (num, den) = self.delta_parts();
        BigRational::new(num, den)
    }

    fn scaled_down(&self, g: &BigInt) -> Transition {
        Transition {
            lower: &self.lower / g,
            upper: &self.upper / g,
        }
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.upper, self.lower)
    }
}

/// Outcome of an exact frequency comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairCheck {
    Equal(BigRational),
    NotEqual(BigRational, BigRational),
}

impl PairCheck {
    pub fn is_equal(&self) -> bool {
        matches!(self, PairCheck::Equal(_))
    }
}

fn compare_parts(a: (BigInt, BigInt), b: (BigInt, BigInt)) -> PairCheck {
    if &a.0 * &b.1 == &b.0 * &a.1 {
        PairCheck::Equal(BigRational::new(a.0, a.1))
    } else {
        PairCheck::NotEqual(BigRational::new(a.0, a.1), BigRational::new(b.0, b.1))
    }
}

/// Compares `1/n₁² − 1/N₁²` with `1/n₂² − 1/N₂²` by cross-multiplication.
pub fn verify_pair(t1: &Transition, t2: &Transition) -> PairCheck {
    compare_parts(t1.delta_parts(), t2.delta_parts())
}

/// [`verify_pair`] on raw levels, validating each transition first.
pub fn verify_levels(
    upper1: impl Into<BigInt>,
    lower1: impl Into<BigInt>,
    upper2: impl Into<BigInt>,
    lower2: impl Into<BigInt>,
) -> Result<PairCheck, TransitionError> {
    let t1 = Transition::new(upper1, lower1)?;
    let t2 = Transition::new(upper2, lower2)?;
    Ok(verify_pair(&t1, &t2))
}

/// Compares ionization from `lower` (upper level at infinity, energy `1/n²`)
/// with an ordinary transition.
pub fn verify_ionized(lower: &BigInt, other: &Transition) -> Result<PairCheck, TransitionError> {
    if !lower.is_positive() {
        return Err(TransitionError::InvalidTransition {
            upper: BigInt::zero(),
            lower: lower.clone(),
        });
    }
    Ok(compare_parts(
        (BigInt::one(), lower * lower),
        other.delta_parts(),
    ))
}

/// Two distinct transitions with the same photon frequency.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionPair {
    t1: Transition,
    t2: Transition,
    delta: BigRational,
}

impl TransitionPair {
    pub fn new(t1: Transition, t2: Transition) -> Result<Self, TransitionError> {
        if t1 == t2 {
            return Err(TransitionError::IdenticalTransitions);
        }
        match verify_pair(&t1, &t2) {
            PairCheck::Equal(delta) => Ok(TransitionPair { t1, t2, delta }),
            PairCheck::NotEqual(..) => Err(TransitionError::NotEqualFrequency),
        }
    }

    /// Pair from raw levels `(N₁, n₁, N₂, n₂)`.
    pub fn from_levels(
        upper1: impl Into<BigInt>,
        lower1: impl Into<BigInt>,
        upper2: impl Into<BigInt>,
        lower2: impl Into<BigInt>,
    ) -> Result<Self, TransitionError> {
        TransitionPair::new(
            Transition::new(upper1, lower1)?,
            Transition::new(upper2, lower2)?,
        )
    }

    pub fn t1(&self) -> &Transition {
        &self.t1
    }

    pub fn t2(&self) -> &Transition {
        &self.t2
    }

    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    /// `gcd(n₁, N₁, n₂, N₂)`.
    pub fn content(&self) -> BigInt {
        self.t1
            .lower
            .gcd(&self.t1.upper)
            .gcd(&self.t2.lower)
            .gcd(&self.t2.upper)
    }

    pub fn is_canonical(&self) -> bool {
        self.content().is_one() && self.t1 < self.t2
    }

    /// Every level multiplied by `k ≥ 1`.
    pub fn scaled(&self, k: &BigInt) -> TransitionPair {
        assert!(k.is_positive(), "scale factor must be positive");
        let scale = |t: &Transition| Transition {
            lower: &t.lower * k,
            upper: &t.upper * k,
        };
        let (t1, t2) = (scale(&self.t1), scale(&self.t2));
        let delta = t1.delta();
        TransitionPair { t1, t2, delta }
    }
}

impl fmt::Display for TransitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {} (delta = {})", self.t1, self.t2, self.delta)
    }
}

/// Divides all four levels by their gcd and orders the transitions.
pub fn canonicalize_pair(pair: &TransitionPair) -> TransitionPair {
    let g = pair.content();
    let a = pair.t1.scaled_down(&g);
    let b = pair.t2.scaled_down(&g);
    let (t1, t2) = if a <= b { (a, b) } else { (b, a) };
    let delta = t1.delta();
    TransitionPair { t1, t2, delta }
}

/// A pair together with the square identity obtained by clearing
/// denominators with `scale = lcm(n₁, N₁, n₂, N₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClearingWitness {
    pub identity: SquareIdentity,
    /// `[A, B, C, D] = [L/n₁, L/N₂, L/N₁, L/n₂]` before canonical ordering.
    pub labeled: [BigInt; 4],
    pub scale: BigInt,
    pub pair: TransitionPair,
}

fn lcm_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |l, x| l.lcm(x))
}

/// Clears denominators in `1/n₁² + 1/N₂² = 1/N₁² + 1/n₂²`.
pub fn pair_to_identity(pair: &TransitionPair) -> ClearingWitness {
    let (n1, big1, n2, big2) = (
        &pair.t1.lower,
        &pair.t1.upper,
        &pair.t2.lower,
        &pair.t2.upper,
    );
    let scale = lcm_all([n1, big1, n2, big2]);
    let labeled = [&scale / n1, &scale / big2, &scale / big1, &scale / n2];
    let identity = SquareIdentity::new(
        labeled[0].clone(),
        labeled[1].clone(),
        labeled[2].clone(),
        labeled[3].clone(),
    )
    .expect("equal-frequency pair clears to an equal-sums identity");
    ClearingWitness {
        identity,
        labeled,
        scale,
        pair: pair.clone(),
    }
}

/// Every canonical transition pair obtainable from `id` by labeling its
/// entries so that `A > C` and `D > B` (with `A, B` on one side).
pub fn identity_to_pairs(id: &SquareIdentity) -> Result<Vec<TransitionPair>, TransitionError> {
    if id.has_zero_entry() {
        return Err(TransitionError::ZeroEntry);
    }
    let l = lcm_all(id.entries());
    let (s1, s2) = (id.side1(), id.side2());
    let mut out: Vec<TransitionPair> = Vec::new();
    for (x, y) in [(s1, s2), (s2, s1)] {
        for (a, b) in [(&x[0], &x[1]), (&x[1], &x[0])] {
            for (c, d) in [(&y[0], &y[1]), (&y[1], &y[0])] {
                if a <= c || d <= b {
                    continue;
                }
                let t1 = Transition::new(&l / c, &l / a).expect("A > C");
                let t2 = Transition::new(&l / b, &l / d).expect("D > B");
                let Ok(pair) = TransitionPair::new(t1, t2) else {
                    // Trivial identities label into the same transition twice.
                    continue;
                };
                let pair = canonicalize_pair(&pair);
                if !out.contains(&pair) {
                    out.push(pair);
                }
            }
        }
    }
    if out.is_empty() {
        return Err(TransitionError::DegenerateIdentity);
    }
    out.sort_by(|p, q| (&p.t1, &p.t2).cmp(&(&q.t1, &q.t2)));
    Ok(out)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// All canonical equal-frequency pairs with every level `≤ max_level`,
/// found by bucketing transitions on their exact energy. Sorted by
/// `(delta, t1, t2)`.
pub fn enumerate_pairs(max_level: u32) -> Vec<TransitionPair> {
    let max = u64::from(max_level);
    let mut buckets: HashMap<(u128, u128), Vec<(u64, u64)>> = HashMap::new();
    for lower in 1..=max {
        for upper in lower + 1..=max {
            let (n2, big2) = (u128::from(lower * lower), u128::from(upper * upper));
            let (num, den) = (big2 - n2, n2 * big2);
            let g = num.gcd(&den);
            buckets
                .entry((num / g, den / g))
                .or_default()
                .push((lower, upper));
        }
    }
    let mut out = Vec::new();
    for group in buckets.values_mut().filter(|g| g.len() > 1) {
        group.sort_unstable();
        for (i, &(n1, big1)) in group.iter().enumerate() {
            for &(n2, big2) in &group[i + 1..] {
                if gcd_u64(gcd_u64(n1, big1), gcd_u64(n2, big2)) != 1 {
                    continue;
                }
                let pair = TransitionPair::from_levels(big1, n1, big2, n2)
                    .expect("bucketed transitions share their energy");
                out.push(pair);
            }
        }
    }
    out.sort_by(|p, q| (&p.delta, &p.t1, &p.t2).cmp(&(&q.delta, &q.t1, &q.t2)));
    out
}
