//! Two-step cascades `x₂ → x₁ → x₀` whose steps emit the same frequency.
//!
//! Clearing denominators turns `1/x₀² + 1/x₂² = 2/x₁²` into three squares in
//! arithmetic progression, `A² + C² = 2B²`. Those triples correspond to
//! rational points `(p + iq)/r` on the unit circle, which compose by complex
//! multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CascadeError {
    #[error("need m > n > 0, got m={m}, n={n}")]
    InvalidParams { m: BigInt, n: BigInt },
    #[error("triple ({0}, {1}, {2}) is not strictly decreasing")]
    DegenerateTriple(BigInt, BigInt, BigInt),
    #[error("{0}^2+{2}^2 != 2*{1}^2")]
    NotSquareTriple(BigInt, BigInt, BigInt),
    #[error("levels ({0}, {1}, {2}) do not form an equal-frequency cascade")]
    NotACascade(BigInt, BigInt, BigInt),
    #[error("A+C = {0} is odd; reduce the triple first")]
    ParityError(BigInt),
    #[error("{p}^2+{q}^2 != {r}^2 (or r = 0)")]
    NotPythagorean { p: BigInt, q: BigInt, r: BigInt },
    #[error("found a four-level equal-frequency chain {0:?}")]
    FourTermChain([u64; 4]),
}

fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}

/// `A ≥ B ≥ C > 0` with `A² + C² = 2B²`. The all-equal triple is allowed and
/// reported by [`SquareTriple::is_degenerate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareTriple {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl SquareTriple {
    /// Accepts the entries in any order and sign; they are sorted descending.
    pub fn new(
        x: impl Into<BigInt>,
        y: impl Into<BigInt>,
        z: impl Into<BigInt>,
    ) -> Result<Self, CascadeError> {
        let mut v = [x.into().abs(), y.into().abs(), z.into().abs()];
        v.sort_unstable_by(|p, q| q.cmp(p));
        let [a, b, c] = v;
        if c.is_zero() || &a * &a + &c * &c != BigInt::from(2) * &b * &b {
            return Err(CascadeError::NotSquareTriple(a, b, c));
        }
        Ok(SquareTriple { a, b, c })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.c
    }

    pub fn reduced(&self) -> SquareTriple {
        let g = gcd3(&self.a, &self.b, &self.c);
        SquareTriple {
            a: &self.a / &g,
            b: &self.b / &g,
            c: &self.c / &g,
        }
    }

    pub fn is_primitive(&self) -> bool {
        gcd3(&self.a, &self.b, &self.c).is_one()
    }
}

impl fmt::Display for SquareTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Levels `x₀ < x₁ < x₂` with `1/x₀² − 1/x₁² = 1/x₁² − 1/x₂²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CascadeLevels {
    x0: BigInt,
    x1: BigInt,
    x2: BigInt,
}

fn is_cascade(x0: &BigInt, x1: &BigInt, x2: &BigInt) -> bool {
    // 1/x0² + 1/x2² = 2/x1²  ⇔  x1²(x0² + x2²) = 2·x0²·x2²
    let (s0, s1, s2) = (x0 * x0, x1 * x1, x2 * x2);
    &s1 * (&s0 + &s2) == BigInt::from(2) * s0 * s2
}

impl CascadeLevels {
    pub fn new(
        x0: impl Into<BigInt>,
        x1: impl Into<BigInt>,
        x2: impl Into<BigInt>,
    ) -> Result<Self, CascadeError> {
        let (x0, x1, x2) = (x0.into(), x1.into(), x2.into());
        if !(x0.is_positive() && x0 < x1 && x1 < x2) || !is_cascade(&x0, &x1, &x2) {
            return Err(CascadeError::NotACascade(x0, x1, x2));
        }
        Ok(CascadeLevels { x0, x1, x2 })
    }

    pub fn levels(&self) -> [&BigInt; 3] {
        [&self.x0, &self.x1, &self.x2]
    }

    /// Energy of each step, `1/x₀² − 1/x₁²`.
    pub fn delta(&self) -> BigRational {
        let (s0, s1) = (&self.x0 * &self.x0, &self.x1 * &self.x1);
        BigRational::new(&s1 - &s0, s0 * s1)
    }

    pub fn is_primitive(&self) -> bool {
        gcd3(&self.x0, &self.x1, &self.x2).is_one()
    }
}

impl fmt::Display for CascadeLevels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x0, self.x1, self.x2)
    }
}

/// Parameters `m > n > 0` of the three-squares parametrization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct APParams {
    m: BigInt,
    n: BigInt,
}

impl APParams {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self, CascadeError> {
        let (m, n) = (m.into(), n.into());
        if !n.is_positive() || m <= n {
            return Err(CascadeError::InvalidParams { m, n });
        }
        Ok(APParams { m, n })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// `(m²+2mn−n², m²+n², |m²−2mn−n²|)` before any reduction.
    pub fn raw_triple(&self) -> [BigInt; 3] {
        let (m, n) = (&self.m, &self.n);
        let (mm, nn, mn2) = (m * m, n * n, BigInt::from(2) * m * n);
        [&mm + &mn2 - &nn, &mm + &nn, (&mm - &mn2 - &nn).abs()]
    }
}

/// A rational point `(p + iq)/r` on the unit circle, kept with
/// `gcd(p, q, r) = 1` and `r > 0`. The sign of `q` is significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirclePoint {
    p: BigInt,
    q: BigInt,
    r: BigInt,
}

impl CirclePoint {
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
    ) -> Result<Self, CascadeError> {
        let (mut p, mut q, mut r) = (p.into(), q.into(), r.into());
        if r.is_zero() || &p * &p + &q * &q != &r * &r {
            return Err(CascadeError::NotPythagorean { p, q, r });
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = gcd3(&p, &q, &r);
        Ok(CirclePoint {
            p: p / &g,
            q: q / &g,
            r: r / &g,
        })
    }

    pub fn identity() -> Self {
        CirclePoint {
            p: BigInt::one(),
            q: BigInt::zero(),
            r: BigInt::one(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    /// The complex conjugate, which is also the group inverse.
    pub fn inverse(&self) -> Self {
        CirclePoint {
            p: self.p.clone(),
            q: -&self.q,
            r: self.r.clone(),
        }
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.q.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}i)/{}", self.p, sign, self.q.abs(), self.r)
    }
}

/// Three squares in arithmetic progression from `(m, n)`, reduced to
/// primitive form.
pub fn ap_triple(params: &APParams) -> Result<SquareTriple, CascadeError> {
    let [a, b, c] = params.raw_triple();
    let t = SquareTriple::new(a, b, c)
        .expect("parametrization always yields squares in arithmetic progression")
        .reduced();
    if t.is_degenerate() {
        return Err(CascadeError::DegenerateTriple(t.a, t.b, t.c));
    }
    Ok(t)
}

/// Levels `(L/A, L/B, L/C)` with `L = lcm(A, B, C)`, reduced.
pub fn triple_to_cascade(t: &SquareTriple) -> Result<CascadeLevels, CascadeError> {
    if !(t.a > t.b && t.b > t.c) {
        return Err(CascadeError::DegenerateTriple(
            t.a.clone(),
            t.b.clone(),
            t.c.clone(),
        ));
    }
    let l = t.a.lcm(&t.b).lcm(&t.c);
    let (x0, x1, x2) = (&l / &t.a, &l / &t.b, &l / &t.c);
    let g = gcd3(&x0, &x1, &x2);
    let levels =
        CascadeLevels::new(x0 / &g, x1 / &g, x2 / &g).expect("square triple clears to a cascade");
    Ok(levels)
}

/// Triple `(L/x₀, L/x₁, L/x₂)` with `L = lcm(x₀, x₁, x₂)`, reduced.
pub fn cascade_to_triple(
    x0: impl Into<BigInt>,
    x1: impl Into<BigInt>,
    x2: impl Into<BigInt>,
) -> Result<SquareTriple, CascadeError> {
    let c = CascadeLevels::new(x0, x1, x2)?;
    let l = c.x0.lcm(&c.x1).lcm(&c.x2);
    let t = SquareTriple::new(&l / &c.x0, &l / &c.x1, &l / &c.x2)
        .expect("cascade clears to a square triple");
    Ok(t.reduced())
}

/// `z = (A + iC) / (B(1 + i)) = ((A+C)/2 + i(C−A)/2) / B`.
pub fn circle_from_triple(t: &SquareTriple) -> Result<CirclePoint, CascadeError> {
    let sum = &t.a + &t.c;
    if sum.is_odd() {
        return Err(CascadeError::ParityError(sum));
    }
    let two = BigInt::from(2);
    let pt = CirclePoint::new(&sum / &two, (&t.c - &t.a) / &two, t.b.clone())
        .expect("square triple maps onto the unit circle");
    Ok(pt)
}

/// `A = |p − q|`, `C = |p + q|`, `B = r`, ordered so `A ≥ C` and reduced.
pub fn triple_from_circle(pt: &CirclePoint) -> SquareTriple {
    SquareTriple::new(&pt.p - &pt.q, &pt.p + &pt.q, pt.r.clone())
        .expect("circle point maps to squares in arithmetic progression")
        .reduced()
}

/// Checks `p² + q² = r²` for raw components and then maps to a triple.
pub fn triple_from_circle_parts(
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
    r: impl Into<BigInt>,
) -> Result<SquareTriple, CascadeError> {
    Ok(triple_from_circle(&CirclePoint::new(p, q, r)?))
}

/// Complex multiplication of two circle points.
pub fn compose(a: &CirclePoint, b: &CirclePoint) -> CirclePoint {
    let p = &a.p * &b.p - &a.q * &b.q;
    let q = &a.p * &b.q + &b.p * &a.q;
    let r = &a.r * &b.r;
    CirclePoint::new(p, q, r).expect("product of circle points stays on the circle")
}

/// `x₂` completing the cascade started by `x₀ < x₁`, if it is an integer.
fn third_level(x0: u128, x1: u128) -> Option<u128> {
    // 1/x2² = 2/x1² − 1/x0² = (2x0² − x1²) / (x0² x1²)
    let (s0, s1) = (x0 * x0, x1 * x1);
    let den = (2 * s0).checked_sub(s1).filter(|d| *d > 0)?;
    let num = s0 * s1;
    if num % den != 0 {
        return None;
    }
    let sq = num / den;
    let root = sq.sqrt();
    (root * root == sq).then_some(root)
}

fn cascades_below(max: u128) -> impl Iterator<Item = [u128; 3]> {
    (1..=max).flat_map(move |x0| {
        (x0 + 1..=max).filter_map(move |x1| {
            third_level(x0, x1)
                .filter(|&x2| x2 > x1 && x2 <= max)
                .map(|x2| [x0, x1, x2])
        })
    })
}

/// All cascades with every level `≤ max_level`, sorted.
pub fn find_cascades(max_level: u32) -> Vec<CascadeLevels> {
    let mut out: Vec<_> = cascades_below(u128::from(max_level))
        .map(|[x0, x1, x2]| CascadeLevels::new(x0, x1, x2).expect("solved exactly"))
        .collect();
    out.sort();
    out
}

/// Result of an exhaustive search that found no four-level chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoFourTermReport {
    pub max_level: u32,
    /// Three-level cascades inspected as potential chain prefixes.
    pub cascades_checked: usize,
}

/// Searches every `x₀ < x₁ < x₂ < x₃ ≤ max_level` for three equal
/// consecutive steps. Finding one would contradict Fermat's theorem on four
/// squares in arithmetic progression, so it is reported as an error.
pub fn assert_no_four_term(max_level: u32) -> Result<NoFourTermReport, CascadeError> {
    let max = u128::from(max_level);
    let mut checked = 0;
    for [x0, x1, x2] in cascades_below(max) {
        checked += 1;
        if let Some(x3) = third_level(x1, x2).filter(|&x3| x3 > x2 && x3 <= max) {
            let chain = [x0, x1, x2, x3].map(|x| u64::try_from(x).expect("bounded by u32"));
            return Err(CascadeError::FourTermChain(chain));
        }
    }
    Ok(NoFourTermReport {
        max_level,
        cascades_checked: checked,
    })
}
