//! Exact scalar fields: the rationals and prime fields GF(p).
//!
//! Everything above this module is generic over [`Field`]. The two
//! implementations are [`Rational`] (arbitrary precision, characteristic 0)
//! and [`Fp`], a word-sized prime field selected at compile time.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::Error;

/// Arbitrary-precision rational numbers.
pub type Rational = BigRational;

/// Which ground field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField { p: u64 },
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField { p } => *p,
        }
    }
}

impl Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField { p } => write!(f, "GF({p})"),
        }
    }
}

/// An exact field. Arithmetic never rounds; division by zero panics, so
/// callers go through [`Field::inverse`] whenever a pivot might vanish.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn descriptor() -> FieldDescriptor;

    fn characteristic() -> u64 {
        Self::descriptor().characteristic()
    }

    fn from_i64(v: i64) -> Self;

    fn inverse(&self) -> Option<Self>;

    /// Parses the textual scalar syntax (`"-3/7"`, `"4"`).
    fn parse_scalar(s: &str) -> Result<Self, Error>;

    /// All elements in a fixed order, for finite fields.
    fn elements() -> Option<Vec<Self>>;

    /// Number of elements, `None` for infinite fields.
    fn order() -> Option<u64>;

    /// A random element. Over the rationals this is a small integer.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Roots in this field of the polynomial with coefficients `coeffs`
    /// (constant term first). `None` if the search was abandoned.
    fn roots_of(coeffs: &[Self]) -> Option<Vec<Self>>;

    /// Whether `n!` is invertible, i.e. degree-`n` identities may be polarized.
    fn factorial_invertible(n: u64) -> bool {
        let c = Self::characteristic();
        c == 0 || c > n
    }
}

impl Field for Rational {
    fn descriptor() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_scalar(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid rational scalar {s:?}"));
        match t.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(BigRational::new(n, d))
            }
            None => {
                let n = BigInt::from_str(t).map_err(|_| bad())?;
                Ok(BigRational::from_integer(n))
            }
        }
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn order() -> Option<u64> {
        None
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-3..=3))
    }

    fn roots_of(coeffs: &[Self]) -> Option<Vec<Self>> {
        rational_roots(coeffs)
    }
}

// Integers above this are not factored when hunting rational roots.
const ROOT_SEARCH_LIMIT: u64 = 1 << 40;

fn rational_roots(coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    // strip the root 0
    let lead_zeros = c.iter().take_while(|x| x.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(Rational::zero());
        c.drain(..lead_zeros);
    }
    if c.len() <= 1 {
        return Some(roots);
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * &lcm).to_integer()).collect();
    let a0 = ints[0].abs().to_u64().filter(|&v| v <= ROOT_SEARCH_LIMIT)?;
    let an = ints[ints.len() - 1]
        .abs()
        .to_u64()
        .filter(|&v| v <= ROOT_SEARCH_LIMIT)?;
    let eval = |r: &Rational| c.iter().rev().fold(Rational::zero(), |acc, k| acc * r + k);
    let mut found: Vec<Rational> = Vec::new();
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(p) * sign, BigInt::from(q));
                if !found.contains(&cand) && eval(&cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    found.sort();
    roots.extend(found);
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

const fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field GF(P). Residues are kept in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const MODULUS_IS_PRIME: () = assert!(
        is_prime_u64(P) && P < (1 << 32),
        "modulus must be a word-sized prime"
    );

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::MODULUS_IS_PRIME;
        Fp(v % P)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in GF(p)")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Self::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn descriptor() -> FieldDescriptor {
        FieldDescriptor::PrimeField { p: P }
    }

    fn from_i64(v: i64) -> Self {
        Self::new(v.rem_euclid(P as i64) as u64)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat
            Some(self.pow(P - 2))
        }
    }

    fn parse_scalar(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let parse_int = |x: &str| -> Result<Self, Error> {
            let n = BigInt::from_str(x.trim())
                .map_err(|_| Error::Parse(format!("invalid residue {s:?}")))?;
            let r = n.mod_floor(&BigInt::from(P));
            Ok(Self::new(r.to_u64().expect("reduced residue fits in u64")))
        };
        match t.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                let d = d.inverse().ok_or_else(|| {
                    Error::Parse(format!("denominator of {s:?} vanishes mod {P}"))
                })?;
                Ok(parse_int(n)? * d)
            }
            None => parse_int(t),
        }
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Self::new).collect())
    }

    fn order() -> Option<u64> {
        Some(P)
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::new(rng.gen_range(0..P))
    }

    fn roots_of(coeffs: &[Self]) -> Option<Vec<Self>> {
        if P > 1 << 16 {
            return None;
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Some(Vec::new());
        }
        Some(
            (0..P)
                .map(Self::new)
                .filter(|x| {
                    coeffs
                        .iter()
                        .rev()
                        .fold(Self::zero(), |acc, &k| acc * *x + k)
                        .is_zero()
                })
                .collect(),
        )
    }
}
