//! The negative Pell equation `y^2 - D x^2 = -1`.
//!
//! Solvability is decided by the parity of the period of the continued
//! fraction of `sqrt(D)`: the equation has a solution iff the period is
//! odd, and then the convergent at the end of the first period is the
//! fundamental solution. Further solutions are the odd powers of
//! `y0 + x0 sqrt(D)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::PellError;

type Result<T> = std::result::Result<T, PellError>;

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

pub fn is_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

/// Periodic continued fraction `sqrt(D) = [a0; period, period, ...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub d: u64,
    pub a0: u64,
    pub period: Vec<u64>,
}

impl ContinuedFraction {
    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// Convergents `p_k / q_k` for `k = 0..count`, reading the period cyclically.
    pub fn convergents(&self, count: usize) -> Vec<(BigUint, BigUint)> {
        let mut out = Vec::with_capacity(count);
        let (mut p_prev, mut q_prev) = (BigUint::one(), BigUint::zero());
        let (mut p, mut q) = (BigUint::from(self.a0), BigUint::one());
        for k in 0..count {
            if k > 0 {
                let a = BigUint::from(self.period[(k - 1) % self.period.len()]);
                let p_next = &a * &p + &p_prev;
                let q_next = &a * &q + &q_prev;
                p_prev = std::mem::replace(&mut p, p_next);
                q_prev = std::mem::replace(&mut q, q_next);
            }
            out.push((p.clone(), q.clone()));
        }
        out
    }
}

fn check_nonsquare(d: u64) -> Result<()> {
    if d < 2 {
        return Err(PellError::OutOfRange(d));
    }
    if is_square(d) {
        return Err(PellError::PerfectSquare(d));
    }
    Ok(())
}

/// Continued fraction of `sqrt(D)` via the `(m, q, a)` recurrence.
pub fn cf_expansion(d: u64) -> Result<ContinuedFraction> {
    check_nonsquare(d)?;
    let a0 = isqrt(d);
    let (mut m, mut q, mut a) = (0u128, 1u128, a0 as u128);
    let d128 = d as u128;
    let mut period = Vec::new();
    loop {
        m = a * q - m;
        q = (d128 - m * m) / q;
        a = (a0 as u128 + m) / q;
        period.push(a as u64);
        // q returns to 1 exactly at the end of each period
        if q == 1 {
            break;
        }
    }
    Ok(ContinuedFraction { d, a0, period })
}

/// A positive solution of `y^2 - D x^2 = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellSolution {
    d: u64,
    y: BigUint,
    x: BigUint,
}

impl PellSolution {
    /// Returns `None` unless `y^2 - D x^2 = -1` holds exactly.
    pub fn new(d: u64, y: BigUint, x: BigUint) -> Option<Self> {
        let lhs = &y * &y + BigUint::one();
        let rhs = BigUint::from(d) * &x * &x;
        (lhs == rhs).then_some(PellSolution { d, y, x })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn y(&self) -> &BigUint {
        &self.y
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    /// The associated solution `(y^2 + D x^2, 2xy)` of `Y^2 - D X^2 = +1`.
    pub fn to_positive_unit(&self) -> (BigUint, BigUint) {
        let d = BigUint::from(self.d);
        (&self.y * &self.y + &d * &self.x * &self.x, BigUint::from(2u8) * &self.x * &self.y)
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.y, self.x)
    }
}

/// Minimal positive solution, or `None` when the period of `sqrt(D)` is even.
pub fn fundamental_negative(d: u64) -> Result<Option<PellSolution>> {
    let cf = cf_expansion(d)?;
    let len = cf.period_len();
    if len % 2 == 0 {
        return Ok(None);
    }
    let (p, q) = cf.convergents(len).pop().expect("period is nonempty");
    let sol = PellSolution::new(d, p, q).expect("odd-period convergent solves the -1 equation");
    Ok(Some(sol))
}

/// The `k` smallest solutions, as the odd powers of the fundamental one.
pub fn enumerate_negative(d: u64, k: usize) -> Result<Vec<PellSolution>> {
    if k == 0 {
        return Err(PellError::ZeroCount);
    }
    let fund = fundamental_negative(d)?.ok_or(PellError::Unsolvable(d))?;
    let db = BigUint::from(d);
    // epsilon^2 = (y0 + x0 sqrt D)^2 = u + v sqrt D
    let u = fund.y() * fund.y() + &db * fund.x() * fund.x();
    let v = BigUint::from(2u8) * fund.x() * fund.y();
    let mut out = Vec::with_capacity(k);
    let (mut y, mut x) = (fund.y.clone(), fund.x.clone());
    for _ in 0..k {
        out.push(PellSolution::new(d, y.clone(), x.clone()).expect("odd power of a -1 unit"));
        let y_next = &y * &u + &db * &x * &v;
        let x_next = &y * &v + &x * &u;
        y = y_next;
        x = x_next;
    }
    Ok(out)
}

/// Whether `y^2 - D x^2 = -1` has an integer solution.
///
/// `D = 1` is solvable by `(0, 1)`; other perfect squares are not.
pub fn is_solvable_negative(d: u64) -> Result<bool> {
    match d {
        0 => Err(PellError::OutOfRange(0)),
        1 => Ok(true),
        _ if is_square(d) => Ok(false),
        _ => Ok(cf_expansion(d)?.period_len() % 2 == 1),
    }
}

/// For a prime `p`: solvable iff `p = 2` or `p = 1 (mod 4)`.
pub fn prime_criterion(p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(PellError::NotPrime(p));
    }
    Ok(p == 2 || p % 4 == 1)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `a + b sqrt(5)` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct QuadRat5 {
    a: BigRational,
    b: BigRational,
}

impl QuadRat5 {
    fn new(a: BigRational, b: BigRational) -> Self {
        QuadRat5 { a, b }
    }

    fn int(a: i64, b: i64) -> Self {
        QuadRat5::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    fn mul(&self, o: &QuadRat5) -> QuadRat5 {
        let five = BigRational::from_integer(5.into());
        QuadRat5::new(
            &self.a * &o.a + five * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }

    fn pow(&self, e: u32) -> QuadRat5 {
        (0..e).fold(QuadRat5::int(1, 0), |acc, _| acc.mul(self))
    }

    fn conj(&self) -> QuadRat5 {
        QuadRat5::new(self.a.clone(), -&self.b)
    }
}

/// Evaluates the closed forms
///
/// ```text
/// 2y = (1 + 2 sqrt5)(2 + sqrt5)^(2n) + (1 - 2 sqrt5)(2 - sqrt5)^(2n)
/// 2x = (2 + 1/sqrt5)(2 + sqrt5)^(2n) + (2 - 1/sqrt5)(2 - sqrt5)^(2n)
/// ```
///
/// exactly, returning `(y, x)`. These expressions are sometimes quoted as
/// parametrizing the solutions of `y^2 - 5x^2 = -1`; they do not (at
/// `n = 1` they give `(49, 22)` with `49^2 - 5*22^2 = -19`). The correct
/// sequence is [`enumerate_negative`]`(5, k)`. Kept so the discrepancy can
/// be checked mechanically.
pub fn quoted_d5_closed_form(n: u32) -> (BigRational, BigRational) {
    let unit_pow = QuadRat5::int(2, 1).pow(2 * n);
    let y_coef = QuadRat5::int(1, 2);
    // 1/sqrt5 = sqrt5 / 5
    let x_coef = QuadRat5::new(
        BigRational::from_integer(2.into()),
        BigRational::new(BigInt::one(), 5.into()),
    );
    let half = BigRational::new(BigInt::one(), 2.into());
    let trace = |c: &QuadRat5| {
        let t = c.mul(&unit_pow);
        let s = c.conj().mul(&unit_pow.conj());
        // irrational parts cancel
        debug_assert_eq!(&t.b + &s.b, BigRational::zero());
        (&t.a + &s.a) * &half
    };
    (trace(&y_coef), trace(&x_coef))
}

/// `y^2 - D x^2` over the rationals.
pub fn norm_value(d: u64, y: &BigRational, x: &BigRational) -> BigRational {
    y * y - BigRational::from_integer(d.into()) * x * x
}
