//! The engine's only scalar type: arbitrary-precision rationals, plus the
//! `"p/q"` string format used in every JSON payload and the exact rational
//! w-th root used by moduli-orbit arithmetic.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator (guaranteed by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse the interchange format `"p/q"` (or `"p"` when the denominator
/// is one). Whitespace around the string is tolerated; a zero denominator
/// is an error.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational {s:?}, expected \"p\" or \"p/q\""));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| mk_err())?;
    let q: BigInt = den.parse().map_err(|_| mk_err())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// Format as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Trial-division bound: every prime factor up to this is found directly.
const TRIAL_BOUND: u64 = 1 << 20;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for `u64` (the listed witnesses are a proven
/// complete set below 3.3·10^24).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of a positive 64-bit integer by trial division up
/// to 2^20, with a deterministic primality certificate for any remaining
/// cofactor. A composite cofactor with no small factor raises
/// [`Error::FactorizationOverflow`] rather than guessing.
pub fn factorize_u64(mut n: u64) -> Result<BTreeMap<u64, u32>> {
    if n == 0 {
        return Err(Error::InvalidInput("cannot factorize zero".into()));
    }
    let mut out = BTreeMap::new();
    let mut p = 2u64;
    while p <= TRIAL_BOUND && p * p <= n {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        if p * p > n || is_prime_u64(n) {
            *out.entry(n).or_insert(0) += 1;
        } else {
            return Err(Error::FactorizationOverflow(format!(
                "cofactor {n} is composite with no prime factor below {TRIAL_BOUND}"
            )));
        }
    }
    Ok(out)
}

fn to_u64(v: &BigInt, what: &str) -> Result<u64> {
    v.to_u64().ok_or_else(|| {
        Error::FactorizationOverflow(format!("{what} {v} does not fit in 64 bits"))
    })
}

/// All rational solutions of `alpha^w = q`, computed by prime-factorizing
/// numerator and denominator and checking divisibility of every exponent
/// by `w`. The result has zero, one, or two elements; `q = 0` gives `{0}`.
pub fn rational_roots(q: &Rational, w: u32) -> Result<BTreeSet<Rational>> {
    if w == 0 {
        return Err(Error::InvalidInput("root exponent must be >= 1".into()));
    }
    let mut out = BTreeSet::new();
    if q.is_zero() {
        out.insert(Rational::zero());
        return Ok(out);
    }
    if w == 1 {
        out.insert(q.clone());
        return Ok(out);
    }
    if q.is_negative() && w % 2 == 0 {
        return Ok(out);
    }
    let num = factorize_u64(to_u64(&q.numer().abs(), "numerator")?)?;
    let den = factorize_u64(to_u64(q.denom(), "denominator")?)?;
    let mut root_num = BigInt::one();
    let mut root_den = BigInt::one();
    for (factored, acc) in [(num, &mut root_num), (den, &mut root_den)] {
        for (p, e) in factored {
            if e % w != 0 {
                return Ok(out);
            }
            *acc *= BigInt::from(p).pow(e / w);
        }
    }
    let root = Rational::new(root_num, root_den);
    if w % 2 == 1 {
        out.insert(if q.is_negative() { -root } else { root });
    } else {
        out.insert(-root.clone());
        out.insert(root);
    }
    Ok(out)
}
