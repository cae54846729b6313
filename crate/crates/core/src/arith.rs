//! Rational-integer foundations: primality, Jacobi symbols, modular square
//! roots, quartic residue symbols and prime enumeration.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A value in {+1, -1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    /// `Plus` for `true`, `Minus` for `false`.
    pub fn from_bool(plus: bool) -> Self {
        if plus {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<i32> for Sign {
    type Error = Error;

    fn try_from(v: i32) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            0 => Err(Error::NotCoprime),
            _ => Err(Error::Internal(format!("{v} is not a sign"))),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bool(self == rhs)
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i32(self.value())
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These twelve bases are a proven witness set below 3.3e24.
    'witness: for &a in &SMALL {
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

/// Jacobi symbol `(a/n)` for odd positive `n`; 0 when `gcd(a, n) > 1`.
pub fn jacobi(a: i64, n: i64) -> Result<i32> {
    if n <= 0 || n % 2 == 0 {
        return Err(Error::BadModulus(n));
    }
    let n = n as u64;
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    Ok(if n == 1 { t } else { 0 })
}

/// Legendre symbol as a [`Sign`]; errors when `p | a`.
pub fn legendre_sign(a: i64, p: u64) -> Result<Sign> {
    Sign::try_from(jacobi(a, p as i64)?)
}

/// Modular inverse of `a` modulo `m` (`gcd(a, m) = 1` required).
pub fn inv_mod(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m))
}

/// Square root of `a` modulo the odd prime `p` (Tonelli-Shanks).
///
/// Of the two roots the smaller one is returned, so the result lies in
/// `(0, (p-1)/2]`.
pub fn sqrt_mod(a: i64, p: u64) -> Result<u64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if jacobi(a, p as i64)? != 1 {
        return Err(Error::NonResidue { a, p });
    }
    let a = a.rem_euclid(p as i64) as u64;
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while jacobi(z as i64, p as i64)? != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Ok(r.min(p - r))
}

/// Quartic symbol `(p/q)_4 = p^((q-1)/4) mod q`, defined when `q = 1 mod 4`
/// and `(p/q) = +1`.
pub fn quartic_symbol(p: u64, q: u64) -> Result<Sign> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q % 4 != 1 {
        return Err(Error::SymbolUndefined(format!("({p}/{q})_4 needs q = 1 mod 4")));
    }
    if p % q == 0 || jacobi(p as i64, q as i64)? != 1 {
        return Err(Error::SymbolUndefined(format!("({p}/{q}) != +1")));
    }
    match pow_mod(p, (q - 1) / 4, q) {
        1 => Ok(Sign::Plus),
        v if v == q - 1 => Ok(Sign::Minus),
        v => Err(Error::Internal(format!("{p}^(({q}-1)/4) = {v} mod {q}"))),
    }
}

/// Parameters for [`primes_matching`]: primes in `[min, max]` that are
/// `residue` modulo `modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeFilter {
    pub min: u64,
    pub max: u64,
    pub residue: u64,
    pub modulus: u64,
}

impl PrimeFilter {
    pub fn new(min: u64, max: u64, residue: u64, modulus: u64) -> Result<Self> {
        if modulus != 4 && modulus != 8 {
            return Err(Error::Precondition(format!("modulus {modulus} not in {{4, 8}}")));
        }
        if residue % 2 == 0 || residue >= modulus {
            return Err(Error::Precondition(format!(
                "residue {residue} must be odd and below {modulus}"
            )));
        }
        Ok(Self { min, max, residue, modulus })
    }
}

pub fn primes_matching(filter: &PrimeFilter) -> Vec<u64> {
    (filter.min..=filter.max)
        .filter(|n| n % filter.modulus == filter.residue && is_prime(*n))
        .collect()
}

pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
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

const SIEVE_LIMIT: usize = 1 << 21;

fn smallest_factors() -> &'static [u32] {
    static SPF: OnceLock<Vec<u32>> = OnceLock::new();
    SPF.get_or_init(|| {
        let mut spf = vec![0u32; SIEVE_LIMIT];
        for i in 2..SIEVE_LIMIT {
            if spf[i] == 0 {
                let mut j = i;
                while j < SIEVE_LIMIT {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        spf
    })
}

/// Prime factorization `[(prime, exponent)]` in ascending order.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.last_mut() {
        Some((q, e)) if *q == p => *e += 1,
        _ => out.push((p, 1)),
    };
    if n < 2 {
        return out;
    }
    let mut d = 2u64;
    while n as usize >= SIEVE_LIMIT && d * d <= n {
        while n % d == 0 {
            push(d, &mut out);
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if (n as usize) < SIEVE_LIMIT {
        let spf = smallest_factors();
        while n > 1 {
            let p = spf[n as usize] as u64;
            push(p, &mut out);
            n /= p;
        }
    } else if n > 1 {
        push(n, &mut out);
    }
    out
}

/// All positive divisors, unsorted.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factor(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn is_qr_brute(a: i64, p: i64) -> bool {
        (1..p).any(|x| (x * x - a).rem_euclid(p) == 0)
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(37));
        assert!(!is_prime(21));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751)); // strong pseudoprime to 2, 3, 5, 7
        let brute: Vec<u64> = (0..2000u64)
            .filter(|&n| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        let fast: Vec<u64> = (0..2000u64).filter(|&n| is_prime(n)).collect();
        assert_eq!(brute, fast);
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(-5, 21).unwrap(), 1);
        assert_eq!(jacobi(10, 21).unwrap(), -1);
        assert_eq!(jacobi(1, 99).unwrap(), 1);
        assert_eq!(jacobi(6, 21).unwrap(), 0);
        assert_eq!(jacobi(3, 4), Err(Error::BadModulus(4)));
        assert_eq!(jacobi(3, -5), Err(Error::BadModulus(-5)));
        // brute oracle for (10/21): 10 mod 3 = 1 is a square, 10 mod 7 = 3 is not
        assert!(is_qr_brute(10, 3) && !is_qr_brute(10, 7));
    }

    #[test]
    fn jacobi_matches_euler_criterion_on_primes() {
        for p in (3..500i64).filter(|&p| is_prime(p as u64)) {
            for a in -50..50i64 {
                let expect = if a.rem_euclid(p) == 0 {
                    0
                } else if is_qr_brute(a, p) {
                    1
                } else {
                    -1
                };
                assert_eq!(jacobi(a, p).unwrap(), expect, "({a}/{p})");
            }
        }
    }

    #[test]
    fn quadratic_reciprocity_for_odd_coprime_pairs() {
        for m in (3..=500i64).step_by(2) {
            for n in (3..=500i64).step_by(2) {
                if num_integer::Integer::gcd(&m, &n) != 1 {
                    continue;
                }
                let lhs = jacobi(m, n).unwrap() * jacobi(n, m).unwrap();
                let rhs = if (m - 1) / 2 * ((n - 1) / 2) % 2 == 0 { 1 } else { -1 };
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn jacobi_multiplicative() {
        for n in (1..=500i64).step_by(2) {
            for a in (-200..=200i64).step_by(7) {
                for b in (-200..=200i64).step_by(11) {
                    assert_eq!(
                        jacobi(a * b, n).unwrap(),
                        jacobi(a, n).unwrap() * jacobi(b, n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn sqrt_mod_examples() {
        assert_eq!(sqrt_mod(13, 17).unwrap(), 8);
        assert_eq!(sqrt_mod(4, 17).unwrap(), 2);
        assert_eq!(sqrt_mod(2, 89).unwrap(), 25);
        assert_eq!(sqrt_mod(3, 17), Err(Error::NonResidue { a: 3, p: 17 }));
        assert_eq!(sqrt_mod(4, 21), Err(Error::NotPrime(21)));
    }

    #[test]
    fn sqrt_mod_is_canonical() {
        for p in (3..400u64).filter(|&p| is_prime(p)) {
            for a in 1..p as i64 {
                if jacobi(a, p as i64).unwrap() == 1 {
                    let s = sqrt_mod(a, p).unwrap();
                    assert!(s > 0 && s <= (p - 1) / 2);
                    assert_eq!(mul_mod(s, s, p), a as u64);
                }
            }
        }
    }

    #[test]
    fn quartic_examples() {
        assert_eq!(pow_mod(17, 22, 89), 88);
        assert_eq!(quartic_symbol(17, 89).unwrap(), Sign::Minus);
        assert_eq!(quartic_symbol(89, 17).unwrap(), Sign::Plus);
        assert_eq!(quartic_symbol(5, 29).unwrap(), Sign::Minus);
        assert!(matches!(quartic_symbol(5, 13), Err(Error::SymbolUndefined(_))));
        assert!(matches!(quartic_symbol(5, 7), Err(Error::SymbolUndefined(_))));
    }

    #[test]
    fn quartic_symbol_detects_fourth_powers() {
        for q in (5..200u64).filter(|&q| q % 4 == 1 && is_prime(q)) {
            let fourth: Vec<u64> = (1..q).map(|x| pow_mod(x, 4, q)).collect();
            for p in 1..q {
                if jacobi(p as i64, q as i64).unwrap() == 1 {
                    let s = quartic_symbol(p, q).unwrap();
                    assert_eq!(s.is_plus(), fourth.contains(&p), "p={p} q={q}");
                    assert_eq!(s * s, Sign::Plus);
                }
            }
        }
    }

    #[test]
    fn primes_matching_examples() {
        let f = |a, b, r, m| primes_matching(&PrimeFilter::new(a, b, r, m).unwrap());
        assert_eq!(f(5, 30, 1, 4), vec![5, 13, 17, 29]);
        assert_eq!(f(3, 12, 3, 4), vec![3, 7, 11]);
        assert_eq!(f(10, 16, 1, 8), Vec::<u64>::new());
        assert!(PrimeFilter::new(1, 10, 1, 6).is_err());
        assert!(PrimeFilter::new(1, 10, 2, 4).is_err());
    }

    #[test]
    fn factor_and_divisors() {
        assert_eq!(factor(777), vec![(3, 1), (7, 1), (37, 1)]);
        assert_eq!(factor(1 << 40), vec![(2, 40)]);
        assert_eq!(factor(4_294_967_311 * 3), vec![(3, 1), (4_294_967_311, 1)]);
        let mut d = divisors(36);
        d.sort();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(is_squarefree(-21) && !is_squarefree(18) && !is_squarefree(0));
    }

    proptest! {
        #[test]
        fn sign_group_law(a: bool, b: bool) {
            let (x, y) = (Sign::from_bool(a), Sign::from_bool(b));
            prop_assert_eq!((x * y).value(), x.value() * y.value());
        }

        #[test]
        fn isqrt_floor(n: u64) {
            let r = isqrt(n) as u128;
            prop_assert!(r * r <= n as u128 && (r + 1) * (r + 1) > n as u128);
        }
    }
}
