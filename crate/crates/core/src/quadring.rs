//! Exact arithmetic in quadratic rings of integers.
//!
//! Every element is stored as `(x + y*sqrt(m))/2` with integer `x`, `y`.
//! When `m = 1 mod 4` the coordinates share parity; otherwise both are even,
//! so the same type covers the maximal orders and `Z[sqrt(2)]`,
//! `Z[sqrt(-2)]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{is_squarefree, isqrt, Sign};
use crate::error::{Error, Result};

/// The quadratic field `Q(sqrt(m))` for squarefree `m`, together with its
/// ring of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadField {
    m: i64,
    disc: i64,
}

impl QuadField {
    pub fn new(m: i64) -> Result<Self> {
        if m == 0 || m == 1 {
            return Err(Error::InvalidField(m));
        }
        if !is_squarefree(m) {
            return Err(Error::NotSquarefree(m));
        }
        let disc = if m.rem_euclid(4) == 1 { m } else { 4 * m };
        Ok(Self { m, disc })
    }

    /// Field whose discriminant is `disc`.
    pub fn from_disc(disc: i64) -> Result<Self> {
        let m = if disc.rem_euclid(4) == 1 {
            disc
        } else if disc % 4 == 0 && matches!((disc / 4).rem_euclid(4), 2 | 3) {
            disc / 4
        } else {
            return Err(Error::NotFundamental(disc));
        };
        let field = Self::new(m).map_err(|_| Error::NotFundamental(disc))?;
        Ok(field)
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn is_real(&self) -> bool {
        self.m > 0
    }

    /// 2 when the ring contains half-integers, 1 otherwise.
    pub fn ring_denominator(&self) -> u32 {
        if self.disc == self.m {
            2
        } else {
            1
        }
    }

    /// `(x + y*sqrt(m))/2`, checked against the ring's parity rule.
    pub fn elem(&self, x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<QuadElem> {
        let (x, y) = (x.into(), y.into());
        let ok = if self.disc == self.m {
            x.is_even() == y.is_even()
        } else {
            x.is_even() && y.is_even()
        };
        if !ok {
            return Err(Error::NotIntegral {
                m: self.m,
                x: x.to_string(),
                y: y.to_string(),
            });
        }
        Ok(QuadElem { field: *self, x, y })
    }

    /// `a + b*sqrt(m)` with integer `a`, `b`.
    pub fn int_elem(&self, a: impl Into<BigInt>, b: impl Into<BigInt>) -> QuadElem {
        QuadElem {
            field: *self,
            x: a.into() * 2,
            y: b.into() * 2,
        }
    }

    pub fn integer(&self, n: impl Into<BigInt>) -> QuadElem {
        self.int_elem(n, 0)
    }

    pub fn one(&self) -> QuadElem {
        self.integer(1)
    }

    /// The second basis element `omega` of the ring of integers:
    /// `(1 + sqrt(m))/2` or `sqrt(m)`.
    pub fn omega(&self) -> QuadElem {
        if self.disc == self.m {
            QuadElem { field: *self, x: BigInt::one(), y: BigInt::one() }
        } else {
            self.int_elem(0, 1)
        }
    }

    /// `(b + sqrt(disc))/2`.
    pub fn half_sqrt_disc(&self, b: &BigInt) -> QuadElem {
        let y = if self.disc == self.m { 1 } else { 2 };
        QuadElem { field: *self, x: b.clone(), y: BigInt::from(y) }
    }

    /// Element with coordinates `u + v*omega`.
    pub fn from_basis(&self, u: &BigInt, v: &BigInt) -> QuadElem {
        if self.disc == self.m {
            QuadElem { field: *self, x: u * 2 + v, y: v.clone() }
        } else {
            QuadElem { field: *self, x: u * 2, y: v * 2 }
        }
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.m)
    }
}

/// An integer `(x + y*sqrt(m))/2` of a quadratic field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    field: QuadField,
    x: BigInt,
    y: BigInt,
}

impl QuadElem {
    pub fn field(&self) -> QuadField {
        self.field
    }

    /// Doubled rational coordinate.
    pub fn x(&self) -> &BigInt {
        &self.x
    }

    /// Doubled coefficient of `sqrt(m)`.
    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn conj(&self) -> QuadElem {
        QuadElem { field: self.field, x: self.x.clone(), y: -&self.y }
    }

    pub fn norm(&self) -> BigInt {
        (&self.x * &self.x - BigInt::from(self.field.m) * &self.y * &self.y) / 4
    }

    pub fn trace(&self) -> BigInt {
        self.x.clone()
    }

    /// Coordinates `(u, v)` with `self = u + v*omega`.
    pub fn to_basis(&self) -> (BigInt, BigInt) {
        if self.field.disc == self.field.m {
            ((&self.x - &self.y) / 2, self.y.clone())
        } else {
            (&self.x / 2, &self.y / 2)
        }
    }

    fn check_same(&self, other: &QuadElem) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.m, other.field.m));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QuadElem) -> Result<QuadElem> {
        self.check_same(other)?;
        Ok(QuadElem { field: self.field, x: &self.x + &other.x, y: &self.y + &other.y })
    }

    pub fn checked_sub(&self, other: &QuadElem) -> Result<QuadElem> {
        self.check_same(other)?;
        Ok(QuadElem { field: self.field, x: &self.x - &other.x, y: &self.y - &other.y })
    }

    pub fn checked_mul(&self, other: &QuadElem) -> Result<QuadElem> {
        self.check_same(other)?;
        let m = BigInt::from(self.field.m);
        let x = (&self.x * &other.x + m * &self.y * &other.y) / 2;
        let y = (&self.x * &other.y + &other.x * &self.y) / 2;
        Ok(QuadElem { field: self.field, x, y })
    }

    pub fn pow(&self, mut e: u32) -> QuadElem {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplies by a rational integer.
    pub fn scale(&self, k: &BigInt) -> QuadElem {
        QuadElem { field: self.field, x: &self.x * k, y: &self.y * k }
    }

    /// Exact division by a rational integer, if the quotient is integral.
    pub fn div_exact(&self, k: &BigInt) -> Option<QuadElem> {
        let (u, v) = self.to_basis();
        if k.is_zero() || !u.is_multiple_of(k) || !v.is_multiple_of(k) {
            return None;
        }
        Some(self.field.from_basis(&(u / k), &(v / k)))
    }

    /// Largest rational integer dividing the element in the ring.
    pub fn content(&self) -> BigInt {
        let (u, v) = self.to_basis();
        u.gcd(&v)
    }

    /// Sign of the real embedding with `sqrt(m) > 0`.
    pub fn real_sign(&self) -> Result<Ordering> {
        if !self.field.is_real() {
            return Err(Error::ImaginaryField(self.field.m));
        }
        Ok(embedding_sign(&self.x, &self.y, self.field.m))
    }

    pub fn is_totally_positive(&self) -> Result<bool> {
        if !self.field.is_real() {
            return Err(Error::ImaginaryField(self.field.m));
        }
        Ok(self.x.is_positive() && self.norm().is_positive())
    }

    /// `|self| >= |conj(self)|` in the real embedding.
    pub(crate) fn dominates_conjugate(&self) -> bool {
        !(self.x.is_positive() && self.y.is_negative() || self.x.is_negative() && self.y.is_positive())
    }

    /// Floating-point value of the real embedding, for diagnostics and
    /// analytic oracles only.
    pub fn approx(&self) -> f64 {
        let x = self.x.to_f64().unwrap_or(f64::NAN);
        let y = self.y.to_f64().unwrap_or(f64::NAN);
        (x + y * (self.field.m as f64).sqrt()) / 2.0
    }
}

/// Sign of `x + y*sqrt(m)` for `m > 0`.
fn embedding_sign(x: &BigInt, y: &BigInt, m: i64) -> Ordering {
    let (sx, sy) = (x.sign(), y.sign());
    use num_bigint::Sign as S;
    match (sx, sy) {
        (S::NoSign, S::NoSign) => Ordering::Equal,
        (S::Plus, S::Plus | S::NoSign) | (S::NoSign, S::Plus) => Ordering::Greater,
        (S::Minus, S::Minus | S::NoSign) | (S::NoSign, S::Minus) => Ordering::Less,
        _ => {
            // opposite signs: compare x^2 with m y^2
            let lhs = x * x;
            let rhs = BigInt::from(m) * y * y;
            let x_wins = lhs > rhs;
            match (sx == S::Plus, x_wins) {
                (true, true) | (false, false) => Ordering::Greater,
                _ => Ordering::Less,
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&QuadElem> for &QuadElem {
            type Output = QuadElem;

            /// Panics if the operands live in different fields.
            fn $method(self, rhs: &QuadElem) -> QuadElem {
                self.$checked(rhs).expect("quadratic field mismatch")
            }
        }

        impl $tr<QuadElem> for QuadElem {
            type Output = QuadElem;

            fn $method(self, rhs: QuadElem) -> QuadElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &QuadElem {
    type Output = QuadElem;

    fn neg(self) -> QuadElem {
        QuadElem { field: self.field, x: -&self.x, y: -&self.y }
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;

    fn neg(self) -> QuadElem {
        -&self
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, half) = if self.x.is_even() && self.y.is_even() {
            (&self.x / 2, &self.y / 2, false)
        } else {
            (self.x.clone(), self.y.clone(), true)
        };
        let root = format!("sqrt({})", self.field.m);
        let body = match (x.is_zero(), y.is_zero()) {
            (_, true) => x.to_string(),
            (true, false) => coefficient(&y, &root),
            (false, false) => {
                let op = if y.is_negative() { '-' } else { '+' };
                format!("{x} {op} {}", coefficient(&y.abs(), &root))
            }
        };
        if half {
            write!(f, "({body})/2")
        } else {
            f.write_str(&body)
        }
    }
}

fn coefficient(y: &BigInt, root: &str) -> String {
    if y.is_one() {
        root.to_string()
    } else if *y == -BigInt::one() {
        format!("-{root}")
    } else {
        format!("{y}*{root}")
    }
}

/// Fundamental unit data of a real quadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitInfo {
    pub epsilon: QuadElem,
    pub norm: Sign,
    pub cf_period: u64,
}

impl UnitInfo {
    pub fn inverse(&self) -> QuadElem {
        match self.norm {
            Sign::Plus => self.epsilon.conj(),
            Sign::Minus => -self.epsilon.conj(),
        }
    }
}

/// Fundamental unit `epsilon > 1` of the ring of integers of `Q(sqrt(m))`,
/// from the continued fraction of `(1 + sqrt(m))/2` (when `m = 1 mod 4`) or
/// of `sqrt(m)`.
pub fn fundamental_unit(m: i64) -> Result<UnitInfo> {
    if m <= 1 {
        return Err(Error::InvalidField(m));
    }
    let field = QuadField::new(m)?;
    let d = m;
    let root = isqrt(d as u64) as i64;
    let (p0, q0) = if field.disc == m { (1i64, 2i64) } else { (0, 1) };
    // (P + sqrt(m))/Q expansion, Q | m - P^2 throughout
    let (mut p, mut q) = (p0, q0);
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut period = 0u64;
    loop {
        let a = (p + root).div_euclid(q);
        let a_big = BigInt::from(a);
        let h_next = &a_big * &h + &h_prev;
        let k_next = &a_big * &k + &k_prev;
        (h_prev, h) = (h, h_next);
        (k_prev, k) = (k, k_next);
        p = a * q - p;
        q = (d - p * p) / q;
        period += 1;
        if q == q0 {
            break;
        }
    }
    let epsilon = if field.disc == m {
        // h/k approximates (1 + sqrt m)/2, so h - k*conj(omega) is the unit
        field.elem(&h * 2 - &k, k.clone())?
    } else {
        field.int_elem(h.clone(), k.clone())
    };
    let norm = match epsilon.norm().to_i32() {
        Some(1) => Sign::Plus,
        Some(-1) => Sign::Minus,
        _ => return Err(Error::Internal(format!("unit candidate {epsilon} has norm != +-1"))),
    };
    Ok(UnitInfo { epsilon, norm, cf_period: period })
}

/// Modulus for [`is_square_mod`]: the ideal `(4)` or `(8)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareLevel {
    Four,
    Eight,
}

impl SquareLevel {
    fn modulus(self) -> i64 {
        match self {
            SquareLevel::Four => 4,
            SquareLevel::Eight => 8,
        }
    }
}

/// Decides whether `a = xi^2` is solvable modulo `level` by enumerating the
/// 16 or 64 residues of the quotient ring, returning a witness `xi`.
pub fn is_square_mod(a: &QuadElem, level: SquareLevel) -> Result<Option<QuadElem>> {
    if a.norm().is_even() {
        return Err(Error::EvenNorm);
    }
    Ok(square_root_mod_n(a, level.modulus()))
}

pub(crate) fn square_root_mod_n(a: &QuadElem, n: i64) -> Option<QuadElem> {
    let field = a.field;
    let big_n = BigInt::from(n);
    let (u, v) = a.to_basis();
    let target = (
        u.mod_floor(&big_n).to_i64().unwrap(),
        v.mod_floor(&big_n).to_i64().unwrap(),
    );
    // omega^2 = t*omega + s
    let (t, s) = if field.disc == field.m {
        (1, (field.m - 1) / 4)
    } else {
        (0, field.m)
    };
    let s = s.rem_euclid(n);
    for xu in 0..n {
        for xv in 0..n {
            let su = (xu * xu + xv * xv * s).rem_euclid(n);
            let sv = (2 * xu * xv + xv * xv * t).rem_euclid(n);
            if (su, sv) == target {
                return Some(field.from_basis(&BigInt::from(xu), &BigInt::from(xv)));
            }
        }
    }
    None
}

/// Totally positive and a square modulo 4. Squares qualify.
pub fn is_primary(a: &QuadElem) -> Result<bool> {
    if !a.field.is_real() {
        return Err(Error::ImaginaryField(a.field.m));
    }
    let square = is_square_mod(a, SquareLevel::Four)?.is_some();
    Ok(square && a.is_totally_positive()?)
}

/// Primary and a square modulo `4 l l' = (8)`. Only offered where 2 splits.
pub fn is_hyper_primary(a: &QuadElem) -> Result<bool> {
    if a.field.disc.rem_euclid(8) != 1 {
        return Err(Error::TwoNotSplit(a.field.m));
    }
    if !is_primary(a)? {
        return Ok(false);
    }
    Ok(is_square_mod(a, SquareLevel::Eight)?.is_some())
}

/// Property sought by [`unit_normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeGoal {
    TotallyPositive,
    Primary,
    HyperPrimary,
}

/// First associate `u*a`, `u` running over `1, -1, eps, -eps`, meeting the
/// goal.
pub fn unit_normalize(a: &QuadElem, goal: NormalizeGoal, unit: &UnitInfo) -> Result<Option<QuadElem>> {
    let ae = a * &unit.epsilon;
    for cand in [a.clone(), -a, ae.clone(), -ae] {
        let hit = match goal {
            NormalizeGoal::TotallyPositive => cand.is_totally_positive()?,
            NormalizeGoal::Primary => is_primary(&cand)?,
            NormalizeGoal::HyperPrimary => is_hyper_primary(&cand)?,
        };
        if hit {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}
