//! Ideals of quadratic rings in two-generator form `[a, (b + sqrt(d))/2]`,
//! prime splitting, and principal-generator search by walking the cycle of
//! reduced ideals.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{is_prime, is_square, isqrt, jacobi, sqrt_mod};
use crate::error::{precondition, Error, Result};
use crate::forms::class_number;
use crate::quadring::{fundamental_unit, unit_normalize, NormalizeGoal, QuadElem, QuadField, UnitInfo};

/// A degree-one prime `ell0*Z + ((b + sqrt(d))/2)*Z` above a split or
/// ramified rational prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal {
    field: QuadField,
    norm: u64,
    b: i64,
}

impl PrimeIdeal {
    pub fn field(&self) -> QuadField {
        self.field
    }

    /// The rational prime below.
    pub fn norm(&self) -> u64 {
        self.norm
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn conj(&self) -> PrimeIdeal {
        let two_l = 2 * self.norm as i64;
        PrimeIdeal { b: (-self.b).rem_euclid(two_l), ..*self }
    }

    pub fn to_ideal(&self) -> IdealRep {
        IdealRep {
            field: self.field,
            a: BigInt::from(self.norm),
            b: BigInt::from(self.b),
            content: BigInt::one(),
        }
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, ({} + sqrt({}))/2]", self.norm, self.b, self.field.disc())
    }
}

/// Factors a split rational prime as `(l, l')`, with `l` the prime of smaller
/// `b`.
pub fn split_prime(field: QuadField, ell: u64) -> Result<(PrimeIdeal, PrimeIdeal)> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let d = field.disc();
    let bs: [i64; 2] = if ell == 2 {
        match d.rem_euclid(8) {
            1 => [1, 3],
            5 => return Err(Error::Inert { ell, disc: d }),
            _ => return Err(Error::Ramified { ell, disc: d }),
        }
    } else {
        let l = ell as i64;
        match jacobi(d, l)? {
            0 => return Err(Error::Ramified { ell, disc: d }),
            -1 => return Err(Error::Inert { ell, disc: d }),
            _ => {}
        }
        let s = sqrt_mod(d, ell)? as i64;
        let lift = |r: i64| if (r - d).rem_euclid(2) == 0 { r } else { r + l };
        let (b1, b2) = (lift(s), lift(l - s));
        [b1.min(b2), b1.max(b2)]
    };
    let make = |b| PrimeIdeal { field, norm: ell, b };
    Ok((make(bs[0]), make(bs[1])))
}

/// Ideal `content * [a, (b + sqrt(d))/2]` with `4a | b^2 - d` and
/// `0 <= b < 2a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealRep {
    field: QuadField,
    a: BigInt,
    b: BigInt,
    content: BigInt,
}

impl IdealRep {
    pub fn unit(field: QuadField) -> IdealRep {
        IdealRep {
            field,
            a: BigInt::one(),
            b: BigInt::from(field.disc().rem_euclid(2)),
            content: BigInt::one(),
        }
    }

    /// `content * [a, (b + sqrt(d))/2]`, validated and with `b` reduced.
    pub fn new(field: QuadField, a: BigInt, b: BigInt, content: BigInt) -> Result<IdealRep> {
        let d = BigInt::from(field.disc());
        if !a.is_positive() || !content.is_positive() || !(&b * &b - &d).is_multiple_of(&(&a * 4)) {
            return precondition(format!("[{a}, ({b} + sqrt({d}))/2] is not an ideal"));
        }
        let b = b.mod_floor(&(&a * 2));
        Ok(IdealRep { field, a, b, content })
    }

    /// The principal ideal `(alpha)`.
    pub fn principal(alpha: &QuadElem) -> IdealRep {
        let omega = alpha.field().omega();
        Self::from_z_span(alpha.field(), &[alpha.clone(), alpha * &omega])
    }

    /// The Z-module spanned by `elems`, which must be an ideal.
    fn from_z_span(field: QuadField, elems: &[QuadElem]) -> IdealRep {
        // lattice Z*(a0, 0) + Z*(b0, c0) in (1, omega) coordinates
        let (mut a0, mut b0, mut c0) = (BigInt::zero(), BigInt::zero(), BigInt::zero());
        for e in elems {
            let (u, v) = e.to_basis();
            if v.is_zero() {
                a0 = a0.gcd(&u);
            } else if c0.is_zero() {
                (b0, c0) = (u, v);
            } else {
                let eg = c0.extended_gcd(&v);
                let g = eg.gcd;
                let rem = (&v / &g) * &b0 - (&c0 / &g) * &u;
                b0 = &eg.x * &b0 + &eg.y * &u;
                c0 = g;
                a0 = a0.gcd(&rem);
            }
        }
        if c0.is_negative() {
            b0 = -b0;
            c0 = -c0;
        }
        assert!(!a0.is_zero() && !c0.is_zero(), "span is not a full lattice");
        let d0 = BigInt::from(field.disc().rem_euclid(2));
        let content = c0.clone();
        let a = &a0 / &content;
        let b: BigInt = (&b0 / &content) * 2 + d0;
        let b = b.mod_floor(&(&a * 2));
        IdealRep { field, a, b, content }
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    /// Norm of the primitive part.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn content(&self) -> &BigInt {
        &self.content
    }

    pub fn norm(&self) -> BigInt {
        &self.content * &self.content * &self.a
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.a.is_one() && self.content.is_one()
    }

    pub fn primitive_part(&self) -> IdealRep {
        IdealRep { content: BigInt::one(), ..self.clone() }
    }

    pub fn conj(&self) -> IdealRep {
        IdealRep {
            b: (-&self.b).mod_floor(&(&self.a * 2)),
            ..self.clone()
        }
    }

    fn z_basis(&self) -> [QuadElem; 2] {
        let c = &self.content;
        [
            self.field.integer(&self.a * c),
            self.field.half_sqrt_disc(&self.b).scale(c),
        ]
    }

    pub fn mul(&self, other: &IdealRep) -> Result<IdealRep> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.m(), other.field.m()));
        }
        let [x1, x2] = self.z_basis();
        let [y1, y2] = other.z_basis();
        Ok(Self::from_z_span(
            self.field,
            &[&x1 * &y1, &x1 * &y2, &x2 * &y1, &x2 * &y2],
        ))
    }

    pub fn pow(&self, e: u64) -> IdealRep {
        let mut acc = IdealRep::unit(self.field);
        for _ in 0..e {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    pub fn contains(&self, alpha: &QuadElem) -> bool {
        if alpha.field() != self.field {
            return false;
        }
        let (u, v) = alpha.to_basis();
        if !v.is_multiple_of(&self.content) {
            return false;
        }
        let k = &v / &self.content;
        let d0 = BigInt::from(self.field.disc().rem_euclid(2));
        let b_half = (&self.b - d0) / 2;
        let rest: BigInt = u - k * b_half * &self.content;
        rest.is_multiple_of(&(&self.a * &self.content))
    }
}

impl From<PrimeIdeal> for IdealRep {
    fn from(p: PrimeIdeal) -> Self {
        p.to_ideal()
    }
}

impl fmt::Display for IdealRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.content.is_one() {
            write!(f, "{}*", self.content)?;
        }
        write!(f, "[{}, ({} + sqrt({}))/2]", self.a, self.b, self.field.disc())
    }
}

/// `(b^2 - d)/(4a)` form window test: `0 < b < sqrt(d)` and
/// `sqrt(d) - b < 2a < sqrt(d) + b`.
fn is_reduced(a: &BigInt, b: &BigInt, d: &BigInt) -> bool {
    if !b.is_positive() || b * b >= *d {
        return false;
    }
    let two_a: BigInt = a * 2;
    let lower = &two_a + b;
    if lower.clone() * &lower <= *d {
        return false;
    }
    let upper = two_a - b;
    !upper.is_positive() || &upper * &upper < *d
}

/// Value `num / den` with `num` integral and `den > 0`.
struct Tracked {
    num: QuadElem,
    den: BigInt,
}

struct Walker {
    field: QuadField,
    d: BigInt,
    root: BigInt,
    a: BigInt,
    b: BigInt,
    gamma: Tracked,
}

impl Walker {
    /// `I = gamma * J` throughout, `J` the current `[a, (b + sqrt d)/2]`.
    fn step(&mut self) {
        let c: BigInt = (&self.b * &self.b - &self.d) / (&self.a * 4);
        let psi = self.field.half_sqrt_disc(&self.b);
        let mut num = &self.gamma.num * &psi;
        if c.is_negative() {
            num = -num;
        }
        let ac = c.abs();
        let mut den = &self.gamma.den * &ac;
        let g = num.content().gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("content divides");
            den /= &g;
        }
        self.gamma = Tracked { num, den };
        let two_c: BigInt = &ac * 2;
        let nb = -&self.b;
        self.b = if &ac * &ac > self.d {
            let r = nb.mod_floor(&two_c);
            if r > ac {
                r - &two_c
            } else {
                r
            }
        } else {
            &self.root - (&self.root - nb).mod_floor(&two_c)
        };
        self.a = ac;
    }

    fn canonical_b(&self) -> BigInt {
        &self.root - (&self.root - &self.b).mod_floor(&(&self.a * 2))
    }
}

/// Canonical generator `gamma > 0` with `1 <= |gamma / gamma'| < eps^2`.
pub(crate) fn canonical_associate(gamma: &QuadElem, unit: &UnitInfo) -> QuadElem {
    let inv = unit.inverse();
    let mut g = gamma.clone();
    while !g.dominates_conjugate() {
        g = &g * &unit.epsilon;
    }
    loop {
        let down = &g * &inv;
        if down.dominates_conjugate() {
            g = down;
        } else {
            break;
        }
    }
    if g.real_sign().expect("real field") == std::cmp::Ordering::Less {
        g = -g;
    }
    g
}

/// A generator of `ideal` if it is principal, found by reducing the ideal and
/// walking its cycle of reduced ideals while tracking the relative
/// generator. The result is canonical modulo units (see
/// [`canonical_associate`]).
pub fn principal_generator(ideal: &IdealRep) -> Result<Option<QuadElem>> {
    let field = ideal.field;
    if !field.is_real() {
        return Err(Error::ImaginaryField(field.m()));
    }
    let unit = fundamental_unit(field.m())?;
    principal_generator_with_unit(ideal, &unit)
}

pub(crate) fn principal_generator_with_unit(ideal: &IdealRep, unit: &UnitInfo) -> Result<Option<QuadElem>> {
    let field = ideal.field;
    let d = BigInt::from(field.disc());
    let root = BigInt::from(isqrt(field.disc() as u64));
    let mut w = Walker {
        field,
        d: d.clone(),
        root,
        a: ideal.a.clone(),
        b: ideal.b.clone(),
        gamma: Tracked { num: field.one(), den: BigInt::one() },
    };
    let limit = 64 + 4 * ideal.a.bits() as usize + 8 * field.disc().unsigned_abs() as usize;
    let mut steps = 0;
    while !w.a.is_one() && !is_reduced(&w.a, &w.b, &d) {
        w.step();
        steps += 1;
        if steps > limit {
            return Err(Error::Internal(format!("reduction of {ideal} did not terminate")));
        }
    }
    w.b = w.canonical_b();
    let start = (w.a.clone(), w.b.clone());
    let mut cycle = 0;
    while !w.a.is_one() {
        w.step();
        cycle += 1;
        if (&w.a, &w.canonical_b()) == (&start.0, &start.1) {
            return Ok(None);
        }
        if cycle > limit {
            return Err(Error::Internal(format!("cycle of {ideal} did not close")));
        }
    }
    if !w.gamma.den.is_one() {
        return Err(Error::Internal(format!("non-integral generator for {ideal}")));
    }
    let raw = w.gamma.num.scale(&ideal.content);
    let gen = canonical_associate(&raw, unit);
    if IdealRep::principal(&gen) != *ideal {
        return Err(Error::Internal(format!("generator {gen} does not generate {ideal}")));
    }
    Ok(Some(gen))
}

fn check_prime_1_mod_4(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return precondition(format!("{p} is not 1 mod 4"));
    }
    Ok(())
}

/// Checks `p = q = 1 mod 4`, `p != q` and `(p/q) = +1`.
pub(crate) fn check_scholz_pair(p: u64, q: u64) -> Result<()> {
    check_prime_1_mod_4(p)?;
    check_prime_1_mod_4(q)?;
    if p == q {
        return precondition("p and q must differ");
    }
    if jacobi(p as i64, q as i64)? != 1 {
        return precondition(format!("({p}/{q}) = -1"));
    }
    Ok(())
}

pub(crate) fn check_prime_1_mod_8(p: u64) -> Result<()> {
    check_prime_1_mod_4(p)?;
    if p % 8 != 1 {
        return Err(Error::TwoNotSplit(p as i64));
    }
    Ok(())
}

/// Generator of `q^e` for the canonical prime `q` above `q` in `Q(sqrt(p))`.
pub fn find_rho_with_exponent(p: u64, q: u64, e: u64) -> Result<QuadElem> {
    check_scholz_pair(p, q)?;
    let field = QuadField::new(p as i64)?;
    let (big_q, _) = split_prime(field, q)?;
    let power = big_q.to_ideal().pow(e);
    principal_generator(&power)?
        .ok_or_else(|| Error::Internal(format!("{big_q}^{e} is not principal")))
}

/// `rho` in `Q(sqrt(p))` generating `q^h(p)`, `q` the canonical prime above
/// `q`.
pub fn find_rho(p: u64, q: u64) -> Result<QuadElem> {
    check_scholz_pair(p, q)?;
    let h = class_number(p as i64)?;
    find_rho_with_exponent(p, q, h)
}

/// Totally positive `lambda_p` generating `l^h(p)` for the canonical prime
/// `l` above 2 in `Q(sqrt(p))`.
pub fn find_lambda(p: u64) -> Result<QuadElem> {
    check_prime_1_mod_8(p)?;
    let field = QuadField::new(p as i64)?;
    let unit = fundamental_unit(p as i64)?;
    let h = class_number(p as i64)?;
    let (ell, _) = split_prime(field, 2)?;
    let gen = principal_generator_with_unit(&ell.to_ideal().pow(h), &unit)?
        .ok_or_else(|| Error::Internal(format!("{ell}^{h} is not principal")))?;
    let lambda = unit_normalize(&gen, NormalizeGoal::TotallyPositive, &unit)?
        .ok_or_else(|| Error::Internal(format!("no totally positive associate of {gen}")))?;
    if lambda.norm() != BigInt::one() << h {
        return Err(Error::Internal(format!("N({lambda}) != 2^{h}")));
    }
    Ok(lambda)
}

/// `pi_2 = x + y*sqrt(2)` with `x^2 - 2y^2 = p`, minimal `x > 0`, `y > 0`.
pub fn find_pi2(p: u64) -> Result<QuadElem> {
    check_prime_1_mod_8(p)?;
    let field = QuadField::new(2)?;
    for y in 1..=p {
        let t = p + 2 * y * y;
        if is_square(t) {
            return Ok(field.int_elem(isqrt(t), y));
        }
    }
    Err(Error::Internal(format!("x^2 - 2y^2 = {p} has no solution")))
}

/// `pi_2^* = x + y*sqrt(-2)` with `x^2 + 2y^2 = p`, `x > 0`, `y > 0`.
pub fn find_pi2_star(p: u64) -> Result<QuadElem> {
    check_prime_1_mod_8(p)?;
    let field = QuadField::new(-2)?;
    for y in 1..=isqrt(p / 2) {
        let t = p - 2 * y * y;
        if is_square(t) {
            return Ok(field.int_elem(isqrt(t), y));
        }
    }
    Err(Error::Internal(format!("x^2 + 2y^2 = {p} has no solution")))
}

/// All ideals of norm `n`.
pub fn ideals_of_norm(field: QuadField, n: u64) -> Vec<IdealRep> {
    let d = field.disc();
    let mut out = Vec::new();
    for k in (1..=isqrt(n)).filter(|k| n % (k * k) == 0) {
        let a = (n / (k * k)) as i64;
        for b in (0..2 * a).filter(|b| (b - d).rem_euclid(2) == 0) {
            if (b as i128 * b as i128 - d as i128).rem_euclid(4 * a as i128) == 0 {
                out.push(IdealRep {
                    field,
                    a: BigInt::from(a),
                    b: BigInt::from(b),
                    content: BigInt::from(k),
                });
            }
        }
    }
    out
}

/// Elements of norm `n` (or `-n` where no associate has norm `n`), one
/// smallest representative per unit orbit up to conjugation, listed with its
/// sign and conjugate variants.
pub fn elements_of_norm(field: QuadField, n: u64) -> Result<Vec<QuadElem>> {
    if !field.is_real() {
        return Err(Error::ImaginaryField(field.m()));
    }
    let unit = fundamental_unit(field.m())?;
    let inv = unit.inverse();
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    for ideal in ideals_of_norm(field, n) {
        if !seen.insert(ideal.clone()) {
            continue;
        }
        seen.insert(ideal.conj());
        let Some(gen) = principal_generator_with_unit(&ideal, &unit)? else {
            continue;
        };
        let mut candidates = Vec::new();
        for base in [gen.clone(), gen.conj()] {
            let mut g = &base * &inv.pow(2);
            for _ in 0..5 {
                candidates.push(g.clone());
                g = &g * &unit.epsilon;
            }
        }
        let plus = BigInt::from(n);
        let wanted = if candidates.iter().any(|c| c.norm() == plus) {
            plus
        } else {
            -plus
        };
        let best = candidates
            .into_iter()
            .filter(|c| c.norm() == wanted)
            .min_by_key(|c| (c.y().abs(), c.x().abs()))
            .expect("generator or its unit multiples have norm +-n");
        for v in [best.clone(), -&best, best.conj(), -best.conj()] {
            out.insert(OrderedElem(v));
        }
    }
    Ok(out.into_iter().map(|e| e.0).collect())
}

#[derive(PartialEq, Eq)]
struct OrderedElem(QuadElem);

impl Ord for OrderedElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |e: &QuadElem| (e.y().abs(), e.x().abs(), e.x().clone(), e.y().clone());
        key(&self.0).cmp(&key(&other.0))
    }
}

impl PartialOrd for OrderedElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Residue image of `alpha` modulo the primitive ideal `[a, (b + sqrt d)/2]`
/// with odd `a`, using `sqrt(d) = -b`.
pub(crate) fn residue_image(alpha: &QuadElem, a: &BigInt, b: &BigInt) -> BigInt {
    let field = alpha.field();
    let two_inv = (a + 1u32) / 2;
    let sqrt_m = if field.disc() == field.m() {
        -b
    } else {
        -b * &two_inv
    };
    let image: BigInt = (alpha.x() + alpha.y() * sqrt_m) * two_inv;
    image.mod_floor(a)
}

pub(crate) fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Internal(format!("{v} exceeds 64 bits")))
}
