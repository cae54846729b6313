//! Indefinite binary quadratic forms of positive fundamental discriminant:
//! reduction, cycles of reduced forms (narrow classes), composition, and the
//! wide class group obtained by identifying the class `J` of `-x^2 + ...`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{divisors, is_squarefree, isqrt, Sign};
use crate::error::{precondition, Error, Result};
use crate::ideals::IdealRep;

/// The form `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Form {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Form {
    /// A primitive form of positive non-square discriminant.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Form> {
        let f = Form { a, b, c };
        let d = f.disc();
        if d <= 0 || isqrt(d as u64).pow(2) == d as u64 {
            return Err(Error::BadFormDiscriminant(d));
        }
        if a.gcd(&b).gcd(&c) != 1 {
            return precondition(format!("{f} is not primitive"));
        }
        Ok(f)
    }

    /// The form attached to `[a, (b + sqrt(d))/2]`.
    pub fn from_ideal_data(a: i64, b: i64, d: i64) -> Result<Form> {
        if a == 0 || (b as i128 * b as i128 - d as i128) % (4 * a as i128) != 0 {
            return precondition(format!("[{a}, ({b} + sqrt({d}))/2] is not an ideal"));
        }
        let c = ((b as i128 * b as i128 - d as i128) / (4 * a as i128)) as i64;
        Form::new(a, b, c)
    }

    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// `0 < b < sqrt(D)` and `sqrt(D) - b < 2|a| < sqrt(D) + b`.
    pub fn is_reduced(&self) -> bool {
        let d = self.disc() as i128;
        let (a, b) = (self.a.abs() as i128, self.b as i128);
        if b <= 0 || b * b >= d {
            return false;
        }
        let lower = 2 * a + b;
        let upper = 2 * a - b;
        lower * lower > d && (upper <= 0 || upper * upper < d)
    }

    /// One reduction step `(a, b, c) -> (c, b', c')` with `b' = -b mod 2c`;
    /// a proper equivalence that maps reduced forms to reduced forms.
    pub fn rho(&self) -> Form {
        let d = self.disc() as i128;
        let root = isqrt(self.disc() as u64) as i128;
        let c = self.c as i128;
        let ac = c.abs();
        let two_c = 2 * ac;
        let nb = -(self.b as i128);
        let b = if ac * ac > d {
            let r = nb.rem_euclid(two_c);
            if r > ac {
                r - two_c
            } else {
                r
            }
        } else {
            root - (root - nb).rem_euclid(two_c)
        };
        let new_c = (b * b - d) / (4 * c);
        Form { a: self.c, b: b as i64, c: new_c as i64 }
    }

    /// The form `(a, -b, c)`, inverse in the narrow class group.
    pub fn inverse(&self) -> Form {
        Form { b: -self.b, ..*self }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A reduced form properly equivalent to `f`.
pub fn reduce_form(f: Form) -> Result<Form> {
    let f = Form::new(f.a, f.b, f.c)?;
    let mut g = f;
    let limit = 200 + 4 * (64 - f.a.unsigned_abs().leading_zeros() as usize + 64 - f.c.unsigned_abs().leading_zeros() as usize);
    for _ in 0..limit {
        if g.is_reduced() {
            return Ok(g);
        }
        g = g.rho();
    }
    Err(Error::Internal(format!("reduction of {f} did not terminate")))
}

/// Composition of two primitive forms of equal discriminant with `a > 0`
/// (Shanks' formulation of Gauss composition), not reduced.
fn compose_raw(f1: Form, f2: Form) -> Form {
    let (f1, f2) = if f1.a > f2.a { (f2, f1) } else { (f1, f2) };
    let (a1, b1) = (f1.a as i128, f1.b as i128);
    let (a2, b2, c2) = (f2.a as i128, f2.b as i128, f2.c as i128);
    let disc = f1.disc() as i128;
    let s = (b1 + b2) / 2;
    let n = b2 - s;
    let (y1, d) = if a2 % a1 == 0 {
        (0, a1)
    } else {
        let eg = a2.extended_gcd(&a1);
        (eg.x, eg.gcd)
    };
    let (x2, y2, d1) = if s % d == 0 {
        (0, -1, d)
    } else {
        let eg = s.extended_gcd(&d);
        (eg.x, -eg.y, eg.gcd)
    };
    let v1 = a1 / d1;
    let v2 = a2 / d1;
    let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1);
    let b3 = b2 + 2 * v2 * r;
    let a3 = v1 * v2;
    let c3 = (b3 * b3 - disc) / (4 * a3);
    Form { a: a3 as i64, b: b3 as i64, c: c3 as i64 }
}

/// True for `d = 1 mod 4` squarefree and for `d = 4m` with `m = 2, 3 mod 4`
/// squarefree.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 1 || d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m)
        }
        _ => false,
    }
}

/// Narrow class group of a positive fundamental discriminant, with the data
/// needed to pass to the wide group.
#[derive(Debug)]
pub struct FormClassGroup {
    disc: i64,
    reps: Vec<Form>,
    class_of_reduced: HashMap<Form, usize>,
    cycle_lengths: Vec<usize>,
    j_index: usize,
    table: OnceLock<Vec<Vec<usize>>>,
}

/// Builds the narrow class group by enumerating reduced forms and splitting
/// them into cycles. Class 0 is the principal cycle.
pub fn class_group(disc: i64) -> Result<FormClassGroup> {
    if disc <= 0 || !is_fundamental_discriminant(disc) {
        return Err(Error::NotFundamental(disc));
    }
    let reduced = reduced_forms(disc);
    let root = isqrt(disc as u64) as i64;
    let b0 = root - (root - disc).rem_euclid(2);
    let principal = Form { a: 1, b: b0, c: (b0 * b0 - disc) / 4 };
    let mut class_of_reduced = HashMap::with_capacity(reduced.len());
    let mut reps = Vec::new();
    let mut cycle_lengths = Vec::new();
    let starts = std::iter::once(principal).chain(reduced.iter().copied());
    for start in starts {
        if class_of_reduced.contains_key(&start) {
            continue;
        }
        let idx = reps.len();
        let mut rep = start;
        let mut len = 0;
        let mut g = start;
        loop {
            class_of_reduced.insert(g, idx);
            if g.a > 0 && (rep.a < 0 || (g.a, g.b) < (rep.a, rep.b)) {
                rep = g;
            }
            len += 1;
            g = g.rho();
            if g == start {
                break;
            }
        }
        reps.push(rep);
        cycle_lengths.push(len);
    }
    debug_assert_eq!(class_of_reduced.len(), reduced.len());
    let j_form = Form { a: -1, b: b0, c: -principal.c };
    let j = *class_of_reduced
        .get(&reduce_form(j_form)?)
        .ok_or_else(|| Error::Internal(format!("no class for {j_form}")))?;
    Ok(FormClassGroup {
        disc,
        reps,
        class_of_reduced,
        cycle_lengths,
        j_index: j,
        table: OnceLock::new(),
    })
}

/// Every reduced form of discriminant `disc`.
pub fn reduced_forms(disc: i64) -> Vec<Form> {
    let root = isqrt(disc as u64) as i64;
    let mut out = Vec::new();
    let mut b = if disc % 2 == 0 { 2 } else { 1 };
    while b <= root {
        let n = (disc - b * b) / 4;
        for a in divisors(n as u64) {
            let a = a as i64;
            let f = Form { a, b, c: -n / a };
            if f.is_reduced() {
                out.push(f);
                out.push(Form { a: -a, b, c: n / a });
            }
        }
        b += 2;
    }
    out.sort();
    out
}

impl FormClassGroup {
    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// Narrow class number `h+`.
    pub fn narrow_class_number(&self) -> usize {
        self.reps.len()
    }

    /// Wide class number `h`.
    pub fn class_number(&self) -> usize {
        match self.unit_norm() {
            Sign::Minus => self.reps.len(),
            Sign::Plus => self.reps.len() / 2,
        }
    }

    /// Cycle representatives: the smallest `(a, b)` with `a > 0` per cycle.
    pub fn narrow_reps(&self) -> &[Form] {
        &self.reps
    }

    pub fn cycle_lengths(&self) -> &[usize] {
        &self.cycle_lengths
    }

    /// Narrow class of forms equivalent to one with leading coefficient -1.
    pub fn j_index(&self) -> usize {
        self.j_index
    }

    /// Norm of the fundamental unit: -1 exactly when `J` is principal.
    pub fn unit_norm(&self) -> Sign {
        Sign::from_bool(self.j_index != 0)
    }

    pub fn class_of_form(&self, f: Form) -> Result<usize> {
        if f.disc() != self.disc {
            return Err(Error::Precondition(format!("{f} has discriminant {}, expected {}", f.disc(), self.disc)));
        }
        let r = reduce_form(f)?;
        self.class_of_reduced
            .get(&r)
            .copied()
            .ok_or_else(|| Error::Internal(format!("reduced form {r} missing from class table")))
    }

    pub fn compose(&self, i: usize, j: usize) -> usize {
        if let Some(t) = self.table.get() {
            return t[i][j];
        }
        self.compose_direct(i, j)
    }

    fn compose_direct(&self, i: usize, j: usize) -> usize {
        let f = compose_raw(self.reps[i], self.reps[j]);
        self.class_of_form(f).expect("composition stays in the group")
    }

    /// Full composition table, built on first use.
    pub fn compose_table(&self) -> &[Vec<usize>] {
        self.table.get_or_init(|| {
            let n = self.reps.len();
            let mut t = vec![vec![0; n]; n];
            for i in 0..n {
                for j in i..n {
                    let k = self.compose_direct(i, j);
                    t[i][j] = k;
                    t[j][i] = k;
                }
            }
            t
        })
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.class_of_form(self.reps[i].inverse()).expect("inverse stays in the group")
    }

    pub fn pow(&self, i: usize, e: u64) -> usize {
        let t = self.compose_table();
        (0..e).fold(0, |acc, _| t[acc][i])
    }

    /// Narrow classes that are fourth powers.
    pub fn fourth_powers(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.reps.len()).map(|i| self.pow(i, 4)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Wide-class representative of narrow class `i`.
    pub fn wide_rep(&self, i: usize) -> usize {
        i.min(self.compose(i, self.j_index))
    }
}

/// Wide class number `h(disc)`.
pub fn class_number(disc: i64) -> Result<u64> {
    Ok(class_group(disc)?.class_number() as u64)
}

/// Narrow class of an ideal: `content * [a, (b + sqrt d)/2]` maps to the form
/// `(a, b, (b^2 - d)/(4a))`.
pub fn ideal_class_of(ideal: &IdealRep, group: &FormClassGroup) -> Result<usize> {
    let d = ideal.field().disc();
    if d != group.disc {
        return precondition(format!("ideal of discriminant {d} used with class group of {}", group.disc));
    }
    let a = ideal.a().to_i64().ok_or_else(|| Error::Internal("ideal norm exceeds 64 bits".into()))?;
    let b = ideal.b().to_i64().expect("b < 2a");
    group.class_of_form(Form::from_ideal_data(a, b, d)?)
}

/// Whether the wide class of narrow class `cls` is a fourth power in the
/// wide class group.
pub fn is_fourth_power_wide(cls: usize, group: &FormClassGroup) -> bool {
    let fourth = group.fourth_powers();
    let other = group.compose(cls, group.j_index);
    fourth.binary_search(&cls).is_ok() || fourth.binary_search(&other).is_ok()
}

/// One row of the class-number cache: `disc,h_plus,h,unit_norm`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub disc: i64,
    pub h_plus: u64,
    pub h: u64,
    pub unit_norm: Sign,
}

impl ClassRow {
    pub const HEADER: &'static str = "disc,h_plus,h,unit_norm";

    pub fn compute(disc: i64) -> Result<ClassRow> {
        let g = class_group(disc)?;
        Ok(ClassRow {
            disc,
            h_plus: g.narrow_class_number() as u64,
            h: g.class_number() as u64,
            unit_norm: g.unit_norm(),
        })
    }

    /// Whether the row agrees with recomputation.
    pub fn verify(&self) -> Result<bool> {
        Ok(ClassRow::compute(self.disc)? == *self)
    }
}

impl fmt::Display for ClassRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.disc, self.h_plus, self.h, self.unit_norm)
    }
}

impl FromStr for ClassRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClassRow> {
        let bad = || Error::Precondition(format!("malformed class row {s:?}"));
        let parts: Vec<&str> = s.trim().split(',').collect();
        let [d, hp, h, u] = parts[..] else {
            return Err(bad());
        };
        let unit_norm = match u {
            "+1" => Sign::Plus,
            "-1" => Sign::Minus,
            _ => return Err(bad()),
        };
        Ok(ClassRow {
            disc: d.parse().map_err(|_| bad())?,
            h_plus: hp.parse().map_err(|_| bad())?,
            h: h.parse().map_err(|_| bad())?,
            unit_norm,
        })
    }
}
