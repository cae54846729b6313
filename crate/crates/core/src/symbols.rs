//! Quadratic residue symbols `[alpha / P]` in quadratic fields and the
//! derived symbols `(eps_p / q)`, `(lambda_p / q)`, `[pi_2 / rho_2]` and
//! `[pi_2^* / rho_2^*]`.
//!
//! The residue map of `[a, (b + sqrt d)/2]` always sends `sqrt(d)` to `-b`,
//! which is forced by `(b + sqrt d)/2` lying in the ideal. No global choice
//! of square root enters any symbol.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{is_squarefree, jacobi, Sign};
use crate::error::{precondition, Error, Result};
use crate::ideals::{
    check_prime_1_mod_8, check_scholz_pair, find_lambda, find_pi2, find_pi2_star, residue_image, split_prime, to_i64,
    IdealRep, PrimeIdeal,
};
use crate::quadring::{fundamental_unit, QuadElem, QuadField};

/// A symbol value together with the element and ideal it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolResult {
    pub value: Sign,
    pub ideal: IdealRep,
    pub element: QuadElem,
}

impl SymbolResult {
    pub fn evaluate(element: &QuadElem, ideal: &IdealRep) -> Result<SymbolResult> {
        Ok(SymbolResult {
            value: residue_symbol_ideal(element, ideal)?,
            ideal: ideal.clone(),
            element: element.clone(),
        })
    }

    /// Recomputes the value from the stored witnesses.
    pub fn is_consistent(&self) -> bool {
        residue_symbol_ideal(&self.element, &self.ideal).ok() == Some(self.value)
    }
}

/// `[alpha / P]` for a degree-one prime of odd norm.
pub fn residue_symbol(alpha: &QuadElem, prime: &PrimeIdeal) -> Result<Sign> {
    if prime.norm() == 2 {
        return Err(Error::UnsupportedIdeal);
    }
    residue_symbol_ideal(alpha, &prime.to_ideal())
}

/// `[alpha / A]` for `A` a product of distinct degree-one primes of odd
/// norm, computed as the Jacobi symbol of the image of `alpha` in
/// `Z / N(A)`.
pub fn residue_symbol_ideal(alpha: &QuadElem, ideal: &IdealRep) -> Result<Sign> {
    if alpha.field() != ideal.field() {
        return Err(Error::FieldMismatch(alpha.field().m(), ideal.field().m()));
    }
    if !ideal.content().is_one() {
        return Err(Error::UnsupportedIdeal);
    }
    let n = to_i64(ideal.a())?;
    if n % 2 == 0 || !is_squarefree(n) {
        return Err(Error::UnsupportedIdeal);
    }
    if n == 1 {
        return Ok(Sign::Plus);
    }
    let image = residue_image(alpha, ideal.a(), ideal.b());
    Sign::try_from(jacobi(to_i64(&image)?, n)?)
}

/// `(eps_p / q) = [eps_p / q]` for the canonical prime `q` above `q` in
/// `Q(sqrt(p))`.
pub fn eps_symbol(p: u64, q: u64) -> Result<Sign> {
    check_scholz_pair(p, q)?;
    let field = QuadField::new(p as i64)?;
    let eps = fundamental_unit(p as i64)?.epsilon;
    let (big_q, _) = split_prime(field, q)?;
    residue_symbol(&eps, &big_q)
}

/// `(lambda_p / q) = [lambda_p / q]` for the canonical prime `q` above `q`
/// in `Q(sqrt(p))`.
pub fn lambda_symbol(p: u64, q: u64) -> Result<Sign> {
    check_prime_1_mod_8(p)?;
    check_prime_1_mod_8(q)?;
    check_scholz_pair(p, q)?;
    let field = QuadField::new(p as i64)?;
    let lambda = find_lambda(p)?;
    let (big_q, _) = split_prime(field, q)?;
    residue_symbol(&lambda, &big_q)
}

/// `([pi_2 / rho_2], [pi_2^* / rho_2^*])` where `pi_2, rho_2` in `Z[sqrt 2]`
/// and `pi_2^*, rho_2^*` in `Z[sqrt -2]` have norms `p` and `q`.
pub fn sqrt2_symbols(p: u64, q: u64) -> Result<(Sign, Sign)> {
    check_prime_1_mod_8(p)?;
    check_prime_1_mod_8(q)?;
    if p == q {
        return precondition("p and q must differ");
    }
    let plain = residue_symbol_ideal(&find_pi2(p)?, &IdealRep::principal(&find_pi2(q)?))?;
    let star = residue_symbol_ideal(&find_pi2_star(p)?, &IdealRep::principal(&find_pi2_star(q)?))?;
    Ok((plain, star))
}

/// `[alpha / (beta)]` for the principal ideal of `beta`.
pub fn residue_symbol_principal(alpha: &QuadElem, beta: &QuadElem) -> Result<Sign> {
    if beta.norm().abs() == BigInt::one() {
        return Ok(Sign::Plus);
    }
    residue_symbol_ideal(alpha, &IdealRep::principal(beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{is_prime, quartic_symbol};
    use crate::forms::class_number;
    use crate::ideals::principal_generator;

    fn f(m: i64) -> QuadField {
        QuadField::new(m).unwrap()
    }

    fn pairs(max: u64, modulus: u64) -> Vec<(u64, u64)> {
        let ps: Vec<u64> = (5..=max).filter(|&p| p % modulus == 1 && is_prime(p)).collect();
        let mut out = Vec::new();
        for &p in &ps {
            for &q in &ps {
                if p != q && jacobi(p as i64, q as i64).unwrap() == 1 {
                    out.push((p, q));
                }
            }
        }
        out
    }

    #[test]
    fn unit_symbols_in_q_sqrt_37() {
        let k = f(37);
        let eps = k.int_elem(6, 1);
        let beta = k.elem(11, 1).unwrap();
        assert_eq!(residue_symbol_principal(&eps, &beta).unwrap(), Sign::Plus);
        assert_eq!(residue_symbol_principal(&eps, &k.int_elem(13, 2)).unwrap(), Sign::Minus);
        assert_eq!(residue_symbol_principal(&eps, &k.int_elem(13, -2)).unwrap(), Sign::Minus);
        assert_eq!(residue_symbol_ideal(&eps, &IdealRep::unit(k)).unwrap(), Sign::Plus);
    }

    #[test]
    fn symbol_result_witnesses() {
        let k = f(37);
        let r = SymbolResult::evaluate(&k.int_elem(6, 1), &IdealRep::principal(&k.elem(11, 1).unwrap())).unwrap();
        assert_eq!(r.value, Sign::Plus);
        assert!(r.is_consistent());
    }

    #[test]
    fn residue_symbol_errors() {
        let k = f(5);
        let (q, _) = split_prime(k, 29).unwrap();
        let gen = principal_generator(&q.to_ideal()).unwrap().unwrap();
        assert_eq!(residue_symbol(&gen, &q), Err(Error::NotCoprime));
        let (l, _) = split_prime(f(17), 2).unwrap();
        assert_eq!(residue_symbol(&f(17).one(), &l), Err(Error::UnsupportedIdeal));
        let nine = IdealRep::principal(&k.integer(3));
        assert_eq!(residue_symbol_ideal(&k.one(), &nine), Err(Error::UnsupportedIdeal));
        let (q11, _) = split_prime(k, 11).unwrap();
        let sq = q11.to_ideal().pow(2);
        assert_eq!(residue_symbol_ideal(&k.one(), &sq), Err(Error::UnsupportedIdeal));
    }

    #[test]
    fn squares_have_symbol_one() {
        let k = f(89);
        let (q, _) = split_prime(k, 17).unwrap();
        for (x, y) in [(1, 1), (3, 1), (5, 3), (2, 0), (0, 2)] {
            let a = k.elem(x, y).unwrap();
            assert_eq!(residue_symbol(&(&a * &a), &q).unwrap(), Sign::Plus);
        }
    }

    #[test]
    fn eps_symbol_examples() {
        assert_eq!(eps_symbol(5, 29).unwrap(), Sign::Plus);
        assert_eq!(eps_symbol(13, 17).unwrap(), Sign::Minus);
        assert_eq!(eps_symbol(17, 13).unwrap(), Sign::Minus);
        assert_eq!(eps_symbol(17, 89).unwrap(), Sign::Minus);
        assert!(eps_symbol(5, 13).is_err());
        let (q, _) = split_prime(f(5), 29).unwrap();
        assert_eq!(residue_symbol(&f(5).elem(1, 1).unwrap(), &q).unwrap(), Sign::Plus);
    }

    #[test]
    fn lambda_symbol_examples() {
        assert_eq!(lambda_symbol(17, 89).unwrap(), Sign::Plus);
        assert_eq!(lambda_symbol(89, 17).unwrap(), Sign::Plus);
        assert!(lambda_symbol(5, 29).is_err());
    }

    #[test]
    fn sqrt2_examples() {
        assert_eq!(sqrt2_symbols(17, 89).unwrap(), (Sign::Plus, Sign::Minus));
        let (rev, _) = sqrt2_symbols(89, 17).unwrap();
        assert_eq!(rev, Sign::Plus);
        // rescaling by a square unit leaves the symbol unchanged
        let k = f(2);
        let u2 = k.int_elem(1, 1).pow(2);
        let pi = &find_pi2(17).unwrap() * &u2;
        let rho = find_pi2(89).unwrap();
        assert_eq!(residue_symbol_principal(&pi, &rho).unwrap(), Sign::Plus);
    }

    #[test]
    fn eps_symbol_is_well_defined() {
        for (p, q) in pairs(400, 4) {
            let k = f(p as i64);
            let unit = fundamental_unit(p as i64).unwrap();
            let (a, b) = split_prime(k, q).unwrap();
            let s = residue_symbol(&unit.epsilon, &a).unwrap();
            assert_eq!(residue_symbol(&unit.epsilon, &b).unwrap(), s, "conj p={p} q={q}");
            assert_eq!(residue_symbol(&-&unit.epsilon, &a).unwrap(), s, "neg p={p} q={q}");
            let shifted = &unit.epsilon * &unit.epsilon.pow(2);
            assert_eq!(residue_symbol(&shifted, &a).unwrap(), s, "square p={p} q={q}");
        }
    }

    #[test]
    fn lambda_symbol_is_well_defined() {
        for (p, q) in pairs(700, 8) {
            let k = f(p as i64);
            let unit = fundamental_unit(p as i64).unwrap();
            let lambda = find_lambda(p).unwrap();
            let (a, b) = split_prime(k, q).unwrap();
            let s = residue_symbol(&lambda, &a).unwrap();
            assert_eq!(residue_symbol(&lambda, &b).unwrap(), s);
            assert_eq!(residue_symbol(&lambda.conj(), &a).unwrap(), s, "other prime above 2");
            let moved = &lambda * &unit.epsilon.pow(2);
            assert_eq!(residue_symbol(&moved, &a).unwrap(), s);
        }
    }

    #[test]
    fn scholz_identity_small() {
        for (p, q) in pairs(600, 4) {
            let quartic = quartic_symbol(p, q).unwrap() * quartic_symbol(q, p).unwrap();
            assert_eq!(eps_symbol(p, q).unwrap(), quartic, "p={p} q={q}");
        }
    }

    #[test]
    fn lambda_norm_exponent_is_odd() {
        for p in (17..1500u64).filter(|&p| p % 8 == 1 && is_prime(p)) {
            let h = class_number(p as i64).unwrap();
            let lambda = find_lambda(p).unwrap();
            assert_eq!(lambda.norm(), BigInt::one() << h);
            // a^2 - p b^2 = 4 N(lambda) = 2^(h+2)
            assert_eq!(lambda.norm() * 4u32, BigInt::one() << (h + 2));
            assert_eq!((h + 2) % 2, 1);
            assert!(lambda.is_totally_positive().unwrap());
        }
    }


    proptest::proptest! {
        #[test]
        fn symbol_is_multiplicative(x1 in -500i64..500, y1 in -500i64..500, x2 in -500i64..500, y2 in -500i64..500) {
            let k = f(37);
            let (big_q, _) = split_prime(k, 7).unwrap();
            let a = k.int_elem(x1, y1);
            let b = k.int_elem(x2, y2);
            match (residue_symbol(&a, &big_q), residue_symbol(&b, &big_q)) {
                (Ok(sa), Ok(sb)) => proptest::prop_assert_eq!(residue_symbol(&(&a * &b), &big_q).unwrap(), sa * sb),
                _ => proptest::prop_assert_eq!(residue_symbol(&(&a * &b), &big_q), Err(Error::NotCoprime)),
            }
        }
    }
}
