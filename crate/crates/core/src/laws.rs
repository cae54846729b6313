//! Clause-by-clause verification of the reciprocity laws on concrete primes,
//! and deterministic sweeps over prime ranges.
//!
//! Each clause is computed by a separate pipeline (residue symbols, unit
//! normalization, class groups), so agreement between clauses is a genuine
//! cross-check rather than a restatement.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_prime, jacobi, legendre_sign, primes_matching, quartic_symbol, PrimeFilter, Sign};
use crate::error::{precondition, Error, Result};
use crate::forms::{class_group, class_number, ideal_class_of, is_fourth_power_wide};
use crate::ideals::{
    check_prime_1_mod_8, check_scholz_pair, find_rho, ideals_of_norm, principal_generator_with_unit, split_prime,
    IdealRep,
};
use crate::quadring::{fundamental_unit, unit_normalize, NormalizeGoal, QuadElem, QuadField, UnitInfo};
use crate::symbols::{eps_symbol, lambda_symbol, residue_symbol, residue_symbol_ideal, sqrt2_symbols};

/// A verification record that can be written as one CSV line.
pub trait Record: Serialize + Send {
    const HEADER: &'static str;
    fn csv_row(&self) -> String;
    /// False exactly when the record witnesses a violated identity.
    fn passed(&self) -> bool;
}

fn csv_bool(b: bool) -> String {
    b.to_string()
}

fn csv_opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "NA".to_string(), T::to_string)
}

/// Scholz's law for one pair: the three symbols agree and the symbol
/// decides both `h(pq) mod 4` and the existence of primary generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScholzRecord {
    pub p: u64,
    pub q: u64,
    pub eps_pq: Sign,
    pub eps_qp: Sign,
    pub quartic_product: Sign,
    pub h_pq_mod4: u64,
    pub primary_rho_exists: bool,
    pub primary_pi_exists: bool,
    pub pass: bool,
}

impl Record for ScholzRecord {
    const HEADER: &'static str = "p,q,eps_pq,eps_qp,quartic_product,h_pq_mod4,primary_rho_exists,primary_pi_exists,pass";

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.p,
            self.q,
            self.eps_pq,
            self.eps_qp,
            self.quartic_product,
            self.h_pq_mod4,
            csv_bool(self.primary_rho_exists),
            csv_bool(self.primary_pi_exists),
            csv_bool(self.pass)
        )
    }

    fn passed(&self) -> bool {
        self.pass
    }
}

/// Whether a generator of `q^h` in `Q(sqrt(p))` has an associate meeting
/// `goal`.
fn rho_meets(p: u64, q: u64, goal: NormalizeGoal, unit: &UnitInfo) -> Result<bool> {
    let rho = find_rho(p, q)?;
    Ok(unit_normalize(&rho, goal, unit)?.is_some())
}

pub fn verify_scholz(p: u64, q: u64) -> Result<ScholzRecord> {
    check_scholz_pair(p, q)?;
    let eps_pq = eps_symbol(p, q)?;
    let eps_qp = eps_symbol(q, p)?;
    let quartic_product = quartic_symbol(p, q)? * quartic_symbol(q, p)?;
    let h_pq_mod4 = class_number((p * q) as i64)? % 4;
    let primary_rho_exists = rho_meets(p, q, NormalizeGoal::Primary, &fundamental_unit(p as i64)?)?;
    let primary_pi_exists = rho_meets(q, p, NormalizeGoal::Primary, &fundamental_unit(q as i64)?)?;
    let plus = eps_pq.is_plus();
    let pass = eps_pq == eps_qp
        && eps_pq == quartic_product
        && plus == (h_pq_mod4 == 0)
        && plus == primary_rho_exists
        && primary_rho_exists == primary_pi_exists;
    Ok(ScholzRecord {
        p,
        q,
        eps_pq,
        eps_qp,
        quartic_product,
        h_pq_mod4,
        primary_rho_exists,
        primary_pi_exists,
        pass,
    })
}

/// The supplementary law for the prime above 2. Fields that only make sense
/// under `(eps_p / q) = +1` are `None` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupplementRecord {
    pub p: u64,
    pub q: u64,
    pub hypotheses_met: bool,
    pub lambda_pq: Sign,
    pub lambda_qp: Sign,
    pub chain_sqrt2: Sign,
    pub chain_sqrt_minus2: Sign,
    pub quartic_product: Sign,
    pub rho_hyper_primary: Option<bool>,
    pub two_class_is_fourth_power: Option<bool>,
    pub remark1_ok: bool,
    pub u_exponent: u64,
    pub pass: bool,
}

impl Record for SupplementRecord {
    const HEADER: &'static str = "p,q,hypotheses_met,lambda_pq,lambda_qp,chain_sqrt2,chain_sqrt_minus2,quartic_product,rho_hyper_primary,two_class_is_fourth_power,remark1_ok,u_exponent,pass";

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.p,
            self.q,
            csv_bool(self.hypotheses_met),
            self.lambda_pq,
            self.lambda_qp,
            self.chain_sqrt2,
            self.chain_sqrt_minus2,
            self.quartic_product,
            csv_opt(&self.rho_hyper_primary),
            csv_opt(&self.two_class_is_fourth_power),
            csv_bool(self.remark1_ok),
            self.u_exponent,
            csv_bool(self.pass)
        )
    }

    fn passed(&self) -> bool {
        self.pass
    }
}

/// Whether the class of the canonical prime above `ell` in `Q(sqrt(pq))` is
/// a fourth power in the wide class group.
fn prime_class_is_fourth_power(ell: u64, p: u64, q: u64) -> Result<bool> {
    let d = (p * q) as i64;
    let group = class_group(d)?;
    let (big_l, _) = split_prime(QuadField::from_disc(d)?, ell)?;
    let cls = ideal_class_of(&big_l.to_ideal(), &group)?;
    Ok(is_fourth_power_wide(cls, &group))
}

pub fn verify_supplement(p: u64, q: u64) -> Result<SupplementRecord> {
    check_prime_1_mod_8(p)?;
    check_prime_1_mod_8(q)?;
    check_scholz_pair(p, q)?;
    let hypotheses_met = eps_symbol(p, q)?.is_plus();
    let lambda_pq = lambda_symbol(p, q)?;
    let lambda_qp = lambda_symbol(q, p)?;
    let (chain_sqrt2, chain_sqrt_minus2) = sqrt2_symbols(p, q)?;
    let quartic_product = quartic_symbol(p, q)? * quartic_symbol(q, p)?;
    let remark1_ok = chain_sqrt2 * chain_sqrt_minus2 == quartic_product;
    let u_exponent = class_number(p as i64)? + 2;
    let (rho_hyper_primary, two_class_is_fourth_power) = if hypotheses_met {
        let unit = fundamental_unit(p as i64)?;
        (
            Some(rho_meets(p, q, NormalizeGoal::HyperPrimary, &unit)?),
            Some(prime_class_is_fourth_power(2, p, q)?),
        )
    } else {
        (None, None)
    };
    let mut pass = lambda_pq == chain_sqrt2 && remark1_ok && u_exponent % 2 == 1;
    if let (Some(hp), Some(fourth)) = (rho_hyper_primary, two_class_is_fourth_power) {
        pass &= lambda_pq == lambda_qp && lambda_pq.is_plus() == hp && hp == fourth;
    }
    Ok(SupplementRecord {
        p,
        q,
        hypotheses_met,
        lambda_pq,
        lambda_qp,
        chain_sqrt2,
        chain_sqrt_minus2,
        quartic_product,
        rho_hyper_primary,
        two_class_is_fourth_power,
        remark1_ok,
        u_exponent,
        pass,
    })
}

/// The five equivalent clauses for `p = q = 3 mod 4`, `r = 1 mod 4`,
/// `(pq / r) = +1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertCompositeRecord {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub eps_pq_r: Sign,
    pub p_on_r: Sign,
    pub r_ideal_primary: bool,
    pub h_pqr_mod4: u64,
    pub unique_primary_a: Option<bool>,
    pub eps_r_on_a: Option<Sign>,
    pub pass: bool,
}

impl HilbertCompositeRecord {
    /// Clause values in order (1) to (5).
    pub fn clauses(&self) -> [bool; 5] {
        [
            self.eps_pq_r.is_plus(),
            self.p_on_r.is_plus(),
            self.r_ideal_primary,
            self.h_pqr_mod4 == 0,
            self.unique_primary_a == Some(true) && self.eps_r_on_a == Some(Sign::Plus),
        ]
    }
}

impl Record for HilbertCompositeRecord {
    const HEADER: &'static str = "p,q,r,eps_pq_r,p_on_r,r_ideal_primary,h_pqr_mod4,unique_primary_a,eps_r_on_a,pass";

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.p,
            self.q,
            self.r,
            self.eps_pq_r,
            self.p_on_r,
            csv_bool(self.r_ideal_primary),
            self.h_pqr_mod4,
            csv_opt(&self.unique_primary_a),
            csv_opt(&self.eps_r_on_a),
            csv_bool(self.pass)
        )
    }

    fn passed(&self) -> bool {
        self.pass
    }
}

pub(crate) fn check_hilbert_triple(p: u64, q: u64, r: u64) -> Result<()> {
    for (name, v, residue) in [("p", p, 3), ("q", q, 3), ("r", r, 1)] {
        if !is_prime(v) {
            return Err(Error::NotPrime(v));
        }
        if v % 4 != residue {
            return precondition(format!("{name} = {v} is not {residue} mod 4"));
        }
    }
    if p == q {
        return precondition("p and q must differ");
    }
    if jacobi((p * q) as i64, r as i64)? != 1 {
        return precondition(format!("({}/{r}) != +1", p * q));
    }
    Ok(())
}

/// Whether `ideal` is primary in the sense that a generator of its `h`-th
/// power has a primary associate.
fn ideal_is_primary(ideal: &IdealRep, h: u64, unit: &UnitInfo) -> Result<bool> {
    let gen = principal_generator_with_unit(&ideal.pow(h), unit)?
        .ok_or_else(|| Error::Internal(format!("{ideal}^{h} is not principal")))?;
    Ok(unit_normalize(&gen, NormalizeGoal::Primary, unit)?.is_some())
}

/// Primary ideals of norm `n` in `field`, one per conjugate pair.
pub fn primary_ideals_of_norm(field: QuadField, n: u64) -> Result<Vec<IdealRep>> {
    let unit = fundamental_unit(field.m())?;
    let h = class_number(field.disc())?;
    let mut out = Vec::new();
    let mut seen = Vec::new();
    for ideal in ideals_of_norm(field, n) {
        if seen.contains(&ideal) {
            continue;
        }
        seen.push(ideal.conj());
        if ideal_is_primary(&ideal, h, &unit)? {
            out.push(ideal);
        }
    }
    Ok(out)
}

pub fn verify_hilbert_composite(p: u64, q: u64, r: u64) -> Result<HilbertCompositeRecord> {
    check_hilbert_triple(p, q, r)?;
    let pq = (p * q) as i64;
    let k = QuadField::new(pq)?;
    let unit_pq = fundamental_unit(pq)?;
    let (big_r, _) = split_prime(k, r)?;
    let eps_pq_r = residue_symbol(&unit_pq.epsilon, &big_r)?;
    let p_on_r = legendre_sign(p as i64, r)?;
    let r_ideal_primary = ideal_is_primary(&big_r.to_ideal(), class_number(k.disc())?, &unit_pq)?;
    let h_pqr_mod4 = class_number(pq * r as i64)? % 4;
    let (unique_primary_a, eps_r_on_a) = if p_on_r.is_plus() {
        let kr = QuadField::new(r as i64)?;
        let primary = primary_ideals_of_norm(kr, p * q)?;
        let eps_r = fundamental_unit(r as i64)?.epsilon;
        match primary.as_slice() {
            [a] => (Some(true), Some(residue_symbol_ideal(&eps_r, a)?)),
            _ => (Some(false), None),
        }
    } else {
        (None, None)
    };
    let mut record = HilbertCompositeRecord {
        p,
        q,
        r,
        eps_pq_r,
        p_on_r,
        r_ideal_primary,
        h_pqr_mod4,
        unique_primary_a,
        eps_r_on_a,
        pass: false,
    };
    let c = record.clauses();
    record.pass = c.iter().all(|&v| v == c[0]) && (!c[0] || unique_primary_a == Some(true));
    Ok(record)
}

/// Outcome of one exploration instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExplorationStatus {
    Ok,
    NoRepresentation,
    HypothesesUnmet,
}

impl std::fmt::Display for ExplorationStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExplorationStatus::Ok => "ok",
            ExplorationStatus::NoRepresentation => "no_representation",
            ExplorationStatus::HypothesesUnmet => "hypotheses_unmet",
        })
    }
}

/// Data for the odd analogue of the supplementary law: `[pi_l / rho_l]` in
/// `Q(sqrt(ell))` next to the fourth-power test for the prime above `ell` in
/// `Q(sqrt(pq))`. No identity is asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplorationRecord {
    pub ell: u64,
    pub p: u64,
    pub q: u64,
    pub symbol_ell: Option<Sign>,
    pub ell_class_is_fourth_power: Option<bool>,
    pub status: ExplorationStatus,
}

impl Record for ExplorationRecord {
    const HEADER: &'static str = "ell,p,q,symbol_ell,ell_class_is_fourth_power,status";

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.ell,
            self.p,
            self.q,
            csv_opt(&self.symbol_ell),
            csv_opt(&self.ell_class_is_fourth_power),
            self.status
        )
    }

    fn passed(&self) -> bool {
        true
    }
}

/// Generator of the canonical prime above `p` in `field`, totally positive
/// when some associate is.
fn prime_generator(field: QuadField, p: u64, unit: &UnitInfo) -> Result<Option<(QuadElem, IdealRep)>> {
    let (big_p, _) = split_prime(field, p)?;
    let ideal = big_p.to_ideal();
    let Some(gen) = principal_generator_with_unit(&ideal, unit)? else {
        return Ok(None);
    };
    let gen = unit_normalize(&gen, NormalizeGoal::TotallyPositive, unit)?.unwrap_or(gen);
    Ok(Some((gen, ideal)))
}

/// Exploration with any prime `ell`, including 2, for consistency checks.
pub(crate) fn explore_any_ell(ell: u64, p: u64, q: u64) -> Result<ExplorationRecord> {
    check_scholz_pair(p, q)?;
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if ell == p || ell == q {
        return precondition(format!("ell = {ell} must differ from p and q"));
    }
    let skipped = |status| ExplorationRecord {
        ell,
        p,
        q,
        symbol_ell: None,
        ell_class_is_fourth_power: None,
        status,
    };
    let field = QuadField::new(ell as i64)?;
    let d = field.disc();
    if jacobi(d, p as i64)? != 1 || jacobi(d, q as i64)? != 1 {
        return Ok(skipped(ExplorationStatus::HypothesesUnmet));
    }
    let unit = fundamental_unit(ell as i64)?;
    let (Some((pi, _)), Some((_, rho_ideal))) = (prime_generator(field, p, &unit)?, prime_generator(field, q, &unit)?)
    else {
        return Ok(skipped(ExplorationStatus::NoRepresentation));
    };
    Ok(ExplorationRecord {
        ell,
        p,
        q,
        symbol_ell: Some(residue_symbol_ideal(&pi, &rho_ideal)?),
        ell_class_is_fourth_power: Some(prime_class_is_fourth_power(ell, p, q)?),
        status: ExplorationStatus::Ok,
    })
}

/// Exploration for an odd prime `ell` distinct from `p` and `q`.
pub fn explore_odd_ell(ell: u64, p: u64, q: u64) -> Result<ExplorationRecord> {
    if ell == 2 {
        return precondition("ell must be odd");
    }
    explore_any_ell(ell, p, q)
}

/// Records in input order plus pass counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary<R> {
    pub total: usize,
    pub passed: usize,
    pub violations: Vec<R>,
}

impl<R: Record + Clone> Summary<R> {
    pub fn of(records: &[R]) -> Summary<R> {
        let violations: Vec<R> = records.iter().filter(|r| !r.passed()).cloned().collect();
        Summary {
            total: records.len(),
            passed: records.len() - violations.len(),
            violations,
        }
    }
}

/// Maps `f` over `items` on `workers` threads, preserving input order.
pub fn par_map<T, R, F>(items: &[T], workers: usize, f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    pool.install(|| items.par_iter().map(f).collect())
}

fn primes_in(min: u64, max: u64, residue: u64, modulus: u64) -> Vec<u64> {
    if max < min {
        return Vec::new();
    }
    primes_matching(&PrimeFilter::new(min, max, residue, modulus).expect("valid residue class"))
}

/// Pairs `p < q` in `[min, max]` of primes `= residue mod modulus` with
/// `(p/q) = +1`, ascending.
pub fn scholz_pairs(min: u64, max: u64, residue: u64, modulus: u64) -> Vec<(u64, u64)> {
    let ps = primes_in(min, max, residue, modulus);
    let mut out = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        for &q in &ps[i + 1..] {
            if jacobi(p as i64, q as i64) == Ok(1) {
                out.push((p, q));
            }
        }
    }
    out
}

pub fn sweep_scholz(min: u64, max: u64, workers: usize) -> Result<Vec<ScholzRecord>> {
    par_map(&scholz_pairs(min, max, 1, 4), workers, |&(p, q)| verify_scholz(p, q))
}

pub fn sweep_supplement(min: u64, max: u64, workers: usize) -> Result<Vec<SupplementRecord>> {
    par_map(&scholz_pairs(min, max, 1, 8), workers, |&(p, q)| verify_supplement(p, q))
}

/// Triples `p < q <= pq_max` with `p = q = 3 mod 4` and `r <= r_max`,
/// `r = 1 mod 4`, `(pq/r) = +1`, ascending.
pub fn hilbert_triples(pq_max: u64, r_max: u64) -> Vec<(u64, u64, u64)> {
    let ps = primes_in(3, pq_max, 3, 4);
    let rs = primes_in(5, r_max, 1, 4);
    let mut out = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        for &q in &ps[i + 1..] {
            for &r in &rs {
                if jacobi((p * q) as i64, r as i64) == Ok(1) {
                    out.push((p, q, r));
                }
            }
        }
    }
    out
}

pub fn sweep_hilbert(pq_max: u64, r_max: u64, workers: usize) -> Result<Vec<HilbertCompositeRecord>> {
    par_map(&hilbert_triples(pq_max, r_max), workers, |&(p, q, r)| verify_hilbert_composite(p, q, r))
}

/// Every Scholz pair `p < q <= max` not involving `ell`.
pub fn sweep_explore(ell: u64, max: u64, workers: usize) -> Result<Vec<ExplorationRecord>> {
    if ell == 2 || !is_prime(ell) {
        return precondition(format!("ell = {ell} must be an odd prime"));
    }
    let pairs: Vec<(u64, u64)> = scholz_pairs(5, max, 1, 4)
        .into_iter()
        .filter(|&(p, q)| p != ell && q != ell)
        .collect();
    par_map(&pairs, workers, |&(p, q)| explore_odd_ell(ell, p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::find_rho_with_exponent;

    #[test]
    fn scholz_examples() {
        let r = verify_scholz(5, 29).unwrap();
        assert_eq!((r.eps_pq, r.eps_qp, r.quartic_product), (Sign::Plus, Sign::Plus, Sign::Plus));
        assert_eq!(r.h_pq_mod4, 0);
        assert!(r.primary_rho_exists && r.pass);
        let r = verify_scholz(13, 17).unwrap();
        assert_eq!((r.eps_pq, r.eps_qp, r.quartic_product), (Sign::Minus, Sign::Minus, Sign::Minus));
        assert_eq!(r.h_pq_mod4, 2);
        assert!(!r.primary_rho_exists && r.pass);
        assert!(matches!(verify_scholz(5, 13), Err(Error::Precondition(_))));
    }

    #[test]
    fn scholz_is_symmetric() {
        for (p, q) in scholz_pairs(5, 300, 1, 4) {
            let a = verify_scholz(p, q).unwrap();
            let b = verify_scholz(q, p).unwrap();
            assert_eq!((a.eps_pq, a.eps_qp, a.pass), (b.eps_qp, b.eps_pq, b.pass));
            assert!(a.pass, "{a:?}");
        }
    }

    #[test]
    fn primary_choice_ignores_odd_exponent() {
        for (p, q) in scholz_pairs(5, 400, 1, 4) {
            let hp = class_number(p as i64).unwrap();
            let hq = class_number(q as i64).unwrap();
            if hq == 1 {
                continue;
            }
            let unit = fundamental_unit(p as i64).unwrap();
            let a = find_rho(p, q).unwrap();
            let b = find_rho_with_exponent(p, q, hp * hq).unwrap();
            let na = unit_normalize(&a, NormalizeGoal::Primary, &unit).unwrap().is_some();
            let nb = unit_normalize(&b, NormalizeGoal::Primary, &unit).unwrap().is_some();
            assert_eq!(na, nb, "p={p} q={q}");
        }
    }

    #[test]
    fn supplement_example() {
        let r = verify_supplement(17, 89).unwrap();
        assert!(!r.hypotheses_met);
        assert_eq!((r.lambda_pq, r.lambda_qp), (Sign::Plus, Sign::Plus));
        assert_eq!((r.chain_sqrt2, r.chain_sqrt_minus2), (Sign::Plus, Sign::Minus));
        assert_eq!(r.quartic_product, Sign::Minus);
        assert!(r.remark1_ok && r.pass);
        assert_eq!(r.rho_hyper_primary, None);
        assert!(verify_supplement(5, 29).is_err());
    }

    #[test]
    fn first_supplement_pair_with_hypotheses() {
        let r = scholz_pairs(5, 1500, 1, 8)
            .into_iter()
            .map(|(p, q)| verify_supplement(p, q).unwrap())
            .find(|r| r.hypotheses_met)
            .unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.rho_hyper_primary, Some(r.lambda_pq.is_plus()));
        assert_eq!(r.two_class_is_fourth_power, Some(r.lambda_pq.is_plus()));
    }

    #[test]
    fn hilbert_examples() {
        let r = verify_hilbert_composite(3, 7, 37).unwrap();
        assert_eq!(r.clauses(), [true; 5]);
        assert!(r.pass);
        let r = verify_hilbert_composite(3, 7, 5).unwrap();
        assert_eq!(r.clauses(), [false; 5]);
        assert_eq!((r.unique_primary_a, r.eps_r_on_a), (None, None));
        assert!(r.pass);
        assert!(verify_hilbert_composite(3, 7, 11).is_err());
    }

    #[test]
    fn exploration_statuses() {
        assert!(explore_odd_ell(3, 3, 13).is_err());
        assert!(explore_odd_ell(2, 17, 89).is_err());
        let r = explore_odd_ell(3, 13, 61).unwrap();
        assert!(matches!(r.status, ExplorationStatus::Ok | ExplorationStatus::HypothesesUnmet | ExplorationStatus::NoRepresentation));
        assert_eq!(r.symbol_ell.is_some(), r.status == ExplorationStatus::Ok);
    }

    #[test]
    fn exploration_with_two_matches_supplement() {
        for (p, q) in scholz_pairs(5, 700, 1, 8) {
            let s = verify_supplement(p, q).unwrap();
            let e = explore_any_ell(2, p, q).unwrap();
            assert_eq!(e.status, ExplorationStatus::Ok);
            assert_eq!(e.symbol_ell, Some(s.chain_sqrt2), "p={p} q={q}");
            if let Some(fourth) = s.two_class_is_fourth_power {
                assert_eq!(e.ell_class_is_fourth_power, Some(fourth));
            }
        }
    }

    #[test]
    fn sweep_order_is_worker_independent() {
        let a = sweep_scholz(5, 150, 1).unwrap();
        let b = sweep_scholz(5, 150, 3).unwrap();
        assert_eq!(a, b);
        assert!(sweep_scholz(100, 50, 2).unwrap().is_empty());
        let s = Summary::of(&a);
        assert_eq!((s.total, s.passed), (a.len(), a.len()));
    }

    #[test]
    fn csv_rows_have_header_arity() {
        let r = verify_hilbert_composite(3, 7, 5).unwrap();
        assert_eq!(r.csv_row().split(',').count(), HilbertCompositeRecord::HEADER.split(',').count());
        assert!(r.csv_row().contains(",NA,NA,"));
        let r = verify_supplement(17, 89).unwrap();
        assert_eq!(r.csv_row().split(',').count(), SupplementRecord::HEADER.split(',').count());
    }
}
