//! Residue symbols: Scholz's (eps_p/q), the 2-adic (lambda_p/q), and the
//! symbols in Z[sqrt 2] and Z[sqrt -2].

use scholz::arith::quartic_symbol;
use scholz::symbols::{eps_symbol, lambda_symbol, residue_symbol_principal, sqrt2_symbols};
use scholz::QuadField;

fn main() -> scholz::Result<()> {
    for (p, q) in [(5, 29), (13, 17), (17, 89)] {
        let quartic = quartic_symbol(p, q)? * quartic_symbol(q, p)?;
        println!(
            "(eps_{p}/{q}) = {}  (eps_{q}/{p}) = {}  (p/q)_4 (q/p)_4 = {quartic}",
            eps_symbol(p, q)?,
            eps_symbol(q, p)?
        );
    }
    let (p, q) = (17, 89);
    let (plain, star) = sqrt2_symbols(p, q)?;
    println!(
        "(lambda_{p}/{q}) = {}  (lambda_{q}/{p}) = {}  [pi2/rho2] = {plain}  [pi2*/rho2*] = {star}",
        lambda_symbol(p, q)?,
        lambda_symbol(q, p)?
    );

    let k = QuadField::new(37)?;
    let eps = k.int_elem(6, 1);
    let beta = k.elem(11, 1)?;
    println!("[{eps} / ({beta})] = {}", residue_symbol_principal(&eps, &beta)?);
    println!("[{eps} / (13 + 2*sqrt(37))] = {}", residue_symbol_principal(&eps, &k.int_elem(13, 2))?);
    Ok(())
}
