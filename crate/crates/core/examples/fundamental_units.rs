//! Fundamental units from continued fractions, with their norms and periods.

use scholz::quadring::fundamental_unit;

fn main() -> scholz::Result<()> {
    for m in [2, 3, 5, 13, 37, 41, 89, 94, 199] {
        let u = fundamental_unit(m)?;
        println!("m = {m:>3}  eps = {}  norm {}  period {}", u.epsilon, u.norm, u.cf_period);
    }
    Ok(())
}
