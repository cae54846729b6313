//! The supplementary law for the prime above 2, on one pair outside its
//! hypotheses and on the first pair that meets them.

use scholz::laws::{scholz_pairs, verify_supplement};

fn main() -> scholz::Result<()> {
    println!("{:#?}", verify_supplement(17, 89)?);
    for (p, q) in scholz_pairs(1, 1500, 1, 8) {
        let r = verify_supplement(p, q)?;
        if r.hypotheses_met {
            println!("{r:#?}");
            break;
        }
    }
    Ok(())
}
