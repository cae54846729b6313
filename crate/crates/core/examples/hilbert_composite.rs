//! The five equivalent conditions for p = 3, q = 7 and r = 37 or r = 5.

use scholz::laws::{primary_ideals_of_norm, verify_hilbert_composite};
use scholz::QuadField;

fn main() -> scholz::Result<()> {
    for (p, q, r) in [(3, 7, 37), (3, 7, 5)] {
        let rec = verify_hilbert_composite(p, q, r)?;
        println!("({p}, {q}, {r}) clauses {:?} pass {}", rec.clauses(), rec.pass);
    }
    let primary = primary_ideals_of_norm(QuadField::new(37)?, 21)?;
    for a in primary {
        println!("primary ideal of norm 21 in Q(sqrt 37): {a}");
    }
    Ok(())
}
