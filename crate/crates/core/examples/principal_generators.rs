//! Principal generators by walking the cycle of reduced ideals, and the
//! elements of a given norm up to units.

use scholz::ideals::{elements_of_norm, find_lambda, find_rho, principal_generator, split_prime};
use scholz::QuadField;

fn main() -> scholz::Result<()> {
    let k = QuadField::new(5)?;
    let (q, _) = split_prime(k, 29)?;
    println!("{q} = ({})", principal_generator(&q.to_ideal())?.expect("h(5) = 1"));

    let k = QuadField::new(145)?;
    let (l, _) = split_prime(k, 2)?;
    println!("{l} principal: {}", principal_generator(&l.to_ideal())?.is_some());

    println!("rho(13, 17) = {}", find_rho(13, 17)?);
    for p in [17, 41, 89] {
        println!("lambda_{p} = {}", find_lambda(p)?);
    }

    let k = QuadField::new(37)?;
    let els: Vec<String> = elements_of_norm(k, 21)?.iter().map(ToString::to_string).collect();
    println!("norm +-21 in Q(sqrt 37): {}", els.join(", "));
    Ok(())
}
