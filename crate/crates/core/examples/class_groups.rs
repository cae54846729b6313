//! Narrow and wide class groups of real quadratic fields via cycles of
//! reduced forms, and the fourth-power test for the class of a prime above 2.

use scholz::forms::{class_group, ideal_class_of, is_fourth_power_wide};
use scholz::ideals::split_prime;
use scholz::QuadField;

fn main() -> scholz::Result<()> {
    for d in [5, 145, 221, 777, 1513] {
        let g = class_group(d)?;
        println!(
            "disc {d:>4}: h+ = {}, h = {}, N(eps) = {}, cycle representatives {:?}",
            g.narrow_class_number(),
            g.class_number(),
            g.unit_norm(),
            g.narrow_reps().iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }
    // 17 * 89: 2 splits, so its prime above 2 has a class in Cl(Q(sqrt 1513))
    let d = 17 * 89;
    let g = class_group(d)?;
    let (l, _) = split_prime(QuadField::from_disc(d)?, 2)?;
    let cls = ideal_class_of(&l.to_ideal(), &g)?;
    println!("class of {l} is a fourth power: {}", is_fourth_power_wide(cls, &g));
    Ok(())
}
