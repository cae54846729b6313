//! Data for replacing 2 by an odd prime ell: the symbol [pi_l / rho_l] next
//! to whether the prime above ell is a fourth power in Cl(Q(sqrt pq)).

use scholz::laws::{sweep_explore, ExplorationStatus, Record};

fn main() -> scholz::Result<()> {
    for ell in [3, 5, 7] {
        let records = sweep_explore(ell, 300, 4)?;
        let ok: Vec<_> = records.iter().filter(|r| r.status == ExplorationStatus::Ok).collect();
        let agree = ok
            .iter()
            .filter(|r| r.symbol_ell.map(|s| s.is_plus()) == r.ell_class_is_fourth_power)
            .count();
        println!("ell = {ell}: {} rows, {} with data, symbol matches class test in {agree}", records.len(), ok.len());
        if let Some(r) = ok.first() {
            println!("  {}", r.csv_row());
        }
    }
    Ok(())
}
