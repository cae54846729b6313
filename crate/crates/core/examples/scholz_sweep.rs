//! Scholz's reciprocity law over all admissible pairs up to a bound, on
//! several threads. Usage: `cargo run --release --example scholz_sweep [max] [workers]`.

use scholz::laws::{sweep_scholz, Summary};

fn main() -> scholz::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("numeric argument"));
    let max = args.next().unwrap_or(500);
    let workers = args.next().unwrap_or(4) as usize;
    let records = sweep_scholz(1, max, workers)?;
    let plus = records.iter().filter(|r| r.eps_pq.is_plus()).count();
    let summary = Summary::of(&records);
    println!("pairs: {}, passed: {}, symbol +1: {plus}", summary.total, summary.passed);
    for r in records.iter().take(5) {
        println!("{r:?}");
    }
    Ok(())
}
