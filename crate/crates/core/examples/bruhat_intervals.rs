//! Dot-criterion comparisons and intervals in the involution poset.
//!
//! cargo run --example bruhat_intervals -- 124365 426153

use bruhat_involutions::bruhat::{bruhat_leq, dot_table, interval};
use bruhat_involutions::perm::{enumerate_involutions, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: Permutation = args.next().as_deref().unwrap_or("124365").parse()?;
    let q: Permutation = args.next().as_deref().unwrap_or("426153").parse()?;

    let table = dot_table(&q);
    println!("dot table of {q} (row k, column l = #{{i <= k : q(i) >= l}}):");
    for k in 1..=q.n() {
        let row: Vec<String> = (1..=q.n()).map(|l| table.get(k, l).to_string()).collect();
        println!("  {}", row.join(" "));
    }

    println!("{p} <= {q}: {}", bruhat_leq(&p, &q)?);
    println!("{q} <= {p}: {}", bruhat_leq(&q, &p)?);

    let universe = enumerate_involutions(p.n())?;
    let between = interval(&p, &q, &universe)?;
    println!("[{p}, {q}] in I_{} has {} elements:", p.n(), between.len());
    for x in between {
        println!("  {x}");
    }
    Ok(())
}
