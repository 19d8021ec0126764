//! Increasing, decreasing and all saturated chains of an interval.
//!
//! cargo run --example chains -- 124365 426153

use bruhat_involutions::chains::{all_saturated_chains, decreasing_chain, di, increasing_chain, Chain};
use bruhat_involutions::perm::Permutation;

fn show(chain: &Chain) -> String {
    let mut out = chain.elements[0].to_string();
    for (label, x) in chain.labels.iter().zip(&chain.elements[1..]) {
        out.push_str(&format!(" -{label}-> {x}"));
    }
    out
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: Permutation = args.next().as_deref().unwrap_or("124365").parse()?;
    let q: Permutation = args.next().as_deref().unwrap_or("426153").parse()?;

    println!("first differing position: {}", di(&p, &q)?);
    println!("increasing: {}", show(&increasing_chain(&p, &q)?));
    println!("decreasing: {}", show(&decreasing_chain(&p, &q)?));

    let chains = all_saturated_chains(&p, &q)?;
    println!("{} saturated chains:", chains.len());
    for c in &chains {
        let tag = match (c.is_increasing(), c.is_decreasing()) {
            (true, _) => "  (increasing)",
            (_, true) => "  (decreasing)",
            _ => "",
        };
        println!("  {}{tag}", show(c));
    }
    Ok(())
}
