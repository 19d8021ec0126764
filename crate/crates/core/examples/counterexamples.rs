//! Two chains of different lengths between the same endpoints, for classes
//! that are not graded.
//!
//! cargo run --example counterexamples -- 8

use bruhat_involutions::classes::{gapped_counts_witness, isolated_count_witness, NonGradedWitness};

fn print(w: &NonGradedWitness) {
    println!("{}: {} .. {} (verified: {})", w.spec, w.bottom, w.top, w.verified);
    for (name, chain) in [("long", &w.long_chain), ("short", &w.short_chain)] {
        let words: Vec<String> = chain.elements.iter().map(ToString::to_string).collect();
        println!("  {name:<5} {}  fixed points {:?}", words.join(" < "), chain.fixed_point_profile());
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).as_deref().unwrap_or("8").parse()?;
    for i in (2..=n.saturating_sub(4)).filter(|i| i % 2 == n % 2) {
        print(&isolated_count_witness(n, i)?);
    }
    for m in 1..=n.saturating_sub(4) / 2 {
        for i in (2..=n).filter(|i| i % 2 == n % 2) {
            if let Ok(w) = gapped_counts_witness(n, i, m) {
                print(&w);
            }
        }
    }
    Ok(())
}
