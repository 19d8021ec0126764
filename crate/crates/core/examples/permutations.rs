//! Parse involutions, print their statistics, and count each size.
//!
//! cargo run --example permutations -- 426153

use bruhat_involutions::perm::{enumerate_involutions, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "426153".to_string());
    let p: Permutation = word.parse()?;
    let stats = p.statistics();
    println!("{p}: involution = {}", p.is_involution());
    println!("  inv = {}, exc = {}, fixed points = {:?}", stats.inv, stats.exc, stats.fixed);
    println!("  inverse = {}, square = {}", p.inverse(), p.compose(&p)?);

    for n in 1..=8 {
        let all = enumerate_involutions(n)?;
        let fpf = all.iter().filter(|x| x.fixed_point_count() == 0).count();
        println!("|I_{n}| = {:>4}   fixed-point-free: {fpf}", all.len());
    }
    Ok(())
}
