//! Classify every rise of an involution and apply the covering transformation.
//!
//! cargo run --example covering_moves -- 124365

use bruhat_involutions::classes::rank_in_involutions;
use bruhat_involutions::moves::{classify_rise, covers, ict, RiseLabel};
use bruhat_involutions::perm::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "124365".to_string());
    let p: Permutation = word.parse()?;
    println!("{p} has rank {} in I_{}", rank_in_involutions(&p)?, p.n());

    for label in RiseLabel::all(p.n()) {
        let class = classify_rise(&p, label)?;
        if class.is_suitable() {
            println!("  {label}: {class:?}");
        }
    }

    println!("upper covers:");
    for (label, q) in covers(&p)? {
        let back = ict(&q, label)?.expect("inverse move exists");
        println!(
            "  {p} -{label}-> {q}   fixed points {} -> {}, inverse move gives {back}",
            p.fixed_point_count(),
            q.fixed_point_count()
        );
    }
    Ok(())
}
