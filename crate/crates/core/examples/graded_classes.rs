//! Which unions of conjugacy classes of involutions are graded, and their ranks.
//!
//! cargo run --example graded_classes -- 6

use bruhat_involutions::classes::{
    class_view, global_rank_without_exceedances, is_graded_bruteforce, is_graded_theorem1, poset_rank, top_element,
    FixedPointSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).as_deref().unwrap_or("6").parse()?;
    println!("{:<18} {:>5} {:>7} {:>7} {:>6}  top", "class", "size", "shape", "brute", "rank");
    for spec in FixedPointSpec::all_for(n)? {
        let view = class_view(&spec);
        let brute = is_graded_bruteforce(&view);
        let rank = poset_rank(&spec).map(|r| r.to_string()).unwrap_or_else(|_| "-".into());
        println!(
            "{:<18} {:>5} {:>7} {:>7} {:>6}  {}",
            spec.to_string(),
            view.len(),
            is_graded_theorem1(&spec),
            brute.graded,
            rank,
            top_element(&spec)
        );
    }
    let fpf = FixedPointSpec::new(n, [n % 2])?;
    if let Some(global) = global_rank_without_exceedances(&fpf) {
        println!(
            "{fpf}: height {}; the closed expression without exc(top) would give {global}",
            poset_rank(&fpf)?
        );
    }
    Ok(())
}
