//! Write the Hasse diagram of a class as Graphviz DOT.
//!
//! cargo run --example hasse_dot -- 4 0,2 > f4.dot && dot -Tsvg f4.dot

use bruhat_involutions::classes::FixedPointSpec;
use bruhat_involutions::cli::{hasse, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().as_deref().unwrap_or("4").parse()?;
    let counts: Vec<usize> = args
        .next()
        .as_deref()
        .unwrap_or("0")
        .split(',')
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    let spec = FixedPointSpec::new(n, counts)?;
    print!("{}", hasse(&spec, Format::Dot).output);
    Ok(())
}
