//! Check the rise labelling for the EL property under both label orders.
//!
//! cargo run --example el_labelling -- 6

use bruhat_involutions::classes::{make_spec, FixedPointSpec};
use bruhat_involutions::el::{el_check, find_escaping_interval, labelled_class_view, LabelOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).as_deref().unwrap_or("6").parse()?;

    let fpf = make_spec(n, &[0])?;
    let all = FixedPointSpec::all_involutions(n)?;
    for spec in [&fpf, &all] {
        let view = labelled_class_view(spec);
        for order in [LabelOrder::StandardLex, LabelOrder::ReversedLex] {
            let check = el_check(&view, order)?;
            println!("{spec} ({} elements), {order}: {:?}", view.len(), check.status);
            if let Some(v) = check.violations.first() {
                println!("  e.g. [{}, {}]: {:?}", v.bottom, v.top, v.kind);
            }
        }
    }

    println!("length-2 intervals leaving the class:");
    for spec in FixedPointSpec::all_for(n)? {
        match find_escaping_interval(&spec) {
            Ok(Some(hit)) => println!(
                "  {spec}: {} < {} < {} ({:?} chain)",
                hit.bottom, hit.midpoint, hit.top, hit.kind
            ),
            Ok(None) => println!("  {spec}: none"),
            Err(_) => {}
        }
    }
    Ok(())
}
