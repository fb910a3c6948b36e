// Deciding gbentness three ways: the exact spectrum, the component characterization and the
// admissible component patterns.

use octal_gbent::classify::{component_spectra, norm_from_components};
use octal_gbent::function::OctalFunction;
use octal_gbent::{is_gbent_by_tuples, is_gbent_characterized, is_gbent_direct};

fn report(table: &str) -> octal_gbent::Result<()> {
    let f: OctalFunction = table.parse()?;
    let direct = is_gbent_direct(&f);
    let characterized = is_gbent_characterized(&f);
    let tuples = is_gbent_by_tuples(&f);
    println!(
        "{table:>8}: direct = {}, characterized = {}, tuples = {}",
        direct.verdict_name(),
        characterized.verdict_name(),
        tuples.verdict_name()
    );
    if let Some(w) = &direct.witness {
        println!("          direct witness: {}", serde_json::to_string(w).unwrap());
    }
    Ok(())
}

pub fn run_example() -> octal_gbent::Result<()> {
    // On one variable the constant 00 has semibent components satisfying the product condition,
    // yet |H(0)|² = 4 ≠ 2.
    for table in ["02", "0004", "0126", "00", "01234567"] {
        report(table)?;
    }
    let f: OctalFunction = "0004".parse()?;
    let cs = component_spectra(&f);
    println!("4√2 |H(0)|² from components of 0004: {}", norm_from_components(&cs, 0));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
