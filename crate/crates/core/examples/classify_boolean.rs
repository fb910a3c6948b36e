// Bent and semibent classification of Boolean functions.

use octal_gbent::classify::classify_boolean;
use octal_gbent::construct::{bent_functions, mm_bent};
use octal_gbent::function::BooleanFunction;

pub fn run_example() -> octal_gbent::Result<()> {
    for table in ["0001", "0000", "0110", "00010111", "01"] {
        let f: BooleanFunction = table.parse()?;
        let c = classify_boolean(&f);
        println!("{table:>8}: n = {}, bent = {:?}, semibent = {}", c.n, c.bent, c.semibent);
    }
    println!("bent functions on 4 variables: {}", bent_functions(4)?.len());

    let g: BooleanFunction = "0110".parse()?;
    let f = mm_bent(&[2, 0, 3, 1], &g)?;
    assert_eq!(classify_boolean(&f).bent, Some(true));
    println!("Maiorana-McFarland with π = (2 0 3 1): {f}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
