// Walsh-Hadamard spectra of Boolean functions: fast and naive transforms, inversion, Parseval.

use octal_gbent::function::BooleanFunction;
use octal_gbent::random::{random_boolean, seeded};
use octal_gbent::{inverse_wht, wht_fast, wht_naive};

pub fn run_example() -> octal_gbent::Result<()> {
    let f: BooleanFunction = "0001".parse()?;
    let s = wht_fast(&f);
    println!("W(x1 x2) = {:?}", s.values());
    assert_eq!(s, wht_naive(&f));
    assert_eq!(inverse_wht(&s)?, f);

    let mut rng = seeded(7);
    let g = random_boolean(12, &mut rng)?;
    let sg = wht_fast(&g);
    assert_eq!(sg.parseval_sum(), 1 << 24);
    let max = sg.values().iter().map(|v| v.abs()).max().unwrap_or(0);
    println!("random 12-variable function: max |W| = {max}, nonlinearity = {}", (4096 - max) / 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
