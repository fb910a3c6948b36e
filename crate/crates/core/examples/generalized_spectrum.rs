// Generalized Walsh-Hadamard spectra of octal functions, computed three independent ways, plus
// the subset formula over bit-planes for q = 2, 4, 8.

use octal_gbent::function::OctalFunction;
use octal_gbent::random::{random_octal, seeded};
use octal_gbent::transform::{component_wht_spectrum, gwht_butterfly};
use octal_gbent::{gwht_fast, gwht_naive, inverse_gwht};

pub fn run_example() -> octal_gbent::Result<()> {
    let f: OctalFunction = "0004".parse()?;
    let h = gwht_naive(&f);
    for (u, v) in h.values().iter().enumerate() {
        println!("H({u}) = {v}");
    }

    let mut rng = seeded(3);
    let g = random_octal(6, &mut rng)?;
    let direct = gwht_naive(&g);
    assert_eq!(gwht_butterfly(&g), direct);
    assert_eq!(gwht_fast(&g), direct);
    assert_eq!(inverse_gwht(&direct)?, g);
    assert_eq!(component_wht_spectrum(g.planes(), 8)?, direct);
    println!("6-variable function: naive, butterfly, four-spectrum and subset routes agree");
    println!("generalized Parseval: {}", direct.parseval_sum());

    let quaternary = OctalFunction::from_fn_mod8(3, |x| 2 * (x as i64 % 4))?;
    let q4 = component_wht_spectrum(&quaternary.planes()[..2], 4)?;
    println!("Z4 spectrum via bit-planes: H(0) = {}", q4[0]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
