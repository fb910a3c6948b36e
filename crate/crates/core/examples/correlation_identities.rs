// Crosscorrelation, autocorrelation and the identities linking them to the spectra.

use octal_gbent::correlation::{autocorr_gen, corr_identity_check, crosscorr_bool, gbent_by_autocorr};
use octal_gbent::function::{BooleanFunction, OctalFunction};
use octal_gbent::random::{random_octal, seeded};

pub fn run_example() -> octal_gbent::Result<()> {
    let f: BooleanFunction = "0001".parse()?;
    let g: BooleanFunction = "0110".parse()?;
    println!("C(x1x2, x1+x2) = {:?}", crosscorr_bool(&f, &g)?.values());

    let h: OctalFunction = "02".parse()?;
    let ac = autocorr_gen(&h);
    println!("autocorrelation of 02: {}, {}", ac[0], ac[1]);
    println!("02 gbent by autocorrelation: {}", gbent_by_autocorr(&h));

    let mut rng = seeded(11);
    let (a, b) = (random_octal(5, &mut rng)?, random_octal(5, &mut rng)?);
    let report = corr_identity_check(&a, &b)?;
    for c in &report.checks {
        println!("{:<34} {}", c.name, if c.passed { "ok" } else { "FAILED" });
    }
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
