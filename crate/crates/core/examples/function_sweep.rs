// Sweeping whole function spaces and comparing the gbent routes, plus identity verification.

use octal_gbent::sweep::{enumerate, verify_identities, SweepConfig};

pub fn run_example() -> octal_gbent::Result<()> {
    for n in [1, 2] {
        let s = enumerate(&SweepConfig::exhaustive(n))?;
        println!(
            "GB_{n}^8: {} functions, {} gbent, characterization accepts {}, tuple route agrees = {}",
            s.examined,
            s.gbent_direct,
            s.gbent_characterized,
            s.tuple_route_agrees()
        );
    }
    let s = enumerate(&SweepConfig::random(4, 20_000, 1))?;
    println!("4 variables, 20000 samples: {} gbent, agreement {}/{}", s.gbent_direct, s.agree, s.examined);

    let report = verify_identities(6, 20, 2)?;
    println!("identities on 6 variables: all passed = {}", report.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
