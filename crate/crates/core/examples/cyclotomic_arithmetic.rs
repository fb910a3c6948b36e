// Exact arithmetic in Z[ζ8] and squared moduli in Z + Z√2.

use octal_gbent::{CycZ8, QuadNorm};

pub fn run_example() -> octal_gbent::Result<()> {
    let z = CycZ8::ZETA;
    println!("ζ^4 = {}", CycZ8::zeta_pow(4));
    println!("ζ - ζ³ = {} (√2)", CycZ8::SQRT2);
    assert_eq!(CycZ8::SQRT2 * CycZ8::SQRT2, CycZ8::from_int(2));

    let one_plus_zeta = CycZ8::ONE + z;
    let norm = one_plus_zeta.norm_sq();
    println!("|1 + ζ|² = {norm} ≈ {:.6}", norm.to_f64());
    assert_eq!(norm, QuadNorm::new(2, 1));

    let w = CycZ8::new(3, -1, 4, 1);
    let product = one_plus_zeta * w;
    assert_eq!(product.norm_sq(), norm * w.norm_sq());
    println!("|(1 + ζ) w|² = {} = |1 + ζ|² |w|²", product.norm_sq());

    let (re, im) = w.to_complex();
    println!("w = {w} ≈ {re:.6} + {im:.6}i, conj(w) = {}", w.conj());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
