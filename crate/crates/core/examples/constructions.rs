// Gbent functions built from bent ingredients, and searches for ingredients.

use octal_gbent::classify::is_gbent_direct;
use octal_gbent::construct::{find_twisted_triple_exhaustive, find_twisted_triple_mm};
use octal_gbent::function::BooleanFunction;
use octal_gbent::random::seeded;
use octal_gbent::{ConstructionRecipe, Epsilon, Kind};

fn b(s: &str) -> BooleanFunction {
    s.parse().unwrap()
}

pub fn run_example() -> octal_gbent::Result<()> {
    let and = b("0001");
    let x1 = b("0101");

    let full = ConstructionRecipe::new(Kind::OneVarFull, and.clone(), None, and.clone(), Some(Epsilon::Plus))?;
    let f = full.construct()?;
    println!("{}: {f} gbent = {}", Kind::OneVarFull, is_gbent_direct(&f).is_gbent());

    let plain = ConstructionRecipe::new(Kind::OneVarPlain, x1.clone(), None, and.clone(), Some(Epsilon::Plus))?;
    let h = plain.construct()?;
    println!("{}: {h} gbent = {}", Kind::OneVarPlain, is_gbent_direct(&h).is_gbent());

    let signed = ConstructionRecipe::new(Kind::TwoVarSigned, x1.clone(), Some(x1.clone()), and.clone(), Some(Epsilon::Plus))?;
    let s = signed.construct()?;
    println!("{}: {s} gbent = {}", Kind::TwoVarSigned, is_gbent_direct(&s).is_gbent());

    let rejected = ConstructionRecipe::new(Kind::TwoVarSigned, x1.clone(), Some(x1), and, Some(Epsilon::Minus))?;
    match rejected.check_hypotheses() {
        Ok(()) => println!("ε = -1 accepted"),
        Err(e) => println!("ε = -1 rejected: {e}"),
    }

    for n in [2, 4] {
        let out = find_twisted_triple_exhaustive(n)?;
        println!(
            "twisted triples on {n} variables: found = {}, examined = {}, all-bent misses = {}",
            out.triple.is_some(),
            out.examined,
            out.near_misses
        );
    }
    let out = find_twisted_triple_mm(6, 2000, &mut seeded(5))?;
    println!("Maiorana-McFarland search on 6 variables: found = {}, misses = {}", out.triple.is_some(), out.near_misses);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
