//! Exact arithmetic in cyclotomic fields.
//!
//! `cargo run --example cyclotomic_arithmetic`

use nichols_weyl::exact::{cyclotomic_polynomial, euler_phi, CycNumber};

fn main() -> nichols_weyl::Result<()> {
    for n in [1, 2, 3, 4, 6, 8, 12] {
        println!("phi({n}) = {}, Phi_{n} coefficients = {:?}", euler_phi(n), cyclotomic_polynomial(n));
    }
    let z = CycNumber::zeta(12, 1);
    println!("zeta_12^12 = {}", z.pow(12));
    let i = z.pow(3);
    println!("zeta_12^3 squared = {}", &i * &i);
    let w = z.pow(4);
    let s = &(&CycNumber::one(12) + &w) + &w.pow(2);
    println!("1 + w + w^2 for w = zeta_3: {s}");
    let x = &CycNumber::from_int(12, 2) + &z;
    let inv = x.inverse()?;
    println!("(2 + zeta_12)^-1 = {inv}");
    println!("check: {}", &x * &inv);
    Ok(())
}
