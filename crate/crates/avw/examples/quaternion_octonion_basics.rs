//! Exact quaternion and octonion arithmetic: products, conjugation, the
//! inner product, and the rational parametrization of the unit sphere.

use avw::scalar::{frac, int};
use avw::{CDElement, DetRng};

fn main() {
    // the canonical basis of H: 1, i, j, k
    let i = CDElement::basis(4, 1).unwrap();
    let j = CDElement::basis(4, 2).unwrap();
    let k = CDElement::basis(4, 3).unwrap();

    println!("i * j     = {}", i.cd_mul(&j));
    println!("j * k     = {}", j.cd_mul(&k));
    println!("j * i     = {}", j.cd_mul(&i));
    println!("i * i     = {}", i.cd_mul(&i));
    println!("conj(i)   = {}", i.conjugate());
    println!("(i|j)     = {}", i.inner(&j));

    // exact unit-norm quaternions come from imaginary points, never from
    // floating-point normalization
    let q = {
        let mut q = CDElement::zero(4).unwrap();
        q.set_coord(1, frac(1, 2));
        q
    };
    let u = CDElement::rational_unit(&q).unwrap();
    println!("\nrational unit from q = {q}:  u = {u},  ||u||^2 = {}", u.norm_sq());

    // norm multiplicativity holds exactly at every rational point
    let mut rng = DetRng::new(1);
    let x = rng.element(8, 3);
    let y = rng.element(8, 3);
    println!("\noctonions x = {x}");
    println!("          y = {y}");
    println!("||xy||^2          = {}", x.cd_mul(&y).norm_sq());
    println!("||x||^2 * ||y||^2 = {}", x.norm_sq() * y.norm_sq());

    // the triple product identity y x y = 2 (conj(x)|y) y - ||y||^2 conj(x)
    let lhs = y.cd_mul(&x).cd_mul(&y);
    let rhs = &y.scale(&(int(2) * x.conjugate().inner(&y))) - &x.conjugate().scale(&y.norm_sq());
    println!("\ntriple product identity: {}", if lhs == rhs { "verified" } else { "FAILED" });
}
