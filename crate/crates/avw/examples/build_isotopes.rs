//! Build algebras from declarative specs: the quaternions, their standard
//! and principal isotopes, and dimension-2 relatives.

use avw::scalar::frac;
use avw::{build, AlgebraSpec, CDElement, StandardKind};

fn main() {
    let one = CDElement::one(4).unwrap();
    let i = CDElement::basis(4, 1).unwrap();

    // the four principal isotope families at identity parameters reduce to
    // the four standard isotopes of H
    for n in 1..=4 {
        let spec = AlgebraSpec::isotope(n, one.clone(), one.clone()).unwrap();
        let alg = build(&spec).unwrap();
        println!("family {n} at (1,1): {:8}  i ⊙ 1 = {}", alg.label(), alg.mul(&i, &one));
    }

    // twisted parameters change the product table
    let b = CDElement::new(vec![frac(3, 5), frac(4, 5), frac(0, 1), frac(0, 1)]).unwrap();
    let spec = AlgebraSpec::isotope(2, one.clone(), b).unwrap();
    let alg = build(&spec).unwrap();
    println!("\n{}:", alg.label());
    for r in 0..4 {
        for c in 0..4 {
            println!("  e{r} ⊙ e{c} = {}", alg.basis_product(r, c));
        }
    }

    // the same machinery builds the dimension-2 algebras
    let star_c = build(&AlgebraSpec::Standard {
        kind: StandardKind::ConjLeft,
        dim: 2,
    })
    .unwrap();
    println!("\n{}: i ⊙ i = {}", star_c.label(), star_c.basis_product(1, 1));

    // every constructed algebra is checked for exact norm multiplicativity
    println!(
        "\nnorm multiplicativity spot-check on {}: {}",
        alg.label(),
        alg.check_norm_multiplicativity(100, 0)
    );

    // specs round-trip through JSON with rationals as exact strings
    println!("\nJSON form:\n{}", spec.to_json());
}
