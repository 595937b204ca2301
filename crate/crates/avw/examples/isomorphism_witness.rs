//! Decide isomorphism of principal isotopes exactly, with constructive
//! witnesses, and find conjugating elements for unit quaternions.

use avw::lab::{conjugacy_witness, isotope_isomorphic, transport_parameters};
use avw::{CDElement, DetRng, Isotope, IsotopeFamily};

fn main() {
    let one = CDElement::one(4).unwrap();
    let i = CDElement::basis(4, 1).unwrap();
    let j = CDElement::basis(4, 2).unwrap();

    // *H(i,1) and *H(j,1) are isomorphic: the solver returns p with
    // j p = eps (p i) and 1 p = delta (p 1)
    let from = Isotope::new(IsotopeFamily::H2, i.clone(), one.clone()).unwrap();
    let to = Isotope::new(IsotopeFamily::H2, j.clone(), one.clone()).unwrap();
    let w = isotope_isomorphic(&from, &to).unwrap();
    println!("{} ≅ {}", from.label(), to.label());
    println!("  p = {}, eps = {}, delta = {}", w.p, w.eps, w.delta);
    println!("  verification: {}", w.verify(&from, &to));

    // different families are never isomorphic
    let h = Isotope::new(IsotopeFamily::H1, one.clone(), one.clone()).unwrap();
    let hss = Isotope::new(IsotopeFamily::H4, one.clone(), one.clone()).unwrap();
    println!(
        "\n{} ≅ {}? {}",
        h.label(),
        hss.label(),
        isotope_isomorphic(&h, &hss).is_some()
    );

    // conjugacy of unit quaternions: same norm and same real part
    let v = conjugacy_witness(&i, &j).unwrap();
    println!("\nconjugacy i ~ j: v = {v}");
    println!("  j v = {}", j.cd_mul(&v));
    println!("  v i = {}", v.cd_mul(&i));

    // transported parameters always produce an isomorphic isotope
    let mut rng = DetRng::new(9);
    let base = Isotope::new(IsotopeFamily::H3, rng.unit(4, 2), rng.unit(4, 2)).unwrap();
    let p = rng.unit(4, 2);
    let moved = transport_parameters(&base, &p, 1, -1).unwrap();
    println!("\ntransport of {}:", base.label());
    println!("  -> {}", moved.label());
    println!(
        "  solver agrees: {}",
        isotope_isomorphic(&base, &moved).is_some()
    );
}
