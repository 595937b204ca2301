//! Classify principal isotopes against the class table and enumerate the
//! isomorphism classes satisfying each identity.

use avw::identity::OneVar;
use avw::lab::{classify, enumerate_classes};
use avw::scalar::frac;
use avw::{CDElement, Isotope, IsotopeFamily};

fn main() {
    let one = CDElement::one(4).unwrap();
    let i = CDElement::basis(4, 1).unwrap();
    let b = CDElement::new(vec![frac(5, 13), frac(12, 13), frac(0, 1), frac(0, 1)]).unwrap();

    for iso in [
        Isotope::new(IsotopeFamily::H1, one.clone(), one.clone()).unwrap(),
        Isotope::new(IsotopeFamily::H3, one.clone(), i.clone()).unwrap(),
        Isotope::new(IsotopeFamily::H2, one.clone(), b.clone()).unwrap(),
        Isotope::new(IsotopeFamily::H2, i.clone(), b.clone()).unwrap(),
    ] {
        println!("{:32} -> {}", iso.label(), classify(&iso));
    }

    // class counts per identity: 2, 2, 2, 2, 3, 3 and two infinite rows
    println!("\nclass counts:");
    for id in OneVar::ALL {
        let e = enumerate_classes(id, 6).unwrap();
        let n = match e.count {
            Some(n) => n.to_string(),
            None => "infinite".into(),
        };
        println!(
            "  N({id}) = {n:8}  ({} concrete pairwise non-isomorphic members materialized)",
            e.members.len()
        );
    }
}
