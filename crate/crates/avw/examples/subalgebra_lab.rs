//! Subalgebra structure: the 2-dimensional embedding criteria, discovery
//! through flexible idempotents, closure verification, and single-generated
//! dimensions.

use avw::lab::{dim2_criteria, flexible_2dim, generated_dim, verify_closed};
use avw::{build, Algebra, AlgebraSpec, CDElement, Isotope, IsotopeFamily};

fn main() {
    let one = CDElement::one(4).unwrap();
    let i = CDElement::basis(4, 1).unwrap();
    let j = CDElement::basis(4, 2).unwrap();

    // parameter criteria for 2-dimensional subalgebras
    for iso in [
        Isotope::new(IsotopeFamily::H2, i.clone(), one.clone()).unwrap(),
        Isotope::new(IsotopeFamily::H4, i.clone(), j.clone()).unwrap(),
    ] {
        let c = dim2_criteria(&iso);
        println!("{:12} embeds: {:?}", iso.label(), c.names());
    }

    // closure verification is an exact linear-algebra question
    let h = Algebra::cayley_dickson(4).unwrap();
    println!("\nspan{{1, i}} closed in H:    {}", verify_closed(&h, &[one.clone(), i.clone()]).unwrap());
    println!(
        "span{{1, i, j}} closed in H: {}",
        verify_closed(&h, &[one.clone(), i.clone(), j.clone()]).unwrap()
    );

    // a flexible idempotent yields a 2-dimensional subalgebra through a
    // common rational eigenvector of L_e and R_e
    let star_h_star = build(&AlgebraSpec::isotope(4, one.clone(), one.clone()).unwrap()).unwrap();
    let f = flexible_2dim(&star_h_star, &one).unwrap();
    println!(
        "\n{}: u = {} (alpha = {}, beta = {}), u⊙u = {}",
        star_h_star.label(),
        f.u,
        f.alpha,
        f.beta,
        star_h_star.mul(&f.u, &f.u)
    );

    // single-generated subalgebras of H have dimension 1 or 2
    let x = CDElement::from_ints(&[1, 1, 0, 0]).unwrap();
    let (d, basis) = generated_dim(&h, &x).unwrap();
    println!("\ndim of subalgebra generated by 1+i in H: {d}");
    for v in &basis {
        println!("  basis: {v}");
    }
}
