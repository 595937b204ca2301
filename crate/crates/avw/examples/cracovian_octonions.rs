//! The octonion-level constructions: rational isometries via the Cayley
//! transform, the twisted product x•y = f(x)f(y), the cracovian product
//! x⊙y = x*y, and their structural properties.

use avw::identity::{check_symbolic, IdentitySpec, OneVar};
use avw::lab::{degree_estimate, flexible_2dim, search_4dim_subalgebra, verify_closed};
use avw::{
    build, cayley_isometry, cracovian, published_isometry_seed, Algebra, AlgebraSpec, CDElement,
    DEFAULT_SEED,
};

fn main() {
    // a rational orthogonal matrix fixing 1, from the published skew seed
    let f = cayley_isometry(&published_isometry_seed());
    println!("f orthogonal: {}, f(1) = 1: {}", f.is_orthogonal(), {
        let one = CDElement::one(8).unwrap();
        f.apply(&one) == one
    });

    let of = build(&AlgebraSpec::Of { f }).unwrap();
    let one = CDElement::one(8).unwrap();
    let crac = cracovian(&of, &one).unwrap();
    println!("built {} and {}", of.label(), crac.label());

    // squares collapse to scalars: x ⊙ x = ||x||^2 · 1
    let x = CDElement::from_ints(&[1, 2, 0, -1, 0, 3, 0, 1]).unwrap();
    println!("x ⊙ x = {}   (||x||^2 = {})", crac.mul(&x, &x), x.norm_sq());

    // the two-variable identity holds symbolically; third power-associativity
    // fails with a witness
    let v = check_symbolic(&crac, IdentitySpec::TwoVarX2YX2);
    println!("\n(x^2, y, x^2) = 0 on {}: {}", crac.label(), v.holds);
    let v = check_symbolic(&crac, IdentitySpec::OneVar(OneVar::new(1, 2, 1).unwrap()));
    println!("(x, x^2, x) = 0 on {}: {}", crac.label(), v.holds);
    if let Some(w) = &v.witness {
        println!("  witness x = {}", w.x);
    }

    // 1 is a flexible idempotent and yields a verified 2-dim subalgebra
    let fx = flexible_2dim(&crac, &one).unwrap();
    let closed = verify_closed(&crac, &[one.clone(), fx.u.clone()]).unwrap();
    println!("\nflexible idempotent 1: 2-dim subalgebra closed = {closed}");

    // generic single generators fill all eight dimensions
    println!(
        "degree lower bound (20 samples): {}",
        degree_estimate(&crac, 20, DEFAULT_SEED)
    );

    // heuristic search finds quaternion subalgebras in O but none here
    let o = Algebra::cayley_dickson(8).unwrap();
    println!(
        "\n4-dim subalgebra in O (50 attempts):      found = {}",
        search_4dim_subalgebra(&o, 50, DEFAULT_SEED).unwrap().is_some()
    );
    println!(
        "4-dim subalgebra in {} (200 attempts): found = {}",
        crac.label(),
        search_4dim_subalgebra(&crac, 200, DEFAULT_SEED)
            .unwrap()
            .is_some()
    );
}
