//! Decide associator identities symbolically, get witnesses for failures,
//! and compute identity profiles.

use avw::identity::{check_sampled, check_symbolic, identity_profile, IdentitySpec, OneVar};
use avw::{build, AlgebraSpec, CDElement, DEFAULT_SEED};

fn main() {
    let one = CDElement::one(4).unwrap();
    let h = build(&AlgebraSpec::isotope(1, one.clone(), one.clone()).unwrap()).unwrap();
    let star_h_star = build(&AlgebraSpec::isotope(4, one.clone(), one.clone()).unwrap()).unwrap();

    // H is associative: all eight identities hold, symbolically
    println!("profile of {}:   {}", h.label(), identity_profile(&h));
    println!(
        "profile of {}: {}",
        star_h_star.label(),
        identity_profile(&star_h_star)
    );

    // a failed identity comes with a residual monomial and a concrete,
    // re-checkable witness
    let v = check_symbolic(
        &star_h_star,
        IdentitySpec::OneVar(OneVar::new(1, 1, 2).unwrap()),
    );
    println!("\n(x,x,x^2) on {}: holds = {}", star_h_star.label(), v.holds);
    if let Some(w) = &v.witness {
        println!("  witness x = {}", w.x);
        println!("  associator value = {}", w.value);
    }
    if let Some(r) = &v.residual {
        println!("  residual = {r}");
    }

    // the sampled falsifier is fast and sound for "fails", tentative for
    // "holds"
    let v = check_sampled(
        &star_h_star,
        IdentitySpec::OneVar(OneVar::new(2, 1, 2).unwrap()),
        8,
        DEFAULT_SEED,
    );
    println!(
        "\nsampled (x^2,x,x^2) on {}: holds = {} (authoritative: {})",
        star_h_star.label(),
        v.holds,
        v.authoritative
    );

    // JSON wire format of a verdict
    println!("\n{}", serde_json::to_string_pretty(&v.to_json()).unwrap());
}
