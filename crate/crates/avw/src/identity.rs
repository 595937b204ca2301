//! Exact decision of associator identities.
//!
//! `check_symbolic` is the authority: it expands `(x^p, x^q, x^r)` (or the
//! two-variable `(x^2, y, x^2)`) with fully symbolic coordinates over the
//! algebra's structure tensor and declares the identity to hold iff every
//! coefficient of every coordinate polynomial vanishes. A failed check
//! carries a nonzero residual coefficient and, when the deterministic
//! integer-point scan finds one, a concrete witness re-checkable with plain
//! algebra multiplication.
//!
//! `check_sampled` is the fast randomized falsifier: sound when it reports
//! "fails", inconclusive when it reports "holds".
//!
//! Size bounds: a one-variable identity over a dimension-8 algebra expands
//! to degree at most 6 in 8 variables, at most C(13,6) = 1716 monomials per
//! coordinate; the two-variable identity reaches degree 5 in 16 variables
//! with at most 330·8 = 2640 monomials per coordinate. At eight coordinates
//! apiece that is a few tens of thousands of rational coefficients, so the
//! dense distributed representation in `poly` needs no sparsity tricks.

use std::fmt;

use num_traits::One;
use serde_json::json;

use crate::algebra::Algebra;
use crate::cd::CDElement;
use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::rng::DetRng;
use crate::scalar::{format_ratio, ExactScalar};

/// One-variable identity `(x^p, x^q, x^r) = 0` with `p, q, r` in `{1, 2}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OneVar {
    pub p: u8,
    pub q: u8,
    pub r: u8,
}

impl OneVar {
    /// The eight exponent triples in lexicographic order.
    pub const ALL: [OneVar; 8] = [
        OneVar { p: 1, q: 1, r: 1 },
        OneVar { p: 1, q: 1, r: 2 },
        OneVar { p: 1, q: 2, r: 1 },
        OneVar { p: 1, q: 2, r: 2 },
        OneVar { p: 2, q: 1, r: 1 },
        OneVar { p: 2, q: 1, r: 2 },
        OneVar { p: 2, q: 2, r: 1 },
        OneVar { p: 2, q: 2, r: 2 },
    ];

    pub fn new(p: u8, q: u8, r: u8) -> Result<Self> {
        if [p, q, r].iter().all(|&e| e == 1 || e == 2) {
            Ok(OneVar { p, q, r })
        } else {
            Err(Error::BadIdentity(format!("{p},{q},{r}")))
        }
    }

    /// `(p,q,r) -> (r,q,p)`, the mirror arising from the standard involution.
    pub fn reversed(self) -> OneVar {
        OneVar {
            p: self.r,
            q: self.q,
            r: self.p,
        }
    }

    fn mask_bit(self) -> u8 {
        let idx = Self::ALL.iter().position(|i| *i == self).expect("in ALL");
        1 << idx
    }
}

impl fmt::Display for OneVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.q, self.r)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IdentitySpec {
    OneVar(OneVar),
    /// `(x^2, y, x^2) = 0` in two variables.
    TwoVarX2YX2,
}

impl IdentitySpec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("x2yx2") {
            return Ok(IdentitySpec::TwoVarX2YX2);
        }
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() == 3 {
            let exps: Vec<u8> = parts
                .iter()
                .map(|p| p.parse::<u8>().map_err(|_| Error::BadIdentity(s.into())))
                .collect::<Result<_>>()?;
            return Ok(IdentitySpec::OneVar(OneVar::new(exps[0], exps[1], exps[2])?));
        }
        Err(Error::BadIdentity(s.into()))
    }
}

impl fmt::Display for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentitySpec::OneVar(id) => write!(f, "{id}"),
            IdentitySpec::TwoVarX2YX2 => write!(f, "x2yx2"),
        }
    }
}

impl From<OneVar> for IdentitySpec {
    fn from(id: OneVar) -> Self {
        IdentitySpec::OneVar(id)
    }
}

/// Subset of the eight one-variable identities satisfied by an algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Profile {
    mask: u8,
}

impl Profile {
    pub fn empty() -> Self {
        Profile { mask: 0 }
    }

    pub fn full() -> Self {
        Profile { mask: 0xff }
    }

    pub fn insert(&mut self, id: OneVar) {
        self.mask |= id.mask_bit();
    }

    pub fn contains(&self, id: OneVar) -> bool {
        self.mask & id.mask_bit() != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = OneVar> + '_ {
        OneVar::ALL.into_iter().filter(|id| self.contains(*id))
    }

    /// Image under `(p,q,r) -> (r,q,p)`.
    pub fn reversed(&self) -> Profile {
        let mut out = Profile::empty();
        for id in self.iter() {
            out.insert(id.reversed());
        }
        out
    }
}

impl FromIterator<OneVar> for Profile {
    fn from_iter<T: IntoIterator<Item = OneVar>>(iter: T) -> Self {
        let mut p = Profile::empty();
        for id in iter {
            p.insert(id);
        }
        p
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, id) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({id})")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Profile{self}")
    }
}

/// Algebra element with polynomial coordinates: one indeterminate per
/// coordinate of each symbolic variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgPoly {
    coords: Vec<MPoly>,
}

impl AlgPoly {
    /// Generic element whose coordinate `i` is the variable `offset + i`.
    pub fn generic(dim: usize, nvars: usize, offset: usize) -> AlgPoly {
        AlgPoly {
            coords: (0..dim).map(|i| MPoly::var(nvars, offset + i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[MPoly] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(MPoly::is_zero)
    }

    pub fn sub(&self, rhs: &AlgPoly) -> AlgPoly {
        AlgPoly {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

/// Product in `alg` lifted coordinate-wise to polynomial coordinates.
pub fn alg_mul_poly(alg: &Algebra, x: &AlgPoly, y: &AlgPoly) -> AlgPoly {
    let dim = alg.dim();
    assert_eq!(x.dim(), dim);
    assert_eq!(y.dim(), dim);
    let nvars = x.coords[0].nvars();
    let mut out = vec![MPoly::zero(nvars); dim];
    for i in 0..dim {
        if x.coords[i].is_zero() {
            continue;
        }
        for j in 0..dim {
            if y.coords[j].is_zero() {
                continue;
            }
            let prod = x.coords[i].mul(&y.coords[j]);
            for (k, out_k) in out.iter_mut().enumerate() {
                let c = alg.structure_coeff(i, j, k);
                out_k.add_scaled(&prod, c);
            }
        }
    }
    AlgPoly { coords: out }
}

/// `(x y) z - x (y z)` with symbolic coordinates.
pub fn associator_poly(alg: &Algebra, x: &AlgPoly, y: &AlgPoly, z: &AlgPoly) -> AlgPoly {
    let lhs = alg_mul_poly(alg, &alg_mul_poly(alg, x, y), z);
    let rhs = alg_mul_poly(alg, x, &alg_mul_poly(alg, y, z));
    lhs.sub(&rhs)
}

pub fn power2_poly(alg: &Algebra, x: &AlgPoly) -> AlgPoly {
    alg_mul_poly(alg, x, x)
}

/// `(x y) z - x (y z)` at a concrete point.
pub fn associator(alg: &Algebra, x: &CDElement, y: &CDElement, z: &CDElement) -> CDElement {
    let lhs = alg.mul(&alg.mul(x, y), z);
    let rhs = alg.mul(x, &alg.mul(y, z));
    &lhs - &rhs
}

/// `x y - y x`.
pub fn commutator(alg: &Algebra, x: &CDElement, y: &CDElement) -> CDElement {
    &alg.mul(x, y) - &alg.mul(y, x)
}

/// `x x` under the algebra product (no power-associativity assumed; the
/// square is the only power the identities need).
pub fn power2(alg: &Algebra, x: &CDElement) -> CDElement {
    alg.mul(x, x)
}

/// Concrete value of the identity's associator at a point. For one-variable
/// identities `point_y` is ignored.
pub fn identity_value(
    alg: &Algebra,
    id: IdentitySpec,
    x: &CDElement,
    y: Option<&CDElement>,
) -> CDElement {
    match id {
        IdentitySpec::OneVar(OneVar { p, q, r }) => {
            let x2 = power2(alg, x);
            let pick = |e: u8| if e == 1 { x } else { &x2 };
            associator(alg, pick(p), pick(q), pick(r))
        }
        IdentitySpec::TwoVarX2YX2 => {
            let x2 = power2(alg, x);
            associator(alg, &x2, y.expect("two-variable identity needs y"), &x2)
        }
    }
}

/// A concrete point where the identity's associator is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub x: CDElement,
    pub y: Option<CDElement>,
    /// The nonzero associator value at the point.
    pub value: CDElement,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub identity: IdentitySpec,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// One nonzero coefficient of the expanded associator, e.g.
    /// `coord 2: -2·x0^2*x1`.
    pub residual: Option<String>,
    /// Symbolic verdicts are authoritative; a sampled "holds" is tentative.
    pub authoritative: bool,
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        let witness = self.witness.as_ref().map(|w| {
            let mut points = vec![w.x.coords().iter().map(format_ratio).collect::<Vec<_>>()];
            if let Some(y) = &w.y {
                points.push(y.coords().iter().map(format_ratio).collect());
            }
            points
        });
        json!({
            "identity": self.identity.to_string(),
            "holds": self.holds,
            "witness": witness,
            "residual_monomial": self.residual,
            "mode": if self.authoritative { "symbolic" } else { "sampled" },
        })
    }
}

fn var_names(dim: usize) -> impl Fn(usize) -> String {
    move |i: usize| {
        if i < dim {
            format!("x{i}")
        } else {
            format!("y{}", i - dim)
        }
    }
}

/// Decide the identity by full symbolic expansion.
pub fn check_symbolic(alg: &Algebra, id: IdentitySpec) -> Verdict {
    let dim = alg.dim();
    // clearing denominators keeps the heavy polynomial arithmetic over
    // integers; both association orders scale by the same power of lambda
    let lambda = alg.denominator_lcm();
    let scaled = alg.scaled_structure(&lambda);
    let (diff, lambda_power) = match id {
        IdentitySpec::OneVar(OneVar { p, q, r }) => {
            let x = AlgPoly::generic(dim, dim, 0);
            let x2 = power2_poly(&scaled, &x);
            let pick = |e: u8| if e == 1 { &x } else { &x2 };
            let diff = associator_poly(&scaled, pick(p), pick(q), pick(r));
            (diff, (p + q + r - 1) as u32)
        }
        IdentitySpec::TwoVarX2YX2 => {
            let x = AlgPoly::generic(dim, 2 * dim, 0);
            let y = AlgPoly::generic(dim, 2 * dim, dim);
            let x2 = power2_poly(&scaled, &x);
            let diff = associator_poly(&scaled, &x2, &y, &x2);
            (diff, 4)
        }
    };
    if diff.is_zero() {
        return Verdict {
            identity: id,
            holds: true,
            witness: None,
            residual: None,
            authoritative: true,
        };
    }
    let mut scale_back = ExactScalar::one();
    for _ in 0..lambda_power {
        scale_back *= &lambda;
    }
    let names = var_names(dim);
    let residual = diff.coords().iter().enumerate().find_map(|(k, poly)| {
        poly.leading_term().map(|(m, c)| {
            format!(
                "coord {k}: {}·{}",
                format_ratio(&(c / &scale_back)),
                m.format(&names)
            )
        })
    });
    let witness = scan_witness(alg, id);
    Verdict {
        identity: id,
        holds: false,
        witness,
        residual,
        authoritative: true,
    }
}

/// Odometer over `{-2..2}^n` (then `{-3..3}^n`) in a fixed deterministic
/// order, small digits first, so reported witnesses are reproducible and
/// tend to be tiny. Since the associator of powers has degree at most 6 in
/// each variable, the widened 7-value grid is a guaranteed hitting set.
fn integer_points(n: usize, digits: &'static [i64]) -> impl Iterator<Item = Vec<i64>> {
    let mut idx = vec![0usize; n];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let point: Vec<i64> = idx.iter().map(|&d| digits[d]).collect();
        // advance odometer, leftmost digit fastest
        let mut carry = true;
        for slot in idx.iter_mut() {
            if !carry {
                break;
            }
            *slot += 1;
            if *slot == digits.len() {
                *slot = 0;
            } else {
                carry = false;
            }
        }
        if carry {
            done = true;
        }
        Some(point)
    })
}

fn element_from_digits(digits: &[i64]) -> CDElement {
    CDElement::from_ints(digits).expect("valid dim")
}

fn scan_witness(alg: &Algebra, id: IdentitySpec) -> Option<Witness> {
    const NARROW: &[i64] = &[0, 1, -1, 2, -2];
    const WIDE: &[i64] = &[0, 1, -1, 2, -2, 3, -3];
    let dim = alg.dim();
    for digits in [NARROW, WIDE] {
        match id {
            IdentitySpec::OneVar(_) => {
                for point in integer_points(dim, digits) {
                    if point.iter().all(|&d| d == 0) {
                        continue;
                    }
                    let x = element_from_digits(&point);
                    let value = identity_value(alg, id, &x, None);
                    if !value.is_zero() {
                        return Some(Witness {
                            x,
                            y: None,
                            value,
                        });
                    }
                }
            }
            IdentitySpec::TwoVarX2YX2 => {
                // the associator is linear in y, so basis vectors for y
                // suffice whenever any y works
                for point in integer_points(dim, digits) {
                    if point.iter().all(|&d| d == 0) {
                        continue;
                    }
                    let x = element_from_digits(&point);
                    for j in 0..dim {
                        let y = CDElement::basis(dim, j).expect("valid dim");
                        let value = identity_value(alg, id, &x, Some(&y));
                        if !value.is_zero() {
                            return Some(Witness {
                                x,
                                y: Some(y),
                                value,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Randomized falsifier: evaluates the associator at `trials` random
/// rational points of coordinate height at most 3. Sound for "fails";
/// a "holds" answer is tentative and flagged non-authoritative.
pub fn check_sampled(alg: &Algebra, id: IdentitySpec, trials: usize, seed: u64) -> Verdict {
    let mut rng = DetRng::new(seed);
    let dim = alg.dim();
    for _ in 0..trials.max(1) {
        let x = rng.element(dim, 3);
        let y = match id {
            IdentitySpec::TwoVarX2YX2 => Some(rng.element(dim, 3)),
            IdentitySpec::OneVar(_) => None,
        };
        let value = identity_value(alg, id, &x, y.as_ref());
        if !value.is_zero() {
            return Verdict {
                identity: id,
                holds: false,
                witness: Some(Witness { x, y, value }),
                residual: None,
                authoritative: true,
            };
        }
    }
    Verdict {
        identity: id,
        holds: true,
        witness: None,
        residual: None,
        authoritative: false,
    }
}

/// Exact subset of the eight one-variable identities the algebra satisfies.
pub fn identity_profile(alg: &Algebra) -> Profile {
    OneVar::ALL
        .into_iter()
        .filter(|&id| check_symbolic(alg, id.into()).holds)
        .collect()
}
