//! Deterministic pseudorandom sampling.
//!
//! All randomized procedures (falsifiers, degree estimation, subalgebra
//! search) draw from this fixed splitmix64 generator so that identical
//! inputs and seeds produce byte-identical reports across platforms and
//! dependency upgrades.

use crate::cd::CDElement;
use crate::scalar::{frac, ExactScalar};

/// Published default seed: the ASCII bytes of "AVW1".
pub const DEFAULT_SEED: u64 = 0x4156_5731;

#[derive(Clone, Debug)]
pub struct DetRng {
    state: u64,
}

impl DetRng {
    pub fn new(seed: u64) -> Self {
        DetRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        // splitmix64
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn sign(&mut self) -> i8 {
        if self.next_u64() & 1 == 0 {
            1
        } else {
            -1
        }
    }

    /// Integer in `-height..=height`.
    pub fn small_int(&mut self, height: u64) -> i64 {
        self.below(2 * height + 1) as i64 - height as i64
    }

    /// Rational with numerator in `-height..=height` and denominator in `1..=height`.
    pub fn rational(&mut self, height: u64) -> ExactScalar {
        let n = self.small_int(height);
        let d = 1 + self.below(height) as i64;
        frac(n, d)
    }

    /// Element with rational coordinates of the given height.
    pub fn element(&mut self, dim: usize, height: u64) -> CDElement {
        let coords = (0..dim).map(|_| self.rational(height)).collect();
        CDElement::new(coords).expect("valid dim")
    }

    /// Nonzero element with rational coordinates of the given height.
    pub fn nonzero_element(&mut self, dim: usize, height: u64) -> CDElement {
        loop {
            let x = self.element(dim, height);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Purely imaginary element (zero first coordinate).
    pub fn imaginary(&mut self, dim: usize, height: u64) -> CDElement {
        let mut x = self.element(dim, height);
        x.set_coord(0, ExactScalar::from_integer(0.into()));
        x
    }

    /// Exactly unit-norm element, via the rational parametrization of the
    /// unit sphere applied to a random imaginary point.
    pub fn unit(&mut self, dim: usize, height: u64) -> CDElement {
        let q = self.imaginary(dim, height);
        CDElement::rational_unit(&q).expect("imaginary by construction")
    }

    /// Unit element that is also purely imaginary (for `q` imaginary with
    /// `||q||^2 = 1` the parametrization returns `q` itself, so instead draw
    /// a unit and strip/normalize would leave the rationals; use the square
    /// trick: the unit image of `q` has zero real part iff `||q|| = 1`).
    pub fn imaginary_unit(&mut self, _height: u64) -> CDElement {
        // Rational points on the unit sphere of Im(H): columns of
        // Pythagorean-like quadruples generated from two parameters.
        // (u^2+v^2-w^2, 2uw, 2vw, 0)-style triples normalized by u^2+v^2+w^2
        // stay on the sphere; simpler and exact: conjugate i by a random
        // rational unit p, which preserves the sphere of imaginary units.
        let p = self.unit(4, 3);
        let i = CDElement::basis(4, 1).expect("dim 4");
        let pi = p.cd_mul(&i);
        let pinv = p.inverse().expect("unit is invertible");
        pi.cd_mul(&pinv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn deterministic_for_fixed_seed() {
        let mut a = DetRng::new(DEFAULT_SEED);
        let mut b = DetRng::new(DEFAULT_SEED);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn unit_samples_have_unit_norm() {
        let mut rng = DetRng::new(1);
        for _ in 0..20 {
            let u = rng.unit(4, 3);
            assert!(u.norm_sq().is_one());
        }
    }

    #[test]
    fn imaginary_unit_samples_are_imaginary_units() {
        let mut rng = DetRng::new(2);
        for _ in 0..20 {
            let u = rng.imaginary_unit(3);
            assert!(u.norm_sq().is_one());
            assert!(u.coord(0).is_zero());
        }
    }
}
