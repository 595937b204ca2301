//! Elements of the Cayley–Dickson algebras R, C, H, O over exact rationals.
//!
//! A [`CDElement`] is a coordinate vector over the canonical orthonormal
//! basis `{1, i, j, k, ...}` of dimension 1, 2, 4 or 8. The product is the
//! Cayley–Dickson doubling
//!
//! ```text
//! (a, b)(c, d) = (ac - conj(d) b,  da + b conj(c))
//! ```
//!
//! which on `{1, i, j, k}` reproduces the familiar quaternion table
//! (`ij = k`, `jk = i`, `ki = j`, `i^2 = j^2 = k^2 = -1`). The convention is
//! fixed here once so that every basis-product table in the repository is
//! reproducible bit for bit.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_ratio, int, ExactScalar};

pub const DIMS: [usize; 4] = [1, 2, 4, 8];

pub fn check_dim(dim: usize) -> Result<()> {
    if DIMS.contains(&dim) {
        Ok(())
    } else {
        Err(Error::BadDim(dim))
    }
}

/// Basis coordinate names used for display: `1, i, j, k` up to dimension 4,
/// `e0..e7` in dimension 8.
pub fn basis_name(dim: usize, index: usize) -> String {
    if dim <= 4 {
        ["1", "i", "j", "k"][index].to_string()
    } else {
        format!("e{index}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CDElement {
    coords: Vec<ExactScalar>,
}

impl CDElement {
    pub fn new(coords: Vec<ExactScalar>) -> Result<Self> {
        check_dim(coords.len())?;
        Ok(CDElement { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&n| int(n)).collect())
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(vec![ExactScalar::zero(); dim])
    }

    pub fn one(dim: usize) -> Result<Self> {
        Self::basis(dim, 0)
    }

    /// The `index`-th canonical basis vector.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        check_dim(dim)?;
        if index >= dim {
            return Err(Error::DimMismatch(index, dim));
        }
        let mut coords = vec![ExactScalar::zero(); dim];
        coords[index] = ExactScalar::one();
        Ok(CDElement { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ExactScalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ExactScalar {
        &self.coords[i]
    }

    pub fn set_coord(&mut self, i: usize, v: ExactScalar) {
        self.coords[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        CDElement {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Cayley–Dickson product. Panics if dimensions differ.
    pub fn cd_mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "cd_mul: dimension mismatch");
        CDElement {
            coords: mul_slices(&self.coords, &rhs.coords),
        }
    }

    /// Standard involution: negates every coordinate except the first.
    pub fn conjugate(&self) -> Self {
        let mut coords = self.coords.clone();
        for c in coords.iter_mut().skip(1) {
            *c = -std::mem::take(c);
        }
        CDElement { coords }
    }

    /// Inner product `(x|y) = Re(x conj(y))`, which on the canonical
    /// orthonormal basis is the coordinate dot product. Panics if dimensions
    /// differ.
    pub fn inner(&self, rhs: &Self) -> ExactScalar {
        assert_eq!(self.dim(), rhs.dim(), "inner: dimension mismatch");
        self.coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a * b)
            .fold(ExactScalar::zero(), |acc, t| acc + t)
    }

    /// Squared euclidean norm `||x||^2 = (x|x)`.
    pub fn norm_sq(&self) -> ExactScalar {
        self.inner(self)
    }

    pub fn re(&self) -> ExactScalar {
        self.coords[0].clone()
    }

    /// Split `x = Re(x)·1 + Im(x)`.
    pub fn re_im_split(&self) -> (ExactScalar, CDElement) {
        let mut im = self.clone();
        im.coords[0] = ExactScalar::zero();
        (self.coords[0].clone(), im)
    }

    pub fn im(&self) -> CDElement {
        self.re_im_split().1
    }

    pub fn is_imaginary(&self) -> bool {
        self.coords[0].is_zero()
    }

    /// Rational parametrization of the unit sphere: for purely imaginary `q`,
    /// `(1+q)^2 / (1+||q||^2)` has exactly unit norm and rational
    /// coordinates; `q = 0` maps to `1`. Unit parameters stay exact this way
    /// instead of approximating `e^{i·alpha}`.
    pub fn rational_unit(q: &CDElement) -> Result<CDElement> {
        if !q.is_imaginary() {
            return Err(Error::NotImaginary);
        }
        let s = q.norm_sq();
        // (1+q)^2 = 1 - ||q||^2 + 2q for imaginary q
        let mut u = q.scale(&int(2));
        u.coords[0] = ExactScalar::one() - &s;
        let denom = ExactScalar::one() + s;
        Ok(u.scale(&(ExactScalar::one() / denom)))
    }

    /// Multiplicative inverse `conj(x) / ||x||^2`, `None` for zero.
    pub fn inverse(&self) -> Option<CDElement> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(self.conjugate().scale(&(ExactScalar::one() / n)))
    }
}

fn conj_slice(x: &[ExactScalar]) -> Vec<ExactScalar> {
    let mut out = x.to_vec();
    for c in out.iter_mut().skip(1) {
        *c = -std::mem::take(c);
    }
    out
}

fn add_slices(x: &[ExactScalar], y: &[ExactScalar]) -> Vec<ExactScalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_slices(x: &[ExactScalar], y: &[ExactScalar]) -> Vec<ExactScalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn mul_slices(x: &[ExactScalar], y: &[ExactScalar]) -> Vec<ExactScalar> {
    let n = x.len();
    if n == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    // (a,b)(c,d) = (ac - conj(d) b, da + b conj(c))
    let lo = sub_slices(&mul_slices(a, c), &mul_slices(&conj_slice(d), b));
    let hi = add_slices(&mul_slices(d, a), &mul_slices(b, &conj_slice(c)));
    let mut out = lo;
    out.extend(hi);
    out
}

impl Add for &CDElement {
    type Output = CDElement;
    fn add(self, rhs: &CDElement) -> CDElement {
        assert_eq!(self.dim(), rhs.dim());
        CDElement {
            coords: add_slices(&self.coords, &rhs.coords),
        }
    }
}

impl Sub for &CDElement {
    type Output = CDElement;
    fn sub(self, rhs: &CDElement) -> CDElement {
        assert_eq!(self.dim(), rhs.dim());
        CDElement {
            coords: sub_slices(&self.coords, &rhs.coords),
        }
    }
}

impl Neg for &CDElement {
    type Output = CDElement;
    fn neg(self) -> CDElement {
        CDElement {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = basis_name(self.dim(), idx);
            if wrote {
                write!(f, " + ")?;
            }
            if idx == 0 {
                write!(f, "{}", format_ratio(c))?;
            } else if c.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}·{}", format_ratio(c), name)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CDElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn q(coords: [i64; 4]) -> CDElement {
        CDElement::from_ints(&coords).unwrap()
    }

    #[test]
    fn quaternion_basis_table() {
        let one = q([1, 0, 0, 0]);
        let i = q([0, 1, 0, 0]);
        let j = q([0, 0, 1, 0]);
        let k = q([0, 0, 0, 1]);
        assert_eq!(i.cd_mul(&j), k);
        assert_eq!(j.cd_mul(&k), i);
        assert_eq!(k.cd_mul(&i), j);
        assert_eq!(j.cd_mul(&i), -&k);
        assert_eq!(i.cd_mul(&i), -&one);
        assert_eq!(j.cd_mul(&j), -&one);
        assert_eq!(k.cd_mul(&k), -&one);
    }

    #[test]
    fn unit_element_is_neutral() {
        let mut rng = crate::rng::DetRng::new(7);
        for &dim in &DIMS {
            let one = CDElement::one(dim).unwrap();
            for _ in 0..10 {
                let x = rng.element(dim, 3);
                assert_eq!(one.cd_mul(&x), x);
                assert_eq!(x.cd_mul(&one), x);
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        let one = q([1, 0, 0, 0]);
        assert_eq!(one.conjugate(), one);
        let i = q([0, 1, 0, 0]);
        assert_eq!(i.conjugate(), -&i);
        let x = CDElement::new(vec![frac(3, 5), frac(4, 5), int(0), int(0)]).unwrap();
        let expected = CDElement::new(vec![frac(3, 5), frac(-4, 5), int(0), int(0)]).unwrap();
        assert_eq!(x.conjugate(), expected);
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn inner_examples() {
        let i = q([0, 1, 0, 0]);
        let j = q([0, 0, 1, 0]);
        assert!(i.inner(&j).is_zero());
        let x = q([1, 1, 0, 0]);
        assert_eq!(x.inner(&x), int(2));
    }

    #[test]
    fn inner_equals_re_of_x_conj_y() {
        let mut rng = crate::rng::DetRng::new(11);
        for &dim in &[4usize, 8] {
            for _ in 0..25 {
                let x = rng.element(dim, 3);
                let y = rng.element(dim, 3);
                assert_eq!(x.inner(&y), x.cd_mul(&y.conjugate()).re());
            }
        }
    }

    #[test]
    fn re_im_split_examples() {
        let x = q([1, 1, 0, 0]);
        let (re, im) = x.re_im_split();
        assert_eq!(re, int(1));
        assert_eq!(im, q([0, 1, 0, 0]));
        let seven = q([7, 0, 0, 0]);
        let (re, im) = seven.re_im_split();
        assert_eq!(re, int(7));
        assert!(im.is_zero());
    }

    #[test]
    fn im_of_cube_identity() {
        // Im(a^3) = (3 Re(a)^2 + Im(a)^2) Im(a) with Im(a)^2 = -||Im(a)||^2
        let mut rng = crate::rng::DetRng::new(13);
        for _ in 0..30 {
            let a = rng.element(4, 3);
            let a3 = a.cd_mul(&a).cd_mul(&a);
            let (re, im) = a.re_im_split();
            let coef = int(3) * &re * &re - im.norm_sq();
            assert_eq!(a3.im(), im.scale(&coef));
        }
    }

    #[test]
    fn rational_unit_examples() {
        let zero = CDElement::zero(4).unwrap();
        assert_eq!(
            CDElement::rational_unit(&zero).unwrap(),
            CDElement::one(4).unwrap()
        );

        let half_i = CDElement::new(vec![int(0), frac(1, 2), int(0), int(0)]).unwrap();
        let u = CDElement::rational_unit(&half_i).unwrap();
        let expected = CDElement::new(vec![frac(3, 5), frac(4, 5), int(0), int(0)]).unwrap();
        assert_eq!(u, expected);
        assert!(u.norm_sq().is_one());

        let i = q([0, 1, 0, 0]);
        assert_eq!(CDElement::rational_unit(&i).unwrap(), i);
        // cross-check against the defining product (1+i)^2 / 2
        let one_plus_i = q([1, 1, 0, 0]);
        let sq = one_plus_i.cd_mul(&one_plus_i);
        assert_eq!(sq.scale(&frac(1, 2)), i);

        let not_imaginary = q([1, 1, 0, 0]);
        assert!(CDElement::rational_unit(&not_imaginary).is_err());
    }

    #[test]
    fn norm_is_multiplicative_in_all_dims() {
        let mut rng = crate::rng::DetRng::new(17);
        for &dim in &DIMS {
            for _ in 0..25 {
                let x = rng.element(dim, 3);
                let y = rng.element(dim, 3);
                assert_eq!(x.cd_mul(&y).norm_sq(), x.norm_sq() * y.norm_sq());
            }
        }
    }

    #[test]
    fn involution_laws() {
        let mut rng = crate::rng::DetRng::new(19);
        for &dim in &[4usize, 8] {
            for _ in 0..20 {
                let x = rng.element(dim, 3);
                let y = rng.element(dim, 3);
                // involutive
                assert_eq!(x.conjugate().conjugate(), x);
                // linear
                assert_eq!((&x + &y).conjugate(), &x.conjugate() + &y.conjugate());
                // x conj(x) = conj(x) x
                assert_eq!(x.cd_mul(&x.conjugate()), x.conjugate().cd_mul(&x));
                // (xy)~ = conj(y) conj(x)
                assert_eq!(
                    x.cd_mul(&y).conjugate(),
                    y.conjugate().cd_mul(&x.conjugate())
                );
                // (conj(x)|conj(y)) = (x|y)
                assert_eq!(x.conjugate().inner(&y.conjugate()), x.inner(&y));
            }
        }
    }

    #[test]
    fn trace_form() {
        // The bilinear form Re(xy) is associative: Re((xy)z) = Re(x(yz)),
        // equivalently (xy|z) = (x|z conj(y)) for the inner product.
        let mut rng = crate::rng::DetRng::new(23);
        for &dim in &[4usize, 8] {
            for _ in 0..25 {
                let x = rng.element(dim, 3);
                let y = rng.element(dim, 3);
                let z = rng.element(dim, 3);
                assert_eq!(x.cd_mul(&y).cd_mul(&z).re(), x.cd_mul(&y.cd_mul(&z)).re());
                assert_eq!(
                    x.cd_mul(&y).inner(&z),
                    x.inner(&z.cd_mul(&y.conjugate()))
                );
            }
        }
    }

    #[test]
    fn triple_product_identity() {
        // yxy = 2(conj(x)|y) y - ||y||^2 conj(x), both associations
        let mut rng = crate::rng::DetRng::new(29);
        for &dim in &[4usize, 8] {
            for _ in 0..25 {
                let x = rng.element(dim, 3);
                let y = rng.element(dim, 3);
                let xbar = x.conjugate();
                let rhs = &y.scale(&(int(2) * xbar.inner(&y))) - &xbar.scale(&y.norm_sq());
                assert_eq!(y.cd_mul(&x).cd_mul(&y), rhs);
                assert_eq!(y.cd_mul(&x.cd_mul(&y)), rhs);
            }
        }
    }

    #[test]
    fn inverse_works() {
        let mut rng = crate::rng::DetRng::new(31);
        for _ in 0..10 {
            let x = rng.nonzero_element(4, 3);
            let inv = x.inverse().unwrap();
            assert_eq!(x.cd_mul(&inv), CDElement::one(4).unwrap());
            assert_eq!(inv.cd_mul(&x), CDElement::one(4).unwrap());
        }
        assert!(CDElement::zero(4).unwrap().inverse().is_none());
    }

    #[test]
    fn bad_dims_rejected() {
        assert!(CDElement::from_ints(&[1, 2, 3]).is_err());
        assert!(CDElement::zero(16).is_err());
    }
}
