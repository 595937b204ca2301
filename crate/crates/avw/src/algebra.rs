//! Finite-dimensional algebras given by an exact structure-constant tensor.
//!
//! `structure[i][j][k]` stores the coefficient of basis vector `e_k` in the
//! product `e_i ⊙ e_j`, so an arbitrary product is the bilinear contraction
//! of the tensor with the two coordinate vectors. Bilinearity is automatic;
//! norm multiplicativity `||xy||^2 = ||x||^2 ||y||^2` is a property of the
//! particular tensor and is checked, never assumed.

use num_traits::{One, Zero};

use crate::cd::{check_dim, CDElement};
use crate::error::Result;
use crate::factory::AlgebraSpec;
use crate::matrix::Mat;
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    structure: Vec<ExactScalar>, // dim^3, index (i*dim + j)*dim + k
    label: String,
    spec: Option<AlgebraSpec>,
}

impl Algebra {
    /// Build the tensor by evaluating the product on every basis pair.
    pub fn from_basis_products<F>(dim: usize, label: impl Into<String>, product: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> CDElement,
    {
        check_dim(dim)?;
        let mut structure = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                assert_eq!(p.dim(), dim, "basis product has wrong dimension");
                structure.extend(p.coords().iter().cloned());
            }
        }
        Ok(Algebra {
            dim,
            structure,
            label: label.into(),
            spec: None,
        })
    }

    /// The Cayley–Dickson algebra (R, C, H or O) itself as a structure tensor.
    pub fn cayley_dickson(dim: usize) -> Result<Self> {
        let label = match dim {
            1 => "R",
            2 => "C",
            4 => "H",
            _ => "O",
        };
        Self::from_basis_products(dim, label, |i, j| {
            let ei = CDElement::basis(dim, i).expect("dim checked");
            let ej = CDElement::basis(dim, j).expect("dim checked");
            ei.cd_mul(&ej)
        })
    }

    pub fn with_spec(mut self, spec: AlgebraSpec) -> Self {
        self.spec = Some(spec);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn spec(&self) -> Option<&AlgebraSpec> {
        self.spec.as_ref()
    }

    pub fn structure_coeff(&self, i: usize, j: usize, k: usize) -> &ExactScalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of the basis product `e_i ⊙ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> CDElement {
        let start = (i * self.dim + j) * self.dim;
        CDElement::new(self.structure[start..start + self.dim].to_vec()).expect("valid dim")
    }

    /// Product in this algebra: bilinear contraction of the structure tensor.
    /// Panics if dimensions differ.
    pub fn mul(&self, x: &CDElement, y: &CDElement) -> CDElement {
        assert_eq!(x.dim(), self.dim, "alg_mul: x dimension mismatch");
        assert_eq!(y.dim(), self.dim, "alg_mul: y dimension mismatch");
        let mut out = vec![ExactScalar::zero(); self.dim];
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                let base = (i * self.dim + j) * self.dim;
                for (k, out_k) in out.iter_mut().enumerate() {
                    let c = &self.structure[base + k];
                    if !c.is_zero() {
                        *out_k += c * &w;
                    }
                }
            }
        }
        CDElement::new(out).expect("valid dim")
    }

    /// Matrix of the multiplication operator `L_a` (column `j` is `a ⊙ e_j`)
    /// or `R_a` (column `j` is `e_j ⊙ a`) over the canonical basis.
    pub fn mul_operator_matrix(&self, a: &CDElement, side: Side) -> Mat {
        assert_eq!(a.dim(), self.dim, "operator matrix: dimension mismatch");
        let mut m = Mat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let ej = CDElement::basis(self.dim, j).expect("dim checked");
            let col = match side {
                Side::Left => self.mul(a, &ej),
                Side::Right => self.mul(&ej, a),
            };
            for (r, v) in col.coords().iter().enumerate() {
                m.set(r, j, v.clone());
            }
        }
        m
    }

    pub fn left_mul_matrix(&self, a: &CDElement) -> Mat {
        self.mul_operator_matrix(a, Side::Left)
    }

    pub fn right_mul_matrix(&self, a: &CDElement) -> Mat {
        self.mul_operator_matrix(a, Side::Right)
    }

    pub fn is_idempotent(&self, e: &CDElement) -> bool {
        !e.is_zero() && self.mul(e, e) == *e
    }

    /// Nonzero `e` with `e ⊙ e = e` and `L_e = R_e`.
    pub fn is_central_idempotent(&self, e: &CDElement) -> bool {
        self.is_idempotent(e) && self.left_mul_matrix(e) == self.right_mul_matrix(e)
    }

    /// Nonzero `e` with `e ⊙ e = e` and `L_e ∘ R_e = R_e ∘ L_e`.
    pub fn is_flexible_idempotent(&self, e: &CDElement) -> bool {
        if !self.is_idempotent(e) {
            return false;
        }
        let l = self.left_mul_matrix(e);
        let r = self.right_mul_matrix(e);
        l.mul(&r) == r.mul(&l)
    }

    /// `||x ⊙ y||^2 == ||x||^2 ||y||^2` at one rational point.
    pub fn norm_multiplicative_at(&self, x: &CDElement, y: &CDElement) -> bool {
        self.mul(x, y).norm_sq() == x.norm_sq() * y.norm_sq()
    }

    /// Spot-check norm multiplicativity on all basis pairs plus `trials`
    /// pseudorandom dense pairs. Exhaustive certainty comes from the
    /// symbolic identity engine; this is the cheap construction-time gate.
    pub fn check_norm_multiplicativity(&self, trials: usize, seed: u64) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ei = CDElement::basis(self.dim, i).expect("dim checked");
                let ej = CDElement::basis(self.dim, j).expect("dim checked");
                if !self.norm_multiplicative_at(&ei, &ej) {
                    return false;
                }
            }
        }
        let mut rng = crate::rng::DetRng::new(seed);
        for _ in 0..trials {
            let x = rng.element(self.dim, 3);
            let y = rng.element(self.dim, 3);
            if !self.norm_multiplicative_at(&x, &y) {
                return false;
            }
        }
        true
    }

    /// Scale every structure constant, clearing denominators when `s` is the
    /// lcm of them. Used by the symbolic engine; scaling the tensor scales
    /// both associations of a triple product by the same power, so identity
    /// verdicts are unchanged.
    pub fn scaled_structure(&self, s: &ExactScalar) -> Algebra {
        Algebra {
            dim: self.dim,
            structure: self.structure.iter().map(|c| c * s).collect(),
            label: self.label.clone(),
            spec: self.spec.clone(),
        }
    }

    /// Least common multiple of all structure-constant denominators.
    pub fn denominator_lcm(&self) -> ExactScalar {
        let mut lcm = num_bigint::BigInt::one();
        for c in &self.structure {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        ExactScalar::from_integer(lcm)
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra({}, dim {})", self.label, self.dim)
    }
}
