//! Constructs every supported algebra family as an exact structure-constant
//! [`Algebra`] from a declarative [`AlgebraSpec`].
//!
//! Families:
//!
//! * `CD` — the Cayley–Dickson algebra R, C, H, O itself.
//! * `H1(a,b) .. H4(a,b)` — principal isotopes of H with unit parameters,
//!   products `a x y b`, `conj(x) a y b`, `a x b conj(y)`,
//!   `a conj(x) conj(y) b`. Multi-factor products are parenthesized left to
//!   right, which is unambiguous because H is associative; fixing it makes
//!   the tensor reproducible bit for bit.
//! * `StarA` / `AStar` / `StarAStar` — standard isotopes with products
//!   `conj(x) y`, `x conj(y)`, `conj(x) conj(y)` in any dimension.
//! * `Of` — the normed space with product `f(x) f(y)` for a rational
//!   orthogonal `f` fixing 1.
//! * `Cracovian` — product `x* y` where `*` is the unique involution
//!   `x -> 2(x|e)e - x` attached to a central idempotent `e` of the base.
//!
//! Parameters must be exactly unit-norm rationals; the factory rejects
//! anything else instead of normalizing, since normalizing would introduce
//! irrationals. [`CDElement::rational_unit`] and [`cayley_isometry`] mint
//! valid inputs.

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Algebra;
use crate::cd::{check_dim, CDElement};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::{format_ratio, frac, parse_ratio, ExactScalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum IsotopeFamily {
    H1,
    H2,
    H3,
    H4,
}

impl IsotopeFamily {
    pub const ALL: [IsotopeFamily; 4] = [
        IsotopeFamily::H1,
        IsotopeFamily::H2,
        IsotopeFamily::H3,
        IsotopeFamily::H4,
    ];

    pub fn index(self) -> usize {
        match self {
            IsotopeFamily::H1 => 1,
            IsotopeFamily::H2 => 2,
            IsotopeFamily::H3 => 3,
            IsotopeFamily::H4 => 4,
        }
    }

    pub fn from_index(n: usize) -> Result<Self> {
        Ok(match n {
            1 => IsotopeFamily::H1,
            2 => IsotopeFamily::H2,
            3 => IsotopeFamily::H3,
            4 => IsotopeFamily::H4,
            _ => return Err(Error::BadSpec(format!("isotope family index {n}"))),
        })
    }

    /// Display name of the family at identity parameters: H, *H, H*, *H*.
    pub fn base_name(self) -> &'static str {
        match self {
            IsotopeFamily::H1 => "H",
            IsotopeFamily::H2 => "*H",
            IsotopeFamily::H3 => "H*",
            IsotopeFamily::H4 => "*H*",
        }
    }

    /// "H(", "*H(", ... prefix for labelled parameters.
    fn param_label(self, a: &CDElement, b: &CDElement) -> String {
        format!("{}({}, {})", self.base_name(), a, b)
    }
}

/// A principal isotope of H: family index plus the two unit parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Isotope {
    pub family: IsotopeFamily,
    pub a: CDElement,
    pub b: CDElement,
}

impl Isotope {
    pub fn new(family: IsotopeFamily, a: CDElement, b: CDElement) -> Result<Self> {
        if a.dim() != 4 || b.dim() != 4 {
            return Err(Error::BadSpec(
                "principal isotope parameters must be quaternions (dim 4)".into(),
            ));
        }
        if !a.norm_sq().is_one() {
            return Err(Error::NotUnit {
                name: "a",
                norm_sq: format_ratio(&a.norm_sq()),
            });
        }
        if !b.norm_sq().is_one() {
            return Err(Error::NotUnit {
                name: "b",
                norm_sq: format_ratio(&b.norm_sq()),
            });
        }
        Ok(Isotope { family, a, b })
    }

    pub fn from_ints(n: usize, a: [i64; 4], b: [i64; 4]) -> Result<Self> {
        Isotope::new(
            IsotopeFamily::from_index(n)?,
            CDElement::from_ints(&a)?,
            CDElement::from_ints(&b)?,
        )
    }

    pub fn label(&self) -> String {
        self.family.param_label(&self.a, &self.b)
    }

    /// The isotope product of two quaternions, parenthesized left to right.
    pub fn product(&self, x: &CDElement, y: &CDElement) -> CDElement {
        let (a, b) = (&self.a, &self.b);
        match self.family {
            // a x y b
            IsotopeFamily::H1 => a.cd_mul(x).cd_mul(y).cd_mul(b),
            // conj(x) a y b
            IsotopeFamily::H2 => x.conjugate().cd_mul(a).cd_mul(y).cd_mul(b),
            // a x b conj(y)
            IsotopeFamily::H3 => a.cd_mul(x).cd_mul(b).cd_mul(&y.conjugate()),
            // a conj(x) conj(y) b
            IsotopeFamily::H4 => a
                .cd_mul(&x.conjugate())
                .cd_mul(&y.conjugate())
                .cd_mul(b),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum StandardKind {
    /// `*A`: product `conj(x) y`
    ConjLeft,
    /// `A*`: product `x conj(y)`
    ConjRight,
    /// `*A*`: product `conj(x) conj(y)`
    ConjBoth,
}

fn dim_letter(dim: usize) -> &'static str {
    match dim {
        1 => "R",
        2 => "C",
        4 => "H",
        _ => "O",
    }
}

impl StandardKind {
    pub fn label(self, dim: usize) -> String {
        let l = dim_letter(dim);
        match self {
            StandardKind::ConjLeft => format!("*{l}"),
            StandardKind::ConjRight => format!("{l}*"),
            StandardKind::ConjBoth => format!("*{l}*"),
        }
    }

    pub fn product(self, x: &CDElement, y: &CDElement) -> CDElement {
        match self {
            StandardKind::ConjLeft => x.conjugate().cd_mul(y),
            StandardKind::ConjRight => x.cd_mul(&y.conjugate()),
            StandardKind::ConjBoth => x.conjugate().cd_mul(&y.conjugate()),
        }
    }
}

/// Declarative description of an algebra; see the JSON format in the README.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlgebraSpec {
    Cd { dim: usize },
    Isotope(Isotope),
    Standard { kind: StandardKind, dim: usize },
    Of { f: Mat },
    Cracovian { base: Box<AlgebraSpec>, e: CDElement },
}

impl AlgebraSpec {
    pub fn isotope(n: usize, a: CDElement, b: CDElement) -> Result<Self> {
        Ok(AlgebraSpec::Isotope(Isotope::new(
            IsotopeFamily::from_index(n)?,
            a,
            b,
        )?))
    }

    pub fn dim(&self) -> usize {
        match self {
            AlgebraSpec::Cd { dim } => *dim,
            AlgebraSpec::Isotope(_) => 4,
            AlgebraSpec::Standard { dim, .. } => *dim,
            AlgebraSpec::Of { f } => f.rows(),
            AlgebraSpec::Cracovian { base, .. } => base.dim(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            AlgebraSpec::Cd { dim } => dim_letter(*dim).to_string(),
            AlgebraSpec::Isotope(iso) => iso.label(),
            AlgebraSpec::Standard { kind, dim } => kind.label(*dim),
            AlgebraSpec::Of { f } => {
                if *f == Mat::identity(f.rows()) {
                    format!("{}^id", dim_letter(f.rows()))
                } else {
                    format!("{}^f", dim_letter(f.rows()))
                }
            }
            AlgebraSpec::Cracovian { base, .. } => format!("({})_*", base.label()),
        }
    }

    pub fn as_isotope(&self) -> Result<&Isotope> {
        match self {
            AlgebraSpec::Isotope(iso) => Ok(iso),
            other => Err(Error::NotAnIsotope(other.label())),
        }
    }
}

/// Generator for rational linear isometries of the euclidean space fixing 1:
/// a skew-symmetric rational matrix with zero first row and column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsometrySeed {
    skew: Mat,
}

impl IsometrySeed {
    pub fn new(skew: Mat) -> Result<Self> {
        let n = skew.rows();
        if skew.cols() != n || check_dim(n).is_err() {
            return Err(Error::BadSkewSeed);
        }
        for r in 0..n {
            for c in 0..n {
                if skew.get(r, c) != &(-skew.get(c, r).clone()) {
                    return Err(Error::BadSkewSeed);
                }
                if (r == 0 || c == 0) && !skew.get(r, c).is_zero() {
                    return Err(Error::BadSkewSeed);
                }
            }
        }
        Ok(IsometrySeed { skew })
    }

    pub fn skew(&self) -> &Mat {
        &self.skew
    }

    /// Seed with entries `entries[(r, c)] = v` (and `-v` mirrored) on the
    /// imaginary block, everything else zero.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, ExactScalar)]) -> Result<Self> {
        let mut m = Mat::zeros(dim, dim);
        for (r, c, v) in entries {
            m.set(*r, *c, v.clone());
            m.set(*c, *r, -v.clone());
        }
        IsometrySeed::new(m)
    }
}

/// Cayley transform `f = (I - S)(I + S)^{-1}` of a skew seed: a rational
/// orthogonal matrix fixing 1. `I + S` is invertible for every skew `S`.
pub fn cayley_isometry(seed: &IsometrySeed) -> Mat {
    let n = seed.skew.rows();
    let i = Mat::identity(n);
    let plus = i.add(&seed.skew);
    let minus = i.sub(&seed.skew);
    let inv = plus
        .inverse()
        .expect("I + S is invertible for skew-symmetric S");
    minus.mul(&inv)
}

/// The skew seed published with the repository; its Cayley isometry is the
/// reference `f` for the octonion-level experiments (degree sampling and the
/// 4-dimensional subalgebra search).
pub fn published_isometry_seed() -> IsometrySeed {
    IsometrySeed::from_entries(
        8,
        &[
            (1, 2, frac(1, 1)),
            (1, 4, frac(1, 2)),
            (1, 6, frac(1, 7)),
            (2, 3, frac(1, 3)),
            (2, 5, frac(2, 1)),
            (3, 4, frac(1, 5)),
            (3, 7, frac(1, 2)),
            (4, 5, frac(2, 3)),
            (5, 6, frac(1, 5)),
            (6, 7, frac(3, 1)),
        ],
    )
    .expect("published seed is valid")
}

fn validate_isometry(f: &Mat) -> Result<()> {
    let n = f.rows();
    if f.cols() != n || check_dim(n).is_err() {
        return Err(Error::BadMatrixShape {
            expected: 8,
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    if !f.is_orthogonal() {
        return Err(Error::NotOrthogonal);
    }
    let one = CDElement::one(n).expect("valid dim");
    if f.apply(&one) != one {
        return Err(Error::DoesNotFixUnit);
    }
    Ok(())
}

/// Build the algebra described by `spec`: the structure tensor is computed
/// by evaluating the family product on all basis pairs.
pub fn build(spec: &AlgebraSpec) -> Result<Algebra> {
    let alg = match spec {
        AlgebraSpec::Cd { dim } => Algebra::cayley_dickson(*dim)?,
        AlgebraSpec::Isotope(iso) => {
            Isotope::new(iso.family, iso.a.clone(), iso.b.clone())?;
            Algebra::from_basis_products(4, iso.label(), |i, j| {
                let ei = CDElement::basis(4, i).expect("dim 4");
                let ej = CDElement::basis(4, j).expect("dim 4");
                iso.product(&ei, &ej)
            })?
        }
        AlgebraSpec::Standard { kind, dim } => {
            check_dim(*dim)?;
            Algebra::from_basis_products(*dim, kind.label(*dim), |i, j| {
                let ei = CDElement::basis(*dim, i).expect("dim checked");
                let ej = CDElement::basis(*dim, j).expect("dim checked");
                kind.product(&ei, &ej)
            })?
        }
        AlgebraSpec::Of { f } => {
            validate_isometry(f)?;
            let dim = f.rows();
            Algebra::from_basis_products(dim, spec.label(), |i, j| {
                let ei = CDElement::basis(dim, i).expect("dim checked");
                let ej = CDElement::basis(dim, j).expect("dim checked");
                f.apply(&ei).cd_mul(&f.apply(&ej))
            })?
        }
        AlgebraSpec::Cracovian { base, e } => {
            let base_alg = build(base)?;
            if e.dim() != base_alg.dim() {
                return Err(Error::DimMismatch(e.dim(), base_alg.dim()));
            }
            cracovian(&base_alg, e)?
        }
    };
    // absolute-valuedness is a property of the tensor: checked, never assumed
    if !alg.check_norm_multiplicativity(8, crate::rng::DEFAULT_SEED) {
        return Err(Error::NormNotMultiplicative(alg.label().to_string()));
    }
    Ok(alg.with_spec(spec.clone()))
}

/// The unique involution `x -> 2(x|e)e - x` attached to a nonzero central
/// idempotent `e`, returned as a matrix. The involution laws are verified
/// exactly on basis pairs before returning. The dimension-2 algebra with
/// product `conj(x) conj(y)` is rejected outright: the formula does produce
/// an involution there, but not the only one, so nothing built on
/// involution uniqueness may use it.
pub fn involution_from_idempotent(alg: &Algebra, e: &CDElement) -> Result<Mat> {
    if e.dim() != alg.dim() {
        return Err(Error::DimMismatch(e.dim(), alg.dim()));
    }
    if !alg.is_central_idempotent(e) {
        return Err(Error::NotCentralIdempotent(alg.label().to_string()));
    }
    if alg.dim() == 2 {
        let conj_both = build(&AlgebraSpec::Standard {
            kind: StandardKind::ConjBoth,
            dim: 2,
        })
        .expect("standard dim-2 build");
        if (0..2).all(|i| (0..2).all(|j| alg.basis_product(i, j) == conj_both.basis_product(i, j)))
        {
            return Err(Error::ConjBothDim2Excluded);
        }
    }
    let n = alg.dim();
    // star = 2 e e^T - I
    let mut star = Mat::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let mut v = ExactScalar::from_integer(2.into()) * e.coord(r) * e.coord(c);
            if r == c {
                v -= ExactScalar::one();
            }
            star.set(r, c, v);
        }
    }
    // involutive
    if star.mul(&star) != Mat::identity(n) {
        return Err(Error::NotAnInvolution(alg.label().to_string()));
    }
    let s = |k: usize| star.apply(&CDElement::basis(n, k).expect("dim checked"));
    for i in 0..n {
        for j in 0..n {
            let ei = CDElement::basis(n, i).expect("dim checked");
            let ej = CDElement::basis(n, j).expect("dim checked");
            // (xy)* = y* x*, bilinear, so basis pairs suffice
            if star.apply(&alg.mul(&ei, &ej)) != alg.mul(&s(j), &s(i)) {
                return Err(Error::NotAnInvolution(alg.label().to_string()));
            }
            // x x* = x* x, checked via its polarization
            let lhs = &alg.mul(&ei, &s(j)) + &alg.mul(&ej, &s(i));
            let rhs = &alg.mul(&s(i), &ej) + &alg.mul(&s(j), &ei);
            if lhs != rhs {
                return Err(Error::NotAnInvolution(alg.label().to_string()));
            }
        }
    }
    Ok(star)
}

/// The cracovian algebra of `alg` at `e`: product `x ⊙ y = x* y` where `*`
/// is the involution from [`involution_from_idempotent`].
pub fn cracovian(alg: &Algebra, e: &CDElement) -> Result<Algebra> {
    let star = involution_from_idempotent(alg, e)?;
    let n = alg.dim();
    Algebra::from_basis_products(n, format!("({})_*", alg.label()), |i, j| {
        let ei = CDElement::basis(n, i).expect("dim checked");
        let ej = CDElement::basis(n, j).expect("dim checked");
        alg.mul(&star.apply(&ei), &ej)
    })
}

// ── JSON wire format ────────────────────────────────────────────────────────

#[derive(Serialize, Deserialize)]
struct SpecDoc {
    family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<FDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<Box<SpecDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FDoc {
    Explicit(Vec<Vec<String>>),
    Seed { skew: Vec<Vec<String>> },
}

fn element_from_strings(coords: &[String]) -> Result<CDElement> {
    let parsed: Result<Vec<ExactScalar>> = coords.iter().map(|s| parse_ratio(s)).collect();
    CDElement::new(parsed?)
}

fn element_to_strings(x: &CDElement) -> Vec<String> {
    x.coords().iter().map(format_ratio).collect()
}

fn matrix_from_strings(rows: &[Vec<String>]) -> Result<Mat> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let parsed: Result<Vec<ExactScalar>> = row.iter().map(|s| parse_ratio(s)).collect();
        out.push(parsed?);
    }
    let n = out.len();
    if out.iter().any(|r| r.len() != n) {
        return Err(Error::BadSpec("matrix rows of unequal length".into()));
    }
    Ok(Mat::from_rows(out))
}

fn matrix_to_strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_ratio).collect())
        .collect()
}

impl AlgebraSpec {
    fn to_doc(&self) -> SpecDoc {
        let empty = SpecDoc {
            family: String::new(),
            dim: None,
            a: None,
            b: None,
            f: None,
            base: None,
            e: None,
        };
        match self {
            AlgebraSpec::Cd { dim } => SpecDoc {
                family: "CD".into(),
                dim: Some(*dim),
                ..empty
            },
            AlgebraSpec::Isotope(iso) => SpecDoc {
                family: format!("H{}", iso.family.index()),
                dim: Some(4),
                a: Some(element_to_strings(&iso.a)),
                b: Some(element_to_strings(&iso.b)),
                ..empty
            },
            AlgebraSpec::Standard { kind, dim } => SpecDoc {
                family: match kind {
                    StandardKind::ConjLeft => "StarA",
                    StandardKind::ConjRight => "AStar",
                    StandardKind::ConjBoth => "StarAStar",
                }
                .into(),
                dim: Some(*dim),
                ..empty
            },
            AlgebraSpec::Of { f } => SpecDoc {
                family: "Of".into(),
                dim: Some(f.rows()),
                f: Some(FDoc::Explicit(matrix_to_strings(f))),
                ..empty
            },
            AlgebraSpec::Cracovian { base, e } => SpecDoc {
                family: "Cracovian".into(),
                base: Some(Box::new(base.to_doc())),
                e: Some(element_to_strings(e)),
                ..empty
            },
        }
    }

    fn from_doc(doc: &SpecDoc) -> Result<AlgebraSpec> {
        let need_dim = || {
            doc.dim
                .ok_or_else(|| Error::BadSpec(format!("family {} requires dim", doc.family)))
        };
        let need = |field: &Option<Vec<String>>, name: &str| {
            field.clone().ok_or_else(|| {
                Error::BadSpec(format!("family {} requires field {name}", doc.family))
            })
        };
        match doc.family.as_str() {
            "CD" => {
                let dim = need_dim()?;
                check_dim(dim)?;
                Ok(AlgebraSpec::Cd { dim })
            }
            "H1" | "H2" | "H3" | "H4" => {
                let n = doc.family[1..].parse::<usize>().expect("digit");
                if let Some(dim) = doc.dim {
                    if dim != 4 {
                        return Err(Error::BadSpec(format!(
                            "family {} requires dim 4, got {dim}",
                            doc.family
                        )));
                    }
                }
                let a = element_from_strings(&need(&doc.a, "a")?)?;
                let b = element_from_strings(&need(&doc.b, "b")?)?;
                AlgebraSpec::isotope(n, a, b)
            }
            "StarA" | "AStar" | "StarAStar" => {
                let dim = need_dim()?;
                check_dim(dim)?;
                let kind = match doc.family.as_str() {
                    "StarA" => StandardKind::ConjLeft,
                    "AStar" => StandardKind::ConjRight,
                    _ => StandardKind::ConjBoth,
                };
                Ok(AlgebraSpec::Standard { kind, dim })
            }
            "Of" => {
                let f = match &doc.f {
                    Some(FDoc::Explicit(rows)) => matrix_from_strings(rows)?,
                    Some(FDoc::Seed { skew }) => {
                        cayley_isometry(&IsometrySeed::new(matrix_from_strings(skew)?)?)
                    }
                    None => return Err(Error::BadSpec("family Of requires field f".into())),
                };
                if let Some(dim) = doc.dim {
                    if dim != f.rows() {
                        return Err(Error::BadSpec(format!(
                            "dim {dim} does not match f size {}",
                            f.rows()
                        )));
                    }
                }
                validate_isometry(&f)?;
                Ok(AlgebraSpec::Of { f })
            }
            "Cracovian" => {
                let base = doc
                    .base
                    .as_ref()
                    .ok_or_else(|| Error::BadSpec("family Cracovian requires base".into()))?;
                let base = AlgebraSpec::from_doc(base)?;
                let e = element_from_strings(&need(&doc.e, "e")?)?;
                Ok(AlgebraSpec::Cracovian {
                    base: Box::new(base),
                    e,
                })
            }
            other => Err(Error::BadSpec(format!("unknown family {other:?}"))),
        }
    }

    pub fn from_json(json: &str) -> Result<AlgebraSpec> {
        let doc: SpecDoc = serde_json::from_str(json)?;
        AlgebraSpec::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("spec doc serializes")
    }

    pub fn load(path: &std::path::Path) -> Result<AlgebraSpec> {
        let text = std::fs::read_to_string(path)?;
        AlgebraSpec::from_json(&text)
    }
}

impl Serialize for AlgebraSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = SpecDoc::deserialize(deserializer)?;
        AlgebraSpec::from_doc(&doc).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::DetRng;
    use crate::scalar::int;

    fn basis(k: usize) -> CDElement {
        CDElement::basis(4, k).unwrap()
    }

    fn unit_a() -> CDElement {
        // 3/5 + 4/5 i
        let q = CDElement::new(vec![int(0), frac(1, 2), int(0), int(0)]).unwrap();
        CDElement::rational_unit(&q).unwrap()
    }

    #[test]
    fn h1_identity_parameters_is_h() {
        let spec = AlgebraSpec::isotope(1, basis(0), basis(0)).unwrap();
        let alg = build(&spec).unwrap();
        let h = Algebra::cayley_dickson(4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(alg.basis_product(i, j), h.basis_product(i, j));
            }
        }
    }

    #[test]
    fn h2_identity_parameters_is_conj_left() {
        let spec = AlgebraSpec::isotope(2, basis(0), basis(0)).unwrap();
        let alg = build(&spec).unwrap();
        let mut rng = DetRng::new(61);
        for _ in 0..50 {
            let x = rng.element(4, 3);
            let y = rng.element(4, 3);
            assert_eq!(alg.mul(&x, &y), x.conjugate().cd_mul(&y));
        }
        assert_eq!(alg.mul(&basis(1), &basis(0)), -&basis(1));
    }

    #[test]
    fn h3_identity_parameters_is_conj_right() {
        let spec = AlgebraSpec::isotope(3, basis(0), basis(0)).unwrap();
        let alg = build(&spec).unwrap();
        assert_eq!(alg.mul(&basis(0), &basis(1)), -&basis(1));
    }

    #[test]
    fn h4_identity_parameters_is_conj_both() {
        let spec = AlgebraSpec::isotope(4, basis(0), basis(0)).unwrap();
        let alg = build(&spec).unwrap();
        // conj(i) conj(i) = (-i)(-i) = -1
        assert_eq!(alg.mul(&basis(1), &basis(1)), -&basis(0));
    }

    #[test]
    fn factory_rejects_non_unit_parameters() {
        let two = CDElement::from_ints(&[2, 0, 0, 0]).unwrap();
        assert!(AlgebraSpec::isotope(1, two, basis(0)).is_err());
    }

    #[test]
    fn built_algebras_are_norm_multiplicative() {
        let mut rng = DetRng::new(67);
        let a = unit_a();
        let mut specs = vec![
            AlgebraSpec::Cd { dim: 8 },
            AlgebraSpec::Standard {
                kind: StandardKind::ConjBoth,
                dim: 2,
            },
            AlgebraSpec::Of {
                f: cayley_isometry(&published_isometry_seed()),
            },
        ];
        for n in 1..=4 {
            specs.push(AlgebraSpec::isotope(n, a.clone(), rng.unit(4, 2)).unwrap());
        }
        for spec in &specs {
            let alg = build(spec).unwrap();
            assert!(
                alg.check_norm_multiplicativity(100, 71),
                "norm multiplicativity fails for {}",
                alg.label()
            );
        }
    }

    #[test]
    fn h1_at_identity_is_associative_symbolically() {
        // three fully generic elements: (x, y, z) = 0 as a polynomial
        let spec = AlgebraSpec::isotope(1, basis(0), basis(0)).unwrap();
        let alg = build(&spec).unwrap();
        let x = crate::identity::AlgPoly::generic(4, 12, 0);
        let y = crate::identity::AlgPoly::generic(4, 12, 4);
        let z = crate::identity::AlgPoly::generic(4, 12, 8);
        assert!(crate::identity::associator_poly(&alg, &x, &y, &z).is_zero());
        // while the conj-left twist is not associative
        let spec = AlgebraSpec::isotope(2, basis(0), basis(0)).unwrap();
        let alg = build(&spec).unwrap();
        assert!(!crate::identity::associator_poly(&alg, &x, &y, &z).is_zero());
    }

    #[test]
    fn sign_symmetry_of_parameters_in_all_families() {
        let mut rng = DetRng::new(63);
        for n in 1..=4 {
            let a = rng.unit(4, 2);
            let b = rng.unit(4, 2);
            let base = crate::factory::Isotope::new(
                IsotopeFamily::from_index(n).unwrap(),
                a.clone(),
                b.clone(),
            )
            .unwrap();
            for (sa, sb) in [(1, -1), (-1, 1), (-1, -1)] {
                let flipped = crate::factory::Isotope::new(
                    base.family,
                    if sa > 0 { a.clone() } else { -&a },
                    if sb > 0 { b.clone() } else { -&b },
                )
                .unwrap();
                let w = crate::lab::isotope_isomorphic(&base, &flipped)
                    .expect("sign-flipped parameters give an isomorphic algebra");
                assert!(w.verify(&base, &flipped));
            }
        }
    }

    #[test]
    fn cayley_isometry_is_orthogonal_and_fixes_one() {
        let zero_seed = IsometrySeed::new(Mat::zeros(8, 8)).unwrap();
        assert_eq!(cayley_isometry(&zero_seed), Mat::identity(8));

        let seed = published_isometry_seed();
        let f = cayley_isometry(&seed);
        assert!(f.is_orthogonal());
        let one = CDElement::one(8).unwrap();
        assert_eq!(f.apply(&one), one);

        let mut rng = DetRng::new(73);
        for _ in 0..5 {
            let mut entries = Vec::new();
            for r in 1..8usize {
                for c in (r + 1)..8usize {
                    entries.push((r, c, rng.rational(2)));
                }
            }
            let s = IsometrySeed::from_entries(8, &entries).unwrap();
            let f = cayley_isometry(&s);
            assert!(f.is_orthogonal());
            assert_eq!(f.apply(&one), one);
        }
    }

    #[test]
    fn quarter_turn_seed_gives_rational_rotation() {
        // single 2x2 skew block of value 1 in imaginary coordinates:
        // tan(theta/2) = 1 so cos(theta) = 0, a quarter turn in that plane
        let seed = IsometrySeed::from_entries(4, &[(1, 2, int(1))]).unwrap();
        let f = cayley_isometry(&seed);
        assert!(f.is_orthogonal());
        assert!(f.get(1, 1).is_zero());
        assert!(f.get(2, 2).is_zero());
        assert_eq!(f.get(2, 1), &int(1));
        assert_eq!(f.get(1, 2), &int(-1));
    }

    #[test]
    fn involution_from_unit_of_octonions_is_conjugation() {
        let o = Algebra::cayley_dickson(8).unwrap();
        let one = CDElement::one(8).unwrap();
        let star = involution_from_idempotent(&o, &one).unwrap();
        let mut rng = DetRng::new(79);
        for _ in 0..20 {
            let x = rng.element(8, 3);
            assert_eq!(star.apply(&x), x.conjugate());
        }
    }

    #[test]
    fn involution_on_of_fixes_one_negates_imaginaries() {
        let f = cayley_isometry(&published_isometry_seed());
        let of = build(&AlgebraSpec::Of { f }).unwrap();
        let one = CDElement::one(8).unwrap();
        let star = involution_from_idempotent(&of, &one).unwrap();
        assert_eq!(star.apply(&one), one);
        let mut rng = DetRng::new(83);
        for _ in 0..50 {
            let x = rng.element(8, 3);
            assert_eq!(star.apply(&x), x.conjugate());
            // involution laws at 50 dense points
            let xs = star.apply(&x);
            let y = rng.element(8, 3);
            let ys = star.apply(&y);
            assert_eq!(star.apply(&of.mul(&x, &y)), of.mul(&ys, &xs));
            assert_eq!(of.mul(&x, &xs), of.mul(&xs, &x));
            assert_eq!(star.apply(&xs), x);
        }
    }

    #[test]
    fn involution_rejects_star_c_star() {
        // dim-2 algebra with product conj(x) conj(y): 1 is a central
        // idempotent but the formula involution is not unique there
        let spec = AlgebraSpec::Standard {
            kind: StandardKind::ConjBoth,
            dim: 2,
        };
        let alg = build(&spec).unwrap();
        let one = CDElement::one(2).unwrap();
        assert!(alg.is_central_idempotent(&one));
        assert!(matches!(
            involution_from_idempotent(&alg, &one),
            Err(Error::ConjBothDim2Excluded)
        ));
    }

    #[test]
    fn cracovian_of_octonions_is_conj_left_product() {
        let o = Algebra::cayley_dickson(8).unwrap();
        let one = CDElement::one(8).unwrap();
        let crac = cracovian(&o, &one).unwrap();
        let mut rng = DetRng::new(89);
        for _ in 0..30 {
            let x = rng.element(8, 3);
            let y = rng.element(8, 3);
            assert_eq!(crac.mul(&x, &y), x.conjugate().cd_mul(&y));
        }
    }

    #[test]
    fn cracovian_squares_are_scalar() {
        // x ⊙ x = ||x||^2 · 1 in the cracovian of O^f
        let f = cayley_isometry(&published_isometry_seed());
        let of = build(&AlgebraSpec::Of { f }).unwrap();
        let one = CDElement::one(8).unwrap();
        let crac = cracovian(&of, &one).unwrap();
        let mut rng = DetRng::new(97);
        for _ in 0..50 {
            let x = rng.element(8, 3);
            assert_eq!(crac.mul(&x, &x), one.scale(&x.norm_sq()));
        }
    }

    #[test]
    fn cracovian_unique_idempotent_sampling() {
        let f = cayley_isometry(&published_isometry_seed());
        let of = build(&AlgebraSpec::Of { f }).unwrap();
        let one = CDElement::one(8).unwrap();
        let crac = cracovian(&of, &one).unwrap();
        assert!(crac.is_idempotent(&one));
        // no other idempotent shows up in a large deterministic sample;
        // x ⊙ x = ||x||^2 · 1 so any idempotent must be a positive multiple
        // of 1, and then equals 1
        let mut rng = DetRng::new(101);
        for _ in 0..10_000 {
            let x = rng.nonzero_element(8, 2);
            if x != one {
                assert!(crac.mul(&x, &x) != x);
            }
        }
    }

    #[test]
    fn central_idempotent_examples() {
        // *H*(a, conj(a)) has central idempotent 1
        let a = unit_a();
        let spec = AlgebraSpec::isotope(4, a.clone(), a.conjugate()).unwrap();
        let alg = build(&spec).unwrap();
        let one = basis(0);
        assert!(alg.is_central_idempotent(&one));
        // H(a, conj(a)) likewise
        let spec = AlgebraSpec::isotope(1, a.clone(), a.conjugate()).unwrap();
        let alg = build(&spec).unwrap();
        assert!(alg.is_central_idempotent(&one));
        // but *H(a, b) generally not
        let spec = AlgebraSpec::isotope(2, a.clone(), basis(0)).unwrap();
        let alg = build(&spec).unwrap();
        assert!(!alg.is_central_idempotent(&one));
    }

    #[test]
    fn flexible_idempotent_on_cracovian() {
        let f = cayley_isometry(&published_isometry_seed());
        let of = build(&AlgebraSpec::Of { f }).unwrap();
        let one = CDElement::one(8).unwrap();
        let crac = cracovian(&of, &one).unwrap();
        assert!(crac.is_flexible_idempotent(&one));
        assert!(!crac.is_central_idempotent(&one));
    }

    #[test]
    fn of_product_matches_definition_on_basis() {
        let f = cayley_isometry(&published_isometry_seed());
        let of = build(&AlgebraSpec::Of { f: f.clone() }).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let ei = CDElement::basis(8, i).unwrap();
                let ej = CDElement::basis(8, j).unwrap();
                assert_eq!(
                    of.basis_product(i, j),
                    f.apply(&ei).cd_mul(&f.apply(&ej))
                );
            }
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let a = unit_a();
        let specs = vec![
            AlgebraSpec::Cd { dim: 4 },
            AlgebraSpec::isotope(2, a.clone(), basis(0)).unwrap(),
            AlgebraSpec::Standard {
                kind: StandardKind::ConjRight,
                dim: 8,
            },
            AlgebraSpec::Of {
                f: cayley_isometry(&published_isometry_seed()),
            },
            AlgebraSpec::Cracovian {
                base: Box::new(AlgebraSpec::Of {
                    f: cayley_isometry(&published_isometry_seed()),
                }),
                e: CDElement::one(8).unwrap(),
            },
        ];
        for spec in &specs {
            let json = spec.to_json();
            let back = AlgebraSpec::from_json(&json).unwrap();
            assert_eq!(&back, spec);
        }
    }

    #[test]
    fn spec_json_accepts_seed_form_and_rejects_garbage() {
        let json = r#"{
            "family": "Of",
            "f": {"skew": [
                ["0","0","0","0","0","0","0","0"],
                ["0","0","1","0","0","0","0","0"],
                ["0","-1","0","0","0","0","0","0"],
                ["0","0","0","0","0","0","0","0"],
                ["0","0","0","0","0","0","0","0"],
                ["0","0","0","0","0","0","0","0"],
                ["0","0","0","0","0","0","0","0"],
                ["0","0","0","0","0","0","0","0"]
            ]}
        }"#;
        let spec = AlgebraSpec::from_json(json).unwrap();
        assert!(build(&spec).is_ok());

        assert!(AlgebraSpec::from_json("{").is_err());
        assert!(AlgebraSpec::from_json(r#"{"family":"X9"}"#).is_err());
        assert!(AlgebraSpec::from_json(r#"{"family":"CD","dim":3}"#).is_err());
        // decimals are rejected to preserve exactness
        assert!(AlgebraSpec::from_json(
            r#"{"family":"H1","a":["0.6","0.8","0","0"],"b":["1","0","0","0"]}"#
        )
        .is_err());
        // non-unit parameters are rejected, not normalized
        assert!(AlgebraSpec::from_json(
            r#"{"family":"H1","a":["1","1","0","0"],"b":["1","0","0","0"]}"#
        )
        .is_err());
    }
}
