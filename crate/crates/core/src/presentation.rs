//! Normal forms in `Z[X]/J` and the isomorphism with the Green ring.
//!
//! Every element is kept as an integer combination of the basis monomials
//! `g^e·b` with `e ∈ {0,1}` and `b` one of `1, x, x², yⁿ, zⁿ, X_{n,η}`.
//! Products are reduced by a fixed rewrite table, so there is no term order
//! and no Gröbner machinery. [`to_green`] and [`from_green`] are mutually
//! inverse and turn [`PresElement::mul`] into [`GreenElement::mul`].

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::green::GreenElement;
use crate::label::{EtaParam, ModuleLabel, Z2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("index must be at least 1")]
    ZeroIndex,
}

/// `c0 + c1·g` in the group ring `Z[Z2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupRingPair {
    pub c0: BigInt,
    pub c1: BigInt,
}

impl GroupRingPair {
    pub fn new(c0: impl Into<BigInt>, c1: impl Into<BigInt>) -> GroupRingPair {
        GroupRingPair {
            c0: c0.into(),
            c1: c1.into(),
        }
    }

    pub fn one() -> GroupRingPair {
        GroupRingPair::new(1, 0)
    }

    pub fn mul(&self, other: &GroupRingPair) -> GroupRingPair {
        GroupRingPair {
            c0: &self.c0 * &other.c0 + &self.c1 * &other.c1,
            c1: &self.c0 * &other.c1 + &self.c1 * &other.c0,
        }
    }

    pub fn pow(&self, n: u32) -> GroupRingPair {
        (0..n).fold(GroupRingPair::one(), |acc, _| acc.mul(self))
    }

    /// `(c0 + c1·g)·base` as a normal form.
    pub fn times(&self, base: PresBase) -> PresElement {
        let mut out = PresElement::zero();
        out.add_term(self.c0.clone(), PresMonomial::new(false, base.clone()));
        out.add_term(self.c1.clone(), PresMonomial::new(true, base));
        out
    }
}

/// `a_n = ½ Σ_{i=1}^{n-1} (3^{i-1}+1)(n-i)`.
pub fn a_seq(n: u32) -> Result<BigInt, PresentationError> {
    if n == 0 {
        return Err(PresentationError::ZeroIndex);
    }
    let mut sum = BigInt::zero();
    let mut pow3 = BigInt::one();
    for i in 1..n {
        sum += (&pow3 + 1u32) * (n - i);
        pow3 *= 3u32;
    }
    Ok(sum / 2u32)
}

/// `f_n = a_n(1+g) - n(n-1)/2·gⁿ`, reduced with `g² = 1`.
pub fn f_poly(n: u32) -> Result<GroupRingPair, PresentationError> {
    let a = a_seq(n)?;
    let tri = BigInt::from(n as u64 * (n as u64 - 1) / 2);
    Ok(if n.is_multiple_of(2) {
        GroupRingPair {
            c0: &a - tri,
            c1: a,
        }
    } else {
        GroupRingPair {
            c0: a.clone(),
            c1: a - tri,
        }
    })
}

/// The part of a basis monomial other than the power of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PresBase {
    One,
    X,
    X2,
    Y(u32),
    Z(u32),
    Band { n: u32, eta: EtaParam },
}

impl PresBase {
    pub fn degree(&self) -> u32 {
        match self {
            PresBase::One => 0,
            PresBase::X => 1,
            PresBase::X2 => 2,
            PresBase::Y(n) | PresBase::Z(n) | PresBase::Band { n, .. } => *n,
        }
    }

    pub fn is_valid(&self) -> bool {
        match self {
            PresBase::Y(n) | PresBase::Z(n) | PresBase::Band { n, .. } => *n >= 1,
            _ => true,
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            PresBase::Y(_) => 0,
            PresBase::Z(_) => 1,
            PresBase::One | PresBase::X | PresBase::X2 => 2,
            PresBase::Band { .. } => 3,
        }
    }

    fn eta(&self) -> Option<&EtaParam> {
        match self {
            PresBase::Band { eta, .. } => Some(eta),
            _ => None,
        }
    }
}

impl fmt::Display for PresBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresBase::One => write!(f, "1"),
            PresBase::X => write!(f, "x"),
            PresBase::X2 => write!(f, "x^2"),
            PresBase::Y(1) => write!(f, "y"),
            PresBase::Y(n) => write!(f, "y^{n}"),
            PresBase::Z(1) => write!(f, "z"),
            PresBase::Z(n) => write!(f, "z^{n}"),
            PresBase::Band { n, eta } => write!(f, "X_{{{n},{eta}}}"),
        }
    }
}

/// A basis monomial `g^e·base`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PresMonomial {
    pub g: bool,
    pub base: PresBase,
}

impl PresMonomial {
    pub fn new(g: bool, base: PresBase) -> PresMonomial {
        PresMonomial { g, base }
    }

    pub fn one() -> PresMonomial {
        PresMonomial::new(false, PresBase::One)
    }

    fn key(&self) -> (u32, u8, Option<&EtaParam>, bool) {
        (
            self.base.degree(),
            self.base.kind_rank(),
            self.base.eta(),
            self.g,
        )
    }
}

// Ordered by degree, then y < z < powers of x < X, then η, then g.
impl Ord for PresMonomial {
    fn cmp(&self, other: &PresMonomial) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PresMonomial {
    fn partial_cmp(&self, other: &PresMonomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PresMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.g, &self.base) {
            (false, b) => write!(f, "{b}"),
            (true, PresBase::One) => write!(f, "g"),
            (true, b) => write!(f, "g*{b}"),
        }
    }
}

/// An element of `Z[X]/J` in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PresElement {
    terms: BTreeMap<PresMonomial, BigInt>,
}

impl PresElement {
    pub fn zero() -> PresElement {
        PresElement::default()
    }

    pub fn one() -> PresElement {
        PresElement::monomial(PresMonomial::one())
    }

    pub fn monomial(m: PresMonomial) -> PresElement {
        PresElement::term(1, m)
    }

    pub fn base(b: PresBase) -> PresElement {
        PresElement::monomial(PresMonomial::new(false, b))
    }

    pub fn term(c: impl Into<BigInt>, m: PresMonomial) -> PresElement {
        let mut e = PresElement::zero();
        e.add_term(c, m);
        e
    }

    pub fn add_term(&mut self, c: impl Into<BigInt>, m: PresMonomial) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        debug_assert!(m.base.is_valid(), "invalid monomial {m}");
        match self.terms.entry(m) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn coeff(&self, m: &PresMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PresMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &BigInt) -> PresElement {
        let mut out = PresElement::zero();
        for (m, c) in &self.terms {
            out.add_term(c * k, m.clone());
        }
        out
    }

    /// Multiplication by `g`.
    pub fn times_g(&self) -> PresElement {
        let mut out = PresElement::zero();
        for (m, c) in &self.terms {
            out.add_term(c.clone(), PresMonomial::new(!m.g, m.base.clone()));
        }
        out
    }

    /// Normal form of the product.
    pub fn mul(&self, other: &PresElement) -> PresElement {
        let mut out = PresElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut p = base_mul(&m1.base, &m2.base);
                if m1.g != m2.g {
                    p = p.times_g();
                }
                let k = c1 * c2;
                for (m, c) in p.terms {
                    out.add_term(c * &k, m);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> PresElement {
        (0..n).fold(PresElement::one(), |acc, _| &acc * self)
    }
}

/// Normal form of `p·q`.
pub fn nf_mul(p: &PresElement, q: &PresElement) -> PresElement {
    p.mul(q)
}

fn base_rank(b: &PresBase) -> u8 {
    match b {
        PresBase::One => 0,
        PresBase::X | PresBase::X2 => 1,
        PresBase::Y(_) => 2,
        PresBase::Z(_) => 3,
        PresBase::Band { .. } => 4,
    }
}

fn x_power(b: &PresBase) -> u32 {
    match b {
        PresBase::X => 1,
        PresBase::X2 => 2,
        _ => 0,
    }
}

fn one_plus_g() -> GroupRingPair {
    GroupRingPair::new(1, 1)
}

fn base_mul(a: &PresBase, b: &PresBase) -> PresElement {
    use PresBase::*;
    let (a, b) = if base_rank(a) <= base_rank(b) {
        (a, b)
    } else {
        (b, a)
    };
    match (a, b) {
        (One, b) => PresElement::base(b.clone()),
        (X | X2, X | X2) => match x_power(a) + x_power(b) {
            2 => PresElement::base(X2),
            3 => one_plus_g().times(X).scale(&BigInt::from(2)),
            _ => one_plus_g().times(X2).scale(&BigInt::from(2)),
        },
        (X | X2, Y(n) | Z(n)) => GroupRingPair::new(1, 2).pow(*n).times(a.clone()),
        (X | X2, Band { n, .. }) => one_plus_g().times(a.clone()).scale(&BigInt::from(*n)),
        (Y(m), Y(n)) => PresElement::base(Y(m + n)),
        (Z(m), Z(n)) => PresElement::base(Z(m + n)),
        (Y(m), Z(n)) => {
            let k = (*m).min(*n);
            let rest = match m.cmp(n) {
                Ordering::Greater => Y(m - k),
                Ordering::Less => Z(n - k),
                Ordering::Equal => One,
            };
            let mut yz = PresElement::one();
            yz.add_term(2, PresMonomial::new(false, X2));
            &PresElement::base(rest) * &yz.pow(k)
        }
        (Y(m), Band { n, eta }) | (Z(m), Band { n, eta }) => {
            // y·X = gX + n·g·x² and z·X = gX + n·x²
            let x2 = PresMonomial::new(matches!(a, Y(_)), X2);
            let mut step = PresElement::zero();
            step.add_term(
                1,
                PresMonomial::new(
                    true,
                    Band {
                        n: *n,
                        eta: eta.clone(),
                    },
                ),
            );
            step.add_term(*n, x2);
            if *m == 1 {
                return step;
            }
            let gen = PresElement::base(if matches!(a, Y(_)) { Y(1) } else { Z(1) });
            (1..*m).fold(step, |acc, _| &gen * &acc)
        }
        (Band { n, eta: e1 }, Band { n: t, eta: e2 }) => {
            let gx2 = PresMonomial::new(true, X2);
            if e1 != e2 {
                return PresElement::term(n * t, gx2);
            }
            let (lo, hi) = ((*n).min(*t), (*n).max(*t));
            let mut out = PresElement::term(lo as u64 * (hi as u64 - 1), gx2);
            let band = Band {
                n: lo,
                eta: e1.clone(),
            };
            out.add_term(1, PresMonomial::new(false, band.clone()));
            out.add_term(1, PresMonomial::new(true, band));
            out
        }
        _ => unreachable!("bases ({a}, {b}) not in dispatch order"),
    }
}

/// Image of a normal form in the Green ring.
pub fn to_green(p: &PresElement) -> GreenElement {
    let mut out = GreenElement::zero();
    for (m, c) in p.iter() {
        let r = if m.g { Z2::ONE } else { Z2::ZERO };
        let img = match &m.base {
            PresBase::One => GreenElement::from_label(ModuleLabel::SimpleOne { r }),
            PresBase::X => GreenElement::from_label(ModuleLabel::SimpleTwo { r }),
            PresBase::X2 => GreenElement::from_label(ModuleLabel::Projective { r: r.flip() }),
            PresBase::Y(n) | PresBase::Z(n) => {
                let f = f_poly(*n).expect("normal forms have n >= 1");
                let label = if matches!(m.base, PresBase::Y(_)) {
                    ModuleLabel::Syzygy { s: *n, r }
                } else {
                    ModuleLabel::Cosyzygy { s: *n, r }
                };
                // (c0 + c1·g)·g^r·x² with x² = P(1), g·x² = P(0)
                let (on_p1, on_p0) = if m.g { (f.c1, f.c0) } else { (f.c0, f.c1) };
                let mut e = GreenElement::from_label(label);
                e.add_term(on_p1, ModuleLabel::p(1));
                e.add_term(on_p0, ModuleLabel::p(0));
                e
            }
            PresBase::Band { n, eta } => GreenElement::from_label(ModuleLabel::Band {
                s: *n,
                r,
                eta: eta.clone(),
            }),
        };
        out = out + img.scale(c);
    }
    out
}

/// Normal form of a Green ring element; the inverse of [`to_green`].
pub fn from_green(e: &GreenElement) -> PresElement {
    let mut out = PresElement::zero();
    for (label, c) in e.iter() {
        let g = label.r() == Z2::ONE;
        let img = match label {
            ModuleLabel::SimpleOne { .. } => {
                PresElement::monomial(PresMonomial::new(g, PresBase::One))
            }
            ModuleLabel::SimpleTwo { .. } => {
                PresElement::monomial(PresMonomial::new(g, PresBase::X))
            }
            ModuleLabel::Projective { .. } => {
                PresElement::monomial(PresMonomial::new(!g, PresBase::X2))
            }
            ModuleLabel::Syzygy { s, .. } | ModuleLabel::Cosyzygy { s, .. } => {
                let base = if matches!(label, ModuleLabel::Syzygy { .. }) {
                    PresBase::Y(*s)
                } else {
                    PresBase::Z(*s)
                };
                let f = f_poly(*s).expect("labels have s >= 1");
                let mut v = PresElement::monomial(PresMonomial::new(false, base));
                v = v - f.times(PresBase::X2);
                if g {
                    v.times_g()
                } else {
                    v
                }
            }
            ModuleLabel::Band { s, eta, .. } => PresElement::monomial(PresMonomial::new(
                g,
                PresBase::Band {
                    n: *s,
                    eta: eta.clone(),
                },
            )),
        };
        out = out + img.scale(c);
    }
    out
}

impl Add for &PresElement {
    type Output = PresElement;
    fn add(self, rhs: &PresElement) -> PresElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Add for PresElement {
    type Output = PresElement;
    fn add(self, rhs: PresElement) -> PresElement {
        &self + &rhs
    }
}

impl Neg for &PresElement {
    type Output = PresElement;
    fn neg(self) -> PresElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Neg for PresElement {
    type Output = PresElement;
    fn neg(self) -> PresElement {
        -&self
    }
}

impl Sub for &PresElement {
    type Output = PresElement;
    fn sub(self, rhs: &PresElement) -> PresElement {
        self + &(-rhs)
    }
}

impl Sub for PresElement {
    type Output = PresElement;
    fn sub(self, rhs: PresElement) -> PresElement {
        &self - &rhs
    }
}

impl Mul for &PresElement {
    type Output = PresElement;
    fn mul(self, rhs: &PresElement) -> PresElement {
        PresElement::mul(self, rhs)
    }
}

impl Mul for PresElement {
    type Output = PresElement;
    fn mul(self, rhs: PresElement) -> PresElement {
        PresElement::mul(&self, &rhs)
    }
}

impl Mul<&PresElement> for PresElement {
    type Output = PresElement;
    fn mul(self, rhs: &PresElement) -> PresElement {
        PresElement::mul(&self, rhs)
    }
}

impl Mul<PresElement> for &PresElement {
    type Output = PresElement;
    fn mul(self, rhs: PresElement) -> PresElement {
        PresElement::mul(self, &rhs)
    }
}

impl fmt::Display for PresElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if *m == PresMonomial::one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A generator of the polynomial ring `Z[X]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    G,
    X,
    Y,
    Z,
    Band { n: u32, eta: EtaParam },
}

impl Generator {
    pub fn to_pres(&self) -> PresElement {
        let b = match self {
            Generator::G => return PresElement::monomial(PresMonomial::new(true, PresBase::One)),
            Generator::X => PresBase::X,
            Generator::Y => PresBase::Y(1),
            Generator::Z => PresBase::Z(1),
            Generator::Band { n, eta } => PresBase::Band {
                n: *n,
                eta: eta.clone(),
            },
        };
        PresElement::base(b)
    }

    /// The module class the generator stands for.
    pub fn to_green(&self) -> GreenElement {
        GreenElement::from_label(match self {
            Generator::G => ModuleLabel::v(1),
            Generator::X => ModuleLabel::t(0),
            Generator::Y => ModuleLabel::Syzygy { s: 1, r: Z2::ZERO },
            Generator::Z => ModuleLabel::Cosyzygy { s: 1, r: Z2::ZERO },
            Generator::Band { n, eta } => ModuleLabel::Band {
                s: *n,
                r: Z2::ZERO,
                eta: eta.clone(),
            },
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::G => write!(f, "g"),
            Generator::X => write!(f, "x"),
            Generator::Y => write!(f, "y"),
            Generator::Z => write!(f, "z"),
            Generator::Band { n, eta } => write!(f, "X_{{{n},{eta}}}"),
        }
    }
}

/// An unreduced polynomial in the generators: a sum of `coeff·Π gens`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenPoly {
    pub terms: Vec<(BigInt, Vec<Generator>)>,
}

impl GenPoly {
    pub fn new() -> GenPoly {
        GenPoly::default()
    }

    pub fn term(mut self, c: impl Into<BigInt>, gens: &[Generator]) -> GenPoly {
        self.terms.push((c.into(), gens.to_vec()));
        self
    }

    /// Evaluates by multiplying module classes; independent of the rewrite
    /// table.
    pub fn eval_green(&self) -> GreenElement {
        let mut out = GreenElement::zero();
        for (c, gens) in &self.terms {
            let prod = gens
                .iter()
                .fold(GreenElement::one(), |acc, g| &acc * &g.to_green());
            out = out + prod.scale(c);
        }
        out
    }

    /// Evaluates through the rewrite table.
    pub fn eval_pres(&self) -> PresElement {
        let mut out = PresElement::zero();
        for (c, gens) in &self.terms {
            let prod = gens
                .iter()
                .fold(PresElement::one(), |acc, g| &acc * &g.to_pres());
            out = out + prod.scale(c);
        }
        out
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, gens)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            let body = gens
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join("*");
            match (gens.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{body}")?,
                (false, false) => write!(f, "{a}*{body}")?,
            }
        }
        Ok(())
    }
}

/// The ten families of generators of the ideal `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelationFamily {
    GSquare,
    XCube,
    XY,
    XYMinusZ,
    YZ,
    XBand,
    YBand,
    ZBand,
    BandDistinct,
    BandSame,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 10] = [
        RelationFamily::GSquare,
        RelationFamily::XCube,
        RelationFamily::XY,
        RelationFamily::XYMinusZ,
        RelationFamily::YZ,
        RelationFamily::XBand,
        RelationFamily::YBand,
        RelationFamily::ZBand,
        RelationFamily::BandDistinct,
        RelationFamily::BandSame,
    ];
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationFamily::GSquare => "g^2 - 1",
            RelationFamily::XCube => "x^3 - 2x(1+g)",
            RelationFamily::XY => "x(y - 1 - 2g)",
            RelationFamily::XYMinusZ => "x(y - z)",
            RelationFamily::YZ => "yz - 1 - 2x^2",
            RelationFamily::XBand => "xX_n - n(1+g)x",
            RelationFamily::YBand => "yX_n - ngx^2 - gX_n",
            RelationFamily::ZBand => "zX_n - nx^2 - gX_n",
            RelationFamily::BandDistinct => "X_{n,eta}X_{s,alpha} - nsgx^2",
            RelationFamily::BandSame => "X_{n,eta}X_{t,eta} - n(t-1)gx^2 - X_n - gX_n",
        })
    }
}

/// One instance of a generator of `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub poly: GenPoly,
}

/// All generators of `J` with indices up to `max_n` and parameters from
/// `etas`.
pub fn relation_set(max_n: u32, etas: &[EtaParam]) -> Vec<Relation> {
    use Generator::*;
    let mut out = vec![];
    let mut push = |family, poly| out.push(Relation { family, poly });
    push(
        RelationFamily::GSquare,
        GenPoly::new().term(1, &[G, G]).term(-1, &[]),
    );
    push(
        RelationFamily::XCube,
        GenPoly::new()
            .term(1, &[X, X, X])
            .term(-2, &[X])
            .term(-2, &[X, G]),
    );
    push(
        RelationFamily::XY,
        GenPoly::new()
            .term(1, &[X, Y])
            .term(-1, &[X])
            .term(-2, &[X, G]),
    );
    push(
        RelationFamily::XYMinusZ,
        GenPoly::new().term(1, &[X, Y]).term(-1, &[X, Z]),
    );
    push(
        RelationFamily::YZ,
        GenPoly::new()
            .term(1, &[Y, Z])
            .term(-1, &[])
            .term(-2, &[X, X]),
    );
    for n in 1..=max_n {
        for eta in etas {
            let b = Band {
                n,
                eta: eta.clone(),
            };
            push(
                RelationFamily::XBand,
                GenPoly::new()
                    .term(1, &[X, b.clone()])
                    .term(-(n as i64), &[X])
                    .term(-(n as i64), &[G, X]),
            );
            push(
                RelationFamily::YBand,
                GenPoly::new()
                    .term(1, &[Y, b.clone()])
                    .term(-(n as i64), &[G, X, X])
                    .term(-1, &[G, b.clone()]),
            );
            push(
                RelationFamily::ZBand,
                GenPoly::new()
                    .term(1, &[Z, b.clone()])
                    .term(-(n as i64), &[X, X])
                    .term(-1, &[G, b.clone()]),
            );
            for s in 1..=max_n {
                for alpha in etas {
                    let b2 = Band {
                        n: s,
                        eta: alpha.clone(),
                    };
                    if alpha != eta {
                        push(
                            RelationFamily::BandDistinct,
                            GenPoly::new()
                                .term(1, &[b.clone(), b2])
                                .term(-((n * s) as i64), &[G, X, X]),
                        );
                    } else if s >= n {
                        push(
                            RelationFamily::BandSame,
                            GenPoly::new()
                                .term(1, &[b.clone(), b2])
                                .term(-((n * (s - 1)) as i64), &[G, X, X])
                                .term(-1, std::slice::from_ref(&b))
                                .term(-1, &[G, b.clone()]),
                        );
                    }
                }
            }
        }
    }
    out
}

/// Every basis monomial with index at most `max_n` and parameters from
/// `etas`.
pub fn basis_monomials(max_n: u32, etas: &[EtaParam]) -> Vec<PresMonomial> {
    let mut bases = vec![PresBase::One, PresBase::X, PresBase::X2];
    for n in 1..=max_n {
        bases.push(PresBase::Y(n));
        bases.push(PresBase::Z(n));
        for eta in etas {
            bases.push(PresBase::Band {
                n,
                eta: eta.clone(),
            });
        }
    }
    bases
        .into_iter()
        .flat_map(|b| {
            [
                PresMonomial::new(false, b.clone()),
                PresMonomial::new(true, b),
            ]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(g: bool, b: PresBase) -> PresElement {
        PresElement::monomial(PresMonomial::new(g, b))
    }

    fn y(n: u32) -> PresElement {
        mono(false, PresBase::Y(n))
    }

    #[test]
    fn a_sequence_values() {
        assert_eq!(a_seq(1).unwrap(), BigInt::from(0));
        assert_eq!(a_seq(2).unwrap(), BigInt::from(1));
        assert_eq!(a_seq(3).unwrap(), BigInt::from(4));
        assert_eq!(a_seq(0), Err(PresentationError::ZeroIndex));
    }

    #[test]
    fn a_sequence_recurrence() {
        for n in 1..=50u32 {
            let lhs = a_seq(n).unwrap() * 3 - BigInt::from(n * (n - 1) / 2);
            assert_eq!(lhs, a_seq(n + 1).unwrap() - n, "n = {n}");
        }
    }

    #[test]
    fn f_values() {
        assert_eq!(f_poly(1).unwrap(), GroupRingPair::new(0, 0));
        assert_eq!(f_poly(2).unwrap(), GroupRingPair::new(0, 1));
        assert_eq!(f_poly(3).unwrap(), GroupRingPair::new(4, 1));
        assert_eq!(f_poly(0), Err(PresentationError::ZeroIndex));
    }

    #[test]
    fn rewrite_examples() {
        let z = mono(false, PresBase::Z(1));
        let expected =
            PresElement::one() + PresElement::term(2, PresMonomial::new(false, PresBase::X2));
        assert_eq!(y(1).mul(&z), expected);
        assert_eq!(expected.to_string(), "1 + 2*x^2");

        let p = y(3) - mono(true, PresBase::X);
        assert_eq!(PresElement::one().mul(&p), p);

        let b0 = mono(
            false,
            PresBase::Band {
                n: 1,
                eta: EtaParam::integer(0),
            },
        );
        let binf = mono(
            false,
            PresBase::Band {
                n: 1,
                eta: EtaParam::Infinity,
            },
        );
        assert_eq!(b0.mul(&binf), mono(true, PresBase::X2));
    }

    #[test]
    fn y_squared_times_z() {
        let z = mono(false, PresBase::Z(1));
        let got = y(2).mul(&z);
        let mut expected = y(1);
        expected.add_term(2, PresMonomial::new(false, PresBase::X2));
        expected.add_term(4, PresMonomial::new(true, PresBase::X2));
        assert_eq!(got, expected);
        assert_eq!(to_green(&got), to_green(&y(2)).mul(&to_green(&z)));
    }

    #[test]
    fn x_cube() {
        let x = mono(false, PresBase::X);
        let expected = PresElement::term(2, PresMonomial::new(false, PresBase::X))
            + PresElement::term(2, PresMonomial::new(true, PresBase::X));
        assert_eq!(x.pow(3), expected);
    }

    #[test]
    fn green_images() {
        assert_eq!(
            to_green(&y(2)),
            GreenElement::from_terms([
                (1, ModuleLabel::omega(2, Z2::ZERO)),
                (1, ModuleLabel::p(0))
            ])
        );
        assert_eq!(
            to_green(&mono(false, PresBase::X)),
            GreenElement::from_label(ModuleLabel::t(0))
        );
        let eta = EtaParam::finite(1, 2);
        assert_eq!(
            to_green(&mono(
                false,
                PresBase::Band {
                    n: 3,
                    eta: eta.clone()
                }
            )),
            GreenElement::from_label(ModuleLabel::band(3, 0, eta))
        );
    }

    #[test]
    fn preimages() {
        assert_eq!(
            from_green(&GreenElement::from_label(ModuleLabel::omega(1, Z2::ZERO))),
            y(1)
        );
        assert_eq!(from_green(&GreenElement::one()), PresElement::one());
        let v = from_green(&GreenElement::from_label(ModuleLabel::omega(2, Z2::ZERO)));
        assert_eq!(v, y(2) - mono(true, PresBase::X2));
        assert_eq!(v.to_string(), "y^2 - g*x^2");
    }

    #[test]
    fn relations_vanish_both_ways() {
        let etas = [
            EtaParam::integer(0),
            EtaParam::integer(1),
            EtaParam::Infinity,
        ];
        let rels = relation_set(3, &etas);
        for fam in RelationFamily::ALL {
            assert!(rels.iter().any(|r| r.family == fam), "{fam} missing");
        }
        for rel in rels {
            assert!(
                rel.poly.eval_green().is_zero(),
                "{} in green ring",
                rel.poly
            );
            assert!(
                rel.poly.eval_pres().is_zero(),
                "{} in normal form",
                rel.poly
            );
        }
    }

    #[test]
    fn band_product_orientation() {
        let eta = EtaParam::integer(-2);
        let b1 = mono(
            false,
            PresBase::Band {
                n: 1,
                eta: eta.clone(),
            },
        );
        let b3 = mono(
            false,
            PresBase::Band {
                n: 3,
                eta: eta.clone(),
            },
        );
        assert_eq!(&b1 * &b3, &b3 * &b1);
        assert_eq!(to_green(&(&b3 * &b1)), to_green(&b3) * to_green(&b1));
    }

    #[test]
    fn monomial_display() {
        assert_eq!(PresMonomial::new(true, PresBase::One).to_string(), "g");
        assert_eq!(
            PresMonomial::new(
                true,
                PresBase::Band {
                    n: 2,
                    eta: EtaParam::finite(1, 3)
                }
            )
            .to_string(),
            "g*X_{2,1/3}"
        );
        let e = PresElement::term(-3, PresMonomial::new(false, PresBase::Z(4)));
        assert_eq!(e.to_string(), "-3*z^4");
        assert_eq!(PresElement::zero().to_string(), "0");
    }
}
