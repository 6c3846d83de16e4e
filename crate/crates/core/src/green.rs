//! Elements of the Green ring `r(D4)`.
//!
//! A [`GreenElement`] is a finite integer combination of [`ModuleLabel`]s.
//! Multiplication extends the tensor product table in [`crate::table`]
//! bilinearly.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::label::{ModuleLabel, Z2};
use crate::table::mul_labels;

/// An element of `r(D4)`: no zero coefficients are ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GreenElement {
    coeffs: BTreeMap<ModuleLabel, BigInt>,
}

impl GreenElement {
    pub fn zero() -> GreenElement {
        GreenElement::default()
    }

    /// The unit `[V(0)]`.
    pub fn one() -> GreenElement {
        GreenElement::from_label(ModuleLabel::v(0))
    }

    pub fn from_label(label: ModuleLabel) -> GreenElement {
        GreenElement::term(BigInt::one(), label)
    }

    pub fn term(coeff: impl Into<BigInt>, label: ModuleLabel) -> GreenElement {
        let mut e = GreenElement::zero();
        e.add_term(coeff, label);
        e
    }

    /// Builds an element from `(coefficient, label)` pairs, summing repeats.
    pub fn from_terms<C, I>(terms: I) -> GreenElement
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (C, ModuleLabel)>,
    {
        let mut e = GreenElement::zero();
        for (c, l) in terms {
            e.add_term(c, l);
        }
        e
    }

    /// Counts each label once per occurrence.
    pub fn from_multiset<'a, I: IntoIterator<Item = &'a ModuleLabel>>(labels: I) -> GreenElement {
        GreenElement::from_terms(labels.into_iter().map(|l| (1, l.clone())))
    }

    pub fn add_term(&mut self, coeff: impl Into<BigInt>, label: ModuleLabel) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        debug_assert!(label.is_valid(), "invalid label {label:?}");
        match self.coeffs.entry(label) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn coeff(&self, label: &ModuleLabel) -> BigInt {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of distinct labels with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in canonical label order.
    pub fn iter(&self) -> impl Iterator<Item = (&ModuleLabel, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, k: &BigInt) -> GreenElement {
        if k.is_zero() {
            return GreenElement::zero();
        }
        GreenElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, c)| (l.clone(), c * k))
                .collect(),
        }
    }

    /// True when every coefficient is nonnegative, i.e. the element is the
    /// class of an actual module.
    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn mul(&self, other: &GreenElement) -> GreenElement {
        let mut out = GreenElement::zero();
        for (l1, c1) in &self.coeffs {
            for (l2, c2) in &other.coeffs {
                let c = c1 * c2;
                for (l, c3) in mul_labels(l1, l2).coeffs {
                    out.add_term(&c * c3, l);
                }
            }
        }
        out
    }

    /// The involution induced by `M ↦ M*`.
    pub fn dual(&self) -> GreenElement {
        GreenElement::from_terms(self.coeffs.iter().map(|(l, c)| (c.clone(), dual_label(l))))
    }

    /// `Σ c · dim`, the image under the dimension homomorphism `r(D4) → Z`.
    pub fn dimension(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(l, c)| c * BigInt::from(label_dimension(l)))
            .sum()
    }

    /// Image in `G0(D4)`, as multiplicities of `(V(0), V(1), V(2,0), V(2,1))`.
    pub fn grothendieck_image(&self) -> [BigInt; 4] {
        let mut out: [BigInt; 4] = Default::default();
        for (l, c) in &self.coeffs {
            for (slot, k) in out.iter_mut().zip(composition_factors(l)) {
                *slot += c * BigInt::from(k);
            }
        }
        out
    }

    /// `self^n` with `self^0 = 1`.
    pub fn pow(&self, n: u32) -> GreenElement {
        let mut acc = GreenElement::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

/// Label-level duality.
pub fn dual_label(l: &ModuleLabel) -> ModuleLabel {
    match l {
        ModuleLabel::SimpleOne { .. } | ModuleLabel::Projective { .. } => l.clone(),
        ModuleLabel::SimpleTwo { r } => ModuleLabel::SimpleTwo { r: r.flip() },
        ModuleLabel::Syzygy { s, r } => ModuleLabel::Cosyzygy { s: *s, r: *r },
        ModuleLabel::Cosyzygy { s, r } => ModuleLabel::Syzygy { s: *s, r: *r },
        ModuleLabel::Band { s, r, eta } => ModuleLabel::Band {
            s: *s,
            r: r.flip(),
            eta: eta.clone(),
        },
    }
}

/// Product in `G0(D4)` on multiplicity vectors over
/// `(V(0), V(1), V(2,0), V(2,1))`, induced by `V(r)V(r') = V(r+r')`,
/// `V(r)V(2,r') = V(2,r+r')` and `V(2,r)V(2,r') = 2V(0) + 2V(1)`.
pub fn grothendieck_mul(x: &[BigInt; 4], y: &[BigInt; 4]) -> [BigInt; 4] {
    let mut out: [BigInt; 4] = Default::default();
    for i in 0..4 {
        for j in 0..4 {
            let c = &x[i] * &y[j];
            match (i < 2, j < 2) {
                (true, true) => out[(i + j) % 2] += c,
                (true, false) => out[2 + (i + j) % 2] += c,
                (false, true) => out[2 + (i + j) % 2] += c,
                (false, false) => {
                    out[0] += &c * 2;
                    out[1] += c * 2;
                }
            }
        }
    }
    out
}

/// Vector-space dimension of the module with this label.
pub fn label_dimension(l: &ModuleLabel) -> u64 {
    match l {
        ModuleLabel::SimpleOne { .. } => 1,
        ModuleLabel::SimpleTwo { .. } => 2,
        ModuleLabel::Projective { .. } => 4,
        ModuleLabel::Syzygy { s, .. } | ModuleLabel::Cosyzygy { s, .. } => 2 * *s as u64 + 1,
        ModuleLabel::Band { s, .. } => 2 * *s as u64,
    }
}

/// Composition-factor multiplicities of `(V(0), V(1), V(2,0), V(2,1))`.
pub fn composition_factors(l: &ModuleLabel) -> [u64; 4] {
    // Adds `n` copies of V(r) to the vector.
    fn ones(v: &mut [u64; 4], r: Z2, n: u64) {
        v[r.value() as usize] += n;
    }
    let mut v = [0u64; 4];
    match l {
        ModuleLabel::SimpleOne { r } => ones(&mut v, *r, 1),
        ModuleLabel::SimpleTwo { r } => v[2 + r.value() as usize] = 1,
        ModuleLabel::Projective { r } => {
            ones(&mut v, *r, 2);
            ones(&mut v, r.flip(), 2);
        }
        ModuleLabel::Syzygy { s, r } | ModuleLabel::Cosyzygy { s, r } => {
            let s = *s as u64;
            if s % 2 == 1 {
                ones(&mut v, *r, s);
                ones(&mut v, r.flip(), s + 1);
            } else {
                ones(&mut v, *r, s + 1);
                ones(&mut v, r.flip(), s);
            }
        }
        ModuleLabel::Band { s, r, .. } => {
            ones(&mut v, *r, *s as u64);
            ones(&mut v, r.flip(), *s as u64);
        }
    }
    v
}

impl Add for &GreenElement {
    type Output = GreenElement;
    fn add(self, rhs: &GreenElement) -> GreenElement {
        let mut out = self.clone();
        for (l, c) in &rhs.coeffs {
            out.add_term(c.clone(), l.clone());
        }
        out
    }
}

impl Add for GreenElement {
    type Output = GreenElement;
    fn add(self, rhs: GreenElement) -> GreenElement {
        &self + &rhs
    }
}

impl Neg for &GreenElement {
    type Output = GreenElement;
    fn neg(self) -> GreenElement {
        GreenElement {
            coeffs: self.coeffs.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Neg for GreenElement {
    type Output = GreenElement;
    fn neg(self) -> GreenElement {
        -&self
    }
}

impl Sub for &GreenElement {
    type Output = GreenElement;
    fn sub(self, rhs: &GreenElement) -> GreenElement {
        self + &(-rhs)
    }
}

impl Sub for GreenElement {
    type Output = GreenElement;
    fn sub(self, rhs: GreenElement) -> GreenElement {
        &self - &rhs
    }
}

impl Mul for &GreenElement {
    type Output = GreenElement;
    fn mul(self, rhs: &GreenElement) -> GreenElement {
        GreenElement::mul(self, rhs)
    }
}

impl Mul for GreenElement {
    type Output = GreenElement;
    fn mul(self, rhs: GreenElement) -> GreenElement {
        GreenElement::mul(&self, &rhs)
    }
}

impl Mul<&GreenElement> for GreenElement {
    type Output = GreenElement;
    fn mul(self, rhs: &GreenElement) -> GreenElement {
        GreenElement::mul(&self, rhs)
    }
}

impl Mul<GreenElement> for &GreenElement {
    type Output = GreenElement;
    fn mul(self, rhs: GreenElement) -> GreenElement {
        GreenElement::mul(self, &rhs)
    }
}

/// Plain-text form, e.g. `[O^1V(1)] + 3*[P(1)]`; the zero element prints `0`.
impl fmt::Display for GreenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "[{l}]")?;
        }
        Ok(())
    }
}
