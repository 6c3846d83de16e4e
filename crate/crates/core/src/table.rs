//! Closed-form decomposition of `L1 ⊗ L2` for indecomposable labels.
//!
//! The table is split into nineteen cases, [`ProductCase::C1`] through
//! [`ProductCase::C19`]. Every case is symmetric: [`classify`] orders the
//! pair before matching, so `mul_labels(a, b) == mul_labels(b, a)`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::green::GreenElement;
use crate::label::{ModuleLabel, Z2};

/// Which closed-form rule produced a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ProductCase {
    /// `V(r)·V(r')`
    C1,
    /// `V(r)·V(2,r')`
    C2,
    /// `V(r)·P(r')`
    C3,
    /// `V(r)·Ω^{±s}V(r')`
    C4,
    /// `V(r)·M_s(r',η)`
    C5,
    /// `V(2,r)·V(2,r')`
    C6,
    /// `V(2,r')·Ω^{±s}V(r)`
    C7,
    /// `V(2,r')·M_s(r,η)`
    C8,
    /// `V(2,r')·P(r)`
    C9,
    /// `P(r')·Ω^{±s}V(r)`
    C10,
    /// `P(r')·M_s(r,η)`
    C11,
    /// `P(r')·P(r)`
    C12,
    /// `Ω^sV(r)·Ω^tV(r')`
    C13,
    /// `Ω^{-s}V(r)·Ω^{-t}V(r')`
    C14,
    /// `Ω^sV(r)·Ω^{-t}V(r')`
    C15,
    /// `M_t(r,η)·Ω^sV(r')`
    C16,
    /// `M_t(r,η)·Ω^{-s}V(r')`
    C17,
    /// `M_s(r,α)·M_t(r',η)` with `α ≠ η`
    C18,
    /// `M_s(r,η)·M_t(r',η)`
    C19,
}

impl ProductCase {
    pub const ALL: [ProductCase; 19] = [
        ProductCase::C1,
        ProductCase::C2,
        ProductCase::C3,
        ProductCase::C4,
        ProductCase::C5,
        ProductCase::C6,
        ProductCase::C7,
        ProductCase::C8,
        ProductCase::C9,
        ProductCase::C10,
        ProductCase::C11,
        ProductCase::C12,
        ProductCase::C13,
        ProductCase::C14,
        ProductCase::C15,
        ProductCase::C16,
        ProductCase::C17,
        ProductCase::C18,
        ProductCase::C19,
    ];

    pub fn index(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for ProductCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.index())
    }
}

impl std::str::FromStr for ProductCase {
    type Err = String;
    fn from_str(s: &str) -> Result<ProductCase, String> {
        let n: usize = s
            .trim()
            .strip_prefix(['C', 'c'])
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| format!("expected a case name C1..C19, got `{s}`"))?;
        ProductCase::ALL
            .get(n.wrapping_sub(1))
            .copied()
            .ok_or_else(|| format!("no such case `{s}`"))
    }
}

// Dispatch order used to put a pair into the orientation the rules are
// written in.
fn kind_rank(l: &ModuleLabel) -> u8 {
    match l {
        ModuleLabel::SimpleOne { .. } => 0,
        ModuleLabel::SimpleTwo { .. } => 1,
        ModuleLabel::Projective { .. } => 2,
        ModuleLabel::Syzygy { .. } | ModuleLabel::Cosyzygy { .. } => 3,
        ModuleLabel::Band { .. } => 4,
    }
}

/// Decomposition of `a ⊗ b` together with the rule that produced it.
pub fn product_with_case(a: &ModuleLabel, b: &ModuleLabel) -> (ProductCase, GreenElement) {
    use ModuleLabel::*;

    let (a, b) = if kind_rank(a) <= kind_rank(b) {
        (a, b)
    } else {
        (b, a)
    };
    let terms = |pairs: Vec<(BigInt, ModuleLabel)>| GreenElement::from_terms(pairs);
    let n = |k: u64| BigInt::from(k);

    match (a, b) {
        (SimpleOne { r }, other) => {
            let case = match other {
                SimpleOne { .. } => ProductCase::C1,
                SimpleTwo { .. } => ProductCase::C2,
                Projective { .. } => ProductCase::C3,
                Syzygy { .. } | Cosyzygy { .. } => ProductCase::C4,
                Band { .. } => ProductCase::C5,
            };
            (case, GreenElement::from_label(other.twist(*r)))
        }
        (SimpleTwo { r: r1 }, SimpleTwo { r: r2 }) => (
            ProductCase::C6,
            GreenElement::from_label(Projective { r: *r1 + *r2 + 1 }),
        ),
        (SimpleTwo { r: r1 }, Syzygy { s, r } | Cosyzygy { s, r }) => {
            let base = *r + *r1;
            let s = *s as u64;
            let (same, other) = if s % 2 == 1 { (s, s + 1) } else { (s + 1, s) };
            (
                ProductCase::C7,
                terms(vec![
                    (n(same), SimpleTwo { r: base }),
                    (n(other), SimpleTwo { r: base.flip() }),
                ]),
            )
        }
        (SimpleTwo { .. }, Band { s, .. }) => (
            ProductCase::C8,
            terms(vec![
                (n(*s as u64), ModuleLabel::t(0)),
                (n(*s as u64), ModuleLabel::t(1)),
            ]),
        ),
        (SimpleTwo { .. }, Projective { .. }) => (
            ProductCase::C9,
            terms(vec![(n(2), ModuleLabel::t(0)), (n(2), ModuleLabel::t(1))]),
        ),
        (Projective { r: r1 }, Syzygy { s, r } | Cosyzygy { s, r }) => {
            let base = *r + *r1;
            let s = *s as u64;
            let (same, other) = if s % 2 == 1 { (s, s + 1) } else { (s + 1, s) };
            (
                ProductCase::C10,
                terms(vec![
                    (n(same), Projective { r: base }),
                    (n(other), Projective { r: base.flip() }),
                ]),
            )
        }
        (Projective { .. }, Band { s, .. }) => (
            ProductCase::C11,
            terms(vec![
                (n(*s as u64), ModuleLabel::p(0)),
                (n(*s as u64), ModuleLabel::p(1)),
            ]),
        ),
        (Projective { .. }, Projective { .. }) => (
            ProductCase::C12,
            terms(vec![(n(2), ModuleLabel::p(0)), (n(2), ModuleLabel::p(1))]),
        ),
        (Syzygy { s, r: r1 }, Syzygy { s: t, r: r2 }) => {
            let (s, t) = (*s as u64, *t as u64);
            let base = *r1 + *r2;
            (
                ProductCase::C13,
                terms(vec![
                    (
                        n(1),
                        Syzygy {
                            s: (s + t) as u32,
                            r: base,
                        },
                    ),
                    (
                        n(s * t),
                        Projective {
                            r: base + ((s + t) % 2) as u32,
                        },
                    ),
                ]),
            )
        }
        (Cosyzygy { s, r: r1 }, Cosyzygy { s: t, r: r2 }) => {
            let (s, t) = (*s as u64, *t as u64);
            let base = *r1 + *r2;
            (
                ProductCase::C14,
                terms(vec![
                    (
                        n(1),
                        Cosyzygy {
                            s: (s + t) as u32,
                            r: base,
                        },
                    ),
                    (
                        n(s * t),
                        Projective {
                            r: base + ((s + t) % 2) as u32,
                        },
                    ),
                ]),
            )
        }
        (Syzygy { s, r: r1 }, Cosyzygy { s: t, r: r2 })
        | (Cosyzygy { s: t, r: r2 }, Syzygy { s, r: r1 }) => {
            let (s, t) = (*s as u64, *t as u64);
            let base = *r1 + *r2;
            let mult = (s.max(t) + 1) * s.min(t);
            (
                ProductCase::C15,
                terms(vec![
                    (n(1), ModuleLabel::omega(s as i64 - t as i64, base)),
                    (
                        n(mult),
                        Projective {
                            r: base + ((s + t + 1) % 2) as u32,
                        },
                    ),
                ]),
            )
        }
        (Syzygy { s, r: r1 }, Band { s: t, r, eta }) => {
            let (s, t) = (*s as u64, (*t));
            let base = *r + *r1;
            let (p, m) = if s % 2 == 1 {
                (base, base.flip())
            } else {
                (base.flip(), base)
            };
            (
                ProductCase::C16,
                terms(vec![
                    (n(s * t as u64), Projective { r: p }),
                    (
                        n(1),
                        Band {
                            s: t,
                            r: m,
                            eta: eta.clone(),
                        },
                    ),
                ]),
            )
        }
        (Cosyzygy { s, r: r1 }, Band { s: t, r, eta }) => {
            let (s, t) = (*s as u64, (*t));
            let base = *r + *r1;
            let (p, m) = if s % 2 == 1 {
                (base.flip(), base.flip())
            } else {
                (base, base)
            };
            (
                ProductCase::C17,
                terms(vec![
                    (n(s * t as u64), Projective { r: p }),
                    (
                        n(1),
                        Band {
                            s: t,
                            r: m,
                            eta: eta.clone(),
                        },
                    ),
                ]),
            )
        }
        (
            Band {
                s,
                r: r1,
                eta: alpha,
            },
            Band { s: t, r: r2, eta },
        ) => {
            let base = *r1 + *r2;
            if alpha != eta {
                (
                    ProductCase::C18,
                    terms(vec![(n(*s as u64 * *t as u64), Projective { r: base })]),
                )
            } else {
                let (lo, hi) = if s <= t { (*s, *t) } else { (*t, *s) };
                (
                    ProductCase::C19,
                    terms(vec![
                        (n(lo as u64 * (hi as u64 - 1)), Projective { r: base }),
                        (
                            n(1),
                            Band {
                                s: lo,
                                r: Z2::ZERO,
                                eta: eta.clone(),
                            },
                        ),
                        (
                            n(1),
                            Band {
                                s: lo,
                                r: Z2::ONE,
                                eta: eta.clone(),
                            },
                        ),
                    ]),
                )
            }
        }
        _ => unreachable!("pair ({a}, {b}) is not in dispatch order"),
    }
}

/// The rule that applies to `a ⊗ b`.
pub fn classify(a: &ModuleLabel, b: &ModuleLabel) -> ProductCase {
    product_with_case(a, b).0
}

/// Decomposition of `a ⊗ b` into indecomposables.
pub fn mul_labels(a: &ModuleLabel, b: &ModuleLabel) -> GreenElement {
    product_with_case(a, b).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::label_dimension;
    use crate::label::EtaParam;

    fn omega(n: i64, r: u8) -> ModuleLabel {
        ModuleLabel::omega(n, Z2::new(r as i64))
    }

    fn el(terms: &[(i64, ModuleLabel)]) -> GreenElement {
        GreenElement::from_terms(terms.iter().map(|(c, l)| (*c, l.clone())))
    }

    #[test]
    fn named_products() {
        assert_eq!(
            mul_labels(&ModuleLabel::t(0), &ModuleLabel::t(0)),
            el(&[(1, ModuleLabel::p(1))])
        );
        assert_eq!(
            mul_labels(&omega(1, 0), &omega(1, 0)),
            el(&[(1, omega(2, 0)), (1, ModuleLabel::p(0))])
        );
        assert_eq!(
            mul_labels(&omega(2, 1), &omega(-1, 0)),
            el(&[(1, omega(1, 1)), (3, ModuleLabel::p(1))])
        );
        assert_eq!(
            mul_labels(&omega(1, 0), &omega(-1, 0)),
            el(&[(1, ModuleLabel::v(0)), (2, ModuleLabel::p(1))])
        );
        let m0 = ModuleLabel::band(1, 0, EtaParam::integer(0));
        let minf = ModuleLabel::band(1, 0, EtaParam::Infinity);
        assert_eq!(mul_labels(&m0, &minf), el(&[(1, ModuleLabel::p(0))]));
        let eta = EtaParam::finite(5, 7);
        let m = ModuleLabel::band(1, 0, eta.clone());
        assert_eq!(
            mul_labels(&m, &m),
            el(&[(1, m.clone()), (1, ModuleLabel::band(1, 1, eta))])
        );
    }

    #[test]
    fn unit_is_identity() {
        let labels = [
            ModuleLabel::v(1),
            ModuleLabel::t(1),
            ModuleLabel::p(0),
            omega(3, 1),
            omega(-2, 0),
            ModuleLabel::band(2, 1, EtaParam::integer(-2)),
        ];
        for l in labels {
            assert_eq!(
                mul_labels(&ModuleLabel::v(0), &l),
                GreenElement::from_label(l.clone())
            );
        }
    }

    #[test]
    fn syzygy_cosyzygy_branches() {
        // s < t and s = t of the unified C15 formula.
        assert_eq!(
            mul_labels(&omega(1, 0), &omega(-3, 1)),
            el(&[(1, omega(-2, 1)), (4, ModuleLabel::p(0))])
        );
        assert_eq!(
            mul_labels(&omega(2, 0), &omega(-2, 0)),
            el(&[(1, ModuleLabel::v(0)), (6, ModuleLabel::p(1))])
        );
    }

    #[test]
    fn band_band_same_parameter_orders_by_size() {
        let eta = EtaParam::integer(1);
        let a = ModuleLabel::band(3, 1, eta.clone());
        let b = ModuleLabel::band(2, 0, eta.clone());
        let expected = el(&[
            (4, ModuleLabel::p(1)),
            (1, ModuleLabel::band(2, 0, eta.clone())),
            (1, ModuleLabel::band(2, 1, eta)),
        ]);
        assert_eq!(mul_labels(&a, &b), expected);
        assert_eq!(mul_labels(&b, &a), expected);
        assert_eq!(classify(&a, &b), ProductCase::C19);
    }

    #[test]
    fn case_names_round_trip() {
        for c in ProductCase::ALL {
            assert_eq!(c.to_string().parse::<ProductCase>().unwrap(), c);
        }
        assert!("C20".parse::<ProductCase>().is_err());
        assert!("C0".parse::<ProductCase>().is_err());
    }

    #[test]
    fn dimension_is_multiplicative_on_small_grid() {
        let mut labels = vec![];
        for r in 0..2u8 {
            labels.extend([ModuleLabel::v(r), ModuleLabel::t(r), ModuleLabel::p(r)]);
            for s in 1..=3 {
                labels.push(omega(s, r));
                labels.push(omega(-s, r));
                for eta in [EtaParam::integer(0), EtaParam::Infinity] {
                    labels.push(ModuleLabel::band(s as u32, r, eta));
                }
            }
        }
        for a in &labels {
            for b in &labels {
                let d = mul_labels(a, b).dimension();
                assert_eq!(
                    d,
                    BigInt::from(label_dimension(a) * label_dimension(b)),
                    "{a} * {b}"
                );
            }
        }
    }
}
