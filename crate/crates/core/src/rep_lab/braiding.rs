use std::fmt;

use super::rep::{tensor, Representation};
use crate::linalg::{rat, Rat, RatMatrix};

/// One summand `coeff · aⁱbʲcˡdᵏ ⊗ aⁱ'bʲ'cˡ'dᵏ'` of `2ℛ`; exponents are
/// listed in the order `[a, b, c, d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RMatrixTerm {
    pub coeff: i64,
    pub left: [u8; 4],
    pub right: [u8; 4],
}

/// The universal R-matrix
/// `ℛ = ½(1⊗1 + b⊗1 + 1⊗c − b⊗c + a⊗d + ab⊗d + a⊗cd − ab⊗cd)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixElement {
    pub terms: Vec<RMatrixTerm>,
}

impl Default for RMatrixElement {
    fn default() -> RMatrixElement {
        RMatrixElement::new()
    }
}

impl RMatrixElement {
    pub fn new() -> RMatrixElement {
        let t = |coeff, left, right| RMatrixTerm { coeff, left, right };
        RMatrixElement {
            terms: vec![
                t(1, [0, 0, 0, 0], [0, 0, 0, 0]),
                t(1, [0, 1, 0, 0], [0, 0, 0, 0]),
                t(1, [0, 0, 0, 0], [0, 0, 1, 0]),
                t(-1, [0, 1, 0, 0], [0, 0, 1, 0]),
                t(1, [1, 0, 0, 0], [0, 0, 0, 1]),
                t(1, [1, 1, 0, 0], [0, 0, 0, 1]),
                t(1, [1, 0, 0, 0], [0, 0, 1, 1]),
                t(-1, [1, 1, 0, 0], [0, 0, 1, 1]),
            ],
        }
    }

    /// Action of ℛ on `M ⊗ N`.
    pub fn act(&self, m: &Representation, n: &Representation) -> RatMatrix {
        let half = Rat::new(1.into(), 2.into());
        let mut out = RatMatrix::zeros(m.dim() * n.dim(), m.dim() * n.dim());
        for term in &self.terms {
            let piece = word(m, term.left).kron(&word(n, term.right));
            out = &out + &piece.scale(&(rat(term.coeff) * &half));
        }
        out
    }
}

impl fmt::Display for RMatrixElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = |e: [u8; 4]| {
            let s: String = ["a", "b", "c", "d"]
                .iter()
                .zip(e)
                .filter(|(_, k)| *k > 0)
                .map(|(g, _)| *g)
                .collect();
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        write!(f, "1/2(")?;
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.coeff < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.coeff.abs() != 1 {
                write!(f, "{}", t.coeff.abs())?;
            }
            write!(f, "{}⊗{}", mono(t.left), mono(t.right))?;
        }
        write!(f, ")")
    }
}

// Matrix of aⁱbʲcˡdᵏ acting on M.
fn word(m: &Representation, e: [u8; 4]) -> RatMatrix {
    let mut out = RatMatrix::identity(m.dim());
    for (g, k) in m.generators().into_iter().zip(e) {
        for _ in 0..k {
            out = &out * g;
        }
    }
    out
}

/// `flip ∘ ℛ : M ⊗ N → N ⊗ M`.
pub fn braiding_map(m: &Representation, n: &Representation) -> RatMatrix {
    let (dm, dn) = (m.dim(), n.dim());
    let mut flip = RatMatrix::zeros(dm * dn, dm * dn);
    for i in 0..dm {
        for j in 0..dn {
            flip[(j * dm + i, i * dn + j)] = rat(1);
        }
    }
    &flip * &RMatrixElement::new().act(m, n)
}

/// Whether `flip ∘ ℛ` is an invertible module map `M ⊗ N → N ⊗ M`.
pub fn braiding_check(m: &Representation, n: &Representation) -> bool {
    let f = braiding_map(m, n);
    let src = tensor(m, n);
    let tgt = tensor(n, m);
    f.is_invertible()
        && src
            .generators()
            .iter()
            .zip(tgt.generators())
            .all(|(x, y)| &f * *x == y * &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::{EtaParam, ModuleLabel, Z2};
    use crate::rep_lab::build;

    #[test]
    fn eight_terms() {
        let r = RMatrixElement::new();
        assert_eq!(r.terms.len(), 8);
        assert_eq!(r.terms.iter().map(|t| t.coeff).sum::<i64>(), 4);
        assert_eq!(
            r.to_string(),
            "1/2(1⊗1 + b⊗1 + 1⊗c - b⊗c + a⊗d + ab⊗d + a⊗cd - ab⊗cd)"
        );
    }

    #[test]
    fn braiding_examples() {
        let v0 = build(&ModuleLabel::v(0));
        let p = build(&ModuleLabel::p(1));
        assert!(braiding_check(&v0, &p));
        assert!(braiding_check(&p, &v0));
        assert!(braiding_check(
            &build(&ModuleLabel::t(0)),
            &build(&ModuleLabel::t(1))
        ));
        assert!(braiding_check(
            &build(&ModuleLabel::omega(1, Z2::ZERO)),
            &build(&ModuleLabel::band(1, 0, EtaParam::integer(2)))
        ));
    }

    #[test]
    fn plain_flip_is_not_a_module_map() {
        let t = build(&ModuleLabel::t(0));
        let om = build(&ModuleLabel::omega(1, Z2::ZERO));
        let (dm, dn) = (t.dim(), om.dim());
        let flip = RatMatrix::from_fn(dm * dn, dm * dn, |r, c| {
            let (i, j) = (c / dn, c % dn);
            rat((r == j * dm + i) as i64)
        });
        let src = tensor(&t, &om);
        let tgt = tensor(&om, &t);
        assert!(!src
            .generators()
            .iter()
            .zip(tgt.generators())
            .all(|(x, y)| &flip * *x == y * &flip));
    }
}
