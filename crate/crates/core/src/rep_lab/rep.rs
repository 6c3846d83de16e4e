use num_traits::{One, Zero};

use super::util::{kernel_on, weight_from_signs};
use super::RepError;
use crate::linalg::{rat, LinalgError, Rat, RatMatrix};

/// A finite-dimensional `D4`-module given by the matrices of `a, b, c, d`
/// acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    a: RatMatrix,
    b: RatMatrix,
    c: RatMatrix,
    d: RatMatrix,
}

impl Representation {
    /// Checks shapes only; use [`check_relations`] for the algebra relations.
    pub fn new(
        a: RatMatrix,
        b: RatMatrix,
        c: RatMatrix,
        d: RatMatrix,
    ) -> Result<Representation, RepError> {
        let dim = a.rows();
        if [&a, &b, &c, &d]
            .iter()
            .any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(RepError::Shape { dim });
        }
        Ok(Representation { a, b, c, d })
    }

    pub fn zero() -> Representation {
        let z = RatMatrix::zeros(0, 0);
        Representation {
            a: z.clone(),
            b: z.clone(),
            c: z.clone(),
            d: z,
        }
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &RatMatrix {
        &self.a
    }

    pub fn b(&self) -> &RatMatrix {
        &self.b
    }

    pub fn c(&self) -> &RatMatrix {
        &self.c
    }

    pub fn d(&self) -> &RatMatrix {
        &self.d
    }

    /// `[A, B, C, D]`.
    pub fn generators(&self) -> [&RatMatrix; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    fn map(&self, f: impl Fn(&RatMatrix) -> RatMatrix) -> Representation {
        Representation {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }

    /// Whether `b` and `c` act diagonally with entries `±1`.
    pub fn is_weight_basis(&self) -> bool {
        let pm1 = |v: &Rat| v.is_one() || (-v).is_one();
        let diag = |m: &RatMatrix| {
            m.nonzeros().all(|(i, j, _)| i == j) && (0..m.rows()).all(|i| pm1(&m[(i, i)]))
        };
        diag(&self.b) && diag(&self.c)
    }

    /// Weight of basis vector `i`; only meaningful in a weight basis.
    pub fn weight(&self, i: usize) -> usize {
        weight_from_signs(self.b[(i, i)] < Rat::zero(), self.c[(i, i)] < Rat::zero())
    }

    /// Basis indices grouped by weight; only meaningful in a weight basis.
    pub fn weight_indices(&self) -> [Vec<usize>; 4] {
        let mut out: [Vec<usize>; 4] = Default::default();
        for i in 0..self.dim() {
            out[self.weight(i)].push(i);
        }
        out
    }

    /// `S⁻¹·X·S` for every generator.
    pub fn conjugate(&self, s: &RatMatrix) -> Result<Representation, RepError> {
        let inv = s.inverse()?;
        Ok(self.map(|x| &(&inv * x) * s))
    }

    /// An isomorphic copy in a weight basis, with the change of basis `S`
    /// (columns are the new basis vectors).
    pub fn to_weight_basis(&self) -> Result<(Representation, RatMatrix), RepError> {
        let n = self.dim();
        if self.is_weight_basis() {
            return Ok((self.clone(), RatMatrix::identity(n)));
        }
        let all: Vec<usize> = (0..n).collect();
        let mut cols = Vec::new();
        for w in 0..4 {
            let beta = if w & 1 == 1 { rat(-1) } else { rat(1) };
            let gamma = if w & 2 == 2 { rat(-1) } else { rat(1) };
            let stacked = RatMatrix::vstack(&[
                &(&self.b - &RatMatrix::scalar(n, beta)),
                &(&self.c - &RatMatrix::scalar(n, gamma)),
            ]);
            cols.extend(kernel_on(&stacked, &all));
        }
        if cols.len() != n {
            return Err(RepError::NotSemisimple);
        }
        let s = RatMatrix::from_columns(n, &cols);
        Ok((self.conjugate(&s)?, s))
    }

    /// The subrepresentation on the span of `basis`, expressed in that basis.
    pub fn restrict(&self, basis: &[Vec<Rat>]) -> Result<Representation, RepError> {
        let n = self.dim();
        let k = basis.len();
        if k == 0 {
            return Ok(Representation::zero());
        }
        let s = RatMatrix::from_columns(n, basis);
        let rows = s.transpose().rref().pivots;
        if rows.len() < k {
            return Err(LinalgError::Singular.into());
        }
        let r_inv = s.select_rows(&rows).inverse()?;
        let mut out = Vec::with_capacity(4);
        for x in self.generators() {
            let xs = x * &s;
            let restricted = &r_inv * &xs.select_rows(&rows);
            if &s * &restricted != xs {
                return Err(RepError::NotInvariant);
            }
            out.push(restricted);
        }
        let [a, b, c, d]: [RatMatrix; 4] = out.try_into().expect("four generators");
        Ok(Representation { a, b, c, d })
    }

    /// The subrepresentation on a set of basis coordinates.
    pub fn restrict_coordinates(&self, idx: &[usize]) -> Result<Representation, RepError> {
        let inside: std::collections::HashSet<usize> = idx.iter().copied().collect();
        for x in self.generators() {
            if x.nonzeros()
                .any(|(i, j, _)| inside.contains(&j) && !inside.contains(&i))
            {
                return Err(RepError::NotInvariant);
            }
        }
        Ok(self.map(|x| x.submatrix(idx, idx)))
    }
}

/// Whether all ten defining relations of `D4` hold exactly.
pub fn check_relations(rep: &Representation) -> bool {
    let n = rep.dim();
    let (a, b, c, d) = (&rep.a, &rep.b, &rep.c, &rep.d);
    let id = RatMatrix::identity(n);
    let anti = |x: &RatMatrix, y: &RatMatrix| (&(x * y) + &(y * x)).is_zero();
    anti(b, a)
        && anti(d, b)
        && anti(c, a)
        && anti(d, c)
        && b * c == c * b
        && (a * a).is_zero()
        && b * b == id
        && c * c == id
        && (d * d).is_zero()
        && &(d * a) + &(a * d) == &id - &(b * c)
}

/// `M ⊗ N` through the coproduct: `Δa = a⊗b + 1⊗a`, `Δb = b⊗b`,
/// `Δc = c⊗c`, `Δd = d⊗c + 1⊗d`.
pub fn tensor(m: &Representation, n: &Representation) -> Representation {
    let id = RatMatrix::identity(m.dim());
    Representation {
        a: &m.a.kron(&n.b) + &id.kron(&n.a),
        b: m.b.kron(&n.b),
        c: m.c.kron(&n.c),
        d: &m.d.kron(&n.c) + &id.kron(&n.d),
    }
}

/// The dual module: `h` acts by the transpose of `S(h)`, with `S(a) = ba`,
/// `S(b) = b`, `S(c) = c`, `S(d) = cd`.
pub fn dual(m: &Representation) -> Representation {
    Representation {
        a: (&m.b * &m.a).transpose(),
        b: m.b.transpose(),
        c: m.c.transpose(),
        d: (&m.c * &m.d).transpose(),
    }
}

/// Block-diagonal sum.
pub fn direct_sum(reps: &[Representation]) -> Representation {
    let gather = |f: fn(&Representation) -> &RatMatrix| {
        RatMatrix::block_diag(&reps.iter().map(f).collect::<Vec<_>>())
    };
    Representation {
        a: gather(Representation::a),
        b: gather(Representation::b),
        c: gather(Representation::c),
        d: gather(Representation::d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::ModuleLabel;
    use crate::rep_lab::build;

    #[test]
    fn relation_violations_detected() {
        let bad = Representation::new(
            RatMatrix::identity(2),
            RatMatrix::identity(2),
            RatMatrix::identity(2),
            RatMatrix::zeros(2, 2),
        )
        .unwrap();
        assert!(!check_relations(&bad));
        assert!(check_relations(&build(&ModuleLabel::p(1))));
        assert!(check_relations(&tensor(
            &build(&ModuleLabel::t(0)),
            &build(&ModuleLabel::t(0))
        )));
    }

    #[test]
    fn shape_checked() {
        let e = Representation::new(
            RatMatrix::zeros(2, 2),
            RatMatrix::zeros(2, 2),
            RatMatrix::zeros(3, 3),
            RatMatrix::zeros(2, 2),
        );
        assert_eq!(e, Err(RepError::Shape { dim: 2 }));
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&[]).dim(), 0);
        let s = direct_sum(&[build(&ModuleLabel::v(0)), build(&ModuleLabel::v(1))]);
        assert_eq!(s.dim(), 2);
        assert_eq!(*s.b(), RatMatrix::from_i64(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn weight_normalization_round_trip() {
        let p = build(&ModuleLabel::p(0));
        let s = RatMatrix::from_fn(4, 4, |i, j| {
            rat(if i <= j { 1 + (i + 2 * j) as i64 } else { 0 })
        });
        let mixed = p.conjugate(&s).unwrap();
        assert!(!mixed.is_weight_basis());
        let (w, _) = mixed.to_weight_basis().unwrap();
        assert!(w.is_weight_basis());
        assert!(check_relations(&w));
    }

    #[test]
    fn restrict_rejects_non_invariant() {
        let p = build(&ModuleLabel::p(0));
        let top = vec![rat(1), rat(0), rat(0), rat(0)];
        assert_eq!(p.restrict(&[top]), Err(RepError::NotInvariant));
        let soc = vec![rat(0), rat(0), rat(0), rat(1)];
        assert_eq!(p.restrict(&[soc]).unwrap().dim(), 1);
    }
}
