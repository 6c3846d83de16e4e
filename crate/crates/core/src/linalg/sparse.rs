use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Rat;

/// Incrementally reduced homogeneous linear system in sparse form.
///
/// Every stored row is normalized so that its smallest column carries a
/// coefficient of one and no other stored row has that column as its pivot.
/// Entries to the right of a pivot may refer to columns that became pivots
/// later; back substitution in decreasing pivot order handles that.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    unknowns: usize,
    rows: BTreeMap<usize, BTreeMap<usize, Rat>>,
}

impl SparseSystem {
    pub fn new(unknowns: usize) -> SparseSystem {
        SparseSystem {
            unknowns,
            rows: BTreeMap::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds the equation `Σ coeff·x[col] = 0`; duplicate columns are summed.
    /// Returns whether the rank grew.
    pub fn add_equation<I: IntoIterator<Item = (usize, Rat)>>(&mut self, terms: I) -> bool {
        let mut row: BTreeMap<usize, Rat> = BTreeMap::new();
        for (c, v) in terms {
            assert!(c < self.unknowns, "column {c} out of range");
            if v.is_zero() {
                continue;
            }
            let e = row.entry(c).or_insert_with(Rat::zero);
            *e += v;
            if e.is_zero() {
                row.remove(&c);
            }
        }
        // Eliminate pivot columns in increasing order; elimination only
        // introduces columns larger than the one removed.
        let mut cursor = 0;
        loop {
            let next = row
                .range(cursor..)
                .map(|(c, _)| *c)
                .find(|c| self.rows.contains_key(c));
            let Some(c) = next else { break };
            let f = row.remove(&c).expect("present");
            for (k, v) in &self.rows[&c] {
                if *k == c {
                    continue;
                }
                let e = row.entry(*k).or_insert_with(Rat::zero);
                *e -= &f * v;
                if e.is_zero() {
                    row.remove(k);
                }
            }
            cursor = c + 1;
        }
        let Some((&lead, lv)) = row.iter().next() else {
            return false;
        };
        let inv = lv.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        debug_assert!(row[&lead].is_one());
        self.rows.insert(lead, row);
        true
    }

    /// Basis of the solution space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let free: Vec<usize> = (0..self.unknowns)
            .filter(|c| !self.rows.contains_key(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rat::zero(); self.unknowns];
                x[f] = Rat::one();
                for (&p, row) in self.rows.iter().rev() {
                    let mut acc = Rat::zero();
                    for (&k, v) in row.range(p + 1..) {
                        if !x[k].is_zero() {
                            acc -= v * &x[k];
                        }
                    }
                    x[p] = acc;
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, RatMatrix};

    #[test]
    fn matches_dense_kernel() {
        let m = RatMatrix::from_i64(&[&[1, 2, 0, -1], &[0, 1, 1, 1], &[1, 3, 1, 0]]);
        let mut sys = SparseSystem::new(4);
        for i in 0..3 {
            sys.add_equation(m.row(i).iter().cloned().enumerate());
        }
        assert_eq!(sys.rank(), 2);
        let k = sys.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        assert_eq!(RatMatrix::from_columns(4, &k).rank(), 2);
    }

    #[test]
    fn later_pivot_inside_earlier_row() {
        let mut sys = SparseSystem::new(3);
        sys.add_equation([(0, rat(1)), (2, rat(1))]);
        sys.add_equation([(2, rat(1))]);
        assert_eq!(sys.kernel_basis(), vec![vec![rat(0), rat(1), rat(0)]]);
    }
}
