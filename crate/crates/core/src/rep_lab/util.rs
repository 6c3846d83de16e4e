use num_traits::{One, Zero};

use crate::label::Z2;
use crate::linalg::{Rat, RatMatrix, SparseSystem};

/// Weights on which `bc` acts by `+1`.
pub(crate) const PLUS_WEIGHTS: [usize; 2] = [0, 3];

pub(crate) fn weight_from_signs(b_negative: bool, c_negative: bool) -> usize {
    b_negative as usize | (c_negative as usize) << 1
}

/// `r` of the one-dimensional simple living in a `bc = +1` weight.
pub(crate) fn simple_r(w: usize) -> Z2 {
    debug_assert!(PLUS_WEIGHTS.contains(&w));
    if w == 0 {
        Z2::ZERO
    } else {
        Z2::ONE
    }
}

/// Weight of the vector of `V(2,r)` killed by `d`.
pub(crate) fn head_weight(r: Z2) -> usize {
    if r == Z2::ZERO {
        2
    } else {
        1
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

pub(crate) fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Greedily grown linearly independent set of vectors.
pub(crate) struct Span {
    sys: SparseSystem,
    vectors: Vec<Vec<Rat>>,
}

impl Span {
    pub(crate) fn new(n: usize) -> Span {
        Span {
            sys: SparseSystem::new(n),
            vectors: Vec::new(),
        }
    }

    /// Keeps `v` if it is independent of the vectors kept so far.
    pub(crate) fn insert(&mut self, v: Vec<Rat>) -> bool {
        let grew = self.sys.add_equation(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone())),
        );
        if grew {
            self.vectors.push(v);
        }
        grew
    }

    pub(crate) fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    pub(crate) fn into_vectors(self) -> Vec<Vec<Rat>> {
        self.vectors
    }
}

/// Basis of `{v : m·v = 0}` among vectors supported on `cols`.
pub(crate) fn kernel_on(m: &RatMatrix, cols: &[usize]) -> Vec<Vec<Rat>> {
    m.select_cols(cols)
        .kernel_basis()
        .into_iter()
        .map(|k| lift(m.cols(), cols, &k))
        .collect()
}

/// Spreads a vector indexed by `cols` into a length-`n` vector.
pub(crate) fn lift(n: usize, cols: &[usize], v: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for (c, x) in cols.iter().zip(v) {
        out[*c] = x.clone();
    }
    out
}

/// `m^k` for some `k ≥ m.rows()`, computed by squaring.
pub(crate) fn stable_power(m: &RatMatrix) -> RatMatrix {
    let mut p = m.clone();
    let mut k = 1;
    while k < m.rows() {
        p = &p * &p;
        k *= 2;
    }
    p
}
