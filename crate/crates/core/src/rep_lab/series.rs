use super::rep::Representation;
use crate::linalg::{Rat, RatMatrix};

// Projection onto the bc = +1 block, the only block with a nonzero radical.
fn plus_projection(m: &Representation) -> RatMatrix {
    let n = m.dim();
    (&RatMatrix::identity(n) + &(m.b() * m.c())).scale(&Rat::new(1.into(), 2.into()))
}

fn radical_of(m: &Representation, e: &RatMatrix, span: &RatMatrix) -> RatMatrix {
    let es = e * span;
    let stacked = RatMatrix::hstack(&[&(m.a() * &es), &(m.d() * &es)]);
    let cols = stacked.column_space();
    RatMatrix::from_columns(m.dim(), &cols)
}

/// Basis of the radical `JM`, which is `aM + dM` on the `bc = +1` block and
/// zero on the semisimple `bc = -1` block.
pub fn radical(m: &Representation) -> Vec<Vec<Rat>> {
    let e = plus_projection(m);
    let r = radical_of(m, &e, &RatMatrix::identity(m.dim()));
    (0..r.cols()).map(|j| r.column(j)).collect()
}

/// Basis of the socle: the whole `bc = -1` block plus the joint kernel of
/// `a` and `d` on the `bc = +1` block.
pub fn socle(m: &Representation) -> Vec<Vec<Rat>> {
    let e = plus_projection(m);
    RatMatrix::vstack(&[&(m.a() * &e), &(m.d() * &e)]).kernel_basis()
}

/// Dimension of `M/JM`.
pub fn top_dimension(m: &Representation) -> usize {
    m.dim() - radical(m).len()
}

/// Least `n` with `JⁿM = 0`; at most 3.
pub fn loewy_length(m: &Representation) -> usize {
    let e = plus_projection(m);
    let mut span = RatMatrix::identity(m.dim());
    let mut n = 0;
    while span.cols() > 0 {
        span = radical_of(m, &e, &span);
        n += 1;
    }
    n
}
