use super::build::build;
use super::rep::{direct_sum, dual, Representation};
use super::util::{head_weight, kernel_on, simple_r, unit, Span, PLUS_WEIGHTS};
use super::RepError;
use crate::label::{ModuleLabel, Z2};
use crate::linalg::{Rat, RatMatrix};

/// Projective cover `π: P → M`, returned as `(P, π)` with `π` a
/// `dim M × dim P` matrix.
///
/// On the `bc = +1` block each top vector `u` (a weight vector outside
/// `aM + dM`) gives a copy of `P(r)` mapped by `[u, au, du, adu]`. The
/// `bc = -1` block is a sum of the projective simples `V(2,r)`, one per
/// vector `u` of the right weight killed by `d`, mapped by `[u, au]`.
pub fn projective_cover_map(m: &Representation) -> Result<(Representation, RatMatrix), RepError> {
    let (mw, s) = m.to_weight_basis()?;
    let (p, pi) = cover_weight(&mw);
    if m.is_weight_basis() {
        Ok((p, pi))
    } else {
        Ok((p, &s * &pi))
    }
}

fn cover_weight(m: &Representation) -> (Representation, RatMatrix) {
    let n = m.dim();
    let idx = m.weight_indices();
    let (a, d) = (m.a(), m.d());
    let mut pieces = Vec::new();
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    for w in PLUS_WEIGHTS {
        let mut span = Span::new(n);
        for &j in &idx[w ^ 3] {
            span.insert(a.column(j));
            span.insert(d.column(j));
        }
        for &i in &idx[w] {
            let u = unit(n, i);
            if span.insert(u.clone()) {
                let au = a.mul_vec(&u);
                let du = d.mul_vec(&u);
                let adu = a.mul_vec(&du);
                cols.extend([u, au, du, adu]);
                pieces.push(build(&ModuleLabel::Projective { r: simple_r(w) }));
            }
        }
    }
    for r in [Z2::ZERO, Z2::ONE] {
        for u in kernel_on(d, &idx[head_weight(r)]) {
            let au = a.mul_vec(&u);
            cols.extend([u, au]);
            pieces.push(build(&ModuleLabel::SimpleTwo { r }));
        }
    }
    let p = direct_sum(&pieces);
    (p, RatMatrix::from_columns(n, &cols))
}

/// `ΩM`, the kernel of the projective cover.
pub fn syzygy(m: &Representation) -> Representation {
    let (mw, _) = m
        .to_weight_basis()
        .expect("b and c act semisimply on a D4-module");
    let (p, pi) = cover_weight(&mw);
    let basis: Vec<Vec<Rat>> = p
        .weight_indices()
        .iter()
        .flat_map(|cols| kernel_on(&pi, cols))
        .collect();
    p.restrict(&basis)
        .expect("kernel of a module map is a submodule")
}

/// `Ω⁻¹M = (Ω(M*))*`.
pub fn cosyzygy(m: &Representation) -> Representation {
    dual(&syzygy(&dual(m)))
}
