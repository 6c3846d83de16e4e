use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rep::Representation;
use super::{RepError, DEFAULT_SEED};
use crate::linalg::{rat, Rat, RatMatrix, SparseSystem};

/// A basis of `Hom_{D4}(M, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<RatMatrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ coeffs[i]·basis[i]`.
    pub fn combination(&self, coeffs: &[i64]) -> RatMatrix {
        assert_eq!(
            coeffs.len(),
            self.basis.len(),
            "one coefficient per basis element"
        );
        let mut out = RatMatrix::zeros(self.target_dim, self.source_dim);
        for (f, &c) in self.basis.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            let c = rat(c);
            for (i, j, v) in f.nonzeros() {
                out[(i, j)] += v * &c;
            }
        }
        out
    }
}

/// All `F` with `F·X_M = X_N·F` for `X ∈ {a, b, c, d}`.
///
/// Only weight-preserving entries are unknowns, which takes care of `b` and
/// `c`; the equations for `a` and `d` are solved sparsely.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<HomSpace, RepError> {
    let (mw, sm) = m.to_weight_basis()?;
    let (nw, sn) = n.to_weight_basis()?;
    let mut basis = hom_weight(&mw, &nw);
    if !(m.is_weight_basis() && n.is_weight_basis()) {
        let sm_inv = sm.inverse()?;
        basis = basis.iter().map(|f| &(&sn * f) * &sm_inv).collect();
    }
    Ok(HomSpace {
        source_dim: m.dim(),
        target_dim: n.dim(),
        basis,
    })
}

fn hom_weight(m: &Representation, n: &Representation) -> Vec<RatMatrix> {
    let (dm, dn) = (m.dim(), n.dim());
    let wm: Vec<usize> = (0..dm).map(|j| m.weight(j)).collect();
    let wn: Vec<usize> = (0..dn).map(|i| n.weight(i)).collect();
    let mut var = vec![None; dn * dm];
    let mut cells = Vec::new();
    for i in 0..dn {
        for j in 0..dm {
            if wn[i] == wm[j] {
                var[i * dm + j] = Some(cells.len());
                cells.push((i, j));
            }
        }
    }
    let mut sys = SparseSystem::new(cells.len());
    for (xm, xn) in [(m.a(), n.a()), (m.d(), n.d())] {
        let mut col_m: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); dm];
        for (k, j, v) in xm.nonzeros() {
            col_m[j].push((k, v.clone()));
        }
        let mut row_n: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); dn];
        for (i, k, v) in xn.nonzeros() {
            row_n[i].push((k, v.clone()));
        }
        for i in 0..dn {
            for j in 0..dm {
                if wn[i] != wm[j] ^ 3 {
                    continue;
                }
                // (F·X_M - X_N·F)[i][j] = 0
                let lhs = col_m[j]
                    .iter()
                    .filter_map(|(k, v)| var[i * dm + k].map(|x| (x, v.clone())));
                let rhs = row_n[i]
                    .iter()
                    .filter_map(|(k, v)| var[k * dm + j].map(|x| (x, -v.clone())));
                sys.add_equation(lhs.chain(rhs));
            }
        }
    }
    sys.kernel_basis()
        .into_iter()
        .map(|sol| {
            let mut f = RatMatrix::zeros(dn, dm);
            for (x, &(i, j)) in sol.into_iter().zip(&cells) {
                if !x.is_zero() {
                    f[(i, j)] = x;
                }
            }
            f
        })
        .collect()
}

// Basis-independent numbers that must agree for isomorphic modules.
fn invariants(m: &Representation) -> Vec<usize> {
    let idx = m.weight_indices();
    let mut out: Vec<usize> = idx.iter().map(Vec::len).collect();
    out.push(m.a().rank());
    out.push(m.d().rank());
    out.push((m.a() * m.d()).rank());
    out.push((m.d() * m.a()).rank());
    out
}

struct Blocks {
    src: [Vec<usize>; 4],
    tgt: [Vec<usize>; 4],
}

impl Blocks {
    fn invertible(&self, f: &RatMatrix) -> bool {
        (0..4).all(|w| {
            self.src[w].len() == self.tgt[w].len()
                && (self.src[w].is_empty()
                    || f.submatrix(&self.tgt[w], &self.src[w]).is_invertible())
        })
    }

    // No invertible combination exists if the images of all basis elements
    // miss part of some weight space, or their kernels share a vector.
    fn certifies_none(&self, hom: &HomSpace) -> bool {
        (0..4).any(|w| {
            if self.src[w].is_empty() {
                return false;
            }
            let blocks: Vec<RatMatrix> = hom
                .basis
                .iter()
                .map(|f| f.submatrix(&self.tgt[w], &self.src[w]))
                .collect();
            let refs: Vec<&RatMatrix> = blocks.iter().collect();
            RatMatrix::hstack(&refs).rank() < self.tgt[w].len()
                || RatMatrix::vstack(&refs).rank() < self.src[w].len()
        })
    }
}

/// Some isomorphism `M → N`, searched among integer combinations of a Hom
/// basis. A returned matrix is always an exact invertible intertwiner.
pub fn find_isomorphism(
    m: &Representation,
    n: &Representation,
    seed: u64,
) -> Result<Option<RatMatrix>, RepError> {
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(RatMatrix::zeros(0, 0)));
    }
    let (mw, sm) = m.to_weight_basis()?;
    let (nw, sn) = n.to_weight_basis()?;
    if invariants(&mw) != invariants(&nw) {
        return Ok(None);
    }
    let hom = HomSpace {
        source_dim: mw.dim(),
        target_dim: nw.dim(),
        basis: hom_weight(&mw, &nw),
    };
    if hom.basis.is_empty() {
        return Ok(None);
    }
    let blocks = Blocks {
        src: mw.weight_indices(),
        tgt: nw.weight_indices(),
    };
    let k = hom.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = None;

    let mut bound = 2i64;
    for _ in 0..8 {
        let coeffs: Vec<i64> = (0..k).map(|_| rng.gen_range(-bound..=bound)).collect();
        let f = hom.combination(&coeffs);
        if blocks.invertible(&f) {
            found = Some(f);
            break;
        }
        bound *= 2;
    }
    if found.is_none() {
        found = box_search(&hom, &blocks);
    }
    if found.is_none() && !blocks.certifies_none(&hom) {
        // det of the generic combination has degree ≤ dim; a nonzero one
        // vanishes at a random point with probability ≤ dim / (2^21 + 1).
        for _ in 0..16 {
            let coeffs: Vec<i64> = (0..k)
                .map(|_| rng.gen_range(-(1 << 20)..=(1 << 20)))
                .collect();
            let f = hom.combination(&coeffs);
            if blocks.invertible(&f) {
                found = Some(f);
                break;
            }
        }
    }
    let Some(f) = found else { return Ok(None) };
    if m.is_weight_basis() && n.is_weight_basis() {
        return Ok(Some(f));
    }
    Ok(Some(&(&sn * &f) * &sm.inverse()?))
}

fn box_search(hom: &HomSpace, blocks: &Blocks) -> Option<RatMatrix> {
    let k = hom.dim();
    if 3usize.checked_pow(k as u32).is_some_and(|n| n <= 2187) {
        let mut coeffs = vec![-1i64; k];
        loop {
            let f = hom.combination(&coeffs);
            if blocks.invertible(&f) {
                return Some(f);
            }
            let mut i = 0;
            while i < k && coeffs[i] == 1 {
                coeffs[i] = -1;
                i += 1;
            }
            if i == k {
                return None;
            }
            coeffs[i] += 1;
        }
    }
    for i in 0..k {
        for j in i..k {
            for (ci, cj) in [(1, 0), (1, 1), (1, -1), (2, 1), (1, 2)] {
                let mut coeffs = vec![0i64; k];
                coeffs[i] += ci;
                coeffs[j] += cj;
                let f = hom.combination(&coeffs);
                if blocks.invertible(&f) {
                    return Some(f);
                }
            }
        }
    }
    None
}

/// Whether `M ≅ N`, with the default seed.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> bool {
    is_isomorphic_seeded(m, n, DEFAULT_SEED)
}

/// Whether `M ≅ N`. Inputs whose `b, c` are not diagonalizable are never
/// isomorphic to anything.
pub fn is_isomorphic_seeded(m: &Representation, n: &Representation, seed: u64) -> bool {
    matches!(find_isomorphism(m, n, seed), Ok(Some(_)))
}
