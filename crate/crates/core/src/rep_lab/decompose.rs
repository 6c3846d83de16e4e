//! Krull-Schmidt decomposition of explicit modules.
//!
//! The module is cut up in stages, each of which is exact:
//!
//! 1. `bc` is central, so the `bc = -1` and `bc = +1` weight blocks are
//!    submodules. The first is a sum of the simple projectives `V(2,r)`.
//! 2. On the `bc = +1` block, `ad` is nonzero exactly on projective summands.
//!    Vectors `v` whose images `adv` are independent give an embedding of a
//!    sum of `P(r)`s, and a retraction built from dual functionals splits it
//!    off.
//! 3. What remains has `J² = 0` and separates by the weight of its top. Top
//!    vectors killed by `a` and `d` are simple summands.
//! 4. Each remaining part is identified from its top and socle dimensions,
//!    and the guess is certified by an explicit isomorphism with the built
//!    module. Only when that fails is the part split by Fitting's lemma.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::build::build;
use super::hom::{find_isomorphism, hom_space};
use super::rep::Representation;
use super::series::{loewy_length, radical};
use super::util::{
    head_weight, is_zero_vec, kernel_on, simple_r, stable_power, unit, Span, PLUS_WEIGHTS,
};
use super::{RepError, DEFAULT_SEED};
use crate::label::{EtaParam, ModuleLabel, Z2};
use crate::linalg::{rat, Rat, RatMatrix};

/// Indecomposable summands of `m`, sorted, with the default seed.
pub fn decompose(m: &Representation) -> Result<Vec<ModuleLabel>, RepError> {
    decompose_seeded(m, DEFAULT_SEED)
}

/// Indecomposable summands of `m`, sorted. Every summand is certified by an
/// explicit isomorphism; failure to split or identify is an error.
pub fn decompose_seeded(m: &Representation, seed: u64) -> Result<Vec<ModuleLabel>, RepError> {
    let (m, _) = m.to_weight_basis()?;
    let idx = m.weight_indices();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    let mut minus: Vec<usize> = idx[1].iter().chain(&idx[2]).copied().collect();
    minus.sort_unstable();
    let mut plus: Vec<usize> = idx[0].iter().chain(&idx[3]).copied().collect();
    plus.sort_unstable();

    split_semisimple(&m.restrict_coordinates(&minus)?, &mut out, rng.gen())?;
    let rest = split_projectives(&m.restrict_coordinates(&plus)?, &mut out)?;
    split_square_zero(&rest, &mut out, &mut rng)?;
    out.sort();
    Ok(out)
}

fn certify(part: &Representation, label: &ModuleLabel, seed: u64) -> Result<bool, RepError> {
    Ok(find_isomorphism(part, &build(label), seed)?.is_some())
}

fn split_semisimple(
    m: &Representation,
    out: &mut Vec<ModuleLabel>,
    seed: u64,
) -> Result<(), RepError> {
    let idx = m.weight_indices();
    let mut covered = 0;
    for r in [Z2::ZERO, Z2::ONE] {
        let label = ModuleLabel::SimpleTwo { r };
        for u in kernel_on(m.d(), &idx[head_weight(r)]) {
            let au = m.a().mul_vec(&u);
            let piece = m.restrict(&[u, au])?;
            if !certify(&piece, &label, seed)? {
                return Err(RepError::Uncertified(label));
            }
            out.push(label.clone());
            covered += 2;
        }
    }
    if covered != m.dim() {
        return Err(RepError::Stalled {
            dim: m.dim(),
            top: m.dim(),
            socle: m.dim(),
        });
    }
    Ok(())
}

// Splits off all projective summands and returns a complement.
fn split_projectives(
    m: &Representation,
    out: &mut Vec<ModuleLabel>,
) -> Result<Representation, RepError> {
    let n = m.dim();
    let idx = m.weight_indices();
    let (a, d) = (m.a(), m.d());
    let ad = a * d;
    let mut iota: Vec<Vec<Rat>> = Vec::new();
    let mut pi: Vec<Vec<Rat>> = Vec::new();
    let mut pieces = Vec::new();
    for w in PLUS_WEIGHTS {
        let mut span = Span::new(n);
        let tops: Vec<usize> = idx[w]
            .iter()
            .copied()
            .filter(|&i| span.insert(ad.column(i)))
            .collect();
        if tops.is_empty() {
            continue;
        }
        // Functionals on weight w dual to the socle vectors ad·v.
        let u = ad.submatrix(&idx[w], &tops);
        let rows = u.transpose().rref().pivots;
        let inv = u.select_rows(&rows).inverse()?;
        for (j, &t) in tops.iter().enumerate() {
            let coords: Vec<usize> = rows.iter().map(|&l| idx[w][l]).collect();
            let f = RatMatrix::from_fn(1, n, |_, c| {
                coords
                    .iter()
                    .position(|&x| x == c)
                    .map_or_else(Rat::zero, |l| inv[(j, l)].clone())
            });
            let v = unit(n, t);
            let dv = d.mul_vec(&v);
            iota.extend([v.clone(), a.mul_vec(&v), dv.clone(), a.mul_vec(&dv)]);
            pi.extend([
                (&f * &ad).row(0).to_vec(),
                (-(&f * d)).row(0).to_vec(),
                (&f * a).row(0).to_vec(),
                f.row(0).to_vec(),
            ]);
            let r = simple_r(w);
            pieces.push(build(&ModuleLabel::Projective { r }));
            out.push(ModuleLabel::Projective { r });
        }
    }
    if pieces.is_empty() {
        return Ok(m.clone());
    }
    let iota = RatMatrix::from_columns(n, &iota);
    let pi = RatMatrix::from_rows(pi)?;
    if !(&pi * &iota).is_invertible() {
        return Err(RepError::Stalled {
            dim: n,
            top: pieces.len(),
            socle: pieces.len(),
        });
    }
    debug_assert!({
        let p = super::rep::direct_sum(&pieces);
        let ok = m
            .generators()
            .iter()
            .zip(p.generators())
            .all(|(x, y)| (&pi * *x) == (y * &pi));
        ok
    });
    let basis: Vec<Vec<Rat>> = idx.iter().flat_map(|cols| kernel_on(&pi, cols)).collect();
    m.restrict(&basis)
}

fn split_square_zero(
    m: &Representation,
    out: &mut Vec<ModuleLabel>,
    rng: &mut ChaCha8Rng,
) -> Result<(), RepError> {
    let n = m.dim();
    if n == 0 {
        return Ok(());
    }
    let idx = m.weight_indices();
    let (a, d) = (m.a(), m.d());
    let joint = RatMatrix::vstack(&[a, d]);
    for top in PLUS_WEIGHTS {
        let mut span = Span::new(n);
        for &j in &idx[top ^ 3] {
            span.insert(a.column(j));
            span.insert(d.column(j));
        }
        for k in kernel_on(&joint, &idx[top]) {
            if span.insert(k) {
                out.push(ModuleLabel::SimpleOne { r: simple_r(top) });
            }
        }
        let tops: Vec<Vec<Rat>> = idx[top]
            .iter()
            .map(|&i| unit(n, i))
            .filter(|u| span.insert(u.clone()))
            .collect();
        if tops.is_empty() {
            continue;
        }
        let mut part = Span::new(n);
        for t in &tops {
            part.insert(t.clone());
        }
        for t in &tops {
            part.insert(a.mul_vec(t));
            part.insert(d.mul_vec(t));
        }
        let piece = m.restrict(part.vectors())?;
        identify_or_split(&piece, top, out, rng)?;
    }
    Ok(())
}

// Label suggested by the top and socle dimensions of a part with J² = 0,
// no simple summands and top in weight `top`.
fn guess(part: &Representation, top: usize) -> Option<ModuleLabel> {
    let soc = radical(part).len();
    let head = part.dim() - soc;
    let socle_r = simple_r(top ^ 3);
    let s = soc as u32;
    if head == soc + 1 {
        Some(ModuleLabel::Syzygy {
            s,
            r: if s % 2 == 1 { socle_r } else { socle_r.flip() },
        })
    } else if soc == head + 1 {
        let s = head as u32;
        Some(ModuleLabel::Cosyzygy {
            s,
            r: if s % 2 == 1 { socle_r.flip() } else { socle_r },
        })
    } else if head == soc {
        recover_eta(part)
            .ok()
            .map(|eta| ModuleLabel::Band { s, r: socle_r, eta })
    } else {
        None
    }
}

fn identify_or_split(
    part: &Representation,
    top: usize,
    out: &mut Vec<ModuleLabel>,
    rng: &mut ChaCha8Rng,
) -> Result<(), RepError> {
    if let Some(label) = guess(part, top).filter(|l| l.is_valid()) {
        if certify(part, &label, rng.gen())? {
            out.push(label);
            return Ok(());
        }
    }
    let (x, y) = fitting_split(part, rng)?;
    identify_or_split(&x, top, out, rng)?;
    identify_or_split(&y, top, out, rng)
}

fn fitting_split(
    m: &Representation,
    rng: &mut ChaCha8Rng,
) -> Result<(Representation, Representation), RepError> {
    let n = m.dim();
    let idx = m.weight_indices();
    let end = hom_space(m, m)?;
    let k = end.dim();
    let mut candidates: Vec<RatMatrix> = end.basis.clone();
    let few = k.min(8);
    for i in 0..few {
        for j in 0..few {
            candidates.push(&end.basis[i] * &end.basis[j]);
            if i < j {
                candidates.push(&end.basis[i] + &end.basis[j]);
            }
        }
    }
    for _ in 0..24 {
        let coeffs: Vec<i64> = (0..k).map(|_| rng.gen_range(-3..=3)).collect();
        candidates.push(end.combination(&coeffs));
    }
    for e in candidates {
        let f = stable_power(&e);
        let rank = f.rank();
        if rank == 0 || rank == n {
            continue;
        }
        let ker: Vec<Vec<Rat>> = idx.iter().flat_map(|cols| kernel_on(&f, cols)).collect();
        let mut im = Span::new(n);
        for cols in &idx {
            for &c in cols {
                let v = f.column(c);
                if !is_zero_vec(&v) {
                    im.insert(v);
                }
            }
        }
        return Ok((m.restrict(&ker)?, m.restrict(&im.into_vectors())?));
    }
    let soc = radical(m).len();
    Err(RepError::Stalled {
        dim: n,
        top: n - soc,
        socle: soc,
    })
}

/// The parameter `η` of a module of `(s,s)`-type.
///
/// With `A`, `D` the `s×s` blocks of `a`, `d` from top to socle, `η = ∞`
/// when `A` is singular with a one-dimensional kernel not killed by `D`;
/// otherwise `A⁻¹D` must have a single eigenvalue `λ` with a
/// one-dimensional eigenspace, and `η = -λ`.
pub fn recover_eta(m: &Representation) -> Result<EtaParam, RepError> {
    let (m, _) = m.to_weight_basis()?;
    let idx = m.weight_indices();
    if !idx[1].is_empty() || !idx[2].is_empty() {
        return Err(RepError::NotBand("module has a bc = -1 part".into()));
    }
    if loewy_length(&m) != 2 {
        return Err(RepError::NotBand("Loewy length is not 2".into()));
    }
    let acts_on = |w: usize| {
        idx[w]
            .iter()
            .any(|&j| !is_zero_vec(&m.a().column(j)) || !is_zero_vec(&m.d().column(j)))
    };
    let top = match (acts_on(0), acts_on(3)) {
        (true, false) => 0,
        (false, true) => 3,
        _ => {
            return Err(RepError::NotBand(
                "top is not concentrated in one weight".into(),
            ))
        }
    };
    let (t, s) = (&idx[top], &idx[top ^ 3]);
    if t.len() != s.len() {
        return Err(RepError::NotBand(format!(
            "top {} and socle {} differ",
            t.len(),
            s.len()
        )));
    }
    let a = m.a().submatrix(s, t);
    let d = m.d().submatrix(s, t);
    if !a.is_invertible() {
        let ker = a.kernel_basis();
        if ker.len() == 1 && !is_zero_vec(&d.mul_vec(&ker[0])) {
            return Ok(EtaParam::Infinity);
        }
        return Err(RepError::NotBand("a has no one-dimensional kernel".into()));
    }
    let x = &a.inverse()? * &d;
    let lambda = x.trace() / rat(t.len() as i64);
    let shifted = &d - &a.scale(&lambda);
    if shifted.kernel_basis().len() == 1 {
        Ok(EtaParam::Finite(-lambda))
    } else {
        Err(RepError::NotBand("pencil has no unique eigenvector".into()))
    }
}
