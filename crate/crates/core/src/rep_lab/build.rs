use num_traits::Zero;

use super::cover::syzygy;
use super::rep::{dual, Representation};
use crate::label::{EtaParam, ModuleLabel, Z2};
use crate::linalg::{rat, Rat, RatMatrix};

fn sign(r: Z2) -> Rat {
    rat(r.sign())
}

fn assemble(a: RatMatrix, bc: Vec<Rat>, d: RatMatrix) -> Representation {
    let b = RatMatrix::diagonal(&bc);
    Representation::new(a, b.clone(), b, d).expect("square by construction")
}

/// Standard representative of an indecomposable, in a weight basis.
///
/// Syzygy modules are obtained by applying [`syzygy`] to `V(r)` repeatedly,
/// and cosyzygy modules as duals of syzygy modules.
pub fn build(label: &ModuleLabel) -> Representation {
    match label {
        ModuleLabel::SimpleOne { r } => {
            let z = RatMatrix::zeros(1, 1);
            assemble(z.clone(), vec![sign(*r)], z)
        }
        ModuleLabel::SimpleTwo { r } => {
            let a = RatMatrix::from_i64(&[&[0, 0], &[1, 0]]);
            let d = RatMatrix::from_i64(&[&[0, 2], &[0, 0]]);
            let b = RatMatrix::diagonal(&[sign(*r), -sign(*r)]);
            let c = RatMatrix::diagonal(&[-sign(*r), sign(*r)]);
            Representation::new(a, b, c, d).expect("square by construction")
        }
        ModuleLabel::Projective { r } => {
            // v1 top; a: v1→v2, v3→v4; d: v1→v3, v2→-v4
            let mut a = RatMatrix::zeros(4, 4);
            a[(1, 0)] = rat(1);
            a[(3, 2)] = rat(1);
            let mut d = RatMatrix::zeros(4, 4);
            d[(2, 0)] = rat(1);
            d[(3, 1)] = rat(-1);
            let s = sign(*r);
            assemble(a, vec![s.clone(), -s.clone(), -s.clone(), s], d)
        }
        ModuleLabel::Syzygy { s, r } => {
            (0..*s).fold(build(&ModuleLabel::SimpleOne { r: *r }), |m, _| syzygy(&m))
        }
        ModuleLabel::Cosyzygy { s, r } => dual(&build(&ModuleLabel::Syzygy { s: *s, r: *r })),
        ModuleLabel::Band { s, r, eta } => band(*s as usize, *r, eta),
    }
}

// Basis v_{1,1..s} (top) then v_{2,1..s} (socle).
fn band(s: usize, r: Z2, eta: &EtaParam) -> Representation {
    let n = 2 * s;
    let mut a = RatMatrix::zeros(n, n);
    let mut d = RatMatrix::zeros(n, n);
    match eta {
        EtaParam::Finite(e) => {
            for i in 0..s {
                a[(s + i, i)] = rat(1);
                if !e.is_zero() {
                    d[(s + i, i)] = -e.clone();
                }
                if i > 0 {
                    d[(s + i - 1, i)] = rat(-1);
                }
            }
        }
        EtaParam::Infinity => {
            for i in 0..s {
                if i > 0 {
                    a[(s + i - 1, i)] = rat(1);
                }
                d[(s + i, i)] = rat(1);
            }
        }
    }
    let top = -sign(r);
    let mut bc = vec![top.clone(); s];
    bc.extend(std::iter::repeat_n(-top, s));
    assemble(a, bc, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_lab::check_relations;

    #[test]
    fn simple_two_matrices() {
        let t = build(&ModuleLabel::t(0));
        assert_eq!(*t.a(), RatMatrix::from_i64(&[&[0, 0], &[1, 0]]));
        assert_eq!(*t.d(), RatMatrix::from_i64(&[&[0, 2], &[0, 0]]));
        assert_eq!(*t.b(), RatMatrix::from_i64(&[&[1, 0], &[0, -1]]));
        assert_eq!(*t.c(), RatMatrix::from_i64(&[&[-1, 0], &[0, 1]]));
    }

    #[test]
    fn simple_one_matrices() {
        let v = build(&ModuleLabel::v(0));
        assert_eq!(v.dim(), 1);
        assert!(v.a().is_zero() && v.d().is_zero());
        assert_eq!(*v.b(), RatMatrix::identity(1));
        assert_eq!(*v.c(), RatMatrix::identity(1));
    }

    #[test]
    fn band_matrices() {
        let m = build(&ModuleLabel::band(2, 0, EtaParam::integer(3)));
        assert_eq!(
            *m.a(),
            RatMatrix::from_i64(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0]])
        );
        assert_eq!(
            *m.d(),
            RatMatrix::from_i64(&[
                &[0, 0, 0, 0],
                &[0, 0, 0, 0],
                &[-3, -1, 0, 0],
                &[0, -3, 0, 0]
            ])
        );
        assert_eq!(
            *m.b(),
            RatMatrix::diagonal(&[rat(-1), rat(-1), rat(1), rat(1)])
        );
        assert!(check_relations(&m));
    }

    #[test]
    fn dimensions_and_relations() {
        for s in 1..=4u32 {
            for r in 0..2u8 {
                let r2 = Z2::new(r as i64);
                for l in [
                    ModuleLabel::Syzygy { s, r: r2 },
                    ModuleLabel::Cosyzygy { s, r: r2 },
                    ModuleLabel::band(s, r, EtaParam::finite(5, 7)),
                    ModuleLabel::band(s, r, EtaParam::Infinity),
                ] {
                    let m = build(&l);
                    assert_eq!(m.dim() as u64, crate::green::label_dimension(&l), "{l}");
                    assert!(check_relations(&m), "{l}");
                    assert!(m.is_weight_basis(), "{l}");
                }
            }
        }
    }
}
