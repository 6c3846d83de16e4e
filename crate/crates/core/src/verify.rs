//! Grid checks tying the table, the presentation and the matrix oracle
//! together. Each check returns a report instead of panicking, so callers
//! can print per-case results.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::green::{dual_label, grothendieck_mul, label_dimension, GreenElement};
use crate::label::{EtaParam, ModuleLabel, Z2};
use crate::presentation::{
    basis_monomials, from_green, relation_set, to_green, PresElement, RelationFamily,
};
use crate::rep_lab::{
    braiding_check, build, check_relations, decompose_seeded, dual, tensor, Representation,
};
use crate::table::{product_with_case, ProductCase};

/// Labels with `r ∈ {0,1}`, `1 ≤ s ≤ max_s` and band parameters from `etas`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub max_s: u32,
    pub etas: Vec<EtaParam>,
}

impl Grid {
    pub fn new(max_s: u32, etas: Vec<EtaParam>) -> Grid {
        Grid { max_s, etas }
    }

    /// `s ≤ 4` with `η ∈ {0, 1, -2, 5/7, ∞}`.
    pub fn standard() -> Grid {
        Grid::new(4, standard_etas())
    }

    pub fn labels(&self) -> Vec<ModuleLabel> {
        let mut out = Vec::new();
        for r in [Z2::ZERO, Z2::ONE] {
            out.push(ModuleLabel::SimpleOne { r });
            out.push(ModuleLabel::SimpleTwo { r });
            out.push(ModuleLabel::Projective { r });
            for s in 1..=self.max_s {
                out.push(ModuleLabel::Syzygy { s, r });
                out.push(ModuleLabel::Cosyzygy { s, r });
                for eta in &self.etas {
                    out.push(ModuleLabel::Band {
                        s,
                        r,
                        eta: eta.clone(),
                    });
                }
            }
        }
        out.sort();
        out
    }

    /// Unordered pairs, diagonal included.
    pub fn pairs(&self) -> Vec<(ModuleLabel, ModuleLabel)> {
        let labels = self.labels();
        let mut out = Vec::new();
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i..] {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }
}

pub fn standard_etas() -> Vec<EtaParam> {
    vec![
        EtaParam::integer(0),
        EtaParam::integer(1),
        EtaParam::integer(-2),
        EtaParam::finite(5, 7),
        EtaParam::Infinity,
    ]
}

/// Independent per-item seed.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, Default)]
pub struct TableOptions {
    pub seed: u64,
    /// Corrupts the expected value of every pair in this case.
    pub inject_fault: Option<ProductCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub left: ModuleLabel,
    pub right: ModuleLabel,
    pub case: ProductCase,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub seed: u64,
    pub pairs: usize,
    pub cases: BTreeMap<ProductCase, Tally>,
    pub mismatches: Vec<Mismatch>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn expected_product(
    a: &ModuleLabel,
    b: &ModuleLabel,
    fault: Option<ProductCase>,
) -> (ProductCase, GreenElement) {
    let (case, mut e) = product_with_case(a, b);
    if fault == Some(case) {
        e.add_term(1, ModuleLabel::v(0));
    }
    (case, e)
}

/// Decomposes `build(L1) ⊗ build(L2)` for every grid pair and compares with
/// the table.
pub fn verify_table(grid: &Grid, opts: &TableOptions) -> TableReport {
    let labels = grid.labels();
    let built: BTreeMap<ModuleLabel, Representation> =
        labels.par_iter().map(|l| (l.clone(), build(l))).collect();
    let pairs = grid.pairs();
    let results: Vec<(ProductCase, Option<Mismatch>)> = pairs
        .par_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let (case, expected) = expected_product(a, b, opts.inject_fault);
            let m = tensor(&built[a], &built[b]);
            let found = decompose_seeded(&m, derive_seed(opts.seed, i as u64))
                .map(|ls| GreenElement::from_multiset(&ls));
            let mismatch = match found {
                Ok(ref f) if *f == expected => None,
                Ok(f) => Some(f.to_string()),
                Err(e) => Some(format!("error: {e}")),
            }
            .map(|found| Mismatch {
                left: a.clone(),
                right: b.clone(),
                case,
                expected: expected.to_string(),
                found,
            });
            (case, mismatch)
        })
        .collect();
    let mut cases: BTreeMap<ProductCase, Tally> = ProductCase::ALL
        .iter()
        .map(|c| (*c, Tally::default()))
        .collect();
    let mut mismatches = Vec::new();
    for (case, mismatch) in results {
        let t = cases.get_mut(&case).expect("all cases present");
        t.checked += 1;
        if let Some(m) = mismatch {
            t.failed += 1;
            mismatches.push(m);
        }
    }
    TableReport {
        seed: opts.seed,
        pairs: pairs.len(),
        cases,
        mismatches,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// `from_green ∘ to_green = id` on basis monomials and
/// `to_green ∘ from_green = id` on labels, indices up to `max_n`.
pub fn check_round_trips(max_n: u32, etas: &[EtaParam]) -> CheckReport {
    let mut rep = CheckReport::default();
    for m in basis_monomials(max_n, etas) {
        let p = PresElement::monomial(m);
        let back = from_green(&to_green(&p));
        rep.record(back == p, || format!("{p} -> {back}"));
    }
    for l in Grid::new(max_n, etas.to_vec()).labels() {
        let e = GreenElement::from_label(l);
        let back = to_green(&from_green(&e));
        rep.record(back == e, || format!("{e} -> {back}"));
    }
    rep
}

/// `to_green(p·q) = to_green(p)·to_green(q)` on basis monomial pairs.
pub fn check_ring_homomorphism(max_n: u32, etas: &[EtaParam]) -> CheckReport {
    let monos = basis_monomials(max_n, etas);
    let images: Vec<(PresElement, GreenElement)> = monos
        .iter()
        .map(|m| {
            let p = PresElement::monomial(m.clone());
            let g = to_green(&p);
            (p, g)
        })
        .collect();
    let failures: Vec<Option<String>> = (0..images.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let images = &images;
            (i..images.len()).map(move |j| {
                let (p, gp) = &images[i];
                let (q, gq) = &images[j];
                let lhs = to_green(&p.mul(q));
                let rhs = gp.mul(gq);
                (lhs != rhs).then(|| format!("({p})*({q}): {lhs} vs {rhs}"))
            })
        })
        .collect();
    CheckReport {
        checked: failures.len(),
        failures: failures.into_iter().flatten().collect(),
    }
}

/// Every generator of the ideal vanishes in the Green ring and in normal form.
pub fn check_relations_vanish(
    max_n: u32,
    etas: &[EtaParam],
) -> BTreeMap<RelationFamily, CheckReport> {
    let mut out: BTreeMap<RelationFamily, CheckReport> = RelationFamily::ALL
        .iter()
        .map(|f| (*f, CheckReport::default()))
        .collect();
    for rel in relation_set(max_n, etas) {
        let g = rel.poly.eval_green();
        let p = rel.poly.eval_pres();
        out.get_mut(&rel.family)
            .expect("all families present")
            .record(g.is_zero() && p.is_zero(), || {
                format!("{}: green {g}, normal form {p}", rel.poly)
            });
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub round_trips: CheckReport,
    pub homomorphism: CheckReport,
    pub relations: BTreeMap<RelationFamily, CheckReport>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.round_trips.passed()
            && self.homomorphism.passed()
            && self.relations.values().all(CheckReport::passed)
    }
}

pub fn verify_presentation(max_n: u32, etas: &[EtaParam]) -> PresentationReport {
    PresentationReport {
        round_trips: check_round_trips(max_n, etas),
        homomorphism: check_ring_homomorphism(max_n, etas),
        relations: check_relations_vanish(max_n, etas),
    }
}

/// `flip ∘ ℛ` is an invertible module map for every grid pair.
pub fn verify_braiding(grid: &Grid) -> CheckReport {
    let labels = grid.labels();
    let built: Vec<Representation> = labels.par_iter().map(build).collect();
    let mut idx = Vec::new();
    for i in 0..labels.len() {
        for j in i..labels.len() {
            idx.push((i, j));
        }
    }
    let failures: Vec<Option<String>> = idx
        .par_iter()
        .map(|&(i, j)| {
            let ok = braiding_check(&built[i], &built[j]) && braiding_check(&built[j], &built[i]);
            (!ok).then(|| format!("{} x {}", labels[i], labels[j]))
        })
        .collect();
    CheckReport {
        checked: failures.len(),
        failures: failures.into_iter().flatten().collect(),
    }
}

/// Label-level duality is an involution compatible with products, and agrees
/// with the matrix dual through decomposition.
pub fn verify_duality(grid: &Grid, seed: u64) -> CheckReport {
    let labels = grid.labels();
    let mut rep = CheckReport::default();
    for (i, l) in labels.iter().enumerate() {
        let e = GreenElement::from_label(l.clone());
        rep.record(e.dual().dual() == e, || format!("dual(dual({l}))"));
        let m = build(l);
        let found = decompose_seeded(&dual(&m), derive_seed(seed, i as u64));
        let want = vec![dual_label(l)];
        rep.record(found.as_ref() == Ok(&want), || {
            format!("dual of {l}: {found:?}, want {}", want[0])
        });
        let dd = decompose_seeded(&dual(&dual(&m)), derive_seed(seed, i as u64));
        rep.record(dd.as_ref() == Ok(&vec![l.clone()]), || {
            format!("double dual of {l}: {dd:?}")
        });
    }
    for a in &labels {
        for b in &labels {
            let (x, y) = (
                GreenElement::from_label(a.clone()),
                GreenElement::from_label(b.clone()),
            );
            rep.record(x.mul(&y).dual() == x.dual().mul(&y.dual()), || {
                format!("dual of {a} * {b}")
            });
        }
    }
    rep
}

/// Dimension and Grothendieck images are multiplicative, every product of
/// a projective is projective, and every built module satisfies the
/// relations.
pub fn verify_structure(grid: &Grid) -> CheckReport {
    let labels = grid.labels();
    let mut rep = CheckReport::default();
    for l in &labels {
        let m = build(l);
        rep.record(
            check_relations(&m) && m.dim() as u64 == label_dimension(l),
            || format!("build({l}) fails the relations or has the wrong dimension"),
        );
    }
    let projective = |l: &ModuleLabel| {
        matches!(
            l,
            ModuleLabel::Projective { .. } | ModuleLabel::SimpleTwo { .. }
        )
    };
    for a in &labels {
        for b in &labels {
            let (x, y) = (
                GreenElement::from_label(a.clone()),
                GreenElement::from_label(b.clone()),
            );
            let p = x.mul(&y);
            rep.record(p.dimension() == x.dimension() * y.dimension(), || {
                format!("dim of {a} * {b}")
            });
            rep.record(
                p.grothendieck_image()
                    == grothendieck_mul(&x.grothendieck_image(), &y.grothendieck_image()),
                || format!("G0 image of {a} * {b}"),
            );
            rep.record(p == y.mul(&x), || format!("{a} * {b} not commutative"));
            if projective(a) {
                rep.record(p.iter().all(|(l, _)| projective(l)), || {
                    format!("{a} * {b} not projective")
                });
            }
        }
    }
    rep
}

/// `(xy)z = x(yz)` on all triples from `labels`.
pub fn verify_associativity(labels: &[ModuleLabel]) -> CheckReport {
    let els: Vec<GreenElement> = labels
        .iter()
        .map(|l| GreenElement::from_label(l.clone()))
        .collect();
    let failures: Vec<Option<String>> = (0..els.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let els = &els;
            (0..els.len()).flat_map(move |j| {
                (0..els.len()).map(move |k| {
                    let lhs = els[i].mul(&els[j]).mul(&els[k]);
                    let rhs = els[i].mul(&els[j].mul(&els[k]));
                    (lhs != rhs).then(|| format!("({} * {}) * {}", labels[i], labels[j], labels[k]))
                })
            })
        })
        .collect();
    CheckReport {
        checked: failures.len(),
        failures: failures.into_iter().flatten().collect(),
    }
}
