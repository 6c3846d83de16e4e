//! Fixtures shared by the benchmarks.

use greend4_core::{EtaParam, ModuleLabel, Z2};

/// A spread of labels covering every kind, `s ≤ 4`.
pub fn sample_labels() -> Vec<ModuleLabel> {
    let mut out = vec![ModuleLabel::v(0), ModuleLabel::t(1), ModuleLabel::p(0)];
    for s in 1..=4i64 {
        out.push(ModuleLabel::omega(s, Z2::ZERO));
        out.push(ModuleLabel::omega(-s, Z2::ONE));
        out.push(ModuleLabel::band(s as u32, 0, EtaParam::finite(5, 7)));
        out.push(ModuleLabel::band(s as u32, 1, EtaParam::Infinity));
    }
    out
}
