//! Text and JSON renderings. JSON field order and term order are fixed, so
//! output is byte-stable across runs.

use std::str::FromStr;

use greend4_core::presentation::PresElement;
use greend4_core::GreenElement;
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn bigint_json(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

/// `{"terms":[{"label":{...},"coeff":int}]}` in canonical label order.
pub fn green_json(e: &GreenElement) -> Value {
    let terms: Vec<Value> = e
        .iter()
        .map(|(l, c)| json!({ "label": serde_json::to_value(l).expect("labels serialize"), "coeff": bigint_json(c) }))
        .collect();
    json!({ "terms": terms })
}

/// `{"terms":[{"monomial":{...},"text":"g*x^2","coeff":int}]}` in normal-form
/// order.
pub fn pres_json(p: &PresElement) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .map(|(m, c)| {
            json!({
                "monomial": serde_json::to_value(m).expect("monomials serialize"),
                "text": m.to_string(),
                "coeff": bigint_json(c),
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn render_green(e: &GreenElement, format: Format) -> String {
    match format {
        Format::Text => e.to_string(),
        Format::Json => green_json(e).to_string(),
    }
}

pub fn render_pres(p: &PresElement, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => pres_json(p).to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use greend4_core::{EtaParam, ModuleLabel};

    #[test]
    fn json_shape() {
        let mut e = GreenElement::from_label(ModuleLabel::band(2, 0, EtaParam::finite(5, 7)));
        e.add_term(-3, ModuleLabel::p(1));
        assert_eq!(
            render_green(&e, Format::Json),
            r#"{"terms":[{"coeff":1,"label":{"eta":"5/7","kind":"Band","r":0,"s":2}},{"coeff":-3,"label":{"kind":"Projective","r":1}}]}"#
        );
        assert_eq!(
            render_green(&GreenElement::zero(), Format::Json),
            r#"{"terms":[]}"#
        );
    }
}
