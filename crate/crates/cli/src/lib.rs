//! Command implementations behind the `greend4` binary. Each command returns
//! its rendered output so it can be tested without spawning a process.

pub mod parse;
pub mod render;

use std::fmt::Write as _;

use greend4_core::presentation::{from_green, to_green};
use greend4_core::verify::{
    verify_braiding, verify_presentation, verify_table, CheckReport, Grid, PresentationReport,
    TableOptions, TableReport,
};
use greend4_core::{EtaParam, GreenElement, ProductCase};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

pub use parse::{parse_element, parse_label, parse_presentation, ParseError};
pub use render::{green_json, pres_json, render_green, render_pres, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source}\n  {input}\n  {caret}^", caret = " ".repeat(source.pos.saturating_sub(1)))]
    Parse { input: String, source: ParseError },
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn parse_green(input: &str) -> Result<GreenElement, CliError> {
    parse_element(input).map_err(|source| CliError::Parse {
        input: input.to_string(),
        source,
    })
}

pub fn cmd_multiply(e1: &str, e2: &str, format: Format) -> Result<String, CliError> {
    let (a, b) = (parse_green(e1)?, parse_green(e2)?);
    Ok(render_green(&(&a * &b), format))
}

pub fn cmd_dual(e: &str, format: Format) -> Result<String, CliError> {
    Ok(render_green(&parse_green(e)?.dual(), format))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PresentationCommand {
    /// Reduce a polynomial in g, x, y, z, X_{n,eta} to normal form.
    NormalForm,
    /// Map a polynomial to the Green ring.
    ToModules,
    /// Map a Green ring element to normal form.
    FromModules,
}

pub fn cmd_presentation(
    sub: PresentationCommand,
    arg: &str,
    format: Format,
) -> Result<String, CliError> {
    let pres = |s: &str| {
        parse_presentation(s).map_err(|source| CliError::Parse {
            input: s.to_string(),
            source,
        })
    };
    Ok(match sub {
        PresentationCommand::NormalForm => render_pres(&pres(arg)?, format),
        PresentationCommand::ToModules => render_green(&to_green(&pres(arg)?), format),
        PresentationCommand::FromModules => render_pres(&from_green(&parse_green(arg)?), format),
    })
}

/// Parses a comma-separated list such as `0,1,-2,5/7,oo`; the empty string
/// gives the empty list.
pub fn parse_etas(src: &str) -> Result<Vec<EtaParam>, String> {
    src.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<EtaParam>()
                .map_err(|e| format!("invalid parameter '{s}': {e}"))
        })
        .collect()
}

/// A parsed `--etas` list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaList(pub Vec<EtaParam>);

impl std::str::FromStr for EtaList {
    type Err = String;
    fn from_str(s: &str) -> Result<EtaList, String> {
        parse_etas(s).map(EtaList)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyScope {
    Table,
    Presentation,
    Braiding,
    All,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub scope: VerifyScope,
    pub max_s: u32,
    pub etas: Vec<EtaParam>,
    pub seed: u64,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    pub inject_fault: Option<ProductCase>,
    pub format: Format,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_s: u32,
    pub etas: Vec<EtaParam>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<TableReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braiding: Option<CheckReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.table.as_ref().is_none_or(TableReport::passed)
            && self
                .presentation
                .as_ref()
                .is_none_or(PresentationReport::passed)
            && self.braiding.as_ref().is_none_or(CheckReport::passed)
    }
}

/// Rendered report and whether every check passed.
pub struct VerifyOutcome {
    pub output: String,
    pub passed: bool,
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport, CliError> {
    if cfg.max_s == 0 {
        return Err(CliError::Invalid("--max-s must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Invalid(format!("cannot start worker pool: {e}")))?;
    let grid = Grid::new(cfg.max_s, cfg.etas.clone());
    let wants = |s: VerifyScope| cfg.scope == s || cfg.scope == VerifyScope::All;
    Ok(pool.install(|| VerifyReport {
        seed: cfg.seed,
        max_s: cfg.max_s,
        etas: cfg.etas.clone(),
        table: wants(VerifyScope::Table).then(|| {
            verify_table(
                &grid,
                &TableOptions {
                    seed: cfg.seed,
                    inject_fault: cfg.inject_fault,
                },
            )
        }),
        presentation: wants(VerifyScope::Presentation)
            .then(|| verify_presentation(cfg.max_s, &cfg.etas)),
        braiding: wants(VerifyScope::Braiding).then(|| verify_braiding(&grid)),
    }))
}

pub fn cmd_verify(cfg: &VerifyConfig) -> Result<VerifyOutcome, CliError> {
    let report = run_verify(cfg)?;
    let passed = report.passed();
    let output = match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("reports serialize");
            v["passed"] = json!(passed);
            v.to_string()
        }
        Format::Text => render_verify_text(&report),
    };
    Ok(VerifyOutcome { output, passed })
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn check_line(out: &mut String, name: &str, r: &CheckReport) {
    let failed = r.failures.len();
    writeln!(
        out,
        "  {} {}/{}  {}",
        status(r.passed()),
        r.checked - failed,
        r.checked,
        name
    )
    .unwrap();
    for f in &r.failures {
        writeln!(out, "    {f}").unwrap();
    }
}

pub fn render_verify_text(r: &VerifyReport) -> String {
    let mut out = String::new();
    let etas: Vec<String> = r.etas.iter().map(ToString::to_string).collect();
    writeln!(
        out,
        "seed {} max-s {} etas [{}]",
        r.seed,
        r.max_s,
        etas.join(", ")
    )
    .unwrap();
    if let Some(t) = &r.table {
        writeln!(out, "table: {} pairs", t.pairs).unwrap();
        for (case, tally) in &t.cases {
            let case = case.to_string();
            if tally.checked == 0 {
                writeln!(out, "  {case:<4} skip (no pairs in grid)").unwrap();
            } else {
                let ok = tally.checked - tally.failed;
                writeln!(
                    out,
                    "  {case:<4} {} {ok}/{}",
                    status(tally.failed == 0),
                    tally.checked
                )
                .unwrap();
            }
        }
        for m in &t.mismatches {
            writeln!(
                out,
                "  mismatch in {}: [{}] x [{}]",
                m.case, m.left, m.right
            )
            .unwrap();
            writeln!(out, "    table:     {}", m.expected).unwrap();
            writeln!(out, "    decompose: {}", m.found).unwrap();
        }
    }
    if let Some(p) = &r.presentation {
        writeln!(out, "presentation:").unwrap();
        check_line(&mut out, "round trips", &p.round_trips);
        check_line(&mut out, "ring homomorphism", &p.homomorphism);
        for (family, rep) in &p.relations {
            check_line(&mut out, &format!("relation {family}"), rep);
        }
    }
    if let Some(b) = &r.braiding {
        writeln!(out, "braiding:").unwrap();
        check_line(&mut out, "flip o R is a module isomorphism", b);
    }
    write!(out, "result: {}", if r.passed() { "pass" } else { "FAIL" }).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_examples() {
        assert_eq!(
            cmd_multiply("[V(2,0)]", "[V(2,0)]", Format::Text).unwrap(),
            "[P(1)]"
        );
        assert_eq!(
            cmd_multiply("[V(0)]", "[V(0)]", Format::Text).unwrap(),
            "[V(0)]"
        );
        assert_eq!(
            cmd_multiply("[O^2V(1)]", "[O^-1V(0)]", Format::Text).unwrap(),
            "[O^1V(1)] + 3*[P(1)]"
        );
    }

    #[test]
    fn dual_examples() {
        assert_eq!(cmd_dual("[O^2V(0)]", Format::Text).unwrap(), "[O^-2V(0)]");
        assert_eq!(cmd_dual("[P(0)]", Format::Text).unwrap(), "[P(0)]");
        assert_eq!(
            cmd_dual("[M_1(0,oo)]", Format::Text).unwrap(),
            "[M_1(1,oo)]"
        );
    }

    #[test]
    fn presentation_examples() {
        use PresentationCommand::*;
        assert_eq!(
            cmd_presentation(NormalForm, "y*z", Format::Text).unwrap(),
            "1 + 2*x^2"
        );
        assert_eq!(
            cmd_presentation(FromModules, "[O^2V(0)]", Format::Text).unwrap(),
            "y^2 - g*x^2"
        );
        assert_eq!(
            cmd_presentation(ToModules, "X_{2,1/3}", Format::Text).unwrap(),
            "[M_2(0,1/3)]"
        );
    }

    #[test]
    fn etas_list() {
        assert_eq!(parse_etas("").unwrap(), vec![]);
        assert_eq!(
            parse_etas("0, oo").unwrap(),
            vec![EtaParam::integer(0), EtaParam::Infinity]
        );
        assert!(parse_etas("1/0").is_err());
    }

    #[test]
    fn parse_errors_point_at_the_column() {
        let e = cmd_dual("[V(3)]", Format::Text).unwrap_err();
        assert_eq!(
            e.to_string(),
            "parse error at column 4: r must be 0 or 1, found 3\n  [V(3)]\n     ^"
        );
        assert_eq!(e.exit_code(), 2);
    }
}
