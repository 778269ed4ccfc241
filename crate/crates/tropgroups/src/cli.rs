//! The `tropgroups` command line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::circle_bundles::{are_isomorphic, classify_components, CircleCocycle, CocycleJson};
use crate::error::{Error, Result};
use crate::rat::{self, Rational};
use crate::root_data::Family;
use crate::stability::stability_report;
use crate::trop_group::TropGroup;
use crate::verify::{self, CaseResult};

#[derive(Parser, Debug)]
#[command(
    name = "tropgroups",
    version,
    about = "Tropical reductive groups and bundles on metric circles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weyl group order, fundamental group and center rank.
    GroupInfo(GroupArgs),
    /// Connected components of the moduli space on a circle.
    Classify(GroupArgs),
    /// Semistability and stability of a cocycle.
    CheckStability(CocycleArgs),
    /// Whether two cocycles are isomorphic, with a witness.
    IsoTest(CocycleArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// GL, SL, PGL, Sp, SO_odd, SO_even or G2.
    pub family_pos: Option<String>,
    pub n_pos: Option<usize>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Circle length as "p/q".
    #[arg(long, default_value = "1")]
    pub j: String,
}

#[derive(Args, Debug, Clone)]
pub struct CocycleArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// JSON file with the cocycle (or a list of two for iso-test).
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// The same JSON given inline.
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    SlCount,
    PglCount,
    DetHomeo,
    RelativeWeyl,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub degree: Option<i64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Samples per case for randomized suites.
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
}

impl GroupArgs {
    fn resolve(&self) -> Result<(Family, usize)> {
        let name = self
            .family
            .as_ref()
            .or(self.family_pos.as_ref())
            .ok_or_else(|| Error::Parse("missing group family".into()))?;
        let family: Family = name.parse()?;
        let n = self.n.or(self.n_pos);
        let n = match (family, n) {
            (Family::G2, n) => n.unwrap_or(1),
            (_, Some(n)) => n,
            (_, None) => return Err(Error::Parse(format!("{family} needs n"))),
        };
        Ok((family, n))
    }

    fn group(&self) -> Result<TropGroup> {
        let (family, n) = self.resolve()?;
        TropGroup::build(family, n)
    }

    fn length(&self) -> Result<Rational> {
        let j = rat::parse(&self.j)?;
        if j <= Rational::from_integer(0) {
            return Err(Error::Parse(format!(
                "circle length {} is not positive",
                self.j
            )));
        }
        Ok(j)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CocycleInput {
    One(CocycleJson),
    Many(Vec<CocycleJson>),
}

impl CocycleArgs {
    fn read(&self) -> Result<Vec<CocycleJson>> {
        let text = match (&self.input, &self.json) {
            (Some(path), None) => fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
            (None, Some(s)) => s.clone(),
            _ => return Err(Error::Parse("give exactly one of --in and --json".into())),
        };
        let parsed: CocycleInput =
            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(match parsed {
            CocycleInput::One(c) => vec![c],
            CocycleInput::Many(v) => v,
        })
    }

    fn cocycles(&self) -> Result<Vec<CircleCocycle>> {
        let g = self.group.group()?;
        self.read()?
            .into_iter()
            .map(|c| CircleCocycle::from_json(&g, c))
            .collect()
    }
}

/// Exit code and JSON report of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn suite_outcome(suite: &str, cases: Vec<CaseResult>) -> Outcome {
    let pass = cases.iter().all(|c| c.pass);
    Outcome {
        code: if pass { 0 } else { 1 },
        report: json!({ "suite": suite, "pass": pass, "cases": cases }),
    }
}

fn run_verify(args: &VerifyArgs) -> Result<Outcome> {
    let ns = |default: &[usize]| args.n.map(|n| vec![n]).unwrap_or_else(|| default.to_vec());
    Ok(match args.suite {
        Suite::SlCount => suite_outcome(
            "sl-count",
            ns(&[2, 3, 4, 5])
                .into_iter()
                .map(verify::sl_count)
                .collect::<Result<_>>()?,
        ),
        Suite::PglCount => suite_outcome(
            "pgl-count",
            ns(&[2, 3, 4, 5])
                .into_iter()
                .map(verify::pgl_count)
                .collect::<Result<_>>()?,
        ),
        Suite::DetHomeo => {
            let cases: Vec<(usize, i64)> = match (args.n, args.degree) {
                (Some(n), Some(d)) => vec![(n, d)],
                (Some(n), None) => vec![(n, 1)],
                (None, Some(d)) => vec![(2, d), (3, d)],
                (None, None) => vec![(2, 1), (3, 1), (3, 2)],
            };
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let mut out = Vec::new();
            for (n, d) in cases {
                out.extend(verify::det_homeo(n, d, args.samples, &mut rng)?);
            }
            suite_outcome("det-homeo", out)
        }
        Suite::RelativeWeyl => {
            let groups: Vec<(Family, usize)> = match (&args.family, args.n) {
                (Some(f), n) => {
                    let f: Family = f.parse()?;
                    vec![(f, n.unwrap_or(1))]
                }
                (None, Some(n)) => vec![(Family::GL, n)],
                (None, None) => vec![
                    (Family::GL, 4),
                    (Family::Sp, 2),
                    (Family::Sp, 3),
                    (Family::G2, 1),
                ],
            };
            let mut out = Vec::new();
            for (f, n) in groups {
                out.extend(verify::relative_weyl(f, n)?);
            }
            suite_outcome("relative-weyl", out)
        }
    })
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let ok = |report| Outcome { code: 0, report };
    match &cli.command {
        Command::GroupInfo(args) => {
            let g = args.group()?;
            Ok(ok(json!({
                "weyl_order": g.weyl().len(),
                "pi1": g.fundamental_group().invariant_factors(),
                "center_rank": g.center().len(),
            })))
        }
        Command::Classify(args) => {
            let g = args.group()?;
            args.length()?;
            Ok(ok(to_value(&classify_components(&g))))
        }
        Command::CheckStability(args) => {
            let cs = args.cocycles()?;
            let [c] = cs.as_slice() else {
                return Err(Error::Parse(format!(
                    "expected one cocycle, got {}",
                    cs.len()
                )));
            };
            Ok(ok(to_value(&stability_report(c))))
        }
        Command::IsoTest(args) => {
            let cs = args.cocycles()?;
            let [a, b] = cs.as_slice() else {
                return Err(Error::Parse(format!(
                    "expected two cocycles, got {}",
                    cs.len()
                )));
            };
            let witness = are_isomorphic(a, b)?;
            Ok(ok(
                json!({ "isomorphic": witness.is_some(), "witness": witness }),
            ))
        }
        Command::Verify(args) => run_verify(args),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => 3,
        _ => 2,
    }
}

/// Parses arguments, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize") + "\n";
    let written = match &cli.out {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let cli =
            Cli::try_parse_from(std::iter::once("tropgroups").chain(args.iter().copied())).unwrap();
        run(&cli).unwrap()
    }

    #[test]
    fn g2_group_info() {
        let o = run_args(&["group-info", "G2"]);
        assert_eq!(
            serde_json::to_string(&o.report).unwrap(),
            r#"{"center_rank":0,"pi1":[],"weyl_order":12}"#
        );
    }

    #[test]
    fn flags_and_positionals_agree() {
        let a = run_args(&["group-info", "GL", "3"]);
        let b = run_args(&["group-info", "--family", "GL", "--n", "3"]);
        assert_eq!(a.report, b.report);
        assert_eq!(a.report["pi1"], json!([0]));
    }

    #[test]
    fn classify_gl1() {
        let o = run_args(&["classify", "GL", "1", "--j", "1"]);
        let comps = o.report.as_array().unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0]["torus_rank"], json!(1));
        assert_eq!(comps[0]["invariant_factors"], json!([0]));
    }

    #[test]
    fn verify_sl_count() {
        let o = run_args(&["verify", "sl-count", "--n", "3"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.report["pass"], json!(true));
    }

    #[test]
    fn stability_and_iso_inline() {
        let o = run_args(&[
            "check-stability",
            "GL",
            "2",
            "--json",
            r#"{"m":[1,0],"alpha":["0/1","0/1"],"w":1,"j":"1/1"}"#,
        ]);
        assert_eq!(o.report["semistable"], json!(false));
        let o = run_args(&[
            "iso-test",
            "GL",
            "1",
            "--json",
            r#"[{"m":[0],"alpha":["0/1"],"w":0,"j":"1/1"},{"m":[0],"alpha":["1/1"],"w":0,"j":"1/1"}]"#,
        ]);
        assert_eq!(o.report["isomorphic"], json!(true));
    }

    #[test]
    fn bad_family_is_a_parse_error() {
        let cli = Cli::try_parse_from(["tropgroups", "group-info", "E8", "1"]).unwrap();
        let e = run(&cli).unwrap_err();
        assert_eq!(exit_code(&e), 2);
    }
}
