//! The `supercup` command line tool.

pub mod parse;
pub mod render;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};
use supercup_core as core;
use supercup_core::{
    DsSummand, FusionResult, PrincipalDet, PrincipalFactor, PrincipalFusionSpec,
    SuperWeight,
};

pub use parse::{parse_weight, ParseError};
pub use render::{render_diagram, Style};

#[derive(Debug, Parser)]
#[command(name = "supercup", version, about = "Weight diagrams and tensor products for GL(m|n)")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, value_enum, default_value_t = Style::Unicode)]
    pub style: Style,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight diagram with cups.
    Diagram { weight: String },
    /// Duflo-Serganova reduction.
    Ds {
        weight: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Count the DS^n paths instead.
        #[arg(long)]
        paths: bool,
    },
    /// Dual module.
    Dual { weight: String },
    /// Negatively stable representative under the Π-shift.
    Stabilize { weight: String },
    /// Classical and principal parts.
    Splice { weight: String },
    /// Image under the splitting functor.
    Image { weight: String },
    /// Superdimension.
    Sdim { weight: String },
    /// Blocks of a tensor product modulo negligible morphisms.
    Blocks { w1: String, w2: String },
    /// Tensor product modulo negligible morphisms.
    Tensor {
        w1: String,
        w2: String,
        /// JSON fusion spec: one object for both factors or an array of two.
        #[arg(long)]
        fusion: Option<PathBuf>,
        /// Use the ground-state formula.
        #[arg(long)]
        ground_state: bool,
    },
    /// Composition factors of the Kac module.
    Kac { weight: String },
    /// Determinant in image coordinates.
    Det {
        weight: String,
        /// Value of ℓ for the principal part, if known.
        #[arg(long, allow_hyphen_values = true)]
        ell: Option<i64>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Engine(core::Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(core::Error::RequiresExternalFusion(_)) => 3,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "cannot parse weight {e}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<core::Error> for CliError {
    fn from(e: core::Error) -> Self {
        CliError::Engine(e)
    }
}

type Out = Result<String, CliError>;

fn big(x: &BigInt) -> Value {
    i64::try_from(x).map(Value::from).unwrap_or_else(|_| Value::String(x.to_string()))
}

fn bigu(x: &BigUint) -> Value {
    big(&BigInt::from(x.clone()))
}

pub fn weight_json(w: &SuperWeight) -> Value {
    json!({"m": w.m, "n": w.n, "top": w.top, "bottom": w.bottom})
}

fn image_parts(w: &SuperWeight) -> (Value, Value) {
    match core::image(w) {
        Ok(im) => (json!(im.classical.0), weight_json(&im.principal)),
        Err(_) => (Value::Null, Value::Null),
    }
}

fn ds_json(out: &[DsSummand]) -> Value {
    let summands: Vec<Value> = out
        .iter()
        .map(|s| {
            let (classical, principal) = image_parts(&s.weight);
            json!({
                "weight": weight_json(&s.weight),
                "parity": s.parity_shift,
                "multiplicity": s.multiplicity,
                "classical": classical,
                "principal": principal,
            })
        })
        .collect();
    json!({"summands": summands, "negligible_dropped": false})
}

fn factor_json(p: &PrincipalFactor) -> Value {
    match p {
        PrincipalFactor::Unresolved => Value::Null,
        PrincipalFactor::Weight { weight } => weight_json(weight),
        PrincipalFactor::Label { label } => {
            json!({"label": label.kind.symbol(), "twist": label.twist, "dim": label.dim})
        }
        PrincipalFactor::External { left, right } => {
            json!({"external": [weight_json(left), weight_json(right)]})
        }
    }
}

fn fusion_json(r: &FusionResult) -> Value {
    let summands: Vec<Value> = r
        .summands
        .iter()
        .map(|s| {
            json!({
                "weight": s.weight.as_ref().map(weight_json),
                "parity": s.parity,
                "multiplicity": s.multiplicity,
                "classical": s.classical.0,
                "principal": factor_json(&s.principal),
            })
        })
        .collect();
    let mut v = json!({"summands": summands, "negligible_dropped": r.negligible_dropped});
    if !r.warnings.is_empty() {
        v["warnings"] = json!(r.warnings);
    }
    v
}

fn factor_text(p: &PrincipalFactor) -> String {
    match p {
        PrincipalFactor::Unresolved => "?".into(),
        PrincipalFactor::Weight { weight } => format!("[{weight}]"),
        PrincipalFactor::Label { label } => {
            format!("{}·χ^{} (dim {})", label.kind.symbol(), label.twist, label.dim)
        }
        PrincipalFactor::External { left, right } => format!("[{left}] ⊠ [{right}]"),
    }
}

fn fusion_text(r: &FusionResult, blockwise: bool) -> String {
    let mut s = String::new();
    for x in &r.summands {
        let mult = if x.multiplicity > 1 { format!("{} x ", x.multiplicity) } else { String::new() };
        if blockwise {
            let _ = writeln!(s, "{mult}L{}", x.classical);
        } else {
            let _ = write!(s, "{mult}L{} ⊠ {}", x.classical, factor_text(&x.principal));
            if let Some(w) = &x.weight {
                let _ = write!(s, "  = X({w})");
            }
            s.push('\n');
        }
    }
    if r.summands.is_empty() {
        s.push_str("0\n");
    }
    if r.negligible_dropped {
        s.push_str("(negligible summands dropped)\n");
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn read_specs(path: &PathBuf) -> Result<(PrincipalFusionSpec, PrincipalFusionSpec), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let bad = |e: serde_json::Error| {
        CliError::Engine(core::Error::Validation(format!("bad fusion spec {}: {e}", path.display())))
    };
    let v: Value = serde_json::from_str(&text).map_err(bad)?;
    if v.is_array() {
        let [a, b]: [PrincipalFusionSpec; 2] = serde_json::from_value(v).map_err(bad)?;
        Ok((a, b))
    } else {
        let a: PrincipalFusionSpec = serde_json::from_value(v).map_err(bad)?;
        Ok((a.clone(), a))
    }
}

pub fn run(cli: &Cli) -> Out {
    let json = cli.json;
    let style = cli.style;
    let pi = render::pi_symbol(style);
    match &cli.command {
        Command::Diagram { weight } => {
            let w = parse_weight(weight)?;
            let cd = core::cup_diagram(&w);
            let d = &cd.base;
            if json {
                let arcs: Vec<[i64; 2]> = cd.arcs.iter().map(|a| [a.left, a.right]).collect();
                return Ok(pretty(json!({
                    "weight": weight_json(&w),
                    "vees": d.vees, "crosses": d.crosses, "circles": d.circles,
                    "arcs": arcs,
                    "atypicality": d.vees.len(),
                    "parity": core::parity(&w),
                })));
            }
            Ok(format!(
                "{w}\n{}atypicality {}, parity {}, sectors {}\n",
                render_diagram(&cd, style),
                d.vees.len(),
                core::parity(&w),
                core::sectors(&cd).len()
            ))
        }
        Command::Ds { weight, power, paths } => {
            let w = parse_weight(weight)?;
            if *paths {
                let p = core::ds_paths(&w)?;
                if json {
                    return Ok(pretty(json!({
                        "paths": bigu(&p.count),
                        "endpoint": weight_json(&p.endpoint),
                        "sign": p.sign,
                    })));
                }
                return Ok(format!("paths {}\nendpoint {}\nsign {}\n", p.count, p.endpoint, p.sign));
            }
            let out = core::ds_power(&w, *power)?;
            if json {
                return Ok(pretty(ds_json(&out)));
            }
            let mut s = if *power == 1 { format!("DS {w} =\n") } else { format!("DS^{power} {w} =\n") };
            for x in &out {
                let mult = if x.multiplicity > 1 { format!("{} x ", x.multiplicity) } else { String::new() };
                let par = if x.parity_shift == 1 { format!("{pi} ") } else { String::new() };
                let _ = writeln!(s, "  {mult}{par}L({})", x.weight);
            }
            if out.is_empty() {
                s.push_str("  0\n");
            }
            Ok(s)
        }
        Command::Dual { weight } => {
            let d = core::dual(&parse_weight(weight)?);
            Ok(if json { pretty(weight_json(&d)) } else { format!("{d}\n") })
        }
        Command::Stabilize { weight } => {
            let (x, n) = core::stabilize(&parse_weight(weight)?)?;
            if json {
                return Ok(pretty(json!({"weight": weight_json(&x), "pi_power": n})));
            }
            Ok(format!("{x}\n{pi}-power {n}\n"))
        }
        Command::Splice { weight } => {
            let s = core::splice(&parse_weight(weight)?)?;
            if json {
                return Ok(pretty(json!({
                    "classical": s.classical.0,
                    "principal": weight_json(&s.principal),
                    "pi_power": s.pi_power,
                })));
            }
            Ok(format!("classical {}\nprincipal {}\n{pi}-power {}\n", s.classical, s.principal, s.pi_power))
        }
        Command::Image { weight } => {
            let im = core::image(&parse_weight(weight)?)?;
            if json {
                return Ok(pretty(json!({
                    "classical": im.classical.0,
                    "principal": weight_json(&im.principal),
                    "parity": im.parity,
                    "ber_core_power": im.ber_core_power,
                })));
            }
            Ok(format!(
                "L{} ⊠ [{}]\nparity {}\nBer-power {}\n",
                im.classical, im.principal, im.parity, im.ber_core_power
            ))
        }
        Command::Sdim { weight } => {
            let w = parse_weight(weight)?;
            let d = core::sdim(&w)?;
            Ok(if json { pretty(json!({"weight": weight_json(&w), "sdim": big(&d)})) } else { format!("{d}\n") })
        }
        Command::Blocks { w1, w2 } => {
            let r = core::tensor_blockwise(&parse_weight(w1)?, &parse_weight(w2)?)?;
            Ok(if json { pretty(fusion_json(&r)) } else { fusion_text(&r, true) })
        }
        Command::Tensor { w1, w2, fusion, ground_state } => {
            let (a, b) = (parse_weight(w1)?, parse_weight(w2)?);
            let r = if *ground_state {
                core::tensor_ground_states(&a, &b)?
            } else {
                let specs = fusion.as_ref().map(read_specs).transpose()?;
                let (s1, s2) = match &specs {
                    Some((x, y)) => (Some(x), Some(y)),
                    None => (None, None),
                };
                core::tensor_mod_negligible(&a, &b, s1, s2)?
            };
            Ok(if json { pretty(fusion_json(&r)) } else { fusion_text(&r, false) })
        }
        Command::Kac { weight } => {
            let f = core::kac_composition_factors(&parse_weight(weight)?);
            if json {
                return Ok(pretty(json!({"factors": f.iter().map(weight_json).collect::<Vec<_>>()})));
            }
            Ok(f.iter().map(|x| format!("L({x})\n")).collect())
        }
        Command::Det { weight, ell } => {
            let d = core::determinant(&parse_weight(weight)?, *ell)?;
            let (pj, pt) = match &d.principal {
                PrincipalDet::Known { power } => (json!({"ber_power": big(power)}), format!("Ber^{power}")),
                PrincipalDet::Symbolic { principal, multiplier } => (
                    json!({"ell_of": weight_json(principal), "multiplier": bigu(multiplier)}),
                    format!("Ber^({multiplier}·ℓ[{principal}])"),
                ),
            };
            if json {
                return Ok(pretty(json!({"det_power": big(&d.classical_power), "principal": pj})));
            }
            Ok(format!("det^{} ⊠ {pt}\n", d.classical_power))
        }
    }
}

