//! Run configuration: one TOML table per function.
//!
//! ```toml
//! [exp]
//! family = "exp"
//! analyses = ["coeff_bound", "tauberian"]
//!
//! [order_two]
//! family = "power_order"
//! rho = 2.0
//! c = 1.0
//! analyses = ["coeff_bound", "example_32"]
//! n_grid = [1, 10, 100, 1000]
//! ```
//!
//! Sections are processed in name order. Relative `path` values resolve
//! against the directory of the config file.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Analysis {
    CoeffBound,
    MaxBound,
    Tauberian,
    OrderType,
    Gamma,
    Example31,
    Example32,
    Example33,
    Factorizable,
    Generating,
}

impl Analysis {
    pub const ALL: [Analysis; 10] = [
        Analysis::CoeffBound,
        Analysis::MaxBound,
        Analysis::Tauberian,
        Analysis::OrderType,
        Analysis::Gamma,
        Analysis::Example31,
        Analysis::Example32,
        Analysis::Example33,
        Analysis::Factorizable,
        Analysis::Generating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Analysis::CoeffBound => "coeff_bound",
            Analysis::MaxBound => "max_bound",
            Analysis::Tauberian => "tauberian",
            Analysis::OrderType => "order_type",
            Analysis::Gamma => "gamma",
            Analysis::Example31 => "example_31",
            Analysis::Example32 => "example_32",
            Analysis::Example33 => "example_33",
            Analysis::Factorizable => "factorizable",
            Analysis::Generating => "generating",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Exp,
    PowerOrder { rho: f64, c: f64 },
    LogPowerGrowth { m: f64, c: f64 },
    DoubleExp { c5: f64, c6: f64 },
    CustomCoeffCsv { path: PathBuf },
    Poisson { lambda: f64 },
    Factorized(Vec<Family>),
}

impl Family {
    pub fn label(&self) -> String {
        match self {
            Family::Exp => "exp".into(),
            Family::PowerOrder { rho, c } => format!("power_order(rho={rho}, c={c})"),
            Family::LogPowerGrowth { m, c } => format!("log_power_growth(m={m}, c={c})"),
            Family::DoubleExp { c5, c6 } => format!("double_exp(c5={c5}, c6={c6})"),
            Family::CustomCoeffCsv { path } => format!("custom_coeff_csv({})", path.display()),
            Family::Poisson { lambda } => format!("poisson(lambda={lambda})"),
            Family::Factorized(fs) => {
                format!("factorized[{}]", fs.iter().map(Family::label).collect::<Vec<_>>().join(", "))
            }
        }
    }

    fn supports(&self, a: Analysis) -> bool {
        use Analysis::*;
        match self {
            Family::Factorized(fs) => match a {
                CoeffBound | MaxBound => true,
                Factorizable => fs.len() == 2,
                _ => false,
            },
            Family::Exp | Family::PowerOrder { .. } => matches!(a, CoeffBound | MaxBound | Tauberian | OrderType | Gamma | Example32),
            Family::LogPowerGrowth { .. } => matches!(a, CoeffBound | MaxBound | Tauberian | OrderType | Gamma | Example31),
            Family::DoubleExp { .. } => matches!(a, CoeffBound | MaxBound | Tauberian | OrderType | Gamma | Example33),
            Family::CustomCoeffCsv { .. } => matches!(a, CoeffBound | MaxBound | Tauberian | OrderType | Gamma),
            Family::Poisson { .. } => matches!(a, CoeffBound | MaxBound | Tauberian | OrderType | Gamma | Generating),
        }
    }
}

/// Optional grids and constants of a section; `None` means the analysis
/// default.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Grids {
    pub n_grid: Option<Vec<usize>>,
    pub r_grid: Option<Vec<f64>>,
    pub v_grid: Option<Vec<f64>>,
    pub eps_points: Option<usize>,
    pub eps0: Option<f64>,
    pub gamma: Option<f64>,
    pub c7: Option<f64>,
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub name: String,
    pub family: Family,
    pub analyses: Vec<Analysis>,
    pub grids: Grids,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub sections: Vec<Section>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    family: String,
    rho: Option<f64>,
    c: Option<f64>,
    m: Option<f64>,
    c5: Option<f64>,
    c6: Option<f64>,
    lambda: Option<f64>,
    path: Option<String>,
    factors: Option<Vec<RawFamily>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSection {
    family: String,
    rho: Option<f64>,
    c: Option<f64>,
    m: Option<f64>,
    c5: Option<f64>,
    c6: Option<f64>,
    lambda: Option<f64>,
    path: Option<String>,
    factors: Option<Vec<RawFamily>>,
    analyses: Vec<String>,
    n_grid: Option<Vec<usize>>,
    r_grid: Option<Vec<f64>>,
    v_grid: Option<Vec<f64>>,
    eps_points: Option<usize>,
    eps0: Option<f64>,
    gamma: Option<f64>,
    c7: Option<f64>,
    n_min: Option<usize>,
    n_max: Option<usize>,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

/// Position of the `[name]` header, for errors found after deserialisation.
fn section_position(text: &str, name: &str) -> (usize, usize) {
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let t = line.trim();
        if t.starts_with('[') && t.trim_start_matches('[').trim_end_matches(']').trim().trim_matches('"') == name {
            return line_col(text, offset + line.find('[').unwrap_or(0));
        }
        offset += line.len();
    }
    (1, 1)
}

fn need(v: Option<f64>, key: &str, family: &str) -> Result<f64, String> {
    v.ok_or_else(|| format!("family {family} requires `{key}`"))
}

fn positive(v: f64, key: &str) -> Result<f64, String> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{key}` must be positive and finite, got {v}"))
    }
}

fn build_family(raw: &RawFamily, base: &Path, nested: bool) -> Result<Family, String> {
    let name = raw.family.as_str();
    let unused = |keys: &[(&str, bool)]| -> Result<(), String> {
        for (k, present) in keys {
            if *present {
                return Err(format!("family {name} does not take `{k}`"));
            }
        }
        Ok(())
    };
    let present = [
        ("rho", raw.rho.is_some()),
        ("c", raw.c.is_some()),
        ("m", raw.m.is_some()),
        ("c5", raw.c5.is_some()),
        ("c6", raw.c6.is_some()),
        ("lambda", raw.lambda.is_some()),
        ("path", raw.path.is_some()),
        ("factors", raw.factors.is_some()),
    ];
    let others = |allowed: &[&str]| -> Vec<(&str, bool)> {
        present.iter().filter(|(k, _)| !allowed.contains(k)).copied().collect()
    };
    let fam = match name {
        "exp" => {
            unused(&others(&[]))?;
            Family::Exp
        }
        "power_order" => {
            unused(&others(&["rho", "c"]))?;
            Family::PowerOrder {
                rho: positive(need(raw.rho, "rho", name)?, "rho")?,
                c: positive(raw.c.unwrap_or(1.0), "c")?,
            }
        }
        "log_power_growth" => {
            unused(&others(&["m", "c"]))?;
            let m = need(raw.m, "m", name)?;
            if !(m > 1.0) || !m.is_finite() {
                return Err(format!("`m` must exceed 1, got {m}"));
            }
            Family::LogPowerGrowth { m, c: positive(raw.c.unwrap_or(1.0), "c")? }
        }
        "double_exp" => {
            unused(&others(&["c5", "c6"]))?;
            Family::DoubleExp {
                c5: positive(need(raw.c5, "c5", name)?, "c5")?,
                c6: positive(need(raw.c6, "c6", name)?, "c6")?,
            }
        }
        "custom_coeff_csv" => {
            unused(&others(&["path"]))?;
            let p = raw.path.as_ref().ok_or_else(|| "family custom_coeff_csv requires `path`".to_string())?;
            let path = base.join(p);
            if !path.is_file() {
                return Err(format!("coefficient file {} does not exist", path.display()));
            }
            Family::CustomCoeffCsv { path }
        }
        "poisson" => {
            unused(&others(&["lambda"]))?;
            Family::Poisson { lambda: positive(need(raw.lambda, "lambda", name)?, "lambda")? }
        }
        "factorized" => {
            if nested {
                return Err("factorized families cannot be nested".into());
            }
            unused(&others(&["factors"]))?;
            let fs = raw.factors.as_ref().ok_or_else(|| "family factorized requires `factors`".to_string())?;
            if fs.is_empty() || fs.len() > crate::legendre::MAX_DIMENSION {
                return Err(format!("factorized takes 1 to {} factors, got {}", crate::legendre::MAX_DIMENSION, fs.len()));
            }
            Family::Factorized(fs.iter().map(|f| build_family(f, base, true)).collect::<Result<_, _>>()?)
        }
        other => return Err(format!("unknown family {other:?}")),
    };
    Ok(fam)
}

fn validate_grids(g: &Grids) -> Result<(), String> {
    if let Some(r) = &g.r_grid {
        if r.is_empty() || r.iter().any(|x| !(*x > 0.0) || !x.is_finite()) {
            return Err("`r_grid` must be nonempty with positive finite radii".into());
        }
    }
    if let Some(v) = &g.v_grid {
        if v.is_empty() || v.iter().any(|x| !x.is_finite()) {
            return Err("`v_grid` must be nonempty and finite".into());
        }
    }
    if let Some(n) = &g.n_grid {
        if n.is_empty() {
            return Err("`n_grid` must be nonempty".into());
        }
    }
    if g.eps_points == Some(0) {
        return Err("`eps_points` must be at least 1".into());
    }
    if let Some(e) = g.eps0 {
        if !(e > 0.0 && e < 1.0) {
            return Err(format!("`eps0` must lie in (0, 1), got {e}"));
        }
    }
    if let Some(c7) = g.c7 {
        positive(c7, "c7")?;
    }
    if let (Some(a), Some(b)) = (g.n_min, g.n_max) {
        if b <= a {
            return Err("`n_max` must exceed `n_min`".into());
        }
    }
    Ok(())
}

/// Parses and validates a whole config. Nothing is run until this succeeds.
pub fn parse(text: &str, base: &Path) -> Result<Config, ConfigError> {
    let raw: BTreeMap<String, RawSection> = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |s| line_col(text, s.start));
        ConfigError { line, column, message: e.message().to_string() }
    })?;
    if raw.is_empty() {
        return Err(ConfigError { line: 1, column: 1, message: "config defines no sections".into() });
    }
    let mut sections = Vec::with_capacity(raw.len());
    for (name, rs) in raw {
        let at = |message: String| {
            let (line, column) = section_position(text, &name);
            ConfigError { line, column, message: format!("[{name}] {message}") }
        };
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            return Err(at("section names may only use ASCII letters, digits, '_' and '-'".into()));
        }
        let raw_family = RawFamily {
            family: rs.family,
            rho: rs.rho,
            c: rs.c,
            m: rs.m,
            c5: rs.c5,
            c6: rs.c6,
            lambda: rs.lambda,
            path: rs.path,
            factors: rs.factors,
        };
        let family = build_family(&raw_family, base, false).map_err(at)?;
        let mut analyses = Vec::with_capacity(rs.analyses.len());
        for a in &rs.analyses {
            let parsed = Analysis::parse(a).ok_or_else(|| at(format!("unknown analysis {a:?}")))?;
            if !family.supports(parsed) {
                return Err(at(format!("analysis {a} is not available for {}", family.label())));
            }
            if analyses.contains(&parsed) {
                return Err(at(format!("analysis {a} listed twice")));
            }
            analyses.push(parsed);
        }
        if analyses.is_empty() {
            return Err(at("`analyses` is empty".into()));
        }
        let grids = Grids {
            n_grid: rs.n_grid,
            r_grid: rs.r_grid,
            v_grid: rs.v_grid,
            eps_points: rs.eps_points,
            eps0: rs.eps0,
            gamma: rs.gamma,
            c7: rs.c7,
            n_min: rs.n_min,
            n_max: rs.n_max,
        };
        validate_grids(&grids).map_err(at)?;
        sections.push(Section { name, family, analyses, grids });
    }
    Ok(Config { sections })
}
