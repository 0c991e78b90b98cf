//! Command implementations behind the `dqpsk-ber` binary.
//!
//! Every command returns its CSV text; the binary only parses arguments,
//! routes the text to stdout or a file, and maps errors to exit codes.
//!
//! CSV dialect: comma separated, `.` decimal point, LF line endings, header
//! always present, values in scientific notation with a lowercase `e` and a
//! signed two-digit exponent (`1.63908e-01`).

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::approx::{self, approx_set, omega5, omega6, omega7, relative_error};
use crate::bounds::{self, exact_ber, solve_rho0, SnrPoint};
use crate::error::{Error, Result};
use crate::montecarlo::{simulate, McConfig};

/// Significant digits of every data value.
pub const SIG_DIGITS: usize = 6;
/// Significant digits of rho0 and lambda0.
pub const CONSTANT_DIGITS: usize = 15;
/// The SNR grid of the reference tables: linear gamma = 1, 2, ..., 12.
pub const TABLE_GAMMAS: [f64; 12] = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0];
pub const MAX_SWEEP_STEPS: f64 = 1e7;

/// Scientific notation with `sig` significant digits and a signed,
/// at-least-two-digit exponent.
pub fn format_sci(v: f64, sig: usize) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{:.*e}", sig.saturating_sub(1), v);
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

/// Grid coordinates, printed in shortest form after rounding away the
/// accumulation noise of start + i * step.
fn format_axis(v: f64) -> String {
    let rounded = (v * 1e12).round() / 1e12;
    if rounded == 0.0 {
        "0".to_string()
    } else {
        rounded.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// BER and BER1..BER3
    Exact,
    /// BER4..BER7
    Weighted,
    /// eps5..eps7
    RelativeErrors,
}

impl FromStr for Table {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Table::Exact),
            "2" => Ok(Table::Weighted),
            "3" => Ok(Table::RelativeErrors),
            other => Err(Error::Usage(format!("unknown table {other:?}, expected 1, 2 or 3"))),
        }
    }
}

pub fn cmd_table(which: Table) -> Result<String> {
    let header = match which {
        Table::Exact => "gamma_lin,ber,ber1,ber2,ber3",
        Table::Weighted => "gamma_lin,ber4,ber5,ber6,ber7",
        Table::RelativeErrors => "gamma_lin,eps5,eps6,eps7",
    };
    let mut out = String::new();
    out.push_str(header);
    out.push('\n');
    for g in TABLE_GAMMAS {
        let set = approx_set(SnrPoint::from_linear(g)?)?;
        let values: Vec<f64> = match which {
            Table::Exact => vec![set.exact, set.ber(1), set.ber(2), set.ber(3)],
            Table::Weighted => vec![set.ber(4), set.ber(5), set.ber(6), set.ber(7)],
            Table::RelativeErrors => vec![set.eps5, set.eps6, set.eps7],
        };
        out.push_str(&format_axis(g));
        for v in values {
            out.push(',');
            out.push_str(&format_sci(v, SIG_DIGITS));
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Db,
    Linear,
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "db" => Ok(Scale::Db),
            "linear" => Ok(Scale::Linear),
            other => Err(Error::Usage(format!("unknown scale {other:?}, expected db or linear"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
    pub scale: Scale,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let finite = self.start.is_finite() && self.stop.is_finite() && self.step.is_finite();
        if !finite || !(self.start < self.stop) || !(self.step > 0.0) {
            return Err(Error::Usage(format!(
                "sweep needs finite start < stop and step > 0, got {} .. {} step {}",
                self.start, self.stop, self.step
            )));
        }
        if (self.stop - self.start) / self.step > MAX_SWEEP_STEPS {
            return Err(Error::Usage(format!(
                "sweep would produce more than {MAX_SWEEP_STEPS} steps"
            )));
        }
        Ok(())
    }

    /// Grid values start, start + step, ..., up to and including stop
    /// (within a 1e-9 step tolerance).
    pub fn points(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        Ok((0..n).map(|i| self.start + i as f64 * self.step).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Exact,
    L1,
    L2,
    U1,
    U2,
    U3,
    Ber(u8),
    Eps(u8),
    Weight(u8),
}

impl Column {
    pub fn name(&self) -> String {
        match self {
            Column::Exact => "exact".into(),
            Column::L1 => "l1".into(),
            Column::L2 => "l2".into(),
            Column::U1 => "u1".into(),
            Column::U2 => "u2".into(),
            Column::U3 => "u3".into(),
            Column::Ber(i) => format!("ber{i}"),
            Column::Eps(i) => format!("eps{i}"),
            Column::Weight(i) => format!("w{i}"),
        }
    }

    /// Weights 6 and 7 are defined at gamma = 0; everything else needs
    /// gamma > 0.
    fn allows_zero(&self) -> bool {
        matches!(self, Column::Weight(6 | 7))
    }
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let indexed = |prefix: &str, range: std::ops::RangeInclusive<u8>| {
            s.strip_prefix(prefix)
                .and_then(|rest| rest.parse::<u8>().ok())
                .filter(|i| range.contains(i))
        };
        let col = match s {
            "exact" => Some(Column::Exact),
            "l1" => Some(Column::L1),
            "l2" => Some(Column::L2),
            "u1" => Some(Column::U1),
            "u2" => Some(Column::U2),
            "u3" => Some(Column::U3),
            _ => indexed("ber", 1..=7)
                .map(Column::Ber)
                .or_else(|| indexed("eps", 5..=7).map(Column::Eps))
                .or_else(|| indexed("w", 5..=7).map(Column::Weight)),
        };
        col.ok_or_else(|| Error::Usage(format!("unknown column {s:?}")))
    }
}

/// Parses a comma-separated column list such as `exact,l1,u1`.
pub fn parse_columns(list: &str) -> Result<Vec<Column>> {
    let cols = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(Column::from_str)
        .collect::<Result<Vec<_>>>()?;
    if cols.is_empty() {
        return Err(Error::Usage("no columns requested".into()));
    }
    Ok(cols)
}

fn ber_i(i: u8, snr: SnrPoint) -> Result<f64> {
    match i {
        1 => approx::ber1(snr),
        2 => approx::ber2(snr),
        3 => approx::ber3(snr),
        4 => approx::ber4(snr),
        5 => approx::ber5(snr),
        6 => approx::ber6(snr),
        7 => approx::ber7(snr),
        _ => unreachable!("column parser admits BER1..BER7 only"),
    }
}

fn evaluate_row(gamma_lin: f64, columns: &[Column]) -> Result<Vec<f64>> {
    let snr = if gamma_lin > 0.0 {
        Some(SnrPoint::from_linear(gamma_lin)?)
    } else {
        None
    };
    let need_snr = || {
        snr.ok_or_else(|| {
            Error::Domain(format!("gamma must be positive, got {gamma_lin} in the sweep grid"))
        })
    };
    let mut exact = None;
    let mut bounds = None;
    let mut out = Vec::with_capacity(columns.len());
    for col in columns {
        if !col.allows_zero() {
            need_snr()?;
        }
        let v = match *col {
            Column::Exact => *get_or_try(&mut exact, || exact_ber(need_snr()?))?,
            Column::L1 | Column::L2 | Column::U1 | Column::U2 | Column::U3 => {
                let b = get_or_try(&mut bounds, || bounds::bound_set(need_snr()?))?;
                match col {
                    Column::L1 => b.l1,
                    Column::L2 => b.l2,
                    Column::U1 => b.u1,
                    Column::U2 => b.u2,
                    _ => b.u3,
                }
            }
            Column::Ber(i) => ber_i(i, need_snr()?)?,
            Column::Eps(i) => {
                let reference = *get_or_try(&mut exact, || exact_ber(need_snr()?))?;
                relative_error(ber_i(i, need_snr()?)?, reference)?
            }
            Column::Weight(5) => omega5(gamma_lin)?.value(),
            Column::Weight(6) => omega6(gamma_lin)?.value(),
            Column::Weight(_) => omega7(gamma_lin)?.value(),
        };
        out.push(v);
    }
    Ok(out)
}

fn get_or_try<T>(slot: &mut Option<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if slot.is_none() {
        *slot = Some(f()?);
    }
    Ok(slot.as_ref().expect("filled above"))
}

pub fn cmd_sweep(spec: &SweepSpec, columns: &[Column]) -> Result<String> {
    if columns.is_empty() {
        return Err(Error::Usage("no columns requested".into()));
    }
    let points = spec.points()?;
    let mut out = String::new();
    out.push_str(match spec.scale {
        Scale::Db => "gamma_db",
        Scale::Linear => "gamma_lin",
    });
    for c in columns {
        out.push(',');
        out.push_str(&c.name());
    }
    out.push('\n');
    for x in points {
        let gamma_lin = match spec.scale {
            Scale::Db => SnrPoint::from_db(x)?.linear(),
            Scale::Linear => x,
        };
        let values = evaluate_row(gamma_lin, columns)?;
        out.push_str(&format_axis(x));
        for v in values {
            out.push(',');
            out.push_str(&format_sci(v, SIG_DIGITS));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_mc(snr_db: f64, symbols: u64, seed: u64) -> Result<String> {
    let snr = SnrPoint::from_db(snr_db)?;
    let result = simulate(&McConfig::new(snr, symbols, seed))?;
    let exact = exact_ber(snr)?;
    Ok(format!(
        "gamma_db,ber_mc,ci_half_width,ber_exact,inside_ci\n{},{},{},{},{}\n",
        format_axis(snr_db),
        format_sci(result.ber_estimate, SIG_DIGITS),
        format_sci(result.ci_half_width, SIG_DIGITS),
        format_sci(exact, SIG_DIGITS),
        u8::from(result.contains(exact)),
    ))
}

pub fn cmd_constants() -> Result<String> {
    let c = solve_rho0()?;
    let mut out = String::from("rho0,lambda0,residual\n");
    writeln!(
        out,
        "{},{},{}",
        format_sci(c.rho0, CONSTANT_DIGITS),
        format_sci(c.lambda0, CONSTANT_DIGITS),
        format_sci(c.residual(), 3),
    )
    .expect("writing to a String");
    Ok(out)
}

/// Writes `text` to `path` through a temporary file in the same directory
/// and an atomic rename.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
