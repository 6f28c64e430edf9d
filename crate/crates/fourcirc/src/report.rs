//! Serializable reports, the run manifest and JSON / CSV / text rendering.
//!
//! A JSON document has three top-level keys: `schema` (a versioned report
//! kind), `report` (the body) and `manifest`. Two runs with equal arguments
//! and caps produce equal bodies; only the manifest records worker count and
//! wall time. CSV output carries the body only, with one header line per
//! report kind:
//!
//! | report    | columns                                               |
//! |-----------|-------------------------------------------------------|
//! | factor    | `kind,factor,coset`                                   |
//! | check     | `self_dual,lcd,criterion_residue`                     |
//! | distance  | `d,witness_message,witness_weight`                    |
//! | crt       | `factor,field,kind,a_image,b_image,hermitian_self_dual` |
//! | enumerate | `a,b,distance`                                        |
//! | counts    | `equation,q,brute_force,formula,agrees`               |
//! | artin     | `prime`                                               |
//! | search    | `rank,a,b,distance`                                   |
//! | bound     | `d,bad_bound,total_self_dual,below_total`             |
//! | entropy   | `q,t,h`                                               |
//!
//! Coefficient lists are written as comma separated integers in ascending
//! degree; an element of `F_{p^k}` is the integer `sum d_i p^i` of its digits.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use fourcirc_core::galois::FieldCtx;

use crate::args::join;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    /// Ascending coefficients of the defining polynomial; empty for prime fields.
    pub modulus: Vec<u32>,
}

impl From<&FieldCtx> for FieldInfo {
    fn from(f: &FieldCtx) -> Self {
        FieldInfo { p: f.p(), k: f.k(), q: f.q(), modulus: f.modulus().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub version: String,
    pub field: Option<FieldInfo>,
    pub cap: u64,
    pub workers: usize,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: String,
    pub report: T,
    pub manifest: RunManifest,
}

pub trait Report: Serialize {
    const KIND: &'static str;
    fn csv_header(&self) -> &'static [&'static str];
    fn csv_rows(&self) -> Vec<Vec<String>>;
    fn text(&self) -> String;
}

pub fn schema(kind: &str) -> String {
    format!("fourcirc/{kind}/v{SCHEMA_VERSION}")
}

pub fn render<T: Report>(report: T, manifest: RunManifest, format: Format) -> serde_json::Result<String> {
    Ok(match format {
        Format::Json => {
            let env = Envelope { schema: schema(T::KIND), report, manifest };
            let mut s = serde_json::to_string_pretty(&env)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let rows = report.csv_rows();
            let write = |w: &mut csv::Writer<Vec<u8>>| -> csv::Result<()> {
                w.write_record(report.csv_header())?;
                for r in &rows {
                    w.write_record(r)?;
                }
                w.flush()?;
                Ok(())
            };
            write(&mut w).expect("writing CSV to memory");
            String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("CSV is UTF-8")
        }
        Format::Text => {
            let mut s = report.text();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub kind: String,
    pub factor: Vec<u32>,
    pub coset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorReport {
    pub q: u32,
    pub n: usize,
    pub alpha: u32,
    pub degrees: Vec<usize>,
    pub self_reciprocal: Vec<Vec<u32>>,
    pub pairs: Vec<[Vec<u32>; 2]>,
    pub cosets: Vec<Vec<usize>>,
    /// One entry per factor, in the order of `cosets`.
    pub factors: Vec<FactorEntry>,
    pub two_factor: bool,
}

impl Report for FactorReport {
    const KIND: &'static str = "factor";
    fn csv_header(&self) -> &'static [&'static str] {
        &["kind", "factor", "coset"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.factors
            .iter()
            .map(|f| {
                let coset = f.coset.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                vec![f.kind.clone(), join(&f.factor), coset]
            })
            .collect()
    }
    fn text(&self) -> String {
        let mut s = format!(
            "x^{} - 1 over F_{}: {} factors, degrees {:?}\n",
            self.n,
            self.q,
            self.degrees.len(),
            self.degrees
        );
        for f in &self.factors {
            let _ = writeln!(s, "  {:<16} [{}]  coset {:?}", f.kind, join(&f.factor), f.coset);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub self_dual: bool,
    pub lcd: bool,
    pub criterion_residue: Vec<u32>,
    pub matrix_self_dual: bool,
}

impl Report for CheckReport {
    const KIND: &'static str = "check";
    fn csv_header(&self) -> &'static [&'static str] {
        &["self_dual", "lcd", "criterion_residue"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![self.self_dual.to_string(), self.lcd.to_string(), join(&self.criterion_residue)]]
    }
    fn text(&self) -> String {
        format!(
            "self-dual: {}\nLCD: {}\n1 + aa' + bb' = [{}]\n",
            self.self_dual,
            self.lcd,
            join(&self.criterion_residue)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub length: usize,
    pub dimension: usize,
    pub d: usize,
    /// Concatenated coefficients of the message blocks `c` and `d`.
    pub witness_message: Vec<u32>,
    pub witness_weight: usize,
    pub witness: Vec<u32>,
}

impl Report for DistanceReport {
    const KIND: &'static str = "distance";
    fn csv_header(&self) -> &'static [&'static str] {
        &["d", "witness_message", "witness_weight"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![self.d.to_string(), join(&self.witness_message), self.witness_weight.to_string()]]
    }
    fn text(&self) -> String {
        format!(
            "[{}, {}, {}] code\nwitness message [{}]\nwitness codeword [{}]\n",
            self.length,
            self.dimension,
            self.d,
            join(&self.witness_message),
            join(&self.witness)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstituentEntry {
    pub factor: Vec<u32>,
    /// The constituent field as `p^k`.
    pub field: String,
    pub kind: String,
    pub root: u32,
    pub a_image: u32,
    pub b_image: u32,
    pub criterion_vanishes: bool,
    /// `None` for members of a reciprocal pair.
    pub hermitian_self_dual: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrtReport {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub constituents: Vec<ConstituentEntry>,
}

impl Report for CrtReport {
    const KIND: &'static str = "crt";
    fn csv_header(&self) -> &'static [&'static str] {
        &["factor", "field", "kind", "a_image", "b_image", "hermitian_self_dual"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.constituents
            .iter()
            .map(|c| {
                vec![
                    join(&c.factor),
                    c.field.clone(),
                    c.kind.clone(),
                    c.a_image.to_string(),
                    c.b_image.to_string(),
                    opt(&c.hermitian_self_dual),
                ]
            })
            .collect()
    }
    fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.constituents {
            let _ = writeln!(
                s,
                "[{}] over F_{} ({}): a -> {}, b -> {}, hermitian self-dual: {}",
                join(&c.factor),
                c.field,
                c.kind,
                c.a_image,
                c.b_image,
                c.hermitian_self_dual.map_or("n/a".to_string(), |h| h.to_string())
            );
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairEntry {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub distance: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistogramEntry {
    pub distance: usize,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub q: u32,
    pub n: usize,
    /// Decimal string; absent when the closed form does not apply.
    pub formula_count: Option<String>,
    pub pair_count: u64,
    pub distinct_code_count: u64,
    pub formula_matches: Option<bool>,
    pub distance_histogram: Option<Vec<HistogramEntry>>,
    pub pairs: Vec<PairEntry>,
}

impl Report for EnumerateReport {
    const KIND: &'static str = "enumerate";
    fn csv_header(&self) -> &'static [&'static str] {
        &["a", "b", "distance"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.pairs.iter().map(|p| vec![join(&p.a), join(&p.b), opt(&p.distance)]).collect()
    }
    fn text(&self) -> String {
        let mut s = format!(
            "self-dual pairs (a, b) for q = {}, n = {}: {}\ndistinct codes: {}\nclosed form: {}\n",
            self.q,
            self.n,
            self.pair_count,
            self.distinct_code_count,
            self.formula_count.as_deref().unwrap_or("n/a")
        );
        if let Some(h) = &self.distance_histogram {
            for e in h {
                let _ = writeln!(s, "  d = {}: {}", e.distance, e.count);
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountsReport {
    /// `sum_of_squares` or `hermitian`.
    pub equation: String,
    pub q: u32,
    pub brute_force: u64,
    pub formula: u64,
    pub agrees: bool,
}

impl Report for CountsReport {
    const KIND: &'static str = "counts";
    fn csv_header(&self) -> &'static [&'static str] {
        &["equation", "q", "brute_force", "formula", "agrees"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.equation.clone(),
            self.q.to_string(),
            self.brute_force.to_string(),
            self.formula.to_string(),
            self.agrees.to_string(),
        ]]
    }
    fn text(&self) -> String {
        format!("{} over q = {}: {} solutions, closed form {}\n", self.equation, self.q, self.brute_force, self.formula)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArtinReport {
    pub q: u64,
    pub limit: u64,
    pub primes: Vec<u64>,
    pub candidates: u64,
    pub density: f64,
    pub perfect_square: bool,
}

impl Report for ArtinReport {
    const KIND: &'static str = "artin";
    fn csv_header(&self) -> &'static [&'static str] {
        &["prime"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.primes.iter().map(|p| vec![p.to_string()]).collect()
    }
    fn text(&self) -> String {
        format!(
            "{} of {} odd primes up to {} have {} as a primitive root (density {:.4})\n{:?}\n",
            self.primes.len(),
            self.candidates,
            self.limit,
            self.q,
            self.density,
            self.primes
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankedCode {
    pub rank: usize,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub distance: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub q: u32,
    pub n: usize,
    pub length: usize,
    pub self_dual_codes: u64,
    pub top: usize,
    pub codes: Vec<RankedCode>,
}

impl Report for SearchReport {
    const KIND: &'static str = "search";
    fn csv_header(&self) -> &'static [&'static str] {
        &["rank", "a", "b", "distance"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.codes
            .iter()
            .map(|c| vec![c.rank.to_string(), join(&c.a), join(&c.b), c.distance.to_string()])
            .collect()
    }
    fn text(&self) -> String {
        let mut s = format!(
            "best {} of {} self-dual [{}, {}] codes over F_{}\n",
            self.codes.len(),
            self.self_dual_codes,
            self.length,
            self.length / 2,
            self.q
        );
        for c in &self.codes {
            let _ = writeln!(s, "{:>4}  d = {:<3} a = [{}]  b = [{}]", c.rank, c.distance, join(&c.a), join(&c.b));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub d: usize,
    /// Decimal string.
    pub bad_bound: String,
    pub below_total: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReportDto {
    pub q: u32,
    pub n: usize,
    pub length: usize,
    pub total_self_dual: String,
    pub membership_bound: String,
    pub bad_bounds: Vec<BoundEntry>,
    pub guaranteed_distance: usize,
    pub delta_star: f64,
    pub relative_guarantee: f64,
    pub entropy_at_guarantee: Option<f64>,
    pub notes: Vec<String>,
}

impl Report for BoundReportDto {
    const KIND: &'static str = "bound";
    fn csv_header(&self) -> &'static [&'static str] {
        &["d", "bad_bound", "total_self_dual", "below_total"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.bad_bounds
            .iter()
            .map(|e| vec![e.d.to_string(), e.bad_bound.clone(), self.total_self_dual.clone(), e.below_total.to_string()])
            .collect()
    }
    fn text(&self) -> String {
        let mut s = format!(
            "self-dual codes of length {} over F_{}: {}\n",
            self.length, self.q, self.total_self_dual
        );
        for e in &self.bad_bounds {
            let _ = writeln!(s, "  d = {:<3} bad <= {} {}", e.d, e.bad_bound, if e.below_total { "<" } else { ">=" });
        }
        let _ = writeln!(s, "some self-dual code has distance >= {}", self.guaranteed_distance);
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub q: u32,
    pub t: f64,
    pub h: f64,
    pub inverse: bool,
}

impl Report for EntropyReport {
    const KIND: &'static str = "entropy";
    fn csv_header(&self) -> &'static [&'static str] {
        &["q", "t", "h"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![self.q.to_string(), self.t.to_string(), self.h.to_string()]]
    }
    fn text(&self) -> String {
        format!("H_{}({}) = {}\n", self.q, self.t, self.h)
    }
}
