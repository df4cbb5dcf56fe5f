//! Artifact records and their deterministic byte encodings. JSON keeps the
//! struct field order and prints every float with 17 significant digits
//! (round-trip safe in binary64); CSV uses the same float encoding with LF
//! line endings. Identical inputs therefore serialize to identical bytes.

use std::fmt::Write as _;
use std::io;

use serde::Serialize;

/// serde_json formatter that renders every f64 as `{:.16e}`.
struct Sci17;

impl serde_json::ser::Formatter for Sci17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

pub fn json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sci17);
    value.serialize(&mut ser).expect("artifact serialization is infallible");
    out.push(b'\n');
    out
}

fn float(s: &mut String, value: f64) {
    let _ = write!(s, "{value:.16e}");
}

#[derive(Serialize)]
pub struct PolyRecord {
    pub k: usize,
    pub coefficients: Vec<f64>,
}

#[derive(Serialize)]
pub struct PolyArtifact {
    pub command: &'static str,
    pub m: u32,
    pub zeta: f64,
    pub family: &'static str,
    pub periodic: bool,
    pub polynomials: Vec<PolyRecord>,
}

impl PolyArtifact {
    /// One row per coefficient: `k,power,coefficient`.
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut s = String::from("k,power,coefficient\n");
        for p in &self.polynomials {
            for (power, &c) in p.coefficients.iter().enumerate() {
                let _ = write!(s, "{},{},", p.k, power);
                float(&mut s, c);
                s.push('\n');
            }
        }
        s.into_bytes()
    }
}

#[derive(Serialize)]
pub struct SpectrumArtifact {
    pub command: &'static str,
    pub m: u32,
    pub zeta: f64,
    pub family: &'static str,
    pub periodic: bool,
    pub energies: Vec<f64>,
}

impl SpectrumArtifact {
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut s = String::from("index,energy\n");
        for (i, &e) in self.energies.iter().enumerate() {
            let _ = write!(s, "{i},");
            float(&mut s, e);
            s.push('\n');
        }
        s.into_bytes()
    }
}

#[derive(Serialize)]
pub struct MomentsArtifact {
    pub command: &'static str,
    pub m: u32,
    pub zeta: f64,
    pub family: &'static str,
    pub periodic: bool,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl MomentsArtifact {
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut s = String::from("index,node,weight\n");
        for (i, (&n, &w)) in self.nodes.iter().zip(&self.weights).enumerate() {
            let _ = write!(s, "{i},");
            float(&mut s, n);
            s.push(',');
            float(&mut s, w);
            s.push('\n');
        }
        s.into_bytes()
    }
}

#[derive(Serialize)]
pub struct WavefunctionArtifact {
    pub command: &'static str,
    pub m: u32,
    pub zeta: f64,
    pub family: &'static str,
    pub periodic: bool,
    pub level: usize,
    pub energy: f64,
    pub realization: String,
    pub xs: Vec<f64>,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl WavefunctionArtifact {
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut s = String::from("x,re,im\n");
        for i in 0..self.xs.len() {
            float(&mut s, self.xs[i]);
            s.push(',');
            float(&mut s, self.re[i]);
            s.push(',');
            float(&mut s, self.im[i]);
            s.push('\n');
        }
        s.into_bytes()
    }
}

#[derive(Serialize)]
pub struct EdgeRecord {
    pub edge_label: String,
    pub oracle_value: f64,
    pub algebraic_value: f64,
    pub abs_error: f64,
}

#[derive(Serialize)]
pub struct BandsArtifact {
    pub command: &'static str,
    pub m: u32,
    pub zeta: f64,
    pub gap_indices: Vec<usize>,
    pub includes_ground_state: bool,
    pub edges: Vec<EdgeRecord>,
}

impl BandsArtifact {
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut s = String::from("edge_label,oracle_value,algebraic_value,abs_error\n");
        for e in &self.edges {
            let _ = write!(s, "{},", e.edge_label);
            float(&mut s, e.oracle_value);
            s.push(',');
            float(&mut s, e.algebraic_value);
            s.push(',');
            float(&mut s, e.abs_error);
            s.push('\n');
        }
        s.into_bytes()
    }
}

#[derive(Serialize)]
pub struct SweepRow {
    pub zeta: f64,
    pub band: usize,
    pub edge_lo: f64,
    pub edge_hi: f64,
    pub lo_tag: &'static str,
    pub hi_tag: &'static str,
}

#[derive(Serialize)]
pub struct SweepArtifact {
    pub command: &'static str,
    pub m: u32,
    pub zeta_min: f64,
    pub zeta_max: f64,
    pub steps: usize,
    pub bands: usize,
    pub rows: Vec<SweepRow>,
}

impl SweepArtifact {
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut s = String::from("zeta,band,edge_lo,edge_hi,lo_tag,hi_tag\n");
        for r in &self.rows {
            float(&mut s, r.zeta);
            let _ = write!(s, ",{},", r.band);
            float(&mut s, r.edge_lo);
            s.push(',');
            float(&mut s, r.edge_hi);
            let _ = write!(s, ",{},{}", r.lo_tag, r.hi_tag);
            s.push('\n');
        }
        s.into_bytes()
    }
}

#[derive(Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyArtifact {
    pub command: &'static str,
    pub m: u32,
    pub zeta: f64,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl VerifyArtifact {
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut s = String::from("name,passed,detail\n");
        for c in &self.checks {
            // quote the detail so embedded commas stay in one field
            let _ = write!(s, "{},{},\"{}\"", c.name, c.passed, c.detail.replace('"', "\"\""));
            s.push('\n');
        }
        s.into_bytes()
    }
}
