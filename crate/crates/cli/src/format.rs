//! JSON file formats. Rationals are strings (`"3/2"`, `"-4"`), and
//! `"-inf"` stands for the tropical zero. Floats only appear in matrix files.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use hivenet::{Edge, EdgeId, GammaDeltaPath, Multipath, PlanarNetwork, Point, Rational, Tableau, TropicalWeight, Vertex, Weighting};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// Parses `p/q`, an integer, or a terminating decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> anyhow::Result<Rational> {
    let s = s.trim();
    if let Some((int_part, frac)) = s.split_once('.') {
        let digits = frac.len() as u32;
        if digits == 0 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            bail!("malformed rational {s:?}");
        }
        let joined = format!("{int_part}{frac}");
        let num: BigInt = joined.parse().map_err(|_| anyhow!("malformed rational {s:?}"))?;
        let den = BigInt::from(10u32).pow(digits);
        return Ok(BigRational::new(num, den));
    }
    let r: BigRational = s.parse().map_err(|_| anyhow!("malformed rational {s:?}"))?;
    Ok(r)
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_weight(s: &str) -> anyhow::Result<TropicalWeight> {
    if s.trim() == "-inf" {
        Ok(TropicalWeight::NegInf)
    } else {
        Ok(TropicalWeight::Finite(parse_rational(s)?))
    }
}

pub fn format_weight(w: &TropicalWeight) -> String {
    w.to_string()
}

/// Comma-separated rationals, as used for triple flags.
pub fn parse_list(s: &str) -> anyhow::Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripRec {
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRec {
    pub id: u32,
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRec {
    pub id: u32,
    pub tail: u32,
    pub head: u32,
    /// Interior corners of a bent edge, left to right, as `[x, y]`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bends: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkFile {
    pub strip: StripRec,
    /// The middle line of a concatenation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub middle: Option<String>,
    pub vertices: Vec<VertexRec>,
    pub edges: Vec<EdgeRec>,
}

impl NetworkFile {
    pub fn from_network(net: &PlanarNetwork) -> Self {
        NetworkFile {
            strip: StripRec { a: format_rational(net.a()), b: format_rational(net.b()) },
            middle: net.middle().map(format_rational),
            vertices: net
                .vertices()
                .iter()
                .map(|v| VertexRec { id: v.id, x: format_rational(v.x()), y: format_rational(v.y()) })
                .collect(),
            edges: net
                .edges()
                .iter()
                .map(|e| EdgeRec {
                    id: e.id,
                    tail: e.tail,
                    head: e.head,
                    bends: e.bends.iter().map(|p| [format_rational(&p.x), format_rational(&p.y)]).collect(),
                })
                .collect(),
        }
    }

    pub fn to_network(&self) -> anyhow::Result<PlanarNetwork> {
        let a = parse_rational(&self.strip.a)?;
        let b = parse_rational(&self.strip.b)?;
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            vertices.push(Vertex::new(v.id, parse_rational(&v.x)?, parse_rational(&v.y)?));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let mut edge = Edge::new(e.id, e.tail, e.head);
            for [x, y] in &e.bends {
                edge.bends.push(Point::new(parse_rational(x)?, parse_rational(y)?));
            }
            edges.push(edge);
        }
        let net = match &self.middle {
            Some(m) => PlanarNetwork::with_middle(a, b, parse_rational(m)?, vertices, edges),
            None => PlanarNetwork::new(a, b, vertices, edges),
        };
        Ok(net?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightingFile {
    pub weights: BTreeMap<EdgeId, String>,
}

impl WeightingFile {
    pub fn from_weighting(w: &Weighting) -> Self {
        WeightingFile { weights: w.iter().map(|(id, x)| (id, format_weight(x))).collect() }
    }

    pub fn to_weighting(&self, net: &PlanarNetwork) -> anyhow::Result<Weighting> {
        let mut map = BTreeMap::new();
        for (id, s) in &self.weights {
            map.insert(*id, parse_weight(s).with_context(|| format!("weight of edge {id}"))?);
        }
        Ok(Weighting::new(net, map)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauFile {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl TableauFile {
    pub fn from_tableau<T: std::fmt::Display>(t: &Tableau<T>) -> Self {
        TableauFile { n: t.n(), rows: t.rows().map(|r| r.iter().map(|x| x.to_string()).collect()).collect() }
    }

    pub fn to_tableau(&self) -> anyhow::Result<Tableau<TropicalWeight>> {
        if self.rows.len() != self.n + 1 {
            bail!("tableau with n = {} needs {} rows, found {}", self.n, self.n + 1, self.rows.len());
        }
        let mut rows = Vec::with_capacity(self.rows.len());
        for (k, row) in self.rows.iter().enumerate() {
            if row.len() != k + 1 {
                bail!("row {k} of the tableau needs {} entries, found {}", k + 1, row.len());
            }
            rows.push(row.iter().map(|s| parse_weight(s)).collect::<anyhow::Result<Vec<_>>>()?);
        }
        Tableau::from_rows(rows).ok_or_else(|| anyhow!("tableau rows are not triangular"))
    }
}

/// Real tableaux from spectra, written with decimal floats.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FloatTableauFile {
    pub n: usize,
    pub rows: Vec<Vec<f64>>,
}

impl FloatTableauFile {
    pub fn from_tableau(t: &Tableau<f64>) -> Self {
        FloatTableauFile { n: t.n(), rows: t.rows().map(|r| r.to_vec()).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<f64>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &hivenet::spectra::SymmetricMatrix) -> Self {
        MatrixFile { n: m.n(), entries: m.rows() }
    }

    pub fn to_matrix(&self) -> anyhow::Result<hivenet::spectra::SymmetricMatrix> {
        if self.entries.len() != self.n || self.entries.iter().any(|r| r.len() != self.n) {
            bail!("matrix entries are not {0}x{0}", self.n);
        }
        Ok(hivenet::spectra::SymmetricMatrix::from_rows(&self.entries)?)
    }
}

/// A multipath as a list of edge-id paths, each listed tail to head.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipathFile {
    pub paths: Vec<Vec<EdgeId>>,
}

impl MultipathFile {
    pub fn from_multipath(m: &Multipath) -> Self {
        MultipathFile { paths: m.paths().to_vec() }
    }

    pub fn to_multipath(&self, net: &PlanarNetwork) -> anyhow::Result<Multipath> {
        Ok(Multipath::new(net, self.paths.clone())?)
    }
}

/// A ΓΔ-path: the part left of the middle line and the part right of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GdPathFile {
    pub gamma: Vec<Vec<EdgeId>>,
    pub delta: Vec<Vec<EdgeId>>,
}

impl GdPathFile {
    pub fn from_gd_path(p: &GammaDeltaPath) -> Self {
        GdPathFile { gamma: p.gamma().paths().to_vec(), delta: p.delta().paths().to_vec() }
    }

    pub fn to_gd_path(&self, gd: &PlanarNetwork) -> anyhow::Result<GammaDeltaPath> {
        Ok(GammaDeltaPath::new(gd, self.gamma.clone(), self.delta.clone())?)
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file records serialize");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    fs::write(path, to_json(value)).with_context(|| format!("writing {}", path.display()))
}

pub fn read_network(path: &Path) -> anyhow::Result<PlanarNetwork> {
    read_json::<NetworkFile>(path)?.to_network().with_context(|| format!("network in {}", path.display()))
}

pub fn read_weighting(path: &Path, net: &PlanarNetwork) -> anyhow::Result<Weighting> {
    read_json::<WeightingFile>(path)?.to_weighting(net).with_context(|| format!("weighting in {}", path.display()))
}

pub fn read_tableau(path: &Path) -> anyhow::Result<Tableau<TropicalWeight>> {
    read_json::<TableauFile>(path)?.to_tableau().with_context(|| format!("tableau in {}", path.display()))
}
