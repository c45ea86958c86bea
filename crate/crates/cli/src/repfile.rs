//! JSON text format for objects of the ladder category.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use wpl_core::ladder::{Bar, GradedModule, LadderRep, Vertex};
use wpl_core::QMatrix;

#[derive(Serialize, Deserialize, Debug)]
pub struct RepFile {
    pub p: usize,
    #[serde(default = "rationals")]
    pub field: String,
    pub ambient: ModuleDto,
    pub sub: ModuleDto,
    #[serde(default)]
    pub iota: Vec<IotaDto>,
}

fn rationals() -> String {
    "Q".into()
}

#[derive(Serialize, Deserialize, Debug, Default)]
pub struct ModuleDto {
    pub dims: Vec<DimDto>,
    #[serde(default)]
    pub maps: Vec<MapDto>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct DimDto {
    pub degree: i64,
    pub dim: usize,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct MapDto {
    pub from_degree: i64,
    pub matrix: Vec<Vec<Entry>>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct IotaDto {
    pub degree: i64,
    pub matrix: Vec<Vec<Entry>>,
}

/// A rational entry: an integer or a string "a/b".
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn parse(&self) -> Result<BigRational> {
        match self {
            Entry::Int(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            Entry::Text(s) => {
                let v: BigRational = s.trim().parse().map_err(|_| anyhow::anyhow!("bad rational entry {s:?}"))?;
                Ok(v)
            }
        }
    }

    fn from_q(q: &BigRational) -> Entry {
        match q.is_integer().then(|| i64::try_from(q.to_integer()).ok()).flatten() {
            Some(n) => Entry::Int(n),
            None => Entry::Text(q.to_string()),
        }
    }
}

fn matrix(rows: &[Vec<Entry>], shape: (usize, usize), what: &str) -> Result<QMatrix> {
    if rows.iter().all(|r| r.is_empty()) {
        return Ok(QMatrix::zeros(shape.0, shape.1));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(Entry::parse).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let m = QMatrix::from_rows(parsed).with_context(|| format!("{what}: ragged matrix"))?;
    if (m.rows(), m.cols()) != shape {
        bail!("{what}: expected a {}x{} matrix, got {}x{}", shape.0, shape.1, m.rows(), m.cols());
    }
    Ok(m)
}

fn rows_of(m: &QMatrix) -> Vec<Vec<Entry>> {
    m.to_rows().iter().map(|r| r.iter().map(Entry::from_q).collect()).collect()
}

impl ModuleDto {
    fn to_module(&self, what: &str) -> Result<GradedModule> {
        let dims: BTreeMap<i64, usize> = self.dims.iter().map(|d| (d.degree, d.dim)).collect();
        let dim = |d| dims.get(&d).copied().unwrap_or(0);
        let maps = self
            .maps
            .iter()
            .map(|m| {
                Ok((
                    m.from_degree,
                    matrix(
                        &m.matrix,
                        (dim(m.from_degree + 1), dim(m.from_degree)),
                        &format!("{what} map from degree {}", m.from_degree),
                    )?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedModule::from_parts(self.dims.iter().map(|d| (d.degree, d.dim)), maps)?)
    }

    fn from_module(g: &GradedModule) -> ModuleDto {
        ModuleDto {
            dims: g.dims().iter().map(|(&degree, &dim)| DimDto { degree, dim }).collect(),
            maps: g
                .maps()
                .filter(|(_, m)| !m.is_zero())
                .map(|(d, m)| MapDto {
                    from_degree: d,
                    matrix: rows_of(m),
                })
                .collect(),
        }
    }
}

impl RepFile {
    pub fn to_rep(&self) -> Result<LadderRep> {
        if self.field != "Q" {
            bail!("unsupported field {:?}; only \"Q\" is available", self.field);
        }
        let ambient = self.ambient.to_module("ambient")?;
        let sub = self.sub.to_module("sub")?;
        let iota = self
            .iota
            .iter()
            .map(|i| {
                Ok((
                    i.degree,
                    matrix(
                        &i.matrix,
                        (ambient.dim(i.degree), sub.dim(i.degree)),
                        &format!("iota at degree {}", i.degree),
                    )?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LadderRep::new(self.p, ambient, sub, iota)?)
    }

    pub fn from_rep(x: &LadderRep) -> RepFile {
        let iota = x
            .sub()
            .dims()
            .keys()
            .map(|&d| (d, x.iota(d)))
            .filter(|(_, m)| !m.is_zero())
            .map(|(degree, m)| IotaDto {
                degree,
                matrix: rows_of(&m),
            })
            .collect();
        RepFile {
            p: x.p(),
            field: rationals(),
            ambient: ModuleDto::from_module(x.ambient()),
            sub: ModuleDto::from_module(x.sub()),
            iota,
        }
    }
}

pub fn read(path: &Path) -> Result<LadderRep> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: RepFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    file.to_rep().with_context(|| format!("in {}", path.display()))
}

pub fn to_json(x: &LadderRep) -> String {
    serde_json::to_string_pretty(&RepFile::from_rep(x)).expect("plain data serializes")
}

/// Dimension vector such as `up0:1 up1:2 low1:1`.
pub fn dim_vector(x: &LadderRep) -> String {
    let mut parts: Vec<(Vertex, usize)> = x.dim_vector();
    parts.sort_by_key(|(v, _)| (v.bar == Bar::Lower, v.degree));
    if parts.is_empty() {
        return "0".into();
    }
    parts.iter().map(|(v, n)| format!("{v}:{n}")).collect::<Vec<_>>().join(" ")
}
