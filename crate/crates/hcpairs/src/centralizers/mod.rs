//! Root data of GL(m|n), SL(m|n) and Q(n), centralizers of the subtori T_alpha and the radical
//! reports for centralizer pairs.

mod rank_one;

pub use rank_one::{q_centralizer_pair, rank_one_report, RadicalKind, RankOneReport, TorusData};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::exactla::{FieldCtx, Matrix};
use crate::families::FamilyError;
use crate::hcpair::HcError;
use crate::rep::RepError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CentralizerError {
    #[error("invalid model: {0}")]
    Model(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("the pair carries no designated torus data")]
    MissingTorusData,
    #[error("bad torus data: {0}")]
    TorusData(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hc(#[from] HcError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum SuperModel {
    Gl { m: usize, n: usize },
    Sl { m: usize, n: usize },
    Q { n: usize },
}

impl SuperModel {
    pub fn new_gl(m: usize, n: usize) -> Result<Self, CentralizerError> {
        if m == 0 || n == 0 {
            return Err(CentralizerError::Model(format!("GL(m|n) needs m, n >= 1, got ({m}|{n})")));
        }
        Ok(SuperModel::Gl { m, n })
    }

    pub fn new_sl(m: usize, n: usize) -> Result<Self, CentralizerError> {
        if m == 0 || n == 0 {
            return Err(CentralizerError::Model(format!("SL(m|n) needs m, n >= 1, got ({m}|{n})")));
        }
        Ok(SuperModel::Sl { m, n })
    }

    pub fn new_q(n: usize) -> Result<Self, CentralizerError> {
        if n == 0 {
            return Err(CentralizerError::Model("Q(n) needs n >= 1".into()));
        }
        Ok(SuperModel::Q { n })
    }

    /// Number of epsilon coordinates.
    pub fn ambient(&self) -> usize {
        match *self {
            SuperModel::Gl { m, n } | SuperModel::Sl { m, n } => m + n,
            SuperModel::Q { n } => n,
        }
    }

    /// omega = sum_{k <= m} e_k - sum_{k > m} e_k for SL(m|n).
    pub fn omega(&self) -> Option<Vec<i64>> {
        match *self {
            SuperModel::Sl { m, n } => Some((0..m + n).map(|k| if k < m { 1 } else { -1 }).collect()),
            _ => None,
        }
    }

    fn validate(&self) -> Result<(), CentralizerError> {
        match *self {
            SuperModel::Gl { m, n } => Self::new_gl(m, n).map(|_| ()),
            SuperModel::Sl { m, n } => Self::new_sl(m, n).map(|_| ()),
            SuperModel::Q { n } => Self::new_q(n).map(|_| ()),
        }
    }
}

impl fmt::Display for SuperModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperModel::Gl { m, n } => write!(f, "GL({m}|{n})"),
            SuperModel::Sl { m, n } => write!(f, "SL({m}|{n})"),
            SuperModel::Q { n } => write!(f, "Q({n})"),
        }
    }
}

impl FromStr for SuperModel {
    type Err = CentralizerError;

    /// Accepts gl(m|n), sl(m|n), q(n), case-insensitive; a comma may replace the bar.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase().replace(' ', "");
        let bad = || CentralizerError::Model(format!("cannot parse {s:?}, expected gl(m|n), sl(m|n) or q(n)"));
        let (head, rest) = t.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> = inner.split(['|', ',']).map(|x| x.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
        match (head, nums.as_slice()) {
            ("gl", &[m, n]) => Self::new_gl(m, n),
            ("sl", &[m, n]) => Self::new_sl(m, n),
            ("q", &[n]) => Self::new_q(n),
            _ => Err(bad()),
        }
    }
}

/// A root modulo omega with the dimensions of its even and odd root spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub coords: Vec<i64>,
    pub even_dim: usize,
    pub odd_dim: usize,
}

impl Root {
    pub fn is_even(&self) -> bool {
        self.even_dim > 0
    }

    pub fn is_odd(&self) -> bool {
        self.odd_dim > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    pub model: SuperModel,
    pub torus_rank: usize,
    pub roots: Vec<Root>,
    /// dim of the odd T-fixed subspace.
    pub g1t_dim: usize,
}

/// e_i - e_j in the ambient lattice, 0-based.
pub fn epsilon_diff(ambient: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; ambient];
    v[i] += 1;
    v[j] -= 1;
    v
}

pub fn format_weight(v: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        out.push_str(&format!("{sign}{mag}e{}", k + 1));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn rank_q(vecs: &[&[i64]]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    Matrix::from_ints(FieldCtx::rationals(), vecs).rank()
}

impl RootDatum {
    fn omega(&self) -> Option<Vec<i64>> {
        self.model.omega()
    }

    /// v lies in Z omega (for GL and Q: v = 0).
    pub fn is_zero_weight(&self, v: &[i64]) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        match self.omega() {
            Some(w) => {
                let k = v[0] * w[0];
                v.iter().zip(&w).all(|(x, y)| *x == k * y)
            }
            None => false,
        }
    }

    pub fn same_weight(&self, a: &[i64], b: &[i64]) -> bool {
        let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero_weight(&d)
    }

    /// T_a = T_b for nonzero a, b: k a = l b in X(T) for nonzero integers k, l, tested as
    /// b in Qa (+ Q omega).
    pub fn same_line(&self, a: &[i64], b: &[i64]) -> bool {
        let mut base: Vec<&[i64]> = vec![a];
        let om = self.omega();
        if let Some(w) = &om {
            base.push(w);
        }
        let r = rank_q(&base);
        base.push(b);
        rank_q(&base) == r
    }

    pub fn find(&self, alpha: &[i64]) -> Option<&Root> {
        self.roots.iter().find(|r| self.same_weight(&r.coords, alpha))
    }

    pub fn even_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_even())
    }

    pub fn odd_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_odd())
    }

    /// Weight-space dimension of the odd part at alpha.
    pub fn odd_dim(&self, alpha: &[i64]) -> usize {
        self.find(alpha).map_or(0, |r| r.odd_dim)
    }
}

pub fn roots(model: SuperModel) -> Result<RootDatum, CentralizerError> {
    model.validate()?;
    let amb = model.ambient();
    let (torus_rank, split) = match model {
        SuperModel::Gl { m, n } => (m + n, Some(m)),
        SuperModel::Sl { m, n } => (m + n - 1, Some(m)),
        SuperModel::Q { n } => (n, None),
    };
    let mut datum = RootDatum { model, torus_rank, roots: Vec::new(), g1t_dim: 0 };
    if let SuperModel::Q { n } = model {
        datum.g1t_dim = n;
    }
    for i in 0..amb {
        for j in 0..amb {
            if i == j {
                continue;
            }
            let v = epsilon_diff(amb, i, j);
            let (ev, od) = match split {
                Some(m) if (i < m) == (j < m) => (1, 0),
                Some(_) => (0, 1),
                None => (1, 1),
            };
            if datum.is_zero_weight(&v) {
                // only SL(1|1): the odd root spaces are T-fixed
                datum.g1t_dim += od;
                continue;
            }
            let pos = datum.roots.iter().position(|r| datum.same_weight(&r.coords, &v));
            match pos {
                Some(k) => {
                    datum.roots[k].even_dim += ev;
                    datum.roots[k].odd_dim += od;
                }
                None => datum.roots.push(Root { coords: v, even_dim: ev, odd_dim: od }),
            }
        }
    }
    Ok(datum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityClass {
    EvenOnly,
    OddOnly,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GShape {
    T,
    Gl2xT,
    Sl2xT,
    Psl2xT,
}

impl fmt::Display for GShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GShape::T => "T",
            GShape::Gl2xT => "GL2 x T'",
            GShape::Sl2xT => "SL2 x T'",
            GShape::Psl2xT => "PSL2 x T'",
        })
    }
}

/// Identification of G_alpha as a supergroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CentralizerKind {
    /// The centralizer equals its even part G_alpha.
    PurelyEven,
    /// GL(1|1) x T'.
    Gl11xT,
    /// GL(1|1) semidirect SL(1|1).
    Gl11SemiSl11,
    /// Q(2) x T' (super-torus).
    Q2xSuperTorus,
    /// The centralizer of T, here the whole supergroup.
    Whole,
    /// Even part T with no odd part beyond g1^T.
    SuperTorus,
}

impl fmt::Display for CentralizerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CentralizerKind::PurelyEven => "purely even",
            CentralizerKind::Gl11xT => "GL(1|1) x T'",
            CentralizerKind::Gl11SemiSl11 => "GL(1|1) x| SL(1|1)",
            CentralizerKind::Q2xSuperTorus => "Q(2) x T'",
            CentralizerKind::Whole => "whole supergroup",
            CentralizerKind::SuperTorus => "super-torus",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddRootSpace {
    pub beta: Vec<i64>,
    pub dim: usize,
}

/// The pair (G_alpha / T', g1^{T_alpha}) with the reduced bracket.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedPair {
    pub even: String,
    pub odd_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerReport {
    pub model: SuperModel,
    pub alpha: Vec<i64>,
    pub parity: ParityClass,
    pub shape: GShape,
    pub semisimple_rank: usize,
    /// The even roots gamma with T_alpha inside ker gamma.
    pub gammas: Vec<Vec<i64>>,
    pub odd_roots: Vec<OddRootSpace>,
    pub g1t_dim: usize,
    pub kind: CentralizerKind,
    pub induced: Option<InducedPair>,
}

impl CentralizerReport {
    /// dim g1^{T_alpha}.
    pub fn odd_dim(&self) -> usize {
        self.odd_roots.iter().map(|b| b.dim).sum::<usize>() + self.g1t_dim
    }
}

pub fn centralizer_shape(model: SuperModel, alpha: &[i64]) -> Result<CentralizerReport, CentralizerError> {
    let datum = roots(model)?;
    let amb = model.ambient();
    if alpha.len() != amb {
        return Err(CentralizerError::NotARoot(format!("{} has {} coordinates, {model} needs {amb}", format_weight(alpha), alpha.len())));
    }
    if datum.is_zero_weight(alpha) {
        // SL(1|1): the images of +-(e1 - e2) vanish on T and T_alpha = T
        let ambient_root = (0..amb).any(|i| (0..amb).any(|j| i != j && epsilon_diff(amb, i, j) == alpha));
        if datum.g1t_dim > 0 && ambient_root && !matches!(model, SuperModel::Q { .. }) {
            return Ok(CentralizerReport {
                model,
                alpha: alpha.to_vec(),
                parity: ParityClass::OddOnly,
                shape: GShape::T,
                semisimple_rank: 0,
                gammas: vec![],
                odd_roots: vec![],
                g1t_dim: datum.g1t_dim,
                kind: CentralizerKind::Whole,
                induced: None,
            });
        }
        return Err(CentralizerError::NotARoot(format_weight(alpha)));
    }
    let root = datum.find(alpha).ok_or_else(|| CentralizerError::NotARoot(format!("{} in {model}", format_weight(alpha))))?;
    let on_line: Vec<&Root> = datum.roots.iter().filter(|r| datum.same_line(alpha, &r.coords)).collect();
    let gammas: Vec<Vec<i64>> = on_line.iter().filter(|r| r.is_even()).map(|r| r.coords.clone()).collect();
    let odd_roots: Vec<OddRootSpace> =
        on_line.iter().filter(|r| r.is_odd()).map(|r| OddRootSpace { beta: r.coords.clone(), dim: r.odd_dim }).collect();
    let has_even = !gammas.is_empty();
    let has_odd = !odd_roots.is_empty();
    let parity = match (root.is_even(), has_even && has_odd) {
        (_, true) => ParityClass::Mixed,
        (true, false) => ParityClass::EvenOnly,
        (false, false) => ParityClass::OddOnly,
    };
    let semisimple_rank = usize::from(has_even);
    // in all three models the rank-one centralizers are GL2 x T'
    let shape = if has_even { GShape::Gl2xT } else { GShape::T };
    let odd_total = odd_roots.iter().map(|b| b.dim).sum::<usize>() + datum.g1t_dim;
    let kind = if odd_total == 0 {
        CentralizerKind::PurelyEven
    } else if has_even {
        CentralizerKind::Q2xSuperTorus
    } else if odd_roots.iter().any(|b| b.dim > 1) {
        CentralizerKind::Gl11SemiSl11
    } else if has_odd {
        CentralizerKind::Gl11xT
    } else {
        CentralizerKind::SuperTorus
    };
    let induced = has_even.then(|| InducedPair { even: "GL2".into(), odd_dim: odd_total });
    Ok(CentralizerReport {
        model,
        alpha: alpha.to_vec(),
        parity,
        shape,
        semisimple_rank,
        gammas,
        odd_roots,
        g1t_dim: datum.g1t_dim,
        kind,
        induced,
    })
}

/// Every root of the model with its report, plus the T-fixed case of SL(1|1).
pub fn centralizer_table(model: SuperModel) -> Result<Vec<CentralizerReport>, CentralizerError> {
    let datum = roots(model)?;
    let mut out: Vec<CentralizerReport> =
        datum.roots.iter().map(|r| centralizer_shape(model, &r.coords)).collect::<Result<_, _>>()?;
    if datum.roots.is_empty() && datum.g1t_dim > 0 {
        out.push(centralizer_shape(model, &epsilon_diff(model.ambient(), 0, 1))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
