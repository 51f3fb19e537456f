use serde::Serialize;

use super::{roots, CentralizerError, SuperModel};
use crate::exactla::{FieldCtx, Matrix, Scalar, Subspace};
use crate::families;
use crate::hcpair::{check_normal_subpair, kernel_relative, Cocharacter, EvenAlgebra, EvenKind, EvenSub, HCPair, SubpairSpec, E, I};
use crate::rep::{self, Weight};

/// The pair of Cent(T_alpha) in Q(n): (GL2 x T', gl2 + k^(n-2)), bracket half the anticommutator.
/// Basis xE, xF, xH, xI, then d_k for k outside {i, j}, with [d_k, d_k] = T_k.
pub fn q_centralizer_pair(n: usize, alpha: &[i64], ctx: FieldCtx) -> Result<HCPair, CentralizerError> {
    if n < 2 {
        return Err(CentralizerError::Model(format!("Q(n) has roots only for n >= 2, got n = {n}")));
    }
    let model = SuperModel::new_q(n)?;
    let datum = roots(model)?;
    if alpha.len() != n || datum.find(alpha).is_none() {
        return Err(CentralizerError::NotARoot(format!("{} in {model}", super::format_weight(alpha))));
    }
    let (i, j) = (alpha.iter().position(|&x| x == 1).expect("root"), alpha.iter().position(|&x| x == -1).expect("root"));
    let r = n - 2;
    let even = if r == 0 { EvenAlgebra::gl2(ctx) } else { EvenAlgebra::new(EvenKind::Gl2PlusTorus(r), ctx) };
    let half = ctx.int(2).inv().expect("odd characteristic");
    let core = families::q2(&ctx.one(), &half, ctx)?.extend_even(even.clone())?;
    let lines: Vec<_> =
        (0..n).filter(|k| *k != i && *k != j).map(|k| rep::det_line(0, ctx).with_labels(vec![format!("d{}", k + 1)])).collect();
    let mut parts = vec![core.odd()];
    parts.extend(lines.iter());
    let odd = rep::direct_sum(&parts)?;
    let mut b = core.bracket().embed(4 + r, 4 + r, 0, 0);
    for t in 0..r {
        b.set(4 + t, 4 + t, 4 + t, ctx.one());
    }
    Ok(HCPair::new(even, odd, b)?)
}

/// Lie(T') inside the even part of a centralizer pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusData {
    pub t_prime: Subspace,
}

impl TorusData {
    /// T' spanned by the extra torus generators of gl2 + t'.
    pub fn standard(p: &HCPair) -> Self {
        let even = p.even();
        let idx: Vec<usize> = (4..even.dim()).collect();
        TorusData { t_prime: Subspace::coordinate(p.ctx(), even.dim(), &idx) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalKind {
    /// (T_alpha, whole odd part).
    WholeOdd,
    /// (T_alpha, K').
    KPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankOneReport {
    pub even: String,
    pub odd_dim: usize,
    /// Every odd weight is trivial on T_alpha.
    pub t_alpha_fixed: bool,
    pub g1t_dim: usize,
    pub k_dim: usize,
    pub k_prime_dim: usize,
    pub bracket_in_t_alpha: bool,
    pub radical: RadicalKind,
    pub radical_odd_dim: usize,
    pub radical_normal: bool,
    pub quotient: String,
    /// dim {v in g1^T : [v, G^alpha] = 0}.
    pub t_alpha_pair_odd_dim: usize,
    /// Odd part of the pair of Cent(super-torus T_alpha).
    pub hat_odd_dim: usize,
    /// dim g1^T / K(g1^T).
    pub weyl_odd_dim: usize,
}

/// Vectors v of s with [v, w] in target for all w in against.
fn bracket_null(p: &HCPair, s: &Subspace, against: &Subspace, target: &Subspace) -> Subspace {
    let ctx = p.ctx();
    let n = p.odd().dim();
    let basis = s.basis_vectors();
    if basis.is_empty() {
        return s.clone();
    }
    let ann = target.annihilator().basis_vectors();
    let mut rows = Vec::new();
    for w in against.basis_vectors() {
        let vals: Vec<Vec<Scalar>> = basis.iter().map(|b| p.bracket().eval(b, &w)).collect();
        for f in &ann {
            rows.push(vals.iter().map(|v| dot(ctx, v, f)).collect());
        }
    }
    if rows.is_empty() {
        return s.clone();
    }
    let coeffs = Matrix::from_rows(ctx, basis.len(), rows).expect("shape").kernel_basis();
    let vecs = coeffs.basis_vectors().iter().map(|c| combine(ctx, n, c, &basis)).collect();
    Subspace::from_vectors(ctx, n, vecs)
}

fn dot(ctx: FieldCtx, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(ctx.zero(), |acc, (x, y)| &acc + &(x * y))
}

fn combine(ctx: FieldCtx, n: usize, c: &[Scalar], basis: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut v = vec![ctx.zero(); n];
    for (x, b) in c.iter().zip(basis) {
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi = &*vi + &(x * bi);
        }
    }
    v
}

fn classify_sl2_quotient(weights: &[Weight]) -> String {
    let mut w: Vec<i64> = weights.iter().map(|w| w.sl2()).collect();
    w.sort_unstable();
    match w.as_slice() {
        [] => "SL2".into(),
        [-1, 1] => "SpO(2|1)".into(),
        [-2, 0, 0, 2] => "H(0+2)".into(),
        _ if w.contains(&3) && w.len().is_multiple_of(2) && w.len() >= 4 => format!("H(3^{}/1)", (w.len() - 2) / 2),
        _ => "unidentified".into(),
    }
}

/// K, K', the solvable-radical subpair and the quotient type for the pair (G_alpha, g1^{T_alpha})
/// of a rank-one centralizer.
pub fn rank_one_report(p: &HCPair, torus: Option<&TorusData>) -> Result<RankOneReport, CentralizerError> {
    let torus = torus.ok_or(CentralizerError::MissingTorusData)?;
    let ctx = p.ctx();
    let even = p.even();
    let m = p.odd();
    let n = m.dim();
    let tp = &torus.t_prime;
    if tp.ambient_dim() != even.dim() || !even.centre().contains_subspace(tp) {
        return Err(CentralizerError::TorusData("Lie(T') must be a central subspace of the even part".into()));
    }
    if tp.basis_vectors().iter().any(|y| !p.rho_of(y).is_zero()) {
        return Err(CentralizerError::TorusData("T' must act trivially on the odd part".into()));
    }
    let gl = even.dim() > 3;
    let t_alpha = if gl { tp.sum(&Subspace::coordinate(ctx, even.dim(), &[I])).expect("ambient") } else { tp.clone() };
    let p_char = ctx.characteristic() as i64;
    let killed = |k: i64| if p_char == 0 { k == 0 } else { k.rem_euclid(p_char) == 0 };
    let t_alpha_fixed = !gl || m.weights().iter().all(|w| killed(w.charge()));

    let zero = Weight::zero(m.kind());
    let fixed_idx: Vec<usize> = (0..n).filter(|&i| m.weight(i) == zero).collect();
    let g1t = Subspace::coordinate(ctx, n, &fixed_idx);
    let k = bracket_null(p, &g1t, &g1t, &Subspace::zero(ctx, even.dim()));
    let full = Subspace::full(ctx, n);
    let k_prime = kernel_relative(p, &full, tp)?;

    let bracket_in_t_alpha = t_alpha.contains_subspace(&p.bracket().image());
    let (radical, rad_odd) = if bracket_in_t_alpha { (RadicalKind::WholeOdd, full.clone()) } else { (RadicalKind::KPrime, k_prime.clone()) };
    let cochars = if gl { vec![Cocharacter::Centre] } else { vec![] };
    let sub = SubpairSpec {
        even_sub: EvenSub { name: "T_alpha".into(), lie: t_alpha.clone(), contains_sl2: false, cocharacters: cochars },
        odd_sub: rad_odd.clone(),
    };
    let radical_normal = check_normal_subpair(p, &sub)?;
    let quotient = match (radical, gl) {
        (RadicalKind::WholeOdd, true) => "PGL2".to_string(),
        (RadicalKind::WholeOdd, false) => "SL2".to_string(),
        (RadicalKind::KPrime, true) => "H(0+2)/mu2".to_string(),
        (RadicalKind::KPrime, false) => classify_sl2_quotient(rep::quotient(m, &rad_odd)?.module.weights()),
    };

    // G^alpha = k E + odd weight space of the weight of E
    let alpha = even.weight(E);
    let root_idx: Vec<usize> = (0..n).filter(|&i| m.weight(i) == alpha).collect();
    let root_space = Subspace::coordinate(ctx, n, &root_idx);
    let e1 = m.e_full(1);
    let ker_e = e1.kernel_basis();
    let w_alpha =
        bracket_null(p, &g1t.intersect(&ker_e).expect("ambient"), &root_space, &Subspace::zero(ctx, even.dim()));
    let hat = bracket_null(p, &full, &w_alpha, &Subspace::zero(ctx, even.dim()));

    Ok(RankOneReport {
        even: even.kind().to_string(),
        odd_dim: n,
        t_alpha_fixed,
        g1t_dim: g1t.dim(),
        k_dim: k.dim(),
        k_prime_dim: k_prime.dim(),
        bracket_in_t_alpha,
        radical,
        radical_odd_dim: rad_odd.dim(),
        radical_normal,
        quotient,
        t_alpha_pair_odd_dim: w_alpha.dim(),
        hat_odd_dim: hat.dim(),
        weyl_odd_dim: g1t.dim() - k.dim(),
    })
}
