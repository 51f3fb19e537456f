//! Constructors for the classified families of Harish-Chandra pairs with even part SL2 or GL2.

mod graded;

pub use graded::{assemble_graded, charge_classes, z_family, ChargeClass};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactla::{FieldCtx, Matrix, Scalar, Subspace};
use crate::hcpair::{EvenAlgebra, HCPair, HcError, E, F, H, I};
use crate::homsolve::{circ_circ_map, gl2_pairing_map, BracketTensor};
use crate::rep::{self, GroupKind, RepError, Weight, WeightModule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("characteristic condition violated: {0}")]
    Characteristic(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("grading condition violated: {0}")]
    Clause(String),
    #[error(transparent)]
    Hc(#[from] HcError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    SpO21,
    H02,
    H3s1,
    Q2ac,
    KT,
    ST,
    LT,
    HT,
    Pair2Prime,
    Pair3Prime,
    ZFamily,
    Assembled,
}

impl FamilyId {
    pub const ALL: [FamilyId; 12] = [
        FamilyId::SpO21,
        FamilyId::H02,
        FamilyId::H3s1,
        FamilyId::Q2ac,
        FamilyId::KT,
        FamilyId::ST,
        FamilyId::LT,
        FamilyId::HT,
        FamilyId::Pair2Prime,
        FamilyId::Pair3Prime,
        FamilyId::ZFamily,
        FamilyId::Assembled,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            FamilyId::SpO21 => "spo21",
            FamilyId::H02 => "h02",
            FamilyId::H3s1 => "h3s1",
            FamilyId::Q2ac => "q2",
            FamilyId::KT => "k",
            FamilyId::ST => "s",
            FamilyId::LT => "l",
            FamilyId::HT => "h",
            FamilyId::Pair2Prime => "pair2prime",
            FamilyId::Pair3Prime => "pair3prime",
            FamilyId::ZFamily => "z",
            FamilyId::Assembled => "assembled",
        }
    }

    /// Names of the scalar parameters; None for the list-valued constructors.
    pub fn params(&self) -> Option<&'static [&'static str]> {
        match self {
            FamilyId::SpO21 => Some(&[]),
            FamilyId::H02 => Some(&["a"]),
            FamilyId::H3s1 => Some(&["s", "a"]),
            FamilyId::Q2ac => Some(&["a", "c"]),
            FamilyId::KT => Some(&["t", "a"]),
            FamilyId::ST | FamilyId::LT => Some(&["t"]),
            FamilyId::HT => Some(&["t", "a"]),
            FamilyId::Pair2Prime | FamilyId::Pair3Prime => Some(&["t", "r"]),
            FamilyId::ZFamily | FamilyId::Assembled => None,
        }
    }

    pub fn arity(&self) -> Option<usize> {
        self.params().map(|p| p.len())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|f| f.tag() == s)
            .ok_or_else(|| FamilyError::Parameter(format!("unknown family tag {s}")))
    }
}

/// Which subalgebra the bracket spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketImage {
    Zero,
    Centre,
    Sl2,
    Gl2,
    Other,
}

pub fn bracket_image(p: &HCPair) -> BracketImage {
    let img = p.bracket().image();
    let even = p.even();
    let gl2 = Subspace::coordinate(p.ctx(), even.dim(), &[E, F, H, I].into_iter().filter(|&x| x < even.dim()).collect::<Vec<_>>());
    if img.dim() == 0 {
        BracketImage::Zero
    } else if even.central().contains_subspace(&img) {
        BracketImage::Centre
    } else if img == even.sl2_part() {
        BracketImage::Sl2
    } else if even.dim() >= 4 && img == gl2 {
        BracketImage::Gl2
    } else {
        BracketImage::Other
    }
}

fn nonzero(a: &Scalar, what: &str) -> Result<(), FamilyError> {
    if a.is_zero() {
        return Err(FamilyError::Parameter(format!("{what} must be nonzero")));
    }
    Ok(())
}

/// p > 0 and p | k.
fn divides(ctx: FieldCtx, k: i64) -> bool {
    let p = ctx.characteristic();
    if p == 0 {
        k == 0
    } else {
        k.rem_euclid(p as i64) == 0
    }
}

fn require_p_divides_2t(ctx: FieldCtx, t: i64) -> Result<(), FamilyError> {
    if ctx.is_char_zero() {
        return Err(FamilyError::Characteristic("needs p > 0 with p | k = 2t".into()));
    }
    if !divides(ctx, 2 * t) {
        return Err(FamilyError::Characteristic(format!("needs p | k = 2t, here p = {} and k = {}", ctx.characteristic(), 2 * t)));
    }
    Ok(())
}

/// Even indices of the sl2 basis in the odd order E, H, F (descending weight).
pub(crate) const EHF: [usize; 3] = [E, H, F];

/// sl2 as a GL2 module twisted by det^t, basis E, H, F.
pub(crate) fn sl2_twisted(ctx: FieldCtx, t: i64, prefix: &str) -> Result<WeightModule, FamilyError> {
    let adj = EvenAlgebra::gl2(ctx).adjoint().coordinate_submodule(&EHF);
    let m = rep::det_twist(&adj, t)?;
    Ok(m.with_labels(["E", "H", "F"].iter().map(|x| format!("{prefix}{x}")).collect()))
}

pub(crate) fn line(ctx: FieldCtx, t: i64, label: &str) -> WeightModule {
    rep::det_line(t, ctx).with_labels(vec![label.to_string()])
}

/// tr(xy) for x, y in the E, H, F basis.
pub(crate) fn trace_form(ctx: FieldCtx, a: usize, b: usize) -> Scalar {
    match (EHF[a], EHF[b]) {
        (E, F) | (F, E) => ctx.one(),
        (H, H) => ctx.int(2),
        _ => ctx.zero(),
    }
}

fn even_vec(ctx: FieldCtx, dim: usize, x: usize, v: Scalar) -> Vec<Scalar> {
    let mut out = vec![ctx.zero(); dim];
    out[x] = v;
    out
}

/// SpO(2|1): L(1) with the bracket (oo) at n = 1, a = 1.
pub fn spo21(ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    let odd = rep::dual(&rep::sym_power(1, GroupKind::SL2, ctx));
    let b = circ_circ_map(1, &ctx.one()).map_err(HcError::from)?;
    Ok(HCPair::new(EvenAlgebra::sl2(ctx), odd, b)?)
}

/// L(0) + L(2) with [b, x] = a x; basis b, E, H, F.
pub fn h_0_2(ctx: FieldCtx, a: &Scalar) -> Result<HCPair, FamilyError> {
    nonzero(a, "a")?;
    let even = EvenAlgebra::sl2(ctx);
    let l2 = even.adjoint().coordinate_submodule(&EHF).with_labels(vec!["xE".into(), "xH".into(), "xF".into()]);
    let l0 = rep::simple_sl2(0, ctx).with_labels(vec!["b".into()]);
    let odd = rep::direct_sum(&[&l0, &l2])?;
    let mut b = BracketTensor::zero_square(ctx, 4, 3);
    for (p, &x) in EHF.iter().enumerate() {
        b.set_sym(0, 1 + p, &even_vec(ctx, 3, x, a.clone()));
    }
    Ok(HCPair::new(even, odd, b)?)
}

/// V(3) amalgamated s times along its socle L(1), basis w3^(1..s), w1, w-1, w-3^(1..s); the
/// bracket on every copy is (oo) at n = 3.
pub fn h3s1(s: usize, ctx: FieldCtx, a: &Scalar) -> Result<HCPair, FamilyError> {
    if ctx.characteristic() != 3 {
        return Err(FamilyError::Characteristic(format!(
            "V(3) amalgamated along L(1) carries a bracket only for p = 3, got p = {}",
            ctx.characteristic()
        )));
    }
    if s == 0 {
        return Err(FamilyError::Parameter("s must be at least 1".into()));
    }
    nonzero(a, "a")?;
    let v3 = rep::dual(&rep::sym_power(3, GroupKind::SL2, ctx));
    let n = 2 * s + 2;
    // position of copy c's vector s*_i
    let pos = |c: usize, i: usize| match i {
        0 => c,
        1 => s,
        2 => s + 1,
        _ => s + 2 + c,
    };
    let mut weights = vec![Weight::Sl2(0); n];
    let mut labels = vec![String::new(); n];
    for c in 0..s {
        for i in 0..4 {
            weights[pos(c, i)] = v3.weight(i);
            labels[pos(c, i)] = match i {
                0 => format!("w3_{}", c + 1),
                1 => "w1".into(),
                2 => "w-1".into(),
                _ => format!("w-3_{}", c + 1),
            };
        }
    }
    let copy_ops = |op: &Matrix| -> Result<Matrix, FamilyError> {
        let mut out = Matrix::zeros(ctx, n, n);
        for c in 0..s {
            for r in 0..4 {
                for col in 0..4 {
                    let v = &op[(r, col)];
                    if v.is_zero() {
                        continue;
                    }
                    let shared = |i: usize| i == 1 || i == 2;
                    if shared(col) && !shared(r) {
                        return Err(FamilyError::Characteristic("the socle of V(3) is not a submodule".into()));
                    }
                    out[(pos(c, r), pos(c, col))] = v.clone();
                }
            }
        }
        Ok(out)
    };
    let k = v3.max_power();
    let e = (1..=k).map(|j| copy_ops(v3.e(j).unwrap())).collect::<Result<Vec<_>, _>>()?;
    let f = (1..=k).map(|j| copy_ops(v3.f(j).unwrap())).collect::<Result<Vec<_>, _>>()?;
    let odd = WeightModule::new(GroupKind::SL2, ctx, labels, weights, e, f)?;
    let base = circ_circ_map(3, a).map_err(HcError::from)?;
    let mut b = BracketTensor::zero_square(ctx, n, 3);
    for c in 0..s {
        for d in 0..s {
            for i in 0..4 {
                for j in 0..4 {
                    b.set_pair(pos(c, i), pos(d, j), base.pair(i, j));
                }
            }
        }
    }
    Ok(HCPair::new(EvenAlgebra::sl2(ctx), odd, b)?)
}

/// gl2 with [aI + x, bI + y] = (ab a + c tr(xy)) I + b x + a y; odd basis E, F, H, I.
pub fn q2(a: &Scalar, c: &Scalar, ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    if a.is_zero() && c.is_zero() {
        return Err(FamilyError::Parameter("a and c cannot both vanish".into()));
    }
    let even = EvenAlgebra::gl2(ctx);
    let odd = even.adjoint().clone().with_labels(vec!["xE".into(), "xF".into(), "xH".into(), "xI".into()]);
    let mut b = BracketTensor::zero_square(ctx, 4, 4);
    b.set(I, I, I, a.clone());
    for x in [E, F, H] {
        b.set_sym(I, x, &even_vec(ctx, 4, x, ctx.one()));
    }
    b.set_sym(E, F, &even_vec(ctx, 4, I, c.clone()));
    b.set(H, H, I, &ctx.int(2) * c);
    Ok(HCPair::new(even, odd, b)?)
}

/// L((-t,-t)) + L((t+1,t-1)) with [b, x] = a x; basis b, E, H, F.
pub fn k_family(t: i64, a: &Scalar, ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    nonzero(a, "a")?;
    let odd = rep::direct_sum(&[&line(ctx, -t, "b"), &sl2_twisted(ctx, t, "x")?])?;
    let mut b = BracketTensor::zero_square(ctx, 4, 4);
    for (p, &x) in EHF.iter().enumerate() {
        b.set_sym(0, 1 + p, &even_vec(ctx, 4, x, a.clone()));
    }
    Ok(HCPair::new(EvenAlgebra::gl2(ctx), odd, b)?)
}

/// M_k = L((t,t)) + L((t+1,t-1)), M_-k = L((-t,-t)); basis e, E, H, F, b with [e, b] = I and
/// [x, b] = x.
pub fn s_family(t: i64, ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    require_p_divides_2t(ctx, t)?;
    let odd = rep::direct_sum(&[&line(ctx, t, "e"), &sl2_twisted(ctx, t, "x")?, &line(ctx, -t, "b")])?;
    let mut b = BracketTensor::zero_square(ctx, 5, 4);
    b.set_sym(0, 4, &even_vec(ctx, 4, I, ctx.one()));
    for (p, &x) in EHF.iter().enumerate() {
        b.set_sym(1 + p, 4, &even_vec(ctx, 4, x, ctx.one()));
    }
    Ok(HCPair::new(EvenAlgebra::gl2(ctx), odd, b)?)
}

/// M_k = L((t,t)) + L((t+1,t-1)), M_-k = L((-t+1,-t-1)); basis e, xE, xH, xF, yE, yH, yF with
/// [x, y] = tr(xy) I and [e, y] = y.
pub fn l_family(t: i64, ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    require_p_divides_2t(ctx, t)?;
    let odd = rep::direct_sum(&[&line(ctx, t, "e"), &sl2_twisted(ctx, t, "x")?, &sl2_twisted(ctx, -t, "y")?])?;
    let mut b = BracketTensor::zero_square(ctx, 7, 4);
    for p in 0..3 {
        b.set_sym(0, 4 + p, &even_vec(ctx, 4, EHF[p], ctx.one()));
        for q in 0..3 {
            let tr = trace_form(ctx, p, q);
            if !tr.is_zero() {
                b.set_sym(1 + p, 4 + q, &even_vec(ctx, 4, I, tr));
            }
        }
    }
    Ok(HCPair::new(EvenAlgebra::gl2(ctx), odd, b)?)
}

/// L((t,t-1)) + L((t,t-1))* with the pairing of central part d = -a/2k, k = 2t - 1.
pub fn h_family(t: i64, a: &Scalar, ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    let k = ctx.int(2 * t - 1);
    if k.is_zero() {
        return Err(FamilyError::Characteristic(format!("needs p not dividing k = 2t - 1 = {}", 2 * t - 1)));
    }
    nonzero(a, "a")?;
    let d = -&(a * &(&ctx.int(2) * &k).inv().expect("invertible"));
    h_family_with_d(t, a, &d, ctx)
}

/// The same module with a free central coefficient d; only d = -a/2k gives a pair.
pub fn h_family_with_d(t: i64, a: &Scalar, d: &Scalar, ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    let lambda = Weight::Gl2(t, t - 1);
    let m = rep::weyl_module(lambda, ctx)?.with_labels(vec!["s0".into(), "s1".into()]);
    let w = rep::weyl_module(lambda.dual_dominant(), ctx)?.with_labels(vec!["t0".into(), "t1".into()]);
    let odd = rep::direct_sum(&[&m, &w])?;
    let b = gl2_pairing_map(lambda, d, a).map_err(HcError::from)?.symmetrize_blocks();
    Ok(HCPair::new(EvenAlgebra::gl2(ctx), odd, b)?)
}

/// (L((t+1,t-1)) + N_k) + M_-k with N_k, M_-k trivial of dimension r + 1 and N_-k of dimension r;
/// basis xE, xH, xF, n0..nr, m0..mr with [x, m0] = x and [n_i, m_i] = I.
pub fn pair2prime(t: i64, r: usize, ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    require_p_divides_2t(ctx, t)?;
    if r == 0 {
        return Err(FamilyError::Parameter("r must be at least 1".into()));
    }
    let mut parts = vec![sl2_twisted(ctx, t, "x")?];
    parts.extend((0..=r).map(|i| line(ctx, t, &format!("n{i}"))));
    parts.extend((0..=r).map(|i| line(ctx, -t, &format!("m{i}"))));
    let odd = rep::direct_sum(&parts.iter().collect::<Vec<_>>())?;
    let n = odd.dim();
    let mut b = BracketTensor::zero_square(ctx, n, 4);
    let m0 = 3 + r + 1;
    for p in 0..3 {
        b.set_sym(p, m0, &even_vec(ctx, 4, EHF[p], ctx.one()));
    }
    for i in 0..=r {
        b.set_sym(3 + i, m0 + i, &even_vec(ctx, 4, I, ctx.one()));
    }
    Ok(HCPair::new(EvenAlgebra::gl2(ctx), odd, b)?)
}

/// (L((t+1,t-1)) + N_k) + (L((-t,-t)) + N_-k) with N_k, N_-k trivial of dimension r; basis
/// xE, xH, xF, n1..nr, b, m1..mr with [x, b] = x and [n_i, m_i] = I.
pub fn pair3prime(t: i64, r: usize, ctx: FieldCtx) -> Result<HCPair, FamilyError> {
    require_p_divides_2t(ctx, t)?;
    if r == 0 {
        return Err(FamilyError::Parameter("r must be at least 1".into()));
    }
    let mut parts = vec![sl2_twisted(ctx, t, "x")?];
    parts.extend((1..=r).map(|i| line(ctx, t, &format!("n{i}"))));
    parts.push(line(ctx, -t, "b"));
    parts.extend((1..=r).map(|i| line(ctx, -t, &format!("m{i}"))));
    let odd = rep::direct_sum(&parts.iter().collect::<Vec<_>>())?;
    let n = odd.dim();
    let mut b = BracketTensor::zero_square(ctx, n, 4);
    let bi = 3 + r;
    for p in 0..3 {
        b.set_sym(p, bi, &even_vec(ctx, 4, EHF[p], ctx.one()));
    }
    for i in 0..r {
        b.set_sym(3 + i, bi + 1 + i, &even_vec(ctx, 4, I, ctx.one()));
    }
    Ok(HCPair::new(EvenAlgebra::gl2(ctx), odd, b)?)
}

#[cfg(test)]
mod tests;
