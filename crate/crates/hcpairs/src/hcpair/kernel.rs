use super::{HCPair, HcError, E, F, H, I};
use crate::exactla::{Matrix, Scalar, Subspace};
use crate::rep::{self, Weight, WeightModule};

/// Largest submodule of m contained in the subspace x.
pub fn largest_submodule_in(m: &WeightModule, x: &Subspace) -> Subspace {
    let ctx = m.ctx();
    let spaces: Vec<Subspace> =
        m.weight_spaces().into_values().map(|idx| Subspace::coordinate(ctx, m.dim(), &idx)).collect();
    let mut cur = x.clone();
    loop {
        let mut next = Subspace::zero(ctx, m.dim());
        for w in &spaces {
            next = next.sum(&cur.intersect(w).expect("ambient")).expect("ambient");
        }
        for k in 1..=m.max_power() {
            for op in [m.e(k).unwrap(), m.f(k).unwrap()] {
                next = next.intersect(&Subspace::preimage(op, &cur)).expect("ambient");
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Largest submodule N of s with [N, s] inside `target` (a subspace of the even part).
pub fn kernel_relative(p: &HCPair, s: &Subspace, target: &Subspace) -> Result<Subspace, HcError> {
    let m = p.odd();
    if !rep::is_submodule(m, s) {
        return Err(HcError::Rep(rep::RepError::NotInvariant));
    }
    let ctx = p.ctx();
    let basis = s.basis_vectors();
    let ann = target.annihilator().basis_vectors();
    let mut rows = Vec::new();
    for w in &basis {
        let vals: Vec<Vec<Scalar>> = basis.iter().map(|b| p.bracket().eval(b, w)).collect();
        for f in &ann {
            rows.push(vals.iter().map(|v| v.iter().zip(f).fold(ctx.zero(), |acc, (a, b)| &acc + &(a * b))).collect());
        }
    }
    let null = if rows.is_empty() || basis.is_empty() {
        s.clone()
    } else {
        let coeffs = Matrix::from_rows(ctx, basis.len(), rows).expect("shape").kernel_basis();
        let vecs = coeffs
            .basis_vectors()
            .iter()
            .map(|c| {
                let mut v = vec![ctx.zero(); m.dim()];
                for (x, b) in c.iter().zip(&basis) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = &*vi + &(x * bi);
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(ctx, m.dim(), vecs)
    };
    Ok(largest_submodule_in(m, &null))
}

/// K(s): the largest submodule of s with [K(s), s] = 0.
pub fn kernel_k(p: &HCPair, s: &Subspace) -> Result<Subspace, HcError> {
    kernel_relative(p, s, &Subspace::zero(p.ctx(), p.even().dim()))
}

/// K'(odd): the largest submodule N with [odd, N] inside a central subspace.
pub fn kernel_k_prime(p: &HCPair, central: &Subspace) -> Result<Subspace, HcError> {
    if central.ambient_dim() != p.even().dim() {
        return Err(HcError::Dimension("central subspace of the wrong ambient".into()));
    }
    if !p.even().centre().contains_subspace(central) {
        return Err(HcError::NotCentral);
    }
    kernel_relative(p, &Subspace::full(p.ctx(), p.odd().dim()), central)
}

/// Largest submodule R with [odd, R] = 0.
pub fn unipotent_radical_odd(p: &HCPair) -> Subspace {
    kernel_k(p, &Subspace::full(p.ctx(), p.odd().dim())).expect("full module is a submodule")
}

/// The same radical computed from the other argument slot: {w : [v, w] = 0 for all v}.
pub fn unipotent_radical_odd_right(p: &HCPair) -> Subspace {
    let ctx = p.ctx();
    let n = p.odd().dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for x in 0..p.even().dim() {
            rows.push((0..n).map(|j| p.bracket().get(i, j, x).clone()).collect());
        }
    }
    let null = if rows.is_empty() {
        Subspace::full(ctx, n)
    } else {
        Matrix::from_rows(ctx, n, rows).expect("shape").kernel_basis()
    };
    largest_submodule_in(p.odd(), &null)
}

/// A one-parameter subgroup of the GL2 torus, evaluated on weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cocharacter {
    /// t -> diag(t, 1/t), pairing l1 - l2.
    Coroot,
    /// t -> t I2, pairing l1 + l2.
    Centre,
}

impl Cocharacter {
    pub fn pair(&self, w: &Weight) -> i64 {
        match self {
            Cocharacter::Coroot => w.sl2(),
            Cocharacter::Centre => w.charge(),
        }
    }
}

/// A connected subgroup of the even group, by its Lie algebra, whether it contains SL2 and the
/// cocharacters spanning its torus part.
#[derive(Clone, Debug)]
pub struct EvenSub {
    pub name: String,
    pub lie: Subspace,
    pub contains_sl2: bool,
    pub cocharacters: Vec<Cocharacter>,
}

impl EvenSub {
    pub fn whole(p: &HCPair) -> Self {
        let d = p.even().dim();
        let mut cochars = vec![Cocharacter::Coroot];
        if d > 3 {
            cochars.push(Cocharacter::Centre);
        }
        EvenSub { name: "G".into(), lie: Subspace::full(p.ctx(), d), contains_sl2: true, cocharacters: cochars }
    }

    pub fn trivial(p: &HCPair) -> Self {
        EvenSub { name: "1".into(), lie: Subspace::zero(p.ctx(), p.even().dim()), contains_sl2: false, cocharacters: vec![] }
    }

    pub fn sl2(p: &HCPair) -> Self {
        EvenSub {
            name: "SL2".into(),
            lie: Subspace::coordinate(p.ctx(), p.even().dim(), &[E, F, H]),
            contains_sl2: true,
            cocharacters: vec![Cocharacter::Coroot],
        }
    }

    /// The centre Z of GL2.
    pub fn centre(p: &HCPair) -> Self {
        EvenSub {
            name: "Z".into(),
            lie: Subspace::coordinate(p.ctx(), p.even().dim(), &[I]),
            contains_sl2: false,
            cocharacters: vec![Cocharacter::Centre],
        }
    }
}

/// Even subgroup plus odd submodule.
#[derive(Clone, Debug)]
pub struct SubpairSpec {
    pub even_sub: EvenSub,
    pub odd_sub: Subspace,
}

/// Per-condition outcome of the normality criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub even_normal: bool,
    pub odd_invariant: bool,
    pub acts_trivially_on_quotient: bool,
    pub bracket_inside: bool,
}

impl NormalityReport {
    pub fn all(&self) -> bool {
        self.even_normal && self.odd_invariant && self.acts_trivially_on_quotient && self.bracket_inside
    }
}

fn maps_into(op: &Matrix, target: &Subspace) -> bool {
    (0..op.cols()).all(|c| target.contains(&op.col(c)))
}

pub fn normality_report(p: &HCPair, sub: &SubpairSpec) -> Result<NormalityReport, HcError> {
    let even = p.even();
    let m = p.odd();
    if sub.even_sub.lie.ambient_dim() != even.dim() || sub.odd_sub.ambient_dim() != m.dim() {
        return Err(HcError::Malformed("subspace dimensions do not match the pair".into()));
    }
    let lie = &sub.even_sub.lie;
    if sub.even_sub.contains_sl2 && !lie.contains_subspace(&even.sl2_part()) {
        return Err(HcError::Malformed("claims to contain SL2 but its Lie algebra does not".into()));
    }
    let adj = even.adjoint();
    let ideal = (0..even.dim()).all(|a| lie.is_invariant(&even.ad(a)));
    let even_normal = ideal && rep::is_submodule(adj, lie);
    let odd_invariant = rep::is_submodule(m, &sub.odd_sub);
    let mut trivial = lie.basis_vectors().iter().all(|y| maps_into(&p.rho_of(y), &sub.odd_sub));
    if sub.even_sub.contains_sl2 {
        trivial &= (1..=m.max_power()).all(|k| maps_into(m.e(k).unwrap(), &sub.odd_sub) && maps_into(m.f(k).unwrap(), &sub.odd_sub));
    }
    if odd_invariant {
        let q = rep::quotient(m, &sub.odd_sub)?;
        trivial &= q.module.weights().iter().all(|w| sub.even_sub.cocharacters.iter().all(|c| c.pair(w) == 0));
    }
    let odd_basis = sub.odd_sub.basis_vectors();
    let bracket_inside = (0..m.dim()).all(|i| {
        let v = super::unit(p.ctx(), m.dim(), i);
        odd_basis.iter().all(|w| lie.contains(&p.bracket().eval(&v, w)))
    });
    Ok(NormalityReport { even_normal, odd_invariant, acts_trivially_on_quotient: trivial, bracket_inside })
}

/// The normality criterion for a subpair.
pub fn check_normal_subpair(p: &HCPair, sub: &SubpairSpec) -> Result<bool, HcError> {
    Ok(normality_report(p, sub)?.all())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldCtx;
    use crate::hcpair::EvenAlgebra;
    use crate::homsolve::circ_circ_map;
    use crate::rep::{direct_sum, dual, sym_power, GroupKind};

    #[test]
    fn split_pair_kernel_is_everything() {
        let ctx = FieldCtx::rationals();
        let p = crate::hcpair::HCPair::split(EvenAlgebra::sl2(ctx), sym_power(3, GroupKind::SL2, ctx)).unwrap();
        assert_eq!(unipotent_radical_odd(&p).dim(), 4);
        assert_eq!(unipotent_radical_odd_right(&p).dim(), 4);
    }

    #[test]
    fn spo_plus_trivial_has_trivial_radical_line() {
        let ctx = FieldCtx::rationals();
        let v = dual(&sym_power(1, GroupKind::SL2, ctx));
        let odd = direct_sum(&[&v, &sym_power(0, GroupKind::SL2, ctx)]).unwrap();
        let b = circ_circ_map(1, &ctx.one()).unwrap().embed(3, 3, 0, 0);
        let p = crate::hcpair::HCPair::new(EvenAlgebra::sl2(ctx), odd, b).unwrap();
        assert!(p.verify().all());
        let r = unipotent_radical_odd(&p);
        assert_eq!(r, Subspace::coordinate(ctx, 3, &[2]));
        assert_eq!(r, unipotent_radical_odd_right(&p));
        let whole = SubpairSpec { even_sub: EvenSub::whole(&p), odd_sub: Subspace::full(ctx, 3) };
        assert!(check_normal_subpair(&p, &whole).unwrap());
        let top = SubpairSpec { even_sub: EvenSub::sl2(&p), odd_sub: Subspace::coordinate(ctx, 3, &[0]) };
        assert!(!check_normal_subpair(&p, &top).unwrap());
    }
}
