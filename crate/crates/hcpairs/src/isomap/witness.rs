use std::collections::BTreeMap;

use super::{is_gl2, verify_hc_morphism, EvenAutomorphism, HCMorphism, IsoError};
use crate::exactla::{FieldCtx, Matrix, Scalar};
use crate::families;
use crate::hcpair::{HCPair, I};
use crate::rep;

/// id, tau, Ad(w), tau Ad(w), and the same composed with sigma on GL2.
pub fn standard_candidates(p: &HCPair) -> Vec<EvenAutomorphism> {
    let ctx = p.ctx();
    let mut out = Vec::new();
    let sigmas: &[bool] = if is_gl2(p.even().kind()) { &[false, true] } else { &[false] };
    for &s in sigmas {
        for base in [EvenAutomorphism::identity(ctx), EvenAutomorphism::weyl(ctx)] {
            for tau in [false, true] {
                out.push(base.clone().with_tau(tau).with_det_twist(s));
            }
        }
    }
    out
}

/// Value r with lhs * r = rhs entrywise; Err(()) when no nonzero r exists, Ok(None) when both vanish.
fn ratio(lhs: &[Scalar], rhs: &[Scalar]) -> Result<Option<Scalar>, ()> {
    let mut r: Option<Scalar> = None;
    for (l, x) in lhs.iter().zip(rhs) {
        match (l.is_zero(), x.is_zero()) {
            (true, true) => {}
            (true, false) | (false, true) => return Err(()),
            (false, false) => {
                let q = x * &l.inv().expect("nonzero");
                if r.as_ref().is_some_and(|r| *r != q) {
                    return Err(());
                }
                r = Some(q);
            }
        }
    }
    Ok(r)
}

fn try_candidate(src: &HCPair, dst: &HCPair, blocks: &[Vec<usize>], f: &EvenAutomorphism) -> Result<Option<HCMorphism>, IsoError> {
    let ctx = src.ctx();
    let (n, n2) = (src.odd().dim(), dst.odd().dim());
    let tw = f.twist(dst.odd())?;
    let d = f.differential(src.even())?;
    let mut pieces = Vec::new();
    for b in blocks {
        let sub = src.odd().coordinate_submodule(b);
        let homs = rep::equivariant_maps(&sub, &tw)?;
        if homs.len() != 1 {
            return Ok(None);
        }
        let mut u = Matrix::zeros(ctx, n2, n);
        for (c, &col) in b.iter().enumerate() {
            for r in 0..n2 {
                u[(r, col)] = homs[0][(r, c)].clone();
            }
        }
        pieces.push(u);
    }
    // c_B c_B' = r for each pair of blocks with a nonzero bracket
    let mut eqs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
    for (x, bx) in blocks.iter().enumerate() {
        for (y, by) in blocks.iter().enumerate().skip(x) {
            let mut r: Option<Scalar> = None;
            for &i in bx {
                for &j in by {
                    let lhs = dst.bracket().eval(&pieces[x].col(i), &pieces[y].col(j));
                    let rhs = d.mul_vec(src.bracket().pair(i, j));
                    match ratio(&lhs, &rhs) {
                        Err(()) => return Ok(None),
                        Ok(None) => {}
                        Ok(Some(q)) => {
                            if r.as_ref().is_some_and(|r| *r != q) {
                                return Ok(None);
                            }
                            r = Some(q);
                        }
                    }
                }
            }
            if let Some(r) = r {
                eqs.insert((x, y), r);
            }
        }
    }
    let s = eqs.iter().find(|((x, y), _)| x == y).map(|(_, r)| r.clone()).unwrap_or_else(|| ctx.one());
    let sinv = s.inv().expect("nonzero ratio");
    let mut c: Vec<Option<Scalar>> = vec![None; blocks.len()];
    // seed each component at a block with a diagonal equation when there is one
    let mut starts: Vec<usize> = (0..blocks.len()).collect();
    starts.sort_by_key(|b| !eqs.contains_key(&(*b, *b)));
    for start in starts {
        if c[start].is_some() {
            continue;
        }
        c[start] = Some(match eqs.get(&(start, start)) {
            Some(r) => match (r * &sinv).sqrt() {
                Some(v) => v,
                None => return Ok(None),
            },
            None => ctx.one(),
        });
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let cx = c[x].clone().expect("assigned");
            for (&(a, b), r) in &eqs {
                let other = if a == x { b } else if b == x { a } else { continue };
                if c[other].is_none() {
                    c[other] = Some(&(r * &sinv) * &cx.inv().expect("nonzero"));
                    stack.push(other);
                }
            }
        }
    }
    let c: Vec<Scalar> = c.into_iter().map(|v| v.expect("assigned")).collect();
    if eqs.iter().any(|(&(a, b), r)| &(&c[a] * &c[b]) * &s != *r) {
        return Ok(None);
    }
    let mut u0 = Matrix::zeros(ctx, n2, n);
    for (p, ci) in pieces.iter().zip(&c) {
        u0 = u0.add(&p.scale(ci));
    }
    if !u0.is_invertible() {
        return Ok(None);
    }
    let m = match s.sqrt() {
        Some(r) => HCMorphism { even: f.clone(), odd: u0.scale(&r), odd_scale_sq: None },
        None => HCMorphism { even: f.clone(), odd: u0, odd_scale_sq: Some(s) },
    };
    Ok(verify_hc_morphism(src, dst, &m)?.then_some(m))
}

/// Searches for an isomorphism src -> dst that rescales each listed summand of the odd part
/// (the blocks must be coordinate submodules of src with one-dimensional twisted Hom spaces).
/// Prefers witnesses that need no square root.
pub fn find_witness(src: &HCPair, dst: &HCPair, blocks: &[Vec<usize>]) -> Result<Option<HCMorphism>, IsoError> {
    find_witness_among(src, dst, blocks, &standard_candidates(src))
}

/// find_witness restricted to the given even automorphisms, tried in order.
pub fn find_witness_among(
    src: &HCPair,
    dst: &HCPair,
    blocks: &[Vec<usize>],
    candidates: &[EvenAutomorphism],
) -> Result<Option<HCMorphism>, IsoError> {
    if src.odd().dim() != dst.odd().dim() || src.even().kind() != dst.even().kind() {
        return Ok(None);
    }
    let mut fallback = None;
    for f in candidates {
        if let Some(m) = try_candidate(src, dst, blocks, f)? {
            if m.odd_scale_sq.is_none() {
                return Ok(Some(m));
            }
            fallback.get_or_insert(m);
        }
    }
    Ok(fallback)
}

fn need(w: Option<HCMorphism>, what: &str) -> Result<HCMorphism, IsoError> {
    w.ok_or_else(|| IsoError::NoWitness(what.into()))
}

/// Q(2; a, c) = Q(2; a', c') iff a = alpha a' and c = alpha^-1 c' for some alpha != 0.
pub fn q2_iso_decide(
    a: &Scalar,
    c: &Scalar,
    a2: &Scalar,
    c2: &Scalar,
    ctx: FieldCtx,
) -> Result<Option<(Scalar, HCMorphism)>, IsoError> {
    let src = families::q2(a, c, ctx)?;
    let dst = families::q2(a2, c2, ctx)?;
    let alpha = if !a2.is_zero() {
        a * &a2.inv().expect("nonzero")
    } else if a.is_zero() && !c.is_zero() {
        c2 * &c.inv().expect("nonzero")
    } else {
        return Ok(None);
    };
    if alpha.is_zero() || &alpha * c != *c2 {
        return Ok(None);
    }
    let w = find_witness(&src, &dst, &[vec![I], vec![0, 1, 2]])?;
    Ok(Some((alpha, need(w, "q2 rescaling")?)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PmKind {
    K,
    S,
    L,
}

impl std::str::FromStr for PmKind {
    type Err = IsoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "K" => Ok(PmKind::K),
            "S" => Ok(PmKind::S),
            "L" => Ok(PmKind::L),
            _ => Err(IsoError::Unsupported(format!("unknown family {s}, expected K, S or L"))),
        }
    }
}

fn pm_pair(kind: PmKind, t: i64, ctx: FieldCtx) -> Result<(HCPair, Vec<Vec<usize>>), IsoError> {
    Ok(match kind {
        PmKind::K => (families::k_family(t, &ctx.one(), ctx)?, vec![vec![0], vec![1, 2, 3]]),
        PmKind::S => (families::s_family(t, ctx)?, vec![vec![0], vec![1, 2, 3], vec![4]]),
        PmKind::L => (families::l_family(t, ctx)?, vec![vec![0], vec![1, 2, 3], vec![4, 5, 6]]),
    })
}

/// The family member at t is isomorphic to the one at t' iff t = +-t'; a witness accompanies
/// every positive answer.
pub fn pm_iso_decide(kind: PmKind, t: i64, t2: i64, ctx: FieldCtx) -> Result<Option<HCMorphism>, IsoError> {
    let (src, blocks) = pm_pair(kind, t, ctx)?;
    let (dst, _) = pm_pair(kind, t2, ctx)?;
    if t != t2 && t != -t2 {
        return Ok(None);
    }
    let w = find_witness(&src, &dst, &blocks)?;
    // isomorphic summands make the per-block Hom spaces larger than one
    let w = if w.is_none() && t == t2 { Some(HCMorphism::identity(&src)) } else { w };
    Ok(Some(need(w, "the graph automorphism branch")?))
}

/// H(t) = H(t') iff t = t' or t + t' = 1.
pub fn h_iso_decide(t: i64, t2: i64, a: &Scalar, ctx: FieldCtx) -> Result<Option<HCMorphism>, IsoError> {
    let src = families::h_family(t, a, ctx)?;
    let dst = families::h_family(t2, a, ctx)?;
    if t != t2 && t + t2 != 1 {
        return Ok(None);
    }
    let blocks = [vec![0, 1], vec![2, 3]];
    // for t + t' = 1 the graph automorphism branch is preferred; f = id with the summands
    // exchanged also works since the odd modules coincide
    let mut order = standard_candidates(&src);
    if t != t2 {
        order.sort_by_key(|f| !f.tau);
    }
    Ok(Some(need(find_witness_among(&src, &dst, &blocks, &order)?, "H(t) to H(1 - t)")?))
}

/// A Lie superalgebra isomorphism src -> dst given by even and odd linear maps.
#[derive(Clone, Debug)]
pub struct LieIso {
    pub src: HCPair,
    pub dst: HCPair,
    pub even: Matrix,
    pub odd: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LieIsoReport {
    pub lie_automorphism: bool,
    pub equivariant: bool,
    pub bracket: bool,
}

impl LieIsoReport {
    pub fn all(&self) -> bool {
        self.lie_automorphism && self.equivariant && self.bracket
    }
}

impl LieIso {
    /// f is a Lie automorphism, u rho(x) = rho'(f x) u, and f([v, w]) = [u v, u w].
    pub fn report(&self) -> LieIsoReport {
        let (f, u) = (&self.even, &self.odd);
        let even = self.src.even();
        let d = even.dim();
        let lie_automorphism = f.is_invertible()
            && (0..d).all(|x| {
                (0..d).all(|y| {
                    let fx = f.col(x);
                    let fy = f.col(y);
                    f.mul_vec(even.bracket_basis(x, y)) == even.bracket(&fx, &fy)
                })
            });
        let rho = self.src.rho();
        let equivariant = (0..d).all(|x| u.dot(&rho[x]) == self.dst.rho_of(&f.col(x)).dot(u));
        let n = self.src.odd().dim();
        let bracket = (0..n).all(|i| {
            (i..n).all(|j| f.mul_vec(self.src.bracket().pair(i, j)) == self.dst.bracket().eval(&u.col(i), &u.col(j)))
        });
        LieIsoReport { lie_automorphism, equivariant, bracket }
    }
}

/// The Lie-level isomorphism h(t) -> h(1) given by x -> x + (t - 1) tr(x) I and the identity on
/// odd coordinates. It is not the differential of a group automorphism.
pub fn lie_iso_to_sl21(t: i64, a: &Scalar, ctx: FieldCtx) -> Result<LieIso, IsoError> {
    let src = families::h_family(t, a, ctx)?;
    let dst = families::h_family(1, a, ctx)?;
    let mut f = Matrix::identity(ctx, 4);
    // tr(I) = 2, so I -> (2(t - 1) + 1) I
    f[(I, I)] = ctx.int(2 * t - 1);
    let odd = Matrix::identity(ctx, 4);
    let iso = LieIso { src, dst, even: f, odd };
    if !iso.report().all() {
        return Err(IsoError::NoWitness(format!("trace twist fails for t = {t}")));
    }
    Ok(iso)
}
