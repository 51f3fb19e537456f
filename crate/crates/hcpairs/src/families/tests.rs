use super::*;
use crate::hcpair::unipotent_radical_odd;
use crate::homsolve::{bracket_search, BracketSpace};

fn fp(p: u64) -> FieldCtx {
    FieldCtx::new(p).unwrap()
}

fn q() -> FieldCtx {
    FieldCtx::rationals()
}

/// Checks that the tensor lies in the searched affine space.
fn in_span(space: &BracketSpace, b: &BracketTensor) -> bool {
    let gens = space.generators();
    if gens.is_empty() {
        return b.is_zero();
    }
    let ctx = b.ctx();
    let vecs: Vec<Vec<Scalar>> = gens[1..].iter().map(|g| g.flat().to_vec()).collect();
    let dirs = Subspace::from_vectors(ctx, b.flat().len(), vecs);
    let diff: Vec<Scalar> = b.flat().iter().zip(gens[0].flat()).map(|(x, y)| x - y).collect();
    // either b is in particular + span, or b is in the linear span through the origin
    dirs.contains(&diff) || dirs.contains(b.flat())
}

fn assert_pair(p: &HCPair) {
    assert_pair_with_radical(p, 0);
}

fn assert_pair_with_radical(p: &HCPair, radical: usize) {
    let v = p.verify();
    assert!(v.all(), "failed {:?}", v.failures());
    assert_eq!(unipotent_radical_odd(p).dim(), radical);
    let space = bracket_search(p.even(), p.odd(), &[]).unwrap();
    assert!(in_span(&space, p.bracket()));
}

#[test]
fn spo21_is_a_pair() {
    for ctx in [q(), fp(3), fp(7)] {
        let p = spo21(ctx).unwrap();
        assert_pair(&p);
        assert_eq!(bracket_image(&p), BracketImage::Sl2);
    }
}

#[test]
fn h02_bracket() {
    let ctx = fp(5);
    let p = h_0_2(ctx, &ctx.int(2)).unwrap();
    assert_pair(&p);
    assert_eq!(bracket_image(&p), BracketImage::Sl2);
    assert!(h_0_2(ctx, &ctx.zero()).is_err());
}

#[test]
fn h3s1_family() {
    let ctx = fp(3);
    for s in 1..=3 {
        let p = h3s1(s, ctx, &ctx.one()).unwrap();
        assert_eq!(p.odd().dim(), 2 * s + 2);
        // differences of the copies of w3 and w-3 pair to zero with everything
        assert_pair_with_radical(&p, 2 * (s - 1));
        let layers = rep::radical_layer_factors(p.odd()).unwrap();
        assert_eq!(layers, vec![vec![Weight::Sl2(1)], vec![Weight::Sl2(3); s]]);
    }
    assert!(matches!(h3s1(1, fp(5), &fp(5).one()), Err(FamilyError::Characteristic(_))));
    assert!(h3s1(0, ctx, &ctx.one()).is_err());
}

#[test]
fn h3s1_single_copy_is_v3() {
    let ctx = fp(3);
    let p = h3s1(1, ctx, &ctx.one()).unwrap();
    let v3 = rep::dual(&rep::sym_power(3, GroupKind::SL2, ctx));
    for k in 1..=v3.max_power() {
        assert_eq!(p.odd().e(k), v3.e(k));
        assert_eq!(p.odd().f(k), v3.f(k));
    }
    assert_eq!(p.bracket(), &circ_circ_map(3, &ctx.one()).unwrap());
}

#[test]
fn q2_parameters() {
    let ctx = q();
    for (a, c) in [(1, 0), (0, 1), (2, -3)] {
        let p = q2(&ctx.int(a), &ctx.int(c), ctx).unwrap();
        assert_pair(&p);
        assert_eq!(bracket_image(&p), BracketImage::Gl2);
    }
    assert!(q2(&ctx.zero(), &ctx.zero(), ctx).is_err());
}

#[test]
fn k_family_pairs() {
    for (ctx, t) in [(q(), 0), (q(), 2), (fp(5), -3)] {
        let p = k_family(t, &ctx.int(3), ctx).unwrap();
        assert_pair(&p);
        assert_eq!(bracket_image(&p), BracketImage::Sl2);
    }
    assert!(k_family(1, &q().zero(), q()).is_err());
}

#[test]
fn s_family_needs_p_dividing_2t() {
    let ctx = fp(5);
    for t in [0, 5, -5] {
        let p = s_family(t, ctx).unwrap();
        assert_eq!(p.odd().dim(), 5);
        assert_pair(&p);
        assert_eq!(bracket_image(&p), BracketImage::Gl2);
    }
    assert!(matches!(s_family(1, ctx), Err(FamilyError::Characteristic(_))));
    assert!(matches!(s_family(0, q()), Err(FamilyError::Characteristic(_))));
}

#[test]
fn l_family_fails_the_cubic_identity() {
    let ctx = fp(3);
    let p = l_family(3, ctx).unwrap();
    assert_eq!(p.odd().dim(), 7);
    let v = p.verify();
    assert!(v.symmetric && v.equivariant);
    assert!(!v.cubic);
    assert!(matches!(l_family(1, ctx), Err(FamilyError::Characteristic(_))));
}

#[test]
fn h_family_unique_d() {
    for (ctx, t) in [(q(), 0), (q(), 3), (fp(7), 2)] {
        let a = ctx.int(2);
        let p = h_family(t, &a, ctx).unwrap();
        assert_pair(&p);
        let k = ctx.int(2 * t - 1);
        let good_d = -&(&a * &(&ctx.int(2) * &k).inv().unwrap());
        let bad = h_family_with_d(t, &a, &(&good_d + &ctx.one()), ctx).unwrap();
        assert!(!bad.verify().cubic);
    }
    // k = 2t - 1 = 3 vanishes mod 3
    assert!(matches!(h_family(2, &fp(3).one(), fp(3)), Err(FamilyError::Characteristic(_))));
}

#[test]
fn pair_primes() {
    let ctx = fp(3);
    for r in 1..=2 {
        let p = pair2prime(3, r, ctx).unwrap();
        assert_eq!(p.odd().dim(), 5 + 2 * r);
        assert_pair(&p);
        let p = pair3prime(3, r, ctx).unwrap();
        assert_eq!(p.odd().dim(), 4 + 2 * r);
        assert_pair(&p);
    }
    assert!(pair2prime(3, 0, ctx).is_err());
    assert!(pair3prime(1, 1, ctx).is_err());
}

#[test]
fn z_family_blocks() {
    let ctx = fp(3);
    let line = rep::det_line(3, ctx);
    let p = z_family(&[(6, line.clone()), (0, rep::det_line(0, ctx))], ctx).unwrap();
    assert_pair(&p);
    assert_eq!(bracket_image(&p), BracketImage::Centre);
    assert!(z_family(&[], ctx).is_err());
    assert!(z_family(&[(5, line.clone())], ctx).is_err());
    assert!(z_family(&[(6, line.clone())], q()).is_err());
}

#[test]
fn assemble_core_and_central() {
    let ctx = fp(5);
    let core = q2(&ctx.one(), &ctx.zero(), ctx).unwrap();
    let z = vec![(10, rep::det_line(5, ctx))];
    let p = assemble_graded(Some(&core), &z, ctx).unwrap();
    assert_pair(&p);
    let classes = charge_classes(&p).unwrap();
    assert_eq!(classes.get(&0), Some(&ChargeClass::Gl2));
    assert_eq!(classes.get(&10), Some(&ChargeClass::Centre));
    // two non-central pairs of charges
    let s = s_family(5, ctx).unwrap();
    assert!(matches!(assemble_graded(Some(&HCPair::direct_sum(&[&core, &s]).unwrap()), &[], ctx), Err(FamilyError::Clause(_))));
    // a central block that is not trivial for gl2
    let moving = rep::det_twist(&rep::sym_power(1, GroupKind::GL2, ctx), 2).unwrap();
    let charge = moving.weight(0).charge();
    assert!(assemble_graded(Some(&core), &[(charge, moving)], ctx).is_err());
}

#[test]
fn family_tags_round_trip() {
    for f in FamilyId::ALL {
        assert_eq!(f.tag().parse::<FamilyId>().unwrap(), f);
    }
    assert_eq!(FamilyId::KT.arity(), Some(2));
    assert_eq!(FamilyId::ZFamily.arity(), None);
}
