use super::*;
use crate::hcpair::{unipotent_radical_odd, HCPair};
use proptest::prelude::*;

fn gl(m: usize, n: usize) -> SuperModel {
    SuperModel::new_gl(m, n).unwrap()
}

fn sl(m: usize, n: usize) -> SuperModel {
    SuperModel::new_sl(m, n).unwrap()
}

fn q(n: usize) -> SuperModel {
    SuperModel::new_q(n).unwrap()
}

/// Coordinates in Z^N / Z omega with the last entry cleared; omega ends in -1.
fn reduce(model: SuperModel, v: &[i64]) -> Vec<i64> {
    match model.omega() {
        Some(w) => {
            let c = v[v.len() - 1];
            v.iter().zip(&w).map(|(x, y)| x + c * y).collect()
        }
        None => v.to_vec(),
    }
}

/// Integer proportionality through 2x2 minors.
fn proportional(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).all(|k| (0..a.len()).all(|l| a[k] * b[l] == a[l] * b[k]))
}

#[test]
fn gl11_roots() {
    let d = roots(gl(1, 1)).unwrap();
    assert_eq!(d.roots.len(), 2);
    assert!(d.roots.iter().all(|r| r.is_odd() && !r.is_even() && r.odd_dim == 1));
    assert_eq!(d.g1t_dim, 0);
}

#[test]
fn gl_even_and_odd_disjoint() {
    let d = roots(gl(3, 2)).unwrap();
    assert_eq!(d.roots.len(), 20);
    assert!(d.roots.iter().all(|r| r.is_even() != r.is_odd()));
    assert_eq!(d.even_roots().count(), 6 + 2);
}

#[test]
fn q_roots_are_even_and_odd() {
    let d = roots(q(3)).unwrap();
    assert_eq!(d.roots.len(), 6);
    assert!(d.roots.iter().all(|r| r.is_even() && r.is_odd()));
    assert_eq!(d.g1t_dim, 3);
}

#[test]
fn sl11_fixed_odd_part() {
    for m in 1..=4 {
        for n in 1..=4 {
            let d = roots(sl(m, n)).unwrap();
            assert_eq!(d.g1t_dim > 0, m == 1 && n == 1, "SL({m}|{n})");
        }
    }
    let d = roots(sl(1, 1)).unwrap();
    assert!(d.roots.is_empty());
    let r = centralizer_shape(sl(1, 1), &[1, -1]).unwrap();
    assert_eq!(r.kind, CentralizerKind::Whole);
    assert_eq!(r.odd_dim(), 2);
}

#[test]
fn gl_shapes() {
    let model = gl(2, 3);
    let r = centralizer_shape(model, &epsilon_diff(5, 0, 1)).unwrap();
    assert_eq!((r.shape, r.parity, r.kind), (GShape::Gl2xT, ParityClass::EvenOnly, CentralizerKind::PurelyEven));
    assert_eq!(r.odd_dim(), 0);
    let r = centralizer_shape(model, &epsilon_diff(5, 0, 3)).unwrap();
    assert_eq!((r.shape, r.parity, r.kind), (GShape::T, ParityClass::OddOnly, CentralizerKind::Gl11xT));
    assert_eq!(r.odd_roots.iter().map(|b| b.dim).collect::<Vec<_>>(), vec![1, 1]);
}

#[test]
fn sl22_anomaly() {
    let r = centralizer_shape(sl(2, 2), &epsilon_diff(4, 0, 2)).unwrap();
    assert_eq!(r.kind, CentralizerKind::Gl11SemiSl11);
    let dims: Vec<usize> = r.odd_roots.iter().map(|b| b.dim).collect();
    assert_eq!(dims, vec![2, 2]);
    // e4 - e2 is the same character
    let d = roots(sl(2, 2)).unwrap();
    assert!(d.same_weight(&epsilon_diff(4, 0, 2), &epsilon_diff(4, 3, 1)));
    assert_eq!(d.odd_dim(&epsilon_diff(4, 3, 1)), 2);
}

#[test]
fn sl22_unique_among_small() {
    for m in 1..=4 {
        for n in 1..=4 {
            let d = roots(sl(m, n)).unwrap();
            let big = d.odd_roots().any(|r| r.odd_dim > 1);
            assert_eq!(big, (m, n) == (2, 2), "SL({m}|{n})");
        }
    }
}

#[test]
fn q_shapes_and_pair() {
    for n in 2..=4 {
        let r = centralizer_shape(q(n), &epsilon_diff(n, 0, 1)).unwrap();
        assert_eq!((r.shape, r.parity, r.kind), (GShape::Gl2xT, ParityClass::Mixed, CentralizerKind::Q2xSuperTorus));
        assert_eq!(r.odd_dim(), 4 + (n - 2));
        let ctx = FieldCtx::rationals();
        let p = q_centralizer_pair(n, &epsilon_diff(n, 0, 1), ctx).unwrap();
        assert!(p.verify().all(), "{:?}", p.verify().failures());
        assert_eq!(p.odd().dim(), r.odd_dim());
        assert_eq!(unipotent_radical_odd(&p).dim(), 0);
    }
    assert!(q_centralizer_pair(1, &[0], FieldCtx::rationals()).is_err());
}

#[test]
fn q2_pair_is_q2_half() {
    let ctx = FieldCtx::new(5).unwrap();
    let p = q_centralizer_pair(2, &[1, -1], ctx).unwrap();
    let half = ctx.int(2).inv().unwrap();
    assert_eq!(p, crate::families::q2(&ctx.one(), &half, ctx).unwrap());
}

#[test]
fn non_roots_rejected() {
    assert!(matches!(centralizer_shape(gl(2, 2), &[1, 1, 0, 0]), Err(CentralizerError::NotARoot(_))));
    assert!(matches!(centralizer_shape(gl(2, 2), &[1, -1]), Err(CentralizerError::NotARoot(_))));
    assert!(matches!(centralizer_shape(gl(2, 2), &[0, 0, 0, 0]), Err(CentralizerError::NotARoot(_))));
    assert!("gl(0|2)".parse::<SuperModel>().is_err());
    assert_eq!("SL(2|3)".parse::<SuperModel>().unwrap(), sl(2, 3));
    assert_eq!("q(4)".parse::<SuperModel>().unwrap(), q(4));
}

#[test]
fn rank_one_q2_quotient() {
    let ctx = FieldCtx::rationals();
    let p = crate::families::q2(&ctx.int(2), &ctx.int(3), ctx).unwrap();
    let r = rank_one_report(&p, Some(&TorusData::standard(&p))).unwrap();
    assert_eq!(r.radical, RadicalKind::KPrime);
    assert_eq!(r.k_prime_dim, 0);
    assert_eq!(r.quotient, "H(0+2)/mu2");
    assert!(r.radical_normal);
    assert!(matches!(rank_one_report(&p, None), Err(CentralizerError::MissingTorusData)));
}

#[test]
fn rank_one_z_family_is_solvable() {
    let ctx = FieldCtx::new(3).unwrap();
    let p = crate::families::z_family(&[(0, rep_line(ctx))], ctx).unwrap();
    let r = rank_one_report(&p, Some(&TorusData::standard(&p))).unwrap();
    assert_eq!(r.radical, RadicalKind::WholeOdd);
    assert_eq!(r.radical_odd_dim, 2);
    assert!(r.radical_normal);
    assert_eq!(r.quotient, "PGL2");
}

fn rep_line(ctx: FieldCtx) -> crate::rep::WeightModule {
    crate::rep::det_line(0, ctx)
}

#[test]
fn rank_one_weyl_pair() {
    let ctx = FieldCtx::rationals();
    // zero bracket: the Weyl pair is purely even
    let split = HCPair::split(crate::hcpair::EvenAlgebra::gl2(ctx), rep_line(ctx)).unwrap();
    let r = rank_one_report(&split, Some(&TorusData::standard(&split))).unwrap();
    assert_eq!((r.g1t_dim, r.k_dim, r.weyl_odd_dim), (1, 1, 0));
    let p = q_centralizer_pair(3, &[1, -1, 0], ctx).unwrap();
    let r = rank_one_report(&p, Some(&TorusData::standard(&p))).unwrap();
    assert_eq!((r.g1t_dim, r.k_dim, r.weyl_odd_dim), (3, 0, 3));
    // [d3, d3] lands in Lie(T'), so d3 lies in K'
    assert_eq!(r.k_prime_dim, 1);
    assert_eq!(r.quotient, "H(0+2)/mu2");
}

#[test]
fn rank_one_sl2_quotients() {
    let f3 = FieldCtx::new(3).unwrap();
    for (p, tag) in [
        (crate::families::spo21(f3).unwrap(), "SpO(2|1)"),
        (crate::families::h_0_2(f3, &f3.one()).unwrap(), "H(0+2)"),
        (crate::families::h3s1(1, f3, &f3.one()).unwrap(), "H(3^1/1)"),
        // the copy differences of w3, w-3 lie in K', so two copies collapse to one
        (crate::families::h3s1(2, f3, &f3.one()).unwrap(), "H(3^1/1)"),
    ] {
        let r = rank_one_report(&p, Some(&TorusData::standard(&p))).unwrap();
        assert_eq!(r.quotient, tag);
        assert_eq!(r.radical, RadicalKind::KPrime);
    }
}


fn models_up_to(total: usize) -> Vec<SuperModel> {
    let mut out = Vec::new();
    for m in 1..total {
        for n in 1..=total - m {
            out.push(gl(m, n));
            out.push(sl(m, n));
        }
    }
    out.extend((1..=total).map(q));
    out
}

#[test]
fn rank_matches_gamma_count() {
    for model in models_up_to(8) {
        let d = roots(model).unwrap();
        for root in &d.roots {
            let r = centralizer_shape(model, &root.coords).unwrap();
            let a = reduce(model, &root.coords);
            let count = d.even_roots().filter(|g| proportional(&a, &reduce(model, &g.coords))).count();
            assert!(count == 0 || count == 2, "{model} {:?}", root.coords);
            assert_eq!(r.semisimple_rank, count / 2);
            assert!(r.semisimple_rank <= 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn same_line_is_integer_proportionality(kind in 0usize..3, m in 1usize..4, n in 1usize..4, i in 0usize..7, j in 0usize..7, k in 0usize..7, l in 0usize..7) {
        let model = match kind { 0 => gl(m, n), 1 => sl(m, n), _ => q(m + n) };
        let amb = model.ambient();
        let (i, j, k, l) = (i % amb, j % amb, k % amb, l % amb);
        prop_assume!(i != j && k != l);
        let d = roots(model).unwrap();
        let (a, b) = (epsilon_diff(amb, i, j), epsilon_diff(amb, k, l));
        prop_assume!(!d.is_zero_weight(&a) && !d.is_zero_weight(&b));
        prop_assert_eq!(d.same_line(&a, &b), proportional(&reduce(model, &a), &reduce(model, &b)));
        prop_assert_eq!(d.same_line(&a, &b), d.same_line(&b, &a));
    }

    #[test]
    fn odd_dims_sum_to_odd_part(kind in 0usize..3, m in 1usize..5, n in 1usize..5) {
        let model = match kind { 0 => gl(m, n), 1 => sl(m, n), _ => q(m) };
        let d = roots(model).unwrap();
        let total: usize = d.roots.iter().map(|r| r.odd_dim).sum::<usize>() + d.g1t_dim;
        let expect = match model { SuperModel::Q { n } => n * n, _ => 2 * m * n };
        prop_assert_eq!(total, expect);
    }
}
