mod common;
use common::*;
use superbgg::chains::*;
use superbgg::modules::compose;

fn bilinear(rows: &[superbgg::sparse::SVec], x: &superbgg::sparse::SVec, y: &superbgg::sparse::SVec) -> superbgg::scalar::Q {
    let mut s = superbgg::scalar::zero();
    for (i, a) in x {
        for (j, b) in y {
            s += a * b * superbgg::sparse::get(&rows[*i], *j);
        }
    }
    s
}

use superbgg::algebra::{build_algebra, build_parabolic, Kind};
use superbgg::modules::{build_irrep, DEFAULT_MAX_DEPTH};
use superbgg::scalar::{one, q, Q};
use superbgg::sparse::{unit, Acc, SVec};

fn commutator_is_zero(a: &Vec<SVec>, b: &Vec<SVec>, c: &Vec<SVec>, d: &Vec<SVec>) -> bool {
    compose(a, b) == compose(c, d)
}

#[test]
fn dimensions() {
    let s = scenario("", superbgg::algebra::Kind::Gl, 2, 1, &[], &[1, 0, 0]);
    let cx = Complex::build(&s.g, &s.p, &s.m, Side::Nilradical, 3).unwrap();
    assert_eq!(cx.spaces[2].dim(), 15);
    assert_eq!(cx.spaces[0].dim(), 3);
    for k in 0..=3 {
        let (e, o) = cx.nil_sdim();
        assert_eq!(cx.spaces[k].dim() as u128, super_binomial(e, o, k) * 3);
    }
    assert_eq!(super_binomial(2, 6, 3), 104);
    assert_eq!(super_binomial(2, 6, 4), 259);
}

#[test]
fn nilpotency_and_recursion_oracle() {
    for s in small_scenarios() {
        for side in [Side::Nilradical, Side::Opposite] {
            let cx = Complex::build(&s.g, &s.p, &s.m, side, 5).unwrap();
            assert!(is_zero(&cx.boundary[0]));
            for k in 1..5 {
                assert!(is_zero(&compose(&cx.boundary[k], &cx.boundary[k + 1])), "{} {side:?} {k}", s.name);
                assert!(is_zero(&compose(&cx.coboundary[k], &cx.coboundary[k - 1])), "{} {side:?} {k}", s.name);
            }
            for k in 0..5 {
                assert!(cx.is_weight_preserving(&cx.coboundary[k], k, k + 1));
                assert!(cx.is_weight_preserving(&cx.boundary[k + 1], k + 1, k));
                for j in 0..cx.spaces[k].dim() {
                    assert_eq!(cx.coboundary[k][j], cx.coboundary_closed_form(k, j), "{} {side:?} {k}", s.name);
                }
            }
        }
    }
}

#[test]
fn quabla_routes_agree_and_commute_with_levi() {
    for s in small_scenarios() {
        for side in [Side::Nilradical, Side::Opposite] {
            let cx = Complex::build(&s.g, &s.p, &s.m, side, 4).unwrap();
            for k in 0..4 {
                let qd = cx.quabla_direct(k);
                assert_eq!(qd, cx.quabla_casimir(k), "{} {side:?} {k}", s.name);
                for &z in &s.p.levi {
                    let a = cx.action_matrix(&[(z, one())], k);
                    assert!(commutator_is_zero(&qd, &a, &a, &qd));
                }
            }
        }
    }
}

#[test]
fn equivariance_of_the_operators() {
    for s in small_scenarios() {
        let cx = Complex::build(&s.g, &s.p, &s.m, Side::Nilradical, 4).unwrap();
        let mut p_elems = s.p.levi.clone();
        p_elems.extend(&s.p.n);
        for k in 1..4 {
            for &z in &p_elems {
                let ak = cx.action_matrix(&[(z, one())], k);
                let ak1 = cx.action_matrix(&[(z, one())], k - 1);
                // ∂* commutes with the p-action.
                assert!(commutator_is_zero(&cx.boundary[k], &ak, &ak1, &cx.boundary[k]), "{} {k}", s.name);
            }
            for &z in &s.p.levi {
                let ak = cx.action_matrix(&[(z, one())], k);
                let ak1 = cx.action_matrix(&[(z, one())], k + 1);
                assert!(commutator_is_zero(&cx.coboundary[k], &ak, &ak1, &cx.coboundary[k]), "{} {k}", s.name);
            }
        }
    }
}

#[test]
fn p_deviation_of_the_coboundary() {
    for s in small_scenarios() {
        let cx = Complex::build(&s.g, &s.p, &s.m, Side::Nilradical, 4).unwrap();
        let mut p_elems = s.p.levi.clone();
        p_elems.extend(&s.p.n);
        for k in 0..3 {
            for &z in &p_elems {
                for j in 0..cx.spaces[k].dim() {
                    let f = unit(j);
                    let zf = cx.act(&[(z, one())], k, &f);
                    let mut lhs = Acc::new();
                    lhs.add_scaled(&superbgg::modules::apply_mat(&cx.coboundary[k], &zf), &one());
                    lhs.add_scaled(&cx.act(&[(z, one())], k + 1, &cx.coboundary[k][j]), &-one());
                    let mut rhs = Acc::new();
                    for (a, d) in cx.dual.iter().enumerate() {
                        let br: SVec = s.g.bracket_vec(d, &[(z, one())]).into_iter().filter(|(i, _)| s.p.levi.contains(i) || s.p.n.contains(i)).collect();
                        let inner = cx.act(&br, k, &f);
                        rhs.add_scaled(&wedge(&cx, a, k, &inner), &one());
                    }
                    assert_eq!(lhs.finish(), rhs.finish(), "{} k={k} z={}", s.name, s.g.basis[z].label);
                }
            }
        }
    }
}

fn wedge(cx: &Complex, a: usize, k: usize, f: &[(usize, Q)]) -> SVec {
    let mut acc = Acc::new();
    for (j, c) in f {
        let m = &cx.spaces[k].basis[*j];
        let mut w = vec![a];
        w.extend_from_slice(&m.word);
        if let Some((w, s)) = cx.normalize(&w) {
            acc.add(cx.spaces[k + 1].index_of(&Mono { word: w, v: m.v }).unwrap(), &(c * s));
        }
    }
    acc.finish()
}

#[test]
fn pairing_adjointness_and_invariance() {
    for s in small_scenarios() {
        let dual = superbgg::modules::dual_module(&s.m);
        let opp = Complex::build(&s.g, &s.p, &dual, Side::Opposite, 3).unwrap();
        let nil = Complex::build(&s.g, &s.p, &s.m, Side::Nilradical, 3).unwrap();
        let p0 = pairing_matrix(&opp, &nil, 0).unwrap();
        assert!(p0.iter().enumerate().all(|(i, r)| r == &vec![(i, one())]));
        for k in 0..3 {
            let pk = pairing_matrix(&opp, &nil, k).unwrap();
            let dense: Vec<Vec<Q>> = pk.iter().map(|r| superbgg::sparse::to_dense(r, nil.spaces[k].dim())).collect();
            assert_eq!(superbgg::linalg::rank(&dense, nil.spaces[k].dim()), opp.spaces[k].dim(), "{} {k}", s.name);
            for &z in &s.p.levi {
                let pz = s.g.parity(z).bit();
                for qi in 0..opp.spaces[k].dim() {
                    for fj in 0..nil.spaces[k].dim() {
                        let l = bilinear(&pk, &opp.act_basis(z, k, qi), &unit(fj));
                        let r = bilinear(&pk, &unit(qi), &nil.act_basis(z, k, fj)) * -superbgg::scalar::sign(pz * opp.spaces[k].parities[qi].bit());
                        assert_eq!(l, r, "{} k={k}", s.name);
                    }
                }
            }
        }
        for k in 1..3 {
            let pk = pairing_matrix(&opp, &nil, k).unwrap();
            let pk1 = pairing_matrix(&opp, &nil, k - 1).unwrap();
            for qi in 0..opp.spaces[k].dim() {
                for fj in 0..nil.spaces[k - 1].dim() {
                    assert_eq!(bilinear(&pk1, &opp.boundary[k][qi], &unit(fj)), bilinear(&pk, &unit(qi), &nil.coboundary[k - 1][fj]));
                }
            }
            for qi in 0..opp.spaces[k - 1].dim() {
                for fj in 0..nil.spaces[k].dim() {
                    assert_eq!(bilinear(&pk, &opp.coboundary[k - 1][qi], &unit(fj)), bilinear(&pk1, &unit(qi), &nil.boundary[k][fj]));
                }
            }
        }
    }
}

#[test]
fn contravariant_form_adjointness() {
    for s in small_scenarios() {
        for side in [Side::Opposite, Side::Nilradical] {
            let cx = Complex::build(&s.g, &s.p, &s.m, side, 4).unwrap();
            for k in 1..4 {
                let fk = chain_form_matrix(&cx, &s.op, k).unwrap();
                let fk1 = chain_form_matrix(&cx, &s.op, k - 1).unwrap();
                for fi in 0..cx.spaces[k - 1].dim() {
                    for gj in 0..cx.spaces[k].dim() {
                        let l = bilinear(&fk, &cx.coboundary[k - 1][fi], &unit(gj));
                        let r = bilinear(&fk1, &unit(fi), &cx.boundary[k][gj]);
                        assert_eq!(l, -r, "{} {side:?} k={k}", s.name);
                    }
                }
            }
        }
    }
}

#[test]
fn rescaling_the_form_halves_quabla() {
    let g1 = build_algebra(Kind::Gl, 2, 1, q(1)).unwrap();
    let g2 = build_algebra(Kind::Gl, 2, 1, q(2)).unwrap();
    let lam = w(&[1, 0, 0]);
    let m1 = build_irrep(&g1, &lam, &superbgg::algebra::build_adjoint_operation(&g1, 1).unwrap(), DEFAULT_MAX_DEPTH).unwrap();
    let m2 = build_irrep(&g2, &lam, &superbgg::algebra::build_adjoint_operation(&g2, 1).unwrap(), DEFAULT_MAX_DEPTH).unwrap();
    let p1 = build_parabolic(&g1, &[]).unwrap();
    let p2 = build_parabolic(&g2, &[]).unwrap();
    for side in [Side::Nilradical, Side::Opposite] {
        let c1 = Complex::build(&g1, &p1, &m1, side, 4).unwrap();
        let c2 = Complex::build(&g2, &p2, &m2, side, 4).unwrap();
        for k in 0..4 {
            let half: Vec<SVec> = c1.quabla_direct(k).iter().map(|c| c.iter().map(|(i, x)| (*i, x / q(2))).collect()).collect();
            assert_eq!(c2.quabla_direct(k), half);
        }
    }
}
