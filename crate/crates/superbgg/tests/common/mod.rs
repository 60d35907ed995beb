#![allow(dead_code)]
pub mod tensor_oracle;

use superbgg::algebra::*;
use superbgg::modules::*;
use superbgg::scalar::q;

pub fn w(a: &[i64]) -> Weight {
    a.iter().map(|&x| q(x)).collect()
}

pub struct Scenario {
    pub name: &'static str,
    pub g: LieSuperalgebra,
    pub p: ParabolicDecomposition,
    pub op: AdjointOperation,
    pub m: Module,
}

pub fn scenario(name: &'static str, kind: Kind, m: usize, n: usize, levi: &[usize], lambda: &[i64]) -> Scenario {
    let g = if kind == Kind::Gl && m == n { build_gl_unchecked(m, n, q(1)).unwrap() } else { build_algebra(kind, m, n, q(1)).unwrap() };
    let p = build_parabolic(&g, levi).unwrap();
    let op = build_adjoint_operation(&g, 1).unwrap();
    let module = build_irrep(&g, &w(lambda), &op, DEFAULT_MAX_DEPTH).unwrap();
    Scenario { name, g, p, op, m: module }
}

pub fn small_scenarios() -> Vec<Scenario> {
    vec![
        scenario("gl(2|1) Borel natural", Kind::Gl, 2, 1, &[], &[1, 0, 0]),
        scenario("gl(1|2) Cartan natural", Kind::Gl, 1, 2, &[], &[1, 0, 0]),
        scenario("osp(1|2) Borel 1", Kind::Osp, 1, 1, &[], &[1]),
        scenario("osp(1|2) Borel 2", Kind::Osp, 1, 1, &[], &[2]),
        scenario("gl(2|1) even Levi natural", Kind::Gl, 2, 1, &[0], &[1, 0, 0]),
        scenario("osp(3|2) Borel trivial", Kind::Osp, 3, 1, &[], &[0, 0]),
    ]
}
