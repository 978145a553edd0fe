//! Finite-difference oracle for the derivation rules: the right-regular
//! action `d/dt F(g exp(tX))` computed numerically on explicit group
//! elements must match the symbolic engine.

use casimir_core::lie::{BasisIndex, GMat};
use casimir_core::ring::Poly;
use casimir_core::siegel::expr::NumPoint;
use casimir_core::siegel::{siegel_vars, GroupEngine, SiegelExpr};
use num_complex::Complex64 as C;

type M = Vec<Vec<f64>>;

fn mm(a: &M, b: &M) -> M {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn expm(x: &M, t: f64) -> M {
    let n = x.len();
    let mut out: M = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    let mut term = out.clone();
    for k in 1..12 {
        term = mm(&term, x);
        for r in term.iter_mut() {
            for v in r.iter_mut() {
                *v *= t / k as f64;
            }
        }
        for i in 0..n {
            for j in 0..n {
                out[i][j] += term[i][j];
            }
        }
    }
    out
}

/// Real and imaginary parts of a realized basis letter.
fn split(g: &GMat) -> (M, M) {
    let n = g.n;
    let re = (0..n).map(|i| (0..n).map(|j| g.get(i, j).to_c64().0).collect()).collect();
    let im = (0..n).map(|i| (0..n).map(|j| g.get(i, j).to_c64().1).collect()).collect();
    (re, im)
}

struct Coords {
    y: Vec<Vec<f64>>,
    x: Vec<Vec<f64>>,
    j: Vec<Vec<C>>,
    jb: Vec<Vec<C>>,
}

fn cinv(a: &[Vec<C>]) -> Vec<Vec<C>> {
    if a.len() == 1 {
        return vec![vec![C::new(1.0, 0.0) / a[0][0]]];
    }
    let d = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    vec![vec![a[1][1] / d, -a[0][1] / d], vec![-a[1][0] / d, a[0][0] / d]]
}

fn coords(g: &M, m: usize) -> Coords {
    let blk = |r: usize, c: usize| -> Vec<Vec<C>> {
        (0..m).map(|i| (0..m).map(|j| C::new(g[r * m + i][c * m + j], 0.0)).collect()).collect()
    };
    let (a, b, c, d) = (blk(0, 0), blk(0, 1), blk(1, 0), blk(1, 1));
    let i = C::new(0.0, 1.0);
    let comb = |p: &Vec<Vec<C>>, q: &Vec<Vec<C>>, s: C| -> Vec<Vec<C>> {
        (0..m).map(|r| (0..m).map(|k| p[r][k] * s + q[r][k]).collect()).collect()
    };
    let num = comb(&a, &b, i);
    let jm = comb(&c, &d, i);
    let jb = comb(&c, &d, -i);
    let inv = cinv(&jm);
    let z: Vec<Vec<C>> = (0..m).map(|r| (0..m).map(|k| (0..m).map(|l| num[r][l] * inv[l][k]).sum()).collect()).collect();
    Coords {
        y: z.iter().map(|r| r.iter().map(|v| v.im).collect()).collect(),
        x: z.iter().map(|r| r.iter().map(|v| v.re).collect()).collect(),
        j: jm,
        jb,
    }
}

fn eval(e: &SiegelExpr, eng: &GroupEngine, g: &M, kappa: f64, s: (f64, f64), tau: &[Vec<f64>]) -> C {
    let m = eng.m();
    let co = coords(g, m);
    let mut values: Vec<(&'static str, (f64, f64))> = vec![("s1", (s.0, 0.0)), ("s2", (s.1, 0.0)), ("kappa", (kappa, 0.0))];
    let yn = [["y11", "y12"], ["y12", "y22"]];
    let tn = [["tau11", "tau12"], ["tau12", "tau22"]];
    let jn = [["J11", "J12"], ["J21", "J22"]];
    let jbn = [["Jb11", "Jb12"], ["Jb21", "Jb22"]];
    for p in 0..m {
        for q in p..m {
            values.push((yn[p][q], (co.y[p][q], 0.0)));
            values.push((tn[p][q], (tau[p][q], 0.0)));
        }
        for q in 0..m {
            values.push((jn[p][q], (co.j[p][q].re, co.j[p][q].im)));
            values.push((jbn[p][q], (co.jb[p][q].re, co.jb[p][q].im)));
        }
    }
    let tr_tau_x: f64 = (0..m).map(|p| (0..m).map(|q| tau[p][q] * co.x[q][p]).sum::<f64>()).sum();
    let v = e.eval_c64(&eng.frame, &NumPoint { values, tr_tau_x });
    let det_j = if m == 1 { co.j[0][0] } else { co.j[0][0] * co.j[1][1] - co.j[0][1] * co.j[1][0] };
    C::new(v.0, v.1) * det_j.powf(-kappa)
}

fn numeric_derivative(
    e: &SiegelExpr,
    eng: &GroupEngine,
    g: &M,
    x: &GMat,
    kappa: f64,
    s: (f64, f64),
    tau: &[Vec<f64>],
) -> C {
    let (re, im) = split(x);
    let h = 1e-4;
    let d = |xm: &M| -> C {
        let plus = eval(e, eng, &mm(g, &expm(xm, h)), kappa, s, tau);
        let minus = eval(e, eng, &mm(g, &expm(xm, -h)), kappa, s, tau);
        let plus2 = eval(e, eng, &mm(g, &expm(xm, 2.0 * h)), kappa, s, tau);
        let minus2 = eval(e, eng, &mm(g, &expm(xm, -2.0 * h)), kappa, s, tau);
        (plus * 8.0 - minus * 8.0 - plus2 + minus2) / (12.0 * h)
    };
    d(&re) + d(&im) * C::new(0.0, 1.0)
}

/// A fixed group element `n(x) a(T) k(θ)` of genus two.
fn sample_g2() -> M {
    let t = [[1.1, 0.0], [0.3, 0.8]];
    let tit = {
        // (T')^{-1}
        let det = t[0][0] * t[1][1];
        [[t[1][1] / det, -t[1][0] / det], [0.0, t[0][0] / det]]
    };
    let x = [[0.2, -0.1], [-0.1, 0.35]];
    let mut p = vec![vec![0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            p[i][j] = t[i][j];
            p[2 + i][2 + j] = tit[i][j];
            p[i][2 + j] = (0..2).map(|k| x[i][k] * tit[k][j]).sum();
        }
    }
    // k from the unitary diag(e^{ia}, e^{ib}) conjugated by a rotation
    let (a, b, c) = (0.4f64, -0.7f64, 0.25f64);
    let rot = [[c.cos(), -c.sin()], [c.sin(), c.cos()]];
    let ure = |i: usize, j: usize| -> f64 { (0..2).map(|k| rot[i][k] * [a.cos(), b.cos()][k] * rot[j][k]).sum() };
    let uim = |i: usize, j: usize| -> f64 { (0..2).map(|k| rot[i][k] * [a.sin(), b.sin()][k] * rot[j][k]).sum() };
    let mut k = vec![vec![0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            k[i][j] = ure(i, j);
            k[2 + i][2 + j] = ure(i, j);
            k[i][2 + j] = uim(i, j);
            k[2 + i][j] = -uim(i, j);
        }
    }
    mm(&p, &k)
}

#[test]
fn engine_matches_finite_differences_genus_two() {
    let vars = siegel_vars();
    let kappa = 3.0;
    let eng = GroupEngine::new(2, Poly::int(&vars, 3)).unwrap();
    let g = sample_g2();
    let tau = vec![vec![0.9, 0.2], vec![0.2, 0.6]];
    let s = (0.37, -0.21);
    let seed = eng.seed();
    // also a second-level function carrying J and J̄ entries
    let second = eng.apply(BasisIndex::eplus(1, 2), &seed).unwrap();
    let third = eng.apply(BasisIndex::b(2, 1), &eng.apply(BasisIndex::eminus(1, 1), &seed).unwrap()).unwrap();
    for f in [&seed, &second, &third] {
        for pos in 0..eng.lie.dim() {
            let letter = eng.lie.letter(pos);
            let sym = eng.apply_pos(pos, f);
            let a = eval(&sym, &eng, &g, kappa, s, &tau);
            let b = numeric_derivative(f, &eng, &g, eng.lie.matrix(pos), kappa, s, &tau);
            let scale = 1e-12 + a.norm().max(b.norm());
            assert!((a - b).norm() / scale < 1e-6 || (a - b).norm() < 1e-12, "{letter}: symbolic {a} vs numeric {b}");
        }
    }
}

#[test]
fn engine_matches_finite_differences_genus_one() {
    let vars = siegel_vars();
    let eng = GroupEngine::new(1, Poly::int(&vars, 2)).unwrap();
    let g = {
        let (y, x, th) = (0.7f64, 0.3f64, 0.9f64);
        let p = vec![vec![y.sqrt(), x / y.sqrt()], vec![0.0, 1.0 / y.sqrt()]];
        let k = vec![vec![th.cos(), th.sin()], vec![-th.sin(), th.cos()]];
        mm(&p, &k)
    };
    let tau = vec![vec![1.3]];
    let s = (0.0, 0.4);
    let seed = eng.seed();
    let second = eng.apply(BasisIndex::eplus(1, 1), &seed).unwrap();
    for f in [&seed, &second] {
        for pos in 0..eng.lie.dim() {
            let sym = eng.apply_pos(pos, f);
            let a = eval(&sym, &eng, &g, 2.0, s, &tau);
            let b = numeric_derivative(f, &eng, &g, eng.lie.matrix(pos), 2.0, s, &tau);
            let scale = 1e-12 + a.norm().max(b.norm());
            assert!((a - b).norm() / scale < 1e-6 || (a - b).norm() < 1e-12, "{}: {a} vs {b}", eng.lie.letter(pos));
        }
    }
}
