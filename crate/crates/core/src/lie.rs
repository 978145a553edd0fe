//! Matrix realization of the complexified symplectic Lie algebra in
//! genus `m`, its basis `(E±)_kl`, `B_kl`, brackets, trace form and duals.

use crate::ring::{Gauss, Rat};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("basis index {0} out of range for genus {1}")]
    IndexOutOfRange(String, usize),
    #[error("matrix is not in the span of the basis")]
    ExpansionFailure,
    #[error("genus {0} is not supported")]
    UnsupportedGenus(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Eplus,
    Eminus,
    B,
}

/// Basis element. Indices are 1-based, `(E±)_kl` stored with `k <= l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub kind: Kind,
    pub k: u8,
    pub l: u8,
}

impl BasisIndex {
    pub fn eplus(k: u8, l: u8) -> Self {
        BasisIndex { kind: Kind::Eplus, k: k.min(l), l: k.max(l) }
    }

    pub fn eminus(k: u8, l: u8) -> Self {
        BasisIndex { kind: Kind::Eminus, k: k.min(l), l: k.max(l) }
    }

    pub fn b(k: u8, l: u8) -> Self {
        BasisIndex { kind: Kind::B, k, l }
    }

    pub fn is_cartan(&self) -> bool {
        self.kind == Kind::B && self.k == self.l
    }

    /// Letters belonging to negative root spaces: `p+` and lower `B_kl`.
    pub fn is_negative(&self) -> bool {
        match self.kind {
            Kind::Eplus => true,
            Kind::B => self.k > self.l,
            Kind::Eminus => false,
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.is_negative() && !self.is_cartan()
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Eplus => write!(f, "Ep{}{}", self.k, self.l),
            Kind::Eminus => write!(f, "Em{}{}", self.k, self.l),
            Kind::B => write!(f, "B{}{}", self.k, self.l),
        }
    }
}

/// Dense square matrix of Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMat {
    pub n: usize,
    pub a: Vec<Gauss>,
}

impl GMat {
    pub fn zero(n: usize) -> Self {
        GMat { n, a: vec![Gauss::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GMat::zero(n);
        for i in 0..n {
            m.a[i * n + i] = Gauss::one();
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Gauss {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gauss) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, o: &GMat) -> GMat {
        let n = self.n;
        let mut out = GMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = o.get(k, j);
                    if !y.is_zero() {
                        let v = &out.a[i * n + j] + &(x * y);
                        out.a[i * n + j] = v;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &GMat) -> GMat {
        GMat { n: self.n, a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, o: &GMat) -> GMat {
        GMat { n: self.n, a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect() }
    }

    pub fn scale(&self, c: &Gauss) -> GMat {
        GMat { n: self.n, a: self.a.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> GMat {
        let mut out = GMat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Gauss {
        let mut t = Gauss::zero();
        for i in 0..self.n {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn commutator(&self, o: &GMat) -> GMat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    /// Upper-left, upper-right, lower-left, lower-right m×m blocks.
    pub fn blocks(&self) -> [GMat; 4] {
        let m = self.n / 2;
        let mut out = [GMat::zero(m), GMat::zero(m), GMat::zero(m), GMat::zero(m)];
        for i in 0..self.n {
            for j in 0..self.n {
                let b = (i / m) * 2 + (j / m);
                out[b].set(i % m, j % m, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn from_blocks(p: &GMat, q: &GMat, r: &GMat, s: &GMat) -> GMat {
        let m = p.n;
        let mut out = GMat::zero(2 * m);
        for i in 0..m {
            for j in 0..m {
                out.set(i, j, p.get(i, j).clone());
                out.set(i, j + m, q.get(i, j).clone());
                out.set(i + m, j, r.get(i, j).clone());
                out.set(i + m, j + m, s.get(i, j).clone());
            }
        }
        out
    }

    /// Exact inverse by Gauss-Jordan; `None` if singular.
    pub fn inverse(&self) -> Option<GMat> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = GMat::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|r| !a.get(*r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.a.swap(piv * n + j, col * n + j);
                    inv.a.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).inv();
            for j in 0..n {
                a.a[col * n + j] = &a.a[col * n + j] * &p;
                inv.a[col * n + j] = &inv.a[col * n + j] * &p;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let v = &a.a[col * n + j] * &f;
                    a.a[r * n + j] = &a.a[r * n + j] - &v;
                    let w = &inv.a[col * n + j] * &f;
                    inv.a[r * n + j] = &inv.a[r * n + j] - &w;
                }
            }
        }
        Some(inv)
    }
}

fn elementary(m: usize, k: usize, l: usize) -> GMat {
    let mut e = GMat::zero(m);
    e.set(k, l, Gauss::one());
    e
}

/// Symmetric unit `½(e_kl + e_lk)` with 0-based indices.
pub fn sym_unit(m: usize, k: usize, l: usize) -> GMat {
    elementary(m, k, l).add(&elementary(m, l, k)).scale(&Gauss::real(Rat::new(1, 2)))
}

/// The algebra for a fixed genus, with cached realizations and structure constants.
#[derive(Clone, Debug)]
pub struct SpLie {
    pub m: usize,
    basis: Vec<BasisIndex>,
    mats: Vec<GMat>,
    gram_inv: GMat,
    brackets: Vec<Vec<Vec<(usize, Gauss)>>>,
}

/// A linear combination of basis letters (by position in `SpLie::basis`).
pub type LieComb = Vec<(usize, Gauss)>;

impl SpLie {
    pub fn new(m: usize) -> Result<SpLie, LieError> {
        if !(1..=3).contains(&m) {
            return Err(LieError::UnsupportedGenus(m));
        }
        let mut basis = Vec::new();
        for k in 1..=m as u8 {
            for l in k..=m as u8 {
                basis.push(BasisIndex::eplus(k, l));
            }
        }
        for k in 1..=m as u8 {
            for l in k..=m as u8 {
                basis.push(BasisIndex::eminus(k, l));
            }
        }
        for k in 1..=m as u8 {
            for l in 1..=m as u8 {
                basis.push(BasisIndex::b(k, l));
            }
        }
        let mats: Vec<GMat> = basis.iter().map(|b| realize_unchecked(m, *b)).collect();
        let d = basis.len();
        let mut gram = GMat::zero(d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, trace_form(&mats[i], &mats[j]));
            }
        }
        let gram_inv = gram.inverse().ok_or(LieError::ExpansionFailure)?;
        let mut lie = SpLie { m, basis, mats, gram_inv, brackets: Vec::new() };
        let mut brackets = vec![vec![Vec::new(); d]; d];
        for (i, row) in brackets.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let c = lie.mats[i].commutator(&lie.mats[j]);
                *slot = lie.expand(&c)?;
            }
        }
        lie.brackets = brackets;
        Ok(lie)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisIndex] {
        &self.basis
    }

    pub fn position(&self, idx: BasisIndex) -> Result<usize, LieError> {
        self.basis.iter().position(|b| *b == idx).ok_or_else(|| LieError::IndexOutOfRange(idx.to_string(), self.m))
    }

    pub fn letter(&self, i: usize) -> BasisIndex {
        self.basis[i]
    }

    pub fn realize(&self, idx: BasisIndex) -> Result<GMat, LieError> {
        Ok(self.mats[self.position(idx)?].clone())
    }

    pub fn matrix(&self, i: usize) -> &GMat {
        &self.mats[i]
    }

    /// Coordinates of a matrix in the basis; fails unless it re-realizes exactly.
    pub fn expand(&self, mat: &GMat) -> Result<LieComb, LieError> {
        let d = self.basis.len();
        let pairings: Vec<Gauss> = self.mats.iter().map(|x| trace_form(mat, x)).collect();
        let mut out = Vec::new();
        for i in 0..d {
            let mut c = Gauss::zero();
            for (j, p) in pairings.iter().enumerate() {
                c = &c + &(self.gram_inv.get(i, j) * p);
            }
            if !c.is_zero() {
                out.push((i, c));
            }
        }
        let mut back = GMat::zero(2 * self.m);
        for (i, c) in &out {
            back = back.add(&self.mats[*i].scale(c));
        }
        if &back != mat {
            return Err(LieError::ExpansionFailure);
        }
        Ok(out)
    }

    /// `[a, b]` by basis positions.
    pub fn bracket_pos(&self, a: usize, b: usize) -> &LieComb {
        &self.brackets[a][b]
    }

    pub fn bracket(&self, a: BasisIndex, b: BasisIndex) -> Result<Vec<(BasisIndex, Gauss)>, LieError> {
        let (i, j) = (self.position(a)?, self.position(b)?);
        Ok(self.brackets[i][j].iter().map(|(k, c)| (self.basis[*k], c.clone())).collect())
    }

    /// `½ tr(g h)` on basis elements.
    pub fn bilinear(&self, a: BasisIndex, b: BasisIndex) -> Result<Gauss, LieError> {
        Ok(trace_form(&self.mats[self.position(a)?], &self.mats[self.position(b)?]))
    }

    /// Dual basis element with respect to the trace form, computed from the Gram inverse.
    pub fn dual_pos(&self, i: usize) -> LieComb {
        (0..self.dim())
            .filter_map(|j| {
                let c = self.gram_inv.get(j, i).clone();
                if c.is_zero() {
                    None
                } else {
                    Some((j, c))
                }
            })
            .collect()
    }

    pub fn dual(&self, a: BasisIndex) -> Result<Vec<(BasisIndex, Gauss)>, LieError> {
        let i = self.position(a)?;
        Ok(self.dual_pos(i).into_iter().map(|(k, c)| (self.basis[k], c)).collect())
    }

    /// Weight of a letter under the Cartan generators `B_jj`, if it is a weight vector.
    pub fn weight(&self, i: usize) -> Option<Vec<Gauss>> {
        let mut w = Vec::new();
        for j in 1..=self.m as u8 {
            let h = self.position(BasisIndex::b(j, j)).ok()?;
            let br = &self.brackets[h][i];
            match br.as_slice() {
                [] => w.push(Gauss::zero()),
                [(k, c)] if *k == i => w.push(c.clone()),
                _ => return None,
            }
        }
        Some(w)
    }
}

fn trace_form(a: &GMat, b: &GMat) -> Gauss {
    a.mul(b).trace().scale(&Rat::new(1, 2))
}

/// `g'W + Wg = 0` with `W = [[0,-E],[E,0]]`.
pub fn is_symplectic(g: &GMat) -> bool {
    let m = g.n / 2;
    let z = GMat::zero(m);
    let e = GMat::identity(m);
    let w = GMat::from_blocks(&z, &e.scale(&Gauss::int(-1)), &e, &z);
    g.transpose().mul(&w).add(&w.mul(g)).is_zero()
}

fn realize_unchecked(m: usize, idx: BasisIndex) -> GMat {
    let (k, l) = (idx.k as usize - 1, idx.l as usize - 1);
    let i = Gauss::i();
    match idx.kind {
        Kind::Eplus | Kind::Eminus => {
            let x = sym_unit(m, k, l);
            let sgn = if idx.kind == Kind::Eplus { i.clone() } else { -&i };
            let ix = x.scale(&sgn);
            GMat::from_blocks(&x, &ix, &ix, &x.scale(&Gauss::int(-1)))
        }
        Kind::B => {
            let half = Gauss::real(Rat::new(1, 2));
            let a = elementary(m, k, l).sub(&elementary(m, l, k)).scale(&half);
            let s = elementary(m, k, l).add(&elementary(m, l, k)).scale(&Gauss::new(Rat::zero(), Rat::new(1, 2)));
            GMat::from_blocks(&a, &s, &s.scale(&Gauss::int(-1)), &a)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> Gauss {
        Gauss::int(n)
    }

    #[test]
    fn realize_b11_genus_two() {
        let lie = SpLie::new(2).unwrap();
        let b = lie.realize(BasisIndex::b(1, 1)).unwrap();
        let mut expect = GMat::zero(4);
        expect.set(0, 2, Gauss::i());
        expect.set(2, 0, -Gauss::i());
        assert_eq!(b, expect);
    }

    #[test]
    fn realize_eplus11() {
        let lie = SpLie::new(2).unwrap();
        let e = lie.realize(BasisIndex::eplus(1, 1)).unwrap();
        assert_eq!(e.get(0, 0), &g(1));
        assert_eq!(e.get(0, 2), &Gauss::i());
        assert_eq!(e.get(2, 0), &Gauss::i());
        assert_eq!(e.get(2, 2), &g(-1));
    }

    #[test]
    fn all_basis_elements_symplectic() {
        for m in 1..=3 {
            let lie = SpLie::new(m).unwrap();
            for b in lie.basis() {
                assert!(is_symplectic(&lie.realize(*b).unwrap()), "{b}");
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let lie = SpLie::new(2).unwrap();
        let r = lie.bracket(BasisIndex::b(1, 1), BasisIndex::eminus(1, 1)).unwrap();
        assert_eq!(r, vec![(BasisIndex::eminus(1, 1), g(2))]);
        assert!(lie.bracket(BasisIndex::b(1, 1), BasisIndex::b(2, 2)).unwrap().is_empty());
        let r = lie.bracket(BasisIndex::eminus(1, 1), BasisIndex::eplus(1, 1)).unwrap();
        assert_eq!(r, vec![(BasisIndex::b(1, 1), g(4))]);
    }

    #[test]
    fn duals_and_pairing() {
        let lie = SpLie::new(2).unwrap();
        assert_eq!(lie.dual(BasisIndex::eplus(1, 2)).unwrap(), vec![(BasisIndex::eminus(1, 2), g(1))]);
        assert_eq!(
            lie.dual(BasisIndex::eplus(1, 1)).unwrap(),
            vec![(BasisIndex::eminus(1, 1), Gauss::real(Rat::new(1, 2)))]
        );
        assert_eq!(lie.bilinear(BasisIndex::eplus(1, 1), BasisIndex::eminus(1, 1)).unwrap(), g(2));
        assert_eq!(lie.dual(BasisIndex::b(1, 2)).unwrap(), vec![(BasisIndex::b(2, 1), g(1))]);
    }

    #[test]
    fn out_of_range_index() {
        let lie = SpLie::new(1).unwrap();
        assert!(lie.realize(BasisIndex::b(1, 2)).is_err());
    }
}
