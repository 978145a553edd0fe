//! Universal enveloping algebra of `sp_m(C)` with PBW normal form, the
//! Casimir elements `D_r`, and the formal-trace expressions built from the
//! matrix-valued matrices `E±`, `B`, `B*`.

use crate::lie::{BasisIndex, GMat, LieError, SpLie};
use crate::par;
use crate::ring::{Gauss, Poly, RingElem, VarSet};
use smallvec::SmallVec;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

/// A word of letter ranks; canonical when non-decreasing.
pub type Word = SmallVec<[u8; 8]>;

/// Which letters go where in a canonical PBW word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterOrder {
    /// Negative-root letters, then Cartan letters, then positive-root letters.
    HarishChandra,
    /// `p+` letters, then `p-` letters, then all of `k` rightmost.
    CompactRight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UeaElem {
    vars: Arc<VarSet>,
    terms: BTreeMap<Word, Poly>,
}

impl UeaElem {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        UeaElem { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(p: Poly) -> Self {
        let mut e = UeaElem::zero(p.vars());
        if !p.is_zero() {
            e.terms.insert(Word::new(), p);
        }
        e
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Word, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    fn push(&mut self, w: Word, p: Poly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(q) => {
                let s = q.add(&p);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *q = s;
                }
            }
            None => {
                self.terms.insert(w, p);
            }
        }
    }

    pub fn add(&self, o: &UeaElem) -> UeaElem {
        let mut out = self.clone();
        for (w, p) in &o.terms {
            out.push(w.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, o: &UeaElem) -> UeaElem {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> UeaElem {
        UeaElem { vars: self.vars.clone(), terms: self.terms.iter().map(|(w, p)| (w.clone(), p.neg())).collect() }
    }

    pub fn scale(&self, c: &Poly) -> UeaElem {
        let mut out = UeaElem::zero(&self.vars);
        for (w, p) in &self.terms {
            out.push(w.clone(), p.mul(c));
        }
        out
    }

    pub fn scale_elem(&self, c: &RingElem) -> UeaElem {
        let mut out = UeaElem::zero(&self.vars);
        for (w, p) in &self.terms {
            out.push(w.clone(), p.scale(c));
        }
        out
    }

    pub fn scale_rat(&self, n: i64, d: i64) -> UeaElem {
        self.scale_elem(&RingElem::rat(n, d))
    }

    /// Coefficient of the empty word.
    pub fn constant(&self) -> Poly {
        self.terms.get(&Word::new()).cloned().unwrap_or_else(|| Poly::zero(&self.vars))
    }
}

/// Result of comparing two elements in normal form.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub equal: bool,
    pub difference: UeaElem,
}

type NfTable = HashMap<Word, Arc<Vec<(Word, Gauss)>>>;

/// Matrix whose entries are enveloping-algebra elements.
pub type UMat = Vec<Vec<UeaElem>>;

pub struct Uea {
    pub lie: SpLie,
    pub vars: Arc<VarSet>,
    order: LetterOrder,
    letters: Vec<BasisIndex>,
    rank_of_pos: Vec<u8>,
    brackets: Vec<Vec<Vec<(u8, Gauss)>>>,
    memo: RwLock<NfTable>,
}

/// Coefficient variables available to enveloping-algebra elements.
pub const UEA_VARS: &[&str] = &["u", "v", "kappa"];

impl Uea {
    pub fn new(m: usize, order: LetterOrder) -> Result<Uea, LieError> {
        let lie = SpLie::new(m)?;
        let mut letters: Vec<BasisIndex> = lie.basis().to_vec();
        match order {
            LetterOrder::HarishChandra => letters.sort_by_key(|b| {
                let group = if b.is_negative() {
                    0
                } else if b.is_cartan() {
                    1
                } else {
                    2
                };
                (group, *b)
            }),
            LetterOrder::CompactRight => letters.sort(),
        }
        let mut rank_of_pos = vec![0u8; lie.dim()];
        for (r, b) in letters.iter().enumerate() {
            rank_of_pos[lie.position(*b)?] = r as u8;
        }
        let mut brackets = vec![vec![Vec::new(); letters.len()]; letters.len()];
        for (ra, a) in letters.iter().enumerate() {
            for (rb, b) in letters.iter().enumerate() {
                let pa = lie.position(*a)?;
                let pb = lie.position(*b)?;
                brackets[ra][rb] = lie.bracket_pos(pa, pb).iter().map(|(k, c)| (rank_of_pos[*k], c.clone())).collect();
            }
        }
        Ok(Uea {
            lie,
            vars: VarSet::of(UEA_VARS),
            order,
            letters,
            rank_of_pos,
            brackets,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn m(&self) -> usize {
        self.lie.m
    }

    pub fn order(&self) -> LetterOrder {
        self.order
    }

    pub fn letter_of_rank(&self, r: u8) -> BasisIndex {
        self.letters[r as usize]
    }

    pub fn rank(&self, idx: BasisIndex) -> Result<u8, LieError> {
        Ok(self.rank_of_pos[self.lie.position(idx)?])
    }

    pub fn one(&self) -> UeaElem {
        UeaElem::scalar(Poly::one(&self.vars))
    }

    pub fn constant(&self, c: Poly) -> UeaElem {
        UeaElem::scalar(c)
    }

    pub fn int(&self, n: i64) -> UeaElem {
        UeaElem::scalar(Poly::int(&self.vars, n))
    }

    pub fn poly_var(&self, name: &str) -> Poly {
        Poly::var(&self.vars, name)
    }

    /// A single basis letter.
    pub fn letter(&self, idx: BasisIndex) -> UeaElem {
        let r = self.rank(idx).unwrap_or_else(|e| panic!("{e}"));
        let mut e = UeaElem::zero(&self.vars);
        e.push(SmallVec::from_slice(&[r]), Poly::one(&self.vars));
        e
    }

    /// A word of letters, normal-formed.
    pub fn word(&self, letters: &[BasisIndex], coeff: Poly) -> Result<UeaElem, LieError> {
        let w: Word = letters.iter().map(|b| self.rank(*b)).collect::<Result<_, _>>()?;
        let mut e = UeaElem::zero(&self.vars);
        e.push(w, coeff);
        Ok(self.normal_form(&e))
    }

    pub fn is_canonical_word(w: &[u8]) -> bool {
        w.windows(2).all(|p| p[0] <= p[1])
    }

    /// Normal form of a single word as Gaussian combination of canonical words.
    pub fn nf_word(&self, w: &[u8]) -> Arc<Vec<(Word, Gauss)>> {
        if let Some(r) = self.memo.read().unwrap().get(w) {
            return r.clone();
        }
        let res = match w.windows(2).position(|p| p[0] > p[1]) {
            None => vec![(Word::from_slice(w), Gauss::one())],
            Some(i) => {
                let mut acc: HashMap<Word, Gauss> = HashMap::new();
                let mut swapped = Word::from_slice(w);
                swapped.swap(i, i + 1);
                for (v, c) in self.nf_word(&swapped).iter() {
                    add_gauss(&mut acc, v, c);
                }
                for (k, c) in &self.brackets[w[i] as usize][w[i + 1] as usize] {
                    let mut shorter: Word = Word::from_slice(&w[..i]);
                    shorter.push(*k);
                    shorter.extend_from_slice(&w[i + 2..]);
                    for (v, c2) in self.nf_word(&shorter).iter() {
                        add_gauss(&mut acc, v, &(c * c2));
                    }
                }
                let mut v: Vec<(Word, Gauss)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                v.sort_by(|a, b| a.0.cmp(&b.0));
                v
            }
        };
        let res = Arc::new(res);
        self.memo.write().unwrap().insert(Word::from_slice(w), res.clone());
        res
    }

    /// Rewrites every word into canonical PBW order.
    pub fn normal_form(&self, e: &UeaElem) -> UeaElem {
        let items: Vec<(&Word, &Poly)> = e.terms.iter().collect();
        let parts = par::map(&items, |(w, p)| {
            if Uea::is_canonical_word(w) {
                return vec![((*w).clone(), (*p).clone())];
            }
            self.nf_word(w)
                .iter()
                .map(|(v, c)| (v.clone(), p.scale(&RingElem::from_gauss(c.clone()))))
                .collect::<Vec<_>>()
        });
        let mut out = UeaElem::zero(&e.vars);
        for part in parts {
            for (w, p) in part {
                out.push(w, p);
            }
        }
        out
    }

    pub fn mul(&self, a: &UeaElem, b: &UeaElem) -> UeaElem {
        let mut raw = UeaElem::zero(&self.vars);
        for (wa, pa) in &a.terms {
            for (wb, pb) in &b.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                raw.push(w, pa.mul(pb));
            }
        }
        self.normal_form(&raw)
    }

    pub fn commutator(&self, a: &UeaElem, b: &UeaElem) -> UeaElem {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn verify_identity(&self, lhs: &UeaElem, rhs: &UeaElem) -> IdentityReport {
        let d = self.normal_form(lhs).sub(&self.normal_form(rhs));
        IdentityReport { equal: d.is_zero(), difference: d }
    }

    /// Basis letters whose commutator with `z` does not vanish.
    pub fn non_commuting_letters(&self, z: &UeaElem) -> Vec<BasisIndex> {
        let basis = self.lie.basis().to_vec();
        let res = par::map(&basis, |b| self.commutator(z, &self.letter(*b)).is_zero());
        basis.into_iter().zip(res).filter(|(_, ok)| !ok).map(|(b, _)| b).collect()
    }

    /// `Σ tr(X_{i1}⋯X_{ir}) X*_{i1}⋯X*_{ir}` for a frame of matrices given with
    /// their expansions in the standard basis (by basis position).
    pub fn casimir_from_frame(
        &self,
        frame: &[GMat],
        frame_letters: &[Vec<(usize, Gauss)>],
        r: usize,
    ) -> Result<UeaElem, LieError> {
        let d = frame.len();
        let mut gram = GMat::zero(d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, frame[i].mul(&frame[j]).trace().scale(&crate::ring::Rat::new(1, 2)));
            }
        }
        let ginv = gram.inverse().ok_or(LieError::ExpansionFailure)?;
        // dual of frame element i as combination of letter ranks
        let mut duals: Vec<Vec<(u8, Gauss)>> = Vec::with_capacity(d);
        for i in 0..d {
            let mut acc: BTreeMap<u8, Gauss> = BTreeMap::new();
            for j in 0..d {
                let g = ginv.get(j, i);
                if g.is_zero() {
                    continue;
                }
                for (pos, c) in &frame_letters[j] {
                    let rk = self.rank_of_pos[*pos];
                    let v = acc.get(&rk).cloned().unwrap_or_default();
                    acc.insert(rk, &v + &(g * c));
                }
            }
            duals.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
        let firsts: Vec<usize> = (0..d).collect();
        let parts = par::map(&firsts, |i0| {
            let mut raw: Vec<(Word, Gauss)> = Vec::new();
            let mut stack: Vec<usize> = vec![*i0];
            self.enumerate_traces(frame, &duals, r, &mut stack, frame[*i0].clone(), &mut raw);
            let mut e = UeaElem::zero(&self.vars);
            for (w, c) in raw {
                e.push(w, Poly::constant(&self.vars, RingElem::from_gauss(c)));
            }
            self.normal_form(&e)
        });
        let mut out = UeaElem::zero(&self.vars);
        for p in parts {
            out = out.add(&p);
        }
        Ok(out)
    }

    fn enumerate_traces(
        &self,
        frame: &[GMat],
        duals: &[Vec<(u8, Gauss)>],
        r: usize,
        stack: &mut Vec<usize>,
        prod: GMat,
        out: &mut Vec<(Word, Gauss)>,
    ) {
        if stack.len() == r {
            let t = prod.trace();
            if t.is_zero() {
                return;
            }
            let mut words: Vec<(Word, Gauss)> = vec![(Word::new(), t)];
            for i in stack.iter() {
                let mut next = Vec::with_capacity(words.len() * duals[*i].len());
                for (w, c) in &words {
                    for (rk, g) in &duals[*i] {
                        let mut w2 = w.clone();
                        w2.push(*rk);
                        next.push((w2, c * g));
                    }
                }
                words = next;
            }
            out.extend(words);
            return;
        }
        for j in 0..frame.len() {
            let p = prod.mul(&frame[j]);
            stack.push(j);
            self.enumerate_traces(frame, duals, r, stack, p, out);
            stack.pop();
        }
    }

    /// `D_r` over the standard basis.
    pub fn build_casimir(&self, r: usize) -> UeaElem {
        let frame: Vec<GMat> = (0..self.lie.dim()).map(|i| self.lie.matrix(i).clone()).collect();
        let letters: Vec<Vec<(usize, Gauss)>> = (0..self.lie.dim()).map(|i| vec![(i, Gauss::one())]).collect();
        self.casimir_from_frame(&frame, &letters, r).expect("standard basis is nondegenerate")
    }

    /// `C_n = ½ D_{2n}`.
    pub fn build_c(&self, n: usize) -> UeaElem {
        self.build_casimir(2 * n).scale_rat(1, 2)
    }

    // formal matrix-valued matrices

    pub fn mat_eplus(&self) -> UMat {
        self.mat_of(|k, l| BasisIndex::eplus(k, l))
    }

    pub fn mat_eminus(&self) -> UMat {
        self.mat_of(|k, l| BasisIndex::eminus(k, l))
    }

    pub fn mat_b(&self) -> UMat {
        self.mat_of(BasisIndex::b)
    }

    pub fn mat_bstar(&self) -> UMat {
        self.mat_of(|k, l| BasisIndex::b(l, k))
    }

    fn mat_of(&self, f: impl Fn(u8, u8) -> BasisIndex) -> UMat {
        let m = self.m() as u8;
        (1..=m).map(|k| (1..=m).map(|l| self.letter(f(k, l))).collect()).collect()
    }

    /// Ordered product of formal matrices (entries multiply left to right).
    pub fn mat_mul(&self, a: &UMat, b: &UMat) -> UMat {
        let m = a.len();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let mut acc = UeaElem::zero(&self.vars);
                        for k in 0..m {
                            acc = acc.add(&self.mul(&a[i][k], &b[k][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    pub fn mat_trace(&self, a: &UMat) -> UeaElem {
        let mut acc = UeaElem::zero(&self.vars);
        for (i, row) in a.iter().enumerate() {
            acc = acc.add(&row[i]);
        }
        acc
    }

    /// Formal trace of an ordered product of formal matrices.
    pub fn trace_of(&self, factors: &[&UMat]) -> UeaElem {
        let mut p = factors[0].clone();
        for f in &factors[1..] {
            p = self.mat_mul(&p, f);
        }
        self.mat_trace(&p)
    }

    /// Canonical text: terms in word order, `coeff*L1*L2`.
    pub fn format(&self, e: &UeaElem) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (w, p)) in e.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({p})");
            for r in w {
                let _ = write!(s, "*{}", self.letter_of_rank(*r));
            }
        }
        s
    }
}

fn add_gauss(acc: &mut HashMap<Word, Gauss>, w: &Word, c: &Gauss) {
    match acc.get_mut(w) {
        Some(x) => *x = &*x + c,
        None => {
            acc.insert(w.clone(), c.clone());
        }
    }
}

/// The closed-form expressions for `D_2`, `D_4`, `C_1`, `C_2` and the two
/// trace rearrangements, built from formal traces.
pub struct TraceForms<'a> {
    pub uea: &'a Uea,
    ep: UMat,
    em: UMat,
    b: UMat,
    bs: UMat,
}

impl<'a> TraceForms<'a> {
    pub fn new(uea: &'a Uea) -> Self {
        TraceForms { ep: uea.mat_eplus(), em: uea.mat_eminus(), b: uea.mat_b(), bs: uea.mat_bstar(), uea }
    }

    fn tr(&self, f: &[&UMat]) -> UeaElem {
        self.uea.trace_of(f)
    }

    fn m1(&self) -> i64 {
        self.uea.m() as i64 + 1
    }

    /// `½(tr(E+E-) + tr(E-E+))`
    pub fn sym2(&self) -> UeaElem {
        self.tr(&[&self.ep, &self.em]).add(&self.tr(&[&self.em, &self.ep])).scale_rat(1, 2)
    }

    pub fn d2_basis_expression(&self) -> UeaElem {
        self.tr(&[&self.ep, &self.em])
            .add(&self.tr(&[&self.em, &self.ep]))
            .add(&self.tr(&[&self.b, &self.b]))
            .add(&self.tr(&[&self.bs, &self.bs]))
    }

    /// The printed closed form: cyclic sums over `E+E-B*B`, `E-E+BB*`,
    /// `E+BE-B*`, all with sign +. This one is not central.
    pub fn d4_basis_expression(&self) -> UeaElem {
        let (ep, em, b, bs) = (&self.ep, &self.em, &self.b, &self.bs);
        self.d4_with_cycles(&[([ep, em, bs, b], 1), ([em, ep, b, bs], 1), ([ep, b, em, bs], 1)])
    }

    /// The closed form that actually equals `D_4`, found by solving for the
    /// cyclic-class coefficients: `E+E-B*B*`, `E-E+BB` with +1 and
    /// `E+BE-B*` with -1.
    pub fn d4_corrected_expression(&self) -> UeaElem {
        let (ep, em, b, bs) = (&self.ep, &self.em, &self.b, &self.bs);
        self.d4_with_cycles(&[([ep, em, bs, bs], 1), ([em, ep, b, b], 1), ([ep, b, em, bs], -1)])
    }

    fn d4_with_cycles(&self, cycles: &[([&UMat; 4], i64)]) -> UeaElem {
        let (ep, em, b, bs) = (&self.ep, &self.em, &self.b, &self.bs);
        let mut acc = self
            .tr(&[ep, em, ep, em])
            .add(&self.tr(&[em, ep, em, ep]))
            .add(&self.tr(&[b, b, b, b]))
            .add(&self.tr(&[bs, bs, bs, bs]));
        for (seq, sign) in cycles {
            for shift in 0..4 {
                let rot: Vec<&UMat> = (0..4).map(|k| seq[(k + shift) % 4]).collect();
                acc = acc.add(&self.tr(&rot).scale_rat(*sign, 1));
            }
        }
        acc
    }

    /// `tr(E+E-) + (m+1) tr(B)`
    pub fn sym2_rearranged(&self) -> UeaElem {
        let trb = self.uea.mat_trace(&self.b);
        self.tr(&[&self.ep, &self.em]).add(&trb.scale_rat(self.m1(), 1))
    }

    pub fn sym4(&self) -> UeaElem {
        let (ep, em) = (&self.ep, &self.em);
        self.tr(&[ep, em, ep, em]).add(&self.tr(&[em, ep, em, ep])).scale_rat(1, 2)
    }

    pub fn sym4_rearranged(&self) -> UeaElem {
        let (ep, em, b, bs) = (&self.ep, &self.em, &self.b, &self.bs);
        let trb = self.uea.mat_trace(b);
        let m = self.uea.m() as i64;
        self.tr(&[ep, em, ep, em])
            .add(&self.uea.mul(&self.sym2(), &trb))
            .add(&self.tr(&[ep, em, bs]).add(&self.tr(&[em, ep, b])).scale_rat(m + 2, 2))
    }

    pub fn c1_rearranged(&self) -> UeaElem {
        self.sym2().add(&self.tr(&[&self.b, &self.b]))
    }

    pub fn c2_rearranged(&self) -> UeaElem {
        let (ep, em, b, bs) = (&self.ep, &self.em, &self.b, &self.bs);
        let m = self.uea.m() as u8;
        let head = self
            .tr(&[ep, em, ep, em])
            .add(&self.tr(&[em, ep, em, ep]))
            .add(&self.tr(&[b, b, b, b]))
            .add(&self.tr(&[bs, bs, bs, bs]))
            .scale_rat(1, 2);
        let mixed = self.tr(&[ep, em, bs, bs]).add(&self.tr(&[em, ep, b, b])).scale_rat(2, 1);
        let u = self.uea;
        let mut anti = UeaElem::zero(&u.vars);
        for i in 1..=m {
            for j in 1..=m {
                for k in 1..=m {
                    for l in 1..=m {
                        let p = u.letter(BasisIndex::eplus(k, l));
                        let q = u.letter(BasisIndex::eminus(i, j));
                        let ac = u.mul(&p, &q).add(&u.mul(&q, &p));
                        let bb = u.mul(&u.letter(BasisIndex::b(k, j)), &u.letter(BasisIndex::b(l, i)));
                        anti = anti.add(&u.mul(&ac, &bb));
                    }
                }
            }
        }
        let tail = self.sym2().scale_rat(self.m1() * self.m1(), 1);
        head.add(&mixed).sub(&anti).add(&tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn em_ep_normal_form() {
        let u = Uea::new(2, LetterOrder::HarishChandra).unwrap();
        let one = Poly::one(&u.vars);
        let lhs = u.word(&[BasisIndex::eminus(1, 1), BasisIndex::eplus(1, 1)], one.clone()).unwrap();
        let rhs = u
            .word(&[BasisIndex::eplus(1, 1), BasisIndex::eminus(1, 1)], one.clone())
            .unwrap()
            .add(&u.letter(BasisIndex::b(1, 1)).scale_rat(4, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cartan_pair_and_empty_word() {
        let u = Uea::new(2, LetterOrder::HarishChandra).unwrap();
        let one = Poly::one(&u.vars);
        let w = u.word(&[BasisIndex::b(1, 1), BasisIndex::b(2, 2)], one.clone()).unwrap();
        assert_eq!(w.terms().len(), 1);
        assert_eq!(u.word(&[], one).unwrap(), u.one());
    }

    #[test]
    fn genus_one_casimir_is_central() {
        let u = Uea::new(1, LetterOrder::HarishChandra).unwrap();
        let d2 = u.build_casimir(2);
        assert!(u.non_commuting_letters(&d2).is_empty());
    }

    #[test]
    fn d2_matches_trace_expression() {
        let u = Uea::new(2, LetterOrder::HarishChandra).unwrap();
        let tf = TraceForms::new(&u);
        assert!(u.verify_identity(&u.build_casimir(2), &tf.d2_basis_expression()).equal);
        assert!(u.verify_identity(&tf.sym2(), &tf.sym2_rearranged()).equal);
        assert!(u.verify_identity(&u.build_c(1), &tf.c1_rearranged()).equal);
    }

    #[test]
    fn unequal_difference_is_reported() {
        let u = Uea::new(2, LetterOrder::HarishChandra).unwrap();
        let x = u.letter(BasisIndex::eplus(1, 2));
        let b = u.letter(BasisIndex::b(1, 1));
        let r = u.verify_identity(&x, &x.add(&b));
        assert!(!r.equal);
        assert_eq!(r.difference, b.neg());
    }
}
