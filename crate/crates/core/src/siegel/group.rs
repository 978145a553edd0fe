//! Right-regular action of the complexified Lie algebra on functions of
//! `g ∈ Sp(2m, R)` written through `z = g·i`, `J = ci + d` and `J̄ = d − ic`.
//!
//! For `X` with blocks `[[P, Q], [R, S]]` one has
//! `XJ = J M1 + J̄ M2`, `XJ̄ = J M3 + J̄ M4`, `Xz = −2i y J̄ M2 J̄' y`,
//! `Xz̄ = 2i y J M3 J' y` and `X j = j (tr M1 + tr(J̄' y J̄ M2))`.

use super::expr::{full_name, pmat_mul, pmat_trace, pmat_transpose, Frame, PMat, SiegelExpr};
use crate::lie::{BasisIndex, GMat, LieError, SpLie};
use crate::par;
use crate::ring::{Gauss, Poly, Rat, RingElem};
use crate::uea::{Uea, UeaElem, Word};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
struct LetterAction {
    xj: PMat,
    xjb: PMat,
    dz: Option<PMat>,
    dzbar: Option<PMat>,
    jfactor: Poly,
}

/// Derivation rules for every basis letter of one genus, with the weight
/// `κ` of the automorphy factor `j(g, i)^{−κ}` folded in.
pub struct GroupEngine {
    pub frame: Frame,
    pub lie: SpLie,
    pub kappa: Poly,
    actions: Vec<LetterAction>,
}

fn gconst(frame: &Frame, g: &GMat) -> PMat {
    let n = g.n;
    (0..n)
        .map(|i| (0..n).map(|j| Poly::constant(&frame.vars, RingElem::from_gauss(g.get(i, j).clone()))).collect())
        .collect()
}

fn pmat_add(a: &PMat, b: &PMat) -> PMat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect()).collect()
}

fn pmat_scale(a: &PMat, c: &RingElem) -> PMat {
    a.iter().map(|r| r.iter().map(|x| x.scale(c)).collect()).collect()
}

fn is_zero_g(g: &GMat) -> bool {
    g.is_zero()
}

impl GroupEngine {
    pub fn new(m: usize, kappa: Poly) -> Result<GroupEngine, LieError> {
        let frame = Frame::new(m);
        let lie = SpLie::new(m)?;
        let i = Gauss::i();
        let half = Gauss::real(Rat::new(1, 2));
        let inv2i = Gauss::new(Rat::zero(), Rat::new(-1, 2));
        let mut actions = Vec::with_capacity(lie.dim());
        for pos in 0..lie.dim() {
            let [p, q, r, s] = lie.matrix(pos).blocks();
            let ipq = p.scale(&i).add(&q);
            let irs = r.scale(&i).add(&s);
            let mipq = p.scale(&-&i).add(&q);
            let mirs = r.scale(&-&i).add(&s);
            let m1 = ipq.scale(&inv2i).add(&irs.scale(&half));
            let m2 = ipq.scale(&-&inv2i).add(&irs.scale(&half));
            let m3 = mipq.scale(&inv2i).add(&mirs.scale(&half));
            let m4 = mipq.scale(&-&inv2i).add(&mirs.scale(&half));
            let (pm1, pm2, pm3, pm4) = (gconst(&frame, &m1), gconst(&frame, &m2), gconst(&frame, &m3), gconst(&frame, &m4));
            let xj = pmat_add(&pmat_mul(&frame.j, &pm1), &pmat_mul(&frame.jb, &pm2));
            let xjb = pmat_add(&pmat_mul(&frame.j, &pm3), &pmat_mul(&frame.jb, &pm4));
            let dz = (!is_zero_g(&m2)).then(|| {
                let inner = pmat_mul(&pmat_mul(&frame.jb, &pm2), &pmat_transpose(&frame.jb));
                let full = pmat_mul(&pmat_mul(&frame.y, &inner), &frame.y);
                pmat_scale(&full, &RingElem::from_gauss(Gauss::new(Rat::zero(), Rat::from_int(-2))))
            });
            let dzbar = (!is_zero_g(&m3)).then(|| {
                let inner = pmat_mul(&pmat_mul(&frame.j, &pm3), &pmat_transpose(&frame.j));
                let full = pmat_mul(&pmat_mul(&frame.y, &inner), &frame.y);
                pmat_scale(&full, &RingElem::from_gauss(Gauss::new(Rat::zero(), Rat::from_int(2))))
            });
            let jbt_y_jb = pmat_mul(&pmat_mul(&pmat_transpose(&frame.jb), &frame.y), &frame.jb);
            let log_j = pmat_trace(&pm1).add(&pmat_trace(&pmat_mul(&jbt_y_jb, &pm2)));
            let jfactor = log_j.mul(&kappa).neg();
            actions.push(LetterAction { xj, xjb, dz, dzbar, jfactor });
        }
        Ok(GroupEngine { frame, lie, kappa, actions })
    }

    pub fn m(&self) -> usize {
        self.frame.m
    }

    /// The seed function `j^{−κ} e(τz) tr(τy)^{s1} det(y)^{s2}`; the
    /// automorphy factor stays implicit in every expression here.
    pub fn seed(&self) -> SiegelExpr {
        SiegelExpr::seed(&self.frame)
    }

    /// `X F` for the basis letter at `pos`.
    pub fn apply_pos(&self, pos: usize, f: &SiegelExpr) -> SiegelExpr {
        let act = &self.actions[pos];
        let fr = &self.frame;
        let m = fr.m;
        let mut out = f.mul_poly(&act.jfactor);
        if let Some(dz) = &act.dz {
            for p in 0..m {
                for q in 0..m {
                    out.add_assign(f.d(fr, p, q).mul_poly(&dz[q][p]));
                }
            }
        }
        if let Some(dzb) = &act.dzbar {
            for p in 0..m {
                for q in 0..m {
                    out.add_assign(f.dbar(fr, p, q).mul_poly(&dzb[q][p]));
                }
            }
        }
        for p in 0..m {
            for q in 0..m {
                let dj = f.derivative_var(full_name("J", p, q));
                if !dj.is_zero() {
                    out.add_assign(dj.mul_poly(&act.xj[p][q]));
                }
                let djb = f.derivative_var(full_name("Jb", p, q));
                if !djb.is_zero() {
                    out.add_assign(djb.mul_poly(&act.xjb[p][q]));
                }
            }
        }
        out
    }

    /// Letter lookup that also accepts `E±_kl` with `k > l` (symmetric in the indices).
    pub fn position(&self, idx: BasisIndex) -> Result<usize, LieError> {
        match idx.kind {
            crate::lie::Kind::B => self.lie.position(idx),
            _ if idx.k > idx.l => self.lie.position(BasisIndex { kind: idx.kind, k: idx.l, l: idx.k }),
            _ => self.lie.position(idx),
        }
    }

    pub fn apply(&self, idx: BasisIndex, f: &SiegelExpr) -> Result<SiegelExpr, LieError> {
        Ok(self.apply_pos(self.position(idx)?, f))
    }

    /// Applies a word `X1 X2 … Xn` (rightmost first).
    pub fn apply_word(&self, word: &[BasisIndex], f: &SiegelExpr) -> Result<SiegelExpr, LieError> {
        let mut cur = f.clone();
        for idx in word.iter().rev() {
            cur = self.apply(*idx, &cur)?;
        }
        Ok(cur)
    }

    /// Applies an enveloping-algebra element to `f`. Shared suffixes are
    /// computed once; each suffix length is one parallel sweep.
    pub fn apply_uea(&self, uea: &Uea, elem: &UeaElem, f: &SiegelExpr) -> Result<SiegelExpr, LieError> {
        let mut rank_pos = Vec::new();
        for r in 0..uea.lie.dim() {
            rank_pos.push(self.position(uea.letter_of_rank(r as u8))?);
        }
        let mut by_len: BTreeMap<usize, BTreeSet<Word>> = BTreeMap::new();
        for w in elem.terms().keys() {
            for k in 0..w.len() {
                let suf: Word = w[k..].iter().copied().collect();
                by_len.entry(suf.len()).or_default().insert(suf);
            }
        }
        let mut memo: BTreeMap<Word, SiegelExpr> = BTreeMap::new();
        memo.insert(Word::new(), f.clone());
        for (_, sufs) in by_len {
            let list: Vec<Word> = sufs.into_iter().collect();
            let done = par::map(&list, |w| {
                let rest: Word = w[1..].iter().copied().collect();
                self.apply_pos(rank_pos[w[0] as usize], &memo[&rest])
            });
            for (w, e) in list.into_iter().zip(done) {
                memo.insert(w, e);
            }
        }
        let mut out = SiegelExpr::zero(f.m, f.exp);
        for (w, c) in elem.terms() {
            let c = c.embed(&self.frame.vars).map_err(|_| LieError::ExpansionFailure)?;
            out.add_assign(memo[w].mul_poly(&c));
        }
        Ok(out)
    }

    /// `Σ_ab (Y1)_{ab} (Y2)_{ba}` style matrix trace of generator matrices applied
    /// to `f`: `factors[0]` is leftmost. Evaluated as iterated matrix
    /// products so each intermediate is shared.
    pub fn apply_trace(&self, factors: &[crate::lie::Kind], f: &SiegelExpr) -> Result<SiegelExpr, LieError> {
        let m = self.m() as u8;
        let letter = |kind: crate::lie::Kind, a: u8, b: u8| BasisIndex { kind, k: a + 1, l: b + 1 };
        // level[c][a] = Σ (X_last…)_{c…a} f, starting from the rightmost factor
        let n = factors.len();
        let last = factors[n - 1];
        let pairs: Vec<(u8, u8)> = (0..m).flat_map(|c| (0..m).map(move |a| (c, a))).collect();
        let mut level: BTreeMap<(u8, u8), SiegelExpr> = BTreeMap::new();
        let first = par::map(&pairs, |(c, a)| self.apply(letter(last, *c, *a), f));
        for (k, v) in pairs.iter().zip(first) {
            level.insert(*k, v?);
        }
        for kind in factors[..n - 1].iter().rev() {
            let next = par::map(&pairs, |(b, a)| -> Result<SiegelExpr, LieError> {
                let mut acc = SiegelExpr::zero(f.m, f.exp);
                for c in 0..m {
                    acc.add_assign(self.apply(letter(*kind, *b, c), &level[&(c, *a)])?);
                }
                Ok(acc)
            });
            let mut nl = BTreeMap::new();
            for (k, v) in pairs.iter().zip(next) {
                nl.insert(*k, v?);
            }
            level = nl;
        }
        let mut out = SiegelExpr::zero(f.m, f.exp);
        for a in 0..m {
            out.add_assign(level[&(a, a)].clone());
        }
        Ok(out)
    }
}

impl GroupEngine {
    /// `(X)_ab H` for every index pair of one generator family, group variables kept.
    pub fn generator_action_on_seed(&self, kind: crate::lie::Kind) -> Result<Vec<Vec<SiegelExpr>>, LieError> {
        let m = self.m() as u8;
        let h = self.seed();
        (0..m)
            .map(|a| (0..m).map(|b| self.apply(BasisIndex { kind, k: a + 1, l: b + 1 }, &h)).collect())
            .collect()
    }
}
