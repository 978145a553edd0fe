//! Sparse multivariate polynomials over `Q(i)[π]`.

use super::elem::RingElem;
use super::gauss::Gauss;
use super::rational::Rat;
use super::RingError;
use smallvec::SmallVec;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Every variable name the crate knows, in the fixed global order that
/// defines lex comparison and printing.
pub const REGISTERED: &[&str] = &[
    "y11", "y12", "y22", "x11", "x12", "x22", "tau11", "tau12", "tau22", "s1", "s2", "s", "u", "v",
    "kappa", "L1", "L2", "t", "t1", "t2", "c", "B11", "B22", "J11", "J12", "J21", "J22", "Jb11",
    "Jb12", "Jb21", "Jb22", "T", "d", "D", "X",
];

pub type Mono = SmallVec<[u16; 24]>;

fn registered_rank(name: &str) -> Option<usize> {
    REGISTERED.iter().position(|n| *n == name)
}

/// An ordered set of registered variables.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<&'static str>,
}

impl VarSet {
    /// Builds a variable set; names are sorted into registry order.
    pub fn new(names: &[&str]) -> Result<Arc<VarSet>, RingError> {
        let mut ranked = Vec::with_capacity(names.len());
        for n in names {
            let r = registered_rank(n).ok_or_else(|| RingError::UnknownVariable(n.to_string()))?;
            if !ranked.contains(&r) {
                ranked.push(r);
            }
        }
        ranked.sort_unstable();
        Ok(Arc::new(VarSet { names: ranked.into_iter().map(|r| REGISTERED[r]).collect() }))
    }

    pub fn of(names: &[&str]) -> Arc<VarSet> {
        VarSet::new(names).expect("registered variables")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| *n == name)
    }

    pub fn names(&self) -> &[&'static str] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &'static str {
        self.names[i]
    }
}

#[derive(Clone, Debug)]
pub struct Poly {
    vars: Arc<VarSet>,
    /// sorted ascending by monomial (lex, first variable most significant)
    terms: Vec<(Mono, RingElem)>,
}

impl PartialEq for Poly {
    fn eq(&self, o: &Poly) -> bool {
        same_vars(&self.vars, &o.vars) && self.terms == o.terms
    }
}

impl Eq for Poly {}

fn same_vars(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn add_mono(a: &Mono, b: &Mono) -> Mono {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
        .collect()
}

fn try_add_mono(a: &Mono, b: &Mono) -> Result<Mono, RingError> {
    a.iter().zip(b.iter()).map(|(x, y)| x.checked_add(*y).ok_or(RingError::ExponentOverflow)).collect()
}

impl Poly {
    pub fn zero(vars: &Arc<VarSet>) -> Poly {
        Poly { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(vars: &Arc<VarSet>, c: RingElem) -> Poly {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.push((SmallVec::from_elem(0, vars.len()), c));
        }
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Poly {
        Poly::constant(vars, RingElem::one())
    }

    pub fn int(vars: &Arc<VarSet>, n: i64) -> Poly {
        Poly::constant(vars, RingElem::int(n))
    }

    pub fn rat(vars: &Arc<VarSet>, n: i64, d: i64) -> Poly {
        Poly::constant(vars, RingElem::rat(n, d))
    }

    pub fn var(vars: &Arc<VarSet>, name: &str) -> Poly {
        Poly::try_var(vars, name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_var(vars: &Arc<VarSet>, name: &str) -> Result<Poly, RingError> {
        let i = vars.index(name).ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        let mut m: Mono = SmallVec::from_elem(0, vars.len());
        m[i] = 1;
        Ok(Poly { vars: vars.clone(), terms: vec![(m, RingElem::one())] })
    }

    /// Builds from arbitrary (monomial, coefficient) pairs, merging and sorting.
    pub fn from_terms(vars: &Arc<VarSet>, terms: impl IntoIterator<Item = (Mono, RingElem)>) -> Poly {
        let mut acc: HashMap<Mono, RingElem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial length mismatch");
            if c.is_zero() {
                continue;
            }
            acc.entry(m).and_modify(|e| e.add_assign_ref(&c)).or_insert(c);
        }
        Poly::from_map(vars, acc)
    }

    fn from_map(vars: &Arc<VarSet>, acc: HashMap<Mono, RingElem>) -> Poly {
        let mut terms: Vec<(Mono, RingElem)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Poly { vars: vars.clone(), terms }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Mono, RingElem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|e| *e == 0))
    }

    pub fn constant_term(&self) -> RingElem {
        match self.terms.first() {
            Some((m, c)) if m.iter().all(|e| *e == 0) => c.clone(),
            _ => RingElem::zero(),
        }
    }

    pub fn as_constant(&self) -> Option<RingElem> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    /// Canonical form: sorted, distinct monomials, no zero coefficients.
    pub fn is_canonical(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0 < w[1].0)
            && self.terms.iter().all(|(m, c)| !c.is_zero() && c.is_canonical() && m.len() == self.vars.len())
    }

    pub fn recanonicalize(&self) -> Poly {
        Poly::from_terms(&self.vars, self.terms.iter().cloned())
    }

    fn check_vars(&self, o: &Poly) -> Result<(), RingError> {
        if same_vars(&self.vars, &o.vars) {
            Ok(())
        } else {
            Err(RingError::VarSetMismatch)
        }
    }

    pub fn checked_add(&self, o: &Poly) -> Result<Poly, RingError> {
        self.check_vars(o)?;
        let (a, b) = (&self.terms, &o.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a[i].1 + &b[j].1;
                    if !s.is_zero() {
                        terms.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a[i..]);
        terms.extend_from_slice(&b[j..]);
        Ok(Poly { vars: self.vars.clone(), terms })
    }

    pub fn checked_sub(&self, o: &Poly) -> Result<Poly, RingError> {
        self.checked_add(&o.neg())
    }

    pub fn checked_mul(&self, o: &Poly) -> Result<Poly, RingError> {
        self.check_vars(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Poly::zero(&self.vars));
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (a, ca) in &self.terms {
                terms.push((try_add_mono(a, m)?, ca * c));
            }
            // adding a fixed monomial preserves lex order
            return Ok(Poly { vars: self.vars.clone(), terms });
        }
        if self.terms.len() == 1 {
            return o.checked_mul(self);
        }
        let mut acc: HashMap<Mono, RingElem> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let m = try_add_mono(a, b)?;
                let c = ca * cb;
                acc.entry(m).and_modify(|e| e.add_assign_ref(&c)).or_insert(c);
            }
        }
        Ok(Poly::from_map(&self.vars, acc))
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.checked_add(o).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.checked_sub(o).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        self.checked_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn neg(&self) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &RingElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Poly {
        self.scale(&RingElem::int(n))
    }

    pub fn scale_rat(&self, n: i64, d: i64) -> Poly {
        self.scale(&RingElem::rat(n, d))
    }

    pub fn add_constant(&self, c: &RingElem) -> Poly {
        self.add(&Poly::constant(&self.vars, c.clone()))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplies by a single monomial with coefficient.
    pub fn mul_term(&self, m: &Mono, c: &RingElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(a, x)| (add_mono(a, m), x * c)).collect(),
        }
    }

    pub fn degree_in(&self, name: &str) -> Option<u16> {
        let i = self.vars.index(name)?;
        self.terms.iter().map(|(m, _)| m[i]).max()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.iter().map(|e| *e as u32).sum::<u32>()).max().unwrap_or(0)
    }

    pub fn derivative(&self, name: &str) -> Poly {
        let Some(i) = self.vars.index(name) else {
            return Poly::zero(&self.vars);
        };
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut m2 = m.clone();
                let e = m2[i];
                m2[i] -= 1;
                out.push((m2, c.scale_rat(&Rat::from_int(e as i64))));
            }
        }
        // order may change when one exponent drops; rebuild
        Poly::from_terms(&self.vars, out)
    }

    /// Simultaneous substitution into `target`. Unbound variables must
    /// exist in `target` under the same name.
    pub fn substitute_into(&self, bindings: &[(&str, Poly)], target: &Arc<VarSet>) -> Result<Poly, RingError> {
        let n = self.vars.len();
        let mut plan: Vec<Result<&Poly, usize>> = Vec::with_capacity(n);
        for i in 0..n {
            let name = self.vars.name(i);
            if let Some((_, p)) = bindings.iter().find(|(b, _)| *b == name) {
                if !same_vars(p.vars(), target) {
                    return Err(RingError::VarSetMismatch);
                }
                plan.push(Ok(p));
            } else {
                match target.index(name) {
                    Some(j) => plan.push(Err(j)),
                    None => return Err(RingError::UnboundVariable(name.to_string())),
                }
            }
        }
        let mut power_cache: Vec<Vec<Poly>> = vec![Vec::new(); n];
        let mut acc: HashMap<Mono, RingElem> = HashMap::new();
        for (m, c) in &self.terms {
            let mut base: Mono = SmallVec::from_elem(0, target.len());
            let mut factor = Poly::constant(target, c.clone());
            for i in 0..n {
                let e = m[i];
                if e == 0 {
                    continue;
                }
                match plan[i] {
                    Err(j) => base[j] = base[j].checked_add(e).ok_or(RingError::ExponentOverflow)?,
                    Ok(p) => {
                        let cache = &mut power_cache[i];
                        if cache.is_empty() {
                            cache.push(Poly::one(target));
                        }
                        while cache.len() <= e as usize {
                            let next = cache.last().unwrap().checked_mul(p)?;
                            cache.push(next);
                        }
                        factor = factor.checked_mul(&cache[e as usize])?;
                    }
                }
            }
            for (fm, fc) in factor.terms {
                let mm = try_add_mono(&fm, &base)?;
                acc.entry(mm).and_modify(|x| x.add_assign_ref(&fc)).or_insert(fc);
            }
        }
        Ok(Poly::from_map(target, acc))
    }

    /// Substitution staying in the same variable set.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Poly {
        let vars = self.vars.clone();
        self.substitute_into(bindings, &vars).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Re-expresses the polynomial over another variable set containing all used variables.
    pub fn embed(&self, target: &Arc<VarSet>) -> Result<Poly, RingError> {
        if same_vars(&self.vars, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = (0..self.vars.len()).map(|i| target.index(self.vars.name(i))).collect();
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut mm: Mono = SmallVec::from_elem(0, target.len());
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => mm[j] = *e,
                    None => return Err(RingError::UnboundVariable(self.vars.name(i).to_string())),
                }
            }
            out.push((mm, c.clone()));
        }
        Ok(Poly::from_terms(target, out))
    }

    /// Splits into a polynomial in `outer` variables whose coefficients are
    /// polynomials in the remaining ones (over `inner` var set).
    pub fn split(&self, outer: &[&str], inner: &Arc<VarSet>) -> Vec<(Vec<(usize, u16)>, Poly)> {
        let outer_idx: Vec<usize> = outer.iter().filter_map(|n| self.vars.index(n)).collect();
        let mut groups: HashMap<Vec<(usize, u16)>, Vec<(Mono, RingElem)>> = HashMap::new();
        let inner_map: Vec<Option<usize>> = (0..self.vars.len())
            .map(|i| if outer_idx.contains(&i) { None } else { inner.index(self.vars.name(i)) })
            .collect();
        for (m, c) in &self.terms {
            let key: Vec<(usize, u16)> = outer_idx.iter().filter(|i| m[**i] > 0).map(|i| (*i, m[*i])).collect();
            let mut mm: Mono = SmallVec::from_elem(0, inner.len());
            for (i, e) in m.iter().enumerate() {
                if *e > 0 && !outer_idx.contains(&i) {
                    let j = inner_map[i].unwrap_or_else(|| panic!("variable {} missing from inner set", self.vars.name(i)));
                    mm[j] = *e;
                }
            }
            groups.entry(key).or_default().push((mm, c.clone()));
        }
        let mut out: Vec<(Vec<(usize, u16)>, Poly)> =
            groups.into_iter().map(|(k, t)| (k, Poly::from_terms(inner, t))).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Evaluates with every variable bound to a complex number; π is taken numerically.
    pub fn eval_c64(&self, values: &[(&str, (f64, f64))]) -> (f64, f64) {
        let vals: Vec<(f64, f64)> = (0..self.vars.len())
            .map(|i| {
                let n = self.vars.name(i);
                values.iter().find(|(k, _)| *k == n).map(|(_, v)| *v).unwrap_or((f64::NAN, f64::NAN))
            })
            .collect();
        let mut re = 0.0;
        let mut im = 0.0;
        for (m, c) in &self.terms {
            let (mut a, mut b) = c.to_c64();
            for (i, e) in m.iter().enumerate() {
                for _ in 0..*e {
                    let (x, y) = vals[i];
                    let na = a * x - b * y;
                    b = a * y + b * x;
                    a = na;
                }
            }
            re += a;
            im += b;
        }
        (re, im)
    }

    /// Exact evaluation of all variables at Gaussian rationals (π stays symbolic).
    pub fn eval_exact(&self, values: &[(&str, Gauss)]) -> Result<RingElem, RingError> {
        let empty = VarSet::of(&[]);
        let bindings: Vec<(&str, Poly)> = values
            .iter()
            .map(|(n, g)| (*n, Poly::constant(&empty, RingElem::from_gauss(g.clone()))))
            .collect();
        let p = self.substitute_into(&bindings, &empty)?;
        Ok(p.constant_term())
    }

    /// Coefficient list in a single variable (index = power), others kept.
    pub fn coefficients_in(&self, name: &str) -> Vec<Poly> {
        let Some(i) = self.vars.index(name) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(name).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Mono, RingElem)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut mm = m.clone();
            let e = mm[i] as usize;
            mm[i] = 0;
            buckets[e].push((mm, c.clone()));
        }
        buckets.into_iter().map(|t| Poly::from_terms(&self.vars, t)).collect()
    }

    pub fn is_free_of(&self, names: &[&str]) -> bool {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.vars.index(n)).collect();
        self.terms.iter().all(|(m, _)| idx.iter().all(|i| m[*i] == 0))
    }

    /// Canonical text: terms in descending lex order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| if *e == 1 { self.vars.name(i).to_string() } else { format!("{}^{}", self.vars.name(i), e) })
                .collect();
            let mut coef = c.to_string();
            let compound = c.terms().count() > 1;
            let negative = !compound && coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if compound {
                coef = format!("({coef})");
            }
            if mono.is_empty() {
                write!(f, "{coef}")?;
            } else if coef == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", coef, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Parses text like `4*(s1^2 + 2*s1*s2) - 16*pi*i*s2/3` into a polynomial.
pub fn parse_poly(vars: &Arc<VarSet>, text: &str) -> Result<Poly, RingError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { toks: tokens, pos: 0, vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(RingError::Parse(format!("trailing input in '{text}'")));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, RingError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| RingError::Parse(format!("number '{t}'")))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(RingError::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Arc<VarSet>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, RingError> {
        let mut acc = if self.eat('-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, RingError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                let c = d.as_constant().and_then(|c| c.as_gauss()).filter(|g| !g.is_zero());
                match c {
                    Some(g) => acc = acc.scale(&RingElem::from_gauss(g.inv())),
                    None => return Err(RingError::Parse("division by non-constant".into())),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly, RingError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    Ok(base.pow(n as u32))
                }
                _ => Err(RingError::Parse("exponent must be a literal integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, RingError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::int(self.vars, n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "i" => Ok(Poly::constant(self.vars, RingElem::i())),
                    "pi" => Ok(Poly::constant(self.vars, RingElem::pi())),
                    _ => Poly::try_var(self.vars, &name),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(RingError::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            other => Err(RingError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs() -> Arc<VarSet> {
        VarSet::of(&["s1", "s2", "u", "v", "L1", "L2"])
    }

    #[test]
    fn binomial_square() {
        let v = vs();
        let s = Poly::var(&v, "s1").add(&Poly::var(&v, "s2"));
        assert_eq!(s.pow(2), parse_poly(&v, "s1^2 + 2*s1*s2 + s2^2").unwrap());
    }

    #[test]
    fn times_zero() {
        let v = vs();
        let p = parse_poly(&v, "3*s1 - pi*i*u").unwrap();
        assert!(p.mul(&Poly::zero(&v)).is_zero());
    }

    #[test]
    fn substitution_examples() {
        let v = vs();
        let s1 = Poly::var(&v, "s1");
        let image = parse_poly(&v, "(v - 2*u - 1)/2").unwrap();
        assert_eq!(s1.substitute(&[("s1", image.clone())]), image);
        let s2 = parse_poly(&v, "(u-2)/2").unwrap();
        assert!(s2.substitute(&[("u", Poly::int(&v, 2))]).is_zero());
        let c1 = parse_poly(&v, "L1^2 + L2^2 - 5").unwrap();
        assert!(c1.substitute(&[("L1", Poly::int(&v, 2)), ("L2", Poly::int(&v, 1))]).is_zero());
    }

    #[test]
    fn mismatch_is_error() {
        let a = Poly::var(&vs(), "s1");
        let b = Poly::var(&VarSet::of(&["s1"]), "s1");
        assert!(matches!(a.checked_add(&b), Err(RingError::VarSetMismatch)));
    }

    #[test]
    fn exponent_overflow_is_error() {
        let v = VarSet::of(&["s1"]);
        let big = Poly::var(&v, "s1").pow(40000);
        assert!(matches!(big.checked_mul(&big), Err(RingError::ExponentOverflow)));
    }

    #[test]
    fn text_is_descending_lex() {
        let v = vs();
        let p = parse_poly(&v, "1 - s2 + 2*s1^2 + i*pi*u").unwrap();
        assert_eq!(p.to_string(), "2*s1^2 - s2 + i*pi*u + 1");
    }

    #[test]
    fn unbound_variable_clash() {
        let v = vs();
        let p = Poly::var(&v, "u");
        let target = VarSet::of(&["s1"]);
        assert!(matches!(p.substitute_into(&[], &target), Err(RingError::UnboundVariable(_))));
    }
}
