//! Sparse multivariate polynomials over `F_p` in the coefficient
//! variables `a_0..a_d`, used as a from-scratch expansion oracle for
//! the determinant certificates. The term map is keyed by `Monomial`,
//! whose `Ord` is the certificate order, so the last key is the leading
//! monomial.

use std::collections::BTreeMap;

use cartier_core::certificate::{MinorSpec, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub p: u64,
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, u64>,
}

impl MPoly {
    pub fn zero(p: u64, d: u64) -> Self {
        MPoly {
            p,
            nvars: d as usize + 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u64, d: u64, c: u64) -> Self {
        let mut poly = Self::zero(p, d);
        if c % p != 0 {
            poly.terms.insert(Monomial::one(d), c % p);
        }
        poly
    }

    pub fn var(p: u64, d: u64, t: u64) -> Self {
        let mut poly = Self::zero(p, d);
        poly.terms.insert(Monomial::var(d, t), 1);
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, u64)> {
        self.terms.last_key_value().map(|(m, &c)| (m, c))
    }

    fn insert(&mut self, m: Monomial, c: u64) {
        use std::collections::btree_map::Entry;
        let c = c % self.p;
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                let v = (*e.get() + c) % self.p;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.p, other.p);
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.insert(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = Self::zero(self.p, (self.nvars - 1) as u64);
        for (m, &c) in &self.terms {
            out.terms.insert(m.clone(), self.p - c);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.p, other.p);
        let mut out = Self::zero(self.p, (self.nvars - 1) as u64);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.insert(ma.mul(mb), ca * cb % self.p);
            }
        }
        out
    }

    /// Every term has the given total degree and weight.
    pub fn is_homogeneous(&self, degree: u64, weight: u64) -> bool {
        self.terms
            .keys()
            .all(|m| m.degree() == degree && m.weight() == weight)
    }
}

/// Coefficients of `f^λ` for the generic `f = a_0 + a_1 x + .. + a_d x^d`:
/// `powers[λ][n] = b_{λ,n}` as a polynomial in `a_0..a_d`.
pub fn generic_powers(p: u64, d: u64, max_lambda: u64) -> Vec<Vec<MPoly>> {
    let f: Vec<MPoly> = (0..=d).map(|t| MPoly::var(p, d, t)).collect();
    let mut powers = vec![vec![MPoly::constant(p, d, 1)]];
    for _ in 1..=max_lambda {
        let prev = powers.last().unwrap();
        let mut next = vec![MPoly::zero(p, d); prev.len() + d as usize];
        for (i, a) in prev.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in f.iter().enumerate() {
                next[i + j] = next[i + j].add(&a.mul(b));
            }
        }
        powers.push(next);
    }
    powers
}

fn permutation_sign(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Fully expanded `det(N)` over `F_p[a_0..a_d]` by the permutation sum,
/// using only [`generic_powers`] for the entries.
pub fn symbolic_det(minor: &MinorSpec, powers: &[Vec<MPoly>]) -> MPoly {
    let p = minor.p();
    let d = minor.d();
    let k = minor.size();
    let mut det = MPoly::zero(p, d);
    let mut perm: Vec<usize> = (0..k).collect();
    expand(minor, powers, &mut perm, 0, &mut det);
    return det;

    fn entry(minor: &MinorSpec, powers: &[Vec<MPoly>], r: usize, c: usize) -> Option<MPoly> {
        let row = minor.rows()[r];
        let col = minor.cols()[c];
        let n = (minor.p() * row.i) as i128 - col as i128;
        if n < 0 {
            return None;
        }
        let row_polys = &powers[row.lambda as usize];
        match row_polys.get(n as usize) {
            Some(poly) if !poly.is_zero() => Some(poly.clone()),
            _ => None,
        }
    }

    fn expand(
        minor: &MinorSpec,
        powers: &[Vec<MPoly>],
        perm: &mut Vec<usize>,
        fixed: usize,
        det: &mut MPoly,
    ) {
        if fixed == perm.len() {
            let mut product = MPoly::constant(minor.p(), minor.d(), 1);
            for (r, &c) in perm.iter().enumerate() {
                match entry(minor, powers, r, c) {
                    Some(e) => product = product.mul(&e),
                    None => return,
                }
            }
            if !permutation_sign(perm) {
                product = product.neg();
            }
            *det = det.add(&product);
            return;
        }
        for i in fixed..perm.len() {
            perm.swap(fixed, i);
            // prune permutations through structurally-zero entries
            if entry(minor, powers, fixed, perm[fixed]).is_some() {
                expand(minor, powers, perm, fixed + 1, det);
            }
            perm.swap(fixed, i);
        }
    }
}
