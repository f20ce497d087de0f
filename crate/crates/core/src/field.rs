//! Exact arithmetic in prime fields `F_p` and extensions `F_{p^m}`.
//!
//! An extension field is a polynomial quotient `F_p[t]/(g)` with `g`
//! monic irreducible of degree `m`. The modulus is found by a seeded
//! search over random monic candidates, so the same `(p, m, seed)`
//! always yields the same field; there is no dependency on external
//! polynomial tables.
//!
//! Contexts and elements are immutable after construction, so they can
//! be shared freely across threads. All randomness enters through
//! explicit `Rng` arguments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::{smallvec, SmallVec};

use crate::error::Error;

type Coeffs = SmallVec<[u64; 4]>;

/// Largest supported characteristic. Keeps every product of the form
/// `p^2 * d` comfortably inside 128-bit intermediates.
pub const MAX_P: u64 = 1 << 20;

/// Element of `F_{p^m}`: a reduced coefficient vector of length `m`
/// on the power basis `1, t, .., t^{m-1}`, entries in `[0, p)`.
///
/// Elements carry no back-reference to their field; they are only
/// meaningful together with the [`Fq`] context that created them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqElem {
    coeffs: Coeffs,
}

impl FqElem {
    pub fn coeff_vec(&self) -> &[u64] {
        &self.coeffs
    }
}

/// Deterministic primality test by trial division (desk-scale `p`).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut f = 3;
    while f * f <= p {
        if p % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

#[inline]
fn s_add(p: u64, a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn s_sub(p: u64, a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn s_mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn s_inv(p: u64, a: u64) -> u64 {
    // extended Euclid on integers; a != 0 mod p
    debug_assert!(a % p != 0);
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p (little-endian coefficient vectors), used for
// modulus construction and inversion.
// ---------------------------------------------------------------------------

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_deg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = s_add(p, out[i + j], s_mul(p, x, y));
        }
    }
    out
}

/// Quotient and remainder of `a` by `b` (`b` nonzero, not necessarily monic).
fn poly_divmod(p: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead_inv = s_inv(p, b[db]);
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    let mut quot = vec![0u64; rem.len().saturating_sub(db)];
    while let Some(da) = poly_deg(&rem) {
        if da < db {
            break;
        }
        let c = s_mul(p, rem[da], lead_inv);
        quot[da - db] = c;
        for k in 0..=db {
            let t = s_mul(p, c, b[k]);
            rem[da - db + k] = s_sub(p, rem[da - db + k], t);
        }
        poly_trim(&mut rem);
    }
    (quot, rem)
}

fn poly_rem(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    poly_divmod(p, a, b).1
}

fn poly_mulmod(p: u64, a: &[u64], b: &[u64], g: &[u64]) -> Vec<u64> {
    poly_rem(p, &poly_mul(p, a, b), g)
}

fn poly_powmod(p: u64, base: &[u64], mut e: u128, g: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(p, base, g);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(p, &acc, &b, g);
        }
        e >>= 1;
        if e > 0 {
            b = poly_mulmod(p, &b, &b, g);
        }
    }
    acc
}

fn poly_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    while !r1.is_empty() {
        let rem = poly_rem(p, &r0, &r1);
        r0 = r1;
        r1 = rem;
    }
    // normalize monic
    if let Some(d) = poly_deg(&r0) {
        let inv = s_inv(p, r0[d]);
        for c in &mut r0 {
            *c = s_mul(p, *c, inv);
        }
    }
    r0
}

/// Irreducibility of a monic `g` of degree `m >= 1`: `g` is irreducible
/// iff it shares no factor with `t^{p^k} - t` for any `k <= m/2`, since
/// any proper factorization contains an irreducible factor of degree
/// `<= m/2` and `t^{p^k} - t` is the product of all irreducibles of
/// degree dividing `k`.
fn poly_is_irreducible(p: u64, g: &[u64]) -> bool {
    let m = poly_deg(g).expect("zero polynomial");
    if m == 1 {
        return true;
    }
    let mut h = vec![0u64, 1]; // t
    for _ in 1..=m / 2 {
        h = poly_powmod(p, &h, p as u128, g);
        let mut diff = h.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = s_sub(p, diff[1], 1);
        poly_trim(&mut diff);
        if diff.is_empty() {
            return false; // g divides t^{p^k} - t
        }
        let gcd = poly_gcd(p, &diff, g);
        if poly_deg(&gcd) != Some(0) {
            return false;
        }
    }
    true
}

fn mix64(mut x: u64) -> u64 {
    // splitmix64 finalizer
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

// ---------------------------------------------------------------------------
// Field context
// ---------------------------------------------------------------------------

/// The field `F_{p^m} = F_p[t]/(g)`.
///
/// All element operations go through the context: `field.mul(&a, &b)`,
/// `field.inv(&a)`, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fq {
    p: u64,
    m: usize,
    /// Lower coefficients `g_0..g_{m-1}` of the monic modulus
    /// `g = t^m + g_{m-1} t^{m-1} + .. + g_0`. For `m = 1` this is `[0]`
    /// and elements are plain residues mod `p`.
    modulus: Vec<u64>,
}

impl Fq {
    /// Constructs `F_{p^m}` with a deterministically chosen irreducible
    /// modulus. The seeded search draws random monic candidates and
    /// keeps the first irreducible one.
    pub fn new(p: u64, m: usize, seed: u64) -> Result<Self, Error> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if p > MAX_P {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::BadExtensionDegree);
        }
        let modulus = if m == 1 {
            vec![0]
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(mix64(seed ^ mix64(p ^ mix64(m as u64))));
            loop {
                let mut g: Vec<u64> = (0..m).map(|_| rng.gen_range(0..p)).collect();
                g.push(1);
                if poly_is_irreducible(p, &g) {
                    g.pop();
                    break g;
                }
            }
        };
        Ok(Fq { p, m, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `p^m`, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        (0..self.m).fold(1u128, |acc, _| acc.saturating_mul(self.p as u128))
    }

    /// Lower coefficients `g_0..g_{m-1}` of the monic modulus.
    pub fn modulus_lower(&self) -> &[u64] {
        &self.modulus
    }

    /// Full modulus `g_0..g_{m-1}, 1` (ascending, monic).
    pub fn modulus_full(&self) -> Vec<u64> {
        let mut g = self.modulus.clone();
        g.push(1);
        g
    }

    /// Human-readable modulus, e.g. `t^2 + 2*t + 1`.
    pub fn modulus_string(&self) -> String {
        let g = self.modulus_full();
        let mut parts: Vec<String> = Vec::new();
        for (k, &c) in g.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match k {
                0 => format!("{c}"),
                1 if c == 1 => "t".to_string(),
                1 => format!("{c}*t"),
                _ if c == 1 => format!("t^{k}"),
                _ => format!("{c}*t^{k}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    pub fn zero(&self) -> FqElem {
        FqElem {
            coeffs: smallvec![0; self.m],
        }
    }

    pub fn one(&self) -> FqElem {
        self.from_int(1)
    }

    /// The constant `n mod p`.
    pub fn from_int(&self, n: u64) -> FqElem {
        let mut coeffs: Coeffs = smallvec![0; self.m];
        coeffs[0] = n % self.p;
        FqElem { coeffs }
    }

    /// The constant `n mod p`, accepting negative input.
    pub fn from_i64(&self, n: i64) -> FqElem {
        self.from_int(n.rem_euclid(self.p as i64) as u64)
    }

    /// Element from up to `m` coefficients (shorter vectors are padded
    /// with zeros; entries are reduced mod `p`).
    pub fn from_coeffs(&self, v: &[u64]) -> Result<FqElem, Error> {
        if v.len() > self.m {
            return Err(Error::CoeffLen {
                expected: self.m,
                got: v.len(),
            });
        }
        let mut coeffs: Coeffs = smallvec![0; self.m];
        for (i, &c) in v.iter().enumerate() {
            coeffs[i] = c % self.p;
        }
        Ok(FqElem { coeffs })
    }

    pub fn is_zero(&self, x: &FqElem) -> bool {
        x.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| s_add(self.p, x, y))
            .collect();
        FqElem { coeffs }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| s_sub(self.p, x, y))
            .collect();
        FqElem { coeffs }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        let coeffs = a.coeffs.iter().map(|&x| s_sub(self.p, 0, x)).collect();
        FqElem { coeffs }
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p;
        let m = self.m;
        if m == 1 {
            return FqElem {
                coeffs: smallvec![s_mul(p, a.coeffs[0], b.coeffs[0])],
            };
        }
        let mut prod: SmallVec<[u64; 8]> = smallvec![0; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = s_add(p, prod[i + j], s_mul(p, x, y));
            }
        }
        // reduce by the monic modulus: t^m = -(g_{m-1} t^{m-1} + .. + g_0)
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (t, &gt) in self.modulus.iter().enumerate() {
                prod[k - m + t] = s_sub(p, prod[k - m + t], s_mul(p, c, gt));
            }
        }
        prod.truncate(m);
        FqElem {
            coeffs: Coeffs::from_slice(&prod),
        }
    }

    /// Multiplication by the scalar `c mod p`.
    pub fn scale(&self, x: &FqElem, c: u64) -> FqElem {
        let c = c % self.p;
        let coeffs = x.coeffs.iter().map(|&v| s_mul(self.p, v, c)).collect();
        FqElem { coeffs }
    }

    pub fn pow(&self, x: &FqElem, mut e: u128) -> FqElem {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: &FqElem) -> Option<FqElem> {
        if self.is_zero(x) {
            return None;
        }
        if self.m == 1 {
            return Some(FqElem {
                coeffs: smallvec![s_inv(self.p, x.coeffs[0])],
            });
        }
        // extended Euclid in F_p[t] against the modulus
        let p = self.p;
        let mut r0 = self.modulus_full();
        let mut r1: Vec<u64> = x.coeffs.to_vec();
        poly_trim(&mut r1);
        let mut t0: Vec<u64> = Vec::new();
        let mut t1: Vec<u64> = vec![1];
        while poly_deg(&r1) > Some(0) {
            let (q, rem) = poly_divmod(p, &r0, &r1);
            r0 = std::mem::replace(&mut r1, rem);
            let qt1 = poly_mul(p, &q, &t1);
            let mut tnew = t0.clone();
            tnew.resize(tnew.len().max(qt1.len()), 0);
            for (k, &c) in qt1.iter().enumerate() {
                tnew[k] = s_sub(p, tnew[k], c);
            }
            poly_trim(&mut tnew);
            t0 = std::mem::replace(&mut t1, tnew);
        }
        let c = *r1.first().expect("nonzero element coprime to the modulus");
        let cinv = s_inv(p, c);
        let mut out: Coeffs = smallvec![0; self.m];
        for (k, &v) in t1.iter().enumerate() {
            out[k] = s_mul(p, v, cinv);
        }
        Some(FqElem { coeffs: out })
    }

    /// The Frobenius `x -> x^p`.
    pub fn frobenius(&self, x: &FqElem) -> FqElem {
        self.pow(x, self.p as u128)
    }

    /// The unique `y` with `y^p = x`, namely `x^{p^{m-1}}`; inverse of
    /// [`Fq::frobenius`]. On the prime field this is the identity.
    pub fn pth_root(&self, x: &FqElem) -> FqElem {
        let mut y = x.clone();
        for _ in 1..self.m {
            y = self.frobenius(&y);
        }
        y
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FqElem {
        let coeffs = (0..self.m).map(|_| rng.gen_range(0..self.p)).collect();
        FqElem { coeffs }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FqElem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    /// All field elements in coefficient-lexicographic order (constant
    /// coefficient varies fastest). Intended for small fields only.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        let order = self.order();
        (0..order).map(move |mut idx| {
            let mut coeffs: Coeffs = smallvec![0; self.m];
            for c in coeffs.iter_mut() {
                *c = (idx % self.p as u128) as u64;
                idx /= self.p as u128;
            }
            FqElem { coeffs }
        })
    }

    /// Evaluates a polynomial with `F_p` coefficients (ascending) at `x`.
    fn eval_lifted(&self, poly: &[u64], x: &FqElem) -> FqElem {
        let mut acc = self.zero();
        for &c in poly.iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.from_int(c));
        }
        acc
    }
}

/// First root (in the order of [`Fq::elements`]) of `sub`'s modulus
/// inside `big`. A root exists exactly when `sub.m` divides `big.m` and
/// the characteristics agree; it determines the embedding used by
/// [`embed`]. Brute-force search, for small fields.
pub fn embedding_root(sub: &Fq, big: &Fq) -> Option<FqElem> {
    if sub.p != big.p {
        return None;
    }
    if sub.m == 1 {
        return Some(big.zero());
    }
    let g = sub.modulus_full();
    big.elements()
        .find(|r| big.is_zero(&big.eval_lifted(&g, r)))
}

/// Image of `x` in `big` under the embedding sending `sub`'s generator
/// to `root`.
pub fn embed(sub: &Fq, big: &Fq, root: &FqElem, x: &FqElem) -> FqElem {
    debug_assert_eq!(sub.p, big.p);
    let mut acc = big.zero();
    for &c in x.coeffs.iter().rev() {
        acc = big.mul(&acc, root);
        acc = big.add(&acc, &big.from_int(c));
    }
    acc
}
