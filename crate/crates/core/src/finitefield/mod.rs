//! Finite fields 𝔽_p, 𝔽_{p²}, 𝔽_{p⁴} for small odd primes.
//!
//! Tower: 𝔽_{p²} = 𝔽_p[ω]/(ω² − c) with `c` the least quadratic non-residue
//! mod p, and 𝔽_{p⁴} = 𝔽_{p²}[θ]/(θ² − ν) with `ν` the first non-square of
//! 𝔽_{p²} in coordinate order. An element stores up to four coordinates
//! `(a₀, a₁, a₂, a₃)` meaning `(a₀ + a₁ω) + (a₂ + a₃ω)θ`; unused coordinates
//! are zero, so 𝔽_p ⊂ 𝔽_{p²} ⊂ 𝔽_{p⁴} are nested by coordinate prefix.
//!
//! Field contexts are built once per `(p, d)` and shared read-only.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use rand::Rng;

use crate::exact::integer::is_prime_u64;
use crate::exact::{Field, Ring};

/// Largest characteristic accepted; products of two residues fit in `u64`.
pub const MAX_PRIME: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("unsupported field: {0}")]
    Unsupported(String),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Shared data for one of 𝔽_p, 𝔽_{p²}, 𝔽_{p⁴}.
#[derive(Debug)]
pub struct FiniteField {
    p: u64,
    d: u8,
    q: u64,
    /// ω² = c in 𝔽_{p²}.
    c: u64,
    /// θ² = ν in 𝔽_{p⁴}; coordinates of ν in 𝔽_{p²}.
    nu: [u64; 2],
    /// A fixed non-square of this field, for Tonelli–Shanks.
    nonsquare: [u64; 4],
    /// `squares[i]` iff the `i`-th element is a square; built on first use.
    squares: OnceLock<Vec<bool>>,
}

/// Fields up to this size get a square-class lookup table.
const SQUARE_TABLE_LIMIT: u64 = 1 << 22;

type Cache = Mutex<HashMap<(u64, u8), &'static FiniteField>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl FiniteField {
    /// The field with `p^d` elements, `d ∈ {1, 2, 4}`.
    pub fn get(p: u64, d: u8) -> Result<&'static FiniteField, FieldError> {
        if !(3..=MAX_PRIME).contains(&p) || !is_prime_u64(p) {
            return Err(FieldError::Unsupported(format!("p = {p} must be an odd prime ≤ {MAX_PRIME}")));
        }
        if !matches!(d, 1 | 2 | 4) {
            return Err(FieldError::Unsupported(format!("extension degree {d} not in {{1, 2, 4}}")));
        }
        let mut map = cache().lock().expect("field cache poisoned");
        if let Some(ctx) = map.get(&(p, d)) {
            return Ok(ctx);
        }
        let ctx: &'static FiniteField = Box::leak(Box::new(Self::build(p, d)));
        map.insert((p, d), ctx);
        Ok(ctx)
    }

    fn build(p: u64, d: u8) -> FiniteField {
        let c = (2..p).find(|&x| pow_mod(x, (p - 1) / 2, p) == p - 1).expect("non-residue exists");
        let mut ctx = FiniteField {
            p,
            d,
            q: p.pow(d as u32),
            c,
            nu: [0, 0],
            nonsquare: [0; 4],
            squares: OnceLock::new(),
        };
        if d == 4 {
            let f2 = FiniteField { d: 2, q: p * p, ..ctx_clone(&ctx) };
            let nu = (0..f2.q)
                .map(|i| f2.element_at_unchecked(i))
                .find(|x| !x.is_zero() && !euler_is_square(x))
                .expect("𝔽_{p²} has non-squares");
            ctx.nu = [nu.coords[0], nu.coords[1]];
        }
        // The search reads `ctx` through a temporary copy, since elements need a
        // context to multiply.
        let tmp = ctx_clone(&ctx);
        let ns = (1..tmp.q)
            .map(|i| tmp.element_at_unchecked(i))
            .find(|x| !euler_is_square(x))
            .expect("odd q has non-squares");
        ctx.nonsquare = ns.coords;
        ctx
    }

    fn element_at_unchecked(&self, mut i: u64) -> FqElem<'_> {
        let mut coords = [0u64; 4];
        for slot in coords.iter_mut().take(self.d as usize) {
            *slot = i % self.p;
            i /= self.p;
        }
        FqElem { ctx: self, coords }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.d
    }

    /// Number of elements.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The non-residue `c` with `ω² = c`.
    pub fn nonresidue(&self) -> u64 {
        self.c
    }

    /// Coordinates of `ν ∈ 𝔽_{p²}` with `θ² = ν` (meaningful for `d = 4`).
    pub fn theta_square(&self) -> [u64; 2] {
        self.nu
    }
}

fn ctx_clone(f: &FiniteField) -> FiniteField {
    FiniteField { p: f.p, d: f.d, q: f.q, c: f.c, nu: f.nu, nonsquare: f.nonsquare, squares: OnceLock::new() }
}

fn euler_is_square(x: &FqElem<'_>) -> bool {
    x.is_zero() || x.pow_u64((x.ctx.q - 1) / 2).is_one_elem()
}

impl FiniteField {
    pub fn zero(&'static self) -> FqElem<'static> {
        FqElem { ctx: self, coords: [0; 4] }
    }

    pub fn one(&'static self) -> FqElem<'static> {
        self.from_int(1)
    }

    pub fn from_int(&'static self, n: i64) -> FqElem<'static> {
        let r = n.rem_euclid(self.p as i64) as u64;
        FqElem { ctx: self, coords: [r, 0, 0, 0] }
    }

    /// Element from coordinates; missing coordinates are zero, extra ones must be zero.
    pub fn from_coords(&'static self, coords: &[i64]) -> Result<FqElem<'static>, FieldError> {
        if coords.len() > self.d as usize && coords[self.d as usize..].iter().any(|&c| c != 0) {
            return Err(FieldError::Parse(format!("too many coordinates for 𝔽_{}", self.q)));
        }
        let mut out = [0u64; 4];
        for (slot, &c) in out.iter_mut().zip(coords) {
            *slot = c.rem_euclid(self.p as i64) as u64;
        }
        Ok(FqElem { ctx: self, coords: out })
    }

    /// `ω`, with `ω² = c` (requires `d ≥ 2`).
    pub fn omega(&'static self) -> FqElem<'static> {
        assert!(self.d >= 2, "ω lives in 𝔽_(p²)");
        FqElem { ctx: self, coords: [0, 1, 0, 0] }
    }

    /// `θ`, with `θ² = ν` (requires `d = 4`).
    pub fn theta(&'static self) -> FqElem<'static> {
        assert!(self.d == 4, "θ lives in 𝔽_(p⁴)");
        FqElem { ctx: self, coords: [0, 0, 1, 0] }
    }

    /// The `i`-th element in coordinate order (`a₀` varies fastest), `0 ≤ i < q`.
    pub fn element_at(&'static self, i: u64) -> FqElem<'static> {
        assert!(i < self.q);
        self.element_at_unchecked(i)
    }

    pub fn elements(&'static self) -> impl Iterator<Item = FqElem<'static>> {
        (0..self.q).map(move |i| self.element_at_unchecked(i))
    }

    pub fn random<R: Rng + ?Sized>(&'static self, rng: &mut R) -> FqElem<'static> {
        self.element_at_unchecked(rng.gen_range(0..self.q))
    }

    /// Parses comma-separated coordinates, e.g. `"1,4"` for `1 + 4ω`.
    pub fn parse(&'static self, s: &str) -> Result<FqElem<'static>, FieldError> {
        let coords = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| FieldError::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        self.from_coords(&coords)
    }
}

/// An element of 𝔽_{p^d}; `Copy`, tied to its field context.
#[derive(Clone, Copy)]
pub struct FqElem<'f> {
    ctx: &'f FiniteField,
    coords: [u64; 4],
}

impl PartialEq for FqElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.p == other.ctx.p && self.ctx.d == other.ctx.d && self.coords == other.coords
    }
}

impl Eq for FqElem<'_> {}

impl std::hash::Hash for FqElem<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.ctx.p, self.ctx.d, self.coords).hash(state);
    }
}

impl fmt::Debug for FqElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}({})", self.ctx.q, self)
    }
}

/// Comma-separated coordinates, `d` of them.
impl fmt::Display for FqElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords[..self.ctx.d as usize].iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

// Arithmetic in 𝔽_{p²} on coordinate pairs.
fn mul2(a: [u64; 2], b: [u64; 2], c: u64, p: u64) -> [u64; 2] {
    let r0 = (a[0] * b[0] + (a[1] * b[1] % p) * c) % p;
    let r1 = (a[0] * b[1] + a[1] * b[0]) % p;
    [r0, r1]
}

fn add2(a: [u64; 2], b: [u64; 2], p: u64) -> [u64; 2] {
    [(a[0] + b[0]) % p, (a[1] + b[1]) % p]
}

fn sub2(a: [u64; 2], b: [u64; 2], p: u64) -> [u64; 2] {
    [(a[0] + p - b[0]) % p, (a[1] + p - b[1]) % p]
}

fn inv2(a: [u64; 2], c: u64, p: u64) -> [u64; 2] {
    // (a₀ + a₁ω)⁻¹ = (a₀ − a₁ω) / (a₀² − c a₁²)
    let n = (a[0] * a[0] % p + p - (a[1] * a[1] % p) * c % p) % p;
    let ni = pow_mod(n, p - 2, p);
    [a[0] * ni % p, (p - a[1]) % p * ni % p]
}

impl<'f> FqElem<'f> {
    pub fn field(&self) -> &'f FiniteField {
        self.ctx
    }

    /// The `d` coordinates.
    pub fn coords(&self) -> &[u64] {
        &self.coords[..self.ctx.d as usize]
    }

    /// Position in coordinate order; inverse of [`FiniteField::element_at`].
    pub fn index(&self) -> u64 {
        self.coords[..self.ctx.d as usize].iter().rev().fold(0, |acc, &c| acc * self.ctx.p + c)
    }

    fn same_field(&self, other: &Self) {
        assert!(
            self.ctx.p == other.ctx.p && self.ctx.d == other.ctx.d,
            "mixed fields 𝔽_{} and 𝔽_{}",
            self.ctx.q,
            other.ctx.q
        );
    }

    fn with(&self, coords: [u64; 4]) -> Self {
        FqElem { ctx: self.ctx, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0; 4]
    }

    fn is_one_elem(&self) -> bool {
        self.coords == [1, 0, 0, 0]
    }

    fn mul_elem(&self, o: &Self) -> Self {
        self.same_field(o);
        let p = self.ctx.p;
        let (a, b) = (&self.coords, &o.coords);
        match self.ctx.d {
            1 => self.with([a[0] * b[0] % p, 0, 0, 0]),
            2 => {
                let r = mul2([a[0], a[1]], [b[0], b[1]], self.ctx.c, p);
                self.with([r[0], r[1], 0, 0])
            }
            _ => {
                let c = self.ctx.c;
                let (x0, x1) = ([a[0], a[1]], [a[2], a[3]]);
                let (y0, y1) = ([b[0], b[1]], [b[2], b[3]]);
                // (x₀ + x₁θ)(y₀ + y₁θ) = x₀y₀ + ν x₁y₁ + (x₀y₁ + x₁y₀)θ
                let lo = add2(mul2(x0, y0, c, p), mul2(self.ctx.nu, mul2(x1, y1, c, p), c, p), p);
                let hi = add2(mul2(x0, y1, c, p), mul2(x1, y0, c, p), p);
                self.with([lo[0], lo[1], hi[0], hi[1]])
            }
        }
    }

    pub fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.with([1, 0, 0, 0]);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_elem(&base);
            }
            base = base.mul_elem(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let p = self.ctx.p;
        let c = self.ctx.c;
        let a = &self.coords;
        Ok(match self.ctx.d {
            1 => self.with([pow_mod(a[0], p - 2, p), 0, 0, 0]),
            2 => {
                let r = inv2([a[0], a[1]], c, p);
                self.with([r[0], r[1], 0, 0])
            }
            _ => {
                let (x0, x1) = ([a[0], a[1]], [a[2], a[3]]);
                // (x₀ + x₁θ)⁻¹ = (x₀ − x₁θ) / (x₀² − ν x₁²)
                let n = sub2(mul2(x0, x0, c, p), mul2(self.ctx.nu, mul2(x1, x1, c, p), c, p), p);
                let ni = inv2(n, c, p);
                let lo = mul2(x0, ni, c, p);
                let hi = mul2(sub2([0, 0], x1, p), ni, c, p);
                self.with([lo[0], lo[1], hi[0], hi[1]])
            }
        })
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(&self) -> bool {
        euler_is_square(self)
    }

    /// Same answer as [`FqElem::is_square`], read from a per-field table of
    /// squares when the field is small enough to tabulate.
    pub fn is_square_fast(&self) -> bool {
        if self.ctx.q > SQUARE_TABLE_LIMIT {
            return self.is_square();
        }
        let table = self.ctx.squares.get_or_init(|| {
            let mut t = vec![false; self.ctx.q as usize];
            for i in 0..self.ctx.q {
                let y = self.ctx.element_at_unchecked(i);
                t[(y.mul_elem(&y)).index() as usize] = true;
            }
            t
        });
        table[self.index() as usize]
    }

    /// A square root, if one exists (Tonelli–Shanks against the field's fixed
    /// non-square). Which of the two roots is returned is deterministic.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        let q = self.ctx.q;
        let mut s = 0;
        let mut t = q - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let z = self.with(self.ctx.nonsquare);
        let mut m = s;
        let mut c = z.pow_u64(t);
        let mut tt = self.pow_u64(t);
        let mut r = self.pow_u64(t.div_ceil(2));
        while !tt.is_one_elem() {
            let mut i = 0;
            let mut probe = tt;
            while !probe.is_one_elem() {
                probe = probe.mul_elem(&probe);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = b.mul_elem(&b);
            }
            m = i;
            c = b.mul_elem(&b);
            tt = tt.mul_elem(&c);
            r = r.mul_elem(&b);
        }
        Some(r)
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self) -> Self {
        self.pow_u64(self.ctx.p)
    }

    /// Image under the inclusion into the field with `p^d` elements (`d` a
    /// multiple of this field's degree).
    pub fn embed(&self, target: &'f FiniteField) -> Result<Self, FieldError> {
        if target.p != self.ctx.p || !target.d.is_multiple_of(self.ctx.d) {
            return Err(FieldError::Unsupported(format!("no embedding 𝔽_{} → 𝔽_{}", self.ctx.q, target.q)));
        }
        Ok(FqElem { ctx: target, coords: self.coords })
    }

    /// Preimage in the subfield `target`, if the element lies in it.
    pub fn descend(&self, target: &'f FiniteField) -> Option<Self> {
        if target.p != self.ctx.p || !self.ctx.d.is_multiple_of(target.d) {
            return None;
        }
        if self.coords[target.d as usize..].iter().any(|&c| c != 0) {
            return None;
        }
        Some(FqElem { ctx: target, coords: self.coords })
    }
}

impl Add for FqElem<'_> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.same_field(&o);
        let p = self.ctx.p;
        let mut r = [0u64; 4];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = (self.coords[i] + o.coords[i]) % p;
        }
        self.with(r)
    }
}

impl Neg for FqElem<'_> {
    type Output = Self;
    fn neg(self) -> Self {
        let p = self.ctx.p;
        self.with(self.coords.map(|c| (p - c) % p))
    }
}

impl Sub for FqElem<'_> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for FqElem<'_> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_elem(&o)
    }
}

impl Ring for FqElem<'_> {
    fn zero_like(&self) -> Self {
        self.with([0; 4])
    }
    fn one_like(&self) -> Self {
        self.with([1, 0, 0, 0])
    }
    fn is_zero(&self) -> bool {
        self.coords == [0; 4]
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn sub(&self, other: &Self) -> Self {
        *self - *other
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_elem(other)
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul_int(&self, n: i64) -> Self {
        let k = n.rem_euclid(self.ctx.p as i64) as u64;
        let p = self.ctx.p;
        self.with(self.coords.map(|c| c * k % p))
    }
    fn pow(&self, e: u64) -> Self {
        self.pow_u64(e)
    }
}

impl Field for FqElem<'_> {
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

/// Legendre symbol `(a | p)` for an odd prime `p`: 0, 1 or −1.
pub fn legendre(a: i64, p: u64) -> i8 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Square roots of `a` modulo an odd prime `p`, as least nonnegative residues in
/// ascending order (empty if `a` is a non-residue).
pub fn sqrt_mod_p(a: i64, p: u64) -> Vec<u64> {
    let r = a.rem_euclid(p as i64) as u64;
    (0..p).filter(|x| x * x % p == r).collect()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn basic_arithmetic() {
        let f5 = FiniteField::get(5, 1).unwrap();
        assert_eq!(f5.from_int(3) * f5.from_int(4), f5.from_int(2));
        let f7 = FiniteField::get(7, 1).unwrap();
        assert_eq!(f7.from_int(3).inverse().unwrap(), f7.from_int(5));
        assert_eq!(f7.zero().inverse(), Err(FieldError::DivisionByZero));
        let f25 = FiniteField::get(5, 2).unwrap();
        assert_eq!(f25.nonresidue(), 2);
        let w = f25.omega();
        assert_eq!(w * w, f25.from_int(2));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FiniteField::get(2, 1).is_err());
        assert!(FiniteField::get(9, 1).is_err());
        assert!(FiniteField::get(5, 3).is_err());
        assert!(FiniteField::get(MAX_PRIME + 1, 1).is_err());
    }

    #[test]
    fn squares_and_frobenius() {
        let f5 = FiniteField::get(5, 1).unwrap();
        assert!(!f5.from_int(2).is_square());
        assert!(f5.zero().is_square());
        let f25 = FiniteField::get(5, 2).unwrap();
        let w = f25.omega();
        assert_eq!(w.is_square(), w.pow_u64(12) == f25.one());
        assert_eq!(w.frobenius(), -w);
        for x in f25.elements() {
            assert_eq!(x.frobenius().frobenius(), x);
        }
    }

    #[test]
    fn inverses_in_every_degree() {
        for d in [1, 2, 4] {
            let f = FiniteField::get(3, d).unwrap();
            for x in f.elements().filter(|x| !x.is_zero()) {
                assert_eq!(x * x.inverse().unwrap(), f.one());
            }
        }
    }

    #[test]
    fn sqrt_roundtrip_and_tower() {
        for (p, d) in [(3, 4), (5, 2), (7, 4), (13, 1)] {
            let f = FiniteField::get(p, d).unwrap();
            let squares: HashSet<_> = f.elements().map(|y| y * y).collect();
            for x in f.elements() {
                assert_eq!(x.is_square_fast(), squares.contains(&x));
                match x.sqrt() {
                    Some(r) => assert_eq!(r * r, x),
                    None => assert!(!squares.contains(&x)),
                }
            }
        }
        let f9 = FiniteField::get(3, 2).unwrap();
        let f81 = FiniteField::get(3, 4).unwrap();
        let w = f9.omega().embed(f81).unwrap();
        assert_eq!(w * w, f81.from_int(f9.nonresidue() as i64));
        assert_eq!(w.descend(f9), Some(f9.omega()));
        assert_eq!(f81.theta().descend(f9), None);
    }

    #[test]
    fn parse_display_roundtrip() {
        let f = FiniteField::get(11, 4).unwrap();
        let x = f.parse("1,4,0,10").unwrap();
        assert_eq!(x.to_string(), "1,4,0,10");
        assert_eq!(f.parse(&x.to_string()).unwrap(), x);
        assert_eq!(f.element_at(x.index()), x);
        let f5 = FiniteField::get(5, 1).unwrap();
        assert!(f5.parse("1,1").is_err());
        assert_eq!(f5.parse("-1").unwrap(), f5.from_int(4));
    }

    #[test]
    fn legendre_and_roots() {
        assert_eq!(legendre(2, 5), -1);
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(14, 7), 0);
        assert_eq!(sqrt_mod_p(2, 7), vec![3, 4]);
        assert!(sqrt_mod_p(2, 5).is_empty());
    }
}
