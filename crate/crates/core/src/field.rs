//! Arithmetic in `GF(p^n)`.
//!
//! Elements are polynomials over `GF(p)` of degree below `n`, reduced modulo
//! a fixed monic irreducible polynomial. Every element carries a stable index:
//! the base-`p` value of its coefficient vector with the constant term as the
//! least significant digit. So `0` has index 0, `1` has index 1 and, when
//! `n > 1`, the class of `x` has index `p`.
//!
//! The modulus is the lexicographically smallest monic irreducible polynomial
//! when the coefficients are read from the constant term upward. For `q = 4`
//! this is `x^2 + x + 1`, and for `q = 8` it is `x^3 + x + 1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{bail, Result};

/// Largest field order accepted by [`Field::new`].
pub const MAX_ORDER: u32 = 1024;

/// Fields up to this order get full addition, multiplication and inverse
/// tables.
pub const TABLE_LIMIT: u32 = 256;

/// An element of a [`Field`], identified by its index in `0..q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl core::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

/// Arithmetic context for `GF(q)`, `q = p^n`. Immutable once built.
#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// Returns `(p, n)` with `q = p^n` when `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

impl Field {
    /// Builds `GF(q)`.
    ///
    /// Fails with a parameter error when `q` is not a prime power and with a
    /// resource error when `q` exceeds [`MAX_ORDER`].
    pub fn new(q: u32) -> Result<Field> {
        let Some((p, n)) = prime_power(q) else {
            bail!(Parameter, "field order {q} is not a prime power");
        };
        if q > MAX_ORDER {
            bail!(Resource, "field order {q} exceeds the limit {MAX_ORDER}");
        }
        let modulus = smallest_irreducible(p, n);
        let mut field = Field {
            p,
            n,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Monic modulus, constant term first, `n + 1` coefficients.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The element with the given index, if it is below `q`.
    pub fn element(&self, index: u32) -> Option<FieldElement> {
        (index < self.q).then_some(FieldElement(index))
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    /// Element built from a coefficient vector (constant term first).
    /// Missing high coefficients count as zero; entries are reduced mod `p`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        debug_assert!(coeffs.len() <= self.n as usize);
        let idx = coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c % self.p);
        FieldElement(idx)
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let mut out = vec![0; self.n as usize];
        let mut v = x.0;
        for c in out.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        out
    }

    /// The class of the polynomial `x`. For prime fields the modulus is `x`
    /// itself and this is zero.
    pub fn generator_x(&self) -> FieldElement {
        if self.n == 1 {
            FieldElement(0)
        } else {
            FieldElement(self.p)
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if let Some(t) = &self.tables {
            return FieldElement(t.add[(a.0 * self.q + b.0) as usize] as u32);
        }
        self.add_slow(a, b)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let mut v = a.0;
        let mut out = 0;
        let mut place = 1;
        while v > 0 {
            let d = v % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            v /= self.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if let Some(t) = &self.tables {
            return FieldElement(t.mul[(a.0 * self.q + b.0) as usize] as u32);
        }
        self.mul_slow(a, b)
    }

    /// Multiplicative inverse. Fails with a domain error on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            bail!(Domain, "zero has no multiplicative inverse");
        }
        if let Some(t) = &self.tables {
            return Ok(FieldElement(t.inv[a.0 as usize] as u32));
        }
        Ok(self.pow(a, u64::from(self.q) - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != FieldElement::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Smallest-index element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> FieldElement {
        self.elements()
            .skip(1)
            .find(|&a| self.multiplicative_order(a) == Some(self.q - 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// The Suzuki endomorphism `x ↦ x^(2^(e+1))` of `GF(2^(2e+1))`, `e ≥ 1`.
    ///
    /// Applying it twice gives the Frobenius square `x ↦ x^2`.
    pub fn suzuki_sigma(&self, x: FieldElement) -> Result<FieldElement> {
        let e = self.suzuki_exponent()?;
        Ok(self.pow(x, 1u64 << (e + 1)))
    }

    /// `e` such that `q = 2^(2e+1)` with `e ≥ 1`.
    pub fn suzuki_exponent(&self) -> Result<u32> {
        if self.p != 2 || self.n.is_multiple_of(2) || self.n < 3 {
            bail!(
                Parameter,
                "Suzuki fields have order 2^(2e+1) with e >= 1, got {}",
                self.q
            );
        }
        Ok((self.n - 1) / 2)
    }

    fn add_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            place *= self.p;
            x /= self.p;
            y /= self.p;
        }
        FieldElement(out)
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let n = self.n as usize;
        let p = self.p;
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u32; 2 * n];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // x^n ≡ -(m_0 + m_1 x + ... + m_{n-1} x^{n-1})
        for d in (n..2 * n).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (k, &m) in self.modulus[..n].iter().enumerate() {
                let t = (c * m) % p;
                prod[d - n + k] = (prod[d - n + k] + p - t) % p;
            }
        }
        self.from_coeffs(&prod[..n])
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        let mut inv = vec![0u16; q];
        for a in 0..self.q {
            for b in 0..self.q {
                let (fa, fb) = (FieldElement(a), FieldElement(b));
                add[a as usize * q + b as usize] = self.add_slow(fa, fb).0 as u16;
                let m = self.mul_slow(fa, fb).0;
                mul[a as usize * q + b as usize] = m as u16;
                if m == 1 {
                    inv[a as usize] = b as u16;
                }
            }
        }
        Tables { add, mul, inv }
    }
}

/// Remainder of `num` modulo the monic `den` over `GF(p)`; both constant
/// term first.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (k, &c) in den.iter().enumerate() {
                r[shift + k] = (r[shift + k] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `t` (constant term least significant).
fn monic_from_index(t: u32, deg: u32, p: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(deg as usize + 1);
    let mut v = t;
    for _ in 0..deg {
        c.push(v % p);
        v /= p;
    }
    c.push(1);
    c
}

/// Irreducibility by trial division against every monic polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for t in 0..p.pow(d) {
            let f = monic_from_index(t, d, p);
            if poly_rem(poly, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `n` over `GF(p)`,
/// comparing coefficient sequences from the constant term upward.
fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    let count = p.pow(n);
    for t in 0..count {
        // c_0 is the most significant digit of t in this ordering
        let mut c = vec![0u32; n as usize + 1];
        let mut v = t;
        for k in (0..n as usize).rev() {
            c[k] = v % p;
            v /= p;
        }
        c[n as usize] = 1;
        if is_irreducible(&c, p) {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: &Field, i: u32) -> FieldElement {
        f.element(i).unwrap()
    }

    #[test]
    fn gf4_alpha_squared_is_alpha_plus_one() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let alpha = f.generator_x();
        assert_eq!(alpha.index(), 2);
        assert_eq!(f.mul(alpha, alpha).index(), 3);
        assert_eq!(f.add(alpha, FieldElement::ONE).index(), 3);
    }

    #[test]
    fn gf4_inverse_of_alpha_by_table_scan() {
        let f = Field::new(4).unwrap();
        let alpha = el(&f, 2);
        let scanned: Vec<_> = f
            .elements()
            .filter(|&b| f.mul(alpha, b) == FieldElement::ONE)
            .collect();
        assert_eq!(scanned, vec![el(&f, 3)]);
        assert_eq!(f.inv(alpha).unwrap().index(), 3);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::new(5).unwrap();
        assert_eq!(f5.add(el(&f5, 3), el(&f5, 4)).index(), 2);
        assert_eq!(f5.mul(el(&f5, 2), el(&f5, 3)).index(), 1);
        let f7 = Field::new(7).unwrap();
        assert_eq!(f7.inv(el(&f7, 3)).unwrap().index(), 5);
        assert_eq!(f7.sub(el(&f7, 2), el(&f7, 5)).index(), 4);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(matches!(Field::new(6), Err(crate::Error::Parameter(_))));
        assert!(matches!(Field::new(1), Err(crate::Error::Parameter(_))));
        assert!(matches!(Field::new(0), Err(crate::Error::Parameter(_))));
        assert!(matches!(Field::new(2048), Err(crate::Error::Resource(_))));
        assert!(matches!(Field::new(1031), Err(crate::Error::Resource(_))));
    }

    #[test]
    fn inverse_of_zero_is_a_domain_error() {
        let f = Field::new(9).unwrap();
        assert!(matches!(f.inv(FieldElement::ZERO), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn frobenius_fixes_everything() {
        for q in [2, 3, 4, 8, 9, 25, 27, 32, 49, 512, 625, 1024] {
            let f = Field::new(q).unwrap();
            for x in f.elements().step_by(((q / 64) as usize).max(1)) {
                assert_eq!(f.pow(x, q as u64), x, "q={q} x={x}");
            }
        }
    }

    #[test]
    fn gf8_modulus_and_sigma() {
        let f = Field::new(8).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1, 1]);
        assert_eq!(f.suzuki_exponent().unwrap(), 1);
        for x in f.elements() {
            let s = f.suzuki_sigma(x).unwrap();
            assert_eq!(s, f.pow(x, 4));
            assert_eq!(f.suzuki_sigma(s).unwrap(), f.mul(x, x));
        }
        assert_eq!(f.suzuki_sigma(FieldElement::ZERO).unwrap(), FieldElement::ZERO);
        assert_eq!(f.suzuki_sigma(FieldElement::ONE).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn sigma_rejects_non_suzuki_fields() {
        for q in [2, 4, 16, 9, 64] {
            let f = Field::new(q).unwrap();
            assert!(f.suzuki_sigma(FieldElement::ONE).is_err(), "q={q}");
        }
        let f = Field::new(32).unwrap();
        for x in f.elements() {
            let s = f.suzuki_sigma(x).unwrap();
            assert_eq!(f.suzuki_sigma(s).unwrap(), f.mul(x, x));
        }
    }

    #[test]
    fn field_axioms_exhaustive_up_to_16() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, FieldElement::ZERO), a);
                assert_eq!(f.mul(a, FieldElement::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tables_agree_with_direct_polynomial_arithmetic() {
        for q in [49, 81, 128, 243, 256] {
            let f = Field::new(q).unwrap();
            for a in f.elements().step_by(7) {
                for b in f.elements().step_by(5) {
                    assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                    assert_eq!(f.add(a, b), f.add_slow(a, b));
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 64, 125, 128, 343, 512, 729, 1024] {
            let f = Field::new(q).unwrap();
            let g = f.primitive_element();
            assert_eq!(f.multiplicative_order(g), Some(q - 1), "q={q}");
        }
    }

    #[test]
    fn modulus_is_irreducible_and_minimal() {
        for q in [4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 128, 256, 1024] {
            let f = Field::new(q).unwrap();
            let m = f.modulus();
            assert_eq!(m.len() as u32, f.degree() + 1);
            assert_eq!(*m.last().unwrap(), 1);
            assert!(is_irreducible(m, f.characteristic()));
        }
        // x^2 + 1 splits over GF(5) since 2^2 = -1; x^2 + x + 1 does not
        assert_eq!(Field::new(25).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(9).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn deterministic_tables() {
        let a = Field::new(27).unwrap();
        let b = Field::new(27).unwrap();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.mul(x, y), b.mul(x, y));
            }
        }
    }

    #[test]
    fn coefficient_index_bijection() {
        let f = Field::new(27).unwrap();
        for x in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(x)), x);
        }
        assert_eq!(f.coeffs(FieldElement::ONE), vec![1, 0, 0]);
    }

    proptest::proptest! {
        #![proptest_config(proptest::test_runner::Config {
            rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed_f1e1d),
            failure_persistence: None,
            ..proptest::test_runner::Config::default()
        })]
        #[test]
        fn large_field_axioms(q in proptest::sample::select(vec![289u32, 512, 625, 729, 961, 1024]),
                              a in 0u32..1024, b in 0u32..1024, c in 0u32..1024) {
            let f = Field::new(q).unwrap();
            let (a, b, c) = (el(&f, a % q), el(&f, b % q), el(&f, c % q));
            proptest::prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            proptest::prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            proptest::prop_assert_eq!(f.sub(f.add(a, b), b), a);
            if !a.is_zero() {
                proptest::prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            }
        }
    }
}
