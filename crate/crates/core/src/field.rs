//! Arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Multiplication and inversion go through discrete-log / antilog tables built
//! from a primitive polynomial. Addition is XOR and needs no tables, so it is
//! also available on [`FieldElement`] directly.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An element of GF(2^m) in polynomial-basis bit representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[repr(transparent)]
pub struct FieldElement(pub u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Characteristic-2 addition (and subtraction).
    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ other.0)
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let s = s.strip_prefix("0x").unwrap_or(s);
        u16::from_str_radix(s, 16)
            .map(FieldElement)
            .map_err(|e| Error::Parse(format!("bad hex symbol {s:?}: {e}")))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

struct Tables {
    m: u32,
    primitive_poly: u32,
    /// log[0] is unused.
    log: Vec<u32>,
    /// Antilog table, doubled so that log(a) + log(b) never needs a reduction.
    exp: Vec<u16>,
}

/// The field GF(2^m) together with its defining primitive polynomial.
///
/// Cloning is cheap; the lookup tables are shared.
#[derive(Clone)]
pub struct Field {
    tables: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:#x}", self.m(), self.primitive_poly())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.m() == other.m() && self.primitive_poly() == other.primitive_poly()
    }
}

impl Eq for Field {}

/// A primitive polynomial for each supported degree, bit-encoded.
pub fn default_primitive_poly(m: u32) -> Option<u32> {
    Some(match m {
        2 => 0x7,
        3 => 0xb,
        4 => 0x13,
        5 => 0x25,
        6 => 0x43,
        7 => 0x89,
        8 => 0x11d,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805,
        12 => 0x1053,
        13 => 0x201b,
        14 => 0x4443,
        15 => 0x8003,
        16 => 0x1002d,
        _ => return None,
    })
}

impl Field {
    /// Builds GF(2^m) from a bit-encoded polynomial of degree m.
    ///
    /// Primitivity is established by walking the powers of x and checking
    /// that the cycle through the nonzero elements has full length 2^m - 1.
    pub fn new(m: u32, primitive_poly: u32) -> Result<Field> {
        if !(2..=16).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let not_primitive = Error::NotPrimitive {
            m,
            poly: primitive_poly,
        };
        if primitive_poly >> m != 1 {
            return Err(not_primitive);
        }
        let q = 1usize << m;
        let order = q - 1;
        let mut log = vec![u32::MAX; q];
        let mut exp = vec![0u16; 2 * order];
        let mut x: u32 = 1;
        for (i, e) in exp.iter_mut().enumerate().take(order) {
            if x == 0 || log[x as usize] != u32::MAX {
                // cycle closed early, or x divides the polynomial
                return Err(not_primitive);
            }
            log[x as usize] = i as u32;
            *e = x as u16;
            x <<= 1;
            if x & (1 << m) != 0 {
                x ^= primitive_poly;
            }
        }
        if x != 1 {
            return Err(not_primitive);
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        log[0] = 0;
        Ok(Field {
            tables: Arc::new(Tables {
                m,
                primitive_poly,
                log,
                exp,
            }),
        })
    }

    /// GF(2^m) with the built-in default primitive polynomial.
    pub fn with_default_poly(m: u32) -> Result<Field> {
        let poly = default_primitive_poly(m).ok_or(Error::DegreeOutOfRange(m))?;
        Field::new(m, poly)
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.tables.m
    }

    #[inline]
    pub fn primitive_poly(&self) -> u32 {
        self.tables.primitive_poly
    }

    /// Number of field elements, 2^m.
    #[inline]
    pub fn size(&self) -> usize {
        1usize << self.tables.m
    }

    /// Order of the multiplicative group, 2^m - 1.
    #[inline]
    pub fn order(&self) -> usize {
        self.size() - 1
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        (a.0 as usize) < self.size()
    }

    pub fn element(&self, value: u16) -> Result<FieldElement> {
        let a = FieldElement(value);
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::InvalidParameters(format!(
                "{value:#x} is not an element of GF(2^{})",
                self.m()
            )))
        }
    }

    /// The generator alpha = x.
    pub fn alpha(&self) -> FieldElement {
        FieldElement(self.tables.exp[1])
    }

    /// alpha^i for any integer i.
    pub fn alpha_pow(&self, i: i64) -> FieldElement {
        let order = self.order() as i64;
        FieldElement(self.tables.exp[i.rem_euclid(order) as usize])
    }

    /// Discrete logarithm base alpha; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.tables.log[a.0 as usize])
        }
    }

    #[inline]
    pub(crate) fn log_unchecked(&self, a: FieldElement) -> u32 {
        self.tables.log[a.0 as usize]
    }

    /// Antilog lookup for exponents below 2(2^m - 1).
    #[inline]
    pub(crate) fn exp_unchecked(&self, i: u32) -> FieldElement {
        FieldElement(self.tables.exp[i as usize])
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let t = &self.tables;
        FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let t = &self.tables;
        let order = self.order() as u32;
        Ok(FieldElement(
            t.exp[((order - t.log[a.0 as usize]) % order) as usize],
        ))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if a.is_zero() {
            return Ok(FieldElement::ZERO);
        }
        let t = &self.tables;
        let order = self.order() as u32;
        let e = t.log[a.0 as usize] + order - t.log[b.0 as usize];
        Ok(FieldElement(t.exp[e as usize]))
    }

    /// a^e with a^0 = 1 (including 0^0).
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let order = self.order() as u64;
        let l = self.tables.log[a.0 as usize] as u64;
        FieldElement(self.tables.exp[((l * (e % order)) % order) as usize])
    }

    /// Serialized as `m:primitive_poly_hex`.
    pub fn spec_string(&self) -> String {
        format!("{}:{:x}", self.m(), self.primitive_poly())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let (m, poly) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected m:poly_hex, got {s:?}")))?;
        let m: u32 = m
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad extension degree {m:?}: {e}")))?;
        let poly = u32::from_str_radix(poly.trim().trim_start_matches("0x"), 16)
            .map_err(|e| Error::Parse(format!("bad polynomial {poly:?}: {e}")))?;
        Field::new(m, poly)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}
