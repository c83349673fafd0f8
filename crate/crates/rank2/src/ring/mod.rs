//! Base rings: `Z/n`, Galois fields, finite products, univariate quotients,
//! and the quadratic integer rings `Z[sqrt(d)]`.
//!
//! All finite constructors expose exhaustive element enumeration in a fixed
//! canonical order (lexicographic on the canonical encodings), so that orbit
//! representatives and reports are reproducible run to run.

mod hom;
mod parse;

pub use hom::RingHom;
pub use parse::parse_ring_spec;

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

/// Largest |d| accepted by the `zsqrt(d)` constructor.
pub const ZSQRT_MAX_D: i64 = 1000;

/// Abstract syntax of a ring description.
///
/// Values of this type are canonical: polynomial coefficients are reduced
/// (mod p for `Gf`, mod the characteristic of the base for `Quot`) and
/// moduli are monic. [`Ring::from_spec`] validates and canonicalizes raw
/// trees, so hand-built specs never need to be pre-reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// The ring `Z/n`, `n >= 2`.
    Zmod(u64),
    /// The field with `p^k` elements, presented as `(Z/p)[t]/(modulus)`.
    /// `modulus` lists coefficients low-to-high degree.
    Gf { p: u64, k: u32, modulus: Vec<u64> },
    /// A finite product of rings, componentwise operations.
    Prod(Vec<RingSpec>),
    /// `base[t]/(modulus)` for a monic modulus of degree >= 1 with
    /// coefficients in the prime subring of `base`.
    Quot { base: Box<RingSpec>, modulus: Vec<u64> },
    /// The quadratic integer ring `Z[sqrt(d)]`, `d` squarefree.
    ZSqrt(i64),
}

impl RingSpec {
    /// Canonical text form; round-trips through [`parse_ring_spec`].
    pub fn to_text(&self) -> String {
        match self {
            RingSpec::Zmod(n) => format!("zmod({n})"),
            RingSpec::Gf { p, k, modulus } => {
                format!("gf({p},{k},{})", fmt_int_poly(modulus))
            }
            RingSpec::Prod(parts) => {
                let inner: Vec<String> = parts.iter().map(|s| s.to_text()).collect();
                format!("prod({})", inner.join(","))
            }
            RingSpec::Quot { base, modulus } => {
                format!("quot({},{})", base.to_text(), fmt_int_poly(modulus))
            }
            RingSpec::ZSqrt(d) => format!("zsqrt({d})"),
        }
    }
}

fn fmt_int_poly(coeffs: &[u64]) -> String {
    let inner: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(","))
}

impl std::fmt::Display for RingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A ring element in canonical encoding.
///
/// * `Int(r)` — residue `0 <= r < n` in `Z/n`.
/// * `Vec(cs)` — coefficient vector (low-to-high, fixed length) for `Gf` and
///   `Quot`, or the component tuple for `Prod`.
/// * `Pair(m, n)` — the element `m + n*sqrt(d)` of `Z[sqrt(d)]`.
///
/// Two elements of the same ring are equal iff their encodings are equal.
/// The derived `Ord` agrees with the canonical enumeration order on finite
/// rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElem {
    Int(u64),
    Vec(Vec<RingElem>),
    Pair(i64, i64),
}

impl RingElem {
    /// Nested-integer-array JSON encoding.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            RingElem::Int(r) => serde_json::json!(r),
            RingElem::Vec(parts) => {
                serde_json::Value::Array(parts.iter().map(|e| e.to_json()).collect())
            }
            RingElem::Pair(m, n) => serde_json::json!([m, n]),
        }
    }

    /// Compact text form used in tables and CSV cells.
    pub fn to_compact_string(&self) -> String {
        self.to_json().to_string()
    }
}

/// Prime residue characteristics of a ring (see [`Ring::residue_characteristics`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResidueChars {
    /// Finite ring: the finite set of primes `p` with `p * 1` not a unit.
    Finite(BTreeSet<u64>),
    /// `Z[sqrt(d)]`: no prime is a unit.
    AllPrimes,
}

/// Internal uniform representation; `Gf` and `Quot` share the polynomial
/// arithmetic, with `Gf` flagged as a field.
enum Repr {
    Zmod {
        n: u64,
    },
    Poly {
        base: Ring,
        /// Monic modulus as reduced base elements, low-to-high. Length deg+1.
        modulus: Vec<RingElem>,
        deg: usize,
        field: bool,
        /// For fields: p^k - 2, the inversion exponent.
        inv_exp: u64,
    },
    Prod {
        comps: Vec<Ring>,
    },
    ZSqrt {
        d: i64,
    },
}

struct RingInner {
    spec: RingSpec,
    repr: Repr,
    order: Option<u64>,
    characteristic: u64,
    /// Lazy inverse table for finite non-field quotients: index -> inverse index.
    inv_table: OnceLock<Vec<Option<u64>>>,
}

/// A validated, immutable ring. Cheap to clone; safe to share across threads.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}
impl Eq for Ring {}

impl std::fmt::Debug for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ring({})", self.0.spec.to_text())
    }
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0.spec.to_text())
    }
}

impl Ring {
    /// Validates a spec tree and builds the ring. Rejects `Zmod(n)` with
    /// `n < 2`, non-prime `p`, reducible `Gf` moduli, non-monic `Quot`
    /// moduli, infinite constituents of `Prod`/`Quot`, and non-squarefree
    /// `d`.
    pub fn from_spec(spec: RingSpec) -> Result<Ring> {
        match spec {
            RingSpec::Zmod(n) => {
                if n < 2 {
                    return Err(Error::Semantic(format!("zmod({n}): n >= 2 required")));
                }
                Ok(Ring(Arc::new(RingInner {
                    spec: RingSpec::Zmod(n),
                    repr: Repr::Zmod { n },
                    order: Some(n),
                    characteristic: n,
                    inv_table: OnceLock::new(),
                })))
            }
            RingSpec::Gf { p, k, modulus } => {
                if !is_prime(p) {
                    return Err(Error::Semantic(format!("gf: {p} is not prime")));
                }
                if k == 0 {
                    return Err(Error::Semantic("gf: extension degree k >= 1 required".into()));
                }
                let base = Ring::from_spec(RingSpec::Zmod(p))?;
                // Reduce mod p, require degree exactly k, normalize monic.
                let mut cs: Vec<u64> = modulus.iter().map(|c| c % p).collect();
                while cs.last() == Some(&0) {
                    cs.pop();
                }
                if cs.len() != k as usize + 1 {
                    return Err(Error::Semantic(format!(
                        "gf: modulus must have degree exactly {k} over Z/{p}"
                    )));
                }
                let lead = *cs.last().unwrap();
                if lead != 1 {
                    let inv = mod_inverse(lead, p).expect("nonzero residue mod prime");
                    for c in cs.iter_mut() {
                        *c = mulmod(*c, inv, p);
                    }
                }
                if !poly_irreducible_mod_p(&cs, p) {
                    return Err(Error::Semantic(format!(
                        "gf: modulus {} is reducible over Z/{p}",
                        fmt_int_poly(&cs)
                    )));
                }
                let order = p
                    .checked_pow(k)
                    .ok_or_else(|| Error::Semantic("gf: p^k overflows".into()))?;
                let modulus_elems: Vec<RingElem> = cs.iter().map(|&c| RingElem::Int(c)).collect();
                Ok(Ring(Arc::new(RingInner {
                    spec: RingSpec::Gf { p, k, modulus: cs },
                    repr: Repr::Poly {
                        base,
                        modulus: modulus_elems,
                        deg: k as usize,
                        field: true,
                        inv_exp: order - 2,
                    },
                    order: Some(order),
                    characteristic: p,
                    inv_table: OnceLock::new(),
                })))
            }
            RingSpec::Prod(parts) => {
                if parts.is_empty() {
                    return Err(Error::Semantic("prod: at least one component required".into()));
                }
                let comps: Vec<Ring> = parts
                    .into_iter()
                    .map(Ring::from_spec)
                    .collect::<Result<_>>()?;
                let mut order: u64 = 1;
                let mut characteristic: u64 = 1;
                for c in &comps {
                    let co = c
                        .order()
                        .ok_or_else(|| Error::Semantic("prod: components must be finite".into()))?;
                    order = order
                        .checked_mul(co)
                        .ok_or_else(|| Error::Semantic("prod: order overflows".into()))?;
                    characteristic = lcm(characteristic, c.characteristic());
                }
                let spec = RingSpec::Prod(comps.iter().map(|c| c.spec().clone()).collect());
                Ok(Ring(Arc::new(RingInner {
                    spec,
                    repr: Repr::Prod { comps },
                    order: Some(order),
                    characteristic,
                    inv_table: OnceLock::new(),
                })))
            }
            RingSpec::Quot { base, modulus } => {
                let base = Ring::from_spec(*base)?;
                let base_order = base
                    .order()
                    .ok_or_else(|| Error::Semantic("quot: base must be finite".into()))?;
                let ch = base.characteristic();
                let mut cs: Vec<u64> = modulus.iter().map(|c| c % ch).collect();
                while cs.last() == Some(&0) {
                    cs.pop();
                }
                if cs.len() < 2 {
                    return Err(Error::Semantic(
                        "quot: modulus must have degree >= 1".into(),
                    ));
                }
                if *cs.last().unwrap() != 1 {
                    return Err(Error::Semantic("quot: modulus must be monic".into()));
                }
                let deg = cs.len() - 1;
                let modulus_elems: Vec<RingElem> =
                    cs.iter().map(|&c| base.int(c as i64)).collect();
                let order = base_order
                    .checked_pow(deg as u32)
                    .ok_or_else(|| Error::Semantic("quot: order overflows".into()))?;
                let spec = RingSpec::Quot {
                    base: Box::new(base.spec().clone()),
                    modulus: cs,
                };
                Ok(Ring(Arc::new(RingInner {
                    spec,
                    repr: Repr::Poly {
                        base,
                        modulus: modulus_elems,
                        deg,
                        field: false,
                        inv_exp: 0,
                    },
                    order: Some(order),
                    characteristic: ch,
                    inv_table: OnceLock::new(),
                })))
            }
            RingSpec::ZSqrt(d) => {
                if d == 0 || d == 1 {
                    return Err(Error::Semantic(format!(
                        "zsqrt({d}): d must be squarefree and different from 0, 1"
                    )));
                }
                if d.unsigned_abs() as i64 > ZSQRT_MAX_D {
                    return Err(Error::Semantic(format!(
                        "zsqrt({d}): |d| <= {ZSQRT_MAX_D} required"
                    )));
                }
                if !is_squarefree(d) {
                    return Err(Error::Semantic(format!("zsqrt({d}): d must be squarefree")));
                }
                Ok(Ring(Arc::new(RingInner {
                    spec: RingSpec::ZSqrt(d),
                    repr: Repr::ZSqrt { d },
                    order: None,
                    characteristic: 0,
                    inv_table: OnceLock::new(),
                })))
            }
        }
    }

    /// Parses the ring-spec grammar and builds the ring.
    pub fn parse(text: &str) -> Result<Ring> {
        Ring::from_spec(parse_ring_spec(text)?)
    }

    /// `Z/n`.
    pub fn zmod(n: u64) -> Ring {
        Ring::from_spec(RingSpec::Zmod(n)).expect("n >= 2")
    }

    /// `GF(p^k)` with the canonical modulus: the first monic irreducible of
    /// degree `k` over `Z/p` in lexicographic coefficient order.
    pub fn gf(p: u64, k: u32) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::Semantic(format!("gf: {p} is not prime")));
        }
        if k == 1 {
            return Ring::from_spec(RingSpec::Gf {
                p,
                k,
                modulus: vec![0, 1],
            });
        }
        let deg = k as usize;
        let count = p.checked_pow(k).ok_or_else(|| Error::Semantic("p^k overflows".into()))?;
        for idx in 0..count {
            let mut cs = vec![0u64; deg + 1];
            let mut rem = idx;
            for c in cs.iter_mut().take(deg) {
                *c = rem % p;
                rem /= p;
            }
            cs[deg] = 1;
            if poly_irreducible_mod_p(&cs, p) {
                return Ring::from_spec(RingSpec::Gf { p, k, modulus: cs });
            }
        }
        Err(Error::Internal(format!(
            "no irreducible of degree {k} over Z/{p} found"
        )))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    /// Number of elements, or `None` for `Z[sqrt(d)]`.
    pub fn order(&self) -> Option<u64> {
        self.0.order
    }

    pub fn is_finite(&self) -> bool {
        self.0.order.is_some()
    }

    /// Additive order of 1, or 0 for `Z[sqrt(d)]`.
    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    /// True when every nonzero element is a unit (finite rings only).
    pub fn is_field(&self) -> bool {
        match &self.0.repr {
            Repr::Zmod { n } => is_prime(*n),
            Repr::Poly { field, .. } => *field,
            Repr::Prod { comps } => comps.len() == 1 && comps[0].is_field(),
            Repr::ZSqrt { .. } => false,
        }
    }

    pub fn zero(&self) -> RingElem {
        match &self.0.repr {
            Repr::Zmod { .. } => RingElem::Int(0),
            Repr::Poly { base, deg, .. } => RingElem::Vec(vec![base.zero(); *deg]),
            Repr::Prod { comps } => RingElem::Vec(comps.iter().map(|c| c.zero()).collect()),
            Repr::ZSqrt { .. } => RingElem::Pair(0, 0),
        }
    }

    pub fn one(&self) -> RingElem {
        self.int(1)
    }

    /// The image of the integer `k` under `Z -> R`.
    pub fn int(&self, k: i64) -> RingElem {
        match &self.0.repr {
            Repr::Zmod { n } => RingElem::Int(k.rem_euclid(*n as i64) as u64),
            Repr::Poly { base, deg, .. } => {
                let mut v = vec![base.zero(); *deg];
                v[0] = base.int(k);
                RingElem::Vec(v)
            }
            Repr::Prod { comps } => RingElem::Vec(comps.iter().map(|c| c.int(k)).collect()),
            Repr::ZSqrt { .. } => RingElem::Pair(k, 0),
        }
    }

    /// `sqrt(d)` in `Z[sqrt(d)]`.
    pub fn sqrt_gen(&self) -> Result<RingElem> {
        match &self.0.repr {
            Repr::ZSqrt { .. } => Ok(RingElem::Pair(0, 1)),
            _ => Err(Error::Unsupported(format!("{self} has no sqrt generator"))),
        }
    }

    pub fn add(&self, x: &RingElem, y: &RingElem) -> RingElem {
        match (&self.0.repr, x, y) {
            (Repr::Zmod { n }, RingElem::Int(a), RingElem::Int(b)) => {
                RingElem::Int(addmod(*a, *b, *n))
            }
            (Repr::Poly { base, .. }, RingElem::Vec(a), RingElem::Vec(b)) => RingElem::Vec(
                a.iter().zip(b.iter()).map(|(u, v)| base.add(u, v)).collect(),
            ),
            (Repr::Prod { comps }, RingElem::Vec(a), RingElem::Vec(b)) => RingElem::Vec(
                comps
                    .iter()
                    .zip(a.iter().zip(b.iter()))
                    .map(|(c, (u, v))| c.add(u, v))
                    .collect(),
            ),
            (Repr::ZSqrt { .. }, RingElem::Pair(a, b), RingElem::Pair(c, d)) => {
                RingElem::Pair(a + c, b + d)
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn neg(&self, x: &RingElem) -> RingElem {
        match (&self.0.repr, x) {
            (Repr::Zmod { n }, RingElem::Int(a)) => RingElem::Int(if *a == 0 { 0 } else { n - a }),
            (Repr::Poly { base, .. }, RingElem::Vec(a)) => {
                RingElem::Vec(a.iter().map(|u| base.neg(u)).collect())
            }
            (Repr::Prod { comps }, RingElem::Vec(a)) => RingElem::Vec(
                comps.iter().zip(a.iter()).map(|(c, u)| c.neg(u)).collect(),
            ),
            (Repr::ZSqrt { .. }, RingElem::Pair(a, b)) => RingElem::Pair(-a, -b),
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn sub(&self, x: &RingElem, y: &RingElem) -> RingElem {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &RingElem, y: &RingElem) -> RingElem {
        match (&self.0.repr, x, y) {
            (Repr::Zmod { n }, RingElem::Int(a), RingElem::Int(b)) => {
                RingElem::Int(mulmod(*a, *b, *n))
            }
            (Repr::Poly { base, modulus, deg, .. }, RingElem::Vec(a), RingElem::Vec(b)) => {
                RingElem::Vec(poly_mulmod(base, a, b, modulus, *deg))
            }
            (Repr::Prod { comps }, RingElem::Vec(a), RingElem::Vec(b)) => RingElem::Vec(
                comps
                    .iter()
                    .zip(a.iter().zip(b.iter()))
                    .map(|(c, (u, v))| c.mul(u, v))
                    .collect(),
            ),
            (Repr::ZSqrt { d }, RingElem::Pair(a, b), RingElem::Pair(c, e)) => {
                RingElem::Pair(a * c + d * b * e, a * e + b * c)
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// `k * x` for an integer `k`.
    pub fn scale(&self, k: i64, x: &RingElem) -> RingElem {
        self.mul(&self.int(k), x)
    }

    pub fn is_zero(&self, x: &RingElem) -> bool {
        *x == self.zero()
    }

    /// True iff `x * y = 1` has a solution.
    pub fn is_unit(&self, x: &RingElem) -> bool {
        match (&self.0.repr, x) {
            (Repr::Zmod { n }, RingElem::Int(a)) => gcd(*a, *n) == 1,
            (Repr::Poly { field: true, .. }, _) => !self.is_zero(x),
            (Repr::Poly { field: false, .. }, _) => {
                self.inv_table()[self.index_of(x) as usize].is_some()
            }
            (Repr::Prod { comps }, RingElem::Vec(a)) => {
                comps.iter().zip(a.iter()).all(|(c, u)| c.is_unit(u))
            }
            (Repr::ZSqrt { d }, RingElem::Pair(m, n)) => {
                let norm = (*m as i128) * (*m as i128) - (*d as i128) * (*n as i128) * (*n as i128);
                norm == 1 || norm == -1
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// Multiplicative inverse; errors on non-units.
    pub fn inverse(&self, x: &RingElem) -> Result<RingElem> {
        match (&self.0.repr, x) {
            (Repr::Zmod { n }, RingElem::Int(a)) => {
                mod_inverse(*a, *n).map(RingElem::Int).ok_or(Error::NotAUnit)
            }
            (Repr::Poly { field: true, inv_exp, .. }, _) => {
                if self.is_zero(x) {
                    return Err(Error::NotAUnit);
                }
                Ok(self.pow(x, *inv_exp))
            }
            (Repr::Poly { field: false, .. }, _) => {
                match self.inv_table()[self.index_of(x) as usize] {
                    Some(j) => Ok(self.elem_at(j)),
                    None => Err(Error::NotAUnit),
                }
            }
            (Repr::Prod { comps }, RingElem::Vec(a)) => {
                let parts: Result<Vec<RingElem>> = comps
                    .iter()
                    .zip(a.iter())
                    .map(|(c, u)| c.inverse(u))
                    .collect();
                Ok(RingElem::Vec(parts?))
            }
            (Repr::ZSqrt { d }, RingElem::Pair(m, n)) => {
                let norm = (*m as i128) * (*m as i128) - (*d as i128) * (*n as i128) * (*n as i128);
                match norm {
                    1 => Ok(RingElem::Pair(*m, -*n)),
                    -1 => Ok(RingElem::Pair(-*m, *n)),
                    _ => Err(Error::NotAUnit),
                }
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    fn pow(&self, x: &RingElem, mut e: u64) -> RingElem {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn inv_table(&self) -> &Vec<Option<u64>> {
        self.0.inv_table.get_or_init(|| {
            let n = self.order().expect("inverse table requires a finite ring");
            let mut table = vec![None; n as usize];
            let one = self.one();
            for i in 0..n {
                if table[i as usize].is_some() {
                    continue;
                }
                let x = self.elem_at(i);
                for j in 0..n {
                    let y = self.elem_at(j);
                    if self.mul(&x, &y) == one {
                        table[i as usize] = Some(j);
                        table[j as usize] = Some(i);
                        break;
                    }
                }
            }
            table
        })
    }

    /// The element with the given canonical index (finite rings).
    pub fn elem_at(&self, idx: u64) -> RingElem {
        match &self.0.repr {
            Repr::Zmod { n } => {
                debug_assert!(idx < *n);
                RingElem::Int(idx)
            }
            Repr::Poly { base, deg, .. } => {
                let bo = base.order().expect("finite base");
                let mut rem = idx;
                let mut coeffs = vec![base.zero(); *deg];
                // mixed-radix decode, coefficient 0 most significant so that
                // index order equals lexicographic order on the encoding
                for (i, c) in coeffs.iter_mut().enumerate() {
                    let weight = bo.pow((*deg - 1 - i) as u32);
                    *c = base.elem_at(rem / weight);
                    rem %= weight;
                }
                RingElem::Vec(coeffs)
            }
            Repr::Prod { comps } => {
                let mut rem = idx;
                let mut parts = vec![RingElem::Int(0); comps.len()];
                let mut weights = vec![1u64; comps.len()];
                for i in (0..comps.len()).rev() {
                    weights[i] = if i + 1 < comps.len() {
                        weights[i + 1] * comps[i + 1].order().unwrap()
                    } else {
                        1
                    };
                }
                for (i, c) in comps.iter().enumerate() {
                    parts[i] = c.elem_at(rem / weights[i]);
                    rem %= weights[i];
                }
                RingElem::Vec(parts)
            }
            Repr::ZSqrt { .. } => panic!("elem_at on infinite ring"),
        }
    }

    /// Canonical index of an element (finite rings).
    pub fn index_of(&self, x: &RingElem) -> u64 {
        match (&self.0.repr, x) {
            (Repr::Zmod { .. }, RingElem::Int(a)) => *a,
            (Repr::Poly { base, .. }, RingElem::Vec(coeffs)) => {
                let bo = base.order().expect("finite base");
                coeffs.iter().fold(0, |acc, c| acc * bo + base.index_of(c))
            }
            (Repr::Prod { comps }, RingElem::Vec(parts)) => comps
                .iter()
                .zip(parts.iter())
                .fold(0, |acc, (c, u)| acc * c.order().unwrap() + c.index_of(u)),
            _ => panic!("index_of on infinite ring or foreign element"),
        }
    }

    /// All elements in canonical (lexicographic) order. Errors on
    /// `Z[sqrt(d)]`.
    pub fn elements(&self) -> Result<Vec<RingElem>> {
        let n = self
            .order()
            .ok_or_else(|| Error::Unsupported(format!("{self} is infinite: cannot enumerate")))?;
        Ok((0..n).map(|i| self.elem_at(i)).collect())
    }

    /// All units in canonical order.
    pub fn units(&self) -> Result<Vec<RingElem>> {
        Ok(self
            .elements()?
            .into_iter()
            .filter(|e| self.is_unit(e))
            .collect())
    }

    /// True iff `q` lies in the principal ideal `(p)`.
    ///
    /// Finite rings scan for a cofactor; `Z[sqrt(d)]` tests exact
    /// divisibility via the field norm.
    pub fn divides(&self, p: &RingElem, q: &RingElem) -> bool {
        match &self.0.repr {
            Repr::ZSqrt { d } => {
                let (pm, pn) = match p {
                    RingElem::Pair(m, n) => (*m as i128, *n as i128),
                    _ => panic!("element does not belong to {self}"),
                };
                let (qm, qn) = match q {
                    RingElem::Pair(m, n) => (*m as i128, *n as i128),
                    _ => panic!("element does not belong to {self}"),
                };
                let norm = pm * pm - (*d as i128) * pn * pn;
                if norm == 0 {
                    // p = 0 (d squarefree), which divides only 0.
                    return qm == 0 && qn == 0;
                }
                // q / p = q * conj(p) / norm(p); both coordinates must be integral.
                let num_m = qm * pm - (*d as i128) * qn * pn;
                let num_n = qn * pm - qm * pn;
                num_m % norm == 0 && num_n % norm == 0
            }
            _ => {
                let n = self.order().expect("finite ring");
                (0..n).any(|i| self.mul(p, &self.elem_at(i)) == *q)
            }
        }
    }

    /// Field norm `m^2 - d n^2` of `m + n sqrt(d)`.
    pub fn zsqrt_norm(&self, x: &RingElem) -> Result<i128> {
        match (&self.0.repr, x) {
            (Repr::ZSqrt { d }, RingElem::Pair(m, n)) => {
                Ok((*m as i128) * (*m as i128) - (*d as i128) * (*n as i128) * (*n as i128))
            }
            _ => Err(Error::Unsupported(format!("{self} has no field norm"))),
        }
    }

    /// Exact division in `Z[sqrt(d)]`: `Some(q / p)` when the quotient lies
    /// in the ring, `None` otherwise (including `p = 0`, `q != 0`).
    pub fn zsqrt_exact_div(&self, q: &RingElem, p: &RingElem) -> Result<Option<RingElem>> {
        match (&self.0.repr, p, q) {
            (Repr::ZSqrt { d }, RingElem::Pair(pm, pn), RingElem::Pair(qm, qn)) => {
                let (pm, pn) = (*pm as i128, *pn as i128);
                let (qm, qn) = (*qm as i128, *qn as i128);
                let norm = pm * pm - (*d as i128) * pn * pn;
                if norm == 0 {
                    return Ok(if qm == 0 && qn == 0 {
                        Some(self.zero())
                    } else {
                        None
                    });
                }
                let num_m = qm * pm - (*d as i128) * qn * pn;
                let num_n = qn * pm - qm * pn;
                if num_m % norm != 0 || num_n % norm != 0 {
                    return Ok(None);
                }
                Ok(Some(RingElem::Pair(
                    (num_m / norm) as i64,
                    (num_n / norm) as i64,
                )))
            }
            _ => Err(Error::Unsupported(format!("{self} has no exact division"))),
        }
    }

    /// The set of primes `p` such that `p * 1` is not a unit; equivalently
    /// the residue characteristics of the ring.
    pub fn residue_characteristics(&self) -> ResidueChars {
        match &self.0.repr {
            Repr::ZSqrt { .. } => ResidueChars::AllPrimes,
            _ => {
                let ch = self.characteristic();
                let mut set = BTreeSet::new();
                for p in prime_divisors(ch) {
                    if !self.is_unit(&self.int(p as i64)) {
                        set.insert(p);
                    }
                }
                ResidueChars::Finite(set)
            }
        }
    }

    /// Decodes a nested-integer-array JSON value into a canonical element.
    /// Integers are reduced; coefficient vectors may be shorter than the
    /// full length and are zero-padded.
    pub fn elem_from_json(&self, v: &serde_json::Value) -> Result<RingElem> {
        let bad = || Error::Semantic(format!("element literal {v} does not fit ring {self}"));
        match &self.0.repr {
            Repr::Zmod { .. } => {
                let k = v.as_i64().ok_or_else(bad)?;
                Ok(self.int(k))
            }
            Repr::Poly { base, deg, .. } => {
                let arr = v.as_array().ok_or_else(bad)?;
                if arr.len() > *deg {
                    return Err(bad());
                }
                let mut coeffs = Vec::with_capacity(*deg);
                for item in arr {
                    coeffs.push(base.elem_from_json(item)?);
                }
                while coeffs.len() < *deg {
                    coeffs.push(base.zero());
                }
                Ok(RingElem::Vec(coeffs))
            }
            Repr::Prod { comps } => {
                let arr = v.as_array().ok_or_else(bad)?;
                if arr.len() != comps.len() {
                    return Err(bad());
                }
                let parts: Result<Vec<RingElem>> = comps
                    .iter()
                    .zip(arr.iter())
                    .map(|(c, item)| c.elem_from_json(item))
                    .collect();
                Ok(RingElem::Vec(parts?))
            }
            Repr::ZSqrt { .. } => {
                if let Some(k) = v.as_i64() {
                    return Ok(RingElem::Pair(k, 0));
                }
                let arr = v.as_array().ok_or_else(bad)?;
                if arr.len() != 2 {
                    return Err(bad());
                }
                let m = arr[0].as_i64().ok_or_else(bad)?;
                let n = arr[1].as_i64().ok_or_else(bad)?;
                Ok(RingElem::Pair(m, n))
            }
        }
    }
}

/// Product of two polynomials over `base` reduced modulo the monic `modulus`
/// of degree `deg`. Inputs have length `deg`.
fn poly_mulmod(
    base: &Ring,
    a: &[RingElem],
    b: &[RingElem],
    modulus: &[RingElem],
    deg: usize,
) -> Vec<RingElem> {
    let mut prod = vec![base.zero(); 2 * deg - 1];
    for (i, x) in a.iter().enumerate() {
        if base.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = base.mul(x, y);
            prod[i + j] = base.add(&prod[i + j], &t);
        }
    }
    // Long division by a monic modulus: kill top coefficients downwards.
    for top in (deg..prod.len()).rev() {
        let c = prod[top].clone();
        if base.is_zero(&c) {
            continue;
        }
        prod[top] = base.zero();
        for (k, m) in modulus.iter().enumerate().take(deg) {
            let t = base.mul(&c, m);
            prod[top - deg + k] = base.sub(&prod[top - deg + k], &t);
        }
    }
    prod.truncate(deg);
    prod
}

/// Trial-division irreducibility over `Z/p`: no monic factor of degree
/// `1..=k/2` divides the (monic) modulus.
fn poly_irreducible_mod_p(modulus: &[u64], p: u64) -> bool {
    let k = modulus.len() - 1;
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut div = vec![0u64; d + 1];
            let mut rem = idx;
            for c in div.iter_mut().take(d) {
                *c = rem % p;
                rem /= p;
            }
            div[d] = 1;
            if poly_rem_is_zero(modulus, &div, p) {
                return false;
            }
        }
    }
    true
}

/// True iff `divisor` (monic) divides `poly` over `Z/p`.
fn poly_rem_is_zero(poly: &[u64], divisor: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let top = rem.len() - 1;
        let c = rem[top];
        if c != 0 {
            for (k, &dc) in divisor.iter().enumerate() {
                let idx = top - d + k;
                rem[idx] = (rem[idx] + p - mulmod(c, dc, p)) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

fn addmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    // extended Euclid on (a, n)
    let (mut r0, mut r1) = (a as i128, n as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(n as i128) as u64)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_squarefree(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            n /= f;
            if n.is_multiple_of(f) {
                return false;
            }
        }
        f += 1;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64) -> Ring {
        Ring::zmod(n)
    }

    #[test]
    fn zmod_requires_n_at_least_2() {
        assert!(Ring::from_spec(RingSpec::Zmod(1)).is_err());
        assert!(Ring::from_spec(RingSpec::Zmod(0)).is_err());
    }

    #[test]
    fn enumeration_is_canonical() {
        let r = zn(4);
        let elems = r.elements().unwrap();
        assert_eq!(
            elems,
            vec![
                RingElem::Int(0),
                RingElem::Int(1),
                RingElem::Int(2),
                RingElem::Int(3)
            ]
        );
        // determinism: two enumerations agree
        assert_eq!(elems, r.elements().unwrap());

        let p = Ring::parse("prod(zmod(2),zmod(2))").unwrap();
        assert_eq!(p.elements().unwrap().len(), 4);

        let zs = Ring::parse("zsqrt(5)").unwrap();
        assert!(matches!(zs.elements(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn index_roundtrip_and_order_agrees_with_ord() {
        for text in [
            "zmod(6)",
            "gf(3,2,[1,0,1])",
            "prod(zmod(2),zmod(3))",
            "quot(zmod(2),[0,0,1])",
        ] {
            let r = Ring::parse(text).unwrap();
            let elems = r.elements().unwrap();
            for (i, e) in elems.iter().enumerate() {
                assert_eq!(r.index_of(e), i as u64);
            }
            let mut sorted = elems.clone();
            sorted.sort();
            assert_eq!(sorted, elems, "Ord disagrees with enumeration on {text}");
        }
    }

    #[test]
    fn units_and_inverses_mod_6() {
        let r = zn(6);
        let five = r.int(5);
        assert!(r.is_unit(&five));
        assert_eq!(r.inverse(&five).unwrap(), five);
        let three = r.int(3);
        assert!(!r.is_unit(&three));
        assert_eq!(r.inverse(&three), Err(Error::NotAUnit));
    }

    #[test]
    fn zsqrt_units_by_norm() {
        let r = Ring::parse("zsqrt(5)").unwrap();
        // 2 + sqrt(5) has norm 4 - 5 = -1
        let u = RingElem::Pair(2, 1);
        assert!(r.is_unit(&u));
        let inv = r.inverse(&u).unwrap();
        assert_eq!(r.mul(&u, &inv), r.one());
        assert!(!r.is_unit(&r.int(2)));
    }

    #[test]
    fn residue_characteristics_examples() {
        assert_eq!(
            zn(6).residue_characteristics(),
            ResidueChars::Finite([2, 3].into_iter().collect())
        );
        let gf9 = Ring::parse("gf(3,2,[1,0,1])").unwrap();
        assert_eq!(
            gf9.residue_characteristics(),
            ResidueChars::Finite([3].into_iter().collect())
        );
        assert_eq!(
            zn(4).residue_characteristics(),
            ResidueChars::Finite([2].into_iter().collect())
        );
        assert_eq!(
            Ring::parse("zsqrt(5)").unwrap().residue_characteristics(),
            ResidueChars::AllPrimes
        );
    }

    #[test]
    fn divides_examples() {
        let z6 = zn(6);
        assert!(z6.divides(&z6.int(2), &z6.int(4)));
        assert!(z6.divides(&z6.int(1), &z6.int(5)));
        assert!(!z6.divides(&z6.int(0), &z6.int(3)));
        assert!(z6.divides(&z6.int(0), &z6.int(0)));

        // Example over Z[sqrt(5)]: 2 does not divide -1 + sqrt(5).
        let zs = Ring::parse("zsqrt(5)").unwrap();
        assert!(!zs.divides(&zs.int(2), &RingElem::Pair(-1, 1)));
        // but sqrt(5) divides 5
        assert!(zs.divides(&RingElem::Pair(0, 1), &zs.int(5)));
    }

    #[test]
    fn ring_axioms_exhaustive_small_orders() {
        for text in [
            "zmod(2)",
            "zmod(3)",
            "zmod(4)",
            "zmod(6)",
            "zmod(8)",
            "zmod(9)",
            "gf(2,2,[1,1,1])",
            "gf(2,3,[1,1,0,1])",
            "gf(3,2,[1,0,1])",
            "prod(zmod(2),zmod(2))",
            "prod(zmod(2),zmod(3))",
            "prod(zmod(2),zmod(2),zmod(2))",
            "quot(zmod(2),[0,0,1])",
            "quot(zmod(3),[1,0,1])",
            "quot(zmod(2),[1,1,0,1])",
        ] {
            let r = Ring::parse(text).unwrap();
            let n = r.order().unwrap();
            assert!(n <= 9, "test rings are capped at order 9");
            let elems = r.elements().unwrap();
            let zero = r.zero();
            let one = r.one();
            for x in &elems {
                assert_eq!(r.add(x, &zero), *x);
                assert_eq!(r.mul(x, &one), *x);
                assert_eq!(r.add(x, &r.neg(x)), zero);
                for y in &elems {
                    assert_eq!(r.add(x, y), r.add(y, x));
                    assert_eq!(r.mul(x, y), r.mul(y, x));
                    for z in &elems {
                        assert_eq!(r.add(&r.add(x, y), z), r.add(x, &r.add(y, z)));
                        assert_eq!(r.mul(&r.mul(x, y), z), r.mul(x, &r.mul(y, z)));
                        assert_eq!(
                            r.mul(x, &r.add(y, z)),
                            r.add(&r.mul(x, y), &r.mul(x, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn residue_characteristics_and_prime_divisibility() {
        for text in [
            "zmod(2)",
            "zmod(6)",
            "zmod(8)",
            "gf(3,2,[1,0,1])",
            "prod(zmod(2),zmod(3))",
            "quot(zmod(2),[0,0,1])",
        ] {
            let r = Ring::parse(text).unwrap();
            let chars = match r.residue_characteristics() {
                ResidueChars::Finite(s) => s,
                ResidueChars::AllPrimes => unreachable!(),
            };
            for p in [2u64, 3, 5, 7] {
                // p is a residue characteristic iff p*1 is not a unit
                assert_eq!(chars.contains(&p), !r.is_unit(&r.int(p as i64)), "{text} p={p}");
                for q in [2u64, 3, 5, 7] {
                    if p == q {
                        continue;
                    }
                    // q*1 in (p*1)R iff p*1 invertible
                    assert_eq!(
                        r.divides(&r.int(p as i64), &r.int(q as i64)),
                        r.is_unit(&r.int(p as i64)),
                        "{text} p={p} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn gf_validation() {
        // t^2 + 1 is irreducible over Z/3
        assert!(Ring::parse("gf(3,2,[1,0,1])").is_ok());
        // t^2 + 1 = (t+1)^2 over Z/2
        assert!(Ring::parse("gf(2,2,[1,0,1])").is_err());
        // non-prime p
        assert!(Ring::parse("gf(4,1,[0,1])").is_err());
        // degree mismatch
        assert!(Ring::parse("gf(3,2,[1,1])").is_err());
        // the canonical pick for GF(4) is t^2 + t + 1
        let gf4 = Ring::gf(2, 2).unwrap();
        assert_eq!(gf4.spec().to_text(), "gf(2,2,[1,1,1])");
        assert_eq!(gf4.order(), Some(4));
    }

    #[test]
    fn quot_validation() {
        assert!(Ring::parse("quot(zmod(2),[0,0,1])").is_ok());
        // constant modulus
        assert!(Ring::parse("quot(zmod(2),[1])").is_err());
        // non-monic: 2 t^2 over Z/4
        assert!(Ring::parse("quot(zmod(4),[0,0,2])").is_err());
        // 3 = -1 reduces to 1 mod 2: monic after canonicalization
        let r = Ring::parse("quot(zmod(2),[1,1,3])").unwrap();
        assert_eq!(r.spec().to_text(), "quot(zmod(2),[1,1,1])");
    }

    #[test]
    fn zsqrt_validation() {
        assert!(Ring::parse("zsqrt(5)").is_ok());
        assert!(Ring::parse("zsqrt(-1)").is_ok());
        assert!(Ring::parse("zsqrt(12)").is_err()); // 4 | 12
        assert!(Ring::parse("zsqrt(1)").is_err());
        assert!(Ring::parse("zsqrt(0)").is_err());
    }

    #[test]
    fn field_detection() {
        assert!(zn(5).is_field());
        assert!(!zn(6).is_field());
        assert!(Ring::parse("gf(2,2,[1,1,1])").unwrap().is_field());
        assert!(!Ring::parse("quot(zmod(2),[0,0,1])").unwrap().is_field());
        assert!(!Ring::parse("prod(zmod(2),zmod(3))").unwrap().is_field());
    }

    #[test]
    fn elem_json_roundtrip() {
        let r = Ring::parse("prod(zmod(4),gf(2,2,[1,1,1]))").unwrap();
        for e in r.elements().unwrap() {
            let back = r.elem_from_json(&e.to_json()).unwrap();
            assert_eq!(back, e);
        }
        let zs = Ring::parse("zsqrt(5)").unwrap();
        let e = RingElem::Pair(-3, 2);
        assert_eq!(zs.elem_from_json(&e.to_json()).unwrap(), e);
    }
}
