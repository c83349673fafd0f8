//! Rank-2 algebra points `(a, b)` and the concrete algebra `R[x]/(x^2+ax+b)`.
//!
//! The concrete algebra is the free module `R·1 ⊕ R·e` with `e^2 = -b·1 - a·e`;
//! no generic quotient machinery is used. Predicates come with witnesses, and
//! every normal form is re-expanded inside the concrete algebra to confirm
//! the claimed vanishing polynomial.

use crate::ring::{Ring, RingElem, RingHom};
use crate::{Error, Result};
use serde::Serialize;

/// The pair `(a, b)` over a ring, standing for `R[x]/(x^2 + a x + b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraPoint {
    ring: Ring,
    a: RingElem,
    b: RingElem,
}

/// An element `s·1 + t·e` of the concrete rank-2 algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadElem {
    pub s: RingElem,
    pub t: RingElem,
}

/// Which single-parameter presentation a normal form targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormalFormKind {
    /// `y^2 + c = 0`
    RadicalParam,
    /// `y^2 - y + c = 0`
    ASParam,
    /// `y^2 - c = 0` with `c` the discriminant (2 a unit)
    EtaleOdd,
    /// `y^2 - y + c = 0` with `c = a^{-2} b` (2 = 0)
    EtaleEven,
}

/// A verified change of generator `y = w·x̄ + v` together with the parameter
/// of the resulting one-parameter presentation.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalForm {
    pub kind: NormalFormKind,
    pub param: RingElem,
    /// Unit scale of the substitution.
    pub w: RingElem,
    /// Shift of the substitution.
    pub v: RingElem,
}

impl NormalForm {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind,
            "param": self.param.to_json(),
            "w": self.w.to_json(),
            "v": self.v.to_json(),
        })
    }
}

/// Generator kinds searched for by the brute-force oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `u^2 ∈ R·1` and `(1, u)` a basis.
    Radical,
    /// `u^2 - u ∈ R·1` and `(1, u)` a basis.
    ArtinSchreier,
}

impl AlgebraPoint {
    pub fn new(ring: &Ring, a: RingElem, b: RingElem) -> AlgebraPoint {
        AlgebraPoint {
            ring: ring.clone(),
            a,
            b,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn a(&self) -> &RingElem {
        &self.a
    }

    pub fn b(&self) -> &RingElem {
        &self.b
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ring": self.ring.spec().to_text(),
            "a": self.a.to_json(),
            "b": self.b.to_json(),
        })
    }

    /// The class of `x` in the concrete algebra.
    pub fn gen(&self) -> QuadElem {
        QuadElem {
            s: self.ring.zero(),
            t: self.ring.one(),
        }
    }

    pub fn alg_zero(&self) -> QuadElem {
        QuadElem {
            s: self.ring.zero(),
            t: self.ring.zero(),
        }
    }

    pub fn alg_one(&self) -> QuadElem {
        QuadElem {
            s: self.ring.one(),
            t: self.ring.zero(),
        }
    }

    /// `r·1` as an algebra element.
    pub fn scalar(&self, r: &RingElem) -> QuadElem {
        QuadElem {
            s: r.clone(),
            t: self.ring.zero(),
        }
    }

    pub fn alg_add(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem {
            s: self.ring.add(&x.s, &y.s),
            t: self.ring.add(&x.t, &y.t),
        }
    }

    pub fn alg_sub(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem {
            s: self.ring.sub(&x.s, &y.s),
            t: self.ring.sub(&x.t, &y.t),
        }
    }

    pub fn alg_neg(&self, x: &QuadElem) -> QuadElem {
        QuadElem {
            s: self.ring.neg(&x.s),
            t: self.ring.neg(&x.t),
        }
    }

    /// Multiplication in `R·1 ⊕ R·e` with `e^2 = -b·1 - a·e`.
    pub fn alg_mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        let r = &self.ring;
        let tt = r.mul(&x.t, &y.t);
        let s = r.sub(&r.mul(&x.s, &y.s), &r.mul(&tt, &self.b));
        let cross = r.add(&r.mul(&x.s, &y.t), &r.mul(&x.t, &y.s));
        let t = r.sub(&cross, &r.mul(&tt, &self.a));
        QuadElem { s, t }
    }

    /// All |R|^2 elements of the concrete algebra, canonical order.
    pub fn alg_elements(&self) -> Result<Vec<QuadElem>> {
        let elems = self.ring.elements()?;
        let mut out = Vec::with_capacity(elems.len() * elems.len());
        for s in &elems {
            for t in &elems {
                out.push(QuadElem {
                    s: s.clone(),
                    t: t.clone(),
                });
            }
        }
        Ok(out)
    }

    /// `a^2 - 4b`.
    pub fn discriminant(&self) -> RingElem {
        let r = &self.ring;
        let aa = r.mul(&self.a, &self.a);
        r.sub(&aa, &r.scale(4, &self.b))
    }

    /// True iff the discriminant is a unit.
    pub fn is_separable(&self) -> bool {
        self.ring.is_unit(&self.discriminant())
    }

    /// First `(v, w)` in canonical order with `2w = av` and `-aw + 2bv = 1`,
    /// if any. Existence is equivalent to separability.
    pub fn separability_witness(&self) -> Result<Option<(RingElem, RingElem)>> {
        let r = &self.ring;
        let elems = r.elements()?;
        let one = r.one();
        for v in &elems {
            for w in &elems {
                let lhs = r.scale(2, w);
                let rhs = r.mul(&self.a, v);
                if lhs != rhs {
                    continue;
                }
                let cond = r.add(&r.neg(&r.mul(&self.a, w)), &r.scale(2, &r.mul(&self.b, v)));
                if cond == one {
                    return Ok(Some((v.clone(), w.clone())));
                }
            }
        }
        Ok(None)
    }

    /// First `v` with `a = 2v`, if any.
    pub fn radical_witness(&self) -> Result<Option<RingElem>> {
        let r = &self.ring;
        for v in r.elements()? {
            if r.scale(2, &v) == self.a {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    pub fn is_radical(&self) -> Result<bool> {
        Ok(self.radical_witness()?.is_some())
    }

    /// First `v` with `2v + a` a unit, if any.
    pub fn artin_schreier_witness(&self) -> Result<Option<RingElem>> {
        let r = &self.ring;
        for v in r.elements()? {
            if r.is_unit(&r.add(&r.scale(2, &v), &self.a)) {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    pub fn is_artin_schreier(&self) -> Result<bool> {
        Ok(self.artin_schreier_witness()?.is_some())
    }

    /// Radical normal form: with `a = 2v`, the generator `x̄ + v` satisfies
    /// `y^2 + (b - v^2) = 0`. Returns `None` when the point is not radical.
    pub fn radical_normal_form(&self) -> Result<Option<NormalForm>> {
        let r = &self.ring;
        let v = match self.radical_witness()? {
            Some(v) => v,
            None => return Ok(None),
        };
        let param = r.sub(&self.b, &r.mul(&v, &v));
        let nf = NormalForm {
            kind: NormalFormKind::RadicalParam,
            param,
            w: r.one(),
            v,
        };
        self.check_normal_form(&nf)?;
        Ok(Some(nf))
    }

    /// Artin-Schreier normal form: with `u := -(2v + a)` a unit, the
    /// generator `u^{-1}(x̄ - v)` satisfies `y^2 - y + u^{-2}(b - v^2 - uv) = 0`.
    pub fn as_normal_form(&self) -> Result<Option<NormalForm>> {
        let r = &self.ring;
        let v = match self.artin_schreier_witness()? {
            Some(v) => v,
            None => return Ok(None),
        };
        let u = r.neg(&r.add(&r.scale(2, &v), &self.a));
        let u_inv = r.inverse(&u)?;
        let u_inv2 = r.mul(&u_inv, &u_inv);
        // b - v^2 - u v
        let core = r.sub(&r.sub(&self.b, &r.mul(&v, &v)), &r.mul(&u, &v));
        let param = r.mul(&u_inv2, &core);
        let nf = NormalForm {
            kind: NormalFormKind::ASParam,
            param,
            w: u_inv.clone(),
            v: r.neg(&r.mul(&u_inv, &v)),
        };
        self.check_normal_form(&nf)?;
        Ok(Some(nf))
    }

    /// Etale normal form for separable points.
    ///
    /// When 2 is a unit the substitution `ȳ = 2x̄ + a` gives `y^2 - (a^2-4b)`;
    /// when 2 = 0 in R (and then `a` is a unit by separability) the
    /// substitution `ȳ = a^{-1} x̄` gives `y^2 - y + a^{-2} b`. Errors when 2
    /// is neither a unit nor zero.
    pub fn etale_normal_form(&self) -> Result<NormalForm> {
        let r = &self.ring;
        let two = r.int(2);
        if !r.is_unit(&two) && !r.is_zero(&two) {
            return Err(Error::Unsupported(
                "etale normal form: 2 is neither a unit nor zero in this ring".into(),
            ));
        }
        if !self.is_separable() {
            return Err(Error::Semantic(
                "etale normal form requires a separable point".into(),
            ));
        }
        let nf = if r.is_unit(&two) {
            NormalForm {
                kind: NormalFormKind::EtaleOdd,
                param: self.discriminant(),
                w: two,
                v: self.a.clone(),
            }
        } else {
            let a_inv = r.inverse(&self.a).map_err(|_| {
                Error::Internal("separable point in characteristic 2 with a non-unit".into())
            })?;
            let a_inv2 = r.mul(&a_inv, &a_inv);
            NormalForm {
                kind: NormalFormKind::EtaleEven,
                param: r.mul(&a_inv2, &self.b),
                w: a_inv,
                v: r.zero(),
            }
        };
        self.check_normal_form(&nf)?;
        Ok(nf)
    }

    /// Re-expansion oracle: the substituted generator `y = w·x̄ + v` must
    /// satisfy the vanishing polynomial claimed by the kind.
    fn check_normal_form(&self, nf: &NormalForm) -> Result<()> {
        let y = QuadElem {
            s: nf.v.clone(),
            t: nf.w.clone(),
        };
        let y2 = self.alg_mul(&y, &y);
        let residual = match nf.kind {
            NormalFormKind::RadicalParam => self.alg_add(&y2, &self.scalar(&nf.param)),
            NormalFormKind::ASParam | NormalFormKind::EtaleEven => {
                self.alg_add(&self.alg_sub(&y2, &y), &self.scalar(&nf.param))
            }
            NormalFormKind::EtaleOdd => self.alg_sub(&y2, &self.scalar(&nf.param)),
        };
        if residual != self.alg_zero() {
            return Err(Error::Internal(format!(
                "normal form re-expansion failed for {:?} on {}",
                nf.kind,
                self.to_json()
            )));
        }
        if !self.ring.is_unit(&nf.w) {
            return Err(Error::Internal(
                "normal form substitution scale is not a unit".into(),
            ));
        }
        Ok(())
    }

    /// Trace of multiplication by `s·1 + t·e`: `2s - at`.
    pub fn trace(&self, u: &QuadElem) -> RingElem {
        let r = &self.ring;
        r.sub(&r.scale(2, &u.s), &r.mul(&self.a, &u.t))
    }

    /// Galois conjugation `τ(u) = Tr(u)·1 - u`, i.e. `(s - at)·1 - t·e`.
    pub fn galois_conj(&self, u: &QuadElem) -> QuadElem {
        let r = &self.ring;
        QuadElem {
            s: r.sub(&u.s, &r.mul(&self.a, &u.t)),
            t: r.neg(&u.t),
        }
    }

    /// Base change along a ring homomorphism: `(a, b) -> (φ(a), φ(b))`.
    pub fn base_change(&self, hom: &RingHom) -> Result<AlgebraPoint> {
        if hom.source() != &self.ring {
            return Err(Error::Semantic(
                "base change: homomorphism source does not match the point's ring".into(),
            ));
        }
        Ok(AlgebraPoint {
            ring: hom.target().clone(),
            a: hom.apply(&self.a),
            b: hom.apply(&self.b),
        })
    }

    /// Brute-force generator search in the concrete algebra: scans every
    /// element `u = s·1 + t·e` for the defining property of the kind plus
    /// `(1, u)` being a basis (`t` a unit).
    pub fn brute_generator_search(&self, kind: GeneratorKind) -> Result<Option<QuadElem>> {
        for u in self.alg_elements()? {
            if !self.ring.is_unit(&u.t) {
                continue;
            }
            let u2 = self.alg_mul(&u, &u);
            let probe = match kind {
                GeneratorKind::Radical => u2,
                GeneratorKind::ArtinSchreier => self.alg_sub(&u2, &u),
            };
            if self.ring.is_zero(&probe.t) {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }
}

/// A rank-2 multiplication table with a designated unit, expressed over a
/// basis `(b1, b2)`: the four basis products and the unit coordinates.
#[derive(Debug, Clone)]
pub struct RankTwoTable {
    pub ring: Ring,
    /// `b1*b1`, `b1*b2`, `b2*b1`, `b2*b2` in `(b1, b2)` coordinates.
    pub products: [(RingElem, RingElem); 4],
    /// `1_A = u1·b1 + u2·b2`.
    pub unit: (RingElem, RingElem),
}

impl RankTwoTable {
    /// Multiplies coordinate vectors using the table, extended bilinearly.
    fn mul(&self, x: &(RingElem, RingElem), y: &(RingElem, RingElem)) -> (RingElem, RingElem) {
        let r = &self.ring;
        let mut acc = (r.zero(), r.zero());
        let parts = [
            (&x.0, &y.0, &self.products[0]),
            (&x.0, &y.1, &self.products[1]),
            (&x.1, &y.0, &self.products[2]),
            (&x.1, &y.1, &self.products[3]),
        ];
        for (xc, yc, prod) in parts {
            let c = r.mul(xc, yc);
            acc.0 = r.add(&acc.0, &r.mul(&c, &prod.0));
            acc.1 = r.add(&acc.1, &r.mul(&c, &prod.1));
        }
        acc
    }

    fn is_unital_commutative_associative(&self) -> bool {
        let r = &self.ring;
        let b1 = (r.one(), r.zero());
        let b2 = (r.zero(), r.one());
        let basis = [b1, b2];
        // unit acts as identity on the basis
        for b in &basis {
            if self.mul(&self.unit, b) != *b || self.mul(b, &self.unit) != *b {
                return false;
            }
        }
        if self.products[1] != self.products[2] {
            return false;
        }
        // associativity on basis triples
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let lhs = self.mul(&self.mul(x, y), z);
                    let rhs = self.mul(x, &self.mul(y, z));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Recovers an `(a, b)` presentation from a rank-2 multiplication table:
/// finds `r1 u1 + r2 u2 = 1`, sets `e = -r2·b1 + r1·b2` (so that `(1, e)` is
/// a basis), and reads `(a, b)` off `e^2 = -b·1 - a·e`. The isomorphism onto
/// the concrete algebra of the returned point is verified on all products of
/// basis images.
pub fn point_from_table(table: &RankTwoTable) -> Result<AlgebraPoint> {
    let r = &table.ring;
    if !r.is_finite() {
        return Err(Error::Unsupported(
            "point_from_table requires a finite ring".into(),
        ));
    }
    if !table.is_unital_commutative_associative() {
        return Err(Error::Semantic(
            "not unital rank-2: table is not a commutative unital algebra".into(),
        ));
    }
    let (u1, u2) = &table.unit;
    let one = r.one();
    let elems = r.elements()?;
    let mut bezout = None;
    'outer: for r1 in &elems {
        for r2 in &elems {
            if r.add(&r.mul(r1, u1), &r.mul(r2, u2)) == one {
                bezout = Some((r1.clone(), r2.clone()));
                break 'outer;
            }
        }
    }
    let (r1, r2) = bezout.ok_or_else(|| {
        Error::Semantic("not unital rank-2: unit coordinates generate a proper ideal".into())
    })?;
    // e in (b1, b2) coordinates; det of the change of basis (1, e) is
    // u1 r1 + u2 r2 = 1, a unit, so (1, e) is a basis.
    let e = (r.neg(&r2), r1.clone());
    let e2 = table.mul(&e, &e);
    // Solve alpha·unit + beta·e = e2. The matrix with columns (unit, e) has
    // determinant u1 r1 + u2 r2 = 1, so the adjugate inverts it exactly:
    //   alpha = r1·e2.0 + r2·e2.1,  beta = -u2·e2.0 + u1·e2.1.
    let alpha = r.add(&r.mul(&r1, &e2.0), &r.mul(&r2, &e2.1));
    let beta = r.sub(&r.mul(u1, &e2.1), &r.mul(u2, &e2.0));
    let a = r.neg(&beta);
    let b = r.neg(&alpha);
    let point = AlgebraPoint::new(r, a, b);
    // Verify the constructed map phi(s·1 + t·e_pt) = s·unit + t·e is an
    // algebra isomorphism by checking it on products of basis images.
    let phi = |q: &QuadElem| -> (RingElem, RingElem) {
        (
            r.add(&r.mul(&q.s, u1), &r.mul(&q.t, &e.0)),
            r.add(&r.mul(&q.s, u2), &r.mul(&q.t, &e.1)),
        )
    };
    let gen = point.gen();
    let checks = [
        (point.alg_one(), point.alg_one()),
        (point.alg_one(), gen.clone()),
        (gen.clone(), gen.clone()),
    ];
    for (x, y) in checks {
        let lhs = phi(&point.alg_mul(&x, &y));
        let rhs = table.mul(&phi(&x), &phi(&y));
        if lhs != rhs {
            return Err(Error::Internal(
                "point_from_table: constructed map is not multiplicative".into(),
            ));
        }
    }
    Ok(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn pt(ring: &Ring, a: i64, b: i64) -> AlgebraPoint {
        AlgebraPoint::new(ring, ring.int(a), ring.int(b))
    }

    #[test]
    fn discriminant_examples() {
        let z8 = Ring::zmod(8);
        assert_eq!(pt(&z8, 0, -1).discriminant(), z8.int(4));
        let z3 = Ring::zmod(3);
        assert_eq!(pt(&z3, 1, 1).discriminant(), z3.zero());
        // Example over Z[sqrt(5)]: (1,1) and (sqrt5, 2) share discriminant -3.
        let zs = Ring::parse("zsqrt(5)").unwrap();
        let p1 = AlgebraPoint::new(&zs, zs.int(1), zs.int(1));
        let p2 = AlgebraPoint::new(&zs, zs.sqrt_gen().unwrap(), zs.int(2));
        assert_eq!(p1.discriminant(), zs.int(-3));
        assert_eq!(p2.discriminant(), zs.int(-3));
    }

    #[test]
    fn separability_examples() {
        let z2 = Ring::zmod(2);
        assert!(pt(&z2, 1, 1).is_separable());
        assert!(!pt(&z2, 0, 1).is_separable());
        assert!(pt(&Ring::zmod(4), 1, 0).is_separable());
    }

    #[test]
    fn separability_witness_examples() {
        let z5 = Ring::zmod(5);
        assert_eq!(
            pt(&z5, 0, 1).separability_witness().unwrap(),
            Some((z5.int(3), z5.int(0)))
        );
        let z2 = Ring::zmod(2);
        assert_eq!(pt(&z2, 0, 1).separability_witness().unwrap(), None);
        assert_eq!(
            pt(&z2, 1, 0).separability_witness().unwrap(),
            Some((z2.int(0), z2.int(1)))
        );
    }

    #[test]
    fn radical_and_as_predicates() {
        let z4 = Ring::zmod(4);
        assert_eq!(pt(&z4, 2, 1).radical_witness().unwrap(), Some(z4.int(1)));
        let z2 = Ring::zmod(2);
        assert_eq!(pt(&z2, 1, 0).radical_witness().unwrap(), None);
        let z6 = Ring::zmod(6);
        assert_eq!(pt(&z6, 3, 0).radical_witness().unwrap(), None);

        assert_eq!(
            pt(&z2, 1, 1).artin_schreier_witness().unwrap(),
            Some(z2.int(0))
        );
        assert_eq!(pt(&z2, 0, 1).artin_schreier_witness().unwrap(), None);
        assert_eq!(
            pt(&z6, 1, 0).artin_schreier_witness().unwrap(),
            Some(z6.int(0))
        );
    }

    #[test]
    fn radical_normal_form_examples() {
        let z4 = Ring::zmod(4);
        let nf = pt(&z4, 2, 1).radical_normal_form().unwrap().unwrap();
        assert_eq!(nf.param, z4.int(0));
        assert_eq!(nf.v, z4.int(1));

        let z8 = Ring::zmod(8);
        let nf = pt(&z8, 4, 1).radical_normal_form().unwrap().unwrap();
        assert_eq!(nf.param, z8.int(5)); // 1 - 4 = -3 = 5 mod 8

        let z6 = Ring::zmod(6);
        let nf = pt(&z6, 0, 5).radical_normal_form().unwrap().unwrap();
        assert_eq!(nf.param, z6.int(5)); // already radical form, v = 0
        assert!(pt(&z6, 3, 0).radical_normal_form().unwrap().is_none());
    }

    #[test]
    fn as_normal_form_examples() {
        let z5 = Ring::zmod(5);
        let nf = pt(&z5, -1, 3).as_normal_form().unwrap().unwrap();
        assert_eq!(nf.param, z5.int(3)); // already AS form x^2 - x + 3

        let z2 = Ring::zmod(2);
        let nf = pt(&z2, 1, 1).as_normal_form().unwrap().unwrap();
        assert_eq!(nf.param, z2.int(1));

        let z3 = Ring::zmod(3);
        let nf = pt(&z3, 1, 1).as_normal_form().unwrap().unwrap();
        assert_eq!(nf.param, z3.int(1));
    }

    #[test]
    fn normal_form_serialization() {
        let z4 = Ring::zmod(4);
        let nf = pt(&z4, 2, 1).radical_normal_form().unwrap().unwrap();
        let v = nf.to_json();
        assert_eq!(v["kind"], "RadicalParam");
        assert_eq!(v["param"], 0);
        assert_eq!(v["w"], 1);
        assert_eq!(v["v"], 1);
    }

    #[test]
    fn etale_normal_form_examples() {
        let z5 = Ring::zmod(5);
        let nf = pt(&z5, 1, 1).etale_normal_form().unwrap();
        assert_eq!(nf.kind, NormalFormKind::EtaleOdd);
        assert_eq!(nf.param, z5.int(2)); // 1 - 4 = -3 = 2 mod 5

        let z2 = Ring::zmod(2);
        let nf = pt(&z2, 1, 1).etale_normal_form().unwrap();
        assert_eq!(nf.kind, NormalFormKind::EtaleEven);
        assert_eq!(nf.param, z2.int(1));

        let z6 = Ring::zmod(6);
        assert!(matches!(
            pt(&z6, 1, 1).etale_normal_form(),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn trace_and_conjugation() {
        let z5 = Ring::zmod(5);
        let p = pt(&z5, 0, -1);
        // tau(1) = 1
        assert_eq!(p.galois_conj(&p.alg_one()), p.alg_one());
        // tau(e) = -e since trace(e) = -a = 0
        let e = p.gen();
        assert_eq!(p.galois_conj(&e), p.alg_neg(&e));

        // tau is an involution on all 16 elements over Z/4 with (a,b) = (2,1)
        let z4 = Ring::zmod(4);
        let p = pt(&z4, 2, 1);
        for u in p.alg_elements().unwrap() {
            assert_eq!(p.galois_conj(&p.galois_conj(&u)), u);
        }
    }

    #[test]
    fn involution_suite_exhaustive_small() {
        // Ring involution fixing R·1, trace linearity, Tr(1) = 2, for all
        // (a,b) over rings of order <= 4.
        for text in ["zmod(2)", "zmod(3)", "zmod(4)", "gf(2,2,[1,1,1])", "quot(zmod(2),[0,0,1])"] {
            let r = Ring::parse(text).unwrap();
            let elems = r.elements().unwrap();
            for a in &elems {
                for b in &elems {
                    let p = AlgebraPoint::new(&r, a.clone(), b.clone());
                    assert_eq!(p.trace(&p.alg_one()), r.int(2));
                    for x in &elems {
                        let fixed = p.scalar(x);
                        assert_eq!(p.galois_conj(&fixed), fixed);
                    }
                    let alg = p.alg_elements().unwrap();
                    for u in &alg {
                        assert_eq!(p.galois_conj(&p.galois_conj(u)), *u);
                        for v in &alg {
                            assert_eq!(
                                p.galois_conj(&p.alg_mul(u, v)),
                                p.alg_mul(&p.galois_conj(u), &p.galois_conj(v))
                            );
                            assert_eq!(
                                p.galois_conj(&p.alg_add(u, v)),
                                p.alg_add(&p.galois_conj(u), &p.galois_conj(v))
                            );
                            assert_eq!(
                                p.trace(&p.alg_add(u, v)),
                                r.add(&p.trace(u), &p.trace(v))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn predicate_oracle_agreement_exhaustive() {
        // Coefficient predicates agree with brute-force generator search and
        // with (v,w)-witness solvability, orders <= 8.
        for text in [
            "zmod(2)",
            "zmod(3)",
            "zmod(4)",
            "zmod(5)",
            "zmod(6)",
            "zmod(7)",
            "zmod(8)",
            "gf(2,2,[1,1,1])",
            "prod(zmod(2),zmod(2))",
            "prod(zmod(2),zmod(3))",
            "quot(zmod(2),[0,0,1])",
        ] {
            let r = Ring::parse(text).unwrap();
            let elems = r.elements().unwrap();
            for a in &elems {
                for b in &elems {
                    let p = AlgebraPoint::new(&r, a.clone(), b.clone());
                    assert_eq!(
                        p.is_radical().unwrap(),
                        p.brute_generator_search(GeneratorKind::Radical)
                            .unwrap()
                            .is_some(),
                        "radical mismatch at {text} {a:?} {b:?}"
                    );
                    assert_eq!(
                        p.is_artin_schreier().unwrap(),
                        p.brute_generator_search(GeneratorKind::ArtinSchreier)
                            .unwrap()
                            .is_some(),
                        "AS mismatch at {text} {a:?} {b:?}"
                    );
                    assert_eq!(
                        p.is_separable(),
                        p.separability_witness().unwrap().is_some(),
                        "separability mismatch at {text} {a:?} {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn brute_search_examples() {
        let z3 = Ring::zmod(3);
        let u = pt(&z3, 0, 1)
            .brute_generator_search(GeneratorKind::Radical)
            .unwrap();
        assert!(u.is_some());
        let z2 = Ring::zmod(2);
        assert!(pt(&z2, 1, 1)
            .brute_generator_search(GeneratorKind::Radical)
            .unwrap()
            .is_none());
        let u = pt(&z2, 1, 1)
            .brute_generator_search(GeneratorKind::ArtinSchreier)
            .unwrap()
            .unwrap();
        // e itself works: e^2 - e = 1 in char 2
        assert_eq!(u, pt(&z2, 1, 1).gen());
    }

    #[test]
    fn base_change_examples() {
        let z4 = Ring::zmod(4);
        let h = RingHom::zmod_reduction(4, 2).unwrap();
        let p = pt(&z4, 2, 1);
        let q = p.base_change(&h).unwrap();
        assert_eq!(q.a(), &RingElem::Int(0));
        assert_eq!(q.b(), &RingElem::Int(1));

        let id = RingHom::identity(&z4);
        assert_eq!(p.base_change(&id).unwrap(), p);

        let h63 = RingHom::zmod_reduction(6, 3).unwrap();
        let z6 = Ring::zmod(6);
        let q = pt(&z6, 1, 1).base_change(&h63).unwrap();
        assert_eq!(q.a(), &RingElem::Int(1));
        assert_eq!(q.b(), &RingElem::Int(1));
    }

    #[test]
    fn point_from_table_roundtrip() {
        // standard table of (a, b) in basis (1, e) comes back as (a, b)
        let z3 = Ring::zmod(3);
        let p = pt(&z3, 1, 2);
        let table = RankTwoTable {
            ring: z3.clone(),
            products: [
                (z3.int(1), z3.int(0)),  // 1*1
                (z3.int(0), z3.int(1)),  // 1*e
                (z3.int(0), z3.int(1)),  // e*1
                (z3.neg(&z3.int(2)), z3.neg(&z3.int(1))), // e*e = -b - a e
            ],
            unit: (z3.int(1), z3.int(0)),
        };
        let q = point_from_table(&table).unwrap();
        assert_eq!(q, p);
    }

    #[test]
    fn point_from_table_swapped_basis() {
        // basis (e, 1): products in the swapped coordinates
        let z3 = Ring::zmod(3);
        let a = z3.int(1);
        let b = z3.int(2);
        // b1 = e, b2 = 1; e*e = -b·1 - a·e -> coords (-a, -b) in (e, 1)
        let table = RankTwoTable {
            ring: z3.clone(),
            products: [
                (z3.neg(&a), z3.neg(&b)), // b1*b1 = e^2
                (z3.int(1), z3.int(0)),   // b1*b2 = e
                (z3.int(1), z3.int(0)),   // b2*b1 = e
                (z3.int(0), z3.int(1)),   // b2*b2 = 1
            ],
            unit: (z3.int(0), z3.int(1)),
        };
        let q = point_from_table(&table).unwrap();
        // the recovered point must be isomorphic to (1, 2); checked via the
        // iso solver in the iso module's tests; here check the discriminant
        // class survives (equal discriminants up to unit squares).
        let orig = pt(&z3, 1, 2);
        let d1 = orig.discriminant();
        let d2 = q.discriminant();
        let units = z3.units().unwrap();
        assert!(units
            .iter()
            .any(|w| z3.mul(&z3.mul(w, w), &d2) == d1));
    }

    #[test]
    fn point_from_table_rejects_non_algebra() {
        let z2 = Ring::zmod(2);
        // unit does not act as identity
        let table = RankTwoTable {
            ring: z2.clone(),
            products: [
                (z2.int(0), z2.int(0)),
                (z2.int(0), z2.int(0)),
                (z2.int(0), z2.int(0)),
                (z2.int(0), z2.int(0)),
            ],
            unit: (z2.int(1), z2.int(0)),
        };
        assert!(point_from_table(&table).is_err());
    }
}
