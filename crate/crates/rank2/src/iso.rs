//! Isomorphism and automorphism computation for rank-2 algebra points.
//!
//! An isomorphism `R[x]/(x^2+ax+b) -> R[y]/(y^2+cy+d)` is exactly a map
//! `x̄ ↦ w ȳ + v` with `w` a unit, `2v = cw - a`, and `-d w^2 + v^2 + a v + b = 0`.
//! The solver scans all `(v, w)` and re-verifies every candidate directly in
//! the concrete algebras, so the equation set and the algebra oracle check
//! each other on every call.

use crate::quad::{AlgebraPoint, QuadElem};
use crate::ring::{Ring, RingElem};
use crate::{Error, Result};
use serde::Serialize;

/// The substitution `x̄ ↦ w ȳ + v` realizing an isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsoSolution {
    pub v: RingElem,
    pub w: RingElem,
}

impl IsoSolution {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.v.to_json(), self.w.to_json()])
    }
}

/// Composite of `first: Iso(A,B)` followed by `then: Iso(B,C)`, an element
/// of `Iso(A,C)`: `(v, w) ⋆ (v', w') = (w v' + v, w w')`.
pub fn compose(ring: &Ring, first: &IsoSolution, then: &IsoSolution) -> IsoSolution {
    IsoSolution {
        v: ring.add(&ring.mul(&first.w, &then.v), &first.v),
        w: ring.mul(&first.w, &then.w),
    }
}

/// Inverse substitution `(w^{-1}, -w^{-1} v)`.
pub fn invert(ring: &Ring, sol: &IsoSolution) -> Result<IsoSolution> {
    let w_inv = ring.inverse(&sol.w)?;
    Ok(IsoSolution {
        v: ring.neg(&ring.mul(&w_inv, &sol.v)),
        w: w_inv,
    })
}

/// Exact isomorphism solution set between two points over the same finite
/// ring. Every returned solution has been double-checked as a unital algebra
/// isomorphism on the concrete algebras.
pub fn iso_solutions(src: &AlgebraPoint, dst: &AlgebraPoint) -> Result<Vec<IsoSolution>> {
    if src.ring() != dst.ring() {
        return Err(Error::Semantic("iso: points live over different rings".into()));
    }
    let r = src.ring().clone();
    if !r.is_finite() {
        return Err(Error::Unsupported(
            "iso_solutions requires a finite ring; use iso_quadint for zsqrt".into(),
        ));
    }
    let elems = r.elements()?;
    let units = r.units()?;
    let mut out = Vec::new();
    for v in &elems {
        for w in &units {
            let eqs = iso_equations_hold(src, dst, v, w);
            let oracle = is_algebra_hom(src, dst, v, w);
            if eqs != oracle {
                return Err(Error::Internal(format!(
                    "iso equations and concrete-algebra oracle disagree at (v,w)=({},{})",
                    v.to_compact_string(),
                    w.to_compact_string()
                )));
            }
            if eqs {
                out.push(IsoSolution {
                    v: v.clone(),
                    w: w.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// `2v = cw - a` and `-d w^2 + v^2 + a v + b = 0`.
fn iso_equations_hold(src: &AlgebraPoint, dst: &AlgebraPoint, v: &RingElem, w: &RingElem) -> bool {
    let r = src.ring();
    let (a, b) = (src.a(), src.b());
    let (c, d) = (dst.a(), dst.b());
    if r.scale(2, v) != r.sub(&r.mul(c, w), a) {
        return false;
    }
    let w2 = r.mul(w, w);
    let lhs = r.add(
        &r.add(&r.neg(&r.mul(d, &w2)), &r.mul(v, v)),
        &r.add(&r.mul(a, v), b),
    );
    r.is_zero(&lhs)
}

/// Concrete-algebra oracle: `x̄ ↦ w ȳ + v` extends to a unital algebra
/// isomorphism iff the image satisfies the source polynomial (and `w` is a
/// unit, which makes the induced module map invertible).
fn is_algebra_hom(src: &AlgebraPoint, dst: &AlgebraPoint, v: &RingElem, w: &RingElem) -> bool {
    let image = QuadElem {
        s: v.clone(),
        t: w.clone(),
    };
    let img2 = dst.alg_mul(&image, &image);
    let lin = dst.alg_mul(&dst.scalar(src.a()), &image);
    let value = dst.alg_add(&dst.alg_add(&img2, &lin), &dst.scalar(src.b()));
    value == dst.alg_zero()
}

/// Isomorphism decision. Finite rings scan; `Z[sqrt(d)]` delegates to
/// [`iso_quadint`] and treats only a proven `Isomorphic` as true.
pub fn is_isomorphic(src: &AlgebraPoint, dst: &AlgebraPoint) -> Result<bool> {
    if src.ring().is_finite() {
        Ok(!iso_solutions(src, dst)?.is_empty())
    } else {
        match iso_quadint(src, dst)? {
            QuadIntDecision::Isomorphic { .. } => Ok(true),
            QuadIntDecision::NotIsomorphic { .. } => Ok(false),
            QuadIntDecision::Undecided { reason } => Err(Error::Unsupported(format!(
                "isomorphism over this quadratic integer ring is undecided: {reason}"
            ))),
        }
    }
}

/// The automorphism group of a point: solution set of the self-isomorphism
/// equations together with its composition table.
#[derive(Debug, Clone)]
pub struct AutGroup {
    pub point: AlgebraPoint,
    pub elements: Vec<IsoSolution>,
    /// `table[i][j]` = index of `elements[i] ⋆ elements[j]`.
    pub table: Vec<Vec<usize>>,
    pub order: usize,
}

impl AutGroup {
    pub fn identity_index(&self) -> usize {
        let r = self.point.ring();
        let id = IsoSolution {
            v: r.zero(),
            w: r.one(),
        };
        self.elements.iter().position(|e| *e == id).expect("identity present")
    }
}

/// Computes the full automorphism group; group axioms are re-verified on the
/// computed table.
pub fn aut_group(pt: &AlgebraPoint) -> Result<AutGroup> {
    let elements = iso_solutions(pt, pt)?;
    let r = pt.ring().clone();
    let index_of = |sol: &IsoSolution| -> Result<usize> {
        elements
            .iter()
            .position(|e| e == sol)
            .ok_or_else(|| Error::Internal("automorphism set is not closed under composition".into()))
    };
    let mut table = vec![vec![0usize; elements.len()]; elements.len()];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            table[i][j] = index_of(&compose(&r, x, y))?;
        }
    }
    let group = AutGroup {
        point: pt.clone(),
        order: elements.len(),
        elements,
        table,
    };
    // identity and inverses
    let id = group.identity_index();
    for (i, x) in group.elements.iter().enumerate() {
        if group.table[id][i] != i || group.table[i][id] != i {
            return Err(Error::Internal("identity law fails in Aut".into()));
        }
        let inv = invert(&r, x)?;
        let j = group
            .elements
            .iter()
            .position(|e| *e == inv)
            .ok_or_else(|| Error::Internal("inverse missing in Aut".into()))?;
        if group.table[i][j] != id || group.table[j][i] != id {
            return Err(Error::Internal("inverse law fails in Aut".into()));
        }
    }
    Ok(group)
}

/// Group-scheme type of the automorphism fiber over a finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiberTag {
    /// char != 2, nonzero discriminant: `μ2`.
    #[serde(rename = "MU2")]
    Mu2,
    /// char != 2, zero discriminant: `G_m`.
    #[serde(rename = "GM")]
    Gm,
    /// char 2, `a != 0`: the constant group scheme of order 2.
    #[serde(rename = "Z2_CONSTANT")]
    Z2Constant,
    /// char 2, `a = 0`: `G_m x α2`.
    #[serde(rename = "GM_x_ALPHA2")]
    GmTimesAlpha2,
    /// Non-field deformation cases (not produced by the field typing).
    #[serde(rename = "DEFORMATION")]
    Deformation,
}

/// Fiber tag plus the observed point-group order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberType {
    pub tag: FiberTag,
    pub observed_order: usize,
}

/// Classifies the automorphism fiber of a point over a finite field and
/// cross-checks the observed `Aut` order against the tag's order formula.
pub fn aut_fiber_type(pt: &AlgebraPoint) -> Result<FiberType> {
    let r = pt.ring();
    if !r.is_field() {
        return Err(Error::Unsupported(
            "fiber typing is defined over fields only".into(),
        ));
    }
    let q = r.order().expect("finite field");
    let char2 = r.characteristic() == 2;
    let disc_zero = r.is_zero(&pt.discriminant());
    let a_zero = r.is_zero(pt.a());
    let tag = match (char2, a_zero, disc_zero) {
        (false, _, false) => FiberTag::Mu2,
        (false, _, true) => FiberTag::Gm,
        (true, false, _) => FiberTag::Z2Constant,
        (true, true, _) => FiberTag::GmTimesAlpha2,
    };
    let expected = match tag {
        FiberTag::Mu2 => r
            .elements()?
            .iter()
            .filter(|w| r.mul(w, w) == r.one())
            .count(),
        FiberTag::Gm => (q - 1) as usize,
        FiberTag::Z2Constant => 2,
        FiberTag::GmTimesAlpha2 => {
            let sq_zero = r
                .elements()?
                .iter()
                .filter(|y| r.is_zero(&r.mul(y, y)))
                .count();
            (q - 1) as usize * sq_zero
        }
        FiberTag::Deformation => unreachable!(),
    };
    let observed = aut_group(pt)?.order;
    if observed != expected {
        return Err(Error::Internal(format!(
            "fiber tag {tag:?} predicts order {expected}, observed {observed}"
        )));
    }
    Ok(FiberType {
        tag,
        observed_order: observed,
    })
}

/// When 2 is a unit, the isomorphism set is parametrized by the `w` values
/// alone: `{w unit : a^2 - 4b = w^2 (c^2 - 4d)}`.
pub fn iso_odd_char(src: &AlgebraPoint, dst: &AlgebraPoint) -> Result<Vec<RingElem>> {
    let r = src.ring();
    if src.ring() != dst.ring() {
        return Err(Error::Semantic("iso: points live over different rings".into()));
    }
    if !r.is_unit(&r.int(2)) {
        return Err(Error::Unsupported("iso_odd_char requires 2 to be a unit".into()));
    }
    let d_src = src.discriminant();
    let d_dst = dst.discriminant();
    Ok(r.units()?
        .into_iter()
        .filter(|w| r.mul(&r.mul(w, w), &d_dst) == d_src)
        .collect())
}

/// Outcome of the discriminant-based isomorphism test over `Z[sqrt(d)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadIntDecision {
    Isomorphic { v: RingElem, w: RingElem },
    NotIsomorphic { certificate: String },
    Undecided { reason: String },
}

impl QuadIntDecision {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            QuadIntDecision::Isomorphic { v, w } => serde_json::json!({
                "isomorphic": true,
                "solutions": [[v.to_json(), w.to_json()]],
                "certificate": format!(
                    "x -> w*y + v with v={}, w={}",
                    v.to_compact_string(),
                    w.to_compact_string()
                ),
            }),
            QuadIntDecision::NotIsomorphic { certificate } => serde_json::json!({
                "isomorphic": false,
                "solutions": [],
                "certificate": certificate,
            }),
            QuadIntDecision::Undecided { reason } => serde_json::json!({
                "isomorphic": "undecided",
                "solutions": [],
                "certificate": reason,
            }),
        }
    }
}

/// Decides isomorphism over `Z[sqrt(d)]` where possible.
///
/// With nonzero target discriminant, `w^2` is forced to the exact
/// discriminant ratio. When that ratio is 1 the torsion units `±1` exhaust
/// the candidates and the divisibility test `2 | (cw - a)` settles the
/// question either way; a ratio that is a non-torsion unit square candidate
/// is reported as undecided rather than guessed.
pub fn iso_quadint(src: &AlgebraPoint, dst: &AlgebraPoint) -> Result<QuadIntDecision> {
    let r = src.ring().clone();
    if src.ring() != dst.ring() {
        return Err(Error::Semantic("iso: points live over different rings".into()));
    }
    r.zsqrt_norm(&r.zero())?; // reject non-zsqrt rings
    let d_src = src.discriminant();
    let d_dst = dst.discriminant();
    let zero = r.zero();

    // try w in {1, -1}: test 2 | (cw - a), then verify both equations.
    let try_torsion = |require_ratio_one: bool| -> Result<Option<QuadIntDecision>> {
        for w in [r.one(), r.int(-1)] {
            if require_ratio_one {
                // already known d_src = w^2 d_dst since w^2 = 1
            }
            let cw_minus_a = r.sub(&r.mul(dst.a(), &w), src.a());
            if let Some(v) = r.zsqrt_exact_div(&cw_minus_a, &r.int(2))? {
                // second equation must follow; verify rather than trust
                let w2 = r.mul(&w, &w);
                let lhs = r.add(
                    &r.add(&r.neg(&r.mul(dst.b(), &w2)), &r.mul(&v, &v)),
                    &r.add(&r.mul(src.a(), &v), src.b()),
                );
                if !r.is_zero(&lhs) {
                    return Err(Error::Internal(
                        "quadint: halving passed but the affine equation fails".into(),
                    ));
                }
                return Ok(Some(QuadIntDecision::Isomorphic { v, w }));
            }
        }
        Ok(None)
    };

    if d_dst == zero {
        if d_src != zero {
            return Ok(QuadIntDecision::NotIsomorphic {
                certificate: "discriminants differ: source nonzero, target zero".into(),
            });
        }
        // both discriminants zero: torsion candidates may still succeed
        if let Some(found) = try_torsion(false)? {
            return Ok(found);
        }
        return Ok(QuadIntDecision::Undecided {
            reason: "both discriminants vanish; unit candidates beyond ±1 are out of scope".into(),
        });
    }

    let ratio = match r.zsqrt_exact_div(&d_src, &d_dst)? {
        Some(q) => q,
        None => {
            return Ok(QuadIntDecision::NotIsomorphic {
                certificate: "discriminant ratio is not integral: no unit w with a^2-4b = w^2(c^2-4d)"
                    .into(),
            })
        }
    };
    if r.zsqrt_norm(&ratio)? != 1 {
        return Ok(QuadIntDecision::NotIsomorphic {
            certificate: "discriminant ratio has norm != 1: it is no square of a unit".into(),
        });
    }
    if ratio == r.one() {
        // w^2 = 1 forces w = ±1 in an integral domain.
        if let Some(found) = try_torsion(true)? {
            return Ok(found);
        }
        return Ok(QuadIntDecision::NotIsomorphic {
            certificate: "w²=1 forced; 2 ∤ (cw−a)".into(),
        });
    }
    Ok(QuadIntDecision::Undecided {
        reason: "discriminant ratio is a non-torsion unit square candidate; out of desk scope"
            .into(),
    })
}
