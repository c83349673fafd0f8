//! Unital ring homomorphisms with exhaustively verified tables.

use super::{Ring, RingElem};
use crate::{Error, Result};

/// A ring homomorphism `source -> target`.
///
/// For finite sources the map is stored as a full image table indexed by the
/// canonical element order and is verified to preserve `0`, `1`, `+`, `·` at
/// construction time. The identity is available for every ring, including
/// the infinite `Z[sqrt(d)]`.
#[derive(Debug, Clone)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    kind: HomKind,
}

#[derive(Debug, Clone)]
enum HomKind {
    Identity,
    Table(Vec<RingElem>),
}

impl RingHom {
    pub fn identity(ring: &Ring) -> RingHom {
        RingHom {
            source: ring.clone(),
            target: ring.clone(),
            kind: HomKind::Identity,
        }
    }

    /// The canonical projection `Z/n -> Z/m` for `m | n`.
    pub fn zmod_reduction(n: u64, m: u64) -> Result<RingHom> {
        if m < 2 || n < 2 || !n.is_multiple_of(m) {
            return Err(Error::Semantic(format!(
                "no canonical projection zmod({n}) -> zmod({m})"
            )));
        }
        let source = Ring::zmod(n);
        let target = Ring::zmod(m);
        let images = (0..n).map(|r| RingElem::Int(r % m)).collect();
        RingHom::from_images(&source, &target, images)
    }

    /// Builds a homomorphism from a full image table (`images[i]` is the
    /// image of the i-th source element in canonical order) and verifies the
    /// homomorphism laws exhaustively.
    pub fn from_images(source: &Ring, target: &Ring, images: Vec<RingElem>) -> Result<RingHom> {
        let n = source
            .order()
            .ok_or_else(|| Error::Unsupported("image tables need a finite source".into()))?;
        if images.len() != n as usize {
            return Err(Error::Semantic(format!(
                "image table has {} entries, expected {n}",
                images.len()
            )));
        }
        let hom = RingHom {
            source: source.clone(),
            target: target.clone(),
            kind: HomKind::Table(images),
        };
        hom.verify()?;
        Ok(hom)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn apply(&self, x: &RingElem) -> RingElem {
        match &self.kind {
            HomKind::Identity => x.clone(),
            HomKind::Table(images) => images[self.source.index_of(x) as usize].clone(),
        }
    }

    /// Checks preservation of `0`, `1`, `+`, `·` over all source pairs.
    fn verify(&self) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::Semantic(format!(
                "image table is not a ring homomorphism: {what} not preserved"
            )))
        };
        if self.apply(&self.source.zero()) != self.target.zero() {
            return fail("0");
        }
        if self.apply(&self.source.one()) != self.target.one() {
            return fail("1");
        }
        let elems = self.source.elements()?;
        for x in &elems {
            for y in &elems {
                let fx = self.apply(x);
                let fy = self.apply(y);
                if self.apply(&self.source.add(x, y)) != self.target.add(&fx, &fy) {
                    return fail("+");
                }
                if self.apply(&self.source.mul(x, y)) != self.target.mul(&fx, &fy) {
                    return fail("*");
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_projection_is_a_hom() {
        let h = RingHom::zmod_reduction(4, 2).unwrap();
        assert_eq!(h.apply(&RingElem::Int(3)), RingElem::Int(1));
        assert!(RingHom::zmod_reduction(4, 3).is_err());
    }

    #[test]
    fn bad_table_rejected() {
        let z2 = Ring::zmod(2);
        // swap 0 and 1: preserves nothing
        let images = vec![RingElem::Int(1), RingElem::Int(0)];
        assert!(RingHom::from_images(&z2, &z2, images).is_err());
    }

    #[test]
    fn identity_on_infinite_ring() {
        let zs = Ring::parse("zsqrt(5)").unwrap();
        let h = RingHom::identity(&zs);
        let e = RingElem::Pair(2, 1);
        assert_eq!(h.apply(&e), e);
    }
}
