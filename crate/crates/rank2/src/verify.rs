//! Property suites bundling every cross-module check into one deterministic
//! runner, used by the `verify` CLI command and the acceptance tests.
//!
//! The default ring battery covers the hypotheses the theory distinguishes:
//! 2 a unit (odd orders), 2 = 0 (characteristic 2), 2 a zero divisor
//! (`Z/4`, `Z/6`, `Z/8`), non-reduced rings (`F2[e]/(e^2)`), non-local rings
//! (products), and proper field extensions.

use crate::hopf::{self, AutPresentation, Coaction, HopfPresentation};
use crate::iso::{self, QuadIntDecision};
use crate::orbits::{
    self, act, domain_points, group_contains, group_elements, group_identity, group_inv,
    group_mul, ActionInstance, ActionKind, DomainName, GroupChoice, Point, Property,
};
use crate::quad::{AlgebraPoint, GeneratorKind};
use crate::ring::{ResidueChars, Ring, RingElem};
use crate::{Error, Result};
use serde::Serialize;

/// One verified statement.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of a verification run; one line per check.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn push(&mut self, suite: &'static str, name: impl Into<String>, pass: bool) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            pass,
            detail: None,
        });
    }

    pub fn push_detail(
        &mut self,
        suite: &'static str,
        name: impl Into<String>,
        pass: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            pass,
            detail: Some(detail.into()),
        });
    }

    pub fn render_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}: {}", c.suite, c.name));
            if let Some(d) = &c.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pass": self.passed(),
            "checks": self.checks,
        })
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

/// Runner configuration: the rings under test and the seed for the
/// randomized Laurent arithmetic triples.
#[derive(Debug, Clone)]
pub struct Config {
    pub rings: Vec<Ring>,
    pub seed: u64,
}

impl Config {
    pub fn with_battery(seed: u64) -> Config {
        Config {
            rings: battery(),
            seed,
        }
    }
}

/// The default test battery.
pub fn battery() -> Vec<Ring> {
    let mut out: Vec<Ring> = (2..=9).map(Ring::zmod).collect();
    out.push(Ring::gf(2, 2).expect("GF(4)"));
    out.push(Ring::gf(3, 2).expect("GF(9)"));
    out.push(Ring::parse("prod(zmod(2),zmod(2))").expect("battery"));
    out.push(Ring::parse("prod(zmod(2),zmod(3))").expect("battery"));
    out.push(Ring::parse("quot(zmod(2),[0,0,1])").expect("battery"));
    out
}

pub const SUITES: [&str; 11] = [
    "rings",
    "predicates",
    "involution",
    "actions",
    "moduli",
    "bijections",
    "hopf",
    "points",
    "fibers",
    "field-counts",
    "quadint",
];

/// Runs the named suites (or all of them for `"all"`).
pub fn run(cfg: &Config, suites: &[String]) -> Result<Report> {
    let mut selected: Vec<&str> = Vec::new();
    for s in suites {
        if s == "all" {
            selected = SUITES.to_vec();
            break;
        }
        let known = SUITES
            .iter()
            .find(|k| **k == s.as_str())
            .ok_or_else(|| Error::Semantic(format!("unknown suite {s:?}; known: {SUITES:?}")))?;
        selected.push(known);
    }
    let mut report = Report::default();
    for s in selected {
        let sub = match s {
            "rings" => suite_rings(cfg)?,
            "predicates" => suite_predicates(cfg)?,
            "involution" => suite_involution(cfg)?,
            "actions" => suite_actions(cfg)?,
            "moduli" => suite_moduli(cfg)?,
            "bijections" => suite_bijections(cfg)?,
            "hopf" => suite_hopf(cfg)?,
            "points" => suite_points(cfg)?,
            "fibers" => suite_fibers(cfg)?,
            "field-counts" => suite_field_counts(cfg)?,
            "quadint" => suite_quadint()?,
            _ => unreachable!(),
        };
        report.merge(sub);
    }
    Ok(report)
}

fn rings_up_to(cfg: &Config, max_order: u64) -> Vec<Ring> {
    cfg.rings
        .iter()
        .filter(|r| r.order().is_some_and(|n| n <= max_order))
        .cloned()
        .collect()
}

/// Ring axioms (orders <= 9, exhaustive), the residue-characteristic and
/// prime-divisibility laws (primes <= 7), and enumeration determinism.
fn suite_rings(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in rings_up_to(cfg, 9) {
        let elems = ring.elements()?;
        let zero = ring.zero();
        let one = ring.one();
        let mut ok = true;
        for x in &elems {
            ok &= ring.add(x, &zero) == *x;
            ok &= ring.mul(x, &one) == *x;
            ok &= ring.add(x, &ring.neg(x)) == zero;
            for y in &elems {
                ok &= ring.add(x, y) == ring.add(y, x);
                ok &= ring.mul(x, y) == ring.mul(y, x);
                for z in &elems {
                    ok &= ring.add(&ring.add(x, y), z) == ring.add(x, &ring.add(y, z));
                    ok &= ring.mul(&ring.mul(x, y), z) == ring.mul(x, &ring.mul(y, z));
                    ok &= ring.mul(x, &ring.add(y, z)) == ring.add(&ring.mul(x, y), &ring.mul(x, z));
                }
            }
        }
        rep.push("rings", format!("ring axioms on {ring}"), ok);

        // unit/inverse consistency
        let mut ok = true;
        for x in &elems {
            match ring.inverse(x) {
                Ok(inv) => ok &= ring.is_unit(x) && ring.mul(x, &inv) == one,
                Err(_) => ok &= !ring.is_unit(x),
            }
        }
        rep.push("rings", format!("units and inverses on {ring}"), ok);

        // residue characteristics vs unit test of p·1 (primes <= 7), and
        // prime divisibility vs invertibility
        let chars = match ring.residue_characteristics() {
            ResidueChars::Finite(s) => s,
            ResidueChars::AllPrimes => unreachable!("finite battery"),
        };
        let mut ok = true;
        for p in [2u64, 3, 5, 7] {
            ok &= chars.contains(&p) != ring.is_unit(&ring.int(p as i64));
            for q in [2u64, 3, 5, 7] {
                if p != q {
                    ok &= ring.divides(&ring.int(p as i64), &ring.int(q as i64))
                        == ring.is_unit(&ring.int(p as i64));
                }
            }
        }
        rep.push("rings", format!("residue characteristic laws on {ring}"), ok);

        // deterministic canonical order, also across re-parsing
        let again = Ring::parse(&ring.spec().to_text())?;
        rep.push(
            "rings",
            format!("canonical enumeration determinism on {ring}"),
            elems == ring.elements()? && elems == again.elements()?,
        );
    }
    Ok(rep)
}

/// Coefficient predicates versus brute-force generator search and witness
/// solvability; normal-form soundness including the star-orbit cross-check.
fn suite_predicates(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in rings_up_to(cfg, 8) {
        let elems = ring.elements()?;
        let star_orbits = orbits::orbits(&ring, &ActionInstance::star_on(DomainName::A2)?)?;
        let mut agree = true;
        let mut nf_sound = true;
        for a in &elems {
            for b in &elems {
                let pt = AlgebraPoint::new(&ring, a.clone(), b.clone());
                agree &= pt.is_radical()?
                    == pt.brute_generator_search(GeneratorKind::Radical)?.is_some();
                agree &= pt.is_artin_schreier()?
                    == pt
                        .brute_generator_search(GeneratorKind::ArtinSchreier)?
                        .is_some();
                agree &= pt.is_separable() == pt.separability_witness()?.is_some();

                // normal forms re-expand by construction; additionally the
                // normal-form point must land in the same star orbit
                let here = star_orbits
                    .orbit_of_point(&Point::Pair(a.clone(), b.clone()))
                    .expect("A2 total");
                if let Some(nf) = pt.radical_normal_form()? {
                    let p = Point::Pair(ring.int(0), nf.param);
                    nf_sound &= star_orbits.orbit_of_point(&p) == Some(here);
                }
                if let Some(nf) = pt.as_normal_form()? {
                    let p = Point::Pair(ring.int(-1), nf.param);
                    nf_sound &= star_orbits.orbit_of_point(&p) == Some(here);
                }
                if pt.is_separable() {
                    if let Ok(nf) = pt.etale_normal_form() {
                        let p = match nf.kind {
                            crate::quad::NormalFormKind::EtaleOdd => {
                                Point::Pair(ring.int(0), ring.neg(&nf.param))
                            }
                            _ => Point::Pair(ring.int(-1), nf.param),
                        };
                        nf_sound &= star_orbits.orbit_of_point(&p) == Some(here);
                    }
                }
            }
        }
        rep.push("predicates", format!("predicate/oracle agreement on {ring}"), agree);
        rep.push("predicates", format!("normal-form soundness on {ring}"), nf_sound);
    }
    Ok(rep)
}

/// Galois conjugation is a ring involution fixing `R·1`, exhaustively over
/// all element pairs for all `(a, b)`, orders <= 4.
fn suite_involution(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in rings_up_to(cfg, 4) {
        let elems = ring.elements()?;
        let mut ok = true;
        for a in &elems {
            for b in &elems {
                let pt = AlgebraPoint::new(&ring, a.clone(), b.clone());
                ok &= pt.trace(&pt.alg_one()) == ring.int(2);
                for r in &elems {
                    let fixed = pt.scalar(r);
                    ok &= pt.galois_conj(&fixed) == fixed;
                }
                let alg = pt.alg_elements()?;
                for u in &alg {
                    ok &= pt.galois_conj(&pt.galois_conj(u)) == *u;
                    for v in &alg {
                        ok &= pt.galois_conj(&pt.alg_mul(u, v))
                            == pt.alg_mul(&pt.galois_conj(u), &pt.galois_conj(v));
                        ok &= pt.galois_conj(&pt.alg_add(u, v))
                            == pt.alg_add(&pt.galois_conj(u), &pt.galois_conj(v));
                        ok &= pt.trace(&pt.alg_add(u, v)) == ring.add(&pt.trace(u), &pt.trace(v));
                    }
                }
            }
        }
        rep.push("involution", format!("Galois involution suite on {ring}"), ok);
    }
    Ok(rep)
}

fn legal_instances() -> Vec<ActionInstance> {
    vec![
        ActionInstance::star_on(DomainName::A2).unwrap(),
        ActionInstance::star_on(DomainName::S).unwrap(),
        ActionInstance::star_on(DomainName::Rset).unwrap(),
        ActionInstance::star_on(DomainName::ASset).unwrap(),
        ActionInstance::diamond(),
        ActionInstance::new(ActionKind::Diamond, GroupChoice::Units, DomainName::UnitsSet).unwrap(),
        ActionInstance::pentagram(),
        ActionInstance::ast_on(DomainName::A1).unwrap(),
        ActionInstance::ast_on(DomainName::L).unwrap(),
    ]
}

/// Group axioms of the semidirect product and its subgroups, the right
/// action law, domain closure, and discriminant equivariance (orders <= 8).
fn suite_actions(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in rings_up_to(cfg, 8) {
        let full = group_elements(&ring, GroupChoice::Full)?;
        let mut ok = true;
        let id = group_identity(&ring);
        for g in &full {
            ok &= group_mul(&ring, &id, g) == *g && group_mul(&ring, g, &id) == *g;
            let inv = group_inv(&ring, g)?;
            ok &= group_mul(&ring, g, &inv) == id && group_mul(&ring, &inv, g) == id;
            for h in &full {
                ok &= group_contains(&ring, GroupChoice::Full, &group_mul(&ring, g, h));
                for k in &full {
                    ok &= group_mul(&ring, &group_mul(&ring, g, h), k)
                        == group_mul(&ring, g, &group_mul(&ring, h, k));
                }
            }
        }
        for which in [GroupChoice::T, GroupChoice::H] {
            let sub = group_elements(&ring, which)?;
            ok &= sub.contains(&id);
            for g in &sub {
                ok &= group_contains(&ring, which, &group_inv(&ring, g)?);
                for h in &sub {
                    ok &= group_contains(&ring, which, &group_mul(&ring, g, h));
                }
            }
        }
        rep.push("actions", format!("semidirect group axioms on {ring}"), ok);

        let mut law = true;
        let mut closure = true;
        for inst in legal_instances() {
            let points = domain_points(&ring, inst.domain)?;
            let group = group_elements(&ring, inst.group)?;
            for p in &points {
                law &= act(&ring, &inst, p, &id)? == *p;
                for g in &group {
                    // act() returns an error if the image escapes the domain;
                    // verify it explicitly here
                    let pg = act(&ring, &inst, p, g)?;
                    closure &= orbits::domain_contains(&ring, inst.domain, &pg)?;
                    for h in &group {
                        let gh = group_mul(&ring, g, h);
                        law &= act(&ring, &inst, p, &gh)? == act(&ring, &inst, &pg, h)?;
                    }
                }
            }
        }
        rep.push("actions", format!("right action law on {ring}"), law);
        rep.push("actions", format!("domain closure on {ring}"), closure);

        let mut equiv = true;
        let star = ActionInstance::star_on(DomainName::A2)?;
        for p in domain_points(&ring, DomainName::A2)? {
            let (a, b) = match &p {
                Point::Pair(a, b) => (a.clone(), b.clone()),
                _ => unreachable!(),
            };
            let disc = AlgebraPoint::new(&ring, a, b).discriminant();
            for g in &full {
                let q = act(&ring, &star, &p, g)?;
                let (qa, qb) = match &q {
                    Point::Pair(a, b) => (a.clone(), b.clone()),
                    _ => unreachable!(),
                };
                let disc_q = AlgebraPoint::new(&ring, qa, qb).discriminant();
                let w_inv = ring.inverse(&g.w)?;
                let w_inv2 = ring.mul(&w_inv, &w_inv);
                equiv &= disc_q == ring.mul(&w_inv2, &disc);
            }
        }
        rep.push("actions", format!("discriminant equivariance on {ring}"), equiv);
    }
    Ok(rep)
}

/// Orbit partitions equal pairwise-isomorphism partitions for every
/// property, plus the one-parameter actions against radical/AS point
/// isomorphism (orders <= 9).
fn suite_moduli(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in rings_up_to(cfg, 9) {
        for property in Property::ALL {
            let cc = orbits::crosscheck_moduli(&ring, property)?;
            if cc.matches {
                rep.push(
                    "moduli",
                    format!("orbits = isomorphism classes for {property} on {ring}"),
                    true,
                );
            } else {
                rep.push_detail(
                    "moduli",
                    format!("orbits = isomorphism classes for {property} on {ring}"),
                    false,
                    format!("first mismatching pair: {:?}", cc.mismatch),
                );
            }
            // partition sanity on the table itself
            let table = orbits::moduli_table(&ring, property)?;
            let total: usize = table.classes.iter().map(|c| c.orbit_size).sum();
            rep.push(
                "moduli",
                format!("orbit sizes partition the {property} domain on {ring}"),
                total == table.domain_size,
            );
        }

        // one-parameter actions vs isomorphism of the embedded points
        let elems = ring.elements()?;
        let pent = orbits::orbits(&ring, &ActionInstance::pentagram())?;
        let ast = orbits::orbits(&ring, &ActionInstance::ast_on(DomainName::A1)?)?;
        let mut pent_ok = true;
        let mut ast_ok = true;
        let mut dia_ok = true;
        let two_unit = ring.is_unit(&ring.int(2));
        let dia = orbits::orbits(&ring, &ActionInstance::diamond())?;
        for x in &elems {
            for y in &elems {
                let rad_iso = iso::is_isomorphic(
                    &AlgebraPoint::new(&ring, ring.int(0), x.clone()),
                    &AlgebraPoint::new(&ring, ring.int(0), y.clone()),
                )?;
                let same_pent = pent.orbit_of_point(&Point::Single(x.clone()))
                    == pent.orbit_of_point(&Point::Single(y.clone()));
                pent_ok &= rad_iso == same_pent;
                if two_unit {
                    let same_dia = dia.orbit_of_point(&Point::Single(x.clone()))
                        == dia.orbit_of_point(&Point::Single(y.clone()));
                    dia_ok &= rad_iso == same_dia;
                }
                let as_iso = iso::is_isomorphic(
                    &AlgebraPoint::new(&ring, ring.int(-1), x.clone()),
                    &AlgebraPoint::new(&ring, ring.int(-1), y.clone()),
                )?;
                let same_ast = ast.orbit_of_point(&Point::Single(x.clone()))
                    == ast.orbit_of_point(&Point::Single(y.clone()));
                ast_ok &= as_iso == same_ast;
            }
        }
        rep.push("moduli", format!("pentagram orbits = radical classes on {ring}"), pent_ok);
        rep.push("moduli", format!("ast orbits = Artin-Schreier classes on {ring}"), ast_ok);
        if two_unit {
            rep.push("moduli", format!("diamond orbits = radical classes on {ring}"), dia_ok);
        }
    }
    Ok(rep)
}

/// The two cross-bijections and the embedding chain.
fn suite_bijections(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in rings_up_to(cfg, 9) {
        let as_h = orbits::bijection_as_to_h(&ring)?;
        rep.push_detail(
            "bijections",
            format!("{} on {ring}", as_h.name),
            as_h.holds(),
            as_h.convention,
        );
        let r_t = orbits::bijection_r_to_t(&ring)?;
        rep.push_detail(
            "bijections",
            format!("{} on {ring}", r_t.name),
            r_t.holds(),
            r_t.convention,
        );
        let emb = orbits::embeddings_report(&ring)?;
        for edge in &emb.edges {
            rep.push(
                "bijections",
                format!("embedding {} on {ring}", edge.name),
                edge.well_defined && edge.injective,
            );
        }
    }
    Ok(rep)
}

/// Symbolic Hopf axioms, the three coactions, the mutation control, and the
/// seeded Laurent arithmetic triples.
fn suite_hopf(cfg: &Config) -> Result<Report> {
    use rand::{Rng, SeedableRng};
    let mut rep = Report::default();
    let hopf_rep = hopf::verify_hopf_axioms(&HopfPresentation::gm_semidirect_ga())?;
    for c in &hopf_rep.checks {
        rep.push("hopf", format!("{}: {}", hopf_rep.target, c.axiom), c.pass);
    }
    let mutated = hopf::verify_hopf_axioms(&HopfPresentation::mutated())?;
    rep.push(
        "hopf",
        "mutated presentation is rejected".to_string(),
        !mutated.passed(),
    );
    for coaction in [
        Coaction::star_on_pairs(),
        Coaction::pentagram_on_line(),
        Coaction::ast_on_line(),
    ] {
        let r = hopf::verify_coaction(&coaction)?;
        for c in &r.checks {
            rep.push("hopf", format!("{}: {}", r.target, c.axiom), c.pass);
        }
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
    let random_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut p = hopf::LaurentPoly::zero();
        for _ in 0..rng.gen_range(0..5) {
            let m = hopf::Mono {
                x: rng.gen_range(-3..4),
                y: rng.gen_range(0..3),
                z: rng.gen_range(0..2),
                t: rng.gen_range(0..2),
                a: rng.gen_range(0..2),
                b: rng.gen_range(0..2),
            };
            p = p.add(&hopf::LaurentPoly::term(m, rng.gen_range(-5..6)));
        }
        p
    };
    let mut ok = true;
    for _ in 0..1000 {
        let f = random_poly(&mut rng);
        let g = random_poly(&mut rng);
        let h = random_poly(&mut rng);
        ok &= f.mul(&g) == g.mul(&f);
        ok &= f.mul(&g).mul(&h) == f.mul(&g.mul(&h));
        ok &= f.mul(&g.add(&h)) == f.mul(&g).add(&f.mul(&h));
    }
    rep.push(
        "hopf",
        format!("Laurent arithmetic on 1000 seeded random triples (seed {})", cfg.seed),
        ok,
    );
    Ok(rep)
}

/// Functor-of-points agreement with the automorphism groups: exhaustive on
/// orders <= 5, deterministically sampled on orders 6..=9.
fn suite_points(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in rings_up_to(cfg, 9) {
        let n = ring.order().unwrap();
        let elems = ring.elements()?;
        let sample: Vec<RingElem> = if n <= 5 {
            elems.clone()
        } else {
            let picks = [0, 1, 2, n / 2, n - 1];
            picks.iter().map(|&i| ring.elem_at(i)).collect()
        };
        let mut ok = true;
        let mut count = 0usize;
        for a in &sample {
            for b in &sample {
                let r = hopf::points_of_aut_hopf(
                    &ring,
                    &AutPresentation::General {
                        a: a.clone(),
                        b: b.clone(),
                    },
                )?;
                ok &= r.passed();
                count += 1;
            }
        }
        for b in &sample {
            let r = hopf::points_of_aut_hopf(&ring, &AutPresentation::Radical { b: b.clone() })?;
            ok &= r.passed();
            count += 1;
        }
        for a in &sample {
            let r = hopf::points_of_aut_hopf(
                &ring,
                &AutPresentation::ArtinSchreier { a: a.clone() },
            )?;
            ok &= r.passed();
            count += 1;
        }
        let mode = if n <= 5 { "exhaustive" } else { "sampled" };
        rep.push(
            "points",
            format!("Hopf points = Aut on {ring} ({mode}, {count} presentations)"),
            ok,
        );
    }
    Ok(rep)
}

/// Fiber tags and observed orders over every field in the configuration.
fn suite_fibers(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in cfg.rings.iter().filter(|r| r.is_field()) {
        let elems = ring.elements()?;
        let mut ok = true;
        for a in &elems {
            for b in &elems {
                let pt = AlgebraPoint::new(ring, a.clone(), b.clone());
                // aut_fiber_type errors when the tag's order formula
                // disagrees with the computed group
                ok &= iso::aut_fiber_type(&pt).is_ok();
            }
        }
        rep.push("fibers", format!("fiber tags match Aut orders over {ring}"), ok);
    }
    Ok(rep)
}

/// Class counts over finite fields: odd characteristic reduces to diamond
/// orbits; characteristic 2 decomposes into the radical (pentagram) and
/// Artin-Schreier (ast) parts.
fn suite_field_counts(cfg: &Config) -> Result<Report> {
    let mut rep = Report::default();
    for ring in cfg.rings.iter().filter(|r| r.is_field()) {
        let f = orbits::moduli_table(ring, Property::F)?.classes.len();
        let sf = orbits::moduli_table(ring, Property::SF)?.classes.len();
        let r_count = orbits::moduli_table(ring, Property::R)?.classes.len();
        let as_count = orbits::moduli_table(ring, Property::AS)?.classes.len();
        let sr = orbits::moduli_table(ring, Property::SR)?.classes.len();
        if ring.characteristic() != 2 {
            let dia = orbits::orbits(ring, &ActionInstance::diamond())?.orbit_count();
            let dia_units = {
                let pts: Vec<Point> = ring
                    .units()?
                    .into_iter()
                    .map(Point::Single)
                    .collect();
                orbits::orbits_on(ring, ActionKind::Diamond, GroupChoice::Units, pts)?
                    .orbit_count()
            };
            rep.push(
                "field-counts",
                format!("F classes = diamond orbits over {ring} ({f})"),
                f == dia,
            );
            rep.push(
                "field-counts",
                format!("SF classes = diamond orbits on units over {ring} ({sf})"),
                sf == dia_units,
            );
        } else {
            let pent = orbits::orbits(ring, &ActionInstance::pentagram())?.orbit_count();
            let ast = orbits::orbits(ring, &ActionInstance::ast_on(DomainName::A1)?)?.orbit_count();
            rep.push(
                "field-counts",
                format!("F classes = pentagram + ast orbits over {ring} ({f})"),
                f == pent + ast,
            );
            rep.push(
                "field-counts",
                format!("R classes = pentagram orbits over {ring} ({r_count})"),
                r_count == pent,
            );
            rep.push(
                "field-counts",
                format!("SF = AS classes = ast orbits over {ring} ({sf})"),
                sf == ast && as_count == ast,
            );
            rep.push(
                "field-counts",
                format!("SR is empty over {ring}"),
                sr == 0,
            );
        }
    }
    Ok(rep)
}

/// Report of the `Z[sqrt(5)]` counterexample: equal discriminants, proven
/// non-isomorphism.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub ring: Ring,
    pub src: AlgebraPoint,
    pub dst: AlgebraPoint,
    pub shared_discriminant: RingElem,
    pub decision: QuadIntDecision,
}

impl CounterexampleReport {
    pub fn proves_nonisomorphic(&self) -> bool {
        matches!(self.decision, QuadIntDecision::NotIsomorphic { .. })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.decision.to_json();
        let obj = v.as_object_mut().expect("object");
        obj.insert("ring".into(), self.ring.spec().to_text().into());
        obj.insert("src".into(), self.src.to_json());
        obj.insert("dst".into(), self.dst.to_json());
        obj.insert(
            "shared_discriminant".into(),
            self.shared_discriminant.to_json(),
        );
        v
    }
}

/// The counterexample over `Z[sqrt(5)]`: `x^2 + x + 1` and
/// `y^2 + sqrt(5) y + 2` share the discriminant `-3` but are not isomorphic.
pub fn zsqrt5_counterexample() -> Result<CounterexampleReport> {
    let ring = Ring::parse("zsqrt(5)")?;
    let src = AlgebraPoint::new(&ring, ring.int(1), ring.int(1));
    let dst = AlgebraPoint::new(&ring, ring.sqrt_gen()?, ring.int(2));
    let d_src = src.discriminant();
    let d_dst = dst.discriminant();
    if d_src != d_dst || d_src != ring.int(-3) {
        return Err(Error::Internal(
            "counterexample discriminants are not the expected -3".into(),
        ));
    }
    let decision = iso::iso_quadint(&src, &dst)?;
    Ok(CounterexampleReport {
        ring,
        src,
        dst,
        shared_discriminant: d_src,
        decision,
    })
}

fn suite_quadint() -> Result<Report> {
    let mut rep = Report::default();
    let ce = zsqrt5_counterexample()?;
    let pass = ce.proves_nonisomorphic();
    let detail = match &ce.decision {
        QuadIntDecision::NotIsomorphic { certificate } => certificate.clone(),
        other => format!("{other:?}"),
    };
    rep.push_detail(
        "quadint",
        "Z[sqrt(5)]: equal discriminant -3, proven non-isomorphic",
        pass,
        detail,
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_shape() {
        let rings = battery();
        assert_eq!(rings.len(), 13);
        assert!(rings.iter().all(|r| r.order().unwrap() <= 9));
        // hypotheses coverage: 2 unit, 2 = 0, 2 zero divisor, non-reduced,
        // non-local
        assert!(rings.iter().any(|r| r.is_unit(&r.int(2))));
        assert!(rings.iter().any(|r| r.is_zero(&r.int(2))));
        assert!(rings
            .iter()
            .any(|r| !r.is_unit(&r.int(2)) && !r.is_zero(&r.int(2))));
    }

    #[test]
    fn counterexample_report() {
        let ce = zsqrt5_counterexample().unwrap();
        assert!(ce.proves_nonisomorphic());
        let v = ce.to_json();
        assert_eq!(v["isomorphic"], false);
        assert_eq!(v["certificate"], "w²=1 forced; 2 ∤ (cw−a)");
        assert_eq!(v["shared_discriminant"], serde_json::json!([-3, 0]));
    }

    #[test]
    fn small_suites_pass() {
        // a cut-down config keeps this unit test quick; the full battery
        // runs in the acceptance suite
        let cfg = Config {
            rings: vec![Ring::zmod(2), Ring::zmod(3), Ring::zmod(4)],
            seed: 0,
        };
        for suite in ["rings", "predicates", "involution", "hopf", "quadint"] {
            let rep = run(&cfg, &[suite.to_string()]).unwrap();
            assert!(rep.passed(), "{suite}:\n{}", rep.render_lines());
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        let cfg = Config {
            rings: vec![Ring::zmod(2)],
            seed: 0,
        };
        assert!(run(&cfg, &["nope".to_string()]).is_err());
    }

    #[test]
    fn report_lines_render() {
        let mut rep = Report::default();
        rep.push("rings", "demo", true);
        rep.push_detail("moduli", "demo2", false, "why");
        let text = rep.render_lines();
        assert!(text.contains("PASS rings: demo"));
        assert!(text.contains("FAIL moduli: demo2 (why)"));
        assert!(!rep.passed());
    }
}
