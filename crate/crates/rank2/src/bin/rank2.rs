//! Command-line front end: classification, isomorphism testing, orbit
//! computation, fiber typing, verification suites, and the quadratic-integer
//! counterexample, with machine-readable output.
//!
//! Exit codes: 0 success, 1 mathematical negative (an `iso` or
//! `counterexample` decision came out "not isomorphic"), 2 usage error,
//! 3 internal verification failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rank2::iso::QuadIntDecision;
use rank2::orbits::{ActionInstance, ActionKind, DomainName, GroupChoice, Property};
use rank2::quad::AlgebraPoint;
use rank2::ring::{Ring, RingElem};
use rank2::{verify, Error};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rank2",
    about = "Moduli of free rank-2 algebras over finite commutative rings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct SizeCap {
    /// Largest ring order accepted by exhaustive commands.
    /// The RANK2_MAX_ORDER environment variable overrides this flag.
    #[arg(long, default_value_t = 64)]
    max_ring_order: u64,
}

impl SizeCap {
    fn effective(&self) -> u64 {
        match std::env::var("RANK2_MAX_ORDER") {
            Ok(v) => v.parse().unwrap_or(self.max_ring_order),
            Err(_) => self.max_ring_order,
        }
    }

    fn check(&self, ring: &Ring) -> Result<(), Error> {
        let cap = self.effective();
        match ring.order() {
            Some(n) if n <= cap => Ok(()),
            Some(n) => Err(Error::Semantic(format!(
                "ring order {n} exceeds the cap {cap}; raise --max-ring-order or RANK2_MAX_ORDER"
            ))),
            None => Err(Error::Semantic(
                "this command needs a finite ring".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the moduli table of a property over a ring.
    Classify {
        /// Ring spec, e.g. "zmod(4)" or "gf(3,2,[1,0,1])".
        #[arg(short, long)]
        ring: String,
        /// One of F, SF, R, SR, AS, SAS.
        #[arg(short, long)]
        property: String,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        cap: SizeCap,
    },
    /// Decide whether (a,b) and (c,d) present isomorphic algebras.
    /// Exits 1 when they do not.
    Iso {
        #[arg(short, long)]
        ring: String,
        /// Element literal (nested integer arrays), e.g. 3 or [1,0].
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(short, long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        cap: SizeCap,
    },
    /// Compute the automorphism group of a point.
    Aut {
        #[arg(short, long)]
        ring: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        cap: SizeCap,
    },
    /// Enumerate the orbits of one of the parameter actions.
    Orbit {
        #[arg(short, long)]
        ring: String,
        /// One of star, diamond, pentagram, ast.
        #[arg(short, long)]
        action: String,
        /// Domain: a2, s, r, as (star) or a1, units, l (one-parameter).
        #[arg(short, long)]
        domain: Option<String>,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        cap: SizeCap,
    },
    /// Tag automorphism fibers over a finite field.
    Fibers {
        #[arg(short, long)]
        ring: String,
        /// Optional point; with no point, every (a, b) is listed.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        cap: SizeCap,
    },
    /// Run property suites. Exits 3 if any check fails.
    Verify {
        /// Suite name or "all"; repeatable.
        #[arg(short, long, default_values_t = vec!["all".to_string()])]
        suite: Vec<String>,
        /// Ring spec; repeatable. Defaults to the built-in battery.
        #[arg(short, long)]
        ring: Vec<String>,
        /// Comma-separated ring specs (alternative to repeated --ring).
        #[arg(long)]
        rings: Option<String>,
        /// Seed for the randomized Laurent arithmetic triples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        cap: SizeCap,
    },
    /// Reproduce the Z[sqrt(5)] counterexample. Exits 1 (a proven
    /// mathematical negative) on success.
    Counterexample {
        /// Which counterexample; only "zsqrt5" is known.
        name: String,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn parse_elem(ring: &Ring, text: &str) -> Result<RingElem, Error> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::Semantic(format!("bad element literal {text:?}: {e}")))?;
    ring.elem_from_json(&value)
}

fn run(out: &mut String) -> Result<u8, Error> {
    use std::fmt::Write;
    macro_rules! outln {
        ($($arg:tt)*) => { writeln!(out, $($arg)*).expect("write to string") };
    }
    macro_rules! outp {
        ($($arg:tt)*) => { write!(out, $($arg)*).expect("write to string") };
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            ring,
            property,
            format,
            cap,
        } => {
            let ring = Ring::parse(&ring)?;
            cap.check(&ring)?;
            let property: Property = property.parse()?;
            let table = rank2::orbits::moduli_table(&ring, property)?;
            match format {
                Format::Json => outln!("{}", table.to_json()),
                Format::Csv => outp!("{}", table.to_csv()),
                Format::Table => {
                    outln!(
                        "{} classes of {} algebras over {}",
                        table.classes.len(),
                        property,
                        ring
                    );
                    outln!("rep_a rep_b orbit_size aut_order disc normal_param");
                    for c in &table.classes {
                        outln!(
                            "{} {} {} {} {} {}",
                            c.rep.0.to_compact_string(),
                            c.rep.1.to_compact_string(),
                            c.orbit_size,
                            c.aut_order,
                            c.disc.to_compact_string(),
                            c.normal_param
                                .as_ref()
                                .map(|x| x.to_compact_string())
                                .unwrap_or_else(|| "-".into()),
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Iso {
            ring,
            a,
            b,
            c,
            d,
            format,
            cap,
        } => {
            let ring = Ring::parse(&ring)?;
            let src = AlgebraPoint::new(&ring, parse_elem(&ring, &a)?, parse_elem(&ring, &b)?);
            let dst = AlgebraPoint::new(&ring, parse_elem(&ring, &c)?, parse_elem(&ring, &d)?);
            let (json, negative) = if ring.is_finite() {
                cap.check(&ring)?;
                let sols = rank2::iso::iso_solutions(&src, &dst)?;
                let isomorphic = !sols.is_empty();
                let certificate = if isomorphic {
                    format!("{} substitution(s) x -> w*y + v", sols.len())
                } else {
                    "no (v,w) satisfies 2v = cw - a and -dw^2 + v^2 + av + b = 0".to_string()
                };
                (
                    serde_json::json!({
                        "isomorphic": isomorphic,
                        "solutions": sols.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                        "certificate": certificate,
                    }),
                    !isomorphic,
                )
            } else {
                let decision = rank2::iso::iso_quadint(&src, &dst)?;
                let negative = matches!(decision, QuadIntDecision::NotIsomorphic { .. });
                (decision.to_json(), negative)
            };
            match format {
                Format::Table => {
                    outln!("isomorphic: {}", json["isomorphic"]);
                    outln!("certificate: {}", json["certificate"].as_str().unwrap_or(""));
                    for s in json["solutions"].as_array().unwrap() {
                        outln!("solution (v, w): {s}");
                    }
                }
                _ => outln!("{json}"),
            }
            Ok(if negative { 1 } else { 0 })
        }
        Command::Aut {
            ring,
            a,
            b,
            format,
            cap,
        } => {
            let ring = Ring::parse(&ring)?;
            cap.check(&ring)?;
            let pt = AlgebraPoint::new(&ring, parse_elem(&ring, &a)?, parse_elem(&ring, &b)?);
            let group = rank2::iso::aut_group(&pt)?;
            match format {
                Format::Table => {
                    outln!("Aut order {} over {}", group.order, ring);
                    for e in &group.elements {
                        outln!(
                            "(v, w) = ({}, {})",
                            e.v.to_compact_string(),
                            e.w.to_compact_string()
                        );
                    }
                }
                _ => {
                    outln!(
                        "{}",
                        serde_json::json!({
                            "ring": ring.spec().to_text(),
                            "point": pt.to_json(),
                            "order": group.order,
                            "elements": group.elements.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
                        })
                    );
                }
            }
            Ok(0)
        }
        Command::Orbit {
            ring,
            action,
            domain,
            format,
            cap,
        } => {
            let ring = Ring::parse(&ring)?;
            cap.check(&ring)?;
            let kind = match action.to_ascii_lowercase().as_str() {
                "star" => ActionKind::Star,
                "diamond" => ActionKind::Diamond,
                "pentagram" => ActionKind::Pentagram,
                "ast" => ActionKind::Ast,
                other => {
                    return Err(Error::Semantic(format!(
                        "unknown action {other:?}; expected star, diamond, pentagram, ast"
                    )))
                }
            };
            let domain = match domain.as_deref() {
                None => match kind {
                    ActionKind::Star => DomainName::A2,
                    _ => DomainName::A1,
                },
                Some(name) => match name.to_ascii_lowercase().as_str() {
                    "a2" => DomainName::A2,
                    "s" => DomainName::S,
                    "r" => DomainName::Rset,
                    "as" => DomainName::ASset,
                    "a1" => DomainName::A1,
                    "units" => DomainName::UnitsSet,
                    "l" => DomainName::L,
                    other => {
                        return Err(Error::Semantic(format!(
                            "unknown domain {other:?}; expected a2, s, r, as, a1, units, l"
                        )))
                    }
                },
            };
            let group = match kind {
                ActionKind::Star => GroupChoice::Full,
                ActionKind::Diamond => GroupChoice::Units,
                ActionKind::Pentagram => GroupChoice::T,
                ActionKind::Ast => GroupChoice::H,
            };
            let instance = ActionInstance::new(kind, group, domain)?;
            let orbit_set = rank2::orbits::orbits(&ring, &instance)?;
            let orbits_json: Vec<serde_json::Value> = orbit_set
                .reps
                .iter()
                .enumerate()
                .map(|(k, &rep)| {
                    let members: Vec<serde_json::Value> = orbit_set
                        .points
                        .iter()
                        .zip(orbit_set.orbit_of.iter())
                        .filter(|(_, &o)| o == k)
                        .map(|(p, _)| p.to_json())
                        .collect();
                    serde_json::json!({
                        "rep": orbit_set.points[rep].to_json(),
                        "size": orbit_set.sizes[k],
                        "points": members,
                    })
                })
                .collect();
            match format {
                Format::Table => {
                    outln!(
                        "{} orbit(s) of {:?} x {:?} on {:?} over {}",
                        orbit_set.orbit_count(),
                        kind,
                        group,
                        domain,
                        ring
                    );
                    for o in &orbits_json {
                        outln!("rep {} size {} points {}", o["rep"], o["size"], o["points"]);
                    }
                }
                _ => outln!(
                    "{}",
                    serde_json::json!({
                        "ring": ring.spec().to_text(),
                        "action": format!("{kind:?}"),
                        "domain": format!("{domain:?}"),
                        "orbits": orbits_json,
                    })
                ),
            }
            Ok(0)
        }
        Command::Fibers {
            ring,
            a,
            b,
            format,
            cap,
        } => {
            let ring = Ring::parse(&ring)?;
            cap.check(&ring)?;
            if !ring.is_field() {
                return Err(Error::Semantic(format!(
                    "fiber typing needs a finite field; {ring} is not one"
                )));
            }
            let points: Vec<AlgebraPoint> = match (&a, &b) {
                (Some(a), Some(b)) => vec![AlgebraPoint::new(
                    &ring,
                    parse_elem(&ring, a)?,
                    parse_elem(&ring, b)?,
                )],
                (None, None) => {
                    let elems = ring.elements()?;
                    let mut pts = Vec::new();
                    for x in &elems {
                        for y in &elems {
                            pts.push(AlgebraPoint::new(&ring, x.clone(), y.clone()));
                        }
                    }
                    pts
                }
                _ => {
                    return Err(Error::Semantic(
                        "fibers needs both --a and --b, or neither".into(),
                    ))
                }
            };
            let mut rows = Vec::new();
            for pt in &points {
                let fiber = rank2::iso::aut_fiber_type(pt)?;
                rows.push(serde_json::json!({
                    "a": pt.a().to_json(),
                    "b": pt.b().to_json(),
                    "tag": fiber.tag,
                    "order": fiber.observed_order,
                }));
            }
            match format {
                Format::Table => {
                    outln!("a b tag order");
                    for r in &rows {
                        outln!("{} {} {} {}", r["a"], r["b"], r["tag"].as_str().unwrap(), r["order"]);
                    }
                }
                _ => outln!(
                    "{}",
                    serde_json::json!({"ring": ring.spec().to_text(), "fibers": rows})
                ),
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            ring,
            rings,
            seed,
            format,
            cap,
        } => {
            let mut specs: Vec<String> = ring;
            if let Some(list) = rings {
                specs.extend(list.split(',').map(|s| s.trim().to_string()));
            }
            let ring_list: Vec<Ring> = if specs.is_empty() {
                verify::battery()
            } else {
                specs
                    .iter()
                    .map(|s| Ring::parse(s))
                    .collect::<Result<_, _>>()?
            };
            for r in &ring_list {
                cap.check(r)?;
            }
            let cfg = verify::Config {
                rings: ring_list,
                seed,
            };
            let report = verify::run(&cfg, &suite)?;
            match format {
                Format::Table => outp!("{}", report.render_lines()),
                _ => outln!("{}", report.to_json()),
            }
            Ok(if report.passed() { 0 } else { 3 })
        }
        Command::Counterexample { name, format } => {
            if name != "zsqrt5" {
                return Err(Error::Semantic(format!(
                    "unknown counterexample {name:?}; only zsqrt5 is available"
                )));
            }
            let ce = verify::zsqrt5_counterexample()?;
            match format {
                Format::Table => {
                    outln!(
                        "over {}: x^2 + x + 1 versus y^2 + sqrt(5) y + 2, shared discriminant {}",
                        ce.ring,
                        ce.shared_discriminant.to_compact_string()
                    );
                    match &ce.decision {
                        QuadIntDecision::NotIsomorphic { certificate } => {
                            outln!("not isomorphic: {certificate}");
                        }
                        other => outln!("unexpected decision: {other:?}"),
                    }
                }
                _ => outln!("{}", ce.to_json()),
            }
            if ce.proves_nonisomorphic() {
                Ok(1)
            } else {
                Err(Error::Internal(
                    "counterexample failed to prove non-isomorphism".into(),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let mut out = String::new();
    let result = run(&mut out);
    // tolerate a closed pipe (e.g. `rank2 ... | head`)
    if let Err(e) = std::io::Write::write_all(&mut std::io::stdout(), out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Syntax { .. } | Error::Semantic(_)) {
                eprintln!(
                    "ring grammar: zmod(N) | gf(P,K,[coeffs]) | prod(spec,...) | \
                     quot(spec,[coeffs]) | zsqrt(D); coefficients low-to-high degree"
                );
            }
            match e {
                Error::Internal(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
