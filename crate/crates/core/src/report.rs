//! Text and JSON renderings of verdicts and Motzkin runs.
//!
//! JSON keys appear in a fixed order and rationals are strings `"num/den"`
//! (or a bare integer), so reports diff cleanly and parse back exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classify::{CandidateVerdict, Conclusion, FieldVerdict};
use crate::field::{PlanePoint, QuadField};
use crate::ideal::FracIdeal;
use crate::lattice::{CoverKind, CoverVerdict};
use crate::motzkin::{covered_inverse_count, MotzkinState};
use crate::util::{fmt_rational, parse_rational};
use crate::{Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize, Deserialize)]
struct IdealDto {
    scale: String,
    a: String,
    b: String,
}

#[derive(Serialize, Deserialize)]
struct PointDto {
    p: String,
    q: String,
}

#[derive(Serialize, Deserialize)]
struct CandidateDto {
    ideal: IdealDto,
    prime: Option<u64>,
    subcase: String,
    verdict: String,
    covering_radius_sq: String,
    disk_radius_sq: String,
    witness: Option<PointDto>,
    generates: bool,
}

#[derive(Serialize, Deserialize)]
struct VerdictDto {
    #[serde(rename = "D")]
    d: i64,
    class_number: u64,
    candidates: Vec<CandidateDto>,
    conclusion: String,
    norm_euclidean: bool,
}

fn kind_str(k: CoverKind) -> &'static str {
    match k {
        CoverKind::Covered => "Covered",
        CoverKind::BoundaryTouch => "BoundaryTouch",
        CoverKind::OpenGap => "OpenGap",
    }
}

fn parse_kind(s: &str) -> Result<CoverKind> {
    Ok(match s {
        "Covered" => CoverKind::Covered,
        "BoundaryTouch" => CoverKind::BoundaryTouch,
        "OpenGap" => CoverKind::OpenGap,
        _ => return Err(Error::Parse(format!("unknown verdict `{s}`"))),
    })
}

fn ideal_dto(i: &FracIdeal) -> IdealDto {
    IdealDto {
        scale: fmt_rational(i.scale()),
        a: i.a().to_string(),
        b: i.b().to_string(),
    }
}

fn point_dto(p: &PlanePoint) -> PointDto {
    PointDto {
        p: fmt_rational(&p.p),
        q: fmt_rational(&p.q),
    }
}

fn rational(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational `{s}`")))
}

fn integer(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

fn to_dto(v: &FieldVerdict) -> VerdictDto {
    VerdictDto {
        d: v.d,
        class_number: v.class_number,
        candidates: v
            .candidates
            .iter()
            .map(|c| CandidateDto {
                ideal: ideal_dto(&c.ideal),
                prime: c.prime,
                subcase: c.subcase.clone(),
                verdict: kind_str(c.cover.kind).to_string(),
                covering_radius_sq: fmt_rational(&c.cover.covering_radius_sq),
                disk_radius_sq: fmt_rational(&c.cover.disk_radius_sq),
                witness: c.cover.witness.as_ref().map(point_dto),
                generates: c.generates,
            })
            .collect(),
        conclusion: v.conclusion.as_str().to_string(),
        norm_euclidean: matches!(
            v.conclusion,
            Conclusion::HasEuclideanIdeal {
                norm_euclidean: true
            }
        ),
    }
}

fn from_dto(dto: VerdictDto) -> Result<FieldVerdict> {
    let field = QuadField::new(dto.d)?;
    let candidates = dto
        .candidates
        .into_iter()
        .map(|c| {
            let ideal = FracIdeal::from_parts(
                &field,
                rational(&c.ideal.scale)?,
                integer(&c.ideal.a)?,
                integer(&c.ideal.b)?,
            )?;
            let witness = match c.witness {
                Some(w) => Some(PlanePoint::new(rational(&w.p)?, rational(&w.q)?)),
                None => None,
            };
            Ok(CandidateVerdict {
                ideal,
                prime: c.prime,
                subcase: c.subcase,
                cover: CoverVerdict {
                    kind: parse_kind(&c.verdict)?,
                    witness,
                    covering_radius_sq: rational(&c.covering_radius_sq)?,
                    disk_radius_sq: rational(&c.disk_radius_sq)?,
                },
                generates: c.generates,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let conclusion = match dto.conclusion.as_str() {
        "HasEuclideanIdeal" => Conclusion::HasEuclideanIdeal {
            norm_euclidean: dto.norm_euclidean,
        },
        "NoEuclideanIdeal" => Conclusion::NoEuclideanIdeal,
        "Inconclusive" => Conclusion::Inconclusive,
        other => return Err(Error::Parse(format!("unknown conclusion `{other}`"))),
    };
    Ok(FieldVerdict {
        d: dto.d,
        class_number: dto.class_number,
        candidates,
        conclusion,
    })
}

/// Rows `h: D,D,…` of the fields with a Euclidean ideal, by class number.
pub fn euclidean_table(verdicts: &[FieldVerdict]) -> Vec<(u64, Vec<i64>)> {
    let mut rows: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
    for v in verdicts.iter().filter(|v| v.conclusion.is_euclidean()) {
        rows.entry(v.class_number).or_default().push(v.d);
    }
    rows.into_iter().collect()
}

fn approx(p: &PlanePoint, d: i64) -> String {
    let (x, y) = p.to_f64(d);
    format!("≈ ({x:.6}, {y:.6})")
}

fn candidate_line(c: &CandidateVerdict, d: i64) -> String {
    let mut s = format!(
        "  {} [{}] {} mu^2={} Nm={}",
        c.ideal,
        c.subcase,
        kind_str(c.cover.kind),
        fmt_rational(&c.cover.covering_radius_sq),
        fmt_rational(&c.cover.disk_radius_sq),
    );
    if let Some(w) = &c.cover.witness {
        write!(s, " hole={} {}", w, approx(w, d)).unwrap();
    }
    s.push_str(if c.generates {
        " generates"
    } else {
        " does-not-generate"
    });
    s
}

pub fn emit_report(verdicts: &[FieldVerdict], format: Format) -> String {
    match format {
        Format::Json => {
            let dtos: Vec<VerdictDto> = verdicts.iter().map(to_dto).collect();
            let mut s = serde_json::to_string_pretty(&dtos).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            if verdicts.is_empty() {
                return s;
            }
            writeln!(s, "class number: fields with a Euclidean ideal").unwrap();
            for (h, ds) in euclidean_table(verdicts) {
                let list: Vec<String> = ds.iter().map(i64::to_string).collect();
                writeln!(s, "{h}: {}", list.join(",")).unwrap();
            }
            writeln!(s).unwrap();
            for v in verdicts {
                let tail = match v.conclusion {
                    Conclusion::HasEuclideanIdeal {
                        norm_euclidean: true,
                    } => " (norm-Euclidean)",
                    _ => "",
                };
                writeln!(
                    s,
                    "D={} h={} {}{}",
                    v.d,
                    v.class_number,
                    v.conclusion.as_str(),
                    tail
                )
                .unwrap();
                for c in &v.candidates {
                    writeln!(s, "{}", candidate_line(c, v.d)).unwrap();
                }
            }
            s
        }
    }
}

pub fn parse_json_report(text: &str) -> Result<Vec<FieldVerdict>> {
    let dtos: Vec<VerdictDto> = serde_json::from_str(text)?;
    dtos.into_iter().map(from_dto).collect()
}

#[derive(Serialize)]
struct CoverDto {
    #[serde(rename = "D")]
    d: i64,
    ideal: IdealDto,
    generators: String,
    verdict: String,
    covering_radius_sq: String,
    disk_radius_sq: String,
    witness: Option<PointDto>,
}

pub fn cover_report(c: &FracIdeal, v: &CoverVerdict, format: Format) -> String {
    let d = c.field().d();
    match format {
        Format::Json => {
            let dto = CoverDto {
                d,
                ideal: ideal_dto(c),
                generators: c.to_string(),
                verdict: kind_str(v.kind).to_string(),
                covering_radius_sq: fmt_rational(&v.covering_radius_sq),
                disk_radius_sq: fmt_rational(&v.disk_radius_sq),
                witness: v.witness.as_ref().map(point_dto),
            };
            serde_json::to_string_pretty(&dto).expect("plain data serializes") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "D={d} C={c}").unwrap();
            writeln!(s, "{}", kind_str(v.kind)).unwrap();
            writeln!(
                s,
                "covering radius^2 = {}",
                fmt_rational(&v.covering_radius_sq)
            )
            .unwrap();
            writeln!(s, "disk radius^2 = {}", fmt_rational(&v.disk_radius_sq)).unwrap();
            if let Some(w) = &v.witness {
                writeln!(s, "witness {} {}", w, approx(w, d)).unwrap();
            }
            s
        }
    }
}

#[derive(Serialize)]
struct LevelDto {
    level: usize,
    admitted: usize,
    max_inverse_norm: u64,
    bound: u64,
}

#[derive(Serialize)]
struct MotzkinDto {
    #[serde(rename = "D")]
    d: i64,
    c: IdealDto,
    status: String,
    target: u64,
    levels: usize,
    union_size: usize,
    inverses_covered: usize,
    inverses_total: usize,
    excluded: Vec<IdealDto>,
    violations: usize,
    profile: Vec<LevelDto>,
}

pub fn motzkin_report(state: &MotzkinState, format: Format) -> String {
    let target = state.target();
    let (hit, total) = covered_inverse_count(state, target);
    let excluded = state.excluded_up_to(target);
    match format {
        Format::Json => {
            let dto = MotzkinDto {
                d: state.field().d(),
                c: ideal_dto(state.c()),
                status: state.status().to_string(),
                target,
                levels: state.levels().len(),
                union_size: state.union_size(),
                inverses_covered: hit,
                inverses_total: total,
                excluded: excluded.iter().map(ideal_dto).collect(),
                violations: state.violations().len(),
                profile: state
                    .profile()
                    .iter()
                    .map(|p| LevelDto {
                        level: p.level,
                        admitted: p.admitted,
                        max_inverse_norm: p.max_inverse_norm,
                        bound: p.bound,
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&dto).expect("plain data serializes") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "D={} C={}", state.field().d(), state.c()).unwrap();
            writeln!(s, "status {}", state.status()).unwrap();
            writeln!(
                s,
                "levels {} union {} violations {}",
                state.levels().len(),
                state.union_size(),
                state.violations().len()
            )
            .unwrap();
            writeln!(
                s,
                "inverses of integral ideals of norm <= {target}: {hit}/{total} in the union"
            )
            .unwrap();
            let reach = state
                .profile()
                .iter()
                .map(|p| p.max_inverse_norm)
                .max()
                .unwrap_or(1);
            writeln!(s, "largest Nm(I^-1) admitted: {reach}").unwrap();
            writeln!(s, "level admitted max_inverse_norm bound").unwrap();
            for p in state.profile() {
                writeln!(
                    s,
                    "{} {} {} {}",
                    p.level, p.admitted, p.max_inverse_norm, p.bound
                )
                .unwrap();
            }
            for i in &excluded {
                writeln!(s, "excluded {i}").unwrap();
            }
            s
        }
    }
}
