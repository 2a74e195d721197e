//! The Motzkin-type level sets for a candidate Euclidean ideal `C`.
//!
//! `A_0 = {R}` and `A_i` adds every `I ∈ E` such that each `x ∈ IC \ C` has
//! some `y ∈ C` with `(x - y)⁻¹IC ∈ A_{i-1}`. `C` is Euclidean exactly when
//! the union of the `A_i` is all of `E`, and then `ψ(I) = min{i : I ∈ A_i}` is
//! the smallest Euclidean algorithm for `C`. Since `C = -C`, writing `x + y`
//! instead of `x - y` describes the same sets.
//!
//! Two constraints keep each step finite:
//!
//! - a new member of level `i` lies in the class of `C^{-i}`;
//! - it satisfies `Nm(I⁻¹) ≤ |O_K^×|·|S| + 1`, where `S` is the part of
//!   `A_{i-1}` in the class of `C^{-(i-1)}`.
//!
//! The existential `∃ y` is decided exactly. `(x - y)⁻¹IC = J` means that
//! `x - y` generates the principal ideal `IC·J⁻¹`, so for each `J` the
//! reachable cosets of `IC / C` are those of `u·g` for the units `u` and a
//! generator `g` of `IC·J⁻¹`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::field::{FieldElement, QuadField};
use crate::ideal::{FracIdeal, IdealClassLabel};
use crate::par::{self, Execution};
use crate::util::{fmt_rational, parse_rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MotzkinStatus {
    Running,
    /// A full step admitted nothing, so the union is final.
    Stabilized,
    /// The level budget ran out, or every member of `E` up to the target
    /// inverse norm is already in the union.
    BudgetExhausted,
}

impl std::fmt::Display for MotzkinStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl MotzkinStatus {
    fn as_str(self) -> &'static str {
        match self {
            MotzkinStatus::Running => "running",
            MotzkinStatus::Stabilized => "stabilized",
            MotzkinStatus::BudgetExhausted => "budget-exhausted",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "running" => MotzkinStatus::Running,
            "stabilized" => MotzkinStatus::Stabilized,
            "budget-exhausted" => MotzkinStatus::BudgetExhausted,
            _ => return None,
        })
    }
}

/// Per-level growth record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub level: usize,
    pub admitted: usize,
    /// Largest `Nm(I⁻¹)` admitted at this level.
    pub max_inverse_norm: u64,
    /// Candidate bound `|O_K^×|·|S| + 1` used for this level.
    pub bound: u64,
    pub candidates: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    /// `I ∈ A_i \ A_{i-1}` has the class of `C^{-i}`.
    Class,
    /// `Nm(I⁻¹) ≤ |O_K^×|·|A_{i-1}| + 1`.
    Norm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub level: usize,
    pub ideal: FracIdeal,
    pub law: Law,
}

/// Coset coverage gathered so far for one candidate.
#[derive(Clone, Debug)]
struct Progress {
    ic: FracIdeal,
    covered: HashSet<FieldElement>,
    needed: usize,
    /// Prefix of the class bucket already processed.
    seen: usize,
}

impl Progress {
    fn new(ideal: &FracIdeal, c: &FracIdeal) -> Self {
        let needed = inverse_norm(ideal) as usize - 1;
        Progress {
            ic: ideal * c,
            covered: HashSet::new(),
            needed,
            seen: 0,
        }
    }

    fn complete(&self) -> bool {
        self.covered.len() >= self.needed
    }

    fn absorb(&mut self, c: &FracIdeal, units: &[FieldElement], bucket: &[FracIdeal]) {
        while !self.complete() && self.seen < bucket.len() {
            let j = &bucket[self.seen];
            self.seen += 1;
            mark_cosets(&self.ic, c, j, units, &mut self.covered);
        }
    }
}

/// Marks the cosets of `IC / C` whose elements `x` admit `y ∈ C` with
/// `(x - y)⁻¹IC = J`.
fn mark_cosets(
    ic: &FracIdeal,
    c: &FracIdeal,
    j: &FracIdeal,
    units: &[FieldElement],
    covered: &mut HashSet<FieldElement>,
) {
    let target = ic * &j.inverse();
    if let Some(g) = target.is_principal() {
        for u in units {
            let rep = c.coset_rep(&(u * &g));
            if !rep.is_zero() {
                covered.insert(rep);
            }
        }
    }
}

fn inverse_norm(ideal: &FracIdeal) -> u64 {
    ideal
        .norm()
        .recip()
        .to_integer()
        .to_u64()
        .expect("inverse norm fits in u64")
}

/// All `I ∈ E` with `Nm(I⁻¹) ≤ norm_bound`, i.e. inverses of the integral
/// ideals of norm at most `norm_bound`, optionally restricted to one class.
/// Ordered by `Nm(I⁻¹)`, then by normal form.
pub fn enumerate_e_up_to(
    field: &QuadField,
    norm_bound: u64,
    class_filter: Option<&IdealClassLabel>,
) -> Vec<FracIdeal> {
    let t = field.omega_trace() as i128;
    let n = field.omega_norm() as i128;
    let mut out: Vec<(u64, FracIdeal)> = Vec::new();
    let mut c = 1u64;
    while c * c <= norm_bound {
        for a in 1..=norm_bound / (c * c) {
            for b in 0..a {
                let bi = b as i128;
                if (bi * bi + t * bi + n) % a as i128 != 0 {
                    continue;
                }
                let j = FracIdeal::from_parts(
                    field,
                    crate::Rational::from_integer(BigInt::from(c)),
                    BigInt::from(a),
                    BigInt::from(b),
                )
                .expect("valid normal form");
                let inv = j.inverse();
                if class_filter.is_some_and(|cl| inv.class() != *cl) {
                    continue;
                }
                out.push((c * c * a, inv));
            }
        }
        c += 1;
    }
    out.sort_by(|(n1, i1), (n2, i2)| {
        n1.cmp(n2)
            .then_with(|| i1.a().cmp(i2.a()))
            .then_with(|| i1.b().cmp(i2.b()))
            .then_with(|| i1.scale().cmp(i2.scale()))
    });
    out.into_iter().map(|(_, i)| i).collect()
}

/// Whether `I` enters the next level given the accumulated set `prior`.
pub fn member_test(i: &FracIdeal, c: &FracIdeal, prior: &HashSet<FracIdeal>) -> Result<bool> {
    if i.field() != c.field() {
        return Err(Error::FieldMismatch(i.field().d(), c.field().d()));
    }
    if !i.in_e() {
        return Err(Error::NotInE);
    }
    let mut progress = Progress::new(i, c);
    let wanted = progress.ic.class();
    let mut bucket: Vec<FracIdeal> = prior
        .iter()
        .filter(|j| j.class() == wanted)
        .cloned()
        .collect();
    bucket.sort_by(|x, y| (x.a(), x.b(), x.scale()).cmp(&(y.a(), y.b(), y.scale())));
    progress.absorb(c, &i.field().units(), &bucket);
    Ok(progress.complete())
}

#[derive(Clone, Debug)]
pub struct MotzkinState {
    field: QuadField,
    c: FracIdeal,
    levels: Vec<Vec<FracIdeal>>,
    psi: HashMap<FracIdeal, usize>,
    status: MotzkinStatus,
    target: u64,
    profile: Vec<LevelStats>,
    violations: Vec<Violation>,
    exec: Execution,
    c_class: IdealClassLabel,
    by_class: HashMap<IdealClassLabel, Vec<FracIdeal>>,
    /// `E` up to `universe_bound`, with inverse norms and classes.
    universe: Vec<(FracIdeal, u64, IdealClassLabel)>,
    universe_bound: u64,
    progress: HashMap<FracIdeal, Progress>,
}

impl PartialEq for MotzkinState {
    /// Compares the mathematical content, not caches.
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
            && self.levels == other.levels
            && self.status == other.status
            && self.target == other.target
    }
}

impl MotzkinState {
    /// `A_0 = {R}` for the nonzero integral ideal `c`. The run stops once every
    /// `I ∈ E` with `Nm(I⁻¹) ≤ max_inverse_norm` has entered. Levels are always
    /// computed in full, so the target never cuts off a candidate.
    pub fn new(c: &FracIdeal, max_inverse_norm: u64) -> Result<Self> {
        if !c.is_integral() {
            return Err(Error::NotAnIdeal(format!("{c} is not integral")));
        }
        let field = *c.field();
        let unit = FracIdeal::unit(&field);
        let mut state = MotzkinState {
            field,
            c: c.clone(),
            levels: vec![vec![unit.clone()]],
            psi: HashMap::from([(unit.clone(), 0)]),
            status: MotzkinStatus::Running,
            target: max_inverse_norm,
            profile: vec![LevelStats {
                level: 0,
                admitted: 1,
                max_inverse_norm: 1,
                bound: 1,
                candidates: 1,
            }],
            violations: Vec::new(),
            exec: Execution::default(),
            c_class: c.class(),
            by_class: HashMap::from([(unit.class(), vec![unit])]),
            universe: Vec::new(),
            universe_bound: 0,
            progress: HashMap::new(),
        };
        state.extend_universe(max_inverse_norm.max(1));
        Ok(state)
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    fn extend_universe(&mut self, bound: u64) {
        if bound <= self.universe_bound {
            return;
        }
        let lo = self.universe_bound;
        let fresh = enumerate_e_up_to(&self.field, bound, None)
            .into_iter()
            .map(|i| (inverse_norm(&i), i))
            .filter(|(n, _)| *n > lo)
            .map(|(n, i)| {
                let cl = i.class();
                (i, n, cl)
            });
        self.universe.extend(fresh);
        self.universe_bound = bound;
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn c(&self) -> &FracIdeal {
        &self.c
    }

    /// `levels[i] = A_i \ A_{i-1}`.
    pub fn levels(&self) -> &[Vec<FracIdeal>] {
        &self.levels
    }

    pub fn status(&self) -> MotzkinStatus {
        self.status
    }

    /// Target inverse norm.
    pub fn target(&self) -> u64 {
        self.target
    }

    /// Whether every `I ∈ E` with `Nm(I⁻¹) ≤ target` is in the union.
    pub fn target_reached(&self) -> bool {
        self.excluded_up_to(self.target).is_empty()
    }

    pub fn profile(&self) -> &[LevelStats] {
        &self.profile
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// `ψ(I)`, the level at which `I` entered, if it has.
    pub fn psi(&self, ideal: &FracIdeal) -> Option<usize> {
        self.psi.get(ideal).copied()
    }

    pub fn union_size(&self) -> usize {
        self.psi.len()
    }

    /// Members of `E` with `Nm(I⁻¹) ≤ bound` that are not (yet) in the union.
    /// `bound` is capped at the largest norm enumerated so far, which is at
    /// least the target.
    pub fn excluded_up_to(&self, bound: u64) -> Vec<FracIdeal> {
        self.universe
            .iter()
            .filter(|(i, n, _)| *n <= bound && !self.psi.contains_key(i))
            .map(|(i, _, _)| i.clone())
            .collect()
    }

    /// Computes the next level.
    pub fn step(&mut self) {
        if self.status != MotzkinStatus::Running {
            return;
        }
        let level = self.levels.len();
        let target = self.c_class.pow(-(level as i64));
        let prev = self.c_class.pow(1 - level as i64);
        let bucket: Vec<FracIdeal> = self.by_class.get(&prev).cloned().unwrap_or_default();
        let bound = self.field.unit_count() as u64 * bucket.len() as u64 + 1;
        self.extend_universe(bound);

        let candidates: Vec<FracIdeal> = self
            .universe
            .iter()
            .filter(|(i, n, cl)| *n <= bound && *cl == target && !self.psi.contains_key(i))
            .map(|(i, _, _)| i.clone())
            .collect();
        let n_candidates = candidates.len();
        let work: Vec<(FracIdeal, Progress)> = candidates
            .into_iter()
            .map(|i| {
                let p = self
                    .progress
                    .remove(&i)
                    .unwrap_or_else(|| Progress::new(&i, &self.c));
                (i, p)
            })
            .collect();
        let units = self.field.units();
        let c = &self.c;
        let done = par::map(self.exec, work, |(i, mut p)| {
            p.absorb(c, &units, &bucket);
            (i, p)
        });

        let mut admitted = Vec::new();
        for (i, p) in done {
            if p.complete() {
                admitted.push(i);
            } else {
                self.progress.insert(i, p);
            }
        }
        if admitted.is_empty() {
            self.status = MotzkinStatus::Stabilized;
            return;
        }
        self.check_laws(level, &admitted);
        let max_inv = admitted.iter().map(inverse_norm).max().unwrap_or(0);
        self.profile.push(LevelStats {
            level,
            admitted: admitted.len(),
            max_inverse_norm: max_inv,
            bound,
            candidates: n_candidates,
        });
        self.commit(level, admitted);
    }

    fn commit(&mut self, level: usize, admitted: Vec<FracIdeal>) {
        for i in &admitted {
            self.psi.insert(i.clone(), level);
            self.by_class.entry(i.class()).or_default().push(i.clone());
        }
        self.levels.push(admitted);
    }

    /// Checks the class and norm laws for a new level, computing the class of
    /// `C^{-level}` through ideal products rather than form composition.
    fn check_laws(&mut self, level: usize, admitted: &[FracIdeal]) {
        let c_inv = self.c.inverse();
        let mut rep = FracIdeal::unit(&self.field);
        for _ in 0..level {
            rep = FracIdeal::from_class(&self.field, &(&rep * &c_inv).class());
        }
        let expected = rep.class();
        let prior: u64 = self.levels.iter().map(|l| l.len() as u64).sum();
        let norm_cap = self.field.unit_count() as u64 * prior + 1;
        for i in admitted {
            if i.class() != expected {
                self.violations.push(Violation {
                    level,
                    ideal: i.clone(),
                    law: Law::Class,
                });
            }
            if inverse_norm(i) > norm_cap {
                self.violations.push(Violation {
                    level,
                    ideal: i.clone(),
                    law: Law::Norm,
                });
            }
        }
    }

    /// Steps until the state stabilizes, reaches its target, or has
    /// `max_levels` levels beyond `A_0`.
    pub fn run(&mut self, max_levels: usize) {
        while self.status == MotzkinStatus::Running {
            if self.levels.len() > max_levels || self.target_reached() {
                self.status = MotzkinStatus::BudgetExhausted;
                break;
            }
            self.step();
        }
    }

    /// Continues a finished run under new budgets; a stabilized run stays put.
    pub fn resume(&mut self, max_levels: usize, max_inverse_norm: u64) {
        if self.status == MotzkinStatus::Stabilized {
            return;
        }
        self.target = max_inverse_norm;
        self.extend_universe(max_inverse_norm);
        self.status = MotzkinStatus::Running;
        self.run(max_levels);
    }

    /// Line-oriented serialization: a header followed by one
    /// `level <i> <scale> <a> <b>` line per ideal.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.c;
        writeln!(s, "quadeuclid-motzkin 1").unwrap();
        writeln!(s, "d {}", self.field.d()).unwrap();
        writeln!(s, "c {} {} {}", fmt_rational(c.scale()), c.a(), c.b()).unwrap();
        writeln!(s, "target {}", self.target).unwrap();
        writeln!(s, "status {}", self.status.as_str()).unwrap();
        for (lvl, ideals) in self.levels.iter().enumerate() {
            for i in ideals {
                writeln!(
                    s,
                    "level {lvl} {} {} {}",
                    fmt_rational(i.scale()),
                    i.a(),
                    i.b()
                )
                .unwrap();
            }
        }
        s
    }

    /// Parses [`MotzkinState::to_text`] output. Loaded levels are re-checked
    /// against the class and norm laws; breaches land in `violations()`.
    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("motzkin state: {msg}"));
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        if lines.next() != Some("quadeuclid-motzkin 1") {
            return Err(bad("missing header"));
        }
        let mut field = None;
        let mut c = None;
        let mut target = None;
        let mut status = MotzkinStatus::Running;
        let mut entries: Vec<(usize, FracIdeal)> = Vec::new();
        let parse_ideal = |field: &QuadField, parts: &[&str]| -> Result<FracIdeal> {
            let [s, a, b] = parts else {
                return Err(bad("ideal needs scale, a, b"));
            };
            let scale = parse_rational(s).ok_or_else(|| bad("scale"))?;
            let a: BigInt = a.parse().map_err(|_| bad("a"))?;
            let b: BigInt = b.parse().map_err(|_| bad("b"))?;
            FracIdeal::from_parts(field, scale, a, b)
        };
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["d", d] => field = Some(QuadField::new(d.parse().map_err(|_| bad("d"))?)?),
                ["c", rest @ ..] => {
                    let f = field.as_ref().ok_or_else(|| bad("c before d"))?;
                    c = Some(parse_ideal(f, rest)?);
                }
                ["target", t] => target = Some(t.parse().map_err(|_| bad("target"))?),
                ["status", s] => status = MotzkinStatus::parse(s).ok_or_else(|| bad("status"))?,
                ["level", l, rest @ ..] => {
                    let f = field.as_ref().ok_or_else(|| bad("level before d"))?;
                    let l: usize = l.parse().map_err(|_| bad("level index"))?;
                    entries.push((l, parse_ideal(f, rest)?));
                }
                _ => return Err(bad(&format!("unrecognized line `{line}`"))),
            }
        }
        let c = c.ok_or_else(|| bad("missing c"))?;
        let target = target.ok_or_else(|| bad("missing target"))?;
        let mut state = MotzkinState::new(&c, target)?;
        let top = entries.iter().map(|(l, _)| *l).max().unwrap_or(0);
        let mut levels: Vec<Vec<FracIdeal>> = vec![Vec::new(); top + 1];
        for (l, i) in entries {
            levels[l].push(i);
        }
        if levels[0] != state.levels[0] {
            return Err(bad("level 0 must be exactly the unit ideal"));
        }
        for (lvl, ideals) in levels.into_iter().enumerate().skip(1) {
            if ideals.is_empty() {
                return Err(bad("empty level"));
            }
            let prev = state.c_class.pow(1 - lvl as i64);
            let s_len = state.by_class.get(&prev).map_or(0, Vec::len) as u64;
            state.profile.push(LevelStats {
                level: lvl,
                admitted: ideals.len(),
                max_inverse_norm: ideals.iter().map(inverse_norm).max().unwrap_or(0),
                bound: state.field.unit_count() as u64 * s_len + 1,
                // not recorded in the text form
                candidates: 0,
            });
            state.check_laws(lvl, &ideals);
            state.commit(lvl, ideals);
        }
        state.status = status;
        Ok(state)
    }
}

/// Runs the construction for `c` until it stabilizes, covers `E` up to
/// `max_inverse_norm`, or uses up `max_levels`.
pub fn run_motzkin(
    field: &QuadField,
    c: &FracIdeal,
    max_levels: usize,
    max_inverse_norm: u64,
) -> Result<MotzkinState> {
    if c.field() != field {
        return Err(Error::FieldMismatch(field.d(), c.field().d()));
    }
    let mut state = MotzkinState::new(c, max_inverse_norm)?;
    state.run(max_levels);
    Ok(state)
}

/// Convenience for tests and reports: the number of integral ideals of norm
/// at most `bound` whose inverses lie in the union.
pub fn covered_inverse_count(state: &MotzkinState, bound: u64) -> (usize, usize) {
    let all = enumerate_e_up_to(state.field(), bound, None);
    let hit = all.iter().filter(|i| state.psi(i).is_some()).count();
    (hit, all.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::primes_above;
    use crate::Rational;

    fn k(d: i64) -> QuadField {
        QuadField::new(d).unwrap()
    }

    fn p2(d: i64) -> FracIdeal {
        primes_above(&k(d), 2).unwrap()[0].0.clone()
    }

    #[test]
    fn enumeration_small_bounds() {
        let f = k(5);
        assert_eq!(enumerate_e_up_to(&f, 1, None), vec![FracIdeal::unit(&f)]);
        let e3 = enumerate_e_up_to(&f, 3, None);
        let norms: Vec<Rational> = e3.iter().map(|i| i.norm().recip()).collect();
        let r = |n: i64| Rational::from_integer(BigInt::from(n));
        assert_eq!(norms, vec![r(1), r(2), r(3), r(3)]);
        let mut want: Vec<FracIdeal> = vec![FracIdeal::unit(&f)];
        for p in [2, 3] {
            want.extend(
                primes_above(&f, p)
                    .unwrap()
                    .into_iter()
                    .map(|(i, _)| i.inverse()),
            );
        }
        for w in &want {
            assert!(e3.contains(w));
        }
        assert!(e3.iter().all(FracIdeal::in_e));
    }

    #[test]
    fn enumeration_d23_bound_four() {
        let f = k(23);
        let e = enumerate_e_up_to(&f, 4, None);
        let ps = primes_above(&f, 2).unwrap();
        let (a, b) = (&ps[0].0, &ps[1].0);
        for want in [
            a.inverse(),
            b.inverse(),
            (a * a).inverse(),
            (a * b).inverse(),
            (b * b).inverse(),
        ] {
            assert!(e.contains(&want));
        }
        // R, P2, P2', P3, P3', P2², P2P2' = (2), P2'²
        assert_eq!(e.len(), 8);
    }

    #[test]
    fn unit_ideal_is_vacuous_member() {
        let f = k(7);
        let c = p2(7);
        let prior = HashSet::from([FracIdeal::unit(&f)]);
        assert!(member_test(&FracIdeal::unit(&f), &c, &prior).unwrap());
        assert!(member_test(&c.inverse(), &c, &prior).unwrap());
        assert!(matches!(member_test(&c, &c, &prior), Err(Error::NotInE)));
    }

    #[test]
    fn first_step_bound_is_three() {
        let st = run_motzkin(&k(23), &p2(23), 1, 100).unwrap();
        assert_eq!(st.profile()[1].bound, 3);
        assert!(st.levels()[1].iter().all(|i| inverse_norm(i) <= 3));

        let f = k(1);
        let st = run_motzkin(&f, &FracIdeal::unit(&f), 1, 100).unwrap();
        assert_eq!(st.profile()[1].bound, 5);
        let f = k(3);
        let st = run_motzkin(&f, &FracIdeal::unit(&f), 1, 100).unwrap();
        assert_eq!(st.profile()[1].bound, 7);
    }

    #[test]
    fn zero_level_budget() {
        let st = run_motzkin(&k(5), &p2(5), 0, 10).unwrap();
        assert_eq!(st.levels().len(), 1);
        assert_eq!(st.status(), MotzkinStatus::BudgetExhausted);
    }

    #[test]
    fn norm_euclidean_ring_reaches_target() {
        let f = k(2);
        let st = run_motzkin(&f, &FracIdeal::unit(&f), 200, 30).unwrap();
        assert!(st.target_reached());
        assert_eq!(st.status(), MotzkinStatus::BudgetExhausted);
        assert!(st.violations().is_empty());
    }

    #[test]
    fn text_round_trip_and_resume() {
        let c = p2(15);
        let mut a = MotzkinState::new(&c, 20).unwrap();
        a.run(3);
        let text = a.to_text();
        let mut b = MotzkinState::from_text(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_text(), text);
        a.resume(8, 20);
        b.resume(8, 20);
        assert_eq!(a, b);
        let mut straight = MotzkinState::new(&c, 20).unwrap();
        straight.run(8);
        assert_eq!(straight.levels(), a.levels());
        assert!(MotzkinState::from_text("nonsense").is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let c = p2(23);
        let mut s = MotzkinState::new(&c, 30)
            .unwrap()
            .with_execution(Execution::Sequential);
        let mut p = MotzkinState::new(&c, 30)
            .unwrap()
            .with_execution(Execution::Parallel);
        s.run(50);
        p.run(50);
        assert_eq!(s, p);
        assert!(s.union_size() > 1);
    }
}
