//! Verification harness: each check sweeps a ball (or a fixed family) and
//! counts violations of one family of identities. A passing check reports
//! zero failures; failure details are collected for diagnostics.

use crate::ball::Ball;
use crate::cells;
use crate::error::Error;
use crate::extended::ExtendedAffinePermutation;
use crate::pattern;
use crate::perm::AffinePermutation;
use crate::roots;
use crate::word;

/// Most failure notes retained per check.
const MAX_NOTES: usize = 5;

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    /// Number of elementary assertions evaluated.
    pub population: usize,
    pub failures: usize,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        Self { name, population: 0, failures: 0, notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn fail(&mut self, note: String) {
        self.failures += 1;
        if self.notes.len() < MAX_NOTES {
            self.notes.push(note);
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckKind {
    /// The four full-commutativity routes agree on every element.
    FourWay,
    /// First part of sigma at most 2 iff 321-avoiding, plus dominance
    /// closure over realized partitions.
    CellClosure,
    /// Length changes under one-generator multiplication match the window
    /// comparisons, on both sides; generator crossings are exactly the
    /// adjacent transposition pairs.
    LengthDescent,
    /// Rotation conjugation shifts generators; extended predicates delegate
    /// to the body and match a direct scan of the shifted window.
    RotationExtension,
    /// Bounded 321 scan agrees with a wide brute force; witnesses are
    /// normalized instances.
    BoundedScan,
    /// Cell representative family: counts, partitions, distinctness.
    CellRepresentatives,
    /// Sigma is inverse-invariant and the windowed chain statistic is
    /// stable under window doubling.
    SigmaInverse,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::FourWay,
        CheckKind::CellClosure,
        CheckKind::LengthDescent,
        CheckKind::RotationExtension,
        CheckKind::BoundedScan,
        CheckKind::CellRepresentatives,
        CheckKind::SigmaInverse,
    ];

    /// Stable identifier used in CLI flags and reports.
    pub fn id(self) -> &'static str {
        match self {
            CheckKind::FourWay => "thm27",
            CheckKind::CellClosure => "cells",
            CheckKind::LengthDescent => "lemma25",
            CheckKind::RotationExtension => "lemma42",
            CheckKind::BoundedScan => "prop23",
            CheckKind::CellRepresentatives => "prop51",
            CheckKind::SigmaInverse => "sigma-inverse",
        }
    }

    pub fn from_id(id: &str) -> Option<CheckKind> {
        CheckKind::ALL.into_iter().find(|k| k.id() == id)
    }

    /// Checks that sweep a ball; the others run from the rank alone.
    pub fn needs_ball(self) -> bool {
        !matches!(self, CheckKind::CellRepresentatives)
    }
}

/// Runs one check. `ball` may be None only for checks that do not need one;
/// RotationExtension degrades to the conjugation identities alone without a
/// ball. `radius` multiplies n to give brute-force scan radii.
pub fn run_check(
    kind: CheckKind,
    n: usize,
    ball: Option<&Ball>,
    radius: i64,
) -> Result<CheckReport, Error> {
    match kind {
        CheckKind::FourWay => check_four_way(expect_ball(ball)?),
        CheckKind::CellClosure => Ok(check_cell_closure(expect_ball(ball)?)),
        CheckKind::LengthDescent => Ok(check_length_descent(expect_ball(ball)?, radius)),
        CheckKind::RotationExtension => check_rotation_extension(n, ball),
        CheckKind::BoundedScan => Ok(check_bounded_scan(expect_ball(ball)?, radius)),
        CheckKind::CellRepresentatives => check_representatives(n),
        CheckKind::SigmaInverse => Ok(check_sigma_inverse(expect_ball(ball)?)),
    }
}

fn expect_ball(ball: Option<&Ball>) -> Result<&Ball, Error> {
    ball.ok_or_else(|| Error::Parse("this check requires a ball; pass --L".into()))
}

/// Per-length element counts and FC counts of a ball.
pub fn ball_summary(ball: &Ball) -> (Vec<usize>, Vec<usize>) {
    let counts = ball.counts();
    let fc_counts = ball
        .levels()
        .iter()
        .map(|level| level.iter().filter(|w| pattern::is_321_avoiding(w)).count())
        .collect();
    (counts, fc_counts)
}

fn check_four_way(ball: &Ball) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("thm27");
    for w in ball.iter() {
        report.population += 1;
        let by_word = word::is_fully_commutative(w)?;
        let by_pair = pattern::pair_criterion_holds(w);
        let by_scan = pattern::is_321_avoiding(w);
        let by_root = roots::root_criterion_holds(w);
        if !(by_word == by_pair && by_pair == by_scan && by_scan == by_root) {
            report.fail(format!(
                "{w}: word={by_word} pair={by_pair} scan={by_scan} root={by_root}"
            ));
        }
    }
    Ok(report)
}

fn check_cell_closure(ball: &Ball) -> CheckReport {
    let mut report = CheckReport::new("cells");
    let mut realized = std::collections::BTreeSet::new();
    for w in ball.iter() {
        report.population += 1;
        let sigma = cells::shi_partition(w);
        let by_cell = sigma.first() <= 2;
        let by_scan = pattern::is_321_avoiding(w);
        if by_cell != by_scan {
            report.fail(format!("{w}: sigma={sigma} but 321-avoiding={by_scan}"));
        }
        realized.insert(sigma);
    }
    // Downward closure of the FC cells under dominance: anything dominated
    // by a first-part-<=2 partition has first part <= 2.
    let all: Vec<_> = realized.into_iter().collect();
    for lam in &all {
        for mu in &all {
            report.population += 1;
            if lam.first() <= 2 && lam.dominates(mu) && mu.first() > 2 {
                report.fail(format!("closure violated: {lam} dominates {mu}"));
            }
        }
    }
    report
}

fn check_length_descent(ball: &Ball, radius: i64) -> CheckReport {
    let mut report = CheckReport::new("lemma25");
    let n = ball.rank();
    for w in ball.iter() {
        let len = w.length() as i64;
        let winv = w.inverse();
        for i in 1..=n {
            report.population += 2;
            let right_len = w.right_multiply(i).length() as i64;
            let expect_right = if w.apply(i as i64) > w.apply(i as i64 + 1) { len - 1 } else { len + 1 };
            if right_len != expect_right {
                report.fail(format!("{w} * s_{i}: length {right_len}, expected {expect_right}"));
            }
            let left_len = w.left_multiply(i).length() as i64;
            let expect_left =
                if winv.apply(i as i64) > winv.apply(i as i64 + 1) { len - 1 } else { len + 1 };
            if left_len != expect_left {
                report.fail(format!("s_{i} * {w}: length {left_len}, expected {expect_left}"));
            }
        }
    }
    // A generator inverts exactly the pairs (c, c+1) it transposes, and
    // preserves order elsewhere.
    let r = radius * n as i64;
    for i in 1..=n {
        let s = AffinePermutation::generator(n, i).expect("ball rank is valid");
        for c in -r..=r {
            for d in c + 1..=r {
                report.population += 1;
                if s.apply(c) >= s.apply(d)
                    && !(d == c + 1 && s.apply(c) == d && s.apply(d) == c)
                {
                    report.fail(format!("s_{i} disorders ({c}, {d})"));
                }
            }
        }
    }
    report
}

fn check_rotation_extension(n: usize, ball: Option<&Ball>) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("lemma42");
    let rho = ExtendedAffinePermutation::rho(n)?;
    let rho_inv = rho.inverse();
    for i in 1..=n {
        report.population += 1;
        let si = ExtendedAffinePermutation::from_body(AffinePermutation::generator(n, i)?);
        let next = if i == n { 1 } else { i + 1 };
        let expected = ExtendedAffinePermutation::from_body(AffinePermutation::generator(n, next)?);
        let conjugate = rho.compose(&si).compose(&rho_inv);
        if conjugate != expected {
            report.fail(format!("rho s_{i} rho^-1 = {conjugate}, expected {expected}"));
        }
    }
    if let Some(ball) = ball {
        for w in ball.iter() {
            for z in -3..=3 {
                report.population += 1;
                let ext = ExtendedAffinePermutation::new(z, w.clone());
                let direct = direct_321_scan(&ext);
                let delegated = ext.is_321_avoiding();
                let fc = ext.is_fully_commutative()?;
                if direct != delegated || direct != fc {
                    report.fail(format!(
                        "{ext}: direct scan {direct}, delegated {delegated}, fc {fc}"
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// 321 scan applied directly to an extended window. Order comparisons are
/// unaffected by the global shift, so the bounded box argument still
/// applies.
fn direct_321_scan(ext: &ExtendedAffinePermutation) -> bool {
    let n = ext.rank() as i64;
    for b in 1..=n {
        let wb = ext.apply(b);
        for cb in 1..n {
            if wb <= ext.apply(b + cb) {
                continue;
            }
            for ba in 1..n {
                if ext.apply(b - ba) > wb {
                    return false;
                }
            }
        }
    }
    true
}

fn check_bounded_scan(ball: &Ball, radius: i64) -> CheckReport {
    let mut report = CheckReport::new("prop23");
    let n = ball.rank() as i64;
    for w in ball.iter() {
        report.population += 1;
        let witness = pattern::find_321_instance(w);
        let brute = brute_force_has_321(w, radius);
        if witness.is_some() != brute {
            report.fail(format!(
                "{w}: bounded scan {:?}, brute force {brute}",
                witness.is_some()
            ));
            continue;
        }
        if let Some((a, b, c)) = witness {
            let in_box = 1 <= b && b <= n && 0 < b - a && b - a < n && 0 < c - b && c - b < n;
            let decreasing = w.apply(a) > w.apply(b) && w.apply(b) > w.apply(c);
            let normalized = pattern::normalize_triple(w, a, b, c) == Ok((a, b, c));
            if !(in_box && decreasing && normalized) {
                report.fail(format!("{w}: bad witness ({a}, {b}, {c})"));
            }
        }
    }
    report
}

fn brute_force_has_321(w: &AffinePermutation, radius: i64) -> bool {
    let n = w.rank() as i64;
    let lo = 1 - radius * n;
    let hi = (radius + 1) * n;
    for b in lo..=hi {
        let wb = w.apply(b);
        if (lo..b).any(|a| w.apply(a) > wb) && (b + 1..=hi).any(|c| w.apply(c) < wb) {
            return true;
        }
    }
    false
}

fn check_representatives(n: usize) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new("prop51");
    let reps = cells::fc_cell_representatives(n)?;
    report.population = reps.len();
    if reps.len() != cells::fc_cell_count(n)? {
        report.fail(format!("{} representatives, expected {}", reps.len(), n / 2 + 1));
    }
    for (element, claimed) in &reps {
        let computed = cells::shi_partition(element);
        if &computed != claimed {
            report.fail(format!("{element}: sigma {computed}, claimed {claimed}"));
        }
        if claimed.first() > 2 {
            report.fail(format!("{element}: partition {claimed} is not an FC cell"));
        }
        if !word::is_fully_commutative(element)? {
            report.fail(format!("{element}: representative is not fully commutative"));
        }
    }
    for p in 0..reps.len() {
        for q in p + 1..reps.len() {
            if reps[p].1 == reps[q].1 {
                report.fail(format!("duplicate partition {}", reps[p].1));
            }
        }
    }
    Ok(report)
}

fn check_sigma_inverse(ball: &Ball) -> CheckReport {
    let mut report = CheckReport::new("sigma-inverse");
    for w in ball.iter() {
        report.population += 1;
        let sigma = cells::shi_partition(w);
        let sigma_inv = cells::shi_partition(&w.inverse());
        if sigma != sigma_inv {
            report.fail(format!("{w}: sigma {sigma} but inverse has {sigma_inv}"));
        }
        for k in 1..=sigma.num_parts() {
            report.population += 1;
            let exact = cells::max_union_of_chains(w, k);
            let windowed = cells::max_union_of_chains_windowed(w, k, 1);
            let doubled = cells::max_union_of_chains_windowed(w, k, 2);
            if windowed != exact || doubled != exact {
                report.fail(format!(
                    "{w}: d_{k} = {exact}, windowed {windowed}, doubled {doubled}"
                ));
            }
        }
    }
    report
}
