//! Brute-force map census: the combinatorial ground truth.
//!
//! A map with `n` labeled `2ν`-valent vertices is a pair of permutations of
//! darts: `σ` (a product of `n` disjoint `2ν`-cycles giving the rotation at
//! each vertex, plus one fixed point per leg) and `τ` (a perfect matching
//! pairing the two darts of each edge), such that `⟨σ,τ⟩` acts transitively.
//! The number of faces is the number of cycles of `σ∘τ`, and the genus comes
//! from Euler's formula. Enumerating every matching `τ` for the fixed
//! canonical `σ` counts maps exactly — no symmetry factors.

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::double_factorial_odd;

const UNSET: usize = usize::MAX;

/// Default refusal threshold: matchings beyond this need `force`.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTask {
    pub nu: usize,
    pub vertices: usize,
    /// 0 for closed maps, 2 for the two-leg census.
    pub legs: usize,
}

impl OracleTask {
    pub fn new(nu: usize, vertices: usize, legs: usize) -> Self {
        assert!(nu >= 2 && vertices >= 1 && (legs == 0 || legs == 2));
        OracleTask { nu, vertices, legs }
    }

    pub fn dart_count(&self) -> usize {
        2 * self.nu * self.vertices + self.legs
    }

    /// Total number of perfect matchings, `(d−1)!!`.
    pub fn matching_count(&self) -> BigInt {
        double_factorial_odd(self.dart_count() as u64 - 1)
    }

    /// Canonical `σ`: vertex `v` owns darts `[2νv, 2νv+2ν)` in a cycle; the
    /// leg darts are the highest-numbered and are fixed points.
    pub fn sigma(&self) -> Vec<usize> {
        let d = self.dart_count();
        let span = 2 * self.nu;
        let mut sigma: Vec<usize> = (0..d).collect();
        for v in 0..self.vertices {
            let base = 2 * self.nu * v;
            for i in 0..span {
                sigma[base + i] = base + (i + 1) % span;
            }
        }
        sigma
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCensus {
    pub task: OracleTask,
    /// Connected-map counts indexed by genus.
    pub by_genus: Vec<u64>,
    pub disconnected: u64,
    pub total: u64,
}

impl MapCensus {
    pub fn genus_count(&self, g: usize) -> u64 {
        self.by_genus.get(g).copied().unwrap_or(0)
    }
}

/// `g = (2 − V + E − F)/2` when that is a nonnegative integer.
pub fn euler_genus(n_vertices: usize, n_edges: usize, faces: usize) -> Option<usize> {
    let chi_def = 2 + n_edges as i64 - n_vertices as i64 - faces as i64;
    if chi_def < 0 || chi_def % 2 != 0 {
        return None;
    }
    Some((chi_def / 2) as usize)
}

#[derive(Clone)]
struct Tally {
    by_genus: Vec<u64>,
    disconnected: u64,
    total: u64,
}

impl Tally {
    fn new(d: usize) -> Self {
        Tally { by_genus: vec![0; d + 1], disconnected: 0, total: 0 }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.by_genus.iter_mut().zip(&other.by_genus) {
            *a += b;
        }
        self.disconnected += other.disconnected;
        self.total += other.total;
        self
    }
}

struct Scratch {
    stamp: u32,
    seen: Vec<u32>,
    stack: Vec<usize>,
}

impl Scratch {
    fn new(d: usize) -> Self {
        Scratch { stamp: 0, seen: vec![0; d], stack: Vec::with_capacity(d) }
    }
}

fn record_leaf(sigma: &[usize], tau: &[usize], n_vertices: usize, scratch: &mut Scratch, tally: &mut Tally) {
    let d = sigma.len();
    tally.total += 1;

    // connectivity: orbit of dart 0 under the moves σ and τ
    scratch.stamp += 1;
    let stamp = scratch.stamp;
    scratch.stack.clear();
    scratch.stack.push(0);
    scratch.seen[0] = stamp;
    let mut reached = 1;
    while let Some(i) = scratch.stack.pop() {
        for j in [sigma[i], tau[i]] {
            if scratch.seen[j] != stamp {
                scratch.seen[j] = stamp;
                scratch.stack.push(j);
                reached += 1;
            }
        }
    }
    if reached < d {
        tally.disconnected += 1;
        return;
    }

    // faces: cycles of σ∘τ
    scratch.stamp += 1;
    let stamp = scratch.stamp;
    let mut faces = 0;
    for start in 0..d {
        if scratch.seen[start] == stamp {
            continue;
        }
        faces += 1;
        let mut i = start;
        while scratch.seen[i] != stamp {
            scratch.seen[i] = stamp;
            i = sigma[tau[i]];
        }
    }

    let genus = euler_genus(n_vertices, d / 2, faces)
        .expect("connected permutation pair produced a non-integer genus");
    tally.by_genus[genus] += 1;
}

fn enumerate(sigma: &[usize], tau: &mut Vec<usize>, from: usize, n_vertices: usize, scratch: &mut Scratch, tally: &mut Tally) {
    let d = sigma.len();
    let mut a = from;
    while a < d && tau[a] != UNSET {
        a += 1;
    }
    if a == d {
        record_leaf(sigma, tau, n_vertices, scratch, tally);
        return;
    }
    for b in (a + 1)..d {
        if tau[b] != UNSET {
            continue;
        }
        tau[a] = b;
        tau[b] = a;
        enumerate(sigma, tau, a + 1, n_vertices, scratch, tally);
        tau[a] = UNSET;
        tau[b] = UNSET;
    }
}

/// Partial matchings fixing the first `depth` canonical pairs, used as
/// independent parallel subtasks.
fn split_prefixes(d: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut tau = vec![UNSET; d];
    fn rec(tau: &mut Vec<usize>, remaining: usize, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(tau.clone());
            return;
        }
        let d = tau.len();
        let Some(a) = (0..d).find(|&i| tau[i] == UNSET) else {
            out.push(tau.clone());
            return;
        };
        for b in (a + 1)..d {
            if tau[b] != UNSET {
                continue;
            }
            tau[a] = b;
            tau[b] = a;
            rec(tau, remaining - 1, out);
            tau[a] = UNSET;
            tau[b] = UNSET;
        }
    }
    rec(&mut tau, depth.min(d / 2), &mut out);
    out
}

/// Exhaustive census with an explicit `σ` (exposed so relabeling invariance
/// can be tested); results are independent of `threads`.
pub fn census_with_sigma(task: &OracleTask, sigma: &[usize], threads: usize, force: bool) -> Result<MapCensus> {
    let d = task.dart_count();
    assert_eq!(sigma.len(), d);
    assert!(d % 2 == 0);
    let estimate = task.matching_count();
    if !force && estimate > BigInt::from(DEFAULT_BUDGET) {
        return Err(Error::Budget(format!(
            "{} matchings exceed the {} budget; pass force to run anyway",
            estimate, DEFAULT_BUDGET
        )));
    }
    let n_vertices = task.vertices + task.legs;

    let run_subtask = |prefix: &Vec<usize>| -> Tally {
        let mut tau = prefix.clone();
        let mut scratch = Scratch::new(d);
        let mut tally = Tally::new(d);
        enumerate(sigma, &mut tau, 0, n_vertices, &mut scratch, &mut tally);
        tally
    };

    let tally = if threads <= 1 || d < 6 {
        let mut tau = vec![UNSET; d];
        let mut scratch = Scratch::new(d);
        let mut tally = Tally::new(d);
        enumerate(sigma, &mut tau, 0, n_vertices, &mut scratch, &mut tally);
        tally
    } else {
        use rayon::prelude::*;
        let prefixes = split_prefixes(d, 2);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        pool.install(|| {
            prefixes
                .par_iter()
                .map(run_subtask)
                .reduce(|| Tally::new(d), Tally::merge)
        })
    };

    let expected: u64 = estimate
        .clone()
        .try_into()
        .map_err(|_| Error::Budget(format!("matching count {estimate} overflows u64")))?;
    if tally.total != expected {
        return Err(Error::Consistency(format!(
            "enumerated {} matchings, expected {}",
            tally.total, expected
        )));
    }
    Ok(MapCensus {
        task: task.clone(),
        by_genus: tally.by_genus,
        disconnected: tally.disconnected,
        total: tally.total,
    })
}

/// Census with the canonical `σ`.
pub fn census(task: &OracleTask, threads: usize, force: bool) -> Result<MapCensus> {
    census_with_sigma(task, &task.sigma(), threads, force)
}

/// Closed-map census (`legs = 0`).
pub fn map_census(nu: usize, vertices: usize, threads: usize, force: bool) -> Result<MapCensus> {
    census(&OracleTask::new(nu, vertices, 0), threads, force)
}

/// Two-leg census: `σ` gains two fixed points (univalent leg vertices); the
/// genus-`g` count equals `n!·[s^n] z_g`.
pub fn two_leg_census(nu: usize, vertices: usize, threads: usize, force: bool) -> Result<MapCensus> {
    census(&OracleTask::new(nu, vertices, 2), threads, force)
}
