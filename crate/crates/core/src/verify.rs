//! Exhaustive verification over all small trees.
//!
//! Trees come from a single generator and are cut into fixed-size blocks in
//! generation order. Blocks are processed by up to `threads` workers and
//! the per-block summaries are merged with max / union / all-pass
//! reductions, so the merged result does not depend on the number of
//! workers or on completion order. Per-tree records are returned in
//! generation order.

use crate::bounds::{judge, ln_lambda_from_counts, BoundName, Verdict};
use crate::dp::{count_min_dominating, count_min_total_dominating, ln_count, MinSetCount};
use crate::error::{Error, Result};
use crate::families::{closed_form_count, generate, ClosedForm, FamilySpec};
use crate::forest::Forest;
use crate::format::to_graph6;
use crate::treegen::enumerate_trees;
use num_bigint::BigUint;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::{mpsc, Mutex};

pub const DEFAULT_SQRT5_MAX_N: usize = 16;
pub const DEFAULT_HENNING_MAX_N: usize = 12;
pub const MAX_SQRT5_N: usize = 20;
pub const MAX_HENNING_N: usize = 16;

const BLOCK_SIZE: usize = 512;

/// Runs `work` on consecutive blocks of `items` and returns the results in
/// block order.
pub fn process_blocks<T, R, I, W>(items: I, threads: usize, block_size: usize, work: W) -> Vec<R>
where
    T: Send,
    R: Send,
    I: Iterator<Item = T>,
    W: Fn(Vec<T>) -> R + Sync,
{
    let block_size = block_size.max(1);
    let mut items = items.peekable();
    let mut next_block = move || {
        items.peek()?;
        Some(items.by_ref().take(block_size).collect::<Vec<T>>())
    };
    if threads <= 1 {
        return std::iter::from_fn(next_block).map(&work).collect();
    }
    let (job_tx, job_rx) = mpsc::sync_channel::<(usize, Vec<T>)>(threads * 2);
    let (done_tx, done_rx) = mpsc::channel::<(usize, R)>();
    let job_rx = Mutex::new(job_rx);
    let mut results: Vec<(usize, R)> = std::thread::scope(|scope| {
        for _ in 0..threads {
            let done_tx = done_tx.clone();
            let job_rx = &job_rx;
            let work = &work;
            scope.spawn(move || loop {
                let job = job_rx.lock().expect("job queue").recv();
                match job {
                    Ok((index, block)) => {
                        if done_tx.send((index, work(block))).is_err() {
                            return;
                        }
                    }
                    Err(_) => return,
                }
            });
        }
        drop(done_tx);
        let mut index = 0;
        while let Some(block) = next_block() {
            job_tx.send((index, block)).expect("workers alive");
            index += 1;
        }
        drop(job_tx);
        done_rx.iter().collect()
    });
    results.sort_by_key(|(i, _)| *i);
    results.into_iter().map(|(_, r)| r).collect()
}

fn all_trees(ns: RangeInclusive<usize>) -> impl Iterator<Item = Forest> {
    ns.flat_map(|n| enumerate_trees(n).expect("order within the generator cap"))
}

/// One tree's row in a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRecord {
    pub graph6: String,
    pub n: usize,
    /// γ or γ_t.
    pub size: usize,
    pub count: BigUint,
    pub verdicts: Vec<(BoundName, Verdict)>,
}

impl TreeRecord {
    pub const TSV_HEADER: &'static str = "graph6\tn\tgamma\tcount\tverdicts";

    /// `graph6 n gamma count name=verdict,...`, tab separated.
    pub fn to_tsv(&self) -> String {
        let verdicts: Vec<String> = self
            .verdicts
            .iter()
            .map(|(b, v)| format!("{b}={v}"))
            .collect();
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.graph6,
            self.n,
            self.size,
            self.count,
            verdicts.join(",")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximizerRow {
    pub gamma: usize,
    pub max_count: BigUint,
    /// graph6 of every maximizing tree found (one per isomorphism class), sorted.
    pub witnesses: Vec<String>,
}

impl MaximizerRow {
    pub fn classes(&self) -> usize {
        self.witnesses.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximizerTable {
    /// Trees with `1 ..= max_n` vertices were searched.
    pub max_n: usize,
    pub trees_checked: usize,
    /// Rows by increasing γ.
    pub rows: Vec<MaximizerRow>,
    /// Trees with Γ² > 5^γ. Always empty unless something is broken.
    pub violations: Vec<String>,
    pub records: Vec<TreeRecord>,
}

impl MaximizerTable {
    pub fn row(&self, gamma: usize) -> Option<&MaximizerRow> {
        self.rows.iter().find(|r| r.gamma == gamma)
    }

    pub fn all_pass(&self) -> bool {
        self.violations.is_empty()
    }

    /// For every `k` with `5k + 2 <= max_n`: the maximum at `γ = 2k + 1` is
    /// at least `5^k + 3^k`. Returns the failing `k`s.
    pub fn lower_bound_gaps(&self) -> Vec<usize> {
        (1..)
            .take_while(|k| 5 * k + 2 <= self.max_n)
            .filter(|&k| {
                let target = closed_form_count(FamilySpec::Gk { k })
                    .expect("valid")
                    .count;
                self.row(2 * k + 1).is_none_or(|r| r.max_count < target)
            })
            .collect()
    }
}

#[derive(Default)]
struct Sqrt5Block {
    rows: BTreeMap<usize, (BigUint, Vec<String>)>,
    violations: Vec<String>,
    checked: usize,
    records: Vec<TreeRecord>,
}

fn merge_row(
    rows: &mut BTreeMap<usize, (BigUint, Vec<String>)>,
    gamma: usize,
    count: BigUint,
    mut witnesses: Vec<String>,
) {
    match rows.get_mut(&gamma) {
        None => {
            rows.insert(gamma, (count, witnesses));
        }
        Some((best, list)) => {
            if count > *best {
                *best = count;
                *list = witnesses;
            } else if count == *best {
                list.append(&mut witnesses);
            }
        }
    }
}

/// Checks Γ² ≤ 5^γ on every tree with at most `max_n` vertices and records
/// the largest Γ for each γ.
pub fn verify_sqrt5(max_n: usize, threads: usize, keep_records: bool) -> Result<MaximizerTable> {
    if max_n > MAX_SQRT5_N {
        return Err(Error::TooLarge {
            n: max_n,
            cap: MAX_SQRT5_N,
        });
    }
    let blocks = process_blocks(all_trees(1..=max_n), threads, BLOCK_SIZE, |trees| {
        let mut block = Sqrt5Block::default();
        for t in trees {
            let MinSetCount { size, count } = count_min_dominating(&t);
            let sqrt5 =
                judge(BoundName::Sqrt5, t.vertex_count(), size, &count).expect("gamma >= 1");
            let g6 = to_graph6(&t);
            if sqrt5.verdict != Verdict::Pass {
                block.violations.push(g6.clone());
            }
            if keep_records {
                let lower = judge(BoundName::TwoFifthsSqrt5, t.vertex_count(), size, &count)
                    .expect("gamma >= 1");
                block.records.push(TreeRecord {
                    graph6: g6.clone(),
                    n: t.vertex_count(),
                    size,
                    count: count.clone(),
                    verdicts: vec![(sqrt5.name, sqrt5.verdict), (lower.name, lower.verdict)],
                });
            }
            merge_row(&mut block.rows, size, count, vec![g6]);
            block.checked += 1;
        }
        block
    });
    let mut rows = BTreeMap::new();
    let mut violations = Vec::new();
    let mut records = Vec::new();
    let mut trees_checked = 0;
    for b in blocks {
        for (gamma, (count, witnesses)) in b.rows {
            merge_row(&mut rows, gamma, count, witnesses);
        }
        violations.extend(b.violations);
        records.extend(b.records);
        trees_checked += b.checked;
    }
    violations.sort();
    Ok(MaximizerTable {
        max_n,
        trees_checked,
        rows: rows
            .into_iter()
            .map(|(gamma, (max_count, mut witnesses))| {
                witnesses.sort();
                MaximizerRow {
                    gamma,
                    max_count,
                    witnesses,
                }
            })
            .collect(),
        violations,
        records,
    })
}

const HENNING_PARTS: [BoundName; 4] = [
    BoundName::HenningMin,
    BoundName::HenningGamma,
    BoundName::HenningGap,
    BoundName::HenningOrder,
];

#[derive(Clone, Debug, PartialEq)]
pub struct HenningReport {
    pub max_n: usize,
    pub trees_checked: usize,
    /// `(graph6, bound)` for every failed comparison.
    pub violations: Vec<(String, BoundName)>,
    /// Largest λ seen and one tree attaining it (smallest graph6 on ties).
    pub max_lambda: Option<(f64, String)>,
    pub records: Vec<TreeRecord>,
}

impl HenningReport {
    pub fn all_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

fn better_lambda(a: Option<(f64, String)>, b: Option<(f64, String)>) -> Option<(f64, String)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if x.0 > y.0 || (x.0 == y.0 && x.1 <= y.1) {
                Some(x)
            } else {
                Some(y)
            }
        }
    }
}

/// Checks Γ_t against each of the three proven bounds (and their minimum)
/// on every tree with `2 ..= max_n` vertices.
pub fn verify_henning(max_n: usize, threads: usize, keep_records: bool) -> Result<HenningReport> {
    if max_n > MAX_HENNING_N {
        return Err(Error::TooLarge {
            n: max_n,
            cap: MAX_HENNING_N,
        });
    }
    let blocks = process_blocks(all_trees(2..=max_n.max(1)), threads, BLOCK_SIZE, |trees| {
        let mut violations = Vec::new();
        let mut records = Vec::new();
        let mut best: Option<(f64, String)> = None;
        let checked = trees.len();
        for t in trees {
            let n = t.vertex_count();
            let MinSetCount { size, count } =
                count_min_total_dominating(&t).expect("trees on two or more vertices");
            let g6 = to_graph6(&t);
            let mut verdicts = Vec::new();
            for name in HENNING_PARTS.into_iter().chain([BoundName::Conjecture2]) {
                let entry = judge(name, n, size, &count).expect("1 <= gamma_t <= n");
                if name != BoundName::Conjecture2 && entry.verdict != Verdict::Pass {
                    violations.push((g6.clone(), name));
                }
                verdicts.push((name, entry.verdict));
            }
            let lam = ln_lambda_from_counts(n, size, ln_count(&count))
                .expect("1 <= gamma_t <= n")
                .exp();
            best = better_lambda(best, Some((lam, g6.clone())));
            if keep_records {
                records.push(TreeRecord {
                    graph6: g6,
                    n,
                    size,
                    count,
                    verdicts,
                });
            }
        }
        (checked, violations, best, records)
    });
    let mut report = HenningReport {
        max_n,
        trees_checked: 0,
        violations: Vec::new(),
        max_lambda: None,
        records: Vec::new(),
    };
    for (checked, violations, best, records) in blocks {
        report.trees_checked += checked;
        report.violations.extend(violations);
        report.max_lambda = better_lambda(report.max_lambda, best);
        report.records.extend(records);
    }
    report.violations.sort();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyRow {
    pub spec: FamilySpec,
    pub n: usize,
    pub dp: MinSetCount,
    pub closed: ClosedForm,
}

impl FamilyRow {
    pub fn matches(&self) -> bool {
        self.n == self.spec.vertex_count()
            && self.dp.size == self.closed.size
            && self.dp.count == self.closed.count
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub rows: Vec<FamilyRow>,
}

impl FamilyReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(FamilyRow::matches)
    }
}

fn family_row(spec: FamilySpec) -> Result<FamilyRow> {
    let tree = generate(spec)?;
    let closed = closed_form_count(spec)?;
    let dp = crate::dp::count(&tree, spec.mode())?;
    Ok(FamilyRow {
        spec,
        n: tree.vertex_count(),
        dp,
        closed,
    })
}

/// DP against closed form for `G_k`, `H_k` with `k in 0..=max_k` and for
/// `G(k,l,m)` with `k, l, m in 1..=max_klm`.
pub fn verify_family_formulas(max_k: usize, max_klm: usize) -> Result<FamilyReport> {
    let mut specs = Vec::new();
    for k in 0..=max_k {
        specs.push(FamilySpec::Gk { k });
        specs.push(FamilySpec::Hk { k });
    }
    for k in 1..=max_klm {
        for l in 1..=max_klm {
            for m in 1..=max_klm {
                specs.push(FamilySpec::Gklm { k, l, m });
            }
        }
    }
    Ok(FamilyReport {
        rows: specs.into_iter().map(family_row).collect::<Result<_>>()?,
    })
}

/// Single-family check, used for the named instances (e.g. `G(3,16,3)`).
pub fn verify_family(spec: FamilySpec) -> Result<FamilyRow> {
    family_row(spec)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub n: usize,
    pub gamma_t: usize,
    pub ln_lambda: f64,
}

impl SweepRow {
    pub fn lambda(&self) -> f64 {
        self.ln_lambda.exp()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    /// Sorted by λ descending, then by `(k, l, m)`.
    pub rows: Vec<SweepRow>,
    pub any_exceeds_one: bool,
}

pub const MAX_SWEEP_GAMMA_T: usize = 10_000;

/// λ of `G(k,l,m)` over a parameter box, from the closed forms.
pub fn lambda_sweep(
    k_range: RangeInclusive<usize>,
    l_range: RangeInclusive<usize>,
    m_range: RangeInclusive<usize>,
    threads: usize,
) -> Result<SweepReport> {
    let mut specs = Vec::new();
    for k in k_range {
        for l in l_range.clone() {
            for m in m_range.clone() {
                let spec = FamilySpec::Gklm { k, l, m };
                spec.validate()?;
                if 2 * k * l + 1 > MAX_SWEEP_GAMMA_T {
                    return Err(Error::InvalidParameters(format!(
                        "G({k},{l},{m}) has gamma_t above {MAX_SWEEP_GAMMA_T}"
                    )));
                }
                specs.push((k, l, m));
            }
        }
    }
    let blocks = process_blocks(specs.into_iter(), threads, 64, |block| {
        block
            .into_iter()
            .map(|(k, l, m)| {
                let spec = FamilySpec::Gklm { k, l, m };
                let cf = closed_form_count(spec).expect("validated");
                let n = spec.vertex_count();
                let ln_lambda = ln_lambda_from_counts(n, cf.size, ln_count(&cf.count))
                    .expect("1 <= gamma_t <= n");
                SweepRow {
                    k,
                    l,
                    m,
                    n,
                    gamma_t: cf.size,
                    ln_lambda,
                }
            })
            .collect::<Vec<_>>()
    });
    let mut rows: Vec<SweepRow> = blocks.into_iter().flatten().collect();
    rows.sort_by(|a, b| {
        b.ln_lambda
            .total_cmp(&a.ln_lambda)
            .then((a.k, a.l, a.m).cmp(&(b.k, b.l, b.m)))
    });
    let any_exceeds_one = rows.iter().any(|r| r.ln_lambda > 0.0);
    Ok(SweepReport {
        rows,
        any_exceeds_one,
    })
}
