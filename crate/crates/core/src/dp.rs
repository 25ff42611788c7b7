//! Exact minimum (total) dominating set counts by a postorder DP over
//! [`MinCount`], and enumeration of all optimal sets guided by the same
//! tables.
//!
//! Both problems are described by a small table of vertex states. Each state
//! fixes whether the vertex is chosen, which child states are admissible and,
//! optionally, a subset of child states of which at least one child must
//! take part. The "at least one" constraint is folded with two tracks
//! (satisfied so far / not yet satisfied) instead of subtracting, since
//! subtraction is not defined on tied costs.

use crate::error::{Error, Result};
use crate::forest::{Forest, RootedTree};
use crate::semiring::MinCount;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use std::collections::HashMap;
use std::rc::Rc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Domination,
    Total,
}

/// γ and Γ (or γ_t and Γ_t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSetCount {
    pub size: usize,
    pub count: BigUint,
}

#[derive(Clone, Copy)]
struct StateRule {
    chosen: bool,
    allowed: u8,
    /// Nonzero: at least one child must be in one of these states.
    required: u8,
}

struct Rules {
    states: &'static [StateRule],
    /// States admissible at a root.
    accept: u8,
}

const DOMINATION: Rules = Rules {
    states: &[
        // in_set: children may be in any state; v covers undominated ones
        StateRule {
            chosen: true,
            allowed: 0b111,
            required: 0,
        },
        // dominated_out: children in {in_set, dominated_out}, one in in_set
        StateRule {
            chosen: false,
            allowed: 0b011,
            required: 0b001,
        },
        // undominated_out: children all dominated_out
        StateRule {
            chosen: false,
            allowed: 0b010,
            required: 0,
        },
    ],
    accept: 0b011,
};

const TOTAL: Rules = Rules {
    states: &[
        // s0: chosen, has a chosen child
        StateRule {
            chosen: true,
            allowed: 0b1111,
            required: 0b0011,
        },
        // s1: chosen, no chosen child
        StateRule {
            chosen: true,
            allowed: 0b1100,
            required: 0,
        },
        // s2: not chosen, has a chosen child
        StateRule {
            chosen: false,
            allowed: 0b0101,
            required: 0b0001,
        },
        // s3: not chosen, no chosen child
        StateRule {
            chosen: false,
            allowed: 0b0100,
            required: 0,
        },
    ],
    accept: 0b0101,
};

fn rules(mode: Mode) -> &'static Rules {
    match mode {
        Mode::Domination => &DOMINATION,
        Mode::Total => &TOTAL,
    }
}

fn states_in(mask: u8) -> impl Iterator<Item = usize> {
    (0..8).filter(move |t| mask >> t & 1 == 1)
}

/// Per-vertex DP values for domination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomStateVector {
    /// Vertex chosen; its subtree dominated.
    pub in_set: MinCount,
    /// Vertex not chosen, dominated by a child.
    pub dominated_out: MinCount,
    /// Vertex not chosen and not yet dominated; all strict descendants are.
    pub undominated_out: MinCount,
}

/// Per-vertex DP values for total domination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalDomStateVector {
    /// Chosen, has a chosen child.
    pub s0: MinCount,
    /// Chosen, no chosen child: needs its parent in the set.
    pub s1: MinCount,
    /// Not chosen, has a chosen child.
    pub s2: MinCount,
    /// Not chosen, no chosen child: needs its parent in the set.
    pub s3: MinCount,
}

/// DP tables for one rooted component, indexed by global vertex.
struct Table {
    values: HashMap<usize, Vec<MinCount>>,
}

fn fold_state(rule: &StateRule, children: &[&[MinCount]]) -> MinCount {
    let sum = |vals: &[MinCount], mask: u8| {
        states_in(mask).fold(MinCount::infeasible(), |acc, t| acc.plus(&vals[t]))
    };
    let own = u64::from(rule.chosen);
    if rule.required == 0 {
        return children
            .iter()
            .fold(MinCount::unit(), |acc, c| acc.times(&sum(c, rule.allowed)))
            .add_cost(own);
    }
    let required = rule.required & rule.allowed;
    let rest = rule.allowed & !rule.required;
    let mut satisfied = MinCount::infeasible();
    let mut unsatisfied = MinCount::unit();
    for c in children {
        satisfied = satisfied
            .times(&sum(c, rule.allowed))
            .plus(&unsatisfied.times(&sum(c, required)));
        unsatisfied = unsatisfied.times(&sum(c, rest));
    }
    satisfied.add_cost(own)
}

fn build_table(tree: &RootedTree<'_>, rules: &Rules) -> Table {
    let mut values: HashMap<usize, Vec<MinCount>> = HashMap::with_capacity(tree.len());
    for &v in tree.postorder() {
        let children: Vec<&[MinCount]> = tree.children(v).map(|c| values[&c].as_slice()).collect();
        let row: Vec<MinCount> = rules
            .states
            .iter()
            .map(|rule| fold_state(rule, &children))
            .collect();
        values.insert(v, row);
    }
    Table { values }
}

fn root_value(table: &Table, root: usize, rules: &Rules) -> MinCount {
    states_in(rules.accept).fold(MinCount::infeasible(), |acc, s| {
        acc.plus(&table.values[&root][s])
    })
}

/// DP values for every vertex of `tree`, in postorder.
pub fn domination_states(tree: &RootedTree<'_>) -> Vec<(usize, DomStateVector)> {
    let table = build_table(tree, &DOMINATION);
    tree.postorder()
        .iter()
        .map(|&v| {
            let [a, b, c]: [MinCount; 3] = table.values[&v].clone().try_into().expect("3 states");
            (
                v,
                DomStateVector {
                    in_set: a,
                    dominated_out: b,
                    undominated_out: c,
                },
            )
        })
        .collect()
}

/// DP values for every vertex of `tree`, in postorder.
pub fn total_domination_states(tree: &RootedTree<'_>) -> Vec<(usize, TotalDomStateVector)> {
    let table = build_table(tree, &TOTAL);
    tree.postorder()
        .iter()
        .map(|&v| {
            let [s0, s1, s2, s3]: [MinCount; 4] =
                table.values[&v].clone().try_into().expect("4 states");
            (v, TotalDomStateVector { s0, s1, s2, s3 })
        })
        .collect()
}

/// Optimum for one rooted component. The result does not depend on the root.
pub fn count_rooted(tree: &RootedTree<'_>, mode: Mode) -> MinCount {
    let rules = rules(mode);
    root_value(&build_table(tree, rules), tree.root(), rules)
}

fn into_count(value: MinCount) -> MinSetCount {
    MinSetCount {
        size: value.cost().expect("every forest has a feasible solution") as usize,
        count: value.count().clone(),
    }
}

fn check_total(f: &Forest) -> Result<()> {
    match f.isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

pub fn count(f: &Forest, mode: Mode) -> Result<MinSetCount> {
    if mode == Mode::Total {
        check_total(f)?;
    }
    let total = f
        .components()
        .iter()
        .map(|comp| {
            let tree = f.root_tree(comp, comp[0]).expect("component root");
            count_rooted(&tree, mode)
        })
        .fold(MinCount::unit(), |acc, x| acc.times(&x));
    Ok(into_count(total))
}

/// (γ, Γ) of a forest; isolated vertices are allowed.
pub fn count_min_dominating(f: &Forest) -> MinSetCount {
    count(f, Mode::Domination).expect("domination is defined on every forest")
}

/// (γ_t, Γ_t) of a forest without isolated vertices.
pub fn count_min_total_dominating(f: &Forest) -> Result<MinSetCount> {
    count(f, Mode::Total)
}

pub fn enumerate_min_dominating(f: &Forest, limit: usize) -> Result<Vec<Vec<usize>>> {
    enumerate(f, Mode::Domination, limit)
}

pub fn enumerate_min_total_dominating(f: &Forest, limit: usize) -> Result<Vec<Vec<usize>>> {
    enumerate(f, Mode::Total, limit)
}

/// All optimal sets, each sorted, in lexicographic order. Fails without
/// enumerating anything when there are more than `limit` of them.
pub fn enumerate(f: &Forest, mode: Mode, limit: usize) -> Result<Vec<Vec<usize>>> {
    let total = count(f, mode)?;
    if total.count > BigUint::from(limit) {
        return Err(Error::LimitExceeded {
            found: total.count.to_string(),
            limit,
        });
    }
    let rules = rules(mode);
    let mut combined: Vec<Vec<usize>> = vec![Vec::new()];
    for comp in f.components() {
        let tree = f.root_tree(&comp, comp[0]).expect("component root");
        let part = enumerate_component(&tree, rules);
        combined = combined
            .iter()
            .flat_map(|prefix| {
                part.iter().map(move |tail| {
                    let mut s = prefix.clone();
                    s.extend_from_slice(tail);
                    s
                })
            })
            .collect();
    }
    for s in &mut combined {
        s.sort_unstable();
    }
    combined.sort();
    debug_assert_eq!(BigUint::from(combined.len()), total.count);
    Ok(combined)
}

type Tuples = Rc<Vec<Vec<u8>>>;

struct Enumerator<'t, 'f> {
    tree: &'t RootedTree<'f>,
    rules: &'static Rules,
    table: Table,
    children: HashMap<usize, Vec<usize>>,
    memo: HashMap<(usize, u8), Tuples>,
}

impl Enumerator<'_, '_> {
    fn cost(&self, v: usize, s: usize) -> Option<u64> {
        self.table.values[&v][s].cost()
    }

    /// Every assignment of child states for `v` in state `s` whose total
    /// cost matches the optimum of `(v, s)`.
    fn tuples(&mut self, v: usize, s: u8) -> Tuples {
        if let Some(t) = self.memo.get(&(v, s)) {
            return Rc::clone(t);
        }
        let rule = self.rules.states[s as usize];
        let children = &self.children[&v];
        let d = children.len();
        let target = self.cost(v, s as usize).expect("feasible state") - u64::from(rule.chosen);
        let required = rule.required & rule.allowed;
        let rest = rule.allowed & !rule.required;
        let min_over = |c: usize, mask: u8| states_in(mask).filter_map(|t| self.cost(c, t)).min();
        let add = |a: Option<u64>, b: Option<u64>| Some(a? + b?);
        let best = |a: Option<u64>, b: Option<u64>| match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        };
        // cheapest completion of children j.. with / without the requirement met
        let mut any = vec![Some(0); d + 1];
        let mut rest_only = vec![Some(0); d + 1];
        let mut need = vec![None; d + 1];
        for j in (0..d).rev() {
            let c = children[j];
            any[j] = add(min_over(c, rule.allowed), any[j + 1]);
            rest_only[j] = add(min_over(c, rest), rest_only[j + 1]);
            need[j] = best(
                add(min_over(c, rule.allowed), need[j + 1]),
                add(min_over(c, required), rest_only[j + 1]),
            );
        }
        let options: Vec<Vec<(u8, u64)>> = children
            .iter()
            .map(|&c| {
                states_in(rule.allowed)
                    .filter_map(|t| self.cost(c, t).map(|k| (t as u8, k)))
                    .collect()
            })
            .collect();

        let mut out = Vec::new();
        let mut picks: Vec<usize> = Vec::with_capacity(d);
        let mut spent = vec![0u64];
        let mut met = vec![rule.required == 0];
        let mut next = 0usize;
        loop {
            let j = picks.len();
            if j == d {
                if spent[j] == target && met[j] {
                    out.push(
                        picks
                            .iter()
                            .enumerate()
                            .map(|(i, &k)| options[i][k].0)
                            .collect(),
                    );
                }
            } else if let Some(k) = (next..options[j].len()).find(|&k| {
                let (t, c) = options[j][k];
                let now_met = met[j] || required >> t & 1 == 1;
                let remaining = if now_met { any[j + 1] } else { need[j + 1] };
                remaining.is_some_and(|r| spent[j] + c + r == target)
            }) {
                let (t, c) = options[j][k];
                picks.push(k);
                spent.push(spent[j] + c);
                met.push(met[j] || required >> t & 1 == 1);
                next = 0;
                continue;
            }
            match picks.pop() {
                None => break,
                Some(k) => {
                    spent.pop();
                    met.pop();
                    next = k + 1;
                }
            }
        }
        let out = Rc::new(out);
        self.memo.insert((v, s), Rc::clone(&out));
        out
    }
}

fn enumerate_component(tree: &RootedTree<'_>, rules: &'static Rules) -> Vec<Vec<usize>> {
    let table = build_table(tree, rules);
    let root = tree.root();
    let optimum = root_value(&table, root, rules).cost();
    let root_states: Vec<Vec<u8>> = states_in(rules.accept)
        .filter(|&s| table.values[&root][s].cost() == optimum)
        .map(|s| vec![s as u8])
        .collect();
    let children = tree
        .postorder()
        .iter()
        .map(|&v| (v, tree.children(v).collect()))
        .collect();
    let mut en = Enumerator {
        tree,
        rules,
        table,
        children,
        memo: HashMap::new(),
    };
    let preorder: Vec<usize> = en.tree.postorder().iter().rev().copied().collect();
    let m = preorder.len();

    let mut state: HashMap<usize, u8> = HashMap::with_capacity(m);
    // level 0 picks the root state, level i >= 1 the child states of preorder[i - 1]
    let mut options: Vec<Tuples> = vec![Rc::new(root_states)];
    let mut idx = vec![0usize];
    let mut out = Vec::new();
    loop {
        let level = options.len() - 1;
        let pick = &options[level][idx[level]];
        if level == 0 {
            state.insert(root, pick[0]);
        } else {
            let v = preorder[level - 1];
            for (&c, &t) in en.children[&v].iter().zip(pick.iter()) {
                state.insert(c, t);
            }
        }
        if level < m {
            let v = preorder[level];
            options.push(en.tuples(v, state[&v]));
            idx.push(0);
            continue;
        }
        out.push(
            preorder
                .iter()
                .copied()
                .filter(|v| rules.states[state[v] as usize].chosen)
                .collect::<Vec<_>>(),
        );
        loop {
            let level = options.len() - 1;
            if idx[level] + 1 < options[level].len() {
                idx[level] += 1;
                break;
            }
            options.pop();
            idx.pop();
            if options.is_empty() {
                return out;
            }
        }
    }
}

/// Convenience for tests and reports: Γ as f64 logarithm.
pub fn ln_count(count: &BigUint) -> f64 {
    if count.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = count.bits();
    if bits <= 64 {
        return (count.to_u64().expect("fits") as f64).ln();
    }
    let shift = bits - 64;
    let top = (count >> shift).to_u64().expect("64 bits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}
