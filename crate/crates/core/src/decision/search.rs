//! Backtracking over a finite window of cells.
//!
//! A [`Problem`] is a list of cells (assigned in index order), an alphabet
//! (tried in ascending order) and a set of forbidden occurrences, each a
//! list of `(cell, symbol)` pairs that must not all hold at once. An
//! occurrence is checked when its highest cell is assigned.
//!
//! The frontier before cell `i` is the set of earlier cells that still share
//! an occurrence with some cell `>= i`. Everything the remaining search can
//! observe about the prefix is the frontier's values, which gives two exact
//! shortcuts: frontier states with no completion are cached as dead during
//! backtracking, and counting runs as a forward pass over frontier states.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

type Sym = u16;

#[derive(Debug, Clone)]
struct Occurrence {
    /// `(cell, symbol)` pairs other than the closing cell.
    rest: Box<[(u32, Sym)]>,
}

impl Occurrence {
    fn matches(&self, assign: &[Sym]) -> bool {
        self.rest.iter().all(|&(c, s)| assign[c as usize] == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pin {
    Free,
    Fixed(Sym),
    /// The cell must carry a symbol outside the alphabet.
    Impossible,
}

#[derive(Debug)]
pub(crate) struct Problem {
    symbols: usize,
    cells: usize,
    /// `closing[cell][sym]`: occurrences whose highest cell is `cell` and
    /// which require `sym` there.
    closing: Vec<Vec<Vec<Occurrence>>>,
    pins: Vec<Pin>,
    /// `frontier[i]` for `i` in `0..=cells`.
    frontier: Vec<Box<[u32]>>,
    max_nodes: u64,
}

/// Collects occurrences and pins before freezing them into a [`Problem`].
pub(crate) struct ProblemBuilder {
    symbols: usize,
    cells: usize,
    occurrences: HashSet<Vec<(u32, Sym)>>,
    pins: Vec<Pin>,
}

impl ProblemBuilder {
    pub fn new(cells: usize, symbols: usize) -> Self {
        assert!(symbols <= Sym::MAX as usize, "alphabet too large for the search");
        ProblemBuilder {
            symbols,
            cells,
            occurrences: HashSet::new(),
            pins: vec![Pin::Free; cells],
        }
    }

    /// Adds a forbidden occurrence. Pairs must name distinct cells.
    pub fn forbid(&mut self, mut pairs: Vec<(u32, Sym)>) {
        debug_assert!(!pairs.is_empty());
        pairs.sort_unstable();
        debug_assert!(pairs.windows(2).all(|w| w[0].0 != w[1].0));
        self.occurrences.insert(pairs);
    }

    pub fn pin(&mut self, cell: usize, pin: Pin) {
        self.pins[cell] = pin;
    }

    pub fn occurrence_count(&self) -> usize {
        self.occurrences.len()
    }

    pub fn build(self, max_nodes: u64) -> Problem {
        let n = self.cells;
        let mut closing: Vec<Vec<Vec<Occurrence>>> = vec![vec![Vec::new(); self.symbols]; n];
        let mut last_use: Vec<Option<usize>> = vec![None; n];
        // sorted so that the problem layout does not depend on hash order
        let mut occurrences: Vec<_> = self.occurrences.into_iter().collect();
        occurrences.sort_unstable();
        for pairs in occurrences {
            let (last, sym) = *pairs.last().expect("nonempty occurrence");
            let last = last as usize;
            for &(c, _) in &pairs[..pairs.len() - 1] {
                let slot = &mut last_use[c as usize];
                *slot = Some(slot.map_or(last, |u| u.max(last)));
            }
            closing[last][sym as usize].push(Occurrence {
                rest: pairs[..pairs.len() - 1].into(),
            });
        }
        let mut frontier = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let f: Vec<u32> = (0..i)
                .filter(|&j| last_use[j].is_some_and(|u| u >= i))
                .map(|j| j as u32)
                .collect();
            frontier.push(f.into_boxed_slice());
        }
        Problem {
            symbols: self.symbols,
            cells: n,
            closing,
            pins: self.pins,
            frontier,
            max_nodes,
        }
    }
}

impl Problem {
    fn infeasible(&self) -> bool {
        self.symbols == 0 || self.pins.contains(&Pin::Impossible)
    }

    /// Next symbol `>= from` allowed at `cell` by its pin.
    fn candidate(&self, cell: usize, from: usize) -> Option<Sym> {
        match self.pins[cell] {
            Pin::Free => (from < self.symbols).then_some(from as Sym),
            Pin::Fixed(s) => (from <= s as usize).then_some(s),
            Pin::Impossible => None,
        }
    }

    fn consistent(&self, cell: usize, sym: Sym, assign: &[Sym]) -> bool {
        self.closing[cell][sym as usize]
            .iter()
            .all(|o| !o.matches(assign))
    }

    fn key(&self, level: usize, assign: &[Sym]) -> Box<[Sym]> {
        self.frontier[level].iter().map(|&c| assign[c as usize]).collect()
    }

    fn node_cap(&self) -> Error {
        Error::cap(
            "search nodes",
            format!("more than {}", self.max_nodes),
            self.max_nodes as usize,
        )
    }

    /// Visits complete assignments in lexicographic order until `visit`
    /// returns `false`.
    fn backtrack(&self, mut visit: impl FnMut(&[Sym]) -> bool) -> Result<()> {
        if self.infeasible() {
            return Ok(());
        }
        let n = self.cells;
        if n == 0 {
            visit(&[]);
            return Ok(());
        }
        let mut assign: Vec<Sym> = vec![0; n];
        let mut next = vec![0usize; n];
        let mut found = vec![false; n];
        let mut dead: Vec<HashSet<Box<[Sym]>>> = vec![HashSet::new(); n];
        let mut nodes = 0u64;
        let mut level = 0usize;
        loop {
            let mut descended = false;
            while let Some(s) = self.candidate(level, next[level]) {
                next[level] = s as usize + 1;
                nodes += 1;
                if nodes > self.max_nodes {
                    return Err(self.node_cap());
                }
                assign[level] = s;
                if !self.consistent(level, s, &assign) {
                    continue;
                }
                if level + 1 == n {
                    found[level] = true;
                    if !visit(&assign) {
                        return Ok(());
                    }
                    continue;
                }
                if dead[level + 1].contains(&self.key(level + 1, &assign)) {
                    continue;
                }
                level += 1;
                next[level] = 0;
                found[level] = false;
                descended = true;
                break;
            }
            if descended {
                continue;
            }
            if !found[level] {
                let key = self.key(level, &assign);
                dead[level].insert(key);
            }
            if level == 0 {
                return Ok(());
            }
            let f = found[level];
            level -= 1;
            found[level] |= f;
        }
    }

    /// The lexicographically first solution, if any.
    pub fn first_solution(&self) -> Result<Option<Vec<Sym>>> {
        let mut out = None;
        self.backtrack(|a| {
            out = Some(a.to_vec());
            false
        })?;
        Ok(out)
    }

    /// All solutions in lexicographic order, failing past `cap`.
    pub fn all_solutions(&self, cap: usize) -> Result<Vec<Vec<Sym>>> {
        let mut out = Vec::new();
        let mut over = false;
        self.backtrack(|a| {
            if out.len() == cap {
                over = true;
                return false;
            }
            out.push(a.to_vec());
            true
        })?;
        if over {
            return Err(Error::cap("enumerated patterns", format!("more than {cap}"), cap));
        }
        Ok(out)
    }

    /// Exact number of solutions.
    pub fn count(&self) -> Result<BigUint> {
        if self.infeasible() {
            return Ok(BigUint::zero());
        }
        let n = self.cells;
        let mut assign: Vec<Sym> = vec![0; n];
        let mut layer: HashMap<Box<[Sym]>, BigUint> = HashMap::from([(Box::from([]), BigUint::one())]);
        let mut nodes = 0u64;
        for i in 0..n {
            let mut next: HashMap<Box<[Sym]>, BigUint> = HashMap::new();
            for (key, count) in &layer {
                for (&c, &v) in self.frontier[i].iter().zip(key.iter()) {
                    assign[c as usize] = v;
                }
                let mut from = 0;
                while let Some(s) = self.candidate(i, from) {
                    from = s as usize + 1;
                    nodes += 1;
                    if nodes > self.max_nodes {
                        return Err(self.node_cap());
                    }
                    assign[i] = s;
                    if !self.consistent(i, s, &assign) {
                        continue;
                    }
                    let k = self.key(i + 1, &assign);
                    *next.entry(k).or_insert_with(BigUint::zero) += count;
                }
            }
            layer = next;
            if layer.is_empty() {
                return Ok(BigUint::zero());
            }
        }
        Ok(layer.into_values().sum())
    }
}
