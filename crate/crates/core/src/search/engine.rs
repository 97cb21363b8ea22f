//! Backtracking over implication tables.
//!
//! Cells are filled in row-major order of the free cells. Every quantified
//! axiom tuple is evaluated against the partial table; a tuple that reads an
//! unassigned cell is parked on that cell's watch list and re-evaluated the
//! moment the cell is assigned. Watch-list pushes are logged so that
//! backtracking restores them exactly.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::{nth_tuple, AxiomId, Requirement, Verdict};
use crate::ops::{Eval, ImplicationOps, Pending};

use super::canonical::{canonical_labeling, CanonicalForm};
use super::{Model, SearchConfig};

const UNSET: Elem = Elem::MAX;

/// A partial table seen through the evaluation trait.
struct View<'a> {
    n: usize,
    one: Elem,
    zero: Option<Elem>,
    cells: &'a [Elem],
}

impl ImplicationOps for View<'_> {
    fn order(&self) -> usize {
        self.n
    }

    fn one(&self) -> Elem {
        self.one
    }

    fn zero(&self) -> Eval<Elem> {
        self.zero.ok_or(Pending::COMPLETE_TABLE)
    }

    #[inline]
    fn imp(&self, a: Elem, b: Elem) -> Eval<Elem> {
        let i = a as usize * self.n + b as usize;
        match self.cells[i] {
            UNSET => Err(Pending(i as u32)),
            v => Ok(v),
        }
    }
}

/// The fixed part of a search: hard assignments, laws and symmetry data.
pub(crate) struct Problem {
    n: usize,
    one: Elem,
    zero: Option<Elem>,
    cells: Vec<Elem>,
    free: Vec<usize>,
    laws: Vec<AxiomId>,
    tuples_per_law: Vec<u32>,
    refute: Vec<Requirement>,
    /// Transpositions the lex-leader check compares against.
    swaps: Vec<(Elem, Elem)>,
    canonical_only: bool,
}

impl Problem {
    /// `None` when the hard assignments already conflict.
    pub(crate) fn new(config: &SearchConfig) -> Option<Self> {
        let n = config.order;
        let one = (n - 1) as Elem;
        let mut laws: Vec<AxiomId> = config
            .satisfy
            .iter()
            .flat_map(|r| r.axioms().iter().copied())
            .collect();
        laws.sort_unstable();
        laws.dedup();
        let has = |a: AxiomId| laws.contains(&a);

        let mut cells = vec![UNSET; n * n];
        let set = |cells: &mut Vec<Elem>, a: usize, b: usize, v: Elem| -> bool {
            let c = &mut cells[a * n + b];
            if *c != UNSET && *c != v {
                return false;
            }
            *c = v;
            true
        };
        let mut ok = true;
        let zero = has(AxiomId::Bounded).then_some(0 as Elem);
        if zero.is_some() {
            for b in 0..n {
                ok &= set(&mut cells, 0, b, one);
            }
        }
        if has(AxiomId::Be3) || has(AxiomId::W1) {
            for b in 0..n {
                ok &= set(&mut cells, n - 1, b, b as Elem);
            }
        }
        if has(AxiomId::Be2) {
            for a in 0..n {
                ok &= set(&mut cells, a, n - 1, one);
            }
        }
        if has(AxiomId::Be1) {
            for a in 0..n {
                ok &= set(&mut cells, a, a, one);
            }
        }
        if !ok {
            return None;
        }
        let free = (0..n * n).filter(|&i| cells[i] == UNSET).collect();
        let movable: Vec<Elem> = (0..n as Elem)
            .filter(|&e| e != one && Some(e) != zero)
            .collect();
        let swaps = if config.canonical_only {
            movable
                .iter()
                .enumerate()
                .flat_map(|(i, &x)| movable[i + 1..].iter().map(move |&y| (x, y)))
                .collect()
        } else {
            Vec::new()
        };
        let tuples_per_law = laws
            .iter()
            .map(|a| n.pow(a.arity() as u32) as u32)
            .collect();
        Some(Self {
            n,
            one,
            zero,
            cells,
            free,
            laws,
            tuples_per_law,
            refute: config.refute.clone(),
            swaps,
            canonical_only: config.canonical_only,
        })
    }

    fn view<'a>(&self, cells: &'a [Elem]) -> View<'a> {
        View {
            n: self.n,
            one: self.one,
            zero: self.zero,
            cells,
        }
    }

    /// Evaluates watch entry `id` (law index in the high bits).
    fn eval(&self, cells: &[Elem], id: (u16, u32)) -> Eval<Verdict> {
        let (law, t) = id;
        let axiom = self.laws[law as usize];
        let tuple = nth_tuple(self.n, axiom.arity(), t as usize);
        axiom.eval(&self.view(cells), tuple)
    }

    /// True when `cells ≤ σ(cells)` is still possible for every transposition.
    fn lex_leader(&self, cells: &[Elem]) -> bool {
        let n = self.n;
        self.swaps.iter().all(|&(x, y)| {
            let s = |e: Elem| {
                if e == x {
                    y
                } else if e == y {
                    x
                } else {
                    e
                }
            };
            for a in 0..n as Elem {
                for b in 0..n as Elem {
                    let here = cells[a as usize * n + b as usize];
                    let there = cells[s(a) as usize * n + s(b) as usize];
                    if here == UNSET || there == UNSET {
                        return true;
                    }
                    let there = s(there);
                    if here != there {
                        return here < there;
                    }
                }
            }
            true
        })
    }
}

/// Results shared between workers.
pub(crate) struct Shared {
    pub(crate) models: Mutex<Vec<Model>>,
    pub(crate) distinct: Mutex<std::collections::BTreeSet<CanonicalForm>>,
    pub(crate) stop: AtomicBool,
    pub(crate) nodes: AtomicU64,
    pub(crate) leaves: AtomicU64,
    pub(crate) deadline: Option<Instant>,
    pub(crate) max_models: Option<usize>,
}

impl Shared {
    pub(crate) fn new(config: &SearchConfig) -> Self {
        Self {
            models: Mutex::new(Vec::new()),
            distinct: Mutex::new(Default::default()),
            stop: AtomicBool::new(false),
            nodes: AtomicU64::new(0),
            leaves: AtomicU64::new(0),
            deadline: config.time_budget.map(|d| Instant::now() + d),
            max_models: config.max_models,
        }
    }
}

#[derive(Clone)]
struct Worker<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    cells: Vec<Elem>,
    watch: Vec<Vec<(u16, u32)>>,
    log: Vec<usize>,
    nodes: u64,
}

impl<'a> Worker<'a> {
    /// Sets up the root state. `None` when some law already fails.
    fn root(p: &'a Problem, shared: &'a Shared) -> Option<Self> {
        let mut w = Worker {
            p,
            shared,
            cells: p.cells.clone(),
            watch: vec![Vec::new(); p.n * p.n],
            log: Vec::new(),
            nodes: 0,
        };
        for (law, &count) in p.tuples_per_law.iter().enumerate() {
            for t in 0..count {
                let id = (law as u16, t);
                if !w.file(id) {
                    return None;
                }
            }
        }
        w.log.clear();
        Some(w)
    }

    /// Evaluates `id` and parks it if it pends. False on a violation.
    fn file(&mut self, id: (u16, u32)) -> bool {
        match self.p.eval(&self.cells, id) {
            Ok(Verdict::Holds) => true,
            Ok(Verdict::Fails(_)) => false,
            Err(Pending::COMPLETE_TABLE) => true,
            Err(Pending(c)) => {
                self.watch[c as usize].push(id);
                self.log.push(c as usize);
                true
            }
        }
    }

    fn assign(&mut self, cell: usize, v: Elem) -> bool {
        self.cells[cell] = v;
        let pending = std::mem::take(&mut self.watch[cell]);
        let ok = pending.iter().all(|&id| self.file(id));
        self.watch[cell] = pending;
        ok
    }

    fn undo(&mut self, cell: usize, mark: usize) {
        while self.log.len() > mark {
            let c = self.log.pop().unwrap();
            self.watch[c].pop();
        }
        self.cells[cell] = UNSET;
    }

    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            self.shared.nodes.fetch_add(4096, Ordering::Relaxed);
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.shared.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        self.shared.stop.load(Ordering::Relaxed)
    }

    fn dfs(&mut self, depth: usize) {
        if self.out_of_time() {
            return;
        }
        if depth == self.p.free.len() {
            self.leaf();
            return;
        }
        let cell = self.p.free[depth];
        for v in 0..self.p.n as Elem {
            let mark = self.log.len();
            if self.assign(cell, v) && self.p.lex_leader(&self.cells) {
                self.dfs(depth + 1);
            }
            self.undo(cell, mark);
        }
    }

    /// Runs the subtree below a fixed prefix of free-cell values.
    fn run(mut self, prefix: &[Elem]) {
        for (depth, &v) in prefix.iter().enumerate() {
            self.nodes += 1;
            if !self.assign(self.p.free[depth], v) || !self.p.lex_leader(&self.cells) {
                self.shared.nodes.fetch_add(self.nodes, Ordering::Relaxed);
                return;
            }
        }
        self.dfs(prefix.len());
        self.shared
            .nodes
            .fetch_add(self.nodes % 4096, Ordering::Relaxed);
    }

    fn leaf(&mut self) {
        self.shared.leaves.fetch_add(1, Ordering::Relaxed);
        let p = self.p;
        let alg = FiniteAlgebra::new(p.n, p.one as usize, self.cells.clone())
            .expect("search only writes valid entries");
        let ops = alg.derive();
        let mut cache = std::collections::BTreeMap::new();
        let mut holds = |a: AxiomId| *cache.entry(a).or_insert_with(|| a.check(&ops).holds);
        if !p.laws.iter().all(|&a| holds(a)) {
            return;
        }
        if p.refute.iter().any(|r| r.holds_by(&mut holds)) {
            return;
        }
        let (canonical, _) = canonical_labeling(&alg);
        let mut distinct = self.shared.distinct.lock().unwrap();
        let fresh = distinct.insert(canonical.clone());
        let count = distinct.len();
        drop(distinct);
        let model = if p.canonical_only {
            Model {
                algebra: canonical.to_algebra(),
                canonical,
                labelings_found: 1,
            }
        } else {
            Model {
                algebra: alg,
                canonical,
                labelings_found: 1,
            }
        };
        let mut models = self.shared.models.lock().unwrap();
        if p.canonical_only && !fresh {
            if let Some(m) = models.iter_mut().find(|m| m.canonical == model.canonical) {
                m.labelings_found += 1;
            }
        } else {
            models.push(model);
        }
        drop(models);
        if let Some(max) = self.shared.max_models {
            let reached = if p.canonical_only {
                count
            } else {
                self.shared.models.lock().unwrap().len()
            };
            if reached >= max {
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
    }
}

/// Explores the whole space, splitting the first free cells across workers.
pub(crate) fn explore(p: &Problem, shared: &Shared) {
    let Some(root) = Worker::root(p, shared) else {
        return;
    };
    let split = p.free.len().min(2);
    let n = p.n;
    let prefixes: Vec<Vec<Elem>> = (0..n.pow(split as u32))
        .map(|i| nth_tuple(n, split, i)[..split].to_vec())
        .collect();
    prefixes
        .par_iter()
        .for_each(|prefix| root.clone().run(prefix));
}
