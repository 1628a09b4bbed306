//! Dense graphs and an exact maximum independent set solver.
//!
//! The solver searches for a maximum clique in the complement graph with
//! bitset branch and bound: candidates are greedily partitioned into cliques
//! of the original graph (colour classes of the complement), and the number
//! of classes bounds how many more vertices an independent set can take.
//! Vertices are renumbered by non-increasing complement degree, ties broken
//! by original index, so runs are deterministic.

use alloc::vec::Vec;

/// Fixed-size set of vertex indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset { words: alloc::vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Bitset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }
}

/// Undirected simple graph on `0..order`.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Bitset>,
}

impl Graph {
    pub fn new(order: usize) -> Self {
        Graph { adj: (0..order).map(|_| Bitset::new(order)).collect() }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bitset::count).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }

    /// Minimum-degree greedy independent set, ties by index.
    pub fn greedy_independent_set(&self) -> Vec<usize> {
        let mut alive = Bitset::full(self.order());
        let mut out = Vec::new();
        while !alive.is_empty() {
            let v = alive
                .iter()
                .min_by_key(|&v| {
                    let mut nb = self.adj[v].clone();
                    nb.intersect_with(&alive);
                    (nb.count(), v)
                })
                .expect("alive is non-empty");
            out.push(v);
            alive.remove(v);
            alive.difference_with(&self.adj[v]);
        }
        out
    }
}

/// How a search ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// The returned set is a maximum independent set.
    Exact,
    /// The budget ran out; the returned set is the best found.
    Timeout,
}

#[derive(Debug, Clone)]
pub struct MisOutcome {
    /// Vertices of the best independent set, sorted.
    pub set: Vec<usize>,
    pub status: SearchStatus,
    pub nodes: u64,
}

/// Branch-and-bound settings.
#[derive(Debug, Clone, Copy, Default)]
pub struct MisBudget {
    /// Stop after this many search nodes.
    pub max_nodes: Option<u64>,
}

const POLL_EVERY: u64 = 1 << 12;

struct Search<'a, F: FnMut() -> bool> {
    // Complement adjacency in the renumbered vertex order.
    comp: Vec<Bitset>,
    best: Vec<usize>,
    nodes: u64,
    budget: MisBudget,
    abort: &'a mut F,
    aborted: bool,
}

impl<F: FnMut() -> bool> Search<'_, F> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.aborted = true;
            }
        }
        if self.nodes.is_multiple_of(POLL_EVERY) && (self.abort)() {
            self.aborted = true;
        }
        self.aborted
    }

    /// Greedy clique partition of `cands` (colouring of the complement).
    fn color_sort(&self, cands: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cands.count());
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut uncolored = cands.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut class = uncolored.clone();
            while let Some(v) = class.first() {
                class.remove(v);
                class.difference_with(&self.comp[v]);
                uncolored.remove(v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cands: Bitset) {
        if self.tick() {
            return;
        }
        let (order, bounds) = self.color_sort(&cands);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= self.best.len() || self.aborted {
                return;
            }
            let v = order[i];
            current.push(v);
            let mut next = cands.clone();
            next.intersect_with(&self.comp[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cands.remove(v);
        }
    }
}

/// Exact maximum independent set by branch and bound.
///
/// `initial` seeds the incumbent (ignored unless independent); the greedy
/// set is used when it is larger. `abort` is polled periodically and ends
/// the search with [`SearchStatus::Timeout`] when it returns `true`.
pub fn maximum_independent_set<F: FnMut() -> bool>(
    graph: &Graph,
    initial: Option<&[usize]>,
    budget: MisBudget,
    abort: &mut F,
) -> MisOutcome {
    let order = graph.order();
    // Renumber: non-increasing complement degree == non-decreasing degree.
    let mut perm: Vec<usize> = (0..order).collect();
    perm.sort_by_key(|&v| (graph.degree(v), v));
    let mut rank = alloc::vec![0usize; order];
    for (new, &old) in perm.iter().enumerate() {
        rank[old] = new;
    }
    let comp: Vec<Bitset> = perm
        .iter()
        .map(|&old| {
            let mut row = Bitset::new(order);
            for (new, &other) in perm.iter().enumerate() {
                if other != old && !graph.adjacent(old, other) {
                    row.insert(new);
                }
            }
            row
        })
        .collect();

    let greedy = graph.greedy_independent_set();
    let seed = match initial {
        Some(set) if graph.is_independent(set) && set.len() > greedy.len() => set.to_vec(),
        _ => greedy,
    };
    let mut search = Search {
        comp,
        best: seed.iter().map(|&v| rank[v]).collect(),
        nodes: 0,
        budget,
        abort,
        aborted: false,
    };
    if order > 0 {
        search.expand(&mut Vec::new(), Bitset::full(order));
    }
    let mut set: Vec<usize> = search.best.iter().map(|&v| perm[v]).collect();
    set.sort_unstable();
    MisOutcome {
        set,
        status: if search.aborted { SearchStatus::Timeout } else { SearchStatus::Exact },
        nodes: search.nodes,
    }
}
