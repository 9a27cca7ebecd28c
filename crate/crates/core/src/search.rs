//! Word-level exact searches shared by the invariant solvers (`n <= 64`).
//!
//! Every search accepts `forced_in` / `forced_out` masks so that
//! [`canonical`] can walk vertices from the highest index down and pin the
//! integer-smallest optimum.

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn all_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) fn ones(m: u64) -> usize {
    m.count_ones() as usize
}

pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Pins the integer-smallest feasible set by deciding vertices `n-1 .. 0`,
/// preferring exclusion. `feasible(in, out)` must report whether an optimum
/// exists containing `in` and avoiding `out`; it must hold for `(0, 0)`.
pub(crate) fn canonical(n: usize, mut feasible: impl FnMut(u64, u64) -> bool) -> u64 {
    let (mut inside, mut outside) = (0u64, 0u64);
    for v in (0..n).rev() {
        if feasible(inside, outside | bit(v)) {
            outside |= bit(v);
        } else {
            inside |= bit(v);
        }
    }
    inside
}

// ---------------------------------------------------------------- domination

struct DomSearch<'a> {
    closed: &'a [u64],
    all: u64,
    best: Option<u64>,
    limit: usize,
}

impl DomSearch<'_> {
    fn run(&mut self, chosen: u64, dominated: u64, forbidden: u64) {
        let undominated = self.all & !dominated;
        let size = ones(chosen);
        if undominated == 0 {
            if size < self.limit {
                self.limit = size;
                self.best = Some(chosen);
            }
            return;
        }
        if size + 1 >= self.limit {
            return;
        }
        let allowed = self.all & !forbidden & !chosen;
        let mut max_cover = 0;
        for v in Bits(allowed) {
            max_cover = max_cover.max(ones(self.closed[v] & undominated));
        }
        if max_cover == 0 {
            return;
        }
        let lb = size + ones(undominated).div_ceil(max_cover);
        if lb >= self.limit {
            return;
        }
        // undominated vertex with the fewest available dominators
        let mut pick = None;
        let mut fewest = usize::MAX;
        for u in Bits(undominated) {
            let c = ones(self.closed[u] & allowed);
            if c < fewest {
                fewest = c;
                pick = Some(u);
                if c <= 1 {
                    break;
                }
            }
        }
        let u = pick.unwrap();
        let mut cands: Vec<usize> = Bits(self.closed[u] & allowed).collect();
        if cands.is_empty() {
            return;
        }
        cands.sort_by_key(|&c| std::cmp::Reverse(ones(self.closed[c] & undominated)));
        let mut extra_forbidden = 0u64;
        for c in cands {
            self.run(
                chosen | bit(c),
                dominated | self.closed[c],
                forbidden | extra_forbidden,
            );
            extra_forbidden |= bit(c);
        }
    }
}

/// A minimum dominating set containing `forced_in` and avoiding `forced_out`,
/// provided one of size at most `budget` exists.
pub(crate) fn min_dominating(adj: &[u64], forced_in: u64, forced_out: u64, budget: usize) -> Option<u64> {
    let n = adj.len();
    let closed: Vec<u64> = (0..n).map(|v| adj[v] | bit(v)).collect();
    let dominated = Bits(forced_in).fold(0, |acc, v| acc | closed[v]);
    let mut s = DomSearch {
        closed: &closed,
        all: all_mask(n),
        best: None,
        limit: budget + 1,
    };
    s.run(forced_in, dominated, forced_out);
    s.best
}

// ---------------------------------------------------------- independent sets

fn clique_cover_bound(adj: &[u64], mut rem: u64) -> usize {
    let mut count = 0;
    while rem != 0 {
        let v = rem.trailing_zeros() as usize;
        let mut clique = bit(v);
        let mut poss = rem & adj[v];
        while poss != 0 {
            let w = poss.trailing_zeros() as usize;
            clique |= bit(w);
            poss &= adj[w];
        }
        rem &= !clique;
        count += 1;
    }
    count
}

struct MisSearch<'a> {
    adj: &'a [u64],
    /// smallest size worth recording next
    need: usize,
    best: Option<u64>,
}

impl MisSearch<'_> {
    fn run(&mut self, mut cur: u64, mut cand: u64) {
        // vertices with no neighbor among candidates are always taken
        loop {
            let free: u64 = Bits(cand).filter(|&v| self.adj[v] & cand == 0).fold(0, |a, v| a | bit(v));
            if free == 0 {
                break;
            }
            cur |= free;
            cand &= !free;
        }
        if cand == 0 {
            if ones(cur) >= self.need {
                self.need = ones(cur) + 1;
                self.best = Some(cur);
            }
            return;
        }
        if ones(cur) + clique_cover_bound(self.adj, cand) < self.need {
            return;
        }
        let v = Bits(cand).max_by_key(|&v| ones(self.adj[v] & cand)).unwrap();
        self.run(cur | bit(v), cand & !self.adj[v] & !bit(v));
        self.run(cur, cand & !bit(v));
    }
}

/// A maximum independent set containing `forced_in` and avoiding
/// `forced_out`, provided one of size at least `target` exists.
pub(crate) fn max_independent(adj: &[u64], forced_in: u64, forced_out: u64, target: usize) -> Option<u64> {
    let n = adj.len();
    if Bits(forced_in).any(|v| adj[v] & forced_in != 0) {
        return None;
    }
    let blocked = Bits(forced_in).fold(forced_in | forced_out, |acc, v| acc | adj[v]);
    let mut s = MisSearch {
        adj,
        need: target,
        best: None,
    };
    s.run(forced_in, all_mask(n) & !blocked);
    s.best
}

// -------------------------------------------------------------- vertex cover

fn greedy_matching(adj: &[u64], alive: u64) -> usize {
    let mut free = alive;
    let mut size = 0;
    for v in Bits(alive) {
        if free & bit(v) == 0 {
            continue;
        }
        let nb = adj[v] & free;
        if nb != 0 {
            let w = nb.trailing_zeros() as usize;
            free &= !(bit(v) | bit(w));
            size += 1;
        }
    }
    size
}

struct CoverSearch<'a> {
    adj: &'a [u64],
    all: u64,
    limit: usize,
    best: Option<u64>,
}

impl CoverSearch<'_> {
    fn run(&mut self, cover: u64, excluded: u64) {
        let open = self.all & !cover;
        let mut pick = None;
        let mut max_deg = 0;
        for v in Bits(open) {
            let d = ones(self.adj[v] & open);
            if d > max_deg {
                max_deg = d;
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            if ones(cover) < self.limit {
                self.limit = ones(cover);
                self.best = Some(cover);
            }
            return;
        };
        if ones(cover) + greedy_matching(self.adj, open) >= self.limit {
            return;
        }
        if excluded & bit(v) == 0 {
            self.run(cover | bit(v), excluded);
        }
        let nb = self.adj[v] & open;
        if nb & excluded == 0 {
            self.run(cover | nb, excluded | bit(v));
        }
    }
}

/// A minimum vertex cover containing `forced_in` and avoiding `forced_out`,
/// provided one of size at most `budget` exists.
pub(crate) fn min_vertex_cover(adj: &[u64], forced_in: u64, forced_out: u64, budget: usize) -> Option<u64> {
    let n = adj.len();
    if Bits(forced_out).any(|v| adj[v] & forced_out != 0) {
        return None;
    }
    let cover = Bits(forced_out).fold(forced_in, |acc, v| acc | adj[v]);
    let mut s = CoverSearch {
        adj,
        all: all_mask(n),
        limit: budget + 1,
        best: None,
    };
    s.run(cover, forced_out);
    s.best
}
