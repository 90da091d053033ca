//! Root-system and weight-lattice combinatorics for the series A through G.
//!
//! Node numbering follows Humphreys. For reference, the diagrams (colored
//! nodes are rendered by the catalog; here plain):
//!
//! ```text
//! A_n   1 - 2 - 3 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n          (n short)
//! C_n   1 - 2 - ... - (n-1) <= n          (n long)
//! D_n   1 - 2 - ... - (n-2) < (n-1), n    (fork at n-2)
//! E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]     with 2 attached to 4
//! F_4   1 - 2 => 3 - 4                    (1, 2 long)
//! G_2   1 <≡ 2                            (1 short)
//! ```
//!
//! The Cartan matrix convention is `a_ij = (coroot_i, root_j)`, i.e. row `i`
//! is scaled by `1/d_i`; the symmetrized matrix is `d_i a_ij`. Weights are
//! stored in fundamental-weight coordinates, roots in simple-root
//! coordinates; conversions go through the Cartan matrix.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{}", c)
    }
}

impl std::str::FromStr for Series {
    type Err = RootSysError;
    fn from_str(s: &str) -> Result<Self, RootSysError> {
        match s {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            "E" | "e" => Ok(Series::E),
            "F" | "f" => Ok(Series::F),
            "G" | "g" => Ok(Series::G),
            _ => Err(RootSysError::BadSeries { text: s.to_string() }),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RootSysError {
    #[error("unknown series '{text}'")]
    BadSeries { text: String },
    #[error("invalid rank {rank} for series {series}")]
    BadRank { series: Series, rank: usize },
    #[error("node {node} out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("subset is not proper")]
    NotProper,
    #[error("parse error in '{text}': {message}")]
    Parse { text: String, message: String },
}

/// Cartan datum: series, rank, Cartan matrix `a_ij = (coroot_i, root_j)`,
/// and symmetrizing integers `d_i = (root_i, root_i)/2` normalized so that
/// short roots have `d = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanDatum {
    pub series: Series,
    pub rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

/// Undirected Dynkin edges for the given series/rank, 1-based node labels.
fn dynkin_edges(series: Series, rank: usize) -> Vec<(usize, usize)> {
    match series {
        Series::A | Series::B | Series::C => (1..rank).map(|i| (i, i + 1)).collect(),
        Series::D => {
            let mut e: Vec<(usize, usize)> = (1..rank - 1).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank));
            e
        }
        Series::E => {
            let mut e = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if rank >= 7 {
                e.push((6, 7));
            }
            if rank == 8 {
                e.push((7, 8));
            }
            e
        }
        Series::F => vec![(1, 2), (2, 3), (3, 4)],
        Series::G => vec![(1, 2)],
    }
}

fn symmetrizer(series: Series, rank: usize) -> Vec<i64> {
    match series {
        Series::A | Series::D | Series::E => vec![1; rank],
        Series::B => {
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            d
        }
        Series::C => {
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            d
        }
        Series::F => vec![2, 2, 1, 1],
        Series::G => vec![1, 3],
    }
}

impl CartanDatum {
    pub fn new(series: Series, rank: usize) -> Result<CartanDatum, RootSysError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(RootSysError::BadRank { series, rank });
        }
        let d = symmetrizer(series, rank);
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        for (a, b) in dynkin_edges(series, rank) {
            let (i, j) = (a - 1, b - 1);
            // (root_i, root_j) = -max(d_i, d_j) for adjacent nodes
            let inner = -d[i].max(d[j]);
            cartan[i][j] = inner / d[i];
            cartan[j][i] = inner / d[j];
        }
        let datum = CartanDatum {
            series,
            rank,
            cartan,
            symmetrizer: d,
        };
        datum.validate();
        Ok(datum)
    }

    fn validate(&self) {
        for i in 0..self.rank {
            assert_eq!(self.cartan[i][i], 2);
            for j in 0..self.rank {
                if i != j {
                    assert!(self.cartan[i][j] <= 0);
                    assert_eq!(self.cartan[i][j] == 0, self.cartan[j][i] == 0);
                    assert_eq!(
                        self.symmetrizer[i] * self.cartan[i][j],
                        self.symmetrizer[j] * self.cartan[j][i],
                        "symmetrizability"
                    );
                }
            }
        }
    }

    /// Entry `a_ij` with 1-based node labels.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    /// `d_i = (root_i, root_i)/2`, 1-based.
    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizer[i - 1]
    }

    pub fn symmetrizer_vec(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// All positive roots, generated by closing the simple roots under the
    /// simple reflections and keeping the positive ones. No tables.
    pub fn positive_roots(&self) -> Vec<Root> {
        let rank = self.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            seen.insert(v.clone());
            queue.push(v);
        }
        while let Some(v) = queue.pop() {
            for i in 0..rank {
                // s_i(v) = v - <coroot_i, v> root_i
                let pairing: i64 = (0..rank).map(|j| self.cartan[i][j] * v[j]).sum();
                let mut w = v.clone();
                w[i] -= pairing;
                if seen.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        let mut out: Vec<Root> = seen
            .into_iter()
            .filter(|v| v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c > 0))
            .map(Root)
            .collect();
        out.sort();
        out
    }

    /// `(coroot_i, lambda)` for a weight in fundamental coordinates: just the
    /// i-th coordinate.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> i64 {
        lambda.0[i - 1]
    }

    /// Fundamental coordinates of a root given in simple-root coordinates.
    pub fn root_to_weight(&self, root: &Root) -> Weight {
        let coords = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * root.0[j]).sum())
            .collect();
        Weight(coords)
    }

    /// A flag datum is irreducible when the colored set is a single node
    /// whose coefficient in every positive root is at most one.
    pub fn is_irreducible_flag(&self, s: &NodeSubset) -> Result<bool, RootSysError> {
        let sc = s.complement(self.rank)?;
        if sc.members().len() != 1 {
            return Ok(false);
        }
        let x = *sc.members().iter().next().unwrap() - 1;
        Ok(self.positive_roots().iter().all(|r| r.0[x] <= 1))
    }

    /// Complex dimension of the flag manifold for the Levi subset `S`:
    /// the number of positive roots whose support meets the colored set.
    pub fn flag_dimension(&self, s: &NodeSubset) -> Result<usize, RootSysError> {
        let sc = s.complement(self.rank)?;
        let colored: Vec<usize> = sc.members().iter().map(|&n| n - 1).collect();
        Ok(self
            .positive_roots()
            .iter()
            .filter(|r| colored.iter().any(|&x| r.0[x] != 0))
            .count())
    }

    /// The sub-datum induced on a node subset: connected components of the
    /// induced diagram, classified by series. Returns one entry per
    /// component as (datum, original 1-based node labels in the component's
    /// own node order).
    pub fn induced_subsystems(
        &self,
        s: &NodeSubset,
    ) -> Result<Vec<(CartanDatum, Vec<usize>)>, RootSysError> {
        s.check_range(self.rank)?;
        let nodes: Vec<usize> = s.members().iter().copied().collect();
        let mut remaining: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut components = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = vec![start];
            remaining.remove(&start);
            let mut frontier = vec![start];
            while let Some(u) = frontier.pop() {
                let adj: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&v| self.a(u, v) != 0)
                    .collect();
                for v in adj {
                    remaining.remove(&v);
                    comp.push(v);
                    frontier.push(v);
                }
            }
            comp.sort();
            components.push(classify_component(self, &comp)?);
        }
        Ok(components)
    }
}

/// Classify a connected induced subdiagram and rebuild it as a fresh datum.
/// The returned node list maps the new datum's nodes 1..k to the original
/// labels.
fn classify_component(
    datum: &CartanDatum,
    comp: &[usize],
) -> Result<(CartanDatum, Vec<usize>), RootSysError> {
    let k = comp.len();
    let bond = |u: usize, v: usize| datum.a(u, v) * datum.a(v, u);
    let degree = |u: usize| comp.iter().filter(|&&v| v != u && datum.a(u, v) != 0).count();
    let d_of = |u: usize| datum.d(u);
    let dmin = comp.iter().map(|&u| d_of(u)).min().unwrap();

    if k == 1 {
        return Ok((CartanDatum::new(Series::A, 1)?, comp.to_vec()));
    }

    let branch: Vec<usize> = comp.iter().copied().filter(|&u| degree(u) == 3).collect();
    if let Some(&b) = branch.first() {
        // D or E: walk the three arms
        let mut arms: Vec<Vec<usize>> = Vec::new();
        for &n in comp.iter().filter(|&&v| v != b && datum.a(b, v) != 0) {
            let mut arm = vec![n];
            let mut prev = b;
            let mut cur = n;
            loop {
                let next: Vec<usize> = comp
                    .iter()
                    .copied()
                    .filter(|&v| v != prev && v != cur && datum.a(cur, v) != 0)
                    .collect();
                match next.first() {
                    Some(&nx) => {
                        arm.push(nx);
                        prev = cur;
                        cur = nx;
                    }
                    None => break,
                }
            }
            arms.push(arm);
        }
        arms.sort_by_key(|a| a.len());
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        if lens[0] == 1 && lens[1] == 1 {
            // D_k: order as chain(long arm reversed) .. branch, then fork
            let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
            order.push(b);
            order.push(arms[0][0]);
            order.push(arms[1][0]);
            return Ok((CartanDatum::new(Series::D, k)?, order));
        }
        if lens[0] == 1 && lens[1] == 2 && (2..=4).contains(&lens[2]) {
            // E_k with Humphreys order: long arm tail first
            let mut order = vec![0usize; k];
            order[0] = arms[1][1];
            order[1] = arms[0][0];
            order[2] = arms[1][0];
            order[3] = b;
            for (t, &n) in arms[2].iter().enumerate() {
                order[4 + t] = n;
            }
            return Ok((CartanDatum::new(Series::E, k)?, order));
        }
        return Err(RootSysError::Parse {
            text: format!("{:?}", comp),
            message: "unrecognized branched diagram".into(),
        });
    }

    // chain: find an end and walk it
    let ends: Vec<usize> = comp.iter().copied().filter(|&u| degree(u) == 1).collect();
    let mut order = vec![ends[0]];
    let mut prev = 0usize;
    while order.len() < k {
        let cur = *order.last().unwrap();
        let next = comp
            .iter()
            .copied()
            .find(|&v| v != prev && v != cur && datum.a(cur, v) != 0)
            .expect("chain continues");
        prev = cur;
        order.push(next);
    }

    let triple = (0..k - 1).any(|t| bond(order[t], order[t + 1]) == 3);
    if triple {
        // G2: short node first
        if d_of(order[0]) > d_of(order[1]) {
            order.reverse();
        }
        return Ok((CartanDatum::new(Series::G, 2)?, order));
    }
    let doubles: Vec<usize> = (0..k - 1)
        .filter(|&t| bond(order[t], order[t + 1]) == 2)
        .collect();
    if doubles.is_empty() {
        return Ok((CartanDatum::new(Series::A, k)?, order));
    }
    // one double bond: B (short end), C (long end), or F4 (interior)
    let pos = doubles[0];
    if pos > 0 && pos < k - 2 {
        // interior double bond: F4 pattern, long side first
        if d_of(order[0]) < d_of(order[k - 1]) {
            order.reverse();
        }
        return Ok((CartanDatum::new(Series::F, 4)?, order));
    }
    // orient so the double bond touches the last node
    if pos == 0 {
        order.reverse();
    }
    let last = *order.last().unwrap();
    let series = if d_of(last) == dmin { Series::B } else { Series::C };
    Ok((CartanDatum::new(series, k)?, order))
}

/// Integer weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nodes with nonzero coordinate, 1-based.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Subset of Dynkin nodes, 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSubset {
    members: BTreeSet<usize>,
}

impl NodeSubset {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> NodeSubset {
        NodeSubset {
            members: members.into_iter().collect(),
        }
    }

    pub fn empty() -> NodeSubset {
        NodeSubset {
            members: BTreeSet::new(),
        }
    }

    pub fn full(rank: usize) -> NodeSubset {
        NodeSubset {
            members: (1..=rank).collect(),
        }
    }

    /// `S_{>m}` = nodes m+1 .. rank.
    pub fn above(m: usize, rank: usize) -> NodeSubset {
        NodeSubset {
            members: (m + 1..=rank).collect(),
        }
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, node: usize) -> bool {
        self.members.contains(&node)
    }

    pub fn is_subset_of(&self, other: &NodeSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn check_range(&self, rank: usize) -> Result<(), RootSysError> {
        for &n in &self.members {
            if n == 0 || n > rank {
                return Err(RootSysError::NodeOutOfRange { node: n, rank });
            }
        }
        Ok(())
    }

    pub fn complement(&self, rank: usize) -> Result<NodeSubset, RootSysError> {
        self.check_range(rank)?;
        Ok(NodeSubset {
            members: (1..=rank).filter(|n| !self.members.contains(n)).collect(),
        })
    }

    pub fn is_proper(&self, rank: usize) -> bool {
        self.members.len() < rank
    }
}

/// Which sublattice a membership test refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sublattice {
    /// Dominant weights supported on `S`.
    DominantOnS,
    /// All weights supported on the complement of `S`.
    LatticeOnComplement,
}

/// Membership in the sublattices attached to a Levi subset `S`:
/// dominant weights supported on `S`, or arbitrary-sign weights supported on
/// the colored complement.
pub fn sublattice_member(
    lambda: &Weight,
    s: &NodeSubset,
    rank: usize,
    which: Sublattice,
) -> Result<bool, RootSysError> {
    s.check_range(rank)?;
    let supp = lambda.support();
    match which {
        Sublattice::DominantOnS => {
            Ok(lambda.is_dominant() && supp.iter().all(|n| s.contains(*n)))
        }
        Sublattice::LatticeOnComplement => {
            let sc = s.complement(rank)?;
            Ok(supp.iter().all(|n| sc.contains(*n)))
        }
    }
}

/// Text form `A3:c={1,3}`: series, rank, colored node set (the complement of
/// the Levi subset).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredDiagram {
    pub series: Series,
    pub rank: usize,
    pub colored: NodeSubset,
}

impl ColoredDiagram {
    pub fn datum(&self) -> Result<CartanDatum, RootSysError> {
        CartanDatum::new(self.series, self.rank)
    }

    /// The Levi subset `S` (uncolored nodes).
    pub fn levi_subset(&self) -> Result<NodeSubset, RootSysError> {
        self.colored.complement(self.rank)
    }
}

impl fmt::Display for ColoredDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.colored.members().iter().map(|n| n.to_string()).collect();
        write!(f, "{}{}:c={{{}}}", self.series, self.rank, nodes.join(","))
    }
}

impl std::str::FromStr for ColoredDiagram {
    type Err = RootSysError;
    fn from_str(s: &str) -> Result<Self, RootSysError> {
        let bad = |m: &str| RootSysError::Parse {
            text: s.to_string(),
            message: m.to_string(),
        };
        let (head, tail) = s.split_once(":c=").ok_or_else(|| bad("expected ':c='"))?;
        if head.is_empty() {
            return Err(bad("missing series"));
        }
        let series: Series = head[..1].parse()?;
        let rank: usize = head[1..].parse().map_err(|_| bad("bad rank"))?;
        let inner = tail
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| bad("expected {...}"))?;
        let mut members = BTreeSet::new();
        for part in inner.split(',').filter(|p| !p.trim().is_empty()) {
            let n: usize = part.trim().parse().map_err(|_| bad("bad node"))?;
            members.insert(n);
        }
        let colored = NodeSubset { members };
        colored.check_range(rank)?;
        Ok(ColoredDiagram {
            series,
            rank,
            colored,
        })
    }
}

#[cfg(test)]
mod tests;
