//! Split equivalences between finite ordinals, composed by connecting the
//! middle points and keeping the components that reach the outside.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "s")]
    S,
    #[serde(rename = "t")]
    T,
}

/// A position on the source (`s`) or target (`t`) side. All source
/// endpoints order before all target endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Endpoint(pub Side, pub usize);

impl Endpoint {
    pub fn s(pos: usize) -> Endpoint {
        Endpoint(Side::S, pos)
    }

    pub fn t(pos: usize) -> Endpoint {
        Endpoint(Side::T, pos)
    }

    pub fn side(self) -> Side {
        self.0
    }

    pub fn pos(self) -> usize {
        self.1
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.0 {
            Side::S => "s",
            Side::T => "t",
        };
        write!(f, "{}{}", self.1, tag)
    }
}

/// A block of a partition, sorted.
pub type Block = Vec<Endpoint>;

pub fn block_string(b: &[Endpoint]) -> String {
    let parts: Vec<String> = b.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrauerError {
    #[error("cannot compose: the inner relation ends at {inner} but the outer one starts at {outer}")]
    SizeMismatch { inner: usize, outer: usize },
    #[error("endpoint {0} is out of range")]
    OutOfRange(Endpoint),
    #[error("endpoint {0} occurs in more than one block")]
    Repeated(Endpoint),
    #[error("empty block")]
    EmptyBlock,
    #[error("not Brauerian: {0}")]
    NotBrauerian(String),
}

/// A split equivalence `src ⊢ tgt`, kept in canonical form: every endpoint
/// in exactly one block, blocks sorted internally and among themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSplit", into = "RawSplit")]
pub struct SplitEquivalence {
    src: usize,
    tgt: usize,
    blocks: Vec<Block>,
}

#[derive(Serialize, Deserialize)]
struct RawSplit {
    src: usize,
    tgt: usize,
    pairs: Vec<Block>,
}

impl TryFrom<RawSplit> for SplitEquivalence {
    type Error = BrauerError;

    fn try_from(raw: RawSplit) -> Result<Self, BrauerError> {
        SplitEquivalence::from_blocks(raw.src, raw.tgt, raw.pairs)
    }
}

impl From<SplitEquivalence> for RawSplit {
    fn from(r: SplitEquivalence) -> RawSplit {
        RawSplit { src: r.src, tgt: r.tgt, pairs: r.blocks }
    }
}

impl SplitEquivalence {
    pub fn identity(n: usize) -> SplitEquivalence {
        SplitEquivalence {
            src: n,
            tgt: n,
            blocks: (0..n).map(|m| vec![Endpoint::s(m), Endpoint::t(m)]).collect(),
        }
    }

    /// Builds a split equivalence from disjoint blocks. Endpoints that are
    /// not mentioned become singleton blocks.
    pub fn from_blocks(
        src: usize,
        tgt: usize,
        blocks: Vec<Block>,
    ) -> Result<SplitEquivalence, BrauerError> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(BrauerError::EmptyBlock);
            }
            for e in &b {
                let limit = match e.0 {
                    Side::S => src,
                    Side::T => tgt,
                };
                if e.1 >= limit {
                    return Err(BrauerError::OutOfRange(*e));
                }
                if !seen.insert(*e) {
                    return Err(BrauerError::Repeated(*e));
                }
            }
            b.sort();
            out.push(b);
        }
        for e in all_endpoints(src, tgt) {
            if !seen.contains(&e) {
                out.push(vec![e]);
            }
        }
        out.sort();
        Ok(SplitEquivalence { src, tgt, blocks: out })
    }

    /// Builds a Brauerian split equivalence from pairs.
    pub fn from_pairs(
        src: usize,
        tgt: usize,
        pairs: impl IntoIterator<Item = (Endpoint, Endpoint)>,
    ) -> Result<SplitEquivalence, BrauerError> {
        let blocks: Vec<Block> = pairs.into_iter().map(|(a, b)| vec![a, b]).collect();
        let r = SplitEquivalence::from_blocks(src, tgt, blocks)?;
        if let Some(b) = r.blocks.iter().find(|b| b.len() != 2) {
            return Err(BrauerError::NotBrauerian(format!("block {}", block_string(b))));
        }
        Ok(r)
    }

    /// Unchecked constructor for callers that already produce a partition.
    fn from_partition(src: usize, tgt: usize, mut blocks: Vec<Block>) -> SplitEquivalence {
        for b in &mut blocks {
            b.sort();
        }
        blocks.sort();
        SplitEquivalence { src, tgt, blocks }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_brauerian(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    /// Blocks joining a source endpoint to a target endpoint.
    pub fn transversals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks.iter().filter(|b| b.len() == 2).filter_map(|b| match (b[0], b[1]) {
            (Endpoint(Side::S, m), Endpoint(Side::T, n)) => Some((m, n)),
            _ => None,
        })
    }

    /// Blocks of two source endpoints.
    pub fn cups(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks.iter().filter(|b| b.len() == 2).filter_map(|b| match (b[0], b[1]) {
            (Endpoint(Side::S, m), Endpoint(Side::S, n)) => Some((m, n)),
            _ => None,
        })
    }

    /// Blocks of two target endpoints.
    pub fn caps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks.iter().filter(|b| b.len() == 2).filter_map(|b| match (b[0], b[1]) {
            (Endpoint(Side::T, m), Endpoint(Side::T, n)) => Some((m, n)),
            _ => None,
        })
    }

    /// The block containing `e`.
    pub fn block_of(&self, e: Endpoint) -> Option<&Block> {
        self.blocks.iter().find(|b| b.contains(&e))
    }

    /// Graphviz rendering with sources on the top row and targets below.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph \"{}\" {{\n", name.replace('"', "'")));
        out.push_str("  rankdir=TB;\n  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];\n");
        out.push_str("  { rank=same;");
        for k in 0..self.src {
            out.push_str(&format!(" s{};", k));
        }
        out.push_str(" }\n  { rank=same;");
        for k in 0..self.tgt {
            out.push_str(&format!(" t{};", k));
        }
        out.push_str(" }\n");
        for k in 0..self.src {
            out.push_str(&format!("  s{} [label=\"{}\"];\n", k, k));
        }
        for k in 0..self.tgt {
            out.push_str(&format!("  t{} [label=\"{}\"];\n", k, k));
        }
        // Invisible chains keep each row in order.
        for (side, n) in [("s", self.src), ("t", self.tgt)] {
            for k in 1..n {
                out.push_str(&format!("  {}{} -- {}{} [style=invis];\n", side, k - 1, side, k));
            }
        }
        if self.src > 0 && self.tgt > 0 {
            out.push_str("  s0 -- t0 [style=invis, weight=10];\n");
        }
        let node = |e: &Endpoint| match e.0 {
            Side::S => format!("s{}", e.1),
            Side::T => format!("t{}", e.1),
        };
        for b in &self.blocks {
            for w in b.windows(2) {
                let same_row = w[0].0 == w[1].0;
                let attrs = if same_row {
                    let port = if w[0].0 == Side::S { "s" } else { "n" };
                    format!(" [constraint=false, tailport={p}, headport={p}]", p = port)
                } else {
                    String::new()
                };
                out.push_str(&format!("  {} -- {}{};\n", node(&w[0]), node(&w[1]), attrs));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for SplitEquivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊢ {}:", self.src, self.tgt)?;
        for b in &self.blocks {
            write!(f, " {}", block_string(b))?;
        }
        Ok(())
    }
}

fn all_endpoints(src: usize, tgt: usize) -> impl Iterator<Item = Endpoint> {
    (0..src).map(Endpoint::s).chain((0..tgt).map(Endpoint::t))
}

/// Checks a raw list of blocks: true iff they pair up every endpoint of
/// `src ⊢ tgt` exactly once.
pub fn is_brauerian(src: usize, tgt: usize, blocks: &[Block]) -> bool {
    let mut seen = std::collections::HashSet::new();
    for b in blocks {
        if b.len() != 2 {
            return false;
        }
        for e in b {
            let limit = match e.0 {
                Side::S => src,
                Side::T => tgt,
            };
            if e.1 >= limit || !seen.insert(*e) {
                return false;
            }
        }
    }
    seen.len() == src + tgt
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

/// `P∗R` for `R: X ⊢ Y` and `P: Y ⊢ Z`.
pub fn compose(p: &SplitEquivalence, r: &SplitEquivalence) -> Result<SplitEquivalence, BrauerError> {
    compose_counting_loops(p, r).map(|(c, _)| c)
}

/// Like [`compose`], also returning how many components were closed loops
/// through the middle and therefore dropped.
pub fn compose_counting_loops(
    p: &SplitEquivalence,
    r: &SplitEquivalence,
) -> Result<(SplitEquivalence, usize), BrauerError> {
    if r.tgt != p.src {
        return Err(BrauerError::SizeMismatch { inner: r.tgt, outer: p.src });
    }
    let (x, y, z) = (r.src, r.tgt, p.tgt);
    // Elements: X^s at [0, x), the middle Y at [x, x+y), Z^t at [x+y, x+y+z).
    let index_r = |e: &Endpoint| match e.0 {
        Side::S => e.1,
        Side::T => x + e.1,
    };
    let index_p = |e: &Endpoint| match e.0 {
        Side::S => x + e.1,
        Side::T => x + y + e.1,
    };
    let mut uf = UnionFind::new(x + y + z);
    for b in &r.blocks {
        for w in b.windows(2) {
            uf.union(index_r(&w[0]), index_r(&w[1]));
        }
    }
    for b in &p.blocks {
        for w in b.windows(2) {
            uf.union(index_p(&w[0]), index_p(&w[1]));
        }
    }
    let mut groups: BTreeMap<usize, Block> = BTreeMap::new();
    for k in 0..x {
        groups.entry(uf.find(k)).or_default().push(Endpoint::s(k));
    }
    for k in 0..z {
        groups.entry(uf.find(x + y + k)).or_default().push(Endpoint::t(k));
    }
    let mut loops = std::collections::HashSet::new();
    for k in x..x + y {
        let root = uf.find(k);
        if !groups.contains_key(&root) {
            loops.insert(root);
        }
    }
    let blocks: Vec<Block> = groups.into_values().collect();
    Ok((SplitEquivalence::from_partition(x, z, blocks), loops.len()))
}

/// `R ⊎ P`: P is placed after R on both sides.
pub fn shift_union(r: &SplitEquivalence, p: &SplitEquivalence) -> SplitEquivalence {
    let shift = |e: &Endpoint| match e.0 {
        Side::S => Endpoint::s(e.1 + r.src),
        Side::T => Endpoint::t(e.1 + r.tgt),
    };
    let mut blocks = r.blocks.clone();
    blocks.extend(p.blocks.iter().map(|b| b.iter().map(shift).collect::<Block>()));
    SplitEquivalence::from_partition(r.src + p.src, r.tgt + p.tgt, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn se(src: usize, tgt: usize, pairs: &[(Endpoint, Endpoint)]) -> SplitEquivalence {
        SplitEquivalence::from_pairs(src, tgt, pairs.iter().copied()).unwrap()
    }
    use Endpoint as E;

    #[test]
    fn identities() {
        assert!(SplitEquivalence::identity(0).blocks().is_empty());
        assert_eq!(SplitEquivalence::identity(2), se(2, 2, &[(E::s(0), E::t(0)), (E::s(1), E::t(1))]));
    }

    #[test]
    fn shift_union_example() {
        let swap = se(2, 2, &[(E::s(0), E::t(1)), (E::s(1), E::t(0))]);
        let got = shift_union(&SplitEquivalence::identity(1), &swap);
        let want = se(3, 3, &[(E::s(0), E::t(0)), (E::s(1), E::t(2)), (E::s(2), E::t(1))]);
        assert_eq!(got, want);
        let empty = SplitEquivalence::identity(0);
        assert_eq!(shift_union(&empty, &swap), swap);
        assert_eq!(
            shift_union(&SplitEquivalence::identity(1), &SplitEquivalence::identity(1)),
            SplitEquivalence::identity(2)
        );
    }

    #[test]
    fn raw_brauerian_check() {
        let id2: Vec<Block> = SplitEquivalence::identity(2).blocks().to_vec();
        assert!(is_brauerian(2, 2, &id2));
        let reused = vec![vec![E::s(0), E::t(0)], vec![E::s(1), E::t(1)], vec![E::s(1), E::t(0)]];
        assert!(!is_brauerian(2, 2, &reused));
        assert!(!is_brauerian(2, 1, &[vec![E::s(0), E::t(0)]]));
    }

    #[test]
    fn size_mismatch() {
        let a = SplitEquivalence::identity(2);
        let b = SplitEquivalence::identity(3);
        assert_eq!(compose(&a, &b), Err(BrauerError::SizeMismatch { inner: 3, outer: 2 }));
    }

    #[test]
    fn closed_loop_is_counted() {
        // A cap followed by a cup leaves an empty relation on 0 ⊢ 0.
        let cap = se(0, 2, &[(E::t(0), E::t(1))]);
        let cup = se(2, 0, &[(E::s(0), E::s(1))]);
        let (c, loops) = compose_counting_loops(&cup, &cap).unwrap();
        assert_eq!(c, SplitEquivalence::identity(0));
        assert_eq!(loops, 1);
    }

    #[test]
    fn non_brauerian_composition() {
        // A three-element block survives composition as a three-element block.
        let r = SplitEquivalence::from_blocks(1, 2, vec![vec![E::s(0), E::t(0), E::t(1)]]).unwrap();
        let p = SplitEquivalence::identity(2);
        let c = compose(&p, &r).unwrap();
        assert_eq!(c, r);
        assert!(!c.is_brauerian());
        // Singletons fill in unmentioned endpoints.
        let s = SplitEquivalence::from_blocks(1, 1, vec![]).unwrap();
        assert_eq!(s.blocks().len(), 2);
    }

    #[test]
    fn json_shape() {
        let r = se(1, 1, &[(E::s(0), E::t(0))]);
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"src":1,"tgt":1,"pairs":[[["s",0],["t",0]]]}"#);
        let back: SplitEquivalence = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let bad = r#"{"src":1,"tgt":1,"pairs":[[["s",0],["t",3]]]}"#;
        assert!(serde_json::from_str::<SplitEquivalence>(bad).is_err());
    }

    #[test]
    fn dot_has_rows() {
        let dot = se(2, 0, &[(E::s(0), E::s(1))]).to_dot("cup");
        assert!(dot.contains("{ rank=same; s0; s1; }"));
        assert!(dot.contains("s0 -- s1 [constraint=false"));
    }
}
