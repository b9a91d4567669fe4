//! Anti-lexicographically ordered set partitions of `{1, ..., n}`.
//!
//! Reading a partition right to left, each block is the one holding the
//! largest element not yet placed. Equivalently the blocks are sorted by
//! strictly ascending maxima, which is the canonical form stored here. The
//! last block therefore always contains `n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{input, Error, Result};
use crate::exact::binomial;

/// Largest `n` accepted by [`enumerate_partitions`].
pub const MAX_ENUMERATION: usize = 12;

/// An ordered set partition in canonical anti-lexicographic form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Block sizes `(i_1, ..., i_l)` of an ordered partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return input("empty composition");
        }
        if parts.contains(&0) {
            return input("composition parts must be positive");
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Partition {
    /// Canonicalizes arbitrary blocks of `{1..n}`: sorts inside blocks, then
    /// orders blocks by their maxima.
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return input("partitions of the empty set are not supported");
        }
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return input("empty block");
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e > n {
                    return input(format!("element {e} outside 1..={n}"));
                }
                if seen[e] {
                    return input(format!("element {e} appears twice"));
                }
                seen[e] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return input(format!("blocks do not cover 1..={n}"));
        }
        blocks.sort_by_key(|b| *b.last().unwrap());
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Length `l` of the partition.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn sizes(&self) -> Composition {
        Composition(self.blocks.iter().map(Vec::len).collect())
    }

    /// Block `r` as a bitmask with bit `e - 1` set for each element `e`.
    pub fn block_masks(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .map(|b| b.iter().fold(0u32, |m, &e| m | 1 << (e - 1)))
            .collect()
    }

    pub fn is_canonical(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0].last() < w[1].last())
            && self.blocks.iter().all(|b| b.windows(2).all(|w| w[0] < w[1]))
    }

    /// The `l + 1` partitions of `{1..n+1}` obtained by shifting every element
    /// up by one and adjoining `1`: as a new front block (index 0) or into
    /// block `m` (index `m`).
    pub fn derived(&self) -> Vec<Partition> {
        let shifted: Vec<Vec<usize>> =
            self.blocks.iter().map(|b| b.iter().map(|e| e + 1).collect()).collect();
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut front = Vec::with_capacity(self.len() + 1);
        front.push(vec![1]);
        front.extend(shifted.iter().cloned());
        out.push(Partition { n: self.n + 1, blocks: front });
        for m in 0..shifted.len() {
            let mut blocks = shifted.clone();
            blocks[m].insert(0, 1);
            out.push(Partition { n: self.n + 1, blocks });
        }
        out
    }

    /// Inverse of [`Partition::derived`]: drop `1`, shift the rest down.
    pub fn parent(&self) -> Result<Partition> {
        if self.n < 2 {
            return input("parent partition needs n >= 2");
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().filter(|&&e| e != 1).map(|e| e - 1).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        Partition::from_blocks(self.n - 1, blocks)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { "," } else { "" };
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"2|13"` (single digits) or `"2|1,13"` (comma separated).
    /// Without commas, a digit reading that fails falls back to one number
    /// per block, so `"1|2|...|10"` also parses.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |split: &dyn Fn(&str) -> Option<Vec<usize>>| -> Result<Self> {
            let mut blocks = Vec::new();
            for part in s.trim().split('|') {
                match split(part.trim()) {
                    Some(b) if !b.is_empty() => blocks.push(b),
                    _ => return input(format!("malformed partition {s:?}")),
                }
            }
            let n = blocks.iter().map(Vec::len).sum();
            Partition::from_blocks(n, blocks)
        };
        let by_comma = |part: &str| part.split(',').map(|t| t.trim().parse().ok()).collect();
        if s.contains(',') {
            return parse(&by_comma);
        }
        parse(&|part: &str| {
            part.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        })
        .or_else(|e| parse(&by_comma).map_err(|_| e))
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION {
        return input(format!("n = {n} outside 1..={MAX_ENUMERATION}"));
    }
    Ok(())
}

/// All of `P_n`, sorted by serialized form.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    check_bound(n)?;
    // restricted growth strings: label[e] is the block index of element e+1
    let mut out = Vec::new();
    let mut label = vec![0usize; n];
    loop {
        let count = label.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); count];
        for (e, &l) in label.iter().enumerate() {
            blocks[l].push(e + 1);
        }
        blocks.sort_by_key(|b: &Vec<usize>| *b.last().unwrap());
        out.push(Partition { n, blocks });

        // next restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                sort_by_string(&mut out);
                return Ok(out);
            }
            i -= 1;
            let prefix_max = label[..i].iter().copied().max().unwrap();
            if label[i] <= prefix_max {
                label[i] += 1;
                for l in &mut label[i + 1..] {
                    *l = 0;
                }
                break;
            }
        }
    }
}

fn sort_by_string(parts: &mut [Partition]) {
    parts.sort_by_cached_key(Partition::to_string);
}

/// All `lambda` in `P_n` whose block sizes equal `sizes`.
pub fn partitions_with_sizes(n: usize, sizes: &Composition) -> Result<Vec<Partition>> {
    if sizes.is_empty() || sizes.parts().contains(&0) {
        return input("composition parts must be positive");
    }
    if sizes.total() != n {
        return input(format!("composition {sizes} does not sum to {n}"));
    }
    check_bound(n)?;
    // fill blocks right to left: block r takes the largest free element plus
    // any (i_r - 1) of the remaining free ones
    fn fill(
        free: &[usize],
        sizes: &[usize],
        acc: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut Vec<Partition>,
    ) {
        let Some((&size, rest)) = sizes.split_last() else {
            let mut blocks = acc.clone();
            blocks.reverse();
            out.push(Partition { n, blocks });
            return;
        };
        let (&top, others) = free.split_last().unwrap();
        for chosen in choose(others, size - 1) {
            let mut block: Vec<usize> = chosen.clone();
            block.push(top);
            let remaining: Vec<usize> =
                others.iter().copied().filter(|e| !chosen.contains(e)).collect();
            acc.push(block);
            fill(&remaining, rest, acc, n, out);
            acc.pop();
        }
    }
    let free: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    fill(&free, sizes.parts(), &mut Vec::new(), n, &mut out);
    sort_by_string(&mut out);
    Ok(out)
}

fn choose(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let (first, rest) = items.split_first().unwrap();
    let mut with: Vec<Vec<usize>> = choose(rest, k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, *first);
            c
        })
        .collect();
    with.extend(choose(rest, k));
    with
}

/// `N_(i_1..i_l) = prod_r C(i_1 + ... + i_r - 1, i_r - 1)`.
pub fn count_with_sizes(sizes: &Composition) -> BigInt {
    let mut acc = BigInt::one();
    let mut prefix = 0u64;
    for &i in sizes.parts() {
        prefix += i as u64;
        acc *= binomial(prefix - 1, i as i64 - 1);
    }
    acc
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(acc.clone()));
            return;
        }
        for first in 1..=rest {
            acc.push(first);
            go(rest - first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

/// The derived partitions `lambda^[0], ..., lambda^[l]`.
pub fn derived_partitions(lambda: &Partition) -> Vec<Partition> {
    lambda.derived()
}

pub fn parent_partition(rho: &Partition) -> Result<Partition> {
    rho.parent()
}
