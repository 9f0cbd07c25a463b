use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::Generator;

/// Strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    /// Trailing zeros are dropped; anything else must be strictly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Self {
        StrictPartition((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, mu: &StrictPartition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Componentwise sum, padding the shorter one with zeros.
    pub fn plus(&self, other: &StrictPartition) -> StrictPartition {
        let n = self.len().max(other.len());
        StrictPartition((1..=n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Boxes `(i, j)` of the shifted diagram, `i <= j <= i + λ_i - 1`.
    pub fn shifted_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, &p) in self.0.iter().enumerate() {
            let i = k + 1;
            for j in i..i + p as usize {
                out.push((i, j));
            }
        }
        out
    }

    /// Rows whose last box can be removed leaving a strict partition.
    pub fn removable_boxes(&self) -> Vec<(usize, usize)> {
        let r = self.len();
        (1..=r)
            .filter(|&i| i == r || self.part(i + 1) + 2 <= self.part(i))
            .map(|i| (i, i + self.part(i) as usize - 1))
            .collect()
    }

    pub fn remove_box(&self, row: usize) -> StrictPartition {
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        StrictPartition::new(parts).expect("removing a removable box")
    }

    /// Generator labelling a box in the type B/C shifted diagram.
    pub fn content_bc(b: (usize, usize)) -> Generator {
        let c = (b.1 - b.0) as u32;
        if c == 0 {
            Generator::S0
        } else {
            Generator::S(c)
        }
    }

    /// Generator labelling a box in the type D shifted diagram.
    pub fn content_d(b: (usize, usize)) -> Generator {
        if b.0 == b.1 {
            if b.0 % 2 == 1 {
                Generator::SHat
            } else {
                Generator::S(1)
            }
        } else {
            Generator::S((b.1 - b.0 + 1) as u32)
        }
    }

    /// All strict partitions of `n`, in decreasing lexicographic order.
    pub fn of_size(n: u32) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    pub fn up_to_size(n: u32) -> Vec<StrictPartition> {
        (0..=n).flat_map(Self::of_size).collect()
    }

    /// All strict partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<StrictPartition> {
        Self::up_to_size(self.size())
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        if body.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn to_latex(&self) -> String {
        let sep = if self.0.iter().any(|&p| p >= 10) {
            ","
        } else {
            ""
        };
        self.0
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }
}

fn fill(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
    if rem == 0 {
        out.push(StrictPartition(cur.clone()));
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        fill(rem - p, p - 1, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
