//! Structure constants of the Schur Q basis.
//!
//! A product `Q_λ Q_μ` is computed by writing `Q_μ` as a polynomial in the
//! one-row functions `Q_k` (Pfaffian of two-row functions) and then applying
//! the Pieri rule one factor at a time.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::pfaffian::{pfaffian, PfRing};
use crate::partition::StrictPartition;

pub type Expansion = Vec<(StrictPartition, BigInt)>;

type Memo<K, V> = LazyLock<RwLock<HashMap<K, Arc<V>>>>;

static PIERI: Memo<(StrictPartition, u32), Expansion> = LazyLock::new(Default::default);
static GENERATORS: Memo<StrictPartition, GenPoly> = LazyLock::new(Default::default);
static PRODUCTS: Memo<(StrictPartition, StrictPartition), Expansion> =
    LazyLock::new(Default::default);

fn memoized<K, V>(memo: &Memo<K, V>, key: K, compute: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq + Clone,
{
    if let Some(v) = memo.read().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute());
    memo.write()
        .expect("memo poisoned")
        .entry(key)
        .or_insert(v)
        .clone()
}

/// `Q_ν · Q_k` in the Q basis.
pub fn pieri(nu: &StrictPartition, k: u32) -> Arc<Expansion> {
    memoized(&PIERI, (nu.clone(), k), || {
        if k == 0 {
            return vec![(nu.clone(), BigInt::one())];
        }
        let mut out = Vec::new();
        let mut mu = Vec::with_capacity(nu.len() + 1);
        strips(nu, 1, k, &mut mu, &mut out);
        out
    })
}

// Rows of μ with ν_i <= μ_i <= ν_{i-1}, μ strict, adding exactly `rem` boxes.
fn strips(nu: &StrictPartition, row: usize, rem: u32, mu: &mut Vec<u32>, out: &mut Expansion) {
    let last_row = nu.len() + 1;
    if row > last_row || rem == 0 {
        if rem == 0 {
            let mut parts = mu.clone();
            parts.extend((row..=nu.len()).map(|i| nu.part(i)));
            let m = StrictPartition::new(parts).expect("strict by construction");
            let e = strip_components(nu, &m) as i64 + nu.len() as i64 - m.len() as i64;
            debug_assert!(e >= 0);
            out.push((m, BigInt::one() << e as usize));
        }
        return;
    }
    let lo = nu.part(row);
    let hi = if row == 1 {
        lo + rem
    } else {
        nu.part(row - 1).min(lo + rem)
    };
    for v in lo..=hi {
        if row > 1 && v >= mu[row - 2] {
            break;
        }
        if v == 0 {
            continue;
        }
        mu.push(v);
        strips(nu, row + 1, rem - (v - lo), mu, out);
        mu.pop();
    }
}

/// Number of maximal runs of consecutive columns occupied by `μ/ν`.
fn strip_components(nu: &StrictPartition, mu: &StrictPartition) -> u32 {
    let rows = mu.len();
    let mut count = 0;
    for i in 1..=rows {
        if mu.part(i) == nu.part(i) {
            continue;
        }
        count += 1;
        // row i's columns continue row i+1's when they touch
        if i < rows && mu.part(i + 1) > nu.part(i + 1) && mu.part(i + 1) == nu.part(i) {
            count -= 1;
        }
    }
    count
}

/// Polynomials in the generators `Q_1, Q_2, ...`: sorted index multiset -> coefficient.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GenPoly(pub BTreeMap<Vec<u32>, BigInt>);

impl GenPoly {
    fn generator(k: u32) -> GenPoly {
        let key = if k == 0 { vec![] } else { vec![k] };
        GenPoly(BTreeMap::from([(key, BigInt::one())]))
    }

    fn scale(&self, c: i64) -> GenPoly {
        GenPoly(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    /// Two-row function `Q_{i,j} = Q_i Q_j + 2 Σ_{k=1}^{j} (-1)^k Q_{i+k} Q_{j-k}`.
    fn two_row(i: u32, j: u32) -> GenPoly {
        let mut acc = Self::generator(i).ring_mul(&Self::generator(j));
        for k in 1..=j {
            let sign = if k % 2 == 0 { 2 } else { -2 };
            let term = Self::generator(i + k)
                .ring_mul(&Self::generator(j - k))
                .scale(sign);
            acc = acc.ring_add(&term);
        }
        acc
    }
}

impl PfRing for GenPoly {
    fn zero_like(&self) -> Self {
        GenPoly::default()
    }
    fn one_like(&self) -> Self {
        GenPoly::generator(0)
    }
    fn ring_add(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, v) in &other.0 {
            let e = out.entry(k.clone()).or_default();
            *e += v;
            if e.is_zero() {
                out.remove(k);
            }
        }
        GenPoly(out)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let mut k = a.clone();
                k.extend_from_slice(b);
                k.sort_unstable();
                *out.entry(k).or_default() += x * y;
            }
        }
        out.retain(|_, v| !v.is_zero());
        GenPoly(out)
    }
    fn ring_neg(&self) -> Self {
        GenPoly(self.0.iter().map(|(k, v)| (k.clone(), -v)).collect())
    }
    fn ring_is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Schur Q function `Q_μ` as a polynomial in the one-row functions.
pub fn generator_expansion(mu: &StrictPartition) -> Arc<GenPoly> {
    memoized(&GENERATORS, mu.clone(), || {
        let mut parts = mu.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        let r = parts.len();
        let mut m = vec![vec![GenPoly::default(); r]; r];
        for i in 0..r {
            for j in i + 1..r {
                m[i][j] = GenPoly::two_row(parts[i], parts[j]);
            }
        }
        pfaffian(&m, &GenPoly::generator(0))
    })
}

fn apply_generators(start: &StrictPartition, gens: &[u32]) -> BTreeMap<StrictPartition, BigInt> {
    let mut cur = BTreeMap::from([(start.clone(), BigInt::one())]);
    for &k in gens {
        let mut next: BTreeMap<StrictPartition, BigInt> = BTreeMap::new();
        for (nu, c) in &cur {
            for (mu, d) in pieri(nu, k).iter() {
                *next.entry(mu.clone()).or_default() += c * d;
            }
        }
        cur = next;
    }
    cur
}

/// `Q_λ · Q_μ` in the Q basis.
pub fn q_product(lambda: &StrictPartition, mu: &StrictPartition) -> Arc<Expansion> {
    // expand the factor with fewer rows
    let (a, b) = if (mu.len(), mu) <= (lambda.len(), lambda) {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    memoized(&PRODUCTS, (a.clone(), b.clone()), || {
        let mut acc: BTreeMap<StrictPartition, BigInt> = BTreeMap::new();
        for (gens, c) in &generator_expansion(b).0 {
            for (nu, d) in apply_generators(a, gens) {
                *acc.entry(nu).or_default() += c * d;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    })
}
