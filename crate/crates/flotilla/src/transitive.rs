//! Exact maximum transitive subtournament via subset dynamic programming,
//! plus epsilon-criticality checking with exact power comparisons.
//!
//! The table stores tr for every vertex subset because criticality needs all
//! of them anyway; one table serves both queries. Subsets are visited in
//! increasing popcount so every recurrence lookup is already computed.

use crate::tournament::{Ordering, Tournament};
use crate::{Error, Result};
use num_bigint::BigUint;

/// tr over every subset of a tournament with n <= cap vertices.
pub struct TrTable {
    n: usize,
    values: Vec<u8>,
}

impl TrTable {
    /// Largest transitive subtournament size within the subset `mask`.
    #[inline]
    pub fn value(&self, mask: u64) -> usize {
        self.values[mask as usize] as usize
    }

    /// tr of the whole tournament.
    pub fn tr(&self) -> usize {
        self.value(if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Builds the full subset table. Fails with a resource error when n exceeds
/// `cap` (the table takes 2^n bytes).
pub fn tr_table(t: &Tournament, cap: usize) -> Result<TrTable> {
    let n = t.n();
    if n > cap {
        return Err(Error::Resource(format!(
            "tr table needs 2^{n} entries, cap is n <= {cap}"
        )));
    }
    let size = 1usize << n;
    let mut values = vec![0u8; size];
    let out: Vec<u64> = (0..n).map(|v| t.out_mask(v)).collect();
    // Masks of equal popcount are mutually independent; increasing popcount
    // order makes every sub-lookup available.
    let mut by_count: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 1..size as u64 {
        by_count[mask.count_ones() as usize].push(mask);
    }
    for layer in &by_count {
        for &mask in layer {
            let mut best = 0u8;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let candidate = 1 + values[(mask & out[v]) as usize];
                if candidate > best {
                    best = candidate;
                }
            }
            values[mask as usize] = best;
        }
    }
    Ok(TrTable { n, values })
}

/// tr together with a witness: vertices in transitive order (every arc goes
/// left to right along the returned sequence).
///
/// At each level the lowest-index source achieving the optimum is taken, so
/// the witness is deterministic.
pub fn tr_with_witness(t: &Tournament, cap: usize) -> Result<(usize, Vec<usize>)> {
    let table = tr_table(t, cap)?;
    Ok(witness_from_table(t, &table))
}

/// Extracts the deterministic witness for the full vertex set.
pub fn witness_from_table(t: &Tournament, table: &TrTable) -> (usize, Vec<usize>) {
    let n = t.n();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut witness = Vec::with_capacity(table.value(full));
    let mut mask = full;
    while mask != 0 && table.value(mask) > 0 {
        let target = table.value(mask);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = mask & t.out_mask(v);
            if 1 + table.value(next) == target {
                witness.push(v);
                mask = next;
                break;
            }
        }
    }
    (witness.len(), witness)
}

/// True iff `order` lists distinct vertices with every arc oriented forward.
pub fn is_transitive_under(t: &Tournament, order: &[usize]) -> bool {
    for (i, &u) in order.iter().enumerate() {
        for &v in &order[i + 1..] {
            if u == v || !t.has_arc(u, v) {
                return false;
            }
        }
    }
    true
}

/// Why a tournament failed (or vacuously passed) the criticality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriticalVerdict {
    Critical,
    /// tr(T) >= n^eps, so T itself is not small enough.
    NotSmall,
    /// Some proper subset violates tr(S) >= |S|^eps; the lowest such bitmask.
    ProperViolation { mask: u64, size: usize, tr: usize },
}

/// Compares tr^q against size^p in big integers: returns Ordering of
/// tr vs size^(p/q) without floating point.
fn cmp_pow(tr: usize, size: usize, p: u32, q: u32) -> std::cmp::Ordering {
    BigUint::from(tr).pow(q).cmp(&BigUint::from(size).pow(p))
}

/// Exact epsilon-criticality for eps = p/q in (0, 1): tr(T) < n^eps while
/// every proper nonempty subset S keeps tr(S) >= |S|^eps.
pub fn is_epsilon_critical(t: &Tournament, p: u32, q: u32, cap: usize) -> Result<CriticalVerdict> {
    if p == 0 || p >= q {
        return Err(Error::Domain(format!(
            "eps must satisfy 0 < p/q < 1, got {p}/{q}"
        )));
    }
    let n = t.n();
    if n == 0 {
        return Err(Error::Domain("criticality of the empty tournament".into()));
    }
    let table = tr_table(t, cap)?;
    let full = (1u64 << n) - 1;
    if cmp_pow(table.tr(), n, p, q) != std::cmp::Ordering::Less {
        return Ok(CriticalVerdict::NotSmall);
    }
    // One comparison per (size, tr) pair; subsets share the verdicts.
    let mut ok = vec![[None::<bool>; 26]; n + 1];
    for mask in 1..full {
        let size = mask.count_ones() as usize;
        let tr = table.value(mask);
        let verdict = *ok[size][tr].get_or_insert_with(|| {
            cmp_pow(tr, size, p, q) != std::cmp::Ordering::Less
        });
        if !verdict {
            return Ok(CriticalVerdict::ProperViolation { mask, size, tr });
        }
    }
    Ok(CriticalVerdict::Critical)
}

/// Reference implementations kept deliberately naive; the test suite checks
/// the fast paths against these.
pub mod oracle {
    use crate::tournament::Tournament;

    /// A subtournament is transitive iff its out-degrees are pairwise
    /// distinct; this avoids the DP recurrence entirely.
    pub fn is_transitive_set(t: &Tournament, vs: &[usize]) -> bool {
        let k = vs.len();
        let mut seen = vec![false; k];
        for &u in vs {
            let d = vs.iter().filter(|&&v| v != u && t.has_arc(u, v)).count();
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    /// tr by enumerating every subset of `within`.
    pub fn naive_tr_of_subset(t: &Tournament, within: u64) -> usize {
        let vs: Vec<usize> = (0..t.n()).filter(|&v| within >> v & 1 == 1).collect();
        let mut best = 0;
        for pick in 0..(1u64 << vs.len()) {
            let sub: Vec<usize> = vs
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if sub.len() > best && is_transitive_set(t, &sub) {
                best = sub.len();
            }
        }
        best
    }

    pub fn naive_tr(t: &Tournament) -> usize {
        let full = if t.n() == 0 { 0 } else { (1u64 << t.n()) - 1 };
        naive_tr_of_subset(t, full)
    }
}
