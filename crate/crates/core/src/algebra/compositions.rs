use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Ordered partition of a positive integer: a nonempty sequence of parts,
/// each at least 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return domain("composition needs at least one part");
        }
        if parts.contains(&0) {
            return domain(format!("composition parts must be >= 1, got {parts:?}"));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `m`, lexicographic by parts; there are `2^(m-1)`.
pub fn enumerate_compositions(m: i64) -> Result<Vec<Composition>> {
    if m < 1 {
        return domain(format!("compositions need m >= 1, got {m}"));
    }
    let mut out = Vec::with_capacity(1 << (m - 1).min(30));
    let mut prefix = Vec::new();
    fill(m as u32, &mut prefix, &mut out);
    Ok(out)
}

fn fill(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition(prefix.clone()));
        return;
    }
    for first in 1..=remaining {
        prefix.push(first);
        fill(remaining - first, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Brute force: compositions of m correspond to subsets of the m-1 cut points.
    fn by_cut_points(m: u32) -> BTreeSet<Vec<u32>> {
        (0u32..1 << (m - 1))
            .map(|mask| {
                let mut parts = Vec::new();
                let mut run = 1;
                for bit in 0..m - 1 {
                    if mask >> bit & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                parts
            })
            .collect()
    }

    #[test]
    fn single_composition_of_one() {
        let cs = enumerate_compositions(1).unwrap();
        assert_eq!(cs, vec![Composition(vec![1])]);
    }

    #[test]
    fn compositions_of_three_in_order() {
        let cs: Vec<Vec<u32>> = enumerate_compositions(3).unwrap().into_iter().map(|c| c.0).collect();
        assert_eq!(cs, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
    }

    #[test]
    fn counts_match_cut_point_oracle() {
        for m in 1..=10u32 {
            let cs = enumerate_compositions(m as i64).unwrap();
            assert_eq!(cs.len(), 1 << (m - 1));
            let set: BTreeSet<Vec<u32>> = cs.iter().map(|c| c.0.clone()).collect();
            assert_eq!(set, by_cut_points(m));
            assert!(cs.windows(2).all(|w| w[0] < w[1]), "not lexicographic at m={m}");
        }
        assert_eq!(enumerate_compositions(5).unwrap().len(), 16);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(enumerate_compositions(0).is_err());
        assert!(enumerate_compositions(-3).is_err());
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![2, 0]).is_err());
    }
}
