use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// The set `H(φ)` of ranks of maximal isotropic submodules.
///
/// Non-empty, and either `0 ∉ H` or `H = {0}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RankSet(Vec<u64>);

impl RankSet {
    pub fn new(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = values.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidRankSet("empty".into()));
        }
        if set.contains(&0) && set.len() > 1 {
            return Err(Error::InvalidRankSet(format!("{set:?} contains 0 and a positive rank")));
        }
        Ok(RankSet(set.into_iter().collect()))
    }

    pub fn singleton(v: u64) -> Self {
        RankSet(vec![v])
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn max(&self) -> u64 {
        *self.0.last().expect("non-empty")
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn contains(&self, v: u64) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Debug for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Sumset `{a + b}`: the rank set of a component-wise direct sum.
pub fn rank_set_sum_law(s1: &RankSet, s2: &RankSet) -> RankSet {
    let sums = s1.values().iter().flat_map(|a| s2.values().iter().map(move |b| a + b));
    RankSet::new(sums).expect("sumset of admissible rank sets is admissible")
}

/// Rank set of the Künneth-type product map: `{1} ∪ s1 ∪ s2`, except that a
/// factor with isotropy index 0 contributes nothing and suppresses the `{1}`.
///
/// `h1`, `h2` are the isotropy indices, i.e. `max s1`, `max s2`.
pub fn rank_set_product_law(s1: &RankSet, s2: &RankSet, h1: u64, h2: u64) -> RankSet {
    debug_assert_eq!(h1, s1.max());
    debug_assert_eq!(h2, s2.max());
    if h1 == 0 {
        return s2.clone();
    }
    if h2 == 0 {
        return s1.clone();
    }
    let all = std::iter::once(1).chain(s1.values().iter().copied()).chain(s2.values().iter().copied());
    RankSet::new(all).expect("positive ranks")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(v: &[u64]) -> RankSet {
        RankSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn invariant_enforced() {
        assert!(RankSet::new([]).is_err());
        assert!(RankSet::new([0, 2]).is_err());
        assert_eq!(rs(&[3, 1, 3]).values(), &[1, 3]);
        assert_eq!(rs(&[0]).max(), 0);
    }

    #[test]
    fn sum_law_examples() {
        assert_eq!(rank_set_sum_law(&rs(&[1, 2]), &rs(&[1, 2])), rs(&[2, 3, 4]));
        assert_eq!(rank_set_sum_law(&rs(&[2]), &rs(&[3])), rs(&[5]));
        assert_eq!(rank_set_sum_law(&rs(&[1, 2, 3]), &rs(&[1, 2, 3])), rs(&[2, 3, 4, 5, 6]));
        assert_eq!(rank_set_sum_law(&rs(&[0]), &rs(&[0])), rs(&[0]));
    }

    #[test]
    fn product_law_examples() {
        assert_eq!(rank_set_product_law(&rs(&[2]), &rs(&[3]), 2, 3), rs(&[1, 2, 3]));
        assert_eq!(rank_set_product_law(&rs(&[0]), &rs(&[1]), 0, 1), rs(&[1]));
        assert_eq!(rank_set_product_law(&rs(&[1]), &rs(&[1]), 1, 1), rs(&[1]));
        assert_eq!(rank_set_product_law(&rs(&[0]), &rs(&[0]), 0, 0), rs(&[0]));
    }

    #[test]
    fn display() {
        assert_eq!(rs(&[2, 3, 4]).to_string(), "{2,3,4}");
    }
}
