use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::join;

/// Non-increasing block sizes of a vertex partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentSizeSequence(Vec<usize>);

impl ComponentSizeSequence {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::input("block sizes must be a non-empty list of positive integers"));
        }
        if sizes.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input(format!("block sizes {} are not non-increasing", join(&sizes))));
        }
        Ok(ComponentSizeSequence(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
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

    /// Two largest blocks together hold at most `q` vertices, and there are at least two blocks.
    pub fn fits(&self, q: usize) -> bool {
        self.0.len() >= 2 && self.0[0] + self.0[1] <= q
    }
}

impl fmt::Display for ComponentSizeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

/// Every block-size sequence an extremal partition can be assumed to have:
///
/// * `(h1, h2 x t, h3)` with `t >= 1`, `h1 >= h2 >= h3 >= 1`, `h3 = h2` when `t = 1`;
/// * `(h1, h2 x t1, 1 x t2)` with `t1, t2 >= 2` and `h2 >= 2`;
///
/// where `h1 + h2 = q` and `1 <= h2 <= min(q/2, n-q)`. Ordered by descending
/// `h2`, the first shape before the second.
pub fn candidate_sequences(n: usize, q: usize) -> Result<Vec<ComponentSizeSequence>> {
    if q < 2 || q + 1 > n {
        return Err(Error::domain(format!("q = {q} is outside 2..={}", n.saturating_sub(1))));
    }
    let rest = n - q;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |seq: Vec<usize>| {
        if seen.insert(seq.clone()) {
            out.push(ComponentSizeSequence(seq));
        }
    };
    for h2 in (1..=(q / 2).min(rest)).rev() {
        let h1 = q - h2;
        // (t-1) h2 + h3 = rest with 1 <= h3 <= h2 pins t down
        let extra = (rest - 1) / h2;
        let h3 = rest - extra * h2;
        let t = extra + 1;
        if t > 1 || h3 == h2 {
            let mut seq = vec![h1];
            seq.extend(std::iter::repeat_n(h2, t));
            seq.push(h3);
            push(seq);
        }
        if h2 >= 2 {
            let mut t1 = 2;
            let mut shapes = Vec::new();
            while (t1 - 1) * h2 + 2 <= rest {
                let t2 = rest - (t1 - 1) * h2;
                let mut seq = vec![h1];
                seq.extend(std::iter::repeat_n(h2, t1));
                seq.extend(std::iter::repeat_n(1, t2));
                shapes.push(seq);
                t1 += 1;
            }
            // more copies of h2 first
            for seq in shapes.into_iter().rev() {
                push(seq);
            }
        }
    }
    Ok(out)
}
