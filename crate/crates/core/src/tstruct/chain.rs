use crate::error::{Error, Result};

/// A `Z`-indexed step function in canonical form: `tail_low` below the first
/// jump, and at each jump `(n, v)` the value `v` until the next jump.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepChain<T> {
    tail_low: T,
    jumps: Vec<(i64, T)>,
}

impl<T: Clone + Eq> StepChain<T> {
    /// Entries give the value from their index up to the next entry;
    /// `tail_high` holds strictly above the last entry.
    pub fn new(tail_low: T, entries: Vec<(i64, T)>, tail_high: T) -> Result<Self> {
        if let Some(w) = entries.windows(2).find(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidFiltration(format!("indices {} and {} are not increasing", w[0].0, w[1].0)));
        }
        let mut jumps = entries;
        match jumps.last() {
            Some(&(n, _)) => jumps.push((n + 1, tail_high)),
            None if tail_high != tail_low => {
                return Err(Error::InvalidFiltration("different tails need at least one entry".into()));
            }
            None => {}
        }
        Ok(Self::canonical(tail_low, jumps))
    }

    pub fn constant(value: T) -> Self {
        StepChain { tail_low: value, jumps: Vec::new() }
    }

    fn canonical(tail_low: T, jumps: Vec<(i64, T)>) -> Self {
        let mut out: Vec<(i64, T)> = Vec::new();
        for (n, v) in jumps {
            let prev = out.last().map_or(&tail_low, |(_, p)| p);
            if *prev != v {
                out.push((n, v));
            }
        }
        StepChain { tail_low, jumps: out }
    }

    pub fn value(&self, n: i64) -> &T {
        match self.jumps.partition_point(|(m, _)| *m <= n) {
            0 => &self.tail_low,
            k => &self.jumps[k - 1].1,
        }
    }

    pub fn tail_low(&self) -> &T {
        &self.tail_low
    }

    pub fn tail_high(&self) -> &T {
        self.jumps.last().map_or(&self.tail_low, |(_, v)| v)
    }

    pub fn jumps(&self) -> &[(i64, T)] {
        &self.jumps
    }

    /// `tail_low` followed by the jump values, in increasing index order.
    pub fn values(&self) -> impl Iterator<Item = &T> {
        std::iter::once(&self.tail_low).chain(self.jumps.iter().map(|(_, v)| v))
    }

    pub fn map<U: Clone + Eq>(&self, f: impl Fn(&T) -> U) -> StepChain<U> {
        StepChain::canonical(f(&self.tail_low), self.jumps.iter().map(|(n, v)| (*n, f(v))).collect())
    }

    /// Pointwise combination.
    pub fn zip_with<U: Clone + Eq>(&self, other: &Self, mut f: impl FnMut(&T, &T) -> Result<U>) -> Result<StepChain<U>> {
        let mut ns: Vec<i64> = self.jumps.iter().chain(&other.jumps).map(|(n, _)| *n).collect();
        ns.sort_unstable();
        ns.dedup();
        let tail = f(&self.tail_low, &other.tail_low)?;
        let jumps = ns
            .into_iter()
            .map(|n| Ok((n, f(self.value(n), other.value(n))?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(StepChain::canonical(tail, jumps))
    }
}
