use std::collections::HashMap;
use std::sync::Arc;

/// A tensor basis label `v_{k_1} ⊗ … ⊗ v_{k_n}`.
pub type Composition = Vec<u32>;

/// All compositions of `m` into `n` nonnegative parts, in lexicographic order.
pub fn compositions(n: usize, m: u32) -> Vec<Composition> {
    fn rec(n: usize, m: u32, prefix: &mut Composition, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(m);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=m {
            prefix.push(k);
            rec(n - 1, m - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, m, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// An ordered set of basis labels with reverse lookup.
#[derive(Debug, PartialEq, Eq)]
pub struct Basis {
    labels: Vec<Composition>,
    index: HashMap<Composition, usize>,
}

impl Basis {
    pub fn new(labels: Vec<Composition>) -> Arc<Self> {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Arc::new(Self { labels, index })
    }

    pub fn compositions(n: usize, m: u32) -> Arc<Self> {
        Self::new(compositions(n, m))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &Composition {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[Composition] {
        &self.labels
    }

    pub fn position(&self, label: &[u32]) -> Option<usize> {
        self.index.get(label).copied()
    }
}
