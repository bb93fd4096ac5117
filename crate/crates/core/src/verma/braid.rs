use std::fmt;

use crate::error::{Error, Result};

/// A word in the Artin generators of `B_n`. Letter `±i` is `σ_i^{±1}`,
/// `1 ≤ i < n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parameter("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::BadGenerator { index: l, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parse `"1 -2 1"`. Without an explicit strand count the smallest
    /// admissible one is used.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let needed = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(strands.unwrap_or(needed), letters)
    }

    /// Named example knots. `trefoil` is `σ₁³`; the mirror is `σ₁⁻³`.
    pub fn preset(name: &str) -> Option<Self> {
        let (n, w): (usize, &[i32]) = match name {
            "unknot" => (1, &[]),
            "trefoil" => (2, &[1, 1, 1]),
            "mirror-trefoil" => (2, &[-1, -1, -1]),
            "figure8" => (3, &[1, -2, 1, -2]),
            _ => return None,
        };
        Some(Self { strands: n, letters: w.to_vec() })
    }

    /// A preset name or a word; `strands` only applies to words.
    pub fn from_spec(text: &str, strands: Option<usize>) -> Result<Self> {
        match Self::preset(text.trim()) {
            Some(b) => Ok(b),
            None => Self::parse(text, strands),
        }
    }

    pub fn identity(strands: usize) -> Self {
        Self { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i32 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// Where the strand entering at each position ends up, reading letters
    /// in word order.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        pos
    }

    /// Cycles of the induced permutation, 1-based, each starting at its
    /// smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut out = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p + 1);
                p = perm[p];
            }
            out.push(cyc);
        }
        out
    }

    pub fn is_knot(&self) -> bool {
        self.cycles().len() == 1
    }

    pub fn check_knot(&self) -> Result<()> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(Error::NotAKnot { cycles: self.cycles() })
        }
    }

    /// Every crossing switched: `σ_i^{±1} ↦ σ_i^{∓1}`.
    pub fn mirror(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `self · other`; strand counts are unified upward.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { strands: self.strands.max(other.strands), letters }
    }

    /// `γ β γ⁻¹`
    pub fn conjugate_by(&self, gamma: &Self) -> Self {
        gamma.concat(self).concat(&gamma.inverse())
    }

    /// Markov stabilization: `β σ_n^{±1}` in `B_{n+1}`.
    pub fn stabilize(&self, sign: i32) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if sign >= 0 { n } else { -n });
        Self { strands: self.strands + 1, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
