use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree - 1}`.
///
/// Products are read left to right: `p.then(&q)` applies `p` first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[p], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} repeated in cycle notation"
                    )));
                }
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(0 1 2 3)(4 5)`; `()` is the identity.
    /// The degree is one more than the largest point mentioned.
    pub fn parse(text: &str) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let degree = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len()..degree.max(self.images.len()));
        Permutation { images }
    }

    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Parses a juxtaposition of cycles. Whitespace is insignificant between cycles.
pub(crate) fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut chars = text.char_indices().peekable();
    let invalid = |msg: String| Error::InvalidPermutation(msg);
    loop {
        while chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
        let Some((pos, c)) = chars.next() else { break };
        if c != '(' {
            return Err(invalid(format!("expected `(` at offset {pos}, found `{c}`")));
        }
        let mut cycle = Vec::new();
        let mut number = String::new();
        loop {
            match chars.next() {
                Some((_, d)) if d.is_ascii_digit() => number.push(d),
                Some((_, d)) if d.is_whitespace() || d == ')' || d == ',' => {
                    if !number.is_empty() {
                        cycle.push(number.parse().map_err(|_| invalid(format!("bad point `{number}`")))?);
                        number.clear();
                    }
                    if d == ')' {
                        break;
                    }
                }
                Some((p, d)) => return Err(invalid(format!("unexpected `{d}` at offset {p}"))),
                None => return Err(invalid("unterminated cycle".into())),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}
