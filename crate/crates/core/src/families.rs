//! Standard families realized as permutation groups.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{group_from_generators, FiniteGroup};
use crate::perm::Permutation;

/// A named family member. Every parameter is the group order except for
/// `Symmetric`/`Alternating` (degree) and `ElementaryAbelian` (`p^k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(usize),
    /// Dihedral group of order `n` (so `Dihedral(8)` is the symmetry group of a square).
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Dicyclic group of order `n`; `Quaternion(8)` is Q8.
    Quaternion(usize),
    ElementaryAbelian { p: usize, k: usize },
}

impl Family {
    pub fn letter(&self) -> char {
        match self {
            Family::Cyclic(_) => 'C',
            Family::Dihedral(_) => 'D',
            Family::Symmetric(_) => 'S',
            Family::Alternating(_) => 'A',
            Family::Quaternion(_) => 'Q',
            Family::ElementaryAbelian { .. } => 'E',
        }
    }

    /// Parses `"C 6"`, `"d8"`, `"E 2^3"` and similar.
    pub fn parse(text: &str) -> Result<Family> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = compact.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::UnknownFamily { name: String::new(), pos: 0 })?
            .to_ascii_uppercase();
        let rest = chars.as_str();
        let number = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| Error::InvalidFamily(format!("`{text}`: expected a number, found `{s}`")))
        };
        Ok(match letter {
            'C' => Family::Cyclic(number(rest)?),
            'D' => Family::Dihedral(number(rest)?),
            'S' => Family::Symmetric(number(rest)?),
            'A' => Family::Alternating(number(rest)?),
            'Q' => Family::Quaternion(number(rest)?),
            'E' => {
                let (p, k) = rest
                    .split_once('^')
                    .ok_or_else(|| Error::InvalidFamily(format!("`{text}`: expected E p^k")))?;
                Family::ElementaryAbelian {
                    p: number(p)?,
                    k: number(k)?,
                }
            }
            _ => return Err(Error::UnknownFamily { name: text.trim().to_string(), pos: 0 }),
        })
    }

    /// Generating permutations of the standard realization.
    pub fn generators(&self) -> Result<Vec<Permutation>> {
        let cycle = |len: usize, offset: usize| -> Vec<usize> { (offset..offset + len).collect() };
        let perms = |degree: usize, list: Vec<Vec<Vec<usize>>>| -> Result<Vec<Permutation>> {
            list.iter().map(|c| Permutation::from_cycles(degree, c)).collect()
        };
        match *self {
            Family::Cyclic(0) | Family::Symmetric(0) | Family::Alternating(0) => {
                Err(Error::InvalidFamily(format!("{self}: parameter must be positive")))
            }
            Family::Cyclic(1) => Ok(Vec::new()),
            Family::Cyclic(n) => perms(n, vec![vec![cycle(n, 0)]]),
            Family::Dihedral(n) if n == 0 || n % 2 == 1 => {
                Err(Error::InvalidFamily(format!("{self}: dihedral order must be even")))
            }
            Family::Dihedral(2) => perms(2, vec![vec![vec![0, 1]]]),
            Family::Dihedral(4) => perms(4, vec![vec![vec![0, 1]], vec![vec![2, 3]]]),
            Family::Dihedral(n) => {
                let m = n / 2;
                let reflection: Vec<Vec<usize>> = (1..m).filter(|&i| i < m - i).map(|i| vec![i, m - i]).collect();
                perms(m, vec![reflection, vec![cycle(m, 0)]])
            }
            Family::Symmetric(1) | Family::Alternating(1) | Family::Alternating(2) => Ok(Vec::new()),
            Family::Symmetric(2) => perms(2, vec![vec![vec![0, 1]]]),
            Family::Symmetric(n) => perms(n, vec![vec![vec![0, 1]], vec![cycle(n, 0)]]),
            Family::Alternating(n) => perms(n, (2..n).map(|k| vec![vec![0, 1, k]]).collect()),
            Family::Quaternion(n) if n < 8 || n % 4 != 0 => Err(Error::InvalidFamily(format!(
                "{self}: dicyclic order must be a multiple of 4 and at least 8"
            ))),
            Family::Quaternion(n) => Ok(dicyclic_generators(n / 4)),
            Family::ElementaryAbelian { p, k } => {
                if p < 2 || (2..p).any(|d| p % d == 0) {
                    return Err(Error::InvalidFamily(format!("{self}: {p} is not prime")));
                }
                perms(p * k, (0..k).map(|i| vec![cycle(p, i * p)]).collect())
            }
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        Ok(group_from_generators(&self.generators()?, cap)?.with_label(self.to_string()))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Cyclic(n)
            | Family::Dihedral(n)
            | Family::Symmetric(n)
            | Family::Alternating(n)
            | Family::Quaternion(n) => write!(f, "{}{n}", self.letter()),
            Family::ElementaryAbelian { p, k } => write!(f, "E{p}^{k}"),
        }
    }
}

/// Right regular representation of `<a, x | a^(2m), x^2 = a^m, x a x^-1 = a^-1>`.
fn dicyclic_generators(m: usize) -> Vec<Permutation> {
    let n2 = 2 * m;
    let index = |k: usize, e: usize| e * n2 + k;
    let mul = |(k, e): (usize, usize), (l, f): (usize, usize)| -> (usize, usize) {
        let turned = if e == 0 { l } else { n2 - l };
        let k = (k + turned) % n2;
        match (e, f) {
            (1, 1) => ((k + m) % n2, 0),
            _ => (k, e + f),
        }
    };
    [(1, 0), (0, 1)]
        .into_iter()
        .map(|g| {
            let images = (0..2 * n2)
                .map(|h| {
                    let (k, e) = mul((h % n2, h / n2), g);
                    index(k, e)
                })
                .collect();
            Permutation::from_images(images).expect("regular representation is a bijection")
        })
        .collect()
}

/// `builtin("C 6")`: parses a family name and builds it.
pub fn builtin(name: &str, cap: usize) -> Result<FiniteGroup> {
    Family::parse(name)?.build(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    fn order(name: &str) -> usize {
        builtin(name, DEFAULT_ORDER_CAP).unwrap().order()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order("C 6"), 6);
        assert_eq!(order("C1"), 1);
        assert_eq!(order("S 3"), 6);
        assert_eq!(order("S4"), 24);
        assert_eq!(order("A4"), 12);
        assert_eq!(order("A5"), 60);
        assert_eq!(order("D2"), 2);
        assert_eq!(order("D4"), 4);
        assert_eq!(order("D 12"), 12);
        assert_eq!(order("Q8"), 8);
        assert_eq!(order("Q12"), 12);
        assert_eq!(order("E 2^3"), 8);
        assert_eq!(order("e3^2"), 9);
    }

    #[test]
    fn d8_generators_have_orders_two_and_four() {
        let g = builtin("D 8", DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 8);
        let orders: Vec<usize> = g.generators().iter().map(|&x| g.element_order(x)).collect();
        assert_eq!(orders, vec![2, 4]);
        assert!(!g.is_abelian());
    }

    #[test]
    fn quaternion_has_a_unique_involution() {
        let g = builtin("Q8", DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order_spectrum(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn bad_families() {
        assert!(matches!(builtin("D 7", 64), Err(Error::InvalidFamily(_))));
        assert!(matches!(builtin("X 7", 64), Err(Error::UnknownFamily { .. })));
        assert!(matches!(builtin("E 4^2", 64), Err(Error::InvalidFamily(_))));
        assert!(matches!(builtin("S 5", 64), Err(Error::OrderCap { .. })));
    }
}
