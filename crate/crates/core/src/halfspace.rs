//! Algebra of (partially) perfect half space representations.
//!
//! A representation is an ordered tuple of k <= d mutually orthogonal nonzero
//! integer vectors; membership of a point is a lexicographically negative
//! sequence of dot products. Canonical representations keep every vector
//! primitive (gcd of absolute entries 1); signs are significant, since h and
//! -h denote different half spaces.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    dim: usize,
    vectors: Vec<Vec<i64>>,
}

impl HalfSpace {
    /// Builds a canonical representation: every vector is reduced to its
    /// primitive form. Rejects zero vectors and non-orthogonal tuples.
    pub fn new(dim: usize, vectors: Vec<Vec<i64>>) -> Result<Self> {
        if vectors.len() > dim {
            return Err(Error::Infeasible(format!(
                "{} vectors in dimension {dim}",
                vectors.len()
            )));
        }
        let mut canon = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
            canon.push(primitive(&v)?);
        }
        for i in 0..canon.len() {
            for j in i + 1..canon.len() {
                if dot(&canon[i], &canon[j]) != 0 {
                    return Err(Error::Infeasible(format!(
                        "vectors {i} and {j} are not orthogonal"
                    )));
                }
            }
        }
        Ok(HalfSpace { dim, vectors: canon })
    }

    pub fn empty(dim: usize) -> Self {
        HalfSpace {
            dim,
            vectors: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.vectors.len() == self.dim
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    /// Maximum infinity norm over the vectors.
    pub fn norm(&self) -> u64 {
        self.vectors
            .iter()
            .flat_map(|v| v.iter().map(|x| x.unsigned_abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn is_prefix_of(&self, other: &HalfSpace) -> bool {
        self.dim == other.dim
            && self.vectors.len() <= other.vectors.len()
            && self.vectors[..] == other.vectors[..self.vectors.len()]
    }

    pub fn prefix(&self, k: usize) -> HalfSpace {
        HalfSpace {
            dim: self.dim,
            vectors: self.vectors[..k].to_vec(),
        }
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .vectors
            .iter()
            .map(|v| {
                let xs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("({})", xs.join(","))
            })
            .collect();
        write!(f, "({})", vs.join(";"))
    }
}

/// Parses the display format `((h11,...,h1d);...;(hk1,...,hkd))`.
pub fn parse_half_space(dim: usize, s: &str) -> Result<HalfSpace> {
    let bad = || Error::Infeasible(format!("malformed half space `{s}`"));
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(bad)?;
    let mut vectors = Vec::new();
    if !inner.trim().is_empty() {
        for part in inner.split(';') {
            let part = part.trim();
            let nums = part
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .ok_or_else(bad)?;
            let v: std::result::Result<Vec<i64>, _> =
                nums.split(',').map(|t| t.trim().parse::<i64>()).collect();
            vectors.push(v.map_err(|_| bad())?);
        }
    }
    HalfSpace::new(dim, vectors)
}

fn primitive(v: &[i64]) -> Result<Vec<i64>> {
    let g = v.iter().fold(0u64, |acc, &x| acc.gcd(&x.unsigned_abs()));
    if g == 0 {
        return Err(Error::Infeasible("zero vector in half space".into()));
    }
    Ok(v.iter().map(|&x| x / g as i64).collect())
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    let s: i128 = a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum();
    i64::try_from(s).expect("dot product exceeds i64")
}

fn dot_checked(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Strict lexicographic comparison of equal-length integer tuples.
pub fn lex_compare(a: &[i64], b: &[i64]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(a.cmp(b))
}

/// Pointwise dot products of a vector with every vector of the
/// representation: `(a . h1, ..., a . hk)`.
pub fn dot_sequence(a: &[i64], h: &HalfSpace) -> Result<Vec<i64>> {
    if a.len() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            got: a.len(),
        });
    }
    Ok(h.vectors().iter().map(|v| dot(a, v)).collect())
}

/// Membership: the dot-product sequence is lexicographically below zero.
/// The empty representation denotes the empty set.
pub fn contains(h: &HalfSpace, a: &[i64]) -> Result<bool> {
    let seq = dot_sequence(a, h)?;
    Ok(lex_sign(&seq) == Ordering::Less)
}

/// Sign of a tuple against the all-zero tuple of the same length.
pub fn lex_sign(seq: &[i64]) -> Ordering {
    for &x in seq {
        match x.cmp(&0) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Longest common prefix of a nonempty list of representations, in the prefix
/// order on canonical forms.
pub fn longest_common_prefix(hs: &[HalfSpace]) -> Result<HalfSpace> {
    let first = hs
        .first()
        .ok_or_else(|| Error::Infeasible("empty half-space list".into()))?;
    let dim = first.dim();
    for h in hs {
        if h.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: h.dim(),
            });
        }
    }
    let mut k = hs.iter().map(|h| h.len()).min().unwrap_or(0);
    'outer: for i in 0..k {
        for h in &hs[1..] {
            if h.vectors()[i] != first.vectors()[i] {
                k = i;
                break 'outer;
            }
        }
    }
    Ok(first.prefix(k))
}

/// Flag vector of two perfect half spaces: 0 where the i-th vectors agree,
/// 1 where they differ.
pub fn flag_vector(h: &HalfSpace, h2: &HalfSpace) -> Result<Vec<i64>> {
    if !h.is_perfect() || !h2.is_perfect() || h.dim() != h2.dim() {
        return Err(Error::Infeasible(
            "flag vector needs two perfect half spaces of equal dimension".into(),
        ));
    }
    Ok(h.vectors()
        .iter()
        .zip(h2.vectors())
        .map(|(a, b)| i64::from(a != b))
        .collect())
}

/// Interleaving `<a(1), b(1), ..., a(d), b(d)>` of two equal-length vectors.
pub fn interleave(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    let mut out = Vec::with_capacity(2 * a.len());
    for (x, y) in a.iter().zip(b) {
        out.push(*x);
        out.push(*y);
    }
    Ok(out)
}

/// Enumerates all canonical perfect half spaces of dimension `d` whose
/// vectors have infinity norm at most `bound`. Order is deterministic:
/// lexicographic over vector entries, depth-first over tuple positions.
/// Primitivity loses nothing: every vector of norm <= B reduces to a
/// primitive one of norm <= B denoting the same half space.
pub fn enumerate_perfect_half_spaces(
    d: usize,
    bound: u64,
    cap: usize,
) -> Result<Vec<HalfSpace>> {
    if d == 0 || bound == 0 {
        return Err(Error::Infeasible(
            "dimension and norm bound must be positive".into(),
        ));
    }
    let b = i64::try_from(bound).map_err(|_| Error::Overflow("norm bound"))?;
    let mut out: Vec<HalfSpace> = Vec::new();
    let mut stack: Vec<Vec<i64>> = Vec::new();
    enum_rec(d, b, cap, &mut stack, &mut out)?;
    Ok(out)
}

fn enum_rec(
    d: usize,
    b: i64,
    cap: usize,
    stack: &mut Vec<Vec<i64>>,
    out: &mut Vec<HalfSpace>,
) -> Result<()> {
    if stack.len() == d {
        if out.len() >= cap {
            return Err(Error::CapExceeded {
                what: "perfect half space enumeration",
                needed: out.len() as u128 + 1,
                cap: cap as u128,
            });
        }
        out.push(HalfSpace {
            dim: d,
            vectors: stack.clone(),
        });
        return Ok(());
    }
    let mut v = vec![-b; d];
    loop {
        if is_primitive(&v) && stack.iter().all(|u| dot_checked(u, &v) == 0) {
            stack.push(v.clone());
            enum_rec(d, b, cap, stack, out)?;
            stack.pop();
        }
        // advance v in lexicographic order over [-b, b]^d
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if v[i] < b {
                v[i] += 1;
                for x in v.iter_mut().skip(i + 1) {
                    *x = -b;
                }
                break;
            }
        }
    }
}

fn is_primitive(v: &[i64]) -> bool {
    let g = v.iter().fold(0u64, |acc, &x| acc.gcd(&x.unsigned_abs()));
    g == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn hl() -> HalfSpace {
        HalfSpace::new(2, vec![vec![1, 1], vec![-1, 1]]).unwrap()
    }

    pub fn hr() -> HalfSpace {
        HalfSpace::new(2, vec![vec![1, 1], vec![1, -1]]).unwrap()
    }

    #[test]
    fn lex_compare_basics() {
        assert_eq!(lex_compare(&[0, -2], &[0, 0]).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&[], &[]).unwrap(), Ordering::Equal);
        assert_eq!(lex_compare(&[1, -5], &[0, 9]).unwrap(), Ordering::Greater);
        assert!(lex_compare(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn dot_sequence_matches_worked_products() {
        assert_eq!(dot_sequence(&[-1, 0], &hl()).unwrap(), vec![-1, 1]);
        assert_eq!(dot_sequence(&[1, -1], &hl()).unwrap(), vec![0, -2]);
        assert_eq!(dot_sequence(&[5, 5], &HalfSpace::empty(2)).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn membership() {
        assert!(contains(&hl(), &[-1, -1]).unwrap());
        assert!(contains(&hl(), &[1, -1]).unwrap());
        assert!(!contains(&hl(), &[-1, 1]).unwrap());
        assert!(!contains(&HalfSpace::empty(2), &[-7, -9]).unwrap());
    }

    #[test]
    fn common_prefix() {
        let lcp = longest_common_prefix(&[hl(), hr()]).unwrap();
        assert_eq!(lcp.vectors(), &[vec![1, 1]]);
        assert_eq!(longest_common_prefix(&[hl(), hl()]).unwrap(), hl());
        let other = HalfSpace::new(2, vec![vec![-1, -1], vec![1, -1]]).unwrap();
        assert!(longest_common_prefix(&[hl(), other]).unwrap().is_empty());
    }

    #[test]
    fn enumerate_one_dimensional() {
        let hs = enumerate_perfect_half_spaces(1, 3, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(hs.len(), 2);
        assert!(hs.contains(&HalfSpace::new(1, vec![vec![1]]).unwrap()));
        assert!(hs.contains(&HalfSpace::new(1, vec![vec![-1]]).unwrap()));
    }

    #[test]
    fn enumerate_d2_b1() {
        let hs = enumerate_perfect_half_spaces(2, 1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(hs.len(), 16);
        assert!(hs.contains(&hl()));
        assert!(hs.contains(&hr()));
        // deterministic order
        let again = enumerate_perfect_half_spaces(2, 1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(hs, again);
    }

    #[test]
    fn enumeration_cap_triggers() {
        let err = enumerate_perfect_half_spaces(2, 3, 4).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn flags() {
        assert_eq!(flag_vector(&hl(), &hr()).unwrap(), vec![0, 1]);
        assert_eq!(flag_vector(&hr(), &hl()).unwrap(), vec![0, 1]);
        assert_eq!(flag_vector(&hl(), &hl()).unwrap(), vec![0, 0]);
        assert!(flag_vector(&hl(), &HalfSpace::empty(2)).is_err());
    }

    #[test]
    fn interleavings() {
        assert_eq!(interleave(&[0, 1], &[-1, 1]).unwrap(), vec![0, -1, 1, 1]);
        assert_eq!(interleave(&[0, 0], &[0, -2]).unwrap(), vec![0, 0, 0, -2]);
        assert_eq!(interleave(&[0], &[5]).unwrap(), vec![0, 5]);
    }

    #[test]
    fn canonicalization_reduces_to_primitive() {
        let h = HalfSpace::new(2, vec![vec![2, 2], vec![-3, 3]]).unwrap();
        assert_eq!(h, hl());
        assert!(HalfSpace::new(2, vec![vec![0, 0]]).is_err());
        assert!(HalfSpace::new(2, vec![vec![1, 0], vec![1, 1]]).is_err());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let h = hl();
        assert_eq!(h.to_string(), "((1,1);(-1,1))");
        assert_eq!(parse_half_space(2, &h.to_string()).unwrap(), h);
        let e = HalfSpace::empty(2);
        assert_eq!(parse_half_space(2, &e.to_string()).unwrap(), e);
    }
}
