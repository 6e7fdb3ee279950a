use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PermError;

/// A permutation of `{1, ..., n}`.
///
/// Stored 0-based internally; every public accessor and the cycle notation
/// are 1-based. Ordering is lexicographic on the image list, which is the
/// canonical order used for deterministic output throughout the crate.
///
/// Composition applies the right factor first: `p.compose(&q)` maps `i` to
/// `p(q(i))`. Serializes as the 1-based image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i-1] = p(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(PermError::DegreeTooLarge { degree: n, bound: u8::MAX as usize });
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(PermError::NotBijection);
            }
            seen[img - 1] = true;
            out.push((img - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let owned: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Self::from_cycle_vecs(degree, &owned)
    }

    fn from_cycle_vecs(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point == 0 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                if touched[point - 1] {
                    return Err(PermError::RepeatedPoint(point));
                }
                touched[point - 1] = true;
                images[point - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    /// Parses cycle notation such as `(12)(34)` or `(1,10)(2 3)`.
    ///
    /// Grammar (whitespace between tokens is ignored):
    ///
    /// ```text
    /// perm  = "()" | cycle { cycle } ;
    /// cycle = "(" point { [ "," | " " ] point } ")" ;
    /// point = digit | number ;   (* a cycle with no separator reads one digit per point *)
    /// ```
    pub fn parse(degree: usize, text: &str) -> Result<Self, PermError> {
        let cycles = parse_cycles(text)?;
        Self::from_cycle_vecs(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Smallest `k >= 1` with `p^k = id`, i.e. the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Sign as `true` for even permutations.
    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions.is_multiple_of(2)
    }

    /// Non-trivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Conjugate `c ∘ self ∘ c⁻¹`.
    pub fn conjugate_by(&self, c: &Permutation) -> Permutation {
        c.compose_unchecked(self).compose_unchecked(&c.inverse())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_images(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let bad = |msg: &str| PermError::Parse(format!("{msg} in {text:?}"));
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(bad("empty input"));
    }
    while !rest.is_empty() {
        let body_start = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = body_start.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let body = body_start[..close].trim();
        rest = body_start[close + 1..].trim_start();
        if body.is_empty() {
            continue;
        }
        let separated = body.contains(',') || body.split_whitespace().count() > 1;
        let points: Result<Vec<usize>, _> = if separated {
            body.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                .collect()
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("bad digit")))
                .collect()
        };
        cycles.push(points?);
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    /// Cycle notation; points are comma-separated once the degree exceeds 9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(sep))?;
        }
        Ok(())
    }
}

/// Parses with the degree inferred from the largest point mentioned.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
        Self::from_cycle_vecs(degree, &cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(5, s).unwrap()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (12)∘(23): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1, i.e. (123).
        let a = Permutation::parse(3, "(12)").unwrap();
        let b = Permutation::parse(3, "(23)").unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.images(), vec![2, 3, 1]);
        assert_eq!(ab.to_string(), "(123)");
        assert_eq!(b.compose(&a).unwrap().to_string(), "(132)");
    }

    #[test]
    fn small_products() {
        assert!(p("(12)").compose(&p("(12)")).unwrap().is_identity());
        assert_eq!(p("(123)").compose(&p("(123)")).unwrap(), p("(132)"));
        let xy = p("(123)").compose(&p("(145)")).unwrap();
        assert_eq!(xy.order(), 5);
        assert_eq!(xy, p("(14523)"));
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(p("(12345)").order(), 5);
        assert_eq!(p("(12)(34)").order(), 2);
        assert_eq!(Permutation::parse(6, "(12)(345)").unwrap().order(), 6);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::parse(3, "(12)").unwrap();
        let b = Permutation::parse(4, "(12)").unwrap();
        assert!(matches!(a.compose(&b), Err(PermError::DegreeMismatch(3, 4))));
    }

    #[test]
    fn parser_accepts_separators_and_whitespace() {
        let a = Permutation::parse(12, " (1, 10) (2 3 11)").unwrap();
        assert_eq!(a.apply(1), 10);
        assert_eq!(a.apply(11), 2);
        assert_eq!(a.to_string(), "(1,10)(2,3,11)");
        assert_eq!(Permutation::parse(12, &a.to_string()).unwrap(), a);
        assert_eq!(Permutation::parse(4, "( 1 2 ) ( 3 4 )").unwrap(), Permutation::parse(4, "(12)(34)").unwrap());
        assert!(Permutation::parse(4, "()").unwrap().is_identity());
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(Permutation::parse(4, "(12").is_err());
        assert!(Permutation::parse(4, "12").is_err());
        assert!(Permutation::parse(4, "(15)").is_err());
        assert!(Permutation::parse(4, "(121)").is_err());
        assert!(Permutation::parse(4, "").is_err());
    }

    #[test]
    fn from_str_infers_degree() {
        let a: Permutation = "(135)".parse().unwrap();
        assert_eq!(a.degree(), 5);
    }

    #[test]
    fn inverse_and_pow() {
        let c = p("(12345)");
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
        assert!(c.pow(5).is_identity());
        assert_eq!(c.pow(2), c.compose(&c).unwrap());
        assert!(p("(12)(34)").is_even());
        assert!(!p("(1234)").is_even());
    }
}
