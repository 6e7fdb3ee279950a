use std::fmt;

use serde::{Deserialize, Serialize};

use super::OrbifoldError;

/// A compact surface up to homeomorphism: `Σ_{g,b}` (orientable) or
/// `Σ⁻_{g,b}` (non-orientable, `g` cross-caps, `g >= 1`).
///
/// Ordering puts orientable surfaces first, then by genus and boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceType {
    pub orientable: bool,
    pub genus: u64,
    pub boundary: u64,
}

impl SurfaceType {
    pub fn orientable(genus: u64, boundary: u64) -> Self {
        SurfaceType {
            orientable: true,
            genus,
            boundary,
        }
    }

    pub fn non_orientable(genus: u64, boundary: u64) -> Result<Self, OrbifoldError> {
        if genus == 0 {
            return Err(OrbifoldError::InvalidSurface("non-orientable genus must be at least 1".into()));
        }
        Ok(SurfaceType {
            orientable: false,
            genus,
            boundary,
        })
    }

    /// Rank of the fundamental group.
    pub fn algebraic_genus(&self) -> u64 {
        match (self.orientable, self.boundary) {
            (true, 0) => 2 * self.genus,
            (true, b) => 2 * self.genus + b - 1,
            (false, 0) => self.genus,
            (false, b) => self.genus + b - 1,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        let g = self.genus as i64;
        let b = self.boundary as i64;
        if self.orientable {
            2 - 2 * g - b
        } else {
            2 - g - b
        }
    }

    /// Only the closed non-orientable surfaces fail to embed in R³.
    pub fn embeds_in_r3(&self) -> bool {
        self.orientable || self.boundary > 0
    }

    /// The bordered surface with the given algebraic genus, boundary count
    /// and orientability, if the numbers are consistent.
    pub fn from_algebraic_genus(alpha: u64, boundary: u64, orientable: bool) -> Result<Self, OrbifoldError> {
        if boundary == 0 || boundary > alpha + 1 {
            return Err(OrbifoldError::InvalidSurface(format!(
                "no bordered surface with algebraic genus {alpha} and {boundary} boundary components"
            )));
        }
        let rest = alpha + 1 - boundary;
        if orientable {
            if !rest.is_multiple_of(2) {
                return Err(OrbifoldError::InvalidSurface(format!(
                    "orientable surface needs alpha + 1 - b even, got {rest}"
                )));
            }
            Ok(SurfaceType::orientable(rest / 2, boundary))
        } else {
            SurfaceType::non_orientable(rest, boundary)
        }
    }

    /// `Σ_{g,b}` / `Σ⁻_{g,b}`.
    pub fn notation(&self) -> String {
        if self.orientable {
            format!("Σ_{{{},{}}}", self.genus, self.boundary)
        } else {
            format!("Σ⁻_{{{},{}}}", self.genus, self.boundary)
        }
    }
}

impl Ord for SurfaceType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (!self.orientable, self.genus, self.boundary).cmp(&(!other.orientable, other.genus, other.boundary))
    }
}

impl PartialOrd for SurfaceType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// ASCII form: `S(g,b)` or `N(g,b)`.
impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.orientable { 'S' } else { 'N' };
        write!(f, "{tag}({},{})", self.genus, self.boundary)
    }
}

impl std::str::FromStr for SurfaceType {
    type Err = OrbifoldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || OrbifoldError::InvalidSurface(format!("cannot parse surface {s:?}"));
        let s = s.trim();
        let (orientable, rest) = if let Some(r) = s.strip_prefix('S') {
            (true, r)
        } else if let Some(r) = s.strip_prefix('N') {
            (false, r)
        } else {
            return Err(bad());
        };
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (g, b) = inner.split_once(',').ok_or_else(bad)?;
        let g: u64 = g.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        if orientable {
            Ok(SurfaceType::orientable(g, b))
        } else {
            SurfaceType::non_orientable(g, b)
        }
    }
}
