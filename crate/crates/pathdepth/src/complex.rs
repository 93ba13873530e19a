//! Facet-represented simplicial complexes and Stanley-Reisner complexes
//! of squarefree monomial ideals.
//!
//! Faces are vertex subsets encoded as bit masks (bit `i` is vertex
//! `i + 1`). The void complex (no faces at all) and the empty complex
//! `{∅}` are distinct states: the former has no facets, the latter has
//! the single facet `∅`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ring::MonomialIdeal;

/// Default cap on full subset sweeps (2^24 subsets).
pub const DEFAULT_SUBSET_CAP: u128 = 1 << 24;

/// 1-based vertex list of a face mask.
pub fn vertex_list(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Vertex subsets ordered by cardinality, then lexicographically on the
/// sorted vertex lists. Descending bit-reversed masks realize the
/// lexicographic part: the smallest member decides, and a smaller
/// member is a higher reversed bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetOrd(pub u64);

impl Ord for SubsetOrd {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .count_ones()
            .cmp(&other.0.count_ones())
            .then_with(|| other.0.reverse_bits().cmp(&self.0.reverse_bits()))
    }
}

impl PartialOrd for SubsetOrd {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Face mask of a 1-based vertex list.
pub fn vertex_mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << (v - 1))
}

/// A simplicial complex on vertices `1..=vertex_count`, stored by its
/// facets (inclusion-maximal faces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Canonicalize a list of faces into facets: drop faces contained in
    /// another, sort by (size, mask).
    pub fn from_facets(vertex_count: usize, faces: Vec<u64>) -> Result<Self> {
        if vertex_count > 63 {
            return Err(Error::InvalidParameter(
                "complexes support at most 63 vertices".into(),
            ));
        }
        let full = (1u64 << vertex_count) - 1;
        for &f in &faces {
            if f & !full != 0 {
                return Err(Error::InvalidParameter(format!(
                    "face {:?} uses vertices beyond {vertex_count}",
                    vertex_list(f)
                )));
            }
        }
        let mut facets: Vec<u64> = Vec::new();
        for f in faces {
            if facets.iter().any(|&g| f & !g == 0) {
                continue;
            }
            facets.retain(|&g| g & !f != 0);
            facets.push(f);
        }
        facets.sort_by_key(|&m| (m.count_ones(), m));
        Ok(SimplicialComplex { vertex_count, facets })
    }

    /// The void complex: no faces at all.
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex { vertex_count, facets: Vec::new() }
    }

    /// The empty complex `{∅}`.
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex { vertex_count, facets: vec![0] }
    }

    /// The full simplex on all vertices.
    pub fn full_simplex(vertex_count: usize) -> Result<Self> {
        Self::from_facets(vertex_count, vec![(1u64 << vertex_count) - 1])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Size of the largest facet; `None` for the void complex.
    pub fn max_facet_size(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.count_ones() as usize).max()
    }

    /// Dimension of the complex; `None` for the void complex, `-1` for
    /// the empty complex.
    pub fn dimension(&self) -> Option<isize> {
        self.max_facet_size().map(|s| s as isize - 1)
    }

    /// All faces (downward closure of the facets), sorted by (size, mask).
    /// The empty face is included whenever the complex is nonvoid.
    pub fn faces(&self) -> Vec<u64> {
        let mut seen: HashSet<u64> = HashSet::new();
        for &facet in &self.facets {
            let mut sub = facet;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let mut faces: Vec<u64> = seen.into_iter().collect();
        faces.sort_by_key(|&m| (m.count_ones(), m));
        faces
    }

    /// The induced subcomplex on the vertex subset `w`: all faces
    /// contained in `w`.
    pub fn induced(&self, w: u64) -> SimplicialComplex {
        let mut restricted: Vec<u64> = self.facets.iter().map(|&f| f & w).collect();
        restricted.sort();
        restricted.dedup();
        SimplicialComplex::from_facets(self.vertex_count, restricted)
            .expect("restriction stays in range")
    }
}

/// Membership bit set over all `2^n` subsets: `is_face(m)` is true iff
/// the squarefree monomial of `m` avoids the ideal, i.e. no generator
/// support is contained in `m`.
pub(crate) struct FaceSet {
    num_vars: usize,
    words: Vec<u64>,
}

impl FaceSet {
    pub(crate) fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.num_vars();
        assert!(n <= 40, "face sets are limited to caps far below 2^40");
        let total = 1usize << n;
        let mut words = vec![!0u64; total.div_ceil(64)];
        if total < 64 {
            words[0] = (1u64 << total) - 1;
        }
        let full = (total - 1) as u64;
        for support in ideal.support_masks() {
            // Clear every superset of the generator support.
            let mut m = support;
            loop {
                words[(m >> 6) as usize] &= !(1u64 << (m & 63));
                if m == full {
                    break;
                }
                m = (m + 1) | support;
            }
        }
        Ok(FaceSet { num_vars: n, words })
    }

    pub(crate) fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub(crate) fn is_face(&self, mask: u64) -> bool {
        self.words[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }

    /// Faces contained in `w`, sorted by (size, mask).
    pub(crate) fn faces_within(&self, w: u64) -> Vec<u64> {
        let mut faces = Vec::new();
        let mut sub = w;
        loop {
            if self.is_face(sub) {
                faces.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & w;
        }
        faces.sort_by_key(|&m| (m.count_ones(), m));
        faces
    }
}

/// The Stanley-Reisner complex of a squarefree ideal: faces are exactly
/// the subsets whose squarefree monomial lies outside the ideal.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    stanley_reisner_capped(ideal, DEFAULT_SUBSET_CAP)
}

pub fn stanley_reisner_capped(ideal: &MonomialIdeal, cap: u128) -> Result<SimplicialComplex> {
    let n = ideal.num_vars();
    let required = 1u128 << n;
    if required > cap {
        return Err(Error::SubsetCapExceeded { required, cap });
    }
    let faces = FaceSet::from_ideal(ideal)?;
    let mut facets = Vec::new();
    for mask in 0..(1u64 << n) {
        if !faces.is_face(mask) {
            continue;
        }
        let maximal = (0..n)
            .all(|v| mask >> v & 1 == 1 || !faces.is_face(mask | 1 << v));
        if maximal {
            facets.push(mask);
        }
    }
    SimplicialComplex::from_facets(n, facets)
}
