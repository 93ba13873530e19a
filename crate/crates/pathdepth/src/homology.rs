//! Exact reduced simplicial homology, the multigraded Betti table via
//! Hochster's formula, and the derived invariants depth and projective
//! dimension.
//!
//! The reduced chain complex includes the empty face, so the empty
//! complex `{∅}` has one-dimensional homology in degree -1 and the void
//! complex has none at all. Under this convention the Betti table of
//! `S/I` carries `β_0 = 1` at the empty subset, and `β_{1,{i}} = 1` for
//! the principal ideal `(x_i)`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{vertex_list, FaceSet, SimplicialComplex, SubsetOrd, DEFAULT_SUBSET_CAP};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, Gf};
use crate::ring::MonomialIdeal;

/// Rank of a dense matrix over a field, by Gaussian elimination.
/// Rows may have any length as long as they agree.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (pivot_row, rest) = {
            let (head, tail) = rows.split_at_mut(rank + 1);
            (&head[rank], tail)
        };
        let pivot_value = pivot_row[col].clone();
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() / pivot_value.clone();
            for (entry, base) in row.iter_mut().zip(pivot_row.iter()).skip(col) {
                *entry = entry.clone() - factor.clone() * base.clone();
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank over GF(2) with bit-packed rows (64 columns per word).
pub fn rank_gf2(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let word = col >> 6;
        let bit = col & 63;
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][word] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (pivot_row, rest) = {
            let (head, tail) = rows.split_at_mut(rank + 1);
            (std::mem::take(&mut head[rank]), tail)
        };
        for row in rest.iter_mut() {
            if row[word] >> bit & 1 == 1 {
                for (entry, base) in row.iter_mut().zip(&pivot_row) {
                    *entry ^= base;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Faces of one dimension, sorted by mask; index lookup by binary search.
fn face_index(level: &[u64], mask: u64) -> usize {
    level.binary_search(&mask).expect("boundary face missing from level")
}

/// Group a (size, mask)-sorted face list into levels by vertex count.
fn levels_of(faces: &[u64]) -> Vec<Vec<u64>> {
    let top = faces.last().map_or(0, |m| m.count_ones() as usize);
    let mut levels = vec![Vec::new(); top + 1];
    for &f in faces {
        levels[f.count_ones() as usize].push(f);
    }
    levels
}

fn boundary_rank_generic<F: Field>(upper: &[u64], lower: &[u64]) -> usize {
    let rows: Vec<Vec<F>> = upper
        .iter()
        .map(|&sigma| {
            let mut row = vec![F::zero(); lower.len()];
            let mut sign_flip = false;
            let mut remaining = sigma;
            while remaining != 0 {
                let v = remaining.trailing_zeros();
                let facet = sigma & !(1 << v);
                let entry = if sign_flip { -F::one() } else { F::one() };
                row[face_index(lower, facet)] = entry;
                sign_flip = !sign_flip;
                remaining &= remaining - 1;
            }
            row
        })
        .collect();
    rank(rows)
}

fn boundary_rank_gf2(upper: &[u64], lower: &[u64]) -> usize {
    let words = lower.len().div_ceil(64);
    let rows: Vec<Vec<u64>> = upper
        .iter()
        .map(|&sigma| {
            let mut row = vec![0u64; words];
            let mut remaining = sigma;
            while remaining != 0 {
                let v = remaining.trailing_zeros();
                let idx = face_index(lower, sigma & !(1 << v));
                row[idx >> 6] |= 1 << (idx & 63);
                remaining &= remaining - 1;
            }
            row
        })
        .collect();
    rank_gf2(rows, lower.len())
}

fn homology_dims_with_ranks(
    faces: &[u64],
    boundary_rank: impl Fn(&[u64], &[u64]) -> usize,
) -> BTreeMap<isize, usize> {
    let mut dims = BTreeMap::new();
    if faces.is_empty() {
        return dims; // void complex
    }
    let levels = levels_of(faces);
    let top = levels.len() - 1;
    // ranks[k] = rank of the boundary map from k-vertex faces down to
    // (k-1)-vertex faces; chain degree is k - 1.
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        ranks[k] = boundary_rank(&levels[k], &levels[k - 1]);
    }
    for k in 0..=top {
        let dim = levels[k].len() - ranks[k] - ranks[k + 1];
        if dim > 0 {
            dims.insert(k as isize - 1, dim);
        }
    }
    dims
}

/// Reduced homology dimensions of a face list over the given field,
/// keyed by chain degree; only nonzero dimensions are reported.
pub(crate) fn homology_from_faces(
    faces: &[u64],
    field: FieldSpec,
) -> Result<BTreeMap<isize, usize>> {
    match field {
        FieldSpec::Prime(2) => Ok(homology_dims_with_ranks(faces, boundary_rank_gf2)),
        FieldSpec::Prime(3) => Ok(homology_dims_with_ranks(faces, boundary_rank_generic::<Gf<3>>)),
        FieldSpec::Prime(5) => Ok(homology_dims_with_ranks(faces, boundary_rank_generic::<Gf<5>>)),
        FieldSpec::Prime(7) => Ok(homology_dims_with_ranks(faces, boundary_rank_generic::<Gf<7>>)),
        FieldSpec::Prime(11) => {
            Ok(homology_dims_with_ranks(faces, boundary_rank_generic::<Gf<11>>))
        }
        FieldSpec::Prime(13) => {
            Ok(homology_dims_with_ranks(faces, boundary_rank_generic::<Gf<13>>))
        }
        FieldSpec::Prime(p) => Err(Error::UnsupportedField(p)),
        FieldSpec::Rationals => {
            Ok(homology_dims_with_ranks(faces, boundary_rank_generic::<BigRational>))
        }
    }
}

/// Dimensions of the reduced homology of a complex; degrees run from -1
/// upward and only nonzero entries appear in the map.
pub fn reduced_homology_dims(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Result<BTreeMap<isize, usize>> {
    homology_from_faces(&complex.faces(), field)
}

/// Multigraded Betti numbers of `S/I`, keyed by homological index `i`
/// and vertex subset `W`; only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldSpec,
    num_vars: usize,
    entries: BTreeMap<(SubsetOrd, usize), usize>,
}

impl BettiTable {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn get(&self, i: usize, w: u64) -> usize {
        self.entries.get(&(SubsetOrd(w), i)).copied().unwrap_or(0)
    }

    /// Entries as `(i, W, beta)`, sorted by (|W|, W, i).
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64, usize)> + '_ {
        self.entries.iter().map(|(&(SubsetOrd(w), i), &beta)| (i, w, beta))
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(_, i)| i).max().unwrap_or(0)
    }
}

/// JSON form `{"field": ..., "entries": [{"i", "W", "beta"}, ...]}`
/// sorted by (|W|, W, i).
impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            #[serde(rename = "W")]
            w: Vec<usize>,
            beta: usize,
        }
        let entries: Vec<Entry> = self
            .iter()
            .map(|(i, w, beta)| Entry { i, w: vertex_list(w), beta })
            .collect();
        let mut state = serializer.serialize_struct("BettiTable", 2)?;
        state.serialize_field("field", &self.field)?;
        state.serialize_field("entries", &entries)?;
        state.end()
    }
}

/// Betti numbers indexed by subset for one `W`, from the induced
/// subcomplex: `β_{i,W} = dim H̃_{|W|-i-1}(Δ_W)`.
fn betti_from_dims(w: u64, dims: &BTreeMap<isize, usize>) -> Vec<(usize, usize)> {
    let size = w.count_ones() as isize;
    dims.iter()
        .map(|(&d, &dim)| {
            let i = size - 1 - d;
            debug_assert!(i >= 0);
            (i as usize, dim)
        })
        .collect()
}

/// Full Hochster sweep with the default subset cap.
pub fn hochster_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    hochster_betti_capped(ideal, field, DEFAULT_SUBSET_CAP)
}

/// Multigraded Betti numbers of `S/I` for squarefree proper `I`, by
/// computing reduced homology of every induced subcomplex of the
/// Stanley-Reisner complex. Subsets whose union of in-range generator
/// supports misses a vertex are skipped: that vertex is a cone point of
/// the induced subcomplex, so its reduced homology vanishes.
pub fn hochster_betti_capped(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cap: u128,
) -> Result<BettiTable> {
    let n = ideal.num_vars();
    let required = 1u128 << n;
    if required > cap {
        return Err(Error::SubsetCapExceeded { required, cap });
    }
    let faces = FaceSet::from_ideal(ideal)?;
    let supports = ideal.support_masks();
    let total = 1u64 << n;
    let progress = Progress::new(total);

    let per_subset: Vec<(u64, Vec<(usize, usize)>)> = (0..total)
        .into_par_iter()
        .map(|w| -> Result<Option<(u64, Vec<(usize, usize)>)>> {
            progress.tick();
            let covered = supports
                .iter()
                .filter(|&&s| s & !w == 0)
                .fold(0u64, |acc, &s| acc | s);
            if covered != w {
                return Ok(None);
            }
            let dims = homology_from_faces(&faces.faces_within(w), field)?;
            let row = betti_from_dims(w, &dims);
            Ok((!row.is_empty()).then_some((w, row)))
        })
        .filter_map(Result::transpose)
        .collect::<Result<_>>()?;

    let mut entries = BTreeMap::new();
    for (w, row) in per_subset {
        for (i, beta) in row {
            entries.insert((SubsetOrd(w), i), beta);
        }
    }
    Ok(BettiTable { field, num_vars: n, entries })
}

/// Betti numbers at a single subset `W`; usable beyond the sweep cap.
pub fn betti_at_subset(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    w: u64,
) -> Result<Vec<(usize, usize)>> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let supports = ideal.support_masks();
    let mut faces = Vec::new();
    let mut sub = w;
    loop {
        if !supports.iter().any(|&s| s & !sub == 0) {
            faces.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & w;
    }
    faces.sort_by_key(|&m| (m.count_ones(), m));
    let dims = homology_from_faces(&faces, field)?;
    Ok(betti_from_dims(w, &dims))
}

/// Projective dimension of `S/I` for squarefree proper `I`: the largest
/// index with a nonzero Betti number; 0 for the zero ideal.
pub fn projective_dimension(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(hochster_betti(ideal, field)?.projective_dimension())
}

/// Depth of `S/I` for squarefree `I`, via the Auslander-Buchsbaum
/// relation `depth = n - pd`.
pub fn depth_squarefree(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(ideal.num_vars() - projective_dimension(ideal, field)?)
}

/// Depth of `S/I` for an arbitrary monomial ideal. Polarization
/// preserves projective dimension, so `depth = n - pd(polarization)`.
pub fn depth_general(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    depth_general_capped(ideal, field, crate::ring::DEFAULT_POLARIZE_CAP, DEFAULT_SUBSET_CAP)
}

pub fn depth_general_capped(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    polarize_cap: usize,
    subset_cap: u128,
) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(ideal.num_vars());
    }
    if ideal.is_squarefree() {
        let table = hochster_betti_capped(ideal, field, subset_cap)?;
        return Ok(ideal.num_vars() - table.projective_dimension());
    }
    let (polarized, _) = ideal.polarize_capped(polarize_cap)?;
    let table = hochster_betti_capped(&polarized, field, subset_cap)?;
    Ok(ideal.num_vars() - table.projective_dimension())
}

/// Coarse progress reporting for long sweeps; emitted on standard error
/// only, and only when the sweep is large.
struct Progress {
    total: u64,
    step: u64,
    done: AtomicUsize,
}

impl Progress {
    fn new(total: u64) -> Self {
        let step = if total >= 1 << 17 { total / 8 } else { 0 };
        Progress { total, step, done: AtomicUsize::new(0) }
    }

    fn tick(&self) {
        if self.step == 0 {
            return;
        }
        let done = self.done.fetch_add(1, Ordering::Relaxed) as u64 + 1;
        if done % self.step == 0 {
            eprintln!("subsets processed: {done}/{}", self.total);
        }
    }
}
