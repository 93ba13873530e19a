//! Minimal primes, height and Krull dimension, primary decomposition,
//! symbolic powers, socle membership of the maximal ideal, and the
//! Cohen-Macaulay test.
//!
//! For a squarefree monomial ideal the minimal primes are exactly the
//! inclusion-minimal transversals of the generator supports, and the
//! intersection of those primes recovers the ideal.

use std::collections::HashSet;

use serde::Serialize;

use crate::complex::{vertex_list, SubsetOrd};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::depth_squarefree;
use crate::ring::{Monomial, MonomialIdeal, RingContext, DEFAULT_PRODUCT_CAP};

/// Node budget for the socle witness search.
const SOCLE_SEARCH_BUDGET: usize = 10_000_000;

/// A monomial prime `(x_i : i in C)`, stored as the bit set of `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct VariablePrime {
    mask: u64,
}

impl VariablePrime {
    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// 1-based variable indices.
    pub fn variables(&self) -> Vec<usize> {
        vertex_list(self.mask)
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// The prime as a monomial ideal in an `n`-variable ring.
    pub fn to_ideal(&self, ring: RingContext) -> Result<MonomialIdeal> {
        let gens = self
            .variables()
            .into_iter()
            .map(|v| Monomial::variable(ring.num_vars(), v))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(ring, gens)
    }

    /// `P^t`: all monomials of total degree `t` supported in `C`.
    pub fn power(&self, ring: RingContext, t: u32) -> Result<MonomialIdeal> {
        let vars = self.variables();
        let mut gens = Vec::new();
        let mut exps = vec![0u32; ring.num_vars()];
        fill_degree(&vars, 0, t, &mut exps, &mut gens);
        MonomialIdeal::minimalize(ring, gens)
    }
}

impl std::fmt::Display for VariablePrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.variables().into_iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{v}")?;
        }
        write!(f, ")")
    }
}

fn fill_degree(
    vars: &[usize],
    idx: usize,
    remaining: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if idx + 1 == vars.len() {
        exps[vars[idx] - 1] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[vars[idx] - 1] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[vars[idx] - 1] = e;
        fill_degree(vars, idx + 1, remaining - e, exps, out);
    }
    exps[vars[idx] - 1] = 0;
}

/// All inclusion-minimal transversals of the generator supports:
/// branch on the vertices of an uncovered support, excluding earlier
/// siblings to keep branches disjoint, then filter to minimal sets.
fn minimal_transversals(supports: &[u64]) -> Vec<u64> {
    let mut raw = Vec::new();
    branch(supports, 0, 0, &mut raw);
    raw.sort_by_key(|&m| SubsetOrd(m));
    raw.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for t in raw {
        if !minimal.iter().any(|&k| k & !t == 0) {
            minimal.push(t);
        }
    }
    minimal
}

fn branch(supports: &[u64], chosen: u64, forbidden: u64, out: &mut Vec<u64>) {
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => out.push(chosen),
        Some(&s) => {
            let mut used = 0u64;
            let mut avail = s & !forbidden;
            while avail != 0 {
                let v = avail & avail.wrapping_neg();
                branch(supports, chosen | v, forbidden | used, out);
                used |= v;
                avail &= avail - 1;
            }
        }
    }
}

/// Minimal primes of a squarefree ideal. The zero ideal has no monomial
/// minimal primes and yields the empty list.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_zero() {
        return Ok(Vec::new());
    }
    Ok(minimal_transversals(&ideal.support_masks())
        .into_iter()
        .map(|mask| VariablePrime { mask })
        .collect())
}

/// Height (minimum size of a minimal prime) and Krull dimension
/// `dim S/I = n - height`. The zero ideal has height 0 and dimension n.
pub fn height_and_dim(ideal: &MonomialIdeal) -> Result<(usize, usize)> {
    let n = ideal.num_vars();
    if ideal.is_zero() {
        return Ok((0, n));
    }
    let primes = minimal_primes(ideal)?;
    let height = primes.iter().map(VariablePrime::size).min().expect("nonzero ideal");
    Ok((height, n - height))
}

/// Primary decomposition of a squarefree ideal: the full list of
/// minimal primes, whose intersection recovers the ideal.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    minimal_primes(ideal)
}

/// The t-th symbolic power: the intersection of `P^t` over the minimal
/// primes `P`.
pub fn symbolic_power(ideal: &MonomialIdeal, t: u32) -> Result<MonomialIdeal> {
    symbolic_power_capped(ideal, t, DEFAULT_PRODUCT_CAP)
}

pub fn symbolic_power_capped(ideal: &MonomialIdeal, t: u32, cap: usize) -> Result<MonomialIdeal> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "symbolic power exponent must be at least 1".into(),
        ));
    }
    if t == 1 || ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let ring = ideal.ring();
    let mut acc: Option<MonomialIdeal> = None;
    for prime in minimal_primes(ideal)? {
        let power = prime.power(ring, t)?;
        acc = Some(match acc {
            None => power,
            Some(prev) => {
                let raw = prev.generators().len() * power.generators().len();
                if raw > cap {
                    return Err(Error::PowerTooLarge { raw, cap });
                }
                prev.intersect(&power)?
            }
        });
    }
    Ok(acc.expect("nonzero ideal has at least one minimal prime"))
}

/// Decides whether the maximal ideal is associated to `S/I`, i.e.
/// whether `(I : m)` strictly contains `I`; equivalently depth 0.
///
/// Returns a socle witness on success: a monomial `u` outside `I` with
/// `u*x_l` in `I` for every variable. The witness search runs over
/// lcms of one colon generator per variable; every exponent of such an
/// lcm is bounded by the largest exponent of that variable among the
/// generators, so the search space is finite and complete. The reported
/// witness is the lexicographically least one.
pub fn max_ideal_is_associated(ideal: &MonomialIdeal) -> Result<(bool, Option<Monomial>)> {
    let witnesses = socle_witnesses(ideal)?;
    let least = witnesses.into_iter().min_by(|a, b| a.exponents().cmp(b.exponents()));
    Ok((least.is_some(), least))
}

/// All minimal generators of `(I : m)` that lie outside `I`.
pub(crate) fn socle_witnesses(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if ideal.is_zero() {
        return Ok(Vec::new());
    }
    let n = ideal.num_vars();
    // Levels: one per variable with x_l outside I; when x_l is in I the
    // colon by x_l is the whole ring and imposes nothing.
    let mut levels: Vec<(MonomialIdeal, Vec<Monomial>)> = Vec::new();
    for l in 1..=n {
        let xl = Monomial::variable(n, l)?;
        if ideal.contains(&xl)? {
            continue;
        }
        let colon = ideal.colon_monomial(&xl)?;
        let picks: Vec<Monomial> = colon
            .generators()
            .iter()
            .filter(|g| !ideal.divides_any(g))
            .cloned()
            .collect();
        if picks.is_empty() {
            // (I : x_l) = I, hence (I : m) = I.
            return Ok(Vec::new());
        }
        levels.push((colon, picks));
    }
    if levels.is_empty() {
        // I is the maximal ideal itself; 1 spans the socle.
        return Ok(vec![Monomial::unit(n)]);
    }
    levels.sort_by_key(|(_, picks)| picks.len());

    let bounds = ideal.max_exponents();
    let mut search = SocleSearch {
        ideal,
        levels: &levels,
        bounds: &bounds,
        seen: HashSet::new(),
        found: Vec::new(),
        budget: SOCLE_SEARCH_BUDGET,
    };
    search.run(0, Monomial::unit(n))?;
    Ok(search.found)
}

struct SocleSearch<'a> {
    ideal: &'a MonomialIdeal,
    levels: &'a [(MonomialIdeal, Vec<Monomial>)],
    bounds: &'a [u32],
    seen: HashSet<(usize, Monomial)>,
    found: Vec<Monomial>,
    budget: usize,
}

impl SocleSearch<'_> {
    fn run(&mut self, mut level: usize, current: Monomial) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::InvalidParameter(format!(
                "socle search exceeded {SOCLE_SEARCH_BUDGET} nodes"
            )));
        }
        self.budget -= 1;
        while level < self.levels.len() && self.levels[level].0.divides_any(&current) {
            level += 1;
        }
        let Some((_, picks)) = self.levels.get(level) else {
            self.found.push(current);
            return Ok(());
        };
        for pick in picks {
            let merged = current.lcm(pick);
            let in_bounds = merged
                .exponents()
                .iter()
                .zip(self.bounds)
                .all(|(e, b)| e <= b);
            if !in_bounds || self.ideal.divides_any(&merged) {
                continue;
            }
            if self.seen.insert((level, merged.clone())) {
                self.run(level + 1, merged)?;
            }
        }
        Ok(())
    }
}

/// Cohen-Macaulay test: depth equals Krull dimension.
pub fn is_cohen_macaulay(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let depth = depth_squarefree(ideal, field)?;
    let (_, dim) = height_and_dim(ideal)?;
    Ok(depth == dim)
}

/// JSON form `{"primes": [[i, ...], ...], "height": h, "dim": d}`.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionSummary {
    pub primes: Vec<Vec<usize>>,
    pub height: usize,
    pub dim: usize,
}

pub fn decomposition_summary(ideal: &MonomialIdeal) -> Result<DecompositionSummary> {
    let primes = primary_decomposition(ideal)?;
    let (height, dim) = height_and_dim(ideal)?;
    Ok(DecompositionSummary {
        primes: primes.iter().map(VariablePrime::variables).collect(),
        height,
        dim,
    })
}
