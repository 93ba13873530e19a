//! Exact monomial and monomial-ideal arithmetic over a polynomial ring
//! with a fixed, ordered variable set.
//!
//! Ideals are kept in canonical minimal form at all times: no generator
//! divides another, no duplicates, and generators are sorted by total
//! degree and then lexicographically on exponent vectors. Ideal equality
//! is therefore plain structural equality.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Cap on raw products formed in one multiplication step of `pow`.
pub const DEFAULT_PRODUCT_CAP: usize = 200_000;

/// Cap on the variable count of a polarized ring.
pub const DEFAULT_POLARIZE_CAP: usize = 24;

/// A polynomial ring `k[x_1, ..., x_n]` identified by its variable count.
/// Variable labels are the canonical `x1, ..., xn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    num_vars: usize,
}

impl RingContext {
    pub fn new(num_vars: usize) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::EmptyRing);
        }
        Ok(RingContext { num_vars })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Canonical label of the 1-based variable `index`.
    pub fn label(&self, index: usize) -> String {
        format!("x{index}")
    }
}

/// A monomial as a vector of nonnegative exponents, one per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The monomial `x_index` (1-based) in `n` variables.
    pub fn variable(n: usize, index: usize) -> Result<Self> {
        if index == 0 || index > n {
            return Err(Error::VariableOutOfRange { index, num_vars: n });
        }
        let mut exps = vec![0; n];
        exps[index - 1] = 1;
        Ok(Monomial { exps })
    }

    /// Squarefree monomial with the given 1-based support, e.g.
    /// `{1, 3}` gives `x1*x3`.
    pub fn from_support(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut exps = vec![0; n];
        for &v in vertices {
            if v == 0 || v > n {
                return Err(Error::VariableOutOfRange { index: v, num_vars: n });
            }
            exps[v - 1] = 1;
        }
        Ok(Monomial { exps })
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of the 1-based variable `index`.
    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Support as a bit set, bit `i` for variable `x_{i+1}`.
    /// Only valid in rings of at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        assert!(self.exps.len() <= 64, "support mask needs <= 64 variables");
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// `self / gcd(self, f)`; the generator map of the colon ideal.
    pub fn quotient_by_gcd(&self, f: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), f.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&f.exps)
                .map(|(a, b)| a - a.min(b))
                .collect(),
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: total degree first, then lexicographic on the
/// exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal held as its canonical minimal generating set.
/// The empty generator list is the zero ideal; unit generators are
/// rejected outright.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Canonicalize a generating set: drop duplicates and generators
    /// divisible by another, then sort.
    pub fn minimalize(ring: RingContext, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.num_vars() != ring.num_vars() {
                return Err(Error::RingMismatch {
                    left: ring.num_vars(),
                    right: g.num_vars(),
                });
            }
            if g.is_unit() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimal_form(gens),
        })
    }

    pub fn zero(ring: RingContext) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.num_vars(),
                right: other.num_vars(),
            });
        }
        Ok(())
    }

    fn check_element(&self, u: &Monomial) -> Result<()> {
        if u.num_vars() != self.num_vars() {
            return Err(Error::RingMismatch {
                left: self.num_vars(),
                right: u.num_vars(),
            });
        }
        Ok(())
    }

    /// Ideal membership: true iff some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        self.check_element(u)?;
        Ok(self.divides_any(u))
    }

    pub(crate) fn divides_any(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Sum of ideals: union of generating sets, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_form(gens),
        })
    }

    /// Product of ideals, with a cap on the raw product count.
    pub fn multiply_capped(&self, other: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let raw = self.gens.len() * other.gens.len();
        if raw > cap {
            return Err(Error::PowerTooLarge { raw, cap });
        }
        let mut products = Vec::with_capacity(raw);
        for g in &self.gens {
            for h in &other.gens {
                products.push(g.mul(h));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_form(products),
        })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.multiply_capped(other, DEFAULT_PRODUCT_CAP)
    }

    /// `t`-th power by repeated multiplication, pruning non-minimal
    /// generators after each step.
    pub fn pow_capped(&self, t: u32, cap: usize) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::InvalidParameter(
                "power exponent must be at least 1".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.multiply_capped(self, cap)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, t: u32) -> Result<MonomialIdeal> {
        self.pow_capped(t, DEFAULT_PRODUCT_CAP)
    }

    /// Colon ideal `(I : f)` for a single monomial `f`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_element(f)?;
        let quotients: Vec<Monomial> = self.gens.iter().map(|g| g.quotient_by_gcd(f)).collect();
        if quotients.iter().any(Monomial::is_unit) {
            // f lies in the ideal, so the colon is the unit ideal.
            return Err(Error::UnitIdeal);
        }
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_form(quotients),
        })
    }

    /// Intersection of ideals via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_form(lcms),
        })
    }

    /// Colon by the maximal homogeneous ideal, `(I : m)` with
    /// `m = (x_1, ..., x_n)`, computed as the intersection of the
    /// colons by each variable. The zero ideal maps to itself; `I = m`
    /// is rejected because the result would be the unit ideal.
    pub fn colon_max_ideal(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let n = self.num_vars();
        let mut acc: Option<MonomialIdeal> = None;
        for j in 1..=n {
            let xj = Monomial::variable(n, j)?;
            if self.divides_any(&xj) {
                // (I : x_j) is the unit ideal; it is neutral for the
                // intersection.
                continue;
            }
            let colon = self.colon_monomial(&xj)?;
            acc = Some(match acc {
                None => colon,
                Some(prev) => prev.intersect(&colon)?,
            });
        }
        match acc {
            Some(ideal) => Ok(ideal),
            // Every variable lies in I, so (I : m) = S.
            None => Err(Error::UnitIdeal),
        }
    }

    /// Componentwise maximum exponent over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut max = vec![0u32; self.num_vars()];
        for g in &self.gens {
            for (m, &e) in max.iter_mut().zip(g.exponents()) {
                *m = (*m).max(e);
            }
        }
        max
    }

    /// Support bit sets of the generators. Rings of at most 64 variables.
    pub fn support_masks(&self) -> Vec<u64> {
        self.gens.iter().map(Monomial::support_mask).collect()
    }

    /// Polarization: map each generator `x^a` to the squarefree monomial
    /// `prod_i prod_{j=1..a_i} x_{i,j}` in a ring with one block of
    /// variables per original variable. Block `i` has
    /// `max(1, max exponent of x_i)` slots, laid out in block order
    /// `x_{1,1}, ..., x_{1,w_1}, x_{2,1}, ...`, so squarefree ideals map
    /// to themselves. Returns the polarized ideal and the number of
    /// added variables. Projective dimension is preserved.
    pub fn polarize_capped(&self, cap: usize) -> Result<(MonomialIdeal, usize)> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("polarization"));
        }
        let n = self.num_vars();
        let widths: Vec<usize> = self.max_exponents().iter().map(|&e| (e as usize).max(1)).collect();
        let total: usize = widths.iter().sum();
        if total > cap {
            return Err(Error::PolarizationTooLarge { required: total, cap });
        }
        let mut offsets = Vec::with_capacity(n);
        let mut off = 0usize;
        for &w in &widths {
            offsets.push(off);
            off += w;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u32; total];
                for (i, &e) in g.exponents().iter().enumerate() {
                    for j in 0..e as usize {
                        exps[offsets[i] + j] = 1;
                    }
                }
                Monomial::new(exps)
            })
            .collect();
        let ring = RingContext::new(total)?;
        Ok((
            MonomialIdeal {
                ring,
                gens: minimal_form(gens),
            },
            total - n,
        ))
    }

    pub fn polarize(&self) -> Result<(MonomialIdeal, usize)> {
        self.polarize_capped(DEFAULT_POLARIZE_CAP)
    }

    /// Parse the ideal text grammar: generators separated by `,`,
    /// factors separated by `*`, each factor `x<index>` or
    /// `x<index>^<exponent>`, whitespace ignored, 1-based indices.
    /// `""` and `"0"` parse to the zero ideal. When `num_vars` is not
    /// given it is inferred as the largest index used.
    pub fn parse(text: &str, num_vars: Option<usize>) -> Result<Self> {
        parse_ideal(text, num_vars)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in &self.gens {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// JSON form `{"num_vars": n, "generators": [[e1, ..., en], ...]}` with
/// generators in canonical order.
impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            num_vars: usize,
            generators: Vec<&'a [u32]>,
        }
        Repr {
            num_vars: self.num_vars(),
            generators: self.gens.iter().map(|g| g.exponents()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            num_vars: usize,
            generators: Vec<Vec<u32>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let ring = RingContext::new(repr.num_vars).map_err(D::Error::custom)?;
        let gens = repr.generators.into_iter().map(Monomial::new).collect();
        MonomialIdeal::minimalize(ring, gens).map_err(D::Error::custom)
    }
}

/// Sort canonically, drop duplicates and absorbed generators. Equal
/// degrees can only absorb by equality, so after dedup it suffices to
/// test divisibility against kept generators of smaller degree.
fn minimal_form(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        let deg = g.degree();
        if kept
            .iter()
            .take_while(|k| k.degree() < deg)
            .any(|k| k.divides(&g))
        {
            continue;
        }
        kept.push(g);
    }
    kept
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: String) -> Error {
        Error::Parse { position: self.pos, message }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: "number out of range".into(),
            })
    }

    /// One factor: `x<index>` or `x<index>^<exponent>`.
    fn factor(&mut self) -> Result<(usize, u32)> {
        match self.peek() {
            Some(b'x') => self.pos += 1,
            _ => return Err(self.error("expected a factor 'x<index>'".into())),
        }
        let index = self.number()?;
        if index == 0 {
            return Err(self.error("variable indices are 1-based".into()));
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.number()?;
            u32::try_from(e).map_err(|_| self.error("exponent out of range".into()))?
        } else {
            1
        };
        Ok((index, exp))
    }

    /// One generator: factors joined by `*`. Repeated variables multiply.
    fn generator(&mut self) -> Result<Vec<(usize, u32)>> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(factors)
    }
}

fn parse_ideal(text: &str, num_vars: Option<usize>) -> Result<MonomialIdeal> {
    let mut parser = Parser::new(text);

    // Empty input and a bare "0" denote the zero ideal.
    if parser.peek().is_none() || (parser.peek() == Some(b'0') && {
        parser.pos += 1;
        let end = parser.peek().is_none();
        if !end {
            parser.pos -= 1;
        }
        end
    }) {
        let n = num_vars.ok_or_else(|| {
            Error::InvalidParameter("cannot infer the variable count of a zero ideal".into())
        })?;
        return Ok(MonomialIdeal::zero(RingContext::new(n)?));
    }

    let mut raw_gens = vec![parser.generator()?];
    while parser.peek() == Some(b',') {
        parser.pos += 1;
        raw_gens.push(parser.generator()?);
    }
    if let Some(_) = parser.peek() {
        return Err(parser.error("unexpected trailing input".into()));
    }

    let max_index = raw_gens
        .iter()
        .flat_map(|g| g.iter().map(|&(i, _)| i))
        .max()
        .unwrap_or(0);
    let n = match num_vars {
        Some(n) => {
            if max_index > n {
                return Err(Error::VariableOutOfRange { index: max_index, num_vars: n });
            }
            n
        }
        None => max_index,
    };
    let ring = RingContext::new(n)?;

    let gens = raw_gens
        .into_iter()
        .map(|factors| {
            let mut exps = vec![0u32; n];
            for (index, e) in factors {
                exps[index - 1] += e;
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::minimalize(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> RingContext {
        RingContext::new(n).unwrap()
    }

    fn mono(n: usize, support: &[usize]) -> Monomial {
        Monomial::from_support(n, support).unwrap()
    }

    fn ideal(n: usize, supports: &[&[usize]]) -> MonomialIdeal {
        let gens = supports.iter().map(|s| mono(n, s)).collect();
        MonomialIdeal::minimalize(ring(n), gens).unwrap()
    }

    /// Generators of `I_3(P_4^2)`: every 3-subset of four vertices.
    fn p4_squared_path_ideal() -> MonomialIdeal {
        ideal(4, &[&[1, 2, 3], &[2, 3, 4], &[1, 3, 4], &[1, 2, 4]])
    }

    #[test]
    fn minimalize_absorbs_multiples() {
        let i = ideal(3, &[&[1, 2], &[1, 2, 3]]);
        assert_eq!(i.generators(), &[mono(3, &[1, 2])]);

        // Canonical order is graded, then lexicographic on exponent
        // vectors, so x2*x3*x4 = (0,1,1,1) precedes x1*x2*x3 = (1,1,1,0).
        let j = ideal(4, &[&[1, 2, 3], &[2, 3, 4], &[1, 2, 3, 4]]);
        assert_eq!(j.generators(), &[mono(4, &[2, 3, 4]), mono(4, &[1, 2, 3])]);
    }

    #[test]
    fn minimalize_empty_is_zero() {
        let z = MonomialIdeal::minimalize(ring(3), vec![]).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn minimalize_rejects_unit() {
        let err = MonomialIdeal::minimalize(ring(2), vec![Monomial::unit(2)]).unwrap_err();
        assert_eq!(err, Error::UnitIdeal);
    }

    #[test]
    fn minimalize_is_idempotent() {
        let i = p4_squared_path_ideal();
        let again = MonomialIdeal::minimalize(i.ring(), i.generators().to_vec()).unwrap();
        assert_eq!(i, again);
    }

    #[test]
    fn contains_by_divisibility() {
        let i = ideal(4, &[&[1, 2, 3]]);
        assert!(i.contains(&mono(4, &[1, 2, 3, 4])).unwrap());
        let z = MonomialIdeal::zero(ring(4));
        assert!(!z.contains(&mono(4, &[1])).unwrap());
    }

    #[test]
    fn contains_rejects_ring_mismatch() {
        let i = ideal(3, &[&[1, 2]]);
        assert!(matches!(
            i.contains(&mono(4, &[1, 2])),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn square_misses_symbolic_witness() {
        // x1^2*x2*x3*x4 is not in the square of the 3-path ideal on four
        // vertices, even though it lies in the second symbolic power.
        let sq = p4_squared_path_ideal().pow(2).unwrap();
        let u = Monomial::new(vec![2, 1, 1, 1]);
        assert!(!sq.contains(&u).unwrap());
    }

    #[test]
    fn sum_examples() {
        let a = ideal(3, &[&[1, 2]]);
        let b = ideal(3, &[&[2, 3]]);
        assert_eq!(a.sum(&b).unwrap(), ideal(3, &[&[1, 2], &[2, 3]]));

        let z = MonomialIdeal::zero(ring(3));
        assert_eq!(a.sum(&z).unwrap(), a);

        let c = ideal(3, &[&[1, 2, 3]]);
        let d = ideal(3, &[&[1]]);
        assert_eq!(c.sum(&d).unwrap(), d);
    }

    #[test]
    fn power_of_principal_ideal() {
        let i = ideal(3, &[&[1, 2, 3]]);
        let sq = i.pow(2).unwrap();
        assert_eq!(sq.generators(), &[Monomial::new(vec![2, 2, 2])]);
        assert_eq!(i.pow(1).unwrap(), i);
    }

    #[test]
    fn power_generator_count_matches_brute_force() {
        // Oracle: enumerate all pairwise products of the four generators
        // and minimalize by divisibility, independent of `pow`.
        let i = p4_squared_path_ideal();
        let gens = i.generators();
        let mut products = Vec::new();
        for a in 0..gens.len() {
            for b in a..gens.len() {
                products.push(gens[a].mul(&gens[b]));
            }
        }
        let oracle = MonomialIdeal::minimalize(i.ring(), products).unwrap();
        let sq = i.pow(2).unwrap();
        assert_eq!(sq, oracle);
    }

    #[test]
    fn power_cap_is_enforced() {
        let i = p4_squared_path_ideal();
        assert!(matches!(
            i.pow_capped(3, 10),
            Err(Error::PowerTooLarge { .. })
        ));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[1, 2, 3]]);
        let colon = i.colon_monomial(&mono(3, &[2])).unwrap();
        assert_eq!(colon, ideal(3, &[&[1, 3]]));
        assert_eq!(i.colon_monomial(&Monomial::unit(3)).unwrap(), i);
    }

    #[test]
    fn colon_by_contained_monomial_is_unit() {
        let i = ideal(2, &[&[1]]);
        assert_eq!(i.colon_monomial(&mono(2, &[1])).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn intersection_examples() {
        let a = ideal(2, &[&[1]]);
        let b = ideal(2, &[&[2]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 2]]));

        let i = p4_squared_path_ideal();
        assert_eq!(i.intersect(&i).unwrap(), i);
    }

    #[test]
    fn pairwise_primes_intersect_to_path_ideal() {
        // The six primes (x_i, x_j) on four variables cut out exactly the
        // 3-path ideal of the squared path on four vertices.
        let mut acc: Option<MonomialIdeal> = None;
        for i in 1..=4usize {
            for j in (i + 1)..=4 {
                let p = ideal(4, &[&[i], &[j]]);
                acc = Some(match acc {
                    None => p,
                    Some(prev) => prev.intersect(&p).unwrap(),
                });
            }
        }
        assert_eq!(acc.unwrap(), p4_squared_path_ideal());
    }

    #[test]
    fn colon_max_ideal_of_edge() {
        // ((x1*x2) : (x1, x2)) = (x1*x2): brute-force check over the
        // degree-bounded box confirms no smaller monomial qualifies.
        let i = ideal(2, &[&[1, 2]]);
        let c = i.colon_max_ideal().unwrap();
        assert_eq!(c, i);

        for e1 in 0..=2u32 {
            for e2 in 0..=2u32 {
                let u = Monomial::new(vec![e1, e2]);
                let in_colon = [1, 2].iter().all(|&j| {
                    let xj = Monomial::variable(2, j).unwrap();
                    i.contains(&u.mul(&xj)).unwrap()
                });
                assert_eq!(c.contains(&u).unwrap(), in_colon, "u = {u}");
            }
        }
    }

    #[test]
    fn colon_max_ideal_of_zero_is_zero() {
        let z = MonomialIdeal::zero(ring(3));
        assert!(z.colon_max_ideal().unwrap().is_zero());
    }

    #[test]
    fn cube_socle_contains_full_square_monomial() {
        let cube = p4_squared_path_ideal().pow(3).unwrap();
        let w = Monomial::new(vec![2, 2, 2, 2]);
        assert!(!cube.contains(&w).unwrap());
        let socle = cube.colon_max_ideal().unwrap();
        assert!(socle.contains(&w).unwrap());
    }

    #[test]
    fn polarize_one_variable_square() {
        let i = MonomialIdeal::minimalize(ring(1), vec![Monomial::new(vec![2])]).unwrap();
        let (pol, added) = i.polarize().unwrap();
        assert_eq!(added, 1);
        assert_eq!(pol, ideal(2, &[&[1, 2]]));
    }

    #[test]
    fn polarize_fixes_squarefree_ideals() {
        let i = p4_squared_path_ideal();
        let (pol, added) = i.polarize().unwrap();
        assert_eq!(added, 0);
        assert_eq!(pol, i);
    }

    #[test]
    fn polarize_respects_cap() {
        let i = MonomialIdeal::minimalize(ring(1), vec![Monomial::new(vec![30])]).unwrap();
        assert!(matches!(
            i.polarize(),
            Err(Error::PolarizationTooLarge { required: 30, cap: 24 })
        ));
    }

    #[test]
    fn parse_basic_ideals() {
        let i = MonomialIdeal::parse("x1*x2*x3", None).unwrap();
        assert_eq!(i, ideal(3, &[&[1, 2, 3]]));

        let j = MonomialIdeal::parse("x1^2*x2, x2*x3", None).unwrap();
        assert_eq!(j.generators().len(), 2);
        assert!(!j.is_squarefree());

        let sq = MonomialIdeal::parse("x1*x1", None).unwrap();
        assert_eq!(sq.generators(), &[Monomial::new(vec![2])]);
    }

    #[test]
    fn parse_zero_and_empty() {
        assert!(MonomialIdeal::parse("0", Some(3)).unwrap().is_zero());
        assert!(MonomialIdeal::parse("  ", Some(2)).unwrap().is_zero());
        assert!(MonomialIdeal::parse("", None).is_err());
    }

    #[test]
    fn parse_reports_positions() {
        match MonomialIdeal::parse("x1*y2", None) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match MonomialIdeal::parse("x1,", None) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_respects_explicit_vars() {
        let i = MonomialIdeal::parse("x1*x2", Some(5)).unwrap();
        assert_eq!(i.num_vars(), 5);
        assert!(matches!(
            MonomialIdeal::parse("x9", Some(4)),
            Err(Error::VariableOutOfRange { index: 9, num_vars: 4 })
        ));
    }

    #[test]
    fn print_parse_roundtrip() {
        let texts = ["x1*x2*x3, x2*x3*x4", "x1^2*x2, x3^4", "0"];
        for text in texts {
            let i = MonomialIdeal::parse(text, Some(4)).unwrap();
            let printed = i.to_string();
            let back = MonomialIdeal::parse(&printed, Some(4)).unwrap();
            assert_eq!(i, back, "roundtrip through {printed:?}");
        }
    }

    #[test]
    fn json_roundtrip() {
        let i = p4_squared_path_ideal();
        let json = serde_json::to_string(&i).unwrap();
        assert!(json.starts_with("{\"num_vars\":4,\"generators\":"));
        let back: MonomialIdeal = serde_json::from_str(&json).unwrap();
        assert_eq!(i, back);
    }
}
