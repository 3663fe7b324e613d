//! The truncated cycle-index series ring.
//!
//! A [`CycleIndex`] is a finite sum of power-sum monomials `p[λ]` with exact
//! rational coefficients, truncated at a fixed total degree. All downstream
//! series are graded by vertex count, so one truncation bound is threaded
//! through every operation. No floating point appears anywhere.

use std::collections::hash_map::Entry as HashEntry;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::{PowerSeries, SeriesRole};

/// A truncated series in the power-sum indeterminates `p[1], p[2], ...`
/// with exact rational coefficients. Iteration over terms is always in the
/// canonical order (ascending degree, then the part lists lexicographically),
/// so output derived from a series is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct CycleIndex {
    terms: BTreeMap<Partition, BigRational>,
    truncation: u32,
}

impl CycleIndex {
    pub fn zero(truncation: u32) -> Self {
        CycleIndex { terms: BTreeMap::new(), truncation }
    }

    /// The constant series 1.
    pub fn one(truncation: u32) -> Self {
        CycleIndex::monomial(Partition::empty(), BigRational::one(), truncation)
    }

    /// The series `p[1]` (the singleton species X).
    pub fn p1(truncation: u32) -> Self {
        CycleIndex::monomial(Partition::single(1), BigRational::one(), truncation)
    }

    /// A single term `coeff * p[partition]`. Terms beyond the truncation are
    /// dropped, matching the behavior of every ring operation.
    pub fn monomial(partition: Partition, coeff: BigRational, truncation: u32) -> Self {
        let mut terms = BTreeMap::new();
        if partition.degree() <= truncation && !coeff.is_zero() {
            terms.insert(partition, coeff);
        }
        CycleIndex { terms, truncation }
    }

    pub fn from_terms<I>(truncation: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut out = CycleIndex::zero(truncation);
        for (partition, coeff) in terms {
            out.accumulate(partition, coeff);
        }
        out
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    /// The coefficient of `p[partition]` (zero if absent).
    pub fn coefficient(&self, partition: &Partition) -> BigRational {
        self.terms.get(partition).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Partition::empty())
    }

    /// Drops terms above `truncation` and lowers the bound.
    pub fn truncated(&self, truncation: u32) -> CycleIndex {
        let terms = self
            .terms
            .iter()
            .take_while(|(p, _)| p.degree() <= truncation)
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        CycleIndex { terms, truncation }
    }

    /// The homogeneous component of total degree `degree`.
    pub fn homogeneous(&self, degree: u32) -> CycleIndex {
        let terms = self
            .terms
            .iter()
            .skip_while(|(p, _)| p.degree() < degree)
            .take_while(|(p, _)| p.degree() == degree)
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        CycleIndex { terms, truncation: self.truncation }
    }

    fn accumulate(&mut self, partition: Partition, coeff: BigRational) {
        if coeff.is_zero() || partition.degree() > self.truncation {
            return;
        }
        match self.terms.entry(partition) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn add_assign_scaled(&mut self, other: &CycleIndex, scale: &BigRational) {
        if scale.is_zero() {
            return;
        }
        for (partition, coeff) in &other.terms {
            if partition.degree() > self.truncation {
                break;
            }
            self.accumulate(partition.clone(), coeff * scale);
        }
    }

    /// Coefficient-wise sum. The result takes the smaller truncation.
    pub fn add(&self, other: &CycleIndex) -> CycleIndex {
        let truncation = self.truncation.min(other.truncation);
        let mut out = self.truncated(truncation);
        out.add_assign_scaled(other, &BigRational::one());
        out
    }

    pub fn sub(&self, other: &CycleIndex) -> CycleIndex {
        let truncation = self.truncation.min(other.truncation);
        let mut out = self.truncated(truncation);
        out.add_assign_scaled(other, &-BigRational::one());
        out
    }

    pub fn scale(&self, scale: &BigRational) -> CycleIndex {
        if scale.is_zero() {
            return CycleIndex::zero(self.truncation);
        }
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| (p.clone(), c * scale))
            .collect();
        CycleIndex { terms, truncation: self.truncation }
    }

    /// Product truncated at total degree `truncation`. The product of two
    /// monomials `p[μ]·p[ν]` is `p[μ∪ν]`.
    pub fn mul(&self, other: &CycleIndex, truncation: u32) -> CycleIndex {
        debug_assert!(truncation <= self.truncation.min(other.truncation));
        let mut out = CycleIndex::zero(truncation);
        let rhs: Vec<(&Partition, &BigRational)> = other
            .terms
            .iter()
            .take_while(|(p, _)| p.degree() <= truncation)
            .collect();
        let rhs_min = match rhs.first() {
            Some((p, _)) => p.degree(),
            None => return out,
        };
        for (pa, ca) in &self.terms {
            if pa.degree() + rhs_min > truncation {
                break;
            }
            for (pb, cb) in &rhs {
                if pa.degree() + pb.degree() > truncation {
                    break;
                }
                out.accumulate(pa.union(pb), ca * *cb);
            }
        }
        out
    }

    /// Substitutes `p[j] -> p[j*k]`, dropping terms beyond the truncation.
    pub fn index_scaled(&self, k: u32, truncation: u32) -> CycleIndex {
        assert!(k >= 1);
        let terms = self
            .terms
            .iter()
            .take_while(|(p, _)| p.degree() * k <= truncation)
            .map(|(p, c)| (p.scaled(k), c.clone()))
            .collect();
        CycleIndex { terms, truncation }
    }

    /// Plethysm `self ∘ g`: each `p[m]` in `self` is replaced by the
    /// index-scaled copy of `g` under `p[j] -> p[j*m]`. Fails if `g` has a
    /// nonzero constant term.
    pub fn plethysm(&self, g: &CycleIndex, truncation: u32) -> Result<CycleIndex> {
        debug_assert!(truncation <= self.truncation.min(g.truncation));
        if !g.constant_term().is_zero() {
            return Err(Error::ConstantTermInComposition);
        }
        let table = SubstitutionTable::uniform(g, truncation);
        Ok(plethysm_with(self, &table, truncation))
    }

    /// Formal partial derivative with respect to `p[1]`; the truncation
    /// drops by one.
    pub fn derivative_p1(&self) -> CycleIndex {
        let truncation = self.truncation.saturating_sub(1);
        let mut out = CycleIndex::zero(truncation);
        for (partition, coeff) in &self.terms {
            let ones = partition.multiplicity(1);
            if ones == 0 {
                continue;
            }
            if let Some(reduced) = partition.without_one(1) {
                out.accumulate(reduced, coeff * BigInt::from(ones));
            }
        }
        out
    }

    /// Pointing: `p[1] * d/dp[1]`, which rescales each term by its
    /// multiplicity of part 1. The truncation is preserved.
    pub fn pointed(&self) -> CycleIndex {
        let mut out = CycleIndex::zero(self.truncation);
        for (partition, coeff) in &self.terms {
            let ones = partition.multiplicity(1);
            if ones == 0 {
                continue;
            }
            out.accumulate(partition.clone(), coeff * BigInt::from(ones));
        }
        out
    }

    fn check_linear_unit(&self) -> Result<()> {
        if !self.constant_term().is_zero() {
            return Err(Error::InverseNotApplicable);
        }
        let degree_one = self.homogeneous(1);
        if degree_one.coefficient(&Partition::single(1)) != BigRational::one()
            || degree_one.num_terms() != 1
        {
            return Err(Error::InverseNotApplicable);
        }
        Ok(())
    }

    /// Compositional inverse: returns `g` with `self ∘ g = p[1]` up to the
    /// requested degree, by the degree-by-degree triangular solve. Requires
    /// `self = p[1] + (degree ≥ 2 terms)`.
    pub fn compositional_inverse(&self, truncation: u32) -> Result<CycleIndex> {
        self.check_linear_unit()?;
        debug_assert!(truncation <= self.truncation);
        let mut inverse = CycleIndex::p1(truncation);
        if truncation < 2 {
            return Ok(inverse);
        }
        let tail = self.sub(&CycleIndex::p1(self.truncation)).truncated(truncation);
        for degree in 2..=truncation {
            let image = tail.plethysm(&inverse, degree)?;
            inverse.add_assign_scaled(&image.homogeneous(degree), &-BigRational::one());
        }
        Ok(inverse)
    }

    /// Series division: returns `s` with `s * w = self` up to degree
    /// `truncation + 1`, where `w = p[1] + (higher)`. Solved degree by
    /// degree; each step divides a homogeneous polynomial by the monomial
    /// `p[1]`, and a monomial with no part 1 raises
    /// [`Error::NotDivisibleByP1`].
    pub fn divide(&self, w: &CycleIndex, truncation: u32) -> Result<CycleIndex> {
        w.check_linear_unit()?;
        debug_assert!(truncation < self.truncation.min(w.truncation));
        let mut quotient = CycleIndex::zero(truncation);
        let mut partial = CycleIndex::zero(truncation + 1);
        let w_full = w.truncated(truncation + 1);
        for degree in 0..=truncation {
            let mut row = CycleIndex::zero(truncation + 1);
            let target = self.homogeneous(degree + 1);
            let correction = partial.homogeneous(degree + 1);
            for (partition, coeff) in target.sub(&correction).terms() {
                match partition.without_one(1) {
                    Some(reduced) => row.accumulate(reduced, coeff.clone()),
                    None => return Err(Error::NotDivisibleByP1 { degree: degree + 1 }),
                }
            }
            if degree < truncation {
                partial.add_assign_scaled(&row.mul(&w_full, truncation + 1), &BigRational::one());
            }
            quotient.add_assign_scaled(&row, &BigRational::one());
        }
        Ok(quotient)
    }

    /// Ordinary generating function for unlabeled structures: substitutes
    /// `p[i] -> x^i`, so the monomial `p[λ]` contributes to `x^(deg λ)`.
    pub fn ogf(&self, truncation: u32) -> PowerSeries {
        debug_assert!(truncation <= self.truncation);
        let mut coeffs = vec![BigRational::zero(); truncation as usize + 1];
        for (partition, coeff) in &self.terms {
            let degree = partition.degree();
            if degree > truncation {
                break;
            }
            coeffs[degree as usize] += coeff;
        }
        PowerSeries::from_coefficients(coeffs, SeriesRole::Ogf)
    }

    /// Exponential generating function: keeps only the `p[1]^n` monomials
    /// (`p[1] = x`, all other `p[k] = 0`). The labeled count at size n is
    /// `n!` times the returned coefficient.
    pub fn egf(&self, truncation: u32) -> PowerSeries {
        debug_assert!(truncation <= self.truncation);
        let mut coeffs = vec![BigRational::zero(); truncation as usize + 1];
        for degree in 0..=truncation {
            let key = if degree == 0 {
                Partition::empty()
            } else {
                Partition::new(vec![1; degree as usize])
            };
            if let Some(coeff) = self.terms.get(&key) {
                coeffs[degree as usize] = coeff.clone();
            }
        }
        PowerSeries::from_coefficients(coeffs, SeriesRole::Egf)
    }

    /// Serializes to the line-based cache format. The output is in canonical
    /// order and round-trips exactly through [`CycleIndex::from_cache_text`].
    pub fn to_cache_text(&self) -> String {
        let mut out = format!("truncation={}\n", self.truncation);
        for (partition, coeff) in &self.terms {
            let parts: Vec<String> = partition.parts().iter().map(|p| p.to_string()).collect();
            out.push_str(&format!(
                "deg={} parts={} coeff={}/{}\n",
                partition.degree(),
                parts.join(","),
                coeff.numer(),
                coeff.denom()
            ));
        }
        out
    }

    pub fn from_cache_text(text: &str) -> Result<CycleIndex> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Cache("empty input".into()))?;
        let truncation: u32 = header
            .strip_prefix("truncation=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Cache(format!("bad header line `{header}`")))?;
        let mut series = CycleIndex::zero(truncation);
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let (degree, partition, coeff) = parse_term_line(line)?;
            if partition.degree() != degree {
                return Err(Error::Cache(format!("degree mismatch in `{line}`")));
            }
            if degree > truncation {
                return Err(Error::Cache(format!("term above truncation in `{line}`")));
            }
            series.accumulate(partition, coeff);
        }
        Ok(series)
    }
}

fn parse_term_line(line: &str) -> Result<(u32, Partition, BigRational)> {
    let bad = || Error::Cache(format!("bad term line `{line}`"));
    let rest = line.strip_prefix("deg=").ok_or_else(bad)?;
    let (deg_str, rest) = rest.split_once(' ').ok_or_else(bad)?;
    let degree: u32 = deg_str.parse().map_err(|_| bad())?;
    let rest = rest.strip_prefix("parts=").ok_or_else(bad)?;
    let (parts_str, rest) = rest.split_once(' ').ok_or_else(bad)?;
    let parts: Vec<u32> = if parts_str.is_empty() {
        Vec::new()
    } else {
        parts_str
            .split(',')
            .map(|p| p.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    let coeff_str = rest.strip_prefix("coeff=").ok_or_else(bad)?;
    let (numer_str, denom_str) = coeff_str.split_once('/').ok_or_else(bad)?;
    let numer = BigInt::from_str(numer_str).map_err(|_| bad())?;
    let denom = BigInt::from_str(denom_str).map_err(|_| bad())?;
    if denom <= BigInt::zero() {
        return Err(bad());
    }
    Ok((degree, Partition::new(parts), BigRational::new(numer, denom)))
}

/// The per-part replacement series used by plethysm: `table[k-1]` is what
/// `p[k]` becomes, already index-scaled.
pub(crate) struct SubstitutionTable {
    scaled: Vec<Rc<CycleIndex>>,
}

impl SubstitutionTable {
    /// Ordinary plethysm: `p[k]` becomes `g(p[k], p[2k], ...)`.
    pub(crate) fn uniform(g: &CycleIndex, truncation: u32) -> Self {
        let scaled = (1..=truncation.max(1))
            .map(|k| Rc::new(g.index_scaled(k, truncation)))
            .collect();
        SubstitutionTable { scaled }
    }

    /// One series per part index, chosen by the caller (used for the
    /// two-element-group plethysm, where the choice depends on parity).
    pub(crate) fn from_choice<F>(choose: F, truncation: u32) -> Self
    where
        F: Fn(u32) -> CycleIndex,
    {
        let scaled = (1..=truncation.max(1))
            .map(|k| Rc::new(choose(k).index_scaled(k, truncation)))
            .collect();
        SubstitutionTable { scaled }
    }

    fn series_for(&self, part: u32) -> &Rc<CycleIndex> {
        &self.scaled[(part - 1) as usize]
    }
}

struct PlethysmState<'a> {
    table: &'a SubstitutionTable,
    truncation: u32,
    // (part, exponent) -> series_for(part)^exponent
    powers: HashMap<(u32, u32), Rc<CycleIndex>>,
    // product over the parts of a partition whose smallest part is >= 2;
    // these suffixes recur across the monomials of the outer series
    suffixes: HashMap<Partition, Rc<CycleIndex>>,
    one: Rc<CycleIndex>,
}

impl PlethysmState<'_> {
    fn power(&mut self, part: u32, exponent: u32) -> Rc<CycleIndex> {
        if let Some(hit) = self.powers.get(&(part, exponent)) {
            return hit.clone();
        }
        let value = if exponent == 1 {
            self.table.series_for(part).clone()
        } else {
            let lower = self.power(part, exponent - 1);
            Rc::new(lower.mul(self.table.series_for(part), self.truncation))
        };
        match self.powers.entry((part, exponent)) {
            HashEntry::Vacant(slot) => slot.insert(value).clone(),
            HashEntry::Occupied(slot) => slot.get().clone(),
        }
    }

    // Value of a monomial all of whose parts are >= 2, memoized.
    fn suffix_value(&mut self, partition: &Partition) -> Rc<CycleIndex> {
        if partition.is_empty() {
            return self.one.clone();
        }
        if let Some(hit) = self.suffixes.get(partition) {
            return hit.clone();
        }
        let smallest = *partition.parts().last().expect("nonempty");
        let exponent = partition.multiplicity(smallest);
        let head = Partition::new(
            partition.parts()[..partition.len() - exponent as usize].to_vec(),
        );
        let power = self.power(smallest, exponent);
        let value = if head.is_empty() {
            power
        } else {
            let head_value = self.suffix_value(&head);
            Rc::new(head_value.mul(&power, self.truncation))
        };
        self.suffixes.insert(partition.clone(), value.clone());
        value
    }

    fn monomial_value(&mut self, partition: &Partition) -> Rc<CycleIndex> {
        let ones = partition.multiplicity(1);
        let suffix = Partition::new(partition.parts()[..partition.len() - ones as usize].to_vec());
        if ones == 0 {
            return self.suffix_value(&suffix);
        }
        let ones_power = self.power(1, ones);
        if suffix.is_empty() {
            return ones_power;
        }
        let suffix_value = self.suffix_value(&suffix);
        Rc::new(suffix_value.mul(&ones_power, self.truncation))
    }
}

pub(crate) fn plethysm_with(
    f: &CycleIndex,
    table: &SubstitutionTable,
    truncation: u32,
) -> CycleIndex {
    let mut state = PlethysmState {
        table,
        truncation,
        powers: HashMap::new(),
        suffixes: HashMap::new(),
        one: Rc::new(CycleIndex::one(truncation)),
    };
    let mut out = CycleIndex::zero(truncation);
    for (partition, coeff) in &f.terms {
        // every replacement series has min degree >= its part index, so a
        // monomial of degree d maps to a series of min degree >= d
        if partition.degree() > truncation {
            break;
        }
        let value = state.monomial_value(partition);
        out.add_assign_scaled(&value, coeff);
    }
    out
}

impl fmt::Display for CycleIndex {
    /// Human-readable power-sum rendering in canonical term order, e.g.
    /// `1/2*p[1]^2 + 1/2*p[2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (partition, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = coeff.abs();
            let mut wrote_scalar = false;
            if partition.is_empty() || !magnitude.is_one() {
                if magnitude.denom().is_one() {
                    write!(f, "{}", magnitude.numer())?;
                } else {
                    write!(f, "{}/{}", magnitude.numer(), magnitude.denom())?;
                }
                wrote_scalar = true;
            }
            if !partition.is_empty() {
                if wrote_scalar {
                    write!(f, "*")?;
                }
                for (j, (part, mult)) in partition.multiplicities().enumerate() {
                    if j > 0 {
                        write!(f, "*")?;
                    }
                    if mult == 1 {
                        write!(f, "p[{part}]")?;
                    } else {
                        write!(f, "p[{part}]^{mult}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleIndex[N={}]({})", self.truncation, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn series(truncation: u32, terms: &[(&[u32], (i64, i64))]) -> CycleIndex {
        CycleIndex::from_terms(
            truncation,
            terms.iter().map(|(parts, (n, d))| {
                (Partition::new(parts.to_vec()), rat(*n, *d))
            }),
        )
    }

    /// Z_E truncated: sum of p[λ]/z(λ) over all partitions of degree ≤ n.
    fn set_species(truncation: u32) -> CycleIndex {
        let mut out = CycleIndex::zero(truncation);
        for degree in 0..=truncation {
            for partition in partitions_of(degree) {
                let z = partition.z();
                out.accumulate(partition, BigRational::new(BigInt::one(), z));
            }
        }
        out
    }

    #[test]
    fn add_and_scale() {
        let p1 = CycleIndex::p1(4);
        let sum = p1.add(&p1);
        assert_eq!(sum.coefficient(&Partition::single(1)), rat(2, 1));

        let p2 = CycleIndex::monomial(Partition::single(2), rat(1, 1), 4);
        assert!(p2.scale(&BigRational::zero()).is_zero());

        let a = series(4, &[(&[1, 1], (1, 2)), (&[2], (1, 2))]);
        let b = series(4, &[(&[1, 1], (1, 2)), (&[2], (-1, 2))]);
        let expected = series(4, &[(&[1, 1], (1, 1))]);
        assert_eq!(a.add(&b), expected);
    }

    #[test]
    fn mul_merges_parts() {
        let p1 = CycleIndex::p1(4);
        let sq = p1.mul(&p1, 4);
        assert_eq!(sq, series(4, &[(&[1, 1], (1, 1))]));

        let p2 = CycleIndex::monomial(Partition::single(2), rat(1, 1), 6);
        let p11 = series(6, &[(&[1, 1], (1, 1))]);
        let product = p2.mul(&p11, 6);
        assert_eq!(product, series(6, &[(&[2, 1, 1], (1, 1))]));
    }

    #[test]
    fn mul_truncates_and_cancels() {
        // (1 + p1)(1 - p1 + p1^2) = 1 + p1^3, so truncating at 2 leaves 1
        let a = series(2, &[(&[], (1, 1)), (&[1], (1, 1))]);
        let b = series(2, &[(&[], (1, 1)), (&[1], (-1, 1)), (&[1, 1], (1, 1))]);
        let product = a.mul(&b, 2);
        assert_eq!(product, CycleIndex::one(2));
    }

    #[test]
    fn plethysm_single_monomials() {
        let p2 = CycleIndex::monomial(Partition::single(2), rat(1, 1), 6);
        let p3 = CycleIndex::monomial(Partition::single(3), rat(1, 1), 6);
        let composed = p2.plethysm(&p3, 6).unwrap();
        assert_eq!(composed, CycleIndex::monomial(Partition::single(6), rat(1, 1), 6));
    }

    #[test]
    fn plethysm_identity_both_sides() {
        let g = series(5, &[(&[1], (2, 1)), (&[2], (1, 3)), (&[2, 1], (-1, 2))]);
        let p1 = CycleIndex::p1(5);
        assert_eq!(p1.plethysm(&g, 5).unwrap(), g);
        assert_eq!(g.plethysm(&p1, 5).unwrap(), g);
    }

    #[test]
    fn plethysm_expands_e2_of_sum() {
        // (p1^2/2 + p2/2) ∘ (p1 + p2) = (p1^2 + 2 p1 p2 + p2^2 + p2 + p4)/2
        let e2 = series(4, &[(&[1, 1], (1, 2)), (&[2], (1, 2))]);
        let g = series(4, &[(&[1], (1, 1)), (&[2], (1, 1))]);
        let got = e2.plethysm(&g, 4).unwrap();
        let expected = series(
            4,
            &[
                (&[1, 1], (1, 2)),
                (&[2, 1], (1, 1)),
                (&[2, 2], (1, 2)),
                (&[2], (1, 2)),
                (&[4], (1, 2)),
            ],
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn plethysm_rejects_constant_terms() {
        let f = CycleIndex::p1(3);
        let g = CycleIndex::one(3);
        assert_eq!(f.plethysm(&g, 3), Err(Error::ConstantTermInComposition));
    }

    #[test]
    fn derivative_examples() {
        let f = series(4, &[(&[2, 1, 1], (1, 1))]);
        let d = f.derivative_p1();
        assert_eq!(d, series(3, &[(&[2, 1], (2, 1))]));

        let p2 = CycleIndex::monomial(Partition::single(2), rat(1, 1), 4);
        assert!(p2.derivative_p1().is_zero());
    }

    #[test]
    fn set_species_is_its_own_derivative() {
        let e = set_species(4);
        assert_eq!(e.derivative_p1(), set_species(3));
    }

    #[test]
    fn pointing_examples() {
        let p1 = CycleIndex::p1(4);
        assert_eq!(p1.pointed(), p1);

        let e2 = series(4, &[(&[1, 1], (1, 2)), (&[2], (1, 2))]);
        assert_eq!(e2.pointed(), series(4, &[(&[1, 1], (1, 1))]));

        assert!(CycleIndex::one(4).pointed().is_zero());
    }

    #[test]
    fn compositional_inverse_of_p1() {
        let p1 = CycleIndex::p1(4);
        assert_eq!(p1.compositional_inverse(4).unwrap(), p1);
    }

    #[test]
    fn compositional_inverse_of_univariate_quadratic() {
        // inverse of p1 + p1^2 is p1 - p1^2 + 2 p1^3 - 5 p1^4
        let f = series(4, &[(&[1], (1, 1)), (&[1, 1], (1, 1))]);
        let inverse = f.compositional_inverse(4).unwrap();
        let expected = series(
            4,
            &[
                (&[1], (1, 1)),
                (&[1, 1], (-1, 1)),
                (&[1, 1, 1], (2, 1)),
                (&[1, 1, 1, 1], (-5, 1)),
            ],
        );
        assert_eq!(inverse, expected);
        let round_trip = f.plethysm(&inverse, 4).unwrap();
        assert_eq!(round_trip, CycleIndex::p1(4));
    }

    #[test]
    fn compositional_inverse_rejects_bad_linear_parts() {
        let no_linear = series(4, &[(&[2], (1, 1))]);
        assert_eq!(no_linear.compositional_inverse(4), Err(Error::InverseNotApplicable));
        let wrong_unit = series(4, &[(&[1], (2, 1))]);
        assert_eq!(wrong_unit.compositional_inverse(4), Err(Error::InverseNotApplicable));
        let constant = series(4, &[(&[], (1, 1)), (&[1], (1, 1))]);
        assert_eq!(constant.compositional_inverse(4), Err(Error::InverseNotApplicable));
    }

    #[test]
    fn divide_examples() {
        let p1 = CycleIndex::p1(4);
        assert_eq!(p1.divide(&p1, 3).unwrap(), CycleIndex::one(3));

        // p1 / (p1 + p1^2) = 1 - p1 + p1^2 - p1^3
        let w = series(4, &[(&[1], (1, 1)), (&[1, 1], (1, 1))]);
        let q = p1.divide(&w, 3).unwrap();
        let expected = series(
            3,
            &[
                (&[], (1, 1)),
                (&[1], (-1, 1)),
                (&[1, 1], (1, 1)),
                (&[1, 1, 1], (-1, 1)),
            ],
        );
        assert_eq!(q, expected);
        // multiply back: q * w = p1 through degree 4 (q has no degree-4 part,
        // so re-tagging its truncation is sound for this check)
        let q4 = CycleIndex::from_terms(4, q.terms().map(|(p, c)| (p.clone(), c.clone())));
        assert_eq!(q4.mul(&w, 4), CycleIndex::p1(4));
    }

    #[test]
    fn divide_reports_failure() {
        let target = CycleIndex::monomial(Partition::single(2), rat(1, 1), 4);
        let w = CycleIndex::p1(4);
        assert_eq!(
            target.divide(&w, 3),
            Err(Error::NotDivisibleByP1 { degree: 2 })
        );
    }

    #[test]
    fn ogf_of_set_species_is_all_ones() {
        let e = set_species(6);
        let ogf = e.ogf(6);
        for degree in 0..=6 {
            assert_eq!(*ogf.coefficient(degree), rat(1, 1), "degree {degree}");
        }
    }

    #[test]
    fn ogf_collapses_by_degree() {
        let e2 = series(4, &[(&[1, 1], (1, 2)), (&[2], (1, 2))]);
        let ogf = e2.ogf(4);
        assert_eq!(*ogf.coefficient(2), rat(1, 1));
        assert_eq!(*ogf.coefficient(1), rat(0, 1));
    }

    #[test]
    fn egf_keeps_only_pure_p1_powers() {
        let e = set_species(5);
        let egf = e.egf(5);
        for degree in 0..=5 {
            assert_eq!(egf.labeled_count(degree).unwrap(), BigInt::one());
        }

        let half_p2 = series(4, &[(&[2], (1, 2))]);
        assert_eq!(half_p2.egf(4).labeled_count(2).unwrap(), BigInt::zero());
    }

    #[test]
    fn cache_text_round_trips() {
        let f = series(
            5,
            &[
                (&[], (1, 1)),
                (&[1], (2, 1)),
                (&[2, 1, 1], (-7, 3)),
                (&[5], (1, 120)),
            ],
        );
        let text = f.to_cache_text();
        let back = CycleIndex::from_cache_text(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_cache_text(), text);
    }

    #[test]
    fn cache_text_format_is_stable() {
        let f = series(2, &[(&[1, 1], (1, 2)), (&[2], (1, 2)), (&[1], (1, 1))]);
        assert_eq!(
            f.to_cache_text(),
            "truncation=2\ndeg=1 parts=1 coeff=1/1\ndeg=2 parts=1,1 coeff=1/2\ndeg=2 parts=2 coeff=1/2\n"
        );
        let empty = CycleIndex::zero(3);
        assert_eq!(empty.to_cache_text(), "truncation=3\n");
        assert_eq!(CycleIndex::from_cache_text("truncation=3\n").unwrap(), empty);
    }

    #[test]
    fn cache_text_rejects_garbage() {
        assert!(CycleIndex::from_cache_text("").is_err());
        assert!(CycleIndex::from_cache_text("truncation=x\n").is_err());
        assert!(CycleIndex::from_cache_text("truncation=2\ndeg=1 parts=2 coeff=1/1\n").is_err());
        assert!(CycleIndex::from_cache_text("truncation=2\ndeg=5 parts=5 coeff=1/1\n").is_err());
        assert!(CycleIndex::from_cache_text("truncation=2\ndeg=1 parts=1 coeff=1/0\n").is_err());
    }

    #[test]
    fn display_rendering() {
        assert_eq!(CycleIndex::p1(3).to_string(), "p[1]");
        let e2 = series(2, &[(&[1, 1], (1, 2)), (&[2], (1, 2))]);
        assert_eq!(e2.to_string(), "1/2*p[1]^2 + 1/2*p[2]");
        assert_eq!(CycleIndex::zero(2).to_string(), "0");
        let omega2 = series(2, &[(&[1], (1, 1)), (&[1, 1], (-1, 2)), (&[2], (-1, 2))]);
        assert_eq!(omega2.to_string(), "p[1] - 1/2*p[1]^2 - 1/2*p[2]");
    }
}
