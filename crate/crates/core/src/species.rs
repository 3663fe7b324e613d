//! The enumeration pipeline for bicolored and bipartite graphs.
//!
//! Bicolored graphs carry the color-swapping action of the two-element
//! group, so their cycle index has an `e` slot and a `τ` slot, both built
//! here from first principles as sums over partitions. Taking the
//! combinatorial logarithm gives connected bicolored graphs, averaging the
//! slots gives connected bipartite graphs, composing with the set species
//! gives all bipartite graphs, and the block functional equations give
//! 2-connected ("nonseparable") bipartite graphs.
//!
//! A [`SpeciesCatalog`] memoizes every named series by `(name, truncation)`
//! and can persist them to disk in the text cache format.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, mobius};
use crate::cycle_index::CycleIndex;
use crate::error::{Error, Result};
use crate::gamma::TwoGroupCycleIndex;
use crate::partition::{partitions_of, Partition};
use crate::series::{PowerSeries, SeriesRole};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions_with_z(max_degree: u32) -> Vec<Vec<(Partition, BigInt)>> {
    (0..=max_degree)
        .map(|d| {
            partitions_of(d)
                .into_iter()
                .map(|p| {
                    let z = p.z();
                    (p, z)
                })
                .collect()
        })
        .collect()
}

/// Number of edge orbits of a color-preserving automorphism with white
/// cycles `mu` and black cycles `nu`: Σ gcd(i, j) over all part pairs.
fn color_preserving_orbit_count(mu: &Partition, nu: &Partition) -> u64 {
    let mut total = 0u64;
    for &i in mu.parts() {
        for &j in nu.parts() {
            total += gcd(i, j) as u64;
        }
    }
    total
}

/// Number of edge orbits of a color-reversing automorphism whose cycles
/// have semilengths `lambda`: ⌈λi/2⌉ within each cycle plus gcd(λi, λj)
/// between cycles.
fn color_reversing_orbit_count(lambda: &Partition) -> u64 {
    let parts = lambda.parts();
    let mut total = 0u64;
    for (i, &a) in parts.iter().enumerate() {
        total += a.div_ceil(2) as u64;
        for &b in &parts[i + 1..] {
            total += gcd(a, b) as u64;
        }
    }
    total
}

fn power_of_two(exponent: u64) -> BigInt {
    BigInt::one() << exponent
}

/// Cycle index of bicolored graphs at the identity group element: for each
/// `n` with `1 ≤ n ≤ truncation`, the sum over ordered pairs of partitions
/// `(μ, ν)` with `μ ∪ ν ⊢ n` of `p[μ∪ν] / (z(μ) z(ν)) · Π 2^gcd(μi, νj)`.
/// The white/black split is ordered, and the empty graph is omitted.
pub fn bc_e(truncation: u32) -> CycleIndex {
    let table = partitions_with_z(truncation);
    let mut terms = Vec::new();
    for n in 1..=truncation {
        for white_size in 0..=n {
            let black_size = n - white_size;
            for (mu, z_mu) in &table[white_size as usize] {
                for (nu, z_nu) in &table[black_size as usize] {
                    let orbits = color_preserving_orbit_count(mu, nu);
                    let coeff = BigRational::new(power_of_two(orbits), z_mu * z_nu);
                    terms.push((mu.union(nu), coeff));
                }
            }
        }
    }
    CycleIndex::from_terms(truncation, terms)
}

/// Cycle index of bicolored graphs at the color-swapping group element:
/// only even degrees occur, since every cycle of a color-reversing
/// automorphism alternates colors. For each partition `λ ⊢ n/2` of
/// semilengths, the term is `2^l(λ) · p[2λ] / z(2λ)` times two raised to
/// the edge-orbit count.
pub fn bc_tau(truncation: u32) -> CycleIndex {
    let mut terms = Vec::new();
    for semi in 1..=truncation / 2 {
        for lambda in partitions_of(semi) {
            let doubled = lambda.doubled();
            let exponent = lambda.len() as u64 + color_reversing_orbit_count(&lambda);
            let coeff = BigRational::new(power_of_two(exponent), doubled.z());
            terms.push((doubled, coeff));
        }
    }
    CycleIndex::from_terms(truncation, terms)
}

/// The combinatorial logarithm Ω = Σ_k (μ(k)/k) log(1 + p\[k\]), the
/// compositional inverse of the nonempty-set species.
pub fn omega(truncation: u32) -> CycleIndex {
    let mut terms = Vec::new();
    for k in 1..=truncation.max(1) {
        let mu_k = mobius(k as u64).expect("k >= 1");
        if mu_k == 0 {
            continue;
        }
        let mut m = 1;
        while k * m <= truncation {
            // log(1 + p_k) = Σ_m (-1)^(m+1) p_k^m / m
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let coeff = BigRational::new(
                BigInt::from(mu_k * sign),
                BigInt::from(k as u64 * m as u64),
            );
            terms.push((Partition::new(vec![k; m as usize]), coeff));
            m += 1;
        }
    }
    CycleIndex::from_terms(truncation, terms)
}

/// Cycle index of the species of sets: Σ p\[λ\]/z(λ) over all partitions of
/// degree at most the truncation.
pub fn e_species(truncation: u32) -> CycleIndex {
    let mut terms = Vec::new();
    for degree in 0..=truncation {
        for partition in partitions_of(degree) {
            let z = partition.z();
            terms.push((partition, BigRational::new(BigInt::one(), z)));
        }
    }
    CycleIndex::from_terms(truncation, terms)
}

/// Nonempty sets: `e_species` minus its constant term.
pub fn e_plus(truncation: u32) -> CycleIndex {
    e_species(truncation).sub(&CycleIndex::one(truncation))
}

/// The number of labeled bicolored graphs on n vertices,
/// Σ_{i+j=n} C(n, i) 2^(i·j).
pub fn labeled_bicolored(n: u32) -> BigInt {
    let mut total = BigInt::zero();
    for i in 0..=n as u64 {
        let j = n as u64 - i;
        total += binomial(n as u64, i) * power_of_two(i * j);
    }
    total
}

/// The named series the catalog can produce. The names double as the
/// identifiers accepted by the expression language and the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SpeciesName {
    X,
    E,
    EPlus,
    Omega,
    BcE,
    BcTau,
    CbcE,
    CbcTau,
    Cbp,
    Bp,
    Nbp,
}

impl SpeciesName {
    pub const ALL: [SpeciesName; 11] = [
        SpeciesName::X,
        SpeciesName::E,
        SpeciesName::EPlus,
        SpeciesName::Omega,
        SpeciesName::BcE,
        SpeciesName::BcTau,
        SpeciesName::CbcE,
        SpeciesName::CbcTau,
        SpeciesName::Cbp,
        SpeciesName::Bp,
        SpeciesName::Nbp,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SpeciesName::X => "X",
            SpeciesName::E => "E",
            SpeciesName::EPlus => "Eplus",
            SpeciesName::Omega => "Omega",
            SpeciesName::BcE => "BCe",
            SpeciesName::BcTau => "BCtau",
            SpeciesName::CbcE => "CBCe",
            SpeciesName::CbcTau => "CBCtau",
            SpeciesName::Cbp => "CBP",
            SpeciesName::Bp => "BP",
            SpeciesName::Nbp => "NBP",
        }
    }
}

impl FromStr for SpeciesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpeciesName> {
        SpeciesName::ALL
            .iter()
            .copied()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for SpeciesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// Lazily computed, memoized named cycle indices at given truncations,
/// optionally persisted to a cache directory. Recomputation at the same
/// truncation always returns an identical series.
pub struct SpeciesCatalog {
    cache_dir: Option<PathBuf>,
    memo: Mutex<HashMap<SpeciesName, Vec<(u32, CycleIndex)>>>,
}

impl Default for SpeciesCatalog {
    fn default() -> Self {
        SpeciesCatalog::new()
    }
}

impl SpeciesCatalog {
    pub fn new() -> Self {
        SpeciesCatalog { cache_dir: None, memo: Mutex::new(HashMap::new()) }
    }

    pub fn with_cache_dir<P: AsRef<Path>>(dir: P) -> Self {
        SpeciesCatalog {
            cache_dir: Some(dir.as_ref().to_path_buf()),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// The cycle index for `name`, exact through `truncation`.
    pub fn cycle_index(&self, name: SpeciesName, truncation: u32) -> Result<CycleIndex> {
        if let Some(hit) = self.lookup_memo(name, truncation) {
            return Ok(hit);
        }
        if let Some(hit) = self.lookup_disk(name, truncation)? {
            return Ok(hit);
        }
        let value = self.compute(name, truncation)?;
        self.store(name, value.clone());
        self.write_disk(name, &value)?;
        Ok(value)
    }

    fn lookup_memo(&self, name: SpeciesName, truncation: u32) -> Option<CycleIndex> {
        let memo = self.memo.lock().expect("catalog lock");
        let entries = memo.get(&name)?;
        entries
            .iter()
            .filter(|(t, _)| *t >= truncation)
            .min_by_key(|(t, _)| *t)
            .map(|(_, series)| series.truncated(truncation))
    }

    fn store(&self, name: SpeciesName, series: CycleIndex) {
        let mut memo = self.memo.lock().expect("catalog lock");
        let entries = memo.entry(name).or_default();
        if !entries.iter().any(|(t, _)| *t == series.truncation()) {
            entries.push((series.truncation(), series));
        }
    }

    fn cache_path(&self, name: SpeciesName, truncation: u32) -> Option<PathBuf> {
        self.cache_dir
            .as_ref()
            .map(|dir| dir.join(format!("{}-N{}.ci", name.as_str(), truncation)))
    }

    /// Scans the cache directory for a stored series with truncation at
    /// least the requested one; smaller truncations are ignored.
    fn lookup_disk(&self, name: SpeciesName, truncation: u32) -> Result<Option<CycleIndex>> {
        let Some(dir) = &self.cache_dir else {
            return Ok(None);
        };
        let Ok(entries) = std::fs::read_dir(dir) else {
            return Ok(None);
        };
        let prefix = format!("{}-N", name.as_str());
        let mut best: Option<(u32, PathBuf)> = None;
        for entry in entries.flatten() {
            let file_name = entry.file_name();
            let Some(file_name) = file_name.to_str() else { continue };
            let Some(stored) = file_name
                .strip_prefix(&prefix)
                .and_then(|rest| rest.strip_suffix(".ci"))
                .and_then(|t| t.parse::<u32>().ok())
            else {
                continue;
            };
            if stored >= truncation && best.as_ref().is_none_or(|(t, _)| stored < *t) {
                best = Some((stored, entry.path()));
            }
        }
        let Some((stored, path)) = best else {
            return Ok(None);
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Cache(format!("reading {}: {e}", path.display())))?;
        let series = CycleIndex::from_cache_text(&text)?;
        if series.truncation() != stored {
            return Err(Error::Cache(format!(
                "{} declares truncation {} but is named for {}",
                path.display(),
                series.truncation(),
                stored
            )));
        }
        self.store(name, series.clone());
        Ok(Some(series.truncated(truncation)))
    }

    fn write_disk(&self, name: SpeciesName, series: &CycleIndex) -> Result<()> {
        let Some(path) = self.cache_path(name, series.truncation()) else {
            return Ok(());
        };
        if path.exists() {
            return Ok(());
        }
        if let Some(dir) = &self.cache_dir {
            std::fs::create_dir_all(dir)
                .map_err(|e| Error::Cache(format!("creating {}: {e}", dir.display())))?;
        }
        std::fs::write(&path, series.to_cache_text())
            .map_err(|e| Error::Cache(format!("writing {}: {e}", path.display())))
    }

    fn compute(&self, name: SpeciesName, n: u32) -> Result<CycleIndex> {
        match name {
            SpeciesName::X => Ok(CycleIndex::p1(n)),
            SpeciesName::E => Ok(e_species(n)),
            SpeciesName::EPlus => Ok(e_plus(n)),
            SpeciesName::Omega => Ok(omega(n)),
            SpeciesName::BcE => Ok(bc_e(n)),
            SpeciesName::BcTau => Ok(bc_tau(n)),
            SpeciesName::CbcE | SpeciesName::CbcTau => {
                let pair = self.compute_cbc(n)?;
                Ok(match name {
                    SpeciesName::CbcE => pair.at_e().clone(),
                    _ => pair.at_tau().clone(),
                })
            }
            SpeciesName::Cbp => Ok(self.cbc(n)?.quotient()),
            SpeciesName::Bp => {
                let connected = self.cycle_index(SpeciesName::Cbp, n)?;
                e_species(n).plethysm(&connected, n)
            }
            SpeciesName::Nbp => self.compute_nbp(n),
        }
    }

    fn compute_cbc(&self, n: u32) -> Result<TwoGroupCycleIndex> {
        let bicolored = TwoGroupCycleIndex::new(
            self.cycle_index(SpeciesName::BcE, n)?,
            self.cycle_index(SpeciesName::BcTau, n)?,
        );
        let log = TwoGroupCycleIndex::lift_trivial(&self.cycle_index(SpeciesName::Omega, n)?);
        let connected = log.plethysm(&bicolored, n)?;
        self.store(SpeciesName::CbcE, connected.at_e().clone());
        self.store(SpeciesName::CbcTau, connected.at_tau().clone());
        self.write_disk(SpeciesName::CbcE, connected.at_e())?;
        self.write_disk(SpeciesName::CbcTau, connected.at_tau())?;
        Ok(connected)
    }

    /// Blocks via the functional equations
    /// `NBP = CBP(W) + X·NBP' - X` and `E(NBP') = X/W` with
    /// `W = (CBP•)⟨-1⟩`. The equations themselves produce no block on one
    /// vertex; the single-vertex graph is counted as a block by convention,
    /// which cancels the `- X` term.
    fn compute_nbp(&self, n: u32) -> Result<CycleIndex> {
        let connected = self.cycle_index(SpeciesName::Cbp, n + 1)?;
        let pointed = connected.pointed();
        let w = pointed.compositional_inverse(n + 1)?;
        // X/W has constant term 1; the combinatorial logarithm applies to
        // the nonempty part
        let ratio = CycleIndex::p1(n + 1).divide(&w, n)?;
        let blocks_derivative = self
            .cycle_index(SpeciesName::Omega, n)?
            .plethysm(&ratio.sub(&CycleIndex::one(n)), n)?;
        let main = connected.plethysm(&w, n)?;
        Ok(main.add(&CycleIndex::p1(n).mul(&blocks_derivative, n)))
    }

    /// Both slots of the connected-bicolored cycle index.
    pub fn cbc(&self, n: u32) -> Result<TwoGroupCycleIndex> {
        Ok(TwoGroupCycleIndex::new(
            self.cycle_index(SpeciesName::CbcE, n)?,
            self.cycle_index(SpeciesName::CbcTau, n)?,
        ))
    }

    /// Both slots of the bicolored cycle index.
    pub fn bc(&self, n: u32) -> Result<TwoGroupCycleIndex> {
        Ok(TwoGroupCycleIndex::new(
            self.cycle_index(SpeciesName::BcE, n)?,
            self.cycle_index(SpeciesName::BcTau, n)?,
        ))
    }

    pub fn cbp(&self, n: u32) -> Result<CycleIndex> {
        self.cycle_index(SpeciesName::Cbp, n)
    }

    pub fn bp(&self, n: u32) -> Result<CycleIndex> {
        self.cycle_index(SpeciesName::Bp, n)
    }

    pub fn nbp(&self, n: u32) -> Result<CycleIndex> {
        self.cycle_index(SpeciesName::Nbp, n)
    }
}

/// Connected bicolored graphs as a two-slot cycle index, via the
/// combinatorial logarithm of the bicolored series.
pub fn cbc(n: u32) -> Result<TwoGroupCycleIndex> {
    SpeciesCatalog::new().cbc(n)
}

/// Connected bipartite graphs: the quotient of `cbc` under color reversal.
pub fn cbp(n: u32) -> Result<CycleIndex> {
    SpeciesCatalog::new().cbp(n)
}

/// Bipartite graphs (isolated vertices allowed, constant term 1 for the
/// empty graph): the set species composed with `cbp`.
pub fn bp(n: u32) -> Result<CycleIndex> {
    SpeciesCatalog::new().bp(n)
}

/// Nonseparable (2-connected) bipartite graphs, with the single vertex and
/// the single edge counted as blocks.
pub fn nbp(n: u32) -> Result<CycleIndex> {
    SpeciesCatalog::new().nbp(n)
}

/// The ordinary generating functions of the bipartite pipeline, computed
/// without any cycle-index plethysm: the partition sums are specialized at
/// `p[i] = x^i` and the connected/bipartite passes become Möbius-weighted
/// logarithms and an exponential.
pub struct FastBipartiteOgfs {
    /// 1 + OGF of bicolored graphs.
    pub f_e: PowerSeries,
    /// 1 + OGF of bicolored graphs counted with a color-reversing symmetry.
    pub f_tau: PowerSeries,
    /// OGF of connected bicolored graphs.
    pub g_e: PowerSeries,
    /// OGF of connected bicolored graphs with a color-reversing symmetry.
    pub g_tau: PowerSeries,
    /// OGF of connected bipartite graphs.
    pub c: PowerSeries,
    /// OGF of bipartite graphs.
    pub b: PowerSeries,
}

pub fn fast_bipartite_ogfs(truncation: u32) -> FastBipartiteOgfs {
    let n = truncation;
    let table = partitions_with_z(n);

    let mut f_e = PowerSeries::one(n, SeriesRole::Ogf);
    for degree in 1..=n {
        let mut total = BigRational::zero();
        for white_size in 0..=degree {
            let black_size = degree - white_size;
            for (mu, z_mu) in &table[white_size as usize] {
                for (nu, z_nu) in &table[black_size as usize] {
                    let orbits = color_preserving_orbit_count(mu, nu);
                    total += BigRational::new(power_of_two(orbits), z_mu * z_nu);
                }
            }
        }
        f_e.set_coefficient(degree, total);
    }

    let mut f_tau = PowerSeries::one(n, SeriesRole::Ogf);
    for semi in 1..=n / 2 {
        let mut total = BigRational::zero();
        for (lambda, _) in &table[semi as usize] {
            let exponent = lambda.len() as u64 + color_reversing_orbit_count(lambda);
            total += BigRational::new(power_of_two(exponent), lambda.doubled().z());
        }
        f_tau.set_coefficient(2 * semi, total);
    }

    let log_f_e = f_e.log();
    let log_f_tau = f_tau.log();

    let mut g_e = PowerSeries::zero(n, SeriesRole::Ogf);
    for k in 1..=n.max(1) {
        let mu_k = mobius(k as u64).expect("k >= 1");
        if mu_k == 0 {
            continue;
        }
        let weight = BigRational::new(BigInt::from(mu_k), BigInt::from(k));
        g_e = g_e.add(&log_f_e.substitute_power(k).scale(&weight));
    }

    let mut g_tau = PowerSeries::zero(n, SeriesRole::Ogf);
    for k in 1..=n.max(1) {
        let mu_k = mobius(k as u64).expect("k >= 1");
        if mu_k == 0 {
            continue;
        }
        let weight = BigRational::new(BigInt::from(mu_k), BigInt::from(k));
        let source = if k % 2 == 1 { &log_f_tau } else { &log_f_e };
        g_tau = g_tau.add(&source.substitute_power(k).scale(&weight));
    }

    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let c = g_e.add(&g_tau).scale(&half);

    let mut exponent = PowerSeries::zero(n, SeriesRole::Ogf);
    for k in 1..=n.max(1) {
        let weight = BigRational::new(BigInt::one(), BigInt::from(k));
        exponent = exponent.add(&c.substitute_power(k).scale(&weight));
    }
    let b = exponent.exp();

    FastBipartiteOgfs { f_e, f_tau, g_e, g_tau, c, b }
}

/// The exponential generating function for labeled bipartite blocks,
/// obtained independently of any cycle index: with `B(x)` the EGF of
/// labeled bicolored graphs and `P = ½ log B`, solve
/// `log P'(x) = N'(x P'(x))` for `N'` by compositional inversion and
/// integrate. The single-vertex block is added to match the convention
/// used by the cycle-index pipeline.
pub fn labeled_blocks_egf(truncation: u32) -> PowerSeries {
    let n = truncation;
    if n == 0 {
        return PowerSeries::zero(0, SeriesRole::Egf);
    }
    let mut bicolored = PowerSeries::zero(n, SeriesRole::Egf);
    for size in 0..=n {
        bicolored.set_coefficient(
            size,
            BigRational::new(labeled_bicolored(size), factorial(size as u64)),
        );
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let connected_bipartite = bicolored.log().scale(&half);
    let p_prime = connected_bipartite.derivative();
    let phi = p_prime.shifted_up();
    let psi = phi.compositional_inverse();
    let n_prime = p_prime.log().compose(&psi.truncated(n.saturating_sub(1)));
    n_prime.integral().add(&PowerSeries::x(n, SeriesRole::Egf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn bc_e_low_degrees() {
        let f = bc_e(2);
        // degree 1: two one-vertex bicolored graphs
        assert_eq!(f.coefficient(&part(&[1])), rat(2, 1));
        // degree 2: 3 p1^2 + p2, so four unlabeled bicolored graphs
        assert_eq!(f.coefficient(&part(&[1, 1])), rat(3, 1));
        assert_eq!(f.coefficient(&part(&[2])), rat(1, 1));
        assert_eq!(*f.ogf(2).coefficient(2), rat(4, 1));
        assert!(f.constant_term().is_zero());
    }

    #[test]
    fn bc_e_labeled_counts_match_direct_formula() {
        let f = bc_e(8);
        let egf = f.egf(8);
        for n in 1..=8 {
            assert_eq!(egf.labeled_count(n).unwrap(), labeled_bicolored(n), "n = {n}");
        }
    }

    #[test]
    fn bc_tau_low_degrees() {
        let f = bc_tau(6);
        // degree 2 is 2 p2: coloring factor 2, one orbit within the 2-cycle
        assert_eq!(f.coefficient(&part(&[2])), rat(2, 1));
        // odd degrees vanish
        for (partition, _) in f.terms() {
            assert_eq!(partition.degree() % 2, 0);
            assert!(partition.parts().iter().all(|p| p % 2 == 0));
        }
        // semilength 3: 2 intra-cycle orbits on the alternating 6-cycle,
        // so the p6 term is 2 * 2^2 / z(6) = 4/3
        assert_eq!(f.coefficient(&part(&[6])), rat(4, 3));
    }

    #[test]
    fn labeled_bicolored_small_values() {
        assert_eq!(labeled_bicolored(0), BigInt::one());
        assert_eq!(labeled_bicolored(1), BigInt::from(2));
        assert_eq!(labeled_bicolored(2), BigInt::from(6));
        assert_eq!(labeled_bicolored(3), BigInt::from(26));
        assert_eq!(labeled_bicolored(4), BigInt::from(162));
    }

    #[test]
    fn omega_low_degrees() {
        let f = omega(2);
        assert_eq!(f.coefficient(&part(&[1])), rat(1, 1));
        assert_eq!(f.coefficient(&part(&[1, 1])), rat(-1, 2));
        assert_eq!(f.coefficient(&part(&[2])), rat(-1, 2));
        assert_eq!(f.num_terms(), 3);
    }

    #[test]
    fn omega_inverts_nonempty_sets() {
        let n = 6;
        let id = CycleIndex::p1(n);
        assert_eq!(omega(n).plethysm(&e_plus(n), n).unwrap(), id);
        assert_eq!(e_plus(n).plethysm(&omega(n), n).unwrap(), id);
        // and Ω is exactly the compositional inverse of E+
        assert_eq!(e_plus(n).compositional_inverse(n).unwrap(), omega(n));
    }

    #[test]
    fn set_species_low_degrees() {
        let e = e_species(2);
        assert_eq!(e.constant_term(), rat(1, 1));
        assert_eq!(e.coefficient(&part(&[1])), rat(1, 1));
        assert_eq!(e.coefficient(&part(&[1, 1])), rat(1, 2));
        assert_eq!(e.coefficient(&part(&[2])), rat(1, 2));
        assert!(e_plus(2).constant_term().is_zero());
        let ogf = e_species(6).ogf(6);
        for d in 0..=6 {
            assert_eq!(*ogf.coefficient(d), rat(1, 1));
        }
    }

    #[test]
    fn bicolored_quotient_at_degree_one_is_a_single_orbit() {
        // 2 p1 at e, nothing at tau: one unlabeled vertex up to color swap
        let catalog = SpeciesCatalog::new();
        let bicolored = catalog.bc(1).unwrap();
        assert_eq!(bicolored.quotient(), CycleIndex::p1(1));
    }

    #[test]
    fn lifted_omega_has_equal_slots() {
        let lifted = TwoGroupCycleIndex::lift_trivial(&omega(5));
        assert_eq!(lifted.at_tau(), lifted.at_e());
        assert_eq!(lifted.at_e(), &omega(5));
    }

    #[test]
    fn cbc_low_degree_ogfs() {
        let connected = cbc(4).unwrap();
        let e_ogf = connected.at_e().ogf(4);
        // connected bicolored: 2 single vertices, the edge, two paths on 3
        assert_eq!(*e_ogf.coefficient(1), rat(2, 1));
        assert_eq!(*e_ogf.coefficient(2), rat(1, 1));
        assert_eq!(*e_ogf.coefficient(3), rat(2, 1));
        let tau_ogf = connected.at_tau().ogf(4);
        assert_eq!(*tau_ogf.coefficient(1), rat(0, 1));
        assert_eq!(*tau_ogf.coefficient(2), rat(1, 1));
        assert_eq!(*tau_ogf.coefficient(3), rat(0, 1));
        for (partition, _) in connected.at_tau().terms() {
            assert_eq!(partition.degree() % 2, 0);
        }
    }

    #[test]
    fn cbc_degree_two_tau_slot_is_p2() {
        let connected = cbc(2).unwrap();
        assert_eq!(
            connected.at_tau(),
            &CycleIndex::monomial(part(&[2]), rat(1, 1), 2)
        );
        // e slot through degree 2 is 2 p1 + p1^2
        assert_eq!(connected.at_e().coefficient(&part(&[1])), rat(2, 1));
        assert_eq!(connected.at_e().coefficient(&part(&[1, 1])), rat(1, 1));
        assert_eq!(connected.at_e().coefficient(&part(&[2])), rat(0, 1));
    }

    #[test]
    fn cbp_low_degrees() {
        let connected = cbp(5).unwrap();
        let ogf = connected.ogf(5);
        let counts = ogf.integer_coefficients().unwrap();
        let expected: Vec<BigInt> = [0, 1, 1, 1, 3, 5].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(counts, expected);
        assert!(ogf.has_nonnegative_coefficients());
        // through degree 2: p1 + p1^2/2 + p2/2
        let low = connected.truncated(2);
        assert_eq!(low.coefficient(&part(&[1])), rat(1, 1));
        assert_eq!(low.coefficient(&part(&[1, 1])), rat(1, 2));
        assert_eq!(low.coefficient(&part(&[2])), rat(1, 2));
    }

    #[test]
    fn cbp_labeled_counts_are_half_the_connected_bicolored_ones() {
        let n = 7u32;
        let connected = cbp(n).unwrap();
        let egf = connected.egf(n);
        // ½ log B coefficient-by-coefficient, by the labeled exponential formula
        let mut bicolored = PowerSeries::zero(n, SeriesRole::Egf);
        for size in 0..=n {
            bicolored.set_coefficient(
                size,
                BigRational::new(labeled_bicolored(size), factorial(size as u64)),
            );
        }
        let half = rat(1, 2);
        let reference = bicolored.log().scale(&half);
        for size in 1..=n {
            assert_eq!(
                egf.labeled_count(size).unwrap(),
                reference.labeled_count(size).unwrap(),
                "n = {size}"
            );
        }
        assert_eq!(egf.labeled_count(2).unwrap(), BigInt::one());
    }

    #[test]
    fn bp_low_degrees() {
        let all = bp(4).unwrap();
        assert_eq!(all.constant_term(), rat(1, 1));
        let counts = all.ogf(4).integer_coefficients().unwrap();
        let expected: Vec<BigInt> = [1, 1, 2, 3, 7].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn nbp_matches_known_counts_through_eight() {
        let blocks = nbp(8).unwrap();
        let counts = blocks.ogf(8).integer_coefficients().unwrap();
        let expected: Vec<BigInt> = [0, 1, 1, 0, 1, 1, 5, 8, 42]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(counts, expected);
    }

    #[test]
    fn fast_path_low_degrees() {
        let fast = fast_bipartite_ogfs(5);
        let f_e = fast.f_e.integer_coefficients().unwrap();
        assert_eq!(
            f_e[..4].to_vec(),
            [1, 2, 4, 8].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
        );
        let g_e = fast.g_e.integer_coefficients().unwrap();
        assert_eq!(
            g_e[..4].to_vec(),
            [0, 2, 1, 2].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
        );
        let c = fast.c.integer_coefficients().unwrap();
        assert_eq!(
            c,
            [0, 1, 1, 1, 3, 5].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
        );
        let b = fast.b.integer_coefficients().unwrap();
        assert_eq!(
            b[..5].to_vec(),
            [1, 1, 2, 3, 7].iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>()
        );
        let g_tau = fast.g_tau.integer_coefficients().unwrap();
        assert_eq!(g_tau[2], BigInt::one());
        assert_eq!(g_tau[1], BigInt::zero());
        assert_eq!(g_tau[3], BigInt::zero());
    }

    #[test]
    fn forward_exponential_relations_hold() {
        // f_e = exp(Σ g_e(x^k)/k) and
        // f_tau = exp(Σ_odd g_tau(x^k)/k + Σ_even g_e(x^k)/k)
        let n = 10;
        let fast = fast_bipartite_ogfs(n);
        let mut e_exponent = PowerSeries::zero(n, SeriesRole::Ogf);
        let mut tau_exponent = PowerSeries::zero(n, SeriesRole::Ogf);
        for k in 1..=n {
            let weight = BigRational::new(BigInt::one(), BigInt::from(k));
            e_exponent = e_exponent.add(&fast.g_e.substitute_power(k).scale(&weight));
            let source = if k % 2 == 1 { &fast.g_tau } else { &fast.g_e };
            tau_exponent = tau_exponent.add(&source.substitute_power(k).scale(&weight));
        }
        assert_eq!(e_exponent.exp(), fast.f_e);
        assert_eq!(tau_exponent.exp(), fast.f_tau);
    }

    #[test]
    fn labeled_blocks_small_values() {
        let blocks = labeled_blocks_egf(6);
        assert_eq!(blocks.labeled_count(1).unwrap(), BigInt::one());
        assert_eq!(blocks.labeled_count(2).unwrap(), BigInt::one());
        assert_eq!(blocks.labeled_count(3).unwrap(), BigInt::zero());
        // C4 has 3 labelings; K2,3 has 10
        assert_eq!(blocks.labeled_count(4).unwrap(), BigInt::from(3));
        assert_eq!(blocks.labeled_count(5).unwrap(), BigInt::from(10));
    }

    #[test]
    fn labeled_blocks_match_the_cycle_index_pipeline() {
        let n = 8;
        let via_equation = labeled_blocks_egf(n);
        let via_cycle_index = nbp(n).unwrap().egf(n);
        for size in 0..=n {
            assert_eq!(
                via_equation.labeled_count(size).unwrap(),
                via_cycle_index.labeled_count(size).unwrap(),
                "n = {size}"
            );
        }
    }

    #[test]
    fn species_names_round_trip() {
        for name in SpeciesName::ALL {
            assert_eq!(name.as_str().parse::<SpeciesName>().unwrap(), name);
        }
        assert!("Bogus".parse::<SpeciesName>().is_err());
    }

    #[test]
    fn catalog_returns_identical_series_on_recomputation() {
        let catalog = SpeciesCatalog::new();
        let first = catalog.cycle_index(SpeciesName::Cbp, 5).unwrap();
        let second = catalog.cycle_index(SpeciesName::Cbp, 5).unwrap();
        assert_eq!(first, second);
        // a lower truncation is served from the stored series
        let lower = catalog.cycle_index(SpeciesName::Cbp, 3).unwrap();
        assert_eq!(lower, first.truncated(3));
    }

    #[test]
    fn catalog_disk_cache_round_trips() {
        let dir = std::env::temp_dir().join(format!(
            "species-catalog-test-{}-{:?}",
            std::process::id(),
            std::thread::current().id()
        ));
        let _ = std::fs::remove_dir_all(&dir);
        let warm = SpeciesCatalog::with_cache_dir(&dir);
        let computed = warm.cycle_index(SpeciesName::Cbp, 4).unwrap();
        assert!(dir.join("CBP-N4.ci").exists());

        let cold = SpeciesCatalog::with_cache_dir(&dir);
        let loaded = cold.cycle_index(SpeciesName::Cbp, 4).unwrap();
        assert_eq!(loaded, computed);
        let truncated = cold.cycle_index(SpeciesName::Cbp, 3).unwrap();
        assert_eq!(truncated, computed.truncated(3));
        let _ = std::fs::remove_dir_all(&dir);
    }
}
