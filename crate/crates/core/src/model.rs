//! Model parameterization and the closed-form probability computations:
//! size-biasing, neighbor-degree distributions, transmission-thinned
//! neighbor distributions, and infection pressure.
//!
//! All distributions are stored as dense arrays over an explicit sorted
//! support. Everything is immutable after construction, so values can be
//! shared freely across threads.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Absolute tolerance for "sums to one" checks after normalization.
pub const PROB_SUM_TOL: f64 = 1e-12;
/// Inputs whose total deviates from one by more than this are rejected
/// instead of renormalized. Tolerates float noise in user-specified tables
/// while still rejecting genuinely invalid input.
pub const PROB_RENORM_LIMIT: f64 = 1e-9;

fn validate_and_normalize(label: &str, probs: &mut [f64]) -> Result<()> {
    for &p in probs.iter() {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::InvalidDistribution(format!(
                "{label}: probability {p} is negative or not finite"
            )));
        }
    }
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > PROB_RENORM_LIMIT {
        return Err(Error::InvalidDistribution(format!(
            "{label}: probabilities sum to {sum}, expected 1 within {PROB_RENORM_LIMIT:e}"
        )));
    }
    for p in probs.iter_mut() {
        *p /= sum;
    }
    debug_assert!((probs.iter().sum::<f64>() - 1.0).abs() <= PROB_SUM_TOL);
    Ok(())
}

/// Probability mass function of a truncated Poisson: `Po(lambda)` conditioned
/// on lying in `[min, max]`, renormalized. Entries that underflow to zero are
/// dropped from the support.
pub fn truncated_poisson_pmf(lambda: f64, min: u64, max: u64) -> Result<Vec<(u64, f64)>> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidDistribution(format!(
            "poisson rate must be positive and finite, got {lambda}"
        )));
    }
    if min > max {
        return Err(Error::InvalidDistribution(format!(
            "poisson truncation bounds out of order: [{min}, {max}]"
        )));
    }
    let mut term = (-lambda).exp();
    let mut entries = Vec::new();
    let mut total = 0.0;
    for k in 0..=max {
        if k >= min && term > 0.0 {
            entries.push((k, term));
            total += term;
        }
        term *= lambda / (k + 1) as f64;
    }
    if total <= 0.0 {
        return Err(Error::InvalidDistribution(format!(
            "poisson({lambda}) has no representable mass in [{min}, {max}]"
        )));
    }
    for (_, p) in entries.iter_mut() {
        *p /= total;
    }
    Ok(entries)
}

/// Degree distribution `p(d)` over strictly positive degrees with finite
/// support.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    support: Vec<usize>,
    probs: Vec<f64>,
}

impl DegreeDistribution {
    /// Build from (degree, probability) pairs. Zero-probability entries are
    /// dropped; totals within `1e-9` of one are renormalized, worse inputs
    /// are rejected.
    pub fn from_pmf(pmf: impl IntoIterator<Item = (usize, f64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (d, p) in pmf {
            if d == 0 {
                return Err(Error::InvalidDistribution(
                    "degree 0 is not allowed; degrees are strictly positive".into(),
                ));
            }
            if map.insert(d, p).is_some() {
                return Err(Error::InvalidDistribution(format!("duplicate degree {d}")));
            }
        }
        let (mut support, mut probs): (Vec<usize>, Vec<f64>) =
            map.into_iter().filter(|&(_, p)| p != 0.0).unzip();
        if support.is_empty() {
            return Err(Error::InvalidDistribution(
                "degree distribution has empty support".into(),
            ));
        }
        validate_and_normalize("degree distribution", &mut probs)?;
        support.shrink_to_fit();
        Ok(Self { support, probs })
    }

    /// Sorted list of degrees with positive probability.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn d_max(&self) -> usize {
        *self.support.last().expect("support is non-empty")
    }

    pub fn prob(&self, d: usize) -> f64 {
        match self.support.binary_search(&d) {
            Ok(i) => self.probs[i],
            Err(_) => 0.0,
        }
    }

    pub fn index_of(&self, d: usize) -> Option<usize> {
        self.support.binary_search(&d).ok()
    }

    /// Mean degree.
    pub fn mean(&self) -> f64 {
        self.support
            .iter()
            .zip(&self.probs)
            .map(|(&d, &p)| d as f64 * p)
            .sum()
    }

    /// Degree variance.
    pub fn variance(&self) -> f64 {
        let mu = self.mean();
        let second: f64 = self
            .support
            .iter()
            .zip(&self.probs)
            .map(|(&d, &p)| (d as f64).powi(2) * p)
            .sum();
        second - mu * mu
    }

    /// Size-biased distribution `k p(k) / mean`, aligned with `support()`.
    /// This is the degree distribution of the vertex found by following a
    /// uniformly random stub.
    pub fn size_biased(&self) -> Vec<f64> {
        let mu = self.mean();
        self.support
            .iter()
            .zip(&self.probs)
            .map(|(&d, &p)| d as f64 * p / mu)
            .collect()
    }
}

/// Conditional stub-weight distribution `q(w|d)`: one row per supported
/// degree over a shared sorted weight support.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightKernel {
    degrees: Vec<usize>,
    weights: Vec<u32>,
    rows: Vec<Vec<f64>>,
}

impl WeightKernel {
    /// Build from per-degree weight tables. Every row is validated and
    /// normalized like a degree pmf; the weight support is the union of the
    /// rows' positive entries.
    pub fn from_rows(rows: impl IntoIterator<Item = (usize, BTreeMap<u32, f64>)>) -> Result<Self> {
        let mut row_maps: BTreeMap<usize, BTreeMap<u32, f64>> = BTreeMap::new();
        for (d, row) in rows {
            if row_maps.insert(d, row).is_some() {
                return Err(Error::InvalidDistribution(format!(
                    "duplicate kernel row for degree {d}"
                )));
            }
        }
        if row_maps.is_empty() {
            return Err(Error::InvalidDistribution("weight kernel has no rows".into()));
        }
        let mut weights: Vec<u32> = row_maps
            .values()
            .flat_map(|row| row.iter().filter(|&(_, &p)| p != 0.0).map(|(&w, _)| w))
            .collect();
        weights.sort_unstable();
        weights.dedup();
        if weights.is_empty() {
            return Err(Error::InvalidDistribution(
                "weight kernel has empty weight support".into(),
            ));
        }
        let mut degrees = Vec::with_capacity(row_maps.len());
        let mut dense_rows = Vec::with_capacity(row_maps.len());
        for (d, row) in row_maps {
            let mut dense: Vec<f64> = weights
                .iter()
                .map(|w| row.get(w).copied().unwrap_or(0.0))
                .collect();
            validate_and_normalize(&format!("weight kernel row for degree {d}"), &mut dense)?;
            degrees.push(d);
            dense_rows.push(dense);
        }
        Ok(Self {
            degrees,
            weights,
            rows: dense_rows,
        })
    }

    /// Degrees that have a row, sorted.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Shared sorted weight support.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn w_max(&self) -> u32 {
        *self.weights.last().expect("weight support is non-empty")
    }

    /// Row for the i-th degree, aligned with `weights()`.
    pub fn row(&self, degree_index: usize) -> &[f64] {
        &self.rows[degree_index]
    }

    /// `q(w|d)`, zero off the support.
    pub fn prob(&self, w: u32, d: usize) -> f64 {
        let (Ok(i), Ok(j)) = (
            self.degrees.binary_search(&d),
            self.weights.binary_search(&w),
        ) else {
            return 0.0;
        };
        self.rows[i][j]
    }
}

/// Probability that an edge of weight `w` transmits infection.
#[derive(Debug, Clone, PartialEq)]
pub enum TransmissionFunction {
    /// `pi(w) = p` for every weight.
    Constant(f64),
    /// `pi(w) = 1 - (1-s)^w`, with `s` the per-contact transmission
    /// probability. Gives `pi(0) = 0`.
    PerContact { s: f64 },
    /// `pi(w) = 1 - (1-s)^(w+1)`; the shifted variant keeps `pi(0) = s > 0`,
    /// which matters for kernels with mass at weight zero.
    ShiftedPerContact { s: f64 },
    /// Explicit table; weights not listed are uncovered.
    Table(BTreeMap<u32, f64>),
}

impl TransmissionFunction {
    /// `pi(w)`, or `None` when a table does not cover `w`.
    pub fn probability(&self, w: u32) -> Option<f64> {
        match self {
            TransmissionFunction::Constant(p) => Some(*p),
            TransmissionFunction::PerContact { s } => Some(1.0 - (1.0 - s).powi(w as i32)),
            TransmissionFunction::ShiftedPerContact { s } => {
                Some(1.0 - (1.0 - s).powi(w as i32 + 1))
            }
            TransmissionFunction::Table(t) => t.get(&w).copied(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let check = |label: &str, p: f64| {
            if !(0.0..=1.0).contains(&p) || !p.is_finite() {
                Err(Error::OutOfRange(format!(
                    "transmission {label} = {p} is outside [0, 1]"
                )))
            } else {
                Ok(())
            }
        };
        match self {
            TransmissionFunction::Constant(p) => check("probability", *p),
            TransmissionFunction::PerContact { s }
            | TransmissionFunction::ShiftedPerContact { s } => check("parameter s", *s),
            TransmissionFunction::Table(t) => {
                for (w, p) in t {
                    check(&format!("pi({w})"), *p)?;
                }
                Ok(())
            }
        }
    }
}

/// Full parameterization of the model: degree distribution, degree-conditional
/// weight kernel, and weight-dependent transmission function.
///
/// Construction validates that the kernel has a row for exactly the degree
/// support and that the transmission function covers every supported weight,
/// and precomputes the dense quantities the other modules consume.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    degree: DegreeDistribution,
    kernel: WeightKernel,
    transmission: TransmissionFunction,
    /// `pi(w)` per kernel weight.
    pi: Vec<f64>,
    /// Stub mass per weight: `S_w = sum_j q(w|j) j p(j)`.
    stub_mass: Vec<f64>,
    /// Size-biased degree distribution, per degree.
    size_biased: Vec<f64>,
    /// `stub_bias[j][i]`: probability that a random stub of weight
    /// `weights[j]` belongs to a vertex of degree `degrees[i]`.
    stub_bias: Vec<Vec<f64>>,
}

impl ModelSpec {
    pub fn new(
        degree: DegreeDistribution,
        kernel: WeightKernel,
        transmission: TransmissionFunction,
    ) -> Result<Self> {
        if kernel.degrees() != degree.support() {
            return Err(Error::InvalidSpec(format!(
                "weight kernel rows {:?} do not match the degree support {:?}",
                kernel.degrees(),
                degree.support()
            )));
        }
        transmission.validate()?;
        let pi: Vec<f64> = kernel
            .weights()
            .iter()
            .map(|&w| {
                transmission.probability(w).ok_or_else(|| {
                    Error::InvalidSpec(format!(
                        "transmission table does not cover weight {w} of the kernel support"
                    ))
                })
            })
            .collect::<Result<_>>()?;
        for (&w, &p) in kernel.weights().iter().zip(&pi) {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::OutOfRange(format!(
                    "pi({w}) = {p} is outside [0, 1]"
                )));
            }
        }

        let n_w = kernel.weights().len();
        let n_d = degree.support().len();
        let mut stub_mass = vec![0.0; n_w];
        for (i, (&d, &p)) in degree.support().iter().zip(degree.probs()).enumerate() {
            let row = kernel.row(i);
            for j in 0..n_w {
                stub_mass[j] += row[j] * d as f64 * p;
            }
        }
        // Kernel construction prunes all-zero weight columns, so every
        // supported weight has positive stub mass.
        debug_assert!(stub_mass.iter().all(|&m| m > 0.0));

        let mut stub_bias = vec![vec![0.0; n_d]; n_w];
        for i in 0..n_d {
            let d = degree.support()[i] as f64;
            let p = degree.probs()[i];
            let row = kernel.row(i);
            for j in 0..n_w {
                stub_bias[j][i] = row[j] * d * p / stub_mass[j];
            }
        }
        let size_biased = degree.size_biased();

        Ok(Self {
            degree,
            kernel,
            transmission,
            pi,
            stub_mass,
            size_biased,
            stub_bias,
        })
    }

    pub fn degree(&self) -> &DegreeDistribution {
        &self.degree
    }

    pub fn kernel(&self) -> &WeightKernel {
        &self.kernel
    }

    pub fn transmission(&self) -> &TransmissionFunction {
        &self.transmission
    }

    /// Sorted degree support; all distribution-over-degree results are
    /// aligned with this slice.
    pub fn degrees(&self) -> &[usize] {
        self.degree.support()
    }

    /// Sorted weight support of the kernel.
    pub fn weights(&self) -> &[u32] {
        self.kernel.weights()
    }

    /// `pi(w)` per entry of `weights()`.
    pub fn pi(&self) -> &[f64] {
        &self.pi
    }

    /// Size-biased degree distribution, aligned with `degrees()`.
    pub fn size_biased(&self) -> &[f64] {
        &self.size_biased
    }

    /// Fraction of all stubs carrying each supported weight, i.e. the
    /// marginal stub-weight distribution `q(w) = S_w / mean degree`.
    pub fn stub_weight_marginal(&self) -> Vec<f64> {
        let total: f64 = self.stub_mass.iter().sum();
        self.stub_mass.iter().map(|&m| m / total).collect()
    }

    /// Degree distribution of the vertex owning a uniformly random stub of
    /// weight `w`, aligned with `degrees()`.
    pub fn stub_weight_bias(&self, w: u32) -> Result<&[f64]> {
        match self.kernel.weights().binary_search(&w) {
            Ok(j) => Ok(&self.stub_bias[j]),
            Err(_) => Err(Error::NoStubsForWeight(w)),
        }
    }

    fn degree_index(&self, d: usize) -> Result<usize> {
        self.degree
            .index_of(d)
            .ok_or(Error::UnsupportedDegree(d))
    }

    /// `p_d(k)`: distribution of a neighbor's degree for a vertex of degree
    /// `d`, aligned with `degrees()`.
    pub fn neighbor_degree(&self, d: usize) -> Result<Vec<f64>> {
        let i = self.degree_index(d)?;
        let row = self.kernel.row(i);
        let mut out = vec![0.0; self.degrees().len()];
        for (j, &q) in row.iter().enumerate() {
            if q == 0.0 {
                continue;
            }
            for (k, &b) in self.stub_bias[j].iter().enumerate() {
                out[k] += q * b;
            }
        }
        Ok(out)
    }

    /// `p^x_d(k)`: probability that a given neighbor of a degree-`d` vertex
    /// has degree `k` and gets infected by it, plus the failure mass
    /// `1 - sum_k p^x_d(k)` (no infection along that stub).
    pub fn infect_neighbor_degree(&self, d: usize) -> Result<(Vec<f64>, f64)> {
        let i = self.degree_index(d)?;
        let row = self.kernel.row(i);
        let mut out = vec![0.0; self.degrees().len()];
        for (j, &q) in row.iter().enumerate() {
            let qp = q * self.pi[j];
            if qp == 0.0 {
                continue;
            }
            for (k, &b) in self.stub_bias[j].iter().enumerate() {
                out[k] += qp * b;
            }
        }
        let total: f64 = out.iter().sum();
        Ok((out, (1.0 - total).max(0.0)))
    }

    /// Infection pressure `t(d) = (d-1) E[pi(W) | D=d]`: the expected number
    /// of neighbors a degree-`d` vertex infects in the early phase.
    pub fn infection_pressure(&self, d: usize) -> Result<f64> {
        let i = self.degree_index(d)?;
        let mean_pi: f64 = self
            .kernel
            .row(i)
            .iter()
            .zip(&self.pi)
            .map(|(&q, &p)| q * p)
            .sum();
        Ok((d as f64 - 1.0) * mean_pi)
    }

    /// `E[pi(W)]` under the marginal stub-weight distribution.
    pub fn expected_transmission(&self) -> f64 {
        self.stub_weight_marginal()
            .iter()
            .zip(&self.pi)
            .map(|(&q, &p)| q * p)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_degree() -> DegreeDistribution {
        DegreeDistribution::from_pmf([(1, 0.8), (3, 0.2)]).unwrap()
    }

    /// Example 3.2 style kernel with q(w2|1)=0.3, q(w2|3)=0.5.
    fn bridge_spec(q21: f64, q23: f64) -> ModelSpec {
        let kernel = WeightKernel::from_rows([
            (1, BTreeMap::from([(1, 1.0 - q21), (2, q21)])),
            (3, BTreeMap::from([(2, q23), (3, 1.0 - q23)])),
        ])
        .unwrap();
        ModelSpec::new(two_degree(), kernel, TransmissionFunction::Constant(1.0)).unwrap()
    }

    fn independent_spec() -> ModelSpec {
        let kernel = WeightKernel::from_rows([
            (1, BTreeMap::from([(1, 0.4), (2, 0.6)])),
            (3, BTreeMap::from([(1, 0.4), (2, 0.6)])),
        ])
        .unwrap();
        ModelSpec::new(
            two_degree(),
            kernel,
            TransmissionFunction::Table(BTreeMap::from([(1, 0.1), (2, 0.7)])),
        )
        .unwrap()
    }

    #[test]
    fn size_biased_single_atom() {
        let d = DegreeDistribution::from_pmf([(5, 1.0)]).unwrap();
        assert_eq!(d.size_biased(), vec![1.0]);
    }

    #[test]
    fn size_biased_two_point() {
        let d = two_degree();
        let sb = d.size_biased();
        assert!((sb[0] - 4.0 / 7.0).abs() < 1e-15);
        assert!((sb[1] - 3.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn size_biased_truncated_poisson_sums_to_one() {
        let pmf = truncated_poisson_pmf(4.0, 1, 200).unwrap();
        let d =
            DegreeDistribution::from_pmf(pmf.iter().map(|&(k, p)| (k as usize, p))).unwrap();
        let total: f64 = d.size_biased().iter().sum();
        assert!((total - 1.0).abs() < 1e-12, "total {total}");
        // Direct-summation check of the mean used in the bias.
        let mu_direct: f64 = d
            .support()
            .iter()
            .zip(d.probs())
            .map(|(&k, &p)| k as f64 * p)
            .sum();
        assert!((d.mean() - mu_direct).abs() < 1e-15);
    }

    #[test]
    fn degree_zero_rejected() {
        assert!(DegreeDistribution::from_pmf([(0, 0.5), (1, 0.5)]).is_err());
    }

    #[test]
    fn bad_sum_rejected_and_small_noise_renormalized() {
        assert!(DegreeDistribution::from_pmf([(1, 0.5), (2, 0.6)]).is_err());
        let noisy = DegreeDistribution::from_pmf([(1, 0.5 + 3e-10), (2, 0.5)]).unwrap();
        assert!((noisy.probs().iter().sum::<f64>() - 1.0).abs() <= PROB_SUM_TOL);
    }

    #[test]
    fn stub_weight_bias_cancels_for_independent_weights() {
        let spec = independent_spec();
        let sb = spec.size_biased();
        for &w in [1u32, 2].iter() {
            let bias = spec.stub_weight_bias(w).unwrap();
            for (a, b) in bias.iter().zip(sb) {
                assert!((a - b).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn stub_weight_bias_hand_arithmetic() {
        // q(w2|1)=0.3, q(w2|3)=0.5 with p(1)=0.8, p(3)=0.2:
        // mass(w2) = 0.3*1*0.8 + 0.5*3*0.2 = 0.54
        let spec = bridge_spec(0.3, 0.5);
        let bias = spec.stub_weight_bias(2).unwrap();
        assert!((bias[0] - 0.24 / 0.54).abs() < 1e-14);
        assert!((bias[1] - 0.30 / 0.54).abs() < 1e-14);
    }

    #[test]
    fn stub_weight_bias_single_degree_carries_weight() {
        let spec = bridge_spec(0.3, 0.5);
        // Weight 1 only appears on degree-1 stubs.
        let bias = spec.stub_weight_bias(1).unwrap();
        assert_eq!(bias, &[1.0, 0.0]);
    }

    #[test]
    fn stub_weight_bias_zero_mass_weight_errors() {
        let spec = bridge_spec(0.3, 0.5);
        match spec.stub_weight_bias(9) {
            Err(Error::NoStubsForWeight(9)) => {}
            other => panic!("expected NoStubsForWeight, got {other:?}"),
        }
    }

    #[test]
    fn neighbor_degree_independent_weights_collapse() {
        let spec = independent_spec();
        let sb = spec.size_biased();
        for &d in spec.degrees() {
            let nd = spec.neighbor_degree(d).unwrap();
            for (a, b) in nd.iter().zip(sb) {
                assert!((a - b).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn neighbor_degree_disjoint_weights_segregate() {
        // All degree-d stubs get a weight unique to d.
        let kernel = WeightKernel::from_rows([
            (1, BTreeMap::from([(10, 1.0)])),
            (3, BTreeMap::from([(20, 1.0)])),
        ])
        .unwrap();
        let spec =
            ModelSpec::new(two_degree(), kernel, TransmissionFunction::Constant(1.0)).unwrap();
        let n1 = spec.neighbor_degree(1).unwrap();
        let n3 = spec.neighbor_degree(3).unwrap();
        assert_eq!(n1, vec![1.0, 0.0]);
        assert_eq!(n3, vec![0.0, 1.0]);
    }

    #[test]
    fn neighbor_degree_matches_brute_force_sum() {
        let spec = bridge_spec(0.3, 0.5);
        // Brute force: p_1(k) = sum over the weights of q(w|1) ptilde_w(k).
        let b1 = spec.stub_weight_bias(1).unwrap().to_vec();
        let b2 = spec.stub_weight_bias(2).unwrap().to_vec();
        let nd = spec.neighbor_degree(1).unwrap();
        for k in 0..2 {
            let direct = 0.7 * b1[k] + 0.3 * b2[k];
            assert!((nd[k] - direct).abs() < 1e-14);
        }
        assert!((nd.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(matches!(
            spec.neighbor_degree(2),
            Err(Error::UnsupportedDegree(2))
        ));
    }

    #[test]
    fn infect_neighbor_degree_no_thinning_and_full_thinning() {
        let spec = bridge_spec(0.3, 0.5); // pi == 1
        for &d in spec.degrees() {
            let nd = spec.neighbor_degree(d).unwrap();
            let (px, pbar) = spec.infect_neighbor_degree(d).unwrap();
            assert_eq!(px, nd);
            assert!(pbar.abs() < 1e-12);
        }
        let zero = ModelSpec::new(
            spec.degree().clone(),
            spec.kernel().clone(),
            TransmissionFunction::Constant(0.0),
        )
        .unwrap();
        for &d in zero.degrees() {
            let (px, pbar) = zero.infect_neighbor_degree(d).unwrap();
            assert!(px.iter().all(|&x| x == 0.0));
            assert!((pbar - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn infect_neighbor_degree_two_term_sum() {
        // Two weights with pi(w1)=0.1, pi(w2)=0.7, checked against the
        // explicit two-term summation.
        let kernel = WeightKernel::from_rows([
            (1, BTreeMap::from([(1, 0.6), (2, 0.4)])),
            (3, BTreeMap::from([(1, 0.2), (2, 0.8)])),
        ])
        .unwrap();
        let spec = ModelSpec::new(
            two_degree(),
            kernel,
            TransmissionFunction::Table(BTreeMap::from([(1, 0.1), (2, 0.7)])),
        )
        .unwrap();
        let (px, pbar) = spec.infect_neighbor_degree(3).unwrap();
        let b1 = spec.stub_weight_bias(1).unwrap().to_vec();
        let b2 = spec.stub_weight_bias(2).unwrap().to_vec();
        for k in 0..2 {
            let direct = 0.1 * 0.2 * b1[k] + 0.7 * 0.8 * b2[k];
            assert!((px[k] - direct).abs() < 1e-14);
        }
        let nd = spec.neighbor_degree(3).unwrap();
        for k in 0..2 {
            assert!(px[k] <= nd[k] + 1e-15);
        }
        assert!((px.iter().sum::<f64>() + pbar - 1.0).abs() < 1e-12);
    }

    #[test]
    fn infection_pressure_degree_one_and_constant_pi() {
        let spec = independent_spec();
        assert_eq!(spec.infection_pressure(1).unwrap(), 0.0);
        let constant = ModelSpec::new(
            spec.degree().clone(),
            spec.kernel().clone(),
            TransmissionFunction::Constant(0.35),
        )
        .unwrap();
        for &d in constant.degrees() {
            let t = constant.infection_pressure(d).unwrap();
            assert!((t - (d as f64 - 1.0) * 0.35).abs() < 1e-14);
        }
    }

    #[test]
    fn monotone_in_pi() {
        let lo = independent_spec();
        let hi = ModelSpec::new(
            lo.degree().clone(),
            lo.kernel().clone(),
            TransmissionFunction::Table(BTreeMap::from([(1, 0.3), (2, 0.9)])),
        )
        .unwrap();
        for &d in lo.degrees() {
            let (plo, _) = lo.infect_neighbor_degree(d).unwrap();
            let (phi, _) = hi.infect_neighbor_degree(d).unwrap();
            for (a, b) in plo.iter().zip(&phi) {
                assert!(a <= b + 1e-15);
            }
            assert!(
                lo.infection_pressure(d).unwrap() <= hi.infection_pressure(d).unwrap() + 1e-15
            );
        }
    }

    #[test]
    fn kernel_degree_mismatch_rejected() {
        let kernel = WeightKernel::from_rows([(1, BTreeMap::from([(1, 1.0)]))]).unwrap();
        assert!(matches!(
            ModelSpec::new(two_degree(), kernel, TransmissionFunction::Constant(1.0)),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn uncovered_weight_rejected() {
        let kernel = WeightKernel::from_rows([
            (1, BTreeMap::from([(1, 1.0)])),
            (3, BTreeMap::from([(2, 1.0)])),
        ])
        .unwrap();
        let table = TransmissionFunction::Table(BTreeMap::from([(1, 0.5)]));
        assert!(matches!(
            ModelSpec::new(two_degree(), kernel, table),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn per_contact_families_at_zero_weight() {
        let pc = TransmissionFunction::PerContact { s: 0.3 };
        let sh = TransmissionFunction::ShiftedPerContact { s: 0.3 };
        assert_eq!(pc.probability(0), Some(0.0));
        assert!((sh.probability(0).unwrap() - 0.3).abs() < 1e-15);
        assert!((pc.probability(2).unwrap() - (1.0 - 0.49)).abs() < 1e-15);
        assert!((sh.probability(1).unwrap() - (1.0 - 0.49)).abs() < 1e-15);
    }
}
