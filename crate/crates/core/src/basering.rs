//! Fusion rings (Z+-based rings) with a distinguished basis of simple labels.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::{Check, ValidationReport};

/// Exhaustive subring enumeration is only offered up to this rank.
pub const MAX_ENUM_RANK: usize = 24;

const FP_MAX_ITER: usize = 10_000;
const FP_CONVERGENCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub index: usize,
    pub name: String,
}

/// A based ring: structure constants `N[i][j][k]`, an involutive dual, unit at index 0.
///
/// Construction only checks shapes; [`BasedRing::validate`] checks the ring axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedRing {
    labels: Vec<Label>,
    fusion: Vec<u32>,
    dual: Vec<usize>,
}

impl BasedRing {
    /// `fusion` is the flat `r^3` tensor in `[i][j][k]` row-major order.
    pub fn new(names: Vec<String>, fusion: Vec<u32>, dual: Vec<usize>) -> Result<Self> {
        let r = names.len();
        if r == 0 {
            return Err(Error::Structural("rank must be positive".into()));
        }
        if fusion.len() != r * r * r {
            return Err(Error::Structural(format!(
                "fusion tensor has {} entries, rank {r} needs {}",
                fusion.len(),
                r * r * r
            )));
        }
        if dual.len() != r {
            return Err(Error::Structural(format!("dual has length {}, rank is {r}", dual.len())));
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= r) {
            return Err(Error::InvalidIndex { index: bad, rank: r });
        }
        let labels = names.into_iter().enumerate().map(|(index, name)| Label { index, name }).collect();
        Ok(BasedRing { labels, fusion, dual })
    }

    /// Builds a ring from a product rule returning `(k, N[i][j][k])` pairs.
    pub fn from_products<F>(names: Vec<String>, dual: Vec<usize>, mut product: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Vec<(usize, u32)>,
    {
        let r = names.len();
        let mut fusion = vec![0u32; r * r * r];
        for i in 0..r {
            for j in 0..r {
                for (k, m) in product(i, j) {
                    if k >= r {
                        return Err(Error::InvalidIndex { index: k, rank: r });
                    }
                    fusion[(i * r + j) * r + k] += m;
                }
            }
        }
        Self::new(names, fusion, dual)
    }

    /// The rank-one ring `Z`.
    pub fn trivial() -> Self {
        BasedRing::new(vec!["1".into()], vec![1], vec![0]).expect("trivial ring")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn name(&self, i: usize) -> &str {
        &self.labels[i].name
    }

    pub fn names(&self) -> Vec<String> {
        self.labels.iter().map(|l| l.name.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.name == name)
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.rank();
        self.fusion[(i * r + j) * r + k]
    }

    pub fn fusion(&self) -> &[u32] {
        &self.fusion
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// Nonzero terms of `i * j`.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, u32)> {
        (0..self.rank()).filter_map(|k| Some((k, self.n(i, j, k))).filter(|&(_, m)| m > 0)).collect()
    }

    /// Product of two elements given by real coefficient vectors.
    pub fn multiply(&self, a: &[f64], b: &[f64]) -> Vec<f64> {
        let r = self.rank();
        let mut out = vec![0.0; r];
        for i in (0..r).filter(|&i| a[i] != 0.0) {
            for j in (0..r).filter(|&j| b[j] != 0.0) {
                let c = a[i] * b[j];
                for (k, m) in self.product(i, j) {
                    out[k] += c * m as f64;
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| self.n(i, j, k) == self.n(j, i, k))))
    }

    /// Checks unit, dual involution, duality, transpose-duality and associativity.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank();
        let mut rep = ValidationReport::new();
        for j in 0..r {
            for k in 0..r {
                let delta = u32::from(j == k);
                if self.n(0, j, k) != delta {
                    rep.violate("unit", vec![0, j, k], format!("N = {}, expected {delta}", self.n(0, j, k)));
                }
                if self.n(j, 0, k) != delta {
                    rep.violate("unit", vec![j, 0, k], format!("N = {}, expected {delta}", self.n(j, 0, k)));
                }
            }
        }
        if self.dual[0] != 0 {
            rep.violate("dual", vec![0], "dual of the unit must be the unit");
        }
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                rep.violate("dual", vec![i], "dual is not an involution");
            }
        }
        for i in 0..r {
            for j in 0..r {
                let expected = u32::from(j == self.dual[i]);
                if self.n(i, j, 0) != expected {
                    rep.violate(
                        "duality",
                        vec![i, j, 0],
                        format!("N = {}, expected {expected}", self.n(i, j, 0)),
                    );
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let t = self.n(self.dual[j], self.dual[i], self.dual[k]);
                    if self.n(i, j, k) != t {
                        rep.violate(
                            "transpose-duality",
                            vec![i, j, k],
                            format!("N = {} but N[j*][i*][k*] = {t}", self.n(i, j, k)),
                        );
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 =
                            (0..r).map(|m| self.n(i, j, m) as u64 * self.n(m, k, l) as u64).sum();
                        let rhs: u64 =
                            (0..r).map(|m| self.n(j, k, m) as u64 * self.n(i, m, l) as u64).sum();
                        if lhs != rhs {
                            rep.violate(
                                "associativity",
                                vec![i, j, k, l],
                                format!("(ij)k has {lhs}, i(jk) has {rhs}"),
                            );
                        }
                    }
                }
            }
        }
        rep
    }

    /// Frobenius-Perron dimensions by power iteration on the total left multiplication.
    pub fn fp_dims(&self) -> Result<DimVector> {
        let r = self.rank();
        // total[k][j] = sum_i N[i][j][k]
        let mut total = vec![0.0f64; r * r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    total[k * r + j] += self.n(i, j, k) as f64;
                }
            }
        }
        let mut v = vec![1.0f64; r];
        for _ in 0..FP_MAX_ITER {
            let mut w: Vec<f64> = (0..r).map(|k| (0..r).map(|j| total[k * r + j] * v[j]).sum()).collect();
            let norm = w[0];
            if !(norm.is_finite() && norm > 0.0) {
                return Err(Error::Numerical("power iteration lost the unit component".into()));
            }
            w.iter_mut().for_each(|x| *x /= norm);
            let delta = w.iter().zip(&v).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            v = w;
            if delta < FP_CONVERGENCE {
                return Ok(DimVector { values: v, source: DimSource::FrobeniusPerron });
            }
        }
        Err(Error::Numerical(format!("Perron iteration did not converge in {FP_MAX_ITER} steps")))
    }

    fn product_masks(&self) -> Vec<u32> {
        let r = self.rank();
        let mut masks = vec![0u32; r * r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.n(i, j, k) > 0 {
                        masks[i * r + j] |= 1 << k;
                    }
                }
            }
        }
        masks
    }

    fn close_mask(&self, masks: &[u32], mut set: u32) -> u32 {
        let r = self.rank();
        set |= 1;
        loop {
            let mut next = set;
            for i in (0..r).filter(|&i| set >> i & 1 == 1) {
                next |= 1 << self.dual[i];
                for j in (0..r).filter(|&j| set >> j & 1 == 1) {
                    next |= masks[i * r + j];
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    fn check_indices(&self, idx: &[usize]) -> Result<()> {
        match idx.iter().find(|&&i| i >= self.rank()) {
            Some(&bad) => Err(Error::InvalidIndex { index: bad, rank: self.rank() }),
            None => Ok(()),
        }
    }

    /// Smallest subring containing the seeds and the unit.
    pub fn subring_generated(&self, seeds: &[usize]) -> Result<Subring> {
        self.check_indices(seeds)?;
        let r = self.rank();
        let mut inside = vec![false; r];
        inside[0] = true;
        for &s in seeds {
            inside[s] = true;
        }
        loop {
            let members: Vec<usize> = (0..r).filter(|&i| inside[i]).collect();
            let mut grew = false;
            for &i in &members {
                let d = self.dual[i];
                if !inside[d] {
                    inside[d] = true;
                    grew = true;
                }
                for &j in &members {
                    for (k, _) in self.product(i, j) {
                        if !inside[k] {
                            inside[k] = true;
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return Ok(Subring { members: (0..r).filter(|&i| inside[i]).collect() });
            }
        }
    }

    /// True when `members` contains the unit and is closed under fusion and dual.
    pub fn is_subring(&self, members: &[usize]) -> bool {
        let set: HashSet<usize> = members.iter().copied().collect();
        set.contains(&0)
            && members.iter().all(|&i| i < self.rank() && set.contains(&self.dual[i]))
            && members
                .iter()
                .all(|&i| members.iter().all(|&j| self.product(i, j).iter().all(|(k, _)| set.contains(k))))
    }

    /// Every subring containing `must_contain`, sorted by size then members.
    pub fn enumerate_subrings(&self, must_contain: &Subring) -> Result<Vec<Subring>> {
        let r = self.rank();
        if r > MAX_ENUM_RANK {
            return Err(Error::Capability(format!(
                "rank {r} exceeds the enumeration cap {MAX_ENUM_RANK}; use subring_generated for targeted closures"
            )));
        }
        self.check_indices(&must_contain.members)?;
        if !self.is_subring(&must_contain.members) {
            return Err(Error::Structural(format!("{must_contain} is not a subring")));
        }
        let masks = self.product_masks();
        let base = must_contain.members.iter().fold(0u32, |m, &i| m | 1 << i);
        let base = self.close_mask(&masks, base);
        let mut seen: HashSet<u32> = HashSet::from([base]);
        let mut frontier = vec![base];
        while !frontier.is_empty() {
            let found: HashSet<u32> = frontier
                .par_iter()
                .flat_map_iter(|&set| {
                    (0..r)
                        .filter(move |&x| set >> x & 1 == 0)
                        .map(|x| self.close_mask(&masks, set | 1 << x))
                        .collect::<Vec<_>>()
                })
                .collect();
            frontier = found.into_iter().filter(|s| seen.insert(*s)).collect();
        }
        let mut out: Vec<Subring> = seen
            .into_iter()
            .map(|m| Subring { members: (0..r).filter(|&i| m >> i & 1 == 1).collect() })
            .collect();
        out.sort();
        Ok(out)
    }

    /// `sum_{i in sub} d_i^2`.
    pub fn subring_dim(&self, dims: &DimVector, sub: &Subring) -> f64 {
        sub.members.iter().map(|&i| dims.values[i] * dims.values[i]).sum()
    }

    pub fn global_dim(&self, dims: &DimVector) -> f64 {
        dims.values.iter().map(|d| d * d).sum()
    }

    /// Deligne product; label `(a, b)` sits at index `a * other.rank() + b`.
    pub fn tensor(&self, other: &BasedRing) -> BasedRing {
        let (r1, r2) = (self.rank(), other.rank());
        let names = (0..r1 * r2).map(|x| format!("{}⊠{}", self.name(x / r2), other.name(x % r2))).collect();
        let dual = (0..r1 * r2).map(|x| self.dual[x / r2] * r2 + other.dual[x % r2]).collect();
        BasedRing::from_products(names, dual, |x, y| {
            let right = other.product(x % r2, y % r2);
            self.product(x / r2, y / r2)
                .into_iter()
                .flat_map(|(a, m)| right.iter().map(move |&(b, k)| (a * r2 + b, m * k)))
                .collect()
        })
        .expect("tensor of well-formed rings")
    }

    /// The pointed part: labels of Frobenius-Perron dimension one.
    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| (0..self.rank()).map(|j| self.n(i, self.dual[i], j)).sum::<u32>() == 1)
            .collect()
    }
}

impl fmt::Display for BasedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "based ring of rank {}", self.rank())?;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                let terms: Vec<String> = self
                    .product(i, j)
                    .into_iter()
                    .map(|(k, m)| if m == 1 { self.name(k).to_string() } else { format!("{m}{}", self.name(k)) })
                    .collect();
                writeln!(f, "  {} * {} = {}", self.name(i), self.name(j), terms.join(" + "))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimSource {
    FrobeniusPerron,
    Supplied,
}

/// Positive dimensions of the basis labels.
#[derive(Clone, Debug, PartialEq)]
pub struct DimVector {
    pub values: Vec<f64>,
    pub source: DimSource,
}

impl DimVector {
    pub fn supplied(values: Vec<f64>) -> Self {
        DimVector { values, source: DimSource::Supplied }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest residual of `d_i d_j = sum_k N_ij^k d_k`.
    pub fn homomorphism_residual(&self, ring: &BasedRing) -> f64 {
        let r = ring.rank();
        let d = &self.values;
        let mut worst = 0.0f64;
        for i in 0..r {
            for j in 0..r {
                let rhs: f64 = (0..r).map(|k| ring.n(i, j, k) as f64 * d[k]).sum();
                worst = worst.max((d[i] * d[j] - rhs).abs());
            }
        }
        worst
    }

    /// Checks `d_0 = 1`, positivity, dual symmetry and the ring-homomorphism identity.
    pub fn validate(&self, ring: &BasedRing, tol: f64) -> ValidationReport {
        let mut rep = ValidationReport::new();
        if self.values.len() != ring.rank() {
            rep.violate("length", vec![], format!("{} dims for rank {}", self.values.len(), ring.rank()));
            return rep;
        }
        rep.record(Check::residual("unit-dimension", (self.values[0] - 1.0).abs(), tol));
        for (i, &d) in self.values.iter().enumerate() {
            if d <= 0.0 {
                rep.violate("positivity", vec![i], format!("d = {d}"));
            }
        }
        let dual_res = (0..ring.rank())
            .map(|i| (self.values[i] - self.values[ring.dual(i)]).abs())
            .fold(0.0, f64::max);
        rep.record(Check::residual("dual-symmetry", dual_res, tol));
        rep.record(Check::residual("homomorphism", self.homomorphism_residual(ring), tol));
        rep
    }
}

/// A fusion subring, given by its sorted member labels (always containing 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subring {
    pub members: Vec<usize>,
}

impl Subring {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.push(0);
        members.sort_unstable();
        members.dedup();
        Subring { members }
    }

    pub fn unit() -> Self {
        Subring { members: vec![0] }
    }

    pub fn full(rank: usize) -> Self {
        Subring { members: (0..rank).collect() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subring) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn names(&self, ring: &BasedRing) -> Vec<String> {
        self.members.iter().map(|&i| ring.name(i).to_string()).collect()
    }
}

// Order by (size, members).
impl Ord for Subring {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl PartialOrd for Subring {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fibonacci() -> BasedRing {
        BasedRing::from_products(vec!["1".into(), "t".into()], vec![0, 1], |i, j| match (i, j) {
            (0, k) | (k, 0) => vec![(k, 1)],
            _ => vec![(0, 1), (1, 1)],
        })
        .unwrap()
    }

    #[test]
    fn trivial_ring_is_valid() {
        let r = BasedRing::trivial();
        assert!(r.validate().is_valid());
        assert_eq!(r.fp_dims().unwrap().values, vec![1.0]);
        assert_eq!(r.enumerate_subrings(&Subring::unit()).unwrap(), vec![Subring::unit()]);
        assert_eq!(r.subring_generated(&[0]).unwrap(), Subring::unit());
        assert_eq!(r.subring_dim(&r.fp_dims().unwrap(), &Subring::unit()), 1.0);
    }

    #[test]
    fn fibonacci_dimension_is_golden_ratio() {
        // d^2 = 1 + d
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        let d = fibonacci().fp_dims().unwrap();
        assert!((d.values[1] - golden).abs() < 1e-12);
        assert!(d.homomorphism_residual(&fibonacci()) < 1e-9);
    }

    #[test]
    fn structural_errors_skip_axioms() {
        let err = BasedRing::new(vec!["1".into(), "g".into()], vec![1; 7], vec![0, 1]).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        let err = BasedRing::new(vec!["1".into()], vec![1], vec![3]).unwrap_err();
        assert!(matches!(err, Error::InvalidIndex { index: 3, rank: 1 }));
    }

    #[test]
    fn broken_unit_and_dual_are_reported() {
        let mut fusion = fibonacci().fusion().to_vec();
        fusion[0] = 0; // 1*1 no longer contains 1
        let r = BasedRing::new(vec!["1".into(), "t".into()], fusion, vec![0, 1]).unwrap();
        let rep = r.validate();
        assert!(rep.has_axiom("unit"));
        assert!(rep.violations.iter().any(|v| v.axiom == "unit" && v.indices == vec![0, 0, 0]));

        let r = BasedRing::new(vec!["1".into(), "t".into()], fibonacci().fusion().to_vec(), vec![1, 0]).unwrap();
        assert!(r.validate().has_axiom("dual"));
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let names: Vec<String> = (0..25).map(|i| format!("g{i}")).collect();
        let r = BasedRing::from_products(names, (0..25).map(|i| (25 - i) % 25).collect(), |i, j| {
            vec![((i + j) % 25, 1)]
        })
        .unwrap();
        assert!(matches!(r.enumerate_subrings(&Subring::unit()), Err(Error::Capability(_))));
        // targeted closures still work past the cap
        assert_eq!(r.subring_generated(&[5]).unwrap().members, vec![0, 5, 10, 15, 20]);
    }

    #[test]
    fn must_contain_has_to_be_a_subring() {
        let names: Vec<String> = (0..4).map(|i| format!("g{i}")).collect();
        let z4 = BasedRing::from_products(names, vec![0, 3, 2, 1], |i, j| vec![((i + j) % 4, 1)]).unwrap();
        assert!(z4.enumerate_subrings(&Subring::new(vec![1])).is_err());
        let subs = z4.enumerate_subrings(&Subring::new(vec![2])).unwrap();
        assert_eq!(subs, vec![Subring::new(vec![2]), Subring::full(4)]);
    }

    #[test]
    fn subring_ordering_is_size_then_lexicographic() {
        let mut v = vec![Subring::new(vec![1, 2]), Subring::new(vec![3]), Subring::new(vec![1])];
        v.sort();
        assert_eq!(v, vec![Subring::new(vec![1]), Subring::new(vec![3]), Subring::new(vec![1, 2])]);
    }
}
