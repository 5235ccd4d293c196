//! Modular (S, T) data of a modular tensor category.
//!
//! `S` is unnormalized with `S[0][i] = d(i)` and `S[x][y] = tr(R_{y,x*} R_{x*,y})`, so that
//! `y -> S[x][y] / d(x)` is a character of the fusion ring and `S S^dagger = dim(C) I`.

use num_complex::Complex64;

use crate::basering::{BasedRing, DimVector};
use crate::error::{Error, Result};
use crate::report::{Check, ValidationReport};
use crate::scalar::Scalar;

/// Rounding tolerance for Verlinde structure constants.
pub const VERLINDE_ROUNDING: f64 = 1e-6;

/// Twists are accepted as roots of unity of order at most this.
pub const MAX_TWIST_ORDER: u64 = 10_000;

/// Above this rank Verlinde sums run in floats even for exact input.
const EXACT_VERLINDE_RANK: usize = 16;

#[derive(Clone, Debug)]
pub struct ModularData {
    labels: Vec<String>,
    dual: Vec<usize>,
    s: Vec<Vec<Scalar>>,
    twists: Vec<Scalar>,
}

impl ModularData {
    pub fn new(labels: Vec<String>, dual: Vec<usize>, s: Vec<Vec<Scalar>>, twists: Vec<Scalar>) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::Structural("rank must be positive".into()));
        }
        if dual.len() != r || twists.len() != r || s.len() != r || s.iter().any(|row| row.len() != r) {
            return Err(Error::Structural(format!("modular data of rank {r} has mismatched shapes")));
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= r) {
            return Err(Error::InvalidIndex { index: bad, rank: r });
        }
        Ok(ModularData { labels, dual, s, twists })
    }

    /// S from the balancing identity `S[a][b] = (theta_a theta_b)^-1 sum_c N_{a* b}^c theta_c d_c`.
    pub fn from_balancing(ring: &BasedRing, dims: &[Scalar], twists: Vec<Scalar>) -> Result<Self> {
        let r = ring.rank();
        if dims.len() != r || twists.len() != r {
            return Err(Error::Structural("dims and twists must match the ring rank".into()));
        }
        let inv_twists: Vec<Scalar> = twists
            .iter()
            .map(|t| t.recip().ok_or_else(|| Error::InconsistentData("zero twist".into())))
            .collect::<Result<_>>()?;
        let weights: Vec<Scalar> = (0..r).map(|c| &twists[c] * &dims[c]).collect();
        let mut s = vec![vec![Scalar::zero(); r]; r];
        for a in 0..r {
            for b in a..r {
                let mut acc = Scalar::zero();
                for (c, m) in ring.product(ring.dual(a), b) {
                    acc = &acc + &(&Scalar::int(m as i64) * &weights[c]);
                }
                let v = &(&acc * &inv_twists[a]) * &inv_twists[b];
                s[b][a] = v.clone();
                s[a][b] = v;
            }
        }
        Self::new(ring.names(), ring.duals().to_vec(), s, twists)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn s(&self, i: usize, j: usize) -> &Scalar {
        &self.s[i][j]
    }

    pub fn s_matrix(&self) -> &[Vec<Scalar>] {
        &self.s
    }

    pub fn twist(&self, i: usize) -> &Scalar {
        &self.twists[i]
    }

    pub fn twists(&self) -> &[Scalar] {
        &self.twists
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn is_exact(&self) -> bool {
        self.s.iter().flatten().chain(&self.twists).all(Scalar::is_exact)
    }

    /// Same data with every entry converted to floats.
    pub fn to_float(&self) -> Self {
        ModularData {
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            s: self.s.iter().map(|row| row.iter().map(Scalar::to_float).collect()).collect(),
            twists: self.twists.iter().map(Scalar::to_float).collect(),
        }
    }

    /// `d(i) = S[0][i]` as floats.
    pub fn dims(&self) -> Vec<f64> {
        self.s[0].iter().map(|x| x.to_c64().re).collect()
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector::supplied(self.dims())
    }

    /// `dim(C) = sum_i d(i)^2`, exact when S is.
    pub fn global_dim(&self) -> Scalar {
        self.s[0].iter().fold(Scalar::zero(), |acc, d| &acc + &(d * d))
    }

    pub fn validate(&self, tol: f64) -> ValidationReport {
        let r = self.rank();
        let mut rep = ValidationReport::new();
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                rep.violate("dual", vec![i], "dual is not an involution");
            }
        }
        if self.dual[0] != 0 {
            rep.violate("dual", vec![0], "unit must be self-dual");
        }
        for i in 0..r {
            for j in i + 1..r {
                if !self.s[i][j].approx_eq(&self.s[j][i], tol) {
                    rep.violate("symmetry", vec![i, j], "S is not symmetric");
                }
            }
        }
        if !self.s[0][0].approx_eq(&Scalar::one(), tol) {
            rep.violate("unit-dimension", vec![0], format!("S[0][0] = {}", self.s[0][0]));
        }
        for (i, d) in self.s[0].iter().enumerate() {
            let z = d.to_c64();
            if z.im.abs() > tol || z.re <= 0.0 {
                rep.violate("pseudounitary", vec![i], format!("dimension {d} is not positive"));
            }
        }
        let dim = self.global_dim();
        let mut worst = 0.0f64;
        let mut exact_ok = true;
        let all_exact = self.is_exact() && r <= EXACT_VERLINDE_RANK;
        for i in 0..r {
            for j in 0..r {
                if all_exact {
                    let mut acc = Scalar::zero();
                    for k in 0..r {
                        acc = &acc + &(&self.s[i][k] * &self.s[j][k].conj());
                    }
                    let target = if i == j { dim.clone() } else { Scalar::zero() };
                    if !acc.approx_eq(&target, tol) {
                        exact_ok = false;
                        rep.violate("unitarity", vec![i, j], format!("(S S^dagger)[{i}][{j}] = {acc}"));
                    }
                } else {
                    let acc: Complex64 = (0..r).map(|k| self.s[i][k].to_c64() * self.s[j][k].to_c64().conj()).sum();
                    let target = if i == j { dim.to_c64() } else { Complex64::new(0.0, 0.0) };
                    worst = worst.max((acc - target).norm());
                }
            }
        }
        if all_exact {
            rep.checks.push(Check::exact("unitarity", exact_ok));
        } else {
            rep.record(Check::residual("unitarity", worst / dim.to_c64().norm(), tol));
        }
        if !self.twists[0].approx_eq(&Scalar::one(), tol) {
            rep.violate("twist-unit", vec![0], format!("theta_0 = {}", self.twists[0]));
        }
        for (i, t) in self.twists.iter().enumerate() {
            if root_of_unity_order(t, tol).is_none() {
                rep.violate("twist-root-of-unity", vec![i], format!("theta = {t}"));
            }
        }
        rep
    }

    /// Fusion ring from the Verlinde formula.
    pub fn verlinde(&self) -> Result<BasedRing> {
        let r = self.rank();
        let data = if self.is_exact() && r <= EXACT_VERLINDE_RANK { self.clone() } else { self.to_float() };
        let dim = data.global_dim();
        let weights: Vec<Scalar> = (0..r).map(|m| &Scalar::one() / &(&dim * &data.s[0][m])).collect();
        let conj: Vec<Vec<Scalar>> = data.s.iter().map(|row| row.iter().map(Scalar::conj).collect()).collect();
        let mut fusion = vec![0u32; r * r * r];
        for i in 0..r {
            for j in 0..r {
                let pair: Vec<Scalar> = (0..r).map(|m| &(&data.s[i][m] * &data.s[j][m]) * &weights[m]).collect();
                for k in 0..r {
                    let v = (0..r).fold(Scalar::zero(), |acc, m| &acc + &(&pair[m] * &conj[k][m]));
                    let n = v.to_integer(VERLINDE_ROUNDING).ok_or_else(|| {
                        Error::InconsistentData(format!(
                            "Verlinde coefficient N[{i}][{j}][{k}] = {v} is not an integer"
                        ))
                    })?;
                    if n < 0 {
                        return Err(Error::InconsistentData(format!("N[{i}][{j}][{k}] = {n} is negative")));
                    }
                    fusion[(i * r + j) * r + k] = n as u32;
                }
            }
        }
        BasedRing::new(self.labels.clone(), fusion, self.dual.clone())
    }

    /// Row `x` is the character `y -> S[x][y] / S[0][x]`; row 0 is the dimension character.
    pub fn characters(&self) -> Vec<Vec<Scalar>> {
        (0..self.rank())
            .map(|x| (0..self.rank()).map(|y| &self.s[x][y] / &self.s[0][x]).collect())
            .collect()
    }

    /// Coefficients of `e_x = d(x)/dim(C) sum_y S[x][y] y*` in the label basis.
    pub fn central_idempotent(&self, x: usize) -> Result<Vec<Scalar>> {
        if x >= self.rank() {
            return Err(Error::InvalidIndex { index: x, rank: self.rank() });
        }
        let scale = &self.s[0][x] / &self.global_dim();
        let mut coeffs = vec![Scalar::zero(); self.rank()];
        for y in 0..self.rank() {
            coeffs[self.dual[y]] = &scale * &self.s[x][y];
        }
        Ok(coeffs)
    }

    /// Largest residual of `e_x e_y = delta_xy e_x` and `sum_x e_x = 1` in the Verlinde ring.
    pub fn idempotent_residual(&self, ring: &BasedRing) -> Result<f64> {
        let r = self.rank();
        let es: Vec<Vec<Complex64>> = (0..r)
            .map(|x| Ok(self.central_idempotent(x)?.iter().map(Scalar::to_c64).collect()))
            .collect::<Result<_>>()?;
        let mut worst = 0.0f64;
        for x in 0..r {
            for y in 0..r {
                let prod = complex_product(ring, &es[x], &es[y]);
                for k in 0..r {
                    let target = if x == y { es[x][k] } else { Complex64::new(0.0, 0.0) };
                    worst = worst.max((prod[k] - target).norm());
                }
            }
        }
        for k in 0..r {
            let total: Complex64 = es.iter().map(|e| e[k]).sum();
            let target = if k == 0 { 1.0 } else { 0.0 };
            worst = worst.max((total - target).norm());
        }
        Ok(worst)
    }

    /// Deligne product `self ⊠ other`; label `(a, b)` sits at index `a * other.rank() + b`.
    pub fn tensor(&self, other: &ModularData) -> ModularData {
        let (r1, r2) = (self.rank(), other.rank());
        let mut labels = Vec::with_capacity(r1 * r2);
        let mut dual = Vec::with_capacity(r1 * r2);
        let mut twists = Vec::with_capacity(r1 * r2);
        for a in 0..r1 {
            for b in 0..r2 {
                labels.push(format!("{}⊠{}", self.labels[a], other.labels[b]));
                dual.push(self.dual[a] * r2 + other.dual[b]);
                twists.push(&self.twists[a] * &other.twists[b]);
            }
        }
        let s = (0..r1 * r2)
            .map(|x| (0..r1 * r2).map(|y| &self.s[x / r2][y / r2] * &other.s[x % r2][y % r2]).collect())
            .collect();
        ModularData { labels, dual, s, twists }
    }

    /// Reversed braiding: conjugate S and T.
    pub fn reverse(&self) -> ModularData {
        ModularData {
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            s: self.s.iter().map(|row| row.iter().map(Scalar::conj).collect()).collect(),
            twists: self.twists.iter().map(Scalar::conj).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::Structural("label count does not match rank".into()));
        }
        self.labels = labels;
        Ok(self)
    }
}

/// Smallest `M <= MAX_TWIST_ORDER` with `t^M = 1`.
pub fn root_of_unity_order(t: &Scalar, tol: f64) -> Option<u64> {
    match t {
        Scalar::Exact(c) => {
            // roots of unity in Q(zeta_N) have order dividing lcm(2, N)
            let n = c.order() as u64;
            let bound = if n % 2 == 0 { n } else { 2 * n };
            let mut p = Scalar::Exact(c.clone());
            for m in 1..=bound.min(MAX_TWIST_ORDER) {
                if p.approx_eq(&Scalar::one(), 0.0) {
                    return Some(m);
                }
                p = &p * t;
            }
            None
        }
        Scalar::Float(z) => {
            if (z.norm() - 1.0).abs() > tol {
                return None;
            }
            let turns = z.arg() / (2.0 * std::f64::consts::PI);
            (1..=MAX_TWIST_ORDER).find(|&m| {
                let x = turns * m as f64;
                2.0 * std::f64::consts::PI * (x - x.round()).abs() < tol
            })
        }
    }
}

/// Product in a based ring with complex coefficients.
pub fn complex_product(ring: &BasedRing, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let r = ring.rank();
    let mut out = vec![Complex64::new(0.0, 0.0); r];
    for i in (0..r).filter(|&i| a[i].norm() > 0.0) {
        for j in (0..r).filter(|&j| b[j].norm() > 0.0) {
            let c = a[i] * b[j];
            for (k, m) in ring.product(i, j) {
                out[k] += c * m as f64;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{ising, toric_code};

    #[test]
    fn rank_one_data() {
        let md = ModularData::new(vec!["1".into()], vec![0], vec![vec![Scalar::one()]], vec![Scalar::one()]).unwrap();
        assert!(md.validate(1e-9).is_valid());
        assert_eq!(md.verlinde().unwrap(), BasedRing::trivial());
        let e = md.central_idempotent(0).unwrap();
        assert!(e[0].approx_eq(&Scalar::one(), 0.0));
    }

    #[test]
    fn toric_code_verlinde_is_klein_four() {
        let md = toric_code();
        assert!(md.validate(1e-9).is_valid());
        let ring = md.verlinde().unwrap();
        let (e, m, f) = (1, 2, 3);
        assert_eq!(ring.product(e, m), vec![(f, 1)]);
        assert_eq!(ring.product(e, e), vec![(0, 1)]);
        assert_eq!(ring.product(f, f), vec![(0, 1)]);
        let chars = md.characters();
        let row_e: Vec<i64> = chars[e].iter().map(|c| c.to_integer(0.0).unwrap()).collect();
        assert_eq!(row_e, vec![1, 1, -1, -1]);
        let vac = md.central_idempotent(0).unwrap();
        for c in vac {
            assert!(c.approx_eq(&(&Scalar::one() / &Scalar::int(4)), 0.0));
        }
    }

    #[test]
    fn ising_sigma_squared() {
        let md = ising();
        assert!(md.validate(1e-9).is_valid());
        let ring = md.verlinde().unwrap();
        assert_eq!(ring.product(2, 2), vec![(0, 1), (1, 1)]);
        assert!(ring.validate().is_valid());
        // e_sigma = (sqrt2/4) (sqrt2, -sqrt2, 0)
        let e = md.central_idempotent(2).unwrap();
        let expect = [0.5, -0.5, 0.0];
        for (c, x) in e.iter().zip(expect) {
            assert!(c.approx_eq(&Scalar::float(x, 0.0), 1e-12));
        }
        assert!(md.idempotent_residual(&ring).unwrap() < 1e-9);
    }

    #[test]
    fn balancing_reproduces_ising_s() {
        let md = ising();
        let ring = md.verlinde().unwrap();
        let rebuilt = ModularData::from_balancing(&ring, &md.s_matrix()[0], md.twists().to_vec()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(rebuilt.s(i, j).approx_eq(md.s(i, j), 0.0), "S[{i}][{j}]");
            }
        }
    }

    #[test]
    fn inconsistent_data_is_rejected() {
        let mut s: Vec<Vec<Scalar>> = ising().s_matrix().to_vec();
        s[2][2] = Scalar::one();
        s[1][1] = Scalar::int(2);
        let md = ModularData::new(ising().labels().to_vec(), vec![0, 1, 2], s, ising().twists().to_vec()).unwrap();
        assert!(!md.validate(1e-9).is_valid());
        assert!(matches!(md.verlinde(), Err(Error::InconsistentData(_))));
    }

    #[test]
    fn negative_dimensions_are_not_repivoted() {
        let s = vec![vec![Scalar::one(), Scalar::int(-1)], vec![Scalar::int(-1), Scalar::one()]];
        let md = ModularData::new(vec!["1".into(), "x".into()], vec![0, 1], s, vec![Scalar::one(), Scalar::zeta(4, 1)])
            .unwrap();
        assert!(md.validate(1e-9).has_axiom("pseudounitary"));
    }

    #[test]
    fn twist_orders() {
        assert_eq!(root_of_unity_order(&Scalar::zeta(16, 1), 1e-9), Some(16));
        assert_eq!(root_of_unity_order(&Scalar::zeta(16, 1).to_float(), 1e-9), Some(16));
        assert_eq!(root_of_unity_order(&Scalar::float(1.0, 0.1), 1e-9), None);
        assert_eq!(root_of_unity_order(&Scalar::int(-1), 1e-9), Some(2));
    }

    #[test]
    fn deligne_product_of_toric_codes() {
        let md = toric_code().tensor(&toric_code());
        assert_eq!(md.rank(), 16);
        assert!(md.validate(1e-9).is_valid());
        assert!(md.global_dim().approx_eq(&Scalar::int(16), 0.0));
        let ring = md.verlinde().unwrap();
        assert!(ring.validate().is_valid());
    }
}
