//! Built-in examples: the lattice-VOA families and small oracle MTCs.
//!
//! The `A_{2n}` family is `C = Mod(V_L^+) ⊠ Mod(V_K^+)` with `A = V_E` holomorphic, where
//! `L` is the `A_{2n}` root lattice. Its ambient S-matrix is obtained from the ADL fusion
//! rules, the tabulated twists and dimensions by the balancing identity. The `A_{2n+1}`
//! family only carries dimensions and twists.

use crate::basering::{BasedRing, DimVector, Subring};
use crate::condensation::{Ambient, CondensableAlgebra, CondensationBundle};
use crate::error::{Error, Result};
use crate::modulardata::ModularData;
use crate::scalar::Scalar;

/// Largest family parameter accepted by [`build`].
pub const MAX_FAMILY_N: usize = 6;

#[derive(Clone, Debug)]
pub enum ExampleSpec {
    /// `L = A_{2n}`: `K(C_A) = D_{2(2n+1)} ∪ {X, Y}`.
    A2n(usize),
    /// `L = A_{2n+1}`: `K(C_A) = D_{2(2n+2)} ∪ {X1, X2, Y1, Y2}`.
    A2nPlus1(usize),
    /// `V_L^+ ⊂ V_L` for `L = A_{2n}`: `K(C_A)` is Tambara-Yamagami over `Z_{2n+1}`.
    VLplusOrbifold(usize),
    ToricCode,
    IsingSquare,
    /// `U ⊠ U^rev` with the diagonal algebra `⊕ i ⊠ i*`.
    CosetDiagonal(Box<ModularData>),
}

impl ExampleSpec {
    /// Names accepted on the command line.
    pub const NAMES: [&'static str; 6] = ["a2n", "a2n1", "vl-orbifold", "toric", "ising-square", "coset"];

    pub fn from_name(name: &str, n: usize, md: Option<ModularData>) -> Result<Self> {
        Ok(match name {
            "a2n" => ExampleSpec::A2n(n),
            "a2n1" => ExampleSpec::A2nPlus1(n),
            "vl-orbifold" => ExampleSpec::VLplusOrbifold(n),
            "toric" => ExampleSpec::ToricCode,
            "ising-square" => ExampleSpec::IsingSquare,
            "coset" => ExampleSpec::CosetDiagonal(Box::new(md.unwrap_or_else(ising))),
            other => {
                return Err(Error::Unsupported(format!(
                    "unknown example {other:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }
}

pub fn build(spec: &ExampleSpec) -> Result<CondensationBundle> {
    let check_n = |n: usize| {
        if (1..=MAX_FAMILY_N).contains(&n) {
            Ok(n)
        } else {
            Err(Error::Unsupported(format!("family parameter n = {n} outside 1..={MAX_FAMILY_N}")))
        }
    };
    match spec {
        ExampleSpec::A2n(n) => a2n(check_n(*n)?),
        ExampleSpec::A2nPlus1(n) => a2n_plus_1(check_n(*n)?),
        ExampleSpec::VLplusOrbifold(n) => vl_orbifold(check_n(*n)?),
        ExampleSpec::ToricCode => toric_bundle(),
        ExampleSpec::IsingSquare => coset_diagonal(&ising()),
        ExampleSpec::CosetDiagonal(md) => coset_diagonal(md),
    }
}

/// Drinfeld center of `Vec_{Z_2}`: labels `1, e, m, f`.
pub fn toric_code() -> ModularData {
    let s = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
        .iter()
        .map(|row| row.iter().map(|&k| Scalar::int(k)).collect())
        .collect();
    let t = vec![Scalar::one(), Scalar::one(), Scalar::one(), Scalar::int(-1)];
    ModularData::new(names(&["1", "e", "m", "f"]), vec![0, 1, 2, 3], s, t).expect("toric code data")
}

/// Ising: labels `1, psi, sigma`, `theta_sigma = e^{i pi / 8}`.
pub fn ising() -> ModularData {
    let r2 = Scalar::sqrt_int(2);
    let m2 = -&r2;
    let s = vec![
        vec![Scalar::one(), Scalar::one(), r2.clone()],
        vec![Scalar::one(), Scalar::one(), m2.clone()],
        vec![r2, m2, Scalar::zero()],
    ];
    let t = vec![Scalar::one(), Scalar::int(-1), Scalar::zeta(16, 1)];
    ModularData::new(names(&["1", "psi", "sigma"]), vec![0, 1, 2], s, t).expect("Ising data")
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Fusion ring of `Mod(V_L^+)` for `L = A_{2n}`.
///
/// Labels `V+, V-, {p}1..{p}n, T+, T-`; `{p}r` is `V_{L+lambda_r}` and `T±` the twisted sectors.
pub fn vlplus_ring(n: usize, prefix: &str) -> BasedRing {
    let big = 2 * n + 1;
    let (vp, vm, tp, tm) = (0, 1, n + 2, n + 3);
    let lam = |r: usize| -> usize {
        let r = r % big;
        1 + r.min(big - r)
    };
    let mut labels = names(&["V+", "V-"]);
    labels.extend((1..=n).map(|r| format!("{prefix}{r}")));
    labels.extend(names(&["T+", "T-"]));
    let is_lam = |i: usize| (2..n + 2).contains(&i);
    let sum_lam = || (1..=n).map(|r| (lam(r), 1)).collect::<Vec<_>>();
    BasedRing::from_products(labels, (0..n + 4).collect(), |i, j| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        match (a, b) {
            (0, x) => vec![(x, 1)],
            (1, 1) => vec![(vp, 1)],
            (1, x) if is_lam(x) => vec![(x, 1)],
            (1, x) => vec![(if x == tp { tm } else { tp }, 1)],
            (x, y) if is_lam(x) && is_lam(y) => {
                let (ri, rj) = (x - 1, y - 1);
                if ri == rj {
                    vec![(vp, 1), (vm, 1), (lam(2 * ri), 1)]
                } else {
                    vec![(lam(ri + rj), 1), (lam(ri.abs_diff(rj)), 1)]
                }
            }
            (x, _) if is_lam(x) => vec![(tp, 1), (tm, 1)],
            (x, y) => {
                // both twisted: T+T+ = T-T- = V+ + sum, T+T- = V- + sum
                let mut out = sum_lam();
                out.push((if x == y { vp } else { vm }, 1));
                out
            }
        }
    })
    .expect("V_L^+ fusion rules are well formed")
}

/// Rank of the complementary lattice `K`: `rank L + rank K ≡ 0 (mod 8)`, taken in `1..=8`.
fn complement_rank(rank_l: usize) -> i64 {
    let d = (8 - (rank_l % 8) as i64) % 8;
    if d == 0 {
        8
    } else {
        d
    }
}

/// Modular data of `Mod(V_L^+)` (`reversed = false`) or `Mod(V_K^+)` (`reversed = true`).
pub fn vlplus_modular_data(n: usize, reversed: bool) -> ModularData {
    let big = (2 * n + 1) as i64;
    let prefix = if reversed { "M" } else { "L" };
    let ring = vlplus_ring(n, prefix);
    let root = Scalar::sqrt_int(big as u64);
    let mut dims = vec![Scalar::one(), Scalar::one()];
    dims.extend((0..n).map(|_| Scalar::int(2)));
    dims.extend([root.clone(), root]);
    let sign = if reversed { -1 } else { 1 };
    let mut twists = vec![Scalar::one(), Scalar::one()];
    twists.extend((1..=n as i64).map(|r| Scalar::zeta(2 * big as u32, sign * r * (big - r))));
    let t = if reversed { Scalar::zeta(16, complement_rank(2 * n)) } else { Scalar::zeta(8, n as i64) };
    twists.push(t.clone());
    twists.push(-&t);
    ModularData::from_balancing(&ring, &dims, twists).expect("balanced V_L^+ data")
}

fn deligne_ambient(l: &ModularData, k: &ModularData) -> Result<Ambient> {
    let md = l.tensor(k);
    let ring = l.verlinde()?.tensor(&k.verlinde()?);
    Ok(Ambient::Modular { md, ring })
}

/// Dihedral group `<t, s>` of order `2m` followed by `extra` labels.
///
/// `t^a s^b` sits at index `a + b m`.
struct Dihedral {
    m: usize,
}

impl Dihedral {
    fn names(&self) -> Vec<String> {
        let rot = |a: usize| match a {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{a}"),
        };
        let mut out: Vec<String> = (0..self.m).map(|a| if a == 0 { "1".into() } else { rot(a) }).collect();
        out.extend((0..self.m).map(|a| format!("{}s", rot(a))));
        out
    }

    fn elem(&self, a: usize, b: usize) -> usize {
        a % self.m + b * self.m
    }

    fn split(&self, g: usize) -> (usize, usize) {
        (g % self.m, g / self.m)
    }

    fn mul(&self, g: usize, h: usize) -> usize {
        let ((a, b), (c, d)) = (self.split(g), self.split(h));
        let c = if b == 0 { c } else { (self.m - c) % self.m };
        self.elem(a + c, (b + d) % 2)
    }

    fn inv(&self, g: usize) -> usize {
        let (a, b) = self.split(g);
        if b == 1 {
            g
        } else {
            self.elem(self.m - a, 0)
        }
    }

    /// `sum_{a in set} t^a s^b`.
    fn sum(&self, rotations: impl Iterator<Item = usize>, b: usize) -> Vec<(usize, u32)> {
        rotations.map(|a| (self.elem(a, b), 1)).collect()
    }
}

/// `D_{2N} ∪ {X, Y}` with `hX = X`, `gX = Y` off `H = <t>`, `X^2 = Y^2 = ΣH`, `XY = Σ(G∖H)`.
pub fn a2n_module_ring(n: usize) -> BasedRing {
    let m = 2 * n + 1;
    let g = Dihedral { m };
    let (x, y) = (2 * m, 2 * m + 1);
    let mut labels = g.names();
    labels.extend(names(&["X", "Y"]));
    let mut dual: Vec<usize> = (0..2 * m).map(|e| g.inv(e)).collect();
    dual.extend([x, y]);
    BasedRing::from_products(labels, dual, |i, j| match (i < 2 * m, j < 2 * m) {
        (true, true) => vec![(g.mul(i, j), 1)],
        (true, false) | (false, true) => {
            let (e, o) = if i < 2 * m { (i, j) } else { (j, i) };
            let in_h = g.split(e).1 == 0;
            vec![(if in_h { o } else if o == x { y } else { x }, 1)]
        }
        (false, false) => g.sum(0..m, usize::from(i != j)),
    })
    .expect("A_2n module ring")
}

/// `D_{2(2n+2)} ∪ {X1, X2, Y1, Y2}`.
pub fn a2n_plus_1_module_ring(n: usize) -> BasedRing {
    let m = 2 * n + 2;
    let g = Dihedral { m };
    let base = 2 * m;
    // nonpointed label base + 2 * kind + i: kind 0 = X, 1 = Y; i in {0, 1}
    let np = |kind: usize, i: usize| base + 2 * kind + i % 2;
    let mut labels = g.names();
    labels.extend(names(&["X1", "X2", "Y1", "Y2"]));
    let mut dual: Vec<usize> = (0..base).map(|e| g.inv(e)).collect();
    dual.extend(base..base + 4);
    let evens = move || (0..m).step_by(2);
    let odds = move || (1..m).step_by(2);
    BasedRing::from_products(labels, dual, |i, j| match (i < base, j < base) {
        (true, true) => vec![(g.mul(i, j), 1)],
        (true, false) | (false, true) => {
            let (e, o) = if i < base { (i, j) } else { (j, i) };
            let (a, b) = g.split(e);
            let (kind, idx) = ((o - base) / 2, (o - base) % 2);
            vec![(np((kind + b) % 2, idx + a), 1)]
        }
        (false, false) => {
            let (ki, ii) = ((i - base) / 2, (i - base) % 2);
            let (kj, ij) = ((j - base) / 2, (j - base) % 2);
            let b = usize::from(ki != kj);
            if ii == ij {
                g.sum(evens(), b)
            } else {
                g.sum(odds(), b)
            }
        }
    })
    .expect("A_2n+1 module ring")
}

/// Index of `(a, b)` in a Deligne product whose second factor has rank `r2`.
fn pair(a: usize, b: usize, r2: usize) -> usize {
    a * r2 + b
}

fn a2n(n: usize) -> Result<CondensationBundle> {
    let (l, k) = (vlplus_modular_data(n, false), vlplus_modular_data(n, true));
    let r = n + 4;
    let ambient = deligne_ambient(&l, &k)?;
    let mut mult = vec![0u32; r * r];
    for a in 0..2 {
        for b in 0..2 {
            mult[pair(a, b, r)] = 1;
        }
    }
    for i in 2..n + 2 {
        mult[pair(i, i, r)] = 2;
    }
    let ring = a2n_module_ring(n);
    let m = 2 * n + 1;
    let root = (m as f64).sqrt();
    let mut d_a = vec![1.0; 2 * m];
    d_a.extend([root, root]);
    let (x, y) = (2 * m, 2 * m + 1);
    // alpha on each factor: V± -> 1, lambda_r -> t^r + t^-r, T± -> Y (L side) or X (K side)
    let factor = |twisted: usize| -> Vec<Vec<f64>> {
        (0..r)
            .map(|i| {
                let mut v = vec![0.0; ring.rank()];
                match i {
                    0 | 1 => v[0] = 1.0,
                    i if i < n + 2 => {
                        let rr = i - 1;
                        v[rr] += 1.0;
                        v[m - rr] += 1.0;
                    }
                    _ => v[twisted] = 1.0,
                }
                v
            })
            .collect()
    };
    let (al, ak) = (factor(y), factor(x));
    let induction = product_induction(&ring, &al, &ak);
    let alg = CondensableAlgebra::new(ambient, mult)?;
    CondensationBundle::new(alg, ring, Some(DimVector::supplied(d_a)), Some(induction), Subring::unit())
}

/// `M[(a, b)] = alpha_L(a) alpha_K(b)` in the module ring.
fn product_induction(ring: &BasedRing, left: &[Vec<f64>], right: &[Vec<f64>]) -> Vec<Vec<u32>> {
    left.iter()
        .flat_map(|a| right.iter().map(move |b| ring.multiply(a, b).iter().map(|&v| v.round() as u32).collect()))
        .collect()
}

/// Labels, dimensions and twists of `Mod(V_L^+)` for `L = A_{2n+1}`.
fn a2n_plus_1_factor(n: usize, reversed: bool) -> (Vec<String>, Vec<f64>, Vec<Scalar>) {
    let m = 2 * n + 2;
    let p = if reversed { "M" } else { "L" };
    let mut labels = names(&["V+", "V-"]);
    labels.push(format!("{p}{}+", n + 1));
    labels.push(format!("{p}{}-", n + 1));
    labels.extend((1..=n).map(|r| format!("{p}{r}")));
    labels.extend(names(&["T1+", "T1-", "T2+", "T2-"]));
    let root = ((n + 1) as f64).sqrt();
    let mut dims = vec![1.0; 4];
    dims.extend(std::iter::repeat_n(2.0, n));
    dims.extend([root; 4]);
    let sign = if reversed { -1 } else { 1 };
    let half = Scalar::zeta(4, sign * (n as i64 + 1));
    let mut twists = vec![Scalar::one(), Scalar::one(), half.clone(), half];
    twists.extend((1..=n as i64).map(|r| Scalar::zeta(2 * m as u32, sign * r * (m as i64 - r))));
    let t = if reversed { Scalar::zeta(16, complement_rank(2 * n + 1)) } else { Scalar::zeta(16, 2 * n as i64 + 1) };
    let mt = -&t;
    twists.extend([t.clone(), mt.clone(), t, mt]);
    (labels, dims, twists)
}

fn a2n_plus_1(n: usize) -> Result<CondensationBundle> {
    let (ll, ld, lt) = a2n_plus_1_factor(n, false);
    let (kl, kd, kt) = a2n_plus_1_factor(n, true);
    let r = ll.len();
    let mut labels = Vec::with_capacity(r * r);
    let mut dims = Vec::with_capacity(r * r);
    let mut twists = Vec::with_capacity(r * r);
    for a in 0..r {
        for b in 0..r {
            labels.push(format!("{}⊠{}", ll[a], kl[b]));
            dims.push(ld[a] * kd[b]);
            twists.push(&lt[a] * &kt[b]);
        }
    }
    let ambient = Ambient::weighted(labels, (0..r * r).collect(), dims, twists)?;
    let mut mult = vec![0u32; r * r];
    for a in 0..2 {
        for b in 0..2 {
            mult[pair(a, b, r)] = 1;
            mult[pair(a + 2, b + 2, r)] = 1;
        }
    }
    for i in 4..n + 4 {
        mult[pair(i, i, r)] = 2;
    }
    let ring = a2n_plus_1_module_ring(n);
    let root = ((n + 1) as f64).sqrt();
    let mut d_a = vec![1.0; 2 * (2 * n + 2)];
    d_a.extend([root; 4]);
    let alg = CondensableAlgebra::new(ambient, mult)?;
    CondensationBundle::new(alg, ring, Some(DimVector::supplied(d_a)), None, Subring::unit())
}

/// Tambara-Yamagami ring over `Z_m`: labels `1, g, .., g^{m-1}, T`.
pub fn tambara_yamagami(m: usize) -> BasedRing {
    let mut labels: Vec<String> = (0..m)
        .map(|a| match a {
            0 => "1".into(),
            1 => "g".into(),
            _ => format!("g^{a}"),
        })
        .collect();
    labels.push("T".into());
    let mut dual: Vec<usize> = (0..m).map(|a| (m - a) % m).collect();
    dual.push(m);
    BasedRing::from_products(labels, dual, |i, j| match (i < m, j < m) {
        (true, true) => vec![((i + j) % m, 1)],
        (false, false) => (0..m).map(|a| (a, 1)).collect(),
        _ => vec![(m, 1)],
    })
    .expect("Tambara-Yamagami ring")
}

fn vl_orbifold(n: usize) -> Result<CondensationBundle> {
    let md = vlplus_modular_data(n, false);
    let m = 2 * n + 1;
    let ring = tambara_yamagami(m);
    let induction = (0..n + 4)
        .map(|i| {
            let mut v = vec![0u32; m + 1];
            match i {
                0 | 1 => v[0] = 1,
                i if i < n + 2 => {
                    let r = i - 1;
                    v[r] += 1;
                    v[m - r] += 1;
                }
                _ => v[m] = 1,
            }
            v
        })
        .collect();
    let mut mult = vec![0u32; n + 4];
    mult[0] = 1;
    mult[1] = 1;
    let mut d_a = vec![1.0; m];
    d_a.push((m as f64).sqrt());
    let alg = CondensableAlgebra::new(Ambient::modular(md)?, mult)?;
    let local = Subring::new((0..m).collect());
    CondensationBundle::new(alg, ring, Some(DimVector::supplied(d_a)), Some(induction), local)
}

fn toric_bundle() -> Result<CondensationBundle> {
    let md = toric_code();
    let ring = BasedRing::from_products(names(&["1", "M"]), vec![0, 1], |i, j| vec![((i + j) % 2, 1)])?;
    let induction = vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]];
    let alg = CondensableAlgebra::new(Ambient::modular(md)?, vec![1, 1, 0, 0])?;
    CondensationBundle::new(alg, ring, Some(DimVector::supplied(vec![1.0, 1.0])), Some(induction), Subring::unit())
}

fn coset_diagonal(u: &ModularData) -> Result<CondensationBundle> {
    let ring = u.verlinde()?;
    let r = u.rank();
    let rev = u.reverse();
    let ambient = deligne_ambient(u, &rev)?;
    let mut mult = vec![0u32; r * r];
    for i in 0..r {
        mult[pair(i, u.dual(i), r)] = 1;
    }
    let induction =
        (0..r * r).map(|x| (0..r).map(|k| ring.n(x / r, x % r, k)).collect()).collect();
    let alg = CondensableAlgebra::new(ambient, mult)?;
    CondensationBundle::new(alg, ring, Some(u.dim_vector()), Some(induction), Subring::unit())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vlplus_rings_validate_and_balance() {
        for n in 1..=4 {
            let ring = vlplus_ring(n, "L");
            assert!(ring.validate().is_valid(), "n = {n}");
            for reversed in [false, true] {
                let md = vlplus_modular_data(n, reversed);
                let rep = md.validate(1e-9);
                assert!(rep.is_valid(), "n = {n}: {rep}");
                assert_eq!(md.verlinde().unwrap().fusion(), ring.fusion(), "n = {n}");
                assert!((md.global_dim().to_c64().re - (8 * n + 4) as f64).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn a2n_module_ring_relations() {
        let ring = a2n_module_ring(1);
        assert_eq!(ring.rank(), 8);
        assert!(ring.validate().is_valid());
        let x = ring.index_of("X").unwrap();
        let y = ring.index_of("Y").unwrap();
        let t = ring.index_of("t").unwrap();
        let s = ring.index_of("s").unwrap();
        assert_eq!(ring.product(x, x), vec![(0, 1), (t, 1), (ring.index_of("t^2").unwrap(), 1)]);
        assert_eq!(ring.product(s, x), vec![(y, 1)]);
        assert_eq!(ring.product(t, y), vec![(y, 1)]);
        assert!(ring.product(x, y).iter().all(|&(k, _)| ring.name(k).ends_with('s')));
        let fp = ring.fp_dims().unwrap();
        assert!((fp.values[x] - 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn a2n_plus_1_module_ring_relations() {
        for n in 1..=4 {
            let ring = a2n_plus_1_module_ring(n);
            assert_eq!(ring.rank(), 4 * n + 8);
            assert!(ring.validate().is_valid(), "n = {n}: {}", ring.validate());
        }
        let ring = a2n_plus_1_module_ring(1);
        let (x1, y1) = (ring.index_of("X1").unwrap(), ring.index_of("Y1").unwrap());
        let sub = ring.subring_generated(&[x1, y1]).unwrap();
        // D^1 = <t^2, s> has order 4 in D_8
        assert_eq!(sub.len(), 6);
    }

    #[test]
    fn toric_and_ising_data_validate() {
        assert!(toric_code().validate(1e-9).is_valid());
        assert!(ising().validate(1e-9).is_valid());
    }

    #[test]
    fn every_builtin_bundle_checks_clean() {
        let specs = [
            ExampleSpec::A2n(1),
            ExampleSpec::A2n(2),
            ExampleSpec::A2nPlus1(1),
            ExampleSpec::A2nPlus1(2),
            ExampleSpec::VLplusOrbifold(1),
            ExampleSpec::VLplusOrbifold(2),
            ExampleSpec::ToricCode,
            ExampleSpec::IsingSquare,
        ];
        for spec in specs {
            let b = build(&spec).unwrap();
            let rep = b.check(1e-9);
            assert!(rep.is_valid(), "{spec:?}: {rep}");
        }
    }

    #[test]
    fn out_of_range_parameters_are_rejected() {
        assert!(matches!(build(&ExampleSpec::A2n(0)), Err(Error::Unsupported(_))));
        assert!(matches!(build(&ExampleSpec::A2n(7)), Err(Error::Unsupported(_))));
        assert!(ExampleSpec::from_name("e8", 1, None).is_err());
    }
}
