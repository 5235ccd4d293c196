//! Small finite groups as multiplication tables, and their group rings.

use std::collections::HashMap;
use std::hash::Hash;

use crate::basering::BasedRing;

/// A finite group given by its Cayley table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Closes `gens` under `mul`, breadth first from the identity.
    pub fn generate<T, F>(identity: T, gens: &[T], mul: F, name: impl Fn(&T) -> String) -> Self
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let h = mul(&elems[i], g);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elems.len());
                    elems.push(h);
                }
            }
            i += 1;
        }
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect())
            .collect();
        FiniteGroup { names: elems.iter().map(name).collect(), table }
    }

    /// Permutation group on `0..degree`, composing left to right (`(p*q)(x) = q(p(x))`).
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Self {
        let id: Vec<usize> = (0..degree).collect();
        Self::generate(id, gens, |p, q| p.iter().map(|&x| q[x]).collect(), |p| format!("{p:?}"))
    }

    pub fn cyclic(n: usize) -> Self {
        Self::generate(0usize, &[1 % n.max(1)], |a, b| (a + b) % n, |a| format!("g^{a}"))
    }

    /// Dihedral group of order `2m`, elements `r^a s^b` with `s r s = r^-1`.
    pub fn dihedral(m: usize) -> Self {
        let mul = move |x: &(usize, usize), y: &(usize, usize)| {
            let a = if x.1 == 0 { (x.0 + y.0) % m } else { (x.0 + m - y.0) % m };
            (a, (x.1 + y.1) % 2)
        };
        Self::generate((0, 0), &[(1 % m, 0), (0, 1)], mul, |&(a, b)| {
            if b == 0 { format!("r^{a}") } else { format!("r^{a}s") }
        })
    }

    /// Quaternion group of order 8.
    pub fn quaternion() -> Self {
        // units +-1, +-i, +-j, +-k as (sign, axis)
        let mul = |x: &(i8, u8), y: &(i8, u8)| -> (i8, u8) {
            let (s, a) = (x.0 * y.0, (x.1, y.1));
            match a {
                (0, b) => (s, b),
                (b, 0) => (s, b),
                (p, q) if p == q => (-s, 0),
                (1, 2) => (s, 3),
                (2, 3) => (s, 1),
                (3, 1) => (s, 2),
                (2, 1) => (-s, 3),
                (3, 2) => (-s, 1),
                (1, 3) => (-s, 2),
                _ => unreachable!(),
            }
        };
        Self::generate((1, 0), &[(1, 1), (1, 2)], mul, |&(s, a)| {
            format!("{}{}", if s > 0 { "+" } else { "-" }, ["1", "i", "j", "k"][a as usize])
        })
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n > 1 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Self::from_permutations(n, &gens)
    }

    pub fn alternating(n: usize) -> Self {
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        Self::from_permutations(n, &gens)
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order(), other.order());
        let mut names = Vec::with_capacity(n * m);
        let mut table = vec![vec![0; n * m]; n * m];
        for a in 0..n {
            for b in 0..m {
                names.push(format!("({},{})", self.names[a], other.names[b]));
                for c in 0..n {
                    for d in 0..m {
                        table[a * m + b][c * m + d] = self.table[a][c] * m + other.table[b][d];
                    }
                }
            }
        }
        FiniteGroup { names, table }
    }

    /// Group from a Cayley table; `None` unless element 0 is the identity and every row and
    /// column is a permutation.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Option<Self> {
        let n = table.len();
        if names.len() != n || table.iter().any(|row| row.len() != n) {
            return None;
        }
        let perm = |v: Vec<usize>| {
            let mut seen = vec![false; n];
            v.into_iter().all(|k| k < n && !std::mem::replace(&mut seen[k], true))
        };
        let latin = (0..n).all(|a| perm(table[a].clone()) && perm((0..n).map(|b| table[b][a]).collect()));
        let identity = (0..n).all(|a| table[0][a] == a && table[a][0] == a);
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| table[table[a][b]][c] == table[a][table[b][c]])));
        (latin && identity && assoc).then_some(FiniteGroup { names, table })
    }

    /// Short isomorphism-type name for the small groups that occur here.
    pub fn describe(&self) -> String {
        let n = self.order();
        let orders: Vec<usize> = (0..n).map(|a| self.element_order(a)).collect();
        if n == 1 {
            return "trivial".into();
        }
        if self.is_abelian() {
            if orders.contains(&n) {
                return format!("Z{n}");
            }
            if orders.iter().all(|&o| o <= 2) {
                return format!("Z2^{}", n.trailing_zeros());
            }
            return format!("abelian group of order {n}");
        }
        if n % 2 == 0 {
            if let Some(r) = (0..n).find(|&a| orders[a] == n / 2) {
                let mut rot = vec![false; n];
                let mut x = 0;
                loop {
                    rot[x] = true;
                    x = self.mul(x, r);
                    if x == 0 {
                        break;
                    }
                }
                if (0..n).filter(|&a| !rot[a]).all(|a| orders[a] == 2) {
                    return format!("D{n}");
                }
                if n == 8 {
                    return "Q8".into();
                }
            }
        }
        if n == 24 && orders.iter().filter(|&&o| o == 2).count() == 9 {
            return "S4".into();
        }
        format!("nonabelian group of order {n}")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).expect("group table has inverses")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Conjugacy classes, each sorted, in order of first element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> =
                (0..n).map(|g| self.mul(self.mul(g, a), self.inverse(g))).collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                class_of[c] = classes.len();
            }
            classes.push(cls);
        }
        classes
    }

    /// Element orders.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The group ring as a based ring; labels are the element names.
    pub fn group_ring(&self) -> BasedRing {
        let dual = (0..self.order()).map(|a| self.inverse(a)).collect();
        BasedRing::from_products(self.names.clone(), dual, |i, j| vec![(self.mul(i, j), 1)])
            .expect("group tables give well-formed rings")
    }
}

/// Cyclic group ring `Z[Z_n]` with labels `g^k`.
pub fn cyclic_ring(n: usize) -> BasedRing {
    FiniteGroup::cyclic(n).group_ring()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_classes() {
        assert_eq!(FiniteGroup::cyclic(7).order(), 7);
        assert_eq!(FiniteGroup::dihedral(3).order(), 6);
        assert_eq!(FiniteGroup::dihedral(3).conjugacy_classes().len(), 3);
        assert_eq!(FiniteGroup::quaternion().order(), 8);
        assert_eq!(FiniteGroup::quaternion().conjugacy_classes().len(), 5);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::symmetric(4).conjugacy_classes().len(), 5);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
        assert_eq!(FiniteGroup::alternating(4).conjugacy_classes().len(), 4);
        let k4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert!(k4.is_abelian());
        assert_eq!((0..4).map(|a| k4.element_order(a)).max(), Some(2));
        assert_eq!(k4.describe(), "Z2^2");
        assert_eq!(FiniteGroup::dihedral(3).describe(), "D6");
        assert_eq!(FiniteGroup::quaternion().describe(), "Q8");
        assert_eq!(FiniteGroup::cyclic(6).describe(), "Z6");
        assert_eq!(FiniteGroup::symmetric(4).describe(), "S4");
    }

    #[test]
    fn tables_round_trip() {
        let g = FiniteGroup::dihedral(4);
        assert_eq!(FiniteGroup::from_table(g.names.clone(), g.table.clone()), Some(g));
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table(vec!["a".into(), "b".into()], bad).is_none());
    }

    #[test]
    fn group_rings_validate() {
        for g in [FiniteGroup::cyclic(5), FiniteGroup::dihedral(4), FiniteGroup::quaternion()] {
            assert!(g.group_ring().validate().is_valid());
        }
    }
}
