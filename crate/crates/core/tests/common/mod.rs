//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use fuscond::{BasedRing, FiniteGroup};

/// Every subset containing the unit that is closed under products and duals, by brute force.
pub fn brute_force_subrings(ring: &BasedRing) -> Vec<Vec<usize>> {
    let r = ring.rank();
    assert!(r <= 16, "brute force is for small rings");
    let mut found = Vec::new();
    for mask in 0u32..(1 << r) {
        if mask & 1 == 0 {
            continue;
        }
        let inside = |i: usize| mask >> i & 1 == 1;
        let members: Vec<usize> = (0..r).filter(|&i| inside(i)).collect();
        let closed = members.iter().all(|&i| inside(ring.dual(i)))
            && members
                .iter()
                .all(|&i| members.iter().all(|&j| (0..r).all(|k| ring.n(i, j, k) == 0 || inside(k))));
        if closed {
            found.push(members);
        }
    }
    found.sort();
    found
}

fn close(g: &FiniteGroup, seeds: &[usize]) -> Vec<usize> {
    let mut set = vec![0];
    set.extend_from_slice(seeds);
    set.sort_unstable();
    set.dedup();
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                next.push(g.mul(a, b));
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Conjugacy classes counted directly from the multiplication table.
pub fn class_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for a in 0..n {
        if seen[a] {
            continue;
        }
        count += 1;
        for h in 0..n {
            seen[g.mul(g.mul(h, a), g.inverse(h))] = true;
        }
    }
    count
}

/// Order of the commutator subgroup.
pub fn derived_order(g: &FiniteGroup) -> usize {
    let n = g.order();
    let mut comms = Vec::new();
    for a in 0..n {
        for b in 0..n {
            comms.push(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
        }
    }
    close(g, &comms).len()
}

/// All degree multisets allowed by: one degree per class, `|G/G'|` linear characters,
/// degrees dividing `|G|`, and `sum d^2 = |G|`.
pub fn feasible_degrees(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let k = class_count(g);
    let linear = n / derived_order(g);
    let divisors: Vec<usize> = (2..=n).filter(|d| n % d == 0 && d * d <= n).collect();
    let mut out = Vec::new();
    fn rec(divs: &[usize], start: usize, left: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if budget == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for i in start..divs.len() {
            let d2 = divs[i] * divs[i];
            if d2 * left > budget {
                break;
            }
            cur.push(divs[i]);
            rec(divs, i, left - 1, budget - d2, cur, out);
            cur.pop();
        }
    }
    if k >= linear && n >= linear {
        let mut cur = vec![1; linear];
        rec(&divisors, 0, k - linear, n - linear, &mut cur, &mut out);
    }
    out
}

/// Groups of order at most 24 used as a corpus, with their names.
pub fn small_groups() -> Vec<(String, FiniteGroup)> {
    let mut v: Vec<(String, FiniteGroup)> = (1..=24).map(|n| (format!("Z{n}"), FiniteGroup::cyclic(n))).collect();
    for m in 2..=12 {
        v.push((format!("D{}", 2 * m), FiniteGroup::dihedral(m)));
    }
    let (z2, z3, z4) = (FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4));
    let q8 = FiniteGroup::quaternion();
    let s3 = FiniteGroup::symmetric(3);
    let a4 = FiniteGroup::alternating(4);
    v.push(("Q8".into(), q8.clone()));
    v.push(("Q8xZ2".into(), q8.direct_product(&z2)));
    v.push(("Q8xZ3".into(), q8.direct_product(&z3)));
    v.push(("S3".into(), s3.clone()));
    v.push(("S3xZ3".into(), s3.direct_product(&z3)));
    v.push(("S3xZ4".into(), s3.direct_product(&z4)));
    v.push(("S3xZ2^2".into(), s3.direct_product(&z2).direct_product(&z2)));
    v.push(("A4".into(), a4.clone()));
    v.push(("A4xZ2".into(), a4.direct_product(&z2)));
    v.push(("S4".into(), FiniteGroup::symmetric(4)));
    v.push(("D8xZ3".into(), FiniteGroup::dihedral(4).direct_product(&z3)));
    v.push(("Z2^3".into(), z2.direct_product(&z2).direct_product(&z2)));
    v.push(("Z2^4".into(), z2.direct_product(&z2).direct_product(&z2).direct_product(&z2)));
    v
}

/// Character degrees from standard tables.
pub fn known_degrees(name: &str) -> Option<Vec<usize>> {
    Some(match name {
        "S3" | "D6" => vec![1, 1, 2],
        "D8" | "Q8" => vec![1, 1, 1, 1, 2],
        "D10" => vec![1, 1, 2, 2],
        "D12" => vec![1, 1, 1, 1, 2, 2],
        "A4" => vec![1, 1, 1, 3],
        "S4" => vec![1, 1, 2, 3, 3],
        "A4xZ2" => vec![1, 1, 1, 1, 1, 1, 3, 3],
        "S3xZ3" => vec![1, 1, 1, 1, 1, 1, 2, 2, 2],
        "Q8xZ2" => vec![1, 1, 1, 1, 1, 1, 1, 1, 2, 2],
        "D24" => vec![1, 1, 1, 1, 2, 2, 2, 2, 2],
        _ => return None,
    })
}
