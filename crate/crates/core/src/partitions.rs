//! Integer partitions: cells, generalized arms/legs/hooks, contents,
//! transpose, enumeration, and the rank-2 blending bijection with charge.

use std::fmt;

/// Weakly decreasing sequence of positive integers; the empty partition is
/// the empty list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Cell (i, j) of a Young diagram, 1-based: row i, column j.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |mu|
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// l(mu)
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// mu_i with 1-based i; zero beyond the last part.
    pub fn part(&self, i: u32) -> u32 {
        if i == 0 || i as usize > self.parts.len() {
            0
        } else {
            self.parts[i as usize - 1]
        }
    }

    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| {
            (1..=p).map(move |j| Cell {
                row: i as u32 + 1,
                col: j,
            })
        })
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Multiplicity of a part value.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Part values with their multiplicities, descending.
    pub fn part_multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Text format: comma-separated parts, "-" for the empty partition.
    pub fn parse(s: &str) -> Option<Partition> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Some(Partition::empty());
        }
        let parts: Option<Vec<u32>> = s.split(',').map(|p| p.trim().parse().ok()).collect();
        let parts = parts?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.contains(&0) {
            return None;
        }
        Some(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "-")
        } else {
            let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

/// Generalized arm length a_la(c) = la_i - j; may be negative, and the cell
/// need not lie in la.
pub fn arm(la: &Partition, c: Cell) -> i64 {
    la.part(c.row) as i64 - c.col as i64
}

/// Generalized leg length l_la(c) = la^t_j - i.
pub fn leg(la: &Partition, c: Cell) -> i64 {
    leg_t(&la.transpose(), c)
}

/// Leg via a precomputed transpose (saves recomputation in cell loops).
pub fn leg_t(la_t: &Partition, c: Cell) -> i64 {
    la_t.part(c.col) as i64 - c.row as i64
}

/// Hook length a + l + 1 of a cell inside mu.
pub fn hook(mu: &Partition, c: Cell) -> u32 {
    assert!(mu.contains_cell(c), "hook of a cell outside the diagram");
    let h = arm(mu, c) + leg(mu, c) + 1;
    debug_assert!(h >= 1);
    h as u32
}

/// All hook lengths of mu.
pub fn hooks(mu: &Partition) -> Vec<u32> {
    let mt = mu.transpose();
    mu.cells()
        .map(|c| (arm(mu, c) + leg_t(&mt, c) + 1) as u32)
        .collect()
}

/// Content j - i of a cell.
pub fn content(c: Cell) -> i64 {
    c.col as i64 - c.row as i64
}

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
pub fn enumerate(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(n: u32, maxp: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = maxp.min(n);
        for p in (1..=top).rev() {
            current.push(p);
            rec(n - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of 0..=n, smaller sizes first.
pub fn enumerate_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(enumerate).collect()
}

/// Partition count p(n).
pub fn partition_count(n: u32) -> u64 {
    // Euler recurrence with generalized pentagonal numbers
    let n = n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > m && g2 > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 <= m {
                total += sign * p[m - g1];
            }
            if g2 <= m {
                total += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = total;
    }
    p[n] as u64
}

/// Rank-2 blending data: charge and the two component partitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Blend {
    pub charge: i64,
    pub comp1: Partition,
    pub comp2: Partition,
}

/// Descending index set {mu_j - j + 1} of a partition, first `len` entries.
fn index_set(mu: &Partition, len: usize) -> Vec<i64> {
    (1..=len as i64)
        .map(|j| mu.part(j as u32) as i64 - j + 1)
        .collect()
}

/// The staircase partition nu(b) = blend(b, -, -):
/// (2b, 2b-1, ..., 1) for b >= 0 and (-2b-1, -2b-2, ..., 1) for b < 0.
pub fn nu(b: i64) -> Partition {
    let top = if b >= 0 { 2 * b } else { -2 * b - 1 };
    Partition::new((1..=top).rev().map(|v| v as u32).collect())
}

/// Interleave the two component index sets into one partition.
///
/// Component 1 occupies the odd integers with shift -b, component 2 the even
/// integers with shift +b; this is the unique convention under which
/// blending is a bijection, |mu| = 2|mu1| + 2|mu2| + 2b^2 + b, the empty
/// blend is nu(b), and the charge matches the wedge-module grading.
pub fn blend(b: i64, mu1: &Partition, mu2: &Partition) -> Partition {
    let len = mu1.len()
        + mu2.len()
        + (mu1.size() + mu2.size()) as usize
        + 2 * b.unsigned_abs() as usize
        + 8;
    let mut c: Vec<i64> = Vec::with_capacity(2 * len);
    for j in 1..=len as i64 {
        c.push(2 * (mu1.part(j as u32) as i64 - j - b) + 1);
        c.push(2 * (mu2.part(j as u32) as i64 - j + b) + 2);
    }
    c.sort_unstable_by(|a, b| b.cmp(a));
    c.truncate(len);
    let mut parts: Vec<u32> = Vec::new();
    for (j, &cj) in c.iter().enumerate() {
        let p = cj + j as i64;
        assert!(p >= 0, "blend produced a negative part");
        parts.push(p as u32);
    }
    Partition::new(parts)
}

/// Inverse of `blend`.
pub fn unblend(mu: &Partition) -> Blend {
    let len = mu.len() + mu.size() as usize + 6;
    let idx = index_set(mu, len);
    let evens: Vec<i64> = idx
        .iter()
        .copied()
        .filter(|c| c.rem_euclid(2) == 0)
        .collect();
    let odds: Vec<i64> = idx
        .iter()
        .copied()
        .filter(|c| c.rem_euclid(2) == 1)
        .collect();
    // tails: evens e_j = 2(0 - j + b) + 2, odds o_j = 2(0 - j - b) + 1
    let je = evens.len() as i64;
    let b_even = (evens[evens.len() - 1] - 2) / 2 + je;
    let jo = odds.len() as i64;
    let b_odd = -((odds[odds.len() - 1] - 1) / 2 + jo);
    assert_eq!(b_even, b_odd, "parity classes disagree on the charge");
    let b = b_even;
    let build = |cs: &[i64], shift: i64, off: i64| -> Partition {
        let mut parts = Vec::new();
        for (j, &c) in cs.iter().enumerate() {
            let v = (c - off) / 2 + (j as i64 + 1) + shift;
            assert!(v >= 0, "unblend produced a negative part");
            parts.push(v as u32);
        }
        Partition::new(parts)
    };
    let comp1 = build(&odds, b, 1);
    let comp2 = build(&evens, -b, 2);
    Blend {
        charge: b,
        comp1,
        comp2,
    }
}

/// The blending charge b(mu).
pub fn charge(mu: &Partition) -> i64 {
    unblend(mu).charge
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        assert_eq!(enumerate(5).len(), 7);
        assert_eq!(enumerate(10).len(), 42);
        for n in 0..=12 {
            assert_eq!(enumerate(n).len() as u64, partition_count(n));
        }
    }

    #[test]
    fn enumeration_is_reverse_lex() {
        let e = enumerate(4);
        let expect = [
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(e, expect);
    }

    #[test]
    fn arms_and_legs_generalized() {
        let la = p(&[2, 1]);
        let c = Cell { row: 1, col: 1 };
        assert_eq!(arm(&la, c), 1);
        assert_eq!(leg(&la, c), 1);
        let la = p(&[1, 1]);
        assert_eq!(arm(&la, Cell { row: 1, col: 2 }), -1);
        let empty = Partition::empty();
        assert_eq!(arm(&empty, Cell { row: 1, col: 1 }), -1);
        assert_eq!(leg(&empty, Cell { row: 1, col: 1 }), -1);
    }

    #[test]
    fn hook_fixtures() {
        let mut h = hooks(&p(&[2, 1]));
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 3]);
        let mut h = hooks(&p(&[2]));
        h.sort_unstable();
        assert_eq!(h, vec![1, 2]);
        let mu = p(&[3, 2, 1]);
        let mut a = hooks(&mu);
        let mut b = hooks(&mu.transpose());
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn transpose_involutive_and_contents_negate() {
        for n in 0..=8 {
            for mu in enumerate(n) {
                assert_eq!(mu.transpose().transpose(), mu);
                assert_eq!(mu.transpose().size(), mu.size());
                let mut c1: Vec<i64> = mu.cells().map(content).collect();
                let mut c2: Vec<i64> = mu.transpose().cells().map(|c| -content(c)).collect();
                c1.sort_unstable();
                c2.sort_unstable();
                assert_eq!(c1, c2);
            }
        }
    }

    #[test]
    fn nu_fixtures() {
        assert_eq!(nu(0), Partition::empty());
        assert_eq!(nu(1), p(&[2, 1]));
        assert_eq!(nu(-1), p(&[1]));
        for b in -4..=4 {
            assert_eq!(nu(b).size() as i64, 2 * b * b + b);
            assert_eq!(blend(b, &Partition::empty(), &Partition::empty()), nu(b));
        }
    }

    #[test]
    fn unblend_fixtures() {
        let u = unblend(&p(&[1]));
        assert_eq!(u.charge, -1);
        assert!(u.comp1.is_empty() && u.comp2.is_empty());
        let u = unblend(&p(&[2]));
        assert_eq!(u.charge, 0);
        assert_eq!(u.comp1.size() + u.comp2.size(), 1);
    }

    #[test]
    fn blend_roundtrip_and_size_relation() {
        for n in 0..=12u32 {
            for mu in enumerate(n) {
                let u = unblend(&mu);
                assert_eq!(blend(u.charge, &u.comp1, &u.comp2), mu, "mu = {}", mu);
                assert_eq!(
                    2 * u.comp1.size() as i64
                        + 2 * u.comp2.size() as i64
                        + 2 * u.charge * u.charge
                        + u.charge,
                    n as i64
                );
            }
        }
        // and the converse direction over all (b, mu1, mu2) with bounded blend size
        for b in -2..=2i64 {
            let base = 2 * b * b + b;
            if base > 12 {
                continue;
            }
            let rest = (12 - base) as u32 / 2;
            for s1 in 0..=rest {
                for s2 in 0..=(rest - s1) {
                    for m1 in enumerate(s1) {
                        for m2 in enumerate(s2) {
                            let mu = blend(b, &m1, &m2);
                            let u = unblend(&mu);
                            assert_eq!((u.charge, u.comp1, u.comp2), (b, m1.clone(), m2.clone()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_text_format() {
        assert_eq!(p(&[3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(Partition::parse("3,1,1"), Some(p(&[3, 1, 1])));
        assert_eq!(Partition::parse("-"), Some(Partition::empty()));
        assert_eq!(Partition::parse("1,3"), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn hooks_transpose_invariant(n in 0u32..10) {
            for mu in enumerate(n) {
                let mut a = hooks(&mu);
                let mut b = hooks(&mu.transpose());
                a.sort_unstable();
                b.sort_unstable();
                prop_assert_eq!(a, b);
            }
        }
    }
}
