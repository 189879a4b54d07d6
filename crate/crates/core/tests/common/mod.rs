//! Shared test oracles, independent of the implementation paths they check.

use hilbq::laurent::Laurent2;
use hilbq::partitions::Partition;
use hilbq::rational::rat_i;

/// Truncated staircase evaluation of the tangent-obstruction character:
/// expand sum_{i,j>=1} [ z1^(la_i - j + 1) z2^(i - mu^t_j) - z1^(1-j) z2^i ]
/// over a window large enough that the telescoping is complete inside it,
/// keeping only monomials with both exponents in [-win, win].
pub fn staircase_character(la: &Partition, mu: &Partition, win: i64) -> Laurent2 {
    let mu_t = mu.transpose();
    let reach = [
        la.len() as i64,
        la.part(1) as i64,
        mu_t.len() as i64,
        mu_t.part(1) as i64,
    ]
    .into_iter()
    .max()
    .unwrap();
    let m = win + reach + 2;
    let mut out = Laurent2::new();
    for i in 1..=m {
        for j in 1..=m {
            let e1 = la.part(j as u32) as i64;
            let _ = e1;
            let a1 = la.part(i as u32) as i64 - j + 1;
            let a2 = i - mu_t.part(j as u32) as i64;
            if a1.abs() <= win && a2.abs() <= win {
                out.add_term(a1, a2, rat_i(1));
            }
            let b1 = 1 - j;
            let b2 = i;
            if b1.abs() <= win && b2.abs() <= win {
                out.add_term(b1, b2, rat_i(-1));
            }
        }
    }
    out
}

/// The window that certainly contains every term of the closed-form
/// character of the pair (la, mu).
pub fn character_window(la: &Partition, mu: &Partition) -> i64 {
    let vals = [
        la.part(1) as i64,
        la.len() as i64,
        mu.part(1) as i64,
        mu.len() as i64,
    ];
    vals.into_iter().max().unwrap() + 2
}
