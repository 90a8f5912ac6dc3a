//! Reference computations written from scratch, sharing nothing with the
//! library beyond its input types.

#![allow(dead_code)]

use dimeq_core::GroupFamily;

/// All partitions of `n` as non-increasing vectors, by plain recursion.
pub fn naive_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=rest.min(max)).rev() {
            cur.push(v);
            go(rest - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn admissible(parts: &[u64], family: GroupFamily) -> bool {
    let count = |v: u64| parts.iter().filter(|&&p| p == v).count();
    parts.iter().all(|&v| match family {
        GroupFamily::GeneralLinear => true,
        GroupFamily::Symplectic => v % 2 == 0 || count(v) % 2 == 0,
        GroupFamily::OddOrthogonal | GroupFamily::EvenOrthogonal => v % 2 == 1 || count(v) % 2 == 0,
    })
}

/// p(n) by Euler's pentagonal number recurrence.
pub fn partition_counts(max: usize) -> Vec<i128> {
    let mut p = vec![0i128; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut total = 0i128;
        for k in 1i64.. {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let mut any = false;
            for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                if g as usize <= n {
                    total += sign * p[n - g as usize];
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        p[n] = total;
    }
    p
}

/// Positive roots in the standard `e_i` coordinates.
pub fn roots(family: GroupFamily, size: u64) -> (usize, Vec<Vec<i64>>) {
    let rank = match family {
        GroupFamily::GeneralLinear => size as usize,
        _ => (size / 2) as usize,
    };
    let unit = |i: usize| {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        v
    };
    let mut out = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            let mut minus = unit(i);
            minus[j] = -1;
            out.push(minus);
            if family != GroupFamily::GeneralLinear {
                let mut plus = unit(i);
                plus[j] = 1;
                out.push(plus);
            }
        }
        match family {
            GroupFamily::Symplectic => {
                let mut long = unit(i);
                long[i] = 2;
                out.push(long);
            }
            GroupFamily::OddOrthogonal => out.push(unit(i)),
            _ => {}
        }
    }
    (rank, out)
}

/// `(dim O, #{weight >= 2}, #{weight == 1})` from the grading by the
/// neutral element of the sl_2-triple.
pub fn orbit_oracle(family: GroupFamily, parts: &[u64]) -> (u64, u64, u64) {
    let size: u64 = parts.iter().sum();
    let (rank, positive) = roots(family, size);
    let mut h: Vec<i64> = parts
        .iter()
        .flat_map(|&p| (0..p as i64).map(move |j| p as i64 - 1 - 2 * j))
        .collect();
    h.sort_unstable_by(|a, b| b.cmp(a));
    h.truncate(rank);
    let (mut two, mut one) = (0u64, 0u64);
    for r in &positive {
        let w: i64 = r.iter().zip(&h).map(|(a, b)| a * b).sum();
        assert!(w >= 0, "h is dominant");
        if w >= 2 {
            two += 1;
        } else if w == 1 {
            one += 1;
        }
    }
    (2 * two + one, two, one)
}

pub fn sizes(family: GroupFamily, max: u64) -> Vec<u64> {
    (1..=max)
        .filter(|&n| match family {
            GroupFamily::GeneralLinear => true,
            GroupFamily::Symplectic | GroupFamily::EvenOrthogonal => n % 2 == 0,
            GroupFamily::OddOrthogonal => n % 2 == 1,
        })
        .collect()
}
