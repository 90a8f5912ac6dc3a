//! Partitions, their parity rules for the classical families, enumeration
//! and the dominance order.
//!
//! A [`Partition`] is stored run-length encoded: a list of `(part, multiplicity)`
//! pairs with strictly decreasing parts. Everything downstream only ever needs
//! per-run data, and partitions such as `2 1^{40000}` stay cheap.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expr::{self, Bindings};

/// Classical group family. Decides which partitions index unipotent orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    GeneralLinear,
    Symplectic,
    OddOrthogonal,
    EvenOrthogonal,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 4] = [
        GroupFamily::GeneralLinear,
        GroupFamily::Symplectic,
        GroupFamily::OddOrthogonal,
        GroupFamily::EvenOrthogonal,
    ];

    /// Symplectic: odd parts occur with even multiplicity.
    /// Orthogonal: even parts occur with even multiplicity.
    pub fn admits_run(self, part: u64, multiplicity: u64) -> bool {
        match self {
            GroupFamily::GeneralLinear => true,
            GroupFamily::Symplectic => part.is_multiple_of(2) || multiplicity.is_multiple_of(2),
            GroupFamily::OddOrthogonal | GroupFamily::EvenOrthogonal => part % 2 == 1 || multiplicity.is_multiple_of(2),
        }
    }

    pub fn admits(self, p: &Partition) -> bool {
        p.runs.iter().all(|&(v, c)| self.admits_run(v, c))
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, GroupFamily::OddOrthogonal | GroupFamily::EvenOrthogonal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    runs: Vec<(u64, u64)>,
    size: u64,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn from_parts<I: IntoIterator<Item = u64>>(parts: I) -> Result<Self> {
        let mut parts: Vec<u64> = parts.into_iter().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_runs(parts.into_iter().map(|p| (p, 1)))
    }

    /// Builds a partition from `(part, multiplicity)` pairs in any order.
    /// Pairs with multiplicity zero are dropped and equal parts are merged.
    pub fn from_runs<I: IntoIterator<Item = (u64, u64)>>(runs: I) -> Result<Self> {
        let mut raw: Vec<(u64, u64)> = runs.into_iter().filter(|&(_, c)| c > 0).collect();
        if raw.iter().any(|&(v, _)| v == 0) {
            return Err(Error::parse("0", "partition parts must be positive"));
        }
        raw.sort_unstable_by_key(|r| std::cmp::Reverse(r.0));
        let mut merged: Vec<(u64, u64)> = Vec::with_capacity(raw.len());
        for (v, c) in raw {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += c,
                _ => merged.push((v, c)),
            }
        }
        if merged.is_empty() {
            return Err(Error::parse("", "empty partition"));
        }
        let size = merged.iter().map(|&(v, c)| v * c).sum();
        Ok(Partition { runs: merged, size })
    }

    /// `(1^n)`, the zero orbit.
    pub fn ones(n: u64) -> Result<Self> {
        Self::from_runs([(1, n)])
    }

    /// `(n)`, the regular orbit of `GL_n` / `Sp_n` / `SO_n` (odd `n`).
    pub fn single(n: u64) -> Result<Self> {
        Self::from_runs([(n, 1)])
    }

    /// Parses with no identifier bindings.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, &Bindings::new())
    }

    /// Parses `[a,b,...]` or factor syntax `B`, `B^E`, `B^{EXPR}`; symbolic
    /// exponents and `{EXPR}` bases are resolved against `bindings`.
    pub fn parse_with(text: &str, bindings: &Bindings) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(text, "empty partition"));
        }
        if let Some(body) = trimmed.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::parse(trimmed, "missing closing `]`"))?;
            let mut parts = Vec::new();
            for tok in body.split(',') {
                let tok = tok.trim();
                parts.push(parse_positive(tok)?);
            }
            return Self::from_parts(parts);
        }
        let mut runs = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let (factor, tail) = split_factor(rest)?;
            runs.push(eval_factor(factor, bindings)?);
            rest = tail.trim_start();
        }
        if runs.iter().all(|&(_, c)| c == 0) {
            return Err(Error::parse(trimmed, "empty partition"));
        }
        Self::from_runs(runs)
    }

    /// The number being partitioned.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of parts (with multiplicity).
    pub fn part_count(&self) -> u64 {
        self.runs.iter().map(|&(_, c)| c).sum()
    }

    /// `(part, multiplicity)` pairs, parts strictly decreasing.
    pub fn runs(&self) -> &[(u64, u64)] {
        &self.runs
    }

    pub fn parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.runs.iter().flat_map(|&(v, c)| std::iter::repeat_n(v, c as usize))
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.parts().collect()
    }

    pub fn largest(&self) -> u64 {
        self.runs[0].0
    }

    pub fn distinct_parts(&self) -> usize {
        self.runs.len()
    }

    pub fn multiplicity(&self, part: u64) -> u64 {
        self.runs.iter().find(|&&(v, _)| v == part).map_or(0, |&(_, c)| c)
    }

    /// Number of odd parts counted with multiplicity.
    pub fn odd_part_count(&self) -> u64 {
        self.runs.iter().filter(|&&(v, _)| v % 2 == 1).map(|&(_, c)| c).sum()
    }

    /// Conjugate partition (column lengths of the Young diagram).
    pub fn transpose(&self) -> Partition {
        // Column j has length #{parts >= j}; it is constant between
        // consecutive distinct parts.
        let mut runs = Vec::with_capacity(self.runs.len());
        let mut count = 0;
        for (i, &(v, c)) in self.runs.iter().enumerate() {
            count += c;
            let next = self.runs.get(i + 1).map_or(0, |r| r.0);
            runs.push((count, v - next));
        }
        runs.reverse();
        let size = self.size;
        Partition { runs, size }
    }

    /// `Σ_j (p^t_j)^2`, equivalently `Σ_i (2i-1) p_i`.
    pub fn transpose_square_sum(&self) -> u64 {
        self.transpose().runs.iter().map(|&(v, c)| v * v * c).sum()
    }

    /// Prefix sums `p_1, p_1+p_2, ...`, one per part.
    pub fn prefix_sums(&self) -> Vec<u64> {
        self.parts()
            .scan(0, |acc, p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    pub fn is_valid_for(&self, family: GroupFamily) -> bool {
        family.admits(self)
    }
}

fn parse_positive(tok: &str) -> Result<u64> {
    if tok.is_empty() {
        return Err(Error::parse(tok, "empty part"));
    }
    if tok.starts_with('-') {
        return Err(Error::parse(tok, "parts must be positive"));
    }
    let v: u64 = tok
        .parse()
        .map_err(|_| Error::parse(tok, "expected a positive decimal integer"))?;
    if v == 0 {
        return Err(Error::parse(tok, "parts must be positive"));
    }
    Ok(v)
}

/// Splits off one `BASE[^EXP]` factor. Braces may contain whitespace.
fn split_factor(s: &str) -> Result<(&str, &str)> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(&s[..=i], "unbalanced `}`"))?;
            }
            c if c.is_whitespace() && depth == 0 => {
                // `5 ^2` and `5^ 2` are not factors; only split between them.
                let (head, tail) = s.split_at(i);
                if head.ends_with('^') || tail.trim_start().starts_with('^') {
                    return Err(Error::parse(
                        s.split_whitespace().next().unwrap_or(s),
                        "whitespace around `^`",
                    ));
                }
                return Ok((head, tail));
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(s, "unbalanced `{`"));
    }
    Ok((s, ""))
}

fn eval_atom(atom: &str, factor: &str, bindings: &Bindings) -> Result<i64> {
    if let Some(inner) = atom.strip_prefix('{') {
        let inner = inner
            .strip_suffix('}')
            .ok_or_else(|| Error::parse(factor, "unbalanced braces"))?;
        return expr::eval(inner, bindings).map_err(|e| match e {
            Error::Parse { token, message } => Error::parse(format!("{factor} ({token})"), message),
            other => other,
        });
    }
    if atom.is_empty() || !atom.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(factor, "expected a decimal integer or `{expression}`"));
    }
    atom.parse::<i64>()
        .map_err(|_| Error::parse(factor, "integer out of range"))
}

fn eval_factor(factor: &str, bindings: &Bindings) -> Result<(u64, u64)> {
    let mut depth = 0usize;
    let caret = factor.char_indices().find_map(|(i, c)| {
        match c {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            '^' if depth == 0 => return Some(i),
            _ => {}
        }
        None
    });
    let (base, exp) = match caret {
        Some(i) => (&factor[..i], Some(&factor[i + 1..])),
        None => (factor, None),
    };
    let base = eval_atom(base, factor, bindings)?;
    let exp = match exp {
        Some(e) => eval_atom(e, factor, bindings)?,
        None => 1,
    };
    if exp < 0 {
        return Err(Error::parse(factor, "negative multiplicity"));
    }
    // a factor with multiplicity zero contributes nothing, whatever its base
    if exp == 0 {
        return Ok((1, 0));
    }
    if base <= 0 {
        return Err(Error::parse(factor, "parts must be positive"));
    }
    Ok((base as u64, exp as u64))
}

impl fmt::Display for Partition {
    /// Exponent form with descending bases, e.g. `6^2 2^2` or `8 4 2 1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(v, c)) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if c == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the part sequences.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts().cmp(other.parts())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Partition::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// `p ≤ q` in the dominance order: every prefix sum of `p` is at most the
/// corresponding prefix sum of `q` (missing parts count as zero).
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::domain(format!(
            "dominance needs partitions of the same number, got {} and {}",
            p.size(),
            q.size()
        )));
    }
    let mut qs = q.parts();
    let (mut sp, mut sq) = (0u64, 0u64);
    for a in p.parts() {
        sp += a;
        sq += qs.next().unwrap_or(0);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n` admitted by `family`, in decreasing lexicographic
/// order. Parity violations are pruned during generation.
pub fn enumerate_partitions(n: u64, family: GroupFamily) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for_each_partition(n, family, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Visitor form of [`enumerate_partitions`]; same order.
pub fn for_each_partition<F: FnMut(&Partition)>(n: u64, family: GroupFamily, mut f: F) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("cannot enumerate partitions of 0"));
    }
    let mut runs = Vec::new();
    recurse(n, n, family, &mut runs, &mut f);
    Ok(())
}

fn recurse<F: FnMut(&Partition)>(
    remaining: u64,
    max_part: u64,
    family: GroupFamily,
    runs: &mut Vec<(u64, u64)>,
    f: &mut F,
) {
    if remaining == 0 {
        let size = runs.iter().map(|&(v, c)| v * c).sum();
        f(&Partition {
            runs: runs.clone(),
            size,
        });
        return;
    }
    // Choosing the largest part first, then its multiplicity from high to
    // low, yields decreasing lexicographic order.
    for v in (1..=max_part.min(remaining)).rev() {
        for c in (1..=remaining / v).rev() {
            if !family.admits_run(v, c) {
                continue;
            }
            runs.push((v, c));
            recurse(remaining - v * c, v - 1, family, runs, f);
            runs.pop();
        }
    }
}
