//! Standard positive systems of the split classical groups, as integer
//! vectors in the `e_i` basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::GroupFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        f.write_str(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// Rank of the Cartan label (`n-1` for `A_{n-1}`).
    pub rank: usize,
    /// Length of the coordinate vectors (`n` for `GL_n`, the torus rank otherwise).
    pub ambient_dim: usize,
    pub positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    /// `<α, h>` for a cocharacter given by its exponent vector.
    pub fn pairing(root: &[i64], exponents: &[i64]) -> i64 {
        root.iter().zip(exponents).map(|(a, b)| a * b).sum()
    }
}

fn unit(dim: usize, i: usize, coeff: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = coeff;
    v
}

fn pair(dim: usize, i: usize, j: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v[j] = sign;
    v
}

fn build(family: GroupFamily, size: u64) -> Result<RootSystem> {
    let check_parity = |want_even: bool| -> Result<()> {
        if size.is_multiple_of(2) != want_even {
            return Err(Error::domain(format!(
                "{family:?} is incompatible with matrix size {size}"
            )));
        }
        Ok(())
    };
    let n = size as usize;
    let (cartan_type, rank, dim) = match family {
        GroupFamily::GeneralLinear => (CartanType::A, n.saturating_sub(1), n),
        GroupFamily::Symplectic => {
            check_parity(true)?;
            (CartanType::C, n / 2, n / 2)
        }
        GroupFamily::OddOrthogonal => {
            check_parity(false)?;
            (CartanType::B, n / 2, n / 2)
        }
        GroupFamily::EvenOrthogonal => {
            check_parity(true)?;
            (CartanType::D, n / 2, n / 2)
        }
    };
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            roots.push(pair(dim, i, j, -1));
            if cartan_type != CartanType::A {
                roots.push(pair(dim, i, j, 1));
            }
        }
        match cartan_type {
            CartanType::B => roots.push(unit(dim, i, 1)),
            CartanType::C => roots.push(unit(dim, i, 2)),
            _ => {}
        }
    }
    Ok(RootSystem {
        cartan_type,
        rank,
        ambient_dim: dim,
        positive_roots: roots,
    })
}

type Cache = RwLock<HashMap<(GroupFamily, u64), Arc<RootSystem>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The standard positive system for `family` acting on a space of
/// dimension `size`. Memoized; concurrent first calls insert identical values.
pub fn positive_roots(family: GroupFamily, size: u64) -> Result<Arc<RootSystem>> {
    if size == 0 {
        return Err(Error::domain("group size must be positive"));
    }
    if let Some(rs) = cache().read().expect("root cache poisoned").get(&(family, size)) {
        return Ok(Arc::clone(rs));
    }
    let rs = Arc::new(build(family, size)?);
    let mut w = cache().write().expect("root cache poisoned");
    Ok(Arc::clone(w.entry((family, size)).or_insert(rs)))
}
