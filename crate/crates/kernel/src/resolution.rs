//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{KernelError, Result};
use crate::module::{FreeModule, Vector};
use crate::ops;
use crate::presented::PresentedModule;

/// `0 → F_p → … → F_1 → F_0 → M → 0`, minimal.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// `F_0, …, F_p`; empty for the zero module.
    modules: Vec<FreeModule>,
    /// `maps[i]` holds the columns of `d_{i+1}: F_{i+1} → F_i`.
    maps: Vec<Vec<Vector>>,
    /// Images of the basis of `F_0` in the ambient of `M`.
    augmentation: Vec<Vector>,
}

impl Resolution {
    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    /// Columns of `d_i: F_i → F_{i-1}` for `i ≥ 1`.
    pub fn differential(&self, i: usize) -> Option<&[Vector]> {
        if i == 0 {
            return None;
        }
        self.maps.get(i - 1).map(Vec::as_slice)
    }

    pub fn augmentation(&self) -> &[Vector] {
        &self.augmentation
    }

    /// Projective dimension; `None` for the zero module.
    pub fn pdim(&self) -> Option<usize> {
        self.modules.len().checked_sub(1)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.modules.get(i).map_or(0, FreeModule::rank)
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, f) in self.modules.iter().enumerate() {
            for &d in f.twists() {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    /// Whether `d_i ∘ d_{i+1} = 0` for all `i`.
    pub fn is_complex(&self) -> bool {
        for i in 1..self.maps.len() {
            let prev = &self.maps[i - 1];
            let rank = self.modules[i - 1].rank();
            for col in &self.maps[i] {
                if !Vector::combination(rank, col.comps(), prev).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Graded Betti numbers `β_{i,d}`: generators of `F_i` in degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, d: i64) -> usize {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    /// Total Betti numbers `β_0, β_1, …`.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|k| k.0 + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for (&(i, _), &c) in &self.entries {
            out[i] += c;
        }
        out
    }

    /// Degrees of the generators of `F_i`, with multiplicity, ascending.
    pub fn degrees(&self, i: usize) -> Vec<i64> {
        let mut out = Vec::new();
        for (&(j, d), &c) in &self.entries {
            if j == i {
                out.extend(std::iter::repeat_n(d, c));
            }
        }
        out
    }

    /// Rows indexed by degree; row `d` lists `β_{i,d}` for each `i`.
    pub fn rows(&self) -> Vec<(i64, Vec<usize>)> {
        let len = self.totals().len();
        let mut rows: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (&(i, d), &c) in &self.entries {
            rows.entry(d).or_insert_with(|| vec![0; len])[i] = c;
        }
        rows.into_iter().collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, usize)> + '_ {
        self.entries.iter().map(|(&(i, d), &c)| (i, d, c))
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.totals().len();
        write!(f, "{:>8}", "")?;
        for i in 0..len {
            write!(f, " {i:>4}")?;
        }
        writeln!(f)?;
        write!(f, "{:>8}", "total:")?;
        for t in self.totals() {
            write!(f, " {t:>4}")?;
        }
        writeln!(f)?;
        for (d, row) in self.rows() {
            write!(f, "{:>8}", format!("{d}:"))?;
            for c in row {
                if c == 0 {
                    write!(f, " {:>4}", ".")?;
                } else {
                    write!(f, " {c:>4}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Minimal free resolution of a subquotient module.
pub fn minimal_resolution(m: &PresentedModule) -> Result<Resolution> {
    let p = m.presentation()?;
    if p.gens.is_empty() {
        return Ok(Resolution {
            modules: Vec::new(),
            maps: Vec::new(),
            augmentation: Vec::new(),
        });
    }
    let nvars = m.ring().nvars();
    let mut modules = vec![p.free.clone()];
    let mut maps: Vec<Vec<Vector>> = Vec::new();
    let mut cols = p.relations;
    while !cols.is_empty() {
        if modules.len() > nvars {
            return Err(KernelError::Inconsistent(
                "resolution longer than the number of variables".into(),
            ));
        }
        let prev = modules.last().unwrap().clone();
        let src = ops::source_for(&prev, &cols)?;
        let syz = ops::kernel(&src, &prev, &cols, &[])?;
        let next = ops::minimal_generators(&src, &syz, &[])?;
        modules.push(src);
        maps.push(cols);
        cols = next;
    }
    Ok(Resolution {
        modules,
        maps,
        augmentation: p.gens,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::presented::Ideal;
    use crate::ring::RingContext;

    #[test]
    fn zero_module_has_empty_resolution() {
        let r = RingContext::standard(&["x"]).unwrap();
        let m = Ideal::unit(&r).quotient_ring();
        let res = minimal_resolution(&m).unwrap();
        assert_eq!(res.pdim(), None);
        assert!(res.betti().totals().is_empty());
    }

    #[test]
    fn hypersurface_resolution() {
        let r = RingContext::new(&["x", "y"], &[2, 3]).unwrap();
        let f = parse_polynomial("x^3 - y^2", &r).unwrap();
        let m = Ideal::new(&r, vec![f]).unwrap().quotient_ring();
        let res = minimal_resolution(&m).unwrap();
        assert_eq!(res.pdim(), Some(1));
        assert_eq!(res.betti().degrees(1), vec![6]);
        let shown = res.betti().to_string();
        assert!(shown.contains("total:"));
    }
}
