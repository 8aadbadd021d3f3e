use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;

use super::matrix::Matrix;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A bounded complex of finitely generated free modules with explicit bases,
/// stored over ℤ. Differentials are `d_q : C_q → C_{q-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChainComplex {
    ranks: BTreeMap<i32, usize>,
    differentials: BTreeMap<i32, Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("R".to_string()),
            n => parts.push(format!("R^{n}")),
        }
        for t in &self.torsion {
            parts.push(format!("R/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl ChainComplex {
    /// Builds a complex, checking that every differential has shape
    /// `rank(q-1) x rank(q)`. Missing differentials are zero.
    pub fn new(ranks: BTreeMap<i32, usize>, differentials: BTreeMap<i32, Matrix>) -> Result<Self> {
        let ranks: BTreeMap<i32, usize> = ranks.into_iter().filter(|&(_, r)| r > 0).collect();
        let rank = |q: i32| ranks.get(&q).copied().unwrap_or(0);
        let mut kept = BTreeMap::new();
        for (q, d) in differentials {
            if d.shape() != (rank(q - 1), rank(q)) {
                return Err(Error::Shape(format!(
                    "differential in degree {q} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    rank(q - 1),
                    rank(q)
                )));
            }
            if !d.is_zero() {
                kept.insert(q, d);
            }
        }
        Ok(ChainComplex {
            ranks,
            differentials: kept,
        })
    }

    pub fn zero() -> Self {
        ChainComplex::default()
    }

    pub fn rank(&self, q: i32) -> usize {
        self.ranks.get(&q).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &BTreeMap<i32, usize> {
        &self.ranks
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    /// Lowest and highest degree carrying a nonzero module.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        Some((*self.ranks.keys().next()?, *self.ranks.keys().next_back()?))
    }

    pub fn differential(&self, q: i32) -> Cow<'_, Matrix> {
        match self.differentials.get(&q) {
            Some(d) => Cow::Borrowed(d),
            None => Cow::Owned(Matrix::zeros(self.rank(q - 1), self.rank(q))),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&q, &r)| if q.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Checks `d_{q-1} ∘ d_q = 0`, reporting the first failing degree `q`.
    pub fn check_d_squared(&self) -> Result<()> {
        for (&q, d) in &self.differentials {
            if let Some(below) = self.differentials.get(&(q - 1)) {
                if !below.checked_mul(d)?.is_zero() {
                    return Err(Error::NotAComplex { degree: q });
                }
            }
        }
        Ok(())
    }

    pub fn homology(&self, ring: Ring) -> Result<BTreeMap<i32, HomologyGroup>> {
        self.check_d_squared()?;
        let Some((lo, hi)) = self.degree_range() else {
            return Ok(BTreeMap::new());
        };
        let snf: BTreeMap<i32, _> = self
            .differentials
            .iter()
            .map(|(&q, d)| (q, ring.smith_normal_form(d)))
            .collect();
        let rank_of = |q: i32| snf.get(&q).map_or(0, |s| s.rank);
        Ok((lo..=hi)
            .map(|q| {
                let betti = self.rank(q) - rank_of(q) - rank_of(q + 1);
                let torsion = snf.get(&(q + 1)).map(|s| s.torsion()).unwrap_or_default();
                (q, HomologyGroup { betti, torsion })
            })
            .collect())
    }

    pub fn is_acyclic(&self, ring: Ring) -> Result<bool> {
        Ok(self.homology(ring)?.values().all(HomologyGroup::is_zero))
    }
}

/// A degree-0 chain map between bounded free complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    components: BTreeMap<i32, Matrix>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: BTreeMap<i32, Matrix>,
    ) -> Result<Self> {
        for (&q, f) in &components {
            if f.shape() != (target.rank(q), source.rank(q)) {
                return Err(Error::Shape(format!(
                    "chain map component in degree {q} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.rank(q),
                    source.rank(q)
                )));
            }
        }
        Ok(ChainMap {
            source,
            target,
            components: components.into_iter().filter(|(_, f)| !f.is_zero()).collect(),
        })
    }

    pub fn component(&self, q: i32) -> Cow<'_, Matrix> {
        match self.components.get(&q) {
            Some(f) => Cow::Borrowed(f),
            None => Cow::Owned(Matrix::zeros(self.target.rank(q), self.source.rank(q))),
        }
    }

    fn degrees(&self) -> Vec<i32> {
        let mut qs: Vec<i32> = self
            .source
            .ranks()
            .keys()
            .chain(self.target.ranks().keys())
            .copied()
            .collect();
        qs.sort_unstable();
        qs.dedup();
        qs
    }

    /// Checks `d ∘ f = f ∘ d` in every degree.
    pub fn check_chain_map(&self) -> Result<()> {
        for q in self.degrees() {
            let left = self.target.differential(q).checked_mul(&self.component(q))?;
            let right = self.component(q - 1).checked_mul(&self.source.differential(q))?;
            if left != right {
                return Err(Error::NotAChainMap { degree: q });
            }
        }
        Ok(())
    }

    /// `Cone_n = D_n ⊕ C_{n-1}` with `d(y, x) = (d y + f x, -d x)`.
    pub fn mapping_cone(&self) -> Result<ChainComplex> {
        let (s, t) = (&self.source, &self.target);
        let mut qs = self.degrees();
        qs.extend(self.degrees().into_iter().map(|q| q + 1));
        qs.sort_unstable();
        qs.dedup();
        let ranks = qs.iter().map(|&n| (n, t.rank(n) + s.rank(n - 1))).collect();
        let mut diffs = BTreeMap::new();
        for &n in &qs {
            let top = Matrix::block(
                &t.differential(n),
                &self.component(n - 1),
                &Matrix::zeros(s.rank(n - 2), t.rank(n)),
                &s.differential(n - 1).scaled(-1)?,
            )?;
            diffs.insert(n, top);
        }
        ChainComplex::new(ranks, diffs)
    }
}

/// True iff `f` is a chain map whose mapping cone has zero homology over `ring`.
pub fn is_cone_acyclic(ring: Ring, f: &ChainMap) -> Result<bool> {
    f.check_chain_map()?;
    f.mapping_cone()?.is_acyclic(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> ChainComplex {
        ChainComplex::new([(0, 1)].into(), BTreeMap::new()).unwrap()
    }

    fn scalar_map(c: i64) -> ChainMap {
        ChainMap::new(point(), point(), [(0, Matrix::from_dense(&[vec![c]]).unwrap())].into())
            .unwrap()
    }

    #[test]
    fn identity_and_zero_maps() {
        assert!(is_cone_acyclic(Ring::Integers, &scalar_map(1)).unwrap());
        assert!(is_cone_acyclic(Ring::Integers, &scalar_map(-1)).unwrap());
        assert!(!is_cone_acyclic(Ring::Integers, &scalar_map(0)).unwrap());
    }

    #[test]
    fn multiplication_by_two() {
        assert!(!is_cone_acyclic(Ring::Integers, &scalar_map(2)).unwrap());
        assert!(is_cone_acyclic(Ring::Rationals, &scalar_map(2)).unwrap());
        assert!(!is_cone_acyclic(Ring::IntegersMod(2), &scalar_map(2)).unwrap());
        assert!(is_cone_acyclic(Ring::IntegersMod(3), &scalar_map(2)).unwrap());
    }

    #[test]
    fn non_chain_map_is_rejected() {
        // [R -1-> R] in degrees 1,0 mapped to itself by (1, 0).
        let c = ChainComplex::new(
            [(0, 1), (1, 1)].into(),
            [(1, Matrix::identity(1))].into(),
        )
        .unwrap();
        let f = ChainMap::new(c.clone(), c, [(1, Matrix::identity(1))].into()).unwrap();
        assert_eq!(
            is_cone_acyclic(Ring::Integers, &f),
            Err(Error::NotAChainMap { degree: 1 })
        );
    }

    #[test]
    fn bad_differential_reports_degree() {
        let c = ChainComplex::new(
            [(0, 1), (1, 1), (2, 1)].into(),
            [(1, Matrix::identity(1)), (2, Matrix::identity(1))].into(),
        )
        .unwrap();
        assert_eq!(c.homology(Ring::Integers), Err(Error::NotAComplex { degree: 2 }));
    }

    #[test]
    fn torsion_shows_up_over_z_only() {
        let c = ChainComplex::new(
            [(0, 1), (1, 1)].into(),
            [(1, Matrix::from_dense(&[vec![2]]).unwrap())].into(),
        )
        .unwrap();
        let h = c.homology(Ring::Integers).unwrap();
        assert_eq!(h[&0].torsion, vec![BigInt::from(2)]);
        assert_eq!(h[&0].to_string(), "R/2");
        assert!(c.is_acyclic(Ring::Rationals).unwrap());
        assert!(!c.is_acyclic(Ring::IntegersMod(2)).unwrap());
    }
}
