use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::complex::{same_base, Generator, RKComplex, RKMap};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A basis map of `Hom_{(R,K)}(C, D)`: sends the source generator
/// `C_{source_degree}[source]` to `D_{target_degree}[target]` and everything
/// else to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomEntry {
    pub source_degree: i32,
    pub source: usize,
    pub target_degree: i32,
    pub target: usize,
}

/// `Hom_{(R,K)}(C, D)` as a complex over the opposite order, with the
/// bookkeeping that identifies each generator with a basis map.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub complex: Arc<RKComplex>,
    entries: BTreeMap<i32, Vec<HomEntry>>,
    index: HashMap<HomEntry, (i32, usize)>,
}

impl HomComplex {
    pub fn entries(&self, p: i32) -> &[HomEntry] {
        self.entries.get(&p).map_or(&[], Vec::as_slice)
    }

    /// Degree and position of a basis map.
    pub fn position(&self, e: &HomEntry) -> Option<(i32, usize)> {
        self.index.get(e).copied()
    }
}

/// `Hom_{(R,K)}(C, D)`: in degree `p`, maps `C_q(σ) → D_{q+p}(τ)` with `τ ≥ σ`,
/// labelled by `σ`, with `d(f) = d∘f − (−1)^{|f|} f∘d`.
pub fn hom_rk(c: &RKComplex, d: &RKComplex) -> Result<HomComplex> {
    if !same_base(c.base(), d.base()) {
        return Err(Error::PosetMismatch("Hom between complexes over different K".into()));
    }
    if c.order() != d.order() {
        return Err(Error::OrderMismatch("Hom between K and K^op complexes".into()));
    }
    let mut entries: BTreeMap<i32, Vec<HomEntry>> = BTreeMap::new();
    let mut modules: BTreeMap<i32, Vec<Generator>> = BTreeMap::new();
    for q in c.degrees() {
        for qt in d.degrees() {
            let p = qt - q;
            for (i, x) in c.generators(q).iter().enumerate() {
                for (j, y) in d.generators(qt).iter().enumerate() {
                    if c.le(x.label, y.label) {
                        entries.entry(p).or_default().push(HomEntry {
                            source_degree: q,
                            source: i,
                            target_degree: qt,
                            target: j,
                        });
                        modules
                            .entry(p)
                            .or_default()
                            .push(Generator::new(x.label, format!("[{}>{}]", x.name, y.name)));
                    }
                }
            }
        }
    }
    let mut index = HashMap::new();
    for (&p, es) in &entries {
        for (n, e) in es.iter().enumerate() {
            index.insert(*e, (p, n));
        }
    }
    let rank = |p: i32| entries.get(&p).map_or(0, Vec::len);
    let d_cols: BTreeMap<i32, Vec<Vec<(usize, i64)>>> =
        d.degrees().into_iter().map(|q| (q, d.differential(q).columns())).collect();
    let mut diffs = BTreeMap::new();
    for (&p, es) in &entries {
        let mut m = Matrix::zeros(rank(p - 1), es.len());
        let sign = if p % 2 == 0 { -1 } else { 1 };
        for (col, e) in es.iter().enumerate() {
            let qt = e.source_degree + p;
            // d^D ∘ E_{y,x}
            for &(row_y, v) in d_cols.get(&qt).map_or(&[][..], |cs| &cs[e.target]) {
                let key = HomEntry {
                    target_degree: qt - 1,
                    target: row_y,
                    ..*e
                };
                let (_, row) = lookup(&index, &key)?;
                m.add_to(row, col, v)?;
            }
            // −(−1)^p E_{y,x} ∘ d^C
            for (src, v) in c.differential(e.source_degree + 1).row(e.source) {
                let key = HomEntry {
                    source_degree: e.source_degree + 1,
                    source: src,
                    ..*e
                };
                let (_, row) = lookup(&index, &key)?;
                m.add_to(row, col, sign * *v)?;
            }
        }
        diffs.insert(p, m);
    }
    let complex = RKComplex::new(c.base().clone(), c.order().flip(), modules, diffs)?;
    Ok(HomComplex {
        complex: Arc::new(complex),
        entries,
        index,
    })
}

fn lookup(index: &HashMap<HomEntry, (i32, usize)>, e: &HomEntry) -> Result<(i32, usize)> {
    index
        .get(e)
        .copied()
        .ok_or_else(|| Error::Support("Hom differential leaves the support".into()))
}

/// Post-composition `Hom(1, f): Hom(C, D) → Hom(C, D')` for `f: D → D'` of degree 0.
pub fn hom_post(f: &RKMap, from: &HomComplex, to: &HomComplex) -> Result<RKMap> {
    if f.degree() != 0 {
        return Err(Error::Shape("post-composition needs a degree-0 map".into()));
    }
    let mut comps = BTreeMap::new();
    for p in from.complex.degrees() {
        let mut m = Matrix::zeros(to.complex.rank(p), from.complex.rank(p));
        let mut f_cols: BTreeMap<i32, Vec<Vec<(usize, i64)>>> = BTreeMap::new();
        for (col, e) in from.entries(p).iter().enumerate() {
            let qt = e.source_degree + p;
            let cols = f_cols.entry(qt).or_insert_with(|| f.component(qt).columns());
            for &(row_y, v) in &cols[e.target] {
                let key = HomEntry { target: row_y, ..*e };
                let (_, row) = lookup(&to.index, &key)?;
                m.add_to(row, col, v)?;
            }
        }
        comps.insert(p, m);
    }
    RKMap::new(from.complex.clone(), to.complex.clone(), 0, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rk::Order;
    use crate::simplicial::SimplicialComplex;

    #[test]
    fn single_generators() {
        let k = Arc::new(SimplicialComplex::full_simplex(1));
        let at = |l: usize| {
            RKComplex::new(
                k.clone(),
                Order::Original,
                [(0, vec![Generator::new(l, "g")])].into(),
                BTreeMap::new(),
            )
            .unwrap()
        };
        // a = 0, ab = 2
        assert_eq!(hom_rk(&at(0), &at(2)).unwrap().complex.total_rank(), 1);
        assert_eq!(hom_rk(&at(2), &at(0)).unwrap().complex.total_rank(), 0);
        assert_eq!(hom_rk(&at(0), &at(1)).unwrap().complex.total_rank(), 0);
    }
}
