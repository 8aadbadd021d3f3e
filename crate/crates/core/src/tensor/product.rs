use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rk::{Generator, Order, RKComplex, RKMap};

/// Which blocked tensor product a [`TensorComplex`] is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Blocking {
    /// `C ⊗_R D`: every pair `x ⊗ y`.
    Full,
    /// `C ⊗_K D`: pairs with `label(x) ≥ label(y)` in `K`.
    Star,
}

/// A basis element `x ⊗ y` with `x ∈ C_{left_degree}` and `y ∈ D_{right_degree}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorPair {
    pub left_degree: i32,
    pub left: usize,
    pub right_degree: i32,
    pub right: usize,
}

/// A tensor product of a `K^op` complex with a `K` complex, remembering
/// which pair each generator came from.
#[derive(Clone, Debug)]
pub struct TensorComplex {
    pub complex: Arc<RKComplex>,
    pub left: Arc<RKComplex>,
    pub right: Arc<RKComplex>,
    pub blocking: Blocking,
    pairs: BTreeMap<i32, Vec<TensorPair>>,
    index: HashMap<TensorPair, (i32, usize)>,
}

impl TensorComplex {
    pub fn pairs(&self, n: i32) -> &[TensorPair] {
        self.pairs.get(&n).map_or(&[], Vec::as_slice)
    }

    /// Degree and position of `x ⊗ y`, if it is a basis element.
    pub fn position(&self, p: &TensorPair) -> Option<(i32, usize)> {
        self.index.get(p).copied()
    }
}

fn check_factors(c: &RKComplex, d: &RKComplex) -> Result<()> {
    if !(Arc::ptr_eq(c.base(), d.base()) || **c.base() == **d.base()) {
        return Err(Error::PosetMismatch("tensor factors over different K".into()));
    }
    if c.order() != Order::Opposite || d.order() != Order::Original {
        return Err(Error::OrderMismatch("tensor needs a K^op complex on the left and a K complex on the right".into()));
    }
    Ok(())
}

/// `C ⊗_K D`: pairs `x ⊗ y` with `label(x) ≥ label(y)`, labelled by `label(y)`.
pub fn tensor_k(c: &Arc<RKComplex>, d: &Arc<RKComplex>) -> Result<TensorComplex> {
    tensor(c, d, Blocking::Star)
}

/// `C ⊗_R D`: all pairs `x ⊗ y`, labelled by `label(y)`.
pub fn tensor_r(c: &Arc<RKComplex>, d: &Arc<RKComplex>) -> Result<TensorComplex> {
    tensor(c, d, Blocking::Full)
}

fn tensor(c: &Arc<RKComplex>, d: &Arc<RKComplex>, blocking: Blocking) -> Result<TensorComplex> {
    check_factors(c, d)?;
    let base = c.base();
    let mut pairs: BTreeMap<i32, Vec<TensorPair>> = BTreeMap::new();
    let mut modules: BTreeMap<i32, Vec<Generator>> = BTreeMap::new();
    for r in c.degrees() {
        for s in d.degrees() {
            for (i, x) in c.generators(r).iter().enumerate() {
                for (j, y) in d.generators(s).iter().enumerate() {
                    if blocking == Blocking::Star && !base.is_face(y.label, x.label) {
                        continue;
                    }
                    pairs.entry(r + s).or_default().push(TensorPair {
                        left_degree: r,
                        left: i,
                        right_degree: s,
                        right: j,
                    });
                    modules
                        .entry(r + s)
                        .or_default()
                        .push(Generator::new(y.label, format!("({}⊗{})", x.name, y.name)));
                }
            }
        }
    }
    let mut index = HashMap::new();
    for (&n, ps) in &pairs {
        for (k, p) in ps.iter().enumerate() {
            index.insert(*p, (n, k));
        }
    }
    let c_cols: BTreeMap<i32, Vec<Vec<(usize, i64)>>> =
        c.degrees().into_iter().map(|q| (q, c.differential(q).columns())).collect();
    let d_cols: BTreeMap<i32, Vec<Vec<(usize, i64)>>> =
        d.degrees().into_iter().map(|q| (q, d.differential(q).columns())).collect();
    let rank = |n: i32| pairs.get(&n).map_or(0, Vec::len);
    let mut diffs = BTreeMap::new();
    for (&n, ps) in &pairs {
        let mut m = Matrix::zeros(rank(n - 1), ps.len());
        for (col, p) in ps.iter().enumerate() {
            let r = p.left_degree;
            for &(x2, v) in c_cols.get(&r).map_or(&[][..], |cs| &cs[p.left]) {
                let q = TensorPair {
                    left_degree: r - 1,
                    left: x2,
                    ..*p
                };
                if let Some(&(_, row)) = index.get(&q) {
                    m.add_to(row, col, v)?;
                }
            }
            let sign = if r % 2 == 0 { 1 } else { -1 };
            for &(y2, v) in d_cols.get(&(n - r)).map_or(&[][..], |cs| &cs[p.right]) {
                let q = TensorPair {
                    right_degree: p.right_degree - 1,
                    right: y2,
                    ..*p
                };
                if let Some(&(_, row)) = index.get(&q) {
                    m.add_to(row, col, sign * v)?;
                }
            }
        }
        diffs.insert(n, m);
    }
    let complex = RKComplex::new(base.clone(), Order::Original, modules, diffs)?;
    Ok(TensorComplex {
        complex: Arc::new(complex),
        left: c.clone(),
        right: d.clone(),
        blocking,
        pairs,
        index,
    })
}

/// `f ⊗ g` between tensor products, for degree-0 maps `f` on the left factors
/// and `g` on the right; on `⊗_K` this is the map induced on the quotient.
pub fn tensor_map(f: &RKMap, g: &RKMap, from: &TensorComplex, to: &TensorComplex) -> Result<RKMap> {
    if f.degree() != 0 || g.degree() != 0 {
        return Err(Error::Shape("tensor of maps needs degree-0 maps".into()));
    }
    if f.source() != &from.left || f.target() != &to.left || g.source() != &from.right || g.target() != &to.right {
        return Err(Error::Shape("tensor of maps between the wrong factors".into()));
    }
    let mut f_cols: BTreeMap<i32, Vec<Vec<(usize, i64)>>> = BTreeMap::new();
    let mut g_cols: BTreeMap<i32, Vec<Vec<(usize, i64)>>> = BTreeMap::new();
    let mut comps = BTreeMap::new();
    for n in from.complex.degrees() {
        let mut m = Matrix::zeros(to.complex.rank(n), from.complex.rank(n));
        for (col, p) in from.pairs(n).iter().enumerate() {
            let (r, s) = (p.left_degree, n - p.left_degree);
            let fc = f_cols.entry(r).or_insert_with(|| f.component(r).columns());
            let gc = g_cols.entry(s).or_insert_with(|| g.component(s).columns());
            for &(x2, a) in &fc[p.left] {
                for &(y2, b) in &gc[p.right] {
                    let q = TensorPair {
                        left_degree: r,
                        left: x2,
                        right_degree: s,
                        right: y2,
                    };
                    if let Some(&(_, row)) = to.index.get(&q) {
                        let v = a.checked_mul(b).ok_or(Error::Overflow("tensor of maps"))?;
                        m.add_to(row, col, v)?;
                    }
                }
            }
        }
        comps.insert(n, m);
    }
    RKMap::new(from.complex.clone(), to.complex.clone(), 0, comps)
}

/// `π_{C,D}: C ⊗_R D → C ⊗_K D`, the identity on surviving pairs and zero
/// on pairs with `label(x) ≱ label(y)`.
pub fn pi_projection(full: &TensorComplex, star: &TensorComplex) -> Result<RKMap> {
    if full.blocking != Blocking::Full || star.blocking != Blocking::Star {
        return Err(Error::Shape("projection goes from ⊗_R to ⊗_K".into()));
    }
    let mut comps = BTreeMap::new();
    for n in full.complex.degrees() {
        let trips = full
            .pairs(n)
            .iter()
            .enumerate()
            .filter_map(|(col, p)| star.position(p).map(|(_, row)| (row, col, 1)));
        comps.insert(n, Matrix::from_triplets(star.complex.rank(n), full.complex.rank(n), trips)?);
    }
    RKMap::new(full.complex.clone(), star.complex.clone(), 0, comps)
}
