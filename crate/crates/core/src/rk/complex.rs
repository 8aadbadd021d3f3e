use std::borrow::Cow;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{ChainComplex, ChainMap, Matrix};
use crate::simplicial::SimplicialComplex;

/// Which partial order on the simplices of `K` labels are read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// `σ ≤ τ` when `σ` is a face of `τ`.
    Original,
    /// The opposite order, `K^op`.
    Opposite,
}

impl Order {
    pub fn flip(self) -> Order {
        match self {
            Order::Original => Order::Opposite,
            Order::Opposite => Order::Original,
        }
    }
}

/// A basis element, carrying its label `σ ∈ K` and a stable display name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: usize,
    pub name: String,
}

impl Generator {
    pub fn new(label: usize, name: impl Into<String>) -> Self {
        Generator {
            label,
            name: name.into(),
        }
    }
}

pub(crate) fn same_base(a: &Arc<SimplicialComplex>, b: &Arc<SimplicialComplex>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `a ≤ b` in `K` read with `order`.
pub(crate) fn order_le(base: &SimplicialComplex, order: Order, a: usize, b: usize) -> bool {
    match order {
        Order::Original => base.is_face(a, b),
        Order::Opposite => base.is_face(b, a),
    }
}

/// A finite chain complex of free modules whose basis elements are labelled
/// by simplices of `K`, with every differential component `∂(τ, σ)` zero
/// unless `τ ≥ σ` in the complex's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RKComplex {
    base: Arc<SimplicialComplex>,
    order: Order,
    modules: BTreeMap<i32, Vec<Generator>>,
    differentials: BTreeMap<i32, Matrix>,
}

impl RKComplex {
    /// Validates shapes, labels, the support condition and `∂∘∂ = 0`.
    pub fn new(
        base: Arc<SimplicialComplex>,
        order: Order,
        modules: BTreeMap<i32, Vec<Generator>>,
        differentials: BTreeMap<i32, Matrix>,
    ) -> Result<Self> {
        let modules: BTreeMap<i32, Vec<Generator>> =
            modules.into_iter().filter(|(_, g)| !g.is_empty()).collect();
        for gens in modules.values() {
            if let Some(g) = gens.iter().find(|g| g.label >= base.len()) {
                return Err(Error::UnknownSimplex(format!("label of {}", g.name)));
            }
        }
        let rank = |q: i32| modules.get(&q).map_or(0, Vec::len);
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
        let c = RKComplex {
            base,
            order,
            modules,
            differentials: kept,
        };
        for (&q, d) in &c.differentials {
            for (r, col, _) in d.iter() {
                let (src, tgt) = (&c.modules[&q][col], &c.modules[&(q - 1)][r]);
                if !c.le(src.label, tgt.label) {
                    return Err(Error::Support(format!(
                        "differential sends {} to {} in degree {q}",
                        src.name, tgt.name
                    )));
                }
            }
        }
        c.underlying().check_d_squared()?;
        Ok(c)
    }

    pub fn zero(base: Arc<SimplicialComplex>, order: Order) -> Self {
        RKComplex {
            base,
            order,
            modules: BTreeMap::new(),
            differentials: BTreeMap::new(),
        }
    }

    pub fn base(&self) -> &Arc<SimplicialComplex> {
        &self.base
    }

    pub fn order(&self) -> Order {
        self.order
    }

    /// `a ≤ b` in this complex's order.
    pub fn le(&self, a: usize, b: usize) -> bool {
        order_le(&self.base, self.order, a, b)
    }

    pub fn generators(&self, q: i32) -> &[Generator] {
        self.modules.get(&q).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, q: i32) -> usize {
        self.generators(q).len()
    }

    pub fn total_rank(&self) -> usize {
        self.modules.values().map(Vec::len).sum()
    }

    /// Degrees carrying a nonzero module, ascending.
    pub fn degrees(&self) -> Vec<i32> {
        self.modules.keys().copied().collect()
    }

    pub fn ranks(&self) -> BTreeMap<i32, usize> {
        self.modules.iter().map(|(&q, g)| (q, g.len())).collect()
    }

    /// Rank of `C_q(σ)` for every label `σ` and degree `q`.
    pub fn ranks_by_label(&self) -> BTreeMap<(usize, i32), usize> {
        let mut out = BTreeMap::new();
        for (&q, gens) in &self.modules {
            for g in gens {
                *out.entry((g.label, q)).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn differential(&self, q: i32) -> Cow<'_, Matrix> {
        match self.differentials.get(&q) {
            Some(d) => Cow::Borrowed(d),
            None => Cow::Owned(Matrix::zeros(self.rank(q - 1), self.rank(q))),
        }
    }

    /// The underlying `R`-complex `C(K)`.
    pub fn underlying(&self) -> ChainComplex {
        ChainComplex::new(self.ranks(), self.differentials.clone())
            .expect("shapes were validated on construction")
    }

    /// Positions of generators with label in `labels`, per degree.
    pub fn positions_where<F: Fn(usize) -> bool>(&self, keep: F) -> BTreeMap<i32, Vec<usize>> {
        self.modules
            .iter()
            .map(|(&q, gens)| {
                let pos = gens
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| keep(g.label))
                    .map(|(i, _)| i)
                    .collect();
                (q, pos)
            })
            .collect()
    }

    /// Restriction to the given generator positions, differential included.
    pub(crate) fn restrict(&self, positions: &BTreeMap<i32, Vec<usize>>) -> ChainComplex {
        let empty = Vec::new();
        let pos = |q: i32| positions.get(&q).unwrap_or(&empty);
        let ranks = positions.iter().map(|(&q, p)| (q, p.len())).collect();
        let diffs = self
            .differentials
            .iter()
            .map(|(&q, d)| (q, d.select(pos(q - 1), pos(q)).expect("positions are in range")))
            .collect();
        ChainComplex::new(ranks, diffs).expect("restriction keeps shapes consistent")
    }

    /// The σ-piece `C(σ)` with the diagonal differential `∂(σ, σ)`.
    pub fn piece(&self, sigma: usize) -> ChainComplex {
        self.restrict(&self.positions_where(|l| l == sigma))
    }

    /// Same complex with every generator renamed.
    pub fn renamed<F: FnMut(i32, usize, &Generator) -> String>(mut self, mut f: F) -> Self {
        for (&q, gens) in self.modules.iter_mut() {
            for (i, g) in gens.iter_mut().enumerate() {
                g.name = f(q, i, g);
            }
        }
        self
    }

    pub fn check_support(&self) -> Result<()> {
        RKComplex::new(
            self.base.clone(),
            self.order,
            self.modules.clone(),
            self.differentials.clone(),
        )
        .map(|_| ())
    }
}

/// A map of (R,K) complexes of some degree, with components
/// `f_q : C_q → D_{q+degree}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RKMap {
    source: Arc<RKComplex>,
    target: Arc<RKComplex>,
    degree: i32,
    components: BTreeMap<i32, Matrix>,
}

impl RKMap {
    /// Validates shapes and the support condition `f(τ, σ) = 0` unless `τ ≥ σ`.
    pub fn new(
        source: Arc<RKComplex>,
        target: Arc<RKComplex>,
        degree: i32,
        components: BTreeMap<i32, Matrix>,
    ) -> Result<Self> {
        if !same_base(source.base(), target.base()) {
            return Err(Error::PosetMismatch("map between complexes over different K".into()));
        }
        if source.order() != target.order() {
            return Err(Error::OrderMismatch("map between K and K^op complexes".into()));
        }
        let mut kept = BTreeMap::new();
        for (q, f) in components {
            if f.shape() != (target.rank(q + degree), source.rank(q)) {
                return Err(Error::Shape(format!(
                    "component in degree {q} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.rank(q + degree),
                    source.rank(q)
                )));
            }
            for (r, c, _) in f.iter() {
                let (s, t) = (&source.generators(q)[c], &target.generators(q + degree)[r]);
                if !source.le(s.label, t.label) {
                    return Err(Error::Support(format!("map sends {} to {}", s.name, t.name)));
                }
            }
            if !f.is_zero() {
                kept.insert(q, f);
            }
        }
        Ok(RKMap {
            source,
            target,
            degree,
            components: kept,
        })
    }

    pub fn identity(c: Arc<RKComplex>) -> Self {
        let components = c.degrees().into_iter().map(|q| (q, Matrix::identity(c.rank(q)))).collect();
        RKMap::new(c.clone(), c, 0, components).expect("identity satisfies the support condition")
    }

    pub fn source(&self) -> &Arc<RKComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RKComplex> {
        &self.target
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn component(&self, q: i32) -> Cow<'_, Matrix> {
        match self.components.get(&q) {
            Some(f) => Cow::Borrowed(f),
            None => Cow::Owned(Matrix::zeros(self.target.rank(q + self.degree), self.source.rank(q))),
        }
    }

    fn all_degrees(&self) -> Vec<i32> {
        let mut qs = self.source.degrees();
        qs.extend(self.target.degrees().into_iter().map(|q| q - self.degree));
        qs.sort_unstable();
        qs.dedup();
        qs
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RKMap) -> Result<RKMap> {
        if !(Arc::ptr_eq(&self.target, &other.source) || *self.target == *other.source) {
            return Err(Error::Shape("composition of maps with mismatched complexes".into()));
        }
        let mut comps = BTreeMap::new();
        for q in self.all_degrees() {
            let f = self.component(q);
            let g = other.component(q + self.degree);
            comps.insert(q, g.checked_mul(&f)?);
        }
        RKMap::new(self.source.clone(), other.target.clone(), self.degree + other.degree, comps)
    }

    /// `d ∘ f = (-1)^{|f|} f ∘ d` in every degree.
    pub fn check_chain_map(&self) -> Result<()> {
        let sign = if self.degree % 2 == 0 { 1 } else { -1 };
        for q in self.all_degrees() {
            let left = self.target.differential(q + self.degree).checked_mul(&self.component(q))?;
            let right = self
                .component(q - 1)
                .checked_mul(&self.source.differential(q))?
                .scaled(sign)?;
            if left != right {
                return Err(Error::NotAChainMap { degree: q });
            }
        }
        Ok(())
    }

    pub fn is_chain_map(&self) -> bool {
        self.check_chain_map().is_ok()
    }

    /// True when only components between equal labels are nonzero.
    pub fn is_diagonal(&self) -> bool {
        self.components.iter().all(|(&q, f)| {
            f.iter().all(|(r, c, _)| {
                self.source.generators(q)[c].label == self.target.generators(q + self.degree)[r].label
            })
        })
    }

    /// True when every component is a signed permutation matrix.
    pub fn is_basis_bijection(&self) -> bool {
        self.degree == 0
            && self.source.ranks() == self.target.ranks()
            && self.source.degrees().iter().all(|&q| self.component(q).is_signed_permutation())
    }

    /// Inverse of a map that is a signed permutation in every degree.
    pub fn inverse_of_bijection(&self) -> Result<RKMap> {
        if !self.is_basis_bijection() || !self.is_diagonal() {
            return Err(Error::Shape("map is not a diagonal signed permutation".into()));
        }
        let comps = self.components.iter().map(|(&q, f)| (q, f.transpose())).collect();
        RKMap::new(self.target.clone(), self.source.clone(), 0, comps)
    }

    /// The underlying map of `R`-complexes `f(K)`.
    pub fn underlying(&self) -> Result<ChainMap> {
        self.restricted(|_| true)
    }

    /// Diagonal component `f(σ, σ): C(σ) → D(σ)`.
    pub fn diagonal(&self, sigma: usize) -> Result<ChainMap> {
        self.restricted(|l| l == sigma)
    }

    /// Restriction to generators whose labels satisfy `keep`, on both sides.
    pub fn restricted<F: Fn(usize) -> bool + Copy>(&self, keep: F) -> Result<ChainMap> {
        if self.degree != 0 {
            return Err(Error::Shape("only degree-0 maps restrict to chain maps".into()));
        }
        let sp = self.source.positions_where(keep);
        let tp = self.target.positions_where(keep);
        let empty = Vec::new();
        let comps = self
            .components
            .iter()
            .map(|(&q, f)| {
                let rows = tp.get(&q).unwrap_or(&empty);
                let cols = sp.get(&q).unwrap_or(&empty);
                Ok((q, f.select(rows, cols)?))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        ChainMap::new(self.source.restrict(&sp), self.target.restrict(&tp), comps)
    }
}
