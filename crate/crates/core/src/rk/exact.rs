use std::collections::BTreeSet;

use super::complex::RKMap;
use crate::error::{Error, Result};
use crate::linalg::Ring;

/// `0 → C' →i C →j C'' → 0`, validated labelwise and degreewise over `ℤ`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub i: RKMap,
    pub j: RKMap,
}

impl ShortExactSequence {
    pub fn new(i: RKMap, j: RKMap) -> Result<Self> {
        let ses = ShortExactSequence { i, j };
        ses.check()?;
        Ok(ses)
    }

    fn check(&self) -> Result<()> {
        let (i, j) = (&self.i, &self.j);
        if i.degree() != 0 || j.degree() != 0 {
            return Err(Error::Shape("exact sequence maps must have degree 0".into()));
        }
        if *i.target() != *j.source() {
            return Err(Error::Shape("exact sequence maps do not compose".into()));
        }
        if !i.is_diagonal() || !j.is_diagonal() {
            return Err(Error::Support("exact sequence map mixes labels".into()));
        }
        i.check_chain_map()?;
        j.check_chain_map()?;
        let mut labels = BTreeSet::new();
        for c in [i.source(), i.target(), j.target()] {
            for q in c.degrees() {
                labels.extend(c.generators(q).iter().map(|g| g.label));
            }
        }
        for sigma in labels {
            let (fi, fj) = (i.diagonal(sigma)?, j.diagonal(sigma)?);
            let qs: BTreeSet<i32> = fi
                .source
                .ranks()
                .keys()
                .chain(fi.target.ranks().keys())
                .chain(fj.target.ranks().keys())
                .copied()
                .collect();
            for q in qs {
                let (mi, mj) = (fi.component(q), fj.component(q));
                let (n1, n, n2) = (mi.cols(), mi.rows(), mj.rows());
                let si = Ring::Integers.smith_normal_form(&mi);
                let sj = Ring::Integers.smith_normal_form(&mj);
                let units = |f: &crate::linalg::SmithForm| f.factors.iter().all(|x| x.magnitude() == &1u32.into());
                let exact = si.rank == n1
                    && units(&si)
                    && sj.rank == n2
                    && units(&sj)
                    && mj.checked_mul(&mi)?.is_zero()
                    && n1 + n2 == n;
                if !exact {
                    let name = i.target().base().simplex_name(sigma);
                    return Err(Error::Shape(format!(
                        "sequence is not exact at label {name} in degree {q}"
                    )));
                }
            }
        }
        Ok(())
    }
}
