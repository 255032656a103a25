//! Finite-dimensional section spaces with a canonical echelon basis.
//!
//! Echelonization pivots on lexicographically minimal exponents, matching
//! the valuation as a minimum; the result is monic, fully reduced, and has
//! pairwise distinct valuation vectors, so the leading-exponent multiset of
//! a space is exactly its valuation image and its size is the dimension.

use super::flag::Flag;
use super::section::LaurentSection;
use super::SeriesError;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSpace {
    degree: usize,
    ambient_dim: usize,
    basis: Vec<LaurentSection>,
}

impl SectionSpace {
    pub fn zero(degree: usize, ambient_dim: usize) -> SectionSpace {
        SectionSpace {
            degree,
            ambient_dim,
            basis: vec![],
        }
    }

    /// Span of the given sections, stored as the canonical echelon basis in
    /// the standard variable order. Dependent inputs collapse; dimension is
    /// the rank of the span.
    pub fn span(
        degree: usize,
        ambient_dim: usize,
        sections: Vec<LaurentSection>,
    ) -> Result<SectionSpace, SeriesError> {
        let flag = Flag::standard(ambient_dim);
        let basis = echelonize(sections, &flag)?;
        Ok(SectionSpace {
            degree,
            ambient_dim,
            basis,
        })
    }

    /// The monomial space with the given exponent set.
    pub fn monomials(
        degree: usize,
        ambient_dim: usize,
        exps: impl IntoIterator<Item = Vec<i64>>,
    ) -> SectionSpace {
        let set: BTreeSet<Vec<i64>> = exps.into_iter().collect();
        let basis = set
            .into_iter()
            .map(|e| {
                assert_eq!(e.len(), ambient_dim);
                LaurentSection::monomial(ambient_dim, &e)
            })
            .collect();
        SectionSpace {
            degree,
            ambient_dim,
            basis,
        }
    }

    pub fn one(ambient_dim: usize) -> SectionSpace {
        SectionSpace::monomials(0, ambient_dim, [vec![0; ambient_dim]])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[LaurentSection] {
        &self.basis
    }

    pub fn is_monomial(&self) -> bool {
        self.basis.iter().all(|s| s.is_monomial())
    }

    /// Re-echelonize with respect to a flag; the span is unchanged and the
    /// number of distinct leading exponents equals the dimension.
    pub fn echelon(&self, flag: &Flag) -> Result<SectionSpace, SeriesError> {
        let basis = echelonize(self.basis.clone(), flag)?;
        debug_assert_eq!(basis.len(), self.basis.len());
        Ok(SectionSpace {
            degree: self.degree,
            ambient_dim: self.ambient_dim,
            basis,
        })
    }

    /// The valuation image of the space: leading exponents of an echelon
    /// basis, one per dimension.
    pub fn leading_exponents(&self, flag: &Flag) -> Result<BTreeSet<Vec<i64>>, SeriesError> {
        let ech = self.echelon(flag)?;
        let mut out = BTreeSet::new();
        for s in &ech.basis {
            out.insert(s.valuation(flag)?);
        }
        debug_assert_eq!(out.len(), ech.basis.len());
        Ok(out)
    }

    /// Span of pairwise products; degrees add.
    pub fn tensor(&self, other: &SectionSpace) -> Result<SectionSpace, SeriesError> {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut products = Vec::with_capacity(self.basis.len() * other.basis.len());
        for a in &self.basis {
            for b in &other.basis {
                products.push(a.mul(b));
            }
        }
        SectionSpace::span(self.degree + other.degree, self.ambient_dim, products)
    }

    /// Image under substituting `x_i = 0` for `i` in the mask, echelonized
    /// in the surviving variables.
    pub fn restrict(&self, mask: &BTreeSet<usize>) -> Result<SectionSpace, SeriesError> {
        assert!(
            mask.len() < self.ambient_dim,
            "restriction mask must be strict"
        );
        let images: Vec<LaurentSection> =
            self.basis.iter().map(|s| s.restrict(mask)).collect();
        SectionSpace::span(self.degree, self.ambient_dim - mask.len(), images)
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains_section(&self, s: &LaurentSection) -> Result<bool, SeriesError> {
        let flag = Flag::standard(self.ambient_dim);
        let mut r = s.clone();
        loop {
            if r.is_zero() {
                return Ok(true);
            }
            let v = r.valuation(&flag)?;
            let mut reduced = false;
            for b in &self.basis {
                if b.valuation(&flag)? == v {
                    let c = r.coeff(&v).expect("valuation term present").clone();
                    r = r.eliminate(&c, b);
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                return Ok(false);
            }
        }
    }

    pub fn is_subspace_of(&self, other: &SectionSpace) -> Result<bool, SeriesError> {
        if self.is_monomial() && other.is_monomial() {
            let mine: BTreeSet<&Vec<i64>> =
                self.basis.iter().map(|s| s.support().next().expect("monomial")).collect();
            let theirs: BTreeSet<&Vec<i64>> =
                other.basis.iter().map(|s| s.support().next().expect("monomial")).collect();
            return Ok(mine.is_subset(&theirs));
        }
        for b in &self.basis {
            if !other.contains_section(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "ambient_dim": self.ambient_dim,
            "dim": self.dim(),
            "basis": self.basis.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Gaussian elimination pivoting on the flag-lex-minimal exponent. The
/// output is monic, fully reduced, sorted by increasing valuation, and its
/// valuations are pairwise distinct.
fn echelonize(sections: Vec<LaurentSection>, flag: &Flag) -> Result<Vec<LaurentSection>, SeriesError> {
    let positions = flag.comparison_positions();
    let n = flag.space_dim();
    let mut work: Vec<LaurentSection> = sections.into_iter().filter(|s| !s.is_zero()).collect();
    // Monomial spans are already echelon up to deduplication and scaling.
    if work.iter().all(|s| s.is_monomial()) {
        let mut by_exp: std::collections::BTreeMap<Vec<i64>, LaurentSection> =
            std::collections::BTreeMap::new();
        let mut sortable = Vec::with_capacity(work.len());
        for s in work {
            let v = s.valuation_at(&positions, n)?;
            by_exp.entry(v).or_insert_with(|| {
                let lead = s.terms().next().expect("monomial").1.clone();
                s.scaled(&lead.recip())
            });
        }
        for (v, s) in by_exp {
            sortable.push((v, s));
        }
        sortable.sort_by(|a, b| {
            for &p in &positions {
                match a.0[p].cmp(&b.0[p]) {
                    std::cmp::Ordering::Equal => continue,
                    other => return other,
                }
            }
            std::cmp::Ordering::Equal
        });
        return Ok(sortable.into_iter().map(|(_, s)| s).collect());
    }
    let mut out: Vec<LaurentSection> = Vec::new();
    while !work.is_empty() {
        let mut best = 0usize;
        let mut best_val = work[0].valuation_at(&positions, n)?;
        for (i, s) in work.iter().enumerate().skip(1) {
            let v = s.valuation_at(&positions, n)?;
            if lex_less(&v, &best_val, &positions) {
                best = i;
                best_val = v;
            }
        }
        let pivot = work.swap_remove(best);
        let lead = pivot
            .coeff(&best_val)
            .expect("valuation coefficient present")
            .clone();
        let pivot = pivot.scaled(&lead.recip());
        let mut next: Vec<LaurentSection> = Vec::with_capacity(work.len());
        for s in work {
            let reduced = match s.coeff(&best_val) {
                Some(c) => s.eliminate(&c.clone(), &pivot),
                None => s,
            };
            if !reduced.is_zero() {
                next.push(reduced);
            }
        }
        work = next;
        // Keep earlier pivots fully reduced too.
        for prev in out.iter_mut() {
            if let Some(c) = prev.coeff(&best_val) {
                *prev = prev.eliminate(&c.clone(), &pivot);
            }
        }
        out.push(pivot);
    }
    Ok(out)
}

fn lex_less(a: &[i64], b: &[i64], positions: &[usize]) -> bool {
    for &p in positions {
        match a[p].cmp(&b[p]) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => continue,
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn sec(dim: usize, terms: &[(&[i64], i64)]) -> LaurentSection {
        LaurentSection::new(
            dim,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), rat_int(*c))),
        )
    }

    #[test]
    fn echelon_of_monomial_span() {
        let w = SectionSpace::span(
            1,
            2,
            vec![
                LaurentSection::constant(2, rat_int(1)),
                LaurentSection::monomial(2, &[1, 0]),
                LaurentSection::monomial(2, &[0, 1]),
            ],
        )
        .unwrap();
        let lead = w.leading_exponents(&Flag::standard(2)).unwrap();
        let expect: BTreeSet<Vec<i64>> =
            [vec![0, 0], vec![1, 0], vec![0, 1]].into_iter().collect();
        assert_eq!(lead, expect);
    }

    #[test]
    fn shared_leading_term_eliminated() {
        // span{x+y, x-y} with x-before-y order: min exponents read y first,
        // both valuations are (0,1); elimination leaves {(0,1),(1,0)}.
        let w = SectionSpace::span(
            1,
            2,
            vec![
                sec(2, &[(&[1, 0], 1), (&[0, 1], 1)]),
                sec(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
            ],
        )
        .unwrap();
        assert_eq!(w.dim(), 2);
        let lead = w.leading_exponents(&Flag::standard(2)).unwrap();
        let expect: BTreeSet<Vec<i64>> = [vec![0, 1], vec![1, 0]].into_iter().collect();
        assert_eq!(lead, expect);
    }

    #[test]
    fn single_vector_space() {
        let w = SectionSpace::span(1, 2, vec![sec(2, &[(&[1, 0], 3)])]).unwrap();
        assert_eq!(w.dim(), 1);
        let lead = w.leading_exponents(&Flag::standard(2)).unwrap();
        assert!(lead.contains(&vec![1, 0]));
        // Canonical basis is monic.
        assert_eq!(w.basis()[0].coeff(&[1, 0]), Some(&rat_int(1)));
    }

    #[test]
    fn dependent_inputs_collapse() {
        let w = SectionSpace::span(
            1,
            1,
            vec![
                sec(1, &[(&[0], 1), (&[1], 1)]),
                sec(1, &[(&[0], 2), (&[1], 2)]),
                sec(1, &[(&[1], 1)]),
            ],
        )
        .unwrap();
        assert_eq!(w.dim(), 2);
    }

    #[test]
    fn tensor_products() {
        let w = SectionSpace::monomials(1, 1, [vec![0], vec![1]]);
        let sq = w.tensor(&w).unwrap();
        assert_eq!(sq.dim(), 3);
        assert_eq!(sq.degree(), 2);
        let one = SectionSpace::one(1);
        assert_eq!(w.tensor(&one).unwrap().dim(), w.dim());
        let x = SectionSpace::monomials(1, 2, [vec![1, 0]]);
        let y = SectionSpace::monomials(1, 2, [vec![0, 1]]);
        let xy = x.tensor(&y).unwrap();
        assert_eq!(
            xy.leading_exponents(&Flag::standard(2)).unwrap(),
            [vec![1, 1]].into_iter().collect()
        );
    }

    #[test]
    fn restriction_examples() {
        let mask: BTreeSet<usize> = [1].into_iter().collect();
        let w = SectionSpace::span(
            1,
            2,
            vec![
                LaurentSection::constant(2, rat_int(1)),
                LaurentSection::monomial(2, &[1, 0]),
                LaurentSection::monomial(2, &[0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(w.restrict(&mask).unwrap().dim(), 2);
        let only_y = SectionSpace::monomials(1, 2, [vec![0, 1]]);
        assert!(only_y.restrict(&mask).unwrap().is_zero());
        // span{x1 + x2, x2} restricts to span{x1}.
        let mixed = SectionSpace::span(
            1,
            2,
            vec![sec(2, &[(&[1, 0], 1), (&[0, 1], 1)]), sec(2, &[(&[0, 1], 1)])],
        )
        .unwrap();
        let r = mixed.restrict(&mask).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(
            r.leading_exponents(&Flag::standard(1)).unwrap(),
            [vec![1]].into_iter().collect()
        );
    }

    #[test]
    fn subspace_and_membership() {
        let w = SectionSpace::span(
            1,
            1,
            vec![sec(1, &[(&[0], 1), (&[1], 1)])],
        )
        .unwrap();
        let big = SectionSpace::monomials(1, 1, [vec![0], vec![1]]);
        assert!(w.is_subspace_of(&big).unwrap());
        assert!(!big.is_subspace_of(&w).unwrap());
        assert!(w.contains_section(&sec(1, &[(&[0], 2), (&[1], 2)])).unwrap());
        assert!(!w.contains_section(&sec(1, &[(&[0], 1)])).unwrap());
    }
}
