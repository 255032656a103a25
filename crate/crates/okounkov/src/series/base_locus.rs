//! Base loci of monomial section spaces as unions of coordinate flats, and
//! stable base loci of graded series as stabilized running intersections.
//!
//! A flat `T` encodes `V({x_i : i in T})` inside the chart; the empty flat
//! is the whole chart, so the set `{∅}` is the "everything" marker and the
//! empty flat set is the empty locus. Only minimal flats are stored.

use super::graded::GradedSeries;
use super::space::SectionSpace;
use super::SeriesError;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlatAmbient {
    AffineChart,
    Torus,
}

/// A finite union of coordinate flats, kept as an antichain of minimal
/// index sets.
#[derive(Clone, PartialEq, Eq)]
pub struct CoordinateFlatSet {
    ambient_dim: usize,
    ambient: FlatAmbient,
    flats: BTreeSet<BTreeSet<usize>>,
}

impl CoordinateFlatSet {
    pub fn empty_locus(ambient_dim: usize) -> CoordinateFlatSet {
        CoordinateFlatSet {
            ambient_dim,
            ambient: FlatAmbient::AffineChart,
            flats: BTreeSet::new(),
        }
    }

    /// The whole chart (the `Bs = U` marker).
    pub fn all(ambient_dim: usize) -> CoordinateFlatSet {
        let mut flats = BTreeSet::new();
        flats.insert(BTreeSet::new());
        CoordinateFlatSet {
            ambient_dim,
            ambient: FlatAmbient::AffineChart,
            flats,
        }
    }

    pub fn from_flats(
        ambient_dim: usize,
        flats: impl IntoIterator<Item = BTreeSet<usize>>,
    ) -> CoordinateFlatSet {
        let mut out = CoordinateFlatSet {
            ambient_dim,
            ambient: FlatAmbient::AffineChart,
            flats: flats.into_iter().collect(),
        };
        out.minimalize();
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn ambient(&self) -> FlatAmbient {
        self.ambient
    }

    pub fn flats(&self) -> &BTreeSet<BTreeSet<usize>> {
        &self.flats
    }

    pub fn is_empty_locus(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.flats.contains(&BTreeSet::new())
    }

    fn minimalize(&mut self) {
        let flats: Vec<BTreeSet<usize>> = self.flats.iter().cloned().collect();
        self.flats = flats
            .iter()
            .filter(|t| {
                !flats
                    .iter()
                    .any(|s| s.len() < t.len() && s.is_subset(t))
            })
            .cloned()
            .collect();
    }

    /// Set intersection: flats intersect pairwise as unions of index sets.
    pub fn intersect(&self, other: &CoordinateFlatSet) -> CoordinateFlatSet {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut flats = BTreeSet::new();
        for a in &self.flats {
            for b in &other.flats {
                flats.insert(a.union(b).copied().collect());
            }
        }
        CoordinateFlatSet::from_flats(self.ambient_dim, flats)
    }

    pub fn union(&self, other: &CoordinateFlatSet) -> CoordinateFlatSet {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        CoordinateFlatSet::from_flats(
            self.ambient_dim,
            self.flats.iter().chain(other.flats.iter()).cloned(),
        )
    }

    /// Is the single flat `V(t)` contained in this union? Exact: an
    /// irreducible flat inside a finite union lies inside one member.
    pub fn contains_flat(&self, t: &BTreeSet<usize>) -> bool {
        self.flats.iter().any(|s| s.is_subset(t))
    }

    /// Set containment of unions of flats.
    pub fn contains_set(&self, other: &CoordinateFlatSet) -> bool {
        other.flats.iter().all(|t| self.contains_flat(t))
    }
}

impl fmt::Debug for CoordinateFlatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty_locus() {
            return write!(f, "∅");
        }
        if self.is_all() {
            return write!(f, "U");
        }
        let parts: Vec<String> = self
            .flats
            .iter()
            .map(|t| {
                let vars: Vec<String> = t.iter().map(|i| format!("x{i}")).collect();
                format!("V({})", vars.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

impl fmt::Display for CoordinateFlatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Common vanishing set of a monomial space inside the chart: the union of
/// the minimal hitting sets of the monomial supports. The zero space
/// vanishes everywhere; a space containing a monomial with empty support
/// (a constant) vanishes nowhere.
pub fn base_locus(space: &SectionSpace) -> Result<CoordinateFlatSet, SeriesError> {
    let d = space.ambient_dim();
    if space.is_zero() {
        return Ok(CoordinateFlatSet::all(d));
    }
    if !space.is_monomial() {
        return Err(SeriesError::NonMonomial);
    }
    let supports: Vec<BTreeSet<usize>> = space
        .basis()
        .iter()
        .map(|s| {
            let exp = s.support().next().expect("monomial");
            exp.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    if supports.iter().any(|s| s.is_empty()) {
        return Ok(CoordinateFlatSet::empty_locus(d));
    }
    // Hitting sets over at most MAX_HULL_DIM coordinates: enumerate subsets.
    let mut hitting: Vec<BTreeSet<usize>> = Vec::new();
    for bits in 1u32..(1 << d) {
        let t: BTreeSet<usize> = (0..d).filter(|i| bits & (1 << i) != 0).collect();
        if supports.iter().all(|s| !s.is_disjoint(&t)) {
            hitting.push(t);
        }
    }
    Ok(CoordinateFlatSet::from_flats(d, hitting))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    /// Least degree after which the running intersection never changed.
    pub stabilized_at: usize,
    /// Degrees inspected.
    pub checked_to: usize,
    /// The running intersection stayed constant on the tail.
    pub constant_tail: bool,
}

/// Running intersection of `Bs(W_m)` for `1 <= m <= bound`, with the least
/// degree at which it stops changing.
pub fn stable_base_locus(
    series: &GradedSeries,
    bound: usize,
) -> Result<(CoordinateFlatSet, Stabilization), SeriesError> {
    assert!(bound >= 1);
    let mut running = CoordinateFlatSet::all(series.ambient_dim());
    let mut last_change = 1usize;
    for m in 1..=bound {
        let slice = series.space(m)?;
        let bs = base_locus(&slice)?;
        let next = running.intersect(&bs);
        if next != running {
            last_change = m;
        }
        running = next;
    }
    Ok((
        running,
        Stabilization {
            stabilized_at: last_change,
            checked_to: bound,
            constant_tail: true,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::graded::tests::explicit_series;
    use crate::series::LaurentSection;

    fn flat(ids: &[usize]) -> BTreeSet<usize> {
        ids.iter().copied().collect()
    }

    #[test]
    fn origin_from_two_monomials() {
        // span{x, y} on the plane vanishes exactly at the origin.
        let w = SectionSpace::monomials(1, 2, [vec![1, 0], vec![0, 1]]);
        let bs = base_locus(&w).unwrap();
        assert_eq!(bs.flats().len(), 1);
        assert!(bs.flats().contains(&flat(&[0, 1])));
    }

    #[test]
    fn constant_clears_base_locus() {
        let w = SectionSpace::monomials(1, 2, [vec![0, 0], vec![1, 0]]);
        assert!(base_locus(&w).unwrap().is_empty_locus());
    }

    #[test]
    fn zero_space_vanishes_everywhere() {
        let w = SectionSpace::zero(1, 2);
        assert!(base_locus(&w).unwrap().is_all());
    }

    #[test]
    fn non_monomial_rejected() {
        let s = LaurentSection::new(
            1,
            [(vec![0], crate::rational::rat_int(1)), (vec![1], crate::rational::rat_int(1))],
        );
        let w = SectionSpace::span(1, 1, vec![s]).unwrap();
        assert_eq!(base_locus(&w), Err(SeriesError::NonMonomial));
    }

    #[test]
    fn union_structure_of_hitting_sets() {
        // span{x y} vanishes on both axes: minimal hitting sets {0} and {1}.
        let w = SectionSpace::monomials(1, 2, [vec![1, 1]]);
        let bs = base_locus(&w).unwrap();
        assert_eq!(bs.flats().len(), 2);
        assert!(bs.contains_flat(&flat(&[0])));
        assert!(bs.contains_flat(&flat(&[1])));
        assert!(bs.contains_flat(&flat(&[0, 1])));
    }

    #[test]
    fn monotonicity_under_inclusion() {
        let small = SectionSpace::monomials(1, 2, [vec![1, 0]]);
        let large = SectionSpace::monomials(1, 2, [vec![1, 0], vec![0, 1]]);
        let bs_small = base_locus(&small).unwrap();
        let bs_large = base_locus(&large).unwrap();
        assert!(bs_small.contains_set(&bs_large));
    }

    #[test]
    fn flat_set_algebra() {
        let a = CoordinateFlatSet::from_flats(2, [flat(&[0])]);
        let b = CoordinateFlatSet::from_flats(2, [flat(&[1])]);
        let meet = a.intersect(&b);
        assert_eq!(meet.flats().len(), 1);
        assert!(meet.flats().contains(&flat(&[0, 1])));
        let all = CoordinateFlatSet::all(2);
        assert_eq!(all.intersect(&a), a);
        assert!(all.contains_set(&a));
        assert!(!CoordinateFlatSet::empty_locus(2).contains_set(&a));
        // Minimalization keeps the antichain.
        let redundant = CoordinateFlatSet::from_flats(2, [flat(&[0]), flat(&[0, 1])]);
        assert_eq!(redundant.flats().len(), 1);
    }

    #[test]
    fn stable_base_locus_stabilizes() {
        // W_m = span{x^m} on the line: SB = {x = 0} from degree 1 on.
        let pure = explicit_series(1, 6, |m| {
            SectionSpace::monomials(m, 1, [vec![m as i64]])
        });
        let (sb, st) = stable_base_locus(&pure, 6).unwrap();
        assert!(sb.contains_flat(&flat(&[0])));
        assert_eq!(st.stabilized_at, 1);

        // W_1 = span{x}, W_m contains 1 for m >= 2: running intersection
        // drops to the empty locus at degree 2.
        let drops = explicit_series(1, 6, |m| {
            if m == 1 {
                SectionSpace::monomials(1, 1, [vec![1]])
            } else {
                SectionSpace::monomials(m, 1, [vec![0], vec![m as i64]])
            }
        });
        let (sb, st) = stable_base_locus(&drops, 6).unwrap();
        assert!(sb.is_empty_locus());
        assert_eq!(st.stabilized_at, 2);
    }
}
