//! Executable invariant suites. Each suite turns a family of exact
//! identities and inclusions into pass/fail rows: geometry and series
//! suites draw seeded random inputs, instance suites sweep the declared
//! divisors, stages and degrees. The `verify` subcommand and the
//! integration tests both drive these.

use crate::adelic::{
    adelic_sections, augmented_base_locus, boundary_distance, limit_series, model_series,
    sandwich_spaces, verify_cauchy, ModelDivisor, NormValue,
};
use crate::body::{
    check_conditions, homogeneity_check, okounkov_truncated, semigroup_slice, volume_gaps_decay,
    GradedSemigroup,
};
use crate::geometry::{
    hausdorff_distance, lattice_index, RatCone, RatPolytope, RatVec,
};
use crate::global::{
    build_global, continuity_experiment, fiber_check, fujita_inner_body, interior_contains,
    log_concavity_check, model_convergence,
};
use crate::instance::Instance;
use crate::rational::{fraction_string, rat, rat_int, rat_pow, Rat};
use crate::report::CheckResult;
use crate::series::{base_locus, stable_base_locus, Flag, LaurentSection, SectionSpace};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;

fn row(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        hard: true,
        detail,
    }
}

fn info_row(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        hard: false,
        detail,
    }
}

fn rand_rat(rng: &mut StdRng, span: i64) -> Rat {
    let num = rng.gen_range(-span..=span);
    let den = rng.gen_range(1..=3);
    rat(num, den)
}

fn rand_point(rng: &mut StdRng, dim: usize, span: i64) -> RatVec {
    RatVec::new((0..dim).map(|_| rand_rat(rng, span)).collect())
}

fn rand_polytope(rng: &mut StdRng, dim: usize) -> RatPolytope {
    let n = rng.gen_range(dim + 1..=dim + 5);
    let pts: Vec<RatVec> = (0..n).map(|_| rand_point(rng, dim, 4)).collect();
    RatPolytope::from_points(&pts).expect("random hull")
}

fn rand_full_dim_polytope(rng: &mut StdRng, dim: usize) -> RatPolytope {
    loop {
        let p = rand_polytope(rng, dim);
        if p.is_full_dim() {
            return p;
        }
    }
}

/// Random exact-geometry checks: hulls, volumes, the metric, slices and the
/// Brunn-Minkowski comparison.
pub fn suite_geometry(seed: u64, samples: usize) -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();

    let mut idem = 0usize;
    let mut vh = 0usize;
    let mut pos = 0usize;
    let mut scale_bad = 0usize;
    for _ in 0..samples {
        let dim = rng.gen_range(1..=3);
        let p = rand_polytope(&mut rng, dim);
        if RatPolytope::from_points(p.vertices()).unwrap() != p {
            idem += 1;
        }
        let k = p.affine_dim().unwrap();
        for v in p.vertices() {
            let tight = p.halfspaces().iter().filter(|h| h.tight(v)).count();
            if tight < k {
                vh += 1;
            }
        }
        for h in p.halfspaces() {
            let tight = p.vertices().iter().filter(|v| h.tight(v)).count();
            let is_equality = tight == p.vertices().len();
            if !is_equality && tight < k {
                vh += 1;
            }
        }
        let full = p.is_full_dim();
        if (p.volume() > Rat::zero()) != full {
            pos += 1;
        }
        let t = rat(rng.gen_range(0..=6), rng.gen_range(1..=3));
        let scaled = p.scale(&t).unwrap();
        if scaled.volume() != rat_pow(&t, dim as i32) * p.volume() {
            scale_bad += 1;
        }
    }
    out.push(row("geometry/hull-idempotence", idem == 0, format!("{samples} random hulls, {idem} violations")));
    out.push(row("geometry/vh-consistency", vh == 0, format!("tightness counts on random hulls, {vh} violations")));
    out.push(row("geometry/volume-positivity", pos == 0, format!("volume > 0 iff full-dimensional, {pos} violations")));
    out.push(row("geometry/scale-law", scale_bad == 0, format!("vol(tP) = t^d vol(P) exactly, {scale_bad} violations")));

    let mut metric_bad = 0usize;
    for _ in 0..samples {
        let dim = rng.gen_range(1..=2);
        let p = rand_polytope(&mut rng, dim);
        let q = rand_polytope(&mut rng, dim);
        let r = rand_polytope(&mut rng, dim);
        let dpq = hausdorff_distance(&p, &q).unwrap();
        if hausdorff_distance(&p, &p).unwrap() != Rat::zero() {
            metric_bad += 1;
        }
        if (dpq == Rat::zero()) != (p == q) {
            metric_bad += 1;
        }
        if dpq != hausdorff_distance(&q, &p).unwrap() {
            metric_bad += 1;
        }
        let dpr = hausdorff_distance(&p, &r).unwrap();
        let dqr = hausdorff_distance(&q, &r).unwrap();
        if dpr > &dpq + &dqr {
            metric_bad += 1;
        }
    }
    out.push(row("geometry/metric-axioms", metric_bad == 0, format!("identity, symmetry, triangle on {samples} triples, {metric_bad} violations")));

    let mut slice_bad = 0usize;
    for _ in 0..samples {
        let body_dim = rng.gen_range(1..=2);
        let n = rng.gen_range(2..=5);
        let gens: Vec<RatVec> = (0..n)
            .map(|_| {
                let h = rng.gen_range(1..=3i64);
                let mut coords: Vec<Rat> =
                    (0..body_dim).map(|_| rat_int(rng.gen_range(0..=3 * h))).collect();
                coords.push(rat_int(h));
                RatVec::new(coords)
            })
            .collect();
        let cone = RatCone::new(gens, (body_dim, 1));
        let t = rat(rng.gen_range(1..=4), rng.gen_range(1..=3));
        let s1 = cone.slice(&[rat_int(1)]).unwrap();
        let st = cone.slice(&[t.clone()]).unwrap();
        if st != s1.scale(&t).unwrap() {
            slice_bad += 1;
        }
    }
    out.push(row("geometry/cone-slice-homogeneity", slice_bad == 0, format!("slice(tа) = t slice(a) on {samples} graded cones, {slice_bad} violations")));

    let mut bm_bad = 0usize;
    for _ in 0..samples {
        let dim = rng.gen_range(1..=3);
        let p = rand_full_dim_polytope(&mut rng, dim);
        let q = rand_full_dim_polytope(&mut rng, dim);
        if !log_concavity_check(&p, &q).unwrap().holds {
            bm_bad += 1;
        }
    }
    out.push(row("geometry/brunn-minkowski", bm_bad == 0, format!("d-th power comparison on {samples} random pairs, {bm_bad} violations")));

    let mut mk_bad = 0usize;
    for _ in 0..samples {
        let dim = rng.gen_range(1..=3);
        let p = rand_polytope(&mut rng, dim);
        let v = rand_point(&mut rng, dim, 3);
        let single = RatPolytope::from_points(&[v.clone()]).unwrap();
        if p.minkowski_sum(&single).unwrap() != p.translate(&v) {
            mk_bad += 1;
        }
    }
    out.push(row("geometry/minkowski-translate", mk_bad == 0, format!("P + point = translate on {samples} samples, {mk_bad} violations")));
    out
}

fn rand_section(rng: &mut StdRng, dim: usize, max_terms: usize) -> LaurentSection {
    let terms = rng.gen_range(1..=max_terms);
    let mut map = Vec::new();
    for _ in 0..terms {
        let exp: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=3)).collect();
        let mut num = 0;
        while num == 0 {
            num = rng.gen_range(-5..=5);
        }
        map.push((exp, rat(num, rng.gen_range(1..=3))));
    }
    let s = LaurentSection::new(dim, map);
    if s.is_zero() {
        LaurentSection::monomial(dim, &vec![0; dim])
    } else {
        s
    }
}

fn rand_flag(rng: &mut StdRng, dim: usize) -> Flag {
    let mut order: Vec<usize> = (0..dim).collect();
    for i in (1..dim).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    Flag::with_order(dim, order).unwrap()
}

fn rand_space(rng: &mut StdRng, dim: usize, max_dim: usize) -> SectionSpace {
    let n = rng.gen_range(1..=max_dim);
    let sections: Vec<LaurentSection> = (0..n).map(|_| rand_section(rng, dim, 4)).collect();
    SectionSpace::span(1, dim, sections).unwrap()
}

/// Apply a random unimodular integer change of basis to the space.
fn unimodular_shuffle(rng: &mut StdRng, space: &SectionSpace) -> SectionSpace {
    let mut basis: Vec<LaurentSection> = space.basis().to_vec();
    let n = basis.len();
    if n > 1 {
        for _ in 0..(3 * n) {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            match rng.gen_range(0..3) {
                0 => basis.swap(i, j),
                1 => {
                    let c = rat_int(rng.gen_range(-2..=2));
                    basis[i] = basis[i].add(&basis[j].scaled(&c));
                }
                _ => basis[i] = basis[i].scaled(&rat_int(-1)),
            }
        }
    }
    SectionSpace::span(space.degree(), space.ambient_dim(), basis).unwrap()
}

/// Random valuation and echelon checks.
pub fn suite_series(seed: u64, samples: usize) -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();

    let mut addv_bad = 0usize;
    for _ in 0..samples {
        let dim = rng.gen_range(1..=3);
        let flag = rand_flag(&mut rng, dim);
        let f = rand_section(&mut rng, dim, 4);
        let g = rand_section(&mut rng, dim, 4);
        let sum: Vec<i64> = f
            .valuation(&flag)
            .unwrap()
            .iter()
            .zip(g.valuation(&flag).unwrap())
            .map(|(a, b)| a + b)
            .collect();
        if f.mul(&g).valuation(&flag).unwrap() != sum {
            addv_bad += 1;
        }
    }
    out.push(row("series/valuation-additivity", addv_bad == 0, format!("v(fg) = v(f)+v(g) on {samples} random pairs, {addv_bad} violations")));

    let mut count_bad = 0usize;
    let mut stable_bad = 0usize;
    for _ in 0..samples {
        let dim = rng.gen_range(1..=3);
        let flag = rand_flag(&mut rng, dim);
        let w = rand_space(&mut rng, dim, 12);
        let lead = w.leading_exponents(&flag).unwrap();
        if lead.len() != w.dim() {
            count_bad += 1;
        }
        let shuffled = unimodular_shuffle(&mut rng, &w);
        if shuffled.leading_exponents(&flag).unwrap() != lead {
            stable_bad += 1;
        }
    }
    out.push(row("series/echelon-counting", count_bad == 0, format!("#leading exponents = dim on {samples} spaces, {count_bad} violations")));
    out.push(row("series/valuation-image-stability", stable_bad == 0, format!("leading set invariant under change of basis, {stable_bad} violations")));

    let mut mono_bad = 0usize;
    for _ in 0..samples {
        let dim = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=4);
        let exps: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..dim).map(|_| rng.gen_range(0..=2)).collect())
            .collect();
        let small = SectionSpace::monomials(1, dim, exps.clone());
        let mut bigger = exps;
        bigger.push((0..dim).map(|_| rng.gen_range(0..=2)).collect());
        let large = SectionSpace::monomials(1, dim, bigger);
        let bs_small = base_locus(&small).unwrap();
        let bs_large = base_locus(&large).unwrap();
        if !bs_small.contains_set(&bs_large) {
            mono_bad += 1;
        }
    }
    out.push(row("series/base-locus-monotonicity", mono_bad == 0, format!("W ⊆ W' implies Bs(W') ⊆ Bs(W), {mono_bad} violations")));

    let mut functor_bad = 0usize;
    for _ in 0..samples {
        let dim = rng.gen_range(2..=3);
        let mask: BTreeSet<usize> = [rng.gen_range(0..dim)].into_iter().collect();
        let gen_space = |rng: &mut StdRng| {
            let n = rng.gen_range(1..=3);
            let exps: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..dim).map(|_| rng.gen_range(0..=2)).collect())
                .collect();
            SectionSpace::monomials(1, dim, exps)
        };
        let a = gen_space(&mut rng);
        let b = gen_space(&mut rng);
        let lhs = a.tensor(&b).unwrap().restrict(&mask).unwrap();
        let rhs = a
            .restrict(&mask)
            .unwrap()
            .tensor(&b.restrict(&mask).unwrap())
            .unwrap();
        if lhs != rhs {
            functor_bad += 1;
        }
    }
    out.push(row("series/restriction-functoriality", functor_bad == 0, format!("restrict ∘ tensor = tensor ∘ restrict on monomials, {functor_bad} violations")));
    out
}

/// Instance-level adelic checks: the boundary norm, Cauchy data, stage
/// sandwiches, multiplicativity and base loci.
pub fn suite_adelic(instance: &Instance, seed: u64) -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let frame = &instance.frame;
    let d0 = &instance.boundary;

    let mut norm_bad = 0usize;
    let rand_boundary_divisor = |rng: &mut StdRng| {
        let coeffs: Vec<Rat> = (0..frame.num_rays())
            .map(|i| {
                if frame.is_boundary(i) {
                    rand_rat(rng, 4)
                } else {
                    Rat::zero()
                }
            })
            .collect();
        ModelDivisor::new(frame, coeffs).unwrap()
    };
    for _ in 0..12 {
        let a = rand_boundary_divisor(&mut rng);
        let b = rand_boundary_divisor(&mut rng);
        let c = rand_boundary_divisor(&mut rng);
        let dab = boundary_distance(&a, &b, d0, frame);
        let dba = boundary_distance(&b, &a, d0, frame);
        if dab != dba {
            norm_bad += 1;
        }
        let NormValue::Finite(ab) = dab else {
            norm_bad += 1;
            continue;
        };
        if (ab.is_zero()) != (a == b) {
            norm_bad += 1;
        }
        let NormValue::Finite(ac) = boundary_distance(&a, &c, d0, frame) else {
            norm_bad += 1;
            continue;
        };
        let NormValue::Finite(bc) = boundary_distance(&b, &c, d0, frame) else {
            norm_bad += 1;
            continue;
        };
        if ac > ab + bc {
            norm_bad += 1;
        }
    }
    out.push(row("adelic/norm-axioms", norm_bad == 0, format!("boundary norm axioms on random divisors, {norm_bad} violations")));

    let stage_bound = instance.params.stage_bound.min(8);
    let degree_bound = instance.params.max_degree.min(12);
    for (name, d) in &instance.divisors {
        let report = verify_cauchy(d, stage_bound).unwrap();
        out.push(row(
            &format!("adelic/cauchy[{name}]"),
            report.passed(),
            format!("{} pairs checked, {} violations", report.checked_pairs, report.violations.len()),
        ));
        let monotone = report.limit_distances.iter().all(|(_, dist, q)| match dist {
            NormValue::Finite(r) => r <= q,
            NormValue::Infinite => false,
        });
        out.push(row(
            &format!("adelic/limit-within-tolerance[{name}]"),
            monotone,
            format!("|limit - D_j| <= q_j for j <= {stage_bound}"),
        ));

        let mut sandwich_bad = 0usize;
        let mut checked = 0usize;
        for j in 1..=stage_bound {
            for m in 1..=degree_bound as u64 {
                checked += 1;
                if !sandwich_spaces(d, j, m).unwrap().holds() {
                    sandwich_bad += 1;
                }
            }
        }
        out.push(row(
            &format!("adelic/sandwich[{name}]"),
            sandwich_bad == 0,
            format!("lower ⊆ middle ⊆ upper on {checked} (stage, degree) cells, {sandwich_bad} violations"),
        ));

        let mut mult_bad = 0usize;
        for _ in 0..6 {
            let a = rng.gen_range(1..=degree_bound.max(2) / 2) as u64;
            let b = rng.gen_range(1..=degree_bound.max(2) / 2) as u64;
            let wa = adelic_sections(d, a).unwrap();
            let wb = adelic_sections(d, b).unwrap();
            let wab = adelic_sections(d, a + b).unwrap();
            if !wa.tensor(&wb).unwrap().is_subspace_of(&wab).unwrap() {
                mult_bad += 1;
            }
        }
        out.push(row(
            &format!("adelic/multiplicativity[{name}]"),
            mult_bad == 0,
            format!("W_a ⊗ W_b ⊆ W_a+b on sampled degrees, {mult_bad} violations"),
        ));
    }

    let bplus_bound = instance.params.bplus_degree.max(2);
    for (name, d) in &instance.divisors {
        if let Some((n1, a1, n2, a2)) = instance.ample_pair() {
            let (b1, _) = augmented_base_locus(d, a1, bplus_bound).unwrap();
            let (b2, _) = augmented_base_locus(d, a2, bplus_bound).unwrap();
            out.push(row(
                &format!("adelic/bplus-independence[{name}]"),
                b1 == b2,
                format!("B+ with {n1} and {n2} agree: {b1} vs {b2}"),
            ));
        }
        if let Ok(a) = instance.ample(None) {
            let (bplus, _) = augmented_base_locus(d, a, bplus_bound).unwrap();
            let series = limit_series(d);
            let (sb, _) = stable_base_locus(&series, bplus_bound).unwrap();
            out.push(row(
                &format!("adelic/bplus-contains-sb[{name}]"),
                bplus.contains_set(&sb),
                format!("SB = {sb} inside B+ = {bplus}"),
            ));
        }
    }
    out
}

/// Instance-level body checks: slice counts, semigroup structure, the
/// sandwich at both levels, volume decay and homogeneity.
pub fn suite_bodies(instance: &Instance, _seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let degree_bound = instance.params.max_degree.min(12);
    let stage_bound = instance.params.stage_bound.min(6);
    let flag = instance.flag(None).unwrap();

    for (name, d) in &instance.divisors {
        let series = limit_series(d);
        let mut count_bad = 0usize;
        for m in 1..=degree_bound {
            let slice = semigroup_slice(&series, m, flag).unwrap();
            if slice.len() != series.space(m).unwrap().dim() {
                count_bad += 1;
            }
        }
        out.push(row(
            &format!("bodies/slice-count[{name}]"),
            count_bad == 0,
            format!("#slice = dim W_m for m <= {degree_bound}, {count_bad} violations"),
        ));

        let semigroup = GradedSemigroup::materialize(&series, flag, degree_bound).unwrap();
        out.push(row(
            &format!("bodies/semigroup-additivity[{name}]"),
            semigroup.additivity_holds(degree_bound),
            "slice_a + slice_b ⊆ slice_a+b on materialized degrees".to_string(),
        ));

        let conditions = check_conditions(&semigroup, degree_bound);
        out.push(row(
            &format!("bodies/boundedness[{name}]"),
            conditions.bounding_certified,
            match &conditions.coordinate_bound {
                Some(b) => format!("slices within [0, m*ceil({})]", fraction_string(b)),
                None => "no positive-degree points".to_string(),
            },
        ));
        if d.is_big().unwrap() {
            out.push(row(
                &format!("bodies/lattice-fullness[{name}]"),
                conditions.index.is_one(),
                format!("graded vectors have index {} in Z^(d+1)", conditions.index),
            ));
        }

        let mut semi_sandwich_bad = 0usize;
        let mut body_sandwich_bad = 0usize;
        let body_bound = degree_bound.min(6);
        let middle_body = okounkov_truncated(&series, flag, body_bound).unwrap();
        for j in 1..=stage_bound {
            let (dj, qj) = d.stage(j).unwrap();
            let margin = d.boundary().scaled(&qj);
            let lower = model_series(d.frame().clone(), dj.sub(&margin), format!("{name} lower {j}"));
            let upper = model_series(d.frame().clone(), dj.add(&margin), format!("{name} upper {j}"));
            for m in 1..=degree_bound.min(8) {
                let gl = semigroup_slice(&lower, m, flag).unwrap();
                let gm = semigroup_slice(&series, m, flag).unwrap();
                let gu = semigroup_slice(&upper, m, flag).unwrap();
                if !(gl.is_subset(&gm) && gm.is_subset(&gu)) {
                    semi_sandwich_bad += 1;
                }
            }
            let lower_body = okounkov_truncated(&lower, flag, body_bound).unwrap();
            let upper_exact = upper.exact_body().unwrap();
            let inner_ok = middle_body.inner_body.is_empty()
                || lower_body.inner_body.is_empty()
                || middle_body.inner_body.contains_polytope(&lower_body.inner_body);
            let outer_ok = middle_body.inner_body.is_empty()
                || upper_exact.contains_polytope(&middle_body.inner_body);
            if !(inner_ok && outer_ok) {
                body_sandwich_bad += 1;
            }
        }
        out.push(row(
            &format!("bodies/semigroup-sandwich[{name}]"),
            semi_sandwich_bad == 0,
            format!("slice sandwich over {stage_bound} stages, {semi_sandwich_bad} violations"),
        ));
        out.push(row(
            &format!("bodies/body-sandwich[{name}]"),
            body_sandwich_bad == 0,
            format!("inner(lower) ⊆ inner(D) ⊆ exact(upper), {body_sandwich_bad} violations"),
        ));

        if d.is_big().unwrap() {
            let approx = okounkov_truncated(&series, flag, degree_bound).unwrap();
            if let Some(exact) = &approx.exact_body {
                let limit = crate::body::scaled_volume(exact)
                    / rat_int((1..=approx.ambient_dim as i64).product());
                out.push(row(
                    &format!("bodies/volume-gap-decay[{name}]"),
                    volume_gaps_decay(&approx.volume_sequence, approx.ambient_dim, &limit),
                    format!("|count/m^d - vol| nonincreasing to degree {degree_bound}"),
                ));
            }
            for t in [2usize, 3, 5] {
                let rep = homogeneity_check(&series, flag, t, degree_bound.min(6)).unwrap();
                out.push(row(
                    &format!("bodies/homogeneity[{name}, t={t}]"),
                    rep.exact_equal != Some(false),
                    match rep.exact_equal {
                        Some(true) => "t-fold body equals t * body exactly".to_string(),
                        Some(false) => "exact homogeneity failed".to_string(),
                        None => format!(
                            "no exact body; inner gap {}",
                            rep.inner_gap.map(|g| fraction_string(&g)).unwrap_or_else(|| "n/a".into())
                        ),
                    },
                ));
            }
        }

        for (flat_name, flat) in &instance.flats {
            let Ok(ample) = instance.ample(None) else { continue };
            if !d.is_big().unwrap() {
                continue;
            }
            match crate::body::restricted_series(d, flat, ample, instance.params.bplus_degree) {
                Err(e) => out.push(info_row(
                    &format!("bodies/restricted[{name}|{flat_name}]"),
                    true,
                    format!("skipped: {e}"),
                )),
                Ok(restricted) => {
                    let rflag = Flag::standard(d.frame().dim())
                        .restriction_to(flat)
                        .unwrap();
                    let mut bad = 0usize;
                    for m in 1..=degree_bound.min(10) {
                        let slice = semigroup_slice(&restricted, m, &rflag).unwrap();
                        if slice.len() != restricted.space(m).unwrap().dim() {
                            bad += 1;
                        }
                    }
                    out.push(row(
                        &format!("bodies/restricted-slice-count[{name}|{flat_name}]"),
                        bad == 0,
                        format!("#restricted slice = dim image, {bad} violations"),
                    ));
                }
            }
        }
    }
    out
}

/// Global suites over the first big pair of divisors: support projection,
/// fiber agreement, lattice fullness, interior openness, convergence and
/// continuity monotonicity, log-concavity and the inner-approximation
/// witness.
pub fn suite_global(instance: &Instance, seed: u64) -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let flag = instance.flag(None).unwrap();
    let names: Vec<&String> = instance.divisors.keys().collect();
    let Some(first_big) = names
        .iter()
        .find(|n| instance.divisors[**n].is_big().unwrap())
    else {
        out.push(info_row("global/skipped", true, "no big divisor declared".into()));
        return out;
    };
    let d = &instance.divisors[*first_big];
    let e_name = names
        .iter()
        .find(|n| *n != first_big)
        .copied()
        .unwrap_or(first_big);
    let e = &instance.divisors[e_name];

    let amax = instance.params.amax.clamp(1, 3);
    let grid_degree = instance.params.grid_degree.clamp(1, 4);
    let (semigroup, cone) = build_global(d, e, flag, amax, grid_degree).unwrap();

    let support_ok = semigroup.support_heights().iter().all(|(h1, h2)| {
        if *h1 == 0 && *h2 == 0 {
            return true;
        }
        cone.support
            .contains(&RatVec::from_ints(&[*h1, *h2]))
            .unwrap()
    });
    out.push(row(
        &format!("global/support-projection[{first_big},{e_name}]"),
        support_ok,
        format!("{} grid heights all inside the projected support", semigroup.support_heights().len()),
    ));

    let index = lattice_index(
        &semigroup
            .graded_vectors()
            .into_iter()
            .filter(|v| v.iter().any(|&c| c != 0))
            .collect::<Vec<_>>(),
    );
    out.push(row(
        &format!("global/lattice-fullness[{first_big},{e_name}]"),
        index.is_one(),
        format!("global points have index {index} in Z^(d+2)"),
    ));

    let samples: Vec<(Rat, Rat)> = vec![
        (rat_int(1), rat_int(0)),
        (rat_int(1), rat_int(1)),
        (rat_int(2), rat_int(1)),
        (rat_int(1), rat_int(2)),
        (rat_int(1), rat_int(-1)),
    ];
    let mut fiber_bad = 0usize;
    let mut fiber_checked = 0usize;
    let mut interior_bad = 0usize;
    for a in &samples {
        let rep = fiber_check(d, e, a.clone(), flag, &cone, grid_degree).unwrap();
        if !rep.skipped() {
            fiber_checked += 1;
            if !rep.passed_exactly() {
                match &rep.status {
                    crate::global::FiberStatus::Checked { exact_equal: None, gap: Some(g) }
                        if g.is_zero() => {}
                    _ => fiber_bad += 1,
                }
            }
            // Big combination implies strict interior of the support.
            if !interior_contains(&cone.support, &[a.0.clone(), a.1.clone()]).unwrap() {
                interior_bad += 1;
            }
        }
    }
    out.push(row(
        &format!("global/fiber-agreement[{first_big},{e_name}]"),
        fiber_bad == 0,
        format!("{fiber_checked} big directions checked, {fiber_bad} mismatches"),
    ));
    out.push(row(
        &format!("global/interior-openness[{first_big},{e_name}]"),
        interior_bad == 0,
        format!("big directions lie in the open support, {interior_bad} violations"),
    ));

    for (name, div) in &instance.divisors {
        if div.limit_polytope().unwrap().is_empty() {
            continue;
        }
        let table = model_convergence(div, instance.params.stage_bound.min(10)).unwrap();
        out.push(row(
            &format!("global/convergence-monotone[{name}]"),
            table.gaps_monotone && table.volumes_monotone,
            format!(
                "gaps and volume errors nonincreasing over {} stages ({})",
                table.rows.len(),
                table.metric_note
            ),
        ));
    }

    let ts: Vec<Rat> = (1..=instance.params.t_steps.min(10))
        .map(|n| rat(1, 1i64 << n))
        .collect();
    let table = continuity_experiment(d, d.boundary().divisor(), &ts).unwrap();
    out.push(row(
        &format!("global/continuity-monotone[{first_big}]"),
        table.gaps_monotone && table.volumes_converge,
        format!("perturbation by the boundary divisor over {} steps", table.rows.len()),
    ));

    let mut bm_bad = 0usize;
    for _ in 0..10 {
        let rand_effective = |rng: &mut StdRng| {
            let coeffs: Vec<Rat> = (0..instance.frame.num_rays())
                .map(|i| {
                    if instance.frame.is_boundary(i) {
                        rat(rng.gen_range(1..=6), rng.gen_range(1..=2))
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            ModelDivisor::new(&instance.frame, coeffs).unwrap()
        };
        let p = rand_effective(&mut rng).polytope(&instance.frame).unwrap();
        let q = rand_effective(&mut rng).polytope(&instance.frame).unwrap();
        if p.is_empty() || q.is_empty() {
            continue;
        }
        let check = log_concavity_check(&p, &q).unwrap();
        if !check.holds {
            bm_bad += 1;
        }
    }
    out.push(row(
        "global/log-concavity",
        bm_bad == 0,
        format!("effective toric pairs on the frame, {bm_bad} violations"),
    ));

    if d.is_big().unwrap() {
        let body = d.limit_polytope().unwrap();
        let w = fujita_inner_body(&body, &rat(1, 10)).unwrap();
        out.push(row(
            &format!("global/inner-approximation[{first_big}]"),
            w.inner_volume >= w.target,
            format!(
                "shrink {} gives volume {} >= {}",
                fraction_string(&w.shrink),
                fraction_string(&w.inner_volume),
                fraction_string(&w.target)
            ),
        ));
    }
    out
}

/// All suites for an instance with seeded randomness.
pub fn suite_all(instance: &Instance, seed: u64, samples: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(suite_geometry(seed, samples));
    out.extend(suite_series(seed.wrapping_add(1), samples));
    out.extend(suite_adelic(instance, seed.wrapping_add(2)));
    out.extend(suite_bodies(instance, seed.wrapping_add(3)));
    out.extend(suite_global(instance, seed.wrapping_add(4)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_suites_pass_with_fixed_seed() {
        for check in suite_geometry(7, 12) {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
        for check in suite_series(11, 20) {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }
}
