use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qmatroid::amplitude::{
    deletion_contraction_check, fa_closed_form, fourier_duality_sides, vacuum_fa, Propagator, Space,
};
use qmatroid::identities::{
    graph_identity_checks, kung_identity, kung_specializations, reiner_convolution, theorem2_reports, zeta_forms,
};
use qmatroid::kontsevich::{
    brute_force_zero_count, chevalley_zero_count, nowhere_zero_kernel_count, theorem1, u24_reduced_check,
    weighted_laplacian, AlphaVector, GaussConvention, Theorem1Options,
};
use qmatroid::matroid::{char_poly, tutte_poly};
use qmatroid::report::CheckRecord;
use qmatroid::{Budget, Error, Field, FieldElement, FqMatrix, Matroid, Result};

use crate::input::Input;

pub struct Ctx {
    pub budget: Budget,
    pub options: Theorem1Options,
    pub seed: u64,
    pub samples: usize,
    pub propagator: Propagator,
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

pub fn theorem1_suite(input: &Input, fields: &[Field], ctx: &Ctx) -> Result<Vec<CheckRecord>> {
    let name = input.name();
    let mut out = Vec::new();
    for field in fields {
        let q = field.order() as i64;
        let m = input.represent(field)?;
        let t = Instant::now();
        let summary = theorem1(&m, ctx.options)?;
        let elapsed = ms(t);
        let expected = char_poly(&m.dual(), ctx.budget)?.eval_int(&BigInt::from(q));
        let census: Vec<String> = summary
            .rank_histogram()
            .iter()
            .map(|(r, c)| format!("{r}:{c}"))
            .collect();
        let mut rec = CheckRecord::new("theorem1", "alpha-sum", &name, Some(q), &summary.total, &expected)
            .elapsed(elapsed)
            .note(format!("r* counts {}", census.join(" ")));
        if !rec.pass {
            let other = match ctx.options.convention {
                GaussConvention::Characteristic => GaussConvention::FieldOrder,
                GaussConvention::FieldOrder => GaussConvention::Characteristic,
            };
            let alt = summary.total_with(other)?;
            rec.note = format!("{}; suspect g(q,n); {other:?} weight gives {alt}", rec.note);
        }
        out.push(rec);
        let kernel = nowhere_zero_kernel_count(&m, ctx.budget)?;
        out.push(CheckRecord::new("theorem1", "nowhere-zero-kernel", &name, Some(q), kernel, &expected));
        if name == "U24" {
            let r = u24_reduced_check(field, ctx.budget)?;
            out.push(
                CheckRecord::new("theorem1", "reduced-u24", &name, Some(q), &r.lhs, &r.rhs)
                    .note(format!("sum of eta = {}", r.eta_sum)),
            );
        }
    }
    Ok(out)
}

pub fn theorem2_suite(input: &Input, qs: &[i64], ctx: &Ctx) -> Result<Vec<CheckRecord>> {
    let name = input.name();
    let m = input.oracle(ctx.budget)?;
    let mut out = Vec::new();
    for report in theorem2_reports(&m, &name, qs, ctx.budget)? {
        let check = report.identity.trim_start_matches("theorem2-").to_string();
        for p in &report.points {
            out.push(CheckRecord::new("theorem2", &check, &name, Some(p.q), &p.lhs, &p.rhs));
        }
        out.push(
            CheckRecord::new(
                "theorem2",
                &format!("{check}-certificate"),
                &name,
                None,
                report.points.len(),
                format!(">{}", report.degree_bound),
            )
                .verdict(report.pass)
                .note(format!(
                    "{} points against degree bound {}",
                    report.points.len(),
                    report.degree_bound
                )),
        );
    }
    for &q in qs {
        let (a, b) = zeta_forms(&m, q, ctx.budget)?;
        out.push(CheckRecord::new("theorem2", "zeta-restriction", &name, Some(q), &a.lhs, &a.rhs));
        out.push(CheckRecord::new("theorem2", "zeta-contraction", &name, Some(q), &b.lhs, &b.rhs));
    }
    if let Some(g) = input.graph() {
        for &q in qs {
            let r = graph_identity_checks(&g, q, ctx.budget)?;
            for (check, s) in [
                ("graph-flow-from-colorings", &r.flow_from_colorings),
                ("graph-colorings-from-flows", &r.colorings_from_flows),
                ("graph-flow-from-contractions", &r.flow_from_contractions),
            ] {
                out.push(CheckRecord::new("theorem2", check, &name, Some(q), &s.lhs, &s.rhs));
            }
        }
    }
    Ok(out)
}

pub fn fourier_suite(input: &Input, fields: &[Field], ctx: &Ctx) -> Result<Vec<CheckRecord>> {
    let name = input.name();
    let g = input
        .graph()
        .ok_or_else(|| Error::UnknownLabel(format!("{name} is not a graph")))?;
    let p = &ctx.propagator;
    let mut out = Vec::new();
    for field in fields {
        let q = field.order() as i64;
        let t = Instant::now();
        let (lhs, rhs) = fourier_duality_sides(&g, field, p, ctx.budget)?;
        out.push(
            CheckRecord::new("fourier", "duality", &name, Some(q), &lhs, &rhs)
                .elapsed(ms(t))
                .note(format!("a={} b={}", p.a, p.b)),
        );
        for e in 0..g.edge_count() {
            if g.is_loop(e) || g.is_isthmus(e) {
                continue;
            }
            for space in [Space::Coordinate, Space::Momentum] {
                let ok = deletion_contraction_check(&g, e, field, p, space, ctx.budget)?;
                let check = format!("deletion-contraction-{}", space_name(space));
                out.push(
                    CheckRecord::new("fourier", &check, &name, Some(q), ok, true).note(format!("edge {}", g.edges()[e].id)),
                );
            }
        }
        if !p.a.is_zero() && !p.b.is_zero() {
            for space in [Space::Coordinate, Space::Momentum] {
                let closed = fa_closed_form(&g, field.order(), p, space, ctx.budget)?;
                let sum = vacuum_fa(&g, field, p, space, ctx.budget)?;
                let check = format!("closed-form-{}", space_name(space));
                out.push(CheckRecord::new("fourier", &check, &name, Some(q), &sum, &closed));
            }
        }
        let norm = Propagator::norm();
        let colorings = vacuum_fa(&g, field, &norm, Space::Coordinate, ctx.budget)?;
        let chromatic = g.chromatic_poly(ctx.budget)?.eval(&rat(q));
        out.push(CheckRecord::new("fourier", "chromatic", &name, Some(q), &colorings, &chromatic));
        let flows = vacuum_fa(&g, field, &norm, Space::Momentum, ctx.budget)?;
        let flow = g.flow_poly(ctx.budget)?.eval(&rat(q));
        out.push(CheckRecord::new("fourier", "flow", &name, Some(q), &flows, &flow));
    }
    Ok(out)
}

fn space_name(s: Space) -> &'static str {
    match s {
        Space::Coordinate => "coordinate",
        Space::Momentum => "momentum",
    }
}

fn random_element(field: &Field, rng: &mut StdRng) -> FieldElement {
    let p = field.characteristic() as i64;
    let coeffs: Vec<i64> = (0..field.degree()).map(|_| rng.gen_range(0..p)).collect();
    field.from_coeffs(&coeffs).expect("coordinates within degree")
}

fn random_symmetric(field: &Field, n: usize, rng: &mut StdRng) -> Result<FqMatrix> {
    let mut m = FqMatrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let v = random_element(field, rng);
            m.set(i, j, &v)?;
            m.set(j, i, &v)?;
        }
    }
    Ok(m)
}

pub fn chevalley_suite(input: Option<&Input>, fields: &[Field], ctx: &Ctx) -> Result<Vec<CheckRecord>> {
    let mut rng = StdRng::seed_from_u64(ctx.seed);
    let mut out = Vec::new();
    for field in fields {
        let q = field.order() as i64;
        for n in 1..=4 {
            let mut agree = 0;
            for _ in 0..ctx.samples {
                let b = random_symmetric(field, n, &mut rng)?;
                let closed = chevalley_zero_count(&b)?;
                let brute = brute_force_zero_count(&b, ctx.budget)?;
                agree += usize::from(closed == BigInt::from(brute));
            }
            out.push(
                CheckRecord::new("chevalley", &format!("random-n{n}"), "random", Some(q), agree, ctx.samples)
                    .note(format!("seed {}", ctx.seed)),
            );
        }
        if let Some(input) = input {
            let m = input.represent(field)?;
            let mut agree = 0;
            for _ in 0..ctx.samples {
                let alpha: Vec<FieldElement> = (0..m.len())
                    .map(|_| loop {
                        let v = random_element(field, &mut rng);
                        if !v.is_zero() {
                            break v;
                        }
                    })
                    .collect();
                let l = weighted_laplacian(&m, &AlphaVector::new(alpha)?)?;
                let closed = chevalley_zero_count(&l)?;
                agree += usize::from(closed == BigInt::from(brute_force_zero_count(&l, ctx.budget)?));
            }
            out.push(CheckRecord::new("chevalley", "laplacian", &input.name(), Some(q), agree, ctx.samples));
        }
    }
    Ok(out)
}

fn random_rational(rng: &mut StdRng) -> BigRational {
    let num = loop {
        let v: i64 = rng.gen_range(-9..=9);
        if v != 0 {
            break v;
        }
    };
    BigRational::new(num.into(), rng.gen_range(1..=7i64).into())
}

pub fn convolution_suite(input: &Input, qs: &[i64], ctx: &Ctx) -> Result<Vec<CheckRecord>> {
    let name = input.name();
    let m = input.oracle(ctx.budget)?;
    let mut out = Vec::new();
    let tutte = tutte_poly(&m, ctx.budget)?;
    let conv = reiner_convolution(&m, ctx.budget)?;
    out.push(CheckRecord::new(
        "convolution",
        "tutte",
        &name,
        None,
        tutte.display_with("x", "y"),
        conv.display_with("x", "y"),
    ));
    let mut rng = StdRng::seed_from_u64(ctx.seed);
    for _ in 0..ctx.samples {
        let pt: Vec<BigRational> = (0..4).map(|_| random_rational(&mut rng)).collect();
        let s = kung_identity(&m, &pt[0], &pt[1], &pt[2], &pt[3], ctx.budget)?;
        out.push(
            CheckRecord::new("convolution", "rank-identity", &name, None, &s.lhs, &s.rhs)
                .note(format!("lambda={} xi={} x={} y={}", pt[0], pt[1], pt[2], pt[3])),
        );
    }
    for &q in qs {
        let (r, c) = kung_specializations(&m, q, ctx.budget)?;
        out.push(CheckRecord::new("convolution", "specialize-restriction", &name, Some(q), &r.lhs, &r.rhs));
        out.push(CheckRecord::new("convolution", "specialize-contraction", &name, Some(q), &c.lhs, &c.rhs));
    }
    Ok(out)
}
