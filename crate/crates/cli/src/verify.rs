//! Claim checks for the X(k,d) family and the full verification sweep.

use std::time::Instant;

use num_bigint::BigInt;
use rand::prelude::*;

use poset_forge::color::ColorSet;
use poset_forge::complex::CellComplex;
use poset_forge::constructions::{
    build_g, expected_betti_entries, expected_h, expected_hprime, expected_link_h,
    link_shelling_certificate, links_match_graph_restrictions, minimal_hprime, synthesize, xkd,
};
use poset_forge::homology::{
    betti_via_order_complex, boundary_matrices, is_buchsbaum, reduced_betti,
};
use poset_forge::invariants::{
    binomial_identities, euler_characteristic, f_from_h, f_vector, h_from_f, h_prime, ns_check,
    ridge_profile, short_simplicial_check,
};
use poset_forge::shelling::{
    h_from_shelling, is_cw_shelling, separating_family_min, separating_family_min_brute,
};
use poset_forge::{Color, FieldSpec};

use crate::report::VerificationReport;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub fields: Vec<FieldSpec>,
    pub budget: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            fields: vec![FieldSpec::Rationals, FieldSpec::Prime(2)],
            budget: None,
        }
    }
}

/// Verify the three advertised properties of `X(k,d)`: the Betti/h' profile,
/// shellability of every atom link, and the atom-link h-vectors.
pub fn verify_xkd(k: u8, d: Color, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(format!("xkd(k={k},d={d})"));
    let p = match xkd(k, d) {
        Ok(p) => p,
        Err(e) => {
            report.check("construction", false, e.to_string());
            report.duration = start.elapsed();
            return report;
        }
    };
    check_profile(&mut report, &p, k, d, opts);
    check_link_shellings(&mut report, &p, k, d, false);
    check_link_h_vectors(&mut report, &p, k, d);
    report.duration = start.elapsed();
    report
}

/// Betti numbers and h'-vector over every requested field.
fn check_profile(
    report: &mut VerificationReport,
    p: &CellComplex,
    k: u8,
    d: Color,
    opts: &VerifyOptions,
) {
    let mut ok = true;
    let mut witness = String::new();
    for &field in &opts.fields {
        let betti = match reduced_betti(p, field) {
            Ok(b) => b,
            Err(e) => {
                report.check("betti-hprime-profile", false, e.to_string());
                return;
            }
        };
        let betti_ok = betti.entries() == expected_betti_entries(k, d);
        let hp = h_from_f(&f_vector(p))
            .ok()
            .and_then(|h| h_prime(&h, &betti).ok());
        let hp_ok = hp.as_ref() == Some(&expected_hprime(k, d));
        ok &= betti_ok && hp_ok;
        if witness.is_empty() {
            witness = format!(
                "betti={betti};hprime={}",
                hp.map(|v| v.to_string()).unwrap_or_else(|| "?".into())
            );
        }
    }
    report.check("betti-hprime-profile", ok, witness);
}

/// Every atom link is CW-shellable; for `k ≥ 1` the explicit link order is a
/// graphical shelling with all restriction sets of size `k`, and (when
/// `cross_check` is set) the fast minimal-separator path agrees with the
/// brute-force enumeration and the certificate histogram reproduces the link
/// h-vector.
fn check_link_shellings(
    report: &mut VerificationReport,
    p: &CellComplex,
    k: u8,
    d: Color,
    cross_check: bool,
) {
    let mut ok = true;
    let mut note = String::new();
    if k == 0 {
        for atom in p.atoms() {
            let link = p.link(atom).expect("atom in complex");
            let order: Vec<String> = link.facet_names().to_vec();
            match is_cw_shelling(&link, &order) {
                Ok(true) => {}
                _ => {
                    ok = false;
                    note = format!("cw-shelling-failed-at-color={}", atom.colors());
                }
            }
        }
    } else {
        let g = build_g(k, d).expect("parameters in range");
        for c in 1..=d {
            let cert = match link_shelling_certificate(k, d, c) {
                Ok(Some(cert)) => cert,
                _ => {
                    ok = false;
                    note = format!("no-graphical-shelling-at-color={c}");
                    continue;
                }
            };
            if cert.restrictions[0] != ColorSet::EMPTY
                || cert.restrictions[1..].iter().any(|r| r.len() != k)
            {
                ok = false;
                note = format!("restriction-sizes-wrong-at-color={c}");
            }
            let atom = p
                .atoms()
                .into_iter()
                .find(|a| a.colors() == ColorSet::singleton(c))
                .expect("one atom per color");
            let link = p.link(atom).expect("atom in complex");
            match is_cw_shelling(&link, &cert.order) {
                Ok(true) => {}
                _ => {
                    ok = false;
                    note = format!("cw-shelling-failed-at-color={c}");
                }
            }
            if cross_check {
                let universe = ColorSet::full(d).without(c);
                let restricted = g.restrict(universe).expect("colors in range");
                let idx: Vec<usize> = cert
                    .order
                    .iter()
                    .map(|n| restricted.vertex_index(n).expect("order names vertices"))
                    .collect();
                for i in 1..=idx.len() {
                    let fast = separating_family_min(&restricted, &idx, i).expect("valid order");
                    let brute =
                        separating_family_min_brute(&restricted, &idx, i).expect("valid order");
                    if fast != brute {
                        ok = false;
                        note = format!("separator-paths-disagree-at-color={c}-step={i}");
                    }
                }
                let h_cert = h_from_shelling(&cert);
                let h_link = h_from_f(&f_vector(&link)).expect("link f-vector");
                if h_cert != h_link {
                    ok = false;
                    note = format!("certificate-h-differs-at-color={c}");
                }
            }
        }
    }
    report.check("atom-links-shellable", ok, note);
}

/// h-vectors of all atom links match the advertised profile.
fn check_link_h_vectors(report: &mut VerificationReport, p: &CellComplex, k: u8, d: Color) {
    let want = expected_link_h(k, d);
    let mut ok = true;
    let mut witness = String::new();
    for atom in p.atoms() {
        let link = p.link(atom).expect("atom in complex");
        match h_from_f(&f_vector(&link)) {
            Ok(h) => {
                if witness.is_empty() {
                    witness = format!("link-h={h}");
                }
                ok &= h == want;
            }
            Err(e) => {
                ok = false;
                witness = e.to_string();
            }
        }
    }
    report.check("atom-link-h-vectors", ok, witness);
}

/// The full verification matrix for one `(k,d)` cell.
pub fn sweep_cell(k: u8, d: Color, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(format!("xkd(k={k},d={d})"));
    let p = match xkd(k, d) {
        Ok(p) => p,
        Err(e) => {
            report.check("construction", false, e.to_string());
            report.duration = start.elapsed();
            return report;
        }
    };
    report.check("validate", p.validate().is_ok(), "");

    check_profile(&mut report, &p, k, d, opts);
    check_link_shellings(&mut report, &p, k, d, true);
    check_link_h_vectors(&mut report, &p, k, d);

    // forced global h-vector
    let f = f_vector(&p);
    let h = h_from_f(&f).expect("f-vector of a complex");
    report.check("h-profile", h == expected_h(k, d), format!("h={h}"));

    // vertex-link relation residuals
    match short_simplicial_check(&p) {
        Ok(rep) => report.check("short-simplicial", rep.passed(), ""),
        Err(e) => report.check("short-simplicial", false, e.to_string()),
    }

    if d <= 6 {
        let mut ok = true;
        for &field in &opts.fields {
            ok &= is_buchsbaum(&p, field).unwrap_or(false);
        }
        report.check("buchsbaum", ok, "");
    }

    if d <= 5 {
        let mut ok = true;
        let mut note = String::new();
        for &field in &opts.fields {
            let direct = reduced_betti(&p, field);
            let oracle = betti_via_order_complex(&p, field, opts.budget);
            match (direct, oracle) {
                (Ok(a), Ok(b)) => {
                    if a != b {
                        ok = false;
                        note = format!("cellular={a};oracle={b}");
                    }
                }
                (_, Err(e)) | (Err(e), _) => {
                    ok = false;
                    note = e.to_string();
                }
            }
        }
        report.check("order-complex-oracle", ok, note);
    }

    // ridge multiplicities
    let prof = ridge_profile(&p);
    let mut ridge_ok = prof.conservation_ok;
    if prof.max_multiplicity <= 2 {
        ridge_ok &= prof.boundary_identity(&f) == Some(true);
    }
    if k == 1 || k == d - 1 {
        ridge_ok &= prof.max_multiplicity <= 2;
    }
    if matches!((k, d), (3, 5) | (3, 6) | (4, 7)) {
        ridge_ok &= prof.max_multiplicity >= 3;
    }
    report.check(
        "ridge-profile",
        ridge_ok,
        format!(
            "max={};boundary={}",
            prof.max_multiplicity, prof.boundary_count
        ),
    );

    // structural identities: boundary square, Euler relations, transform round-trip
    let mut structural_ok = boundary_matrices(&p).is_ok();
    let chi = euler_characteristic(&f);
    let signed_chi = if (d - 1) % 2 == 0 {
        chi.clone()
    } else {
        -chi.clone()
    };
    structural_ok &= h.entries()[d as usize] == signed_chi;
    structural_ok &= f_from_h(&h).map(|ff| ff == f).unwrap_or(false);
    for &field in &opts.fields {
        if let Ok(betti) = reduced_betti(&p, field) {
            structural_ok &= betti.euler_characteristic() == chi;
            match h_prime(&h, &betti) {
                Ok(hp) => {
                    structural_ok &=
                        hp.entries()[d as usize] == BigInt::from(betti.betti(d as i32 - 1));
                    structural_ok &= ns_check(&hp, &betti).map(|r| r.passed()).unwrap_or(false);
                }
                Err(_) => structural_ok = false,
            }
        } else {
            structural_ok = false;
        }
    }
    report.check("structural-identities", structural_ok, format!("chi={chi}"));

    if k >= 1 {
        let g = build_g(k, d).expect("parameters in range");
        let ok = links_match_graph_restrictions(&g, &p).unwrap_or(false);
        report.check("links-vs-restrictions", ok, "");
    }

    report.duration = start.elapsed();
    report
}

/// Global claims that are not tied to a single `(k,d)` cell: the binomial
/// identities, gluing additivity, the glued-complex oracle comparison, and
/// the synthesizer batch. Randomized draws are seeded for reproducibility.
pub fn sweep_global(max_d: Color, seed: u64, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("global");
    let mut rng = StdRng::seed_from_u64(seed);

    let mut binom_ok = true;
    for d in 1..=20u64 {
        for k in 0..d {
            binom_ok &= binomial_identities(d, k)
                .map(|r| r.passed())
                .unwrap_or(false);
        }
    }
    report.check("binomial-identities", binom_ok, "d<=20");

    // gluing additivity on random pairs
    let glue_max = max_d.min(5);
    let mut glue_ok = true;
    for _ in 0..20 {
        let d = rng.gen_range(2..=glue_max);
        let (p1, p2, q) = match random_glued_pair(&mut rng, d) {
            Some(t) => t,
            None => {
                glue_ok = false;
                break;
            }
        };
        for &field in &opts.fields {
            let (b1, b2, bq) = (
                reduced_betti(&p1, field),
                reduced_betti(&p2, field),
                reduced_betti(&q, field),
            );
            match (b1, b2, bq) {
                (Ok(b1), Ok(b2), Ok(bq)) => {
                    let sums: Vec<u64> = b1
                        .entries()
                        .iter()
                        .zip(b2.entries())
                        .map(|(x, y)| x + y)
                        .collect();
                    glue_ok &= bq.entries() == sums;
                    if field == FieldSpec::Rationals {
                        glue_ok &= hprime_additive(&p1, &p2, &q, &b1, &b2, &bq);
                    }
                }
                _ => glue_ok = false,
            }
        }
    }
    report.check("glue-additivity", glue_ok, "pairs=20");

    // oracle equivalence on random glued complexes
    let oracle_max = max_d.min(4);
    let mut oracle_ok = true;
    for _ in 0..20 {
        let d = rng.gen_range(2..=oracle_max);
        let q = match random_glued_pair(&mut rng, d) {
            Some((_, _, q)) => q,
            None => {
                oracle_ok = false;
                break;
            }
        };
        for &field in &opts.fields {
            let direct = reduced_betti(&q, field);
            let oracle = betti_via_order_complex(&q, field, opts.budget);
            match (direct, oracle) {
                (Ok(a), Ok(b)) => oracle_ok &= a == b,
                _ => oracle_ok = false,
            }
        }
    }
    report.check("glued-oracle-equivalence", oracle_ok, "pairs=20");

    // synthesizer batch: random Betti targets realized with minimal h'
    let synth_max = max_d.min(4);
    let mut synth_ok = true;
    for _ in 0..10 {
        let d = rng.gen_range(2..=synth_max);
        let mut betti = vec![0u64; d as usize + 1];
        for _ in 0..rng.gen_range(0..=4u32) {
            let i = rng.gen_range(1..=d as usize);
            betti[i] += 1;
        }
        let q = match synthesize(d, &betti) {
            Ok(q) => q,
            Err(_) => {
                synth_ok = false;
                continue;
            }
        };
        for &field in &opts.fields {
            synth_ok &= is_buchsbaum(&q, field).unwrap_or(false);
        }
        let got = reduced_betti(&q, FieldSpec::Rationals).expect("betti of synthesized complex");
        synth_ok &= got.entries() == betti;
        let hp = h_from_f(&f_vector(&q))
            .ok()
            .and_then(|h| h_prime(&h, &got).ok());
        synth_ok &= hp.as_ref() == minimal_hprime(d, &betti).ok().as_ref();
    }
    report.check("synthesizer-minimal", synth_ok, "targets=10");

    report.duration = start.elapsed();
    report
}

fn hprime_additive(
    p1: &CellComplex,
    p2: &CellComplex,
    q: &CellComplex,
    b1: &poset_forge::invariants::BettiVector,
    b2: &poset_forge::invariants::BettiVector,
    bq: &poset_forge::invariants::BettiVector,
) -> bool {
    let hp = |p: &CellComplex, b| {
        h_from_f(&f_vector(p))
            .ok()
            .and_then(|h| h_prime(&h, b).ok())
    };
    match (hp(p1, b1), hp(p2, b2), hp(q, bq)) {
        (Some(h1), Some(h2), Some(hq)) => {
            let d = q.d() as usize;
            (1..=d).all(|j| hq.entries()[j] == &h1.entries()[j] + &h2.entries()[j])
                && hq.entries()[0] == BigInt::from(1)
        }
        _ => false,
    }
}

/// A random pair `(P1, P2)` of family members of rank `d` with a random facet
/// of each glued, facet names prefixed to stay unique.
pub fn random_glued_pair(
    rng: &mut StdRng,
    d: Color,
) -> Option<(CellComplex, CellComplex, CellComplex)> {
    let k1 = rng.gen_range(0..d);
    let k2 = rng.gen_range(0..d);
    let p1 = xkd(k1, d).ok()?.prefix_facets("a.");
    let p2 = xkd(k2, d).ok()?.prefix_facets("b.");
    let f1 = p1.facet_names()[rng.gen_range(0..p1.facet_count())].clone();
    let f2 = p2.facet_names()[rng.gen_range(0..p2.facet_count())].clone();
    let q = p1.glue_facets(&f1, &p2, &f2).ok()?;
    Some((p1, p2, q))
}

/// Reports for every cell `k ≤ d-1 ≤ max_d-1` plus the global claims.
pub fn sweep_reports(max_d: Color, seed: u64, opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for d in 2..=max_d {
        for k in 0..d {
            out.push(sweep_cell(k, d, opts));
        }
    }
    out.push(sweep_global(max_d, seed, opts));
    out
}
