//! The report sections, in run order.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::adjudicate::{adjudicate, family_subalgebra, Adjudication};
use super::{Check, Report, RunOptions, Verdict};
use crate::arith::{ConjRule, MultiPoly, Param, Scalar};
use crate::catalog::{compare_up_to_scalar, Catalog, CatalogEntry, Family};
use crate::error::Result;
use crate::frobenius::{
    closure, functional_search, generic_nonexistence, parabolic_by_name, pfaffian, form_from_functional,
    rmatrix_from_functional, Functional,
};
use crate::lie::{
    basis_index, basis_weights, conformal_basis, lorentz_tensor, rank_of, real_generators, verify_o42_relations,
    Element, LieAlgebra, Physical, BASIS_NAMES, DIM, ETA,
};
use crate::morphisms::{
    build_beta, build_star_case_i, build_star_case_ii, commute_check, conj_rules, real_form_eigencheck,
    reality_search, tensor_square_apply, theta, weyl_lifts, AlgebraMap, Reality, WeylLift, STAR4_EPSILONS,
};
use crate::wedge::{adjoint_action_triv, canonical_trivector, cybe_residual, schouten_mixed, BiVector};

struct Sink<'a>(&'a mut Vec<Check>);

impl Sink<'_> {
    fn push(&mut self, id: &str, subject: &str, verdict: Verdict, required: bool, witness: impl Into<String>) {
        self.0.push(Check {
            check_id: id.to_string(),
            subject: subject.to_string(),
            verdict,
            required,
            witness: witness.into(),
        });
    }

    fn claim(&mut self, id: &str, subject: &str, ok: bool, required: bool, witness: impl Into<String>) {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        self.push(id, subject, verdict, required, witness);
    }

    fn info(&mut self, id: &str, subject: &str, witness: impl Into<String>) {
        self.push(id, subject, Verdict::Info, false, witness);
    }
}

type Adjudications = BTreeMap<String, Adjudication>;

/// Runs every section in order.
pub fn run_all(g: &LieAlgebra, catalog: &Catalog, opts: &RunOptions) -> Result<Report> {
    let mut report = Report::new(catalog, opts);
    let mut s = Sink(&mut report.checks);
    algebra(g, &mut s)?;
    conformal(g, &mut s)?;
    let stars = involutions(g, &mut s)?;
    let entries: Vec<&CatalogEntry> = catalog.rmatrices().collect();
    let adj = cybe(g, catalog, &entries, opts, &mut s)?;
    reality(&entries, &adj, &stars, &mut s)?;
    frobenius(g, catalog, &adj, &mut s)?;
    nonexistence(g, &mut s)?;
    let matched = transport(g, &adj, &mut s)?;
    incompatibility(g, &adj, &matched, &mut s)?;
    grading(g, &adj, &mut s)?;
    Ok(report)
}

/// CYBE, repair and reality for one catalog r-matrix.
pub fn check_entry(g: &LieAlgebra, catalog: &Catalog, name: &str, opts: &RunOptions) -> Result<Report> {
    let entry = catalog.get(name)?;
    let mut report = Report::new(catalog, opts);
    let mut s = Sink(&mut report.checks);
    let stars = all_stars(g)?;
    let adj = cybe(g, catalog, &[entry], opts, &mut s)?;
    reality(&[entry], &adj, &stars, &mut s)?;
    Ok(report)
}

fn algebra(g: &LieAlgebra, s: &mut Sink) -> Result<()> {
    let bad = g.jacobi_violations();
    let witness = match bad.first() {
        None => format!("{} basis triples, no violation", g.jacobi_triple_count()),
        Some(&(i, j, k)) => format!("{} violations, first ({}, {}, {})", bad.len(), BASIS_NAMES[i], BASIS_NAMES[j], BASIS_NAMES[k]),
    };
    s.claim("algebra.jacobi", "sl4", bad.is_empty(), true, witness);

    let mut failures = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            let lhs = g.bracket(&g.generator(&format!("e{i}"))?, &g.generator(&format!("em{j}"))?)?;
            let rhs = if i == j { g.generator(&format!("h{j}"))? } else { g.zero() };
            if lhs != rhs {
                failures.push(format!("[e{i}, em{j}] = {lhs}"));
            }
        }
    }
    let witness = if failures.is_empty() { "[e_i, e_-j] = delta_ij h_j for i, j = 1..3".to_string() } else { failures.join("; ") };
    s.claim("algebra.chevalley", "sl4", failures.is_empty(), true, witness);

    let k = g.killing_matrix();
    let (h1, e1, em1) = (0, idx("e1"), idx("em1"));
    s.info("algebra.killing", "sl4", format!("K(h1,h1) = {}, K(e1,em1) = {}", k[h1][h1], k[e1][em1]));
    Ok(())
}

fn idx(name: &str) -> usize {
    basis_index(name).expect("fixed basis name")
}

fn conformal(g: &LieAlgebra, s: &mut Sink) -> Result<()> {
    let basis = conformal_basis(g);
    let elems: Vec<Element> = basis.values().cloned().collect();
    let rank = rank_of(&elems);
    s.claim("conformal.rank", "conformal basis", rank == 15, true, format!("rank {rank} of 15"));

    let residuals = verify_o42_relations(g, &lorentz_tensor(g), &ETA)?;
    let first = residuals
        .first()
        .map(|r| format!("; first [M{}{}, M{}{}] residual {}", r.pq.0, r.pq.1, r.rs.0, r.rs.1, r.residual))
        .unwrap_or_default();
    s.info("conformal.o42_scan", "M_PQ relations", format!("{} of 225 ordered pairs have nonzero residual{first}", residuals.len()));

    let star = build_star_case_i(g)?;
    let gens = real_generators(g);
    let report = real_form_eigencheck(&gens, &star)?;
    let listing = report
        .entries
        .iter()
        .map(|e| format!("{}:{}", e.name, e.theta_eigenvalue.as_ref().map_or("none".into(), ToString::to_string)))
        .collect::<Vec<_>>()
        .join(" ");
    s.claim("conformal.theta_unit", "real generators, star3", report.all_unit, true, format!("theta eigenvalues {listing}"));
    s.claim(
        "conformal.theta_uniform",
        "real generators, star3",
        report.uniform,
        false,
        format!("uniform eigenvalue required; found {listing}"),
    );
    let ladder: Vec<(&str, Element)> =
        basis.iter().map(|(p, x)| (p.name(), x.clone())).filter(|(n, _)| n.contains('+') || n.contains('-')).collect();
    let ladder_report = real_form_eigencheck(&ladder, &star)?;
    let text = ladder_report
        .entries
        .iter()
        .map(|e| match &e.partner {
            Some((n, c)) => format!("{}* = {}*{}", e.name, c, n),
            None => format!("{}* = {}", e.name, e.image),
        })
        .collect::<Vec<_>>()
        .join("; ");
    s.info("conformal.ladder_star", "M+-, L+-", text);
    Ok(())
}

fn all_stars(g: &LieAlgebra) -> Result<Vec<AlgebraMap<'_>>> {
    let mut stars = vec![build_star_case_i(g)?];
    for eps in STAR4_EPSILONS {
        stars.push(build_star_case_ii(g, eps)?);
    }
    Ok(stars)
}

struct NamedLifts<'g> {
    name: &'static str,
    lifts: Vec<WeylLift<'g>>,
}

fn involutions<'g>(g: &'g LieAlgebra, s: &mut Sink) -> Result<Vec<AlgebraMap<'g>>> {
    let stars = all_stars(g)?;
    for star in &stars {
        let inv = star.is_involutive()?;
        s.claim(&format!("involution.{}", star.name()), star.name(), inv, true, "antilinear anti-automorphism, involutive");
        let th = theta(star)?;
        s.claim(
            &format!("involution.theta.{}", star.name()),
            star.name(),
            th.is_involutive()?,
            true,
            "theta = -star is an involutive antilinear automorphism",
        );
    }

    let beta = build_beta(g)?;
    let flip = beta.apply(&g.basis(0))? == g.basis(2) && beta.apply(&g.basis(1))? == g.basis(1);
    s.claim("involution.beta", "beta", flip && beta.is_involutive()?, true, "automorphism, involutive, h1 <-> h3, h2 fixed");
    let e4 = beta.apply(&g.basis(idx("e4")))?;
    let printed = e4 == g.basis(idx("e5"));
    s.claim(
        "involution.beta_printed",
        "beta",
        printed,
        false,
        format!("printed beta(e4) = e5; with beta(e1) = e3, beta(e2) = e2 the automorphism property forces beta(e4) = [e3, e2] = {e4}"),
    );

    let words: [(&'static str, Vec<usize>); 4] =
        [("sigma1", vec![1]), ("sigma2", vec![2]), ("sigma3", vec![3]), ("sigma13", vec![1, 3])];
    let mut maps: Vec<NamedLifts<'g>> = Vec::new();
    for (name, word) in words {
        let lifts = weyl_lifts(g, &word)?;
        let first = lifts.first().map(|l| format!("{:?}", l.signs)).unwrap_or_else(|| "none".into());
        s.claim(
            &format!("weyl.{name}"),
            name,
            !lifts.is_empty(),
            true,
            format!("{} automorphic sign lifts of 64; preferred signs {first}", lifts.len()),
        );
        maps.push(NamedLifts { name, lifts });
    }

    let rules = conj_rules();
    let mut table: BTreeMap<(String, &str), Option<String>> = BTreeMap::new();
    for star in &stars {
        let mut candidates: Vec<(&str, Vec<&AlgebraMap<'g>>)> =
            maps.iter().map(|m| (m.name, m.lifts.iter().map(|l| &l.map).collect())).collect();
        candidates.push(("beta", vec![&beta]));
        for (name, lifts) in candidates {
            let mut found = None;
            let mut witness = Vec::new();
            'search: for rule in &rules {
                for (n, map) in lifts.iter().enumerate() {
                    let out = commute_check(map, star, rule)?;
                    if out.commutes {
                        found = Some(format!("{} (lift {})", rule.label, n + 1));
                        break 'search;
                    }
                    if witness.is_empty() {
                        witness = out.failing.clone();
                    }
                }
            }
            let text = match &found {
                Some(how) => format!("commutes under {how}"),
                None => format!(
                    "no lift commutes under any parameter rule; first lift fails on {}",
                    witness.join(", ")
                ),
            };
            s.info(&format!("commute.{}.{name}", star.name()), star.name(), text);
            table.insert((star.name().to_string(), name), found);
        }
    }
    let commutes_under = |star: &str, map: &str, rule: &str| {
        table.get(&(star.to_string(), map)).and_then(|f| f.as_ref()).is_some_and(|f| rule.is_empty() || f.starts_with(rule))
    };
    let star3 = stars[0].name().to_string();
    let list3 = ["sigma2", "sigma13", "beta"];
    let ok3: Vec<&str> = list3.iter().copied().filter(|m| commutes_under(&star3, m, "")).collect();
    s.claim(
        "commute.star3.expected_list",
        &star3,
        ok3.len() == list3.len(),
        true,
        format!("expected sigma2, sigma1 sigma3, beta (b1* = b3, b2* = b2); commuting: {}", ok3.join(", ")),
    );
    let excluded = ["sigma1", "sigma3"].iter().filter(|m| !commutes_under(&star3, m, "")).count();
    s.info("commute.star3.excluded", &star3, format!("{excluded} of sigma1, sigma3 fail to commute"));
    for star in &stars[1..] {
        let name = star.name().to_string();
        let ok: Vec<&str> = ["sigma2", "beta"].into_iter().filter(|m| commutes_under(&name, m, "")).collect();
        let sigma2_unitary = commutes_under(&name, "sigma2", "unitary") || commutes_under(&name, "sigma2", "real");
        s.claim(
            &format!("commute.{name}.expected_list"),
            &name,
            ok.len() == 2 && sigma2_unitary,
            true,
            format!("expected sigma2, beta (b_i* b_i = 1); commuting: {}", if ok.is_empty() { "none".into() } else { ok.join(", ") }),
        );
    }
    Ok(stars)
}

fn degree_text(res: &crate::wedge::CybeResidual) -> String {
    let mut parts = Vec::new();
    for (p, degs) in &res.per_degree {
        let bad: Vec<String> = degs.iter().filter(|(_, t)| !t.is_zero()).map(|(d, _)| format!("{p}^{d}")).collect();
        let all: Vec<String> = degs.keys().map(|d| format!("{p}^{d}")).collect();
        if bad.is_empty() {
            parts.push(format!("parts {} vanish", all.join(", ")));
        } else {
            parts.push(format!("nonzero parts {}", bad.join(", ")));
        }
    }
    parts.join("; ")
}

fn cybe(
    g: &LieAlgebra,
    catalog: &Catalog,
    entries: &[&CatalogEntry],
    opts: &RunOptions,
    s: &mut Sink,
) -> Result<Adjudications> {
    let results: Vec<Adjudication> =
        entries.par_iter().map(|e| adjudicate(g, catalog, e, &opts.params)).collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (entry, adj) in entries.iter().zip(results) {
        let name = &entry.name;
        let res = &adj.residual;
        let mut witness = if res.is_solution {
            "residual vanishes".to_string()
        } else {
            format!("residual has {} terms", res.residual.len())
        };
        let degrees = degree_text(res);
        if !degrees.is_empty() {
            witness.push_str("; ");
            witness.push_str(&degrees);
        }
        let adjudicated = !res.is_solution && adj.chosen.is_some();
        s.claim(&format!("cybe.{name}"), name, res.is_solution, !adjudicated, witness);
        if !res.is_solution {
            let text = match adj.chosen_repair() {
                Some(r) => {
                    let others: Vec<String> = adj
                        .repairs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| Some(*k) != adj.chosen)
                        .map(|(_, r)| r.describe())
                        .collect();
                    let alt = if others.is_empty() { String::new() } else { format!("; alternatives: {}", others.join(" | ")) };
                    format!(
                        "{} ({}){alt}; repaired form {}",
                        r.describe(),
                        adj.reason.as_deref().unwrap_or(""),
                        r.value
                    )
                }
                None => "no repair within depth 2".into(),
            };
            s.claim(&format!("cybe.{name}.repair"), name, adj.chosen.is_some(), true, text);
        }
        if let Some(v) = adj.value() {
            if !v.params().is_empty() {
                let r = cybe_residual(g, v)?;
                let ok = r.per_degree.values().all(|m| m.values().all(|t| t.is_zero()));
                let form = if res.is_solution { "verbatim" } else { "repaired" };
                s.claim(&format!("cybe.{name}.degrees"), name, ok, true, format!("{form}: {}", degree_text(&r)));
            }
        }
        out.insert(name.clone(), adj);
    }
    let d10: Vec<&Adjudication> = out.values().filter(|a| a.name.starts_with("r10_")).collect();
    if !d10.is_empty() {
        let passing = d10.iter().filter(|a| a.value().is_some()).count();
        s.claim(
            "cybe.d10_count",
            "d=10",
            passing == d10.len() && d10.len() == 10,
            true,
            format!("{passing} of {} d=10 entries pass after adjudication", d10.len()),
        );
    }
    Ok(out)
}

fn value_of<'a>(adj: &'a Adjudications, name: &str) -> Option<&'a BiVector> {
    adj.get(name).and_then(|a| a.value().or(Some(&a.verbatim)))
}

fn reality(entries: &[&CatalogEntry], adj: &Adjudications, stars: &[AlgebraMap<'_>], s: &mut Sink) -> Result<()> {
    let jobs: Vec<(&CatalogEntry, &AlgebraMap<'_>)> =
        entries.iter().flat_map(|e| stars.iter().map(move |st| (*e, st))).collect();
    let verdicts: Vec<_> = jobs
        .par_iter()
        .map(|(e, st)| {
            let r = value_of(adj, &e.name).expect("adjudicated");
            reality_search(r, st)
        })
        .collect::<Result<_>>()?;
    for ((e, st), v) in jobs.iter().zip(verdicts) {
        let expect_real = e.family == Family::D8 && st.name() == "star3";
        let ok = if expect_real { v.verdict != Reality::Neither } else { v.verdict == Reality::Neither };
        let expected = if expect_real { "real or anti-real" } else { "neither" };
        let got = if v.verdict == Reality::Neither {
            "neither".to_string()
        } else {
            format!("{} with {} parameters", v.verdict.name(), v.rule.label)
        };
        s.claim(&format!("reality.{}.{}", e.name, st.name()), &e.name, ok, true, format!("expected {expected}; got {got}"));
    }
    Ok(())
}

fn frobenius(g: &LieAlgebra, catalog: &Catalog, adj: &Adjudications, s: &mut Sink) -> Result<()> {
    let functionals: Vec<&CatalogEntry> = catalog.functionals().collect();
    for f in functionals {
        let sub = family_subalgebra(g, f.family)?;
        let func = Functional::new(f.name.clone(), f.functional().expect("functional").clone());
        let pf = pfaffian(&form_from_functional(g, &func, &sub)?.matrix)?;
        s.claim(
            &format!("frobenius.{}.pfaffian", f.name),
            &f.name,
            !pf.is_zero(),
            true,
            format!("Pf of the form of {func} on {} = {pf}", sub.name),
        );
        if pf.is_zero() {
            continue;
        }
        let derived = rmatrix_from_functional(g, &func, &sub)?;
        let r = derived.rmatrix().unwrap_or_else(|| derived.numerator.clone());
        let partner = f.partner_name().unwrap_or_default();
        let Some(target) = value_of(adj, &partner) else {
            s.info(&format!("frobenius.{}.match", f.name), &f.name, format!("{partner} not in catalog"));
            continue;
        };
        let carrier_ok = r.carrier() == target.carrier();
        let cmp = compare_up_to_scalar(&r, target);
        let mut witness = format!(
            "B^-1 satisfies CYBE; carrier {} vs {partner} {}",
            r.carrier_dim(),
            target.carrier_dim()
        );
        let ok = cmp.matched && cmp.is_plain_scalar() && carrier_ok;
        if ok {
            witness.push_str(&format!("; equals {} * {partner}", cmp.scalar_text().unwrap_or_default()));
            s.claim(&format!("frobenius.{}.match", f.name), &f.name, true, true, witness);
            continue;
        }
        let pool: Vec<usize> = sub.members.iter().copied().filter(|&k| k >= 3).collect();
        let alternatives: Vec<String> = functional_search(g, &sub, &pool)?
            .into_par_iter()
            .map(|cand| -> Result<Option<String>> {
                let d = rmatrix_from_functional(g, &cand, &sub)?;
                Ok(d.rmatrix().filter(|x| compare_up_to_scalar(x, target).is_plain_scalar()).map(|_| cand.name.clone()))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        witness.push_str(&format!("; B^-1 = {r} does not match {partner}"));
        if !alternatives.is_empty() {
            witness.push_str(&format!("; {partner} is reproduced by {}", alternatives.join(" | ")));
        }
        s.claim(&format!("frobenius.{}.match", f.name), &f.name, false, alternatives.is_empty(), witness);
    }

    // d = 8: search the carrier closure of r8_1 inside B+.
    if let Some(r8) = value_of(adj, "r8_1") {
        let carrier: Vec<usize> = r8.carrier().into_iter().collect();
        let sub = closure(g, "carrier(r8_1)", &carrier);
        if sub.is_even() {
            let pool: Vec<usize> = sub.members.iter().copied().filter(|&k| k >= 3).collect();
            let found = functional_search(g, &sub, &pool)?;
            let samples: Vec<Scalar> = [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2), (-1, 2)].iter().map(|&(p, q)| Scalar::ratio(p, q)).collect();
            let mut matches = Vec::new();
            for f in &found {
                let d = rmatrix_from_functional(g, f, &sub)?;
                let Some(r) = d.rmatrix() else { continue };
                for a in &samples {
                    let target = r8.substitute(Param::A, &MultiPoly::constant(a.clone()))?;
                    if compare_up_to_scalar(&r, &target).is_plain_scalar() {
                        matches.push(format!("{} (a = {a})", f.name));
                    }
                }
            }
            s.info(
                "frobenius.d8_search",
                "r8_1",
                format!(
                    "{} of dimension {}: {} nondegenerate 0/1 functionals; reproducing r8_1: {}",
                    sub.name,
                    sub.dim(),
                    found.len(),
                    if matches.is_empty() { "none".into() } else { matches.join(" | ") }
                ),
            );
        } else {
            s.info("frobenius.d8_search", "r8_1", format!("carrier closure has odd dimension {}", sub.dim()));
        }
    }
    Ok(())
}

fn nonexistence(g: &LieAlgebra, s: &mut Sink) -> Result<()> {
    for (name, expect) in [("P2", false), ("P1", true), ("P3", true)] {
        let p = parabolic_by_name(g, name)?;
        let (exists, pf) = generic_nonexistence(g, &p)?;
        let witness = if exists {
            format!("generic Pfaffian on {} (dim {}) is nonzero: {pf}", p.name, p.dim())
        } else {
            format!("generic Pfaffian on {} (dim {}) is identically zero", p.name, p.dim())
        };
        s.claim(&format!("frobenius.generic.{name}"), name, exists == expect, true, witness);
    }
    Ok(())
}

fn images(lifts: &[WeylLift<'_>], r: &BiVector) -> Result<Vec<BiVector>> {
    lifts.par_iter().map(|l| tensor_square_apply(&l.map, r, &ConjRule::real())).collect()
}

fn first_match(images: &[BiVector], target: &BiVector) -> Option<(usize, String)> {
    images.iter().enumerate().find_map(|(n, im)| {
        let c = compare_up_to_scalar(im, target);
        c.matched.then(|| {
            (n, format!("lift {} gives {} * target, parameter map {}", n + 1, c.scalar_text().unwrap_or_default(), c.map_text().unwrap_or_default()))
        })
    })
}

/// Returns the (r1x, r3y) pairs matched by σ₂.
fn transport(g: &LieAlgebra, adj: &Adjudications, s: &mut Sink) -> Result<Vec<(String, String)>> {
    let sigma2 = weyl_lifts(g, &[2])?;
    let sigma13 = weyl_lifts(g, &[1, 3])?;
    let e6 = idx("e6");
    let fixes_e6 = sigma2.iter().all(|l| l.map.image(e6).support().eq([e6]));
    if let (Some(r1), Some(r2)) = (value_of(adj, "r8_1"), value_of(adj, "r8_2")) {
        let im2 = images(&sigma2, r1)?;
        let witness = match first_match(&im2, r2) {
            Some((_, w)) => w,
            None => format!(
                "no match among {} lifts; every lift maps e6 to a multiple of e6: {fixes_e6}; r8_2 contains e6: {}; first image {}",
                sigma2.len(),
                r2.carrier().contains(&e6),
                im2.first().map(ToString::to_string).unwrap_or_default()
            ),
        };
        s.claim("transport.sigma2.r8", "r8_1 -> r8_2", first_match(&im2, r2).is_some(), true, witness);
        let im13 = images(&sigma13, r1)?;
        let m = first_match(&im13, r2);
        let ok = m.is_some();
        s.claim(
            "transport.sigma13.r8",
            "r8_1 -> r8_2",
            ok,
            true,
            m.map(|(_, w)| w).unwrap_or_else(|| format!("no match among {} lifts", sigma13.len())),
        );
    }

    let beta = build_beta(g)?;
    let labels = ["a", "b", "c", "d", "e"];
    let mut matched = Vec::new();
    for x in labels {
        let Some(r3) = value_of(adj, &format!("r10_3{x}")) else { continue };
        let im = images(&sigma2, r3)?;
        let mut hits = Vec::new();
        for y in labels {
            let Some(r1) = value_of(adj, &format!("r10_1{y}")) else { continue };
            if let Some((_, w)) = first_match(&im, r1) {
                hits.push(format!("r10_1{y}: {w}"));
                matched.push((format!("r10_1{y}"), format!("r10_3{x}")));
            }
        }
        let carrier: Vec<&str> = im.first().map(|b| b.carrier().into_iter().map(|k| BASIS_NAMES[k]).collect()).unwrap_or_default();
        let witness = if hits.is_empty() {
            format!("no r10_1y matched by any of {} lifts; image carrier {}", sigma2.len(), carrier.join(" "))
        } else {
            hits.join("; ")
        };
        s.claim(&format!("transport.sigma2.r10_3{x}"), &format!("r10_3{x}"), !hits.is_empty(), true, witness);

        let b_image = tensor_square_apply(&beta, r3, &ConjRule::real())?;
        let b_hits: Vec<String> = labels
            .iter()
            .filter_map(|y| {
                let r1 = value_of(adj, &format!("r10_1{y}"))?;
                let c = compare_up_to_scalar(&b_image, r1);
                c.matched.then(|| format!("r10_1{y} (factor {})", c.scalar_text().unwrap_or_default()))
            })
            .collect();
        s.info(
            &format!("transport.beta.r10_3{x}"),
            &format!("r10_3{x}"),
            if b_hits.is_empty() { "no r10_1y matched".into() } else { format!("matches {}", b_hits.join(", ")) },
        );
    }
    Ok(matched)
}

fn incompatibility(g: &LieAlgebra, adj: &Adjudications, matched: &[(String, String)], s: &mut Sink) -> Result<()> {
    let labels = ["a", "b", "c", "d", "e"];
    let pairs: Vec<(String, String)> = labels
        .iter()
        .flat_map(|x| labels.iter().map(move |y| (format!("r10_1{x}"), format!("r10_3{y}"))))
        .filter(|(a, b)| value_of(adj, a).is_some() && value_of(adj, b).is_some())
        .collect();
    if pairs.is_empty() {
        return Ok(());
    }
    let sizes: Vec<usize> = pairs
        .par_iter()
        .map(|(a, b)| {
            let r = value_of(adj, a).expect("present");
            let t = value_of(adj, b).expect("present");
            schouten_mixed(g, r, t).map(|m| m.len())
        })
        .collect::<Result<_>>()?;
    for ((a, b), n) in pairs.iter().zip(&sizes) {
        s.info(&format!("incompat.{a}.{b}"), &format!("{a}, {b}"), format!("mixed Schouten bracket has {n} terms"));
    }
    let nonzero = sizes.iter().filter(|&&n| n > 0).count();
    let (ok, scope) = if matched.is_empty() {
        (nonzero == pairs.len(), "no sigma2-matched pairs exist, judged on the full table".to_string())
    } else {
        let all = matched.iter().all(|m| pairs.iter().zip(&sizes).any(|(p, &n)| p == m && n > 0));
        (all, format!("{} sigma2-matched pairs", matched.len()))
    };
    s.claim(
        "incompat.table",
        "r10_1x, r10_3y",
        ok,
        true,
        format!("{nonzero} of {} pairs have nonzero mixed bracket; {scope}", pairs.len()),
    );
    Ok(())
}

fn grading(g: &LieAlgebra, adj: &Adjudications, s: &mut Sink) -> Result<()> {
    let d = conformal_basis(g)[&Physical::D].clone();
    let weights = basis_weights(g, &d)?;
    for name in ["r8_1", "r8_2"] {
        let Some(r) = value_of(adj, name) else { continue };
        let ws: Vec<_> = r.terms().map(|(&(i, j), _)| ((i, j), &weights[i] + &weights[j])).collect();
        let homogeneous = ws.windows(2).all(|w| w[0].1 == w[1].1);
        let listing: Vec<String> =
            ws.iter().map(|((i, j), w)| format!("{}^{}:{w}", BASIS_NAMES[*i], BASIS_NAMES[*j])).collect();
        s.claim(
            &format!("grading.{name}"),
            name,
            homogeneous && !ws.is_empty(),
            true,
            format!("D-weights of the terms {}", listing.join(" ")),
        );
    }
    let omega = canonical_trivector(g)?;
    s.claim("grading.omega_nonzero", "Omega", !omega.is_zero(), true, format!("{} terms", omega.len()));
    let ad_d = adjoint_action_triv(g, &d, &omega)?;
    s.claim("grading.omega_weight", "Omega", ad_d.is_zero(), true, "ad_D Omega = 0, D-weight 0");
    let bad: Vec<&str> = (0..DIM)
        .into_par_iter()
        .map(|k| adjoint_action_triv(g, &g.basis(k), &omega).map(|t| (!t.is_zero()).then_some(BASIS_NAMES[k])))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let witness = if bad.is_empty() { "ad_x Omega = 0 for all 15 basis elements".into() } else { format!("fails for {}", bad.join(", ")) };
    s.claim("grading.omega_invariant", "Omega", bad.is_empty(), true, witness);
    Ok(())
}
