//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line with its
//! runtime against a pinned budget. All comparisons are exact.

use std::sync::Arc;
use std::time::{Duration, Instant};

use hopfcleft::braidmod::{
    check_braiding_axioms, module_morphism_sides, ComoduleAlgebra, Measuring, Module, YdModule,
};
use hopfcleft::cleft::{
    crossed_to_cleft, functor_f, iso_to_crossed, round_trip_check, CleftExtension,
};
use hopfcleft::cocycle::{
    check_cocycle, mu_sigma, mu_sigma_report, recover_sigma, smash_product, square_coalgebra,
    Cocycle, INVERTIBLE, REL_5, REL_6, REL_7,
};
use hopfcleft::fixtures::{group_algebra, quantum_line_grading, quantum_line_over_cyclic};
use hopfcleft::hopfcore::{check_hopf, convolution_inverse, HopfAlgebra};
use hopfcleft::lifting::{
    bosonize, check_cprime_section, check_zprime, cleft_prime_census, deform, gr_check, phi,
    phi_inverse, psi, sigma_gamma_restricts, Bosonization, GradedYdHopf, EQ_9,
};
use hopfcleft::oracle::{
    enumerate_cocycles, enumerate_zprime, oracle_convolution_inverse, DEFAULT_BOUND,
};
use hopfcleft::report::Report;
use hopfcleft::{FieldSpec, LinearMap, TensorSpace};

type Outcome = Result<Vec<String>, String>;

/// Runs one criterion and prints its verdict line and details. Returns
/// whether it passed within its budget.
fn criterion(id: u32, title: &str, budget: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let timing = format!(
        "{} ms, budget {} ms",
        elapsed.as_millis(),
        budget.as_millis()
    );
    let verdict = match &result {
        Ok(_) if elapsed <= budget => Ok(()),
        Ok(_) => Err("runtime budget exceeded".to_string()),
        Err(e) => Err(e.clone()),
    };
    match &verdict {
        Ok(()) => println!("PASS [{id}] {title} ({timing})"),
        Err(e) => println!("FAIL [{id}] {title} ({timing}): {e}"),
    }
    if let Ok(details) = &result {
        for d in details {
            println!("    {d}");
        }
    }
    verdict.is_ok()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn all_pass(r: &Report) -> Result<(), String> {
    ensure(r.all_passed(), || {
        let bad: Vec<String> = r
            .failures()
            .map(|c| format!("{} [{}]", c.name, c.witness.clone().unwrap_or_default()))
            .collect();
        format!("{}: {}", r.title, bad.join("; "))
    })
}

fn err(e: hopfcleft::Error) -> String {
    e.to_string()
}

/// The quantum line `k[x]/(x²)` over `kC_n` with `q = -1`, its
/// bosonization, and `Z(R)` found by exhaustive search.
struct Line {
    label: &'static str,
    field: FieldSpec,
    k: Arc<HopfAlgebra>,
    graded: GradedYdHopf,
    b: Bosonization,
    unit: Measuring,
    cocycles: Vec<Cocycle>,
}

fn line(field: FieldSpec, n: usize, label: &'static str) -> Line {
    let (k, r) = quantum_line_over_cyclic(field, n, 2).unwrap();
    let grading = quantum_line_grading(&r);
    let graded = GradedYdHopf::new(Arc::new(r), grading, true).unwrap();
    let b = bosonize(&graded).unwrap();
    let unit = Measuring::unit(graded.r.clone());
    let cocycles = enumerate_cocycles(&unit, DEFAULT_BOUND, None)
        .unwrap()
        .cocycles;
    Line {
        label,
        field,
        k,
        graded,
        b,
        unit,
        cocycles,
    }
}

fn lines() -> Vec<Line> {
    vec![
        line(FieldSpec::Prime(3), 2, "R/kC2 over F3"),
        line(FieldSpec::Prime(5), 4, "R/kC4 over F5"),
    ]
}

/// `π_λ`: `1⊗1 ↦ 1`, `x⊗x ↦ λ`, all other basis pairs to 0.
fn pi_lambda(l: &Line, lambda: u64) -> LinearMap {
    let src = TensorSpace::power(l.graded.r.space(), 2);
    let mut entries = vec![(0, 0, l.field.one())];
    if lambda != 0 {
        entries.push((0, 3, l.field.from_i64(lambda as i64)));
    }
    LinearMap::from_entries(src, l.unit.space().clone(), entries).unwrap()
}

/// Every map `R⊗R → 𝕜` with values in `F_p`, in lexicographic order.
fn all_scalar_maps(l: &Line) -> Vec<LinearMap> {
    let src = TensorSpace::power(l.graded.r.space(), 2);
    let p = l.field.characteristic();
    let n = src.dim();
    let total = p.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut entries = Vec::new();
            for j in (0..n).rev() {
                let v = code % p;
                code /= p;
                if v != 0 {
                    entries.push((0, j, l.field.from_i64(v as i64)));
                }
            }
            LinearMap::from_entries(src.clone(), l.unit.space().clone(), entries).unwrap()
        })
        .collect()
}

/// Cleft extensions attached to a fixture: `F(π)` for each cocycle, the
/// smash product, and `R` coacting on itself with the identity section.
fn cleft_fixtures(l: &Line) -> Result<Vec<(String, CleftExtension)>, String> {
    let mut out = Vec::new();
    for (i, c) in l.cocycles.iter().enumerate() {
        out.push((format!("F(π{i})"), functor_f(c).map_err(err)?));
    }
    let smash = smash_product(&l.unit)
        .and_then(|cp| crossed_to_cleft(&cp))
        .map_err(err)?;
    out.push(("smash product".into(), smash));
    let regular = ComoduleAlgebra::regular(l.graded.r.clone());
    let id = LinearMap::identity(l.graded.r.space());
    out.push((
        "regular".into(),
        CleftExtension::new(regular, id, None).map_err(err)?,
    ));
    Ok(out)
}

fn c01_hopf_axiom_suite() -> bool {
    let f3 = FieldSpec::Prime(3);
    let f5 = FieldSpec::Prime(5);
    let ls = lines();
    criterion(
        1,
        "Hopf axioms and oracle antipodes",
        Duration::from_secs(4),
        || {
            let mut algebras: Vec<(String, Arc<HopfAlgebra>)> = vec![
                (
                    "kC2/F3".into(),
                    Arc::new(group_algebra(f3, 2).map_err(err)?),
                ),
                (
                    "kC4/F5".into(),
                    Arc::new(group_algebra(f5, 4).map_err(err)?),
                ),
            ];
            for l in &ls {
                algebras.push((l.label.to_string(), l.graded.r.clone()));
                algebras.push((format!("R#H {}", l.label), l.b.hopf.clone()));
            }
            let mut details = Vec::new();
            for (name, h) in &algebras {
                let start = Instant::now();
                all_pass(&check_hopf(h))?;
                let id = LinearMap::identity(h.space());
                let closed = convolution_inverse(&id, &h.coalg, &h.alg).map_err(err)?;
                let searched = oracle_convolution_inverse(&id, &h.coalg, &h.alg, DEFAULT_BOUND)
                    .map_err(err)?;
                ensure(closed == h.antipode && searched == closed, || {
                    format!("{name}: antipodes disagree")
                })?;
                let t = start.elapsed();
                ensure(t < Duration::from_secs(1), || format!("{name} took {t:?}"))?;
                details.push(format!(
                    "{name}: dim {}, {} ms",
                    h.space().dim(),
                    t.as_millis()
                ));
            }
            Ok(details)
        },
    )
}

fn c02_braiding_suite() -> bool {
    let ls = lines();
    criterion(
        2,
        "left-braiding axioms and unit braidings",
        Duration::from_secs(1),
        || {
            let mut details = Vec::new();
            for l in &ls {
                let r = &l.graded.r;
                let amb = r.ambient().clone();
                let unit_yd = YdModule::unit(amb.clone());
                let unit_mod = Module::unit(amb);
                let yds = [("𝟙", unit_yd), ("R", r.yd.clone())];
                let mods = [("𝟙", unit_mod), ("R", r.module().clone())];
                // projection of R onto its degree-0 part, a morphism of both kinds
                let proj = LinearMap::from_entries(
                    r.space().clone(),
                    r.space().clone(),
                    vec![(0, 0, l.field.one())],
                )
                .map_err(err)?;
                let mut count = 0;
                for (xn, x) in &yds {
                    for (vn, v) in &mods {
                        let f = if *xn == "R" {
                            proj.clone()
                        } else {
                            LinearMap::identity(x.space())
                        };
                        let g = if *vn == "R" {
                            proj.clone()
                        } else {
                            LinearMap::identity(&v.space)
                        };
                        let rep = check_braiding_axioms(x, x, v, v, &f, &g);
                        all_pass(&rep).map_err(|e| format!("{} X={xn} V={vn}: {e}", l.label))?;
                        count += rep.checks.len();
                    }
                }
                details.push(format!("{}: 4 (X, V) pairs, {count} checks", l.label));
            }
            Ok(details)
        },
    )
}

fn c03_cocycle_iff_associative() -> bool {
    let l = line(FieldSpec::Prime(3), 2, "R/kC2 over F3");
    criterion(
        3,
        "cocycle relations iff μ_σ associative and unital",
        Duration::from_secs(10),
        || {
            let (mut invertible, mut cocycles, mut disagreements, mut not_k_linear) = (0, 0, 0, 0);
            let candidates = all_scalar_maps(&l);
            for sigma in &candidates {
                let chk = check_cocycle(&l.unit, sigma).map_err(err)?;
                if !chk.report.passed(INVERTIBLE) {
                    continue;
                }
                invertible += 1;
                let rels = [REL_5, REL_6, REL_7].iter().all(|n| chk.report.passed(n));
                let assoc = mu_sigma_report(&l.unit, sigma).map_err(err)?.all_passed();
                if rels != assoc {
                    disagreements += 1;
                }
                if chk.cocycle.is_some() {
                    cocycles += 1;
                } else if rels {
                    not_k_linear += 1;
                }
            }
            ensure(candidates.len() == 81, || {
                format!("{} candidates", candidates.len())
            })?;
            ensure(disagreements == 0, || {
                format!("{disagreements} disagreements")
            })?;
            ensure(cocycles == l.cocycles.len(), || {
                format!("{cocycles} cocycles vs {} by search", l.cocycles.len())
            })?;
            Ok(vec![format!(
            "81 candidates, {invertible} invertible, {cocycles} cocycles, {not_k_linear} satisfy (5)-(7) without K-linearity, 0 disagreements"
        )])
        },
    )
}

fn c04_crossed_product_recovery() -> bool {
    let ls = lines();
    criterion(
        4,
        "(id⊗ε̄)μ_σ(η⊗id⊗η⊗id) = σ",
        Duration::from_secs(5),
        || {
            let mut details = Vec::new();
            for l in &ls {
                let mut all = l.cocycles.clone();
                for c in &l.cocycles {
                    all.push(
                        Cocycle::new(
                            &Measuring::unit(l.b.hopf.clone()),
                            phi(&l.b, c).map_err(err)?.sigma,
                        )
                        .map_err(err)?,
                    );
                }
                for c in &all {
                    let mu = mu_sigma(&c.measuring, &c.sigma).map_err(err)?;
                    ensure(
                        recover_sigma(&c.measuring, &mu).map_err(err)? == c.sigma,
                        || format!("{}: σ not recovered", l.label),
                    )?;
                }
                details.push(format!(
                    "{}: {} cocycles on R and on R#H",
                    l.label,
                    all.len()
                ));
            }
            Ok(details)
        },
    )
}

fn c05_round_trip() -> bool {
    let ls = lines();
    criterion(
        5,
        "σ_{η⊗id} = σ and verified isomorphisms to crossed products",
        Duration::from_secs(10),
        || {
            let mut details = Vec::new();
            for l in &ls {
                for c in &l.cocycles {
                    all_pass(&round_trip_check(c).map_err(err)?)?;
                }
                let mut clefts = cleft_fixtures(l)?;
                for c in &l.cocycles {
                    let e = psi(&l.b, &functor_f(c).map_err(err)?).map_err(err)?;
                    clefts.push(("Ψ(F(π))".into(), e));
                }
                for (name, e) in &clefts {
                    all_pass(&iso_to_crossed(e).map_err(err)?.report)
                        .map_err(|m| format!("{name}: {m}"))?;
                }
                details.push(format!(
                    "{}: {} cocycles, {} cleft extensions",
                    l.label,
                    l.cocycles.len(),
                    clefts.len()
                ));
            }
            Ok(details)
        },
    )
}

fn c06_phi_psi_square() -> bool {
    let ls = lines();
    criterion(
        6,
        "Φ: Z(R) → Z'(𝓗) bijective and α_𝓗Φ = Ψα_R",
        Duration::from_secs(60),
        || {
            let mut details = Vec::new();
            for l in &ls {
                let zprime = enumerate_zprime(&l.b, DEFAULT_BOUND).map_err(err)?;
                ensure(zprime.len() == l.cocycles.len(), || {
                    format!(
                        "{}: |Z(R)| = {} but |Z'| = {}",
                        l.label,
                        l.cocycles.len(),
                        zprime.len()
                    )
                })?;
                let mut images = Vec::new();
                for c in &l.cocycles {
                    let s = phi(&l.b, c).map_err(err)?;
                    ensure(phi_inverse(&l.b, &s).map_err(err)?.sigma == c.sigma, || {
                        "Φ^{-1}Φ ≠ id".into()
                    })?;
                    let e = psi(&l.b, &functor_f(c).map_err(err)?).map_err(err)?;
                    let (_, canon) = sigma_gamma_restricts(&l.b, &e).map_err(err)?;
                    ensure(canon.sigma == s.sigma, || {
                        format!("{}: Ψ and Φ disagree", l.label)
                    })?;
                    images.push(s.sigma);
                }
                for sigma in &zprime {
                    let s = check_zprime(&l.b, sigma).map_err(err)?;
                    let back = phi(&l.b, &phi_inverse(&l.b, &s).map_err(err)?).map_err(err)?;
                    ensure(back.sigma == *sigma, || "ΦΦ^{-1} ≠ id".into())?;
                }
                ensure(images == zprime, || format!("{}: Φ(Z(R)) ≠ Z'", l.label))?;
                details.push(format!("{}: |Z(R)| = |Z'(𝓗)| = {}", l.label, zprime.len()));
            }
            Ok(details)
        },
    )
}

fn c07_lifting() -> bool {
    let l = line(FieldSpec::Prime(5), 4, "R/kC4 over F5");
    criterion(
        7,
        "gr 𝓗_σ ≅ 𝓗 for every λ ∈ F5",
        Duration::from_secs(10),
        || {
            let mut details = Vec::new();
            for lambda in 0..5 {
                let pi = Cocycle::new(&l.unit, pi_lambda(&l, lambda)).map_err(err)?;
                let s = phi(&l.b, &pi).map_err(err)?;
                let d = deform(&l.b, &s).map_err(err)?;
                let gr = gr_check(&l.b, &d).map_err(err)?;
                all_pass(&gr.report)?;
                ensure(gr.corrections.is_empty() == (lambda == 0), || {
                    format!(
                        "λ = {lambda}: {} lower-degree corrections",
                        gr.corrections.len()
                    )
                })?;
                let first = gr
                    .corrections
                    .first()
                    .map(|c| format!("; e.g. {}·{} has lower part {}", c.x, c.y, c.lower))
                    .unwrap_or_default();
                details.push(format!(
                    "λ = {lambda}: {} corrections{first}",
                    gr.corrections.len()
                ));
            }
            Ok(details)
        },
    )
}

fn c08_derived_relations() -> bool {
    let ls = lines();
    criterion(
        8,
        "derived relations on every applicable object",
        Duration::from_secs(10),
        || {
            let mut details = Vec::new();
            for l in &ls {
                let mut counts = [0usize; 4];
                let r = &l.graded.r;
                let rr = r.module().tensor(r.module()).map_err(err)?;
                let unit_h = Measuring::unit(l.b.hopf.clone());
                for c in &l.cocycles {
                    let s = phi(&l.b, c).map_err(err)?;
                    for (m, sigma) in [(&l.unit, &c.sigma), (&unit_h, &s.sigma)] {
                        let rep = check_cocycle(m, sigma).map_err(err)?.report;
                        all_pass(&rep)?;
                        counts[0] += rep
                            .checks
                            .iter()
                            .filter(|c| c.name.starts_with("derived"))
                            .count();
                    }
                    let (lhs, rhs) =
                        module_morphism_sides(&c.sigma_inv, &rr, &l.unit.module).map_err(err)?;
                    ensure(lhs == rhs, || "σ^{-1} is not K-linear".into())?;
                    counts[1] += 1;
                    let z = check_zprime(&l.b, &s.sigma).map_err(err)?;
                    all_pass(&z.report)?;
                    counts[2] += z
                        .report
                        .checks
                        .iter()
                        .filter(|c| c.name.starts_with("derived"))
                        .count();
                    let e = psi(&l.b, &functor_f(c).map_err(err)?).map_err(err)?;
                    let rep = check_cprime_section(&l.b, &e).map_err(err)?;
                    ensure(rep.passed(EQ_9), || "Eq. (9) fails".into())?;
                    all_pass(&rep)?;
                    counts[3] += rep
                        .checks
                        .iter()
                        .filter(|c| c.name.starts_with("derived"))
                        .count();
                }
                for (name, e) in cleft_fixtures(l)? {
                    let (lhs, rhs) =
                        module_morphism_sides(&e.section_inv, r.module(), &e.comod_alg.module)
                            .map_err(err)?;
                    ensure(lhs == rhs, || format!("{name}: γ^{{-1}} is not K-linear"))?;
                    counts[1] += 1;
                }
                ensure(counts.iter().all(|&c| c > 0), || {
                    format!("{}: an empty suite {counts:?}", l.label)
                })?;
                details.push(format!(
                    "{}: {} cocycle, {} inverse linearity, {} Z', {} section checks",
                    l.label, counts[0], counts[1], counts[2], counts[3]
                ));
            }
            Ok(details)
        },
    )
}

fn c09_census_reproducibility() -> bool {
    let ls = lines();
    criterion(
        9,
        "census is byte-stable and both descriptions agree",
        Duration::from_secs(60),
        || {
            let mut details = Vec::new();
            for l in &ls {
                let a = cleft_prime_census(&l.b, DEFAULT_BOUND).map_err(err)?;
                let b = cleft_prime_census(&l.b, DEFAULT_BOUND).map_err(err)?;
                all_pass(&a.report)?;
                ensure(a.report.to_string() == b.report.to_string(), || {
                    "census output differs between runs".into()
                })?;
                let classes: Vec<Vec<usize>> =
                    a.classes.iter().map(|c| c.members.clone()).collect();
                details.push(format!("{}: classes {classes:?}", l.label));
            }
            Ok(details)
        },
    )
}

fn c10_oracle_agreement() -> bool {
    let ls = lines();
    criterion(
        10,
        "closed forms match the oracle",
        Duration::from_secs(120),
        || {
            let mut details = Vec::new();
            for l in &ls {
                let closed: Vec<LinearMap> = (0..l.field.characteristic())
                    .map(|lambda| pi_lambda(l, lambda))
                    .collect();
                let searched: Vec<LinearMap> = l.cocycles.iter().map(|c| c.sigma.clone()).collect();
                ensure(closed == searched, || {
                    format!("{}: cocycle list differs from {{π_λ}}", l.label)
                })?;
                let sq = square_coalgebra(&l.graded.r).map_err(err)?;
                for c in &l.cocycles {
                    let by_search =
                        oracle_convolution_inverse(&c.sigma, &sq, &l.unit.alg, DEFAULT_BOUND)
                            .map_err(err)?;
                    ensure(by_search == c.sigma_inv, || {
                        "σ^{-1} differs from the search".into()
                    })?;
                }
                let zprime = enumerate_zprime(&l.b, DEFAULT_BOUND).map_err(err)?;
                let images = l
                    .cocycles
                    .iter()
                    .map(|c| phi(&l.b, c).map(|s| s.sigma))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                ensure(zprime == images, || "Z' differs from Φ(Z(R))".into())?;
                for h in [&l.k, &l.graded.r, &l.b.hopf] {
                    let id = LinearMap::identity(h.space());
                    let s = oracle_convolution_inverse(&id, &h.coalg, &h.alg, DEFAULT_BOUND)
                        .map_err(err)?;
                    ensure(s == h.antipode, || {
                        format!("antipode of {} differs", h.name)
                    })?;
                }
                details.push(format!(
                    "{}: {} cocycles, {} inverses, 3 antipodes",
                    l.label,
                    closed.len(),
                    l.cocycles.len()
                ));
            }
            Ok(details)
        },
    )
}

fn main() {
    let criteria: [fn() -> bool; 10] = [
        c01_hopf_axiom_suite,
        c02_braiding_suite,
        c03_cocycle_iff_associative,
        c04_crossed_product_recovery,
        c05_round_trip,
        c06_phi_psi_square,
        c07_lifting,
        c08_derived_relations,
        c09_census_reproducibility,
        c10_oracle_agreement,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
