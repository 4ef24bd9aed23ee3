//! Verification suites over the built-in catalog, grouped by topic.
//!
//! | suite | contents |
//! |-------|----------|
//! | `s4`  | meet formula against brute force, complete distributivity, Min-Max |
//! | `s5`  | star expansion, closure laws, logic axioms, `U_1(E) ≅ E`, the classical epimorphism |
//! | `s6`  | distributivity transfer, p-algebra laws |
//! | `s7`  | event space completions |
//! | `s8`  | tensor products and the universal morphism |

use std::collections::BTreeSet;

use rand::Rng;
use serde::Serialize;

use crate::classical::{build_classical, SetLattice};
use crate::completion::{completion_distributivity, completion_functorial, event_space_completion};
use crate::downset::DownSet;
use crate::error::{Error, Result};
use crate::lattice::{benzene, boolean, chain2, mo, OrthoLattice};
use crate::product::{build_product, ProductPoset, DEFAULT_MAX_POSET};
use crate::report::{Law, Mode, Report, VerifyOptions};
use crate::tensor::{build_tensor, check_mj_distributive};
use crate::universal::{check_u1_iso, enumerate_universal, universal_of, DEFAULT_MAX_CARRIER};

pub const SUITES: [&str; 5] = ["s4", "s5", "s6", "s7", "s8"];

/// Down-sets of posets with at most this many are listed exhaustively.
const ENUMERATION_CAP: usize = 1 << 12;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub pass: bool,
    pub reports: Vec<Report>,
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteResult> {
    let reports = match name {
        "s4" => suite_s4(opts)?,
        "s5" => suite_s5(opts)?,
        "s6" => suite_s6(opts)?,
        "s7" => suite_s7(opts)?,
        "s8" => suite_s8(opts)?,
        other => return Err(Error::UnknownLabel(format!("suite {other}"))),
    };
    Ok(SuiteResult {
        suite: name.to_string(),
        pass: reports.iter().all(Report::passed),
        reports,
    })
}

/// The catalog lattices used throughout: B1, B2, B3, MO2, MO3, O6.
pub fn catalog_lattices() -> Vec<OrthoLattice> {
    vec![
        chain2(),
        boolean(2).expect("B2"),
        boolean(3).expect("B3"),
        mo(2).expect("MO2"),
        mo(3).expect("MO3"),
        benzene(),
    ]
}

fn product(factors: Vec<OrthoLattice>) -> Result<ProductPoset> {
    build_product(factors)
}

fn poset_name(p: &ProductPoset) -> String {
    let names: Vec<&str> = p.factors().iter().map(|f| f.name()).collect();
    format!("[{}]", names.join(", "))
}

/// Every down-set when there are few, else `count` seeded samples.
pub fn down_set_corpus(p: &ProductPoset, opts: &VerifyOptions, law: &str, count: usize) -> (Mode, Vec<DownSet>) {
    match p.enumerate_down_sets(ENUMERATION_CAP) {
        Ok(all) => (Mode::Exhaustive, all),
        Err(_) => {
            let mut rng = opts.rng(law);
            let v = (0..count)
                .map(|_| {
                    let k = rng.gen_range(0..=8);
                    p.random_down_set(&mut rng, k)
                })
                .collect();
            (Mode::Sampled, v)
        }
    }
}

/// Meets of pairs against the expansion over maximal letters and, when all
/// down-sets are listed, against the greatest common lower bound among them.
pub fn check_meet_formula(p: &ProductPoset, opts: &VerifyOptions) -> Result<Report> {
    let mut report = Report::new(format!("meet formula on {}", poset_name(p)), opts.seed);
    let all = p.enumerate_down_sets(ENUMERATION_CAP).ok();
    let pairs: Vec<(DownSet, DownSet)> = match &all {
        Some(all) if all.len() <= 256 => all
            .iter()
            .flat_map(|x| all.iter().map(move |y| (x.clone(), y.clone())))
            .collect(),
        _ => {
            let (_, corpus) = down_set_corpus(p, opts, "meet formula", 2 * opts.samples);
            corpus.chunks(2).filter(|c| c.len() == 2).map(|c| (c[0].clone(), c[1].clone())).collect()
        }
    };
    let mode = if all.as_ref().is_some_and(|a| a.len() <= 256) { Mode::Exhaustive } else { Mode::Sampled };
    let mut expansion = Law::new("intersection equals choice-function expansion", mode);
    let mut glb = Law::new("intersection is the greatest lower bound", mode);
    for (x, y) in &pairs {
        let m = p.dmeet([x, y]);
        let show = || format!("{} and {}", p.format_down_set(x), p.format_down_set(y));
        expansion.check(p.dmeet_choicefn(&[x.clone(), y.clone()], opts.max_expansion)? == m, show);
        if let Some(all) = &all {
            let lower: Vec<&DownSet> = all.iter().filter(|z| p.dleq(z, x) && p.dleq(z, y)).collect();
            let greatest = lower.iter().find(|g| lower.iter().all(|z| p.dleq(z, g)));
            glb.check(greatest.is_some_and(|g| **g == m), show);
        }
    }
    report.add(expansion);
    if all.is_some() {
        report.add(glb);
    }
    Ok(report)
}

/// Both complete distributive laws and Min-Max on seeded random families.
pub fn check_complete_distributivity(p: &ProductPoset, opts: &VerifyOptions) -> Result<Report> {
    let mut report = Report::new(format!("complete distributivity of D{}", poset_name(p)), opts.seed);
    let mut rng = opts.rng("complete distributivity");
    let mut comdis = Law::new("meet of joins expands over choice functions", Mode::Sampled);
    let mut comdisd = Law::new("join of meets expands over choice functions", Mode::Sampled);
    let mut minmax = Law::new("min-max inequality", Mode::Sampled);
    for _ in 0..opts.samples {
        let family: Vec<Vec<DownSet>> = (0..rng.gen_range(1..=3))
            .map(|_| (0..rng.gen_range(1..=3)).map(|_| p.sample_down_set(&mut rng)).collect())
            .collect();
        let v = p.check_completely_distributive(&family, opts.max_expansion)?;
        let show = || {
            let rows: Vec<String> = family
                .iter()
                .map(|row| {
                    let r: Vec<String> = row.iter().map(|x| p.format_down_set(x)).collect();
                    format!("[{}]", r.join(" "))
                })
                .collect();
            rows.join(" ")
        };
        comdis.check(v.meet_of_joins, show);
        comdisd.check(v.join_of_meets, show);
        minmax.check(v.min_max, show);
    }
    report.add(comdis);
    report.add(comdisd);
    report.add(minmax);
    Ok(report)
}

/// Star against its expansion over all `f: I → κ`.
pub fn check_star_oracle(p: &ProductPoset, opts: &VerifyOptions, count: usize) -> Result<Report> {
    let mut report = Report::new(format!("star expansion on {}", poset_name(p)), opts.seed);
    let (mode, corpus) = down_set_corpus(p, opts, "star oracle", count);
    let mut law = Law::new("star equals choice-function expansion", mode);
    let mut skipped = 0u64;
    for x in &corpus {
        match p.star_choicefn(x, opts.max_expansion) {
            Ok(s) => {
                law.check(s == p.star(x), || p.format_down_set(x));
            }
            Err(Error::ExpansionTooLarge { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    report.add(law);
    report.fact("expansion feasible on the whole corpus", skipped == 0, || {
        format!("{skipped} down-sets skipped")
    });
    Ok(report)
}

/// `x ≤ x**`, `x* = x***`, idempotence and monotonicity of `**`.
pub fn check_closure_laws(p: &ProductPoset, opts: &VerifyOptions, count: usize) -> Report {
    let mut report = Report::new(format!("closure laws on {}", poset_name(p)), opts.seed);
    let (mode, corpus) = if p.len() <= 10 {
        down_set_corpus(p, opts, "closure laws", count)
    } else {
        let mut rng = opts.rng("closure laws");
        let v = (0..count)
            .map(|_| {
                let k = rng.gen_range(0..=8);
                p.random_down_set(&mut rng, k)
            })
            .collect();
        (Mode::Sampled, v)
    };
    let mut inflationary = Law::new("x <= x**", mode);
    let mut triple = Law::new("x* = x***", mode);
    let mut idempotent = Law::new("x**** = x**", mode);
    let mut monotone = Law::new("x <= y implies x** <= y**", mode);
    for (k, x) in corpus.iter().enumerate() {
        let cx = p.closure(x);
        let show = || p.format_down_set(x);
        inflationary.check(p.dleq(x, &cx), show);
        triple.check(p.star(x) == p.star(&cx), show);
        idempotent.check(p.closure(&cx) == cx, show);
        let y = &corpus[(k * 7 + 3) % corpus.len()];
        let (lo, hi) = (p.dmeet([x, y]), p.djoin([x, y]));
        for (a, b) in [(&lo, x), (x, &hi)] {
            monotone.check(p.dleq(&p.closure(a), &p.closure(b)), || {
                format!("{} <= {}", p.format_down_set(a), p.format_down_set(b))
            });
        }
    }
    report.add(inflationary);
    report.add(triple);
    report.add(idempotent);
    report.add(monotone);
    report
}

fn s4_fixtures() -> Result<Vec<ProductPoset>> {
    Ok(vec![
        product(vec![boolean(2)?])?,
        product(vec![mo(2)?])?,
        product(vec![chain2(), boolean(2)?])?,
        product(vec![boolean(2)?; 2])?,
        product(vec![mo(2)?; 2])?,
    ])
}

fn suite_s4(opts: &VerifyOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for p in s4_fixtures()? {
        out.push(check_meet_formula(&p, opts)?);
        out.push(check_complete_distributivity(&p, opts)?);
    }
    Ok(out)
}

fn suite_s5(opts: &VerifyOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();

    let mut iso = Report::new("U_1(E) is isomorphic to E", opts.seed);
    for e in catalog_lattices() {
        let r = check_u1_iso(&e);
        iso.fact(e.name(), r.is_ok(), || r.unwrap_err().to_string());
    }
    out.push(iso);

    for p in [
        product(vec![boolean(2)?; 2])?,
        product(vec![mo(2)?; 2])?,
        product(vec![boolean(2)?, mo(2)?])?,
        product(vec![benzene(); 2])?,
        product(vec![boolean(2)?; 3])?,
    ] {
        out.push(check_star_oracle(&p, opts, 500)?);
    }

    for p in [
        product(vec![boolean(2)?])?,
        product(vec![chain2(), boolean(2)?])?,
        product(vec![boolean(2)?; 2])?,
        product(vec![mo(2)?; 2])?,
    ] {
        out.push(check_closure_laws(&p, opts, 1000));
    }

    for (e, k) in [(boolean(2)?, 2), (boolean(2)?, 3), (mo(2)?, 2), (benzene(), 2)] {
        out.push(universal_of(&e, k)?.verify_logic_axioms(opts));
    }

    let s = SetLattice::powerset(2)?;
    let ca = build_classical(&s, 2)?;
    let mut cr = ca.verify();
    cr.seed = opts.seed;
    for e in &mut cr.entries {
        e.seed = opts.seed;
    }
    out.push(cr);
    let u = enumerate_universal(ca.ground().poset().clone(), DEFAULT_MAX_CARRIER)?;
    let epi = ca.epimorphism_e(&u, opts)?;
    let mut r = epi.report;
    r.fact("algebra has 16 members", ca.len() == 16, || ca.len().to_string());
    out.push(r);

    let mut compl = Report::new("complement expansion in <B2^2>", opts.seed);
    let mut rng = opts.rng("complement expansion");
    let p = ca.ground().poset();
    let mut law = Law::new("complement of a union of boxes", Mode::Sampled);
    for _ in 0..opts.samples {
        let letters: Vec<usize> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(0..p.len())).collect();
        law.check(ca.verify_complement(&letters, opts.max_expansion)?, || {
            let l: Vec<String> = letters.iter().map(|&t| p.label(t)).collect();
            l.join(", ")
        });
    }
    compl.add(law);
    out.push(compl);
    Ok(out)
}

fn suite_s6(opts: &VerifyOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let mut dist = Report::new("distributivity of U_k(E) agrees with E", opts.seed);
    for (e, k) in [(boolean(2)?, 2), (boolean(2)?, 3), (mo(2)?, 2), (benzene(), 2), (chain2(), 3)] {
        let u = universal_of(&e, k)?;
        let d = u.is_distributive_universal(opts);
        dist.fact(format!("{}^{k}", e.name()), d.distributive == e.is_distributive(), || {
            format!("E: {}, U: {}", e.is_distributive(), d.distributive)
        });
        if let Some([x, y, z]) = d.witness {
            dist.fact(
                format!("{}^{k} witness fails distributivity", e.name()),
                !e.is_distributive(),
                || format!("{} {} {}", u.label(x), u.label(y), u.label(z)),
            );
        }
    }
    out.push(dist);

    out.push(universal_of(&boolean(2)?, 2)?.verify_p_algebra(opts));

    let u = universal_of(&mo(2)?, 1)?;
    let r = u.verify_p_algebra(opts);
    let first = r.entry("x meet (x meet y)* = x meet y*").cloned();
    let mut neg = Report::new("p-algebra law fails for MO2", opts.seed);
    neg.fact(
        "first axiom fails with a witness",
        first.as_ref().is_some_and(|e| !e.pass && e.witness.is_some()),
        || format!("{first:?}"),
    );
    out.push(neg);
    Ok(out)
}

fn suite_s7(opts: &VerifyOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let mut lattices = catalog_lattices();
    lattices.push(mo(1)?);
    for l in &lattices {
        let c = event_space_completion(l)?;
        let mut r = c.report();
        r.seed = opts.seed;
        for e in &mut r.entries {
            e.seed = opts.seed;
        }
        out.push(r);
        out.push(completion_distributivity(l, opts)?);
    }
    let mut lifted = completion_functorial(&boolean(2)?, &mo(1)?)?.report;
    lifted.seed = opts.seed;
    for e in &mut lifted.entries {
        e.seed = opts.seed;
    }
    out.push(lifted);
    let mut neg = Report::new("non-isomorphic inputs are reported", opts.seed);
    let r = completion_functorial(&boolean(2)?, &mo(2)?);
    neg.fact("B2 and MO2", matches!(r, Err(Error::NotIsomorphic(..))), String::new);
    out.push(neg);
    Ok(out)
}

fn suite_s8(opts: &VerifyOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let reseed = |mut r: Report| {
        r.seed = opts.seed;
        for e in &mut r.entries {
            e.seed = opts.seed;
        }
        r
    };

    let mut same = Report::new("tensor of equal factors is the universal logic", opts.seed);
    for e in [boolean(2)?, mo(2)?] {
        let tl = build_tensor(vec![e.clone(); 2], DEFAULT_MAX_POSET, DEFAULT_MAX_CARRIER)?;
        let u = universal_of(&e, 2)?;
        same.fact(format!("{} x {}", e.name(), e.name()), tl.carrier() == u.carrier(), String::new);
    }
    out.push(same);

    for factors in [vec![boolean(2)?; 2], vec![boolean(2)?, mo(2)?]] {
        let tl = build_tensor(factors, DEFAULT_MAX_POSET, DEFAULT_MAX_CARRIER)?;
        out.push(reseed(tl.verify_i_alpha()));
        out.push(reseed(tl.verify_prop_ju()));
        out.push(tl.verify_logic_axioms(opts));
        let t = tl.to_ortholattice(tl.name())?;
        let v = check_mj_distributive(&t, &tl.canonical_family(), opts.max_expansion, opts)?;
        let mut r = Report::new(format!("canonical family of {}", tl.name()), opts.seed);
        let mut law = Law::new("meet-join distributive", v.mode);
        law.check(v.holds, || format!("{:?}", v.witness));
        r.add(law);
        out.push(r);
        let pair = tl.identity_target()?;
        let m = tl.universal_morphism(&pair, opts)?;
        let mut r = m.report;
        r.fact("identity target gives the identity", m.table == (0..tl.len()).collect::<Vec<_>>(), String::new);
        out.push(r);
    }

    let m = mo(2)?;
    let l = |s: &str| m.index_of(s);
    let fam = vec![vec![l("p")?, l("q")?], vec![l("p'")?, l("q'")?]];
    let v = check_mj_distributive(&m, &fam, opts.max_expansion, opts)?;
    let mut neg = Report::new("MO2 counter-family", opts.seed);
    neg.fact("{p,q},{p',q'} is not meet-join distributive", !v.holds, String::new);
    out.push(neg);

    let s = SetLattice::powerset(2)?;
    let ca = build_classical(&s, 2)?;
    let tl = build_tensor(vec![s.lattice().clone(); 2], DEFAULT_MAX_POSET, DEFAULT_MAX_CARRIER)?;
    let pair = tl.classical_target(&ca)?;
    let morph = tl.universal_morphism(&pair, opts)?;
    let epi = ca.epimorphism_e(&tl, opts)?;
    let via_e: Vec<Option<usize>> = epi.table.iter().map(|x| ca.index_of(x)).collect();
    let mut r = morph.report;
    let mut law = Law::new("t agrees with the classical epimorphism", Mode::Exhaustive);
    for (i, (&t, e)) in morph.table.iter().zip(&via_e).enumerate() {
        law.check(Some(t) == *e, || tl.label(i));
    }
    r.add(law);
    out.push(r);
    Ok(out)
}

/// Names of suites selected by `all` or a single suite name.
pub fn expand_suite_name(name: &str) -> Result<Vec<&'static str>> {
    if name == "all" {
        return Ok(SUITES.to_vec());
    }
    SUITES
        .iter()
        .find(|s| **s == name)
        .map(|s| vec![*s])
        .ok_or_else(|| Error::UnknownLabel(format!("suite {name}")))
}

/// Distinct down-set counts, for reporting.
pub fn distinct(xs: &[DownSet]) -> usize {
    xs.iter().collect::<BTreeSet<_>>().len()
}
