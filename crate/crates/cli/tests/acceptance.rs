//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every comparison is exact; the only tolerances are
//! the wall-clock limits listed with each criterion.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use grcat_core::catspec::subobject_poset;
use grcat_core::filtration::filt_closure;
use grcat_core::generator::rep::{euler_form, ext_dim_bruteforce, hom_dim};
use grcat_core::generator::{generate_an, intervals, window, Fixture, Row};
use grcat_core::simpleminded::{theta_infinity, SmsStatus};
use grcat_core::theorems::{
    check_ext_bound, check_gr_axioms, check_gr_axioms_on, check_main_property, check_small_lemmas,
};
use grcat_core::{
    chain_leq, gr_measure_bruteforce, gr_table, obj, CategorySpec, Chain, IndecId, MeasureTable, Metadata,
    ObjectRef, Report, Status,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN_LIMIT: Duration = Duration::from_millis(100);
const WINDOW_LIMIT: Duration = Duration::from_millis(500);
const ORACLE_LIMIT: Duration = Duration::from_secs(10);
const SUITE_LIMIT: Duration = Duration::from_secs(5);
const RANDOM_SPECS: usize = 250;
const RANDOM_MAX_SIZE: usize = 10;
const RANDOM_SEED: u64 = 0x4752_6361_7431;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(label: &str, elapsed: Duration, limit: Duration) -> Result<String, String> {
    let text = format!(
        "{label} {:.1} ms (limit {} ms)",
        elapsed.as_secs_f64() * 1e3,
        limit.as_millis()
    );
    if elapsed < limit {
        Ok(text)
    } else {
        Err(text)
    }
}

fn fixture_path(name: &str) -> String {
    format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// The published table: object, length, measure.
const PUBLISHED_TABLE: [(&str, u32, &[u32]); 6] = [
    ("P1m1", 1, &[1]),
    ("S3", 1, &[1]),
    ("S2", 1, &[1]),
    ("I2m1", 2, &[1, 2]),
    ("P2", 2, &[1, 2]),
    ("S1m1", 3, &[1, 2, 3]),
];

fn chain(v: &[u32]) -> Chain {
    Chain::new(v.to_vec()).expect("literal chains are valid")
}

fn golden_table() -> Outcome {
    let path = fixture_path("final-example.grcat.json");
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_grcat"))
        .args(["measure", &path])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !out.status.success() {
        return Err(format!("measure exited with {:?}", out.status.code()));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() != 8
        || lines[0].split_whitespace().collect::<Vec<_>>() != ["object", "length", "GR", "measure"]
    {
        return Err(format!("unexpected layout:\n{text}"));
    }
    for (line, (id, theta, measure)) in lines[1..7].iter().zip(PUBLISHED_TABLE) {
        let expected = format!("{id} {theta} {}", chain(measure));
        let got = line.split_whitespace().collect::<Vec<_>>().join(" ");
        if got != expected.split_whitespace().collect::<Vec<_>>().join(" ") {
            return Err(format!("row `{line}` differs from `{expected}`"));
        }
    }
    let chain_line = format!(
        "GR chain: {} < {} < {}",
        chain(&[1]),
        chain(&[1, 2]),
        chain(&[1, 2, 3])
    );
    if lines[7] != chain_line {
        return Err(format!("chain line `{}`", lines[7]));
    }
    // the compact rendering is character-for-character the published one
    let spec = Fixture::FinalExample.build().map_err(|e| e.to_string())?;
    let table = gr_table(&spec).map_err(|e| e.to_string())?;
    let compact: Vec<String> = table.gr_chain.iter().map(Chain::compact).collect();
    if compact != ["{1}", "{1,2}", "{1,2,3}"] {
        return Err(format!("compact chain {compact:?}"));
    }
    within("6 rows and chain exact;", elapsed, GOLDEN_LIMIT)
}

fn window_signature() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut max_l = 0;
    for w in 1..=3usize {
        let spec = Fixture::DbWindow(w).build().map_err(|e| e.to_string())?;
        let gens: BTreeSet<IndecId> = window(4 * w)
            .into_iter()
            .filter(|x| x.row == Row::Base)
            .map(|x| x.id())
            .collect();
        let closure = filt_closure(&spec, &gens, None).map_err(|e| e.to_string())?;
        for id in spec.ids() {
            match closure.length(&ObjectRef::single(id.clone())) {
                Some(l) if l <= 3 => max_l = max_l.max(l),
                Some(l) => return Err(format!("db-window-{w}: l_X({id}) = {l} > 3")),
                None => return Err(format!("db-window-{w}: {id} not reached")),
            }
        }
        counts.push(spec.len());
    }
    let elapsed = start.elapsed();
    if !counts.windows(2).all(|p| p[0] < p[1]) {
        return Err(format!("counts {counts:?} do not increase"));
    }
    within(
        &format!("counts {counts:?} strictly increase, max l_X = {max_l} <= 3;"),
        elapsed,
        WINDOW_LIMIT,
    )
}

fn random_spec(rng: &mut ChaCha8Rng) -> CategorySpec {
    let n = rng.gen_range(1..=RANDOM_MAX_SIZE);
    let thetas: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=5)).collect();
    let id = |i: usize| format!("X{i}");
    let mut b = CategorySpec::builder("random");
    for (i, &t) in thetas.iter().enumerate() {
        b = b.indecomposable(id(i).as_str(), t);
    }
    let density: f64 = rng.gen_range(0.1..0.7);
    for x in 0..n {
        for y in 0..n {
            if thetas[x] < thetas[y] && rng.gen_bool(density) {
                b = b.inflation(id(x).as_str(), obj([id(y)]));
            }
        }
    }
    b.build().expect("random specs are well formed")
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut specs = vec![Fixture::FinalExample.build().map_err(|e| e.to_string())?];
    for w in 1..=3 {
        specs.push(Fixture::DbWindow(w).build().map_err(|e| e.to_string())?);
    }
    for n in 1..=4 {
        specs.push(generate_an(n).map_err(|e| e.to_string())?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut random = 0;
    while random < RANDOM_SPECS {
        let spec = random_spec(&mut rng);
        if !grcat_core::validate_spec(&spec).ok {
            return Err("random generator produced an invalid spec".into());
        }
        specs.push(spec);
        random += 1;
    }
    let mut objects = 0;
    for spec in &specs {
        let table = gr_table(spec).map_err(|e| format!("{}: {e}", spec.name()))?;
        for id in spec.ids() {
            let brute = gr_measure_bruteforce(spec, id).map_err(|e| format!("{}: {e}", spec.name()))?;
            if table.measure(id) != Some(&brute) {
                return Err(format!(
                    "{} / {id}: DP {:?} vs brute force {brute}",
                    spec.name(),
                    table.measure(id)
                ));
            }
            objects += 1;
        }
    }
    within(
        &format!(
            "{} specs ({random} random, seed {RANDOM_SEED:#x}), {objects} objects agree;",
            specs.len()
        ),
        start.elapsed(),
        ORACLE_LIMIT,
    )
}

fn order_axioms() -> Outcome {
    let mut chains = Vec::new();
    for mask in 1u32..(1 << 6) {
        let elems: Vec<u32> = (1..=6).filter(|&a| mask >> (a - 1) & 1 == 1).collect();
        if elems.len() <= 4 {
            chains.push(Chain::new(elems).map_err(|e| e.to_string())?);
        }
    }
    let dyadic = |c: &Chain| -> Ratio<i64> {
        c.elems()
            .iter()
            .fold(Ratio::from_integer(0), |s, &a| s + Ratio::new(1, 1i64 << a))
    };
    let mut triples = 0u64;
    for x in &chains {
        for y in &chains {
            let leq = chain_leq(x, y);
            if leq != (dyadic(x) <= dyadic(y)) {
                return Err(format!("{x} <= {y} disagrees with the dyadic encoding"));
            }
            if !leq && !chain_leq(y, x) {
                return Err(format!("{x} and {y} are incomparable"));
            }
            if leq && chain_leq(y, x) && x != y {
                return Err(format!("{x} and {y} violate antisymmetry"));
            }
            for z in &chains {
                triples += 1;
                if leq && chain_leq(y, z) && !chain_leq(x, z) {
                    return Err(format!("{x} <= {y} <= {z} but not {x} <= {z}"));
                }
            }
        }
    }
    Ok(format!(
        "{} chains, {triples} triples: total, antisymmetric, transitive, equal to the dyadic order",
        chains.len()
    ))
}

fn failed_with_witness(report: &Report, check: &str, object: &str) -> Result<(), String> {
    let c = report
        .check(check)
        .ok_or_else(|| format!("{}: no check {check}", report.suite))?;
    let named = c.witnesses.iter().any(|w| w.objects.iter().any(|o| o == object));
    if c.status == Status::Fail && named {
        Ok(())
    } else {
        Err(format!(
            "{}: {check} did not fail with a witness naming {object}",
            report.suite
        ))
    }
}

fn negative_controls() -> Result<(), String> {
    let fe = Fixture::FinalExample.build().map_err(|e| e.to_string())?;

    let poset = subobject_poset(&fe).map_err(|e| e.to_string())?;
    let mut measures = gr_table(&fe).map_err(|e| e.to_string())?.measures;
    let (x, y) = (IndecId::from("P1m1"), IndecId::from("I2m1"));
    let (mx, my) = (measures[&x].clone(), measures[&y].clone());
    measures.insert(x, my);
    measures.insert(y, mx);
    let swapped = MeasureTable::from_measures(measures);
    failed_with_witness(&check_gr_axioms_on(&fe, &poset, &swapped), "gr1", "P1m1")?;

    let bad_inflation = fe
        .to_builder()
        .inflation("I2m1", obj(["S3", "S3", "S2"]))
        .build()
        .map_err(|e| e.to_string())?;
    failed_with_witness(&check_main_property(&bad_inflation), "main-bound", "I2m1")?;

    let kept = (obj(["[2,2]", "[2,2]"]), obj(["[1,2]", "[2,2]"]), obj(["[1,1]"]));
    let dropped = generate_an(2)
        .map_err(|e| e.to_string())?
        .to_builder()
        .retain_conflations(|c| (&c.a, &c.b, &c.c) != (&kept.0, &kept.1, &kept.2))
        .conflation(kept.0.clone(), obj(["[1,2]"]), kept.2.clone(), false)
        .build()
        .map_err(|e| e.to_string())?;
    failed_with_witness(&check_ext_bound(&dropped), "ext-bound", "[2,2]")?;

    let isolated = CategorySpec::builder("isolated")
        .metadata(Metadata {
            complete: true,
            ..Default::default()
        })
        .indecomposable("S", 1)
        .indecomposable("M", 2)
        .hom("S", "M", 1)
        .build()
        .map_err(|e| e.to_string())?;
    failed_with_witness(&check_small_lemmas(&isolated), "iii-simple-filtration", "M")
}

fn axiom_suites() -> Outcome {
    let start = Instant::now();
    let mut specs = vec![Fixture::FinalExample.build().map_err(|e| e.to_string())?];
    for w in 1..=3 {
        specs.push(Fixture::DbWindow(w).build().map_err(|e| e.to_string())?);
    }
    for n in 1..=4 {
        specs.push(generate_an(n).map_err(|e| e.to_string())?);
    }
    let mut runs = 0;
    for spec in &specs {
        for report in [
            check_gr_axioms(spec),
            check_main_property(spec),
            check_ext_bound(spec),
            check_small_lemmas(spec),
        ] {
            if !report.passed() {
                return Err(format!("{} fails {}", spec.name(), report.suite));
            }
            runs += 1;
        }
    }
    negative_controls()?;
    within(
        &format!(
            "{runs} suite runs pass on {} specs; 4 negative controls fail with witnesses;",
            specs.len()
        ),
        start.elapsed(),
        SUITE_LIMIT,
    )
}

fn generator_cross_check() -> Outcome {
    let mut pairs = 0;
    for n in 1..=3 {
        let mods = intervals(n);
        for x in &mods {
            for y in &mods {
                let (xr, yr) = (x.rep(n), y.rep(n));
                let euler = hom_dim(&xr, &yr) as i64 - euler_form(xr.dims(), yr.dims());
                let counted = ext_dim_bruteforce(&xr, &yr) as i64;
                if euler != counted {
                    return Err(format!(
                        "A{n}: Ext({}, {}) Euler {euler} vs enumeration {counted}",
                        x.id(),
                        y.id()
                    ));
                }
                pairs += 1;
            }
        }
    }
    let renaming = [
        ("P1m1", "[3,3]"),
        ("S3", "[2,2]"),
        ("S2", "[1,1]"),
        ("I2m1", "[2,3]"),
        ("P2", "[1,2]"),
        ("S1m1", "[1,3]"),
    ];
    let fe = Fixture::FinalExample.build().map_err(|e| e.to_string())?;
    let a3 = generate_an(3).map_err(|e| e.to_string())?;
    let (t_fe, t_a3) = (
        gr_table(&fe).map_err(|e| e.to_string())?,
        gr_table(&a3).map_err(|e| e.to_string())?,
    );
    for (x, y) in renaming {
        let (x, y) = (IndecId::from(x), IndecId::from(y));
        if fe.theta(&x) != a3.theta(&y) || t_fe.measure(&x) != t_a3.measure(&y) {
            return Err(format!("{x} and {y} differ"));
        }
    }
    if t_fe.gr_chain != t_a3.gr_chain {
        return Err("GR chains differ".into());
    }
    Ok(format!(
        "{pairs} Ext dimensions agree; A3 table equals the final example under renaming"
    ))
}

fn theta_tower() -> Outcome {
    let fe = Fixture::FinalExample.build().map_err(|e| e.to_string())?;
    let tower = theta_infinity(&fe);
    let expected: BTreeSet<IndecId> = ["P1m1", "S3", "S2"].into_iter().map(IndecId::from).collect();
    if tower.members != expected || !tower.semibrick || tower.sms != SmsStatus::Yes {
        return Err(format!("{tower:?}"));
    }
    let closure = filt_closure(&fe, &tower.members, None).map_err(|e| e.to_string())?;
    for (i, id) in fe.ids().iter().enumerate() {
        let l = closure.length(&ObjectRef::single(id.clone()));
        if l != Some(fe.theta_at(i)) {
            return Err(format!("l({id}) = {l:?}, theta {}", fe.theta_at(i)));
        }
    }
    Ok("Θ_∞ = {P1m1, S2, S3}, semibrick, simple-minded; closure lengths equal theta on 6 objects".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden measure table", golden_table),
        ("bounded length on growing windows", window_signature),
        ("DP equals brute-force oracle", oracle_equivalence),
        ("chain order axioms", order_axioms),
        ("checker suites and negative controls", axiom_suites),
        ("generator cross-check", generator_cross_check),
        ("semibrick tower on the final example", theta_tower),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
