//! Acceptance suite. Prints one PASS/FAIL line per criterion; run with
//! `cargo test -p rbhopf-cli --test acceptance -- --nocapture` to see them.

use std::process::Command;

use rand::Rng;

use rbhopf::freemod::SmashKey;
use rbhopf::hopf::{group_algebra, random_element, sweedler_fixture, Algebra};
use rbhopf::instances::{build, radford_z2, resolve_mode, SuiteArgs};
use rbhopf::module::p_left;
use rbhopf::module::p_right;
use rbhopf::rb::{rb_check_pairs, rescale, sample_pairs, RbOperator};
use rbhopf::shuffle::{
    bosonize, nichols_component, proportional, serre_kernel, specialize_at_one, CartanData, ShuffleAlgebra,
};
use rbhopf::verify::SamplePlan;
use rbhopf::yd::{hsmash_pl_closed, smash, smash_pl_closed, AdjointYd};
use rbhopf::{CycloRes, Element, GroupElt, GroupSpec, LaurentPoly, Rational, ScalarMode, Word};

type L = LaurentPoly;

const NAMED: [&str; 8] = [
    "radford-z2",
    "graded-binomial",
    "hsmash-z",
    "hsmash-z3",
    "hsmash-sweedler",
    "uqplus-sl2",
    "uqplus-sl3",
    "uqplus-sl2-cyclo3",
];

const SEED: u64 = 7;
const PAIRS: usize = 100;
const TRIPLES: usize = 50;

fn sides(name: &str) -> &'static [&'static str] {
    if name.starts_with("hsmash") || name.starts_with("uqplus") {
        &["right", "left"]
    } else {
        &["right"]
    }
}

fn rbhopf(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rbhopf")).args(args).output().expect("binary runs");
    let mut text = String::from_utf8_lossy(&out.stdout).into_owned();
    text.push_str(&String::from_utf8_lossy(&out.stderr));
    (out.status.code().unwrap_or(-1), text)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn plan(mode: &ScalarMode, samples: usize) -> SamplePlan {
    SamplePlan::new(mode.clone(), SEED).with_samples(samples)
}

fn criterion_1() -> Result<String, String> {
    let mut runs = 0;
    for name in NAMED {
        for side in sides(name) {
            let pairs = PAIRS.to_string();
            let seed = SEED.to_string();
            let (code, out) = rbhopf(&[
                "rb-verify", "--instance", name, "--side", side, "--weight", "-1", "--pairs", &pairs, "--seed",
                &seed, "--format", "lines",
            ]);
            ensure(code == 0, || format!("{name} {side}: exit {code}\n{out}"))?;
            ensure(out.contains(&format!("checks={PAIRS}\n")), || format!("{name} {side}: {out}"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} projections, {PAIRS} pairs each"))
}

fn suite_everywhere(suite: &str, samples: usize) -> Result<String, String> {
    let mut runs = 0;
    for name in NAMED {
        let mode = resolve_mode(name, None, None).map_err(|e| e.to_string())?;
        let inst = build(name, &mode, None).map_err(|e| e.to_string())?;
        for side in sides(name) {
            let v = inst
                .run(&format!("{suite}:{side}"), &SuiteArgs::new(plan(&mode, samples)))
                .map_err(|e| e.to_string())?;
            ensure(v.passed, || format!("{name} {side}: {:?}", v.failure))?;
            ensure(v.checks >= samples, || format!("{name} {side}: only {} checks", v.checks))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs, {samples} samples each"))
}

fn criterion_4() -> Result<String, String> {
    let mode = ScalarMode::GenericQ;
    let m = radford_z2::<L>(&mode);
    let pi = m.pi_operator();
    let p = plan(&mode, PAIRS);
    let mut rng = p.rng(11);
    for _ in 0..PAIRS {
        let x = random_element(&m, &mut rng, &p);
        ensure(p_right(&m, &x) == pi.apply(&x), || format!("P_R ≠ Π at {x}"))?;
    }
    for a in -3..=3 {
        for b in -3..=3 {
            let k: Element<GroupElt, L> = Element::basis(GroupElt(vec![a, b]));
            let want = Element::basis(GroupElt(vec![0, b]));
            ensure(pi.apply(&k) == want, || format!("Π({k}) = {}", pi.apply(&k)))?;
            ensure(p_right(&m, &k) == want, || format!("P_R({k}) = {}", p_right(&m, &k)))?;
        }
    }
    Ok(format!("{PAIRS} sampled elements and 49 group-like keys"))
}

fn criterion_5() -> Result<String, String> {
    let s = smash(AdjointYd(sweedler_fixture()));
    let basis = Algebra::<L>::finite_basis(&s).ok_or("no finite basis")?;
    ensure(basis.len() == 16, || format!("{} keys", basis.len()))?;
    for k in basis {
        let m: Element<_, L> = Element::basis(k);
        let generic = p_left(&s, &m);
        ensure(hsmash_pl_closed(&s, &m) == generic, || format!("H#H closed form at {m}"))?;
        ensure(smash_pl_closed(&s, &m) == generic, || format!("smash closed form at {m}"))?;
    }
    let mut keys = 16;
    for spec in [GroupSpec::free(1), GroupSpec::cyclic(3, 1)] {
        let s = smash(AdjointYd(group_algebra(spec.clone())));
        for a in -3..=3 {
            for b in -3..=3 {
                let m: Element<_, L> = Element::basis(SmashKey::new(spec.reduce(vec![a]), spec.reduce(vec![b])));
                let generic = p_left(&s, &m);
                ensure(hsmash_pl_closed(&s, &m) == generic, || format!("H#H closed form at {m}"))?;
                ensure(smash_pl_closed(&s, &m) == generic, || format!("smash closed form at {m}"))?;
                keys += 1;
            }
        }
    }
    Ok(format!("{keys} keys"))
}

fn criterion_6() -> Result<String, String> {
    let alg: ShuffleAlgebra<L> =
        ShuffleAlgebra::new(CartanData::sl3(ScalarMode::GenericQ), GroupSpec::free(2)).map_err(|e| e.to_string())?;
    let comp = nichols_component(&alg, &[2, 1], false).map_err(|e| e.to_string())?;
    ensure(comp.rank == 2, || format!("rank {}", comp.rank))?;
    let rel = serre_kernel(&alg, 1, 2).map_err(|e| e.to_string())?;
    ensure(rel.kernel.len() == 1, || format!("kernel dimension {}", rel.kernel.len()))?;
    let limit = specialize_at_one(&rel.kernel[0]);
    let classical: Vec<Rational> = [1, -2, 1].iter().map(|&c| Rational::from_integer(c.into())).collect();
    ensure(proportional(&classical, &limit), || format!("limit {limit:?}"))?;
    let (code, out) = rbhopf(&["serre-check", "--instance", "uqplus-sl3"]);
    ensure(code == 0, || format!("serre-check exit {code}\n{out}"))?;
    Ok("rank 2, kernel dimension 1, classical limit ∝ (1,-2,1)".into())
}

fn criterion_7() -> Result<String, String> {
    let cyclo: ShuffleAlgebra<CycloRes> =
        ShuffleAlgebra::new(CartanData::sl2(ScalarMode::Cyclotomic(3)), GroupSpec::cyclic(3, 1))
            .map_err(|e| e.to_string())?;
    let cube = cyclo.shuffle_power(1, 3);
    ensure(cube.is_zero(), || format!("cube in cyclotomic(3) is {cube}"))?;
    let generic: ShuffleAlgebra<L> =
        ShuffleAlgebra::new(CartanData::sl2(ScalarMode::GenericQ), GroupSpec::free(1)).map_err(|e| e.to_string())?;
    let cube = generic.shuffle_power(1, 3);
    ensure(!cube.is_zero(), || "generic cube vanishes".into())?;
    Ok(format!("e1^3 = 0 at a cube root of unity, {cube} generically"))
}

fn criterion_8() -> Result<String, String> {
    let weights = ["1", "2", "q"];
    for name in NAMED {
        let mode = resolve_mode(name, None, None).map_err(|e| e.to_string())?;
        let inst = build(name, &mode, None).map_err(|e| e.to_string())?;
        for w in weights {
            let args = SuiteArgs::new(plan(&mode, PAIRS)).with_weight(rbhopf::parse::parse_scalar(w).unwrap());
            let v = inst.run("rb-verify:right", &args).map_err(|e| e.to_string())?;
            ensure(v.passed && v.checks == PAIRS, || format!("{name} ν = {w}: {:?}", v.failure))?;
        }
    }
    // One pair list, reused for every weight.
    let cfg = rbhopf::instances::named_cartan("uqplus-sl2").unwrap();
    let b = bosonize::<L>(&cfg).map_err(|e| e.to_string())?;
    let p = plan(&ScalarMode::GenericQ, PAIRS);
    let pairs = sample_pairs(&b, &p);
    for nu in [L::from_int(1), L::from_int(2), L::q()] {
        let op = rescale(RbOperator::new(|x| p_right(&b, x)), &L::from_int(-1), &nu).map_err(|e| e.to_string())?;
        let r = rb_check_pairs(&b, &op, &nu, &pairs, &p);
        ensure(r.passed(), || format!("ν = {nu}: {:?}", r.failure))?;
    }
    Ok(format!("ν ∈ {{1, 2, q}} on all 8 instances, {PAIRS} pairs each"))
}

fn criterion_9() -> Result<String, String> {
    for (cartan, rank) in [(CartanData::sl2(ScalarMode::GenericQ), 1u32), (CartanData::sl3(ScalarMode::GenericQ), 2)] {
        let alg: ShuffleAlgebra<L> =
            ShuffleAlgebra::new(cartan, GroupSpec::free(rank as usize)).map_err(|e| e.to_string())?;
        let mut rng = plan(&ScalarMode::GenericQ, TRIPLES).rng(9);
        let word = |rng: &mut rbhopf::verify::SampleRng| {
            let len = rng.gen_range(0..=2);
            Word((0..len).map(|_| rng.gen_range(1..=rank)).collect())
        };
        for _ in 0..TRIPLES {
            let (u, v, w) = (word(&mut rng), word(&mut rng), word(&mut rng));
            let (eu, ev, ew) = (Element::basis(u.clone()), Element::basis(v.clone()), Element::basis(w.clone()));
            let left = alg.shuffle(&alg.shuffle(&eu, &ev), &ew);
            let right = alg.shuffle(&eu, &alg.shuffle(&ev, &ew));
            ensure(left == right, || format!("({u}∗{v})∗{w} ≠ {u}∗({v}∗{w})"))?;
            let n = rank as usize;
            let want: Vec<u32> = (0..n).map(|i| u.content(n)[i] + v.content(n)[i] + w.content(n)[i]).collect();
            ensure(left.keys().all(|k| k.content(n) == want), || format!("grading of {left}"))?;
        }
        for i in 1..=rank {
            for j in 1..=rank {
                let prod = alg.shuffle(&Element::basis(Word::letter(i)), &Element::basis(Word::letter(j)));
                let mut want = Element::basis(Word(vec![i, j]));
                want.add_term(Word(vec![j, i]), alg.q(i, j).clone());
                ensure(prod == want, || format!("e{i}∗e{j} = {prod}"))?;
            }
        }
    }
    Ok(format!("{TRIPLES} triples each for sl2 and sl3"))
}

fn criterion_10() -> Result<String, String> {
    let cases: [(&str, &[&str]); 6] = [
        ("corrupted-antipode", &["check-hopf"]),
        ("corrupted-action", &["check-hopf-module", "--side", "right"]),
        ("corrupted-coaction", &["check-yd"]),
        ("corrupted-projection", &["rb-verify", "--side", "right"]),
        ("corrupted-projection", &["idempotency", "--side", "right"]),
        ("corrupted-projection", &["decomposition", "--side", "right"]),
    ];
    for (name, suite) in cases {
        let mut args = suite.to_vec();
        args.extend(["--instance", name, "--seed", "7"]);
        let (code, out) = rbhopf(&args);
        ensure(code == 1, || format!("{name} {suite:?}: exit {code}\n{out}"))?;
        ensure(out.contains("counterexample: "), || format!("{name}: no counterexample\n{out}"))?;
    }
    Ok("6 negative fixtures exit 1 with a counterexample".into())
}

type Criterion = fn() -> Result<String, String>;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 10] = [
        ("rb-verify at weight -1 on every named instance", criterion_1),
        ("projections are idempotent", || suite_everywhere("idempotency", PAIRS)),
        ("Hopf module algebra axioms", || suite_everywhere("check-hopf-module", TRIPLES)),
        ("radford-z2: P_R = id⋆(i∘S∘π)", criterion_4),
        ("closed-form P_L on H#H", criterion_5),
        ("sl3 Nichols rank and q-Serre relation", criterion_6),
        ("root-of-unity truncation e1^3 = 0", criterion_7),
        ("weight rescaling", criterion_8),
        ("quantum shuffle sanity", criterion_9),
        ("negative controls", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (title, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {title} ({detail})", i + 1),
            Err(e) => {
                println!("criterion {:>2} FAIL  {title}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
