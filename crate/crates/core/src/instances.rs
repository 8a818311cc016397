//! Named fixtures, and the suites and evaluations each one supports.
//!
//! An [`Instance`] is a type-erased bundle: the concrete algebra is built for
//! one scalar type and wrapped in closures keyed by suite name
//! (`check-hopf`, `rb-verify:right`, ...) and evaluation op
//! (`multiply`, `project-left`, ...). Arguments arrive as element-grammar
//! text and results leave as canonical renderings.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::freemod::{Element, GroupElt, GroupSpec, KeyContext, ParseKey};
use crate::hopf::{
    binomial_fixture, check_hopf_axioms, group_algebra, sweedler_fixture, Algebra, BrokenAntipode,
    GroupAlgebra, HopfAlgebra,
};
use crate::module::{
    check_left_hopf_module_algebra, check_right_hopf_module_algebra, graded_pair, p_left, p_right,
    radford_pair, IgnoreAction, LeftHopfModuleAlgebra, RadfordPair, RightHopfModuleAlgebra,
};
use crate::parse::parse_scalar;
use crate::rb::{decomposition_check, idempotent_check, rb_check, rescale, RbOperator};
use crate::report::Verdict;
use crate::scalars::{CycloRes, LaurentPoly, Rational, Scalar, ScalarError, ScalarMode};
use crate::shuffle::{
    nichols_component, serre_kernel, specialize_at_one, proportional, CartanConfig, CartanData, Coaction,
    ShuffleAlgebra, ShuffleError,
};
use crate::verify::{Counterexample, SamplePlan};
use crate::yd::{smash, yd_check, AdjointYd, YetterDrinfeld};

/// Every name accepted by [`build`]. `uqplus` needs a Cartan config.
pub const INSTANCE_NAMES: &[&str] = &[
    "radford-z2",
    "graded-binomial",
    "hsmash-z",
    "hsmash-z3",
    "hsmash-sweedler",
    "uqplus-sl2",
    "uqplus-sl3",
    "uqplus-sl2-cyclo3",
    "uqplus",
    "group",
    "sweedler",
    "binomial",
    "corrupted-antipode",
    "corrupted-action",
    "corrupted-coaction",
    "corrupted-projection",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
}

impl From<ScalarError> for RunError {
    fn from(e: ScalarError) -> Self {
        RunError::Usage(e.to_string())
    }
}

impl From<ShuffleError> for RunError {
    fn from(e: ShuffleError) -> Self {
        match e {
            ShuffleError::Resource(m) => RunError::Resource(m),
            other => RunError::Usage(other.to_string()),
        }
    }
}

/// Inputs shared by all suites. `weight` is read in the plan's scalar mode.
#[derive(Debug, Clone)]
pub struct SuiteArgs {
    pub plan: SamplePlan,
    pub weight: LaurentPoly,
}

impl SuiteArgs {
    pub fn new(plan: SamplePlan) -> Self {
        SuiteArgs { plan, weight: LaurentPoly::from_int(-1) }
    }

    pub fn with_weight(mut self, w: LaurentPoly) -> Self {
        self.weight = w;
        self
    }
}

type SuiteFn = Box<dyn Fn(&SuiteArgs) -> Result<Verdict, RunError> + Send + Sync>;
type OpFn = Box<dyn Fn(&[String]) -> Result<String, RunError> + Send + Sync>;

pub struct Instance {
    pub name: String,
    pub mode: ScalarMode,
    suites: BTreeMap<String, SuiteFn>,
    ops: BTreeMap<String, OpFn>,
}

impl Instance {
    fn new(name: &str, mode: ScalarMode) -> Self {
        Instance { name: name.to_string(), mode, suites: BTreeMap::new(), ops: BTreeMap::new() }
    }

    pub fn suites(&self) -> impl Iterator<Item = &str> {
        self.suites.keys().map(String::as_str)
    }

    pub fn ops(&self) -> impl Iterator<Item = &str> {
        self.ops.keys().map(String::as_str)
    }

    pub fn has_suite(&self, suite: &str) -> bool {
        self.suites.contains_key(suite)
    }

    /// Runs `suite`; an unsupported suite is a usage error.
    pub fn run(&self, suite: &str, args: &SuiteArgs) -> Result<Verdict, RunError> {
        let f = self.suites.get(suite).ok_or_else(|| {
            RunError::Usage(format!(
                "instance `{}` does not support `{suite}` (available: {})",
                self.name,
                self.suites().collect::<Vec<_>>().join(", ")
            ))
        })?;
        if args.plan.mode != self.mode {
            return Err(RunError::Usage(format!(
                "plan mode {} does not match instance mode {}",
                args.plan.mode, self.mode
            )));
        }
        f(args)
    }

    pub fn eval(&self, op: &str, args: &[String]) -> Result<String, RunError> {
        let f = self.ops.get(op).ok_or_else(|| {
            RunError::Usage(format!(
                "instance `{}` does not support op `{op}` (available: {})",
                self.name,
                self.ops().collect::<Vec<_>>().join(", ")
            ))
        })?;
        f(args)
    }

    fn suite(&mut self, key: &str, f: impl Fn(&SuiteArgs) -> Result<Verdict, RunError> + Send + Sync + 'static) {
        self.suites.insert(key.to_string(), Box::new(f));
    }

    fn op(&mut self, key: &str, f: impl Fn(&[String]) -> Result<String, RunError> + Send + Sync + 'static) {
        self.ops.insert(key.to_string(), Box::new(f));
    }
}

/// The Cartan config behind a `uqplus-*` name.
pub fn named_cartan(name: &str) -> Option<CartanConfig> {
    let cartan = match name {
        "uqplus-sl2" => CartanData::sl2(ScalarMode::GenericQ),
        "uqplus-sl3" => CartanData::sl3(ScalarMode::GenericQ),
        "uqplus-sl2-cyclo3" => CartanData::sl2(ScalarMode::Cyclotomic(3)),
        _ => return None,
    };
    let group = cartan.default_group();
    Some(CartanConfig { cartan, group })
}

/// Resolves the scalar mode of `name`. Instances tied to a Cartan datum take
/// its mode and reject a different `requested` mode.
pub fn resolve_mode(
    name: &str,
    requested: Option<&ScalarMode>,
    cartan: Option<&CartanConfig>,
) -> Result<ScalarMode, RunError> {
    let fixed = match name {
        "uqplus" => Some(
            cartan
                .ok_or_else(|| RunError::Usage("instance `uqplus` needs --cartan".into()))?
                .cartan
                .mode()
                .clone(),
        ),
        _ => named_cartan(name).map(|c| c.cartan.mode().clone()),
    };
    match (fixed, requested) {
        (Some(f), Some(r)) if &f != r => Err(RunError::Usage(format!(
            "instance `{name}` is defined over {f}; --scalar {r} conflicts"
        ))),
        (Some(f), _) => Ok(f),
        (None, Some(r)) => Ok(r.clone()),
        (None, None) => Ok(ScalarMode::GenericQ),
    }
}

/// Builds a named instance over `mode` (see [`resolve_mode`]).
pub fn build(name: &str, mode: &ScalarMode, cartan: Option<&CartanConfig>) -> Result<Instance, RunError> {
    match mode {
        ScalarMode::Rational { .. } => build_typed::<Rational>(name, mode, cartan),
        ScalarMode::GenericQ => build_typed::<LaurentPoly>(name, mode, cartan),
        ScalarMode::Cyclotomic(_) => build_typed::<CycloRes>(name, mode, cartan),
    }
}

fn plan0(mode: &ScalarMode) -> SamplePlan {
    SamplePlan::new(mode.clone(), 0)
}

/// `ℤ² ⇄ ℤ` with `i(K1) = K1` and `π(K1^a K2^b) = K1^a`.
pub fn radford_z2<S: Scalar>(mode: &ScalarMode) -> RadfordPair<'static, GroupAlgebra, GroupAlgebra, S> {
    radford_pair(
        group_algebra(GroupSpec::free(2)),
        group_algebra(GroupSpec::free(1)),
        |k: &GroupElt| Element::basis(GroupElt(vec![k.0[0], 0])),
        |k: &GroupElt| Element::basis(GroupElt(vec![k.0[0]])),
        &plan0(mode),
    )
    .expect("π∘i = id holds by construction")
}

/// The projection of `radford-z2` with the images of the `K2^0` and `K2^1`
/// classes swapped.
pub fn corrupted_projection<S: Scalar>() -> RbOperator<'static, GroupElt, S> {
    RbOperator::from_basis(|k: &GroupElt| {
        let b = match k.0[1] {
            0 => 1,
            1 => 0,
            b => b,
        };
        Element::basis(GroupElt(vec![0, b]))
    })
}

fn build_typed<S: Scalar>(name: &str, mode: &ScalarMode, cartan: Option<&CartanConfig>) -> Result<Instance, RunError> {
    let mut inst = Instance::new(name, mode.clone());
    let z = |rank| KeyContext { letters: None, group: Some(GroupSpec::free(rank)) };
    match name {
        "radford-z2" => {
            let m = Arc::new(radford_z2::<S>(mode));
            add_hopf::<_, S>(&mut inst, Arc::new(group_algebra(GroupSpec::free(2))), z(2));
            add_algebra::<_, S>(&mut inst, m.clone(), z(2));
            add_right::<_, S>(&mut inst, m, z(2));
        }
        "graded-binomial" => {
            let m = Arc::new(graded_pair::<_, S>(binomial_fixture(), &plan0(mode)).expect("π∘i = id"));
            add_hopf::<_, S>(&mut inst, Arc::new(binomial_fixture()), KeyContext::default());
            add_algebra::<_, S>(&mut inst, m.clone(), KeyContext::default());
            add_right::<_, S>(&mut inst, m, KeyContext::default());
        }
        "hsmash-z" | "hsmash-z3" => {
            let spec = if name == "hsmash-z" { GroupSpec::free(1) } else { GroupSpec::cyclic(3, 1) };
            let ctx = KeyContext { letters: None, group: Some(spec.clone()) };
            add_hopf::<_, S>(&mut inst, Arc::new(group_algebra(spec.clone())), ctx.clone());
            add_yd::<_, S>(&mut inst, Arc::new(AdjointYd(group_algebra(spec.clone()))));
            add_smash::<_, S>(&mut inst, Arc::new(smash(AdjointYd(group_algebra(spec)))), ctx);
        }
        "hsmash-sweedler" => {
            let ctx = KeyContext::default();
            add_hopf::<_, S>(&mut inst, Arc::new(sweedler_fixture()), ctx.clone());
            add_yd::<_, S>(&mut inst, Arc::new(AdjointYd(sweedler_fixture())));
            add_smash::<_, S>(&mut inst, Arc::new(smash(AdjointYd(sweedler_fixture()))), ctx);
        }
        "uqplus" | "uqplus-sl2" | "uqplus-sl3" | "uqplus-sl2-cyclo3" => {
            let cfg = match named_cartan(name) {
                Some(c) => c,
                None => cartan.cloned().ok_or_else(|| RunError::Usage("instance `uqplus` needs --cartan".into()))?,
            };
            let ctx = KeyContext { letters: Some(cfg.cartan.rank() as u32), group: Some(cfg.group.clone()) };
            let v = Arc::new(ShuffleAlgebra::<S>::new(cfg.cartan.clone(), cfg.group.clone())?);
            add_hopf::<_, S>(&mut inst, Arc::new(group_algebra(cfg.group.clone())), ctx.clone());
            add_yd::<_, S>(&mut inst, v.clone());
            let (vv, c) = (v.clone(), ctx.clone());
            let mode = mode.clone();
            inst.op("shuffle", move |args| {
                fold_product(args, |a: &Element<_, S>, b| vv.shuffle(a, b), &c, &mode)
            });
            add_smash::<_, S>(
                &mut inst,
                Arc::new(smash(ShuffleAlgebra::<S>::new(cfg.cartan.clone(), cfg.group.clone())?)),
                ctx,
            );
        }
        "group" => add_hopf::<_, S>(&mut inst, Arc::new(group_algebra(GroupSpec::free(2))), z(2)),
        "sweedler" => add_hopf::<_, S>(&mut inst, Arc::new(sweedler_fixture()), KeyContext::default()),
        "binomial" => add_hopf::<_, S>(&mut inst, Arc::new(binomial_fixture()), KeyContext::default()),
        "corrupted-antipode" => {
            add_hopf::<_, S>(&mut inst, Arc::new(BrokenAntipode(group_algebra(GroupSpec::free(2)))), z(2))
        }
        "corrupted-action" => {
            let m = Arc::new(IgnoreAction(radford_z2::<S>(mode)));
            inst.suite("check-hopf-module:right", move |a| {
                Ok(Verdict::from_report(check_right_hopf_module_algebra(&*m, &a.plan)))
            });
        }
        "corrupted-coaction" => {
            let c = CartanData::sl2(mode.clone());
            let g = c.default_group();
            let v = Arc::new(ShuffleAlgebra::<S>::with_coaction(c, g, Coaction::CorruptLetters)?);
            add_yd::<_, S>(&mut inst, v);
        }
        "corrupted-projection" => {
            let m = Arc::new(radford_z2::<S>(mode));
            let p = Arc::new(corrupted_projection::<S>());
            add_projection_suites(&mut inst, "right", m.clone(), move |x| p.apply(x));
            add_algebra::<_, S>(&mut inst, m, z(2));
        }
        other => {
            return Err(RunError::Usage(format!(
                "unknown instance `{other}` (known: {})",
                INSTANCE_NAMES.join(", ")
            )))
        }
    }
    Ok(inst)
}

fn parse_arg<K: ParseKey + crate::freemod::BasisKey, S: Scalar>(
    text: &str,
    ctx: &KeyContext,
    mode: &ScalarMode,
) -> Result<Element<K, S>, RunError> {
    Element::parse(text, ctx, mode).map_err(|e| RunError::Usage(format!("cannot parse `{text}`: {e}")))
}

fn fold_product<K: ParseKey + crate::freemod::BasisKey, S: Scalar>(
    args: &[String],
    mul: impl Fn(&Element<K, S>, &Element<K, S>) -> Element<K, S>,
    ctx: &KeyContext,
    mode: &ScalarMode,
) -> Result<String, RunError> {
    let Some((first, rest)) = args.split_first() else {
        return Err(RunError::Usage("expected at least one element".into()));
    };
    let mut acc = parse_arg::<K, S>(first, ctx, mode)?;
    for a in rest {
        acc = mul(&acc, &parse_arg(a, ctx, mode)?);
    }
    Ok(acc.to_string())
}

fn single<'a>(args: &'a [String], op: &str) -> Result<&'a str, RunError> {
    match args {
        [x] => Ok(x),
        _ => Err(RunError::Usage(format!("`{op}` takes exactly one element, got {}", args.len()))),
    }
}

fn add_hopf<H, S>(inst: &mut Instance, h: Arc<H>, ctx: KeyContext)
where
    H: HopfAlgebra<S> + 'static,
    H::Key: ParseKey,
    S: Scalar,
{
    let hh = h.clone();
    inst.suite("check-hopf", move |a| Ok(Verdict::from_report(check_hopf_axioms(&*hh, &a.plan))));
    let mode = inst.mode.clone();
    inst.op("coproduct", move |args| {
        let x = parse_arg::<H::Key, S>(single(args, "coproduct")?, &ctx, &mode)?;
        Ok(h.coproduct(&x).to_string())
    });
}

fn add_algebra<A, S>(inst: &mut Instance, alg: Arc<A>, ctx: KeyContext)
where
    A: Algebra<S> + 'static,
    A::Key: ParseKey,
    S: Scalar,
{
    let mode = inst.mode.clone();
    inst.op("multiply", move |args| fold_product(args, |x, y| alg.mul(x, y), &ctx, &mode));
}

/// The `rb-verify`, `idempotency` and `decomposition` suites of a projection.
fn add_projection_suites<A, S>(
    inst: &mut Instance,
    side: &str,
    alg: Arc<A>,
    p: impl Fn(&Element<A::Key, S>) -> Element<A::Key, S> + Send + Sync + Clone + 'static,
) where
    A: Algebra<S> + 'static,
    S: Scalar,
{
    let (a1, p1) = (alg.clone(), p.clone());
    inst.suite(&format!("rb-verify:{side}"), move |args| {
        let nu = S::specialize(&args.weight, &args.plan.mode)?;
        let op = rescale(RbOperator::new(p1.clone()), &S::from_int(-1), &nu)?;
        Ok(Verdict::from_rb("rb-verify", rb_check(&*a1, &op, &nu, &args.plan)))
    });
    let (a2, p2) = (alg.clone(), p.clone());
    inst.suite(&format!("idempotency:{side}"), move |args| {
        let op = RbOperator::new(p2.clone());
        Ok(Verdict::from_report(idempotent_check(&*a2, &op, &args.plan)))
    });
    inst.suite(&format!("decomposition:{side}"), move |args| {
        let op = RbOperator::new(p.clone());
        Ok(Verdict::from_report(decomposition_check(&*alg, &op, &args.plan)))
    });
}

fn add_right<M, S>(inst: &mut Instance, m: Arc<M>, ctx: KeyContext)
where
    M: RightHopfModuleAlgebra<S> + 'static,
    M::Key: ParseKey,
    S: Scalar,
{
    let mm = m.clone();
    add_projection_suites(inst, "right", m.clone(), move |x| p_right(&*mm, x));
    let mm = m.clone();
    inst.suite("check-hopf-module:right", move |a| {
        Ok(Verdict::from_report(check_right_hopf_module_algebra(&*mm, &a.plan)))
    });
    let mode = inst.mode.clone();
    inst.op("project-right", move |args| {
        let x = parse_arg::<M::Key, S>(single(args, "project-right")?, &ctx, &mode)?;
        Ok(p_right(&*m, &x).to_string())
    });
}

fn add_left<M, S>(inst: &mut Instance, m: Arc<M>, ctx: KeyContext)
where
    M: LeftHopfModuleAlgebra<S> + 'static,
    M::Key: ParseKey,
    S: Scalar,
{
    let mm = m.clone();
    add_projection_suites(inst, "left", m.clone(), move |x| p_left(&*mm, x));
    let mm = m.clone();
    inst.suite("check-hopf-module:left", move |a| {
        Ok(Verdict::from_report(check_left_hopf_module_algebra(&*mm, &a.plan)))
    });
    let mode = inst.mode.clone();
    inst.op("project-left", move |args| {
        let x = parse_arg::<M::Key, S>(single(args, "project-left")?, &ctx, &mode)?;
        Ok(p_left(&*m, &x).to_string())
    });
}

fn add_yd<V, S>(inst: &mut Instance, v: Arc<V>)
where
    V: YetterDrinfeld<S> + 'static,
    S: Scalar,
{
    inst.suite("check-yd", move |a| Ok(Verdict::from_report(yd_check(&*v, &a.plan))));
}

/// Both Hopf module structures of a smash product, plus `smash`/`multiply`.
fn add_smash<V, S>(inst: &mut Instance, s: Arc<crate::yd::Smash<V>>, ctx: KeyContext)
where
    V: YetterDrinfeld<S> + 'static,
    V::Key: ParseKey,
    crate::module::HKey<V, S>: ParseKey,
    S: Scalar,
{
    add_algebra(inst, s.clone(), ctx.clone());
    let (ss, c, mode) = (s.clone(), ctx.clone(), inst.mode.clone());
    inst.op("smash", move |args| fold_product(args, |x, y| ss.mul(x, y), &c, &mode));
    add_right(inst, s.clone(), ctx.clone());
    add_left(inst, s, ctx);
}

/// Rank of one content-graded Nichols component. Fails only when `expect`
/// is given and differs.
pub fn run_nichols_rank(
    cfg: &CartanConfig,
    content: &[u32],
    allow_large: bool,
    expect: Option<usize>,
) -> Result<Verdict, RunError> {
    match cfg.cartan.mode() {
        ScalarMode::Rational { .. } => nichols_rank_typed::<Rational>(cfg, content, allow_large, expect),
        ScalarMode::GenericQ => nichols_rank_typed::<LaurentPoly>(cfg, content, allow_large, expect),
        ScalarMode::Cyclotomic(_) => nichols_rank_typed::<CycloRes>(cfg, content, allow_large, expect),
    }
}

fn nichols_rank_typed<S: Scalar>(
    cfg: &CartanConfig,
    content: &[u32],
    allow_large: bool,
    expect: Option<usize>,
) -> Result<Verdict, RunError> {
    let alg = ShuffleAlgebra::<S>::new(cfg.cartan.clone(), cfg.group.clone())?;
    let comp = nichols_component(&alg, content, allow_large)?;
    let content_text = content.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let mut v = Verdict::new("nichols-rank")
        .detail("content", &content_text)
        .detail("words", comp.words.len())
        .detail("rank", comp.rank);
    v.checks = 1;
    if let Some(e) = expect {
        v = v.detail("expected-rank", e);
        if e != comp.rank {
            v = v.fail(Counterexample {
                identity: format!("rank = {e}"),
                witnesses: vec![("content".into(), content_text), ("rank".into(), comp.rank.to_string())],
            });
        }
    }
    Ok(v)
}

/// The q-Serre relation for every ordered pair of distinct letters: the
/// component of content `(1 − a_ij)ε_i + ε_j` must have a one-dimensional
/// relation space, and over generic `q` its classical limit must be
/// proportional to `ad(e_i)^{1−a_ij}(e_j)`.
pub fn run_serre_check(cfg: &CartanConfig, pair: Option<(u32, u32)>) -> Result<Verdict, RunError> {
    match cfg.cartan.mode() {
        ScalarMode::Rational { .. } => serre_typed::<Rational>(cfg, pair, |_| None),
        ScalarMode::GenericQ => serre_typed::<LaurentPoly>(cfg, pair, |v| Some(specialize_at_one(v))),
        ScalarMode::Cyclotomic(_) => serre_typed::<CycloRes>(cfg, pair, |_| None),
    }
}

/// `Σ_p (−1)^{n−p} C(n, p)` on the sequences with `p` copies of `i` before `j`.
fn classical_serre(words: &[crate::freemod::Word], i: u32) -> Vec<Rational> {
    let n = words.first().map_or(0, |w| w.len() as i64 - 1);
    words
        .iter()
        .map(|w| {
            let p = w.letters().iter().take_while(|&&l| l == i).count() as i64;
            let mut c = Rational::from_integer(1.into());
            for t in 0..p {
                c = c * Rational::from_integer((n - t).into()) / Rational::from_integer((t + 1).into());
            }
            if (n - p) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

fn serre_typed<S: Scalar>(
    cfg: &CartanConfig,
    pair: Option<(u32, u32)>,
    classical: impl Fn(&[S]) -> Option<Vec<Rational>>,
) -> Result<Verdict, RunError> {
    let n = cfg.cartan.rank() as u32;
    let pairs: Vec<(u32, u32)> = match pair {
        Some(p) => vec![p],
        None => (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect(),
    };
    if pairs.is_empty() {
        return Err(RunError::Usage("serre-check needs at least two letters".into()));
    }
    let alg = ShuffleAlgebra::<S>::new(cfg.cartan.clone(), cfg.group.clone())?;
    let mut v = Verdict::new("serre-check");
    for (i, j) in pairs {
        let rel = serre_kernel(&alg, i, j)?;
        let tag = format!("({i},{j})");
        let show = |xs: &[String]| format!("({})", xs.join(", "));
        v.identities.push(format!("q-Serre relation {tag}"));
        v.checks += 1;
        v = v
            .detail(&format!("rank{tag}"), rel.component.rank)
            .detail(&format!("kernel-dim{tag}"), rel.kernel.len());
        let words: Vec<String> = rel.component.words.iter().map(|w| w.to_string()).collect();
        v = v.detail(&format!("sequences{tag}"), show(&words));
        let mut problem = None;
        if rel.kernel.len() != 1 {
            problem = Some(format!("kernel dimension {} ≠ 1", rel.kernel.len()));
        } else {
            let kv: Vec<String> = rel.kernel[0].iter().map(|c| c.to_string()).collect();
            v = v.detail(&format!("kernel{tag}"), show(&kv));
            if let Some(limit) = classical(&rel.kernel[0]) {
                let want = classical_serre(&rel.component.words, i);
                let lv: Vec<String> = limit.iter().map(|c| c.to_string()).collect();
                v = v.detail(&format!("classical-limit{tag}"), show(&lv));
                if !proportional(&want, &limit) {
                    let wv: Vec<String> = want.iter().map(|c| c.to_string()).collect();
                    problem = Some(format!("classical limit not proportional to {}", show(&wv)));
                }
            }
        }
        if let Some(msg) = problem {
            return Ok(v.fail(Counterexample {
                identity: format!("q-Serre relation {tag}"),
                witnesses: vec![("reason".into(), msg)],
            }));
        }
    }
    Ok(v)
}

/// Reads `text` in the scalar grammar, e.g. `-1`, `2`, `q`, `q^2+1`.
pub fn parse_weight(text: &str) -> Result<LaurentPoly, RunError> {
    parse_scalar(text).map_err(|e| RunError::Usage(format!("bad weight `{text}`: {e}")))
}
