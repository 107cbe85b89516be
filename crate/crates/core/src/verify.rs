//! Verification suites over `Hol(C_n)` and the oracle, producing a
//! [`VerificationReport`].
//!
//! Every claim records how many cases it checked and, on failure, the first
//! counterexample found. Sampled checks draw from a ChaCha8 stream seeded by
//! [`VerifyConfig::seed`], so reports are reproducible byte for byte.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automorphisms::{self, AutData, VerificationOutcome};
use crate::error::{Error, Result};
use crate::holomorph::{HolContext, HolElem};
use crate::numtheory::{self, PrimitiveRootProfile};
use crate::oracle::{self, Presentation};

/// Default cap on `|G|` for every suite.
pub const DEFAULT_MAX_ORDER: u64 = 2000;
/// Groups up to this order get exhaustive pair checks.
pub const EXHAUSTIVE_PAIRS_LIMIT: u64 = 264;
/// Groups up to this order get exhaustive triple checks.
pub const EXHAUSTIVE_TRIPLES_LIMIT: u64 = 100;
/// Random cases drawn when a pair or triple check is sampled.
pub const SAMPLED_CASES: usize = 100_000;
/// Random `(g, m)` cases for the power formula on large groups.
pub const SAMPLED_POWER_CASES: usize = 2000;
/// Odd moduli checked by `completeness-odd` when the context modulus is even.
pub const ODD_COMPLETENESS_MODULI: [u64; 5] = [3, 5, 7, 9, 15];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Lemma23,
    Lemma24,
    Lemma31,
    Lemma32,
    GroupAxioms,
    Center,
    PsiHom,
    PsiBij,
    OracleMatch,
    Dihedral,
    CompletenessOdd,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Lemma23,
        Suite::Lemma24,
        Suite::Lemma31,
        Suite::Lemma32,
        Suite::GroupAxioms,
        Suite::Center,
        Suite::PsiHom,
        Suite::PsiBij,
        Suite::OracleMatch,
        Suite::Dihedral,
        Suite::CompletenessOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma23 => "lemma23",
            Suite::Lemma24 => "lemma24",
            Suite::Lemma31 => "lemma31",
            Suite::Lemma32 => "lemma32",
            Suite::GroupAxioms => "group-axioms",
            Suite::Center => "center",
            Suite::PsiHom => "psi-hom",
            Suite::PsiBij => "psi-bij",
            Suite::OracleMatch => "oracle-match",
            Suite::Dihedral => "dihedral",
            Suite::CompletenessOdd => "completeness-odd",
        }
    }

    /// Suites that need `n = 2p^e`; the others run on any `n` in range.
    pub fn needs_context(self) -> bool {
        !matches!(self, Suite::Dihedral | Suite::CompletenessOdd)
    }

    /// Parses a comma-separated list, keeping canonical order and dropping repeats.
    pub fn parse_list(csv: &str) -> Result<Vec<Suite>> {
        let mut set = BTreeSet::new();
        for name in csv.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            set.insert(name.parse::<Suite>()?);
        }
        if set.is_empty() {
            return Err(Error::Domain("no suites selected".into()));
        }
        Ok(set.into_iter().collect())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Domain(format!("unknown suite '{s}' (known: {})", known.join(", ")))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n: u64,
    pub k: Option<u64>,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub max_order: u64,
    /// Record per-suite wall time. Off by default so reports stay byte-stable.
    pub timings: bool,
}

impl VerifyConfig {
    /// All suites, seed 0, default size cap, no timings.
    pub fn new(n: u64) -> Self {
        Self {
            n,
            k: None,
            suites: Suite::ALL.to_vec(),
            seed: 0,
            max_order: DEFAULT_MAX_ORDER,
            timings: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub claims: Vec<Claim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContextEcho {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub context: ContextEcho,
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn claims(&self) -> impl Iterator<Item = &Claim> {
        self.suites.iter().flat_map(|s| s.claims.iter())
    }

    pub fn all_passed(&self) -> bool {
        self.claims().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let c = &self.context;
        match (c.p, c.e, c.phi, c.k) {
            (Some(p), Some(e), Some(phi), Some(k)) => {
                let _ = writeln!(out, "Hol(C_{}): n = 2·{p}^{e}, φ(n) = {phi}, k = {k}", c.n);
            }
            _ => {
                let _ = writeln!(out, "n = {} (oracle suites only)", c.n);
            }
        }
        for suite in &self.suites {
            match suite.millis {
                Some(ms) => {
                    let _ = writeln!(out, "[{}] {ms} ms", suite.name);
                }
                None => {
                    let _ = writeln!(out, "[{}]", suite.name);
                }
            }
            for claim in &suite.claims {
                let status = match claim.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                let _ = writeln!(
                    out,
                    "  {status} {} ({} cases): {}",
                    claim.id, claim.cases, claim.anchor
                );
                if let Some(cx) = &claim.counterexample {
                    let _ = writeln!(out, "       counterexample: {cx}");
                }
            }
        }
        let total = self.claims().count();
        let failed = self.claims().filter(|c| c.status == Status::Fail).count();
        if failed == 0 {
            let _ = writeln!(out, "all {total} claims passed");
        } else {
            let _ = writeln!(out, "{failed} of {total} claims FAILED");
        }
        out
    }
}

/// Counts cases and keeps the first counterexample.
#[derive(Default)]
struct Tally {
    cases: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn claim(self, id: &str, anchor: &str) -> Claim {
        Claim {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if self.counterexample.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

/// Turns an oracle error inside a claim into a failed claim.
fn claim_or_error(id: &str, anchor: &str, tally: Result<Tally>) -> Claim {
    match tally {
        Ok(t) => t.claim(id, anchor),
        Err(e) => Claim {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Fail,
            cases: 0,
            counterexample: Some(format!("error: {e}")),
        },
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Runs the selected suites. Input problems (wrong shape of `n`, size cap,
/// out-of-range `n` for oracle suites) are errors; failed checks are data in
/// the report.
pub fn run(config: &VerifyConfig) -> Result<VerificationReport> {
    let needs_context = config.suites.iter().any(|s| s.needs_context());
    let ctx = if needs_context {
        let ctx = HolContext::new(config.n, config.k)?;
        if ctx.group_order() > config.max_order {
            return Err(Error::SizeLimit {
                size: ctx.group_order(),
                limit: config.max_order,
            });
        }
        Some(ctx)
    } else {
        HolContext::new(config.n, config.k).ok()
    };
    for suite in &config.suites {
        if !suite.needs_context() {
            check_oracle_range(*suite, config)?;
        }
    }

    let context = match &ctx {
        Some(c) => ContextEcho {
            n: c.n(),
            p: Some(c.p()),
            e: Some(c.e()),
            phi: Some(c.phi()),
            k: Some(c.k()),
        },
        None => ContextEcho {
            n: config.n,
            p: None,
            e: None,
            phi: None,
            k: None,
        },
    };

    let mut suites = Vec::new();
    for &suite in &config.suites {
        let start = Instant::now();
        let claims = match (suite, &ctx) {
            (Suite::Dihedral, _) => dihedral_suite(config.n),
            (Suite::CompletenessOdd, _) => completeness_suite(config.n),
            (_, Some(ctx)) => structure_suite(suite, ctx, config.seed),
            (_, None) => unreachable!("context checked above"),
        };
        suites.push(SuiteReport {
            name: suite.name().to_string(),
            claims,
            millis: config.timings.then(|| start.elapsed().as_millis() as u64),
        });
    }
    Ok(VerificationReport { context, suites })
}

fn check_oracle_range(suite: Suite, config: &VerifyConfig) -> Result<()> {
    let n = config.n;
    let moduli: Vec<u64> = match suite {
        Suite::CompletenessOdd if n.is_multiple_of(2) => ODD_COMPLETENESS_MODULI.to_vec(),
        _ => vec![n],
    };
    let min = if suite == Suite::Dihedral { 3 } else { 2 };
    for m in moduli {
        if !(min..=oracle::GENERAL_HOLOMORPH_MAX_N).contains(&m) {
            return Err(Error::OutOfRange {
                value: m,
                min,
                max: oracle::GENERAL_HOLOMORPH_MAX_N,
            });
        }
        let size = m * numtheory::totient(m)?;
        if size > config.max_order {
            return Err(Error::SizeLimit {
                size,
                limit: config.max_order,
            });
        }
    }
    Ok(())
}

fn structure_suite(suite: Suite, ctx: &HolContext, seed: u64) -> Vec<Claim> {
    match suite {
        Suite::Lemma23 => vec![power_congruence_claim(ctx)],
        Suite::Lemma24 => primitive_root_claims(ctx),
        Suite::Lemma31 => vec![conjugation_claim(ctx), relations_claim(ctx)],
        Suite::Lemma32 => vec![power_formula_claim(ctx, seed), order_divides_claim(ctx)],
        Suite::GroupAxioms => group_axiom_claims(ctx, seed),
        Suite::Center => center_claims(ctx, seed),
        Suite::PsiHom => psi_hom_claims(ctx, seed),
        Suite::PsiBij => psi_bij_claims(ctx, seed),
        Suite::OracleMatch => oracle_match_claims(ctx),
        Suite::Dihedral | Suite::CompletenessOdd => unreachable!("oracle-only suite"),
    }
}

fn power_congruence_claim(ctx: &HolContext) -> Claim {
    let mut cases: BTreeSet<(u64, u32)> = [3u64, 5, 7, 11]
        .into_iter()
        .flat_map(|p| (1..=4).map(move |e| (p, e)))
        .collect();
    for e in 1..=ctx.e().max(4) {
        match ctx.p().checked_pow(e) {
            Some(pe) if pe <= 1_000_000 => {
                cases.insert((ctx.p(), e));
            }
            _ => break,
        }
    }
    let mut tally = Tally::default();
    for (p, e) in cases {
        for k in (1..p.pow(e)).step_by(p as usize) {
            let holds = numtheory::power_congruence_holds(k as i64, p, e);
            tally.check(matches!(holds, Ok(true)), || {
                format!("k = {k}, p = {p}, e = {e}: {holds:?}")
            });
        }
    }
    tally.claim(
        "lemma23.power-congruence",
        "k ≡ 1 (mod p) implies k^(p^(e-1)) ≡ 1 (mod p^e)",
    )
}

fn primitive_root_claims(ctx: &HolContext) -> Vec<Claim> {
    let bound = ctx.n().max(500);
    let mut not_divisible = Tally::default();
    let mut gcd_two = Tally::default();
    let mut sum_zero = Tally::default();
    for n in (6..=bound).filter(|&n| numtheory::twice_odd_prime_power(n).is_ok()) {
        let phi = numtheory::totient(n).expect("n in range");
        for k in (2..n).filter(|&k| numtheory::gcd(k, n) == 1) {
            if numtheory::multiplicative_order(k as i64, n).ok() != Some(phi) {
                continue;
            }
            let profile =
                numtheory::primitive_root_profile(k as i64, n).expect("k is a primitive root");
            let expected = PrimitiveRootProfile::EXPECTED;
            let at = || format!("n = {n}, k = {k}: {profile:?}");
            not_divisible.check(
                profile.p_divides_k_minus_1 == expected.p_divides_k_minus_1,
                at,
            );
            gcd_two.check(profile.gcd_n_k_minus_1 == expected.gcd_n_k_minus_1, at);
            sum_zero.check(
                profile.geometric_sum_mod_n == expected.geometric_sum_mod_n,
                at,
            );
        }
    }
    vec![
        not_divisible.claim(
            "lemma24.p-does-not-divide-k-minus-1",
            "a primitive root k modulo 2p^e has k ≢ 1 (mod p)",
        ),
        gcd_two.claim(
            "lemma24.gcd-n-k-minus-1-is-2",
            "a primitive root k modulo n = 2p^e has gcd(n, k-1) = 2",
        ),
        sum_zero.claim(
            "lemma24.geometric-sum-vanishes",
            "1 + k + … + k^(φ(n)-1) ≡ 0 (mod n) for a primitive root k modulo 2p^e",
        ),
    ]
}

fn naive_power(ctx: &HolContext, g: HolElem, m: u64) -> HolElem {
    (0..m).fold(ctx.identity(), |acc, _| ctx.mul(acc, g))
}

fn conjugation_claim(ctx: &HolContext) -> Claim {
    let mut tally = Tally::default();
    for b in 0..2 * ctx.phi() {
        let yb = naive_power(ctx, ctx.y(), b);
        let yb_inv = ctx.inverse(yb);
        for a in 0..ctx.n() {
            let lhs = ctx.mul(yb, ctx.mul(ctx.elem(a as i64, 0), yb_inv));
            let rhs = ctx.elem(ctx.conjugate_by_y_power(a, b) as i64, 0);
            tally.check(lhs == rhs, || format!("a = {a}, b = {b}: {lhs} ≠ {rhs}"));
        }
    }
    tally.claim(
        "lemma31.conjugation-by-y-powers",
        "y^b x^a y^(-b) = x^(a·k^b)",
    )
}

fn relations_claim(ctx: &HolContext) -> Claim {
    let mut tally = Tally::default();
    let xn = naive_power(ctx, ctx.x(), ctx.n());
    tally.check(xn == ctx.identity(), || format!("x^n = {xn}"));
    let yphi = naive_power(ctx, ctx.y(), ctx.phi());
    tally.check(yphi == ctx.identity(), || format!("y^φ(n) = {yphi}"));
    let yxy = ctx.mul(ctx.mul(ctx.y(), ctx.x()), ctx.inverse(ctx.y()));
    tally.check(yxy == ctx.elem(ctx.k() as i64, 0), || {
        format!("y x y^-1 = {yxy}")
    });
    tally.claim(
        "relations.defining",
        "x^n = 1, y^φ(n) = 1, y x y^(-1) = x^k",
    )
}

fn power_formula_claim(ctx: &HolContext, seed: u64) -> Claim {
    let mut tally = Tally::default();
    let order = ctx.group_order();
    if order <= EXHAUSTIVE_PAIRS_LIMIT {
        for g in ctx.elements() {
            let mut acc = ctx.identity();
            for m in 0..=2 * order {
                let p = ctx.power(g, m);
                tally.check(p == acc, || {
                    format!("({g})^{m}: formula {p}, repeated product {acc}")
                });
                acc = ctx.mul(acc, g);
            }
        }
    } else {
        let mut rng = rng(seed);
        for _ in 0..SAMPLED_POWER_CASES {
            let g = ctx.element_at(rng.random_range(0..order as usize));
            let m = rng.random_range(0..=2 * order);
            let (p, acc) = (ctx.power(g, m), naive_power(ctx, g, m));
            tally.check(p == acc, || {
                format!("({g})^{m}: formula {p}, repeated product {acc}")
            });
        }
    }
    tally.claim(
        "lemma32.power-formula",
        "(x^a y^b)^m = x^(a(1 + k^b + … + k^(b(m-1)))) y^(bm)",
    )
}

fn order_divides_claim(ctx: &HolContext) -> Claim {
    let mut tally = Tally::default();
    for g in ctx.elements() {
        let t = ctx.element_order(g);
        tally.check(ctx.group_order().is_multiple_of(t), || {
            format!("{g} has order {t}")
        });
    }
    tally.claim(
        "lemma32.order-divides-group-order",
        "every element order divides n·φ(n)",
    )
}

fn group_axiom_claims(ctx: &HolContext, seed: u64) -> Vec<Claim> {
    let order = ctx.group_order() as usize;
    let mut assoc = Tally::default();
    let mut check = |g, h, l| {
        let (lhs, rhs) = (ctx.mul(ctx.mul(g, h), l), ctx.mul(g, ctx.mul(h, l)));
        assoc.check(lhs == rhs, || format!("({g})({h})({l}): {lhs} ≠ {rhs}"));
    };
    if ctx.group_order() <= EXHAUSTIVE_TRIPLES_LIMIT {
        for g in ctx.elements() {
            for h in ctx.elements() {
                for l in ctx.elements() {
                    check(g, h, l);
                }
            }
        }
    } else {
        let mut rng = rng(seed);
        for _ in 0..SAMPLED_CASES {
            let mut pick = || ctx.element_at(rng.random_range(0..order));
            let (g, h, l) = (pick(), pick(), pick());
            check(g, h, l);
        }
    }

    let mut inverse = Tally::default();
    let mut involution = Tally::default();
    for g in ctx.elements() {
        let gi = ctx.inverse(g);
        let ok = ctx.mul(g, gi) == ctx.identity() && ctx.mul(gi, g) == ctx.identity();
        inverse.check(ok, || format!("{g} · {gi} ≠ 1"));
        involution.check(ctx.inverse(gi) == g, || {
            format!("inverse of {gi} is not {g}")
        });
    }
    vec![
        assoc.claim(
            "group.associativity",
            "the semidirect product law is associative",
        ),
        inverse.claim("group.inverse", "(x^a y^b)^(-1) = x^(-a·k^(-b)) y^(-b)"),
        involution.claim("group.inverse-involution", "inversion is an involution"),
    ]
}

fn center_claims(ctx: &HolContext, seed: u64) -> Vec<Claim> {
    let expected = vec![ctx.identity(), ctx.involution()];
    let scanned = ctx.center();
    let mut scan = Tally::default();
    scan.check(scanned == expected, || format!("center = {scanned:?}"));

    let table = oracle::build_holomorph_table(ctx);
    let brute: Vec<HolElem> = oracle::center_bruteforce(&table)
        .into_iter()
        .map(|i| ctx.element_at(i))
        .collect();
    let mut agree = Tally::default();
    agree.check(brute == expected, || format!("table center = {brute:?}"));

    // −1 = k^(φ/2), so inversion on C_n is conjugation by y^(φ/2).
    let mut iota = Tally::default();
    let half = numtheory::mod_pow(ctx.k() as i64, ctx.phi() / 2, ctx.n()).expect("n ≥ 6");
    iota.check(half == ctx.n() - 1, || format!("k^(φ/2) = {half}"));
    let y_half = naive_power(ctx, ctx.y(), ctx.phi() / 2);
    let y_half_inv = ctx.inverse(y_half);
    for a in 0..ctx.n() {
        let xa = ctx.elem(a as i64, 0);
        let conj = ctx.mul(ctx.mul(y_half, xa), y_half_inv);
        iota.check(conj == ctx.inverse(xa), || {
            format!("y^(φ/2) x^{a} y^(-φ/2) = {conj}")
        });
    }

    vec![
        scan.claim("center.scan", "Z(Hol(C_n)) = {1, x^(n/2)} for even n"),
        agree.claim(
            "center.oracle-agrees",
            "the Cayley-table center is {1, x^(n/2)}",
        ),
        iota.claim(
            "center.inversion-is-y-power",
            "inversion on C_n equals conjugation by y^(φ(n)/2)",
        ),
        inner_claim(ctx, seed),
    ]
}

fn inner_claim(ctx: &HolContext, seed: u64) -> Claim {
    let id = "center.inner-kernel";
    let anchor = "g ↦ (h ↦ g h g^(-1)) is a homomorphism G → Aut(G) with kernel Z(G)";
    let run = || -> Result<Tally> {
        let mut tally = Tally::default();
        let inner: Vec<AutData> = ctx
            .elements()
            .map(|g| automorphisms::inner_automorphism(ctx, g))
            .collect::<Result<_>>()?;
        let kernel: Vec<HolElem> = ctx
            .elements()
            .filter(|&g| inner[ctx.index_of(g)] == AutData::identity())
            .collect();
        let center = vec![ctx.identity(), ctx.involution()];
        tally.check(kernel == center, || format!("kernel = {kernel:?}"));
        let mut check = |g: HolElem, h: HolElem| {
            let lhs = inner[ctx.index_of(ctx.mul(g, h))];
            let rhs = automorphisms::compose(ctx, inner[ctx.index_of(g)], inner[ctx.index_of(h)]);
            tally.check(lhs == rhs, || format!("inn({g}·{h}) = {lhs} ≠ {rhs}"));
        };
        if ctx.group_order() <= EXHAUSTIVE_PAIRS_LIMIT {
            for g in ctx.elements() {
                for h in ctx.elements() {
                    check(g, h);
                }
            }
        } else {
            let mut rng = rng(seed);
            let order = ctx.group_order() as usize;
            for _ in 0..SAMPLED_CASES {
                let g = ctx.element_at(rng.random_range(0..order));
                let h = ctx.element_at(rng.random_range(0..order));
                check(g, h);
            }
        }
        Ok(tally)
    };
    claim_or_error(id, anchor, run())
}

fn psi_hom_claims(ctx: &HolContext, seed: u64) -> Vec<Claim> {
    let auts = automorphisms::enumerate_aut(ctx);
    let order = auts.len();

    let mut hom = Tally::default();
    let mut check = |a: AutData, b: AutData| {
        let lhs = automorphisms::psi(ctx, automorphisms::compose(ctx, a, b));
        let rhs = ctx.mul(automorphisms::psi(ctx, a), automorphisms::psi(ctx, b));
        hom.check(lhs == rhs, || format!("ψ({a}∘{b}) = {lhs} ≠ {rhs}"));
    };
    if ctx.group_order() <= EXHAUSTIVE_PAIRS_LIMIT {
        for &a in &auts {
            for &b in &auts {
                check(a, b);
            }
        }
    } else {
        let mut rng = rng(seed);
        for _ in 0..SAMPLED_CASES {
            let a = auts[rng.random_range(0..order)];
            let b = auts[rng.random_range(0..order)];
            check(a, b);
        }
    }

    let mut pointwise = Tally::default();
    let mut check = |a: AutData, b: AutData, g: HolElem| {
        let lhs = automorphisms::apply(ctx, automorphisms::compose(ctx, a, b), g);
        let rhs = automorphisms::apply(ctx, a, automorphisms::apply(ctx, b, g));
        pointwise.check(lhs == rhs, || format!("({a}∘{b})({g}) = {lhs} ≠ {rhs}"));
    };
    if ctx.group_order() <= EXHAUSTIVE_TRIPLES_LIMIT {
        for &a in &auts {
            for &b in &auts {
                for g in ctx.elements() {
                    check(a, b, g);
                }
            }
        }
    } else {
        let mut rng = rng(seed.wrapping_add(1));
        for _ in 0..SAMPLED_CASES {
            let a = auts[rng.random_range(0..order)];
            let b = auts[rng.random_range(0..order)];
            let g = ctx.element_at(rng.random_range(0..order));
            check(a, b, g);
        }
    }

    vec![
        hom.claim("psi-hom.homomorphism", "ψ(α∘β) = ψ(α)ψ(β)"),
        pointwise.claim(
            "psi-hom.compose-pointwise",
            "(α∘β)(g) = α(β(g)) for the closed-form composition",
        ),
    ]
}

fn psi_bij_claims(ctx: &HolContext, seed: u64) -> Vec<Claim> {
    let auts = automorphisms::enumerate_aut(ctx);
    let images: Vec<HolElem> = auts.iter().map(|&a| automorphisms::psi(ctx, a)).collect();

    let mut injective = Tally::default();
    let mut seen = HashMap::new();
    for (&a, &g) in auts.iter().zip(&images) {
        let prior = seen.insert(g, a);
        injective.check(prior.is_none(), || {
            format!("ψ({a}) = ψ({}) = {g}", prior.unwrap())
        });
    }

    let mut surjective = Tally::default();
    let image_set: HashSet<HolElem> = images.iter().copied().collect();
    for g in ctx.elements() {
        surjective.check(image_set.contains(&g), || {
            format!("{g} is not in the image of ψ")
        });
    }

    let mut round_trip = Tally::default();
    for g in ctx.elements() {
        let back = automorphisms::psi(ctx, automorphisms::psi_inverse(ctx, g));
        round_trip.check(back == g, || format!("ψ(ψ⁻¹({g})) = {back}"));
    }

    let mut hypotheses = Tally::default();
    for &a in &auts {
        let outcome = automorphisms::validate_automorphism(ctx, a);
        hypotheses.check(outcome.passed(), || match outcome {
            VerificationOutcome::Fail { check, witness } => format!("{a}: {check}: {witness}"),
            VerificationOutcome::Pass => unreachable!(),
        });
    }

    let order = ctx.group_order() as usize;
    let mut bijective = Tally::default();
    for &a in &auts {
        let mut hit = vec![false; order];
        for g in ctx.elements() {
            hit[ctx.index_of(automorphisms::apply(ctx, a, g))] = true;
        }
        let missed = hit.iter().position(|&h| !h);
        bijective.check(missed.is_none(), || {
            format!("{a} misses {}", ctx.element_at(missed.unwrap()))
        });
    }

    let mut homomorphism = Tally::default();
    let mut check = |a: AutData, g: HolElem, h: HolElem| {
        let lhs = automorphisms::apply(ctx, a, ctx.mul(g, h));
        let rhs = ctx.mul(
            automorphisms::apply(ctx, a, g),
            automorphisms::apply(ctx, a, h),
        );
        homomorphism.check(lhs == rhs, || format!("{a}({g}·{h}) = {lhs} ≠ {rhs}"));
    };
    if ctx.group_order() <= 40 {
        for &a in &auts {
            for g in ctx.elements() {
                for h in ctx.elements() {
                    check(a, g, h);
                }
            }
        }
    } else {
        let mut rng = rng(seed.wrapping_add(2));
        for _ in 0..SAMPLED_CASES {
            let a = auts[rng.random_range(0..order)];
            let g = ctx.element_at(rng.random_range(0..order));
            let h = ctx.element_at(rng.random_range(0..order));
            check(a, g, h);
        }
    }

    vec![
        injective.claim("psi-bij.injective", "ψ is injective"),
        surjective.claim("psi-bij.surjective", "ψ is surjective"),
        round_trip.claim("psi-bij.round-trip", "ψ(ψ⁻¹(g)) = g"),
        hypotheses.claim(
            "psi-bij.extension-hypotheses",
            "every (c, j) satisfies the hypotheses for extending y^j on ⟨x⟩ with y ↦ x^c y",
        ),
        bijective.claim(
            "psi-bij.apply-bijective",
            "every α(c, j) is a bijection of G",
        ),
        homomorphism.claim(
            "psi-bij.apply-homomorphism",
            "every α(c, j) respects multiplication",
        ),
    ]
}

fn oracle_match_claims(ctx: &HolContext) -> Vec<Claim> {
    let count_id = "oracle-match.aut-count";
    let count_anchor = "|Aut(Hol(C_n))| = n·φ(n), by brute force";
    let same_id = "oracle-match.same-mappings";
    let same_anchor = "the brute-force automorphisms are exactly the maps α(c, j)";
    let psi_id = "oracle-match.psi-transcription";
    let psi_anchor = "ψ turns composition of brute-force automorphisms into multiplication in G";
    let iso_id = "oracle-match.isomorphism-found";
    let iso_anchor = "an isomorphism Hol(C_n) → Aut(Hol(C_n)) exists, found by search";

    let table = oracle::build_holomorph_table(ctx);
    let pres = Presentation::holomorph(ctx);
    let auts = match oracle::enumerate_automorphisms_bruteforce(&table, &pres) {
        Ok(a) => a,
        Err(e) => {
            return [
                (count_id, count_anchor),
                (same_id, same_anchor),
                (psi_id, psi_anchor),
                (iso_id, iso_anchor),
            ]
            .into_iter()
            .map(|(id, anchor)| claim_or_error(id, anchor, Err(Error::Consistency(e.to_string()))))
            .collect();
        }
    };

    let mut count = Tally::default();
    count.check(auts.len() as u64 == ctx.group_order(), || {
        format!(
            "found {} automorphisms, expected {}",
            auts.len(),
            ctx.group_order()
        )
    });

    let family: HashMap<Vec<usize>, AutData> = automorphisms::enumerate_aut(ctx)
        .into_iter()
        .map(|a| {
            let mapping = ctx
                .elements()
                .map(|g| ctx.index_of(automorphisms::apply(ctx, a, g)))
                .collect();
            (mapping, a)
        })
        .collect();
    let mut same = Tally::default();
    same.check(family.len() as u64 == ctx.group_order(), || {
        format!("the (c, j) family has only {} distinct maps", family.len())
    });
    let mut psi_index = Vec::with_capacity(auts.len());
    for hom in &auts {
        let found = family.get(hom.mapping()).copied();
        same.check(found.is_some(), || {
            let x = table.label(hom.image(table.generators()[0]));
            let y = table.label(hom.image(table.generators()[1]));
            format!("automorphism x ↦ {x}, y ↦ {y} is not of the form α(c, j)")
        });
        psi_index.push(found.map(|a| ctx.index_of(automorphisms::psi(ctx, a))));
    }
    same.check(auts.len() == family.len(), || {
        format!(
            "{} brute-force maps vs {} family maps",
            auts.len(),
            family.len()
        )
    });

    let aut_table = oracle::aut_group_table(&table, &auts);
    let psi_claim = match (
        &aut_table,
        psi_index.iter().copied().collect::<Option<Vec<_>>>(),
    ) {
        (Ok(aut_table), Some(psi_index)) => {
            let mut tally = Tally::default();
            for i in 0..aut_table.size() {
                for j in 0..aut_table.size() {
                    let lhs = psi_index[aut_table.mul(i, j)];
                    let rhs = table.mul(psi_index[i], psi_index[j]);
                    tally.check(lhs == rhs, || {
                        format!("ψ(α{i}∘α{j}) = {} ≠ {}", table.label(lhs), table.label(rhs))
                    });
                }
            }
            tally.claim(psi_id, psi_anchor)
        }
        (Err(e), _) => claim_or_error(psi_id, psi_anchor, Err(Error::Consistency(e.to_string()))),
        (_, None) => claim_or_error(
            psi_id,
            psi_anchor,
            Err(Error::Consistency(
                "some automorphism has no ψ-image".into(),
            )),
        ),
    };

    let iso_claim = claim_or_error(
        iso_id,
        iso_anchor,
        aut_table
            .map_err(|e| Error::Consistency(e.to_string()))
            .and_then(|aut_table| {
                let found = oracle::find_isomorphism(&table, &aut_table, &pres)?;
                let mut tally = Tally::default();
                tally.check(found.is_some_and(|h| h.is_bijective()), || {
                    "no isomorphism found".into()
                });
                Ok(tally)
            }),
    );

    vec![
        count.claim(count_id, count_anchor),
        same.claim(same_id, same_anchor),
        psi_claim,
        iso_claim,
    ]
}

fn dihedral_suite(n: u64) -> Vec<Claim> {
    let order_id = "dihedral.aut-order";
    let order_anchor = "|Aut(D_2n)| = n·φ(n)";
    let iso_id = "dihedral.isomorphic-to-holomorph";
    let iso_anchor = "Aut(D_2n) ≅ Hol(C_n)";
    let run = || -> Result<(Tally, Tally)> {
        let d = oracle::build_dihedral(n)?;
        let auts = oracle::enumerate_automorphisms_bruteforce(&d, &Presentation::dihedral(n)?)?;
        let expected = n * numtheory::totient(n)?;
        let mut order = Tally::default();
        order.check(auts.len() as u64 == expected, || {
            format!("n = {n}: |Aut(D_2n)| = {}, expected {expected}", auts.len())
        });
        let aut_table = oracle::aut_group_table(&d, &auts)?;
        let hol = oracle::build_general_holomorph(n)?;
        let mut iso = Tally::default();
        if hol.size() == aut_table.size() {
            let found =
                oracle::find_isomorphism(&hol, &aut_table, &Presentation::general_holomorph(n)?)?;
            iso.check(found.is_some(), || {
                format!("n = {n}: no isomorphism Hol(C_n) → Aut(D_2n)")
            });
        } else {
            iso.check(false, || {
                format!(
                    "n = {n}: orders {} and {} differ",
                    hol.size(),
                    aut_table.size()
                )
            });
        }
        Ok((order, iso))
    };
    match run() {
        Ok((order, iso)) => vec![
            order.claim(order_id, order_anchor),
            iso.claim(iso_id, iso_anchor),
        ],
        Err(e) => vec![
            claim_or_error(
                order_id,
                order_anchor,
                Err(Error::Consistency(e.to_string())),
            ),
            claim_or_error(iso_id, iso_anchor, Err(e)),
        ],
    }
}

fn completeness_suite(n: u64) -> Vec<Claim> {
    let moduli: Vec<u64> = if n % 2 == 1 {
        vec![n]
    } else {
        ODD_COMPLETENESS_MODULI.to_vec()
    };
    let mut center = Tally::default();
    let mut order = Tally::default();
    let mut inner_eq = Tally::default();
    let mut run = || -> Result<()> {
        for &m in &moduli {
            let g = oracle::build_general_holomorph(m)?;
            let z = oracle::center_bruteforce(&g);
            center.check(z.len() == 1, || format!("n = {m}: |Z| = {}", z.len()));
            let auts = oracle::enumerate_automorphisms_bruteforce(
                &g,
                &Presentation::general_holomorph(m)?,
            )?;
            let expected = m * numtheory::totient(m)?;
            order.check(auts.len() as u64 == expected, || {
                format!("n = {m}: |Aut| = {}, expected {expected}", auts.len())
            });
            let inner: BTreeSet<Vec<usize>> = oracle::inner_automorphisms(&g).into_iter().collect();
            let all: BTreeSet<Vec<usize>> = auts.into_iter().map(|h| h.into_mapping()).collect();
            inner_eq.check(inner == all, || {
                format!("n = {m}: |Inn| = {}, |Aut| = {}", inner.len(), all.len())
            });
        }
        Ok(())
    };
    let outcome = run();
    let anchors = [
        (
            "completeness-odd.trivial-center",
            "Z(Hol(C_n)) = 1 for odd n",
        ),
        (
            "completeness-odd.aut-order",
            "|Aut(Hol(C_n))| = n·φ(n) for odd n",
        ),
        (
            "completeness-odd.inner-equals-aut",
            "Aut(Hol(C_n)) = Inn(Hol(C_n)) for odd n",
        ),
    ];
    match outcome {
        Ok(()) => [center, order, inner_eq]
            .into_iter()
            .zip(anchors)
            .map(|(t, (id, anchor))| t.claim(id, anchor))
            .collect(),
        Err(e) => anchors
            .into_iter()
            .map(|(id, anchor)| claim_or_error(id, anchor, Err(Error::Consistency(e.to_string()))))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(
            Suite::parse_list("center,lemma23, center").unwrap(),
            vec![Suite::Lemma23, Suite::Center]
        );
        assert!(Suite::parse_list("nope").is_err());
        assert!(Suite::parse_list(",").is_err());
    }

    #[test]
    fn small_context_passes_everything() {
        let report = run(&VerifyConfig::new(6)).unwrap();
        for claim in report.claims() {
            assert_eq!(claim.status, Status::Pass, "{claim:?}");
            assert!(claim.cases > 0, "{claim:?}");
        }
        assert_eq!(report.context.k, Some(5));
    }

    #[test]
    fn wrong_shape_is_an_input_error() {
        assert!(matches!(
            run(&VerifyConfig::new(12)),
            Err(Error::Shape { .. })
        ));
        let mut cfg = VerifyConfig::new(9);
        cfg.suites = vec![Suite::CompletenessOdd];
        let report = run(&cfg).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.context.p, None);
    }

    #[test]
    fn size_cap_applies() {
        let mut cfg = VerifyConfig::new(50);
        cfg.max_order = 500;
        assert!(matches!(run(&cfg), Err(Error::SizeLimit { .. })));
        let mut cfg = VerifyConfig::new(59);
        cfg.suites = vec![Suite::Dihedral];
        assert!(matches!(run(&cfg), Err(Error::SizeLimit { .. })));
        let mut cfg = VerifyConfig::new(61);
        cfg.suites = vec![Suite::Dihedral];
        assert!(matches!(run(&cfg), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn failing_claims_carry_counterexamples() {
        let mut t = Tally::default();
        t.check(true, || unreachable!());
        t.check(false, || "first".into());
        t.check(false, || "second".into());
        let c = t.claim("x", "y");
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.cases, 3);
        assert_eq!(c.counterexample.as_deref(), Some("first"));
    }

    #[test]
    fn text_rendering_mentions_every_claim() {
        let mut cfg = VerifyConfig::new(10);
        cfg.suites = vec![Suite::Lemma31, Suite::Center];
        let report = run(&cfg).unwrap();
        let text = report.render_text();
        for claim in report.claims() {
            assert!(text.contains(&claim.id));
        }
        assert!(text.ends_with("claims passed\n"));
    }
}
