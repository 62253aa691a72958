//! Named verification suites and their reports.
//!
//! A report is a pure function of `(suite, seed, trials)`: checks are sorted
//! by name before rendering, so identical configurations produce
//! byte-identical output regardless of how the checks were scheduled.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::thread;

use serde::Serialize;

use crate::actions::{
    check_a_vs_b, check_field_equivariance, check_mixed_identity, check_orbit_geometry,
    check_orthogonality, check_parallelizability, spin_generators, verify_proof_steps, GroupWord,
    Lemma, OctonionMap, SandwichMap, SpinRealization, ORBIT_RANDOM_WORDS,
};
use crate::check::{all_of, CheckResult, Status, Witness};
use crate::clifford::{
    build_rep, check_clifford_relations, check_embedding_hom, left_mult_block_diag, Blade,
    EmbedVariant, RepName, Signature,
};
use crate::exact::{Matrix, Rational};
use crate::octonion::{
    associator, left_mult_matrix, moufang_residuals, OctBasisIndex, Octonion, TRIPLES,
};
use crate::sampling::{random_nonzero_octonion, random_octonion, stream_rng, SmokeRng};

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Random frames checked for parallelizability.
pub const PARALLEL_RANDOM_POINTS: usize = 64;

/// Random vectors `x` for the `gamma8(x)² = |x|² I` smoke check.
pub const GAMMA8_RANDOM_VECTORS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    Table,
    Identities,
    Clifford,
    Representations,
    LemmaField,
    Orbits,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 6] = [
        Suite::Table,
        Suite::Identities,
        Suite::Clifford,
        Suite::Representations,
        Suite::LemmaField,
        Suite::Orbits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Identities => "identities",
            Suite::Clifford => "clifford",
            Suite::Representations => "representations",
            Suite::LemmaField => "lemma-field",
            Suite::Orbits => "orbits",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::PARTS
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    /// Size of each randomized smoke layer. Must be positive.
    pub trials: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            seed: 0,
            trials: 256,
            format: Format::Text,
            out: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    /// Sorts `checks` by name and tallies the summary.
    pub fn new(suite: Suite, seed: u64, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Finding => summary.finding += 1,
            }
        }
        Report {
            version: REPORT_VERSION.to_string(),
            suite: suite.name().to_string(),
            seed,
            checks,
            summary,
        }
    }

    /// 0 iff no check has status `fail`; findings never fail a run.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "octoverify {}  suite={}  seed={}",
            self.version, self.suite, self.seed
        );
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Finding => "FINDING",
            };
            let _ = writeln!(s, "{tag:<8} {}", c.name);
            let _ = writeln!(s, "         ref: {}", c.reference);
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "         input:    {}", w.input);
                let _ = writeln!(s, "         got:      {}", w.got);
                let _ = writeln!(s, "         expected: {}", w.expected);
            }
        }
        let _ = writeln!(
            s,
            "summary: pass={} fail={} finding={}",
            self.summary.pass, self.summary.fail, self.summary.finding
        );
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Executes the configured suite. `All` runs its parts on separate threads.
pub fn run(config: &SuiteConfig) -> Report {
    let trials = config.trials.max(1);
    let checks = match config.suite {
        Suite::All => thread::scope(|scope| {
            let handles: Vec<_> = Suite::PARTS
                .iter()
                .map(|&part| scope.spawn(move || run_checks(part, config.seed, trials)))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("suite thread panicked"))
                .collect()
        }),
        part => run_checks(part, config.seed, trials),
    };
    Report::new(config.suite, config.seed, checks)
}

/// The unsorted checks of one suite.
pub fn run_checks(suite: Suite, seed: u64, trials: usize) -> Vec<CheckResult> {
    match suite {
        Suite::Table => table_checks(seed, trials),
        Suite::Identities => identity_checks(seed, trials),
        Suite::Clifford => clifford_checks(),
        Suite::Representations => representation_checks(seed),
        Suite::LemmaField => lemma_field_checks(seed, trials),
        Suite::Orbits => orbit_checks(seed),
        Suite::All => Suite::PARTS
            .iter()
            .flat_map(|&p| run_checks(p, seed, trials))
            .collect(),
    }
}

fn i(n: usize) -> Octonion {
    Octonion::basis(n)
}

fn basis_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..8).flat_map(|k| (0..8).map(move |l| (k, l)))
}

fn basis_triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..8).flat_map(|a| (0..8).flat_map(move |b| (0..8).map(move |c| (a, b, c))))
}

fn first_mismatch(
    cases: impl IntoIterator<Item = (String, Octonion, Octonion)>,
) -> Option<Witness> {
    cases
        .into_iter()
        .find(|(_, got, expected)| got != expected)
        .map(|(input, got, expected)| Witness::new(input, &got, &expected))
}

fn first_nonzero(cases: impl IntoIterator<Item = (String, Octonion)>) -> Option<Witness> {
    first_mismatch(cases.into_iter().map(|(s, x)| (s, x, Octonion::zero())))
}

fn random_pairs(rng: &mut SmokeRng, n: usize) -> Vec<(Octonion, Octonion)> {
    (0..n)
        .map(|_| (random_octonion(rng), random_octonion(rng)))
        .collect()
}

/// Product `i_k i_l` read directly off the triples, independent of the
/// table used by `Octonion::mul`.
fn product_from_triples(k: usize, l: usize) -> Octonion {
    if k == 0 {
        return i(l);
    }
    if l == 0 {
        return i(k);
    }
    if k == l {
        return -&i(0);
    }
    for &(a, b, c) in &TRIPLES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            if (x, y) == (k, l) {
                return i(z);
            }
            if (y, x) == (k, l) {
                return -&i(z);
            }
        }
    }
    unreachable!("every imaginary pair lies in exactly one triple")
}

const TABLE_REF: &str = "i_0 = 1, i_k^2 = -1, i_k i_l = i_m = -i_l i_k, cyclic for (k,l,m) in P";

fn table_checks(seed: u64, trials: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = stream_rng(seed, "table");

    out.push(CheckResult::decide(
        "table.basis-products",
        TABLE_REF,
        first_mismatch(basis_pairs().map(|(k, l)| {
            (
                format!("i{k} i{l}"),
                &i(k) * &i(l),
                product_from_triples(k, l),
            )
        })),
        Status::Fail,
    ));

    out.push(CheckResult::decide(
        "table.antisymmetry",
        TABLE_REF,
        first_mismatch(
            basis_pairs()
                .filter(|&(k, l)| k >= 1 && l >= 1 && k != l)
                .map(|(k, l)| (format!("i{k} i{l}"), &i(k) * &i(l), -&(&i(l) * &i(k)))),
        ),
        Status::Fail,
    ));

    out.push(CheckResult::decide(
        "table.conjugation-reverses-products",
        "conjugate(xy) = conjugate(y) conjugate(x)",
        first_mismatch(basis_pairs().map(|(k, l)| {
            let (x, y) = (i(k), i(l));
            (
                format!("x = i{k}, y = i{l}"),
                (&x * &y).conjugate(),
                &y.conjugate() * &x.conjugate(),
            )
        })),
        Status::Fail,
    ));

    let norm_case = |label: String, x: &Octonion, y: &Octonion| {
        let got = (x * y).norm_sq();
        let expected = &x.norm_sq() * &y.norm_sq();
        (got != expected).then(|| Witness::new(label, got, expected))
    };
    out.push(CheckResult::decide(
        "table.norm-multiplicative.basis",
        "composition algebra: |xy|^2 = |x|^2 |y|^2",
        basis_pairs().find_map(|(k, l)| norm_case(format!("x = i{k}, y = i{l}"), &i(k), &i(l))),
        Status::Fail,
    ));
    let pairs = random_pairs(&mut rng, trials);
    out.push(CheckResult::decide(
        "table.norm-multiplicative.random",
        "composition algebra: |xy|^2 = |x|^2 |y|^2",
        pairs
            .iter()
            .find_map(|(x, y)| norm_case(format!("x = {x}, y = {y}"), x, y)),
        Status::Fail,
    ));

    let inverses: Vec<Octonion> = (0..trials)
        .map(|_| random_nonzero_octonion(&mut rng))
        .collect();
    out.push(CheckResult::decide(
        "table.inverse.random",
        "u x u^{-1} with u^{-1} = conjugate(u) / |u|^2",
        first_mismatch(inverses.iter().map(|x| {
            let inv = x.inverse().expect("nonzero");
            (format!("x = {x}"), x * &inv, i(0))
        })),
        Status::Fail,
    ));

    out.push(CheckResult::decide(
        "table.left-multiplication-squares",
        "L(a) L(a) = L(a^2) (left alternativity)",
        (0..8).find_map(|k| {
            let l = left_mult_matrix(&i(k));
            let lhs = l.mat_mul(&l).expect("8x8");
            let rhs = left_mult_matrix(&(&i(k) * &i(k)));
            lhs.first_difference(&rhs).map(|(r, c)| {
                Witness::new(
                    format!("a = i{k}, entry ({r},{c})"),
                    lhs.get(r, c),
                    rhs.get(r, c),
                )
            })
        }),
        Status::Fail,
    ));

    out
}

fn identity_checks(seed: u64, trials: usize) -> Vec<CheckResult> {
    const MOUFANG: [(&str, &str); 3] = [
        ("m1", "(xyx)z = x(y(xz))"),
        ("m2", "z(xyx) = ((zx)y)x"),
        ("m3", "x(yz)x = (xy)(zx)"),
    ];
    let mut out = Vec::new();
    let mut rng = stream_rng(seed, "identities");

    let basis: Vec<(String, [Octonion; 3])> = basis_triples()
        .map(|(a, b, c)| {
            let res = moufang_residuals(&i(a), &i(b), &i(c)).expect("flexible");
            (format!("x = i{a}, y = i{b}, z = i{c}"), res)
        })
        .collect();
    let random: Vec<(String, [Octonion; 3])> = (0..trials)
        .map(|_| {
            let (x, y, z) = (
                random_octonion(&mut rng),
                random_octonion(&mut rng),
                random_octonion(&mut rng),
            );
            let res = moufang_residuals(&x, &y, &z).expect("flexible");
            (format!("x = {x}, y = {y}, z = {z}"), res)
        })
        .collect();
    for (idx, (tag, formula)) in MOUFANG.iter().enumerate() {
        out.push(CheckResult::decide(
            format!("identities.moufang-{tag}.basis"),
            *formula,
            first_nonzero(basis.iter().map(|(s, r)| (s.clone(), r[idx].clone()))),
            Status::Fail,
        ));
        out.push(CheckResult::decide(
            format!("identities.moufang-{tag}.random"),
            *formula,
            first_nonzero(random.iter().map(|(s, r)| (s.clone(), r[idx].clone()))),
            Status::Fail,
        ));
    }

    let alt = |label: String, x: &Octonion, y: &Octonion| {
        [
            (format!("[x,x,y] with {label}"), associator(x, x, y)),
            (format!("[y,x,x] with {label}"), associator(y, x, x)),
        ]
    };
    out.push(CheckResult::decide(
        "identities.alternativity.basis",
        "associator(x,x,y) = associator(y,x,x) = 0",
        first_nonzero(
            basis_pairs().flat_map(|(k, l)| alt(format!("x = i{k}, y = i{l}"), &i(k), &i(l))),
        ),
        Status::Fail,
    ));
    let pairs = random_pairs(&mut rng, trials);
    out.push(CheckResult::decide(
        "identities.alternativity.random",
        "associator(x,x,y) = associator(y,x,x) = 0",
        first_nonzero(
            pairs
                .iter()
                .flat_map(|(x, y)| alt(format!("x = {x}, y = {y}"), x, y)),
        ),
        Status::Fail,
    ));

    out.push(CheckResult::decide(
        "identities.flexibility.basis",
        "(xy)x = x(yx)",
        first_mismatch(basis_pairs().map(|(k, l)| {
            let (x, y) = (i(k), i(l));
            (
                format!("x = i{k}, y = i{l}"),
                &(&x * &y) * &x,
                &x * &(&y * &x),
            )
        })),
        Status::Fail,
    ));

    let witness = associator(&i(1), &i(2), &i(4));
    let expected = i(7).scale(&Rational::from(2));
    out.push(CheckResult::decide(
        "identities.non-associativity-witness",
        "associator(i_1, i_2, i_4) = 2 i_7",
        (witness != expected).then(|| Witness::new("x = i1, y = i2, z = i4", &witness, &expected)),
        Status::Fail,
    ));

    out
}

const EMBEDDING_CASES: [(usize, usize); 5] = [(0, 6), (0, 7), (8, 0), (2, 3), (3, 1)];

fn clifford_checks() -> Vec<CheckResult> {
    use crate::clifford::Multivector;

    let mut out = Vec::new();
    for n in 0..=4 {
        for p in 0..=n {
            let sig = Signature::new(p, n - p).expect("small");
            let blades: Vec<Blade> = sig.blades().collect();
            let mv = |b: Blade| {
                Multivector::from_terms(sig, [(b, Rational::one())]).expect("valid blade")
            };
            let mut assoc = None;
            'assoc: for &a in &blades {
                for &b in &blades {
                    let ab = mv(a).geo_mul(&mv(b)).expect("same sig");
                    for &c in &blades {
                        let lhs = ab.geo_mul(&mv(c)).expect("same sig");
                        let rhs = mv(a)
                            .geo_mul(&mv(b).geo_mul(&mv(c)).expect("same sig"))
                            .expect("same sig");
                        if lhs != rhs {
                            assoc = Some(Witness::new(format!("({a})({b})({c})"), lhs, rhs));
                            break 'assoc;
                        }
                    }
                }
            }
            out.push(CheckResult::decide(
                format!("clifford.associativity.cl({},{})", p, n - p),
                "Cl(p,q) is associative: (ab)c = a(bc) on basis blades",
                assoc,
                Status::Fail,
            ));

            let mut even = None;
            'even: for &a in blades.iter().filter(|b| b.is_even()) {
                for &b in blades.iter().filter(|b| b.is_even()) {
                    let prod = mv(a).geo_mul(&mv(b)).expect("same sig");
                    if !prod.is_even() || prod.even_part() != prod {
                        even = Some(Witness::new(
                            format!("({a})({b})"),
                            prod,
                            "even multivector",
                        ));
                        break 'even;
                    }
                }
            }
            out.push(CheckResult::decide(
                format!("clifford.even-closure.cl({},{})", p, n - p),
                "Cl^0(p,q) is a subalgebra",
                even,
                Status::Fail,
            ));
        }
    }

    for (p, q) in EMBEDDING_CASES {
        for variant in [EmbedVariant::RaiseQ, EmbedVariant::RaiseP] {
            out.push(check_embedding_hom(p, q, variant).expect("p + q <= 8"));
        }
    }
    out
}

fn representation_checks(seed: u64) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = [RepName::Gamma8, RepName::Gamma7, RepName::Gamma6]
        .into_iter()
        .map(|name| check_clifford_relations(&build_rep(name)))
        .collect();

    let gamma8 = build_rep(RepName::Gamma8);
    let g0 = &gamma8.matrices()[0];
    let evens: Vec<(usize, Matrix)> = (1..8)
        .map(|k| (k, g0.mat_mul(&gamma8.matrices()[k]).expect("16x16")))
        .collect();

    // Γ_0 Γ_k is block diagonal with blocks -L(i_k), L(i_k).
    out.push(CheckResult::decide(
        "representations.gamma8.even-generators-block-diagonal",
        "restricting to Cl^0(8,0) = Cl^0(0,8) gives block-diagonal generators Γ_0 Γ_k",
        evens.iter().find_map(|(k, m)| {
            let l = left_mult_matrix(&i(*k));
            let expected = left_mult_block_diag(&-&l, &l);
            m.first_difference(&expected).map(|(r, c)| {
                Witness::new(
                    format!("Γ_0 Γ_{k} entry ({r},{c})"),
                    m.get(r, c),
                    expected.get(r, c),
                )
            })
        }),
        Status::Fail,
    ));

    out.push(CheckResult::decide(
        "representations.gamma8.even-generators-displayed-sign",
        "Γ_0 Γ_k = diag(i_k, -i_k), 1 ≤ k ≤ 7",
        evens.iter().find_map(|(k, m)| {
            let l = left_mult_matrix(&i(*k));
            let displayed = left_mult_block_diag(&l, &-&l);
            m.first_difference(&displayed).map(|(r, c)| {
                Witness::new(
                    format!("Γ_0 Γ_{k} entry ({r},{c})"),
                    m.get(r, c),
                    displayed.get(r, c),
                )
            })
        }),
        Status::Finding,
    ));

    let mut rng = stream_rng(seed, "representations");
    let identity = Matrix::identity(16);
    out.push(CheckResult::decide(
        "representations.gamma8.vector-squares",
        "γ_8(x) = [[0, x], [x*, 0]] squares to |x|^2",
        (0..GAMMA8_RANDOM_VECTORS).find_map(|_| {
            let x = random_octonion(&mut rng);
            let g = crate::clifford::octonionic_block(&x);
            let sq = g.mat_mul(&g).expect("16x16");
            let expected = identity.scale(&x.norm_sq());
            sq.first_difference(&expected).map(|(r, c)| {
                Witness::new(
                    format!("x = {x}, entry ({r},{c})"),
                    sq.get(r, c),
                    expected.get(r, c),
                )
            })
        }),
        Status::Fail,
    ));

    out
}

fn lemma_field_checks(seed: u64, trials: usize) -> Vec<CheckResult> {
    let mut out = verify_proof_steps(Lemma::Field);
    out.push(check_a_vs_b());
    for k in 1..=6 {
        out.push(check_mixed_identity(k).expect("1..=6"));
    }

    let idx = |m: usize| OctBasisIndex::new(m).expect("1..=7");
    for k in 2..=6 {
        for realization in [
            SpinRealization::ActionPairs,
            SpinRealization::ReflectionPairs,
        ] {
            let gens = spin_generators(k, realization).expect("k <= 6");
            for m in k + 1..=7 {
                let label = format!("{}.spin{k}", realization.name());
                out.push(check_field_equivariance(&label, &gens, idx(m)).expect("total"));
            }
        }
    }
    for m in 1..=7 {
        out.push(
            check_field_equivariance("identity", &[GroupWord::identity()], idx(m)).expect("total"),
        );
    }

    let mut maps: Vec<SandwichMap> = Vec::new();
    for k in 1..=6 {
        maps.push(SandwichMap::action_a(k).expect("1..=6"));
        maps.push(SandwichMap::action_b(k).expect("1..=6"));
    }
    for k in 1..=7 {
        maps.push(SandwichMap::reflect_basis(k).expect("1..=7"));
    }
    out.extend(maps.iter().map(check_orthogonality));

    let mut rng = stream_rng(seed, "lemma-field");
    let samples: Vec<Octonion> = (0..trials).map(|_| random_octonion(&mut rng)).collect();
    out.push(CheckResult::decide(
        "actions.norm-preserving.random",
        "orthogonal transformations preserve |x|^2",
        maps.iter().find_map(|m| {
            samples.iter().find_map(|x| {
                let y = m.apply(x).expect("total");
                (y.norm_sq() != x.norm_sq()).then(|| {
                    Witness::new(format!("{} on {x}", m.label()), y.norm_sq(), x.norm_sq())
                })
            })
        }),
        Status::Fail,
    ));
    out.push(CheckResult::decide(
        "actions.matrix-matches-evaluation.random",
        "basis_table(m) x = m(x)",
        maps.iter().find_map(|m| {
            samples.iter().find_map(|x| {
                let direct = m.apply(x).expect("total");
                let via = crate::octonion::apply_matrix(m.basis_table(), x);
                (direct != via)
                    .then(|| Witness::new(format!("{} on {x}", m.label()), &via, &direct))
            })
        }),
        Status::Fail,
    ));

    out
}

fn orbit_checks(seed: u64) -> Vec<CheckResult> {
    let mut out = check_orbit_geometry(seed, ORBIT_RANDOM_WORDS);
    out.extend(verify_proof_steps(Lemma::ThreeComponents));

    let fixed = [
        ("parallelizability.i0", i(0)),
        (
            "parallelizability.3/5i0+4/5i2",
            &i(0).scale(&Rational::new(3, 5)) + &i(2).scale(&Rational::new(4, 5)),
        ),
        ("parallelizability.2i1", i(1).scale(&Rational::from(2))),
    ];
    for (name, p) in fixed {
        let mut r = check_parallelizability(&p).expect("nonzero");
        r.name = name.to_string();
        out.push(r);
    }
    let mut rng = stream_rng(seed, "parallelizability");
    let random: Vec<CheckResult> = (0..PARALLEL_RANDOM_POINTS)
        .map(|_| check_parallelizability(&random_nonzero_octonion(&mut rng)).expect("nonzero"))
        .collect();
    out.push(all_of(
        "parallelizability.random",
        "RP^7 admits 7 linearly independent tangent vector fields p -> p i_k",
        random,
    ));
    out
}
