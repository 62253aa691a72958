//! Line-by-line replay of the two lemma proofs.
//!
//! Each displayed equation becomes one named check. Both sides are evaluated
//! with the bracketing exactly as displayed, for every basis input and every
//! admissible index, so a finding points at the single line that does not
//! hold.

use crate::check::{CheckResult, Status, Witness};
use crate::exact::Rational;
use crate::octonion::{flexible_product, Octonion};

use super::{spin_generators, OctonionMap, SandwichMap, SpinRealization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// Equivariant tangent vector fields `p ↦ p i_m` on `RP^7`.
    Field,
    /// Slice parametrization and isotropy of the `Spin(7)`/`Spin(6)` orbits.
    ThreeComponents,
}

type Case = (String, Octonion, Octonion);

fn i(n: usize) -> Octonion {
    Octonion::basis(n)
}

fn decide(name: &str, reference: &str, cases: impl IntoIterator<Item = Case>) -> CheckResult {
    let witness = cases
        .into_iter()
        .find(|(_, lhs, rhs)| lhs != rhs)
        .map(|(input, lhs, rhs)| Witness::new(input, &lhs, &rhs));
    CheckResult::decide(name, reference, witness, Status::Finding)
}

/// `(k, p)` for `1 ≤ k ≤ 6` and basis `p`.
fn over_k_p(f: impl Fn(usize, &Octonion) -> (Octonion, Octonion)) -> Vec<Case> {
    let mut out = Vec::new();
    for k in 1..=6 {
        for n in 0..8 {
            let (lhs, rhs) = f(k, &i(n));
            out.push((format!("k = {k}, p = i{n}"), lhs, rhs));
        }
    }
    out
}

/// `(j, k, p)` for `1 ≤ j < k ≤ 6` and basis `p`.
fn over_jk_p(f: impl Fn(usize, usize, &Octonion) -> (Octonion, Octonion)) -> Vec<Case> {
    let mut out = Vec::new();
    for j in 1..=6 {
        for k in j + 1..=6 {
            for n in 0..8 {
                let (lhs, rhs) = f(j, k, &i(n));
                out.push((format!("j = {j}, k = {k}, p = i{n}"), lhs, rhs));
            }
        }
    }
    out
}

struct Actions {
    a: Vec<SandwichMap>,
    b: Vec<SandwichMap>,
}

impl Actions {
    fn new() -> Self {
        Actions {
            a: (1..=6)
                .map(|k| SandwichMap::action_a(k).expect("1..=6"))
                .collect(),
            b: (1..=6)
                .map(|k| SandwichMap::action_b(k).expect("1..=6"))
                .collect(),
        }
    }

    fn a(&self, k: usize, x: &Octonion) -> Octonion {
        self.a[k - 1].apply(x).expect("actionA is total")
    }

    fn b(&self, k: usize, x: &Octonion) -> Octonion {
        self.b[k - 1].apply(x).expect("actionB is total")
    }

    fn aa(&self, j: usize, k: usize, x: &Octonion) -> Octonion {
        self.a(j, &self.a(k, x))
    }

    fn bb(&self, j: usize, k: usize, x: &Octonion) -> Octonion {
        self.b(j, &self.b(k, x))
    }
}

/// Compares the two readings of the `gamma6` action, `actionA(k)` and
/// `actionB(k)`, on every `k ≤ 6` and basis `x`.
pub fn check_a_vs_b() -> CheckResult {
    let acts = Actions::new();
    let cases = (1..=6).flat_map(|k| {
        let acts = &acts;
        (0..8).map(move |n| {
            (
                format!("k = {k}, x = i{n}"),
                acts.a(k, &i(n)),
                acts.b(k, &i(n)),
            )
        })
    });
    decide(
        "field.a-vs-b-forms",
        "i_k((i_7 x i_7) i_k) versus (i_k i_7) x (i_7 i_k) as the action of γ_6(e_k)",
        cases.collect::<Vec<_>>(),
    )
}

pub fn verify_proof_steps(lemma: Lemma) -> Vec<CheckResult> {
    match lemma {
        Lemma::Field => field_steps(),
        Lemma::ThreeComponents => three_component_steps(),
    }
}

fn field_steps() -> Vec<CheckResult> {
    let acts = Actions::new();
    let acts = &acts;
    let i7 = i(7);
    let i7 = &i7;
    let mut out = Vec::new();

    out.push(decide(
        "field.step-01.i7-p-i7-closed-form",
        "i_7 p i_7 = Σ_{n≠0,7} t_n i_n - t_0 i_0 - t_7 i_7",
        (0..8).map(|n| {
            let p = i(n);
            let lhs = flexible_product(i7, &p).expect("octonions are flexible");
            (format!("p = i{n}"), lhs, p.negate_coords(&[0, 7]))
        }),
    ));

    out.push(decide(
        "field.step-02.actionA-closed-form",
        "φ_{γ6(e_k)}(p) = i_k((i_7 p i_7) i_k) = Σ_{n≠k,7} t_n i_n - t_k i_k - t_7 i_7",
        over_k_p(|k, p| (acts.a(k, p), p.negate_coords(&[k, 7]))),
    ));

    out.push(decide(
        "field.step-03.actionA-pair-closed-form",
        "φ_{γ6(e_j e_k)}(p) = Σ_{n≠j,k} t_n i_n - t_j i_j - t_k i_k",
        over_jk_p(|j, k, p| (acts.aa(j, k, p), p.negate_coords(&[j, k]))),
    ));

    out.push(decide(
        "field.step-04a.actionA-negates-i7",
        "φ_{γ6(e_k)}(i_7) = -i_7, with φ = i_k((i_7 x i_7) i_k)",
        (1..=6).map(|k| (format!("k = {k}"), acts.a(k, i7), -i7)),
    ));
    out.push(decide(
        "field.step-04b.actionB-negates-i7",
        "φ_{γ6(e_k)}(i_7) = -i_7, with φ = (i_k i_7) x (i_7 i_k)",
        (1..=6).map(|k| (format!("k = {k}"), acts.b(k, i7), -i7)),
    ));

    let pairs = || (1..=6).flat_map(|j| (j + 1..=6).map(move |k| (j, k)));
    out.push(decide(
        "field.step-05a.actionA-pair-fixes-i7",
        "φ_{γ6(e_j e_k)}(i_7) = i_7, with φ = i_k((i_7 x i_7) i_k)",
        pairs().map(|(j, k)| (format!("j = {j}, k = {k}"), acts.aa(j, k, i7), i7.clone())),
    ));
    out.push(decide(
        "field.step-05b.actionB-pair-fixes-i7",
        "φ_{γ6(e_j e_k)}(i_7) = i_7, with φ = (i_k i_7) x (i_7 i_k)",
        pairs().map(|(j, k)| (format!("j = {j}, k = {k}"), acts.bb(j, k, i7), i7.clone())),
    ));

    // The chain for φ(p i_7), one displayed line at a time.
    let ki7 = |k: usize| &i(k) * i7;
    let i7k = |k: usize| i7 * &i(k);

    out.push(decide(
        "field.step-06.definition-at-p-i7",
        "φ_{γ6(e_k)}(p i_7) = (i_k i_7)(p i_7)(i_7 i_k), φ as first defined = i_k((i_7 x i_7) i_k)",
        over_k_p(|k, p| {
            let pi7 = p * i7;
            let sandwich = &(&ki7(k) * &pi7) * &i7k(k);
            (acts.a(k, &pi7), sandwich)
        }),
    ));

    out.push(decide(
        "field.step-07.rebracket-by-m3",
        "(i_k i_7)(p i_7)(i_7 i_k) = ((i_k i_7) p)(i_7 (i_7 i_k)) by x(yz)x = (xy)(zx)",
        over_k_p(|k, p| {
            let lhs = acts.b(k, &(p * i7));
            let rhs = &(&ki7(k) * p) * &(i7 * &i7k(k));
            (lhs, rhs)
        }),
    ));

    out.push(decide(
        "field.step-08.left-alternativity-i7",
        "i_7 (i_7 i_k) = -i_k",
        (1..=6).map(|k| (format!("k = {k}"), i7 * &i7k(k), -&i(k))),
    ));

    out.push(decide(
        "field.step-09.i7-squared",
        "((i_k i_7) p)(i_7 (i_7 i_k)) = -((i_k i_7) p) i_k as i_7^2 = -1",
        over_k_p(|k, p| {
            let lhs = &(&ki7(k) * p) * &(i7 * &i7k(k));
            let rhs = -&(&(&ki7(k) * p) * &i(k));
            (lhs, rhs)
        }),
    ));

    out.push(decide(
        "field.step-10a.i7-ik-anticommute",
        "i_7 i_k = -i_k i_7",
        (1..=6).map(|k| (format!("k = {k}"), i7k(k), -&ki7(k))),
    ));
    out.push(decide(
        "field.step-10b.swap-factor",
        "-((i_k i_7) p) i_k = ((i_7 i_k) p) i_k as i_7 i_k = -i_k i_7",
        over_k_p(|k, p| {
            let lhs = -&(&(&ki7(k) * p) * &i(k));
            let rhs = &(&i7k(k) * p) * &i(k);
            (lhs, rhs)
        }),
    ));

    out.push(decide(
        "field.step-11.rebracket-by-m2",
        "((i_7 i_k) p) i_k = i_7 (i_k p i_k) by z(xyx) = ((zx)y)x",
        over_k_p(|k, p| {
            let lhs = &(&i7k(k) * p) * &i(k);
            let rhs = i7 * &flexible_product(&i(k), p).expect("flexible");
            (lhs, rhs)
        }),
    ));

    out.push(decide(
        "field.step-12.ik-p-ik-closed-form",
        "i_k p i_k = Σ_{n≠0,k} t_n i_n - t_0 i_0 - t_k i_k",
        over_k_p(|k, p| {
            let lhs = flexible_product(&i(k), p).expect("flexible");
            (lhs, p.negate_coords(&[0, k]))
        }),
    ));

    out.push(decide(
        "field.step-13.move-i7-right",
        "i_7 (Σ_{n≠0,k} t_n i_n - t_0 i_0 - t_k i_k) = (-Σ_{n≠k,7} t_n i_n + t_k i_k + t_7 i_7) i_7",
        over_k_p(|k, p| {
            let lhs = i7 * &p.negate_coords(&[0, k]);
            let rhs = &(-&p.negate_coords(&[k, 7])) * i7;
            (lhs, rhs)
        }),
    ));

    out.push(decide(
        "field.step-14.pair-on-p-i7",
        "φ_{γ6(e_j e_k)}(p i_7) = (Σ_{n≠j,k} t_n i_n - t_j i_j - t_k i_k) i_7, φ = (i_k i_7) x (i_7 i_k)",
        over_jk_p(|j, k, p| (acts.bb(j, k, &(p * i7)), &p.negate_coords(&[j, k]) * i7)),
    ));

    out.push(decide(
        "field.step-15a.conclusion-actionA",
        "φ_{γ6(e_j e_k)}(p i_7) = φ_{γ6(e_j e_k)}(p) i_7, both sides with φ = i_k((i_7 x i_7) i_k)",
        over_jk_p(|j, k, p| (acts.aa(j, k, &(p * i7)), &acts.aa(j, k, p) * i7)),
    ));
    out.push(decide(
        "field.step-15b.conclusion-actionB",
        "φ_{γ6(e_j e_k)}(p i_7) = φ_{γ6(e_j e_k)}(p) i_7, both sides with φ = (i_k i_7) x (i_7 i_k)",
        over_jk_p(|j, k, p| (acts.bb(j, k, &(p * i7)), &acts.bb(j, k, p) * i7)),
    ));
    out.push(decide(
        "field.step-15c.conclusion-mixed",
        "φ_{γ6(e_j e_k)}(p i_7) = φ_{γ6(e_j e_k)}(p) i_7, B-form on p i_7 and A-form on p as in the displayed chain",
        over_jk_p(|j, k, p| (acts.bb(j, k, &(p * i7)), &acts.aa(j, k, p) * i7)),
    ));

    out
}

fn three_component_steps() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let acts = Actions::new();
    let acts = &acts;
    let c = &Rational::new(3, 5);
    let s = &Rational::new(4, 5);
    let slice = |pole: usize, x: &Octonion| &i(pole).scale(c) + &x.scale(s);

    let spin7 = spin_generators(7, SpinRealization::ReflectionPairs).expect("basis reflections");
    let mut fixed_i0: Vec<Case> = spin7
        .iter()
        .map(|g| {
            (
                format!("g = {}", g.label()),
                g.apply(&i(0)).expect("total"),
                i(0),
            )
        })
        .collect();
    fixed_i0.extend((1..=6).map(|k| (format!("g = actionA({k})"), acts.a(k, &i(0)), i(0))));
    out.push(decide(
        "three-components.step-01.i0-invariant",
        "i_0 is invariant under the action of Spin(7)",
        fixed_i0,
    ));

    out.push(decide(
        "three-components.step-02.m7-slice-image",
        "v' = i_k(i_7 (cos t i_0 + sin t x) i_7) i_k = cos t i_0 + sin t i_k(i_7 x i_7) i_k",
        (1..=6)
            .flat_map(|k| {
                let slice = &slice;
                (1..8).map(move |n| {
                    let x = i(n);
                    let lhs = acts.a(k, &slice(0, &x));
                    let rhs = &i(0).scale(c) + &acts.a(k, &x).scale(s);
                    (format!("k = {k}, (c, s) = (3/5, 4/5), x = i{n}"), lhs, rhs)
                })
            })
            .collect::<Vec<_>>(),
    ));

    let c_pairs: Vec<(usize, usize, SandwichMap)> = (1..=6)
        .flat_map(|j| (j + 1..=6).map(move |k| (j, k)))
        .map(|(j, k)| (j, k, SandwichMap::action_c(j, k).expect("1..=6")))
        .collect();

    out.push(decide(
        "three-components.step-03.m6-i7-invariant",
        "i_7 is invariant under the action of i_j i_k in Spin(6)",
        c_pairs.iter().map(|(j, k, m)| {
            (
                format!("j = {j}, k = {k}"),
                m.apply(&i(7)).expect("total"),
                i(7),
            )
        }),
    ));

    out.push(decide(
        "three-components.step-04.m6-slice-image",
        "v' = i_j i_k (cos t i_7 + sin t x) i_k i_j = cos t i_7 + sin t i_j(i_k x i_k) i_j",
        c_pairs
            .iter()
            .flat_map(|(j, k, m)| {
                let slice = &slice;
                (1..7).map(move |n| {
                    let x = i(n);
                    let lhs = m.apply(&slice(7, &x)).expect("total");
                    let rhs = &i(7).scale(c) + &m.apply(&x).expect("total").scale(s);
                    (
                        format!("j = {j}, k = {k}, (c, s) = (3/5, 4/5), x = i{n}"),
                        lhs,
                        rhs,
                    )
                })
            })
            .collect::<Vec<_>>(),
    ));

    out.push(decide(
        "three-components.step-05.m6-product-sandwich",
        "(i_j i_k) v (i_k i_j) read as a sandwich by the product octonion equals i_j(i_k v i_k) i_j",
        c_pairs
            .iter()
            .flat_map(|(j, k, m)| {
                (0..8).map(move |n| {
                    let v = i(n);
                    let u = &i(*j) * &i(*k);
                    let w = &i(*k) * &i(*j);
                    let lhs = &(&u * &v) * &w;
                    (format!("j = {j}, k = {k}, v = i{n}"), lhs, m.apply(&v).expect("total"))
                })
            })
            .collect::<Vec<_>>(),
    ));

    out
}
