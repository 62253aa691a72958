//! Exact representative-point checks of the orbit structure of `Spin(7)` on
//! `RP^7` and `Spin(6)` on `RP^6`.

use rand::Rng;

use crate::check::{CheckResult, Status, Witness};
use crate::exact::Rational;
use crate::octonion::{OctBasisIndex, Octonion};
use crate::sampling::{random_unit_imaginary, random_unit_on, stream_rng};

use super::{spin_generators, GroupWord, OctonionMap, SandwichMap, SlicePoint, SpinRealization};

/// Number of seeded random even reflection words checked against the pole.
pub const ORBIT_RANDOM_WORDS: usize = 64;

fn i(n: usize) -> Octonion {
    Octonion::basis(n)
}

fn first_violation<'a>(
    cases: impl IntoIterator<Item = (String, Octonion, Octonion)> + 'a,
) -> Option<Witness> {
    cases
        .into_iter()
        .find(|(_, got, expected)| got != expected)
        .map(|(input, got, expected)| Witness::new(input, &got, &expected))
}

fn random_even_words(seed: u64, count: usize) -> Vec<GroupWord> {
    let mut rng = stream_rng(seed, "orbits.words");
    (0..count)
        .map(|_| {
            let len = 2 * rng.gen_range(1..=3);
            let letters = (0..len)
                .map(|_| {
                    SandwichMap::reflect(random_unit_imaginary(&mut rng)).expect("unit imaginary")
                })
                .collect();
            GroupWord::new(letters)
        })
        .collect()
}

/// Every map sends the slice point to a slice point with the same `(c, s)`.
fn slice_preserved(maps: &[GroupWord], points: &[SlicePoint]) -> Option<Witness> {
    for g in maps {
        for pt in points {
            let image = g.apply(&pt.to_octonion()).expect("total");
            if pt.decompose(&image).is_none() {
                return Some(Witness::new(
                    format!("g = {}, v = {}", g.label(), pt.to_octonion()),
                    &image,
                    format!("{} {} + {} x' with |x'| = 1", pt.c(), pt.pole(), pt.s()),
                ));
            }
        }
    }
    None
}

/// Representative-point checks: pole isotropy, antipodal pole, interior
/// isotropy, and preservation of the slice form, for `m = 7` and `m = 6`.
pub fn check_orbit_geometry(seed: u64, random_words: usize) -> Vec<CheckResult> {
    let c = Rational::new(3, 5);
    let s = Rational::new(4, 5);
    let pole0 = OctBasisIndex::new(0).expect("0");
    let pole7 = OctBasisIndex::new(7).expect("7");
    let mut out = Vec::new();

    let basis_pairs =
        spin_generators(7, SpinRealization::ReflectionPairs).expect("basis reflections");
    let words = random_even_words(seed, random_words);

    out.push(CheckResult::decide(
        "orbits.m7.pole-fixed-by-basis-pairs",
        "the endpoint t = 0 corresponds to the pole e_0, with isotropy group Spin(7)",
        first_violation(basis_pairs.iter().map(|g| {
            (
                format!("g = {}", g.label()),
                g.apply(&i(0)).expect("total"),
                i(0),
            )
        })),
        Status::Fail,
    ));

    out.push(CheckResult::decide(
        "orbits.m7.pole-fixed-by-random-even-words",
        "the endpoint t = 0 corresponds to the pole e_0, with isotropy group Spin(7)",
        first_violation(words.iter().enumerate().map(|(n, g)| {
            (
                format!("seeded word #{n} of length {}", g.len()),
                g.apply(&i(0)).expect("total"),
                i(0),
            )
        })),
        Status::Fail,
    ));

    out.push(CheckResult::decide(
        "orbits.m7.antipodal-pole-pin6",
        "points of RP^6 have isotropy conjugate to Pin(6), the isotropy group of {±i_7}",
        first_violation((1..=6).map(|k| {
            let m = SandwichMap::reflect_basis(k).expect("1..=6");
            (
                format!("g = reflectA(i{k})"),
                m.apply(&i(7)).expect("total"),
                -&i(7),
            )
        })),
        Status::Fail,
    ));

    let v = &i(0).scale(&c) + &i(7).scale(&s);
    let spin6 = spin_generators(6, SpinRealization::ActionPairs).expect("1..=6");
    out.push(CheckResult::decide(
        "orbits.m7.interior-fixed-by-spin6",
        "points cos t e_0 + sin t x, 0 < t < π/2, have isotropy conjugate to Spin(6)",
        first_violation(spin6.iter().map(|g| {
            (
                format!("g = {}, v = 3/5 i0 + 4/5 i7", g.label()),
                g.apply(&v).expect("total"),
                v.clone(),
            )
        })),
        Status::Fail,
    ));

    let mut rng = stream_rng(seed, "orbits.slice");
    let mut points7 = vec![SlicePoint::new(c.clone(), s.clone(), i(7), pole0).expect("valid")];
    for _ in 0..3 {
        let x = random_unit_imaginary(&mut rng);
        points7.push(SlicePoint::new(c.clone(), s.clone(), x, pole0).expect("valid"));
    }
    let mut maps7 = basis_pairs.clone();
    maps7.extend(words.iter().cloned());
    out.push(CheckResult::decide(
        "orbits.m7.slice-form-preserved",
        "v = cos t i_0 + sin t x, x in S^6 ⊂ Im O, is sent to cos t i_0 + sin t x'",
        slice_preserved(&maps7, &points7),
        Status::Fail,
    ));

    let c_pairs: Vec<GroupWord> = (1..=6)
        .flat_map(|j| (j + 1..=6).map(move |k| (j, k)))
        .map(|(j, k)| SandwichMap::action_c(j, k).expect("1..=6").into())
        .collect();
    out.push(CheckResult::decide(
        "orbits.m6.pole-fixed-by-spin6",
        "the endpoint t = 0 corresponds to the pole e_7, with isotropy group Spin(6)",
        first_violation(c_pairs.iter().map(|g| {
            (
                format!("g = {}", g.label()),
                g.apply(&i(7)).expect("total"),
                i(7),
            )
        })),
        Status::Fail,
    ));

    out.push(CheckResult::decide(
        "orbits.m6.antipodal-pole-pin5",
        "points of RP^5 have isotropy conjugate to Pin(5), the isotropy group of {±i_6}",
        first_violation((1..=5).map(|k| {
            let m = SandwichMap::reflect_basis(k).expect("1..=5");
            (
                format!("g = reflectA(i{k})"),
                m.apply(&i(6)).expect("total"),
                -&i(6),
            )
        })),
        Status::Fail,
    ));

    let v6 = &i(7).scale(&c) + &i(6).scale(&s);
    out.push(CheckResult::decide(
        "orbits.m6.interior-fixed-by-spin5",
        "points cos t e_7 + sin t x, 0 < t < π/2, have isotropy conjugate to Spin(5)",
        first_violation(
            (1..=5)
                .flat_map(|j| (j + 1..=5).map(move |k| (j, k)))
                .map(|(j, k)| {
                    let m = SandwichMap::action_c(j, k).expect("1..=5");
                    (
                        format!("g = actionC({j},{k}), v = 3/5 i7 + 4/5 i6"),
                        m.apply(&v6).expect("total"),
                        v6.clone(),
                    )
                }),
        ),
        Status::Fail,
    ));

    let mut points6 = vec![SlicePoint::new(c.clone(), s.clone(), i(6), pole7).expect("valid")];
    for _ in 0..3 {
        let x = random_unit_on(&mut rng, &[1, 2, 3, 4, 5, 6]);
        points6.push(SlicePoint::new(c.clone(), s.clone(), x, pole7).expect("valid"));
    }
    out.push(CheckResult::decide(
        "orbits.m6.slice-form-preserved",
        "v = cos t i_7 + sin t x, x in S^5, is sent to cos t i_7 + sin t x'",
        slice_preserved(&c_pairs, &points6),
        Status::Fail,
    ));

    out
}
