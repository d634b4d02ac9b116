//! Seeded randomized checks over A2 and B2.

use qshuffle::{CartanData, FreeWord, Orientation, Series, ShuffleAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::commands::Outcome;
use crate::{exit, VERSION};

/// A word of length `1..=max_len` with modes in `-1..=1`.
pub fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: u32) -> FreeWord {
    let len = rng.gen_range(1..=max_len);
    FreeWord(
        (0..len)
            .map(|_| {
                (
                    rng.gen_range(1..=rank as u32) as usize,
                    rng.gen_range(-1i32..=1),
                )
            })
            .collect(),
    )
}

#[derive(Default)]
struct Tally {
    cases: u32,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

pub fn run(seed: u64, cases: u32) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for series in [Series::A, Series::B] {
        let alg = ShuffleAlgebra::new(
            CartanData::builtin(series, 2).unwrap(),
            Orientation::ProductCompatible,
        );
        let tag = format!("{}2", series.letter());
        for _ in 0..cases {
            let w = random_word(&mut rng, 2, 4);
            match alg.pi_word(&w) {
                Err(e) => t.check(false, || format!("{tag} `{w}`: {e}")),
                Ok(f) => {
                    t.check(f.is_valid() && alg.twisted_symmetry_check(&f), || {
                        format!("{tag} `{w}`: symmetry")
                    });
                    for (a, b) in [(1, 2), (2, 1)] {
                        let o = alg.wheel_check(&f, a, b).unwrap();
                        t.check(o.holds(), || format!("{tag} `{w}`: wheel ({a},{b})"));
                    }
                }
            }
            let g: Vec<_> = (0..3)
                .map(|_| {
                    let w = random_word(&mut rng, 2, 1);
                    alg.pi_word(&w).unwrap()
                })
                .collect();
            let left = alg.mul(&alg.mul(&g[0], &g[1]).unwrap(), &g[2]).unwrap();
            let right = alg.mul(&g[0], &alg.mul(&g[1], &g[2]).unwrap()).unwrap();
            t.check(left == right, || format!("{tag}: associativity"));
            let direct = alg.mul_rational(
                &alg.to_rational(&g[0]),
                g[0].degree(),
                &alg.to_rational(&g[1]),
                g[1].degree(),
            );
            let fast = alg.mul(&g[0], &g[1]).unwrap();
            t.check(alg.to_rational(&fast) == direct, || {
                format!("{tag}: product paths disagree")
            });
        }
    }
    let json: Value = json!({
        "command": "selftest",
        "version": VERSION,
        "seed": seed,
        "checks": t.cases,
        "failures": t.failures,
    });
    let code = if t.failures.is_empty() {
        exit::OK
    } else {
        exit::FAILURE
    };
    Outcome { json, exit: code }
}
