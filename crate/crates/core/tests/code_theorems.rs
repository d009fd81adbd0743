use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmcodes::algebra::{jennings_coordinates, AlgebraContext, AlgebraElement};
use rmcodes::codes::*;
use rmcodes::gf::Fe;
use rmcodes::oracle::{is_subcode, min_distance_bruteforce, rank, same_code, within_bound};
use rmcodes::poly::WeightProfile;

fn ctx(p: u32, m: usize) -> AlgebraContext {
    AlgebraContext::new(p, m).unwrap()
}

fn random_profile(rng: &mut ChaCha8Rng, m: usize) -> WeightProfile {
    let mut w: Vec<u32> = (0..m).map(|_| rng.random_range(1..=3)).collect();
    w.sort();
    WeightProfile::new(w).unwrap()
}

#[test]
fn jennings_and_evaluation_wrm_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, m) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        let c = ctx(p, m);
        for _ in 0..5 {
            let w = random_profile(&mut rng, m);
            for omega in 0..=w.max_order(p as u64) {
                let a = wrm_code_eval(omega, &w, c).unwrap();
                let b = wrm_code_jennings(omega, &w, c).unwrap();
                assert!(
                    same_code(&a, &b).unwrap(),
                    "p={p} m={m} w={w} omega={omega}"
                );
                let params = wrm_params(omega, &w, p as u64, m).unwrap();
                assert_eq!(params.k as usize, a.dimension());
                assert_eq!(b.dimension(), a.dimension());
                if within_bound(p as u8, a.dimension(), 16) {
                    let d = min_distance_bruteforce(&a).unwrap().unwrap();
                    assert_eq!(d as u64, params.d, "p={p} m={m} w={w} omega={omega}");
                    assert_eq!(min_distance_bruteforce(&b).unwrap(), Some(d));
                }
            }
        }
    }
}

#[test]
fn wrm_codes_are_nested() {
    let c = ctx(2, 3);
    let w = WeightProfile::new(vec![1, 2, 3]).unwrap();
    for omega in 0..w.max_order(2) {
        let a = wrm_code_jennings(omega, &w, c).unwrap();
        let b = wrm_code_jennings(omega + 1, &w, c).unwrap();
        assert!(is_subcode(&a, &b).unwrap());
    }
}

#[test]
fn binary_hrm_constructions_agree() {
    for m in 1..=4 {
        let c = ctx(2, m);
        for d in 1..=m as u64 {
            let a = hrm_code_eval(d, c).unwrap();
            let b = hrm_code_jennings_binary(d, c).unwrap();
            assert!(same_code(&a, &b).unwrap(), "m={m} d={d}");
            let bf = min_distance_bruteforce(&b).unwrap().unwrap();
            assert_eq!(bf, 1 << (m as u64 - d));
        }
    }
}

#[test]
fn hrm_params_agree_with_oracle() {
    for (q, m) in [(2u32, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
        let c = ctx(q, m);
        for d in 1..=(m as u64 - 1) * (q as u64 - 1) {
            let hp = hrm_params(d, m, q as u64).unwrap();
            let code = hrm_code_eval(d, c).unwrap();
            assert_eq!(hp.k as usize, code.dimension(), "q={q} m={m} d={d}");
            assert_eq!(hp.n as usize, c.len());
            if within_bound(q as u8, code.dimension(), 16) {
                assert_eq!(
                    min_distance_bruteforce(&code).unwrap(),
                    Some(hp.delta as usize),
                    "q={q} m={m} d={d}"
                );
            }
            let grm = grm_code(d, c).unwrap();
            assert!(is_subcode(&code, &grm).unwrap());
        }
    }
}

#[test]
fn grm_is_a_radical_power() {
    for (p, m) in [(2, 3), (3, 2), (5, 1), (5, 2)] {
        let c = ctx(p, m);
        let top = m as u64 * (p as u64 - 1);
        for nu in 0..=top {
            let rad = radical_power(top - nu, c).unwrap();
            assert!(same_code(&grm_code(nu, c).unwrap(), &rad).unwrap());
            assert!(same_code(&grm_code_eval(nu, c).unwrap(), &rad).unwrap());
        }
    }
}

/// `P^j P^l` lands in `P^{j+l}`: the Jennings expansion of a product of basis
/// elements has no component below weight `j + l`.
#[test]
fn radical_powers_multiply_into_higher_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (p, m) in [(2, 4), (3, 2), (3, 3), (5, 2)] {
        let c = ctx(p, m);
        let top = m as u64 * (p as u64 - 1);
        for _ in 0..40 {
            let j = rng.random_range(0..=top);
            let l = rng.random_range(0..=top);
            let a = radical_power(j, c).unwrap();
            let b = radical_power(l, c).unwrap();
            let ra = &a.rows()[rng.random_range(0..a.dimension())];
            let rb = &b.rows()[rng.random_range(0..b.dimension())];
            let prod = ra.multiply(rb).unwrap();
            let coords = jennings_coordinates(&prod);
            for (idx, x) in coords.iter().enumerate() {
                if !x.is_zero() {
                    let wt = c.index_to_exponents(idx).unwrap().p_weight() as u64;
                    assert!(wt >= j + l, "p={p} m={m} j={j} l={l}");
                }
            }
            if j + l <= top {
                let target = radical_power(j + l, c).unwrap();
                assert!(target
                    .row_space()
                    .unwrap()
                    .contains(c.field(), prod.coeffs()));
            } else {
                assert!(prod.is_zero());
            }
        }
    }
}

#[test]
fn rank_ignores_row_order_and_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = rmcodes::PrimeField::new(5).unwrap();
    for _ in 0..50 {
        let rows: Vec<Vec<Fe>> = (0..6)
            .map(|_| (0..8).map(|_| f.reduce(rng.random_range(0..5))).collect())
            .collect();
        let r = rank(f, &rows).unwrap();
        let mut shuffled = rows.clone();
        shuffled.reverse();
        let scaled: Vec<Vec<Fe>> = shuffled
            .iter()
            .map(|row| {
                let s = f.reduce(rng.random_range(1..5));
                row.iter().map(|&x| f.mul(s, x)).collect()
            })
            .collect();
        assert_eq!(rank(f, &shuffled).unwrap(), r);
        assert_eq!(rank(f, &scaled).unwrap(), r);
    }
}

#[test]
fn generator_matrices_are_reproducible() {
    let c = ctx(3, 2);
    let w = WeightProfile::new(vec![1, 2]).unwrap();
    let a = wrm_code_jennings(3, &w, c).unwrap();
    let b = wrm_code_jennings(3, &w, c).unwrap();
    assert_eq!(a.to_text(), b.to_text());
    assert_eq!(
        rank(c.field(), &a.generator_matrix()).unwrap(),
        a.dimension()
    );
    let back = LinearCode::from_text(&a.to_text(), Construction::Wrm).unwrap();
    for (j, row) in back.rows().iter().enumerate() {
        let mut msg = vec![Fe::ZERO; back.dimension()];
        msg[j] = Fe::ONE;
        assert_eq!(&a.encode(&msg).unwrap(), row);
    }
    let _ = AlgebraElement::zero(c);
}
