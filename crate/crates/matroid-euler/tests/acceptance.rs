//! Acceptance gate: one test per acceptance criterion, each printing a
//! single PASS/FAIL line (visible with `--nocapture`; failures always show).
//!
//! Run with `cargo test --test acceptance`.

use matroid_euler::euler::{
    chi_closed, chi_enumerated, chi_p_partial, chi_via_counts, suite_beta, suite_class_point,
    suite_count_equivalence, suite_product_formula, suite_stratification, suite_tail_sum,
    SuiteFilter, SuiteReport,
};
use matroid_euler::exact::{rat, BigInt, BigRat};
use matroid_euler::gf::{GFMatrix, PrimeField};
use matroid_euler::grassmann::subspaces;
use matroid_euler::matroid::{enumerate_binary_classes, pg_matroid, stratum_count, Matroid};
use matroid_euler::DEFAULT_CAP;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: &str, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("{id} {name}: PASS"),
        Err(e) => {
            println!("{id} {name}: FAIL - {e}");
            panic!("{id} {name} failed: {e}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err_str<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn suite_ok(s: &SuiteReport) -> Result<(), String> {
    for c in &s.checks {
        ensure!(c.ok(), "suite {}: {} failed (lhs = {}, rhs = {})", s.name, c.label, c.lhs, c.rhs);
    }
    ensure!(!s.checks.is_empty(), "suite {} ran no checks", s.name);
    Ok(())
}

#[test]
fn ac01_rank3_class_table_and_chi() {
    report("AC-01", "rank-3 class table and chi", || {
        let expected_orders: [&[i64]; 5] = [&[6], &[6, 24], &[8], &[24], &[168]];
        let mut total_classes = 0usize;
        for (n, want) in (3usize..=7).zip(expected_orders) {
            let classes = err_str(enumerate_binary_classes(3, n))?;
            total_classes += classes.len();
            let mut got: Vec<BigInt> = classes.iter().map(|c| c.aut_order.clone()).collect();
            got.sort();
            let want: Vec<BigInt> = want.iter().map(|&x| BigInt::from(x)).collect();
            ensure!(got == want, "n={n}: aut orders {got:?}, expected {want:?}");
        }
        ensure!(total_classes == 6, "computed {total_classes} rank-3 classes, expected 6");
        let rep = err_str(chi_enumerated(3))?;
        ensure!(rep.total == rat(-1, 21), "chi = {}, expected -1/21", rep.total);
        Ok(())
    });
}

#[test]
fn ac02_rank4_chi_equals_closed_product() {
    report("AC-02", "rank-4 enumerated chi equals closed product", || {
        let enumerated = err_str(chi_enumerated(4))?;
        ensure!(
            enumerated.total == rat(1, 315),
            "enumerated chi = {}, expected 1/315",
            enumerated.total
        );
        ensure!(chi_closed(2, 4) == rat(1, 315), "closed product is not 1/315");
        Ok(())
    });
}

#[test]
fn ac03_product_formula_across_prime_powers() {
    report("AC-03", "count-based chi equals closed product on the q grid", || {
        let s = suite_product_formula(&SuiteFilter::none());
        suite_ok(&s)?;
        // Spot-check the heavy corner directly: q = 9 sums to n = 728.
        let rep = chi_via_counts(9, 3);
        ensure!(rep.terms.len() == 726, "expected 726 terms at q=9, r=3, got {}", rep.terms.len());
        ensure!(rep.total == chi_closed(9, 3), "q=9 r=3 totals differ");
        Ok(())
    });
}

#[test]
fn ac04_class_weights_equal_point_counts() {
    report("AC-04", "class-weight sums equal point counts over F_2", || {
        suite_ok(&err_str(suite_class_point(DEFAULT_CAP, &SuiteFilter::none()))?)
    });
}

#[test]
fn ac05_recursive_counts_equal_brute_force() {
    report("AC-05", "recursive counts equal brute-force enumeration", || {
        let s = err_str(suite_count_equivalence(DEFAULT_CAP, &SuiteFilter::none()))?;
        suite_ok(&s)?;
        let has_35 = s
            .checks
            .iter()
            .any(|c| c.label.contains("p=3, r=2, n=4") && c.lhs == BigRat::from_integer(35.into()));
        ensure!(has_35, "expected the (r=2, n=4, q=3) -> 35 case in the grid");
        Ok(())
    });
}

#[test]
fn ac06_factorial_tail_sum_identity() {
    report("AC-06", "factorial tail-sum identity, exhaustive k", || {
        let s = err_str(suite_tail_sum(&SuiteFilter::none()))?;
        suite_ok(&s)?;
        ensure!(s.checks.len() == 47, "expected 47 checks, got {}", s.checks.len());
        Ok(())
    });
}

#[test]
fn ac07_last_pivot_stratification() {
    report("AC-07", "last-pivot strata factor through lower counts", || {
        suite_ok(&err_str(suite_stratification(DEFAULT_CAP, &SuiteFilter::none()))?)
    });
}

#[test]
fn ac08_stratum_counts() {
    report("AC-08", "realization-stratum counts", || {
        let f2 = PrimeField::new(2).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let u23 = Matroid::uniform(2, 3).unwrap();
        let got = err_str(stratum_count(&u23, f3, DEFAULT_CAP))?;
        ensure!(got == BigInt::from(4), "stratum(U_23, F_3) = {got}, expected 4");

        let line_plus_point =
            Matroid::from_bases(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]).unwrap();
        let binaries = [
            Matroid::uniform(1, 1).unwrap(),
            Matroid::uniform(2, 2).unwrap(),
            u23,
            Matroid::uniform(3, 4).unwrap(),
            line_plus_point,
            pg_matroid(3).unwrap(),
        ];
        for m in &binaries {
            let got = err_str(stratum_count(m, f2, DEFAULT_CAP))?;
            ensure!(
                got == BigInt::from(1),
                "binary matroid (r={}, n={}) has {got} realizations over F_2, expected 1",
                m.rank(),
                m.n()
            );
        }
        Ok(())
    });
}

#[test]
fn ac09_beta_relation_and_fano_polynomial() {
    report("AC-09", "beta relation and Fano characteristic polynomial", || {
        suite_ok(&err_str(suite_beta(&SuiteFilter::none()))?)?;
        let fano = pg_matroid(3).unwrap();
        let chi = err_str(fano.characteristic_polynomial())?;
        // (t-1)(t-2)(t-4) = t^3 - 7t^2 + 14t - 8, ascending coefficients.
        let want: Vec<BigInt> = [-8i64, 14, -7, 1].iter().map(|&c| BigInt::from(c)).collect();
        ensure!(chi.coeffs() == &want[..], "Fano polynomial coefficients {:?}", chi.coeffs());
        ensure!(
            err_str(pg_matroid(3).unwrap().beta_invariant())? == BigInt::from(3),
            "Fano beta is not 3"
        );
        ensure!(
            err_str(pg_matroid(4).unwrap().beta_invariant())? == BigInt::from(21),
            "rank-4 projective geometry beta is not 21"
        );
        Ok(())
    });
}

fn random_full_rank(rng: &mut ChaCha8Rng, field: PrimeField, r: usize, n: usize) -> GFMatrix {
    loop {
        let data: Vec<u8> = (0..r * n).map(|_| rng.gen_range(0..field.p()) as u8).collect();
        let a = GFMatrix::new(field, r, n, data).unwrap();
        if a.rank() == r {
            return a;
        }
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, field: PrimeField, r: usize) -> GFMatrix {
    loop {
        let a = random_full_rank(rng, field, r, r);
        if a.det().unwrap() != 0 {
            return a;
        }
    }
}

#[test]
fn ac10_property_suites() {
    report("AC-10", "randomized and exhaustive property suites", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

        // Row-reduction canonicality: the reduced form is invariant under
        // left multiplication by any invertible matrix (1000 trials).
        for trial in 0..1000 {
            let p = [2u32, 3, 5][trial % 3];
            let field = PrimeField::new(p).unwrap();
            let r = rng.gen_range(1..=3usize);
            let n = rng.gen_range(r..=6usize);
            let a = random_full_rank(&mut rng, field, r, n);
            let u = random_invertible(&mut rng, field, r);
            let ua = u.mat_mul(&a).map_err(|e| e.to_string())?;
            ensure!(
                ua.rref().matrix == a.rref().matrix,
                "trial {trial}: reduced forms differ (p={p}, r={r}, n={n})"
            );
        }

        // Exterior-coordinate column predicate agrees with the direct one,
        // exhaustively over all full-rank matrices with r <= 2, n <= 4,
        // p in {2, 3}.
        for p in [2u32, 3] {
            let field = PrimeField::new(p).unwrap();
            for r in 1..=2usize {
                for n in r..=4usize {
                    let cells = r * n;
                    let total = (p as u64).pow(cells as u32);
                    for code in 0..total {
                        let mut c = code;
                        let data: Vec<u8> = (0..cells)
                            .map(|_| {
                                let digit = (c % p as u64) as u8;
                                c /= p as u64;
                                digit
                            })
                            .collect();
                        let a = GFMatrix::new(field, r, n, data).unwrap();
                        if a.rank() != r {
                            continue;
                        }
                        let via_plucker = a.plucker().map_err(|e| e.to_string())?.distinct_columns();
                        ensure!(
                            via_plucker == a.columns_distinct_nonzero(),
                            "predicates disagree (p={p}, r={r}, n={n}, code={code})"
                        );
                    }
                }
            }
        }

        // Every matroid constructed from a matrix satisfies basis exchange
        // (exhaustive over subspaces, r <= 3, n <= 6, p in {2, 3}).
        for p in [2u32, 3] {
            let field = PrimeField::new(p).unwrap();
            for r in 1..=3usize {
                for n in r..=6usize {
                    for s in subspaces(field, r, n, DEFAULT_CAP).map_err(|e| e.to_string())? {
                        let m = Matroid::from_matrix(s.matrix()).map_err(|e| e.to_string())?;
                        ensure!(
                            m.satisfies_basis_exchange(),
                            "exchange fails (p={p}, r={r}, n={n})"
                        );
                    }
                }
            }
        }

        // Canonical form is constant on relabeling orbits (500 relabelings).
        let line_plus_point =
            Matroid::from_bases(4, &[vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]).unwrap();
        let subjects = [
            Matroid::uniform(2, 5).unwrap(),
            line_plus_point,
            pg_matroid(3).unwrap(),
            enumerate_binary_classes(3, 6).map_err(|e| e.to_string())?[0].representative.clone(),
        ];
        for (i, m) in subjects.iter().enumerate() {
            let canon = m.canonical_form().map_err(|e| e.to_string())?;
            for trial in 0..125 {
                let mut perm: Vec<usize> = (1..=m.n()).collect();
                for k in (1..perm.len()).rev() {
                    perm.swap(k, rng.gen_range(0..=k));
                }
                let moved = m.relabel(&perm).map_err(|e| e.to_string())?;
                let moved_canon = moved.canonical_form().map_err(|e| e.to_string())?;
                ensure!(
                    moved_canon == canon,
                    "canonical form changed (subject {i}, trial {trial})"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn ac11_odd_prime_partial_sum_differs_from_binary_product() {
    report("AC-11", "rank-2 partial sum over F_3 differs from the closed product", || {
        let f3 = PrimeField::new(3).unwrap();
        let rep = err_str(chi_p_partial(f3, 2, 4, DEFAULT_CAP))?;
        ensure!(rep.complete, "n_max = 4 reaches the projective bound, sum must be complete");
        ensure!(rep.total == rat(3, 8), "partial chi = {}, expected 3/8", rep.total);
        let closed = chi_closed(3, 2);
        ensure!(closed == rat(1, 16), "closed product = {closed}, expected 1/16");
        ensure!(rep.total != closed, "expected the two values to differ");
        Ok(())
    });
}
