//! Self-check of every identity the library is built to reproduce.
//!
//! Each [`Check`] returns the first counterexample it finds. The `n_max`
//! argument bounds the family-index ranges; fixed-range checks (the Pell
//! range, primes, the discriminant obstruction) ignore it.

use std::io::{self, Write};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{catalog_report, ns3, ns3_delta2, ns3_gamma, CatalogId};
use crate::family::{
    epw_involution, epw_top_intersection, family, family_degree, family_genus,
    fujiki_degree_to_bb, k3_embedding_sufficient, necessary_condition,
    r0_discriminant_obstruction, reflected_discriminant_inequality, FUJIKI_CONSTANT,
};
use crate::lattice::{same_span, LatticeVector, Signature};
use crate::matrix::IntMatrix;
use crate::pell::{
    enumerate_negative, fundamental_negative, is_prime, is_solvable_negative, is_square, isqrt,
    norm_value, prime_criterion, quoted_d5_closed_form,
};
use crate::sample;

pub type CheckResult = Result<(), String>;

/// A named group of checks.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn(i64) -> CheckResult,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn v(c: &[i64]) -> LatticeVector {
    LatticeVector::from_i64(c)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn involution(n_max: i64) -> CheckResult {
    let rep = epw_involution(10, 2).map_err(err)?;
    ensure!(rep.image_of_h == v(&[9, -20]), "j(f) = {} on degree 10", rep.image_of_h);
    ensure!(rep.image_of_delta == v(&[4, -9]), "j(delta) = {} on degree 10", rep.image_of_delta);
    for n in 1..=n_max.min(100) {
        let d = family_degree(n);
        let rep = epw_involution(d, 2 * n + 2).map_err(err)?;
        let j = &rep.matrix;
        ensure!(j.compose(j).is_identity(), "n={n}: j^2 != 1");
        ensure!(rep.lattice.is_isometry(j.matrix()).map_err(err)?, "n={n}: j not an isometry");
        ensure!(j.apply(&rep.gamma).map_err(err)? == rep.gamma, "n={n}: j(gamma) != gamma");
        for w in rep.lattice.orthogonal_complement(&rep.gamma).map_err(err)? {
            ensure!(j.apply(&w).map_err(err)? == w.neg(), "n={n}: j does not negate {w}");
        }
    }
    Ok(())
}

fn fujiki(_: i64) -> CheckResult {
    let s = fujiki_degree_to_bb(epw_top_intersection(), FUJIKI_CONSTANT).map_err(err)?;
    ensure!(s == 2, "(gamma,gamma) = {s} from gamma^4 = {}", epw_top_intersection());
    Ok(())
}

fn family_identities(n_max: i64) -> CheckResult {
    for n in 1..=n_max {
        let rec = family(n).map_err(err)?;
        let d = family_degree(n);
        ensure!(rec.gamma_delta2 == BigInt::from(4 * n + 4), "n={n}: (gamma,delta2) = {}", rec.gamma_delta2);
        ensure!(rec.disc_pi == BigInt::from(-2 * d), "n={n}: disc(Pi) = {}", rec.disc_pi);
        ensure!(rec.h2_square == BigInt::from(d), "n={n}: (h2,h2) = {}", rec.h2_square);
        ensure!(rec.d == 2 * (4 * (n + 1) * (n + 1) + 1), "n={n}: d = {}", rec.d);
        ensure!(rec.g == family_genus(n), "n={n}: g = {}", rec.g);
        ensure!(rec.g == 4 * n * n + 8 * n + 6, "n={n}: g = {}", rec.g);
        ensure!(rec.h2 == v(&[1, 2 * n + 2]), "n={n}: h2 = {}", rec.h2);
        ensure!(
            rec.gram_h2_delta2().gram() == &IntMatrix::from_i64(&[[d, 0], [0, -2]]),
            "n={n}: Gram in (h2, delta2) is {}",
            rec.gram_h2_delta2().gram()
        );
    }
    Ok(())
}

/// Smallest solution with `1 <= x <= limit`, by direct search.
pub fn brute_force_negative(d: u64, limit: u64) -> Option<(u64, u64)> {
    (1..=limit).find_map(|x| {
        let t = d * x * x - 1;
        let y = isqrt(t);
        (y * y == t).then_some((y, x))
    })
}

fn pell_suite(_: i64) -> CheckResult {
    let sols: Vec<String> = enumerate_negative(5, 3).map_err(err)?.iter().map(ToString::to_string).collect();
    ensure!(sols == ["(2, 1)", "(38, 17)", "(682, 305)"], "D=5 solutions {sols:?}");
    ensure!(!is_solvable_negative(34).map_err(err)?, "D=34 reported solvable");
    for d in 2..=2000u64 {
        if is_square(d) {
            continue;
        }
        let fund = fundamental_negative(d).map_err(err)?;
        let brute = brute_force_negative(d, 10_000);
        match (&fund, brute) {
            (None, Some((y, x))) => return Err(format!("D={d}: unsolvable but ({y}, {x}) works")),
            (Some(s), Some((y, x))) => ensure!(
                s.y() == &BigUint::from(y) && s.x() == &BigUint::from(x),
                "D={d}: fundamental {s} but brute force minimum ({y}, {x})"
            ),
            (Some(s), None) => ensure!(s.x() > &BigUint::from(10_000u32), "D={d}: {s} missed by search"),
            (None, None) => {}
        }
    }
    for p in (2..10_000u64).filter(|&p| is_prime(p)) {
        let crit = prime_criterion(p).map_err(err)?;
        let solver = is_solvable_negative(p).map_err(err)?;
        ensure!(crit == solver, "p={p}: criterion {crit}, solver {solver}");
    }
    Ok(())
}

fn necessary(n_max: i64) -> CheckResult {
    for n in 1..=n_max.min(50) {
        let c = necessary_condition(family_degree(n)).map_err(err)?;
        let w = c.witness.ok_or_else(|| format!("n={n}: no witness"))?;
        ensure!(
            w.y() == &BigUint::from((2 * n + 2) as u64) && w.x() == &BigUint::from(1u8),
            "n={n}: witness {w}"
        );
    }
    ensure!(!necessary_condition(12).map_err(err)?.solvable, "d=12 reported solvable");
    Ok(())
}

fn two_polarizations(_: i64) -> CheckResult {
    for n in 1..=1000 {
        let o = r0_discriminant_obstruction(n).map_err(err)?;
        ensure!(o.disc_r == BigInt::from(-n * (n + 20)), "n={n}: disc(R) = {}", o.disc_r);
        ensure!(o.contradiction_r0, "n={n}: -20 not excluded");
    }
    for n in 1..=20 {
        let r = crate::catalog::build(CatalogId::R(n)).map_err(err)?;
        ensure!(k3_embedding_sufficient(&r), "n={n}: R(n) fails the embedding criterion");
        for fh in 1..n + 10 {
            let ineq = reflected_discriminant_inequality(n, fh).map_err(err)?;
            ensure!(ineq.strict, "n={n}, (f,h_bar)={fh}: not strict");
        }
    }
    Ok(())
}

fn catalog(_: i64) -> CheckResult {
    let l0 = catalog_report(CatalogId::Lambda0).map_err(err)?;
    ensure!(l0.rank == 22 && l0.even && l0.signature == Signature::new(20, 2, 0), "Lambda0: {l0:?}");
    let k3 = catalog_report(CatalogId::K3).map_err(err)?;
    ensure!(
        k3.signature == Signature::new(3, 19, 0) && k3.discriminant == BigInt::from(-1),
        "K3: {k3:?}"
    );
    let odd = catalog_report(CatalogId::I22_2).map_err(err)?;
    ensure!(!odd.even && odd.signature == Signature::new(22, 2, 0), "I22_2: {odd:?}");
    Ok(())
}

fn properties(_: i64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let (l, e) = sample::reflection_case(&mut rng);
        let refl = l.reflection(&e).map_err(err)?;
        ensure!(refl.compose(&refl).is_identity(), "trial {trial}: reflection not involutive");
        ensure!(l.is_isometry(refl.matrix()).map_err(err)?, "trial {trial}: not an isometry");
        ensure!(refl.apply(&e).map_err(err)? == e.neg(), "trial {trial}: e not sent to -e");
    }
    for trial in 0..200 {
        let n = 1 + trial % 4;
        let l = sample::symmetric(&mut rng, n, 9);
        let basis = sample::independent_vectors(&mut rng, n, n, 4);
        let b = IntMatrix::from_columns(&basis.iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>())
            .expect("square");
        let sub = l.induced_gram(&basis).map_err(err)?;
        let det_b = b.determinant();
        ensure!(
            sub.discriminant() == &det_b * &det_b * l.discriminant(),
            "trial {trial}: index law fails for {}",
            l.gram()
        );
    }
    for trial in 0..200 {
        let n = 2 + trial % 4;
        let k = 1 + trial % (n - 1);
        let l = sample::symmetric(&mut rng, n, 9);
        let basis = sample::independent_vectors(&mut rng, n, k, 6);
        let sat = l.saturation(&basis).map_err(err)?;
        ensure!(same_span(&l.saturation(&sat).map_err(err)?, &sat), "trial {trial}: saturation not idempotent");
        let w = sample::nonzero_vector(&mut rng, n, 6);
        let perp = l.orthogonal_complement(&w).map_err(err)?;
        if !perp.is_empty() {
            ensure!(same_span(&l.saturation(&perp).map_err(err)?, &perp), "trial {trial}: complement not saturated");
        }
    }
    let amb = ns3(1);
    let basis = [ns3_gamma(), ns3_delta2()];
    ensure!(same_span(&amb.saturation(&basis).map_err(err)?, &basis), "Pi(1) not saturated in NS3(1)");
    Ok(())
}

fn quoted_closed_form(_: i64) -> CheckResult {
    let (y, x) = quoted_d5_closed_form(1);
    let value = norm_value(5, &y, &x);
    ensure!(value == BigRational::from_integer((-19).into()), "closed form gives {y}, {x} with value {value}");
    let second = &enumerate_negative(5, 2).map_err(err)?[1];
    ensure!(second.to_string() == "(38, 17)", "second solution {second}");
    Ok(())
}

/// All checks, in report order.
pub fn standard_checks() -> Vec<Check> {
    vec![
        Check { name: "involution", run: involution },
        Check { name: "fujiki", run: fujiki },
        Check { name: "family-identities", run: family_identities },
        Check { name: "pell", run: pell_suite },
        Check { name: "necessary-condition", run: necessary },
        Check { name: "two-polarizations", run: two_polarizations },
        Check { name: "catalog", run: catalog },
        Check { name: "properties", run: properties },
        Check { name: "quoted-closed-form", run: quoted_closed_form },
    ]
}

/// Runs every check, printing one PASS/FAIL line each. Returns the first
/// counterexample, if any.
pub fn run_checks(checks: &[Check], n_max: i64, out: &mut dyn Write) -> io::Result<Option<(String, String)>> {
    let mut first = None;
    for check in checks {
        match (check.run)(n_max) {
            Ok(()) => writeln!(out, "PASS {}", check.name)?,
            Err(msg) => {
                writeln!(out, "FAIL {}: {msg}", check.name)?;
                first.get_or_insert((check.name.to_string(), msg));
            }
        }
    }
    Ok(first)
}
