//! Acceptance suite: runs every criterion, prints one line per criterion
//! and fails if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use rsinv::algebra::{
    l_basis, l_mul, metab_basis, metab_bracket, AlgebraKind, LAlgebra, LElement, MetabElement,
    MetabelianAlgebra,
};
use rsinv::exact::{int, to_i64};
use rsinv::generation::{check_weitzenbock, module_generator_report, remark_generation_check, Verdict};
use rsinv::invariants::group::standard;
use rsinv::invariants::{
    delta_constants, exp_fixed_space, fixed_space, invariant_dims_by_isotypic, linear_constants,
    molien_series, FiniteMatrixGroup, WeitzenbockDerivation,
};
use rsinv::schur::{
    glmodule_series_l, glmodule_series_metabelian, glmodule_series_poly, weyl_dim, Partition,
};

const N: usize = 8;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn weyl(parts: &[usize], d: usize) -> u64 {
    weyl_dim(&Partition::new(parts.to_vec()).unwrap(), d).unwrap()
}

/// The groups of the suite, each with the invariant dimensions of every
/// algebra in degrees `0..=N` computed once from explicit fixed spaces.
struct Suite {
    groups: Vec<(&'static str, FiniteMatrixGroup)>,
    fixed: BTreeMap<(usize, AlgebraKind), Vec<usize>>,
}

impl Suite {
    fn new() -> Result<Self, String> {
        let groups = vec![
            ("{±I}", standard::minus_identity(2)),
            ("C4", standard::rotation_c4()),
            ("swap", standard::swap()),
            ("S3", standard::symmetric(3)),
        ];
        let mut fixed = BTreeMap::new();
        for (i, (_, g)) in groups.iter().enumerate() {
            for kind in AlgebraKind::ALL {
                let dims = (0..=N)
                    .map(|n| {
                        if n < kind.min_degree() {
                            Ok(0)
                        } else {
                            fixed_space(g, kind, n).map(|b| b.dim())
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                fixed.insert((i, kind), dims);
            }
        }
        Ok(Suite { groups, fixed })
    }

    fn dims(&self, i: usize, kind: AlgebraKind) -> &[usize] {
        &self.fixed[&(i, kind)]
    }
}

fn series_for(kind: AlgebraKind, d: usize) -> rsinv::schur::SymmSeries {
    match kind {
        AlgebraKind::L => glmodule_series_l(d, N),
        AlgebraKind::Metabelian => glmodule_series_metabelian(d, N),
        AlgebraKind::Poly => glmodule_series_poly(d, N),
    }
}

fn dimension_identity() -> Outcome {
    for d in 2..=4 {
        for n in 2..=N {
            let count = l_basis(d, n).len() as u64;
            let expected = weyl(&[n], d) + weyl(&[n - 1, 1], d);
            ensure(count == expected, || format!("d={d} n={n}: {count} != {expected}"))?;
        }
    }
    Ok(())
}

fn metabelian_basis_count() -> Outcome {
    for d in 2..=4 {
        for n in 2..=N {
            let count = metab_basis(d, n).len() as u64;
            let expected = weyl(&[n - 1, 1], d);
            ensure(count == expected, || format!("d={d} n={n}: {count} != {expected}"))?;
        }
    }
    Ok(())
}

fn molien_reynolds(suite: &Suite) -> Outcome {
    for (i, (name, g)) in suite.groups.iter().enumerate() {
        for kind in AlgebraKind::ALL {
            let molien = molien_series(&series_for(kind, g.d()), g).map_err(err)?;
            let dims = suite.dims(i, kind);
            for (n, &dim) in dims.iter().enumerate() {
                let coeff = to_i64(&molien.coeff(n)).ok_or("non-integral coefficient")?;
                ensure(coeff == dim as i64, || {
                    format!("{name} {kind} degree {n}: Molien {coeff}, fixed space {dim}")
                })?;
            }
        }
    }
    let c4 = &suite.dims(1, AlgebraKind::Poly)[..=6];
    ensure(c4 == [1, 0, 1, 0, 3, 0, 3], || format!("C4 on poly: {c4:?}"))?;
    let pm = &suite.dims(0, AlgebraKind::L)[1..=6];
    ensure(pm == [0, 4, 0, 8, 0, 12], || format!("{{±I}} on L: {pm:?}"))
}

fn isotypic_pipeline(suite: &Suite) -> Outcome {
    for (i, (name, g)) in suite.groups.iter().enumerate() {
        for kind in AlgebraKind::ALL {
            let iso = invariant_dims_by_isotypic(&series_for(kind, g.d()), g).map_err(err)?;
            let dims: Vec<i64> = suite.dims(i, kind).iter().map(|&x| x as i64).collect();
            ensure(iso == dims, || format!("{name} {kind}: {iso:?} != {dims:?}"))?;
        }
    }
    Ok(())
}

fn quotient_identity() -> Outcome {
    for d in 1..=4 {
        let diff = glmodule_series_l(d, N)
            .sub(&glmodule_series_metabelian(d, N))
            .map_err(err)?
            .restrict_degrees(2, N);
        let poly = glmodule_series_poly(d, N).restrict_degrees(2, N);
        ensure(diff == poly, || format!("d={d}:\n{}\n!=\n{}", diff.to_text(), poly.to_text()))?;
    }
    Ok(())
}

fn generator_witness() -> Outcome {
    let report = module_generator_report(&standard::minus_identity(2), 12).map_err(err)?;
    for row in &report.degrees {
        let expected = if row.n % 2 == 0 { 2 * row.n } else { 0 };
        ensure(row.new_generators == expected, || {
            format!("{{±I}} degree {}: {} new generators, expected {expected}", row.n, row.new_generators)
        })?;
    }
    let swap = standard::swap();
    let counts: Vec<usize> = module_generator_report(&swap, N)
        .map_err(err)?
        .degrees
        .iter()
        .map(|r| r.new_generators)
        .collect();
    ensure(counts.iter().all(|&c| c > 0), || format!("swap: {counts:?}"))?;
    let oracle = common::brute_force_new_generators(&swap, N);
    ensure(counts == oracle, || format!("swap: report {counts:?}, oracle {oracle:?}"))
}

fn words() -> impl Strategy<Value = Vec<(i64, Vec<usize>)>> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..3usize, 1..=4)), 1..=3)
}

fn identities() -> Outcome {
    let l = LAlgebra::new(3);
    let m = MetabelianAlgebra::new(3);
    let l_elem = |t: &[(i64, Vec<usize>)]| {
        t.iter().fold(LElement::zero(), |acc, (c, w)| &acc + &l.word(w).scale(&int(*c)))
    };
    let m_elem = |t: &[(i64, Vec<usize>)]| {
        t.iter().fold(MetabElement::zero(), |acc, (c, w)| &acc + &m.commutator(w).scale(&int(*c)))
    };
    let mut runner = TestRunner::new(Config {
        failure_persistence: None,
        ..Config::with_cases(1000)
    });
    runner
        .run(&(words(), words(), words()), |(a, b, c)| {
            let (a, b, c) = (l_elem(&a), l_elem(&b), l_elem(&c));
            prop_assert_eq!(l_mul(&l_mul(&a, &b), &c), l_mul(&l_mul(&a, &c), &b));
            prop_assert!(l_mul(&a, &l_mul(&b, &c)).is_zero());
            Ok(())
        })
        .map_err(err)?;
    runner
        .run(&(words(), words(), words()), |(a, b, c)| {
            let (a, b, c) = (m_elem(&a), m_elem(&b), m_elem(&c));
            prop_assert!(metab_bracket(&a, &a).is_zero());
            prop_assert_eq!(metab_bracket(&a, &b), -&metab_bracket(&b, &a));
            let j = |x: &MetabElement, y: &MetabElement, z: &MetabElement| {
                metab_bracket(&metab_bracket(x, y), z)
            };
            let sum = &(&j(&a, &b, &c) + &j(&b, &c, &a)) + &j(&c, &a, &b);
            prop_assert!(sum.is_zero());
            prop_assert!(metab_bracket(&metab_bracket(&a, &b), &metab_bracket(&c, &a)).is_zero());
            Ok(())
        })
        .map_err(err)
}

fn weitzenbock_suite() -> Outcome {
    for blocks in [vec![2], vec![3], vec![2, 1], vec![2, 2], vec![3, 1]] {
        let delta = WeitzenbockDerivation::from_blocks(&blocks).map_err(err)?;
        let lin = linear_constants(&delta).dim();
        ensure(lin == blocks.len(), || format!("{blocks:?}: {lin} linear constants"))?;
        for kind in [AlgebraKind::Poly, AlgebraKind::L] {
            for n in kind.min_degree()..=6 {
                let ker = delta_constants(&delta, kind, n).map_err(err)?;
                let fix = exp_fixed_space(&delta, kind, n).map_err(err)?;
                ensure(ker.space == fix, || format!("{blocks:?} {kind} degree {n}"))?;
            }
        }
    }
    let v = check_weitzenbock(&WeitzenbockDerivation::from_blocks(&[3]).map_err(err)?);
    ensure(v.verdict == Verdict::NotFinitelyGenerated, || format!("[3]: {}", v.verdict))?;
    let v = check_weitzenbock(&WeitzenbockDerivation::from_blocks(&[2, 1]).map_err(err)?);
    ensure(v.verdict == Verdict::Inconclusive, || format!("[2, 1]: {}", v.verdict))
}

fn remark_check() -> Outcome {
    for (d, n) in [(2, 8), (3, 6)] {
        let rows = remark_generation_check(d, n).map_err(err)?;
        ensure(rows.len() == n && rows.iter().all(|r| r.generated), || {
            format!("d={d}: {rows:?}")
        })?;
    }
    Ok(())
}

fn lifting_inequality(suite: &Suite) -> Outcome {
    for (i, (name, _)) in suite.groups.iter().enumerate() {
        let l = suite.dims(i, AlgebraKind::L);
        let p = suite.dims(i, AlgebraKind::Poly);
        for n in 2..=N {
            ensure(l[n] >= p[n], || format!("{name} degree {n}: {} < {}", l[n], p[n]))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let suite = Suite::new();
    let with_suite = |f: fn(&Suite) -> Outcome| match &suite {
        Ok(s) => f(s),
        Err(e) => Err(format!("suite setup: {e}")),
    };
    let results = [
        ("dimension identity", dimension_identity()),
        ("metabelian basis count", metabelian_basis_count()),
        ("Molien-Reynolds agreement", with_suite(molien_reynolds)),
        ("isotypic pipeline", with_suite(isotypic_pipeline)),
        ("quotient identity", quotient_identity()),
        ("generator witness", generator_witness()),
        ("identity checks", identities()),
        ("Weitzenböck suite", weitzenbock_suite()),
        ("remark verification", remark_check()),
        ("lifting inequality", with_suite(lifting_inequality)),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(()) => println!("[PASS] {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        results.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
