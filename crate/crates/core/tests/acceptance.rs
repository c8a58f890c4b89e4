//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p kwbn --test acceptance -- --nocapture` to see the lines.

mod common;

use common::*;
use kwbn::classifying::{bsl_presentation, even_odd_split, reconstruct};
use kwbn::euler::*;
use kwbn::rep::matrix::{q, SparseVec};
use kwbn::rep::{classify_plane, decompose, tensor, IrrepLabel, NRep, Orientation};
use kwbn::{BnElement, Twist};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<Vec<String>, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_rows(kind: TableKind, rows: &[&[i64]], first_n: usize) -> Outcome {
    let mut table = CoeffTable::new(kind);
    let mut count = 0;
    for (i, row) in rows.iter().enumerate() {
        let n = i + first_n;
        for (k, want) in row.iter().enumerate() {
            let got = table.get(k as i64, n as i64);
            ensure(got == BigInt::from(*want), || format!("({k},{n}): got {got}, table has {want}"))?;
            count += 1;
        }
    }
    Ok(vec![format!("{count} entries match")])
}

fn criterion_1() -> Outcome {
    table_rows(TableKind::Alpha, &ALPHA_ROWS, 0)
}

fn criterion_2() -> Outcome {
    table_rows(TableKind::Beta, &BETA_ROWS, 1)
}

fn criterion_3() -> Outcome {
    for m in 1..=101 {
        let cap = 2 * m + 2;
        let (r, c) = (b1_recursive(m, cap).map_err(|e| e.to_string())?, b1_closed(m, cap).map_err(|e| e.to_string())?);
        ensure(r == c, || format!("m = {m}: recursive {r} vs closed {c}"))?;
        ensure(to_map(&c) == oracle_b1(m), || format!("m = {m}: closed form disagrees with the plain-integer oracle"))?;
    }
    Ok(vec!["m = 1..=101 agree (and match an independent integer recurrence)".into()])
}

fn criterion_4() -> Outcome {
    let cap = 64;
    let want = [
        (3, BnElement::from_int_terms(Twist::Untwisted, cap, [(1, 0, -3), (3, 1, 1)])),
        (4, BnElement::from_int_terms(Twist::Twisted, cap, [(2, 1, 1), (0, 0, -2)])),
        (5, BnElement::from_int_terms(Twist::Untwisted, cap, [(1, 0, 5), (3, 1, -5), (5, 2, 1)])),
    ];
    let mut lines = Vec::new();
    for (m, w) in want {
        let got = b1_closed(m, cap).map_err(|e| e.to_string())?;
        ensure(got == w, || format!("b1({m}) = {got}, expected {w}"))?;
        lines.push(format!("b1({m}) = {got}"));
    }
    // the γ-exponent of the top term of b1(5) is forced to 2 by degree
    let b5 = b1_closed(5, cap).unwrap();
    ensure(b5.coeff(5).as_monomial().map(|(k, _)| k) == Some(2), || "top term of b1(5) is not γ²e⁵".into())?;
    Ok(lines)
}

fn criterion_5() -> Outcome {
    let cap = 64;
    let et = BnElement::e_tilde(cap);
    let sq = et.mul(&et).unwrap();
    let want = BnElement::from_int_terms(Twist::Untwisted, cap, [(2, 0, -4), (4, 1, 1)]);
    ensure(sq == want, || format!("ẽ·ẽ = {sq}"))?;
    let report = consistency_check(Identity::SquaredTwo, cap);
    ensure(report.holds, || format!("squared_two does not hold:\n{report}"))?;
    let get = |name: &str| {
        report
            .derived
            .iter()
            .find(|(n, _)| n.starts_with(name))
            .map(|(_, v)| v.clone())
            .ok_or_else(|| format!("report lacks {name}"))
    };
    let forced = get("ẽ² forced")?;
    ensure(forced == want, || format!("identity forces ẽ² = {forced}"))?;
    let required = get("required weight-1")?;
    let minus_two_e = BnElement::from_int_terms(Twist::Untwisted, cap, [(1, 0, -2)]);
    ensure(required == minus_two_e, || format!("required weight-1 contribution is {required}"))?;
    ensure(!report.warnings.is_empty(), || "the -2e vs -e tension was not reported".into())?;
    let mut lines = vec![
        format!("ẽ·ẽ = {sq}; the identity forces ẽ² = {forced}"),
        format!("weight-1 part must contribute {required}"),
    ];
    lines.extend(report.warnings.iter().map(|w| format!("WARNING: {w}")));
    Ok(lines)
}

fn criterion_6() -> Outcome {
    for m in 2..=25 {
        let cap = 2 * m + 6;
        let report = consistency_check(Identity::step(m), cap);
        ensure(report.holds && report.warnings.is_empty(), || format!("{report}"))?;
        // the Cartan side against the closed formula b(m+2) + 2b(m) + b(m-2)
        let b = |k| b1_recursive(k, cap).unwrap();
        let explicit = b(m + 2).add(&b(m).scale_int(2)).unwrap();
        let explicit = if m == 2 { explicit } else { explicit.add(&b(m - 2)).unwrap() };
        ensure(report.rhs == explicit, || format!("m = {m}: Cartan sum {} vs {}", report.rhs, explicit))?;
        let lhs = b(m).mul(&BnElement::from_int_terms(Twist::Untwisted, cap, [(2, 1, 1)])).unwrap();
        ensure(report.lhs == lhs, || format!("m = {m}: ternary side {} vs γ·b1(m)·e²", report.lhs))?;
    }
    Ok(vec!["γ·b1(m)·e² = b1(m+2) + 2b1(m) + b1(m-2) for m = 2..=25".into()])
}

fn criterion_7() -> Outcome {
    for m in 1..=51u32 {
        let cap = 2 * m + 2;
        let z = b1_closed(m, cap).unwrap().specialize_gamma_zero().map_err(|e| e.to_string())?;
        let want = if m % 2 == 1 {
            let s = if ((m - 1) / 2) % 2 == 0 { 1 } else { -1 };
            BnElement::from_int_terms(Twist::Untwisted, cap, [(1, 0, s * i64::from(m))])
        } else {
            let s = if ((m + 2) / 2) % 2 == 0 { 1 } else { -1 };
            BnElement::from_int_terms(Twist::Twisted, cap, [(0, 0, s * i64::from(m / 2))])
        };
        ensure(z == want, || format!("m = {m}: γ = 0 gives {z}, expected {want}"))?;
    }
    Ok(vec!["odd m ≤ 51 and even m ≤ 50 specialise as expected".into()])
}

/// Basis vector `a ⊗ b ⊗ c` of a triple tensor of planes, 0-based indices
/// (index 0 is the positive-weight vector of each factor).
fn basis(sign: i64, a: usize, b: usize, c: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert((a * 2 + b) * 2 + c, q(sign));
    v
}

type ExplicitBases = [((i64, [usize; 3]), [usize; 3]); 4];

fn classify_bases(rep: &NRep, bases: &ExplicitBases) -> Result<Vec<IrrepLabel>, String> {
    let mut out = bases
        .iter()
        .map(|((s, [a, b, c]), [x, y, z])| classify_plane(rep, &basis(*s, *a, *b, *c), &basis(1, *x, *y, *z)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    out.sort();
    Ok(out)
}

fn criterion_8() -> Outcome {
    use IrrepLabel::{Sign, Trivial, TwoDim};
    use Orientation::{Minus, Plus};
    let triple = |a, b, c| tensor(&tensor(&plus(a), &plus(b)), &plus(c));
    let labels = |rep: &NRep| decompose(rep).map(|d| d.labels()).map_err(|e| e.to_string());
    let mut lines = Vec::new();

    // O+(1)⊗3 and its listed bases
    let r = triple(1, 1, 1);
    let want = vec![TwoDim(3, Plus), TwoDim(1, Plus), TwoDim(1, Plus), TwoDim(1, Plus)];
    let got = labels(&r)?;
    ensure(got == want, || format!("O+(1)⊗3 → {got:?}"))?;
    let reference: ExplicitBases = [
        ((1, [0, 0, 0]), [1, 1, 1]),
        ((-1, [0, 0, 1]), [1, 1, 0]),
        ((-1, [0, 1, 0]), [1, 0, 1]),
        ((-1, [1, 0, 0]), [0, 1, 1]),
    ];
    let from_bases = classify_bases(&r, &reference)?;
    ensure(from_bases == want, || format!("listed bases of O+(1)⊗3 classify as {from_bases:?}"))?;
    lines.push("O+(1)⊗3 = O+(3) + 3·O+(1)".into());

    // O+(m)⊗O+(1)⊗O+(1)
    let reference: ExplicitBases = [
        ((1, [0, 0, 0]), [1, 1, 1]),
        ((-1, [0, 0, 1]), [1, 1, 0]),
        ((-1, [0, 1, 0]), [1, 0, 1]),
        ((1, [0, 1, 1]), [1, 0, 0]),
    ];
    for m in 2..=25 {
        let r = triple(m, 1, 1);
        let mut want = vec![TwoDim(m + 2, Plus), TwoDim(m, Plus), TwoDim(m, Plus)];
        if m == 2 {
            // the weight-0 plane of Õ⁺(0) splits into the trivial and sign lines
            want.extend([Trivial, Sign]);
        } else {
            want.push(TwoDim(m - 2, Plus));
        }
        let got = labels(&r)?;
        ensure(got == want, || format!("O+({m})⊗O+(1)⊗2 → {got:?}"))?;
        if m > 2 {
            let from_bases = classify_bases(&r, &reference)?;
            ensure(from_bases == want, || format!("m = {m}: listed bases classify as {from_bases:?}"))?;
        }
    }
    lines.push("O+(m)⊗O+(1)⊗2 = O+(m+2) + 2·O+(m) + O+(m-2) for m = 2..=25 (m = 2: triv + sign)".into());

    // O+(2)⊗O+(2)⊗O+(1)
    let r = triple(2, 2, 1);
    let got = labels(&r)?;
    let want = vec![TwoDim(5, Plus), TwoDim(3, Plus), TwoDim(1, Minus), TwoDim(1, Minus)];
    ensure(got == want, || format!("O+(2)⊗2⊗O+(1) → {got:?}"))?;
    let reference: ExplicitBases = [
        ((1, [0, 0, 0]), [1, 1, 1]),
        ((-1, [0, 0, 1]), [1, 1, 0]),
        ((1, [0, 1, 0]), [1, 0, 1]),
        ((1, [1, 0, 0]), [0, 1, 1]),
    ];
    let from_bases = classify_bases(&r, &reference)?;
    ensure(from_bases == want, || format!("listed bases classify as {from_bases:?}"))?;
    // the alternative multiset O+(5) + 2·O+(3) + O-(1) has the wrong torus character
    let (pos, _) = character(&r);
    ensure(pos == [5, 3, 1, 1], || format!("character {pos:?}"))?;
    lines.push("O+(2)⊗2⊗O+(1) = O+(5) + O+(3) + 2·O-(1), agreeing with the listed bases (weights 5, 3, 1, 1)".into());
    lines.push("note: a second O+(3) would need two weight-3 vectors; the character has one".into());
    Ok(lines)
}

fn criterion_9() -> Outcome {
    let mut lines = Vec::new();
    for k in (0..=20).step_by(2) {
        let x = sym_euler(k, 64).map_err(|e| e.to_string())?;
        ensure(x.is_zero(), || format!("Sym^{k}: {x}"))?;
    }
    let mut signs = Vec::new();
    for k in (1..=15).step_by(2) {
        let x = sym_euler(k, 64).map_err(|e| e.to_string())?;
        let (exp, c) = x.lowest_term().ok_or_else(|| format!("Sym^{k} has zero Euler class"))?;
        ensure(exp == (k + 1) / 2, || format!("Sym^{k}: lowest exponent {exp}"))?;
        ensure(c.num_terms() == 1, || format!("Sym^{k}: lowest coefficient {c}"))?;
        let v = c.coeff(0);
        ensure(v.abs() == double_factorial(k), || format!("Sym^{k}: lowest coefficient {v}"))?;
        signs.push(format!("{k}:{}", if v.is_negative() { '-' } else { '+' }));
    }
    lines.push("even k ≤ 20 vanish; odd k ≤ 15 have |lowest coefficient| = k!! at e^((k+1)/2)".into());
    lines.push(format!("signs (recorded, not asserted): {}", signs.join(" ")));
    Ok(lines)
}

fn criterion_10() -> Outcome {
    for m in 1..=50 {
        let cap = 2 * m + 2;
        let p = euler_class(IrrepLabel::TwoDim(m, Orientation::Plus), cap).unwrap();
        let n = euler_class(IrrepLabel::TwoDim(m, Orientation::Minus), cap).unwrap();
        ensure(n == -&p, || format!("m = {m}"))?;
    }
    Ok(vec!["e(O-(m)) = -e(O+(m)) for m = 1..=50".into()])
}

fn run_cases<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<String, String> {
    let mut runner = TestRunner::new(Config::with_cases(1000));
    runner
        .run(&strategy, test)
        .map(|_| format!("{name}: 1000 cases"))
        .map_err(|e| format!("{name}: {e}"))
}

fn criterion_11() -> Outcome {
    let e = bsl_presentation(6, 24).unwrap().generators()[2].clone();
    let line = run_cases("⟦p₁, p₂, e⟧ at degree 24", bsl6_element(), |f| {
        let (ev, od) = even_odd_split(&f, "e").unwrap();
        prop_assert_eq!(reconstruct(&ev, &od, &e).unwrap(), f);
        Ok(())
    })?;
    Ok(vec![line])
}

fn criterion_12() -> Outcome {
    let same_twist = twist().prop_flat_map(|t| (bn_with_twist(t, CAP), bn_with_twist(t, CAP), bn_element(CAP)));
    Ok(vec![
        run_cases("GammaScalar ring axioms", (gamma_scalar(), gamma_scalar(), gamma_scalar()), |(a, b, c)| {
            gamma_laws(&a, &b, &c)
        })?,
        run_cases("BnElement ring axioms and twist additivity", same_twist, |(a, b, c)| bn_laws(&a, &b, &c))?,
        run_cases(
            "ẽ² rewrite confluence",
            (bn_with_twist(Twist::Untwisted, CAP), bn_with_twist(Twist::Untwisted, CAP)),
            |(f, g)| rewrite_confluence(&f, &g),
        )?,
        run_cases("truncation coherence", (bn_element(CAP), bn_element(CAP), 0..=CAP), |(a, b, s)| {
            truncation_coherence(&a, &b, s)
        })?,
        run_cases("degree multiplicativity", (homogeneous_bn(CAP), homogeneous_bn(CAP)), |(a, b)| {
            degree_multiplicativity(&a, &b)
        })?,
        run_cases("MultiPoly ring axioms", (multipoly(), multipoly(), multipoly()), |(a, b, c)| {
            multipoly_laws(&a, &b, &c)
        })?,
        run_cases(
            "substitution homomorphism",
            (multipoly(), multipoly(), prop::array::uniform3(bn_with_twist(Twist::Untwisted, CAP))),
            |(a, b, v)| substitution_homomorphism(&a, &b, &v),
        )?,
    ])
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("α-table reproduction", criterion_1),
        ("β-table reproduction", criterion_2),
        ("recurrence ⇔ closed form", criterion_3),
        ("named values", criterion_4),
        ("ẽ² relation round trip", criterion_5),
        ("ternary/Cartan consistency", criterion_6),
        ("Witt-sheaf specialisation", criterion_7),
        ("representation oracle", criterion_8),
        ("symmetric powers", criterion_9),
        ("sign rule", criterion_10),
        ("splitting bijection", criterion_11),
        ("ring axioms and twist additivity", criterion_12),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        match check() {
            Ok(details) => {
                println!("criterion {n:>2}: PASS  {name}");
                for d in details {
                    println!("               {d}");
                }
            }
            Err(why) => {
                println!("criterion {n:>2}: FAIL  {name}: {why}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
