//! The thirteen acceptance checks, one test per criterion, each printing its
//! own pass/fail line (visible with --nocapture; always included in failure
//! output). Criteria 1 through 12 are library computations; criterion 13 is
//! the recorded command battery.
//!
//! Known red: criterion 5. Over fields of characteristic 3 the branch set of
//! the quarter-invariant wild models is a full Galois orbit of degree-4
//! points, picking up the whole PGL2(F_3) as extra stabilizer; the
//! stabilizer oracle finds order 48 where the classification's formula says
//! 4p = 12. The twelve affected models are listed in the failure detail. The
//! equivariant suborder 2p holds on every model regardless.

use potts::selftest as st;
use potts::CriterionOutcome;

fn report(outcome: CriterionOutcome) {
    let status = if outcome.pass { "PASS" } else { "FAIL" };
    println!("criterion {:02} ({}): {}", outcome.id, outcome.label, status);
    assert!(
        outcome.pass,
        "criterion {:02} ({}) failed:\n{}",
        outcome.id, outcome.label, outcome.detail
    );
}

#[test]
fn criterion_01() {
    report(st::criterion_01_order_criterion());
}

#[test]
fn criterion_02() {
    report(st::criterion_02_unipotent_survey());
}

#[test]
fn criterion_03() {
    report(st::criterion_03_cyclotomic_identities());
}

#[test]
fn criterion_04() {
    report(st::criterion_04_fibres_mod_p());
}

#[test]
fn criterion_05() {
    report(st::criterion_05_classification_vs_oracle());
}

#[test]
fn criterion_06() {
    report(st::criterion_06_resultant_identity());
}

#[test]
fn criterion_07() {
    report(st::criterion_07_wild_invariance());
}

#[test]
fn criterion_08() {
    report(st::criterion_08_norm_invariants());
}

#[test]
fn criterion_09() {
    report(st::criterion_09_specialization());
}

#[test]
fn criterion_10() {
    report(st::criterion_10_picard_structures());
}

#[test]
fn criterion_11() {
    report(st::criterion_11_censuses());
}

#[test]
fn criterion_12() {
    report(st::criterion_12_degenerations());
}

#[test]
fn criterion_13() {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
        for (name, args, _) in potts_cli::golden::BATTERY {
            let (out, code) = potts_cli::dispatch(args);
            assert_eq!(code, 0, "{name} exits {code} while regenerating");
            let ext = if name.ends_with("csv") { "csv" } else { "json" };
            std::fs::write(dir.join(format!("{name}.{ext}")), format!("{out}\n")).unwrap();
        }
        eprintln!("golden files rewritten; recompile to embed them");
        return;
    }
    report(potts_cli::golden_battery_outcome());
}

/// The installed binary agrees with in-process dispatch on a pinned request
/// and on the exit-code contract.
#[test]
fn binary_matches_dispatch() {
    let exe = env!("CARGO_BIN_EXE_potts");
    let out = std::process::Command::new(exe)
        .args(["pgl2", "order", "--field", "7", "--matrix", "[[3,0],[0,1]]"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"order\":6}\n");

    let bad = std::process::Command::new(exe)
        .args(["pgl2", "order", "--field", "7", "--matrix", "[[3,0],[0,1]"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}
