//! The recorded request battery: twelve commands spanning every subcommand
//! family, each paired with the exact output document it must reproduce.
//! The files under golden/ are the recorded bytes (payload plus one trailing
//! newline); regenerate them with the acceptance test's UPDATE_GOLDEN=1 mode
//! after an intentional output change, then recompile.

pub const BATTERY: &[(&str, &[&str], &str)] = &[
    (
        "01_pgl2_order",
        &["pgl2", "order", "--field", "7", "--matrix", "[[3,0],[0,1]]"],
        include_str!("../golden/01_pgl2_order.json"),
    ),
    (
        "02_pgl2_survey",
        &["pgl2", "survey", "--field", "3"],
        include_str!("../golden/02_pgl2_survey.json"),
    ),
    (
        "03_poly_psi",
        &["poly", "psi", "--n", "7"],
        include_str!("../golden/03_poly_psi.json"),
    ),
    (
        "04_poly_chi",
        &["poly", "chi", "--n", "5"],
        include_str!("../golden/04_poly_chi.json"),
    ),
    (
        "05_curve_info",
        &["curve", "info", "--field", "7", "--N", "3", "--A", "0", "--B", "-1"],
        include_str!("../golden/05_curve_info.json"),
    ),
    (
        "06_curve_aut_oracle",
        &["curve", "aut", "--field", "7", "--N", "3", "--A", "0", "--B", "-1", "--oracle"],
        include_str!("../golden/06_curve_aut_oracle.json"),
    ),
    (
        "07_wildnorm_verify",
        &["wildnorm", "verify-resultant", "--p", "3", "--field", "7", "--trials", "25", "--seed", "7"],
        include_str!("../golden/07_wildnorm_verify.json"),
    ),
    (
        "08_wildnorm_j",
        &[
            "wildnorm", "j", "--p", "3", "--field", "7", "--t", "2", "--psi", "1", "--U", "1",
            "--A", "1", "--B", "3",
        ],
        include_str!("../golden/08_wildnorm_j.json"),
    ),
    (
        "09_picard_characters",
        &["picard", "characters", "--N", "3"],
        include_str!("../golden/09_picard_characters.json"),
    ),
    (
        "10_picard_wild",
        &["picard", "wild", "--p", "5"],
        include_str!("../golden/10_picard_wild.json"),
    ),
    (
        "11_moduli_cusps",
        &["moduli", "cusps", "--N", "5"],
        include_str!("../golden/11_moduli_cusps.json"),
    ),
    (
        "12_moduli_census_csv",
        &["moduli", "census", "--variant", "tame", "--N", "3", "--field", "7", "--csv"],
        include_str!("../golden/12_moduli_census_csv.csv"),
    ),
];
