//! Documented example invocations and their expected exit codes. Each has a
//! golden JSON file `golden/<name>.json`.

pub const CASES: &[(&str, &[&str], i32)] = &[
    (
        "twist_d2",
        &["twist", "--on", "1/4", "--along", "1/2", "--sign", "+1"],
        0,
    ),
    (
        "twist_self",
        &["twist", "--on", "2/3", "--along", "2/3", "--sign", "-1"],
        0,
    ),
    (
        "twist_count",
        &[
            "twist", "--on", "-7/3", "--along", "-2/1", "--sign", "+1", "--count", "3",
        ],
        0,
    ),
    (
        "twist_parse_error",
        &["twist", "--on", "7/x", "--along", "1", "--sign", "+1"],
        2,
    ),
    (
        "reduce_three",
        &["reduce", "--slope", "-7/3", "--n", "-1", "--a", "-1/4"],
        0,
    ),
    (
        "reduce_integer",
        &["reduce", "--slope", "-2", "--n", "-1", "--a", "-1/4"],
        0,
    ),
    (
        "reduce_hypothesis",
        &["reduce", "--slope", "-1/2", "--n", "-1", "--a", "-1/4"],
        3,
    ),
    (
        "classify_descending",
        &["classify", "--slope", "-2/3", "--n", "-1", "--a", "-1/4"],
        0,
    ),
    (
        "classify_realizable",
        &["classify", "--slope", "-3/2", "--n", "-1", "--a", "-1/4"],
        0,
    ),
    (
        "classify_unknown",
        &["classify", "--slope", "-5/11", "--n", "-1", "--a", "-1/4"],
        0,
    ),
    (
        "classify_inadmissible",
        &["classify", "--slope", "0", "--n", "-1", "--a", "-1/4"],
        3,
    ),
    (
        "family_status_tight",
        &["family", "status", "--n", "3", "--k1", "2", "--k2", "2"],
        0,
    ),
    (
        "family_status_capped",
        &[
            "family", "status", "--n", "3", "--k1", "2", "--k2", "2", "--capped",
        ],
        0,
    ),
    (
        "family_fdtc",
        &["family", "fdtc", "--n", "3", "--k1", "2", "--k2", "5"],
        0,
    ),
    (
        "family_homology_n1",
        &["family", "homology", "--n", "1", "--k1", "0", "--k2", "0"],
        0,
    ),
    (
        "family_homology_capped",
        &[
            "family", "homology", "--n", "3", "--k1", "1", "--k2", "1", "--capped",
        ],
        0,
    ),
    (
        "family_homology_zero_fill",
        &[
            "family", "homology", "--n", "3", "--k1", "1", "--k2", "1", "--fill", "B1=0",
        ],
        0,
    ),
    (
        "family_tight_slopes",
        &[
            "family",
            "tight-slopes",
            "--n",
            "3",
            "--k1",
            "2",
            "--k2",
            "2",
            "--a",
            "1/3",
        ],
        0,
    ),
    (
        "family_tight_slopes_regime",
        &[
            "family",
            "tight-slopes",
            "--n",
            "1",
            "--k1",
            "2",
            "--k2",
            "2",
        ],
        3,
    ),
    (
        "braid_components_family",
        &[
            "braid",
            "components",
            "--word",
            "( s1 s2^-1 s3 ( s1 s2 )^-6 )^1",
        ],
        0,
    ),
    (
        "braid_det_trefoil",
        &["braid", "det", "--word", "s1^3", "--strands", "2"],
        0,
    ),
    (
        "braid_components_empty",
        &["braid", "components", "--word", "", "--strands", "4"],
        0,
    ),
    (
        "braid_parse_error",
        &["braid", "det", "--word", "s1 (s2"],
        2,
    ),
    (
        "openbook_lens",
        &[
            "openbook",
            "homology",
            "--surface",
            "annulus",
            "--word",
            "gamma^5",
        ],
        0,
    ),
    (
        "openbook_identity",
        &["openbook", "homology", "--surface", "T"],
        0,
    ),
];
