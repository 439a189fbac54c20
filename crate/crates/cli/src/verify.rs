//! Exhaustive verification suites runnable from the command line, one per
//! published statement.

use mmp132::bijections::{
    down_steps_at_or_above, dyck_to_perm, left_subtrees_at_least, perm_to_dyck, perm_to_tree,
    phi, phi_inverse, suffix_pack_first_value, tree_to_perm,
};
use mmp132::distribution::{avoiders_132, q_polynomial};
use mmp132::perm::MeshPattern;
use mmp132::tamari::{s_set, s_set_difference_projection, verify_ideal, verify_interval_structure};
use mmp132::triangles::{
    catalan_number, catalan_triangle, expand_series, narayana, q_zero_convolution,
    q_zero_partial_sum, q_zero_rational, q_zero_recurrence,
};

pub struct Outcome {
    pub checked: u64,
    pub failure: Option<String>,
}

impl Outcome {
    fn pass(checked: u64) -> Self {
        Outcome {
            checked,
            failure: None,
        }
    }

    fn fail(checked: u64, message: String) -> Self {
        Outcome {
            checked,
            failure: Some(message),
        }
    }
}

pub const THEOREM_IDS: &[&str] = &[
    "2.1",
    "2.2",
    "3.1",
    "3.2",
    "3.3",
    "3.5",
    "3.6",
    "4.1",
    "4.2",
    "4.4",
    "props-3.7-3.9",
    "eq-11",
    "eq-14",
];

pub fn run(theorem: &str, max_n: usize) -> Option<Outcome> {
    let outcome = match theorem {
        "2.1" => dyck_transport(max_n),
        "2.2" => catalan_triangle_rows_match(MeshPattern::new(1, 0, 0, 0), max_n),
        "3.1" => first_value_statistic(max_n),
        "3.2" => suffix_pack_transport(max_n),
        "3.3" => parking_bijection(max_n),
        "3.5" => q_zero_is_partial_sum(max_n),
        "3.6" => q_zero_recurrence_matches_brute_force(max_n),
        "4.1" => narayana_rows_match(max_n),
        "4.2" => left_branch_statistic(max_n),
        "4.4" => tree_transport(max_n),
        "props-3.7-3.9" => order_structure(max_n),
        "eq-11" => rational_series(max_n),
        "eq-14" => convolution_agreement(max_n),
        _ => return None,
    };
    Some(outcome)
}

fn dyck_transport(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for sigma in avoiders_132(n) {
            let path = perm_to_dyck(&sigma).expect("avoider");
            if dyck_to_perm(&path) != sigma {
                return Outcome::fail(checked, format!("round trip failed on {sigma}"));
            }
            for ell in 1..=n {
                checked += 1;
                let lhs = sigma.mmp(&MeshPattern::new(ell, 0, 0, 0));
                let rhs = down_steps_at_or_above(&path, ell);
                if lhs != rhs {
                    return Outcome::fail(
                        checked,
                        format!("{sigma}, ell = {ell}: mmp {lhs} vs {rhs} down steps"),
                    );
                }
            }
        }
    }
    Outcome::pass(checked)
}

fn catalan_triangle_rows_match(pattern: MeshPattern, max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        let coeffs = q_polynomial(n, pattern).coeffs().to_vec();
        let row: Vec<u128> = (1..=n)
            .map(|k| catalan_triangle(n, k).expect("in range"))
            .collect();
        checked += n as u64;
        if coeffs != row {
            return Outcome::fail(checked, format!("row n = {n}: {coeffs:?} vs {row:?}"));
        }
    }
    Outcome::pass(checked)
}

fn first_value_statistic(max_n: usize) -> Outcome {
    let pattern = MeshPattern::new(0, 1, 0, 0);
    let mut checked = 0;
    for n in 1..=max_n {
        for sigma in avoiders_132(n) {
            checked += 1;
            if sigma.mmp(&pattern) as u32 != sigma.values()[0] - 1 {
                return Outcome::fail(checked, format!("counterexample {sigma}"));
            }
        }
    }
    Outcome::pass(checked)
}

fn suffix_pack_transport(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for sigma in avoiders_132(n) {
            for ell in 1..=n {
                checked += 1;
                let stat = sigma.mmp(&MeshPattern::new(0, ell, 0, 0)) as u32;
                let first = suffix_pack_first_value(&sigma, ell).expect("in range");
                if first != stat + 1 {
                    return Outcome::fail(
                        checked,
                        format!("{sigma}, ell = {ell}: first {first} vs mmp + 1 = {}", stat + 1),
                    );
                }
            }
        }
    }
    Outcome::pass(checked)
}

fn parking_bijection(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        let avoiders = avoiders_132(n);
        let mut images = std::collections::HashSet::new();
        for sigma in &avoiders {
            checked += 1;
            let pf = match phi(sigma) {
                Ok(pf) => pf,
                Err(e) => return Outcome::fail(checked, format!("{sigma}: invalid image ({e})")),
            };
            if phi_inverse(&pf) != *sigma {
                return Outcome::fail(checked, format!("round trip failed on {sigma}"));
            }
            images.insert(pf);
        }
        if images.len() != avoiders.len() {
            return Outcome::fail(checked, format!("phi not injective at n = {n}"));
        }
    }
    Outcome::pass(checked)
}

fn q_zero_is_partial_sum(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for k in 1..=n + 2 {
            checked += 1;
            let brute = q_polynomial(n, MeshPattern::new(0, k, 0, 0)).coeffs()[0];
            let sum = q_zero_partial_sum(n, k).expect("exact");
            if brute != sum {
                return Outcome::fail(checked, format!("({n},{k}): brute {brute} vs sum {sum}"));
            }
        }
    }
    Outcome::pass(checked)
}

fn q_zero_recurrence_matches_brute_force(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for k in 1..=n + 2 {
            checked += 1;
            let brute = q_polynomial(n, MeshPattern::new(0, k, 0, 0)).coeffs()[0];
            let rec = q_zero_recurrence(n, k).expect("exact");
            if brute != rec {
                return Outcome::fail(
                    checked,
                    format!("({n},{k}): brute {brute} vs recurrence {rec}"),
                );
            }
        }
    }
    Outcome::pass(checked)
}

fn narayana_rows_match(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        let coeffs = q_polynomial(n, MeshPattern::new(0, 0, 1, 0)).coeffs().to_vec();
        let row: Vec<u128> = (1..=n).map(|k| narayana(n, k).expect("in range")).collect();
        checked += n as u64;
        if coeffs != row {
            return Outcome::fail(checked, format!("row n = {n}: {coeffs:?} vs {row:?}"));
        }
    }
    Outcome::pass(checked)
}

fn left_branch_statistic(max_n: usize) -> Outcome {
    let pattern = MeshPattern::new(0, 0, 1, 0);
    let mut checked = 0;
    for n in 1..=max_n {
        for sigma in avoiders_132(n) {
            checked += 1;
            let shape = perm_to_tree(&sigma).expect("avoider").shape();
            if sigma.mmp(&pattern) != left_subtrees_at_least(&shape, 1) {
                return Outcome::fail(checked, format!("counterexample {sigma}"));
            }
        }
    }
    Outcome::pass(checked)
}

fn tree_transport(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for sigma in avoiders_132(n) {
            let tree = perm_to_tree(&sigma).expect("avoider");
            if tree_to_perm(&tree).expect("decreasing") != sigma {
                return Outcome::fail(checked, format!("round trip failed on {sigma}"));
            }
            let shape = tree.shape();
            for ell in 1..=n {
                checked += 1;
                let lhs = sigma.mmp(&MeshPattern::new(0, 0, ell, 0));
                let rhs = left_subtrees_at_least(&shape, ell);
                if lhs != rhs {
                    return Outcome::fail(
                        checked,
                        format!("{sigma}, ell = {ell}: mmp {lhs} vs {rhs} left subtrees"),
                    );
                }
            }
        }
    }
    Outcome::pass(checked)
}

fn order_structure(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for k in 1..=n {
            // Prop 3.7: membership is "1 sits at position <= k"
            let members = s_set(n, k);
            let pattern = MeshPattern::new(0, k, 0, 0);
            for sigma in avoiders_132(n) {
                checked += 1;
                let in_set = sigma.mmp(&pattern) == 0;
                if in_set != (sigma.position_of(1).expect("contains 1") <= k) {
                    return Outcome::fail(checked, format!("Prop 3.7 fails on {sigma}, k = {k}"));
                }
            }
            if n >= 2 {
                let projected = s_set_difference_projection(n, k);
                if projected != s_set(n - 1, k) {
                    return Outcome::fail(
                        checked,
                        format!("remove-1-then-pack of S({n},{k}) difference is not S({},{k})", n - 1),
                    );
                }
            }
            checked += members.len() as u64;

            // Prop 3.8: S(n, k) and its difference are Tamari intervals
            let report = verify_interval_structure(n, k);
            checked += 1;
            if !report.pass {
                return Outcome::fail(
                    checked,
                    format!("interval structure ({n},{k}): {}", report.failures.join("; ")),
                );
            }

            // Prop 3.9: bounded-statistic sets are closed downward
            for ell in 0..=n {
                checked += 1;
                let report = verify_ideal(n, k, ell);
                if !report.downward_closed {
                    return Outcome::fail(
                        checked,
                        format!(
                            "ideal ({n},{k},{ell}) not downward closed: {:?}",
                            report.down_witness
                        ),
                    );
                }
            }
        }
    }
    Outcome::pass(checked)
}

fn rational_series(max_n: usize) -> Outcome {
    let mut checked = 0;
    for k in 1..=4 {
        let rs = q_zero_rational(k).expect("k <= 4");
        let coeffs = expand_series(&rs, max_n).expect("exact");
        if coeffs[0] != 1 {
            return Outcome::fail(checked, format!("k = {k}: constant term {}", coeffs[0]));
        }
        for (n, &c) in coeffs.iter().enumerate().skip(1) {
            checked += 1;
            let table = q_zero_recurrence(n, k).expect("exact");
            if c as u128 != table {
                return Outcome::fail(
                    checked,
                    format!("k = {k}, n = {n}: series {c} vs table {table}"),
                );
            }
        }
    }
    Outcome::pass(checked)
}

fn convolution_agreement(max_n: usize) -> Outcome {
    let bound = max_n.max(10);
    let mut checked = 0;
    for n in 1..=bound {
        for k in 1..=bound {
            checked += 1;
            let conv = q_zero_convolution(n, k).expect("exact");
            let rec = q_zero_recurrence(n, k).expect("exact");
            let sum = q_zero_partial_sum(n, k).expect("exact");
            if conv != rec || conv != sum {
                return Outcome::fail(
                    checked,
                    format!("({n},{k}): convolution {conv}, recurrence {rec}, sum {sum}"),
                );
            }
        }
        if let (Ok(diag), Ok(cat)) = (q_zero_convolution(n, n), catalan_number(n)) {
            checked += 1;
            if diag != cat {
                return Outcome::fail(checked, format!("R({n},{n}) = {diag} but C_{n} = {cat}"));
            }
        }
    }
    Outcome::pass(checked)
}
