//! Release gate: one test per behavioural guarantee, each printing a
//! PASS/FAIL line with the measured figure before asserting.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see every line.

use qtsallis::{
    build_joint_state, closed_form_iq, closed_form_iq_prime, closed_form_joint_spectrum,
    family_mutual_information, figure_table, find_iq_peak, hermitian_eigenvalues,
    mutual_information, random_density_operator, run_sweep, tensor_product, write_sweep_csv,
    DensityOperator, EntropicIndex, Measure, MeasureSelection, QubitPairParams, SweepSpec,
};

fn params(p: f64, gamma: f64) -> QubitPairParams {
    QubitPairParams::new(p, gamma).unwrap()
}

fn q(value: f64) -> EntropicIndex {
    EntropicIndex::new(value).unwrap()
}

fn report(name: &str, passed: bool, detail: &str) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("{status} {name}: {detail}");
    assert!(passed, "{name}: {detail}");
}

const P_GRID: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
const GAMMA_GRID: [f64; 6] = [0.0, 0.25, 0.5, 0.75, 0.999, 1.0];

#[test]
fn criterion_01_von_neumann_recovery() {
    let mut worst: f64 = 0.0;
    for pi in 1..=9 {
        let p = pi as f64 / 10.0;
        for &gamma in &[0.0, 0.5, 1.0] {
            let pr = params(p, gamma);
            let i1 = family_mutual_information(&pr, q(1.0)).unwrap().i_q;
            for dq in [1e-4, -1e-4] {
                let near = family_mutual_information(&pr, q(1.0 + dq)).unwrap().i_q;
                worst = worst.max((near - i1).abs());
            }
        }
    }
    let bell = family_mutual_information(&params(0.5, 1.0), q(1.0)).unwrap().i_q;
    let dev_2ln2 = (bell - 2.0 * 2.0f64.ln()).abs();
    report(
        "criterion_01_von_neumann_recovery",
        worst <= 1e-3 && dev_2ln2 <= 1e-9,
        &format!(
            "max |I_(1+-1e-4) - I_1| = {worst:.3e} (tol 1e-3), |I_1(0.5,1) - 2ln2| = {dev_2ln2:.3e} (tol 1e-9)"
        ),
    );
}

#[test]
fn criterion_02_maximum_of_two_at_q_zero() {
    let i0 = family_mutual_information(&params(0.5, 1.0), q(0.0)).unwrap().i_q;
    report(
        "criterion_02_maximum_of_two_at_q_zero",
        i0 == 2.0,
        &format!("I_0(0.5, 1) = {i0} (exact equality with 2 required)"),
    );
}

#[test]
fn criterion_03_peak_location() {
    let (q_star, value) = find_iq_peak(&params(0.5, 0.999), 0.01, 2.0, Measure::Iq).unwrap();
    report(
        "criterion_03_peak_location",
        (0.25..=0.40).contains(&q_star),
        &format!("q_star = {q_star:.6} (required within [0.25, 0.40]), peak value = {value:.6}"),
    );
}

#[test]
fn criterion_04_monotone_decay() {
    let pr = params(0.5, 1.0);
    let mut last = f64::INFINITY;
    let mut monotone = true;
    for k in 1..=20 {
        let iq = family_mutual_information(&pr, q(k as f64 / 10.0)).unwrap().i_q;
        if iq >= last {
            monotone = false;
        }
        last = iq;
    }
    report(
        "criterion_04_monotone_decay",
        monotone,
        "I_q(0.5, 1) strictly decreasing on q in {0.1, 0.2, ..., 2.0}",
    );
}

#[test]
fn criterion_05_sensitivity_near_product_state() {
    let pr = params(0.999, 1.0);
    let at_one = family_mutual_information(&pr, q(1.0)).unwrap().i_q;
    let at_tenth = family_mutual_information(&pr, q(0.1)).unwrap().i_q;
    report(
        "criterion_05_sensitivity_near_product_state",
        at_one <= 0.02 && at_tenth >= 1.0,
        &format!("I_1 = {at_one:.5} (<= 0.02), I_0.1 = {at_tenth:.5} (>= 1.0)"),
    );
}

#[test]
fn criterion_06_closed_form_numeric_equivalence() {
    let mut worst: f64 = 0.0;
    for qi in 0..=20 {
        let qv = qi as f64 / 10.0;
        for &p in &P_GRID {
            for &gamma in &GAMMA_GRID {
                let pr = params(p, gamma);
                let numeric = family_mutual_information(&pr, q(qv)).unwrap();
                let d_iq = (closed_form_iq(&pr, q(qv)).unwrap() - numeric.i_q).abs();
                let d_ipq =
                    (closed_form_iq_prime(&pr, q(qv)).unwrap() - numeric.i_q_prime).abs();
                worst = worst.max(d_iq).max(d_ipq);
            }
        }
    }
    report(
        "criterion_06_closed_form_numeric_equivalence",
        worst <= 1e-10,
        &format!("max |closed - numeric| = {worst:.3e} over 21x11x6 (q, p, gamma) grid (tol 1e-10)"),
    );
}

#[test]
fn criterion_07_positivity_out_to_q_five() {
    let mut min_iq = f64::INFINITY;
    for qi in 0..=50 {
        let qv = qi as f64 / 10.0;
        for &p in &P_GRID {
            for &gamma in &GAMMA_GRID {
                let pr = params(p, gamma);
                min_iq = min_iq
                    .min(closed_form_iq(&pr, q(qv)).unwrap())
                    .min(family_mutual_information(&pr, q(qv)).unwrap().i_q);
            }
        }
    }
    report(
        "criterion_07_positivity_out_to_q_five",
        min_iq >= -1e-12,
        &format!("min I_q = {min_iq:.3e} over 51x11x6 grid, both paths (tol -1e-12)"),
    );
}

#[test]
fn criterion_08_araki_lieb_monte_carlo() {
    let mut failures = 0usize;
    let mut min_margin = f64::INFINITY;
    for i in 0..1000u64 {
        let rank = 1 + (i as usize) % 4;
        let rho = random_density_operator(4, rank, 0xA11CE + i).unwrap();
        let r = qtsallis::araki_lieb_holds(&rho).unwrap();
        if !r.holds {
            failures += 1;
        }
        min_margin = min_margin.min(r.lower_margin.min(r.upper_margin));
    }
    report(
        "criterion_08_araki_lieb_monte_carlo",
        failures == 0,
        &format!("1000 random states ranks 1-4, failures = {failures}, min margin = {min_margin:.3e} (slack tol -1e-9)"),
    );
}

#[test]
fn criterion_09_crossed_term_identity() {
    // identity must be recomputable from emitted rows alone
    let mut worst_row: f64 = 0.0;
    for (p, gamma) in [(0.3, 0.7), (0.5, 1.0), (0.999, 0.25)] {
        let spec = SweepSpec {
            q_min: 0.0,
            q_max: 2.0,
            q_steps: 201,
            p,
            gamma,
            measure: MeasureSelection::Both,
            out: None,
        };
        let mut buf = Vec::new();
        write_sweep_csv(&run_sweep(&spec).unwrap(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        for line in text.lines().skip(1) {
            let f: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
            let (qv, s_qa, s_qb, i_q, i_q_prime) = (f[0], f[3], f[4], f[6], f[7]);
            worst_row = worst_row.max((i_q_prime - (i_q + (1.0 - qv) * s_qa * s_qb)).abs());
        }
    }

    let mut worst_product: f64 = 0.0;
    for i in 0..100u64 {
        let a = random_density_operator(2, 2, 0xBEEF + i).unwrap();
        let b = random_density_operator(2, 2, 0xFACE + i).unwrap();
        let joint = DensityOperator::new(tensor_product(a.matrix(), b.matrix())).unwrap();
        for &qv in &[0.5, 1.5, 2.0] {
            worst_product =
                worst_product.max(mutual_information(&joint, q(qv)).unwrap().i_q_prime.abs());
        }
    }
    report(
        "criterion_09_crossed_term_identity",
        worst_row <= 1e-12 && worst_product <= 1e-10,
        &format!(
            "max row residual = {worst_row:.3e} (tol 1e-12, 3 sweeps x 201 rows), max |I'_q| on 100 product states = {worst_product:.3e} (tol 1e-10)"
        ),
    );
}

#[test]
fn criterion_10_flipped_sign_regression() {
    // a plus sign inside the square root of the joint spectrum is refuted at
    // (p, gamma) = (0.5, 0): it would put an eigenvalue far outside [0, 1]
    let p = 0.5f64;
    let gamma = 0.0f64;
    let plus_root = 0.5 * (1.0 + (1.0 + 4.0 * p * (1.0 - p) * (1.0 - gamma)).sqrt());
    let plus_invalid = !(0.0..=1.0).contains(&plus_root);

    let pr = params(p, gamma);
    let closed = closed_form_joint_spectrum(&pr);
    let numeric = hermitian_eigenvalues(build_joint_state(&pr).matrix()).unwrap();
    let expected = [0.5, 0.5, 0.0, 0.0];
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        worst = worst
            .max((closed.eigenvalues()[i] - expected[i]).abs())
            .max((numeric.eigenvalues()[i] - expected[i]).abs());
    }
    report(
        "criterion_10_flipped_sign_regression",
        plus_invalid && worst <= 1e-12,
        &format!(
            "plus-sign root = {plus_root:.6} (outside [0,1]), minus-sign spectrum deviates {worst:.3e} from {{0.5, 0.5, 0, 0}} (tol 1e-12)"
        ),
    );
}

#[test]
fn criterion_11_alternative_measure_shape() {
    let table = figure_table(3).unwrap();
    // columns: q, iqp_g1, iqp_g0.999, iqp_g0, ref_2ln2
    let near_pure: Vec<f64> = table.rows.iter().map(|r| r[2]).collect();
    let qs: Vec<f64> = table.rows.iter().map(|r| r[0]).collect();
    let (argmax, _) = near_pure
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();
    let interior = qs[argmax] > 0.0 && qs[argmax] < 1.0;

    let pure: Vec<f64> = table.rows.iter().map(|r| r[1]).collect();
    let from = qs.iter().position(|&x| x >= 0.1).unwrap();
    let decreasing = pure[from..].windows(2).all(|w| w[1] < w[0]);
    report(
        "criterion_11_alternative_measure_shape",
        interior && decreasing,
        &format!(
            "I'_q(gamma=0.999) interior max at q = {:.4} in (0, 1); I'_q(gamma=1) strictly decreasing on [0.1, 2]: {decreasing}",
            qs[argmax]
        ),
    );
}
