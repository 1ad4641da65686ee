use aqinv::alex_module::{
    alexander_polynomial, builtin_matrix, elementary_divisors, k_p_data, k_prime_p_data, seifert_from_m, SeifertData,
};
use aqinv::coloring::phi_polynomial;
use aqinv::diagram::{builtin_fixture, Partition};
use aqinv::field_poly::{DensePoly, PrimeModulus};
use aqinv::invariants::{
    aq_search, genus1_report_for, genus1_report_i64, i_count, Certificate, SearchConfig,
};
use aqinv::quandle::AlexanderQuandle;

fn small() -> SearchConfig {
    SearchConfig { pmax: 43, extra_primes: vec![] }
}

fn knots() -> Vec<SeifertData> {
    let mut v: Vec<SeifertData> =
        ["unknot", "trefoil", "figure_eight", "torus_2_7", "trivial_alexander"].iter().map(|n| builtin_matrix(n).unwrap()).collect();
    for p in [3, 5, 7, 11] {
        v.push(k_p_data(p).unwrap());
        v.push(k_prime_p_data(p).unwrap());
    }
    v
}

#[test]
fn bound_never_exceeds_breadth_for_knots() {
    for sd in knots() {
        let r = aq_search(&sd, &small());
        assert!(r.aq_lower_bound <= r.a_upper.unwrap(), "{}", sd.name);
        for w in &r.searched {
            // I(1, p, h, K) <= A(K) / breadth(h)
            assert!(w.a * w.breadth() <= r.a_upper.unwrap(), "{} {w}", sd.name);
        }
    }
}

#[test]
fn link_counts_bounded_by_last_delta() {
    let k3 = k_p_data(3).unwrap();
    let links = [
        builtin_matrix("hopf").unwrap(),
        builtin_matrix("unlink2").unwrap(),
        SeifertData::split_link(&[k3.clone(), k3.clone()]),
        SeifertData::split_link(&[k3.clone(), k3.clone(), k3]),
    ];
    for sd in links {
        for w in aq_search(&sd, &small()).searched {
            let ed = elementary_divisors(&sd, PrimeModulus::new(w.p).unwrap());
            let dk = ed.delta(sd.k);
            let cap = dk.degree().unwrap_or(0) / w.breadth() + sd.k - 1;
            assert!(dk.is_zero() || w.a <= cap, "{} {w}", sd.name);
        }
    }
}

#[test]
fn exactness_is_set_only_where_certified() {
    let expect = [
        ("unknot", 0, Certificate::MatchesAUpper),
        ("trefoil", 1, Certificate::Genus1ClosedForm),
        ("figure_eight", 1, Certificate::Genus1ClosedForm),
        ("torus_2_7", 1, Certificate::None),
        ("trivial_alexander", 0, Certificate::MatchesAUpper),
        ("hopf", 1, Certificate::MatrixSize),
        ("unlink2", 1, Certificate::MatrixSize),
        ("inoue_remark", 4, Certificate::MatrixSize),
        ("controes_remark", 2, Certificate::MatrixSize),
    ];
    for (name, bound, cert) in expect {
        let r = aq_search(&builtin_matrix(name).unwrap(), &small());
        assert_eq!((r.aq_lower_bound, r.certificate, r.exact), (bound, cert, cert != Certificate::None), "{name}");
    }
}

#[test]
fn bound_one_exact_means_breadth_one_witness() {
    for sd in knots() {
        let r = aq_search(&sd, &small());
        if r.aq_lower_bound == 1 && r.exact {
            assert_eq!(r.delta_hat, Some(1), "{}", sd.name);
        }
    }
}

#[test]
fn kp_delta_is_a_power_of_t_plus_one() {
    for p in [3, 5, 7, 11] {
        let (d, _) = alexander_polynomial(&k_p_data(p).unwrap()).unwrap();
        let m = PrimeModulus::new(p).unwrap();
        let red = d.reduce(m).normalize().canonical();
        assert_eq!(red, DensePoly::from_i64s(m, &[1, 2, 1]), "p={p}");
    }
}

#[test]
fn genus_one_trichotomy_agrees_with_search() {
    let mut data = vec![builtin_matrix("trefoil").unwrap(), builtin_matrix("figure_eight").unwrap(), builtin_matrix("trivial_alexander").unwrap()];
    for p in [3, 5, 7] {
        data.push(k_p_data(p).unwrap());
        data.push(k_prime_p_data(p).unwrap());
    }
    data.push(seifert_from_m("w0", &[vec![2, 1], vec![0, 0]], 1).unwrap());
    for sd in data {
        let g = genus1_report_for(&sd).unwrap();
        let r = aq_search(&sd, &SearchConfig::default());
        assert_eq!(r.aq_lower_bound, g.aq_exact as usize, "{}", sd.name);
        assert!(r.exact);
    }
}

#[test]
fn sharp_congruences_match_symmetric_part() {
    // N(1) = 0 over D_p iff p divides every entry of M + M^T
    for a in -6i64..=6 {
        for d in -6i64..=6 {
            for b in -6i64..=6 {
                let m = [vec![a, b], vec![b - 1, d]];
                let r = genus1_report_i64(&m).unwrap();
                for p in [3u64, 5, 7, 11, 13] {
                    let pi = p as i64;
                    let sym = (2 * a) % pi == 0 && (2 * b - 1) % pi == 0 && (2 * d) % pi == 0;
                    assert_eq!(r.sharp_primes.contains(&p), sym, "{m:?} p={p}");
                }
            }
        }
    }
}

#[test]
fn i_count_matches_kernel_route() {
    let sd = builtin_matrix("torus_2_7").unwrap();
    for (p, h) in [(3, "1+t"), (7, "1+t"), (13, "t^3+t^2+2*t+8")] {
        let x = AlexanderQuandle::from_parts(p, h);
        let Ok(x) = x else { continue };
        for z in 1..4 {
            let n = i_count(&sd, p, x.h(), z).unwrap();
            assert_eq!(n, aqinv::alex_module::kernel_dimension(&sd, &x, z), "{x} z={z}");
        }
    }
}

#[test]
fn coloring_counts_within_genus_bound() {
    // every cycle satisfies a <= 2g + 2k - |P| - 1
    let d3 = AlexanderQuandle::dihedral(3).unwrap();
    for (name, g) in [("trefoil_plus", 1usize), ("figure_eight", 1), ("k3_pretzel", 1), ("hopf_plus", 0)] {
        let d = builtin_fixture(name).unwrap();
        for part in [Partition::minimal(d.components), Partition::maximal(d.components)] {
            let phi = phi_polynomial(&d, &part, &d3).unwrap();
            let top = *phi.spectrum().last().unwrap();
            assert!(top + part.len() < 2 * g + 2 * d.components, "{name} {part}");
        }
    }
}
