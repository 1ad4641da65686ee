use aqinv::alex_module::{builtin_matrix, coloring_module_decomposition, kernel_dimension};
use aqinv::coloring::{brute_force_count, coloring_dimension};
use aqinv::diagram::{builtin_fixture, Cycle, Partition};
use aqinv::quandle::AlexanderQuandle;

fn quandles() -> Vec<AlexanderQuandle> {
    [(3, "1+t"), (5, "1+t"), (5, "t+2"), (7, "t+3"), (11, "1+t^2"), (13, "1+t")]
        .iter()
        .map(|(p, h)| AlexanderQuandle::from_parts(*p, h).unwrap())
        .collect()
}

#[test]
fn diagram_and_matrix_agree() {
    let pairs = [
        ("trefoil_plus", "trefoil"),
        ("trefoil_minus_mirror", "trefoil"),
        ("figure_eight", "figure_eight"),
        ("k3_pretzel", "kp_matrix_p3"),
        ("unknot", "unknot"),
        ("hopf_plus", "hopf"),
        ("split(unknot,unknot)", "unlink2"),
    ];
    for (dname, mname) in pairs {
        let d = builtin_fixture(dname).unwrap();
        let sd = builtin_matrix(mname).unwrap();
        let p = Partition::minimal(d.components);
        for x in quandles() {
            for z in 0..4 {
                let a = coloring_dimension(&d, &p, &Cycle(vec![z]), &x).unwrap().a;
                let k = kernel_dimension(&sd, &x, z);
                let m = coloring_module_decomposition(&sd, &x, z).a;
                assert_eq!((a, a), (k, m), "{dname} vs {mname}, {x}, z={z}");
            }
        }
    }
}

#[test]
fn stevedore_has_the_same_polynomial_as_k3_differently_colored() {
    let d = builtin_fixture("stevedore").unwrap();
    let x = AlexanderQuandle::from_parts(3, "1+t").unwrap();
    let r = coloring_dimension(&d, &Partition::minimal(1), &Cycle(vec![1]), &x).unwrap();
    assert_eq!(r.a, 1);
    let k3 = builtin_fixture("k3_pretzel").unwrap();
    let r = coloring_dimension(&k3, &Partition::minimal(1), &Cycle(vec![1]), &x).unwrap();
    assert_eq!(r.a, 2);
}

#[test]
fn oracle_on_small_fixtures() {
    for name in ["trefoil_plus", "figure_eight", "hopf_plus", "trefoil_kink", "figure_eight_mirror"] {
        let d = builtin_fixture(name).unwrap();
        for x in quandles().into_iter().filter(|x| x.field().order().unwrap() <= 7) {
            let p = Partition::maximal(d.components);
            for z in Cycle::all(p.len(), x.quandle_type()) {
                let lin = coloring_dimension(&d, &p, &z, &x).unwrap();
                let brute = brute_force_count(&d, &p, &z, &x).unwrap();
                assert_eq!(lin.count, brute.into(), "{name} {x} {z}");
            }
        }
    }
}
