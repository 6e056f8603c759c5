use primcone::detcone::{default_window, graded_t1, hankel_ideal, segre_veronese_ideal};
use primcone::rootdata::{CartanType, RootSystem};
use primcone::t1class::{simple_t1, t1, CaseTag};

fn rs(s: &str) -> RootSystem {
    RootSystem::build(&s.parse::<CartanType>().unwrap())
}

#[test]
fn rational_normal_cones_agree() {
    let a1 = rs("A1");
    for m in 3..=8i64 {
        let rep = simple_t1(&a1, &[m]).unwrap();
        let cone = graded_t1(&hankel_ideal(m as usize).unwrap(), default_window(m as usize)).unwrap();
        assert_eq!(rep.total_dim as u64, cone.total(), "m={m}");
        assert_eq!(rep.total_dim, 2 * m as u128 - 4);
    }
}

#[test]
fn segre_cones_agree() {
    for (m, n) in [(2usize, 1usize), (3, 1), (2, 2), (3, 2)] {
        let r = rs(&format!("A1xA{n}"));
        let mut lambda = vec![m as i64];
        lambda.extend((0..n).map(|i| i64::from(i == 0)));
        let rep = t1(&r, &lambda).unwrap();
        assert_eq!(rep.case_tag, CaseTag::R3, "({m},{n})");
        let cone = graded_t1(&segre_veronese_ideal(m, n).unwrap(), default_window(m)).unwrap();
        assert_eq!(rep.total_dim as u64, cone.total(), "({m},{n})");
        assert_eq!(cone.total(), ((m - 1) * (n + 1)) as u64);
    }
}
