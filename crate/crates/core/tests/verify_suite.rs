use submaj::verify::{
    check, generate, replay, run_suite, suite_passed, CheckConfig, Dims, Instance, SuiteConfig, TheoremId,
};

fn small(trials: usize, seed: u64) -> CheckConfig {
    CheckConfig {
        trials,
        seed,
        ..Default::default()
    }
}

#[test]
fn default_suite_covers_registry() {
    let cfg = SuiteConfig::default();
    assert_eq!(cfg.theorems.len(), 20);
    let reports = run_suite(&SuiteConfig {
        check: small(20, 3),
        ..cfg
    })
    .unwrap();
    assert_eq!(reports.len(), 20);
    for r in &reports {
        assert_eq!(r.trials, 20);
        assert_eq!(r.failures, 0, "{} worst margin {}", r.theorem, r.worst_margin);
    }
    assert!(suite_passed(&reports));
}

#[test]
fn fixed_seed_is_deterministic() {
    let cfg = small(100, 7);
    let a = check(TheoremId::Thm33Sq, &cfg).unwrap();
    let b = check(TheoremId::Thm33Sq, &cfg).unwrap();
    assert_eq!(a.worst_margin.to_bits(), b.worst_margin.to_bits());
    assert_eq!(a.failures, b.failures);
    let x = generate(TheoremId::Thm33Sq, 7, 0, Dims::default());
    let y = generate(TheoremId::Thm33Sq, 8, 0, Dims::default());
    assert_ne!(x, y);
}

#[test]
fn instances_replay_through_text() {
    for &id in TheoremId::ALL {
        let inst = generate(id, 99, 0, Dims::default());
        let back = Instance::parse(&inst.to_text()).unwrap();
        assert_eq!(back, inst);
        let a = replay(&inst, 1e-8).unwrap();
        let b = replay(&back, 1e-8).unwrap();
        assert_eq!(a.margin.to_bits(), b.margin.to_bits());
    }
}

#[test]
fn large_dimensions_sample_lidskii_subsets() {
    let cfg = CheckConfig {
        trials: 10,
        dims: Dims { min_n: 10, max_n: 12 },
        ..Default::default()
    };
    assert!(check(TheoremId::Thm23Lidskii, &cfg).unwrap().passed());
}

#[test]
fn passing_checks_write_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = CheckConfig {
        trials: 5,
        repro_dir: Some(dir.path().join("out")),
        ..Default::default()
    };
    let r = check(TheoremId::Cor22, &cfg).unwrap();
    assert!(r.repro_files.is_empty());
    assert!(!dir.path().join("out").exists());
}

#[test]
fn failures_are_dumped_and_replay() {
    // with a vanishing slack, rounding in the full-trace prefix of Λ(A+B) ≺w Λ(A)+Λ(B) shows up
    let dir = tempfile::tempdir().unwrap();
    let cfg = CheckConfig {
        trials: 50,
        tol_factor: 1e-300,
        repro_dir: Some(dir.path().to_path_buf()),
        ..Default::default()
    };
    let r = check(TheoremId::Thm21, &cfg).unwrap();
    assert!(r.failures > 0);
    assert_eq!(r.repro_files.len(), r.failures);
    for path in &r.repro_files {
        let inst = Instance::read_from(path).unwrap();
        assert_eq!(inst.theorem, TheoremId::Thm21);
        assert!(replay(&inst, 1e-300).unwrap().failed());
        assert!(!replay(&inst, 1e-8).unwrap().failed());
    }
}
