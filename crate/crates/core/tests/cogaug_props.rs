use infocog_core::cogaug::*;
use proptest::prelude::*;

fn psi_step(id: usize, agent: Agent, a: f64, b: f64, lost: f64) -> Step {
    Step::new(
        format!("s{id}"),
        agent,
        StockSnapshot::psi(a),
        StockSnapshot::psi(b),
    )
    .with_psi_lost(lost)
}

fn ledger() -> impl Strategy<Value = Vec<(bool, f64, f64, f64)>> {
    prop::collection::vec(
        (
            any::<bool>(),
            0.01f64..10.0,
            0.0f64..10.0,
            prop_oneof![Just(0.0), 0.0f64..2.0],
        ),
        0..12,
    )
}

fn build(raw: &[(bool, f64, f64, f64)], agent: Option<Agent>) -> Ledger {
    let steps = raw
        .iter()
        .enumerate()
        .map(|(i, &(h, a, b, lost))| {
            let who = agent.unwrap_or(if h { Agent::Human } else { Agent::Cog });
            psi_step(i, who, a, b, lost)
        })
        .collect();
    Ledger::new(steps).unwrap()
}

proptest! {
    #[test]
    fn work_nonnegative(a in 0.0f64..10.0, b in 0.0f64..10.0, lost in 0.0f64..3.0) {
        let w = step_work(&psi_step(0, Agent::Human, a, b, lost)).unwrap();
        prop_assert!(w >= 0.0);
        prop_assert_eq!(w == 0.0, a == b && lost == 0.0);
    }

    #[test]
    fn totals_are_additive(raw in ledger()) {
        let l = build(&raw, None);
        let r = evaluate_ledger(&l).unwrap();
        let w: f64 = r.steps.iter().map(|s| s.work).sum();
        let g: f64 = r.steps.iter().map(|s| s.gain).sum();
        prop_assert!((r.ensemble.work - w).abs() <= 1e-12 * w.max(1.0));
        prop_assert!((r.ensemble.gain - g).abs() <= 1e-12 * g.abs().max(1.0));
        prop_assert_eq!(r.ensemble.work, r.totals.work_human + r.totals.work_cog);
        prop_assert_eq!(r.ensemble.gain, r.totals.gain_human + r.totals.gain_cog);
    }

    #[test]
    fn reclassifying_agents(raw in ledger()) {
        let human = evaluate_ledger(&build(&raw, Some(Agent::Human))).unwrap();
        let cog = evaluate_ledger(&build(&raw, Some(Agent::Cog))).unwrap();
        prop_assert_eq!(human.a_plus_work, Ratio::Finite(0.0));
        prop_assert_eq!(human.a_plus_gain, Ratio::Finite(0.0));
        if cog.ensemble.work > 0.0 {
            prop_assert_eq!(cog.a_plus_work, Ratio::Unbounded);
        }
        if cog.ensemble.gain != 0.0 {
            prop_assert_eq!(cog.a_plus_gain, Ratio::Unbounded);
        }
        prop_assert_eq!(human.ensemble, cog.ensemble);
    }

    #[test]
    fn lossless_gain_efficiency_is_inverse_psi(a in 1e-3f64..100.0, delta in 1e-6f64..100.0) {
        let s = psi_step(0, Agent::Cog, a, a + delta, 0.0);
        let xi = efficiency(step_gain(&s).unwrap(), step_work(&s).unwrap()).unwrap();
        prop_assert!((xi - 1.0 / a).abs() <= 1e-12 * (1.0 / a).max(1.0));
    }

    #[test]
    fn tags_do_not_change_numbers(raw in ledger(), tag in 0usize..6) {
        let plain = build(&raw, None);
        let dikw = [Dikw::Data, Dikw::Information, Dikw::Knowledge, Dikw::Wisdom][tag % 4];
        let bloom = [Bloom::Remember, Bloom::Understand, Bloom::Apply, Bloom::Analyze, Bloom::Evaluate, Bloom::Create][tag];
        let tagged_steps = plain
            .steps()
            .iter()
            .cloned()
            .map(|mut s| {
                s.stock_in.dikw = Some(dikw);
                s.stock_out.bloom = Some(bloom);
                s
            })
            .collect();
        let tagged = Ledger::new(tagged_steps).unwrap();
        prop_assert_eq!(evaluate_ledger(&plain).unwrap(), evaluate_ledger(&tagged).unwrap());
    }
}
